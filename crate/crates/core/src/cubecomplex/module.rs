use std::collections::BTreeMap;

use super::cube::{cohomology, complex_from_cube, Cohomology, Cube};
use crate::ratmat::Scalar;
use crate::reflect::{sink_form, subsets, SinkContext};
use crate::symg::{partitions, Perm, YoungDiagram};
use crate::wreathmod::{Tuple, WreathModule};
use crate::Result;

/// `Z_j(J) = V(j, Δ(j)∖J)` with `ψ_{J,p} = π_{j,p}`, one cube per tuple on
/// which some space is nonzero. Bit `k` of `J` stands for the `k`-th element
/// of `Δ(j)`.
pub fn module_cube(v: &WreathModule, i: usize) -> Result<Vec<(Tuple, Cube)>> {
    let sink = sink_form(v, i)?;
    let ctx = SinkContext::new(&sink, i)?;
    let mut out = Vec::new();
    for j in ctx.candidate_tuples() {
        let delta = ctx.delta(&j);
        let size = delta.len();
        let d_of = |mask: u32| -> Vec<usize> {
            delta.iter().enumerate().filter(|(k, _)| mask & (1 << k) == 0).map(|(_, &p)| p).collect()
        };
        let dims: Vec<usize> = (0..(1u32 << size)).map(|m| ctx.space(&j, &d_of(m)).dim).collect();
        if dims.iter().all(|&d| d == 0) {
            continue;
        }
        let mut cube = Cube::new(size, dims)?;
        for m in 0..(1u32 << size) {
            for k in (0..size).filter(|&k| m & (1 << k) == 0) {
                cube.set_map(m, k, ctx.pi(&j, &d_of(m), delta[k]))?;
            }
        }
        out.push((j, cube));
    }
    Ok(out)
}

/// `H^r(𝒞•(V))` per tuple.
pub fn module_cohomology(v: &WreathModule, i: usize) -> Result<BTreeMap<Tuple, Cohomology>> {
    module_cube(v, i)?
        .into_iter()
        .map(|(j, c)| Ok((j, cohomology(&complex_from_cube(&c)?))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub per_tuple: BTreeMap<Tuple, i64>,
    /// Values on the conjugacy class of each cycle type.
    pub character: Vec<(YoungDiagram, Scalar)>,
}

impl EulerReport {
    pub fn total(&self) -> i64 {
        self.per_tuple.values().sum()
    }
}

fn sign_on(sigma: &Perm, set: &[usize]) -> i64 {
    let mut seen = vec![false; set.len()];
    let mut cycles = 0;
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = set.iter().position(|&x| x == sigma.apply(set[k])).expect("stable set");
        }
    }
    if (set.len() - cycles).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Σ_D (−1)^{|Δ(j)∖D|} [V(j,D) ⊗ det(Δ(j)∖D)]`, as dimensions per tuple and
/// as an S_n character.
pub fn euler_characteristic(v: &WreathModule, i: usize) -> Result<EulerReport> {
    let sink = sink_form(v, i)?;
    let ctx = SinkContext::new(&sink, i)?;
    let n = v.n();
    let classes: Vec<(YoungDiagram, Perm)> = partitions(n)
        .into_iter()
        .map(|mu| {
            let p = Perm::of_cycle_type(mu.parts());
            (mu, p)
        })
        .collect();
    let mut per_tuple = BTreeMap::new();
    let mut character: Vec<Scalar> = vec![Scalar::zero(); classes.len()];
    for j in ctx.candidate_tuples() {
        let delta = ctx.delta(&j);
        let mut chi = 0i64;
        for d in subsets(&delta) {
            let rest: Vec<usize> = delta.iter().copied().filter(|p| !d.contains(p)).collect();
            let sign = if rest.len().is_multiple_of(2) { 1 } else { -1 };
            chi += sign * ctx.space(&j, &d).dim as i64;
            for (c, (_, sigma)) in classes.iter().enumerate() {
                if sigma.act_on(&j) != j || d.iter().any(|&p| !d.contains(&sigma.apply(p))) {
                    continue;
                }
                let tr = ctx.sigma(&j, &d, sigma).trace();
                character[c] += tr * Scalar::int(sign * sign_on(sigma, &rest));
            }
        }
        if chi != 0 {
            per_tuple.insert(j, chi);
        }
    }
    let character = classes.into_iter().map(|c| c.0).zip(character).collect();
    Ok(EulerReport { per_tuple, character })
}

/// The character of `V` on each conjugacy class of `S_n`.
pub fn module_character(v: &WreathModule) -> Vec<(YoungDiagram, Scalar)> {
    partitions(v.n())
        .into_iter()
        .map(|mu| {
            let value = v.character(&Perm::of_cycle_type(mu.parts()));
            (mu, value)
        })
        .collect()
}
