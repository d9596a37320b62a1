//! Parameters of wreath-product symplectic reflection algebras and the
//! deformation conditions for induced modules.

use std::collections::BTreeMap;

use crate::quiver::{cycle, pair, DimVector, Quiver, Weight, WordReport};
use crate::ratmat::Scalar;
use crate::symg::YoungDiagram;
use crate::{Error, Result};

/// Character table of a finite group `Γ`, rows indexed by quiver vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaData {
    pub order: usize,
    pub cyclotomic_order: u32,
    /// Row labels, matching quiver vertex names.
    pub vertices: Vec<String>,
    /// Element names; the first is the identity.
    pub elements: Vec<String>,
    /// `table[i][e] = χ_i(element e)`.
    pub table: Vec<Vec<Scalar>>,
}

impl GammaData {
    /// `ℤ/m` with elements `g0 = 1, g1, …` and `χ_j(g^s) = ζ^{js}`.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("cyclic group of order {m}; need m ≥ 2")));
        }
        let elements = (0..m).map(|s| format!("g{s}")).collect();
        let table = (0..m)
            .map(|j| (0..m).map(|s| Scalar::zeta(m as u32, (j * s) as i64)).collect())
            .collect();
        let vertices = (0..m).map(|j| j.to_string()).collect();
        Ok(GammaData { order: m, cyclotomic_order: m as u32, vertices, elements, table })
    }

    /// A user table. The identity column must hold positive integer degrees
    /// whose squares sum to the group order.
    pub fn from_table(
        order: usize,
        m: u32,
        vertices: Vec<String>,
        elements: Vec<String>,
        table: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        if vertices.len() != table.len() {
            return Err(Error::CharacterTable(format!("{} labels for {} rows", vertices.len(), table.len())));
        }
        if elements.is_empty() || table.iter().any(|row| row.len() != elements.len()) {
            return Err(Error::CharacterTable("every row needs one value per element".into()));
        }
        let mut sum_sq = Scalar::zero();
        for (i, row) in table.iter().enumerate() {
            let d = &row[0];
            let ok = d.as_rational().is_some_and(|q| q.is_integer() && q > &num_rational::BigRational::from_integer(0.into()));
            if !ok {
                return Err(Error::CharacterTable(format!("degree of row {i} is {d}")));
            }
            sum_sq += d * d;
        }
        if sum_sq != Scalar::int(order as i64) {
            return Err(Error::CharacterTable(format!("squared degrees sum to {sum_sq}, not {order}")));
        }
        Ok(GammaData { order, cyclotomic_order: m, vertices, elements, table })
    }

    pub fn degrees(&self) -> Vec<Scalar> {
        self.table.iter().map(|row| row[0].clone()).collect()
    }

    fn element(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown group element {name:?}")))
    }
}

/// `(t, k, c)` with `c = Σ_{γ≠1} c_γ γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SraParams {
    pub t: Scalar,
    pub k: Scalar,
    pub c: BTreeMap<String, Scalar>,
}

/// `λ_i = t δ_i + Σ c_γ χ_i(γ)` and `ν = k|Γ|/2`.
pub fn translate_params(g: &GammaData, p: &SraParams) -> Result<(Weight, Scalar)> {
    let mut coeff = vec![Scalar::zero(); g.elements.len()];
    for (name, value) in &p.c {
        let e = g.element(name)?;
        if e == 0 {
            return Err(Error::InvalidArgument("c has no identity component".into()));
        }
        coeff[e] = value.clone();
    }
    // characters separate classes, so equal columns mean conjugate elements
    for a in 1..coeff.len() {
        for b in a + 1..coeff.len() {
            let same = g.table.iter().all(|row| row[a] == row[b]);
            if same && coeff[a] != coeff[b] {
                return Err(Error::InvalidArgument(format!(
                    "c is not a class function: {} and {} are conjugate",
                    g.elements[a], g.elements[b]
                )));
            }
        }
    }
    let lambda = g
        .table
        .iter()
        .map(|row| &p.t * &row[0] + row.iter().zip(&coeff).skip(1).map(|(x, c)| x * c).sum::<Scalar>())
        .collect();
    let nu = &p.k * &Scalar::frac(g.order as i64, 2);
    Ok((lambda, nu))
}

/// Recover `c_s` (`s = 1, …, m−1`) for `ℤ/m` from `t` and `λ` by the inverse
/// Fourier transform `c_s = (1/m) Σ_j (λ_j − t) ζ^{−js}`.
pub fn recover_c(m: usize, t: &Scalar, lambda: &[Scalar]) -> Result<Vec<Scalar>> {
    if lambda.len() != m || m < 2 {
        return Err(Error::SizeMismatch(format!("{} weights for ℤ/{m}", lambda.len())));
    }
    let inv_m = Scalar::frac(1, m as i64);
    let coeff = |s: usize| -> Scalar {
        lambda
            .iter()
            .enumerate()
            .map(|(j, l)| (l - t) * Scalar::zeta(m as u32, -((j * s) as i64)))
            .sum::<Scalar>()
            * &inv_m
    };
    let c0 = coeff(0);
    if !c0.is_zero() {
        return Err(Error::InvalidArgument(format!("Σ λ_j − m t = {} ≠ 0; no such c", c0 * Scalar::int(m as i64))));
    }
    Ok((1..m).map(coeff).collect())
}

/// The McKay quiver of `ℤ/m`: `Â₁` with edges `a0, a1: 0 → 1` for `m = 2`,
/// the oriented `m`-cycle otherwise.
pub fn mckay_quiver_cyclic(m: usize) -> Result<Quiver> {
    match m {
        0 | 1 => Err(Error::InvalidArgument(format!("no McKay quiver for ℤ/{m}; need m ≥ 2"))),
        2 => Quiver::new(&["0", "1"], &[("a0", "0", "1"), ("a1", "0", "1")]),
        _ => Ok(cycle(m)),
    }
}

/// Conditions for `X ⊗ 𝒩↑` with `E` acting by zero to be a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendReport {
    /// `(a, b)` per block when its diagram is a rectangle.
    pub rectangles: Vec<Option<(usize, usize)>>,
    pub distinct_nonadjacent: bool,
    /// `λ_{i_ℓ} = (a_ℓ − b_ℓ) ν` per block.
    pub weights: Vec<bool>,
}

impl ExtendReport {
    pub fn holds(&self) -> bool {
        self.rectangles.iter().all(Option::is_some) && self.distinct_nonadjacent && self.weights.iter().all(|&w| w)
    }
}

pub fn extend_conditions(q: &Quiver, lambda: &[Scalar], nu: &Scalar, blocks: &[(YoungDiagram, usize)]) -> ExtendReport {
    let rectangles: Vec<_> = blocks.iter().map(|(x, _)| x.contents().rectangle).collect();
    let verts: Vec<usize> = blocks.iter().map(|b| b.1).collect();
    let distinct_nonadjacent = verts.iter().enumerate().all(|(k, &v)| {
        !q.has_loop(v) && verts[k + 1..].iter().all(|&w| w != v && !q.adjacent(v, w))
    });
    let weights = blocks
        .iter()
        .zip(&rectangles)
        .map(|((_, v), r)| match r {
            Some((a, b)) => lambda[*v] == nu * &Scalar::int(*a as i64 - *b as i64),
            None => false,
        })
        .collect();
    ExtendReport { rectangles, distinct_nonadjacent, weights }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub diagram: YoungDiagram,
    pub alpha: DimVector,
    pub rectangle: Option<(usize, usize)>,
    /// `λ₀ · α`, zero for a `Π_{λ₀}`-module.
    pub base_pairing: Scalar,
    /// `i` with `w(α) = ε_i`, if `w(α)` is a coordinate vector.
    pub transported: Option<usize>,
    pub pairing: Scalar,
    pub required: Option<Scalar>,
}

/// Conditions (i)–(iii) for deforming `X ⊗ Y↑` from `(λ₀, 0)` towards
/// `(λ₀ + λ, ν)`, plus genericity along the word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformReport {
    pub word: WordReport,
    pub blocks: Vec<BlockReport>,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_ii_detail: Vec<String>,
    pub condition_iii: bool,
    /// `(g, p, sign)` with `(r_{j_g}⋯r_{j_1}(λ₀+λ))_{j_g} + sign·pν = 0`; `g` 1-based.
    pub generic_failures: Vec<(usize, usize, i8)>,
}

impl DeformReport {
    pub fn conditions_hold(&self) -> bool {
        self.word.pass() && self.condition_i && self.condition_ii && self.condition_iii
    }

    pub fn generic(&self) -> bool {
        self.generic_failures.is_empty()
    }
}

pub fn deformability_report(
    q: &Quiver,
    lambda0: &[Scalar],
    lambda: &[Scalar],
    nu: &Scalar,
    word: &[usize],
    blocks: &[(YoungDiagram, DimVector)],
) -> Result<DeformReport> {
    let nv = q.n_vertices();
    if lambda0.len() != nv || lambda.len() != nv || blocks.iter().any(|b| b.1.len() != nv) {
        return Err(Error::SizeMismatch(format!("vectors must have {nv} entries")));
    }
    let n: usize = blocks.iter().map(|b| b.0.size()).sum();
    let word_report = q.validate_word(lambda0, word)?;
    let mut out = Vec::new();
    for (x, alpha) in blocks {
        let image = q.reflect_dim_word(word, alpha)?;
        let transported = (image.iter().filter(|&&c| c != 0).count() == 1)
            .then(|| image.iter().position(|&c| c == 1))
            .flatten();
        let rectangle = x.contents().rectangle;
        out.push(BlockReport {
            diagram: x.clone(),
            alpha: alpha.clone(),
            rectangle,
            base_pairing: pair(lambda0, alpha),
            transported,
            pairing: pair(lambda, alpha),
            required: rectangle.map(|(a, b)| nu * &Scalar::int(a as i64 - b as i64)),
        });
    }
    let condition_i = out.iter().all(|b| b.rectangle.is_some());
    let mut detail = Vec::new();
    for (k, b) in out.iter().enumerate() {
        match b.transported {
            None => detail.push(format!("block {}: w(α) is not a coordinate vector", k + 1)),
            Some(v) if q.has_loop(v) => detail.push(format!("block {}: vertex {} has a loop", k + 1, q.vertex_name(v))),
            Some(_) => {}
        }
        if !b.base_pairing.is_zero() {
            detail.push(format!("block {}: λ₀·α = {} ≠ 0", k + 1, b.base_pairing));
        }
    }
    for a in 0..out.len() {
        for b in a + 1..out.len() {
            if let (Some(v), Some(w)) = (out[a].transported, out[b].transported) {
                if v == w {
                    detail.push(format!("blocks {} and {} land on the same vertex", a + 1, b + 1));
                } else if q.adjacent(v, w) {
                    detail.push(format!("blocks {} and {} land on adjacent vertices", a + 1, b + 1));
                }
            }
        }
    }
    let condition_iii = out.iter().all(|b| b.required.as_ref() == Some(&b.pairing));
    let total: Weight = lambda0.iter().zip(lambda).map(|(a, b)| a + b).collect();
    let mut generic_failures = Vec::new();
    let mut cur = total;
    for (g, &j) in word.iter().enumerate() {
        cur = q.dual_reflection(j, &cur)?;
        for p in 0..n {
            for (sign, s) in [(1i8, 1i64), (-1, -1)] {
                if p == 0 && sign < 0 {
                    continue;
                }
                if (&cur[j] + &(nu * &Scalar::int(s * p as i64))).is_zero() {
                    generic_failures.push((g + 1, p, sign));
                }
            }
        }
    }
    Ok(DeformReport {
        word: word_report,
        blocks: out,
        condition_i,
        condition_ii: detail.is_empty(),
        condition_ii_detail: detail,
        condition_iii,
        generic_failures,
    })
}
