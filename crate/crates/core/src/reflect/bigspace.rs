//! The spaces `V(j,D)` and the block maps between them, for a module in which
//! the reflecting vertex is a sink.

use std::collections::BTreeSet;

use crate::quiver::Arrow;
use crate::ratmat::{Mat, Scalar};
use crate::symg::Perm;
use crate::wreathmod::{Tuple, WreathModule};
use crate::{Error, Result};

/// `V(j,D) = ⊕_{ξ∈𝒳(D)} V_{t(j,ξ)}`.
///
/// `ξ` is stored as indices into `R`, aligned with `d` (ascending positions);
/// the first position is the most significant digit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigSpace {
    pub j: Tuple,
    pub d: Vec<usize>,
    pub offsets: Vec<usize>,
    pub dims: Vec<usize>,
    pub dim: usize,
    radix: usize,
}

impl BigSpace {
    pub fn count(&self) -> usize {
        self.offsets.len()
    }

    pub fn xi(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.d.len()];
        for k in (0..self.d.len()).rev() {
            out[k] = idx % self.radix;
            idx /= self.radix;
        }
        out
    }

    pub fn index(&self, xi: &[usize]) -> usize {
        xi.iter().fold(0, |acc, &x| acc * self.radix + x)
    }

    /// `ξ` as a map position → index into `R`.
    pub fn lookup(&self, xi: &[usize], p: usize) -> Option<usize> {
        self.d.iter().position(|&q| q == p).map(|k| xi[k])
    }
}

/// A module in sink form at `i`, with `R = {a ∈ Q : h(a) = i}`.
pub struct SinkContext<'a> {
    pub module: &'a WreathModule,
    pub i: usize,
    pub r: Vec<usize>,
}

impl<'a> SinkContext<'a> {
    pub fn new(module: &'a WreathModule, i: usize) -> Result<Self> {
        let q = module.quiver();
        q.check_loop_free(i)?;
        if q.edges().iter().any(|e| e.tail == i) {
            return Err(Error::InvalidArgument(format!("vertex {} is not a sink", q.vertex_name(i))));
        }
        let r = q.edges().iter().enumerate().filter(|(_, e)| e.head == i).map(|(k, _)| k).collect();
        Ok(SinkContext { module, i, r })
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    pub fn delta(&self, j: &[usize]) -> Vec<usize> {
        (0..j.len()).filter(|&p| j[p] == self.i).collect()
    }

    /// `t(j,ξ)`.
    pub fn summand_tuple(&self, j: &[usize], d: &[usize], xi: &[usize]) -> Tuple {
        let q = self.module.quiver();
        let mut t = j.to_vec();
        for (k, &p) in d.iter().enumerate() {
            t[p] = q.edges()[self.r[xi[k]]].tail;
        }
        t
    }

    pub fn space(&self, j: &[usize], d: &[usize]) -> BigSpace {
        let mut d = d.to_vec();
        d.sort_unstable();
        let radix = self.r.len();
        let count = radix.pow(d.len() as u32);
        let mut bs = BigSpace { j: j.to_vec(), d, offsets: Vec::with_capacity(count), dims: Vec::with_capacity(count), dim: 0, radix };
        for idx in 0..count {
            let xi = bs.xi(idx);
            let dim = self.module.dim(&self.summand_tuple(j, &bs.d, &xi));
            bs.offsets.push(bs.dim);
            bs.dims.push(dim);
            bs.dim += dim;
        }
        bs
    }

    fn without(d: &[usize], p: usize) -> Vec<usize> {
        d.iter().copied().filter(|&x| x != p).collect()
    }

    fn with(d: &[usize], p: usize) -> Vec<usize> {
        let mut v = d.to_vec();
        if !v.contains(&p) {
            v.push(p);
            v.sort_unstable();
        }
        v
    }

    fn restrict(src: &BigSpace, dst: &BigSpace, xi: &[usize]) -> usize {
        let sub: Vec<usize> = dst.d.iter().map(|&p| src.lookup(xi, p).expect("subset")).collect();
        dst.index(&sub)
    }

    /// `π_{j,p}: V(j,D) → V(j,D∖p)`.
    pub fn pi(&self, j: &[usize], d: &[usize], p: usize) -> Mat {
        let src = self.space(j, d);
        let dst = self.space(j, &Self::without(&src.d, p));
        let mut m = Mat::zeros(dst.dim, src.dim);
        for idx in 0..src.count() {
            if src.dims[idx] == 0 {
                continue;
            }
            let xi = src.xi(idx);
            let t = self.summand_tuple(j, &src.d, &xi);
            let e = self.r[src.lookup(&xi, p).expect("p in D")];
            let k = Self::restrict(&src, &dst, &xi);
            if dst.dims[k] > 0 {
                m.set_block(dst.offsets[k], src.offsets[idx], &self.module.edge(Arrow::plain(e), p, &t));
            }
        }
        m
    }

    /// `μ_{j,p}: V(j,D∖p) → V(j,D)`.
    pub fn mu(&self, j: &[usize], d: &[usize], p: usize) -> Mat {
        let big = self.space(j, d);
        let small = self.space(j, &Self::without(&big.d, p));
        let mut m = Mat::zeros(big.dim, small.dim);
        for idx in 0..big.count() {
            if big.dims[idx] == 0 {
                continue;
            }
            let xi = big.xi(idx);
            let e = self.r[big.lookup(&xi, p).expect("p in D")];
            let k = Self::restrict(&big, &small, &xi);
            if small.dims[k] == 0 {
                continue;
            }
            let ts = self.summand_tuple(j, &small.d, &small.xi(k));
            m.set_block(big.offsets[idx], small.offsets[k], &self.module.edge(Arrow::starred(e), p, &ts));
        }
        m
    }

    /// `σ|_j: V(j,D) → V(σj, σD)`.
    pub fn sigma(&self, j: &[usize], d: &[usize], sigma: &Perm) -> Mat {
        let src = self.space(j, d);
        let sj = sigma.act_on(j);
        let sd: Vec<usize> = src.d.iter().map(|&p| sigma.apply(p)).collect();
        let dst = self.space(&sj, &sd);
        let mut m = Mat::zeros(dst.dim, src.dim);
        for idx in 0..src.count() {
            if src.dims[idx] == 0 {
                continue;
            }
            let xi = src.xi(idx);
            // (σξ)(σ(p)) = ξ(p)
            let sxi: Vec<usize> = dst
                .d
                .iter()
                .map(|&q| src.lookup(&xi, sigma.inverse().apply(q)).expect("image of D"))
                .collect();
            let k = dst.index(&sxi);
            let t = self.summand_tuple(j, &src.d, &xi);
            m.set_block(dst.offsets[k], src.offsets[idx], &self.module.sn_perm(sigma, &t));
        }
        m
    }

    /// `r*_ℓ(j)`: position `ℓ` moved to the tail of `r`.
    pub fn retract(&self, r: usize, l: usize, j: &[usize]) -> Tuple {
        let mut t = j.to_vec();
        t[l] = self.module.quiver().edges()[r].tail;
        t
    }

    /// `(ξ, η)` index pairs matching `τ_{r,ℓ,D}(η) = ξ`.
    fn tau_pairs(&self, r: usize, l: usize, j: &[usize], d: &[usize]) -> (BigSpace, BigSpace, Vec<(usize, usize)>) {
        let rk = self.r.iter().position(|&e| e == r).expect("r in R");
        let big = self.space(j, d);
        let small = self.space(&self.retract(r, l, j), &Self::without(&big.d, l));
        let mut pairs = Vec::new();
        for idx in 0..big.count() {
            let xi = big.xi(idx);
            if big.lookup(&xi, l) == Some(rk) {
                pairs.push((idx, Self::restrict(&big, &small, &xi)));
            }
        }
        (big, small, pairs)
    }

    /// `τ^!_{r,ℓ,j,D}: V(j,D) → V(r*_ℓ(j), D∖ℓ)`.
    pub fn tau_upper(&self, r: usize, l: usize, j: &[usize], d: &[usize]) -> Mat {
        let (big, small, pairs) = self.tau_pairs(r, l, j, d);
        let mut m = Mat::zeros(small.dim, big.dim);
        for (x, e) in pairs {
            m.set_block(small.offsets[e], big.offsets[x], &Mat::identity(big.dims[x]));
        }
        m
    }

    /// `τ_{r,ℓ,j,D !}: V(r*_ℓ(j), D∖ℓ) → V(j,D)`.
    pub fn tau_lower(&self, r: usize, l: usize, j: &[usize], d: &[usize]) -> Mat {
        let (big, small, pairs) = self.tau_pairs(r, l, j, d);
        let mut m = Mat::zeros(big.dim, small.dim);
        for (x, e) in pairs {
            m.set_block(big.offsets[x], small.offsets[e], &Mat::identity(big.dims[x]));
        }
        m
    }

    /// `a_ℓ|_{j,D}` for an arrow not touching `i`.
    pub fn case_one(&self, a: Arrow, l: usize, j: &[usize], d: &[usize]) -> Mat {
        let src = self.space(j, d);
        let aj = self.module.edge_target(a, l, j);
        let dst = self.space(&aj, d);
        let mut m = Mat::zeros(dst.dim, src.dim);
        for idx in 0..src.count() {
            let t = self.summand_tuple(j, &src.d, &src.xi(idx));
            m.set_block(dst.offsets[idx], src.offsets[idx], &self.module.edge(a, l, &t));
        }
        m
    }

    /// `θ_{a,ℓ,j,D}` for `a ∈ R` at position `ℓ` with `j_ℓ = t(a)`.
    pub fn theta(&self, a: usize, l: usize, j: &[usize], d: &[usize], lambda_i: &Scalar, nu: &Scalar) -> Mat {
        let aj = self.module.edge_target(Arrow::plain(a), l, j);
        let dl = Self::with(d, l);
        let dim = self.space(&aj, &dl).dim;
        let mut op = &Mat::scalar(dim, &-lambda_i) + &(&self.mu(&aj, &dl, l) * &self.pi(&aj, &dl, l));
        if !nu.is_zero() {
            for &m in d {
                let s = self.sigma(&aj, &dl, &Perm::transposition(self.n(), m, l));
                op = &op + &s.scale(nu);
            }
        }
        &op * &self.tau_lower(a, l, &aj, &dl)
    }

    /// Tuples `j` for which some `V(j,D)` can be nonzero: any support tuple
    /// with some of its entries that are tails of `R` replaced by `i`.
    pub fn candidate_tuples(&self) -> BTreeSet<Tuple> {
        let q = self.module.quiver();
        let tails: BTreeSet<usize> = self.r.iter().map(|&e| q.edges()[e].tail).collect();
        let mut out = BTreeSet::new();
        for s in self.module.support().keys() {
            let movable: Vec<usize> = (0..s.len()).filter(|&p| tails.contains(&s[p])).collect();
            for mask in 0u32..(1 << movable.len()) {
                let mut j = s.clone();
                for (k, &p) in movable.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        j[p] = self.i;
                    }
                }
                out.insert(j);
            }
        }
        out
    }
}

/// All subsets of `set` (given ascending), each ascending.
pub fn subsets(set: &[usize]) -> Vec<Vec<usize>> {
    (0u32..(1 << set.len()))
        .map(|mask| set.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &p)| p).collect())
        .collect()
}
