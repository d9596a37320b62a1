use std::collections::BTreeMap;

use crate::quiver::{Arrow, Quiver, Weight};
use crate::ratmat::{Mat, Scalar};
use crate::symg::Perm;
use crate::{Error, Result};

/// A tuple `j ∈ I^n` of vertex indices.
pub type Tuple = Vec<usize>;

/// `(λ, ν, n)` over a fixed quiver, plus the cyclotomic order used for text
/// input and output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub quiver: Quiver,
    pub n: usize,
    pub lambda: Weight,
    pub nu: Scalar,
    pub order: u32,
}

impl Params {
    pub fn new(quiver: Quiver, n: usize, lambda: Weight, nu: Scalar) -> Result<Self> {
        if lambda.len() != quiver.n_vertices() {
            return Err(Error::SizeMismatch(format!(
                "weight has {} entries for {} vertices",
                lambda.len(),
                quiver.n_vertices()
            )));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let order = lambda.iter().chain([&nu]).map(Scalar::order).max().unwrap_or(1);
        Ok(Params { quiver, n, lambda, nu, order })
    }

    pub fn with_lambda(&self, lambda: Weight) -> Params {
        Params { lambda, ..self.clone() }
    }

    pub fn with_quiver(&self, quiver: Quiver) -> Params {
        Params { quiver, ..self.clone() }
    }

    pub fn fmt_tuple(&self, j: &[usize]) -> String {
        let names: Vec<&str> = j.iter().map(|&v| self.quiver.vertex_name(v)).collect();
        format!("({})", names.join(","))
    }
}

/// A finite-dimensional module over the deformed wreath product algebra.
///
/// Positions `ℓ` and adjacent transpositions `m` are 0-based: `m` swaps
/// positions `m` and `m+1`. Missing actions are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathModule {
    pub params: Params,
    support: BTreeMap<Tuple, usize>,
    edges: BTreeMap<(Arrow, usize, Tuple), Mat>,
    sn: BTreeMap<(usize, Tuple), Mat>,
}

impl WreathModule {
    pub fn zero(params: Params) -> Self {
        WreathModule { params, support: BTreeMap::new(), edges: BTreeMap::new(), sn: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn quiver(&self) -> &Quiver {
        &self.params.quiver
    }

    pub fn dim(&self, j: &[usize]) -> usize {
        self.support.get(j).copied().unwrap_or(0)
    }

    pub fn set_dim(&mut self, j: Tuple, d: usize) {
        if d == 0 {
            self.support.remove(&j);
        } else {
            self.support.insert(j, d);
        }
    }

    pub fn support(&self) -> &BTreeMap<Tuple, usize> {
        &self.support
    }

    pub fn total_dim(&self) -> usize {
        self.support.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Per-vertex dimensions of an `n = 1` module.
    pub fn dim_vector(&self) -> Vec<i64> {
        let mut v = vec![0; self.quiver().n_vertices()];
        for (j, &d) in &self.support {
            if j.len() == 1 {
                v[j[0]] += d as i64;
            }
        }
        v
    }

    /// `a_ℓ(j)`: `j` with position `ℓ` moved to the head of `a`.
    pub fn edge_target(&self, a: Arrow, l: usize, j: &[usize]) -> Tuple {
        let mut t = j.to_vec();
        t[l] = self.quiver().head(a);
        t
    }

    pub fn stored_edges(&self) -> impl Iterator<Item = (&(Arrow, usize, Tuple), &Mat)> {
        self.edges.iter()
    }

    pub fn stored_sn(&self) -> impl Iterator<Item = (&(usize, Tuple), &Mat)> {
        self.sn.iter()
    }

    /// Store an edge action; zero matrices are dropped.
    pub fn set_edge(&mut self, a: Arrow, l: usize, j: Tuple, m: Mat) {
        let key = (a, l, j);
        if m.is_zero() {
            self.edges.remove(&key);
        } else {
            self.edges.insert(key, m);
        }
    }

    pub fn set_sn(&mut self, m: usize, j: Tuple, mat: Mat) {
        let key = (m, j);
        if mat.is_zero() {
            self.sn.remove(&key);
        } else {
            self.sn.insert(key, mat);
        }
    }

    /// `a_ℓ|_j`; zero when absent or when `a` does not start at `j_ℓ`.
    pub fn edge(&self, a: Arrow, l: usize, j: &[usize]) -> Mat {
        let target = self.edge_target(a, l, j);
        let key = (a, l, j.to_vec());
        match self.edges.get(&key) {
            Some(m) if self.quiver().tail(a) == j[l] => m.clone(),
            _ => Mat::zeros(self.dim(&target), self.dim(j)),
        }
    }

    /// `s_m|_j` for the adjacent transposition `(m, m+1)`.
    pub fn sn_gen(&self, m: usize, j: &[usize]) -> Mat {
        let target = Perm::adjacent(self.n(), m).act_on(j);
        match self.sn.get(&(m, j.to_vec())) {
            Some(mat) => mat.clone(),
            None => Mat::zeros(self.dim(&target), self.dim(j)),
        }
    }

    /// `σ|_j` for any permutation, chased along a reduced word.
    pub fn sn_perm(&self, sigma: &Perm, j: &[usize]) -> Mat {
        let mut cur = j.to_vec();
        let mut acc = Mat::identity(self.dim(j));
        for &m in sigma.reduced_word().iter().rev() {
            let g = self.sn_gen(m, &cur);
            acc = &g * &acc;
            cur = Perm::adjacent(self.n(), m).act_on(&cur);
        }
        acc
    }

    /// `s_{ℓm}|_j`.
    pub fn transposition(&self, l: usize, m: usize, j: &[usize]) -> Mat {
        self.sn_perm(&Perm::transposition(self.n(), l, m), j)
    }

    /// Trace of `σ` on the whole module.
    pub fn character(&self, sigma: &Perm) -> Scalar {
        self.support
            .keys()
            .filter(|j| sigma.act_on(j) == **j)
            .map(|j| self.sn_perm(sigma, j).trace())
            .sum()
    }

    /// All arrows of the double quiver leaving the vertex at position `l`.
    pub fn arrows_from(&self, l: usize, j: &[usize]) -> Vec<Arrow> {
        self.quiver().arrows().filter(|&a| self.quiver().tail(a) == j[l]).collect()
    }

    /// Shapes, S_n relations and smash-product equivariance.
    pub fn structural_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let p = &self.params;
        let n = self.n();
        for j in self.support.keys() {
            if j.len() != n || j.iter().any(|&v| v >= p.quiver.n_vertices()) {
                out.push(format!("tuple {j:?} is not in I^{n}"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for ((a, l, j), m) in &self.edges {
            let t = self.edge_target(*a, *l, j);
            if *l >= n || p.quiver.tail(*a) != j[*l] {
                out.push(format!(
                    "edge {} at position {} does not start at {}",
                    p.quiver.arrow_name(*a),
                    l + 1,
                    p.fmt_tuple(j)
                ));
            } else if m.shape() != (self.dim(&t), self.dim(j)) {
                out.push(format!(
                    "edge {} at position {} on {}: shape {:?}, expected {:?}",
                    p.quiver.arrow_name(*a),
                    l + 1,
                    p.fmt_tuple(j),
                    m.shape(),
                    (self.dim(&t), self.dim(j))
                ));
            }
        }
        for ((m, j), mat) in &self.sn {
            if *m + 1 >= n {
                out.push(format!("adjacent transposition {} out of range", m + 1));
                continue;
            }
            let t = Perm::adjacent(n, *m).act_on(j);
            if mat.shape() != (self.dim(&t), self.dim(j)) {
                out.push(format!(
                    "s_{} on {}: shape {:?}, expected {:?}",
                    m + 1,
                    p.fmt_tuple(j),
                    mat.shape(),
                    (self.dim(&t), self.dim(j))
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for j in self.support.keys() {
            let id = Mat::identity(self.dim(j));
            for m in 0..n.saturating_sub(1) {
                let sj = Perm::adjacent(n, m).act_on(j);
                if &self.sn_gen(m, &sj) * &self.sn_gen(m, j) != id {
                    out.push(format!("s_{} is not an involution on {}", m + 1, p.fmt_tuple(j)));
                }
                if m + 2 < n {
                    let word = |seq: &[usize]| {
                        let mut cur = j.clone();
                        let mut acc = Mat::identity(self.dim(j));
                        for &g in seq {
                            acc = &self.sn_gen(g, &cur) * &acc;
                            cur = Perm::adjacent(n, g).act_on(&cur);
                        }
                        acc
                    };
                    if word(&[m, m + 1, m]) != word(&[m + 1, m, m + 1]) {
                        out.push(format!("braid relation fails for s_{} on {}", m + 1, p.fmt_tuple(j)));
                    }
                }
                for k in m + 2..n.saturating_sub(1) {
                    let sk = Perm::adjacent(n, k).act_on(j);
                    let lhs = &self.sn_gen(k, &sj) * &self.sn_gen(m, j);
                    let rhs = &self.sn_gen(m, &sk) * &self.sn_gen(k, j);
                    if lhs != rhs {
                        out.push(format!(
                            "s_{} and s_{} do not commute on {}",
                            m + 1,
                            k + 1,
                            p.fmt_tuple(j)
                        ));
                    }
                }
                // σ|_{a_ℓ(j)} a_ℓ|_j = a_{σ(ℓ)}|_{σ(j)} σ|_j
                let sigma = Perm::adjacent(n, m);
                for l in 0..n {
                    for a in self.arrows_from(l, j) {
                        let aj = self.edge_target(a, l, j);
                        let lhs = &self.sn_gen(m, &aj) * &self.edge(a, l, j);
                        let rhs = &self.edge(a, sigma.apply(l), &sj) * &self.sn_gen(m, j);
                        if lhs != rhs {
                            out.push(format!(
                                "s_{} is not equivariant for {} at position {} on {}",
                                m + 1,
                                p.quiver.arrow_name(a),
                                l + 1,
                                p.fmt_tuple(j)
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check_structure(&self) -> Result<()> {
        let v = self.structural_violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Structural(v.join("; ")))
        }
    }

    /// Same spaces and actions over different parameters.
    pub fn with_params(mut self, params: Params) -> Self {
        self.params = params;
        self
    }
}
