//! Quivers, their doubles, the Ringel form and Weyl group actions.
//!
//! Vertices are addressed by their index in declaration order. Dimension
//! vectors are `Vec<i64>` and weights `Vec<Scalar>`, both indexed the same way.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ratmat::{Mat, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub tail: usize,
    pub head: usize,
}

/// An arrow of the double quiver: an edge of Q, or its reverse `a*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub edge: usize,
    pub star: bool,
}

impl Arrow {
    pub fn plain(edge: usize) -> Self {
        Arrow { edge, star: false }
    }

    pub fn starred(edge: usize) -> Self {
        Arrow { edge, star: true }
    }

    /// `a ↦ a*`, with `(a*)* = a`.
    pub fn dual(self) -> Self {
        Arrow { edge: self.edge, star: !self.star }
    }
}

pub type DimVector = Vec<i64>;
pub type Weight = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
}

impl Quiver {
    /// Build from vertex names and `(name, tail, head)` triples naming vertices.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Self> {
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), k).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {:?}", v.as_ref())));
            }
        }
        let mut q = Quiver {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            edges: Vec::new(),
            index,
        };
        for (name, t, h) in edges {
            let name = name.as_ref();
            if name.is_empty() || name.ends_with('*') {
                return Err(Error::InvalidQuiver(format!("bad edge name {name:?}")));
            }
            if q.edges.iter().any(|e| e.name == name) {
                return Err(Error::InvalidQuiver(format!("duplicate edge {name:?}")));
            }
            let tail = q.vertex(t.as_ref())?;
            let head = q.vertex(h.as_ref())?;
            q.edges.push(Edge { name: name.to_string(), tail, head });
        }
        Ok(q)
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Arrows of the double quiver: each edge followed by its star.
    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.edges.len()).flat_map(|e| [Arrow::plain(e), Arrow::starred(e)])
    }

    pub fn tail(&self, a: Arrow) -> usize {
        let e = &self.edges[a.edge];
        if a.star {
            e.head
        } else {
            e.tail
        }
    }

    pub fn head(&self, a: Arrow) -> usize {
        let e = &self.edges[a.edge];
        if a.star {
            e.tail
        } else {
            e.head
        }
    }

    pub fn arrow_name(&self, a: Arrow) -> String {
        let n = &self.edges[a.edge].name;
        if a.star {
            format!("{n}*")
        } else {
            n.clone()
        }
    }

    pub fn arrow(&self, name: &str) -> Result<Arrow> {
        let (base, star) = match name.strip_suffix('*') {
            Some(b) => (b, true),
            None => (name, false),
        };
        self.edges
            .iter()
            .position(|e| e.name == base)
            .map(|edge| Arrow { edge, star })
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.edges.iter().any(|e| e.tail == i && e.head == i)
    }

    pub fn check_loop_free(&self, i: usize) -> Result<()> {
        if self.has_loop(i) {
            Err(Error::EdgeLoop(self.vertices[i].clone()))
        } else {
            Ok(())
        }
    }

    /// Joined by at least one edge in either direction.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges
            .iter()
            .any(|e| (e.tail == i && e.head == j) || (e.tail == j && e.head == i))
    }

    /// The same quiver with the listed edges reversed.
    pub fn with_flipped(&self, flips: &[usize]) -> Quiver {
        let mut q = self.clone();
        for &e in flips {
            let edge = &mut q.edges[e];
            std::mem::swap(&mut edge.tail, &mut edge.head);
        }
        q
    }

    pub fn epsilon(&self, i: usize) -> DimVector {
        let mut v = vec![0; self.n_vertices()];
        v[i] = 1;
        v
    }

    /// ⟨α,β⟩ = Σ α_iβ_i − Σ_{a∈Q} α_{t(a)}β_{h(a)}.
    pub fn ringel_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let diag: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        diag - self.edges.iter().map(|e| a[e.tail] * b[e.head]).sum::<i64>()
    }

    pub fn symmetrized_form(&self, a: &[i64], b: &[i64]) -> i64 {
        self.ringel_form(a, b) + self.ringel_form(b, a)
    }

    /// (ε_i, ε_j).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        let mut c = if i == j { 2 } else { 0 };
        for e in &self.edges {
            if (e.tail, e.head) == (i, j) {
                c -= 1;
            }
            if (e.tail, e.head) == (j, i) {
                c -= 1;
            }
        }
        c
    }

    pub fn cartan_matrix(&self) -> Mat {
        let n = self.n_vertices();
        Mat::from_fn(n, n, |i, j| Scalar::int(self.cartan(i, j)))
    }

    /// s_i(α) = α − (α,ε_i)ε_i.
    pub fn simple_reflection(&self, i: usize, alpha: &[i64]) -> Result<DimVector> {
        self.check_loop_free(i)?;
        let c = self.symmetrized_form(alpha, &self.epsilon(i));
        let mut out = alpha.to_vec();
        out[i] -= c;
        Ok(out)
    }

    /// (r_iλ)_j = λ_j − (ε_i,ε_j)λ_i.
    pub fn dual_reflection(&self, i: usize, lambda: &[Scalar]) -> Result<Weight> {
        self.check_loop_free(i)?;
        let li = lambda[i].clone();
        Ok(lambda
            .iter()
            .enumerate()
            .map(|(j, x)| x - &(Scalar::int(self.cartan(i, j)) * &li))
            .collect())
    }

    /// Apply s_{j_h}⋯s_{j_1}, the first letter acting first.
    pub fn reflect_dim_word(&self, word: &[usize], alpha: &[i64]) -> Result<DimVector> {
        word.iter().try_fold(alpha.to_vec(), |a, &i| self.simple_reflection(i, &a))
    }

    pub fn reflect_weight_word(&self, word: &[usize], lambda: &[Scalar]) -> Result<Weight> {
        word.iter().try_fold(lambda.to_vec(), |l, &i| self.dual_reflection(i, &l))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && self.adjacent(v, w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The minimal positive imaginary root δ when the symmetrized form is
    /// positive semidefinite with one-dimensional radical.
    pub fn affine_data(&self) -> Option<DimVector> {
        let n = self.n_vertices();
        if !self.is_connected() || (0..n).any(|i| self.has_loop(i)) {
            return None;
        }
        let k = self.cartan_matrix().kernel_basis();
        if k.cols() != 1 {
            return None;
        }
        // A connected symmetric Cartan matrix with a strictly positive null
        // vector is of affine type, hence semidefinite.
        let col = k.col(0);
        let rats: Vec<_> = col.iter().map(|x| x.as_rational().cloned()).collect::<Option<_>>()?;
        let lcm = rats.iter().fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<num_bigint::BigInt> = rats.iter().map(|q| (q * &lcm).to_integer()).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints[0].is_negative() { -1 } else { 1 };
        let delta: Vec<i64> = ints
            .iter()
            .map(|x| i64::try_from(x / &g).ok().map(|v| v * sign))
            .collect::<Option<_>>()?;
        delta.iter().all(|&d| d > 0).then_some(delta)
    }

    /// Check a Weyl word against λ₀ step by step.
    pub fn validate_word(&self, lambda: &[Scalar], word: &[usize]) -> Result<WordReport> {
        let mut current = lambda.to_vec();
        let mut steps = Vec::with_capacity(word.len());
        for &i in word {
            self.check_loop_free(i)?;
            let pivot = current[i].clone();
            current = self.dual_reflection(i, &current)?;
            steps.push(WordStep { vertex: i, ok: !pivot.is_zero(), pivot, weight: current.clone() });
        }
        let failed_at = steps.iter().position(|s| !s.ok).map(|g| g + 1);
        Ok(WordReport { steps, failed_at, final_weight: current })
    }
}

/// Pairing λ·α = Σ λ_iα_i.
pub fn pair(lambda: &[Scalar], alpha: &[i64]) -> Scalar {
    lambda.iter().zip(alpha).map(|(l, &a)| l * &Scalar::int(a)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordStep {
    pub vertex: usize,
    /// The coordinate at `vertex` just before reflecting.
    pub pivot: Scalar,
    pub ok: bool,
    /// Weight after this step.
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordReport {
    pub steps: Vec<WordStep>,
    /// 1-based index of the first zero pivot.
    pub failed_at: Option<usize>,
    pub final_weight: Weight,
}

impl WordReport {
    pub fn pass(&self) -> bool {
        self.failed_at.is_none()
    }
}

/// Two vertices `0,1` with edges `a, b: 0 → 1`.
pub fn affine_a1() -> Quiver {
    Quiver::new(&["0", "1"], &[("a", "0", "1"), ("b", "0", "1")]).expect("valid quiver")
}

/// The oriented cycle on `m` vertices, edges `a{i}: i → i+1 mod m`.
pub fn cycle(m: usize) -> Quiver {
    let names: Vec<String> = (0..m).map(|i| i.to_string()).collect();
    let edges: Vec<(String, String, String)> = (0..m)
        .map(|i| (format!("a{i}"), i.to_string(), ((i + 1) % m).to_string()))
        .collect();
    Quiver::new(&names, &edges).expect("valid quiver")
}
