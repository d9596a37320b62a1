use super::module::{Tuple, WreathModule};
use crate::quiver::Arrow;
use crate::ratmat::{Mat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `(Σ_{a∈Q}[a,a*] − λ)_ℓ|_j = ν Σ_{m≠ℓ} s_{ℓm}|_j`.
    Moment { l: usize },
    /// `a_ℓ b_m − b_m a_ℓ = ±ν s_{ℓm}` or `0`.
    Commutator { l: usize, m: usize, a: Arrow, b: Arrow },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: Relation,
    pub tuple: Tuple,
    /// `lhs − rhs`.
    pub residual: Mat,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub structural: Vec<String>,
    pub failures: Vec<RelationFailure>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.structural.is_empty() && self.failures.is_empty()
    }
}

/// Check both relation families on every tuple of the support.
///
/// Every relation is a map out of some `V_j`, so tuples outside the support
/// hold vacuously.
pub fn verify_relations(v: &WreathModule) -> VerifyReport {
    let structural = v.structural_violations();
    if !structural.is_empty() {
        return VerifyReport { structural, failures: Vec::new() };
    }
    let mut failures = Vec::new();
    for j in v.support().keys() {
        for l in 0..v.n() {
            let r = moment_residual(v, l, j);
            if !r.is_zero() {
                failures.push(RelationFailure { relation: Relation::Moment { l }, tuple: j.clone(), residual: r });
            }
        }
        for l in 0..v.n() {
            for m in l + 1..v.n() {
                for a in v.arrows_from(l, j) {
                    for b in v.arrows_from(m, j) {
                        let r = commutator_residual(v, l, m, a, b, j);
                        if !r.is_zero() {
                            failures.push(RelationFailure {
                                relation: Relation::Commutator { l, m, a, b },
                                tuple: j.clone(),
                                residual: r,
                            });
                        }
                    }
                }
            }
        }
    }
    VerifyReport { structural, failures }
}

/// `Σ_{a∈Q}[a,a*]_ℓ|_j − λ_{j_ℓ} − ν Σ_{m≠ℓ, j_m=j_ℓ} s_{ℓm}|_j`.
pub fn moment_residual(v: &WreathModule, l: usize, j: &[usize]) -> Mat {
    let q = v.quiver();
    let d = v.dim(j);
    let mut acc = Mat::scalar(d, &-&v.params.lambda[j[l]]);
    for e in 0..q.edges().len() {
        let (a, astar) = (Arrow::plain(e), Arrow::starred(e));
        if q.head(a) == j[l] {
            let mid = v.edge_target(astar, l, j);
            acc = &acc + &(&v.edge(a, l, &mid) * &v.edge(astar, l, j));
        }
        if q.tail(a) == j[l] {
            let mid = v.edge_target(a, l, j);
            acc = &acc - &(&v.edge(astar, l, &mid) * &v.edge(a, l, j));
        }
    }
    let nu = &v.params.nu;
    if !nu.is_zero() {
        for m in 0..v.n() {
            if m != l && j[m] == j[l] {
                acc = &acc - &v.transposition(l, m, j).scale(nu);
            }
        }
    }
    acc
}

/// Residual of relation (ii) for `a` at `ℓ`, `b` at `m` on `V_j`.
pub fn commutator_residual(v: &WreathModule, l: usize, m: usize, a: Arrow, b: Arrow, j: &[usize]) -> Mat {
    let bj = v.edge_target(b, m, j);
    let aj = v.edge_target(a, l, j);
    let ab = &v.edge(a, l, &bj) * &v.edge(b, m, j);
    let ba = &v.edge(b, m, &aj) * &v.edge(a, l, j);
    let mut r = &ab - &ba;
    if a.edge == b.edge && a.star != b.star && !v.params.nu.is_zero() {
        // +ν when b ∈ Q and a = b*, −ν when a ∈ Q and b = a*
        let sign = if a.star { Scalar::one() } else { Scalar::int(-1) };
        r = &r - &v.transposition(l, m, j).scale(&(&sign * &v.params.nu));
    }
    r
}

impl WreathModule {
    /// Human-readable line for a failure, naming vertices and arrows.
    pub fn describe_failure(&self, fail: &RelationFailure) -> String {
        let p = &self.params;
        let t = p.fmt_tuple(&fail.tuple);
        match &fail.relation {
            Relation::Moment { l } => format!("relation (i) fails at tuple {t}, position {}", l + 1),
            Relation::Commutator { l, m, a, b } => format!(
                "relation (ii) fails at tuple {t}, positions {} and {}, arrows {} and {}",
                l + 1,
                m + 1,
                p.quiver.arrow_name(*a),
                p.quiver.arrow_name(*b)
            ),
        }
    }
}
