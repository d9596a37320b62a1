//! Exact checks of the commutation identities satisfied by `π`, `μ`, `σ|`,
//! `τ` and `θ` on a module in sink form.

use super::bigspace::{subsets, SinkContext};
use crate::quiver::Arrow;
use crate::ratmat::Mat;
use crate::symg::Perm;
use crate::wreathmod::WreathModule;
use crate::Result;

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn without(d: &[usize], p: usize) -> Vec<usize> {
    d.iter().copied().filter(|&x| x != p).collect()
}

fn with(d: &[usize], p: usize) -> Vec<usize> {
    let mut v = d.to_vec();
    v.push(p);
    v.sort_unstable();
    v
}

/// Run every identity on every candidate tuple and every `D ⊂ Δ(j)`.
/// `v` must be in sink form at `i` and satisfy the relations.
pub fn check_identities(v: &WreathModule, i: usize) -> Result<IdentityReport> {
    let ctx = SinkContext::new(v, i)?;
    let mut rep = IdentityReport::default();
    let n = v.n();
    let lambda_i = v.params.lambda[i].clone();
    let nu = v.params.nu.clone();
    let q = v.quiver().clone();
    let gens: Vec<Perm> = (0..n.saturating_sub(1)).map(|m| Perm::adjacent(n, m)).collect();

    for j in ctx.candidate_tuples() {
        let delta = ctx.delta(&j);
        for d in subsets(&delta) {
            for &p in &d {
                let dp = without(&d, p);
                for g in &gens {
                    let (gj, gp) = (g.act_on(&j), g.apply(p));
                    let gd: Vec<usize> = d.iter().map(|&x| g.apply(x)).collect();
                    let lhs = &ctx.pi(&gj, &gd, gp) * &ctx.sigma(&j, &d, g);
                    let rhs = &ctx.sigma(&j, &dp, g) * &ctx.pi(&j, &d, p);
                    rep.expect(lhs == rhs, || format!("π equivariance at {j:?} D={d:?} p={p}"));
                    let lhs = &ctx.mu(&gj, &gd, gp) * &ctx.sigma(&j, &dp, g);
                    let rhs = &ctx.sigma(&j, &d, g) * &ctx.mu(&j, &d, p);
                    rep.expect(lhs == rhs, || format!("μ equivariance at {j:?} D={d:?} p={p}"));
                }
                // π_p μ_p on V(j, D∖p)
                let mut rhs = Mat::scalar(ctx.space(&j, &dp).dim, &lambda_i);
                for &m in delta.iter().filter(|m| !d.contains(m)) {
                    rhs = &rhs + &ctx.sigma(&j, &dp, &Perm::transposition(n, p, m)).scale(&nu);
                }
                let lhs = &ctx.pi(&j, &d, p) * &ctx.mu(&j, &d, p);
                rep.expect(lhs == rhs, || format!("π_p μ_p at {j:?} D={d:?} p={p}"));
                for &pq in d.iter().filter(|&&x| x != p) {
                    // π_p μ_q = μ_q π_p − ν s_{pq} on V(j, D∖q)
                    let dq = without(&d, pq);
                    let lhs = &ctx.pi(&j, &d, p) * &ctx.mu(&j, &d, pq);
                    let rhs = &(&ctx.mu(&j, &dp, pq) * &ctx.pi(&j, &dq, p))
                        - &ctx.sigma(&j, &dq, &Perm::transposition(n, p, pq)).scale(&nu);
                    rep.expect(lhs == rhs, || format!("π_p μ_q at {j:?} D={d:?} p={p} q={pq}"));
                    let a = &ctx.pi(&j, &dp, pq) * &ctx.pi(&j, &d, p);
                    let b = &ctx.pi(&j, &dq, p) * &ctx.pi(&j, &d, pq);
                    rep.expect(a == b, || format!("π commute at {j:?} D={d:?}"));
                    let a = &ctx.mu(&j, &d, p) * &ctx.mu(&j, &dp, pq);
                    let b = &ctx.mu(&j, &d, pq) * &ctx.mu(&j, &dq, p);
                    rep.expect(a == b, || format!("μ commute at {j:?} D={d:?}"));
                }
            }

            for l in 0..n {
                for a in q.arrows().filter(|&a| q.tail(a) == j[l]) {
                    if q.tail(a) != i && q.head(a) != i {
                        let aj = v.edge_target(a, l, &j);
                        for &p in &delta {
                            if d.contains(&p) {
                                let lhs = &ctx.pi(&aj, &d, p) * &ctx.case_one(a, l, &j, &d);
                                let rhs = &ctx.case_one(a, l, &j, &without(&d, p)) * &ctx.pi(&j, &d, p);
                                rep.expect(lhs == rhs, || format!("a|π at {j:?} D={d:?} p={p}"));
                            } else {
                                let dp = with(&d, p);
                                let lhs = &ctx.mu(&aj, &dp, p) * &ctx.case_one(a, l, &j, &d);
                                let rhs = &ctx.case_one(a, l, &j, &dp) * &ctx.mu(&j, &dp, p);
                                rep.expect(lhs == rhs, || format!("a|μ at {j:?} D={d:?} p={p}"));
                            }
                        }
                    } else if q.head(a) == i {
                        check_theta(&ctx, &mut rep, a, l, &j, &d, &delta)?;
                    }
                }
                if d.contains(&l) {
                    check_tau(&ctx, &mut rep, l, &j, &d, &delta);
                }
            }
        }
    }
    Ok(rep)
}

fn check_tau(ctx: &SinkContext, rep: &mut IdentityReport, l: usize, j: &[usize], d: &[usize], delta: &[usize]) {
    let dim = ctx.space(j, d).dim;
    let mut sum = Mat::zeros(dim, dim);
    for &r in &ctx.r {
        sum = &sum + &(&ctx.tau_lower(r, l, j, d) * &ctx.tau_upper(r, l, j, d));
    }
    rep.expect(sum == Mat::identity(dim), || format!("Σ τ_! τ^! at {j:?} D={d:?} ℓ={l}"));
    let dl = without(d, l);
    for &r in &ctx.r {
        let rj = ctx.retract(r, l, j);
        for &p in delta.iter().filter(|&&p| p != l) {
            if d.contains(&p) {
                let dp = without(d, p);
                let lhs = &ctx.pi(&rj, &dl, p) * &ctx.tau_upper(r, l, j, d);
                let rhs = &ctx.tau_upper(r, l, j, &dp) * &ctx.pi(j, d, p);
                rep.expect(lhs == rhs, || format!("π τ^! at {j:?} D={d:?} ℓ={l} p={p}"));
                let lhs = &ctx.pi(j, d, p) * &ctx.tau_lower(r, l, j, d);
                let rhs = &ctx.tau_lower(r, l, j, &dp) * &ctx.pi(&rj, &dl, p);
                rep.expect(lhs == rhs, || format!("π τ_! at {j:?} D={d:?} ℓ={l} p={p}"));
            } else {
                let dp = with(d, p);
                let dlp = with(&dl, p);
                let lhs = &ctx.mu(&rj, &dlp, p) * &ctx.tau_upper(r, l, j, d);
                let rhs = &ctx.tau_upper(r, l, j, &dp) * &ctx.mu(j, &dp, p);
                rep.expect(lhs == rhs, || format!("μ τ^! at {j:?} D={d:?} ℓ={l} p={p}"));
                let lhs = &ctx.mu(j, &dp, p) * &ctx.tau_lower(r, l, j, d);
                let rhs = &ctx.tau_lower(r, l, j, &dp) * &ctx.mu(&rj, &dlp, p);
                rep.expect(lhs == rhs, || format!("μ τ_! at {j:?} D={d:?} ℓ={l} p={p}"));
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn check_theta(
    ctx: &SinkContext,
    rep: &mut IdentityReport,
    a: Arrow,
    l: usize,
    j: &[usize],
    d: &[usize],
    delta: &[usize],
) -> Result<()> {
    let lam = ctx.module.params.lambda[ctx.i].clone();
    let nu = ctx.module.params.nu.clone();
    let n = ctx.n();
    let aj = ctx.module.edge_target(a, l, j);
    let th = |dd: &[usize]| ctx.theta(a.edge, l, j, dd, &lam, &nu);
    let dl = with(d, l);
    for &p in d {
        let dp = without(d, p);
        let lhs = &ctx.pi(&aj, &dl, p) * &th(d);
        let rhs = &th(&dp) * &ctx.pi(j, d, p);
        rep.expect(lhs == rhs, || format!("π θ at {j:?} D={d:?} ℓ={l} p={p}"));
        let lhs = &th(d) * &ctx.mu(j, d, p);
        let rhs = &ctx.mu(&aj, &dl, p) * &th(&dp);
        rep.expect(lhs == rhs, || format!("θ μ at {j:?} D={d:?} ℓ={l} p={p}"));
    }
    if d == delta {
        let lhs = &ctx.pi(&aj, &dl, l) * &th(d);
        let mut rhs = Mat::zeros(lhs.rows(), lhs.cols());
        for &m in delta {
            let dm = without(d, m);
            let dlm = with(&dm, l);
            let s = ctx.sigma(&aj, &dlm, &Perm::transposition(n, m, l));
            let t = ctx.tau_lower(a.edge, l, &aj, &dlm);
            rhs = &rhs + &(&(&s * &t) * &ctx.pi(j, d, m)).scale(&nu);
        }
        rep.expect(lhs == rhs, || format!("π_ℓ θ at {j:?} ℓ={l}"));
    }
    Ok(())
}
