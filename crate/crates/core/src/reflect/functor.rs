use std::collections::BTreeMap;

use super::bigspace::SinkContext;
use crate::ratmat::{Mat, Scalar};
use crate::symg::Perm;
use crate::wreathmod::{
    check_morphism, reorient_inverse, reorient_module, verify_relations, Morphism, Tuple, WreathModule,
};
use crate::{Error, Result};

/// Result of applying `F_i` to a module.
#[derive(Clone, Debug)]
pub struct ReflectionOutput {
    /// `F_i(V)` over `r_i λ`, in the original orientation.
    pub module: WreathModule,
    pub vertex: usize,
    /// Edges flipped to make the vertex a sink.
    pub flips: Vec<usize>,
    /// The input in sink form.
    pub sink: WreathModule,
    /// Columns span `V'_j ⊂ V(j, Δ(j))`.
    pub kernels: BTreeMap<Tuple, Mat>,
    /// `dim V(j, Δ(j))` for every candidate tuple.
    pub big_dims: BTreeMap<Tuple, usize>,
}

pub(crate) fn sink_flips(v: &WreathModule, i: usize) -> Vec<usize> {
    v.quiver().edges().iter().enumerate().filter(|(_, e)| e.tail == i).map(|(k, _)| k).collect()
}

/// `V` reoriented so that every edge at `i` points into `i`.
pub fn sink_form(v: &WreathModule, i: usize) -> Result<WreathModule> {
    if i >= v.quiver().n_vertices() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    v.quiver().check_loop_free(i)?;
    Ok(reorient_module(v, &sink_flips(v, i)))
}

/// `F_i(V)`. The input must satisfy the relations; the output is checked too.
pub fn reflection_functor(v: &WreathModule, i: usize) -> Result<ReflectionOutput> {
    if i >= v.quiver().n_vertices() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    v.quiver().check_loop_free(i)?;
    let report = verify_relations(v);
    if !report.structural.is_empty() {
        return Err(Error::Structural(report.structural.join("; ")));
    }
    if !report.failures.is_empty() {
        return Err(Error::RelationFailure(report.failures.len()));
    }
    let out = reflect_unchecked(v, i)?;
    let check = verify_relations(&out.module);
    if !check.pass() {
        return Err(Error::Internal(format!(
            "reflected module fails {} relation(s)",
            check.failures.len() + check.structural.len()
        )));
    }
    Ok(out)
}

/// `F_i(V)` without verifying input or output.
pub fn reflect_unchecked(v: &WreathModule, i: usize) -> Result<ReflectionOutput> {
    let flips = sink_flips(v, i);
    let sink = reorient_module(v, &flips);
    let ctx = SinkContext::new(&sink, i)?;
    let q = sink.quiver().clone();
    let n = sink.n();
    let lambda_i = sink.params.lambda[i].clone();
    let nu = sink.params.nu.clone();

    let mut kernels = BTreeMap::new();
    let mut big_dims = BTreeMap::new();
    for j in ctx.candidate_tuples() {
        let d = ctx.delta(&j);
        let space = ctx.space(&j, &d);
        big_dims.insert(j.clone(), space.dim);
        if space.dim == 0 {
            continue;
        }
        let pis: Vec<Mat> = d.iter().map(|&p| ctx.pi(&j, &d, p)).collect();
        let k = Mat::intersect_kernels(&pis, space.dim);
        if k.cols() > 0 {
            kernels.insert(j, k);
        }
    }

    let new_lambda = q.dual_reflection(i, &sink.params.lambda)?;
    let mut out = WreathModule::zero(sink.params.with_lambda(new_lambda));
    for (j, k) in &kernels {
        out.set_dim(j.clone(), k.cols());
    }
    let restrict = |target: &Tuple, image: Mat| -> Result<Option<Mat>> {
        match kernels.get(target) {
            Some(kt) => kt.solve_columns(&image).map(Some),
            None if image.is_zero() => Ok(None),
            None => Err(Error::NotInSpan),
        }
    };
    for (j, k) in &kernels {
        let d = ctx.delta(j);
        for l in 0..n {
            for a in q.arrows().filter(|&a| q.tail(a) == j[l]) {
                let big = if q.tail(a) == i {
                    ctx.tau_upper(a.edge, l, j, &d)
                } else if q.head(a) == i {
                    ctx.theta(a.edge, l, j, &d, &lambda_i, &nu)
                } else {
                    ctx.case_one(a, l, j, &d)
                };
                let target = sink.edge_target(a, l, j);
                if let Some(m) = restrict(&target, &big * k)? {
                    out.set_edge(a, l, j.clone(), m);
                }
            }
        }
        for m in 0..n.saturating_sub(1) {
            let g = Perm::adjacent(n, m);
            let big = ctx.sigma(j, &d, &g);
            if let Some(mat) = restrict(&g.act_on(j), &big * k)? {
                out.set_sn(m, j.clone(), mat);
            }
        }
    }
    let module = reorient_inverse(&out, &flips);
    Ok(ReflectionOutput { module, vertex: i, flips, sink, kernels, big_dims })
}

/// `F_i(f)` for a morphism `f: V → W` of modules over the same parameters.
pub fn reflect_morphism(fv: &ReflectionOutput, fw: &ReflectionOutput, f: &Morphism) -> Result<Morphism> {
    if fv.vertex != fw.vertex || fv.sink.params != fw.sink.params {
        return Err(Error::InvalidArgument("reflections at different vertices or parameters".into()));
    }
    if !check_morphism(&fv.sink, &fw.sink, f)? {
        return Err(Error::NotIntertwiner("input map is not a module morphism".into()));
    }
    let i = fv.vertex;
    let cv = SinkContext::new(&fv.sink, i)?;
    let cw = SinkContext::new(&fw.sink, i)?;
    let mut out = Morphism::new();
    for (j, kv) in &fv.kernels {
        let d = cv.delta(j);
        let (sv, sw) = (cv.space(j, &d), cw.space(j, &d));
        let mut big = Mat::zeros(sw.dim, sv.dim);
        for idx in 0..sv.count() {
            let t = cv.summand_tuple(j, &d, &sv.xi(idx));
            if let Some(ft) = f.get(&t) {
                big.set_block(sw.offsets[idx], sv.offsets[idx], ft);
            }
        }
        let image = &big * kv;
        let m = match fw.kernels.get(j) {
            Some(kw) => kw.solve_columns(&image)?,
            None if image.is_zero() => Mat::zeros(0, kv.cols()),
            None => return Err(Error::NotInSpan),
        };
        out.insert(j.clone(), m);
    }
    for j in fw.kernels.keys().filter(|j| !fv.kernels.contains_key(*j)) {
        out.insert(j.clone(), Mat::zeros(fw.kernels[j].cols(), 0));
    }
    Ok(out)
}

/// `λ_i ± pν ≠ 0` for `p = 0, …, n−1`.
pub fn is_generic(lambda_i: &Scalar, nu: &Scalar, n: usize) -> bool {
    generic_failure(lambda_i, nu, n).is_none()
}

/// First `(p, sign)` with `λ_i + sign·pν = 0`, plus branch first.
pub fn generic_failure(lambda_i: &Scalar, nu: &Scalar, n: usize) -> Option<(usize, i8)> {
    for p in 0..n {
        let pn = Scalar::int(p as i64) * nu;
        if (lambda_i + &pn).is_zero() {
            return Some((p, 1));
        }
        if (lambda_i - &pn).is_zero() {
            return Some((p, -1));
        }
    }
    None
}

/// Genericity decided by inverting `λ + ν Σ_{m<r} s_{mr}` in `ℚS_r`.
pub fn is_generic_oracle(lambda_i: &Scalar, nu: &Scalar, n: usize) -> Result<bool> {
    for r in 1..=n {
        if !crate::symg::central_sum_invertible(lambda_i, nu, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One step of a word application.
#[derive(Clone, Debug)]
pub struct WordTrace {
    pub vertex: usize,
    pub generic: bool,
    pub dims: BTreeMap<Tuple, usize>,
}

/// `F_{i_k} ⋯ F_{i_1}(V)`, applied left to right along `word`.
pub fn apply_functor_word(v: &WreathModule, word: &[usize], require_generic: bool) -> Result<(WreathModule, Vec<WordTrace>)> {
    let mut cur = v.clone();
    let mut trace = Vec::new();
    for &i in word {
        let p = &cur.params;
        if i >= p.quiver.n_vertices() {
            return Err(Error::UnknownVertex(i.to_string()));
        }
        let generic = is_generic(&p.lambda[i], &p.nu, p.n);
        if require_generic && !generic {
            return Err(Error::NotGeneric {
                vertex: p.quiver.vertex_name(i).to_string(),
                detail: format!("λ_i = {}, ν = {}", p.lambda[i], p.nu),
            });
        }
        cur = reflection_functor(&cur, i)?.module;
        trace.push(WordTrace { vertex: i, generic, dims: cur.support().clone() });
    }
    Ok((cur, trace))
}
