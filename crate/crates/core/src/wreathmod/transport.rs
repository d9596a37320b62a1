use std::collections::{BTreeMap, BTreeSet};

use super::module::{Tuple, WreathModule};
use crate::quiver::{Arrow, Quiver};
use crate::ratmat::Mat;
use crate::symg::Perm;
use crate::{Error, Result};

/// Reverse the listed edges of Q. A flipped edge keeps its name; the new `a`
/// acts by the old `a*` and the new `a*` by minus the old `a`.
pub fn reorient_module(v: &WreathModule, flips: &[usize]) -> WreathModule {
    remap_flipped(v, flips, false)
}

/// Inverse of [`reorient_module`] for the same flips: the old `a` is minus the
/// new `a*`, the old `a*` is the new `a`.
pub fn reorient_inverse(v: &WreathModule, flips: &[usize]) -> WreathModule {
    remap_flipped(v, flips, true)
}

fn remap_flipped(v: &WreathModule, flips: &[usize], inverse: bool) -> WreathModule {
    let flipped: BTreeSet<usize> = flips.iter().copied().collect();
    let q = v.quiver().with_flipped(&flipped.iter().copied().collect::<Vec<_>>());
    let mut out = WreathModule::zero(v.params.with_quiver(q));
    for (j, &d) in v.support() {
        out.set_dim(j.clone(), d);
    }
    for ((a, l, j), m) in v.stored_edges() {
        let (na, mat) = if flipped.contains(&a.edge) {
            // forward: plain → star with a sign; inverse: star → plain with a sign
            let negate = a.star == inverse;
            (a.dual(), if negate { -m } else { m.clone() })
        } else {
            (*a, m.clone())
        };
        out.set_edge(na, *l, j.clone(), mat);
    }
    for ((m, j), mat) in v.stored_sn() {
        out.set_sn(*m, j.clone(), mat.clone());
    }
    out
}

/// How each edge of the source quiver lands under a vertex bijection `g`:
/// the matched target edge and whether its orientation is reversed.
pub fn match_edges(q: &Quiver, g: &[usize]) -> Result<Vec<(usize, bool)>> {
    let n = q.n_vertices();
    let mut seen = vec![false; n];
    if g.len() != n || g.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
        return Err(Error::NotAutomorphism(format!("{g:?} is not a vertex bijection")));
    }
    let key = |u: usize, w: usize| (u.min(w), u.max(w));
    let mut pools: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (k, e) in q.edges().iter().enumerate() {
        pools.entry(key(e.tail, e.head)).or_default().push(k);
    }
    let mut used: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Vec::with_capacity(q.edges().len());
    for e in q.edges() {
        let (gt, gh) = (g[e.tail], g[e.head]);
        let k = key(gt, gh);
        let idx = used.entry(k).or_insert(0);
        let Some(&f) = pools.get(&k).and_then(|p| p.get(*idx)) else {
            return Err(Error::NotAutomorphism(format!(
                "no edge left between {} and {}",
                q.vertex_name(gt),
                q.vertex_name(gh)
            )));
        };
        *idx += 1;
        let fe = &q.edges()[f];
        out.push((f, gt != gh && fe.tail != gt));
    }
    Ok(out)
}

/// Relabel a module along a graph automorphism `g` (given on vertex indices).
/// Edges are matched by endpoints in declaration order; an edge landing on a
/// reversed edge is carried over with the reorientation convention.
pub fn graph_automorphism_transport(v: &WreathModule, g: &[usize]) -> Result<WreathModule> {
    let q = v.quiver();
    let matching = match_edges(q, g)?;
    let mut lambda = v.params.lambda.clone();
    for (i, x) in v.params.lambda.iter().enumerate() {
        lambda[g[i]] = x.clone();
    }
    let mut out = WreathModule::zero(v.params.with_lambda(lambda));
    let map_tuple = |j: &Tuple| -> Tuple { j.iter().map(|&x| g[x]).collect() };
    for (j, &d) in v.support() {
        out.set_dim(map_tuple(j), d);
    }
    for ((a, l, j), m) in v.stored_edges() {
        let (f, reversed) = matching[a.edge];
        let (na, mat) = match (reversed, a.star) {
            (false, s) => (Arrow { edge: f, star: s }, m.clone()),
            (true, false) => (Arrow::starred(f), m.clone()),
            (true, true) => (Arrow::plain(f), -m),
        };
        out.set_edge(na, *l, map_tuple(j), mat);
    }
    for ((m, j), mat) in v.stored_sn() {
        out.set_sn(*m, map_tuple(j), mat.clone());
    }
    Ok(out)
}

/// Per-tuple linear maps between two modules on the same tuples.
pub type Morphism = BTreeMap<Tuple, Mat>;

fn component(f: &Morphism, j: &[usize], rows: usize, cols: usize) -> Result<Mat> {
    match f.get(j) {
        Some(m) if m.shape() == (rows, cols) => Ok(m.clone()),
        Some(m) => Err(Error::ShapeMismatch(format!(
            "map on {j:?} has shape {:?}, expected {:?}",
            m.shape(),
            (rows, cols)
        ))),
        None => Ok(Mat::zeros(rows, cols)),
    }
}

/// Whether `f` commutes with every edge and S_n generator.
pub fn check_morphism(v: &WreathModule, w: &WreathModule, f: &Morphism) -> Result<bool> {
    let tuples: BTreeSet<&Tuple> = v.support().keys().chain(w.support().keys()).collect();
    for j in f.keys() {
        if !tuples.contains(j) && !f[j].shape().0.eq(&0) && !f[j].is_zero() {
            return Err(Error::ShapeMismatch(format!("map given on empty tuple {j:?}")));
        }
    }
    let q = v.quiver();
    let n = v.n();
    for j in v.support().keys() {
        let fj = component(f, j, w.dim(j), v.dim(j))?;
        for l in 0..n {
            for a in q.arrows().filter(|&a| q.tail(a) == j[l]) {
                let t = v.edge_target(a, l, j);
                let ft = component(f, &t, w.dim(&t), v.dim(&t))?;
                if &ft * &v.edge(a, l, j) != &w.edge(a, l, j) * &fj {
                    return Ok(false);
                }
            }
        }
        for m in 0..n.saturating_sub(1) {
            let t = Perm::adjacent(n, m).act_on(j);
            let ft = component(f, &t, w.dim(&t), v.dim(&t))?;
            if &ft * &v.sn_gen(m, j) != &w.sn_gen(m, j) * &fj {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `f` is an isomorphism of modules.
pub fn check_intertwiner(v: &WreathModule, w: &WreathModule, f: &Morphism) -> Result<bool> {
    let tuples: BTreeSet<&Tuple> = v.support().keys().chain(w.support().keys()).collect();
    for j in &tuples {
        let fj = component(f, j, w.dim(j), v.dim(j))?;
        if v.dim(j) != w.dim(j) || fj.rank() != v.dim(j) {
            return Ok(false);
        }
    }
    check_morphism(v, w, f)
}

pub fn identity_morphism(v: &WreathModule) -> Morphism {
    v.support().iter().map(|(j, &d)| (j.clone(), Mat::identity(d))).collect()
}
