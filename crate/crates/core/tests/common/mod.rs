#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use wreath_reflect::corpus::{corpus, one_one_module, simple_module, tensor_power};
use wreath_reflect::quiver::{affine_a1, cycle, Quiver};
use wreath_reflect::reflect::reflection_functor;
use wreath_reflect::symg::{partitions, seminormal_rep, Perm, RepMatrices, YoungDiagram};
use wreath_reflect::wreathmod::{build_induced_zero_e, check_intertwiner, Morphism, Params, WreathModule};
use wreath_reflect::{Mat, Scalar};

pub const MAX_DIM: usize = 6;

pub fn grid() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(a, b)| Scalar::frac(a, b))
}

pub fn nonzero() -> impl Strategy<Value = Scalar> {
    grid().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn quiver(k: usize) -> Quiver {
    if k == 0 {
        affine_a1()
    } else {
        cycle(3)
    }
}

fn max_dim(v: &WreathModule) -> usize {
    v.support().values().copied().max().unwrap_or(0)
}

/// Apply the letters of `word` that keep every graded piece small.
pub fn apply_small(mut v: WreathModule, word: &[usize]) -> WreathModule {
    for &i in word {
        let i = i % v.quiver().n_vertices();
        if let Ok(out) = reflection_functor(&v, i) {
            if max_dim(&out.module) <= MAX_DIM {
                v = out.module;
            }
        }
    }
    v
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0usize..3, 0..3)
}

fn from_corpus() -> impl Strategy<Value = WreathModule> {
    let entries: Vec<WreathModule> = corpus().unwrap().into_iter().map(|e| e.module).collect();
    (0..entries.len(), word()).prop_map(move |(k, w)| apply_small(entries[k].clone(), &w))
}

fn rectangle() -> impl Strategy<Value = YoungDiagram> {
    prop_oneof![
        Just(YoungDiagram::row(1)),
        Just(YoungDiagram::row(2)),
        Just(YoungDiagram::column(2)),
        Just(YoungDiagram::row(3)),
        Just(YoungDiagram::column(3)),
    ]
}

/// `X ⊗ 𝒩↑` for one rectangle over weights meeting the weight condition.
fn induced() -> impl Strategy<Value = WreathModule> {
    (0usize..2, rectangle(), nonzero(), 0usize..3, proptest::collection::vec(grid(), 3), word()).prop_map(
        |(k, x, nu, v, mut lambda, w)| {
            let q = quiver(k);
            let nv = q.n_vertices();
            lambda.truncate(nv);
            let v = v % nv;
            let (a, b) = x.contents().rectangle.unwrap();
            lambda[v] = &nu * &Scalar::int(a as i64 - b as i64);
            let p = Params::new(q, x.size(), lambda, nu).unwrap();
            apply_small(build_induced_zero_e(&p, &[(x, v)]).unwrap(), &w)
        },
    )
}

/// An `n = 1` module: a simple or the `(1,1)` module, moved by reflections.
fn small_n1() -> impl Strategy<Value = WreathModule> {
    (0usize..3, 0usize..3, proptest::collection::vec((-3i64..=3, 1i64..=2), 3), word()).prop_map(|(k, v, mut l, w)| {
        let base = if k == 2 {
            one_one_module()
        } else {
            let q = quiver(k);
            let nv = q.n_vertices();
            l.truncate(nv);
            let v = v % nv;
            l[v] = (0, 1);
            simple_module(&q, &l, v)
        };
        apply_small(base, &w)
    })
}

fn rep() -> impl Strategy<Value = RepMatrices> {
    (1usize..=3).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |k| seminormal_rep(&ps[k]))
    })
}

fn tensor() -> impl Strategy<Value = WreathModule> {
    (small_n1(), rep()).prop_filter_map("too large", |(y, x)| {
        let v = tensor_power(&y, x).ok()?;
        (max_dim(&v) <= MAX_DIM).then_some(v)
    })
}

/// Small modules over `Â₁` and `Â₂` that satisfy the relations.
pub fn module() -> impl Strategy<Value = WreathModule> {
    prop_oneof![from_corpus(), induced(), tensor(), small_n1()]
}

pub fn dims(v: &WreathModule) -> BTreeMap<Vec<usize>, usize> {
    v.support().clone()
}

/// Search the solution space of the intertwining equations for an
/// invertible solution.
pub fn find_isomorphism(v: &WreathModule, w: &WreathModule) -> Option<Morphism> {
    if v.support() != w.support() {
        return None;
    }
    let tuples: Vec<Vec<usize>> = v.support().keys().cloned().collect();
    let mut offset = BTreeMap::new();
    let mut total = 0;
    for j in &tuples {
        offset.insert(j.clone(), total);
        total += w.dim(j) * v.dim(j);
    }
    let var = |j: &Vec<usize>, r: usize, c: usize| offset.get(j).map(|o| o + r * v.dim(j) + c);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut constrain = |t: Vec<usize>, j: Vec<usize>, av: Mat, aw: Mat| {
        for r in 0..w.dim(&t) {
            for c in 0..v.dim(&j) {
                let mut row = vec![Scalar::zero(); total];
                for k in 0..v.dim(&t) {
                    if let Some(x) = var(&t, r, k) {
                        row[x] += av.get(k, c).clone();
                    }
                }
                for k in 0..w.dim(&j) {
                    if let Some(x) = var(&j, k, c) {
                        row[x] -= aw.get(r, k).clone();
                    }
                }
                rows.push(row);
            }
        }
    };
    let q = v.quiver().clone();
    for j in v.support().keys() {
        for l in 0..v.n() {
            for a in q.arrows().filter(|&a| q.tail(a) == j[l]) {
                constrain(v.edge_target(a, l, j), j.clone(), v.edge(a, l, j), w.edge(a, l, j));
            }
        }
        for m in 0..v.n() - 1 {
            constrain(Perm::adjacent(v.n(), m).act_on(j), j.clone(), v.sn_gen(m, j), w.sn_gen(m, j));
        }
    }
    let n_rows = rows.len();
    let system = Mat::from_data(n_rows, total, rows.into_iter().flatten().collect()).unwrap();
    let basis = system.kernel_basis();
    for seed in 1..8i64 {
        let coeffs: Vec<Scalar> = (0..basis.cols()).map(|k| Scalar::int((k as i64 + 1) * seed % 7 + 1)).collect();
        let x = &basis * &Mat::column(coeffs);
        let f: Morphism = tuples
            .iter()
            .map(|j| {
                let m = Mat::from_fn(w.dim(j), v.dim(j), |r, c| x.get(var(j, r, c).unwrap(), 0).clone());
                (j.clone(), m)
            })
            .collect();
        if check_intertwiner(v, w, &f).unwrap_or(false) {
            return Some(f);
        }
    }
    None
}
