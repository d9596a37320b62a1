use std::collections::{BTreeMap, BTreeSet};

use super::module::{Params, Tuple, WreathModule};
use crate::ratmat::Mat;
use crate::symg::{coset_step, induce_rep, seminormal_rep, tensor_matrix, young_coset_reps, Perm, RepMatrices, YoungDiagram};
use crate::{Error, Result};

/// `X⊗𝒩↑`: the module induced from the Young subgroup with every edge
/// acting by zero. Block `ℓ` carries the seminormal irreducible of `X_ℓ` and
/// sits at vertex `i_ℓ`.
pub fn build_induced_zero_e(params: &Params, blocks: &[(YoungDiagram, usize)]) -> Result<WreathModule> {
    let n = params.n;
    let sizes: Vec<usize> = blocks.iter().map(|(x, _)| x.size()).collect();
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch(format!("diagram sizes {sizes:?} do not sum to n = {n}")));
    }
    let vertices: BTreeSet<usize> = blocks.iter().map(|b| b.1).collect();
    if vertices.len() != blocks.len() {
        return Err(Error::InvalidArgument("block vertices must be pairwise distinct".into()));
    }
    if let Some(&v) = vertices.iter().find(|&&v| v >= params.quiver.n_vertices()) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let reps: Vec<RepMatrices> = blocks.iter().map(|(x, _)| seminormal_rep(x)).collect();
    let paired: Vec<(usize, RepMatrices)> = sizes.iter().copied().zip(reps.iter().cloned()).collect();
    let induced = induce_rep(n, &paired)?;
    let base: Tuple = blocks
        .iter()
        .flat_map(|(x, v)| std::iter::repeat_n(*v, x.size()))
        .collect();
    let tuples: Vec<Tuple> = induced.cosets.iter().map(|c| c.act_on(&base)).collect();

    let mut module = WreathModule::zero(params.clone());
    for t in &tuples {
        module.set_dim(t.clone(), induced.inner_dim);
    }
    for m in 0..n.saturating_sub(1) {
        let g = Perm::adjacent(n, m);
        for c in 0..tuples.len() {
            let (_, hs) = coset_step(&sizes, &induced.cosets, &g, c);
            module.set_sn(m, tuples[c].clone(), tensor_matrix(&reps, &hs));
        }
    }
    Ok(module)
}

/// One summand `σ_c(X ⊗ Y_{j'})` of a graded piece of an outer tensor module.
#[derive(Clone, Debug)]
struct Component {
    coset: usize,
    base: Tuple,
    offset: usize,
    slot_dims: Vec<usize>,
}

/// `X⊗Y↑` for `ν = 0`: factor `ℓ` pairs an S_{n_ℓ} representation `X_ℓ` with
/// an `n = 1` module `Y_ℓ`, placed in `n_ℓ` consecutive slots.
pub fn build_outer_tensor(params: &Params, factors: &[(RepMatrices, WreathModule)]) -> Result<WreathModule> {
    let n = params.n;
    let sizes: Vec<usize> = factors.iter().map(|(x, _)| x.degree).collect();
    if sizes.iter().sum::<usize>() != n {
        return Err(Error::SizeMismatch(format!("factor degrees {sizes:?} do not sum to n = {n}")));
    }
    for (k, (_, y)) in factors.iter().enumerate() {
        if y.n() != 1 || y.quiver() != &params.quiver {
            return Err(Error::InvalidArgument(format!("factor {} is not an n = 1 module on this quiver", k + 1)));
        }
        if factors[..k].iter().any(|(_, z)| z.support() == y.support() && z.stored_edges().eq(y.stored_edges())) {
            return Err(Error::InvalidArgument(format!("factor {} repeats an earlier module", k + 1)));
        }
    }
    let slot_block: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
    let reps: Vec<RepMatrices> = factors.iter().map(|f| f.0.clone()).collect();
    let x_dim: usize = reps.iter().map(|r| r.dim).product();
    let cosets = young_coset_reps(&sizes);
    let ys: Vec<&WreathModule> = factors.iter().map(|f| &f.1).collect();
    let slot_dim = |k: usize, v: usize| ys[slot_block[k]].dim(&[v]);

    // Every base tuple with all slots nonzero.
    let mut bases: Vec<Tuple> = vec![Vec::new()];
    for k in 0..n {
        let verts: Vec<usize> = ys[slot_block[k]].support().keys().map(|t| t[0]).collect();
        bases = bases
            .into_iter()
            .flat_map(|b| verts.iter().map(move |&v| [b.clone(), vec![v]].concat()))
            .collect();
    }
    let mut layout: BTreeMap<Tuple, Vec<Component>> = BTreeMap::new();
    for c in 0..cosets.len() {
        for b in &bases {
            let j = cosets[c].act_on(b);
            let slot_dims: Vec<usize> = b.iter().enumerate().map(|(k, &v)| slot_dim(k, v)).collect();
            layout.entry(j).or_default().push(Component { coset: c, base: b.clone(), offset: 0, slot_dims });
        }
    }
    let mut module = WreathModule::zero(params.clone());
    for (j, comps) in layout.iter_mut() {
        comps.sort_by_key(|c| c.coset);
        let mut off = 0;
        for comp in comps.iter_mut() {
            comp.offset = off;
            off += x_dim * comp.slot_dims.iter().product::<usize>();
        }
        module.set_dim(j.clone(), off);
    }
    let find = |j: &Tuple, coset: usize| layout.get(j).and_then(|cs| cs.iter().find(|c| c.coset == coset));

    let q = &params.quiver;
    for (j, comps) in &layout {
        for p in 0..n {
            for a in q.arrows().filter(|&a| q.tail(a) == j[p]) {
                let target = module.edge_target(a, p, j);
                let mut mat = Mat::zeros(module.dim(&target), module.dim(j));
                for comp in comps {
                    let k = cosets[comp.coset].inverse().apply(p);
                    let mut new_base = comp.base.clone();
                    new_base[k] = q.head(a);
                    let Some(dst) = find(&target, comp.coset) else { continue };
                    let y = ys[slot_block[k]];
                    let mut block = Mat::identity(x_dim);
                    for s in 0..n {
                        let factor = if s == k {
                            y.edge(a, 0, &[comp.base[s]])
                        } else {
                            Mat::identity(comp.slot_dims[s])
                        };
                        block = block.kron(&factor);
                    }
                    mat.set_block(dst.offset, comp.offset, &block);
                }
                module.set_edge(a, p, j.clone(), mat);
            }
        }
        for m in 0..n.saturating_sub(1) {
            let g = Perm::adjacent(n, m);
            let target = g.act_on(j);
            let mut mat = Mat::zeros(module.dim(&target), module.dim(j));
            for comp in comps {
                let (c2, hs) = coset_step(&sizes, &cosets, &g, comp.coset);
                let h = cosets[c2].inverse().compose(&g.compose(&cosets[comp.coset]));
                let dst = find(&target, c2).expect("induced component");
                debug_assert_eq!(dst.base, h.act_on(&comp.base));
                let block = tensor_matrix(&reps, &hs).kron(&slot_permutation(&comp.slot_dims, &h));
                mat.set_block(dst.offset, comp.offset, &block);
            }
            module.set_sn(m, j.clone(), mat);
        }
    }
    Ok(module)
}

/// Plain place permutation of tensor slots: the factor in slot `k` moves to
/// slot `h(k)`. Slot 0 is the most significant index.
fn slot_permutation(dims: &[usize], h: &Perm) -> Mat {
    let new_dims = h.act_on(dims);
    let total: usize = dims.iter().product();
    let strides = |d: &[usize]| {
        let mut s = vec![1; d.len()];
        for k in (0..d.len().saturating_sub(1)).rev() {
            s[k] = s[k + 1] * d[k + 1];
        }
        s
    };
    let (src_s, dst_s) = (strides(dims), strides(&new_dims));
    let mut out = Mat::zeros(total, total);
    for idx in 0..total {
        let mut dst = 0;
        for k in 0..dims.len() {
            let digit = (idx / src_s[k]) % dims[k];
            dst += digit * dst_s[h.apply(k)];
        }
        out.set(dst, idx, crate::Scalar::one());
    }
    out
}

/// `V ⊕ W` with the first summand's basis first in every graded piece.
pub fn direct_sum(v: &WreathModule, w: &WreathModule) -> Result<WreathModule> {
    if v.params != w.params {
        return Err(Error::InvalidArgument("direct sum of modules over different parameters".into()));
    }
    let mut out = WreathModule::zero(v.params.clone());
    let tuples: BTreeSet<Tuple> = v.support().keys().chain(w.support().keys()).cloned().collect();
    for j in &tuples {
        out.set_dim(j.clone(), v.dim(j) + w.dim(j));
    }
    let q = &v.params.quiver;
    for j in &tuples {
        for l in 0..v.n() {
            for a in q.arrows().filter(|&a| q.tail(a) == j[l]) {
                out.set_edge(a, l, j.clone(), block_diag(&v.edge(a, l, j), &w.edge(a, l, j)));
            }
        }
        for m in 0..v.n().saturating_sub(1) {
            out.set_sn(m, j.clone(), block_diag(&v.sn_gen(m, j), &w.sn_gen(m, j)));
        }
    }
    Ok(out)
}

pub fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let mut out = Mat::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    out
}

/// The one-dimensional `n = 1` module at vertex `i` with all arrows zero.
pub fn simple(params: &Params, i: usize) -> WreathModule {
    let mut m = WreathModule::zero(params.clone());
    m.set_dim(vec![i], 1);
    m
}
