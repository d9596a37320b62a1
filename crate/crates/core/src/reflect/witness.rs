use std::collections::BTreeSet;

use super::bigspace::SinkContext;
use super::functor::{generic_failure, reflection_functor};
use crate::ratmat::Mat;
use crate::wreathmod::{check_intertwiner, Morphism, Tuple, WreathModule};
use crate::{Error, Result};

/// An explicit isomorphism `V → F_i F_i(V)`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub twice: WreathModule,
    pub map: Morphism,
    pub verified: bool,
}

/// Build `μ_{j,p_1} ⋯ μ_{j,p_r}: V_j → V(j, Δ(j))` and read it in the basis of
/// `F_i F_i(V)_j`. Requires generic parameters at `i`.
pub fn involution_witness(v: &WreathModule, i: usize) -> Result<Witness> {
    let p = &v.params;
    if i >= p.quiver.n_vertices() {
        return Err(Error::UnknownVertex(i.to_string()));
    }
    if let Some((k, sign)) = generic_failure(&p.lambda[i], &p.nu, p.n) {
        return Err(Error::NotGeneric {
            vertex: p.quiver.vertex_name(i).to_string(),
            detail: format!("λ_i {} {k}ν = 0", if sign > 0 { "+" } else { "-" }),
        });
    }
    let once = reflection_functor(v, i)?;
    let twice = reflection_functor(&once.module, i)?;
    let ctx = SinkContext::new(&once.sink, i)?;
    let tuples: BTreeSet<&Tuple> = v.support().keys().chain(twice.module.support().keys()).collect();
    let mut map = Morphism::new();
    for j in tuples {
        let d = ctx.delta(j);
        let mut acc = Mat::identity(v.dim(j));
        for k in (0..d.len()).rev() {
            acc = &ctx.mu(j, &d[k..], d[k]) * &acc;
        }
        let m = match twice.kernels.get(j) {
            Some(kt) => kt.solve_columns(&acc)?,
            None if acc.is_zero() => Mat::zeros(0, v.dim(j)),
            None => return Err(Error::NotInSpan),
        };
        map.insert(j.clone(), m);
    }
    let verified = check_intertwiner(v, &twice.module, &map)?;
    Ok(Witness { twice: twice.module, map, verified })
}
