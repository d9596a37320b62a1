//! A fixed family of small modules over `Â₁` and `Â₂` used by tests, the
//! acceptance suite and the guide.

use crate::quiver::{affine_a1, cycle, Arrow, Quiver};
use crate::ratmat::{Mat, Scalar};
use crate::reflect::reflection_functor;
use crate::symg::{RepMatrices, YoungDiagram};
use crate::wreathmod::{build_induced_zero_e, build_outer_tensor, direct_sum, simple, Params, WreathModule};
use crate::Result;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub module: WreathModule,
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

fn weight(v: &[(i64, i64)]) -> Vec<Scalar> {
    v.iter().map(|&(n, d)| q(n, d)).collect()
}

fn params(quiver: &Quiver, n: usize, lambda: &[(i64, i64)], nu: Scalar) -> Params {
    Params::new(quiver.clone(), n, weight(lambda), nu).expect("valid params")
}

/// `S_i` for `n = 1`.
pub fn simple_module(quiver: &Quiver, lambda: &[(i64, i64)], i: usize) -> WreathModule {
    simple(&params(quiver, 1, lambda, Scalar::zero()), i)
}

/// The `n = 1` module on `Â₁` with dimension vector `(1,1)`, `a = 1`,
/// `a* = −1`, `b = b* = 0`, over `λ = (1,−1)`.
pub fn one_one_module() -> WreathModule {
    let quiver = affine_a1();
    let mut m = WreathModule::zero(params(&quiver, 1, &[(1, 1), (-1, 1)], Scalar::zero()));
    m.set_dim(vec![0], 1);
    m.set_dim(vec![1], 1);
    m.set_edge(Arrow::plain(0), 0, vec![0], Mat::from_ints(&[[1]]));
    m.set_edge(Arrow::starred(0), 0, vec![1], Mat::from_ints(&[[-1]]));
    m
}

/// `X ⊗ 𝒩↑` for one diagram at one vertex.
pub fn induced_single(quiver: &Quiver, lambda: &[(i64, i64)], nu: Scalar, diagram: YoungDiagram, vertex: usize) -> Result<WreathModule> {
    let p = params(quiver, diagram.size(), lambda, nu);
    build_induced_zero_e(&p, &[(diagram, vertex)])
}

/// `X ⊗ Y^{⊠n}↑` for a single `n = 1` module `y` and a representation of `S_n`.
pub fn tensor_power(y: &WreathModule, x: RepMatrices) -> Result<WreathModule> {
    let p = Params::new(y.quiver().clone(), x.degree, y.params.lambda.clone(), Scalar::zero())?;
    build_outer_tensor(&p, &[(x, y.clone())])
}

/// The fifteen corpus modules.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let a1 = affine_a1();
    let a2 = cycle(3);
    let s1 = simple_module(&a1, &[(1, 1), (0, 1)], 1);
    let mut out = vec![CorpusEntry { name: "S1 on A1", module: s1.clone() }];
    out.push(CorpusEntry { name: "F0(S1)", module: reflection_functor(&s1, 0)?.module });
    out.push(CorpusEntry { name: "(1,1) module", module: one_one_module() });
    out.push(CorpusEntry { name: "S1xS1 triv", module: tensor_power(&s1, RepMatrices::trivial(2))? });
    out.push(CorpusEntry { name: "S1xS1 sign", module: tensor_power(&s1, RepMatrices::sign(2))? });
    let triv11 = induced_single(&a1, &[(1, 2), (-1, 1)], q(1, 1), YoungDiagram::row(2), 1)?;
    out.push(CorpusEntry { name: "triv at (1,1), nu=1", module: triv11.clone() });
    out.push(CorpusEntry {
        name: "sign at (1,1), nu=1/2",
        module: induced_single(&a1, &[(3, 1), (1, 2)], q(1, 2), YoungDiagram::column(2), 1)?,
    });
    out.push(CorpusEntry {
        name: "triv at (1,1,1), nu=1/3",
        module: induced_single(&a1, &[(1, 1), (-2, 3)], q(1, 3), YoungDiagram::row(3), 1)?,
    });
    out.push(CorpusEntry { name: "F0(triv at (1,1))", module: reflection_functor(&triv11, 0)?.module });
    out.push(CorpusEntry { name: "S1 on A2", module: simple_module(&a2, &[(1, 1), (0, 1), (2, 1)], 1) });
    out.push(CorpusEntry {
        name: "A2 triv at (2,2), nu=1",
        module: induced_single(&a2, &[(1, 1), (1, 2), (-1, 1)], q(1, 1), YoungDiagram::row(2), 2)?,
    });
    out.push(CorpusEntry {
        name: "A2 sign at (0,0,0), nu=1/2",
        module: induced_single(&a2, &[(1, 1), (2, 1), (3, 1)], q(1, 2), YoungDiagram::column(3), 0)?,
    });
    let lam = [(1, 1), (0, 1), (0, 1)];
    let p2 = params(&a2, 2, &lam, Scalar::zero());
    out.push(CorpusEntry {
        name: "A2 S1xS2",
        module: build_outer_tensor(
            &p2,
            &[
                (RepMatrices::trivial(1), simple_module(&a2, &lam, 1)),
                (RepMatrices::trivial(1), simple_module(&a2, &lam, 2)),
            ],
        )?,
    });
    out.push(CorpusEntry { name: "(1,1)x(1,1) triv", module: tensor_power(&one_one_module(), RepMatrices::trivial(2))? });
    out.push(CorpusEntry { name: "S1+S1", module: direct_sum(&s1, &s1)? });
    Ok(out)
}
