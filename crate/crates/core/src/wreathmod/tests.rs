use super::*;
use crate::corpus::{induced_single, one_one_module, simple_module, tensor_power};
use crate::quiver::{affine_a1, cycle, Arrow};
use crate::ratmat::{Mat, Scalar};
use crate::symg::{Perm, RepMatrices, YoungDiagram};

fn a1_params(n: usize, l0: Scalar, l1: Scalar, nu: Scalar) -> Params {
    Params::new(affine_a1(), n, vec![l0, l1], nu).unwrap()
}

#[test]
fn s1_passes_only_when_lambda_1_vanishes() {
    let ok = simple_module(&affine_a1(), &[(1, 1), (0, 1)], 1);
    assert!(verify_relations(&ok).pass());
    let bad = simple_module(&affine_a1(), &[(1, 1), (1, 1)], 1);
    let rep = verify_relations(&bad);
    assert_eq!(rep.failures.len(), 1);
    assert_eq!(rep.failures[0].relation, Relation::Moment { l: 0 });
    assert_eq!(bad.describe_failure(&rep.failures[0]), "relation (i) fails at tuple (1), position 1");
}

#[test]
fn two_point_trivial_module() {
    // relation (i) at (1,1): −λ_1 − ν s₁₂ = −λ_1 − ν on the trivial line
    let p = a1_params(2, Scalar::zero(), Scalar::int(-1), Scalar::one());
    let m = build_induced_zero_e(&p, &[(YoungDiagram::row(2), 1)]).unwrap();
    assert_eq!(m.support().len(), 1);
    assert_eq!(m.dim(&[1, 1]), 1);
    assert_eq!(m.sn_gen(0, &[1, 1]), Mat::from_ints(&[[1]]));
    assert!(verify_relations(&m).pass());
    let wrong = m.clone().with_params(a1_params(2, Scalar::int(-1), Scalar::zero(), Scalar::one()));
    assert!(!verify_relations(&wrong).pass());
}

#[test]
fn induced_supports() {
    let p = a1_params(2, Scalar::one(), Scalar::zero(), Scalar::zero());
    let one = YoungDiagram::row(1);
    let m = build_induced_zero_e(&p, &[(one.clone(), 0), (one.clone(), 1)]).unwrap();
    let supp: Vec<_> = m.support().iter().map(|(j, &d)| (j.clone(), d)).collect();
    assert_eq!(supp, vec![(vec![0, 1], 1), (vec![1, 0], 1)]);
    assert_eq!(m.sn_gen(0, &[0, 1]), Mat::from_ints(&[[1]]));

    let p3 = a1_params(3, Scalar::one(), Scalar::zero(), Scalar::zero());
    let m3 = build_induced_zero_e(&p3, &[(YoungDiagram::row(2), 0), (one, 1)]).unwrap();
    let keys: Vec<_> = m3.support().keys().cloned().collect();
    assert_eq!(keys, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    assert!(m3.support().values().all(|&d| d == 1));
    assert!(m3.check_structure().is_ok());

    assert!(matches!(build_induced_zero_e(&p3, &[(YoungDiagram::row(2), 0)]), Err(crate::Error::SizeMismatch(_))));
}

#[test]
fn induced_with_zero_edges_matches_outer_tensor_at_nu_zero() {
    let q = affine_a1();
    let lam = [(0, 1), (0, 1)];
    let p = Params::new(q.clone(), 2, vec![Scalar::zero(), Scalar::zero()], Scalar::zero()).unwrap();
    let induced = build_induced_zero_e(&p, &[(YoungDiagram::row(1), 0), (YoungDiagram::row(1), 1)]).unwrap();
    let tensor = build_outer_tensor(
        &p,
        &[
            (RepMatrices::trivial(1), simple_module(&q, &lam, 0)),
            (RepMatrices::trivial(1), simple_module(&q, &lam, 1)),
        ],
    )
    .unwrap();
    assert_eq!(induced, tensor);
}

#[test]
fn outer_tensor_of_s1() {
    let s1 = simple_module(&affine_a1(), &[(1, 1), (0, 1)], 1);
    let m = tensor_power(&s1, RepMatrices::trivial(2)).unwrap();
    assert_eq!(m.support().len(), 1);
    assert_eq!(m.sn_gen(0, &[1, 1]), Mat::from_ints(&[[1]]));
    assert!(verify_relations(&m).pass());
    let one = tensor_power(&s1, RepMatrices::trivial(1)).unwrap();
    assert_eq!(one, s1);
}

#[test]
fn outer_tensor_dimension_bookkeeping() {
    let q = affine_a1();
    let zero = [(0, 1), (0, 1)];
    let s1 = simple_module(&q, &zero, 1);
    // dimension vector (2,1): a = (1 0), b = (0 1), stars zero
    let mut y2 = WreathModule::zero(s1.params.clone());
    y2.set_dim(vec![0], 2);
    y2.set_dim(vec![1], 1);
    y2.set_edge(Arrow::plain(0), 0, vec![0], Mat::from_ints(&[[1, 0]]));
    y2.set_edge(Arrow::plain(1), 0, vec![0], Mat::from_ints(&[[0, 1]]));
    assert!(verify_relations(&y2).pass());
    let p = Params::new(q, 2, s1.params.lambda.clone(), Scalar::zero()).unwrap();
    let m = build_outer_tensor(&p, &[(RepMatrices::trivial(1), s1.clone()), (RepMatrices::trivial(1), y2.clone())]).unwrap();
    for j in 0..2usize {
        for k in 0..2usize {
            let expect = s1.dim(&[j]) * y2.dim(&[k]) + y2.dim(&[j]) * s1.dim(&[k]);
            assert_eq!(m.dim(&[j, k]), expect, "tuple ({j},{k})");
        }
    }
    assert!(verify_relations(&m).pass());
}

#[test]
fn reorientation_signs_and_relations() {
    let v = one_one_module();
    assert_eq!(reorient_module(&v, &[]), v);
    let r = reorient_module(&v, &[0]);
    assert_eq!(r.quiver().edges()[0].tail, 1);
    assert_eq!(r.edge(Arrow::plain(0), 0, &[1]), Mat::from_ints(&[[-1]]));
    assert_eq!(r.edge(Arrow::starred(0), 0, &[0]), Mat::from_ints(&[[-1]]));
    assert!(verify_relations(&r).pass());
    assert_eq!(reorient_inverse(&r, &[0]), v);
    let twice = reorient_module(&r, &[0]);
    assert_eq!(twice.edge(Arrow::plain(0), 0, &[0]), -&v.edge(Arrow::plain(0), 0, &[0]));
    assert_eq!(twice.edge(Arrow::starred(0), 0, &[1]), -&v.edge(Arrow::starred(0), 0, &[1]));
}

#[test]
fn swap_automorphism() {
    let s1 = simple_module(&affine_a1(), &[(1, 1), (0, 1)], 1);
    let g = graph_automorphism_transport(&s1, &[1, 0]).unwrap();
    assert_eq!(g.support().keys().cloned().collect::<Vec<_>>(), vec![vec![0]]);
    assert_eq!(g.params.lambda, vec![Scalar::zero(), Scalar::one()]);
    assert!(verify_relations(&g).pass());
    assert_eq!(graph_automorphism_transport(&s1, &[0, 1]).unwrap(), s1);

    let v = one_one_module();
    let gv = graph_automorphism_transport(&v, &[1, 0]).unwrap();
    assert!(verify_relations(&gv).pass());

    let c = simple_module(&cycle(3), &[(1, 1), (0, 1), (2, 1)], 1);
    assert!(graph_automorphism_transport(&c, &[1, 2, 0]).is_ok());
    assert!(graph_automorphism_transport(&c, &[0, 2, 1]).is_ok());
    let c4 = simple_module(&cycle(4), &[(1, 1), (0, 1), (2, 1), (1, 1)], 1);
    assert!(matches!(graph_automorphism_transport(&c4, &[1, 0, 2, 3]), Err(crate::Error::NotAutomorphism(_))));
}

#[test]
fn intertwiner_examples() {
    let v = one_one_module();
    let id = identity_morphism(&v);
    assert!(check_intertwiner(&v, &v, &id).unwrap());
    let two: Morphism = id.iter().map(|(j, m)| (j.clone(), m.scale(&Scalar::int(2)))).collect();
    assert!(check_intertwiner(&v, &v, &two).unwrap());
    let mut broken = id.clone();
    broken.insert(vec![1], Mat::zeros(1, 1));
    assert!(!check_intertwiner(&v, &v, &broken).unwrap());
    let mut bad_shape = id;
    bad_shape.insert(vec![1], Mat::zeros(2, 1));
    assert!(check_intertwiner(&v, &v, &bad_shape).is_err());
}

#[test]
fn structural_errors_are_reported() {
    let mut v = one_one_module();
    v.set_edge(Arrow::plain(0), 0, vec![0], Mat::from_ints(&[[1, 2]]));
    assert!(!v.structural_violations().is_empty());
    assert!(!verify_relations(&v).pass());

    let p = a1_params(2, Scalar::zero(), Scalar::int(-1), Scalar::one());
    let mut m = build_induced_zero_e(&p, &[(YoungDiagram::row(2), 1)]).unwrap();
    m.set_sn(0, vec![1, 1], Mat::from_ints(&[[2]]));
    assert!(m.check_structure().is_err());
}

#[test]
fn characters() {
    let p = a1_params(2, Scalar::zero(), Scalar::one(), Scalar::one());
    let sign = induced_single(&affine_a1(), &[(0, 1), (1, 1)], Scalar::one(), YoungDiagram::column(2), 1).unwrap();
    assert_eq!(sign.params, p);
    assert_eq!(sign.character(&Perm::adjacent(2, 0)), Scalar::int(-1));
    assert_eq!(sign.character(&Perm::identity(2)), Scalar::one());
    assert!(verify_relations(&sign).pass());
}
