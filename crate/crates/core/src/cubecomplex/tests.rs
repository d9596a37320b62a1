use super::*;
use crate::corpus::{corpus, simple_module, tensor_power};
use crate::quiver::affine_a1;
use crate::ratmat::{Mat, Scalar};
use crate::reflect::reflection_functor;
use crate::symg::RepMatrices;

fn ones_cube(size: usize) -> Cube {
    let mut c = Cube::new(size, vec![1; 1 << size]).unwrap();
    for j in 0..(1u32 << size) {
        for p in (0..size).filter(|&p| j & (1 << p) == 0) {
            c.set_map(j, p, Mat::identity(1)).unwrap();
        }
    }
    c
}

#[test]
fn identity_square_is_acyclic() {
    let x = complex_from_cube(&ones_cube(1)).unwrap();
    assert_eq!(cohomology(&x).dims, vec![0, 0]);
    let x = complex_from_cube(&ones_cube(2)).unwrap();
    assert_eq!(x.dims, vec![1, 2, 1]);
    assert_eq!(x.d[0], Mat::from_ints(&[[1], [1]]));
    assert_eq!(x.d[1], Mat::from_ints(&[[1, -1]]));
    assert_eq!(cohomology(&x).dims, vec![0, 0, 0]);
}

#[test]
fn zero_maps_give_binomial_cohomology() {
    let c = Cube::new(3, vec![1; 8]).unwrap();
    let x = complex_from_cube(&c).unwrap();
    assert_eq!(cohomology(&x).dims, vec![1, 3, 3, 1]);
}

#[test]
fn single_term_complex() {
    let x = Complex::new(vec![1], vec![]).unwrap();
    assert_eq!(cohomology(&x).dims, vec![1]);
    assert_eq!(cohomology(&x).h0_basis, Mat::identity(1));
}

#[test]
fn non_commutative_cube_is_rejected() {
    let mut c = ones_cube(2);
    c.set_map(0, 0, Mat::from_ints(&[[2]])).unwrap();
    assert!(complex_from_cube(&c).is_err());
}

#[test]
fn coordinate_idempotents() {
    let psis = [Mat::from_ints(&[[1, 0], [0, 0]]), Mat::from_ints(&[[0, 0], [0, 1]])];
    let c = idempotent_cube(&psis).unwrap();
    assert_eq!((0..4).map(|j| c.dim(j)).collect::<Vec<_>>(), vec![2, 1, 1, 0]);
    let h = cohomology(&complex_from_cube(&c).unwrap());
    assert_eq!(h.dims, vec![0, 0, 0]);
    assert!(idempotent_cube(&[Mat::from_ints(&[[2]])]).is_err());
}

#[test]
fn cone_on_small_cubes() {
    for c in [ones_cube(2), ones_cube(3), Cube::new(2, vec![1, 2, 0, 1]).unwrap()] {
        for q in 0..c.size() {
            assert!(cone_check(&c, q).unwrap().pass());
        }
    }
}

#[test]
fn s1_cube() {
    let s1 = simple_module(&affine_a1(), &[(1, 1), (0, 1)], 1);
    let cubes = module_cube(&s1, 0).unwrap();
    let (j, c) = &cubes[0];
    assert_eq!(j, &vec![0]);
    assert_eq!((c.dim(0), c.dim(1)), (2, 0));
    assert_eq!(cubes[1].0, vec![1]);
    assert_eq!(cubes[1].1.size(), 0);
}

#[test]
fn tensor_square_cohomology_and_euler() {
    let s1 = simple_module(&affine_a1(), &[(1, 1), (0, 1)], 1);
    let v = tensor_power(&s1, RepMatrices::trivial(2)).unwrap();
    let cubes = module_cube(&v, 0).unwrap();
    let c00 = &cubes.iter().find(|(j, _)| j == &vec![0, 0]).unwrap().1;
    assert_eq!((0..4).map(|m| c00.dim(m)).collect::<Vec<_>>(), vec![4, 0, 0, 0]);

    let h = module_cohomology(&v, 0).unwrap();
    assert_eq!(h.values().map(|c| c.dims[0]).sum::<usize>(), 9);
    assert!(h.values().all(Cohomology::higher_vanish));

    let e = euler_characteristic(&v, 0).unwrap();
    let expect: Vec<(Vec<usize>, i64)> = vec![(vec![0, 0], 4), (vec![0, 1], 2), (vec![1, 0], 2), (vec![1, 1], 1)];
    assert_eq!(e.per_tuple.into_iter().collect::<Vec<_>>(), expect);
    let id_value = e.character.iter().find(|(mu, _)| mu.parts() == [1, 1]).unwrap().1.clone();
    assert_eq!(id_value, Scalar::int(9));
    let fv = reflection_functor(&v, 0).unwrap().module;
    assert_eq!(e.character, module_character(&fv));
}

#[test]
fn h0_matches_functor_kernels_on_corpus() {
    for entry in corpus().unwrap() {
        for i in 0..entry.module.quiver().n_vertices() {
            let out = reflection_functor(&entry.module, i).unwrap();
            let h = module_cohomology(&entry.module, i).unwrap();
            for (j, c) in &h {
                match out.kernels.get(j) {
                    Some(k) => assert_eq!(&c.h0_basis, k, "{} {j:?}", entry.name),
                    None => assert_eq!(c.dims[0], 0, "{} {j:?}", entry.name),
                }
            }
        }
    }
}

#[test]
fn zero_module_has_empty_report() {
    let s1 = simple_module(&affine_a1(), &[(1, 1), (0, 1)], 1);
    let z = crate::wreathmod::WreathModule::zero(s1.params);
    assert!(module_cube(&z, 0).unwrap().is_empty());
    let e = euler_characteristic(&z, 0).unwrap();
    assert!(e.per_tuple.is_empty());
    assert!(e.character.iter().all(|(_, v)| v.is_zero()));
}
