mod common;

use std::collections::BTreeMap;

use common::{dims, find_isomorphism, module};
use proptest::prelude::*;
use wreath_reflect::quiver::cycle;
use wreath_reflect::reflect::{check_identities, involution_witness, is_generic, reflection_functor, sink_form};
use wreath_reflect::wreathmod::{direct_sum, graph_automorphism_transport, verify_relations};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflection_output_satisfies_relations(v in module(), i in 0usize..3) {
        let i = i % v.quiver().n_vertices();
        let out = reflection_functor(&v, i).unwrap();
        prop_assert!(verify_relations(&out.module).pass());
        prop_assert_eq!(&out.module.params.lambda, &v.quiver().dual_reflection(i, &v.params.lambda).unwrap());
        prop_assert_eq!(&out.module.params.nu, &v.params.nu);
    }

    #[test]
    fn sink_identities_hold(v in module(), i in 0usize..3) {
        let i = i % v.quiver().n_vertices();
        let rep = check_identities(&sink_form(&v, i).unwrap(), i).unwrap();
        prop_assert!(rep.pass(), "{:?}", rep.failures.first());
    }

    #[test]
    fn generic_reflection_is_an_involution(v in module(), i in 0usize..3) {
        let i = i % v.quiver().n_vertices();
        let p = &v.params;
        prop_assume!(is_generic(&p.lambda[i], &p.nu, p.n));
        let w = involution_witness(&v, i).unwrap();
        prop_assert!(w.verified);
        prop_assert_eq!(dims(&w.twice), dims(&v));
    }

    #[test]
    fn functor_is_additive(v in module(), i in 0usize..3) {
        let i = i % v.quiver().n_vertices();
        let p = &v.params;
        prop_assume!(is_generic(&p.lambda[i], &p.nu, p.n));
        let w = reflection_functor(&v, i).unwrap().module;
        let big = reflection_functor(&direct_sum(&v, &v).unwrap(), i).unwrap().module;
        let doubled: BTreeMap<Vec<usize>, usize> = w.support().iter().map(|(j, d)| (j.clone(), 2 * d)).collect();
        prop_assert_eq!(dims(&big), doubled);
    }

    #[test]
    fn rotation_commutes_with_reflection(v in module(), i in 0usize..3) {
        prop_assume!(v.quiver() == &cycle(3) && v.total_dim() <= 4);
        let g = [1usize, 2, 0];
        let lhs = graph_automorphism_transport(&reflection_functor(&v, i).unwrap().module, &g).unwrap();
        let moved = graph_automorphism_transport(&v, &g).unwrap();
        let rhs = reflection_functor(&moved, g[i]).unwrap().module;
        prop_assert_eq!(&lhs.params, &rhs.params);
        prop_assert!(find_isomorphism(&lhs, &rhs).is_some());
    }
}
