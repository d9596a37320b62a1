use proptest::prelude::*;
use wreath_reflect::quiver::{affine_a1, cycle, pair, Quiver};
use wreath_reflect::Scalar;

fn d4_hat() -> Quiver {
    Quiver::new(
        &["c", "l1", "l2", "l3", "l4"],
        &[("e1", "l1", "c"), ("e2", "c", "l2"), ("e3", "l3", "c"), ("e4", "c", "l4")],
    )
    .unwrap()
}

fn with_loop() -> Quiver {
    Quiver::new(&["0", "1"], &[("x", "0", "0"), ("a", "0", "1")]).unwrap()
}

fn quivers() -> Vec<Quiver> {
    vec![affine_a1(), cycle(3), cycle(4), d4_hat(), with_loop()]
}

fn vectors(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-5i64..=5, n)
}

fn weights(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(a, b)| Scalar::frac(a, b)), n)
}

fn case() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>, i64, i64)> {
    (0usize..5).prop_flat_map(|k| {
        let n = quivers()[k].n_vertices();
        (Just(k), vectors(n), vectors(n), vectors(n), -3i64..=3, -3i64..=3)
    })
}

proptest! {
    #[test]
    fn ringel_form_is_bilinear((k, a, b, c, x, y) in case()) {
        let q = &quivers()[k];
        let comb: Vec<i64> = a.iter().zip(&b).map(|(p, r)| x * p + y * r).collect();
        prop_assert_eq!(q.ringel_form(&comb, &c), x * q.ringel_form(&a, &c) + y * q.ringel_form(&b, &c));
        prop_assert_eq!(q.ringel_form(&c, &comb), x * q.ringel_form(&c, &a) + y * q.ringel_form(&c, &b));
        prop_assert_eq!(q.symmetrized_form(&a, &b), q.ringel_form(&a, &b) + q.ringel_form(&b, &a));
    }

    #[test]
    fn reflections_preserve_pairings((k, a, b, _, _, _) in case(), seed in 0usize..100) {
        let q = &quivers()[k];
        let lambda: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| Scalar::frac(x + 2 * y, 1 + seed as i64 % 3)).collect();
        for i in 0..q.n_vertices() {
            if q.has_loop(i) {
                prop_assert!(q.simple_reflection(i, &a).is_err());
                continue;
            }
            let (sa, sb) = (q.simple_reflection(i, &a).unwrap(), q.simple_reflection(i, &b).unwrap());
            prop_assert_eq!(q.symmetrized_form(&sa, &sb), q.symmetrized_form(&a, &b));
            let rl = q.dual_reflection(i, &lambda).unwrap();
            prop_assert_eq!(pair(&rl, &sa), pair(&lambda, &a));
            prop_assert_eq!(q.simple_reflection(i, &sa).unwrap(), a.clone());
            prop_assert_eq!(q.dual_reflection(i, &rl).unwrap(), lambda.clone());
        }
    }

    #[test]
    fn weight_words_invert(w in proptest::collection::vec(0usize..3, 0..6), l in weights(3)) {
        let q = cycle(3);
        let there = q.reflect_weight_word(&w, &l).unwrap();
        let back: Vec<usize> = w.iter().rev().copied().collect();
        prop_assert_eq!(q.reflect_weight_word(&back, &there).unwrap(), l);
    }
}

#[test]
fn delta_is_orthogonal_to_simples() {
    let cases = [(affine_a1(), vec![1, 1]), (cycle(3), vec![1, 1, 1]), (d4_hat(), vec![2, 1, 1, 1, 1])];
    for (q, delta) in cases {
        assert_eq!(q.affine_data(), Some(delta.clone()));
        for i in 0..q.n_vertices() {
            assert_eq!(q.symmetrized_form(&delta, &q.epsilon(i)), 0);
        }
    }
    assert_eq!(with_loop().affine_data(), None);
}
