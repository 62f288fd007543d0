use acvar_core::quiver::{
    classify_root, component_count, expected_dim, is_sigma_lambda, r_lambda, ringel,
    sigma_prime_decomps, tits_p, AffineQuiver, DimVector, Limits, Quiver, Weight,
};
use proptest::prelude::*;

fn quiver_strategy() -> impl Strategy<Value = Quiver> {
    (1usize..=3).prop_flat_map(|v| {
        prop::collection::vec((0..v, 0..v), 0..=4).prop_map(move |es| Quiver {
            vertices: v,
            edges: es.into_iter().map(|(a, b)| [a, b]).collect(),
        })
    })
}

fn dims(len: usize) -> impl Strategy<Value = DimVector> {
    prop::collection::vec(0u32..=3, len).prop_map(DimVector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn form_expands_bilinearly((q, a, b) in quiver_strategy().prop_flat_map(|q| {
        let v = q.vertices;
        (Just(q), dims(v), dims(v))
    })) {
        let s = a.add(&b);
        let lhs = ringel(&q, &s, &s).unwrap();
        let rhs = ringel(&q, &a, &a).unwrap() + ringel(&q, &b, &b).unwrap()
            + ringel(&q, &a, &b).unwrap() + ringel(&q, &b, &a).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(tits_p(&q, &s).unwrap(), 1 - lhs);
    }

    #[test]
    fn decompositions_audit((q, a) in quiver_strategy().prop_flat_map(|q| {
        let v = q.vertices;
        (Just(q), dims(v))
    })) {
        prop_assume!(!a.is_zero());
        prop_assume!(classify_root(&q, &a).unwrap().is_some());
        let lambda = Weight::zero(q.vertices);
        match sigma_prime_decomps(&q, &lambda, &a, Limits::default()) {
            Ok(ds) => {
                let roots: Vec<DimVector> = r_lambda(&q, &lambda, &a).unwrap().into_iter().map(|r| r.vector).collect();
                let p_alpha = tits_p(&q, &a).unwrap();
                prop_assert!(ds.iter().any(|d| d.parts == vec![a.clone()]));
                for d in &ds {
                    prop_assert_eq!(&d.sum(q.vertices), &a);
                    prop_assert!(d.parts.iter().all(|p| roots.contains(p)));
                    let s: i64 = d.parts.iter().map(|p| tits_p(&q, p).unwrap()).sum();
                    prop_assert_eq!(s, p_alpha);
                }
                // Looser caps never change the answer.
                let loose = Limits { max_nodes: u64::MAX, ..Limits::default() };
                prop_assert_eq!(sigma_prime_decomps(&q, &lambda, &a, loose).unwrap(), ds.clone());
                if is_sigma_lambda(&q, &lambda, &a, Limits::default()).unwrap() {
                    prop_assert_eq!(ds.len(), 1);
                }
            }
            Err(acvar_core::Error::NotSigmaPrime { p_sum, p_alpha, .. }) => prop_assert!(p_sum > p_alpha),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

#[test]
fn framed_affine_dimensions() {
    for a in [
        AffineQuiver::jordan(),
        AffineQuiver::cyclic(1),
        AffineQuiver::cyclic(2),
        AffineQuiver::cyclic(3),
        AffineQuiver::d4(),
    ] {
        for n in 1..=6 {
            let f = a.frame(n);
            assert_eq!(
                expected_dim(&f.quiver, &f.alpha).unwrap(),
                f.closed_form_dim()
            );
        }
    }
}

#[test]
fn framed_cyclic_counts() {
    for n in 1..=3 {
        let f = AffineQuiver::cyclic(1).frame(n);
        let c = component_count(&f.quiver, &Weight::zero(3), &f.alpha, Limits::default()).unwrap();
        assert_eq!(c, n as usize + 1);
    }
}
