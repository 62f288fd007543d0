use acvar_core::altpoly::{
    a_basis, ak_basis, alternant, freeness_certificate, is_alternating, restriction_bridge,
    PolyEchelon, WedgeLabel,
};
use acvar_core::matrix::RatVector;
use acvar_core::random;
use proptest::prelude::*;

fn label(n: usize) -> impl Strategy<Value = WedgeLabel> {
    prop::collection::hash_set((0u32..4, 0u32..4), n)
        .prop_map(|s| WedgeLabel::new(s.into_iter().collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn alternants_alternate(l in (1usize..=3).prop_flat_map(label)) {
        let f = alternant(&l);
        prop_assert!(!f.is_zero());
        prop_assert!(is_alternating(&f));
    }

    #[test]
    fn bridge_holds_pointwise(l in (2usize..=3).prop_flat_map(label), seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let n = l.n();
        let x = random::vector(&mut rng, n, 20);
        let y = RatVector(random::distinct_rationals(&mut rng, n, 20));
        prop_assert!(restriction_bridge(&[l], &x, &y).unwrap().holds());
    }
}

#[test]
fn products_of_powers_nest() {
    let a1 = ak_basis(2, 1, (3, 2)).unwrap();
    let a2 = ak_basis(2, 2, (3, 2)).unwrap();
    let a3 = ak_basis(2, 3, (3, 2)).unwrap();
    for (&d, piece) in &a3.pieces {
        let mut span = PolyEchelon::new();
        for f in piece {
            span.insert(f);
        }
        for (&d1, p1) in &a1.pieces {
            if d1.0 > d.0 || d1.1 > d.1 {
                continue;
            }
            for f in p1 {
                for g in a2.piece((d.0 - d1.0, d.1 - d1.1)) {
                    assert!(span.contains(&f.mul(g)), "A^1 A^2 not inside A^3 at {d:?}");
                }
            }
        }
    }
    for (&d, piece) in &a1.pieces {
        assert_eq!(piece.len(), a_basis(2, d).len());
    }
}

#[test]
fn certificates_are_monotone() {
    let big = freeness_certificate(2, 2, (3, 3)).unwrap();
    assert!(big.is_certified());
    for bound in [(1, 1), (2, 3), (3, 2)] {
        let small = freeness_certificate(2, 2, bound).unwrap();
        assert!(small.is_certified());
        let expect: Vec<_> = big
            .generators
            .iter()
            .filter(|g| g.bidegree.0 <= bound.0 && g.bidegree.1 <= bound.1)
            .map(|g| g.bidegree)
            .collect();
        let got: Vec<_> = small.generators.iter().map(|g| g.bidegree).collect();
        assert_eq!(got, expect);
    }
}

#[test]
fn bridge_with_two_factors() {
    let mut rng = random::rng(2);
    let labels = [
        WedgeLabel::new(vec![(0, 0), (1, 0)]).unwrap(),
        WedgeLabel::new(vec![(1, 1), (0, 1)]).unwrap(),
    ];
    for _ in 0..10 {
        let x = random::vector(&mut rng, 2, 20);
        let y = RatVector(random::distinct_rationals(&mut rng, 2, 20));
        assert!(restriction_bridge(&labels, &x, &y).unwrap().holds());
    }
}
