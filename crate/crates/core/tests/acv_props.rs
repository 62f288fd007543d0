use acvar_core::acv::{
    classify_generic, epsilon, moment_map, normal_form, pairing_vanishes, phi, psi, spec_map_f,
    GenericClass, Quadruple,
};
use acvar_core::altpoly::WedgeLabel;
use acvar_core::matrix::RatVector;
use acvar_core::random;
use proptest::prelude::*;
use rand::Rng;

fn component_point(seed: u64, n: usize) -> (Quadruple, usize, random::SeededRng) {
    let mut rng = random::rng(seed);
    let k = rng.gen_range(0..=n);
    let p = random::normal_form_params(&mut rng, n, k, k, 20).unwrap();
    (normal_form(&p).unwrap(), k, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn moment_map_is_equivariant(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = random::rng(seed);
        let q = Quadruple::new(
            random::matrix(&mut rng, n, n, 5),
            random::matrix(&mut rng, n, n, 5),
            random::vector(&mut rng, n, 5),
            random::vector(&mut rng, n, 5),
        ).unwrap();
        let (g, gi) = random::invertible(&mut rng, n, 3);
        prop_assert_eq!(moment_map(&q.conjugate(&g, &gi)), moment_map(&q).conjugate_by(&g, &gi));
    }

    #[test]
    fn constructed_points_pair_to_zero(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = random::rng(seed);
        let kpp = rng.gen_range(0..=n);
        let kp = rng.gen_range(0..=kpp);
        let p = random::normal_form_params(&mut rng, n, kp, kpp, 20).unwrap();
        let (g, gi) = random::invertible(&mut rng, n, 3);
        let q = normal_form(&p).unwrap();
        prop_assert!(pairing_vanishes(&q).unwrap());
        prop_assert!(pairing_vanishes(&q.conjugate(&g, &gi)).unwrap());
        let e = epsilon(&random::vector(&mut rng, n, 9), &random::vector(&mut rng, n, 9)).unwrap();
        prop_assert!(pairing_vanishes(&e).unwrap());
    }

    #[test]
    fn normal_forms_round_trip_through_classification(seed in any::<u64>(), n in 1usize..=5) {
        let (q, k, mut rng) = component_point(seed, n);
        prop_assert_eq!(classify_generic(&q).unwrap(), GenericClass::Component { k });
        let (g, gi) = random::invertible(&mut rng, n, 3);
        prop_assert_eq!(classify_generic(&q.conjugate(&g, &gi)).unwrap(), GenericClass::Component { k });
    }

    #[test]
    fn sections_are_semi_invariant(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = random::rng(seed);
        let mut pairs = Vec::new();
        while pairs.len() < n {
            let pq = (rng.gen_range(0..3u32), rng.gen_range(0..3u32));
            if !pairs.contains(&pq) {
                pairs.push(pq);
            }
        }
        let fs = WedgeLabel::new(pairs).unwrap().monomials();
        let kpp = rng.gen_range(0..=n);
        let kp = rng.gen_range(0..=kpp);
        let q = normal_form(&random::normal_form_params(&mut rng, n, kp, kpp, 9).unwrap()).unwrap();
        let (g, gi) = random::invertible(&mut rng, n, 3);
        let det = g.det().unwrap();
        let moved = q.conjugate(&g, &gi);
        prop_assert_eq!(psi(&fs, &moved).unwrap(), &det * psi(&fs, &q).unwrap());
        prop_assert_eq!(phi(&fs, &moved).unwrap(), phi(&fs, &q).unwrap() / &det);
    }

    #[test]
    fn spectral_pairs_are_orbit_invariants(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = random::rng(seed);
        let x = RatVector((0..n).map(|_| random::small_int(&mut rng, 3)).collect());
        let y = RatVector((0..n).map(|_| random::small_int(&mut rng, 3)).collect());
        let e = epsilon(&x, &y).unwrap();
        let mut expect: Vec<_> = x.0.iter().cloned().zip(y.0.iter().cloned()).collect();
        expect.sort();
        prop_assert_eq!(spec_map_f(&e).unwrap(), expect.clone());
        let (g, gi) = random::invertible(&mut rng, n, 3);
        prop_assert_eq!(spec_map_f(&e.conjugate(&g, &gi)).unwrap(), expect);

        let (q, _, mut rng) = component_point(seed, n);
        let (g, gi) = random::invertible(&mut rng, n, 3);
        prop_assert_eq!(spec_map_f(&q.conjugate(&g, &gi)).unwrap(), spec_map_f(&q).unwrap());
    }

    #[test]
    fn quadruple_json_round_trip(seed in any::<u64>(), n in 1usize..=4) {
        let (q, _, _) = component_point(seed, n);
        let text = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<Quadruple>(&text).unwrap(), q);
    }
}
