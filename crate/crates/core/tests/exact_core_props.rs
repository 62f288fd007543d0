use acvar_core::matrix::RatMatrix;
use acvar_core::perm::Permutation;
use acvar_core::poly::{var_names, MPoly, TermWire};
use acvar_core::random;
use acvar_core::rational::{format_rational, parse_rational};
use acvar_core::spectrum::{charpoly, has_distinct_eigenvalues, rational_spectrum};
use acvar_core::upoly::UniPoly;
use proptest::prelude::*;

/// `g T g^-1` with `T` upper triangular of chosen diagonal.
fn split_matrix(seed: u64, n: usize) -> (RatMatrix, Vec<acvar_core::Rational>) {
    let mut rng = random::rng(seed);
    let diag: Vec<_> = (0..n).map(|_| random::small_int(&mut rng, 3)).collect();
    let mut t = random::matrix(&mut rng, n, n, 5);
    for r in 0..n {
        t[(r, r)] = diag[r].clone();
        for c in 0..r {
            t[(r, c)] = acvar_core::rational::zero();
        }
    }
    let (g, gi) = random::invertible(&mut rng, n, 3);
    (t.conjugate_by(&g, &gi), diag)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spectrum_reassembles_charpoly(seed in any::<u64>(), n in 1usize..=6) {
        let (m, diag) = split_matrix(seed, n);
        let spec = rational_spectrum(&m).unwrap();
        let mut prod = UniPoly::one();
        for (z, mult) in &spec {
            prod = &prod * &UniPoly::linear_root(z).pow(*mult as u32);
        }
        prop_assert_eq!(prod, charpoly(&m).unwrap());
        prop_assert_eq!(spec.iter().map(|s| s.1).sum::<usize>(), diag.len());
    }

    #[test]
    fn kernel_survives_row_scaling(seed in any::<u64>(), rows in 1usize..=5, cols in 1usize..=5) {
        let mut rng = random::rng(seed);
        let mut m = random::matrix(&mut rng, rows, cols, 4);
        // Force some dependence.
        if rows > 1 {
            for c in 0..cols {
                m[(rows - 1, c)] = m[(0, c)].clone() * acvar_core::rational::int(3);
            }
        }
        let (rank, ker) = m.rank_kernel();
        prop_assert_eq!(rank + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        let mut scaled = m.clone();
        let s = random::rational(&mut rng, 7);
        if !num_traits::Zero::is_zero(&s) {
            for c in 0..cols {
                scaled[(0, c)] = scaled[(0, c)].clone() * &s;
            }
            let (r2, k2) = scaled.rank_kernel();
            prop_assert_eq!(r2, rank);
            prop_assert_eq!(k2, ker);
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let vars = var_names("x", 3);
        let f = random::polynomial(&mut rng, vars.clone(), 3, 4, 9);
        let g = random::polynomial(&mut rng, vars, 2, 3, 9);
        prop_assume!(!g.is_zero());
        prop_assert_eq!(f.mul(&g).exact_div(&g).unwrap(), f);
    }

    #[test]
    fn distinctness_is_conjugation_invariant(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = random::rng(seed);
        let m = random::matrix(&mut rng, n, n, 4);
        let (g, gi) = random::invertible(&mut rng, n, 3);
        prop_assert_eq!(has_distinct_eigenvalues(&m).unwrap(), has_distinct_eigenvalues(&m.conjugate_by(&g, &gi)).unwrap());
    }

    #[test]
    fn rational_text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = acvar_core::rational::rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn polynomial_wire_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let vars = var_names("x", 3);
        let f = random::polynomial(&mut rng, vars.clone(), 4, 6, 20).to_c();
        let text = serde_json::to_string(&f.to_wire()).unwrap();
        let wire: Vec<TermWire> = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MPoly::from_wire(vars, &wire).unwrap(), f);
    }

    #[test]
    fn permutation_action_is_a_left_action(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = random::rng(seed);
        let all = Permutation::all(n);
        use rand::Rng;
        let u = all[rng.gen_range(0..all.len())].clone();
        let w = all[rng.gen_range(0..all.len())].clone();
        let f = random::polynomial(&mut rng, var_names("x", n), 3, 4, 9);
        prop_assert_eq!(f.permute(&u).permute(&w), f.permute(&w.compose(&u)));
    }
}
