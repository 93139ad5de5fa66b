use std::collections::HashSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use hnstrat::p1::{self, SplittingType};
use hnstrat::rational::{frac, int};
use hnstrat::slope::{self, compare_slopes, slope_geq, SlopeOrder};
use hnstrat::strata::{self, enumerate_strata};
use hnstrat::{Coweight, Parabolic, QuotientClass, RootDatum, Stratum, WeylElement};

fn data() -> &'static [RootDatum] {
    static DATA: OnceLock<Vec<RootDatum>> = OnceLock::new();
    DATA.get_or_init(|| {
        ["GL:3", "GL:4", "SL:3", "PGL:3", "SC:B2", "Ad:B2", "SC:G2", "SC:B3", "Ad:C3", "SC:A1xA2"]
            .iter()
            .map(|s| RootDatum::parse_named(s).unwrap())
            .collect()
    })
}

/// A datum index, a parabolic subset and an integral coweight.
fn datum_parabolic_lift() -> impl Strategy<Value = (usize, u64, Vec<i64>)> {
    (0..data().len()).prop_flat_map(|k| {
        let rd = &data()[k];
        (Just(k), 0..1u64 << rd.num_simple(), prop::collection::vec(-6i64..=6, rd.rank()))
    })
}

fn splitting_type(n: usize) -> impl Strategy<Value = SplittingType> {
    prop::collection::vec(-4i64..=4, n).prop_map(|v| SplittingType::from_unsorted(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn project_lift_round_trip((k, bits, v) in datum_parabolic_lift()) {
        let rd = &data()[k];
        let ql = rd.quotient(Parabolic::from_bits(bits));
        let c = ql.project(&Coweight(v)).unwrap();
        let lift = ql.lift(&c).unwrap();
        prop_assert_eq!(ql.project(&lift).unwrap(), c.clone());
        prop_assert_eq!(ql.sub(&c, &c), ql.zero());
    }

    #[test]
    fn slope_is_levi_central_and_idempotent((k, bits, v) in datum_parabolic_lift()) {
        let rd = &data()[k];
        let p = Parabolic::from_bits(bits);
        let s = slope::phi_of_lift(rd, p, &v).unwrap();
        for i in p.iter() {
            prop_assert_eq!(rd.pair_root_q(&s.coords, i), int(0));
        }
        let again = slope::phi_rational(rd, p, &s.coords).unwrap();
        prop_assert_eq!(again.coords, s.coords);
    }

    #[test]
    fn semistability_tests_agree((k, bits, v) in datum_parabolic_lift()) {
        let rd = &data()[k];
        let p = Parabolic::from_bits(bits);
        let d = rd.quotient(p).project(&Coweight(v.clone())).unwrap();
        let g = rd.quotient(rd.full()).project(&Coweight(v)).unwrap();
        let w = strata::destabilizing_witness(rd, p, &d, &g).unwrap();
        prop_assert_eq!(w.slope_condition, w.projection_condition);
        prop_assert_eq!(strata::is_destabilizing(rd, p, &d, &g).unwrap(), w.slope_condition);
    }

    #[test]
    fn weyl_action_preserves_pairing(
        (k, _, x) in datum_parabolic_lift(),
        y in prop::collection::vec(-5i64..=5, 4),
        word in prop::collection::vec(0usize..3, 0..8),
    ) {
        let rd = &data()[k];
        let y: Vec<i64> = y.into_iter().cycle().take(rd.rank()).collect();
        let word: Vec<usize> = word.into_iter().filter(|&i| i < rd.num_simple()).collect();
        let w = WeylElement::from_word(rd, &word).unwrap();
        let wx = w.act_coweight(&x);
        let wy = w.act_weight(&y);
        let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(p, q)| p * q).sum::<i64>();
        prop_assert_eq!(dot(&wx, &wy), dot(&x, &y));
        prop_assert_eq!(w.inverse().act_coweight(&wx), x);
    }

    #[test]
    fn dominant_conjugate_is_dominant((k, _, v) in datum_parabolic_lift()) {
        let rd = &data()[k];
        let d = rd.dominant_conjugate(&v);
        prop_assert!(rd.is_dominant(&d));
        prop_assert!(hnstrat::reps::weyl_orbit(rd, &v).contains(&d));
    }

    #[test]
    fn slope_order_is_antisymmetric(a in prop::collection::vec(-5i64..=5, 4), b in prop::collection::vec(-5i64..=5, 4)) {
        let rd = RootDatum::gl(4).unwrap();
        let sa = slope::phi_of_lift(&rd, Parabolic::BOREL, &a).unwrap();
        let sb = slope::phi_of_lift(&rd, Parabolic::BOREL, &b).unwrap();
        let both = slope_geq(&rd, &sa, &sb) && slope_geq(&rd, &sb, &sa);
        prop_assert_eq!(both, sa.coords == sb.coords);
        prop_assert_eq!(compare_slopes(&rd, &sa, &sa), SlopeOrder::Equal);
    }

    #[test]
    fn specialization_is_a_partial_order(a in splitting_type(3), b in splitting_type(3), c in splitting_type(3)) {
        let le = |x: &SplittingType, y: &SplittingType| p1::specializes_to(x, y).unwrap();
        prop_assert!(le(&a, &a));
        if le(&a, &b) && le(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c));
        }
        prop_assert_eq!(le(&a, &b), p1::specializes_to_by_permutation(&a, &b).unwrap());
    }

    #[test]
    fn hn_data_is_consistent(st in (1usize..=5).prop_flat_map(splitting_type)) {
        let (hn, stratum) = p1::canonical_reduction(&st).unwrap();
        prop_assert_eq!(hn.block_ranks.iter().sum::<usize>(), st.rank());
        prop_assert_eq!(hn.block_degrees.iter().sum::<i64>(), st.total_degree());
        prop_assert!(hn.block_slopes.windows(2).all(|w| w[0] > w[1]));
        for ((r, d), s) in hn.block_ranks.iter().zip(&hn.block_degrees).zip(&hn.block_slopes) {
            prop_assert_eq!(frac(*d, *r as i64), s.clone());
        }
        prop_assert!(p1::mds_hom_vanishing(&st));
        let j = serde_json::to_string(&stratum).unwrap();
        prop_assert_eq!(serde_json::from_str::<Stratum>(&j).unwrap(), stratum);
        let j = serde_json::to_string(&st).unwrap();
        prop_assert_eq!(serde_json::from_str::<SplittingType>(&j).unwrap(), st);
    }

    #[test]
    fn hom_dim_counts_sections(a in prop::collection::vec(-4i64..=4, 1..4), b in prop::collection::vec(-4i64..=4, 1..4)) {
        let mut total = 0u64;
        for x in &a {
            for y in &b {
                total += p1::hom_dim(&[*x], &[*y]);
            }
        }
        prop_assert_eq!(p1::hom_dim(&a, &b), total);
        prop_assert_eq!(p1::hom_dim(&[0], &[a[0]]), (a[0] + 1).max(0) as u64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_is_monotone_and_distinct(k in 0usize..4, lg in -3i64..=3, b1 in 0i64..=4, extra in 0i64..=2) {
        let rd = &data()[k];
        let full = rd.quotient(rd.full());
        let mut v = vec![0; rd.rank()];
        v[0] = lg;
        let lambda: QuotientClass = full.project(&Coweight(v)).unwrap();
        let small = enumerate_strata(rd, &lambda, &int(b1)).unwrap();
        let large = enumerate_strata(rd, &lambda, &int(b1 + extra)).unwrap();
        let keys: HashSet<(Parabolic, QuotientClass)> = small.iter().map(|s| (s.parabolic, s.degree.clone())).collect();
        prop_assert_eq!(keys.len(), small.len());
        prop_assert!(small.iter().all(|s| large.contains(s)));
        prop_assert!(small.iter().any(|s| s.parabolic == rd.full() && s.degree == lambda));
        for s in &small {
            s.check(rd).unwrap();
            prop_assert_eq!(&s.lambda_g, &lambda);
        }
    }
}
