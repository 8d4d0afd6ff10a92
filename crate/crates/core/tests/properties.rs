use proptest::prelude::*;
use wgk_core::orbifold_rr::PeriodicTable;
use wgk_core::sections::{section_canonical, section_series};
use wgk_core::series::int;
use wgk_core::{AmbientModel, CY3Data, Canonical3Data, GrWeights, LaurentPoly, OGrWeights, RrData, SectionSpec};

fn gr_weights() -> impl Strategy<Value = GrWeights> {
    (0i64..2, prop::array::uniform5(-4i64..=6), -3i64..=3).prop_filter_map("invalid weights", |(p, w, u)| {
        GrWeights::from_doubled(w.map(|x| 2 * x + p), 2 * u).ok()
    })
}

fn ogr_weights() -> impl Strategy<Value = OGrWeights> {
    (0i64..2, prop::array::uniform5(-3i64..=3), -2i64..=5).prop_filter_map("invalid weights", |(p, w, u)| {
        OGrWeights::from_doubled(w.map(|x| 2 * x + p), 2 * u).ok()
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6).prop_map(LaurentPoly::from_ints)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 96,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn gr_degree_is_leading_coefficient(w in gr_weights()) {
        let h = w.hilbert_series();
        prop_assert_eq!(h.intersection_number(6).unwrap(), w.degree());
    }

    #[test]
    fn gr_numerator_clears_and_is_gorenstein(w in gr_weights()) {
        let n = w.numerator();
        let adj = w.numerology().adjunction;
        prop_assert_eq!(n.invert_variable().shift(adj).scale(&int(-1)), n.clone());
        prop_assert_eq!(w.hilbert_series().hilbert_numerator(&w.plucker_weights()).unwrap(), n);
    }

    #[test]
    fn gr_series_coefficients_are_non_negative_integers(w in gr_weights()) {
        for c in w.hilbert_series().expand(12).unwrap() {
            prop_assert!(wgk_core::series::is_nonneg_integer(&c), "{} has coefficient {}", w.label(), c);
        }
    }

    #[test]
    fn gr_input_order_is_irrelevant(w in prop::array::uniform5(0i64..4), shift in 0usize..5) {
        let w2 = w.map(|x| 2 * x + 1);
        let mut rotated = w2;
        rotated.rotate_left(shift);
        prop_assert_eq!(GrWeights::from_doubled(w2, 0).unwrap(), GrWeights::from_doubled(rotated, 0).unwrap());
    }

    #[test]
    fn ogr_weyl_orbit_preserves_series(w in ogr_weights()) {
        let c = w.canonical_form();
        prop_assert_eq!(c.canonical_form(), c);
        let mut a = w.coordinate_weights();
        let mut b = c.coordinate_weights();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(w.numerator().unwrap(), c.numerator().unwrap());
        prop_assert_eq!(w.adjunction(), c.adjunction());
    }

    #[test]
    fn ogr_degree_positive_and_series_integral(w in ogr_weights()) {
        prop_assert!(w.degree().unwrap() > int(0));
        for c in w.hilbert_series().unwrap().expand(8).unwrap() {
            prop_assert!(wgk_core::series::is_nonneg_integer(&c));
        }
    }

    #[test]
    fn cut_by_coordinate_degree_shifts_invariants(w in gr_weights(), pick in 0usize..10) {
        let model = AmbientModel::gr(w);
        let weights = model.coordinate_weights();
        let d = weights[pick % weights.len()];
        let spec = SectionSpec::new(vec![d]).unwrap();
        prop_assert_eq!(section_canonical(&model, &spec), section_canonical(&model, &SectionSpec::new(vec![]).unwrap()) + d);
        let h = section_series(&model, &spec, 30).unwrap();
        prop_assert_eq!(h.intersection_number(5).unwrap(), w.degree() * int(d));
    }

    #[test]
    fn laurent_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).invert_variable(), &a.invert_variable() * &b.invert_variable());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let b = b.shift(-b.min_exp().unwrap());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn canonical3_series_matches_plurigenera(pg in 0i64..12, k in 1i64..40, half in 0u32..6) {
        let data = RrData::Canonical3(Canonical3Data { pg, k_cubed: wgk_core::series::rat(k, 2), half_points: half });
        let coeffs = data.hilbert_series().expand(14).unwrap();
        for (n, c) in coeffs.iter().enumerate() {
            prop_assert_eq!(c, &data.plurigenus(n as u64));
        }
    }

    #[test]
    fn cy3_series_matches_plurigenera(a in 1i64..30, c2 in 0i64..120) {
        let data = RrData::CalabiYau3(CY3Data {
            a_cubed: wgk_core::series::rat(a, 5),
            a_c2: wgk_core::series::rat(c2, 5),
            points: vec![PeriodicTable::builtin("1/5(3,3,4)").unwrap()],
        });
        let coeffs = data.hilbert_series().expand(14).unwrap();
        for (n, c) in coeffs.iter().enumerate() {
            prop_assert_eq!(c, &data.plurigenus(n as u64));
        }
    }
}
