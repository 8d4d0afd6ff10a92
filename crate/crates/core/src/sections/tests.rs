use super::*;
use crate::series::{int, rat};

fn gr(w2: [i64; 5]) -> AmbientModel {
    AmbientModel::gr(GrWeights::from_doubled(w2, 0).unwrap())
}

fn ogr(w: [i64; 5], u: i64) -> AmbientModel {
    AmbientModel::ogr(OGrWeights::from_ints(w, u).unwrap())
}

fn spec(d: &[i64]) -> SectionSpec {
    SectionSpec::new(d.to_vec()).unwrap()
}

fn basket(model: &AmbientModel, s: &SectionSpec) -> Vec<(String, u64)> {
    let r = singularity_analysis(model, s).unwrap();
    r.basket.iter().map(|b| (b.singularity.to_string(), b.count)).collect()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn model_json() {
    let m: AmbientModel = serde_json::from_str(r#"{"family":"wgr25","w2":[1,1,1,3,3],"u2":0,"cone":[1]}"#).unwrap();
    assert_eq!(m, gr([1, 1, 1, 3, 3]).coned(&[1]));
    let back: AmbientModel = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
    assert_eq!(back, m);
    let o: AmbientModel = serde_json::from_str(r#"{"family":"wogr510","w2":[2,0,0,0,0],"u2":2}"#).unwrap();
    assert_eq!(o, ogr([1, 0, 0, 0, 0], 1));
    assert!(serde_json::from_str::<AmbientModel>(r#"{"family":"p3","w2":[1,1,1,1,1]}"#).is_err());
    let s: SectionSpec = serde_json::from_str(r#"{"sections":[2,2,1]}"#).unwrap();
    assert_eq!(s.degrees, vec![1, 2, 2]);
}

#[test]
fn ambient_series_examples() {
    let base = gr([1, 1, 1, 3, 3]);
    let coned = base.clone().coned(&[1]);
    let h = coned.ambient_series().unwrap();
    assert_eq!(h.numerator(), base.ambient_series().unwrap().numerator());
    assert_eq!(h.denominator(), &[1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3]);
    assert_eq!(base.clone().coned(&[]).ambient_series().unwrap(), base.ambient_series().unwrap());
    let mirage = AmbientModel::gr(GrWeights::from_doubled([2, 2, 2, 4, 4], 0).unwrap()).coned(&[1]);
    assert_eq!(mirage.ambient_series().unwrap().denominator(), &[1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4]);
}

#[test]
fn section_series_examples() {
    let h = section_series(&ogr([1, 0, 0, 0, 0], 1), &spec(&[1, 2, 2, 2, 2, 2, 2]), DEFAULT_DEPTH).unwrap();
    assert_eq!(h.expand(8).unwrap(), ints(&[1, 7, 29, 83, 190, 370, 645, 1035, 1562]));
    let h = section_series(&gr([1, 1, 1, 3, 3]).coned(&[1]), &spec(&[2; 5]), DEFAULT_DEPTH).unwrap();
    assert_eq!(h.coefficient(1).unwrap(), int(4));
    let m = gr([1; 5]);
    assert_eq!(section_series(&m, &spec(&[]), 10).unwrap(), m.ambient_series().unwrap());
}

#[test]
fn irregular_spec_is_rejected() {
    // Six sections of a 6-fold, and a linear section when every weight is 2.
    assert!(section_series(&gr([1; 5]), &spec(&[2; 6]), 40).is_err());
    let e = section_series(&ogr([0; 5], 2), &spec(&[1]), 40).unwrap_err();
    assert!(matches!(e, Error::NotRegular { .. }), "{e}");
}

#[test]
fn canonical_degrees() {
    assert_eq!(section_canonical(&ogr([1, 0, 0, 0, 0], 1), &spec(&[1, 2, 2, 2, 2, 2, 2])), 1);
    assert_eq!(section_canonical(&ogr([0, 0, 1, 1, 2], 1), &spec(&[2, 2, 3, 4, 4, 4, 5])), 0);
    assert_eq!(section_canonical(&gr([1, 1, 1, 1, 3]), &spec(&[2, 2, 2])), -1);
}

#[test]
fn quasilinear_examples() {
    let q = quasilinear_embed(&gr([1, 1, 1, 1, 3]), &spec(&[2; 4]));
    assert_eq!((q.weights, q.quasilinear), (vec![1; 6], true));
    let q = quasilinear_embed(&ogr([1, 0, 0, 0, 0], 1), &spec(&[1, 2, 2, 2, 2, 2, 2]));
    assert_eq!(q.weights, vec![1, 1, 1, 1, 1, 1, 1, 2, 2]);
    let mirage = AmbientModel::gr(GrWeights::from_doubled([2, 2, 2, 4, 4], 0).unwrap()).coned(&[1]);
    let q = quasilinear_embed(&mirage, &spec(&[6]));
    assert_eq!((q.quasilinear, q.leftovers), (false, vec![6]));
}

#[test]
fn quasilinear_numerator_property() {
    let cases = [
        (ogr([1, 0, 0, 0, 0], 1), spec(&[1, 2, 2, 2, 2, 2, 2])),
        (gr([1, 1, 1, 1, 3]), spec(&[2, 2, 2])),
        (AmbientModel::gr(GrWeights::from_doubled([2, 2, 2, 4, 4], 0).unwrap()).coned(&[1]), spec(&[6])),
    ];
    for (m, s) in cases {
        let q = quasilinear_embed(&m, &s);
        let h = section_series(&m, &s, 40).unwrap();
        let num = h.hilbert_numerator(&q.weights).unwrap();
        let expected = q.leftovers.iter().fold(m.base.numerator().unwrap(), |p, &d| p.mul_one_minus(d));
        assert_eq!(num, expected);
    }
}

#[test]
fn k3_invariants() {
    let h = section_series(&gr([1, 1, 1, 3, 3]).coned(&[1]), &spec(&[2; 5]), 40).unwrap();
    let inv = invariants(&h, 2).unwrap();
    assert_eq!((inv.a_top, inv.h0_a), (rat(14, 3), int(4)));
    let h = section_series(&gr([1, 1, 1, 3, 3]), &spec(&[2, 2, 2, 3]), 40).unwrap();
    let inv = invariants(&h, 2).unwrap();
    assert_eq!((inv.a_top, inv.h0_a), (rat(7, 2), int(3)));
    let h = section_series(&ogr([0, 0, 1, 1, 2], 1), &spec(&[2, 2, 3, 4, 4, 4, 5]), 40).unwrap();
    let inv = invariants(&h, 3).unwrap();
    assert_eq!((inv.a_top, inv.h0_a), (rat(6, 5), int(2)));
}

#[test]
fn degree_compatibility() {
    let m = gr([1, 1, 1, 1, 3]);
    let s = spec(&[2, 2, 3]);
    let a = m.ambient_series().unwrap().intersection_number(6).unwrap();
    let b = section_series(&m, &s, 40).unwrap().intersection_number(3).unwrap();
    assert_eq!(b, a * int(12));
}

#[test]
fn oracle_agreement_gr() {
    let straight = gr([1; 5]);
    let e = straight.ambient_series().unwrap().expand(6).unwrap();
    assert_eq!(e, ints(&[1, 10, 50, 175, 490, 1176, 2520]));
    for m in 0..=4 {
        assert_eq!(int(graded_dimension_oracle(&straight, m).unwrap() as i64), e[m as usize]);
    }
    for w in [gr([1, 1, 1, 1, 3]), gr([1, 1, 1, 3, 3])] {
        let e = w.ambient_series().unwrap().expand(5).unwrap();
        for m in 0..=5 {
            assert_eq!(int(graded_dimension_oracle(&w, m).unwrap() as i64), e[m as usize], "{} m={m}", w.label());
        }
    }
}

#[test]
fn oracle_agreement_ogr() {
    let straight = ogr([0; 5], 1);
    let e = straight.ambient_series().unwrap().expand(2).unwrap();
    assert_eq!(e, ints(&[1, 16, 126]));
    for m in 0..=2 {
        assert_eq!(int(graded_dimension_oracle(&straight, m).unwrap() as i64), e[m as usize]);
    }
    for w in [ogr([1, 0, 0, 0, 0], 1), ogr([0, 0, 1, 1, 2], 1)] {
        let e = w.ambient_series().unwrap().expand(4).unwrap();
        for m in 0..=4 {
            assert_eq!(int(graded_dimension_oracle(&w, m).unwrap() as i64), e[m as usize], "{} m={m}", w.label());
        }
    }
}

#[test]
fn basket_fano_one_half_point() {
    assert_eq!(basket(&gr([1, 1, 1, 1, 3]), &spec(&[2, 2, 2])), vec![("1/2(1,1,1)".into(), 1)]);
}

#[test]
fn basket_k3_coned() {
    assert_eq!(basket(&gr([1, 1, 1, 3, 3]).coned(&[1]), &spec(&[2; 5])), vec![("1/3(1,2)".into(), 1)]);
}

#[test]
fn basket_k3_three_half_points() {
    assert_eq!(basket(&gr([1, 1, 1, 3, 3]), &spec(&[2, 2, 2, 3])), vec![("1/2(1,1)".into(), 3)]);
}

#[test]
fn basket_canonical_threefold() {
    let r = singularity_analysis(&ogr([1, 0, 0, 0, 0], 1), &spec(&[1, 2, 2, 2, 2, 2, 2])).unwrap();
    let b: Vec<(String, u64)> = r.basket.iter().map(|b| (b.singularity.to_string(), b.count)).collect();
    assert_eq!(b, vec![("1/2(1,1,1)".into(), 2)]);
    assert!(r.diagnostics.is_empty(), "{:?}", r.diagnostics);
}

#[test]
fn basket_calabi_yau() {
    let r = singularity_analysis(&ogr([0, 0, 1, 1, 2], 1), &spec(&[2, 2, 3, 4, 4, 4, 5])).unwrap();
    let b: Vec<(String, u64)> = r.basket.iter().map(|b| (b.singularity.to_string(), b.count)).collect();
    assert_eq!(
        b,
        vec![("1/3(1,1,1)".into(), 1), ("1/3(2,2,2)".into(), 1), ("1/5(3,3,4)".into(), 1)]
    );
    assert!(r.diagnostics.is_empty(), "{:?}", r.diagnostics);
}

#[test]
fn basket_r_divides_some_weight() {
    let m = ogr([0, 0, 1, 1, 2], 1);
    let r = singularity_analysis(&m, &spec(&[2, 2, 3, 4, 4, 4, 5])).unwrap();
    for b in &r.basket {
        assert!(m.coordinate_weights().iter().any(|w| w % b.singularity.r == 0));
    }
}

#[test]
fn rr_roundtrips() {
    let r = rr_roundtrip(&ogr([1, 0, 0, 0, 0], 1), &spec(&[1, 2, 2, 2, 2, 2, 2]), RrKind::Canonical3, 40).unwrap();
    assert!(r.matches, "{:?}", r.first_difference);
    assert_eq!(
        r.data,
        crate::orbifold_rr::RrData::Canonical3(crate::orbifold_rr::Canonical3Data { pg: 7, k_cubed: int(21), half_points: 2 })
    );
    let r = rr_roundtrip(&ogr([0, 0, 1, 1, 2], 1), &spec(&[2, 2, 3, 4, 4, 4, 5]), RrKind::Cy3, 40).unwrap();
    assert!(r.matches, "{:?}", r.first_difference);
    let crate::orbifold_rr::RrData::CalabiYau3(d) = &r.data else { panic!() };
    assert_eq!((d.a_cubed.clone(), d.a_c2.clone()), (rat(6, 5), rat(108, 5)));
}

#[test]
fn rr_roundtrip_smooth_complete_intersections() {
    let r = rr_roundtrip(&gr([1; 5]), &spec(&[1, 1, 3]), RrKind::Cy3, 40).unwrap();
    assert!(r.matches);
    assert_eq!(r.canonical_degree, 0);
    let r = rr_roundtrip(&gr([1; 5]), &spec(&[1, 1, 4]), RrKind::Canonical3, 40).unwrap();
    assert!(r.matches);
    // Polarised by A = O(1) but K = O(2): the canonical formula no longer fits.
    let r = rr_roundtrip(&gr([1; 5]), &spec(&[1, 1, 5]), RrKind::Canonical3, 40).unwrap();
    assert!(!r.matches);
    assert!(r.first_difference.is_some());
}
