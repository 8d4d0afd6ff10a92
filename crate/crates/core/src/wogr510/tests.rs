use super::*;
use crate::series::rat;

fn ogr(w: [i64; 5], u: i64) -> OGrWeights {
    OGrWeights::from_ints(w, u).unwrap()
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

fn multiset(pairs: &[(i64, usize)]) -> Vec<i64> {
    pairs.iter().flat_map(|&(w, n)| std::iter::repeat_n(w, n)).collect()
}

#[test]
fn coordinate_weight_examples() {
    assert_eq!(sorted(ogr([1, 0, 0, 0, 0], 1).coordinate_weights()), multiset(&[(1, 8), (2, 8)]));
    assert_eq!(
        sorted(ogr([0, 0, 1, 1, 2], 1).coordinate_weights()),
        multiset(&[(1, 2), (2, 4), (3, 4), (4, 4), (5, 2)])
    );
    assert_eq!(ogr([0; 5], 1).coordinate_weights(), vec![1; 16]);
    assert_eq!(ogr([0, 0, 1, 1, 2], 1).coordinate_weights().iter().sum::<i64>(), 8 * 6);
}

#[test]
fn invalid_weights() {
    assert!(OGrWeights::from_ints([0; 5], 0).is_err());
    assert!(OGrWeights::from_doubled([1, 0, 0, 0, 0], 2).is_err());
    assert!(OGrWeights::from_doubled([0; 5], 1).is_err());
    // Half-integral weights are fine when every coordinate weight is integral.
    let w = OGrWeights::from_doubled([1, 1, 1, 1, 1], 2).unwrap();
    assert!(w.coordinate_weights().iter().all(|&x| x > 0));
}

#[test]
fn json_round_trip() {
    let w: OGrWeights = serde_json::from_str(r#"{"w2":[0,0,2,2,4],"u2":2}"#).unwrap();
    assert_eq!(w, ogr([0, 0, 1, 1, 2], 1));
    let back: OGrWeights = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
    assert_eq!(back, w);
}

#[test]
fn first_equation() {
    let x = |v: &str| MPoly::var(16, parse_vertex(v).unwrap());
    let pf1 = &(&(&x("x23") * &x("x45")) - &(&x("x24") * &x("x35"))) + &(&x("x25") * &x("x34"));
    assert_eq!(equations()[0], &(&x("x") * &x("x1")) - &pf1);
}

#[test]
fn equations_are_signed_quads() {
    let g = spinor_graph();
    let mut quads: Vec<Vec<usize>> = g
        .quads
        .iter()
        .flatten()
        .map(|q| {
            let mut q = q.clone();
            q.sort();
            q
        })
        .collect();
    quads.sort();
    let edge_index = |a: usize, b: usize| {
        g.edges
            .iter()
            .position(|e| (e.a.0, e.b.0) == (a.min(b), a.max(b)))
            .expect("monomial is an edge")
    };
    let mut supports: Vec<Vec<usize>> = equations()
        .iter()
        .map(|e| {
            assert_eq!(e.len(), 4);
            assert!(e.terms().all(|(_, c)| *c == int(1) || *c == int(-1)));
            let mut s: Vec<usize> = e
                .terms()
                .map(|(m, _)| {
                    let vs: Vec<usize> = (0..16).filter(|&i| m[i] > 0).collect();
                    edge_index(vs[0], vs[1])
                })
                .collect();
            s.sort();
            s
        })
        .collect();
    supports.sort();
    assert_eq!(supports, quads);
}

#[test]
fn equation_degrees_match_weights() {
    for w in [ogr([1, 0, 0, 0, 0], 1), ogr([0, 0, 1, 1, 2], 1), OGrWeights::from_doubled([1, 1, 3, 3, 5], 2).unwrap()] {
        let wts = w.coordinate_weights();
        let degs: Vec<Option<i64>> = equations().iter().map(|e| e.weighted_degree(&wts)).collect();
        let expected: Vec<Option<i64>> = w.equation_degrees().iter().map(|&d| Some(d)).collect();
        assert_eq!(degs, expected);
    }
}

#[test]
fn equations_invariant_under_wd5_up_to_sign() {
    // Each group element permutes vertices; the supports of the 10 quadrics are permuted too.
    let eqs = equations();
    let support = |p: &MPoly| {
        let mut s: Vec<Vec<u16>> = p.terms().map(|(m, _)| m.clone()).collect();
        s.sort();
        s
    };
    let mut base: Vec<Vec<Vec<u16>>> = eqs.iter().map(support).collect();
    base.sort();
    for g in wd5_elements() {
        let images: Vec<MPoly> = (0..16).map(|v| MPoly::var(16, g.act_vertex(v))).collect();
        let mut moved: Vec<Vec<Vec<u16>>> = eqs.iter().map(|e| support(&e.substitute(&images))).collect();
        moved.sort();
        assert_eq!(moved, base);
    }
}

#[test]
fn membership_examples() {
    let zero10: [Rat; 10] = std::array::from_fn(|_| int(0));
    let zero5: [Rat; 5] = std::array::from_fn(|_| int(0));
    assert!(membership(&int(1), &zero10, &zero5));
    let mut p = zero5.clone();
    p[2] = int(1);
    assert!(!membership(&int(1), &zero10, &p));
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    for _ in 0..20 {
        let m: [Rat; 10] = std::array::from_fn(|_| crate::wgrass25::random_rat(&mut rng));
        let pf = pfaffian_vector(m.as_slice());
        assert!(membership(&int(1), &m, &pf));
        let e = crate::wgrass25::random_rat(&mut rng);
        let (x, mm, v) = split_point(&parametrize(&e, &m));
        assert!(membership(&x, &mm, &v));
        let pt = parametrize(&e, &m);
        assert!(equations().iter().all(|q| q.eval(&pt) == int(0)));
    }
}

#[test]
fn parametrize_examples() {
    let zero10: [Rat; 10] = std::array::from_fn(|_| int(0));
    let pt = parametrize(&int(1), &zero10);
    assert_eq!(pt[0], int(1));
    assert!(pt[1..].iter().all(|c| *c == int(0)));
    assert!(parametrize(&int(0), &zero10).iter().all(|c| *c == int(0)));
    let mut m = zero10.clone();
    m[0] = int(1);
    m[7] = int(1);
    let pt = parametrize(&int(1), &m);
    let nonzero: Vec<String> = (0..16).filter(|&v| pt[v] != int(0)).map(vertex_name).collect();
    assert_eq!(nonzero, vec!["x", "x5", "x12", "x34"]);
    assert!(pt.iter().all(|c| *c == int(0) || *c == int(1)));
}

#[test]
fn syzygy_table_verifies() {
    let r = verify_ogr_syzygies();
    assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert_eq!(r.checks.len(), 48);
}

#[test]
fn syzygy_table_columns() {
    let col = first_syzygy_column(0);
    let x = |i: usize| MPoly::var(16, i);
    assert!(col[..5].iter().all(|c| c.is_zero()));
    for i in 0..5 {
        assert_eq!(col[5 + i], x(1 + i));
    }
    assert_eq!(first_syzygy_column(2)[0], x(6));
}

#[test]
fn corrupted_syzygy_is_caught() {
    let mut t = first_syzygies();
    t[3][2] = -&t[3][2];
    let r = verify_ogr_syzygies_with(&t);
    let bad: Vec<&str> = r.failures().map(|f| f.name.as_str()).collect();
    assert!(bad.contains(&"T(x2) symbolic"), "{bad:?}");
}

#[test]
fn second_syzygy_degrees() {
    for w in [ogr([1, 0, 0, 0, 0], 1), ogr([0, 0, 1, 1, 2], 1), ogr([0; 5], 1)] {
        let r = verify_second_syzygy_fixtures(&w);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.checks.len(), 6);
    }
}

#[test]
fn hilbert_numerator_examples() {
    let p = ogr([1, 0, 0, 0, 0], 1).numerator().unwrap();
    assert_eq!(
        p,
        LaurentPoly::from_ints([(0, 1), (2, -1), (3, -8), (4, 7), (5, 8), (7, -8), (8, -7), (9, 8), (10, 1), (12, -1)])
    );
    let p = ogr([0; 5], 1).numerator().unwrap();
    assert_eq!(p, LaurentPoly::from_ints([(0, 1), (2, -10), (3, 16), (5, -16), (6, 10), (8, -1)]));
}

#[test]
fn gorenstein_symmetry() {
    for w in [ogr([1, 0, 0, 0, 0], 1), ogr([0; 5], 1), ogr([0, 0, 1, 1, 2], 1)] {
        let p = w.numerator().unwrap();
        let four_d = w.adjunction();
        assert_eq!(p.max_exp(), Some(four_d));
        assert_eq!(p.invert_variable().shift(four_d).scale(&int(-1)), p);
    }
}

#[test]
fn characters() {
    let q = OGrWeights::from_doubled([1, 1, 3, 3, 5], 2).unwrap().characters();
    assert_eq!(q.q_v.eval(&int(1)), int(10));
    assert_eq!(q.q_splus.eval(&int(1)), int(16));
    assert_eq!(q.q_sminus.eval(&int(1)), int(16));
    assert_eq!(q.q_sminus, q.q_splus.invert_variable());
}

#[test]
fn resolution_examples() {
    let r = ogr([1, 0, 0, 0, 0], 1).resolution_degrees();
    assert_eq!(sorted(r.relations.clone()), vec![2, 3, 3, 3, 3, 3, 3, 3, 3, 4]);
    let w = ogr([0, 0, 1, 1, 2], 1);
    let r = w.resolution_degrees();
    let avg = |v: &[i64]| rat(v.iter().sum::<i64>(), v.len() as i64);
    let d = w.d();
    assert_eq!(avg(&r.relations), d);
    assert_eq!(avg(&r.first_syzygies), &d * rat(3, 2));
    assert_eq!(avg(&r.second_syzygies), &d * rat(5, 2));
    assert_eq!(avg(&r.third_syzygies), &d * int(3));
    assert_eq!(r.alternating_sum(), w.numerator().unwrap());
    let r = ogr([0; 5], 1).resolution_degrees();
    assert_eq!(r.relations, vec![2; 10]);
    assert_eq!(r.first_syzygies, vec![3; 16]);
}

#[test]
fn canonical_class() {
    assert_eq!(ogr([1, 0, 0, 0, 0], 1).canonical(), -12);
    assert_eq!(ogr([0, 0, 1, 1, 2], 1).canonical(), -24);
    assert_eq!(ogr([0; 5], 1).canonical(), -8);
    for w in [ogr([1, 0, 0, 0, 0], 1), ogr([0, 0, 1, 1, 2], 1)] {
        assert_eq!(-w.coordinate_weights().iter().sum::<i64>() + w.adjunction(), w.canonical());
    }
}

#[test]
fn straight_degree() {
    // The spinor tenfold has degree 12.
    assert_eq!(ogr([0; 5], 1).degree().unwrap(), int(12));
}

#[test]
fn chart_examples() {
    let w = ogr([1, 0, 0, 0, 0], 1);
    let charts = w.charts();
    assert_eq!(charts[0].order, 1);
    let w2 = ogr([0, 0, 1, 1, 2], 1);
    let c = &w2.charts()[0];
    let mut pair_sums: Vec<i64> = crate::wgrass25::PAIRS.iter().map(|&(i, j)| (w2.doubled()[i] + w2.doubled()[j]) / 2).collect();
    pair_sums.sort_unstable();
    assert_eq!((c.order, sorted(c.local_weights.clone())), (1, pair_sums));
    let c = &charts[parse_vertex("x2").unwrap()];
    assert_eq!(c.order, 2);
    assert_eq!(c.local_weights.iter().filter(|&&a| a.rem_euclid(2) == 1).count(), 4);
    assert_eq!(sorted(c.local_weights.clone()), vec![-1, -1, -1, -1, 0, 0, 0, 0, 0, 0]);
}

#[test]
fn chart_at_x1_of_second_example() {
    let w = ogr([0, 0, 1, 1, 2], 1);
    let c = &w.charts()[1];
    assert_eq!(c.order, 5);
    let mut residues: Vec<i64> = c.local_weights.iter().map(|a| a.rem_euclid(5)).collect();
    residues.sort_unstable();
    // w' = (0,0,-1,-1,-2): pair sums 0,-1,-1,-2,-1,-1,-2,-2,-3,-3.
    assert_eq!(residues, vec![0, 2, 2, 3, 3, 3, 4, 4, 4, 4]);
}

#[test]
fn wd5_invariance_of_numerology() {
    let w = ogr([0, 0, 1, 1, 2], 1);
    let base = sorted(w.coordinate_weights());
    let num = w.numerator().unwrap();
    for g in wd5_elements().iter().step_by(7) {
        let gw = w.act(g);
        assert_eq!(sorted(gw.coordinate_weights()), base);
        assert_eq!(gw.numerator().unwrap(), num);
        for v in 0..16 {
            assert_eq!(gw.vertex_weight(g.act_vertex(v)), w.vertex_weight(v));
        }
    }
}

#[test]
fn canonical_forms() {
    assert_eq!(ogr([1, 0, 0, 0, 0], 1).canonical_form(), ogr([0, 0, 0, 0, 1], 1));
    assert_eq!(ogr([2, 1, 1, 0, 0], 1).canonical_form(), ogr([0, 0, 1, 1, 2], 1));
    let w = ogr([0, 0, 1, 1, 2], 1);
    for g in wd5_elements().iter().step_by(13) {
        assert_eq!(w.act(g).canonical_form(), w.canonical_form());
    }
}


#[test]
fn spinor_parametrization_is_symbolic_identity() {
    let r = verify_spinor_parametrization();
    assert_eq!(r.checks.len(), 10);
    assert!(r.all_passed());
}
