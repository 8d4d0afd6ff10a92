//! First syzygies of the 10 spinor quadrics, and the printed second-syzygy columns.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::graph::{neighbours, parse_vertex, vertex_name, VERTEX_COUNT};
use super::{equations, parametrize, OGrWeights};
use crate::poly::{dot, MPoly};
use crate::series::{int, Rat};
use crate::wgrass25::{random_rat, IdentityReport};

// Rows pair with N1..N5, N-1..N-5; columns are the vertices x, x1..x5, x12..x45.
const FIRST_SYZYGY_TABLE: [[&str; 16]; 10] = [
    ["0", "0", "x12", "x13", "x14", "x15", "x2", "x3", "x4", "x5", "0", "0", "0", "0", "0", "0"],
    ["0", "-x12", "0", "x23", "x24", "x25", "-x1", "0", "0", "0", "x3", "x4", "x5", "0", "0", "0"],
    ["0", "-x13", "-x23", "0", "x34", "x35", "0", "-x1", "0", "0", "-x2", "0", "0", "x4", "x5", "0"],
    ["0", "-x14", "-x24", "-x34", "0", "x45", "0", "0", "-x1", "0", "0", "-x2", "0", "-x3", "0", "x5"],
    ["0", "-x15", "-x25", "-x35", "-x45", "0", "0", "0", "0", "-x1", "0", "0", "-x2", "0", "-x3", "-x4"],
    ["x1", "x", "0", "0", "0", "0", "0", "0", "0", "0", "-x45", "x35", "-x34", "-x25", "x24", "-x23"],
    ["x2", "0", "x", "0", "0", "0", "0", "x45", "-x35", "x34", "0", "0", "0", "x15", "-x14", "x13"],
    ["x3", "0", "0", "x", "0", "0", "-x45", "0", "x25", "-x24", "0", "-x15", "x14", "0", "0", "-x12"],
    ["x4", "0", "0", "0", "x", "0", "x35", "-x25", "0", "x23", "x15", "0", "-x13", "0", "x12", "0"],
    ["x5", "0", "0", "0", "0", "x", "-x34", "x24", "-x23", "0", "-x14", "x13", "0", "-x12", "0", "0"],
];

fn parse_linear(tok: &str) -> MPoly {
    if tok == "0" {
        return MPoly::zero(16);
    }
    let (sign, name) = match tok.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, tok),
    };
    let v = parse_vertex(name).unwrap_or_else(|| panic!("bad table entry {tok}"));
    MPoly::var(16, v).scale_int(sign)
}

/// The 10x16 matrix of linear forms; column `v` is the syzygy `T(v)`.
pub fn first_syzygies() -> Vec<Vec<MPoly>> {
    FIRST_SYZYGY_TABLE
        .iter()
        .map(|row| row.iter().map(|t| parse_linear(t)).collect())
        .collect()
}

pub fn first_syzygy_column(v: usize) -> Vec<MPoly> {
    first_syzygies().into_iter().map(|row| row[v].clone()).collect()
}

/// Checks every column of the table against the 10 equations.
pub fn verify_ogr_syzygies() -> IdentityReport {
    verify_ogr_syzygies_with(&first_syzygies())
}

pub fn verify_ogr_syzygies_with(table: &[Vec<MPoly>]) -> IdentityReport {
    let eqs = equations();
    let mut report = IdentityReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0510);
    let m: [Rat; 10] = std::array::from_fn(|_| random_rat(&mut rng));
    let pt = parametrize(&random_rat(&mut rng), &m);
    for v in 0..VERTEX_COUNT {
        let col: Vec<MPoly> = table.iter().map(|row| row[v].clone()).collect();
        let sum = dot(&col, &eqs);
        report.push(
            format!("T({}) symbolic", vertex_name(v)),
            sum.is_zero(),
            if sum.is_zero() { "zero cubic".to_string() } else { format!("{} surviving terms", sum.len()) },
        );
        let support: Vec<usize> = col
            .iter()
            .filter(|c| !c.is_zero())
            .flat_map(|c| c.terms().map(|(m, _)| m.iter().position(|&e| e > 0).unwrap()).collect::<Vec<_>>())
            .collect();
        let mut sorted = support.clone();
        sorted.sort_unstable();
        let ok = sorted == neighbours(v);
        report.push(
            format!("T({}) support", vertex_name(v)),
            ok,
            format!("entries in {:?}", sorted.iter().map(|&u| vertex_name(u)).collect::<Vec<_>>()),
        );
        let eq_vals: Vec<Rat> = eqs.iter().map(|e| e.eval(&pt)).collect();
        let num: Rat = col.iter().zip(&eq_vals).map(|(c, e)| c.eval(&pt) * e).sum();
        report.push(format!("T({}) numeric", vertex_name(v)), num == int(0), "at a random spinor point");
    }
    report
}

/// A column `S(v)` of the second-syzygy matrix, indexed by the 16 vertices.
#[derive(Clone, Debug)]
pub struct SecondSyzygy {
    pub vertex: usize,
    pub entries: Vec<MPoly>,
}

/// `x_a x_b + c N_k` with `c` possibly zero.
fn quad_entry(a: usize, b: usize, corr: Option<(i64, usize)>, eqs: &[MPoly]) -> MPoly {
    let mono = &MPoly::var(16, a) * &MPoly::var(16, b);
    match corr {
        Some((c, k)) => &mono + &eqs[k].scale_int(c),
        None => mono,
    }
}

/// The three printed columns `S(x)`, `S(x1)`, `S(x12)`.
pub fn second_syzygy_fixtures() -> Vec<SecondSyzygy> {
    let eqs = equations();
    let n = |k: usize| k - 1;
    let nm = |k: usize| 4 + k;
    let x1 = 1;
    let x12 = 6;
    let column = |v: usize, corr: &dyn Fn(usize) -> Option<(i64, usize)>| SecondSyzygy {
        vertex: v,
        entries: (0..VERTEX_COUNT).map(|u| quad_entry(v, u, corr(u), &eqs)).collect(),
    };
    let s_x = column(0, &|u| (1..=5).contains(&u).then(|| (-2, n(u))));
    let s_x1 = column(x1, &|u| match u {
        0 => Some((-2, n(1))),
        6..=9 => Some((2, nm(u - 4))),
        _ => None,
    });
    let s_x12 = column(x12, &|u| match u {
        1 => Some((2, nm(2))),
        2 => Some((-2, nm(1))),
        13 => Some((2, n(5))),
        14 => Some((-2, n(4))),
        15 => Some((2, n(3))),
        _ => None,
    });
    vec![s_x, s_x1, s_x12]
}

/// Checks `sum_u S(v)_u T(u) = 0` and that each entry of `S(v)` at position `u`
/// is homogeneous of degree `deg S(v) - deg T(u) = wt v + wt u`.
pub fn verify_second_syzygy_fixtures(w: &OGrWeights) -> IdentityReport {
    let wts = w.coordinate_weights();
    let res = w.resolution_degrees();
    let table = first_syzygies();
    let mut report = IdentityReport::default();
    for s in second_syzygy_fixtures() {
        let name = vertex_name(s.vertex);
        let nonzero = table.iter().filter(|row| !dot(&s.entries, row).is_zero()).count();
        report.push(
            format!("S({name}) symbolic"),
            nonzero == 0,
            format!("{nonzero} of 10 components nonzero"),
        );
        let ok = s.entries.iter().enumerate().all(|(u, e)| {
            e.weighted_degree(&wts) == Some(res.second_syzygies[s.vertex] - res.first_syzygies[u])
        });
        report.push(format!("S({name}) degrees"), ok, w.label());
    }
    report
}
