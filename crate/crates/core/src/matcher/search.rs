use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{infer_generators, numerator_over, FamilyKind, MatchQuery, WeightBounds};
use crate::error::Result;
use crate::sections::{AmbientModel, Family, SectionSpec};
use crate::series::LaurentPoly;
use crate::wgrass25::GrWeights;
use crate::wogr510::OGrWeights;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HitKind {
    /// Target numerator equals the ambient numerator; every section degree is
    /// an ambient coordinate weight.
    Quasilinear,
    /// Target numerator equals the ambient numerator times `1 - t^e` on a cone
    /// over the family by one degree-1 variable.
    Nonlinear,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hit {
    pub kind: HitKind,
    pub model: AmbientModel,
    pub sections: SectionSpec,
    /// Generators of the target that are not ambient coordinates; nonempty
    /// only for nonlinear hits, which then agree at numerator level only.
    pub unmatched_generators: Vec<i64>,
}

impl Hit {
    pub fn label(&self) -> String {
        format!("{} ∩ {}", self.model.label(), self.sections.label())
    }
}

/// Exhaustive search for the query target over the generator multiset given
/// or inferred in the query.
pub fn search(query: &MatchQuery) -> Result<Vec<Hit>> {
    query.validate()?;
    let gens = match &query.generator_degrees {
        Some(g) => g.clone(),
        None => infer_generators(&query.target, query.depth)?,
    };
    let Some(num) = numerator_over(&query.target, &gens) else {
        return Ok(Vec::new());
    };
    Ok(search_numerator(&gens, &num, &query.families, query.bounds))
}

/// All weight data within `bounds` whose numerator explains `num` over the
/// generator degrees `gens`, deduplicated by canonical form and sorted.
pub fn search_numerator(gens: &[i64], num: &LaurentPoly, families: &[FamilyKind], bounds: WeightBounds) -> Vec<Hit> {
    let Some(top) = num.max_exp() else {
        return Vec::new();
    };
    let (root, _) = num.split_root_at_one();
    let mut gens = gens.to_vec();
    gens.sort_unstable();
    let mut hits: Vec<Hit> = Vec::new();
    for &family in families {
        let codim = match family {
            FamilyKind::Wgr25 => 3,
            FamilyKind::Wogr510 => 5,
        };
        let quasilinear = root == codim;
        let nonlinear = root == codim + 1;
        if !quasilinear && !nonlinear {
            continue;
        }
        let found: Vec<Hit> = candidates(family, bounds)
            .into_par_iter()
            .filter_map(|f| {
                let a = f.adjunction();
                if quasilinear && a == top {
                    quasilinear_hit(f, &gens, num)
                } else if nonlinear && a < top {
                    nonlinear_hit(f, &gens, num, top - a)
                } else {
                    None
                }
            })
            .collect();
        hits.extend(found);
    }
    hits.sort();
    hits.dedup();
    hits
}

fn candidates(family: FamilyKind, bounds: WeightBounds) -> Vec<Family> {
    let mut out = Vec::new();
    for w2 in sorted_tuples(bounds.max_doubled_weight) {
        match family {
            FamilyKind::Wgr25 => {
                if let Ok(w) = GrWeights::from_doubled(w2, 0) {
                    out.push(Family::Gr(w));
                }
            }
            FamilyKind::Wogr510 => {
                for u in -bounds.max_u..=bounds.max_u {
                    if let Ok(w) = OGrWeights::from_doubled(w2, 2 * u) {
                        out.push(Family::OGr(w));
                    }
                }
            }
        }
    }
    out
}

/// Non-decreasing 5-tuples in `[-b, b]` of one parity.
fn sorted_tuples(b: i64) -> Vec<[i64; 5]> {
    let mut out = Vec::new();
    let mut t = [0i64; 5];
    fn rec(pos: usize, lo: i64, b: i64, t: &mut [i64; 5], out: &mut Vec<[i64; 5]>) {
        if pos == 5 {
            out.push(*t);
            return;
        }
        let mut x = lo;
        while x <= b {
            t[pos] = x;
            rec(pos + 1, x, b, t, out);
            x += if pos == 0 { 1 } else { 2 };
        }
    }
    rec(0, -b, b, &mut t, &mut out);
    out
}

fn counts(ws: &[i64]) -> BTreeMap<i64, usize> {
    let mut m = BTreeMap::new();
    for &a in ws {
        *m.entry(a).or_default() += 1;
    }
    m
}

/// `big \ small` as multisets, or `None` if `small` is not contained in `big`.
fn multiset_difference(big: &[i64], small: &[i64]) -> Option<Vec<i64>> {
    let mut m = counts(big);
    for a in small {
        let slot = m.get_mut(a)?;
        if *slot == 0 {
            return None;
        }
        *slot -= 1;
    }
    Some(m.into_iter().flat_map(|(a, n)| std::iter::repeat_n(a, n)).collect())
}

fn canonical(f: Family) -> Family {
    match f {
        Family::Gr(w) => Family::Gr(w),
        Family::OGr(w) => Family::OGr(w.canonical_form()),
    }
}

fn quasilinear_hit(f: Family, gens: &[i64], num: &LaurentPoly) -> Option<Hit> {
    let coords = f.coordinate_weights();
    let ones = |ws: &[i64]| ws.iter().filter(|&&a| a == 1).count();
    let cone = vec![1; ones(gens).saturating_sub(ones(&coords))];
    let mut all = coords;
    all.extend_from_slice(&cone);
    let leftovers = multiset_difference(&all, gens)?;
    if f.numerator().ok()? != *num {
        return None;
    }
    Some(Hit {
        kind: HitKind::Quasilinear,
        model: AmbientModel::new(canonical(f), cone).ok()?,
        sections: SectionSpec::new(leftovers).ok()?,
        unmatched_generators: Vec::new(),
    })
}

fn nonlinear_hit(f: Family, gens: &[i64], num: &LaurentPoly, e: i64) -> Option<Hit> {
    if f.numerator().ok()?.mul_one_minus(e) != *num {
        return None;
    }
    let mut all = f.coordinate_weights();
    all.push(1);
    let (mut degrees, unmatched) = match multiset_difference(&all, gens) {
        Some(left) => (left, Vec::new()),
        None => (Vec::new(), unmatched(&all, gens)),
    };
    degrees.push(e);
    Some(Hit {
        kind: HitKind::Nonlinear,
        model: AmbientModel::new(canonical(f), vec![1]).ok()?,
        sections: SectionSpec::new(degrees).ok()?,
        unmatched_generators: unmatched,
    })
}

/// Elements of `gens` left over after matching against `coords`.
fn unmatched(coords: &[i64], gens: &[i64]) -> Vec<i64> {
    let mut m = counts(coords);
    let mut out = Vec::new();
    for &a in gens {
        match m.get_mut(&a) {
            Some(n) if *n > 0 => *n -= 1,
            _ => out.push(a),
        }
    }
    out
}
