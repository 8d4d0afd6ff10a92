use serde::{Deserialize, Serialize};

use super::search::{search_numerator, Hit, HitKind};
use super::{
    basket_from_rr, canonical_from_rr, force_divisibility, force_residues, infer_generators, numerator_over,
    singularity_filter, superscript_multiset, FamilyKind, FilterVerdict, WeightBounds,
};
use crate::error::{Error, Result};
use crate::orbifold_rr::RrData;
use crate::sections::{AmbientModel, QuotientSingularity, SectionSpec};
use crate::series::{fmt_rat, HilbertSeries, LaurentPoly};

pub const REPORT_SCHEMA: &str = "wgk.match/1";

/// Target data: Riemann-Roch input or a Hilbert series directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchInput {
    Rr(RrData),
    Series(HilbertSeries),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct MatchOptions {
    /// Extra generator multisets searched alongside the inferred ones.
    pub generator_sets: Vec<Vec<i64>>,
    pub families: Vec<FamilyKind>,
    pub bounds: WeightBounds,
    /// Overrides the basket read off the input.
    pub required_basket: Option<Vec<QuotientSingularity>>,
    /// Overrides the canonical degree read off the input.
    pub canonical_degree: Option<i64>,
    pub max_augment: i64,
    pub depth: usize,
}

impl Default for MatchOptions {
    fn default() -> Self {
        Self {
            generator_sets: Vec::new(),
            families: FamilyKind::ALL.to_vec(),
            bounds: WeightBounds::default(),
            required_basket: None,
            canonical_degree: None,
            max_augment: 6,
            depth: crate::sections::DEFAULT_DEPTH,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub degrees: Vec<i64>,
    /// How the multiset arose: `greedy`, `divisibility`, `residues`, `user`,
    /// or `augment(k)` of an earlier set.
    pub sources: Vec<String>,
    pub numerator: Option<String>,
    pub note: Option<String>,
    pub hits: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Accepted,
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub label: String,
    pub status: Status,
    pub kind: HitKind,
    pub model: AmbientModel,
    pub sections: SectionSpec,
    /// Index into the report's generator sets.
    pub generator_set: usize,
    pub generators: Vec<i64>,
    pub numerator: String,
    pub filter: FilterVerdict,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub schema: String,
    pub series: String,
    pub expansion: Vec<String>,
    pub basket: Vec<String>,
    pub canonical_degree: Option<i64>,
    pub bounds: WeightBounds,
    pub generator_sets: Vec<GeneratorSet>,
    pub candidates: Vec<Candidate>,
}

impl MatchReport {
    pub fn accepted(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| c.status == Status::Accepted)
    }

    pub fn rejected(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| c.status == Status::Rejected)
    }
}

struct Context<'a> {
    h: &'a HilbertSeries,
    basket: &'a [QuotientSingularity],
    canonical: Option<i64>,
    options: &'a MatchOptions,
}

/// Series, generator inference with singularity forcing, exhaustive search,
/// filtering, and the one-generator augmentation retry when nothing is
/// accepted.
pub fn match_pipeline(input: &MatchInput, options: &MatchOptions) -> Result<MatchReport> {
    if options.depth == 0 || options.max_augment < 0 {
        return Err(Error::Input("depth must be positive and max_augment non-negative".into()));
    }
    let (h, basket, canonical) = match input {
        MatchInput::Rr(d) => (d.hilbert_series(), basket_from_rr(d), Some(canonical_from_rr(d))),
        MatchInput::Series(h) => (h.clone(), Vec::new(), None),
    };
    let basket = options.required_basket.clone().unwrap_or(basket);
    let canonical = options.canonical_degree.or(canonical);
    let ctx = Context {
        h: &h,
        basket: &basket,
        canonical,
        options,
    };

    let greedy = infer_generators(&h, options.depth)?;
    let mut sets: Vec<GeneratorSet> = Vec::new();
    add_set(&mut sets, greedy.clone(), "greedy");
    add_set(&mut sets, force_divisibility(&greedy, &basket), "divisibility");
    add_set(&mut sets, force_residues(&greedy, &basket), "residues");
    for g in &options.generator_sets {
        let mut g = g.clone();
        g.sort_unstable();
        add_set(&mut sets, g, "user");
    }

    let mut candidates = Vec::new();
    for i in 0..sets.len() {
        run_set(&ctx, &mut sets, i, &mut candidates);
    }

    if !candidates.iter().any(|c: &Candidate| c.status == Status::Accepted) {
        let bases: Vec<usize> = (0..sets.len()).filter(|&i| sets[i].numerator.is_some()).collect();
        'augment: for k in 1..=options.max_augment {
            for &b in &bases {
                let mut g = sets[b].degrees.clone();
                g.push(k);
                g.sort_unstable();
                let source = format!("augment({k}) of {}", sets[b].sources[0]);
                let before = sets.len();
                let i = add_set(&mut sets, g, &source);
                if i < before {
                    continue;
                }
                run_set(&ctx, &mut sets, i, &mut candidates);
            }
            if candidates.iter().any(|c| c.status == Status::Accepted) {
                break 'augment;
            }
        }
    }

    candidates.sort_by(|a, b| {
        (a.status, a.generator_set, a.kind, &a.model, &a.sections).cmp(&(
            b.status,
            b.generator_set,
            b.kind,
            &b.model,
            &b.sections,
        ))
    });
    let expansion = h.expand(12)?.iter().map(fmt_rat).collect();
    Ok(MatchReport {
        schema: REPORT_SCHEMA.to_string(),
        series: h.to_string(),
        expansion,
        basket: basket.iter().map(|q| q.to_string()).collect(),
        canonical_degree: canonical,
        bounds: options.bounds,
        generator_sets: sets,
        candidates,
    })
}

/// Appends `degrees` unless present, in which case `source` is recorded on
/// the existing set; returns its index.
fn add_set(sets: &mut Vec<GeneratorSet>, mut degrees: Vec<i64>, source: &str) -> usize {
    degrees.sort_unstable();
    if let Some(i) = sets.iter().position(|s| s.degrees == degrees) {
        if !sets[i].sources.iter().any(|s| s == source) {
            sets[i].sources.push(source.to_string());
        }
        return i;
    }
    sets.push(GeneratorSet {
        degrees,
        sources: vec![source.to_string()],
        numerator: None,
        note: None,
        hits: 0,
    });
    sets.len() - 1
}

fn run_set(ctx: &Context, sets: &mut [GeneratorSet], i: usize, out: &mut Vec<Candidate>) {
    let gens = sets[i].degrees.clone();
    let Some(num) = numerator_over(ctx.h, &gens) else {
        sets[i].note = Some(format!(
            "series times prod(1-t^a) over {{{}}} is not a polynomial",
            superscript_multiset(&gens)
        ));
        return;
    };
    sets[i].numerator = Some(num.to_string());
    if let Some(want) = ctx.canonical {
        let k = gorenstein_canonical(&num, &gens);
        if k != want {
            sets[i].note = Some(format!("numerator gives K = O({k}), expected O({want})"));
            return;
        }
    }
    let hits = search_numerator(&gens, &num, &ctx.options.families, ctx.options.bounds);
    sets[i].hits = hits.len();
    out.extend(hits.into_iter().map(|hit| candidate(ctx, hit, i, &gens, &num)));
}

/// `K = O(deg N - sum of generator degrees)`.
fn gorenstein_canonical(num: &LaurentPoly, gens: &[i64]) -> i64 {
    num.max_exp().unwrap_or(0) - gens.iter().sum::<i64>()
}

fn candidate(ctx: &Context, hit: Hit, set: usize, gens: &[i64], num: &LaurentPoly) -> Candidate {
    let filter = singularity_filter(&hit.model, ctx.basket);
    let mut reasons = Vec::new();
    if let Some(r) = &filter.reason {
        reasons.push(r.clone());
    }
    if !hit.unmatched_generators.is_empty() {
        reasons.push(format!(
            "generators {{{}}} are not ambient coordinates; the numerators agree but no section has this ring",
            superscript_multiset(&hit.unmatched_generators)
        ));
    }
    let status = if reasons.is_empty() {
        Status::Accepted
    } else {
        Status::Rejected
    };
    Candidate {
        label: hit.label(),
        status,
        kind: hit.kind,
        model: hit.model,
        sections: hit.sections,
        generator_set: set,
        generators: gens.to_vec(),
        numerator: num.to_string(),
        filter,
        reasons,
    }
}
