use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::explore::{explore_derived_series, max_quotient_order};
use super::verdict::{Evidence, Verdict};
use super::Budgets;
use crate::fpcore::{Presentation, Word};
use crate::intlin::bigint_json;

/// Parameters of a randomized exploration batch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeParams {
    pub samples: usize,
    pub n_gens: usize,
    pub n_rels: usize,
    pub max_len: usize,
    pub seed: u64,
    pub budgets: Budgets,
}

/// Aggregate of a batch of explorations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub samples: usize,
    /// Counts keyed by [`Verdict::label`].
    pub verdicts: BTreeMap<String, usize>,
    /// `depth_histogram[d]` counts samples whose exploration ended at depth `d`.
    pub depth_histogram: Vec<usize>,
    pub max_quotient_order: BigInt,
    pub seed: u64,
}

impl ProbeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "samples": self.samples,
            "verdicts": self.verdicts,
            "depth_histogram": self.depth_histogram,
            "max_quotient_order": bigint_json(&self.max_quotient_order),
            "seed": self.seed,
        })
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_word(rng: &mut ChaCha8Rng, n_gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    let mut letters: Vec<(usize, i64)> = Vec::with_capacity(len);
    while letters.len() < len {
        let g = rng.gen_range(0..n_gens);
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        if letters.last() == Some(&(g, -s)) {
            continue;
        }
        letters.push((g, s));
    }
    Word::from_letters(letters)
}

/// A presentation on `x1, …, x{n_gens}` with `n_rels` uniformly random
/// freely reduced relators of length between 1 and `max_len`.
pub fn random_presentation(
    n_gens: usize,
    n_rels: usize,
    max_len: usize,
    seed: u64,
) -> Presentation {
    sample_presentation(n_gens, n_rels, max_len, seed, 0)
}

fn sample_presentation(
    n_gens: usize,
    n_rels: usize,
    max_len: usize,
    seed: u64,
    stream: u64,
) -> Presentation {
    let mut rng = rng_for(seed, stream);
    let rels = if n_gens == 0 || max_len == 0 {
        Vec::new()
    } else {
        (0..n_rels)
            .map(|_| random_word(&mut rng, n_gens, max_len))
            .collect()
    };
    Presentation::with_numbered_generators("x", n_gens, rels)
        .expect("letters drawn from the generator range")
}

fn end_depth(v: &Verdict) -> usize {
    match v {
        Verdict::Adorable { doa, .. } => *doa,
        Verdict::NotAdorable {
            evidence: Evidence::FreeOfRank { depth, .. },
            ..
        } => *depth,
        Verdict::NotAdorable { .. } => 0,
        Verdict::Unknown { depth, .. } => *depth,
    }
}

/// Explores every presentation (in parallel) and aggregates in input order.
pub fn probe_presentations(
    presentations: &[Presentation],
    budgets: &Budgets,
    seed: u64,
) -> ProbeReport {
    let outcomes: Vec<(String, usize, BigInt)> = presentations
        .par_iter()
        .map(|p| {
            let (trace, v) = explore_derived_series(p, budgets);
            (v.label(), end_depth(&v), max_quotient_order(&trace))
        })
        .collect();
    aggregate(outcomes, seed)
}

fn aggregate(outcomes: Vec<(String, usize, BigInt)>, seed: u64) -> ProbeReport {
    let mut report = ProbeReport {
        samples: outcomes.len(),
        verdicts: BTreeMap::new(),
        depth_histogram: Vec::new(),
        max_quotient_order: BigInt::from(1),
        seed,
    };
    for (label, depth, order) in outcomes {
        *report.verdicts.entry(label).or_default() += 1;
        if report.depth_histogram.len() <= depth {
            report.depth_histogram.resize(depth + 1, 0);
        }
        report.depth_histogram[depth] += 1;
        report.max_quotient_order = report.max_quotient_order.max(order);
    }
    report
}

/// Explores `params.samples` random presentations; sample `i` is drawn
/// from its own stream of the seeded generator, so the report does not
/// depend on scheduling.
pub fn random_probe(params: &ProbeParams) -> ProbeReport {
    let outcomes = (0..params.samples as u64)
        .into_par_iter()
        .map(|i| {
            let p =
                sample_presentation(params.n_gens, params.n_rels, params.max_len, params.seed, i);
            let (trace, v) = explore_derived_series(&p, &params.budgets);
            (v.label(), end_depth(&v), max_quotient_order(&trace))
        })
        .collect();
    aggregate(outcomes, params.seed)
}
