//! Pointwise lifting: a law holds for the family of all modern sets over
//! `H = {H_x}` exactly when it holds in every `H_x`.
//!
//! Both sides are evaluated independently. The family side runs the law on
//! modern sets (exhaustively for small finite families, otherwise on random
//! sets); the point side runs [`check_law`] on each algebra. A failing point
//! witness is transported to the family by placing it at that point and `O`
//! everywhere else, then re-evaluated there.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Element;
use crate::checker::{check_law, search, tuples_of, LawReport, LawVerdict, SampleConfig};
use crate::error::Result;
use crate::law::{Law, LawStructure};
use crate::modern_set::{all_sets, sample_set, AlgebraFamily, ModernSet};
use crate::scalar::Scalar;

/// Exhaustive family checks run only when every carrier is finite, the
/// universe has at most this many points, and the tuple count stays under
/// [`EXHAUSTIVE_TUPLE_LIMIT`].
pub const EXHAUSTIVE_UNIVERSE_LIMIT: usize = 3;
pub const EXHAUSTIVE_TUPLE_LIMIT: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq)]
pub struct LiftReport<S: Scalar> {
    pub law: Law,
    pub family_verdict: LawVerdict<ModernSet<S>>,
    pub per_point: Vec<(String, LawReport<Element<S>>)>,
    /// Family verdict and aggregated point verdict agree.
    pub consistent: bool,
}

impl<S: Scalar> LiftReport<S> {
    /// `n/a` if any point is not applicable, else `fails` if any point
    /// fails, else `holds`.
    pub fn pointwise_category(&self) -> &'static str {
        let verdicts = || self.per_point.iter().map(|(_, r)| &r.verdict);
        if verdicts().any(LawVerdict::is_not_applicable) {
            "n/a"
        } else if verdicts().any(LawVerdict::fails) {
            "fails"
        } else {
            "holds"
        }
    }
}

/// Runs `law` on the family of modern sets, with no reference to the
/// per-point verdicts.
pub fn check_family_law<S: Scalar>(
    family: &Arc<AlgebraFamily<S>>,
    law: Law,
    cfg: &SampleConfig,
) -> Result<LawVerdict<ModernSet<S>>> {
    if law.needs_complement() && !family.has_complement() {
        return Ok(LawVerdict::NotApplicable(
            "some point algebra declares no complement".into(),
        ));
    }
    let exhaustive = family.len() <= EXHAUSTIVE_UNIVERSE_LIMIT
        && family
            .set_count()
            .and_then(|n| n.checked_pow(law.arity() as u32))
            .is_some_and(|t| t <= EXHAUSTIVE_TUPLE_LIMIT);
    if exhaustive {
        let sets = all_sets(family)?;
        return Ok(match search(family, law, tuples_of(&sets, law.arity()))? {
            (_, Some(w)) => LawVerdict::Fails(w),
            (cases, None) => LawVerdict::HoldsExhaustive { cases },
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let forced = [
        ModernSet::empty(family.clone()),
        ModernSet::full(family.clone()),
    ];
    let (n_forced, w) = search(family, law, tuples_of(&forced, law.arity()))?;
    if let Some(w) = w {
        return Ok(LawVerdict::Fails(w));
    }
    let random = (0..cfg.samples).map(|_| {
        (0..law.arity())
            .map(|_| sample_set(family, &mut rng))
            .collect::<Vec<_>>()
    });
    Ok(match search(family, law, random)? {
        (_, Some(w)) => LawVerdict::Fails(w),
        (samples, None) => LawVerdict::HoldsSampled {
            forced: n_forced,
            samples,
            seed: cfg.seed,
        },
    })
}

pub fn lift_check<S: Scalar>(
    family: &Arc<AlgebraFamily<S>>,
    law: Law,
    cfg: &SampleConfig,
) -> Result<LiftReport<S>> {
    let per_point = family
        .points()
        .map(|(p, alg)| Ok((p.to_string(), check_law(alg, law, cfg)?)))
        .collect::<Result<Vec<_>>>()?;

    let transported = per_point
        .iter()
        .enumerate()
        .find_map(|(i, (_, r))| r.verdict.witness().map(|w| (i, w)))
        .filter(|_| !(law.needs_complement() && !family.has_complement()));

    let family_verdict = match transported {
        Some((i, w)) => {
            let args: Vec<ModernSet<S>> = w
                .args
                .iter()
                .map(|value| {
                    let mut membership = ModernSet::empty(family.clone()).membership().to_vec();
                    membership[i] = value.clone();
                    ModernSet::new(family.clone(), membership)
                })
                .collect::<Result<_>>()?;
            match law.violation(family, &args)? {
                Some(fw) => LawVerdict::Fails(fw),
                // Unreachable unless equality is not pointwise; fall back to a
                // search so the inconsistency surfaces.
                None => check_family_law(family, law, cfg)?,
            }
        }
        None => check_family_law(family, law, cfg)?,
    };

    let mut report = LiftReport {
        law,
        family_verdict,
        per_point,
        consistent: false,
    };
    report.consistent = report.family_verdict.category() == report.pointwise_category();
    Ok(report)
}
