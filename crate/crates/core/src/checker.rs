//! Per-algebra law verdicts.
//!
//! Finite carriers are checked exhaustively over every tuple of the law's
//! arity, in lexicographic order of the declared elements, so the reported
//! witness is the first counterexample in that order. Infinite carriers are
//! checked on every tuple of the algebra's forced values followed by
//! `samples` random tuples from a ChaCha8 stream seeded with `seed`.

use std::fmt;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::Result;
use crate::law::{Law, LawStructure, LawWitness};
use crate::scalar::Scalar;
use crate::Rational;

pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Exhaustive on finite carriers, sampled otherwise.
    Auto,
    /// Sampled even on finite carriers; the forced pool shrinks to `{O, I}`.
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
    pub mode: CheckMode,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: DEFAULT_SAMPLES,
            seed: 0,
            mode: CheckMode::Auto,
        }
    }
}

impl SampleConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        SampleConfig {
            samples,
            seed,
            mode: CheckMode::Auto,
        }
    }

    pub fn sampled(mut self) -> Self {
        self.mode = CheckMode::Sampled;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LawVerdict<V> {
    HoldsExhaustive {
        cases: usize,
    },
    /// `forced` tuples of boundary values plus `samples` random tuples.
    HoldsSampled {
        forced: usize,
        samples: usize,
        seed: u64,
    },
    Fails(LawWitness<V>),
    NotApplicable(String),
}

impl<V> LawVerdict<V> {
    pub fn holds(&self) -> bool {
        matches!(
            self,
            LawVerdict::HoldsExhaustive { .. } | LawVerdict::HoldsSampled { .. }
        )
    }

    pub fn fails(&self) -> bool {
        matches!(self, LawVerdict::Fails(_))
    }

    pub fn is_not_applicable(&self) -> bool {
        matches!(self, LawVerdict::NotApplicable(_))
    }

    pub fn witness(&self) -> Option<&LawWitness<V>> {
        match self {
            LawVerdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// `holds`, `fails` or `n/a`.
    pub fn category(&self) -> &'static str {
        match self {
            LawVerdict::HoldsExhaustive { .. } | LawVerdict::HoldsSampled { .. } => "holds",
            LawVerdict::Fails(_) => "fails",
            LawVerdict::NotApplicable(_) => "n/a",
        }
    }
}

impl<V: fmt::Display> fmt::Display for LawVerdict<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawVerdict::HoldsExhaustive { cases } => write!(f, "holds (exhaustive, {cases} cases)"),
            LawVerdict::HoldsSampled {
                forced,
                samples,
                seed,
            } => write!(
                f,
                "holds (sampled, {forced} forced + {samples} random, seed {seed})"
            ),
            LawVerdict::Fails(w) => write!(f, "FAILS: {w}"),
            LawVerdict::NotApplicable(reason) => write!(f, "not applicable ({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport<V = Element<Rational>> {
    pub law: Law,
    pub verdict: LawVerdict<V>,
}

/// First violation among `tuples`, and how many were evaluated.
pub(crate) fn search<A: LawStructure>(
    a: &A,
    law: Law,
    tuples: impl IntoIterator<Item = Vec<A::Value>>,
) -> Result<(usize, Option<LawWitness<A::Value>>)> {
    let mut count = 0;
    for args in tuples {
        count += 1;
        if let Some(w) = law.violation(a, &args)? {
            return Ok((count, Some(w)));
        }
    }
    Ok((count, None))
}

/// Every tuple of `pool` of length `arity`, first coordinate slowest.
pub(crate) fn tuples_of<V: Clone>(pool: &[V], arity: usize) -> impl Iterator<Item = Vec<V>> + '_ {
    (0..arity)
        .map(|_| pool.iter().cloned())
        .multi_cartesian_product()
}

pub fn check_law<S: Scalar>(
    a: &Algebra<S>,
    law: Law,
    cfg: &SampleConfig,
) -> Result<LawReport<Element<S>>> {
    let verdict = if law.needs_complement() && !a.has_complement() {
        LawVerdict::NotApplicable(format!("{} declares no complement", a.name()))
    } else if a.is_finite() && cfg.mode == CheckMode::Auto {
        let carrier = a.elements()?;
        match search(a, law, tuples_of(&carrier, law.arity()))? {
            (_, Some(w)) => LawVerdict::Fails(w),
            (cases, None) => LawVerdict::HoldsExhaustive { cases },
        }
    } else {
        let pool = if a.is_finite() {
            vec![a.zero(), a.one()]
        } else {
            a.forced_elements()
        };
        match search(a, law, tuples_of(&pool, law.arity()))? {
            (_, Some(w)) => LawVerdict::Fails(w),
            (forced, None) => {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                let random = (0..cfg.samples).map(|_| {
                    (0..law.arity())
                        .map(|_| a.sample(&mut rng))
                        .collect::<Vec<_>>()
                });
                match search(a, law, random)? {
                    (_, Some(w)) => LawVerdict::Fails(w),
                    (samples, None) => LawVerdict::HoldsSampled {
                        forced,
                        samples,
                        seed: cfg.seed,
                    },
                }
            }
        }
    };
    Ok(LawReport { law, verdict })
}

/// [`check_law`] for every law in [`Law::ALL`] order.
pub fn check_all_laws<S: Scalar>(
    a: &Algebra<S>,
    cfg: &SampleConfig,
) -> Result<Vec<LawReport<Element<S>>>> {
    Law::ALL.iter().map(|&law| check_law(a, law, cfg)).collect()
}

/// A family `{x_i}` and `y` with `∨(x_i ∧ y) ≠ (∨x_i) ∧ y`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameWitness<V> {
    pub family: Vec<V>,
    pub y: V,
    pub lhs: V,
    pub rhs: V,
}

impl<V: fmt::Display> fmt::Display for FrameWitness<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam: Vec<String> = self.family.iter().map(ToString::to_string).collect();
        write!(
            f,
            "family {{{}}}, y = {}: join of meets = {}, meet of join = {}",
            fam.join(", "),
            self.y,
            self.lhs,
            self.rhs
        )
    }
}

/// Frame law over every family of `1..=cap` distinct pool values and every
/// `y` in the pool, with `∗∨` as join and `∗∧` as meet.
pub fn frame_law_over<A: LawStructure>(
    a: &A,
    pool: &[A::Value],
    cap: usize,
) -> Result<(usize, Option<FrameWitness<A::Value>>)> {
    let mut cases = 0;
    for size in 1..=cap.min(pool.len()) {
        for family in pool.iter().combinations(size) {
            let mut joined = family[0].clone();
            for x in &family[1..] {
                joined = a.vee(&joined, x)?;
            }
            for y in pool {
                cases += 1;
                let mut lhs = a.wedge(family[0], y)?;
                for x in &family[1..] {
                    lhs = a.vee(&lhs, &a.wedge(x, y)?)?;
                }
                let rhs = a.wedge(&joined, y)?;
                if lhs != rhs {
                    return Ok((
                        cases,
                        Some(FrameWitness {
                            family: family.into_iter().cloned().collect(),
                            y: y.clone(),
                            lhs,
                            rhs,
                        }),
                    ));
                }
            }
        }
    }
    Ok((cases, None))
}

/// Outcome of a frame-law check; mirrors [`LawVerdict`].
#[derive(Debug, Clone, PartialEq)]
pub enum FrameVerdict<V> {
    HoldsExhaustive { cases: usize, cap: usize },
    HoldsSampled { cases: usize, cap: usize, seed: u64 },
    Fails(FrameWitness<V>),
}

impl<V> FrameVerdict<V> {
    pub fn holds(&self) -> bool {
        !matches!(self, FrameVerdict::Fails(_))
    }
}

impl<V: fmt::Display> fmt::Display for FrameVerdict<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameVerdict::HoldsExhaustive { cases, cap } => {
                write!(f, "holds (exhaustive, families up to {cap}, {cases} cases)")
            }
            FrameVerdict::HoldsSampled { cases, cap, seed } => write!(
                f,
                "holds (sampled, families up to {cap}, {cases} cases, seed {seed})"
            ),
            FrameVerdict::Fails(w) => write!(f, "FAILS: {w}"),
        }
    }
}

/// Number of random carrier values added to the forced pool when checking
/// the frame law on an infinite carrier.
const FRAME_SAMPLE_POOL: usize = 12;

/// Frame law for a single algebra: exhaustive over families of up to
/// `min(|H|, 5)` elements on finite carriers; families of up to 3 values from
/// the forced pool plus a seeded random pool otherwise.
pub fn check_frame_law<S: Scalar>(
    a: &Algebra<S>,
    cfg: &SampleConfig,
) -> Result<FrameVerdict<Element<S>>> {
    if a.is_finite() {
        let pool = a.elements()?;
        let cap = pool.len().min(5);
        return Ok(match frame_law_over(a, &pool, cap)? {
            (_, Some(w)) => FrameVerdict::Fails(w),
            (cases, None) => FrameVerdict::HoldsExhaustive { cases, cap },
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut pool = a.forced_elements();
    for _ in 0..FRAME_SAMPLE_POOL {
        let e = a.sample(&mut rng);
        if !pool.contains(&e) {
            pool.push(e);
        }
    }
    let cap = 3;
    Ok(match frame_law_over(a, &pool, cap)? {
        (_, Some(w)) => FrameVerdict::Fails(w),
        (cases, None) => FrameVerdict::HoldsSampled {
            cases,
            cap,
            seed: cfg.seed,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{chain, classical, fuzzy_unit, lattice_algebra, matrix_algebra};
    use crate::lattice::FiniteLattice;
    use crate::Rational64;

    type Q = Rational64;

    #[test]
    fn classical_all_laws_exhaustive() {
        let reports = check_all_laws(&classical::<Q>(), &SampleConfig::default()).unwrap();
        for r in &reports {
            assert!(
                matches!(r.verdict, LawVerdict::HoldsExhaustive { .. }),
                "{}: {:?}",
                r.law,
                r.verdict
            );
        }
    }

    #[test]
    fn chain3_fails_only_complement_laws() {
        let a = chain::<Q>(3).unwrap();
        for r in check_all_laws(&a, &SampleConfig::default()).unwrap() {
            let expect_fail = matches!(r.law, Law::ExcludedMiddle | Law::NonContradiction);
            assert_eq!(r.verdict.fails(), expect_fail, "{}", r.law);
            if let Some(w) = r.verdict.witness() {
                assert_eq!(w.args, vec![Element::token("m")]);
                assert!(w.recheck(&a).unwrap());
            }
        }
    }

    #[test]
    fn fuzzy_midpoint_is_found() {
        let a = fuzzy_unit::<Q>();
        let r = check_law(&a, Law::ExcludedMiddle, &SampleConfig::new(10, 4)).unwrap();
        let w = r.verdict.witness().unwrap();
        assert_eq!(w.args, vec![Element::Scalar(Q::new(1, 2))]);
        let r = check_law(&a, Law::Distributive, &SampleConfig::new(200, 4)).unwrap();
        assert!(matches!(
            r.verdict,
            LawVerdict::HoldsSampled {
                samples: 200,
                seed: 4,
                ..
            }
        ));
    }

    #[test]
    fn matrix_complement_laws_are_not_applicable() {
        let a = matrix_algebra::<Q>(2).unwrap();
        let r = check_law(&a, Law::ExcludedMiddle, &SampleConfig::default()).unwrap();
        assert!(r.verdict.is_not_applicable());
        let r = check_law(&a, Law::CommutativeWedge, &SampleConfig::default()).unwrap();
        assert!(r.verdict.witness().unwrap().recheck(&a).unwrap());
    }

    #[test]
    fn sampled_mode_agrees_with_exhaustive_on_small_algebras() {
        let algebras = [
            classical::<Q>(),
            chain(3).unwrap(),
            lattice_algebra("m3", FiniteLattice::m3()).unwrap(),
            lattice_algebra("n5", FiniteLattice::n5()).unwrap(),
        ];
        let cfg = SampleConfig::new(2000, 9);
        for a in &algebras {
            for law in Law::ALL {
                let ex = check_law(a, law, &cfg).unwrap();
                let sa = check_law(a, law, &cfg.sampled()).unwrap();
                assert_eq!(
                    ex.verdict.category(),
                    sa.verdict.category(),
                    "{} {law}",
                    a.name()
                );
            }
        }
    }

    #[test]
    fn frame_law_on_algebras() {
        let m3 = lattice_algebra::<Q>("m3", FiniteLattice::m3()).unwrap();
        assert!(!check_frame_law(&m3, &SampleConfig::default())
            .unwrap()
            .holds());
        assert!(
            check_frame_law(&chain::<Q>(4).unwrap(), &SampleConfig::default())
                .unwrap()
                .holds()
        );
        assert!(
            check_frame_law(&fuzzy_unit::<Q>(), &SampleConfig::default())
                .unwrap()
                .holds()
        );
    }
}
