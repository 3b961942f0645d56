//! The four conditions for a family of modern sets to form a ring of
//! generalized fuzzy subsets:
//!
//! 1. the family is a complete Heyting algebra under union and intersection;
//! 2. it contains the powerset `P(X)` as a sublattice;
//! 3. union and intersection coincide with set union and intersection on `P(X)`;
//! 4. `A ∨ X = X` and `A ∧ ∅ = ∅`.
//!
//! Condition 1 is certified per point and lifted; for `|X| ≤ 2` with carriers
//! of at most 4 elements the product is also checked directly.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Element;
use crate::checker::{check_frame_law, check_law, frame_law_over, FrameVerdict, SampleConfig};
use crate::error::{Error, Result};
use crate::law::Law;
use crate::modern_set::{
    all_sets, sample_set, verify_crisp_restriction, AlgebraFamily, CrispOracleReport, CrispSet,
    ModernSet,
};
use crate::scalar::Scalar;

/// The laws that make an algebra a lattice.
pub const LATTICE_LAWS: [Law; 5] = [
    Law::CommutativeWedge,
    Law::CommutativeVee,
    Law::AssociativeWedge,
    Law::AssociativeVee,
    Law::Absorption,
];

const PRODUCT_CHECK_MAX_POINTS: usize = 2;
const PRODUCT_CHECK_MAX_CARRIER: usize = 4;
const PRODUCT_FRAME_CAP: usize = 4;
/// Condition 4 is exhaustive when the family has at most this many sets.
const BOUNDS_EXHAUSTIVE_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct Condition {
    pub number: u8,
    pub name: &'static str,
    pub holds: bool,
    pub exhaustive: bool,
    pub detail: String,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) {}: {} [{}] {}",
            self.number,
            self.name,
            if self.holds { "holds" } else { "FAILS" },
            if self.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            },
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GfRingReport<S: Scalar> {
    pub conditions: [Condition; 4],
    pub per_point_cha: Vec<(String, FrameVerdict<Element<S>>)>,
    pub product_cha: Option<FrameVerdict<ModernSet<S>>>,
    pub crisp: CrispOracleReport,
}

impl<S: Scalar> GfRingReport<S> {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }
}

/// Errors with a precondition failure when a point's algebra is not a
/// lattice (some lattice law fails) and a bounds error when `|X| > universe_cap`.
pub fn check_gf_ring_conditions<S: Scalar>(
    family: &Arc<AlgebraFamily<S>>,
    universe_cap: usize,
    cfg: &SampleConfig,
) -> Result<GfRingReport<S>> {
    if family.len() > universe_cap {
        return Err(Error::Bounds {
            what: "universe size",
            value: family.len(),
            range: format!("1..={universe_cap}"),
        });
    }
    for (point, alg) in family.points() {
        for law in LATTICE_LAWS {
            if let Some(w) = check_law(alg, law, cfg)?.verdict.witness() {
                return Err(Error::Precondition(format!(
                    "algebra `{}` at point `{point}` is not a lattice: {w}",
                    alg.name()
                )));
            }
        }
    }

    // (1)
    let per_point_cha = family
        .points()
        .map(|(p, alg)| Ok((p.to_string(), check_frame_law(alg, cfg)?)))
        .collect::<Result<Vec<_>>>()?;
    let small = family.len() <= PRODUCT_CHECK_MAX_POINTS
        && family.algebras().iter().all(|a| {
            matches!(a.carrier_kind(), crate::CarrierKind::Finite(k) if k <= PRODUCT_CHECK_MAX_CARRIER)
        });
    let product_cha = if small {
        let sets = all_sets(family)?;
        Some(match frame_law_over(family, &sets, PRODUCT_FRAME_CAP)? {
            (_, Some(w)) => FrameVerdict::Fails(w),
            (cases, None) => FrameVerdict::HoldsExhaustive {
                cases,
                cap: PRODUCT_FRAME_CAP,
            },
        })
    } else {
        None
    };
    let cha = {
        let failing = per_point_cha.iter().find(|(_, v)| !v.holds());
        let exhaustive = per_point_cha.iter().all(|(_, v)| {
            matches!(
                v,
                FrameVerdict::HoldsExhaustive { .. } | FrameVerdict::Fails(_)
            )
        });
        let (holds, detail) = match (failing, &product_cha) {
            (Some((p, v)), _) => (false, format!("point {p}: {v}")),
            (None, Some(v @ FrameVerdict::Fails(_))) => (false, format!("product: {v}")),
            (None, Some(v)) => (true, format!("every point is a cHa; product {v}")),
            (None, None) => (true, "every point is a cHa (lifted pointwise)".to_string()),
        };
        Condition {
            number: 1,
            name: "complete Heyting algebra",
            holds,
            exhaustive,
            detail,
        }
    };

    // (2)
    let n = family.len();
    let crisp: Vec<ModernSet<S>> = (0..1u64 << n)
        .map(|m| CrispSet::from_mask(family.clone(), m).embed())
        .collect();
    let mut sublattice = Condition {
        number: 2,
        name: "contains P(X) as a sublattice",
        holds: true,
        exhaustive: true,
        detail: format!("{} crisp sets, embedding injective and closed", crisp.len()),
    };
    'outer: for (i, a) in crisp.iter().enumerate() {
        if let Some(j) = crisp[..i].iter().position(|b| b == a) {
            sublattice.holds = false;
            sublattice.detail = format!("crisp sets #{j} and #{i} embed to the same modern set");
            break;
        }
        for b in &crisp {
            for (what, r) in [("union", a.union(b)?), ("intersection", a.intersection(b)?)] {
                if !r.is_crisp() {
                    sublattice.holds = false;
                    sublattice.detail = format!("{what} of {a} and {b} is not crisp: {r}");
                    break 'outer;
                }
            }
        }
    }

    // (3)
    let crisp_report = verify_crisp_restriction(family, universe_cap)?;
    let operations = Condition {
        number: 3,
        name: "∨/∧ coincide with ∪/∩ on P(X)",
        holds: crisp_report.holds(),
        exhaustive: true,
        detail: match &crisp_report.mismatch {
            Some(m) => m.to_string(),
            None => format!(
                "{} pairs, {} triples",
                crisp_report.pairs_checked, crisp_report.triples_checked
            ),
        },
    };

    // (4)
    let (full, empty) = (
        ModernSet::full(family.clone()),
        ModernSet::empty(family.clone()),
    );
    let exhaustive = family
        .set_count()
        .is_some_and(|c| c <= BOUNDS_EXHAUSTIVE_LIMIT);
    let candidates: Vec<ModernSet<S>> = if exhaustive {
        all_sets(family)?
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        crisp
            .iter()
            .cloned()
            .chain((0..cfg.samples).map(|_| sample_set(family, &mut rng)))
            .collect()
    };
    let mut bounds = Condition {
        number: 4,
        name: "A∨X = X and A∧∅ = ∅",
        holds: true,
        exhaustive,
        detail: format!("{} sets checked", candidates.len()),
    };
    for a in &candidates {
        if a.union(&full)? != full {
            bounds.holds = false;
            bounds.detail = format!("A∨X ≠ X for A = {a}");
            break;
        }
        if a.intersection(&empty)? != empty {
            bounds.holds = false;
            bounds.detail = format!("A∧∅ ≠ ∅ for A = {a}");
            break;
        }
    }

    Ok(GfRingReport {
        conditions: [cha, sublattice, operations, bounds],
        per_point_cha,
        product_cha,
        crisp: crisp_report,
    })
}
