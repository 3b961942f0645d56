//! Places a family of algebras in the chain
//! classical ⊂ fuzzy ⊂ generalized fuzzy ⊂ L-fuzzy ⊂ modern.
//!
//! Each point gets the most specific level its algebra supports; the family
//! gets the least specific of its points. Replacing one point's algebra with
//! a less lawful one therefore never makes the family label more specific.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{check_wba_axioms, AlgebraKind, CarrierKind, Element};
use crate::checker::{check_frame_law, check_law, FrameVerdict, LawReport, SampleConfig};
use crate::error::Result;
use crate::gf_ring::LATTICE_LAWS;
use crate::modern_set::AlgebraFamily;
use crate::scalar::Scalar;
use crate::Algebra;

/// Ordered from least to most specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Modern,
    LFuzzy,
    GeneralizedFuzzy,
    FuzzyLike,
    Classical,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Modern => "modern",
            Level::LFuzzy => "L-fuzzy",
            Level::GeneralizedFuzzy => "generalized-fuzzy",
            Level::FuzzyLike => "fuzzy-like",
            Level::Classical => "classical",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointEvidence<S: Scalar> {
    pub point: String,
    pub algebra: String,
    /// Exactly `{O, I}` with the Boolean tables.
    pub classical: bool,
    /// The rational unit interval with min, max and `1 − q`.
    pub fuzzy_unit: bool,
    pub lattice_laws: Vec<LawReport<Element<S>>>,
    /// Present only when every lattice law holds.
    pub cha: Option<FrameVerdict<Element<S>>>,
    pub level: Level,
}

impl<S: Scalar> PointEvidence<S> {
    pub fn is_lattice(&self) -> bool {
        self.lattice_laws.iter().all(|r| r.verdict.holds())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyClassification<S: Scalar> {
    pub level: Level,
    pub per_point_evidence: Vec<PointEvidence<S>>,
}

pub fn classify_algebra<S: Scalar>(
    point: &str,
    alg: &Algebra<S>,
    cfg: &SampleConfig,
) -> Result<PointEvidence<S>> {
    let classical = alg.carrier_kind() == CarrierKind::Finite(2) && check_wba_axioms(alg)?.passed;
    let fuzzy_unit = matches!(alg.kind(), AlgebraKind::FuzzyUnit);
    let lattice_laws = LATTICE_LAWS
        .iter()
        .map(|&law| check_law(alg, law, cfg))
        .collect::<Result<Vec<_>>>()?;
    let is_lattice = lattice_laws.iter().all(|r| r.verdict.holds());
    let cha = if is_lattice {
        Some(check_frame_law(alg, cfg)?)
    } else {
        None
    };
    let level = if classical {
        Level::Classical
    } else if fuzzy_unit {
        Level::FuzzyLike
    } else if cha.as_ref().is_some_and(FrameVerdict::holds) {
        Level::GeneralizedFuzzy
    } else if is_lattice {
        Level::LFuzzy
    } else {
        Level::Modern
    };
    Ok(PointEvidence {
        point: point.to_string(),
        algebra: alg.name().to_string(),
        classical,
        fuzzy_unit,
        lattice_laws,
        cha,
        level,
    })
}

pub fn classify_family<S: Scalar>(
    family: &Arc<AlgebraFamily<S>>,
    cfg: &SampleConfig,
) -> Result<FamilyClassification<S>> {
    let per_point_evidence = family
        .points()
        .map(|(p, alg)| classify_algebra(p, alg, cfg))
        .collect::<Result<Vec<_>>>()?;
    let level = per_point_evidence
        .iter()
        .map(|e| e.level)
        .min()
        .expect("universes are non-empty");
    Ok(FamilyClassification {
        level,
        per_point_evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{chain, classical, fuzzy_unit, lattice_algebra, matrix_algebra};
    use crate::lattice::FiniteLattice;
    use crate::modern_set::Universe;
    use crate::Rational64;

    type Q = Rational64;

    fn classify(algs: Vec<Algebra<Q>>) -> Level {
        let u = Universe::numbered(algs.len()).unwrap();
        let f = Arc::new(AlgebraFamily::new(u, algs.into_iter().map(Arc::new).collect()).unwrap());
        classify_family(&f, &SampleConfig::new(200, 0))
            .unwrap()
            .level
    }

    #[test]
    fn hierarchy_examples() {
        assert_eq!(classify(vec![classical(), classical()]), Level::Classical);
        assert_eq!(classify(vec![fuzzy_unit(), fuzzy_unit()]), Level::FuzzyLike);
        assert_eq!(classify(vec![fuzzy_unit(), classical()]), Level::FuzzyLike);
        assert_eq!(classify(vec![chain(3).unwrap()]), Level::GeneralizedFuzzy);
        let m3 = lattice_algebra("m3", FiniteLattice::m3()).unwrap();
        assert_eq!(classify(vec![classical(), m3]), Level::LFuzzy);
        assert_eq!(
            classify(vec![fuzzy_unit(), matrix_algebra(2).unwrap()]),
            Level::Modern
        );
    }

    #[test]
    fn order_of_levels() {
        assert!(Level::Modern < Level::LFuzzy);
        assert!(Level::FuzzyLike < Level::Classical);
    }
}
