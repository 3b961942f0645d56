//! The laws the checker knows about and their equations, evaluated over
//! anything that offers `∗∧`, `∗∨`, a complement and the two constants.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::modern_set::{AlgebraFamily, ModernSet};
use crate::scalar::Scalar;

/// The operations a law equation needs.
pub trait LawStructure {
    type Value: Clone + PartialEq + fmt::Debug;

    fn wedge(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value>;
    fn vee(&self, x: &Self::Value, y: &Self::Value) -> Result<Self::Value>;
    fn complement(&self, x: &Self::Value) -> Result<Self::Value>;
    fn has_complement(&self) -> bool;
    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
}

impl<S: Scalar> LawStructure for Algebra<S> {
    type Value = Element<S>;

    fn wedge(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        Algebra::wedge(self, x, y)
    }

    fn vee(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        Algebra::vee(self, x, y)
    }

    fn complement(&self, x: &Element<S>) -> Result<Element<S>> {
        Algebra::complement(self, x)
    }

    fn has_complement(&self) -> bool {
        Algebra::has_complement(self)
    }

    fn zero(&self) -> Element<S> {
        Algebra::zero(self)
    }

    fn one(&self) -> Element<S> {
        Algebra::one(self)
    }
}

/// The family of all modern sets over `H`, with union, intersection and
/// complement as operations and the empty and full sets as constants.
impl<S: Scalar> LawStructure for Arc<AlgebraFamily<S>> {
    type Value = ModernSet<S>;

    fn wedge(&self, x: &ModernSet<S>, y: &ModernSet<S>) -> Result<ModernSet<S>> {
        x.intersection(y)
    }

    fn vee(&self, x: &ModernSet<S>, y: &ModernSet<S>) -> Result<ModernSet<S>> {
        x.union(y)
    }

    fn complement(&self, x: &ModernSet<S>) -> Result<ModernSet<S>> {
        x.complement()
    }

    fn has_complement(&self) -> bool {
        self.algebras().iter().all(|a| a.has_complement())
    }

    fn zero(&self) -> ModernSet<S> {
        ModernSet::empty(self.clone())
    }

    fn one(&self) -> ModernSet<S> {
        ModernSet::full(self.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    CommutativeWedge,
    CommutativeVee,
    AssociativeWedge,
    AssociativeVee,
    Absorption,
    Distributive,
    IdempotentWedge,
    IdempotentVee,
    ExcludedMiddle,
    NonContradiction,
    /// Diagnostic only.
    DeMorgan,
}

impl Law {
    pub const ALL: [Law; 11] = [
        Law::CommutativeWedge,
        Law::CommutativeVee,
        Law::AssociativeWedge,
        Law::AssociativeVee,
        Law::Absorption,
        Law::Distributive,
        Law::IdempotentWedge,
        Law::IdempotentVee,
        Law::ExcludedMiddle,
        Law::NonContradiction,
        Law::DeMorgan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::CommutativeWedge => "commutative-wedge",
            Law::CommutativeVee => "commutative-vee",
            Law::AssociativeWedge => "associative-wedge",
            Law::AssociativeVee => "associative-vee",
            Law::Absorption => "absorption",
            Law::Distributive => "distributive",
            Law::IdempotentWedge => "idempotent-wedge",
            Law::IdempotentVee => "idempotent-vee",
            Law::ExcludedMiddle => "excluded-middle",
            Law::NonContradiction => "non-contradiction",
            Law::DeMorgan => "de-morgan",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Law::IdempotentWedge
            | Law::IdempotentVee
            | Law::ExcludedMiddle
            | Law::NonContradiction => 1,
            Law::CommutativeWedge | Law::CommutativeVee | Law::Absorption | Law::DeMorgan => 2,
            Law::AssociativeWedge | Law::AssociativeVee | Law::Distributive => 3,
        }
    }

    pub fn needs_complement(self) -> bool {
        matches!(
            self,
            Law::ExcludedMiddle | Law::NonContradiction | Law::DeMorgan
        )
    }

    /// The equations making up the law; all must hold.
    pub fn equations(self) -> &'static [&'static str] {
        match self {
            Law::CommutativeWedge => &["x∧y = y∧x"],
            Law::CommutativeVee => &["x∨y = y∨x"],
            Law::AssociativeWedge => &["x∧(y∧z) = (x∧y)∧z"],
            Law::AssociativeVee => &["x∨(y∨z) = (x∨y)∨z"],
            Law::Absorption => &["x∨(y∧x) = x", "x∧(y∨x) = x"],
            Law::Distributive => &["x∨(y∧z) = (x∨y)∧(x∨z)", "x∧(y∨z) = (x∧y)∨(x∧z)"],
            Law::IdempotentWedge => &["x∧x = x"],
            Law::IdempotentVee => &["x∨x = x"],
            Law::ExcludedMiddle => &["x∨x^C = I"],
            Law::NonContradiction => &["x∧x^C = O"],
            Law::DeMorgan => &["(x∨y)^C = x^C∧y^C", "(x∧y)^C = x^C∨y^C"],
        }
    }

    /// Both sides of equation `idx` at `args`.
    pub fn sides<A: LawStructure>(
        self,
        a: &A,
        idx: usize,
        args: &[A::Value],
    ) -> Result<(A::Value, A::Value)> {
        if args.len() != self.arity() {
            return Err(Error::Precondition(format!(
                "{} takes {} arguments, got {}",
                self.name(),
                self.arity(),
                args.len()
            )));
        }
        let x = &args[0];
        Ok(match (self, idx) {
            (Law::CommutativeWedge, 0) => (a.wedge(x, &args[1])?, a.wedge(&args[1], x)?),
            (Law::CommutativeVee, 0) => (a.vee(x, &args[1])?, a.vee(&args[1], x)?),
            (Law::AssociativeWedge, 0) => {
                let (y, z) = (&args[1], &args[2]);
                (a.wedge(x, &a.wedge(y, z)?)?, a.wedge(&a.wedge(x, y)?, z)?)
            }
            (Law::AssociativeVee, 0) => {
                let (y, z) = (&args[1], &args[2]);
                (a.vee(x, &a.vee(y, z)?)?, a.vee(&a.vee(x, y)?, z)?)
            }
            (Law::Absorption, 0) => (a.vee(x, &a.wedge(&args[1], x)?)?, x.clone()),
            (Law::Absorption, 1) => (a.wedge(x, &a.vee(&args[1], x)?)?, x.clone()),
            (Law::Distributive, 0) => {
                let (y, z) = (&args[1], &args[2]);
                (
                    a.vee(x, &a.wedge(y, z)?)?,
                    a.wedge(&a.vee(x, y)?, &a.vee(x, z)?)?,
                )
            }
            (Law::Distributive, 1) => {
                let (y, z) = (&args[1], &args[2]);
                (
                    a.wedge(x, &a.vee(y, z)?)?,
                    a.vee(&a.wedge(x, y)?, &a.wedge(x, z)?)?,
                )
            }
            (Law::IdempotentWedge, 0) => (a.wedge(x, x)?, x.clone()),
            (Law::IdempotentVee, 0) => (a.vee(x, x)?, x.clone()),
            (Law::ExcludedMiddle, 0) => (a.vee(x, &a.complement(x)?)?, a.one()),
            (Law::NonContradiction, 0) => (a.wedge(x, &a.complement(x)?)?, a.zero()),
            (Law::DeMorgan, 0) => {
                let y = &args[1];
                (
                    a.complement(&a.vee(x, y)?)?,
                    a.wedge(&a.complement(x)?, &a.complement(y)?)?,
                )
            }
            (Law::DeMorgan, 1) => {
                let y = &args[1];
                (
                    a.complement(&a.wedge(x, y)?)?,
                    a.vee(&a.complement(x)?, &a.complement(y)?)?,
                )
            }
            _ => {
                return Err(Error::Precondition(format!(
                    "{} has no equation #{idx}",
                    self.name()
                )))
            }
        })
    }

    /// The first violated equation at `args`, if any.
    pub fn violation<A: LawStructure>(
        self,
        a: &A,
        args: &[A::Value],
    ) -> Result<Option<LawWitness<A::Value>>> {
        for (idx, eq) in self.equations().iter().enumerate() {
            let (lhs, rhs) = self.sides(a, idx, args)?;
            if lhs != rhs {
                return Ok(Some(LawWitness {
                    law: self,
                    equation: eq,
                    args: args.to_vec(),
                    lhs,
                    rhs,
                }));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown law `{s}`")))
    }
}

/// Arguments at which one of a law's equations has different sides.
#[derive(Debug, Clone, PartialEq)]
pub struct LawWitness<V> {
    pub law: Law,
    pub equation: &'static str,
    pub args: Vec<V>,
    pub lhs: V,
    pub rhs: V,
}

impl<V: Clone + PartialEq + fmt::Debug> LawWitness<V> {
    /// Re-evaluates the recorded equation from scratch. True when the
    /// violation is genuine and the stored sides are reproduced.
    pub fn recheck<A: LawStructure<Value = V>>(&self, a: &A) -> Result<bool> {
        let idx = self
            .law
            .equations()
            .iter()
            .position(|e| *e == self.equation)
            .ok_or_else(|| Error::Precondition(format!("unknown equation `{}`", self.equation)))?;
        let (lhs, rhs) = self.law.sides(a, idx, &self.args)?;
        Ok(lhs != rhs && lhs == self.lhs && rhs == self.rhs)
    }
}

impl<V: fmt::Display> fmt::Display for LawWitness<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        write!(f, "{} fails at ", self.equation)?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} = {a}", NAMES[i])?;
        }
        write!(f, ": lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{chain, classical, fuzzy_unit};
    use crate::Rational64;

    #[test]
    fn names_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.name().parse::<Law>().unwrap(), law);
            assert!(!law.equations().is_empty());
        }
        assert!("bogus".parse::<Law>().is_err());
    }

    #[test]
    fn midpoint_violates_excluded_middle() {
        let a = fuzzy_unit::<Rational64>();
        let half = Element::Scalar(Rational64::new(1, 2));
        let w = Law::ExcludedMiddle
            .violation(&a, std::slice::from_ref(&half))
            .unwrap()
            .unwrap();
        assert_eq!(w.lhs, half);
        assert!(w.recheck(&a).unwrap());
        assert!(Law::NonContradiction
            .violation(&a, &[half])
            .unwrap()
            .is_some());
    }

    #[test]
    fn classical_satisfies_de_morgan() {
        let a = classical::<Rational64>();
        let (o, i) = (a.zero(), a.one());
        for x in [&o, &i] {
            for y in [&o, &i] {
                assert!(Law::DeMorgan
                    .violation(&a, &[x.clone(), y.clone()])
                    .unwrap()
                    .is_none());
            }
        }
    }

    #[test]
    fn arity_is_enforced() {
        let a = chain::<Rational64>(3).unwrap();
        assert!(Law::Distributive.violation(&a, &[a.zero()]).is_err());
    }
}
