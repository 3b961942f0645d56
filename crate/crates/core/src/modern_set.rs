//! Modern sets: membership functions over a finite universe whose value at
//! each point lives in that point's own weak Boolean algebra.
//!
//! Union and intersection are pointwise `∗∨` and `∗∧` with the left set's
//! value as the left operand. No operand is ever swapped, so a
//! non-commutative point algebra yields a non-commutative set operation.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// The finite point set `X`, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    points: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<T: AsRef<str>>(points: &[T]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Structure(
                "a universe needs at least one point".into(),
            ));
        }
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::Structure(format!("duplicate point `{p}`")));
            }
        }
        Ok(Universe { points, index })
    }

    /// Points `x1, …, xn`.
    pub fn numbered(n: usize) -> Result<Self> {
        let points: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(&points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, point: &str) -> Result<usize> {
        self.index
            .get(point)
            .copied()
            .ok_or_else(|| Error::Structure(format!("unknown point `{point}`")))
    }
}

/// `H = {H_x | x ∈ X}`: one algebra per point, possibly different ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFamily<S = Rational> {
    universe: Universe,
    algebras: Vec<Arc<Algebra<S>>>,
}

impl<S: Scalar> AlgebraFamily<S> {
    pub fn new(universe: Universe, algebras: Vec<Arc<Algebra<S>>>) -> Result<Self> {
        if algebras.len() != universe.len() {
            return Err(Error::Structure(format!(
                "{} algebras supplied for {} points",
                algebras.len(),
                universe.len()
            )));
        }
        Ok(AlgebraFamily { universe, algebras })
    }

    /// The same algebra at every point.
    pub fn uniform(universe: Universe, algebra: Arc<Algebra<S>>) -> Self {
        let algebras = vec![algebra; universe.len()];
        AlgebraFamily { universe, algebras }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn algebras(&self) -> &[Arc<Algebra<S>>] {
        &self.algebras
    }

    pub fn algebra_at(&self, point: &str) -> Result<&Algebra<S>> {
        Ok(&self.algebras[self.universe.index_of(point)?])
    }

    pub fn points(&self) -> impl Iterator<Item = (&str, &Algebra<S>)> {
        self.universe
            .points
            .iter()
            .map(String::as_str)
            .zip(self.algebras.iter().map(Arc::as_ref))
    }

    /// `|H_x1| · … · |H_xn|` when every carrier is finite and the product fits.
    pub fn set_count(&self) -> Option<usize> {
        self.algebras
            .iter()
            .try_fold(1usize, |acc, a| match a.carrier_kind() {
                crate::algebra::CarrierKind::Finite(k) => acc.checked_mul(k),
                _ => None,
            })
    }
}

fn same_family<S: Scalar>(a: &Arc<AlgebraFamily<S>>, b: &Arc<AlgebraFamily<S>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A membership assignment `μ_A`.
#[derive(Debug, Clone)]
pub struct ModernSet<S = Rational> {
    family: Arc<AlgebraFamily<S>>,
    membership: Vec<Element<S>>,
}

impl<S: Scalar> PartialEq for ModernSet<S> {
    fn eq(&self, other: &Self) -> bool {
        self.membership == other.membership && same_family(&self.family, &other.family)
    }
}

impl<S: Scalar> Eq for ModernSet<S> {}

impl<S: Scalar> ModernSet<S> {
    /// Checks that every value lies in its point's carrier.
    pub fn new(family: Arc<AlgebraFamily<S>>, membership: Vec<Element<S>>) -> Result<Self> {
        if membership.len() != family.len() {
            return Err(Error::Structure(format!(
                "{} membership values supplied for {} points",
                membership.len(),
                family.len()
            )));
        }
        for (alg, value) in family.algebras.iter().zip(&membership) {
            alg.check_member(value)?;
        }
        Ok(ModernSet { family, membership })
    }

    /// Builds from `(point, value)` pairs that must cover the universe exactly once.
    pub fn from_pairs(
        family: Arc<AlgebraFamily<S>>,
        pairs: impl IntoIterator<Item = (String, Element<S>)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Element<S>>> = vec![None; family.len()];
        for (point, value) in pairs {
            let i = family.universe.index_of(&point)?;
            if slots[i].replace(value).is_some() {
                return Err(Error::Structure(format!("point `{point}` assigned twice")));
            }
        }
        let membership = slots
            .into_iter()
            .zip(family.universe.points())
            .map(|(v, p)| v.ok_or_else(|| Error::Structure(format!("point `{p}` has no value"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(family, membership)
    }

    /// `O_x` everywhere.
    pub fn empty(family: Arc<AlgebraFamily<S>>) -> Self {
        let membership = family.algebras.iter().map(|a| a.zero()).collect();
        ModernSet { family, membership }
    }

    /// `I_x` everywhere.
    pub fn full(family: Arc<AlgebraFamily<S>>) -> Self {
        let membership = family.algebras.iter().map(|a| a.one()).collect();
        ModernSet { family, membership }
    }

    pub(crate) fn from_trusted(family: Arc<AlgebraFamily<S>>, membership: Vec<Element<S>>) -> Self {
        ModernSet { family, membership }
    }

    pub fn family(&self) -> &Arc<AlgebraFamily<S>> {
        &self.family
    }

    pub fn membership(&self) -> &[Element<S>] {
        &self.membership
    }

    pub fn value_at(&self, point: &str) -> Result<&Element<S>> {
        Ok(&self.membership[self.family.universe.index_of(point)?])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Element<S>)> {
        self.family
            .universe
            .points
            .iter()
            .map(String::as_str)
            .zip(&self.membership)
    }

    fn pointwise(
        &self,
        other: &Self,
        op: impl Fn(&Algebra<S>, &Element<S>, &Element<S>) -> Result<Element<S>>,
    ) -> Result<Self> {
        if !same_family(&self.family, &other.family) {
            return Err(Error::IncompatibleFamily);
        }
        let membership = self
            .family
            .algebras
            .iter()
            .zip(self.membership.iter().zip(&other.membership))
            .map(|(alg, (a, b))| op(alg, a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModernSet {
            family: self.family.clone(),
            membership,
        })
    }

    /// `μ(x) = μ_self(x) ∗∨ μ_other(x)`.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, |alg, a, b| alg.vee(a, b))
    }

    /// `μ(x) = μ_self(x) ∗∧ μ_other(x)`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.pointwise(other, |alg, a, b| alg.wedge(a, b))
    }

    pub fn complement(&self) -> Result<Self> {
        let membership = self
            .iter()
            .zip(self.family.algebras.iter())
            .map(|((point, v), alg)| {
                if !alg.has_complement() {
                    return Err(Error::Unsupported {
                        algebra: alg.name().to_string(),
                        operation: format!("complement (needed at point `{point}`)"),
                    });
                }
                alg.complement(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModernSet {
            family: self.family.clone(),
            membership,
        })
    }

    /// Pointwise structural equality.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        if !same_family(&self.family, &other.family) {
            return Err(Error::IncompatibleFamily);
        }
        Ok(self.membership == other.membership)
    }

    pub fn is_empty(&self) -> bool {
        self.family
            .algebras
            .iter()
            .zip(&self.membership)
            .all(|(alg, v)| *v == alg.zero())
    }

    /// `self ⊆ other`: `μ_self(x) ≤ μ_other(x)` at every point.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        if !same_family(&self.family, &other.family) {
            return Err(Error::IncompatibleFamily);
        }
        for ((point, a), (alg, b)) in self
            .iter()
            .zip(self.family.algebras.iter().zip(&other.membership))
        {
            if !alg.has_order() {
                return Err(Error::Unsupported {
                    algebra: alg.name().to_string(),
                    operation: format!("a partial order (needed at point `{point}`)"),
                });
            }
            if !alg.leq(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when every value is `O_x` or `I_x`.
    pub fn is_crisp(&self) -> bool {
        self.family
            .algebras
            .iter()
            .zip(&self.membership)
            .all(|(alg, v)| *v == alg.zero() || *v == alg.one())
    }
}

impl<S: Scalar> fmt::Display for ModernSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}: {v}")?;
        }
        f.write_str("}")
    }
}

pub fn union<S: Scalar>(a: &ModernSet<S>, b: &ModernSet<S>) -> Result<ModernSet<S>> {
    a.union(b)
}

pub fn intersection<S: Scalar>(a: &ModernSet<S>, b: &ModernSet<S>) -> Result<ModernSet<S>> {
    a.intersection(b)
}

pub fn complement<S: Scalar>(a: &ModernSet<S>) -> Result<ModernSet<S>> {
    a.complement()
}

pub fn equals<S: Scalar>(a: &ModernSet<S>, b: &ModernSet<S>) -> Result<bool> {
    a.equals(b)
}

pub fn is_empty<S: Scalar>(a: &ModernSet<S>) -> bool {
    a.is_empty()
}

/// `contains(a, b)` means `a ⊆ b`.
pub fn contains<S: Scalar>(a: &ModernSet<S>, b: &ModernSet<S>) -> Result<bool> {
    a.is_subset_of(b)
}

/// An ordinary subset of the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispSet<S = Rational> {
    family: Arc<AlgebraFamily<S>>,
    members: Vec<bool>,
}

impl<S: Scalar> CrispSet<S> {
    pub fn new<T: AsRef<str>>(family: Arc<AlgebraFamily<S>>, members: &[T]) -> Result<Self> {
        let mut flags = vec![false; family.len()];
        for m in members {
            flags[family.universe.index_of(m.as_ref())?] = true;
        }
        Ok(CrispSet {
            family,
            members: flags,
        })
    }

    /// Bit `i` of `mask` marks the `i`-th point as a member.
    pub fn from_mask(family: Arc<AlgebraFamily<S>>, mask: u64) -> Self {
        let members = (0..family.len()).map(|i| mask >> i & 1 == 1).collect();
        CrispSet { family, members }
    }

    pub fn members(&self) -> Vec<&str> {
        self.family
            .universe
            .points
            .iter()
            .zip(&self.members)
            .filter(|(_, &m)| m)
            .map(|(p, _)| p.as_str())
            .collect()
    }

    pub fn contains_point(&self, i: usize) -> bool {
        self.members[i]
    }

    /// Members map to `I_x`, non-members to `O_x`.
    pub fn embed(&self) -> ModernSet<S> {
        let membership = self
            .family
            .algebras
            .iter()
            .zip(&self.members)
            .map(|(alg, &m)| if m { alg.one() } else { alg.zero() })
            .collect();
        ModernSet::from_trusted(self.family.clone(), membership)
    }
}

pub fn embed_crisp<S: Scalar>(c: &CrispSet<S>) -> ModernSet<S> {
    c.embed()
}

/// Every modern set over a finite family, in lexicographic order of the
/// per-point carriers (first point varies slowest).
pub fn all_sets<S: Scalar>(family: &Arc<AlgebraFamily<S>>) -> Result<Vec<ModernSet<S>>> {
    let carriers = family
        .algebras
        .iter()
        .map(|a| a.elements())
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![Vec::with_capacity(family.len())];
    for carrier in &carriers {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                carrier.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .map(|m| ModernSet::from_trusted(family.clone(), m))
        .collect())
}

/// Draws a modern set: each point takes one of its algebra's forced values
/// with probability 1/4, otherwise a random carrier element.
pub fn sample_set<S: Scalar, R: Rng + ?Sized>(
    family: &Arc<AlgebraFamily<S>>,
    rng: &mut R,
) -> ModernSet<S> {
    let membership = family
        .algebras
        .iter()
        .map(|alg| {
            if rng.gen_bool(0.25) {
                let forced = alg.forced_elements();
                forced[rng.gen_range(0..forced.len())].clone()
            } else {
                alg.sample(rng)
            }
        })
        .collect();
    ModernSet::from_trusted(family.clone(), membership)
}

/// A disagreement between the modern-set operations on crisp inputs and
/// ordinary set algebra on the member subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispMismatch {
    pub check: &'static str,
    pub subsets: Vec<Vec<String>>,
    pub point: Option<String>,
}

impl fmt::Display for CrispMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .subsets
            .iter()
            .map(|s| format!("{{{}}}", s.join(",")))
            .collect();
        write!(f, "{} fails for ({})", self.check, sets.join(", "))?;
        if let Some(p) = &self.point {
            write!(f, " at point {p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispOracleReport {
    pub universe_size: usize,
    pub crisp_sets: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub complement_checked: bool,
    pub mismatch: Option<CrispMismatch>,
}

impl CrispOracleReport {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub const DEFAULT_CRISP_UNIVERSE_CAP: usize = 4;

/// Checks, over every pair and triple of crisp sets, that union and
/// intersection agree with set union and intersection of the member subsets,
/// that complement agrees with set complement when every point has one, and
/// that commutativity, associativity, absorption and distributivity hold.
pub fn verify_crisp_restriction<S: Scalar>(
    family: &Arc<AlgebraFamily<S>>,
    universe_size_cap: usize,
) -> Result<CrispOracleReport> {
    let n = family.len();
    if n > universe_size_cap || n > 16 {
        return Err(Error::Bounds {
            what: "universe size",
            value: n,
            range: format!("1..={}", universe_size_cap.min(16)),
        });
    }
    let count = 1u64 << n;
    let full_mask = count - 1;
    let embedded: Vec<ModernSet<S>> = (0..count)
        .map(|m| CrispSet::from_mask(family.clone(), m).embed())
        .collect();
    let subsets = |masks: &[u64]| -> Vec<Vec<String>> {
        masks
            .iter()
            .map(|&m| {
                CrispSet::from_mask(family.clone(), m)
                    .members()
                    .into_iter()
                    .map(String::from)
                    .collect()
            })
            .collect()
    };
    let first_diff = |a: &ModernSet<S>, b: &ModernSet<S>| {
        a.membership
            .iter()
            .zip(&b.membership)
            .position(|(x, y)| x != y)
            .map(|i| family.universe.points[i].clone())
    };
    let mut report = CrispOracleReport {
        universe_size: n,
        crisp_sets: count as usize,
        pairs_checked: 0,
        triples_checked: 0,
        complement_checked: false,
        mismatch: None,
    };
    macro_rules! expect_eq {
        ($check:expr, $masks:expr, $lhs:expr, $rhs:expr) => {{
            let (lhs, rhs) = (&$lhs, &$rhs);
            if lhs != rhs {
                report.mismatch = Some(CrispMismatch {
                    check: $check,
                    subsets: subsets($masks),
                    point: first_diff(lhs, rhs),
                });
                return Ok(report);
            }
        }};
    }

    if family.algebras.iter().all(|a| a.has_complement()) {
        report.complement_checked = true;
        for a in 0..count {
            let c = embedded[a as usize].complement()?;
            expect_eq!(
                "complement = set complement",
                &[a],
                c,
                embedded[(!a & full_mask) as usize]
            );
        }
    }
    for a in 0..count {
        for b in 0..count {
            let (sa, sb) = (&embedded[a as usize], &embedded[b as usize]);
            let u = sa.union(sb)?;
            let i = sa.intersection(sb)?;
            expect_eq!("union = set union", &[a, b], u, embedded[(a | b) as usize]);
            expect_eq!(
                "intersection = set intersection",
                &[a, b],
                i,
                embedded[(a & b) as usize]
            );
            expect_eq!("A∨B = B∨A", &[a, b], u, sb.union(sa)?);
            expect_eq!("A∧B = B∧A", &[a, b], i, sb.intersection(sa)?);
            expect_eq!(
                "A∨(B∧A) = A",
                &[a, b],
                sa.union(&sb.intersection(sa)?)?,
                *sa
            );
            expect_eq!(
                "A∧(B∨A) = A",
                &[a, b],
                sa.intersection(&sb.union(sa)?)?,
                *sa
            );
            report.pairs_checked += 1;
        }
    }
    for a in 0..count {
        for b in 0..count {
            for c in 0..count {
                let (sa, sb, sc) = (
                    &embedded[a as usize],
                    &embedded[b as usize],
                    &embedded[c as usize],
                );
                let masks = [a, b, c];
                expect_eq!(
                    "A∧(B∧C) = (A∧B)∧C",
                    &masks,
                    sa.intersection(&sb.intersection(sc)?)?,
                    sa.intersection(sb)?.intersection(sc)?
                );
                expect_eq!(
                    "A∨(B∨C) = (A∨B)∨C",
                    &masks,
                    sa.union(&sb.union(sc)?)?,
                    sa.union(sb)?.union(sc)?
                );
                expect_eq!(
                    "A∨(B∧C) = (A∨B)∧(A∨C)",
                    &masks,
                    sa.union(&sb.intersection(sc)?)?,
                    sa.union(sb)?.intersection(&sa.union(sc)?)?
                );
                expect_eq!(
                    "A∧(B∨C) = (A∧B)∨(A∧C)",
                    &masks,
                    sa.intersection(&sb.union(sc)?)?,
                    sa.intersection(sb)?.union(&sa.intersection(sc)?)?
                );
                report.triples_checked += 1;
            }
        }
    }
    Ok(report)
}
