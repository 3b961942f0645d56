//! Weak Boolean algebras: a carrier with two binary operations `∗∧`, `∗∨` and
//! distinct constants `O`, `I` satisfying only the eight truth-table
//! identities. Nothing else (commutativity, associativity, distributivity) is
//! assumed; the law checker measures those.

use std::collections::HashMap;
use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

type TokenIndex = HashMap<Arc<str>, usize>;
use crate::Rational;

/// A value in some algebra's carrier. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element<S = Rational> {
    Token(Arc<str>),
    Scalar(S),
    Matrix(Matrix<S>),
}

impl<S> Element<S> {
    pub fn token(t: &str) -> Self {
        Element::Token(Arc::from(t))
    }

    pub fn as_token(&self) -> Option<&str> {
        match self {
            Element::Token(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&S> {
        match self {
            Element::Scalar(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix<S>> {
        match self {
            Element::Matrix(m) => Some(m),
            _ => None,
        }
    }
}

impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Token(t) => f.write_str(t),
            Element::Scalar(s) => write!(f, "{s}"),
            Element::Matrix(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CarrierKind {
    /// An explicitly listed carrier of the given size.
    Finite(usize),
    /// Exact rationals in `[0, 1]`.
    RationalUnitInterval,
    /// Normalized `n×n` rational matrices.
    Matrix(usize),
}

/// A weak Boolean algebra over an explicit token list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebraTable {
    elements: Vec<Arc<str>>,
    index: TokenIndex,
    zero: usize,
    one: usize,
    wedge: Vec<usize>,
    vee: Vec<usize>,
    complement: Option<Vec<usize>>,
    order: Option<Vec<bool>>,
}

impl FiniteAlgebraTable {
    /// Builds a table from `(lhs, rhs, result)` rows. Every ordered pair must
    /// appear exactly once in each table; the optional complement needs one
    /// row per element.
    pub fn new<T: AsRef<str>>(
        elements: &[T],
        zero: &str,
        one: &str,
        wedge_rows: &[(T, T, T)],
        vee_rows: &[(T, T, T)],
        complement_rows: Option<&[(T, T)]>,
    ) -> Result<Self> {
        let (elements, index) = Self::index_tokens(elements)?;
        let k = elements.len();
        let lookup = |t: &str, ctx: &str| {
            index.get(t).copied().ok_or_else(|| {
                Error::Structure(format!("{ctx} refers to `{t}`, which is not an element"))
            })
        };
        let zero = lookup(zero, "zero")?;
        let one = lookup(one, "one")?;
        let build = |rows: &[(T, T, T)], name: &str| -> Result<Vec<usize>> {
            let mut table = vec![None; k * k];
            for (a, b, r) in rows {
                let (a, b, r) = (a.as_ref(), b.as_ref(), r.as_ref());
                let slot = lookup(a, name)? * k + lookup(b, name)?;
                let r = lookup(r, name)?;
                if table[slot].replace(r).is_some() {
                    return Err(Error::Structure(format!(
                        "{name} table defines `{a} {b}` twice"
                    )));
                }
            }
            table
                .into_iter()
                .enumerate()
                .map(|(slot, r)| {
                    r.ok_or_else(|| {
                        Error::Structure(format!(
                            "{name} table is missing the row for `{} {}`",
                            elements[slot / k],
                            elements[slot % k]
                        ))
                    })
                })
                .collect()
        };
        let wedge = build(wedge_rows, "wedge")?;
        let vee = build(vee_rows, "vee")?;
        let complement = complement_rows
            .map(|rows| {
                let mut table = vec![None; k];
                for (a, img) in rows {
                    let (a, img) = (a.as_ref(), img.as_ref());
                    let i = lookup(a, "complement")?;
                    if table[i].replace(lookup(img, "complement")?).is_some() {
                        return Err(Error::Structure(format!(
                            "complement table defines `{a}` twice"
                        )));
                    }
                }
                table
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| {
                        c.ok_or_else(|| {
                            Error::Structure(format!(
                                "complement table is missing the row for `{}`",
                                elements[i]
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Self::assemble(elements, index, zero, one, wedge, vee, complement)
    }

    /// Builds a table from index functions over `0..elements.len()`.
    pub fn from_fns<T: AsRef<str>>(
        elements: &[T],
        zero: usize,
        one: usize,
        wedge: impl Fn(usize, usize) -> usize,
        vee: impl Fn(usize, usize) -> usize,
        complement: Option<&dyn Fn(usize) -> usize>,
    ) -> Result<Self> {
        let (elements, index) = Self::index_tokens(elements)?;
        let k = elements.len();
        if zero >= k || one >= k {
            return Err(Error::Structure("zero or one index out of range".into()));
        }
        let pairs = || (0..k).flat_map(move |a| (0..k).map(move |b| (a, b)));
        let wedge = pairs().map(|(a, b)| wedge(a, b)).collect();
        let vee = pairs().map(|(a, b)| vee(a, b)).collect();
        let complement = complement.map(|c| (0..k).map(c).collect());
        Self::assemble(elements, index, zero, one, wedge, vee, complement)
    }

    fn index_tokens<T: AsRef<str>>(elements: &[T]) -> Result<(Vec<Arc<str>>, TokenIndex)> {
        let elements: Vec<Arc<str>> = elements.iter().map(|t| Arc::from(t.as_ref())).collect();
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if e.is_empty() || e.chars().any(char::is_whitespace) {
                return Err(Error::Structure(format!("`{e}` is not a valid token")));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Structure(format!("duplicate element `{e}`")));
            }
        }
        Ok((elements, index))
    }

    fn assemble(
        elements: Vec<Arc<str>>,
        index: TokenIndex,
        zero: usize,
        one: usize,
        wedge: Vec<usize>,
        vee: Vec<usize>,
        complement: Option<Vec<usize>>,
    ) -> Result<Self> {
        let k = elements.len();
        if zero == one {
            return Err(Error::Structure(format!(
                "zero and one must be distinct (both are `{}`)",
                elements[zero]
            )));
        }
        let closed = wedge.iter().chain(&vee).chain(complement.iter().flatten());
        if let Some(&bad) = closed.clone().find(|&&r| r >= k) {
            return Err(Error::Structure(format!(
                "table result index {bad} is out of range"
            )));
        }
        Ok(FiniteAlgebraTable {
            elements,
            index,
            zero,
            one,
            wedge,
            vee,
            complement,
            order: None,
        })
    }

    /// Attaches a partial order given as `(lower, upper)` pairs; the stored
    /// order is their reflexive-transitive closure.
    pub fn with_order<T: AsRef<str>>(mut self, pairs: &[(T, T)]) -> Result<Self> {
        let k = self.len();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            leq[i * k + i] = true;
        }
        for (a, b) in pairs {
            let a = self.index_of(a.as_ref())?;
            let b = self.index_of(b.as_ref())?;
            leq[a * k + b] = true;
        }
        for m in 0..k {
            for i in 0..k {
                if leq[i * k + m] {
                    for j in 0..k {
                        if leq[m * k + j] {
                            leq[i * k + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if leq[i * k + j] && leq[j * k + i] {
                    return Err(Error::NotAPoset(
                        self.elements[i].to_string(),
                        self.elements[j].to_string(),
                    ));
                }
            }
        }
        self.order = Some(leq);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn tokens(&self) -> &[Arc<str>] {
        &self.elements
    }

    pub fn index_of(&self, token: &str) -> Result<usize> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| Error::NotInCarrier {
                algebra: "table".into(),
                element: token.to_string(),
            })
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn wedge_idx(&self, a: usize, b: usize) -> usize {
        self.wedge[a * self.len() + b]
    }

    pub fn vee_idx(&self, a: usize, b: usize) -> usize {
        self.vee[a * self.len() + b]
    }

    pub fn complement_idx(&self, a: usize) -> Option<usize> {
        self.complement.as_ref().map(|c| c[a])
    }

    pub fn leq_idx(&self, a: usize, b: usize) -> Option<bool> {
        self.order.as_ref().map(|o| o[a * self.len() + b])
    }

    pub fn has_complement(&self) -> bool {
        self.complement.is_some()
    }

    pub fn has_order(&self) -> bool {
        self.order.is_some()
    }
}

/// A lattice used as a weak Boolean algebra: `∗∧ = meet`, `∗∨ = join`,
/// `O = bottom`, `I = top`. A complement is attached when every element has a
/// unique lattice complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeAlgebra {
    lattice: FiniteLattice,
    tokens: Vec<Arc<str>>,
    complement: Option<Vec<usize>>,
}

impl LatticeAlgebra {
    pub fn new(lattice: FiniteLattice) -> Result<Self> {
        if lattice.len() < 2 {
            return Err(Error::Structure(
                "a one-element lattice has O = I and is not a weak Boolean algebra".into(),
            ));
        }
        let complement = (0..lattice.len())
            .map(|x| match lattice.complements_idx(x).as_slice() {
                [c] => Some(*c),
                _ => None,
            })
            .collect::<Option<Vec<_>>>();
        let tokens = lattice
            .elements()
            .iter()
            .map(|t| Arc::from(t.as_str()))
            .collect();
        Ok(LatticeAlgebra {
            lattice,
            tokens,
            complement,
        })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    Table(FiniteAlgebraTable),
    Lattice(LatticeAlgebra),
    /// `[0,1] ∩ ℚ` with min, max and `1 − q`.
    FuzzyUnit,
    /// Normalized `n×n` matrices with multiply / add, each followed by
    /// normalization.
    Matrix {
        dim: usize,
    },
}

/// A named weak Boolean algebra over scalar type `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra<S = Rational> {
    name: String,
    kind: AlgebraKind,
    _scalar: PhantomData<fn() -> S>,
}

impl<S: Scalar> Algebra<S> {
    pub fn new(name: impl Into<String>, kind: AlgebraKind) -> Result<Self> {
        if let AlgebraKind::Matrix { dim: 0 } = kind {
            return Err(Error::Shape(
                "matrix algebra dimension must be at least 1".into(),
            ));
        }
        Ok(Algebra {
            name: name.into(),
            kind,
            _scalar: PhantomData,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn carrier_kind(&self) -> CarrierKind {
        match &self.kind {
            AlgebraKind::Table(t) => CarrierKind::Finite(t.len()),
            AlgebraKind::Lattice(l) => CarrierKind::Finite(l.lattice.len()),
            AlgebraKind::FuzzyUnit => CarrierKind::RationalUnitInterval,
            AlgebraKind::Matrix { dim } => CarrierKind::Matrix(*dim),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.carrier_kind(), CarrierKind::Finite(_))
    }

    pub fn zero(&self) -> Element<S> {
        match &self.kind {
            AlgebraKind::Table(t) => Element::Token(t.elements[t.zero].clone()),
            AlgebraKind::Lattice(l) => Element::Token(l.tokens[l.lattice.bottom_index()].clone()),
            AlgebraKind::FuzzyUnit => Element::Scalar(S::zero()),
            AlgebraKind::Matrix { dim } => Element::Matrix(Matrix::zero(*dim)),
        }
    }

    pub fn one(&self) -> Element<S> {
        match &self.kind {
            AlgebraKind::Table(t) => Element::Token(t.elements[t.one].clone()),
            AlgebraKind::Lattice(l) => Element::Token(l.tokens[l.lattice.top_index()].clone()),
            AlgebraKind::FuzzyUnit => Element::Scalar(S::one()),
            AlgebraKind::Matrix { dim } => Element::Matrix(Matrix::identity(*dim)),
        }
    }

    fn not_in_carrier(&self, x: &Element<S>) -> Error {
        Error::NotInCarrier {
            algebra: self.name.clone(),
            element: x.to_string(),
        }
    }

    /// Index of a token in a finite carrier.
    fn token_index(&self, x: &Element<S>) -> Result<usize> {
        let found = match (&self.kind, x) {
            (AlgebraKind::Table(t), Element::Token(tok)) => t.index.get(tok).copied(),
            (AlgebraKind::Lattice(l), Element::Token(tok)) => l.lattice.index_of(tok).ok(),
            _ => None,
        };
        found.ok_or_else(|| self.not_in_carrier(x))
    }

    fn token_at(&self, i: usize) -> Element<S> {
        match &self.kind {
            AlgebraKind::Table(t) => Element::Token(t.elements[i].clone()),
            AlgebraKind::Lattice(l) => Element::Token(l.tokens[i].clone()),
            _ => unreachable!("token_at on an infinite carrier"),
        }
    }

    fn unit_scalar<'a>(&self, x: &'a Element<S>) -> Result<&'a S> {
        match x {
            Element::Scalar(q) if *q >= S::zero() && *q <= S::one() => Ok(q),
            _ => Err(self.not_in_carrier(x)),
        }
    }

    fn stored_matrix<'a>(&self, dim: usize, x: &'a Element<S>) -> Result<&'a Matrix<S>> {
        match x {
            Element::Matrix(m) if m.dim() == dim && m.is_normalized() => Ok(m),
            _ => Err(self.not_in_carrier(x)),
        }
    }

    /// Carrier membership.
    pub fn contains(&self, x: &Element<S>) -> bool {
        self.check_member(x).is_ok()
    }

    pub fn check_member(&self, x: &Element<S>) -> Result<()> {
        match &self.kind {
            AlgebraKind::Table(_) | AlgebraKind::Lattice(_) => self.token_index(x).map(|_| ()),
            AlgebraKind::FuzzyUnit => self.unit_scalar(x).map(|_| ()),
            AlgebraKind::Matrix { dim } => self.stored_matrix(*dim, x).map(|_| ()),
        }
    }

    /// `x ∗∧ y`, argument order preserved.
    pub fn wedge(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        match &self.kind {
            AlgebraKind::Table(t) => {
                let r = t.wedge_idx(self.token_index(x)?, self.token_index(y)?);
                Ok(self.token_at(r))
            }
            AlgebraKind::Lattice(l) => {
                let r = l
                    .lattice
                    .meet_idx(self.token_index(x)?, self.token_index(y)?);
                Ok(self.token_at(r))
            }
            AlgebraKind::FuzzyUnit => {
                let (a, b) = (self.unit_scalar(x)?, self.unit_scalar(y)?);
                Ok(Element::Scalar(a.min(b).clone()))
            }
            AlgebraKind::Matrix { dim } => {
                let (a, b) = (self.stored_matrix(*dim, x)?, self.stored_matrix(*dim, y)?);
                Ok(Element::Matrix(a.mul(b)?.normalize()))
            }
        }
    }

    /// `x ∗∨ y`, argument order preserved.
    pub fn vee(&self, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
        match &self.kind {
            AlgebraKind::Table(t) => {
                let r = t.vee_idx(self.token_index(x)?, self.token_index(y)?);
                Ok(self.token_at(r))
            }
            AlgebraKind::Lattice(l) => {
                let r = l
                    .lattice
                    .join_idx(self.token_index(x)?, self.token_index(y)?);
                Ok(self.token_at(r))
            }
            AlgebraKind::FuzzyUnit => {
                let (a, b) = (self.unit_scalar(x)?, self.unit_scalar(y)?);
                Ok(Element::Scalar(a.max(b).clone()))
            }
            AlgebraKind::Matrix { dim } => {
                let (a, b) = (self.stored_matrix(*dim, x)?, self.stored_matrix(*dim, y)?);
                Ok(Element::Matrix(a.add(b)?.normalize()))
            }
        }
    }

    pub fn has_complement(&self) -> bool {
        match &self.kind {
            AlgebraKind::Table(t) => t.has_complement(),
            AlgebraKind::Lattice(l) => l.complement.is_some(),
            AlgebraKind::FuzzyUnit => true,
            AlgebraKind::Matrix { .. } => false,
        }
    }

    pub fn complement(&self, x: &Element<S>) -> Result<Element<S>> {
        let unsupported = || Error::unsupported(&self.name, "complement");
        match &self.kind {
            AlgebraKind::Table(t) => {
                let i = self.token_index(x)?;
                t.complement_idx(i)
                    .map(|c| self.token_at(c))
                    .ok_or_else(unsupported)
            }
            AlgebraKind::Lattice(l) => {
                let i = self.token_index(x)?;
                let c = l.complement.as_ref().ok_or_else(unsupported)?;
                Ok(self.token_at(c[i]))
            }
            AlgebraKind::FuzzyUnit => Ok(Element::Scalar(S::one() - self.unit_scalar(x)?.clone())),
            AlgebraKind::Matrix { .. } => Err(unsupported()),
        }
    }

    pub fn has_order(&self) -> bool {
        match &self.kind {
            AlgebraKind::Table(t) => t.has_order(),
            AlgebraKind::Lattice(_) | AlgebraKind::FuzzyUnit => true,
            AlgebraKind::Matrix { .. } => false,
        }
    }

    /// The partial order `x ≤ y`, when the algebra declares one.
    pub fn leq(&self, x: &Element<S>, y: &Element<S>) -> Result<bool> {
        let unsupported = || Error::unsupported(&self.name, "a partial order");
        match &self.kind {
            AlgebraKind::Table(t) => {
                let (a, b) = (self.token_index(x)?, self.token_index(y)?);
                t.leq_idx(a, b).ok_or_else(unsupported)
            }
            AlgebraKind::Lattice(l) => Ok(l
                .lattice
                .leq_idx(self.token_index(x)?, self.token_index(y)?)),
            AlgebraKind::FuzzyUnit => Ok(self.unit_scalar(x)? <= self.unit_scalar(y)?),
            AlgebraKind::Matrix { .. } => Err(unsupported()),
        }
    }

    /// The carrier in declaration order; finite carriers only.
    pub fn elements(&self) -> Result<Vec<Element<S>>> {
        match &self.kind {
            AlgebraKind::Table(t) => Ok(t.elements.iter().cloned().map(Element::Token).collect()),
            AlgebraKind::Lattice(l) => Ok(l.tokens.iter().cloned().map(Element::Token).collect()),
            AlgebraKind::FuzzyUnit | AlgebraKind::Matrix { .. } => Err(Error::unsupported(
                &self.name,
                "element enumeration (infinite carrier)",
            )),
        }
    }

    /// Values every sampled check evaluates before drawing random ones.
    ///
    /// Fuzzy: `0, 1/2, 1`. Matrix: `O`, `I`, every matrix unit, and the pair
    /// `diag(2,1,…,1)`, `diag(1,2,…,2)` whose product normalizes to `I`.
    /// Finite: the whole carrier.
    pub fn forced_elements(&self) -> Vec<Element<S>> {
        match &self.kind {
            AlgebraKind::Table(_) | AlgebraKind::Lattice(_) => {
                self.elements().expect("finite carrier")
            }
            AlgebraKind::FuzzyUnit => vec![
                Element::Scalar(S::zero()),
                Element::Scalar(S::from_ratio(1, 2)),
                Element::Scalar(S::one()),
            ],
            AlgebraKind::Matrix { dim } => {
                let n = *dim;
                let mut out = vec![self.zero(), self.one()];
                for i in 0..n {
                    for j in 0..n {
                        out.push(Element::Matrix(Matrix::unit(n, i, j)));
                    }
                }
                if n >= 2 {
                    let two = S::from_ratio(2, 1);
                    let mut left = vec![S::one(); n];
                    left[0] = two.clone();
                    let mut right = vec![two; n];
                    right[0] = S::one();
                    out.push(Element::Matrix(Matrix::diagonal(left)));
                    out.push(Element::Matrix(Matrix::diagonal(right)));
                }
                out
            }
        }
    }

    /// Draws one carrier element. Finite carriers are sampled uniformly;
    /// fuzzy values have denominators up to 64; matrix entries are small
    /// integers or halves.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Element<S> {
        match &self.kind {
            AlgebraKind::Table(t) => self.token_at(rng.gen_range(0..t.len())),
            AlgebraKind::Lattice(l) => self.token_at(rng.gen_range(0..l.lattice.len())),
            AlgebraKind::FuzzyUnit => {
                let d = rng.gen_range(1..=64);
                let p = rng.gen_range(0..=d);
                Element::Scalar(S::from_ratio(p, d))
            }
            AlgebraKind::Matrix { dim } => {
                let rows = (0..*dim)
                    .map(|_| (0..*dim).map(|_| sample_entry(rng)).collect())
                    .collect();
                let m = Matrix::from_rows(rows).expect("square by construction");
                Element::Matrix(m.normalize())
            }
        }
    }
}

pub(crate) fn sample_entry<S: Scalar, R: Rng + ?Sized>(rng: &mut R) -> S {
    if rng.gen_bool(0.75) {
        S::from_ratio(rng.gen_range(-2..=2), 1)
    } else {
        S::from_ratio(if rng.gen_bool(0.5) { 1 } else { -1 }, 2)
    }
}

impl<S: Scalar> fmt::Display for Algebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.carrier_kind() {
            CarrierKind::Finite(k) => write!(f, "{} (finite, {k} elements)", self.name),
            CarrierKind::RationalUnitInterval => write!(f, "{} (rationals in [0,1])", self.name),
            CarrierKind::Matrix(n) => write!(f, "{} ({n}x{n} normalized matrices)", self.name),
        }
    }
}

pub fn apply_wedge<S: Scalar>(
    a: &Algebra<S>,
    x: &Element<S>,
    y: &Element<S>,
) -> Result<Element<S>> {
    a.wedge(x, y)
}

pub fn apply_vee<S: Scalar>(a: &Algebra<S>, x: &Element<S>, y: &Element<S>) -> Result<Element<S>> {
    a.vee(x, y)
}

pub fn apply_complement<S: Scalar>(a: &Algebra<S>, x: &Element<S>) -> Result<Element<S>> {
    a.complement(x)
}

pub fn enumerate_elements<S: Scalar>(a: &Algebra<S>) -> Result<Vec<Element<S>>> {
    a.elements()
}

/// One failed identity: `identity` evaluated at `inputs` gave `actual`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation<S = Rational> {
    pub identity: &'static str,
    pub inputs: Vec<Element<S>>,
    pub expected: Element<S>,
    pub actual: Element<S>,
}

impl<S: Scalar> fmt::Display for AxiomViolation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} at ({}): expected {}, got {}",
            self.identity,
            inputs.join(", "),
            self.expected,
            self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<S = Rational> {
    pub passed: bool,
    pub violations: Vec<AxiomViolation<S>>,
}

/// Selects `∗∧` or `∗∨`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Wedge,
    Vee,
}

impl BinaryOp {
    pub fn apply<S: Scalar>(
        self,
        a: &Algebra<S>,
        x: &Element<S>,
        y: &Element<S>,
    ) -> Result<Element<S>> {
        match self {
            BinaryOp::Wedge => a.wedge(x, y),
            BinaryOp::Vee => a.vee(x, y),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Wedge => "∗∧",
            BinaryOp::Vee => "∗∨",
        }
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BinaryOp::Wedge => "wedge",
            BinaryOp::Vee => "vee",
        })
    }
}

/// The eight identities, as `(name, op, lhs is I, rhs is I, result is I)`.
const WBA_IDENTITIES: [(&str, BinaryOp, bool, bool, bool); 8] = [
    ("O∗∧I=O", BinaryOp::Wedge, false, true, false),
    ("I∗∧O=O", BinaryOp::Wedge, true, false, false),
    ("O∗∧O=O", BinaryOp::Wedge, false, false, false),
    ("I∗∧I=I", BinaryOp::Wedge, true, true, true),
    ("O∗∨I=I", BinaryOp::Vee, false, true, true),
    ("I∗∨O=I", BinaryOp::Vee, true, false, true),
    ("O∗∨O=O", BinaryOp::Vee, false, false, false),
    ("I∗∨I=I", BinaryOp::Vee, true, true, true),
];

/// Evaluates the eight weak-Boolean identities, `O ≠ I`, and, when a
/// complement is declared, `O^C = I`, `I^C = O` and involution on every
/// enumerable element.
///
/// A result outside the carrier is a structural error, not a violation.
pub fn check_wba_axioms<S: Scalar>(a: &Algebra<S>) -> Result<AxiomReport<S>> {
    let (o, i) = (a.zero(), a.one());
    let pick = |is_one: bool| if is_one { i.clone() } else { o.clone() };
    let structural = |r: &Element<S>, what: &str| {
        if a.contains(r) {
            Ok(())
        } else {
            Err(Error::Structure(format!(
                "{what} produced `{r}`, which is outside the carrier of `{}`",
                a.name()
            )))
        }
    };
    let mut violations = Vec::new();
    if o == i {
        violations.push(AxiomViolation {
            identity: "O≠I",
            inputs: vec![],
            expected: o.clone(),
            actual: i.clone(),
        });
    }
    for (name, op, l, r, res) in WBA_IDENTITIES {
        let (x, y, expected) = (pick(l), pick(r), pick(res));
        let actual = op.apply(a, &x, &y)?;
        structural(&actual, name)?;
        if actual != expected {
            violations.push(AxiomViolation {
                identity: name,
                inputs: vec![x, y],
                expected,
                actual,
            });
        }
    }
    if a.has_complement() {
        for (name, x, expected) in [("O^C=I", &o, &i), ("I^C=O", &i, &o)] {
            let actual = a.complement(x)?;
            structural(&actual, name)?;
            if actual != *expected {
                violations.push(AxiomViolation {
                    identity: name,
                    inputs: vec![x.clone()],
                    expected: expected.clone(),
                    actual,
                });
            }
        }
        let carrier = if a.is_finite() {
            a.elements()?
        } else {
            a.forced_elements()
        };
        for x in carrier {
            let cx = a.complement(&x)?;
            structural(&cx, "complement")?;
            let back = a.complement(&cx)?;
            if back != x {
                violations.push(AxiomViolation {
                    identity: "(x^C)^C=x",
                    inputs: vec![x.clone()],
                    expected: x,
                    actual: back,
                });
            }
        }
    }
    Ok(AxiomReport {
        passed: violations.is_empty(),
        violations,
    })
}
