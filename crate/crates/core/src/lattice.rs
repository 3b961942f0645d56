//! Finite lattices given by Hasse diagrams.
//!
//! The order is the reflexive-transitive closure of the cover pairs. Meets and
//! joins are computed once at construction by brute force over the order and
//! stored as tables; a pair without a unique greatest lower bound or least
//! upper bound rejects the whole diagram.
//!
//! Every law check is exhaustive and scans tuples in lexicographic order of
//! the declared element list, so the first counterexample reported is the
//! same on every run.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Outcome of a single law check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
    NotApplicable(String),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }
}

/// A tuple of elements on which the two sides of an equation differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWitness {
    pub equation: &'static str,
    pub args: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for LatticeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at ({}): {} != {}",
            self.equation,
            self.args.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

/// A family `{x_i}` and an element `y` violating `∨(x_i ∧ y) = (∨x_i) ∧ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFrameWitness {
    pub family: Vec<String>,
    pub y: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for LatticeFrameWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family {{{}}} with y = {}: join of meets = {} != {} = meet of join",
            self.family.join(", "),
            self.y,
            self.lhs,
            self.rhs
        )
    }
}

/// An element that has zero or several complements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementWitness {
    pub element: String,
    pub complements: Vec<String>,
}

impl fmt::Display for ComplementWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} has {} complements [{}]",
            self.element,
            self.complements.len(),
            self.complements.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

/// Builds a lattice from its elements and cover pairs `(lower, upper)`.
pub fn lattice_from_hasse<S: AsRef<str>>(
    elements: &[S],
    covers: &[(S, S)],
) -> Result<FiniteLattice> {
    FiniteLattice::from_hasse(elements, covers)
}

impl FiniteLattice {
    pub fn from_hasse<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        if elements.is_empty() {
            return Err(Error::Structure(
                "a lattice needs at least one element".into(),
            ));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Structure(format!("duplicate element `{e}`")));
            }
        }
        let lookup = |t: &str| {
            index
                .get(t)
                .copied()
                .ok_or_else(|| Error::Structure(format!("cover references unknown element `{t}`")))
        };
        let covers = covers
            .iter()
            .map(|(lo, hi)| Ok((lookup(lo.as_ref())?, lookup(hi.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;

        let k = elements.len();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            leq[i * k + i] = true;
        }
        for &(lo, hi) in &covers {
            if lo == hi {
                return Err(Error::NotAPoset(elements[lo].clone(), elements[hi].clone()));
            }
            leq[lo * k + hi] = true;
        }
        // Warshall closure.
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
                    return Err(Error::NotAPoset(elements[i].clone(), elements[j].clone()));
                }
            }
        }

        let mut meet = vec![0; k * k];
        let mut join = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                let lower: Vec<usize> = (0..k)
                    .filter(|&z| leq[z * k + x] && leq[z * k + y])
                    .collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&g| lower.iter().all(|&z| leq[z * k + g]));
                let upper: Vec<usize> = (0..k)
                    .filter(|&z| leq[x * k + z] && leq[y * k + z])
                    .collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&u| upper.iter().all(|&z| leq[u * k + z]));
                let not_lattice = |missing| Error::NotALattice {
                    x: elements[x].clone(),
                    y: elements[y].clone(),
                    missing,
                };
                meet[x * k + y] = glb.ok_or_else(|| not_lattice("meet"))?;
                join[x * k + y] = lub.ok_or_else(|| not_lattice("join"))?;
            }
        }
        let bottom = (0..k).fold(0, |acc, x| meet[acc * k + x]);
        let top = (0..k).fold(0, |acc, x| join[acc * k + x]);

        Ok(FiniteLattice {
            elements,
            index,
            covers,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The lattice of subsets of `{e1, …, en}` ordered by inclusion, for
    /// `1 ≤ n ≤ 6`. Elements are listed by ascending bitmask.
    pub fn powerset(n: usize) -> Result<Self> {
        if !(1..=6).contains(&n) {
            return Err(Error::Bounds {
                what: "powerset size",
                value: n,
                range: "1..=6".into(),
            });
        }
        let name = |mask: usize| {
            let members = (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| format!("e{}", b + 1))
                .join(",");
            format!("{{{members}}}")
        };
        let elements: Vec<String> = (0..1usize << n).map(name).collect();
        let mut covers = Vec::new();
        for mask in 0..1usize << n {
            for b in 0..n {
                if mask & (1 << b) == 0 {
                    covers.push((name(mask), name(mask | 1 << b)));
                }
            }
        }
        Self::from_hasse(&elements, &covers)
    }

    /// The chain `0 < 1 < … < k-1` with the given tokens.
    pub fn chain<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let covers: Vec<(&str, &str)> = tokens
            .iter()
            .tuple_windows()
            .map(|(a, b)| (a.as_ref(), b.as_ref()))
            .collect();
        let tokens: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
        Self::from_hasse(&tokens, &covers)
    }

    /// The diamond `M3`: bottom `0`, atoms `a b c`, top `1`.
    pub fn m3() -> Self {
        Self::from_hasse(
            &["0", "a", "b", "c", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        )
        .expect("M3 is a lattice")
    }

    /// The pentagon `N5`: `0 < a < b < 1` and `0 < c < 1`.
    pub fn n5() -> Self {
        Self::from_hasse(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
        )
        .expect("N5 is a lattice")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn covers(&self) -> impl Iterator<Item = (&str, &str)> {
        self.covers
            .iter()
            .map(|&(lo, hi)| (self.elements[lo].as_str(), self.elements[hi].as_str()))
    }

    pub fn index_of(&self, token: &str) -> Result<usize> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| Error::NotInCarrier {
                algebra: "lattice".into(),
                element: token.to_string(),
            })
    }

    pub fn token(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn bottom(&self) -> &str {
        &self.elements[self.bottom]
    }

    pub fn top(&self) -> &str {
        &self.elements[self.top]
    }

    pub fn bottom_index(&self) -> usize {
        self.bottom
    }

    pub fn top_index(&self) -> usize {
        self.top
    }

    pub fn leq_idx(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn meet_idx(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn join_idx(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq_idx(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn meet(&self, x: &str, y: &str) -> Result<&str> {
        Ok(self.token(self.meet_idx(self.index_of(x)?, self.index_of(y)?)))
    }

    pub fn join(&self, x: &str, y: &str) -> Result<&str> {
        Ok(self.token(self.join_idx(self.index_of(x)?, self.index_of(y)?)))
    }

    /// All elements `c` with `x ∨ c = top` and `x ∧ c = bottom`, in declaration order.
    pub fn complements_idx(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| self.join_idx(x, c) == self.top && self.meet_idx(x, c) == self.bottom)
            .collect()
    }

    /// The unique complement of `x`, if there is exactly one.
    pub fn complement_of(&self, x: &str) -> Result<Option<&str>> {
        let cs = self.complements_idx(self.index_of(x)?);
        Ok(match cs.as_slice() {
            [c] => Some(self.token(*c)),
            _ => None,
        })
    }

    /// First tuple (lexicographic in declaration order) violating any of the
    /// given equations.
    fn first_violation(&self, arity: usize, equations: &[Equation]) -> Verdict<LatticeWitness> {
        let k = self.len();
        for args in (0..arity).map(|_| 0..k).multi_cartesian_product() {
            for eq in equations {
                let (lhs, rhs) = (eq.eval)(self, &args);
                if lhs != rhs {
                    return Verdict::Fails(LatticeWitness {
                        equation: eq.text,
                        args: args.iter().map(|&i| self.elements[i].clone()).collect(),
                        lhs: self.elements[lhs].clone(),
                        rhs: self.elements[rhs].clone(),
                    });
                }
            }
        }
        Verdict::Holds
    }

    pub fn check_distributive(&self) -> Verdict<LatticeWitness> {
        self.first_violation(3, &DISTRIBUTIVE)
    }
}

impl fmt::Display for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice [{}]", self.elements.join(" "))
    }
}

struct Equation {
    text: &'static str,
    eval: fn(&FiniteLattice, &[usize]) -> (usize, usize),
}

const COMMUTATIVE: [Equation; 2] = [
    Equation {
        text: "x∧y = y∧x",
        eval: |l, a| (l.meet_idx(a[0], a[1]), l.meet_idx(a[1], a[0])),
    },
    Equation {
        text: "x∨y = y∨x",
        eval: |l, a| (l.join_idx(a[0], a[1]), l.join_idx(a[1], a[0])),
    },
];

const ASSOCIATIVE: [Equation; 2] = [
    Equation {
        text: "x∧(y∧z) = (x∧y)∧z",
        eval: |l, a| {
            (
                l.meet_idx(a[0], l.meet_idx(a[1], a[2])),
                l.meet_idx(l.meet_idx(a[0], a[1]), a[2]),
            )
        },
    },
    Equation {
        text: "x∨(y∨z) = (x∨y)∨z",
        eval: |l, a| {
            (
                l.join_idx(a[0], l.join_idx(a[1], a[2])),
                l.join_idx(l.join_idx(a[0], a[1]), a[2]),
            )
        },
    },
];

const ABSORPTION: [Equation; 2] = [
    Equation {
        text: "x∨(y∧x) = x",
        eval: |l, a| (l.join_idx(a[0], l.meet_idx(a[1], a[0])), a[0]),
    },
    Equation {
        text: "x∧(y∨x) = x",
        eval: |l, a| (l.meet_idx(a[0], l.join_idx(a[1], a[0])), a[0]),
    },
];

const IDEMPOTENT: [Equation; 2] = [
    Equation {
        text: "x∧x = x",
        eval: |l, a| (l.meet_idx(a[0], a[0]), a[0]),
    },
    Equation {
        text: "x∨x = x",
        eval: |l, a| (l.join_idx(a[0], a[0]), a[0]),
    },
];

const DISTRIBUTIVE: [Equation; 2] = [
    Equation {
        text: "x∨(y∧z) = (x∨y)∧(x∨z)",
        eval: |l, a| {
            (
                l.join_idx(a[0], l.meet_idx(a[1], a[2])),
                l.meet_idx(l.join_idx(a[0], a[1]), l.join_idx(a[0], a[2])),
            )
        },
    },
    Equation {
        text: "x∧(y∨z) = (x∧y)∨(x∧z)",
        eval: |l, a| {
            (
                l.meet_idx(a[0], l.join_idx(a[1], a[2])),
                l.join_idx(l.meet_idx(a[0], a[1]), l.meet_idx(a[0], a[2])),
            )
        },
    },
];

/// The distributive law exactly as it is sometimes misprinted, with `y` in
/// place of `x` in the second factor. Fails even on powersets.
const DISTRIBUTIVE_LITERAL: [Equation; 2] = [
    Equation {
        text: "x∨(y∧z) = (x∨y)∧(y∨z)",
        eval: |l, a| {
            (
                l.join_idx(a[0], l.meet_idx(a[1], a[2])),
                l.meet_idx(l.join_idx(a[0], a[1]), l.join_idx(a[1], a[2])),
            )
        },
    },
    Equation {
        text: "x∧(y∨z) = (x∧y)∨(y∧z)",
        eval: |l, a| {
            (
                l.meet_idx(a[0], l.join_idx(a[1], a[2])),
                l.join_idx(l.meet_idx(a[0], a[1]), l.meet_idx(a[1], a[2])),
            )
        },
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCertificate {
    pub is_lattice: bool,
    pub commutative: Verdict<LatticeWitness>,
    pub associative: Verdict<LatticeWitness>,
    pub absorption: Verdict<LatticeWitness>,
    pub idempotent: Verdict<LatticeWitness>,
    pub distributive: Verdict<LatticeWitness>,
    pub boolean_complemented: Verdict<ComplementWitness>,
    pub cha: Verdict<LatticeFrameWitness>,
    /// Only populated when requested through [`CertifyOptions`].
    pub literal_distributive: Option<Verdict<LatticeWitness>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    pub literal_distributive: bool,
    /// Subset size cap for the frame law; `None` means `min(|L|, 5)`.
    pub cha_cap: Option<usize>,
}

pub fn default_cha_cap(l: &FiniteLattice) -> usize {
    l.len().min(5)
}

pub fn check_lattice_laws(l: &FiniteLattice) -> LatticeCertificate {
    check_lattice_laws_with(l, CertifyOptions::default())
}

pub fn check_lattice_laws_with(l: &FiniteLattice, opts: CertifyOptions) -> LatticeCertificate {
    let distributive = l.first_violation(3, &DISTRIBUTIVE);
    let boolean_complemented = match check_boolean(l) {
        Ok(v) => v,
        Err(_) => Verdict::NotApplicable("lattice is not distributive".into()),
    };
    let cap = opts.cha_cap.unwrap_or_else(|| default_cha_cap(l));
    LatticeCertificate {
        is_lattice: true,
        commutative: l.first_violation(2, &COMMUTATIVE),
        associative: l.first_violation(3, &ASSOCIATIVE),
        absorption: l.first_violation(2, &ABSORPTION),
        idempotent: l.first_violation(1, &IDEMPOTENT),
        distributive,
        boolean_complemented,
        cha: check_cha(l, cap).frame_law,
        literal_distributive: opts
            .literal_distributive
            .then(|| l.first_violation(3, &DISTRIBUTIVE_LITERAL)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChaReport {
    pub subset_cap: usize,
    /// Explicit enumeration of families of size `1..=subset_cap`.
    pub frame_law: Verdict<LatticeFrameWitness>,
    /// Binary distributivity, equivalent to the frame law on finite lattices.
    pub binary_distributive: Verdict<LatticeWitness>,
}

impl ChaReport {
    pub fn holds(&self) -> bool {
        self.frame_law.holds()
    }

    /// Whether the two routes reached the same conclusion.
    pub fn routes_agree(&self) -> bool {
        self.frame_law.holds() == self.binary_distributive.holds()
    }
}

/// Checks `∨(x_i ∧ y) = (∨x_i) ∧ y` for every family of at most `subset_cap`
/// distinct elements and every `y`.
pub fn check_cha(l: &FiniteLattice, subset_cap: usize) -> ChaReport {
    let k = l.len();
    let mut frame_law = Verdict::Holds;
    'search: for size in 1..=subset_cap.min(k) {
        for family in (0..k).combinations(size) {
            let joined = family[1..]
                .iter()
                .fold(family[0], |acc, &x| l.join_idx(acc, x));
            for y in 0..k {
                let lhs = family[1..]
                    .iter()
                    .fold(l.meet_idx(family[0], y), |acc, &x| {
                        l.join_idx(acc, l.meet_idx(x, y))
                    });
                let rhs = l.meet_idx(joined, y);
                if lhs != rhs {
                    frame_law = Verdict::Fails(LatticeFrameWitness {
                        family: family.iter().map(|&i| l.token(i).to_string()).collect(),
                        y: l.token(y).to_string(),
                        lhs: l.token(lhs).to_string(),
                        rhs: l.token(rhs).to_string(),
                    });
                    break 'search;
                }
            }
        }
    }
    ChaReport {
        subset_cap,
        frame_law,
        binary_distributive: l.check_distributive(),
    }
}

/// A distributive lattice is Boolean when every element has exactly one
/// complement. Non-distributive input is a precondition error.
pub fn check_boolean(l: &FiniteLattice) -> Result<Verdict<ComplementWitness>> {
    if let Verdict::Fails(w) = l.check_distributive() {
        return Err(Error::Precondition(format!(
            "Boolean check requires a distributive lattice ({w})"
        )));
    }
    for x in 0..l.len() {
        let cs = l.complements_idx(x);
        if cs.len() != 1 {
            return Ok(Verdict::Fails(ComplementWitness {
                element: l.token(x).to_string(),
                complements: cs.iter().map(|&c| l.token(c).to_string()).collect(),
            }));
        }
    }
    Ok(Verdict::Holds)
}

pub fn powerset_lattice(n: usize) -> Result<FiniteLattice> {
    FiniteLattice::powerset(n)
}
