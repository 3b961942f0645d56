//! Named algebras, lattices, families and sets, plus the built-in instances.

use std::collections::BTreeMap;
use std::sync::Arc;

use modset::instances::{
    chain, chain_tokens, classical, fuzzy_unit, lattice_algebra, matrix_algebra, powerset_algebra,
};
use modset::{
    Algebra, AlgebraFamily, AlgebraKind, Element, FiniteLattice, Matrix, ModernSet, Rational,
    Scalar, Universe,
};

use crate::error::CliError;
use crate::expr::SetExpr;

/// Algebra names that resolve without a definition file. `chain<k>`,
/// `pow<n>` and `mat<n>` also work for other sizes.
pub const BUILTIN_ALGEBRAS: [&str; 10] = [
    "classical2",
    "fuzzy",
    "chain3",
    "chain5",
    "pow2",
    "pow3",
    "mat2",
    "mat3",
    "m3",
    "n5",
];

/// One definition, in the order it was loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Algebra(String),
    Lattice(String),
    Family(String),
    Set(String),
}

#[derive(Debug, Clone)]
pub struct NamedSet {
    pub family: String,
    pub set: ModernSet,
}

#[derive(Debug, Clone, Default)]
pub struct Workspace {
    algebras: BTreeMap<String, Arc<Algebra>>,
    lattices: BTreeMap<String, FiniteLattice>,
    families: BTreeMap<String, Arc<AlgebraFamily>>,
    sets: BTreeMap<String, NamedSet>,
    order: Vec<Item>,
}

fn sized(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

fn builtin_lattice(name: &str) -> Option<modset::Result<FiniteLattice>> {
    match name {
        "m3" => Some(Ok(FiniteLattice::m3())),
        "n5" => Some(Ok(FiniteLattice::n5())),
        _ => {
            if let Some(n) = sized(name, "pow") {
                Some(FiniteLattice::powerset(n))
            } else {
                sized(name, "chain").map(|k| FiniteLattice::chain(&chain_tokens(k)))
            }
        }
    }
}

fn builtin_algebra(name: &str) -> Option<modset::Result<Algebra>> {
    match name {
        "classical" | "classical2" => Some(Ok(classical())),
        "fuzzy" => Some(Ok(fuzzy_unit())),
        "m3" | "n5" => builtin_lattice(name).map(|l| lattice_algebra(name, l?)),
        _ => {
            if let Some(k) = sized(name, "chain") {
                Some(chain(k))
            } else if let Some(n) = sized(name, "pow") {
                Some(powerset_algebra(n))
            } else {
                sized(name, "mat").map(matrix_algebra)
            }
        }
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn items(&self) -> &[Item] {
        &self.order
    }

    pub fn add_algebra(&mut self, alg: Algebra) -> Result<(), CliError> {
        let name = alg.name().to_string();
        if self.algebras.contains_key(&name) {
            return Err(CliError::Eval(format!("algebra `{name}` is defined twice")));
        }
        self.algebras.insert(name.clone(), Arc::new(alg));
        self.order.push(Item::Algebra(name));
        Ok(())
    }

    pub fn add_lattice(&mut self, name: &str, lattice: FiniteLattice) -> Result<(), CliError> {
        if self.lattices.contains_key(name) {
            return Err(CliError::Eval(format!("lattice `{name}` is defined twice")));
        }
        self.lattices.insert(name.to_string(), lattice);
        self.order.push(Item::Lattice(name.to_string()));
        Ok(())
    }

    pub fn add_family(&mut self, name: &str, family: AlgebraFamily) -> Result<(), CliError> {
        if self.families.contains_key(name) {
            return Err(CliError::Eval(format!("family `{name}` is defined twice")));
        }
        self.families.insert(name.to_string(), Arc::new(family));
        self.order.push(Item::Family(name.to_string()));
        Ok(())
    }

    pub fn add_set(&mut self, name: &str, family: &str, set: ModernSet) -> Result<(), CliError> {
        if self.sets.contains_key(name) {
            return Err(CliError::Eval(format!("set `{name}` is defined twice")));
        }
        let entry = NamedSet {
            family: family.to_string(),
            set,
        };
        self.sets.insert(name.to_string(), entry);
        self.order.push(Item::Set(name.to_string()));
        Ok(())
    }

    pub fn defined_lattice(&self, name: &str) -> Option<&FiniteLattice> {
        self.lattices.get(name)
    }

    pub fn defined_algebra(&self, name: &str) -> Option<&Arc<Algebra>> {
        self.algebras.get(name)
    }

    pub fn defined_family(&self, name: &str) -> Option<&Arc<AlgebraFamily>> {
        self.families.get(name)
    }

    pub fn set(&self, name: &str) -> Option<&NamedSet> {
        self.sets.get(name)
    }

    /// Looks up defined algebras, then defined lattices (read as algebras),
    /// then the built-ins.
    pub fn algebra(&self, name: &str) -> Result<Arc<Algebra>, CliError> {
        if let Some(a) = self.algebras.get(name) {
            return Ok(a.clone());
        }
        if let Some(l) = self.lattices.get(name) {
            return Ok(Arc::new(lattice_algebra(name, l.clone())?));
        }
        match builtin_algebra(name) {
            Some(a) => Ok(Arc::new(a?)),
            None => Err(CliError::Unknown {
                kind: "algebra",
                name: name.to_string(),
            }),
        }
    }

    pub fn lattice(&self, name: &str) -> Result<FiniteLattice, CliError> {
        if let Some(l) = self.lattices.get(name) {
            return Ok(l.clone());
        }
        match builtin_lattice(name) {
            Some(l) => Ok(l?),
            None => Err(CliError::Unknown {
                kind: "lattice",
                name: name.to_string(),
            }),
        }
    }

    /// A defined family, `alg^n` (n copies of `alg` on `x1..xn`), or a
    /// comma-separated list of algebra names (one per point, `x1, x2, …`).
    pub fn family(&self, spec: &str) -> Result<Arc<AlgebraFamily>, CliError> {
        if let Some(f) = self.families.get(spec) {
            return Ok(f.clone());
        }
        if let Some((alg, n)) = spec.split_once('^') {
            let n: usize = n.parse().map_err(|_| CliError::Unknown {
                kind: "family",
                name: spec.to_string(),
            })?;
            let universe = Universe::numbered(n)?;
            return Ok(Arc::new(AlgebraFamily::uniform(
                universe,
                self.algebra(alg)?,
            )));
        }
        if spec.contains(',') {
            let algebras = spec
                .split(',')
                .map(|a| self.algebra(a.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let universe = Universe::numbered(algebras.len())?;
            return Ok(Arc::new(AlgebraFamily::new(universe, algebras)?));
        }
        Err(CliError::Unknown {
            kind: "family",
            name: spec.to_string(),
        })
    }

    /// Evaluates `e` with every identifier bound to a set over `family`.
    pub fn eval(&self, family: &Arc<AlgebraFamily>, e: &SetExpr) -> Result<ModernSet, CliError> {
        match e {
            SetExpr::Ident(name) => {
                let entry = self
                    .sets
                    .get(name)
                    .ok_or_else(|| CliError::Eval(format!("unbound identifier `{name}`")))?;
                if entry.set.family() != family {
                    return Err(CliError::Eval(format!(
                        "set `{name}` is over family `{}`, which differs from the requested family",
                        entry.family
                    )));
                }
                Ok(entry.set.clone())
            }
            SetExpr::Complement(inner) => Ok(self.eval(family, inner)?.complement()?),
            SetExpr::Intersection(l, r) => {
                Ok(self.eval(family, l)?.intersection(&self.eval(family, r)?)?)
            }
            SetExpr::Union(l, r) => Ok(self.eval(family, l)?.union(&self.eval(family, r)?)?),
        }
    }
}

/// Reads a token, `p/q` or `[[a,b],[c,d]]` according to the algebra's carrier.
/// Matrix carriers also accept `O` and `I`.
pub fn parse_element(alg: &Algebra, literal: &str) -> Result<Element, String> {
    let value = match alg.kind() {
        AlgebraKind::Table(_) | AlgebraKind::Lattice(_) => Element::token(literal),
        AlgebraKind::FuzzyUnit => Element::Scalar(
            Rational::parse_literal(literal)
                .ok_or_else(|| format!("`{literal}` is not a rational literal"))?,
        ),
        AlgebraKind::Matrix { .. } if literal == "O" => alg.zero(),
        AlgebraKind::Matrix { .. } if literal == "I" => alg.one(),
        AlgebraKind::Matrix { dim } => {
            let m: Matrix<Rational> = Matrix::parse(literal).map_err(|e| e.to_string())?;
            if m.dim() != *dim {
                return Err(format!(
                    "`{literal}` is {0}×{0} but `{1}` holds {2}×{2} matrices",
                    m.dim(),
                    alg.name(),
                    dim
                ));
            }
            if !m.is_normalized() {
                return Err(format!(
                    "`{literal}` is not normalized: integer multiples of I are written as I"
                ));
            }
            Element::Matrix(m)
        }
    };
    alg.check_member(&value).map_err(|e| e.to_string())?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        let w = Workspace::new();
        for name in BUILTIN_ALGEBRAS {
            assert!(w.algebra(name).is_ok(), "{name}");
        }
        assert_eq!(w.algebra("classical").unwrap().name(), "classical2");
        assert!(w.algebra("mat0").is_err());
        assert!(matches!(w.algebra("nope"), Err(CliError::Unknown { .. })));
    }

    #[test]
    fn family_specs() {
        let w = Workspace::new();
        assert_eq!(w.family("fuzzy^3").unwrap().len(), 3);
        let f = w.family("classical2, mat2").unwrap();
        assert_eq!(f.algebra_at("x2").unwrap().name(), "mat2");
        assert!(w.family("fuzzy^x").is_err());
        assert!(w.family("fuzzy").is_err());
    }

    #[test]
    fn element_literals() {
        let w = Workspace::new();
        let fuzzy = w.algebra("fuzzy").unwrap();
        assert!(parse_element(&fuzzy, "1/2").is_ok());
        assert!(parse_element(&fuzzy, "3/2").is_err());
        let mat = w.algebra("mat2").unwrap();
        assert!(parse_element(&mat, "[[1,2],[3,4]]").is_ok());
        assert!(parse_element(&mat, "[[2,0],[0,2]]").is_err());
        assert!(parse_element(&mat, "[[1]]").is_err());
        assert_eq!(parse_element(&mat, "I").unwrap(), mat.one());
        let c = w.algebra("classical2").unwrap();
        assert!(parse_element(&c, "I").is_ok());
        assert!(parse_element(&c, "x").is_err());
    }
}
