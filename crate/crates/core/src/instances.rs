//! The shipped algebras: classical two-valued, rational fuzzy, finite chains,
//! lattice-backed algebras, and normalized matrix algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraKind, BinaryOp, Element, FiniteAlgebraTable, LatticeAlgebra};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

pub use crate::matrix::normalize_matrix;

/// `{O, I}` with the Boolean tables, complement `O ↔ I` and `O ≤ I`.
pub fn classical<S: Scalar>() -> Algebra<S> {
    chain_named("classical2", &["O", "I"]).expect("classical algebra is well formed")
}

/// Rationals in `[0,1]` with `∗∧ = min`, `∗∨ = max`, `q^C = 1 − q`.
pub fn fuzzy_unit<S: Scalar>() -> Algebra<S> {
    Algebra::new("fuzzy", AlgebraKind::FuzzyUnit).expect("fuzzy algebra is well formed")
}

/// Tokens of the `k`-chain: `O, I` for `k = 2`, `O, m, I` for `k = 3`,
/// `O, m1, …, m{k-2}, I` beyond.
pub fn chain_tokens(k: usize) -> Vec<String> {
    let mut tokens = vec!["O".to_string()];
    match k {
        0..=2 => {}
        3 => tokens.push("m".into()),
        _ => tokens.extend((1..=k - 2).map(|i| format!("m{i}"))),
    }
    tokens.push("I".into());
    tokens
}

/// The `k`-element chain with min/max tables and order-reversing complement.
pub fn chain<S: Scalar>(k: usize) -> Result<Algebra<S>> {
    if k < 2 {
        return Err(Error::Bounds {
            what: "chain length",
            value: k,
            range: "2..".into(),
        });
    }
    chain_named(&format!("chain{k}"), &chain_tokens(k))
}

fn chain_named<S: Scalar, T: AsRef<str>>(name: &str, tokens: &[T]) -> Result<Algebra<S>> {
    let k = tokens.len();
    let reverse = move |i: usize| k - 1 - i;
    let table =
        FiniteAlgebraTable::from_fns(tokens, 0, k - 1, usize::min, usize::max, Some(&reverse))?;
    let order: Vec<(&str, &str)> = tokens
        .windows(2)
        .map(|w| (w[0].as_ref(), w[1].as_ref()))
        .collect();
    Algebra::new(name, AlgebraKind::Table(table.with_order(&order)?))
}

/// A lattice read as a weak Boolean algebra (meet, join, bottom, top).
pub fn lattice_algebra<S: Scalar>(name: &str, lattice: FiniteLattice) -> Result<Algebra<S>> {
    Algebra::new(name, AlgebraKind::Lattice(LatticeAlgebra::new(lattice)?))
}

/// The powerset of an `n`-element set, `1 ≤ n ≤ 6`, named `pow{n}`.
pub fn powerset_algebra<S: Scalar>(n: usize) -> Result<Algebra<S>> {
    lattice_algebra(&format!("pow{n}"), FiniteLattice::powerset(n)?)
}

/// Normalized `n×n` matrices, named `mat{n}`.
pub fn matrix_algebra<S: Scalar>(n: usize) -> Result<Algebra<S>> {
    Algebra::new(format!("mat{n}"), AlgebraKind::Matrix { dim: n })
}

fn require_normalized<S: Scalar>(m: &Matrix<S>) -> Result<()> {
    if m.is_normalized() {
        Ok(())
    } else {
        Err(Error::NotInCarrier {
            algebra: format!("mat{}", m.dim()),
            element: m.to_string(),
        })
    }
}

/// `normalize(x·y)` for normalized inputs; factor order is kept.
pub fn matrix_wedge<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Result<Matrix<S>> {
    require_normalized(x)?;
    require_normalized(y)?;
    Ok(x.mul(y)?.normalize())
}

/// `normalize(x + y)` for normalized inputs.
pub fn matrix_vee<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Result<Matrix<S>> {
    require_normalized(x)?;
    require_normalized(y)?;
    Ok(x.add(y)?.normalize())
}

/// A matrix that is not necessarily normalized. Roughly one draw in four is a
/// scalar multiple of the identity so normalization has work to do.
pub fn random_raw_matrix<S: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Matrix<S> {
    if rng.gen_bool(0.25) {
        let c = if rng.gen_bool(0.5) {
            S::from_ratio(rng.gen_range(-3..=6), 1)
        } else {
            S::from_ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))
        };
        return Matrix::scalar(dim, c);
    }
    let rows = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| crate::algebra::sample_entry(rng))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("square by construction")
}

/// Finds `(x, y)` with `op(x, y) ≠ op(y, x)`.
///
/// Finite carriers are scanned exhaustively in lexicographic order. Infinite
/// carriers first scan all pairs of [`Algebra::forced_elements`], then try up
/// to `budget` random pairs drawn from a ChaCha8 stream seeded with `seed`.
pub fn find_noncommuting_witness<S: Scalar>(
    a: &Algebra<S>,
    op: BinaryOp,
    budget: usize,
    seed: u64,
) -> Result<Option<(Element<S>, Element<S>)>> {
    let differs = |x: &Element<S>, y: &Element<S>| -> Result<bool> {
        Ok(op.apply(a, x, y)? != op.apply(a, y, x)?)
    };
    let pool = a.forced_elements();
    for x in &pool {
        for y in &pool {
            if differs(x, y)? {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    if a.is_finite() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let (x, y) = (a.sample(&mut rng), a.sample(&mut rng));
        if differs(&x, &y)? {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_wba_axioms;
    use crate::{Rational, Rational64};

    type M = Matrix<Rational64>;

    fn q(n: i64, d: i64) -> Element<Rational64> {
        Element::Scalar(Rational64::new(n, d))
    }

    fn m(rows: [[i64; 2]; 2]) -> M {
        M::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&e| e.into()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn classical_tables() {
        let a = classical::<Rational>();
        let (o, i) = (a.zero(), a.one());
        assert_eq!(a.wedge(&i, &o).unwrap(), o);
        assert_eq!(a.vee(&o, &i).unwrap(), i);
        assert_eq!(a.complement(&o).unwrap(), i);
        assert_eq!(a.elements().unwrap(), vec![o.clone(), i.clone()]);
        assert!(a.leq(&o, &i).unwrap());
        assert!(!a.leq(&i, &o).unwrap());
        assert!(check_wba_axioms(&a).unwrap().passed);
    }

    #[test]
    fn fuzzy_operations() {
        let a = fuzzy_unit::<Rational64>();
        assert_eq!(a.wedge(&q(3, 10), &q(7, 10)).unwrap(), q(3, 10));
        assert_eq!(a.vee(&q(3, 10), &q(7, 10)).unwrap(), q(7, 10));
        assert_eq!(a.complement(&q(3, 10)).unwrap(), q(7, 10));
        assert!(matches!(a.elements(), Err(Error::Unsupported { .. })));
        assert!(matches!(
            a.wedge(&q(3, 2), &q(1, 2)),
            Err(Error::NotInCarrier { .. })
        ));
        assert!(!a.contains(&Element::token("O")));
    }

    #[test]
    fn chain_declaration_order() {
        let a = chain::<Rational>(3).unwrap();
        let tokens: Vec<String> = a
            .elements()
            .unwrap()
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(tokens, ["O", "m", "I"]);
        assert_eq!(chain_tokens(5), ["O", "m1", "m2", "m3", "I"]);
        let mid = Element::token("m");
        assert_eq!(a.complement(&mid).unwrap(), mid);
        assert!(chain::<Rational>(1).is_err());
    }

    #[test]
    fn matrix_examples() {
        let (x, y) = (m([[0, 1], [0, 0]]), m([[0, 0], [1, 0]]));
        assert_eq!(matrix_wedge(&x, &y).unwrap(), m([[1, 0], [0, 0]]));
        assert_eq!(matrix_wedge(&y, &x).unwrap(), m([[0, 0], [0, 1]]));
        let (o, i) = (M::zero(2), M::identity(2));
        assert_eq!(matrix_wedge(&i, &o).unwrap(), o);
        assert_eq!(matrix_wedge(&i, &i).unwrap(), i);
        assert_eq!(matrix_vee(&o, &i).unwrap(), i);
        assert_eq!(matrix_vee(&i, &i).unwrap(), i);
        let two_i = M::scalar(2, 2.into());
        assert!(matches!(
            matrix_vee(&i, &two_i),
            Err(Error::NotInCarrier { .. })
        ));
        assert!(matches!(
            matrix_wedge(&i, &M::identity(3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn matrix_algebra_rejects_unnormalized_elements() {
        let a = matrix_algebra::<Rational64>(2).unwrap();
        let two_i = Element::Matrix(M::scalar(2, 2.into()));
        assert!(!a.contains(&two_i));
        assert!(a.contains(&Element::Matrix(M::scalar(2, Rational64::new(1, 2)))));
        assert!(matrix_algebra::<Rational64>(0).is_err());
    }

    #[test]
    fn noncommuting_witnesses() {
        let c = classical::<Rational>();
        assert_eq!(
            find_noncommuting_witness(&c, BinaryOp::Wedge, 100, 0).unwrap(),
            None
        );
        let f = fuzzy_unit::<Rational>();
        assert_eq!(
            find_noncommuting_witness(&f, BinaryOp::Vee, 500, 3).unwrap(),
            None
        );
        for n in [2, 3] {
            let a = matrix_algebra::<Rational>(n).unwrap();
            let (x, y) = find_noncommuting_witness(&a, BinaryOp::Wedge, 100, 0)
                .unwrap()
                .expect("matrix multiplication does not commute");
            assert_ne!(a.wedge(&x, &y).unwrap(), a.wedge(&y, &x).unwrap());
            assert_eq!(
                find_noncommuting_witness(&a, BinaryOp::Vee, 200, 1).unwrap(),
                None
            );
        }
    }

    #[test]
    fn raw_matrices_normalize_idempotently() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let raw: Matrix<Rational64> = random_raw_matrix(&mut rng, 2);
            let once = raw.normalize();
            assert_eq!(once.normalize(), once);
            assert!(once.is_normalized());
        }
    }
}
