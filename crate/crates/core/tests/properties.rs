use std::sync::Arc;

use modset::instances::{
    chain, classical, fuzzy_unit, lattice_algebra, matrix_algebra, powerset_algebra,
};
use modset::modern_set::sample_set;
use modset::{
    check_law, classify_family, embed_crisp, AlgebraFamily, CrispSet, Law, LawStructure, Matrix,
    ModernSet, Rational64, SampleConfig, Universe,
};
use modset::{Algebra, FiniteLattice};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Rational64;

fn algebra(kind: u8) -> Algebra<Q> {
    match kind % 7 {
        0 => classical(),
        1 => fuzzy_unit(),
        2 => chain(3).unwrap(),
        3 => powerset_algebra(2).unwrap(),
        4 => lattice_algebra("m3", FiniteLattice::m3()).unwrap(),
        5 => chain(5).unwrap(),
        _ => matrix_algebra(2).unwrap(),
    }
}

fn family(kinds: &[u8]) -> Arc<AlgebraFamily<Q>> {
    let u = Universe::numbered(kinds.len()).unwrap();
    let algs = kinds.iter().map(|&k| Arc::new(algebra(k))).collect();
    Arc::new(AlgebraFamily::new(u, algs).unwrap())
}

fn entry() -> impl Strategy<Value = Q> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Q::new(n, d))
}

fn square(dim: usize) -> impl Strategy<Value = Matrix<Q>> {
    prop::collection::vec(entry(), dim * dim)
        .prop_map(move |e| Matrix::from_rows(e.chunks(dim).map(<[Q]>::to_vec).collect()).unwrap())
}

fn any_matrix() -> impl Strategy<Value = Matrix<Q>> {
    prop_oneof![
        (1usize..=3).prop_flat_map(square),
        // Scalar multiples of I are the interesting case for normalization.
        (1usize..=3, entry()).prop_map(|(d, c)| Matrix::scalar(d, c)),
    ]
}

proptest! {
    #[test]
    fn normalize_is_idempotent(m in any_matrix()) {
        let once = m.normalize();
        prop_assert_eq!(once.normalize(), once.clone());
        prop_assert!(once.is_normalized());
    }

    #[test]
    fn normalize_only_touches_positive_integer_multiples_of_identity(m in any_matrix()) {
        let c = m.as_scalar_multiple();
        let collapses = c.is_some_and(|c| c.is_integer() && c >= Q::from_integer(1));
        if collapses {
            prop_assert_eq!(m.normalize(), Matrix::identity(m.dim()));
        } else {
            prop_assert_eq!(m.normalize(), m);
        }
    }

    #[test]
    fn equals_is_an_equivalence(kinds in prop::collection::vec(0u8..7, 1..4), seed in any::<u64>()) {
        let f = family(&kinds);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sets: Vec<ModernSet<Q>> = (0..6).map(|_| sample_set(&f, &mut rng)).collect();
        for a in &sets {
            prop_assert!(a.equals(a).unwrap());
            for b in &sets {
                prop_assert_eq!(a.equals(b).unwrap(), b.equals(a).unwrap());
                for c in &sets {
                    if a.equals(b).unwrap() && b.equals(c).unwrap() {
                        prop_assert!(a.equals(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn crisp_embedding_is_a_homomorphism(
        kinds in prop::collection::vec(0u8..7, 1..5),
        a in any::<u64>(),
        b in any::<u64>(),
    ) {
        let f = family(&kinds);
        let n = kinds.len();
        let mask = (1u64 << n) - 1;
        let (a, b) = (a & mask, b & mask);
        let embed = |m: u64| embed_crisp(&CrispSet::from_mask(f.clone(), m));
        prop_assert_eq!(embed(a | b), embed(a).union(&embed(b)).unwrap());
        prop_assert_eq!(embed(a & b), embed(a).intersection(&embed(b)).unwrap());
        if f.has_complement() {
            prop_assert_eq!(embed(!a & mask), embed(a).complement().unwrap());
        }
    }

    #[test]
    fn weakening_a_point_never_raises_the_level(
        kinds in prop::collection::vec(0u8..6, 1..4),
        at in any::<prop::sample::Index>(),
    ) {
        let cfg = SampleConfig::new(60, 0);
        let before = classify_family(&family(&kinds), &cfg).unwrap().level;
        let mut weaker = kinds.clone();
        weaker[at.index(kinds.len())] = 6;
        let after = classify_family(&family(&weaker), &cfg).unwrap().level;
        prop_assert!(after <= before);
    }

    #[test]
    fn sampled_verdicts_are_deterministic(seed in any::<u64>(), law in 0usize..11) {
        let law = Law::ALL[law];
        let cfg = SampleConfig::new(50, seed);
        for alg in [fuzzy_unit::<Q>(), matrix_algebra(2).unwrap()] {
            prop_assert_eq!(check_law(&alg, law, &cfg).unwrap(), check_law(&alg, law, &cfg).unwrap());
        }
    }
}
