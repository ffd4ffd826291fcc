use std::sync::Arc;

use hochschild_core::linalg::{
    fraction_free_rank, image_basis, kernel_basis, rank, rank_naive, reduce_mod, SparseMatrix,
};
use hochschild_core::{
    corpus, emit_quiver, hh_dim_formula, parse_quiver, CochainComplex, Field, QuiverFile, StringAlgebra,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(5))]
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn random_algebra(seed: u64) -> Arc<StringAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = corpus::random_string_quiver(&mut rng, &corpus::CorpusConfig::default());
    Arc::new(StringAlgebra::new(q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(rows in matrix(), f in field()) {
        let m = SparseMatrix::from_dense(f, &rows);
        let r = rank(&m, f);
        prop_assert_eq!(r + kernel_basis(&m, f).dim(), m.cols());
        prop_assert_eq!(image_basis(&m).dim(), r);
        prop_assert_eq!(rank(&m.transpose(), f), r);
    }

    #[test]
    fn fraction_free_matches_rational_elimination(rows in matrix()) {
        let m = SparseMatrix::from_dense(Field::Rational, &rows);
        prop_assert_eq!(fraction_free_rank(&m), rank_naive(&m));
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in matrix(), f in field()) {
        let m = SparseMatrix::from_dense(f, &rows);
        for v in kernel_basis(&m, f).rows() {
            prop_assert!(m.apply(v).values().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn reduction_is_idempotent(rows in matrix(), f in field()) {
        let m = SparseMatrix::from_dense(f, &rows);
        let image = image_basis(&m);
        for v in m.transpose().row_vectors() {
            let once = reduce_mod(&image, &v);
            prop_assert_eq!(reduce_mod(&image, &once), once);
        }
        for v in m.column_vectors() {
            prop_assert!(image.contains(&v));
        }
    }

    #[test]
    fn normalization_is_idempotent(seed in any::<u64>()) {
        let alg = random_algebra(seed);
        let once = alg.quiver().normalized();
        prop_assert_eq!(once.normalized(), once);
    }

    #[test]
    fn file_format_round_trips(seed in any::<u64>(), f in field()) {
        let alg = random_algebra(seed);
        let file = QuiverFile { quiver: alg.quiver().clone(), characteristic: Some(f) };
        let back = parse_quiver(&emit_quiver(&file)).unwrap();
        prop_assert_eq!(back, file);
    }

    #[test]
    fn formula_matches_oracle(seed in any::<u64>(), f in field()) {
        let alg = random_algebra(seed);
        let cx = CochainComplex::new(alg.clone(), f);
        for n in 0..=4 {
            prop_assert_eq!(hh_dim_formula(&alg, n, f).dim, cx.hh_dim(n), "degree {}", n);
        }
    }

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>(), f in field()) {
        let alg = random_algebra(seed);
        let cx = CochainComplex::new(alg, f);
        for n in 1..=4 {
            prop_assert!(cx.differential_matrix(n + 1).mul(&cx.differential_matrix(n)).is_zero());
        }
    }
}
