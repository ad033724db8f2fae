use proptest::prelude::*;

use dialgebra::catalog::{instantiate, ClassId, ClassSpec};
use dialgebra::derivation::{derivation_space, derivation_system, is_derivation};
use dialgebra::linalg::{QMatrix, QVector};
use dialgebra::{is_morphism, Algebra, BasisChange, Rational, WeightTriple};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(Rational::zero()), 5 => rational()], r * c)
            .prop_map(move |e| QMatrix::from_row_major(r, c, e).unwrap())
    })
}

fn invertible(n: usize) -> impl Strategy<Value = BasisChange> {
    prop::collection::vec(-3i64..=3, n * n).prop_filter_map("singular", move |e| {
        let m = QMatrix::from_row_major(n, n, e.into_iter().map(Rational::from).collect()).unwrap();
        BasisChange::new(m).ok()
    })
}

fn catalog_algebra() -> impl Strategy<Value = Algebra> {
    (0usize..6, rational(), rational(), rational()).prop_filter_map("constraint", |(i, a, b, c)| {
        instantiate(&ClassSpec::with_params(ClassId::ALL[i], Some(a), Some(b), Some(c))).ok()
    })
}

fn triple() -> impl Strategy<Value = WeightTriple> {
    (rational(), rational(), rational()).prop_map(|(r, t, s)| WeightTriple::new(r, t, s))
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in matrix(5, 5)) {
        let once = m.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(twice.pivot_columns, once.pivot_columns);
    }

    #[test]
    fn nullspace_is_kernel_and_rank_nullity_holds(m in matrix(5, 6)) {
        let kernel = m.nullspace();
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        prop_assert_eq!(m.cols(), m.rank() + kernel.len());
    }

    #[test]
    fn invert_round_trip(p in invertible(3)) {
        prop_assert_eq!(p.matrix().matmul(p.inverse()).unwrap(), QMatrix::identity(3));
        prop_assert_eq!(p.inverse().matmul(p.matrix()).unwrap(), QMatrix::identity(3));
    }

    #[test]
    fn change_basis_round_trip(alg in catalog_algebra(), p in invertible(2)) {
        let moved = alg.change_basis(&p).unwrap();
        prop_assert_eq!(moved.change_basis(&p.inverted()).unwrap(), alg.clone());
        prop_assert_eq!(
            moved.check_left_symmetric().satisfied(),
            alg.check_left_symmetric().satisfied()
        );
        prop_assert!(is_morphism(&alg, &moved, p.inverse()).unwrap());
        prop_assert!(is_morphism(&moved, &alg, p.matrix()).unwrap());
    }

    #[test]
    fn axioms_are_basis_independent_for_arbitrary_algebras(
        left in prop::collection::vec(-1i64..=1, 8),
        right in prop::collection::vec(-1i64..=1, 8),
        p in invertible(2),
    ) {
        let to_q = |v: Vec<i64>| v.into_iter().map(Rational::from).collect();
        let alg = Algebra::from_tensors(2, to_q(left), to_q(right)).unwrap();
        let moved = alg.change_basis(&p).unwrap();
        prop_assert_eq!(moved.check_left_symmetric().satisfied(), alg.check_left_symmetric().satisfied());
        prop_assert_eq!(moved.check_diassociative().satisfied(), alg.check_diassociative().satisfied());
    }

    #[test]
    fn every_kernel_vector_is_a_derivation(alg in catalog_algebra(), t in triple()) {
        let space = derivation_space(&alg, &t);
        for d in &space.basis {
            prop_assert!(is_derivation(&alg, &t, d).unwrap());
        }
        prop_assert_eq!(space.dim(), 4 - derivation_system(&alg, &t).rank());
    }

    #[test]
    fn non_derivations_have_nonzero_image(alg in catalog_algebra(), t in triple(), m in prop::collection::vec(rational(), 4)) {
        let d = QMatrix::from_row_major(2, 2, m).unwrap();
        let image = derivation_system(&alg, &t).mul_vec(&d.vectorize()).unwrap();
        prop_assert_eq!(is_derivation(&alg, &t, &d).unwrap(), image.is_zero());
    }

    #[test]
    fn scaling_the_triple_keeps_the_space(alg in catalog_algebra(), t in triple(), c in rational()) {
        prop_assume!(!c.is_zero());
        let a = derivation_space(&alg, &t);
        let b = derivation_space(&alg, &t.scaled(&c));
        prop_assert!(a.same_subspace(&b));
    }

    #[test]
    fn conjugation_transports_derivations(alg in catalog_algebra(), t in triple(), p in invertible(2)) {
        let moved = alg.change_basis(&p).unwrap();
        let here = derivation_space(&alg, &t);
        let there = derivation_space(&moved, &t);
        prop_assert_eq!(here.dim(), there.dim());
        for d in &here.basis {
            let conj = p.inverse().matmul(d).unwrap().matmul(p.matrix()).unwrap();
            prop_assert!(is_derivation(&moved, &t, &conj).unwrap());
        }
    }

    #[test]
    fn vectorize_round_trip(m in matrix(4, 4)) {
        let v: QVector = m.vectorize();
        prop_assert_eq!(QMatrix::unvectorize(m.rows(), m.cols(), &v).unwrap(), m);
    }
}
