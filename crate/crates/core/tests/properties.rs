//! Randomized invariants across the exact kernels: linear-algebra laws,
//! q-series algebra, Schur specializations, and character normalizations.

use proptest::prelude::*;
use walg_core::characters::{char_t, char_t_resolution, duality_check};
use walg_core::field::{Field, Rational};
use walg_core::linalg::SparseMatrix;
use walg_core::qseries::QSeries;
use walg_core::rootsys::RootSystem;
use walg_core::screening::schur_polynomials;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = SparseMatrix<Rational>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            proptest::collection::vec((-4i64..=4).prop_map(Rational::from_int), c),
            r,
        )
        .prop_map(SparseMatrix::from_dense)
    })
}

fn square_matrix(max_n: usize) -> impl Strategy<Value = SparseMatrix<Rational>> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(rational(), n), n)
            .prop_map(SparseMatrix::from_dense)
    })
}

fn algebra_and_weights() -> impl Strategy<Value = (String, Vec<i64>, Vec<i64>)> {
    prop_oneof![Just("A1"), Just("A2"), Just("B2")].prop_flat_map(|label| {
        let rank = if label == "A1" { 1 } else { 2 };
        (
            proptest::collection::vec(0i64..=2, rank),
            proptest::collection::vec(0i64..=2, rank),
        )
            .prop_map(move |(lam, mu)| (label.to_string(), lam, mu))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in matrix(6, 6)) {
        let kernel = m.nullspace();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            let image = m.apply(v).unwrap();
            prop_assert!(image.iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn rref_is_a_projection(m in matrix(5, 7)) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn determinant_zero_test_agrees_with_determinant(m in square_matrix(5)) {
        let plain = m.determinant().unwrap();
        prop_assert_eq!(m.determinant_is_zero().unwrap(), plain.is_zero());
        // Duplicating a row forces both paths to report singularity.
        if m.rows() >= 2 {
            let mut rows = m.to_dense();
            rows[0] = rows[m.rows() - 1].clone();
            let singular = SparseMatrix::from_dense(rows);
            prop_assert!(singular.determinant_is_zero().unwrap());
            prop_assert!(singular.determinant().unwrap().is_zero());
        }
    }

    #[test]
    fn euler_products_multiply(r1 in 0usize..=3, r2 in 0usize..=3, order in 0usize..=10) {
        let lhs: QSeries<Rational> = QSeries::euler_product(r1 + r2, order);
        let rhs = QSeries::euler_product(r1, order).mul(&QSeries::euler_product(r2, order));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_series_invert(tail in proptest::collection::vec(rational(), 0..7), lead in 1i64..5) {
        let mut coeffs = vec![Rational::from_int(lead)];
        coeffs.extend(tail);
        let s = QSeries::from_coeffs(coeffs);
        let inv = s.inv().unwrap();
        prop_assert_eq!(s.mul(&inv), QSeries::one(s.order()));
    }

    /// Setting every x_{-j} := c turns the Schur generating function into
    /// exp(-c*log(1-z)) = (1-z)^(-c), so the degree-n value must be the
    /// rising factorial c(c+1)...(c+n-1)/n!.
    #[test]
    fn schur_specialization_is_a_rising_factorial(c in rational(), n in 0usize..=8) {
        let schurs = schur_polynomials(0, n);
        let mut value = Rational::from_int(0);
        for (mono, coef) in schurs[n].terms() {
            let total: u32 = mono.factors().map(|(_, _, e)| e).sum();
            let mut term = coef.clone();
            for _ in 0..total {
                term = &term * &c;
            }
            value = &value + &term;
        }
        let mut expect = Rational::from_int(1);
        for i in 0..n {
            expect = &expect * &(&c + &Rational::from_int(i as i64));
        }
        for i in 1..=n {
            expect = expect
                .div(&Rational::from_int(i as i64))
                .expect("nonzero factorial");
        }
        prop_assert_eq!(value, expect);
    }

    #[test]
    fn characters_are_normalized_state_counts(
        (label, lam, mu) in algebra_and_weights(),
        order in 1usize..=8,
    ) {
        let rs = RootSystem::new(&label).unwrap();
        let table = char_t(&rs, &lam, &mu, order).unwrap();
        let coeffs = table.series.coeffs();
        prop_assert_eq!(coeffs[0].clone(), Rational::from_int(1));
        let zero = Rational::from_int(0);
        prop_assert!(coeffs.iter().all(|c| *c >= zero));
        prop_assert!(duality_check(&rs, &lam, &mu, order).unwrap());
    }

    #[test]
    fn resolution_path_matches_direct_path((label, lam, mu) in algebra_and_weights()) {
        let rs = RootSystem::new(&label).unwrap();
        let direct = char_t(&rs, &lam, &mu, 6).unwrap();
        let resolved = char_t_resolution(&rs, &lam, &mu, 6).unwrap();
        prop_assert_eq!(direct.series, resolved.series);
    }
}
