use arthom::exactlin::{FieldSpec, Mat};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(7)), Just(FieldSpec::Prime(2147483647))]
}

/// Matrices with small integer entries, biased towards rank deficiency.
fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..=4], cols), rows)
}

fn sized() -> impl Strategy<Value = (FieldSpec, Vec<Vec<i64>>, usize)> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| (Just(f), matrix(r, c), Just(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_plus_nullity((f, rows, cols) in sized()) {
        let m = Mat::from_i64_rows(f, &rows);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_is_exact_or_certified_inconsistent((f, rows, _) in sized(), b in prop::collection::vec(-3i64..=3, 6)) {
        let m = Mat::from_i64_rows(f, &rows);
        let rhs: Vec<Vec<i64>> = (0..m.rows()).map(|i| vec![b[i]]).collect();
        let rhs = Mat::from_i64_rows(f, &rhs);
        match m.solve(&rhs).unwrap() {
            Some(x) => prop_assert_eq!(m.mul(&x), rhs),
            None => {
                let aug = Mat::hstack(&[&m, &rhs], f, m.rows());
                prop_assert!(aug.rank() > m.rank());
            }
        }
    }

    #[test]
    fn image_vectors_are_always_solvable((f, rows, cols) in sized(), x in prop::collection::vec(-3i64..=3, 6)) {
        let m = Mat::from_i64_rows(f, &rows);
        let x: Vec<Vec<i64>> = (0..cols).map(|j| vec![x[j]]).collect();
        let b = m.mul(&Mat::from_i64_rows(f, &x));
        let sol = m.solve(&b).unwrap();
        prop_assert!(sol.is_some());
        prop_assert_eq!(m.mul(&sol.unwrap()), b);
    }

    #[test]
    fn rank_is_transpose_invariant((f, rows, _) in sized()) {
        let m = Mat::from_i64_rows(f, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let lk = m.left_kernel_basis();
        prop_assert!(lk.mul(&m).is_zero());
        prop_assert_eq!(lk.rows() + m.rank(), m.rows());
    }

    #[test]
    fn inverse_is_two_sided(f in field(), rows in matrix(4, 4)) {
        let m = Mat::from_i64_rows(f, &rows);
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
                prop_assert_eq!(m.rank(), 4);
            }
            None => prop_assert!(m.rank() < 4),
        }
    }

    #[test]
    fn operations_are_deterministic((f, rows, _) in sized()) {
        let a = Mat::from_i64_rows(f, &rows);
        let b = Mat::from_i64_rows(f, &rows);
        prop_assert_eq!(a.kernel_basis(), b.kernel_basis());
        prop_assert_eq!(a.column_space(), b.column_space());
        prop_assert_eq!(a.echelon().pivots, b.echelon().pivots);
    }

    #[test]
    fn entries_are_canonical(f in field(), n in -50i64..50, d in (1i64..20).prop_filter("unit", |d| d % 7 != 0)) {
        let x = f.div(&f.from_i64(n), &f.from_i64(d));
        prop_assert!(f.owns(&x));
        let back = f.mul(&x, &f.from_i64(d));
        prop_assert_eq!(back, f.from_i64(n));
    }
}
