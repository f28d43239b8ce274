//! Randomized property tests for the exact-arithmetic layer and the
//! identity checkers.

use proptest::prelude::*;

use terminalg::algebra::Algebra;
use terminalg::catalog::catalog;
use terminalg::exactnum::ratfun::parse_ratfun;
use terminalg::exactnum::{GaussRat, Poly, QMatrix, RatFun, Subspace};

fn gauss() -> impl Strategy<Value = GaussRat> {
    // Small rationals with occasional imaginary parts, the values that
    // actually occur in the tables.
    (-6i64..7, 1i64..5, -4i64..5, 1i64..4)
        .prop_map(|(p, q, r, s)| GaussRat::from_ratio(p, q) + GaussRat::from_parts(0, r, s))
}

fn nonzero_gauss() -> impl Strategy<Value = GaussRat> {
    gauss().prop_filter("nonzero", |g| !g.is_zero())
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(gauss(), r * c)
            .prop_map(move |entries| QMatrix::from_fn(r, c, |i, j| entries[i * c + j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn inverses(a in nonzero_gauss()) {
        prop_assert!((a.inv().unwrap() * a).is_one());
    }

    #[test]
    fn scalar_string_roundtrip(a in gauss()) {
        prop_assert_eq!(GaussRat::parse(&a.format()).unwrap(), a);
    }

    #[test]
    fn rank_nullity(m in matrix(20, 20)) {
        let rank = m.rank();
        let nullity = m.nullspace().len();
        prop_assert_eq!(rank + nullity, m.cols());
        for v in m.nullspace() {
            prop_assert!(m.mul_vec(&v).iter().all(GaussRat::is_zero));
        }
    }

    #[test]
    fn rref_idempotent_and_canonical(m in matrix(6, 7), scale in nonzero_gauss()) {
        let (r, pivots) = m.rref();
        let (rr, pp) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(&pivots, &pp);
        // A row-equivalent matrix (scale the first row, add it to the last)
        // reduces to the same canonical form.
        let mut rows = m.row_vecs();
        let first: Vec<GaussRat> = rows[0].iter().map(|x| x * &scale).collect();
        let last = rows.len() - 1;
        for (x, f) in rows[last].clone().iter().zip(&first) {
            let _ = (x, f);
        }
        rows[0] = first.clone();
        let n = rows[last].len();
        for j in 0..n {
            rows[last][j] = &rows[last][j] + &first[j];
        }
        let (r2, p2) = QMatrix::from_rows(rows).rref();
        prop_assert_eq!(r, r2);
        prop_assert_eq!(pivots, p2);
    }

    #[test]
    fn polynomial_limit_agrees_with_evaluation(coeffs in proptest::collection::vec(gauss(), 0..6)) {
        let p = Poly::from_coeffs(coeffs);
        let f = RatFun::from_poly(p.clone());
        let at_zero = p.eval(&GaussRat::zero());
        prop_assert_eq!(
            f.limit_at_zero(),
            terminalg::exactnum::LimitAtZero::Finite(at_zero)
        );
    }

    #[test]
    fn ratfun_display_roundtrip(pn in proptest::collection::vec(gauss(), 1..4),
                                pd in proptest::collection::vec(gauss(), 1..4)) {
        let num = Poly::from_coeffs(pn);
        let den = Poly::from_coeffs(pd);
        prop_assume!(!den.is_zero());
        let f = RatFun::new(num, den).unwrap();
        let back = parse_ratfun(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutative_terminal_iff_jordan(entries in proptest::collection::vec(gauss(), 18)) {
        // A random commutative 3-dimensional algebra.
        let mut a = Algebra::zero_algebra(3, "random");
        let mut it = entries.into_iter();
        for i in 0..3 {
            for j in i..3 {
                for k in 0..3 {
                    if (i + j + k) % 2 == 0 {
                        let v = it.next().unwrap_or_else(GaussRat::zero);
                        a.set_c(i, j, k, v.clone());
                        a.set_c(j, i, k, v);
                    }
                }
            }
        }
        prop_assert_eq!(a.is_terminal(), a.is_jordan());
    }

    #[test]
    fn square_inside_annihilator_implies_terminal(entries in proptest::collection::vec(gauss(), 8)) {
        // Products of the first two basis vectors land in the annihilator
        // coordinates e3, e4 only, so A^2 ⊆ Ann(A).
        let mut a = Algebra::zero_algebra(4, "ann-square");
        let mut it = entries.into_iter();
        for i in 0..2 {
            for j in 0..2 {
                for k in 2..4 {
                    a.set_c(i, j, k, it.next().unwrap_or_else(GaussRat::zero));
                }
            }
        }
        let square = a.square();
        prop_assert!(a.annihilator().contains_subspace(&square));
        prop_assert!(a.is_terminal());
    }
}

#[test]
fn catalog_leibniz_entries_are_terminal() {
    // Leibniz implies terminal on every entry flagged always-Leibniz.
    let cat = catalog();
    for entry in cat.entries() {
        if entry.unresolved {
            continue;
        }
        for sample in cat.default_samples(entry) {
            if entry.leibniz_at(&sample) {
                let a = cat.build(entry.name, &sample).unwrap();
                assert!(a.is_left_leibniz(), "{} must be Leibniz", a.label());
                assert!(a.is_terminal(), "{} must be terminal", a.label());
            }
        }
    }
}

#[test]
fn subspace_dimension_formula() {
    // dim(U + W) + dim(U ∩ W) = dim U + dim W on a few fixed examples.
    let q = GaussRat::from_int;
    let u = Subspace::from_spanning(
        4,
        vec![vec![q(1), q(0), q(2), q(0)], vec![q(0), q(1), q(0), q(-1)]],
    );
    let w = Subspace::from_spanning(
        4,
        vec![vec![q(1), q(1), q(2), q(-1)], vec![q(0), q(0), q(1), q(0)]],
    );
    assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
}
