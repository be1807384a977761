use std::collections::BTreeMap;

use proptest::prelude::*;
use ties_core::exactmath::{rank, rank_exact, span_closure, Poly, RankMode, RatFunc, Rational, SparseMatrix};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_i64(&c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("zero denominator", |(a, b)| RatFunc::new(a, b).ok())
}

fn matrix() -> impl Strategy<Value = SparseMatrix<RatFunc>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((-2i64..=2, 0usize..=2, -1i64..=1), c), r).prop_map(move |rows| {
            let mut m = SparseMatrix::new(r, c);
            for (i, row) in rows.into_iter().enumerate() {
                for (j, (a, deg, b)) in row.into_iter().enumerate() {
                    let e = RatFunc::from_int(a) * &RatFunc::u_pow(deg as i64) + &RatFunc::from_int(b);
                    if e != RatFunc::from_int(0) {
                        m.set(i, j, e);
                    }
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn evaluation_is_a_ring_homomorphism((a, b, q) in (ratfunc(), ratfunc(), rational())) {
        if let (Ok(x), Ok(y)) = (a.eval(&q), b.eval(&q)) {
            prop_assert_eq!((&a + &b).eval(&q).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).eval(&q).unwrap(), &x * &y);
            prop_assert_eq!((&a - &b).eval(&q).unwrap(), &x - &y);
        }
    }

    #[test]
    fn field_axioms((a, b, c) in (ratfunc(), ratfunc(), ratfunc())) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Ok(inv) = a.recip() {
            prop_assert_eq!(&a * &inv, RatFunc::from_int(1));
        }
    }


    #[test]
    fn specialized_rank_agrees_with_exact(m in matrix(), seed in any::<u64>()) {
        prop_assert_eq!(rank(&m, RankMode::Specialized { seed }), rank_exact(&m));
    }

    #[test]
    fn span_closure_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..4)) {
        let seed: Vec<BTreeMap<usize, Rational>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, Rational::from_integer(c.into()))).collect())
            .collect();
        // cyclic shift of coordinates
        let shift = |v: &BTreeMap<usize, Rational>| vec![v.iter().map(|(j, c)| ((j + 1) % 4, c.clone())).collect()];
        let once = span_closure(seed, shift);
        let again = span_closure(once.rows().cloned().collect(), shift);
        prop_assert_eq!(once.dim(), again.dim());
        prop_assert!(once.rows().all(|r| again.contains(r)));
        for r in once.rows() {
            prop_assert!(once.contains(&shift(r)[0]));
        }
    }
}
