//! Strategies shared by the property and acceptance suites.
#![allow(dead_code)]

use dedekind::sums::Pair;
use dedekind::{divisors, sum_fast, BigInt, Decomposition};
use num_integer::Integer;
use proptest::prelude::*;

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn coprime_pair(max_b: i64) -> impl Strategy<Value = (i64, i64)> {
    (-max_b..max_b, 1..max_b).prop_filter("coprime", |(a, b)| a.gcd(b) == 1)
}

/// `(a, q, t)` with `q ≥ 2`, `t | a²+1`, `(t,q) = (a,q) = 1`.
pub fn lemma1_tuple() -> impl Strategy<Value = (i64, i64, i64)> {
    (0i64..5000, 2i64..60, any::<prop::sample::Index>()).prop_filter_map(
        "needs a divisor coprime to q",
        |(a, q, idx)| {
            if a.gcd(&q) != 1 {
                return None;
            }
            let cands: Vec<i64> = divisors(&(a * a + 1))
                .into_iter()
                .filter(|t| t.gcd(&q) == 1)
                .collect();
            Some((a, q, cands[idx.index(cands.len())]))
        },
    )
}

/// `(r, q, n, s)` with `n | r²q²+1` and `(s,q) = 1`.
pub fn theorem2_tuple() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (
        1i64..120,
        2i64..40,
        any::<prop::sample::Index>(),
        -500i64..500,
    )
        .prop_filter_map("s coprime to q", |(r, q, idx, s)| {
            if s.gcd(&q) != 1 {
                return None;
            }
            let ns = divisors(&(r * r * q * q + 1));
            Some((r, q, ns[idx.index(ns.len())], s))
        })
}

/// A decomposition assembled from a random theorem-2 tuple, over BigInt.
pub fn random_decomposition() -> impl Strategy<Value = Decomposition> {
    theorem2_tuple().prop_map(|(r, q, n, s)| {
        let t = (r * r * q * q + 1) / n;
        let (r, q, n, s, t) = (big(r), big(q), big(n), big(s), big(t));
        let a = &s * &t - &r * &q;
        let b = &q * (&a * &a + 1) / &t;
        let value = sum_fast(&Pair::new(a, b).unwrap());
        assert_eq!(*value.denom(), q);
        Decomposition::try_new(value.numer().clone(), q, t, s, r, n).unwrap()
    })
}
