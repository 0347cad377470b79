//! Constant-value pair sequences.
//!
//! From a [`Decomposition`] `(k, q, t, s, r, n)` and any `r1 ≥ 0`:
//!
//! ```text
//! r2 = n·r1 + r          t2 = (r2²q² + 1)/n
//! a2 = s·t2 - r2·q       b2 = q(a2² + 1)/t2     S(a2,b2) = k/q - (q²-1)·r1
//! a3 = a2 + r1·t2·q      b3 = q(a3² + 1)/t2     S(a3,b3) = k/q
//! ```
//!
//! `b3` is a quartic in `r1` with leading coefficient `n·q⁵`; see
//! [`quartic_structure_check`].

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::num::{from_u64, int, Int};
use crate::structure::Decomposition;
use crate::sums::{sum_fast, Pair};

/// One row of the sequence for a given `r1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratedTerm<T> {
    pub r1: T,
    pub r2: T,
    pub t2: T,
    pub a2: T,
    pub b2: T,
    pub a3: T,
    pub b3: T,
}

impl<T: Int> GeneratedTerm<T> {
    /// `b3 / (r1⁴ n q⁵)`, undefined at `r1 = 0`.
    pub fn leading_ratio(&self, d: &Decomposition<T>) -> Option<Ratio<T>> {
        if self.r1.is_zero() {
            return None;
        }
        let r1_4 = num_traits::pow(self.r1.clone(), 4);
        Some(Ratio::new(self.b3.clone(), r1_4 * leading_coefficient(d)))
    }
}

/// `n·q⁵`.
pub fn leading_coefficient<T: Int>(d: &Decomposition<T>) -> T {
    d.n().clone() * num_traits::pow(d.q().clone(), 5)
}

fn exact_quotient<T: Int>(numer: T, denom: &T, what: &str) -> Result<T> {
    let (quot, rem) = numer.div_rem(denom);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!("{what} is not an integer")));
    }
    Ok(quot)
}

pub fn generate_term<T: Int>(d: &Decomposition<T>, r1: &T) -> Result<GeneratedTerm<T>> {
    if r1.is_negative() {
        return Err(Error::Precondition(format!("r1 must be ≥ 0, got {r1}")));
    }
    let (q, s, r, n) = (d.q(), d.s(), d.r(), d.n());
    let r2 = n.clone() * r1.clone() + r.clone();
    let r2q = r2.clone() * q.clone();
    let t2 = exact_quotient(r2q.clone() * r2q.clone() + T::one(), n, "t2")?;
    if !t2.gcd(q).is_one() {
        return Err(Error::Invariant(format!("gcd(t2={t2}, q={q}) != 1")));
    }
    let a2 = s.clone() * t2.clone() - r2q;
    let b2 = exact_quotient(q.clone() * (a2.clone() * a2.clone() + T::one()), &t2, "b2")?;
    let a3 = a2.clone() + r1.clone() * t2.clone() * q.clone();
    let a3_alt = s.clone() * t2.clone()
        + (r1.clone() * t2.clone() - r1.clone() * n.clone() - r.clone()) * q.clone();
    if a3 != a3_alt {
        return Err(Error::Invariant(format!(
            "a3 forms disagree: {a3} vs {a3_alt}"
        )));
    }
    let b3 = exact_quotient(q.clone() * (a3.clone() * a3.clone() + T::one()), &t2, "b3")?;
    if !a3.gcd(&b3).is_one() {
        return Err(Error::Invariant(format!(
            "gcd(a3={a3}, b3={b3}) != 1 at r1={r1}"
        )));
    }
    Ok(GeneratedTerm {
        r1: r1.clone(),
        r2,
        t2,
        a2,
        b2,
        a3,
        b3,
    })
}

/// Recomputes `S(a3, b3)` and compares it with the seed value.
pub fn verify_term<T: Int>(d: &Decomposition<T>, term: &GeneratedTerm<T>) -> Result<bool> {
    let pair = Pair::new(term.a3.clone(), term.b3.clone())?;
    Ok(sum_fast(&pair) == d.value().to_ratio())
}

/// Outcome of checking `S(a2,b2) = k/q - (q²-1)·r1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftCheck {
    Holds,
    Violated,
    /// `gcd(a2, b2) != 1`, so `S(a2, b2)` is not defined.
    Skipped,
}

pub fn shift_identity_check<T: Int>(d: &Decomposition<T>, r1: &T) -> Result<ShiftCheck> {
    let term = generate_term(d, r1)?;
    let Ok(pair) = Pair::new(term.a2, term.b2) else {
        return Ok(ShiftCheck::Skipped);
    };
    let q = d.q().clone();
    let shift = (q.clone() * q - T::one()) * r1.clone();
    let expected = d.value().to_ratio() - Ratio::from_integer(shift);
    Ok(if sum_fast(&pair) == expected {
        ShiftCheck::Holds
    } else {
        ShiftCheck::Violated
    })
}

/// Terms for `r1 = 0..=r1_max`, in order.
pub fn generate_sequence<T: Int>(
    d: &Decomposition<T>,
    r1_max: u64,
) -> Result<Vec<GeneratedTerm<T>>> {
    (0..=r1_max)
        .into_par_iter()
        .map(|r1| generate_term(d, &from_u64(r1)))
        .collect()
}

/// Exact certificate that `b3(r1)` is a quartic with the claimed leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCertificate<T> {
    pub degree: u32,
    /// `n·q⁵`.
    pub leading: T,
    /// The constant fourth forward difference, `24·n·q⁵`.
    pub fourth_difference: T,
    /// Number of sample points `b3(0..=window)`.
    pub points: usize,
}

/// Forward differences of `values`, order 0 through `order`.
pub fn forward_differences<T: Int>(values: &[T], order: usize) -> Vec<Vec<T>> {
    let mut table = vec![values.to_vec()];
    for _ in 0..order {
        let last = table.last().expect("table starts non-empty");
        let next = last
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
        table.push(next);
    }
    table
}

/// Checks on `b3(0), ..., b3(window)` that every fifth forward difference is
/// zero and every fourth equals `24·n·q⁵`.
pub fn quartic_structure_check<T: Int>(
    d: &Decomposition<T>,
    window: usize,
) -> Result<QuarticCertificate<T>> {
    if window < 5 {
        return Err(Error::Precondition(format!(
            "window must be ≥ 5, got {window}"
        )));
    }
    let b3: Vec<T> = generate_sequence(d, window as u64)?
        .into_iter()
        .map(|t| t.b3)
        .collect();
    let table = forward_differences(&b3, 5);
    let leading = leading_coefficient(d);
    let fourth = int::<T>(24) * leading.clone();
    if let Some(bad) = table[4].iter().find(|v| **v != fourth) {
        return Err(Error::Invariant(format!(
            "fourth difference {bad} != 24·n·q⁵ = {fourth}"
        )));
    }
    if let Some(bad) = table[5].iter().find(|v| !v.is_zero()) {
        return Err(Error::Invariant(format!("fifth difference {bad} != 0")));
    }
    Ok(QuarticCertificate {
        degree: 4,
        leading,
        fourth_difference: fourth,
        points: b3.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::decompose;

    fn example() -> Decomposition<i64> {
        decompose(&Pair::new(2, 7).unwrap()).unwrap()
    }

    #[test]
    fn seed_is_reproduced_at_zero() {
        let t = generate_term(&example(), &0).unwrap();
        assert_eq!((t.a3, t.b3, t.t2, t.r2), (2, 7, 5, 4));
        assert_eq!((t.a2, t.b2), (2, 7));
    }

    #[test]
    fn example_rows() {
        let d = example();
        let t = generate_term(&d, &1).unwrap();
        assert_eq!((t.t2, t.a3, t.b3), (8090, 104043, 9366455));
        let t = generate_term(&d, &2).unwrap();
        assert_eq!((t.t2, t.a3, t.b3), (31561, 628994, 87748619));
        let t = generate_term(&d, &3).unwrap();
        assert_eq!((t.a3, t.b3), (1897961, 358087303));
        assert!(verify_term(&d, &t).unwrap());
    }

    #[test]
    fn negative_r1_rejected() {
        assert!(matches!(
            generate_term(&example(), &-1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shift_identity_examples() {
        let d = example();
        for r1 in 0..3 {
            assert_eq!(shift_identity_check(&d, &r1).unwrap(), ShiftCheck::Holds);
        }
        let t = generate_term(&d, &1).unwrap();
        let v = sum_fast(&Pair::new(t.a2, t.b2).unwrap());
        assert_eq!(v, Ratio::new(6, 7) - Ratio::from_integer(48));
    }

    #[test]
    fn sequence_is_ordered() {
        let d = example();
        let seq = generate_sequence(&d, 3).unwrap();
        assert_eq!(seq.len(), 4);
        assert_eq!(
            seq.iter().map(|t| t.r1).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(generate_sequence(&d, 0).unwrap()[0].b3, 7);
    }

    #[test]
    fn differences_of_a_cubic() {
        let cubic: Vec<i64> = (0..8).map(|x| x * x * x).collect();
        let table = forward_differences(&cubic, 4);
        assert!(table[3].iter().all(|v| *v == 6));
        assert!(table[4].iter().all(|v| *v == 0));
        assert_eq!(table[4].len(), 4);
    }

    #[test]
    fn quartic_certificate_example() {
        let cert = quartic_structure_check(&example(), 8).unwrap();
        assert_eq!(cert.degree, 4);
        assert_eq!(cert.leading, 157 * 7i64.pow(5));
        assert_eq!(cert.leading, 2638699);
        assert_eq!(cert.fourth_difference, 63328776);
        assert!(quartic_structure_check(&example(), 4).is_err());
    }

    #[test]
    fn ratio_is_undefined_at_zero() {
        let d = example();
        let t = generate_term(&d, &0).unwrap();
        assert!(t.leading_ratio(&d).is_none());
    }
}
