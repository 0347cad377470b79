//! Normalized Dedekind sums `S(a,b) = 12 s(a,b)`.
//!
//! Two evaluators are provided: [`sum_definitional`] walks the defining
//! sawtooth sum in `Θ(b)` steps and serves as the oracle, while [`sum_fast`]
//! runs the reciprocity law along the Euclidean remainder sequence in
//! `O(log b)` steps.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::{int, Int};
use crate::rational::mod_inverse;

/// A coprime argument pair `(a, b)` with `b ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair<T> {
    a: T,
    b: T,
}

impl<T: Int> Pair<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        if b < T::one() {
            return Err(Error::Precondition(format!(
                "modulus b must be ≥ 1, got {b}"
            )));
        }
        if !a.gcd(&b).is_one() {
            return Err(Error::not_coprime(&a, &b));
        }
        Ok(Pair { a, b })
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    /// The same pair with `a` reduced into `[0, b)`.
    pub fn reduced(&self) -> Self {
        Pair {
            a: self.a.mod_floor(&self.b),
            b: self.b.clone(),
        }
    }
}

/// The sawtooth `((x))`: `x - ⌊x⌋ - 1/2` off the integers, `0` on them.
pub fn sawtooth<T: Int>(x: &Ratio<T>) -> Ratio<T> {
    if x.is_integer() {
        return Ratio::zero();
    }
    x - x.floor() - Ratio::new(T::one(), int(2))
}

/// `12 Σ_{k=1}^{b} ((k/b))((ak/b))`, evaluated term by term.
///
/// Each term `((k/b))((ak/b))` for `1 ≤ k < b` equals `(2k-b)(2r_k-b)/(4b²)`
/// with `r_k = ak mod b` (nonzero by coprimality); the `k = b` term vanishes.
/// Terms are accumulated over the common denominator, so the cost is `b`
/// integer multiply-adds.
pub fn sum_definitional<T: Int>(p: &Pair<T>) -> Ratio<T> {
    let b = p.b.clone();
    let step = p.a.mod_floor(&b);
    let two = int::<T>(2);
    let mut acc = T::zero();
    let mut residue = T::zero();
    let mut k = T::one();
    while k < b {
        residue = residue + step.clone();
        if residue >= b {
            residue = residue - b.clone();
        }
        let lhs = two.clone() * k.clone() - b.clone();
        let rhs = two.clone() * residue.clone() - b.clone();
        acc = acc + lhs * rhs;
        k = k + T::one();
    }
    Ratio::new(int::<T>(3) * acc, b.clone() * b)
}

/// `S(a,b)` in `O(log b)` integer operations.
///
/// With remainders `r_0 = b, r_1 = a mod b, r_{i-1} = q_i r_i + r_{i+1}`
/// ending at `r_n = 1`, repeated reciprocity collapses to
/// `Σ (-1)^{i+1} (q_i - 3) + a/b + Σ (-1)^{i+1} / (r_{i-1} r_i)`;
/// the last alternating sum equals `c_1 / b` where `c_n = 1` and
/// `c_i = (1 - c_{i+1} r_{i-1}) / r_i`.
pub fn sum_fast<T: Int>(p: &Pair<T>) -> Ratio<T> {
    let b = p.b.clone();
    let a = p.a.mod_floor(&b);
    if b.is_one() {
        return Ratio::zero();
    }
    let three = int::<T>(3);
    let mut remainders = vec![b.clone(), a.clone()];
    let mut whole = T::zero();
    let mut positive = true;
    loop {
        let len = remainders.len();
        let (prev, cur) = (&remainders[len - 2], &remainders[len - 1]);
        if cur.is_zero() {
            break;
        }
        let (quot, next) = prev.div_rem(cur);
        let term = quot - three.clone();
        whole = if positive { whole + term } else { whole - term };
        positive = !positive;
        remainders.push(next);
    }
    // remainders = [r_0, ..., r_n = 1, 0]
    let n = remainders.len() - 2;
    let mut c = T::one();
    for i in (1..n).rev() {
        let numer = T::one() - c * remainders[i - 1].clone();
        debug_assert!(numer.is_multiple_of(&remainders[i]));
        c = numer / remainders[i].clone();
    }
    Ratio::new(whole * b.clone() + a + c, b)
}

/// `S(a,b)` for raw arguments; fails unless `b ≥ 1` and `gcd(a,b) = 1`.
pub fn dedekind_sum<T: Int>(a: T, b: T) -> Result<Ratio<T>> {
    Ok(sum_fast(&Pair::new(a, b)?))
}

/// Right-hand side of the reciprocity law, `a/b + b/a + 1/(ab) - 3`.
pub fn reciprocity_rhs<T: Int>(a: &T, b: &T) -> Result<Ratio<T>> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition(format!(
            "reciprocity needs positive arguments, got ({a}, {b})"
        )));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::not_coprime(a, b));
    }
    let numer = a.clone() * a.clone() + b.clone() * b.clone() + T::one();
    Ok(Ratio::new(numer, a.clone() * b.clone()) - Ratio::from_integer(int(3)))
}

/// `S(-a, b)`, evaluated directly on the negated argument.
pub fn negate_arg<T: Int>(p: &Pair<T>) -> Ratio<T> {
    let neg = Pair {
        a: -p.a.clone(),
        b: p.b.clone(),
    };
    sum_fast(&neg)
}

/// Checks `S(a*, b) = S(a, b)` where `a a* ≡ 1 (mod b)`.
pub fn inverse_arg_invariance_check<T: Int>(a: &T, b: &T) -> Result<bool> {
    let inv = mod_inverse(a, b)?;
    let lhs = sum_fast(&Pair::new(inv, b.clone())?);
    let rhs = sum_fast(&Pair::new(a.clone(), b.clone())?);
    Ok(lhs == rhs)
}

/// Whether `b | a² + 1`, which is exactly when `S(a,b)` is an integer (and then 0).
pub fn is_integer_value<T: Int>(p: &Pair<T>) -> bool {
    (p.a.clone() * p.a.clone() + T::one()).is_multiple_of(&p.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pair(a: i64, b: i64) -> Pair<i64> {
        Pair::new(a, b).unwrap()
    }

    fn rat(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    /// Literal transcription of the defining sum over exact rationals.
    fn sawtooth_sum(a: i64, b: i64) -> Ratio<i64> {
        let mut total = Ratio::zero();
        for k in 1..=b {
            total += sawtooth(&rat(k, b)) * sawtooth(&rat(a * k, b));
        }
        total * Ratio::from_integer(12)
    }

    #[test]
    fn pair_validation() {
        assert!(matches!(Pair::new(2i64, 4), Err(Error::NotCoprime { .. })));
        assert!(matches!(Pair::new(1i64, 0), Err(Error::Precondition(_))));
        assert!(matches!(Pair::new(1i64, -3), Err(Error::Precondition(_))));
        assert!(Pair::new(0i64, 1).is_ok());
        assert!(Pair::new(0i64, 2).is_err());
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&rat(3, 1)), rat(0, 1));
        assert_eq!(sawtooth(&rat(1, 4)), rat(-1, 4));
        assert_eq!(sawtooth(&rat(-1, 4)), rat(1, 4));
        assert_eq!(sawtooth(&rat(7, 2)), rat(0, 1));
    }

    #[test]
    fn definitional_examples() {
        assert_eq!(sum_definitional(&pair(2, 7)), rat(6, 7));
        assert_eq!(sum_definitional(&pair(1, 2)), rat(0, 1));
        assert_eq!(sum_definitional(&pair(1, 3)), rat(2, 3));
        assert_eq!(sum_definitional(&pair(0, 1)), rat(0, 1));
    }

    #[test]
    fn definitional_matches_sawtooth_transcription() {
        for b in 1..=60 {
            for a in -b..2 * b {
                if num_integer::gcd(a, b) == 1 {
                    assert_eq!(
                        sum_definitional(&pair(a, b)),
                        sawtooth_sum(a, b),
                        "({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn fast_examples() {
        assert_eq!(sum_fast(&pair(2, 7)), rat(6, 7));
        assert_eq!(sum_fast(&pair(0, 1)), rat(0, 1));
        assert_eq!(sum_fast(&pair(5, 1)), rat(0, 1));
        assert_eq!(sum_fast(&pair(104043, 9366455)), rat(6, 7));
        let big = dedekind_sum(BigInt::from(104043), BigInt::from(9366455)).unwrap();
        assert_eq!(big.to_string(), "6/7");
    }

    #[test]
    fn fast_rejects_non_coprime() {
        assert!(matches!(
            dedekind_sum(6i64, 9),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn reciprocity_examples() {
        assert_eq!(reciprocity_rhs(&1i64, &1).unwrap(), rat(0, 1));
        assert_eq!(sum_fast(&pair(1, 1)) + sum_fast(&pair(1, 1)), rat(0, 1));
        // 2/7 + 7/2 + 1/14 - 3 = 54/14 - 3, and S(7,2) = S(1,2) = 0
        assert_eq!(reciprocity_rhs(&2i64, &7).unwrap(), rat(6, 7));
        assert_eq!(sum_fast(&pair(7, 2)), rat(0, 1));
        assert_eq!(sum_fast(&pair(2, 7)) + sum_fast(&pair(7, 2)), rat(6, 7));
        let lhs = sum_fast(&pair(196, 157)) + sum_fast(&pair(157, 196));
        assert_eq!(reciprocity_rhs(&196i64, &157).unwrap(), lhs);
        assert!(reciprocity_rhs(&0i64, &1).is_err());
        assert!(reciprocity_rhs(&2i64, &4).is_err());
    }

    #[test]
    fn negation_examples() {
        assert_eq!(negate_arg(&pair(2, 7)), rat(-6, 7));
        assert_eq!(negate_arg(&pair(1, 2)), rat(0, 1));
        assert_eq!(negate_arg(&pair(1, 3)), rat(-2, 3));
    }

    #[test]
    fn inverse_invariance_examples() {
        assert!(inverse_arg_invariance_check(&2i64, &7).unwrap());
        assert_eq!(sum_definitional(&pair(4, 7)), sum_definitional(&pair(2, 7)));
        assert!(inverse_arg_invariance_check(&1i64, &9).unwrap());
        assert!(inverse_arg_invariance_check(&5i64, &157).unwrap());
        let inv = mod_inverse(&5i64, &157).unwrap();
        assert_eq!(
            sum_definitional(&pair(inv, 157)),
            sum_definitional(&pair(5, 157))
        );
        assert!(inverse_arg_invariance_check(&2i64, &4).is_err());
        assert!(inverse_arg_invariance_check(&0i64, &1).is_err());
    }

    #[test]
    fn integer_value_examples() {
        assert!(is_integer_value(&pair(1, 2)));
        assert!(!is_integer_value(&pair(2, 7)));
        assert!(is_integer_value(&pair(5, 13)));
        assert_eq!(sum_fast(&pair(5, 13)), rat(0, 1));
        assert_eq!(sum_definitional(&pair(5, 13)), rat(0, 1));
    }
}
