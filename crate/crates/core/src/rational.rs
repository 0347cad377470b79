//! Exact reduced rationals and the modular inverse.
//!
//! Rationals are `num_rational::Ratio<T>`, which keeps every value in lowest
//! terms with a positive denominator. Text form is `num/den`, with integers
//! written bare (`0`, `-48`); parsing accepts both.

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::num::{int, Int};

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn rat_make<T: Int>(num: T, den: T) -> Result<Ratio<T>> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Ratio::new(num, den))
}

pub fn rat_add<T: Int>(x: &Ratio<T>, y: &Ratio<T>) -> Ratio<T> {
    x + y
}

pub fn rat_sub<T: Int>(x: &Ratio<T>, y: &Ratio<T>) -> Ratio<T> {
    x - y
}

pub fn rat_mul<T: Int>(x: &Ratio<T>, y: &Ratio<T>) -> Ratio<T> {
    x * y
}

pub fn rat_div<T: Int>(x: &Ratio<T>, y: &Ratio<T>) -> Result<Ratio<T>> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

/// Least positive residue `x` with `a * x ≡ 1 (mod m)`.
///
/// `a` may be any integer; it is reduced modulo `m` first.
pub fn mod_inverse<T: Int>(a: &T, m: &T) -> Result<T> {
    if *m < int(2) {
        return Err(Error::ModulusTooSmall(m.to_string()));
    }
    let a_red = a.mod_floor(m);
    let eg = a_red.extended_gcd(m);
    if !eg.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: a.to_string(),
            modulus: m.to_string(),
        });
    }
    Ok(eg.x.mod_floor(m))
}

/// Parses a decimal integer, allowing a leading `+` or `-`.
pub fn parse_int<T: Int>(s: &str) -> Result<T> {
    let s = s.trim();
    let digits = s.strip_prefix('+').unwrap_or(s);
    digits
        .parse::<T>()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational<T: Int>(s: &str) -> Result<Ratio<T>> {
    match s.split_once('/') {
        Some((n, d)) => rat_make(parse_int(n)?, parse_int(d)?),
        None => Ok(Ratio::from_integer(parse_int(s)?)),
    }
}

/// Renders `x` rounded half-up to `digits` decimal places, using integer
/// arithmetic only.
pub fn decimal_approx<T: Int>(x: &Ratio<T>, digits: u32) -> String {
    let scale = num_traits::pow(int::<T>(10), digits as usize);
    let two = int::<T>(2);
    let (n, d) = (x.numer().clone(), x.denom().clone());
    let rounded = (two.clone() * n * scale.clone() + d.clone()).div_floor(&(two * d));
    let sign = if rounded.is_negative() { "-" } else { "" };
    let mag = rounded.abs();
    let (whole, frac) = mag.div_rem(&scale);
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    let frac = frac.to_string();
    let pad = "0".repeat(digits as usize - frac.len());
    format!("{sign}{whole}.{pad}{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        rat_make(n, d).unwrap()
    }

    #[test]
    fn make_reduces_and_normalizes_sign() {
        let x = r(6, 7);
        assert_eq!((*x.numer(), *x.denom()), (6, 7));
        let x = r(12, 18);
        assert_eq!((*x.numer(), *x.denom()), (2, 3));
        let x = r(3, -9);
        assert_eq!((*x.numer(), *x.denom()), (-1, 3));
        assert_eq!(r(5, 3), r(-5, -3));
        assert_eq!(rat_make(1i64, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn field_ops() {
        assert_eq!(rat_add(&r(1, 2), &r(1, 3)), r(5, 6));
        assert_eq!(rat_mul(&r(2, 3), &r(3, 2)), r(1, 1));
        let z = rat_sub(&r(6, 7), &r(6, 7));
        assert_eq!((*z.numer(), *z.denom()), (0, 1));
        assert_eq!(rat_div(&r(1, 2), &r(1, 4)).unwrap(), r(2, 1));
        assert_eq!(rat_div(&r(1, 2), &r(0, 4)), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(&5i64, &7).unwrap(), 3);
        assert_eq!(mod_inverse(&1i64, &2).unwrap(), 1);
        assert_eq!(mod_inverse(&1i64, &1000).unwrap(), 1);
        let x = mod_inverse(&157i64, &196).unwrap();
        assert!(0 < x && x < 196);
        assert_eq!(157 * x % 196, 1);
        assert_eq!(mod_inverse(&-2i64, &7).unwrap(), 3);
    }

    #[test]
    fn inverse_errors() {
        assert!(matches!(
            mod_inverse(&4i64, &6),
            Err(Error::NotInvertible { .. })
        ));
        assert!(matches!(
            mod_inverse(&1i64, &1),
            Err(Error::ModulusTooSmall(_))
        ));
        assert!(matches!(
            mod_inverse(&0i64, &5),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn text_form() {
        let x: Ratio<BigInt> = parse_rational("-5/3").unwrap();
        assert_eq!(x.to_string(), "-5/3");
        let x: Ratio<BigInt> = parse_rational("12/-18").unwrap();
        assert_eq!(x.to_string(), "-2/3");
        let x: Ratio<BigInt> = parse_rational("0/9").unwrap();
        assert_eq!(x.to_string(), "0");
        let x: Ratio<BigInt> = parse_rational("+7").unwrap();
        assert_eq!(x.to_string(), "7");
        assert!(parse_rational::<BigInt>("1/0").is_err());
        assert!(parse_rational::<BigInt>("x/2").is_err());
        let big: BigInt = parse_int("-123456789012345678901234567890").unwrap();
        assert_eq!(big.to_string(), "-123456789012345678901234567890");
    }

    #[test]
    fn approx_rounding() {
        assert_eq!(decimal_approx(&r(9366455, 2638867), 2), "3.55");
        assert_eq!(decimal_approx(&r(1, 8), 2), "0.13");
        assert_eq!(decimal_approx(&r(-1, 3), 3), "-0.333");
        assert_eq!(decimal_approx(&r(1, 200), 2), "0.01");
        assert_eq!(decimal_approx(&r(7, 2), 0), "4");
        assert_eq!(decimal_approx(&r(3, 1), 2), "3.00");
    }
}
