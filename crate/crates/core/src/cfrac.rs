//! Convergents of periodic continued fractions and filtering by Dedekind-sum value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::num::Int;
use crate::rational::parse_int;
use crate::structure::TargetValue;
use crate::sums::{sum_fast, Pair};

/// `[h0; h1, ..., overline(p1, ..., pm)]`.
///
/// Text form is `head;period` with comma-separated quotients, e.g. `0;3,2,1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicCf<T> {
    head: Vec<T>,
    period: Vec<T>,
}

impl<T: Int> PeriodicCf<T> {
    /// Every quotient after the first must be ≥ 1 and the period non-empty.
    pub fn new(head: Vec<T>, period: Vec<T>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Precondition(
                "continued fraction period is empty".into(),
            ));
        }
        let tail = head.iter().skip(1).chain(period.iter());
        if let Some(bad) = tail.clone().find(|x| **x < T::one()) {
            return Err(Error::Precondition(format!(
                "partial quotient {bad} is < 1"
            )));
        }
        if head.is_empty() && period[0] < T::one() {
            return Err(Error::Precondition(format!(
                "repeating quotient {} is < 1",
                period[0]
            )));
        }
        Ok(PeriodicCf { head, period })
    }

    pub fn head(&self) -> &[T] {
        &self.head
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }

    /// Partial quotient of the given order.
    pub fn quotient(&self, order: usize) -> &T {
        if order < self.head.len() {
            &self.head[order]
        } else {
            &self.period[(order - self.head.len()) % self.period.len()]
        }
    }
}

impl<T: Int> FromStr for PeriodicCf<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, period) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected \"head;period\", got {s:?}")))?;
        let list = |part: &str| -> Result<Vec<T>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(parse_int).collect()
        };
        PeriodicCf::new(list(head)?, list(period)?)
    }
}

impl<T: Int> fmt::Display for PeriodicCf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[T]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{};{}", join(&self.head), join(&self.period))
    }
}

/// The convergent `num/den` of a given order (order 0 is the first quotient).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Convergent<T> {
    pub order: usize,
    pub num: T,
    pub den: T,
}

impl<T: Int> fmt::Display for Convergent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Orders `0..=max_order` via `p_i = a_i p_{i-1} + p_{i-2}`, `q_i = a_i q_{i-1} + q_{i-2}`.
pub fn convergents<T: Int>(cf: &PeriodicCf<T>, max_order: usize) -> Result<Vec<Convergent<T>>> {
    let (mut p_prev, mut p) = (T::zero(), T::one());
    let (mut q_prev, mut q) = (T::one(), T::zero());
    let mut out = Vec::with_capacity(max_order + 1);
    for order in 0..=max_order {
        let a = cf.quotient(order).clone();
        let p_next = a.clone() * p.clone() + p_prev;
        let q_next = a * q.clone() + q_prev;
        (p_prev, p) = (p, p_next);
        (q_prev, q) = (q, q_next);
        if !p.gcd(&q).is_one() {
            return Err(Error::Invariant(format!(
                "convergent {p}/{q} is not reduced"
            )));
        }
        out.push(Convergent {
            order,
            num: p.clone(),
            den: q.clone(),
        });
    }
    Ok(out)
}

/// Keeps the convergents `a/b` with `S(a mod b, b)` equal to the target.
pub fn filter_by_value<T: Int>(
    convs: &[Convergent<T>],
    target: &TargetValue<T>,
) -> Vec<Convergent<T>> {
    let want = target.to_ratio();
    convs
        .iter()
        .filter(
            |c| match Pair::new(c.num.mod_floor(&c.den), c.den.clone()) {
                Ok(pair) => sum_fast(&pair) == want,
                Err(_) => false,
            },
        )
        .cloned()
        .collect()
}
