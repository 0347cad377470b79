//! Structural identities for Dedekind-sum values with denominator `q ≥ 2`.
//!
//! A pair `(a, b)` has `S(a,b) = k/q` in lowest terms exactly when
//! `b = q(a²+1)/t` for some `t` coprime to `q`. Writing `a = st - rq` and
//! `n = (r²q²+1)/t` gives the [`Decomposition`] that drives the sequence
//! generator.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::num::{int, Int};
use crate::rational::mod_inverse;
use crate::sums::{sum_fast, Pair};

/// A Dedekind-sum value `k/q` with `gcd(k, q) = 1` and `q ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TargetValue<T> {
    k: T,
    q: T,
}

impl<T: Int> TargetValue<T> {
    pub fn new(k: T, q: T) -> Result<Self> {
        if q < T::one() {
            return Err(Error::Precondition(format!(
                "denominator must be ≥ 1, got {q}"
            )));
        }
        if !k.gcd(&q).is_one() {
            return Err(Error::not_coprime(&k, &q));
        }
        Ok(TargetValue { k, q })
    }

    pub fn from_ratio(value: &Ratio<T>) -> Self {
        TargetValue {
            k: value.numer().clone(),
            q: value.denom().clone(),
        }
    }

    pub fn k(&self) -> &T {
        &self.k
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn to_ratio(&self) -> Ratio<T> {
        Ratio::new_raw(self.k.clone(), self.q.clone())
    }

    pub fn negated(&self) -> Self {
        TargetValue {
            k: -self.k.clone(),
            q: self.q.clone(),
        }
    }
}

impl<T: Int> fmt::Display for TargetValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.q)
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn square_plus_one<T: Int>(x: &T) -> T {
    x.clone() * x.clone() + T::one()
}

/// Recovers `t = q(a²+1)/b` for a pair whose value has denominator `q`.
pub fn lemma1_t<T: Int>(p: &Pair<T>, q: &T) -> Result<T> {
    require(*q >= int(2), || format!("q must be ≥ 2, got {q}"))?;
    let numer = q.clone() * square_plus_one(p.a());
    let (t, rem) = numer.div_rem(p.b());
    require(rem.is_zero(), || {
        format!("b={} does not divide q(a²+1) for q={q}", p.b())
    })?;
    require(t.gcd(q).is_one(), || {
        format!("t={t} shares a factor with q={q}")
    })?;
    Ok(t)
}

/// `b = q(a²+1)/t`, the modulus attached to `(a, q, t)`.
pub fn lemma1_modulus<T: Int>(a: &T, q: &T, t: &T) -> Result<T> {
    require(*q >= int(2), || format!("q must be ≥ 2, got {q}"))?;
    require(*t >= T::one(), || format!("t must be ≥ 1, got {t}"))?;
    require(t.gcd(q).is_one(), || format!("gcd(t={t}, q={q}) != 1"))?;
    let m = square_plus_one(a);
    require(m.is_multiple_of(t), || {
        format!("t={t} does not divide a²+1 for a={a}")
    })?;
    Ok(q.clone() * (m / t.clone()))
}

/// `-S(aq, t) + S(at*, q) + (q²-1)a/(tq)` with `tt* ≡ 1 (mod q)`.
pub fn lemma2_rhs<T: Int>(a: &T, q: &T, t: &T) -> Result<Ratio<T>> {
    require(*q >= int(2), || format!("q must be ≥ 2, got {q}"))?;
    require(*t >= T::one(), || format!("t must be ≥ 1, got {t}"))?;
    require(t.gcd(q).is_one(), || format!("gcd(t={t}, q={q}) != 1"))?;
    require(a.gcd(q).is_one(), || format!("gcd(a={a}, q={q}) != 1"))?;
    require(square_plus_one(a).is_multiple_of(t), || {
        format!("t={t} does not divide a²+1 for a={a}")
    })?;
    let t_inv = mod_inverse(t, q)?;
    let first = sum_fast(&Pair::new((a.clone() * q.clone()).mod_floor(t), t.clone())?);
    let second = sum_fast(&Pair::new((a.clone() * t_inv).mod_floor(q), q.clone())?);
    let q2m1 = q.clone() * q.clone() - T::one();
    let third = Ratio::new(q2m1 * a.clone(), t.clone() * q.clone());
    Ok(second - first + third)
}

/// `S(rq², n) + S(s, q) - (q²-1)r/n + sq - s/q`.
pub fn theorem2_rhs<T: Int>(r: &T, q: &T, n: &T, s: &T) -> Result<Ratio<T>> {
    require(*q >= int(2), || format!("q must be ≥ 2, got {q}"))?;
    require(*r >= T::one(), || format!("r must be ≥ 1, got {r}"))?;
    require(*n >= T::one(), || format!("n must be ≥ 1, got {n}"))?;
    require(s.gcd(q).is_one(), || format!("gcd(s={s}, q={q}) != 1"))?;
    let rq = r.clone() * q.clone();
    require(square_plus_one(&rq).is_multiple_of(n), || {
        format!("n={n} does not divide r²q²+1 for r={r}, q={q}")
    })?;
    let rq2 = rq * q.clone();
    let first = sum_fast(&Pair::new(rq2.mod_floor(n), n.clone())?);
    let second = sum_fast(&Pair::new(s.mod_floor(q), q.clone())?);
    let q2m1 = q.clone() * q.clone() - T::one();
    let shift = Ratio::new(q2m1 * r.clone(), n.clone());
    let tail = Ratio::from_integer(s.clone() * q.clone()) - Ratio::new(s.clone(), q.clone());
    Ok(first + second - shift + tail)
}

/// The data `(k, q, t, s, r, n)` of a seed pair with value `k/q`, `q ≥ 2`.
///
/// Invariants: `q ≥ 2`, `t, r, n ≥ 1`, `gcd(t,q) = gcd(s,q) = gcd(k,q) = 1`,
/// `nt = r²q²+1`, and the seed `a = st - rq`, `b = q(a²+1)/t` has
/// `S(a,b) = k/q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition<T> {
    k: T,
    q: T,
    t: T,
    s: T,
    r: T,
    n: T,
}

impl<T: Int> Decomposition<T> {
    /// Validates a hand-built decomposition, including the seed's value.
    pub fn try_new(k: T, q: T, t: T, s: T, r: T, n: T) -> Result<Self> {
        let d = Decomposition { k, q, t, s, r, n };
        d.validate().map_err(Error::Precondition)?;
        Ok(d)
    }

    pub fn k(&self) -> &T {
        &self.k
    }
    pub fn q(&self) -> &T {
        &self.q
    }
    pub fn t(&self) -> &T {
        &self.t
    }
    pub fn s(&self) -> &T {
        &self.s
    }
    pub fn r(&self) -> &T {
        &self.r
    }
    pub fn n(&self) -> &T {
        &self.n
    }

    pub fn value(&self) -> TargetValue<T> {
        TargetValue {
            k: self.k.clone(),
            q: self.q.clone(),
        }
    }

    /// `a = st - rq`.
    pub fn seed_a(&self) -> T {
        self.s.clone() * self.t.clone() - self.r.clone() * self.q.clone()
    }

    /// `b = q(a²+1)/t`.
    pub fn seed_b(&self) -> T {
        self.q.clone() * square_plus_one(&self.seed_a()) / self.t.clone()
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let Decomposition { k, q, t, s, r, n } = self;
        let one = T::one();
        if *q < int(2) || *t < one || *r < one || *n < one {
            return Err(format!("need q ≥ 2 and t, r, n ≥ 1 in {self}"));
        }
        if !t.gcd(q).is_one() || !s.gcd(q).is_one() || !k.gcd(q).is_one() {
            return Err(format!("t, s, k must be coprime to q in {self}"));
        }
        let rq = r.clone() * q.clone();
        if n.clone() * t.clone() != square_plus_one(&rq) {
            return Err(format!("n·t != r²q²+1 in {self}"));
        }
        let a = self.seed_a();
        let m = square_plus_one(&a);
        if !m.is_multiple_of(t) {
            return Err(format!("t does not divide a²+1 in {self}"));
        }
        let b = q.clone() * (m / t.clone());
        let seed = Pair::new(a, b).map_err(|e| format!("seed of {self}: {e}"))?;
        if sum_fast(&seed) != Ratio::new_raw(k.clone(), q.clone()) {
            return Err(format!("seed value differs from k/q in {self}"));
        }
        Ok(())
    }
}

impl<T: Int> fmt::Display for Decomposition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} q={} t={} s={} r={} n={}",
            self.k, self.q, self.t, self.s, self.r, self.n
        )
    }
}

/// Decomposes a seed pair whose value has denominator `q ≥ 2`.
///
/// `s` is the least positive residue of `a t*` modulo `q`, raised by
/// multiples of `q` until `r = (st - a)/q ≥ 1`.
pub fn decompose<T: Int>(p: &Pair<T>) -> Result<Decomposition<T>> {
    let value = sum_fast(p);
    let (k, q) = (value.numer().clone(), value.denom().clone());
    if q.is_one() {
        return Err(Error::TrivialValue {
            a: p.a().to_string(),
            b: p.b().to_string(),
        });
    }
    let a = p.a().clone();
    let t = lemma1_t(p, &q).map_err(|e| Error::Invariant(format!("lemma 1 form: {e}")))?;
    let t_inv = mod_inverse(&t, &q)?;
    let mut s = (a.clone() * t_inv).mod_floor(&q);
    let (mut r, rem) = (s.clone() * t.clone() - a.clone()).div_rem(&q);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "st - a not divisible by q for s={s}"
        )));
    }
    if r < T::one() {
        let lift = (t.clone() - r.clone()).div_floor(&t);
        s = s + lift.clone() * q.clone();
        r = r + lift * t.clone();
    }
    let rq = r.clone() * q.clone();
    let n = square_plus_one(&rq) / t.clone();
    let d = Decomposition { k, q, t, s, r, n };
    d.validate().map_err(Error::Invariant)?;
    if d.seed_a() != a || d.seed_b() != *p.b() {
        return Err(Error::Invariant(format!(
            "{d} does not reconstruct ({}, {})",
            a,
            p.b()
        )));
    }
    debug_assert!(!d.r.is_negative());
    Ok(d)
}
