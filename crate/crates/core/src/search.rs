//! Moduli enumeration for a target value `k/q`.
//!
//! [`enumerate_bruteforce`] scans every coprime pair and is the oracle;
//! [`enumerate_lemma1`] only visits `b = q(a²+1)/t` for divisors `t` of
//! `a²+1` coprime to `q`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generator::GeneratedTerm;
use crate::num::{from_u64, int, Int};
use crate::structure::TargetValue;
use crate::sums::{sum_fast, Pair};

/// A pair `(a, b)`, `0 ≤ a < b`, with `S(a,b)` equal to the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModulusHit<T> {
    pub b: T,
    pub a: T,
    pub value: TargetValue<T>,
}

impl<T: Int> fmt::Display for ModulusHit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.value)
    }
}

fn check_target<T: Int>(target: &TargetValue<T>) -> Result<()> {
    if *target.q() < int(2) {
        return Err(Error::Precondition(format!(
            "target {target} is an integer; the q=1 case is trivial"
        )));
    }
    Ok(())
}

fn hit_if_match<T: Int>(a: T, b: T, target: &TargetValue<T>) -> Option<ModulusHit<T>> {
    let pair = Pair::new(a, b).ok()?;
    let value = sum_fast(&pair);
    if *value.numer() == *target.k() && *value.denom() == *target.q() {
        Some(ModulusHit {
            a: pair.a().clone(),
            b: pair.b().clone(),
            value: target.clone(),
        })
    } else {
        None
    }
}

fn sort_hits<T: Int + Ord>(mut hits: Vec<ModulusHit<T>>) -> Vec<ModulusHit<T>> {
    hits.sort();
    hits.dedup();
    hits
}

/// Every hit with `b ≤ b_max`, sorted by `(b, a)`.
pub fn enumerate_bruteforce<T: Int + Ord>(
    target: &TargetValue<T>,
    b_max: u64,
) -> Result<Vec<ModulusHit<T>>> {
    check_target(target)?;
    let hits = (1..=b_max)
        .into_par_iter()
        .flat_map_iter(|b| {
            let b = from_u64::<T>(b);
            let mut found = Vec::new();
            let mut a = T::zero();
            while a < b {
                if let Some(hit) = hit_if_match(a.clone(), b.clone(), target) {
                    found.push(hit);
                }
                a = a + T::one();
            }
            found
        })
        .collect();
    Ok(sort_hits(hits))
}

/// Positive divisors of `m ≥ 1` in increasing order, by trial division.
pub fn divisors<T: Int>(m: &T) -> Vec<T> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = T::one();
    while d.clone() * d.clone() <= *m {
        let (quot, rem) = m.div_rem(&d);
        if rem.is_zero() {
            if quot != d {
                large.push(quot);
            }
            small.push(d.clone());
        }
        d = d + T::one();
    }
    small.extend(large.into_iter().rev());
    small
}

/// Same result set as [`enumerate_bruteforce`], visiting only the candidate
/// moduli `b = q(a²+1)/t`.
pub fn enumerate_lemma1<T: Int + Ord>(
    target: &TargetValue<T>,
    b_max: u64,
) -> Result<Vec<ModulusHit<T>>> {
    check_target(target)?;
    let q = target.q().clone();
    let bound = from_u64::<T>(b_max);
    let hits = (0..b_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let a = from_u64::<T>(a);
            let m = a.clone() * a.clone() + T::one();
            let qm = q.clone() * m.clone();
            divisors(&m)
                .into_iter()
                .filter(|t| t.gcd(&q).is_one())
                .filter_map(|t| {
                    let b = qm.clone() / t;
                    if b > bound || b <= a {
                        return None;
                    }
                    hit_if_match(a.clone(), b, target)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(sort_hits(hits))
}

/// One decade `[10^d, 10^(d+1))` of moduli counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecadeRow {
    pub decade: u32,
    pub all_moduli: usize,
    pub generated_moduli: usize,
    pub cumulative_all: usize,
    pub cumulative_generated: usize,
}

/// Distinct moduli per decade: all hits versus the generated sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DensityReport {
    pub rows: Vec<DecadeRow>,
}

fn decade_of<T: Int>(b: &T) -> u32 {
    b.to_string().trim_start_matches('-').len() as u32 - 1
}

impl DensityReport {
    pub fn new<T: Int + Ord>(hits: &[ModulusHit<T>], generated: &[GeneratedTerm<T>]) -> Self {
        let all: BTreeSet<&T> = hits.iter().map(|h| &h.b).collect();
        let gen: BTreeSet<&T> = generated.iter().map(|g| &g.b3).collect();
        let Some(top) = all.iter().chain(gen.iter()).map(|b| decade_of(*b)).max() else {
            return DensityReport::default();
        };
        let mut rows = Vec::new();
        let (mut cum_all, mut cum_gen) = (0, 0);
        for decade in 0..=top {
            let all_moduli = all.iter().filter(|b| decade_of(**b) == decade).count();
            let generated_moduli = gen.iter().filter(|b| decade_of(**b) == decade).count();
            cum_all += all_moduli;
            cum_gen += generated_moduli;
            rows.push(DecadeRow {
                decade,
                all_moduli,
                generated_moduli,
                cumulative_all: cum_all,
                cumulative_generated: cum_gen,
            });
        }
        DensityReport { rows }
    }
}

impl fmt::Display for DensityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return Ok(());
        }
        writeln!(
            f,
            "{:<16} {:>10} {:>10} {:>10} {:>10}",
            "decade", "all", "generated", "cum_all", "cum_gen"
        )?;
        for row in &self.rows {
            let label = format!("[1e{}, 1e{})", row.decade, row.decade + 1);
            writeln!(
                f,
                "{:<16} {:>10} {:>10} {:>10} {:>10}",
                label,
                row.all_moduli,
                row.generated_moduli,
                row.cumulative_all,
                row.cumulative_generated
            )?;
        }
        Ok(())
    }
}

/// Text table of [`DensityReport`]; empty when both inputs are empty.
pub fn density_report<T: Int + Ord>(
    hits: &[ModulusHit<T>],
    generated: &[GeneratedTerm<T>],
) -> String {
    DensityReport::new(hits, generated).to_string()
}
