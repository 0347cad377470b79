//! Exact normalized Dedekind sums `S(a,b) = 12 s(a,b)`.
//!
//! The arithmetic is generic over the integer backend ([`num::Int`]); the
//! aliases at the crate root fix it to [`BigInt`], which is what the
//! constant-value sequences need since `b3` grows like `n q⁵ r1⁴`.
//!
//! ```
//! use dedekind::{decompose, generate_term, sum_fast, BigInt, Pair};
//!
//! let seed = Pair::new(BigInt::from(2), BigInt::from(7)).unwrap();
//! assert_eq!(sum_fast(&seed).to_string(), "6/7");
//!
//! let d = decompose(&seed).unwrap();
//! let term = generate_term(&d, &BigInt::from(1)).unwrap();
//! assert_eq!(term.b3.to_string(), "9366455");
//! ```

pub mod cfrac;
pub mod error;
pub mod generator;
pub mod num;
pub mod rational;
pub mod search;
pub mod structure;
pub mod sums;

pub use num_bigint::BigInt;

pub use crate::cfrac::{convergents, filter_by_value};
pub use crate::error::{Error, Result};
pub use crate::generator::{
    forward_differences, generate_sequence, generate_term, leading_coefficient,
    quartic_structure_check, shift_identity_check, verify_term, ShiftCheck,
};
pub use crate::num::Int;
pub use crate::rational::{
    decimal_approx, mod_inverse, parse_int, parse_rational, rat_add, rat_div, rat_make, rat_mul,
    rat_sub,
};
pub use crate::search::{
    density_report, divisors, enumerate_bruteforce, enumerate_lemma1, DecadeRow, DensityReport,
};
pub use crate::structure::{decompose, lemma1_modulus, lemma1_t, lemma2_rhs, theorem2_rhs};
pub use crate::sums::{
    dedekind_sum, inverse_arg_invariance_check, is_integer_value, negate_arg, reciprocity_rhs,
    sawtooth, sum_definitional, sum_fast,
};

pub type Rational = num_rational::Ratio<BigInt>;
pub type Pair = sums::Pair<BigInt>;
pub type TargetValue = structure::TargetValue<BigInt>;
pub type Decomposition = structure::Decomposition<BigInt>;
pub type GeneratedTerm = generator::GeneratedTerm<BigInt>;
pub type QuarticCertificate = generator::QuarticCertificate<BigInt>;
pub type ModulusHit = search::ModulusHit<BigInt>;
pub type PeriodicCf = cfrac::PeriodicCf<BigInt>;
pub type Convergent = cfrac::Convergent<BigInt>;
