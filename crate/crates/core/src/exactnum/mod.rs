//! Exact arithmetic in cyclotomic fields.

mod arith;
mod coeff;
mod cyclotomic;
mod interval;
mod matrix;
mod table;
mod text;

pub use arith::{divisors, ext_gcd, gcd, lcm, mod_inverse, prime_factors, root_order, totient};
pub use cyclotomic::{conductor_cap, set_conductor_cap, Cyclotomic, DEFAULT_CONDUCTOR_CAP};
pub use interval::{pi_interval, root_embedding, ComplexInterval, RealInterval};
pub use matrix::CycMatrix;
pub use text::{decode_cyclotomic, encode_cyclotomic, to_triples, CycTriple};

pub(crate) use cyclotomic::check_conductor;

/// Arbitrary-precision rational numbers in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("galois exponent {k} is not coprime to {conductor}")]
    NotCoprime { k: i64, conductor: u32 },
    #[error("conductor must be positive, got {0}")]
    InvalidConductor(u64),
    #[error("conductor {conductor} exceeds cap {cap}")]
    ConductorCap { conductor: u64, cap: u32 },
    #[error("comparison requires real elements")]
    NotReal,
    #[error("could not separate values at {0} bits")]
    PrecisionExhausted(u32),
    #[error("malformed cyclotomic encoding: {0}")]
    Encoding(String),
}
