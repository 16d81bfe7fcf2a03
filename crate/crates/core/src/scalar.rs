//! Scalar abstractions.
//!
//! Walk counts are exact non-negative integers ([`Count`]); growth-rate
//! estimates are binary floating point ([`Real`]). Tables and brackets are
//! generic over both so that callers can pick `u64`/`u128` for speed or
//! [`BigUint`] for headroom, and `f32`/`f64` for the estimates.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive, One, ToPrimitive, Zero};

/// Exact count of walks.
///
/// Addition of counts goes through [`Count::add_u64`], which panics on
/// fixed-width overflow rather than wrapping. Products are always formed
/// after promotion to [`BigUint`].
pub trait Count:
    Clone + Ord + Hash + Debug + Display + FromStr + Zero + One + Send + Sync + 'static
{
    fn from_u64(n: u64) -> Self;

    fn to_biguint(&self) -> BigUint;

    fn add_u64(&mut self, n: u64);

    fn checked_sum(&self, other: &Self) -> Self;

    /// Natural logarithm; `-inf` for zero.
    fn ln(&self) -> f64 {
        ln_biguint(&self.to_biguint())
    }
}

macro_rules! impl_count_prim {
    ($($t:ty),*) => {$(
        impl Count for $t {
            fn from_u64(n: u64) -> Self {
                <$t>::try_from(n).expect("count does not fit the fixed-width type")
            }

            fn to_biguint(&self) -> BigUint {
                BigUint::from(*self)
            }

            fn add_u64(&mut self, n: u64) {
                *self = self
                    .checked_add(<$t as Count>::from_u64(n))
                    .expect("fixed-width count overflow; use BigUint tables");
            }

            fn checked_sum(&self, other: &Self) -> Self {
                self.checked_add(*other)
                    .expect("fixed-width count overflow; use BigUint tables")
            }
        }
    )*};
}

impl_count_prim!(u64, u128);

impl Count for BigUint {
    fn from_u64(n: u64) -> Self {
        BigUint::from(n)
    }

    fn to_biguint(&self) -> BigUint {
        self.clone()
    }

    fn add_u64(&mut self, n: u64) {
        *self += n;
    }

    fn checked_sum(&self, other: &Self) -> Self {
        self + other
    }
}

pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("finite below 2^1000").ln()
    } else {
        let shift = bits - 64;
        let top = (x >> shift).to_f64().expect("64-bit mantissa");
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Real scalar used for n-th roots and the Hammersley-Welsh statistic.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("every f64 maps into a float type")
    }
}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

/// `count^(1/n)` computed as `exp(ln(count) / n)`.
pub fn nth_root<C: Count, F: Real>(count: &C, n: usize) -> F {
    debug_assert!(n > 0);
    (F::from_f64_lossy(count.ln()) / F::from_usize(n).unwrap()).exp()
}
