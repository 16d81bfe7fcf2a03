use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::parallel::EnumOptions;
use crate::presentation::GroupSpec;
use crate::saw::{count_bridges, count_saws, CountsTable};
use crate::scalar::{nth_root, Count, Real};

/// Rigorous bounds on the connective constant from finitely many counts:
/// `max_n b_n^{1/n} ≤ μ ≤ min_n c_n^{1/n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MuBracket<F> {
    pub group: String,
    pub max_len: usize,
    pub lower: F,
    /// Length attaining the lower bound; `None` when flagged.
    pub lower_n: Option<usize>,
    /// Set when no bridge counts were available and `lower` is the trivial 1.
    pub lower_flagged: bool,
    pub upper: F,
    pub upper_n: usize,
}

/// `min_{1 ≤ n ≤ N} c_n^{1/n}` and the first length attaining it.
pub fn mu_upper<C: Count, F: Real>(t: &CountsTable<C>) -> Result<(F, usize)> {
    if t.max_len() == 0 {
        return Err(Error::EmptyTable);
    }
    let mut best = (F::infinity(), 0);
    for n in 1..=t.max_len() {
        let r: F = nth_root(t.c(n), n);
        if r < best.0 {
            best = (r, n);
        }
    }
    Ok(best)
}

/// `max_{1 ≤ n ≤ N} b_n^{1/n}` and the first length attaining it.
pub fn mu_lower<C: Count, F: Real>(t: &CountsTable<C>) -> Result<(F, usize)> {
    if t.max_len() == 0 {
        return Err(Error::EmptyTable);
    }
    if !t.has_heights() {
        return Err(Error::MissingHeights);
    }
    let mut best = (F::neg_infinity(), 0);
    for n in 1..=t.max_len() {
        let r: F = nth_root(&t.b(n).unwrap(), n);
        if r > best.0 {
            best = (r, n);
        }
    }
    Ok(best)
}

impl<F: Real> MuBracket<F> {
    /// Bracket from a table; without bridge counts the lower bound is 1 and flagged.
    pub fn from_table<C: Count>(t: &CountsTable<C>) -> Result<Self> {
        let (upper, upper_n) = mu_upper(t)?;
        let (lower, lower_n, lower_flagged) = if t.has_heights() {
            let (l, n) = mu_lower(t)?;
            (l, Some(n), false)
        } else {
            (F::one(), None, true)
        };
        Ok(MuBracket {
            group: t.group().to_string(),
            max_len: t.max_len(),
            lower,
            lower_n,
            lower_flagged,
            upper,
            upper_n,
        })
    }

    pub fn width(&self) -> F {
        self.upper - self.lower
    }

    pub fn contains(&self, x: F) -> bool {
        self.lower <= x && x <= self.upper
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "N": self.max_len,
            "lower": self.lower.to_f64(),
            "lower_n": self.lower_n,
            "lower_flagged": self.lower_flagged,
            "upper": self.upper.to_f64(),
            "upper_n": self.upper_n,
        })
    }
}

impl<F: Real> fmt::Display for MuBracket<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)?;
        if self.lower_flagged {
            write!(f, " (lower bound trivial)")?;
        }
        Ok(())
    }
}

/// Counts the group to length `max_len` and brackets its connective
/// constant. Bridges are counted when the spec has a distinguished
/// generator.
pub fn bracket<F: Real>(spec: &GroupSpec, max_len: usize, opts: &EnumOptions) -> Result<MuBracket<F>> {
    let t: CountsTable<num_bigint::BigUint> = if spec.distinguished().is_some() {
        count_bridges(spec, max_len, opts)?
    } else {
        count_saws(spec, max_len, opts)?
    };
    MuBracket::from_table(&t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: &str) -> GroupSpec {
        GroupSpec::parse(t).unwrap()
    }

    #[test]
    fn line() {
        let b: MuBracket<f64> = bracket(&spec("Z!"), 20, &EnumOptions::with_threads(2)).unwrap();
        assert_eq!(b.lower, 1.0);
        assert_eq!(b.upper_n, 20);
        assert!((b.upper - 2f64.powf(0.05)).abs() < 1e-12);
        assert!((b.upper - 1.0353).abs() < 1e-4);
    }

    #[test]
    fn free_group_upper() {
        let b: MuBracket<f64> = bracket(&spec("F2"), 10, &EnumOptions::with_threads(2)).unwrap();
        assert!(!b.lower_flagged && b.lower > 2.0);
        assert!((b.upper - (4.0 * 3f64.powi(9)).powf(0.1)).abs() < 1e-12);
        assert!((b.upper - 3.087_558_026_894_282).abs() < 1e-12);
    }

    #[test]
    fn single_precision() {
        let b: MuBracket<f32> = bracket(&spec("Z!^2"), 6, &EnumOptions::with_threads(2)).unwrap();
        assert!(b.lower <= b.upper);
        let flagged: MuBracket<f64> =
            bracket(&spec("Z[6] x Z[6]"), 4, &EnumOptions::with_threads(1)).unwrap();
        assert!(flagged.lower_flagged && flagged.lower == 1.0);
    }

    #[test]
    fn empty_table() {
        let t: CountsTable<u64> = count_saws(&spec("Z"), 0, &EnumOptions::with_threads(1)).unwrap();
        assert_eq!(mu_upper::<_, f64>(&t), Err(Error::EmptyTable));
        let t: CountsTable<u64> = count_saws(&spec("Z"), 3, &EnumOptions::with_threads(1)).unwrap();
        assert_eq!(mu_lower::<_, f64>(&t), Err(Error::MissingHeights));
    }
}
