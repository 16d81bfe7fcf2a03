//! Bounded certificate for class 𝒢: the distinguished generator has no
//! short trivial power and every short identity word has zero signed
//! exponent in it. A PASS is evidence up to the cutoff, not a proof.

use serde::Serialize;

use crate::cayley::identity_words;
use crate::error::{Error, Result};
use crate::normalform::normalizer_for;
use crate::parallel::EnumOptions;

use super::spec::GroupSpec;
use super::word::Word;

pub const DEFAULT_CLASS_CUTOFF: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub verdict: Verdict,
    pub cutoff: usize,
    /// Rendered counterexamples: trivial powers of the distinguished
    /// generator and identity words with non-zero exponent in it.
    pub witnesses: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn validate_class_g(spec: &GroupSpec, cutoff: usize) -> Result<ValidationReport> {
    validate_class_g_with(spec, cutoff, &EnumOptions::default())
}

pub fn validate_class_g_with(
    spec: &GroupSpec,
    cutoff: usize,
    opts: &EnumOptions,
) -> Result<ValidationReport> {
    let s1 = spec.distinguished().ok_or(Error::NoDistinguished)?;
    let nf = normalizer_for(spec)?;
    let names = spec.generator_names();
    let mut witnesses = Vec::new();

    let mut e = nf.identity();
    for k in 1..=cutoff {
        e = nf.step(&e, super::GeneratorSymbol::pos(s1));
        if nf.is_identity(&e) {
            witnesses.push(Word::power(s1, k as i64).render(&names));
            break;
        }
    }
    for w in identity_words(&nf, cutoff, opts) {
        if w.exponent_sum(s1) != 0 {
            witnesses.push(w.render(&names));
        }
    }
    let verdict = if witnesses.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(ValidationReport {
        verdict,
        cutoff,
        witnesses,
    })
}
