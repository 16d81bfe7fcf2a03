use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::cayley::{quotient, relative_girth_with, Girth};
use crate::error::{Error, Result};
use crate::parallel::EnumOptions;
use crate::presentation::{parse_words, GroupSpec};
use crate::saw::{count_bridges, count_saws, CountsTable};
use crate::scalar::Real;

use super::bracket::MuBracket;

/// Quotients `base / ⟨⟨template(m)⟩⟩`, where the template is a
/// comma-separated relator list in the base's generator names with the
/// parameter written as the exponent `^m` (or `^-m`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFamily {
    pub base: GroupSpec,
    pub template: String,
}

impl QuotientFamily {
    pub fn new(base: GroupSpec, template: impl Into<String>) -> Result<Self> {
        let template = template.into();
        if !template.contains("^m") && !template.contains("^-m") {
            return Err(Error::InvalidSpec(format!(
                "relator template `{template}` has no `^m` exponent"
            )));
        }
        Ok(QuotientFamily { base, template })
    }

    pub fn relators(&self, m: u64) -> String {
        self.template
            .replace("^-m", &format!("^-{m}"))
            .replace("^m", &format!("^{m}"))
    }

    pub fn member(&self, m: u64) -> Result<GroupSpec> {
        let words = parse_words(&self.relators(m), &self.base.generator_names())?;
        quotient(&self.base, &words)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalityRow<F> {
    pub m: u64,
    pub group: String,
    pub rel_girth: Girth,
    /// Largest `n ≤ N` with `c_k` equal to the base's for all `k ≤ n`.
    pub eq_horizon: usize,
    pub bracket: MuBracket<F>,
    pub base_bracket: MuBracket<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalityTable<F> {
    pub base: String,
    pub template: String,
    pub max_len: usize,
    pub girth_cutoff: usize,
    pub rows: Vec<LocalityRow<F>>,
}

fn girth_cell(g: Girth) -> String {
    match g {
        Girth::Finite(g) => g.to_string(),
        Girth::AboveCutoff(l) => format!(">{l}"),
    }
}

fn girth_json(g: Girth) -> Value {
    match g {
        Girth::Finite(g) => json!(g),
        Girth::AboveCutoff(l) => json!(format!(">{l}")),
    }
}

impl<F: Real> LocalityTable<F> {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,rel_girth,eq_horizon,lower_m,upper_m,lower_base,upper_base\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.m,
                girth_cell(r.rel_girth),
                r.eq_horizon,
                r.bracket.lower,
                r.bracket.upper,
                r.base_bracket.lower,
                r.base_bracket.upper
            );
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "m": r.m,
                    "group": r.group,
                    "rel_girth": girth_json(r.rel_girth),
                    "eq_horizon": r.eq_horizon,
                    "lower_m": r.bracket.lower.to_f64(),
                    "upper_m": r.bracket.upper.to_f64(),
                    "lower_base": r.base_bracket.lower.to_f64(),
                    "upper_base": r.base_bracket.upper.to_f64(),
                })
            })
            .collect();
        json!({
            "base": self.base,
            "relator": self.template,
            "N": self.max_len,
            "girth_cutoff": self.girth_cutoff,
            "rows": rows,
        })
    }
}

fn counts(spec: &GroupSpec, max_len: usize, opts: &EnumOptions) -> Result<CountsTable<BigUint>> {
    if spec.distinguished().is_some() {
        count_bridges(spec, max_len, opts)
    } else {
        count_saws(spec, max_len, opts)
    }
}

/// Counts the base and each family member to `max_len`, and records the
/// relative girth (searched to `girth_cutoff`), the count equality horizon
/// and both brackets.
pub fn locality_experiment<F: Real>(
    family: &QuotientFamily,
    params: &[u64],
    max_len: usize,
    girth_cutoff: usize,
    opts: &EnumOptions,
) -> Result<LocalityTable<F>> {
    let base_counts = counts(&family.base, max_len, opts)?;
    let base_bracket = MuBracket::from_table(&base_counts)?;
    let mut rows = Vec::new();
    for &m in params {
        let spec = family.member(m)?;
        let girth = relative_girth_with(&family.base, &spec, girth_cutoff, opts)?;
        let t = counts(&spec, max_len, opts)?;
        let eq_horizon = (1..=max_len)
            .take_while(|&n| t.c(n) == base_counts.c(n))
            .last()
            .unwrap_or(0);
        rows.push(LocalityRow {
            m,
            group: spec.render(),
            rel_girth: girth.value,
            eq_horizon,
            bracket: MuBracket::from_table(&t)?,
            base_bracket: base_bracket.clone(),
        });
    }
    Ok(LocalityTable {
        base: family.base.render(),
        template: family.template.clone(),
        max_len,
        girth_cutoff,
        rows,
    })
}
