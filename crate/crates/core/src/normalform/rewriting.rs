use crate::error::{Error, Result};
use crate::presentation::{GeneratorSymbol, Word};

/// A string rewriting system over generator symbols, with free
/// cancellation `x x^-1 -> 1` applied implicitly.
///
/// Every rule must strictly decrease its word in shortlex order, which
/// makes reduction terminate. Confluence is the caller's responsibility;
/// with a non-confluent system two equal elements may get different forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewritingSystem {
    rules: Vec<(Word, Word)>,
}

fn shortlex_less(a: &Word, b: &Word) -> bool {
    (a.len(), a) < (b.len(), b)
}

impl RewritingSystem {
    pub fn new(rules: Vec<(Word, Word)>) -> Result<Self> {
        for (lhs, rhs) in &rules {
            if lhs.is_empty() || !shortlex_less(rhs, lhs) {
                return Err(Error::InvalidSpec(format!(
                    "rewriting rule {lhs} -> {rhs} is not shortlex-decreasing"
                )));
            }
        }
        Ok(RewritingSystem { rules })
    }

    pub fn rules(&self) -> &[(Word, Word)] {
        &self.rules
    }

    pub fn max_index(&self) -> Option<usize> {
        self.rules
            .iter()
            .flat_map(|(l, r)| [l.max_index(), r.max_index()])
            .flatten()
            .max()
    }

    pub fn reduce(&self, mut w: Vec<GeneratorSymbol>) -> Vec<GeneratorSymbol> {
        loop {
            w = Word::new(w).freely_reduced().into_symbols();
            let hit = (0..w.len()).find_map(|i| {
                self.rules.iter().find_map(|(lhs, rhs)| {
                    w[i..].starts_with(lhs.symbols()).then_some((i, lhs.len(), rhs))
                })
            });
            match hit {
                Some((i, len, rhs)) => {
                    w.splice(i..i + len, rhs.symbols().iter().copied());
                }
                None => return w,
            }
        }
    }
}
