use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A generator `t_j` or its inverse.
///
/// Ordering is by generator index first, generator before inverse, so
/// `a < a^-1 < b < b^-1 < ...`; words compare lexicographically under it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    pub index: usize,
    pub sign: Sign,
}

impl GeneratorSymbol {
    pub const fn new(index: usize, sign: Sign) -> Self {
        GeneratorSymbol { index, sign }
    }

    pub const fn pos(index: usize) -> Self {
        GeneratorSymbol::new(index, Sign::Plus)
    }

    pub const fn neg(index: usize) -> Self {
        GeneratorSymbol::new(index, Sign::Minus)
    }

    pub fn inverse(self) -> Self {
        GeneratorSymbol::new(self.index, self.sign.flip())
    }

    /// Step label used by the enumerators: `2 * index + (0 | 1)`.
    pub fn label(self) -> usize {
        2 * self.index + usize::from(self.sign == Sign::Minus)
    }

    pub fn from_label(label: usize) -> Self {
        let sign = if label.is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
        GeneratorSymbol::new(label / 2, sign)
    }

    pub fn shifted(self, offset: usize) -> Self {
        GeneratorSymbol::new(self.index + offset, self.sign)
    }
}

/// A finite word in generators and inverses. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<GeneratorSymbol>);

impl Word {
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `g^k` for a single generator; negative `k` gives inverse letters.
    pub fn power(index: usize, k: i64) -> Self {
        let sym = if k >= 0 {
            GeneratorSymbol::pos(index)
        } else {
            GeneratorSymbol::neg(index)
        };
        Word(vec![sym; k.unsigned_abs() as usize])
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(x: usize, y: usize) -> Self {
        Word(vec![
            GeneratorSymbol::pos(x),
            GeneratorSymbol::pos(y),
            GeneratorSymbol::neg(x),
            GeneratorSymbol::neg(y),
        ])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<GeneratorSymbol> {
        self.0
    }

    pub fn push(&mut self, s: GeneratorSymbol) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    pub fn shifted(&self, offset: usize) -> Word {
        Word(self.0.iter().map(|s| s.shifted(offset)).collect())
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(|s| s.index).max()
    }

    /// Signed exponent sum of generator `index`.
    pub fn exponent_sum(&self, index: usize) -> i64 {
        self.0
            .iter()
            .filter(|s| s.index == index)
            .map(|s| s.sign.as_i64())
            .sum()
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<GeneratorSymbol> = Vec::with_capacity(self.0.len());
        for &s in &self.0 {
            if out.last() == Some(&s.inverse()) {
                out.pop();
            } else {
                out.push(s);
            }
        }
        Word(out)
    }

    /// Free reduction followed by cancellation of inverse letters at the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.freely_reduced().0;
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverse() {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }

    /// Render with generator names, collapsing runs into powers:
    /// `a a b^-1` becomes `a^2 b^-1`. The empty word renders as `""`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == s {
                j += 1;
            }
            let run = (j - i) as i64 * s.sign.as_i64();
            let name = names
                .get(s.index)
                .cloned()
                .unwrap_or_else(|| format!("g{}", s.index));
            if run == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{run}"));
            }
            i = j;
        }
        parts.join(" ")
    }
}

impl From<Vec<GeneratorSymbol>> for Word {
    fn from(v: Vec<GeneratorSymbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<GeneratorSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GeneratorSymbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}
