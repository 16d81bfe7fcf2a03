//! Word-problem solvers for the supported group catalog.
//!
//! A [`Normalizer`] maps words to canonical [`Element`]s, so that two words
//! name the same vertex of the Cayley graph exactly when their elements are
//! equal. Supported strategies:
//!
//! * free groups: freely reduced words;
//! * free abelian groups: exponent vectors;
//! * cyclic groups: residues;
//! * abelian presentations (all commutators among the relators): exponent
//!   vectors reduced modulo the Hermite basis of the relation lattice;
//! * direct products: tuples of component elements;
//! * free products: alternating syllables, each a non-trivial element of
//!   its factor;
//! * user-supplied rewriting systems.
//!
//! # Element keys
//!
//! [`Element::key`] is a full canonical byte serialization. All integers
//! are little-endian; lengths are `u32`.
//!
//! | tag    | strategy        | payload                                                  |
//! |--------|-----------------|----------------------------------------------------------|
//! | `0x01` | reduced word    | `len`, then per symbol `index: u32`, `sign: u8` (0 = +1, 1 = -1) |
//! | `0x02` | integer vector  | `len`, then `len` × `i64`                                |
//! | `0x03` | residue         | `u64`                                                    |
//! | `0x04` | direct product  | `count`, then per component `len: u32` + component key   |
//! | `0x05` | free product    | `count`, then per syllable `factor: u32`, `len: u32` + key |
//! | `0x06` | rewritten word  | as `0x01`                                                |

mod lattice;
mod rewriting;

use crate::error::{Error, Result};
use crate::presentation::{
    has_all_commutators, ExponentMatrix, GeneratorSymbol, GroupExpr, GroupSpec, NormalizerHint,
    Sign, Word,
};

pub use lattice::AbelianLattice;
pub use rewriting::RewritingSystem;

/// Canonical form of a group element under one normalizer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Reduced(Vec<GeneratorSymbol>),
    Vector(Vec<i64>),
    Residue(u64),
    Tuple(Vec<Element>),
    Syllables(Vec<(usize, Element)>),
    Rewritten(Vec<GeneratorSymbol>),
}

impl Element {
    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.write_key(&mut out);
        out
    }

    fn write_key(&self, out: &mut Vec<u8>) {
        fn put_u32(out: &mut Vec<u8>, x: usize) {
            out.extend_from_slice(&(x as u32).to_le_bytes());
        }
        fn put_symbols(out: &mut Vec<u8>, syms: &[GeneratorSymbol]) {
            put_u32(out, syms.len());
            for s in syms {
                put_u32(out, s.index);
                out.push(u8::from(s.sign == Sign::Minus));
            }
        }
        match self {
            Element::Reduced(w) => {
                out.push(0x01);
                put_symbols(out, w);
            }
            Element::Vector(v) => {
                out.push(0x02);
                put_u32(out, v.len());
                for x in v {
                    out.extend_from_slice(&x.to_le_bytes());
                }
            }
            Element::Residue(r) => {
                out.push(0x03);
                out.extend_from_slice(&r.to_le_bytes());
            }
            Element::Tuple(parts) => {
                out.push(0x04);
                put_u32(out, parts.len());
                for p in parts {
                    let k = p.key();
                    put_u32(out, k.len());
                    out.extend_from_slice(&k);
                }
            }
            Element::Syllables(syl) => {
                out.push(0x05);
                put_u32(out, syl.len());
                for (f, e) in syl {
                    put_u32(out, *f);
                    let k = e.key();
                    put_u32(out, k.len());
                    out.extend_from_slice(&k);
                }
            }
            Element::Rewritten(w) => {
                out.push(0x06);
                put_symbols(out, w);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Strategy {
    Free,
    FreeAbelian,
    Cyclic(u64),
    Lattice(AbelianLattice),
    Direct(Vec<Normalizer>),
    FreeProduct(Vec<Normalizer>),
    Rewriting(RewritingSystem),
}

/// Exact word-problem solver for one group. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalizer {
    strategy: Strategy,
    rank: usize,
    /// For product strategies: generator -> (factor, local generator).
    owner: Vec<(usize, usize)>,
    offsets: Vec<usize>,
}

pub fn normalizer_for(spec: &GroupSpec) -> Result<Normalizer> {
    Normalizer::from_expr(spec.expr())
}

fn flatten<'a>(expr: &'a GroupExpr, direct: bool, out: &mut Vec<&'a GroupExpr>) {
    match expr {
        GroupExpr::DirectProduct(a, b) if direct => {
            flatten(a, direct, out);
            flatten(b, direct, out);
        }
        GroupExpr::FreeProduct(a, b) if !direct => {
            flatten(a, direct, out);
            flatten(b, direct, out);
        }
        other => out.push(other),
    }
}

impl Normalizer {
    fn leaf(strategy: Strategy, rank: usize) -> Self {
        Normalizer {
            strategy,
            rank,
            owner: Vec::new(),
            offsets: Vec::new(),
        }
    }

    fn product(factors: Vec<Normalizer>, direct: bool) -> Self {
        let mut owner = Vec::new();
        let mut offsets = Vec::new();
        let mut offset = 0;
        for (f, nf) in factors.iter().enumerate() {
            offsets.push(offset);
            for local in 0..nf.rank {
                owner.push((f, local));
            }
            offset += nf.rank;
        }
        let strategy = if direct {
            Strategy::Direct(factors)
        } else {
            Strategy::FreeProduct(factors)
        };
        Normalizer {
            strategy,
            rank: offset,
            owner,
            offsets,
        }
    }

    /// Free abelian group modulo the given relation rows.
    pub fn abelian(rows: &[Vec<i64>], rank: usize) -> Self {
        Normalizer::leaf(Strategy::Lattice(AbelianLattice::from_rows(rows, rank)), rank)
    }

    pub fn from_expr(expr: &GroupExpr) -> Result<Self> {
        Ok(match expr {
            GroupExpr::FreeGroup(k) => Normalizer::leaf(Strategy::Free, *k),
            GroupExpr::FreeAbelian(k) => Normalizer::leaf(Strategy::FreeAbelian, *k),
            GroupExpr::Cyclic(m) => Normalizer::leaf(Strategy::Cyclic(*m), 1),
            GroupExpr::DirectProduct(..) | GroupExpr::FreeProduct(..) => {
                let direct = matches!(expr, GroupExpr::DirectProduct(..));
                let mut leaves = Vec::new();
                flatten(expr, direct, &mut leaves);
                let factors = leaves
                    .into_iter()
                    .map(Normalizer::from_expr)
                    .collect::<Result<Vec<_>>>()?;
                Normalizer::product(factors, direct)
            }
            GroupExpr::Presented(p) => {
                let rank = p.names.len();
                match &p.hint {
                    NormalizerHint::Rewriting(rs) => {
                        if let Some(i) = rs.max_index() {
                            if i >= rank {
                                return Err(Error::SymbolOutOfRange { index: i, rank });
                            }
                        }
                        Normalizer::leaf(Strategy::Rewriting(rs.clone()), rank)
                    }
                    NormalizerHint::Auto => Normalizer::recognise(rank, &p.relators)?,
                }
            }
        })
    }

    fn recognise(rank: usize, relators: &[Word]) -> Result<Self> {
        let relators: Vec<Word> = relators
            .iter()
            .map(Word::freely_reduced)
            .filter(|w| !w.is_empty())
            .collect();
        if relators.is_empty() {
            return Ok(Normalizer::leaf(Strategy::Free, rank));
        }
        if has_all_commutators(rank, &relators) {
            let rows: Vec<Vec<i64>> = relators
                .iter()
                .map(|r| ExponentMatrix::row_of(r, rank))
                .collect();
            return Ok(Normalizer::abelian(&rows, rank));
        }
        // Every relator a power of one generator: a free product of cyclics.
        let mut orders = vec![0u64; rank];
        for r in &relators {
            let s = r.symbols();
            if s.iter().any(|x| *x != s[0]) {
                return Err(Error::UnsupportedPresentation(
                    "relators are neither all commutators nor all generator powers; \
                     attach a rewriting system"
                        .into(),
                ));
            }
            let k = s.len() as u64;
            let o = &mut orders[s[0].index];
            *o = num_integer::gcd(*o, k);
        }
        let factors = orders
            .into_iter()
            .map(|o| match o {
                0 => Normalizer::leaf(Strategy::FreeAbelian, 1),
                o => Normalizer::leaf(Strategy::Cyclic(o), 1),
            })
            .collect();
        Ok(Normalizer::product(factors, false))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn strategy(&self) -> &'static str {
        match self.strategy {
            Strategy::Free => "free",
            Strategy::FreeAbelian => "free-abelian",
            Strategy::Cyclic(_) => "cyclic",
            Strategy::Lattice(_) => "abelian-lattice",
            Strategy::Direct(_) => "direct-product",
            Strategy::FreeProduct(_) => "free-product",
            Strategy::Rewriting(_) => "rewriting",
        }
    }

    pub fn identity(&self) -> Element {
        match &self.strategy {
            Strategy::Free => Element::Reduced(Vec::new()),
            Strategy::FreeAbelian | Strategy::Lattice(_) => Element::Vector(vec![0; self.rank]),
            Strategy::Cyclic(_) => Element::Residue(0),
            Strategy::Direct(fs) => Element::Tuple(fs.iter().map(Normalizer::identity).collect()),
            Strategy::FreeProduct(_) => Element::Syllables(Vec::new()),
            Strategy::Rewriting(_) => Element::Rewritten(Vec::new()),
        }
    }

    pub fn is_identity(&self, e: &Element) -> bool {
        match (&self.strategy, e) {
            (Strategy::Direct(fs), Element::Tuple(parts)) => {
                fs.iter().zip(parts).all(|(f, p)| f.is_identity(p))
            }
            _ => *e == self.identity(),
        }
    }

    fn check(&self, s: GeneratorSymbol) -> Result<()> {
        if s.index >= self.rank {
            Err(Error::SymbolOutOfRange {
                index: s.index,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Canonical form of `e · s`.
    pub fn multiply(&self, e: &Element, s: GeneratorSymbol) -> Result<Element> {
        self.check(s)?;
        Ok(self.step(e, s))
    }

    /// Unchecked [`multiply`](Self::multiply) for enumeration loops.
    pub(crate) fn step(&self, e: &Element, s: GeneratorSymbol) -> Element {
        debug_assert!(s.index < self.rank);
        match (&self.strategy, e) {
            (Strategy::Free, Element::Reduced(w)) => {
                let mut w = w.clone();
                if w.last() == Some(&s.inverse()) {
                    w.pop();
                } else {
                    w.push(s);
                }
                Element::Reduced(w)
            }
            (Strategy::FreeAbelian, Element::Vector(v)) => {
                let mut v = v.clone();
                v[s.index] += s.sign.as_i64();
                Element::Vector(v)
            }
            (Strategy::Lattice(l), Element::Vector(v)) => {
                let mut v = v.clone();
                v[s.index] += s.sign.as_i64();
                l.reduce(&mut v);
                Element::Vector(v)
            }
            (Strategy::Cyclic(m), Element::Residue(r)) => Element::Residue(match s.sign {
                Sign::Plus => (r + 1) % m,
                Sign::Minus => (r + m - 1) % m,
            }),
            (Strategy::Direct(fs), Element::Tuple(parts)) => {
                let (f, local) = self.owner[s.index];
                let mut parts = parts.clone();
                parts[f] = fs[f].step(&parts[f], GeneratorSymbol::new(local, s.sign));
                Element::Tuple(parts)
            }
            (Strategy::FreeProduct(fs), Element::Syllables(syl)) => {
                let (f, local) = self.owner[s.index];
                let ls = GeneratorSymbol::new(local, s.sign);
                let nf = &fs[f];
                let mut syl = syl.clone();
                match syl.last_mut() {
                    Some((g, last)) if *g == f => {
                        let next = nf.step(last, ls);
                        if nf.is_identity(&next) {
                            syl.pop();
                        } else {
                            *last = next;
                        }
                    }
                    _ => {
                        let next = nf.step(&nf.identity(), ls);
                        if !nf.is_identity(&next) {
                            syl.push((f, next));
                        }
                    }
                }
                Element::Syllables(syl)
            }
            (Strategy::Rewriting(rs), Element::Rewritten(w)) => {
                let mut w = w.clone();
                w.push(s);
                Element::Rewritten(rs.reduce(w))
            }
            (_, other) => panic!("element {other:?} does not belong to a {} normalizer", self.strategy()),
        }
    }

    pub fn normalize(&self, w: &Word) -> Result<Element> {
        let mut e = self.identity();
        for &s in w.symbols() {
            e = self.multiply(&e, s)?;
        }
        Ok(e)
    }

    /// A word representing `e`; `normalize(word_of(e)) == e`.
    pub fn word_of(&self, e: &Element) -> Word {
        match (&self.strategy, e) {
            (Strategy::Free, Element::Reduced(w)) | (Strategy::Rewriting(_), Element::Rewritten(w)) => {
                Word::new(w.clone())
            }
            (Strategy::FreeAbelian | Strategy::Lattice(_), Element::Vector(v)) => v
                .iter()
                .enumerate()
                .fold(Word::empty(), |acc, (i, &x)| acc.concat(&Word::power(i, x))),
            (Strategy::Cyclic(_), Element::Residue(r)) => Word::power(0, *r as i64),
            (Strategy::Direct(fs), Element::Tuple(parts)) => fs
                .iter()
                .zip(parts)
                .enumerate()
                .fold(Word::empty(), |acc, (i, (f, p))| {
                    acc.concat(&f.word_of(p).shifted(self.offsets[i]))
                }),
            (Strategy::FreeProduct(fs), Element::Syllables(syl)) => {
                syl.iter().fold(Word::empty(), |acc, (f, p)| {
                    acc.concat(&fs[*f].word_of(p).shifted(self.offsets[*f]))
                })
            }
            (_, other) => panic!("element {other:?} does not belong to a {} normalizer", self.strategy()),
        }
    }

    /// Component normalizers of a product strategy, with generator offsets.
    pub fn factors(&self) -> Vec<(&Normalizer, usize)> {
        match &self.strategy {
            Strategy::Direct(fs) | Strategy::FreeProduct(fs) => {
                fs.iter().zip(self.offsets.iter().copied()).collect()
            }
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(text: &str) -> Normalizer {
        normalizer_for(&GroupSpec::parse(text).unwrap()).unwrap()
    }

    fn sym(i: usize, plus: bool) -> GeneratorSymbol {
        if plus {
            GeneratorSymbol::pos(i)
        } else {
            GeneratorSymbol::neg(i)
        }
    }

    #[test]
    fn strategies_for_catalog() {
        assert_eq!(nf("Z^2").strategy(), "free-abelian");
        let n = nf("Z! x Z[6]");
        assert_eq!(n.strategy(), "direct-product");
        assert_eq!(n.factors().len(), 2);
        assert_eq!(nf("Z! * Z[5]").strategy(), "free-product");
        assert_eq!(nf("<a!,b | a b a^-1 b^-1>").strategy(), "abelian-lattice");
        assert_eq!(nf("<a!,b | b^5>").strategy(), "free-product");
    }

    #[test]
    fn unsupported_presentation() {
        let spec = GroupSpec::parse("<a!,b | a b a b^-1>").unwrap();
        assert!(matches!(
            normalizer_for(&spec),
            Err(Error::UnsupportedPresentation(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let f2 = nf("F2");
        let w = Word::new(vec![sym(0, true), sym(1, true), sym(1, false)]);
        assert_eq!(f2.normalize(&w).unwrap(), Element::Reduced(vec![sym(0, true)]));

        let z2 = nf("Z^2");
        let w = Word::new(vec![sym(0, true), sym(1, true), sym(0, false), sym(1, true)]);
        assert_eq!(z2.normalize(&w).unwrap(), Element::Vector(vec![0, 2]));

        let zz6 = nf("Z! x Z[6]");
        let w = Word::power(1, 7).concat(&Word::power(0, 1));
        assert_eq!(
            zz6.normalize(&w).unwrap(),
            Element::Tuple(vec![Element::Vector(vec![1]), Element::Residue(1)])
        );
    }

    #[test]
    fn normalize_out_of_range() {
        assert!(matches!(
            nf("Z^2").normalize(&Word::power(2, 1)),
            Err(Error::SymbolOutOfRange { index: 2, rank: 2 })
        ));
    }

    #[test]
    fn multiply_examples() {
        let z2 = nf("Z^2");
        let e = Element::Vector(vec![3, -1]);
        assert_eq!(z2.multiply(&e, sym(1, false)).unwrap(), Element::Vector(vec![3, -2]));

        let f2 = nf("F2");
        let e = Element::Reduced(vec![sym(0, true), sym(1, true)]);
        assert_eq!(f2.multiply(&e, sym(1, false)).unwrap(), Element::Reduced(vec![sym(0, true)]));

        // a b^2 · b^4 = a b^6 = a b in Z * Z/5
        let zf5 = nf("Z! * Z[5]");
        let mut e = zf5.normalize(&Word::power(0, 1).concat(&Word::power(1, 2))).unwrap();
        for _ in 0..4 {
            e = zf5.multiply(&e, sym(1, true)).unwrap();
        }
        assert_eq!(
            e,
            Element::Syllables(vec![
                (0, Element::Vector(vec![1])),
                (1, Element::Residue(1))
            ])
        );
    }

    #[test]
    fn identity_checks() {
        assert!(nf("Z^2").is_identity(&Element::Vector(vec![0, 0])));
        assert!(nf("F2").is_identity(&Element::Reduced(vec![])));
        let zz6 = nf("Z! x Z[6]");
        assert!(zz6.is_identity(&zz6.normalize(&Word::power(1, 6)).unwrap()));
    }

    #[test]
    fn free_product_syllable_cancels_to_identity() {
        let zf5 = nf("Z! * Z[5]");
        let w = Word::power(0, 1)
            .concat(&Word::power(1, 5))
            .concat(&Word::power(0, -1));
        assert!(zf5.is_identity(&zf5.normalize(&w).unwrap()));
    }

    #[test]
    fn word_of_round_trips() {
        for text in ["Z^2", "F2", "Z! x Z[6]", "Z! * Z[5]", "<a!,b | a b a^-1 b^-1, a^2 b^3>"] {
            let n = nf(text);
            let w = Word::new(vec![sym(0, true), sym(1, false), sym(1, false), sym(0, true), sym(1, true)]);
            let e = n.normalize(&w).unwrap();
            assert_eq!(n.normalize(&n.word_of(&e)).unwrap(), e, "{text}");
        }
    }

    #[test]
    fn rewriting_hint() {
        use crate::presentation::{Presented, NormalizerHint};
        let rs = RewritingSystem::new(vec![
            (Word::power(0, 2), Word::power(0, -1)),
            (Word::power(0, -2), Word::power(0, 1)),
        ])
        .unwrap();
        let expr = GroupExpr::Presented(Presented {
            names: vec!["a".into()],
            relators: vec![Word::power(0, 3)],
            hint: NormalizerHint::Rewriting(rs),
        });
        let n = Normalizer::from_expr(&expr).unwrap();
        assert_eq!(n.strategy(), "rewriting");
        assert!(n.is_identity(&n.normalize(&Word::power(0, -3)).unwrap()));
        assert!(!n.is_identity(&n.normalize(&Word::power(0, 2)).unwrap()));
    }

    #[test]
    fn keys_are_tagged() {
        assert_eq!(Element::Residue(5).key(), vec![0x03, 5, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(Element::Vector(vec![-1]).key()[0], 0x02);
        assert_eq!(
            Element::Reduced(vec![GeneratorSymbol::neg(1)]).key(),
            vec![0x01, 1, 0, 0, 0, 1, 0, 0, 0, 1]
        );
    }
}
