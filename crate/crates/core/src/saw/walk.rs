use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::normalform::{Element, Normalizer};
use crate::presentation::{GeneratorSymbol, Word};

use super::space::edge_weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WalkKind {
    Bridge,
    HalfSpace,
    Other,
}

/// Span vector `(a_1, …, a_k)` of a half-space walk, strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WalkClass(pub Vec<i64>);

impl WalkClass {
    /// Class of the reflected walk: `(a_1 + a_2, a_3, …, a_k)`.
    pub fn merged(&self) -> WalkClass {
        let a = &self.0;
        if a.len() < 2 {
            return self.clone();
        }
        let mut out = vec![a[0] + a[1]];
        out.extend_from_slice(&a[2..]);
        WalkClass(out)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.iter().all(|&a| a > 0) && self.0.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for WalkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Break points of the alternating max/min recursion on a height profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `A_1, …, A_k`.
    pub spans: Vec<i64>,
    /// `n_0 = 0, n_1, …, n_k = N`.
    pub breaks: Vec<usize>,
}

impl Decomposition {
    pub fn k(&self) -> usize {
        self.spans.len()
    }

    pub fn class(&self) -> WalkClass {
        WalkClass(self.spans.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkRecord {
    pub word: Word,
    pub vertices: Vec<Element>,
    pub heights: Vec<i64>,
    pub span: i64,
    pub kind: WalkKind,
    /// Present for half-space walks.
    pub decomposition: Option<Decomposition>,
    pub distinguished: usize,
}

/// Heights `h_0 = 0, h_1, …, h_n` of a step word.
pub fn heights_of(word: &Word, distinguished: usize) -> Vec<i64> {
    let mut h = vec![0];
    for &s in word.symbols() {
        h.push(h.last().unwrap() + edge_weight(s, distinguished));
    }
    h
}

pub fn span_of(heights: &[i64]) -> i64 {
    heights.iter().max().unwrap() - heights.iter().min().unwrap()
}

/// Bridge if `0 < h_s ≤ h_n` for all `1 ≤ s ≤ n`; half-space if `0 < h_s`.
/// The zero-step walk is a bridge.
pub fn classify_heights(heights: &[i64]) -> WalkKind {
    let h0 = heights[0];
    let rest = &heights[1..];
    if !rest.iter().all(|&h| h > h0) {
        return WalkKind::Other;
    }
    let last = *heights.last().unwrap();
    if rest.iter().all(|&h| h <= last) {
        WalkKind::Bridge
    } else {
        WalkKind::HalfSpace
    }
}

pub fn classify_walk(rec: &WalkRecord) -> WalkKind {
    classify_heights(&rec.heights)
}

/// Runs the recursion `A_j = max_{s ∈ [n_{j-1}, N]} (−1)^j (h_{n_{j-1}} − h_s)`,
/// `n_j` the last maximizer, until `n_k = N`.
///
/// On half-space profiles the spans are positive and strictly decreasing.
/// On other profiles the first step may give `A_1 = 0`.
pub fn decompose_profile(heights: &[i64]) -> Decomposition {
    let n = heights.len() - 1;
    let mut spans = Vec::new();
    let mut breaks = vec![0];
    let mut sign = -1i64;
    while *breaks.last().unwrap() < n || spans.is_empty() {
        let start = *breaks.last().unwrap();
        let base = heights[start];
        let (mut best, mut at) = (i64::MIN, start);
        for (s, &h) in heights.iter().enumerate().skip(start) {
            let v = sign * (base - h);
            if v >= best {
                best = v;
                at = s;
            }
        }
        spans.push(best);
        breaks.push(at);
        sign = -sign;
        if n == 0 {
            break;
        }
    }
    Decomposition { spans, breaks }
}

pub fn decompose_half_space(rec: &WalkRecord) -> Result<Decomposition> {
    if rec.kind == WalkKind::Other {
        return Err(Error::NotHalfSpace);
    }
    Ok(decompose_profile(&rec.heights))
}

fn trace(nf: &Normalizer, word: &Word) -> std::result::Result<Vec<Element>, usize> {
    let mut vertices = vec![nf.identity()];
    for (i, &s) in word.symbols().iter().enumerate() {
        let next = nf.step(vertices.last().unwrap(), s);
        if vertices.contains(&next) {
            return Err(i + 1);
        }
        vertices.push(next);
    }
    Ok(vertices)
}

impl WalkRecord {
    /// Walks `word` from the identity; errors if a vertex repeats.
    pub fn new(nf: &Normalizer, word: Word, distinguished: usize) -> Result<Self> {
        if let Some(s) = word.symbols().iter().find(|s| s.index >= nf.rank()) {
            return Err(Error::SymbolOutOfRange {
                index: s.index,
                rank: nf.rank(),
            });
        }
        let vertices = trace(nf, &word).map_err(Error::NotSelfAvoiding)?;
        Ok(Self::from_vertices(word, vertices, distinguished))
    }

    fn from_vertices(word: Word, vertices: Vec<Element>, distinguished: usize) -> Self {
        let heights = heights_of(&word, distinguished);
        let kind = classify_heights(&heights);
        let decomposition = (kind != WalkKind::Other).then(|| decompose_profile(&heights));
        WalkRecord {
            span: span_of(&heights),
            word,
            vertices,
            heights,
            kind,
            decomposition,
            distinguished,
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn class(&self) -> Option<WalkClass> {
        self.decomposition.as_ref().map(Decomposition::class)
    }
}

/// A reflected walk that revisits a vertex: evidence that heights are not
/// well defined on the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionWitness {
    pub word: Word,
    /// Step at which the first repeated vertex is reached.
    pub collision_index: usize,
}

impl fmt::Display for ReflectionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "reflected word {} revisits a vertex at step {}", self.word, self.collision_index)
    }
}

/// Reflects the part of the walk after `n_1` through the height `h_{n_1}`,
/// by inverting every later step. Walks with `k ≤ 1` come back unchanged.
pub fn reflect(nf: &Normalizer, rec: &WalkRecord) -> std::result::Result<WalkRecord, ReflectionWitness> {
    let dec = rec
        .decomposition
        .clone()
        .unwrap_or_else(|| decompose_profile(&rec.heights));
    if dec.k() < 2 {
        return Ok(rec.clone());
    }
    let n1 = dec.breaks[1];
    let word: Word = rec
        .word
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, &s)| if i < n1 { s } else { s.inverse() })
        .collect::<Vec<GeneratorSymbol>>()
        .into();
    match trace(nf, &word) {
        Ok(vertices) => Ok(WalkRecord::from_vertices(word, vertices, rec.distinguished)),
        Err(collision_index) => Err(ReflectionWitness {
            word,
            collision_index,
        }),
    }
}

/// All n-step SAW words from the identity, in lexicographic order. With a
/// distinguished generator, only half-space walks are kept.
pub fn walk_words(nf: &Normalizer, n: usize, half_space: Option<usize>) -> Vec<Word> {
    fn go(
        nf: &Normalizer,
        n: usize,
        half_space: Option<usize>,
        word: &mut Vec<GeneratorSymbol>,
        path: &mut Vec<Element>,
        height: i64,
        out: &mut Vec<Word>,
    ) {
        if word.len() == n {
            out.push(Word::new(word.clone()));
            return;
        }
        for l in 0..2 * nf.rank() {
            let s = GeneratorSymbol::from_label(l);
            let h = height + half_space.map_or(0, |d| edge_weight(s, d));
            if half_space.is_some() && h <= 0 {
                continue;
            }
            let next = nf.step(path.last().unwrap(), s);
            if path.contains(&next) {
                continue;
            }
            word.push(s);
            path.push(next);
            go(nf, n, half_space, word, path, h, out);
            path.pop();
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(nf, n, half_space, &mut Vec::new(), &mut vec![nf.identity()], 0, &mut out);
    out.sort();
    out
}
