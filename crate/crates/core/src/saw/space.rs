use crate::normalform::{Element, Normalizer};
use crate::presentation::{GeneratorSymbol, Sign};

/// A rooted, regular graph with labeled out-edges, walked by the SAW
/// enumerator. Optional integer edge weights define heights.
pub trait WalkSpace: Sync {
    type Vertex: Clone + Eq + Send + Sync;

    fn root(&self) -> Self::Vertex;

    /// Out-degree; labels run over `0..degree()`.
    fn degree(&self) -> usize;

    fn neighbor(&self, v: &Self::Vertex, label: usize) -> Self::Vertex;

    /// Height increment of a step with this label, if the space has heights.
    fn weight(&self, _label: usize) -> Option<i64> {
        None
    }

    fn has_heights(&self) -> bool {
        self.degree() > 0 && self.weight(0).is_some()
    }
}

/// +1 for `s₁`, −1 for `s₁⁻¹`, 0 for every other symbol.
pub fn edge_weight(s: GeneratorSymbol, distinguished: usize) -> i64 {
    match (s.index == distinguished, s.sign) {
        (true, Sign::Plus) => 1,
        (true, Sign::Minus) => -1,
        (false, _) => 0,
    }
}

/// Cayley graph of a normalizer's group; label `l` is `GeneratorSymbol::from_label(l)`.
pub struct CayleySpace<'a> {
    pub nf: &'a Normalizer,
    pub distinguished: Option<usize>,
}

impl<'a> CayleySpace<'a> {
    pub fn new(nf: &'a Normalizer, distinguished: Option<usize>) -> Self {
        CayleySpace { nf, distinguished }
    }
}

impl WalkSpace for CayleySpace<'_> {
    type Vertex = Element;

    fn root(&self) -> Element {
        self.nf.identity()
    }

    fn degree(&self) -> usize {
        2 * self.nf.rank()
    }

    fn neighbor(&self, v: &Element, label: usize) -> Element {
        self.nf.step(v, GeneratorSymbol::from_label(label))
    }

    fn weight(&self, label: usize) -> Option<i64> {
        self.distinguished
            .map(|d| edge_weight(GeneratorSymbol::from_label(label), d))
    }
}
