//! Balls, identity-word fingerprints of marked groups, relative girth and
//! quotients by added relators.
//!
//! A cycle through the root of a Cayley graph is an identity word, and by
//! vertex-transitivity every cycle is a translate of one through the root.
//! All comparisons between a group and its quotients are therefore phrased
//! in terms of identity words.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::normalform::{normalizer_for, Element, Normalizer};
use crate::parallel::EnumOptions;
use crate::presentation::{GeneratorSymbol, GroupExpr, GroupSpec, NormalizerHint, Presented, Word};

pub const DEFAULT_FINGERPRINT_CUTOFF: usize = 12;
pub const DEFAULT_BALL_RADIUS: usize = 6;

/// The ball of radius `radius` around the identity, with every labelled
/// edge whose endpoints both lie in the ball.
#[derive(Clone, Debug)]
pub struct Ball {
    pub radius: usize,
    pub rank: usize,
    /// Ordered by distance, then by element key.
    pub vertices: Vec<Element>,
    pub distance: Vec<usize>,
    /// Shortlex-least geodesic word from the root to each vertex.
    pub geodesics: Vec<Word>,
    /// `(from, label, to)` as indices into `vertices`, sorted.
    pub edges: Vec<(usize, GeneratorSymbol, usize)>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn root(&self) -> &Element {
        &self.vertices[0]
    }

    /// Rooted labelled graph written in terms of geodesic words; equal
    /// signatures mean isomorphic labelled balls.
    fn signature(&self) -> (Vec<&Word>, Vec<(&Word, GeneratorSymbol, &Word)>) {
        let mut verts: Vec<&Word> = self.geodesics.iter().collect();
        verts.sort();
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, s, v)| (&self.geodesics[u], s, &self.geodesics[v]))
            .collect();
        edges.sort();
        (verts, edges)
    }
}

pub fn ball(spec: &GroupSpec, radius: usize) -> Result<Ball> {
    Ok(ball_in(&normalizer_for(spec)?, radius))
}

pub fn ball_in(nf: &Normalizer, radius: usize) -> Ball {
    let labels = 2 * nf.rank();
    let mut found: HashMap<Element, (usize, Word)> = HashMap::new();
    let root = nf.identity();
    found.insert(root.clone(), (0, Word::empty()));
    let mut layer = vec![(Word::empty(), root)];
    for d in 1..=radius {
        let mut next = Vec::new();
        for (w, e) in &layer {
            for l in 0..labels {
                let s = GeneratorSymbol::from_label(l);
                let v = nf.step(e, s);
                if !found.contains_key(&v) {
                    let mut wv = w.clone();
                    wv.push(s);
                    found.insert(v.clone(), (d, wv.clone()));
                    next.push((wv, v));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        layer = next;
    }
    let mut keyed: Vec<(usize, Vec<u8>, Element, Word)> = found
        .into_iter()
        .map(|(e, (d, w))| (d, e.key(), e, w))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let index: HashMap<&Element, usize> =
        keyed.iter().enumerate().map(|(i, k)| (&k.2, i)).collect();
    let mut edges = Vec::new();
    for (i, (_, _, e, _)) in keyed.iter().enumerate() {
        for l in 0..labels {
            let s = GeneratorSymbol::from_label(l);
            if let Some(&j) = index.get(&nf.step(e, s)) {
                edges.push((i, s, j));
            }
        }
    }
    drop(index);
    let mut vertices = Vec::with_capacity(keyed.len());
    let mut distance = Vec::with_capacity(keyed.len());
    let mut geodesics = Vec::with_capacity(keyed.len());
    for (d, _, e, w) in keyed {
        vertices.push(e);
        distance.push(d);
        geodesics.push(w);
    }
    Ball {
        radius,
        rank: nf.rank(),
        vertices,
        distance,
        geodesics,
        edges,
    }
}

/// Whether two balls are isomorphic as rooted, edge-labelled digraphs.
///
/// A labelled isomorphism fixing the root is unique when it exists and
/// maps each vertex to the one reached by the same geodesic word, so it
/// suffices to compare the balls written in geodesic words.
pub fn labeled_ball_equal(b1: &Ball, b2: &Ball) -> Result<bool> {
    if b1.rank != b2.rank || b1.radius != b2.radius {
        return Err(Error::Mismatch(format!(
            "balls of rank {} radius {} vs rank {} radius {}",
            b1.rank, b1.radius, b2.rank, b2.radius
        )));
    }
    Ok(b1.signature() == b2.signature())
}

/// All freely reduced words of length at most `cutoff` that are trivial in
/// the group, sorted lexicographically.
pub(crate) fn identity_words(nf: &Normalizer, cutoff: usize, opts: &EnumOptions) -> Vec<Word> {
    let labels = 2 * nf.rank();
    let depth = opts.split_depth.min(cutoff);

    // Serial head: words shorter than `depth`, and the frontier at `depth`.
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    let mut stack = vec![(Vec::<GeneratorSymbol>::new(), nf.identity())];
    while let Some((w, e)) = stack.pop() {
        if w.len() == depth {
            frontier.push((w, e));
            continue;
        }
        if nf.is_identity(&e) {
            out.push(Word::new(w.clone()));
        }
        for l in 0..labels {
            let s = GeneratorSymbol::from_label(l);
            if w.last() == Some(&s.inverse()) {
                continue;
            }
            let mut w2 = w.clone();
            w2.push(s);
            stack.push((w2, nf.step(&e, s)));
        }
    }
    frontier.sort_by(|a, b| a.0.cmp(&b.0));

    let tails: Vec<Vec<Word>> = opts.install(|| {
        frontier
            .par_iter()
            .map(|(w, e)| {
                let mut found = Vec::new();
                let mut word = w.clone();
                reduced_dfs(nf, labels, &mut word, e, cutoff, &mut found);
                found
            })
            .collect()
    });
    out.extend(tails.into_iter().flatten());
    out.sort();
    out
}

fn reduced_dfs(
    nf: &Normalizer,
    labels: usize,
    word: &mut Vec<GeneratorSymbol>,
    e: &Element,
    cutoff: usize,
    found: &mut Vec<Word>,
) {
    if nf.is_identity(e) {
        found.push(Word::new(word.clone()));
    }
    if word.len() == cutoff {
        return;
    }
    for l in 0..labels {
        let s = GeneratorSymbol::from_label(l);
        if word.last() == Some(&s.inverse()) {
            continue;
        }
        let next = nf.step(e, s);
        word.push(s);
        reduced_dfs(nf, labels, word, &next, cutoff, found);
        word.pop();
    }
}

/// A marked group truncated at word length `cutoff`: the sorted set of
/// freely reduced identity words of length at most `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub d: usize,
    pub cutoff: usize,
    pub identity_words: Vec<Word>,
    pub names: Vec<String>,
}

impl Fingerprint {
    pub fn contains(&self, w: &Word) -> bool {
        self.identity_words.binary_search(w).is_ok()
    }

    fn by_length(&self) -> Vec<BTreeSet<&Word>> {
        let mut v = vec![BTreeSet::new(); self.cutoff + 1];
        for w in &self.identity_words {
            v[w.len()].insert(w);
        }
        v
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "L": self.cutoff,
            "words": self
                .identity_words
                .iter()
                .map(|w| w.render(&self.names))
                .collect::<Vec<_>>(),
        })
    }
}

pub fn fingerprint(spec: &GroupSpec, cutoff: usize) -> Result<Fingerprint> {
    fingerprint_with(spec, cutoff, &EnumOptions::default())
}

pub fn fingerprint_with(spec: &GroupSpec, cutoff: usize, opts: &EnumOptions) -> Result<Fingerprint> {
    let nf = normalizer_for(spec)?;
    Ok(Fingerprint {
        d: spec.rank(),
        cutoff,
        identity_words: identity_words(&nf, cutoff, opts),
        names: spec.generator_names(),
    })
}

/// First word length at which the two fingerprints differ, if any.
pub fn first_disagreement(f1: &Fingerprint, f2: &Fingerprint) -> Result<Option<usize>> {
    if f1.d != f2.d || f1.cutoff != f2.cutoff {
        return Err(Error::Mismatch(format!(
            "fingerprints (d = {}, L = {}) vs (d = {}, L = {})",
            f1.d, f1.cutoff, f2.d, f2.cutoff
        )));
    }
    let (a, b) = (f1.by_length(), f2.by_length());
    Ok((0..=f1.cutoff).find(|&l| a[l] != b[l]))
}

/// `2^-L'` where `L'` is the largest cutoff at which the truncated
/// identity-word sets agree; zero if they agree up to the full cutoff.
pub fn fingerprint_distance(f1: &Fingerprint, f2: &Fingerprint) -> Result<BigRational> {
    Ok(match first_disagreement(f1, f2)? {
        None => BigRational::from_integer(BigInt::from(0)),
        Some(l) => BigRational::new(BigInt::from(1), BigInt::from(1) << (l - 1)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    AboveCutoff(usize),
}

/// Shortest identity word of the quotient that is not an identity word of
/// the base, searched up to a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthReport {
    pub value: Girth,
    pub witness: Option<Word>,
    pub names: Vec<String>,
}

impl GirthReport {
    pub fn to_json(&self) -> Value {
        match self.value {
            Girth::Finite(g) => json!({
                "value": g,
                "witness": self.witness.as_ref().map(|w| w.render(&self.names)),
            }),
            Girth::AboveCutoff(l) => json!({
                "value": "above_cutoff",
                "cutoff": l,
                "witness": Value::Null,
            }),
        }
    }
}

fn same_rank(base: &GroupSpec, quot: &GroupSpec) -> Result<()> {
    if base.rank() != quot.rank() {
        return Err(Error::Mismatch(format!(
            "{} generators vs {}",
            base.rank(),
            quot.rank()
        )));
    }
    Ok(())
}

/// First identity word of `base` (length ≤ cutoff) that is not trivial in `quot`.
pub fn quotient_violation(
    base: &GroupSpec,
    quot: &GroupSpec,
    cutoff: usize,
    opts: &EnumOptions,
) -> Result<Option<Word>> {
    same_rank(base, quot)?;
    let nb = normalizer_for(base)?;
    let nq = normalizer_for(quot)?;
    for w in identity_words(&nb, cutoff, opts) {
        if !nq.is_identity(&nq.normalize(&w)?) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Every identity word of `base` up to the cutoff is an identity word of `quot`.
pub fn check_quotient_relation(base: &GroupSpec, quot: &GroupSpec, cutoff: usize) -> Result<bool> {
    Ok(quotient_violation(base, quot, cutoff, &EnumOptions::default())?.is_none())
}

pub fn relative_girth(base: &GroupSpec, quot: &GroupSpec, cutoff: usize) -> Result<GirthReport> {
    relative_girth_with(base, quot, cutoff, &EnumOptions::default())
}

pub fn relative_girth_with(
    base: &GroupSpec,
    quot: &GroupSpec,
    cutoff: usize,
    opts: &EnumOptions,
) -> Result<GirthReport> {
    same_rank(base, quot)?;
    let fb = fingerprint_with(base, cutoff, opts)?;
    let fq = fingerprint_with(quot, cutoff, opts)?;
    if let Some(w) = fb.identity_words.iter().find(|w| !fq.contains(w)) {
        return Err(Error::QuotientRelationViolated {
            witness: w.render(&fb.names),
        });
    }
    let witness = fq
        .identity_words
        .iter()
        .filter(|w| !fb.contains(w))
        .min_by(|a, b| (a.len(), *a).cmp(&(b.len(), *b)))
        .cloned();
    Ok(GirthReport {
        value: witness
            .as_ref()
            .map_or(Girth::AboveCutoff(cutoff), |w| Girth::Finite(w.len())),
        witness,
        names: quot.generator_names(),
    })
}

/// The quotient of `spec` by extra relators over its flattened generators.
///
/// Relators are pushed down into the factor whose generators they use;
/// powers of free-abelian or cyclic generators become cyclic factors, other
/// relators on abelian pieces become an abelian presentation, and relators
/// on free groups become a presentation that must be recognisable. Anything
/// without an exact word-problem solver is rejected.
pub fn quotient(spec: &GroupSpec, extra: &[Word]) -> Result<GroupSpec> {
    let rank = spec.rank();
    for w in extra {
        if let Some(i) = w.max_index() {
            if i >= rank {
                return Err(Error::SymbolOutOfRange { index: i, rank });
            }
        }
    }
    let names = spec.generator_names();
    let expr = push_relators(spec.expr(), &names, extra.to_vec())?;
    let q = GroupSpec::new(expr, spec.distinguished())?;
    normalizer_for(&q).map_err(|e| match e {
        Error::UnsupportedPresentation(m) => Error::UnsupportedQuotient(m),
        other => other,
    })?;
    Ok(q)
}

fn single_generator_power(w: &Word) -> Option<(usize, u64)> {
    let s = w.symbols();
    let first = *s.first()?;
    s.iter()
        .all(|x| *x == first)
        .then_some((first.index, s.len() as u64))
}

fn abelian_presented(expr: &GroupExpr, names: &[String], extra: Vec<Word>) -> GroupExpr {
    let rank = expr.rank();
    let base = GroupSpec::new(expr.clone(), None)
        .expect("subtree of a valid spec")
        .presentation();
    let mut relators = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            relators.push(Word::commutator(i, j));
        }
    }
    relators.extend(base.relators.into_iter().filter(|r| crate::presentation::commutator_pair(r).is_none()));
    relators.extend(extra);
    GroupExpr::Presented(Presented {
        names: names.to_vec(),
        relators,
        hint: NormalizerHint::Auto,
    })
}

fn push_relators(expr: &GroupExpr, names: &[String], rels: Vec<Word>) -> Result<GroupExpr> {
    let rels: Vec<Word> = rels
        .iter()
        .map(Word::freely_reduced)
        .filter(|w| !w.is_empty())
        .collect();
    if rels.is_empty() {
        return Ok(expr.clone());
    }
    match expr {
        GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => {
            let ra = a.rank();
            let (mut left, mut right, mut mixed) = (Vec::new(), Vec::new(), false);
            for r in rels.iter() {
                let lo = r.symbols().iter().all(|s| s.index < ra);
                let hi = r.symbols().iter().all(|s| s.index >= ra);
                if lo {
                    left.push(r.clone());
                } else if hi {
                    right.push(Word::new(
                        r.symbols()
                            .iter()
                            .map(|s| GeneratorSymbol::new(s.index - ra, s.sign))
                            .collect(),
                    ));
                } else {
                    mixed = true;
                }
            }
            if mixed {
                if expr.is_abelian() {
                    return Ok(abelian_presented(expr, names, rels));
                }
                return Err(Error::UnsupportedQuotient(
                    "relator spans factors of a non-abelian product".into(),
                ));
            }
            let a2 = push_relators(a, &names[..ra], left)?;
            let b2 = push_relators(b, &names[ra..], right)?;
            Ok(match expr {
                GroupExpr::DirectProduct(..) => GroupExpr::direct(a2, b2),
                _ => GroupExpr::free(a2, b2),
            })
        }
        GroupExpr::FreeAbelian(k) => {
            let mut orders = vec![0u64; *k];
            for r in &rels {
                match single_generator_power(r) {
                    Some((i, n)) => orders[i] = num_integer::gcd(orders[i], n),
                    None => return Ok(abelian_presented(expr, names, rels)),
                }
            }
            if orders.contains(&1) {
                return Ok(abelian_presented(expr, names, rels));
            }
            // Runs of free coordinates stay together; each torsion coordinate
            // becomes its own cyclic factor.
            let mut pieces: Vec<GroupExpr> = Vec::new();
            for o in orders {
                match (o, pieces.last_mut()) {
                    (0, Some(GroupExpr::FreeAbelian(n))) => *n += 1,
                    (0, _) => pieces.push(GroupExpr::FreeAbelian(1)),
                    (m, _) => pieces.push(GroupExpr::Cyclic(m)),
                }
            }
            let mut it = pieces.into_iter();
            let first = it.next().expect("rank at least one");
            Ok(it.fold(first, GroupExpr::direct))
        }
        GroupExpr::Cyclic(m) => {
            let g = rels.iter().fold(*m, |g, r| num_integer::gcd(g, r.len() as u64));
            if g >= 2 {
                Ok(GroupExpr::Cyclic(g))
            } else {
                Ok(abelian_presented(expr, names, rels))
            }
        }
        GroupExpr::FreeGroup(_) => Ok(GroupExpr::Presented(Presented {
            names: names.to_vec(),
            relators: rels,
            hint: NormalizerHint::Auto,
        })),
        GroupExpr::Presented(p) => {
            let mut relators = p.relators.clone();
            relators.extend(rels);
            Ok(GroupExpr::Presented(Presented {
                names: p.names.clone(),
                relators,
                hint: NormalizerHint::Auto,
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: &str) -> GroupSpec {
        GroupSpec::parse(t).unwrap()
    }

    #[test]
    fn ball_sizes() {
        let b = ball(&spec("Z^2"), 1).unwrap();
        assert_eq!(b.len(), 5);
        assert_eq!(b.edges.len(), 8);
        assert_eq!(ball(&spec("F2"), 2).unwrap().len(), 17);
        assert_eq!(ball(&spec("Z^2"), 3).unwrap().len(), 25);
        // b^3 = b^-3 in Z x Z/6, so the radius-3 ball loses one vertex.
        assert_eq!(ball(&spec("Z! x Z[6]"), 3).unwrap().len(), 24);
        assert_eq!(ball(&spec("Z! x Z[6]"), 2).unwrap().len(), 13);
    }

    #[test]
    fn ball_invariants() {
        let b = ball(&spec("Z! * Z[5]"), 4).unwrap();
        assert_eq!(b.distance[0], 0);
        assert_eq!(b.root(), &normalizer_for(&spec("Z! * Z[5]")).unwrap().identity());
        for (i, &d) in b.distance.iter().enumerate().skip(1) {
            assert!(b
                .edges
                .iter()
                .any(|&(u, _, v)| v == i && b.distance[u] + 1 == d));
            assert_eq!(b.geodesics[i].len(), d);
        }
    }

    #[test]
    fn labelled_balls() {
        let z2 = spec("Z^2");
        let z6 = spec("Z! x Z[6]");
        let z4 = spec("Z! x Z[4]");
        let eq = |a: &GroupSpec, b: &GroupSpec, r| {
            labeled_ball_equal(&ball(a, r).unwrap(), &ball(b, r).unwrap()).unwrap()
        };
        assert!(eq(&z2, &z6, 2));
        assert!(!eq(&z2, &z6, 3));
        assert!(!eq(&z2, &z4, 3));
        assert!(eq(&z2, &z2, 3));
        assert!(labeled_ball_equal(&ball(&z2, 2).unwrap(), &ball(&z2, 3).unwrap()).is_err());
    }

    #[test]
    fn fingerprints() {
        let f = fingerprint(&spec("F2"), 8).unwrap();
        assert_eq!(f.identity_words, vec![Word::empty()]);
        assert_eq!(f.to_json()["words"], json!([""]));

        let f = fingerprint(&spec("Z^2"), 4).unwrap();
        assert_eq!(f.identity_words.len(), 9);
        assert!(f.contains(&Word::commutator(0, 1)));
        assert_eq!(f.to_json()["words"][1], json!("a b a^-1 b^-1"));

        let f5 = fingerprint(&spec("Z! x Z[6]"), 5).unwrap();
        assert_eq!(f5.identity_words, fingerprint(&spec("Z^2"), 5).unwrap().identity_words);
    }

    #[test]
    fn distances() {
        let z2 = fingerprint(&spec("Z^2"), 6).unwrap();
        let z6 = fingerprint(&spec("Z! x Z[6]"), 6).unwrap();
        let f2 = fingerprint(&spec("F2"), 6).unwrap();
        let half = |k: u32| BigRational::new(BigInt::from(1), BigInt::from(2u32.pow(k)));
        assert_eq!(fingerprint_distance(&z2, &z2).unwrap(), BigRational::from_integer(0.into()));
        assert_eq!(fingerprint_distance(&z2, &z6).unwrap(), half(5));
        assert_eq!(fingerprint_distance(&f2, &z2).unwrap(), half(3));
        let short = fingerprint(&spec("Z^2"), 5).unwrap();
        assert!(fingerprint_distance(&z2, &short).is_err());
    }

    #[test]
    fn girth_examples() {
        let r = relative_girth(&spec("Z^2"), &spec("Z! x Z[6]"), 8).unwrap();
        assert_eq!(r.value, Girth::Finite(6));
        assert_eq!(r.to_json(), json!({"value": 6, "witness": "b^6"}));

        let r = relative_girth(&spec("F2"), &spec("Z^2"), 8).unwrap();
        assert_eq!(r.value, Girth::Finite(4));
        assert_eq!(r.witness, Some(Word::commutator(0, 1)));

        let r = relative_girth(&spec("Z^2"), &spec("Z^2"), 10).unwrap();
        assert_eq!(r.value, Girth::AboveCutoff(10));

        assert!(matches!(
            relative_girth(&spec("Z! x Z[6]"), &spec("Z^2"), 8),
            Err(Error::QuotientRelationViolated { .. })
        ));
    }

    #[test]
    fn quotient_relation() {
        assert!(check_quotient_relation(&spec("Z^2"), &spec("Z! x Z[6]"), 8).unwrap());
        assert!(!check_quotient_relation(&spec("Z! x Z[6]"), &spec("Z^2"), 8).unwrap());
        for q in ["Z^2", "Z! x Z[3]", "F2", "Z! * Z[4]"] {
            assert!(check_quotient_relation(&spec("F2"), &spec(q), 8).unwrap());
        }
    }

    #[test]
    fn quotients_stay_in_catalog() {
        let q = quotient(&spec("Z!^2"), &[Word::power(1, 6)]).unwrap();
        assert_eq!(q, spec("Z! x Z[6]"));
        let q = quotient(&spec("Z! * Z"), &[Word::power(1, 5)]).unwrap();
        assert_eq!(q, spec("Z! * Z[5]"));
        let q = quotient(&spec("F2!"), &[Word::commutator(0, 1)]).unwrap();
        assert_eq!(normalizer_for(&q).unwrap().strategy(), "abelian-lattice");
        assert_eq!(q.render(), "<a!,b | a b a^-1 b^-1>");
        let q = quotient(&spec("Z! x Z[6]"), &[Word::power(1, 4)]).unwrap();
        assert_eq!(q, spec("Z! x Z[2]"));
        let q = quotient(&spec("Z!^3"), &[Word::power(1, 4)]).unwrap();
        assert_eq!(q, spec("Z! x Z[4] x Z"));
    }

    #[test]
    fn mixed_abelian_relator_becomes_presentation() {
        let w = Word::power(0, 2).concat(&Word::power(1, 3));
        let q = quotient(&spec("Z!^2"), std::slice::from_ref(&w)).unwrap();
        let nf = normalizer_for(&q).unwrap();
        assert!(nf.is_identity(&nf.normalize(&w).unwrap()));
        assert!(!nf.is_identity(&nf.normalize(&Word::power(0, 1)).unwrap()));
    }

    #[test]
    fn unsupported_quotient() {
        let w = Word::new(vec![
            GeneratorSymbol::pos(0),
            GeneratorSymbol::pos(1),
            GeneratorSymbol::pos(0),
            GeneratorSymbol::neg(1),
        ]);
        assert!(matches!(
            quotient(&spec("F2!"), std::slice::from_ref(&w)),
            Err(Error::UnsupportedQuotient(_))
        ));
        assert!(matches!(
            quotient(&spec("Z! * Z"), &[w]),
            Err(Error::UnsupportedQuotient(_))
        ));
    }
}
