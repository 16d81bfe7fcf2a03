use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::normalform::RewritingSystem;

use super::parse;
use super::word::Word;

/// A presentation `<S | R>` over a flat, ordered generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generator_names: Vec<String>,
    pub relators: Vec<Word>,
    pub distinguished: Option<usize>,
}

impl GroupPresentation {
    pub fn new(
        generator_names: Vec<String>,
        relators: Vec<Word>,
        distinguished: Option<usize>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for n in &generator_names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        let rank = generator_names.len();
        for r in &relators {
            if let Some(i) = r.max_index() {
                if i >= rank {
                    return Err(Error::SymbolOutOfRange { index: i, rank });
                }
            }
        }
        if let Some(d) = distinguished {
            if d >= rank {
                return Err(Error::SymbolOutOfRange { index: d, rank });
            }
        }
        Ok(GroupPresentation {
            generator_names,
            relators,
            distinguished,
        })
    }

    pub fn rank(&self) -> usize {
        self.generator_names.len()
    }
}

/// How a `Presented` node gets its word-problem solver.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum NormalizerHint {
    /// Recognise the presentation shape (free, abelian, free product of cyclics).
    #[default]
    Auto,
    /// A user-supplied confluent rewriting system over the local generators.
    Rewriting(RewritingSystem),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presented {
    pub names: Vec<String>,
    pub relators: Vec<Word>,
    pub hint: NormalizerHint,
}

/// Expression tree of group constructors. Generators are numbered by a
/// left-to-right traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    FreeGroup(usize),
    FreeAbelian(usize),
    Cyclic(u64),
    DirectProduct(Box<GroupExpr>, Box<GroupExpr>),
    FreeProduct(Box<GroupExpr>, Box<GroupExpr>),
    Presented(Presented),
}

/// What kind of leaf a flattened generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    Free,
    FreeAbelian,
    Cyclic,
    Presented,
}

impl GroupExpr {
    pub fn rank(&self) -> usize {
        match self {
            GroupExpr::FreeGroup(k) | GroupExpr::FreeAbelian(k) => *k,
            GroupExpr::Cyclic(_) => 1,
            GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => a.rank() + b.rank(),
            GroupExpr::Presented(p) => p.names.len(),
        }
    }

    pub fn direct(a: GroupExpr, b: GroupExpr) -> GroupExpr {
        GroupExpr::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn free(a: GroupExpr, b: GroupExpr) -> GroupExpr {
        GroupExpr::FreeProduct(Box::new(a), Box::new(b))
    }

    fn validate(&self) -> Result<()> {
        match self {
            GroupExpr::FreeGroup(0) | GroupExpr::FreeAbelian(0) => {
                Err(Error::InvalidSpec("rank must be at least 1".into()))
            }
            GroupExpr::Cyclic(m) if *m < 2 => {
                Err(Error::InvalidSpec(format!("cyclic order {m} is below 2")))
            }
            GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => {
                a.validate()?;
                b.validate()
            }
            GroupExpr::Presented(p) => {
                if p.names.is_empty() {
                    return Err(Error::InvalidSpec("presentation without generators".into()));
                }
                GroupPresentation::new(p.names.clone(), p.relators.clone(), None).map(|_| ())
            }
            _ => Ok(()),
        }
    }

    pub(crate) fn leaf_kind(&self, index: usize) -> Option<LeafKind> {
        match self {
            GroupExpr::FreeGroup(k) => (index < *k).then_some(LeafKind::Free),
            GroupExpr::FreeAbelian(k) => (index < *k).then_some(LeafKind::FreeAbelian),
            GroupExpr::Cyclic(_) => (index == 0).then_some(LeafKind::Cyclic),
            GroupExpr::Presented(p) => (index < p.names.len()).then_some(LeafKind::Presented),
            GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => {
                let ra = a.rank();
                if index < ra {
                    a.leaf_kind(index)
                } else {
                    b.leaf_kind(index - ra)
                }
            }
        }
    }

    fn collect_presented_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            GroupExpr::Presented(p) => out.extend(p.names.iter().map(String::as_str)),
            GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => {
                a.collect_presented_names(out);
                b.collect_presented_names(out);
            }
            _ => {}
        }
    }

    fn assign_names(&self, used: &BTreeSet<&str>, fresh: &mut FreshNames, out: &mut Vec<String>) {
        match self {
            GroupExpr::Presented(p) => out.extend(p.names.iter().cloned()),
            GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => {
                a.assign_names(used, fresh, out);
                b.assign_names(used, fresh, out);
            }
            leaf => {
                for _ in 0..leaf.rank() {
                    out.push(fresh.next(used));
                }
            }
        }
    }

    /// Defining relators of this node, with generator indices shifted by `offset`.
    fn relators(&self, offset: usize, out: &mut Vec<Word>) {
        match self {
            GroupExpr::FreeGroup(_) => {}
            GroupExpr::FreeAbelian(k) => {
                for i in 0..*k {
                    for j in i + 1..*k {
                        out.push(Word::commutator(offset + i, offset + j));
                    }
                }
            }
            GroupExpr::Cyclic(m) => out.push(Word::power(offset, *m as i64)),
            GroupExpr::FreeProduct(a, b) => {
                a.relators(offset, out);
                b.relators(offset + a.rank(), out);
            }
            GroupExpr::DirectProduct(a, b) => {
                let ra = a.rank();
                a.relators(offset, out);
                b.relators(offset + ra, out);
                for i in 0..ra {
                    for j in 0..b.rank() {
                        out.push(Word::commutator(offset + i, offset + ra + j));
                    }
                }
            }
            GroupExpr::Presented(p) => out.extend(p.relators.iter().map(|r| r.shifted(offset))),
        }
    }

    /// Whether the group is abelian by construction.
    pub fn is_abelian(&self) -> bool {
        match self {
            GroupExpr::FreeAbelian(_) | GroupExpr::Cyclic(_) => true,
            GroupExpr::FreeGroup(k) => *k == 1,
            GroupExpr::DirectProduct(a, b) => a.is_abelian() && b.is_abelian(),
            GroupExpr::FreeProduct(_, _) => false,
            GroupExpr::Presented(p) => {
                has_all_commutators(p.names.len(), &p.relators)
            }
        }
    }
}

/// The unordered generator pair `{x, y}` if `w` is cyclically a commutator
/// `x^e y^f x^-e y^-f`.
pub(crate) fn commutator_pair(w: &Word) -> Option<(usize, usize)> {
    let c = w.cyclically_reduced();
    let s = c.symbols();
    if s.len() != 4 {
        return None;
    }
    (0..4).find_map(|rot| {
        let x = s[rot];
        let y = s[(rot + 1) % 4];
        (x.index != y.index && s[(rot + 2) % 4] == x.inverse() && s[(rot + 3) % 4] == y.inverse())
            .then(|| (x.index.min(y.index), x.index.max(y.index)))
    })
}

/// True when, for every pair of generators, some relator is (a cyclic
/// rotation or inverse of) their commutator.
pub(crate) fn has_all_commutators(rank: usize, relators: &[Word]) -> bool {
    let pairs: BTreeSet<(usize, usize)> = relators.iter().filter_map(commutator_pair).collect();
    (0..rank).all(|i| (i + 1..rank).all(|j| pairs.contains(&(i, j))))
}

struct FreshNames {
    next: usize,
}

impl FreshNames {
    fn next(&mut self, used: &BTreeSet<&str>) -> String {
        loop {
            let i = self.next;
            self.next += 1;
            let name = if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("g{i}")
            };
            if !used.contains(name.as_str()) {
                return name;
            }
        }
    }
}

/// A group expression plus its distinguished (infinite-order) generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    expr: GroupExpr,
    distinguished: Option<usize>,
}

impl GroupSpec {
    pub fn new(expr: GroupExpr, distinguished: Option<usize>) -> Result<Self> {
        expr.validate()?;
        let mut names = Vec::new();
        expr.collect_presented_names(&mut names);
        let mut seen = BTreeSet::new();
        for n in names {
            if !seen.insert(n) {
                return Err(Error::DuplicateGenerator(n.to_string()));
            }
        }
        if let Some(d) = distinguished {
            let rank = expr.rank();
            if d >= rank {
                return Err(Error::SymbolOutOfRange { index: d, rank });
            }
        }
        Ok(GroupSpec { expr, distinguished })
    }

    /// The catalog's default marking: generator 0 when it is an
    /// infinite-order catalog generator, otherwise none.
    pub fn with_default_distinguished(expr: GroupExpr) -> Result<Self> {
        let d = match expr.leaf_kind(0) {
            Some(LeafKind::Free | LeafKind::FreeAbelian) => Some(0),
            _ => None,
        };
        GroupSpec::new(expr, d)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse::parse_group_spec(text)
    }

    pub fn expr(&self) -> &GroupExpr {
        &self.expr
    }

    pub fn rank(&self) -> usize {
        self.expr.rank()
    }

    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }

    pub fn with_distinguished(self, distinguished: Option<usize>) -> Result<Self> {
        GroupSpec::new(self.expr, distinguished)
    }

    pub fn leaf_kind(&self, index: usize) -> Option<LeafKind> {
        self.expr.leaf_kind(index)
    }

    /// Flattened generator names. Presented blocks keep their own names;
    /// catalog generators get `a, b, c, ...` skipping names already taken.
    pub fn generator_names(&self) -> Vec<String> {
        let mut presented = Vec::new();
        self.expr.collect_presented_names(&mut presented);
        let used: BTreeSet<&str> = presented.into_iter().collect();
        let mut out = Vec::with_capacity(self.rank());
        self.expr
            .assign_names(&used, &mut FreshNames { next: 0 }, &mut out);
        out
    }

    /// The flattened presentation: catalog relators (commutators, powers)
    /// and user relators, over the flattened generator list.
    pub fn presentation(&self) -> GroupPresentation {
        let mut relators = Vec::new();
        self.expr.relators(0, &mut relators);
        GroupPresentation {
            generator_names: self.generator_names(),
            relators,
            distinguished: self.distinguished,
        }
    }

    /// Canonical text form in the spec grammar.
    ///
    /// A distinguished generator that is not the first generator of a
    /// free or free-abelian leaf is rendered by splitting that leaf; a
    /// distinguished cyclic generator cannot be written and is dropped.
    pub fn render(&self) -> String {
        let mut out = String::new();
        render_expr(&self.expr, 0, self.distinguished, &mut out);
        out
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn power_suffix(k: usize) -> String {
    if k == 1 {
        String::new()
    } else {
        format!("^{k}")
    }
}

fn render_expr(expr: &GroupExpr, offset: usize, dist: Option<usize>, out: &mut String) {
    let local = dist.and_then(|d| d.checked_sub(offset)).filter(|&d| d < expr.rank());
    match expr {
        GroupExpr::FreeAbelian(k) => match local {
            None => out.push_str(&format!("Z{}", power_suffix(*k))),
            Some(0) => out.push_str(&format!("Z!{}", power_suffix(*k))),
            Some(j) => out.push_str(&format!(
                "(Z{} x Z!{})",
                power_suffix(j),
                power_suffix(k - j)
            )),
        },
        GroupExpr::FreeGroup(k) => match local {
            None => out.push_str(&format!("F{k}")),
            Some(0) => out.push_str(&format!("F{k}!")),
            Some(j) => out.push_str(&format!("(F{j} * F{}!)", k - j)),
        },
        GroupExpr::Cyclic(m) => out.push_str(&format!("Z[{m}]")),
        GroupExpr::DirectProduct(a, b) | GroupExpr::FreeProduct(a, b) => {
            let op = if matches!(expr, GroupExpr::DirectProduct(..)) {
                " x "
            } else {
                " * "
            };
            render_expr(a, offset, dist, out);
            out.push_str(op);
            let nested = matches!(
                **b,
                GroupExpr::DirectProduct(..) | GroupExpr::FreeProduct(..)
            );
            if nested {
                out.push('(');
            }
            render_expr(b, offset + a.rank(), dist, out);
            if nested {
                out.push(')');
            }
        }
        GroupExpr::Presented(p) => {
            out.push('<');
            let gens: Vec<String> = p
                .names
                .iter()
                .enumerate()
                .map(|(i, n)| {
                    if local == Some(i) {
                        format!("{n}!")
                    } else {
                        n.clone()
                    }
                })
                .collect();
            out.push_str(&gens.join(","));
            out.push_str(" | ");
            let rels: Vec<String> = p.relators.iter().map(|r| r.render(&p.names)).collect();
            out.push_str(&rels.join(", "));
            out.push('>');
        }
    }
}
