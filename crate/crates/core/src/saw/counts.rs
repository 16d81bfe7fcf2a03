use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::normalform::normalizer_for;
use crate::parallel::EnumOptions;
use crate::presentation::{validate_class_g_with, GroupSpec};
use crate::scalar::Count;

use super::space::{CayleySpace, WalkSpace};

/// Per-length walk counts from a fixed root.
///
/// `c[n]` counts n-step SAWs. When heights are available, `b_by_span[n][A]`
/// and `h_by_span[n][A]` count n-step bridges and half-space walks of span
/// `A`. The zero-step walk counts once everywhere: `c_0 = b_0 = h_0 = 1`,
/// stored at span 0.
/// Bridge and half-space counts indexed by length, then span.
type SpanTables<C> = (Vec<Vec<C>>, Vec<Vec<C>>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsTable<C> {
    group: String,
    distinguished: Option<usize>,
    c: Vec<C>,
    spans: Option<SpanTables<C>>,
}

/// One length of a [`CountsTable`]; the unit stored by caches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsRow<C> {
    pub n: usize,
    pub c: C,
    /// `b_{n,A}` for `A = 0..=n`.
    pub b: Option<Vec<C>>,
    /// `h_{n,A}` for `A = 0..=n`.
    pub h: Option<Vec<C>>,
}

fn number<C: Count>(x: &C) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("counts print as integers"))
}

fn sum<C: Count>(row: &[C]) -> C {
    row.iter().fold(C::zero(), |acc, x| acc.checked_sum(x))
}

impl<C: Count> CountsTable<C> {
    pub fn from_rows(
        group: impl Into<String>,
        distinguished: Option<usize>,
        rows: Vec<CountsRow<C>>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::Mismatch(msg));
        if rows.is_empty() {
            return Err(Error::EmptyTable);
        }
        let with_spans = rows[0].b.is_some();
        let mut c = Vec::new();
        let mut b = Vec::new();
        let mut h = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            if row.n != i {
                return bad(format!("row {i} is labeled n = {}", row.n));
            }
            c.push(row.c);
            match (row.b, row.h) {
                (Some(br), Some(hr)) if with_spans => {
                    if br.len() != i + 1 || hr.len() != i + 1 {
                        return bad(format!("span rows at n = {i} must have {} entries", i + 1));
                    }
                    b.push(br);
                    h.push(hr);
                }
                (None, None) if !with_spans => {}
                _ => return bad(format!("row {i} disagrees with row 0 about span data")),
            }
        }
        let one = C::one();
        if c[0] != one || (with_spans && (b[0][0] != one || h[0][0] != one)) {
            return bad("the zero-step walk must count once".into());
        }
        Ok(CountsTable {
            group: group.into(),
            distinguished,
            c,
            spans: with_spans.then_some((b, h)),
        })
    }

    pub fn group(&self) -> &str {
        &self.group
    }

    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }

    pub fn max_len(&self) -> usize {
        self.c.len() - 1
    }

    pub fn has_heights(&self) -> bool {
        self.spans.is_some()
    }

    pub fn c(&self, n: usize) -> &C {
        &self.c[n]
    }

    pub fn c_all(&self) -> &[C] {
        &self.c
    }

    pub fn b(&self, n: usize) -> Option<C> {
        self.spans.as_ref().map(|(b, _)| sum(&b[n]))
    }

    pub fn h(&self, n: usize) -> Option<C> {
        self.spans.as_ref().map(|(_, h)| sum(&h[n]))
    }

    /// `b_{n,A}`; zero for `A > n`.
    pub fn b_span(&self, n: usize, a: usize) -> Option<C> {
        self.spans
            .as_ref()
            .map(|(b, _)| b[n].get(a).cloned().unwrap_or_else(C::zero))
    }

    /// `h_{n,A}`; zero for `A > n`.
    pub fn h_span(&self, n: usize, a: usize) -> Option<C> {
        self.spans
            .as_ref()
            .map(|(_, h)| h[n].get(a).cloned().unwrap_or_else(C::zero))
    }

    pub fn row(&self, n: usize) -> CountsRow<C> {
        CountsRow {
            n,
            c: self.c[n].clone(),
            b: self.spans.as_ref().map(|(b, _)| b[n].clone()),
            h: self.spans.as_ref().map(|(_, h)| h[n].clone()),
        }
    }

    /// The same table cut at `max_len`.
    pub fn truncated(&self, max_len: usize) -> Self {
        let k = max_len.min(self.max_len()) + 1;
        CountsTable {
            group: self.group.clone(),
            distinguished: self.distinguished,
            c: self.c[..k].to_vec(),
            spans: self
                .spans
                .as_ref()
                .map(|(b, h)| (b[..k].to_vec(), h[..k].to_vec())),
        }
    }

    /// Copy of the table with the span data dropped.
    pub fn without_heights(&self) -> Self {
        CountsTable {
            spans: None,
            ..self.clone()
        }
    }

    /// CSV with one row per length `1..=N`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.has_heights() {
            out.push_str("n,c_n,b_n,h_n\n");
            for n in 1..=self.max_len() {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    n,
                    self.c[n],
                    self.b(n).unwrap(),
                    self.h(n).unwrap()
                );
            }
        } else {
            out.push_str("n,c_n\n");
            for n in 1..=self.max_len() {
                let _ = writeln!(out, "{},{}", n, self.c[n]);
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let list = |xs: &[C]| Value::Array(xs.iter().map(number).collect());
        let mut v = json!({
            "group": self.group,
            "distinguished": self.distinguished,
            "N": self.max_len(),
            "c": list(&self.c),
        });
        if let Some((b, h)) = &self.spans {
            let totals = |t: &[Vec<C>]| Value::Array(t.iter().map(|r| number(&sum(r))).collect());
            let table = |t: &[Vec<C>]| Value::Array(t.iter().map(|r| list(r)).collect());
            v["b"] = totals(b);
            v["h"] = totals(h);
            v["b_by_span"] = table(b);
            v["h_by_span"] = table(h);
        }
        v
    }
}

#[derive(Clone, Debug)]
struct Tally {
    c: Vec<u64>,
    b: Vec<Vec<u64>>,
    h: Vec<Vec<u64>>,
}

impl Tally {
    fn new(max_len: usize, heights: bool) -> Self {
        let spans = |n: usize| if heights { vec![0; n + 1] } else { Vec::new() };
        Tally {
            c: vec![0; max_len + 1],
            b: (0..=max_len).map(spans).collect(),
            h: (0..=max_len).map(spans).collect(),
        }
    }
}

/// Walk prefix: vertices so far, current height, running max, and whether
/// every height after the start is positive. The zero-step walk is
/// positive, which gives `b_0 = h_0 = 1`.
#[derive(Clone)]
struct Prefix<V> {
    path: Vec<V>,
    height: i64,
    max: i64,
    positive: bool,
}

impl<V: Clone + Eq> Prefix<V> {
    fn extend<S: WalkSpace<Vertex = V>>(&self, space: &S, label: usize) -> Option<Self> {
        let next = space.neighbor(self.path.last().unwrap(), label);
        if self.path.contains(&next) {
            return None;
        }
        let height = self.height + space.weight(label).unwrap_or(0);
        let mut path = self.path.clone();
        path.push(next);
        Some(Prefix {
            path,
            height,
            max: self.max.max(height),
            positive: self.positive && height > 0,
        })
    }

    fn record(&self, tally: &mut Tally, heights: bool) {
        let n = self.path.len() - 1;
        tally.c[n] += 1;
        if heights && self.positive {
            tally.h[n][self.max as usize] += 1;
            if self.height == self.max {
                tally.b[n][self.height as usize] += 1;
            }
        }
    }
}

fn dfs<S: WalkSpace>(space: &S, p: &mut Prefix<S::Vertex>, max_len: usize, tally: &mut Tally) {
    p.record(tally, space.has_heights());
    if p.path.len() - 1 == max_len {
        return;
    }
    for label in 0..space.degree() {
        let next = space.neighbor(p.path.last().unwrap(), label);
        if p.path.contains(&next) {
            continue;
        }
        let saved = (p.height, p.max, p.positive);
        p.height += space.weight(label).unwrap_or(0);
        p.max = p.max.max(p.height);
        p.positive &= p.height > 0;
        p.path.push(next);
        dfs(space, p, max_len, tally);
        p.path.pop();
        (p.height, p.max, p.positive) = saved;
    }
}

/// Raw SAW tallies from the root of `space` for lengths `0..=max_len`.
///
/// Returns `c` and, if the space has heights, `(b_by_span, h_by_span)`.
/// The search tree is cut at `opts.split_depth`; subtrees run in parallel
/// and their tallies are summed, so the result is independent of the
/// worker count.
#[allow(clippy::type_complexity)]
pub fn count_walks<S: WalkSpace, C: Count>(
    space: &S,
    max_len: usize,
    opts: &EnumOptions,
) -> (Vec<C>, Option<(Vec<Vec<C>>, Vec<Vec<C>>)>) {
    let heights = space.has_heights();
    let depth = opts.split_depth.min(max_len);
    let root = Prefix {
        path: vec![space.root()],
        height: 0,
        max: 0,
        positive: true,
    };

    let mut head = Tally::new(max_len, heights);
    let mut frontier = Vec::new();
    let mut stack = vec![root];
    while let Some(p) = stack.pop() {
        if p.path.len() - 1 == depth {
            frontier.push(p);
            continue;
        }
        p.record(&mut head, heights);
        for label in (0..space.degree()).rev() {
            if let Some(next) = p.extend(space, label) {
                stack.push(next);
            }
        }
    }
    let tails: Vec<Tally> = opts.install(|| {
        frontier
            .into_par_iter()
            .map(|mut p| {
                let mut t = Tally::new(max_len, heights);
                dfs(space, &mut p, max_len, &mut t);
                t
            })
            .collect()
    });
    let lift = |xs: &[u64]| -> Vec<C> { xs.iter().map(|&x| C::from_u64(x)).collect() };
    let mut c = lift(&head.c);
    let mut b: Vec<Vec<C>> = head.b.iter().map(|r| lift(r)).collect();
    let mut h: Vec<Vec<C>> = head.h.iter().map(|r| lift(r)).collect();
    for t in &tails {
        for (acc, &x) in c.iter_mut().zip(&t.c) {
            acc.add_u64(x);
        }
        for (accs, xs) in b.iter_mut().zip(&t.b).chain(h.iter_mut().zip(&t.h)) {
            for (acc, &x) in accs.iter_mut().zip(xs) {
                acc.add_u64(x);
            }
        }
    }
    (c, heights.then_some((b, h)))
}

/// SAW counts `c_0..c_N` from the identity.
pub fn count_saws<C: Count>(spec: &GroupSpec, max_len: usize, opts: &EnumOptions) -> Result<CountsTable<C>> {
    let nf = normalizer_for(spec)?;
    let (c, _) = count_walks::<_, C>(&CayleySpace::new(&nf, None), max_len, opts);
    Ok(CountsTable {
        group: spec.render(),
        distinguished: spec.distinguished(),
        c,
        spans: None,
    })
}

/// SAW, bridge and half-space counts by span, heights taken along the
/// distinguished generator.
///
/// The class-𝒢 check runs at cutoff `max_len` first; a failure is an error
/// unless `opts.skip_class_check` is set, in which case it is logged.
pub fn count_bridges<C: Count>(
    spec: &GroupSpec,
    max_len: usize,
    opts: &EnumOptions,
) -> Result<CountsTable<C>> {
    let s1 = spec.distinguished().ok_or(Error::NoDistinguished)?;
    let report = validate_class_g_with(spec, max_len, opts)?;
    if let Some(w) = report.witnesses.first() {
        if opts.skip_class_check {
            log::warn!("{}: class check fails at `{w}`; counting anyway", spec.render());
        } else {
            return Err(Error::ClassCheckFailed {
                cutoff: max_len,
                witness: w.clone(),
            });
        }
    }
    let nf = normalizer_for(spec)?;
    let (c, spans) = count_walks::<_, C>(&CayleySpace::new(&nf, Some(s1)), max_len, opts);
    Ok(CountsTable {
        group: spec.render(),
        distinguished: Some(s1),
        c,
        spans,
    })
}
