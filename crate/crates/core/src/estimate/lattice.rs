use crate::error::{Error, Result};
use crate::parallel::EnumOptions;
use crate::saw::{count_walks, CountsRow, CountsTable, WalkSpace};
use crate::scalar::Count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lattice {
    /// Neighbors `(x±1, y)`, `(x, y±1)`.
    Square,
    /// Brick-wall honeycomb: neighbors `(x±1, y)`, plus `(x, y+1)` when
    /// `x + y` is even and `(x, y−1)` when it is odd.
    Honeycomb,
}

impl Lattice {
    pub fn name(self) -> &'static str {
        match self {
            Lattice::Square => "square",
            Lattice::Honeycomb => "honeycomb",
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Lattice::Square => 4,
            Lattice::Honeycomb => 3,
        }
    }
}

impl std::str::FromStr for Lattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "square" => Ok(Lattice::Square),
            "honeycomb" | "hexagonal" => Ok(Lattice::Honeycomb),
            other => Err(Error::InvalidSpec(format!("unknown lattice `{other}`"))),
        }
    }
}

/// A coordinate lattice walked from `root`. It has no heights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeAdapter {
    pub lattice: Lattice,
    pub root: (i64, i64),
}

impl LatticeAdapter {
    pub fn new(lattice: Lattice) -> Self {
        LatticeAdapter {
            lattice,
            root: (0, 0),
        }
    }

    pub fn with_root(self, root: (i64, i64)) -> Self {
        LatticeAdapter { root, ..self }
    }

    pub fn neighbors(&self, v: (i64, i64)) -> Vec<(i64, i64)> {
        (0..self.lattice.degree()).map(|l| self.neighbor(&v, l)).collect()
    }
}

impl WalkSpace for LatticeAdapter {
    type Vertex = (i64, i64);

    fn root(&self) -> (i64, i64) {
        self.root
    }

    fn degree(&self) -> usize {
        self.lattice.degree()
    }

    fn neighbor(&self, &(x, y): &(i64, i64), label: usize) -> (i64, i64) {
        match (self.lattice, label) {
            (_, 0) => (x + 1, y),
            (_, 1) => (x - 1, y),
            (Lattice::Square, 2) => (x, y + 1),
            (Lattice::Square, 3) => (x, y - 1),
            (Lattice::Honeycomb, 2) if (x + y).rem_euclid(2) == 0 => (x, y + 1),
            (Lattice::Honeycomb, 2) => (x, y - 1),
            _ => panic!("label {label} out of range for the {} lattice", self.lattice.name()),
        }
    }
}

/// Extra roots used to spot-check that counts do not depend on the root.
pub const SPOT_CHECK_ROOTS: [(i64, i64); 3] = [(1, 0), (3, 5), (-2, 7)];

/// SAW counts `c_0..c_N` from the adapter's root, cross-checked from two
/// further roots.
pub fn lattice_counts<C: Count>(
    adapter: &LatticeAdapter,
    max_len: usize,
    opts: &EnumOptions,
) -> Result<CountsTable<C>> {
    let (c, _) = count_walks::<_, C>(adapter, max_len, opts);
    let others = SPOT_CHECK_ROOTS
        .iter()
        .filter(|&&r| r != adapter.root)
        .take(2);
    for &r in others {
        let (c2, _) = count_walks::<_, C>(&adapter.with_root(r), max_len, opts);
        if c2 != c {
            return Err(Error::RootDependent(format!(
                "{} lattice: roots {:?} and {:?} disagree",
                adapter.lattice.name(),
                adapter.root,
                r
            )));
        }
    }
    let rows = c
        .into_iter()
        .enumerate()
        .map(|(n, c)| CountsRow {
            n,
            c,
            b: None,
            h: None,
        })
        .collect();
    CountsTable::from_rows(adapter.lattice.name(), None, rows)
}
