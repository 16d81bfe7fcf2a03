//! Integer row lattices in echelon (Hermite) form, used to normalise
//! elements of finitely generated abelian groups `Z^p / L`.

/// A sublattice of `Z^columns` stored as a Hermite basis: strictly
/// increasing pivot columns, positive pivots, entries above each pivot
/// reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianLattice {
    columns: usize,
    basis: Vec<(usize, Vec<i64>)>,
}

impl AbelianLattice {
    pub fn from_rows(rows: &[Vec<i64>], columns: usize) -> Self {
        let mut m: Vec<Vec<i64>> = rows
            .iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut basis: Vec<(usize, Vec<i64>)> = Vec::new();
        let mut r = 0;
        for col in 0..columns {
            loop {
                let pivot = (r..m.len())
                    .filter(|&i| m[i][col] != 0)
                    .min_by_key(|&i| m[i][col].abs());
                let Some(p) = pivot else { break };
                m.swap(r, p);
                let mut clean = true;
                for i in r + 1..m.len() {
                    if m[i][col] != 0 {
                        let q = m[i][col] / m[r][col];
                        let (head, tail) = m.split_at_mut(i);
                        sub_scaled(&mut tail[0], &head[r], q);
                        if tail[0][col] != 0 {
                            clean = false;
                        }
                    }
                }
                if clean {
                    if m[r][col] < 0 {
                        m[r].iter_mut().for_each(|x| *x = -*x);
                    }
                    basis.push((col, m[r].clone()));
                    r += 1;
                    break;
                }
            }
        }
        // Reduce entries above each pivot.
        for i in 0..basis.len() {
            let (c, row) = basis[i].clone();
            for (_, upper) in basis.iter_mut().take(i) {
                let q = upper[c].div_euclid(row[c]);
                if q != 0 {
                    sub_scaled(upper, &row, q);
                }
            }
        }
        AbelianLattice { columns, basis }
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// Hermite basis rows with their pivot columns.
    pub fn basis(&self) -> &[(usize, Vec<i64>)] {
        &self.basis
    }

    /// Reduce `v` to the canonical representative of `v + L`: each pivot
    /// coordinate ends up in `[0, pivot)`.
    pub fn reduce(&self, v: &mut [i64]) {
        for (c, row) in &self.basis {
            let q = v[*c].div_euclid(row[*c]);
            if q != 0 {
                sub_scaled(v, row, q);
            }
        }
    }

    /// Diagonal of the Hermite basis per column: `0` for a free column,
    /// otherwise the pivot.
    pub fn pivot_of(&self, col: usize) -> i64 {
        self.basis
            .iter()
            .find(|(c, _)| *c == col)
            .map_or(0, |(_, r)| r[col])
    }
}

fn sub_scaled(target: &mut [i64], row: &[i64], q: i64) {
    for (t, &x) in target.iter_mut().zip(row) {
        *t -= q * x;
    }
}
