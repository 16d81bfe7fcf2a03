use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use super::spec::GroupPresentation;
use super::word::Word;

/// Signed exponent sums of each relator: row `i`, column `j` is the exponent
/// sum of generator `j` in relator `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentMatrix {
    pub rows: Vec<Vec<i64>>,
    pub columns: usize,
}

impl ExponentMatrix {
    pub fn row_of(word: &Word, columns: usize) -> Vec<i64> {
        let mut row = vec![0; columns];
        for s in word.symbols() {
            row[s.index] += s.sign.as_i64();
        }
        row
    }
}

pub fn exponent_matrix(pres: &GroupPresentation) -> ExponentMatrix {
    let p = pres.rank();
    ExponentMatrix {
        rows: pres
            .relators
            .iter()
            .map(|r| ExponentMatrix::row_of(r, p))
            .collect(),
        columns: p,
    }
}

/// Rank over the rationals of an integer matrix, via fraction-free
/// (Bareiss) elimination. Exact for any integer type.
pub fn fraction_free_rank<T>(mut rows: Vec<Vec<T>>) -> usize
where
    T: Integer + Signed + Clone,
{
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            for c in col + 1..ncols {
                let v = rows[rank][col].clone() * rows[r][c].clone()
                    - rows[r][col].clone() * rows[rank][c].clone();
                rows[r][c] = v / prev.clone();
            }
            rows[r][col] = T::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn integer_rank(m: &ExponentMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    fraction_free_rank(rows)
}

/// The rank condition `p > r(C)`.
pub fn check_rank_condition(m: &ExponentMatrix) -> bool {
    m.columns > integer_rank(m)
}
