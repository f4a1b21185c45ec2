//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals of a dense integer matrix given by rows.
pub(crate) fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let top = &head[rank];
        let pivot = top[col].clone();
        for row in tail {
            let factor = row[col].clone();
            for (x, t) in row[col..].iter_mut().zip(&top[col..]) {
                *x = (&pivot * &*x - &factor * t) / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(m(&[&[2, 4, 6], &[1, 1, 1], &[3, 5, 7]])), 2);
        assert_eq!(rank(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), 3);
        assert_eq!(rank(Vec::new()), 0);
    }
}
