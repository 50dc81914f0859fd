//! Fraction-free integer linear algebra on small dense matrices.
//!
//! Everything runs in `i128` with checked operations; an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Fraction-free (Bareiss) row echelon form.
///
/// Returns the rank and the sign-corrected last pivot, which is the
/// determinant when the matrix is square and of full rank.
fn bareiss(mut a: Vec<Vec<i128>>, cols: usize) -> Result<(usize, i128)> {
    let rows = a.len();
    let mut prev = 1i128;
    let mut rank = 0usize;
    let mut sign = 1i128;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            sign = -sign;
        }
        let p = a[rank][col];
        for i in rank + 1..rows {
            let factor = a[i][col];
            for j in col + 1..cols {
                let num = sub(mul(a[i][j], p)?, mul(factor, a[rank][j])?)?;
                debug_assert_eq!(num % prev, 0);
                a[i][j] = num / prev;
            }
            a[i][col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Ok((rank, sign * prev))
}

fn widen(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect()
}

/// Rank of an integer matrix with `cols` columns.
pub fn rank(rows: &[Vec<i64>], cols: usize) -> Result<usize> {
    Ok(bareiss(widen(rows), cols)?.0)
}

/// Determinant of a square integer matrix. The empty matrix has determinant 1.
pub fn det(rows: &[Vec<i64>]) -> Result<i128> {
    let n = rows.len();
    if n == 0 {
        return Ok(1);
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let (rank, d) = bareiss(widen(rows), n)?;
    Ok(if rank < n { 0 } else { d })
}

/// Affine rank (dimension of the affine hull) of a point set.
pub fn affine_rank(points: &[&[i64]]) -> Result<usize> {
    let Some((first, rest)) = points.split_first() else {
        return Ok(0);
    };
    let diffs = rest
        .iter()
        .map(|p| {
            p.iter()
                .zip(first.iter())
                .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    rank(&diffs, first.len())
}

/// Integer normal to the hyperplane spanned by `n - 1` difference vectors in
/// dimension `n`, via signed maximal minors (generalized cross product).
///
/// The result is zero exactly when the rows are linearly dependent.
pub fn cofactor_normal(rows: &[Vec<i64>], n: usize) -> Result<Vec<i128>> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = det(&minor)?;
            Ok(if skip % 2 == 0 { d } else { -d })
        })
        .collect()
}

/// Solves `A x = b` for square `A` with Cramer's rule, returning `None` when
/// `A` is singular or the solution is not integral.
pub fn solve_integral(a: &[Vec<i64>], b: &[i64]) -> Result<Option<Vec<i64>>> {
    let n = a.len();
    let d = det(a)?;
    if d == 0 {
        return Ok(None);
    }
    let mut x = Vec::with_capacity(n);
    for col in 0..n {
        let replaced: Vec<Vec<i64>> = a
            .iter()
            .zip(b)
            .map(|(row, &bi)| {
                let mut row = row.clone();
                row[col] = bi;
                row
            })
            .collect();
        let dc = det(&replaced)?;
        if dc % d != 0 {
            return Ok(None);
        }
        x.push(i64::try_from(dc / d).map_err(|_| Error::Overflow)?);
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&[]).unwrap(), 1);
        assert_eq!(det(&m(&[&[1, 0], &[-1, -2]])).unwrap(), -2);
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])).unwrap(), -1);
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])).unwrap(), 0);
        assert_eq!(
            det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])).unwrap(),
            2 * (3 - 2) - 0 + (1 - 3)
        );
        // first column zero forces a row swap
        assert_eq!(det(&m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap(), -1);
    }

    #[test]
    fn ranks_with_skipped_columns() {
        assert_eq!(rank(&m(&[&[0, 1, 2], &[0, 2, 4]]), 3).unwrap(), 1);
        assert_eq!(rank(&m(&[&[0, 1, 2], &[0, 2, 5], &[0, 0, 0]]), 3).unwrap(), 2);
        assert_eq!(rank(&[], 3).unwrap(), 0);
    }

    #[test]
    fn cross_product_in_three_dimensions() {
        let n = cofactor_normal(&m(&[&[1, 0, 0], &[0, 1, 0]]), 3).unwrap();
        assert_eq!(n, vec![0, 0, 1]);
        assert_eq!(cofactor_normal(&[], 1).unwrap(), vec![1]);
    }

    #[test]
    fn cramer() {
        let x = solve_integral(&m(&[&[1, 0], &[0, 1]]), &[-1, -1]).unwrap();
        assert_eq!(x, Some(vec![-1, -1]));
        let x = solve_integral(&m(&[&[1, 0], &[-1, -2]]), &[-1, -1]).unwrap();
        assert_eq!(x, Some(vec![-1, 1]));
        assert_eq!(solve_integral(&m(&[&[2, 0], &[0, 1]]), &[1, 1]).unwrap(), None);
        assert_eq!(solve_integral(&m(&[&[1, 2], &[2, 4]]), &[1, 1]).unwrap(), None);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX;
        let r = det(&m(&[&[big, big, 1], &[big, 1, big], &[1, big, big]]));
        assert_eq!(r, Err(Error::Overflow));
    }
}
