//! Exact Gaussian elimination over any [`Scalar`] field.

use super::rational::Rational;
use super::Scalar;

/// Solve an `n × (n+1)` augmented system in place; `None` if singular.
pub fn solve_augmented(rows: &mut [Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| !num_traits::Zero::is_zero(&rows[r][col]))?;
        rows.swap(col, piv);
        let inv = Scalar::recip(&rows[col][col])?;
        for c in col..=n {
            rows[col][c] = &rows[col][c] * &inv;
        }
        for r in 0..n {
            if r != col && !num_traits::Zero::is_zero(&rows[r][col]) {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let t = &f * &rows[col][c];
                    rows[r][c] -= t;
                }
            }
        }
    }
    Some(rows.iter().map(|r| r[n].clone()).collect())
}

/// Row-reduce in place and return the rank.
pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].vanishes()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].recip().expect("nonzero pivot in a field");
        let pivot_row: Vec<S> = rows[rank].iter().map(|x| x.times(&inv)).collect();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].vanishes() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..ncols {
                rows[r][c] = rows[r][c].minus(&f.times(&pivot_row[c]));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix given by rows.
pub fn det<S: Scalar>(mut rows: Vec<Vec<S>>, proto: &S) -> S {
    let n = rows.len();
    let mut acc = proto.one_like();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !rows[r][col].vanishes()) else {
            return proto.zero_like();
        };
        if piv != col {
            rows.swap(col, piv);
            acc = acc.negate();
        }
        let p = rows[col][col].clone();
        acc = acc.times(&p);
        let inv = p.recip().expect("nonzero pivot in a field");
        for r in (col + 1)..n {
            if rows[r][col].vanishes() {
                continue;
            }
            let f = rows[r][col].times(&inv);
            for c in col..n {
                rows[r][c] = rows[r][c].minus(&f.times(&rows[col][c]));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::int;

    #[test]
    fn det_and_rank() {
        let m = vec![vec![int(2), int(1)], vec![int(4), int(3)]];
        assert_eq!(det(m.clone(), &int(0)), int(2));
        assert_eq!(rank(m), 2);
        assert_eq!(rank(vec![vec![int(1), int(2)], vec![int(2), int(4)]]), 1);
    }
}
