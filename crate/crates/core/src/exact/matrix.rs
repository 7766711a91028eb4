//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Scalar;

/// Dense integer matrix stored row-major.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// Rank by Bareiss elimination. Columns without a pivot are skipped, so the
/// matrix may be rectangular and rank-deficient; every division is exact.
pub fn rank_int(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det_int(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(
        m.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if sign {
        -prev
    } else {
        prev
    }
}

/// Scale each row by the lcm of its denominators, producing an integer
/// matrix with the same rank.
pub fn clear_denominators(m: &[Vec<Scalar>]) -> IntMatrix {
    m.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

pub fn rank_rational(m: &[Vec<Scalar>]) -> usize {
    rank_int(&clear_denominators(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(det_int(&im(&[&[2, 3], &[1, 4]])), BigInt::from(5));
        assert_eq!(det_int(&im(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_int(&im(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(
            det_int(&im(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
    }

    #[test]
    fn rank_skips_empty_columns() {
        let m = im(&[&[0, 1, 2], &[0, 2, 4], &[0, 0, 1]]);
        assert_eq!(rank_int(&m), 2);
        assert_eq!(rank_int(&im(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_int(&im(&[&[1, 2, 3, 4]])), 1);
    }

    #[test]
    fn rational_rows_are_cleared() {
        let m = vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), ratio(1, 1)],
        ];
        assert_eq!(rank_rational(&m), 1);
    }
}
