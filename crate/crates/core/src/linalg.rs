//! Exact dense linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};

pub type Matrix<T> = Vec<Vec<T>>;

/// `G = L D Lᵀ` with `L` unit lower triangular.
#[derive(Clone, Debug, PartialEq)]
pub struct Ldlt {
    /// `lower[i][j]` for `j < i`; the diagonal and upper part are unused.
    pub lower: Matrix<Rational>,
    pub pivots: Vec<Rational>,
}

/// LDLᵀ without pivoting. Fails with the index of the first pivot that is
/// not strictly positive, so success certifies positive-definiteness.
pub fn ldlt_positive(m: &[Vec<Rational>]) -> Result<Ldlt, usize> {
    let n = m.len();
    let mut lower = vec![vec![Rational::zero(); n]; n];
    let mut pivots: Vec<Rational> = Vec::with_capacity(n);
    for i in 0..n {
        for j in 0..i {
            let mut s = m[i][j].clone();
            for k in 0..j {
                s -= &lower[i][k] * &lower[j][k] * &pivots[k];
            }
            lower[i][j] = s / &pivots[j];
        }
        let mut d = m[i][i].clone();
        for k in 0..i {
            d -= &lower[i][k] * &lower[i][k] * &pivots[k];
        }
        if !d.is_positive() {
            return Err(i);
        }
        lower[i][i] = Rational::one();
        pivots.push(d);
    }
    Ok(Ldlt { lower, pivots })
}

/// Gauss–Jordan inverse; `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Matrix<Rational>> {
    let n = m.len();
    let mut a: Matrix<Rational> = m.to_vec();
    let mut inv = identity::<Rational>(n);
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &piv;
            inv[col][j] /= &piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

pub fn identity<T: Scalar>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

/// Determinant by Bareiss fraction-free elimination; every intermediate
/// value is an integer.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank by Gaussian elimination. Zero tests are exact, so this is only
/// meaningful for exact scalar types.
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut a = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][col].clone();
        for i in r + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone() / piv.clone();
            for j in col..ncols {
                let t = f.clone() * a[r][j].clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Smith normal form `U A V = D` of a square integer matrix. Only the left
/// transform is kept; the diagonal is nonnegative and each entry divides the
/// next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: Matrix<BigInt>,
}

pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SmithForm {
    let n = m.len();
    let mut a = m.to_vec();
    let mut u: Matrix<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();

    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in 0..n {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                        let v = &q * &u[t][j];
                        u[i][j] -= v;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..n).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad_row {
                Some(i) => {
                    for j in 0..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                        let v = u[i][j].clone();
                        u[t][j] += v;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for j in 0..n {
                a[t][j] = -a[t][j].clone();
                u[t][j] = -u[t][j].clone();
            }
        }
    }
    SmithForm {
        diagonal: (0..n).map(|i| a[i][i].clone()).collect(),
        left: u,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn ints(m: &[&[i64]]) -> Matrix<BigInt> {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn rats(m: &[&[i64]]) -> Matrix<Rational> {
        m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn ldlt_of_a2() {
        let f = ldlt_positive(&rats(&[&[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(f.pivots, vec![int(2), rat(3, 2)]);
        assert_eq!(f.lower[1][0], rat(-1, 2));
    }

    #[test]
    fn ldlt_rejects_indefinite() {
        assert_eq!(ldlt_positive(&rats(&[&[2, 3], &[3, 2]])), Err(1));
        assert_eq!(ldlt_positive(&rats(&[&[0]])), Err(0));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = rats(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let inv = inverse(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: Rational = (0..3).map(|k| &m[i][k] * &inv[k][j]).sum();
                assert_eq!(s, int((i == j) as i64));
            }
        }
        assert!(inverse(&rats(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn bareiss_matches_hand_values() {
        assert_eq!(bareiss_det(&ints(&[&[2, -1], &[-1, 2]])), BigInt::from(3));
        assert_eq!(bareiss_det(&ints(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            bareiss_det(&ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
    }

    #[test]
    fn rank_counts_independent_rows() {
        let m = rats(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank::<Rational>(&[]), 0);
        assert_eq!(rank(&rats(&[&[0, 0]])), 0);
    }

    #[test]
    fn smith_form_of_small_matrices() {
        let a2 = ints(&[&[2, -1], &[-1, 2]]);
        let s = smith_normal_form(&a2);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(3)]);

        let m = ints(&[&[2, 0], &[0, 3]]);
        assert_eq!(smith_normal_form(&m).diagonal, vec![BigInt::from(1), BigInt::from(6)]);

        let m = ints(&[&[4, 0], &[0, 4]]);
        assert_eq!(smith_normal_form(&m).diagonal, vec![BigInt::from(4), BigInt::from(4)]);
    }

    #[test]
    fn smith_left_transform_is_unimodular() {
        let m = ints(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let s = smith_normal_form(&m);
        assert_eq!(bareiss_det(&s.left).abs(), BigInt::one());
        assert_eq!(s.diagonal.iter().product::<BigInt>(), BigInt::from(4));
    }
}
