//! Exact elimination kernels: GF(2) rank, fraction-free (Bareiss) rank and
//! determinant over the integers, and Gauss-Jordan inversion over the
//! rationals. Pivots are always the first nonzero entry in column order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Gf2Matrix, IntMatrix, Matrix, RatMatrix};

/// Entry types that embed in the rationals.
pub trait Exact: Clone {
    fn to_rational(&self) -> BigRational;
}

impl Exact for BigInt {
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
}

impl Exact for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    let ncols = m.ncols();
    let mut rows = m.clone().into_rows();
    let mut rank = 0;
    for col in 0..ncols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn gf2_nullity(m: &Gf2Matrix) -> usize {
    m.ncols() - gf2_rank(m)
}

/// Inverse over GF(2).
pub fn gf2_inverse(m: &Gf2Matrix) -> Result<Gf2Matrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.ncols(),
        });
    }
    let mut a = m.clone();
    let mut inv = Gf2Matrix::from_fn(m.col_labels().to_vec(), m.row_labels().to_vec(), |i, j| {
        i == j
    });
    for col in 0..n {
        let p = (col..n).find(|&r| a.get(r, col)).ok_or(Error::Singular)?;
        if p != col {
            a.add_row(p, col);
            inv.add_row(p, col);
        }
        for r in 0..n {
            if r != col && a.get(r, col) {
                a.add_row(col, r);
                inv.add_row(col, r);
            }
        }
    }
    Ok(inv)
}

/// Row space equality over GF(2).
pub fn gf2_row_space_equal(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<bool> {
    let stacked = a.stack(b)?;
    let r = gf2_rank(&stacked);
    Ok(gf2_rank(a) == r && gf2_rank(b) == r)
}

/// Rows scaled to integers by their denominators' lcm.
fn integer_rows<T: Exact>(m: &Matrix<T>) -> Vec<Vec<BigInt>> {
    m.rows()
        .map(|row| {
            let q: Vec<BigRational> = row.iter().map(Exact::to_rational).collect();
            let l = q.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            q.iter().map(|x| (x * &l).to_integer()).collect()
        })
        .collect()
}

/// Fraction-free elimination to row echelon form in place. Returns the rank
/// and the number of row swaps.
fn bareiss(a: &mut [Vec<BigInt>], ncols: usize) -> (usize, usize) {
    let nrows = a.len();
    let mut rank = 0;
    let mut swaps = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            swaps += 1;
        }
        let pivot = a[rank][col].clone();
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank][col + 1..ncols];
        for row in bottom {
            let factor = row[col].clone();
            for (x, y) in row[col + 1..ncols].iter_mut().zip(pivot_row) {
                let num = &pivot * &*x - &factor * y;
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                *x = q;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, swaps)
}

/// Rank over the rationals.
pub fn rat_rank<T: Exact>(m: &Matrix<T>) -> usize {
    let mut rows = integer_rows(m);
    bareiss(&mut rows, m.ncols()).0
}

pub fn rat_nullity<T: Exact>(m: &Matrix<T>) -> usize {
    m.ncols() - rat_rank(m)
}

/// Exact determinant.
pub fn rat_det<T: Exact>(m: &Matrix<T>) -> Result<BigRational> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.ncols(),
        });
    }
    if n == 0 {
        return Ok(BigRational::one());
    }
    let scale: BigInt = m
        .rows()
        .map(|row| {
            row.iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.to_rational().denom()))
        })
        .product();
    let mut rows = integer_rows(m);
    let (rank, swaps) = bareiss(&mut rows, n);
    if rank < n {
        return Ok(BigRational::zero());
    }
    let mut det = rows[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        det = -det;
    }
    Ok(BigRational::new(det, scale))
}

/// Exact determinant of an integer matrix.
pub fn int_det(m: &IntMatrix) -> Result<BigInt> {
    let d = rat_det(m)?;
    debug_assert!(d.is_integer());
    Ok(d.to_integer())
}

/// Exact inverse; the result satisfies `m * inverse = I`, which is checked.
/// Row labels of the inverse are the column labels of `m` and vice versa.
pub fn rat_inverse<T: Exact>(m: &Matrix<T>) -> Result<RatMatrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.ncols(),
        });
    }
    let q = m.map(Exact::to_rational);
    let mut a: Vec<Vec<BigRational>> = q.rows().map(<[BigRational]>::to_vec).collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(p, col);
        inv.swap(p, col);
        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &pivot;
            inv[col][j] = &inv[col][j] / &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let (x, y) = (&f * &a[col][j], &f * &inv[col][j]);
                a[r][j] -= x;
                inv[r][j] -= y;
            }
        }
    }
    let result = Matrix::from_fn(q.col_labels().to_vec(), q.row_labels().to_vec(), |i, j| {
        inv[i][j].clone()
    });
    let check = q.mul(&result)?;
    if !check.is_identity() {
        return Err(Error::Internal("inverse check failed".into()));
    }
    Ok(result)
}

/// Row space equality over the rationals: `rank(a) = rank(b) = rank([a; b])`.
pub fn row_space_equal<T: Exact>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool> {
    if a.ncols() != b.ncols() {
        return Err(Error::Dimension(format!(
            "{} columns against {}",
            a.ncols(),
            b.ncols()
        )));
    }
    let stacked = a.stack(b)?;
    let r = rat_rank(&stacked);
    Ok(rat_rank(a) == r && rat_rank(b) == r)
}

pub fn is_integral(m: &RatMatrix) -> bool {
    m.rows().all(|r| r.iter().all(|x| x.is_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::index_labels;

    #[test]
    fn gf2_all_ones() {
        let m = Gf2Matrix::from_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(gf2_rank(&m), 1);
        assert_eq!(gf2_nullity(&m), 2);
        let id = Gf2Matrix::identity(index_labels(6));
        assert_eq!(gf2_nullity(&id), 0);
    }

    #[test]
    fn rational_rank_all_ones() {
        let m = IntMatrix::from_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(rat_rank(&m), 1);
        assert_eq!(rat_nullity(&m), 2);
        let id = IntMatrix::identity(index_labels(4));
        assert_eq!(rat_rank(&id), 4);
    }

    #[test]
    fn determinants() {
        let id = IntMatrix::identity(index_labels(5));
        assert_eq!(int_det(&id).unwrap(), BigInt::one());
        let m = IntMatrix::from_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(int_det(&m).unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(int_det(&m).unwrap(), BigInt::from(6));
        assert!(matches!(
            rat_det(&IntMatrix::from_rows(&[&[1, 2]])),
            Err(Error::NonSquare { .. })
        ));
        let half = RatMatrix::from_fn(index_labels(1), index_labels(1), |_, _| {
            BigRational::new(1.into(), 2.into())
        });
        assert_eq!(
            rat_det(&half).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn inverse_and_singular() {
        let m = IntMatrix::from_rows(&[&[2, 1], &[1, 1]]);
        let inv = rat_inverse(&m).unwrap();
        assert_eq!(
            inv.to_integer().unwrap().to_i64(),
            vec![vec![1, -1], vec![-1, 2]]
        );
        let s = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(rat_inverse(&s), Err(Error::Singular)));
    }

    #[test]
    fn gf2_inverse_round_trip() {
        let m = Gf2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let inv = gf2_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Gf2Matrix::identity(index_labels(3)));
        let s = Gf2Matrix::from_rows(&[&[1, 1], &[1, 1]]);
        assert!(gf2_inverse(&s).is_err());
    }

    #[test]
    fn row_spaces() {
        let a = IntMatrix::from_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = IntMatrix::from_rows(&[&[1, 2, 1], &[1, 0, -1]]);
        assert!(row_space_equal(&a, &a).unwrap());
        assert!(row_space_equal(&a, &b).unwrap());
        let z = IntMatrix::zeros(index_labels(2), index_labels(3));
        assert!(!row_space_equal(&a, &z).unwrap());
        let wrong = IntMatrix::from_rows(&[&[1, 1]]);
        assert!(row_space_equal(&a, &wrong).is_err());
    }
}
