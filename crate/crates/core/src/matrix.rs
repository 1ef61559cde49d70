//! Labelled exact matrices.
//!
//! [`Matrix<T>`] is dense and row-major, with a name for every row and
//! column (vertex names, or touch-graph edges named by their vertex of `F`).
//! [`Gf2Matrix`] packs each row into 64-bit words.

use std::fmt::Display;
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: Vec<String>,
    cols: Vec<String>,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T: Clone> Matrix<T> {
    pub fn new(rows: Vec<String>, cols: Vec<String>, data: Vec<T>) -> Result<Self> {
        if data.len() != rows.len() * cols.len() {
            return Err(Error::Dimension(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows.len(),
                cols.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(
        rows: Vec<String>,
        cols: Vec<String>,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let (r, c) = (rows.len(), cols.len());
        let mut data = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        let n = self.cols.len();
        self.data[i * n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        let n = self.cols.len();
        &self.data[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.nrows()).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols.clone(), self.rows.clone(), |i, j| {
            self.get(j, i).clone()
        })
    }

    /// The submatrix on the given row and column positions, keeping labels.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(
            rows.iter().map(|&i| self.rows[i].clone()).collect(),
            cols.iter().map(|&j| self.cols[j].clone()).collect(),
            |i, j| self.get(rows[i], cols[j]).clone(),
        )
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn relabel(mut self, rows: Vec<String>, cols: Vec<String>) -> Result<Self> {
        if rows.len() != self.rows.len() || cols.len() != self.cols.len() {
            return Err(Error::Dimension("relabelling changes the shape".into()));
        }
        self.rows = rows;
        self.cols = cols;
        Ok(self)
    }

    /// Rows of `self` followed by rows of `other`; columns must agree.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols.len() != other.cols.len() {
            return Err(Error::Dimension(format!(
                "stacking {} columns on {}",
                other.ncols(),
                self.ncols()
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows,
            cols: self.cols.clone(),
            data,
        })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
{
    pub fn zeros(rows: Vec<String>, cols: Vec<String>) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(labels: Vec<String>) -> Self {
        Self::from_fn(labels.clone(), labels, |i, j| {
            if i == j {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq,
{
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.nrows()).all(|i| {
                (0..self.ncols()).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    /// Matrix product; row labels from `self`, column labels from `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        Ok(Self::from_fn(
            self.rows.clone(),
            other.cols.clone(),
            |i, j| {
                (0..self.ncols()).fold(T::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
            },
        ))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Neg<Output = T>,
{
    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<T: Display + Clone> Matrix<T> {
    /// Tab-separated values with a header row of column labels and a
    /// leading column of row labels.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.cols.join("\t"));
        out.insert(0, '\t');
        out.push('\n');
        for i in 0..self.nrows() {
            out.push_str(&self.rows[i]);
            for x in self.row(i) {
                out.push('\t');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// `{rows, cols, entries}` with integers as JSON numbers when they fit
    /// in 64 bits and everything else as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<serde_json::Value>> = (0..self.nrows())
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        let s = x.to_string();
                        match s.parse::<i64>() {
                            Ok(n) => serde_json::Value::from(n),
                            Err(_) => serde_json::Value::from(s),
                        }
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(MatrixRecord {
            rows: &self.rows,
            cols: &self.cols,
            entries,
        })
        .expect("matrix records serialize")
    }

    /// Entries only, one bracketed row per line.
    pub fn pretty(&self) -> String {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.nrows() {
            out.push('[');
            let row: Vec<String> = (0..self.ncols())
                .map(|j| format!("{:>width$}", cells[i * self.ncols() + j]))
                .collect();
            out.push_str(&row.join(" "));
            out.push_str("]\n");
        }
        out
    }
}

#[derive(Serialize)]
struct MatrixRecord<'a, E: Serialize> {
    rows: &'a [String],
    cols: &'a [String],
    entries: Vec<Vec<E>>,
}

impl IntMatrix {
    /// Convenience constructor from small integers.
    pub fn from_i64(rows: Vec<String>, cols: Vec<String>, entries: &[&[i64]]) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Dimension("entry rows do not match labels".into()));
        }
        Ok(Self::from_fn(rows, cols, |i, j| {
            BigInt::from(entries[i][j])
        }))
    }

    /// Unlabelled small-integer matrix; labels are `0, 1, ...`.
    pub fn from_rows(entries: &[&[i64]]) -> Self {
        let r = entries.len();
        let c = entries.first().map_or(0, |row| row.len());
        Self::from_i64(index_labels(r), index_labels(c), entries).expect("rectangular input")
    }

    /// Entries as `i64`, panicking on overflow.
    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.rows()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_i64().expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn mod2(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.rows.clone(), self.cols.clone());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                if self.get(i, j).is_odd() {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.nrows())
                .all(|i| (0..self.ncols()).all(|j| *self.get(i, j) == -self.get(j, i).clone()))
    }

    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl RatMatrix {
    /// The integer matrix when every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        self.map(|x| x * k)
    }
}

pub fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A matrix over GF(2), one packed bit-row per matrix row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<String>,
    cols: Vec<String>,
    bits: Vec<Vec<u64>>,
}

impl Gf2Matrix {
    fn words(ncols: usize) -> usize {
        ncols.div_ceil(64)
    }

    pub fn zeros(rows: Vec<String>, cols: Vec<String>) -> Self {
        let w = Self::words(cols.len());
        let bits = vec![vec![0u64; w]; rows.len()];
        Self { rows, cols, bits }
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let mut m = Self::zeros(labels.clone(), labels);
        for i in 0..m.nrows() {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(
        rows: Vec<String>,
        cols: Vec<String>,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// From 0/1 rows; labels are `0, 1, ...`.
    pub fn from_rows(entries: &[&[u8]]) -> Self {
        let r = entries.len();
        let c = entries.first().map_or(0, |row| row.len());
        Self::from_fn(index_labels(r), index_labels(c), |i, j| {
            entries[i][j] & 1 == 1
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.bits[i][j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let mask = 1u64 << (j % 64);
        if value {
            self.bits[i][j / 64] |= mask;
        } else {
            self.bits[i][j / 64] &= !mask;
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i]
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<u64>> {
        self.bits
    }

    /// `row[target] += row[source]`.
    pub fn add_row(&mut self, source: usize, target: usize) {
        let src = self.bits[source].clone();
        for (t, s) in self.bits[target].iter_mut().zip(src) {
            *t ^= s;
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols.clone(), self.rows.clone(), |i, j| self.get(j, i))
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(
            rows.iter().map(|&i| self.rows[i].clone()).collect(),
            cols.iter().map(|&j| self.cols[j].clone()).collect(),
            |i, j| self.get(rows[i], cols[j]),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let mut out = Self::zeros(self.rows.clone(), other.cols.clone());
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                if self.get(i, k) {
                    for (o, b) in out.bits[i].iter_mut().zip(&other.bits[k]) {
                        *o ^= b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.ncols() {
            return Err(Error::Dimension("column counts differ".into()));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        let mut bits = self.bits.clone();
        bits.extend(other.bits.iter().cloned());
        Ok(Self {
            rows,
            cols: self.cols.clone(),
            bits,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows() == self.ncols()
            && (0..self.nrows()).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_int(&self) -> IntMatrix {
        Matrix::from_fn(self.rows.clone(), self.cols.clone(), |i, j| {
            BigInt::from(u8::from(self.get(i, j)))
        })
    }

    pub fn to_tsv(&self) -> String {
        self.to_int().to_tsv()
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.to_int().to_json()
    }

    /// One hex string per row. Column 0 is the most significant bit; rows
    /// are padded on the right to a whole number of nibbles.
    pub fn to_hex_rows(&self) -> Vec<String> {
        (0..self.nrows())
            .map(|i| {
                let n = self.ncols();
                let nibbles = n.div_ceil(4);
                (0..nibbles)
                    .map(|k| {
                        let mut v = 0u32;
                        for b in 0..4 {
                            let j = 4 * k + b;
                            v <<= 1;
                            if j < n && self.get(i, j) {
                                v |= 1;
                            }
                        }
                        char::from_digit(v, 16).expect("nibble")
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = IntMatrix::from_rows(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap().to_i64(), vec![vec![2, 1], vec![4, 3]]);
        assert_eq!(a.transpose().to_i64(), vec![vec![1, 3], vec![2, 4]]);
        assert!(a.mul(&IntMatrix::from_rows(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn tsv_has_headers() {
        let m = IntMatrix::from_i64(
            vec!["a".into(), "b".into()],
            vec!["a".into(), "b".into()],
            &[&[1, -1], &[0, 2]],
        )
        .unwrap();
        assert_eq!(m.to_tsv(), "\ta\tb\na\t1\t-1\nb\t0\t2\n");
        let j = m.to_json();
        assert_eq!(j["entries"][0][1], -1);
        assert_eq!(j["rows"][1], "b");
    }

    #[test]
    fn gf2_hex_rows() {
        let m = Gf2Matrix::from_rows(&[&[1, 1, 1], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(m.to_hex_rows(), vec!["e", "2", "8"]);
        let wide = Gf2Matrix::from_fn(index_labels(1), index_labels(70), |_, j| j == 69);
        assert!(wide.get(0, 69));
        assert_eq!(wide.to_hex_rows()[0].len(), 18);
    }

    #[test]
    fn gf2_product() {
        let a = Gf2Matrix::from_rows(&[&[1, 1], &[0, 1]]);
        let p = a.mul(&a).unwrap();
        assert_eq!(p, Gf2Matrix::identity(index_labels(2)));
    }

    #[test]
    fn mod2_reduction() {
        let m = IntMatrix::from_rows(&[&[2, -1], &[1, 0]]);
        assert_eq!(m.mod2(), Gf2Matrix::from_rows(&[&[0, 1], &[1, 0]]));
    }
}
