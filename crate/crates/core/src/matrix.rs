//! Dense integer matrices and the tuple indexing used for chain groups.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Scalar ring operations needed by the elimination routines.
///
/// Every fallible method returns `None` on overflow so that a fixed-width
/// run can be abandoned and repeated with arbitrary precision.
pub trait Entry: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn neg(&self) -> Option<Self>;
    /// `self - q * b`.
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    /// Quotient of division rounded toward the nearest integer.
    fn round_quot(&self, d: &Self) -> Option<Self>;
    fn divisible_by(&self, d: &Self) -> bool;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn round_quot(&self, d: &Self) -> Option<Self> {
        let q = self.checked_div_euclid(*d)?;
        let r = self.checked_rem_euclid(*d)?;
        // r lies in [0, |d|); step toward the nearer multiple.
        if r.checked_mul(2)? > d.checked_abs()? {
            if *d > 0 {
                q.checked_add(1)
            } else {
                q.checked_sub(1)
            }
        } else {
            Some(q)
        }
    }
    fn divisible_by(&self, d: &Self) -> bool {
        *d != 0 && (self.checked_rem(*d) == Some(0))
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn round_quot(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_mod_floor(d);
        // r has the sign of d with |r| < |d|, so q + 1 leaves r - d.
        let twice: BigInt = &r * 2;
        if twice.magnitude() > d.magnitude() {
            Some(q + 1)
        } else {
            Some(q)
        }
    }
    fn divisible_by(&self, d: &Self) -> bool {
        !Zero::is_zero(d) && Zero::is_zero(&(self % d))
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix with arbitrary-precision entries; the public currency of the crate.
pub type IntMatrix = Matrix<BigInt>;

impl<T: Entry> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Entry::is_zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &T)> {
        self.data
            .iter()
            .position(|v| !v.is_zero())
            .map(|p| (p / self.cols, p % self.cols, &self.data[p]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    /// Columns `from..` as a new matrix.
    pub fn columns_from(&self, from: usize) -> Self {
        let cols = self.cols - from;
        let mut out = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..(r + 1) * cols].clone_from_slice(&self.row(r)[from..]);
        }
        out
    }

    /// Rows `from..` as a new matrix.
    pub fn rows_from(&self, from: usize) -> Self {
        Matrix {
            rows: self.rows - from,
            cols: self.cols,
            data: self.data[from * self.cols..].to_vec(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] -= q * row[source]`.
    pub fn row_sub_mul(&mut self, target: usize, source: usize, q: &T) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        let c = self.cols;
        let (t, s) = if target < source {
            let (head, tail) = self.data.split_at_mut(source * c);
            (&mut head[target * c..(target + 1) * c], &tail[..c])
        } else {
            let (head, tail) = self.data.split_at_mut(target * c);
            (&mut tail[..c], &head[source * c..(source + 1) * c])
        };
        for (x, y) in t.iter_mut().zip(s) {
            if !y.is_zero() {
                *x = x.sub_mul(q, y)?;
            }
        }
        Some(())
    }

    /// `col[target] -= q * col[source]`.
    pub fn col_sub_mul(&mut self, target: usize, source: usize, q: &T) -> Option<()> {
        if q.is_zero() {
            return Some(());
        }
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + source];
            if !s.is_zero() {
                let v = self.data[r * self.cols + target].sub_mul(q, s)?;
                self.data[r * self.cols + target] = v;
            }
        }
        Some(())
    }

    pub fn negate_row(&mut self, r: usize) -> Option<()> {
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = x.neg()?;
        }
        Some(())
    }

    pub fn negate_col(&mut self, c: usize) -> Option<()> {
        for r in 0..self.rows {
            let v = self.data[r * self.cols + c].neg()?;
            self.data[r * self.cols + c] = v;
        }
        Some(())
    }

    pub fn to_big(&self) -> IntMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Entry::to_big).collect(),
        }
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Adds `v` to the entry at `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    /// Narrow to machine integers when every entry fits.
    pub fn to_i64(&self) -> Option<Matrix<i64>> {
        let data = self
            .data
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if Zero::is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !Zero::is_zero(b) {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Sparse text dump: a `dims R C` header, then `row col value` per nonzero.
    pub fn dump(&self) -> String {
        let mut s = format!("dims {} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !Zero::is_zero(v) {
                    s.push_str(&format!("{r} {c} {v}\n"));
                }
            }
        }
        s
    }

    /// Inverse of [`IntMatrix::dump`].
    pub fn parse_dump(text: &str) -> Result<IntMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "missing dims header".into(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let bad = |line: usize, reason: &str| Error::Parse {
            line: line + 1,
            reason: reason.to_string(),
        };
        if parts.len() != 3 || parts[0] != "dims" {
            return Err(bad(0, "expected `dims R C`"));
        }
        let rows: usize = parts[1].parse().map_err(|_| bad(0, "bad row count"))?;
        let cols: usize = parts[2].parse().map_err(|_| bad(0, "bad column count"))?;
        let mut m = IntMatrix::zeros(rows, cols);
        for (i, line) in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(bad(i, "expected `row col value`"));
            }
            let r: usize = f[0].parse().map_err(|_| bad(i, "bad row"))?;
            let c: usize = f[1].parse().map_err(|_| bad(i, "bad column"))?;
            let v: BigInt = f[2].parse().map_err(|_| bad(i, "bad value"))?;
            if r >= rows || c >= cols {
                return Err(bad(i, "index out of range"));
            }
            m.set(r, c, v);
        }
        Ok(m)
    }
}

/// Bijection between k-tuples over `0..n` and `0..n^k`, leftmost coordinate
/// most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleIndex {
    pub arity: u32,
    pub order: usize,
}

impl TupleIndex {
    pub fn new(arity: u32, order: usize) -> Self {
        TupleIndex { arity, order }
    }

    pub fn len(&self) -> usize {
        self.order.pow(self.arity)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity as usize);
        tuple.iter().fold(0, |acc, &x| acc * self.order + x)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.arity as usize];
        for slot in t.iter_mut().rev() {
            *slot = index % self.order;
            index /= self.order;
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_index_round_trips() {
        let ix = TupleIndex::new(3, 4);
        for i in 0..ix.len() {
            assert_eq!(ix.index(&ix.tuple(i)), i);
        }
        assert_eq!(ix.index(&[1, 0, 0]), 16);
    }

    #[test]
    fn round_quotient_is_nearest() {
        assert_eq!(7i64.round_quot(&2), Some(3));
        assert_eq!((-7i64).round_quot(&2), Some(-4));
        assert_eq!(8i64.round_quot(&-3), Some(-3));
        let b = BigInt::from(-8);
        assert_eq!(b.round_quot(&BigInt::from(3)), Some(BigInt::from(-3)));
    }

    #[test]
    fn dump_round_trips() {
        let m = IntMatrix::from_i64_rows(&[vec![0, 2, 0], vec![-1, 0, 5]]).unwrap();
        assert_eq!(IntMatrix::parse_dump(&m.dump()).unwrap(), m);
        assert!(m.dump().starts_with("dims 2 3\n"));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(i64::MAX.sub_mul(&-1, &1), None);
    }
}
