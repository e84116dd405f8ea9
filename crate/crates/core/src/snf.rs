//! Smith normal form and integer kernels by unimodular elimination.
//!
//! Every routine first runs on `i64` with checked arithmetic and repeats on
//! `BigInt` if any intermediate value overflows, so results are always exact.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::{Entry, IntMatrix, Matrix};

/// Invariant factors of a matrix, optionally with transforms `U`, `V`
/// satisfying `U * M * V = D`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d1 | d2 | ...`, all positive.
    pub factors: Vec<BigInt>,
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

pub fn smith_normal_form(m: &IntMatrix, with_transforms: bool) -> SmithForm {
    if let Some(small) = m.to_i64() {
        if let Some(done) = smith_in(small, with_transforms) {
            return done;
        }
    }
    smith_in(m.clone(), with_transforms).expect("arbitrary precision never overflows")
}

struct Transforms<T> {
    u: Matrix<T>,
    v: Matrix<T>,
}

fn smith_in<T: Entry>(mut a: Matrix<T>, track: bool) -> Option<SmithForm> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut tr = track.then(|| Transforms {
        u: Matrix::<T>::identity(rows),
        v: Matrix::<T>::identity(cols),
    });
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_in(&a, k, k) else {
            break;
        };
        swap_rows(&mut a, &mut tr, k, pi);
        swap_cols(&mut a, &mut tr, k, pj);
        loop {
            // Clear column k below the pivot.
            let mut leftover = false;
            for i in k + 1..rows {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let q = a.get(i, k).round_quot(a.get(k, k))?;
                row_op(&mut a, &mut tr, i, k, &q)?;
                leftover |= !a.get(i, k).is_zero();
            }
            if leftover {
                let i = (k + 1..rows)
                    .filter(|&i| !a.get(i, k).is_zero())
                    .min_by(|&x, &y| a.get(x, k).cmp_abs(a.get(y, k)))?;
                swap_rows(&mut a, &mut tr, k, i);
                continue;
            }
            // Clear row k right of the pivot; column k is zero elsewhere.
            for j in k + 1..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let q = a.get(k, j).round_quot(a.get(k, k))?;
                col_op(&mut a, &mut tr, j, k, &q)?;
                leftover |= !a.get(k, j).is_zero();
            }
            if leftover {
                let j = (k + 1..cols)
                    .filter(|&j| !a.get(k, j).is_zero())
                    .min_by(|&x, &y| a.get(k, x).cmp_abs(a.get(k, y)))?;
                swap_cols(&mut a, &mut tr, k, j);
                continue;
            }
            // Repair divisibility: fold an offending row into row k.
            let pivot = a.get(k, k).clone();
            let offender =
                (k + 1..rows).find(|&i| (k + 1..cols).any(|j| !a.get(i, j).divisible_by(&pivot)));
            match offender {
                Some(i) => row_op(&mut a, &mut tr, k, i, &T::one().neg()?)?,
                None => break,
            }
        }
        if a.get(k, k).is_negative() {
            a.negate_row(k)?;
            if let Some(t) = tr.as_mut() {
                t.u.negate_row(k)?;
            }
        }
        k += 1;
    }
    Some(SmithForm {
        factors: (0..k).map(|i| a.get(i, i).to_big()).collect(),
        transforms: tr.map(|t| (t.u.to_big(), t.v.to_big())),
    })
}

fn min_abs_in<T: Entry>(a: &Matrix<T>, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in r0..a.rows() {
        for (c, v) in a.row(r).iter().enumerate().skip(c0) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| v.cmp_abs(a.get(br, bc)).is_lt()) {
                best = Some((r, c));
            }
        }
    }
    best
}

fn swap_rows<T: Entry>(a: &mut Matrix<T>, tr: &mut Option<Transforms<T>>, x: usize, y: usize) {
    a.swap_rows(x, y);
    if let Some(t) = tr.as_mut() {
        t.u.swap_rows(x, y);
    }
}

fn swap_cols<T: Entry>(a: &mut Matrix<T>, tr: &mut Option<Transforms<T>>, x: usize, y: usize) {
    a.swap_cols(x, y);
    if let Some(t) = tr.as_mut() {
        t.v.swap_cols(x, y);
    }
}

fn row_op<T: Entry>(
    a: &mut Matrix<T>,
    tr: &mut Option<Transforms<T>>,
    target: usize,
    source: usize,
    q: &T,
) -> Option<()> {
    a.row_sub_mul(target, source, q)?;
    if let Some(t) = tr.as_mut() {
        t.u.row_sub_mul(target, source, q)?;
    }
    Some(())
}

fn col_op<T: Entry>(
    a: &mut Matrix<T>,
    tr: &mut Option<Transforms<T>>,
    target: usize,
    source: usize,
    q: &T,
) -> Option<()> {
    a.col_sub_mul(target, source, q)?;
    if let Some(t) = tr.as_mut() {
        t.v.col_sub_mul(target, source, q)?;
    }
    Some(())
}

/// A recorded elementary column operation.
#[derive(Clone, Debug)]
enum ColOp<T> {
    Swap(usize, usize),
    /// `col[target] -= q * col[source]`.
    SubMul {
        target: usize,
        source: usize,
        q: T,
    },
}

/// Column echelon form `M * V = [E | 0]` with `E` of full column rank.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    /// Number of pivot columns, i.e. the rank of `M`.
    pub rank: usize,
    /// The unimodular `V`; its trailing `cols - rank` columns span `ker M`.
    pub transform: IntMatrix,
    ops: Vec<ColOp<BigInt>>,
}

impl ColumnEchelon {
    pub fn new(m: &IntMatrix) -> Self {
        if let Some(small) = m.to_i64() {
            if let Some(done) = echelon_in(small) {
                return done;
            }
        }
        echelon_in(m.clone()).expect("arbitrary precision never overflows")
    }

    /// Basis of the integer kernel as matrix columns.
    pub fn kernel(&self) -> IntMatrix {
        self.transform.columns_from(self.rank)
    }

    pub fn kernel_rank(&self) -> usize {
        self.transform.cols() - self.rank
    }

    /// Coordinates `Y` with `K * Y = B`, where `K` is [`ColumnEchelon::kernel`].
    ///
    /// Computes `V^-1 * B` by replaying the inverse operations; the leading
    /// `rank` rows vanish exactly when every column of `B` lies in `ker M`.
    pub fn kernel_coordinates(&self, b: &IntMatrix) -> Result<IntMatrix> {
        if b.rows() != self.transform.rows() {
            return Err(Error::Dimension(format!(
                "right-hand side has {} rows, kernel lives in dimension {}",
                b.rows(),
                self.transform.rows()
            )));
        }
        let z = match (b.to_i64(), self.small_ops()) {
            (Some(bs), Some(ops)) => replay_inverse(bs, &ops).map(|z| z.to_big()),
            _ => None,
        };
        let z = match z {
            Some(z) => z,
            None => replay_inverse(b.clone(), &self.ops).expect("arbitrary precision"),
        };
        for r in 0..self.rank {
            if let Some(col) = z.row(r).iter().position(|v| !Entry::is_zero(v)) {
                return Err(Error::NotInKernel { col });
            }
        }
        Ok(z.rows_from(self.rank))
    }

    fn small_ops(&self) -> Option<Vec<ColOp<i64>>> {
        self.ops
            .iter()
            .map(|op| match op {
                ColOp::Swap(a, b) => Some(ColOp::Swap(*a, *b)),
                ColOp::SubMul { target, source, q } => Some(ColOp::SubMul {
                    target: *target,
                    source: *source,
                    q: i64::from_big(q)?,
                }),
            })
            .collect()
    }
}

fn echelon_in<T: Entry>(mut a: Matrix<T>) -> Option<ColumnEchelon> {
    let cols = a.cols();
    let mut v = Matrix::<T>::identity(cols);
    let mut ops = Vec::new();
    let mut c = 0;
    for r in 0..a.rows() {
        if c == cols {
            break;
        }
        loop {
            let best = (c..cols)
                .filter(|&j| !a.get(r, j).is_zero())
                .min_by(|&x, &y| a.get(r, x).cmp_abs(a.get(r, y)));
            let Some(j) = best else { break };
            if j != c {
                a.swap_cols(c, j);
                v.swap_cols(c, j);
                ops.push(ColOp::Swap(c, j));
            }
            let mut leftover = false;
            for j in c + 1..cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let q = a.get(r, j).round_quot(a.get(r, c))?;
                a.col_sub_mul(j, c, &q)?;
                v.col_sub_mul(j, c, &q)?;
                leftover |= !a.get(r, j).is_zero();
                ops.push(ColOp::SubMul {
                    target: j,
                    source: c,
                    q: q.to_big(),
                });
            }
            if !leftover {
                c += 1;
                break;
            }
        }
    }
    Some(ColumnEchelon {
        rank: c,
        transform: v.to_big(),
        ops,
    })
}

/// Applies `E^-1` on the left for each recorded `E`, in order.
fn replay_inverse<T: Entry>(mut z: Matrix<T>, ops: &[ColOp<T>]) -> Option<Matrix<T>> {
    for op in ops {
        match op {
            ColOp::Swap(a, b) => z.swap_rows(*a, *b),
            // (I - q e_s e_t^T)^-1 = I + q e_s e_t^T: row s += q row t.
            ColOp::SubMul { target, source, q } => {
                z.row_sub_mul(*source, *target, &q.neg()?)?;
            }
        }
    }
    Some(z)
}

/// Basis of `{v : M v = 0}` over the integers, as matrix columns.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    ColumnEchelon::new(m).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&big(rows), false)
            .factors
            .iter()
            .map(|d| i64::from_big(d).unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 0]]), vec![2]);
        assert_eq!(factors(&[vec![1, 2], vec![3, 4]]), vec![1, 2]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let m = big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let snf = smith_normal_form(&m, true);
        let (u, v) = snf.transforms.clone().unwrap();
        let d = u.mul(&m).unwrap().mul(&v).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let want = if r == c && r < snf.rank() {
                    snf.factors[r].clone()
                } else {
                    BigInt::from(0)
                };
                assert_eq!(d.get(r, c), &want);
            }
        }
        assert_eq!(
            snf.factors,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn kernel_of_row_vector() {
        let k = integer_kernel(&big(&[vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        let (a, b) = (k.get(0, 0).clone(), k.get(1, 0).clone());
        assert_eq!(&a + &b, BigInt::from(0));
        assert_eq!(a.magnitude(), &num_bigint::BigUint::from(1u8));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert_eq!(integer_kernel(&IntMatrix::identity(3)).cols(), 0);
    }

    #[test]
    fn kernel_coordinates_detect_non_members() {
        let m = big(&[vec![1, 1, 0]]);
        let e = ColumnEchelon::new(&m);
        let inside = big(&[vec![2], vec![-2], vec![5]]);
        let y = e.kernel_coordinates(&inside).unwrap();
        assert_eq!(e.kernel().mul(&y).unwrap(), inside);
        let outside = big(&[vec![1], vec![0], vec![0]]);
        assert_eq!(
            e.kernel_coordinates(&outside).unwrap_err(),
            Error::NotInKernel { col: 0 }
        );
    }

    #[test]
    fn big_entries_fall_back() {
        let huge = i64::MAX / 2;
        let m = big(&[vec![huge, huge - 1], vec![huge - 1, huge - 2]]);
        // det = huge(huge-2) - (huge-1)^2 = -1
        assert_eq!(
            smith_normal_form(&m, false).factors,
            vec![BigInt::from(1), BigInt::from(1)]
        );
    }
}
