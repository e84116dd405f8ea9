//! Boundary matrices `d2: C2 -> C1` and `d3: C3 -> C2` with `Ck = Z[X^k]`,
//! tuples indexed lexicographically with the leftmost coordinate most
//! significant.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::identities::{BmIdentity, LetterPattern, Word};
use crate::matrix::{IntMatrix, TupleIndex};
use crate::quasigroup::CayleyTable;
use crate::trees::{identity_q_difference, FormalChain};

/// Column `(x, y)` is `t e_x + s e_y - e_{xy}`.
pub fn d2_matrix(q: &CayleyTable, t: i64, s: i64) -> IntMatrix {
    let n = q.order();
    let cols = TupleIndex::new(2, n);
    let mut m = IntMatrix::zeros(n, n * n);
    for x in 0..n {
        for y in 0..n {
            let c = cols.index(&[x, y]);
            m.add_at(x, c, t);
            m.add_at(y, c, s);
            m.add_at(q.mul(x, y), c, -1);
        }
    }
    m
}

/// Chain terms with coefficients evaluated at integer `t`, `s`.
fn evaluated_terms(chain: &FormalChain, t: i64, s: i64) -> Vec<(Word, Word, i64)> {
    chain
        .terms()
        .map(|(a, b, p)| {
            let c = p
                .evaluate(t, s)
                .expect("boundary coefficients are small polynomials");
            (a.clone(), b.clone(), c)
        })
        .filter(|(_, _, c)| *c != 0)
        .collect()
}

/// Matrix of a symbolic chain in `arity` variables: column `u` is the chain
/// with its pairs evaluated at `u`.
pub fn chain_matrix(q: &CayleyTable, chain: &FormalChain, arity: u32, t: i64, s: i64) -> IntMatrix {
    let n = q.order();
    let terms = evaluated_terms(chain, t, s);
    let cols = TupleIndex::new(arity, n);
    let mut m = IntMatrix::zeros(n * n, cols.len());
    for c in 0..cols.len() {
        let u = cols.tuple(c);
        for (a, b, v) in &terms {
            let row = a.evaluate(q, &u) * n + b.evaluate(q, &u);
            m.add_at(row, c, *v);
        }
    }
    m
}

/// `Q(Vi) - Q(Vj)` evaluated on every triple (quadruple for `X`).
///
/// Defined whether or not `q` satisfies `id`; only then is it a boundary.
pub fn d3_matrix(q: &CayleyTable, id: &BmIdentity, t: i64, s: i64) -> IntMatrix {
    chain_matrix(q, &identity_q_difference(id), id.variables() as u32, t, s)
}

/// `Ok` when `d2 * d3 = 0`; otherwise the first nonzero entry.
pub fn verify_complex(q: &CayleyTable, id: &BmIdentity, t: i64, s: i64) -> Result<()> {
    let product = d2_matrix(q, t, s).mul(&d3_matrix(q, id, t, s))?;
    match product.first_nonzero() {
        None => Ok(()),
        Some((row, col, v)) => Err(Error::NotAComplex {
            row,
            col,
            value: v.to_string(),
        }),
    }
}

/// Inclusion `C3(V) -> C3(X)` sending `(x, y, z)` to the pattern's
/// quadruple, e.g. `(x, x, y, z)` for `A`.
pub fn identification_matrix(pattern: LetterPattern, n: usize) -> IntMatrix {
    let from = TupleIndex::new(3, n);
    let to = TupleIndex::new(4, n);
    let mut f = IntMatrix::zeros(to.len(), from.len());
    for c in 0..from.len() {
        let u = from.tuple(c);
        let image: Vec<usize> = pattern.leaves().iter().map(|&i| u[i]).collect();
        f.set(to.index(&image), c, BigInt::from(1));
    }
    f
}

/// Published third boundaries, one per defining identity, in the variables
/// `x, y, z` (and `w` for four-variable identities).
pub const PUBLISHED_BOUNDARIES: [(&str, &str); 39] = [
    (
        "A25",
        "st(x,y) + s(xy,z) + (x,(xy)z) - t^2(x,x) - t(xx,y) - ((xx)y,z)",
    ),
    (
        "D25",
        "st(y,z) + s(yz,x) + (x,(yz)x) - t^2(x,y) - t(xy,z) - ((xy)z,x)",
    ),
    (
        "F14",
        "s^2(z,z) + s(y,(zz)) + (x,y(zz)) - st(y,z) - t(x,(yz)) - (x(yz),z)",
    ),
    (
        "D14",
        "s^2(z,x) + s(y,zx) + (x,y(zx)) - st(y,z) - t(x,yz) - (x(yz),x)",
    ),
    (
        "A23",
        "st(x,y) + s(xy,z) + (x,(xy)z) - s(y,z) - t(x,x) - (xx,yz)",
    ),
    (
        "F34",
        "t(x,y) + s(z,z) + (xy,zz) - st(y,z) - t(x,yz) - (x(yz),z)",
    ),
    (
        "B25",
        "st(y,x) + s(yx,z) + (x,(yx)z) - t^2(x,y) - (xy,x)t - ((xy)x,z)",
    ),
    (
        "E14",
        "s^2(z,y) + s(y,zy) + (x,y(zy)) - st(y,z) - t(x,yz) - (x(yz),y)",
    ),
    (
        "D15",
        "s^2(z,x) + s(y,zx) + (x,y(zx)) - t^2(x,y) - t(xy,z) - ((xy)z,x)",
    ),
    (
        "B23",
        "st(y,x) + s(yx,z) + (x,(yx)z) - t(x,y) - s(x,z) - (xy,xz)",
    ),
    (
        "E34",
        "t(x,y) + s(z,y) + (xy,zy) - st(y,z) - t(x,yz) - (x(yz),y)",
    ),
    (
        "D34",
        "t(x,y) + s(z,x) + (xy,zx) - st(y,z) - t(x,yz) - (x(yz),x)",
    ),
    (
        "B15",
        "s^2(x,z) + s(y,xz) + (x,y(xz)) - t^2(x,y) - t(xy,x) - ((xy)x,z)",
    ),
    (
        "D23",
        "st(y,z) + s(yz,x) + (x,(yz)x) - s(z,x) - t(x,y) - (xy,zx)",
    ),
    (
        "E15",
        "s^2(z,y) + s(y,zy) + (x,y(zy)) - t^2(x,y) - t(xy,z) - ((xy)z,y)",
    ),
    (
        "B14",
        "s^2(x,z) + s(y,xz) + (x,y(xz)) - st(y,x) - t(x,yx) - (x(yx),z)",
    ),
    (
        "E25",
        "st(y,z) + s(yz,y) + (x,(yz)y) - t^2(x,y) - t(xy,z) - ((xy)z,y)",
    ),
    (
        "C15",
        "s^2(y,z) + s(y,yz) + (x,y(yz)) - t^2(x,y) - t(xy,y) - ((xy)y,z)",
    ),
    (
        "A34",
        "t(x,x) + s(y,z) + (xx,yz) - st(x,y) - (x,xy)t - (x(xy),z)",
    ),
    (
        "A14",
        "s^2(y,z) + s(x,yz) + (x,x(yz)) - st(x,y) - t(x,xy) - (x(xy),z)",
    ),
    (
        "A15",
        "s^2(y,z) + s(x,yz) + (x,x(yz)) - t^2(x,x) - t(xx,y) - ((xx)y,z)",
    ),
    (
        "C14",
        "s^2(y,z) + s(y,yz) + (x,y(yz)) - st(y,y) - t(x,yy) - (x(yy),z)",
    ),
    (
        "F23",
        "st(y,z) + s(yz,z) + (x,(yz)z) - t(x,y) - s(z,z) - (xy,zz)",
    ),
    (
        "F25",
        "st(y,z) + s(yz,z) + (x,(yz)z) - t^2(x,y) - t((xy),z) - ((xy)z,z)",
    ),
    (
        "F15",
        "s^2(z,z) + s(y,zz) + (x,y(zz)) - t^2(x,y) - t(xy,z) - ((xy)z,z)",
    ),
    (
        "C25",
        "st(y,y) + s(yy,z) + (x,(yy)z) - t^2(x,y) - t(xy,y) - ((xy)y,z)",
    ),
    (
        "A13",
        "s^2(y,z) + s(x,yz) + (x,x(yz)) - t(x,x) - s(y,z) - (xx,yz)",
    ),
    (
        "A45",
        "st(x,y) + t(x,xy) + (x(xy),z) - t^2(x,x) - t(xx,y) - ((xx)y,z)",
    ),
    (
        "C12",
        "s^2(y,z) + s(y,yz) + (x,y(yz)) - st(y,y) - s(yy,z) - (x,(yy)z)",
    ),
    (
        "C45",
        "st(y,y) + t(x,yy) + (x(yy),z) - t^2(x,y) - t(xy,y) - ((xy)y,z)",
    ),
    (
        "F12",
        "s^2(z,z) + s(y,zz) + (x,y(zz)) - st(y,z) - s(yz,z) - (x,(yz)z)",
    ),
    (
        "F35",
        "s(z,z) + t(x,y) + (xy,zz) - t^2(x,y) - t(xy,z) - ((xy)z,z)",
    ),
    (
        "B45",
        "st(y,x) + t(x,yx) + (x(yx),z) - t^2(x,y) - t(xy,x) - ((xy)x,z)",
    ),
    ("D24", "s(yz,x) + (x,(yz)x) - t(x,yz) - (x(yz),x)"),
    (
        "E12",
        "s^2(z,y) + s(y,zy) + (x,y(zy)) - st(y,z) - s(yz,y) - (x,(yz)y)",
    ),
    (
        "A35",
        "t(x,x) + s(y,z) + (xx,yz) - t^2(x,x) - t(xx,y) - ((xx)y,z)",
    ),
    ("C24", "s(yy,z) + (x,(yy)z) - t(x,yy) - (x(yy),z)"),
    (
        "F13",
        "s^2(z,z) + s(y,zz) + (x,y(zz)) - t(x,y) - s(z,z) - (xy,zz)",
    ),
    (
        "X14",
        "s^2(z,w) + s(y,zw) + (x,y(zw)) - ts(y,z) - t(x,yz) - (x(yz),w)",
    ),
];

/// How a published boundary compares with the derived `Q(Vi) - Q(Vj)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaMatch {
    /// Term for term over noncommuting `t`, `s`.
    Exact,
    /// Term for term once `t` and `s` commute.
    Commutative,
}

/// Compares the derived boundary of `id` with its published form.
pub fn formula_crosscheck(id: &BmIdentity) -> Result<FormulaMatch> {
    let name = id.to_string();
    let published = PUBLISHED_BOUNDARIES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownName(format!("no published boundary for {name}")))?;
    let want: FormalChain = published.1.parse()?;
    let got = identity_q_difference(id);
    if got == want {
        Ok(FormulaMatch::Exact)
    } else if got.commutative_eq(&want) {
        Ok(FormulaMatch::Commutative)
    } else {
        Err(Error::TranscriptionMismatch {
            identity: name,
            detail: format!("derived {got}, published {want}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::parse_table;
    use num_traits::Zero;

    fn a1() -> CayleyTable {
        parse_table("0 1 2 3\n2 0 3 1\n1 3 0 2\n3 2 1 0").unwrap()
    }

    fn entry(m: &IntMatrix, r: usize, c: usize) -> i64 {
        i64::try_from(m.get(r, c)).unwrap()
    }

    #[test]
    fn d2_columns() {
        let single = d2_matrix(&CayleyTable::cyclic(1), 1, 1);
        assert_eq!(
            (single.rows(), single.cols(), entry(&single, 0, 0)),
            (1, 1, 1)
        );
        let m = d2_matrix(&a1(), 1, 1);
        let col = 4 + 2;
        let got: Vec<i64> = (0..4).map(|r| entry(&m, r, col)).collect();
        assert_eq!(got, vec![0, 1, 1, -1]);
        let z2 = d2_matrix(&CayleyTable::cyclic(2), 1, 1);
        assert_eq!((entry(&z2, 0, 3), entry(&z2, 1, 3)), (-1, 2));
    }

    #[test]
    fn d2_column_sums() {
        let m = d2_matrix(&a1(), -1, 1);
        for c in 0..m.cols() {
            let sum: i64 = (0..m.rows()).map(|r| entry(&m, r, c)).sum();
            assert_eq!(sum, -1);
        }
    }

    #[test]
    fn complexes_close() {
        let e25: BmIdentity = "E25".parse().unwrap();
        verify_complex(&a1(), &e25, 1, 1).unwrap();
        verify_complex(&a1(), &e25, -1, 1).unwrap();
        let d15: BmIdentity = "D15".parse().unwrap();
        assert!(matches!(
            verify_complex(&a1(), &d15, 1, 1),
            Err(Error::NotAComplex { .. })
        ));
    }

    #[test]
    fn published_formulas() {
        let e25: BmIdentity = "E25".parse().unwrap();
        assert_eq!(formula_crosscheck(&e25).unwrap(), FormulaMatch::Exact);
        let d24: BmIdentity = "D24".parse().unwrap();
        assert_eq!(formula_crosscheck(&d24).unwrap(), FormulaMatch::Commutative);
        let x14: BmIdentity = "X14".parse().unwrap();
        assert!(formula_crosscheck(&x14).is_ok());
    }

    #[test]
    fn four_variable_specialization() {
        let q = a1();
        for name in ["A14", "B14", "E25", "F15"] {
            let v: BmIdentity = name.parse().unwrap();
            let x = v.four_variable_form();
            let f = identification_matrix(v.pattern, q.order());
            let lhs = d3_matrix(&q, &v, 1, 1);
            let rhs = d3_matrix(&q, &x, 1, 1).mul(&f).unwrap();
            assert_eq!(lhs, rhs, "{name}");
        }
        assert!(d3_matrix(&q, &"A14".parse().unwrap(), 1, 1)
            .row(0)
            .iter()
            .any(|v| !v.is_zero()));
    }
}
