//! Nerve homology of a one-object category (a finite monoid) with constant
//! integer coefficients, through degree 2.

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::homology::homology;
use crate::matrix::{IntMatrix, TupleIndex};
use crate::quasigroup::FiniteMonoid;

/// Default cap on the number of top-degree chains.
pub const DEFAULT_NERVE_BUDGET: u64 = 5_000_000;

/// Boundaries `d_k: C_k -> C_{k-1}` for `1 <= k <= degree`, where `C_k` is
/// free on `k`-tuples of morphisms (unnormalized).
#[derive(Clone, Debug)]
pub struct NerveComplex {
    pub monoid: FiniteMonoid,
    pub degree: usize,
    /// `boundaries[k - 1]` is `d_k`.
    pub boundaries: Vec<IntMatrix>,
}

impl NerveComplex {
    pub fn boundary(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k - 1]
    }
}

/// Face `d_i` of a composable string `(g0, ..., g_{k-1})`: `d_0` drops `g0`,
/// `d_k` drops `g_{k-1}`, and `d_i` replaces `g_{i-1}, g_i` by `g_i ∘ g_{i-1}`.
pub fn face(monoid: &FiniteMonoid, i: usize, chain: &[usize]) -> Vec<usize> {
    let k = chain.len();
    assert!(i <= k, "face index {i} out of range for a {k}-chain");
    if i == 0 {
        return chain[1..].to_vec();
    }
    if i == k {
        return chain[..k - 1].to_vec();
    }
    let mut out = chain[..i - 1].to_vec();
    out.push(monoid.compose(chain[i], chain[i - 1]));
    out.extend_from_slice(&chain[i + 1..]);
    out
}

fn boundary_matrix(monoid: &FiniteMonoid, k: usize) -> IntMatrix {
    let m = monoid.size();
    let src = TupleIndex::new(k as u32, m);
    let dst = TupleIndex::new(k as u32 - 1, m);
    let mut d = IntMatrix::zeros(dst.len(), src.len());
    for c in 0..src.len() {
        let chain = src.tuple(c);
        for i in 0..=k {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            d.add_at(dst.index(&face(monoid, i, &chain)), c, sign);
        }
    }
    d
}

/// Builds `d_1 .. d_degree`; fails when `|M|^degree` exceeds `budget`.
pub fn nerve_boundaries(monoid: &FiniteMonoid, degree: usize, budget: u64) -> Result<NerveComplex> {
    if degree == 0 {
        return Err(Error::Dimension("nerve degree must be at least 1".into()));
    }
    let needed = (monoid.size() as u64)
        .checked_pow(degree as u32)
        .unwrap_or(u64::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let boundaries = (1..=degree).map(|k| boundary_matrix(monoid, k)).collect();
    Ok(NerveComplex {
        monoid: monoid.clone(),
        degree,
        boundaries,
    })
}

/// `(H1, H2)` of the nerve.
pub fn category_h1_h2(monoid: &FiniteMonoid, budget: u64) -> Result<(AbelianGroup, AbelianGroup)> {
    let nerve = nerve_boundaries(monoid, 3, budget)?;
    let h1 = homology(nerve.boundary(1), nerve.boundary(2))?;
    let h2 = homology(nerve.boundary(2), nerve.boundary(3))?;
    Ok((h1, h2))
}

/// Printed composition table of the four endomorphisms of the first corpus
/// example, `φ_i` sending `1` to `i`; entry `[i][j]` is `φ_i ∘ φ_j`.
pub const PRINTED_END_A1_COMPOSITION: [[usize; 4]; 4] =
    [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 3, 0]];

/// Printed `d2` of that monoid's nerve, columns `(φ_i, φ_j)` at `4i + j`.
pub const PRINTED_END_A1_D2: [[i64; 16]; 4] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1, 1, 0, 1, -1, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 2, 1, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2],
];

/// Columns where `d2` differs from the print, with computed and printed
/// columns.
pub fn printed_d2_differences(d2: &IntMatrix) -> Vec<(usize, Vec<i64>, Vec<i64>)> {
    (0..16)
        .filter_map(|c| {
            let got: Vec<i64> = (0..4)
                .map(|r| i64::try_from(d2.get(r, c)).expect("small entries"))
                .collect();
            let printed: Vec<i64> = PRINTED_END_A1_D2.iter().map(|row| row[c]).collect();
            (got != printed).then_some((c, got, printed))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::{endomorphism_monoid, multiplication_group, parse_table, CayleyTable};

    fn a1() -> CayleyTable {
        parse_table("0 1 2 3\n2 0 3 1\n1 3 0 2\n3 2 1 0").unwrap()
    }

    #[test]
    fn endomorphisms_of_a1() {
        let end = endomorphism_monoid(&a1(), 1_000_000).unwrap();
        let printed: Vec<Vec<usize>> = PRINTED_END_A1_COMPOSITION
            .iter()
            .map(|r| r.to_vec())
            .collect();
        assert_eq!(end.monoid.table(), printed);
        let nerve = nerve_boundaries(&end.monoid, 3, 1000).unwrap();
        assert!(nerve.boundary(1).is_zero());
        // (φ3, φ3) goes to 2φ3 - φ0 since φ3 ∘ φ3 = φ0; the print omits the -1.
        let diffs = printed_d2_differences(nerve.boundary(2));
        assert_eq!(diffs, vec![(15, vec![-1, 0, 0, 2], vec![0, 0, 0, 2])]);
        let (h1, h2) = category_h1_h2(&end.monoid, 1000).unwrap();
        assert!(h1.is_trivial() && h2.is_trivial());
    }

    #[test]
    fn multiplication_group_of_a1() {
        let mlt = multiplication_group(&a1(), 100).unwrap();
        assert_eq!(mlt.monoid.size(), 8);
        let nerve = nerve_boundaries(&mlt.monoid, 3, 1000).unwrap();
        assert_eq!(
            (nerve.boundary(2).rows(), nerve.boundary(2).cols()),
            (8, 64)
        );
        assert_eq!(
            (nerve.boundary(3).rows(), nerve.boundary(3).cols()),
            (64, 512)
        );
        let (h1, h2) = category_h1_h2(&mlt.monoid, 1000).unwrap();
        assert_eq!(h1.to_string(), "(Z/2)^2");
        assert_eq!(h2.to_string(), "Z/2");
    }

    fn cyclic_monoid(n: usize) -> FiniteMonoid {
        FiniteMonoid::from_group_table(&CayleyTable::cyclic(n)).unwrap()
    }

    #[test]
    fn trivial_monoid() {
        let nerve = nerve_boundaries(&cyclic_monoid(1), 3, 10).unwrap();
        assert!(nerve
            .boundaries
            .iter()
            .all(|d| d.rows() == 1 && d.cols() == 1));
        let (h1, h2) = category_h1_h2(&cyclic_monoid(1), 10).unwrap();
        assert!(h1.is_trivial() && h2.is_trivial());
    }

    #[test]
    fn faces_of_a_string() {
        let z3 = cyclic_monoid(3);
        assert_eq!(face(&z3, 0, &[1, 2, 2]), vec![2, 2]);
        assert_eq!(face(&z3, 1, &[1, 2, 2]), vec![0, 2]);
        assert_eq!(face(&z3, 2, &[1, 2, 2]), vec![1, 1]);
        assert_eq!(face(&z3, 3, &[1, 2, 2]), vec![1, 2]);
    }

    #[test]
    fn cyclic_groups() {
        for n in 1..=6 {
            let (h1, h2) = category_h1_h2(&cyclic_monoid(n), DEFAULT_NERVE_BUDGET).unwrap();
            assert_eq!(h1, AbelianGroup::from_cyclic_orders(&[n as u64]));
            assert!(h2.is_trivial());
        }
    }

    #[test]
    fn composites_vanish() {
        let nerve = nerve_boundaries(&cyclic_monoid(3), 3, 100).unwrap();
        for k in 2..=3 {
            assert!(nerve
                .boundary(k - 1)
                .mul(nerve.boundary(k))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn budget() {
        assert!(matches!(
            nerve_boundaries(&cyclic_monoid(4), 3, 63),
            Err(Error::BudgetExceeded {
                needed: 64,
                budget: 63
            })
        ));
    }
}
