//! First and second homology of the Bol-Moufang complex
//! `0 -> C3 -> C2 -> C1 -> 0`.

use crate::boundary::{d2_matrix, d3_matrix};
use crate::error::Result;
use crate::group::AbelianGroup;
use crate::identities::BmIdentity;
use crate::matrix::IntMatrix;
use crate::quasigroup::CayleyTable;
use crate::snf::{smith_normal_form, ColumnEchelon};

/// `C1 / im d2`.
pub fn h1(q: &CayleyTable, t: i64, s: i64) -> Result<AbelianGroup> {
    cokernel(&d2_matrix(q, t, s))
}

/// `ker d2 / im d3` for the complex of `id`.
pub fn h2(q: &CayleyTable, id: &BmIdentity, t: i64, s: i64) -> Result<AbelianGroup> {
    homology(&d2_matrix(q, t, s), &d3_matrix(q, id, t, s))
}

/// Cokernel of `m` as a map into `Z^rows`.
pub fn cokernel(m: &IntMatrix) -> Result<AbelianGroup> {
    let snf = smith_normal_form(m, false);
    AbelianGroup::cokernel(m.rows(), &snf.factors)
}

/// `ker outgoing / im incoming` where `outgoing * incoming = 0`.
///
/// The image is rewritten in an integer basis of the kernel, so torsion is
/// read off exactly from the Smith form of the coordinates.
pub fn homology(outgoing: &IntMatrix, incoming: &IntMatrix) -> Result<AbelianGroup> {
    let echelon = ColumnEchelon::new(outgoing);
    let coords = echelon.kernel_coordinates(incoming)?;
    cokernel(&coords)
}

/// Same group from ranks and the Smith form of `incoming` alone:
/// free rank `dim - rank(outgoing) - rank(incoming)`, torsion of
/// `coker(incoming)`. Serves as an independent check of [`homology`].
pub fn homology_by_ranks(outgoing: &IntMatrix, incoming: &IntMatrix) -> Result<AbelianGroup> {
    let r_out = smith_normal_form(outgoing, false).rank();
    let inc = smith_normal_form(incoming, false);
    let free = incoming.rows() - r_out - inc.rank();
    let torsion = AbelianGroup::cokernel(inc.rank(), &inc.factors)?.torsion;
    Ok(AbelianGroup {
        free_rank: free,
        torsion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::parse_table;

    fn a1() -> CayleyTable {
        parse_table("0 1 2 3\n2 0 3 1\n1 3 0 2\n3 2 1 0").unwrap()
    }

    #[test]
    fn first_homology_of_a1() {
        let q = a1();
        assert_eq!(h1(&q, 1, 1).unwrap().to_string(), "Z/2");
        assert_eq!(h1(&q, -1, -1).unwrap().to_string(), "Z/6");
        assert_eq!(h1(&q, -1, 1).unwrap().to_string(), "Z/4");
    }

    #[test]
    fn abelian_groups_are_their_own_abelianization() {
        for n in 1..=6 {
            let g = h1(&CayleyTable::cyclic(n), 1, 1).unwrap();
            assert_eq!(g, AbelianGroup::from_cyclic_orders(&[n as u64]));
        }
        let klein = parse_table("0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0").unwrap();
        assert_eq!(h1(&klein, 1, 1).unwrap().to_string(), "(Z/2)^2");
    }

    #[test]
    fn second_homology_of_a1() {
        let q = a1();
        let e25: BmIdentity = "E25".parse().unwrap();
        let f25: BmIdentity = "F25".parse().unwrap();
        assert_eq!(h2(&q, &e25, 1, 1).unwrap().to_string(), "Z/2");
        assert_eq!(h2(&q, &f25, 1, 1).unwrap().to_string(), "Z^6 (+) (Z/2)^2");
    }

    #[test]
    fn both_routes_agree() {
        let q = a1();
        for name in ["A25", "B25", "A14", "C25", "A35"] {
            let id: BmIdentity = name.parse().unwrap();
            let (d2, d3) = (d2_matrix(&q, 1, 1), d3_matrix(&q, &id, 1, 1));
            assert_eq!(
                homology(&d2, &d3).unwrap(),
                homology_by_ranks(&d2, &d3).unwrap()
            );
        }
    }

    #[test]
    fn non_complex_is_rejected() {
        let q = a1();
        let d15: BmIdentity = "D15".parse().unwrap();
        assert!(h2(&q, &d15, 1, 1).is_err());
    }
}
