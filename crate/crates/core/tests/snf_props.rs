//! Smith form and homology properties on random small matrices.

use bmhom::group::AbelianGroup;
use bmhom::homology::{cokernel, homology, homology_by_ranks};
use bmhom::snf::{integer_kernel, smith_normal_form};
use bmhom::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #[test]
    fn transforms_diagonalize(rows in matrix()) {
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        let snf = smith_normal_form(&m, true);
        let (u, v) = snf.transforms.clone().unwrap();
        let d = u.mul(&m).unwrap().mul(&v).unwrap();
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                let want = if r == c && r < snf.factors.len() {
                    snf.factors[r].clone()
                } else {
                    BigInt::zero()
                };
                prop_assert_eq!(d.get(r, c), &want);
            }
        }
        for w in snf.factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn transpose_has_same_factors(rows in matrix()) {
        let m = IntMatrix::from_i64_rows(&rows).unwrap();
        prop_assert_eq!(
            smith_normal_form(&m, false).factors,
            smith_normal_form(&m.transpose(), false).factors
        );
    }

    #[test]
    fn homology_routes_agree(rows in matrix(), mix in matrix()) {
        // Build a complex: incoming = kernel basis of outgoing times a mixer.
        let out = IntMatrix::from_i64_rows(&rows).unwrap();
        let k = integer_kernel(&out);
        prop_assume!(k.cols() > 0);
        let mixer: Vec<Vec<i64>> = (0..k.cols())
            .map(|i| (0..3).map(|j| mix[i % mix.len()][j % mix[0].len()]).collect())
            .collect();
        let inc = k.mul(&IntMatrix::from_i64_rows(&mixer).unwrap()).unwrap();
        prop_assert!(out.mul(&inc).unwrap().is_zero());
        prop_assert_eq!(homology(&out, &inc).unwrap(), homology_by_ranks(&out, &inc).unwrap());
    }
}

#[test]
fn square_cokernel_order_is_determinant() {
    let m = IntMatrix::from_i64_rows(&[vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 4]]).unwrap();
    // det = 2*12 - 1*(0 - 1) = 25
    assert_eq!(cokernel(&m).unwrap().order(), Some(25));
    assert!(smith_normal_form(&IntMatrix::identity(4), false)
        .factors
        .iter()
        .all(BigInt::is_one));
}

#[test]
fn abelian_groups_are_their_own_abelianization() {
    use bmhom::homology::h1;
    use bmhom::CayleyTable;
    let klein = CayleyTable::from_fn(4, |x, y| x ^ y).unwrap();
    assert_eq!(
        h1(&klein, 1, 1).unwrap(),
        AbelianGroup::from_cyclic_orders(&[2, 2])
    );
    for n in 2..=4 {
        assert_eq!(
            h1(&CayleyTable::cyclic(n), 1, 1).unwrap(),
            AbelianGroup::from_cyclic_orders(&[n as u64])
        );
    }
}
