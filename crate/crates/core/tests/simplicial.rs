//! Simplicial identities of the nerve faces and `d d = 0`.

use bmhom::category::{face, nerve_boundaries};
use bmhom::corpus::corpus_entry;
use bmhom::quasigroup::{endomorphism_monoid, multiplication_group};
use bmhom::{CayleyTable, FiniteMonoid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn monoids() -> Vec<FiniteMonoid> {
    let a1 = &corpus_entry("A1").unwrap().table;
    let a2 = &corpus_entry("A2").unwrap().table;
    vec![
        endomorphism_monoid(a1, 1_000_000).unwrap().monoid,
        multiplication_group(a1, 1000).unwrap().monoid,
        endomorphism_monoid(a2, 1_000_000).unwrap().monoid,
        FiniteMonoid::from_group_table(&CayleyTable::cyclic(5)).unwrap(),
    ]
}

#[test]
fn face_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for m in monoids() {
        for _ in 0..200 {
            let k = rng.gen_range(2..=5);
            let chain: Vec<usize> = (0..k).map(|_| rng.gen_range(0..m.size())).collect();
            for j in 1..=k {
                for i in 0..j {
                    let lhs = face(&m, i, &face(&m, j, &chain));
                    let rhs = face(&m, j - 1, &face(&m, i, &chain));
                    assert_eq!(lhs, rhs, "d{i} d{j} on {chain:?}");
                }
            }
        }
    }
}

#[test]
fn boundaries_compose_to_zero() {
    for m in monoids() {
        let nerve = nerve_boundaries(&m, 3, 1_000_000).unwrap();
        for k in 2..=3 {
            assert!(nerve
                .boundary(k - 1)
                .mul(nerve.boundary(k))
                .unwrap()
                .is_zero());
        }
    }
}
