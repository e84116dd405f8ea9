//! Extensions of corpus quasigroups by affine quasigroups are Latin, and
//! the closed-form divisions invert the multiplication.

use bmhom::affine::{units, AffineSpec};
use bmhom::corpus::corpus;
use bmhom::extensions::{
    are_equivalent, coboundary, extension_left_divide, extension_right_divide, extension_table,
    Cochain1, Cochain2,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn extensions_are_quasigroups() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for e in corpus() {
        let n = e.table.order();
        for m in [2u64, 3] {
            let u = units(m);
            for _ in 0..100 {
                let pick = |rng: &mut ChaCha8Rng| u[rng.gen_range(0..u.len())] as i64;
                let (t, s) = (pick(&mut rng), pick(&mut rng));
                let a = AffineSpec::new(m, t, s, rng.gen_range(0..m as i64)).unwrap();
                let phi = Cochain2::random(n, m, &mut rng);
                let table = extension_table(&a, &e.table, &phi).expect("Latin");
                let (i, j) = (
                    rng.gen_range(0..m * n as u64),
                    rng.gen_range(0..m * n as u64),
                );
                let p = ((i / n as u64), (i % n as u64) as usize);
                let r = ((j / n as u64), (j % n as u64) as usize);
                let idx = |(a, x): (u64, usize)| a as usize * n + x;
                let q = extension_right_divide(&a, &e.table, &phi, p, r);
                assert_eq!(table.mul(idx(q), idx(r)), idx(p), "{} right division", e.id);
                let q = extension_left_divide(&a, &e.table, &phi, p, r);
                assert_eq!(table.mul(idx(p), idx(q)), idx(r), "{} left division", e.id);
            }
        }
    }
}

#[test]
fn coboundary_shifts_are_equivalences() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for e in corpus().iter().take(6) {
        let n = e.table.order();
        let a = AffineSpec::new(3, 1, -1, 0).unwrap();
        let phi = Cochain2::random(n, 3, &mut rng);
        let alpha = Cochain1::random(n, 3, &mut rng);
        let mut shifted = phi.clone();
        let delta = coboundary(&a, &e.table, &alpha);
        for x in 0..n {
            for y in 0..n {
                shifted.set(x, y, (phi.get(x, y) + delta.get(x, y)) % 3);
            }
        }
        assert!(are_equivalent(&e.table, &a, &shifted, &phi)
            .unwrap()
            .is_some());
    }
}
