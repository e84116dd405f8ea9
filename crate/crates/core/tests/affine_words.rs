//! A word evaluated in an affine quasigroup equals `H + h c0`.

use bmhom::affine::{affine_table, units, AffineSpec};
use bmhom::identities::{evaluate_word, BmIdentity, Word};
use bmhom::trees::hat_h_of;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_tree(rng: &mut impl Rng, leaves: usize, vars: usize) -> Word {
    if leaves == 1 {
        return Word::var(rng.gen_range(0..vars));
    }
    let left = rng.gen_range(1..leaves);
    Word::product(
        random_tree(rng, left, vars),
        random_tree(rng, leaves - left, vars),
    )
}

fn random_spec(rng: &mut impl Rng) -> AffineSpec {
    let n = rng.gen_range(2..=11u64);
    let u = units(n);
    let t = u[rng.gen_range(0..u.len())];
    let s = u[rng.gen_range(0..u.len())];
    let c0 = rng.gen_range(0..n);
    AffineSpec::new(n, t as i64, s as i64, c0 as i64).unwrap()
}

fn affine_value(tree: &Word, a: &AffineSpec, assignment: &[usize]) -> u64 {
    let (form, h) = hat_h_of(tree);
    let n = a.n;
    let mut total = h.evaluate_mod(a.t, a.s, n) * a.c0 % n;
    for (v, p) in form.entries() {
        total = (total + p.evaluate_mod(a.t, a.s, n) * assignment[v] as u64) % n;
    }
    total
}

#[test]
fn random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let a = random_spec(&mut rng);
        let q = affine_table(&a);
        let vars = rng.gen_range(1..=4);
        let leaves = rng.gen_range(1..=8);
        let tree = random_tree(&mut rng, leaves, vars);
        let assignment: Vec<usize> = (0..vars).map(|_| rng.gen_range(0..a.n as usize)).collect();
        assert_eq!(
            evaluate_word(&q, &tree, &assignment) as u64,
            affine_value(&tree, &a, &assignment),
            "{tree:?} in {a}"
        );
    }
}

#[test]
fn identity_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for id in BmIdentity::all_classic() {
        for _ in 0..10 {
            let a = random_spec(&mut rng);
            let q = affine_table(&a);
            let assignment: Vec<usize> = (0..id.variables())
                .map(|_| rng.gen_range(0..a.n as usize))
                .collect();
            for w in [id.left_word(), id.right_word()] {
                assert_eq!(
                    evaluate_word(&q, &w, &assignment) as u64,
                    affine_value(&w, &a, &assignment)
                );
            }
        }
    }
}
