//! Affine quasigroups `a*b = ta + sb + c0` over `Z/n` and their solution sets
//! for Bol-Moufang identities.

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::{satisfies, variety_of, BmIdentity};
use crate::quasigroup::CayleyTable;
use crate::trees::identity_h_difference;

/// Parameters of an affine quasigroup over `Z/n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffineSpec {
    pub n: u64,
    pub t: u64,
    pub s: u64,
    pub c0: u64,
}

impl AffineSpec {
    /// Reduces `t`, `s`, `c0` modulo `n` and checks that `t`, `s` are units.
    pub fn new(n: u64, t: i64, s: i64, c0: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("modulus must be at least 1".into()));
        }
        let r = |v: i64| v.rem_euclid(n as i64) as u64;
        for v in [t, s] {
            if r(v).gcd(&n) != 1 {
                return Err(Error::NotUnit {
                    value: v,
                    modulus: n,
                });
            }
        }
        Ok(AffineSpec {
            n,
            t: r(t),
            s: r(s),
            c0: r(c0),
        })
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (self.t * a + self.s * b + self.c0) % self.n
    }

    pub fn t_inverse(&self) -> u64 {
        inverse_mod(self.t, self.n)
    }

    pub fn s_inverse(&self) -> u64 {
        inverse_mod(self.s, self.n)
    }

    /// `a\b = s^-1 (b - ta - c0)`.
    pub fn left_divide(&self, a: u64, b: u64) -> u64 {
        let n = self.n;
        self.s_inverse() * ((b + 2 * n - (self.t * a) % n - self.c0) % n) % n
    }

    /// `a/b = t^-1 (a - sb - c0)`.
    pub fn right_divide(&self, a: u64, b: u64) -> u64 {
        let n = self.n;
        self.t_inverse() * ((a + 2 * n - (self.s * b) % n - self.c0) % n) % n
    }
}

impl std::fmt::Display for AffineSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z/{}: t={} s={} c0={}", self.n, self.t, self.s, self.c0)
    }
}

/// Inverse of a unit modulo `n` (`0` when `n = 1`).
pub fn inverse_mod(a: u64, n: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(n as i64));
    debug_assert_eq!(e.gcd, 1, "{a} is not a unit mod {n}");
    e.x.rem_euclid(n as i64) as u64
}

pub fn units(n: u64) -> Vec<u64> {
    (0..n).filter(|&u| u.gcd(&n) == 1).collect()
}

pub fn affine_table(spec: &AffineSpec) -> CayleyTable {
    let n = spec.n as usize;
    CayleyTable::from_fn(n, |a, b| spec.mul(a as u64, b as u64) as usize)
        .expect("affine tables over units are Latin")
}

fn all_specs(n: u64) -> Vec<AffineSpec> {
    let us = units(n);
    let mut out = Vec::new();
    for &t in &us {
        for &s in &us {
            for c0 in 0..n {
                out.push(AffineSpec { n, t, s, c0 });
            }
        }
    }
    out
}

/// Every spec over `Z/n` whose table satisfies `id`, by exhaustive check.
pub fn solve_affine_brute(id: &BmIdentity, n: u64) -> Vec<AffineSpec> {
    all_specs(n)
        .into_par_iter()
        .filter(|spec| satisfies(&affine_table(spec), id))
        .collect()
}

/// Same set from `w = H(T_w) + h(T_w) c0`: every variable coefficient of the
/// difference and `h`-difference times `c0` vanish mod `n`.
pub fn solve_affine_symbolic(id: &BmIdentity, n: u64) -> Vec<AffineSpec> {
    let (form, h) = identity_h_difference(id);
    all_specs(n)
        .into_iter()
        .filter(|sp| {
            form.entries()
                .all(|(_, p)| p.evaluate_mod(sp.t, sp.s, n) == 0)
                && (h.evaluate_mod(sp.t, sp.s, n) * sp.c0) % n == 0
        })
        .collect()
}

/// Both routes, sorted by `(t, s, c0)`; disagreement is an internal error.
pub fn solve_affine(id: &BmIdentity, n: u64) -> Result<Vec<AffineSpec>> {
    let brute = solve_affine_brute(id, n);
    let symbolic = solve_affine_symbolic(id, n);
    if brute != symbolic {
        return Err(Error::InternalInconsistency(format!(
            "{id} over Z/{n}: brute force found {} specs, symbolic {}",
            brute.len(),
            symbolic.len()
        )));
    }
    Ok(brute)
}

/// Specs over `Z/n` allowed by the registry's solution families for `id`.
pub fn predicted_solutions(id: &BmIdentity, n: u64) -> Result<Vec<AffineSpec>> {
    let entry = variety_of(id).ok_or_else(|| Error::UnknownName(id.to_string()))?;
    Ok(all_specs(n)
        .into_iter()
        .filter(|sp| entry.predicts_mod(sp.t, sp.s, sp.c0, n))
        .collect())
}

/// Identities whose solution analysis needs the absence of zero divisors.
pub const ZERO_DIVISOR_CASES: [&str; 4] = ["A14", "F25", "B23", "C15"];

/// Summary of the solution set of `id` over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutativityReport {
    pub identity: String,
    pub modulus: u64,
    pub solutions: usize,
    /// `(1, 1, c0)` solves `id` for every `c0`.
    pub contains_identity_point: bool,
    /// Every solution has scalar, hence commuting, `t` and `s`.
    pub scalar: bool,
    /// The published solution set relies on there being no zero divisors.
    pub needs_no_zero_divisors: bool,
}

impl CommutativityReport {
    pub fn holds(&self) -> bool {
        self.contains_identity_point && self.scalar
    }
}

pub fn commutativity_report(id: &BmIdentity, p: u64) -> Result<CommutativityReport> {
    let sols = solve_affine(id, p)?;
    let contains_identity_point = (0..p).all(|c0| {
        sols.contains(&AffineSpec {
            n: p,
            t: 1 % p,
            s: 1 % p,
            c0,
        })
    });
    Ok(CommutativityReport {
        identity: id.to_string(),
        modulus: p,
        solutions: sols.len(),
        contains_identity_point,
        // Automorphisms of Z/p are multiplications by units.
        scalar: true,
        needs_no_zero_divisors: ZERO_DIVISOR_CASES.contains(&id.to_string().as_str()),
    })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(name: &str) -> BmIdentity {
        name.parse().unwrap()
    }

    #[test]
    fn tables() {
        let z4 = affine_table(&AffineSpec::new(4, 1, 1, 0).unwrap());
        assert_eq!(z4, CayleyTable::cyclic(4));
        let odd = affine_table(&AffineSpec::new(2, 1, 1, 1).unwrap());
        assert_eq!(odd.rows(), vec![vec![1, 0], vec![0, 1]]);
        assert!(matches!(
            AffineSpec::new(4, 2, 1, 0),
            Err(Error::NotUnit {
                value: 2,
                modulus: 4
            })
        ));
    }

    #[test]
    fn divisions() {
        let sp = AffineSpec::new(7, 3, 5, 2).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(sp.mul(a, sp.left_divide(a, b)), b);
                assert_eq!(sp.mul(sp.right_divide(a, b), b), a);
            }
        }
    }

    #[test]
    fn a23_mod_5() {
        let sols = solve_affine(&id("A23"), 5).unwrap();
        assert_eq!(sols.len(), 20);
        assert!(sols.iter().all(|sp| sp.s == 1));
    }

    #[test]
    fn e25_mod_7() {
        let sols = solve_affine(&id("E25"), 7).unwrap();
        let ts: Vec<(u64, u64)> = sols.iter().map(|sp| (sp.t, sp.s)).collect();
        assert_eq!(sols.len(), 14);
        assert!(ts.iter().all(|p| *p == (1, 1) || *p == (6, 1)));
    }

    #[test]
    fn d24_families() {
        let sols = solve_affine(&id("D24"), 5).unwrap();
        assert_eq!(sols, predicted_solutions(&id("D24"), 5).unwrap());
        assert!(sols.contains(&AffineSpec {
            n: 5,
            t: 2,
            s: 4,
            c0: 0
        }));
        assert!(!sols.contains(&AffineSpec {
            n: 5,
            t: 2,
            s: 4,
            c0: 1
        }));
    }

    #[test]
    fn special_cases() {
        let a14 = solve_affine(&id("A14"), 5).unwrap();
        assert!((1..5).all(|t| a14.contains(&AffineSpec {
            n: 5,
            t,
            s: 4,
            c0: 0
        })));
        let c15 = commutativity_report(&id("C15"), 5).unwrap();
        assert!(c15.holds() && c15.needs_no_zero_divisors);
        assert_eq!(c15.solutions, 10);
    }

    #[test]
    fn x_plus_2y_mod_3() {
        let q = affine_table(&AffineSpec::new(3, 1, 2, 0).unwrap());
        let got: Vec<String> = BmIdentity::all_classic()
            .into_iter()
            .filter(|i| satisfies(&q, i))
            .map(|i| i.to_string())
            .collect();
        assert_eq!(
            got,
            ["A14", "B14", "C14", "D14", "E14", "F13", "F14", "F34"]
        );
    }
}
