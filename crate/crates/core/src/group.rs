//! Finitely generated abelian groups in invariant-factor form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// `Z^free_rank (+) Z/d1 (+) ... (+) Z/dk` with `2 <= d1 | d2 | ... | dk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Normalizes an arbitrary list of cyclic orders (0 meaning `Z`, 1
    /// meaning trivial) into invariant-factor form.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let free_rank = orders.iter().filter(|&&d| d == 0).count();
        // Collect prime powers per prime, then rebuild the divisor chain.
        let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &d in orders.iter().filter(|&&d| d > 1) {
            for (p, e) in factorize(d) {
                powers.entry(p).or_default().push(p.pow(e));
            }
        }
        let len = powers.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for list in powers.values_mut() {
            list.sort_unstable();
            // Largest powers go to the last factors.
            for (slot, q) in torsion.iter_mut().rev().zip(list.iter().rev()) {
                *slot *= q;
            }
        }
        AbelianGroup { free_rank, torsion }
    }

    /// Cokernel of a map into `Z^dim` with the given Smith invariant factors.
    pub fn cokernel(dim: usize, factors: &[BigInt]) -> Result<Self> {
        let mut torsion = Vec::new();
        for d in factors {
            let d = d
                .to_u64()
                .ok_or_else(|| Error::Dimension(format!("invariant factor {d} exceeds 64 bits")))?;
            if d > 1 {
                torsion.push(d);
            }
        }
        Ok(AbelianGroup {
            free_rank: dim - factors.len(),
            torsion,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order when finite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Cyclic orders of the primary decomposition, e.g. `Z/6` gives `[2, 3]`.
    pub fn primary_parts(&self) -> BTreeMap<u64, Vec<u32>> {
        let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &d in &self.torsion {
            for (p, e) in factorize(d) {
                out.entry(p).or_default().push(e);
            }
        }
        for v in out.values_mut() {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        out
    }

    /// Whether some surjective homomorphism `other -> self` exists.
    ///
    /// For each prime `p` and level `k`, the `F_p`-dimension of
    /// `p^(k-1) G / p^k G` cannot grow under a surjection; together with the
    /// free-rank inequality this is also sufficient.
    pub fn is_quotient_of(&self, other: &AbelianGroup) -> bool {
        if self.free_rank > other.free_rank {
            return false;
        }
        let mine = self.primary_parts();
        let theirs = other.primary_parts();
        mine.iter().all(|(p, exps)| {
            let top = exps.iter().copied().max().unwrap_or(0);
            (1..=top).all(|k| {
                let layer = |g: Option<&Vec<u32>>, free: usize| {
                    free + g.map_or(0, |es| es.iter().filter(|&&e| e >= k).count())
                };
                layer(Some(exps), self.free_rank) <= layer(theirs.get(p), other.free_rank)
            })
        })
    }

    /// Number of homomorphisms into `Z/m`.
    pub fn hom_count_to_cyclic(&self, m: u64) -> u64 {
        let free = m.pow(self.free_rank as u32);
        free * self
            .torsion
            .iter()
            .map(|&d| num_integer::gcd(d, m))
            .product::<u64>()
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl fmt::Display for AbelianGroup {
    /// Renders `Z^r (+) Z/d1 (+) ...`, grouping equal factors; `0` if trivial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        f.write_str(&parts.join(" (+) "))
    }
}

pub fn format_group(g: &AbelianGroup) -> String {
    g.to_string()
}

/// Serialized in the same text form as [`format_group`].
impl serde::Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for AbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    /// Accepts any direct sum of `Z`, `Z^r`, `Z/d`, `(Z/d)^e`, and `0`,
    /// not necessarily in normal form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Parse { line: 1, reason };
        let mut orders = Vec::new();
        for term in s.split("(+)").map(str::trim) {
            if term == "0" {
                continue;
            }
            let (base, exp) = match term.rsplit_once('^') {
                Some((b, e)) => {
                    let e: usize = e
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad exponent in `{term}`")))?;
                    (b.trim(), e)
                }
                _ => (term, 1),
            };
            let base = base
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .unwrap_or(base)
                .trim();
            let order = if base == "Z" {
                0
            } else if let Some(d) = base.strip_prefix("Z/") {
                d.trim()
                    .parse::<u64>()
                    .map_err(|_| bad(format!("bad cyclic order in `{term}`")))?
            } else {
                return Err(bad(format!("unrecognized summand `{term}`")));
            };
            orders.extend(std::iter::repeat_n(order, exp));
        }
        Ok(AbelianGroup::from_cyclic_orders(&orders))
    }
}
