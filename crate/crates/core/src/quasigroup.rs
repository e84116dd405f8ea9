//! Finite quasigroups as Latin squares.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Axis, Error, Result};
use crate::group::AbelianGroup;

/// Cayley table of a quasigroup on `0..n`; `table[x][y]` is `x·y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    /// Validates rows as a Latin square.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NonSquare {
                    rows: n,
                    row: r,
                    cols: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::OutOfRange {
                        row: r,
                        col: c,
                        value: v as i64,
                        order: n,
                    });
                }
            }
        }
        let cells: Vec<usize> = rows.into_iter().flatten().collect();
        let table = CayleyTable { order: n, cells };
        table.check_latin()?;
        Ok(table)
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            let mut seen = vec![false; n];
            for y in 0..n {
                let v = self.mul(x, y);
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotLatin {
                        axis: Axis::Row,
                        index: x,
                    });
                }
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = self.mul(x, y);
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotLatin {
                        axis: Axis::Column,
                        index: y,
                    });
                }
            }
        }
        Ok(())
    }

    /// Builds a table from a closure, validating the result.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_rows((0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect())
    }

    /// Addition table of the cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x + y) % n).expect("cyclic group is Latin")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// The unique `z` with `y·z = x`.
    pub fn left_divide(&self, y: usize, x: usize) -> usize {
        (0..self.order)
            .find(|&z| self.mul(y, z) == x)
            .expect("rows of a Latin square are permutations")
    }

    /// The unique `z` with `z·y = x`.
    pub fn right_divide(&self, x: usize, y: usize) -> usize {
        (0..self.order)
            .find(|&z| self.mul(z, y) == x)
            .expect("columns of a Latin square are permutations")
    }

    /// Table of one of the six conjugate operations.
    pub fn parastrophe(&self, kind: Parastrophe) -> CayleyTable {
        let n = self.order;
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let z = self.mul(x, y);
                // Each conjugate reads the triple x·y = z in another order.
                let (a, b, c) = match kind {
                    Parastrophe::Mul => (x, y, z),
                    Parastrophe::RightDiv => (z, y, x),
                    Parastrophe::LeftDiv => (x, z, y),
                    Parastrophe::Opposite => (y, x, z),
                    Parastrophe::OppositeRightDiv => (y, z, x),
                    Parastrophe::OppositeLeftDiv => (z, x, y),
                };
                cells[a * n + b] = c;
            }
        }
        CayleyTable { order: n, cells }
    }

    pub fn loop_class(&self) -> LoopClass {
        let n = self.order;
        let left = (0..n).any(|e| (0..n).all(|y| self.mul(e, y) == y));
        let right = (0..n).any(|e| (0..n).all(|x| self.mul(x, e) == x));
        match (left, right) {
            (true, true) => LoopClass::Loop,
            (true, false) => LoopClass::LeftLoopOnly,
            (false, true) => LoopClass::RightLoopOnly,
            (false, false) => LoopClass::Neither,
        }
    }

    /// Relabels elements by a bijection: the result has `p(x)·p(y) = p(x·y)`.
    pub fn relabel(&self, p: &Permutation) -> CayleyTable {
        let n = self.order;
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[p.apply(x) * n + p.apply(y)] = p.apply(self.mul(x, y));
            }
        }
        CayleyTable { order: n, cells }
    }

    pub fn left_translation(&self, x: usize) -> Permutation {
        Permutation {
            image: (0..self.order).map(|y| self.mul(x, y)).collect(),
        }
    }

    pub fn right_translation(&self, y: usize) -> Permutation {
        Permutation {
            image: (0..self.order).map(|x| self.mul(x, y)).collect(),
        }
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n)
                .all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))))
        })
    }

    pub fn is_homomorphism(&self, target: &CayleyTable, f: &[usize]) -> bool {
        let n = self.order;
        (0..n).all(|x| (0..n).all(|y| f[self.mul(x, y)] == target.mul(f[x], f[y])))
    }
}

/// Parses the table file format: rows of integers, `#` comments, and an
/// optional `order: n` header.
pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let mut declared = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("order:") {
            if declared.is_some() || !rows.is_empty() {
                return Err(Error::Parse {
                    line: i + 1,
                    reason: "order header must come first".into(),
                });
            }
            declared = Some(rest.trim().parse::<usize>().map_err(|_| Error::Parse {
                line: i + 1,
                reason: format!("bad order `{}`", rest.trim()),
            })?);
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                reason: format!("`{tok}` is not an integer"),
            })?;
            if v < 0 {
                return Err(Error::OutOfRange {
                    row: rows.len(),
                    col: row.len(),
                    value: v,
                    order: line.split_whitespace().count(),
                });
            }
            row.push(v as usize);
        }
        rows.push(row);
    }
    if let Some(n) = declared {
        if n != rows.len() {
            return Err(Error::NonSquare {
                rows: n,
                row: rows.len(),
                cols: rows.first().map_or(0, Vec::len),
            });
        }
    }
    CayleyTable::from_rows(rows)
}

/// Inverse of [`parse_table`]: header plus right-aligned rows.
pub fn format_table(q: &CayleyTable) -> String {
    let width = (q.order().saturating_sub(1)).to_string().len();
    let mut s = format!("order: {}\n", q.order());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

impl FromStr for CayleyTable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_table(s)
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_table(self))
    }
}

/// The six operations sharing the relation `x·y = z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parastrophe {
    /// `x·y`.
    Mul,
    /// `x/y = z` iff `z·y = x`.
    RightDiv,
    /// `x\y = z` iff `x·z = y`.
    LeftDiv,
    /// `x∘y = y·x`.
    Opposite,
    /// `x//y = z` iff `z·x = y`.
    OppositeRightDiv,
    /// `x\\y = z` iff `y·z = x`.
    OppositeLeftDiv,
}

impl Parastrophe {
    pub const ALL: [Parastrophe; 6] = [
        Parastrophe::Mul,
        Parastrophe::RightDiv,
        Parastrophe::LeftDiv,
        Parastrophe::Opposite,
        Parastrophe::OppositeRightDiv,
        Parastrophe::OppositeLeftDiv,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Parastrophe::Mul => "*",
            Parastrophe::RightDiv => "/",
            Parastrophe::LeftDiv => "\\",
            Parastrophe::Opposite => "o",
            Parastrophe::OppositeRightDiv => "//",
            Parastrophe::OppositeLeftDiv => "\\\\",
        }
    }
}

impl FromStr for Parastrophe {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "*" | "." | "·" | "mul" => Parastrophe::Mul,
            "/" | "rdiv" => Parastrophe::RightDiv,
            "\\" | "ldiv" => Parastrophe::LeftDiv,
            "o" | "∘" | "op" => Parastrophe::Opposite,
            "//" | "op-rdiv" => Parastrophe::OppositeRightDiv,
            "\\\\" | "op-ldiv" => Parastrophe::OppositeLeftDiv,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopClass {
    Loop,
    LeftLoopOnly,
    RightLoopOnly,
    Neither,
}

impl fmt::Display for LoopClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoopClass::Loop => "loop",
            LoopClass::LeftLoopOnly => "left loop only",
            LoopClass::RightLoopOnly => "right loop only",
            LoopClass::Neither => "neither left nor right loop",
        })
    }
}

/// A bijection of `0..n` given by its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (i, &v) in image.iter().enumerate() {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Dimension(format!(
                    "image entry {i} breaks bijectivity"
                )));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Transposition of `a` and `b` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Permutation { image }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }
}

/// A finite monoid by its composition table; `table[i][j]` is `i ∘ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    /// Validates associativity and the identity law exhaustively.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let m = table.len();
        if table.iter().any(|r| r.len() != m) || identity >= m {
            return Err(Error::Dimension("monoid table must be square".into()));
        }
        let monoid = FiniteMonoid {
            size: m,
            table: table.into_iter().flatten().collect(),
            identity,
        };
        if monoid.table.iter().any(|&v| v >= m) {
            return Err(Error::Dimension("monoid table entry out of range".into()));
        }
        for a in 0..m {
            if monoid.compose(identity, a) != a || monoid.compose(a, identity) != a {
                return Err(Error::InternalInconsistency(format!(
                    "element {identity} is not an identity for {a}"
                )));
            }
            for b in 0..m {
                for c in 0..m {
                    let l = monoid.compose(monoid.compose(a, b), c);
                    let r = monoid.compose(a, monoid.compose(b, c));
                    if l != r {
                        return Err(Error::InternalInconsistency(format!(
                            "composition not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(monoid)
    }

    /// The monoid underlying an associative table with a two-sided identity.
    pub fn from_group_table(q: &CayleyTable) -> Result<Self> {
        let n = q.order();
        let e = (0..n)
            .find(|&e| (0..n).all(|x| q.mul(e, x) == x && q.mul(x, e) == x))
            .ok_or_else(|| Error::InternalInconsistency("table has no identity".into()))?;
        Self::new(q.rows(), e)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.table[i * self.size + j]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_group(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).any(|b| self.compose(a, b) == self.identity))
    }
}

/// Multiplication group together with its elements.
#[derive(Clone, Debug)]
pub struct MultiplicationGroup {
    pub elements: Vec<Permutation>,
    pub monoid: FiniteMonoid,
}

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// Closure of all left and right translations under composition.
pub fn multiplication_group(q: &CayleyTable, cap: usize) -> Result<MultiplicationGroup> {
    let n = q.order();
    let mut gens: Vec<Permutation> = (0..n)
        .flat_map(|x| [q.left_translation(x), q.right_translation(x)])
        .collect();
    gens.sort();
    gens.dedup();
    let id = Permutation::identity(n);
    let mut index: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let p = g.compose(&elements[i]);
            if !index.contains_key(&p) {
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                index.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let monoid = FiniteMonoid::new(table, 0)?;
    Ok(MultiplicationGroup { elements, monoid })
}

/// Endomorphisms as image arrays, sorted lexicographically.
#[derive(Clone, Debug)]
pub struct EndomorphismMonoid {
    pub maps: Vec<Vec<usize>>,
    /// `compose(i, j)` is `maps[i] ∘ maps[j]` (apply `j` first).
    pub monoid: FiniteMonoid,
}

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// All maps `f` with `f(x·y) = f(x)·f(y)`, by backtracking with propagation.
pub fn endomorphism_monoid(q: &CayleyTable, budget: u64) -> Result<EndomorphismMonoid> {
    let n = q.order();
    let mut maps = Vec::new();
    let mut nodes = 0u64;
    let mut partial = vec![None; n];
    search_endomorphisms(q, &mut partial, &mut maps, &mut nodes, budget)?;
    maps.sort();
    let index: HashMap<&Vec<usize>, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let table: Vec<Vec<usize>> = maps
        .iter()
        .map(|f| {
            maps.iter()
                .map(|g| index[&g.iter().map(|&x| f[x]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let identity = index[&(0..n).collect::<Vec<_>>()];
    let monoid = FiniteMonoid::new(table, identity)?;
    Ok(EndomorphismMonoid { maps, monoid })
}

fn search_endomorphisms(
    q: &CayleyTable,
    partial: &mut [Option<usize>],
    found: &mut Vec<Vec<usize>>,
    nodes: &mut u64,
    budget: u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::SearchBudgetExceeded { budget });
    }
    let Some(next) = partial.iter().position(Option::is_none) else {
        found.push(partial.iter().map(|v| v.expect("complete")).collect());
        return Ok(());
    };
    for image in 0..q.order() {
        let mut trial = partial.to_vec();
        trial[next] = Some(image);
        if propagate(q, &mut trial) {
            search_endomorphisms(q, &mut trial, found, nodes, budget)?;
        }
    }
    Ok(())
}

/// Forces `f(x·y) = f(x)·f(y)` wherever both factors are assigned; false on
/// a contradiction.
fn propagate(q: &CayleyTable, f: &mut [Option<usize>]) -> bool {
    let n = q.order();
    loop {
        let mut changed = false;
        for x in 0..n {
            let Some(fx) = f[x] else { continue };
            for y in 0..n {
                let Some(fy) = f[y] else { continue };
                let want = q.mul(fx, fy);
                match f[q.mul(x, y)] {
                    Some(v) if v != want => return false,
                    Some(_) => {}
                    None => {
                        f[q.mul(x, y)] = Some(want);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// First homology with the given substitution; for `(1,1)` this is the
/// abelianization, for `(1,-1)` and `(-1,1)` that of the `/` and `\`
/// parastrophes.
pub fn abelianization(q: &CayleyTable, t: i64, s: i64) -> Result<AbelianGroup> {
    crate::homology::h1(q, t, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> CayleyTable {
        parse_table("0 1 2 3\n2 0 3 1\n1 3 0 2\n3 2 1 0\n").unwrap()
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_table("0").unwrap().order(), 1);
        assert_eq!(
            parse_table("0 1\n1 1").unwrap_err(),
            Error::NotLatin {
                axis: Axis::Row,
                index: 1
            }
        );
        assert!(matches!(
            parse_table("0 1\n1"),
            Err(Error::NonSquare { .. })
        ));
        assert!(matches!(
            parse_table("0 2\n2 0"),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            parse_table("0 1\n0 1"),
            Err(Error::NotLatin {
                axis: Axis::Column,
                ..
            })
        ));
    }

    #[test]
    fn format_round_trips() {
        let q = a1();
        assert_eq!(parse_table(&format_table(&q)).unwrap(), q);
        let text = "# comment\norder: 2\n0 1\n1 0 # trailing\n";
        assert_eq!(parse_table(text).unwrap(), CayleyTable::cyclic(2));
    }

    #[test]
    fn divisions() {
        let q = a1();
        assert_eq!(q.left_divide(1, 3), 2);
        let z4 = CayleyTable::cyclic(4);
        assert_eq!(z4.left_divide(3, 1), 2);
        for y in 0..4 {
            assert_eq!(q.left_divide(y, q.mul(y, 0)), 0);
        }
    }

    #[test]
    fn loop_classes() {
        assert_eq!(CayleyTable::cyclic(4).loop_class(), LoopClass::Loop);
        assert_eq!(a1().loop_class(), LoopClass::LeftLoopOnly);
        let a2 = parse_table("0 2 1\n2 1 0\n1 0 2").unwrap();
        assert_eq!(a2.loop_class(), LoopClass::Neither);
    }

    #[test]
    fn parastrophes_are_latin_and_involutive() {
        let q = a1();
        for k in Parastrophe::ALL {
            let p = q.parastrophe(k);
            assert!(CayleyTable::from_rows(p.rows()).is_ok());
        }
        assert_eq!(q.parastrophe(Parastrophe::Mul), q);
        let t = q.parastrophe(Parastrophe::Opposite);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(t.mul(x, y), q.mul(y, x));
            }
        }
        // x/y then /: (x/y)/? pairs back through the opposite right division.
        let r = q.parastrophe(Parastrophe::RightDiv);
        assert_eq!(r.parastrophe(Parastrophe::RightDiv), q);
        let l = q.parastrophe(Parastrophe::LeftDiv);
        assert_eq!(l.parastrophe(Parastrophe::LeftDiv), q);
    }

    #[test]
    fn right_division_of_z3_is_subtraction() {
        let d = CayleyTable::cyclic(3).parastrophe(Parastrophe::RightDiv);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(d.mul(x, y), (x + 3 - y) % 3);
            }
        }
        let a3 = parse_table("0 2 1\n1 0 2\n2 1 0").unwrap();
        assert_eq!(d, a3);
    }

    #[test]
    fn mlt_of_cyclic_group_is_cyclic() {
        let g = multiplication_group(&CayleyTable::cyclic(5), DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.elements.len(), 5);
        assert!(g.monoid.is_group());
    }

    #[test]
    fn mlt_cap_is_enforced() {
        assert_eq!(
            multiplication_group(&a1(), 4).unwrap_err(),
            Error::GroupTooLarge { cap: 4 }
        );
    }

    #[test]
    fn endomorphisms_of_z2() {
        let e = endomorphism_monoid(&CayleyTable::cyclic(2), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(e.maps, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn endomorphism_budget() {
        assert!(matches!(
            endomorphism_monoid(&a1(), 2),
            Err(Error::SearchBudgetExceeded { budget: 2 })
        ));
    }
}
