//! Bol-Moufang identities: bracketings, letter patterns, word trees,
//! satisfaction checks, duality, and the registry of varieties.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::quasigroup::CayleyTable;

/// A bracketed word over indexed variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Word {
    Var(usize),
    Mul(Box<Word>, Box<Word>),
}

impl Word {
    pub fn var(i: usize) -> Word {
        Word::Var(i)
    }

    pub fn product(a: Word, b: Word) -> Word {
        Word::Mul(Box::new(a), Box::new(b))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Word::Var(_))
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Word::Var(i) => out.push(*i),
            Word::Mul(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Same shape with leaf `i` renamed to `f(i)`.
    pub fn rename(&self, f: &impl Fn(usize) -> usize) -> Word {
        match self {
            Word::Var(i) => Word::Var(f(*i)),
            Word::Mul(a, b) => Word::product(a.rename(f), b.rename(f)),
        }
    }

    /// Left-right reflection.
    pub fn mirror(&self) -> Word {
        match self {
            Word::Var(i) => Word::Var(*i),
            Word::Mul(a, b) => Word::product(b.mirror(), a.mirror()),
        }
    }

    /// Folds the tree bottom-up in `q` with `assignment[i]` for variable `i`.
    pub fn evaluate(&self, q: &CayleyTable, assignment: &[usize]) -> usize {
        match self {
            Word::Var(i) => assignment[*i],
            Word::Mul(a, b) => q.mul(a.evaluate(q, assignment), b.evaluate(q, assignment)),
        }
    }

    /// Parses words such as `x((xy)z)`, `(x1 x2)(x3 x4)` or `x_1(x_2x_3)`.
    ///
    /// Plain `x, y, z, w` are variables 0..3; `xN` or `x_N` is variable `N-1`.
    pub fn parse(text: &str) -> Result<Word> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_word(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(word_error(text, "trailing input"));
        }
        Ok(w)
    }
}

fn word_error(text: &str, reason: &str) -> Error {
    Error::Parse {
        line: 1,
        reason: format!("{reason} in word `{text}`"),
    }
}

fn parse_word(c: &[char], pos: &mut usize) -> Result<Word> {
    let src: String = c.iter().collect();
    let mut factors = Vec::new();
    while *pos < c.len() && c[*pos] != ')' && c[*pos] != ',' {
        factors.push(parse_factor(c, pos)?);
    }
    match factors.len() {
        1 => Ok(factors.pop().expect("one factor")),
        2 => {
            let b = factors.pop().expect("two factors");
            let a = factors.pop().expect("two factors");
            Ok(Word::product(a, b))
        }
        0 => Err(word_error(&src, "empty word")),
        _ => Err(word_error(
            &src,
            "ambiguous product of more than two factors",
        )),
    }
}

fn parse_factor(c: &[char], pos: &mut usize) -> Result<Word> {
    let src: String = c.iter().collect();
    match c[*pos] {
        '(' => {
            *pos += 1;
            let w = parse_word(c, pos)?;
            if c.get(*pos) != Some(&')') {
                return Err(word_error(&src, "unbalanced parenthesis"));
            }
            *pos += 1;
            Ok(w)
        }
        'x' | 'y' | 'z' | 'w' => {
            let letter = c[*pos];
            *pos += 1;
            if letter == 'x' {
                let mut p = *pos;
                if c.get(p) == Some(&'_') {
                    p += 1;
                }
                let start = p;
                while p < c.len() && c[p].is_ascii_digit() {
                    p += 1;
                }
                if p > start {
                    let n: usize = c[start..p]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| word_error(&src, "bad index"))?;
                    if n == 0 {
                        return Err(word_error(&src, "variable indices start at 1"));
                    }
                    *pos = p;
                    return Ok(Word::Var(n - 1));
                }
            }
            Ok(Word::Var("xyzw".find(letter).expect("listed letter")))
        }
        other => Err(word_error(&src, &format!("unexpected `{other}`"))),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Var(i) if *i < 4 => write!(f, "{}", ['x', 'y', 'z', 'w'][*i]),
            Word::Var(i) => write!(f, "x{}", i + 1),
            Word::Mul(a, b) => {
                for side in [a, b] {
                    if side.is_leaf() {
                        write!(f, "{side}")?;
                    } else {
                        write!(f, "({side})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// The five ways of bracketing a product of four factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketShape(u8);

impl BracketShape {
    pub const ALL: [BracketShape; 5] = [
        BracketShape(1),
        BracketShape(2),
        BracketShape(3),
        BracketShape(4),
        BracketShape(5),
    ];

    pub fn new(index: u8) -> Result<Self> {
        if (1..=5).contains(&index) {
            Ok(BracketShape(index))
        } else {
            Err(Error::UnknownName(format!("bracketing {index}")))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Shape with the bracketing reflected left to right.
    pub fn mirror(self) -> BracketShape {
        BracketShape(6 - self.0)
    }

    /// The shape with leaves labeled by the four given words.
    pub fn apply(self, [a, b, c, d]: [Word; 4]) -> Word {
        match self.0 {
            1 => Word::product(a, Word::product(b, Word::product(c, d))),
            2 => Word::product(a, Word::product(Word::product(b, c), d)),
            3 => Word::product(Word::product(a, b), Word::product(c, d)),
            4 => Word::product(Word::product(a, Word::product(b, c)), d),
            _ => Word::product(Word::product(Word::product(a, b), c), d),
        }
    }

    /// The shape on distinct leaves `x1..x4`.
    pub fn tree(self) -> Word {
        self.apply([Word::Var(0), Word::Var(1), Word::Var(2), Word::Var(3)])
    }
}

/// Order in which variables fill the four leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterPattern {
    A,
    B,
    C,
    D,
    E,
    F,
    /// Four distinct variables.
    X,
}

impl LetterPattern {
    pub const CLASSIC: [LetterPattern; 6] = [
        LetterPattern::A,
        LetterPattern::B,
        LetterPattern::C,
        LetterPattern::D,
        LetterPattern::E,
        LetterPattern::F,
    ];

    /// Variable index at each leaf.
    pub fn leaves(self) -> [usize; 4] {
        match self {
            LetterPattern::A => [0, 0, 1, 2],
            LetterPattern::B => [0, 1, 0, 2],
            LetterPattern::C => [0, 1, 1, 2],
            LetterPattern::D => [0, 1, 2, 0],
            LetterPattern::E => [0, 1, 2, 1],
            LetterPattern::F => [0, 1, 2, 2],
            LetterPattern::X => [0, 1, 2, 3],
        }
    }

    pub fn variables(self) -> usize {
        if self == LetterPattern::X {
            4
        } else {
            3
        }
    }

    pub fn letter(self) -> char {
        match self {
            LetterPattern::A => 'A',
            LetterPattern::B => 'B',
            LetterPattern::C => 'C',
            LetterPattern::D => 'D',
            LetterPattern::E => 'E',
            LetterPattern::F => 'F',
            LetterPattern::X => 'X',
        }
    }

    /// Pattern of the reversed word, renamed in order of appearance.
    pub fn mirror(self) -> LetterPattern {
        match self {
            LetterPattern::A => LetterPattern::F,
            LetterPattern::B => LetterPattern::E,
            LetterPattern::C => LetterPattern::C,
            LetterPattern::D => LetterPattern::D,
            LetterPattern::E => LetterPattern::B,
            LetterPattern::F => LetterPattern::A,
            LetterPattern::X => LetterPattern::X,
        }
    }

    fn from_letter(c: char) -> Option<LetterPattern> {
        Some(match c {
            'A' => LetterPattern::A,
            'B' => LetterPattern::B,
            'C' => LetterPattern::C,
            'D' => LetterPattern::D,
            'E' => LetterPattern::E,
            'F' => LetterPattern::F,
            'X' => LetterPattern::X,
            _ => return None,
        })
    }
}

/// Word of a pattern bracketed by a shape, e.g. `(A, 2)` is `x((xy)z)`.
pub fn word_tree(pattern: LetterPattern, shape: BracketShape) -> Word {
    shape.apply(pattern.leaves().map(Word::Var))
}

/// The identity with left side `pattern` in shape `left` and right side in
/// shape `right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BmIdentity {
    pub pattern: LetterPattern,
    pub left: BracketShape,
    pub right: BracketShape,
}

impl BmIdentity {
    pub fn new(pattern: LetterPattern, left: u8, right: u8) -> Result<Self> {
        if left >= right {
            return Err(Error::UnknownName(format!(
                "{}{left}{right} needs left shape < right shape",
                pattern.letter()
            )));
        }
        Ok(BmIdentity {
            pattern,
            left: BracketShape::new(left)?,
            right: BracketShape::new(right)?,
        })
    }

    /// Every identity with a three-variable pattern: 6 patterns x 10 pairs.
    pub fn all_classic() -> Vec<BmIdentity> {
        let mut out = Vec::new();
        for p in LetterPattern::CLASSIC {
            for i in 1..=5 {
                for j in i + 1..=5 {
                    out.push(BmIdentity::new(p, i, j).expect("i < j"));
                }
            }
        }
        out
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn variables(&self) -> usize {
        self.pattern.variables()
    }

    pub fn left_word(&self) -> Word {
        word_tree(self.pattern, self.left)
    }

    pub fn right_word(&self) -> Word {
        word_tree(self.pattern, self.right)
    }

    /// Reverses both sides; `Vij` becomes `V'j'i'`.
    pub fn dual(&self) -> Result<BmIdentity> {
        if self.pattern == LetterPattern::X && self.implies_associativity() {
            return Err(Error::DualUndefined(self.name()));
        }
        Ok(BmIdentity {
            pattern: self.pattern.mirror(),
            left: self.right.mirror(),
            right: self.left.mirror(),
        })
    }

    /// Four-variable identities other than X14, X15, X25 force associativity.
    pub fn implies_associativity(&self) -> bool {
        self.pattern == LetterPattern::X
            && !matches!((self.left.0, self.right.0), (1, 4) | (1, 5) | (2, 5))
    }

    /// The same bracketing pair on four distinct variables.
    pub fn four_variable_form(&self) -> BmIdentity {
        BmIdentity {
            pattern: LetterPattern::X,
            ..*self
        }
    }
}

impl fmt::Display for BmIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{}",
            self.pattern.letter(),
            self.left.0,
            self.right.0
        )
    }
}

impl FromStr for BmIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        let unknown = || Error::UnknownName(s.to_string());
        if chars.len() != 3 {
            return Err(unknown());
        }
        let pattern = LetterPattern::from_letter(chars[0]).ok_or_else(unknown)?;
        let i = chars[1].to_digit(10).ok_or_else(unknown)? as u8;
        let j = chars[2].to_digit(10).ok_or_else(unknown)? as u8;
        BmIdentity::new(pattern, i, j)
    }
}

impl serde::Serialize for BmIdentity {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for BmIdentity {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Evaluates a word at every assignment.
pub fn evaluate_word(q: &CayleyTable, tree: &Word, assignment: &[usize]) -> usize {
    tree.evaluate(q, assignment)
}

/// Exhaustive check over all `n^3` (or `n^4`) assignments.
pub fn satisfies(q: &CayleyTable, id: &BmIdentity) -> bool {
    first_violation(q, id).is_none()
}

/// An assignment where the two sides differ, if any.
pub fn first_violation(q: &CayleyTable, id: &BmIdentity) -> Option<Vec<usize>> {
    let (l, r) = (id.left_word(), id.right_word());
    let k = id.variables();
    let n = q.order();
    let mut a = vec![0; k];
    loop {
        if l.evaluate(q, &a) != r.evaluate(q, &a) {
            return Some(a);
        }
        // Odometer increment, last coordinate fastest.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            a[i] += 1;
            if a[i] < n {
                break;
            }
            a[i] = 0;
        }
    }
}

/// Neutral-element behaviour shared by a variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopSuperscript {
    /// Two-sided loop.
    Two,
    /// Left loop.
    L,
    /// Right loop.
    R,
    /// Neither.
    Zero,
}

impl fmt::Display for LoopSuperscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoopSuperscript::Two => "2",
            LoopSuperscript::L => "L",
            LoopSuperscript::R => "R",
            LoopSuperscript::Zero => "0",
        })
    }
}

/// A family of affine parameters `(t, s)` over a ring without zero divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarFamily {
    Point {
        t: i64,
        s: i64,
    },
    /// `s` fixed, `t` any unit.
    AnyT {
        s: i64,
    },
    /// `t` fixed, `s` any unit.
    AnyS {
        t: i64,
    },
    /// `t = s`.
    Diagonal,
    /// `t + s = 1`.
    Alexander,
}

/// Constraint on the translation constant `c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OffsetRule {
    Free,
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SolutionFamily {
    pub scalars: ScalarFamily,
    pub offset: OffsetRule,
}

impl SolutionFamily {
    const fn free(scalars: ScalarFamily) -> Self {
        SolutionFamily {
            scalars,
            offset: OffsetRule::Free,
        }
    }

    /// Membership of `(t, s, c0)` reduced modulo `n`.
    pub fn contains_mod(&self, t: u64, s: u64, c0: u64, n: u64) -> bool {
        let m = |v: i64| v.rem_euclid(n as i64) as u64;
        let scalars = match self.scalars {
            ScalarFamily::Point { t: pt, s: ps } => t % n == m(pt) && s % n == m(ps),
            ScalarFamily::AnyT { s: ps } => s % n == m(ps),
            ScalarFamily::AnyS { t: pt } => t % n == m(pt),
            ScalarFamily::Diagonal => t % n == s % n,
            ScalarFamily::Alexander => (t + s) % n == 1 % n,
        };
        scalars && (self.offset == OffsetRule::Free || c0.is_multiple_of(n))
    }

    /// Integer substitutions for homology, free parameters ranging over ±1.
    pub fn integer_points(&self) -> Vec<(i64, i64)> {
        let units = [1i64, -1];
        match self.scalars {
            ScalarFamily::Point { t, s } => vec![(t, s)],
            ScalarFamily::AnyT { s } => units.iter().map(|&t| (t, s)).collect(),
            ScalarFamily::AnyS { t } => units.iter().map(|&s| (t, s)).collect(),
            ScalarFamily::Diagonal => units.iter().map(|&u| (u, u)).collect(),
            ScalarFamily::Alexander => units
                .iter()
                .flat_map(|&t| units.iter().map(move |&s| (t, s)))
                .filter(|&(t, s)| t + s == 1)
                .collect(),
        }
    }
}

/// One of the varieties of Bol-Moufang quasigroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyEntry {
    pub name: &'static str,
    pub identities: Vec<BmIdentity>,
    pub superscript: LoopSuperscript,
    pub solutions: Vec<SolutionFamily>,
    pub dual: &'static str,
}

impl VarietyEntry {
    /// Integer `(t, s)` substitutions, deduplicated in listing order.
    pub fn integer_points(&self) -> Vec<(i64, i64)> {
        let mut out: Vec<(i64, i64)> = Vec::new();
        for f in &self.solutions {
            for p in f.integer_points() {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn predicts_mod(&self, t: u64, s: u64, c0: u64, n: u64) -> bool {
        self.solutions.iter().any(|f| f.contains_mod(t, s, c0, n))
    }
}

/// Identities equivalent to associativity among three-variable identities.
const GROUP_IDENTITIES: [&str; 22] = [
    "A12", "A24", "B12", "B13", "B24", "B34", "B35", "C13", "C23", "C34", "C35", "D12", "D13",
    "D35", "D45", "E13", "E23", "E24", "E35", "E45", "F24", "F45",
];

fn build_registry() -> Vec<VarietyEntry> {
    use LoopSuperscript::*;
    use ScalarFamily::*;
    let pt = |t, s| SolutionFamily::free(Point { t, s });
    let one = vec![pt(1, 1)];
    let left_pm = vec![pt(1, 1), pt(-1, 1)];
    let right_pm = vec![pt(1, 1), pt(1, -1)];
    let ids = |names: &[&str]| -> Vec<BmIdentity> {
        names
            .iter()
            .map(|n| n.parse().expect("registry identity names are well formed"))
            .collect()
    };
    let entry =
        |name, names: &[&str], superscript, solutions: Vec<SolutionFamily>, dual| VarietyEntry {
            name,
            identities: ids(names),
            superscript,
            solutions,
            dual,
        };
    vec![
        entry("GR", &GROUP_IDENTITIES, Two, one.clone(), "GR"),
        entry("RG1^L", &["A25", "D25"], L, left_pm.clone(), "LG1^R"),
        entry("LG1^R", &["F14", "D14"], R, right_pm.clone(), "RG1^L"),
        entry(
            "RG2^L",
            &["A23"],
            L,
            vec![SolutionFamily::free(AnyT { s: 1 })],
            "LG2^R",
        ),
        entry(
            "LG2^R",
            &["F34"],
            R,
            vec![SolutionFamily::free(AnyS { t: 1 })],
            "RG2^L",
        ),
        entry("RG3^L", &["B25"], L, left_pm.clone(), "LG3^R"),
        entry("LG3^R", &["E14"], R, right_pm.clone(), "RG3^L"),
        entry("EQ^2", &["B23", "D15", "E34"], Two, one.clone(), "EQ^2"),
        entry(
            "MQ^2",
            &["B15", "D23", "D34", "E15"],
            Two,
            one.clone(),
            "MQ^2",
        ),
        entry("LBQ^R", &["B14"], R, right_pm.clone(), "RBQ^L"),
        entry("RBQ^L", &["E25"], L, left_pm.clone(), "LBQ^R"),
        entry("CQ^0", &["C15"], Zero, vec![pt(1, 1), pt(-1, -1)], "CQ^0"),
        entry("LC1^2", &["A34"], Two, one.clone(), "RC1^2"),
        entry(
            "LC2^0",
            &["A14"],
            Zero,
            vec![pt(1, 1), SolutionFamily::free(AnyT { s: -1 })],
            "RC2^0",
        ),
        entry("LC3^L", &["A15"], L, vec![pt(1, 1), pt(-2, 1)], "RC3^R"),
        entry("LC4^R", &["C14"], R, right_pm.clone(), "RC4^L"),
        entry("RC1^2", &["F23"], Two, one.clone(), "LC1^2"),
        entry(
            "RC2^0",
            &["F25"],
            Zero,
            vec![pt(1, 1), SolutionFamily::free(AnyS { t: -1 })],
            "LC2^0",
        ),
        entry("RC3^R", &["F15"], R, vec![pt(1, 1), pt(1, -2)], "LC3^L"),
        entry("RC4^L", &["C25"], L, left_pm.clone(), "LC4^R"),
        entry("LAQ^L", &["A13", "A45", "C12"], L, one.clone(), "RAQ^R"),
        entry("RAQ^R", &["C45", "F12", "F35"], R, one.clone(), "LAQ^L"),
        entry(
            "FQ^0",
            &["B45", "D24", "E12"],
            Zero,
            vec![
                SolutionFamily::free(Diagonal),
                SolutionFamily {
                    scalars: Alexander,
                    offset: OffsetRule::Zero,
                },
            ],
            "FQ^0",
        ),
        entry("LNQ^L", &["A35"], L, left_pm, "RNQ^R"),
        entry("MNQ^2", &["C24"], Two, one, "MNQ^2"),
        entry("RNQ^R", &["F13"], R, right_pm, "LNQ^L"),
    ]
}

/// The 26 varieties with their defining identities, affine solutions and
/// duals.
pub fn variety_registry() -> &'static [VarietyEntry] {
    static REGISTRY: OnceLock<Vec<VarietyEntry>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

pub fn variety(name: &str) -> Result<&'static VarietyEntry> {
    variety_registry()
        .iter()
        .find(|v| v.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// The variety an identity belongs to.
pub fn variety_of(id: &BmIdentity) -> Option<&'static VarietyEntry> {
    variety_registry()
        .iter()
        .find(|v| v.identities.contains(id))
}

/// Satisfaction of every variety; identities of one variety must agree.
pub fn classify(q: &CayleyTable) -> Result<Vec<(&'static VarietyEntry, bool)>> {
    variety_registry()
        .iter()
        .map(|v| {
            let verdicts: Vec<bool> = v.identities.iter().map(|id| satisfies(q, id)).collect();
            if verdicts.iter().any(|&b| b != verdicts[0]) {
                let detail: Vec<String> = v
                    .identities
                    .iter()
                    .zip(&verdicts)
                    .map(|(id, b)| format!("{id}={b}"))
                    .collect();
                return Err(Error::InternalInconsistency(format!(
                    "identities of {} disagree: {}",
                    v.name,
                    detail.join(", ")
                )));
            }
            Ok((v, verdicts[0]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasigroup::parse_table;

    fn a1() -> CayleyTable {
        parse_table("0 1 2 3\n2 0 3 1\n1 3 0 2\n3 2 1 0").unwrap()
    }

    #[test]
    fn word_trees() {
        assert_eq!(
            word_tree(LetterPattern::A, BracketShape(2)).to_string(),
            "x((xy)z)"
        );
        assert_eq!(
            word_tree(LetterPattern::F, BracketShape(5)).to_string(),
            "((xy)z)z"
        );
        assert_eq!(BracketShape(3).tree(), Word::parse("(x1x2)(x3x4)").unwrap());
        assert_eq!(
            word_tree(LetterPattern::X, BracketShape(3)).to_string(),
            "(xy)(zw)"
        );
    }

    #[test]
    fn word_parsing() {
        let w = Word::parse("x (y z)").unwrap();
        assert_eq!(
            w,
            Word::product(Word::Var(0), Word::product(Word::Var(1), Word::Var(2)))
        );
        assert_eq!(Word::parse("x_3").unwrap(), Word::Var(2));
        assert!(Word::parse("xyz").is_err());
        assert!(Word::parse("(xy").is_err());
    }

    #[test]
    fn evaluation() {
        let z5 = CayleyTable::cyclic(5);
        let d1 = word_tree(LetterPattern::D, BracketShape(1));
        assert_eq!(evaluate_word(&z5, &d1, &[1, 2, 3]), 2);
        // x((xy)z) in A1 at x=1, y=2, z=3: 1·2=3, 3·3=0, 1·0=2.
        let a2 = word_tree(LetterPattern::A, BracketShape(2));
        assert_eq!(evaluate_word(&a1(), &a2, &[1, 2, 3]), 2);
    }

    #[test]
    fn satisfaction() {
        let q = a1();
        assert!(satisfies(&q, &"E25".parse().unwrap()));
        assert!(!satisfies(&q, &"D15".parse().unwrap()));
        let z4 = CayleyTable::cyclic(4);
        assert!(BmIdentity::all_classic()
            .iter()
            .all(|id| satisfies(&z4, id)));
    }

    #[test]
    fn duals() {
        let d = |s: &str| s.parse::<BmIdentity>().unwrap().dual().unwrap().to_string();
        assert_eq!(d("E25"), "B14");
        assert_eq!(d("C15"), "C15");
        assert_eq!(d("A25"), "F14");
        assert_eq!(d("X14"), "X25");
        assert_eq!(d("X15"), "X15");
        assert!(matches!(
            "X12".parse::<BmIdentity>().unwrap().dual(),
            Err(Error::DualUndefined(_))
        ));
        for id in BmIdentity::all_classic() {
            assert_eq!(id.dual().unwrap().dual().unwrap(), id);
        }
    }

    #[test]
    fn registry_shape() {
        let reg = variety_registry();
        assert_eq!(reg.len(), 26);
        let mut all: Vec<BmIdentity> = reg.iter().flat_map(|v| v.identities.clone()).collect();
        all.sort();
        assert_eq!(all, {
            let mut c = BmIdentity::all_classic();
            c.sort();
            c
        });
        for v in reg {
            let d = variety(v.dual).unwrap();
            assert_eq!(d.dual, v.name);
            let mut mirrored: Vec<BmIdentity> =
                v.identities.iter().map(|i| i.dual().unwrap()).collect();
            mirrored.sort();
            let mut theirs = d.identities.clone();
            theirs.sort();
            assert_eq!(mirrored, theirs, "dual of {}", v.name);
            for (t, s) in v.integer_points() {
                match v.superscript {
                    LoopSuperscript::L => assert_eq!(s, 1, "{}", v.name),
                    LoopSuperscript::R => assert_eq!(t, 1, "{}", v.name),
                    _ => {}
                }
            }
        }
        let rbq = variety("RBQ^L").unwrap();
        assert_eq!(rbq.integer_points(), vec![(1, 1), (-1, 1)]);
        assert!(variety("FQ^0").unwrap().integer_points().len() == 2);
    }

    #[test]
    fn classify_a1() {
        let sat: Vec<&str> = classify(&a1())
            .unwrap()
            .into_iter()
            .filter(|(_, b)| *b)
            .map(|(v, _)| v.name)
            .collect();
        assert_eq!(
            sat,
            vec!["RG1^L", "RG2^L", "RG3^L", "RBQ^L", "LC2^0", "RC2^0", "RC4^L", "LNQ^L"]
        );
    }
}
