//! The embedded corpus of worked examples: nineteen tables with their
//! satisfied identities and expected homology.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::identities::BmIdentity;
use crate::quasigroup::{parse_table, CayleyTable};

/// An expected `H1(X; t, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenH1 {
    pub t: i64,
    pub s: i64,
    pub group: AbelianGroup,
}

/// An expected `H2(X; id, t, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenH2 {
    pub identity: BmIdentity,
    pub t: i64,
    pub s: i64,
    pub group: AbelianGroup,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub table: CayleyTable,
    /// Identities listed for the example, in listed order.
    pub satisfies: Vec<BmIdentity>,
    pub h1: Vec<GoldenH1>,
    pub h2: Vec<GoldenH2>,
}

macro_rules! tables {
    ($($name:literal),* $(,)?) => {
        [$(($name, include_str!(concat!("../data/tables/", $name, ".tbl")))),*]
    };
}

const TABLES: [(&str, &str); 19] = tables!(
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11", "A12", "A13", "A14", "A15",
    "A16", "A17", "A18", "A19",
);

const GOLDEN: &str = include_str!("../data/golden.txt");

/// Listed identities that the accompanying table does not satisfy. The
/// example's list repeats that of the example with the same identities
/// before it; no homology is reported for these two.
pub const LISTING_ERRATA: [(&str, &str); 2] = [("A6", "F34"), ("A6", "F13")];

/// Raw text of a corpus table, as shipped.
pub fn table_source(id: &str) -> Option<&'static str> {
    TABLES.iter().find(|(n, _)| *n == id).map(|(_, t)| *t)
}

struct GoldenBlock {
    id: String,
    order: usize,
    satisfies: Vec<BmIdentity>,
    h1: Vec<GoldenH1>,
    h2: Vec<GoldenH2>,
}

fn parse_error(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_int(tok: Option<&str>, line: usize) -> Result<i64> {
    tok.ok_or_else(|| parse_error(line, "missing integer"))?
        .parse()
        .map_err(|_| parse_error(line, "bad integer"))
}

fn parse_group(rest: &[&str], line: usize) -> Result<AbelianGroup> {
    rest.join(" ")
        .parse()
        .map_err(|e| parse_error(line, format!("bad group: {e}")))
}

fn parse_golden(text: &str) -> Result<Vec<GoldenBlock>> {
    let mut blocks: Vec<GoldenBlock> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let Some((&head, rest)) = toks.split_first() else {
            continue;
        };
        if head.starts_with('#') {
            continue;
        }
        if head == "example" {
            let [id, order] = rest else {
                return Err(parse_error(line, "expected: example <id> <order>"));
            };
            blocks.push(GoldenBlock {
                id: id.to_string(),
                order: order.parse().map_err(|_| parse_error(line, "bad order"))?,
                satisfies: Vec::new(),
                h1: Vec::new(),
                h2: Vec::new(),
            });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| parse_error(line, "entry before any example"))?;
        match head {
            "satisfies" => {
                for name in rest {
                    block.satisfies.push(name.parse()?);
                }
            }
            "h1" => {
                let mut it = rest.iter().copied();
                let t = parse_int(it.next(), line)?;
                let s = parse_int(it.next(), line)?;
                let group = parse_group(&rest[2..], line)?;
                block.h1.push(GoldenH1 { t, s, group });
            }
            "h2" => {
                if rest.len() < 4 {
                    return Err(parse_error(line, "expected: h2 <identity> <t> <s> <group>"));
                }
                let identity = rest[0].parse()?;
                let t = parse_int(Some(rest[1]), line)?;
                let s = parse_int(Some(rest[2]), line)?;
                let group = parse_group(&rest[3..], line)?;
                block.h2.push(GoldenH2 {
                    identity,
                    t,
                    s,
                    group,
                });
            }
            other => return Err(parse_error(line, format!("unknown directive {other}"))),
        }
    }
    Ok(blocks)
}

fn load() -> Result<Vec<CorpusEntry>> {
    parse_golden(GOLDEN)?
        .into_iter()
        .map(|b| {
            let src = table_source(&b.id).ok_or_else(|| Error::UnknownName(b.id.clone()))?;
            let table = parse_table(src)?;
            if table.order() != b.order {
                return Err(Error::Dimension(format!(
                    "{} has order {}, golden file says {}",
                    b.id,
                    table.order(),
                    b.order
                )));
            }
            Ok(CorpusEntry {
                id: b.id,
                table,
                satisfies: b.satisfies,
                h1: b.h1,
                h2: b.h2,
            })
        })
        .collect()
}

/// All nineteen examples in order.
pub fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(|| load().expect("embedded corpus is well formed"))
}

pub fn corpus_entry(id: &str) -> Result<&'static CorpusEntry> {
    corpus()
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownName(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::satisfies;

    #[test]
    fn loads_all_examples() {
        let c = corpus();
        assert_eq!(c.len(), 19);
        assert_eq!(corpus_entry("A15").unwrap().table.order(), 12);
        let cells: usize = c.iter().map(|e| e.h1.len() + e.h2.len()).sum();
        assert!(cells > 200);
    }

    #[test]
    fn preamble_identities_hold() {
        let mut failing = Vec::new();
        for e in corpus() {
            for id in &e.satisfies {
                if !satisfies(&e.table, id) {
                    failing.push((e.id.as_str(), id.to_string()));
                }
            }
            for g in &e.h2 {
                assert!(
                    satisfies(&e.table, &g.identity),
                    "{} / {}",
                    e.id,
                    g.identity
                );
            }
        }
        let errata: Vec<(&str, String)> = LISTING_ERRATA
            .iter()
            .map(|(e, i)| (*e, i.to_string()))
            .collect();
        assert_eq!(failing, errata);
    }

    #[test]
    fn rejects_malformed_golden() {
        assert!(parse_golden("h1 1 1 Z").is_err());
        assert!(parse_golden("example A1 4\nh2 E25 1 Z").is_err());
        assert!(parse_golden("example A1 4\nfoo").is_err());
    }
}
