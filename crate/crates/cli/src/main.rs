use std::path::Path;
use std::process::ExitCode;

use bmhom::affine::{solve_affine, AffineSpec};
use bmhom::category::{category_h1_h2, DEFAULT_NERVE_BUDGET};
use bmhom::corpus::{corpus, corpus_entry, CorpusEntry};
use bmhom::extensions::{cocycle_condition, extension_table, Cochain2};
use bmhom::homology::{h1, h2};
use bmhom::identities::{classify, satisfies, BmIdentity};
use bmhom::quasigroup::{
    endomorphism_monoid, format_table, multiplication_group, parse_table, DEFAULT_GROUP_CAP,
    DEFAULT_SEARCH_BUDGET,
};
use bmhom::report::{golden_rows, render_text, valid_substitutions};
use bmhom::{CayleyTable, Parastrophe, ReportRow};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bmhom",
    version,
    about = "Homology of finite Bol-Moufang quasigroups"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random cochains.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on search nodes, group elements, or nerve chains.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

/// A table file, or the name of a corpus example such as `A1`.
#[derive(Args)]
struct TableArg {
    table: String,
}

#[derive(Args)]
struct Substitution {
    #[arg(short, long, default_value_t = 1, allow_negative_numbers = true)]
    t: i64,
    #[arg(short, long, default_value_t = 1, allow_negative_numbers = true)]
    s: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Satisfied identities, varieties, loop class and substitutions.
    Check(TableArg),
    /// First homology.
    H1 {
        #[command(flatten)]
        table: TableArg,
        #[command(flatten)]
        sub: Substitution,
        /// Compare with the embedded corpus value.
        #[arg(long)]
        golden: bool,
    },
    /// Second homology for one identity.
    H2 {
        #[command(flatten)]
        table: TableArg,
        #[arg(short, long)]
        identity: BmIdentity,
        #[command(flatten)]
        sub: Substitution,
        #[arg(long)]
        golden: bool,
    },
    /// Affine quasigroups over Z/n satisfying an identity.
    AffineSolve {
        #[arg(short, long)]
        identity: BmIdentity,
        #[arg(short = 'n', long)]
        modulus: u64,
    },
    /// Parastrophes and their abelianizations.
    Parastrophe {
        #[command(flatten)]
        table: TableArg,
        /// One of mul, rdiv, ldiv, op, op-rdiv, op-ldiv; all six if omitted.
        #[arg(short, long)]
        kind: Option<Parastrophe>,
    },
    /// Multiplication group.
    Mlt(TableArg),
    /// Nerve homology of the endomorphism monoid or multiplication group.
    CatHomology {
        #[command(flatten)]
        table: TableArg,
        #[arg(long, value_enum, default_value_t = Source::End)]
        source: Source,
    },
    /// Extension of an affine quasigroup by a table through a 2-cochain.
    Extend {
        #[arg(long)]
        base: String,
        #[arg(short = 'n', long)]
        modulus: u64,
        #[command(flatten)]
        sub: Substitution,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        c0: i64,
        /// File of cochain rows; a seeded random cochain if omitted.
        #[arg(long)]
        phi: Option<String>,
        /// Decide whether the cochain is a cocycle for this identity.
        #[arg(short, long)]
        identity: Option<BmIdentity>,
    },
    /// Recompute every corpus cell against its expected value.
    Report {
        /// Restrict to one example.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    End,
    Mlt,
}

const DATA_ERROR: u8 = 2;
const GOLDEN_MISMATCH: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<bmhom::Error> for Failure {
    fn from(e: bmhom::Error) -> Self {
        Failure {
            code: DATA_ERROR,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn data_error(message: String) -> Failure {
    Failure {
        code: DATA_ERROR,
        message,
    }
}

fn warn(kind: &str, message: &str) {
    eprintln!("warning: {kind}: {message}");
}

fn load_table(arg: &str) -> Result<(CayleyTable, String), Failure> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| data_error(format!("{arg}: {e}")))?;
        let table = parse_table(&text).map_err(|e| data_error(format!("{arg}: {e}")))?;
        return Ok((table, arg.to_string()));
    }
    match corpus_entry(arg) {
        Ok(e) => Ok((e.table.clone(), e.id.clone())),
        Err(_) => Err(data_error(format!("{arg}: no such file or corpus example"))),
    }
}

fn emit(json: bool, value: &Value, text: &str) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    } else {
        print!("{text}");
    }
}

fn cmd_check(cli: &Cli, arg: &TableArg) -> Outcome {
    let (q, name) = load_table(&arg.table)?;
    let identities: Vec<BmIdentity> = BmIdentity::all_classic()
        .into_iter()
        .filter(|id| satisfies(&q, id))
        .collect();
    let varieties: Vec<&str> = classify(&q)?
        .into_iter()
        .filter(|(_, holds)| *holds)
        .map(|(v, _)| v.name)
        .collect();
    let subs = valid_substitutions(&q)?;
    let associative = q.is_associative();
    let value = json!({
        "table": name,
        "order": q.order(),
        "associative": associative,
        "loop_class": q.loop_class().to_string(),
        "identities": identities,
        "varieties": varieties,
        "substitutions": subs,
    });
    let mut text = format!("table: {name} (order {})\n", q.order());
    if associative {
        text.push_str("group: all identities satisfied\n");
    }
    let names: Vec<String> = identities.iter().map(|i| i.to_string()).collect();
    text.push_str(&format!("identities: {}\n", names.join(" ")));
    text.push_str(&format!("varieties: {}\n", varieties.join(" ")));
    text.push_str(&format!("loop class: {}\n", q.loop_class()));
    let subs_text: Vec<String> = subs.iter().map(|(t, s)| format!("({t},{s})")).collect();
    text.push_str(&format!("substitutions: {}\n", subs_text.join(" ")));
    emit(cli.json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn corpus_match(q: &CayleyTable) -> Option<&'static CorpusEntry> {
    corpus().iter().find(|e| e.table == *q)
}

fn cmd_homology(
    cli: &Cli,
    arg: &TableArg,
    identity: Option<BmIdentity>,
    sub: &Substitution,
    golden: bool,
) -> Outcome {
    let (q, name) = load_table(&arg.table)?;
    let (t, s) = (sub.t, sub.s);
    if let Some(id) = &identity {
        if !satisfies(&q, id) {
            warn(
                "IdentityNotSatisfied",
                &format!("{name} does not satisfy {id}"),
            );
        }
    }
    if !valid_substitutions(&q)?.contains(&(t, s)) {
        warn(
            "SubstitutionNotValid",
            &format!("({t},{s}) is not a substitution of any variety containing {name}"),
        );
    }
    let group = match &identity {
        None => h1(&q, t, s)?,
        Some(id) => h2(&q, id, t, s)?,
    };
    let entry = corpus_match(&q);
    let expected = if golden {
        let found = entry.and_then(|e| match &identity {
            None => {
                e.h1.iter()
                    .find(|g| (g.t, g.s) == (t, s))
                    .map(|g| g.group.clone())
            }
            Some(id) => {
                e.h2.iter()
                    .find(|g| g.identity == *id && (g.t, g.s) == (t, s))
                    .map(|g| g.group.clone())
            }
        });
        if found.is_none() {
            warn("NoGoldenValue", "the corpus has no value for this cell");
        }
        found
    } else {
        None
    };
    let row = ReportRow {
        quasigroup: entry.map_or(name, |e| e.id.clone()),
        degree: if identity.is_some() { 2 } else { 1 },
        identity,
        t,
        s,
        group,
        expected,
    };
    let text = if golden {
        format!("{row}\n")
    } else {
        format!("{}\n", row.group)
    };
    emit(cli.json, &json!(row), &text);
    Ok(if row.matches() == Some(false) {
        ExitCode::from(GOLDEN_MISMATCH)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_affine_solve(cli: &Cli, id: &BmIdentity, n: u64) -> Outcome {
    if n == 0 {
        return Err(data_error("modulus must be positive".into()));
    }
    let mut sols = solve_affine(id, n)?;
    sols.sort();
    let text: String = sols
        .iter()
        .map(|a| format!("t={} s={} c0={}\n", a.t, a.s, a.c0))
        .collect();
    let text = format!("{text}{} solutions\n", sols.len());
    emit(cli.json, &json!(sols), &text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_parastrophe(cli: &Cli, arg: &TableArg, kind: Option<Parastrophe>) -> Outcome {
    let (q, _) = load_table(&arg.table)?;
    let kinds: Vec<Parastrophe> = kind.map_or(Parastrophe::ALL.to_vec(), |k| vec![k]);
    let mut values = Vec::new();
    let mut text = String::new();
    for k in kinds {
        let p = q.parastrophe(k);
        let ab = h1(&p, 1, 1)?;
        text.push_str(&format!(
            "operation {}\n{}abelianization: {ab}\n",
            k.symbol(),
            format_table(&p)
        ));
        values.push(json!({ "operation": k.symbol(), "table": p.rows(), "abelianization": ab }));
    }
    emit(cli.json, &json!(values), &text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_mlt(cli: &Cli, arg: &TableArg) -> Outcome {
    let (q, _) = load_table(&arg.table)?;
    let cap = cli.budget.map_or(DEFAULT_GROUP_CAP, |b| b as usize);
    let mlt = multiplication_group(&q, cap)?;
    let perms: Vec<Vec<usize>> = mlt.elements.iter().map(|p| p.image().to_vec()).collect();
    let mut text = format!("order: {}\n", perms.len());
    for p in &perms {
        let cells: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    emit(
        cli.json,
        &json!({ "order": perms.len(), "elements": perms }),
        &text,
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_cat_homology(cli: &Cli, arg: &TableArg, source: Source) -> Outcome {
    let (q, _) = load_table(&arg.table)?;
    let monoid = match source {
        Source::End => endomorphism_monoid(&q, cli.budget.unwrap_or(DEFAULT_SEARCH_BUDGET))?.monoid,
        Source::Mlt => {
            let cap = cli.budget.map_or(DEFAULT_GROUP_CAP, |b| b as usize);
            multiplication_group(&q, cap)?.monoid
        }
    };
    let (g1, g2) = category_h1_h2(&monoid, cli.budget.unwrap_or(DEFAULT_NERVE_BUDGET))?;
    let label = match source {
        Source::End => "End",
        Source::Mlt => "Mlt",
    };
    let text = format!(
        "source: {label}\nsize: {}\nH1: {g1}\nH2: {g2}\n",
        monoid.size()
    );
    let value = json!({ "source": label, "size": monoid.size(), "h1": g1, "h2": g2 });
    emit(cli.json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn read_cochain(path: &str, order: usize, m: u64) -> Result<Cochain2, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| data_error(format!("{path}: {e}")))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| tok.parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| data_error(format!("{path}: line {}: bad integer", i + 1)))?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(data_error(format!(
            "{path}: expected {order} rows, found {}",
            rows.len()
        )));
    }
    Cochain2::from_rows(&rows, m).map_err(|e| data_error(format!("{path}: {e}")))
}

fn cmd_extend(
    cli: &Cli,
    base: &str,
    m: u64,
    sub: &Substitution,
    c0: i64,
    phi: Option<&str>,
    identity: Option<BmIdentity>,
) -> Outcome {
    let (x, _) = load_table(base)?;
    let a = AffineSpec::new(m, sub.t, sub.s, c0)?;
    let phi = match phi {
        Some(path) => read_cochain(path, x.order(), m)?,
        None => Cochain2::random(x.order(), m, &mut ChaCha8Rng::seed_from_u64(cli.seed)),
    };
    let e = extension_table(&a, &x, &phi)?;
    let cocycle = match identity {
        Some(id) if c0 == 0 => Some(cocycle_condition(&x, &id, sub.t, sub.s, m, &phi)?),
        Some(id) => Some(satisfies(&e, &id)),
        None => None,
    };
    let mut text = format_table(&e);
    if let (Some(id), Some(ok)) = (identity, cocycle) {
        text.push_str(&format!(
            "satisfies {id}: {}\n",
            if ok { "yes" } else { "no" }
        ));
    }
    let value = json!({
        "affine": a,
        "phi": phi.rows(),
        "table": e.rows(),
        "identity": identity,
        "satisfies": cocycle,
    });
    emit(cli.json, &value, &text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_report(cli: &Cli, only: Option<&str>) -> Outcome {
    let entries: Vec<&CorpusEntry> = match only {
        Some(id) => vec![corpus_entry(id)?],
        None => corpus().iter().collect(),
    };
    let rows = golden_rows(&entries)?;
    let failed = rows.iter().filter(|r| r.matches() == Some(false)).count();
    emit(cli.json, &json!(rows), &render_text(&rows));
    eprintln!(
        "{} examples, {}/{} cells match",
        entries.len(),
        rows.len() - failed,
        rows.len()
    );
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(GOLDEN_MISMATCH)
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check(arg) => cmd_check(cli, arg),
        Command::H1 { table, sub, golden } => cmd_homology(cli, table, None, sub, *golden),
        Command::H2 {
            table,
            identity,
            sub,
            golden,
        } => cmd_homology(cli, table, Some(*identity), sub, *golden),
        Command::AffineSolve { identity, modulus } => cmd_affine_solve(cli, identity, *modulus),
        Command::Parastrophe { table, kind } => cmd_parastrophe(cli, table, *kind),
        Command::Mlt(arg) => cmd_mlt(cli, arg),
        Command::CatHomology { table, source } => cmd_cat_homology(cli, table, *source),
        Command::Extend {
            base,
            modulus,
            sub,
            c0,
            phi,
            identity,
        } => cmd_extend(cli, base, *modulus, sub, *c0, phi.as_deref(), *identity),
        Command::Report { only } => cmd_report(cli, only.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
