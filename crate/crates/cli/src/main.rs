//! Command-line front end for the reflection-group engine.
//!
//! Four subcommands cover the whole surface:
//!
//! * `classes`    — conjugacy class types of `G(r,q,n)` with sizes,
//!   splitting numbers, and p-regularity flags;
//! * `chartable`  — exact character tables for `q = 1`, and labelled
//!   component tables (exact where possible, numerical on split classes)
//!   for `q > 1`;
//! * `qsteinberg` — quasi p-Steinberg verdicts by brute-force scan, by
//!   closed form, or both with a cross-check;
//! * `verify`     — the named invariant suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 resource limit, 4 brute/closed-form mismatch. All JSON output is one
//! object per line and carries `"schema": "reflecta/1"`.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::process::ExitCode;

use reflecta_core::classify::{
    closed_form_r1, closed_form_rqn, is_linear, quasi_bruteforce_r1, QSVerdict,
    SubgroupClassifier,
};
use reflecta_core::clifford::{irreducible_labels, restricted_value_nonsplit, NecklaceLabel};
use reflecta_core::cyclotomic::{Complex64, CycloInt};
use reflecta_core::group::{
    class_size_full, is_p_regular_type, splitting_number, type_in_subgroup, GroupKey,
};
use reflecta_core::mn::{character_table_full, character_value};
use reflecta_core::necklace::necklace_of;
use reflecta_core::oracle::{brute_table, match_restriction, split_class_values, OracleConfig};
use reflecta_core::partition::{multipartition_count, MultiPartition};
use reflecta_core::verify::{run_suite, SUITE_NAMES};
use reflecta_core::{Error, Result};

const SCHEMA: &str = "reflecta/1";

#[derive(Parser)]
#[command(
    name = "reflecta",
    version,
    about = "Characters and quasi Steinberg classification for G(r,q,n)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Largest group order the numerical table builder will enumerate.
    #[arg(long, global = true, env = "REFLECTA_MAX_ORDER", default_value_t = 2000)]
    max_order: u128,

    /// Seed for the random class-algebra combinations.
    #[arg(long, global = true, default_value_t = 0x5EED)]
    seed: u64,

    /// Tolerance for numerical validation and zero tests.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,

    /// Bound on the number of character shapes enumerated per group.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_shapes: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Brute,
    Closed,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// List the conjugacy class types of G(r,q,n).
    Classes {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
    /// Print the character table of G(r,q,n).
    Chartable {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
    /// Decide which irreducible characters are quasi p-Steinberg.
    Qsteinberg {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
        #[arg(long)]
        n: usize,
        /// A prime dividing the group order, or "all".
        #[arg(long, default_value = "all")]
        p: String,
        /// Decision procedure; "both" cross-checks and exits 4 on mismatch.
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
        /// Restrict to one character shape, as a JSON array of arrays of
        /// weakly decreasing parts, e.g. '[[2,1],[],[1,1,1]]'. Shapes that
        /// are non-canonical rotations resolve to their canonical label.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run one named check suite, or all of them.
    Verify {
        /// One of: orthogonality, splitting, restriction, table1, table2,
        /// corollary-n9, p23. Omit to run every suite.
        suite: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::InvalidInput(_) => ExitCode::from(2),
        Error::ResourceLimit(_) => ExitCode::from(3),
        Error::ValidationFailure(_) | Error::Degenerate { .. } => ExitCode::from(1),
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Classes { r, q, n } => cmd_classes(cli, *r, *q, *n),
        Command::Chartable { r, q, n } => cmd_chartable(cli, *r, *q, *n),
        Command::Qsteinberg {
            r,
            q,
            n,
            p,
            mode,
            lambda,
        } => cmd_qsteinberg(cli, *r, *q, *n, p, *mode, lambda.as_deref()),
        Command::Verify { suite } => cmd_verify(cli, suite.as_deref()),
    }
}

fn oracle_config(cli: &Cli) -> OracleConfig {
    OracleConfig {
        max_order: cli.max_order,
        seed: cli.seed,
        tol: cli.tol,
        ..OracleConfig::default()
    }
}

/// u128 quantities as JSON: a number when it fits in u64, a string beyond.
fn big_json(x: u128) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn print_json(record: &Value) {
    println!("{record}");
}

fn print_csv(headers: &[String], rows: &[Vec<String>]) {
    let mut wtr = csv::Writer::from_writer(std::io::stdout());
    wtr.write_record(headers).expect("write to stdout");
    for row in rows {
        wtr.write_record(row).expect("write to stdout");
    }
    wtr.flush().expect("flush stdout");
}

/// Aligned text table: first column left, the rest right.
fn print_grid(headers: &[String], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let render = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = width[i].saturating_sub(cell.chars().count());
            if i == 0 {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        line.trim_end().to_string()
    };
    println!("{}", render(headers));
    for row in rows {
        println!("{}", render(row));
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

// ---------------------------------------------------------------- classes

fn cmd_classes(cli: &Cli, r: usize, q: usize, n: usize) -> Result<ExitCode> {
    let key = GroupKey::new(r, q, n)?;
    let primes = key.primes();
    let types: Vec<MultiPartition> = MultiPartition::enumerate(r, n)
        .into_iter()
        .filter(|t| type_in_subgroup(t, q))
        .collect();

    match cli.format {
        Format::Json => {
            for t in &types {
                let d = splitting_number(t, q);
                let size = class_size_full(t);
                let regular: Value = primes
                    .iter()
                    .map(|&p| (p.to_string(), json!(is_p_regular_type(t, p))))
                    .collect::<serde_json::Map<_, _>>()
                    .into();
                print_json(&json!({
                    "schema": SCHEMA,
                    "group": key,
                    "type": t,
                    "size": big_json(size),
                    "splitting": d,
                    "class_size": big_json(size / d as u128),
                    "p_regular": regular,
                }));
            }
        }
        Format::Csv | Format::Pretty => {
            let mut headers: Vec<String> =
                ["type", "size", "splitting", "class_size"].map(String::from).into();
            for &p in &primes {
                headers.push(format!("regular_p{p}"));
            }
            let rows: Vec<Vec<String>> = types
                .iter()
                .map(|t| {
                    let d = splitting_number(t, q);
                    let size = class_size_full(t);
                    let mut row = vec![
                        t.to_string(),
                        size.to_string(),
                        d.to_string(),
                        (size / d as u128).to_string(),
                    ];
                    for &p in &primes {
                        row.push(yes_no(is_p_regular_type(t, p)));
                    }
                    row
                })
                .collect();
            if cli.format == Format::Csv {
                print_csv(&headers, &rows);
            } else {
                let classes: usize = types.iter().map(|t| splitting_number(t, q)).sum();
                println!(
                    "{key}: order {}, {} class types, {classes} classes",
                    key.order(),
                    types.len()
                );
                print_grid(&headers, &rows);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------- chartable

/// One table cell: exact cyclotomic integer, or a numerical value where
/// only the small-group table builder can supply one.
enum Cell {
    Exact(CycloInt),
    Approx(Complex64),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Exact(c) => json!({ "exact": c }),
            Cell::Approx(z) => json!({ "approx": [z.re, z.im] }),
        }
    }

    fn render(&self) -> String {
        match self {
            Cell::Exact(c) => c.to_string(),
            Cell::Approx(z) => format!("{:.4}{:+.4}i", z.re, z.im),
        }
    }
}

fn cmd_chartable(cli: &Cli, r: usize, q: usize, n: usize) -> Result<ExitCode> {
    let key = GroupKey::new(r, q, n)?;
    if q == 1 {
        chartable_wreath(cli, r, n)
    } else {
        chartable_subgroup(cli, key)
    }
}

fn chartable_wreath(cli: &Cli, r: usize, n: usize) -> Result<ExitCode> {
    let max_chars = usize::try_from(cli.max_shapes).unwrap_or(usize::MAX);
    let table = character_table_full(r, n, max_chars)?;
    let class_headers: Vec<String> = table.class_types.iter().map(|t| t.to_string()).collect();

    match cli.format {
        Format::Json => {
            print_json(&json!({
                "schema": SCHEMA,
                "kind": "meta",
                "group": table.key,
                "classes": table.class_types,
                "class_sizes": table.class_sizes.iter().map(|&s| big_json(s)).collect::<Vec<_>>(),
            }));
            for (i, lambda) in table.irreducibles.iter().enumerate() {
                print_json(&json!({
                    "schema": SCHEMA,
                    "kind": "row",
                    "lambda": lambda,
                    "degree": table.degrees[i],
                    "values": table.values[i],
                }));
            }
        }
        Format::Csv | Format::Pretty => {
            let mut headers = vec!["lambda".to_string(), "degree".to_string()];
            headers.extend(class_headers);
            let rows: Vec<Vec<String>> = table
                .irreducibles
                .iter()
                .enumerate()
                .map(|(i, lambda)| {
                    let mut row = vec![lambda.to_string(), table.degrees[i].to_string()];
                    row.extend(table.values[i].iter().map(|v| v.to_string()));
                    row
                })
                .collect();
            if cli.format == Format::Csv {
                print_csv(&headers, &rows);
            } else {
                println!(
                    "{}: order {}, {} irreducibles",
                    table.key,
                    table.key.order(),
                    table.irreducibles.len()
                );
                print_grid(&headers, &rows);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// A column of the subgroup table: a class type plus a piece index that
/// distinguishes the `d` subgroup classes sharing that type.
struct SubgroupColumn {
    class_type: MultiPartition,
    piece: usize,
    splitting: usize,
    size: u128,
}

impl SubgroupColumn {
    fn header(&self) -> String {
        if self.splitting == 1 {
            self.class_type.to_string()
        } else {
            format!("{}#{}", self.class_type, self.piece)
        }
    }
}

fn chartable_subgroup(cli: &Cli, key: GroupKey) -> Result<ExitCode> {
    let q = key.q();
    let labels = irreducible_labels(&key);
    let needs_oracle = labels.iter().any(|l| l.stab > 1);
    let oracle = if needs_oracle {
        Some(brute_table(&key, &oracle_config(cli))?)
    } else {
        None
    };

    // Column list and, for split-restriction rows, the numerical values.
    let columns: Vec<SubgroupColumn> = match &oracle {
        Some(table) => {
            let mut seen: Vec<MultiPartition> = Vec::new();
            table
                .class_types
                .iter()
                .zip(&table.class_sizes)
                .map(|(t, &size)| {
                    let piece = seen.iter().filter(|s| *s == t).count();
                    seen.push(t.clone());
                    SubgroupColumn {
                        class_type: t.clone(),
                        piece,
                        splitting: splitting_number(t, q),
                        size: size as u128,
                    }
                })
                .collect()
        }
        None => MultiPartition::enumerate(key.r(), key.n())
            .into_iter()
            .filter(|t| type_in_subgroup(t, q))
            .flat_map(|t| {
                let d = splitting_number(&t, q);
                let size = class_size_full(&t) / d as u128;
                (0..d)
                    .map(move |piece| SubgroupColumn {
                        class_type: t.clone(),
                        piece,
                        splitting: d,
                        size,
                    })
                    .collect::<Vec<_>>()
            })
            .collect(),
    };

    let mut grid: Vec<Vec<Cell>> = Vec::new();
    for label in &labels {
        let source = label.source();
        let mut split_vals = None;
        let mut row_of_delta = 0;
        if label.stab > 1 {
            let table = oracle.as_ref().expect("oracle built when any stab > 1");
            let mut rows = match_restriction(&source, table)?;
            rows.sort_unstable();
            row_of_delta = rows[label.delta];
            split_vals = Some(split_class_values(&source, table, cli.tol)?);
        }
        let mut row = Vec::new();
        for (j, col) in columns.iter().enumerate() {
            let cell = if label.stab == 1 {
                Cell::Exact(character_value(&source, &col.class_type))
            } else if col.splitting == 1 {
                Cell::Exact(restricted_value_nonsplit(&source, &col.class_type, q)?)
            } else {
                let vals = split_vals.as_ref().expect("split values cached");
                Cell::Approx(vals[&(row_of_delta, j)])
            };
            row.push(cell);
        }
        grid.push(row);
    }

    match cli.format {
        Format::Json => {
            let col_meta: Vec<Value> = columns
                .iter()
                .map(|c| {
                    json!({
                        "type": c.class_type,
                        "piece": c.piece,
                        "splitting": c.splitting,
                        "size": big_json(c.size),
                    })
                })
                .collect();
            let mut meta = json!({
                "schema": SCHEMA,
                "kind": "meta",
                "group": key,
                "classes": col_meta,
                "values": if oracle.is_some() { "exact+numerical" } else { "exact" },
            });
            if let Some(table) = &oracle {
                meta["seed_used"] = json!(table.seed_used);
                meta["residual"] = json!(table.residual);
            }
            print_json(&meta);
            for (label, row) in labels.iter().zip(&grid) {
                print_json(&json!({
                    "schema": SCHEMA,
                    "kind": "row",
                    "lambda": label.source(),
                    "delta": label.delta,
                    "stab": label.stab,
                    "degree": label.component_degree(),
                    "values": row.iter().map(Cell::to_json).collect::<Vec<_>>(),
                }));
            }
        }
        Format::Csv | Format::Pretty => {
            let mut headers = vec![
                "lambda".to_string(),
                "delta".to_string(),
                "degree".to_string(),
            ];
            headers.extend(columns.iter().map(SubgroupColumn::header));
            let rows: Vec<Vec<String>> = labels
                .iter()
                .zip(&grid)
                .map(|(label, row)| {
                    let mut cells = vec![
                        label.source().to_string(),
                        label.delta.to_string(),
                        label.component_degree().to_string(),
                    ];
                    cells.extend(row.iter().map(Cell::render));
                    cells
                })
                .collect();
            if cli.format == Format::Csv {
                print_csv(&headers, &rows);
            } else {
                println!(
                    "{key}: order {}, {} irreducibles, {} columns on split classes",
                    key.order(),
                    labels.len(),
                    columns.iter().filter(|c| c.splitting > 1).count(),
                );
                print_grid(&headers, &rows);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ------------------------------------------------------------- qsteinberg

/// One classification row, before formatting: the brute verdict when that
/// path ran, and the closed-form answer when that path ran.
struct VerdictRow {
    lambda: MultiPartition,
    delta: Option<usize>,
    stab: usize,
    prime: u64,
    degree: u64,
    linear: bool,
    brute: Option<QSVerdict>,
    closed: Option<bool>,
}

impl VerdictRow {
    fn quasi(&self) -> bool {
        match &self.brute {
            Some(v) => v.quasi,
            None => self.closed.expect("at least one path ran"),
        }
    }

    fn agreement(&self) -> Option<bool> {
        match (&self.brute, self.closed) {
            (Some(v), Some(c)) => Some(v.quasi == c),
            _ => None,
        }
    }
}

fn parse_shape(text: &str, key: &GroupKey) -> Result<MultiPartition> {
    let lists: Vec<Vec<usize>> = serde_json::from_str(text).map_err(|e| {
        Error::InvalidInput(format!("--lambda must be a JSON array of arrays: {e}"))
    })?;
    let shape = MultiPartition::try_from_parts(lists)?;
    if shape.r() != key.r() || shape.total() != key.n() {
        return Err(Error::InvalidInput(format!(
            "shape {shape} does not fit {key}: need {} components and total size {}",
            key.r(),
            key.n()
        )));
    }
    Ok(shape)
}

fn requested_primes(key: &GroupKey, p_arg: &str) -> Result<Vec<u64>> {
    if p_arg == "all" {
        return Ok(key.primes());
    }
    let p: u64 = p_arg
        .parse()
        .map_err(|_| Error::InvalidInput(format!("--p must be a prime or \"all\", got {p_arg:?}")))?;
    if !key.primes().contains(&p) {
        return Err(Error::InvalidInput(format!(
            "{p} is not a prime dividing |{key}| = {}; divisors are {:?}",
            key.order(),
            key.primes()
        )));
    }
    Ok(vec![p])
}

fn cmd_qsteinberg(
    cli: &Cli,
    r: usize,
    q: usize,
    n: usize,
    p_arg: &str,
    mode: Mode,
    lambda_arg: Option<&str>,
) -> Result<ExitCode> {
    let key = GroupKey::new(r, q, n)?;
    let primes = requested_primes(&key, p_arg)?;
    let shape_filter = lambda_arg.map(|s| parse_shape(s, &key)).transpose()?;

    if shape_filter.is_none() {
        let count = multipartition_count(r, n);
        if count > cli.max_shapes {
            return Err(Error::ResourceLimit(format!(
                "{key} has {count} character shapes, above --max-shapes {}",
                cli.max_shapes
            )));
        }
    }

    let rows = if q == 1 {
        qsteinberg_wreath(&key, &primes, mode, shape_filter.as_ref())?
    } else {
        qsteinberg_subgroup(cli, &key, &primes, mode, shape_filter.as_ref())?
    };
    emit_verdicts(cli, &key, &primes, mode, &rows)
}

fn qsteinberg_wreath(
    key: &GroupKey,
    primes: &[u64],
    mode: Mode,
    shape_filter: Option<&MultiPartition>,
) -> Result<Vec<VerdictRow>> {
    let shapes: Vec<MultiPartition> = match shape_filter {
        Some(shape) => vec![shape.clone()],
        None => MultiPartition::enumerate(key.r(), key.n()),
    };
    let mut rows = Vec::new();
    for lambda in &shapes {
        for &p in primes {
            let brute = match mode {
                Mode::Closed => None,
                _ => Some(quasi_bruteforce_r1(key, lambda, p)?),
            };
            let closed = match mode {
                Mode::Brute => None,
                _ => Some(closed_form_r1(lambda, p)),
            };
            rows.push(VerdictRow {
                lambda: lambda.clone(),
                delta: None,
                stab: 1,
                prime: p,
                degree: reflecta_core::mn::degree(lambda),
                linear: is_linear(lambda),
                brute,
                closed,
            });
        }
    }
    Ok(rows)
}

fn qsteinberg_subgroup(
    cli: &Cli,
    key: &GroupKey,
    primes: &[u64],
    mode: Mode,
    shape_filter: Option<&MultiPartition>,
) -> Result<Vec<VerdictRow>> {
    let mut labels: Vec<NecklaceLabel> = irreducible_labels(key);
    if let Some(shape) = shape_filter {
        let want = necklace_of(shape, key.q())?.canonical();
        labels.retain(|l| l.necklace == want);
    }
    let mut classifier = match mode {
        Mode::Closed => None,
        _ => Some(SubgroupClassifier::new(key, &oracle_config(cli))?),
    };
    let mut rows = Vec::new();
    for label in &labels {
        let source = label.source();
        let deg = label.component_degree();
        for &p in primes {
            let brute = match &mut classifier {
                Some(c) => Some(c.quasi_bruteforce_rqn(label, p)?),
                None => None,
            };
            let closed = match mode {
                Mode::Brute => None,
                _ => Some(closed_form_rqn(key, &source, p)),
            };
            rows.push(VerdictRow {
                lambda: source.clone(),
                delta: Some(label.delta),
                stab: label.stab,
                prime: p,
                degree: deg,
                linear: deg == 1,
                brute,
                closed,
            });
        }
    }
    Ok(rows)
}

fn emit_verdicts(
    cli: &Cli,
    key: &GroupKey,
    primes: &[u64],
    mode: Mode,
    rows: &[VerdictRow],
) -> Result<ExitCode> {
    let mode_name = match mode {
        Mode::Brute => "brute",
        Mode::Closed => "closed",
        Mode::Both => "both",
    };
    match cli.format {
        Format::Json => {
            for row in rows {
                let mut record = json!({
                    "schema": SCHEMA,
                    "group": key,
                    "mode": mode_name,
                    "lambda": row.lambda,
                    "delta": row.delta,
                    "stab": row.stab,
                    "prime": row.prime,
                    "degree": row.degree,
                    "linear": row.linear,
                    "quasi": row.quasi(),
                });
                if let Some(v) = &row.brute {
                    record["witness"] = json!(v.witness);
                    record["feit"] = json!(v.feit);
                }
                if let Some(c) = row.closed {
                    record["quasi_closed"] = json!(c);
                }
                if let Some(a) = row.agreement() {
                    record["agree"] = json!(a);
                }
                print_json(&record);
            }
        }
        Format::Csv | Format::Pretty => {
            let mut headers: Vec<String> =
                ["lambda", "delta", "stab", "prime", "degree", "linear", "quasi"]
                    .map(String::from)
                    .into();
            if mode == Mode::Both {
                headers.push("quasi_closed".to_string());
                headers.push("agree".to_string());
            }
            if mode != Mode::Closed {
                headers.push("witness".to_string());
                headers.push("feit".to_string());
            }
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let mut cells = vec![
                        row.lambda.to_string(),
                        row.delta.map_or(String::new(), |d| d.to_string()),
                        row.stab.to_string(),
                        row.prime.to_string(),
                        row.degree.to_string(),
                        yes_no(row.linear),
                        yes_no(row.quasi()),
                    ];
                    if mode == Mode::Both {
                        cells.push(yes_no(row.closed.expect("both mode ran closed form")));
                        cells.push(yes_no(row.agreement().expect("both mode cross-checks")));
                    }
                    if mode != Mode::Closed {
                        let v = row.brute.as_ref().expect("brute path ran");
                        cells.push(v.witness.as_ref().map_or(String::new(), |w| w.to_string()));
                        cells.push(v.feit.map_or(String::new(), yes_no));
                    }
                    cells
                })
                .collect();
            if cli.format == Format::Csv {
                print_csv(&headers, &table);
            } else {
                let positives = rows.iter().filter(|r| !r.linear && r.quasi()).count();
                println!(
                    "{key}: {} verdicts at primes {primes:?}, {positives} quasi positive (non-linear)",
                    rows.len()
                );
                print_grid(&headers, &table);
            }
        }
    }

    let mismatches: Vec<&VerdictRow> =
        rows.iter().filter(|r| r.agreement() == Some(false)).collect();
    if mismatches.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        for row in &mismatches {
            let v = row.brute.as_ref().expect("mismatch implies brute ran");
            eprintln!(
                "mismatch: {} (delta {:?}) at p = {}: brute force says {}, closed form says {}{}",
                row.lambda,
                row.delta,
                row.prime,
                v.quasi,
                row.closed.expect("mismatch implies closed ran"),
                v.witness
                    .as_ref()
                    .map_or(String::new(), |w| format!("; zero at class {w}")),
            );
        }
        eprintln!("{} of {} verdicts disagree", mismatches.len(), rows.len());
        Ok(ExitCode::from(4))
    }
}

// ----------------------------------------------------------------- verify

fn cmd_verify(cli: &Cli, suite: Option<&str>) -> Result<ExitCode> {
    let names: Vec<&str> = match suite {
        Some(s) => vec![s],
        None => SUITE_NAMES.to_vec(),
    };
    let mut all_pass = true;
    let mut csv_rows: Vec<Vec<String>> = Vec::new();
    for name in names {
        let report = run_suite(name)?;
        all_pass &= report.passed();
        match cli.format {
            Format::Json => {
                for check in &report.checks {
                    print_json(&json!({
                        "schema": SCHEMA,
                        "kind": "check",
                        "suite": report.name,
                        "check": check.name,
                        "pass": check.pass,
                        "detail": check.detail,
                    }));
                }
                print_json(&json!({
                    "schema": SCHEMA,
                    "kind": "summary",
                    "suite": report.name,
                    "checks": report.checks.len(),
                    "failed": report.failures().len(),
                    "pass": report.passed(),
                }));
            }
            Format::Csv => {
                for check in &report.checks {
                    csv_rows.push(vec![
                        report.name.clone(),
                        check.name.clone(),
                        yes_no(check.pass),
                        check.detail.clone(),
                    ]);
                }
            }
            Format::Pretty => {
                println!("{}", report.summary());
                for check in report.failures() {
                    println!("  FAIL {}: {}", check.name, check.detail);
                }
            }
        }
    }
    if cli.format == Format::Csv {
        let headers: Vec<String> = ["suite", "check", "pass", "detail"].map(String::from).into();
        print_csv(&headers, &csv_rows);
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
