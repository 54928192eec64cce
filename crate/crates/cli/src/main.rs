use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hermsym::cycles::{self, SigmaElement};
use hermsym::levi::{self, dual_record};
use hermsym::parabolic::{self, class_record, hodge_of_lambda, ClassifyOptions, ParabolicClass};
use hermsym::rootsys::{build, HermitianFamily, RootSystem};
use hermsym::tables::{self, GoldenTable, TableId};
use hermsym::Error;
use serde_json::{json, Value};

/// θ-stable parabolic subalgebras, special cycles and compact duals for the
/// irreducible Hermitian symmetric pairs.
#[derive(Parser, Debug)]
#[command(name = "hermsym", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Balanced classes (R₊ = R₋ = r ≤ max-hodge) with witnesses and Y_q.
    Classify(ClassifyArgs),
    /// Hodge type, Levi factors and Y_q of a single weight.
    Levi(LeviArgs),
    /// Codimensions of the cycles X(σ), σ in the involution group.
    Codim(CodimArgs),
    /// Hasse diagram of the positive noncompact roots.
    Hasse(DiagramArgs),
    /// Dynkin diagram with the noncompact node filled.
    Dynkin(DiagramArgs),
    /// Regenerate or verify the golden tables.
    Tables(TablesArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Md,
    Json,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    family: String,
    /// Bound on R₊ and R₋; defaults to #Φ⁺_n / 2.
    #[arg(long)]
    max_hodge: Option<usize>,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    /// Also list classes with R₊ ≠ R₋.
    #[arg(long)]
    unbalanced: bool,
}

#[derive(Args, Debug)]
struct LeviArgs {
    family: String,
    /// A k-dominant weight, e.g. "w2-w7" or "e1-e5".
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
}

#[derive(Args, Debug)]
struct CodimArgs {
    family: String,
    /// Scan every element of the group.
    #[arg(long, conflicts_with = "sigma")]
    all_sigma: bool,
    /// Generators such as "psi_3,theta".
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    family: String,
    /// Emit Graphviz DOT.
    #[arg(long)]
    dot: bool,
}

#[derive(Args, Debug)]
struct TablesArgs {
    /// Compare the golden fixtures against a fresh computation.
    #[arg(long, conflicts_with = "emit", required_unless_present = "emit")]
    verify: bool,
    /// Print (or write into --fixtures) freshly computed tables.
    #[arg(long)]
    emit: bool,
    /// Fixture directory; defaults to the fixtures built into the binary.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Restrict to one table (T1..T5, X1).
    #[arg(long)]
    table: Option<String>,
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) | Error::Unclassifiable(_) | Error::LinAlg(_) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = std::env::var("HERMSYM_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(m)) => {
            print!("{m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Classify(a) => classify(a),
        Cmd::Levi(a) => levi_cmd(a),
        Cmd::Codim(a) => codim(a),
        Cmd::Hasse(a) => {
            let rs = system(&a.family)?;
            let poset = rs.noncompact_poset();
            if a.dot {
                return Ok(rs.hasse_dot(&poset));
            }
            let mut s = format!(
                "{}: {} positive noncompact roots\n",
                rs.family(),
                poset.len()
            );
            for e in &poset.hasse_edges {
                s.push_str(&format!(
                    "{} -> {} [{}]\n",
                    rs.display_root(&poset.nodes[e.lower]),
                    rs.display_root(&poset.nodes[e.upper]),
                    rs.node_name(e.label)
                ));
            }
            Ok(s)
        }
        Cmd::Dynkin(a) => {
            let rs = system(&a.family)?;
            if a.dot {
                return Ok(rs.dynkin_dot());
            }
            Ok(format!(
                "{}: type {}{}, noncompact node {}\n",
                rs.family(),
                rs.family().type_label(),
                rs.rank(),
                rs.node_name(rs.nc_index())
            ))
        }
        Cmd::Tables(a) => tables_cmd(a),
    }
}

fn system(s: &str) -> Result<RootSystem, Failure> {
    let fam: HermitianFamily = s.parse()?;
    Ok(build(fam)?)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn class_json(rs: &RootSystem, c: &ParabolicClass) -> Result<Value, Failure> {
    let summary = levi::summarize(rs, c)?;
    let mut v = serde_json::to_value(class_record(rs, c)).expect("serializable");
    v["dual"] = serde_json::to_value(dual_record(&summary)).expect("serializable");
    Ok(v)
}

fn classify(a: ClassifyArgs) -> Outcome {
    let rs = system(&a.family)?;
    let half = rs.noncompact_positive().len() / 2;
    let r_max = a
        .max_hodge
        .unwrap_or(if a.unbalanced { 2 * half + 1 } else { half });
    let opts = ClassifyOptions {
        r_max,
        unbalanced: a.unbalanced,
        ..ClassifyOptions::balanced(r_max)
    };
    let classes = parabolic::classify_with(&rs, opts)?;
    match a.format {
        Format::Json => {
            let list: Vec<Value> = classes
                .iter()
                .map(|c| class_json(&rs, c))
                .collect::<Result<_, _>>()?;
            Ok(json_text(&json!({
                "family": rs.family().to_string(),
                "max_hodge": r_max,
                "unbalanced": a.unbalanced,
                "classes": list,
            })))
        }
        Format::Md => {
            let mut s = format!(
                "{} classes of {} with R ≤ {r_max}\n\n",
                classes.len(),
                rs.family()
            );
            s.push_str(
                "| lambda | lambda (ε) | R+ | R- | Y_q | chi |\n|---|---|---|---|---|---|\n",
            );
            for c in &classes {
                let sm = levi::summarize(&rs, c)?;
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    c.witness.fw_display(),
                    rs.display_weight(&c.witness),
                    c.r_plus(),
                    c.r_minus(),
                    sm.dual,
                    sm.euler
                ));
            }
            Ok(s)
        }
    }
}

fn levi_cmd(a: LeviArgs) -> Outcome {
    let rs = system(&a.family)?;
    let lambda = rs.parse_weight(&a.lambda)?;
    let c = hodge_of_lambda(&rs, &lambda)?;
    let sm = levi::summarize(&rs, &c)?;
    match a.format {
        Format::Json => Ok(json_text(&class_json(&rs, &c)?)),
        Format::Md => {
            let roots = |v: &[hermsym::rootsys::Root]| {
                v.iter()
                    .map(|r| rs.display_root(r))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut s = format!("{} at {}\n", rs.family(), rs.display_weight(&lambda));
            s.push_str(&format!("Hodge type ({}, {})\n", c.r_plus(), c.r_minus()));
            s.push_str(&format!(
                "U = {{{}}}\nD = {{{}}}\n",
                roots(&c.u),
                roots(&c.d)
            ));
            s.push_str(&format!(
                "strongly orthogonal roots: {{{}}}\n",
                roots(&sm.levi.strongly_orthogonal)
            ));
            for f in &sm.levi.factors {
                s.push_str(&format!(
                    "factor {} at node {} generated by {}: {}\n",
                    f.ty,
                    f.node,
                    rs.display_root(&f.alpha),
                    f.dual
                ));
            }
            s.push_str(&format!(
                "compact roots outside the factors: {}\n",
                sm.levi.compact_part.len()
            ));
            s.push_str(&format!(
                "Y_q = {} (dim {}), chi = {}\n",
                sm.dual,
                sm.dual.dim_c(),
                sm.euler
            ));
            let p: Vec<String> = sm.poincare.iter().map(u128::to_string).collect();
            s.push_str(&format!("Betti numbers b_0, b_2, ...: {}\n", p.join(", ")));
            Ok(s)
        }
    }
}

fn codim(a: CodimArgs) -> Outcome {
    let rs = system(&a.family)?;
    let mut reports = match (&a.sigma, a.all_sigma) {
        (Some(s), _) => vec![cycles::codim(&rs, &SigmaElement::parse(&rs, s)?)?],
        (None, true) => cycles::codim_all(&rs),
        (None, false) => return Err(Failure::Usage("pass --sigma or --all-sigma".into())),
    };
    reports.sort_by(|x, y| x.codim.cmp(&y.codim).then_with(|| x.sigma.cmp(&y.sigma)));
    let cx = cycles::c_of_x(&rs);
    match a.format {
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| serde_json::to_value(cycles::codim_record(&rs, r)).expect("serializable"))
                .collect();
            let mut v = json!({ "family": rs.family().to_string(), "reports": rows });
            if a.all_sigma {
                v["c_of_x"] = match &cx {
                    Some(m) => json!({ "value": m.c, "source": m.source_label(&rs) }),
                    None => Value::Null,
                };
            }
            Ok(json_text(&v))
        }
        Format::Md => {
            let mut s = String::from(
                "| sigma | codim | fixed noncompact | fixed compact |\n|---|---|---|---|\n",
            );
            for r in &reports {
                s.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    r.sigma.display(&rs),
                    r.codim,
                    r.fixed_noncompact,
                    r.fixed_compact
                ));
            }
            if a.all_sigma {
                let top = rs.noncompact_positive().len();
                match cycles::min_codim_over_sigma(&rs) {
                    Some(m) => s.push_str(&format!(
                        "\nleast codimension in (0, {top}): {} via {}\n",
                        m.codim,
                        m.sigma.display(&rs)
                    )),
                    None => s.push_str(&format!("\nno codimension strictly between 0 and {top}\n")),
                }
                if let Some(m) = cx {
                    s.push_str(&format!("c(X) = {} via {}\n", m.c, m.source_label(&rs)));
                }
            }
            Ok(s)
        }
    }
}

fn selected(a: &TablesArgs) -> Result<Vec<TableId>, Failure> {
    match &a.table {
        Some(t) => Ok(vec![t.parse()?]),
        None => Ok(TableId::ALL.to_vec()),
    }
}

fn tables_cmd(a: TablesArgs) -> Outcome {
    let ids = selected(&a)?;
    if a.emit {
        let mut out = String::new();
        for id in ids {
            let text = tables::emit(id)?.render();
            match &a.fixtures {
                Some(dir) => {
                    let path = dir.join(id.file_name());
                    std::fs::write(&path, &text).map_err(|e| {
                        Failure::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    out.push_str(&format!("wrote {}\n", path.display()));
                }
                None => {
                    out.push_str(&text);
                    out.push('\n');
                }
            }
        }
        return Ok(out);
    }
    let mut report = String::new();
    let mut bad = 0;
    for id in ids {
        let text = match &a.fixtures {
            Some(dir) => {
                let path = dir.join(id.file_name());
                std::fs::read_to_string(&path).map_err(|e| {
                    Failure::Usage(format!("missing fixture {}: {e}", path.display()))
                })?
            }
            None => id.embedded().to_string(),
        };
        let golden = GoldenTable::parse(id, &text)?;
        let computed = tables::emit(id)?;
        let diffs = tables::diff(&golden, &computed);
        let notes = golden.rows.iter().filter(|r| r.note.is_some()).count();
        if diffs.is_empty() {
            report.push_str(&format!(
                "{id}: {} rows match ({notes} annotated)\n",
                golden.rows.len()
            ));
        } else {
            bad += diffs.len();
            report.push_str(&format!("{id}: {} mismatches\n", diffs.len()));
            for d in diffs {
                report.push_str(&format!("  {d}\n"));
            }
        }
    }
    if bad > 0 {
        Err(Failure::Mismatch(report))
    } else {
        Ok(report)
    }
}
