//! Command line front end for the box operators, composition posets, dual
//! graphs, and Pieri rules.
//!
//! Compositions are written as comma separated parts ("3,1,2"); the empty
//! composition is the empty string. User input must consist of positive
//! parts unless `--weak` allows zeros. Expansions print one term per line in
//! a fixed canonical order (lexicographic on part vectors), so identical
//! invocations produce identical bytes on stdout; timings go to stderr.
//! `--format json` switches any subcommand except `dot` to a JSON document
//! with sorted keys. `verify` exits nonzero if any sweep fails, so it can
//! gate a build.

use clap::{Parser, Subcommand, ValueEnum};
use qschur::compositions::{flatten, parse_weak, Composition};
use qschur::dualgraphs::{export_dot, verify_identity, GraphIdentity, PosetKind};
use qschur::formal::FormalSum;
use qschur::operators::{
    add_box, append_row, jdt, jdt_set, remove_box, remove_set, verify_lemmas, StripFlavor,
};
use qschur::pieri::{
    ncs_left_pieri, ncs_right_pieri, ncs_skew_pieri, qs_pieri, qs_skew_pieri,
    verify_pieri_theorem, PieriBounds, PieriTheorem, RightPieriForm, SignedSkewSum,
};
use qschur::posets::{descent_composition, standard_tableaux, SkewShape};
use qschur::qsym::{expand_in_qs, qs_in_f};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "qschur",
    version,
    about = "Box operators on compositions and the Pieri rules they drive"
)]
struct Cli {
    /// Output format; dot applies only to the dot subcommand
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for verify sweeps
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Row,
    Column,
}

impl FlavorArg {
    fn strip(self) -> StripFlavor {
        match self {
            FlavorArg::Row => StripFlavor::Horizontal,
            FlavorArg::Column => StripFlavor::Vertical,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PieriFamily {
    /// qs_alpha . qs_(row or column)
    Qs,
    /// s_alpha . s_(row or column)
    NcsRight,
    /// s_(row or column) . s_alpha
    NcsLeft,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SkewFamily {
    Qs,
    Ncs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PosetArg {
    #[value(name = "Rc", alias = "rc")]
    Rc,
    #[value(name = "Lc", alias = "lc")]
    Lc,
    #[value(name = "Qc", alias = "qc")]
    Qc,
    #[value(name = "Qct", alias = "qct")]
    Qct,
}

impl PosetArg {
    fn kind(self) -> PosetKind {
        match self {
            PosetArg::Rc => PosetKind::Rc,
            PosetArg::Lc => PosetKind::Lc,
            PosetArg::Qc => PosetKind::Qc,
            PosetArg::Qct => PosetKind::Qct,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Lemmas,
    Graphs,
    Pieri,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one box operator to a composition
    Op {
        /// d | a | u | t (one index) or dI | uI (index set)
        operator: String,
        /// One index for d|a|u|t, a comma separated set for dI|uI
        indices: String,
        /// Comma separated composition ("" for the empty one)
        composition: String,
        /// Allow zero parts in the composition
        #[arg(long)]
        weak: bool,
    },
    /// Expand a product with a one-row or one-column shape
    Pieri {
        family: PieriFamily,
        flavor: FlavorArg,
        /// Comma separated composition ("" for the empty one)
        alpha: String,
        /// Boxes in the row or column
        n: u32,
    },
    /// Signed skew Pieri expansion of qs_{outer//inner} or s_{outer//inner}
    /// times a one-row or one-column shape
    SkewPieri {
        family: SkewFamily,
        flavor: FlavorArg,
        outer: String,
        inner: String,
        /// Boxes in the row or column
        n: u32,
    },
    /// F- and qs-basis expansions of a quasisymmetric Schur function
    Expand {
        outer: String,
        /// Inner shape for a skew function
        #[arg(long, default_value = "")]
        inner: String,
    },
    /// Standard skew composition tableaux with their descent compositions
    Tableaux {
        outer: String,
        /// Inner shape ("" for a straight shape)
        #[arg(default_value = "")]
        inner: String,
    },
    /// Graphviz DOT for one of the four composition posets
    Dot {
        poset: PosetArg,
        /// Largest composition size drawn
        #[arg(default_value_t = 7)]
        max_size: u32,
    },
    /// Run invariant sweeps; exits 0 only if every check passes
    Verify {
        suite: Suite,
        /// Lemma sweep: most parts per weak composition
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Lemma sweep: largest part
        #[arg(long, default_value_t = 5)]
        max_part: u32,
        /// Graph sweep: largest composition size
        #[arg(long, default_value_t = 7)]
        max_size: u32,
        /// Pieri sweep: largest outer size
        #[arg(long, default_value_t = 5)]
        max_alpha: u32,
        /// Pieri sweep: largest inner size for skew statements
        #[arg(long, default_value_t = 2)]
        max_inner: u32,
        /// Pieri sweep: largest multiplier size
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (e.g. piping into head) instead of
    // panicking on the failed write
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Dot { .. }) {
        return Err("dot output is only available from the dot subcommand".into());
    }
    match &cli.command {
        Command::Op {
            operator,
            indices,
            composition,
            weak,
        } => cmd_op(operator, indices, composition, *weak, cli.format),
        Command::Pieri {
            family,
            flavor,
            alpha,
            n,
        } => cmd_pieri(*family, *flavor, alpha, *n, cli.format),
        Command::SkewPieri {
            family,
            flavor,
            outer,
            inner,
            n,
        } => cmd_skew_pieri(*family, *flavor, outer, inner, *n, cli.format),
        Command::Expand { outer, inner } => cmd_expand(outer, inner, cli.format),
        Command::Tableaux { outer, inner } => cmd_tableaux(outer, inner, cli.format),
        Command::Dot { poset, max_size } => {
            print!("{}", export_dot(poset.kind(), *max_size));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            max_len,
            max_part,
            max_size,
            max_alpha,
            max_inner,
            max_n,
        } => cmd_verify(
            *suite,
            *max_len,
            *max_part,
            *max_size,
            PieriBounds {
                max_size: *max_alpha,
                max_inner: *max_inner,
                max_n: *max_n,
            },
            cli.jobs,
            cli.format,
        ),
    }
}

fn parse_comp(s: &str, what: &str) -> Result<Composition, String> {
    s.parse::<Composition>().map_err(|e| format!("{what}: {e}"))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serialization")
}

/// Bare comma form of a weak composition, "∅" when there are no parts.
fn plain(parts: &[u32]) -> String {
    if parts.is_empty() {
        "∅".into()
    } else {
        parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn op_text(result: &Option<Vec<u32>>) -> String {
    match result {
        None => "0".into(),
        Some(w) => {
            let f = flatten(w);
            if f.parts() == &w[..] {
                plain(w)
            } else {
                format!("{} (flattened: {})", plain(w), plain(f.parts()))
            }
        }
    }
}

fn op_json(result: &Option<Vec<u32>>) -> Value {
    match result {
        None => json!({ "result": Value::Null }),
        Some(w) => json!({ "result": w, "flattened": flatten(w).parts() }),
    }
}

fn cmd_op(
    operator: &str,
    indices: &str,
    composition: &str,
    weak: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let w = if weak {
        parse_weak(composition).map_err(|e| format!("composition: {e}"))?
    } else {
        parse_comp(composition, "composition")?.parts().to_vec()
    };
    let idx = parse_weak(indices).map_err(|e| format!("indices: {e}"))?;
    let single = || -> Result<u32, String> {
        match idx[..] {
            [i] => Ok(i),
            _ => Err(format!("operator {operator} takes exactly one index")),
        }
    };
    let set = || -> Result<Vec<u32>, String> {
        if idx.iter().any(|&i| i == 0) {
            return Err("index sets contain positive indices only".into());
        }
        let mut s = idx.clone();
        s.sort_unstable();
        s.dedup();
        Ok(s)
    };
    let result = match operator {
        "d" => remove_box(single()?, &w),
        "a" => Some(append_row(single()?, &w)),
        "u" => jdt(single()?, &w),
        "t" => add_box(single()?, &w),
        "dI" => remove_set(&set()?, &w),
        "uI" => jdt_set(&set()?, &w),
        other => {
            return Err(format!(
                "unknown operator {other:?}; use d, a, u, t, dI, or uI"
            ))
        }
    };
    match format {
        Format::Text => println!("{}", op_text(&result)),
        Format::Json => println!("{}", pretty(&op_json(&result))),
        Format::Dot => unreachable!("rejected in run"),
    }
    Ok(ExitCode::SUCCESS)
}

fn comp_terms_text(sum: &FormalSum<Composition>) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    sum.terms()
        .map(|(c, k)| format!("{c}: {k}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn comp_terms_json(sum: &FormalSum<Composition>) -> Value {
    Value::Array(
        sum.terms()
            .map(|(c, k)| json!({ "comp": c.parts(), "coeff": k }))
            .collect(),
    )
}

#[cfg(test)]
fn comp_terms_from_json(v: &Value) -> Option<FormalSum<Composition>> {
    let mut sum = FormalSum::zero();
    for term in v.as_array()? {
        let parts = term
            .get("comp")?
            .as_array()?
            .iter()
            .map(|p| p.as_u64().map(|p| p as u32))
            .collect::<Option<Vec<_>>>()?;
        sum.add_term(Composition::new(parts), term.get("coeff")?.as_i64()?);
    }
    Some(sum)
}

fn skew_terms_text(sum: &SignedSkewSum) -> String {
    if sum.is_zero() {
        return "0".into();
    }
    sum.terms()
        .map(|(shape, k)| format!("{shape}: {k}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn skew_terms_json(sum: &SignedSkewSum) -> Value {
    Value::Array(
        sum.terms()
            .map(|(shape, k)| {
                json!({
                    "outer": shape.outer.parts(),
                    "inner": shape.inner.parts(),
                    "coeff": k,
                })
            })
            .collect(),
    )
}

fn cmd_pieri(
    family: PieriFamily,
    flavor: FlavorArg,
    alpha: &str,
    n: u32,
    format: Format,
) -> Result<ExitCode, String> {
    let alpha = parse_comp(alpha, "alpha")?;
    let sum = match family {
        PieriFamily::Qs => qs_pieri(&alpha, n, flavor.strip()),
        PieriFamily::NcsRight => {
            ncs_right_pieri(&alpha, n, flavor.strip(), RightPieriForm::Simplified)
        }
        PieriFamily::NcsLeft => ncs_left_pieri(&alpha, n, flavor.strip()),
    };
    match format {
        Format::Text => println!("{}", comp_terms_text(&sum)),
        Format::Json => println!("{}", pretty(&json!({ "terms": comp_terms_json(&sum) }))),
        Format::Dot => unreachable!("rejected in run"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_skew_pieri(
    family: SkewFamily,
    flavor: FlavorArg,
    outer: &str,
    inner: &str,
    n: u32,
    format: Format,
) -> Result<ExitCode, String> {
    let shape = SkewShape::new(parse_comp(outer, "outer")?, parse_comp(inner, "inner")?);
    let sum = match family {
        SkewFamily::Qs => qs_skew_pieri(&shape, n, flavor.strip()),
        SkewFamily::Ncs => ncs_skew_pieri(&shape, n, flavor.strip()),
    };
    match format {
        Format::Text => println!("{}", skew_terms_text(&sum)),
        Format::Json => println!("{}", pretty(&json!({ "terms": skew_terms_json(&sum) }))),
        Format::Dot => unreachable!("rejected in run"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(outer: &str, inner: &str, format: Format) -> Result<ExitCode, String> {
    let shape = SkewShape::new(parse_comp(outer, "outer")?, parse_comp(inner, "inner")?);
    let f = qs_in_f(&shape);
    let e = expand_in_qs(&f);
    match format {
        Format::Text => {
            println!("F basis:");
            println!("{}", comp_terms_text(f.coeffs()));
            println!("qs basis:");
            println!("{}", comp_terms_text(&e.coeffs));
        }
        Format::Json => {
            let v = json!({
                "f": comp_terms_json(f.coeffs()),
                "qs": comp_terms_json(&e.coeffs),
            });
            println!("{}", pretty(&v));
        }
        Format::Dot => unreachable!("rejected in run"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tableaux(outer: &str, inner: &str, format: Format) -> Result<ExitCode, String> {
    let shape = SkewShape::new(parse_comp(outer, "outer")?, parse_comp(inner, "inner")?);
    if !shape.is_valid() {
        return Err(format!(
            "{} does not sit below {} in the left order",
            shape.inner, shape.outer
        ));
    }
    let mut tableaux = standard_tableaux(&shape);
    tableaux.sort();
    match format {
        Format::Text => {
            println!("{} tableaux", tableaux.len());
            for t in &tableaux {
                println!();
                println!("{t}");
                println!("descent composition: {}", descent_composition(t));
            }
        }
        Format::Json => {
            let v = json!({
                "count": tableaux.len(),
                "tableaux": tableaux
                    .iter()
                    .map(|t| json!({
                        "rows": t.rows,
                        "descent_composition": descent_composition(t).parts(),
                    }))
                    .collect::<Vec<_>>(),
            });
            println!("{}", pretty(&v));
        }
        Format::Dot => unreachable!("rejected in run"),
    }
    Ok(ExitCode::SUCCESS)
}

/// One labelled block of checks inside a verify run.
struct Sweep {
    name: String,
    checked: u64,
    failures: u64,
    instances: Vec<String>,
}

enum VerifyUnit {
    Lemmas { max_len: usize, max_part: u32 },
    Graph { which: GraphIdentity, max_size: u32 },
    Pieri { theorem: PieriTheorem, bounds: PieriBounds },
}

impl VerifyUnit {
    fn run(&self) -> Vec<Sweep> {
        let start = Instant::now();
        let (label, sweeps) = match self {
            VerifyUnit::Lemmas { max_len, max_part } => (
                "lemmas".to_string(),
                verify_lemmas(*max_len, *max_part)
                    .into_iter()
                    .map(|r| Sweep {
                        name: format!("lemma {}", r.name),
                        checked: r.checked as u64,
                        failures: r.failures as u64,
                        instances: r.first_failure.into_iter().collect(),
                    })
                    .collect(),
            ),
            VerifyUnit::Graph { which, max_size } => {
                let r = verify_identity(*which, *max_size);
                let name = format!("graph {which}");
                let sweep = Sweep {
                    checked: r.checked as u64,
                    failures: r.failures.len() as u64,
                    instances: r
                        .failures
                        .iter()
                        .take(10)
                        .map(|(c, lhs, rhs)| format!("{c}: {lhs} vs {rhs}"))
                        .collect(),
                    name: name.clone(),
                };
                (name, vec![sweep])
            }
            VerifyUnit::Pieri { theorem, bounds } => {
                let r = verify_pieri_theorem(*theorem, bounds);
                let name = format!("pieri {}", theorem.name());
                let sweep = Sweep {
                    checked: r.checked,
                    failures: r.failures.len() as u64,
                    instances: r
                        .failures
                        .iter()
                        .take(10)
                        .map(|f| format!("{}: {} vs {}", f.input, f.lhs, f.rhs))
                        .collect(),
                    name: name.clone(),
                };
                (name, vec![sweep])
            }
        };
        eprintln!("{label}: {:.2}s", start.elapsed().as_secs_f64());
        sweeps
    }
}

fn cmd_verify(
    suite: Suite,
    max_len: usize,
    max_part: u32,
    max_size: u32,
    bounds: PieriBounds,
    jobs: usize,
    format: Format,
) -> Result<ExitCode, String> {
    let mut units = Vec::new();
    if matches!(suite, Suite::Lemmas | Suite::All) {
        units.push(VerifyUnit::Lemmas { max_len, max_part });
    }
    if matches!(suite, Suite::Graphs | Suite::All) {
        for which in [
            GraphIdentity::RcQc,
            GraphIdentity::RcQct,
            GraphIdentity::LcQc,
            GraphIdentity::LcQct,
        ] {
            units.push(VerifyUnit::Graph { which, max_size });
        }
    }
    if matches!(suite, Suite::Pieri | Suite::All) {
        for theorem in PieriTheorem::ALL {
            units.push(VerifyUnit::Pieri { theorem, bounds });
        }
    }
    let start = Instant::now();
    let sweeps: Vec<Sweep> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| units.par_iter().flat_map_iter(VerifyUnit::run).collect())
    } else {
        units.iter().flat_map(VerifyUnit::run).collect()
    };
    let checked: u64 = sweeps.iter().map(|s| s.checked).sum();
    let failures: u64 = sweeps.iter().map(|s| s.failures).sum();
    eprintln!("total: {:.2}s", start.elapsed().as_secs_f64());
    match format {
        Format::Text => {
            for s in &sweeps {
                println!("{}: {} checked, {} failures", s.name, s.checked, s.failures);
                for inst in &s.instances {
                    println!("  {inst}");
                }
            }
            println!("total: {checked} checked, {failures} failures");
        }
        Format::Json => {
            let v = json!({
                "sweeps": sweeps
                    .iter()
                    .map(|s| json!({
                        "name": s.name,
                        "checked": s.checked,
                        "failures": s.failures,
                        "instances": s.instances,
                    }))
                    .collect::<Vec<_>>(),
                "checked": checked,
                "failures": failures,
            });
            println!("{}", pretty(&v));
        }
        Format::Dot => unreachable!("rejected in run"),
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
