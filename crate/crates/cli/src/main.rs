use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use csf_core::coefficients::{case_diagram, case_of};
use csf_core::injections::certify;
use csf_core::symfunc::{
    chromatic_m_coefficients, chromatic_m_coefficients_t, coefficients_in_h, coefficients_in_h_t, omega_on_s, peel,
};
use csf_core::tableaux::{enumerate_tableaux, gasharov_expansion};
use csf_core::verifier::{verify_any, verify_range, Certificate, DEFAULT_BUDGET};
use csf_core::{enumerate_hessenberg, Basis, Error, HessenbergFunction, Partition};

// stdout writes that end quietly when the reader goes away
macro_rules! out {
    ($($arg:tt)*) => {
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    };
}

#[derive(Parser)]
#[command(name = "csf", version, about = "Chromatic symmetric functions of unit interval orders")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    E,
    H,
    S,
    M,
}

#[derive(Subcommand)]
enum Cmd {
    /// List Hessenberg functions of size n.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bounce: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Expand the chromatic symmetric function (s and h give ωX_G, e and m give X_G).
    Expand {
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value = "s")]
        basis: BasisArg,
        /// Keep the ascent grading.
        #[arg(long)]
        t: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the f-tableaux of a shape.
    Tableaux {
        #[arg(long)]
        f: String,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Certify the h-coefficients of one function or of every function up to n.
    Verify {
        #[arg(long, conflicts_with = "f", required_unless_present = "f")]
        n: Option<usize>,
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        bounce: Option<usize>,
        /// Write the certificates as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Permit n = 9.
        #[arg(long)]
        allow_large: bool,
    },
    /// Show every pairing of the injections for one coefficient.
    Trace {
        #[arg(long)]
        f: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::EmptyInput
            | Error::NotNonDecreasing(_)
            | Error::BelowDiagonal(..)
            | Error::OutOfRange(..)
            | Error::TooLarge(..)
            | Error::InvalidPartition(_)
            | Error::Budget(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn parse_f(s: &str) -> Result<HessenbergFunction, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(format!("--f: {e}")))
}

fn parse_partition(flag: &str, s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(format!("{flag}: {e}")))
}

fn budget() -> Result<usize, Failure> {
    match std::env::var("CSF_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("CSF_BUDGET={v} is not a number"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_list(n: usize, bounce: Option<usize>, as_json: bool) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if n > 12 {
        return Err(Failure::Usage(format!("--n {n} is too large to list")));
    }
    let fs = enumerate_hessenberg(n, bounce);
    if as_json {
        let items: Vec<Value> = fs
            .iter()
            .map(|f| json!({"f": f.values(), "bounce": f.bounce_number(), "dyck": f.dyck_path()}))
            .collect();
        print_json(&json!(items));
    } else {
        for f in &fs {
            out!("{f}\tb={}\t{}", f.bounce_number(), f.dyck_path());
        }
        out!("{} functions", fs.len());
    }
    Ok(true)
}

fn cmd_expand(f: &str, basis: BasisArg, t: bool, as_json: bool) -> Outcome {
    let f = parse_f(f)?;
    let n = f.n() as u32;
    let (text, value) = if t {
        let x = match basis {
            BasisArg::H => coefficients_in_h_t(&f)?,
            BasisArg::E => coefficients_in_h_t(&f)?.relabel(Basis::E),
            BasisArg::M => peel(&chromatic_m_coefficients_t(&f)?, n, Basis::M)?,
            BasisArg::S => omega_on_s(&peel(&chromatic_m_coefficients_t(&f)?, n, Basis::S)?)?,
        };
        (x.to_string(), x.to_json())
    } else {
        let x = match basis {
            BasisArg::S => gasharov_expansion(&f),
            BasisArg::H => coefficients_in_h(&f),
            BasisArg::E => coefficients_in_h(&f).relabel(Basis::E),
            BasisArg::M => peel(&chromatic_m_coefficients(&f)?, n, Basis::M)?,
        };
        (x.to_string(), x.to_json())
    };
    if as_json {
        print_json(&json!({"f": f.values(), "expansion": value}));
    } else {
        out!("{text}");
    }
    Ok(true)
}

fn cmd_tableaux(f: &str, shape: &str, as_json: bool) -> Outcome {
    let f = parse_f(f)?;
    let shape = parse_partition("--shape", shape)?;
    if shape.weight() as usize != f.n() {
        return Err(Failure::Usage(format!("--shape {shape} does not have weight {}", f.n())));
    }
    let parts: Vec<i64> = shape.parts().iter().map(|&x| x as i64).collect();
    let ts = enumerate_tableaux(&f, &parts);
    if as_json {
        print_json(&json!({"f": f.values(), "shape": shape.parts(), "count": ts.len(), "tableaux": ts}));
    } else {
        for t in &ts {
            out!("{t}");
        }
        out!("d = {}", ts.len());
    }
    Ok(true)
}

fn print_certificate(c: &Certificate) {
    out!("f = {}  n = {}  b = {}  {}", c.f, c.n, c.bounce, if c.passed { "PASS" } else { "FAIL" });
    for r in &c.records {
        let mu: Vec<String> = r.mu.iter().map(u32::to_string).collect();
        out!(
            "  ({:<10} case {:<7} signed {:<6} oracle {:<6} matching {:<6} {}",
            format!("{})", mu.join(",")),
            r.case,
            r.c_signed.to_string(),
            r.c_oracle.to_string(),
            r.c_matching.to_string(),
            if r.passed { "ok" } else { "FAILED" }
        );
    }
    for msg in &c.failures {
        out!("  ! {msg}");
    }
}

fn write_out(path: &PathBuf, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("json");
    fs::write(path, text + "\n").map_err(|e| Failure::Failed(format!("writing {}: {e}", path.display())))
}

fn cmd_verify(
    n: Option<usize>,
    f: Option<String>,
    bounce: Option<usize>,
    out: Option<PathBuf>,
    as_json: bool,
    allow_large: bool,
) -> Outcome {
    let mut cap = budget()?;
    if allow_large {
        cap = cap.max(9);
    }
    if let Some(f) = f {
        let f = parse_f(&f)?;
        if f.n() > cap {
            return Err(Failure::Usage(format!("n = {} exceeds the budget {cap}", f.n())));
        }
        let cert = verify_any(&f)?;
        let v = serde_json::to_value(&cert).expect("json");
        if let Some(path) = &out {
            write_out(path, &v)?;
        }
        if as_json {
            print_json(&v);
        } else {
            print_certificate(&cert);
        }
        return Ok(cert.passed);
    }
    let n = n.expect("clap requires --n or --f");
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let summary = verify_range(n, bounce, cap)?;
    let v = serde_json::to_value(&summary).expect("json");
    if let Some(path) = &out {
        write_out(path, &v)?;
    }
    if as_json {
        let mut brief = v.clone();
        brief.as_object_mut().expect("object").remove("certificates");
        print_json(&brief);
    } else {
        out!("{:>4} {:>10} {:>9}", "n", "functions", "failures");
        for k in 1..=n {
            let of_k: Vec<&Certificate> = summary.certificates.iter().filter(|c| c.n == k).collect();
            let bad = of_k.iter().filter(|c| !c.passed).count();
            out!("{k:>4} {:>10} {bad:>9}", of_k.len());
        }
        out!("total {} functions, {} failures, {:.2?}", summary.functions, summary.failures, summary.elapsed);
        for f in &summary.failed {
            out!("  failed: {f}");
        }
    }
    Ok(summary.failures == 0)
}

fn cmd_trace(f: &str, mu: &str, as_json: bool) -> Outcome {
    let f = parse_f(f)?;
    let mu = parse_partition("--mu", mu)?;
    if mu.weight() as usize != f.n() || mu.len() > 3 {
        return Err(Failure::Usage(format!("--mu {mu} must be a partition of {} with at most three parts", f.n())));
    }
    let rec = certify(&f, &mu, true)?;
    let diagram = if f.bounce_number() == 3 { Some(case_diagram(&mu)?) } else { None };
    if as_json {
        print_json(&json!({
            "f": rec.f,
            "mu": rec.mu,
            "case": rec.case,
            "diagram": diagram,
            "nodes": rec.nodes,
            "pairings": rec.pairings,
            "residual_positive": rec.residual_positive,
            "c": rec.c_matching,
            "checks": rec.checks,
            "counterexamples": rec.counterexamples,
        }));
    } else {
        let case = if f.bounce_number() == 3 { format!("case {}", case_of(&mu)?) } else { rec.case.clone() };
        out!("f = {f}  mu = {mu}  {case}");
        for node in &rec.nodes {
            let sign = if node.sign > 0 { '+' } else { '-' };
            out!("  {:<8} {:?}{sign}  {} tableaux", node.label, node.parts, node.size);
        }
        for p in &rec.pairings {
            out!("  {:<16} {:<10} {} -> {}", p.map, p.subcase, p.input, p.output);
        }
        for t in &rec.residual_positive {
            out!("  unmatched {t}");
        }
        out!("c = {}  checks {}", rec.c_matching, if rec.checks.all() { "ok" } else { "FAILED" });
    }
    Ok(rec.checks.all())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::List { n, bounce, json } => cmd_list(n, bounce, json),
        Cmd::Expand { f, basis, t, json } => cmd_expand(&f, basis, t, json),
        Cmd::Tableaux { f, shape, json } => cmd_tableaux(&f, &shape, json),
        Cmd::Verify { n, f, bounce, out, json, allow_large } => cmd_verify(n, f, bounce, out, json, allow_large),
        Cmd::Trace { f, mu, json } => cmd_trace(&f, &mu, json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
