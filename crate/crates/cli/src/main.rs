//! Command-line front end: every invariant, the verification suites and
//! the conjecture scans, with machine-readable output.
//!
//! Exit codes: 0 on success, 1 when a check suite fails, 2 on usage or
//! domain errors (clap uses 2 for usage errors already).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lenssw::checks::{run_suite, SuiteReport, SUITE_NAMES};
use lenssw::conjectures::{conjecture1_scan, conjecture2_scan};
use lenssw::exact::{rat_to_f64, rat_to_string, Rat};
use lenssw::lens::make_lens;
use lenssw::plumbing::plumbing_record;
use lenssw::sw::{casson_walker, froyshov_full, sw_result};

#[derive(Parser)]
#[command(name = "lenssw", version, about = "Exact Seiberg-Witten-theoretic invariants of lens spaces L(p,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// SW polynomial, Casson-Walker invariant, torsion part, Froyshov invariant
    Sw {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Casson-Walker invariant -(p/2) s(q,p)
    Cw {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Froyshov invariant with its maximizing spin^c indices
    Froyshov {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Elkies invariant of the canonical negative-definite plumbing
    Elkies {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hirzebruch-Jung weights and plumbing Gram matrix
    Hj {
        p: u64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named verification suite
    /// (dedekind, groupring, cw, torsion, froyshov-tables, elkies, all)
    Check {
        suite: String,
        /// Override the principal sweep bound of the suite
        #[arg(long)]
        pmax: Option<u64>,
        /// Worker threads for the sweeps
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Residue-family scan of the Froyshov invariant at fixed q
    Conjecture1 {
        q: u64,
        #[arg(long, default_value_t = 6)]
        kmax: u64,
        /// Directory for the JSON report
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Elkies-vs-Froyshov comparison over all coprime pairs
    Conjecture2 {
        #[arg(long, default_value_t = 20)]
        pmax: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn pretty(x: &Rat) -> String {
    let exact = rat_to_string(x);
    if x.is_integer() {
        exact
    } else {
        format!("{exact} ({:.6})", rat_to_f64(x))
    }
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn lens_or_exit(p: u64, q: i64) -> Result<lenssw::lens::LensSpace, ExitCode> {
    make_lens(p, q).map_err(|e| usage_error(&format!("invalid lens space L({p},{q}): {e}")))
}

fn print_suite(report: &SuiteReport) {
    for check in &report.checks {
        if check.ok() {
            println!("ok   {} ({} cases)", check.label, check.cases);
        } else {
            println!("FAIL {} ({} of {} cases)", check.label, check.failures.len(), check.cases);
            for f in check.failures.iter().take(10) {
                println!("     {f}");
            }
            if check.failures.len() > 10 {
                println!("     ... and {} more", check.failures.len() - 10);
            }
        }
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!("{status} suite '{}' ({} cases)", report.suite, report.total_cases());
}

fn write_report(out: &PathBuf, name: &str, json: &str) -> Result<PathBuf, ExitCode> {
    if let Err(e) = std::fs::create_dir_all(out) {
        return Err(usage_error(&format!("cannot create {}: {e}", out.display())));
    }
    let path = out.join(name);
    if let Err(e) = std::fs::write(&path, json) {
        return Err(usage_error(&format!("cannot write {}: {e}", path.display())));
    }
    Ok(path)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Sw { p, q, format } => {
            let lens = match lens_or_exit(p, q) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let result = sw_result(&lens);
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string(&result).expect("serializable"))
                }
                Format::Text => {
                    println!("L({},{})", lens.p(), lens.q());
                    println!("  sw polynomial : {}", result.sw_poly);
                    println!("  casson-walker : {}", pretty(&result.cw));
                    println!("  torsion part  : {}", result.torsion_part);
                    println!("  froyshov      : {}", pretty(&result.froyshov));
                    match result.torsion_shift {
                        Some(s) => println!("  torsion shift : {s} (T(1-t)(1-t^q) = t^{s} * 1-hat)"),
                        None => println!("  torsion shift : FAILED"),
                    }
                    let argmax: Vec<String> = result
                        .argmax_indices
                        .iter()
                        .map(|i| format!("({},{})", i.k, i.j))
                        .collect();
                    println!("  F maximized at: {}", argmax.join(", "));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Cw { p, q, format } => {
            let lens = match lens_or_exit(p, q) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let cw = casson_walker(&lens);
            match format {
                Format::Json => println!(
                    r#"{{"p":{},"q":{},"cw":"{}"}}"#,
                    lens.p(),
                    lens.q(),
                    rat_to_string(&cw)
                ),
                Format::Text => println!("CW(L({},{})) = {}", lens.p(), lens.q(), pretty(&cw)),
            }
            ExitCode::SUCCESS
        }
        Command::Froyshov { p, q, format } => {
            let lens = match lens_or_exit(p, q) {
                Ok(l) => l,
                Err(code) => return code,
            };
            let result = froyshov_full(&lens);
            match format {
                Format::Json => {
                    let argmax: Vec<Vec<u64>> =
                        result.argmax.iter().map(|i| vec![i.k, i.j]).collect();
                    println!(
                        r#"{{"p":{},"q":{},"froyshov":"{}","argmax":{}}}"#,
                        lens.p(),
                        lens.q(),
                        rat_to_string(&result.value),
                        serde_json::to_string(&argmax).expect("serializable")
                    );
                }
                Format::Text => {
                    println!("Froy(L({},{})) = {}", lens.p(), lens.q(), pretty(&result.value));
                    let argmax: Vec<String> =
                        result.argmax.iter().map(|i| format!("({},{})", i.k, i.j)).collect();
                    println!("  maximized at {}", argmax.join(", "));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Elkies { p, q, format } => run_plumbing(p, q, format, true),
        Command::Hj { p, q, format } => run_plumbing(p, q, format, false),
        Command::Check { suite, pmax, jobs } => {
            set_jobs(jobs);
            match run_suite(&suite, pmax) {
                None => usage_error(&format!(
                    "unknown suite '{suite}' (expected one of: {})",
                    SUITE_NAMES.join(", ")
                )),
                Some(report) => {
                    print_suite(&report);
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
            }
        }
        Command::Conjecture1 { q, kmax, out, format, jobs } => {
            set_jobs(jobs);
            if q < 2 || kmax < 3 {
                return usage_error("conjecture1 needs q >= 2 and --kmax >= 3");
            }
            let report = conjecture1_scan(q, kmax);
            let json = serde_json::to_string_pretty(&report).expect("serializable");
            let path = match write_report(&out, &format!("conjecture1_q{q}_k{kmax}.json"), &json) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match format {
                Format::Json => println!("{json}"),
                Format::Text => {
                    println!("residue families for q = {q}, k <= {kmax}:");
                    for fam in &report.families {
                        match (&fam.a, &fam.b) {
                            (Some(a), Some(b)) => println!(
                                "  u = {:>3}: Froy(L({q}+2k*{q}... p = {}+{}k) = ({a} k + {b})/p  [{}]",
                                fam.u,
                                fam.u,
                                2 * q,
                                if fam.conforms { "verified" } else { "VIOLATED" }
                            ),
                            _ => println!("  u = {:>3}: two-point fit is not integral", fam.u),
                        }
                    }
                    println!(
                        "bound Froy <= q: {} instances, {} violations",
                        report.bound_instances,
                        report.bound_violations.len()
                    );
                    println!(
                        "printed q-1 family: {} points, {} mismatches (expected vs computed reported in {})",
                        report.family_check.len(),
                        report.family_check_violations,
                        path.display()
                    );
                }
            }
            println!("report written to {}", path.display());
            ExitCode::SUCCESS
        }
        Command::Conjecture2 { pmax, out, format, jobs } => {
            set_jobs(jobs);
            if pmax < 3 {
                return usage_error("conjecture2 needs --pmax >= 3");
            }
            let report = conjecture2_scan(pmax);
            let json = serde_json::to_string_pretty(&report).expect("serializable");
            let path = match write_report(&out, &format!("conjecture2_pmax{pmax}.json"), &json) {
                Ok(p) => p,
                Err(code) => return code,
            };
            match format {
                Format::Json => println!("{json}"),
                Format::Text => {
                    println!(
                        "Elkies vs Froyshov on {} coprime pairs, p <= {pmax}: {} unequal",
                        report.rows.len(),
                        report.unequal
                    );
                    for row in report.rows.iter().filter(|r| !r.equal) {
                        println!(
                            "  L({},{}): Theta = {}, Froy = {}",
                            row.p, row.q, row.theta, row.froyshov
                        );
                    }
                }
            }
            println!("report written to {}", path.display());
            ExitCode::SUCCESS
        }
    }
}

fn run_plumbing(p: u64, q: i64, format: Format, with_theta: bool) -> ExitCode {
    let lens = match lens_or_exit(p, q) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let record = match plumbing_record(lens.p(), lens.q(), with_theta) {
        Ok(r) => r,
        Err(e) => return usage_error(&format!("L({p},{q}): {e}")),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&record).expect("serializable")),
        Format::Text => {
            let weights: Vec<String> = record.hj_weights.iter().map(|w| w.to_string()).collect();
            println!("L({},{})", record.p, record.q);
            println!("  HJ weights : <{}>", weights.join(","));
            println!("  Gram matrix:");
            for row in &record.gram {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
                println!("    [{}]", cells.join(" "));
            }
            if let Some(theta) = &record.theta {
                let value = lenssw::exact::rat_from_str(theta).expect("canonical");
                println!("  Elkies invariant: {}", pretty(&value));
            }
        }
    }
    ExitCode::SUCCESS
}
