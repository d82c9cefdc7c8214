//! `qtheta`: runs the verification suites and writes JSON reports.

use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qtheta::ncalg::AlgebraError;
use qtheta::report::{Check, Report};
use qtheta::{cartan, health, prefund, qaffine, rmatrix, yangian};
use serde::Deserialize;

#[derive(Parser)]
#[command(name = "qtheta", version, about = "Exact verification of Theta series for Yangians and quantum affine sl3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify { suite: VerifySuite },
    /// Solve a series equation and print its coefficients.
    Solve { equation: SolveKind },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Yangian,
    Prefund,
    QaffineRoots,
    ThetaQaffine,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    Gklo,
    SSeries,
}

#[derive(clap::Args, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct Opts {
    /// Rank of sl_{n+1} for the Yangian suites.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Node i; all nodes when omitted.
    #[arg(long, global = true)]
    node: Option<usize>,
    /// Height truncation of the Yangian Theta series.
    #[arg(long, global = true)]
    height: Option<i32>,
    /// Depth of the prefundamental module and of the quantum Theta series.
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Order of the GKLO and S-series expansions.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Degree bound of the ideal-membership certificates.
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// TOML file of defaults; flags take precedence.
    #[arg(long, global = true)]
    #[serde(skip)]
    config: Option<PathBuf>,
}

/// Resolved parameters.
#[derive(Debug)]
struct SuiteConfig {
    n: usize,
    node: Option<usize>,
    height: i32,
    /// `None` means each suite's own default.
    depth: Option<u32>,
    order: usize,
    degree_bound: usize,
    report: Option<PathBuf>,
}

const PREFUND_MARGIN: u32 = 3;

impl SuiteConfig {
    fn resolve(flags: Opts) -> Result<Self, String> {
        let file = match &flags.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
                toml::from_str::<Opts>(&text).map_err(|e| format!("invalid config {}: {e}", p.display()))?
            }
            None => Opts::default(),
        };
        let cfg = SuiteConfig {
            n: flags.n.or(file.n).unwrap_or(2),
            node: flags.node.or(file.node),
            height: flags.height.or(file.height).unwrap_or(4),
            depth: flags.depth.or(file.depth),
            order: flags.order.or(file.order).unwrap_or(10),
            degree_bound: flags.degree_bound.or(file.degree_bound).unwrap_or(12),
            report: flags.report.or(file.report),
        };
        if cfg.n == 0 || cfg.height <= 0 || cfg.depth == Some(0) || cfg.order == 0 || cfg.degree_bound == 0 {
            return Err("all bounds must be positive".into());
        }
        if let Some(i) = cfg.node {
            if i == 0 || i > cfg.n {
                return Err(format!("node {i} is outside 1..={}", cfg.n));
            }
        }
        Ok(cfg)
    }

    fn prefund_depth(&self) -> u32 {
        self.depth.unwrap_or(8)
    }

    /// Depth 8 takes minutes; 6 is where the Theta comparison is usually run.
    fn theta_depth(&self) -> u32 {
        self.depth.unwrap_or(6)
    }

    fn nodes(&self) -> Vec<usize> {
        match self.node {
            Some(i) => vec![i],
            None => (1..=self.n).collect(),
        }
    }
}

/// Runs `f`, turning an algebra error into a failing report and stamping
/// the elapsed time.
fn timed(suite: &str, f: impl FnOnce() -> Result<Report, AlgebraError>) -> Report {
    let start = Instant::now();
    let mut rep = f().unwrap_or_else(|e| {
        let mut r = Report::new(suite);
        r.push(Check::fail("suite completed", e.to_string(), 1));
        r
    });
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    rep
}

fn yangian_suite(cfg: &SuiteConfig) -> Report {
    timed("yangian", || {
        let mut rep = Report::new("yangian").param("n", cfg.n).param("height", cfg.height);
        rep = rep.param("nodes", cfg.nodes());
        for i in cfg.nodes() {
            let sub = yangian::verify_all(cfg.n, i, cfg.height)?;
            for mut c in sub.checks {
                c.name = format!("node {i}: {}", c.name);
                rep.push(c);
            }
        }
        Ok(rep)
    })
}

fn prefund_suite(cfg: &SuiteConfig) -> Report {
    timed("prefund", || {
        let model = prefund::build_l1(cfg.prefund_depth());
        let mut rep = Report::new("prefund").param("depth", cfg.prefund_depth()).param("margin", PREFUND_MARGIN);
        rep.extend(prefund::verify_l1_relations(&model, PREFUND_MARGIN)?);
        rep.extend(prefund::verify_lowest_weight(&model)?);
        Ok(rep)
    })
}

fn roots_suite(cfg: &SuiteConfig) -> Report {
    timed("qaffine-roots", || {
        let mut rep = Report::new("qaffine-roots").param("degree_bound", cfg.degree_bound as u64);
        rep.extend(qaffine::verify_root_vectors(cfg.degree_bound)?);
        rep.extend(qaffine::verify_automorphisms(cfg.degree_bound)?);
        Ok(rep)
    })
}

fn theta_suite(cfg: &SuiteConfig) -> Report {
    timed("theta-qaffine", || {
        let (d, b) = (cfg.theta_depth(), cfg.degree_bound);
        let mut rep = Report::new("theta-qaffine").param("depth", d).param("degree_bound", b as u64);
        let model = prefund::build_l1(d + 1);
        rep.extend(rmatrix::verify_monodromy(&model, d, b)?);
        let theta = rmatrix::assemble_theta1(&rmatrix::monodromy_table(&model, d)?, d)?;
        rep.extend(rmatrix::compare_theta_closed(&theta, d, b)?);
        rep.extend(rmatrix::verify_theta2(&theta, b)?);
        rep.extend(rmatrix::verify_ft_compatibility(d.min(2), b)?);
        Ok(rep)
    })
}

fn gklo_suite(cfg: &SuiteConfig) -> Report {
    timed("gklo", || Ok(cartan::verify_gklo(cfg.n, cfg.order)))
}

fn s_series_suite(cfg: &SuiteConfig) -> Report {
    timed("s-series", || Ok(cartan::verify_s_series(cfg.n, cfg.order)))
}

fn run_verify(suite: VerifySuite, cfg: &SuiteConfig) -> Vec<Report> {
    match suite {
        VerifySuite::Yangian => vec![yangian_suite(cfg)],
        VerifySuite::Prefund => vec![prefund_suite(cfg)],
        VerifySuite::QaffineRoots => vec![roots_suite(cfg)],
        VerifySuite::ThetaQaffine => vec![theta_suite(cfg)],
        VerifySuite::All => vec![
            timed("kernel", || health::verify_kernel(cfg.n.max(3))),
            yangian_suite(cfg),
            gklo_suite(cfg),
            s_series_suite(cfg),
            timed("quantum-cartan", || Ok(cartan::verify_quantum_cartan(cfg.order.min(4)))),
            prefund_suite(cfg),
            roots_suite(cfg),
            theta_suite(cfg),
        ],
    }
}

fn solve(kind: SolveKind, cfg: &SuiteConfig) -> Report {
    let gklo = cartan::solve_gklo(cfg.n, cfg.order);
    match kind {
        SolveKind::Gklo => {
            for i in 1..=cfg.n {
                for m in 0..cfg.order {
                    println!("a_{{{i},{m}}} = {}", gklo.coeff(i, m));
                }
            }
            gklo_suite(cfg)
        }
        SolveKind::SSeries => {
            let s = cartan::solve_s_series(&gklo, cfg.order);
            for i in 1..=cfg.n {
                for p in 1..=cfg.order {
                    println!("c_{{{i},{p}}} = {}", s.log_s[i - 1].coeff(p));
                }
            }
            s_series_suite(cfg)
        }
    }
}

fn write_output(reports: &[Report], single: bool, path: Option<&Path>) -> std::io::Result<()> {
    let text = if single {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(reports)
    }
    .expect("reports serialize");
    match path {
        Some(p) => std::fs::write(p, text + "\n"),
        None => writeln!(std::io::stdout().lock(), "{text}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match SuiteConfig::resolve(cli.opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (reports, single, print) = match cli.command {
        Command::Verify { suite } => (run_verify(suite, &cfg), !matches!(suite, VerifySuite::All), true),
        Command::Solve { equation } => (vec![solve(equation, &cfg)], true, cfg.report.is_some()),
    };
    if print {
        let written = write_output(&reports, single, cfg.report.as_deref());
        if let Err(e) = written.or_else(|e| if e.kind() == ErrorKind::BrokenPipe { Ok(()) } else { Err(e) }) {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(1);
        }
    }
    for r in &reports {
        for c in r.failures() {
            eprintln!("FAIL [{}] {}: {}", r.suite, c.name, c.detail);
        }
    }
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
