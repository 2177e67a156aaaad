use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use commands::Failure;
use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "hitsym",
    version,
    about = "Random-walk invariants, clusters and hitting-time symmetry"
)]
struct Cli {
    /// Relative tolerance for every check in this run (at least 1e-12).
    #[arg(long, global = true, value_parser = parse_tolerance)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named graph family as an edge list.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Compute invariants of a graph.
    Compute {
        graph: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        select: Vec<Select>,
    },
    /// Decide whether hitting times are symmetric.
    CheckHs {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
    },
    /// Glue a copy of G2 at its root onto every vertex of G1.
    Cluster {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Compare the cluster closed forms with exact values.
    VerifyCluster {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Bounds on Kemeny's constant.
    Bounds { graph: PathBuf },
    /// Monte Carlo estimate of a hitting time.
    Simulate {
        graph: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Select {
    Kemeny,
    Kirchhoff,
    Resistance,
    Hitting,
    Stationary,
    Spectrum,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Screen,
    Full,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !t.is_finite() || t < hitsym_core::tol::FLOOR {
        return Err(format!(
            "tolerance must be finite and at least {:e}",
            hitsym_core::tol::FLOOR
        ));
    }
    Ok(t)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let echo = std::iter::once("hitsym".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    let mut report = Report::new(echo);
    let tol = cli.tolerance;
    if let Some(t) = tol {
        report.input("tolerance", report::float(t));
    }

    let outcome = match cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => commands::gen(&mut report, &family, &params, &out),
        Command::Compute { graph, select } => commands::compute(&mut report, &graph, &select, tol),
        Command::CheckHs { graph, mode } => commands::check_hs(&mut report, &graph, mode, tol),
        Command::Cluster { g1, g2, root, out } => {
            commands::cluster(&mut report, &g1, &g2, root, &out)
        }
        Command::VerifyCluster { g1, g2, root } => {
            commands::verify_cluster(&mut report, &g1, &g2, root, tol)
        }
        Command::Bounds { graph } => commands::bounds(&mut report, &graph, tol),
        Command::Simulate {
            graph,
            from,
            to,
            trials,
            seed,
        } => commands::simulate(&mut report, &graph, from, to, trials, seed),
    };

    match outcome {
        Ok(()) => {
            print!("{}", report.render("ok"));
            ExitCode::SUCCESS
        }
        Err(Failure {
            code,
            kind,
            message,
        }) => {
            report.diagnostic("error.kind", kind);
            report.diagnostic("error.message", &message);
            print!("{}", report.render("error"));
            eprintln!("hitsym: {message}");
            ExitCode::from(code)
        }
    }
}
