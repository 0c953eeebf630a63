use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cptgroup::cpt::CptGroup;
use cptgroup::gamma::{GammaRep, Representation};
use cptgroup::group::{named, FiniteGroup};
use cptgroup::listings::THETA_CHAIN;
use cptgroup::operator::build_operator_group;
use cptgroup::report::{group_summaries, run_verification, Status};
use cptgroup::solver::{solve_symmetry, Symmetry};

#[derive(Parser)]
#[command(name = "cptgroup", version, about = "Exact C, P, T matrices and the finite groups they generate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every claim and report pass, fail or mismatch.
    Verify {
        /// Write the JSON report here.
        #[arg(long)]
        json_out: Option<PathBuf>,
        /// Treat mismatches with the printed listings as failures.
        #[arg(long)]
        strict: bool,
    },
    /// Basic multiplication table of a group.
    Table {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Solve the defining constraints of one symmetry.
    Solve {
        #[arg(long)]
        symmetry: Symmetry,
        #[arg(long, default_value = "dp")]
        rep: Representation,
    },
    /// Regular permutation representation of a group. For the operator
    /// group the image in S10 is listed first.
    Cycles {
        #[arg(long, value_enum)]
        group: GroupArg,
    },
    /// Isomorphism types of the three groups.
    Identify,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    G1,
    G2,
    Gtheta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe downstream is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Verify { json_out, strict } => {
            let report = run_verification(strict)?;
            for c in &report.sections {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Mismatch => "MISMATCH",
                };
                writeln!(out, "{tag:<8} {:<20} {}", c.claim_id, c.description)?;
                if c.status != Status::Pass {
                    writeln!(out, "         {}", c.details)?;
                }
            }
            writeln!(
                out,
                "{} passed, {} failed, {} mismatched{}",
                report.counts.pass,
                report.counts.fail,
                report.counts.mismatch,
                if strict { " (strict)" } else { "" }
            )?;
            if let Some(path) = json_out {
                std::fs::write(path, report.to_json() + "\n")?;
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Table { group, format } => {
            let table = match group {
                GroupArg::G1 | GroupArg::G2 => matrix_group(group)?.basic_table()?,
                GroupArg::Gtheta => build_operator_group()?.basic_table()?,
            };
            match format {
                Format::Text => write!(out, "{table}")?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&table)?)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { symmetry, rep } => {
            let space = solve_symmetry(symmetry, &GammaRep::of(rep));
            writeln!(out, "{}", serde_json::to_string_pretty(&space)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cycles { group } => {
            let g = finite_group(group)?;
            let labeling: Vec<usize> = (0..g.order()).collect();
            let regular = g.regular_representation(&labeling)?;
            if let GroupArg::Gtheta = group {
                let alpha = named::dicyclic8_alphabet(10);
                let z = alpha.eval("z")?;
                for row in &THETA_CHAIN {
                    let mut s10 = alpha.eval(row.dc8.0)?;
                    if row.dc8.1 {
                        s10 = s10.compose(&z);
                    }
                    let s16 = &regular[g.index_of(row.label)?];
                    writeln!(out, "{:>8}  {:<24} {}", row.label, s10.cycle_string(), s16.cycle_string())?;
                }
            } else {
                for (label, p) in g.labels().iter().zip(&regular) {
                    writeln!(out, "{label:>8}  {}", p.cycle_string())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Identify => {
            writeln!(out, "{}", serde_json::to_string_pretty(&group_summaries()?)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn matrix_group(group: GroupArg) -> cptgroup::Result<CptGroup> {
    let v = if matches!(group, GroupArg::G1) { 1 } else { 2 };
    CptGroup::canonical(&GammaRep::dirac_pauli(), v)
}

fn finite_group(group: GroupArg) -> cptgroup::Result<FiniteGroup> {
    Ok(match group {
        GroupArg::G1 | GroupArg::G2 => matrix_group(group)?.concrete.group,
        GroupArg::Gtheta => build_operator_group()?.concrete.group,
    })
}
