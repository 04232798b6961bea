//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `solve` finds no stable matching (or
//! `verify-small` finds a counterexample), 2 on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::basic::{classify_instance, BasicShape};
use crate::builtin;
use crate::instance::{validate, Instance};
use crate::kgen::{default_subdivided_gender, subdivide};
use crate::parse::parse_instance;
use crate::search::{search_counterexamples_with, verify_small_dimensions, SearchOptions};
use crate::stability::{certificate, enumerate_families, find_stable_matching};

#[derive(Debug, Parser)]
#[command(
    name = "cycmatch",
    about = "Stable matching with cyclic incomplete preferences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Source {
    /// Instance file in `3dsmi` format
    file: Option<PathBuf>,
    /// Use a builtin instance instead of a file
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate an instance file
    Check { file: PathBuf },
    /// Find a stable matching
    Solve(Source),
    /// List every maximal matching with its blocking triples
    Certify(Source),
    /// Scan all dimension-3 instances of the basic shapes
    Search {
        /// Basic shape index 1..=6 (all shapes if omitted)
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        shape: Option<u8>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = 10)]
        sample_limit: usize,
        /// Write sampled counterexamples here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print `shape=<k> scanned=<c> counterexamples=<c>` lines
        #[arg(long)]
        machine: bool,
    },
    /// Check every instance of dimension 1 or 2
    VerifySmall {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        n: u8,
    },
    /// Emit the k-gender subdivision of an instance in `kdsmi` format
    Subdivide {
        #[arg(long)]
        k: usize,
        /// Gender class whose edges are subdivided (default: fewest edges)
        #[arg(long)]
        gender: Option<usize>,
        #[command(flatten)]
        source: Source,
    },
    /// Print a builtin instance, or list the names
    Builtin {
        #[arg(long)]
        list: bool,
        name: Option<String>,
    },
}

struct Failure(String);

fn load(source: &Source) -> Result<Instance, Failure> {
    match (&source.file, &source.builtin) {
        (_, Some(name)) => builtin::get(name).ok_or_else(|| {
            Failure(format!(
                "unknown builtin `{name}` (available: {})",
                builtin::NAMES.join(", ")
            ))
        }),
        (Some(path), None) => load_file(path),
        (None, None) => Err(Failure(
            "expected an instance file or --builtin NAME".into(),
        )),
    }
}

fn load_file(path: &PathBuf) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure(e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { file } => {
            let inst = load_file(&file)?;
            debug_assert!(validate(&inst).is_valid());
            writeln!(
                out,
                "valid: n={} edges={} families={} basic={}",
                inst.n(),
                inst.edge_count(),
                enumerate_families(&inst).len(),
                classify_instance(&inst)
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Solve(source) => {
            let inst = load(&source)?;
            match find_stable_matching(&inst) {
                Some(m) => {
                    writeln!(out, "STABLE MATCHING {m}").map_err(io)?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "NO STABLE MATCHING").map_err(io)?;
                    Ok(1)
                }
            }
        }
        Command::Certify(source) => {
            let inst = load(&source)?;
            write!(out, "{}", certificate(&inst)).map_err(io)?;
            Ok(0)
        }
        Command::Search {
            shape,
            workers,
            sample_limit,
            out: dir,
            machine,
        } => {
            let mut opts = SearchOptions {
                sample_limit,
                ..SearchOptions::default()
            };
            if let Some(w) = workers {
                opts.workers = w.max(1);
            }
            let shapes: Vec<BasicShape> = match shape {
                Some(k) => vec![BasicShape::from_index(k as usize).expect("range checked")],
                None => BasicShape::ALL.to_vec(),
            };
            if let Some(dir) = &dir {
                fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
            }
            for s in shapes {
                let report = search_counterexamples_with(s, &opts);
                if machine {
                    writeln!(out, "{}", report.machine_line()).map_err(io)?;
                } else {
                    writeln!(out, "{report}").map_err(io)?;
                }
                if let Some(dir) = &dir {
                    for sample in &report.samples {
                        let path =
                            dir.join(format!("shape{}_{:07}.3dsmi", s.index(), sample.index));
                        fs::write(&path, sample.instance.to_string())
                            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    }
                }
            }
            Ok(0)
        }
        Command::VerifySmall { n } => {
            let report = verify_small_dimensions(n as usize);
            writeln!(out, "{report}").map_err(io)?;
            Ok(if report.all_stable() { 0 } else { 1 })
        }
        Command::Subdivide { k, gender, source } => {
            let inst = load(&source)?;
            let g = gender.unwrap_or_else(|| default_subdivided_gender(&inst));
            let sub = subdivide(&inst, k, g).map_err(|e| Failure(e.to_string()))?;
            write!(out, "{}", sub.instance).map_err(io)?;
            Ok(0)
        }
        Command::Builtin { list, name } => match (list, name) {
            (_, Some(name)) => {
                let text = builtin::source(&name)
                    .ok_or_else(|| Failure(format!("unknown builtin `{name}`")))?;
                write!(out, "{text}").map_err(io)?;
                Ok(0)
            }
            (true, None) => {
                for name in builtin::NAMES {
                    writeln!(out, "{name}").map_err(io)?;
                }
                Ok(0)
            }
            (false, None) => Err(Failure("expected --list or a builtin name".into())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cycmatch").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn solve_fig2() {
        let (code, out, _) = run_args(&["solve", "--builtin", "fig2"]);
        assert_eq!(code, 1);
        assert_eq!(out, "NO STABLE MATCHING\n");
    }

    #[test]
    fn certify_fig3_has_eight_lines() {
        let (code, out, _) = run_args(&["certify", "--builtin", "fig3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        assert!(out.lines().all(|l| l.contains("-> BLOCKED by")));
    }

    #[test]
    fn verify_small_n2() {
        let (code, out, _) = run_args(&["verify-small", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "15625 instances, 0 counterexamples\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["verify-small", "--n", "3"]).0, 2);
        assert_eq!(run_args(&["search", "--shape", "7"]).0, 2);
        let (code, _, err) = run_args(&["solve", "--builtin", "nope"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown builtin"));
        let (code, _, err) = run_args(&["solve", "/nonexistent/x.3dsmi"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn builtin_listing() {
        let (code, out, _) = run_args(&["builtin", "--list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().collect::<Vec<_>>(), builtin::NAMES);
        let (_, out, _) = run_args(&["builtin", "fig3"]);
        assert_eq!(parse_instance(&out).unwrap(), builtin::get("fig3").unwrap());
    }

    #[test]
    fn subdivide_emits_kdsmi() {
        let (code, out, _) = run_args(&["subdivide", "--k", "4", "--builtin", "fig2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("kdsmi 4 5\n"));
        let (code, _, _) = run_args(&[
            "subdivide",
            "--k",
            "4",
            "--gender",
            "5",
            "--builtin",
            "fig2",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify-small"));
    }
}
