//! Command-line front end. Exit codes: 0 success/pass, 1 verification
//! violation, 2 usage or parse error, 3 resource guard exceeded.

use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::connectivity::{cyclic_3_separations_marked, vertical_3_separations_marked};
use crate::core::Matroid;
use crate::elasticity::elasticity_report;
use crate::error::Error;
use crate::io::{
    self, analyze, document_to_string, emit_json, emit_text, fan_json, theta_witness_json,
    triple_json, Construction, MatroidDocument,
};
use crate::structures::{fans, theta_separators};
use crate::verify::{oracle_crosscheck, verify_bixby, verify_corollary2, verify_theorem1};

#[derive(Parser)]
#[command(name = "matroidlab", version, about = "exact matroid connectivity and elasticity analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Ground-set size guard.
    #[arg(long, global = true, default_value_t = 20)]
    max_elements: usize,
    /// Seed for randomLinear generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Suppress everything except violations and errors.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis report for a matroid document.
    Analyze { file: String },
    /// Elasticity classification only.
    Elastic { file: String },
    /// Vertical and cyclic 3-separation triples.
    Separations {
        file: String,
        #[arg(long, conflicts_with = "cyclic")]
        vertical: bool,
        #[arg(long)]
        cyclic: bool,
        #[arg(long)]
        maximal_only: bool,
    },
    /// Maximal fans.
    Fans { file: String },
    /// Theta-separator witnesses.
    Theta { file: String },
    /// Run a verifier; exits 1 when a violation is found.
    Verify {
        #[arg(value_enum)]
        check: Check,
        file: String,
    },
    /// Emit a matroid document for a catalog family.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Bixby,
    Theorem1,
    Corollary2,
    Crosscheck,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Resource(_) => 3,
        Error::Consistency(_) => 1,
        _ => 2,
    }
}

fn read_input(file: &str) -> Result<String, Error> {
    if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))
    }
}

fn write_output(target: Option<&str>, text: &str) -> Result<(), Error> {
    match target {
        None | Some("-") => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Parse(format!("{path}: {e}")))
        }
    }
}

fn load(file: &str, max_elements: usize) -> Result<Matroid, Error> {
    io::parse(&read_input(file)?, max_elements)
}

fn gen_document(family: &str, params: &[String], seed: u64) -> Result<MatroidDocument, Error> {
    let usize_param = |i: usize, name: &str| -> Result<usize, Error> {
        params
            .get(i)
            .ok_or_else(|| Error::Parse(format!("gen {family}: missing parameter {name}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("gen {family}: bad parameter {name}")))
    };
    let construction = match family {
        "theta" => Construction::Theta { n: usize_param(0, "n")? },
        "thetaMinus" => Construction::ThetaMinus { n: usize_param(0, "n")? },
        "wheel" => Construction::Wheel { r: usize_param(0, "r")? },
        "whirl" => Construction::Whirl { r: usize_param(0, "r")? },
        "uniform" => Construction::Uniform {
            rank: usize_param(0, "rank")?,
            size: usize_param(1, "size")?,
        },
        "mk4" => Construction::Mk4 {},
        "glued" => {
            // glued n hostSize: theta(n) across a line of uniform(2, hostSize)
            let n = usize_param(0, "n")?;
            let host_size = usize_param(1, "hostSize")?;
            Construction::Glued {
                theta: Box::new(MatroidDocument::Construction(Construction::Theta { n })),
                host: Box::new(MatroidDocument::Construction(Construction::Uniform {
                    rank: 2,
                    size: host_size,
                })),
                line_map: (1..=n).map(|i| (format!("w{i}"), format!("e{i}"))).collect(),
            }
        }
        "randomLinear" => Construction::RandomLinear {
            prime: usize_param(0, "prime")? as u32,
            rank: usize_param(1, "rank")?,
            size: usize_param(2, "size")?,
            seed,
        },
        other => {
            return Err(Error::Parse(format!("gen: unknown family {other:?}")));
        }
    };
    Ok(MatroidDocument::Construction(construction))
}

fn run_inner(cli: &Cli) -> Result<i32, Error> {
    let max = cli.max_elements;
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Analyze { file } => {
            let m = load(file, max)?;
            let report = analyze(&m)?;
            if !cli.quiet {
                let text = if json { emit_json(&report) } else { emit_text(&report) };
                print!("{text}");
            }
            Ok(0)
        }
        Command::Elastic { file } => {
            let m = load(file, max)?;
            let rep = elasticity_report(&m)?;
            let view = io::elasticity_json(&m, &rep);
            if !cli.quiet {
                if json {
                    print!("{}", emit_json(&view));
                } else {
                    println!("elastic elements: {}", view.num_elastic);
                    for s in &view.elements {
                        println!(
                            "  {}: deletable={} contractible={}",
                            s.element, s.deletable, s.contractible
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Separations { file, vertical, cyclic, maximal_only } => {
            let m = load(file, max)?;
            let mut triples = Vec::new();
            if !cyclic {
                triples.extend(vertical_3_separations_marked(&m)?);
            }
            if !vertical {
                triples.extend(cyclic_3_separations_marked(&m)?);
            }
            if *maximal_only {
                triples.retain(|t| t.y_maximal);
            }
            if !cli.quiet {
                let views: Vec<_> = triples.iter().map(|t| triple_json(&m, t)).collect();
                if json {
                    print!("{}", emit_json(&views));
                } else {
                    for (t, v) in triples.iter().zip(&views) {
                        println!(
                            "{:?} X={{{}}} e={} Y={{{}}}{}",
                            t.kind,
                            v.x.join(","),
                            v.e,
                            v.y.join(","),
                            if t.y_maximal { " (Y+e maximal)" } else { "" }
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Fans { file } => {
            let m = load(file, max)?;
            let views: Vec<_> = fans(&m).iter().map(|f| fan_json(&m, f)).collect();
            if !cli.quiet {
                if json {
                    print!("{}", emit_json(&views));
                } else {
                    for f in &views {
                        println!("({})", f.order.join(","));
                    }
                }
            }
            Ok(0)
        }
        Command::Theta { file } => {
            let m = load(file, max)?;
            let views: Vec<_> = theta_separators(&m)?
                .iter()
                .map(|w| theta_witness_json(&m, w))
                .collect();
            if !cli.quiet {
                if json {
                    print!("{}", emit_json(&views));
                } else {
                    for w in &views {
                        println!(
                            "{} {} w={{{}}} z={{{}}}",
                            w.side,
                            w.kind,
                            w.w.join(","),
                            w.z.join(",")
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { check, file } => {
            let m = load(file, max)?;
            let outcome = match check {
                Check::Bixby => verify_bixby(&m)?,
                Check::Theorem1 => verify_theorem1(&m)?.outcome,
                Check::Corollary2 => verify_corollary2(&m)?,
                Check::Crosscheck => oracle_crosscheck(&m)?,
            };
            let passed = outcome.passed();
            if !cli.quiet || !passed {
                if json {
                    print!("{}", emit_json(&io::verification_json(&outcome)));
                } else {
                    println!(
                        "{}: {} ({} instances{})",
                        outcome.claim,
                        if !outcome.applicable {
                            "not applicable"
                        } else if passed {
                            "pass"
                        } else {
                            "FAIL"
                        },
                        outcome.instances,
                        if outcome.notes.is_empty() {
                            String::new()
                        } else {
                            format!("; {}", outcome.notes.join("; "))
                        }
                    );
                    for v in &outcome.violations {
                        println!("  violation: {v}");
                    }
                }
            }
            Ok(if passed { 0 } else { 1 })
        }
        Command::Gen { family, params, output } => {
            let doc = gen_document(family, params, cli.seed)?;
            // validate eagerly so a bad generation fails here, not downstream
            io::build(&doc, max)?;
            let mut text = document_to_string(&doc);
            text.push('\n');
            write_output(output.as_deref(), &text)?;
            Ok(0)
        }
    }
}

/// Parses `argv` and runs the tool, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses exit code 2 for usage errors and 0 for --help/--version
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run_inner(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
