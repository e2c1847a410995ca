//! `loopforge` command-line front end.
//!
//! Exit codes: 0 success, 1 a property or verifier failed, 2 bad input or
//! a precondition error, 3 a group or enumeration cap was exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use loopforge::bruck::{glauberman_folder, glauberman_report, TauAut};
use loopforge::corpus::corpus_write;
use loopforge::enumerate::{enumerate_loops, EnumerationTask, Mode, Predicate};
use loopforge::structure::{check_properties, corollary4_check, theorem1_verify, theorem2_verify, Property};
use loopforge::{envelope, CayleyLoop, Error, FiniteGroup, DEFAULT_CAP};

#[derive(Parser, Debug)]
#[command(
    name = "loopforge",
    version,
    about = "Finite loops, loop folders and Bruck loop structure"
)]
struct Cli {
    /// Largest group order that may be enumerated.
    #[arg(long, env = "LOOPFORGE_CAP", default_value_t = DEFAULT_CAP, global = true)]
    cap: u128,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "c4")]
    C4,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check loop properties.
    Check {
        file: PathBuf,
        /// Comma-separated subset of loop,bol,aip,bruck,ar, or "all".
        #[arg(long, default_value = "all")]
        props: String,
    },
    /// Compute the envelope folder.
    Envelope {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decomposition report of a Bruck loop.
    Decompose { file: PathBuf },
    /// Run a verifier; exit 1 if it fails.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
    /// Glauberman folder of an odd-order group and an involutory automorphism.
    Glauberman {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        aut: PathBuf,
    },
    /// Enumerate loops of one order and write a corpus.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "loop")]
        class: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = EnumMode::Parallel)]
        mode: EnumMode,
        /// Branching cells fixed before work is split across threads.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Override the default order bound.
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumMode {
    Reference,
    Fast,
    Parallel,
}

/// A report and whether it counts as success.
struct Outcome {
    report: Value,
    ok: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::BoundExceeded { .. } => 3,
        _ => 2,
    }
}

fn read_loop(path: &Path) -> loopforge::Result<CayleyLoop> {
    CayleyLoop::parse(&fs::read_to_string(path)?)
}

fn read_json(path: &Path) -> loopforge::Result<Value> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn parse_props(s: &str) -> loopforge::Result<Vec<Property>> {
    if s == "all" {
        return Ok(Property::ALL.to_vec());
    }
    s.split(',').map(|p| p.trim().parse()).collect()
}

fn run(cli: &Cli) -> loopforge::Result<Option<Outcome>> {
    let cap = cli.cap;
    let out = match &cli.command {
        Command::Check { file, props } => {
            let x = read_loop(file)?;
            let r = check_properties(&x, &parse_props(props)?);
            Outcome {
                ok: r.all_hold(),
                report: r.to_json(),
            }
        }
        Command::Envelope { file, out } => {
            let env = envelope(&read_loop(file)?, cap)?;
            let report = env.folder.to_json();
            if let Some(path) = out {
                fs::write(path, render(&report, Format::Json))?;
                return Ok(None);
            }
            Outcome { report, ok: true }
        }
        Command::Decompose { file } => {
            let r = theorem1_verify(&read_loop(file)?, cap)?;
            Outcome {
                ok: true,
                report: r.to_json(),
            }
        }
        Command::Verify { file, theorem } => {
            let x = read_loop(file)?;
            match theorem {
                Theorem::One => {
                    let r = theorem1_verify(&x, cap)?;
                    Outcome {
                        ok: r.passed(),
                        report: r.to_json(),
                    }
                }
                Theorem::Two => {
                    let r = theorem2_verify(&x)?;
                    Outcome {
                        ok: r.passed(),
                        report: r.to_json(),
                    }
                }
                Theorem::C4 => {
                    let r = corollary4_check(&x, cap)?;
                    Outcome {
                        ok: r.passed(),
                        report: r.to_json(),
                    }
                }
            }
        }
        Command::Glauberman { group, aut } => {
            let gr = Arc::new(FiniteGroup::from_json(&read_json(group)?)?);
            let tau = TauAut::from_json(&read_json(aut)?, &gr)?;
            if tau.carrier.len() != gr.order() {
                return Err(Error::NotInvolutory);
            }
            let g = glauberman_folder(gr, &tau.image)?;
            let ok = glauberman_report(&g, cap)?.passed();
            Outcome {
                report: g.to_json(cap)?,
                ok,
            }
        }
        Command::Enumerate {
            order,
            class,
            out,
            mode,
            depth,
            bound,
        } => {
            let predicate: Predicate = class.parse()?;
            let mode = match mode {
                EnumMode::Reference => Mode::Reference,
                EnumMode::Fast => Mode::Fast,
                EnumMode::Parallel => Mode::Parallel { depth: *depth },
            };
            let mut task = EnumerationTask::new(*order, predicate).with_mode(mode);
            if let Some(b) = bound {
                task = task.with_bound(*b);
            }
            let loops = enumerate_loops(&task)?;
            let manifest = corpus_write(out, *order, predicate.name(), &loops)?;
            Outcome {
                report: serde_json::to_value(manifest)?,
                ok: true,
            }
        }
    };
    Ok(Some(out))
}

/// Pretty JSON, or an indented `key: value` rendering of the same tree.
fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("json") + "\n",
        Format::Text => {
            let mut s = String::new();
            render_text(v, 0, &mut s);
            s
        }
    }
}

fn is_scalar_tree(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn render_text(v: &Value, indent: usize, s: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_scalar_tree(x) {
                    s.push_str(&format!("{pad}{k}: {x}\n"));
                } else {
                    s.push_str(&format!("{pad}{k}:\n"));
                    render_text(x, indent + 1, s);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_scalar_tree(x) {
                    s.push_str(&format!("{pad}- {x}\n"));
                } else {
                    s.push_str(&format!("{pad}-\n"));
                    render_text(x, indent + 1, s);
                }
            }
        }
        _ => s.push_str(&format!("{pad}{v}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().ok();
    }
    if cli.cap == 0 {
        eprintln!("error: the group cap must be positive");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(o)) => {
            print!("{}", render(&o.report, cli.format));
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
