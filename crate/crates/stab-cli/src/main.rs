//! `stab`: analyze and compare stabilizer states from the command line.
//!
//! ```text
//! stab analyze FILE [--json] [--max-weight W]
//! stab check-lc FILE1 FILE2 [--certificate]
//! stab gen ghz N | stab gen graph FILE | stab gen random N --seed S
//! stab oracle verify FILE
//! ```
//!
//! Global flags `--max-enum-qubits N` and `--max-lc-qubits N` override the
//! corresponding environment values. Exit codes: 0 success, 1 domain
//! error, 2 usage error.

use std::path::Path;
use std::process::ExitCode;

use stabkit::graphstate::graph_state;
use stabkit::report::{analyze, parse_generator_file, parse_graph_file, render_text};
use stabkit::{ghz_stabilizer, lc_equivalent};

const USAGE: &str = "usage:
  stab analyze FILE [--json] [--max-weight W]
  stab check-lc FILE1 FILE2 [--certificate]
  stab gen ghz N
  stab gen graph FILE
  stab gen random N --seed S
  stab oracle verify FILE

global flags:
  --max-enum-qubits N   cap for group enumeration (env STAB_MAX_ENUM_QUBITS, default 20)
  --max-lc-qubits N     cap for the exhaustive LC search (env STAB_MAX_LC_QUBITS, default 8)";

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<stabkit::Error> for CliError {
    fn from(e: stabkit::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(mut args: Vec<String>) -> Result<(), CliError> {
    apply_global_cap_flags(&mut args)?;
    let mut it = args.into_iter();
    let Some(command) = it.next() else {
        return Err(CliError::Usage("missing command".to_string()));
    };
    let rest: Vec<String> = it.collect();
    match command.as_str() {
        "analyze" => cmd_analyze(rest),
        "check-lc" => cmd_check_lc(rest),
        "gen" => cmd_gen(rest),
        "oracle" => cmd_oracle(rest),
        other => Err(CliError::Usage(format!("unknown command '{other}'"))),
    }
}

/// Flag precedence is flag > environment > default; a flag simply
/// overrides the environment value for this process.
fn apply_global_cap_flags(args: &mut Vec<String>) -> Result<(), CliError> {
    for (flag, var) in [
        ("--max-enum-qubits", stabkit::config::ENUM_CAP_ENV),
        ("--max-lc-qubits", stabkit::config::LC_CAP_ENV),
    ] {
        while let Some(pos) = args.iter().position(|a| a == flag) {
            if pos + 1 >= args.len() {
                return Err(CliError::Usage(format!("{flag} needs a value")));
            }
            let value = args.remove(pos + 1);
            args.remove(pos);
            value
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("{flag}: invalid value '{value}'")))?;
            std::env::set_var(var, value);
        }
    }
    Ok(())
}

fn cmd_analyze(args: Vec<String>) -> Result<(), CliError> {
    let mut file = None;
    let mut json = false;
    let mut max_weight = None;
    let mut it = args.into_iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--json" => json = true,
            "--max-weight" => {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::Usage("--max-weight needs a value".to_string()))?;
                max_weight = Some(value.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!("--max-weight: invalid value '{value}'"))
                })?);
            }
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag '{other}'")))
            }
            other => {
                if file.replace(other.to_string()).is_some() {
                    return Err(CliError::Usage("analyze takes one file".to_string()));
                }
            }
        }
    }
    let file = file.ok_or_else(|| CliError::Usage("analyze needs a file".to_string()))?;
    let group = parse_generator_file(Path::new(&file))?;
    let report = analyze(&group, max_weight)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_text(&report));
    }
    Ok(())
}

fn cmd_check_lc(args: Vec<String>) -> Result<(), CliError> {
    let mut files = Vec::new();
    let mut certificate = false;
    for arg in args {
        match arg.as_str() {
            "--certificate" => certificate = true,
            other if other.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown flag '{other}'")))
            }
            other => files.push(other.to_string()),
        }
    }
    let [a, b]: [String; 2] = files
        .try_into()
        .map_err(|_| CliError::Usage("check-lc takes exactly two files".to_string()))?;
    let g1 = parse_generator_file(Path::new(&a))?;
    let g2 = parse_generator_file(Path::new(&b))?;
    match lc_equivalent(&g1, &g2)? {
        Some(op) => {
            println!("LC-EQUIVALENT (n={})", g1.num_qubits());
            if certificate {
                println!("{op}");
            }
        }
        None => println!("NOT LC-EQUIVALENT (exhaustive at n={})", g1.num_qubits()),
    }
    Ok(())
}

fn cmd_gen(args: Vec<String>) -> Result<(), CliError> {
    let mut it = args.into_iter();
    let Some(kind) = it.next() else {
        return Err(CliError::Usage("gen needs a subcommand".to_string()));
    };
    let group = match kind.as_str() {
        "ghz" => {
            let n = parse_count(it.next(), "gen ghz N")?;
            ghz_stabilizer(n)?
        }
        "graph" => {
            let file = it
                .next()
                .ok_or_else(|| CliError::Usage("gen graph needs a file".to_string()))?;
            graph_state(&parse_graph_file(Path::new(&file))?)
        }
        "random" => {
            let n = parse_count(it.next(), "gen random N --seed S")?;
            let mut seed = None;
            while let Some(arg) = it.next() {
                match arg.as_str() {
                    "--seed" => {
                        let value = it
                            .next()
                            .ok_or_else(|| CliError::Usage("--seed needs a value".to_string()))?;
                        seed = Some(value.parse::<u64>().map_err(|_| {
                            CliError::Usage(format!("--seed: invalid value '{value}'"))
                        })?);
                    }
                    other => return Err(CliError::Usage(format!("unknown argument '{other}'"))),
                }
            }
            let seed =
                seed.ok_or_else(|| CliError::Usage("gen random needs --seed S".to_string()))?;
            stabkit::random::random_stabilizer_seeded(n, seed)
        }
        other => return Err(CliError::Usage(format!("unknown gen subcommand '{other}'"))),
    };
    for gen in group.generators() {
        println!("{gen}");
    }
    Ok(())
}

fn parse_count(arg: Option<String>, usage: &str) -> Result<usize, CliError> {
    let value = arg.ok_or_else(|| CliError::Usage(format!("usage: stab {usage}")))?;
    value
        .parse::<usize>()
        .map_err(|_| CliError::Usage(format!("invalid count '{value}'")))
}

fn cmd_oracle(args: Vec<String>) -> Result<(), CliError> {
    let mut it = args.into_iter();
    match (it.next().as_deref(), it.next(), it.next()) {
        (Some("verify"), Some(file), None) => cmd_oracle_verify(&file),
        _ => Err(CliError::Usage(
            "usage: stab oracle verify FILE".to_string(),
        )),
    }
}

/// Dense verification of the projector expansion: the normalized element
/// sum must be a Hermitian, idempotent, trace-1 projector fixed by every
/// generator.
fn cmd_oracle_verify(file: &str) -> Result<(), CliError> {
    const TOL: f64 = 1e-10;
    let group = parse_generator_file(Path::new(file))?;
    let rho = group.dense_projector()?;
    let mut all_ok = true;
    let mut check = |name: &str, ok: bool| {
        println!("{name}: {}", if ok { "ok" } else { "FAIL" });
        all_ok &= ok;
    };
    check("hermitian", rho.is_hermitian(TOL));
    check("idempotent", rho.mul(&rho).approx_eq(&rho, TOL));
    check(
        "trace 1",
        (rho.trace() - stabkit::dense::Complex64::new(1.0, 0.0)).norm() <= TOL,
    );
    for (i, gen) in group.generators().iter().enumerate() {
        let m = gen.to_dense()?;
        check(
            &format!("generator {} fixes the state", i + 1),
            m.mul(&rho).approx_eq(&rho, TOL),
        );
    }
    if all_ok {
        println!("oracle checks passed (n={})", group.num_qubits());
        Ok(())
    } else {
        Err(CliError::Domain("oracle checks failed".to_string()))
    }
}
