//! `icrl`: proof search, proof checking, oracles and finite models from the
//! command line.
//!
//! Exit codes: 0 for an affirmative answer (derivable, valid, countermodel
//! found, suite passed), 1 for a negative one, 2 for usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use icrl::ablg_oracle::{ablg_valid_sequent, refute_integer};
use icrl::corpus::{run_corpus, CorpusSpec};
use icrl::finmod::{enumerate, refute, validate, AlgebraClass, FiniteAlgebra};
use icrl::lg_oracle::lg_valid_sequent;
use icrl::prover::{check_proof, eliminate_cuts, Formulation, Proof, Prover, SearchOutcome};
use icrl::terms::{parse_inequation, parse_sequent, Sequent, Theory};
use serde_json::{json, Value};

const GRAMMAR: &str = "\
Terms: variables [a-z][a-z0-9_]*, constants e and f, and
  ~s  = s \\ e        -s  (negation, s \\ f)
  s * t  fuse        s \\ t  left residual     s / t  right residual
  s -> t  residual in commutative theories
  s /\\ t  meet       s \\/ t  join             s + t  = -s -> t
Binding, tightest first: ~ -, *, \\ /, ->, /\\, \\/, +. Chained residuals need
parentheses. Sequents: `t1, t2 => u`; both sides may be empty in ca, which
also allows several succedent terms.

Theories: rl, irl, icrl, cicrl, sirm, pbci, sircom, bci, ca.
Algebra classes: rl, integral, cintegral, sirmonoid, csirmonoid, casari.";

#[derive(Parser)]
#[command(name = "icrl", version, about, after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleChoice {
    Lg,
    Ablg,
}

#[derive(Subcommand)]
enum Command {
    /// Search for a cut-free derivation of a sequent.
    Prove {
        #[arg(long, default_value = "icrl")]
        theory: Theory,
        /// Use explicit weakening steps instead of generalised axioms.
        #[arg(long)]
        explicit: bool,
        /// Write the derivation found to this file as JSON.
        #[arg(long)]
        emit_proof: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        sequent: String,
    },
    /// Check a proof file against a calculus.
    Check {
        #[arg(long, default_value = "icrl")]
        theory: Theory,
        /// Reject proofs that use cut.
        #[arg(long)]
        no_cut: bool,
        proof: PathBuf,
    },
    /// Remove every cut from a proof file and print the result as JSON.
    Elimcut {
        #[arg(long, default_value = "icrl")]
        theory: Theory,
        /// Write the cut-free proof here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        proof: PathBuf,
    },
    /// Decide `s <= t` (or `s => t`) in all ℓ-groups or all abelian ℓ-groups.
    Oracle {
        #[arg(value_enum)]
        oracle: OracleChoice,
        inequation: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Finite algebras: validation, countermodels and enumeration.
    Finmod {
        #[command(subcommand)]
        command: FinmodCommand,
    },
    /// Run a corpus of cross-checking suites and print the report as JSON.
    CorpusRun {
        spec: PathBuf,
        /// Override the corpus seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum FinmodCommand {
    /// Check an algebra file against the laws of its signature.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search for a finite countermodel of a sequent.
    Refute {
        #[arg(long, default_value = "integral")]
        class: AlgebraClass,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        sequent: String,
    },
    /// List the algebras of a class of a given size, up to isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "rl")]
        class: AlgebraClass,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// What a command prints, and whether its answer is affirmative.
struct Answer {
    yes: bool,
    output: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(a) => {
            print!("{}", a.output);
            ExitCode::from(if a.yes { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Answer, CliError> {
    match command {
        Command::Prove {
            theory,
            explicit,
            emit_proof,
            format,
            sequent,
        } => prove(theory, explicit, emit_proof.as_deref(), format, &sequent),
        Command::Check {
            theory,
            no_cut,
            proof,
        } => {
            let p = Proof::from_json(&read(&proof)?, theory).map_err(input)?;
            Ok(match check_proof(&p, theory, !no_cut) {
                Ok(()) => Answer {
                    yes: true,
                    output: format!("VALID {}\n", p.conclusion),
                },
                Err(failure) => Answer {
                    yes: false,
                    output: format!("INVALID {failure}\n"),
                },
            })
        }
        Command::Elimcut {
            theory,
            output,
            proof,
        } => {
            let p = Proof::from_json(&read(&proof)?, theory).map_err(input)?;
            let q = eliminate_cuts(&p, theory).map_err(input)?;
            let text = format!("{}\n", q.to_json());
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    Ok(Answer {
                        yes: true,
                        output: String::new(),
                    })
                }
                None => Ok(Answer {
                    yes: true,
                    output: text,
                }),
            }
        }
        Command::Oracle {
            oracle,
            inequation,
            format,
        } => oracle_cmd(oracle, &inequation, format),
        Command::Finmod { command } => finmod(command),
        Command::CorpusRun { spec, seed } => {
            let mut spec = CorpusSpec::from_json(&read(&spec)?).map_err(input)?;
            if let Some(seed) = seed {
                spec.seed = seed;
            }
            let report = run_corpus(&spec);
            let text = serde_json::to_string_pretty(&report).map_err(input)?;
            Ok(Answer {
                yes: report.passed(),
                output: format!("{text}\n"),
            })
        }
    }
}

fn prove(
    theory: Theory,
    explicit: bool,
    emit: Option<&Path>,
    format: Format,
    text: &str,
) -> Result<Answer, CliError> {
    let s = parse_sequent(text, theory).map_err(input)?;
    let formulation = if explicit {
        Formulation::ExplicitWeakening
    } else {
        Formulation::GeneralizedAxioms
    };
    let outcome = Prover::with_formulation(theory, formulation)
        .search(&s)
        .map_err(input)?;
    if let (Some(path), SearchOutcome::Derivable(p)) = (emit, &outcome) {
        write(path, &format!("{}\n", p.to_json()))?;
    }
    let output = match (&outcome, format) {
        (SearchOutcome::Derivable(p), Format::Text) => {
            let mut out = format!("DERIVABLE in {theory}\n");
            render(p, 0, &mut out);
            out
        }
        (SearchOutcome::NotDerivable(stats), Format::Text) => format!(
            "NOT DERIVABLE in {theory} (goals expanded: {}, depth: {})\n",
            stats.nodes, stats.max_depth
        ),
        (SearchOutcome::Derivable(p), Format::Json) => json_line(json!({
            "theory": theory.name(),
            "sequent": s.to_string(),
            "derivable": true,
            "proof": serde_json::from_str::<Value>(&p.to_json()).map_err(input)?,
        })),
        (SearchOutcome::NotDerivable(stats), Format::Json) => json_line(json!({
            "theory": theory.name(),
            "sequent": s.to_string(),
            "derivable": false,
            "nodes": stats.nodes,
            "max_depth": stats.max_depth,
        })),
    };
    Ok(Answer {
        yes: outcome.is_derivable(),
        output,
    })
}

/// The proof as an indented tree, conclusion first.
fn render(p: &Proof, depth: usize, out: &mut String) {
    let _ = write!(
        out,
        "{:indent$}{}   [{}]",
        "",
        p.conclusion,
        p.rule,
        indent = 2 * depth
    );
    if let Some(c) = &p.certificate {
        let _ = write!(out, "  {} ⊨ {}", c.oracle, c.sequent);
    }
    out.push('\n');
    for q in &p.premises {
        render(q, depth + 1, out);
    }
}

fn json_line(v: Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("JSON values serialise")
    )
}

fn oracle_cmd(oracle: OracleChoice, text: &str, format: Format) -> Result<Answer, CliError> {
    let (lhs, rhs) = parse_inequation(text, None).map_err(input)?;
    let s = Sequent::single(vec![lhs.clone()], rhs.clone());
    let (name, valid) = match oracle {
        OracleChoice::Lg => ("LG", lg_valid_sequent(&s)),
        OracleChoice::Ablg => ("AbLG", ablg_valid_sequent(&s)),
    };
    let valid = valid.map_err(input)?;
    // ℤ is an abelian ℓ-group, so its counterexamples refute both oracles.
    let witness = if valid {
        None
    } else {
        refute_integer(&lhs, &rhs)
    };
    let output = match format {
        Format::Text => {
            let mut out = format!(
                "{} in {name}: {lhs} <= {rhs}\n",
                if valid { "VALID" } else { "INVALID" }
            );
            match &witness {
                Some(v) => {
                    let parts: Vec<String> = v.iter().map(|(x, n)| format!("{x}={n}")).collect();
                    let _ = writeln!(out, "refuted in the integers at {}", parts.join(", "));
                }
                None if !valid => {
                    out.push_str("no integer counterexample; a refuting ℓ-group is non-abelian\n")
                }
                None => {}
            }
            out
        }
        Format::Json => json_line(json!({
            "oracle": name,
            "inequation": format!("{lhs} <= {rhs}"),
            "valid": valid,
            "integer_refutation": witness.map(|v| v.iter().map(|(x, n)| (x.to_string(), json!(n))).collect::<serde_json::Map<_, _>>()),
        })),
    };
    Ok(Answer { yes: valid, output })
}

/// The calculus whose language matches a class, for parsing sequents.
fn language_of(class: AlgebraClass) -> Theory {
    match class {
        AlgebraClass::Rl | AlgebraClass::Integral => Theory::Rl,
        AlgebraClass::CommutativeIntegral => Theory::Cicrl,
        AlgebraClass::Sirmonoid => Theory::Sirm,
        AlgebraClass::CommutativeSirmonoid => Theory::Sircom,
        AlgebraClass::Casari => Theory::Ca,
    }
}

fn finmod(command: FinmodCommand) -> Result<Answer, CliError> {
    match command {
        FinmodCommand::Validate { file, format } => {
            let a = FiniteAlgebra::from_json(&read(&file)?).map_err(input)?;
            let sig = a.signature();
            let violations = validate(&a, sig);
            let output = match format {
                Format::Text if violations.is_empty() => {
                    format!("VALID {sig:?} algebra of size {}\n", a.size)
                }
                Format::Text => violations
                    .iter()
                    .map(|v| format!("VIOLATION {v}\n"))
                    .collect(),
                Format::Json => json_line(json!({
                    "signature": format!("{sig:?}"),
                    "size": a.size,
                    "violations": violations.iter().map(|v| json!({"law": v.law, "witness": v.witness})).collect::<Vec<_>>(),
                })),
            };
            Ok(Answer {
                yes: violations.is_empty(),
                output,
            })
        }
        FinmodCommand::Refute {
            class,
            max_size,
            format,
            sequent,
        } => {
            let s = parse_sequent(&sequent, language_of(class)).map_err(input)?;
            let found = refute(&s, max_size, class).map_err(input)?;
            let output = match (&found, format) {
                (Some(c), Format::Text) => {
                    let parts: Vec<String> = c
                        .valuation
                        .iter()
                        .map(|(x, n)| format!("{x}={n}"))
                        .collect();
                    format!(
                        "REFUTED in class {class} at {}\n{}\n",
                        parts.join(", "),
                        c.algebra.to_json()
                    )
                }
                (None, Format::Text) => {
                    format!("NO COUNTERMODEL in class {class} up to size {max_size}\n")
                }
                (found, Format::Json) => json_line(json!({
                    "sequent": s.to_string(),
                    "class": class.name(),
                    "max_size": max_size,
                    "countermodel": found.as_ref().map(|c| json!({
                        "algebra": serde_json::from_str::<Value>(&c.algebra.to_json()).expect("algebra JSON"),
                        "valuation": c.valuation.iter().map(|(x, n)| (x.to_string(), json!(n))).collect::<serde_json::Map<_, _>>(),
                    })),
                })),
            };
            Ok(Answer {
                yes: found.is_some(),
                output,
            })
        }
        FinmodCommand::Enumerate {
            size,
            class,
            format,
        } => {
            let all = enumerate(size, class).map_err(input)?;
            let output = match format {
                Format::Text => all.iter().map(|a| format!("{}\n", a.to_json())).collect(),
                Format::Json => {
                    let values: Vec<Value> = all
                        .iter()
                        .map(|a| serde_json::from_str(&a.to_json()).expect("algebra JSON"))
                        .collect();
                    json_line(
                        json!({"class": class.name(), "size": size, "count": all.len(), "algebras": values}),
                    )
                }
            };
            Ok(Answer { yes: true, output })
        }
    }
}
