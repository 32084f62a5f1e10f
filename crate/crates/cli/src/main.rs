//! Command-line front end for the column box-adding operator toolkit.
//!
//! Every subcommand prints human-readable text by default and a single
//! compact JSON document with `--json`. Exit codes: 0 on success, 1 when a
//! check or comparison comes out negative, 2 on malformed input, 3 when a
//! search or enumeration exceeds its budget.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use schur_core::rewriting::derive::{derive_structured_with, DeriveError};
use schur_core::rewriting::{Derivation, Family, RuleSet};
use schur_core::schur_action::{apply_word, apply_word_closed_form};
use schur_core::tableaux::rsk;
use schur_core::verify::{check_theorem, enumerate_classes, VerifyOptions};
use schur_core::{Partition, Word};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "schur",
    version,
    about = "Words of column box-adding operators: act, compare, derive, verify."
)]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed recorded in verification reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on words explored by searches and on enumeration sizes.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: usize,
    /// Worker threads for verification (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word of operators to a partition.
    Act {
        /// Word over positive letters, e.g. 232 or "11 2 3".
        word: String,
        /// Partition, e.g. "(3,1)" or "()".
        partition: String,
    },
    /// Print a word's weight and alpha vectors.
    Stats {
        word: String,
    },
    /// Decide whether two words act identically, with evidence either way.
    Equiv {
        x: String,
        y: String,
        /// Print derivations longer than 50 steps in full.
        #[arg(long)]
        full: bool,
        /// Exit with status 1 when the words are inequivalent.
        #[arg(long)]
        exit_status: bool,
    },
    /// Row-insert a word and print its tableau pair.
    Rsk {
        word: String,
    },
    /// Build an explicit rewrite chain between two equivalent words.
    Derive {
        x: String,
        y: String,
    },
    /// Check that classes match rewrite components for every length up to L.
    Verify {
        /// Alphabet size.
        #[arg(value_name = "N")]
        letters: usize,
        /// Longest word length to check.
        #[arg(value_name = "L")]
        length: usize,
        /// Drop a rule family (commute, knuth_a, knuth_b, braid4); repeatable.
        #[arg(long, value_name = "FAMILY")]
        without: Vec<String>,
    },
    /// List the (weight, alpha) classes of words of length exactly L.
    Classes {
        /// Alphabet size.
        #[arg(value_name = "N")]
        letters: usize,
        /// Word length.
        #[arg(value_name = "L")]
        length: usize,
    },
}

enum Failure {
    Input(String),
    Resource(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Act { word, partition } => cmd_act(&cli, word, partition),
        Command::Stats { word } => cmd_stats(&cli, word),
        Command::Equiv { x, y, full, exit_status } => cmd_equiv(&cli, x, y, *full, *exit_status),
        Command::Rsk { word } => cmd_rsk(&cli, word),
        Command::Derive { x, y } => cmd_derive(&cli, x, y),
        Command::Verify { letters, length, without } => {
            cmd_verify(&cli, *letters, *length, without)
        }
        Command::Classes { letters, length } => cmd_classes(&cli, *letters, *length),
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(|e| Failure::Input(format!("{e}")))
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(|e| Failure::Input(format!("{e}")))
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}

fn cmd_act(cli: &Cli, word: &str, partition: &str) -> Result<ExitCode, Failure> {
    let word = parse_word(word)?;
    let partition = parse_partition(partition)?;
    let result = apply_word_closed_form(&word, &partition);
    if cli.json {
        emit(json!({ "word": word, "partition": partition, "result": result }));
    } else {
        println!("{result}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_stats(cli: &Cli, word: &str) -> Result<ExitCode, Failure> {
    let word = parse_word(word)?;
    let (weight, alpha) = (word.weight(), word.alpha());
    if cli.json {
        emit(json!({ "word": word, "weight": weight, "alpha": alpha }));
    } else {
        println!("w={weight} alpha={alpha}");
    }
    Ok(ExitCode::SUCCESS)
}

fn derivation_between(
    cli: &Cli,
    x: &Word,
    y: &Word,
) -> Result<Result<Derivation, Partition>, Failure> {
    match derive_structured_with(x, y, cli.budget) {
        Ok(d) => Ok(Ok(d)),
        Err(DeriveError::NotEquivalent) => {
            let witness = schur_core::schur_action::witness_distinguishing_partition(x, y)
                .expect("inequivalent words have a distinguishing partition");
            Ok(Err(witness))
        }
        Err(e @ DeriveError::Budget { .. }) => Err(Failure::Resource(format!("{e}"))),
    }
}

fn print_derivation(d: &Derivation, full: bool) {
    println!("steps: {}", d.len());
    if !full && d.len() > 50 {
        println!("(pass --full to list more than 50 steps)");
        return;
    }
    let words = d.intermediates();
    println!("      {}", words[0]);
    for (index, step) in d.steps().iter().enumerate() {
        println!("{:>4}  {}  ->  {}", index + 1, step, words[index + 1]);
    }
}

fn cmd_equiv(
    cli: &Cli,
    x: &str,
    y: &str,
    full: bool,
    exit_status: bool,
) -> Result<ExitCode, Failure> {
    let x = parse_word(x)?;
    let y = parse_word(y)?;
    let evidence = derivation_between(cli, &x, &y)?;
    let equivalent = evidence.is_ok();
    if cli.json {
        let (derivation, witness) = match &evidence {
            Ok(d) => (Some(d), None),
            Err(lambda) => (None, Some(lambda)),
        };
        emit(json!({
            "x": x,
            "y": y,
            "equivalent": equivalent,
            "witness": witness,
            "derivation": derivation,
        }));
    } else {
        match &evidence {
            Ok(d) => {
                println!("equivalent");
                print_derivation(d, full);
            }
            Err(lambda) => {
                println!("inequivalent");
                println!("witness: {lambda}");
                println!("{x} sends it to {}", apply_word(&x, lambda));
                println!("{y} sends it to {}", apply_word(&y, lambda));
            }
        }
    }
    if !equivalent && exit_status {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rsk(cli: &Cli, word: &str) -> Result<ExitCode, Failure> {
    let word = parse_word(word)?;
    let pair = rsk(&word);
    if cli.json {
        emit(json!({ "word": word, "p": pair.p, "q": pair.q }));
    } else {
        println!("P:");
        println!("{}", pair.p);
        println!("Q:");
        println!("{}", pair.q);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_derive(cli: &Cli, x: &str, y: &str) -> Result<ExitCode, Failure> {
    let x = parse_word(x)?;
    let y = parse_word(y)?;
    match derivation_between(cli, &x, &y)? {
        Ok(d) => {
            if cli.json {
                emit(serde_json::to_value(&d).expect("derivations serialize"));
            } else {
                print_derivation(&d, true);
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(witness) => {
            eprintln!("error: the words are not equivalent; {witness} distinguishes them");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(
    cli: &Cli,
    letters: usize,
    length: usize,
    without: &[String],
) -> Result<ExitCode, Failure> {
    if letters < 1 {
        return Err(Failure::Input("the alphabet must have at least one letter".into()));
    }
    let mut rules = RuleSet::all();
    for name in without {
        let family: Family = name.parse().map_err(Failure::Input)?;
        rules = rules.without(family);
    }
    let options = VerifyOptions {
        rules,
        max_enumeration: cli.budget,
        threads: cli.threads,
        seed: cli.seed,
    };
    let mut reports = Vec::with_capacity(length);
    for l in 1..=length {
        let report = check_theorem(letters, l, &options)
            .map_err(|e| Failure::Resource(format!("{e}")))?;
        reports.push(report);
    }
    let ok = reports.iter().all(|r| r.ok());
    if cli.json {
        emit(json!({ "reports": reports, "ok": ok }));
    } else {
        for report in &reports {
            println!(
                "n={} l={} classes={} components={} {}",
                report.letters,
                report.length,
                report.classes,
                report.components,
                if report.ok() { "ok" } else { "MISMATCH" }
            );
            for pair in &report.mismatches {
                let kind = match pair.kind {
                    schur_core::verify::MismatchKind::SplitClass => "split class",
                    schur_core::verify::MismatchKind::MergedClasses => "merged classes",
                };
                println!("  {kind}: {} / {}", pair.x, pair.y);
            }
        }
        println!("overall: {}", if ok { "ok" } else { "mismatch" });
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_classes(cli: &Cli, letters: usize, length: usize) -> Result<ExitCode, Failure> {
    if letters < 1 {
        return Err(Failure::Input("the alphabet must have at least one letter".into()));
    }
    let classes = enumerate_classes(letters, length, cli.budget)
        .map_err(|e| Failure::Resource(format!("{e}")))?;
    if cli.json {
        let entries: Vec<serde_json::Value> = classes
            .iter()
            .map(|((weight, alpha), members)| {
                json!({
                    "weight": weight,
                    "alpha": alpha,
                    "size": members.len(),
                    "representative": members[0],
                })
            })
            .collect();
        emit(json!({
            "n": letters,
            "l": length,
            "count": classes.len(),
            "classes": entries,
        }));
    } else {
        println!("n={letters} l={length} classes={}", classes.len());
        for ((weight, alpha), members) in &classes {
            println!("w={weight} alpha={alpha} size={} rep={}", members.len(), members[0]);
        }
    }
    Ok(ExitCode::SUCCESS)
}
