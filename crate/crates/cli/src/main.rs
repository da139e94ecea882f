//! `implica`: batch front end for the implication-algebra workbench.

mod commands;
mod formats;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use implica_core::{ClassId, FilterKind, Mode, Profile};

fn help(sections: &[&str]) -> String {
    sections.join("\n\n")
}

#[derive(Parser, Debug)]
#[command(name = "implica", version, about = "Finite-model workbench for implication algebras and semigroups")]
#[command(after_help = help(&[formats::EXIT]))]
pub struct Cli {
    /// Output style: full report or only the verdict token.
    #[arg(long, value_enum, default_value_t = Format::Full, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Full,
    Terse,
}

#[derive(Args, Debug)]
pub struct AlgArg {
    /// Algebra file.
    pub alg: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every axiom of a class by exhaustive instantiation.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    Check {
        #[command(flatten)]
        alg: AlgArg,
        /// ia, positive-ia, isg, imonoid or bsg.
        #[arg(long)]
        class: ClassId,
    },
    /// Print the derived order and join of an implication algebra.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    Order {
        #[command(flatten)]
        alg: AlgArg,
    },
    /// Compute a term-defined reduct and print it as an algebra file.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    Reduct {
        #[command(flatten)]
        alg: AlgArg,
        /// Target class.
        #[arg(long)]
        to: ClassId,
    },
    /// List the implicative filters of one kind.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    Filters {
        #[command(flatten)]
        alg: AlgArg,
        /// all, proper, prime or irreducible.
        #[arg(long, default_value = "all")]
        kind: FilterKind,
    },
    /// Least filter containing a filter and an element.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    FilterGen {
        #[command(flatten)]
        alg: AlgArg,
        /// Comma-separated element names.
        #[arg(long)]
        filter: String,
        #[arg(long)]
        element: String,
    },
    /// First prime filter containing a filter and omitting an element.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    PrimeExtend {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        filter: String,
        #[arg(long)]
        avoid: String,
    },
    /// Prime filter over a filter holding one element and not another.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    PrimeDiscriminate {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        filter: String,
        #[arg(long)]
        include: String,
        #[arg(long)]
        exclude: String,
    },
    /// Set representation over the prime filters.
    #[command(after_help = help(&[formats::ALGEBRA, formats::EXIT]))]
    Stone {
        #[command(flatten)]
        alg: AlgArg,
        /// Re-check the representation laws and report pass or fail.
        #[arg(long)]
        verify: bool,
    },
    /// Verify a relational representation.
    #[command(after_help = help(&[formats::ALGEBRA, formats::REPRESENTATION, formats::EXIT]))]
    VerifyRep {
        #[command(flatten)]
        alg: AlgArg,
        /// Representation file.
        rep: PathBuf,
    },
    /// Collapse an absolute representation by the image of the identity.
    #[command(after_help = help(&[formats::ALGEBRA, formats::REPRESENTATION, formats::EXIT]))]
    QuotientIdentity {
        #[command(flatten)]
        alg: AlgArg,
        rep: PathBuf,
    },
    /// Rebuild a representation so that the bottom maps to the empty relation.
    #[command(after_help = help(&[formats::ALGEBRA, formats::REPRESENTATION, formats::EXIT]))]
    EmptyZero {
        #[command(flatten)]
        alg: AlgArg,
        rep: PathBuf,
    },
    /// Test whether a relation is a weakening relation over a poset.
    #[command(after_help = help(&[formats::POSET, formats::PAIRS, formats::EXIT]))]
    WeakeningCheck {
        /// Poset file.
        poset: PathBuf,
        #[arg(long)]
        rel: String,
    },
    /// Implication between two weakening relations.
    #[command(after_help = help(&[formats::POSET, formats::PAIRS, formats::EXIT]))]
    WeakeningArrow {
        poset: PathBuf,
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
    },
    /// Bounded search for a relational representation.
    #[command(after_help = help(&[formats::ALGEBRA, formats::REPRESENTATION, formats::EXIT]))]
    SearchRep {
        #[command(flatten)]
        alg: AlgArg,
        /// Largest base size tried.
        #[arg(long)]
        max_base: usize,
        /// absolute or relative.
        #[arg(long)]
        mode: Mode,
        /// Comma list; defaults to arrow,compose when the algebra has compose.
        #[arg(long)]
        profile: Option<Profile>,
        /// Try only one top per point-permutation class.
        #[arg(long)]
        up_to_iso: bool,
        /// Abort after this many search nodes.
        #[arg(long)]
        node_limit: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli.command);
    match outcome {
        Ok(report) => {
            match cli.format {
                Format::Full => print!("{}", report.text),
                Format::Terse => println!("{}", report.verdict),
            }
            ExitCode::from(report.code)
        }
        Err(failure) => {
            if cli.format == Format::Terse {
                println!("{}", failure.token());
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
