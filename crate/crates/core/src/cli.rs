//! Batch command-line front end.
//!
//! Data goes to files or standard output, diagnostics to standard error.
//! Exit codes: 0 success, 1 bad input data, 2 resource or configuration error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::evaluator::{
    evaluate, normalization_precision, stats, EvalReport, MatchMode, PartialCredit,
};
use crate::io;
use crate::lexicon::{expand_gazetteer, load_gazetteer, load_wordlist};
use crate::normalizer::{NormalizationRecord, RepeatedSublist};
use crate::pipeline::run_pipeline;
use crate::recognizer::{Recognizer, Resources};
use crate::text::{Entity, NeType};

#[derive(Debug, Parser)]
#[command(
    name = "tweet-ner",
    version,
    about = "Rule-based NER for Turkish tweets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Partial,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CreditArg {
    Binary,
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PloArg {
    Per,
    Loc,
    Org,
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    /// Corpus file, `doc_id<TAB>text` per line.
    pub corpus: PathBuf,
    #[arg(long)]
    pub config: PathBuf,
    /// Predictions output in annotation format.
    #[arg(long)]
    pub out: PathBuf,
    /// Treat every token as a name candidate, capitalized or not.
    #[arg(long)]
    pub no_capitalization: bool,
    /// Expand gazetteers with diacritic variants.
    #[arg(long)]
    pub expand_diacritics: bool,
    /// Write normalization records here (pipeline runs only).
    #[arg(long)]
    pub norm_records: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a gazetteer with all diacritic/non-diacritic spellings.
    Expand {
        gazetteer: PathBuf,
        wordlist: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long = "type", value_enum, default_value = "loc")]
        ne_type: PloArg,
    },
    /// Recognize entities in a corpus.
    Recognize(RunArgs),
    /// Recognize, normalize repeated characters, recognize again.
    Pipeline(RunArgs),
    /// Score predictions against gold annotations.
    Evaluate {
        gold: PathBuf,
        pred: PathBuf,
        corpus: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "binary")]
        partial_credit: CreditArg,
    },
    /// Entity frequencies per type.
    Stats { gold: PathBuf },
    /// Precision of normalization records against expected forms.
    NormReport {
        records: PathBuf,
        gold_norms: PathBuf,
    },
}

pub fn run<W: Write>(cli: Cli, stdout: &mut W) -> Result<()> {
    let console = |e: std::io::Error| Error::Write {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match cli.command {
        Command::Expand {
            gazetteer,
            wordlist,
            out,
            ne_type,
        } => {
            let ne_type = match ne_type {
                PloArg::Per => NeType::Person,
                PloArg::Loc => NeType::Location,
                PloArg::Org => NeType::Organization,
            };
            let g = load_gazetteer(&gazetteer, ne_type)?;
            let wl = load_wordlist(&wordlist)?;
            let expanded = expand_gazetteer(&g, &wl);
            log::info!("{} entries expanded to {}", g.len(), expanded.len());
            io::write_file(&out, |w| {
                expanded
                    .entries()
                    .iter()
                    .try_for_each(|e| writeln!(w, "{}", e.original))
            })
        }
        Command::Recognize(args) => run_corpus(&args, false),
        Command::Pipeline(args) => run_corpus(&args, true),
        Command::Evaluate {
            gold,
            pred,
            corpus,
            mode,
            partial_credit,
        } => {
            let docs = io::read_corpus(&corpus)?;
            let gold = io::read_annotations(&gold, Some(&docs))?;
            let pred = io::read_annotations(&pred, Some(&docs))?;
            let credit = match partial_credit {
                CreditArg::Binary => PartialCredit::Binary,
                CreditArg::Half => PartialCredit::HalfWeight,
            };
            let modes: &[MatchMode] = match mode {
                ModeArg::Strict => &[MatchMode::Strict],
                ModeArg::Partial => &[MatchMode::Partial],
                ModeArg::Both => &[MatchMode::Strict, MatchMode::Partial],
            };
            let report = EvalReport {
                blocks: modes
                    .iter()
                    .map(|&m| evaluate(&gold, &pred, m, credit))
                    .collect(),
            };
            write!(stdout, "{report}").map_err(console)
        }
        Command::Stats { gold } => {
            let set = io::read_annotations(&gold, None)?;
            write!(stdout, "{}", stats(&set)).map_err(console)
        }
        Command::NormReport {
            records,
            gold_norms,
        } => {
            let records = io::read_records(&records)?;
            let gold = io::read_gold_norms(&gold_norms)?;
            write!(stdout, "{}", normalization_precision(&records, &gold)).map_err(console)
        }
    }
}

fn run_corpus(args: &RunArgs, pipeline_command: bool) -> Result<()> {
    let cfg = RunConfig::load(&args.config)?;
    let use_pipeline = pipeline_command || cfg.pipeline_normalization;
    let capitalization = !args.no_capitalization && cfg.capitalization.unwrap_or(!use_pipeline);
    let expand = args.expand_diacritics || cfg.expand_diacritics;

    let resources = Resources::load(&cfg.resources)?;
    let recognizer = Recognizer::from_resources(&resources, capitalization, expand)?;
    let sublist = if use_pipeline {
        let wl = resources.wordlist.as_ref().ok_or_else(|| Error::Resource {
            path: args.config.clone(),
            message: "normalization needs a wordlist".into(),
        })?;
        Some(RepeatedSublist::from_wordlist(wl))
    } else {
        None
    };

    let docs = io::read_corpus(&args.corpus)?;
    let mut predictions: Vec<(&str, Vec<Entity>)> = Vec::with_capacity(docs.len());
    let mut records: Vec<NormalizationRecord> = Vec::new();
    for doc in &docs {
        let entities = match &sublist {
            Some(sub) => {
                let out = run_pipeline(doc, &recognizer, sub);
                records.extend(out.records);
                out.entities
            }
            None => recognizer.recognize(doc),
        };
        predictions.push((doc.id.as_str(), entities));
    }
    log::info!(
        "{} documents, {} entities, {} normalization records",
        docs.len(),
        predictions.iter().map(|(_, e)| e.len()).sum::<usize>(),
        records.len()
    );

    io::write_file(&args.out, |w| {
        io::write_annotations(w, predictions.iter().map(|(id, e)| (*id, e.as_slice())))
    })?;
    if let Some(path) = &args.norm_records {
        write_records_file(path, &records)?;
    }
    Ok(())
}

fn write_records_file(path: &Path, records: &[NormalizationRecord]) -> Result<()> {
    io::write_file(path, |w| io::write_records(w, records))
}
