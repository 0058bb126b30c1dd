//! Rule-based named-entity recognition for Turkish tweets.
//!
//! The crate recognizes person, location and organization names (PLOs) from
//! gazetteers, validating attached case suffixes with a small morphological
//! grammar, and picks up date, time, money and percent expressions with
//! token patterns. Three adaptations for tweet text are provided:
//!
//! * the capitalization clue can be switched off so every token is a
//!   candidate ([`RecognizerOptions::capitalization_required`]);
//! * gazetteer entries can be expanded with all diacritic/non-diacritic
//!   spellings, filtered against a list of common words ([`lexicon`]);
//! * a repeated-character normalizer runs between two recognition passes,
//!   protecting names found by the first pass ([`pipeline`]).
//!
//! Evaluation under strict and partial matching lives in [`evaluator`].

pub mod cli;
pub mod config;
pub mod error;
pub mod evaluator;
pub mod io;
pub mod lexicon;
pub mod morphology;
pub mod normalizer;
pub mod pipeline;
pub mod recognizer;
pub mod text;
pub mod tokenizer;

pub use error::{Error, Result};
pub use evaluator::{AnnotationSet, EvalBlock, EvalReport, MatchMode, PartialCredit};
pub use lexicon::{Gazetteer, WordList};
pub use normalizer::{NormCategory, NormalizationRecord, OffsetMap, RepeatedSublist};
pub use pipeline::{run_pipeline, PipelineOutput};
pub use recognizer::{PatternLexicons, Recognizer, RecognizerOptions};
pub use text::{strip_diacritics, turkish_fold, Document, Entity, NeType, Span, Token, TokenKind};
pub use tokenizer::tokenize;
