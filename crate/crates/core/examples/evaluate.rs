//! Scoring predictions against the sample gold annotations.

use std::path::Path;

use tweet_ner::config::RunConfig;
use tweet_ner::evaluator::{normalization_precision, stats, NormPrecision, Stats};
use tweet_ner::io::{read_annotations, read_corpus, read_gold_norms};
use tweet_ner::normalizer::NormalizationRecord;
use tweet_ner::recognizer::Resources;
use tweet_ner::{
    evaluator, run_pipeline, AnnotationSet, EvalReport, MatchMode, PartialCredit, Recognizer,
    RepeatedSublist, Result,
};

pub fn run_example() -> Result<(EvalReport, Stats, NormPrecision)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("resources/sample");
    let docs = read_corpus(&dir.join("corpus.tsv"))?;
    let gold = read_annotations(&dir.join("gold.tsv"), Some(&docs))?;

    let cfg = RunConfig::load(&dir.join("sample.conf"))?;
    let resources = Resources::load(&cfg.resources)?;
    let recognizer = Recognizer::from_resources(&resources, false, true)?;
    let sub = resources
        .wordlist
        .as_ref()
        .map(RepeatedSublist::from_wordlist)
        .unwrap_or_default();

    let mut pred = AnnotationSet::new();
    let mut records: Vec<NormalizationRecord> = Vec::new();
    for doc in &docs {
        let out = run_pipeline(doc, &recognizer, &sub);
        pred.touch(&doc.id);
        for e in out.entities {
            pred.insert(&doc.id, e)
                .expect("pipeline output does not overlap");
        }
        records.extend(out.records);
    }

    let report = EvalReport {
        blocks: vec![
            evaluator::evaluate(&gold, &pred, MatchMode::Strict, PartialCredit::Binary),
            evaluator::evaluate(&gold, &pred, MatchMode::Partial, PartialCredit::Binary),
            evaluator::evaluate(&gold, &pred, MatchMode::Partial, PartialCredit::HalfWeight),
        ],
    };
    let norms = read_gold_norms(&dir.join("gold_norms.tsv"))?;
    Ok((
        report,
        stats(&gold),
        normalization_precision(&records, &norms),
    ))
}

fn main() -> Result<()> {
    let (report, stats, norm) = run_example()?;
    print!("{report}\n{stats}\n{norm}");
    Ok(())
}
