//! The recognize, normalize, recognize pipeline over the sample corpus.

use std::path::Path;

use tweet_ner::config::RunConfig;
use tweet_ner::io::read_corpus;
use tweet_ner::recognizer::Resources;
use tweet_ner::{run_pipeline, PipelineOutput, Recognizer, RepeatedSublist, Result};

pub fn run_example() -> Result<Vec<(String, PipelineOutput)>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("resources/sample");
    let cfg = RunConfig::load(&dir.join("sample.conf"))?;
    let resources = Resources::load(&cfg.resources)?;
    let recognizer = Recognizer::from_resources(&resources, false, cfg.expand_diacritics)?;
    let sub = resources
        .wordlist
        .as_ref()
        .map(RepeatedSublist::from_wordlist)
        .unwrap_or_default();
    Ok(read_corpus(&dir.join("corpus.tsv"))?
        .iter()
        .map(|doc| (doc.text.clone(), run_pipeline(doc, &recognizer, &sub)))
        .collect())
}

fn main() -> Result<()> {
    for (text, out) in run_example()? {
        println!("{text}");
        for e in &out.entities {
            println!("  {:<7} {}", e.ne_type.code(), e.surface);
        }
        if out.second_pass_added > 0 {
            println!("  ({} found after normalization)", out.second_pass_added);
        }
    }
    Ok(())
}
