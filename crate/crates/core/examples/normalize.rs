//! Squeezing repeated characters, with an offset map back to the original.

use tweet_ner::normalizer::{normalize_text, NormalizedText};
use tweet_ner::{Document, RepeatedSublist, Span, WordList};

pub fn run_example() -> NormalizedText {
    let words = WordList::from_words(["saat", "anne", "gittim", "genellikle"]);
    let sub = RepeatedSublist::from_wordlist(&words);
    let doc = Document::new("t1", "anneee zamaanlaaa gittim >>>>>> :DDDDD oooooo");
    normalize_text(&doc, &[], &sub)
}

fn main() {
    let out = run_example();
    println!("{}", out.text);
    for r in &out.records {
        println!("  {:<12} -> {:<8} {}", r.original, r.normalized, r.category);
    }
    let span = Span::new(5, 11).expect("valid span");
    println!(
        "normalized {span:?} covers original {:?}",
        out.map.to_original(span)
    );
}
