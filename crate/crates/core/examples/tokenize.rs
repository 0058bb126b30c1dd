//! Tokenizing a tweet into offset-carrying tokens.

use tweet_ner::{tokenize, Document, Token};

pub fn run_example() -> Vec<Token> {
    let doc = Document::new(
        "t1",
        "@ali (#Ankara) Kıbrıs'a gidiyoruz!! :DDDD http://t.co/x %5",
    );
    tokenize(&doc)
}

fn main() {
    for t in run_example() {
        println!(
            "{:>2}..{:<2} {:<10?} {}",
            t.span.start, t.span.end, t.kind, t.surface
        );
    }
}
