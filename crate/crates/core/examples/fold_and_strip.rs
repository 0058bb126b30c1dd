//! Turkish case folding and diacritics stripping.

use tweet_ner::{strip_diacritics, turkish_fold};

pub fn run_example() -> Vec<(String, String, String)> {
    ["İSTANBUL", "Işık", "Çanakkale", "GÜMÜŞHANE"]
        .iter()
        .map(|w| (w.to_string(), turkish_fold(w), strip_diacritics(w)))
        .collect()
}

fn main() {
    for (word, folded, stripped) in run_example() {
        println!("{word:<12} fold={folded:<12} strip={stripped}");
    }
}
