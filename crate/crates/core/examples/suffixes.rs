//! Case suffixes on proper names.

use tweet_ner::morphology::{match_stem_with_suffix, suffixes_for, validate_suffix};

pub fn run_example() -> Vec<(&'static str, &'static str, bool)> {
    [
        ("Ankara", "ya"),
        ("Ankara", "a"),
        ("İstanbul", "dan"),
        ("Trabzon", "lar"),
        ("Kadıköy", "de"),
        ("Sinop", "ta"),
        ("Sinop", "da"),
        ("Bursa", "nın"),
        ("Bursa", "ın"),
    ]
    .into_iter()
    .map(|(stem, suffix)| (stem, suffix, validate_suffix(suffix, stem)))
    .collect()
}

fn main() {
    for (stem, suffix, ok) in run_example() {
        println!("{stem}+{suffix:<4} {}", if ok { "ok" } else { "rejected" });
    }
    println!("Muğla takes: {}", suffixes_for("Muğla").join(" "));
    println!(
        "izmirden = İzmir + suffix? {}",
        match_stem_with_suffix("izmirden", "İzmir")
    );
}
