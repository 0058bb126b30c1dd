//! Diacritics expansion of a location gazetteer.
//!
//! `Şişli` would also produce `Sisli`, but `sisli` ("foggy") is a common
//! word, so the word list filters it out.

use tweet_ner::lexicon::expand_entry;
use tweet_ner::{Gazetteer, NeType, Result, WordList};

pub fn run_example() -> Result<Gazetteer> {
    let words = WordList::from_words(["sisli", "ve", "bir"]);
    let g = Gazetteer::from_entries(NeType::Location, ["Kıbrıs", "Şişli", "Ankara"])?;
    for entry in g.entries() {
        let variants = expand_entry(&entry.original, &words)?;
        println!("{} -> {:?}", entry.original, variants);
    }
    Ok(tweet_ner::lexicon::expand_gazetteer(&g, &words))
}

fn main() -> Result<()> {
    let expanded = run_example()?;
    println!("{} entries after expansion", expanded.len());
    Ok(())
}
