//! Gazetteer and pattern recognition, with and without the capitalization rule.

use tweet_ner::{
    Document, Entity, Gazetteer, NeType, PatternLexicons, Recognizer, RecognizerOptions, Result,
};

pub fn run_example() -> Result<(Vec<Entity>, Vec<Entity>)> {
    let gazetteers = || -> Result<Vec<Gazetteer>> {
        Ok(vec![
            Gazetteer::from_entries(NeType::Person, ["Orhan Pamuk"])?,
            Gazetteer::from_entries(NeType::Location, ["Ankara", "İzmir"])?,
            Gazetteer::from_entries(NeType::Organization, ["Türk Hava Yolları"])?,
        ])
    };
    let doc = Document::new(
        "t1",
        "Orhan Pamuk'un kitabı 25 TL. türk hava yolları ankara'dan 5 Ocak'ta saat 10:30'da kalkıyor",
    );
    let mut found = Vec::new();
    for capitalization_required in [true, false] {
        let r = Recognizer::new(
            gazetteers()?,
            PatternLexicons::turkish(),
            RecognizerOptions {
                capitalization_required,
            },
        );
        found.push(r.recognize(&doc));
    }
    let off = found.pop().unwrap_or_default();
    let on = found.pop().unwrap_or_default();
    Ok((on, off))
}

fn main() -> Result<()> {
    let (on, off) = run_example()?;
    for (label, entities) in [("capitalization on", on), ("capitalization off", off)] {
        println!("{label}:");
        for e in entities {
            println!(
                "  {:>2}..{:<2} {:<7} {}",
                e.span.start,
                e.span.end,
                e.ne_type.code(),
                e.surface
            );
        }
    }
    Ok(())
}
