//! Recognize, normalize around what was found, recognize again.
//!
//! Names found in the first pass are protected from normalization, so an
//! entity such as `Çanakkale` cannot be damaged into `Çanakale`. Second-pass
//! entities are mapped back onto the original text and added wherever they
//! do not collide with a first-pass entity.

use crate::normalizer::{normalize_text, NormalizationRecord, RepeatedSublist};
use crate::recognizer::Recognizer;
use crate::text::{slice_chars, Document, Entity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOutput {
    /// Final entities on original offsets, sorted and non-overlapping.
    pub entities: Vec<Entity>,
    pub records: Vec<NormalizationRecord>,
    /// How many of `entities` came from the second pass.
    pub second_pass_added: usize,
}

pub fn run_pipeline(
    doc: &Document,
    recognizer: &Recognizer,
    sub: &RepeatedSublist,
) -> PipelineOutput {
    let first = recognizer.recognize(doc);
    let protected: Vec<_> = first.iter().map(|e| e.span).collect();
    let normalized = normalize_text(doc, &protected, sub);

    if normalized.records.is_empty() {
        return PipelineOutput {
            entities: first,
            records: normalized.records,
            second_pass_added: 0,
        };
    }

    let second_doc = Document::new(doc.id.clone(), normalized.text);
    let mut entities = first;
    let mut added = 0;
    for e in recognizer.recognize(&second_doc) {
        let Some(span) = normalized.map.to_original(e.span) else {
            continue;
        };
        if entities.iter().any(|k| k.span.overlaps(&span)) {
            continue;
        }
        let surface = slice_chars(&doc.text, span).expect("mapped span inside original");
        entities.push(Entity::new(e.ne_type, span, surface));
        added += 1;
    }
    entities.sort_by_key(|e| e.span.start);

    PipelineOutput {
        entities,
        records: normalized.records,
        second_pass_added: added,
    }
}
