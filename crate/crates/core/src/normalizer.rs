//! Repeated-character normalization.
//!
//! A token containing a run of identical characters is squeezed (every run
//! contracted to one character) unless its folded form is a known valid word
//! with a repeated run. Hashtags, mentions, URLs and tokens overlapping a
//! protected span are copied verbatim. Changed tokens produce
//! [`NormalizationRecord`]s classified for error reporting.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use std::collections::HashSet;

use crate::lexicon::WordList;
use crate::text::{turkish_fold, Document, Span, TokenKind};
use crate::tokenizer::tokenize;

/// True when `s` has two identical adjacent code points.
pub fn has_repeated_run(s: &str) -> bool {
    let mut prev = None;
    for c in s.chars() {
        if prev == Some(c) {
            return true;
        }
        prev = Some(c);
    }
    false
}

/// Valid words that legitimately contain a repeated character.
#[derive(Debug, Clone, Default)]
pub struct RepeatedSublist {
    words: HashSet<String>,
}

impl RepeatedSublist {
    pub fn from_wordlist(w: &WordList) -> Self {
        RepeatedSublist {
            words: w
                .iter()
                .filter(|w| has_repeated_run(w))
                .map(str::to_owned)
                .collect(),
        }
    }

    pub fn contains_folded(&self, folded: &str) -> bool {
        self.words.contains(folded)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

pub fn build_repeated_sublist(w: &WordList) -> RepeatedSublist {
    RepeatedSublist::from_wordlist(w)
}

/// Contract every run of identical characters, unless the token is a protected word.
pub fn squeeze_token(t: &str, sub: &RepeatedSublist) -> String {
    if sub.contains_folded(&turkish_fold(t)) {
        return t.to_owned();
    }
    let mut out = String::with_capacity(t.len());
    let mut prev = None;
    for c in t.chars() {
        if prev != Some(c) {
            out.push(c);
        }
        prev = Some(c);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormCategory {
    /// The original has no letters or digits, e.g. `>>>>>>`.
    NonAlphaOnly,
    /// Squeezing left a single letter, e.g. `oooooo`.
    SingleAlphaResult,
    /// Emoticon, e.g. `:DDDDD`.
    Emoticon,
    /// Counted when scoring normalization precision.
    Evaluable,
}

impl NormCategory {
    pub fn code(self) -> &'static str {
        match self {
            NormCategory::NonAlphaOnly => "NON_ALPHA_ONLY",
            NormCategory::SingleAlphaResult => "SINGLE_ALPHA_RESULT",
            NormCategory::Emoticon => "EMOTICON",
            NormCategory::Evaluable => "EVALUABLE",
        }
    }
}

impl fmt::Display for NormCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for NormCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            NormCategory::NonAlphaOnly,
            NormCategory::SingleAlphaResult,
            NormCategory::Emoticon,
            NormCategory::Evaluable,
        ]
        .into_iter()
        .find(|c| c.code() == s)
        .ok_or_else(|| format!("unknown normalization category {s:?}"))
    }
}

pub fn classify_case(original: &str, normalized: &str) -> NormCategory {
    if !original.chars().any(char::is_alphabetic) {
        NormCategory::NonAlphaOnly
    } else if original.starts_with([':', ';', '=']) {
        NormCategory::Emoticon
    } else if normalized.chars().filter(|c| c.is_alphabetic()).count() == 1 {
        NormCategory::SingleAlphaResult
    } else {
        NormCategory::Evaluable
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationRecord {
    pub doc_id: String,
    pub original: String,
    pub normalized: String,
    pub category: NormCategory,
}

/// One piece of the normalized text and where it came from.
///
/// Verbatim segments have equal lengths on both sides; a segment for a
/// squeezed run maps one normalized character onto the whole run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub normalized: Range<usize>,
    pub original: Range<usize>,
}

impl Segment {
    fn is_verbatim(&self) -> bool {
        self.normalized.len() == self.original.len()
    }
}

/// Monotone, contiguous mapping from normalized offsets back to original offsets.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OffsetMap {
    segments: Vec<Segment>,
}

impl OffsetMap {
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn normalized_len(&self) -> usize {
        self.segments.last().map_or(0, |s| s.normalized.end)
    }

    fn push(&mut self, normalized_len: usize, original_len: usize) {
        if normalized_len == 0 && original_len == 0 {
            return;
        }
        let (n0, o0) = self
            .segments
            .last()
            .map_or((0, 0), |s| (s.normalized.end, s.original.end));
        let seg = Segment {
            normalized: n0..n0 + normalized_len,
            original: o0..o0 + original_len,
        };
        if let Some(last) = self.segments.last_mut() {
            if last.is_verbatim() && seg.is_verbatim() {
                last.normalized.end = seg.normalized.end;
                last.original.end = seg.original.end;
                return;
            }
        }
        self.segments.push(seg);
    }

    fn segment_at(&self, normalized_offset: usize) -> Option<&Segment> {
        let i = self
            .segments
            .partition_point(|s| s.normalized.end <= normalized_offset);
        self.segments
            .get(i)
            .filter(|s| s.normalized.contains(&normalized_offset))
    }

    /// The original span covering a span of the normalized text.
    pub fn to_original(&self, span: Span) -> Option<Span> {
        let first = self.segment_at(span.start)?;
        let last = self.segment_at(span.end - 1)?;
        let start = if first.is_verbatim() {
            first.original.start + (span.start - first.normalized.start)
        } else {
            first.original.start
        };
        let end = if last.is_verbatim() {
            last.original.start + (span.end - last.normalized.start)
        } else {
            last.original.end
        };
        Some(Span { start, end })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedText {
    pub text: String,
    pub map: OffsetMap,
    pub records: Vec<NormalizationRecord>,
}

/// Squeeze every unprotected word of `doc`, keeping everything else verbatim.
pub fn normalize_text(doc: &Document, protected: &[Span], sub: &RepeatedSublist) -> NormalizedText {
    let chars: Vec<char> = doc.text.chars().collect();
    let mut text = String::with_capacity(doc.text.len());
    let mut map = OffsetMap::default();
    let mut records = Vec::new();
    let mut cursor = 0;

    for tok in tokenize(doc) {
        let gap = &chars[cursor..tok.span.start];
        text.extend(gap);
        map.push(gap.len(), gap.len());
        cursor = tok.span.end;

        let frozen = matches!(
            tok.kind,
            TokenKind::Hashtag | TokenKind::Mention | TokenKind::Url
        ) || protected.iter().any(|p| p.overlaps(&tok.span));
        let squeezed = if frozen {
            tok.surface.clone()
        } else {
            squeeze_token(&tok.surface, sub)
        };
        if squeezed == tok.surface {
            text.push_str(&tok.surface);
            map.push(tok.span.len(), tok.span.len());
            continue;
        }

        let token_chars: Vec<char> = tok.surface.chars().collect();
        for run in token_chars.chunk_by(|a, b| a == b) {
            map.push(1, run.len());
        }
        text.push_str(&squeezed);
        records.push(NormalizationRecord {
            doc_id: doc.id.clone(),
            category: classify_case(&tok.surface, &squeezed),
            original: tok.surface,
            normalized: squeezed,
        });
    }
    let tail = &chars[cursor..];
    text.extend(tail);
    map.push(tail.len(), tail.len());

    NormalizedText { text, map, records }
}
