//! Shared domain types and Turkish-aware character operations.
//!
//! All offsets are code-point indices into the document text, never bytes.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The seven entity types. The first three are the gazetteer-driven PLO types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NeType {
    Person,
    Location,
    Organization,
    Date,
    Time,
    Money,
    Percent,
}

impl NeType {
    pub const ALL: [NeType; 7] = [
        NeType::Person,
        NeType::Location,
        NeType::Organization,
        NeType::Date,
        NeType::Time,
        NeType::Money,
        NeType::Percent,
    ];

    /// Gazetteer types, in tie-breaking priority order.
    pub const PLO: [NeType; 3] = [NeType::Person, NeType::Location, NeType::Organization];

    pub fn is_plo(self) -> bool {
        matches!(
            self,
            NeType::Person | NeType::Location | NeType::Organization
        )
    }

    /// Short code used in annotation files.
    pub fn code(self) -> &'static str {
        match self {
            NeType::Person => "PER",
            NeType::Location => "LOC",
            NeType::Organization => "ORG",
            NeType::Date => "DATE",
            NeType::Time => "TIME",
            NeType::Money => "MONEY",
            NeType::Percent => "PERCENT",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            NeType::Person => "Person",
            NeType::Location => "Location",
            NeType::Organization => "Organization",
            NeType::Date => "Date",
            NeType::Time => "Time",
            NeType::Money => "Money",
            NeType::Percent => "Percent",
        }
    }
}

impl fmt::Display for NeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for NeType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NeType::ALL
            .into_iter()
            .find(|t| t.code() == s)
            .ok_or_else(|| format!("unknown entity type {s:?}"))
    }
}

/// Half-open code-point range `start..end`, never empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Result<Self, Error> {
        if start < end {
            Ok(Span { start, end })
        } else {
            Err(Error::InvalidSpan { start, end })
        }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }

    /// True when the two spans share at least one code point.
    pub fn overlaps(&self, other: &Span) -> bool {
        self.start < other.end && other.start < self.end
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// A single tweet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub text: String,
}

impl Document {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        Document {
            id: id.into(),
            text: text.into(),
        }
    }

    pub fn char_len(&self) -> usize {
        self.text.chars().count()
    }

    /// Substring at a code-point span, or `None` when the span is out of range.
    pub fn slice(&self, span: Span) -> Option<String> {
        slice_chars(&self.text, span)
    }
}

pub(crate) fn slice_chars(text: &str, span: Span) -> Option<String> {
    let s: String = text.chars().skip(span.start).take(span.len()).collect();
    (s.chars().count() == span.len()).then_some(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Entity {
    pub ne_type: NeType,
    pub span: Span,
    pub surface: String,
}

impl Entity {
    pub fn new(ne_type: NeType, span: Span, surface: impl Into<String>) -> Self {
        Entity {
            ne_type,
            span,
            surface: surface.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    Hashtag,
    Mention,
    Url,
    /// No alphanumeric content at all, e.g. `>>>>` or `:)`.
    Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub span: Span,
    pub kind: TokenKind,
    /// First alphabetic character is uppercase.
    pub initial_upper: bool,
    /// Code-point index of the first apostrophe within `surface`.
    pub apostrophe_index: Option<usize>,
}

impl Token {
    /// Hashtags, mentions and URLs never start an entity.
    pub fn is_ne_eligible(&self) -> bool {
        matches!(self.kind, TokenKind::Word)
    }
}

pub fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Lowercase a single character, keeping the result one code point long.
pub fn fold_char(c: char) -> char {
    match c {
        'I' => 'ı',
        'İ' => 'i',
        c if c.is_ascii() => c.to_ascii_lowercase(),
        c => {
            let mut lower = c.to_lowercase();
            match (lower.next(), lower.next()) {
                (Some(l), None) => l,
                _ => c,
            }
        }
    }
}

/// Lowercase with Turkish dotted/dotless i handling: `I`→`ı`, `İ`→`i`.
pub fn turkish_fold(text: &str) -> String {
    text.chars().map(fold_char).collect()
}

/// Non-diacritic counterpart of a Turkish special character.
pub fn strip_char(c: char) -> Option<char> {
    Some(match c {
        'ç' => 'c',
        'ğ' => 'g',
        'ı' => 'i',
        'ö' => 'o',
        'ş' => 's',
        'ü' => 'u',
        'Ç' => 'C',
        'Ğ' => 'G',
        'İ' => 'I',
        'Ö' => 'O',
        'Ş' => 'S',
        'Ü' => 'U',
        _ => return None,
    })
}

pub fn is_turkish_special(c: char) -> bool {
    strip_char(c).is_some()
}

/// Replace the twelve Turkish special characters with their plain counterparts.
pub fn strip_diacritics(text: &str) -> String {
    text.chars().map(|c| strip_char(c).unwrap_or(c)).collect()
}

pub fn is_vowel(c: char) -> bool {
    matches!(
        c,
        'a' | 'e' | 'ı' | 'i' | 'o' | 'ö' | 'u' | 'ü' | 'â' | 'î' | 'û'
    )
}
