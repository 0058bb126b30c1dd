//! Gazetteers, the valid-word list, and diacritics-based gazetteer expansion.
//!
//! An entry with `n` Turkish special characters (`ç ğ ı ö ş ü` and their
//! capitals) has `2^n` spellings: every occurrence is independently kept or
//! replaced by its plain counterpart. Expansion adds all of them, except
//! that a single-word variant whose fold key is a known common word is
//! dropped so that names do not start matching ordinary vocabulary.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::text::{is_turkish_special, strip_char, turkish_fold, NeType};
use crate::tokenizer::tokenize_str;

/// Largest number of special characters an entry may have and still be expanded.
pub const DEFAULT_VARIANT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    /// Entry as loaded, with internal whitespace collapsed.
    pub original: String,
    pub fold_key: String,
    /// Fold keys of the entry's words, in order.
    pub words: Vec<String>,
}

impl Entry {
    pub fn new(text: &str) -> Option<Entry> {
        let original = text.split_whitespace().collect::<Vec<_>>().join(" ");
        if original.is_empty() {
            return None;
        }
        let fold_key = turkish_fold(&original);
        let words: Vec<String> = tokenize_str(&fold_key)
            .into_iter()
            .map(|t| t.surface)
            .collect();
        if words.is_empty() {
            return None;
        }
        Some(Entry {
            original,
            fold_key,
            words,
        })
    }

    pub fn is_multiword(&self) -> bool {
        self.words.len() > 1
    }
}

/// A type-tagged list of names. Entries are unique by fold key and keep load order.
#[derive(Debug, Clone)]
pub struct Gazetteer {
    ne_type: NeType,
    entries: Vec<Entry>,
    index: HashMap<String, usize>,
}

impl Gazetteer {
    pub fn new(ne_type: NeType) -> Result<Self> {
        if !ne_type.is_plo() {
            return Err(Error::NotPlo(ne_type));
        }
        Ok(Gazetteer {
            ne_type,
            entries: Vec::new(),
            index: HashMap::new(),
        })
    }

    pub fn from_entries<I, S>(ne_type: NeType, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut g = Gazetteer::new(ne_type)?;
        for e in entries {
            g.insert(e.as_ref());
        }
        Ok(g)
    }

    /// Adds an entry unless its fold key is already present. Returns whether it was added.
    pub fn insert(&mut self, text: &str) -> bool {
        let Some(entry) = Entry::new(text) else {
            return false;
        };
        if self.index.contains_key(&entry.fold_key) {
            return false;
        }
        self.index
            .insert(entry.fold_key.clone(), self.entries.len());
        self.entries.push(entry);
        true
    }

    pub fn ne_type(&self) -> NeType {
        self.ne_type
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, text: &str) -> bool {
        self.index.contains_key(&turkish_fold(text))
    }

    pub fn fold_keys(&self) -> BTreeSet<&str> {
        self.entries.iter().map(|e| e.fold_key.as_str()).collect()
    }
}

/// Fold-keyed set of valid common words.
#[derive(Debug, Clone, Default)]
pub struct WordList {
    words: HashSet<String>,
}

impl WordList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let words = words
            .into_iter()
            .map(|w| turkish_fold(w.as_ref().trim()))
            .filter(|w| !w.is_empty())
            .collect();
        WordList { words }
    }

    /// Membership of an already folded word.
    pub fn contains_folded(&self, folded: &str) -> bool {
        self.words.contains(folded)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&turkish_fold(word))
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

/// Non-blank, non-comment lines of a resource file.
pub fn read_entry_lines(path: &Path) -> Result<Vec<String>> {
    let content = fs::read_to_string(path).map_err(|source| Error::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_owned)
        .collect())
}

pub fn load_gazetteer(path: &Path, ne_type: NeType) -> Result<Gazetteer> {
    let lines = read_entry_lines(path)?;
    let g = Gazetteer::from_entries(ne_type, &lines)?;
    if g.is_empty() {
        log::warn!("gazetteer {} has no entries", path.display());
    }
    Ok(g)
}

pub fn load_wordlist(path: &Path) -> Result<WordList> {
    let content = fs::read_to_string(path).map_err(|source| Error::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(WordList::from_words(content.lines()))
}

pub fn special_count(entry: &str) -> usize {
    entry.chars().filter(|&c| is_turkish_special(c)).count()
}

/// All diacritic/non-diacritic spellings of `entry` that survive the word-list filter.
pub fn expand_entry(entry: &str, wordlist: &WordList) -> Result<BTreeSet<String>> {
    expand_entry_with_cap(entry, wordlist, DEFAULT_VARIANT_CAP)
}

pub fn expand_entry_with_cap(
    entry: &str,
    wordlist: &WordList,
    cap: usize,
) -> Result<BTreeSet<String>> {
    Ok(variants(entry, wordlist, cap)?.into_iter().collect())
}

/// Variants in enumeration order, original first.
fn variants(entry: &str, wordlist: &WordList, cap: usize) -> Result<Vec<String>> {
    let chars: Vec<char> = entry.chars().collect();
    let positions: Vec<usize> = chars
        .iter()
        .enumerate()
        .filter(|(_, &c)| is_turkish_special(c))
        .map(|(i, _)| i)
        .collect();
    let n = positions.len();
    if n > cap {
        return Err(Error::TooManyVariants {
            entry: entry.to_owned(),
            count: n,
            cap,
        });
    }
    let single_word = entry.split_whitespace().nth(1).is_none();

    let mut out = Vec::with_capacity(1 << n);
    out.push(entry.to_owned());
    for mask in 1u32..(1u32 << n) {
        let mut variant = chars.clone();
        for (bit, &pos) in positions.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                variant[pos] = strip_char(variant[pos]).expect("special position");
            }
        }
        let variant: String = variant.into_iter().collect();
        if single_word && wordlist.contains_folded(&turkish_fold(&variant)) {
            continue;
        }
        out.push(variant);
    }
    Ok(out)
}

/// Gazetteer with every entry expanded. Entries above the cap are kept as-is.
pub fn expand_gazetteer(g: &Gazetteer, wordlist: &WordList) -> Gazetteer {
    expand_gazetteer_with_cap(g, wordlist, DEFAULT_VARIANT_CAP)
}

pub fn expand_gazetteer_with_cap(g: &Gazetteer, wordlist: &WordList, cap: usize) -> Gazetteer {
    let mut out = Gazetteer::new(g.ne_type).expect("source gazetteer is PLO");
    for entry in &g.entries {
        match variants(&entry.original, wordlist, cap) {
            Ok(vs) => {
                for v in vs {
                    out.insert(&v);
                }
            }
            Err(e) => {
                log::warn!("{e}; keeping it unexpanded");
                out.insert(&entry.original);
            }
        }
    }
    out
}
