//! Single-pass recognition over one document.
//!
//! Gazetteer names are matched word by word on folded token surfaces. The
//! last word of a match may carry an inflectional suffix, either after an
//! apostrophe (`Ankara'ya`) or glued on (`ankaraya`); in both cases the
//! suffix has to pass [`validate_suffix`]. Temporal and numeric expressions
//! come from a small set of token patterns.
//!
//! All matches from every start position compete for the text: longer spans
//! win, then the leftmost, then gazetteer matches over patterns, then
//! PERSON over LOCATION over ORGANIZATION.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::lexicon::{expand_gazetteer, load_gazetteer, load_wordlist, read_entry_lines};
use crate::lexicon::{Gazetteer, WordList};
use crate::morphology::{match_stem_with_suffix, validate_suffix, MAX_SUFFIX_LEN};
use crate::text::{is_apostrophe, turkish_fold, Document, Entity, NeType, Span, Token};
use crate::tokenizer::tokenize;

const TIME_KEYWORD: &str = "saat";
const PERCENT_KEYWORD: &str = "yüzde";

/// Word lists behind the date, time, money and percent patterns. Entries are folded.
#[derive(Debug, Clone)]
pub struct PatternLexicons {
    months: Vec<String>,
    currency: HashSet<String>,
    relative_days: HashSet<String>,
    weekdays: HashSet<String>,
}

impl PatternLexicons {
    pub fn new<S: AsRef<str>>(
        months: &[S],
        currency: &[S],
        relative_days: &[S],
        weekdays: &[S],
    ) -> Result<Self, String> {
        let fold_all = |xs: &[S]| -> Vec<String> {
            xs.iter()
                .map(|x| turkish_fold(x.as_ref().trim()))
                .filter(|x| !x.is_empty())
                .collect()
        };
        let months = fold_all(months);
        if months.len() != 12 {
            return Err(format!("expected 12 month names, found {}", months.len()));
        }
        Ok(PatternLexicons {
            months,
            currency: fold_all(currency).into_iter().collect(),
            relative_days: fold_all(relative_days).into_iter().collect(),
            weekdays: fold_all(weekdays).into_iter().collect(),
        })
    }

    /// The built-in Turkish lexicons, identical to the files under `resources/`.
    pub fn turkish() -> Self {
        PatternLexicons::new(
            &[
                "ocak", "şubat", "mart", "nisan", "mayıs", "haziran", "temmuz", "ağustos", "eylül",
                "ekim", "kasım", "aralık",
            ],
            &["tl", "lira", "dolar", "euro", "avro", "sterlin"],
            &["bugün", "yarın", "dün"],
            &[
                "pazartesi",
                "salı",
                "çarşamba",
                "perşembe",
                "cuma",
                "cumartesi",
                "pazar",
            ],
        )
        .expect("twelve built-in months")
    }

    /// Loads the four lexicon files; any path left as `None` falls back to the built-in list.
    pub fn load(
        months: Option<&Path>,
        currency: Option<&Path>,
        relative_days: Option<&Path>,
        weekdays: Option<&Path>,
    ) -> Result<Self> {
        let builtin = PatternLexicons::turkish();
        let read = |p: Option<&Path>, fallback: Vec<String>| -> Result<Vec<String>> {
            match p {
                Some(p) => read_entry_lines(p),
                None => Ok(fallback),
            }
        };
        let sorted = |s: &HashSet<String>| {
            let mut v: Vec<String> = s.iter().cloned().collect();
            v.sort();
            v
        };
        let m = read(months, builtin.months.clone())?;
        let c = read(currency, sorted(&builtin.currency))?;
        let r = read(relative_days, sorted(&builtin.relative_days))?;
        let w = read(weekdays, sorted(&builtin.weekdays))?;
        PatternLexicons::new(&m, &c, &r, &w).map_err(|message| Error::Resource {
            path: months.map(Path::to_path_buf).unwrap_or_default(),
            message,
        })
    }

    pub fn months(&self) -> &[String] {
        &self.months
    }

    fn month_number(&self, folded: &str) -> Option<usize> {
        self.months.iter().position(|m| m == folded)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecognizerOptions {
    /// Only tokens with an uppercase first letter may start or continue a name.
    pub capitalization_required: bool,
}

impl Default for RecognizerOptions {
    fn default() -> Self {
        RecognizerOptions {
            capitalization_required: true,
        }
    }
}

/// Resource file locations. Missing pattern files fall back to the built-in lexicons.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResourcePaths {
    pub person: Option<PathBuf>,
    pub location: Option<PathBuf>,
    pub organization: Option<PathBuf>,
    pub wordlist: Option<PathBuf>,
    pub months: Option<PathBuf>,
    pub currency: Option<PathBuf>,
    pub relative_days: Option<PathBuf>,
    pub weekdays: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecognizerConfig {
    pub capitalization_required: bool,
    pub use_expanded_gazetteers: bool,
    pub resources: ResourcePaths,
}

/// Everything loaded from disk for one run.
#[derive(Debug, Clone)]
pub struct Resources {
    pub gazetteers: Vec<Gazetteer>,
    pub wordlist: Option<WordList>,
    pub patterns: PatternLexicons,
}

impl Resources {
    pub fn load(paths: &ResourcePaths) -> Result<Self> {
        let mut gazetteers = Vec::new();
        for (path, ne_type) in [
            (&paths.person, NeType::Person),
            (&paths.location, NeType::Location),
            (&paths.organization, NeType::Organization),
        ] {
            if let Some(p) = path {
                gazetteers.push(load_gazetteer(p, ne_type)?);
            }
        }
        let wordlist = paths.wordlist.as_deref().map(load_wordlist).transpose()?;
        let patterns = PatternLexicons::load(
            paths.months.as_deref(),
            paths.currency.as_deref(),
            paths.relative_days.as_deref(),
            paths.weekdays.as_deref(),
        )?;
        Ok(Resources {
            gazetteers,
            wordlist,
            patterns,
        })
    }
}

#[derive(Debug, Default, Clone)]
struct TrieNode {
    children: HashMap<String, usize>,
    /// Types of entries ending here, sorted by priority.
    types: Vec<NeType>,
}

/// Word-level trie over folded gazetteer entries.
#[derive(Debug, Clone)]
struct NameTrie {
    nodes: Vec<TrieNode>,
}

impl NameTrie {
    fn new() -> Self {
        NameTrie {
            nodes: vec![TrieNode::default()],
        }
    }

    fn insert(&mut self, words: &[String], ne_type: NeType) {
        let mut node = 0;
        for w in words {
            node = match self.nodes[node].children.get(w) {
                Some(&n) => n,
                None => {
                    self.nodes.push(TrieNode::default());
                    let n = self.nodes.len() - 1;
                    self.nodes[node].children.insert(w.clone(), n);
                    n
                }
            };
        }
        let types = &mut self.nodes[node].types;
        if !types.contains(&ne_type) {
            types.push(ne_type);
            types.sort();
        }
    }

    fn child(&self, node: usize, word: &str) -> Option<usize> {
        self.nodes[node].children.get(word).copied()
    }

    fn terminal(&self, node: usize) -> Option<NeType> {
        self.nodes[node].types.first().copied()
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    ne_type: NeType,
    span: Span,
}

impl Candidate {
    fn priority(&self) -> (Reverse<usize>, usize, bool, NeType) {
        (
            Reverse(self.span.len()),
            self.span.start,
            !self.ne_type.is_plo(),
            self.ne_type,
        )
    }
}

/// Immutable recognizer; `recognize` can be called from many threads.
#[derive(Debug, Clone)]
pub struct Recognizer {
    trie: NameTrie,
    patterns: PatternLexicons,
    options: RecognizerOptions,
}

impl Recognizer {
    pub fn new<I>(gazetteers: I, patterns: PatternLexicons, options: RecognizerOptions) -> Self
    where
        I: IntoIterator<Item = Gazetteer>,
    {
        let mut trie = NameTrie::new();
        for g in gazetteers {
            for e in g.entries() {
                trie.insert(&e.words, g.ne_type());
            }
        }
        Recognizer {
            trie,
            patterns,
            options,
        }
    }

    /// Builds a recognizer from loaded resources, expanding gazetteers when asked.
    pub fn from_resources(
        resources: &Resources,
        capitalization_required: bool,
        use_expanded_gazetteers: bool,
    ) -> Result<Self> {
        let options = RecognizerOptions {
            capitalization_required,
        };
        let gazetteers: Vec<Gazetteer> = if use_expanded_gazetteers {
            let wl = resources.wordlist.as_ref().ok_or_else(|| Error::Resource {
                path: PathBuf::new(),
                message: "diacritics expansion needs a wordlist".into(),
            })?;
            resources
                .gazetteers
                .iter()
                .map(|g| expand_gazetteer(g, wl))
                .collect()
        } else {
            resources.gazetteers.clone()
        };
        Ok(Recognizer::new(
            gazetteers,
            resources.patterns.clone(),
            options,
        ))
    }

    pub fn from_config(cfg: &RecognizerConfig) -> Result<Self> {
        let resources = Resources::load(&cfg.resources)?;
        Recognizer::from_resources(
            &resources,
            cfg.capitalization_required,
            cfg.use_expanded_gazetteers,
        )
    }

    pub fn options(&self) -> RecognizerOptions {
        self.options
    }

    /// Whether a token may be part of a gazetteer name under the current options.
    pub fn is_plo_candidate(&self, token: &Token) -> bool {
        token.is_ne_eligible() && (!self.options.capitalization_required || token.initial_upper)
    }

    pub fn recognize(&self, doc: &Document) -> Vec<Entity> {
        let chars: Vec<char> = doc.text.chars().collect();
        let tokens = tokenize(doc);
        let folded: Vec<String> = tokens.iter().map(|t| turkish_fold(&t.surface)).collect();
        let ctx = Ctx {
            chars: &chars,
            tokens: &tokens,
            folded: &folded,
        };

        let mut candidates = Vec::new();
        for i in 0..tokens.len() {
            self.plo_candidates(&ctx, i, &mut candidates);
            self.pattern_candidates(&ctx, i, &mut candidates);
        }
        candidates.sort_by_key(Candidate::priority);

        let mut chosen: Vec<Candidate> = Vec::new();
        for c in candidates {
            if chosen.iter().all(|k| !k.span.overlaps(&c.span)) {
                chosen.push(c);
            }
        }
        chosen.sort_by_key(|c| c.span.start);
        chosen
            .into_iter()
            .map(|c| Entity {
                ne_type: c.ne_type,
                span: c.span,
                surface: chars[c.span.start..c.span.end].iter().collect(),
            })
            .collect()
    }

    fn plo_candidates(&self, ctx: &Ctx, start: usize, out: &mut Vec<Candidate>) {
        let mut node = 0;
        let mut best = None;
        for j in start..ctx.tokens.len() {
            let tok = &ctx.tokens[j];
            if !self.is_plo_candidate(tok) || (j > start && !ctx.adjacent(j)) {
                break;
            }
            if let Some(t) = self.final_word_match(node, tok, &ctx.folded[j]) {
                best = Some((j, t));
            }
            if tok.apostrophe_index.is_some() {
                break;
            }
            match self.trie.child(node, &ctx.folded[j]) {
                Some(n) => node = n,
                None => break,
            }
        }
        if let Some((end, ne_type)) = best {
            out.push(Candidate {
                ne_type,
                span: ctx.token_span(start, end),
            });
        }
    }

    /// Type of the entry ending at `node`'s child when `tok` is that child plus a valid suffix.
    fn final_word_match(&self, node: usize, tok: &Token, folded: &str) -> Option<NeType> {
        let chars: Vec<char> = folded.chars().collect();
        if let Some(a) = tok.apostrophe_index {
            let stem: String = chars[..a].iter().collect();
            let suffix: String = chars[a + 1..].iter().collect();
            let t = self.trie.terminal(self.trie.child(node, &stem)?)?;
            return validate_suffix(&suffix, &stem).then_some(t);
        }
        let shortest = chars.len().saturating_sub(MAX_SUFFIX_LEN).max(1);
        for k in (shortest..=chars.len()).rev() {
            let stem: String = chars[..k].iter().collect();
            let Some(t) = self
                .trie
                .child(node, &stem)
                .and_then(|n| self.trie.terminal(n))
            else {
                continue;
            };
            let suffix: String = chars[k..].iter().collect();
            if validate_suffix(&suffix, &stem) {
                return Some(t);
            }
        }
        None
    }

    fn pattern_candidates(&self, ctx: &Ctx, i: usize, out: &mut Vec<Candidate>) {
        let mut push = |ne_type, end: usize| {
            out.push(Candidate {
                ne_type,
                span: ctx.token_span(i, end),
            })
        };
        if !ctx.tokens[i].is_ne_eligible() {
            return;
        }
        let word = ctx.folded[i].as_str();
        let next = ctx.next(i);

        // PERCENT
        if word
            .strip_prefix('%')
            .is_some_and(|rest| is_number(strip_numeric_suffix(rest)))
        {
            push(NeType::Percent, i);
        }
        if word == PERCENT_KEYWORD {
            if let Some(n) = next.filter(|&n| is_number(strip_numeric_suffix(&ctx.folded[n]))) {
                push(NeType::Percent, n);
            }
        }

        // MONEY
        if is_number(word) {
            if let Some(n) =
                next.filter(|&n| lexicon_match(&ctx.folded[n], &self.patterns.currency))
            {
                push(NeType::Money, n);
            }
        }

        // TIME
        if is_clock(strip_numeric_suffix(word)) {
            push(NeType::Time, i);
        }
        if word == TIME_KEYWORD {
            if let Some(n) = next.filter(|&n| {
                let w = strip_numeric_suffix(&ctx.folded[n]);
                is_clock(w) || is_hour(w)
            }) {
                push(NeType::Time, n);
            }
        }

        // DATE
        if is_day(word) {
            if let Some(m) = next.filter(|&m| self.month_word(&ctx.folded[m])) {
                let bare_month = self.patterns.month_number(&ctx.folded[m]).is_some();
                match ctx.next(m) {
                    Some(y) if bare_month && is_year(strip_numeric_suffix(&ctx.folded[y])) => {
                        push(NeType::Date, y)
                    }
                    _ => push(NeType::Date, m),
                }
            }
        }
        if is_numeric_date(strip_numeric_suffix(word)) {
            push(NeType::Date, i);
        }
        if self.patterns.month_number(word).is_some() {
            if let Some(y) = next.filter(|&y| is_year(strip_numeric_suffix(&ctx.folded[y]))) {
                push(NeType::Date, y);
            }
        }
        if lexicon_match(word, &self.patterns.relative_days)
            || lexicon_match(word, &self.patterns.weekdays)
        {
            push(NeType::Date, i);
        }
    }

    fn month_word(&self, folded: &str) -> bool {
        self.patterns.months.iter().any(|m| word_matches(folded, m))
    }
}

struct Ctx<'a> {
    chars: &'a [char],
    tokens: &'a [Token],
    folded: &'a [String],
}

impl Ctx<'_> {
    /// Token `j` follows token `j - 1` with only whitespace in between.
    fn adjacent(&self, j: usize) -> bool {
        let gap = &self.chars[self.tokens[j - 1].span.end..self.tokens[j].span.start];
        gap.iter().all(|c| c.is_whitespace())
    }

    fn next(&self, i: usize) -> Option<usize> {
        let n = i + 1;
        (n < self.tokens.len() && self.tokens[n].is_ne_eligible() && self.adjacent(n)).then_some(n)
    }

    fn token_span(&self, first: usize, last: usize) -> Span {
        Span {
            start: self.tokens[first].span.start,
            end: self.tokens[last].span.end,
        }
    }
}

/// `word` is `base`, or `base` with a valid suffix, glued on or after an apostrophe.
fn word_matches(word: &str, base: &str) -> bool {
    match word.char_indices().find(|&(_, c)| is_apostrophe(c)) {
        Some((at, c)) => &word[..at] == base && validate_suffix(&word[at + c.len_utf8()..], base),
        None => match_stem_with_suffix(word, base),
    }
}

fn lexicon_match(word: &str, set: &HashSet<String>) -> bool {
    set.contains(word) || set.iter().any(|base| word_matches(word, base))
}

/// Drops an apostrophe-attached alphabetic suffix such as `'te` in `2014'te`.
fn strip_numeric_suffix(word: &str) -> &str {
    match word.char_indices().find(|&(_, c)| is_apostrophe(c)) {
        Some((at, c)) if word[at + c.len_utf8()..].chars().all(char::is_alphabetic) => &word[..at],
        _ => word,
    }
}

/// Digits with optional `.`/`,` separators between digit groups.
pub fn is_number(s: &str) -> bool {
    !s.is_empty()
        && s.split(['.', ','])
            .all(|g| !g.is_empty() && g.chars().all(|c| c.is_ascii_digit()))
}

fn small_int(s: &str, max_digits: usize) -> Option<u32> {
    (!s.is_empty() && s.len() <= max_digits && s.chars().all(|c| c.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

fn is_hour(s: &str) -> bool {
    small_int(s, 2).is_some_and(|h| h <= 23)
}

fn is_clock(s: &str) -> bool {
    match s.split_once(':') {
        Some((h, m)) => is_hour(h) && m.len() == 2 && small_int(m, 2).is_some_and(|m| m <= 59),
        None => false,
    }
}

fn is_day(s: &str) -> bool {
    small_int(s, 2).is_some_and(|d| (1..=31).contains(&d))
}

fn is_year(s: &str) -> bool {
    s.len() == 4 && s.chars().all(|c| c.is_ascii_digit())
}

fn is_numeric_date(s: &str) -> bool {
    [".", "/"].into_iter().any(|sep| {
        let parts: Vec<&str> = s.split(sep).collect();
        parts.len() == 3
            && is_day(parts[0])
            && small_int(parts[1], 2).is_some_and(|m| (1..=12).contains(&m))
            && is_year(parts[2])
    })
}
