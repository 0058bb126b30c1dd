//! A deliberately small suffix grammar for validating inflected names.
//!
//! Accepted suffix shapes are `[plural]?[case]?`: the plural `-lAr` and one
//! of six case endings. Capitals in the templates below are harmony slots:
//! `A` is two-way (a/e), `I` is four-way (ı/i/u/ü), `D` is d or t depending
//! on whether the preceding sound is voiceless. A parenthesised consonant is
//! a buffer, required after a vowel and forbidden after a consonant.
//!
//! | case         | template |
//! |--------------|----------|
//! | dative       | `(y)A`   |
//! | locative     | `DA`     |
//! | ablative     | `DAn`    |
//! | genitive     | `(n)In`  |
//! | accusative   | `(y)I`   |
//! | instrumental | `(y)lA`  |
//!
//! Stems without vowels (acronyms) accept any harmony class.

use crate::text::{is_vowel, turkish_fold};

/// Longest accepted suffix, `-lardan`/`-lerden`.
pub const MAX_SUFFIX_LEN: usize = 6;

const VOICELESS: [char; 8] = ['f', 's', 't', 'k', 'ç', 'ş', 'h', 'p'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Dative,
    Locative,
    Ablative,
    Genitive,
    Accusative,
    Instrumental,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    TwoWay,
    FourWay,
    Voicing,
    Lit(char),
}

impl Case {
    pub const ALL: [Case; 6] = [
        Case::Dative,
        Case::Locative,
        Case::Ablative,
        Case::Genitive,
        Case::Accusative,
        Case::Instrumental,
    ];

    fn buffer(self) -> Option<char> {
        match self {
            Case::Dative | Case::Accusative | Case::Instrumental => Some('y'),
            Case::Genitive => Some('n'),
            Case::Locative | Case::Ablative => None,
        }
    }

    fn template(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            Case::Dative => &[TwoWay],
            Case::Locative => &[Voicing, TwoWay],
            Case::Ablative => &[Voicing, TwoWay, Lit('n')],
            Case::Genitive => &[FourWay, Lit('n')],
            Case::Accusative => &[FourWay],
            Case::Instrumental => &[Lit('l'), TwoWay],
        }
    }
}

/// Phonological context at the right edge of a (possibly already suffixed) stem.
#[derive(Debug, Clone, Copy)]
struct Edge {
    last_vowel: Option<char>,
    last_char: Option<char>,
}

impl Edge {
    fn of(folded: &[char]) -> Edge {
        Edge {
            last_vowel: folded.iter().rev().copied().find(|&c| is_vowel(c)),
            last_char: folded.last().copied(),
        }
    }

    fn ends_in_vowel(&self) -> bool {
        self.last_char.is_some_and(is_vowel)
    }

    fn after(self, c: char) -> Edge {
        Edge {
            last_vowel: if is_vowel(c) {
                Some(c)
            } else {
                self.last_vowel
            },
            last_char: Some(c),
        }
    }

    fn two_way(&self) -> &'static [char] {
        match self.last_vowel {
            None => &['a', 'e'],
            Some('a' | 'ı' | 'o' | 'u' | 'â' | 'û') => &['a'],
            Some(_) => &['e'],
        }
    }

    fn four_way(&self) -> &'static [char] {
        match self.last_vowel {
            None => &['ı', 'i', 'u', 'ü'],
            Some('a' | 'ı' | 'â') => &['ı'],
            Some('e' | 'i' | 'î') => &['i'],
            Some('o' | 'u' | 'û') => &['u'],
            Some(_) => &['ü'],
        }
    }

    fn voicing(&self) -> char {
        match self.last_char {
            Some(c) if VOICELESS.contains(&c) => 't',
            _ => 'd',
        }
    }

    fn admits(&self, slot: Slot, c: char) -> bool {
        match slot {
            Slot::TwoWay => self.two_way().contains(&c),
            Slot::FourWay => self.four_way().contains(&c),
            Slot::Voicing => self.voicing() == c,
            Slot::Lit(l) => l == c,
        }
    }
}

/// Consumes `slots` from the front of `input`, returning the rest and the new edge.
fn consume<'a>(input: &'a [char], slots: &[Slot], mut edge: Edge) -> Option<(&'a [char], Edge)> {
    if input.len() < slots.len() {
        return None;
    }
    for (&slot, &c) in slots.iter().zip(input) {
        if !edge.admits(slot, c) {
            return None;
        }
        edge = edge.after(c);
    }
    Some((&input[slots.len()..], edge))
}

fn consume_case(input: &[char], case: Case, edge: Edge) -> bool {
    let mut rest = input;
    let mut edge = edge;
    if let Some(buffer) = case.buffer() {
        if edge.ends_in_vowel() {
            match rest.split_first() {
                Some((&c, tail)) if c == buffer => {
                    rest = tail;
                    edge = edge.after(c);
                }
                _ => return false,
            }
        }
    }
    matches!(consume(rest, case.template(), edge), Some((tail, _)) if tail.is_empty())
}

const PLURAL: [Slot; 3] = [Slot::Lit('l'), Slot::TwoWay, Slot::Lit('r')];

/// Whether `suffix` is a well-formed `[plural]?[case]?` ending for `stem`.
pub fn validate_suffix(suffix: &str, stem: &str) -> bool {
    let suffix: Vec<char> = turkish_fold(suffix).chars().collect();
    if suffix.is_empty() {
        return true;
    }
    if suffix.len() > MAX_SUFFIX_LEN {
        return false;
    }
    let stem: Vec<char> = turkish_fold(stem).chars().collect();
    let edge = Edge::of(&stem);

    let case_only = Case::ALL.iter().any(|&c| consume_case(&suffix, c, edge));
    if case_only {
        return true;
    }
    match consume(&suffix, &PLURAL, edge) {
        Some((rest, edge)) => {
            rest.is_empty() || Case::ALL.iter().any(|&c| consume_case(rest, c, edge))
        }
        None => false,
    }
}

/// Whether `token` is `stem` followed by a valid suffix (possibly empty), case-insensitively.
pub fn match_stem_with_suffix(token: &str, stem: &str) -> bool {
    let token = turkish_fold(token);
    let stem_folded = turkish_fold(stem);
    match token.strip_prefix(stem_folded.as_str()) {
        Some(rest) => !stem_folded.is_empty() && validate_suffix(rest, &stem_folded),
        None => false,
    }
}

fn realize(slots: &[Slot], edge: Edge, prefix: String, out: &mut Vec<(String, Edge)>) {
    let Some((&slot, rest)) = slots.split_first() else {
        out.push((prefix, edge));
        return;
    };
    let choices: Vec<char> = match slot {
        Slot::TwoWay => edge.two_way().to_vec(),
        Slot::FourWay => edge.four_way().to_vec(),
        Slot::Voicing => vec![edge.voicing()],
        Slot::Lit(c) => vec![c],
    };
    for c in choices {
        let mut p = prefix.clone();
        p.push(c);
        realize(rest, edge.after(c), p, out);
    }
}

fn case_forms(case: Case, edge: Edge) -> Vec<(String, Edge)> {
    let (prefix, edge) = match case.buffer() {
        Some(b) if edge.ends_in_vowel() => (b.to_string(), edge.after(b)),
        _ => (String::new(), edge),
    };
    let mut out = Vec::new();
    realize(case.template(), edge, prefix, &mut out);
    out
}

/// Every non-empty suffix the grammar accepts after `stem`, folded.
pub fn suffixes_for(stem: &str) -> Vec<String> {
    let stem: Vec<char> = turkish_fold(stem).chars().collect();
    let edge = Edge::of(&stem);
    let mut out = Vec::new();
    for case in Case::ALL {
        out.extend(case_forms(case, edge).into_iter().map(|(s, _)| s));
    }
    let mut plurals = Vec::new();
    realize(&PLURAL, edge, String::new(), &mut plurals);
    for (plural, edge) in plurals {
        for case in Case::ALL {
            out.extend(
                case_forms(case, edge)
                    .into_iter()
                    .map(|(s, _)| format!("{plural}{s}")),
            );
        }
        out.push(plural);
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dative_after_vowel_needs_buffer() {
        assert!(validate_suffix("ya", "Ankara"));
        assert!(!validate_suffix("a", "Ankara"));
        assert!(validate_suffix("e", "İzmit"));
        assert!(!validate_suffix("a", "İzmit"));
        assert!(!validate_suffix("ye", "İzmit"));
        assert!(validate_suffix("e", "İzmir"));
    }

    #[test]
    fn empty_suffix_always_valid() {
        assert!(validate_suffix("", "Ankara"));
        assert!(validate_suffix("", "TBMM"));
    }

    #[test]
    fn harmony_violations_rejected() {
        assert!(!validate_suffix("de", "Ankara"));
        assert!(validate_suffix("da", "Ankara"));
        assert!(validate_suffix("de", "Emre"));
        assert!(validate_suffix("nın", "Ankara"));
        assert!(validate_suffix("nun", "Bolu"));
        assert!(!validate_suffix("nün", "Ürgüp"));
        assert!(validate_suffix("ün", "Ürgüp"));
        assert!(validate_suffix("ün", "Köln"));
        assert!(!validate_suffix("in", "Köln"));
    }

    #[test]
    fn voiceless_stems_take_t() {
        assert!(validate_suffix("te", "İzmit"));
        assert!(!validate_suffix("de", "İzmit"));
        assert!(validate_suffix("tan", "Sivas"));
        assert!(validate_suffix("dan", "Ankara"));
        assert!(validate_suffix("den", "İzmir"));
    }

    #[test]
    fn plural_then_case() {
        assert!(!validate_suffix("lar", "Ahmet"));
        assert!(validate_suffix("ler", "Ahmet"));
        assert!(validate_suffix("lerden", "Ahmet"));
        assert!(!validate_suffix("lardan", "Ali"));
        assert!(validate_suffix("lerden", "Ali"));
        assert!(validate_suffix("ların", "Ankara"));
        assert!(validate_suffix("ları", "Ankara"));
        assert!(validate_suffix("lara", "Ankara"));
        assert!(!validate_suffix("larya", "Ankara"));
        assert!(!validate_suffix("dalar", "Ankara"));
        assert!(!validate_suffix("larlar", "Ankara"));
    }

    #[test]
    fn instrumental() {
        assert!(validate_suffix("yla", "Ankara"));
        assert!(!validate_suffix("la", "Ahmet"));
        assert!(validate_suffix("le", "Ahmet"));
        assert!(!validate_suffix("la", "Ankara"));
    }

    #[test]
    fn vowelless_stems_accept_any_harmony() {
        for s in ["de", "da", "ı", "i", "u", "ü", "ın", "ün", "ler", "lara"] {
            assert!(validate_suffix(s, "TBMM"), "{s}");
        }
        assert!(!validate_suffix("ye", "TBMM"));
    }

    #[test]
    fn suffixes_are_case_insensitive() {
        assert!(validate_suffix("YA", "ANKARA"));
        assert!(validate_suffix("DA", "ISPARTA"));
    }

    #[test]
    fn stem_matching() {
        assert!(match_stem_with_suffix("ankaraya", "Ankara"));
        assert!(match_stem_with_suffix("ankara", "Ankara"));
        assert!(!match_stem_with_suffix("ankarax", "Ankara"));
        assert!(!match_stem_with_suffix("ankar", "Ankara"));
        assert!(match_stem_with_suffix("İSTANBULDA", "istanbul"));
    }

    #[test]
    fn no_suffix_longer_than_six() {
        for stem in ["Ankara", "İzmit", "Ürgüp", "TBMM", "Emre"] {
            let all = suffixes_for(stem);
            assert!(all.iter().all(|s| s.chars().count() <= MAX_SUFFIX_LEN));
            assert!(all.iter().any(|s| s.chars().count() == MAX_SUFFIX_LEN));
            assert!(!validate_suffix("larından", stem));
        }
    }

    #[test]
    fn generated_suffixes_validate() {
        for stem in [
            "Ankara", "İzmit", "Ürgüp", "Bolu", "Köln", "TBMM", "Emre", "Sivas",
        ] {
            for s in suffixes_for(stem) {
                assert!(validate_suffix(&s, stem), "{stem} + {s}");
            }
        }
    }
}
