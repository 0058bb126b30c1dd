//! Offset-preserving whitespace tokenizer for tweets.
//!
//! Text is split on whitespace runs. Leading and trailing punctuation is
//! trimmed off each fragment and dropped, except that apostrophes stay in
//! place, a `#` or `@` directly before an alphanumeric character stays as
//! the first character, and `%` directly before a digit stays. A fragment
//! without any alphanumeric character is kept whole, and so is an emoticon
//! such as `:DDDDD` or `;-p`, so they survive for the normalizer. Fragments
//! starting with `http` are URLs.

use crate::text::{fold_char, is_apostrophe, Document, Span, Token, TokenKind};

pub fn tokenize(doc: &Document) -> Vec<Token> {
    tokenize_str(&doc.text)
}

pub fn tokenize_str(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() {
            i += 1;
        }
        if let Some(token) = fragment_token(&chars, start, i) {
            tokens.push(token);
        }
    }
    tokens
}

fn fragment_token(chars: &[char], start: usize, end: usize) -> Option<Token> {
    let fragment = &chars[start..end];
    if !fragment.iter().any(|c| c.is_alphanumeric()) || is_emoticon(fragment) {
        return Some(make_token(chars, start, end, TokenKind::Symbol));
    }

    let mut lo = start;
    while lo < end && !keeps_leading(chars, lo, end) {
        lo += 1;
    }
    let mut hi = end;
    while hi > lo && !(chars[hi - 1].is_alphanumeric() || is_apostrophe(chars[hi - 1])) {
        hi -= 1;
    }
    if lo >= hi {
        return None;
    }

    let kind = match chars[lo] {
        '#' => TokenKind::Hashtag,
        '@' => TokenKind::Mention,
        _ if starts_with_http(&chars[lo..hi]) => TokenKind::Url,
        _ => TokenKind::Word,
    };
    Some(make_token(chars, lo, hi, kind))
}

/// Eyes, an optional nose, then a mouth built from one repeated letter plus symbols.
fn is_emoticon(fragment: &[char]) -> bool {
    let Some((&eyes, rest)) = fragment.split_first() else {
        return false;
    };
    if !matches!(eyes, ':' | ';' | '=') {
        return false;
    }
    let mouth = rest.strip_prefix(&['-']).unwrap_or(rest);
    let mut letters = mouth.iter().filter(|c| c.is_alphanumeric());
    let Some(&first) = letters.next() else {
        return !mouth.is_empty();
    };
    "DdPpOoSsXx3".contains(first) && letters.all(|&c| c == first)
}

fn keeps_leading(chars: &[char], at: usize, end: usize) -> bool {
    let c = chars[at];
    let next = (at + 1 < end).then(|| chars[at + 1]);
    c.is_alphanumeric()
        || is_apostrophe(c)
        || (matches!(c, '#' | '@') && next.is_some_and(char::is_alphanumeric))
        || (c == '%' && next.is_some_and(|n| n.is_ascii_digit()))
}

fn starts_with_http(chars: &[char]) -> bool {
    chars.len() >= 4 && chars[..4].iter().map(|&c| fold_char(c)).eq("http".chars())
}

fn make_token(chars: &[char], start: usize, end: usize, kind: TokenKind) -> Token {
    let slice = &chars[start..end];
    Token {
        surface: slice.iter().collect(),
        span: Span { start, end },
        kind,
        initial_upper: slice
            .iter()
            .find(|c| c.is_alphabetic())
            .is_some_and(|c| c.is_uppercase()),
        apostrophe_index: slice.iter().position(|&c| is_apostrophe(c)),
    }
}
