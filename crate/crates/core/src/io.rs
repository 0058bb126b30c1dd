//! Tab-separated file formats.
//!
//! * corpus: `doc_id<TAB>text`, one tweet per line
//! * annotations (gold and predictions): `doc_id<TAB>start<TAB>end<TAB>TYPE<TAB>surface`
//! * normalization records: `doc_id<TAB>original<TAB>normalized<TAB>CATEGORY`
//! * normalization gold: `original<TAB>expected`
//!
//! Offsets are code points. Blank lines are skipped everywhere.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::evaluator::AnnotationSet;
use crate::normalizer::NormalizationRecord;
use crate::text::{Document, Entity, NeType, Span};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn data_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Data {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

/// Numbered non-blank lines, with a trailing `\r` removed.
fn lines(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty())
}

pub fn parse_corpus(content: &str, path: &Path) -> Result<Vec<Document>> {
    let mut seen = HashSet::new();
    let mut docs = Vec::new();
    for (n, line) in lines(content) {
        let (id, text) = line
            .split_once('\t')
            .ok_or_else(|| data_error(path, n, "expected doc_id<TAB>text"))?;
        if id.is_empty() {
            return Err(data_error(path, n, "empty document id"));
        }
        if text.contains('\t') {
            return Err(data_error(path, n, "tab inside tweet text"));
        }
        if !seen.insert(id.to_owned()) {
            return Err(data_error(path, n, format!("duplicate document id {id:?}")));
        }
        docs.push(Document::new(id, text));
    }
    Ok(docs)
}

pub fn read_corpus(path: &Path) -> Result<Vec<Document>> {
    parse_corpus(&read(path)?, path)
}

/// Parses annotations; with `corpus`, ids and surfaces are checked against the text.
pub fn parse_annotations(
    content: &str,
    path: &Path,
    corpus: Option<&[Document]>,
) -> Result<AnnotationSet> {
    let texts: Option<HashMap<&str, &Document>> =
        corpus.map(|c| c.iter().map(|d| (d.id.as_str(), d)).collect());
    let mut set = AnnotationSet::new();
    for (n, line) in lines(content) {
        let fields: Vec<&str> = line.split('\t').collect();
        let [id, start, end, ty, surface] = fields[..] else {
            return Err(data_error(
                path,
                n,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            ));
        };
        let start: usize = start
            .parse()
            .map_err(|_| data_error(path, n, format!("bad start offset {start:?}")))?;
        let end: usize = end
            .parse()
            .map_err(|_| data_error(path, n, format!("bad end offset {end:?}")))?;
        let span = Span::new(start, end).map_err(|e| data_error(path, n, e.to_string()))?;
        let ne_type: NeType = ty.parse().map_err(|e: String| data_error(path, n, e))?;
        if let Some(texts) = &texts {
            let doc = texts
                .get(id)
                .ok_or_else(|| data_error(path, n, format!("unknown document {id:?}")))?;
            match doc.slice(span) {
                Some(s) if s == surface => {}
                Some(s) => {
                    return Err(data_error(
                        path,
                        n,
                        format!("surface {surface:?} does not match text {s:?} at {span}"),
                    ))
                }
                None => {
                    return Err(data_error(
                        path,
                        n,
                        format!("span {span} outside document {id:?}"),
                    ))
                }
            }
        }
        set.insert(id, Entity::new(ne_type, span, surface))
            .map_err(|m| data_error(path, n, m))?;
    }
    if let Some(corpus) = corpus {
        for d in corpus {
            set.touch(&d.id);
        }
    }
    Ok(set)
}

pub fn read_annotations(path: &Path, corpus: Option<&[Document]>) -> Result<AnnotationSet> {
    parse_annotations(&read(path)?, path, corpus)
}

pub fn write_annotations<'a, W, I>(mut w: W, docs: I) -> std::io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = (&'a str, &'a [Entity])>,
{
    for (id, entities) in docs {
        for e in entities {
            writeln!(
                w,
                "{id}\t{}\t{}\t{}\t{}",
                e.span.start,
                e.span.end,
                e.ne_type.code(),
                e.surface
            )?;
        }
    }
    Ok(())
}

pub fn write_records<W: Write>(mut w: W, records: &[NormalizationRecord]) -> std::io::Result<()> {
    for r in records {
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            r.doc_id, r.original, r.normalized, r.category
        )?;
    }
    Ok(())
}

pub fn parse_records(content: &str, path: &Path) -> Result<Vec<NormalizationRecord>> {
    lines(content)
        .map(|(n, line)| {
            let fields: Vec<&str> = line.split('\t').collect();
            let [doc_id, original, normalized, category] = fields[..] else {
                return Err(data_error(
                    path,
                    n,
                    "expected doc_id, original, normalized, category",
                ));
            };
            Ok(NormalizationRecord {
                doc_id: doc_id.to_owned(),
                original: original.to_owned(),
                normalized: normalized.to_owned(),
                category: category
                    .parse()
                    .map_err(|e: String| data_error(path, n, e))?,
            })
        })
        .collect()
}

pub fn read_records(path: &Path) -> Result<Vec<NormalizationRecord>> {
    parse_records(&read(path)?, path)
}

pub fn parse_gold_norms(content: &str, path: &Path) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (n, line) in lines(content) {
        let (original, expected) = line
            .split_once('\t')
            .ok_or_else(|| data_error(path, n, "expected original<TAB>expected"))?;
        out.insert(original.to_owned(), expected.to_owned());
    }
    Ok(out)
}

pub fn read_gold_norms(path: &Path) -> Result<BTreeMap<String, String>> {
    parse_gold_norms(&read(path)?, path)
}

/// Creates `path` and hands a buffered writer to `f`.
pub fn write_file<F>(path: &Path, f: F) -> Result<()>
where
    F: FnOnce(&mut BufWriter<fs::File>) -> std::io::Result<()>,
{
    let wrap = |source| Error::Write {
        path: path.to_path_buf(),
        source,
    };
    let file = fs::File::create(path).map_err(wrap)?;
    let mut w = BufWriter::new(file);
    f(&mut w).map_err(wrap)?;
    w.flush().map_err(wrap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::NormCategory;

    fn p() -> &'static Path {
        Path::new("test.tsv")
    }

    #[test]
    fn corpus_parsing() {
        let docs = parse_corpus("1\tAnkara'ya gittim\n\n2\t\n", p()).unwrap();
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[1].text, "");
        let err = parse_corpus("1\ta\n1\tb\n", p()).unwrap_err();
        assert!(matches!(err, Error::Data { line: 2, .. }));
        assert_eq!(err.exit_code(), 1);
        assert!(parse_corpus("no tab here\n", p()).is_err());
        assert!(parse_corpus("1\ta\tb\n", p()).is_err());
        assert!(parse_corpus("", p()).unwrap().is_empty());
    }

    #[test]
    fn annotation_round_trip() {
        let corpus = parse_corpus("t1\tKıbrıs'ta 5 Ocak\n", p()).unwrap();
        let text = "t1\t0\t9\tLOC\tKıbrıs'ta\nt1\t10\t16\tDATE\t5 Ocak\n";
        let set = parse_annotations(text, p(), Some(&corpus)).unwrap();
        assert_eq!(set.entity_count(), 2);
        let mut out = Vec::new();
        write_annotations(&mut out, set.iter()).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), text);
    }

    #[test]
    fn annotation_errors_carry_line_numbers() {
        let corpus = parse_corpus("t1\tAnkara\n", p()).unwrap();
        let cases = [
            "t1\t0\t6\tLOC\n",
            "t1\tx\t6\tLOC\tAnkara\n",
            "t1\t6\t6\tLOC\tAnkara\n",
            "t1\t0\t6\tCITY\tAnkara\n",
            "t1\t0\t6\tLOC\tankara\n",
            "t1\t0\t9\tLOC\tAnkara\n",
            "t2\t0\t6\tLOC\tAnkara\n",
            "t1\t0\t6\tLOC\tAnkara\nt1\t2\t4\tLOC\tka\n",
        ];
        for (i, c) in cases.iter().enumerate() {
            let err = parse_annotations(c, p(), Some(&corpus)).unwrap_err();
            assert!(matches!(err, Error::Data { .. }), "case {i}: {err}");
        }
        // Without a corpus there is nothing to check surfaces against.
        assert!(parse_annotations("t2\t0\t6\tLOC\tAnkara\n", p(), None).is_ok());
    }

    #[test]
    fn records_round_trip() {
        let recs = vec![NormalizationRecord {
            doc_id: "t1".into(),
            original: ":DDDDD".into(),
            normalized: ":D".into(),
            category: NormCategory::Emoticon,
        }];
        let mut out = Vec::new();
        write_records(&mut out, &recs).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text, "t1\t:DDDDD\t:D\tEMOTICON\n");
        assert_eq!(parse_records(&text, p()).unwrap(), recs);
        assert!(parse_records("t1\ta\tb\tWRONG\n", p()).is_err());
    }

    #[test]
    fn gold_norms() {
        let g = parse_gold_norms("zamaanlaaa\tzamanla\nHarry\tHarry\n", p()).unwrap();
        assert_eq!(g["Harry"], "Harry");
        assert!(parse_gold_norms("x\n", p()).is_err());
    }
}
