//! Entity-level scoring under strict and partial matching.
//!
//! Strict: a prediction counts only with the identical span and type.
//! Partial: a prediction counts when it overlaps a gold entity of the same
//! type. Matching is one-to-one and, for partial mode, of maximum
//! cardinality per document, so the score does not depend on entity order.
//! Aggregates are micro-averaged over the PLO types and over all seven.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::normalizer::{NormCategory, NormalizationRecord};
use crate::text::{Entity, NeType};

/// Gold or predicted entities per document.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnnotationSet {
    docs: BTreeMap<String, Vec<Entity>>,
}

impl AnnotationSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an entity, keeping the document's entities sorted and non-overlapping.
    pub fn insert(&mut self, doc_id: &str, entity: Entity) -> Result<(), String> {
        let list = self.docs.entry(doc_id.to_owned()).or_default();
        if let Some(clash) = list.iter().find(|e| e.span.overlaps(&entity.span)) {
            return Err(format!(
                "{} {} overlaps {} {} in document {doc_id}",
                entity.ne_type, entity.span, clash.ne_type, clash.span
            ));
        }
        let at = list.partition_point(|e| e.span.start < entity.span.start);
        list.insert(at, entity);
        Ok(())
    }

    /// Registers a document with no entities.
    pub fn touch(&mut self, doc_id: &str) {
        self.docs.entry(doc_id.to_owned()).or_default();
    }

    pub fn get(&self, doc_id: &str) -> &[Entity] {
        self.docs.get(doc_id).map_or(&[], Vec::as_slice)
    }

    pub fn doc_ids(&self) -> impl Iterator<Item = &str> {
        self.docs.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[Entity])> {
        self.docs.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn entity_count(&self) -> usize {
        self.docs.values().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchMode {
    Strict,
    Partial,
}

impl MatchMode {
    pub fn name(self) -> &'static str {
        match self {
            MatchMode::Strict => "strict",
            MatchMode::Partial => "partial",
        }
    }
}

/// How a partial (overlapping but not identical) match is credited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PartialCredit {
    /// Any type-consistent overlap is a full match.
    #[default]
    Binary,
    /// Exact matches score 1, other overlaps 0.5 (MUC-style).
    HalfWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Counts {
    /// Matched pairs.
    pub matched: usize,
    /// Credit from matched pairs; equals `matched` except under half-weight partial credit.
    pub credit: f64,
    pub predicted: usize,
    pub gold: usize,
}

impl Counts {
    fn add(&mut self, other: &Counts) {
        self.matched += other.matched;
        self.credit += other.credit;
        self.predicted += other.predicted;
        self.gold += other.gold;
    }

    pub fn precision(&self) -> f64 {
        percent(self.credit, self.predicted)
    }

    pub fn recall(&self) -> f64 {
        percent(self.credit, self.gold)
    }

    pub fn f(&self) -> f64 {
        f_measure(self.precision(), self.recall())
    }
}

fn percent(num: f64, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        100.0 * num / den as f64
    }
}

/// Balanced F-measure of two percentages; zero when both are zero.
pub fn f_measure(p: f64, r: f64) -> f64 {
    if p + r == 0.0 {
        0.0
    } else {
        2.0 * p * r / (p + r)
    }
}

/// Report columns: seven types, then the two aggregates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Column {
    Type(NeType),
    AllPlo,
    AllTypes,
}

impl Column {
    pub const ALL: [Column; 9] = [
        Column::Type(NeType::Person),
        Column::Type(NeType::Location),
        Column::Type(NeType::Organization),
        Column::Type(NeType::Date),
        Column::Type(NeType::Time),
        Column::Type(NeType::Money),
        Column::Type(NeType::Percent),
        Column::AllPlo,
        Column::AllTypes,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Column::Type(t) => t.label(),
            Column::AllPlo => "Overall for PLOs",
            Column::AllTypes => "Overall for 7 Types",
        }
    }

    /// Key used in `metric=` lines.
    pub fn key(self) -> &'static str {
        match self {
            Column::Type(t) => t.code(),
            Column::AllPlo => "PLO",
            Column::AllTypes => "ALL",
        }
    }
}

/// Scores for one matching mode.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalBlock {
    pub mode: MatchMode,
    pub credit: PartialCredit,
    pub per_type: BTreeMap<NeType, Counts>,
}

impl EvalBlock {
    pub fn counts(&self, column: Column) -> Counts {
        let mut total = Counts::default();
        for (t, c) in &self.per_type {
            let include = match column {
                Column::Type(x) => x == *t,
                Column::AllPlo => t.is_plo(),
                Column::AllTypes => true,
            };
            if include {
                total.add(c);
            }
        }
        total
    }
}

/// Size of a maximum one-to-one matching between gold and predicted entities.
///
/// `compatible` decides which pairs may be matched. Augmenting paths
/// (Kuhn's algorithm), which is exact for any bipartite graph.
pub fn max_matching<F>(gold: &[Entity], pred: &[Entity], compatible: F) -> usize
where
    F: Fn(&Entity, &Entity) -> bool,
{
    let adj: Vec<Vec<usize>> = pred
        .iter()
        .map(|p| {
            gold.iter()
                .enumerate()
                .filter(|(_, g)| compatible(g, p))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; gold.len()];

    fn augment(
        p: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &g in &adj[p] {
            if seen[g] {
                continue;
            }
            seen[g] = true;
            if owner[g].is_none_or(|q| augment(q, adj, seen, owner)) {
                owner[g] = Some(p);
                return true;
            }
        }
        false
    }

    let mut size = 0;
    for p in 0..pred.len() {
        let mut seen = vec![false; gold.len()];
        if augment(p, &adj, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

fn exact(g: &Entity, p: &Entity) -> bool {
    g.ne_type == p.ne_type && g.span == p.span
}

fn overlapping(g: &Entity, p: &Entity) -> bool {
    g.ne_type == p.ne_type && g.span.overlaps(&p.span)
}

/// Matched pairs and credit for one document and one type.
fn match_doc(
    gold: &[Entity],
    pred: &[Entity],
    mode: MatchMode,
    credit: PartialCredit,
) -> (usize, f64) {
    match (mode, credit) {
        (MatchMode::Strict, _) => {
            let m = max_matching(gold, pred, exact);
            (m, m as f64)
        }
        (MatchMode::Partial, PartialCredit::Binary) => {
            let m = max_matching(gold, pred, overlapping);
            (m, m as f64)
        }
        (MatchMode::Partial, PartialCredit::HalfWeight) => {
            let strict: Vec<(usize, usize)> = pred
                .iter()
                .enumerate()
                .filter_map(|(pi, p)| gold.iter().position(|g| exact(g, p)).map(|gi| (gi, pi)))
                .collect();
            let rest_gold: Vec<Entity> = gold
                .iter()
                .enumerate()
                .filter(|(i, _)| !strict.iter().any(|&(g, _)| g == *i))
                .map(|(_, e)| e.clone())
                .collect();
            let rest_pred: Vec<Entity> = pred
                .iter()
                .enumerate()
                .filter(|(i, _)| !strict.iter().any(|&(_, p)| p == *i))
                .map(|(_, e)| e.clone())
                .collect();
            let partial = max_matching(&rest_gold, &rest_pred, overlapping);
            (
                strict.len() + partial,
                strict.len() as f64 + 0.5 * partial as f64,
            )
        }
    }
}

pub fn evaluate(
    gold: &AnnotationSet,
    pred: &AnnotationSet,
    mode: MatchMode,
    credit: PartialCredit,
) -> EvalBlock {
    let mut per_type: BTreeMap<NeType, Counts> = NeType::ALL
        .iter()
        .map(|&t| (t, Counts::default()))
        .collect();
    let mut doc_ids: Vec<&str> = gold.doc_ids().chain(pred.doc_ids()).collect();
    doc_ids.sort_unstable();
    doc_ids.dedup();

    for id in doc_ids {
        for t in NeType::ALL {
            let g: Vec<Entity> = gold
                .get(id)
                .iter()
                .filter(|e| e.ne_type == t)
                .cloned()
                .collect();
            let p: Vec<Entity> = pred
                .get(id)
                .iter()
                .filter(|e| e.ne_type == t)
                .cloned()
                .collect();
            let (matched, c) = match_doc(&g, &p, mode, credit);
            per_type.get_mut(&t).expect("all types").add(&Counts {
                matched,
                credit: c,
                predicted: p.len(),
                gold: g.len(),
            });
        }
    }
    EvalBlock {
        mode,
        credit,
        per_type,
    }
}

pub fn evaluate_strict(gold: &AnnotationSet, pred: &AnnotationSet) -> EvalBlock {
    evaluate(gold, pred, MatchMode::Strict, PartialCredit::Binary)
}

pub fn evaluate_partial(gold: &AnnotationSet, pred: &AnnotationSet) -> EvalBlock {
    evaluate(gold, pred, MatchMode::Partial, PartialCredit::Binary)
}

type Metric = fn(&Counts) -> f64;

/// One or two scored blocks, rendered as a table plus `metric=` lines.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub blocks: Vec<EvalBlock>,
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = Column::ALL.iter().map(|c| c.label().len().max(7)).collect();
        let mut header = format!("{:<8} {:<6}", "Mode", "Metric");
        for (c, w) in Column::ALL.iter().zip(&widths) {
            write!(header, " | {:>w$}", c.label(), w = w)?;
        }
        writeln!(f, "{header}")?;
        writeln!(f, "{}", "-".repeat(header.chars().count()))?;
        for block in &self.blocks {
            let mode = match (block.mode, block.credit) {
                (MatchMode::Partial, PartialCredit::HalfWeight) => "partial*",
                (m, _) => m.name(),
            };
            let rows: [(&str, Metric); 3] = [
                ("P (%)", Counts::precision),
                ("R (%)", Counts::recall),
                ("F (%)", Counts::f),
            ];
            for (name, metric) in rows {
                write!(f, "{mode:<8} {name:<6}")?;
                for (c, w) in Column::ALL.iter().zip(&widths) {
                    write!(f, " | {:>w$.2}", metric(&block.counts(*c)), w = w)?;
                }
                writeln!(f)?;
            }
        }
        if self
            .blocks
            .iter()
            .any(|b| b.mode == MatchMode::Partial && b.credit == PartialCredit::HalfWeight)
        {
            writeln!(f, "partial* = exact matches 1.0, other overlaps 0.5")?;
        }
        writeln!(f)?;
        for block in &self.blocks {
            let mode = match (block.mode, block.credit) {
                (MatchMode::Partial, PartialCredit::HalfWeight) => "partial_half",
                (m, _) => m.name(),
            };
            for c in Column::ALL {
                let counts = block.counts(c);
                for (m, v) in [
                    ("P", counts.precision()),
                    ("R", counts.recall()),
                    ("F", counts.f()),
                ] {
                    writeln!(f, "metric={mode}.{}.{m} value={v:.2}", c.key())?;
                }
            }
        }
        Ok(())
    }
}

/// Frequency table in the order Person, Location, Organization, All PLOs, Date, Time, Money, Percent, All NEs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub per_type: BTreeMap<NeType, usize>,
}

impl Stats {
    pub fn count(&self, t: NeType) -> usize {
        self.per_type.get(&t).copied().unwrap_or(0)
    }

    pub fn plos(&self) -> usize {
        NeType::PLO.iter().map(|&t| self.count(t)).sum()
    }

    pub fn all(&self) -> usize {
        NeType::ALL.iter().map(|&t| self.count(t)).sum()
    }

    pub fn rows(&self) -> Vec<(&'static str, usize)> {
        let c = |t| (NeType::label(t), self.count(t));
        vec![
            c(NeType::Person),
            c(NeType::Location),
            c(NeType::Organization),
            ("All PLOs", self.plos()),
            c(NeType::Date),
            c(NeType::Time),
            c(NeType::Money),
            c(NeType::Percent),
            ("All NEs", self.all()),
        ]
    }
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<14} {:>9}", "NE Type", "Frequency")?;
        for (label, n) in self.rows() {
            writeln!(f, "{label:<14} {:>9}", group_thousands(n))?;
        }
        Ok(())
    }
}

fn group_thousands(n: usize) -> String {
    let digits = n.to_string();
    let mut out = String::new();
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    out
}

pub fn stats(gold: &AnnotationSet) -> Stats {
    let mut per_type: BTreeMap<NeType, usize> = NeType::ALL.iter().map(|&t| (t, 0)).collect();
    for (_, entities) in gold.iter() {
        for e in entities {
            *per_type.entry(e.ne_type).or_default() += 1;
        }
    }
    Stats { per_type }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormPrecision {
    pub evaluable: usize,
    pub correct: usize,
    pub precision: f64,
}

impl fmt::Display for NormPrecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "evaluable={}", self.evaluable)?;
        writeln!(f, "correct={}", self.correct)?;
        writeln!(f, "precision={:.2}", self.precision)
    }
}

/// Precision of the normalizer over records counted for evaluation.
pub fn normalization_precision(
    records: &[NormalizationRecord],
    gold: &BTreeMap<String, String>,
) -> NormPrecision {
    let evaluable: Vec<&NormalizationRecord> = records
        .iter()
        .filter(|r| r.category == NormCategory::Evaluable)
        .collect();
    let correct = evaluable
        .iter()
        .filter(|r| gold.get(&r.original) == Some(&r.normalized))
        .count();
    NormPrecision {
        evaluable: evaluable.len(),
        correct,
        precision: percent(correct as f64, evaluable.len()),
    }
}

/// Builds an annotation set, rejecting overlapping entities within a document.
pub fn annotation_set<'a, I>(items: I) -> Result<AnnotationSet, String>
where
    I: IntoIterator<Item = (&'a str, Entity)>,
{
    let mut set = AnnotationSet::new();
    for (id, e) in items {
        set.insert(id, e)?;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Span;

    fn e(t: NeType, s: usize, end: usize) -> Entity {
        Entity::new(t, Span { start: s, end }, "x")
    }

    fn set(items: &[(&str, Entity)]) -> AnnotationSet {
        annotation_set(items.iter().map(|(d, e)| (*d, e.clone()))).unwrap()
    }

    #[test]
    fn f_measure_examples() {
        assert!((f_measure(64.16, 36.53) - 46.55).abs() <= 0.02);
        assert_eq!(f_measure(0.0, 0.0), 0.0);
        assert_eq!(f_measure(50.0, 50.0), 50.0);
    }

    #[test]
    fn identity_scores_hundred() {
        let g = set(&[("a", e(NeType::Person, 0, 3)), ("a", e(NeType::Date, 5, 9))]);
        for block in [evaluate_strict(&g, &g), evaluate_partial(&g, &g)] {
            for c in [Column::AllPlo, Column::AllTypes, Column::Type(NeType::Date)] {
                let n = block.counts(c);
                assert_eq!((n.precision(), n.recall(), n.f()), (100.0, 100.0, 100.0));
            }
        }
    }

    #[test]
    fn strict_needs_exact_span() {
        let g = set(&[("a", e(NeType::Person, 0, 3))]);
        let p = set(&[("a", e(NeType::Person, 0, 5))]);
        let n = evaluate_strict(&g, &p).counts(Column::AllTypes);
        assert_eq!(n.matched, 0);
        assert_eq!(n.f(), 0.0);
        assert_eq!(evaluate_partial(&g, &p).counts(Column::AllTypes).matched, 1);
    }

    #[test]
    fn plo_aggregate_half() {
        let g = set(&[
            ("a", e(NeType::Person, 0, 3)),
            ("a", e(NeType::Location, 10, 16)),
        ]);
        let p = set(&[
            ("a", e(NeType::Person, 0, 3)),
            ("a", e(NeType::Location, 9, 16)),
        ]);
        let n = evaluate_strict(&g, &p).counts(Column::AllPlo);
        assert_eq!((n.precision(), n.recall(), n.f()), (50.0, 50.0, 50.0));
    }

    #[test]
    fn partial_requires_same_type() {
        let g = set(&[("a", e(NeType::Location, 9, 16))]);
        let p = set(&[("a", e(NeType::Location, 10, 16))]);
        assert_eq!(evaluate_partial(&g, &p).counts(Column::AllTypes).f(), 100.0);
        assert_eq!(evaluate_strict(&g, &p).counts(Column::AllTypes).f(), 0.0);
        let p = set(&[("a", e(NeType::Person, 10, 16))]);
        assert_eq!(evaluate_partial(&g, &p).counts(Column::AllTypes).f(), 0.0);
    }

    #[test]
    fn half_weight_credit() {
        let g = set(&[
            ("a", e(NeType::Location, 0, 5)),
            ("a", e(NeType::Location, 9, 16)),
        ]);
        let p = set(&[
            ("a", e(NeType::Location, 0, 5)),
            ("a", e(NeType::Location, 10, 16)),
        ]);
        let b = evaluate(&g, &p, MatchMode::Partial, PartialCredit::HalfWeight);
        let n = b.counts(Column::AllTypes);
        assert_eq!(n.matched, 2);
        assert_eq!(n.credit, 1.5);
        assert_eq!(n.precision(), 75.0);
    }

    #[test]
    fn maximum_not_greedy() {
        // Greedy in input order would match p0-g0 and leave p1 unmatched.
        let gold = [e(NeType::Person, 0, 4), e(NeType::Person, 6, 9)];
        let pred = [e(NeType::Person, 2, 7), e(NeType::Person, 0, 2)];
        assert_eq!(max_matching(&gold, &pred, overlapping), 2);
    }

    #[test]
    fn zero_denominators() {
        let empty = AnnotationSet::new();
        let n = evaluate_strict(&empty, &empty).counts(Column::AllTypes);
        assert_eq!((n.precision(), n.recall(), n.f()), (0.0, 0.0, 0.0));
    }

    #[test]
    fn overlapping_annotations_rejected() {
        let mut s = AnnotationSet::new();
        s.insert("a", e(NeType::Person, 0, 3)).unwrap();
        assert!(s.insert("a", e(NeType::Date, 2, 4)).is_err());
        s.insert("a", e(NeType::Date, 3, 4)).unwrap();
        s.insert("b", e(NeType::Date, 0, 4)).unwrap();
    }

    #[test]
    fn stats_table() {
        assert_eq!(stats(&AnnotationSet::new()).all(), 0);
        let g = set(&[
            ("a", e(NeType::Person, 0, 1)),
            ("a", e(NeType::Person, 2, 3)),
            ("b", e(NeType::Person, 0, 1)),
            ("b", e(NeType::Location, 2, 3)),
            ("c", e(NeType::Location, 0, 1)),
            ("c", e(NeType::Date, 2, 3)),
        ]);
        let s = stats(&g);
        assert_eq!(s.plos(), 5);
        assert_eq!(s.all(), 6);
        let labels: Vec<_> = s.rows().into_iter().map(|(l, _)| l).collect();
        assert_eq!(
            labels,
            [
                "Person",
                "Location",
                "Organization",
                "All PLOs",
                "Date",
                "Time",
                "Money",
                "Percent",
                "All NEs"
            ]
        );
        assert_eq!(group_thousands(1211), "1,211");
        assert_eq!(group_thousands(1140208), "1,140,208");
        assert_eq!(group_thousands(980), "980");
    }

    fn rec(o: &str, n: &str, c: NormCategory) -> NormalizationRecord {
        NormalizationRecord {
            doc_id: "d".into(),
            original: o.into(),
            normalized: n.into(),
            category: c,
        }
    }

    #[test]
    fn normalization_precision_examples() {
        let gold: BTreeMap<String, String> = [
            ("zamaanlaaa".to_string(), "zamanla".to_string()),
            ("Harry".into(), "Harry".into()),
        ]
        .into_iter()
        .collect();
        let r = normalization_precision(
            &[rec("zamaanlaaa", "zamanla", NormCategory::Evaluable)],
            &gold,
        );
        assert_eq!((r.evaluable, r.correct, r.precision), (1, 1, 100.0));
        let r = normalization_precision(&[rec("Harry", "Hary", NormCategory::Evaluable)], &gold);
        assert_eq!((r.evaluable, r.correct, r.precision), (1, 0, 0.0));
        let r = normalization_precision(&[rec(">>>>", ">", NormCategory::NonAlphaOnly)], &gold);
        assert_eq!((r.evaluable, r.correct, r.precision), (0, 0, 0.0));
    }

    #[test]
    fn report_lines() {
        let g = set(&[("a", e(NeType::Person, 0, 3))]);
        let report = EvalReport {
            blocks: vec![evaluate_strict(&g, &g), evaluate_partial(&g, &g)],
        };
        let text = report.to_string();
        assert!(text.contains("metric=strict.PER.P value=100.00"));
        assert!(text.contains("metric=partial.ALL.F value=100.00"));
        assert!(text.contains("metric=strict.LOC.R value=0.00"));
        assert!(text.contains("Overall for 7 Types"));
    }
}
