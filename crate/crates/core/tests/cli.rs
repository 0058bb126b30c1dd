use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tweet-ner"))
}

fn sample(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("resources/sample")
        .join(name)
}

fn run(args: &[&Path]) -> Output {
    let mut cmd = bin();
    for a in args {
        cmd.arg(a);
    }
    cmd.output().expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(s: &str) -> &Path {
    Path::new(s)
}

#[test]
fn empty_corpus_gives_empty_output() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("empty.tsv");
    let out = dir.path().join("pred.tsv");
    fs::write(&corpus, "").unwrap();
    let o = run(&[
        p("recognize"),
        &corpus,
        p("--config"),
        &sample("sample.conf"),
        p("--out"),
        &out,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&out).unwrap(), "");
}

#[test]
fn missing_gazetteer_is_a_resource_error() {
    let dir = TempDir::new().unwrap();
    let conf = dir.path().join("run.conf");
    fs::write(&conf, "location_gazetteer = nowhere/loc.txt\n").unwrap();
    let corpus = dir.path().join("c.tsv");
    fs::write(&corpus, "t1\tAnkara\n").unwrap();
    let o = run(&[
        p("recognize"),
        &corpus,
        p("--config"),
        &conf,
        p("--out"),
        &dir.path().join("o.tsv"),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nowhere/loc.txt"), "{}", stderr(&o));
}

#[test]
fn unknown_config_key_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let conf = dir.path().join("run.conf");
    fs::write(&conf, "# ok\ncolour = blue\n").unwrap();
    let corpus = dir.path().join("c.tsv");
    fs::write(&corpus, "t1\tAnkara\n").unwrap();
    let o = run(&[
        p("recognize"),
        &corpus,
        p("--config"),
        &conf,
        p("--out"),
        &dir.path().join("o.tsv"),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":2"), "{}", stderr(&o));
}

#[test]
fn malformed_corpus_is_a_data_error() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("c.tsv");
    fs::write(&corpus, "t1\tAnkara\nno tab here\n").unwrap();
    let o = run(&[
        p("recognize"),
        &corpus,
        p("--config"),
        &sample("sample.conf"),
        p("--out"),
        &dir.path().join("o.tsv"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(":2"), "{}", stderr(&o));
}

#[test]
fn malformed_annotations_are_a_data_error() {
    let dir = TempDir::new().unwrap();
    let gold = dir.path().join("g.tsv");
    fs::write(&gold, "t1\t0\t6\tCITY\tAnkara\n").unwrap();
    let o = run(&[p("stats"), &gold]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("g.tsv:1"), "{}", stderr(&o));
}

#[test]
fn recognize_then_evaluate_against_itself_is_perfect() {
    let dir = TempDir::new().unwrap();
    for command in ["recognize", "pipeline"] {
        let pred = dir.path().join(format!("{command}.tsv"));
        let o = run(&[
            p(command),
            &sample("corpus.tsv"),
            p("--config"),
            &sample("sample.conf"),
            p("--out"),
            &pred,
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let o = run(&[p("evaluate"), &pred, &pred, &sample("corpus.tsv")]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let report = stdout(&o);
        for mode in ["strict", "partial"] {
            for m in ["P", "R", "F"] {
                let line = format!("metric={mode}.ALL.{m} value=100.00");
                assert!(
                    report.contains(&line),
                    "{command}: missing {line}\n{report}"
                );
            }
        }
    }
}

#[test]
fn pipeline_writes_records_and_scores_against_gold() {
    let dir = TempDir::new().unwrap();
    let pred = dir.path().join("pred.tsv");
    let records = dir.path().join("norm.tsv");
    let o = run(&[
        p("pipeline"),
        &sample("corpus.tsv"),
        p("--config"),
        &sample("sample.conf"),
        p("--out"),
        &pred,
        p("--norm-records"),
        &records,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let recs = fs::read_to_string(&records).unwrap();
    assert!(recs.contains("t3\tankaraaa\tankara\tEVALUABLE\n"));
    assert!(recs.contains("t3\t:DDDDD\t:D\tEMOTICON\n"));

    let o = run(&[
        p("evaluate"),
        &sample("gold.tsv"),
        &pred,
        &sample("corpus.tsv"),
        p("--mode"),
        p("strict"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = stdout(&o);
    assert!(
        report.contains("metric=strict.ALL.F value=89.66"),
        "{report}"
    );
    assert!(!report.contains("metric=partial"));

    let o = run(&[p("norm-report"), &records, &sample("gold_norms.tsv")]);
    assert_eq!(stdout(&o), "evaluable=4\ncorrect=3\nprecision=75.00\n");
}

#[test]
fn half_weight_partial_credit_is_labelled() {
    let dir = TempDir::new().unwrap();
    let pred = dir.path().join("pred.tsv");
    run(&[
        p("pipeline"),
        &sample("corpus.tsv"),
        p("--config"),
        &sample("sample.conf"),
        p("--out"),
        &pred,
    ]);
    let o = run(&[
        p("evaluate"),
        &sample("gold.tsv"),
        &pred,
        &sample("corpus.tsv"),
        p("--mode"),
        p("partial"),
        p("--partial-credit"),
        p("half"),
    ]);
    let report = stdout(&o);
    assert!(
        report.contains("partial* = exact matches 1.0, other overlaps 0.5"),
        "{report}"
    );
    assert!(
        report.contains("metric=partial_half.PER.P value=75.00"),
        "{report}"
    );
}

#[test]
fn expand_kibris() {
    let dir = TempDir::new().unwrap();
    let gaz = dir.path().join("loc.txt");
    let words = dir.path().join("words.txt");
    let out = dir.path().join("expanded.txt");
    fs::write(&gaz, "Kıbrıs\nAnkara\nŞişli\n").unwrap();
    fs::write(&words, "sisli\n").unwrap();
    let o = run(&[p("expand"), &gaz, &words, p("--out"), &out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut lines: Vec<String> = fs::read_to_string(&out)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    lines.sort();
    assert_eq!(
        lines,
        ["Ankara", "Kibris", "Kibrıs", "Kıbris", "Kıbrıs", "Sişli", "Şisli", "Şişli"]
    );
}

#[test]
fn stats_scale_echo() {
    let dir = TempDir::new().unwrap();
    let gold = dir.path().join("gold.tsv");
    let mut text = String::new();
    let plan = [
        ("PER", 457),
        ("LOC", 282),
        ("ORG", 241),
        ("DATE", 201),
        ("TIME", 5),
        ("MONEY", 16),
        ("PERCENT", 9),
    ];
    let mut n = 0;
    for (ty, count) in plan {
        for _ in 0..count {
            text.push_str(&format!("d{n}\t0\t1\t{ty}\tx\n"));
            n += 1;
        }
    }
    fs::write(&gold, text).unwrap();
    let o = run(&[p("stats"), &gold]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let table = stdout(&o);
    assert!(table.contains("All PLOs             980"), "{table}");
    assert!(table.contains("All NEs            1,211"), "{table}");
}

#[test]
fn full_size_wordlist_loads() {
    let dir = TempDir::new().unwrap();
    let words = dir.path().join("words.txt");
    let mut text = String::with_capacity(12 * 1_140_208);
    for i in 0..1_140_208u32 {
        text.push_str(&format!("w{i:07}\n"));
    }
    fs::write(&words, text).unwrap();
    let wl = tweet_ner::lexicon::load_wordlist(&words).unwrap();
    assert_eq!(wl.len(), 1_140_208);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let mut outs = Vec::new();
    for i in 0..2 {
        let pred = dir.path().join(format!("p{i}.tsv"));
        let rec = dir.path().join(format!("r{i}.tsv"));
        run(&[
            p("pipeline"),
            &sample("corpus.tsv"),
            p("--config"),
            &sample("sample.conf"),
            p("--out"),
            &pred,
            p("--norm-records"),
            &rec,
        ]);
        outs.push((fs::read(&pred).unwrap(), fs::read(&rec).unwrap()));
    }
    assert_eq!(outs[0], outs[1]);
}
