use std::io::Write;
use std::process::{Command, Output};

fn polarity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polarity")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, content: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("polarity-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(content.as_bytes()).unwrap();
    path
}

#[test]
fn parse_licensed_sentence() {
    let o = polarity(&["parse", "Nobody saw anybody"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("grammatical, 1 reading: nobody > anybody (linear)"));
}

#[test]
fn parse_unlicensed_sentence() {
    let o = polarity(&["parse", "Anybody saw nobody"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ungrammatical"));
}

#[test]
fn parse_unknown_word() {
    let o = polarity(&["parse", "Alice saw zed"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zed"));
}

#[test]
fn parse_shows_derivation() {
    let o = polarity(&["parse", "Alice saw Bob", "--show-derivation"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains('⊢'));
    assert!(text.contains("Lex"));
}

#[test]
fn sequents() {
    assert_eq!(polarity(&["sequent", "s0", "s+"]).status.code(), Some(0));
    assert_eq!(polarity(&["sequent", "np", "np"]).status.code(), Some(0));
    assert_eq!(polarity(&["sequent", "s-", "s0"]).status.code(), Some(1));
    assert_eq!(polarity(&["sequent", "s0 (", "s+"]).status.code(), Some(2));
}

#[test]
fn automaton_orders() {
    let o = polarity(&["fsm", "nobody", "anybody"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nobody > anybody (linear)"));

    let o = polarity(&["fsm", "somebody", "everybody"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" > ")).count(), 2);

    let o = polarity(&["fsm", "nobody", "somebody"]);
    let text = stdout(&o);
    assert!(text.contains("somebody > nobody"));
    assert!(!text.contains("nobody > somebody"));

    assert_eq!(polarity(&["fsm", "alice"]).status.code(), Some(2));
}

#[test]
fn builtin_corpus_passes() {
    let o = polarity(&["corpus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn wrong_expectation_fails() {
    let path = temp_file("wrong.tsv", "Anybody saw nobody\tok\n");
    let o = polarity(&["corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let path = temp_file("empty.tsv", "# nothing here\n");
    assert_eq!(polarity(&["corpus", path.to_str().unwrap()]).status.code(), Some(0));
    let path = temp_file("broken.tsv", "Nobody saw anybody\tmaybe\n");
    assert_eq!(polarity(&["corpus", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn custom_lexicon() {
    let path = temp_file("lex.txt", "alice := np\nbob := np\nsaw := (np \\ s0) / np\n");
    let o = polarity(&["parse", "Alice saw Bob", "--lexicon", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = polarity(&["parse", "Nobody saw Bob", "--lexicon", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let bad = temp_file("bad-lex.txt", "alice np\n");
    assert_eq!(polarity(&["parse", "Alice", "--lexicon", bad.to_str().unwrap()]).status.code(), Some(2));
    let missing = polarity(&["parse", "Alice", "--lexicon", "/nonexistent/lexicon.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn json_is_stable() {
    let args = ["parse", "Somebody saw everybody", "--json"];
    let a = polarity(&args);
    let b = polarity(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["readings"].as_array().unwrap().len(), 2);
}

#[test]
fn monotonicity_table() {
    let o = polarity(&["monotonicity", "nobody", "everybody", "--max-size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("nobody") && l.contains("yes")));
    assert_eq!(polarity(&["monotonicity", "--max-size", "9"]).status.code(), Some(2));
}
