mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use polarity_core::corpus::{builtin_corpus, parse_corpus, run_corpus, same_orders};
use polarity_core::fsm::{admissible_runs, machine_from_lexicon, predict};
use polarity_core::lexicon::{default_lexicon, load_lexicon, Lexicon};
use polarity_core::parser::{goal_types, parse_with_goals};
use polarity_core::prover::{prove, SearchBudget};
use polarity_core::readings::{inverted_pairs, Reading};
use polarity_core::semantics::{
    denotation, is_downward_entailing, is_upward_entailing, FiniteModel, QUANTIFIER_WORDS,
};
use polarity_core::syntax::{parse_formula, Formula, Label, Sequent, Structure, UnaryMode};

#[derive(Parser)]
#[command(name = "polarity", version, about = "Polarity-sensitive categorial parser")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a sentence and list its scope readings
    Parse {
        sentence: String,
        #[command(flatten)]
        opts: SearchOpts,
        /// Goal formula to use instead of the clause types s0 and s+
        #[arg(long)]
        goal: Option<String>,
    },
    /// Prove a sequent given as antecedent and succedent formulas
    Sequent {
        antecedent: String,
        succedent: String,
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// Admissible scope orders according to the polarity automaton
    Fsm {
        quantifiers: Vec<String>,
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run an acceptability corpus through the parser and the automaton
    Corpus {
        /// Corpus file; the built-in corpus when omitted
        path: Option<PathBuf>,
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// Check quantifier monotonicity over small models
    Monotonicity {
        words: Vec<String>,
        #[arg(long, default_value_t = FiniteModel::MAX_SIZE)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SearchOpts {
    /// Structural steps allowed per branch
    #[arg(long)]
    budget: Option<u32>,
    /// T insertions allowed per branch
    #[arg(long)]
    t_budget: Option<u32>,
    #[arg(long)]
    max_derivations: Option<usize>,
    /// Lexicon file replacing the built-in one
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    show_derivation: bool,
    #[arg(long)]
    json: bool,
}

impl SearchOpts {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget {
            b.max_structural_steps = n;
        }
        if self.t_budget.is_some() {
            b.max_t_insertions = self.t_budget;
        }
        if let Some(n) = self.max_derivations {
            b.max_derivations = n.max(1);
        }
        b
    }
}

/// Failure with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

fn load_lex(path: &Option<PathBuf>) -> Result<Lexicon, InputError> {
    match path {
        None => Ok(default_lexicon()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| InputError(format!("{}: {e}", p.display())))?;
            load_lexicon(&text).map_err(|e| InputError(format!("{}: {e}", p.display())))
        }
    }
}

fn print_json(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

fn scope_tag(r: &Reading) -> &'static str {
    if r.is_linear() {
        "linear"
    } else {
        "inverse"
    }
}

fn describe(r: &Reading) -> String {
    if r.scope_order.is_empty() {
        r.to_string()
    } else {
        format!("{} ({})", r, scope_tag(r))
    }
}

fn plural(n: usize, word: &str) -> String {
    format!("{n} {word}{}", if n == 1 { "" } else { "s" })
}

fn cmd_parse(sentence: &str, goal: &Option<String>, opts: &SearchOpts) -> Result<bool, InputError> {
    let lex = load_lex(&opts.lexicon)?;
    let goals = match goal {
        Some(text) => vec![parse_formula(text)?],
        None => goal_types().to_vec(),
    };
    let result = parse_with_goals(sentence, &lex, &opts.budget(), &goals)?;
    if opts.json {
        print_json(serde_json::to_value(&result)?);
        return Ok(result.is_grammatical());
    }
    if !result.is_grammatical() {
        println!("ungrammatical (no proof within budget)");
        if result.budget_exhausted {
            println!("note: the search budget was exhausted");
        }
        return Ok(false);
    }
    match result.readings.as_slice() {
        [only] => println!("grammatical, 1 reading: {}", describe(only)),
        many => {
            println!("grammatical, {}:", plural(many.len(), "reading"));
            for r in many {
                println!("  {}", describe(r));
            }
        }
    }
    if opts.show_derivation {
        for (i, d) in result.derivations.iter().enumerate() {
            println!();
            println!("derivation {} ({}):", i + 1, describe(&polarity_core::readings::extract_reading(d)));
            print!("{}", render::derivation(d));
        }
    }
    Ok(true)
}

/// Products, the unit and value diamonds become structure; other formulas
/// stay leaves, so `s0` reads as one hypothesis.
fn antecedent_structure(f: &Formula) -> Structure {
    match f {
        Formula::Unit => Structure::Unit,
        Formula::Product(m, a, b) => {
            Structure::bin(*m, antecedent_structure(a), antecedent_structure(b))
        }
        Formula::Dia(UnaryMode::Value, a) => Structure::un(UnaryMode::Value, antecedent_structure(a)),
        other => Structure::leaf(other.clone()),
    }
}

fn cmd_sequent(antecedent: &str, succedent: &str, opts: &SearchOpts) -> Result<bool, InputError> {
    let ante = parse_formula(antecedent).map_err(|e| InputError(format!("antecedent: {e}")))?;
    let succ = parse_formula(succedent).map_err(|e| InputError(format!("succedent: {e}")))?;
    let goal = Sequent::new(antecedent_structure(&ante), succ);
    let result = prove(&goal, &opts.budget());
    if opts.json {
        print_json(json!({
            "goal": goal,
            "derivable": result.is_proved(),
            "budget_exhausted": result.exhausted,
            "goals_examined": result.goals_examined,
            "derivations": result.derivations,
        }));
        return Ok(result.is_proved());
    }
    match result.derivations.first() {
        Some(d) => {
            println!("derivable: {}", render::sequent(&goal));
            print!("{}", render::derivation(d));
            Ok(true)
        }
        None => {
            println!("not derivable within budget: {}", render::sequent(&goal));
            Ok(false)
        }
    }
}

fn cmd_fsm(words: &[String], lexicon: &Option<PathBuf>, as_json: bool) -> Result<bool, InputError> {
    let lex = load_lex(lexicon)?;
    let m = machine_from_lexicon(&lex)?;
    let quantifiers: Vec<Label> = words
        .iter()
        .enumerate()
        .map(|(position, w)| Label { word: w.to_lowercase(), position })
        .collect();
    let admissible = predict(&m, &quantifiers)?;
    let mut report = Vec::new();
    for r in &admissible {
        let runs = admissible_runs(&m, r)?;
        report.push((r, runs));
    }
    if as_json {
        let items: Vec<_> = report
            .iter()
            .map(|(r, runs)| json!({ "reading": r, "linear": r.is_linear(), "runs": runs }))
            .collect();
        print_json(json!(items));
        return Ok(!admissible.is_empty());
    }
    if admissible.is_empty() {
        println!("no admissible scope order");
        return Ok(false);
    }
    for (r, runs) in &report {
        println!("{}", describe(r));
        for run in runs {
            println!("  run: {run}");
            for (i, j) in inverted_pairs(r) {
                let window: Vec<String> = run.window(i, j).iter().map(|s| s.to_string()).collect();
                println!(
                    "    {} over {}: window [{}]",
                    r.scope_order[i].word,
                    r.scope_order[j].word,
                    window.join(", ")
                );
            }
        }
    }
    Ok(true)
}

fn cmd_corpus(path: &Option<PathBuf>, opts: &SearchOpts) -> Result<bool, InputError> {
    let lines = match path {
        None => builtin_corpus(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| InputError(format!("{}: {e}", p.display())))?;
            parse_corpus(&text)?
        }
    };
    let lex = load_lex(&opts.lexicon)?;
    let m = machine_from_lexicon(&lex)?;
    let outcomes = run_corpus(&lines, &lex, &m, &opts.budget())?;
    let all_pass = outcomes.iter().all(|o| o.passed());
    if opts.json {
        let rows: Vec<_> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "sentence": o.line.sentence,
                    "expected": if o.line.expected_ok { "ok" } else { "bad" },
                    "expected_readings": o.line.expected_reading_count,
                    "parser": if o.parser_ok { "ok" } else { "bad" },
                    "parser_readings": o.parser_readings,
                    "budget_exhausted": o.budget_exhausted,
                    "fsm": if o.fsm_ok { "ok" } else { "bad" },
                    "fsm_readings": o.fsm_readings,
                    "pass": o.passed(),
                })
            })
            .collect();
        print_json(json!({ "pass": all_pass, "lines": rows }));
        return Ok(all_pass);
    }
    let verdict = |ok: bool| if ok { "ok" } else { "bad" };
    let width = outcomes.iter().map(|o| o.line.sentence.len()).max().unwrap_or(8).max(8);
    println!("{:width$}  expect  parser     fsm        result", "sentence");
    for o in &outcomes {
        let expect = match o.line.expected_reading_count {
            Some(n) => format!("{} {n}", verdict(o.line.expected_ok)),
            None => verdict(o.line.expected_ok).to_string(),
        };
        let parser = format!("{} {}", verdict(o.parser_ok), o.parser_readings.len());
        let fsm = format!("{} {}", verdict(o.fsm_ok), o.fsm_readings.len());
        let mut result = if o.passed() { "pass".to_string() } else { "FAIL".to_string() };
        if !same_orders(&o.parser_readings, &o.fsm_readings) {
            result.push_str(" (scope orders differ)");
        }
        println!("{:width$}  {expect:6}  {parser:9}  {fsm:9}  {result}", o.line.sentence);
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    println!("{passed}/{} lines pass", outcomes.len());
    Ok(all_pass)
}

fn cmd_monotonicity(words: &[String], max_size: usize, as_json: bool) -> Result<bool, InputError> {
    FiniteModel::new(max_size)?;
    let words: Vec<String> = if words.is_empty() {
        QUANTIFIER_WORDS.iter().map(|w| w.to_string()).collect()
    } else {
        words.to_vec()
    };
    let mut rows = Vec::new();
    for word in &words {
        for n in 1..=max_size {
            let m = FiniteModel::new(n)?;
            let q = denotation(word, m)?;
            rows.push((word.clone(), n, is_downward_entailing(&q, m), is_upward_entailing(&q, m)));
        }
    }
    if as_json {
        let items: Vec<_> = rows
            .iter()
            .map(|(w, n, down, up)| json!({ "word": w, "domain_size": n, "downward": down, "upward": up }))
            .collect();
        print_json(json!(items));
        return Ok(true);
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    println!("word       n  downward  upward");
    for (w, n, down, up) in rows {
        println!("{w:9}  {n}  {:8}  {}", yes(down), yes(up));
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Parse { sentence, opts, goal } => cmd_parse(sentence, goal, opts),
        Command::Sequent { antecedent, succedent, opts } => cmd_sequent(antecedent, succedent, opts),
        Command::Fsm { quantifiers, lexicon, json } => cmd_fsm(quantifiers, lexicon, *json),
        Command::Corpus { path, opts } => cmd_corpus(path, opts),
        Command::Monotonicity { words, max_size, json } => cmd_monotonicity(words, *max_size, *json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
