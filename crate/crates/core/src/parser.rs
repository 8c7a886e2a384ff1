//! Sentences to proof-search goals, and the verdict over all of them.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::lexicon::{Lexicon, LexiconError, Token};
use crate::prover::{prove, Derivation, SearchBudget};
use crate::readings::{extract_reading, Reading};
use crate::syntax::{BinaryMode, Formula, Sequent, Structure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Grammatical,
    UngrammaticalWithinBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseResult {
    pub tokens: Vec<Token>,
    pub verdict: Verdict,
    /// Distinct scope orders, in order of first derivation.
    pub readings: Vec<Reading>,
    pub derivations: Vec<Derivation>,
    pub budget_exhausted: bool,
}

impl ParseResult {
    pub fn is_grammatical(&self) -> bool {
        self.verdict == Verdict::Grammatical
    }
}

/// The clause types a complete derivation may conclude.
pub fn goal_types() -> [Formula; 2] {
    [Formula::s0(), Formula::s_plus()]
}

/// Every default-mode binary tree over the tokens, for every choice of
/// lexical type per token. Trees vary slowest.
pub fn bracketings(tokens: &[Token], lex: &Lexicon) -> Result<Vec<Structure>, LexiconError> {
    let mut choices: Vec<Vec<Structure>> = Vec::with_capacity(tokens.len());
    for token in tokens {
        let entry = lex.lookup(&token.word).ok_or_else(|| LexiconError::UnknownWord {
            word: token.word.clone(),
            position: token.position,
        })?;
        choices.push(
            entry
                .types
                .iter()
                .map(|ty| Structure::word(ty.clone(), &token.word, token.position))
                .collect(),
        );
    }
    if choices.is_empty() {
        return Ok(Vec::new());
    }
    let mut leaf_sets: Vec<Vec<Structure>> = vec![Vec::new()];
    for options in &choices {
        leaf_sets = leaf_sets
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut next = prefix.clone();
                    next.push(o.clone());
                    next
                })
            })
            .collect();
    }
    let shapes = tree_shapes(0, tokens.len());
    let mut out = Vec::with_capacity(shapes.len() * leaf_sets.len());
    for shape in &shapes {
        for leaves in &leaf_sets {
            out.push(shape.build(leaves));
        }
    }
    Ok(out)
}

#[derive(Clone)]
enum Shape {
    Leaf(usize),
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    fn build(&self, leaves: &[Structure]) -> Structure {
        match self {
            Shape::Leaf(i) => leaves[*i].clone(),
            Shape::Node(l, r) => Structure::bin(BinaryMode::Default, l.build(leaves), r.build(leaves)),
        }
    }
}

fn tree_shapes(start: usize, end: usize) -> Vec<Shape> {
    if end - start == 1 {
        return vec![Shape::Leaf(start)];
    }
    let mut out = Vec::new();
    for split in start + 1..end {
        for l in tree_shapes(start, split) {
            for r in tree_shapes(split, end) {
                out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

/// Tries every bracketing against every goal type. Searches run on all
/// available cores; results are ordered by bracketing, then goal.
pub fn parse_sentence(
    sentence: &str,
    lex: &Lexicon,
    budget: &SearchBudget,
) -> Result<ParseResult, LexiconError> {
    parse_with_goals(sentence, lex, budget, &goal_types())
}

/// [`parse_sentence`] with caller-chosen goal formulas.
pub fn parse_with_goals(
    sentence: &str,
    lex: &Lexicon,
    budget: &SearchBudget,
    goal_formulas: &[Formula],
) -> Result<ParseResult, LexiconError> {
    let tokens = lex.tokenize(sentence)?;
    let structures = bracketings(&tokens, lex)?;
    let goals: Vec<Sequent> = structures
        .iter()
        .flat_map(|s| goal_formulas.iter().map(|g| Sequent::new(s.clone(), g.clone())))
        .collect();

    let slots: Vec<Mutex<Option<(Vec<Derivation>, bool)>>> =
        goals.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(goals.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(goal) = goals.get(i) else { break };
                let result = prove(goal, budget);
                *slots[i].lock().unwrap() = Some((result.derivations, result.exhausted));
            });
        }
    });

    let mut derivations = Vec::new();
    let mut budget_exhausted = false;
    for slot in slots {
        let (found, exhausted) = slot.into_inner().unwrap().expect("every goal searched");
        derivations.extend(found);
        budget_exhausted |= exhausted;
    }
    let mut readings: Vec<Reading> = Vec::new();
    for d in &derivations {
        let r = extract_reading(d);
        if !readings.contains(&r) {
            readings.push(r);
        }
    }
    let verdict = if derivations.is_empty() {
        Verdict::UngrammaticalWithinBudget
    } else {
        Verdict::Grammatical
    };
    Ok(ParseResult { tokens, verdict, readings, derivations, budget_exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::default_lexicon;

    fn shapes(sentence: &str) -> Vec<String> {
        let lex = default_lexicon();
        let tokens = lex.tokenize(sentence).unwrap();
        bracketings(&tokens, &lex).unwrap().iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn bracketing_counts() {
        assert_eq!(shapes("alice saw bob"), ["alice * (saw * bob)", "(alice * saw) * bob"]);
        assert_eq!(shapes("alice"), ["alice"]);
        assert!(shapes("nobody saw anybody").contains(&"nobody * (saw * anybody)".to_string()));
        assert_eq!(shapes("alice saw a man's mother").len(), 5);
    }

    #[test]
    fn ambiguous_words_multiply() {
        let mut lex = default_lexicon();
        lex.add("bob", Formula::atom("n"));
        let tokens = lex.tokenize("alice saw bob").unwrap();
        assert_eq!(bracketings(&tokens, &lex).unwrap().len(), 4);
    }

    #[test]
    fn simple_sentences() {
        let lex = default_lexicon();
        let budget = SearchBudget::default();
        let r = parse_sentence("Alice saw Bob.", &lex, &budget).unwrap();
        assert!(r.is_grammatical());
        assert_eq!(r.readings, [Reading::new(vec![])]);
        let r = parse_sentence("Anybody saw nobody", &lex, &budget).unwrap();
        assert_eq!(r.verdict, Verdict::UngrammaticalWithinBudget);
        assert!(r.readings.is_empty());
        assert!(matches!(
            parse_sentence("Alice saw Carol", &lex, &budget),
            Err(LexiconError::UnknownWord { position: 2, .. })
        ));
    }
}
