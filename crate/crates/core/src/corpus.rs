//! Acceptability corpora and a runner that checks both the prover-backed
//! parser and the polarity automaton against them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fsm::{predict, FsmError, PolarityMachine};
use crate::lexicon::{Lexicon, LexiconError};
use crate::parser::parse_sentence;
use crate::prover::SearchBudget;
use crate::readings::Reading;
use crate::syntax::Label;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Fsm(#[from] FsmError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusLine {
    pub sentence: String,
    pub expected_ok: bool,
    pub expected_reading_count: Option<usize>,
}

/// `sentence<TAB>ok|bad[<TAB>reading-count]` per line; `#` comments.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusLine>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim_end();
        if content.trim().is_empty() {
            continue;
        }
        let err = |message: &str| CorpusError::Syntax { line, message: message.to_string() };
        let fields: Vec<&str> = content.split('\t').collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(err("expected `sentence<TAB>ok|bad[<TAB>count]`"));
        }
        let sentence = fields[0].trim();
        if sentence.is_empty() {
            return Err(err("empty sentence"));
        }
        let expected_ok = match fields[1].trim() {
            "ok" => true,
            "bad" => false,
            _ => return Err(err("verdict must be `ok` or `bad`")),
        };
        let expected_reading_count = match fields.get(2) {
            Some(c) => Some(c.trim().parse().map_err(|_| err("reading count is not a number"))?),
            None => None,
        };
        out.push(CorpusLine { sentence: sentence.to_string(), expected_ok, expected_reading_count });
    }
    Ok(out)
}

const BUILTIN: &str = "\
Alice saw Bob\tok\t1
Alice saw a man's mother\tok\t1
Nobody saw anybody\tok\t1
Everybody saw anybody\tbad
Alice saw anybody\tbad
Anybody saw nobody\tbad
Nobody's mother saw anybody's father\tok\t1
Anybody's mother saw nobody's father\tbad
Somebody saw everybody\tok\t2
Everybody saw somebody\tok\t2
Somebody saw nobody\tok\t1
Nobody introduced Alice to somebody\tok\t1
";

pub fn builtin_corpus() -> Vec<CorpusLine> {
    parse_corpus(BUILTIN).expect("built-in corpus parses")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusOutcome {
    pub line: CorpusLine,
    pub parser_ok: bool,
    pub parser_readings: Vec<Reading>,
    pub budget_exhausted: bool,
    pub fsm_ok: bool,
    pub fsm_readings: Vec<Reading>,
}

impl CorpusOutcome {
    pub fn parser_matches(&self) -> bool {
        self.parser_ok == self.line.expected_ok
            && self
                .line
                .expected_reading_count
                .map_or(true, |n| !self.parser_ok || self.parser_readings.len() == n)
    }

    pub fn fsm_matches(&self) -> bool {
        self.fsm_ok == self.line.expected_ok
    }

    /// Same verdict and the same set of scope orders.
    pub fn engines_agree(&self) -> bool {
        self.parser_ok == self.fsm_ok && same_orders(&self.parser_readings, &self.fsm_readings)
    }

    pub fn passed(&self) -> bool {
        self.parser_matches() && self.fsm_matches() && self.engines_agree()
    }
}

/// Set equality of readings.
pub fn same_orders(a: &[Reading], b: &[Reading]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a.dedup();
    b.dedup();
    a == b
}

/// The quantifier occurrences of a sentence, as the automaton sees them.
pub fn sentence_quantifiers(
    sentence: &str,
    lex: &Lexicon,
    m: &PolarityMachine,
) -> Result<Vec<Label>, LexiconError> {
    Ok(lex
        .tokenize(sentence)?
        .into_iter()
        .filter(|t| m.transitions.contains_key(&t.word))
        .map(|t| Label { word: t.word, position: t.position })
        .collect())
}

pub fn run_line(
    line: &CorpusLine,
    lex: &Lexicon,
    m: &PolarityMachine,
    budget: &SearchBudget,
) -> Result<CorpusOutcome, CorpusError> {
    let parsed = parse_sentence(&line.sentence, lex, budget)?;
    let fsm_readings = predict(m, &sentence_quantifiers(&line.sentence, lex, m)?)?;
    Ok(CorpusOutcome {
        line: line.clone(),
        parser_ok: parsed.is_grammatical(),
        parser_readings: parsed.readings,
        budget_exhausted: parsed.budget_exhausted,
        fsm_ok: !fsm_readings.is_empty(),
        fsm_readings,
    })
}

pub fn run_corpus(
    lines: &[CorpusLine],
    lex: &Lexicon,
    m: &PolarityMachine,
    budget: &SearchBudget,
) -> Result<Vec<CorpusOutcome>, CorpusError> {
    lines.iter().map(|l| run_line(l, lex, m, budget)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines() {
        let lines = parse_corpus("# header\nNobody saw anybody\tok\t1\n\nAnybody saw nobody\tbad\n").unwrap();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].expected_reading_count, Some(1));
        assert!(!lines[1].expected_ok);
        assert_eq!(lines[1].expected_reading_count, None);
        assert!(parse_corpus("").unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse_corpus("a\tmaybe"), Err(CorpusError::Syntax { line: 1, .. })));
        assert!(matches!(parse_corpus("ok\nb\tok\tmany"), Err(CorpusError::Syntax { line: 1, .. })));
        assert!(matches!(parse_corpus("a\tok\tx"), Err(CorpusError::Syntax { line: 1, .. })));
    }

    #[test]
    fn builtin_is_well_formed() {
        let lines = builtin_corpus();
        assert_eq!(lines.len(), 12);
        assert_eq!(lines.iter().filter(|l| !l.expected_ok).count(), 4);
    }
}
