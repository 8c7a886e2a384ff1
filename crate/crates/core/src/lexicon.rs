//! Word-to-type assignments and sentence tokenization.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{parse_formula, BinaryMode, Formula};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown word {word:?} at token {position}")]
    UnknownWord { word: String, position: usize },
    #[error("{word:?} is not a quantifier of the form Out /c (np \\c In) over clause types")]
    BadQuantifier { word: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexiconEntry {
    /// Lowercase; multiword entries separate their parts with single spaces.
    pub word: String,
    pub types: Vec<Formula>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lexicon {
    entries: BTreeMap<String, LexiconEntry>,
}

/// A token of a sentence after multiword merging.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub word: String,
    pub position: usize,
}

fn normalize_word(word: &str) -> String {
    word.split_whitespace()
        .map(|w| w.replace('\u{2019}', "'").to_lowercase())
        .collect::<Vec<_>>()
        .join(" ")
}

impl Lexicon {
    pub fn new() -> Lexicon {
        Lexicon::default()
    }

    /// Adds an alternative type for `word`.
    pub fn add(&mut self, word: &str, formula: Formula) {
        let key = normalize_word(word);
        let entry = self
            .entries
            .entry(key.clone())
            .or_insert_with(|| LexiconEntry { word: key, types: Vec::new() });
        if !entry.types.contains(&formula) {
            entry.types.push(formula);
        }
    }

    pub fn lookup(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries.get(&normalize_word(word))
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries spelled with more than one token.
    pub fn multiword_keys(&self) -> Vec<Vec<String>> {
        self.entries
            .keys()
            .map(|k| k.split(' ').map(str::to_string).collect::<Vec<_>>())
            .filter(|parts| parts.len() > 1)
            .collect()
    }

    /// Lexicon file text; [`load_lexicon`] reads it back to an equal lexicon.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Splits a sentence into lexicon entries.
    ///
    /// Words are lowercased, terminal punctuation is dropped, the possessive
    /// clitic `'s` is split off its host, and multiword entries are merged
    /// greedily, longest first.
    pub fn tokenize(&self, sentence: &str) -> Result<Vec<Token>, LexiconError> {
        let raw = raw_tokens(sentence);
        let mut longest: BTreeMap<String, usize> = BTreeMap::new();
        for parts in self.multiword_keys() {
            let len = longest.entry(parts[0].clone()).or_default();
            *len = (*len).max(parts.len());
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < raw.len() {
            let max_len = longest.get(&raw[i]).copied().unwrap_or(1).min(raw.len() - i);
            let matched = (1..=max_len).rev().find_map(|len| {
                let candidate = raw[i..i + len].join(" ");
                self.entries.contains_key(&candidate).then_some((candidate, len))
            });
            let position = out.len();
            match matched {
                Some((word, len)) => {
                    out.push(Token { word, position });
                    i += len;
                }
                None => {
                    return Err(LexiconError::UnknownWord { word: raw[i].clone(), position })
                }
            }
        }
        Ok(out)
    }
}

fn raw_tokens(sentence: &str) -> Vec<String> {
    let mut out = Vec::new();
    for word in sentence.split_whitespace() {
        let word = word.replace('\u{2019}', "'").to_lowercase();
        let word = word.trim_end_matches(|c: char| ".,;:!?\"".contains(c));
        if word.is_empty() {
            continue;
        }
        match word.strip_suffix("'s") {
            Some(host) if !host.is_empty() => {
                out.push(host.to_string());
                out.push("'s".to_string());
            }
            _ => out.push(word.to_string()),
        }
    }
    out
}

impl fmt::Display for Lexicon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in self.entries.values() {
            for ty in &entry.types {
                writeln!(f, "{} := {}", entry.word, ty)?;
            }
        }
        Ok(())
    }
}

/// Reads `word := formula` lines. `#` starts a comment; blank lines are
/// skipped; repeated words collect alternative types.
pub fn load_lexicon(text: &str) -> Result<Lexicon, LexiconError> {
    let mut lex = Lexicon::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| LexiconError::Syntax { line: line_no, message };
        let (word, ty) = content
            .split_once(":=")
            .ok_or_else(|| err("expected `word := formula`".to_string()))?;
        let word = word.trim();
        if word.is_empty() {
            return Err(err("missing word".to_string()));
        }
        let formula = parse_formula(ty.trim()).map_err(|e| err(e.to_string()))?;
        if formula.contains_unit() {
            return Err(err("the unit is not a lexical type".to_string()));
        }
        lex.add(word, formula);
    }
    Ok(lex)
}

const DEFAULT_LEXICON: &str = "\
alice := np
bob := np
saw := (np \\ s0) / np
introduced := ((np \\ s0) / pp) / np
to := pp / np
's mother := np \\ np
's father := np \\ np
a man := s0 /c (np \\c s0)
nobody := s0 /c (np \\c s-)
anybody := s- /c (np \\c s-)
somebody := s+ /c (np \\c s+)
everybody := s0 /c (np \\c s+)
";

pub fn default_lexicon() -> Lexicon {
    load_lexicon(DEFAULT_LEXICON).expect("built-in lexicon parses")
}

/// Clause types, neutral first.
pub fn clause_types() -> [Formula; 3] {
    [Formula::s0(), Formula::s_plus(), Formula::s_minus()]
}

/// Splits a quantifier type `Out /c (np \c In)` into `(Out, In)`, or `None`
/// if it does not have that shape with both sides clause types.
pub fn quantifier_shape(f: &Formula) -> Option<(Formula, Formula)> {
    let clause = |f: &Formula| clause_types().contains(f);
    match f {
        Formula::Over(BinaryMode::C, out, arg) => match &**arg {
            Formula::Under(BinaryMode::C, np, inner)
                if **np == Formula::atom("np") && clause(out) && clause(inner) =>
            {
                Some(((**out).clone(), (**inner).clone()))
            }
            _ => None,
        },
        _ => None,
    }
}

/// A type whose main connective is in continuation mode: an in-situ
/// quantifier, well-formed or not.
pub fn is_quantifier_type(f: &Formula) -> bool {
    matches!(
        f,
        Formula::Over(BinaryMode::C, ..) | Formula::Under(BinaryMode::C, ..) | Formula::Product(BinaryMode::C, ..)
    )
}
