//! The polarity automaton: clause types as states, quantifiers as
//! transitions from their output to their input polarity, plus the
//! evaluation-order condition on inverse scope.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::{is_quantifier_type, quantifier_shape, Lexicon};
use crate::readings::{inverted_pairs, Reading};
use crate::syntax::{Formula, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PolState {
    Pos,
    Neu,
    Neg,
}

impl PolState {
    pub const ALL: [PolState; 3] = [PolState::Pos, PolState::Neu, PolState::Neg];

    pub fn clause_type(self) -> Formula {
        match self {
            PolState::Pos => Formula::s_plus(),
            PolState::Neu => Formula::s0(),
            PolState::Neg => Formula::s_minus(),
        }
    }

    pub fn of_clause_type(f: &Formula) -> Option<PolState> {
        PolState::ALL.into_iter().find(|s| s.clause_type() == *f)
    }
}

impl fmt::Display for PolState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolState::Pos => "s+",
            PolState::Neu => "s0",
            PolState::Neg => "s-",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FsmError {
    #[error("{word:?} is not a quantifier of the form Out /c (np \\c In) over clause types")]
    MalformedQuantifier { word: String },
    #[error("no transition for {word:?}")]
    UnknownQuantifier { word: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarityMachine {
    pub epsilon: Vec<(PolState, PolState)>,
    /// Quantifier word to its (from, to) edges; one per quantifier type.
    pub transitions: BTreeMap<String, Vec<(PolState, PolState)>>,
    pub starts: Vec<PolState>,
    pub final_state: PolState,
}

impl PolarityMachine {
    pub fn empty() -> PolarityMachine {
        PolarityMachine {
            epsilon: vec![(PolState::Pos, PolState::Neu), (PolState::Neg, PolState::Neu)],
            transitions: BTreeMap::new(),
            starts: vec![PolState::Pos, PolState::Neu],
            final_state: PolState::Neu,
        }
    }

    pub fn is_start(&self, s: PolState) -> bool {
        self.starts.contains(&s)
    }

    fn edges(&self, word: &str) -> Result<&[(PolState, PolState)], FsmError> {
        self.transitions
            .get(word)
            .map(Vec::as_slice)
            .ok_or_else(|| FsmError::UnknownQuantifier { word: word.to_string() })
    }
}

/// One transition per quantifier type in the lexicon. Any entry whose main
/// connective is in continuation mode must have the quantifier shape.
pub fn machine_from_lexicon(lex: &Lexicon) -> Result<PolarityMachine, FsmError> {
    let mut m = PolarityMachine::empty();
    for entry in lex.entries() {
        for ty in entry.types.iter().filter(|t| is_quantifier_type(t)) {
            let edge = quantifier_shape(ty)
                .and_then(|(out, inner)| {
                    Some((PolState::of_clause_type(&out)?, PolState::of_clause_type(&inner)?))
                })
                .ok_or_else(|| FsmError::MalformedQuantifier { word: entry.word.clone() })?;
            m.transitions.entry(entry.word.clone()).or_default().push(edge);
        }
    }
    Ok(m)
}

/// A path through the machine. `labels[i]` names the edge from `states[i]`
/// to `states[i + 1]`; `None` is an ε move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Run {
    pub states: Vec<PolState>,
    pub labels: Vec<Option<String>>,
}

impl Run {
    /// Index into `labels` of the k-th quantifier firing.
    fn firing(&self, k: usize) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_some())
            .nth(k)
            .map(|(i, _)| i)
            .expect("run fires every quantifier")
    }

    /// States occupied from just after the `i`-th firing to just before the
    /// `j`-th, inclusive.
    pub fn window(&self, i: usize, j: usize) -> &[PolState] {
        let from = self.firing(i) + 1;
        let to = self.firing(j);
        &self.states[from..=to]
    }
}

impl fmt::Display for Run {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.states[0])?;
        for (label, state) in self.labels.iter().zip(&self.states[1..]) {
            match label {
                Some(word) => write!(f, " -{word}-> {state}")?,
                None => write!(f, " -e-> {state}")?,
            }
        }
        Ok(())
    }
}

/// Runs that start in a start state, fire the quantifiers in order, and end in
/// the final state. ε moves are taken only after a firing, so each scope
/// order over distinct edges has at most one run per start state.
pub fn accepting_runs(m: &PolarityMachine, scope_seq: &[&str]) -> Result<Vec<Run>, FsmError> {
    let edges: Vec<&[(PolState, PolState)]> =
        scope_seq.iter().map(|w| m.edges(w)).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for &start in &m.starts {
        let run = Run { states: vec![start], labels: Vec::new() };
        extend(m, scope_seq, &edges, run, &mut out);
    }
    Ok(out)
}

fn extend(
    m: &PolarityMachine,
    words: &[&str],
    edges: &[&[(PolState, PolState)]],
    run: Run,
    out: &mut Vec<Run>,
) {
    let here = *run.states.last().unwrap();
    let fired = run.labels.iter().filter(|l| l.is_some()).count();
    let after_firing = matches!(run.labels.last(), Some(Some(_)));
    if fired == words.len() {
        if here == m.final_state {
            out.push(run.clone());
        }
    } else {
        for &(from, to) in edges[fired] {
            if from == here {
                let mut next = run.clone();
                next.states.push(to);
                next.labels.push(Some(words[fired].to_string()));
                extend(m, words, edges, next, out);
            }
        }
    }
    if after_firing {
        for &(from, to) in &m.epsilon {
            if from == here {
                let mut next = run.clone();
                next.states.push(to);
                next.labels.push(None);
                extend(m, words, edges, next, out);
            }
        }
    }
}

/// Every inverted pair must see a start state between its two firings.
pub fn evaluation_order_ok(m: &PolarityMachine, reading: &Reading, run: &Run) -> bool {
    inverted_pairs(reading)
        .into_iter()
        .all(|(i, j)| run.window(i, j).iter().any(|&s| m.is_start(s)))
}

/// Accepting runs of the reading's scope order that satisfy the
/// evaluation-order condition.
pub fn admissible_runs(m: &PolarityMachine, reading: &Reading) -> Result<Vec<Run>, FsmError> {
    let words: Vec<&str> = reading.scope_order.iter().map(|l| l.word.as_str()).collect();
    let runs = accepting_runs(m, &words)?;
    Ok(runs.into_iter().filter(|r| evaluation_order_ok(m, reading, r)).collect())
}

/// Admissible scope orders of the given quantifier occurrences, in
/// lexicographic order of the permutation.
pub fn predict(m: &PolarityMachine, quantifiers: &[Label]) -> Result<Vec<Reading>, FsmError> {
    let mut out = Vec::new();
    for order in permutations(quantifiers.len()) {
        let reading = Reading::new(order.iter().map(|&i| quantifiers[i].clone()).collect());
        if !admissible_runs(m, &reading)?.is_empty() {
            out.push(reading);
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{default_lexicon, load_lexicon};
    use PolState::{Neg, Neu, Pos};

    fn machine() -> PolarityMachine {
        machine_from_lexicon(&default_lexicon()).unwrap()
    }

    fn labels(items: &[(&str, usize)]) -> Vec<Label> {
        items.iter().map(|&(w, p)| Label { word: w.into(), position: p }).collect()
    }

    fn orders(readings: &[Reading]) -> Vec<Vec<&str>> {
        readings
            .iter()
            .map(|r| r.scope_order.iter().map(|l| l.word.as_str()).collect())
            .collect()
    }

    #[test]
    fn default_transitions() {
        let m = machine();
        let edge = |w: &str| m.transitions[w].clone();
        assert_eq!(edge("a man"), [(Neu, Neu)]);
        assert_eq!(edge("nobody"), [(Neu, Neg)]);
        assert_eq!(edge("anybody"), [(Neg, Neg)]);
        assert_eq!(edge("somebody"), [(Pos, Pos)]);
        assert_eq!(edge("everybody"), [(Neu, Pos)]);
        assert_eq!(m.transitions.len(), 5);
    }

    #[test]
    fn machine_construction_edge_cases() {
        let m = machine_from_lexicon(&Lexicon::new()).unwrap();
        assert!(m.transitions.is_empty());
        assert_eq!(m.epsilon.len(), 2);
        let bad = load_lexicon("weird := s0 /c (np \\c np)").unwrap();
        assert_eq!(
            machine_from_lexicon(&bad),
            Err(FsmError::MalformedQuantifier { word: "weird".into() })
        );
    }

    #[test]
    fn runs() {
        let m = machine();
        let runs = accepting_runs(&m, &["nobody", "anybody"]).unwrap();
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].states, [Neu, Neg, Neg, Neu]);
        assert!(accepting_runs(&m, &["everybody", "anybody"]).unwrap().is_empty());
        let empty = accepting_runs(&m, &[]).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].states, [Neu]);
        let three = accepting_runs(&m, &["nobody", "everybody", "somebody"]).unwrap();
        assert!(three.iter().any(|r| r.states == [Neu, Neg, Neu, Pos, Pos, Neu]));
        assert_eq!(three[0].to_string(), "s0 -nobody-> s- -e-> s0 -everybody-> s+ -somebody-> s+ -e-> s0");
        assert!(matches!(
            accepting_runs(&m, &["alice"]),
            Err(FsmError::UnknownQuantifier { .. })
        ));
    }

    #[test]
    fn evaluation_order() {
        let m = machine();
        let inverse = Reading::new(labels(&[("nobody", 2), ("anybody", 0)]));
        let run = Run {
            states: vec![Neu, Neg, Neg, Neu],
            labels: vec![Some("nobody".into()), Some("anybody".into()), None],
        };
        assert_eq!(run.window(0, 1), [Neg]);
        assert!(!evaluation_order_ok(&m, &inverse, &run));
        let ambiguous = Reading::new(labels(&[("everybody", 2), ("somebody", 0)]));
        let run = Run {
            states: vec![Neu, Pos, Pos, Neu],
            labels: vec![Some("everybody".into()), Some("somebody".into()), None],
        };
        assert!(evaluation_order_ok(&m, &ambiguous, &run));
        let linear = Reading::new(labels(&[("nobody", 0), ("anybody", 2)]));
        let run = &accepting_runs(&m, &["nobody", "anybody"]).unwrap()[0];
        assert!(evaluation_order_ok(&m, &linear, run));
    }

    #[test]
    fn predictions() {
        let m = machine();
        let p = predict(&m, &labels(&[("nobody", 0), ("anybody", 2)])).unwrap();
        assert_eq!(orders(&p), [["nobody", "anybody"]]);
        let p = predict(&m, &labels(&[("somebody", 0), ("everybody", 2)])).unwrap();
        assert_eq!(p.len(), 2);
        let p = predict(&m, &labels(&[("nobody", 0), ("somebody", 4)])).unwrap();
        assert_eq!(orders(&p), [["somebody", "nobody"]]);
        let q = labels(&[("nobody", 0), ("everybody", 2), ("somebody", 4)]);
        let p = predict(&m, &q).unwrap();
        assert!(p.contains(&Reading::new(q.clone())));
        assert_eq!(predict(&m, &[]).unwrap(), [Reading::new(vec![])]);
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(3)[0], [0, 1, 2]);
        assert_eq!(permutations(3)[5], [2, 1, 0]);
    }
}
