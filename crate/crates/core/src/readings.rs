//! Quantifier scope orders read off derivations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::prover::{Derivation, RuleName};
use crate::syntax::{BinaryMode, Label, Structure};

/// Quantifiers from widest to narrowest scope.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Reading {
    pub scope_order: Vec<Label>,
}

impl Reading {
    pub fn new(scope_order: Vec<Label>) -> Reading {
        Reading { scope_order }
    }

    pub fn is_linear(&self) -> bool {
        is_linear(self)
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scope_order.is_empty() {
            return write!(f, "(no quantifiers)");
        }
        let words: Vec<&str> = self.scope_order.iter().map(|l| l.word.as_str()).collect();
        write!(f, "{}", words.join(" > "))
    }
}

/// Continuation-mode eliminations of lexical quantifiers in pre-order, so a
/// quantifier applied closer to the conclusion comes first.
pub fn extract_reading(d: &Derivation) -> Reading {
    let mut order = Vec::new();
    d.walk(&mut |node| {
        if node.rule != RuleName::OverL(BinaryMode::C) {
            return;
        }
        if let Some(Structure::Bin(_, functor, _)) = node.conclusion.antecedent.get(&node.site) {
            if let Structure::Leaf { label: Some(label), .. } = &**functor {
                order.push(label.clone());
            }
        }
    });
    Reading { scope_order: order }
}

pub fn is_linear(r: &Reading) -> bool {
    r.scope_order.windows(2).all(|w| w[0].position < w[1].position)
}

/// Index pairs `(i, j)` with `i` wider than `j` but later in the sentence.
pub fn inverted_pairs(r: &Reading) -> Vec<(usize, usize)> {
    let order = &r.scope_order;
    let mut out = Vec::new();
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i].position > order[j].position {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reading(items: &[(&str, usize)]) -> Reading {
        Reading::new(items.iter().map(|&(w, p)| Label { word: w.into(), position: p }).collect())
    }

    #[test]
    fn linearity() {
        assert!(is_linear(&reading(&[("nobody", 0), ("anybody", 2)])));
        assert!(!is_linear(&reading(&[("everybody", 2), ("somebody", 0)])));
        assert!(is_linear(&reading(&[])));
    }

    #[test]
    fn inversions() {
        assert_eq!(inverted_pairs(&reading(&[("everybody", 2), ("somebody", 0)])), [(0, 1)]);
        assert!(inverted_pairs(&reading(&[("a", 0), ("b", 1), ("c", 4)])).is_empty());
        assert_eq!(inverted_pairs(&reading(&[("c", 4), ("b", 1), ("a", 0)])).len(), 3);
    }

    #[test]
    fn display() {
        assert_eq!(reading(&[("nobody", 0), ("anybody", 2)]).to_string(), "nobody > anybody");
    }
}
