//! Generalized-quantifier denotations over small finite models and their
//! monotonicity, checked by brute force over all subsets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemanticsError {
    #[error("domain size must be between 1 and {max}, got {0}", max = FiniteModel::MAX_SIZE)]
    DomainSize(usize),
    #[error("no denotation for {0:?}")]
    UnknownWord(String),
}

/// Individuals `0..domain_size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteModel {
    domain_size: usize,
}

impl FiniteModel {
    pub const MAX_SIZE: usize = 6;

    pub fn new(domain_size: usize) -> Result<FiniteModel, SemanticsError> {
        if (1..=Self::MAX_SIZE).contains(&domain_size) {
            Ok(FiniteModel { domain_size })
        } else {
            Err(SemanticsError::DomainSize(domain_size))
        }
    }

    pub fn domain_size(self) -> usize {
        self.domain_size
    }

    /// Number of predicates over the domain.
    pub fn subset_count(self) -> usize {
        1 << self.domain_size
    }

    pub fn full(self) -> u32 {
        (1u32 << self.domain_size) - 1
    }
}

/// A function from predicates (subsets as bitmasks) to truth values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantDenotation {
    /// Indexed by subset bitmask.
    pub table: Vec<bool>,
}

impl QuantDenotation {
    pub fn from_fn(m: FiniteModel, f: impl Fn(u32) -> bool) -> QuantDenotation {
        QuantDenotation { table: (0..m.subset_count() as u32).map(f).collect() }
    }

    pub fn constant(m: FiniteModel, value: bool) -> QuantDenotation {
        QuantDenotation::from_fn(m, |_| value)
    }

    pub fn holds_of(&self, subset: u32) -> bool {
        self.table[subset as usize]
    }

    pub fn is_constant(&self) -> bool {
        self.table.iter().all(|&b| b == self.table[0])
    }
}

pub const QUANTIFIER_WORDS: [&str; 5] = ["nobody", "somebody", "everybody", "anybody", "a man"];

pub fn denotation(word: &str, m: FiniteModel) -> Result<QuantDenotation, SemanticsError> {
    let full = m.full();
    let q = match word.to_lowercase().as_str() {
        "nobody" => QuantDenotation::from_fn(m, |s| s == 0),
        "somebody" | "anybody" | "a man" => QuantDenotation::from_fn(m, |s| s != 0),
        "everybody" => QuantDenotation::from_fn(m, |s| s == full),
        _ => return Err(SemanticsError::UnknownWord(word.to_string())),
    };
    Ok(q)
}

fn subset_pairs(m: FiniteModel) -> impl Iterator<Item = (u32, u32)> {
    let n = m.subset_count() as u32;
    (0..n).flat_map(move |big| (0..n).filter(move |small| small & !big == 0).map(move |small| (big, small)))
}

/// `q(s1)` implies `q(s2)` whenever `s2 ⊆ s1`.
pub fn is_downward_entailing(q: &QuantDenotation, m: FiniteModel) -> bool {
    subset_pairs(m).all(|(s1, s2)| !q.holds_of(s1) || q.holds_of(s2))
}

/// `q(s2)` implies `q(s1)` whenever `s2 ⊆ s1`.
pub fn is_upward_entailing(q: &QuantDenotation, m: FiniteModel) -> bool {
    subset_pairs(m).all(|(s1, s2)| !q.holds_of(s2) || q.holds_of(s1))
}

/// A pair `(s1, s2)` with `s2 ⊆ s1`, `q(s1)` true and `q(s2)` false.
pub fn downward_counterexample(q: &QuantDenotation, m: FiniteModel) -> Option<(u32, u32)> {
    subset_pairs(m).find(|&(s1, s2)| q.holds_of(s1) && !q.holds_of(s2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(n: usize) -> FiniteModel {
        FiniteModel::new(n).unwrap()
    }

    #[test]
    fn model_bounds() {
        assert!(FiniteModel::new(0).is_err());
        assert!(FiniteModel::new(7).is_err());
        assert_eq!(model(3).subset_count(), 8);
    }

    #[test]
    fn truth_values() {
        let m = model(2);
        assert!(denotation("nobody", m).unwrap().holds_of(0));
        assert!(!denotation("everybody", m).unwrap().holds_of(0b01));
        assert!(denotation("somebody", m).unwrap().holds_of(0b10));
        assert!(denotation("alice", m).is_err());
    }

    #[test]
    fn pair_count() {
        // each element is in neither, only the larger set, or both
        assert_eq!(subset_pairs(model(3)).count(), 27);
    }

    #[test]
    fn monotonicity_at_three() {
        let m = model(3);
        let q = |w| denotation(w, m).unwrap();
        assert!(is_downward_entailing(&q("nobody"), m));
        assert!(!is_downward_entailing(&q("everybody"), m));
        let (s1, s2) = downward_counterexample(&q("everybody"), m).unwrap();
        assert_eq!(s1, m.full());
        assert!(s2 != s1 && s2 & !s1 == 0);
        assert!(is_upward_entailing(&q("somebody"), m));
        assert!(!is_upward_entailing(&q("nobody"), m));
        assert!(is_downward_entailing(&QuantDenotation::constant(m, true), m));
        assert!(is_upward_entailing(&QuantDenotation::constant(m, false), m));
    }
}
