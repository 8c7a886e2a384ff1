//! Bounded backward proof search for the multimodal logic: the logical rules
//! in sequent (left-rule) form plus the structural postulates
//! Root, Left, Right, T, K' and Unquote.

mod rewrite;
mod rules;
mod search;

use serde::{Deserialize, Serialize};

use crate::syntax::{Sequent, Site};

pub use rewrite::{enumerate_rewrites, Rewrite};
pub use rules::{apply_backward, Direction, RuleName};
pub use search::{prove, ProofResult};

/// Limits on a single call to [`prove`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Structural rewrites allowed along any one branch.
    pub max_structural_steps: u32,
    /// T insertions allowed along any one branch; `None` means the number of
    /// antecedent leaves of the goal plus two.
    pub max_t_insertions: Option<u32>,
    pub max_derivations: usize,
    /// Share subgoals across branches. When off, a plain depth-first search
    /// with a per-branch visited set is used.
    pub memo_enabled: bool,
    /// Hard cap on distinct subgoals examined per call.
    pub max_goals: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_structural_steps: 64,
            max_t_insertions: None,
            max_derivations: 16,
            memo_enabled: true,
            max_goals: 400_000,
        }
    }
}

impl SearchBudget {
    pub fn t_insertions_for(&self, goal: &Sequent) -> u32 {
        self.max_t_insertions
            .unwrap_or(goal.antecedent.leaf_count() as u32 + 2)
    }

    /// Every count doubled, with the T allowance resolved against `goal` first.
    pub fn doubled_for(&self, goal: &Sequent) -> SearchBudget {
        SearchBudget {
            max_structural_steps: self.max_structural_steps * 2,
            max_t_insertions: Some(self.t_insertions_for(goal) * 2),
            max_derivations: self.max_derivations * 2,
            memo_enabled: self.memo_enabled,
            max_goals: self.max_goals * 2,
        }
    }
}

/// A proof tree, conclusion at the root, read bottom-up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub rule: RuleName,
    /// Antecedent position the rule acted on; empty for succedent rules.
    pub site: Site,
    pub conclusion: Sequent,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    /// Largest number of structural steps on a root-to-leaf path.
    pub fn structural_depth(&self) -> u32 {
        let own = u32::from(self.rule.is_structural());
        own + self.premises.iter().map(Derivation::structural_depth).max().unwrap_or(0)
    }

    /// Largest number of T steps on a root-to-leaf path.
    pub fn t_depth(&self) -> u32 {
        let own = u32::from(self.rule == RuleName::T);
        own + self.premises.iter().map(Derivation::t_depth).max().unwrap_or(0)
    }

    /// Visits nodes in pre-order.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Derivation)) {
        visit(self);
        for p in &self.premises {
            p.walk(visit);
        }
    }

    /// True if some root-to-leaf path meets the same canonical sequent twice.
    pub fn has_repeated_goal(&self) -> bool {
        fn go(d: &Derivation, path: &mut Vec<crate::syntax::SequentKey>) -> bool {
            let key = d.conclusion.canonical_key();
            if path.contains(&key) {
                return true;
            }
            path.push(key);
            let found = d.premises.iter().any(|p| go(p, path));
            path.pop();
            found
        }
        go(self, &mut Vec::new())
    }
}

/// Independent proof checker: every node must follow from its premises by its
/// rule at its site, and only Axiom and Lex nodes may be leaves.
pub fn validate_derivation(d: &Derivation) -> bool {
    let Some(expected) = apply_backward(d.rule, &d.site, &d.conclusion) else {
        return false;
    };
    expected.len() == d.premises.len()
        && expected
            .iter()
            .zip(&d.premises)
            .all(|(want, got)| want.same_logic(&got.conclusion))
        && d.premises.iter().all(validate_derivation)
}
