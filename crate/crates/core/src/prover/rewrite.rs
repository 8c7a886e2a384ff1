use crate::syntax::{BinaryMode, Formula, Sequent, Site};

use super::rules::{apply_backward, Direction, RuleName};
use super::SearchBudget;

/// One backward application of a structural postulate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: RuleName,
    pub site: Site,
    pub premises: Vec<Sequent>,
}

pub(crate) const POSTULATES: [RuleName; 10] = [
    RuleName::Root(Direction::Forward),
    RuleName::Root(Direction::Backward),
    RuleName::Left(Direction::Forward),
    RuleName::Left(Direction::Backward),
    RuleName::Right(Direction::Forward),
    RuleName::Right(Direction::Backward),
    RuleName::T,
    RuleName::KPrime,
    RuleName::UnquoteAnte,
    RuleName::UnquoteSucc,
];

/// Root-> is offered only at the top of an antecedent that has no
/// continuation-mode node yet and mentions some continuation-mode connective
/// that could consume the new node; every other postulate at every site.
pub(crate) fn root_intro_allowed(s: &Sequent) -> bool {
    !s.antecedent.has_mode(BinaryMode::C)
        && (s.antecedent.leaves().any(|f| mentions_c(f)) || mentions_c(&s.succedent))
}

fn mentions_c(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) | Formula::Unit => false,
        Formula::Product(m, a, b) | Formula::Over(m, a, b) | Formula::Under(m, a, b) => {
            *m == BinaryMode::C || mentions_c(a) || mentions_c(b)
        }
        Formula::Dia(_, a) | Formula::BoxDown(_, a) => mentions_c(a),
    }
}

/// Every single-step backward postulate application available at `s`, in
/// rule order and then leftmost-innermost site order.
pub fn enumerate_rewrites(s: &Sequent, budget: &SearchBudget) -> Vec<Rewrite> {
    let t_left = budget.t_insertions_for(s);
    let sites = s.antecedent.sites();
    let mut out = Vec::new();
    for rule in POSTULATES {
        let candidates: Vec<Site> = match rule {
            RuleName::Root(Direction::Forward) => {
                if root_intro_allowed(s) {
                    vec![Vec::new()]
                } else {
                    Vec::new()
                }
            }
            RuleName::T if t_left == 0 => Vec::new(),
            RuleName::UnquoteSucc => vec![Vec::new()],
            _ => sites.clone(),
        };
        for site in candidates {
            if let Some(premises) = apply_backward(rule, &site, s) {
                out.push(Rewrite { rule, site, premises });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, Structure};

    fn seq(ante: &str, succ: &str) -> Sequent {
        Sequent::new(
            Structure::from_formula(&parse_formula(ante).unwrap()),
            parse_formula(succ).unwrap(),
        )
    }

    #[test]
    fn root_intro_on_continuation_free_goal() {
        let s = seq("a * (b /c x)", "s0");
        let rewrites = enumerate_rewrites(&s, &SearchBudget::default());
        let first = &rewrites[0];
        assert_eq!(first.rule, RuleName::Root(Direction::Forward));
        assert_eq!(first.premises[0], seq("(a * (b /c x)) *c 1", "s0"));
        assert!(enumerate_rewrites(&seq("a * b", "s0"), &SearchBudget::default())
            .iter()
            .all(|r| r.rule != RuleName::Root(Direction::Forward)));
    }

    #[test]
    fn right_forward_entry() {
        let s = seq("(<>b * c) *c k", "s");
        let rewrites = enumerate_rewrites(&s, &SearchBudget::default());
        let right: Vec<_> = rewrites
            .iter()
            .filter(|r| r.rule == RuleName::Right(Direction::Forward))
            .collect();
        assert_eq!(right.len(), 1);
        assert_eq!(right[0].premises[0], seq("c *c (k * <>b)", "s"));
        assert!(rewrites.iter().all(|r| r.rule != RuleName::Root(Direction::Forward)));
    }

    #[test]
    fn no_t_without_allowance() {
        let s = seq("a * b", "s");
        let budget = SearchBudget { max_t_insertions: Some(0), ..SearchBudget::default() };
        assert!(enumerate_rewrites(&s, &budget).iter().all(|r| r.rule != RuleName::T));
        let t_count = enumerate_rewrites(&s, &SearchBudget::default())
            .iter()
            .filter(|r| r.rule == RuleName::T)
            .count();
        assert_eq!(t_count, 3);
    }

    #[test]
    fn deterministic_order() {
        let s = seq("(<>a * <>b) *c (1 * <>c)", "s0");
        let a = enumerate_rewrites(&s, &SearchBudget::default());
        let b = enumerate_rewrites(&s, &SearchBudget::default());
        assert_eq!(a, b);
        let tags: Vec<RuleName> = a.iter().map(|r| r.rule).collect();
        let mut sorted = tags.clone();
        sorted.sort();
        assert_eq!(tags, sorted);
    }
}
