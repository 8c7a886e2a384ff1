//! Single backward rule applications.
//!
//! Every rule is read goal-directed: given a conclusion sequent and a site,
//! [`apply_backward`] returns the premises the rule requires, or `None` when
//! the rule does not match there.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{BinaryMode, Formula, Sequent, Structure, UnaryMode};

/// Orientation of a two-way postulate. `Forward` rewrites the goal antecedent
/// from the left-hand side of the postulate to its right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Backward,
}

/// Inference steps. Declaration order is the tie-breaking order of search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleName {
    Axiom,
    Lex,
    ProdR(BinaryMode),
    ProdL(BinaryMode),
    OverR(BinaryMode),
    OverL(BinaryMode),
    UnderR(BinaryMode),
    UnderL(BinaryMode),
    DiaR(UnaryMode),
    DiaL(UnaryMode),
    BoxDownR(UnaryMode),
    BoxDownL(UnaryMode),
    Root(Direction),
    Left(Direction),
    Right(Direction),
    T,
    KPrime,
    UnquoteAnte,
    UnquoteSucc,
}

impl RuleName {
    /// Rules that rewrite by a postulate of the structural component.
    pub fn is_structural(self) -> bool {
        matches!(
            self,
            RuleName::Root(_)
                | RuleName::Left(_)
                | RuleName::Right(_)
                | RuleName::T
                | RuleName::KPrime
                | RuleName::UnquoteAnte
                | RuleName::UnquoteSucc
        )
    }

    /// Rules that act on the succedent only and therefore take no site.
    pub fn is_succedent_rule(self) -> bool {
        matches!(
            self,
            RuleName::Axiom
                | RuleName::Lex
                | RuleName::ProdR(_)
                | RuleName::OverR(_)
                | RuleName::UnderR(_)
                | RuleName::DiaR(_)
                | RuleName::BoxDownR(_)
                | RuleName::UnquoteSucc
        )
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = |d: &Direction| if *d == Direction::Forward { "->" } else { "<-" };
        match self {
            RuleName::Axiom => write!(f, "Axiom"),
            RuleName::Lex => write!(f, "Lex"),
            RuleName::ProdR(m) => write!(f, "ProdR{}", m.tag()),
            RuleName::ProdL(m) => write!(f, "ProdL{}", m.tag()),
            RuleName::OverR(m) => write!(f, "OverR{}", m.tag()),
            RuleName::OverL(m) => write!(f, "OverL{}", m.tag()),
            RuleName::UnderR(m) => write!(f, "UnderR{}", m.tag()),
            RuleName::UnderL(m) => write!(f, "UnderL{}", m.tag()),
            RuleName::DiaR(m) => write!(f, "DiaR{}", m.tag()),
            RuleName::DiaL(m) => write!(f, "DiaL{}", m.tag()),
            RuleName::BoxDownR(m) => write!(f, "BoxDownR{}", m.tag()),
            RuleName::BoxDownL(m) => write!(f, "BoxDownL{}", m.tag()),
            RuleName::Root(d) => write!(f, "Root{}", arrow(d)),
            RuleName::Left(d) => write!(f, "Left{}", arrow(d)),
            RuleName::Right(d) => write!(f, "Right{}", arrow(d)),
            RuleName::T => write!(f, "T"),
            RuleName::KPrime => write!(f, "K'"),
            RuleName::UnquoteAnte => write!(f, "UnquoteAnte"),
            RuleName::UnquoteSucc => write!(f, "UnquoteSucc"),
        }
    }
}

use BinaryMode::{Default as Def, C};
use UnaryMode::Value;

fn leaf_formula(s: &Structure) -> Option<&Formula> {
    match s {
        Structure::Leaf { formula, .. } => Some(formula),
        _ => None,
    }
}

/// Rewrites the substructure at `site` with `f`, if it matches.
fn rewrite(
    goal: &Sequent,
    site: &[u8],
    f: impl FnOnce(&Structure) -> Option<Structure>,
) -> Option<Vec<Sequent>> {
    let sub = goal.antecedent.get(site)?;
    let new = f(sub)?;
    let antecedent = goal.antecedent.replace_at(site, new)?;
    Some(vec![Sequent::new(antecedent, goal.succedent.clone())])
}

/// Structural rewrite of a single substructure by a postulate, goal-directed.
pub(crate) fn rewrite_structure(rule: RuleName, sub: &Structure) -> Option<Structure> {
    use Structure::{Bin, Un};
    match (rule, sub) {
        (RuleName::Root(Direction::Forward), s) => Some(Structure::bin(C, s.clone(), Structure::Unit)),
        (RuleName::Root(Direction::Backward), Bin(C, d, unit)) if **unit == Structure::Unit => {
            Some((**d).clone())
        }
        (RuleName::Left(Direction::Forward), Bin(C, inner, k)) => match &**inner {
            Bin(Def, b, c) => Some(Structure::bin(C, (**b).clone(), Structure::bin(Def, (**c).clone(), (**k).clone()))),
            _ => None,
        },
        (RuleName::Left(Direction::Backward), Bin(C, b, inner)) => match &**inner {
            Bin(Def, c, k) => Some(Structure::bin(C, Structure::bin(Def, (**b).clone(), (**c).clone()), (**k).clone())),
            _ => None,
        },
        (RuleName::Right(Direction::Forward), Bin(C, inner, k)) => match &**inner {
            Bin(Def, b, c) if matches!(**b, Un(Value, _)) => Some(Structure::bin(
                C,
                (**c).clone(),
                Structure::bin(Def, (**k).clone(), (**b).clone()),
            )),
            _ => None,
        },
        (RuleName::Right(Direction::Backward), Bin(C, c, inner)) => match &**inner {
            Bin(Def, k, b) if matches!(**b, Un(Value, _)) => Some(Structure::bin(
                C,
                Structure::bin(Def, (**b).clone(), (**c).clone()),
                (**k).clone(),
            )),
            _ => None,
        },
        (RuleName::T, s) => Some(Structure::un(Value, s.clone())),
        (RuleName::KPrime, Bin(Def, l, r)) => match (&**l, &**r) {
            (Un(Value, a), Un(Value, b)) => {
                Some(Structure::un(Value, Structure::bin(Def, (**a).clone(), (**b).clone())))
            }
            _ => None,
        },
        (RuleName::UnquoteAnte, Un(Value, inner)) => match &**inner {
            Un(UnaryMode::U, _) => Some((**inner).clone()),
            _ => None,
        },
        _ => None,
    }
}

/// Premises of `rule` applied backward to `goal` at `site`.
pub fn apply_backward(rule: RuleName, site: &[u8], goal: &Sequent) -> Option<Vec<Sequent>> {
    let ante = &goal.antecedent;
    let succ = &goal.succedent;
    if rule.is_succedent_rule() && !site.is_empty() {
        return None;
    }
    match rule {
        RuleName::Axiom | RuleName::Lex => match ante {
            Structure::Leaf { formula, label } if formula == succ => {
                let lexical = label.is_some();
                (lexical == (rule == RuleName::Lex)).then(Vec::new)
            }
            _ => None,
        },
        RuleName::ProdR(m) => match (ante, succ) {
            (Structure::Bin(am, g1, g2), Formula::Product(fm, a, b)) if *am == m && *fm == m => Some(vec![
                Sequent::new((**g1).clone(), (**a).clone()),
                Sequent::new((**g2).clone(), (**b).clone()),
            ]),
            _ => None,
        },
        RuleName::OverR(m) => match succ {
            Formula::Over(fm, b, a) if *fm == m => Some(vec![Sequent::new(
                Structure::bin(m, ante.clone(), Structure::leaf((**a).clone())),
                (**b).clone(),
            )]),
            _ => None,
        },
        RuleName::UnderR(m) => match succ {
            Formula::Under(fm, a, b) if *fm == m => Some(vec![Sequent::new(
                Structure::bin(m, Structure::leaf((**a).clone()), ante.clone()),
                (**b).clone(),
            )]),
            _ => None,
        },
        RuleName::DiaR(m) => match (ante, succ) {
            (Structure::Un(am, g), Formula::Dia(fm, a)) if *am == m && *fm == m => {
                Some(vec![Sequent::new((**g).clone(), (**a).clone())])
            }
            _ => None,
        },
        RuleName::BoxDownR(m) => match succ {
            Formula::BoxDown(fm, a) if *fm == m => {
                Some(vec![Sequent::new(Structure::un(m, ante.clone()), (**a).clone())])
            }
            _ => None,
        },
        RuleName::UnquoteSucc => match succ {
            Formula::Dia(UnaryMode::U, _) => {
                Some(vec![Sequent::new(ante.clone(), Formula::dia(Value, succ.clone()))])
            }
            _ => None,
        },
        RuleName::OverL(m) => {
            let Structure::Bin(sm, functor, arg) = ante.get(site)? else { return None };
            match leaf_formula(functor)? {
                Formula::Over(fm, b, a) if *sm == m && *fm == m => Some(vec![
                    Sequent::new(ante.replace_at(site, Structure::leaf((**b).clone()))?, succ.clone()),
                    Sequent::new((**arg).clone(), (**a).clone()),
                ]),
                _ => None,
            }
        }
        RuleName::UnderL(m) => {
            let Structure::Bin(sm, arg, functor) = ante.get(site)? else { return None };
            match leaf_formula(functor)? {
                Formula::Under(fm, a, b) if *sm == m && *fm == m => Some(vec![
                    Sequent::new(ante.replace_at(site, Structure::leaf((**b).clone()))?, succ.clone()),
                    Sequent::new((**arg).clone(), (**a).clone()),
                ]),
                _ => None,
            }
        }
        RuleName::DiaL(m) => rewrite(goal, site, |sub| match sub {
            Structure::Leaf { formula: Formula::Dia(fm, a), label } if *fm == m => Some(Structure::un(
                m,
                Structure::Leaf { formula: (**a).clone(), label: label.clone() },
            )),
            _ => None,
        }),
        RuleName::ProdL(m) => rewrite(goal, site, |sub| match leaf_formula(sub)? {
            Formula::Product(fm, a, b) if *fm == m => Some(Structure::bin(
                m,
                Structure::leaf((**a).clone()),
                Structure::leaf((**b).clone()),
            )),
            _ => None,
        }),
        RuleName::BoxDownL(m) => rewrite(goal, site, |sub| match sub {
            Structure::Un(sm, inner) if *sm == m => match &**inner {
                Structure::Leaf { formula: Formula::BoxDown(fm, a), label } if *fm == m => {
                    Some(Structure::Leaf { formula: (**a).clone(), label: label.clone() })
                }
                _ => None,
            },
            _ => None,
        }),
        RuleName::Root(_)
        | RuleName::Left(_)
        | RuleName::Right(_)
        | RuleName::T
        | RuleName::KPrime
        | RuleName::UnquoteAnte => rewrite(goal, site, |sub| rewrite_structure(rule, sub)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(t: &str) -> Formula {
        parse_formula(t).unwrap()
    }

    fn st(t: &str) -> Structure {
        Structure::from_formula(&f(t))
    }

    #[test]
    fn postulates_round_trip() {
        let cases = [
            (RuleName::Root(Direction::Forward), RuleName::Root(Direction::Backward), "a * b"),
            (RuleName::Left(Direction::Forward), RuleName::Left(Direction::Backward), "(a * b) *c k"),
            (RuleName::Right(Direction::Forward), RuleName::Right(Direction::Backward), "(<>a * b) *c k"),
        ];
        for (fwd, bwd, text) in cases {
            let s = st(text);
            let there = rewrite_structure(fwd, &s).unwrap();
            assert_eq!(rewrite_structure(bwd, &there).unwrap(), s, "{fwd} then {bwd}");
        }
    }

    #[test]
    fn right_requires_value_diamond() {
        assert!(rewrite_structure(RuleName::Right(Direction::Forward), &st("(a * b) *c k")).is_none());
        assert_eq!(
            rewrite_structure(RuleName::Right(Direction::Forward), &st("(<>a * b) *c k")).unwrap(),
            st("b *c (k * <>a)")
        );
    }

    #[test]
    fn one_way_postulates() {
        assert_eq!(rewrite_structure(RuleName::KPrime, &st("<>a * <>b")).unwrap(), st("<>(a * b)"));
        assert!(rewrite_structure(RuleName::KPrime, &st("<>a * b")).is_none());
        assert_eq!(rewrite_structure(RuleName::UnquoteAnte, &st("<><u>a")).unwrap(), st("<u>a"));
        assert!(rewrite_structure(RuleName::UnquoteAnte, &st("<><p>a")).is_none());
        assert_eq!(rewrite_structure(RuleName::T, &st("a")).unwrap(), st("<>a"));
    }

    #[test]
    fn axiom_versus_lex() {
        let plain = Sequent::new(Structure::leaf(f("np")), f("np"));
        let word = Sequent::new(Structure::word(f("np"), "bob", 2), f("np"));
        assert_eq!(apply_backward(RuleName::Axiom, &[], &plain), Some(vec![]));
        assert_eq!(apply_backward(RuleName::Lex, &[], &plain), None);
        assert_eq!(apply_backward(RuleName::Lex, &[], &word), Some(vec![]));
        let wrong = Sequent::new(Structure::leaf(f("np")), f("s"));
        assert_eq!(apply_backward(RuleName::Axiom, &[], &wrong), None);
    }

    #[test]
    fn over_left() {
        let goal = Sequent::new(st("np * (((np \\ s0) / np) * np)"), f("s0"));
        let premises = apply_backward(RuleName::OverL(Def), &[1], &goal).unwrap();
        assert_eq!(premises[0], Sequent::new(st("np * (np \\ s0)"), f("s0")));
        assert_eq!(premises[1], Sequent::new(st("np"), f("np")));
        assert!(apply_backward(RuleName::OverL(C), &[1], &goal).is_none());
    }

    #[test]
    fn unquote_on_succedent() {
        let goal = Sequent::new(st("np"), f("s0"));
        let premises = apply_backward(RuleName::UnquoteSucc, &[], &goal).unwrap();
        assert_eq!(premises[0].succedent, f("<><u>s"));
        assert!(apply_backward(RuleName::UnquoteSucc, &[], &Sequent::new(st("np"), f("s-"))).is_none());
    }
}
