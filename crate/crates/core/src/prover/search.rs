//! Goal-directed search.
//!
//! Subgoals are expanded into an AND/OR graph keyed by sequent and
//! navigation phase. Provability is then propagated cheapest-first (Knuth's
//! generalisation of Dijkstra to AND/OR graphs) where the cost of a proof is
//! the largest number of structural steps on any of its branches. Facts are
//! kept per (subgoal, scope order) so that every distinct scope reading of
//! the root is found, each with a cheapest witness.
//!
//! T is never offered blindly. A value diamond inserted by T only matters to
//! a rule that needs one (Right, K', value-mode DiaR and BoxDownL), and T
//! commutes with every rule that does not look at the inserted diamond, so T
//! is applied immediately before such a rule, at the position it inspects.
//!
//! Left and Right move the focus of an open continuation through the
//! surface tree. Once the focus has started to descend towards a quantifier
//! it does not climb again, so every walk between two foci goes up to their
//! common ancestor and then straight down.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};

use crate::syntax::{BinaryMode, Formula, Label, Sequent, Site, Structure, UnaryMode};

use super::rewrite::root_intro_allowed;
use super::rules::{apply_backward, Direction, RuleName};
use super::{Derivation, SearchBudget};

/// Output of [`prove`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofResult {
    pub derivations: Vec<Derivation>,
    /// Some branch was cut by a budget limit.
    pub exhausted: bool,
    /// Distinct subgoals examined.
    pub goals_examined: usize,
}

impl ProofResult {
    pub fn is_proved(&self) -> bool {
        !self.derivations.is_empty()
    }
}

/// Where an open continuation is heading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Phase {
    /// No continuation node.
    Flat,
    Down,
    Up,
    /// A goal that arrives with a continuation already open.
    Any,
}

impl Phase {
    fn of_premise(self, rule: RuleName, premise: &Sequent) -> Phase {
        if !premise.antecedent.has_mode(BinaryMode::C) {
            return Phase::Flat;
        }
        match rule {
            RuleName::Root(Direction::Forward)
            | RuleName::Left(Direction::Forward)
            | RuleName::Right(Direction::Forward) => Phase::Down,
            RuleName::Left(Direction::Backward)
            | RuleName::Right(Direction::Backward)
            | RuleName::UnderR(BinaryMode::C) => Phase::Up,
            _ if self == Phase::Flat => Phase::Any,
            _ => self,
        }
    }

    fn permits(self, rule: RuleName) -> bool {
        match rule {
            RuleName::Left(Direction::Backward)
            | RuleName::Right(Direction::Backward)
            | RuleName::Root(Direction::Backward) => self != Phase::Down,
            _ => true,
        }
    }
}

/// A chain of backward steps; all but the last have exactly one premise.
#[derive(Clone, Debug)]
struct Alt {
    steps: Vec<(RuleName, Site)>,
    t_used: u32,
}

impl Alt {
    fn single(rule: RuleName, site: Site) -> Alt {
        Alt { steps: vec![(rule, site)], t_used: 0 }
    }

    fn weight(&self) -> u32 {
        self.steps.iter().filter(|(r, _)| r.is_structural()).count() as u32
    }
}

struct Expansion {
    /// Conclusion of every step in the chain.
    conclusions: Vec<Sequent>,
    premises: Vec<Sequent>,
}

fn expand(goal: &Sequent, alt: &Alt) -> Option<Expansion> {
    let mut conclusions = vec![goal.clone()];
    let (last, init) = alt.steps.split_last()?;
    for (rule, site) in init {
        let mut next = apply_backward(*rule, site, conclusions.last().unwrap())?;
        if next.len() != 1 {
            return None;
        }
        conclusions.push(next.pop().unwrap());
    }
    let premises = apply_backward(last.0, &last.1, conclusions.last().unwrap())?;
    Some(Expansion { conclusions, premises })
}

/// Labels of lexical quantifiers consumed by continuation-mode slash
/// elimination along the chain, outermost first.
fn scope_items(steps: &[(RuleName, Site)], conclusions: &[Sequent]) -> Vec<Label> {
    let mut out = Vec::new();
    for ((rule, site), conclusion) in steps.iter().zip(conclusions) {
        if *rule == RuleName::OverL(BinaryMode::C) {
            if let Some(Structure::Bin(_, functor, _)) = conclusion.antecedent.get(site) {
                if let Structure::Leaf { label: Some(l), .. } = &**functor {
                    out.push(l.clone());
                }
            }
        }
    }
    out
}

fn is_value_dia(s: &Structure) -> bool {
    matches!(s, Structure::Un(UnaryMode::Value, _))
}

fn child(site: &[u8], path: &[u8]) -> Site {
    let mut s = site.to_vec();
    s.extend_from_slice(path);
    s
}

fn count_atoms(f: &Formula, sign: i32, counts: &mut HashMap<String, i32>) {
    match f {
        Formula::Atom(a) => *counts.entry(a.clone()).or_default() += sign,
        Formula::Unit => {}
        Formula::Product(_, a, b) => {
            count_atoms(a, sign, counts);
            count_atoms(b, sign, counts);
        }
        Formula::Over(_, result, arg) | Formula::Under(_, arg, result) => {
            count_atoms(result, sign, counts);
            count_atoms(arg, -sign, counts);
        }
        Formula::Dia(_, a) | Formula::BoxDown(_, a) => count_atoms(a, sign, counts),
    }
}

fn count_structure(s: &Structure, counts: &mut HashMap<String, i32>) {
    match s {
        Structure::Leaf { formula, .. } => count_atoms(formula, 1, counts),
        Structure::Unit => {}
        Structure::Bin(_, l, r) => {
            count_structure(l, counts);
            count_structure(r, counts);
        }
        Structure::Un(_, b) => count_structure(b, counts),
    }
}

/// Atom-occurrence balance, preserved by every rule; unbalanced goals are
/// unprovable.
fn atoms_balanced(goal: &Sequent) -> bool {
    let mut counts = HashMap::new();
    count_structure(&goal.antecedent, &mut counts);
    count_atoms(&goal.succedent, -1, &mut counts);
    counts.values().all(|&c| c == 0)
}

/// Candidate backward steps for `goal`, in rule order then site order.
/// The flag reports that some step was withheld for lack of T allowance.
fn alternatives(goal: &Sequent, phase: Phase, t_left: u32) -> (Vec<Alt>, bool) {
    let (mut alts, blocked) = raw_alternatives(goal, t_left);
    alts.retain(|a| phase.permits(a.steps.last().unwrap().0));
    (alts, blocked)
}

fn raw_alternatives(goal: &Sequent, t_left: u32) -> (Vec<Alt>, bool) {
    use BinaryMode::{Default as Def, C};
    let ante = &goal.antecedent;
    let succ = &goal.succedent;

    if !atoms_balanced(goal) {
        return (Vec::new(), false);
    }
    for rule in [RuleName::Axiom, RuleName::Lex] {
        if apply_backward(rule, &[], goal).is_some() {
            return (vec![Alt::single(rule, Vec::new())], false);
        }
    }
    // Invertible rules are applied eagerly.
    let invertible_right = match succ {
        Formula::Over(m, ..) => Some(RuleName::OverR(*m)),
        Formula::Under(m, ..) => Some(RuleName::UnderR(*m)),
        Formula::BoxDown(m, _) => Some(RuleName::BoxDownR(*m)),
        _ => None,
    };
    if let Some(rule) = invertible_right {
        return (vec![Alt::single(rule, Vec::new())], false);
    }
    let sites = ante.sites();
    for site in &sites {
        if let Some(Structure::Leaf { formula, .. }) = ante.get(site) {
            let rule = match formula {
                Formula::Dia(m, _) => Some(RuleName::DiaL(*m)),
                Formula::Product(m, ..) => Some(RuleName::ProdL(*m)),
                _ => None,
            };
            if let Some(rule) = rule {
                return (vec![Alt::single(rule, site.clone())], false);
            }
        }
    }

    let mut out = Vec::new();
    let mut blocked = false;
    // Adds `rule` at `site`, preceded by T at each of `wrap` (relative to site).
    let mut push_with_t = |out: &mut Vec<Alt>, rule: RuleName, site: &Site, wrap: Vec<Site>| {
        let needed = wrap.len() as u32;
        if needed > t_left {
            blocked = true;
            return;
        }
        let mut steps: Vec<(RuleName, Site)> =
            wrap.into_iter().map(|w| (RuleName::T, child(site, &w))).collect();
        steps.push((rule, site.clone()));
        out.push(Alt { steps, t_used: needed });
    };
    let fits = |rule: RuleName, site: &Site| apply_backward(rule, site, goal).is_some();

    for m in BinaryMode::ALL {
        if fits(RuleName::ProdR(m), &Vec::new()) {
            out.push(Alt::single(RuleName::ProdR(m), Vec::new()));
        }
    }
    // While a continuation is open, only continuation-mode functors are
    // eliminated; surface eliminations wait until it is closed by Root<-.
    let flat = !ante.has_mode(C);
    let elim_modes: &[BinaryMode] = if flat { &BinaryMode::ALL } else { &[C] };
    for &m in elim_modes {
        for site in &sites {
            if fits(RuleName::OverL(m), site) {
                out.push(Alt::single(RuleName::OverL(m), site.clone()));
            }
        }
    }
    for &m in elim_modes {
        for site in &sites {
            if fits(RuleName::UnderL(m), site) {
                out.push(Alt::single(RuleName::UnderL(m), site.clone()));
            }
        }
    }
    for m in UnaryMode::ALL {
        if fits(RuleName::DiaR(m), &Vec::new()) {
            out.push(Alt::single(RuleName::DiaR(m), Vec::new()));
        } else if m == UnaryMode::Value && matches!(succ, Formula::Dia(UnaryMode::Value, _)) {
            push_with_t(&mut out, RuleName::DiaR(m), &Vec::new(), vec![Vec::new()]);
        }
    }
    for m in UnaryMode::ALL {
        for site in &sites {
            if fits(RuleName::BoxDownL(m), site) {
                out.push(Alt::single(RuleName::BoxDownL(m), site.clone()));
            } else if m == UnaryMode::Value {
                if let Some(Structure::Leaf { formula: Formula::BoxDown(UnaryMode::Value, _), .. }) =
                    ante.get(site)
                {
                    push_with_t(&mut out, RuleName::BoxDownL(m), site, vec![Vec::new()]);
                }
            }
        }
    }
    if root_intro_allowed(goal) {
        out.push(Alt::single(RuleName::Root(Direction::Forward), Vec::new()));
    }
    for rule in [
        RuleName::Root(Direction::Backward),
        RuleName::Left(Direction::Forward),
        RuleName::Left(Direction::Backward),
    ] {
        for site in &sites {
            if fits(rule, site) {
                out.push(Alt::single(rule, site.clone()));
            }
        }
    }
    for (dir, slot) in [(Direction::Forward, [0u8, 0]), (Direction::Backward, [1u8, 1])] {
        for site in &sites {
            let shape_ok = match ante.get(site) {
                Some(Structure::Bin(C, l, r)) => match (dir, &**l, &**r) {
                    (Direction::Forward, Structure::Bin(Def, ..), _) => true,
                    (Direction::Backward, _, Structure::Bin(Def, ..)) => true,
                    _ => false,
                },
                _ => false,
            };
            if !shape_ok {
                continue;
            }
            let moved = ante.get(&child(site, &slot)).unwrap();
            let wrap = if is_value_dia(moved) { vec![] } else { vec![slot.to_vec()] };
            push_with_t(&mut out, RuleName::Right(dir), site, wrap);
        }
    }
    // Quotations are merged only once the continuation has been closed off.
    for site in sites.iter().filter(|_| flat) {
        if let Some(Structure::Bin(Def, l, r)) = ante.get(site) {
            let (dl, dr) = (is_value_dia(l), is_value_dia(r));
            if !(dl || dr) {
                continue;
            }
            let mut wrap = Vec::new();
            if !dl {
                wrap.push(vec![0]);
            }
            if !dr {
                wrap.push(vec![1]);
            }
            push_with_t(&mut out, RuleName::KPrime, site, wrap);
        }
    }
    for site in &sites {
        if fits(RuleName::UnquoteAnte, site) {
            out.push(Alt::single(RuleName::UnquoteAnte, site.clone()));
        }
    }
    // Unquote on the succedent is only useful to feed a value-mode DiaR.
    if fits(RuleName::UnquoteSucc, &Vec::new()) && is_value_dia(ante) {
        out.push(Alt {
            steps: vec![
                (RuleName::UnquoteSucc, Vec::new()),
                (RuleName::DiaR(UnaryMode::Value), Vec::new()),
            ],
            t_used: 0,
        });
    }
    (out, blocked)
}

struct GraphAlt {
    alt: Alt,
    premises: Vec<usize>,
    weight: u32,
    t_used: u32,
    scope: Vec<Label>,
}

struct Node {
    goal: Sequent,
    alts: Vec<GraphAlt>,
}

struct Fact {
    node: usize,
    reading: Vec<Label>,
    cost: u32,
    t_depth: u32,
    alt: usize,
    premise_facts: Vec<usize>,
}

struct Graph {
    nodes: Vec<Node>,
    exhausted: bool,
}

fn build_graph(root: &Sequent, t_total: u32, max_goals: usize) -> Graph {
    let mut index: HashMap<(Sequent, Phase), usize> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut phase_of: Vec<Phase> = Vec::new();
    let mut queue = VecDeque::new();
    let mut exhausted = false;

    let root_phase = Phase::Flat.of_premise(RuleName::Axiom, root);
    index.insert((root.clone(), root_phase), 0);
    nodes.push(Node { goal: root.clone(), alts: Vec::new() });
    phase_of.push(root_phase);
    queue.push_back(0);

    while let Some(id) = queue.pop_front() {
        let phase = phase_of[id];
        let goal = nodes[id].goal.clone();
        // The T allowance is enforced per branch during propagation.
        let (alts, blocked) = alternatives(&goal, phase, t_total);
        exhausted |= blocked;
        let mut graph_alts = Vec::with_capacity(alts.len());
        for alt in alts {
            let Some(exp) = expand(&goal, &alt) else { continue };
            let rule = alt.steps.last().unwrap().0;
            let mut premises = Vec::with_capacity(exp.premises.len());
            let mut complete = true;
            for p in exp.premises {
                let p_phase = phase.of_premise(rule, &p);
                let key = (p, p_phase);
                let pid = match index.get(&key) {
                    Some(&pid) => pid,
                    None => {
                        if nodes.len() >= max_goals {
                            exhausted = true;
                            complete = false;
                            break;
                        }
                        let pid = nodes.len();
                        nodes.push(Node { goal: key.0.clone(), alts: Vec::new() });
                        index.insert(key, pid);
                        phase_of.push(p_phase);
                        queue.push_back(pid);
                        pid
                    }
                };
                premises.push(pid);
            }
            if !complete {
                continue;
            }
            let scope = scope_items(&alt.steps, &exp.conclusions);
            let weight = alt.weight();
            let t_used = alt.t_used;
            graph_alts.push(GraphAlt { alt, premises, weight, t_used, scope });
        }
        nodes[id].alts = graph_alts;
    }
    Graph { nodes, exhausted }
}

/// Cheapest-first propagation; returns the finalized facts of the root.
fn propagate(graph: &Graph, max_cost: u32, max_t: u32, wanted: usize) -> (Vec<Fact>, Vec<usize>, bool) {
    let n = graph.nodes.len();
    let mut parents: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (id, node) in graph.nodes.iter().enumerate() {
        for (a, alt) in node.alts.iter().enumerate() {
            for (slot, &p) in alt.premises.iter().enumerate() {
                parents[p].push((id, a, slot));
            }
        }
    }

    let mut facts: Vec<Fact> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(u32, usize)>> = BinaryHeap::new();
    let mut finalized: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen: HashSet<(usize, Vec<Label>)> = HashSet::new();
    let mut cut = false;

    let offer = |facts: &mut Vec<Fact>, heap: &mut BinaryHeap<Reverse<(u32, usize)>>, fact: Fact| {
        let id = facts.len();
        heap.push(Reverse((fact.cost, id)));
        facts.push(fact);
    };

    for (id, node) in graph.nodes.iter().enumerate() {
        for (a, alt) in node.alts.iter().enumerate() {
            if alt.premises.is_empty() {
                if alt.weight > max_cost || alt.t_used > max_t {
                    cut = true;
                    continue;
                }
                let fact = Fact {
                    node: id,
                    reading: alt.scope.clone(),
                    cost: alt.weight,
                    t_depth: alt.t_used,
                    alt: a,
                    premise_facts: Vec::new(),
                };
                offer(&mut facts, &mut heap, fact);
            }
        }
    }

    let mut root_facts = Vec::new();
    while let Some(Reverse((_, fid))) = heap.pop() {
        let node = facts[fid].node;
        if !seen.insert((node, facts[fid].reading.clone())) {
            continue;
        }
        finalized[node].push(fid);
        if node == 0 {
            root_facts.push(fid);
            if root_facts.len() >= wanted {
                break;
            }
        }
        for &(parent, a, slot) in &parents[node] {
            let alt = &graph.nodes[parent].alts[a];
            let choices: Vec<Vec<usize>> = alt
                .premises
                .iter()
                .enumerate()
                .map(|(i, &p)| if i == slot { vec![fid] } else { finalized[p].clone() })
                .collect();
            if choices.iter().any(Vec::is_empty) {
                continue;
            }
            for combo in cartesian(&choices) {
                let cost = alt.weight + combo.iter().map(|&f| facts[f].cost).max().unwrap_or(0);
                let t_depth =
                    alt.t_used + combo.iter().map(|&f| facts[f].t_depth).max().unwrap_or(0);
                if cost > max_cost || t_depth > max_t {
                    cut = true;
                    continue;
                }
                let mut reading = alt.scope.clone();
                for &f in &combo {
                    reading.extend(facts[f].reading.iter().cloned());
                }
                if seen.contains(&(parent, reading.clone())) {
                    continue;
                }
                let fact = Fact { node: parent, reading, cost, t_depth, alt: a, premise_facts: combo };
                offer(&mut facts, &mut heap, fact);
            }
        }
    }
    (facts, root_facts, cut)
}

fn cartesian(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(out.len() * options.len());
        for prefix in &out {
            for &o in options {
                let mut v = prefix.clone();
                v.push(o);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Turns a chain of steps into nested derivation nodes ending in `tail`.
fn chain_derivation(goal: &Sequent, alt: &Alt, tail: Vec<Derivation>) -> Derivation {
    let exp = expand(goal, alt).expect("alternative re-expands");
    let mut premises = tail;
    for ((rule, site), conclusion) in alt.steps.iter().zip(exp.conclusions).rev() {
        let node = Derivation { rule: *rule, site: site.clone(), conclusion, premises };
        premises = vec![node];
    }
    premises.pop().unwrap()
}

fn build_derivation(graph: &Graph, facts: &[Fact], fid: usize) -> Derivation {
    let fact = &facts[fid];
    let node = &graph.nodes[fact.node];
    let alt = &node.alts[fact.alt].alt;
    let tail = fact.premise_facts.iter().map(|&p| build_derivation(graph, facts, p)).collect();
    chain_derivation(&node.goal, alt, tail)
}

fn prove_shared(goal: &Sequent, budget: &SearchBudget) -> ProofResult {
    let t_total = budget.t_insertions_for(goal);
    let graph = build_graph(goal, t_total, budget.max_goals);
    let (facts, root_facts, cut) =
        propagate(&graph, budget.max_structural_steps, t_total, budget.max_derivations.max(1));
    let derivations = root_facts.iter().map(|&f| build_derivation(&graph, &facts, f)).collect();
    ProofResult {
        derivations,
        exhausted: graph.exhausted || cut,
        goals_examined: graph.nodes.len(),
    }
}

struct Dfs {
    visits: usize,
    max_visits: usize,
    exhausted: bool,
}

impl Dfs {
    fn first_proof(
        &mut self,
        goal: &Sequent,
        phase: Phase,
        t_left: u32,
        steps_left: u32,
        path: &mut Vec<crate::syntax::SequentKey>,
    ) -> Option<Derivation> {
        let key = goal.canonical_key();
        if path.contains(&key) {
            return None;
        }
        self.visits += 1;
        if self.visits > self.max_visits {
            self.exhausted = true;
            return None;
        }
        let (alts, blocked) = alternatives(goal, phase, t_left);
        self.exhausted |= blocked;
        path.push(key);
        let mut found = None;
        for alt in alts {
            if let Some(d) = self.try_alt(goal, phase, &alt, t_left, steps_left, path) {
                found = Some(d);
                break;
            }
        }
        path.pop();
        found
    }

    fn try_alt(
        &mut self,
        goal: &Sequent,
        phase: Phase,
        alt: &Alt,
        t_left: u32,
        steps_left: u32,
        path: &mut Vec<crate::syntax::SequentKey>,
    ) -> Option<Derivation> {
        let weight = alt.weight();
        if weight > steps_left {
            self.exhausted = true;
            return None;
        }
        let exp = expand(goal, alt)?;
        // intermediate goals of a chain also count as visited on this branch
        let extra: Vec<_> = exp.conclusions[1..].iter().map(Sequent::canonical_key).collect();
        if extra.iter().any(|k| path.contains(k)) {
            return None;
        }
        let depth = path.len();
        path.extend(extra);
        let mut tail = Vec::new();
        for p in &exp.premises {
            let rule = alt.steps.last().unwrap().0;
            let p_phase = phase.of_premise(rule, p);
            match self.first_proof(p, p_phase, t_left - alt.t_used, steps_left - weight, path) {
                Some(d) => tail.push(d),
                None => break,
            }
        }
        path.truncate(depth);
        (tail.len() == exp.premises.len()).then(|| chain_derivation(goal, alt, tail))
    }
}

fn prove_unshared(goal: &Sequent, budget: &SearchBudget) -> ProofResult {
    let t_total = budget.t_insertions_for(goal);
    let mut dfs = Dfs { visits: 0, max_visits: budget.max_goals, exhausted: false };
    let phase = Phase::Flat.of_premise(RuleName::Axiom, goal);
    let (alts, blocked) = alternatives(goal, phase, t_total);
    dfs.exhausted |= blocked;
    let mut derivations = Vec::new();
    let mut path = vec![goal.canonical_key()];
    for alt in alts {
        if derivations.len() >= budget.max_derivations.max(1) {
            break;
        }
        if let Some(d) = dfs.try_alt(goal, phase, &alt, t_total, budget.max_structural_steps, &mut path) {
            derivations.push(d);
        }
    }
    ProofResult { derivations, exhausted: dfs.exhausted, goals_examined: dfs.visits }
}

/// Searches for derivations of `goal` within `budget`.
///
/// With memoization on, at most one derivation is returned per distinct
/// quantifier scope order, cheapest first. An empty list means no proof
/// exists within the budget.
pub fn prove(goal: &Sequent, budget: &SearchBudget) -> ProofResult {
    if budget.memo_enabled {
        prove_shared(goal, budget)
    } else {
        prove_unshared(goal, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::validate_derivation;
    use crate::syntax::parse_formula;

    const NOBODY: &str = "s0 /c (np \\c s-)";
    const ANYBODY: &str = "s- /c (np \\c s-)";
    const SAW: &str = "(np \\ s0) / np";

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    fn w(ty: &str, word: &str, position: usize) -> Structure {
        Structure::word(f(ty), word, position)
    }

    fn d(l: Structure, r: Structure) -> Structure {
        Structure::bin(BinaryMode::Default, l, r)
    }

    fn leaf_goal(ante: &str, succ: &str) -> Sequent {
        Sequent::new(Structure::leaf(f(ante)), f(succ))
    }

    fn svo(subject: (&str, &str), object: (&str, &str), goal: &str) -> Sequent {
        Sequent::new(
            d(w(subject.0, subject.1, 0), d(w(SAW, "saw", 1), w(object.0, object.1, 2))),
            f(goal),
        )
    }

    fn eq6() -> Sequent {
        let k = d(
            d(Structure::Unit, Structure::un(UnaryMode::Value, w(ANYBODY, "anybody", 0))),
            Structure::un(UnaryMode::Value, w(SAW, "saw", 1)),
        );
        Sequent::new(Structure::bin(BinaryMode::C, Structure::leaf(f("np")), k), f("s-"))
    }

    fn rules(d: &Derivation) -> Vec<RuleName> {
        let mut out = Vec::new();
        d.walk(&mut |n| out.push(n.rule));
        out
    }

    #[test]
    fn transitive_clause() {
        let r = prove(&svo(("np", "alice"), ("np", "bob"), "s0"), &SearchBudget::default());
        assert_eq!(r.derivations.len(), 1);
        let d = &r.derivations[0];
        assert!(validate_derivation(d));
        assert_eq!(d.structural_depth(), 0);
        let used = rules(d);
        assert!(used.contains(&RuleName::OverL(BinaryMode::Default)));
        assert!(used.contains(&RuleName::UnderL(BinaryMode::Default)));
    }

    #[test]
    fn clause_type_entailments() {
        let budget = SearchBudget::default();
        for (ante, succ) in [("s0", "s+"), ("s0", "s-"), ("np", "[p]<p>np")] {
            let r = prove(&leaf_goal(ante, succ), &budget);
            assert!(r.is_proved(), "{ante} |- {succ}");
            assert!(r.derivations.iter().all(validate_derivation));
        }
        for (ante, succ) in [("s+", "s0"), ("s-", "s0"), ("s+", "s-"), ("s-", "s+")] {
            assert!(!prove(&leaf_goal(ante, succ), &budget).is_proved(), "{ante} |- {succ}");
        }
        for t in ["s0", "s+", "s-"] {
            let r = prove(&leaf_goal(t, t), &budget);
            assert_eq!(rules(&r.derivations[0]), [RuleName::Axiom]);
        }
    }

    #[test]
    fn licensing_and_its_failure() {
        let budget = SearchBudget::default();
        let good = prove(&svo((NOBODY, "nobody"), (ANYBODY, "anybody"), "s0"), &budget);
        assert_eq!(good.derivations.len(), 1);
        assert!(validate_derivation(&good.derivations[0]));
        for goal in ["s0", "s+"] {
            let bad = prove(&svo((ANYBODY, "anybody"), (NOBODY, "nobody"), goal), &budget);
            assert!(!bad.is_proved());
        }
    }

    #[test]
    fn stuck_continuation_is_refuted() {
        let goal = eq6();
        let budget = SearchBudget::default();
        let r = prove(&goal, &budget);
        assert!(!r.is_proved());
        assert!(!prove(&goal, &budget.doubled_for(&goal)).is_proved());
    }

    #[test]
    fn shared_and_plain_search_agree() {
        let shared = SearchBudget::default();
        let plain = SearchBudget { memo_enabled: false, ..SearchBudget::default() };
        let goals = [
            leaf_goal("s0", "s+"),
            leaf_goal("s-", "s0"),
            svo(("np", "alice"), ("np", "bob"), "s0"),
            svo((NOBODY, "nobody"), (ANYBODY, "anybody"), "s0"),
            svo((ANYBODY, "anybody"), (NOBODY, "nobody"), "s0"),
            eq6(),
        ];
        for goal in &goals {
            let a = prove(goal, &shared);
            let b = prove(goal, &plain);
            assert_eq!(a.is_proved(), b.is_proved(), "{goal}");
            assert!(b.derivations.iter().all(validate_derivation));
            assert!(b.derivations.iter().all(|d| !d.has_repeated_goal()));
        }
    }

    #[test]
    fn repeatable() {
        let goal = svo(("s+ /c (np \\c s+)", "somebody"), ("s0 /c (np \\c s+)", "everybody"), "s+");
        let a = prove(&goal, &SearchBudget::default());
        let b = prove(&goal, &SearchBudget::default());
        assert_eq!(a, b);
        assert_eq!(a.derivations.len(), 2);
        assert!(a.derivations.iter().all(|d| validate_derivation(d) && !d.has_repeated_goal()));
    }

    #[test]
    fn budget_limits() {
        let goal = svo((NOBODY, "nobody"), (ANYBODY, "anybody"), "s0");
        let none = SearchBudget { max_structural_steps: 0, ..SearchBudget::default() };
        let r = prove(&goal, &none);
        assert!(!r.is_proved());
        assert!(r.exhausted);
        let no_t = SearchBudget { max_t_insertions: Some(0), ..SearchBudget::default() };
        assert!(!prove(&goal, &no_t).is_proved());
        let one = SearchBudget { max_derivations: 1, ..SearchBudget::default() };
        let somebody = svo(("s+ /c (np \\c s+)", "somebody"), ("s0 /c (np \\c s+)", "everybody"), "s+");
        assert_eq!(prove(&somebody, &one).derivations.len(), 1);
        let tiny = SearchBudget { max_goals: 10, ..SearchBudget::default() };
        let r = prove(&goal, &tiny);
        assert!(r.exhausted);
        assert!(r.goals_examined <= 10);
    }

    #[test]
    fn larger_budget_keeps_proofs() {
        let budget = SearchBudget::default();
        for goal in [
            svo(("np", "alice"), ("np", "bob"), "s0"),
            svo((NOBODY, "nobody"), (ANYBODY, "anybody"), "s0"),
            svo(("s+ /c (np \\c s+)", "somebody"), ("s0 /c (np \\c s+)", "everybody"), "s+"),
        ] {
            let small = prove(&goal, &budget);
            let big = prove(&goal, &budget.doubled_for(&goal));
            assert!(big.derivations.len() >= small.derivations.len());
        }
    }
}
