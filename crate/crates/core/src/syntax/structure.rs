use std::fmt;

use serde::{Deserialize, Serialize};

use super::formula::{BinaryMode, Formula, UnaryMode};

/// Lexical provenance of a leaf. Display-only: ignored by canonical keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub word: String,
    /// Index of the token in the sentence.
    pub position: usize,
}

/// Antecedent trees. Structural punctuation mirrors the formula connectives:
/// `Bin` is a structural product and `Un` a structural diamond.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Structure {
    Leaf {
        formula: Formula,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<Label>,
    },
    Unit,
    Bin(BinaryMode, Box<Structure>, Box<Structure>),
    Un(UnaryMode, Box<Structure>),
}

/// Position of a substructure: `0` descends left (or into a unary node), `1` right.
pub type Site = Vec<u8>;

impl Structure {
    pub fn leaf(formula: Formula) -> Structure {
        Structure::Leaf { formula, label: None }
    }

    pub fn word(formula: Formula, word: &str, position: usize) -> Structure {
        Structure::Leaf { formula, label: Some(Label { word: word.to_string(), position }) }
    }

    pub fn bin(mode: BinaryMode, left: Structure, right: Structure) -> Structure {
        Structure::Bin(mode, Box::new(left), Box::new(right))
    }

    pub fn un(mode: UnaryMode, body: Structure) -> Structure {
        Structure::Un(mode, Box::new(body))
    }

    /// Reads a formula as a structure: products become structural products,
    /// diamonds structural diamonds, `1` the unit leaf, anything else a leaf.
    pub fn from_formula(f: &Formula) -> Structure {
        match f {
            Formula::Unit => Structure::Unit,
            Formula::Product(m, a, b) => {
                Structure::bin(*m, Structure::from_formula(a), Structure::from_formula(b))
            }
            Formula::Dia(m, a) => Structure::un(*m, Structure::from_formula(a)),
            other => Structure::leaf(other.clone()),
        }
    }

    pub fn get(&self, site: &[u8]) -> Option<&Structure> {
        match (site.split_first(), self) {
            (None, s) => Some(s),
            (Some((0, rest)), Structure::Bin(_, l, _)) => l.get(rest),
            (Some((1, rest)), Structure::Bin(_, _, r)) => r.get(rest),
            (Some((0, rest)), Structure::Un(_, b)) => b.get(rest),
            _ => None,
        }
    }

    /// Returns a copy with the substructure at `site` replaced.
    pub fn replace_at(&self, site: &[u8], new: Structure) -> Option<Structure> {
        match (site.split_first(), self) {
            (None, _) => Some(new),
            (Some((0, rest)), Structure::Bin(m, l, r)) => {
                Some(Structure::Bin(*m, Box::new(l.replace_at(rest, new)?), r.clone()))
            }
            (Some((1, rest)), Structure::Bin(m, l, r)) => {
                Some(Structure::Bin(*m, l.clone(), Box::new(r.replace_at(rest, new)?)))
            }
            (Some((0, rest)), Structure::Un(m, b)) => {
                Some(Structure::Un(*m, Box::new(b.replace_at(rest, new)?)))
            }
            _ => None,
        }
    }

    /// All sites in post-order (leftmost-innermost first).
    pub fn sites(&self) -> Vec<Site> {
        fn walk(s: &Structure, prefix: &mut Site, out: &mut Vec<Site>) {
            match s {
                Structure::Bin(_, l, r) => {
                    prefix.push(0);
                    walk(l, prefix, out);
                    prefix.pop();
                    prefix.push(1);
                    walk(r, prefix, out);
                    prefix.pop();
                }
                Structure::Un(_, b) => {
                    prefix.push(0);
                    walk(b, prefix, out);
                    prefix.pop();
                }
                _ => {}
            }
            out.push(prefix.clone());
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Formulas at the leaves, left to right.
    pub fn leaves(&self) -> impl Iterator<Item = &Formula> {
        let mut out = Vec::new();
        fn walk<'a>(s: &'a Structure, out: &mut Vec<&'a Formula>) {
            match s {
                Structure::Leaf { formula, .. } => out.push(formula),
                Structure::Unit => {}
                Structure::Bin(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Structure::Un(_, b) => walk(b, out),
            }
        }
        walk(self, &mut out);
        out.into_iter()
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Structure::Leaf { .. } | Structure::Unit => 1,
            Structure::Bin(_, l, r) => l.leaf_count() + r.leaf_count(),
            Structure::Un(_, b) => b.leaf_count(),
        }
    }

    /// Formula leaves that carry a word label.
    pub fn labels(&self) -> Vec<&Label> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels<'a>(&'a self, out: &mut Vec<&'a Label>) {
        match self {
            Structure::Leaf { label: Some(l), .. } => out.push(l),
            Structure::Leaf { .. } | Structure::Unit => {}
            Structure::Bin(_, l, r) => {
                l.collect_labels(out);
                r.collect_labels(out);
            }
            Structure::Un(_, b) => b.collect_labels(out),
        }
    }

    pub fn has_mode(&self, mode: BinaryMode) -> bool {
        match self {
            Structure::Leaf { .. } | Structure::Unit => false,
            Structure::Bin(m, l, r) => *m == mode || l.has_mode(mode) || r.has_mode(mode),
            Structure::Un(_, b) => b.has_mode(mode),
        }
    }

    /// Copy with every word label removed.
    pub fn erase_labels(&self) -> Structure {
        match self {
            Structure::Leaf { formula, .. } => Structure::leaf(formula.clone()),
            Structure::Unit => Structure::Unit,
            Structure::Bin(m, l, r) => Structure::bin(*m, l.erase_labels(), r.erase_labels()),
            Structure::Un(m, b) => Structure::un(*m, b.erase_labels()),
        }
    }

    /// Injective text encoding; formula leaves are braced so that a leaf
    /// `<>A` and a structural diamond over the leaf `A` stay distinct.
    fn write_key(&self, out: &mut String) {
        match self {
            Structure::Leaf { formula, .. } => {
                out.push('{');
                out.push_str(&formula.to_string());
                out.push('}');
            }
            Structure::Unit => out.push('1'),
            Structure::Bin(m, l, r) => {
                out.push('(');
                l.write_key(out);
                out.push_str(" *");
                out.push_str(m.tag());
                out.push(' ');
                r.write_key(out);
                out.push(')');
            }
            Structure::Un(m, b) => {
                out.push('<');
                out.push_str(m.tag());
                out.push('>');
                b.write_key(out);
            }
        }
    }
}

fn needs_parens(f: &Formula) -> bool {
    matches!(f, Formula::Product(..) | Formula::Over(..) | Formula::Under(..))
}

impl fmt::Display for Structure {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Leaf { label: Some(l), .. } => {
                if l.word.chars().all(|c| c.is_ascii_alphanumeric()) {
                    write!(out, "{}", l.word)
                } else {
                    write!(out, "\"{}\"", l.word)
                }
            }
            Structure::Leaf { formula, label: None } => {
                if needs_parens(formula) {
                    write!(out, "({formula})")
                } else {
                    write!(out, "{formula}")
                }
            }
            Structure::Unit => out.write_str("1"),
            Structure::Bin(m, l, r) => {
                if matches!(**l, Structure::Bin(..)) {
                    write!(out, "({l})")?;
                } else {
                    write!(out, "{l}")?;
                }
                write!(out, " *{} ", m.tag())?;
                if matches!(**r, Structure::Bin(..)) {
                    write!(out, "({r})")
                } else {
                    write!(out, "{r}")
                }
            }
            Structure::Un(m, b) => {
                write!(out, "<{}>", m.tag())?;
                if matches!(**b, Structure::Bin(..)) {
                    write!(out, "({b})")
                } else {
                    write!(out, "{b}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sequent {
    pub antecedent: Structure,
    pub succedent: Formula,
}

/// Hash-equal key of a sequent with word labels erased.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequentKey(String);

impl SequentKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Sequent {
    pub fn new(antecedent: Structure, succedent: Formula) -> Sequent {
        Sequent { antecedent, succedent }
    }

    pub fn canonical_key(&self) -> SequentKey {
        SequentKey(self.key_text())
    }

    fn key_text(&self) -> String {
        let mut out = String::new();
        self.antecedent.write_key(&mut out);
        out.push_str(" |- ");
        out.push_str(&self.succedent.to_string());
        out
    }

    /// Equality up to word labels.
    pub fn same_logic(&self, other: &Sequent) -> bool {
        self.succedent == other.succedent
            && self.antecedent.erase_labels() == other.antecedent.erase_labels()
    }
}

/// Canonical key of a sequent; equal iff the sequents agree after erasing labels.
pub fn canonical_sequent(s: &Sequent) -> SequentKey {
    s.canonical_key()
}

impl fmt::Display for Sequent {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{} |- {}", self.antecedent, self.succedent)
    }
}
