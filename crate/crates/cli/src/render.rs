//! Unicode rendering of formulas, sequents and derivations.

use polarity_core::prover::{Derivation, Direction, RuleName};
use polarity_core::syntax::{BinaryMode, Sequent, UnaryMode};

/// Rewrites ASCII concrete syntax into the usual symbols.
pub fn unicode(ascii: &str) -> String {
    const OPERATORS: [(&str, &str); 8] = [
        ("<>", "◇"),
        ("<u>", "◇u"),
        ("<p>", "◇p"),
        ("[]", "□↓"),
        ("[u]", "□↓u"),
        ("[p]", "□↓p"),
        ("|-", "⊢"),
        ("*", "•"),
    ];
    let mut out = String::with_capacity(ascii.len());
    let mut rest = ascii;
    'scan: while let Some(c) = rest.chars().next() {
        for (from, to) in OPERATORS {
            if let Some(tail) = rest.strip_prefix(from) {
                out.push_str(to);
                rest = tail;
                continue 'scan;
            }
        }
        if c.is_alphanumeric() || c == '_' {
            let end = rest
                .find(|ch: char| !(ch.is_alphanumeric() || ch == '_' || ch == '\''))
                .unwrap_or(rest.len());
            let word = &rest[..end];
            rest = &rest[end..];
            match (word, rest.chars().next()) {
                ("s0", _) => out.push_str("s°"),
                ("s", Some('+')) => {
                    out.push_str("s⁺");
                    rest = &rest[1..];
                }
                ("s", Some('-')) => {
                    out.push_str("s⁻");
                    rest = &rest[1..];
                }
                _ => out.push_str(word),
            }
            continue;
        }
        out.push(c);
        rest = &rest[c.len_utf8()..];
    }
    out
}

fn binary(m: BinaryMode) -> &'static str {
    match m {
        BinaryMode::Default => "",
        BinaryMode::C => "c",
    }
}

fn unary(m: UnaryMode) -> &'static str {
    match m {
        UnaryMode::Value => "",
        UnaryMode::U => "u",
        UnaryMode::P => "p",
    }
}

/// Natural-deduction style rule labels.
pub fn rule_label(rule: RuleName) -> String {
    match rule {
        RuleName::Axiom => "Axiom".into(),
        RuleName::Lex => "Lex".into(),
        RuleName::ProdR(m) => format!("•{}I", binary(m)),
        RuleName::ProdL(m) => format!("•{}E", binary(m)),
        RuleName::OverR(m) => format!("/{}I", binary(m)),
        RuleName::OverL(m) => format!("/{}E", binary(m)),
        RuleName::UnderR(m) => format!("\\{}I", binary(m)),
        RuleName::UnderL(m) => format!("\\{}E", binary(m)),
        RuleName::DiaR(m) => format!("◇{}I", unary(m)),
        RuleName::DiaL(m) => format!("◇{}E", unary(m)),
        RuleName::BoxDownR(m) => format!("□↓{}I", unary(m)),
        RuleName::BoxDownL(m) => format!("□↓{}E", unary(m)),
        RuleName::Root(d) => format!("Root{}", arrow(d)),
        RuleName::Left(d) => format!("Left{}", arrow(d)),
        RuleName::Right(d) => format!("Right{}", arrow(d)),
        RuleName::T => "T".into(),
        RuleName::KPrime => "K′".into(),
        RuleName::UnquoteAnte | RuleName::UnquoteSucc => "Unquote".into(),
    }
}

fn arrow(d: Direction) -> &'static str {
    match d {
        Direction::Forward => "→",
        Direction::Backward => "←",
    }
}

pub fn sequent(s: &Sequent) -> String {
    unicode(&s.to_string())
}

/// One line per rule, conclusion first, premises indented two spaces.
pub fn derivation(d: &Derivation) -> String {
    let mut out = String::new();
    write_derivation(d, 0, &mut out);
    out
}

fn write_derivation(d: &Derivation, depth: usize, out: &mut String) {
    out.push_str(&"  ".repeat(depth));
    out.push_str(&sequent(&d.conclusion));
    out.push_str("   ");
    out.push_str(&rule_label(d.rule));
    out.push('\n');
    for p in &d.premises {
        write_derivation(p, depth + 1, out);
    }
}
