//! Recursive-descent reader for the ASCII formula syntax.
//!
//! ```text
//! formula := slash
//! slash   := prod (("/" | "/c" | "\" | "\c") prod)*
//! prod    := unary (("*" | "*c") unary)*
//! unary   := ("<>" | "<u>" | "<p>" | "[]" | "[u]" | "[p]") unary
//!          | atom | "1" | "(" formula ")"
//! ```
//!
//! `/` groups to the left, `\` to the right, and the two may not be mixed
//! at one level without parentheses.

use thiserror::Error;

use super::formula::{BinaryMode, Formula, UnaryMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Unit,
    LParen,
    RParen,
    Dia(UnaryMode),
    Box(UnaryMode),
    Over(BinaryMode),
    Under(BinaryMode),
    Star(BinaryMode),
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let at = |i: usize| chars.get(i).map(|&(_, c)| c);
    let err = |pos: usize, message: String| ParseError { position: pos, message };
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        // A trailing `c` selects the continuation mode unless it starts an identifier.
        let mode_c = |j: usize| at(j) == Some('c') && !at(j + 1).is_some_and(is_ident_char);
        match c {
            '(' => {
                toks.push((pos, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((pos, Tok::RParen));
                i += 1;
            }
            '1' if !at(i + 1).is_some_and(is_ident_char) => {
                toks.push((pos, Tok::Unit));
                i += 1;
            }
            '/' | '\\' | '*' => {
                let mode = if mode_c(i + 1) { BinaryMode::C } else { BinaryMode::Default };
                let tok = match c {
                    '/' => Tok::Over(mode),
                    '\\' => Tok::Under(mode),
                    _ => Tok::Star(mode),
                };
                toks.push((pos, tok));
                i += if mode == BinaryMode::C { 2 } else { 1 };
            }
            '<' | '[' => {
                let close = if c == '<' { '>' } else { ']' };
                let (mode, width) = match (at(i + 1), at(i + 2)) {
                    (Some(x), _) if x == close => (UnaryMode::Value, 2),
                    (Some('u'), Some(x)) if x == close => (UnaryMode::U, 3),
                    (Some('p'), Some(x)) if x == close => (UnaryMode::P, 3),
                    _ => return Err(err(pos, format!("malformed unary operator starting with `{c}`"))),
                };
                toks.push((pos, if c == '<' { Tok::Dia(mode) } else { Tok::Box(mode) }));
                i += width;
            }
            c if is_ident_start(c) => {
                let start = i;
                while at(i).is_some_and(is_ident_char) {
                    i += 1;
                }
                let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                if name == "s" && matches!(at(i), Some('+') | Some('-')) {
                    let sign = at(i).unwrap();
                    i += 1;
                    toks.push((pos, Tok::Ident(format!("s{sign}"))));
                } else {
                    toks.push((pos, Tok::Ident(name)));
                }
            }
            other => return Err(err(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.next).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.toks.get(self.next).map_or(self.end, |&(p, _)| p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.position(), message: message.into() })
    }

    fn slash(&mut self) -> Result<Formula, ParseError> {
        let first = self.prod()?;
        let mut operands = vec![first];
        let mut ops: Vec<Tok> = Vec::new();
        while let Some(tok @ (Tok::Over(_) | Tok::Under(_))) = self.peek().cloned() {
            if let Some(prev) = ops.first() {
                if std::mem::discriminant(prev) != std::mem::discriminant(&tok) {
                    return self.error("mixing `/` and `\\` at one level requires parentheses");
                }
            }
            self.next += 1;
            ops.push(tok);
            operands.push(self.prod()?);
        }
        match ops.first() {
            None => Ok(operands.pop().unwrap()),
            Some(Tok::Over(_)) => {
                let mut iter = operands.into_iter();
                let mut acc = iter.next().unwrap();
                for (op, arg) in ops.into_iter().zip(iter) {
                    let Tok::Over(mode) = op else { unreachable!() };
                    acc = Formula::over(mode, acc, arg);
                }
                Ok(acc)
            }
            Some(_) => {
                let mut acc = operands.pop().unwrap();
                while let Some(arg) = operands.pop() {
                    let Some(Tok::Under(mode)) = ops.pop() else { unreachable!() };
                    acc = Formula::under(mode, arg, acc);
                }
                Ok(acc)
            }
        }
    }

    fn prod(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star(mode)) = self.peek().cloned() {
            self.next += 1;
            let right = self.unary()?;
            acc = Formula::product(mode, acc, right);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        self.next += 1;
        match tok {
            Tok::Dia(mode) => Ok(Formula::dia(mode, self.unary()?)),
            Tok::Box(mode) => Ok(Formula::box_down(mode, self.unary()?)),
            Tok::Unit => Ok(Formula::Unit),
            Tok::Ident(name) => Ok(match name.as_str() {
                "s0" => Formula::s0(),
                "s+" => Formula::s_plus(),
                "s-" => Formula::s_minus(),
                _ => Formula::Atom(name),
            }),
            Tok::LParen => {
                let inner = self.slash()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.next += 1;
                        Ok(inner)
                    }
                    _ => self.error("expected `)`"),
                }
            }
            _ => {
                self.next -= 1;
                self.error("expected a formula")
            }
        }
    }
}

/// Parses the ASCII concrete syntax into a [`Formula`].
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, next: 0, end: text.len() };
    let formula = parser.slash()?;
    if parser.next != parser.toks.len() {
        return parser.error("trailing input");
    }
    Ok(formula)
}

/// Prints a formula in the syntax accepted by [`parse_formula`].
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use BinaryMode::C;
    use UnaryMode::{P, U};

    #[test]
    fn atoms_and_abbreviations() {
        assert_eq!(parse_formula("np").unwrap(), Formula::atom("np"));
        assert_eq!(
            parse_formula("s-").unwrap(),
            Formula::box_down(P, Formula::dia(P, Formula::dia(U, Formula::atom("s"))))
        );
        assert_eq!(parse_formula("<u>s").unwrap(), Formula::s0());
        assert_eq!(parse_formula("<u>[p]<p>s").unwrap(), Formula::s_plus());
    }

    #[test]
    fn nobody_type() {
        let expected = Formula::over(
            C,
            Formula::dia(U, Formula::atom("s")),
            Formula::under(
                C,
                Formula::atom("np"),
                Formula::box_down(P, Formula::dia(P, Formula::dia(U, Formula::atom("s")))),
            ),
        );
        assert_eq!(parse_formula("s0 /c (np \\c s-)").unwrap(), expected);
        assert_eq!(print_formula(&expected), "s0 /c (np \\c s-)");
    }

    #[test]
    fn associativity() {
        let a = || Formula::atom("a");
        let b = || Formula::atom("b");
        let c = || Formula::atom("c");
        let d = BinaryMode::Default;
        assert_eq!(
            parse_formula("a / b / c").unwrap(),
            Formula::over(d, Formula::over(d, a(), b()), c())
        );
        assert_eq!(
            parse_formula("a \\ b \\ c").unwrap(),
            Formula::under(d, a(), Formula::under(d, b(), c()))
        );
        assert_eq!(
            parse_formula("a * b *c c").unwrap(),
            Formula::product(C, Formula::product(d, a(), b()), c())
        );
        // products bind tighter than slashes
        assert_eq!(
            parse_formula("a * b / c").unwrap(),
            Formula::over(d, Formula::product(d, a(), b()), c())
        );
    }

    #[test]
    fn mode_suffix_versus_identifier() {
        assert_eq!(
            parse_formula("s/cat").unwrap(),
            Formula::over(BinaryMode::Default, Formula::atom("s"), Formula::atom("cat"))
        );
        assert_eq!(
            parse_formula("s/c cat").unwrap(),
            Formula::over(C, Formula::atom("s"), Formula::atom("cat"))
        );
    }

    #[test]
    fn printing() {
        assert_eq!(print_formula(&Formula::atom("np")), "np");
        assert_eq!(print_formula(&Formula::s0()), "s0");
        assert_eq!(print_formula(&parse_formula("(np\\s0)/np").unwrap()), "(np \\ s0) / np");
        assert_eq!(print_formula(&parse_formula("[p]<p>np").unwrap()), "[p]<p>np");
        assert_eq!(print_formula(&parse_formula("<>(a*b)").unwrap()), "<>(a * b)");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_formula("np \\ s / np").unwrap_err();
        assert_eq!(e.position, 7);
        let e = parse_formula("(np").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_formula("<x>np").is_err());
        assert!(parse_formula("np np").is_err());
        assert!(parse_formula("").is_err());
        assert!(parse_formula("np ; s").is_err());
    }
}
