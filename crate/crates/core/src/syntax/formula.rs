use std::fmt;

use serde::{Deserialize, Serialize};

/// Unary modes: the value mode (blank), unquotation `u` and polarity `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnaryMode {
    Value,
    U,
    P,
}

impl UnaryMode {
    pub const ALL: [UnaryMode; 3] = [UnaryMode::Value, UnaryMode::U, UnaryMode::P];

    /// Suffix used inside `<..>` / `[..]` in the ASCII syntax.
    pub fn tag(self) -> &'static str {
        match self {
            UnaryMode::Value => "",
            UnaryMode::U => "u",
            UnaryMode::P => "p",
        }
    }
}

/// Binary modes: default surface composition and the continuation mode `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BinaryMode {
    Default,
    C,
}

impl BinaryMode {
    pub const ALL: [BinaryMode; 2] = [BinaryMode::Default, BinaryMode::C];

    pub fn tag(self) -> &'static str {
        match self {
            BinaryMode::Default => "",
            BinaryMode::C => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Formula {
    Atom(String),
    Unit,
    Product(BinaryMode, Box<Formula>, Box<Formula>),
    /// `result / argument`
    Over(BinaryMode, Box<Formula>, Box<Formula>),
    /// `argument \ result`
    Under(BinaryMode, Box<Formula>, Box<Formula>),
    Dia(UnaryMode, Box<Formula>),
    BoxDown(UnaryMode, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn product(mode: BinaryMode, left: Formula, right: Formula) -> Formula {
        Formula::Product(mode, Box::new(left), Box::new(right))
    }

    pub fn over(mode: BinaryMode, result: Formula, argument: Formula) -> Formula {
        Formula::Over(mode, Box::new(result), Box::new(argument))
    }

    pub fn under(mode: BinaryMode, argument: Formula, result: Formula) -> Formula {
        Formula::Under(mode, Box::new(argument), Box::new(result))
    }

    pub fn dia(mode: UnaryMode, body: Formula) -> Formula {
        Formula::Dia(mode, Box::new(body))
    }

    pub fn box_down(mode: UnaryMode, body: Formula) -> Formula {
        Formula::BoxDown(mode, Box::new(body))
    }

    /// Neutral clause `<u>s`.
    pub fn s0() -> Formula {
        Formula::dia(UnaryMode::U, Formula::atom("s"))
    }

    /// Positive clause `<u>[p]<p>s`.
    pub fn s_plus() -> Formula {
        Formula::dia(
            UnaryMode::U,
            Formula::box_down(UnaryMode::P, Formula::dia(UnaryMode::P, Formula::atom("s"))),
        )
    }

    /// Negative clause `[p]<p><u>s`.
    pub fn s_minus() -> Formula {
        Formula::box_down(UnaryMode::P, Formula::dia(UnaryMode::P, Formula::s0()))
    }

    /// Number of constructors in the formula.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Unit => 1,
            Formula::Product(_, a, b) | Formula::Over(_, a, b) | Formula::Under(_, a, b) => {
                1 + a.size() + b.size()
            }
            Formula::Dia(_, a) | Formula::BoxDown(_, a) => 1 + a.size(),
        }
    }

    pub fn contains_unit(&self) -> bool {
        match self {
            Formula::Unit => true,
            Formula::Atom(_) => false,
            Formula::Product(_, a, b) | Formula::Over(_, a, b) | Formula::Under(_, a, b) => {
                a.contains_unit() || b.contains_unit()
            }
            Formula::Dia(_, a) | Formula::BoxDown(_, a) => a.contains_unit(),
        }
    }

    fn abbreviation(&self) -> Option<&'static str> {
        if *self == Formula::s0() {
            Some("s0")
        } else if *self == Formula::s_plus() {
            Some("s+")
        } else if *self == Formula::s_minus() {
            Some("s-")
        } else {
            None
        }
    }
}

/// Binding levels of the printer, loosest first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Slash,
    Product,
    Unary,
}

fn level_of(f: &Formula) -> Level {
    match f {
        Formula::Over(..) | Formula::Under(..) => Level::Slash,
        Formula::Product(..) => Level::Product,
        _ => Level::Unary,
    }
}

fn write_at(f: &Formula, out: &mut fmt::Formatter<'_>, ok: impl Fn(&Formula) -> bool) -> fmt::Result {
    if ok(f) {
        write!(out, "{f}")
    } else {
        write!(out, "({f})")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(abbrev) = self.abbreviation() {
            return out.write_str(abbrev);
        }
        match self {
            Formula::Atom(name) => out.write_str(name),
            Formula::Unit => out.write_str("1"),
            Formula::Product(mode, a, b) => {
                write_at(a, out, |f| level_of(f) >= Level::Product)?;
                write!(out, " *{} ", mode.tag())?;
                write_at(b, out, |f| level_of(f) == Level::Unary)
            }
            Formula::Over(mode, result, argument) => {
                write_at(result, out, |f| {
                    level_of(f) > Level::Slash || matches!(f, Formula::Over(..))
                })?;
                write!(out, " /{} ", mode.tag())?;
                write_at(argument, out, |f| level_of(f) > Level::Slash)
            }
            Formula::Under(mode, argument, result) => {
                write_at(argument, out, |f| level_of(f) > Level::Slash)?;
                write!(out, " \\{} ", mode.tag())?;
                write_at(result, out, |f| {
                    level_of(f) > Level::Slash || matches!(f, Formula::Under(..))
                })
            }
            Formula::Dia(mode, body) => {
                write!(out, "<{}>", mode.tag())?;
                write_at(body, out, |f| level_of(f) == Level::Unary)
            }
            Formula::BoxDown(mode, body) => {
                write!(out, "[{}]", mode.tag())?;
                write_at(body, out, |f| level_of(f) == Level::Unary)
            }
        }
    }
}
