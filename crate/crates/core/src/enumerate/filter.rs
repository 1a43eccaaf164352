//! Boolean expressions over classifier flags.
//!
//! ```text
//! expr  := term (("|" | "∨" | "or") term)*
//! term  := unary (("&" | "∧" | "and") unary)*
//! unary := ("!" | "¬" | "not") unary | atom
//! atom  := flag | "universal_osborn" | "true" | "false"
//!        | "order" ("<=" | "<" | "=" | ">=" | ">") number | "(" expr ")"
//! ```

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use crate::classify::{classify, Flag, FlagSet};
use crate::config::Bounds;
use crate::error::{Error, Result};
use crate::loops::Loop;
use crate::osborn::is_universal_osborn;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filter {
    True,
    False,
    Flag(Flag),
    UniversalOsborn,
    Order(Cmp, usize),
    Not(Box<Filter>),
    And(Box<Filter>, Box<Filter>),
    Or(Box<Filter>, Box<Filter>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(usize),
    Cmp(Cmp),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '!' | '¬' | '~' | '∧' | '∨' => {
                chars.next();
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    '∧' => Token::And,
                    '∨' => Token::Or,
                    _ => Token::Not,
                });
            }
            '&' | '|' => {
                chars.next();
                if chars.peek() == Some(&c) {
                    chars.next();
                }
                out.push(if c == '&' { Token::And } else { Token::Or });
            }
            '<' | '>' | '=' => {
                chars.next();
                let eq = chars.peek() == Some(&'=');
                if eq {
                    chars.next();
                }
                out.push(Token::Cmp(match (c, eq) {
                    ('<', false) => Cmp::Lt,
                    ('<', true) => Cmp::Le,
                    ('>', false) => Cmp::Gt,
                    ('>', true) => Cmp::Ge,
                    _ => Cmp::Eq,
                }));
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    s.push(d);
                    chars.next();
                }
                out.push(Token::Number(s.parse().map_err(|_| Error::BadFilter(format!("number {s}")))?));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                    s.push(d);
                    chars.next();
                }
                out.push(match s.to_ascii_lowercase().as_str() {
                    "and" => Token::And,
                    "or" => Token::Or,
                    "not" => Token::Not,
                    _ => Token::Ident(s),
                });
            }
            other => return Err(Error::BadFilter(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Filter> {
        let mut left = self.term()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            left = Filter::Or(Box::new(left), Box::new(self.term()?));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Filter> {
        let mut left = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            left = Filter::And(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Filter> {
        if self.peek() == Some(&Token::Not) {
            self.pos += 1;
            return Ok(Filter::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Filter> {
        match self.next() {
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::BadFilter("missing ')'".into())),
                }
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "true" => Ok(Filter::True),
                "false" => Ok(Filter::False),
                "universal_osborn" => Ok(Filter::UniversalOsborn),
                "order" => match (self.next(), self.next()) {
                    (Some(Token::Cmp(c)), Some(Token::Number(k))) => Ok(Filter::Order(c, k)),
                    _ => Err(Error::BadFilter("expected a comparison after 'order'".into())),
                },
                other => Ok(Filter::Flag(other.parse()?)),
            },
            Some(t) => Err(Error::BadFilter(format!("unexpected token {t:?}"))),
            None => Err(Error::BadFilter("unexpected end of expression".into())),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            tokens: tokenize(s)?,
            pos: 0,
        };
        if p.tokens.is_empty() {
            return Ok(Filter::True);
        }
        let f = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::BadFilter(format!("trailing input in {s:?}")));
        }
        Ok(f)
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::True => f.write_str("true"),
            Filter::False => f.write_str("false"),
            Filter::Flag(flag) => write!(f, "{flag}"),
            Filter::UniversalOsborn => f.write_str("universal_osborn"),
            Filter::Order(c, k) => {
                let op = match c {
                    Cmp::Lt => "<",
                    Cmp::Le => "<=",
                    Cmp::Eq => "=",
                    Cmp::Ge => ">=",
                    Cmp::Gt => ">",
                };
                write!(f, "order{op}{k}")
            }
            Filter::Not(a) => write!(f, "!{a}"),
            Filter::And(a, b) => write!(f, "({a} & {b})"),
            Filter::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

/// Facts about one loop, computed on first use.
struct Facts<'a> {
    l: &'a Loop,
    bounds: &'a Bounds,
    flags: OnceCell<FlagSet>,
    universal: OnceCell<Result<bool>>,
}

impl Filter {
    pub fn matches(&self, l: &Loop, bounds: &Bounds) -> Result<bool> {
        let facts = Facts {
            l,
            bounds,
            flags: OnceCell::new(),
            universal: OnceCell::new(),
        };
        self.eval(&facts)
    }

    fn eval(&self, facts: &Facts<'_>) -> Result<bool> {
        Ok(match self {
            Filter::True => true,
            Filter::False => false,
            Filter::Flag(flag) => facts.flags.get_or_init(|| classify(facts.l)).contains(*flag),
            Filter::UniversalOsborn => facts
                .universal
                .get_or_init(|| is_universal_osborn(facts.l, facts.bounds).map(|r| r.holds))
                .clone()?,
            Filter::Order(c, k) => {
                let n = facts.l.order();
                match c {
                    Cmp::Lt => n < *k,
                    Cmp::Le => n <= *k,
                    Cmp::Eq => n == *k,
                    Cmp::Ge => n >= *k,
                    Cmp::Gt => n > *k,
                }
            }
            Filter::Not(a) => !a.eval(facts)?,
            Filter::And(a, b) => a.eval(facts)? && b.eval(facts)?,
            Filter::Or(a, b) => a.eval(facts)? || b.eval(facts)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let f: Filter = "osborn ∧ ¬group".parse().unwrap();
        assert_eq!(
            f,
            Filter::And(
                Box::new(Filter::Flag(Flag::Osborn)),
                Box::new(Filter::Not(Box::new(Filter::Flag(Flag::Group))))
            )
        );
        let g: Filter = "osborn && !group".parse().unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_string().parse::<Filter>().unwrap(), f);
        assert!("(group | moufang) and order<=4".parse::<Filter>().is_ok());
        assert_eq!("".parse::<Filter>().unwrap(), Filter::True);
    }

    #[test]
    fn rejects() {
        for bad in ["group &", "(group", "nonsense", "order 4", "group $"] {
            assert!(matches!(bad.parse::<Filter>(), Err(Error::BadFilter(_))), "{bad}");
        }
    }

    #[test]
    fn evaluates() {
        let z2 = Loop::from_table(2, vec![0, 1, 1, 0]).unwrap();
        let b = Bounds::default();
        assert!("boolean_group & universal_osborn".parse::<Filter>().unwrap().matches(&z2, &b).unwrap());
        assert!(!"!group".parse::<Filter>().unwrap().matches(&z2, &b).unwrap());
        assert!("order=2".parse::<Filter>().unwrap().matches(&z2, &b).unwrap());
    }
}
