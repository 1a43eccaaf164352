//! A small language for loop identities and an exhaustive checker.
//!
//! Grammar (binary operators share one precedence level and associate to the
//! left; `^l` / `^r` are postfix and bind tighter):
//!
//! ```text
//! identity := term '=' term
//! term     := unary (('*' | '\' | '/') unary)*
//! unary    := atom ('^l' | '^r')*
//! atom     := 'a'..'z' (except 'e') | 'e' | '(' term ')'
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::loops::{InverseKind, Loop};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Mul,
    LeftDiv,
    RightDiv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    /// Index into the owning identity's variable list.
    Var(usize),
    Identity,
    Binary(BinOp, Box<Term>, Box<Term>),
    Inverse(InverseKind, Box<Term>),
}

impl Term {
    pub fn eval(&self, l: &Loop, env: &[usize]) -> usize {
        match self {
            Term::Var(i) => env[*i],
            Term::Identity => l.identity(),
            Term::Binary(op, a, b) => {
                let (a, b) = (a.eval(l, env), b.eval(l, env));
                match op {
                    BinOp::Mul => l.mul(a, b),
                    BinOp::LeftDiv => l.ldiv(a, b),
                    BinOp::RightDiv => l.rdiv(a, b),
                }
            }
            Term::Inverse(kind, a) => l.inverse_element(*kind, a.eval(l, env)),
        }
    }

    fn write(&self, vars: &[char], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "{}", vars[*i]),
            Term::Identity => f.write_str("e"),
            Term::Binary(op, a, b) => {
                f.write_str("(")?;
                a.write(vars, f)?;
                f.write_str(match op {
                    BinOp::Mul => "*",
                    BinOp::LeftDiv => "\\",
                    BinOp::RightDiv => "/",
                })?;
                b.write(vars, f)?;
                f.write_str(")")
            }
            Term::Inverse(kind, a) => {
                a.write(vars, f)?;
                f.write_str(match kind {
                    InverseKind::Lambda => "^l",
                    InverseKind::Rho => "^r",
                })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    /// Variables in order of first occurrence.
    pub vars: Vec<char>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Counterexample {
        assignment: Vec<usize>,
        lhs: usize,
        rhs: usize,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::Counterexample { assignment, .. } => Some(assignment),
        }
    }
}

impl Identity {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
            vars: Vec::new(),
        };
        let lhs = p.term()?;
        p.skip_ws();
        if !p.eat('=') {
            return Err(p.error("expected '='"));
        }
        let rhs = p.term()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(Identity {
            lhs,
            rhs,
            vars: p.vars,
        })
    }

    /// Evaluates every assignment in lexicographic order (first variable most
    /// significant) and returns the first failure.
    pub fn check(&self, l: &Loop) -> Verdict {
        let n = l.order();
        let k = self.vars.len();
        let mut env = vec![0; k];
        loop {
            let (a, b) = (self.lhs.eval(l, &env), self.rhs.eval(l, &env));
            if a != b {
                return Verdict::Counterexample {
                    assignment: env,
                    lhs: a,
                    rhs: b,
                };
            }
            // odometer, last variable fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return Verdict::Holds;
                }
                i -= 1;
                env[i] += 1;
                if env[i] < n {
                    break;
                }
                env[i] = 0;
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lhs.write(&self.vars, f)?;
        f.write_str(" = ")?;
        self.rhs.write(&self.vars, f)
    }
}

pub fn check_identity(l: &Loop, id: &Identity) -> Verdict {
    id.check(l)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    vars: Vec<char>,
}

impl Parser {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut acc = self.unary()?;
        loop {
            let op = match self.peek() {
                Some('*') => BinOp::Mul,
                Some('\\') => BinOp::LeftDiv,
                Some('/') => BinOp::RightDiv,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            acc = Term::Binary(op, Box::new(acc), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            let kind = match self.chars.get(self.pos) {
                Some('l') => InverseKind::Lambda,
                Some('r') => InverseKind::Rho,
                _ => return Err(self.error("expected 'l' or 'r' after '^'")),
            };
            self.pos += 1;
            t = Term::Inverse(kind, Box::new(t));
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.term()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(t)
            }
            Some('e') => {
                self.pos += 1;
                Ok(Term::Identity)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                let idx = match self.vars.iter().position(|&v| v == c) {
                    Some(i) => i,
                    None => {
                        self.vars.push(c);
                        self.vars.len() - 1
                    }
                };
                Ok(Term::Var(idx))
            }
            Some(_) => Err(self.error("expected a variable, 'e' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Identities used by the classifier and the Osborn checks.
pub mod catalog {
    use super::Identity;

    pub const OS3: &str = "(x*(y*z))*x = (x*y)*(((x^l)*(x*z))*x)";
    pub const OS5: &str = "(x*(y*z))*x = (x*y)*((x*((x^r)*z))*x)";
    pub const ASSOCIATIVE: &str = "(x*y)*z = x*(y*z)";
    pub const COMMUTATIVE: &str = "x*y = y*x";
    pub const MOUFANG: &str = "(x*y)*(z*x) = (x*(y*z))*x";
    pub const EXTRA: &str = "((x*y)*z)*x = x*(y*(z*x))";
    pub const LEFT_BOL: &str = "(x*(y*x))*z = x*(y*(x*z))";
    pub const EXPONENT_TWO: &str = "x*x = e";

    pub fn get(src: &str) -> Identity {
        Identity::parse(src).expect("catalog identities parse")
    }
}
