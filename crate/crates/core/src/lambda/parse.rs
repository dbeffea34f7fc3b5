//! Text syntax.
//!
//! ```text
//! term    := atomic+                       (left-associative application)
//! atomic  := IDENT | '#' NAT | '(' term ')' | '\' '.' term      (locally nameless)
//! atomic  := IDENT | '(' term ')' | '\' IDENT '.' term          (named)
//! IDENT   := [a-z][a-zA-Z0-9_]*
//! NAT     := [0-9]+
//! ```
//!
//! A lambda body extends as far right as possible.

use std::fmt;

use thiserror::Error;

use super::term::{LnTerm, LnVar, NamedTerm, Term};
use super::Mode;
use crate::value::Atom;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(String),
    Hash,
    LParen,
    RParen,
    Backslash,
    Dot,
    Bad(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Nat(s) => write!(f, "number '{s}'"),
            Tok::Hash => f.write_str("'#'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Backslash => f.write_str("'\\'"),
            Tok::Dot => f.write_str("'.'"),
            Tok::Bad(c) => write!(f, "character {c:?}"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Spanned> {
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = (line, column);
        let tok = if c.is_ascii_lowercase() {
            let begin = i;
            while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                i += 1;
            }
            Tok::Ident(chars[begin..=i].iter().collect())
        } else if c.is_ascii_digit() {
            let begin = i;
            while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                i += 1;
            }
            Tok::Nat(chars[begin..=i].iter().collect())
        } else {
            match c {
                '#' => Tok::Hash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '\\' => Tok::Backslash,
                '.' => Tok::Dot,
                other => Tok::Bad(other),
            }
        };
        let width = match &tok {
            Tok::Ident(s) | Tok::Nat(s) => s.chars().count(),
            _ => 1,
        };
        i += 1;
        column += width;
        out.push(Spanned { tok, line: start.0, column: start.1 });
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    out
}

/// Leaves as read: identifiers and indices. Binders: `None` in LN mode.
type Raw = Term<Option<Atom>, LnVar>;

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError { line: t.line, column: t.column, expected, found: t.tok.to_string() }
    }

    fn atomic_starts(&self) -> Vec<&'static str> {
        match self.mode {
            Mode::LocallyNameless => vec!["identifier", "'#'", "'('", "'\\'"],
            Mode::Named => vec!["identifier", "'('", "'\\'"],
        }
    }

    fn starts_atomic(&self) -> bool {
        match self.peek() {
            Tok::Ident(_) | Tok::LParen | Tok::Backslash => true,
            Tok::Hash => self.mode == Mode::LocallyNameless,
            _ => false,
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    fn term(&mut self) -> Result<Raw, ParseError> {
        let mut t = self.atomic()?;
        while self.starts_atomic() {
            let arg = self.atomic()?;
            t = Term::app(t, arg);
        }
        Ok(t)
    }

    fn atomic(&mut self) -> Result<Raw, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.pos += 1;
                Ok(Term::Var(LnVar::Fvar(Atom::new(name))))
            }
            Tok::Hash if self.mode == Mode::LocallyNameless => {
                self.pos += 1;
                match self.peek().clone() {
                    Tok::Nat(digits) => {
                        let n = digits.parse().map_err(|_| self.error(vec!["index below 2^64"]))?;
                        self.pos += 1;
                        Ok(Term::Var(LnVar::Bvar(n)))
                    }
                    _ => Err(self.error(vec!["natural number"])),
                }
            }
            Tok::LParen => {
                self.pos += 1;
                let t = self.term()?;
                if *self.peek() != Tok::RParen {
                    let mut expected = self.atomic_starts();
                    expected.push("')'");
                    return Err(self.error(expected));
                }
                self.pos += 1;
                Ok(t)
            }
            Tok::Backslash => {
                self.pos += 1;
                let binder = match self.mode {
                    Mode::LocallyNameless => None,
                    Mode::Named => match self.peek().clone() {
                        Tok::Ident(name) => {
                            self.pos += 1;
                            Some(Atom::new(name))
                        }
                        _ => return Err(self.error(vec!["identifier"])),
                    },
                };
                self.expect(Tok::Dot, "'.'")?;
                let body = self.term()?;
                Ok(Term::lam(binder, body))
            }
            _ => Err(self.error(self.atomic_starts())),
        }
    }
}

fn parse_raw(text: &str, mode: Mode) -> Result<Raw, ParseError> {
    let mut p = Parser { toks: tokenize(text), pos: 0, mode };
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        let mut expected = p.atomic_starts();
        expected.push("end of input");
        return Err(p.error(expected));
    }
    Ok(t)
}

pub fn parse_ln(text: &str) -> Result<LnTerm, ParseError> {
    Ok(parse_raw(text, Mode::LocallyNameless)?.relabel(&mut |_| (), &mut LnVar::clone))
}

pub fn parse_named(text: &str) -> Result<NamedTerm, ParseError> {
    let raw = parse_raw(text, Mode::Named)?;
    Ok(raw.relabel(&mut |b| b.clone().expect("named binders carry an atom"), &mut |v| match v {
        LnVar::Fvar(a) => a.clone(),
        LnVar::Bvar(_) => unreachable!("indices are rejected in named mode"),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_lambda_application() {
        let t = parse_ln("\\ . #0 #1").unwrap();
        assert_eq!(t, LnTerm::abs(Term::app(LnTerm::bvar(0), LnTerm::bvar(1))));
    }

    #[test]
    fn named_nested_lambdas() {
        let t = parse_named("\\x. \\y. y x").unwrap();
        let v = |s: &str| Term::var(Atom::new(s));
        let expected = Term::lam(Atom::new("x"), Term::lam(Atom::new("y"), Term::app(v("y"), v("x"))));
        assert_eq!(t, expected);
    }

    #[test]
    fn unclosed_parens_fail_at_column_three() {
        let e = parse_ln("((").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert_eq!(e.found, "end of input");
        assert_eq!(e.expected, vec!["identifier", "'#'", "'('", "'\\'"]);
    }

    #[test]
    fn application_is_left_associative() {
        let t = parse_ln("a b c").unwrap();
        assert_eq!(t, Term::app(Term::app(LnTerm::fvar("a"), LnTerm::fvar("b")), LnTerm::fvar("c")));
    }

    #[test]
    fn lambda_body_is_maximal() {
        let t = parse_ln("x \\ . #0 y").unwrap();
        let body = Term::app(LnTerm::bvar(0), LnTerm::fvar("y"));
        assert_eq!(t, Term::app(LnTerm::fvar("x"), LnTerm::abs(body)));
    }

    #[test]
    fn errors_report_position_and_expectation() {
        let e = parse_named("\\x y").unwrap_err();
        assert_eq!((e.column, e.expected.clone()), (4, vec!["'.'"]));
        let e = parse_named("#0").unwrap_err();
        assert_eq!(e.column, 1);
        let e = parse_ln("a\n  )").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.expected.contains(&"end of input"));
        let e = parse_ln("Abc").unwrap_err();
        assert_eq!(e.found, "character 'A'");
        let e = parse_ln("").unwrap_err();
        assert_eq!(e.found, "end of input");
        assert!(parse_ln("# x").is_err());
    }

    #[test]
    fn identifiers_take_digits_and_underscores() {
        let t = parse_ln("x_1y2").unwrap();
        assert_eq!(t, LnTerm::fvar("x_1y2"));
        assert_eq!(parse_ln("#12").unwrap(), LnTerm::bvar(12));
    }
}
