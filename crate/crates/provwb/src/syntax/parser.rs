//! Recursive-descent parser for the ASCII grammar, with Unicode aliases
//! accepted on input.
//!
//! ```text
//! F ::= F -> F | F <-> F | F | F | F & F | ~F
//!     | !A x F | !E x F | !A x <= t . F | !A x < t . F | (!E likewise)
//!     | t = t | t != t | Atom[name](t, ...) | (F)
//! t ::= 0 | #123 | s(t) | t + t | t * t | x | name(t, ...) | (t)
//! ```
//!
//! A quantifier scopes over the next unary formula. `!=` and `<->` are sugar
//! (negated equation, conjunction of two implications) and are expanded by the
//! parser, never printed.

use super::ast::{AtomId, Formula, FuncId, Natural, Term};
use super::atoms::Registry;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unknown atom symbol `{name}`")]
    UnknownAtom {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: unknown function symbol `{name}`")]
    UnknownFunc {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: `{name}` expects {expected} argument(s), got {got}")]
    Arity {
        line: usize,
        col: usize,
        name: String,
        expected: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Zero,
    Ident(String),
    NumLit(Natural),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Plus,
    Star,
    Eq,
    Neq,
    Leq,
    Lt,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    Iff,
    Forall,
    Exists,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn tokenize(mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, col) = (self.line, self.col);
            let c = match self.bump() {
                Some(c) => c,
                None => break,
            };
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '+' => Tok::Plus,
                '*' | '×' | '⋅' => Tok::Star,
                '=' => Tok::Eq,
                '~' | '¬' => Tok::Tilde,
                '&' | '∧' => Tok::Amp,
                '|' | '∨' => Tok::Pipe,
                '→' => Tok::Arrow,
                '↔' => Tok::Iff,
                '∀' => Tok::Forall,
                '∃' => Tok::Exists,
                '≤' => Tok::Leq,
                '≠' => Tok::Neq,
                '-' => match self.bump() {
                    Some('>') => Tok::Arrow,
                    _ => return Err(self.error("expected `>` after `-`")),
                },
                '<' => match self.chars.peek() {
                    Some('=') => {
                        self.bump();
                        Tok::Leq
                    }
                    Some('-') => {
                        self.bump();
                        match self.bump() {
                            Some('>') => Tok::Iff,
                            _ => return Err(self.error("expected `>` after `<-`")),
                        }
                    }
                    _ => Tok::Lt,
                },
                '!' => match self.bump() {
                    Some('A') => Tok::Forall,
                    Some('E') => Tok::Exists,
                    Some('=') => Tok::Neq,
                    _ => return Err(self.error("expected `A`, `E` or `=` after `!`")),
                },
                '#' => {
                    let mut digits = String::new();
                    while matches!(self.chars.peek(), Some(d) if d.is_ascii_digit()) {
                        digits.push(self.bump().unwrap());
                    }
                    if digits.is_empty() {
                        return Err(self.error("expected digits after `#`"));
                    }
                    Tok::NumLit(digits.parse::<Natural>().unwrap())
                }
                '0' => {
                    if matches!(self.chars.peek(), Some(d) if d.is_ascii_digit()) {
                        return Err(self.error("numerals other than 0 must be written with `#` or `s(...)`"));
                    }
                    Tok::Zero
                }
                c if c.is_ascii_digit() => {
                    return Err(self.error("numerals other than 0 must be written with `#` or `s(...)`"))
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::new();
                    name.push(c);
                    while matches!(self.chars.peek(), Some(d) if d.is_ascii_alphanumeric() || *d == '_')
                    {
                        name.push(self.bump().unwrap());
                    }
                    Tok::Ident(name)
                }
                other => return Err(self.error(format!("unexpected character `{other}`"))),
            };
            out.push(Token { tok, line, col });
        }
        Ok(out)
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    registry: &'a Registry,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn location(&self) -> (usize, usize) {
        match self.tokens.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => self
                .tokens
                .last()
                .map(|t| (t.line, t.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.location();
        ParseError::Syntax {
            line,
            col,
            message: message.into(),
        }
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    // ---- formulas ------------------------------------------------------

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or_formula()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.formula()?;
            Ok(Formula::imp(lhs, rhs))
        } else if self.eat(&Tok::Iff) {
            let rhs = self.formula()?;
            Ok(Formula::and(
                Formula::imp(lhs.clone(), rhs.clone()),
                Formula::imp(rhs, lhs),
            ))
        } else {
            Ok(lhs)
        }
    }

    fn or_formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and_formula()?;
        while self.eat(&Tok::Pipe) {
            let rhs = self.and_formula()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and_formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary_formula()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary_formula()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary_formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(Formula::not(self.unary_formula()?))
            }
            Some(Tok::Forall) => {
                self.pos += 1;
                self.quantifier(true)
            }
            Some(Tok::Exists) => {
                self.pos += 1;
                self.quantifier(false)
            }
            Some(Tok::Ident(name)) if name == "Atom" && self.tokens.get(self.pos + 1).map(|t| &t.tok) == Some(&Tok::LBracket) => {
                self.atom_formula()
            }
            _ => self.relation_or_paren(),
        }
    }

    fn quantifier(&mut self, universal: bool) -> Result<Formula, ParseError> {
        let var = self.ident("a variable after the quantifier")?;
        let strict = match self.peek() {
            Some(Tok::Leq) => Some(false),
            Some(Tok::Lt) => Some(true),
            _ => None,
        };
        if let Some(strict) = strict {
            self.pos += 1;
            let bound = self.term()?;
            self.expect(Tok::Dot, "`.` after the quantifier bound")?;
            let body = self.unary_formula()?;
            Ok(if universal {
                Formula::bforall(&var, bound, strict, body)
            } else {
                Formula::bexists(&var, bound, strict, body)
            })
        } else {
            let body = self.unary_formula()?;
            Ok(if universal {
                Formula::forall(&var, body)
            } else {
                Formula::exists(&var, body)
            })
        }
    }

    fn atom_formula(&mut self) -> Result<Formula, ParseError> {
        let (line, col) = self.location();
        self.pos += 1; // the `Atom` keyword
        self.expect(Tok::LBracket, "`[` after `Atom`")?;
        let name = self.ident("an atom name")?;
        self.expect(Tok::RBracket, "`]` after the atom name")?;
        self.expect(Tok::LParen, "`(` after the atom name")?;
        let mut args = Vec::new();
        if self.peek() != Some(&Tok::RParen) {
            loop {
                args.push(self.term()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(Tok::RParen, "`)` closing the atom arguments")?;
        let info = self.registry.atom(&AtomId(name.clone())).ok_or(
            ParseError::UnknownAtom {
                line,
                col,
                name: name.clone(),
            },
        )?;
        if info.arity != args.len() {
            return Err(ParseError::Arity {
                line,
                col,
                name,
                expected: info.arity,
                got: args.len(),
            });
        }
        Ok(Formula::Atom(AtomId(name), args))
    }

    fn relation_or_paren(&mut self) -> Result<Formula, ParseError> {
        let save = self.pos;
        if let Ok(lhs) = self.term() {
            match self.peek() {
                Some(Tok::Eq) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    return Ok(Formula::Eq(lhs, rhs));
                }
                Some(Tok::Neq) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    return Ok(Formula::not(Formula::Eq(lhs, rhs)));
                }
                _ => {}
            }
        }
        self.pos = save;
        if self.eat(&Tok::LParen) {
            let inner = self.formula()?;
            self.expect(Tok::RParen, "`)`")?;
            Ok(inner)
        } else {
            Err(self.error("expected a formula"))
        }
    }

    // ---- terms ---------------------------------------------------------

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.mul_term()?;
        while self.eat(&Tok::Plus) {
            let rhs = self.mul_term()?;
            lhs = Term::add(lhs, rhs);
        }
        Ok(lhs)
    }

    fn mul_term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.atom_term()?;
        while self.eat(&Tok::Star) {
            let rhs = self.atom_term()?;
            lhs = Term::mul(lhs, rhs);
        }
        Ok(lhs)
    }

    fn atom_term(&mut self) -> Result<Term, ParseError> {
        let (line, col) = self.location();
        match self.advance() {
            Some(Tok::Zero) => Ok(Term::Zero),
            Some(Tok::NumLit(n)) => Ok(Term::Num(n)),
            Some(Tok::LParen) => {
                let inner = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let mut args = Vec::new();
                    if self.peek() != Some(&Tok::RParen) {
                        loop {
                            args.push(self.term()?);
                            if !self.eat(&Tok::Comma) {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen, "`)` closing the arguments")?;
                    if name == "s" {
                        if args.len() != 1 {
                            return Err(ParseError::Arity {
                                line,
                                col,
                                name,
                                expected: 1,
                                got: args.len(),
                            });
                        }
                        return Ok(Term::succ(args.pop().expect("one argument")));
                    }
                    let info =
                        self.registry
                            .func(&FuncId(name.clone()))
                            .ok_or(ParseError::UnknownFunc {
                                line,
                                col,
                                name: name.clone(),
                            })?;
                    if info.arity != args.len() {
                        return Err(ParseError::Arity {
                            line,
                            col,
                            name,
                            expected: info.arity,
                            got: args.len(),
                        });
                    }
                    Ok(Term::Func(FuncId(name), args))
                } else {
                    Ok(Term::Var(name))
                }
            }
            None => Err(self.error("expected a term")),
            Some(_) => {
                self.pos -= 1;
                Err(self.error("expected a term"))
            }
        }
    }
}

/// Parse a formula against an explicit registry.
pub fn parse_with(text: &str, registry: &Registry) -> Result<Formula, ParseError> {
    let tokens = Lexer::new(text).tokenize()?;
    let mut p = Parser {
        tokens,
        pos: 0,
        registry,
    };
    let phi = p.formula()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input after the formula"));
    }
    Ok(phi)
}

/// Parse a formula against the standard registry.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parse_with(text, &Registry::standard())
}

/// Parse a bare term against an explicit registry.
pub fn parse_term_with(text: &str, registry: &Registry) -> Result<Term, ParseError> {
    let tokens = Lexer::new(text).tokenize()?;
    let mut p = Parser {
        tokens,
        pos: 0,
        registry,
    };
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input after the term"));
    }
    Ok(t)
}

/// Parse a bare term against the standard registry.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_term_with(text, &Registry::standard())
}
