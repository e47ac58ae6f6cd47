//! The proposition language: atoms over named projectors combined with
//! `!`, `&` and `|`.
//!
//! ```text
//! formula := or
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "(" formula ")" | atom
//! atom    := "P" "[" int "," int "]" | identifier
//! ```
//!
//! `|` and `&` associate to the left, `!` binds tightest, whitespace is
//! ignored. Positions are character (not byte) offsets.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone)]
pub struct Formula {
    pub node: Node,
    pub span: Range<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

/// Structural equality; spans are ignored.
impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl Formula {
    fn new(node: Node, span: Range<usize>) -> Self {
        Self { node, span }
    }

    /// Builders without source positions, for programmatic construction.
    pub fn atom(name: impl Into<String>) -> Self {
        Self::new(Node::Atom(name.into()), 0..0)
    }

    pub fn not(inner: Formula) -> Self {
        Self::new(Node::Not(Box::new(inner)), 0..0)
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Self::new(Node::And(Box::new(l), Box::new(r)), 0..0)
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Self::new(Node::Or(Box::new(l), Box::new(r)), 0..0)
    }

    /// Height of the tree; an atom has depth 1.
    pub fn depth(&self) -> usize {
        match &self.node {
            Node::Atom(_) => 1,
            Node::Not(f) => 1 + f.depth(),
            Node::And(l, r) | Node::Or(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn atoms(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match &self.node {
            Node::Atom(a) => {
                if !out.contains(&a.as_str()) {
                    out.push(a);
                }
            }
            Node::Not(f) => f.collect_atoms(out),
            Node::And(l, r) | Node::Or(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self.node {
            Node::Or(..) => 1,
            Node::And(..) => 2,
            Node::Not(_) | Node::Atom(_) => 3,
        }
    }
}

/// Canonical text with the fewest parentheses that still re-parse to the
/// same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, c: &Formula, min: u8) -> fmt::Result {
            if c.precedence() < min {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        }
        match &self.node {
            Node::Atom(a) => f.write_str(a),
            Node::Not(c) => {
                f.write_str("!")?;
                child(f, c, 3)
            }
            Node::And(l, r) => {
                child(f, l, 2)?;
                f.write_str(" & ")?;
                child(f, r, 3)
            }
            Node::Or(l, r) => {
                child(f, l, 1)?;
                f.write_str(" | ")?;
                child(f, r, 2)
            }
        }
    }
}

pub fn print(f: &Formula) -> String {
    f.to_string()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    LBracket,
    RBracket,
    Comma,
    LParen,
    RParen,
    Bang,
    Amp,
    Pipe,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Int(s) => format!("`{s}`"),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    start: usize,
    end: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '!' => Tok::Bang,
            '&' => Tok::Amp,
            '|' => Tok::Pipe,
            c if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(chars[start..=i].iter().collect())
            }
            c if c.is_alphabetic() || c == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(ParseError {
                    position: start,
                    expected: "a token".into(),
                    found: format!("`{other}`"),
                })
            }
        };
        i += 1;
        out.push(Token { tok, start, end: i });
    }
    out.push(Token {
        tok: Tok::Eof,
        start: chars.len(),
        end: chars.len(),
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            position: t.start,
            expected: expected.into(),
            found: t.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Token, ParseError> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while self.peek().tok == Tok::Pipe {
            self.bump();
            let rhs = self.and()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Formula::new(Node::Or(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek().tok == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Formula::new(Node::And(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Bang => {
                self.bump();
                let inner = self.unary()?;
                let span = t.start..inner.span.end;
                Ok(Formula::new(Node::Not(Box::new(inner)), span))
            }
            Tok::LParen => {
                self.bump();
                let mut inner = self.or()?;
                let close = self.expect(Tok::RParen, "`)`")?;
                inner.span = t.start..close.end;
                Ok(inner)
            }
            Tok::Ident(_) => self.atom(),
            _ => Err(self.error("`!`, `(` or an atom")),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let head = self.bump();
        let Tok::Ident(name) = head.tok else {
            unreachable!("caller checked for an identifier")
        };
        if name != "P" || self.peek().tok != Tok::LBracket {
            return Ok(Formula::new(Node::Atom(name), head.start..head.end));
        }
        self.bump();
        let m = self.int()?;
        self.expect(Tok::Comma, "`,`")?;
        let r = self.int()?;
        let close = self.expect(Tok::RBracket, "`]`")?;
        Ok(Formula::new(
            Node::Atom(format!("P[{m},{r}]")),
            head.start..close.end,
        ))
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(digits) => {
                let value = digits.parse().map_err(|_| ParseError {
                    position: t.start,
                    expected: "an integer index".into(),
                    found: format!("`{digits}` (too large)"),
                })?;
                self.bump();
                Ok(value)
            }
            _ => Err(self.error("an integer index")),
        }
    }
}

pub fn parse(input: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        tokens: lex(input)?,
        pos: 0,
    };
    let f = p.or()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error("`&`, `|` or end of input"));
    }
    Ok(f)
}
