//! Lexer and recursive-descent parser for session files.
//!
//! ```text
//! ring A = [x, y];
//! ideal I in A = (x^2, x*y);   # comments run to end of line
//! vnum I;
//! verify-theorem kind=ordinary k=2 I J;
//! ```
//!
//! Words may contain `-` so that command names and filtration kinds lex as
//! one token; declarations reject such names later.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Nat(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: Pos,
}

const SYMBOLS: &[char] = &['=', '[', ']', ',', ';', '(', ')', '*', '^'];

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if SYMBOLS.contains(&c) {
            bump(&mut chars);
            out.push(Token { tok: Tok::Sym(c), pos });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                s.push(bump(&mut chars));
            }
            out.push(Token { tok: Tok::Nat(s), pos });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| c.is_alphanumeric() || c == '_' || c == '-') {
                s.push(bump(&mut chars));
            }
            out.push(Token { tok: Tok::Word(s), pos });
        } else {
            return Err(ParseError::new(pos, format!("unexpected character `{c}`")));
        }
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, column } });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

/// `var^exp`; a bare variable has `exp = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub var: Name,
    pub exp: u32,
}

/// A product of terms; no terms means the monomial `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono {
    pub terms: Vec<Term>,
    pub pos: Pos,
}

impl Mono {
    /// The bare word when this is a single variable without an exponent.
    pub fn as_word(&self) -> Option<&Name> {
        match self.terms.as_slice() {
            [t] if t.exp == 1 => Some(&t.var),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: Name,
    pub vars: Vec<Name>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: Name,
    pub ring: Name,
    pub gens: Vec<Mono>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedArg {
    pub key: Name,
    pub value: Name,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandSyntax {
    pub name: Name,
    pub named: Vec<NamedArg>,
    pub positional: Vec<Mono>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring(RingDecl),
    Ideal(IdealDecl),
    Command(CommandSyntax),
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, what: &str) -> ParseError {
        let t = self.peek();
        ParseError::new(t.pos, format!("expected {what}, found {}", t.tok))
    }

    fn sym(&mut self, c: char) -> Result<Pos, ParseError> {
        if self.peek().tok == Tok::Sym(c) {
            Ok(self.next().pos)
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.peek().tok == Tok::Sym(c);
        if hit {
            self.next();
        }
        hit
    }

    fn word(&mut self, what: &str) -> Result<Name, ParseError> {
        match &self.peek().tok {
            Tok::Word(w) => {
                let text = w.clone();
                Ok(Name { text, pos: self.next().pos })
            }
            _ => Err(self.unexpected(what)),
        }
    }

    /// A word or natural number, as used for argument values.
    fn value(&mut self) -> Result<Name, ParseError> {
        match &self.peek().tok {
            Tok::Word(s) | Tok::Nat(s) => {
                let text = s.clone();
                Ok(Name { text, pos: self.next().pos })
            }
            _ => Err(self.unexpected("a value")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match &self.peek().tok {
            Tok::Word(w) if w == kw => {
                self.next();
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Nat(s) => {
                self.next();
                s.parse().map_err(|_| ParseError::new(t.pos, format!("number `{s}` is too large")))
            }
            _ => Err(self.unexpected("a natural number")),
        }
    }

    fn mono(&mut self) -> Result<Mono, ParseError> {
        let pos = self.peek().pos;
        if let Tok::Nat(n) = &self.peek().tok {
            return if n == "1" {
                self.next();
                Ok(Mono { terms: Vec::new(), pos })
            } else {
                Err(ParseError::new(pos, format!("expected a monomial, found `{n}` (only `1` is a constant monomial)")))
            };
        }
        let mut terms = Vec::new();
        loop {
            let var = self.word("a variable")?;
            let exp = if self.eat('^') { self.nat()? } else { 1 };
            terms.push(Term { var, exp });
            if !self.eat('*') {
                break;
            }
        }
        Ok(Mono { terms, pos })
    }

    fn ring_decl(&mut self) -> Result<RingDecl, ParseError> {
        let name = self.word("a ring name")?;
        self.sym('=')?;
        self.sym('[')?;
        let mut vars = vec![self.word("a variable name")?];
        while self.eat(',') {
            vars.push(self.word("a variable name")?);
        }
        self.sym(']')?;
        self.sym(';')?;
        Ok(RingDecl { name, vars })
    }

    fn ideal_decl(&mut self) -> Result<IdealDecl, ParseError> {
        let name = self.word("an ideal name")?;
        self.keyword("in")?;
        let ring = self.word("a ring name")?;
        self.sym('=')?;
        self.sym('(')?;
        let mut gens = Vec::new();
        if !self.eat(')') {
            gens.push(self.mono()?);
            while self.eat(',') {
                gens.push(self.mono()?);
            }
            self.sym(')')?;
        }
        self.sym(';')?;
        Ok(IdealDecl { name, ring, gens })
    }

    fn command(&mut self, name: Name) -> Result<CommandSyntax, ParseError> {
        let mut named = Vec::new();
        let mut positional = Vec::new();
        loop {
            match (&self.peek().tok, self.peek2()) {
                (Tok::Sym(';'), _) => {
                    self.next();
                    return Ok(CommandSyntax { name, named, positional });
                }
                (Tok::Word(_), Tok::Sym('=')) => {
                    let key = self.word("an argument name")?;
                    self.sym('=')?;
                    named.push(NamedArg { key, value: self.value()? });
                }
                (Tok::Word(_) | Tok::Nat(_), _) => positional.push(self.mono()?),
                _ => return Err(self.unexpected("an argument or `;`")),
            }
        }
    }

    fn stmt(&mut self) -> Result<Option<Stmt>, ParseError> {
        if self.peek().tok == Tok::Eof {
            return Ok(None);
        }
        let head = self.word("`ring`, `ideal` or a command")?;
        Ok(Some(match head.text.as_str() {
            "ring" => Stmt::Ring(self.ring_decl()?),
            "ideal" => Stmt::Ideal(self.ideal_decl()?),
            _ => Stmt::Command(self.command(head)?),
        }))
    }
}

/// Parses the statements of a session without resolving names.
pub fn parse(text: &str) -> Result<Vec<Stmt>, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let mut out = Vec::new();
    while let Some(s) = p.stmt()? {
        out.push(s);
    }
    Ok(out)
}
