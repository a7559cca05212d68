//! The `.hopf` document language: lexer, parser, printer, evaluators.
//!
//! A document declares a ground field, presented algebras, Hopf structure,
//! comodules, coactions, matrices, and check directives.  The grammar is
//! ASCII-only; `(x)` is the tensor separator and `ainv`-style names stand
//! in for inverses.  Parsing yields an AST with source positions on items;
//! the canonical printer and the parser are mutually inverse on canonical
//! documents.

use std::fmt;
use std::sync::Arc;

use crate::ncalg::{AlgebraError, Element, Presentation, Word};
use crate::scalar::{FieldDescriptor, Scalar};
use crate::tensor::TensorElement;

/// A 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// A parse or evaluation error with an optional source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub pos: Option<Pos>,
    pub message: String,
}

impl DslError {
    pub fn at(pos: Pos, message: impl Into<String>) -> DslError {
        DslError {
            pos: Some(pos),
            message: message.into(),
        }
    }

    pub fn bare(message: impl Into<String>) -> DslError {
        DslError {
            pos: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pos {
            Some(p) => write!(f, "{p}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for DslError {}

impl From<AlgebraError> for DslError {
    fn from(e: AlgebraError) -> DslError {
        DslError::bare(e.to_string())
    }
}

impl From<crate::scalar::ScalarError> for DslError {
    fn from(e: crate::scalar::ScalarError) -> DslError {
        DslError::bare(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Colon,
    Eq,
    Caret,
    Star,
    Plus,
    Minus,
    Slash,
    Arrow,
    TensorSep,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::TensorSep => write!(f, "`(x)`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, DslError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut line = 1u32;
    let mut col = 1u32;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let advance = |i: &mut usize, col: &mut u32, n: usize| {
            *i += n;
            *col += n as u32;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            ' ' | '\t' | '\r' => advance(&mut i, &mut col, 1),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '{' => {
                out.push((Tok::LBrace, pos));
                advance(&mut i, &mut col, 1);
            }
            '}' => {
                out.push((Tok::RBrace, pos));
                advance(&mut i, &mut col, 1);
            }
            '(' => {
                if chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') {
                    out.push((Tok::TensorSep, pos));
                    advance(&mut i, &mut col, 3);
                } else {
                    out.push((Tok::LParen, pos));
                    advance(&mut i, &mut col, 1);
                }
            }
            ')' => {
                out.push((Tok::RParen, pos));
                advance(&mut i, &mut col, 1);
            }
            ',' => {
                out.push((Tok::Comma, pos));
                advance(&mut i, &mut col, 1);
            }
            ';' => {
                out.push((Tok::Semi, pos));
                advance(&mut i, &mut col, 1);
            }
            ':' => {
                out.push((Tok::Colon, pos));
                advance(&mut i, &mut col, 1);
            }
            '=' => {
                out.push((Tok::Eq, pos));
                advance(&mut i, &mut col, 1);
            }
            '^' => {
                out.push((Tok::Caret, pos));
                advance(&mut i, &mut col, 1);
            }
            '*' => {
                out.push((Tok::Star, pos));
                advance(&mut i, &mut col, 1);
            }
            '+' => {
                out.push((Tok::Plus, pos));
                advance(&mut i, &mut col, 1);
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    out.push((Tok::Arrow, pos));
                    advance(&mut i, &mut col, 2);
                } else {
                    out.push((Tok::Minus, pos));
                    advance(&mut i, &mut col, 1);
                }
            }
            '/' => {
                out.push((Tok::Slash, pos));
                advance(&mut i, &mut col, 1);
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: u64 = s.parse().map_err(|_| {
                    DslError::at(pos, format!("integer literal `{s}` is too large"))
                })?;
                col += (i - start) as u32;
                out.push((Tok::Int(n), pos));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                out.push((Tok::Ident(s), pos));
            }
            _ => {
                return Err(DslError::at(pos, format!("unexpected character `{c}`")));
            }
        }
    }
    out.push((Tok::End, Pos { line, col }));
    Ok(out)
}

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

/// An expression: elements, scalars, and tensors share one grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    /// A named reference (generator or the field parameter) with a power;
    /// power one prints bare.
    Name {
        name: String,
        exp: i64,
    },
    Neg(Box<Expr>),
    /// Two or more summands; subtraction is a negated summand.
    Sum(Vec<Expr>),
    /// Two or more factors joined by `*`.
    Prod(Vec<Expr>),
    Quot(Box<Expr>, Box<Expr>),
    /// Two or more legs joined by `(x)`.
    Tensor(Vec<Expr>),
    Paren(Box<Expr>),
}

impl Expr {
    pub fn name(n: &str) -> Expr {
        Expr::Name {
            name: n.to_string(),
            exp: 1,
        }
    }
}

/// Termination measure declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureAst {
    None,
    Length,
    Skew {
        mover: String,
        forward: String,
        backward: String,
    },
}

#[derive(Debug, Clone)]
pub struct AlgebraItem {
    pub pos: Pos,
    pub name: String,
    pub gens: Vec<String>,
    pub rels: Vec<(Expr, Expr)>,
    pub rules: Vec<(Expr, Expr)>,
    pub measure: Option<MeasureAst>,
}

#[derive(Debug, Clone)]
pub struct HopfItem {
    pub pos: Pos,
    pub name: String,
    pub algebra: String,
    pub deltas: Vec<(String, Expr)>,
    pub counits: Vec<(String, Expr)>,
    pub antipodes: Vec<(String, Expr)>,
}

#[derive(Debug, Clone)]
pub struct ComoduleItem {
    pub pos: Pos,
    pub name: String,
    pub gens: Vec<String>,
    pub degrees: Vec<(String, u64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideAst {
    Right,
    Left,
}

#[derive(Debug, Clone)]
pub struct CoactionItem {
    pub pos: Pos,
    pub name: String,
    pub hopf: String,
    pub comodule: String,
    pub side: SideAst,
    pub acts: Vec<(String, Expr)>,
}

#[derive(Debug, Clone)]
pub struct MatrixItem {
    pub pos: Pos,
    pub name: String,
    pub algebra: String,
    pub rows: Vec<Vec<Expr>>,
}

#[derive(Debug, Clone)]
pub struct CheckItem {
    pub pos: Pos,
    pub suite: String,
    pub target: Option<String>,
    pub options: Vec<(String, Expr)>,
}

#[derive(Debug, Clone)]
pub enum Item {
    Field(Pos, FieldDescriptor),
    Algebra(AlgebraItem),
    Hopf(HopfItem),
    Comodule(ComoduleItem),
    Coaction(CoactionItem),
    Matrix(MatrixItem),
    Check(CheckItem),
}

/// A parsed document.
#[derive(Debug, Clone)]
pub struct Document {
    pub items: Vec<Item>,
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, expected: &str) -> Result<T, DslError> {
        Err(DslError::at(
            self.pos(),
            format!("expected {expected}, found {}", self.peek()),
        ))
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), DslError> {
        if self.peek() == &tok {
            self.bump();
            Ok(())
        } else {
            self.err(expected)
        }
    }

    fn ident(&mut self, expected: &str) -> Result<String, DslError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.err(expected),
        }
    }

    fn int(&mut self, expected: &str) -> Result<u64, DslError> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            _ => self.err(expected),
        }
    }

    /// A possibly hyphenated name such as `hopf-ideal`.
    fn hyphen_name(&mut self) -> Result<String, DslError> {
        let mut name = self.ident("a suite name")?;
        while self.peek() == &Tok::Minus {
            self.bump();
            name.push('-');
            name.push_str(&self.ident("the rest of the suite name")?);
        }
        Ok(name)
    }

    // expr := ["-"] tensor_term (("+"|"-") tensor_term)*
    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut items = Vec::new();
        let first = if self.peek() == &Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.tensor_term()?))
        } else {
            self.tensor_term()?
        };
        items.push(first);
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    items.push(self.tensor_term()?);
                }
                Tok::Minus => {
                    self.bump();
                    items.push(Expr::Neg(Box::new(self.tensor_term()?)));
                }
                _ => break,
            }
        }
        if items.len() == 1 {
            Ok(items.pop().expect("one item"))
        } else {
            Ok(Expr::Sum(items))
        }
    }

    // tensor_term := term ("(x)" term)*
    fn tensor_term(&mut self) -> Result<Expr, DslError> {
        let mut legs = vec![self.term()?];
        while self.peek() == &Tok::TensorSep {
            self.bump();
            legs.push(self.term()?);
        }
        if legs.len() == 1 {
            Ok(legs.pop().expect("one leg"))
        } else {
            Ok(Expr::Tensor(legs))
        }
    }

    // term := factor (("*"|"/") factor)*
    fn term(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let f = self.factor()?;
                    acc = match acc {
                        Expr::Prod(mut fs) => {
                            fs.push(f);
                            Expr::Prod(fs)
                        }
                        other => Expr::Prod(vec![other, f]),
                    };
                }
                Tok::Slash => {
                    self.bump();
                    let f = self.factor()?;
                    acc = Expr::Quot(Box::new(acc), Box::new(f));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // factor := INT | IDENT ["^" ["-"] INT] | "(" expr ")"
    fn factor(&mut self) -> Result<Expr, DslError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => {
                self.bump();
                let mut exp: i64 = 1;
                if self.peek() == &Tok::Caret {
                    self.bump();
                    let negative = if self.peek() == &Tok::Minus {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    let n = self.int("an exponent")?;
                    let n = i64::try_from(n).map_err(|_| {
                        DslError::at(self.pos(), "exponent is too large".to_string())
                    })?;
                    exp = if negative { -n } else { n };
                }
                Ok(Expr::Name { name, exp })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Paren(Box::new(inner)))
            }
            _ => self.err("an integer, a name, or `(`"),
        }
    }

    fn field_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let name_pos = self.pos();
        let name = self.ident("a field name (rational, gf:P, ratfunc)")?;
        let field = match name.as_str() {
            "rational" => FieldDescriptor::Rationals,
            "ratfunc" => FieldDescriptor::RationalFunctions,
            "gf" => {
                self.expect(Tok::Colon, "`:`")?;
                let p = self.int("a prime modulus")?;
                FieldDescriptor::prime(p)
                    .map_err(|_| DslError::at(name_pos, format!("{p} is not prime")))?
            }
            other => {
                return Err(DslError::at(
                    name_pos,
                    format!("unknown field `{other}`; use rational, gf:P, or ratfunc"),
                ))
            }
        };
        self.expect(Tok::Semi, "`;`")?;
        Ok(Item::Field(pos, field))
    }

    fn gen_list(&mut self) -> Result<Vec<String>, DslError> {
        let mut gens = Vec::new();
        loop {
            let pos = self.pos();
            let g = self.ident("a generator name")?;
            if gens.contains(&g) {
                return Err(DslError::at(pos, format!("duplicate generator `{g}`")));
            }
            gens.push(g);
            if self.peek() == &Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(Tok::Semi, "`;`")?;
        Ok(gens)
    }

    fn algebra_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let name = self.ident("an algebra name")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut gens = Vec::new();
        let mut rels = Vec::new();
        let mut rules = Vec::new();
        let mut measure = None;
        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Ident(kw) => match kw.as_str() {
                    "gens" => {
                        self.bump();
                        gens = self.gen_list()?;
                    }
                    "rel" => {
                        self.bump();
                        let lhs = self.expr()?;
                        self.expect(Tok::Eq, "`=`")?;
                        let rhs = self.expr()?;
                        self.expect(Tok::Semi, "`;`")?;
                        rels.push((lhs, rhs));
                    }
                    "rule" => {
                        self.bump();
                        let lhs = self.expr()?;
                        self.expect(Tok::Arrow, "`->`")?;
                        let rhs = self.expr()?;
                        self.expect(Tok::Semi, "`;`")?;
                        rules.push((lhs, rhs));
                    }
                    "measure" => {
                        self.bump();
                        let mpos = self.pos();
                        let kind = self.ident("none, length, or skew")?;
                        let m = match kind.as_str() {
                            "none" => MeasureAst::None,
                            "length" => MeasureAst::Length,
                            "skew" => {
                                self.expect(Tok::LParen, "`(`")?;
                                let mover = self.ident("the moving generator")?;
                                self.expect(Tok::Comma, "`,`")?;
                                let forward = self.ident("the forward generator")?;
                                self.expect(Tok::Comma, "`,`")?;
                                let backward = self.ident("the backward generator")?;
                                self.expect(Tok::RParen, "`)`")?;
                                MeasureAst::Skew {
                                    mover,
                                    forward,
                                    backward,
                                }
                            }
                            other => {
                                return Err(DslError::at(
                                    mpos,
                                    format!("unknown measure `{other}`"),
                                ))
                            }
                        };
                        self.expect(Tok::Semi, "`;`")?;
                        measure = Some(m);
                    }
                    _ => return self.err("gens, rel, rule, measure, or `}`"),
                },
                _ => return self.err("gens, rel, rule, measure, or `}`"),
            }
        }
        Ok(Item::Algebra(AlgebraItem {
            pos,
            name,
            gens,
            rels,
            rules,
            measure,
        }))
    }

    fn hopf_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let name = self.ident("a structure name")?;
        let on = self.ident("`on`")?;
        if on != "on" {
            return Err(DslError::at(
                pos,
                "expected `on` after the structure name".to_string(),
            ));
        }
        let algebra = self.ident("an algebra name")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut deltas = Vec::new();
        let mut counits = Vec::new();
        let mut antipodes = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Ident(kw) if kw == "delta" || kw == "counit" || kw == "antipode" => {
                    self.bump();
                    let g = self.ident("a generator name")?;
                    self.expect(Tok::Eq, "`=`")?;
                    let e = self.expr()?;
                    self.expect(Tok::Semi, "`;`")?;
                    match kw.as_str() {
                        "delta" => deltas.push((g, e)),
                        "counit" => counits.push((g, e)),
                        _ => antipodes.push((g, e)),
                    }
                }
                _ => return self.err("delta, counit, antipode, or `}`"),
            }
        }
        Ok(Item::Hopf(HopfItem {
            pos,
            name,
            algebra,
            deltas,
            counits,
            antipodes,
        }))
    }

    fn comodule_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let name = self.ident("a comodule name")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut gens = Vec::new();
        let mut degrees = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Ident(kw) if kw == "gens" => {
                    self.bump();
                    gens = self.gen_list()?;
                }
                Tok::Ident(kw) if kw == "degree" => {
                    self.bump();
                    let g = self.ident("a generator name")?;
                    self.expect(Tok::Eq, "`=`")?;
                    let d = self.int("a degree")?;
                    self.expect(Tok::Semi, "`;`")?;
                    degrees.push((g, d));
                }
                _ => return self.err("gens, degree, or `}`"),
            }
        }
        Ok(Item::Comodule(ComoduleItem {
            pos,
            name,
            gens,
            degrees,
        }))
    }

    fn coaction_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let name = self.ident("a coaction name")?;
        self.expect(Tok::Colon, "`:`")?;
        let hopf = self.ident("a Hopf structure name")?;
        let on = self.ident("`on`")?;
        if on != "on" {
            return Err(DslError::at(
                pos,
                "expected `on` after the Hopf structure name".to_string(),
            ));
        }
        let comodule = self.ident("a comodule name")?;
        let side = match self.peek() {
            Tok::Ident(s) if s == "left" => {
                self.bump();
                SideAst::Left
            }
            Tok::Ident(s) if s == "right" => {
                self.bump();
                SideAst::Right
            }
            _ => SideAst::Right,
        };
        self.expect(Tok::LBrace, "`{`")?;
        let mut acts = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Ident(kw) if kw == "act" => {
                    self.bump();
                    let g = self.ident("a generator name")?;
                    self.expect(Tok::Eq, "`=`")?;
                    let e = self.expr()?;
                    self.expect(Tok::Semi, "`;`")?;
                    acts.push((g, e));
                }
                _ => return self.err("act or `}`"),
            }
        }
        Ok(Item::Coaction(CoactionItem {
            pos,
            name,
            hopf,
            comodule,
            side,
            acts,
        }))
    }

    fn matrix_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let name = self.ident("a matrix name")?;
        let on = self.ident("`on`")?;
        if on != "on" {
            return Err(DslError::at(
                pos,
                "expected `on` after the matrix name".to_string(),
            ));
        }
        let algebra = self.ident("an algebra name")?;
        self.expect(Tok::LBrace, "`{`")?;
        let mut rows = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::RBrace => {
                    self.bump();
                    break;
                }
                Tok::Ident(kw) if kw == "row" => {
                    self.bump();
                    let mut row = vec![self.expr()?];
                    while self.peek() == &Tok::Comma {
                        self.bump();
                        row.push(self.expr()?);
                    }
                    self.expect(Tok::Semi, "`;`")?;
                    rows.push(row);
                }
                _ => return self.err("row or `}`"),
            }
        }
        Ok(Item::Matrix(MatrixItem {
            pos,
            name,
            algebra,
            rows,
        }))
    }

    fn check_item(&mut self, pos: Pos) -> Result<Item, DslError> {
        let suite = self.hyphen_name()?;
        let mut target = None;
        if let Tok::Ident(kw) = self.peek() {
            if kw == "on" {
                self.bump();
                target = Some(self.ident("a target name")?);
            }
        }
        let mut options = Vec::new();
        if let Tok::Ident(kw) = self.peek() {
            if kw == "with" {
                self.bump();
                loop {
                    let key = self.ident("an option key")?;
                    self.expect(Tok::Eq, "`=`")?;
                    let value = self.expr()?;
                    options.push((key, value));
                    if self.peek() == &Tok::Comma {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
        }
        self.expect(Tok::Semi, "`;`")?;
        Ok(Item::Check(CheckItem {
            pos,
            suite,
            target,
            options,
        }))
    }
}

/// Parse a document.
pub fn parse_document(text: &str) -> Result<Document, DslError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0 };
    let mut items = Vec::new();
    loop {
        let pos = p.pos();
        match p.peek().clone() {
            Tok::End => break,
            Tok::Ident(kw) => {
                p.bump();
                let item = match kw.as_str() {
                    "field" => p.field_item(pos)?,
                    "algebra" => p.algebra_item(pos)?,
                    "hopf" => p.hopf_item(pos)?,
                    "comodule" => p.comodule_item(pos)?,
                    "coaction" => p.coaction_item(pos)?,
                    "matrix" => p.matrix_item(pos)?,
                    "check" => p.check_item(pos)?,
                    other => {
                        return Err(DslError::at(
                            pos,
                            format!(
                                "expected field, algebra, hopf, comodule, coaction, matrix, or check; found `{other}`"
                            ),
                        ))
                    }
                };
                items.push(item);
            }
            _ => {
                return Err(DslError::at(
                    pos,
                    format!("expected an item keyword, found {}", p.peek()),
                ))
            }
        }
    }
    Ok(Document { items })
}

/// Parse a single expression (used for command-line parameters).
pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, i: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return p.err("end of input");
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

/// Print an expression in canonical form.
pub fn print_expr(e: &Expr) -> String {
    match e {
        Expr::Int(n) => n.to_string(),
        Expr::Name { name, exp } => {
            if *exp == 1 {
                name.clone()
            } else {
                format!("{name}^{exp}")
            }
        }
        Expr::Neg(t) => format!("-{}", print_expr(t)),
        Expr::Sum(items) => {
            let mut out = String::new();
            for (i, item) in items.iter().enumerate() {
                if i == 0 {
                    out.push_str(&print_expr(item));
                } else if let Expr::Neg(t) = item {
                    out.push_str(" - ");
                    out.push_str(&print_expr(t));
                } else {
                    out.push_str(" + ");
                    out.push_str(&print_expr(item));
                }
            }
            out
        }
        Expr::Prod(fs) => fs.iter().map(print_expr).collect::<Vec<_>>().join("*"),
        Expr::Quot(a, b) => format!("{}/{}", print_expr(a), print_expr(b)),
        Expr::Tensor(legs) => legs
            .iter()
            .map(print_expr)
            .collect::<Vec<_>>()
            .join(" (x) "),
        Expr::Paren(t) => format!("({})", print_expr(t)),
    }
}

/// Print a document in canonical form: items separated by blank lines,
/// blocks indented by two spaces.
pub fn print_document(doc: &Document) -> String {
    let mut blocks = Vec::new();
    for item in &doc.items {
        blocks.push(print_item(item));
    }
    let mut out = blocks.join("\n\n");
    out.push('\n');
    out
}

fn print_item(item: &Item) -> String {
    match item {
        Item::Field(_, f) => format!("field {f};"),
        Item::Algebra(a) => {
            let mut s = format!("algebra {} {{\n", a.name);
            s.push_str(&format!("  gens {};\n", a.gens.join(", ")));
            for (lhs, rhs) in &a.rels {
                s.push_str(&format!(
                    "  rel {} = {};\n",
                    print_expr(lhs),
                    print_expr(rhs)
                ));
            }
            for (lhs, rhs) in &a.rules {
                s.push_str(&format!(
                    "  rule {} -> {};\n",
                    print_expr(lhs),
                    print_expr(rhs)
                ));
            }
            match &a.measure {
                Some(MeasureAst::None) => s.push_str("  measure none;\n"),
                Some(MeasureAst::Length) => s.push_str("  measure length;\n"),
                Some(MeasureAst::Skew {
                    mover,
                    forward,
                    backward,
                }) => s.push_str(&format!(
                    "  measure skew({mover}, {forward}, {backward});\n"
                )),
                None => {}
            }
            s.push('}');
            s
        }
        Item::Hopf(h) => {
            let mut s = format!("hopf {} on {} {{\n", h.name, h.algebra);
            for (g, e) in &h.deltas {
                s.push_str(&format!("  delta {g} = {};\n", print_expr(e)));
            }
            for (g, e) in &h.counits {
                s.push_str(&format!("  counit {g} = {};\n", print_expr(e)));
            }
            for (g, e) in &h.antipodes {
                s.push_str(&format!("  antipode {g} = {};\n", print_expr(e)));
            }
            s.push('}');
            s
        }
        Item::Comodule(c) => {
            let mut s = format!("comodule {} {{\n", c.name);
            s.push_str(&format!("  gens {};\n", c.gens.join(", ")));
            for (g, d) in &c.degrees {
                s.push_str(&format!("  degree {g} = {d};\n"));
            }
            s.push('}');
            s
        }
        Item::Coaction(c) => {
            let side = match c.side {
                SideAst::Right => "right",
                SideAst::Left => "left",
            };
            let mut s = format!(
                "coaction {} : {} on {} {side} {{\n",
                c.name, c.hopf, c.comodule
            );
            for (g, e) in &c.acts {
                s.push_str(&format!("  act {g} = {};\n", print_expr(e)));
            }
            s.push('}');
            s
        }
        Item::Matrix(m) => {
            let mut s = format!("matrix {} on {} {{\n", m.name, m.algebra);
            for row in &m.rows {
                s.push_str(&format!(
                    "  row {};\n",
                    row.iter().map(print_expr).collect::<Vec<_>>().join(", ")
                ));
            }
            s.push('}');
            s
        }
        Item::Check(c) => {
            let mut s = format!("check {}", c.suite);
            if let Some(t) = &c.target {
                s.push_str(&format!(" on {t}"));
            }
            if !c.options.is_empty() {
                s.push_str(" with ");
                s.push_str(
                    &c.options
                        .iter()
                        .map(|(k, v)| format!("{k} = {}", print_expr(v)))
                        .collect::<Vec<_>>()
                        .join(", "),
                );
            }
            s.push(';');
            s
        }
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluate an expression to an element of a presented algebra.  Products
/// reduce under the algebra's rules, so the result is canonical.
pub fn eval_element(expr: &Expr, pres: &Arc<Presentation>) -> Result<Element, DslError> {
    match expr {
        Expr::Int(n) => {
            let c = pres.field().from_i64(*n as i64);
            Ok(Element::scalar(pres, c)?)
        }
        Expr::Name { name, exp } => {
            if let Some(g) = pres.gen_id(name) {
                if *exp < 0 {
                    return Err(DslError::bare(format!(
                        "negative power of generator `{name}`: use the inverse generator instead"
                    )));
                }
                Ok(Element::from_word(pres, Word::power(g, *exp as u32)))
            } else if name == "q" {
                let q = parameter(pres.field())?;
                Ok(Element::scalar(pres, q.pow(*exp)?)?)
            } else {
                Err(DslError::bare(format!("unknown identifier `{name}`")))
            }
        }
        Expr::Neg(t) => Ok(eval_element(t, pres)?.neg()),
        Expr::Sum(items) => {
            let mut acc = Element::zero(pres);
            for item in items {
                acc = acc.add(&eval_element(item, pres)?)?;
            }
            Ok(acc)
        }
        Expr::Prod(fs) => {
            let mut acc = Element::one(pres);
            for f in fs {
                acc = acc.mul(&eval_element(f, pres)?)?;
            }
            Ok(acc)
        }
        Expr::Quot(a, b) => {
            let num = eval_element(a, pres)?;
            let den = eval_element(b, pres)?;
            let c = constant_of(&den).ok_or_else(|| {
                DslError::bare("division is only defined by a scalar".to_string())
            })?;
            Ok(num.scale(&c.inv().map_err(AlgebraError::from)?)?)
        }
        Expr::Tensor(_) => Err(DslError::bare(
            "tensor expression where an element was expected".to_string(),
        )),
        Expr::Paren(t) => eval_element(t, pres),
    }
}

/// Evaluate an expression to a tensor over the given legs.  Terms are
/// `(x)`-joined leg elements; bare scalars multiply the unit tensor.
pub fn eval_tensor(expr: &Expr, legs: &[Arc<Presentation>]) -> Result<TensorElement, DslError> {
    match expr {
        Expr::Neg(t) => {
            let inner = eval_tensor(t, legs)?;
            Ok(inner.neg())
        }
        Expr::Sum(items) => {
            let mut acc = TensorElement::zero(legs.to_vec())?;
            for item in items {
                acc = acc.add(&eval_tensor(item, legs)?)?;
            }
            Ok(acc)
        }
        Expr::Tensor(leg_exprs) => {
            if leg_exprs.len() != legs.len() {
                return Err(DslError::bare(format!(
                    "tensor has {} legs, expected {}",
                    leg_exprs.len(),
                    legs.len()
                )));
            }
            let elements = leg_exprs
                .iter()
                .zip(legs)
                .map(|(e, p)| eval_element(e, p))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(TensorElement::from_elements(&elements)?)
        }
        Expr::Paren(t) => eval_tensor(t, legs),
        other => {
            // A scalar-valued term scales the unit tensor.
            let field = legs
                .first()
                .map(|p| p.field())
                .ok_or_else(|| DslError::bare("tensor with no legs".to_string()))?;
            let c = eval_scalar(other, field)?;
            Ok(TensorElement::unit(legs.to_vec())?.scale(&c)?)
        }
    }
}

/// Evaluate an expression to a scalar of the given field.
pub fn eval_scalar(expr: &Expr, field: FieldDescriptor) -> Result<Scalar, DslError> {
    match expr {
        Expr::Int(n) => Ok(field.from_i64(*n as i64)),
        Expr::Name { name, exp } => {
            if name == "q" {
                let q = parameter(field)?;
                Ok(q.pow(*exp).map_err(AlgebraError::from)?)
            } else {
                Err(DslError::bare(format!(
                    "unknown identifier `{name}` in a scalar expression"
                )))
            }
        }
        Expr::Neg(t) => Ok(eval_scalar(t, field)?.neg()),
        Expr::Sum(items) => {
            let mut acc = field.zero();
            for item in items {
                acc = acc
                    .add(&eval_scalar(item, field)?)
                    .map_err(AlgebraError::from)?;
            }
            Ok(acc)
        }
        Expr::Prod(fs) => {
            let mut acc = field.one();
            for f in fs {
                acc = acc
                    .mul(&eval_scalar(f, field)?)
                    .map_err(AlgebraError::from)?;
            }
            Ok(acc)
        }
        Expr::Quot(a, b) => {
            let num = eval_scalar(a, field)?;
            let den = eval_scalar(b, field)?;
            Ok(num.div(&den).map_err(AlgebraError::from)?)
        }
        Expr::Tensor(_) => Err(DslError::bare(
            "tensor expression where a scalar was expected".to_string(),
        )),
        Expr::Paren(t) => eval_scalar(t, field),
    }
}

/// Evaluate an expression to a plain integer.
pub fn eval_int(expr: &Expr) -> Result<i64, DslError> {
    match expr {
        Expr::Int(n) => {
            i64::try_from(*n).map_err(|_| DslError::bare("integer is too large".to_string()))
        }
        Expr::Neg(t) => Ok(-eval_int(t)?),
        Expr::Paren(t) => eval_int(t),
        other => Err(DslError::bare(format!(
            "expected an integer, found `{}`",
            print_expr(other)
        ))),
    }
}

/// Interpret an expression as a bare name.
pub fn as_ident(expr: &Expr) -> Result<&str, DslError> {
    match expr {
        Expr::Name { name, exp: 1 } => Ok(name),
        other => Err(DslError::bare(format!(
            "expected a name, found `{}`",
            print_expr(other)
        ))),
    }
}

fn parameter(field: FieldDescriptor) -> Result<Scalar, DslError> {
    field
        .q()
        .map_err(|_| DslError::bare("the parameter q requires the ratfunc field".to_string()))
}

/// The scalar value of a constant element, if it is one.
fn constant_of(x: &Element) -> Option<Scalar> {
    if x.is_zero() {
        return Some(x.presentation().field().zero());
    }
    let mut terms = x.terms();
    let (w, c) = terms.next()?;
    if terms.next().is_none() && w == &Word::one() {
        Some(c.clone())
    } else {
        None
    }
}
