//! The ring-spec language: a recursive-descent parser with one character of
//! lookahead, an AST that keeps source spans, and conversion to [`Recipe`].
//!
//! ```text
//! spec := "Z" | "Zn(" int ")" | "GF(" int ["," poly] ")" | "Prod(" spec ("," spec)+ ")"
//!       | "Mat(" spec "," int ")" | "UT(" spec "," int ")" | "UTc(" spec "," "[" elems "]" "," int ")"
//!       | "Triv(" spec ")" | "TrivQ(" spec "," "[" elems "]" ")" | "Twist(" spec "," endo ")"
//!       | "FreeQ(" spec "," "[" idents "]" "," "[" patterns "]" "," int ")"
//!       | "CommQ(" spec "," "{" ident ":" int ("," ident ":" int)* "}" ")"
//!       | "Quat(" int ")" | "HJet(" spec "," int ")" | "Quot(" spec "," "[" elems "]" ")"
//! ```
//!
//! Element literals, moduli and endomorphism images are captured raw (up to
//! the next top-level `,` or closing bracket) and checked against the ring
//! they belong to by [`validate`].

use std::fmt;

use hurwitz_core::constructions::{parse_modulus, Endo, Pattern, Recipe};
use hurwitz_core::{Error as CoreError, Ring};

pub const CONSTRUCTORS: &[&str] =
    &["Z", "Zn", "GF", "Prod", "Mat", "UT", "UTc", "Triv", "TrivQ", "Twist", "FreeQ", "CommQ", "Quat", "HJet", "Quot"];

/// Byte range in the source plus the 1-based line and column of its start.
#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

/// A value with the place it was read from. Equality ignores the span, so
/// an AST compares equal to the AST of its printed form.
#[derive(Clone, Debug)]
pub struct Spanned<T> {
    pub value: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T: Eq> Eq for Spanned<T> {}

fn unspanned<T>(value: T) -> Spanned<T> {
    Spanned { value, span: Span::default() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Z,
    Zn(Spanned<u64>),
    GF { p: Spanned<u64>, modulus: Option<Spanned<String>> },
    Prod(Vec<RingSpec>),
    Mat(Box<RingSpec>, Spanned<usize>),
    UT(Box<RingSpec>, Spanned<usize>),
    UTc { base: Box<RingSpec>, ideal: Vec<Spanned<String>>, k: Spanned<usize> },
    Triv(Box<RingSpec>),
    TrivQ { base: Box<RingSpec>, ideal: Vec<Spanned<String>> },
    Twist { base: Box<RingSpec>, endo: Spanned<String> },
    FreeQ { base: Box<RingSpec>, gens: Vec<Spanned<String>>, patterns: Vec<Spanned<String>>, max_len: Spanned<usize> },
    CommQ { base: Box<RingSpec>, caps: Vec<(Spanned<String>, Spanned<u32>)> },
    Quat(Spanned<u64>),
    HJet(Box<RingSpec>, Spanned<usize>),
    Quot { base: Box<RingSpec>, ideal: Vec<Spanned<String>> },
}

/// A parsed ring spec: one constructor node and the span it covers.
#[derive(Clone, Debug)]
pub struct RingSpec {
    pub node: Node,
    pub span: Span,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl Eq for RingSpec {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    Syntax { line: usize, col: usize, expected: Vec<String>, found: String },
    Arity { line: usize, col: usize, constructor: String, expected: String },
    Literal { line: usize, col: usize, literal: String, message: String },
}

impl SpecError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            SpecError::Syntax { line, col, .. }
            | SpecError::Arity { line, col, .. }
            | SpecError::Literal { line, col, .. } => (*line, *col),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Syntax { line, col, expected, found } => {
                write!(f, "syntax error at {line}:{col}: expected {}, found {found}", expected.join(" or "))
            }
            SpecError::Arity { line, col, constructor, expected } => {
                write!(f, "arity error at {line}:{col}: {constructor} takes {expected}")
            }
            SpecError::Literal { line, col, literal, message } => {
                write!(f, "invalid literal `{literal}` at {line}:{col}: {message}")
            }
        }
    }
}

impl std::error::Error for SpecError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn describe(c: Option<char>) -> String {
    match c {
        None => "end of input".into(),
        Some(c) => format!("`{c}`"),
    }
}

fn arity(kind: &str) -> &'static str {
    match kind {
        "Zn" | "Quat" => "one integer",
        "GF" => "a prime and an optional modulus",
        "Prod" => "two or more rings",
        "Mat" | "UT" | "HJet" => "a ring and an integer",
        "UTc" => "a ring, an element list and an integer",
        "Triv" => "one ring",
        "TrivQ" | "Quot" => "a ring and an element list",
        "Twist" => "a ring and an endomorphism",
        "FreeQ" => "a ring, a generator list, a pattern list and an integer",
        "CommQ" => "a ring and a map of exponent caps",
        _ => "no arguments",
    }
}

impl<'a> Parser<'a> {
    fn span_at(&self, start: usize, end: usize) -> Span {
        let before = &self.src[..start];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        let col = self.src[line_start..start].chars().count() + 1;
        Span { start, end, line, col }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn syntax(&mut self, expected: &[&str]) -> SpecError {
        let found = describe(self.peek());
        let span = self.span_at(self.pos, self.pos);
        SpecError::Syntax {
            line: span.line,
            col: span.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn arity_error(&mut self, kind: &str) -> SpecError {
        self.skip_ws();
        let span = self.span_at(self.pos, self.pos);
        SpecError::Arity { line: span.line, col: span.col, constructor: kind.into(), expected: arity(kind).into() }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.syntax(&[&format!("`{c}`")]))
        }
    }

    /// A `,` between arguments; a `)` here means the argument list is short.
    fn next_arg(&mut self, kind: &str) -> Result<(), SpecError> {
        match self.peek() {
            Some(',') => {
                self.pos += 1;
                if self.peek() == Some(')') {
                    return Err(self.arity_error(kind));
                }
                Ok(())
            }
            Some(')') => Err(self.arity_error(kind)),
            _ => Err(self.syntax(&["`,`"])),
        }
    }

    /// The closing `)`; a `,` here means there are too many arguments.
    fn close(&mut self, kind: &str) -> Result<(), SpecError> {
        match self.peek() {
            Some(')') => {
                self.pos += 1;
                Ok(())
            }
            Some(',') => Err(self.arity_error(kind)),
            _ => Err(self.syntax(&["`)`"])),
        }
    }

    fn word(&mut self) -> Spanned<String> {
        self.skip_ws();
        let start = self.pos;
        let len =
            self.src[start..].find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(self.src.len() - start);
        self.pos += len;
        Spanned { value: self.src[start..self.pos].to_string(), span: self.span_at(start, self.pos) }
    }

    fn int<T: std::str::FromStr>(&mut self, kind: &str) -> Result<Spanned<T>, SpecError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            Some(')') => return Err(self.arity_error(kind)),
            _ => return Err(self.syntax(&["integer"])),
        }
        let start = self.pos;
        let len = self.src[start..].find(|c: char| !c.is_ascii_digit()).unwrap_or(self.src.len() - start);
        self.pos += len;
        let text = &self.src[start..self.pos];
        let span = self.span_at(start, self.pos);
        match text.parse() {
            Ok(value) => Ok(Spanned { value, span }),
            Err(_) => Err(SpecError::Literal {
                line: span.line,
                col: span.col,
                literal: text.into(),
                message: "integer out of range".into(),
            }),
        }
    }

    /// Raw text up to the next `,` or closing bracket at nesting depth 0.
    fn raw(&mut self, what: &str) -> Result<Spanned<String>, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        let mut end = self.src.len();
        for (i, c) in self.src[start..].char_indices() {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' if depth == 0 => {
                    end = start + i;
                    break;
                }
                ')' | ']' | '}' => depth -= 1,
                ',' if depth == 0 => {
                    end = start + i;
                    break;
                }
                _ => {}
            }
        }
        let text = self.src[start..end].trim_end();
        if text.is_empty() {
            return Err(self.syntax(&[what]));
        }
        self.pos = start + text.len();
        Ok(Spanned { value: text.to_string(), span: self.span_at(start, self.pos) })
    }

    /// `open item ("," item)* close`, or an empty list when `allow_empty`.
    fn list<T>(
        &mut self,
        open: char,
        close: char,
        allow_empty: bool,
        mut item: impl FnMut(&mut Self) -> Result<T, SpecError>,
    ) -> Result<Vec<T>, SpecError> {
        self.expect(open)?;
        let mut out = Vec::new();
        if allow_empty && self.peek() == Some(close) {
            self.pos += close.len_utf8();
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(c) if c == close => {
                    self.pos += c.len_utf8();
                    return Ok(out);
                }
                _ => return Err(self.syntax(&["`,`", &format!("`{close}`")])),
            }
        }
    }

    fn elems(&mut self) -> Result<Vec<Spanned<String>>, SpecError> {
        self.list('[', ']', true, |p| p.raw("element literal"))
    }

    fn spec(&mut self) -> Result<RingSpec, SpecError> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.syntax(&["ring constructor"])),
        }
        let start = self.pos;
        let head = self.word();
        let kind = head.value.as_str();
        if !CONSTRUCTORS.contains(&kind) {
            let span = head.span;
            return Err(SpecError::Syntax {
                line: span.line,
                col: span.col,
                expected: CONSTRUCTORS.iter().map(|s| s.to_string()).collect(),
                found: format!("`{kind}`"),
            });
        }
        if kind == "Z" {
            return Ok(RingSpec { node: Node::Z, span: head.span });
        }
        self.expect('(')?;
        if self.peek() == Some(')') {
            return Err(self.arity_error(kind));
        }
        let node = match kind {
            "Zn" => Node::Zn(self.int(kind)?),
            "Quat" => Node::Quat(self.int(kind)?),
            "GF" => {
                let p = self.int(kind)?;
                let modulus = if self.peek() == Some(',') {
                    self.pos += 1;
                    Some(self.raw("modulus polynomial")?)
                } else {
                    None
                };
                Node::GF { p, modulus }
            }
            "Prod" => {
                let mut parts = vec![self.spec()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                if parts.len() < 2 {
                    return Err(self.arity_error(kind));
                }
                Node::Prod(parts)
            }
            "Mat" | "UT" | "HJet" => {
                let base = Box::new(self.spec()?);
                self.next_arg(kind)?;
                let k = self.int(kind)?;
                match kind {
                    "Mat" => Node::Mat(base, k),
                    "UT" => Node::UT(base, k),
                    _ => Node::HJet(base, k),
                }
            }
            "UTc" => {
                let base = Box::new(self.spec()?);
                self.next_arg(kind)?;
                let ideal = self.elems()?;
                self.next_arg(kind)?;
                let k = self.int(kind)?;
                Node::UTc { base, ideal, k }
            }
            "Triv" => Node::Triv(Box::new(self.spec()?)),
            "TrivQ" | "Quot" => {
                let base = Box::new(self.spec()?);
                self.next_arg(kind)?;
                let ideal = self.elems()?;
                if kind == "TrivQ" {
                    Node::TrivQ { base, ideal }
                } else {
                    Node::Quot { base, ideal }
                }
            }
            "Twist" => {
                let base = Box::new(self.spec()?);
                self.next_arg(kind)?;
                Node::Twist { base, endo: self.raw("endomorphism")? }
            }
            "FreeQ" => {
                let base = Box::new(self.spec()?);
                self.next_arg(kind)?;
                let gens = self.list('[', ']', false, |p| {
                    if !p.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                        return Err(p.syntax(&["generator"]));
                    }
                    Ok(p.word())
                })?;
                self.next_arg(kind)?;
                let patterns = self.list('[', ']', true, |p| p.raw("pattern"))?;
                self.next_arg(kind)?;
                let max_len = self.int(kind)?;
                Node::FreeQ { base, gens, patterns, max_len }
            }
            "CommQ" => {
                let base = Box::new(self.spec()?);
                self.next_arg(kind)?;
                let caps = self.list('{', '}', false, |p| {
                    if !p.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                        return Err(p.syntax(&["variable"]));
                    }
                    let v = p.word();
                    p.expect(':')?;
                    Ok((v, p.int("CommQ")?))
                })?;
                Node::CommQ { base, caps }
            }
            _ => unreachable!("constructor list and match arms agree"),
        };
        self.close(kind)?;
        Ok(RingSpec { node, span: self.span_at(start, self.pos) })
    }
}

/// Parses a ring spec. Literals are captured but not yet checked; see
/// [`validate`].
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p = Parser { src: text, pos: 0 };
    let spec = p.spec()?;
    if p.peek().is_some() {
        return Err(p.syntax(&["end of input"]));
    }
    Ok(spec)
}

/// Parses a set literal `{x, y, ...}` of element literals.
pub fn parse_set_literal(text: &str) -> Result<Vec<Spanned<String>>, SpecError> {
    let mut p = Parser { src: text, pos: 0 };
    let items = p.list('{', '}', true, |p| p.raw("element literal"))?;
    if p.peek().is_some() {
        return Err(p.syntax(&["end of input"]));
    }
    Ok(items)
}

fn literal_error(lit: &str, span: Span, message: impl fmt::Display) -> SpecError {
    SpecError::Literal { line: span.line, col: span.col, literal: lit.into(), message: message.to_string() }
}

fn single_letter(s: &Spanned<String>) -> Result<char, SpecError> {
    let mut chars = s.value.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => Ok(c),
        _ => Err(literal_error(&s.value, s.span, "names are single lowercase letters")),
    }
}

fn pattern(s: &Spanned<String>, gens: &[char]) -> Result<Pattern, SpecError> {
    let bad = |msg: &str| literal_error(&s.value, s.span, msg);
    if let Some(c) = s.value.chars().find(|c| *c != '*' && !gens.contains(c)) {
        return Err(bad(&format!("`{c}` is not a generator")));
    }
    match s.value.split_once('*') {
        None => Ok(Pattern::Word(s.value.clone())),
        Some((a, b)) if !a.is_empty() && !b.is_empty() && !b.contains('*') => {
            Ok(Pattern::Gap(a.to_string(), b.to_string()))
        }
        Some(_) => Err(bad("a pattern is a word with at most one inner `*`")),
    }
}

fn strings(v: &[Spanned<String>]) -> Vec<String> {
    v.iter().map(|s| s.value.clone()).collect()
}

impl RingSpec {
    /// The construction this spec describes. Fails only on literals that can
    /// be checked without building a ring (moduli, names, patterns).
    pub fn to_recipe(&self) -> Result<Recipe, SpecError> {
        let b = |r: &RingSpec| r.to_recipe().map(Box::new);
        Ok(match &self.node {
            Node::Z => Recipe::Z,
            Node::Zn(n) => Recipe::Zn(n.value),
            Node::GF { p, modulus } => {
                let modulus = match modulus {
                    None => None,
                    Some(m) => Some(parse_modulus(&m.value, p.value).map_err(|e| literal_error(&m.value, m.span, e))?),
                };
                Recipe::GF { p: p.value, modulus }
            }
            Node::Prod(parts) => Recipe::Prod(parts.iter().map(RingSpec::to_recipe).collect::<Result<_, _>>()?),
            Node::Mat(r, k) => Recipe::Mat(b(r)?, k.value),
            Node::UT(r, k) => Recipe::UT(b(r)?, k.value),
            Node::UTc { base, ideal, k } => Recipe::UTc { base: b(base)?, ideal: strings(ideal), k: k.value },
            Node::Triv(r) => Recipe::Triv(b(r)?),
            Node::TrivQ { base, ideal } => Recipe::TrivQ { base: b(base)?, ideal: strings(ideal) },
            Node::Twist { base, endo } => {
                let endo = match endo.value.as_str() {
                    "id" => Endo::Id,
                    "frob" => Endo::Frobenius,
                    other => Endo::Image(other.to_string()),
                };
                Recipe::Twist { base: b(base)?, endo }
            }
            Node::FreeQ { base, gens, patterns, max_len } => {
                let gens: Vec<char> = gens.iter().map(single_letter).collect::<Result<_, _>>()?;
                let patterns = patterns.iter().map(|s| pattern(s, &gens)).collect::<Result<_, _>>()?;
                Recipe::FreeQ { base: b(base)?, gens, patterns, max_len: max_len.value }
            }
            Node::CommQ { base, caps } => Recipe::CommQ {
                base: b(base)?,
                caps: caps.iter().map(|(v, c)| Ok((single_letter(v)?, c.value))).collect::<Result<_, SpecError>>()?,
            },
            Node::Quat(n) => Recipe::Quat(n.value),
            Node::HJet(r, n) => Recipe::HJet(b(r)?, n.value),
            Node::Quot { base, ideal } => Recipe::Quot { base: b(base)?, ideal: strings(ideal) },
        })
    }

    /// The AST of a recipe, with empty spans.
    pub fn from_recipe(recipe: &Recipe) -> RingSpec {
        let b = |r: &Recipe| Box::new(RingSpec::from_recipe(r));
        let lits = |v: &[String]| v.iter().cloned().map(unspanned).collect::<Vec<_>>();
        let node = match recipe {
            Recipe::Z => Node::Z,
            Recipe::Zn(n) => Node::Zn(unspanned(*n)),
            Recipe::GF { p, modulus } => Node::GF {
                p: unspanned(*p),
                modulus: modulus.as_ref().map(|m| unspanned(hurwitz_core::constructions::render_poly(m, 't'))),
            },
            Recipe::Prod(parts) => Node::Prod(parts.iter().map(RingSpec::from_recipe).collect()),
            Recipe::Mat(r, k) => Node::Mat(b(r), unspanned(*k)),
            Recipe::UT(r, k) => Node::UT(b(r), unspanned(*k)),
            Recipe::UTc { base, ideal, k } => Node::UTc { base: b(base), ideal: lits(ideal), k: unspanned(*k) },
            Recipe::Triv(r) => Node::Triv(b(r)),
            Recipe::TrivQ { base, ideal } => Node::TrivQ { base: b(base), ideal: lits(ideal) },
            Recipe::Twist { base, endo } => Node::Twist { base: b(base), endo: unspanned(endo.to_string()) },
            Recipe::FreeQ { base, gens, patterns, max_len } => Node::FreeQ {
                base: b(base),
                gens: gens.iter().map(|c| unspanned(c.to_string())).collect(),
                patterns: patterns.iter().map(|p| unspanned(p.to_string())).collect(),
                max_len: unspanned(*max_len),
            },
            Recipe::CommQ { base, caps } => Node::CommQ {
                base: b(base),
                caps: caps.iter().map(|(v, c)| (unspanned(v.to_string()), unspanned(*c))).collect(),
            },
            Recipe::Quat(n) => Node::Quat(unspanned(*n)),
            Recipe::HJet(r, n) => Node::HJet(b(r), unspanned(*n)),
            Recipe::Quot { base, ideal } => Node::Quot { base: b(base), ideal: lits(ideal) },
        };
        RingSpec { node, span: Span::default() }
    }

    fn children(&self) -> Vec<&RingSpec> {
        match &self.node {
            Node::Z | Node::Zn(_) | Node::GF { .. } | Node::Quat(_) => vec![],
            Node::Prod(parts) => parts.iter().collect(),
            Node::Mat(r, _) | Node::UT(r, _) | Node::Triv(r) | Node::HJet(r, _) => vec![r],
            Node::UTc { base, .. }
            | Node::TrivQ { base, .. }
            | Node::Twist { base, .. }
            | Node::FreeQ { base, .. }
            | Node::CommQ { base, .. }
            | Node::Quot { base, .. } => vec![base],
        }
    }

    /// Literals that are elements of the first child ring.
    fn element_literals(&self) -> Vec<&Spanned<String>> {
        match &self.node {
            Node::UTc { ideal, .. } | Node::TrivQ { ideal, .. } | Node::Quot { ideal, .. } => ideal.iter().collect(),
            _ => vec![],
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_recipe() {
            Ok(r) => write!(f, "{r}"),
            Err(_) => write!(f, "<invalid spec>"),
        }
    }
}

/// Builds the ring bottom-up so that a construction error is reported at
/// the constructor or literal that caused it. Errors the construction
/// cannot attribute to a literal (a missing capability, for one) are passed
/// through as core errors.
pub fn validate(spec: &RingSpec) -> Result<Ring, ValidateError> {
    for child in spec.children() {
        validate(child)?;
    }
    let recipe = spec.to_recipe()?;
    let lits = spec.element_literals();
    if !lits.is_empty() {
        let base = spec.children()[0].to_recipe()?.build().map_err(ValidateError::Core)?;
        for lit in lits {
            base.parse(&lit.value).map_err(|e| literal_error(&lit.value, lit.span, e))?;
        }
    }
    recipe.build().map_err(|e| match e {
        CoreError::CapabilityMissing(_) | CoreError::BudgetExceeded(_) | CoreError::Internal(_) => {
            ValidateError::Core(e)
        }
        other => ValidateError::Spec(literal_error(&spec.to_string(), spec.span, other)),
    })
}

#[derive(Debug)]
pub enum ValidateError {
    Spec(SpecError),
    Core(CoreError),
}

impl From<SpecError> for ValidateError {
    fn from(e: SpecError) -> Self {
        ValidateError::Spec(e)
    }
}

impl fmt::Display for ValidateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidateError::Spec(e) => write!(f, "{e}"),
            ValidateError::Core(e) => write!(f, "{e}"),
        }
    }
}
