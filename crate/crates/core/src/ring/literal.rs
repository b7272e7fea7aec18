use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;

use crate::{Error, Result};

/// Character cursor used to parse canonical element literals.
#[derive(Clone, Debug)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn offset(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Consumes `c` if it is next.
    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let found = match self.rest().chars().next() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_string(),
        };
        Error::Literal { offset: self.pos, msg: format!("{}{found}", msg.into()) }
    }

    pub fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.error("trailing input"))
        } else {
            Ok(())
        }
    }

    /// Optionally signed decimal integer.
    pub fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return Err(self.error("expected an integer"));
        }
        self.pos = end;
        self.src[start..end]
            .trim_start_matches('+')
            .parse::<BigInt>()
            .map_err(|_| Error::Literal { offset: start, msg: "malformed integer".into() })
    }

    pub fn uint(&mut self) -> Result<u64> {
        let at = self.pos;
        let v = self.int()?;
        u64::try_from(v).map_err(|_| Error::Literal { offset: at, msg: "expected a nonnegative integer".into() })
    }

    pub fn peek_digit(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '-' || c == '+')
    }

    /// ASCII identifier (letters, digits, underscore; leading letter).
    pub fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end].is_ascii_alphabetic() || bytes[end] == b'_') {
            end += 1;
            while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
                end += 1;
            }
        }
        if end == start {
            return Err(self.error("expected an identifier"));
        }
        self.pos = end;
        Ok(&self.src[start..end])
    }

    /// Single ASCII letter.
    pub fn letter(&mut self) -> Result<char> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(c)
            }
            _ => Err(self.error("expected a generator letter")),
        }
    }
}
