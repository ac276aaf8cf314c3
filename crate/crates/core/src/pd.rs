//! Planar diagram (PD) codes.
//!
//! A PD code lists one 4-tuple of arc labels per crossing, starting from the
//! incoming under-strand and proceeding counterclockwise. Arc labels are
//! positive integers and every label occurs exactly twice in the whole code.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One crossing: `[under_in, b, under_out, d]` counterclockwise.
pub type CrossingTuple = [u32; 4];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    pub crossings: Vec<CrossingTuple>,
}

impl PdCode {
    pub fn new(crossings: Vec<CrossingTuple>) -> Result<Self> {
        let code = PdCode { crossings };
        code.validate_labels()?;
        Ok(code)
    }

    /// Parses the bracket syntax `[[1,4,2,5],[3,6,4,1],[5,2,6,3]]`.
    /// Whitespace between tokens is ignored.
    pub fn parse(input: &str) -> Result<Self> {
        Parser { bytes: input.as_bytes(), pos: 0 }.parse()
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Distinct arc labels in ascending order.
    pub fn labels(&self) -> Vec<u32> {
        let mut ls: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    fn validate_labels(&self) -> Result<()> {
        if self.crossings.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for t in &self.crossings {
            for &l in t {
                if l == 0 {
                    return Err(Error::MalformedSyntax {
                        position: 0,
                        reason: "arc labels must be positive".into(),
                    });
                }
                *counts.entry(l).or_insert(0) += 1;
            }
        }
        for (label, count) in counts {
            if count != 2 {
                return Err(Error::ArcLabelNotTwice { label, count });
            }
        }
        Ok(())
    }

    pub fn to_bracket_string(&self) -> String {
        let mut s = String::from("[");
        for (i, t) in self.crossings.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("[{},{},{},{}]", t[0], t[1], t[2], t[3]));
        }
        s.push(']');
        s
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<PdCode> {
        self.skip_ws();
        self.expect(b'[')?;
        let mut crossings = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.pos += 1;
            self.skip_ws();
            if self.pos != self.bytes.len() {
                return Err(self.err("trailing input after closing bracket"));
            }
            return Err(Error::EmptyCode);
        }
        loop {
            crossings.push(self.parse_tuple()?);
            self.skip_ws();
            match self.next() {
                Some(b',') => continue,
                Some(b']') => break,
                _ => return Err(self.err("expected `,` or `]` after crossing")),
            }
        }
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(self.err("trailing input after closing bracket"));
        }
        PdCode::new(crossings)
    }

    fn parse_tuple(&mut self) -> Result<CrossingTuple> {
        self.skip_ws();
        self.expect(b'[')?;
        let mut vals = [0u32; 4];
        for (i, v) in vals.iter_mut().enumerate() {
            self.skip_ws();
            *v = self.parse_number()?;
            self.skip_ws();
            if i < 3 {
                self.expect(b',')?;
            }
        }
        self.expect(b']')?;
        Ok(vals)
    }

    fn parse_number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a positive integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u32>()
            .map_err(|_| Error::MalformedSyntax { position: start, reason: "integer out of range".into() })
    }

    fn skip_ws(&mut self) {
        while self.peek().map_or(false, |b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", b as char)))
        }
    }

    fn err(&self, reason: &str) -> Error {
        Error::MalformedSyntax { position: self.pos, reason: reason.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_trefoil() {
        let pd = PdCode::parse("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(pd.len(), 3);
        assert_eq!(pd.crossings[1], [3, 6, 4, 1]);
        assert_eq!(pd.labels(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn tolerates_whitespace() {
        let pd = PdCode::parse(" [ [1, 1, 2, 2] ] ").unwrap();
        assert_eq!(pd.len(), 1);
    }

    #[test]
    fn rejects_empty_code() {
        assert_eq!(PdCode::parse("[]"), Err(Error::EmptyCode));
    }

    #[test]
    fn rejects_malformed_syntax() {
        assert!(matches!(PdCode::parse("[[1,2,3]]"), Err(Error::MalformedSyntax { .. })));
        assert!(matches!(PdCode::parse("[[1,2,3,4],"), Err(Error::MalformedSyntax { .. })));
        assert!(matches!(PdCode::parse("[[1,2,3,4]] junk"), Err(Error::MalformedSyntax { .. })));
        assert!(matches!(PdCode::parse("[[0,1,0,1]]"), Err(Error::MalformedSyntax { .. })));
    }

    #[test]
    fn rejects_bad_label_multiplicity() {
        let e = PdCode::parse("[[1,2,3,4],[1,2,3,5]]").unwrap_err();
        assert_eq!(e, Error::ArcLabelNotTwice { label: 4, count: 1 });
    }

    #[test]
    fn bracket_string_roundtrip() {
        let s = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
        let pd = PdCode::parse(s).unwrap();
        assert_eq!(pd.to_bracket_string(), s);
    }
}
