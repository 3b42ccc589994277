//! Text grammar for braid words.
//!
//! ```text
//! factor := "s(" INT "," INT ")" ("^" SIGNED_INT)?
//!         | "delta" ("^" SIGNED_INT)?
//! ```
//!
//! Factors are separated by whitespace. In Artin mode the band factor is
//! replaced by `"a" INT ("^" SIGNED_INT)?`. `delta` always means
//! `σ_{n-1,n} ⋯ σ_{1,2}` for the ambient strand count.

use super::word::{BandGenerator, BandWord, Sign};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputMode {
    #[default]
    Band,
    Artin,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), Error> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{lit}'")))
        }
    }

    fn int(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<i64>().map_err(|_| Error::Syntax {
            position: start,
            message: format!("integer '{text}' out of range"),
        })
    }

    fn unsigned(&mut self) -> Result<usize, Error> {
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            return Err(self.err("expected an unsigned integer"));
        }
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::Syntax {
            position: start,
            message: "index out of range".into(),
        })
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        if self.eat("^") {
            self.int()
        } else {
            Ok(1)
        }
    }

    fn end_of_factor(&self) -> Result<(), Error> {
        match self.peek() {
            None => Ok(()),
            Some(c) if c.is_ascii_whitespace() => Ok(()),
            Some(_) => Err(self.err("expected whitespace between factors")),
        }
    }
}

fn push_power(out: &mut Vec<BandGenerator>, g: BandGenerator, exp: i64) {
    let letter = if exp < 0 { g.inverse() } else { g };
    for _ in 0..exp.unsigned_abs() {
        out.push(letter);
    }
}

/// Parses a band word on `n` strands.
pub fn parse_band_word(text: &str, n: usize) -> Result<BandWord, Error> {
    parse_word(text, n, InputMode::Band)
}

pub fn parse_word(text: &str, n: usize, mode: InputMode) -> Result<BandWord, Error> {
    if n == 0 {
        return Err(Error::ZeroStrands);
    }
    let delta = BandWord::delta(n)?;
    let mut cur = Cursor::new(text);
    let mut letters = Vec::new();
    loop {
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        let start = cur.pos;
        if cur.eat("delta") {
            let exp = cur.exponent()?;
            cur.end_of_factor()?;
            letters.extend_from_slice(delta.pow(exp).letters());
            continue;
        }
        match mode {
            InputMode::Band => {
                cur.expect("s(")?;
                cur.skip_ws();
                let i = cur.unsigned()?;
                cur.skip_ws();
                cur.expect(",")?;
                cur.skip_ws();
                let j = cur.unsigned()?;
                cur.skip_ws();
                cur.expect(")")?;
                let exp = cur.exponent()?;
                cur.end_of_factor()?;
                if i == 0 || i >= j {
                    return Err(Error::BadGenerator { i, j });
                }
                if j > n {
                    return Err(Error::IndexOutOfRange {
                        index: j,
                        strands: n,
                    });
                }
                push_power(&mut letters, BandGenerator::new(i, j, Sign::Positive)?, exp);
            }
            InputMode::Artin => {
                cur.expect("a")?;
                let k = cur.unsigned()?;
                let exp = cur.exponent()?;
                cur.end_of_factor()?;
                if k == 0 || k >= n {
                    return Err(Error::IndexOutOfRange {
                        index: k,
                        strands: n,
                    });
                }
                push_power(&mut letters, BandGenerator::new(k, k + 1, Sign::Positive)?, exp);
            }
        }
        debug_assert!(cur.pos > start);
    }
    BandWord::new(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_identity() {
        let w = parse_band_word("", 3).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.strands(), 3);
        assert!(parse_band_word("   \n ", 3).unwrap().is_empty());
    }

    #[test]
    fn exponents_expand() {
        let w = parse_band_word("s(1,2) s(2,4)^2 s(1,2)^-1", 4).unwrap();
        assert_eq!(
            w,
            BandWord::from_triples(4, &[(1, 2, 1), (2, 4, 1), (2, 4, 1), (1, 2, -1)])
        );
        assert!(parse_band_word("s(1,2)^0", 2).unwrap().is_empty());
    }

    #[test]
    fn index_errors() {
        assert_eq!(
            parse_band_word("s(3,2)", 4),
            Err(Error::BadGenerator { i: 3, j: 2 })
        );
        assert_eq!(
            parse_band_word("s(1,5)", 4),
            Err(Error::IndexOutOfRange {
                index: 5,
                strands: 4
            })
        );
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_band_word("s(1,2) x(1,2)", 3) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_band_word("s(1,2)s(1,2)", 3),
            Err(Error::Syntax { position: 6, .. })
        ));
        assert!(matches!(parse_band_word("s(1,2)^", 3), Err(Error::Syntax { .. })));
    }

    #[test]
    fn delta_factor() {
        let w = parse_band_word("delta", 3).unwrap();
        assert_eq!(w, BandWord::from_triples(3, &[(2, 3, 1), (1, 2, 1)]));
        let w = parse_band_word("delta^-1", 3).unwrap();
        assert_eq!(w, BandWord::from_triples(3, &[(1, 2, -1), (2, 3, -1)]));
        assert_eq!(parse_band_word("delta^3", 4).unwrap().len(), 9);
    }

    #[test]
    fn artin_mode() {
        let w = parse_word("a1 a2^-2", 3, InputMode::Artin).unwrap();
        assert_eq!(w, BandWord::from_triples(3, &[(1, 2, 1), (2, 3, -1), (2, 3, -1)]));
        assert!(parse_word("a3", 3, InputMode::Artin).is_err());
        assert!(parse_word("s(1,2)", 3, InputMode::Artin).is_err());
    }

    #[test]
    fn display_round_trips() {
        let text = "s(1,2) s(2,4)^2 s(1,2)^-1 s(1,3) s(1,2) s(2,4)^-1 s(1,2)^-2 s(1,3)^-2";
        let w = parse_band_word(text, 4).unwrap();
        assert_eq!(w.to_string(), text);
        assert_eq!(parse_band_word(&w.to_string(), 4).unwrap(), w);
    }
}
