//! Canonical text form of Laurent polynomials.
//!
//! Terms appear in graded-lex ascending order joined by `" + "` / `" - "`.
//! A term is `c*x1^a1*x2^a2…` with zero exponents and exponent 1 omitted,
//! a unit coefficient omitted, and a constant rendered as a bare integer.
//! The zero polynomial renders as `0`.

use alloc::format;
use alloc::string::ToString;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExponentVec, LaurentPoly};
use crate::{Error, Result};

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if exp.is_zero() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let mut first = true;
            for (var, &a) in exp.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !first {
                    f.write_char('*')?;
                }
                first = false;
                write!(f, "x{}", var + 1)?;
                if a != 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars(), self)
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }
}

impl LaurentPoly {
    /// Parses the canonical text form (whitespace-insensitive; repeated
    /// variables in a term multiply).
    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let mut cur = Cursor {
            src: text.as_bytes(),
            pos: 0,
        };
        let mut out = LaurentPoly::zero(nvars);
        let mut negative = match cur.peek() {
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            Some(b'+') => {
                cur.pos += 1;
                false
            }
            Some(_) => false,
            None => return Err(cur.err("empty polynomial")),
        };
        loop {
            let (exp, mut coeff) = parse_term(&mut cur, nvars)?;
            if negative {
                coeff = -coeff;
            }
            out.add_term(exp, coeff);
            match cur.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(cur.err("expected '+' or '-'")),
            }
            cur.pos += 1;
        }
        Ok(out)
    }
}

fn parse_term(cur: &mut Cursor<'_>, nvars: usize) -> Result<(ExponentVec, BigInt)> {
    let mut exp = alloc::vec![0i64; nvars];
    let mut coeff = BigInt::one();
    loop {
        match cur.peek() {
            Some(b'x') => {
                cur.pos += 1;
                let idx: usize = cur.digits()?.parse().map_err(|_| cur.err("bad variable index"))?;
                if idx == 0 || idx > nvars {
                    return Err(cur.err(&format!("variable x{idx} outside x1..x{nvars}")));
                }
                let mut power = 1i64;
                if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    let neg = if cur.peek() == Some(b'-') {
                        cur.pos += 1;
                        true
                    } else {
                        false
                    };
                    power = cur.digits()?.parse().map_err(|_| cur.err("exponent overflow"))?;
                    if neg {
                        power = -power;
                    }
                }
                exp[idx - 1] += power;
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = cur.digits()?.parse().map_err(|_| cur.err("bad integer"))?;
                coeff *= n;
            }
            _ => return Err(cur.err("expected coefficient or variable")),
        }
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            break;
        }
    }
    if coeff.is_zero() {
        // "0" is a valid whole polynomial; as a summand it contributes nothing.
        return Ok((ExponentVec::zero(nvars), coeff));
    }
    Ok((ExponentVec::new(exp), coeff))
}
