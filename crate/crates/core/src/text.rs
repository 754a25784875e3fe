//! Plain-text polynomial format.
//!
//! ```text
//! ring p=31991 vars=6
//! # comment
//! 3*x0^2*x1 - x2^3 + 5*x3*x4*x5
//! ```

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{Monomial, MAX_EXPONENT};
use crate::poly::{HomogPoly, Ring};

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = self.ring().field();
        for (k, &(m, c)) in self.terms().iter().enumerate() {
            let s = field.lift_signed(c);
            let (neg, mag) = (s < 0, s.unsigned_abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if mag != 1 || m == Monomial::ONE {
                write!(f, "{mag}")?;
                first = false;
            }
            for i in 0..self.ring().nvars() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_char('*')?;
                }
                first = false;
                write!(f, "x{i}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

fn parse_term(ring: Ring, s: &str) -> Result<(Monomial, u32)> {
    let field = ring.field();
    let mut coeff: u32 = 1;
    let mut exps = [0u32; 8];
    if s.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let i: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable in '{factor}'")))?;
            let e: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
            if i >= ring.nvars() {
                return Err(Error::Parse(format!("variable x{i} outside ring")));
            }
            exps[i] += e;
            if exps[i] > MAX_EXPONENT {
                return Err(Error::Parse(format!("exponent too large in '{factor}'")));
            }
        } else {
            let v = parse_integer(factor, field)?;
            coeff = field.mul(coeff, v);
        }
    }
    Ok((Monomial::from_exponents(&exps[..ring.nvars()]), coeff))
}

fn parse_integer(s: &str, field: PrimeField) -> Result<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad coefficient '{s}'")));
    }
    let p = field.modulus() as u64;
    Ok(s.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p) as u32)
}

/// Parses one polynomial such as `3*x0^2*x1 - x2^3`.
pub fn parse_poly(ring: Ring, s: &str) -> Result<HomogPoly> {
    let field = ring.field();
    let s = s.trim();
    if s == "0" {
        return Ok(HomogPoly::zero(ring));
    }
    let mut terms = Vec::new();
    let mut sign_neg = false;
    let mut current = String::new();
    let mut flush = |buf: &mut String, neg: bool| -> Result<()> {
        let (m, c) = parse_term(ring, buf.trim())?;
        terms.push((m, if neg { field.neg(c) } else { c }));
        buf.clear();
        Ok(())
    };
    let mut seen_any = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if current.trim().is_empty() {
                    if seen_any {
                        return Err(Error::Parse(format!("dangling sign in '{s}'")));
                    }
                } else {
                    flush(&mut current, sign_neg)?;
                }
                sign_neg = ch == '-';
                seen_any = true;
            }
            c if c.is_whitespace() => current.push(' '),
            c => {
                current.push(c);
                if !current.trim().is_empty() {
                    seen_any = false;
                }
            }
        }
    }
    if current.trim().is_empty() {
        return Err(Error::Parse(format!("dangling sign in '{s}'")));
    }
    flush(&mut current, sign_neg)?;
    HomogPoly::from_terms(ring, terms)
}

/// Parses a header line plus one polynomial per line.
pub fn parse_polys(src: &str) -> Result<(Ring, Vec<HomogPoly>)> {
    let mut ring = None;
    let mut polys = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match ring {
            None => ring = Some(parse_header(line).map_err(|e| at_line(e, lineno))?),
            Some(r) => polys.push(parse_poly(r, line).map_err(|e| at_line(e, lineno))?),
        }
    }
    let ring = ring.ok_or_else(|| Error::Parse("missing 'ring' header".into()))?;
    Ok((ring, polys))
}

fn at_line(e: Error, lineno: usize) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", lineno + 1)),
        other => Error::Parse(format!("line {}: {other}", lineno + 1)),
    }
}

fn parse_header(line: &str) -> Result<Ring> {
    let mut words = line.split_whitespace();
    if words.next() != Some("ring") {
        return Err(Error::Parse("expected 'ring p=<prime> vars=<n>'".into()));
    }
    let (mut p, mut n) = (None, None);
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field '{w}'")))?;
        let v: u32 = v.parse().map_err(|_| Error::Parse(format!("bad number in '{w}'")))?;
        match k {
            "p" => p = Some(v),
            "vars" => n = Some(v as usize),
            _ => return Err(Error::Parse(format!("unknown header field '{k}'"))),
        }
    }
    let p = p.ok_or_else(|| Error::Parse("header lacks p=".into()))?;
    let n = n.ok_or_else(|| Error::Parse("header lacks vars=".into()))?;
    if !(1..=crate::monomial::MAX_VARS).contains(&n) {
        return Err(Error::Parse(format!("vars={n} unsupported")));
    }
    Ok(Ring::new(n, PrimeField::new(p)?))
}

pub fn format_polys(ring: Ring, polys: &[HomogPoly]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring p={} vars={}", ring.field().modulus(), ring.nvars());
    for f in polys {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}
