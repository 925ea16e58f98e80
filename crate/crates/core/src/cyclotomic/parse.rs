//! Text literals for field elements.
//!
//! Grammar: sums and products of rationals (`3`, `-1/2`), roots of unity
//! `zN^k` (ζ_N^k, `k` may be negative, `^k` optional), the shorthands `w`
//! (ζ_3) and `i` (ζ_4), and parentheses. The conductor is the lcm of every
//! root appearing, or 1.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use super::field::Field;
use super::number::{CycNum, Rational};
use crate::error::{Error, Result};

#[derive(Debug)]
enum Node {
    Rat(Rational),
    Root { n: u32, k: i64 },
    Sum(Vec<(bool, Node)>),
    Prod(Vec<Node>),
    Pow(Box<Node>, i64),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        BigInt::from_str(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
            .map_err(|_| self.err("bad integer"))
    }

    fn signed_small(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v = self.digits()?;
        let v: i64 = v.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Node> {
        let mut terms = Vec::new();
        let mut neg = false;
        if let Some(c @ (b'-' | b'+')) = self.peek() {
            neg = c == b'-';
            self.pos += 1;
        }
        terms.push((neg, self.term()?));
        while let Some(c @ (b'-' | b'+')) = self.peek() {
            self.pos += 1;
            terms.push((c == b'-', self.term()?));
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Node::Sum(terms) })
    }

    fn term(&mut self) -> Result<Node> {
        let mut factors = vec![self.power()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.power()?);
                }
                Some(b'z' | b'w' | b'i' | b'(') => factors.push(self.power()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Node::Prod(factors) })
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.signed_small()?;
            return Ok(match base {
                Node::Root { n, k } => Node::Root { n, k: k * e },
                other => Node::Pow(Box::new(other), e),
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'z') => {
                self.pos += 1;
                let n = self.digits()?;
                let n: u32 = n.try_into().map_err(|_| self.err("conductor too large"))?;
                if n == 0 {
                    return Err(self.err("conductor must be positive"));
                }
                Ok(Node::Root { n, k: 1 })
            }
            Some(b'w') => {
                self.pos += 1;
                Ok(Node::Root { n: 3, k: 1 })
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Node::Root { n: 4, k: 1 })
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.digits()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let q = self.digits()?;
                    if q == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(Node::Rat(Rational::new(p, q)))
                } else {
                    Ok(Node::Rat(Rational::from_integer(p)))
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

fn conductor_of(node: &Node) -> u32 {
    match node {
        Node::Rat(_) => 1,
        Node::Root { n, .. } => *n,
        Node::Sum(ts) => ts.iter().fold(1, |a, (_, t)| a.lcm(&conductor_of(t))),
        Node::Prod(fs) => fs.iter().fold(1, |a, f| a.lcm(&conductor_of(f))),
        Node::Pow(b, _) => conductor_of(b),
    }
}

fn eval(node: &Node, field: &Field) -> Result<CycNum> {
    Ok(match node {
        Node::Rat(r) => CycNum::from_rational(field, r),
        Node::Root { n, k } => CycNum::zeta_power(field, k * i64::from(field.conductor() / n)),
        Node::Sum(ts) => {
            let mut acc = CycNum::zero(field);
            for (neg, t) in ts {
                let v = eval(t, field)?;
                acc = if *neg { acc - v } else { acc + v };
            }
            acc
        }
        Node::Prod(fs) => {
            let mut acc = CycNum::one(field);
            for f in fs {
                acc = acc * eval(f, field)?;
            }
            acc
        }
        Node::Pow(b, e) => eval(b, field)?.pow(*e)?,
    })
}

impl CycNum {
    /// Parses a literal in the smallest conductor containing it.
    pub fn parse(s: &str) -> Result<CycNum> {
        CycNum::parse_with_conductor(s, 1)
    }

    /// Parses a literal in Q(ζ_M) with M the lcm of `min_conductor` and the
    /// literal's own conductor.
    pub fn parse_with_conductor(s: &str, min_conductor: u32) -> Result<CycNum> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let node = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        let n = conductor_of(&node).lcm(&min_conductor.max(1));
        eval(&node, &Field::new(n))
    }
}

impl FromStr for CycNum {
    type Err = Error;
    fn from_str(s: &str) -> Result<CycNum> {
        CycNum::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let x = CycNum::parse("-3/6").unwrap();
        assert_eq!(x.conductor(), 1);
        assert_eq!(x.to_rational().unwrap(), Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn roots_and_shorthands() {
        let w = CycNum::parse("w").unwrap();
        assert_eq!(w, CycNum::root_of_unity(3, 1));
        let s = CycNum::parse("1 + w + w^2").unwrap();
        assert!(s.is_zero());
        let x = CycNum::parse("i*w").unwrap();
        assert_eq!(x.conductor(), 12);
        assert_eq!(x, CycNum::root_of_unity(12, 7));
        assert_eq!(CycNum::parse("z5^-1").unwrap(), CycNum::root_of_unity(5, 4));
    }

    #[test]
    fn display_round_trip() {
        for s in ["1/2 - 3*z12^1", "2*w", "(1+i)^3", "-z15^7 + 4/9"] {
            let x = CycNum::parse(s).unwrap();
            let y = CycNum::parse_with_conductor(&x.to_string(), x.conductor()).unwrap();
            assert_eq!(x, y, "{s}");
        }
    }

    #[test]
    fn errors() {
        assert!(CycNum::parse("1/0").is_err());
        assert!(CycNum::parse("z0").is_err());
        assert!(CycNum::parse("2 +").is_err());
        assert!(CycNum::parse("x").is_err());
    }

    #[test]
    fn minimum_conductor() {
        let x = CycNum::parse_with_conductor("2", 3).unwrap();
        assert_eq!(x.conductor(), 3);
    }
}
