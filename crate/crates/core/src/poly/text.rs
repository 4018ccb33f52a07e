//! Polynomial text: signed sums of products of rational literals and
//! variable powers, e.g. `3/2*s^2*t - t^3 + 1`. Whitespace is ignored and
//! `^1` is optional. Parentheses are not part of the grammar.

use std::fmt;

use crate::error::ParseError;
use crate::rational::Rational;

/// Parses into (exponent vector, coefficient) pairs, one entry per term as
/// written (like terms are not yet combined).
pub(crate) fn parse_terms(
    input: &str,
    vars: &[&str],
) -> Result<Vec<(Vec<u32>, Rational)>, ParseError> {
    Parser { input, pos: 0, vars }.expr()
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expr(&mut self) -> Result<Vec<(Vec<u32>, Rational)>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            None => return self.err("empty polynomial"),
            _ => false,
        };
        loop {
            let (exps, c) = self.term()?;
            terms.push((exps, if negative { -c } else { c }));
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(ch) => return self.err(format!("unexpected `{ch}`")),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Vec<u32>, Rational), ParseError> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = Rational::one();
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => coeff = coeff * self.literal()?,
                Some(_) => {
                    let (var, power) = self.power()?;
                    exps[var] += power;
                }
                None => return self.err("expected a factor"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((exps, coeff));
            }
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.input[start..self.pos]
    }

    fn literal(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        self.digits();
        if self.rest().starts_with('/') {
            self.pos += 1;
            if self.digits().is_empty() {
                return self.err("expected a denominator");
            }
        }
        let text = &self.input[start..self.pos];
        text.parse::<Rational>().map_err(|_| ParseError {
            position: start,
            message: format!("invalid rational literal `{text}`"),
        })
    }

    fn power(&mut self) -> Result<(usize, u32), ParseError> {
        let rest = self.rest();
        // Longest match so `s10` wins over `s1`.
        let Some((idx, name)) = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, name)| rest.starts_with(**name))
            .max_by_key(|(_, name)| name.len())
        else {
            let ch = rest.chars().next().unwrap_or(' ');
            return self.err(format!("unexpected `{ch}`"));
        };
        self.pos += name.len();
        if self.peek() != Some('^') {
            return Ok((idx, 1));
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return self.err("expected an exponent");
        }
        digits.parse::<u32>().map(|e| (idx, e)).map_err(|_| ParseError {
            position: at,
            message: "exponent out of range".into(),
        })
    }
}

/// Writes terms in the given order; the zero polynomial prints as `0`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, vars: &[&str]) -> fmt::Result
where
    I: Iterator<Item = (Vec<u32>, &'a Rational)>,
{
    let mut first = true;
    for (exps, c) in terms {
        let mono: Vec<String> = exps
            .iter()
            .zip(vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        let abs = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono.join("*"))?;
        } else {
            write!(f, "{abs}*{}", mono.join("*"))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
