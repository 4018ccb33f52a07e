use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A polynomial in `t` with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero entries, so
/// structural equality is polynomial equality. The zero polynomial has no
/// degree (`degree()` returns `None`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Rational::one())
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        UniPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::monomial(c, 0)
    }

    pub fn monomial(c: Rational, e: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        UniPoly { coeffs }
    }

    /// `t - root`.
    pub fn linear(root: &Rational) -> Self {
        UniPoly::t() - UniPoly::constant(root.clone())
    }

    /// Builds from integer coefficients in ascending order of degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as u32, Rational::from_int(c))),
        )
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = coeffs.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, e: u32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        // Horner over the dense range.
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for e in (0..=deg).rev() {
            acc = acc * x;
            if let Some(c) = self.coeffs.get(&e) {
                acc += c;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        UniPoly::from_terms(
            self.coeffs
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c * Rational::from(e))),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff().recip() {
            Some(inv) => self.scale(&inv),
            None => UniPoly::zero(),
        }
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let inv_lc = divisor.leading_coeff().recip().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff() * &inv_lc;
            let shift = rd - dd;
            rem = &rem - &divisor.shift_up(shift).scale(&c);
            quot.insert(shift, c);
        }
        Ok((UniPoly { coeffs: quot }, rem))
    }

    /// Whether `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        Ok(gcd_or_zero(self, other))
    }

    /// Same polynomial up to a nonzero scalar.
    pub fn is_associate(&self, other: &UniPoly) -> bool {
        self.monic() == other.monic()
    }

    /// The quotient `(h(t) - h(α)) / (t - α)`, exact by construction.
    pub fn quotient_by_linear(&self, alpha: &Rational) -> UniPoly {
        // Synthetic division; the remainder is h(α) and is dropped.
        let Some(deg) = self.degree() else {
            return UniPoly::zero();
        };
        let mut out = Vec::with_capacity(deg as usize);
        let mut carry = Rational::zero();
        for e in (1..=deg).rev() {
            carry = carry * alpha + self.coeff(e);
            out.push((e - 1, carry.clone()));
        }
        UniPoly::from_terms(out)
    }

    /// Largest `n` with `(t - root)^n | self`.
    pub fn valuation_at(&self, root: &Rational) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let mut n = 0;
        let mut cur = self.clone();
        while cur.eval(root).is_zero() {
            cur = cur.quotient_by_linear(root);
            n += 1;
        }
        Ok(n)
    }

    /// Distinct rational roots, via the rational root theorem on the
    /// integer-scaled polynomial. `None` if the coefficients are too large to
    /// enumerate divisors of.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        let deg = self.degree()?;
        if deg == 0 {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        // Strip t^v first so the constant term is nonzero.
        let v = self.valuation_at(&Rational::zero()).ok()?;
        let mut rest = self.clone();
        if v > 0 {
            roots.push(Rational::zero());
            for _ in 0..v {
                rest = rest.quotient_by_linear(&Rational::zero());
            }
        }
        if rest.degree() == Some(0) {
            return Some(roots);
        }
        let ints = integer_coefficients(&rest)?;
        let a0 = ints.first().copied()?.unsigned_abs();
        let an = ints.last().copied()?.unsigned_abs();
        if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
            return None;
        }
        let (p_divs, q_divs) = (divisors(a0), divisors(an));
        for &p in &p_divs {
            for &q in &q_divs {
                for sign in [1i64, -1] {
                    let cand = Rational::new(sign * p as i64, q as i64)?;
                    if !roots.contains(&cand) && rest.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

/// Monic gcd where a zero argument acts as the zero ideal; zero only if both
/// are zero.
pub fn gcd_or_zero(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.divrem(&y).expect("nonzero divisor");
        x = y;
        y = r.monic();
    }
    x.monic()
}

/// Monic gcd of many polynomials, zero ideal for an empty or all-zero list.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a UniPoly>>(polys: I) -> UniPoly {
    polys
        .into_iter()
        .fold(UniPoly::zero(), |acc, p| gcd_or_zero(&acc, p))
}

fn integer_coefficients(p: &UniPoly) -> Option<Vec<i128>> {
    let deg = p.degree()?;
    let mut lcm: i128 = 1;
    for (_, c) in p.terms() {
        let (_, d) = c.to_i128_parts()?;
        let d = i128::try_from(d).ok()?;
        lcm = lcm.checked_mul(d / gcd_i128(lcm, d))?;
    }
    let mut out = vec![0i128; deg as usize + 1];
    for (e, c) in p.terms() {
        let (n, d) = c.to_i128_parts()?;
        out[e as usize] = n.checked_mul(lcm / i128::try_from(d).ok()?)?;
    }
    Some(out)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn divisors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        UniPoly { coeffs }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &rhs.coeffs {
            let entry = coeffs.entry(e).or_insert_with(Rational::zero);
            *entry -= c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        UniPoly { coeffs }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                *coeffs.entry(e1 + e2).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        UniPoly { coeffs }
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().rev().map(|(&e, c)| (vec![e], c));
        super::text::write_terms(f, terms, &["t"])
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl std::str::FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = super::text::parse_terms(s, &["t"])?;
        Ok(UniPoly::from_terms(
            terms.into_iter().map(|(exps, c)| (exps[0], c)),
        ))
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
