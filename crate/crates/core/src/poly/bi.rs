use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::uni::UniPoly;
use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};

/// Exponent pair `(s, t)`. The derived order compares the s-exponent first.
pub type Mono = (u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    S,
    T,
}

/// A polynomial in `s` and `t` with rational coefficients, read as
/// `Σ_i s^i f_i(t)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<Mono, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(Rational::one(), 0, 0)
    }

    pub fn s() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, s_exp: u32, t_exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((s_exp, t_exp), c);
        }
        BiPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, Rational)>>(terms: I) -> Self {
        let mut out = BiPoly::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    /// `s^i * p(t)`.
    pub fn from_uni_at(p: &UniPoly, s_exp: u32) -> Self {
        BiPoly {
            coeffs: p.terms().map(|(e, c)| ((s_exp, e), c.clone())).collect(),
        }
    }

    pub fn from_uni(p: &UniPoly) -> Self {
        BiPoly::from_uni_at(p, 0)
    }

    /// `Σ_i s^i coeffs[i]`.
    pub fn from_s_coeffs(coeffs: &[UniPoly]) -> Self {
        let mut out = BiPoly::zero();
        for (i, p) in coeffs.iter().enumerate() {
            for (e, c) in p.terms() {
                out.coeffs.insert((i as u32, e), c.clone());
            }
        }
        out
    }

    #[inline]
    pub(crate) fn add_term(&mut self, m: Mono, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, s_exp: u32, t_exp: u32) -> Rational {
        self.coeffs
            .get(&(s_exp, t_exp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms, ascending in (s-exponent, t-exponent).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Mono, &Rational)> + '_ {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    /// Highest power of `s`, `None` for zero.
    pub fn deg_s(&self) -> Option<u32> {
        self.coeffs.keys().next_back().map(|m| m.0)
    }

    /// Highest power of `t`, `None` for zero.
    pub fn deg_t(&self) -> Option<u32> {
        self.coeffs.keys().map(|m| m.1).max()
    }

    /// The coefficient `f_i(t)` of `s^i`.
    pub fn coeff_s(&self, i: u32) -> UniPoly {
        UniPoly::from_terms(
            self.coeffs
                .range((i, 0)..=(i, u32::MAX))
                .map(|(&(_, e), c)| (e, c.clone())),
        )
    }

    /// All `f_i(t)` for `i = 0..=deg_s`; empty for zero.
    pub fn s_coeffs(&self) -> Vec<UniPoly> {
        let Some(n) = self.deg_s() else {
            return Vec::new();
        };
        let mut buckets: Vec<Vec<(u32, Rational)>> = vec![Vec::new(); n as usize + 1];
        for (&(a, e), c) in &self.coeffs {
            buckets[a as usize].push((e, c.clone()));
        }
        buckets.into_iter().map(UniPoly::from_terms).collect()
    }

    pub fn is_univariate(&self) -> bool {
        self.coeffs.keys().all(|m| m.0 == 0)
    }

    pub fn fits(&self, s_bound: u32, t_bound: u32) -> bool {
        self.coeffs.keys().all(|&(a, c)| a <= s_bound && c <= t_bound)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self.coeffs.iter().map(|(&m, x)| (m, x * c)).collect(),
        }
    }

    /// Multiplies by `s^a t^b`.
    pub fn mul_monomial(&self, a: u32, b: u32) -> Self {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by a polynomial in `t` alone.
    pub fn mul_uni(&self, p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.coeffs {
            for (e, d) in p.terms() {
                out.add_term((a, b + e), &(c * d));
            }
        }
        out
    }

    /// `c·s·f + mul·f + der·∂_t f` in one pass.
    pub fn s_first_order(&self, c: &Rational, mul: &UniPoly, der: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (&(a, b), x) in &self.coeffs {
            if !c.is_zero() {
                out.add_term((a + 1, b), &(x * c));
            }
            for (e, d) in mul.terms() {
                out.add_term((a, b + e), &(x * d));
            }
            if b > 0 {
                let xb = x * Rational::from(b);
                for (e, d) in der.terms() {
                    out.add_term((a, b - 1 + e), &(&xb * d));
                }
            }
        }
        out
    }

    /// `f(s - m, t)`, expanded exactly.
    pub fn shift_s(&self, m: i64) -> Self {
        if m == 0 {
            return self.clone();
        }
        let neg_m = Rational::from_int(-m);
        let max_a = self.deg_s().unwrap_or(0);
        // row a holds C(a, i)·(−m)^(a−i)
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for a in 1..=max_a as usize {
            let prev = &rows[a - 1];
            let row = (0..=a)
                .map(|i| {
                    let from_power = if i < a { &prev[i] * &neg_m } else { Rational::zero() };
                    if i > 0 {
                        from_power + &prev[i - 1]
                    } else {
                        from_power
                    }
                })
                .collect();
            rows.push(row);
        }
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.coeffs {
            for (i, k) in rows[a as usize].iter().enumerate() {
                out.add_term((i as u32, b), &(c * k));
            }
        }
        out
    }

    /// Iterated partial derivative. Negative orders are rejected; callers
    /// that need the `∂^{-1} = 0` convention substitute the zero map.
    pub fn diff(&self, var: Var, order: i64) -> Result<Self> {
        if order < 0 {
            return Err(Error::NegativeOrder(order));
        }
        let k = order as u32;
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.coeffs {
            let e = match var {
                Var::S => a,
                Var::T => b,
            };
            if e < k {
                continue;
            }
            let falling: Rational = (0..k).map(|i| Rational::from(e - i)).product();
            let m = match var {
                Var::S => (a - k, b),
                Var::T => (a, b - k),
            };
            out.add_term(m, &(c * falling));
        }
        Ok(out)
    }

    /// `(1/j!) ∂_s^j f`; zero for `j < 0`.
    pub fn divided_diff_s(&self, j: i64) -> Self {
        if j < 0 {
            return BiPoly::zero();
        }
        if j == 0 {
            return self.clone();
        }
        let j = j as u32;
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.coeffs {
            if a >= j {
                out.add_term((a - j, b), &(c * binomial(a, j as i64)));
            }
        }
        out
    }

    pub fn diff_t(&self) -> Self {
        self.diff(Var::T, 1).expect("order 1")
    }

    /// Largest `n` with `(t - root)^n` dividing every `f_i(t)`.
    pub fn valuation(&self, root: &Rational) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let v = self
            .s_coeffs()
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.valuation_at(root).expect("nonzero"))
            .min()
            .expect("nonzero polynomial has a coefficient");
        Ok(v)
    }

    /// Substitutes `s = x`, leaving a polynomial in `t`.
    pub fn eval_s(&self, x: &Rational) -> UniPoly {
        UniPoly::from_terms(self.coeffs.iter().map(|(&(a, b), c)| (b, c * x.pow(a as i64))))
    }

    pub fn to_uni(&self) -> Option<UniPoly> {
        self.is_univariate().then(|| self.coeff_s(0))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.coeffs {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.coeffs {
            out.add_term(m, &-c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &rhs.coeffs {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<&UniPoly> for BiPoly {
    fn from(p: &UniPoly) -> Self {
        BiPoly::from_uni(p)
    }
}

impl From<UniPoly> for BiPoly {
    fn from(p: UniPoly) -> Self {
        BiPoly::from_uni(&p)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().rev().map(|(&(a, b), c)| (vec![a, b], c));
        super::text::write_terms(f, terms, &["s", "t"])
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl std::str::FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = super::text::parse_terms(s, &["s", "t"])?;
        Ok(BiPoly::from_terms(
            terms.into_iter().map(|(exps, c)| ((exps[0], exps[1]), c)),
        ))
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation_and_products() {
        assert_eq!(p("s + t") + p("s - t"), p("2*s"));
        assert_eq!(p("t - 1") * p("t + 1"), p("t^2 - 1"));
        assert!((BiPoly::zero() * p("s^3*t + 7")).is_zero());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("s^2").shift_s(1), p("s^2 - 2*s + 1"));
        assert_eq!(p("s*t").shift_s(2), p("s*t - 2*t"));
        let f = p("3*s^3*t - s + 4");
        assert_eq!(f.shift_s(0), f);
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("s^3").diff(Var::S, 2).unwrap(), p("6*s"));
        assert_eq!(p("t^2").diff(Var::T, 1).unwrap(), p("2*t"));
        assert!(p("s^2*t^3").diff(Var::S, 3).unwrap().is_zero());
        assert_eq!(p("s*t").diff(Var::S, 0).unwrap(), p("s*t"));
        assert_eq!(p("s").diff(Var::S, -1), Err(Error::NegativeOrder(-1)));
    }

    #[test]
    fn valuation_examples() {
        let one = Rational::one();
        assert_eq!(p("s*t^2 - 2*s*t + s + t^3 - 3*t^2 + 3*t - 1").valuation(&one).unwrap(), 2);
        assert_eq!(p("1").valuation(&Rational::from_int(5)).unwrap(), 0);
        assert_eq!(p("t^3").valuation(&Rational::zero()).unwrap(), 3);
        assert_eq!(BiPoly::zero().valuation(&one), Err(Error::ZeroValuation));
    }

    #[test]
    fn s_coefficients() {
        let f = p("s^2*t + 3*s - t^2");
        assert_eq!(f.coeff_s(2), "t".parse().unwrap());
        assert_eq!(f.coeff_s(1), "3".parse().unwrap());
        assert_eq!(f.coeff_s(0), "-t^2".parse().unwrap());
        assert_eq!(BiPoly::from_s_coeffs(&f.s_coeffs()), f);
    }

    #[test]
    fn printing() {
        assert_eq!(p("3/2*s^2*t - t^3 + 1").to_string(), "3/2*s^2*t - t^3 + 1");
        assert_eq!(p("s^2*t - 1/2").to_string(), "s^2*t - 1/2");
        assert_eq!(p("-s + 0").to_string(), "-s");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("t*s*s"), p("s^2*t"));
        assert_eq!(p("s^2*t - 1/2").coeff(0, 0), Rational::new(-1, 2).unwrap());
    }

    #[test]
    fn rejects_parenthesized_powers() {
        assert!("(t-1)^2".parse::<BiPoly>().is_err());
    }
}
