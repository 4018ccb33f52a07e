//! Tensor products `Φ(λ_1, α_1, h_1) ⊗ … ⊗ Φ(λ_n, α_n, h_n)` of irreducible
//! `Φ` modules (`b = −1`, `α_i ≠ 0`, `deg h_i = 1`) as Virasoro modules.
//!
//! An element is a polynomial in `s1, t1, …, sn, tn`; slot `k` owns the pair
//! `(sk, tk)`. Slots are numbered from 1.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::action::{act_l, op_s, ModuleParams};
use crate::error::{Error, Result};
use crate::linalg::{invert, Echelon};
use crate::poly::{text, BiPoly};
use crate::rational::Rational;
use crate::submod::Bounds;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorParams {
    slots: Vec<ModuleParams>,
}

impl TensorParams {
    pub fn new(slots: Vec<ModuleParams>) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::InvalidParams("a tensor product needs at least one slot".into()));
        }
        for (i, p) in slots.iter().enumerate() {
            if !p.is_phi() || !p.b_is(-1) || p.alpha().is_zero() || p.deg_h() != Some(1) {
                return Err(Error::InvalidParams(format!(
                    "slot {}: need Phi with b = -1, alpha != 0 and deg h = 1",
                    i + 1
                )));
            }
        }
        check_nodes(&slots)?;
        Ok(TensorParams { slots })
    }

    /// No validation; for fixtures that break the invariants on purpose.
    pub fn new_unchecked(slots: Vec<ModuleParams>) -> Self {
        TensorParams { slots }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[ModuleParams] {
        &self.slots
    }

    pub fn slot(&self, k: usize) -> Result<&ModuleParams> {
        if k == 0 || k > self.slots.len() {
            return Err(Error::SlotOutOfRange {
                index: k,
                slots: self.slots.len(),
            });
        }
        Ok(&self.slots[k - 1])
    }

    /// `η_k = (h_k(t) − h_k(α_k)) / (t − α_k)`, a constant when `deg h_k = 1`.
    pub fn eta(&self, k: usize) -> Result<Rational> {
        Ok(self.slot(k)?.g().coeff(0))
    }

    /// Variable names `s1, t1, s2, t2, …`.
    pub fn var_names(&self) -> Vec<String> {
        var_names(self.len())
    }
}

fn check_nodes(slots: &[ModuleParams]) -> Result<()> {
    for (i, a) in slots.iter().enumerate() {
        if slots[..i].iter().any(|b| b.lambda() == a.lambda()) {
            return Err(Error::RepeatedNode(a.lambda().to_string()));
        }
    }
    Ok(())
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).flat_map(|k| [format!("s{k}"), format!("t{k}")]).collect()
}

/// Exponent vector `(a_1, c_1, …, a_n, c_n)` of `s1^a1 t1^c1 ⋯ sn^an tn^cn`.
pub type Exponents = Vec<u32>;

/// An element of the tensor product. The number of slots is carried by the
/// exponent vectors; the zero element fits every arity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorElem {
    terms: BTreeMap<Exponents, Rational>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem::default()
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(n: usize) -> Self {
        TensorElem::monomial(Rational::one(), vec![0; 2 * n])
    }

    pub fn monomial(c: Rational, exps: Exponents) -> Self {
        let mut out = TensorElem::zero();
        out.add_term(exps, &c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rational)>>(terms: I) -> Self {
        let mut out = TensorElem::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// `f_1 ⊗ … ⊗ f_n`.
    pub fn pure(factors: &[BiPoly]) -> Self {
        let mut out = TensorElem::one(0);
        for f in factors {
            let mut next = TensorElem::zero();
            for (e, c) in &out.terms {
                for ((a, b), d) in f.terms() {
                    let mut key = e.clone();
                    key.extend([a, b]);
                    next.add_term(key, &(c * d));
                }
            }
            out = next;
        }
        out
    }

    fn add_term(&mut self, e: Exponents, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of slots, `None` for zero.
    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|e| e.len() / 2)
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        match self.terms.keys().find(|e| e.len() != 2 * n) {
            Some(e) => Err(Error::Arity {
                expected: 2 * n,
                got: e.len(),
            }),
            None => Ok(()),
        }
    }

    /// Largest exponent of `sk`.
    pub fn deg_s(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[2 * (k - 1)]).max()
    }

    /// Largest exponent of `tk`.
    pub fn deg_t(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[2 * k - 1]).max()
    }

    /// Every slot within `s ≤ s_bound`, `t ≤ t_bound`.
    pub fn fits(&self, s_bound: u32, t_bound: u32) -> bool {
        self.terms
            .keys()
            .all(|e| e.chunks(2).all(|p| p[0] <= s_bound && p[1] <= t_bound))
    }

    /// A nonzero multiple of `1 ⊗ … ⊗ 1`.
    pub fn is_unit_multiple(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TensorElem::zero();
        }
        TensorElem {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Applies a linear map of `ℚ[s, t]` in slot `k`, identity elsewhere.
    pub fn map_slot(&self, k: usize, f: impl Fn(&BiPoly) -> BiPoly) -> Self {
        let i = 2 * (k - 1);
        let mut groups: BTreeMap<Exponents, Vec<((u32, u32), Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let pair: Vec<u32> = rest.drain(i..i + 2).collect();
            groups.entry(rest).or_default().push(((pair[0], pair[1]), c.clone()));
        }
        let mut out = TensorElem::zero();
        for (rest, terms) in groups {
            let image = f(&BiPoly::from_terms(terms));
            for ((a, b), c) in image.terms() {
                let mut e = rest.clone();
                e.splice(i..i, [a, b]);
                out.add_term(e, c);
            }
        }
        out
    }

    pub fn parse(input: &str, n: usize) -> Result<Self> {
        let names = var_names(n);
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        let terms = text::parse_terms(input, &vars)?;
        Ok(TensorElem::from_terms(terms))
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, n: usize) -> fmt::Result {
        let names = var_names(n);
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        text::write_terms(f, self.terms.iter().rev().map(|(e, c)| (e.clone(), c)), &vars)
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, self.arity().unwrap_or(0))
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElem({self})")
    }
}

impl Add<&TensorElem> for &TensorElem {
    type Output = TensorElem;

    fn add(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub<&TensorElem> for &TensorElem {
    type Output = TensorElem;

    fn sub(self, rhs: &TensorElem) -> TensorElem {
        self + &(-rhs)
    }
}

impl Neg for &TensorElem {
    type Output = TensorElem;

    fn neg(self) -> TensorElem {
        self.scale(&Rational::from_int(-1))
    }
}

impl Add for TensorElem {
    type Output = TensorElem;

    fn add(self, rhs: TensorElem) -> TensorElem {
        &self + &rhs
    }
}

impl Sub for TensorElem {
    type Output = TensorElem;

    fn sub(self, rhs: TensorElem) -> TensorElem {
        &self - &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Exponents,
    coeff: Rational,
}

impl Serialize for TensorElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(e, c)| TermJson {
            exponents: e.clone(),
            coeff: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for TensorElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(deserializer)?;
        if let Some(first) = terms.first() {
            let len = first.exponents.len();
            if len % 2 != 0 || terms.iter().any(|t| t.exponents.len() != len) {
                return Err(serde::de::Error::custom("exponent vectors must share one even length"));
            }
        }
        Ok(TensorElem::from_terms(terms.into_iter().map(|t| (t.exponents, t.coeff))))
    }
}

/// `L_m u`: the sum over slots of `L_m` acting in that slot.
pub fn tensor_act_l(tp: &TensorParams, m: i64, u: &TensorElem) -> Result<TensorElem> {
    u.check_arity(tp.len())?;
    let mut out = TensorElem::zero();
    for (k, p) in tp.slots.iter().enumerate() {
        out = out + u.map_slot(k + 1, |f| act_l(p, m, f));
    }
    Ok(out)
}

/// `S^j` of slot `k` applied in slot `k`, identity elsewhere.
pub fn slot_apply(tp: &TensorParams, k: usize, j: u32, u: &TensorElem) -> Result<TensorElem> {
    let p = tp.slot(k)?;
    u.check_arity(tp.len())?;
    Ok(u.map_slot(k, |f| op_s(p, j, f)))
}

/// The components `u_{k,j}` (`1 ≤ k ≤ n`, `0 ≤ j ≤ jmax`) of
/// `L_m u = Σ_{k,j} λ_k^m (−m)^j u_{k,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    jmax: u32,
    parts: Vec<Vec<TensorElem>>,
}

impl Components {
    pub fn jmax(&self) -> u32 {
        self.jmax
    }

    pub fn slots(&self) -> usize {
        self.parts.len()
    }

    pub fn get(&self, k: usize, j: u32) -> Option<&TensorElem> {
        self.parts.get(k.checked_sub(1)?)?.get(j as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, &TensorElem)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().enumerate().map(move |(j, u)| (k + 1, j as u32, u)))
    }
}

#[derive(Serialize)]
struct ComponentJson<'a> {
    slot: usize,
    j: u32,
    value: &'a TensorElem,
}

impl Serialize for Components {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(slot, j, value)| ComponentJson { slot, j, value }))
    }
}

/// `(m, L_m u)` for `m = start, …, start + count − 1`.
pub fn sample_window(tp: &TensorParams, u: &TensorElem, start: i64, count: usize) -> Result<Vec<(i64, TensorElem)>> {
    (0..count as i64)
        .map(|i| Ok((start + i, tensor_act_l(tp, start + i, u)?)))
        .collect()
}

/// The default samples `m = 1, …, n(jmax + 1)`.
pub fn default_samples(tp: &TensorParams, u: &TensorElem, jmax: u32) -> Result<Vec<(i64, TensorElem)>> {
    sample_window(tp, u, 1, tp.len() * (jmax as usize + 1))
}

/// Solves the confluent Vandermonde system for the components. The first
/// `n(jmax + 1)` samples determine the solution; any further samples must
/// agree with it.
pub fn vandermonde_extract(tp: &TensorParams, samples: &[(i64, TensorElem)], jmax: u32) -> Result<Components> {
    check_nodes(&tp.slots)?;
    let n = tp.len();
    let width = jmax as usize + 1;
    let needed = n * width;
    if samples.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: samples.len(),
        });
    }
    for (_, v) in samples {
        v.check_arity(n)?;
    }
    // deg_{s_k} L_m u = deg_{s_k} u + 1, and S^j vanishes beyond deg + 2
    let required = samples
        .iter()
        .flat_map(|(_, v)| (1..=n).filter_map(move |k| v.deg_s(k)))
        .max()
        .map_or(0, |d| d + 1);
    if required > jmax {
        return Err(Error::JmaxTooSmall {
            needed: required,
            got: jmax,
        });
    }

    let row = |m: i64| -> Vec<Rational> {
        let powers: Vec<Rational> = (0..width).map(|j| Rational::from_int(-m).pow(j as i64)).collect();
        tp.slots
            .iter()
            .flat_map(|p| {
                let lm = p.lambda().pow(m);
                powers.iter().map(move |x| &lm * x)
            })
            .collect()
    };
    let matrix: Vec<Vec<Rational>> = samples[..needed].iter().map(|(m, _)| row(*m)).collect();
    let inverse = invert(&matrix)?;

    let mut keys: Vec<&Exponents> = samples[..needed].iter().flat_map(|(_, v)| v.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut parts = vec![vec![TensorElem::zero(); width]; n];
    for key in keys {
        let rhs: Vec<Rational> = samples[..needed].iter().map(|(_, v)| v.coeff(key)).collect();
        for (col, inv_row) in inverse.iter().enumerate() {
            let x: Rational = inv_row.iter().zip(&rhs).filter(|(_, b)| !b.is_zero()).map(|(a, b)| a * b).sum();
            parts[col / width][col % width].add_term(key.clone(), &x);
        }
    }
    let out = Components { jmax, parts };

    for (m, v) in &samples[needed..] {
        let coeffs = row(*m);
        let mut rebuilt = TensorElem::zero();
        for ((_, _, u), c) in out.iter().zip(&coeffs) {
            rebuilt = rebuilt + u.scale(c);
        }
        if &rebuilt != v {
            return Err(Error::BrokenInvariant(format!(
                "sample m = {m} disagrees with the extracted components"
            )));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeOutcome {
    Reached,
    NotReached,
    CapExhausted,
    BoxExceeded,
}

impl ProbeOutcome {
    pub fn reached(self) -> bool {
        self == ProbeOutcome::Reached
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorProbe {
    pub outcome: ProbeOutcome,
    /// Number of `slot_apply` evaluations.
    pub applications: usize,
    /// The last element produced.
    pub last: TensorElem,
}

/// Reduces `seed` to a multiple of `1 ⊗ … ⊗ 1`, slot by slot from the last:
/// `S^{d+2}` on the top `s`-degree `d` leaves `−α F` of the top coefficient,
/// then each strip `u ↦ η u + S²u / α = ∂_t u` lowers the `t`-degree by one.
/// `cap` bounds the number of strips per slot.
pub fn reach_one_tensor(tp: &TensorParams, seed: &TensorElem, bounds: Bounds, cap: u32) -> Result<TensorProbe> {
    let n = tp.len();
    seed.check_arity(n)?;
    if seed.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !seed.fits(bounds.s_bound, bounds.t_bound) {
        return Err(Error::OutOfBounds {
            poly: seed.to_string(),
            s_bound: bounds.s_bound,
            t_bound: bounds.t_bound,
        });
    }
    let mut u = seed.clone();
    let mut applications = 0;
    let done = |outcome, applications, last| Ok(TensorProbe { outcome, applications, last });
    for k in (1..=n).rev() {
        let p = &tp.slots[k - 1];
        let d = u.deg_s(k).expect("nonzero");
        u = slot_apply(tp, k, d + 2, &u)?;
        applications += 1;
        let Some(inv_alpha) = p.alpha().recip() else {
            return done(ProbeOutcome::NotReached, applications, u);
        };
        if u.is_zero() {
            return done(ProbeOutcome::NotReached, applications, u);
        }
        let eta = tp.eta(k)?;
        let mut strips = 0;
        while let Some(c) = u.deg_t(k).filter(|&c| c > 0) {
            if strips == cap {
                return done(ProbeOutcome::CapExhausted, applications, u);
            }
            let v = slot_apply(tp, k, 2, &u)?;
            applications += 1;
            strips += 1;
            u = u.scale(&eta) + v.scale(&inv_alpha);
            if !u.fits(bounds.s_bound, bounds.t_bound) {
                return done(ProbeOutcome::BoxExceeded, applications, u);
            }
            if u.is_zero() || u.deg_s(k) != Some(0) || u.deg_t(k).is_some_and(|e| e >= c) {
                return done(ProbeOutcome::NotReached, applications, u);
            }
        }
    }
    let outcome = if u.is_unit_multiple() {
        ProbeOutcome::Reached
    } else {
        ProbeOutcome::NotReached
    };
    done(outcome, applications, u)
}

/// Cross-check for [`reach_one_tensor`]: whether `1 ⊗ … ⊗ 1` lies in the
/// span of everything reachable from `seed` by `slot_apply` without leaving
/// the working box (`s ≤ s_bound + pad`, `t ≤ t_bound + pad` in every slot).
pub fn reach_one_tensor_blind(tp: &TensorParams, seed: &TensorElem, bounds: Bounds) -> Result<bool> {
    let n = tp.len();
    seed.check_arity(n)?;
    if seed.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (sw, tw) = (bounds.s_bound + bounds.pad, bounds.t_bound + bounds.pad);
    if !seed.fits(sw, tw) {
        return Err(Error::OutOfBounds {
            poly: seed.to_string(),
            s_bound: sw,
            t_bound: tw,
        });
    }
    let target = TensorElem::one(n).terms;
    let mut echelon: Echelon<Exponents> = Echelon::new();
    let mut queue = Vec::new();
    if let Some(row) = echelon.insert_row(seed.terms.clone()) {
        queue.push(row.clone());
    }
    while let Some(row) = queue.pop() {
        if echelon.contains(target.clone()) {
            return Ok(true);
        }
        let v = TensorElem { terms: row };
        for k in 1..=n {
            for j in 0..=v.deg_s(k).map_or(0, |d| d + 2) {
                let image = slot_apply(tp, k, j, &v)?;
                if image.is_zero() || !image.fits(sw, tw) {
                    continue;
                }
                if let Some(r) = echelon.insert_row(image.terms) {
                    queue.push(r.clone());
                }
            }
        }
    }
    Ok(echelon.contains(target))
}

/// `(η, αη, h(α))` of a slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub eta: Rational,
    pub alpha_eta: Rational,
    pub h_alpha: Rational,
}

fn check_slot(params: &ModuleParams) -> Result<()> {
    if !params.is_phi() || !params.b_is(-1) || params.alpha().is_zero() || params.deg_h() != Some(1) {
        return Err(Error::UnsupportedBranch(
            "invariant recovery needs Phi with b = -1, alpha != 0 and deg h = 1".into(),
        ));
    }
    Ok(())
}

/// The invariants read off the stored parameters.
pub fn stored_invariants(params: &ModuleParams) -> Result<Invariants> {
    check_slot(params)?;
    let eta = params.g().coeff(0);
    Ok(Invariants {
        alpha_eta: params.alpha() * &eta,
        eta,
        h_alpha: params.h_alpha().clone(),
    })
}

/// Recovers the invariants from the action alone, with the pairs
/// `(m, m') = (1, 2), (1, 3)`.
pub fn extract_invariants(params: &ModuleParams) -> Result<Invariants> {
    extract_invariants_with(params, (1, 2), (1, 3))
}

/// Uses `(λ^{−m} L_m − λ^{−m'} L_{m'}) 1 = (m − m')(h(α) − (m + m')αη + η t)`
/// for two pairs with different `m + m'`.
pub fn extract_invariants_with(params: &ModuleParams, first: (i64, i64), second: (i64, i64)) -> Result<Invariants> {
    check_slot(params)?;
    for (m, m2) in [first, second] {
        if m == m2 {
            return Err(Error::DegenerateSamples(format!("m = m' = {m}")));
        }
    }
    let (sum1, sum2) = (first.0 + first.1, second.0 + second.1);
    if sum1 == sum2 {
        return Err(Error::DegenerateSamples(format!("both pairs have m + m' = {sum1}")));
    }
    let one = BiPoly::one();
    let fit = |(m, m2): (i64, i64)| -> Result<(Rational, Rational)> {
        let lhs = act_l(params, m, &one).scale(&params.lambda().pow(-m))
            - act_l(params, m2, &one).scale(&params.lambda().pow(-m2));
        let affine = lhs.to_uni().filter(|u| u.degree().map_or(true, |d| d <= 1));
        let affine = affine.ok_or_else(|| Error::BrokenInvariant(format!("difference {lhs} is not affine in t")))?;
        let d = Rational::from_int(m - m2);
        Ok((&affine.coeff(1) / &d, &affine.coeff(0) / &d))
    };
    let (eta1, c1) = fit(first)?;
    let (eta2, c2) = fit(second)?;
    if eta1 != eta2 {
        return Err(Error::BrokenInvariant(format!("eta read as {eta1} and {eta2}")));
    }
    // c_i = h(α) − σ_i·αη
    let (s1, s2) = (Rational::from_int(sum1), Rational::from_int(sum2));
    let alpha_eta = &(&c1 - &c2) / &(&s2 - &s1);
    let h_alpha = &c1 + &(&s1 * &alpha_eta);
    Ok(Invariants {
        eta: eta1,
        alpha_eta,
        h_alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn slot(lambda: i64, alpha: i64, h: &str) -> ModuleParams {
        ModuleParams::phi(q(-1), q(lambda), q(alpha), h.parse::<UniPoly>().unwrap()).unwrap()
    }

    fn two() -> TensorParams {
        TensorParams::new(vec![slot(1, 1, "t"), slot(2, 1, "t + 1")]).unwrap()
    }

    fn el(s: &str, n: usize) -> TensorElem {
        TensorElem::parse(s, n).unwrap()
    }

    #[test]
    fn construction() {
        assert!(matches!(
            TensorParams::new(vec![slot(1, 1, "t"), slot(1, 2, "t")]),
            Err(Error::RepeatedNode(_))
        ));
        assert!(TensorParams::new(vec![slot(1, 1, "t^2")]).is_err());
        assert!(TensorParams::new(vec![slot(1, 0, "t")]).is_err());
        assert!(TensorParams::new(vec![]).is_err());
        assert_eq!(two().eta(2).unwrap(), q(1));
        assert!(matches!(two().slot(3), Err(Error::SlotOutOfRange { index: 3, slots: 2 })));
    }

    #[test]
    fn text_and_json() {
        let u = el("3/2*s1*t2^2 - t1 + 1", 2);
        assert_eq!(u.to_string(), "3/2*s1*t2^2 - t1 + 1");
        assert_eq!(u.coeff(&[1, 0, 0, 2]), Rational::new(3, 2).unwrap());
        let json = serde_json::to_string(&el("s1*t2 - 1/2", 2)).unwrap();
        assert_eq!(
            json,
            r#"[{"exponents":[0,0,0,0],"coeff":"-1/2"},{"exponents":[1,0,0,1],"coeff":"1"}]"#
        );
        let back: TensorElem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, el("s1*t2 - 1/2", 2));
        assert!(serde_json::from_str::<TensorElem>(r#"[{"exponents":[1],"coeff":"1"}]"#).is_err());
        assert_eq!(
            TensorElem::pure(&["s + t".parse().unwrap(), "t".parse().unwrap()]),
            el("s1*t2 + t1*t2", 2)
        );
    }

    #[test]
    fn action_examples() {
        let p = slot(3, 2, "t + 1");
        let tp = TensorParams::new(vec![p.clone()]).unwrap();
        let f: BiPoly = "s^2*t - t + 3".parse().unwrap();
        let u = TensorElem::pure(std::slice::from_ref(&f));
        for m in -2..=2 {
            assert_eq!(tensor_act_l(&tp, m, &u).unwrap(), TensorElem::pure(&[act_l(&p, m, &f)]));
        }

        let tp = TensorParams::new(vec![slot(1, 1, "t"), slot(2, 1, "t")]).unwrap();
        let one = TensorElem::one(2);
        // L_1 1 = λ(s + h_1) in each slot, h_1 = h for b = −1
        assert_eq!(tensor_act_l(&tp, 1, &one).unwrap(), el("s1 + t1 + 2*s2 + 2*t2", 2));
        let u = el("s1*t2 + t1^2", 2);
        assert_eq!(tensor_act_l(&tp, 0, &u).unwrap(), el("s1^2*t2 + s1*t1^2 + s1*s2*t2 + s2*t1^2", 2));
    }

    #[test]
    fn slot_examples() {
        let tp = two();
        let u = el("s1*t1 + s2^2*t2", 2);
        assert_eq!(slot_apply(&tp, 1, 0, &u).unwrap(), el("s1^2*t1 + s1*s2^2*t2", 2));
        // S¹t = −(tF + h(α))t with F = g − ∂_t; slot 2: g = 1, h(α) = 2
        let v = slot_apply(&tp, 2, 1, &el("t2", 2)).unwrap();
        assert_eq!(v, el("-t2^2 - t2", 2));
        let w = TensorElem::pure(&[BiPoly::one(), op_s(&tp.slots()[1], 1, &BiPoly::t())]);
        assert_eq!(v, w);
        assert!(slot_apply(&tp, 1, 4, &u).unwrap().is_zero());
        assert!(!slot_apply(&tp, 2, 4, &u).unwrap().is_zero());
        assert!(slot_apply(&tp, 2, 5, &u).unwrap().is_zero());
        assert!(matches!(slot_apply(&tp, 0, 1, &u), Err(Error::SlotOutOfRange { .. })));
        assert!(matches!(slot_apply(&tp, 1, 1, &el("s1", 1)), Err(Error::Arity { .. })));
    }

    #[test]
    fn extraction() {
        let tp = TensorParams::new(vec![slot(1, 1, "t"), slot(2, 1, "t + 1"), slot(-3, 2, "2*t")]).unwrap();
        let u = el("s1*t2 + 2*s3^2*t1 - t3 + 1", 3);
        let jmax = 4;
        let comps = vandermonde_extract(&tp, &default_samples(&tp, &u, jmax).unwrap(), jmax).unwrap();
        for (k, j, c) in comps.iter() {
            assert_eq!(c, &slot_apply(&tp, k, j, &u).unwrap(), "k={k} j={j}");
        }
        let samples = sample_window(&tp, &u, -4, 20).unwrap();
        assert_eq!(vandermonde_extract(&tp, &samples, jmax).unwrap(), comps);

        assert!(matches!(
            vandermonde_extract(&tp, &default_samples(&tp, &u, 3).unwrap(), 3),
            Err(Error::JmaxTooSmall { needed: 4, got: 3 })
        ));
        assert!(matches!(
            vandermonde_extract(&tp, &default_samples(&tp, &u, jmax).unwrap()[1..], jmax),
            Err(Error::InsufficientSamples { needed: 15, got: 14 })
        ));
        let zero = vandermonde_extract(&tp, &default_samples(&tp, &TensorElem::zero(), 1).unwrap(), 1).unwrap();
        assert!(zero.iter().all(|(_, _, c)| c.is_zero()));

        let broken = TensorParams::new_unchecked(vec![slot(2, 1, "t"), slot(2, 1, "t + 1")]);
        let samples = default_samples(&broken, &TensorElem::one(2), 2).unwrap();
        assert!(matches!(vandermonde_extract(&broken, &samples, 2), Err(Error::RepeatedNode(_))));

        // one slot, one sample
        let tp1 = TensorParams::new(vec![slot(5, 1, "t")]).unwrap();
        let comps = vandermonde_extract(&tp1, &[(1, TensorElem::zero())], 0).unwrap();
        assert!(comps.get(1, 0).unwrap().is_zero());
    }

    #[test]
    fn reach_one() {
        let tp = two();
        let bounds = Bounds::square(10, 0);
        let probe = reach_one_tensor(&tp, &el("s1*t1*t2^2", 2), bounds, 10).unwrap();
        assert_eq!(probe.outcome, ProbeOutcome::Reached);
        assert!(probe.last.is_unit_multiple());
        assert!(reach_one_tensor(&tp, &TensorElem::one(2), bounds, 10).unwrap().outcome.reached());
        let deep = el("s2*t1^4 + t1^5", 2);
        assert_eq!(
            reach_one_tensor(&tp, &deep, bounds, 3).unwrap().outcome,
            ProbeOutcome::CapExhausted
        );
        assert!(reach_one_tensor(&tp, &deep, bounds, 4).unwrap().outcome.reached());
        assert!(matches!(
            reach_one_tensor(&tp, &el("t1^11", 2), bounds, 10),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(reach_one_tensor_blind(&tp, &el("s1*t1 + t2", 2), Bounds::square(2, 1)).unwrap());

        let zero_alpha = TensorParams::new_unchecked(vec![slot(1, 0, "t")]);
        assert_eq!(
            reach_one_tensor(&zero_alpha, &el("t1", 1), bounds, 10).unwrap().outcome,
            ProbeOutcome::NotReached
        );
    }

    #[test]
    fn invariants() {
        let p = slot(2, 3, "t + 1");
        let inv = extract_invariants(&p).unwrap();
        assert_eq!((inv.eta.clone(), inv.alpha_eta.clone(), inv.h_alpha.clone()), (q(1), q(3), q(4)));
        assert_eq!(extract_invariants_with(&p, (2, 5), (-1, 3)).unwrap(), inv);
        assert_eq!(stored_invariants(&p).unwrap(), inv);
        let p = slot(1, 1, "t");
        let inv = extract_invariants(&p).unwrap();
        assert_eq!((inv.eta, inv.alpha_eta, inv.h_alpha), (q(1), q(1), q(1)));
        assert!(matches!(extract_invariants_with(&p, (2, 2), (1, 3)), Err(Error::DegenerateSamples(_))));
        assert!(matches!(extract_invariants_with(&p, (1, 4), (2, 3)), Err(Error::DegenerateSamples(_))));
        assert!(extract_invariants(&slot(1, 1, "t^2")).is_err());
    }
}
