//! Submodules over the Virasoro algebra alone (`S^j` only, no `T^j`):
//! generator decompositions, the minimal-pair basis of `Ψ_f` for
//! `b = −1, α ≠ 0`, membership, irreducibility and the degree-profile probe.
//!
//! Two shapes of `S^j` occur. With `b = −1, α ≠ 0` it carries the extra
//! term `−α F ∂_s^{j−2}/(j−2)!`, `F = g − ∂_t` (the *F-branch*). Everywhere
//! else `S^j = (s/j!)∂_s^j − ∂_s^{j−1}/(j−1)! ∘ H` for a first-order
//! operator `H` in `t` (the *H-branch*).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::action::{op_s, s_range, Kind, ModuleParams};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{BiPoly, FirstOrder, UniPoly};
use crate::rational::Rational;
use crate::submod::{closure_reaches, closure_truncated, span_truncated, Bounds, OperatorSet};

/// The first-order operator `H(t)` of the H-branch.
pub type HOperator = FirstOrder;

/// A pair `(n, i)` with `i ≤ n`; its weight is `n(k−1) + i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MinimalPair {
    pub n: u32,
    pub i: u32,
}

impl MinimalPair {
    pub fn weight(&self, k: u32) -> u32 {
        self.n * (k - 1) + self.i
    }
}

/// The pair of weight `w` with `i ≤ n` and `n` least: `n = ⌈w/k⌉`,
/// `i = w − n(k−1)`. For `k ≥ 3` some small weights (e.g. `w = 1`) have no
/// pair with `i ≤ n` at all; those give `None`.
pub fn minimal_pair(k: u32, w: u32) -> Result<Option<MinimalPair>> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("minimal pairs need k >= 2, got {k}")));
    }
    let n = w.div_ceil(k);
    Ok((n * (k - 1) <= w).then(|| MinimalPair { n, i: w - n * (k - 1) }))
}

/// Brute-force counterpart of [`minimal_pair`]: scans the cone `i ≤ n`.
pub fn minimal_pair_by_search(k: u32, w: u32) -> Option<MinimalPair> {
    if k < 2 {
        return None;
    }
    (0..=w)
        .flat_map(|n| (0..=n).map(move |i| MinimalPair { n, i }))
        .find(|p| p.weight(k) == w)
}

fn is_f_branch(params: &ModuleParams) -> bool {
    params.kind() == Kind::Phi && params.b_is(-1) && !params.alpha().is_zero()
}

fn deg_h(params: &ModuleParams) -> u32 {
    params.deg_h().unwrap_or(0)
}

/// `H(t)`; only meaningful outside the F-branch.
pub fn h_operator(params: &ModuleParams) -> HOperator {
    params.h_operator()
}

/// One summand of a decomposition of `Ψ_f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "part", rename_all = "lowercase")]
pub enum PsiPart {
    /// `ℚ[s]·p`.
    Free { p: BiPoly },
    /// `Ψ_{p(t)}` for a univariate `p`.
    Cyclic { p: UniPoly },
}

/// `Ψ_f` as a sum of [`PsiPart`]s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiGens {
    pub parts: Vec<PsiPart>,
}

impl PsiGens {
    fn new() -> Self {
        PsiGens { parts: Vec::new() }
    }

    fn free(&mut self, p: BiPoly) {
        let part = PsiPart::Free { p };
        if !matches!(&part, PsiPart::Free { p } if p.is_zero()) && !self.parts.contains(&part) {
            self.parts.push(part);
        }
    }

    fn cyclic(&mut self, p: UniPoly) {
        let part = PsiPart::Cyclic { p };
        if !matches!(&part, PsiPart::Cyclic { p } if p.is_zero()) && !self.parts.contains(&part) {
            self.parts.push(part);
        }
    }

    /// Elements `s^l·w` spanning the decomposition inside the working box of
    /// `bounds`, with `w` running over each part's generating family.
    pub fn family(&self, params: &ModuleParams, bounds: Bounds) -> Vec<BiPoly> {
        let s_max = bounds.s_bound + bounds.pad;
        let t_max = bounds.t_bound + bounds.pad;
        let mut out = Vec::new();
        for part in &self.parts {
            let ws: Vec<BiPoly> = match part {
                PsiPart::Free { p } => vec![p.clone()],
                PsiPart::Cyclic { p } => cyclic_family(params, p, t_max)
                    .iter()
                    .map(BiPoly::from_uni)
                    .collect(),
            };
            for w in ws {
                let top = w.deg_s().unwrap_or(0);
                for l in 0..=s_max.saturating_sub(top) {
                    out.push(w.mul_monomial(l, 0));
                }
            }
        }
        out
    }
}

/// Decomposes `Ψ_f` into free `ℚ[s]`-parts and cyclic submodules of
/// univariate polynomials.
///
/// In the F-branch only `f = s^n p(t)` is supported.
pub fn psi_gens(params: &ModuleParams, f: &BiPoly) -> Result<PsiGens> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = f.s_coeffs();
    let n = coeffs.len() - 1;
    let mut gens = PsiGens::new();
    if n == 0 {
        gens.cyclic(coeffs[0].clone());
        return Ok(gens);
    }
    let monomial = coeffs[..n].iter().all(UniPoly::is_zero);
    if is_f_branch(params) {
        if !monomial {
            return Err(Error::UnsupportedBranch(
                "with b = -1 and alpha != 0 only generators s^n*p(t) decompose".into(),
            ));
        }
        let p = &coeffs[n];
        let fp = params.f_operator().apply(p);
        let tf = params.f_operator().times_t().plus_constant(params.h_alpha());
        gens.free(BiPoly::from_uni_at(p, 1));
        gens.cyclic(fp);
        gens.cyclic(tf.apply(p));
        return Ok(gens);
    }
    let h = h_operator(params);
    if monomial {
        gens.free(BiPoly::from_uni_at(&coeffs[n], 1));
        gens.cyclic(h.apply(&coeffs[n]));
        return Ok(gens);
    }
    let one_plus_h = h.plus_constant(&Rational::one());
    let zero = UniPoly::zero();
    for i in 1..=n + 1 {
        let fi = coeffs.get(i).unwrap_or(&zero);
        let q1 = one_plus_h.apply(fi);
        let q0 = -h.apply(&coeffs[i - 1]);
        linear_gens(&h, &one_plus_h, &q1, &q0, &mut gens);
    }
    gens.cyclic(one_plus_h.apply(&coeffs[0]));
    Ok(gens)
}

/// `Ψ_{s q1 + q0} = ℚ[s](s q1 + q0) + Ψ_{H q1} + Ψ_{(1+H) q0}`.
fn linear_gens(h: &HOperator, one_plus_h: &HOperator, q1: &UniPoly, q0: &UniPoly, gens: &mut PsiGens) {
    if q1.is_zero() {
        gens.cyclic(q0.clone());
        return;
    }
    gens.free(BiPoly::from_uni_at(q1, 1) + BiPoly::from_uni(q0));
    gens.cyclic(h.apply(q1));
    gens.cyclic(one_plus_h.apply(q0));
}

/// Pad used by [`cyclic_family`] above the requested degree.
pub const FAMILY_PAD: u32 = 8;

/// A basis of `Ψ_p ∩ ℚ[t]` in degrees `≤ t_max`, for univariate `p`.
///
/// `Ψ_p ∩ ℚ[t]` is the least space containing `p` and stable under `F` and
/// `tF` (F-branch) or under `H` (H-branch). It is computed as a closure
/// inside degrees `≤ t_max + pad`, applying the operators to fully reduced
/// rows so that cancellations of leading terms are found.
pub fn cyclic_span(params: &ModuleParams, p: &UniPoly, t_max: u32, pad: u32) -> Vec<UniPoly> {
    let ops: Vec<FirstOrder> = if is_f_branch(params) {
        let f = params.f_operator();
        vec![f.times_t(), f]
    } else {
        vec![h_operator(params)]
    };
    let limit = t_max + pad;
    let mut span: Echelon<u32> = Echelon::new();
    let mut queue = Vec::new();
    if p.degree().is_some_and(|d| d <= limit) {
        span.insert(uni_vec(p));
        queue.push(p.clone());
    }
    while let Some(v) = queue.pop() {
        for op in &ops {
            let w = op.apply(&v);
            if w.degree().is_none_or(|d| d > limit) {
                continue;
            }
            if let Some(row) = span.insert_row(uni_vec(&w)) {
                queue.push(UniPoly::from_terms(row.iter().map(|(e, c)| (*e, c.clone()))));
            }
        }
    }
    span.rows_up_to(&t_max)
        .map(|row| UniPoly::from_terms(row.iter().map(|(e, c)| (*e, c.clone()))))
        .collect()
}

/// [`cyclic_span`] with the default pad.
pub fn cyclic_family(params: &ModuleParams, p: &UniPoly, t_max: u32) -> Vec<UniPoly> {
    cyclic_span(params, p, t_max, FAMILY_PAD)
}

fn uni_vec(p: &UniPoly) -> SparseVec<u32> {
    p.terms().map(|(e, c)| (e, c.clone())).collect()
}

/// Whether `p ∈ Ψ_{f(t)}`, decided by linear algebra over the generating
/// family of `Ψ_f` cut at t-degree `bound`.
pub fn psi_member(params: &ModuleParams, f: &UniPoly, p: &BiPoly, bound: u32) -> Result<bool> {
    let degree = p.deg_t().unwrap_or(0);
    if bound < degree {
        return Err(Error::BoundTooSmall { bound, degree });
    }
    if f.is_zero() {
        return Ok(p.is_zero());
    }
    if is_f_branch(params) && deg_h(params) == 1 {
        return Ok(true);
    }
    let mut span: Echelon<u32> = Echelon::new();
    for w in cyclic_family(params, f, bound) {
        span.insert(uni_vec(&w));
    }
    Ok(p.s_coeffs().iter().all(|c| span.contains(uni_vec(c))))
}

/// One element `s^l t^i F^n f` of the basis of `Ψ_f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(u32, u32, u32, BiPoly)", into = "(u32, u32, u32, BiPoly)")]
pub struct PsiElement {
    pub l: u32,
    pub pair: MinimalPair,
    pub poly: BiPoly,
}

impl From<(u32, u32, u32, BiPoly)> for PsiElement {
    fn from((l, n, i, poly): (u32, u32, u32, BiPoly)) -> Self {
        PsiElement {
            l,
            pair: MinimalPair { n, i },
            poly,
        }
    }
}

impl From<PsiElement> for (u32, u32, u32, BiPoly) {
    fn from(e: PsiElement) -> Self {
        (e.l, e.pair.n, e.pair.i, e.poly)
    }
}

/// Basis of `Ψ_f` inside a box, in weight order within each power of `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiBasis {
    pub f: UniPoly,
    pub k: u32,
    pub elements: Vec<PsiElement>,
}

impl PsiBasis {
    /// The elements with `l = 0`.
    pub fn t_part(&self) -> impl Iterator<Item = &PsiElement> {
        self.elements.iter().filter(|e| e.l == 0)
    }
}

fn check_basis_branch(params: &ModuleParams) -> Result<u32> {
    if !is_f_branch(params) {
        return Err(Error::UnsupportedBranch(
            "the minimal-pair basis needs Phi with b = -1 and alpha != 0".into(),
        ));
    }
    let k = deg_h(params);
    if k < 2 {
        return Err(Error::UnsupportedBranch(format!(
            "the minimal-pair basis needs deg h >= 2, got {k}"
        )));
    }
    Ok(k)
}

/// The elements `s^l t^i F^n f`, `l ≤ s_bound`, over the minimal pairs of
/// every weight `w` with `w + deg f ≤ t_bound`.
fn basis_elements(params: &ModuleParams, k: u32, f: &UniPoly, t_bound: u32, s_bound: u32) -> Vec<PsiElement> {
    let d = f.degree().unwrap_or(0);
    let op = params.f_operator();
    let mut powers = vec![f.clone()];
    let mut t_part = Vec::new();
    for w in 0..=t_bound.saturating_sub(d) {
        let Some(pair) = minimal_pair(k, w).expect("k >= 2") else {
            continue;
        };
        while powers.len() <= pair.n as usize {
            let next = op.apply(powers.last().expect("nonempty"));
            powers.push(next);
        }
        t_part.push((pair, powers[pair.n as usize].shift_up(pair.i)));
    }
    (0..=s_bound)
        .flat_map(|l| {
            t_part.iter().map(move |(pair, p)| PsiElement {
                l,
                pair: *pair,
                poly: BiPoly::from_uni_at(p, l),
            })
        })
        .collect()
}

/// The basis `{s^l t^i F^n f : (n, i) minimal}` of `Ψ_f` for `b = −1`,
/// `α ≠ 0`, `deg h ≥ 2`, cut at `l ≤ s_bound` and t-degree `≤ t_bound`.
///
/// Constant `f` is rejected: then `Ψ_f` is the whole module and the family
/// is not a basis of it (see [`maximal_psi_check`]).
pub fn psi_basis(params: &ModuleParams, f: &UniPoly, t_bound: u32, s_bound: u32) -> Result<PsiBasis> {
    let k = check_basis_branch(params)?;
    match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => {
            return Err(Error::InvalidParams(
                "constant generator: Psi_f is the whole module, so the minimal-pair family is \
                 not a basis; use maximal_psi_check to reproduce"
                    .into(),
            ))
        }
        Some(d) if d > t_bound => return Err(Error::BoundTooSmall { bound: t_bound, degree: d }),
        Some(_) => {}
    }
    Ok(PsiBasis {
        f: f.clone(),
        k,
        elements: basis_elements(params, k, f, t_bound, s_bound),
    })
}

/// How the minimal-pair family compares with `Ψ_f ∩ ℚ[t]` in degrees
/// `≤ t_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCheck {
    /// The t-part has pairwise distinct degrees (hence is independent).
    pub triangular: bool,
    pub family_dim: usize,
    pub member_dim: usize,
    /// A member of `Ψ_f ∩ ℚ[t]` outside the span of the family, if any.
    pub missing: Option<UniPoly>,
}

impl BasisCheck {
    pub fn spans(&self) -> bool {
        self.missing.is_none()
    }
}

/// Compares the t-part of [`psi_basis`] with the members of `Ψ_f ∩ ℚ[t]`
/// found by [`cyclic_family`].
pub fn psi_basis_check(params: &ModuleParams, f: &UniPoly, t_bound: u32) -> Result<BasisCheck> {
    let basis = psi_basis(params, f, t_bound, 0)?;
    let degrees: BTreeSet<u32> = basis.t_part().filter_map(|e| e.poly.deg_t()).collect();
    let mut span: Echelon<u32> = Echelon::new();
    for e in basis.t_part() {
        span.insert(uni_vec(&e.poly.coeff_s(0)));
    }
    let members = cyclic_family(params, f, t_bound);
    Ok(BasisCheck {
        triangular: degrees.len() == basis.t_part().count(),
        family_dim: span.rank(),
        member_dim: members.len(),
        missing: members.into_iter().find(|m| !span.contains(uni_vec(m))),
    })
}

/// A basis element whose image under `S^j` leaves the candidate maximal
/// submodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiWitness {
    pub j: u32,
    pub element: BiPoly,
    pub image: BiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiVerdict {
    pub stable: bool,
    pub checked: usize,
    pub witness: Option<PsiWitness>,
}

/// Checks inside the box `s ≤ s_bound, t ≤ t_bound` that the span of the
/// basis without `f` is stable under every `S^j` whose image stays in the
/// box. Constant `f` is accepted here.
pub fn maximal_psi_check(params: &ModuleParams, f: &UniPoly, t_bound: u32, s_bound: u32) -> Result<PsiVerdict> {
    let k = check_basis_branch(params)?;
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if d > t_bound {
        return Err(Error::BoundTooSmall { bound: t_bound, degree: d });
    }
    let rest: Vec<PsiElement> = basis_elements(params, k, f, t_bound, s_bound)
        .into_iter()
        .filter(|e| e.l != 0 || e.pair != MinimalPair { n: 0, i: 0 })
        .collect();
    // the elements are triangular in (l, t-degree), so their span meets the
    // box exactly in the span of the elements inside it
    let key = |p: &BiPoly| -> SparseVec<(u32, u32)> { p.terms().map(|(m, c)| (m, c.clone())).collect() };
    let mut span = Echelon::new();
    for e in &rest {
        span.insert(key(&e.poly));
    }
    let mut checked = 0;
    for e in &rest {
        for j in 0..=s_range(&e.poly) {
            let image = op_s(params, j, &e.poly);
            if !image.fits(s_bound, t_bound) {
                continue;
            }
            checked += 1;
            if !span.contains(key(&image)) {
                return Ok(PsiVerdict {
                    stable: false,
                    checked,
                    witness: Some(PsiWitness {
                        j,
                        element: e.poly.clone(),
                        image,
                    }),
                });
            }
        }
    }
    Ok(PsiVerdict {
        stable: true,
        checked,
        witness: None,
    })
}

/// Irreducibility of `Φ(λ, α, h)` over the Virasoro algebra:
/// `b = −1`, `α ≠ 0` and `deg h = 1`.
pub fn vir_irreducible(params: &ModuleParams) -> Result<bool> {
    if params.kind() != Kind::Phi {
        return Err(Error::InvalidParams("vir_irreducible is defined for Phi only".into()));
    }
    Ok(is_f_branch(params) && params.deg_h() == Some(1))
}

/// Whether `1` lies in the truncated Virasoro closure of `seed`. A `false`
/// only means "not reached inside this box".
pub fn reach_one_probe(params: &ModuleParams, seed: &BiPoly, bounds: Bounds) -> Result<bool> {
    if seed.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    closure_reaches(params, std::slice::from_ref(seed), OperatorSet::VirasoroOnly, bounds, &BiPoly::one())
}

/// The t-degrees of the univariate members of the truncated Virasoro
/// closure of `seed`.
pub fn finite_degree_profile(params: &ModuleParams, seed: &BiPoly, bounds: Bounds) -> Result<BTreeSet<u32>> {
    let span = closure_truncated(params, std::slice::from_ref(seed), OperatorSet::VirasoroOnly, bounds)?;
    // keys ordered by (s, t): a row whose pivot has s = 0 lies in ℚ[t]
    let mut e: Echelon<(u32, u32)> = Echelon::new();
    for p in span.inner_basis() {
        e.insert(p.terms().map(|(m, c)| (m, c.clone())).collect());
    }
    Ok(e.pivots().filter(|(a, _)| *a == 0).map(|&(_, c)| c).collect())
}

/// Comparison of the truncated Virasoro closure of `f` with the span of
/// the family of [`psi_gens`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GensReport {
    pub closure_dim: usize,
    pub family_dim: usize,
    pub closure_in_family: bool,
    pub family_in_closure: bool,
}

impl GensReport {
    pub fn agrees(&self) -> bool {
        self.closure_in_family && self.family_in_closure && self.closure_dim == self.family_dim
    }
}

pub fn psi_gens_oracle(params: &ModuleParams, f: &BiPoly, bounds: Bounds) -> Result<GensReport> {
    let gens = psi_gens(params, f)?;
    let closure = closure_truncated(params, std::slice::from_ref(f), OperatorSet::VirasoroOnly, bounds)?;
    let family = span_truncated(&gens.family(params, bounds), bounds);
    let c = closure.inner_basis();
    let fam = family.inner_basis();
    Ok(GensReport {
        closure_dim: c.len(),
        family_dim: fam.len(),
        closure_in_family: c.iter().all(|p| family.contains(p)),
        family_in_closure: fam.iter().all(|p| closure.contains(p)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn up(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn bp(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn phi(b: i64, alpha: i64, h: &str) -> ModuleParams {
        ModuleParams::phi(r(b), r(1), r(alpha), up(h)).unwrap()
    }

    #[test]
    fn minimal_pairs() {
        let mp = |k, w| minimal_pair(k, w).unwrap();
        assert_eq!(mp(2, 3), Some(MinimalPair { n: 2, i: 1 }));
        assert_eq!(mp(2, 0), Some(MinimalPair { n: 0, i: 0 }));
        assert_eq!(mp(3, 3), Some(MinimalPair { n: 1, i: 1 }));
        assert_eq!(mp(3, 1), None);
        assert!(minimal_pair(1, 4).is_err());
        for k in 2..=5 {
            for w in 0..=40 {
                assert_eq!(mp(k, w), minimal_pair_by_search(k, w), "k={k} w={w}");
            }
        }
    }

    #[test]
    fn decompositions() {
        let p = phi(-1, 1, "t^2");
        let gens = psi_gens(&p, &bp("s*t")).unwrap();
        assert_eq!(
            gens.parts,
            vec![
                PsiPart::Free { p: bp("s*t") },
                PsiPart::Cyclic { p: up("t^2 + t - 1") },
                PsiPart::Cyclic { p: up("t^3 + t^2") },
            ]
        );
        let q = phi(0, 0, "t");
        assert_eq!(
            psi_gens(&q, &bp("s^2")).unwrap().parts,
            vec![PsiPart::Free { p: bp("s") }, PsiPart::Cyclic { p: up("t") }]
        );
        assert_eq!(psi_gens(&q, &bp("t^2 + 1")).unwrap().parts, vec![PsiPart::Cyclic { p: up("t^2 + 1") }]);
        assert!(psi_gens(&p, &bp("s*t + 1")).is_err());
        assert_eq!(psi_gens(&q, &BiPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn decompositions_match_closure() {
        let b = Bounds::square(6, 4);
        for (p, f) in [
            (phi(-1, 1, "t^2"), "s^2*t"),
            (phi(-1, -2, "t^3 - t"), "t^2 + 1"),
            (phi(0, 0, "t"), "s^2*t + s - 2*t^2"),
            (phi(1, 1, "t^2"), "s^3 + s*t - 1"),
            (phi(2, 0, "5"), "s*t^2 + t"),
            (phi(-1, 0, "t + 1"), "s^2*t - s*t^3"),
        ] {
            let rep = psi_gens_oracle(&p, &bp(f), b).unwrap();
            assert!(rep.agrees(), "{f}: {rep:?}");
        }
        let th = ModuleParams::theta(r(2), up("t^2")).unwrap();
        assert!(psi_gens_oracle(&th, &bp("s^2*t - t"), b).unwrap().agrees());
    }

    #[test]
    fn membership() {
        // F²t − tFt − Ft = −2t − 1 puts 1 into Ψ_t when h = t², α = 1
        assert!(psi_member(&phi(-1, 1, "t^2"), &up("t"), &bp("1"), 12).unwrap());
        assert!(psi_member(&phi(-1, 1, "t"), &up("t^3"), &bp("s^5*t^7"), 12).unwrap());
        assert!(!psi_member(&phi(-1, 1, "5"), &up("t^2"), &bp("t^3"), 12).unwrap());
        assert!(psi_member(&phi(-1, 1, "5"), &up("t^2"), &bp("s^3*t - 2*s"), 12).unwrap());
        assert!(!psi_member(&phi(0, 0, "t"), &up("t"), &bp("1"), 12).unwrap());
        assert!(psi_member(&phi(0, 0, "t"), &up("t"), &bp("s*t^3 + t"), 12).unwrap());
        assert!(matches!(
            psi_member(&phi(-1, 1, "t^2"), &up("t"), &bp("t^5"), 4),
            Err(Error::BoundTooSmall { .. })
        ));
    }

    #[test]
    fn minimal_pair_basis() {
        let p = phi(-1, 1, "t^2");
        let basis = psi_basis(&p, &up("t"), 5, 1).unwrap();
        let t_part: Vec<_> = basis.t_part().collect();
        let pairs: Vec<(u32, u32)> = t_part.iter().map(|e| (e.pair.n, e.pair.i)).collect();
        assert_eq!(pairs, vec![(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]);
        let degrees: Vec<u32> = t_part.iter().map(|e| e.poly.deg_t().unwrap()).collect();
        assert_eq!(degrees, vec![1, 2, 3, 4, 5]);
        assert_eq!(t_part[1].poly, bp("t^2 + t - 1"));
        assert_eq!(basis.elements.len(), 10);
        assert!(psi_basis(&p, &up("3"), 5, 1).is_err());
        assert!(psi_basis(&phi(-1, 1, "t"), &up("t"), 5, 1).is_err());
        assert!(psi_basis(&phi(0, 1, "t^2"), &up("t"), 5, 1).is_err());

        let check = psi_basis_check(&p, &up("t"), 12).unwrap();
        assert!(check.triangular);
        assert_eq!((check.family_dim, check.member_dim), (12, 13));
        assert_eq!(check.missing, Some(UniPoly::one()));

        let json = serde_json::to_value(&psi_basis(&p, &up("t"), 2, 0).unwrap()).unwrap();
        assert_eq!(json["elements"], serde_json::json!([[0, 0, 0, "t"], [0, 1, 0, "t^2 + t - 1"]]));
        let back: PsiBasis = serde_json::from_value(json).unwrap();
        assert_eq!(back.elements.len(), 2);
    }

    #[test]
    fn maximality_witnesses() {
        let p = phi(-1, 1, "t^2");
        let v = maximal_psi_check(&p, &UniPoly::one(), 10, 2).unwrap();
        let w = v.witness.unwrap();
        assert_eq!((w.j, w.element.clone()), (2, bp("t + 1")));
        assert_eq!(w.image, bp("-t^2 - 2*t"));
        let v = maximal_psi_check(&p, &up("t"), 10, 2).unwrap();
        assert!(!v.stable);
        assert_eq!(v.witness.unwrap().element, bp("t^2 + t - 1"));
    }

    #[test]
    fn irreducibility() {
        assert!(vir_irreducible(&phi(-1, 1, "t")).unwrap());
        assert!(!vir_irreducible(&phi(-1, 1, "t^2")).unwrap());
        assert!(!vir_irreducible(&phi(0, 1, "t")).unwrap());
        assert!(!vir_irreducible(&phi(-1, 0, "t")).unwrap());
        assert!(vir_irreducible(&ModuleParams::theta(r(1), up("t")).unwrap()).is_err());
    }

    #[test]
    fn probes() {
        let b = Bounds::square(12, 4);
        assert!(reach_one_probe(&phi(-1, 1, "t"), &bp("s^2*t^3"), b).unwrap());
        assert!(reach_one_probe(&phi(-1, 1, "t^2"), &bp("t"), b).unwrap());
        assert!(!reach_one_probe(&phi(-1, 1, "t^3"), &bp("t"), b).unwrap());
        assert!(!reach_one_probe(&phi(0, 1, "t"), &bp("s*t"), b).unwrap());
        assert!(reach_one_probe(&phi(2, 0, "t^2"), &bp("1"), b).unwrap());
    }

    #[test]
    fn degree_profiles() {
        let b = Bounds::square(6, 2);
        let set = |v: &[u32]| v.iter().copied().collect::<BTreeSet<u32>>();
        assert_eq!(finite_degree_profile(&phi(0, 0, "5"), &bp("t^2"), b).unwrap(), set(&[2]));
        assert_eq!(finite_degree_profile(&phi(2, 0, "1"), &bp("t^3 + t"), b).unwrap(), set(&[1, 3]));
        assert_eq!(finite_degree_profile(&phi(2, 0, "1"), &bp("1"), b).unwrap(), set(&[0]));
        assert_eq!(
            finite_degree_profile(&phi(0, 1, "3"), &bp("s^2*t^4 - s*t + 2"), b).unwrap(),
            set(&[0, 1, 4])
        );
    }
}
