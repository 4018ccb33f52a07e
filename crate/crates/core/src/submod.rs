//! Submodules of `Φ(λ, α, h)` over `Vir(0, b)` and of `Θ(λ, h)` over
//! `Vir(0, 1)`: canonical forms, membership, maximal submodules, and the
//! truncated-closure oracle.
//!
//! Every canonical form describes its submodule by a pair of divisors
//! `(D0, D1)`: a polynomial `Σ s^i p_i(t)` is a member exactly when
//! `D0 | p_0` and `D1 | p_i` for all `i ≥ 1`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::action::{op_s, op_t, s_range, t_range, Kind, ModuleParams};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{gcd_all, gcd_or_zero, BiPoly, UniPoly};
use crate::rational::Rational;

/// Canonical form of a cyclic submodule. The derived order (variant, then
/// fields) is the tie-break used by [`maximal_chain`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum CyclicCanon {
    /// `ℚ[s,t]sF + ℚ[s,t]tF + ℚ[s,t]hF` (`b = 0`).
    #[serde(rename = "B0_SsF")]
    B0SsF {
        #[serde(rename = "F")]
        f: UniPoly,
    },
    /// `ℚ[s,t]F` (`b = 0`).
    #[serde(rename = "B0_SF")]
    B0SF {
        #[serde(rename = "F")]
        f: UniPoly,
    },
    /// `ℚ[s,t]A + ℚ[s,t]sB + ℚ[s,t]hB` with `B | A | hB`.
    Theta {
        #[serde(rename = "A")]
        a: UniPoly,
        #[serde(rename = "B")]
        b: UniPoly,
    },
    /// `ℚ[s, t−α](t−α)^n` (`b = 1`).
    B1Phi { n: u32 },
    /// `ℚ[s,t]s(t−α)^n + ℚ[s,t](t−α)^{n+1}`; a submodule only when the
    /// layer constant vanishes at `n` (see [`layer_constant`]).
    #[serde(rename = "B1Phi_s")]
    B1PhiS { n: u32 },
    /// `t^i ℚ[s,t]` (`b = −1, α = 0`, or `b ∉ {0, ±1}`).
    TVal { i: u32 },
    /// `ℚ[s,t]st^i + ℚ[s,t]t^{i+1}`; same proviso as `B1Phi_s`.
    #[serde(rename = "TVal_s")]
    TValS { i: u32 },
    /// The whole module (`b = −1, α ≠ 0`).
    Whole,
}

impl CyclicCanon {
    /// Builds a `Theta` form, checking `B | A` and `A | hB`.
    pub fn theta(params: &ModuleParams, a: UniPoly, b: UniPoly) -> Result<Self> {
        let a = a.monic();
        let b = b.monic();
        if a.is_zero() || b.is_zero() {
            return Err(Error::BrokenInvariant("Theta divisors must be nonzero".into()));
        }
        if !b.divides(&a) {
            return Err(Error::BrokenInvariant(format!("B = {b} does not divide A = {a}")));
        }
        let hb = params.h() * &b;
        if !a.divides(&hb) {
            return Err(Error::BrokenInvariant(format!("A = {a} does not divide hB = {hb}")));
        }
        Ok(CyclicCanon::Theta { a, b })
    }

    /// The divisor pair `(D0, D1)` describing membership.
    pub fn divisors(&self, params: &ModuleParams) -> (UniPoly, UniPoly) {
        match self {
            CyclicCanon::B0SF { f } => (f.clone(), f.clone()),
            CyclicCanon::B0SsF { f } => {
                if h_vanishes_at_zero(params) {
                    (f.shift_up(1), f.clone())
                } else {
                    (f.clone(), f.clone())
                }
            }
            CyclicCanon::Theta { a, b } => (a.clone(), b.clone()),
            CyclicCanon::B1Phi { n } => {
                let d = UniPoly::linear(params.alpha()).pow(*n);
                (d.clone(), d)
            }
            CyclicCanon::B1PhiS { n } => {
                let u = UniPoly::linear(params.alpha());
                (u.pow(n + 1), u.pow(*n))
            }
            CyclicCanon::TVal { i } => {
                let d = UniPoly::monomial(Rational::one(), *i);
                (d.clone(), d)
            }
            CyclicCanon::TValS { i } => (
                UniPoly::monomial(Rational::one(), i + 1),
                UniPoly::monomial(Rational::one(), *i),
            ),
            CyclicCanon::Whole => (UniPoly::one(), UniPoly::one()),
        }
    }
}

/// The root `r` of the valuation branches: `α` for `b = 1`, else `0`.
fn valuation_root(params: &ModuleParams) -> Rational {
    if params.b_is(1) {
        params.alpha().clone()
    } else {
        Rational::zero()
    }
}

/// The scalar by which `S^{j+1}` sends `s^j (t−r)^n` to `−(t−r)^n` modulo
/// `(t−r)^{n+1}`, in the valuation branches: `G(α) + n` for `b = 1`,
/// `h(0) − n` for `b = −1, α = 0` and `h(0) + bn` for `b ∉ {0, ±1}`.
///
/// When it vanishes, `(t−r)^n ℚ[s,t]` has the extra maximal submodule
/// `ℚ[s,t]s(t−r)^n + ℚ[s,t](t−r)^{n+1}`.
pub fn layer_constant(params: &ModuleParams, n: u32) -> Result<Rational> {
    let nr = Rational::from(n);
    let h0 = params.h().eval(&Rational::zero());
    if params.kind() != Kind::Phi || params.b_is(0) || (params.b_is(-1) && !params.alpha().is_zero()) {
        return Err(Error::UnsupportedBranch("layer constants exist only in the valuation branches".into()));
    }
    Ok(if params.b_is(1) {
        params.big_g().eval(params.alpha()) + nr
    } else if params.b_is(-1) {
        h0 - nr
    } else {
        h0 + params.b() * nr
    })
}

fn h_vanishes_at_zero(params: &ModuleParams) -> bool {
    params.h().eval(&Rational::zero()).is_zero()
}

fn require_b0(params: &ModuleParams, what: &str) -> Result<()> {
    if params.kind() == Kind::Phi && params.b_is(0) {
        Ok(())
    } else {
        Err(Error::UnsupportedBranch(format!("{what} requires Φ with b = 0")))
    }
}

/// The canonical form of the submodule generated by `f`.
pub fn canonical_cyclic(params: &ModuleParams, f: &BiPoly) -> Result<CyclicCanon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = f.s_coeffs();
    let f0 = &coeffs[0];
    let upper = &coeffs[1..];
    match params.kind() {
        Kind::Theta => {
            let b = gcd_all(&coeffs);
            let mut a = f0.clone();
            for fi in upper {
                a = gcd_or_zero(&a, &(params.h() * fi));
            }
            CyclicCanon::theta(params, a, b)
        }
        Kind::Phi if params.b_is(0) => {
            if !h_vanishes_at_zero(params) {
                return Ok(CyclicCanon::B0SF { f: gcd_all(&coeffs) });
            }
            let f_prime = gcd_all(upper);
            let gc = gcd_or_zero(f0, &f_prime.shift_up(1));
            let fc = gcd_or_zero(&f_prime, &gc);
            if gc.is_associate(&fc) {
                Ok(CyclicCanon::B0SF { f: fc })
            } else if gc.is_associate(&fc.shift_up(1)) {
                Ok(CyclicCanon::B0SsF { f: fc })
            } else {
                Err(Error::Dichotomy(format!("gcd {gc} is neither {fc} nor t*({fc})")))
            }
        }
        Kind::Phi if params.b_is(-1) && !params.alpha().is_zero() => Ok(CyclicCanon::Whole),
        Kind::Phi => {
            let root = valuation_root(params);
            let n = f.valuation(&root)?;
            let split = layer_constant(params, n)?.is_zero()
                && (f0.is_zero() || f0.valuation_at(&root)? > n);
            Ok(match (params.b_is(1), split) {
                (true, false) => CyclicCanon::B1Phi { n },
                (true, true) => CyclicCanon::B1PhiS { n },
                (false, false) => CyclicCanon::TVal { i: n },
                (false, true) => CyclicCanon::TValS { i: n },
            })
        }
    }
}

/// Exact membership of `p` in the submodule `canon`.
pub fn member(params: &ModuleParams, canon: &CyclicCanon, p: &BiPoly) -> bool {
    let (d0, d1) = canon.divisors(params);
    p.s_coeffs()
        .iter()
        .enumerate()
        .all(|(i, pi)| if i == 0 { d0.divides(pi) } else { d1.divides(pi) })
}

/// Whether two canonical forms describe the same submodule.
pub fn equal_submodules(params: &ModuleParams, c1: &CyclicCanon, c2: &CyclicCanon) -> bool {
    let (a0, a1) = c1.divisors(params);
    let (b0, b1) = c2.divisors(params);
    a0.monic() == b0.monic() && a1.monic() == b1.monic()
}

/// Inclusion `c1 ⊆ c2`.
pub fn is_contained(params: &ModuleParams, c1: &CyclicCanon, c2: &CyclicCanon) -> bool {
    let (a0, a1) = c1.divisors(params);
    let (b0, b1) = c2.divisors(params);
    b0.divides(&a0) && b1.divides(&a1)
}

/// Checks that `p` is irreducible as far as can be certified: units are
/// rejected, a rational root of a polynomial of degree ≥ 2 proves
/// reducibility, and degree ≤ 3 without rational roots is irreducible.
/// Higher degrees without rational roots are accepted uncertified.
pub fn check_irreducible(p: &UniPoly) -> Result<()> {
    let deg = p.degree().ok_or_else(|| Error::Reducible("0".into()))?;
    if deg == 0 {
        return Err(Error::Reducible(format!("{p} (a unit)")));
    }
    if deg >= 2 {
        match p.rational_roots() {
            Some(roots) if !roots.is_empty() => {
                return Err(Error::Reducible(format!("{p} (root {})", roots[0])));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Maximal submodules of `canon` with the irreducible factors drawn from
/// `irreducibles`.
///
/// For `b = 0` and `h(0) = 0` the lists are
/// `𝒮_F → {𝒮_{pF} : p ≁ t} ∪ {𝒮_{sF}}` and
/// `𝒮_{sF} → {𝒮_{spF} : p ≁ t} ∪ {𝒮_{tF}}`; for `h(0) ≠ 0`,
/// `𝒮_F → {𝒮_{pF}}`.
pub fn maximal_submodules(
    params: &ModuleParams,
    canon: &CyclicCanon,
    irreducibles: &[UniPoly],
) -> Result<Vec<CyclicCanon>> {
    let mut out = BTreeSet::new();
    match canon {
        CyclicCanon::B0SF { f } | CyclicCanon::B0SsF { f } => {
            require_b0(params, "a b = 0 canonical form")?;
            let t = UniPoly::t();
            let h0 = h_vanishes_at_zero(params);
            for p in irreducibles {
                check_irreducible(p)?;
                let pf = (p * f).monic();
                let is_t = p.is_associate(&t);
                match canon {
                    CyclicCanon::B0SF { .. } if !h0 || !is_t => {
                        out.insert(CyclicCanon::B0SF { f: pf });
                    }
                    CyclicCanon::B0SsF { .. } if !is_t => {
                        out.insert(CyclicCanon::B0SsF { f: pf });
                    }
                    _ => {}
                }
            }
            match canon {
                CyclicCanon::B0SF { f } if h0 => {
                    out.insert(CyclicCanon::B0SsF { f: f.clone() });
                }
                CyclicCanon::B0SsF { f } => {
                    out.insert(CyclicCanon::B0SF { f: f.shift_up(1) });
                }
                _ => {}
            }
        }
        CyclicCanon::B1Phi { n } => {
            out.insert(if layer_constant(params, *n)?.is_zero() {
                CyclicCanon::B1PhiS { n: *n }
            } else {
                CyclicCanon::B1Phi { n: n + 1 }
            });
        }
        CyclicCanon::B1PhiS { n } => {
            out.insert(CyclicCanon::B1Phi { n: n + 1 });
        }
        CyclicCanon::TVal { i } => {
            out.insert(if layer_constant(params, *i)?.is_zero() {
                CyclicCanon::TValS { i: *i }
            } else {
                CyclicCanon::TVal { i: i + 1 }
            });
        }
        CyclicCanon::TValS { i } => {
            out.insert(CyclicCanon::TVal { i: i + 1 });
        }
        CyclicCanon::Whole => {}
        CyclicCanon::Theta { .. } => {
            return Err(Error::UnsupportedBranch(
                "no closed form for maximal submodules of Θ; use the closure oracle".into(),
            ))
        }
    }
    Ok(out.into_iter().collect())
}

/// `M_0 ⊃ M_1 ⊃ …` of length at most `depth`, each term a maximal
/// submodule of the previous one (the least by the derived order). Stops
/// early when no maximal submodule is available.
pub fn maximal_chain(
    params: &ModuleParams,
    canon: &CyclicCanon,
    depth: usize,
    irreducibles: &[UniPoly],
) -> Result<Vec<CyclicCanon>> {
    let mut chain = vec![canon.clone()];
    for _ in 0..depth {
        let last = chain.last().expect("nonempty");
        match maximal_submodules(params, last, irreducibles)?.into_iter().next() {
            Some(next) => chain.push(next),
            None => break,
        }
    }
    Ok(chain)
}

/// The generator list of the decomposition: `{s f_i : i ≥ 1} ∪ {f_0}` for
/// `b = 0`, and `{s(1+h)f_i − h f_{i−1} : 1 ≤ i ≤ n+1} ∪ {(1+h)f_0}` for `Θ`.
/// Zero generators are dropped.
pub fn decompose_cyclic_b0(params: &ModuleParams, f: &BiPoly) -> Result<Vec<BiPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let coeffs = f.s_coeffs();
    let mut gens = Vec::new();
    match params.kind() {
        Kind::Theta => {
            let one_h = params.h() + &UniPoly::one();
            let zero = UniPoly::zero();
            for i in 1..=coeffs.len() {
                let fi = coeffs.get(i).unwrap_or(&zero);
                let g = BiPoly::from_uni_at(&(&one_h * fi), 1)
                    - BiPoly::from_uni(&(params.h() * &coeffs[i - 1]));
                gens.push(g);
            }
            gens.push(BiPoly::from_uni(&(&one_h * &coeffs[0])));
        }
        Kind::Phi => {
            require_b0(params, "the generator decomposition")?;
            for fi in &coeffs[1..] {
                gens.push(BiPoly::from_uni_at(fi, 1));
            }
            gens.push(BiPoly::from_uni(&coeffs[0]));
        }
    }
    gens.retain(|g| !g.is_zero());
    Ok(gens)
}

/// Inner box `s ≤ s_bound, t ≤ t_bound`, evaluated inside a working box
/// enlarged by `pad` in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub s_bound: u32,
    pub t_bound: u32,
    pub pad: u32,
}

impl Bounds {
    pub fn new(s_bound: u32, t_bound: u32, pad: u32) -> Self {
        Bounds {
            s_bound,
            t_bound,
            pad,
        }
    }

    pub fn square(bound: u32, pad: u32) -> Self {
        Bounds::new(bound, bound, pad)
    }

    pub fn inner_dim(&self) -> usize {
        (self.s_bound as usize + 1) * (self.t_bound as usize + 1)
    }

    pub fn working_dim(&self) -> usize {
        (self.s_bound + self.pad + 1) as usize * (self.t_bound + self.pad + 1) as usize
    }

    fn key(&self, (a, c): (u32, u32)) -> BoxKey {
        BoxKey {
            outside: a > self.s_bound || c > self.t_bound,
            s: a,
            t: c,
        }
    }

    pub fn to_vec(&self, p: &BiPoly) -> SparseVec<BoxKey> {
        p.terms().map(|(m, c)| (self.key(m), c.clone())).collect()
    }

    pub fn in_inner(&self, p: &BiPoly) -> bool {
        p.fits(self.s_bound, self.t_bound)
    }

    pub fn in_working(&self, p: &BiPoly) -> bool {
        p.fits(self.s_bound + self.pad, self.t_bound + self.pad)
    }

    fn check_seed(&self, p: &BiPoly) -> Result<()> {
        if self.in_inner(p) {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                poly: p.to_string(),
                s_bound: self.s_bound,
                t_bound: self.t_bound,
            })
        }
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds::square(8, 4)
    }
}

/// Monomial key ordering every monomial outside the inner box above every
/// monomial inside it, then by `(s, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxKey {
    outside: bool,
    s: u32,
    t: u32,
}

pub fn vec_to_poly(v: &SparseVec<BoxKey>) -> BiPoly {
    BiPoly::from_terms(v.iter().map(|(k, c)| ((k.s, k.t), c.clone())))
}

/// Which operators the closure is taken under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OperatorSet {
    /// `S^j` and `T^j` (for `Θ`: `S_Θ^j` and multiplication by `t`).
    Full,
    /// `S^j` only: the Virasoro algebra.
    VirasoroOnly,
}

/// Images of `v` under every operator of the set that can be nonzero.
pub fn operator_images(params: &ModuleParams, ops: OperatorSet, v: &BiPoly) -> Vec<BiPoly> {
    let mut out = Vec::new();
    for j in 0..=s_range(v) {
        out.push(op_s(params, j, v));
    }
    if ops == OperatorSet::Full {
        let tmax = if params.kind() == Kind::Theta { 0 } else { t_range(v) };
        for j in 0..=tmax {
            out.push(op_t(params, j, v));
        }
    }
    out.retain(|p| !p.is_zero());
    out
}

/// The least subspace of the working box containing the seeds and closed
/// under every operator application that stays in the working box.
#[derive(Clone, Debug)]
pub struct TruncatedSpan {
    bounds: Bounds,
    echelon: Echelon<BoxKey>,
    fixpoint: bool,
}

impl TruncatedSpan {
    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    /// Always true: the ambient space is finite-dimensional.
    pub fn reached_fixpoint(&self) -> bool {
        self.fixpoint
    }

    /// A basis of the intersection with the inner box.
    pub fn inner_basis(&self) -> Vec<BiPoly> {
        self.echelon
            .rows_up_to(&INNER_TOP)
            .map(vec_to_poly)
            .collect()
    }

    pub fn inner_dim(&self) -> usize {
        self.echelon.rows_up_to(&INNER_TOP).count()
    }

    pub fn working_rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_full_box(&self) -> bool {
        self.inner_dim() == self.bounds.inner_dim()
    }

    pub fn contains(&self, p: &BiPoly) -> bool {
        self.bounds.in_working(p) && self.echelon.contains(self.bounds.to_vec(p))
    }
}

fn inner_rank(e: &Echelon<BoxKey>) -> usize {
    e.rows_up_to(&INNER_TOP).count()
}

const INNER_TOP: BoxKey = BoxKey {
    outside: false,
    s: u32::MAX,
    t: u32::MAX,
};

/// Computes the truncated closure of `seeds`.
pub fn closure_truncated(
    params: &ModuleParams,
    seeds: &[BiPoly],
    ops: OperatorSet,
    bounds: Bounds,
) -> Result<TruncatedSpan> {
    closure_impl(params, seeds, ops, bounds, None).map(|(span, _)| span)
}

/// Whether `target` lies in the truncated closure of `seeds`; stops as soon
/// as it does.
pub fn closure_reaches(
    params: &ModuleParams,
    seeds: &[BiPoly],
    ops: OperatorSet,
    bounds: Bounds,
    target: &BiPoly,
) -> Result<bool> {
    closure_impl(params, seeds, ops, bounds, Some(target)).map(|(_, hit)| hit)
}

/// The span of `vectors` inside the working box, without any closure.
/// Vectors leaving the working box are dropped.
pub fn span_truncated(vectors: &[BiPoly], bounds: Bounds) -> TruncatedSpan {
    let mut echelon = Echelon::new();
    for v in vectors.iter().filter(|v| bounds.in_working(v)) {
        echelon.insert(bounds.to_vec(v));
    }
    TruncatedSpan {
        bounds,
        echelon,
        fixpoint: true,
    }
}

fn closure_impl(
    params: &ModuleParams,
    seeds: &[BiPoly],
    ops: OperatorSet,
    bounds: Bounds,
    target: Option<&BiPoly>,
) -> Result<(TruncatedSpan, bool)> {
    // Operators are applied to the reduced rows rather than to the raw
    // images: rows have the smallest leading terms, so their images are the
    // likeliest to stay inside the working box.
    let mut echelon = Echelon::new();
    let mut queue = Vec::new();
    for seed in seeds {
        bounds.check_seed(seed)?;
        if let Some(row) = echelon.insert_row(bounds.to_vec(seed)) {
            queue.push(vec_to_poly(row));
        }
    }
    let target = target.map(|t| bounds.to_vec(t));
    let hit = |e: &Echelon<BoxKey>| target.as_ref().is_some_and(|t| e.contains(t.clone()));
    let mut reached = hit(&echelon);
    // Once the inner box is full, further work cannot change the output.
    let inner_full = bounds.inner_dim();
    let mut inner = inner_rank(&echelon);
    'outer: while let Some(v) = queue.pop() {
        if inner == inner_full || reached {
            break;
        }
        for w in operator_images(params, ops, &v) {
            if !bounds.in_working(&w) {
                continue;
            }
            if let Some(row) = echelon.insert_row(bounds.to_vec(&w)) {
                let row = vec_to_poly(row);
                if bounds.in_inner(&row) {
                    inner += 1;
                }
                queue.push(row);
                if target.is_some() && hit(&echelon) {
                    reached = true;
                    break 'outer;
                }
                if inner == inner_full {
                    break 'outer;
                }
            }
        }
    }
    if inner == inner_full && target.as_ref().is_some_and(|t| t.keys().all(|k| !k.outside)) {
        reached = true;
    }
    Ok((
        TruncatedSpan {
            bounds,
            echelon,
            fixpoint: true,
        },
        reached,
    ))
}

/// Basis `{s^a t^c D_a}` of the members of `canon` inside the inner box,
/// where `D_0 = D0` and `D_a = D1` for `a ≥ 1`.
pub fn member_basis(params: &ModuleParams, canon: &CyclicCanon, bounds: Bounds) -> Vec<BiPoly> {
    let (d0, d1) = canon.divisors(params);
    let mut out = Vec::new();
    for a in 0..=bounds.s_bound {
        let d = if a == 0 { &d0 } else { &d1 };
        let Some(deg) = d.degree() else { continue };
        for c in 0..=bounds.t_bound.saturating_sub(deg) {
            if c + deg <= bounds.t_bound {
                out.push(BiPoly::from_uni_at(&d.shift_up(c), a));
            }
        }
    }
    out
}

/// Compares the closure of `{f}` with the canonical form inside the box:
/// every inner closure element is a member, and the dimensions agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub canon: CyclicCanon,
    pub closure_dim: usize,
    pub member_dim: usize,
    pub closure_in_members: bool,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.closure_in_members && self.closure_dim == self.member_dim
    }
}

pub fn oracle_check(params: &ModuleParams, f: &BiPoly, bounds: Bounds) -> Result<OracleReport> {
    let canon = canonical_cyclic(params, f)?;
    let span = closure_truncated(params, std::slice::from_ref(f), OperatorSet::Full, bounds)?;
    let basis = span.inner_basis();
    Ok(OracleReport {
        closure_in_members: basis.iter().all(|p| member(params, &canon, p)),
        closure_dim: basis.len(),
        member_dim: member_basis(params, &canon, bounds).len(),
        canon,
    })
}

/// Oracle check that `child ⊂ parent` is maximal inside the box: the
/// inclusion is strict, and adjoining any parent basis element outside the
/// child regenerates the parent.
pub fn oracle_maximality(
    params: &ModuleParams,
    parent: &CyclicCanon,
    child: &CyclicCanon,
    bounds: Bounds,
) -> Result<bool> {
    let child_basis = member_basis(params, child, bounds);
    let parent_basis = member_basis(params, parent, bounds);
    if !child_basis.iter().all(|p| member(params, parent, p)) {
        return Ok(false);
    }
    let child_span = closure_truncated(params, &child_basis, OperatorSet::Full, bounds)?;
    if child_span.inner_dim() >= parent_basis.len() {
        return Ok(false);
    }
    for extra in parent_basis.iter().filter(|p| !member(params, child, p)) {
        let mut seeds = child_basis.clone();
        seeds.push(extra.clone());
        let span = closure_truncated(params, &seeds, OperatorSet::Full, bounds)?;
        if span.inner_dim() != parent_basis.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
