//! The verification suites behind `selftest`, one per acceptance criterion.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::Rng;
use serde::Serialize;

use vircalc::action::{
    act_l, bracket_check_all, expand_check, op_s, op_s_theta, op_t, special, Kind, ModuleParams,
    StructureConstants,
};
use vircalc::poly::gcd_all;
use vircalc::submod::{
    canonical_cyclic, closure_truncated, equal_submodules, member, member_basis, Bounds, CyclicCanon,
    OperatorSet, TruncatedSpan,
};
use vircalc::tensor::{
    default_samples, extract_invariants, extract_invariants_with, reach_one_tensor, sample_window,
    slot_apply, stored_invariants, tensor_act_l, vandermonde_extract, TensorElem, TensorParams,
};
use vircalc::virsub::{
    finite_degree_profile, maximal_psi_check, minimal_pair, minimal_pair_by_search, psi_basis_check,
    psi_member, reach_one_probe, vir_irreducible,
};
use vircalc::{BiPoly, Error, Rational, UniPoly};

use crate::random;

const MAX_EXAMPLES: usize = 5;
/// Loops stop feeding a check once it has this many failures.
const SATURATION: usize = 50;

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub examples: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(detail());
            }
        }
    }

    /// Records an error as a failure.
    pub fn record_result(&mut self, r: Result<bool, Error>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: error: {e}", detail())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    pub fn saturated(&self) -> bool {
        self.failures >= SATURATION
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    pub elapsed_ms: u128,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Replace the `[L_n, L_m]` structure constant `m − n` by `m − n + 1`.
    pub fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: random::env_seed(),
            fault: false,
        }
    }
}

pub struct Suite {
    pub criterion: u8,
    pub name: &'static str,
    pub summary: &'static str,
    run: fn(&SuiteConfig, &mut StdRng) -> Vec<CheckReport>,
}

pub const SUITES: &[Suite] = &[
    Suite {
        criterion: 1,
        name: "brackets",
        summary: "bracket relations of Vir(0,b) on the parameter grid",
        run: brackets,
    },
    Suite {
        criterion: 2,
        name: "expansion",
        summary: "L_m and W_m as sums of S^j and T^j",
        run: expansion,
    },
    Suite {
        criterion: 3,
        name: "specialization",
        summary: "generic operators against the per-branch formulas",
        run: specialization,
    },
    Suite {
        criterion: 4,
        name: "b0-oracle",
        summary: "b = 0 canonical forms against the closure oracle; gcd criteria",
        run: b0_oracle,
    },
    Suite {
        criterion: 5,
        name: "theta",
        summary: "Theta canonical pairs against the closure oracle",
        run: theta,
    },
    Suite {
        criterion: 6,
        name: "b1-valuation",
        summary: "b = 1 closures against (t - alpha)^n times the box",
        run: b1_valuation,
    },
    Suite {
        criterion: 7,
        name: "b-minus-one",
        summary: "b = -1 closures fill the box; t-valuation branches",
        run: valuation_branches,
    },
    Suite {
        criterion: 8,
        name: "virasoro",
        summary: "minimal pairs, the Psi basis, maximality and probes",
        run: virasoro,
    },
    Suite {
        criterion: 9,
        name: "finite-degree",
        summary: "constant h: no new t-degrees in Virasoro closures",
        run: finite_degree,
    },
    Suite {
        criterion: 10,
        name: "tensor",
        summary: "tensor action, component extraction, reach-one, invariants",
        run: tensor,
    },
];

/// Looks a suite up by name or criterion number.
pub fn find(key: &str) -> Option<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == key || key.parse::<u8>().ok() == Some(s.criterion))
}

pub fn run(suite: &Suite, cfg: &SuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let mut rng = random::rng(cfg.seed, suite.criterion as u64);
    let checks = (suite.run)(cfg, &mut rng);
    let elapsed_ms = start.elapsed().as_millis();
    SuiteReport {
        criterion: suite.criterion,
        name: suite.name.to_string(),
        passed: !checks.is_empty() && checks.iter().all(CheckReport::passed),
        cases: checks.iter().map(|c| c.cases).sum(),
        failures: checks.iter().map(|c| c.failures).sum(),
        elapsed_ms,
        checks,
    }
}

fn q(s: &str) -> Rational {
    s.parse().expect("rational literal")
}

fn up(s: &str) -> UniPoly {
    s.parse().expect("polynomial literal")
}

fn phi(b: &str, lambda: &str, alpha: &str, h: &str) -> ModuleParams {
    ModuleParams::phi(q(b), q(lambda), q(alpha), up(h)).expect("grid parameters")
}

fn theta_params(lambda: &str, h: &str) -> ModuleParams {
    ModuleParams::theta(q(lambda), up(h)).expect("grid parameters")
}

pub fn describe(p: &ModuleParams) -> String {
    match p.kind() {
        Kind::Phi => format!("Phi(b={}, lambda={}, alpha={}, h={})", p.b(), p.lambda(), p.alpha(), p.h()),
        Kind::Theta => format!("Theta(lambda={}, h={})", p.lambda(), p.h()),
    }
}

const B_GRID: [&str; 5] = ["-1", "0", "1", "2", "1/2"];
const LAMBDA_GRID: [&str; 3] = ["1", "2", "1/3"];
const ALPHA_GRID: [&str; 3] = ["0", "1", "-2"];
const H_GRID: [&str; 5] = ["5", "t", "t + 1", "t^2", "t^3 - t"];

/// The `Φ` grid of criteria 1 and 2.
pub fn phi_grid() -> Vec<ModuleParams> {
    let mut out = Vec::new();
    for b in B_GRID {
        for l in LAMBDA_GRID {
            for a in ALPHA_GRID {
                for h in H_GRID {
                    out.push(phi(b, l, a, h));
                }
            }
        }
    }
    out
}

pub fn theta_grid() -> Vec<ModuleParams> {
    LAMBDA_GRID
        .iter()
        .flat_map(|l| H_GRID.iter().map(move |h| theta_params(l, h)))
        .collect()
}

// ---------------------------------------------------------------- 1, 2, 3

fn brackets(cfg: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let constants = StructureConstants {
        ll_offset: if cfg.fault { Rational::one() } else { Rational::zero() },
    };
    let mut checks = vec![
        CheckReport::new("[L_n, L_m] = (m-n) L_{n+m}"),
        CheckReport::new("[L_n, W_m] = (m+bn) W_{n+m}"),
        CheckReport::new("[W_n, W_m] = 0"),
    ];
    let points = phi_grid().into_iter().map(|p| (p, 50)).chain(theta_grid().into_iter().map(|p| (p, 10)));
    'grid: for (p, samples) in points {
        let p = &p;
        for _ in 0..samples {
            let f = random::bipoly(rng, 4, 4, 6);
            for ((n, m), verdict) in bracket_check_all(p, -3..=3, &f, &constants) {
                for (check, ident) in checks.iter_mut().zip(&verdict.identities) {
                    check.record(ident.holds(), || {
                        format!("{} n={n} m={m} f={f}: difference {}", describe(p), ident.witness())
                    });
                }
            }
            if checks.iter().any(CheckReport::saturated) {
                break 'grid;
            }
        }
    }
    checks
}

fn expansion(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let mut checks = vec![CheckReport::new("L expansion"), CheckReport::new("W expansion")];
    for p in phi_grid().iter().chain(theta_grid().iter()) {
        for _ in 0..50 {
            let f = random::bipoly(rng, 4, 4, 6);
            for m in -3..=3 {
                let verdict = expand_check(p, m, &f);
                for (check, ident) in checks.iter_mut().zip(&verdict.identities) {
                    check.record(ident.holds(), || format!("{} m={m} f={f}", describe(p)));
                }
            }
        }
    }
    checks
}

type BranchOps = fn(&ModuleParams, u32, &BiPoly) -> (BiPoly, BiPoly);

fn theta_ops(p: &ModuleParams, j: u32, f: &BiPoly) -> (BiPoly, BiPoly) {
    let t = if j == 0 { f.mul_monomial(0, 1) } else { BiPoly::zero() };
    (op_s_theta(p, j, f), t)
}

fn specialization(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let branches: Vec<(&str, Vec<ModuleParams>, BranchOps)> = vec![
        (
            "b = -1, alpha != 0",
            vec![phi("-1", "1", "1", "t"), phi("-1", "2", "-2", "t^2 + 1"), phi("-1", "1/3", "1/2", "t^3 - t")],
            special::bm1,
        ),
        (
            "b = 1",
            vec![phi("1", "1", "0", "t"), phi("1", "2", "1", "t^2"), phi("1", "1/3", "-2", "t^3 - t + 5")],
            special::b1,
        ),
        (
            "Theta",
            vec![theta_params("1", "t"), theta_params("2", "t^2 - 1"), theta_params("1/3", "5")],
            theta_ops,
        ),
        (
            "b = -1, alpha = 0",
            vec![phi("-1", "1", "0", "t"), phi("-1", "2", "0", "t^2 + 3"), phi("-1", "1/3", "0", "5")],
            special::bm1_alpha0,
        ),
        (
            "b not in {0, 1, -1}",
            vec![phi("2", "1", "0", "t"), phi("1/2", "2", "1", "t^2 + 1"), phi("-3", "1/3", "-2", "t^3 - t")],
            special::generic,
        ),
        (
            "b = 0",
            vec![phi("0", "1", "0", "t"), phi("0", "2", "1", "t^2 + 1"), phi("0", "1/3", "-2", "5")],
            special::b0,
        ),
    ];
    let mut checks = Vec::new();
    for (name, params, ops) in branches {
        let mut check = CheckReport::new(format!("S^j, T^j: {name}"));
        for i in 0..200 {
            let p = &params[i % params.len()];
            let j = rng.gen_range(0..=6);
            let f = random::bipoly(rng, 6, 4, 6);
            let (s, t) = ops(p, j, &f);
            let ok = s == op_s(p, j, &f) && t == op_t(p, j, &f);
            check.record(ok, || format!("{} j={j} f={f}", describe(p)));
        }
        checks.push(check);
    }
    checks
}

// ---------------------------------------------------------------- closures

/// Both inclusions between the inner part of `span` and the members of
/// `canon` inside the box.
fn compare_with(p: &ModuleParams, span: &TruncatedSpan, canon: &CyclicCanon, bounds: Bounds) -> Result<(), String> {
    if let Some(x) = span.inner_basis().into_iter().find(|x| !member(p, canon, x)) {
        return Err(format!("closure element {x} is not a member of {canon:?}"));
    }
    if let Some(x) = member_basis(p, canon, bounds).into_iter().find(|x| !span.contains(x)) {
        return Err(format!("member {x} of {canon:?} is not in the closure"));
    }
    Ok(())
}

fn full_closure(p: &ModuleParams, f: &BiPoly, bounds: Bounds) -> Result<TruncatedSpan, Error> {
    closure_truncated(p, std::slice::from_ref(f), OperatorSet::Full, bounds)
}

/// Records `canonical_cyclic(f)` against the closure of `f`.
fn record_canonical(check: &mut CheckReport, p: &ModuleParams, f: &BiPoly, span: &TruncatedSpan, bounds: Bounds) {
    let outcome = canonical_cyclic(p, f)
        .map_err(|e| e.to_string())
        .and_then(|c| compare_with(p, span, &c, bounds));
    check.record(outcome.is_ok(), || format!("{} f={f}: {}", describe(p), outcome.unwrap_err()));
}

/// `Σ s^i g q_i` with small random `q_i`, sometimes with an extra `t` on
/// the `s^0` coefficient, or a plain random polynomial.
fn structured(rng: &mut StdRng) -> BiPoly {
    if rng.gen_bool(0.25) {
        return random::bipoly(rng, 3, 4, 5);
    }
    loop {
        let g = random::split_monic(rng, 2);
        let n = rng.gen_range(0..=2);
        let mut coeffs = Vec::new();
        for i in 0..=n {
            let qi = if rng.gen_bool(0.2) {
                UniPoly::zero()
            } else if rng.gen_bool(0.5) {
                UniPoly::constant(Rational::from_int(rng.gen_range(1..=3)))
            } else {
                random::unipoly(rng, 1, 2)
            };
            let mut c = &g * &qi;
            if i == 0 && rng.gen_bool(0.4) {
                c = c.shift_up(1);
            }
            coeffs.push(c);
        }
        let f = BiPoly::from_s_coeffs(&coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn b0_oracle(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let bounds = Bounds::square(8, 4);
    let mut oracle = CheckReport::new("closure = members of canonical_cyclic (both inclusions)");
    for h in ["t", "t + 1", "t^2"] {
        let p = phi("0", "1", "0", h);
        for _ in 0..100 {
            let f = structured(rng);
            match full_closure(&p, &f, bounds) {
                Ok(span) => record_canonical(&mut oracle, &p, &f, &span, bounds),
                Err(e) => oracle.record(false, || format!("{} f={f}: {e}", describe(&p))),
            }
        }
    }

    let mut sg = CheckReport::new("S_f = S_{sg} criterion agrees with canonical equality");
    let mut g_form = CheckReport::new("S_f = S_g criterion agrees with canonical equality");
    let mut seen = [[false; 2]; 2];
    for h in ["t", "t + 1"] {
        let p = phi("0", "1", "0", h);
        let h0_zero = p.h().eval(&Rational::zero()).is_zero();
        for _ in 0..100 {
            let g = random::split_monic(rng, 2);
            let f = near_multiple(rng, &g);
            let coeffs = f.s_coeffs();
            let all = gcd_all(&coeffs);
            let crit_sg = if h0_zero {
                g.shift_up(1).divides(&coeffs[0]) && all == g
            } else {
                all == g
            };
            let crit_g = if h0_zero {
                let mut with_t = vec![coeffs[0].clone()];
                with_t.extend(coeffs[1..].iter().map(|c| c.shift_up(1)));
                gcd_all(&with_t) == g && coeffs[1..].iter().all(|c| g.divides(c))
            } else {
                all == g
            };
            let canon = |x: &BiPoly| canonical_cyclic(&p, x);
            let result = canon(&f).and_then(|cf| {
                let csg = canon(&BiPoly::from_uni_at(&g, 1))?;
                let cg = canon(&BiPoly::from_uni(&g))?;
                Ok((equal_submodules(&p, &cf, &csg), equal_submodules(&p, &cf, &cg)))
            });
            let detail = || format!("{} f={f} g={g}", describe(&p));
            match result {
                Ok((eq_sg, eq_g)) => {
                    seen[0][eq_sg as usize] = true;
                    seen[1][eq_g as usize] = true;
                    sg.record(crit_sg == eq_sg, || format!("{}: criterion {crit_sg}, equality {eq_sg}", detail()));
                    g_form.record(crit_g == eq_g, || format!("{}: criterion {crit_g}, equality {eq_g}", detail()));
                }
                Err(e) => {
                    sg.record(false, || format!("{}: {e}", detail()));
                    g_form.record(false, || format!("{}: {e}", detail()));
                }
            }
        }
    }
    let mut coverage = CheckReport::new("both outcomes of each criterion occur");
    coverage.record(seen.iter().flatten().all(|&b| b), || format!("outcomes seen {seen:?}"));
    vec![oracle, sg, g_form, coverage]
}

/// A polynomial whose s-coefficients are mostly multiples of `g`.
fn near_multiple(rng: &mut StdRng, g: &UniPoly) -> BiPoly {
    loop {
        let n = rng.gen_range(0..=2);
        let coeffs: Vec<UniPoly> = (0..=n)
            .map(|i| {
                let base = match rng.gen_range(0..4) {
                    0 => UniPoly::zero(),
                    1 => UniPoly::one(),
                    2 => UniPoly::linear(&Rational::from_int(rng.gen_range(-2..=2))),
                    _ => UniPoly::constant(Rational::from_int(rng.gen_range(2..=4))),
                };
                let mut c = g * &base;
                if i == 0 && rng.gen_bool(0.5) {
                    c = c.shift_up(1);
                }
                if rng.gen_bool(0.1) {
                    c = &c + &UniPoly::one();
                }
                c
            })
            .collect();
        let f = BiPoly::from_s_coeffs(&coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn theta(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let bounds = Bounds::square(8, 4);
    let mut oracle = CheckReport::new("closure = members of the Theta pair (both inclusions)");
    let mut b_divides_a = CheckReport::new("B | A");
    let mut a_divides_hb = CheckReport::new("A | hB");
    let hs = ["t", "t + 1", "t^2", "t^3 - t"];
    for i in 0..100 {
        let p = theta_params(LAMBDA_GRID[i % 3], hs[i % hs.len()]);
        let f = structured(rng);
        match full_closure(&p, &f, bounds) {
            Ok(span) => record_canonical(&mut oracle, &p, &f, &span, bounds),
            Err(e) => oracle.record(false, || format!("{} f={f}: {e}", describe(&p))),
        }
        match canonical_cyclic(&p, &f) {
            Ok(CyclicCanon::Theta { a, b }) => {
                b_divides_a.record(b.divides(&a), || format!("{} f={f}: A={a} B={b}", describe(&p)));
                let hb = p.h() * &b;
                a_divides_hb.record(a.divides(&hb), || format!("{} f={f}: A={a} B={b}", describe(&p)));
            }
            other => {
                let msg = format!("{} f={f}: {other:?}", describe(&p));
                b_divides_a.record(false, || msg.clone());
                a_divides_hb.record(false, || msg);
            }
        }
    }
    vec![oracle, b_divides_a, a_divides_hb]
}

/// Runs the literal valuation statement `closure = c^v · box` and the
/// canonical-form comparison on the same closures.
fn valuation_cases(
    cases: impl Iterator<Item = (ModuleParams, BiPoly)>,
    root_of: impl Fn(&ModuleParams) -> Rational,
    literal: impl Fn(u32) -> CyclicCanon,
    literal_name: &str,
) -> Vec<CheckReport> {
    let bounds = Bounds::square(8, 4);
    let mut lit = CheckReport::new(literal_name);
    let mut canon = CheckReport::new("closure = members of canonical_cyclic (corrected forms)");
    for (p, f) in cases {
        let span = match full_closure(&p, &f, bounds) {
            Ok(s) => s,
            Err(e) => {
                lit.record(false, || format!("{} f={f}: {e}", describe(&p)));
                continue;
            }
        };
        let outcome = f
            .valuation(&root_of(&p))
            .map_err(|e| e.to_string())
            .and_then(|v| compare_with(&p, &span, &literal(v), bounds));
        lit.record(outcome.is_ok(), || format!("{} f={f}: {}", describe(&p), outcome.unwrap_err()));
        record_canonical(&mut canon, &p, &f, &span, bounds);
    }
    vec![lit, canon]
}

fn b1_valuation(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let cases: Vec<(ModuleParams, BiPoly)> = (0..100)
        .map(|i| {
            let p = phi("1", LAMBDA_GRID[i % 3], ALPHA_GRID[i % 3], H_GRID[(i / 3) % 5]);
            let f = random::with_valuation(rng, p.alpha(), 3, 6, 3);
            (p, f)
        })
        .collect();
    valuation_cases(
        cases.into_iter(),
        |p| p.alpha().clone(),
        |n| CyclicCanon::B1Phi { n },
        "closure = (t - alpha)^n box, n = valuation at alpha",
    )
}

fn valuation_branches(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let bounds = Bounds::square(8, 4);
    let mut fills = CheckReport::new("b = -1, alpha in {1, -2}: closure fills the box");
    for alpha in ["1", "-2"] {
        for i in 0..50 {
            let p = phi("-1", LAMBDA_GRID[i % 3], alpha, H_GRID[i % 5]);
            let f = random::bipoly(rng, 4, 4, 5);
            fills.record_result(full_closure(&p, &f, bounds).map(|s| s.is_full_box()), || {
                format!("{} f={f}", describe(&p))
            });
        }
    }
    let branches = [("-1", "0"), ("2", ""), ("1/2", "")];
    let cases: Vec<(ModuleParams, BiPoly)> = (0..100)
        .map(|i| {
            let (b, a) = branches[i % 3];
            let alpha = if a.is_empty() { ALPHA_GRID[(i / 3) % 3] } else { a };
            let p = phi(b, LAMBDA_GRID[(i / 9) % 3], alpha, H_GRID[(i / 3) % 5]);
            let f = random::with_valuation(rng, &Rational::zero(), 3, 6, 3);
            (p, f)
        })
        .collect();
    let mut out = vec![fills];
    out.extend(valuation_cases(
        cases.into_iter(),
        |_| Rational::zero(),
        |i| CyclicCanon::TVal { i },
        "closure = t^i box, i = valuation at 0",
    ));
    out
}

// ---------------------------------------------------------------- 8, 9

fn virasoro(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let mut pairs = CheckReport::new("minimal_pair = cone search, k in [2,5], w in [0,40]");
    for k in 2..=5 {
        for w in 0..=40 {
            let closed = minimal_pair(k, w).ok().flatten();
            let search = minimal_pair_by_search(k, w);
            pairs.record(closed == search, || format!("k={k} w={w}: {closed:?} vs {search:?}"));
        }
    }

    let mut triangular = CheckReport::new("psi_basis t-part triangular (independent)");
    let mut spans = CheckReport::new("psi_basis spans exactly the psi_member-positive subspace at bound 12");
    let mut stable = CheckReport::new("maximal_psi_check stable for deg f >= 1");
    for h in ["t^2", "t^2 + 1", "t^3 - t", "t^3"] {
        for alpha in ["1", "-2"] {
            let p = phi("-1", "1", alpha, h);
            for f in ["t", "t + 1", "t^2 - 1", "t^3"] {
                let fu = up(f);
                let detail = || format!("{} f={f}", describe(&p));
                match psi_basis_check(&p, &fu, 12) {
                    Ok(bc) => {
                        triangular.record(bc.triangular, detail);
                        spans.record(bc.spans() && bc.family_dim == bc.member_dim, || {
                            format!(
                                "{}: family dim {}, member dim {}, missing {:?}",
                                detail(),
                                bc.family_dim,
                                bc.member_dim,
                                bc.missing.map(|m| m.to_string())
                            )
                        });
                    }
                    Err(e) => triangular.record(false, || format!("{}: {e}", detail())),
                }
                match maximal_psi_check(&p, &fu, 10, 2) {
                    Ok(v) => stable.record(v.stable, || {
                        let w = v.witness.expect("unstable verdicts carry a witness");
                        format!("{}: S^{} {} = {}", detail(), w.j, w.element, w.image)
                    }),
                    Err(e) => stable.record(false, || format!("{}: {e}", detail())),
                }
            }
        }
    }

    let mut anomaly = CheckReport::new("maximal_psi_check reports a witness for f = 1, h = t^2, alpha = 1");
    let p = phi("-1", "1", "1", "t^2");
    anomaly.record_result(
        maximal_psi_check(&p, &UniPoly::one(), 10, 2).map(|v| !v.stable && v.witness.is_some()),
        || "no witness".into(),
    );

    let mut probes = CheckReport::new("probes reach 1 exactly where vir_irreducible holds");
    let hs = ["5", "t + 1", "t^2", "t^3 - t"];
    let bounds = Bounds::square(8, 4);
    for b in ["-1", "0", "1", "2"] {
        for alpha in ["0", "1"] {
            for h in hs {
                let p = phi(b, "1", alpha, h);
                let seeds: Vec<BiPoly> = (0..3).map(|_| random::bipoly(rng, 3, 3, 4)).collect();
                let outcome = (|| -> Result<(bool, bool), Error> {
                    let mut reached = true;
                    for s in &seeds {
                        reached &= reach_one_probe(&p, s, bounds)?;
                    }
                    let one = closure_truncated(&p, &[BiPoly::one()], OperatorSet::VirasoroOnly, bounds)?;
                    Ok((vir_irreducible(&p)?, reached && one.is_full_box()))
                })();
                probes.record_result(outcome.map(|(pred, got)| pred == got), || {
                    format!("{}: predicted {:?}", describe(&p), vir_irreducible(&p).ok())
                });
            }
        }
    }

    let mut proper = CheckReport::new("psi_member(f = t, 1, 12) is false on the (-1, !=0, deg 2) cell");
    for h in ["t^2", "t^2 + 1"] {
        let p = phi("-1", "1", "1", h);
        proper.record_result(psi_member(&p, &UniPoly::t(), &BiPoly::one(), 12).map(|m| !m), || {
            format!("{}: 1 is a member", describe(&p))
        });
    }

    let mut irreducible = CheckReport::new("vir_irreducible cell reaches 1 from 50 seeds (box 12)");
    let p = phi("-1", "1", "1", "t + 1");
    for _ in 0..50 {
        let s = random::bipoly(rng, 4, 4, 5);
        irreducible.record_result(reach_one_probe(&p, &s, Bounds::square(12, 4)), || format!("seed {s}"));
    }

    vec![pairs, triangular, spans, stable, anomaly, probes, proper, irreducible]
}

fn finite_degree(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let bounds = Bounds::square(8, 4);
    let mut check = CheckReport::new("t-degrees of univariate closure members occur in the seed");
    for b in ["0", "2"] {
        for i in 0..50 {
            let p = phi(b, LAMBDA_GRID[i % 3], "0", ["5", "-2", "1/3"][i % 3]);
            let seed = random::bipoly(rng, 3, 5, 4);
            let support: std::collections::BTreeSet<u32> = seed.terms().map(|((_, c), _)| c).collect();
            check.record_result(
                finite_degree_profile(&p, &seed, bounds).map(|d| d.is_subset(&support)),
                || format!("{} seed={seed}", describe(&p)),
            );
        }
    }
    vec![check]
}

// ---------------------------------------------------------------- 10

fn slot(lambda: &str, alpha: &str, h: &str) -> ModuleParams {
    phi("-1", lambda, alpha, h)
}

fn tensor_params(rng: &mut StdRng, n: usize) -> TensorParams {
    let lambdas = ["1", "2", "1/3", "-1", "3"];
    let alphas = ["1", "-2", "1/2"];
    let hs = ["t", "t + 1", "2*t - 3"];
    let start = rng.gen_range(0..lambdas.len());
    let slots = (0..n)
        .map(|k| {
            slot(
                lambdas[(start + k) % lambdas.len()],
                alphas[rng.gen_range(0..alphas.len())],
                hs[rng.gen_range(0..hs.len())],
            )
        })
        .collect();
    TensorParams::new(slots).expect("distinct nodes")
}

fn tensor(_: &SuiteConfig, rng: &mut StdRng) -> Vec<CheckReport> {
    let mut bracket = CheckReport::new("[L_a, L_b] u = (b - a) L_{a+b} u on tensor products");
    for n in 1..=3 {
        for _ in 0..6 {
            let tp = tensor_params(rng, n);
            let u = random::tensor_elem(rng, n, if n == 3 { 2 } else { 3 }, 4);
            for a in -2..=2i64 {
                for b in -2..=2i64 {
                    let outcome = (|| -> Result<bool, Error> {
                        let lhs = tensor_act_l(&tp, a, &tensor_act_l(&tp, b, &u)?)?
                            - tensor_act_l(&tp, b, &tensor_act_l(&tp, a, &u)?)?;
                        let rhs = tensor_act_l(&tp, a + b, &u)?.scale(&Rational::from_int(b - a));
                        Ok(lhs == rhs)
                    })();
                    bracket.record_result(outcome, || format!("n={n} a={a} b={b} u={u}"));
                }
            }
        }
    }

    let mut single = CheckReport::new("one slot: tensor_act_l = act_l");
    for _ in 0..20 {
        let tp = tensor_params(rng, 1);
        let f = random::bipoly(rng, 3, 3, 4);
        let m = rng.gen_range(-3..=3);
        let lhs = tensor_act_l(&tp, m, &TensorElem::pure(std::slice::from_ref(&f)));
        let rhs = TensorElem::pure(&[act_l(&tp.slots()[0], m, &f)]);
        single.record(lhs.as_ref() == Ok(&rhs), || format!("m={m} f={f}"));
    }

    let mut roundtrip = CheckReport::new("vandermonde_extract of L_m u = slot_apply components");
    for n in 2..=3usize {
        for jmax in 2..=5u32 {
            for _ in 0..3 {
                let tp = tensor_params(rng, n);
                let u = random::tensor_elem(rng, n, jmax - 2, 3);
                let outcome = (|| -> Result<bool, Error> {
                    let comps = vandermonde_extract(&tp, &default_samples(&tp, &u, jmax)?, jmax)?;
                    for k in 1..=n {
                        for j in 0..=jmax {
                            if comps.get(k, j) != Some(&slot_apply(&tp, k, j, &u)?) {
                                return Ok(false);
                            }
                        }
                    }
                    // a shifted window with extra samples gives the same answer
                    let window = sample_window(&tp, &u, -2, n * (jmax as usize + 1) + 2)?;
                    Ok(vandermonde_extract(&tp, &window, jmax)? == comps)
                })();
                roundtrip.record_result(outcome, || format!("n={n} jmax={jmax} u={u}"));
            }
        }
    }

    let mut repeated = CheckReport::new("repeated nodes are reported, not solved");
    let tp = TensorParams::new_unchecked(vec![slot("2", "1", "t"), slot("2", "1", "t + 1")]);
    let u = TensorElem::parse("s1*t2 + t1", 2).expect("literal");
    let outcome = default_samples(&tp, &u, 2).and_then(|s| vandermonde_extract(&tp, &s, 2));
    repeated.record(matches!(outcome, Err(Error::RepeatedNode(_))), || format!("{outcome:?}"));

    let mut reach = CheckReport::new("reach_one_tensor reaches 1 (x) 1 from 10 seeds");
    let tp = TensorParams::new(vec![slot("1", "1", "t"), slot("2", "1", "t + 1")]).expect("distinct nodes");
    let bounds = Bounds::square(10, 4);
    for _ in 0..10 {
        let seed = random::tensor_elem(rng, 2, 3, 4);
        reach.record_result(reach_one_tensor(&tp, &seed, bounds, 10).map(|r| r.outcome.reached()), || {
            format!("seed {seed}")
        });
    }

    let mut invariants = CheckReport::new("extract_invariants = stored (eta, alpha eta, h(alpha))");
    for l in ["1", "2", "1/3"] {
        for a in ["1", "-2", "1/2"] {
            for h in ["t", "t + 1", "2*t - 3"] {
                let p = slot(l, a, h);
                let outcome = (|| -> Result<bool, Error> {
                    let got = extract_invariants(&p)?;
                    let other = extract_invariants_with(&p, (2, 5), (-1, 3))?;
                    let eta = p.h().coeff(1);
                    let direct = (eta.clone(), p.alpha() * &eta, p.h().eval(p.alpha()));
                    Ok(got == stored_invariants(&p)?
                        && got == other
                        && (got.eta.clone(), got.alpha_eta.clone(), got.h_alpha.clone()) == direct)
                })();
                invariants.record_result(outcome, || describe(&p));
            }
        }
    }
    vec![bracket, single, roundtrip, repeated, reach, invariants]
}
