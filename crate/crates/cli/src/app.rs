//! Argument parsing and dispatch for the `vircalc` binary.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use vircalc::action::{act_l, act_w, bracket_check, expand_check, op_s, op_t, ModuleParams, StructureConstants, Verdict};
use vircalc::submod::{
    canonical_cyclic, equal_submodules, maximal_chain, maximal_submodules, member, oracle_check, Bounds,
};
use vircalc::tensor::{
    default_samples, extract_invariants, reach_one_tensor, reach_one_tensor_blind, sample_window,
    stored_invariants, tensor_act_l, vandermonde_extract, TensorElem, TensorParams,
};
use vircalc::virsub::{
    finite_degree_profile, maximal_psi_check, psi_basis, psi_member, reach_one_probe, vir_irreducible,
};
use vircalc::{BiPoly, Error, Rational, UniPoly};

use crate::suites::{self, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "vircalc", version, about = "Exact computations with the non-weight modules Phi(lambda, alpha, h) and Theta(lambda, h)")]
pub struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum KindArg {
    Phi,
    Theta,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Generator {
    L,
    W,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    S,
    T,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_uni(s: &str) -> Result<UniPoly, String> {
    s.parse::<UniPoly>().map_err(|e| e.to_string())
}

fn parse_bi(s: &str) -> Result<BiPoly, String> {
    s.parse::<BiPoly>().map_err(|e| e.to_string())
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    #[arg(long, value_enum, default_value = "phi")]
    kind: KindArg,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    b: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_rational)]
    lambda: Rational,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_uni)]
    h: UniPoly,
}

impl ParamArgs {
    fn params(&self) -> Result<ModuleParams, Error> {
        match self.kind {
            KindArg::Phi => ModuleParams::phi(self.b.clone(), self.lambda.clone(), self.alpha.clone(), self.h.clone()),
            KindArg::Theta => ModuleParams::theta(self.lambda.clone(), self.h.clone()),
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct BoundArgs {
    #[arg(long, default_value_t = 8)]
    sbound: u32,
    #[arg(long, default_value_t = 8)]
    tbound: u32,
    #[arg(long, default_value_t = 4)]
    pad: u32,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds::new(self.sbound, self.tbound, self.pad)
    }
}

#[derive(Args, Debug, Clone)]
struct SlotArgs {
    /// One tensor factor as "lambda,alpha,h"; repeat for each slot.
    #[arg(long = "slot", required = true, allow_hyphen_values = true)]
    slots: Vec<String>,
}

impl SlotArgs {
    fn params(&self) -> Result<TensorParams, Error> {
        let slots = self
            .slots
            .iter()
            .map(|s| {
                let parts: Vec<&str> = s.split(',').collect();
                let [l, a, h] = parts[..] else {
                    return Err(Error::InvalidParams(format!("slot {s:?} is not lambda,alpha,h")));
                };
                ModuleParams::phi(Rational::from_int(-1), l.trim().parse()?, a.trim().parse()?, h.parse()?)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        TensorParams::new(slots)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply L_m or W_m.
    Act {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_enum, default_value = "l")]
        which: Generator,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
    },
    /// Apply S^j or T^j (S_Theta^j for --kind theta).
    Op {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_enum, default_value = "s")]
        which: Family,
        #[arg(long)]
        j: u32,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
    },
    /// Check L_m and W_m against their expansions in S^j and T^j.
    ExpandCheck {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
    },
    /// Check the brackets [L_n, L_m], [L_n, W_m], [W_n, W_m] on f.
    BracketCheck {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
    },
    /// Canonical form of the submodule generated by f.
    Canon {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
    },
    /// Whether g lies in the submodule generated by f.
    Member {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        #[arg(long, value_parser = parse_bi)]
        g: BiPoly,
    },
    /// Whether f and g generate the same submodule.
    Equal {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        #[arg(long, value_parser = parse_bi)]
        g: BiPoly,
    },
    /// Maximal submodules of the submodule generated by f.
    Maximal {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        /// Irreducible factor to use; repeatable.
        #[arg(long = "irr", value_parser = parse_uni)]
        irreducibles: Vec<UniPoly>,
    },
    /// A descending chain of maximal submodules.
    Chain {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long = "irr", value_parser = parse_uni)]
        irreducibles: Vec<UniPoly>,
    },
    /// Compare the closure of f with its canonical form inside the box.
    Oracle {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// The minimal-pair basis of Psi_f.
    PsiBasis {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_uni)]
        f: UniPoly,
        #[arg(long, default_value_t = 8)]
        tbound: u32,
        #[arg(long, default_value_t = 0)]
        sbound: u32,
    },
    /// Whether g lies in Psi_f, up to t-degree --tbound.
    PsiMember {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_uni)]
        f: UniPoly,
        #[arg(long, value_parser = parse_bi)]
        g: BiPoly,
        #[arg(long, default_value_t = 8)]
        tbound: u32,
    },
    /// Stability of the basis of Psi_f without f; exits 1 on a violation.
    MaximalPsi {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_uni)]
        f: UniPoly,
        #[arg(long, default_value_t = 8)]
        tbound: u32,
        #[arg(long, default_value_t = 2)]
        sbound: u32,
    },
    /// Irreducibility over the Virasoro algebra.
    Irreducible {
        #[command(flatten)]
        p: ParamArgs,
    },
    /// Whether 1 lies in the truncated Virasoro closure of f.
    Probe {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// t-degrees of the univariate members of the Virasoro closure of f.
    DegreeProfile {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_parser = parse_bi)]
        f: BiPoly,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// L_m on a tensor product (variables s1, t1, s2, t2, ...).
    TensorAct {
        #[command(flatten)]
        slots: SlotArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        f: String,
    },
    /// Extract the components u_{k,j} from samples of L_m u.
    TensorExtract {
        #[command(flatten)]
        slots: SlotArgs,
        #[arg(long)]
        f: String,
        /// Largest j; defaults to the least admissible value.
        #[arg(long)]
        j: Option<u32>,
        /// First sample index m.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        start: i64,
    },
    /// Reduce f to a multiple of 1 (x) ... (x) 1.
    TensorProbe {
        #[command(flatten)]
        slots: SlotArgs,
        #[arg(long)]
        f: String,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, default_value_t = 10)]
        cap: u32,
        /// Use the truncated closure instead of the reduction.
        #[arg(long)]
        blind: bool,
    },
    /// Recover (eta, alpha*eta, h(alpha)) of each slot from the action.
    TensorInvariants {
        #[command(flatten)]
        slots: SlotArgs,
    },
    /// Run the verification suites.
    Selftest {
        /// Suite name or criterion number; repeatable. Default: all.
        #[arg(long)]
        suite: Vec<String>,
        /// Use a wrong [L_n, L_m] structure constant.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, env = "VIRCALC_SEED")]
        seed: Option<u64>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
}

/// A command result: its JSON form, its plain-text form, and whether the
/// mathematics disagreed.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub falsified: bool,
}

impl Outcome {
    fn plain<T: Serialize + ?Sized>(value: &T, text: impl Into<String>) -> Self {
        Outcome {
            json: serde_json::to_value(value).expect("serializable"),
            text: text.into(),
            falsified: false,
        }
    }

    /// Results whose text form is their compact JSON.
    fn structured<T: Serialize + ?Sized>(value: &T) -> Self {
        let json = serde_json::to_value(value).expect("serializable");
        let text = json.to_string();
        Outcome {
            json,
            text,
            falsified: false,
        }
    }

    fn falsified_if(mut self, bad: bool) -> Self {
        self.falsified = bad;
        self
    }
}

fn verdict_outcome(v: &Verdict) -> Outcome {
    let text = v
        .identities
        .iter()
        .map(|i| {
            if i.holds() {
                format!("{}: ok", i.name)
            } else {
                format!("{}: FAILED, lhs - rhs = {}", i.name, i.witness())
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "holds": v.holds(),
        "identities": v.identities.iter().map(|i| json!({
            "name": i.name, "holds": i.holds(), "lhs": i.lhs, "rhs": i.rhs,
        })).collect::<Vec<_>>(),
    });
    Outcome {
        json,
        text,
        falsified: !v.holds(),
    }
}

fn tensor(text: &str, tp: &TensorParams) -> Result<TensorElem, Error> {
    TensorElem::parse(text, tp.len())
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Act { p, which, m, f } => {
            let params = p.params()?;
            let out = match which {
                Generator::L => act_l(&params, m, &f),
                Generator::W => act_w(&params, m, &f),
            };
            Outcome::plain(&out, out.to_string())
        }
        Command::Op { p, which, j, f } => {
            let params = p.params()?;
            let out = match which {
                Family::S => op_s(&params, j, &f),
                Family::T => op_t(&params, j, &f),
            };
            Outcome::plain(&out, out.to_string())
        }
        Command::ExpandCheck { p, m, f } => verdict_outcome(&expand_check(&p.params()?, m, &f)),
        Command::BracketCheck { p, n, m, f } => {
            verdict_outcome(&bracket_check(&p.params()?, n, m, &f, &StructureConstants::default()))
        }
        Command::Canon { p, f } => Outcome::structured(&canonical_cyclic(&p.params()?, &f)?),
        Command::Member { p, f, g } => {
            let params = p.params()?;
            let is = member(&params, &canonical_cyclic(&params, &f)?, &g);
            Outcome::plain(&is, is.to_string())
        }
        Command::Equal { p, f, g } => {
            let params = p.params()?;
            let is = equal_submodules(&params, &canonical_cyclic(&params, &f)?, &canonical_cyclic(&params, &g)?);
            Outcome::plain(&is, is.to_string())
        }
        Command::Maximal { p, f, irreducibles } => {
            let params = p.params()?;
            let canon = canonical_cyclic(&params, &f)?;
            Outcome::structured(&maximal_submodules(&params, &canon, &irreducibles)?)
        }
        Command::Chain {
            p,
            f,
            depth,
            irreducibles,
        } => {
            let params = p.params()?;
            let canon = canonical_cyclic(&params, &f)?;
            Outcome::structured(&maximal_chain(&params, &canon, depth, &irreducibles)?)
        }
        Command::Oracle { p, f, bounds } => {
            let report = oracle_check(&p.params()?, &f, bounds.bounds())?;
            let bad = !report.agrees();
            Outcome::structured(&report).falsified_if(bad)
        }
        Command::PsiBasis { p, f, tbound, sbound } => {
            let basis = psi_basis(&p.params()?, &f, tbound, sbound)?;
            let text = basis
                .elements
                .iter()
                .map(|e| format!("l={} n={} i={}: {}", e.l, e.pair.n, e.pair.i, e.poly))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::plain(&basis, text)
        }
        Command::PsiMember { p, f, g, tbound } => {
            let is = psi_member(&p.params()?, &f, &g, tbound)?;
            Outcome::plain(&is, is.to_string())
        }
        Command::MaximalPsi { p, f, tbound, sbound } => {
            let verdict = maximal_psi_check(&p.params()?, &f, tbound, sbound)?;
            let text = match &verdict.witness {
                None => format!("stable ({} images checked)", verdict.checked),
                Some(w) => format!("violation: S^{} ({}) = {}", w.j, w.element, w.image),
            };
            let bad = !verdict.stable;
            Outcome::plain(&verdict, text).falsified_if(bad)
        }
        Command::Irreducible { p } => {
            let is = vir_irreducible(&p.params()?)?;
            Outcome::plain(&is, is.to_string())
        }
        Command::Probe { p, f, bounds } => {
            let is = reach_one_probe(&p.params()?, &f, bounds.bounds())?;
            Outcome::plain(&is, is.to_string())
        }
        Command::DegreeProfile { p, f, bounds } => {
            let degrees = finite_degree_profile(&p.params()?, &f, bounds.bounds())?;
            Outcome::structured(&degrees)
        }
        Command::TensorAct { slots, m, f } => {
            let tp = slots.params()?;
            let out = tensor_act_l(&tp, m, &tensor(&f, &tp)?)?;
            Outcome::plain(&out, out.to_string())
        }
        Command::TensorExtract { slots, f, j, start } => {
            let tp = slots.params()?;
            let u = tensor(&f, &tp)?;
            let needed = (1..=tp.len()).filter_map(|k| u.deg_s(k)).max().map_or(0, |d| d + 2);
            let jmax = j.unwrap_or(needed);
            let samples = if start == 1 {
                default_samples(&tp, &u, jmax)?
            } else {
                sample_window(&tp, &u, start, tp.len() * (jmax as usize + 1))?
            };
            let comps = vandermonde_extract(&tp, &samples, jmax)?;
            let text = comps
                .iter()
                .filter(|(_, _, v)| !v.is_zero())
                .map(|(k, j, v)| format!("u[{k},{j}] = {v}"))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::plain(&comps, text)
        }
        Command::TensorProbe {
            slots,
            f,
            bounds,
            cap,
            blind,
        } => {
            let tp = slots.params()?;
            let u = tensor(&f, &tp)?;
            if blind {
                let is = reach_one_tensor_blind(&tp, &u, bounds.bounds())?;
                Outcome::plain(&is, is.to_string())
            } else {
                let probe = reach_one_tensor(&tp, &u, bounds.bounds(), cap)?;
                let json = serde_json::to_value(&probe).expect("serializable");
                Outcome {
                    text: json["outcome"].as_str().unwrap_or_default().to_string(),
                    json,
                    falsified: false,
                }
            }
        }
        Command::TensorInvariants { slots } => {
            let tp = slots.params()?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            let mut bad = false;
            for (k, p) in tp.slots().iter().enumerate() {
                let got = extract_invariants(p)?;
                let stored = stored_invariants(p)?;
                bad |= got != stored;
                lines.push(format!(
                    "slot {}: eta = {}, alpha*eta = {}, h(alpha) = {}{}",
                    k + 1,
                    got.eta,
                    got.alpha_eta,
                    got.h_alpha,
                    if got == stored { "" } else { " (differs from the parameters)" }
                ));
                rows.push(json!({ "slot": k + 1, "extracted": got, "stored": stored }));
            }
            Outcome::plain(&rows, lines.join("\n")).falsified_if(bad)
        }
        Command::Selftest {
            suite,
            inject_fault,
            seed,
            list,
        } => return Ok(selftest(suite, inject_fault, seed, list)),
    })
}

fn selftest(keys: Vec<String>, fault: bool, seed: Option<u64>, list: bool) -> Outcome {
    if list {
        let rows: Vec<Value> = suites::SUITES
            .iter()
            .map(|s| json!({ "criterion": s.criterion, "name": s.name, "summary": s.summary }))
            .collect();
        let text = suites::SUITES
            .iter()
            .map(|s| format!("{:>2}  {:<15} {}", s.criterion, s.name, s.summary))
            .collect::<Vec<_>>()
            .join("\n");
        return Outcome::plain(&rows, text);
    }
    let cfg = SuiteConfig {
        seed: seed.unwrap_or_else(crate::random::env_seed),
        fault,
    };
    let chosen: Vec<_> = if keys.is_empty() {
        suites::SUITES.iter().collect()
    } else {
        keys.iter().filter_map(|k| suites::find(k)).collect()
    };
    let reports: Vec<_> = chosen.iter().map(|s| suites::run(s, &cfg)).collect();
    let mut lines = Vec::new();
    for r in &reports {
        lines.push(format!(
            "{} {:>2} {:<15} {} cases, {} failures, {:.1} s",
            if r.passed { "PASS" } else { "FAIL" },
            r.criterion,
            r.name,
            r.cases,
            r.failures,
            r.elapsed_ms as f64 / 1000.0
        ));
        for c in r.checks.iter().filter(|c| !c.passed()) {
            lines.push(format!("       {}: {}/{} failed", c.name, c.failures, c.cases));
            for e in &c.examples {
                lines.push(format!("         {e}"));
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    lines.push(format!("selftest: {passed}/{} suites passed (seed {})", reports.len(), cfg.seed));
    Outcome::plain(&reports, lines.join("\n")).falsified_if(passed != reports.len())
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::BrokenInvariant(_) | Error::Dichotomy(_) => EXIT_FALSIFIED,
        _ => EXIT_USAGE,
    }
}

/// What a run of the command line produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Execution {
    fn new(code: i32, stdout: String, stderr: String) -> Self {
        Execution { code, stdout, stderr }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution::new(EXIT_USAGE, String::new(), text)
            } else {
                Execution::new(EXIT_OK, text, String::new())
            };
        }
    };
    if let Command::Selftest { suite, .. } = &cli.command {
        if let Some(bad) = suite.iter().find(|k| suites::find(k).is_none()) {
            let msg = format!("error: unknown suite {bad:?}; see `vircalc selftest --list`\n");
            return Execution::new(EXIT_USAGE, String::new(), msg);
        }
    }
    match dispatch(cli.command) {
        Ok(out) => {
            let text = if cli.json { out.json.to_string() } else { out.text };
            let code = if out.falsified { EXIT_FALSIFIED } else { EXIT_OK };
            Execution::new(code, format!("{text}\n"), String::new())
        }
        Err(e) => Execution::new(error_code(&e), String::new(), format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use vircalc::action::ModuleParams;
    use vircalc::submod::CyclicCanon;
    use vircalc::tensor::{default_samples, tensor_act_l, vandermonde_extract};
    use vircalc::virsub::PsiBasis;

    fn run(args: &[&str]) -> Execution {
        execute(std::iter::once("vircalc").chain(args.iter().copied()))
    }

    fn ok(args: &[&str]) -> String {
        let out = run(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        out.stdout.trim_end().to_string()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn printer_parser_round_trip() {
        let mut rng = random::rng(random::env_seed(), 11);
        for _ in 0..1000 {
            let p = random::bipoly_wide(&mut rng);
            let text = p.to_string();
            assert_eq!(text.parse::<BiPoly>().unwrap(), p, "{text}");
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(serde_json::from_str::<BiPoly>(&json).unwrap(), p);
        }
        for _ in 0..200 {
            let u = random::unipoly(&mut rng, 9, 6);
            assert_eq!(u.to_string().parse::<UniPoly>().unwrap(), u);
            let e = random::tensor_elem(&mut rng, 3, 4, 6);
            assert_eq!(TensorElem::parse(&e.to_string(), 3).unwrap(), e);
            let json = serde_json::to_string(&e).unwrap();
            assert_eq!(serde_json::from_str::<TensorElem>(&json).unwrap(), e);
        }
    }

    #[test]
    fn outputs_reparse_to_library_values() {
        let p = ModuleParams::phi(r("-1"), r("2"), r("1"), "t^2 + 1".parse().unwrap()).unwrap();
        let f: BiPoly = "s^2*t - 3*s + 1/2".parse().unwrap();
        let base = ["--b", "-1", "--lambda", "2", "--alpha", "1", "--h", "t^2 + 1", "--f", "s^2*t - 3*s + 1/2"];
        let with = |extra: &[&str]| -> Vec<String> {
            extra.iter().chain(base.iter()).map(|s| s.to_string()).collect()
        };
        let run_owned = |args: Vec<String>| ok(&args.iter().map(String::as_str).collect::<Vec<_>>());

        let text = run_owned(with(&["act", "--m", "-3"]));
        assert_eq!(text.parse::<BiPoly>().unwrap(), act_l(&p, -3, &f));
        let json = run_owned(with(&["--json", "act", "--which", "w", "--m", "2"]));
        assert_eq!(serde_json::from_str::<BiPoly>(&json).unwrap(), act_w(&p, 2, &f));
        let text = run_owned(with(&["op", "--j", "2"]));
        assert_eq!(text.parse::<BiPoly>().unwrap(), op_s(&p, 2, &f));

        let q = ModuleParams::phi(r("0"), r("1"), r("0"), "t".parse().unwrap()).unwrap();
        let g: BiPoly = "s*t^2 - t^3 + s^2*t".parse().unwrap();
        let canon: CyclicCanon =
            serde_json::from_str(&ok(&["canon", "--h", "t", "--f", "s*t^2 - t^3 + s^2*t"])).unwrap();
        assert_eq!(canon, canonical_cyclic(&q, &g).unwrap());
        let maximal: Vec<CyclicCanon> = serde_json::from_str(&ok(&[
            "maximal", "--h", "t", "--f", "s*t^2 - t^3 + s^2*t", "--irr", "t", "--irr", "t + 2",
        ]))
        .unwrap();
        let irr: Vec<UniPoly> = vec!["t".parse().unwrap(), "t + 2".parse().unwrap()];
        assert_eq!(maximal, maximal_submodules(&q, &canon, &irr).unwrap());

        let basis: PsiBasis = serde_json::from_str(&ok(&[
            "--json", "psi-basis", "--b", "-1", "--alpha", "1", "--h", "t^2", "--f", "t", "--tbound", "7", "--sbound", "1",
        ]))
        .unwrap();
        let k = ModuleParams::phi(r("-1"), r("1"), r("1"), "t^2".parse().unwrap()).unwrap();
        assert_eq!(basis, psi_basis(&k, &"t".parse().unwrap(), 7, 1).unwrap());

        let slots = ["--slot", "1,1,t", "--slot", "2,1,t + 1"];
        let tp = TensorParams::new(vec![
            ModuleParams::phi(r("-1"), r("1"), r("1"), "t".parse().unwrap()).unwrap(),
            ModuleParams::phi(r("-1"), r("2"), r("1"), "t + 1".parse().unwrap()).unwrap(),
        ])
        .unwrap();
        let u = TensorElem::parse("s1*t1*t2^2 - 2*s2", 2).unwrap();
        let mut args = vec!["tensor-act", "--m", "-2", "--f", "s1*t1*t2^2 - 2*s2"];
        args.extend(slots);
        assert_eq!(TensorElem::parse(&ok(&args), 2).unwrap(), tensor_act_l(&tp, -2, &u).unwrap());
        let mut args = vec!["--json", "tensor-extract", "--f", "s1*t1*t2^2 - 2*s2"];
        args.extend(slots);
        let got: Value = serde_json::from_str(&ok(&args)).unwrap();
        let comps = vandermonde_extract(&tp, &default_samples(&tp, &u, 3).unwrap(), 3).unwrap();
        assert_eq!(got, serde_json::to_value(&comps).unwrap());
    }

    #[test]
    fn selftest_fault_injection() {
        assert_eq!(run(&["selftest", "--suite", "specialization"]).code, 0);
        let faulty = run(&["selftest", "--suite", "brackets", "--inject-fault"]);
        assert_eq!(faulty.code, 1);
        assert!(faulty.stdout.contains("FAIL  1 brackets"));
        let json = run(&["--json", "selftest", "--suite", "3", "--suite", "tensor"]);
        let reports: Value = serde_json::from_str(&json.stdout).unwrap();
        assert_eq!(reports.as_array().map(Vec::len), Some(2));
        assert!(reports.as_array().unwrap().iter().all(|r| r["passed"] == Value::Bool(true)));
    }
}
