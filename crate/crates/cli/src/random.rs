//! Random inputs for the self-test suites.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use vircalc::tensor::TensorElem;
use vircalc::{BiPoly, Rational, UniPoly};

/// Seed from `VIRCALC_SEED`, or a fixed default.
pub fn env_seed() -> u64 {
    std::env::var("VIRCALC_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0x5eed_2024)
}

pub fn rng(seed: u64, stream: u64) -> StdRng {
    StdRng::seed_from_u64(seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn coeff(rng: &mut StdRng) -> Rational {
    let n = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    if rng.gen_bool(0.15) {
        Rational::new(n, *[2i64, 3].choose(rng).expect("nonempty")).expect("nonzero den")
    } else {
        Rational::from_int(n)
    }
}

/// A nonzero polynomial with up to `max_terms` terms and bidegree at most
/// `(s_max, t_max)`.
pub fn bipoly(rng: &mut StdRng, s_max: u32, t_max: u32, max_terms: usize) -> BiPoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let p = BiPoly::from_terms((0..n).map(|_| {
            let a = rng.gen_range(0..=s_max);
            let c = rng.gen_range(0..=t_max);
            ((a, c), coeff(rng))
        }));
        if !p.is_zero() {
            return p;
        }
    }
}

/// Like [`bipoly`] but possibly zero, with arbitrary coefficient sizes;
/// used for the printer/parser round trip.
pub fn bipoly_wide(rng: &mut StdRng) -> BiPoly {
    let n = rng.gen_range(0..=7);
    BiPoly::from_terms((0..n).map(|_| {
        let a = rng.gen_range(0..=6);
        let c = rng.gen_range(0..=6);
        let num = rng.gen_range(-1000i64..=1000);
        let den = rng.gen_range(1i64..=60);
        ((a, c), Rational::new(num, den).expect("nonzero den"))
    }))
}

pub fn unipoly(rng: &mut StdRng, t_max: u32, max_terms: usize) -> UniPoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let p = UniPoly::from_terms((0..n).map(|_| (rng.gen_range(0..=t_max), coeff(rng))));
        if !p.is_zero() {
            return p;
        }
    }
}

/// `(t − r)^v · q` with `v ≤ max_val` and `q` random, so that valuations
/// at `r` are not almost always zero.
pub fn with_valuation(rng: &mut StdRng, root: &Rational, s_max: u32, t_max: u32, max_val: u32) -> BiPoly {
    let v = rng.gen_range(0..=max_val);
    let q = bipoly(rng, s_max, t_max.saturating_sub(v), 4);
    q.mul_uni(&UniPoly::linear(root).pow(v))
}

/// A monic product of up to `max_factors` factors from `t, t − 1, t + 2`.
pub fn split_monic(rng: &mut StdRng, max_factors: usize) -> UniPoly {
    let roots = [0i64, 1, -2];
    let k = rng.gen_range(0..=max_factors);
    (0..k).fold(UniPoly::one(), |acc, _| {
        let r = *roots.choose(rng).expect("nonempty");
        &acc * &UniPoly::linear(&Rational::from_int(r))
    })
}

pub fn tensor_elem(rng: &mut StdRng, slots: usize, max_exp: u32, max_terms: usize) -> TensorElem {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let u = TensorElem::from_terms((0..n).map(|_| {
            let exps: Vec<u32> = (0..2 * slots).map(|_| rng.gen_range(0..=max_exp)).collect();
            (exps, coeff(rng))
        }));
        if !u.is_zero() {
            return u;
        }
    }
}
