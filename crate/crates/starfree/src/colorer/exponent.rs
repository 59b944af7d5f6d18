//! The exponent ledger: for each star peeled off the pattern, the exponent
//! chosen for that level and the inequality it must satisfy.
//!
//! The closed form is c = max(k+2, max(k+1, k(k+2)+c') + 3), which satisfies
//! x^c - (x-1)^c >= 1 + x^{k+1} + x^{k(k+2)+c'} for all integers x >= 2:
//! with e = max(k+1, k(k+2)+c'), the left side is at least x^{c-1} >= x^{e+2},
//! and the right side is at most 3 x^e <= x^{e+2} for x >= 2.
//! Minimal exponents are a non-goal; determinism and auditability are.

use crate::pattern::StarForest;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// Innermost level: the largest star alone, colored via the degree bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseLevel {
    pub k: u32,
    pub c: u64,
}

/// One peeled star: pattern = (rest with exponent c_prev) + star with k leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelLevel {
    pub k: u32,
    pub c_prev: u64,
    pub c: u64,
}

/// The per-star ledger deriving the final exponent. `peels` runs from the
/// innermost peel outward; `final_c` is the exponent of the whole pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentCertificate {
    pub base: Option<BaseLevel>,
    pub peels: Vec<PeelLevel>,
    pub final_c: u64,
}

fn peel_exponent(k: u64, c_prev: u64) -> u64 {
    (k + 2).max((k + 1).max(k * (k + 2) + c_prev) + 3)
}

/// Exponents for every suffix of the canonical (ascending) star list:
/// entry `i` is the exponent for the pattern `stars[i..]`, entry `m` is 0
/// (empty pattern). The largest star is the innermost base case.
pub fn suffix_exponents(h: &StarForest) -> Vec<u64> {
    let stars = h.stars();
    let m = stars.len();
    let mut exps = vec![0u64; m + 1];
    if m == 0 {
        return exps;
    }
    exps[m - 1] = u64::from(stars[m - 1]).max(1);
    for i in (0..m - 1).rev() {
        exps[i] = peel_exponent(u64::from(stars[i]), exps[i + 1]);
    }
    exps
}

pub fn compute_exponent(h: &StarForest) -> ExponentCertificate {
    let stars = h.stars();
    let exps = suffix_exponents(h);
    let m = stars.len();
    if m == 0 {
        return ExponentCertificate {
            base: None,
            peels: Vec::new(),
            final_c: 0,
        };
    }
    let base = BaseLevel {
        k: stars[m - 1],
        c: exps[m - 1],
    };
    let peels: Vec<PeelLevel> = (0..m - 1)
        .rev()
        .map(|i| PeelLevel {
            k: stars[i],
            c_prev: exps[i + 1],
            c: exps[i],
        })
        .collect();
    ExponentCertificate {
        base: Some(base),
        peels,
        final_c: exps[0],
    }
}

/// Checks x^c - (x-1)^c >= 1 + x^{k+1} + x^{k(k+2)+c_prev} for every integer
/// x in [2, x_max], in exact arithmetic.
pub fn verify_exponent_inequality(k: u32, c_prev: u64, c: u64, x_max: u64) -> bool {
    assert!(x_max >= 2);
    let c32 = u32::try_from(c).expect("exponent fits u32");
    let e1 = k + 1;
    let e2 = u32::try_from(u64::from(k) * (u64::from(k) + 2) + c_prev).expect("exponent fits u32");
    for x in 2..=x_max {
        let xb = BigUint::from(x);
        let lhs = xb.pow(c32) - BigUint::from(x - 1).pow(c32);
        let rhs = BigUint::from(1u32) + xb.pow(e1) + xb.pow(e2);
        if lhs < rhs {
            return false;
        }
    }
    true
}
