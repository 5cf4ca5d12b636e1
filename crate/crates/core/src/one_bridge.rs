//! Invariants of the knots `K(L(p,q); u)`.
//!
//! With the basic sequence `s_j = jq mod p` (`j = 1..=p`), the knot is
//! described by
//!
//! - `psi`: the unique `j` in `[1, p)` with `j*q ≡ u (mod p)`, i.e. `s_psi = u`;
//! - `phi`: the number of `j < psi` with `s_j < u`;
//! - `phi_tilde`: `min{phi, phi - psi + p - u, psi - phi - 1, u - phi - 1}`.
//!
//! When the knot has a longitudinal surgery to `S3`, `phi_tilde` decides
//! whether it is a torus knot (0), toroidal (1) or hyperbolic (>= 2). The
//! existence of such a surgery is only screened through homology here:
//! `r*`-surgery has `|H_1| = |psi*u - (phi + r)*p|`, so `|H_1| = 1` is a
//! necessary condition and nothing more.

use alloc::vec::Vec;

use crate::arith::{floor_sum, gcd, mod_inverse};
use crate::{Error, Result};

/// A validated triple `(p, q, u)` with `p >= 2`, `gcd(p,q) = 1`, `0 < u < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OneBridgeKnotSpec {
    p: i64,
    q: i64,
    u: i64,
}

impl OneBridgeKnotSpec {
    pub fn new(p: i64, q: i64, u: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidInput("knot K(L(p,q);u) needs p >= 2"));
        }
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        if !(0 < u && u < p) {
            return Err(Error::InvalidInput("knot K(L(p,q);u) needs 0 < u < p"));
        }
        Ok(OneBridgeKnotSpec { p, q, u })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn basic_sequence(&self) -> BasicSequence {
        BasicSequence::build(self.p, self.q)
    }

    pub fn psi(&self) -> i64 {
        let inv = mod_inverse(self.q, self.p).expect("coprime by construction");
        crate::arith::mul_mod(self.u, inv, self.p)
    }

    /// Counts `j < psi` with `jq mod p < u` as a difference of floor sums,
    /// without building the sequence.
    pub fn phi(&self) -> i64 {
        let (p, q, u) = (self.p, self.q.rem_euclid(self.p), self.u);
        let n = self.psi() - 1;
        // [jq mod p < u] = floor(jq/p) - floor((jq - u)/p) for 0 < u < p
        let total = floor_sum(n, p, q, q) - floor_sum(n, p, q, q - u);
        total as i64
    }

    /// The four arguments of the minimum defining `phi_tilde`, in the order
    /// `phi`, `phi - psi + p - u`, `psi - phi - 1`, `u - phi - 1`.
    pub fn phi_tilde_terms(&self) -> [i64; 4] {
        let (psi, phi) = (self.psi(), self.phi());
        let (p, u) = (self.p, self.u);
        [phi, phi - psi + p - u, psi - phi - 1, u - phi - 1]
    }

    pub fn phi_tilde(&self) -> i64 {
        *self.phi_tilde_terms().iter().min().unwrap()
    }

    /// Integers `r` with `|psi*u - (phi + r)*p| = 1`, ascending.
    pub fn s3_longitudinal_candidates(&self) -> Vec<i64> {
        let (psi, phi, p, u) = (self.psi(), self.phi(), self.p, self.u);
        let base = psi as i128 * u as i128;
        let mut out: Vec<i64> = [base - 1, base + 1]
            .into_iter()
            .filter(|t| t.rem_euclid(p as i128) == 0)
            .map(|t| (t / p as i128) as i64 - phi)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn classify(&self) -> KnotInvariants {
        let psi = self.psi();
        let phi = self.phi();
        let terms = self.phi_tilde_terms();
        let phi_tilde = *terms.iter().min().unwrap();
        let s3_candidates = self.s3_longitudinal_candidates();
        let classification = if s3_candidates.is_empty() {
            Classification::HypothesisUnverified
        } else {
            match phi_tilde {
                0 => Classification::TorusKnot,
                1 => Classification::Toroidal,
                _ => Classification::Hyperbolic,
            }
        };
        KnotInvariants { psi, phi, phi_tilde, phi_tilde_terms: terms, s3_candidates, classification }
    }
}

/// `s_j = jq mod p` for `j = 1..=p`; stored zero-based, so `values[j-1] = s_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BasicSequence {
    pub p: i64,
    pub q: i64,
    pub values: Vec<i64>,
}

impl BasicSequence {
    fn build(p: i64, q: i64) -> Self {
        let step = q.rem_euclid(p);
        let mut values = Vec::with_capacity(p as usize);
        let mut s = 0i64;
        for _ in 0..p {
            s += step;
            if s >= p {
                s -= p;
            }
            values.push(s);
        }
        BasicSequence { p, q, values }
    }

    /// `s_j`, one-based.
    pub fn get(&self, j: usize) -> i64 {
        self.values[j - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn basic_sequence(p: i64, q: i64) -> Result<BasicSequence> {
    if p < 2 {
        return Err(Error::InvalidInput("basic sequence needs p >= 2"));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(BasicSequence::build(p, q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Classification {
    TorusKnot,
    Toroidal,
    Hyperbolic,
    /// No longitudinal surgery has `|H_1| = 1`, so the classification does not apply.
    HypothesisUnverified,
}

impl core::fmt::Display for Classification {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Classification::TorusKnot => "TorusKnot",
            Classification::Toroidal => "Toroidal",
            Classification::Hyperbolic => "Hyperbolic",
            Classification::HypothesisUnverified => "HypothesisUnverified",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KnotInvariants {
    pub psi: i64,
    pub phi: i64,
    pub phi_tilde: i64,
    pub phi_tilde_terms: [i64; 4],
    pub s3_candidates: Vec<i64>,
    pub classification: Classification,
}

pub fn psi(p: i64, q: i64, u: i64) -> Result<i64> {
    Ok(OneBridgeKnotSpec::new(p, q, u)?.psi())
}

pub fn phi(p: i64, q: i64, u: i64) -> Result<i64> {
    Ok(OneBridgeKnotSpec::new(p, q, u)?.phi())
}

pub fn phi_tilde(p: i64, q: i64, u: i64) -> Result<i64> {
    Ok(OneBridgeKnotSpec::new(p, q, u)?.phi_tilde())
}

pub fn s3_longitudinal_candidates(p: i64, q: i64, u: i64) -> Result<Vec<i64>> {
    Ok(OneBridgeKnotSpec::new(p, q, u)?.s3_longitudinal_candidates())
}

pub fn classify(p: i64, q: i64, u: i64) -> Result<KnotInvariants> {
    Ok(OneBridgeKnotSpec::new(p, q, u)?.classify())
}
