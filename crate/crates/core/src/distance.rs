//! Bounds for the surgical distances `d` and `d_H` between lens spaces.
//!
//! Any two distinct lens spaces are one surgery apart, so `d` is 0 or 1 and
//! `d_H` is 1 or 2 whenever `d = 1`. The engine narrows that interval with
//! the known obstructions involving `S3`, and reports pairs reachable by the
//! braid-closure families as witnesses for `d_H = 1`. Those witnesses are
//! only asserted: hyperbolicity of the relevant knot is guaranteed above an
//! unknown threshold unless a degeneracy slope is supplied and the distance
//! criterion confirms it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::lens::{is_homeomorphic, normalize, qr_obstructed, Convention, LensSpace, RawLensParams};
use crate::surgery::{wu_hyperbolic_guarantee, Slope};
use crate::{Error, Result};

pub const CITE_FS_QR: &str = "FS-qr";
pub const CITE_KMOS: &str = "KMOS-p<9";
pub const CITE_GABAI: &str = "Gabai-S2xS1";
pub const CITE_KAWAUCHI: &str = "Kawauchi-upper";
pub const CITE_FAMILY: &str = "Thm4.3-family";
pub const CITE_PAIR: &str = "Thm4.4-pair";
pub const CITE_LENS_D1: &str = "lens-d1";
pub const CITE_BETTI: &str = "betti-lower";
pub const CITE_BHW: &str = "BHW-note";
pub const CITE_LISCA: &str = "Lisca-note";
pub const CITE_RESTRICTED: &str = "dH-restricted-open";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DistanceStatus {
    Equal,
    ExactlyTwo,
    OneAsserted,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EvidenceKind {
    Fact,
    LowerBound,
    UpperBound,
    Obstruction,
    Witness,
    Note,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub citation: String,
    pub detail: String,
}

impl Evidence {
    fn new(kind: EvidenceKind, citation: &str, detail: String) -> Self {
        Evidence { kind, citation: String::from(citation), detail }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WitnessGrade {
    Asserted,
    CriterionVerified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WitnessKind {
    /// `L(p,q')` and `K(p/q', 18/1) = L(18p - 49q', 19q' - 7p)`.
    Family,
    /// The 18/1 and 19/1 fillings of the same `p/q'` surgery.
    Pair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WitnessPair {
    pub kind: WitnessKind,
    pub source: RawLensParams,
    pub target: RawLensParams,
    /// `(p, q')`, the surgery slope `p/q'` on the unknotted component.
    pub parameters: [i64; 2],
    pub grade: WitnessGrade,
}

impl WitnessPair {
    pub fn surgery_slope(&self) -> Slope {
        Slope::new(self.parameters[0], self.parameters[1]).expect("coprime by construction")
    }

    /// Upgrades to [`WitnessGrade::CriterionVerified`] when the surgery slope
    /// is at distance at least 3 from the degeneracy slope of the braid closure.
    pub fn graded_with(mut self, degeneracy: Slope) -> Result<Self> {
        if wu_hyperbolic_guarantee(self.surgery_slope(), degeneracy)? {
            self.grade = WitnessGrade::CriterionVerified;
        }
        Ok(self)
    }

    pub fn citation(&self) -> &'static str {
        match self.kind {
            WitnessKind::Family => CITE_FAMILY,
            WitnessKind::Pair => CITE_PAIR,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DistanceReport {
    pub a: LensSpace,
    pub b: LensSpace,
    pub d_value: u32,
    pub dh_lower: u32,
    pub dh_upper: u32,
    pub status: DistanceStatus,
    pub evidence: Vec<Evidence>,
    pub witnesses: Vec<WitnessPair>,
    pub convention: Convention,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DhOptions {
    /// Degeneracy slope of the braid closure, if known.
    pub degeneracy: Option<Slope>,
}

pub fn d_lens(a: &LensSpace, b: &LensSpace, convention: Convention) -> u32 {
    u32::from(!is_homeomorphic(a, b, convention))
}

pub fn betti_lower_bound(a: &LensSpace, b: &LensSpace) -> u32 {
    a.betti1().abs_diff(b.betti1())
}

fn lin(a: i64, x: i64, b: i64, y: i64) -> Result<i64> {
    i64::try_from(a as i128 * x as i128 + b as i128 * y as i128).map_err(|_| Error::Overflow)
}

/// `(L(18p - 49q', 19q' - 7p), L(19p - 49q', 18q' - 7p))`; the first
/// parameters differ by exactly `p`.
pub fn berge_pair(p: i64, q_prime: i64) -> Result<WitnessPair> {
    if p <= 0 {
        return Err(Error::InvalidInput("berge pair needs p > 0"));
    }
    if gcd(p, q_prime) != 1 {
        return Err(Error::NotCoprime(p, q_prime));
    }
    let source = RawLensParams::new(lin(18, p, -49, q_prime)?, lin(19, q_prime, -7, p)?)?;
    let target = RawLensParams::new(lin(19, p, -49, q_prime)?, lin(18, q_prime, -7, p)?)?;
    Ok(WitnessPair { kind: WitnessKind::Pair, source, target, parameters: [p, q_prime], grade: WitnessGrade::Asserted })
}

fn family_member(p: i64, q_prime: i64) -> Result<WitnessPair> {
    let source = RawLensParams::new(p, q_prime)?;
    let target = RawLensParams::new(lin(18, p, -49, q_prime)?, lin(19, q_prime, -7, p)?)?;
    Ok(WitnessPair { kind: WitnessKind::Family, source, target, parameters: [p, q_prime], grade: WitnessGrade::Asserted })
}

/// The first `count` members `q' >= q_min`, `q' ≡ q (mod p)` of the family
/// of lens spaces one hyperbolic surgery away from `a = L(p,q)`.
pub fn enumerate_dh1_family(a: &LensSpace, count: usize, q_min: i64) -> Result<Vec<WitnessPair>> {
    let p = a.p();
    if p < 1 {
        return Err(Error::Inapplicable("family needs p >= 1"));
    }
    let mut q = q_min + (a.q() - q_min).rem_euclid(p);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Ok(w) = family_member(p, q) {
            out.push(w);
        }
        q = q.checked_add(p).ok_or(Error::Overflow)?;
    }
    Ok(out)
}

fn matches(w: &WitnessPair, x: &LensSpace, y: &LensSpace, c: Convention) -> bool {
    is_homeomorphic(&normalize(w.source, c), x, c) && is_homeomorphic(&normalize(w.target, c), y, c)
}

/// Every family member or pair relating `a` and `b` in either order. The
/// defining formulas are linear in `q'`, so the candidates are solved for
/// directly rather than searched.
pub fn find_witnesses(a: &LensSpace, b: &LensSpace, convention: Convention) -> Vec<WitnessPair> {
    let mut out = Vec::new();
    for (x, y) in [(a, b), (b, a)] {
        // family: 18p - 49q' = ±|y.p| with p = x.p
        if x.p() >= 1 {
            for sign in [1, -1] {
                let num = 18 * x.p() as i128 - sign * y.p() as i128;
                if num % 49 == 0 {
                    if let Ok(w) = i64::try_from(num / 49).map_err(|_| Error::Overflow).and_then(|q| family_member(x.p(), q)) {
                        if matches(&w, x, y, convention) {
                            out.push(w);
                        }
                    }
                }
            }
        }
        // pair: 18p - 49q' = σ|x.p|, 19p - 49q' = τ|y.p|
        for sigma in [1i128, -1] {
            for tau in [1i128, -1] {
                let (xs, yt) = (sigma * x.p() as i128, tau * y.p() as i128);
                let p = yt - xs;
                if p <= 0 || (18 * p - xs) % 49 != 0 {
                    continue;
                }
                let (Ok(p), Ok(q)) = (i64::try_from(p), i64::try_from((18 * p - xs) / 49)) else { continue };
                if let Ok(w) = berge_pair(p, q) {
                    if matches(&w, x, y, convention) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out.sort_by_key(|w| (w.kind, w.parameters));
    out.dedup();
    out
}

pub fn dh_bounds(a: &LensSpace, b: &LensSpace, convention: Convention) -> DistanceReport {
    dh_bounds_with(a, b, convention, &DhOptions::default())
}

pub fn dh_bounds_with(a: &LensSpace, b: &LensSpace, convention: Convention, opts: &DhOptions) -> DistanceReport {
    use EvidenceKind::*;

    let mut report = DistanceReport {
        a: *a,
        b: *b,
        d_value: d_lens(a, b, convention),
        dh_lower: 0,
        dh_upper: 0,
        status: DistanceStatus::Equal,
        evidence: Vec::new(),
        witnesses: Vec::new(),
        convention,
    };
    let ev = &mut report.evidence;
    if report.d_value == 0 {
        ev.push(Evidence::new(Fact, "identity", format!("{a} and {b} are homeomorphic ({convention})")));
        return report;
    }

    ev.push(Evidence::new(Fact, CITE_LENS_D1, String::from("any two lens spaces are related by a single surgery, so d = 1")));
    ev.push(Evidence::new(
        UpperBound,
        CITE_KAWAUCHI,
        String::from("d = 1 implies d_H is 1 or 2"),
    ));
    if betti_lower_bound(a, b) == 1 {
        ev.push(Evidence::new(LowerBound, CITE_BETTI, String::from("first Betti numbers differ by one, so d >= 1")));
    }
    report.dh_lower = 1;
    report.dh_upper = 2;

    let other = if a.is_s3() {
        Some(b)
    } else if b.is_s3() {
        Some(a)
    } else {
        None
    };
    let mut obstructed = false;
    if let Some(l) = other {
        if l.is_s2xs1() {
            ev.push(Evidence::new(Obstruction, CITE_GABAI, String::from("d_H(S3, S2xS1) = 2")));
            obstructed = true;
        } else if l.p() >= 2 {
            if qr_obstructed(l) == Ok(true) {
                ev.push(Evidence::new(
                    Obstruction,
                    CITE_FS_QR,
                    format!("no x has x^2 = ±{} (mod {}), so d_H(S3, {l}) = 2", l.q(), l.p()),
                ));
                obstructed = true;
            }
            if l.p() < 9 {
                ev.push(Evidence::new(Obstruction, CITE_KMOS, format!("p = {} < 9, so d_H(S3, {l}) = 2", l.p())));
                obstructed = true;
            }
        }
    }

    if convention == Convention::Oriented && is_homeomorphic(a, b, Convention::Unoriented) {
        ev.push(Evidence::new(
            Note,
            CITE_BHW,
            String::from("orientation-reversingly homeomorphic; only one such pair with d_H = 1 is known"),
        ));
    }
    if (a.is_s2xs1() && b.p() >= 2) || (b.is_s2xs1() && a.p() >= 2) {
        ev.push(Evidence::new(Note, CITE_LISCA, String::from("a sufficient condition for d_H(S2xS1, L) = 2 exists but is not evaluated")));
    }

    if obstructed {
        report.dh_lower = 2;
        report.status = DistanceStatus::ExactlyTwo;
    } else {
        let mut witnesses = find_witnesses(a, b, convention);
        if let Some(g) = opts.degeneracy {
            witnesses = witnesses.into_iter().map(|w| w.graded_with(g).unwrap_or(w)).collect();
        }
        if witnesses.is_empty() {
            report.status = DistanceStatus::Undetermined;
        } else {
            report.status = DistanceStatus::OneAsserted;
            if witnesses.iter().any(|w| w.grade == WitnessGrade::CriterionVerified) {
                report.dh_upper = 1;
            }
            for w in &witnesses {
                let grade = match w.grade {
                    WitnessGrade::Asserted => "asserted; hyperbolicity holds only beyond an ineffective bound on q'",
                    WitnessGrade::CriterionVerified => "verified by the distance-3 criterion",
                };
                report.evidence.push(Evidence::new(
                    Witness,
                    w.citation(),
                    format!("p/q' = {}/{}: {} -> {} ({grade})", w.parameters[0], w.parameters[1], w.source, w.target),
                ));
            }
            report.witnesses = witnesses;
        }
    }
    report.evidence.push(Evidence::new(
        Note,
        CITE_RESTRICTED,
        String::from("the distance through lens spaces only is at least d_H; whether it is always defined is open"),
    ));
    report
}
