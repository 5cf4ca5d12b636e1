//! Lens spaces `L(p, q)` including `S3 = L(1,0)` and `S2xS1 = L(0,1)`.
//!
//! `L(p,q)` and `L(p',q')` are homeomorphic (allowing orientation reversal)
//! iff `|p| = |p'|` and `q' = ±q^{±1} (mod p)`. Preserving orientation
//! restricts the orbit to `{q, q^{-1}}`. A [`LensSpace`] stores the minimum
//! of its orbit under the convention it was normalized with.

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, mod_inverse, mul_mod};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Convention {
    Oriented,
    #[default]
    Unoriented,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Oriented => "oriented",
            Convention::Unoriented => "unoriented",
        })
    }
}

/// Un-normalized `(p, q)` as produced by surgery formulas; `p` may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawRepr", into = "RawRepr"))]
pub struct RawLensParams {
    p: i64,
    q: i64,
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct RawRepr {
    p: i64,
    q: i64,
}

#[cfg(feature = "serde")]
impl TryFrom<RawRepr> for RawLensParams {
    type Error = Error;
    fn try_from(r: RawRepr) -> Result<Self> {
        RawLensParams::new(r.p, r.q)
    }
}

#[cfg(feature = "serde")]
impl From<RawLensParams> for RawRepr {
    fn from(r: RawLensParams) -> Self {
        RawRepr { p: r.p, q: r.q }
    }
}

impl RawLensParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        Ok(RawLensParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn normalize(self, convention: Convention) -> LensSpace {
        normalize(self, convention)
    }
}

impl fmt::Display for RawLensParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// A lens space in canonical form: `p >= 0`, `gcd(p,q) = 1`, and
/// `q = 1` for `p = 0`, `q = 0` for `p = 1`, `1 <= q < p` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "RawRepr", into = "RawRepr"))]
pub struct LensSpace {
    p: i64,
    q: i64,
}

#[cfg(feature = "serde")]
impl TryFrom<RawRepr> for LensSpace {
    type Error = Error;
    fn try_from(r: RawRepr) -> Result<Self> {
        LensSpace::from_canonical(r.p, r.q)
    }
}

#[cfg(feature = "serde")]
impl From<LensSpace> for RawRepr {
    fn from(l: LensSpace) -> Self {
        RawRepr { p: l.p, q: l.q }
    }
}

impl LensSpace {
    pub const S3: LensSpace = LensSpace { p: 1, q: 0 };
    pub const S2_X_S1: LensSpace = LensSpace { p: 0, q: 1 };
    pub const RP3: LensSpace = LensSpace { p: 2, q: 1 };

    /// Normalizes `(p, q)` under `convention`.
    pub fn new(p: i64, q: i64, convention: Convention) -> Result<Self> {
        Ok(normalize(RawLensParams::new(p, q)?, convention))
    }

    /// Accepts `(p, q)` only if it already satisfies the range invariants.
    /// The orbit-minimum property is not checked since it depends on the
    /// convention.
    pub fn from_canonical(p: i64, q: i64) -> Result<Self> {
        let ok = match p {
            0 => q == 1,
            1 => q == 0,
            p if p >= 2 => (1..p).contains(&q) && gcd(p, q) == 1,
            _ => false,
        };
        if ok {
            Ok(LensSpace { p, q })
        } else {
            Err(Error::InvalidInput("lens space parameters out of canonical range"))
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn raw(&self) -> RawLensParams {
        RawLensParams { p: self.p, q: self.q }
    }

    pub fn is_s3(&self) -> bool {
        self.p == 1
    }

    pub fn is_s2xs1(&self) -> bool {
        self.p == 0
    }

    /// All `q'` in `[0, p)` with `L(p,q') ≅ L(p,q)` under `convention`, sorted.
    pub fn orbit(&self, convention: Convention) -> Vec<i64> {
        orbit(self.p, self.q, convention)
    }

    pub fn betti1(&self) -> u32 {
        betti1(self)
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            0 => f.write_str("S2xS1"),
            1 => f.write_str("S3"),
            p => write!(f, "L({},{})", p, self.q),
        }
    }
}

fn orbit(p: i64, q: i64, convention: Convention) -> Vec<i64> {
    match p {
        0 => return alloc::vec![1],
        1 => return alloc::vec![0],
        _ => {}
    }
    let q = q.rem_euclid(p);
    let inv = mod_inverse(q, p).expect("coprime by construction");
    let mut out = alloc::vec![q, inv];
    if convention == Convention::Unoriented {
        out.push((p - q) % p);
        out.push((p - inv) % p);
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn normalize(raw: RawLensParams, convention: Convention) -> LensSpace {
    let (mut p, mut q) = (raw.p, raw.q);
    if p < 0 {
        p = -p;
        if convention == Convention::Oriented {
            q = -q;
        }
    }
    match p {
        0 => LensSpace::S2_X_S1,
        1 => LensSpace::S3,
        _ => LensSpace { p, q: orbit(p, q, convention)[0] },
    }
}

pub fn is_homeomorphic(a: &LensSpace, b: &LensSpace, convention: Convention) -> bool {
    a.p == b.p && orbit(a.p, a.q, convention).contains(&b.q)
}

pub fn betti1(a: &LensSpace) -> u32 {
    u32::from(a.p == 0)
}

/// True iff neither `q` nor `-q` is a square modulo `p`, checked by
/// enumerating every residue.
pub fn qr_obstructed(a: &LensSpace) -> Result<bool> {
    let p = a.p;
    if p < 2 {
        return Err(Error::Inapplicable("quadratic-residue test needs p >= 2"));
    }
    let (plus, minus) = (a.q.rem_euclid(p), (-a.q).rem_euclid(p));
    let hit = (0..p).any(|x| {
        let sq = mul_mod(x, x, p);
        sq == plus || sq == minus
    });
    Ok(!hit)
}
