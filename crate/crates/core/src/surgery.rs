//! Slopes, the braid-closure surgery formula and the built-in link families.
//!
//! Let `K = K0 ∪ K1` where `K1` is the closure of an `n`-strand braid in a
//! standard solid torus and `K0` is the core of the complementary torus.
//! If `r/s`-surgery on `K1` alone gives a solid torus, then
//! `K(p/q, r/s) = L(p*r - n^2*s*q, x*q - y*p)` where `y*n^2*s - x*r = 1`.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::arith::{ext_gcd, gcd, is_prime};
use crate::lens::RawLensParams;
use crate::{Error, Result};

/// A reduced fraction `num/den` with `den >= 0`; `1/0` is the meridian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Slope {
    pub const MERIDIAN: Slope = Slope { num: 1, den: 0 };

    pub fn new(num: i64, den: i64) -> Result<Slope> {
        if gcd(num, den) != 1 {
            return Err(Error::NotCoprime(num, den));
        }
        let (num, den) = if den < 0 || (den == 0 && num < 0) { (-num, -den) } else { (num, den) };
        Ok(Slope { num, den })
    }

    pub const fn integer(n: i64) -> Slope {
        Slope { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integral(&self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `a/b` (either sign, `1/0` allowed) or a bare integer.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = n.parse().map_err(|_| Error::InvalidInput("slope numerator is not an integer"))?;
        let den = d.parse().map_err(|_| Error::InvalidInput("slope denominator is not an integer"))?;
        Slope::new(num, den)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = <alloc::borrow::Cow<'de, str>>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Geometric intersection number `|p*v - q*u|` of `p/q` and `u/v`.
pub fn slope_distance(a: Slope, b: Slope) -> u64 {
    (a.num as i128 * b.den as i128 - a.den as i128 * b.num as i128).unsigned_abs() as u64
}

/// Sufficient condition for the image of a knot with a given degeneracy
/// slope to be hyperbolic after `surgery`: distance at least 3.
pub fn wu_hyperbolic_guarantee(surgery: Slope, degeneracy: Slope) -> Result<bool> {
    if degeneracy.num <= 0 {
        return Err(Error::InvalidInput("degeneracy slope must have positive numerator"));
    }
    Ok(slope_distance(surgery, degeneracy) >= 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum PseudoAnosovVerdict {
    PseudoAnosovByCriterion,
    Inconclusive,
}

/// A braid on a prime number `n` of strands whose exponent sum is not a
/// multiple of `n - 1` is pseudo-Anosov. Anything else is inconclusive.
pub fn pseudo_anosov_candidate(strands: i64, exponent_sum: i64) -> Result<PseudoAnosovVerdict> {
    if strands < 3 {
        return Err(Error::InvalidInput("pseudo-Anosov criterion needs at least 3 strands"));
    }
    Ok(if is_prime(strands) && exponent_sum.rem_euclid(strands - 1) != 0 {
        PseudoAnosovVerdict::PseudoAnosovByCriterion
    } else {
        PseudoAnosovVerdict::Inconclusive
    })
}

/// A braid word as signed Artin generator indices, `i` for `σ_i` and `-i`
/// for its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord(alloc::vec::Vec<i64>);

impl BraidWord {
    pub fn new(gens: alloc::vec::Vec<i64>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("braid word is empty"));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidInput("braid generator index 0 does not exist"));
        }
        Ok(BraidWord(gens))
    }

    pub fn generators(&self) -> &[i64] {
        &self.0
    }

    /// Fewest strands on which every generator acts.
    pub fn strands(&self) -> i64 {
        self.0.iter().map(|g| g.abs()).max().unwrap_or(0) + 1
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|g| g.signum()).sum()
    }
}

/// Comma-separated signed indices, e.g. `1,2,-3`.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<core::result::Result<_, _>>()
            .map_err(|_| Error::InvalidInput("braid word must be comma-separated integers"))?;
        BraidWord::new(gens)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FillingCoefficients {
    pub x: i64,
    pub y: i64,
}

/// Solves `y * n^2 * s - x * r = 1`, taking the solution with `0 <= y < |r|`.
pub fn filling_coefficients(strands: i64, filling: Slope) -> Result<FillingCoefficients> {
    if strands < 1 {
        return Err(Error::InvalidInput("strand count must be positive"));
    }
    let (r, s) = (filling.num, filling.den);
    let n2s = strands
        .checked_mul(strands)
        .and_then(|v| v.checked_mul(s))
        .ok_or(Error::Overflow)?;
    let (g, alpha, beta) = ext_gcd(n2s, r);
    if g != 1 {
        return Err(Error::NotSolvable { r, n2s });
    }
    // alpha*n2s + beta*r = 1, so y = alpha, x = -beta; shift along (r, n2s)
    let (mut y, mut x) = (alpha as i128, -(beta as i128));
    if r != 0 {
        let ra = (r as i128).abs();
        let t = y.div_euclid(ra);
        let sign = if r > 0 { 1 } else { -1 };
        // (y - t*|r|, x - t*sign*n2s) keeps y*n2s - x*r fixed
        y -= t * ra;
        x -= t * sign * n2s as i128;
    }
    let x = i64::try_from(x).map_err(|_| Error::Overflow)?;
    let y = i64::try_from(y).map_err(|_| Error::Overflow)?;
    Ok(FillingCoefficients { x, y })
}

/// `K(p/q, r/s)` for an `n`-strand braid closure whose `r/s` filling is a
/// solid torus; the result is not normalized.
pub fn braid_surgery_lens(strands: i64, surgery: Slope, filling: Slope) -> Result<RawLensParams> {
    let FillingCoefficients { x, y } = filling_coefficients(strands, filling)?;
    let (p, q) = (surgery.num as i128, surgery.den as i128);
    let n2s = strands as i128 * strands as i128 * filling.den as i128;
    let first = p * filling.num as i128 - n2s * q;
    let second = x as i128 * q - y as i128 * p;
    let first = i64::try_from(first).map_err(|_| Error::Overflow)?;
    let second = i64::try_from(second).map_err(|_| Error::Overflow)?;
    RawLensParams::new(first, second)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyFormula {
    /// Braid closure with a solid-torus filling, evaluated by [`braid_surgery_lens`].
    BraidClosure { strands: i64, filling: Slope, exponent_sum: Option<i64> },
    /// `L(p0 + p1*r, q0 + q1*r)` on integral slopes `r/1`.
    IntegralLinear { p0: i64, p1: i64, q0: i64, q1: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub description: &'static str,
    /// Source for the solid-torus filling, which is taken on trust.
    pub citation: &'static str,
    pub formula: FamilyFormula,
}

static FAMILIES: [Family; 3] = [
    Family {
        name: "w3w7_fill18",
        description: "closure of the 7-strand braid W3^-1 W7^3 (exponent sum 16), filled 18/1",
        citation: "[B2], [BHW]",
        formula: FamilyFormula::BraidClosure { strands: 7, filling: Slope::integer(18), exponent_sum: Some(16) },
    },
    Family {
        name: "w3w7_fill19",
        description: "closure of the 7-strand braid W3^-1 W7^3 (exponent sum 16), filled 19/1",
        citation: "[B2], [BHW]",
        formula: FamilyFormula::BraidClosure { strands: 7, filling: Slope::integer(19), exponent_sum: Some(16) },
    },
    Family {
        name: "yamada_k35_fill15",
        description: "Yamada's link k(3,5) ∪ u, 15/1 on the second component: L(64-15r, 23-5r)",
        citation: "[Yamada]",
        formula: FamilyFormula::IntegralLinear { p0: 64, p1: -15, q0: 23, q1: -5 },
    },
];

pub fn families() -> &'static [Family] {
    &FAMILIES
}

pub fn family(name: &str) -> Result<&'static Family> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFamily(String::from(name)))
}

impl Family {
    pub fn eval(&self, surgery: Slope) -> Result<RawLensParams> {
        match self.formula {
            FamilyFormula::BraidClosure { strands, filling, .. } => braid_surgery_lens(strands, surgery, filling),
            FamilyFormula::IntegralLinear { p0, p1, q0, q1 } => {
                if !surgery.is_integral() {
                    return Err(Error::InvalidInput("this family is only defined on integral slopes r/1"));
                }
                let r = surgery.num;
                let p = p1.checked_mul(r).and_then(|v| v.checked_add(p0)).ok_or(Error::Overflow)?;
                let q = q1.checked_mul(r).and_then(|v| v.checked_add(q0)).ok_or(Error::Overflow)?;
                RawLensParams::new(p, q)
            }
        }
    }
}

pub fn family_eval(name: &str, surgery: Slope) -> Result<RawLensParams> {
    family(name)?.eval(surgery)
}
