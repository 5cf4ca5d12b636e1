//! Fundamental groups of longitudinal surgeries on `K(L(p,q); u)`.
//!
//! For integer `r`, `r*`-surgery has the two-generator presentation
//! `<a, b | W1(1)...W1(psi), W2(1)...W2(p)>` read off the basic sequence:
//!
//! | `s_j` vs `u` | `W1(j)` | `W2(j)` |
//! |--------------|---------|---------|
//! | `s_j > u`    | `a`     | `a`     |
//! | `s_j = u`    | `a b^r` | `a`     |
//! | `s_j < u`    | `a b`   | `a b`   |

mod abelian;
mod simplify;
mod word;

use alloc::vec::Vec;
use core::fmt;

use crate::one_bridge::OneBridgeKnotSpec;
use crate::{Error, Result};

pub use abelian::{smith_invariants, AbelianInvariants};
pub use simplify::{simplify, SimplifyOutcome, SimplifyReport, SimplifyStep, DEFAULT_FUEL};
pub use word::{generator_name, Letter, Word};

/// Number of generators; presentations here are always on `a` and `b`.
pub const GENERATORS: usize = 2;

/// `<a, b | relators>` with every relator freely reduced and nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "PresentationRepr", into = "PresentationRepr"))]
pub struct GroupPresentation {
    relators: Vec<Word>,
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct PresentationRepr {
    generators: usize,
    relators: Vec<Word>,
}

#[cfg(feature = "serde")]
impl TryFrom<PresentationRepr> for GroupPresentation {
    type Error = Error;
    fn try_from(r: PresentationRepr) -> Result<Self> {
        if r.generators != GENERATORS {
            return Err(Error::InvalidInput("presentations have exactly two generators"));
        }
        Ok(GroupPresentation::new(r.relators))
    }
}

#[cfg(feature = "serde")]
impl From<GroupPresentation> for PresentationRepr {
    fn from(g: GroupPresentation) -> Self {
        PresentationRepr { generators: GENERATORS, relators: g.relators }
    }
}

impl GroupPresentation {
    pub fn new(relators: impl IntoIterator<Item = Word>) -> Self {
        let relators = relators
            .into_iter()
            .map(|w| w.free_reduce())
            .filter(|w| !w.is_empty())
            .collect();
        GroupPresentation { relators }
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Rows are `(a-exponent-sum, b-exponent-sum)` per relator.
    pub fn relation_matrix(&self) -> Vec<[i64; 2]> {
        self.relators.iter().map(|w| [w.exponent_sum(0), w.exponent_sum(1)]).collect()
    }

    pub fn abelian_invariants(&self) -> AbelianInvariants {
        let rows: Vec<Vec<i64>> = self.relation_matrix().iter().map(|r| r.to_vec()).collect();
        smith_invariants(&rows, GENERATORS)
    }

    pub fn simplify(&self, fuel: u64) -> SimplifyReport {
        simplify(self, fuel)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<a,b | ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(">")
    }
}

/// Relation matrix and `|det|` of a two-relator presentation; order `0` means infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Abelianization {
    pub matrix: [[i64; 2]; 2],
    pub h1_order: u64,
}

pub fn abelianization(g: &GroupPresentation) -> Result<Abelianization> {
    let rows = g.relation_matrix();
    if rows.len() != 2 {
        return Err(Error::RelatorCount { expected: 2, found: rows.len() });
    }
    let matrix = [rows[0], rows[1]];
    let det = matrix[0][0] as i128 * matrix[1][1] as i128 - matrix[0][1] as i128 * matrix[1][0] as i128;
    Ok(Abelianization { matrix, h1_order: det.unsigned_abs() as u64 })
}

pub fn free_reduce(w: &Word) -> Word {
    w.free_reduce()
}

/// The presentation of `r*`-surgery on `K(L(p,q); u)`.
pub fn presentation(knot: &OneBridgeKnotSpec, r: i64) -> GroupPresentation {
    let seq = knot.basic_sequence();
    let (p, u) = (knot.p() as usize, knot.u());
    let psi = knot.psi() as usize;
    let ab = Word::from(alloc::vec![Letter::A, Letter::B]);
    let a = Word::letter(Letter::A);

    let mut r1 = Word::empty();
    for j in 1..=psi {
        let s = seq.get(j);
        if s > u {
            r1.extend_from(&a);
        } else if s == u {
            r1.extend_from(&a.concat(&Word::power_of(Letter::B, r)));
        } else {
            r1.extend_from(&ab);
        }
    }
    let mut r2 = Word::empty();
    for j in 1..=p {
        r2.extend_from(if seq.get(j) >= u { &a } else { &ab });
    }
    // r < 0 puts b^-1 after a; both relators are already reduced otherwise
    GroupPresentation::new([r1, r2])
}
