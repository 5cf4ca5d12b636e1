//! Bounded Tietze-style simplification of two-generator presentations.
//!
//! A round runs three rules in a fixed order:
//!
//! 1. cyclic reduction of every relator, dropping empty and repeated
//!    relators (equal up to cyclic permutation and inversion);
//! 2. elimination of a generator occurring exactly once in some relator,
//!    by solving that relator for it and substituting everywhere else;
//! 3. overlap shortening: if a cyclic subword `P` of relator `R` is also a
//!    prefix of a cyclic conjugate `P Q` of another relator (or its inverse)
//!    with `|P| > |PQ| / 2`, replace `P` in `R` by `Q^-1`.
//!
//! Each rule preserves the isomorphism type of the group. Rounds stop when
//! the group is recognized (no generators left, or one generator with its
//! power relators), when a round changes nothing, or when the fuel runs out.

use alloc::vec::Vec;

use super::abelian::AbelianInvariants;
use super::word::{generator_name, Word};
use super::{GroupPresentation, GENERATORS};
use crate::arith::gcd;

pub const DEFAULT_FUEL: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SimplifyOutcome {
    Trivial,
    /// `Z/n`, with `n = 0` meaning `Z`. Never `1`; that is [`SimplifyOutcome::Trivial`].
    CyclicOfOrder(u64),
    Inconclusive(GroupPresentation),
}

impl SimplifyOutcome {
    pub fn abelian_invariants(&self) -> AbelianInvariants {
        match self {
            SimplifyOutcome::Trivial => AbelianInvariants::trivial(),
            SimplifyOutcome::CyclicOfOrder(n) => AbelianInvariants::cyclic(*n),
            SimplifyOutcome::Inconclusive(g) => g.abelian_invariants(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SimplifyStep {
    Dropped { relator: Word },
    Eliminated { generator: char, relator: Word, value: Word },
    Shortened { before: Word, using: Word, after: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SimplifyReport {
    pub outcome: SimplifyOutcome,
    pub rounds: u64,
    pub steps: Vec<SimplifyStep>,
}

struct State {
    relators: Vec<Word>,
    active: [bool; GENERATORS],
    steps: Vec<SimplifyStep>,
}

pub fn simplify(g: &GroupPresentation, fuel: u64) -> SimplifyReport {
    let mut st = State {
        relators: g.relators().to_vec(),
        active: [true; GENERATORS],
        steps: Vec::new(),
    };
    let mut rounds = 0;
    let outcome = loop {
        st.normalize();
        if let Some(out) = st.diagnose() {
            break out;
        }
        if rounds >= fuel {
            break SimplifyOutcome::Inconclusive(GroupPresentation::new(st.relators.clone()));
        }
        rounds += 1;
        let mut changed = false;
        while st.eliminate_one() {
            changed = true;
            st.normalize();
        }
        if st.diagnose().is_none() {
            changed |= st.shorten_pass();
        }
        if !changed {
            st.normalize();
            break st
                .diagnose()
                .unwrap_or_else(|| SimplifyOutcome::Inconclusive(GroupPresentation::new(st.relators.clone())));
        }
    };
    SimplifyReport { outcome, rounds, steps: st.steps }
}

impl State {
    fn normalize(&mut self) {
        let mut seen: Vec<Word> = Vec::new();
        let mut kept = Vec::with_capacity(self.relators.len());
        for r in core::mem::take(&mut self.relators) {
            let c = r.cyclic_reduce();
            if c.is_empty() {
                continue;
            }
            let key = c.cyclic_key();
            if seen.contains(&key) {
                self.steps.push(SimplifyStep::Dropped { relator: c });
                continue;
            }
            seen.push(key);
            kept.push(c);
        }
        kept.sort();
        self.relators = kept;
    }

    fn diagnose(&self) -> Option<SimplifyOutcome> {
        let live: Vec<usize> = (0..GENERATORS).filter(|&g| self.active[g]).collect();
        match live.as_slice() {
            [] => Some(SimplifyOutcome::Trivial),
            [g] => {
                // each relator is a power of the remaining generator
                let n = self.relators.iter().fold(0i64, |acc, w| gcd(acc, w.exponent_sum(*g)));
                Some(match n {
                    1 => SimplifyOutcome::Trivial,
                    n => SimplifyOutcome::CyclicOfOrder(n as u64),
                })
            }
            _ => None,
        }
    }

    fn eliminate_one(&mut self) -> bool {
        let found = self.relators.iter().enumerate().find_map(|(i, r)| {
            (0..GENERATORS)
                .filter(|&g| self.active[g])
                .find(|&g| r.occurrences(g) == 1)
                .map(|g| (i, g))
        });
        let Some((idx, gen)) = found else { return false };
        let rel = self.relators.remove(idx);
        let pos = rel.letters().iter().position(|l| l.gen() == gen).unwrap();
        let rot = rel.rotate(pos);
        // rot = g^e W  =>  g = W^-1 (e = 1) or g = W (e = -1)
        let rest: Word = rot.letters()[1..].iter().copied().collect();
        let value = if rot.letters()[0].is_inverse() { rest } else { rest.inverse() };
        for r in self.relators.iter_mut() {
            *r = r.substitute(gen, &value);
        }
        self.active[gen] = false;
        self.steps.push(SimplifyStep::Eliminated { generator: generator_name(gen), relator: rel, value });
        true
    }

    /// One pass over the relators, longest first. Returns whether anything changed.
    fn shorten_pass(&mut self) -> bool {
        let mut order: Vec<usize> = (0..self.relators.len()).collect();
        order.sort_by(|&i, &j| self.relators[j].len().cmp(&self.relators[i].len()).then_with(|| {
            self.relators[i].letters().cmp(self.relators[j].letters())
        }));
        let mut changed = false;
        for &t in &order {
            while let Some((using, after)) = self.best_shortening(t) {
                let before = core::mem::replace(&mut self.relators[t], after.clone());
                self.steps.push(SimplifyStep::Shortened { before, using, after });
                changed = true;
                if self.relators[t].is_empty() {
                    break;
                }
            }
        }
        changed
    }

    fn best_shortening(&self, target: usize) -> Option<(Word, Word)> {
        let r = &self.relators[target];
        let n = r.len();
        if n == 0 {
            return None;
        }
        let rl = r.letters();
        let mut best: Option<(usize, Word, Word)> = None;
        for (k, s) in self.relators.iter().enumerate() {
            if k == target || s.is_empty() {
                continue;
            }
            let m = s.len();
            let inv = s.inverse();
            for base in [s, &inv] {
                for shift in 0..m {
                    let c = base.rotate(shift);
                    let cl = c.letters();
                    for start in 0..n {
                        let mut len = 0;
                        while len < n.min(m) && rl[(start + len) % n] == cl[len] {
                            len += 1;
                        }
                        if 2 * len <= m {
                            continue;
                        }
                        let gain = 2 * len - m;
                        if best.as_ref().is_some_and(|b| b.0 >= gain) {
                            continue;
                        }
                        // rotate r so the match is a prefix, then swap it for Q^-1
                        let tail: Word = (len..n).map(|i| rl[(start + i) % n]).collect();
                        let q_inv: Word = cl[len..].iter().rev().map(|l| l.inverse()).collect();
                        let after = q_inv.concat(&tail).cyclic_reduce();
                        best = Some((gain, s.clone(), after));
                    }
                }
            }
        }
        best.map(|(_, using, after)| (using, after))
    }
}
