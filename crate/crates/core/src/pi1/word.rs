use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::str::FromStr;

use crate::{Error, Result};

/// A generator letter or its inverse: `±1` is `a^{±1}`, `±2` is `b^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i8);

impl Letter {
    pub const A: Letter = Letter(1);
    pub const A_INV: Letter = Letter(-1);
    pub const B: Letter = Letter(2);
    pub const B_INV: Letter = Letter(-2);

    /// `gen` is 0 for `a`, 1 for `b`.
    pub fn new(gen: usize, inverse: bool) -> Letter {
        assert!(gen < 2, "only generators a and b exist");
        let v = gen as i8 + 1;
        Letter(if inverse { -v } else { v })
    }

    pub fn gen(self) -> usize {
        (self.0.unsigned_abs() - 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn exponent(self) -> i64 {
        self.0.signum() as i64
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn gen_char(self) -> char {
        generator_name(self.gen())
    }

    fn flat_char(self) -> char {
        let c = self.gen_char();
        if self.is_inverse() {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

pub fn generator_name(gen: usize) -> char {
    (b'a' + gen as u8) as char
}

/// A word in `a, b` and their inverses. Not reduced unless a reducing
/// method produced it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex: shorter first, then letter by letter.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word { letters }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word { letters: iter.into_iter().collect() }
    }
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letter(l: Letter) -> Word {
        Word { letters: alloc::vec![l] }
    }

    /// `l^n`; negative `n` repeats the inverse letter.
    pub fn power_of(l: Letter, n: i64) -> Word {
        let l = if n < 0 { l.inverse() } else { l };
        Word { letters: alloc::vec![l; n.unsigned_abs() as usize] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn extend_from(&mut self, w: &Word) {
        self.letters.extend_from_slice(&w.letters);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        self.letters.iter().rev().map(|l| l.inverse()).collect()
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out.extend_from(&base);
        }
        out
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen() == gen).map(|l| l.exponent()).sum()
    }

    /// Number of letters `g` or `g^-1`.
    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen() == gen).count()
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Free reduction followed by cancelling inverse letters at the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce();
        let l = &w.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i] == l[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    /// Cyclic conjugate starting at index `k`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// Shortlex-least cyclic conjugate of this word or its inverse. Two
    /// cyclically reduced relators with the same key generate the same
    /// normal subgroup.
    pub fn cyclic_key(&self) -> Word {
        let inv = self.inverse();
        (0..self.len().max(1))
            .flat_map(|k| [self.rotate(k), inv.rotate(k)])
            .min()
            .unwrap_or_default()
    }

    /// Replaces each occurrence of generator `gen` by `value` (and its
    /// inverse by `value^-1`), then freely reduces.
    pub fn substitute(&self, gen: usize, value: &Word) -> Word {
        let inv = value.inverse();
        let mut out = Word::empty();
        for &l in &self.letters {
            if l.gen() == gen {
                out.extend_from(if l.is_inverse() { &inv } else { value });
            } else {
                out.push(l);
            }
        }
        out.free_reduce()
    }

    /// Flat form: `a`, `b` for generators and `A`, `B` for their inverses;
    /// the empty word is `1`.
    pub fn to_flat(&self) -> String {
        if self.is_empty() {
            return String::from("1");
        }
        self.letters.iter().map(|l| l.flat_char()).collect()
    }

    fn syllables(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((g, e)) if *g == l.gen() && e.signum() == l.exponent() => *e += l.exponent(),
                _ => out.push((l.gen(), l.exponent())),
            }
        }
        out
    }
}

fn write_syllable(out: &mut String, (gen, exp): (usize, i64)) {
    out.push(generator_name(gen));
    if exp != 1 {
        let _ = write!(out, "^{exp}");
    }
}

/// Power notation, e.g. `(a^3b)^3a^5b`. Repeated blocks of syllables are
/// wrapped as `(block)^k`; shorter blocks are grouped first, a block starts
/// with the same generator as the word, and blocks are never nested.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let syl = self.syllables();
        let n = syl.len();
        // groups[i] = Some((len, reps)) when a run starts at syllable i
        let mut groups: Vec<Option<(usize, usize)>> = alloc::vec![None; n];
        let mut taken = alloc::vec![false; n];
        for len in 2..=n / 2 {
            let mut i = 0;
            while i + 2 * len <= n {
                // blocks open on the word's leading generator
                if syl[i].0 != syl[0].0 || taken[i..i + len].iter().any(|&t| t) {
                    i += 1;
                    continue;
                }
                let block = &syl[i..i + len];
                let mut reps = 1;
                while i + (reps + 1) * len <= n
                    && !taken[i + reps * len..i + (reps + 1) * len].iter().any(|&t| t)
                    && &syl[i + reps * len..i + (reps + 1) * len] == block
                {
                    reps += 1;
                }
                if reps >= 2 {
                    groups[i] = Some((len, reps));
                    taken[i..i + len * reps].iter_mut().for_each(|t| *t = true);
                    i += len * reps;
                } else {
                    i += 1;
                }
            }
        }
        let mut out = String::new();
        let mut i = 0;
        while i < n {
            match groups[i] {
                Some((len, reps)) => {
                    out.push('(');
                    for &s in &syl[i..i + len] {
                        write_syllable(&mut out, s);
                    }
                    let _ = write!(out, ")^{reps}");
                    i += len * reps;
                }
                None => {
                    write_syllable(&mut out, syl[i]);
                    i += 1;
                }
            }
        }
        f.write_str(&out)
    }
}

/// Parses power notation or flat form: letters `a b A B` (capitals are
/// inverses), parenthesized groups, `^n` exponents with optional sign,
/// `1` for the empty word, whitespace ignored. No reduction is applied.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::WordSyntax("empty input"));
        }
        if chars == ['1'] {
            return Ok(Word::empty());
        }
        let mut parser = Parser { chars: &chars, pos: 0, depth: 0 };
        let w = parser.sequence()?;
        if parser.pos != chars.len() {
            return Err(Error::WordSyntax("unexpected character"));
        }
        Ok(w)
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<Word> {
        let mut w = Word::empty();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = self.atom()?;
            let exp = self.exponent()?;
            w.extend_from(&atom.pow(exp));
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word> {
        let c = self.peek().ok_or(Error::WordSyntax("unexpected end"))?;
        self.pos += 1;
        match c {
            'a' => Ok(Word::letter(Letter::A)),
            'b' => Ok(Word::letter(Letter::B)),
            'A' => Ok(Word::letter(Letter::A_INV)),
            'B' => Ok(Word::letter(Letter::B_INV)),
            '(' => {
                self.depth += 1;
                if self.depth > 64 {
                    return Err(Error::WordSyntax("nesting too deep"));
                }
                let inner = self.sequence()?;
                if self.peek() != Some(')') {
                    return Err(Error::WordSyntax("unbalanced parenthesis"));
                }
                self.pos += 1;
                self.depth -= 1;
                Ok(inner)
            }
            _ => Err(Error::WordSyntax("expected a, b, A, B or '('")),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let start = self.pos;
        let mut v: i64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as i64))
                .filter(|&v| v <= 1_000_000)
                .ok_or(Error::WordSyntax("exponent too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::WordSyntax("missing exponent"));
        }
        Ok(if neg { -v } else { v })
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = <alloc::borrow::Cow<'de, str>>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        assert_eq!(w("abBa").free_reduce(), w("aa"));
        assert_eq!(Word::empty().free_reduce(), Word::empty());
        assert_eq!(w("Aab").free_reduce(), w("b"));
        assert_eq!(w("abBA").free_reduce(), Word::empty());
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(w("Babab").cyclic_reduce(), w("aba"));
        assert_eq!(w("bAab").cyclic_reduce(), w("bb"));
        assert_eq!(w("aBbA").cyclic_reduce(), Word::empty());
        assert_eq!(w("a").cyclic_reduce(), w("a"));
    }

    #[test]
    fn power_notation_rendering() {
        let r1 = w("(a^3b)^3a^5b(a^3b)^3a^5b(a^3b)^3");
        assert_eq!(r1.to_string(), "(a^3b)^3a^5b(a^3b)^3a^5b(a^3b)^3");
        assert_eq!(r1.len(), 48);
        assert_eq!(w("aaBaB").to_string(), "a^2b^-1ab^-1");
        assert_eq!(w("abab").to_string(), "(ab)^2");
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w("AAb").to_flat(), "AAb");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(w("a^-2"), w("AA"));
        assert_eq!(w("(ab)^-1"), w("BA"));
        assert_eq!(w("a b\tA"), w("abA"));
        assert_eq!(w("a^0b"), w("b"));
        assert_eq!(w("1"), Word::empty());
        for bad in ["", "c", "(ab", "ab)", "a^", "a^x", "a^99999999999"] {
            assert!(bad.parse::<Word>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn substitution() {
        // b -> a^-1: aba -> a
        assert_eq!(w("aba").substitute(1, &w("A")), w("a"));
        assert_eq!(w("aBa").substitute(1, &w("ab")), w("aB"));
    }

    #[test]
    fn cyclic_key_identifies_conjugates_and_inverses() {
        let x = w("aabAB");
        assert_eq!(x.cyclic_key(), x.rotate(2).cyclic_key());
        assert_eq!(x.cyclic_key(), x.inverse().rotate(3).cyclic_key());
        assert_ne!(x.cyclic_key(), w("aabab").cyclic_key());
    }
}
