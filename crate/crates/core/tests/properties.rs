use std::collections::BTreeSet;

use lensdist_core::arith::gcd;
use lensdist_core::distance::berge_pair;
use lensdist_core::lens::{is_homeomorphic, normalize, qr_obstructed};
use lensdist_core::pi1::{simplify, GroupPresentation, Letter, SimplifyOutcome, Word};
use lensdist_core::surgery::{braid_surgery_lens, filling_coefficients, slope_distance, Slope};
use lensdist_core::{Convention, LensSpace, RawLensParams};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const BOTH: [Convention; 2] = [Convention::Oriented, Convention::Unoriented];

fn canonical_spaces(max_p: i64) -> Vec<LensSpace> {
    let mut out = vec![LensSpace::S2_X_S1, LensSpace::S3];
    for p in 2..=max_p {
        for q in 1..p {
            if gcd(p, q) == 1 {
                out.push(LensSpace::from_canonical(p, q).unwrap());
            }
        }
    }
    out
}

/// Orbit of q under q -> q^{-1} (and q -> -q when unoriented), by closure
/// over brute-force inverses.
fn brute_orbit(p: i64, q: i64, c: Convention) -> BTreeSet<i64> {
    let inv = |x: i64| (1..p).find(|y| (x * y).rem_euclid(p) == 1).unwrap();
    let mut orbit = BTreeSet::from([q.rem_euclid(p)]);
    loop {
        let mut next = orbit.clone();
        for &x in &orbit {
            next.insert(inv(x));
            if c == Convention::Unoriented {
                next.insert((p - x) % p);
            }
        }
        if next == orbit {
            return orbit;
        }
        orbit = next;
    }
}

#[test]
fn homeomorphism_is_an_equivalence_relation() {
    let spaces = canonical_spaces(20);
    for c in BOTH {
        for a in &spaces {
            assert!(is_homeomorphic(a, a, c));
            for b in &spaces {
                let ab = is_homeomorphic(a, b, c);
                assert_eq!(ab, is_homeomorphic(b, a, c));
                if c == Convention::Oriented && ab {
                    assert!(is_homeomorphic(a, b, Convention::Unoriented));
                }
                if !ab || a.p() != b.p() {
                    continue;
                }
                for z in spaces.iter().filter(|z| z.p() == a.p()) {
                    if is_homeomorphic(b, z, c) {
                        assert!(is_homeomorphic(a, z, c));
                    }
                }
            }
        }
    }
}

#[test]
fn homeomorphism_matches_orbit_partition() {
    for c in BOTH {
        for p in 2..=30 {
            let qs: Vec<i64> = (1..p).filter(|&q| gcd(p, q) == 1).collect();
            for &q1 in &qs {
                let orbit = brute_orbit(p, q1, c);
                let a = LensSpace::from_canonical(p, q1).unwrap();
                assert_eq!(normalize(a.raw(), c).q(), *orbit.iter().next().unwrap());
                for &q2 in &qs {
                    let b = LensSpace::from_canonical(p, q2).unwrap();
                    assert_eq!(is_homeomorphic(&a, &b, c), orbit.contains(&q2), "p={p} {q1} {q2} {c}");
                }
            }
        }
    }
}

#[test]
fn quadratic_residue_obstruction_is_a_homeomorphism_invariant() {
    let spaces: Vec<LensSpace> = canonical_spaces(30).into_iter().filter(|l| l.p() >= 2).collect();
    for a in &spaces {
        for b in spaces.iter().filter(|b| b.p() == a.p()) {
            if is_homeomorphic(a, b, Convention::Unoriented) {
                assert_eq!(qr_obstructed(a), qr_obstructed(b), "{a} {b}");
            }
        }
    }
}

fn coprime_pair(bound: i64) -> impl Strategy<Value = (i64, i64)> {
    (-bound..=bound, -bound..=bound).prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)
}

fn slope(bound: i64) -> impl Strategy<Value = Slope> {
    coprime_pair(bound).prop_map(|(a, b)| Slope::new(a, b).unwrap())
}

proptest! {
    #[test]
    fn normalize_is_idempotent((p, q) in coprime_pair(500)) {
        let raw = RawLensParams::new(p, q).unwrap();
        for c in BOTH {
            let once = normalize(raw, c);
            prop_assert_eq!(normalize(once.raw(), c), once);
            prop_assert_eq!(once.p(), p.abs());
        }
    }

    #[test]
    fn slope_distance_is_symmetric(a in slope(1000), b in slope(1000)) {
        prop_assert_eq!(slope_distance(a, b), slope_distance(b, a));
        prop_assert_eq!(slope_distance(a, a), 0);
    }

    #[test]
    fn bezout_identity_holds(n in 2i64..=12, r in -200i64..=200, s in 0i64..=5) {
        prop_assume!(gcd(r, s) == 1 && gcd(r, n * n * s) == 1);
        let filling = Slope::new(r, s).unwrap();
        let c = filling_coefficients(n, filling).unwrap();
        prop_assert_eq!(c.y * n * n * filling.den() - c.x * filling.num(), 1);
        if filling.num() != 0 {
            prop_assert!(0 <= c.y && c.y < filling.num().abs());
        }
    }

    #[test]
    fn formula_first_parameter_is_homology_order(
        n in 2i64..=9, surgery in slope(60), (r, s) in coprime_pair(60),
    ) {
        prop_assume!(s != 0 && gcd(r, n * n * s.abs()) == 1);
        let filling = Slope::new(r, s).unwrap();
        let raw = braid_surgery_lens(n, surgery, filling).unwrap();
        let expect = surgery.num() * filling.num() - n * n * filling.den() * surgery.den();
        prop_assert_eq!(raw.p().abs(), expect.abs());
    }

    #[test]
    fn berge_gap_identity((p, q) in (1i64..5000, -5000i64..5000).prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)) {
        let w = berge_pair(p, q).unwrap();
        prop_assert_eq!((w.source.p() - w.target.p()).abs(), p);
    }

    #[test]
    fn word_rendering_round_trips(letters in prop::collection::vec(prop::sample::select(vec![Letter::A, Letter::A_INV, Letter::B, Letter::B_INV]), 0..40)) {
        let w = Word::from(letters);
        let text = w.to_string();
        prop_assert_eq!(text.parse::<Word>().unwrap(), w.clone());
        prop_assert_eq!(w.to_flat().parse::<Word>().unwrap(), w.clone());
        let reduced = w.free_reduce();
        prop_assert!(reduced.is_freely_reduced());
        prop_assert_eq!(reduced.free_reduce(), reduced.clone());
        prop_assert_eq!(reduced.exponent_sum(0), w.exponent_sum(0));
        prop_assert_eq!(reduced.exponent_sum(1), w.exponent_sum(1));
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
    }
}

#[test]
fn closed_form_specialization_for_the_18_filling() {
    let c = Convention::Unoriented;
    let fill = Slope::integer(18);
    for p in -50i64..=50 {
        for q in -50i64..=50 {
            if gcd(p, q) != 1 {
                continue;
            }
            let s = Slope::new(p, q).unwrap();
            let via_formula = normalize(braid_surgery_lens(7, s, fill).unwrap(), c);
            let closed = LensSpace::new(18 * p - 49 * q, 19 * q - 7 * p, c).unwrap();
            assert!(is_homeomorphic(&via_formula, &closed, c), "{p}/{q}");
        }
    }
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let letters = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| letters[rng.gen_range(0..4)]).collect::<Word>().free_reduce()
}

/// Image of a word under a random automorphism of the free group, composed
/// of elementary Nielsen moves.
fn nielsen_scramble(rng: &mut StdRng, relators: Vec<Word>, moves: usize) -> Vec<Word> {
    let (a, b) = (Word::letter(Letter::A), Word::letter(Letter::B));
    let mut rels = relators;
    for _ in 0..moves {
        let (gen, value) = match rng.gen_range(0..6) {
            0 => (0, a.concat(&b)),
            1 => (0, b.concat(&a)),
            2 => (0, a.inverse()),
            3 => (1, b.concat(&a)),
            4 => (1, a.concat(&b)),
            _ => (1, b.inverse()),
        };
        rels = rels.iter().map(|r| r.substitute(gen, &value)).collect();
    }
    rels
}

/// Multiplies relators by conjugates of others and conjugates them.
fn relator_scramble(rng: &mut StdRng, mut rels: Vec<Word>, moves: usize) -> Vec<Word> {
    if rels.len() < 2 {
        return rels;
    }
    for _ in 0..moves {
        let i = rng.gen_range(0..rels.len());
        let mut j = rng.gen_range(0..rels.len() - 1);
        if j >= i {
            j += 1;
        }
        let w = random_word(rng, 3);
        let other = if rng.gen_bool(0.5) { rels[j].clone() } else { rels[j].inverse() };
        let conj = w.concat(&other).concat(&w.inverse());
        let v = random_word(rng, 2);
        rels[i] = v.concat(&rels[i]).concat(&conj).concat(&v.inverse()).free_reduce();
    }
    rels
}

#[test]
fn simplify_never_misreports_known_groups() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (a, b) = (Word::letter(Letter::A), Word::letter(Letter::B));
    let mut decided = 0;
    for trial in 0..400 {
        let n = trial % 7;
        // <a,b | a^n, b> is Z/n (Z for n = 0)
        let base = vec![Word::power_of(Letter::A, n as i64), b.clone()];
        let moved = nielsen_scramble(&mut rng, base, 4);
        let rels = relator_scramble(&mut rng, moved, 2);
        let g = GroupPresentation::new(rels);
        let out = simplify(&g, 200).outcome;
        let expect = if n == 1 { SimplifyOutcome::Trivial } else { SimplifyOutcome::CyclicOfOrder(n as u64) };
        match out {
            SimplifyOutcome::Inconclusive(_) => {}
            o => {
                assert_eq!(o, expect, "{g}");
                decided += 1;
            }
        }
    }
    assert!(decided > 200, "only {decided} decided");

    // Z/m x Z/n with gcd(m, n) > 1 is not cyclic
    for (m, n) in [(2, 2), (2, 4), (3, 6), (4, 6)] {
        let comm = a.concat(&b).concat(&a.inverse()).concat(&b.inverse());
        let base = vec![Word::power_of(Letter::A, m), Word::power_of(Letter::B, n), comm];
        for _ in 0..20 {
            let moved = nielsen_scramble(&mut rng, base.clone(), 3);
            let g = GroupPresentation::new(relator_scramble(&mut rng, moved, 2));
            let out = simplify(&g, 200).outcome;
            assert!(matches!(out, SimplifyOutcome::Inconclusive(_)), "{g}: {out:?}");
        }
    }
}

#[test]
fn simplify_preserves_abelian_invariants() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..600 {
        let count = rng.gen_range(1..=3);
        let rels: Vec<Word> = (0..count).map(|_| random_word(&mut rng, 14)).collect();
        let g = GroupPresentation::new(rels);
        let report = simplify(&g, 100);
        assert_eq!(report.outcome.abelian_invariants(), g.abelian_invariants(), "{g} -> {:?}", report.outcome);
        let again = simplify(&g, 100);
        assert_eq!(again, report, "simplify must be deterministic");
    }
}
