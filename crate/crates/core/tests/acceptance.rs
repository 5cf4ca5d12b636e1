//! Acceptance criteria. Every check is exact integer arithmetic; run with
//! `cargo test -p lensdist-core --test acceptance -- --nocapture` to see the
//! per-criterion report.

use std::time::Instant;

use lensdist_core::arith::{gcd, mod_inverse};
use lensdist_core::distance::{
    berge_pair, dh_bounds, dh_bounds_with, enumerate_dh1_family, DhOptions, DistanceStatus, WitnessGrade,
    CITE_FS_QR, CITE_GABAI, CITE_KMOS,
};
use lensdist_core::lens::{is_homeomorphic, normalize, qr_obstructed};
use lensdist_core::one_bridge::{basic_sequence, classify, Classification, OneBridgeKnotSpec};
use lensdist_core::pi1::{abelianization, presentation, simplify, GroupPresentation, Letter, SimplifyOutcome, Word, DEFAULT_FUEL};
use lensdist_core::surgery::{braid_surgery_lens, family_eval, filling_coefficients, FillingCoefficients, Slope};
use lensdist_core::{Convention, LensSpace, RawLensParams};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const PRINTED_SEQUENCE_64_23: [i64; 64] = [
    23, 46, 5, 28, 51, 10, 33, 56, 15, 38, 61, 20, 43, 2, 25, 48, 7, 30, 53, 12, 35, 58, //
    17, 40, 63, 22, 45, 4, 27, 50, 9, 32, 55, 14, 37, 60, 19, 42, 1, 24, 47, 6, 29, 52, //
    11, 34, 57, 16, 39, 62, 21, 44, 3, 26, 49, 8, 31, 54, 13, 36, 59, 18, 41, 0,
];

const PRINTED_R1: &str = "(a^3b)^3a^5b(a^3b)^3a^5b(a^3b)^3";
const PRINTED_R2: &str = "(a^3b)^3a^5b(a^3b)^3a^5b(a^3b)^2a^5b(a^3b)^3a^5b(a^3b)^3a^2b";

fn psi_scan(p: i64, q: i64, u: i64) -> i64 {
    (1..p).find(|j| (j * q).rem_euclid(p) == u).unwrap()
}

fn phi_scan(p: i64, q: i64, u: i64) -> i64 {
    let seq = basic_sequence(p, q).unwrap();
    (1..psi_scan(p, q, u) as usize).filter(|&j| seq.get(j) < u).count() as i64
}

fn ac1_basic_sequence() -> Check {
    let seq = basic_sequence(64, 23).map_err(|e| e.to_string())?;
    ensure!(seq.values == PRINTED_SEQUENCE_64_23, "sequence differs: {:?}", seq.values);
    Ok(())
}

fn ac2_phi_tilde() -> Check {
    let k = OneBridgeKnotSpec::new(64, 23, 19).unwrap();
    ensure!(k.psi() == 37 && psi_scan(64, 23, 19) == 37, "psi = {}", k.psi());
    ensure!(k.phi() == 10 && phi_scan(64, 23, 19) == 10, "phi = {}", k.phi());
    ensure!(k.phi_tilde() == 8, "phi_tilde = {}", k.phi_tilde());
    Ok(())
}

fn ac3_classification() -> Check {
    for (p, q, u) in [(64, 23, 19), (34, 13, 9)] {
        let inv = classify(p, q, u).unwrap();
        ensure!(inv.classification == Classification::Hyperbolic, "({p},{q},{u}) -> {:?}", inv);
        ensure!(inv.s3_candidates == [1], "({p},{q},{u}) candidates {:?}", inv.s3_candidates);
    }
    Ok(())
}

fn example_presentation() -> GroupPresentation {
    presentation(&OneBridgeKnotSpec::new(64, 23, 19).unwrap(), 1)
}

fn ac4_presentation_words() -> Check {
    let g = example_presentation();
    let r1: Word = PRINTED_R1.parse().unwrap();
    let r2: Word = PRINTED_R2.parse().unwrap();
    ensure!(g.relators() == [r1, r2], "relators {g}");
    ensure!(g.relators()[0].to_string() == PRINTED_R1, "rendered {}", g.relators()[0]);
    ensure!(g.relators()[1].to_string() == PRINTED_R2, "rendered {}", g.relators()[1]);
    Ok(())
}

fn ac5_trivial_group() -> Check {
    let g = example_presentation();
    let report = simplify(&g, DEFAULT_FUEL);
    ensure!(report.outcome == SimplifyOutcome::Trivial, "outcome {:?}", report.outcome);
    let ab = abelianization(&g).unwrap();
    ensure!(ab.matrix == [[37, 11], [64, 19]] && ab.h1_order == 1, "abelianization {:?}", ab);
    Ok(())
}

fn ac6_filling_formula() -> Check {
    let c = Convention::Unoriented;
    ensure!(
        filling_coefficients(7, Slope::integer(18)) == Ok(FillingCoefficients { x: 19, y: 7 }),
        "18/1 coefficients"
    );
    ensure!(
        filling_coefficients(7, Slope::integer(19)) == Ok(FillingCoefficients { x: 18, y: 7 }),
        "19/1 coefficients"
    );
    let mut rng = StdRng::seed_from_u64(6);
    let mut checked = 0;
    while checked < 200 {
        let (p, q) = (rng.gen_range(-1000i64..=1000), rng.gen_range(-1000i64..=1000));
        if gcd(p, q) != 1 {
            continue;
        }
        let got = normalize(braid_surgery_lens(7, Slope::new(p, q).unwrap(), Slope::integer(18)).unwrap(), c);
        let closed = LensSpace::new(18 * p - 49 * q, 19 * q - 7 * p, c).unwrap();
        ensure!(is_homeomorphic(&got, &closed, c), "{p}/{q}: {got} vs {closed}");
        checked += 1;
    }
    Ok(())
}

fn ac7_yamada_family() -> Check {
    let c = Convention::Unoriented;
    let l0 = family_eval("yamada_k35_fill15", Slope::integer(0)).unwrap().normalize(c);
    let l2 = family_eval("yamada_k35_fill15", Slope::integer(2)).unwrap().normalize(c);
    ensure!(l0 == LensSpace::from_canonical(64, 23).unwrap(), "r=0 gives {l0}");
    ensure!(l2 == LensSpace::from_canonical(34, 13).unwrap(), "r=2 gives {l2}");
    let oriented = LensSpace::new(64, 23, Convention::Oriented).unwrap();
    let other = LensSpace::from_canonical(64, 39).unwrap();
    ensure!(is_homeomorphic(&oriented, &other, Convention::Oriented), "L(64,23) vs L(64,39)");
    ensure!(mod_inverse(23, 64) == Some(39), "23^-1 mod 64");
    Ok(())
}

fn ac8_obstructions() -> Check {
    let c = Convention::Unoriented;
    let cases = [
        (LensSpace::S2_X_S1, CITE_GABAI),
        (LensSpace::RP3, CITE_KMOS),
        (LensSpace::new(5, 2, c).unwrap(), CITE_FS_QR),
    ];
    // squares mod 5 are {0,1,4}; ±2 = {2,3}
    let squares: Vec<i64> = (0..5).map(|x| x * x % 5).collect();
    ensure!(!squares.contains(&2) && !squares.contains(&3), "residues mod 5");
    ensure!(qr_obstructed(&cases[2].0) == Ok(true), "L(5,2) must be obstructed");
    for (l, cite) in cases {
        let r = dh_bounds(&LensSpace::S3, &l, c);
        ensure!(r.status == DistanceStatus::ExactlyTwo, "S3 vs {l}: {:?}", r.status);
        ensure!((r.dh_lower, r.dh_upper) == (2, 2), "S3 vs {l}: bounds");
        ensure!(r.evidence.iter().any(|e| e.citation == cite), "S3 vs {l}: missing {cite}");
    }
    Ok(())
}

fn ac9_gap_identity() -> Check {
    let mut rng = StdRng::seed_from_u64(9);
    let mut checked = 0;
    while checked < 500 {
        let (p, q) = (rng.gen_range(1i64..=100_000), rng.gen_range(-100_000i64..=100_000));
        if gcd(p, q) != 1 {
            continue;
        }
        let w = berge_pair(p, q).map_err(|e| e.to_string())?;
        ensure!((w.source.p() - w.target.p()).abs() == p, "p={p} q'={q}");
        checked += 1;
    }
    Ok(())
}

fn ac10_property_suites() -> Check {
    // lens: orbit partition agrees with is_homeomorphic, p <= 30
    for c in [Convention::Oriented, Convention::Unoriented] {
        for p in 2i64..=30 {
            let qs: Vec<i64> = (1..p).filter(|&q| gcd(p, q) == 1).collect();
            for &q1 in &qs {
                let inv = (1..p).find(|y| (q1 * y).rem_euclid(p) == 1).unwrap();
                let mut orbit = vec![q1, inv];
                if c == Convention::Unoriented {
                    orbit.extend([p - q1, p - inv]);
                }
                let a = LensSpace::from_canonical(p, q1).unwrap();
                for &q2 in &qs {
                    let b = LensSpace::from_canonical(p, q2).unwrap();
                    ensure!(is_homeomorphic(&a, &b, c) == orbit.contains(&q2), "L({p},{q1}) vs L({p},{q2}) {c}");
                    ensure!(is_homeomorphic(&a, &b, c) == is_homeomorphic(&b, &a, c), "symmetry");
                }
            }
        }
    }
    // one_bridge: permutation, s_psi = u, nonnegative min-arguments, p <= 100
    for p in 2i64..=100 {
        for q in (1..p).filter(|&q| gcd(p, q) == 1) {
            let seq = basic_sequence(p, q).unwrap();
            let mut sorted = seq.values.clone();
            sorted.sort_unstable();
            ensure!(sorted.iter().copied().eq(0..p) && seq.get(p as usize) == 0, "sequence ({p},{q})");
            for u in 1..p {
                let k = OneBridgeKnotSpec::new(p, q, u).unwrap();
                ensure!(seq.get(k.psi() as usize) == u, "s_psi ({p},{q},{u})");
                ensure!(k.phi_tilde_terms().iter().all(|&t| t >= 0), "terms ({p},{q},{u})");
            }
        }
    }
    // pi1: letter-count law and h1 order, p <= 60, r in [-3, 3]
    for p in 2i64..=60 {
        for q in (1..p).filter(|&q| gcd(p, q) == 1) {
            for u in 1..p {
                let k = OneBridgeKnotSpec::new(p, q, u).unwrap();
                let (psi, phi) = (k.psi(), k.phi());
                for r in -3..=3 {
                    let g = presentation(&k, r);
                    let (r1, r2) = (&g.relators()[0], &g.relators()[1]);
                    ensure!(r1.exponent_sum(0) == psi && r1.exponent_sum(1) == phi + r, "R1 counts ({p},{q},{u},{r})");
                    ensure!(r2.occurrences(0) as i64 == p && r2.occurrences(1) as i64 == u, "R2 counts ({p},{q},{u},{r})");
                    let order = abelianization(&g).unwrap().h1_order;
                    ensure!(order == (psi * u - (phi + r) * p).unsigned_abs(), "h1 ({p},{q},{u},{r})");
                }
            }
        }
    }
    // simplify keeps the abelianization on random presentations
    let mut rng = StdRng::seed_from_u64(10);
    let letters = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];
    for _ in 0..300 {
        let rels: Vec<Word> = (0..2)
            .map(|_| (0..rng.gen_range(1..12)).map(|_| letters[rng.gen_range(0..4)]).collect())
            .collect();
        let g = GroupPresentation::new(rels);
        let out = simplify(&g, 100).outcome;
        ensure!(out.abelian_invariants() == g.abelian_invariants(), "{g} -> {out:?}");
    }
    // evidence grading: family witnesses are asserted unless the criterion passes
    let ws = enumerate_dh1_family(&LensSpace::RP3, 4, 3).unwrap();
    ensure!(ws.iter().all(|w| w.grade == WitnessGrade::Asserted), "grades");
    let target = normalize(RawLensParams::new(-111, 43).unwrap(), Convention::Unoriented);
    let r = dh_bounds(&LensSpace::RP3, &target, Convention::Unoriented);
    ensure!(r.status == DistanceStatus::OneAsserted && r.dh_upper == 2, "asserted witness {:?}", r.status);
    let opts = DhOptions { degeneracy: Some(Slope::new(1, 5).unwrap()) };
    let r = dh_bounds_with(&LensSpace::RP3, &target, Convention::Unoriented, &opts);
    ensure!(r.witnesses.iter().any(|w| w.grade == WitnessGrade::CriterionVerified) && r.dh_upper == 1, "verified witness");
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("AC1 basic sequence of (64,23) matches the printed list", ac1_basic_sequence),
        ("AC2 phi_tilde(64,23,19) = 8 with psi = 37, phi = 10", ac2_phi_tilde),
        ("AC3 K(L(64,23);19) and K(L(34,13);9) are hyperbolic", ac3_classification),
        ("AC4 presentation(64,23,19,1) reproduces both printed relators", ac4_presentation_words),
        ("AC5 that presentation simplifies to Trivial; H1 matrix ((37,11),(64,19))", ac5_trivial_group),
        ("AC6 filling coefficients and 200 random braid-formula checks", ac6_filling_formula),
        ("AC7 Yamada family gives L(64,23), L(34,13); L(64,23) = L(64,39) oriented", ac7_yamada_family),
        ("AC8 d_H = 2 obstructions for S2xS1, RP3, L(5,2) against S3", ac8_obstructions),
        ("AC9 |r - r'| = p for 500 random pairs", ac9_gap_identity),
        ("AC10 property suites and evidence grading", ac10_property_suites),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match &result {
            Ok(()) => println!("PASS  {name}  ({ms} ms)"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed: {failures:?}");
}
