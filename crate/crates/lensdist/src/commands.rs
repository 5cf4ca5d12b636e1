use lensdist_core::distance::{
    berge_pair, dh_bounds_with, enumerate_dh1_family, DhOptions, DistanceReport, WitnessPair,
};
use lensdist_core::lens::{is_homeomorphic, qr_obstructed};
use lensdist_core::one_bridge::basic_sequence;
use lensdist_core::pi1::{abelianization, presentation, SimplifyStep};
use lensdist_core::surgery::{
    braid_surgery_lens, families, family, filling_coefficients, pseudo_anosov_candidate, slope_distance,
    wu_hyperbolic_guarantee, FamilyFormula,
};
use lensdist_core::{Classification, Convention, LensSpace, OneBridgeKnotSpec, RawLensParams, SimplifyOutcome, Word};
use serde::Serialize;

use crate::args::{BraidCmd, Command, DistanceCmd, FamilyCmd, KnotCmd, LensCmd, SurgeryCmd};
use crate::literal::parse_lens;
use crate::records::*;
use crate::table::{Columns, KeyValue};
use crate::CliError;

/// A rendered result: the JSON record and its table form.
pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
}

fn output<T: Serialize>(record: &T, text: String) -> Result<Output, CliError> {
    let json = serde_json::to_value(record).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Output { json, text })
}

fn invalid(what: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("invalid {what}: {e}"))
}

fn lens_arg(what: &str, s: &str) -> Result<RawLensParams, CliError> {
    parse_lens(s).map_err(|e| invalid(what, e))
}

pub fn dispatch(cmd: Command, conv: Convention) -> Result<Output, CliError> {
    match cmd {
        Command::Lens(c) => lens(c, conv),
        Command::Knot(c) => knot(c),
        Command::Family(c) => family_cmd(c, conv),
        Command::Surgery(c) => surgery(c, conv),
        Command::Braid(c) => braid(c),
        Command::Wu { surgery, degeneracy } => {
            let guaranteed = wu_hyperbolic_guarantee(surgery, degeneracy).map_err(|e| invalid("<DEGENERACY>", e))?;
            let rec = WuRecord { surgery, degeneracy, distance: slope_distance(surgery, degeneracy), hyperbolic_guaranteed: guaranteed };
            let text = KeyValue::new()
                .row("surgery", surgery)
                .row("degeneracy", degeneracy)
                .row("distance", rec.distance)
                .row("hyperbolic", if guaranteed { "guaranteed (distance >= 3)" } else { "not guaranteed" })
                .render();
            output(&rec, text)
        }
        Command::Distance(c) => distance(c, conv),
    }
}

fn lens(cmd: LensCmd, conv: Convention) -> Result<Output, CliError> {
    match cmd {
        LensCmd::Normalize(a) => {
            let raw = RawLensParams::new(a.p, a.q).map_err(|e| invalid("<P> <Q>", e))?;
            let l = raw.normalize(conv);
            let rec = NormalizeRecord { input: raw, convention: conv, lens: l, name: l.to_string(), orbit: l.orbit(conv) };
            output(&rec, format!("{l}\n"))
        }
        LensCmd::Homeo { p1, q1, p2, q2 } => {
            let a = LensSpace::new(p1, q1, conv).map_err(|e| invalid("<P1> <Q1>", e))?;
            let b = LensSpace::new(p2, q2, conv).map_err(|e| invalid("<P2> <Q2>", e))?;
            let h = is_homeomorphic(&a, &b, conv);
            let rec = HomeoRecord { a, b, convention: conv, homeomorphic: h };
            let verdict = if h { "homeomorphic" } else { "not homeomorphic" };
            output(&rec, format!("L({p1},{q1}) and L({p2},{q2}) are {verdict} ({conv})\n"))
        }
        LensCmd::Info(a) => {
            let l = LensSpace::new(a.p, a.q, conv).map_err(|e| invalid("<P> <Q>", e))?;
            let rec = LensInfoRecord {
                lens: l,
                name: l.to_string(),
                convention: conv,
                orbit: l.orbit(conv),
                betti1: l.betti1(),
                qr_obstructed: qr_obstructed(&l).ok(),
            };
            let qr = match rec.qr_obstructed {
                Some(true) => "yes: not surgery on a knot in S3",
                Some(false) => "no",
                None => "n/a",
            };
            let text = KeyValue::new()
                .row("lens", l)
                .row("convention", conv)
                .row("orbit", join(&rec.orbit))
                .row("betti1", rec.betti1)
                .row("qr obstruction", qr)
                .render();
            output(&rec, text)
        }
    }
}

fn knot_spec(p: i64, q: i64, u: i64) -> Result<OneBridgeKnotSpec, CliError> {
    OneBridgeKnotSpec::new(p, q, u).map_err(|e| invalid("<P> <Q> <U>", e))
}

fn knot(cmd: KnotCmd) -> Result<Output, CliError> {
    match cmd {
        KnotCmd::Invariants(a) => {
            let k = knot_spec(a.p, a.q, a.u)?;
            let inv = k.classify();
            let class = match inv.classification {
                Classification::HypothesisUnverified => {
                    "HypothesisUnverified (no longitudinal surgery has |H1| = 1)".to_string()
                }
                c => format!("{c} (assuming the candidate surgery yields S3)"),
            };
            let text = KeyValue::new()
                .row("knot", format!("K(L({},{});{})", a.p, a.q, a.u))
                .row("psi", inv.psi)
                .row("phi", inv.phi)
                .row("phi_tilde", inv.phi_tilde)
                .row("phi_tilde_terms", join(&inv.phi_tilde_terms))
                .row("s3_candidates", if inv.s3_candidates.is_empty() { "none".into() } else { join(&inv.s3_candidates) })
                .row("classification", class)
                .render();
            output(&InvariantsRecord { p: a.p, q: a.q, u: a.u, invariants: inv }, text)
        }
        KnotCmd::Scan { p, q, range } => {
            knot_spec(p, q, 1)?;
            let (lo, hi) = range.unwrap_or((1, p));
            if lo < 1 || hi > p {
                return Err(CliError::Invalid(format!("invalid --range: u must lie in 1..{p}")));
            }
            let mut t = Columns::new(&["u", "psi", "phi", "phi_tilde", "s3_candidates", "classification"]);
            let mut knots = Vec::new();
            for u in lo..hi {
                let inv = knot_spec(p, q, u)?.classify();
                t.push(vec![
                    u.to_string(),
                    inv.psi.to_string(),
                    inv.phi.to_string(),
                    inv.phi_tilde.to_string(),
                    join(&inv.s3_candidates),
                    inv.classification.to_string(),
                ]);
                knots.push(InvariantsRecord { p, q, u, invariants: inv });
            }
            output(&ScanRecord { p, q, knots }, t.render())
        }
        KnotCmd::Sequence { p, q } => {
            let s = basic_sequence(p, q).map_err(|e| invalid("<P> <Q>", e))?;
            let rec = SequenceRecord { p, q, values: s.values.clone() };
            output(&rec, format!("{}\n", join(&rec.values)))
        }
        KnotCmd::Pi1 { knot, r, fuel, flat, steps } => {
            let k = knot_spec(knot.p, knot.q, knot.u)?;
            let g = presentation(&k, r);
            let ab = abelianization(&g).map_err(|e| CliError::Internal(e.to_string()))?;
            let report = g.simplify(fuel);
            let word = |w: &Word| if flat { w.to_flat() } else { w.to_string() };
            let mut text = String::new();
            for (i, w) in g.relators().iter().enumerate() {
                text.push_str(&format!("R{} = {}\n", i + 1, word(w)));
            }
            let m = ab.matrix;
            let order = if ab.h1_order == 0 { "infinite".to_string() } else { ab.h1_order.to_string() };
            let outcome = match &report.outcome {
                SimplifyOutcome::Trivial => "trivial".to_string(),
                SimplifyOutcome::CyclicOfOrder(0) => "Z".to_string(),
                SimplifyOutcome::CyclicOfOrder(n) => format!("Z/{n}"),
                SimplifyOutcome::Inconclusive(h) => format!("inconclusive, stopped at {h}"),
            };
            text.push_str(
                &KeyValue::new()
                    .row("abelianization", format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]))
                    .row("|H1|", order)
                    .row("simplified", outcome)
                    .row("rounds", report.rounds)
                    .render(),
            );
            if steps {
                for s in &report.steps {
                    text.push_str(&match s {
                        SimplifyStep::Dropped { relator } => format!("  drop {}\n", word(relator)),
                        SimplifyStep::Eliminated { generator, relator, value } => {
                            format!("  eliminate {generator} = {} using {}\n", word(value), word(relator))
                        }
                        SimplifyStep::Shortened { before, using, after } => {
                            format!("  shorten {} by {} to {}\n", word(before), word(using), word(after))
                        }
                    });
                }
            }
            let rec = Pi1Record {
                p: knot.p,
                q: knot.q,
                u: knot.u,
                r,
                presentation: g,
                abelianization: ab,
                outcome: report.outcome,
                rounds: report.rounds,
                fuel,
                steps: report.steps,
            };
            output(&rec, text)
        }
    }
}

fn formula_text(f: &FamilyFormula) -> String {
    match *f {
        FamilyFormula::BraidClosure { strands, filling, exponent_sum } => {
            let e = exponent_sum.map(|e| format!(", exponent sum {e}")).unwrap_or_default();
            format!("{strands}-strand braid closure, filling {filling}{e}")
        }
        FamilyFormula::IntegralLinear { p0, p1, q0, q1 } => format!("L({p0}{p1:+}r, {q0}{q1:+}r) on r/1"),
    }
}

fn family_cmd(cmd: FamilyCmd, conv: Convention) -> Result<Output, CliError> {
    match cmd {
        FamilyCmd::List => {
            let rec = FamilyListRecord {
                families: families()
                    .iter()
                    .map(|f| FamilyRecord {
                        name: f.name.into(),
                        description: f.description.into(),
                        citation: f.citation.into(),
                        formula: formula_text(&f.formula),
                    })
                    .collect(),
            };
            let mut t = Columns::new(&["name", "formula", "citation", "description"]);
            for f in &rec.families {
                t.push(vec![f.name.clone(), f.formula.clone(), f.citation.clone(), f.description.clone()]);
            }
            output(&rec, t.render())
        }
        FamilyCmd::Eval { name, surgery } => {
            let fam = family(&name).map_err(|e| invalid("<NAME>", e))?;
            let raw = fam.eval(surgery).map_err(|e| invalid("<SURGERY>", e))?;
            let l = raw.normalize(conv);
            let rec = FamilyEvalRecord { family: name, surgery, raw, convention: conv, lens: l, name: l.to_string() };
            output(&rec, format!("{l}\n"))
        }
    }
}

fn surgery(cmd: SurgeryCmd, conv: Convention) -> Result<Output, CliError> {
    match cmd {
        SurgeryCmd::Formula { strands, surgery, filling } => {
            let coefficients = filling_coefficients(strands, filling).map_err(|e| invalid("<STRANDS> <FILLING>", e))?;
            let raw = braid_surgery_lens(strands, surgery, filling).map_err(|e| invalid("<SURGERY>", e))?;
            let l = raw.normalize(conv);
            let rec = SurgeryRecord { strands, surgery, filling, coefficients, raw, convention: conv, lens: l, name: l.to_string() };
            let text = KeyValue::new()
                .row("x, y", format!("{}, {}", coefficients.x, coefficients.y))
                .row("raw", raw)
                .row("lens", l)
                .render();
            output(&rec, text)
        }
        SurgeryCmd::Coeffs { strands, filling } => {
            let c = filling_coefficients(strands, filling).map_err(|e| invalid("<STRANDS> <FILLING>", e))?;
            output(&CoeffsRecord { strands, filling, coefficients: c }, format!("x = {}, y = {}\n", c.x, c.y))
        }
    }
}

fn braid(cmd: BraidCmd) -> Result<Output, CliError> {
    let BraidCmd::Check { word, strands } = cmd;
    let n = match strands {
        Some(n) if n < word.strands() => {
            return Err(CliError::Invalid(format!(
                "invalid --strands: the word needs at least {} strands",
                word.strands()
            )))
        }
        Some(n) => n,
        None => word.strands(),
    };
    let e = word.exponent_sum();
    let verdict = pseudo_anosov_candidate(n, e).map_err(|err| invalid("<WORD>", err))?;
    let rec = BraidRecord { generators: word.generators().to_vec(), strands: n, exponent_sum: e, verdict };
    let text = KeyValue::new()
        .row("strands", n)
        .row("exponent_sum", e)
        .row("verdict", format!("{verdict:?}"))
        .render();
    output(&rec, text)
}

fn witness_record(w: WitnessPair, conv: Convention) -> WitnessRecord {
    WitnessRecord {
        citation: w.citation().into(),
        source_lens: w.source.normalize(conv),
        target_lens: w.target.normalize(conv),
        witness: w,
    }
}

fn witness_table(ws: &[WitnessRecord]) -> String {
    let mut t = Columns::new(&["kind", "slope", "source", "target", "grade", "citation"]);
    for w in ws {
        t.push(vec![
            format!("{:?}", w.witness.kind),
            w.witness.surgery_slope().to_string(),
            w.source_lens.to_string(),
            w.target_lens.to_string(),
            format!("{:?}", w.witness.grade),
            w.citation.clone(),
        ]);
    }
    t.render()
}

fn grade(w: WitnessPair, degeneracy: Option<lensdist_core::Slope>) -> Result<WitnessPair, CliError> {
    match degeneracy {
        Some(d) => w.graded_with(d).map_err(|e| invalid("--degeneracy", e)),
        None => Ok(w),
    }
}

fn distance(cmd: DistanceCmd, conv: Convention) -> Result<Output, CliError> {
    match cmd {
        DistanceCmd::Report { a, b, degeneracy } => {
            let a = lens_arg("<A>", &a)?.normalize(conv);
            let b = lens_arg("<B>", &b)?.normalize(conv);
            if let Some(d) = degeneracy {
                if d.num() <= 0 {
                    return Err(CliError::Invalid("invalid --degeneracy: must be a positive slope".into()));
                }
            }
            let rep = dh_bounds_with(&a, &b, conv, &DhOptions { degeneracy });
            output(&rep, report_text(&rep, conv))
        }
        DistanceCmd::Witnesses { lens, count, q_min, degeneracy } => {
            let l = lens_arg("<LENS>", &lens)?.normalize(conv);
            let ws = enumerate_dh1_family(&l, count, q_min).map_err(|e| invalid("<LENS>", e))?;
            let ws = ws
                .into_iter()
                .map(|w| grade(w, degeneracy).map(|w| witness_record(w, conv)))
                .collect::<Result<Vec<_>, _>>()?;
            let text = format!("{l}\n{}", witness_table(&ws));
            output(&WitnessesRecord { lens: l, convention: conv, witnesses: ws }, text)
        }
        DistanceCmd::Pair { p, q_prime, degeneracy } => {
            let w = berge_pair(p, q_prime).map_err(|e| invalid("<P> <Q_PRIME>", e))?;
            let rec = witness_record(grade(w, degeneracy)?, conv);
            let text = witness_table(std::slice::from_ref(&rec));
            output(&rec, text)
        }
    }
}

fn report_text(rep: &DistanceReport, conv: Convention) -> String {
    let dh = if rep.dh_lower == rep.dh_upper {
        rep.dh_lower.to_string()
    } else {
        format!("[{}, {}]", rep.dh_lower, rep.dh_upper)
    };
    let mut s = KeyValue::new()
        .row("a", rep.a)
        .row("b", rep.b)
        .row("convention", conv)
        .row("d", rep.d_value)
        .row("d_H", dh)
        .row("status", format!("{:?}", rep.status))
        .render();
    if !rep.evidence.is_empty() {
        let mut t = Columns::new(&["evidence", "citation", "detail"]);
        for e in &rep.evidence {
            t.push(vec![format!("{:?}", e.kind), e.citation.clone(), e.detail.clone()]);
        }
        s.push('\n');
        s.push_str(&t.render());
    }
    if !rep.witnesses.is_empty() {
        let ws: Vec<_> = rep.witnesses.iter().map(|w| witness_record(*w, conv)).collect();
        s.push('\n');
        s.push_str(&witness_table(&ws));
    }
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}
