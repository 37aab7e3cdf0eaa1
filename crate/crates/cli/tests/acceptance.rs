//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
//! criterion fails.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::Instant;

use common::frozen::frozen;
use common::{example_pair, genuine_pair, oracle, random_expression, EXAMPLE_LAMBDA};
use mannheim_core::curve::Curve;
use mannheim_core::expr::{parse_expr, ExprError};
use mannheim_core::frenet::{frenet_apparatus, synthesize_frames, FrameKind, FrenetFrame};
use mannheim_core::lorentz::Vec3L;
use mannheim_core::mannheim::*;
use mannheim_lab::spec::Builtin;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<(bool, String), String>;
type Criterion = (&'static str, fn() -> Check);

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn max_dev(a: Vec3L, b: Vec3L) -> f64 {
    (a - b).max_abs()
}

/// Printed Frenet vectors of the two built-in partner curves.
fn printed_frame(n: u8, s: f64) -> [Vec3L; 3] {
    let (sh, ch) = (s.sinh(), s.cosh());
    let (r3, r5) = (3f64.sqrt(), 5f64.sqrt());
    match n {
        1 => [
            Vec3L::new(-0.5 * ch, 0.5 * sh, r5 / 2.0),
            Vec3L::new(-sh, ch, 0.0),
            Vec3L::new(-r5 / 2.0 * ch, r5 / 2.0 * sh, 0.5),
        ],
        _ => [Vec3L::new(2.0 * ch, 2.0 * sh, r3), Vec3L::new(sh, ch, 0.0), Vec3L::new(-r3 * ch, -r3 * sh, -2.0)],
    }
}

/// Printed offset curves for `λ = 20`.
fn printed_offset(n: u8, s: f64) -> Vec3L {
    let (sh, ch) = (s.sinh(), s.cosh());
    let (r3, r5) = (3f64.sqrt(), 5f64.sqrt());
    match n {
        1 => Vec3L::new(-0.5 * sh - 10.0 * r5 * ch, 0.5 * ch + 10.0 * r5 * sh, r5 / 2.0 * s + 10.0),
        _ => Vec3L::new(2.0 * sh - 20.0 * r3 * ch, 2.0 * ch - 20.0 * r3 * sh, r3 * s - 40.0),
    }
}

fn frames_match_closed_forms() -> Check {
    let mut worst: f64 = 0.0;
    for b in Builtin::ALL {
        let c = b.curve();
        for s in [0.0, 0.5, 1.0] {
            let f = frenet_apparatus(&c, s).map_err(err)?;
            for (got, want) in f.vectors().into_iter().zip(printed_frame(b.number(), s)) {
                worst = worst.max(max_dev(got, want));
            }
        }
    }
    Ok((worst < 1e-9, format!("max component deviation {worst:.3e}")))
}

fn offsets_match_closed_forms() -> Check {
    let mut worst: f64 = 0.0;
    for b in Builtin::ALL {
        let c = b.curve();
        let alpha = offset_along_binormal(&c, EXAMPLE_LAMBDA).map_err(err)?;
        for s in c.grid(101) {
            worst = worst.max(max_dev(alpha.position(s).map_err(err)?, printed_offset(b.number(), s)));
        }
    }
    Ok((worst < 1e-9, format!("max deviation {worst:.3e} over 101 points")))
}

fn scalar_apparatus() -> Check {
    let expected = [(0.5, 5f64.sqrt() / 2.0), (2.0, 3f64.sqrt())];
    let mut worst: f64 = 0.0;
    for (b, (k, t)) in Builtin::ALL.into_iter().zip(expected) {
        let c = b.curve();
        for s in c.grid(101) {
            let f = frenet_apparatus(&c, s).map_err(err)?;
            worst = worst.max((f.kappa - k).abs()).max((f.tau - t).abs());
        }
    }
    Ok((worst < 1e-9, format!("max deviation {worst:.3e}")))
}

fn constant_distance() -> Check {
    let mut worst: f64 = 0.0;
    for n in [1, 2] {
        let r = verify_distance(&example_pair(n), 101).map_err(err)?;
        worst = worst.max(r.max_residual);
    }
    Ok((worst < 1e-9, format!("max |distance - 20| {worst:.3e}")))
}

fn varying(kind: FrameKind, range: (f64, f64), step: f64) -> Result<mannheim_core::frenet::Synthesis, String> {
    let kappa = parse_expr("1 + 0.3*sin(2*s)").map_err(err)?;
    let tau = parse_expr("0.5*cosh(s) - 0.2").map_err(err)?;
    synthesize_frames(kind, kappa, tau, &FrenetFrame::standard(kind), Vec3L::new(1.0, 2.0, 3.0), range, step).map_err(err)
}

fn frame_invariants() -> Check {
    let mut curves: Vec<Curve> = Builtin::ALL.iter().map(|b| b.curve()).collect();
    for n in [1, 2] {
        curves.push(example_pair(n).c);
    }
    for t in MannheimPairType::ALL {
        if let Some(p) = genuine_pair(t) {
            curves.push(p.c);
            curves.push(p.cstar);
        }
    }
    let (mut gram, mut cross): (f64, f64) = (0.0, 0.0);
    let mut drift: f64 = 0.0;
    for kind in FrameKind::ALL {
        let range = (0.0, 2.0);
        let syn = varying(kind, range, 1e-3)?;
        drift = drift.max(syn.max_gram_drift / (range.1 - range.0));
        curves.push(syn.curve);
    }
    for c in &curves {
        for s in c.grid(41) {
            let f = frenet_apparatus(c, s).map_err(err)?;
            gram = gram.max(f.gram_residual());
            cross = cross.max(f.cross_residual());
        }
    }
    Ok((
        gram < 1e-9 && cross < 1e-9 && drift < 1e-8,
        format!("{} curves; Gram {gram:.3e}, cross {cross:.3e}, synthesis drift {drift:.3e} per unit length", curves.len()),
    ))
}

fn synthesis_round_trip() -> Check {
    let (mut constant, mut smooth): (f64, f64) = (0.0, 0.0);
    let kappa = parse_expr("1 + 0.3*sin(2*s)").map_err(err)?;
    let tau = parse_expr("0.5*cosh(s) - 0.2").map_err(err)?;
    for kind in FrameKind::ALL {
        let c = synthesize_frames(kind, 1.3, 0.4, &FrenetFrame::standard(kind), Vec3L::ZERO, (0.0, 2.0), 1e-3)
            .map_err(err)?
            .curve;
        for s in c.grid(41) {
            let f = frenet_apparatus(&c, s).map_err(err)?;
            constant = constant.max((f.kappa - 1.3).abs()).max((f.tau - 0.4).abs());
        }
        let c = varying(kind, (0.0, 1.5), 1e-3)?.curve;
        for s in c.grid(41) {
            let f = frenet_apparatus(&c, s).map_err(err)?;
            let (k, t) = (kappa.eval(s).map_err(err)?, tau.eval(s).map_err(err)?);
            smooth = smooth.max((f.kappa - k).abs()).max((f.tau - t).abs());
        }
    }
    Ok((constant < 1e-6 && smooth < 1e-5, format!("constant {constant:.3e}, varying {smooth:.3e}")))
}

fn cross_product_table() -> Check {
    let e = [Vec3L::E1, Vec3L::E2, Vec3L::E3];
    let table = [
        [Vec3L::ZERO, -Vec3L::E3, Vec3L::E2],
        [Vec3L::E3, Vec3L::ZERO, Vec3L::E1],
        [-Vec3L::E2, -Vec3L::E1, Vec3L::ZERO],
    ];
    let mut wrong = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if e[i].cross(e[j]) != table[i][j] {
                wrong.push(format!("e{}^e{}", i + 1, j + 1));
            }
        }
    }
    Ok((wrong.is_empty(), if wrong.is_empty() { "9 of 9 exact".into() } else { format!("mismatch at {}", wrong.join(", ")) }))
}

/// Identities audited on pairs that satisfy the collinearity hypothesis,
/// with the tolerance each must meet.
const CONDITIONAL: [(&str, f64); 9] = [
    (TORSION_PRODUCT, 1e-5),
    (LINEAR_CURVATURE_RELATION, 1e-5),
    (ANGLE_RATE_CURVATURE, 1e-4),
    (PARTNER_TORSION_COMBINATION, 1e-4),
    (CURVATURE_PROJECTION, 1e-4),
    (TORSION_PROJECTION, 1e-4),
    (TORSION_SQUARE, 1e-5),
    (INDICATRIX_CURVATURE, 1e-4),
    (INDICATRIX_TORSION, 1e-4),
];

/// Kind of the Mannheim curve in a pair of the given type.
fn mannheim_kind(t: MannheimPairType) -> FrameKind {
    match t {
        MannheimPairType::Type1 | MannheimPairType::Type3 => FrameKind::SpacelikeCurveEpsMinus,
        MannheimPairType::Type2 | MannheimPairType::Type4 => FrameKind::TimelikeCurve,
        MannheimPairType::Type5 => FrameKind::SpacelikeCurveEpsPlus,
    }
}

struct PipelineResult {
    best: Option<(f64, MannheimPair)>,
    log: Vec<String>,
}

fn helix(kind: FrameKind, tau: f64) -> Option<Curve> {
    synthesize_frames(kind, 1.0, tau, &FrenetFrame::standard(kind), Vec3L::ZERO, (0.0, 1.0), 1e-3).ok().map(|s| s.curve)
}

/// Signed mismatch between the curve-test estimate `σλ_est` and the `λ`
/// the collinearity condition requires, on a unit-curvature helix.
fn mismatch(t: MannheimPairType, tau: f64, sigma: f64) -> Option<(f64, f64)> {
    let c = helix(mannheim_kind(t), tau)?;
    let test = mannheim_curve_test(&c, t, 5).ok()?;
    let lambda = sigma * test.lambda_estimate;
    Some((lambda - collinearity_lambda(&c, 0.5).ok()?, lambda))
}

/// Curve test then offset along the normal, over helices with `κ = 1` and a
/// scan of torsions, refining every sign change of the mismatch.
fn pipeline(t: MannheimPairType) -> PipelineResult {
    let mut log = Vec::new();
    let mut best: Option<(f64, MannheimPair)> = None;
    let mut consider = |tau: f64, lambda: f64, log: &mut Vec<String>, is_root: bool| {
        let Some(c) = helix(mannheim_kind(t), tau) else { return };
        match MannheimPair::from_curve(&c, lambda) {
            Ok(pair) if pair.pair_type == t => {
                if let Ok(r) = max_mannheim_residual(&pair, 21) {
                    if best.as_ref().is_none_or(|(b, _)| r < *b) {
                        best = Some((r, pair));
                    }
                }
            }
            Ok(pair) if is_root => log.push(format!("root tau={tau:.6} lambda={lambda:.6} gives a {} pair", pair.pair_type)),
            Err(e) if is_root => log.push(format!("root tau={tau:.6} lambda={lambda:.6}: {e}")),
            _ => {}
        }
    };
    let taus: Vec<f64> = (1..=48).map(|i| 0.05 * i as f64).collect();
    for sigma in [1.0, -1.0] {
        let values: Vec<Option<(f64, f64)>> = taus.iter().map(|&tau| mismatch(t, tau, sigma)).collect();
        for (i, v) in values.iter().enumerate() {
            if let Some((_, lambda)) = v {
                consider(taus[i], *lambda, &mut log, false);
            }
        }
        for i in 1..taus.len() {
            let (Some((g0, _)), Some((g1, _))) = (values[i - 1], values[i]) else { continue };
            if g0.signum() == g1.signum() {
                continue;
            }
            let (mut a, mut b, mut ga) = (taus[i - 1], taus[i], g0);
            for _ in 0..50 {
                let m = 0.5 * (a + b);
                let Some((gm, _)) = mismatch(t, m, sigma) else { break };
                if gm.signum() == ga.signum() {
                    (a, ga) = (m, gm);
                } else {
                    b = m;
                }
            }
            let root = 0.5 * (a + b);
            if let Some((_, lambda)) = mismatch(t, root, sigma) {
                consider(root, lambda, &mut log, true);
            }
        }
    }
    PipelineResult { best, log }
}

fn judge_conditional(pair: &MannheimPair) -> Result<(bool, String), String> {
    let v = Verifier::new(pair, 21).map_err(err)?;
    let reports = v.all(&Tolerances::default()).map_err(err)?;
    let mut failed = Vec::new();
    for (name, tol) in CONDITIONAL {
        let r = reports.iter().find(|r| r.identity == name).ok_or_else(|| format!("missing report {name}"))?;
        if !(r.max_residual < tol) {
            failed.push(format!("{name} {:.2e}", r.max_residual));
        }
    }
    Ok((failed.is_empty(), if failed.is_empty() { "all identities hold".into() } else { failed.join(", ") }))
}

fn conditional_identities() -> Check {
    let mut all_pass = true;
    let mut lines = Vec::new();
    for t in MannheimPairType::ALL {
        let pipe = pipeline(t);
        let best = pipe.best.as_ref().map(|(r, _)| *r);
        let mut line = match best {
            Some(r) => format!("{t}: pipeline best residual {r:.3e}"),
            None => format!("{t}: pipeline produced no pair of this type"),
        };
        for l in &pipe.log {
            line.push_str(&format!("; {l}"));
        }
        let (ok, detail) = match pipe.best {
            Some((r, pair)) if r < 1e-6 => judge_conditional(&pair)?,
            _ => match genuine_pair(t) {
                Some(pair) => {
                    let hyp = max_mannheim_residual(&pair, 21).map_err(err)?;
                    let (ok, d) = judge_conditional(&pair)?;
                    (ok, format!("synthetic pair with residual {hyp:.1e}: {d}"))
                }
                None => (false, "no pair of this type exists: the causal characters admit no collinear normal and binormal".into()),
            },
        };
        all_pass &= ok;
        lines.push(format!("{line}; {detail}"));
    }
    Ok((all_pass, format!("\n    {}", lines.join("\n    "))))
}

fn example_oracle_regression() -> Check {
    let tol = 1e-8;
    let mut worst: f64 = 0.0;
    let mut types = Vec::new();
    for n in [1u8, 2] {
        let f = frozen(n);
        let pair = example_pair(n);
        types.push(pair.pair_type.number());
        let c = Builtin::from_number(n).unwrap().curve();
        let c_offset = offset_along_binormal(&c, EXAMPLE_LAMBDA).map_err(err)?.reparametrize_unit(1024).map_err(err)?;
        if classify_pair(&c_offset, &c).map_err(err)? != f.pair_type {
            return Ok((false, format!("example {n} classified as {}", pair.pair_type)));
        }
        let v = Verifier::new(&pair, 101).map_err(err)?;
        for (p, (dec, _)) in v.points().iter().zip(v.angles().map_err(err)?) {
            worst = worst.max((mannheim_residual(&pair, p.s).map_err(err)? - f.rho).abs());
            worst = worst.max((dec.theta - f.theta).abs());
        }
        let reports = v.all(&Tolerances::default()).map_err(err)?;
        for (name, expected) in f.residuals {
            let r = reports.iter().find(|r| r.identity == name).ok_or_else(|| format!("missing report {name}"))?;
            if r.verdict != Verdict::Reported {
                return Ok((false, format!("example {n}: {name} is {:?}", r.verdict)));
            }
            for x in &r.residuals {
                worst = worst.max((x - expected).abs());
            }
        }
    }
    Ok((worst < tol, format!("types {types:?}; max deviation {worst:.3e}")))
}

fn ratio_not_constant() -> Check {
    let mut all = true;
    let mut parts = Vec::new();
    for n in [1, 2] {
        let pair = example_pair(n);
        let values = pair
            .grid(101)
            .into_iter()
            .map(|s| curvature_center_ratio(&pair, s).map(|d| d.ratio))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let (mean, std) = mean_std(&values);
        let ok = std > 1e-6 * mean.abs();
        all &= ok;
        parts.push(format!("example {n}: mean {mean:.6}, std {std:.2e}"));
    }
    Ok((all, parts.join("; ")))
}

fn expression_fuzz() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6e6e);
    let points = [0.0, 0.7, -1.3];
    let (mut accepted, mut rejected, mut disagreements) = (0, 0, 0);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let src = random_expression(&mut rng);
        let reference: Option<Vec<Option<f64>>> = points.iter().map(|&s| oracle::eval(&src, s)).collect();
        match (parse_expr(&src), reference) {
            (Err(_), None) => rejected += 1,
            (Ok(e), Some(r)) => {
                accepted += 1;
                for (&s, want) in points.iter().zip(r) {
                    match (e.eval(s), want) {
                        (Ok(x), Some(y)) if x == y || x.is_nan() && y.is_nan() => {}
                        (Ok(x), Some(y)) => worst = worst.max((x - y).abs() / x.abs().max(y.abs())),
                        (Err(ExprError::DivisionByZero), None) => {}
                        _ => disagreements += 1,
                    }
                }
            }
            _ => disagreements += 1,
        }
    }
    Ok((
        disagreements == 0 && worst <= 1e-15,
        format!("{accepted} accepted, {rejected} rejected, {disagreements} disagreements, max relative difference {worst:.1e}"),
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("example Frenet frames", frames_match_closed_forms),
        ("example offset curves", offsets_match_closed_forms),
        ("example curvature and torsion", scalar_apparatus),
        ("constant partner distance", constant_distance),
        ("frame invariants", frame_invariants),
        ("synthesis round trip", synthesis_round_trip),
        ("cross-product table", cross_product_table),
        ("conditional identity suite", conditional_identities),
        ("example oracle regression", example_oracle_regression),
        ("curvature-center ratio is not constant", ratio_not_constant),
        ("expression grammar fuzz", expression_fuzz),
    ];
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match std::panic::catch_unwind(run) {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".into()),
        };
        let secs = start.elapsed().as_secs_f64();
        println!("criterion {:>2} {}: {title} ({detail}) [{secs:.2}s]", i + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
