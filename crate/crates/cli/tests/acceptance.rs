//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use kforge::expr::parse_poly;
use kforge_core::closed_forms::{check_errata, compare_with_table, reference_table, weyl_poincare_table};
use kforge_core::dispersion::{m0_squared_from_series, series_expand_check, DispersionModel};
use kforge_core::gauss::q;
use kforge_core::hopf::DeformedHopf;
use kforge_core::lie::check_so_n1_isomorphism;
use kforge_core::realization::{
    check_hermiticity, derive_functions, twist_cross_check, verify_extended_algebra, verify_ode_systems,
    RealizationSpec, Side,
};
use kforge_core::twist::{build_twist, TwistSpec};
use kforge_core::{Gauss, Poly, Rational, TruncatedSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn grid(order: usize) -> Vec<TwistSpec> {
    let mut out = Vec::new();
    for r in [q(-1, 1), q(1, 1), q(2, 1), q(3, 1)] {
        out.push(TwistSpec::jordanian(r, 4, order).unwrap());
    }
    for s in [q(0, 1), q(1, 2), q(1, 1)] {
        out.push(TwistSpec::abelian(s, 4, order).unwrap());
    }
    out
}

fn label(spec: &TwistSpec) -> String {
    format!("{} {}", spec.family.name(), spec.family.param())
}

fn within(elapsed: Duration, limit_s: u64) -> bool {
    elapsed < Duration::from_secs(limit_s)
}

/// Star commutators of the coordinates compared directly with `[x0, xm] = i a xm`.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for spec in grid(6) {
        let twist = build_twist(&spec).unwrap();
        let reported = twist.extract_theta().unwrap().kappa_minkowski;
        let x = |m| Poly::x(m, 4, 6);
        let mut direct = true;
        for mu in 0..4 {
            for nu in mu + 1..4 {
                let c = twist.star_commutator(&x(mu), &x(nu)).unwrap();
                let expected = if mu == 0 { x(nu).scale(&Gauss::i()).scale_a(1) } else { Poly::zero(4, 6) };
                direct &= c == expected;
            }
        }
        if !(reported && direct) {
            failures.push(label(&spec));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && within(elapsed, 60);
    outcome(pass, format!("7 specs at N=6, failures {failures:?}, {elapsed:.1?} (limit 60 s)"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for spec in grid(4) {
        let twist = build_twist(&spec).unwrap();
        let cocycle = twist.cocycle().unwrap();
        let corrupted = twist.corrupted_cocycle().unwrap();
        let axioms = DeformedHopf::new(&twist).unwrap().verify_axioms(&spec.generators().igl_basis()).unwrap();
        if !(cocycle.holds && cocycle.normalized && corrupted.first_failure == Some(2) && axioms.pass()) {
            failures.push(label(&spec));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && within(elapsed, 120);
    outcome(pass, format!("7 specs at N=4, corrupted twists fail at a^2, failures {failures:?}, {elapsed:.1?} (limit 120 s)"))
}

fn criterion_3() -> Outcome {
    let (mut checked, mut errata, mut refuted) = (0, 0, 0);
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for spec in grid(4) {
        let hopf = DeformedHopf::new(&build_twist(&spec).unwrap()).unwrap();
        let table = reference_table(&spec).unwrap();
        for rep in compare_with_table(&hopf, &table).unwrap() {
            checked += 1;
            seen.push(rep.generator.clone());
            if !rep.matched {
                failures.push(format!("{} {}", label(&spec), rep.generator));
            }
        }
        for e in check_errata(&hopf, &table).unwrap() {
            errata += 1;
            refuted += usize::from(e.coproduct_breaks_homomorphism != Some(false) && e.antipode_differs_from_unique != Some(false));
        }
    }
    let physical = weyl_poincare_table(4).unwrap();
    let brackets = physical.brackets.iter().all(|b| b.holds);
    for rep in &physical.reports {
        checked += 1;
        if !rep.matched {
            failures.push(format!("physical {}", rep.generator));
        }
    }
    for e in &physical.errata {
        errata += 1;
        refuted += usize::from(e.coproduct_breaks_homomorphism != Some(false) && e.antipode_differs_from_unique != Some(false));
    }
    let boosts_present = (1..4).all(|k| seen.iter().any(|g| *g == format!("L0_{k}")));
    let pass = failures.is_empty() && brackets && checked >= 20 && boosts_present && refuted == errata;
    outcome(
        pass,
        format!(
            "{checked} golden checks, mismatches {failures:?}, physical brackets {brackets}, printed errata refuted {refuted}/{errata}"
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for spec in grid(6) {
        for m in twist_cross_check(&build_twist(&spec).unwrap()).unwrap() {
            count += 1;
            if !m.pass {
                failures.push(format!("{} {:?} x{}", label(&spec), m.side, m.coordinate));
            }
        }
    }
    outcome(failures.is_empty(), format!("{count} coordinates at N=6, mismatches {failures:?}"))
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut identities = 0;
    for spec in grid(6) {
        for side in [Side::Left, Side::Right] {
            let rs = RealizationSpec::from_twist(&spec, side).unwrap();
            let reports = [
                verify_extended_algebra(&rs).unwrap(),
                verify_ode_systems(&rs).unwrap(),
                verify_ode_systems(&rs.with_epsilon(1).unwrap()).unwrap(),
            ];
            for rep in &reports {
                for id in &rep.identities {
                    identities += 1;
                    if !id.pass {
                        failures.push(format!("{} {side:?} eps={} {}", label(&spec), rep.spec.epsilon(), id.identity_id));
                    }
                }
            }
        }
    }
    outcome(failures.is_empty(), format!("{identities} identity checks at N=6, failures {failures:?}"))
}

/// The tabulated closed forms, rebuilt by series division.
fn criterion_6() -> Outcome {
    let n = 8;
    let g = |c: i128| Gauss::int(c);
    let lin = |c0: i128, c1: i128| TruncatedSeries::linear(g(c0), g(c1), n);
    let cst = |c: Rational| TruncatedSeries::constant(Gauss::real(c), n);
    let psi = lin(1, -1);
    let psi_inv = cst(q(1, 1)).div(&psi).unwrap();
    let two_minus_a_over = lin(2, -1).div(&lin(2, -2)).unwrap();
    let half_psi_inv = psi_inv.scale(&Gauss::frac(1, 2));
    let minus_half_psi_inv = psi_inv.scale(&Gauss::frac(-1, 2));
    let g2 = lin(-2, 1).div(&lin(-2, 2)).unwrap();

    let left = derive_functions(&RealizationSpec::linear(q(-1, 1), q(0, 1), 1, 4, n).unwrap()).unwrap();
    let right = derive_functions(&RealizationSpec::linear(q(-1, 1), q(-1, 1), -1, 4, n).unwrap()).unwrap();
    let left_table = [
        ("psi", &left.psi, psi.clone()),
        ("phi", &left.phi, psi.clone()),
        ("F1", &left.f1, two_minus_a_over.clone()),
        ("F2", &left.f2, cst(q(1, 1))),
        ("F3", &left.f3, minus_half_psi_inv.clone()),
        ("F4", &left.f4, cst(q(0, 1))),
        ("G1", &left.g1, cst(q(1, 1))),
        ("G2", &left.g2, g2.clone()),
        ("G3", &left.g3, minus_half_psi_inv),
        ("H1", &left.h1, psi_inv.clone()),
        ("H2", &left.h2, psi_inv.clone()),
    ];
    let right_table = [
        ("psi", &right.psi, psi.clone()),
        ("phi", &right.phi, cst(q(1, 1))),
        ("F1", &right.f1, lin(1, 0).sub(&TruncatedSeries::linear(g(0), Gauss::frac(1, 2), n)).unwrap()),
        ("F2", &right.f2, psi.clone()),
        ("F3", &right.f3, cst(q(1, 2))),
        ("F4", &right.f4, cst(q(-1, 1))),
        ("G1", &right.g1, psi_inv.clone()),
        ("G2", &right.g2, g2),
        ("G3", &right.g3, half_psi_inv),
        ("H1", &right.h1, psi_inv.clone()),
        ("H2", &right.h2, psi_inv),
    ];
    let mut failures = Vec::new();
    for (side, table) in [("left", &left_table), ("right", &right_table)] {
        for (name, computed, expected) in table.iter() {
            if *computed != expected {
                failures.push(format!("{side} {name}"));
            }
        }
    }
    outcome(failures.is_empty(), format!("22 series through A^{n}, mismatches {failures:?}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=4 {
        for tau in [1, -1] {
            let rep = check_so_n1_isomorphism(n, tau);
            let ok = rep.pass && rep.source_jacobi && rep.target_jacobi && rep.homomorphism && rep.bijective;
            if !ok {
                failures.push(format!("n={n} tau={tau}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && within(elapsed, 10);
    outcome(pass, format!("n in 2..=4, tau = ±1, failures {failures:?}, {elapsed:.1?} (limit 10 s)"))
}

/// `a² - b²` in double-double precision via fused multiply-add.
fn diff_of_squares(a: f64, b: f64) -> f64 {
    let (pa, pb) = (a * a, b * b);
    let (ea, eb) = (a.mul_add(a, -pa), b.mul_add(b, -pb));
    (pa - pb) + (ea - eb)
}

fn criterion_8() -> Outcome {
    let expansion = series_expand_check().unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut worst_b: f64 = 0.0;
    for _ in 0..1000 {
        let kappa = rng.gen_range(0.5..10.0);
        let k0 = rng.gen_range(-0.9 * kappa..10.0 * kappa);
        let k = rng.gen_range(0.0..10.0 * kappa);
        let m = DispersionModel::minimal(kappa).unwrap().m0_squared(k0, k).unwrap();
        let reference = diff_of_squares(k0, k);
        worst_b = worst_b.max((m * (1.0 + k0 / kappa) - reference).abs() / reference.abs());
    }

    let spec = RealizationSpec::linear(q(0, 1), q(1, 1), 1, 4, 10).unwrap();
    let f = derive_functions(&spec).unwrap();
    let model = DispersionModel::abelian(1.0, 1.0).unwrap();
    let mut worst_c: f64 = 0.0;
    for i in 0..=40 {
        let k0 = -0.1 + 0.005 * i as f64;
        for k in [0.0, 0.05, 0.3, 1.0] {
            let closed = model.m0_squared(k0, k).unwrap();
            let series = m0_squared_from_series(&f.h1, &f.h2, 1.0, k0, k);
            let scale = (k0 * k0 + k * k).max(f64::MIN_POSITIVE);
            worst_c = worst_c.max((closed - series).abs() / scale);
        }
    }

    let kappa = 1e12;
    let models = [
        DispersionModel::abelian(0.0, kappa).unwrap(),
        DispersionModel::abelian(0.5, kappa).unwrap(),
        DispersionModel::abelian(1.0, kappa).unwrap(),
        DispersionModel::jordanian(-1.0, kappa).unwrap(),
        DispersionModel::jordanian(3.0, kappa).unwrap(),
        DispersionModel::minimal(kappa).unwrap(),
    ];
    let mut worst_d: f64 = 0.0;
    for model in &models {
        for (k0, k) in [(1.0, 0.0), (2.0, 1.0), (5.0, 3.0), (10.0, 0.5), (0.5, 2.0), (100.0, 99.0)] {
            let m = model.m0_squared(k0, k).unwrap();
            let exact = diff_of_squares(k0, k);
            worst_d = worst_d.max((m - exact).abs() / (k0 * k0 + k * k));
        }
    }

    let pass = expansion.pass && worst_b <= 1e-12 && worst_c <= 1e-8 && worst_d <= 1e-9;
    outcome(
        pass,
        format!(
            "(a) energy {:?} momentum {:?}; (b) max rel {worst_b:.2e} (tol 1e-12); (c) max rel {worst_c:.2e} (tol 1e-8); (d) max rel {worst_d:.2e} (tol 1e-9)",
            expansion.energy_bracket, expansion.momentum_bracket
        ),
    )
}

/// Hermitian cases as listed: `(ψ = 1, γ = 0)` and `(ψ = 1 ± (n-1)A, γ = ∓1)`.
fn listed_hermitian(spec: &RealizationSpec) -> bool {
    let n = spec.dim() as i128;
    let order = spec.order();
    let psi_is = |slope: i128| *spec.psi() == TruncatedSeries::linear(Gauss::int(1), Gauss::int(slope), order);
    let gamma = spec.gamma();
    (psi_is(0) && gamma == q(0, 1)) || (psi_is(n - 1) && gamma == q(-1, 1)) || (psi_is(1 - n) && gamma == q(1, 1))
}

fn criterion_9() -> Outcome {
    let mut specs = Vec::new();
    for spec in grid(4) {
        for side in [Side::Left, Side::Right] {
            specs.push((format!("{} {side:?}", label(&spec)), RealizationSpec::from_twist(&spec, side).unwrap()));
        }
    }
    specs.push(("psi=1-3A gamma=1".into(), RealizationSpec::linear(q(-3, 1), q(1, 1), 1, 4, 4).unwrap()));
    let mut mismatches = Vec::new();
    let mut hermitian = Vec::new();
    for (name, spec) in &specs {
        let flag = check_hermiticity(spec);
        if flag {
            hermitian.push(name.clone());
        }
        if flag != listed_hermitian(spec) {
            mismatches.push(name.clone());
        }
    }
    outcome(mismatches.is_empty(), format!("{} specs, hermitian {hermitian:?}, mismatches {mismatches:?}", specs.len()))
}

fn run_verify() -> (bool, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_kforge"))
        .args(["verify", "--order", "4", "--suite", "all"])
        .env_remove("KFORGE_ORDER")
        .output()
        .expect("kforge runs");
    (out.status.success(), out.stdout)
}

fn corpus_round_trip() -> (usize, Vec<String>) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus/expressions.txt");
    let text = std::fs::read_to_string(path).expect("corpus present");
    let mut failures = Vec::new();
    let mut count = 0;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        count += 1;
        let ok = parse_poly(line, 4).is_ok_and(|e| {
            let printed = e.to_string();
            parse_poly(&printed, 4).is_ok_and(|again| {
                again == e && again.to_string() == printed && again.to_poly(4, 4).ok() == e.to_poly(4, 4).ok()
            })
        });
        if !ok {
            failures.push(line.to_string());
        }
    }
    (count, failures)
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let (first_ok, first) = run_verify();
    let (second_ok, second) = run_verify();
    let identical = first == second && !first.is_empty();
    let (count, failures) = corpus_round_trip();
    let pass = first_ok && second_ok && identical && failures.is_empty() && count > 0;
    outcome(
        pass,
        format!(
            "grid verify at N=4 exit 0: {first_ok}/{second_ok}, byte-identical: {identical} ({} bytes), corpus {count} lines, failures {failures:?}, {:.1?}",
            first.len(),
            start.elapsed()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("kappa-Minkowski emergence", criterion_1),
        ("cocycle and Hopf axioms", criterion_2),
        ("closed-form coproduct and antipode tables", criterion_3),
        ("twist and ansatz realizations agree", criterion_4),
        ("ODE and extended algebra suites", criterion_5),
        ("r = -1 function tables", criterion_6),
        ("so(n,1) isomorphism", criterion_7),
        ("dispersion relations", criterion_8),
        ("hermiticity flags", criterion_9),
        ("CLI contract", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| outcome(false, format!("panicked: {:?}", e.downcast_ref::<String>().map(String::as_str).or(e.downcast_ref::<&str>().copied()))));
        let status = if result.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!result.pass);
        println!("criterion {}: {status} {name}: {}", k + 1, result.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
