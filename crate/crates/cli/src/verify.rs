//! Verification suites run by `kforge verify`.

use kforge_core::closed_forms::{check_errata, compare_with_table, reference_table, weyl_poincare_table, HopfReport};
use kforge_core::hopf::{AxiomReport, DeformedHopf};
use kforge_core::realization::{
    check_hermiticity, twist_cross_check, verify_extended_algebra, verify_ode_systems, IdentityReport,
    RealizationMatch, RealizationSpec, Side,
};
use kforge_core::twist::{build_twist, CocycleReport, Family, Twist, TwistSpec};
use kforge_core::{gauss::fmt_rational, Rational, Result};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Cocycle,
    Hopf,
    Algebra,
    Ode,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Cocycle, Suite::Hopf, Suite::Algebra, Suite::Ode],
            s => vec![s],
        }
    }
}

/// The twist grid: Jordanian `r ∈ {-1, 1, 2, 3}`, Abelian `s ∈ {0, 1/2, 1}`.
pub fn grid(dim: usize, order: usize) -> Result<Vec<TwistSpec>> {
    let q = |n, d| Rational::new(n, d);
    let mut out = Vec::new();
    for r in [q(-1, 1), q(1, 1), q(2, 1), q(3, 1)] {
        out.push(TwistSpec::jordanian(r, dim, order)?);
    }
    for s in [q(0, 1), q(1, 2), q(1, 1)] {
        out.push(TwistSpec::abelian(s, dim, order)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct CocycleSuite {
    pub cocycle: CocycleReport,
    /// First failing order of the twist with its `a^2` coefficient corrupted.
    pub corrupted_first_failure: Option<u32>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErratumSummary {
    pub generator: String,
    pub refuted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfSuite {
    pub axioms: AxiomReport,
    /// `u S u⁻¹ = S` on every generator, so the control below is vacuous.
    pub u_conjugation_trivial: bool,
    /// Antipode axiom must fail once the `u`-conjugation is dropped, unless it is trivial.
    pub control_antipode_first_failure: Option<u32>,
    pub closed_forms: Vec<HopfReport>,
    pub errata: Vec<ErratumSummary>,
    /// Physical-basis table, present for the `r = -1`, `n = 4` twist.
    pub physical_basis: Option<PhysicalSuite>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhysicalSuite {
    pub brackets_hold: bool,
    pub closed_forms: Vec<HopfReport>,
    pub errata: Vec<ErratumSummary>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSuite {
    pub kappa_minkowski: bool,
    pub realization_match: Vec<RealizationMatch>,
    pub left: IdentityReport,
    pub right: IdentityReport,
    pub hermitian_left: bool,
    pub hermitian_right: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OdeSuite {
    pub reports: Vec<IdentityReport>,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SpecReport {
    pub family: &'static str,
    pub param: String,
    pub n: usize,
    #[serde(rename = "N")]
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleSuite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSuite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSuite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ode: Option<OdeSuite>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<Suite>,
    pub specs: Vec<SpecReport>,
    pub pass: bool,
}

fn cocycle_suite(twist: &Twist) -> Result<CocycleSuite> {
    let cocycle = twist.cocycle()?;
    let corrupted = twist.corrupted_cocycle()?;
    let pass = cocycle.holds && !corrupted.holds && corrupted.first_failure == Some(2);
    Ok(CocycleSuite { cocycle, corrupted_first_failure: corrupted.first_failure, pass })
}

fn summarize(errata: Vec<kforge_core::closed_forms::ErratumCheck>) -> Vec<ErratumSummary> {
    errata
        .into_iter()
        .map(|e| ErratumSummary {
            refuted: e.coproduct_breaks_homomorphism.unwrap_or(true) && e.antipode_differs_from_unique.unwrap_or(true),
            generator: e.generator,
        })
        .collect()
}

fn hopf_suite(twist: &Twist) -> Result<HopfSuite> {
    let hopf = DeformedHopf::new(twist)?;
    let gens = twist.spec.generators().igl_basis();
    let axioms = hopf.verify_axioms(&gens)?;
    let bare = hopf.without_u_conjugation();
    let control = bare.verify_antipode(&gens)?;
    let mut u_conjugation_trivial = true;
    for (_, x) in &gens {
        u_conjugation_trivial &= hopf.antipode(x)? == bare.antipode(x)?;
    }
    let table = reference_table(&twist.spec)?;
    let closed_forms = compare_with_table(&hopf, &table)?;
    let errata = summarize(check_errata(&hopf, &table)?);
    let physical_basis = match twist.spec.family {
        Family::Jordanian { r } if r == -Rational::from_integer(1) && twist.spec.dim == 4 => {
            let t = weyl_poincare_table(twist.spec.order)?;
            let errata = summarize(t.errata);
            let brackets_hold = t.brackets.iter().all(|b| b.holds);
            let pass = brackets_hold && t.reports.iter().all(|r| r.matched) && errata.iter().all(|e| e.refuted);
            Some(PhysicalSuite { brackets_hold, closed_forms: t.reports, errata, pass })
        }
        _ => None,
    };
    let pass = axioms.pass()
        && (u_conjugation_trivial || !control.pass)
        && closed_forms.iter().all(|r| r.matched)
        && errata.iter().all(|e| e.refuted)
        && physical_basis.as_ref().is_none_or(|p| p.pass);
    Ok(HopfSuite {
        axioms,
        u_conjugation_trivial,
        control_antipode_first_failure: control.first_failure,
        closed_forms,
        errata,
        physical_basis,
        pass,
    })
}

fn algebra_suite(twist: &Twist) -> Result<AlgebraSuite> {
    let kappa_minkowski = twist.extract_theta()?.kappa_minkowski;
    let realization_match = twist_cross_check(twist)?;
    let left_spec = RealizationSpec::from_twist(&twist.spec, Side::Left)?;
    let right_spec = RealizationSpec::from_twist(&twist.spec, Side::Right)?;
    let left = verify_extended_algebra(&left_spec)?;
    let right = verify_extended_algebra(&right_spec)?;
    let pass = kappa_minkowski && realization_match.iter().all(|m| m.pass) && left.pass() && right.pass();
    Ok(AlgebraSuite {
        kappa_minkowski,
        realization_match,
        hermitian_left: check_hermiticity(&left_spec),
        hermitian_right: check_hermiticity(&right_spec),
        left,
        right,
        pass,
    })
}

fn ode_suite(spec: &TwistSpec) -> Result<OdeSuite> {
    let mut reports = Vec::new();
    for side in [Side::Left, Side::Right] {
        let rs = RealizationSpec::from_twist(spec, side)?;
        reports.push(verify_ode_systems(&rs)?);
        reports.push(verify_ode_systems(&rs.with_epsilon(1)?)?);
    }
    let pass = reports.iter().all(IdentityReport::pass);
    Ok(OdeSuite { reports, pass })
}

fn run_one(spec: &TwistSpec, suite: Suite, twist: &Twist, report: &mut SpecReport) -> Result<()> {
    match suite {
        Suite::Cocycle => report.cocycle = Some(cocycle_suite(twist)?),
        Suite::Hopf => report.hopf = Some(hopf_suite(twist)?),
        Suite::Algebra => report.algebra = Some(algebra_suite(twist)?),
        Suite::Ode => report.ode = Some(ode_suite(spec)?),
        Suite::All => unreachable!("expanded"),
    }
    Ok(())
}

fn spec_report(spec: &TwistSpec, suites: &[Suite]) -> Result<SpecReport> {
    let twist = build_twist(spec)?;
    let partial: Vec<SpecReport> = suites
        .par_iter()
        .map(|&s| {
            let mut r = SpecReport::default();
            run_one(spec, s, &twist, &mut r)?;
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut out = SpecReport {
        family: spec.family.name(),
        param: fmt_rational(&spec.family.param()),
        n: spec.dim,
        order: spec.order,
        ..Default::default()
    };
    for p in partial {
        out.cocycle = out.cocycle.or(p.cocycle);
        out.hopf = out.hopf.or(p.hopf);
        out.algebra = out.algebra.or(p.algebra);
        out.ode = out.ode.or(p.ode);
    }
    out.pass = out.cocycle.as_ref().is_none_or(|s| s.pass)
        && out.hopf.as_ref().is_none_or(|s| s.pass)
        && out.algebra.as_ref().is_none_or(|s| s.pass)
        && out.ode.as_ref().is_none_or(|s| s.pass);
    Ok(out)
}

/// Runs the requested suites over the specs, in parallel, reporting in input order.
pub fn run(specs: &[TwistSpec], suite: Suite) -> Result<VerifyReport> {
    let suites = suite.expand();
    let reports: Vec<SpecReport> = specs.par_iter().map(|s| spec_report(s, &suites)).collect::<Result<_>>()?;
    let pass = reports.iter().all(|r| r.pass);
    Ok(VerifyReport { suites, specs: reports, pass })
}
