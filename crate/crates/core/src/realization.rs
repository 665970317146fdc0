//! Realizations of kappa-Minkowski coordinates by the ansatz
//! `x̂^i = x^i φ(A)`, `x̂^0 = x^0 ψ(A) + i a γ x^k∂_k` with `A = i a ∂_0`,
//! together with the deformed boosts, Dirac derivatives and d'Alembertian
//! that close with them into an extended Poincaré algebra.

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gauss::{fmt_rational, Gauss, Rational};
use crate::generators::Generators;
use crate::series::TruncatedSeries;
use crate::twist::{Family, TwistSpec};
use crate::weyl::DiffOp;

/// Which of the two realizations a twist induces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `ψ(A)`, constant `γ`, the sign `τ` of `[x̂^0, x̂^k] = i a τ x̂^k` and
/// `ε = η_00`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizationSpec {
    psi: TruncatedSeries,
    gamma: Rational,
    tau: i8,
    epsilon: i8,
    dim: usize,
}

impl RealizationSpec {
    pub fn new(psi: TruncatedSeries, gamma: Rational, tau: i8, epsilon: i8, dim: usize) -> Result<Self> {
        if !psi.constant_term().is_one() {
            return Err(Error::NonUnitPsiConstantTerm);
        }
        if tau.abs() != 1 || epsilon.abs() != 1 {
            return Err(Error::InvalidSpec(format!("tau={tau}, epsilon={epsilon} must be ±1")));
        }
        Generators::new(dim, psi.order())?;
        Ok(Self { psi, gamma, tau, epsilon, dim })
    }

    /// `ψ = 1 + rA`, Lorentzian.
    pub fn linear(r: Rational, gamma: Rational, tau: i8, dim: usize, order: usize) -> Result<Self> {
        let psi = TruncatedSeries::linear(Gauss::one(), Gauss::real(r), order);
        Self::new(psi, gamma, tau, -1, dim)
    }

    /// The realization a twist induces on one side.
    pub fn from_twist(spec: &TwistSpec, side: Side) -> Result<Self> {
        let (r, gamma, tau) = match (spec.family, side) {
            (Family::Jordanian { r }, Side::Left) => (r, Rational::zero(), 1),
            (Family::Jordanian { r }, Side::Right) => (r, -Rational::one(), -1),
            (Family::Abelian { s }, Side::Left) => (Rational::zero(), s, 1),
            (Family::Abelian { s }, Side::Right) => (Rational::zero(), s - Rational::one(), -1),
        };
        Self::linear(r, gamma, tau, spec.dim, spec.order)
    }

    pub fn with_epsilon(&self, epsilon: i8) -> Result<Self> {
        Self::new(self.psi.clone(), self.gamma, self.tau, epsilon, self.dim)
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self { psi: self.psi.with_order(order), ..self.clone() }
    }

    pub fn psi(&self) -> &TruncatedSeries {
        &self.psi
    }

    pub fn gamma(&self) -> Rational {
        self.gamma
    }

    pub fn tau(&self) -> i8 {
        self.tau
    }

    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.psi.order()
    }

    /// `Some(r)` when `ψ = 1 + rA` exactly.
    fn linear_slope(&self) -> Option<Rational> {
        let c = self.psi.coeffs();
        if c.iter().skip(2).any(|x| !x.is_zero()) {
            return None;
        }
        let r = c.get(1).cloned().unwrap_or_else(Gauss::zero);
        r.is_real().then_some(r.re)
    }
}

impl Serialize for RealizationSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RealizationSpec", 6)?;
        st.serialize_field("psi", &self.psi.display_in("A"))?;
        st.serialize_field("gamma", &fmt_rational(&self.gamma))?;
        st.serialize_field("tau", &self.tau)?;
        st.serialize_field("epsilon", &self.epsilon)?;
        st.serialize_field("n", &self.dim)?;
        st.serialize_field("N", &self.order())?;
        st.end()
    }
}

/// The functions of `A` fixed by the ansatz.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedFunctions {
    pub psi: TruncatedSeries,
    pub big_psi: TruncatedSeries,
    pub phi: TruncatedSeries,
    pub f1: TruncatedSeries,
    pub f2: TruncatedSeries,
    pub f3: TruncatedSeries,
    pub f4: TruncatedSeries,
    pub g1: TruncatedSeries,
    pub g2: TruncatedSeries,
    pub g3: TruncatedSeries,
    pub h1: TruncatedSeries,
    pub h2: TruncatedSeries,
}

fn real(x: Rational) -> Gauss {
    Gauss::real(x)
}

fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

/// `Ψ^β` at the given order, using closed forms for `ψ = 1` and `ψ = 1 + rA`
/// and `exp(β ∫ dA/ψ)` otherwise.
fn big_psi_pow(spec: &RealizationSpec, beta: Rational, order: usize) -> Result<TruncatedSeries> {
    let psi = spec.psi.with_order(order);
    match spec.linear_slope() {
        Some(r) if r.is_zero() => TruncatedSeries::var(order).scale(&real(beta)).exp_series(),
        Some(r) => psi.binom_pow(&(beta / r)),
        None => psi.invert()?.integral().scale(&real(beta)).exp_series(),
    }
}

impl DerivedFunctions {
    /// All twelve series at the given order. Divisions by `A` run at a
    /// higher internal order so every returned coefficient is exact.
    pub fn compute(spec: &RealizationSpec, order: usize) -> Result<Self> {
        let w = order + 2;
        let (g, t, e) = (spec.gamma, int(spec.tau.into()), int(spec.epsilon.into()));
        let pw = |beta: Rational| big_psi_pow(spec, beta, w);
        let big_psi = pw(int(1))?;
        let big_psi_inv = pw(int(-1))?;
        let phi = pw(g - t)?;
        let phi_inv = pw(t - g)?;
        let psi = spec.psi.with_order(w);
        let half = Gauss::frac(1, 2);

        let g2 = big_psi.sub(&big_psi_inv)?.div_by_var_pow(1)?.scale(&half);
        let f1 = pw(g)?.mul(&g2)?;
        let f2 = psi.mul(&phi_inv)?;
        let f3 = phi_inv.scale(&real(e * t / int(2)));
        let f4 = phi_inv.scale(&real(-e * g));
        let g1 = pw(-g)?;
        let h1 = pw(t - g - g)?;
        let g3 = h1.scale(&real(-t / int(2)));
        let h2 = big_psi.add(&big_psi_inv)?.sub(&TruncatedSeries::constant(Gauss::int(2), w))?.div_by_var_pow(2)?;

        let cut = |s: TruncatedSeries| s.with_order(order);
        Ok(Self {
            psi: cut(psi),
            big_psi: cut(big_psi),
            phi: cut(phi),
            f1: cut(f1),
            f2: cut(f2),
            f3: cut(f3),
            f4: cut(f4),
            g1: cut(g1),
            g2: cut(g2),
            g3: cut(g3),
            h1: cut(h1),
            h2: cut(h2),
        })
    }

    /// Name and series pairs in display order.
    pub fn named(&self) -> Vec<(&'static str, &TruncatedSeries)> {
        vec![
            ("psi", &self.psi),
            ("Psi", &self.big_psi),
            ("phi", &self.phi),
            ("F1", &self.f1),
            ("F2", &self.f2),
            ("F3", &self.f3),
            ("F4", &self.f4),
            ("G1", &self.g1),
            ("G2", &self.g2),
            ("G3", &self.g3),
            ("H1", &self.h1),
            ("H2", &self.h2),
        ]
    }
}

pub fn derive_functions(spec: &RealizationSpec) -> Result<DerivedFunctions> {
    DerivedFunctions::compute(spec, spec.order())
}

/// Concrete operators of one realization.
#[derive(Clone, Debug)]
pub struct RealizedGenerators {
    pub dim: usize,
    pub order: usize,
    /// `η_μμ`.
    pub eta: Vec<i128>,
    /// `x̂^μ`.
    pub x_up: Vec<DiffOp>,
    /// `x̂_μ = η_μν x̂^ν`.
    pub x_low: Vec<DiffOp>,
    /// `M_μν`, antisymmetric.
    pub m: Vec<Vec<DiffOp>>,
    /// `D_μ`.
    pub d_low: Vec<DiffOp>,
    /// Deformed d'Alembertian.
    pub box_op: DiffOp,
}

impl RealizedGenerators {
    #[allow(clippy::needless_range_loop)]
    pub fn build(spec: &RealizationSpec, order: usize) -> Result<Self> {
        let f = DerivedFunctions::compute(spec, order)?;
        let n = spec.dim;
        let gens = Generators::new(n, order)?;
        let sym = |s: &TruncatedSeries| DiffOp::of_symbol_a(s, n, order);
        let eps = Gauss::int(spec.epsilon.into());
        let ia = |op: &DiffOp, c: &Gauss| op.scale_a(1).scale(&(c * &Gauss::i()));
        let d0 = gens.p(0);
        let laplace = (1..n).try_fold(gens.zero(), |acc, k| acc.add(&gens.p(k).pow(2)?))?;
        let dil = gens.dilatation();

        let mut x_up = vec![gens.x(0).mul(&sym(&f.psi))?.add(&ia(&dil, &real(spec.gamma)))?];
        let phi = sym(&f.phi);
        for k in 1..n {
            x_up.push(gens.x(k).mul(&phi)?);
        }
        let x_low: Vec<DiffOp> =
            x_up.iter().enumerate().map(|(mu, x)| if mu == 0 { x.scale(&eps) } else { x.clone() }).collect();

        let (f1, f2, f3, f4) = (sym(&f.f1), sym(&f.f2), sym(&f.f3), sym(&f.f4));
        let x0_low = gens.x(0).scale(&eps);
        let mut m = vec![vec![gens.zero(); n]; n];
        for i in 1..n {
            let xi = gens.x(i);
            let pi = gens.p(i);
            let boost = xi
                .mul(&d0)?
                .mul(&f1)?
                .sub(&x0_low.mul(&pi)?.mul(&f2)?)?
                .add(&ia(&xi.mul(&laplace)?.mul(&f3)?, &Gauss::one()))?
                .add(&ia(&dil.mul(&pi)?.mul(&f4)?, &Gauss::one()))?;
            m[0][i] = boost.neg();
            m[i][0] = boost;
            for j in 1..n {
                if i != j {
                    m[i][j] = xi.mul(&gens.p(j))?.sub(&gens.x(j).mul(&pi)?)?;
                }
            }
        }

        let g1 = sym(&f.g1);
        let mut d_low = vec![d0.mul(&sym(&f.g2))?.add(&ia(&laplace.mul(&sym(&f.g3))?, &Gauss::one()))?];
        for k in 1..n {
            d_low.push(gens.p(k).mul(&g1)?);
        }
        let box_op = laplace.mul(&sym(&f.h1))?.sub(&d0.pow(2)?.mul(&sym(&f.h2))?)?;
        let eta = (0..n).map(|mu| if mu == 0 { spec.epsilon.into() } else { 1 }).collect();
        Ok(Self { dim: n, order, eta, x_up, x_low, m, d_low, box_op })
    }

    pub fn with_order(&self, order: usize) -> Self {
        let cut = |v: &[DiffOp]| v.iter().map(|x| x.with_order(order)).collect::<Vec<_>>();
        Self {
            dim: self.dim,
            order,
            eta: self.eta.clone(),
            x_up: cut(&self.x_up),
            x_low: cut(&self.x_low),
            m: self.m.iter().map(|row| cut(row)).collect(),
            d_low: cut(&self.d_low),
            box_op: self.box_op.with_order(order),
        }
    }
}

pub fn build_generators(spec: &RealizationSpec) -> Result<RealizedGenerators> {
    RealizedGenerators::build(spec, spec.order())
}

/// Outcome of one family of identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity_id: String,
    pub pass: bool,
    pub first_failure_order: Option<u32>,
    pub failing_instance: Option<String>,
}

impl IdentityCheck {
    fn new(id: &str) -> Self {
        Self { identity_id: id.to_string(), pass: true, first_failure_order: None, failing_instance: None }
    }

    fn record(&mut self, instance: impl FnOnce() -> String, diff: Option<u32>) {
        if let Some(k) = diff {
            if self.pass || self.first_failure_order.is_some_and(|f| k < f) {
                self.first_failure_order = Some(k);
                self.failing_instance = Some(instance());
            }
            self.pass = false;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub spec: RealizationSpec,
    /// Identities are exact through this power of `a`.
    pub verified_through: usize,
    pub identities: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(|c| c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|c| c.identity_id == id)
    }
}

fn cmp(lhs: &DiffOp, rhs: &DiffOp, order: usize) -> Option<u32> {
    lhs.with_order(order).first_difference(&rhs.with_order(order))
}

/// Checks `[x̂^0, x̂^k] = iaτx̂^k` and the brackets of the extended algebra
/// among `x̂_μ`, `M_μν`, `D_μ` and `□̃`. Operators are built one order
/// beyond the spec so every identity is exact through `N`.
pub fn verify_extended_algebra(spec: &RealizationSpec) -> Result<IdentityReport> {
    verify_extended_algebra_on(spec, &RealizedGenerators::build(spec, spec.order() + 1)?)
}

/// Same checks on explicitly supplied operators, which must be built at
/// order `N + 1` for the spec's `N`.
pub fn verify_extended_algebra_on(spec: &RealizationSpec, g: &RealizedGenerators) -> Result<IdentityReport> {
    let big_n = spec.order();
    let n = g.dim;
    let order = g.order;
    let one = DiffOp::one(n, order);
    let zero = DiffOp::zero(n, order);
    let tau = Gauss::int(spec.tau.into());
    // i a τ X
    let iat = |x: &DiffOp| x.scale_a(1).scale(&(&tau * &Gauss::i()));
    let eta = |mu: usize, nu: usize| if mu == nu { Gauss::int(g.eta[mu]) } else { Gauss::zero() };
    // i a_μ with a_μ = η_μλ a^λ and a^λ = (τa, 0, ...)
    let ia_low = |mu: usize, x: &DiffOp| if mu == 0 { iat(x).scale(&eta(0, 0)) } else { zero.clone() };
    let box2 = g.box_op.scale_a(2).scale(&Gauss::frac(1, 2));
    let root = one.add(&box2)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|mu| (mu + 1..n).map(move |nu| (mu, nu))).collect();
    let mut checks = Vec::new();

    let mut c = IdentityCheck::new("kM2");
    for k in 1..n {
        c.record(|| format!("k={k}"), cmp(&g.x_up[0].commutator(&g.x_up[k])?, &iat(&g.x_up[k]), big_n));
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L1");
    for &(mu, nu) in &pairs {
        for &(rho, la) in &pairs {
            let lhs = g.m[mu][nu].commutator(&g.m[rho][la])?;
            let rhs = g.m[mu][la]
                .scale(&eta(nu, rho))
                .add(&g.m[nu][rho].scale(&eta(mu, la)))?
                .sub(&g.m[mu][rho].scale(&eta(nu, la)))?
                .sub(&g.m[nu][la].scale(&eta(mu, rho)))?;
            c.record(|| format!("M{mu}{nu},M{rho}{la}"), cmp(&lhs, &rhs, big_n));
        }
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L2");
    for &(mu, nu) in &pairs {
        for la in 0..n {
            let lhs = g.m[mu][nu].commutator(&g.x_low[la])?;
            let rhs = g.x_low[mu]
                .scale(&eta(nu, la))
                .sub(&g.x_low[nu].scale(&eta(mu, la)))?
                .sub(&ia_low(mu, &g.m[nu][la]))?
                .add(&ia_low(nu, &g.m[mu][la]))?;
            c.record(|| format!("M{mu}{nu},x{la}"), cmp(&lhs, &rhs, big_n));
        }
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L3");
    for &(mu, nu) in &pairs {
        c.record(|| format!("M{mu}{nu}"), cmp(&g.m[mu][nu].commutator(&g.box_op)?, &zero, big_n));
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L4");
    for mu in 0..n {
        let two_d = g.d_low[mu].scale(&Gauss::int(2));
        c.record(|| format!("box,x{mu}"), cmp(&g.box_op.commutator(&g.x_low[mu])?, &two_d, big_n));
        c.record(|| format!("box,D{mu}"), cmp(&g.box_op.commutator(&g.d_low[mu])?, &zero, big_n));
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L5");
    let mut casimir = zero.clone();
    for mu in 0..n {
        casimir = casimir.add(&g.d_low[mu].mul(&g.d_low[mu])?.scale(&eta(mu, mu)))?;
    }
    let rhs = g.box_op.mul(&one.add(&g.box_op.scale_a(2).scale(&Gauss::frac(1, 4)))?)?;
    c.record(|| "D.D".into(), cmp(&casimir, &rhs, big_n));
    checks.push(c);

    let mut c = IdentityCheck::new("Psi");
    let psi_minus_tau = big_psi_pow(spec, int(-i128::from(spec.tau)), order)?;
    let lhs = DiffOp::of_symbol_a(&psi_minus_tau, n, order);
    let rhs = root.sub(&iat(&g.d_low[0]))?;
    c.record(|| "Psi^-tau".into(), cmp(&lhs, &rhs, big_n));
    checks.push(c);

    let mut c = IdentityCheck::new("L6");
    for &(mu, nu) in &pairs {
        c.record(|| format!("D{mu},D{nu}"), cmp(&g.d_low[mu].commutator(&g.d_low[nu])?, &zero, big_n));
        for la in 0..n {
            let lhs = g.m[mu][nu].commutator(&g.d_low[la])?;
            let rhs = g.d_low[mu].scale(&eta(nu, la)).sub(&g.d_low[nu].scale(&eta(mu, la)))?;
            c.record(|| format!("M{mu}{nu},D{la}"), cmp(&lhs, &rhs, big_n));
        }
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L7");
    let diag = root.sub(&iat(&g.d_low[0]))?;
    for k in 1..n {
        c.record(|| format!("D{k},x0"), cmp(&g.d_low[k].commutator(&g.x_low[0])?, &zero, big_n));
        for j in 1..n {
            let rhs = if j == k { diag.clone() } else { zero.clone() };
            c.record(|| format!("D{k},x{j}"), cmp(&g.d_low[k].commutator(&g.x_low[j])?, &rhs, big_n));
        }
    }
    checks.push(c);

    let mut c = IdentityCheck::new("L8");
    for j in 1..n {
        let rhs = iat(&g.d_low[j]).neg();
        c.record(|| format!("D0,x{j}"), cmp(&g.d_low[0].commutator(&g.x_low[j])?, &rhs, big_n));
    }
    c.record(|| "D0,x0".into(), cmp(&g.d_low[0].commutator(&g.x_low[0])?, &root.neg(), big_n));
    checks.push(c);

    Ok(IdentityReport { spec: spec.clone(), verified_through: big_n, identities: checks })
}

fn ser_cmp(lhs: &TruncatedSeries, rhs: &TruncatedSeries, order: usize) -> Option<u32> {
    lhs.with_order(order).first_difference(&rhs.with_order(order)).map(|k| k as u32)
}

/// The defining ODEs of the boost functions and the system satisfied by the
/// Dirac-derivative and d'Alembertian functions. Functions are derived one
/// order beyond the spec so derivatives are exact through `N`. The second
/// system presupposes `ε = -1` and is only checked then.
pub fn verify_ode_systems(spec: &RealizationSpec) -> Result<IdentityReport> {
    let big_n = spec.order();
    let w = big_n + 1;
    let f = DerivedFunctions::compute(spec, w)?;
    let a = TruncatedSeries::var(w);
    let (gm, tau, eps) = (real(spec.gamma), Gauss::int(spec.tau.into()), Gauss::int(spec.epsilon.into()));
    let zero = TruncatedSeries::zero(w);
    let one = TruncatedSeries::one(w);
    let two = Gauss::int(2);
    let d = |s: &TruncatedSeries| s.derivative();
    let mut checks = Vec::new();
    let mut push = |id: &str, lhs: TruncatedSeries, rhs: &TruncatedSeries| {
        let mut c = IdentityCheck::new(id);
        c.record(|| id.to_string(), ser_cmp(&lhs, rhs, big_n));
        checks.push(c);
    };

    let a_f1 = a.mul(&f.f1)?;
    let lhs = f
        .f1
        .mul(&f.f2)?
        .add(&a.mul(&d(&f.f1))?.mul(&f.f2)?)?
        .add(&a_f1.mul(&f.f4)?.scale(&eps))?
        .sub(&a_f1.mul(&f.f3)?.scale(&(&two * &eps)))?;
    push("F1", lhs, &one);

    let lhs = f.f3.mul(&f.f3)?.scale(&two).sub(&d(&f.f3).mul(&f.f2)?.scale(&eps))?.add(&f.f3.mul(&f.f4)?)?;
    push("F2", lhs, &zero);

    let lhs = f
        .f1
        .mul(&f.psi)?
        .add(&a.mul(&d(&f.f1))?.mul(&f.psi)?)?
        .sub(&a_f1.scale(&(&gm + &tau)))?
        .sub(&f.phi)?;
    push("F4", lhs, &zero);

    push("kMode", d(&f.phi).mul(&f.psi)?, &f.phi.scale(&(&gm - &tau)));

    if spec.epsilon == -1 {
        let f34 = f.f3.add(&f.f4)?;
        push("A1", f.g1.mul(&f.f1)?, &f.g2);
        push("A2", f.f3.mul(&f.g1)?, &f.g3);
        push("A3", d(&f.g1).mul(&f.f2)?.add(&f.f4.mul(&f.g1)?)?, &zero);
        let lhs = a
            .mul(&d(&f.g2))?
            .mul(&f.f2)?
            .add(&f.f2.mul(&f.g2)?)?
            .add(&a_f1.mul(&f.g3)?.scale(&two))?
            .sub(&f.g1)?;
        push("A4", lhs, &zero);
        push("A5", d(&f.g3).mul(&f.f2)?.add(&f.g3.mul(&f34)?.scale(&two))?, &zero);
        let lhs = a
            .mul(&d(&f.h2))?
            .mul(&f.f2)?
            .add(&f.f2.mul(&f.h2)?.scale(&two))?
            .sub(&f.f1.mul(&f.h1)?.scale(&two))?;
        push("A6", lhs, &zero);
        push("A7", d(&f.h1).mul(&f.f2)?.add(&f34.mul(&f.h1)?.scale(&two))?, &zero);
    }
    Ok(IdentityReport { spec: spec.clone(), verified_through: big_n, identities: checks })
}

/// `ψ' + (n-1)γ = 0`, the condition for `x̂^0` to be formally self-adjoint.
pub fn check_hermiticity(spec: &RealizationSpec) -> bool {
    let big_n = spec.order();
    let dpsi = spec.psi.with_order(big_n + 1).derivative();
    let shift = TruncatedSeries::constant(real(spec.gamma * int(spec.dim as i128 - 1)), big_n + 1);
    dpsi.add(&shift).is_ok_and(|s| s.with_order(big_n).is_zero())
}

/// Whether every `x̂^μ` equals its formal adjoint.
pub fn coordinates_self_adjoint(spec: &RealizationSpec) -> Result<bool> {
    let g = build_generators(spec)?;
    for x in &g.x_up {
        if x.adjoint()? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Agreement of one ansatz coordinate with the twist-induced one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationMatch {
    pub side: Side,
    pub coordinate: usize,
    pub pass: bool,
    pub first_difference: Option<u32>,
}

/// Compares `x̂^μ` of the ansatz with `x^μ ⋆ (·)` and `(·) ⋆ x^μ` from the twist.
pub fn twist_cross_check(twist: &crate::twist::Twist) -> Result<Vec<RealizationMatch>> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        let g = build_generators(&RealizationSpec::from_twist(&twist.spec, side)?)?;
        for mu in 0..twist.dim() {
            let induced = match side {
                Side::Left => twist.left_realization(mu)?,
                Side::Right => twist.right_realization(mu)?,
            };
            let diff = g.x_up[mu].first_difference(&induced);
            out.push(RealizationMatch { side, coordinate: mu, pass: diff.is_none(), first_difference: diff });
        }
    }
    Ok(out)
}
