//! Deformed Klein-Gordon dispersion relations
//! `m0² = k0² H2(-k0/κ) - k² H1(-k0/κ)` evaluated in closed form, inverted
//! for `k0`, and written out as tables.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{q, Gauss};
use crate::realization::{derive_functions, RealizationSpec};
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DispersionFamily {
    /// `[2κ sinh(k0/2κ)]² - k² exp[(2s-1)k0/κ]`.
    Abelian { s: f64 },
    /// `κ²[Ψ + Ψ⁻¹ - 2] - k² Ψ` with `Ψ = (1 - r k0/κ)^{1/r}`.
    Jordanian { r: f64 },
    /// `m0²(1 + k0/κ) = k0² - k²`.
    JordanianMinimal,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DispersionModel {
    #[serde(flatten)]
    pub family: DispersionFamily,
    pub kappa: f64,
    pub n: usize,
}

impl DispersionModel {
    pub fn new(family: DispersionFamily, kappa: f64, n: usize) -> Result<Self> {
        if !(kappa.is_finite() && kappa > 0.0) {
            return Err(Error::InvalidSpec(format!("kappa must be positive and finite, got {kappa}")));
        }
        match family {
            DispersionFamily::Jordanian { r } if r == 0.0 || !r.is_finite() => return Err(Error::ZeroJordanianParameter),
            DispersionFamily::Abelian { s } if !s.is_finite() => {
                return Err(Error::InvalidSpec(format!("s must be finite, got {s}")))
            }
            _ => {}
        }
        Ok(Self { family, kappa, n })
    }

    pub fn abelian(s: f64, kappa: f64) -> Result<Self> {
        Self::new(DispersionFamily::Abelian { s }, kappa, crate::DEFAULT_DIM)
    }

    pub fn jordanian(r: f64, kappa: f64) -> Result<Self> {
        Self::new(DispersionFamily::Jordanian { r }, kappa, crate::DEFAULT_DIM)
    }

    pub fn minimal(kappa: f64) -> Result<Self> {
        Self::new(DispersionFamily::JordanianMinimal, kappa, crate::DEFAULT_DIM)
    }

    /// `m0²` at energy `k0` and spatial momentum norm `knorm`.
    pub fn m0_squared(&self, k0: f64, knorm: f64) -> Result<f64> {
        let x = k0 / self.kappa;
        let k2 = knorm * knorm;
        match self.family {
            DispersionFamily::Abelian { s } => {
                let e = 2.0 * self.kappa * (0.5 * x).sinh();
                Ok(e * e - k2 * ((2.0 * s - 1.0) * x).exp())
            }
            DispersionFamily::Jordanian { r } => {
                let u = 1.0 - r * x;
                if u.is_nan() || u <= 0.0 {
                    return Err(Error::DomainViolation(format!("1 - r k0/kappa = {u} <= 0")));
                }
                // Ψ = e^w; Ψ + Ψ⁻¹ - 2 = (2 sinh(w/2))²
                let w = (-r * x).ln_1p() / r;
                let e = 2.0 * self.kappa * (0.5 * w).sinh();
                Ok(e * e - k2 * w.exp())
            }
            DispersionFamily::JordanianMinimal => {
                let u = 1.0 + x;
                if u.is_nan() || u <= 0.0 {
                    return Err(Error::DomainViolation(format!("1 + k0/kappa = {u} <= 0")));
                }
                Ok((k0 - knorm) * (k0 + knorm) / u)
            }
        }
    }

    pub fn point(&self, k0: f64, knorm: f64) -> DispersionPoint {
        let m = self.m0_squared(k0, knorm).ok();
        DispersionPoint { k0, knorm, m0sq: m, domain_ok: m.is_some() }
    }

    /// `k0` in `bracket` with `m0²(k0, knorm) = m0²`, by the Illinois
    /// variant of regula falsi.
    pub fn solve_k0(&self, knorm: f64, m0: f64, bracket: (f64, f64)) -> Result<f64> {
        let target = m0 * m0;
        let tol = 1e-12 * target.max(1.0);
        let f = |k0: f64| self.m0_squared(k0, knorm).map(|v| v - target);
        let (mut a, mut b) = bracket;
        let (mut fa, mut fb) = (f(a)?, f(b)?);
        if fa.abs() <= tol {
            return Ok(a);
        }
        if fb.abs() <= tol {
            return Ok(b);
        }
        if fa.signum() == fb.signum() {
            return Err(Error::NoSignChange(bracket.0, bracket.1));
        }
        let mut side = 0i8;
        for _ in 0..500 {
            let mut c = (a * fb - b * fa) / (fb - fa);
            if !c.is_finite() || c <= a.min(b) || c >= a.max(b) {
                c = 0.5 * (a + b);
            }
            let fc = f(c)?;
            if fc.abs() <= tol || (b - a).abs() <= f64::EPSILON * c.abs().max(1e-300) {
                return Ok(c);
            }
            if fc.signum() == fb.signum() {
                b = c;
                fb = fc;
                if side == -1 {
                    fa *= 0.5;
                }
                side = -1;
            } else {
                a = c;
                fa = fc;
                if side == 1 {
                    fb *= 0.5;
                }
                side = 1;
            }
        }
        Ok(if fa.abs() < fb.abs() { a } else { b })
    }
}

/// `k0² H2(-k0/κ) - k² H1(-k0/κ)` from truncated series in `A`.
pub fn m0_squared_from_series(h1: &TruncatedSeries, h2: &TruncatedSeries, kappa: f64, k0: f64, knorm: f64) -> f64 {
    let a = -k0 / kappa;
    k0 * k0 * h2.eval_f64(a).0 - knorm * knorm * h1.eval_f64(a).0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DispersionPoint {
    pub k0: f64,
    pub knorm: f64,
    pub m0sq: Option<f64>,
    pub domain_ok: bool,
}

/// First coefficients of the two brackets in
/// `m0² = k0²[c0 + c1 x + c2 x² + …] - k²[d0 + d1 x + d2 x² + …]`, `x = k0/κ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionCheck {
    pub r: String,
    pub energy_bracket: Vec<String>,
    pub momentum_bracket: Vec<String>,
    pub expected_energy: Vec<String>,
    pub expected_momentum: Vec<String>,
    pub pass: bool,
}

/// Expands the Hermitian `r = 3`, `n = 4` Jordanian relation in `k0/κ` from
/// the exact `H1`, `H2` series.
pub fn series_expand_check() -> Result<ExpansionCheck> {
    let terms = 3;
    let spec = RealizationSpec::linear(q(3, 1), q(0, 1), 1, 4, terms - 1)?;
    let f = derive_functions(&spec)?;
    let at_minus_x = |s: &TruncatedSeries| -> Vec<Gauss> {
        (0..terms).map(|k| if k % 2 == 0 { s.coeff(k) } else { -s.coeff(k) }).collect()
    };
    let energy = at_minus_x(&f.h2);
    let momentum = at_minus_x(&f.h1);
    let expected_energy = [Gauss::int(1), Gauss::int(3), Gauss::frac(25, 3)];
    let expected_momentum = [Gauss::int(1), Gauss::int(-1), Gauss::int(-1)];
    let text = |v: &[Gauss]| v.iter().map(Gauss::to_string).collect::<Vec<_>>();
    Ok(ExpansionCheck {
        r: "3".into(),
        pass: energy == expected_energy && momentum == expected_momentum,
        energy_bracket: text(&energy),
        momentum_bracket: text(&momentum),
        expected_energy: text(&expected_energy),
        expected_momentum: text(&expected_momentum),
    })
}

/// Fixed 17-significant-digit rendering.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

pub fn write_csv(points: &[DispersionPoint], out: &mut impl Write) -> Result<()> {
    writeln!(out, "k0,knorm,m0sq,domain_ok").map_err(io)?;
    for p in points {
        let m = p.m0sq.map_or_else(|| "nan".to_string(), fmt17);
        writeln!(out, "{},{},{},{}", fmt17(p.k0), fmt17(p.knorm), m, p.domain_ok).map_err(io)?;
    }
    Ok(())
}

fn model_json(model: &DispersionModel) -> String {
    let family = match model.family {
        DispersionFamily::Abelian { s } => format!("\"family\":\"abelian\",\"s\":{}", fmt17(s)),
        DispersionFamily::Jordanian { r } => format!("\"family\":\"jordanian\",\"r\":{}", fmt17(r)),
        DispersionFamily::JordanianMinimal => "\"family\":\"jordanian_minimal\"".to_string(),
    };
    format!("{{{family},\"kappa\":{},\"n\":{}}}", fmt17(model.kappa), model.n)
}

/// `{"model": {...}, "points": [{"k0":…, "knorm":…, "m0sq":…, "domain_ok":…}]}`
/// with numbers in the same fixed format as the CSV.
pub fn write_json(model: &DispersionModel, points: &[DispersionPoint], out: &mut impl Write) -> Result<()> {
    write!(out, "{{\"model\":{},\"points\":[", model_json(model)).map_err(io)?;
    for (i, p) in points.iter().enumerate() {
        let sep = if i == 0 { "" } else { "," };
        let m = p.m0sq.map_or_else(|| "null".to_string(), fmt17);
        write!(
            out,
            "{sep}\n{{\"k0\":{},\"knorm\":{},\"m0sq\":{},\"domain_ok\":{}}}",
            fmt17(p.k0),
            fmt17(p.knorm),
            m,
            p.domain_ok
        )
        .map_err(io)?;
    }
    writeln!(out, "\n]}}").map_err(io)?;
    Ok(())
}
