//! Named generators of `igl(n)` in the Schwinger realization
//! `L^μ_ν = x^μ ∂_ν`, `P_λ = ∂_λ`, plus the composites built from them.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::{Gauss, Rational};
use crate::weyl::DiffOp;

/// Generator factory for a fixed dimension and truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generators {
    pub dim: usize,
    pub order: usize,
}

impl Generators {
    pub fn new(dim: usize, order: usize) -> Result<Self> {
        if !(2..=crate::weyl::MAX_DIM).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim, crate::weyl::MAX_DIM));
        }
        Ok(Self { dim, order })
    }

    fn idx(&self, mu: usize) -> Result<usize> {
        if mu < self.dim {
            Ok(mu)
        } else {
            Err(Error::IndexOutOfRange(mu, self.dim))
        }
    }

    pub fn one(&self) -> DiffOp {
        DiffOp::one(self.dim, self.order)
    }

    pub fn zero(&self) -> DiffOp {
        DiffOp::zero(self.dim, self.order)
    }

    pub fn x(&self, mu: usize) -> DiffOp {
        DiffOp::x(mu, self.dim, self.order)
    }

    /// `P_λ = ∂_λ`.
    pub fn p(&self, lambda: usize) -> DiffOp {
        DiffOp::d(lambda, self.dim, self.order)
    }

    /// `L^μ_ν = x^μ ∂_ν`.
    pub fn l(&self, mu: usize, nu: usize) -> DiffOp {
        self.x(mu).mul(&self.p(nu)).expect("same shape")
    }

    /// Trace `L = Σ_μ L^μ_μ` (total dilatation).
    pub fn trace(&self) -> DiffOp {
        (0..self.dim).fold(self.zero(), |acc, mu| acc.add(&self.l(mu, mu)).expect("same shape"))
    }

    /// Traceless diagonal generator `L_μ = L^μ_μ - L/n`.
    pub fn traceless(&self, mu: usize) -> DiffOp {
        let tr = self.trace().scale(&Gauss::frac(1, self.dim as i128));
        self.l(mu, mu).sub(&tr).expect("same shape")
    }

    /// Spatial dilatation `D = x^k ∂_k`.
    pub fn dilatation(&self) -> DiffOp {
        (1..self.dim).fold(self.zero(), |acc, k| acc.add(&self.l(k, k)).expect("same shape"))
    }

    /// `J_r = -x^0 ∂_0 + (1/r) x^k ∂_k`.
    pub fn j(&self, r: &Rational) -> Result<DiffOp> {
        if r.is_zero() {
            return Err(Error::ZeroJordanianParameter);
        }
        let inv = Gauss::real(Rational::one() / r);
        self.l(0, 0).neg().add(&self.dilatation().scale(&inv))
    }

    /// `P_r = r ∂_0`.
    pub fn p_r(&self, r: &Rational) -> DiffOp {
        self.p(0).scale(&Gauss::real(*r))
    }

    /// `M_μν = g_μλ L^λ_ν - g_νλ L^λ_μ` for a diagonal metric.
    pub fn m(&self, metric: &[Rational], mu: usize, nu: usize) -> DiffOp {
        let a = self.l(mu, nu).scale(&Gauss::real(metric[mu]));
        let b = self.l(nu, mu).scale(&Gauss::real(metric[nu]));
        a.sub(&b).expect("same shape")
    }

    /// The `igl(n)` basis `{L^μ_ν, P_λ}` with names `L{μ}_{ν}` and `P{λ}`.
    pub fn igl_basis(&self) -> Vec<(String, DiffOp)> {
        let mut out = Vec::new();
        for mu in 0..self.dim {
            for nu in 0..self.dim {
                out.push((format!("L{mu}_{nu}"), self.l(mu, nu)));
            }
        }
        for lambda in 0..self.dim {
            out.push((format!("P{lambda}"), self.p(lambda)));
        }
        out
    }

    /// Resolves `P{λ}`, `L{μ}_{ν}`, `L`, `D`, `Lt{μ}` (traceless) and
    /// `J` (needs `r`).
    pub fn named(&self, name: &str, r: Option<&Rational>) -> Result<DiffOp> {
        let unknown = || Error::UnknownGenerator(name.to_string());
        let parse = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match name {
            "L" => Ok(self.trace()),
            "D" => Ok(self.dilatation()),
            "J" => self.j(r.ok_or_else(unknown)?),
            _ => {
                if let Some(rest) = name.strip_prefix("Lt") {
                    Ok(self.traceless(self.idx(parse(rest)?)?))
                } else if let Some(rest) = name.strip_prefix('L') {
                    let (a, b) = rest.split_once('_').ok_or_else(unknown)?;
                    Ok(self.l(self.idx(parse(a)?)?, self.idx(parse(b)?)?))
                } else if let Some(rest) = name.strip_prefix('P') {
                    Ok(self.p(self.idx(parse(rest)?)?))
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

/// `diag(ε, 1, ..., 1)`.
pub fn diagonal_metric(dim: usize, eps: i128) -> Vec<Rational> {
    let mut g = vec![Rational::one(); dim];
    g[0] = Rational::from_integer(eps);
    g
}
