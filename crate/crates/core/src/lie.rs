//! Finite-dimensional Lie algebras with structure constants that are Laurent
//! polynomials in a frozen parameter `a`, and the map of the extended
//! kappa-Minkowski algebra onto `so(n,1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::gauss::{q, Gauss, Rational};

/// Laurent polynomial in `a` over `Q(i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<i32, Gauss>);

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Gauss, k: i32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        Self(m)
    }

    pub fn constant(c: Gauss) -> Self {
        Self::monomial(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.0.clone();
        for (k, c) in &o.0 {
            let e = out.entry(*k).or_insert_with(Gauss::zero);
            *e += c;
            if e.is_zero() {
                out.remove(k);
            }
        }
        Self(out)
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (i, x) in &self.0 {
            for (j, y) in &o.0 {
                out = out.add(&Self::monomial(x * y, i + j));
            }
        }
        out
    }

    /// Inverse of a single nonzero monomial.
    pub fn monomial_inverse(&self) -> Option<Self> {
        match self.0.iter().collect::<Vec<_>>().as_slice() {
            [(k, c)] => Some(Self::monomial(c.checked_inv().ok()?, -**k)),
            _ => None,
        }
    }

    /// Whether only `a^0` occurs.
    pub fn is_constant(&self) -> bool {
        self.0.keys().all(|&k| k == 0)
    }

    /// Value at a rational `a`.
    pub fn at(&self, a: &Rational) -> Gauss {
        self.0.iter().fold(Gauss::zero(), |acc, (k, c)| {
            let p = if *k >= 0 { a.pow(*k) } else { a.recip().pow(-*k) };
            acc + c.scale(&p)
        })
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.0.iter().enumerate() {
            let body = match k {
                0 => String::new(),
                1 => "a".to_string(),
                k => format!("a^{k}"),
            };
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            let mag = if mag.contains(['+', '-']) { format!("({mag})") } else { mag };
            let term = match (mag.as_str(), body.is_empty()) {
                (m, true) => m.to_string(),
                ("1", false) => body,
                (m, false) => format!("{m}*{body}"),
            };
            match (n, neg) {
                (0, true) => write!(f, "-{term}")?,
                (0, false) => write!(f, "{term}")?,
                (_, true) => write!(f, " - {term}")?,
                (_, false) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

/// An element as a dense coefficient vector over the basis.
pub type Vector = Vec<Laurent>;

/// Structure constants `[e_i, e_j] = Σ_k c^k_ij e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractLieAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
}

fn add_vec(u: &mut Vector, v: &Vector, c: &Laurent) {
    for (x, y) in u.iter_mut().zip(v) {
        if !y.is_zero() {
            *x = x.add(&y.mul(c));
        }
    }
}

impl AbstractLieAlgebra {
    pub fn new(labels: Vec<String>) -> Self {
        let d = labels.len();
        Self { labels, table: vec![vec![vec![Laurent::zero(); d]; d]; d] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = vec![Laurent::zero(); self.dim()];
        v[i] = Laurent::constant(Gauss::one());
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Laurent::zero(); self.dim()]
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        self.table[j][i] = v.iter().map(Laurent::neg).collect();
        self.table[i][j] = v;
    }

    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = self.zero_vector();
        for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                add_vec(&mut out, &self.table[i][j], &x.mul(y));
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| self.table[i][j].iter().zip(&self.table[j][i]).all(|(x, y)| x.add(y).is_zero()))
        })
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
                    let mut s = self.bracket(&self.table[i][j], &ek);
                    add_vec(&mut s, &self.bracket(&self.table[j][k], &ei), &Laurent::constant(Gauss::one()));
                    add_vec(&mut s, &self.bracket(&self.table[k][i], &ej), &Laurent::constant(Gauss::one()));
                    if s.iter().any(|c| !c.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Structure constants in the basis `e'_i = s_i e_i` for monomial `s_i`.
    pub fn rescaled(&self, factors: &[Laurent]) -> Option<Self> {
        let inv: Option<Vec<Laurent>> = factors.iter().map(Laurent::monomial_inverse).collect();
        let inv = inv?;
        let mut out = Self::new(self.labels.clone());
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let sij = factors[i].mul(&factors[j]);
                out.table[i][j] = self.table[i][j].iter().zip(&inv).map(|(c, sk)| c.mul(&sij).mul(sk)).collect();
            }
        }
        Some(out)
    }

    /// `c1*e1 + c2*e2 + ...` with basis labels.
    pub fn vector_text(&self, v: &Vector) -> String {
        let mut out = String::new();
        for (c, label) in v.iter().zip(&self.labels).filter(|(c, _)| !c.is_zero()) {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(" + ") && !rest.contains(" - ") => (true, rest.to_string()),
                _ => (false, cs),
            };
            let mag = if mag.contains(' ') { format!("({mag})") } else { mag };
            let term = if mag == "1" { label.clone() } else { format!("{mag}*{label}") };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&term),
                (true, true) => out.push_str(&format!("-{term}")),
                (false, false) => out.push_str(&format!(" + {term}")),
                (false, true) => out.push_str(&format!(" - {term}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, in basis order.
    pub fn bracket_table(&self) -> Vec<String> {
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = &self.table[i][j];
                if v.iter().any(|c| !c.is_zero()) {
                    rows.push(format!("[{},{}] = {}", self.labels[i], self.labels[j], self.vector_text(v)));
                }
            }
        }
        rows
    }

    /// Whether every structure constant is free of `a`.
    pub fn is_a_free(&self) -> bool {
        self.table.iter().flatten().flatten().all(Laurent::is_constant)
    }

    /// Checks that `images[i]` (elements of `target`) satisfy
    /// `f([e_i, e_j]) = [f(e_i), f(e_j)]`; returns the first failing pair.
    pub fn homomorphism_failure(&self, target: &Self, images: &[Vector]) -> Option<(usize, usize)> {
        let apply = |v: &Vector| {
            let mut out = target.zero_vector();
            for (c, img) in v.iter().zip(images) {
                if !c.is_zero() {
                    add_vec(&mut out, img, c);
                }
            }
            out
        };
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if apply(&self.table[i][j]) != target.bracket(&images[i], &images[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Rank of the images evaluated at a rational `a`.
#[allow(clippy::needless_range_loop)]
fn rank_at(images: &[Vector], a: &Rational) -> usize {
    let mut rows: Vec<Vec<Gauss>> = images.iter().map(|v| v.iter().map(|c| c.at(a)).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].checked_inv().expect("nonzero pivot");
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] * &inv;
                for c in col..cols {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= &sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|m| (m + 1..d).map(move |n| (m, n))).collect()
}

/// Index of `M_μν` in a pair basis with sign, or `None` on the diagonal.
fn pair_index(list: &[(usize, usize)], mu: usize, nu: usize) -> Option<(usize, i128)> {
    if mu == nu {
        return None;
    }
    let (key, sign) = if mu < nu { ((mu, nu), 1) } else { ((nu, mu), -1) };
    list.iter().position(|&p| p == key).map(|i| (i, sign))
}

/// Lorentz-type brackets `[M_μν, M_ρλ]` for a diagonal metric, written into
/// the first `pairs(eta.len())` basis slots.
fn lorentz_brackets(alg: &mut AbstractLieAlgebra, eta: &[i128]) {
    let list = pairs(eta.len());
    let g = |m: usize, n: usize| if m == n { eta[m] } else { 0 };
    for (i, &(mu, nu)) in list.iter().enumerate() {
        for (j, &(rho, la)) in list.iter().enumerate().skip(i + 1) {
            let mut v = alg.zero_vector();
            for (c, a, b) in [(g(nu, rho), mu, la), (g(mu, la), nu, rho), (-g(nu, la), mu, rho), (-g(mu, rho), nu, la)] {
                if let (true, Some((k, s))) = (c != 0, pair_index(&list, a, b)) {
                    v[k] = v[k].add(&Laurent::constant(Gauss::int(c * s)));
                }
            }
            alg.set(i, j, v);
        }
    }
}

fn m_label(mu: usize, nu: usize) -> String {
    format!("M{mu}{nu}")
}

/// `so(n,1)` on indices `0..=n` with metric `diag(-1, 1, ..., 1)`.
pub fn so_n1(n: usize) -> AbstractLieAlgebra {
    let eta: Vec<i128> = (0..=n).map(|m| if m == 0 { -1 } else { 1 }).collect();
    let mut alg = AbstractLieAlgebra::new(pairs(n + 1).into_iter().map(|(m, k)| m_label(m, k)).collect());
    lorentz_brackets(&mut alg, &eta);
    alg
}

/// Lorentz generators `M_μν` and coordinates `x̂_μ` (lower index) in `n`
/// dimensions, Lorentzian, with `[x̂_0, x̂_k] = -iaτ x̂_k` and
/// `[M_μν, x̂_λ] = η_νλ x̂_μ - η_μλ x̂_ν - i a_μ M_νλ + i a_ν M_μλ`.
pub fn kappa_extended(n: usize, tau: i8) -> AbstractLieAlgebra {
    let eta: Vec<i128> = (0..n).map(|m| if m == 0 { -1 } else { 1 }).collect();
    let list = pairs(n);
    let nm = list.len();
    let mut labels: Vec<String> = list.iter().map(|&(m, k)| m_label(m, k)).collect();
    labels.extend((0..n).map(|m| format!("x{m}")));
    let mut alg = AbstractLieAlgebra::new(labels);
    lorentz_brackets(&mut alg, &eta);
    let ia_tau = Laurent::monomial(Gauss::new(Rational::zero(), Rational::from_integer(tau.into())), 1);
    let g = |m: usize, k: usize| if m == k { eta[m] } else { 0 };
    // i a_μ = i η_μ0 τ a
    let ia_low = |m: usize| if m == 0 { ia_tau.mul(&Laurent::constant(Gauss::int(eta[0]))) } else { Laurent::zero() };
    for (i, &(mu, nu)) in list.iter().enumerate() {
        for la in 0..n {
            let mut v = alg.zero_vector();
            if g(nu, la) != 0 {
                v[nm + mu] = v[nm + mu].add(&Laurent::constant(Gauss::int(g(nu, la))));
            }
            if g(mu, la) != 0 {
                v[nm + nu] = v[nm + nu].add(&Laurent::constant(Gauss::int(-g(mu, la))));
            }
            for (coef, a, b) in [(ia_low(mu).neg(), nu, la), (ia_low(nu), mu, la)] {
                if let (false, Some((k, s))) = (coef.is_zero(), pair_index(&list, a, b)) {
                    v[k] = v[k].add(&coef.mul(&Laurent::constant(Gauss::int(s))));
                }
            }
            alg.set(i, nm + la, v);
        }
    }
    for k in 1..n {
        let mut v = alg.zero_vector();
        v[nm + k] = ia_tau.neg();
        alg.set(nm, nm + k, v);
    }
    alg
}

/// Outcome of mapping the extended algebra onto `so(n,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub n: usize,
    pub tau: i8,
    pub antisymmetric: bool,
    pub source_jacobi: bool,
    pub target_jacobi: bool,
    /// Image of `x̂_0`.
    pub x0_image: String,
    /// Normalizing constant `c` in `x̂_i ↦ c (M_0i + σ M_in)`.
    pub xi_constant: String,
    /// Relative sign `σ`.
    pub xi_relative_sign: i8,
    pub homomorphism: bool,
    pub failing_pair: Option<(String, String)>,
    /// Full rank of the image at sample values of `a`.
    pub bijective: bool,
    /// The table after `x̂_μ ↦ (τ/a) x̂_μ` is free of `a` and identical for both `τ`.
    pub rescaled_universal: bool,
    pub pass: bool,
}

fn coordinate_rescaling(alg: &AbstractLieAlgebra, n: usize, tau: i8) -> Vec<Laurent> {
    let nm = alg.dim() - n;
    let t = Laurent::monomial(Gauss::int(tau.into()), -1);
    (0..alg.dim()).map(|i| if i < nm { Laurent::constant(Gauss::one()) } else { t.clone() }).collect()
}

/// Maps `M_μν ↦ M_μν`, `x̂_0 ↦ iaτ M_0n` onto `so(n,1)`. The images of
/// `x̂_i` are fixed by requiring `[M_i0, x̂_0] = -x̂_i - iaτ M_i0` to be
/// preserved; the resulting constant and relative sign are reported, and
/// every bracket is then compared.
pub fn check_so_n1_isomorphism(n: usize, tau: i8) -> IsomorphismReport {
    let src = kappa_extended(n, tau);
    let dst = so_n1(n);
    let src_pairs = pairs(n);
    let dst_pairs = pairs(n + 1);
    let nm = src_pairs.len();
    let ia_tau = Laurent::monomial(Gauss::new(Rational::zero(), Rational::from_integer(tau.into())), 1);
    let dst_m = |mu: usize, nu: usize| {
        let mut v = dst.zero_vector();
        if let Some((k, s)) = pair_index(&dst_pairs, mu, nu) {
            v[k] = Laurent::constant(Gauss::int(s));
        }
        v
    };
    let scale = |v: &Vector, c: &Laurent| v.iter().map(|x| x.mul(c)).collect::<Vector>();
    let mut images: Vec<Vector> = src_pairs.iter().map(|&(m, k)| dst_m(m, k)).collect();
    let x0 = scale(&dst_m(0, n), &ia_tau);
    images.push(x0.clone());
    for i in 1..n {
        // x̂_i = -[M_i0, x̂_0] - iaτ M_i0
        let mut v = dst.bracket(&dst_m(i, 0), &x0).iter().map(Laurent::neg).collect::<Vector>();
        add_vec(&mut v, &dst_m(i, 0), &ia_tau.neg());
        images.push(v);
    }
    let k0i = pair_index(&dst_pairs, 0, 1).map(|(k, _)| k).unwrap_or(0);
    let k1n = pair_index(&dst_pairs, 1, n).map(|(k, _)| k).unwrap_or(0);
    let c = images[nm + 1][k0i].clone();
    let sigma_c = images[nm + 1][k1n].clone();
    let sigma = if sigma_c == c {
        1
    } else if sigma_c == c.neg() {
        -1
    } else {
        0
    };
    let failure = src.homomorphism_failure(&dst, &images);
    let samples = [q(1, 1), q(2, 1), q(-3, 7)];
    let bijective = src.dim() == dst.dim() && samples.iter().all(|a| rank_at(&images, a) == dst.dim());
    let rescale = |t: i8| {
        let alg = kappa_extended(n, t);
        alg.rescaled(&coordinate_rescaling(&alg, n, t))
    };
    let rescaled_universal = match (rescale(tau), rescale(-tau)) {
        (Some(x), Some(y)) => x.is_a_free() && x == y,
        _ => false,
    };
    let antisymmetric = src.is_antisymmetric() && dst.is_antisymmetric();
    let source_jacobi = src.satisfies_jacobi();
    let target_jacobi = dst.satisfies_jacobi();
    let homomorphism = failure.is_none();
    IsomorphismReport {
        n,
        tau,
        antisymmetric,
        source_jacobi,
        target_jacobi,
        x0_image: format!("({ia_tau})*M0{n}"),
        xi_constant: c.to_string(),
        xi_relative_sign: sigma,
        homomorphism,
        failing_pair: failure.map(|(i, j)| (src.labels[i].clone(), src.labels[j].clone())),
        bijective,
        rescaled_universal,
        pass: antisymmetric && source_jacobi && target_jacobi && homomorphism && bijective && rescaled_universal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_31_is_lorentz() {
        let alg = so_n1(3);
        assert_eq!(alg.dim(), 6);
        assert!(alg.is_antisymmetric() && alg.satisfies_jacobi());
        // [M01, M02] = -η00 M12 = M12
        let v = alg.structure(0, 1);
        assert_eq!(v[3], Laurent::constant(Gauss::one()));
    }

    #[test]
    fn isomorphism_all_dimensions() {
        for n in 2..=4 {
            for tau in [1, -1] {
                let rep = check_so_n1_isomorphism(n, tau);
                assert!(rep.pass, "{rep:?}");
                assert_eq!(rep.xi_relative_sign, 1);
                let expected = if tau == 1 { "i*a" } else { "-i*a" };
                assert_eq!(rep.xi_constant, expected);
            }
        }
    }

    #[test]
    fn wrong_relative_sign_fails() {
        let n = 3;
        let src = kappa_extended(n, 1);
        let dst = so_n1(n);
        let dp = pairs(n + 1);
        let ia = Laurent::monomial(Gauss::i(), 1);
        let m = |a: usize, b: usize| {
            let mut v = dst.zero_vector();
            let (k, s) = pair_index(&dp, a, b).unwrap();
            v[k] = Laurent::constant(Gauss::int(s));
            v
        };
        let mut images: Vec<Vector> = pairs(n).iter().map(|&(a, b)| m(a, b)).collect();
        images.push(m(0, n).iter().map(|c| c.mul(&ia)).collect());
        for i in 1..n {
            let mut v = m(0, i);
            add_vec(&mut v, &m(i, n), &Laurent::constant(Gauss::int(-1)));
            images.push(v.iter().map(|c| c.mul(&ia)).collect());
        }
        assert!(src.homomorphism_failure(&dst, &images).is_some());
    }

    #[test]
    fn bracket_rows() {
        let rows = kappa_extended(2, 1).bracket_table();
        assert_eq!(rows, ["[M01,x0] = -i*a*M01 + x1", "[M01,x1] = x0", "[x0,x1] = -i*a*x1"]);
    }

    #[test]
    fn laurent_display_and_inverse() {
        let x = Laurent::monomial(Gauss::new(Rational::zero(), Rational::from_integer(-1)), 1);
        assert_eq!(x.to_string(), "-i*a");
        let inv = x.monomial_inverse().unwrap();
        assert_eq!(x.mul(&inv), Laurent::constant(Gauss::one()));
        assert!(Laurent::constant(Gauss::one()).add(&x).monomial_inverse().is_none());
    }
}
