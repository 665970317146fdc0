//! Normally ordered polynomial differential operators on `R^n` and their
//! tensor powers, with coefficients truncated in the deformation parameter `a`.
//!
//! A [`Tensor<K>`] is a finite sum of `c a^k m_1 ⊗ ... ⊗ m_K` where each `m_j`
//! is a normally ordered monomial `x^α ∂^β` (positions left of derivatives).
//! `DiffOp = Tensor<1>` is a single operator, `TensorOp = Tensor<2>` carries
//! twists and coproducts, `Tensor3` carries the cocycle check.
//!
//! Terms are stored sparsely per power of `a`, which keeps products cheap:
//! almost every term of a twist carries a single power of `a`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gauss::Gauss;
use crate::series::{coeff_text, push_term, TruncatedSeries};

pub const MAX_DIM: usize = 8;

/// `x^α ∂^β` with `α` and `β` stored up to [`MAX_DIM`] coordinates.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub x: [u8; MAX_DIM],
    pub d: [u8; MAX_DIM],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: [0; MAX_DIM], d: [0; MAX_DIM] };

    pub fn x(mu: usize) -> Self {
        let mut m = Self::ONE;
        m.x[mu] = 1;
        m
    }

    pub fn d(mu: usize) -> Self {
        let mut m = Self::ONE;
        m.d[mu] = 1;
        m
    }

    pub fn x_pow(x: &[u8]) -> Self {
        let mut m = Self::ONE;
        m.x[..x.len()].copy_from_slice(x);
        m
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// True when no derivative factor is present.
    pub fn is_function(&self) -> bool {
        self.d.iter().all(|&b| b == 0)
    }

    pub fn degree(&self) -> usize {
        self.x.iter().chain(&self.d).map(|&e| e as usize).sum()
    }

    pub fn x_degree(&self) -> usize {
        self.x.iter().map(|&e| e as usize).sum()
    }

    /// Normal-ordered expansion of `self * rhs` by Leibniz exchange
    /// `∂^b x^c = Σ_k C(b,k) c!/(c-k)! x^{c-k} ∂^{b-k}` in each coordinate.
    pub fn mul(&self, rhs: &Monomial) -> Vec<(Monomial, i128)> {
        let mut out = vec![(Monomial { x: [0; MAX_DIM], d: [0; MAX_DIM] }, 1i128)];
        for mu in 0..MAX_DIM {
            let (a, b, c, e) = (self.x[mu], self.d[mu], rhs.x[mu], rhs.d[mu]);
            if a == 0 && b == 0 && c == 0 && e == 0 {
                continue;
            }
            let kmax = b.min(c);
            if kmax == 0 {
                for (m, _) in out.iter_mut() {
                    m.x[mu] = a + c;
                    m.d[mu] = b + e;
                }
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * (kmax as usize + 1));
            for (m, coef) in &out {
                for k in 0..=kmax {
                    let w = binom(b, k) * falling(c, k);
                    let mut mm = *m;
                    mm.x[mu] = a + c - k;
                    mm.d[mu] = b + e - k;
                    next.push((mm, coef * w));
                }
            }
            out = next;
        }
        out
    }

    /// The same monomial with derivative orders written first, used by the
    /// adjoint: `(x^α ∂^β)* = (-1)^{|β|} ∂^β x^α`.
    fn swapped(&self) -> (Monomial, Monomial) {
        (Monomial { x: [0; MAX_DIM], d: self.d }, Monomial { x: self.x, d: [0; MAX_DIM] })
    }

    pub fn text(&self, dim: usize) -> String {
        let mut parts = Vec::new();
        for (sym, exps) in [("x", &self.x), ("d", &self.d)] {
            for (mu, &e) in exps.iter().enumerate().take(dim) {
                match e {
                    0 => {}
                    1 => parts.push(format!("{sym}{mu}")),
                    _ => parts.push(format!("{sym}{mu}^{e}")),
                }
            }
        }
        parts.join("*")
    }
}

fn binom(n: u8, k: u8) -> i128 {
    let mut r = 1i128;
    for j in 0..k as i128 {
        r = r * (n as i128 - j) / (j + 1);
    }
    r
}

fn falling(n: u8, k: u8) -> i128 {
    (0..k as i128).map(|j| n as i128 - j).product()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key<const K: usize> {
    pub monos: [Monomial; K],
    pub apow: u32,
}

/// Sum of `c a^k m_1 ⊗ ... ⊗ m_K` truncated above `a^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const K: usize> {
    dim: usize,
    order: usize,
    terms: BTreeMap<Key<K>, Gauss>,
}

pub type DiffOp = Tensor<1>;
pub type TensorOp = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const K: usize> Tensor<K> {
    pub fn zero(dim: usize, order: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "dimension {dim} unsupported");
        Self { dim, order, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn one(dim: usize, order: usize) -> Self {
        Self::term([Monomial::ONE; K], 0, Gauss::one(), dim, order)
    }

    pub fn term(monos: [Monomial; K], apow: u32, c: Gauss, dim: usize, order: usize) -> Self {
        let mut t = Self::zero(dim, order);
        t.add_term(monos, apow, c);
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key<K>, &Gauss)> {
        self.terms.iter()
    }

    /// Adds one term, dropping it when beyond the truncation order.
    pub fn add_term(&mut self, monos: [Monomial; K], apow: u32, c: Gauss) {
        if apow as usize > self.order || c.is_zero() {
            return;
        }
        let key = Key { monos, apow };
        let entry = self.terms.entry(key).or_insert_with(Gauss::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Coefficient of a monomial tuple as a series in `a`.
    pub fn coefficient(&self, monos: &[Monomial; K]) -> TruncatedSeries {
        let lo = Key { monos: *monos, apow: 0 };
        let hi = Key { monos: *monos, apow: u32::MAX };
        let mut s = TruncatedSeries::zero(self.order);
        let mut coeffs: Vec<Gauss> = s.coeffs().to_vec();
        for (k, c) in self.terms.range(lo..=hi) {
            coeffs[k.apow as usize] = c.clone();
        }
        s = TruncatedSeries::from_coeffs(coeffs, self.order);
        s
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch(self.dim, other.dim));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn degree_cap(&self) -> usize {
        3 * self.order + 8
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.monos, k.apow, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.monos, k.apow, -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Gauss::one())
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        out
    }

    /// Multiplies by `a^k`, dropping what falls beyond the truncation.
    pub fn scale_a(&self, k: u32) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        for (key, c) in &self.terms {
            out.add_term(key.monos, key.apow + k, c.clone());
        }
        out
    }

    /// Multiplies by a series in `a`.
    pub fn scale_series(&self, s: &TruncatedSeries) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        for (k, c) in s.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let part = self.scale_a(k as u32).scale(c);
                out = out.add(&part).expect("same shape");
            }
        }
        out
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`, normally ordered in
    /// every leg.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let cap = self.degree_cap();
        let mut acc: HashMap<Key<K>, Gauss> = HashMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let apow = ka.apow + kb.apow;
                if apow as usize > self.order {
                    continue;
                }
                let c = ca * cb;
                let mut partial: Vec<([Monomial; K], i128)> = vec![([Monomial::ONE; K], 1)];
                for leg in 0..K {
                    let expansion = ka.monos[leg].mul(&kb.monos[leg]);
                    let mut next = Vec::with_capacity(partial.len() * expansion.len());
                    for (monos, w) in &partial {
                        for (m, wm) in &expansion {
                            let deg = m.degree();
                            if deg > cap {
                                return Err(Error::DegreeOverflow(deg, cap));
                            }
                            let mut mm = *monos;
                            mm[leg] = *m;
                            next.push((mm, w * wm));
                        }
                    }
                    partial = next;
                }
                for (monos, w) in partial {
                    let term = c.scale(&w.into());
                    let e = acc.entry(Key { monos, apow }).or_insert_with(Gauss::zero);
                    *e += &term;
                }
            }
        }
        let mut out = Self::zero(self.dim, self.order);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.dim, self.order);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// The part of degree zero in `a`.
    pub fn classical_part(&self) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        out.terms = self.terms.iter().filter(|(k, _)| k.apow == 0).map(|(k, c)| (*k, c.clone())).collect();
        out
    }

    /// Lowest power of `a` present.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.apow).min()
    }

    /// Lowest power of `a` at which the two tensors differ, `None` when equal
    /// through the truncation order.
    pub fn first_difference(&self, other: &Self) -> Option<u32> {
        if self.dim != other.dim || self.order != other.order {
            return Some(0);
        }
        self.sub(other).expect("checked shape").valuation()
    }

    /// Re-truncates to a lower order (or zero-extends to a higher one).
    pub fn with_order(&self, order: usize) -> Self {
        let mut out = Self::zero(self.dim, order);
        for (k, c) in &self.terms {
            out.add_term(k.monos, k.apow, c.clone());
        }
        out
    }

    /// Two-sided inverse within truncation. The `a^0` part must be exactly
    /// the unit; the rest is then nilpotent and the Neumann series terminates.
    pub fn invert(&self) -> Result<Self> {
        let unit = Self::one(self.dim, self.order);
        if self.classical_part() != unit {
            return Err(Error::NonInvertibleTensor);
        }
        let rest = self.sub(&unit)?.neg();
        let mut out = unit.clone();
        let mut power = unit;
        for _ in 0..self.order {
            power = power.mul(&rest)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// `exp(t)` for a tensor with no `a^0` part.
    pub fn exp(&self) -> Result<Self> {
        if self.valuation() == Some(0) {
            return Err(Error::NonNilpotentArgument);
        }
        let mut out = Self::one(self.dim, self.order);
        let mut term = out.clone();
        for m in 1..=self.order {
            term = term.mul(self)?.scale(&Gauss::frac(1, m as i128));
            if term.is_zero() {
                break;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Applies a map to each leg monomial pattern, used for leg permutations.
    pub fn map_keys<const M: usize>(&self, f: impl Fn(&[Monomial; K]) -> [Monomial; M]) -> Tensor<M> {
        let mut out = Tensor::<M>::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            out.add_term(f(&k.monos), k.apow, c.clone());
        }
        out
    }

    /// Maximal total degree across legs, for diagnostics.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().flat_map(|k| k.monos.iter().map(|m| m.degree())).max().unwrap_or(0)
    }
}

/// Outer product of operators in separate legs.
pub fn outer<const K: usize>(legs: [&DiffOp; K]) -> Result<Tensor<K>> {
    let dim = legs[0].dim;
    let order = legs[0].order;
    for l in &legs {
        legs[0].check(l)?;
    }
    let mut partial: Vec<([Monomial; K], u32, Gauss)> = vec![([Monomial::ONE; K], 0, Gauss::one())];
    for (i, leg) in legs.iter().enumerate() {
        let mut next = Vec::new();
        for (monos, apow, c) in &partial {
            for (k, v) in &leg.terms {
                let p = apow + k.apow;
                if p as usize > order {
                    continue;
                }
                let mut mm = *monos;
                mm[i] = k.monos[0];
                next.push((mm, p, c * v));
            }
        }
        partial = next;
    }
    let mut out = Tensor::<K>::zero(dim, order);
    for (monos, apow, c) in partial {
        out.add_term(monos, apow, c);
    }
    Ok(out)
}

pub fn tensor2(a: &DiffOp, b: &DiffOp) -> Result<TensorOp> {
    outer([a, b])
}

pub fn tensor3(a: &DiffOp, b: &DiffOp, c: &DiffOp) -> Result<Tensor3> {
    outer([a, b, c])
}

impl DiffOp {
    pub fn scalar(c: Gauss, dim: usize, order: usize) -> Self {
        Self::term([Monomial::ONE], 0, c, dim, order)
    }

    /// Multiplication by `x^mu`.
    pub fn x(mu: usize, dim: usize, order: usize) -> Self {
        assert!(mu < dim);
        Self::term([Monomial::x(mu)], 0, Gauss::one(), dim, order)
    }

    /// `∂_mu`.
    pub fn d(mu: usize, dim: usize, order: usize) -> Self {
        assert!(mu < dim);
        Self::term([Monomial::d(mu)], 0, Gauss::one(), dim, order)
    }

    /// The deformation parameter `a` as a scalar operator.
    pub fn a(dim: usize, order: usize) -> Self {
        Self::term([Monomial::ONE], 1, Gauss::one(), dim, order)
    }

    /// A series in `a` as a scalar operator.
    pub fn from_series_in_a(s: &TruncatedSeries, dim: usize) -> Self {
        let mut out = Self::zero(dim, s.order());
        for (k, c) in s.coeffs().iter().enumerate() {
            out.add_term([Monomial::ONE], k as u32, c.clone());
        }
        out
    }

    /// `f(A)` with `A = i a ∂_0`: `Σ c_m i^m a^m ∂_0^m`. The input series is in
    /// the symbol `A`; its own truncation order only limits how many terms are
    /// read.
    pub fn of_symbol_a(f: &TruncatedSeries, dim: usize, order: usize) -> Self {
        let mut out = Self::zero(dim, order);
        for (m, c) in f.coeffs().iter().enumerate().take(order + 1) {
            let mut mono = Monomial::ONE;
            mono.d[0] = m as u8;
            out.add_term([mono], m as u32, c * &Gauss::i_pow(m as u32));
        }
        out
    }

    /// The single leg of the key.
    pub fn single_terms(&self) -> impl Iterator<Item = (Monomial, u32, &Gauss)> {
        self.terms.iter().map(|(k, c)| (k.monos[0], k.apow, c))
    }

    /// Action on a polynomial: the derivative-free part of `self * f`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        let prod = self.mul(&f.0)?;
        Ok(Poly::from_op_unchecked(prod.function_part()))
    }

    /// Terms without derivative factors.
    pub fn function_part(&self) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            if k.monos[0].is_function() {
                out.add_term(k.monos, k.apow, c.clone());
            }
        }
        out
    }

    /// Counit of an element of the enveloping algebra of vector fields:
    /// its action on the constant function 1, read off as a series in `a`.
    pub fn counit(&self) -> TruncatedSeries {
        self.coefficient(&[Monomial::ONE])
    }

    /// Formal adjoint for the involution `x* = x`, `∂* = -∂`, `i* = -i`,
    /// with `a` real.
    pub fn adjoint(&self) -> Result<Self> {
        let mut out = Self::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            let (left, right) = k.monos[0].swapped();
            let sign: i128 = if left.d.iter().map(|&e| e as u32).sum::<u32>() % 2 == 0 { 1 } else { -1 };
            let coef = c.conj().scale(&sign.into());
            for (m, w) in left.mul(&right) {
                out.add_term([m], k.apow, coef.scale(&w.into()));
            }
        }
        Ok(out)
    }

    /// Canonical text: `coeff*a^k*x0^2*d1 + ...`, ordered by power of `a`
    /// then by monomial.
    pub fn text(&self) -> String {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|(k, _)| (k.apow, k.monos));
        let mut out = String::new();
        for (k, c) in keys {
            let body = term_body(&k.monos[0], k.apow, self.dim);
            let (neg, text) = coeff_text(c, &body);
            push_term(&mut out, neg, &text);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn term_body(m: &Monomial, apow: u32, dim: usize) -> String {
    let a = match apow {
        0 => String::new(),
        1 => "a".to_string(),
        k => format!("a^{k}"),
    };
    let mono = m.text(dim);
    match (a.is_empty(), mono.is_empty()) {
        (true, _) => mono,
        (false, true) => a,
        (false, false) => format!("{a}*{mono}"),
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl TensorOp {
    /// `F^{21}`.
    pub fn flip(&self) -> Self {
        self.map_keys(|m| [m[1], m[0]])
    }

    /// `F ⊗ 1`, i.e. `F_{12}`.
    pub fn extend_right(&self) -> Tensor3 {
        self.map_keys(|m| [m[0], m[1], Monomial::ONE])
    }

    /// `1 ⊗ F`, i.e. `F_{23}`.
    pub fn extend_left(&self) -> Tensor3 {
        self.map_keys(|m| [Monomial::ONE, m[0], m[1]])
    }

    /// Primitive coproduct `X ⊗ 1 + 1 ⊗ X` of a vector field.
    pub fn primitive(x: &DiffOp) -> Self {
        let one = DiffOp::one(x.dim, x.order);
        tensor2(x, &one).and_then(|l| l.add(&tensor2(&one, x)?)).expect("same shape")
    }

    /// Multiplication map `μ(a ⊗ b) = ab`.
    pub fn multiply_legs(&self) -> Result<DiffOp> {
        let mut out = DiffOp::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            let l = DiffOp::term([k.monos[0]], k.apow, c.clone(), self.dim, self.order);
            let r = DiffOp::term([k.monos[1]], 0, Gauss::one(), self.dim, self.order);
            out = out.add(&l.mul(&r)?)?;
        }
        Ok(out)
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self) -> DiffOp {
        let mut out = DiffOp::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            if k.monos[0].is_one() {
                out.add_term([k.monos[1]], k.apow, c.clone());
            }
        }
        out
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> DiffOp {
        let mut out = DiffOp::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            if k.monos[1].is_one() {
                out.add_term([k.monos[0]], k.apow, c.clone());
            }
        }
        out
    }

    /// Legs as operators: pairs `(left, right)` grouped by the left monomial
    /// with the `a`-dependence pushed into the right leg.
    pub fn grouped_by_left(&self) -> Vec<(DiffOp, DiffOp)> {
        let mut groups: BTreeMap<Monomial, DiffOp> = BTreeMap::new();
        for (k, c) in &self.terms {
            groups
                .entry(k.monos[0])
                .or_insert_with(|| DiffOp::zero(self.dim, self.order))
                .add_term([k.monos[1]], k.apow, c.clone());
        }
        groups
            .into_iter()
            .map(|(m, r)| (DiffOp::term([m], 0, Gauss::one(), self.dim, self.order), r))
            .collect()
    }

    /// `Σ X_i ⊗ (Y_i)` in canonical operator text.
    pub fn text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.grouped_by_left()
            .iter()
            .map(|(l, r)| {
                let rt = r.text();
                let rt = if r.len() > 1 { format!("({rt})") } else { rt };
                format!("{} ⊗ {}", l.text(), rt)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for TensorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// A polynomial function on `R^n` with coefficients truncated in `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(DiffOp);

impl Poly {
    pub fn zero(dim: usize, order: usize) -> Self {
        Self(DiffOp::zero(dim, order))
    }

    pub fn constant(c: Gauss, dim: usize, order: usize) -> Self {
        Self(DiffOp::scalar(c, dim, order))
    }

    pub fn x(mu: usize, dim: usize, order: usize) -> Self {
        Self(DiffOp::x(mu, dim, order))
    }

    /// `c a^k x^α`.
    pub fn monomial(exps: &[u8], apow: u32, c: Gauss, dim: usize, order: usize) -> Self {
        Self(DiffOp::term([Monomial::x_pow(exps)], apow, c, dim, order))
    }

    pub fn from_op(op: DiffOp) -> Result<Self> {
        if op.terms.keys().all(|k| k.monos[0].is_function()) {
            Ok(Self(op))
        } else {
            Err(Error::InvalidSpec("operator contains derivatives".into()))
        }
    }

    fn from_op_unchecked(op: DiffOp) -> Self {
        Self(op)
    }

    pub fn as_op(&self) -> &DiffOp {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.0.add(&o.0).map(Self)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.0.sub(&o.0).map(Self)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.0.mul(&o.0).map(Self)
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        Self(self.0.scale(c))
    }

    pub fn scale_a(&self, k: u32) -> Self {
        Self(self.0.scale_a(k))
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        self.0.pow(e).map(Self)
    }

    pub fn x_degree(&self) -> usize {
        self.0.terms.keys().map(|k| k.monos[0].x_degree()).max().unwrap_or(0)
    }

    pub fn first_difference(&self, o: &Self) -> Option<u32> {
        self.0.first_difference(&o.0)
    }

    /// All monomials `x^α` with `|α| <= max_degree` in `dim` variables.
    pub fn monomial_basis(dim: usize, order: usize, max_degree: usize) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut exps = vec![0u8; dim];
        fn rec(i: usize, left: usize, exps: &mut Vec<u8>, dim: usize, order: usize, out: &mut Vec<Poly>) {
            if i == dim {
                out.push(Poly::monomial(exps, 0, Gauss::one(), dim, order));
                return;
            }
            for e in 0..=left {
                exps[i] = e as u8;
                rec(i + 1, left - e, exps, dim, order, out);
            }
            exps[i] = 0;
        }
        rec(0, max_degree, &mut exps, dim, order, &mut out);
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text())
    }
}
