//! Jordanian and Abelian twists, their star products and the realizations of
//! noncommutative coordinates they induce.
//!
//! A twist is first built symbolically, in `C[u] ⊗ C[v]` where `u` and `v` are
//! lists of mutually commuting vector fields (primitive elements). In that
//! form the primitive coproduct, counit and undeformed antipode of each leg
//! are exact and cheap. Evaluating the symbols gives the concrete
//! [`TensorOp`] used for products.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gauss::{fmt_rational, Gauss, Rational};
use crate::generators::Generators;
use crate::series::{binomial, TruncatedSeries};
use crate::weyl::{outer, DiffOp, Monomial, Poly, Tensor3, TensorOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `exp(J_r ⊗ σ_r)`, `σ_r = ln(1 + i a r P_0)`.
    Jordanian { r: Rational },
    /// `exp[-i a (s ∂_0 ⊗ x^k∂_k - (1-s) x^k∂_k ⊗ ∂_0)]`.
    Abelian { s: Rational },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Jordanian { .. } => "jordanian",
            Family::Abelian { .. } => "abelian",
        }
    }

    pub fn param(&self) -> Rational {
        match self {
            Family::Jordanian { r } => *r,
            Family::Abelian { s } => *s,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistSpec {
    pub family: Family,
    pub dim: usize,
    pub order: usize,
}

impl TwistSpec {
    pub fn jordanian(r: Rational, dim: usize, order: usize) -> Result<Self> {
        Self { family: Family::Jordanian { r }, dim, order }.validated()
    }

    pub fn abelian(s: Rational, dim: usize, order: usize) -> Result<Self> {
        Self { family: Family::Abelian { s }, dim, order }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        Generators::new(self.dim, self.order)?;
        if let Family::Jordanian { r } = self.family {
            if r.is_zero() {
                return Err(Error::ZeroJordanianParameter);
            }
        }
        Ok(self)
    }

    pub fn generators(&self) -> Generators {
        Generators { dim: self.dim, order: self.order }
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self { order, ..*self }
    }
}

impl Serialize for TwistSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TwistSpec", 4)?;
        st.serialize_field("family", self.family.name())?;
        st.serialize_field("param", &fmt_rational(&self.family.param()))?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("order", &self.order)?;
        st.end()
    }
}

/// Exponents of the commuting generators in one leg.
type LegExp = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct SymKey {
    left: LegExp,
    right: LegExp,
    apow: u32,
}

/// Element of `C[u_1..u_p] ⊗ C[v_1..v_q]` truncated in `a`, where each leg's
/// generators are commuting primitive vector fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTensor {
    dim: usize,
    order: usize,
    left_gens: Vec<DiffOp>,
    right_gens: Vec<DiffOp>,
    terms: BTreeMap<SymKey, Gauss>,
}

/// Which tensor leg the primitive coproduct is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    Left,
    Right,
}

impl SymbolicTensor {
    fn new(dim: usize, order: usize, left_gens: Vec<DiffOp>, right_gens: Vec<DiffOp>) -> Self {
        Self { dim, order, left_gens, right_gens, terms: BTreeMap::new() }
    }

    fn unit_like(&self) -> Self {
        let mut out = Self::new(self.dim, self.order, self.left_gens.clone(), self.right_gens.clone());
        out.add(vec![0; self.left_gens.len()], vec![0; self.right_gens.len()], 0, Gauss::one());
        out
    }

    fn add(&mut self, left: LegExp, right: LegExp, apow: u32, c: Gauss) {
        if apow as usize > self.order || c.is_zero() {
            return;
        }
        let key = SymKey { left, right, apow };
        let e = self.terms.entry(key.clone()).or_insert_with(Gauss::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add(k.left.clone(), k.right.clone(), k.apow, c.clone());
        }
        out
    }

    fn scaled(&self, c: &Gauss) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// Commutative product (each leg is a polynomial ring).
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::new(self.dim, self.order, self.left_gens.clone(), self.right_gens.clone());
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let apow = ka.apow + kb.apow;
                if apow as usize > self.order {
                    continue;
                }
                let left = ka.left.iter().zip(&kb.left).map(|(a, b)| a + b).collect();
                let right = ka.right.iter().zip(&kb.right).map(|(a, b)| a + b).collect();
                out.add(left, right, apow, ca * cb);
            }
        }
        out
    }

    fn exp(&self) -> Self {
        let mut out = self.unit_like();
        let mut term = self.unit_like();
        for m in 1..=self.order {
            term = term.times(self).scaled(&Gauss::frac(1, m as i128));
            out = out.plus(&term);
        }
        out
    }

    /// Inverse by Neumann series; the `a^0` part must be the unit.
    pub fn invert(&self) -> Result<Self> {
        let unit = self.unit_like();
        let mut rest = self.clone();
        let unit_key = SymKey { left: vec![0; self.left_gens.len()], right: vec![0; self.right_gens.len()], apow: 0 };
        if rest.terms.get(&unit_key) != Some(&Gauss::one()) || rest.terms.keys().any(|k| k.apow == 0 && *k != unit_key)
        {
            return Err(Error::NonInvertibleTensor);
        }
        rest.terms.remove(&unit_key);
        let rest = rest.scaled(&-Gauss::one());
        let mut out = unit.clone();
        let mut power = unit;
        for _ in 0..self.order {
            power = power.times(&rest);
            out = out.plus(&power);
        }
        Ok(out)
    }

    /// `(ε ⊗ id)` and `(id ⊗ ε)` both equal to `1` through the truncation.
    pub fn is_normalized(&self) -> bool {
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (k, c) in &self.terms {
            if k.left.iter().all(|&e| e == 0) {
                *left.entry((k.right.clone(), k.apow)).or_insert_with(Gauss::zero) += c;
            }
            if k.right.iter().all(|&e| e == 0) {
                *right.entry((k.left.clone(), k.apow)).or_insert_with(Gauss::zero) += c;
            }
        }
        let is_unit = |m: BTreeMap<(LegExp, u32), Gauss>| {
            m.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .all(|((e, apow), c)| apow == 0 && e.iter().all(|&x| x == 0) && c.is_one())
        };
        is_unit(left) && is_unit(right)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn leg_ops(&self, leg: Leg) -> &[DiffOp] {
        match leg {
            Leg::Left => &self.left_gens,
            Leg::Right => &self.right_gens,
        }
    }

    /// Iterates over the terms as `(left operator, right operator)`, with the
    /// coefficient `c a^k` put on the left operator.
    pub fn operator_pairs(&self) -> Result<Vec<(DiffOp, DiffOp)>> {
        let mut cache = PowerCache::default();
        let mut out = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let l = cache.eval(self, Leg::Left, &k.left)?.scale_a(k.apow).scale(c);
            let r = cache.eval(self, Leg::Right, &k.right)?;
            out.push((l, r));
        }
        Ok(out)
    }

    /// Same as [`operator_pairs`](Self::operator_pairs) with the undeformed
    /// antipode `S(u^e) = (-1)^{|e|} u^e` applied to one leg.
    pub fn operator_pairs_with_antipode(&self, leg: Leg) -> Result<Vec<(DiffOp, DiffOp)>> {
        let mut pairs = self.operator_pairs()?;
        for (k, pair) in self.terms.keys().zip(pairs.iter_mut()) {
            let e = match leg {
                Leg::Left => &k.left,
                Leg::Right => &k.right,
            };
            if e.iter().map(|&x| x as u32).sum::<u32>() % 2 == 1 {
                pair.0 = pair.0.neg();
            }
        }
        Ok(pairs)
    }

    /// Concrete two-leg operator.
    pub fn evaluate(&self) -> Result<TensorOp> {
        let mut out = TensorOp::zero(self.dim, self.order);
        for (l, r) in self.operator_pairs()? {
            out = out.add(&outer([&l, &r])?)?;
        }
        Ok(out)
    }

    /// Applies the primitive coproduct to one leg, giving a three-leg tensor:
    /// `(Δ ⊗ id)` for [`Leg::Left`], `(id ⊗ Δ)` for [`Leg::Right`].
    pub fn delta0_extend(&self, leg: Leg) -> Result<Tensor3> {
        let mut cache = PowerCache::default();
        let mut out = Tensor3::zero(self.dim, self.order);
        for (k, c) in &self.terms {
            let (split, kept, kept_leg) = match leg {
                Leg::Left => (&k.left, &k.right, Leg::Right),
                Leg::Right => (&k.right, &k.left, Leg::Left),
            };
            let kept_op = cache.eval(self, kept_leg, kept)?;
            for (first, second, w) in split_exponents(split) {
                let coef = c.scale(&w);
                let a = cache.eval(self, leg, &first)?;
                let b = cache.eval(self, leg, &second)?;
                let t = match leg {
                    Leg::Left => outer([&a.scale_a(k.apow).scale(&coef), &b, &kept_op])?,
                    Leg::Right => outer([&kept_op.scale_a(k.apow).scale(&coef), &a, &b])?,
                };
                out = out.add(&t)?;
            }
        }
        Ok(out)
    }

    /// Flips the sign of one coefficient at the given power of `a`
    /// (the last such term in canonical order).
    pub fn corrupted(&self, apow: u32) -> Option<Self> {
        let key = self.terms.keys().rev().find(|k| k.apow == apow)?.clone();
        let mut out = self.clone();
        let c = out.terms.get_mut(&key)?;
        *c = -&*c;
        Some(out)
    }
}

/// All splittings `e = j + (e - j)` with weight `Π C(e_i, j_i)`.
fn split_exponents(e: &[u8]) -> Vec<(LegExp, LegExp, Rational)> {
    let mut out = vec![(Vec::new(), Vec::new(), Rational::one())];
    for &ei in e {
        let mut next = Vec::new();
        for (a, b, w) in &out {
            for j in 0..=ei {
                let mut a2 = a.clone();
                let mut b2 = b.clone();
                a2.push(j);
                b2.push(ei - j);
                next.push((a2, b2, w * binomial(&Rational::from_integer(ei as i128), j as u32)));
            }
        }
        out = next;
    }
    out
}

/// Memoized products of commuting generator powers.
#[derive(Default)]
struct PowerCache {
    map: HashMap<(bool, LegExp), DiffOp>,
}

impl PowerCache {
    fn eval(&mut self, t: &SymbolicTensor, leg: Leg, e: &[u8]) -> Result<DiffOp> {
        let key = (leg == Leg::Left, e.to_vec());
        if let Some(op) = self.map.get(&key) {
            return Ok(op.clone());
        }
        let mut op = DiffOp::one(t.dim, t.order);
        for (g, &k) in t.leg_ops(leg).iter().zip(e) {
            for _ in 0..k {
                op = op.mul(g)?;
            }
        }
        self.map.insert(key, op.clone());
        Ok(op)
    }
}

/// A twist together with its concrete evaluation and inverse.
#[derive(Clone, Debug)]
pub struct Twist {
    pub spec: TwistSpec,
    symbolic: SymbolicTensor,
    f: TensorOp,
    f_inv: TensorOp,
}

fn exponent(spec: &TwistSpec) -> Result<SymbolicTensor> {
    let g = spec.generators();
    let (dim, order) = (spec.dim, spec.order);
    match spec.family {
        Family::Jordanian { r } => {
            let mut e = SymbolicTensor::new(dim, order, vec![g.j(&r)?], vec![g.p(0)]);
            // ln(1 + i a r P0) = Σ (-1)^{m+1}/m (i r a P0)^m
            let ir = Gauss::new(Rational::zero(), r);
            for m in 1..=order as u32 {
                let sign = if m % 2 == 1 { 1 } else { -1 };
                let c = ir.pow(m) * Gauss::frac(sign, m as i128);
                e.add(vec![1], vec![m as u8], m, c);
            }
            Ok(e)
        }
        Family::Abelian { s } => {
            let legs = vec![g.p(0), g.dilatation()];
            let mut e = SymbolicTensor::new(dim, order, legs.clone(), legs);
            e.add(vec![1, 0], vec![0, 1], 1, Gauss::new(Rational::zero(), -s));
            e.add(vec![0, 1], vec![1, 0], 1, Gauss::new(Rational::zero(), Rational::one() - s));
            Ok(e)
        }
    }
}

/// Builds the twist element `F` of a spec.
pub fn build_twist(spec: &TwistSpec) -> Result<Twist> {
    let spec = spec.validated()?;
    let symbolic = exponent(&spec)?.exp();
    let f = symbolic.evaluate()?;
    let f_inv = f.invert()?;
    Ok(Twist { spec, symbolic, f, f_inv })
}

/// Outcome of the 2-cocycle check `F12 (Δ⊗id)F = F23 (id⊗Δ)F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleReport {
    pub holds: bool,
    /// Lowest power of `a` at which the two sides differ.
    pub first_failure: Option<u32>,
    pub normalized: bool,
    pub order: usize,
}

/// Checks the cocycle condition and normalization of a symbolic twist.
pub fn cocycle_check(f: &SymbolicTensor) -> Result<CocycleReport> {
    let conc = f.evaluate()?;
    let lhs = conc.extend_right().mul(&f.delta0_extend(Leg::Left)?)?;
    let rhs = conc.extend_left().mul(&f.delta0_extend(Leg::Right)?)?;
    let first_failure = lhs.first_difference(&rhs);
    Ok(CocycleReport { holds: first_failure.is_none(), first_failure, normalized: f.is_normalized(), order: f.order })
}

/// One entry of `[x^μ, x^ν]⋆ = i θ^{μν} + i θ^{μν}_λ x^λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaEntry {
    pub mu: usize,
    pub nu: usize,
    /// `None` for the constant part.
    pub lambda: Option<usize>,
    pub value: TruncatedSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarAlgebraReport {
    pub entries: Vec<ThetaEntry>,
    /// Commutators carried no terms of degree two or more.
    pub closes_linearly: bool,
    /// `θ^{μν} = 0`, `θ^{0k}_λ = a δ^k_λ` and nothing else.
    pub kappa_minkowski: bool,
}

impl Twist {
    pub fn symbolic(&self) -> &SymbolicTensor {
        &self.symbolic
    }

    pub fn f(&self) -> &TensorOp {
        &self.f
    }

    pub fn f_inv(&self) -> &TensorOp {
        &self.f_inv
    }

    pub fn dim(&self) -> usize {
        self.spec.dim
    }

    pub fn order(&self) -> usize {
        self.spec.order
    }

    pub fn cocycle(&self) -> Result<CocycleReport> {
        cocycle_check(&self.symbolic)
    }

    /// Cocycle check of the twist with one `a^2` coefficient sign-flipped.
    pub fn corrupted_cocycle(&self) -> Result<CocycleReport> {
        let bad = self.symbolic.corrupted(2).ok_or_else(|| Error::InvalidSpec("order below 2".into()))?;
        cocycle_check(&bad)
    }

    /// `f ⋆ g = μ ∘ F^{-1} (f ⊗ g)`.
    pub fn star_product(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        let (dim, order) = (self.dim(), self.order());
        let mut left: HashMap<Monomial, Poly> = HashMap::new();
        let mut right: HashMap<Monomial, Poly> = HashMap::new();
        let mut out = Poly::zero(dim, order);
        for (k, c) in self.f_inv.terms() {
            let [u, v] = k.monos;
            if let Entry::Vacant(e) = left.entry(u) {
                e.insert(DiffOp::term([u], 0, Gauss::one(), dim, order).apply(f)?);
            }
            if let Entry::Vacant(e) = right.entry(v) {
                e.insert(DiffOp::term([v], 0, Gauss::one(), dim, order).apply(g)?);
            }
            let (fu, gv) = (&left[&u], &right[&v]);
            if fu.is_zero() || gv.is_zero() {
                continue;
            }
            out = out.add(&fu.mul(gv)?.scale_a(k.apow).scale(c))?;
        }
        Ok(out)
    }

    pub fn star_commutator(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.star_product(f, g)?.sub(&self.star_product(g, f)?)
    }

    /// Coordinate commutators decomposed into constant and linear parts.
    pub fn extract_theta(&self) -> Result<StarAlgebraReport> {
        let (dim, order) = (self.dim(), self.order());
        let minus_i = -Gauss::i();
        let mut entries = Vec::new();
        let mut closes_linearly = true;
        let mut kappa = true;
        let a = TruncatedSeries::var(order);
        for mu in 0..dim {
            for nu in mu + 1..dim {
                let c = self.star_commutator(&Poly::x(mu, dim, order), &Poly::x(nu, dim, order))?;
                let theta = c.scale(&minus_i);
                let mut constant = TruncatedSeries::zero(order);
                let mut lin = vec![TruncatedSeries::zero(order); dim];
                for (m, apow, coef) in theta.as_op().single_terms() {
                    let bump = TruncatedSeries::var(order).pow(apow).scale(coef);
                    match m.x_degree() {
                        0 => constant = constant.add(&bump)?,
                        1 => {
                            let lam = (0..dim).find(|&l| m.x[l] == 1).expect("degree one");
                            lin[lam] = lin[lam].add(&bump)?;
                        }
                        _ => closes_linearly = false,
                    }
                }
                kappa &= constant.is_zero();
                if !constant.is_zero() {
                    entries.push(ThetaEntry { mu, nu, lambda: None, value: constant });
                }
                for (lam, s) in lin.into_iter().enumerate() {
                    let expected = if mu == 0 && lam == nu { a.clone() } else { TruncatedSeries::zero(order) };
                    kappa &= s == expected;
                    if !s.is_zero() {
                        entries.push(ThetaEntry { mu, nu, lambda: Some(lam), value: s });
                    }
                }
            }
        }
        Ok(StarAlgebraReport { entries, closes_linearly, kappa_minkowski: kappa && closes_linearly })
    }

    /// Classical r-matrix: the `a^1` coefficient of `F21 F^{-1}`.
    pub fn r_matrix(&self) -> Result<TensorOp> {
        let big_r = self.f.flip().mul(&self.f_inv)?;
        let mut out = TensorOp::zero(self.dim(), self.order());
        for (k, c) in big_r.terms() {
            if k.apow == 1 {
                out.add_term(k.monos, 0, c.clone());
            }
        }
        Ok(out)
    }

    /// `x̂^μ_L f = x^μ ⋆ f` as an operator: `Σ (ū ▷ x^μ) v̄`.
    pub fn left_realization(&self, mu: usize) -> Result<DiffOp> {
        self.realization(mu, Leg::Left)
    }

    /// `x̂^μ_R f = f ⋆ x^μ` as an operator: `Σ (v̄ ▷ x^μ) ū`.
    pub fn right_realization(&self, mu: usize) -> Result<DiffOp> {
        self.realization(mu, Leg::Right)
    }

    fn realization(&self, mu: usize, leg: Leg) -> Result<DiffOp> {
        let (dim, order) = (self.dim(), self.order());
        if mu >= dim {
            return Err(Error::IndexOutOfRange(mu, dim));
        }
        let x = Poly::x(mu, dim, order);
        let mut out = DiffOp::zero(dim, order);
        for (k, c) in self.f_inv.terms() {
            let (acting, other) = match leg {
                Leg::Left => (k.monos[0], k.monos[1]),
                Leg::Right => (k.monos[1], k.monos[0]),
            };
            let coord = DiffOp::term([acting], 0, Gauss::one(), dim, order).apply(&x)?;
            if coord.is_zero() {
                continue;
            }
            let op = DiffOp::term([other], k.apow, c.clone(), dim, order);
            out = out.add(&coord.as_op().mul(&op)?)?;
        }
        Ok(out)
    }
}

/// Bivector field `π^{μν}(x)` of a tensor of vector fields `Σ X ⊗ Y`.
pub fn bivector(r: &TensorOp) -> Result<BTreeMap<(usize, usize), Poly>> {
    let (dim, order) = (r.dim(), r.order());
    let mut out: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
    for (k, c) in r.terms() {
        let [u, v] = k.monos;
        let idx = |m: &Monomial| -> Result<usize> {
            let mut ds = (0..dim).filter(|&i| m.d[i] > 0);
            match (ds.next(), m.d.iter().map(|&e| e as usize).sum::<usize>()) {
                (Some(i), 1) => Ok(i),
                _ => Err(Error::InvalidSpec("tensor legs are not vector fields".into())),
            }
        };
        let (mu, nu) = (idx(&u)?, idx(&v)?);
        let coef = Poly::monomial(&u.x[..dim], 0, Gauss::one(), dim, order)
            .mul(&Poly::monomial(&v.x[..dim], k.apow, c.clone(), dim, order))?;
        let slot = out.entry((mu, nu)).or_insert_with(|| Poly::zero(dim, order));
        *slot = slot.add(&coef)?;
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::q;

    fn jord(r: Rational, order: usize) -> Twist {
        build_twist(&TwistSpec::jordanian(r, 4, order).unwrap()).unwrap()
    }

    fn abel(s: Rational, order: usize) -> Twist {
        build_twist(&TwistSpec::abelian(s, 4, order).unwrap()).unwrap()
    }

    #[test]
    fn cocycles_hold() {
        for t in [jord(q(-1, 1), 4), jord(q(2, 1), 4), abel(q(0, 1), 4), abel(q(1, 2), 4)] {
            let rep = t.cocycle().unwrap();
            assert!(rep.holds && rep.normalized, "{:?}", t.spec);
        }
    }

    #[test]
    fn corrupted_fails_at_order_two() {
        for t in [jord(q(-1, 1), 3), abel(q(1, 2), 3)] {
            assert_eq!(t.corrupted_cocycle().unwrap().first_failure, Some(2));
        }
    }

    #[test]
    fn inverse_matches_symbolic() {
        let t = jord(q(3, 1), 4);
        let sym = t.symbolic().invert().unwrap().evaluate().unwrap();
        assert_eq!(&sym, t.f_inv());
    }

    #[test]
    fn abelian_x0_x1() {
        let t = abel(q(1, 2), 3);
        let p = t.star_product(&Poly::x(0, 4, 3), &Poly::x(1, 4, 3)).unwrap();
        assert_eq!(p.to_string(), "x0*x1 + 1/2*i*a*x1");
    }

    #[test]
    fn kappa_minkowski_from_every_twist() {
        for t in [jord(q(-1, 1), 4), jord(q(1, 2), 4), abel(q(0, 1), 4), abel(q(1, 1), 4)] {
            let rep = t.extract_theta().unwrap();
            assert!(rep.kappa_minkowski, "{:?}: {:?}", t.spec, rep.entries);
        }
    }

    #[test]
    fn x0_with_powers() {
        let t = jord(q(2, 1), 4);
        for m in 1..=3u8 {
            let xm = Poly::monomial(&[0, m, 0, 0], 0, Gauss::one(), 4, 4);
            let c = t.star_commutator(&Poly::x(0, 4, 4), &xm).unwrap();
            assert_eq!(c, xm.scale_a(1).scale(&Gauss::i()).scale(&Gauss::int(m as i128)));
        }
    }

    #[test]
    fn realizations_commute() {
        let t = jord(q(-1, 1), 4);
        for mu in 0..4 {
            for nu in 0..4 {
                let l = t.left_realization(mu).unwrap();
                let r = t.right_realization(nu).unwrap();
                assert!(l.commutator(&r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn realization_reproduces_star() {
        let t = abel(q(1, 3), 4);
        for f in Poly::monomial_basis(4, 4, 2) {
            for mu in 0..4 {
                let x = Poly::x(mu, 4, 4);
                assert_eq!(t.left_realization(mu).unwrap().apply(&f).unwrap(), t.star_product(&x, &f).unwrap());
                assert_eq!(t.right_realization(mu).unwrap().apply(&f).unwrap(), t.star_product(&f, &x).unwrap());
            }
        }
    }

    #[test]
    fn same_bivector_for_all_twists() {
        let reference = bivector(&abel(q(0, 1), 3).r_matrix().unwrap()).unwrap();
        assert!(!reference.is_empty());
        for t in [jord(q(-1, 1), 3), jord(q(3, 1), 3), abel(q(1, 1), 3), abel(q(1, 4), 3)] {
            assert_eq!(bivector(&t.r_matrix().unwrap()).unwrap(), reference);
        }
    }

    #[test]
    fn zero_r_rejected() {
        assert_eq!(TwistSpec::jordanian(q(0, 1), 4, 3), Err(Error::ZeroJordanianParameter));
    }
}
