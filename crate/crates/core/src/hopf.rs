//! Twist-deformed coproducts and antipodes of vector-field generators, and
//! checks of the Hopf-algebra axioms they must satisfy.

use serde::Serialize;

use crate::error::Result;
use crate::twist::{Leg, SymbolicTensor, Twist};
use crate::weyl::{outer, DiffOp, Tensor3, TensorOp};

/// Deformed Hopf structure `Δ^F(X) = F Δ(X) F^{-1}`, `S^F(X) = u S(X) u^{-1}`.
#[derive(Clone, Debug)]
pub struct DeformedHopf {
    twist: Twist,
    inverse: SymbolicTensor,
    u: DiffOp,
    u_inv: DiffOp,
}

/// Result of one axiom check over a generator set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub pass: bool,
    pub first_failure: Option<u32>,
    pub failing_generator: Option<String>,
}

impl AxiomCheck {
    fn new() -> Self {
        Self { pass: true, first_failure: None, failing_generator: None }
    }

    fn record(&mut self, name: &str, diff: Option<u32>) {
        if let Some(k) = diff {
            if self.pass || self.first_failure.is_some_and(|f| k < f) {
                self.first_failure = Some(k);
                self.failing_generator = Some(name.to_string());
            }
            self.pass = false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub coassociativity: AxiomCheck,
    pub counit: AxiomCheck,
    pub antipode: AxiomCheck,
    pub homomorphism: AxiomCheck,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.coassociativity.pass && self.counit.pass && self.antipode.pass && self.homomorphism.pass
    }
}

fn pairs_product(pairs: &[(DiffOp, DiffOp)], middle: Option<&DiffOp>, dim: usize, order: usize) -> Result<DiffOp> {
    let mut out = DiffOp::zero(dim, order);
    for (l, r) in pairs {
        let t = match middle {
            Some(m) => l.mul(m)?.mul(r)?,
            None => l.mul(r)?,
        };
        out = out.add(&t)?;
    }
    Ok(out)
}

impl DeformedHopf {
    pub fn new(twist: &Twist) -> Result<Self> {
        let inverse = twist.symbolic().invert()?;
        let (dim, order) = (twist.dim(), twist.order());
        // u = f^α S(f_α)
        let u = pairs_product(&twist.symbolic().operator_pairs_with_antipode(Leg::Right)?, None, dim, order)?;
        let u_inv = u.invert()?;
        Ok(Self { twist: twist.clone(), inverse, u, u_inv })
    }

    /// Same structure with `u` replaced by `1`.
    pub fn without_u_conjugation(&self) -> Self {
        let one = DiffOp::one(self.twist.dim(), self.twist.order());
        Self { u: one.clone(), u_inv: one, ..self.clone() }
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn u(&self) -> &DiffOp {
        &self.u
    }

    pub fn coproduct(&self, x: &DiffOp) -> Result<TensorOp> {
        self.twist.f().mul(&TensorOp::primitive(x))?.mul(self.twist.f_inv())
    }

    pub fn antipode(&self, x: &DiffOp) -> Result<DiffOp> {
        self.u.mul(&x.neg())?.mul(&self.u_inv)
    }

    /// Conjugators `C` with `(Δ^F ⊗ id)Δ^F(X) = C_l X₃ C_l⁻¹` and
    /// `(id ⊗ Δ^F)Δ^F(X) = C_r X₃ C_r⁻¹`, `X₃ = X⊗1⊗1 + 1⊗X⊗1 + 1⊗1⊗X`.
    fn coassociativity_conjugators(&self) -> Result<[(Tensor3, Tensor3); 2]> {
        let f = self.twist.f();
        let f_inv = self.twist.f_inv();
        let sym = self.twist.symbolic();
        let left = f.extend_right().mul(&sym.delta0_extend(Leg::Left)?)?;
        let left_inv = self.inverse.delta0_extend(Leg::Left)?.mul(&f_inv.extend_right())?;
        let right = f.extend_left().mul(&sym.delta0_extend(Leg::Right)?)?;
        let right_inv = self.inverse.delta0_extend(Leg::Right)?.mul(&f_inv.extend_left())?;
        Ok([(left, left_inv), (right, right_inv)])
    }

    /// `C X₃ C⁻¹ = X₃ + [C, X₃] C⁻¹`.
    fn conjugate3(c: &(Tensor3, Tensor3), x: &DiffOp) -> Result<Tensor3> {
        let one = DiffOp::one(x.dim(), x.order());
        let x3 = outer([x, &one, &one])?.add(&outer([&one, x, &one])?)?.add(&outer([&one, &one, x])?)?;
        let k = c.0.commutator(&x3)?;
        if k.is_zero() {
            return Ok(x3);
        }
        x3.add(&k.mul(&c.1)?)
    }

    /// `μ(S^F ⊗ id)Δ^F(X)` for a primitive generator `X`, reduced to
    /// `u Σ S(f̄^β)(VX - XV) f̄_β` with `V = Σ S(f^α) u^{-1} f_α`.
    pub fn antipode_axiom(&self, x: &DiffOp) -> Result<DiffOp> {
        let (dim, order) = (x.dim(), x.order());
        let f_pairs = self.twist.symbolic().operator_pairs_with_antipode(Leg::Left)?;
        let v = pairs_product(&f_pairs, Some(&self.u_inv), dim, order)?;
        let w = v.commutator(x)?;
        let g_pairs = self.inverse.operator_pairs_with_antipode(Leg::Left)?;
        self.u.mul(&pairs_product(&g_pairs, Some(&w), dim, order)?)
    }

    /// The antipode axiom alone over the named generators.
    pub fn verify_antipode(&self, gens: &[(String, DiffOp)]) -> Result<AxiomCheck> {
        let mut check = AxiomCheck::new();
        for (name, x) in gens {
            let zero = DiffOp::zero(x.dim(), x.order());
            check.record(name, self.antipode_axiom(x)?.first_difference(&zero));
        }
        Ok(check)
    }

    /// Checks coassociativity, counit, antipode and homomorphism axioms on
    /// the named vector-field generators.
    pub fn verify_axioms(&self, gens: &[(String, DiffOp)]) -> Result<AxiomReport> {
        let mut rep = AxiomReport {
            coassociativity: AxiomCheck::new(),
            counit: AxiomCheck::new(),
            antipode: AxiomCheck::new(),
            homomorphism: AxiomCheck::new(),
        };
        let [cl, cr] = self.coassociativity_conjugators()?;
        let mut coproducts = Vec::with_capacity(gens.len());
        for (name, x) in gens {
            let (l, r) = (Self::conjugate3(&cl, x)?, Self::conjugate3(&cr, x)?);
            rep.coassociativity.record(name, l.first_difference(&r));
            let dx = self.coproduct(x)?;
            rep.counit.record(name, dx.counit_left().first_difference(x));
            rep.counit.record(name, dx.counit_right().first_difference(x));
            let zero = DiffOp::zero(x.dim(), x.order());
            rep.antipode.record(name, self.antipode_axiom(x)?.first_difference(&zero));
            coproducts.push(dx);
        }
        for (i, (ni, xi)) in gens.iter().enumerate() {
            for (j, (nj, xj)) in gens.iter().enumerate().skip(i + 1) {
                let lhs = self.coproduct(&xi.commutator(xj)?)?;
                let rhs = coproducts[i].commutator(&coproducts[j])?;
                rep.homomorphism.record(&format!("[{ni},{nj}]"), lhs.first_difference(&rhs));
            }
        }
        Ok(rep)
    }
}
