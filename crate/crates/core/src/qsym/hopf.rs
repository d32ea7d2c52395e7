//! The antipode and the ψ involution.
//!
//! Two independent routes to the antipode are kept deliberately: the
//! closed form S(M_I) = (−1)^ℓ(I) E_{Ī} and the splitting expansion
//! S(M_I) = Σ (−1)^l M_{I_1} ⋯ M_{I_l}. Their agreement is a cheap
//! correctness oracle for both the basis conversions and the stuffle
//! product.

use num_bigint::BigInt;

use crate::composition::Composition;
use crate::error::Result;
use crate::qsym::{Basis, QSymElem};

impl QSymElem {
    /// The antipode, via S(M_I) = (−1)^ℓ(I) E_{Ī}. The result is expressed
    /// in the input basis.
    pub fn antipode(&self) -> QSymElem {
        let m = self.to_m();
        let mut out = QSymElem::zero(Basis::E);
        for (i, c) in m.terms() {
            let coeff = if i.len() % 2 == 0 { c.clone() } else { -c };
            out.add_term(i.reverse(), coeff);
        }
        out.convert_to(self.basis())
    }

    /// The antipode, via the splitting expansion
    /// S(M_I) = Σ_{I_1⊔…⊔I_l = I} (−1)^l M_{I_1} M_{I_2} ⋯ M_{I_l}.
    pub fn antipode_splitting(&self) -> Result<QSymElem> {
        let m = self.to_m();
        let mut out = QSymElem::zero(Basis::M);
        for (i, c) in m.terms() {
            for blocks in i.splittings() {
                let mut prod = QSymElem::unit(Basis::M);
                for block in &blocks {
                    prod = prod.stuffle(&QSymElem::generator(Basis::M, block.clone()))?;
                }
                let signed = if blocks.len() % 2 == 0 { c.clone() } else { -c };
                out = out.add(&prod.scale(&signed));
            }
        }
        Ok(out.convert_to(self.basis()))
    }

    /// The additive involution ψ, via ψ(E_I) = −E_{I*}. Not an algebra map
    /// for the stuffle product. The result is expressed in the input basis.
    pub fn psi(&self) -> QSymElem {
        let e = self.convert_to(Basis::E);
        let mut out = QSymElem::zero(Basis::E);
        for (i, c) in e.terms() {
            if i.is_empty() {
                out.add_term(Composition::unit(), c.clone());
            } else {
                out.add_term(i.dual().expect("nonempty"), -c);
            }
        }
        out.convert_to(self.basis())
    }
}

/// Convenience: (−1)^k as a BigInt sign.
pub(crate) fn sign_pow(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}
