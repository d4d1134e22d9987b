//! Δ read off from a generic substitution G ⊛ F.

use std::collections::BTreeSet;

use super::{BasisMonomial, Coefficients, Flavor, TensorElement};
use crate::arith::Rational;
use crate::base::Arrow;
use crate::error::{Error, Result};
use crate::series::{generic_series, substitute_plethystic_family, CoefficientRing, SymbolTable};
use crate::shape::Generator;

/// Δ(A_σ) from the coefficient of x^σ in G ⊛ (F^c)_c, where G and F carry
/// one free symbol per basis element. `degree` is the truncation and must
/// reach |σ|.
pub fn delta_symbolic(flavor: &Flavor, sigma: &Generator, degree: usize) -> Result<TensorElement> {
    flavor.validate(sigma)?;
    if degree < sigma.size() {
        return Err(Error::TruncationTooSmall { size: sigma.size(), degree });
    }
    let base = &flavor.base;
    // only factors of σ's arrows can contribute
    let mut left: BTreeSet<Arrow> = BTreeSet::new();
    let mut right: BTreeSet<Arrow> = BTreeSet::new();
    for a in sigma.shape.cells() {
        for (m, k) in base.factorizations(&a) {
            left.insert(m);
            right.insert(k);
        }
    }
    let left: Vec<Arrow> = left.into_iter().collect();
    let right: Vec<Arrow> = right.into_iter().collect();
    let ring = match flavor.coefficients {
        Coefficients::Commutative => CoefficientRing::CommutativeGeneric,
        Coefficients::Noncommutative => CoefficientRing::NoncommutativeGeneric,
    };
    let d = sigma.size();
    let mut table = SymbolTable::new();
    let g = generic_series("g", base, sigma.color, flavor.variables, ring, flavor.inner_aut, d, &left, &mut table)?;
    let colors: BTreeSet<u32> = right.iter().map(|a| a.src).collect();
    let mut family = Vec::new();
    for c in colors {
        family.push(generic_series("f", base, c, flavor.variables, ring, flavor.inner_aut, d, &right, &mut table)?);
    }
    let h = substitute_plethystic_family(&g, &family, d, Some(&sigma.shape))?;
    let coeff = h.coefficient(&sigma.shape)?;
    let aut = Rational::from_integer(flavor.aut(sigma)?.into());
    let mut out = TensorElement::new();
    for (symbols, q) in coeff.terms() {
        let mut outer: Option<Generator> = None;
        let mut inner = Vec::new();
        for s in symbols {
            let info = table.info(*s);
            if info.prefix == "g" {
                if outer.replace(info.generator.clone()).is_some() {
                    return Err(Error::Invalid("monomial with two outer symbols".into()));
                }
            } else {
                inner.push(info.generator.clone());
            }
        }
        let outer = outer.ok_or_else(|| Error::Invalid("monomial without an outer symbol".into()))?;
        out.add(flavor.monomial(inner), BasisMonomial::single(outer), q * &aut);
    }
    Ok(out)
}
