//! Bialgebra layer: flavors, basis monomials, tensors, and the two
//! comultiplication routes.

pub(crate) mod decompose;
mod laws;
mod symbolic;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{factorial, format_rational, Rational};
use crate::base::{BaseCategory, FiniteCategory};
use crate::error::{Error, Result};
use crate::shape::{format_shape, shape_aut_order, AutFlavor, Generator, ShapeKind};

pub use decompose::{
    all_fillings, delta_combinatorial, delta_combinatorial_monomial, enumerate_decompositions, fillings, Decomposition,
};
pub use laws::{
    check_bialgebra_laws, check_bialgebra_laws_with, enumerate_generators, Law, LawFailure, LawOptions, LawReport,
};
pub use symbolic::delta_symbolic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    /// Bar construction over S: forests may be permuted.
    Commutative,
    /// Bar construction over M: forests are ordered.
    Noncommutative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flavor {
    pub name: String,
    pub symbol: String,
    pub base: BaseCategory,
    pub inner_aut: AutFlavor,
    pub variables: ShapeKind,
    pub coefficients: Coefficients,
}

/// Registry: (name, symbol, base, inner aut, variables, coefficients).
const REGISTRY: &[(&str, &str, &str, AutFlavor, ShapeKind, Coefficients)] = {
    use AutFlavor::*;
    use Coefficients::*;
    use ShapeKind::{Multiset as Lam, Word as Wd};
    &[
        ("fdb", "𝓕", "trivial", SymmetricInner, Lam, Commutative),
        ("fdb-ord", "𝓕_ord", "trivial", Exponential, Wd, Commutative),
        ("fdb-nc", "𝓕ⁿᶜ", "trivial", Exponential, Wd, Noncommutative),
        ("fdb2", "𝓕²", "codiscrete:2", SymmetricInner, Lam, Commutative),
        ("fdb2-ncvars", "𝓕⟨2⟩", "codiscrete:2", Exponential, Wd, Commutative),
        ("fdb2-ncvars-nc", "𝓕⟨2⟩ⁿᶜ", "codiscrete:2", Exponential, Wd, Noncommutative),
        ("pleth", "𝒫", "classical", SymmetricInner, Lam, Commutative),
        ("pleth-ncvars", "𝒫^◇", "classical", SymmetricInner, Wd, Commutative),
        ("pleth-ncvars-nc", "𝒫^{◇,nc}", "classical", SymmetricInner, Wd, Noncommutative),
        ("pleth-exp", "𝒫_exp", "classical", Exponential, Lam, Commutative),
        ("pleth-lin", "𝒫_lin^◇", "classical", Exponential, Wd, Commutative),
        ("pleth-lin-nc", "𝒫_lin^{◇,nc}", "classical", Exponential, Wd, Noncommutative),
        ("pleth2", "𝒫²", "colored:2", SymmetricInner, Lam, Commutative),
        ("pleth2-exp", "𝒫²_exp", "colored:2", Exponential, Lam, Commutative),
        ("pleth-y:mul", "𝒫^(ℕ⁺,×)", "classical", Exponential, Lam, Commutative),
        ("pleth-y:add", "𝒫^(ℕ,+)", "additive", Exponential, Lam, Commutative),
        ("pleth-y:z2", "𝒫^(ℤ/2)", "z2", Exponential, Lam, Commutative),
    ]
};

impl Flavor {
    pub fn new(
        name: &str,
        symbol: &str,
        base: BaseCategory,
        inner_aut: AutFlavor,
        variables: ShapeKind,
        coefficients: Coefficients,
    ) -> Result<Self> {
        if coefficients == Coefficients::Noncommutative && variables != ShapeKind::Word {
            return Err(Error::UnsupportedFlavor(
                "noncommutative coefficients need an ordered outer structure (word variables)".into(),
            ));
        }
        if inner_aut == AutFlavor::SymmetricInner {
            let probe = base.identity(0);
            if base.size(&probe).is_none() {
                return Err(Error::UnsupportedFlavor(format!(
                    "symmetric inner automorphisms need arrow sizes; base {} has none",
                    base.spec_string()
                )));
            }
        }
        Ok(Flavor { name: name.into(), symbol: symbol.into(), base, inner_aut, variables, coefficients })
    }

    pub fn names() -> Vec<&'static str> {
        REGISTRY.iter().map(|r| r.0).collect()
    }

    pub fn all() -> Vec<Flavor> {
        REGISTRY.iter().map(|r| Self::by_name(r.0).expect("registry entry")).collect()
    }

    pub fn by_name(name: &str) -> Result<Flavor> {
        let name = match name {
            "classical" => "pleth",
            other => other,
        };
        if let Some(r) = REGISTRY.iter().find(|r| r.0 == name) {
            return Self::new(r.0, r.1, BaseCategory::from_spec(r.2)?, r.3, r.4, r.5);
        }
        if let Some(spec) = name.strip_prefix("pleth-y:") {
            return Self::monoid_plethysm(BaseCategory::from_spec(spec)?);
        }
        Err(Error::UnsupportedFlavor(format!("unknown flavor {name:?}")))
    }

    /// 𝒫^Y for an arbitrary locally finite base.
    pub fn monoid_plethysm(base: BaseCategory) -> Result<Flavor> {
        let name = format!("pleth-y:{}", base.spec_string());
        Self::new(&name, "𝒫^Y", base, AutFlavor::Exponential, ShapeKind::Multiset, Coefficients::Commutative)
    }

    pub fn monoid_plethysm_table(table: FiniteCategory) -> Result<Flavor> {
        Self::monoid_plethysm(BaseCategory::table(table))
    }

    pub fn colors(&self) -> u32 {
        self.base.object_count()
    }

    pub fn is_commutative(&self) -> bool {
        self.coefficients == Coefficients::Commutative
    }

    pub fn aut(&self, g: &Generator) -> Result<BigUint> {
        shape_aut_order(&self.base, &g.shape, self.inner_aut)
    }

    /// Automorphisms of a forest: component automorphisms, times permutations
    /// of equal components when forests are unordered.
    pub fn monomial_aut(&self, m: &BasisMonomial) -> Result<BigUint> {
        let mut acc = BigUint::one();
        for g in &m.factors {
            acc *= self.aut(g)?;
        }
        if self.is_commutative() {
            acc *= repetition_factor(&m.factors);
        }
        Ok(acc)
    }

    pub fn validate(&self, g: &Generator) -> Result<()> {
        if g.shape.kind() != self.variables {
            return Err(Error::UnsupportedFlavor(format!("flavor {} expects {:?} shapes", self.name, self.variables)));
        }
        let again = Generator::new(&self.base, g.shape.clone())?;
        if again.color != g.color {
            return Err(Error::ColorMismatch("generator color disagrees with its arrows".into()));
        }
        Ok(())
    }

    pub fn parse_generator(&self, text: &str) -> Result<Generator> {
        crate::shape::parse_generator(&self.base, self.variables, text)
    }

    pub fn format_generator(&self, g: &Generator) -> String {
        format_shape(&self.base, &g.shape)
    }

    pub fn format_monomial(&self, m: &BasisMonomial) -> String {
        if m.factors.is_empty() {
            return "1".into();
        }
        m.factors.iter().map(|g| format!("A{}", self.format_generator(g))).collect::<Vec<_>>().join("*")
    }

    pub fn monomial(&self, factors: Vec<Generator>) -> BasisMonomial {
        BasisMonomial::new(factors, self.is_commutative())
    }
}

/// ∏ (multiplicity)! over runs of equal entries of a sorted list.
pub fn repetition_factor<T: PartialEq>(sorted: &[T]) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        acc *= factorial((j - i) as u64);
        i = j;
    }
    acc
}

/// Product of generators; sorted when coefficients commute. Empty = unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMonomial {
    pub factors: Vec<Generator>,
}

impl BasisMonomial {
    pub fn new(mut factors: Vec<Generator>, commutative: bool) -> Self {
        if commutative {
            factors.sort();
        }
        BasisMonomial { factors }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(g: Generator) -> Self {
        BasisMonomial { factors: vec![g] }
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn total_size(&self) -> usize {
        self.factors.iter().map(|g| g.size()).sum()
    }
}

pub fn product(flavor: &Flavor, a: &BasisMonomial, b: &BasisMonomial) -> BasisMonomial {
    let mut f = a.factors.clone();
    f.extend(b.factors.iter().cloned());
    BasisMonomial::new(f, flavor.is_commutative())
}

pub fn counit(flavor: &Flavor, m: &BasisMonomial) -> Rational {
    if m.factors.iter().all(|g| g.is_unit(&flavor.base)) {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Σ coeff · (left ⊗ right); left = inner forest, right = outer generator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(BasisMonomial, BasisMonomial), Rational>,
}

impl TensorElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        let mut t = Self::new();
        t.add(BasisMonomial::one(), BasisMonomial::one(), Rational::one());
        t
    }

    pub fn add(&mut self, left: BasisMonomial, right: BasisMonomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn get(&self, left: &BasisMonomial, right: &BasisMonomial) -> Rational {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisMonomial, &BasisMonomial, &Rational)> {
        self.terms.iter().map(|((l, r), q)| (l, r, q))
    }

    /// Terms ordered by (right leg, left leg).
    pub fn sorted_terms(&self) -> Vec<(&BasisMonomial, &BasisMonomial, &Rational)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|a, b| (a.1, a.0).cmp(&(b.1, b.0)));
        v
    }

    pub fn restrict_right(&self, right: &BasisMonomial) -> TensorElement {
        TensorElement { terms: self.terms.iter().filter(|((_, r), _)| r == right).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    /// Outer ⊗ inner instead of inner ⊗ outer.
    pub fn swapped(&self) -> TensorElement {
        TensorElement { terms: self.terms.iter().map(|((l, r), q)| ((r.clone(), l.clone()), q.clone())).collect() }
    }

    pub fn mul(&self, other: &TensorElement, flavor: &Flavor) -> TensorElement {
        let mut out = TensorElement::new();
        for ((l1, r1), p) in &self.terms {
            for ((l2, r2), q) in &other.terms {
                out.add(product(flavor, l1, l2), product(flavor, r1, r2), p * q);
            }
        }
        out
    }

    pub fn format(&self, flavor: &Flavor) -> String {
        let mut s = String::new();
        for (l, r, q) in self.sorted_terms() {
            s.push_str(&format!(
                "{}  {} ⊗ {}\n",
                format_rational(q),
                flavor.format_monomial(l),
                flavor.format_monomial(r)
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{Lambda, Shape};

    #[test]
    fn registry_has_seventeen_flavors() {
        let all = Flavor::all();
        assert_eq!(all.len(), 17);
        assert!(Flavor::by_name("classical").is_ok());
        assert!(Flavor::new(
            "bad",
            "?",
            BaseCategory::classical(),
            AutFlavor::SymmetricInner,
            ShapeKind::Multiset,
            Coefficients::Noncommutative
        )
        .is_err());
        assert!(Flavor::new(
            "bad",
            "?",
            BaseCategory::additive(),
            AutFlavor::SymmetricInner,
            ShapeKind::Multiset,
            Coefficients::Commutative
        )
        .is_err());
    }

    #[test]
    fn counit_and_product() {
        let f = Flavor::by_name("pleth").unwrap();
        let g = |v: &[u32]| Generator::new(&f.base, Shape::Multiset(Lambda::from_vector(v))).unwrap();
        assert_eq!(counit(&f, &BasisMonomial::single(g(&[1]))), Rational::one());
        assert_eq!(counit(&f, &BasisMonomial::single(g(&[2]))), Rational::zero());
        assert_eq!(counit(&f, &f.monomial(vec![g(&[1]), g(&[1])])), Rational::one());
        let (a, b) = (BasisMonomial::single(g(&[2])), BasisMonomial::single(g(&[0, 1])));
        assert_eq!(product(&f, &a, &BasisMonomial::one()), a);
        assert_eq!(product(&f, &a, &b), product(&f, &b, &a));
        let nc = Flavor::by_name("pleth-ncvars-nc").unwrap();
        let w = |l: &[u64]| Generator::new(&nc.base, Shape::Word(crate::shape::Word::from_labels(l).unwrap())).unwrap();
        let (a, b) = (BasisMonomial::single(w(&[2])), BasisMonomial::single(w(&[1, 3])));
        assert_ne!(product(&nc, &a, &b), product(&nc, &b, &a));
    }
}
