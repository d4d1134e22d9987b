//! Bialgebra axioms checked on every generator up to a weight bound.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use super::{counit, delta_combinatorial, delta_combinatorial_monomial, delta_symbolic, BasisMonomial, Flavor, TensorElement};
use crate::arith::Rational;
use crate::base::Arrow;
use crate::error::Result;
use crate::shape::{Generator, Shape, ShapeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    RouteAgreement,
    Coassociativity,
    CounitLeft,
    CounitRight,
    Multiplicativity,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::RouteAgreement => "route-agreement",
            Law::Coassociativity => "coassociativity",
            Law::CounitLeft => "counit-left",
            Law::CounitRight => "counit-right",
            Law::Multiplicativity => "multiplicativity",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct LawOptions {
    /// Generators of weight ≤ this are checked.
    pub max_weight: u64,
    /// Compare against the symbolic route.
    pub routes: bool,
    /// Check Δ(ab) = Δ(a)Δ(b) on pairs of total weight ≤ `max_weight`.
    pub products: bool,
}

impl Default for LawOptions {
    fn default() -> Self {
        LawOptions { max_weight: 5, routes: true, products: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub law: Law,
    pub element: String,
}

#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub flavor: String,
    pub generators: usize,
    pub checks: BTreeMap<Law, usize>,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, law: Law, ok: bool, element: impl FnOnce() -> String) {
        *self.checks.entry(law).or_default() += 1;
        if !ok {
            self.failures.push(LawFailure { law, element: element() });
        }
    }
}

/// Generators of every color with total weight (Σ grades of cells) ≤ `max_weight`.
pub fn enumerate_generators(flavor: &Flavor, max_weight: u64) -> Result<Vec<Generator>> {
    let base = &flavor.base;
    let mut out = Vec::new();
    for c in base.objects() {
        let arrows = base.arrows_from(c, max_weight);
        let mut stack: Vec<Arrow> = Vec::new();
        rec(flavor, &arrows, 0, max_weight, &mut stack, c, &mut out)?;
    }
    out.sort();
    return Ok(out);

    fn rec(
        flavor: &Flavor,
        arrows: &[Arrow],
        start: usize,
        budget: u64,
        stack: &mut Vec<Arrow>,
        color: u32,
        out: &mut Vec<Generator>,
    ) -> Result<()> {
        if !stack.is_empty() {
            let shape = Shape::from_cells(flavor.variables, stack.clone())?;
            out.push(Generator { color, shape });
        }
        let from = if flavor.variables == ShapeKind::Multiset { start } else { 0 };
        for i in from..arrows.len() {
            let g = flavor.base.grade(&arrows[i]);
            if g <= budget {
                stack.push(arrows[i]);
                rec(flavor, arrows, i, budget - g, stack, color, out)?;
                stack.pop();
            }
        }
        Ok(())
    }
}

type DeltaFn<'a> = &'a (dyn Fn(&Flavor, &Generator) -> Result<TensorElement> + Sync);

pub fn check_bialgebra_laws(flavor: &Flavor, opts: &LawOptions) -> Result<LawReport> {
    check_bialgebra_laws_with(flavor, opts, &delta_combinatorial)
}

/// As `check_bialgebra_laws`, with Δ on generators supplied by the caller
/// (the symbolic route stays the reference for route agreement).
pub fn check_bialgebra_laws_with(flavor: &Flavor, opts: &LawOptions, delta: DeltaFn) -> Result<LawReport> {
    let gens = enumerate_generators(flavor, opts.max_weight)?;
    let mut report = LawReport { flavor: flavor.name.clone(), generators: gens.len(), ..Default::default() };
    let mut cache: HashMap<Generator, TensorElement> =
        gens.par_iter().map(|g| Ok((g.clone(), delta(flavor, g)?))).collect::<Result<_>>()?;
    let mut delta_gen = |g: &Generator| -> Result<TensorElement> {
        if let Some(t) = cache.get(g) {
            return Ok(t.clone());
        }
        let t = delta(flavor, g)?;
        cache.insert(g.clone(), t.clone());
        Ok(t)
    };
    let name = |g: &Generator| flavor.format_generator(g);
    for g in &gens {
        let d = delta_gen(g)?;
        if opts.routes {
            let s = delta_symbolic(flavor, g, g.size())?;
            report.record(Law::RouteAgreement, s == d, || name(g));
        }
        // counits
        let sigma = BasisMonomial::single(g.clone());
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for (l, r, q) in d.iter() {
            let el = counit(flavor, l);
            if !el.is_zero() {
                *left.entry(r.clone()).or_insert_with(Rational::zero) += q * el;
            }
            let er = counit(flavor, r);
            if !er.is_zero() {
                *right.entry(l.clone()).or_insert_with(Rational::zero) += q * er;
            }
        }
        left.retain(|_, q| !q.is_zero());
        right.retain(|_, q| !q.is_zero());
        let expect: BTreeMap<BasisMonomial, Rational> = [(sigma.clone(), Rational::from_integer(1.into()))].into();
        report.record(Law::CounitLeft, left == expect, || name(g));
        report.record(Law::CounitRight, right == expect, || name(g));
        // coassociativity on three legs
        let mut lhs: BTreeMap<[BasisMonomial; 3], Rational> = BTreeMap::new();
        let mut rhs: BTreeMap<[BasisMonomial; 3], Rational> = BTreeMap::new();
        for (l, r, q) in d.iter() {
            for (a, b, p) in delta_monomial(flavor, l, &mut delta_gen)?.iter() {
                *lhs.entry([a.clone(), b.clone(), r.clone()]).or_insert_with(Rational::zero) += q * p;
            }
            for (a, b, p) in delta_monomial(flavor, r, &mut delta_gen)?.iter() {
                *rhs.entry([l.clone(), a.clone(), b.clone()]).or_insert_with(Rational::zero) += q * p;
            }
        }
        lhs.retain(|_, q| !q.is_zero());
        rhs.retain(|_, q| !q.is_zero());
        report.record(Law::Coassociativity, lhs == rhs, || name(g));
    }
    if opts.products {
        let weight = |g: &Generator| g.shape.weight(&flavor.base);
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                if (flavor.is_commutative() && j < i) || weight(a) + weight(b) > opts.max_weight {
                    continue;
                }
                let m = flavor.monomial(vec![a.clone(), b.clone()]);
                let direct = delta_combinatorial_monomial(flavor, &m)?;
                let prod = delta_gen(a)?.mul(&delta_gen(b)?, flavor);
                report.record(Law::Multiplicativity, direct == prod, || format!("{}*{}", name(a), name(b)));
            }
        }
    }
    Ok(report)
}

fn delta_monomial(
    flavor: &Flavor,
    m: &BasisMonomial,
    delta_gen: &mut impl FnMut(&Generator) -> Result<TensorElement>,
) -> Result<TensorElement> {
    let mut acc = TensorElement::unit();
    for g in &m.factors {
        acc = acc.mul(&delta_gen(g)?, flavor);
    }
    Ok(acc)
}
