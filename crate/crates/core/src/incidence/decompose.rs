//! Combinatorial comultiplication: (λ, μ)-decompositions of σ counted with
//! automorphism weights.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use super::{repetition_factor, BasisMonomial, Flavor, TensorElement};
use crate::arith::{ratio, Rational};
use crate::base::{Arrow, BaseCategory};
use crate::error::{Error, Result};
use crate::series::enumerate_shapes;
use crate::shape::{verschiebung_shape, Generator, Lambda, Shape, ShapeKind, Word};

/// One inner class μ̄ for a fixed outer λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub outer: Generator,
    pub inner: BasisMonomial,
    /// Fillings of the labeled λ-grid giving this inner class.
    pub fillings: usize,
    /// |T_{σ,λ}^μ|: placements of a fixed list μ into the grid.
    pub placements: BigUint,
    pub weight: Rational,
}

const SEARCH_LIMIT: usize = 5_000_000;

/// All fillings of the labeled cells of `outer` (canonical order) by inner
/// generators whose Verschiebung-shifted sum (or concatenation) is σ.
pub fn fillings(flavor: &Flavor, sigma: &Generator, outer: &Shape) -> Result<Vec<Vec<Generator>>> {
    flavor.validate(sigma)?;
    let cells = outer.cells();
    if cells.is_empty() || cells.iter().any(|a| a.src != sigma.color) {
        return Ok(Vec::new());
    }
    match (&sigma.shape, outer) {
        (Shape::Multiset(s), Shape::Multiset(_)) => lambda_fillings(&flavor.base, s, &cells),
        (Shape::Word(w), Shape::Word(o)) => Ok(word_fillings(&flavor.base, w.letters(), Some(o.letters()))?
            .into_iter()
            .map(|(_, ks)| ks)
            .collect()),
        _ => Err(Error::KindMismatch),
    }
}

/// Every `(outer generator, filling)` pair for σ.
pub fn all_fillings(flavor: &Flavor, sigma: &Generator) -> Result<Vec<(Generator, Vec<Generator>)>> {
    flavor.validate(sigma)?;
    let base = &flavor.base;
    match &sigma.shape {
        Shape::Multiset(s) => {
            let mut left: BTreeSet<Arrow> = BTreeSet::new();
            for (n, _) in s.entries() {
                for (m, _) in base.factorizations(n) {
                    left.insert(m);
                }
            }
            let left: Vec<Arrow> = left.into_iter().collect();
            let mut out = Vec::new();
            for outer in enumerate_shapes(ShapeKind::Multiset, &left, s.size(), SEARCH_LIMIT)? {
                let cells = outer.cells();
                let g = Generator { color: sigma.color, shape: outer };
                for fill in lambda_fillings(base, s, &cells)? {
                    out.push((g.clone(), fill));
                }
            }
            Ok(out)
        }
        Shape::Word(w) => {
            let mut out = Vec::new();
            for (omega, ks) in word_fillings(base, w.letters(), None)? {
                let g = Generator { color: sigma.color, shape: Shape::Word(Word::new(omega)?) };
                out.push((g, ks));
            }
            out.sort();
            Ok(out)
        }
    }
}

fn lambda_fillings(base: &BaseCategory, sigma: &Lambda, cells: &[Arrow]) -> Result<Vec<Vec<Generator>>> {
    let entries = sigma.entries();
    // options[e]: (cell index, inner arrow k) with cells[c] ∘ k = entry e
    let mut options: Vec<Vec<(usize, Arrow)>> = Vec::with_capacity(entries.len());
    for (n, _) in entries {
        let mut o = Vec::new();
        for (m, k) in base.factorizations(n) {
            for (c, cell) in cells.iter().enumerate() {
                if *cell == m {
                    o.push((c, k));
                }
            }
        }
        options.push(o);
    }
    let mut suffix = vec![0usize; entries.len() + 1];
    for e in (0..entries.len()).rev() {
        suffix[e] = suffix[e + 1] + entries[e].1 as usize;
    }
    struct St<'a> {
        entries: &'a [(Arrow, u32)],
        options: &'a [Vec<(usize, Arrow)>],
        suffix: &'a [usize],
        acc: Vec<Vec<(Arrow, u32)>>,
        out: Vec<Vec<Generator>>,
    }
    fn empty_cells(acc: &[Vec<(Arrow, u32)>]) -> usize {
        acc.iter().filter(|v| v.is_empty()).count()
    }
    fn rec(st: &mut St, e: usize, j: usize, left: usize) -> Result<()> {
        if st.out.len() > SEARCH_LIMIT {
            return Err(Error::LimitExceeded("too many decompositions".into()));
        }
        if e == st.entries.len() {
            if empty_cells(&st.acc) == 0 {
                let fill = st
                    .acc
                    .iter()
                    .map(|v| {
                        let l = Lambda::from_pairs(v.iter().copied());
                        let color = v[0].0.src;
                        Generator { color, shape: Shape::Multiset(l) }
                    })
                    .collect();
                st.out.push(fill);
            }
            return Ok(());
        }
        if left + st.suffix[e + 1] < empty_cells(&st.acc) {
            return Ok(());
        }
        let opts = &st.options[e];
        if left == 0 {
            let next_left = st.entries.get(e + 1).map_or(0, |x| x.1 as usize);
            return rec(st, e + 1, 0, next_left);
        }
        if j >= opts.len() {
            return Ok(());
        }
        let (c, k) = opts[j];
        let last = j + 1 == opts.len();
        let lo = if last { left } else { 0 };
        for take in lo..=left {
            if take > 0 {
                st.acc[c].push((k, take as u32));
            }
            rec(st, e, j + 1, left - take)?;
            if take > 0 {
                st.acc[c].pop();
            }
        }
        Ok(())
    }
    let mut st = St { entries, options: &options, suffix: &suffix, acc: vec![Vec::new(); cells.len()], out: Vec::new() };
    if entries.is_empty() {
        return Ok(Vec::new());
    }
    let first = entries[0].1 as usize;
    rec(&mut st, 0, 0, first)?;
    Ok(st.out)
}

/// Splits ν into consecutive blocks ν = (ω₁κ₁)(ω₂κ₂)…; with `omega` fixed the
/// outer letters are prescribed.
fn word_fillings(
    base: &BaseCategory,
    nu: &[Arrow],
    omega: Option<&[Arrow]>,
) -> Result<Vec<(Vec<Arrow>, Vec<Generator>)>> {
    let mut out = Vec::new();
    let mut outer = Vec::new();
    let mut inner: Vec<Generator> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        base: &BaseCategory,
        nu: &[Arrow],
        omega: Option<&[Arrow]>,
        p: usize,
        outer: &mut Vec<Arrow>,
        inner: &mut Vec<Generator>,
        out: &mut Vec<(Vec<Arrow>, Vec<Generator>)>,
    ) -> Result<()> {
        if out.len() > SEARCH_LIMIT {
            return Err(Error::LimitExceeded("too many decompositions".into()));
        }
        let i = outer.len();
        if p == nu.len() {
            if omega.is_none_or(|o| o.len() == i) {
                out.push((outer.clone(), inner.clone()));
            }
            return Ok(());
        }
        let candidates: Vec<Arrow> = match omega {
            Some(o) => match o.get(i) {
                Some(m) => vec![*m],
                None => return Ok(()),
            },
            None => {
                let mut c: Vec<Arrow> = base.factorizations(&nu[p]).into_iter().map(|x| x.0).collect();
                c.dedup();
                c
            }
        };
        for m in candidates {
            let mut per_letter: Vec<Vec<Arrow>> = Vec::new();
            for q in p..nu.len() {
                let ks: Vec<Arrow> =
                    base.factorizations(&nu[q]).into_iter().filter(|x| x.0 == m).map(|x| x.1).collect();
                if ks.is_empty() {
                    break;
                }
                per_letter.push(ks);
                // block nu[p..=q] with outer letter m
                let mut idx = vec![0usize; per_letter.len()];
                loop {
                    let kappa: Vec<Arrow> = idx.iter().enumerate().map(|(t, &x)| per_letter[t][x]).collect();
                    outer.push(m);
                    inner.push(Generator { color: m.tgt, shape: Shape::Word(Word::new(kappa)?) });
                    rec(base, nu, omega, q + 1, outer, inner, out)?;
                    outer.pop();
                    inner.pop();
                    if !advance(&mut idx, |t| per_letter[t].len()) {
                        break;
                    }
                }
            }
        }
        Ok(())
    }
    rec(base, nu, omega, 0, &mut outer, &mut inner, &mut out)?;
    Ok(out)
}

pub fn enumerate_decompositions(flavor: &Flavor, sigma: &Generator, outer: &Generator) -> Result<Vec<Decomposition>> {
    flavor.validate(outer)?;
    let fills = fillings(flavor, sigma, &outer.shape)?;
    let aut_sigma = flavor.aut(sigma)?;
    let aut_outer = flavor.aut(outer)?;
    let mut groups: BTreeMap<BasisMonomial, usize> = BTreeMap::new();
    for f in fills {
        *groups.entry(flavor.monomial(f)).or_default() += 1;
    }
    let mut out = Vec::new();
    for (inner, count) in groups {
        let placements = if flavor.is_commutative() {
            BigUint::from(count) * repetition_factor(&inner.factors)
        } else {
            BigUint::from(count)
        };
        let weight = ratio(&(&aut_sigma * &placements), &(&aut_outer * flavor.monomial_aut(&inner)?));
        out.push(Decomposition { outer: outer.clone(), inner, fillings: count, placements, weight });
    }
    Ok(out)
}

/// Δ(A_σ) = Σ aut(σ)·|T| / (aut(λ)·aut(μ)) · A_μ ⊗ A_λ.
pub fn delta_combinatorial(flavor: &Flavor, sigma: &Generator) -> Result<TensorElement> {
    let mut outers: BTreeSet<Generator> = BTreeSet::new();
    for (g, _) in all_fillings(flavor, sigma)? {
        outers.insert(g);
    }
    let mut t = TensorElement::new();
    for outer in outers {
        for d in enumerate_decompositions(flavor, sigma, &outer)? {
            t.add(d.inner, BasisMonomial::single(outer.clone()), d.weight);
        }
    }
    Ok(t)
}

fn compose(base: &BaseCategory, outer: &Generator, inner: &[Generator]) -> Result<Generator> {
    let cells = outer.shape.cells();
    let mut acc: Option<Shape> = None;
    for (m, mu) in cells.iter().zip(inner) {
        let s = verschiebung_shape(base, m, &mu.shape)?;
        acc = Some(match acc {
            None => s,
            Some(a) => a.mul(&s)?,
        });
    }
    let shape = acc.ok_or_else(|| Error::Invalid("empty outer".into()))?;
    Ok(Generator { color: outer.color, shape })
}

/// Δ of a product of generators computed directly from two-level forests:
/// Σ |Aut f|·#{φ : composite ≅ f} / (|Aut ℓ|·|Aut τ|) · τ ⊗ ℓ, with φ ranging
/// over color-preserving bijections between inner roots and outer leaves
/// (only the identity for ordered forests).
pub fn delta_combinatorial_monomial(flavor: &Flavor, f: &BasisMonomial) -> Result<TensorElement> {
    let comm = flavor.is_commutative();
    let f = flavor.monomial(f.factors.clone());
    let per: Vec<Vec<(Generator, Vec<Generator>)>> =
        f.factors.iter().map(|s| all_fillings(flavor, s)).collect::<Result<_>>()?;
    let aut_f = flavor.monomial_aut(&f)?;
    let mut out = TensorElement::new();
    if f.factors.is_empty() {
        return Ok(TensorElement::unit());
    }
    // cartesian product of per-component choices
    let mut idx = vec![0usize; per.len()];
    if per.iter().any(|v| v.is_empty()) {
        return Ok(out);
    }
    let mut candidates: BTreeSet<(BasisMonomial, BasisMonomial)> = BTreeSet::new();
    loop {
        let mut outers = Vec::new();
        let mut inners = Vec::new();
        for (c, &i) in idx.iter().enumerate() {
            outers.push(per[c][i].0.clone());
            inners.extend(per[c][i].1.iter().cloned());
        }
        let (tau, ell) = (flavor.monomial(inners), flavor.monomial(outers));
        if comm {
            candidates.insert((tau, ell));
        } else {
            let w = ratio(&aut_f, &(flavor.monomial_aut(&ell)? * flavor.monomial_aut(&tau)?));
            out.add(tau, ell, w);
        }
        if !advance(&mut idx, |c| per[c].len()) {
            break;
        }
    }
    for (tau, ell) in candidates {
        let n = count_bijections(&flavor.base, &f, &tau, &ell)?;
        if n > 0 {
            let w = ratio(&(&aut_f * BigUint::from(n)), &(flavor.monomial_aut(&ell)? * flavor.monomial_aut(&tau)?));
            out.add(tau, ell, w);
        }
    }
    Ok(out)
}

fn count_bijections(base: &BaseCategory, f: &BasisMonomial, tau: &BasisMonomial, ell: &BasisMonomial) -> Result<u64> {
    let mut slots: Vec<(usize, Arrow)> = Vec::new();
    for (i, g) in ell.factors.iter().enumerate() {
        for a in g.shape.cells() {
            slots.push((i, a));
        }
    }
    if slots.len() != tau.factors.len() {
        return Ok(0);
    }
    let mut target = f.factors.clone();
    target.sort();
    let mut used = vec![false; tau.factors.len()];
    let mut assign: Vec<usize> = Vec::with_capacity(slots.len());
    #[allow(clippy::too_many_arguments)]
    fn rec(
        base: &BaseCategory,
        slots: &[(usize, Arrow)],
        tau: &[Generator],
        ell: &[Generator],
        target: &[Generator],
        used: &mut Vec<bool>,
        assign: &mut Vec<usize>,
        count: &mut u64,
    ) -> Result<()> {
        let p = assign.len();
        if p == slots.len() {
            let mut comps = Vec::with_capacity(ell.len());
            let mut start = 0;
            for (i, g) in ell.iter().enumerate() {
                let len = g.shape.size();
                let inner: Vec<Generator> = assign[start..start + len].iter().map(|&j| tau[j].clone()).collect();
                debug_assert!(slots[start].0 == i);
                comps.push(compose(base, g, &inner)?);
                start += len;
            }
            comps.sort();
            if comps == target {
                *count += 1;
            }
            return Ok(());
        }
        let want = slots[p].1.tgt;
        for j in 0..tau.len() {
            if !used[j] && tau[j].color == want {
                used[j] = true;
                assign.push(j);
                rec(base, slots, tau, ell, target, used, assign, count)?;
                assign.pop();
                used[j] = false;
            }
        }
        Ok(())
    }
    let mut count = 0;
    rec(base, &slots, &tau.factors, &ell.factors, &target, &mut used, &mut assign, &mut count)?;
    Ok(count)
}

/// Odometer step; false once every combination has been visited.
pub(crate) fn advance(idx: &mut [usize], len: impl Fn(usize) -> usize) -> bool {
    for t in (0..idx.len()).rev() {
        idx[t] += 1;
        if idx[t] < len(t) {
            return true;
        }
        idx[t] = 0;
    }
    false
}
