//! Concrete operads: colored Sym/Ass, tuple operads over a base category
//! (Giraudo's construction and its colored versions), and an exhaustive
//! axiom checker for small profiles.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::base::{Arrow, BaseCategory, FiniteCategory, ObjectId};
use crate::error::{Error, Result};
use crate::incidence::repetition_factor;
use crate::shape::{AutFlavor, Lambda};

/// An operation: output color, input colors, and (for tuple operads) the
/// arrows, one per input.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Op {
    pub output: ObjectId,
    pub inputs: Vec<ObjectId>,
    pub arrows: Vec<Arrow>,
}

impl Op {
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }
}

pub trait OperadInstance {
    fn name(&self) -> String;
    fn colors(&self) -> Vec<ObjectId>;
    /// Operations are classes under input permutation.
    fn symmetric(&self) -> bool;
    /// Class representatives of arity ≤ `bound` (and arrow grade ≤ `bound`).
    fn enumerate_ops(&self, bound: u64) -> Vec<Op>;
    fn identity(&self, color: ObjectId) -> Op;
    /// Full composition on representatives (no canonicalization).
    fn compose(&self, outer: &Op, inners: &[Op]) -> Result<Op>;
    fn aut(&self, op: &Op) -> BigUint;

    fn canonical(&self, op: &Op) -> Op {
        if !self.symmetric() {
            return op.clone();
        }
        let mut idx: Vec<usize> = (0..op.arity()).collect();
        idx.sort_by_key(|&i| (op.arrows.get(i).copied(), op.inputs[i]));
        Op {
            output: op.output,
            inputs: idx.iter().map(|&i| op.inputs[i]).collect(),
            arrows: if op.arrows.is_empty() { Vec::new() } else { idx.iter().map(|&i| op.arrows[i]).collect() },
        }
    }

    /// x ∘_i y with `i` zero-based.
    fn partial(&self, outer: &Op, i: usize, inner: &Op) -> Result<Op> {
        if i >= outer.arity() {
            return Err(Error::IndexOutOfRange { index: i, len: outer.arity() });
        }
        let inners: Vec<Op> = outer
            .inputs
            .iter()
            .enumerate()
            .map(|(j, &c)| if j == i { inner.clone() } else { self.identity(c) })
            .collect();
        self.compose(outer, &inners)
    }
}

fn check_profile(outer: &Op, inners: &[Op]) -> Result<()> {
    if outer.arity() != inners.len() {
        return Err(Error::ArityMismatch { expected: outer.arity(), got: inners.len() });
    }
    for (c, y) in outer.inputs.iter().zip(inners) {
        if *c != y.output {
            return Err(Error::ColorMismatch(format!("input color {c} receives an operation of color {}", y.output)));
        }
    }
    Ok(())
}

// ---- Sym_k / Ass_k --------------------------------------------------------------

/// The k-colored commutative (Sym_k) or associative (Ass_k) operad: exactly
/// one operation per profile (class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileOperad {
    pub colors: u32,
    pub symmetric: bool,
}

impl ProfileOperad {
    pub fn sym(k: u32) -> Self {
        ProfileOperad { colors: k, symmetric: true }
    }

    pub fn ass(k: u32) -> Self {
        ProfileOperad { colors: k, symmetric: false }
    }

    pub fn op(&self, output: ObjectId, inputs: Vec<ObjectId>) -> Op {
        Op { output, inputs, arrows: Vec::new() }
    }
}

impl OperadInstance for ProfileOperad {
    fn name(&self) -> String {
        let base = if self.symmetric { "sym" } else { "ass" };
        if self.colors == 1 {
            base.into()
        } else {
            format!("{base}{}", self.colors)
        }
    }

    fn colors(&self) -> Vec<ObjectId> {
        (0..self.colors).collect()
    }

    fn symmetric(&self) -> bool {
        self.symmetric
    }

    fn enumerate_ops(&self, bound: u64) -> Vec<Op> {
        let k = self.colors;
        let mut out = Vec::new();
        for n in 1..=bound as usize {
            let mut inputs = vec![0u32; n];
            loop {
                let sorted = inputs.windows(2).all(|w| w[0] <= w[1]);
                if !self.symmetric || sorted {
                    for c in 0..k {
                        out.push(self.op(c, inputs.clone()));
                    }
                }
                let mut t = n;
                let mut done = true;
                while t > 0 {
                    t -= 1;
                    inputs[t] += 1;
                    if inputs[t] < k {
                        done = false;
                        break;
                    }
                    inputs[t] = 0;
                }
                if done {
                    break;
                }
            }
        }
        out
    }

    fn identity(&self, color: ObjectId) -> Op {
        self.op(color, vec![color])
    }

    fn compose(&self, outer: &Op, inners: &[Op]) -> Result<Op> {
        check_profile(outer, inners)?;
        Ok(self.op(outer.output, inners.iter().flat_map(|y| y.inputs.iter().copied()).collect()))
    }

    /// Stabilizer of the input list: ∏ (multiplicity of each color)! when symmetric.
    fn aut(&self, op: &Op) -> BigUint {
        if !self.symmetric {
            return BigUint::one();
        }
        let mut v = op.inputs.clone();
        v.sort();
        repetition_factor(&v)
    }
}

// ---- tuple operads ----------------------------------------------------------------

/// Operations are tuples of arrows with a common source (opposite convention)
/// or a common target; composition composes each outer arrow with every
/// arrow of the inner tuple plugged into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleOperad {
    pub name: String,
    pub base: BaseCategory,
    pub symmetric: bool,
    pub opposite: bool,
    /// Per-arrow automorphisms: `SymmetricInner` gives n! to an arrow of size n.
    pub arrow_aut: AutFlavor,
}

impl TupleOperad {
    pub fn new(name: &str, base: BaseCategory, symmetric: bool) -> Self {
        TupleOperad { name: name.into(), base, symmetric, opposite: true, arrow_aut: AutFlavor::Exponential }
    }

    pub fn op(&self, arrows: Vec<Arrow>) -> Result<Op> {
        let Some(first) = arrows.first() else {
            return Err(Error::Invalid("operations are nonempty tuples".into()));
        };
        let output = if self.opposite { first.src } else { first.tgt };
        for a in &arrows {
            self.base.check(a)?;
            let end = if self.opposite { a.src } else { a.tgt };
            if end != output {
                return Err(Error::ColorMismatch("tuple arrows must share their source".into()));
            }
        }
        let inputs = arrows.iter().map(|a| if self.opposite { a.tgt } else { a.src }).collect();
        Ok(Op { output, inputs, arrows })
    }

    fn arrow_aut(&self, a: &Arrow) -> BigUint {
        match (self.arrow_aut, self.base.size(a)) {
            (AutFlavor::SymmetricInner, Some(n)) => factorial(n),
            _ => BigUint::one(),
        }
    }
}

impl OperadInstance for TupleOperad {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn colors(&self) -> Vec<ObjectId> {
        self.base.objects()
    }

    fn symmetric(&self) -> bool {
        self.symmetric
    }

    fn enumerate_ops(&self, bound: u64) -> Vec<Op> {
        let mut out = Vec::new();
        for c in self.colors() {
            let arrows =
                if self.opposite { self.base.arrows_from(c, bound) } else { self.base.arrows_into(c, bound) };
            let mut stack = Vec::new();
            self.enum_rec(&arrows, 0, bound as usize, &mut stack, &mut out);
        }
        out
    }

    fn identity(&self, color: ObjectId) -> Op {
        let id = self.base.identity(color);
        Op { output: color, inputs: vec![color], arrows: vec![id] }
    }

    fn compose(&self, outer: &Op, inners: &[Op]) -> Result<Op> {
        check_profile(outer, inners)?;
        let mut arrows = Vec::new();
        for (x, y) in outer.arrows.iter().zip(inners) {
            for a in &y.arrows {
                arrows.push(if self.opposite { self.base.compose(x, a)? } else { self.base.compose(a, x)? });
            }
        }
        self.op(arrows)
    }

    fn aut(&self, op: &Op) -> BigUint {
        let mut acc = BigUint::one();
        for a in &op.arrows {
            acc *= self.arrow_aut(a);
        }
        if self.symmetric {
            let mut v = op.arrows.clone();
            v.sort();
            acc *= repetition_factor(&v);
        }
        acc
    }
}

impl TupleOperad {
    fn enum_rec(&self, arrows: &[Arrow], start: usize, left: usize, stack: &mut Vec<Arrow>, out: &mut Vec<Op>) {
        if !stack.is_empty() {
            out.push(self.op(stack.clone()).expect("enumerated arrows share an endpoint"));
        }
        if left == 0 {
            return;
        }
        let from = if self.symmetric { start } else { 0 };
        for i in from..arrows.len() {
            stack.push(arrows[i]);
            self.enum_rec(arrows, i, left - 1, stack, out);
            stack.pop();
        }
    }
}

/// Giraudo's T Y over a one-object monoid base, as a plain tuple operad.
pub fn giraudo(base: BaseCategory) -> Result<TupleOperad> {
    if base.object_count() != 1 {
        return Err(Error::UnsupportedOperad("Giraudo's construction needs a monoid".into()));
    }
    Ok(TupleOperad::new(&format!("giraudo:{}", base.spec_string()), base, false))
}

/// x ∘ (y¹, …, yᵏ) = (x₁·y¹₁, …, x₁·y¹_{k₁}, x₂·y²₁, …).
pub fn giraudo_full_compose(base: &BaseCategory, x: &[Arrow], inners: &[Vec<Arrow>]) -> Result<Vec<Arrow>> {
    if x.len() != inners.len() {
        return Err(Error::ArityMismatch { expected: x.len(), got: inners.len() });
    }
    let mut out = Vec::new();
    for (xi, y) in x.iter().zip(inners) {
        if y.is_empty() {
            return Err(Error::Invalid("inner tuples are nonempty".into()));
        }
        for yj in y {
            out.push(base.compose(xi, yj)?);
        }
    }
    Ok(out)
}

/// x ∘_i y with `i` one-based.
pub fn giraudo_partial_compose(base: &BaseCategory, x: &[Arrow], i: usize, y: &[Arrow]) -> Result<Vec<Arrow>> {
    if i == 0 || i > x.len() {
        return Err(Error::IndexOutOfRange { index: i, len: x.len() });
    }
    let mut out: Vec<Arrow> = x[..i - 1].to_vec();
    for yj in y {
        out.push(base.compose(&x[i - 1], yj)?);
    }
    out.extend_from_slice(&x[i..]);
    Ok(out)
}

/// Tuple operation: a sequence (nonsymmetric) or multiset (symmetric) of
/// arrows with a common source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TupleOperation {
    Sequence(Vec<Arrow>),
    Multiset(Lambda),
}

impl TupleOperation {
    pub fn arrows(&self) -> Vec<Arrow> {
        match self {
            TupleOperation::Sequence(v) => v.clone(),
            TupleOperation::Multiset(l) => l.cells(),
        }
    }
}

/// Composition in 𝒯 under the opposite convention; multisets plug inners
/// into their cells in canonical order and are re-canonicalized.
pub fn t_operad_compose(base: &BaseCategory, outer: &TupleOperation, inners: &[TupleOperation]) -> Result<TupleOperation> {
    let symmetric = matches!(outer, TupleOperation::Multiset(_));
    if inners.iter().any(|y| matches!(y, TupleOperation::Multiset(_)) != symmetric) {
        return Err(Error::KindMismatch);
    }
    let q = TupleOperad::new("t", base.clone(), symmetric);
    let x = q.op(outer.arrows())?;
    let ys: Vec<Op> = inners.iter().map(|y| q.op(y.arrows())).collect::<Result<_>>()?;
    let r = q.compose(&x, &ys)?;
    Ok(if symmetric {
        TupleOperation::Multiset(Lambda::from_cells(r.arrows))
    } else {
        TupleOperation::Sequence(r.arrows)
    })
}

/// 𝒯_{P→Cat}(Q) for Q = Sym_k or Ass_k, read off from Q's uniform operations:
/// an arrow c→d of size n is the n-ary operation with output c and all inputs d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateCategory {
    pub base: BaseCategory,
    pub arrow_aut: AutFlavor,
}

impl IntermediateCategory {
    pub fn aut(&self, a: &Arrow) -> BigUint {
        match self.arrow_aut {
            AutFlavor::SymmetricInner => factorial(a.label),
            AutFlavor::Exponential => BigUint::one(),
        }
    }
}

pub fn t_intermediate_category(q: &ProfileOperad, check_bound: u64) -> Result<IntermediateCategory> {
    if q.colors == 0 {
        return Err(Error::UnsupportedOperad("operad without colors".into()));
    }
    let base = BaseCategory::colored(q.colors);
    let uniform = |a: &Arrow| q.op(a.src, vec![a.tgt; a.label as usize]);
    // composition of uniform operations is multiplication of sizes
    for a in base.arrows_from(0, check_bound).iter().chain(base.arrows_from(q.colors - 1, check_bound).iter()) {
        for b in base.arrows_from(a.tgt, check_bound) {
            let x = uniform(a);
            let inners = vec![uniform(&b); a.label as usize];
            let composite = q.compose(&x, &inners)?;
            if composite != uniform(&base.compose(a, &b)?) {
                return Err(Error::UnsupportedOperad("uniform operations do not compose by multiplication".into()));
            }
        }
    }
    let arrow_aut = if q.symmetric { AutFlavor::SymmetricInner } else { AutFlavor::Exponential };
    for n in 1..=check_bound {
        let op = uniform(&Arrow::new(n, 0, 0));
        let expect = match arrow_aut {
            AutFlavor::SymmetricInner => factorial(n),
            AutFlavor::Exponential => BigUint::one(),
        };
        if q.aut(&op) != expect {
            return Err(Error::UnsupportedOperad("unexpected automorphisms of uniform operations".into()));
        }
    }
    Ok(IntermediateCategory { base, arrow_aut })
}

/// Tuples of C-morphisms with a common source (opposite convention) or a
/// common target.
pub fn category_to_operad(c: FiniteCategory, symmetric: bool, opposite: bool) -> TupleOperad {
    let name = format!("cat:{}", if c.name.is_empty() { "table" } else { &c.name });
    let mut q = TupleOperad::new(&name, BaseCategory::table(c), symmetric);
    q.opposite = opposite;
    q
}

/// Named instances: sym, ass, symK, assK, giraudo:<base spec>, cat:arrow,
/// cat:codiscrete2 (the two-object groupoid 0⇄1), cat:cyclicN.
pub fn builtin_operad(name: &str) -> Result<Box<dyn OperadInstance + Send + Sync>> {
    let colored = |rest: &str| -> Result<u32> {
        if rest.is_empty() {
            Ok(1)
        } else {
            rest.parse().ok().filter(|&k: &u32| k >= 1).ok_or_else(|| Error::Parse(format!("bad color count in {name:?}")))
        }
    };
    if let Some(spec) = name.strip_prefix("giraudo:") {
        return Ok(Box::new(giraudo(BaseCategory::from_spec(spec)?)?));
    }
    if let Some(which) = name.strip_prefix("cat:") {
        let cat = match which {
            "arrow" => FiniteCategory::arrow(),
            "codiscrete2" => FiniteCategory::codiscrete(2),
            other => match other.strip_prefix("cyclic") {
                Some(n) => FiniteCategory::cyclic(n.parse().map_err(|_| Error::Parse(format!("bad cyclic order {n:?}")))?),
                None => return Err(Error::UnsupportedOperad(format!("unknown builtin category {other:?}"))),
            },
        };
        return Ok(Box::new(category_to_operad(cat, false, true)));
    }
    if let Some(rest) = name.strip_prefix("sym") {
        return Ok(Box::new(ProfileOperad::sym(colored(rest)?)));
    }
    if let Some(rest) = name.strip_prefix("ass") {
        return Ok(Box::new(ProfileOperad::ass(colored(rest)?)));
    }
    Err(Error::UnsupportedOperad(format!("unknown operad {name:?}")))
}

// ---- axiom checks -------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.witness)
    }
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub operad: String,
    pub bound: u64,
    pub operations: usize,
    pub checks: usize,
    pub violation_count: usize,
    /// The first few violations.
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    fn record(&mut self, law: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < 16 {
                self.violations.push(Violation { law, witness: witness() });
            }
        }
    }
}

fn show(op: &Op) -> String {
    if op.arrows.is_empty() {
        format!("{:?}->{}", op.inputs, op.output)
    } else {
        let a: Vec<String> = op.arrows.iter().map(|a| format!("{}->{}:{}", a.src, a.tgt, a.label)).collect();
        format!("({})", a.join(","))
    }
}

/// Exhaustive check of units, sequential and parallel associativity,
/// full-vs-partial consistency, profile coherence and (for symmetric
/// instances) equivariance, on all operations within `bound`.
pub fn axiom_check(q: &dyn OperadInstance, bound: u64) -> AxiomReport {
    let ops = q.enumerate_ops(bound);
    let mut r = AxiomReport { operad: q.name(), bound, operations: ops.len(), ..Default::default() };
    let canon = |o: &Result<Op>| o.as_ref().ok().map(|o| q.canonical(o));
    for x in &ops {
        // units
        let ids: Vec<Op> = x.inputs.iter().map(|&c| q.identity(c)).collect();
        let right = q.compose(x, &ids);
        r.record("right-unit", canon(&right) == Some(q.canonical(x)), || show(x));
        let left = q.compose(&q.identity(x.output), std::slice::from_ref(x));
        r.record("left-unit", canon(&left) == Some(q.canonical(x)), || show(x));
    }
    for x in &ops {
        for (i, &ci) in x.inputs.iter().enumerate() {
            for y in ops.iter().filter(|y| y.output == ci) {
                let xy = q.partial(x, i, y);
                let Ok(xy) = xy else {
                    r.record("composable", false, || format!("{} ∘_{} {}", show(x), i + 1, show(y)));
                    continue;
                };
                // target/source coherence
                let mut expect = x.inputs.clone();
                expect.splice(i..=i, y.inputs.iter().copied());
                r.record("profile", xy.output == x.output && xy.inputs == expect, || {
                    format!("{} ∘_{} {}", show(x), i + 1, show(y))
                });
                for z in &ops {
                    // sequential: (x ∘_i y) ∘_{i+j} z = x ∘_i (y ∘_j z)
                    for (j, &cj) in y.inputs.iter().enumerate() {
                        if z.output != cj {
                            continue;
                        }
                        let lhs = q.partial(&xy, i + j, z);
                        let rhs = q.partial(y, j, z).and_then(|yz| q.partial(x, i, &yz));
                        r.record("sequential-associativity", canon(&lhs) == canon(&rhs) && lhs.is_ok(), || {
                            format!("x={} i={} y={} j={} z={}", show(x), i + 1, show(y), j + 1, show(z))
                        });
                    }
                    // parallel: (x ∘_i y) ∘_{k+|y|-1} z = (x ∘_k z) ∘_i y, i < k
                    for (k, &ck) in x.inputs.iter().enumerate().skip(i + 1) {
                        if z.output != ck {
                            continue;
                        }
                        let lhs = q.partial(&xy, k + y.arity() - 1, z);
                        let rhs = q.partial(x, k, z).and_then(|xz| q.partial(&xz, i, y));
                        r.record("parallel-associativity", canon(&lhs) == canon(&rhs) && lhs.is_ok(), || {
                            format!("x={} i={} y={} k={} z={}", show(x), i + 1, show(y), k + 1, show(z))
                        });
                    }
                }
            }
        }
    }
    // full composition agrees with iterated partial compositions (binary outer)
    for x in ops.iter().filter(|x| x.arity() == 2) {
        for y0 in ops.iter().filter(|y| y.output == x.inputs[0]) {
            for y1 in ops.iter().filter(|y| y.output == x.inputs[1]) {
                let full = q.compose(x, &[y0.clone(), y1.clone()]);
                let iter = q.partial(x, 1, y1).and_then(|t| q.partial(&t, 0, y0));
                r.record("full-vs-partial", canon(&full) == canon(&iter) && full.is_ok(), || {
                    format!("{} ∘ ({}, {})", show(x), show(y0), show(y1))
                });
                if q.symmetric() {
                    // relabeling the inputs of x relabels the composite
                    let swapped = Op {
                        output: x.output,
                        inputs: vec![x.inputs[1], x.inputs[0]],
                        arrows: x.arrows.iter().rev().copied().collect(),
                    };
                    let other = q.compose(&swapped, &[y1.clone(), y0.clone()]);
                    r.record("equivariance", canon(&full) == canon(&other), || {
                        format!("{} ∘ ({}, {})", show(x), show(y0), show(y1))
                    });
                }
            }
        }
    }
    // mismatched colors are rejected
    for x in &ops {
        for (i, &ci) in x.inputs.iter().enumerate() {
            if let Some(y) = ops.iter().find(|y| y.output != ci) {
                r.record("color-check", q.partial(x, i, y).is_err(), || format!("{} ∘_{} {}", show(x), i + 1, show(y)));
            }
        }
    }
    r
}

/// Negative control: an instance whose composition is wrong on one family
/// of inputs (binary outer, binary first inner).
pub struct Corrupted<Q>(pub Q);

impl<Q: OperadInstance> OperadInstance for Corrupted<Q> {
    fn name(&self) -> String {
        format!("corrupted({})", self.0.name())
    }
    fn colors(&self) -> Vec<ObjectId> {
        self.0.colors()
    }
    fn symmetric(&self) -> bool {
        self.0.symmetric()
    }
    fn enumerate_ops(&self, bound: u64) -> Vec<Op> {
        self.0.enumerate_ops(bound)
    }
    fn identity(&self, color: ObjectId) -> Op {
        self.0.identity(color)
    }
    fn compose(&self, outer: &Op, inners: &[Op]) -> Result<Op> {
        let mut r = self.0.compose(outer, inners)?;
        if outer.arity() == 2 && inners[0].arity() == 2 {
            let last = r.arity() - 1;
            r.inputs.push(r.inputs[last]);
            if !r.arrows.is_empty() {
                r.arrows.push(r.arrows[last]);
            }
        }
        Ok(r)
    }
    fn aut(&self, op: &Op) -> BigUint {
        self.0.aut(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn giraudo_examples() {
        let mul = BaseCategory::classical();
        let a = |v: &[u64]| v.iter().map(|&n| Arrow::loop0(n)).collect::<Vec<_>>();
        let r = giraudo_full_compose(&mul, &a(&[5, 9]), &[a(&[2, 3]), a(&[4, 7])]).unwrap();
        assert_eq!(r, a(&[10, 15, 36, 63]));
        let add = BaseCategory::additive();
        assert_eq!(giraudo_full_compose(&add, &a(&[1, 2]), &[a(&[0, 3]), a(&[4])]).unwrap(), a(&[1, 4, 6]));
        assert_eq!(giraudo_partial_compose(&mul, &a(&[2, 3]), 1, &a(&[5, 9])).unwrap(), a(&[10, 18, 3]));
        assert_eq!(giraudo_partial_compose(&add, &a(&[2, 3]), 2, &a(&[5, 9])).unwrap(), a(&[2, 8, 12]));
        assert_eq!(giraudo_partial_compose(&mul, &a(&[2, 3]), 2, &a(&[1])).unwrap(), a(&[2, 3]));
        assert!(giraudo_partial_compose(&mul, &a(&[2, 3]), 3, &a(&[1])).is_err());
        assert!(giraudo_full_compose(&mul, &a(&[2, 3]), &[a(&[1])]).is_err());
        assert_eq!(
            giraudo_full_compose(&mul, &a(&[1, 1, 1]), &[a(&[4]), a(&[5]), a(&[6])]).unwrap(),
            a(&[4, 5, 6])
        );
    }

    #[test]
    fn intermediate_categories() {
        let ass = t_intermediate_category(&ProfileOperad::ass(1), 4).unwrap();
        assert_eq!(ass.base, BaseCategory::classical());
        assert_eq!(ass.aut(&Arrow::loop0(4)), BigUint::one());
        let sym = t_intermediate_category(&ProfileOperad::sym(1), 4).unwrap();
        assert_eq!(sym.aut(&Arrow::loop0(4)), BigUint::from(24u32));
        let ass2 = t_intermediate_category(&ProfileOperad::ass(2), 3).unwrap();
        assert_eq!(ass2.base.object_count(), 2);
        assert_eq!(ass2.base.arrows_from(0, 2).len(), 4);
    }

    #[test]
    fn arrow_category_operations() {
        let q = category_to_operad(FiniteCategory::arrow(), false, true);
        for op in q.enumerate_ops(3) {
            assert!(op.output == 0 || op.inputs.iter().all(|&c| c == 1));
        }
    }
}
