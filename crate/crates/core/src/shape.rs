//! Λ-vectors, words, generators, Verschiebung and automorphism orders, plus
//! their text grammars.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::base::{Arrow, BaseCategory, ObjectId};
use crate::error::{Error, Result};

/// Finite-support multiplicity map on arrows; zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda {
    entries: Vec<(Arrow, u32)>,
}

impl Lambda {
    pub fn empty() -> Self {
        Lambda::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Arrow, u32)>) -> Self {
        let mut entries: Vec<(Arrow, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        entries.sort();
        let mut merged: Vec<(Arrow, u32)> = Vec::with_capacity(entries.len());
        for (a, m) in entries {
            match merged.last_mut() {
                Some((b, n)) if *b == a => *n += m,
                _ => merged.push((a, m)),
            }
        }
        Lambda { entries: merged }
    }

    pub fn from_cells(cells: impl IntoIterator<Item = Arrow>) -> Self {
        Self::from_pairs(cells.into_iter().map(|a| (a, 1)))
    }

    /// Classical vector `(λ1, λ2, ...)` on the one-object base.
    pub fn from_vector(v: &[u32]) -> Self {
        Self::from_pairs(v.iter().enumerate().map(|(i, &m)| (Arrow::loop0(i as u64 + 1), m)))
    }

    pub fn entries(&self) -> &[(Arrow, u32)] {
        &self.entries
    }

    pub fn get(&self, a: &Arrow) -> u32 {
        self.entries
            .binary_search_by(|(b, _)| b.cmp(a))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.entries.iter().map(|e| e.1 as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Arrows repeated by multiplicity, in canonical order.
    pub fn cells(&self) -> Vec<Arrow> {
        self.entries
            .iter()
            .flat_map(|&(a, m)| std::iter::repeat_n(a, m as usize))
            .collect()
    }

    pub fn add(&self, other: &Lambda) -> Lambda {
        Self::from_pairs(self.entries.iter().chain(other.entries.iter()).copied())
    }

    pub fn dominated_by(&self, other: &Lambda) -> bool {
        self.entries.iter().all(|(a, m)| other.get(a) >= *m)
    }
}

pub fn lambda_sum(a: &Lambda, b: &Lambda) -> Lambda {
    a.add(b)
}

/// Nonempty sequence of arrows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Arrow>,
}

impl Word {
    pub fn new(letters: Vec<Arrow>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Invalid("empty word".into()));
        }
        Ok(Word { letters })
    }

    pub fn from_labels(labels: &[u64]) -> Result<Self> {
        Self::new(labels.iter().map(|&l| Arrow::loop0(l)).collect())
    }

    pub fn letters(&self) -> &[Arrow] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Contiguous factor test.
    pub fn is_factor_of(&self, other: &Word) -> bool {
        other.letters.windows(self.letters.len()).any(|w| w == self.letters.as_slice())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Multiset,
    Word,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Multiset(Lambda),
    Word(Word),
}

impl Shape {
    pub fn kind(&self) -> ShapeKind {
        match self {
            Shape::Multiset(_) => ShapeKind::Multiset,
            Shape::Word(_) => ShapeKind::Word,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Multiset(l) => l.size(),
            Shape::Word(w) => w.len(),
        }
    }

    /// Arrows in canonical (multiset) or positional (word) order, with repetition.
    pub fn cells(&self) -> Vec<Arrow> {
        match self {
            Shape::Multiset(l) => l.cells(),
            Shape::Word(w) => w.letters.clone(),
        }
    }

    pub fn from_cells(kind: ShapeKind, cells: Vec<Arrow>) -> Result<Self> {
        Ok(match kind {
            ShapeKind::Multiset => Shape::Multiset(Lambda::from_cells(cells)),
            ShapeKind::Word => Shape::Word(Word::new(cells)?),
        })
    }

    /// Monomial product: pointwise sum or concatenation.
    pub fn mul(&self, other: &Shape) -> Result<Shape> {
        match (self, other) {
            (Shape::Multiset(a), Shape::Multiset(b)) => Ok(Shape::Multiset(a.add(b))),
            (Shape::Word(a), Shape::Word(b)) => Ok(Shape::Word(a.concat(b))),
            _ => Err(Error::KindMismatch),
        }
    }

    /// Could this monomial divide `target` in a product of monomials?
    pub fn divides(&self, target: &Shape) -> bool {
        match (self, target) {
            (Shape::Multiset(a), Shape::Multiset(b)) => a.dominated_by(b),
            (Shape::Word(a), Shape::Word(b)) => a.is_factor_of(b),
            _ => false,
        }
    }

    pub fn source(&self) -> Option<ObjectId> {
        self.cells().first().map(|a| a.src)
    }

    pub fn weight(&self, base: &BaseCategory) -> u64 {
        self.cells().iter().map(|a| base.grade(a)).sum()
    }
}

/// Output color plus a nonempty shape whose arrows all leave that color.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub color: ObjectId,
    pub shape: Shape,
}

impl Generator {
    pub fn new(base: &BaseCategory, shape: Shape) -> Result<Self> {
        let cells = shape.cells();
        let Some(first) = cells.first() else {
            return Err(Error::Invalid("generator shape is empty".into()));
        };
        let color = first.src;
        for a in &cells {
            base.check(a)?;
            if a.src != color {
                return Err(Error::ColorMismatch("generator arrows must share their source".into()));
            }
        }
        Ok(Generator { color, shape })
    }

    /// The class of a single identity arrow: the substitution unit x₁.
    pub fn unit(base: &BaseCategory, color: ObjectId, kind: ShapeKind) -> Self {
        let id = base.identity(color);
        let shape = match kind {
            ShapeKind::Multiset => Shape::Multiset(Lambda::from_cells([id])),
            ShapeKind::Word => Shape::Word(Word { letters: vec![id] }),
        };
        Generator { color, shape }
    }

    pub fn is_unit(&self, base: &BaseCategory) -> bool {
        let cells = self.shape.cells();
        cells.len() == 1 && base.is_identity(&cells[0])
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutFlavor {
    /// Sym inner operations: each arrow contributes size! and equal arrows permute.
    SymmetricInner,
    /// Ass inner operations: only equal arrows permute.
    Exponential,
}

pub fn aut_order(base: &BaseCategory, lambda: &Lambda, flavor: AutFlavor) -> Result<BigUint> {
    let mut acc = BigUint::one();
    for (a, m) in lambda.entries() {
        acc *= factorial(*m as u64);
        if flavor == AutFlavor::SymmetricInner {
            let s = base
                .size(a)
                .ok_or_else(|| Error::UnsupportedFlavor(format!("base {} has no arrow size", base.spec_string())))?;
            acc *= factorial(s).pow(*m);
        }
    }
    Ok(acc)
}

pub fn word_aut_order(base: &BaseCategory, word: &Word, flavor: AutFlavor) -> Result<BigUint> {
    let mut acc = BigUint::one();
    if flavor == AutFlavor::SymmetricInner {
        for a in word.letters() {
            let s = base
                .size(a)
                .ok_or_else(|| Error::UnsupportedFlavor(format!("base {} has no arrow size", base.spec_string())))?;
            acc *= factorial(s);
        }
    }
    Ok(acc)
}

pub fn shape_aut_order(base: &BaseCategory, shape: &Shape, flavor: AutFlavor) -> Result<BigUint> {
    match shape {
        Shape::Multiset(l) => aut_order(base, l, flavor),
        Shape::Word(w) => word_aut_order(base, w, flavor),
    }
}

pub fn verschiebung(base: &BaseCategory, m: &Arrow, lambda: &Lambda) -> Result<Lambda> {
    let mut out = Vec::with_capacity(lambda.entries().len());
    for (k, mult) in lambda.entries() {
        out.push((base.compose(m, k)?, *mult));
    }
    Ok(Lambda::from_pairs(out))
}

pub fn verschiebung_word(base: &BaseCategory, m: &Arrow, word: &Word) -> Result<Word> {
    let letters = word.letters().iter().map(|k| base.compose(m, k)).collect::<Result<Vec<_>>>()?;
    Word::new(letters)
}

pub fn verschiebung_shape(base: &BaseCategory, m: &Arrow, shape: &Shape) -> Result<Shape> {
    Ok(match shape {
        Shape::Multiset(l) => Shape::Multiset(verschiebung(base, m, l)?),
        Shape::Word(w) => Shape::Word(verschiebung_word(base, m, w)?),
    })
}

// ---- text forms -------------------------------------------------------------

pub fn format_lambda(base: &BaseCategory, lambda: &Lambda) -> String {
    if base.uses_vector_notation() {
        let top = lambda.entries().last().map_or(0, |e| e.0.label);
        let parts: Vec<String> = (1..=top).map(|i| lambda.get(&Arrow::loop0(i)).to_string()).collect();
        format!("({})", parts.join(","))
    } else {
        let mut s = String::from("{");
        for (i, (a, m)) in lambda.entries().iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{}:{}", base.arrow_text(a), m);
        }
        s.push('}');
        s
    }
}

pub fn format_word(base: &BaseCategory, word: &Word) -> String {
    word.letters().iter().map(|a| base.arrow_text(a)).collect::<Vec<_>>().join(".")
}

pub fn format_shape(base: &BaseCategory, shape: &Shape) -> String {
    match shape {
        Shape::Multiset(l) => format_lambda(base, l),
        Shape::Word(w) => format_word(base, w),
    }
}

pub fn parse_arrow(base: &BaseCategory, s: &str) -> Result<Arrow> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad arrow {s:?}"));
    let arrow = if let Some((ends, label)) = s.rsplit_once(':') {
        let (src, tgt) = ends.split_once("->").ok_or_else(bad)?;
        Arrow::new(
            label.trim().parse().map_err(|_| bad())?,
            src.trim().parse().map_err(|_| bad())?,
            tgt.trim().parse().map_err(|_| bad())?,
        )
    } else {
        Arrow::loop0(s.parse().map_err(|_| bad())?)
    };
    base.check(&arrow).map_err(|_| Error::Parse(format!("arrow {s:?} is not in base {}", base.spec_string())))?;
    Ok(arrow)
}

pub fn parse_lambda(base: &BaseCategory, s: &str) -> Result<Lambda> {
    let s = s.trim();
    let bad = |why: &str| Error::Parse(format!("bad Λ-vector {s:?}: {why}"));
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        if !base.uses_vector_notation() {
            return Err(bad("vector notation needs a one-object multiplicative base"));
        }
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Lambda::empty());
        }
        let mut pairs = Vec::new();
        for (i, part) in inner.split(',').enumerate() {
            let m: u32 = part.trim().parse().map_err(|_| bad("entries must be naturals"))?;
            if m > 0 {
                let a = Arrow::loop0(i as u64 + 1);
                base.check(&a).map_err(|_| bad("arrow not in base"))?;
                pairs.push((a, m));
            }
        }
        Ok(Lambda::from_pairs(pairs))
    } else if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Lambda::empty());
        }
        let mut pairs: Vec<(Arrow, u32)> = Vec::new();
        for part in inner.split(',') {
            let (a, m) = part.trim().rsplit_once(':').ok_or_else(|| bad("entry needs arrow:mult"))?;
            let m: u32 = m.trim().parse().map_err(|_| bad("multiplicity must be a natural"))?;
            let a = parse_arrow(base, a)?;
            if pairs.iter().any(|p| p.0 == a) {
                return Err(bad("repeated arrow"));
            }
            pairs.push((a, m));
        }
        Ok(Lambda::from_pairs(pairs))
    } else {
        Err(bad("expected (..) or {..}"))
    }
}

pub fn parse_word(base: &BaseCategory, s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    let letters = s.split('.').map(|p| parse_arrow(base, p)).collect::<Result<Vec<_>>>()?;
    Word::new(letters)
}

pub fn parse_shape(base: &BaseCategory, kind: ShapeKind, s: &str) -> Result<Shape> {
    Ok(match kind {
        ShapeKind::Multiset => Shape::Multiset(parse_lambda(base, s)?),
        ShapeKind::Word => Shape::Word(parse_word(base, s)?),
    })
}

pub fn parse_generator(base: &BaseCategory, kind: ShapeKind, s: &str) -> Result<Generator> {
    Generator::new(base, parse_shape(base, kind, s)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classical() -> BaseCategory {
        BaseCategory::classical()
    }

    #[test]
    fn aut_examples() {
        let b = classical();
        let l = Lambda::from_vector(&[1, 2]);
        assert_eq!(aut_order(&b, &l, AutFlavor::Exponential).unwrap(), BigUint::from(2u32));
        assert_eq!(aut_order(&b, &l, AutFlavor::SymmetricInner).unwrap(), BigUint::from(8u32));
        assert_eq!(aut_order(&b, &Lambda::empty(), AutFlavor::SymmetricInner).unwrap(), BigUint::one());
        let w = Word::from_labels(&[3, 2, 4, 2, 2, 4]).unwrap();
        let oracle: u64 = [3u64, 2, 4, 2, 2, 4].iter().map(|&n| (1..=n).product::<u64>()).product();
        assert_eq!(oracle, 27648);
        assert_eq!(word_aut_order(&b, &w, AutFlavor::SymmetricInner).unwrap(), BigUint::from(oracle));
        assert_eq!(word_aut_order(&b, &w, AutFlavor::Exponential).unwrap(), BigUint::one());
        assert!(aut_order(&BaseCategory::additive(), &Lambda::from_cells([Arrow::loop0(1)]), AutFlavor::SymmetricInner)
            .is_err());
    }

    #[test]
    fn verschiebung_examples() {
        let b = classical();
        let l = Lambda::from_vector(&[0, 0, 1]);
        assert_eq!(verschiebung(&b, &Arrow::loop0(2), &l).unwrap(), Lambda::from_vector(&[0, 0, 0, 0, 0, 1]));
        assert_eq!(verschiebung(&b, &b.identity(0), &l).unwrap(), l);
        let add = BaseCategory::additive();
        let l = Lambda::from_cells([Arrow::loop0(1), Arrow::loop0(3)]);
        assert_eq!(
            verschiebung(&add, &Arrow::loop0(2), &l).unwrap(),
            Lambda::from_cells([Arrow::loop0(3), Arrow::loop0(5)])
        );
        let w = Word::from_labels(&[3, 1]).unwrap();
        assert_eq!(verschiebung_word(&b, &Arrow::loop0(2), &w).unwrap(), Word::from_labels(&[6, 2]).unwrap());
        let c = BaseCategory::colored(2);
        let l = Lambda::from_cells([Arrow::new(2, 1, 0)]);
        assert!(matches!(verschiebung(&c, &Arrow::new(2, 0, 0), &l), Err(Error::ColorMismatch(_))));
    }

    #[test]
    fn lambda_sum_example() {
        let s = lambda_sum(
            &lambda_sum(&Lambda::from_vector(&[0, 0, 0, 1]), &Lambda::from_vector(&[0, 0, 0, 0, 0, 1])),
            &Lambda::from_vector(&[0, 0, 0, 0, 0, 1]),
        );
        assert_eq!(s, Lambda::from_vector(&[0, 0, 0, 1, 0, 2]));
    }

    #[test]
    fn text_forms() {
        let b = classical();
        let l = parse_lambda(&b, "(0,0,0,1,0,2,0,0)").unwrap();
        assert_eq!(format_lambda(&b, &l), "(0,0,0,1,0,2)");
        let c = BaseCategory::colored(2);
        let l = parse_lambda(&c, "{0->1:2:1, 0->0:3:2}").unwrap();
        assert_eq!(format_lambda(&c, &l), "{0->1:2:1, 0->0:3:2}");
        assert_eq!(parse_lambda(&c, &format_lambda(&c, &l)).unwrap(), l);
        let w = parse_word(&b, "3.2.4").unwrap();
        assert_eq!(format_word(&b, &w), "3.2.4");
        assert!(parse_word(&b, "").is_err());
        assert!(parse_lambda(&b, "(0,x)").is_err());
        assert!(parse_lambda(&BaseCategory::trivial(), "(0,1)").is_err());
    }
}
