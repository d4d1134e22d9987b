//! Truncated power series without constant term, keyed by Λ-vectors or words,
//! with ordinary and plethystic substitution.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::arith::{format_rational, parse_rational, ratio, Rational};
use crate::base::{Arrow, BaseCategory, ObjectId};
use crate::error::{Error, Result};
use crate::shape::{
    format_shape, parse_arrow, shape_aut_order, verschiebung_shape, AutFlavor, Generator, Lambda, Shape,
    ShapeKind, Word,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Rational,
    CommutativeGeneric,
    NoncommutativeGeneric,
}

impl CoefficientRing {
    pub fn is_commutative(self) -> bool {
        self != CoefficientRing::NoncommutativeGeneric
    }
}

pub type Symbol = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolInfo {
    pub prefix: String,
    pub generator: Generator,
}

/// Opaque indeterminates `prefix_κ`, interned.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    entries: Vec<SymbolInfo>,
    index: HashMap<(String, Generator), Symbol>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, prefix: &str, generator: Generator) -> Symbol {
        let key = (prefix.to_string(), generator);
        if let Some(&s) = self.index.get(&key) {
            return s;
        }
        let s = self.entries.len() as Symbol;
        self.entries.push(SymbolInfo { prefix: key.0.clone(), generator: key.1.clone() });
        self.index.insert(key, s);
        s
    }

    pub fn info(&self, s: Symbol) -> &SymbolInfo {
        &self.entries[s as usize]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Element of ℚ or of a free (non)commutative polynomial ring: monomial → rational.
/// Commutative monomials are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coeff {
    terms: BTreeMap<Vec<Symbol>, Rational>,
}

impl Coeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(q: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(Vec::new(), q);
        c
    }

    pub fn symbol(s: Symbol, q: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(vec![s], q);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Symbol>, Rational> {
        &self.terms
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, mono: Vec<Symbol>, q: Rational) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &Coeff) {
        for (m, q) in &other.terms {
            self.add_term(m.clone(), q.clone());
        }
    }

    pub fn scale(&self, q: &Rational) -> Coeff {
        if q.is_zero() {
            return Coeff::zero();
        }
        Coeff { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * q)).collect() }
    }

    /// `self · other`, concatenating monomials in order (sorted if commutative).
    pub fn mul(&self, other: &Coeff, commutative: bool) -> Coeff {
        let mut out = Coeff::zero();
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                if commutative {
                    m.sort_unstable();
                }
                out.add_term(m, p * q);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    base: BaseCategory,
    color: ObjectId,
    kind: ShapeKind,
    ring: CoefficientRing,
    degree: usize,
    terms: BTreeMap<Shape, Coeff>,
}

impl Series {
    pub fn zero(base: BaseCategory, color: ObjectId, kind: ShapeKind, ring: CoefficientRing, degree: usize) -> Self {
        Series { base, color, kind, ring, degree, terms: BTreeMap::new() }
    }

    /// Rational series from `(key, coefficient)` pairs; keys above `degree` are dropped.
    pub fn rational(
        base: BaseCategory,
        color: ObjectId,
        kind: ShapeKind,
        degree: usize,
        terms: impl IntoIterator<Item = (Shape, Rational)>,
    ) -> Result<Self> {
        let mut s = Self::zero(base, color, kind, CoefficientRing::Rational, degree);
        for (k, q) in terms {
            if k.size() <= degree {
                s.add_term(k, Coeff::constant(q))?;
            }
        }
        Ok(s)
    }

    pub fn base(&self) -> &BaseCategory {
        &self.base
    }
    pub fn color(&self) -> ObjectId {
        self.color
    }
    pub fn kind(&self) -> ShapeKind {
        self.kind
    }
    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn terms(&self) -> &BTreeMap<Shape, Coeff> {
        &self.terms
    }

    pub fn add_term(&mut self, key: Shape, c: Coeff) -> Result<()> {
        if key.kind() != self.kind {
            return Err(Error::KindMismatch);
        }
        let size = key.size();
        if size == 0 {
            return Err(Error::ConstantTerm);
        }
        if size > self.degree {
            return Err(Error::OutOfRange { size, degree: self.degree });
        }
        for a in key.cells() {
            self.base.check(&a)?;
            if a.src != self.color {
                return Err(Error::ColorMismatch(format!(
                    "key arrow {} does not leave color {}",
                    self.base.arrow_text(&a),
                    self.color
                )));
            }
        }
        self.add_unchecked(key, &c);
        Ok(())
    }

    fn add_unchecked(&mut self, key: Shape, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_default();
        slot.add_assign(c);
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, key: &Shape) -> Result<Coeff> {
        let size = key.size();
        if size > self.degree {
            return Err(Error::OutOfRange { size, degree: self.degree });
        }
        Ok(self.terms.get(key).cloned().unwrap_or_default())
    }

    fn same_space(&self, other: &Series) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(format!("{} vs {}", self.base.spec_string(), other.base.spec_string())));
        }
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        if self.ring != other.ring {
            return Err(Error::Invalid("coefficient rings differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.same_space(other)?;
        if self.color != other.color {
            return Err(Error::ColorMismatch("series of different colors".into()));
        }
        let mut out = self.clone();
        out.degree = self.degree.min(other.degree);
        out.terms.retain(|k, _| k.size() <= out.degree);
        for (k, c) in &other.terms {
            if k.size() <= out.degree {
                out.add_unchecked(k.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, q: &Rational) -> Series {
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.scale(q)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out
    }

    /// Left-multiplies every coefficient by `c`.
    fn left_coeff_mul(&self, c: &Coeff) -> Series {
        let comm = self.ring.is_commutative();
        let mut out = self.clone();
        out.terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), c.mul(v, comm)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    /// Truncated product; with a `target`, keys that cannot divide it are dropped.
    pub fn mul(&self, other: &Series, degree: usize, target: Option<&Shape>) -> Result<Series> {
        self.same_space(other)?;
        let comm = self.ring.is_commutative();
        let degree = degree.min(self.degree).min(other.degree);
        let mut out = Series::zero(self.base.clone(), self.color, self.kind, self.ring, degree);
        for (a, p) in &self.terms {
            for (b, q) in &other.terms {
                if a.size() + b.size() > degree {
                    continue;
                }
                let k = a.mul(b)?;
                if target.is_some_and(|t| !k.divides(t)) {
                    continue;
                }
                out.add_unchecked(k, &p.mul(q, comm));
            }
        }
        Ok(out)
    }

    fn truncated(&self, degree: usize, target: Option<&Shape>) -> Series {
        let mut out = self.clone();
        out.degree = degree.min(self.degree);
        out.terms.retain(|k, _| k.size() <= out.degree && target.is_none_or(|t| k.divides(t)));
        out
    }
}

/// `F_m`: every key κ replaced by V^m κ.
pub fn plethystic_shift(f: &Series, m: &Arrow, degree: usize) -> Result<Series> {
    if m.tgt != f.color {
        return Err(Error::ColorMismatch(format!(
            "arrow {} does not end at the series color {}",
            f.base.arrow_text(m),
            f.color
        )));
    }
    let mut out = Series::zero(f.base.clone(), m.src, f.kind, f.ring, degree.min(f.degree));
    for (k, c) in &f.terms {
        if k.size() <= out.degree {
            out.add_unchecked(verschiebung_shape(&f.base, m, k)?, c);
        }
    }
    Ok(out)
}

/// `G(F_1, ..., F_n)`: the variable `vars[i]` of G is replaced by `fs[i]`.
pub fn substitute_ordinary(g: &Series, vars: &[Arrow], fs: &[Series], degree: usize) -> Result<Series> {
    if vars.len() != fs.len() {
        return Err(Error::ArityMismatch { expected: vars.len(), got: fs.len() });
    }
    let Some(first) = fs.first() else {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    };
    for f in fs {
        first.same_space(f)?;
        if f.color != first.color {
            return Err(Error::ColorMismatch("substituted series must share their color".into()));
        }
    }
    if g.kind != first.kind || g.ring != first.ring {
        return Err(Error::KindMismatch);
    }
    let lookup = |a: &Arrow| -> Result<&Series> {
        vars.iter()
            .position(|v| v == a)
            .map(|i| &fs[i])
            .ok_or_else(|| Error::Invalid(format!("variable {} has no substitute", g.base.arrow_text(a))))
    };
    let degree = degree.min(g.degree);
    let mut out = Series::zero(first.base.clone(), first.color, first.kind, first.ring, degree);
    for (key, c) in &g.terms {
        if key.size() > degree {
            continue;
        }
        let mut prod: Option<Series> = None;
        for a in key.cells() {
            let f = lookup(&a)?;
            prod = Some(match prod {
                None => f.truncated(degree, None),
                Some(p) => p.mul(f, degree, None)?,
            });
        }
        if let Some(p) = prod {
            for (k, v) in &p.left_coeff_mul(c).terms {
                out.add_unchecked(k.clone(), v);
            }
        }
    }
    Ok(out)
}

/// `G ⊛ F` on a one-object base.
pub fn substitute_plethystic(g: &Series, f: &Series, degree: usize) -> Result<Series> {
    substitute_plethystic_family(g, std::slice::from_ref(f), degree, None)
}

/// `(G ⊛ F)` for a family `F = (F^c)_c` indexed by color: each variable `x_m`
/// of G becomes `F^{tgt m}_m`. Word keys multiply in letter order, and every
/// coefficient of G multiplies from the left. With a `target`, monomials that
/// cannot divide it are pruned early (valid since products only grow keys).
pub fn substitute_plethystic_family(
    g: &Series,
    family: &[Series],
    degree: usize,
    target: Option<&Shape>,
) -> Result<Series> {
    for f in family {
        g.same_space(f)?;
    }
    let by_color = |c: ObjectId| -> Result<&Series> {
        family
            .iter()
            .find(|f| f.color == c)
            .ok_or_else(|| Error::ColorMismatch(format!("no inner series of color {c}")))
    };
    let degree = degree.min(g.degree);
    let mut shifts: HashMap<Arrow, Series> = HashMap::new();
    let mut prefixes: HashMap<Vec<Arrow>, Series> = HashMap::new();
    let mut out = Series::zero(g.base.clone(), g.color, g.kind, g.ring, degree);
    for (key, c) in &g.terms {
        if key.size() > degree {
            continue;
        }
        let cells = key.cells();
        let mut prod: Option<Series> = None;
        for i in 0..cells.len() {
            let prefix = &cells[..=i];
            if let Some(p) = prefixes.get(prefix) {
                prod = Some(p.clone());
                continue;
            }
            let m = cells[i];
            if let Entry::Vacant(e) = shifts.entry(m) {
                e.insert(plethystic_shift(by_color(m.tgt)?, &m, degree)?.truncated(degree, target));
            }
            let shifted = &shifts[&m];
            let next = match prod {
                None => shifted.clone(),
                Some(p) => p.mul(shifted, degree, target)?,
            };
            prefixes.insert(prefix.to_vec(), next.clone());
            prod = Some(next);
        }
        if let Some(p) = prod {
            for (k, v) in &p.left_coeff_mul(c).terms {
                out.add_unchecked(k.clone(), v);
            }
        }
    }
    Ok(out)
}

/// All shapes over `arrows` (which should share a source) of size 1..=`degree`.
pub fn enumerate_shapes(kind: ShapeKind, arrows: &[Arrow], degree: usize, limit: usize) -> Result<Vec<Shape>> {
    let mut out = Vec::new();
    let mut stack: Vec<Arrow> = Vec::new();
    fn rec(
        kind: ShapeKind,
        arrows: &[Arrow],
        start: usize,
        degree: usize,
        limit: usize,
        stack: &mut Vec<Arrow>,
        out: &mut Vec<Shape>,
    ) -> Result<()> {
        if !stack.is_empty() {
            if out.len() >= limit {
                return Err(Error::LimitExceeded(format!("more than {limit} series keys")));
            }
            out.push(Shape::from_cells(kind, stack.clone())?);
        }
        if stack.len() == degree {
            return Ok(());
        }
        let from = if kind == ShapeKind::Multiset { start } else { 0 };
        for i in from..arrows.len() {
            stack.push(arrows[i]);
            rec(kind, arrows, i, degree, limit, stack, out)?;
            stack.pop();
        }
        Ok(())
    }
    rec(kind, arrows, 0, degree, limit, &mut stack, &mut out)?;
    out.sort();
    Ok(out)
}

pub const GENERIC_KEY_LIMIT: usize = 200_000;

/// `Σ_κ prefix_κ / aut(κ) · x^κ` over all keys built from `arrows` leaving
/// `color`, of size 1..=`degree`. Infinite bases need the explicit arrow list.
#[allow(clippy::too_many_arguments)]
pub fn generic_series(
    prefix: &str,
    base: &BaseCategory,
    color: ObjectId,
    kind: ShapeKind,
    ring: CoefficientRing,
    flavor: AutFlavor,
    degree: usize,
    arrows: &[Arrow],
    table: &mut SymbolTable,
) -> Result<Series> {
    if degree == 0 {
        return Err(Error::Invalid("truncation degree must be at least 1".into()));
    }
    if ring == CoefficientRing::Rational {
        return Err(Error::Invalid("generic series need a generic coefficient ring".into()));
    }
    let mut arrows: Vec<Arrow> = arrows.iter().copied().filter(|a| a.src == color).collect();
    arrows.sort();
    arrows.dedup();
    let mut out = Series::zero(base.clone(), color, kind, ring, degree);
    for key in enumerate_shapes(kind, &arrows, degree, GENERIC_KEY_LIMIT)? {
        let aut = shape_aut_order(base, &key, flavor)?;
        let g = Generator { color, shape: key.clone() };
        let s = table.intern(prefix, g);
        out.add_term(key, Coeff::symbol(s, ratio(&One::one(), &aut)))?;
    }
    Ok(out)
}

/// Generic series over every arrow of grade ≤ `max_grade` leaving `color`.
#[allow(clippy::too_many_arguments)]
pub fn generic_series_bounded(
    prefix: &str,
    base: &BaseCategory,
    color: ObjectId,
    kind: ShapeKind,
    ring: CoefficientRing,
    flavor: AutFlavor,
    degree: usize,
    max_grade: u64,
    table: &mut SymbolTable,
) -> Result<Series> {
    let arrows = base.arrows_from(color, max_grade);
    generic_series(prefix, base, color, kind, ring, flavor, degree, &arrows, table)
}

// ---- text form ----------------------------------------------------------------

fn var_text(base: &BaseCategory, a: &Arrow) -> String {
    if base.object_count() == 1 {
        format!("x{}", a.label)
    } else {
        format!("x{{{}}}", base.arrow_text(a))
    }
}

fn monomial_text(base: &BaseCategory, key: &Shape) -> String {
    let cells = key.cells();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < cells.len() {
        let mut j = i;
        while j < cells.len() && cells[j] == cells[i] {
            j += 1;
        }
        let v = var_text(base, &cells[i]);
        parts.push(if j - i > 1 { format!("{v}^{}", j - i) } else { v });
        i = j;
    }
    parts.join("*")
}

/// Rational series as text, e.g. `x1^2+2*x1*x2+x2^2`; keys by size then cells.
pub fn format_series(f: &Series) -> Result<String> {
    let mut keys: Vec<&Shape> = f.terms.keys().collect();
    keys.sort_by_key(|k| (k.size(), k.cells()));
    let mut out = String::new();
    for k in keys {
        let q = f.terms[k]
            .as_rational()
            .ok_or_else(|| Error::Invalid("only rational series have a text form".into()))?;
        let neg = q < Rational::zero();
        let abs = if neg { -q.clone() } else { q.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !abs.is_one() {
            out.push_str(&format_rational(&abs));
            out.push('*');
        }
        out.push_str(&monomial_text(&f.base, k));
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}

/// Parses `x1+3/2*x2^2-x1*x3`; variables are `x<label>` or `x{s->t:n}`.
pub fn parse_series(base: &BaseCategory, kind: ShapeKind, degree: usize, text: &str) -> Result<Series> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| Error::Parse(format!("bad series {text:?}: {why}"));
    let mut pos = 0;
    let mut terms: Vec<(Vec<Arrow>, Rational)> = Vec::new();
    if chars == ['0'] {
        return Ok(Series::zero(base.clone(), 0, kind, CoefficientRing::Rational, degree));
    }
    if chars.is_empty() {
        return Err(bad("empty"));
    }
    while pos < chars.len() {
        let mut sign = Rational::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if !terms.is_empty() {
            return Err(bad("expected + or -"));
        }
        let mut coeff = sign;
        let start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
            pos += 1;
        }
        let had_number = pos > start;
        if had_number {
            let s: String = chars[start..pos].iter().collect();
            coeff *= parse_rational(&s).ok_or_else(|| bad("bad coefficient"))?;
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
            }
        }
        let mut cells = Vec::new();
        loop {
            if pos >= chars.len() || chars[pos] != 'x' {
                break;
            }
            pos += 1;
            let arrow = if pos < chars.len() && chars[pos] == '{' {
                let close = chars[pos..].iter().position(|&c| c == '}').ok_or_else(|| bad("unclosed {"))? + pos;
                let s: String = chars[pos + 1..close].iter().collect();
                pos = close + 1;
                parse_arrow(base, &s)?
            } else {
                let s0 = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if s0 == pos {
                    return Err(bad("variable needs an index"));
                }
                let s: String = chars[s0..pos].iter().collect();
                parse_arrow(base, &s)?
            };
            let mut exp = 1usize;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let s0 = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let s: String = chars[s0..pos].iter().collect();
                exp = s.parse().map_err(|_| bad("bad exponent"))?;
                if exp > 4096 {
                    return Err(bad("exponent too large"));
                }
            }
            cells.extend(std::iter::repeat_n(arrow, exp));
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                if pos >= chars.len() || chars[pos] != 'x' {
                    return Err(bad("dangling *"));
                }
            }
        }
        if cells.is_empty() {
            if had_number {
                return Err(Error::ConstantTerm);
            }
            return Err(bad("expected a term"));
        }
        terms.push((cells, coeff));
    }
    let color = terms.first().map_or(0, |t| t.0[0].src);
    let mut out = Series::zero(base.clone(), color, kind, CoefficientRing::Rational, degree);
    for (cells, q) in terms {
        let key = match kind {
            ShapeKind::Multiset => Shape::Multiset(Lambda::from_cells(cells)),
            ShapeKind::Word => Shape::Word(Word::new(cells)?),
        };
        if key.size() <= degree {
            out.add_term(key, Coeff::constant(q))?;
        }
    }
    Ok(out)
}

/// Human-readable form of a generic coefficient, e.g. `1/2*g[(2)]*f[(1)]`.
pub fn format_coeff(c: &Coeff, table: &SymbolTable, base: &BaseCategory) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (m, q) in c.terms() {
        let mut s = format_rational(q);
        for sym in m {
            let info = table.info(*sym);
            s.push_str(&format!("*{}[{}]", info.prefix, format_shape(base, &info.generator.shape)));
        }
        parts.push(s);
    }
    parts.join(" + ")
}
