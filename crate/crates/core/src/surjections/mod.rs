//! Finite-set surjection diagrams: monotone pullback squares, decorated
//! 1-simplices with their normal form and brute-force automorphism counts,
//! and the diagram-side comultiplication.

mod delta;
mod enumerate;
mod forest;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::base::{Arrow, BaseCategory, ObjectId};
use crate::error::{Error, Result};
use crate::incidence::{Coefficients, Flavor};
use crate::shape::{AutFlavor, Generator, Lambda, Shape, ShapeKind, Word};

pub use delta::{ts_delta, ts_delta_via_level2};
pub use enumerate::{enumerate_ts, enumerate_ts_level2, isomorphic, IsoClass, Level2Class, MAX_BOTTOM};
pub use forest::{forest_aut_order, parse_forest, ForestTree};

/// A surjection `[n] ↠ [k]` on zero-based ordinals, as a value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surjection {
    values: Vec<u32>,
    codomain: u32,
}

impl Surjection {
    pub fn new(values: Vec<u32>, codomain: u32) -> Result<Self> {
        let mut hit = vec![false; codomain as usize];
        for &v in &values {
            let slot = hit
                .get_mut(v as usize)
                .ok_or_else(|| Error::NotSurjective(format!("value {v} outside codomain of size {codomain}")))?;
            *slot = true;
        }
        if let Some(miss) = hit.iter().position(|h| !h) {
            return Err(Error::NotSurjective(format!("{miss} has an empty fiber")));
        }
        Ok(Surjection { values, codomain })
    }

    pub fn identity(n: u32) -> Self {
        Surjection { values: (0..n).collect(), codomain: n }
    }

    pub fn constant(n: u32) -> Self {
        Surjection { values: vec![0; n as usize], codomain: u32::from(n > 0) }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn domain(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn codomain(&self) -> u32 {
        self.codomain
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.values[x as usize]
    }

    /// Fibers in increasing order of their elements.
    pub fn fibers(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.codomain as usize];
        for (x, &v) in self.values.iter().enumerate() {
            out[v as usize].push(x as u32);
        }
        out
    }

    pub fn is_monotone(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Surjection) -> Result<Surjection> {
        if self.codomain != next.domain() {
            return Err(Error::Invalid("surjections do not compose".into()));
        }
        Ok(Surjection { values: self.values.iter().map(|&v| next.apply(v)).collect(), codomain: next.codomain })
    }
}

/// A commutative square `apex → [l]` (p), `apex → [n]` (q) over `g`, `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub p: Surjection,
    pub q: Surjection,
}

impl Square {
    pub fn apex(&self) -> u32 {
        self.p.domain()
    }
}

/// The unique monotone pullback of `[l] –g→ [k] ←f– [n]`: pairs (a, b) with
/// g(a) = f(b), ordered lexicographically.
pub fn monotone_pullback(g: &Surjection, f: &Surjection) -> Result<Square> {
    if g.codomain != f.codomain {
        return Err(Error::Invalid("cospan legs have different codomains".into()));
    }
    let f_fibers = f.fibers();
    let (mut p, mut q) = (Vec::new(), Vec::new());
    for (a, &ga) in g.values.iter().enumerate() {
        for &b in &f_fibers[ga as usize] {
            p.push(a as u32);
            q.push(b);
        }
    }
    Ok(Square { p: Surjection::new(p, g.domain())?, q: Surjection::new(q, f.domain())? })
}

/// The square is a set pullback of (g, f) and is monotone: p monotone and q
/// monotone on each fiber of p.
pub fn is_monotone_square(sq: &Square, g: &Surjection, f: &Surjection) -> bool {
    if sq.p.codomain != g.domain() || sq.q.codomain != f.domain() || sq.p.domain() != sq.q.domain() {
        return false;
    }
    let mut pairs: Vec<(u32, u32)> = sq.p.values.iter().zip(&sq.q.values).map(|(&a, &b)| (a, b)).collect();
    if pairs.iter().any(|&(a, b)| g.apply(a) != f.apply(b)) {
        return false;
    }
    let expected: usize = f.fibers().iter().zip(g.fibers()).map(|(x, y)| x.len() * y.len()).sum();
    let ordered = pairs.windows(2).all(|w| w[0] < w[1]);
    pairs.sort();
    pairs.dedup();
    ordered && pairs.len() == expected
}

// ---- decorations ------------------------------------------------------------------

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    #[default]
    Plain,
    /// Fibers carry linear orders.
    Linear,
    /// Domain and codomain are ordinals and the map is monotone.
    Monotone,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    /// t01 ↠ t00
    pub left: Mark,
    /// t00 ↠ t11
    pub right: Mark,
}

impl Decoration {
    pub const PLAIN: Decoration = Decoration { left: Mark::Plain, right: Mark::Plain };

    /// The six supported combinations.
    pub fn all() -> [Decoration; 6] {
        use Mark::*;
        [
            Decoration { left: Plain, right: Plain },
            Decoration { left: Linear, right: Plain },
            Decoration { left: Linear, right: Linear },
            Decoration { left: Plain, right: Linear },
            Decoration { left: Plain, right: Monotone },
            Decoration { left: Monotone, right: Monotone },
        ]
    }

    pub fn check(&self) -> Result<()> {
        if Self::all().contains(self) {
            Ok(())
        } else {
            Err(Error::UnsupportedFlavor(format!("unsupported decoration {self}")))
        }
    }

    pub fn ordered_forests(&self) -> bool {
        self.right == Mark::Monotone
    }

    pub fn kind(&self) -> ShapeKind {
        if self.right == Mark::Plain {
            ShapeKind::Multiset
        } else {
            ShapeKind::Word
        }
    }

    pub fn inner_aut(&self) -> AutFlavor {
        if self.left == Mark::Plain {
            AutFlavor::SymmetricInner
        } else {
            AutFlavor::Exponential
        }
    }

    /// The bialgebra flavor whose generators are the connected classes.
    pub fn flavor(&self, colors: u32) -> Result<Flavor> {
        self.check()?;
        if colors == 0 {
            return Err(Error::Invalid("at least one color".into()));
        }
        let coefficients = if self.ordered_forests() { Coefficients::Noncommutative } else { Coefficients::Commutative };
        for f in Flavor::all() {
            if f.base == base_for(colors)
                && f.inner_aut == self.inner_aut()
                && f.variables == self.kind()
                && f.coefficients == coefficients
            {
                return Ok(f);
            }
        }
        Flavor::new(&format!("ts:{self}:colors={colors}"), "TS", base_for(colors), self.inner_aut(), self.kind(), coefficients)
    }
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = |m: Mark| match m {
            Mark::Plain => "plain",
            Mark::Linear => "linear",
            Mark::Monotone => "monotone",
        };
        write!(f, "left={},right={}", m(self.left), m(self.right))
    }
}

impl FromStr for Decoration {
    type Err = Error;

    /// `left=linear,right=monotone`; omitted sides are plain; `plain` alone is allowed.
    fn from_str(s: &str) -> Result<Self> {
        let mut d = Decoration::PLAIN;
        let s = s.trim();
        if s.is_empty() || s == "plain" {
            return Ok(d);
        }
        for part in s.split(',') {
            let (side, mark) =
                part.split_once('=').ok_or_else(|| Error::Parse(format!("expected side=mark, got {part:?}")))?;
            let mark = match mark.trim() {
                "plain" => Mark::Plain,
                "linear" => Mark::Linear,
                "monotone" => Mark::Monotone,
                other => return Err(Error::Parse(format!("unknown marking {other:?}"))),
            };
            match side.trim() {
                "left" => d.left = mark,
                "right" => d.right = mark,
                other => return Err(Error::Parse(format!("unknown side {other:?}"))),
            }
        }
        // linear t01 fibers over a totally ordered t00 are a monotone t01
        if d.left == Mark::Linear && d.right == Mark::Monotone {
            d.left = Mark::Monotone;
        }
        d.check()?;
        Ok(d)
    }
}

pub(crate) fn base_for(colors: u32) -> BaseCategory {
    if colors == 1 {
        BaseCategory::classical()
    } else {
        BaseCategory::colored(colors)
    }
}

// ---- 1-simplices ------------------------------------------------------------------

/// `t01 ↠ t00 ↠ t11` with colors on t00 and t11 (t01 inherits the color of
/// its image in t11). Orders, where a decoration asks for them, are the
/// index orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Level1 {
    pub left: Surjection,
    pub right: Surjection,
    pub colors00: Vec<ObjectId>,
    pub colors11: Vec<ObjectId>,
}

#[derive(Serialize, Deserialize)]
struct Level1Json {
    left: Vec<u32>,
    right: Vec<u32>,
    #[serde(default)]
    colors00: Option<Vec<ObjectId>>,
    #[serde(default)]
    colors11: Option<Vec<ObjectId>>,
}

impl Level1 {
    pub fn new(left: Surjection, right: Surjection, colors00: Vec<ObjectId>, colors11: Vec<ObjectId>) -> Result<Self> {
        if left.codomain() != right.domain() {
            return Err(Error::Invalid("left map must land in the domain of the right map".into()));
        }
        if colors00.len() != right.domain() as usize || colors11.len() != right.codomain() as usize {
            return Err(Error::Invalid("one color per element of t00 and t11".into()));
        }
        Ok(Level1 { left, right, colors00, colors11 })
    }

    pub fn uncolored(left: Surjection, right: Surjection) -> Result<Self> {
        let (n, k) = (right.domain() as usize, right.codomain() as usize);
        Self::new(left, right, vec![0; n], vec![0; k])
    }

    /// The connected diagram of a class: one t00 element per cell, in cell order.
    pub fn from_generator(g: &Generator) -> Result<Self> {
        let cells = g.shape.cells();
        let mut left = Vec::new();
        for (x, a) in cells.iter().enumerate() {
            left.extend(std::iter::repeat_n(x as u32, a.label as usize));
        }
        let n = cells.len() as u32;
        Level1::new(Surjection::new(left, n)?, Surjection::constant(n), cells.iter().map(|a| a.tgt).collect(), vec![g.color])
    }

    pub fn t01(&self) -> u32 {
        self.left.domain()
    }

    pub fn t00(&self) -> u32 {
        self.right.domain()
    }

    pub fn t11(&self) -> u32 {
        self.right.codomain()
    }

    /// Size of t01.
    pub fn bottom_size(&self) -> u32 {
        self.t01()
    }

    pub fn is_connected(&self) -> bool {
        self.t11() == 1
    }

    pub fn max_color(&self) -> ObjectId {
        self.colors00.iter().chain(&self.colors11).copied().max().unwrap_or(0)
    }

    fn arrow_of(&self, x: u32, sizes: &[usize]) -> Arrow {
        Arrow::new(sizes[x as usize] as u64, self.colors11[self.right.apply(x) as usize], self.colors00[x as usize])
    }

    /// One generator per element of t11, in t11 order; words follow the
    /// order of t00.
    pub fn components(&self, dec: Decoration) -> Vec<Generator> {
        let sizes: Vec<usize> = self.left.fibers().iter().map(Vec::len).collect();
        self.right
            .fibers()
            .iter()
            .enumerate()
            .map(|(y, fib)| {
                let arrows: Vec<Arrow> = fib.iter().map(|&x| self.arrow_of(x, &sizes)).collect();
                let shape = match dec.kind() {
                    ShapeKind::Multiset => Shape::Multiset(Lambda::from_cells(arrows)),
                    ShapeKind::Word => Shape::Word(Word::new(arrows).expect("fibers of a surjection are nonempty")),
                };
                Generator { color: self.colors11[y], shape }
            })
            .collect()
    }

    /// Isomorphism-class key: components, sorted unless forests are ordered.
    pub fn key(&self, dec: Decoration) -> Vec<Generator> {
        let mut c = self.components(dec);
        if !dec.ordered_forests() {
            c.sort();
        }
        c
    }

    pub fn connected_key(&self, dec: Decoration) -> Result<Generator> {
        if !self.is_connected() {
            return Err(Error::Invalid("diagram is not connected".into()));
        }
        Ok(self.components(dec).remove(0))
    }

    /// Monotone normal form: t11 sorted by component class (unless ordered),
    /// t00 grouped by t11 and sorted within fibers (unless ordered), t01
    /// grouped by t00 in its existing order.
    pub fn normal_form(&self, dec: Decoration) -> Level1 {
        let sizes: Vec<usize> = self.left.fibers().iter().map(Vec::len).collect();
        let comps = self.components(dec);
        let mut t11: Vec<u32> = (0..self.t11()).collect();
        if !dec.ordered_forests() {
            t11.sort_by(|a, b| (&comps[*a as usize], a).cmp(&(&comps[*b as usize], b)));
        }
        let right_fibers = self.right.fibers();
        let left_fibers = self.left.fibers();
        let (mut left, mut right, mut c00, mut c11) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (new_y, &y) in t11.iter().enumerate() {
            c11.push(self.colors11[y as usize]);
            let mut fib = right_fibers[y as usize].clone();
            if dec.right == Mark::Plain {
                fib.sort_by_key(|&x| (self.arrow_of(x, &sizes), x));
            }
            for x in fib {
                let new_x = c00.len() as u32;
                c00.push(self.colors00[x as usize]);
                right.push(new_y as u32);
                left.extend(std::iter::repeat_n(new_x, left_fibers[x as usize].len()));
            }
        }
        let (n, k) = (c00.len() as u32, c11.len() as u32);
        Level1 {
            left: Surjection { values: left, codomain: n },
            right: Surjection { values: right, codomain: k },
            colors00: c00,
            colors11: c11,
        }
    }

    pub fn is_monotone_form(&self) -> bool {
        self.left.is_monotone() && self.right.is_monotone()
    }

    pub fn aut(&self, dec: Decoration) -> BigUint {
        count_isomorphisms(self, self, dec)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(Level1Json {
            left: self.left.values.clone(),
            right: self.right.values.clone(),
            colors00: Some(self.colors00.clone()),
            colors11: Some(self.colors11.clone()),
        })
        .expect("plain data serializes")
    }

    /// `{"left":[…],"right":[…],"colors00"?:[…],"colors11"?:[…]}`; codomains are
    /// inferred as 1 + the largest value.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: Level1Json = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let cod = |v: &[u32]| v.iter().max().map_or(0, |m| m + 1);
        let left = Surjection::new(j.left.clone(), cod(&j.left))?;
        let right = Surjection::new(j.right.clone(), cod(&j.right))?;
        let n = right.domain() as usize;
        let k = right.codomain() as usize;
        if left.codomain() != right.domain() {
            return Err(Error::Invalid("left map must land in the domain of the right map".into()));
        }
        if n == 0 {
            return Err(Error::Invalid("empty diagram".into()));
        }
        Level1::new(left, right, j.colors00.unwrap_or(vec![0; n]), j.colors11.unwrap_or(vec![0; k]))
    }
}

/// Number of decoration-respecting levelwise bijections `a → b`, by
/// backtracking over t00 (which determines t11) and counting t01 choices.
pub fn count_isomorphisms(a: &Level1, b: &Level1, dec: Decoration) -> BigUint {
    if a.t01() != b.t01() || a.t00() != b.t00() || a.t11() != b.t11() {
        return BigUint::default();
    }
    let sa: Vec<usize> = a.left.fibers().iter().map(Vec::len).collect();
    let sb: Vec<usize> = b.left.fibers().iter().map(Vec::len).collect();
    let n = a.t00() as usize;
    let mut pi00: Vec<Option<u32>> = vec![None; n];
    let mut used = vec![false; n];
    let mut pi11: Vec<Option<u32>> = vec![None; a.t11() as usize];
    let mut count = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        x: usize,
        a: &Level1,
        b: &Level1,
        dec: Decoration,
        sa: &[usize],
        sb: &[usize],
        pi00: &mut Vec<Option<u32>>,
        used: &mut Vec<bool>,
        pi11: &mut Vec<Option<u32>>,
        count: &mut u64,
    ) {
        if x == pi00.len() {
            *count += 1;
            return;
        }
        let ya = a.right.apply(x as u32) as usize;
        for xb in 0..pi00.len() {
            if used[xb] || sa[x] != sb[xb] || a.colors00[x] != b.colors00[xb] {
                continue;
            }
            let yb = b.right.apply(xb as u32);
            if a.colors11[ya] != b.colors11[yb as usize] {
                continue;
            }
            let fresh = match pi11[ya] {
                Some(t) if t != yb => continue,
                Some(_) => false,
                None => {
                    if pi11.contains(&Some(yb)) {
                        continue;
                    }
                    true
                }
            };
            // order constraints: t00 is visited in increasing order
            let order_ok = match dec.right {
                Mark::Plain => true,
                Mark::Linear => (0..x).filter(|&x0| a.right.apply(x0 as u32) as usize == ya).all(|x0| pi00[x0].unwrap() < xb as u32),
                Mark::Monotone => (0..x).all(|x0| pi00[x0].unwrap() < xb as u32),
            };
            if !order_ok {
                continue;
            }
            if dec.right == Mark::Monotone && fresh && pi11.iter().flatten().any(|&t| t > yb) {
                continue;
            }
            pi00[x] = Some(xb as u32);
            used[xb] = true;
            if fresh {
                pi11[ya] = Some(yb);
            }
            rec(x + 1, a, b, dec, sa, sb, pi00, used, pi11, count);
            pi00[x] = None;
            used[xb] = false;
            if fresh {
                pi11[ya] = None;
            }
        }
    }
    rec(0, a, b, dec, &sa, &sb, &mut pi00, &mut used, &mut pi11, &mut count);
    let mut total = BigUint::from(count);
    if dec.left == Mark::Plain {
        for s in &sa {
            total *= factorial(*s as u64);
        }
    }
    total
}

/// All surjections `[m] ↠ [n]`.
pub fn surjections(m: u32, n: u32) -> Vec<Surjection> {
    let mut out = Vec::new();
    if n == 0 || n > m {
        return out;
    }
    let mut v = vec![0u32; m as usize];
    loop {
        if let Ok(s) = Surjection::new(v.clone(), n) {
            out.push(s);
        }
        let mut t = v.len();
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            v[t] += 1;
            if v[t] < n {
                break;
            }
            v[t] = 0;
        }
    }
}
