//! Base categories: the one-object monoids (ℕ⁺,×), (ℕ,+), finite tables, and
//! their colored versions. Arrows are read in the opposite convention: a
//! generator of output color `c` is built from arrows with source `c`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ObjectId = u32;

/// Ordered by label first, then (source, target); table bases use the
/// declaration index as label, so their order is declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub label: u64,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

impl Arrow {
    pub const fn new(label: u64, src: ObjectId, tgt: ObjectId) -> Self {
        Arrow { label, src, tgt }
    }

    /// Arrow of a one-object base.
    pub const fn loop0(label: u64) -> Self {
        Arrow { label, src: 0, tgt: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseCategory {
    /// Arrows `(i -> j, n)`, composition multiplies labels. With `unit_only`
    /// every label is 1: the trivial monoid (one object) or the codiscrete
    /// category on `objects` objects.
    Multiplicative { objects: u32, unit_only: bool },
    /// (ℕ,+) as a one-object category; the label 0 is the identity.
    Additive,
    Table(Arc<FiniteCategory>),
}

impl BaseCategory {
    pub fn classical() -> Self {
        BaseCategory::Multiplicative { objects: 1, unit_only: false }
    }

    pub fn colored(k: u32) -> Self {
        BaseCategory::Multiplicative { objects: k, unit_only: false }
    }

    pub fn trivial() -> Self {
        BaseCategory::Multiplicative { objects: 1, unit_only: true }
    }

    pub fn codiscrete(k: u32) -> Self {
        BaseCategory::Multiplicative { objects: k, unit_only: true }
    }

    pub fn additive() -> Self {
        BaseCategory::Additive
    }

    pub fn table(c: FiniteCategory) -> Self {
        BaseCategory::Table(Arc::new(c))
    }

    /// Parses the names used in JSON and on the command line.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let num = |s: &str| -> Result<u32> {
            s.parse::<u32>()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| Error::Parse(format!("bad object count in base spec {spec:?}")))
        };
        match spec {
            "classical" | "mul" => Ok(Self::classical()),
            "trivial" => Ok(Self::trivial()),
            "additive" | "add" => Ok(Self::additive()),
            "z2" => Ok(Self::table(FiniteCategory::cyclic(2))),
            _ => {
                if let Some(k) = spec.strip_prefix("colored:") {
                    Ok(Self::colored(num(k)?))
                } else if let Some(k) = spec.strip_prefix("codiscrete:") {
                    Ok(Self::codiscrete(num(k)?))
                } else if let Some(k) = spec.strip_prefix("cyclic:") {
                    Ok(Self::table(FiniteCategory::cyclic(num(k)?)))
                } else {
                    Err(Error::Parse(format!("unknown base {spec:?}")))
                }
            }
        }
    }

    pub fn spec_string(&self) -> String {
        match self {
            BaseCategory::Multiplicative { objects: 1, unit_only: false } => "classical".into(),
            BaseCategory::Multiplicative { objects: 1, unit_only: true } => "trivial".into(),
            BaseCategory::Multiplicative { objects, unit_only: false } => format!("colored:{objects}"),
            BaseCategory::Multiplicative { objects, unit_only: true } => format!("codiscrete:{objects}"),
            BaseCategory::Additive => "additive".into(),
            BaseCategory::Table(t) => format!("table:{}", t.name),
        }
    }

    pub fn object_count(&self) -> u32 {
        match self {
            BaseCategory::Multiplicative { objects, .. } => *objects,
            BaseCategory::Additive => 1,
            BaseCategory::Table(t) => t.objects.len() as u32,
        }
    }

    pub fn objects(&self) -> Vec<ObjectId> {
        (0..self.object_count()).collect()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BaseCategory::Table(_) | BaseCategory::Multiplicative { unit_only: true, .. })
    }

    /// One object with arrows ≅ ℕ⁺ (or the trivial monoid): vector text form applies.
    pub fn uses_vector_notation(&self) -> bool {
        matches!(self, BaseCategory::Multiplicative { objects: 1, .. })
    }

    pub fn contains(&self, a: &Arrow) -> bool {
        match self {
            BaseCategory::Multiplicative { objects, unit_only } => {
                a.src < *objects && a.tgt < *objects && a.label >= 1 && (!unit_only || a.label == 1)
            }
            BaseCategory::Additive => a.src == 0 && a.tgt == 0,
            BaseCategory::Table(t) => t
                .morphisms
                .get(a.label as usize)
                .is_some_and(|m| m.src == a.src && m.tgt == a.tgt),
        }
    }

    pub fn check(&self, a: &Arrow) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::Invalid(format!("arrow {} not in base {}", self.arrow_text(a), self.spec_string())))
        }
    }

    pub fn identity(&self, obj: ObjectId) -> Arrow {
        match self {
            BaseCategory::Multiplicative { .. } => Arrow::new(1, obj, obj),
            BaseCategory::Additive => Arrow::loop0(0),
            BaseCategory::Table(t) => {
                let i = t.identities[obj as usize];
                Arrow::new(i as u64, obj, obj)
            }
        }
    }

    pub fn is_identity(&self, a: &Arrow) -> bool {
        a.src == a.tgt && *a == self.identity(a.src)
    }

    /// `m` followed by `k` (needs `m.tgt == k.src`); on a one-object monoid this
    /// is the product `m·k`.
    pub fn compose(&self, m: &Arrow, k: &Arrow) -> Result<Arrow> {
        if m.tgt != k.src {
            return Err(Error::ColorMismatch(format!(
                "cannot compose {} with {}",
                self.arrow_text(m),
                self.arrow_text(k)
            )));
        }
        let label = match self {
            BaseCategory::Multiplicative { .. } => m.label.checked_mul(k.label).ok_or(Error::Overflow)?,
            BaseCategory::Additive => m.label.checked_add(k.label).ok_or(Error::Overflow)?,
            BaseCategory::Table(t) => t.compose_index(m.label as usize, k.label as usize)? as u64,
        };
        Ok(Arrow::new(label, m.src, k.tgt))
    }

    /// All pairs `(m, k)` with `compose(m, k) == n`.
    pub fn factorizations(&self, n: &Arrow) -> Vec<(Arrow, Arrow)> {
        let mut out = Vec::new();
        match self {
            BaseCategory::Multiplicative { objects, unit_only } => {
                for j in 0..*objects {
                    if *unit_only {
                        out.push((Arrow::new(1, n.src, j), Arrow::new(1, j, n.tgt)));
                        continue;
                    }
                    for d in divisors(n.label) {
                        out.push((Arrow::new(d, n.src, j), Arrow::new(n.label / d, j, n.tgt)));
                    }
                }
            }
            BaseCategory::Additive => {
                for i in 0..=n.label {
                    out.push((Arrow::loop0(i), Arrow::loop0(n.label - i)));
                }
            }
            BaseCategory::Table(t) => {
                for (i, mi) in t.morphisms.iter().enumerate() {
                    for (j, mj) in t.morphisms.iter().enumerate() {
                        if mi.tgt == mj.src && t.comp[i * t.morphisms.len() + j] == Some(n.label as usize) {
                            out.push((Arrow::new(i as u64, mi.src, mi.tgt), Arrow::new(j as u64, mj.src, mj.tgt)));
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Size used by the symmetric-inner automorphism formula; `None` on sizeless bases.
    pub fn size(&self, a: &Arrow) -> Option<u64> {
        match self {
            BaseCategory::Multiplicative { .. } => Some(a.label),
            _ => None,
        }
    }

    /// Enumeration weight of an arrow: its label on multiplicative bases,
    /// label + 1 on (ℕ,+), and 1 on finite tables.
    pub fn grade(&self, a: &Arrow) -> u64 {
        match self {
            BaseCategory::Multiplicative { .. } => a.label,
            BaseCategory::Additive => a.label + 1,
            BaseCategory::Table(_) => 1,
        }
    }

    /// Arrows with source `obj` and grade ≤ `max_grade`, in sort order.
    pub fn arrows_from(&self, obj: ObjectId, max_grade: u64) -> Vec<Arrow> {
        self.arrows_where(max_grade, |a| a.src == obj)
    }

    /// Arrows with target `obj` and grade ≤ `max_grade`, in sort order.
    pub fn arrows_into(&self, obj: ObjectId, max_grade: u64) -> Vec<Arrow> {
        self.arrows_where(max_grade, |a| a.tgt == obj)
    }

    fn arrows_where(&self, max_grade: u64, keep: impl Fn(&Arrow) -> bool) -> Vec<Arrow> {
        let mut out = Vec::new();
        match self {
            BaseCategory::Multiplicative { objects, unit_only } => {
                let top = if *unit_only { 1.min(max_grade) } else { max_grade };
                for label in 1..=top {
                    for s in 0..*objects {
                        for t in 0..*objects {
                            out.push(Arrow::new(label, s, t));
                        }
                    }
                }
            }
            BaseCategory::Additive => {
                for label in 0..max_grade {
                    out.push(Arrow::loop0(label));
                }
            }
            BaseCategory::Table(t) => {
                if max_grade >= 1 {
                    for (i, m) in t.morphisms.iter().enumerate() {
                        out.push(Arrow::new(i as u64, m.src, m.tgt));
                    }
                }
            }
        }
        out.retain(keep);
        out.sort();
        out
    }

    pub fn arrow_text(&self, a: &Arrow) -> String {
        if self.object_count() == 1 {
            a.label.to_string()
        } else {
            format!("{}->{}:{}", a.src, a.tgt, a.label)
        }
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: ObjectId,
    pub tgt: ObjectId,
}

/// A finite category given by tables. `comp[i * n + j]` is `i` followed by `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    comp: Vec<Option<usize>>,
    pub identities: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct CategoryJson {
    #[serde(default)]
    name: Option<String>,
    objects: Vec<String>,
    morphisms: Vec<MorphismJson>,
    /// Triples `[f, g, h]`: `f` followed by `g` is `h`.
    composition: Vec<[String; 3]>,
    #[serde(default)]
    identities: Option<BTreeMap<String, String>>,
}

impl FiniteCategory {
    /// Builds and validates a category; `triples` are `(f, g, f-then-g)` by index.
    pub fn new(
        name: &str,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        triples: &[(usize, usize, usize)],
        identities: Option<Vec<usize>>,
    ) -> Result<Self> {
        let bad = |s: String| Error::MalformedCategory(s);
        let n = morphisms.len();
        if objects.is_empty() {
            return Err(bad("no objects".into()));
        }
        for m in &morphisms {
            if m.src as usize >= objects.len() || m.tgt as usize >= objects.len() {
                return Err(bad(format!("morphism {} has an unknown endpoint", m.name)));
            }
        }
        let mut comp = vec![None; n * n];
        for &(f, g, h) in triples {
            if f >= n || g >= n || h >= n {
                return Err(bad("composition refers to an unknown morphism".into()));
            }
            let (mf, mg, mh) = (&morphisms[f], &morphisms[g], &morphisms[h]);
            if mf.tgt != mg.src {
                return Err(bad(format!("{} and {} are not composable", mf.name, mg.name)));
            }
            if mh.src != mf.src || mh.tgt != mg.tgt {
                return Err(bad(format!("{} ; {} = {} has wrong endpoints", mf.name, mg.name, mh.name)));
            }
            if comp[f * n + g].is_some_and(|old| old != h) {
                return Err(bad(format!("{} ; {} defined twice", mf.name, mg.name)));
            }
            comp[f * n + g] = Some(h);
        }
        for f in 0..n {
            for g in 0..n {
                if morphisms[f].tgt == morphisms[g].src && comp[f * n + g].is_none() {
                    return Err(bad(format!("{} ; {} is undefined", morphisms[f].name, morphisms[g].name)));
                }
            }
        }
        let is_unit = |e: usize, obj: u32| {
            morphisms[e].src == obj
                && morphisms[e].tgt == obj
                && (0..n).all(|f| {
                    (morphisms[f].src != obj || comp[e * n + f] == Some(f))
                        && (morphisms[f].tgt != obj || comp[f * n + e] == Some(f))
                })
        };
        let identities = match identities {
            Some(ids) => {
                if ids.len() != objects.len() {
                    return Err(bad("one identity per object required".into()));
                }
                for (o, &e) in ids.iter().enumerate() {
                    if e >= n || !is_unit(e, o as u32) {
                        return Err(bad(format!("declared identity of {} is not a unit", objects[o])));
                    }
                }
                ids
            }
            None => {
                let mut ids = Vec::new();
                for o in 0..objects.len() as u32 {
                    let e = (0..n)
                        .find(|&e| is_unit(e, o))
                        .ok_or_else(|| bad(format!("object {} has no identity", objects[o as usize])))?;
                    ids.push(e);
                }
                ids
            }
        };
        for f in 0..n {
            for g in 0..n {
                let Some(fg) = comp[f * n + g] else { continue };
                for h in 0..n {
                    let Some(gh) = comp[g * n + h] else { continue };
                    if comp[fg * n + h] != comp[f * n + gh] {
                        return Err(bad(format!(
                            "associativity fails on ({}, {}, {})",
                            morphisms[f].name, morphisms[g].name, morphisms[h].name
                        )));
                    }
                }
            }
        }
        Ok(FiniteCategory { name: name.to_string(), objects, morphisms, comp, identities })
    }

    pub fn compose_index(&self, f: usize, g: usize) -> Result<usize> {
        let n = self.morphisms.len();
        if f >= n || g >= n {
            return Err(Error::Invalid("unknown morphism".into()));
        }
        self.comp[f * n + g].ok_or_else(|| {
            Error::ColorMismatch(format!("{} ; {} undefined", self.morphisms[f].name, self.morphisms[g].name))
        })
    }

    /// ℤ/n as a one-object category; morphism `i` is the residue `i`.
    pub fn cyclic(n: u32) -> Self {
        let n = n.max(1) as usize;
        let morphisms = (0..n).map(|i| Morphism { name: i.to_string(), src: 0, tgt: 0 }).collect();
        let triples: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n))).collect();
        Self::new(&format!("z{n}"), vec!["*".into()], morphisms, &triples, Some(vec![0]))
            .expect("cyclic group table is a category")
    }

    /// The arrow category {0 -> 1}.
    pub fn arrow() -> Self {
        let m = |name: &str, src, tgt| Morphism { name: name.into(), src, tgt };
        let morphisms = vec![m("id0", 0, 0), m("id1", 1, 1), m("a", 0, 1)];
        let triples = [(0, 0, 0), (1, 1, 1), (0, 2, 2), (2, 1, 2)];
        Self::new("arrow", vec!["0".into(), "1".into()], morphisms, &triples, None).expect("arrow category")
    }

    /// k objects with exactly one morphism between any ordered pair.
    pub fn codiscrete(k: u32) -> Self {
        let k = k.max(1) as usize;
        let idx = |i: usize, j: usize| i * k + j;
        let mut morphisms = Vec::new();
        for i in 0..k {
            for j in 0..k {
                morphisms.push(Morphism { name: format!("{i}{j}"), src: i as u32, tgt: j as u32 });
            }
        }
        let mut triples = Vec::new();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    triples.push((idx(i, j), idx(j, l), idx(i, l)));
                }
            }
        }
        let objects = (0..k).map(|i| i.to_string()).collect();
        Self::new(&format!("codiscrete{k}"), objects, morphisms, &triples, None).expect("codiscrete category")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CategoryJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = |name: &str| -> Result<u32> {
            raw.objects
                .iter()
                .position(|o| o == name)
                .map(|i| i as u32)
                .ok_or_else(|| Error::MalformedCategory(format!("unknown object {name:?}")))
        };
        let mut morphisms = Vec::new();
        for m in &raw.morphisms {
            if morphisms.iter().any(|x: &Morphism| x.name == m.name) {
                return Err(Error::MalformedCategory(format!("duplicate morphism {:?}", m.name)));
            }
            morphisms.push(Morphism { name: m.name.clone(), src: obj(&m.source)?, tgt: obj(&m.target)? });
        }
        let mor = |name: &str| -> Result<usize> {
            morphisms
                .iter()
                .position(|m| m.name == name)
                .ok_or_else(|| Error::MalformedCategory(format!("unknown morphism {name:?}")))
        };
        let mut triples = Vec::new();
        for [f, g, h] in &raw.composition {
            triples.push((mor(f)?, mor(g)?, mor(h)?));
        }
        let identities = match &raw.identities {
            None => None,
            Some(map) => {
                let mut ids = vec![usize::MAX; raw.objects.len()];
                for (o, m) in map {
                    ids[obj(o)? as usize] = mor(m)?;
                }
                if ids.contains(&usize::MAX) {
                    return Err(Error::MalformedCategory("missing identity".into()));
                }
                Some(ids)
            }
        };
        let name = raw.name.clone().unwrap_or_else(|| "table".into());
        Self::new(&name, raw.objects.clone(), morphisms, &triples, identities)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let n = self.morphisms.len();
        let mut composition = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if let Some(h) = self.comp[f * n + g] {
                    composition.push([
                        self.morphisms[f].name.clone(),
                        self.morphisms[g].name.clone(),
                        self.morphisms[h].name.clone(),
                    ]);
                }
            }
        }
        let raw = CategoryJson {
            name: Some(self.name.clone()),
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|m| MorphismJson {
                    name: m.name.clone(),
                    source: self.objects[m.src as usize].clone(),
                    target: self.objects[m.tgt as usize].clone(),
                })
                .collect(),
            composition,
            identities: Some(
                self.identities
                    .iter()
                    .enumerate()
                    .map(|(o, &e)| (self.objects[o].clone(), self.morphisms[e].name.clone()))
                    .collect(),
            ),
        };
        serde_json::to_value(raw).expect("category serializes")
    }
}
