//! Connected iso-classes of 1- and 2-simplices, found by brute force over
//! raw surjection tables.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;

use super::{count_isomorphisms, surjections, Decoration, Level1, Mark, Surjection};
use crate::base::ObjectId;
use crate::error::{Error, Result};
use crate::shape::Generator;

/// Largest bottom size accepted by the enumerators.
pub const MAX_BOTTOM: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub key: Generator,
    pub aut: BigUint,
    pub representative: Level1,
    /// Number of raw tables (surjection plus coloring) in the class.
    pub raw_count: u64,
}

fn colorings(n: usize, colors: u32) -> Vec<Vec<ObjectId>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..colors).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Connected 1-simplices with `t01` of size ≤ `max_bottom`, one entry per
/// class, sorted by key.
pub fn enumerate_ts(max_bottom: u32, dec: Decoration, colors: u32) -> Result<Vec<IsoClass>> {
    dec.check()?;
    if max_bottom > MAX_BOTTOM {
        return Err(Error::LimitExceeded(format!("bottom size {max_bottom} exceeds {MAX_BOTTOM}")));
    }
    if colors == 0 {
        return Err(Error::Invalid("at least one color".into()));
    }
    let mut classes: BTreeMap<Generator, IsoClass> = BTreeMap::new();
    for m in 1..=max_bottom {
        for n in 1..=m {
            let lefts = surjections(m, n);
            for c00 in colorings(n as usize, colors) {
                for c11 in 0..colors {
                    for left in &lefts {
                        let d = Level1::new(left.clone(), Surjection::constant(n), c00.clone(), vec![c11])?;
                        let key = d.connected_key(dec)?;
                        classes
                            .entry(key.clone())
                            .and_modify(|c| c.raw_count += 1)
                            .or_insert_with(|| {
                                let rep = d.normal_form(dec);
                                IsoClass { key, aut: rep.aut(dec), representative: rep, raw_count: 1 }
                            });
                    }
                }
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// A connected 2-simplex class: inner face (forest), outer face (connected),
/// long face (composite), and its automorphism order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level2Class {
    pub inner: Vec<Generator>,
    pub outer: Generator,
    pub composite: Generator,
    pub aut: BigUint,
}

/// Key of the glued simplex: per element of the outer t00 (in its order),
/// its fiber size, color and the inner component plugged into it.
type GlueKey = (ObjectId, Vec<(u64, ObjectId, Generator)>);

/// Connected 2-simplices with `t02` of size ≤ `max_bottom`. Classes of
/// gluings of fixed faces (a, b) are orbits of Aut(a) × Aut(b); the
/// automorphism order of a class is |Aut a|·|Aut b| / |orbit|.
pub fn enumerate_ts_level2(max_bottom: u32, dec: Decoration, colors: u32) -> Result<Vec<Level2Class>> {
    let connected = enumerate_ts(max_bottom, dec, colors)?;
    let mut out = Vec::new();
    for b in &connected {
        let k = b.representative.t00() as usize;
        let b_sizes: Vec<u64> = b.representative.left.fibers().iter().map(|f| f.len() as u64).collect();
        let b_colors = &b.representative.colors00;
        let budget = max_bottom as u64;
        // t02 of a gluing is Σ_j |t01(a_j)|·(size of its slot) ≥ Σ_j |t01(a_j)|
        forests(&connected, k, dec, budget, &mut |forest| {
            let a = glue_forest(forest);
            let aut_a = a.aut(dec);
            let mut orbits: BTreeMap<GlueKey, u64> = BTreeMap::new();
            let mut composite_of: BTreeMap<GlueKey, Generator> = BTreeMap::new();
            for phi in bijections(k, dec.right == Mark::Monotone) {
                if (0..k).any(|j| forest[j].key.color != b_colors[phi[j]]) {
                    continue;
                }
                let bottom: u64 = (0..k).map(|j| forest[j].representative.bottom_size() as u64 * b_sizes[phi[j]]).sum();
                if bottom > budget {
                    continue;
                }
                let mut slots: Vec<(u64, ObjectId, Generator)> = vec![(0, 0, forest[0].key.clone()); k];
                for j in 0..k {
                    slots[phi[j]] = (b_sizes[phi[j]], b_colors[phi[j]], forest[j].key.clone());
                }
                if dec.right == Mark::Plain {
                    slots.sort();
                }
                let key: GlueKey = (b.representative.colors11[0], slots);
                if !composite_of.contains_key(&key) {
                    let c = super::delta::compose(&a, &b.representative, &phi, dec)?;
                    composite_of.insert(key.clone(), c.connected_key(dec)?);
                }
                *orbits.entry(key).or_default() += 1;
            }
            let group = &aut_a * &b.aut;
            for (key, orbit) in orbits {
                let (aut, rem) = group.div_rem(&BigUint::from(orbit));
                if rem != BigUint::default() {
                    return Err(Error::Invalid("orbit size does not divide the group order".into()));
                }
                out.push(Level2Class {
                    inner: a.key(dec),
                    outer: b.key.clone(),
                    composite: composite_of[&key].clone(),
                    aut,
                });
            }
            Ok(())
        })?;
    }
    out.sort_by(|x, y| (&x.composite, &x.outer, &x.inner).cmp(&(&y.composite, &y.outer, &y.inner)));
    Ok(out)
}

/// Multisets (or sequences, for ordered forests) of `k` connected classes
/// with total bottom size ≤ `budget`.
fn forests<'a>(
    classes: &'a [IsoClass],
    k: usize,
    dec: Decoration,
    budget: u64,
    visit: &mut dyn FnMut(&[&'a IsoClass]) -> Result<()>,
) -> Result<()> {
    #[allow(clippy::too_many_arguments)]
    fn rec<'a>(
        classes: &'a [IsoClass],
        k: usize,
        start: usize,
        ordered: bool,
        budget: u64,
        chosen: &mut Vec<&'a IsoClass>,
        visit: &mut dyn FnMut(&[&'a IsoClass]) -> Result<()>,
    ) -> Result<()> {
        if chosen.len() == k {
            return visit(chosen);
        }
        let from = if ordered { 0 } else { start };
        for i in from..classes.len() {
            let w = classes[i].representative.bottom_size() as u64;
            if w + (k - chosen.len() - 1) as u64 > budget {
                continue;
            }
            chosen.push(&classes[i]);
            rec(classes, k, i, ordered, budget - w, chosen, visit)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(classes, k, 0, dec.ordered_forests(), budget, &mut Vec::new(), visit)
}

/// Disjoint union of connected diagrams, components in the given order.
pub(crate) fn glue_forest(parts: &[&IsoClass]) -> Level1 {
    let reps: Vec<&Level1> = parts.iter().map(|c| &c.representative).collect();
    glue(&reps)
}

pub(crate) fn glue(parts: &[&Level1]) -> Level1 {
    let (mut left, mut right, mut c00, mut c11) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for p in parts {
        let off00 = c00.len() as u32;
        let off11 = c11.len() as u32;
        left.extend(p.left.values().iter().map(|v| v + off00));
        right.extend(p.right.values().iter().map(|v| v + off11));
        c00.extend_from_slice(&p.colors00);
        c11.extend_from_slice(&p.colors11);
    }
    let (n, k) = (c00.len() as u32, c11.len() as u32);
    Level1::new(
        Surjection::new(left, n).expect("union of surjections"),
        Surjection::new(right, k).expect("union of surjections"),
        c00,
        c11,
    )
    .expect("consistent union")
}

/// All permutations of `0..k` (only the identity when `identity_only`).
pub(crate) fn bijections(k: usize, identity_only: bool) -> Vec<Vec<usize>> {
    if identity_only {
        return vec![(0..k).collect()];
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    heap_permutations(k, &mut perm, &mut out);
    out
}

fn heap_permutations(n: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n <= 1 {
        out.push(perm.clone());
        return;
    }
    for i in 0..n - 1 {
        heap_permutations(n - 1, perm, out);
        if n.is_multiple_of(2) {
            perm.swap(i, n - 1);
        } else {
            perm.swap(0, n - 1);
        }
    }
    heap_permutations(n - 1, perm, out);
}

/// Brute-force isomorphism test for diagrams of any shape.
pub fn isomorphic(a: &Level1, b: &Level1, dec: Decoration) -> bool {
    count_isomorphisms(a, b, dec) != BigUint::default()
}
