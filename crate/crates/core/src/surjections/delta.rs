//! Comultiplication on connected diagrams: sum over 2-simplices whose long
//! edge is the given diagram, weighted by automorphism counts.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;

use super::enumerate::{bijections, glue};
use super::{enumerate_ts_level2, monotone_pullback, Decoration, Level1, Mark, Surjection};
use crate::arith::{ratio, Rational};
use crate::base::ObjectId;
use crate::error::{Error, Result};
use crate::incidence::decompose::advance;
use crate::incidence::{BasisMonomial, Flavor, TensorElement};
use crate::shape::Generator;

/// Long edge of the 2-simplex obtained by plugging the forest `a` into the
/// connected `b`, component `j` of `a` going to element `phi[j]` of b's t00.
/// The new bottom is the monotone pullback of `b.left` along
/// `phi ∘ a.right ∘ a.left`.
pub(crate) fn compose(a: &Level1, b: &Level1, phi: &[usize], dec: Decoration) -> Result<Level1> {
    if !b.is_connected() || phi.len() != a.t11() as usize || b.t00() != a.t11() {
        return Err(Error::Invalid("gluing needs a connected outer face with one slot per inner component".into()));
    }
    let k = a.t11();
    let slot = Surjection::new(phi.iter().map(|&p| p as u32).collect(), k)?;
    let f = a.left.then(&a.right)?.then(&slot)?;
    let sq = monotone_pullback(&b.left, &f)?;
    // t00 of the composite is t00(a); reorder by (slot, index) when t00 is ordered
    let mut order: Vec<u32> = (0..a.t00()).collect();
    if dec.right != Mark::Plain {
        order.sort_by_key(|&x| (phi[a.right.apply(x) as usize], x));
    }
    let mut rank = vec![0u32; order.len()];
    for (i, &x) in order.iter().enumerate() {
        rank[x as usize] = i as u32;
    }
    let mut bottom: Vec<(u32, u32)> = sq.q.values().iter().enumerate().map(|(i, &q)| (rank[a.left.apply(q) as usize], i as u32)).collect();
    bottom.sort();
    let left = Surjection::new(bottom.iter().map(|&(x, _)| x).collect(), a.t00())?;
    let colors00 = order.iter().map(|&x| a.colors00[x as usize]).collect();
    let d = Level1::new(left, Surjection::constant(a.t00()), colors00, b.colors11.clone())?;
    Ok(d.normal_form(dec))
}

/// Ways to cut the cells of σ into the components of an inner forest: set
/// partitions, or contiguous blocks when t00 is ordered.
fn blocks(n: usize, ordered: bool) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if ordered {
        for mask in 0u32..(1 << n.saturating_sub(1)) {
            let mut parts = vec![vec![0]];
            for i in 1..n {
                if mask & (1 << (i - 1)) != 0 {
                    parts.push(Vec::new());
                }
                parts.last_mut().unwrap().push(i);
            }
            out.push(parts);
        }
        return out;
    }
    // restricted growth strings
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut parts = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            parts[b].push(i);
        }
        out.push(parts);
        // next string
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in &mut rgs[i + 1..] {
                    *r = 0;
                }
                break;
            }
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Δ of the connected class `sigma` computed on diagrams: for every pair of
/// faces (a, b) admitting a gluing with long edge ≅ σ, the coefficient of
/// a ⊗ b is aut(σ)·N / (aut(a)·aut(b)), N the number of gluings landing in σ.
pub fn ts_delta(sigma: &Generator, dec: Decoration, colors: u32) -> Result<TensorElement> {
    let flavor = dec.flavor(colors)?;
    flavor.validate(sigma)?;
    if sigma.shape.kind() != dec.kind() {
        return Err(Error::Invalid("shape kind does not match the decoration".into()));
    }
    let s = Level1::from_generator(sigma)?.normal_form(dec);
    let key = s.connected_key(dec)?;
    let aut_s = s.aut(dec);
    let sizes: Vec<u64> = s.left.fibers().iter().map(|f| f.len() as u64).collect();
    let n = s.t00() as usize;

    let mut pairs: BTreeMap<(Vec<Generator>, Generator), (Level1, Level1)> = BTreeMap::new();
    for parts in blocks(n, dec.right != Mark::Plain) {
        // per block: (slot size d, slot color e)
        let options: Vec<Vec<(u64, ObjectId)>> = parts
            .iter()
            .map(|p| {
                let g = p.iter().fold(0u64, |g, &x| g.gcd(&sizes[x]));
                divisors(g).into_iter().flat_map(|d| (0..colors).map(move |e| (d, e))).collect()
            })
            .collect();
        let mut idx = vec![0usize; parts.len()];
        loop {
            let mut comps = Vec::new();
            let (mut b_left, mut b_c00) = (Vec::new(), Vec::new());
            for (j, p) in parts.iter().enumerate() {
                let (d, e) = options[j][idx[j]];
                let mut left = Vec::new();
                for (y, &x) in p.iter().enumerate() {
                    left.extend(std::iter::repeat_n(y as u32, (sizes[x] / d) as usize));
                }
                let m = p.len() as u32;
                comps.push(Level1::new(
                    Surjection::new(left, m)?,
                    Surjection::constant(m),
                    p.iter().map(|&x| s.colors00[x]).collect(),
                    vec![e],
                )?);
                b_left.extend(std::iter::repeat_n(j as u32, d as usize));
                b_c00.push(e);
            }
            let k = parts.len() as u32;
            let a = glue(&comps.iter().collect::<Vec<_>>()).normal_form(dec);
            let b = Level1::new(Surjection::new(b_left, k)?, Surjection::constant(k), b_c00, s.colors11.clone())?.normal_form(dec);
            pairs.entry((a.key(dec), b.connected_key(dec)?)).or_insert((a, b));
            if !advance(&mut idx, |t| options[t].len()) {
                break;
            }
        }
    }

    let mut out = TensorElement::new();
    for ((a_key, b_key), (a, b)) in pairs {
        let k = a.t11() as usize;
        let mut count = 0u64;
        for phi in bijections(k, dec.right == Mark::Monotone) {
            if (0..k).any(|j| a.colors11[j] != b.colors00[phi[j]]) {
                continue;
            }
            if compose(&a, &b, &phi, dec)?.connected_key(dec)? == key {
                count += 1;
            }
        }
        if count == 0 {
            continue;
        }
        let num = &aut_s * BigUint::from(count);
        let den = a.aut(dec) * b.aut(dec);
        out.add(flavor.monomial(a_key), BasisMonomial::single(b_key), ratio(&num, &den));
    }
    Ok(out)
}

/// As `ts_delta`, read off the enumerated 2-simplex classes: the coefficient
/// of a ⊗ b is Σ aut(σ)/aut(X) over classes X with faces (a, b) and long edge σ.
pub fn ts_delta_via_level2(sigma: &Generator, dec: Decoration, colors: u32) -> Result<TensorElement> {
    let flavor: Flavor = dec.flavor(colors)?;
    flavor.validate(sigma)?;
    let s = Level1::from_generator(sigma)?.normal_form(dec);
    let key = s.connected_key(dec)?;
    let aut_s = s.aut(dec);
    let mut out = TensorElement::new();
    for class in enumerate_ts_level2(s.bottom_size(), dec, colors)? {
        if class.composite == key {
            let q: Rational = ratio(&aut_s, &class.aut);
            out.add(flavor.monomial(class.inner), BasisMonomial::single(class.outer), q);
        }
    }
    Ok(out)
}
