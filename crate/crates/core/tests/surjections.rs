use std::collections::BTreeMap;

use num_bigint::BigUint;
use proptest::prelude::*;

use plethyon::arith::factorial;
use plethyon::incidence::{delta_combinatorial, enumerate_generators, BasisMonomial, Flavor};
use plethyon::surjections::{
    count_isomorphisms, enumerate_ts, enumerate_ts_level2, forest_aut_order, is_monotone_square, isomorphic,
    monotone_pullback, parse_forest, ts_delta, ts_delta_via_level2, Decoration, Level1, Mark, Square, Surjection,
};
use plethyon::{Generator, Lambda, Shape};

fn dec(s: &str) -> Decoration {
    s.parse().unwrap()
}

/// Integer partitions of n as part lists (non-increasing).
fn partitions(n: u64, max: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - p, p) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

/// Compositions of n.
fn compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn mult_factorials(parts: &[u64]) -> BigUint {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_default() += 1;
    }
    counts.values().map(|&c| factorial(c)).product()
}

fn fiber_factorials(parts: &[u64]) -> BigUint {
    parts.iter().map(|&p| factorial(p)).product()
}

/// Class fingerprint: the fiber sizes of t01 ↠ t00, sorted unless t00 is ordered.
fn fiber_sizes(d: &Level1, ordered: bool) -> Vec<u64> {
    let mut v: Vec<u64> = d.left.fibers().iter().map(|f| f.len() as u64).collect();
    if !ordered {
        v.sort_by(|a, b| b.cmp(a));
    }
    v
}

#[test]
fn connected_classes_match_the_shape_tables() {
    type Oracle = fn(&[u64]) -> BigUint;
    let autiv: Oracle = |p| fiber_factorials(p) * mult_factorials(p);
    let cases: [(&str, bool, Oracle); 6] = [
        ("plain", false, autiv),
        ("left=linear", false, mult_factorials),
        ("right=linear", true, fiber_factorials),
        ("right=monotone", true, fiber_factorials),
        ("left=linear,right=linear", true, |_| BigUint::from(1u32)),
        ("left=monotone,right=monotone", true, |_| BigUint::from(1u32)),
    ];
    for (name, words, oracle) in cases {
        let d = dec(name);
        let classes = enumerate_ts(6, d, 1).unwrap();
        let mut expected: BTreeMap<Vec<u64>, BigUint> = BTreeMap::new();
        for s in 1..=6 {
            let shapes = if words { compositions(s) } else { partitions(s, s) };
            for p in shapes {
                expected.insert(p.clone(), oracle(&p));
            }
        }
        let got: BTreeMap<Vec<u64>, BigUint> =
            classes.iter().map(|c| (fiber_sizes(&c.representative, words), c.aut.clone())).collect();
        assert_eq!(got.len(), classes.len(), "{name}: fingerprints collide");
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn orbit_stabilizer_on_raw_tables() {
    // plain diagrams: S_m × S_n acts on the tables of [m] ↠ [n]; stabilizers are the automorphisms
    for c in enumerate_ts(6, Decoration::PLAIN, 2).unwrap() {
        let (m, n) = (c.representative.t01() as u64, c.representative.t00() as u64);
        assert_eq!(BigUint::from(c.raw_count) * &c.aut, factorial(m) * factorial(n), "{:?}", c.key);
    }
}

#[test]
fn ts_delta_matches_flavor_delta() {
    for d in Decoration::all() {
        for colors in [1u32, 2] {
            let flavor = d.flavor(colors).unwrap();
            let w = if d == Decoration::PLAIN && colors == 1 { 8 } else { 6 };
            for g in enumerate_generators(&flavor, w).unwrap() {
                assert_eq!(
                    ts_delta(&g, d, colors).unwrap(),
                    delta_combinatorial(&flavor, &g).unwrap(),
                    "{} {}",
                    flavor.name,
                    flavor.format_generator(&g)
                );
            }
        }
    }
}

#[test]
fn level_two_classes_give_the_same_delta() {
    for d in Decoration::all() {
        for (colors, w) in [(1u32, 5u64), (2, 3)] {
            let flavor = d.flavor(colors).unwrap();
            for g in enumerate_generators(&flavor, w).unwrap() {
                assert_eq!(ts_delta_via_level2(&g, d, colors).unwrap(), ts_delta(&g, d, colors).unwrap());
            }
        }
    }
}

#[test]
fn level_two_automorphisms_divide() {
    let classes = enumerate_ts_level2(4, Decoration::PLAIN, 1).unwrap();
    assert!(!classes.is_empty());
    // every class has inner and outer faces that compose to its long edge size
    for c in &classes {
        let inner: usize = c.inner.iter().map(|g| g.size()).sum();
        assert_eq!(inner, c.composite.size());
    }
}

#[test]
fn unit_class_is_grouplike() {
    let f = Flavor::by_name("pleth").unwrap();
    let unit = Generator::new(&f.base, Shape::Multiset(Lambda::from_vector(&[1]))).unwrap();
    let t = ts_delta(&unit, Decoration::PLAIN, 1).unwrap();
    assert_eq!(t.len(), 1);
    let m = BasisMonomial::single(unit);
    assert_eq!(t.get(&m, &m), plethyon::arith::int(1));
}

#[test]
fn plethysm_terms_from_diagrams() {
    let f = Flavor::by_name("pleth").unwrap();
    let lam = |v: &[u32]| Generator::new(&f.base, Shape::Multiset(Lambda::from_vector(v))).unwrap();
    let outer = BasisMonomial::single(lam(&[1, 2]));
    let t = ts_delta(&lam(&[0, 0, 0, 1, 0, 2]), Decoration::PLAIN, 1).unwrap().restrict_right(&outer);
    let m1 = f.monomial(vec![lam(&[0, 0, 0, 1]), lam(&[0, 0, 1]), lam(&[0, 0, 1])]);
    let m2 = f.monomial(vec![lam(&[0, 0, 0, 0, 0, 1]), lam(&[0, 0, 1]), lam(&[0, 1])]);
    assert_eq!(t.len(), 2);
    assert_eq!(t.get(&m1, &outer), plethyon::arith::int(3600));
    assert_eq!(t.get(&m2, &outer), plethyon::arith::int(720));
}

#[test]
fn ts_delta_rejects_bad_input() {
    let f = Flavor::by_name("pleth-ncvars").unwrap();
    let g = f.parse_generator("1.2").unwrap();
    assert!(ts_delta(&g, Decoration::PLAIN, 1).is_err());
    assert!(ts_delta(&g, dec("right=linear"), 0).is_err());
    assert!(enumerate_ts(9, Decoration::PLAIN, 1).is_err());
}

#[test]
fn forest_automorphisms() {
    let f = parse_forest(
        "y1(x1(b,b,b),x1(b,b,b)); y1(x1(b,b,b),x1(b,b,b)); y2(x2(g,g)); y1(x3(g,g,p),x3(g,g,p))",
    )
    .unwrap();
    let fac = |n| factorial(n);
    let expected = (fac(2) * fac(2).pow(2) * fac(3).pow(4)) * fac(2) * (fac(2) * fac(2).pow(2));
    assert_eq!(expected, BigUint::from(165888u32));
    assert_eq!(forest_aut_order(&f, true), expected);
    assert_eq!(forest_aut_order(&f, false), BigUint::from(2u32));
    for n in 1..=6u64 {
        let leaves = vec!["a"; n as usize].join(",");
        let c = parse_forest(&format!("m({leaves})")).unwrap();
        assert_eq!(forest_aut_order(&c, true), factorial(n));
        assert_eq!(forest_aut_order(&c, false), BigUint::from(1u32));
    }
}

fn surjection_strategy(max_domain: u32) -> impl Strategy<Value = Surjection> {
    (1..=max_domain).prop_flat_map(|m| {
        (1..=m).prop_flat_map(move |n| {
            Just(()).prop_perturb(move |_, mut rng| {
                // a random surjection: hit every value once, fill the rest, shuffle
                let mut v: Vec<u32> = (0..n).collect();
                v.extend((n..m).map(|_| rng.random_range(0..n)));
                for i in (1..v.len()).rev() {
                    v.swap(i, rng.random_range(0..=i));
                }
                Surjection::new(v, n).unwrap()
            })
        })
    })
}

fn monotone(s: &Surjection) -> Surjection {
    let mut v = s.values().to_vec();
    v.sort();
    Surjection::new(v, s.codomain()).unwrap()
}

fn diagram_strategy() -> impl Strategy<Value = Level1> {
    (surjection_strategy(8), any::<u64>()).prop_map(|(left, seed)| {
        let n = left.codomain();
        let k = 1 + (seed % n as u64) as u32;
        let mut right: Vec<u32> = (0..n).map(|x| if x < k { x } else { ((seed >> 8) as u32 ^ x.wrapping_mul(2654435761)) % k }).collect();
        right.rotate_left((seed % n as u64) as usize);
        let colors00 = (0..n).map(|x| ((seed >> (x % 32)) & 1) as u32).collect();
        let colors11 = (0..k).map(|y| ((seed >> (40 + y % 16)) & 1) as u32).collect();
        Level1::new(left, Surjection::new(right, k).unwrap(), colors00, colors11).unwrap()
    })
}

proptest! {
    #[test]
    fn normal_form_is_monotone_and_isomorphic(d in diagram_strategy()) {
        for dec in [Decoration::PLAIN, "left=linear".parse().unwrap()] {
            let nf = d.normal_form(dec);
            prop_assert!(nf.is_monotone_form());
            prop_assert!(isomorphic(&d, &nf, dec));
            prop_assert_eq!(nf.key(dec), d.key(dec));
            prop_assert_eq!(count_isomorphisms(&d, &d, dec), nf.aut(dec));
        }
    }

    #[test]
    fn pasting_monotone_squares(g in surjection_strategy(5), f in surjection_strategy(5), g2 in surjection_strategy(5)) {
        // [n] –f→ [k] ←g– [l] ←g2– [l2], all g's monotone
        let k = g.codomain().min(f.codomain());
        let g = Surjection::new(monotone(&g).values().iter().map(|&v| v.min(k - 1)).collect(), k).unwrap();
        let f = Surjection::new(f.values().iter().map(|&v| v.min(k - 1)).collect(), k).unwrap();
        let l = g.domain().min(g2.codomain());
        let g2 = Surjection::new(monotone(&g2).values().iter().map(|&v| v.min(l - 1)).collect(), l).unwrap();
        let g = Surjection::new(g.values()[..l as usize].to_vec(), k);
        prop_assume!(g.is_ok());
        let g = g.unwrap();
        let sq = monotone_pullback(&g, &f).unwrap();
        prop_assert!(is_monotone_square(&sq, &g, &f));
        let sq2 = monotone_pullback(&g2, &sq.p).unwrap();
        prop_assert!(is_monotone_square(&sq2, &g2, &sq.p));
        let pasted = Square { p: sq2.p.clone(), q: sq2.q.then(&sq.q).unwrap() };
        let gg = g2.then(&g).unwrap();
        prop_assert!(is_monotone_square(&pasted, &gg, &f));
        prop_assert_eq!(pasted, monotone_pullback(&gg, &f).unwrap());
    }

    #[test]
    fn ordered_normal_form_keeps_words(d in diagram_strategy()) {
        let dec: Decoration = "right=linear".parse().unwrap();
        let nf = d.normal_form(dec);
        prop_assert!(isomorphic(&d, &nf, dec));
        prop_assert_eq!(nf.key(dec), d.key(dec));
        prop_assert_eq!(dec.right, Mark::Linear);
    }
}
