use std::collections::BTreeMap;

use plethyon::arith::{factorial, ratio, Rational};
use plethyon::incidence::{
    all_fillings, check_bialgebra_laws, check_bialgebra_laws_with, delta_combinatorial, delta_combinatorial_monomial,
    delta_symbolic, enumerate_decompositions, BasisMonomial, Flavor, Law, LawOptions, TensorElement,
};
use plethyon::{Generator, Lambda, Shape, Word};

fn lam(f: &Flavor, v: &[u32]) -> Generator {
    Generator::new(&f.base, Shape::Multiset(Lambda::from_vector(v))).unwrap()
}

fn word(f: &Flavor, l: &[u64]) -> Generator {
    Generator::new(&f.base, Shape::Word(Word::from_labels(l).unwrap())).unwrap()
}

fn q(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

/// Block-size multisets of all set partitions of {0..n}, via restricted growth strings.
fn set_partition_counts(n: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut sizes = vec![0usize; k];
        for &b in &rgs {
            sizes[b] += 1;
        }
        sizes.sort();
        *out.entry(sizes).or_default() += 1;
        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().max().copied().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for x in rgs.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

#[test]
fn set_partition_oracle_sanity() {
    // Bell numbers
    let bell: Vec<u64> = (1..=7).map(|n| set_partition_counts(n).values().sum()).collect();
    assert_eq!(bell, vec![1, 2, 5, 15, 52, 203, 877]);
}

#[test]
fn fdb_small_case() {
    let f = Flavor::by_name("fdb").unwrap();
    let d = delta_combinatorial(&f, &lam(&f, &[3])).unwrap();
    let a = |k: u32| lam(&f, &[k]);
    assert_eq!(d.len(), 3);
    assert_eq!(d.get(&BasisMonomial::single(a(3)), &BasisMonomial::single(a(1))), q(1));
    assert_eq!(d.get(&f.monomial(vec![a(2), a(1)]), &BasisMonomial::single(a(2))), q(3));
    assert_eq!(d.get(&f.monomial(vec![a(1), a(1), a(1)]), &BasisMonomial::single(a(3))), q(1));
}

#[test]
fn fdb_matches_bell_polynomials() {
    let f = Flavor::by_name("fdb").unwrap();
    for n in 1..=7u32 {
        let d = delta_combinatorial(&f, &lam(&f, &[n])).unwrap();
        let oracle = set_partition_counts(n as usize);
        assert_eq!(d.len(), oracle.len());
        for (sizes, count) in oracle {
            let inner = f.monomial(sizes.iter().map(|&b| lam(&f, &[b as u32])).collect());
            let outer = BasisMonomial::single(lam(&f, &[sizes.len() as u32]));
            assert_eq!(d.get(&inner, &outer), q(count), "n={n} sizes={sizes:?}");
        }
    }
}

fn restricted(t: &TensorElement, outer: &Generator) -> TensorElement {
    t.restrict_right(&BasisMonomial::single(outer.clone()))
}

#[test]
fn plethysm_factorial_ratios() {
    let f = Flavor::by_name("pleth").unwrap();
    let sigma = lam(&f, &[0, 0, 0, 1, 0, 2]);
    let outer = lam(&f, &[1, 2]);
    let fac = |n: u64| factorial(n);
    let num = fac(6).pow(2) * fac(2) * fac(4) * fac(2);
    let c1 = ratio(&num, &(fac(2).pow(2) * fac(2) * fac(4) * fac(3).pow(2) * fac(2)));
    let c2 = ratio(&num, &(fac(2).pow(2) * fac(2) * fac(6) * fac(3) * fac(2)));
    assert_eq!((c1.clone(), c2.clone()), (q(3600), q(720)));
    let comb = restricted(&delta_combinatorial(&f, &sigma).unwrap(), &outer);
    let symb = restricted(&delta_symbolic(&f, &sigma, 3).unwrap(), &outer);
    assert_eq!(comb, symb);
    assert_eq!(comb.len(), 2);
    let m1 = f.monomial(vec![lam(&f, &[0, 0, 0, 1]), lam(&f, &[0, 0, 1]), lam(&f, &[0, 0, 1])]);
    let m2 = f.monomial(vec![lam(&f, &[0, 0, 0, 0, 0, 1]), lam(&f, &[0, 0, 1]), lam(&f, &[0, 1])]);
    let o = BasisMonomial::single(outer);
    assert_eq!(comb.get(&m1, &o), c1);
    assert_eq!(comb.get(&m2, &o), c2);
}

#[test]
fn decomposition_classes_and_placements() {
    let f = Flavor::by_name("pleth").unwrap();
    let sigma = lam(&f, &[0, 0, 0, 1, 0, 2]);
    let at12 = enumerate_decompositions(&f, &sigma, &lam(&f, &[1, 2])).unwrap();
    assert_eq!(at12.len(), 2);
    let at11 = enumerate_decompositions(&f, &sigma, &lam(&f, &[1, 1])).unwrap();
    let fillings: usize = at11.iter().map(|d| d.fillings).sum();
    // labeled cells 1, 2: items 4,6,6 split over two nonempty cells,
    // the cell of arrow 2 receiving only even entries
    assert_eq!(fillings, 4);
    for d in at11.iter().chain(&at12) {
        let w = ratio(
            &(f.aut(&sigma).unwrap() * &d.placements),
            &(f.aut(&d.outer).unwrap() * f.monomial_aut(&d.inner).unwrap()),
        );
        assert_eq!(w, d.weight);
    }
}

#[test]
fn linear_nc_coefficients_are_indicators() {
    let f = Flavor::by_name("pleth-lin-nc").unwrap();
    let d = delta_combinatorial(&f, &word(&f, &[6])).unwrap();
    assert_eq!(d.len(), 4);
    for w in [&[6u64][..], &[2, 3], &[1, 2, 4], &[3, 5, 1, 2]] {
        for (_, _, c) in delta_combinatorial(&f, &word(&f, w)).unwrap().iter() {
            assert!(*c == q(1), "{w:?}");
        }
    }
}

#[test]
fn routes_agree_beyond_size_five_spot_checks() {
    for (name, v) in [("pleth", &[2u32, 1, 0, 1][..]), ("pleth-exp", &[0, 2, 0, 0, 0, 1]), ("fdb", &[6])] {
        let f = Flavor::by_name(name).unwrap();
        let s = lam(&f, v);
        assert_eq!(delta_symbolic(&f, &s, s.size()).unwrap(), delta_combinatorial(&f, &s).unwrap(), "{name}");
    }
}

#[test]
fn truncation_must_reach_sigma() {
    let f = Flavor::by_name("pleth").unwrap();
    assert!(delta_symbolic(&f, &lam(&f, &[3]), 2).is_err());
}

#[test]
fn forest_delta_is_multiplicative() {
    let f = Flavor::by_name("pleth").unwrap();
    let (a, b) = (lam(&f, &[1, 1]), lam(&f, &[0, 2]));
    let prod = delta_combinatorial(&f, &a).unwrap().mul(&delta_combinatorial(&f, &b).unwrap(), &f);
    assert_eq!(delta_combinatorial_monomial(&f, &f.monomial(vec![a, b])).unwrap(), prod);
    let one = delta_combinatorial_monomial(&f, &BasisMonomial::one()).unwrap();
    assert_eq!(one, TensorElement::unit());
}

#[test]
fn every_flavor_satisfies_the_laws_at_weight_four() {
    for f in Flavor::all() {
        let r = check_bialgebra_laws(&f, &LawOptions { max_weight: 4, ..Default::default() }).unwrap();
        assert!(r.passed(), "{}: {:?}", f.name, r.failures);
        assert!(r.generators > 0);
    }
}

#[test]
fn corrupted_delta_is_caught() {
    let f = Flavor::by_name("pleth").unwrap();
    let bad = |f: &Flavor, g: &Generator| {
        let mut t = delta_combinatorial(f, g)?;
        if g.size() == 2 {
            t.add(BasisMonomial::single(g.clone()), BasisMonomial::single(g.clone()), q(1));
        }
        Ok(t)
    };
    let r = check_bialgebra_laws_with(&f, &LawOptions { max_weight: 3, ..Default::default() }, &bad).unwrap();
    assert!(!r.passed());
    assert!(r.failures.iter().any(|x| x.law == Law::RouteAgreement));
}

#[test]
fn colored_fillings_respect_colors() {
    let f = Flavor::by_name("pleth2").unwrap();
    let g = f.parse_generator("{0->0:2:1, 0->1:2:1}").unwrap();
    for (outer, fill) in all_fillings(&f, &g).unwrap() {
        for (cell, mu) in outer.shape.cells().iter().zip(&fill) {
            assert_eq!(cell.tgt, mu.color);
        }
    }
}
