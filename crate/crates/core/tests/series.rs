use proptest::prelude::*;

use plethyon::base::divisors;
use plethyon::series::{format_series, parse_series, substitute_ordinary, substitute_plethystic, Series};
use plethyon::shape::{aut_order, format_lambda, lambda_sum, parse_lambda, verschiebung};
use plethyon::{Arrow, AutFlavor, BaseCategory, Lambda, ShapeKind};

fn lambda_strategy(max_label: u64, max_len: usize) -> impl Strategy<Value = Lambda> {
    prop::collection::vec(1..=max_label, 0..=max_len).prop_map(|v| Lambda::from_cells(v.into_iter().map(Arrow::loop0)))
}

/// Random rational series text over x1..x3, no constant term.
fn series_text() -> impl Strategy<Value = String> {
    let monomial = prop::collection::vec(1u32..=3, 1..=3);
    let term = (-3i32..=3, 1u32..=2, monomial).prop_filter("nonzero", |(c, _, _)| *c != 0).prop_map(|(c, d, m)| {
        let vars: Vec<String> = m.iter().map(|k| format!("x{k}")).collect();
        format!("{c}/{d}*{}", vars.join("*"))
    });
    prop::collection::vec(term, 1..=4).prop_map(|ts| ts.join("+").replace("+-", "-"))
}

fn parse(text: &str, d: usize) -> Series {
    parse_series(&BaseCategory::classical(), ShapeKind::Multiset, d, text).unwrap()
}

proptest! {
    #[test]
    fn lambda_text_round_trips(l in lambda_strategy(9, 6)) {
        let base = BaseCategory::classical();
        prop_assume!(!l.is_empty());
        let text = format_lambda(&base, &l);
        prop_assert_eq!(parse_lambda(&base, &text).unwrap(), l);
    }

    #[test]
    fn verschiebung_is_functorial(l in lambda_strategy(6, 5), m in 1u64..5, k in 1u64..5) {
        let base = BaseCategory::classical();
        let vk = verschiebung(&base, &Arrow::loop0(k), &l).unwrap();
        let vmk = verschiebung(&base, &Arrow::loop0(m), &vk).unwrap();
        prop_assert_eq!(&vmk, &verschiebung(&base, &Arrow::loop0(m * k), &l).unwrap());
        prop_assert_eq!(vk.size(), l.size());
        prop_assert_eq!(verschiebung(&base, &Arrow::loop0(1), &l).unwrap(), l);
    }

    #[test]
    fn sums_add_sizes(a in lambda_strategy(6, 5), b in lambda_strategy(6, 5)) {
        let s = lambda_sum(&a, &b);
        prop_assert_eq!(s.size(), a.size() + b.size());
        prop_assert!(a.dominated_by(&s) && b.dominated_by(&s));
        prop_assert_eq!(s, lambda_sum(&b, &a));
    }

    #[test]
    fn aut_multiplies_over_disjoint_supports(a in lambda_strategy(4, 5), b in lambda_strategy(4, 5)) {
        // shift b's labels past a's so the supports are disjoint
        let base = BaseCategory::classical();
        let b = Lambda::from_cells(b.cells().into_iter().map(|x| Arrow::loop0(x.label + 4)));
        for fl in [AutFlavor::SymmetricInner, AutFlavor::Exponential] {
            let whole = aut_order(&base, &lambda_sum(&a, &b), fl).unwrap();
            prop_assert_eq!(whole, aut_order(&base, &a, fl).unwrap() * aut_order(&base, &b, fl).unwrap());
        }
    }

    #[test]
    fn factorizations_are_divisor_pairs(n in 1u64..200) {
        let base = BaseCategory::classical();
        let a = Arrow::loop0(n);
        let fs = base.factorizations(&a);
        prop_assert_eq!(fs.len(), divisors(n).len());
        prop_assert!(fs.contains(&(a, Arrow::loop0(1))) && fs.contains(&(Arrow::loop0(1), a)));
        for (m, k) in fs {
            prop_assert_eq!(base.compose(&m, &k).unwrap(), a);
        }
    }

    #[test]
    fn series_text_round_trips(t in series_text()) {
        let f = parse(&t, 4);
        prop_assert_eq!(parse(&format_series(&f).unwrap(), 4), f);
    }

    #[test]
    fn plethystic_substitution_is_associative(g in series_text(), f in series_text(), h in series_text()) {
        let d = 4;
        let (g, f, h) = (parse(&g, d), parse(&f, d), parse(&h, d));
        let left = substitute_plethystic(&substitute_plethystic(&g, &f, d).unwrap(), &h, d).unwrap();
        let right = substitute_plethystic(&g, &substitute_plethystic(&f, &h, d).unwrap(), d).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn x1_is_the_plethystic_unit(f in series_text()) {
        let d = 4;
        let (x1, f) = (parse("x1", d), parse(&f, d));
        prop_assert_eq!(substitute_plethystic(&x1, &f, d).unwrap(), f.clone());
        prop_assert_eq!(substitute_plethystic(&f, &x1, d).unwrap(), f);
    }

    #[test]
    fn substitution_is_linear_in_the_outer_series(g1 in series_text(), g2 in series_text(), f in series_text()) {
        let d = 4;
        let (g1, g2, f) = (parse(&g1, d), parse(&g2, d), parse(&f, d));
        let sum = substitute_plethystic(&g1.add(&g2).unwrap(), &f, d).unwrap();
        let parts = substitute_plethystic(&g1, &f, d).unwrap().add(&substitute_plethystic(&g2, &f, d).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
        let vars = [Arrow::loop0(1), Arrow::loop0(2), Arrow::loop0(3)];
        let fs = [f.clone(), f.clone(), f.clone()];
        let sum = substitute_ordinary(&g1.add(&g2).unwrap(), &vars, &fs, d).unwrap();
        let parts = substitute_ordinary(&g1, &vars, &fs, d).unwrap().add(&substitute_ordinary(&g2, &vars, &fs, d).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
    }
}

#[test]
fn divisor_counts() {
    let d: Vec<usize> = (1..=12).map(|n| divisors(n).len()).collect();
    assert_eq!(d, vec![1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]);
}
