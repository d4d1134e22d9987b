//! One line per acceptance criterion; exits nonzero if any fails or runs
//! over its time limit.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rayon::prelude::*;

use plethyon::arith::{factorial, ratio, Rational};
use plethyon::incidence::{
    check_bialgebra_laws, delta_combinatorial, delta_symbolic, enumerate_decompositions, enumerate_generators,
    BasisMonomial, Flavor, LawOptions, TensorElement,
};
use plethyon::operad::{axiom_check, builtin_operad, Corrupted, ProfileOperad};
use plethyon::surjections::{enumerate_ts, forest_aut_order, parse_forest, ts_delta, Decoration, Level1};
use plethyon::base::{Arrow, BaseCategory};
use plethyon::operad::{t_operad_compose, TupleOperation};
use plethyon::{Generator, Lambda, Shape, Word};

type Outcome = Result<String, String>;
type Oracle<'a> = &'a dyn Fn(&[u64]) -> BigUint;
/// (number, name, time limit in seconds, check)
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    if ok {
        Ok(detail.into())
    } else {
        Err(detail.into())
    }
}

fn q(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

fn lam(f: &Flavor, v: &[u32]) -> Generator {
    Generator::new(&f.base, Shape::Multiset(Lambda::from_vector(v))).unwrap()
}

fn single(g: &Generator) -> BasisMonomial {
    BasisMonomial::single(g.clone())
}

fn c1_fdb_small_case() -> Outcome {
    let f = Flavor::by_name("fdb").map_err(|e| e.to_string())?;
    let a = |k: u32| lam(&f, &[k]);
    let d = delta_combinatorial(&f, &a(3)).map_err(|e| e.to_string())?;
    let got = [
        d.get(&single(&a(3)), &single(&a(1))),
        d.get(&f.monomial(vec![a(1), a(2)]), &single(&a(2))),
        d.get(&f.monomial(vec![a(1), a(1), a(1)]), &single(&a(3))),
    ];
    check(d.len() == 3 && got == [q(1), q(3), q(1)], format!("{} terms: {}", d.len(), d.format(&f).trim().replace('\n', "; ")))
}

/// Block-size multisets of the set partitions of an n-set, counted.
fn set_partitions(n: usize) -> BTreeMap<Vec<usize>, u64> {
    fn rec(i: usize, n: usize, blocks: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
        if i == n {
            let mut s = blocks.clone();
            s.sort();
            *out.entry(s).or_default() += 1;
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] += 1;
            rec(i + 1, n, blocks, out);
            blocks[b] -= 1;
        }
        blocks.push(1);
        rec(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = BTreeMap::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

fn c2_bell() -> Outcome {
    let f = Flavor::by_name("fdb").map_err(|e| e.to_string())?;
    for n in 1..=7u32 {
        let d = delta_combinatorial(&f, &lam(&f, &[n])).map_err(|e| e.to_string())?;
        let oracle = set_partitions(n as usize);
        let mut expected = TensorElement::new();
        for (sizes, count) in &oracle {
            let inner = f.monomial(sizes.iter().map(|&b| lam(&f, &[b as u32])).collect());
            expected.add(inner, single(&lam(&f, &[sizes.len() as u32])), q(*count));
        }
        if d != expected {
            return Err(format!("n={n} differs from the set-partition count"));
        }
    }
    Ok("n = 1..7 match".into())
}

fn c3_plethysm_coefficients() -> Outcome {
    let f = Flavor::by_name("pleth").map_err(|e| e.to_string())?;
    let sigma = lam(&f, &[0, 0, 0, 1, 0, 2]);
    let outer = single(&lam(&f, &[1, 2]));
    let fac = factorial;
    let num = fac(6).pow(2) * fac(2) * fac(4) * fac(2);
    let c1 = ratio(&num, &(fac(2).pow(2) * fac(2) * fac(4) * fac(3).pow(2) * fac(2)));
    let c2 = ratio(&num, &(fac(2).pow(2) * fac(2) * fac(6) * fac(3) * fac(2)));
    let comb = delta_combinatorial(&f, &sigma).map_err(|e| e.to_string())?.restrict_right(&outer);
    let symb = delta_symbolic(&f, &sigma, 3).map_err(|e| e.to_string())?.restrict_right(&outer);
    let ts = ts_delta(&sigma, Decoration::PLAIN, 1).map_err(|e| e.to_string())?.restrict_right(&outer);
    let m1 = f.monomial(vec![lam(&f, &[0, 0, 0, 1]), lam(&f, &[0, 0, 1]), lam(&f, &[0, 0, 1])]);
    let m2 = f.monomial(vec![lam(&f, &[0, 0, 0, 0, 0, 1]), lam(&f, &[0, 0, 1]), lam(&f, &[0, 1])]);
    let ok = (c1.clone(), c2.clone()) == (q(3600), q(720))
        && comb == symb
        && comb == ts
        && comb.len() == 2
        && comb.get(&m1, &outer) == c1
        && comb.get(&m2, &outer) == c2;
    check(ok, format!("{} / {} on three routes", comb.get(&m1, &outer), comb.get(&m2, &outer)))
}

fn c4_decomposition_counts() -> Outcome {
    let f = Flavor::by_name("pleth").map_err(|e| e.to_string())?;
    let sigma = lam(&f, &[0, 0, 0, 1, 0, 2]);
    let at12 = enumerate_decompositions(&f, &sigma, &lam(&f, &[1, 2])).map_err(|e| e.to_string())?;
    let at11 = enumerate_decompositions(&f, &sigma, &lam(&f, &[1, 1])).map_err(|e| e.to_string())?;
    let placements: usize = at11.iter().map(|d| d.fillings).sum();
    check(
        at12.len() == 2 && placements == 3,
        format!("{} classes at (1,2), {} placements at (1,1) (expected 2 and 3)", at12.len(), placements),
    )
}

fn c5_giraudo() -> Outcome {
    let base = BaseCategory::classical();
    let l = |v: &[u64]| Lambda::from_cells(v.iter().map(|&n| Arrow::loop0(n)));
    let r = t_operad_compose(
        &base,
        &TupleOperation::Multiset(l(&[5, 9])),
        &[TupleOperation::Multiset(l(&[2, 3])), TupleOperation::Multiset(l(&[4, 7]))],
    )
    .map_err(|e| e.to_string())?;
    let labels: Vec<u64> = match &r {
        TupleOperation::Multiset(m) => m.cells().iter().map(|a| a.label).collect(),
        _ => vec![],
    };
    check(r == TupleOperation::Multiset(l(&[10, 15, 36, 63])), format!("{labels:?}"))
}

fn c6_laws() -> Outcome {
    let opts = LawOptions { max_weight: 5, routes: false, products: true };
    let reports: Vec<_> = Flavor::all().par_iter().map(|f| (f.name.clone(), check_bialgebra_laws(f, &opts))).collect();
    let mut gens = 0;
    for (name, r) in reports {
        let r = r.map_err(|e| format!("{name}: {e}"))?;
        if !r.passed() {
            return Err(format!("{name}: {} {}", r.failures[0].law, r.failures[0].element));
        }
        gens += r.generators;
    }
    Ok(format!("{} flavors, {gens} generators", Flavor::all().len()))
}

fn c7_routes() -> Outcome {
    let mut n = 0;
    for f in Flavor::all() {
        let gens = enumerate_generators(&f, 5).map_err(|e| e.to_string())?;
        let bad = gens.par_iter().find_any(|g| {
            let s = delta_symbolic(&f, g, g.size());
            let c = delta_combinatorial(&f, g);
            !matches!((s, c), (Ok(s), Ok(c)) if s == c)
        });
        if let Some(g) = bad {
            return Err(format!("{}: {}", f.name, f.format_generator(g)));
        }
        n += gens.len();
    }
    Ok(format!("{n} generators"))
}

fn compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn partitions(n: u64) -> Vec<Vec<u64>> {
    let mut v: Vec<Vec<u64>> = compositions(n)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    v.sort();
    v
}

fn fiber_sizes(d: &Level1, ordered: bool) -> Vec<u64> {
    let mut v: Vec<u64> = d.left.fibers().iter().map(|f| f.len() as u64).collect();
    if !ordered {
        v.sort_by(|a, b| b.cmp(a));
    }
    v
}

fn c8_ts_equivalence() -> Outcome {
    let mults = |p: &[u64]| -> BigUint {
        let mut c: BTreeMap<u64, u64> = BTreeMap::new();
        for &x in p {
            *c.entry(x).or_default() += 1;
        }
        c.values().map(|&k| factorial(k)).product()
    };
    let fibers = |p: &[u64]| -> BigUint { p.iter().map(|&x| factorial(x)).product() };
    let one = |_: &[u64]| BigUint::from(1u32);
    // plain ↔ autiv(λ); exponential ↔ λ!; ordered-linear ↔ ω!; linear both ways ↔ 1
    let cases: [(&str, bool, Oracle); 4] = [
        ("plain", false, &|p| fibers(p) * mults(p)),
        ("left=linear", false, &mults),
        ("right=linear", true, &fibers),
        ("left=linear,right=linear", true, &one),
    ];
    for (name, words, oracle) in cases {
        let d: Decoration = name.parse().map_err(|e: plethyon::Error| e.to_string())?;
        let classes = enumerate_ts(6, d, 1).map_err(|e| e.to_string())?;
        let mut expected = BTreeMap::new();
        for s in 1..=6 {
            for p in if words { compositions(s) } else { partitions(s) } {
                let a = oracle(&p);
                expected.insert(p, a);
            }
        }
        let got: BTreeMap<Vec<u64>, BigUint> =
            classes.iter().map(|c| (fiber_sizes(&c.representative, words), c.aut.clone())).collect();
        if got.len() != classes.len() || got != expected {
            return Err(format!("{name}: class table differs"));
        }
    }
    let f = Flavor::by_name("pleth").map_err(|e| e.to_string())?;
    let gens = enumerate_generators(&f, 8).map_err(|e| e.to_string())?;
    if let Some(g) = gens
        .par_iter()
        .find_any(|g| !matches!((ts_delta(g, Decoration::PLAIN, 1), delta_combinatorial(&f, g)), (Ok(a), Ok(b)) if a == b))
    {
        return Err(format!("ts_delta differs at {}", f.format_generator(g)));
    }
    Ok(format!("class tables for 4 decorations; ts_delta on {} generators", gens.len()))
}

fn c9_linear_nc() -> Outcome {
    let f = Flavor::by_name("pleth-lin-nc").map_err(|e| e.to_string())?;
    let six = Generator::new(&f.base, Shape::Word(Word::from_labels(&[6]).map_err(|e| e.to_string())?))
        .map_err(|e| e.to_string())?;
    let d6 = delta_combinatorial(&f, &six).map_err(|e| e.to_string())?;
    for g in enumerate_generators(&f, 6).map_err(|e| e.to_string())? {
        let d = delta_combinatorial(&f, &g).map_err(|e| e.to_string())?;
        if d.iter().any(|(_, _, c)| *c != q(1)) {
            return Err(format!("coefficient outside {{0,1}} at {}", f.format_generator(&g)));
        }
    }
    check(d6.len() == 4, format!("Δ(a_(6)) has {} terms", d6.len()))
}

fn c10_forest() -> Outcome {
    let forest = parse_forest("y1(x1(b,b,b),x1(b,b,b));y1(x1(b,b,b),x1(b,b,b));y2(x2(g,g));y1(x3(g,g,p),x3(g,g,p))")
        .map_err(|e| e.to_string())?;
    let fac = factorial;
    let quoted = (fac(2) * fac(2).pow(2) * fac(3).pow(4)) * fac(2) * (fac(2) * fac(2).pow(2));
    let got = forest_aut_order(&forest, true);
    check(got == quoted && got == BigUint::from(165888u32), format!("{got}"))
}

fn c11_bivariate() -> Outcome {
    let f = Flavor::by_name("pleth2").map_err(|e| e.to_string())?;
    // output color 0 (blue); inputs blue 6, red 4 and 6 — outer blue 1, 2 and red 2
    let sigma = f.parse_generator("{0->0:6:1, 0->1:4:1, 0->1:6:1}").map_err(|e| e.to_string())?;
    let outer = f.parse_generator("{0->0:1:1, 0->0:2:1, 0->1:2:1}").map_err(|e| e.to_string())?;
    let ds = enumerate_decompositions(&f, &sigma, &outer).map_err(|e| e.to_string())?;
    let n: usize = ds.iter().map(|d| d.fillings).sum();
    check(n == 3, format!("{n} colored decompositions (expected 3)"))
}

fn c12_axioms() -> Outcome {
    let mut checks = 0;
    for name in ["sym", "ass", "sym2", "ass2", "giraudo:mul", "giraudo:add", "cat:codiscrete2", "cat:arrow"] {
        let o = builtin_operad(name).map_err(|e| e.to_string())?;
        let r = axiom_check(o.as_ref(), 3);
        if !r.passed() {
            return Err(format!("{name}: {:?}", r.violations.first()));
        }
        checks += r.checks;
    }
    let r = axiom_check(&Corrupted(ProfileOperad::ass(2)), 3);
    let witnessed = !r.passed() && !r.violations[0].witness.is_empty();
    check(witnessed, format!("8 operads, {checks} checks; corruption witnessed: {witnessed}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "Faà di Bruno small case", 1, c1_fdb_small_case),
        (2, "Bell identity n ≤ 7", 10, c2_bell),
        (3, "plethysm coefficients 3600/720", 30, c3_plethysm_coefficients),
        (4, "decomposition counts", 5, c4_decomposition_counts),
        (5, "tuple composition (10,15,36,63)", 1, c5_giraudo),
        (6, "bialgebra laws, all flavors, weight ≤ 5", 300, c6_laws),
        (7, "symbolic = combinatorial, weight ≤ 5", 300, c7_routes),
        (8, "surjection-diagram equivalence", 120, c8_ts_equivalence),
        (9, "linear noncommutative indicator", 1, c9_linear_nc),
        (10, "forest automorphisms 165888", 1, c10_forest),
        (11, "bivariate colored decompositions", 5, c11_bivariate),
        (12, "operad axiom suites", 60, c12_axioms),
    ];
    let mut failed = 0;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(limit);
        let (tag, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {limit} s limit")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {n}: {name} — {detail} [{:.2} s]", took.as_secs_f64());
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
