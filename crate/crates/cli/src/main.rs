use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plethyon::arith::format_rational;
use plethyon::incidence::{
    check_bialgebra_laws, delta_combinatorial, delta_symbolic, enumerate_decompositions, enumerate_generators,
    BasisMonomial, Flavor, LawOptions, TensorElement,
};
use plethyon::json::{flavor_by_name, series_to_json, tensor_to_json};
use plethyon::operad::{axiom_check, builtin_operad, category_to_operad, OperadInstance};
use plethyon::series::{format_series, parse_series, substitute_ordinary, substitute_plethystic_family, Series};
use plethyon::shape::parse_arrow;
use plethyon::surjections::{
    enumerate_ts, enumerate_ts_level2, forest_aut_order, parse_forest, ts_delta, ts_delta_via_level2, Decoration,
    Level1, MAX_BOTTOM,
};
use plethyon::{BaseCategory, FiniteCategory, Generator, ShapeKind};

const BUILTIN_OPERADS: &[&str] =
    &["sym", "ass", "sym2", "ass2", "giraudo:mul", "giraudo:add", "cat:codiscrete2", "cat:arrow"];

#[derive(Parser)]
#[command(name = "plethyon", version, about = "Plethystic and Faà di Bruno bialgebras over exact rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cap on generator sizes, bounds and bottom sizes.
    #[arg(long, env = "PLETHYON_MAX_SIZE", default_value_t = 12, global = true)]
    max_size: u64,
    /// JSON object of flag defaults (keys are flag names).
    #[arg(long, global = true)]
    config: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Comultiplication of one generator.
    Delta(DeltaArgs),
    /// Substitute series into a series.
    Substitute(SubstituteArgs),
    /// List the decompositions of a generator.
    Decompose(DecomposeArgs),
    /// Surjection-diagram classes and forest automorphisms.
    Bar(BarArgs),
    /// Diagram-side comultiplication, or the class of a diagram.
    Ts(TsArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Combinatorial,
    Symbolic,
    Ts,
    All,
}

#[derive(Args)]
struct DeltaArgs {
    #[arg(long)]
    flavor: String,
    #[arg(long)]
    sigma: String,
    #[arg(long, value_enum, default_value_t = Route::Combinatorial)]
    route: Route,
    /// Keep only terms whose outer leg is this generator.
    #[arg(long)]
    restrict_right: Option<String>,
    /// Truncation degree for the symbolic route (default: size of σ).
    #[arg(long = "D")]
    degree: Option<usize>,
}

#[derive(Args)]
struct SubstituteArgs {
    /// Outer series.
    #[arg(long)]
    g: String,
    /// Inner series; one per color for plethystic substitution, one per --var otherwise.
    #[arg(long, required = true)]
    f: Vec<String>,
    #[arg(long = "D")]
    degree: usize,
    /// Plethystic substitution (the default).
    #[arg(long, conflicts_with = "ordinary")]
    pleth: bool,
    /// Ordinary substitution of the variables given by --var.
    #[arg(long)]
    ordinary: bool,
    #[arg(long)]
    var: Vec<String>,
    #[arg(long, default_value = "classical")]
    base: String,
    #[arg(long, value_enum, default_value_t = Kind::Lambda)]
    kind: Kind,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Lambda,
    Word,
}

impl From<Kind> for ShapeKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Lambda => ShapeKind::Multiset,
            Kind::Word => ShapeKind::Word,
        }
    }
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    flavor: String,
    #[arg(long)]
    sigma: String,
    /// Only this outer generator (default: every outer class with a filling).
    #[arg(long)]
    outer: Option<String>,
}

#[derive(Args)]
struct DecorationArgs {
    #[arg(long, default_value = "plain")]
    decoration: String,
    #[arg(long, default_value_t = 1)]
    colors: u32,
}

impl DecorationArgs {
    fn parse(&self) -> Result<(Decoration, Flavor), String> {
        let dec: Decoration = self.decoration.parse().map_err(|e| format!("--decoration: {e}"))?;
        if !(1..=4).contains(&self.colors) {
            return Err("--colors must be in 1..=4".into());
        }
        let flavor = dec.flavor(self.colors).map_err(|e| e.to_string())?;
        Ok((dec, flavor))
    }
}

#[derive(Args)]
struct BarArgs {
    /// Simplicial level of the listed classes (1 or 2).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    level: u8,
    #[arg(long, default_value_t = 4)]
    max_bottom: u32,
    #[command(flatten)]
    dec: DecorationArgs,
    /// Automorphism order of a forest instead, e.g. "y(x(a,a),b);z(c)".
    #[arg(long)]
    forest: Option<String>,
    /// Forest over a non-symmetric operad.
    #[arg(long)]
    nonsymmetric: bool,
}

#[derive(Args)]
struct TsArgs {
    #[arg(long, required_unless_present = "diagram")]
    sigma: Option<String>,
    /// A diagram as JSON: {"left":[…],"right":[…],"colors00"?,"colors11"?}.
    #[arg(long, conflicts_with = "sigma")]
    diagram: Option<String>,
    #[command(flatten)]
    dec: DecorationArgs,
    /// Read Δ off the enumerated 2-simplex classes.
    #[arg(long)]
    via_level2: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Laws,
    Routes,
    Ts,
    Operad,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Flavor name or "all".
    #[arg(long, default_value = "all")]
    flavor: String,
    /// Operad name, "cat:<table.json>", or "all".
    #[arg(long, default_value = "all")]
    operad: String,
    #[arg(long, default_value_t = 4)]
    bound: u64,
}

/// Failure before any computation (exit 2) or during it (exit 1).
enum Failure {
    Usage(String),
    Run(String),
}

impl From<plethyon::Error> for Failure {
    fn from(e: plethyon::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn usage<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Usage(format!("{what}: {e}"))
}

struct Ctx {
    format: Format,
    max_size: u64,
}

impl Ctx {
    fn cap(&self, what: &str, n: u64) -> Result<(), Failure> {
        if n > self.max_size {
            Err(Failure::Usage(format!("{what} {n} exceeds the size cap {} (PLETHYON_MAX_SIZE)", self.max_size)))
        } else {
            Ok(())
        }
    }
}

/// Adds `--key value` for every config entry whose flag is not on the command line.
fn apply_config(args: Vec<String>) -> Result<Vec<String>, String> {
    let path = args.iter().enumerate().find_map(|(i, a)| {
        a.strip_prefix("--config=").map(str::to_string).or_else(|| (a == "--config").then(|| args.get(i + 1).cloned()).flatten())
    });
    let Some(path) = path else { return Ok(args) };
    let text = std::fs::read_to_string(&path).map_err(|e| format!("--config {path}: {e}"))?;
    let cfg: Value = serde_json::from_str(&text).map_err(|e| format!("--config {path}: {e}"))?;
    let obj = cfg.as_object().ok_or_else(|| format!("--config {path}: expected a JSON object"))?;
    let mut out = args.clone();
    if let Some(cmd) = obj.get("command").and_then(Value::as_str) {
        if !args.iter().skip(1).any(|a| !a.starts_with('-') && ["delta", "substitute", "decompose", "bar", "ts", "verify"].contains(&a.as_str())) {
            out.insert(1, cmd.to_string());
        }
    }
    for (key, v) in obj {
        if key == "command" || key == "config" {
            continue;
        }
        let flag = format!("--{}", key.replace('_', "-"));
        if args.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}="))) {
            continue;
        }
        let scalar = |v: &Value| -> Result<String, String> {
            match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(format!("--config: unsupported value for {key}")),
            }
        };
        match v {
            Value::Bool(true) => out.push(flag),
            Value::Bool(false) | Value::Null => {}
            Value::Array(items) => {
                for item in items {
                    out.push(flag.clone());
                    out.push(scalar(item)?);
                }
            }
            other => {
                out.push(flag);
                out.push(scalar(other)?);
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let args = match apply_config(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ctx = Ctx { format: cli.format, max_size: cli.max_size };
    let result = match &cli.command {
        Command::Delta(a) => delta(&ctx, a),
        Command::Substitute(a) => substitute(&ctx, a),
        Command::Decompose(a) => decompose(&ctx, a),
        Command::Bar(a) => bar(&ctx, a),
        Command::Ts(a) => ts(&ctx, a),
        Command::Verify(a) => verify(&ctx, a),
    };
    match result {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn parse_flavor(name: &str) -> Result<Flavor, Failure> {
    flavor_by_name(name).map_err(usage("--flavor"))
}

fn parse_sigma(ctx: &Ctx, flavor: &Flavor, text: &str, flag: &str) -> Result<Generator, Failure> {
    let g = flavor.parse_generator(text).map_err(usage(flag))?;
    ctx.cap(flag, g.size() as u64)?;
    Ok(g)
}

/// The decoration and color count whose diagrams model `flavor`, if any.
fn ts_model(flavor: &Flavor) -> Option<(Decoration, u32)> {
    (1..=2).find_map(|c| Decoration::all().into_iter().find(|d| d.flavor(c).is_ok_and(|f| f == *flavor)).map(|d| (d, c)))
}

fn delta(ctx: &Ctx, a: &DeltaArgs) -> Outcome {
    let flavor = parse_flavor(&a.flavor)?;
    let sigma = parse_sigma(ctx, &flavor, &a.sigma, "--sigma")?;
    let restrict = a.restrict_right.as_deref().map(|r| flavor.parse_generator(r).map_err(usage("--restrict-right"))).transpose()?;
    let degree = a.degree.unwrap_or(sigma.size());
    let model = ts_model(&flavor);
    if a.route == Route::Ts && model.is_none() {
        return Err(Failure::Usage(format!("flavor {} has no surjection-diagram model", flavor.name)));
    }
    let mut routes: Vec<(&str, TensorElement)> = Vec::new();
    if matches!(a.route, Route::Combinatorial | Route::All) {
        routes.push(("combinatorial", delta_combinatorial(&flavor, &sigma)?));
    }
    if matches!(a.route, Route::Symbolic | Route::All) {
        routes.push(("symbolic", delta_symbolic(&flavor, &sigma, degree)?));
    }
    if let (Route::Ts | Route::All, Some((dec, colors))) = (a.route, model) {
        routes.push(("ts", ts_delta(&sigma, dec, colors)?));
    }
    if let Some(r) = &restrict {
        let r = BasisMonomial::single(r.clone());
        for (_, t) in &mut routes {
            *t = t.restrict_right(&r);
        }
    }
    let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
    let out = match ctx.format {
        Format::Json if routes.len() == 1 => json_out(tensor_to_json(&flavor, Some(&sigma), &routes[0].1)),
        Format::Json => {
            let per: serde_json::Map<String, Value> =
                routes.iter().map(|(n, t)| (n.to_string(), tensor_to_json(&flavor, Some(&sigma), t))).collect();
            json_out(json!({"flavor": flavor.name, "sigma": flavor.format_generator(&sigma), "agree": agree, "routes": per}))
        }
        Format::Text => {
            let mut s = String::new();
            for (i, (name, t)) in routes.iter().enumerate() {
                if routes.len() > 1 {
                    let _ = writeln!(s, "# {name}");
                } else if i == 0 && t.is_empty() {
                    s.push_str("0\n");
                }
                s.push_str(&t.format(&flavor));
            }
            if routes.len() > 1 {
                let _ = writeln!(s, "# routes {}", if agree { "agree" } else { "DISAGREE" });
            }
            s
        }
    };
    Ok((out, agree))
}

fn substitute(ctx: &Ctx, a: &SubstituteArgs) -> Outcome {
    let base = BaseCategory::from_spec(&a.base).map_err(usage("--base"))?;
    let kind: ShapeKind = a.kind.into();
    ctx.cap("--D", a.degree as u64)?;
    let g = parse_series(&base, kind, a.degree, &a.g).map_err(usage("--g"))?;
    let fs: Vec<Series> =
        a.f.iter().map(|f| parse_series(&base, kind, a.degree, f)).collect::<Result<_, _>>().map_err(usage("--f"))?;
    let h = if a.ordinary {
        let vars: Vec<_> = if a.var.is_empty() {
            vec![base.identity(g.color())]
        } else {
            a.var.iter().map(|v| parse_arrow(&base, v.trim_start_matches('x'))).collect::<Result<_, _>>().map_err(usage("--var"))?
        };
        substitute_ordinary(&g, &vars, &fs, a.degree)?
    } else {
        if !a.var.is_empty() {
            return Err(Failure::Usage("--var only applies to --ordinary".into()));
        }
        substitute_plethystic_family(&g, &fs, a.degree, None)?
    };
    let out = match ctx.format {
        Format::Text => format!("{}\n", format_series(&h)?),
        Format::Json => json_out(series_to_json(&h, None)?),
    };
    Ok((out, true))
}

fn decompose(ctx: &Ctx, a: &DecomposeArgs) -> Outcome {
    let flavor = parse_flavor(&a.flavor)?;
    let sigma = parse_sigma(ctx, &flavor, &a.sigma, "--sigma")?;
    let outers: Vec<Generator> = match &a.outer {
        Some(o) => vec![flavor.parse_generator(o).map_err(usage("--outer"))?],
        None => {
            let mut v: Vec<Generator> =
                delta_combinatorial(&flavor, &sigma)?.iter().flat_map(|(_, r, _)| r.factors.clone()).collect();
            v.sort();
            v.dedup();
            v
        }
    };
    let mut rows = Vec::new();
    for outer in &outers {
        rows.extend(enumerate_decompositions(&flavor, &sigma, outer)?);
    }
    let out = match ctx.format {
        Format::Json => json_out(Value::Array(
            rows.iter()
                .map(|d| {
                    json!({
                        "outer": flavor.format_generator(&d.outer),
                        "inner": d.inner.factors.iter().map(|g| flavor.format_generator(g)).collect::<Vec<_>>(),
                        "fillings": d.fillings,
                        "placements": d.placements.to_string(),
                        "weight": plethyon::json::rational_to_json(&d.weight),
                    })
                })
                .collect(),
        )),
        Format::Text => {
            let mut s = String::new();
            for d in &rows {
                let _ = writeln!(
                    s,
                    "outer {}  inner {}  fillings {}  placements {}  weight {}",
                    flavor.format_generator(&d.outer),
                    flavor.format_monomial(&d.inner),
                    d.fillings,
                    d.placements,
                    format_rational(&d.weight)
                );
            }
            s
        }
    };
    Ok((out, true))
}

fn bar(ctx: &Ctx, a: &BarArgs) -> Outcome {
    if let Some(text) = &a.forest {
        let forest = parse_forest(text).map_err(usage("--forest"))?;
        let aut = forest_aut_order(&forest, !a.nonsymmetric);
        let out = match ctx.format {
            Format::Text => format!("{aut}\n"),
            Format::Json => json_out(json!({"forest": text, "symmetric": !a.nonsymmetric, "aut": aut.to_string()})),
        };
        return Ok((out, true));
    }
    let (dec, flavor) = a.dec.parse().map_err(Failure::Usage)?;
    ctx.cap("--max-bottom", a.max_bottom as u64)?;
    if a.max_bottom > MAX_BOTTOM {
        return Err(Failure::Usage(format!("--max-bottom is limited to {MAX_BOTTOM}")));
    }
    let show = |g: &Generator| flavor.format_generator(g);
    let out = if a.level == 1 {
        let classes = enumerate_ts(a.max_bottom, dec, a.dec.colors)?;
        match ctx.format {
            Format::Json => json_out(Value::Array(
                classes
                    .iter()
                    .map(|c| json!({"key": show(&c.key), "color": c.key.color, "aut": c.aut.to_string(), "diagram": c.representative.to_json()}))
                    .collect(),
            )),
            Format::Text => classes.iter().fold(String::new(), |mut s, c| {
                let _ = writeln!(s, "{}  aut {}", show(&c.key), c.aut);
                s
            }),
        }
    } else {
        let classes = enumerate_ts_level2(a.max_bottom, dec, a.dec.colors)?;
        match ctx.format {
            Format::Json => json_out(Value::Array(
                classes
                    .iter()
                    .map(|c| {
                        json!({
                            "inner": c.inner.iter().map(show).collect::<Vec<_>>(),
                            "outer": show(&c.outer),
                            "composite": show(&c.composite),
                            "aut": c.aut.to_string(),
                        })
                    })
                    .collect(),
            )),
            Format::Text => classes.iter().fold(String::new(), |mut s, c| {
                let inner: Vec<String> = c.inner.iter().map(show).collect();
                let _ = writeln!(s, "{} <- {} | {}  aut {}", show(&c.composite), inner.join(" "), show(&c.outer), c.aut);
                s
            }),
        }
    };
    Ok((out, true))
}

fn ts(ctx: &Ctx, a: &TsArgs) -> Outcome {
    let (dec, flavor) = a.dec.parse().map_err(Failure::Usage)?;
    if let Some(text) = &a.diagram {
        let d = Level1::from_json(text).map_err(usage("--diagram"))?;
        ctx.cap("diagram bottom", d.bottom_size() as u64)?;
        let nf = d.normal_form(dec);
        let keys: Vec<String> = d.key(dec).iter().map(|g| flavor.format_generator(g)).collect();
        let aut = d.aut(dec);
        let out = match ctx.format {
            Format::Json => json_out(json!({"components": keys, "aut": aut.to_string(), "normal_form": nf.to_json()})),
            Format::Text => format!("components {}\naut {}\nnormal form {}\n", keys.join(" "), aut, nf.to_json()),
        };
        return Ok((out, true));
    }
    let sigma = parse_sigma(ctx, &flavor, a.sigma.as_deref().unwrap_or_default(), "--sigma")?;
    if a.via_level2 && sigma.shape.weight(&flavor.base) > MAX_BOTTOM as u64 {
        return Err(Failure::Usage(format!("--via-level2 needs σ of weight ≤ {MAX_BOTTOM}")));
    }
    let t = if a.via_level2 { ts_delta_via_level2(&sigma, dec, a.dec.colors)? } else { ts_delta(&sigma, dec, a.dec.colors)? };
    let out = match ctx.format {
        Format::Json => json_out(tensor_to_json(&flavor, Some(&sigma), &t)),
        Format::Text => t.format(&flavor),
    };
    Ok((out, true))
}

struct SuiteLine {
    name: String,
    passed: bool,
    detail: String,
    witnesses: Vec<String>,
}

fn verify(ctx: &Ctx, a: &VerifyArgs) -> Outcome {
    ctx.cap("--bound", a.bound)?;
    let flavors: Vec<Flavor> = if a.flavor == "all" { Flavor::all() } else { vec![parse_flavor(&a.flavor)?] };
    let operads: Vec<Box<dyn OperadInstance + Send + Sync>> = if a.operad == "all" {
        BUILTIN_OPERADS.iter().map(|n| builtin_operad(n).expect("builtin")).collect()
    } else {
        vec![load_operad(&a.operad)?]
    };
    let mut lines = Vec::new();
    if matches!(a.suite, Suite::Laws | Suite::All) {
        for f in &flavors {
            let r = check_bialgebra_laws(f, &LawOptions { max_weight: a.bound, ..Default::default() })?;
            let checks: usize = r.checks.values().sum();
            lines.push(SuiteLine {
                name: format!("laws {}", f.name),
                passed: r.passed(),
                detail: format!("{} generators, {checks} checks", r.generators),
                witnesses: r.failures.iter().map(|x| format!("{}: {}", x.law, x.element)).collect(),
            });
        }
    }
    if matches!(a.suite, Suite::Routes | Suite::All) {
        for f in &flavors {
            let gens = enumerate_generators(f, a.bound)?;
            let mut bad = Vec::new();
            for g in &gens {
                if delta_symbolic(f, g, g.size())? != delta_combinatorial(f, g)? {
                    bad.push(f.format_generator(g));
                }
            }
            lines.push(SuiteLine {
                name: format!("routes {}", f.name),
                passed: bad.is_empty(),
                detail: format!("{} generators", gens.len()),
                witnesses: bad,
            });
        }
    }
    if matches!(a.suite, Suite::Ts | Suite::All) {
        for dec in Decoration::all() {
            for colors in 1..=2 {
                let f = dec.flavor(colors)?;
                if a.flavor != "all" && flavors.iter().all(|x| *x != f) {
                    continue;
                }
                let gens = enumerate_generators(&f, a.bound)?;
                let mut bad = Vec::new();
                for g in &gens {
                    if ts_delta(g, dec, colors)? != delta_combinatorial(&f, g)? {
                        bad.push(f.format_generator(g));
                    }
                }
                lines.push(SuiteLine {
                    name: format!("ts {dec} colors={colors}"),
                    passed: bad.is_empty(),
                    detail: format!("{} generators", gens.len()),
                    witnesses: bad,
                });
            }
        }
    }
    if matches!(a.suite, Suite::Operad | Suite::All) {
        let bound = a.bound.min(3);
        for q in &operads {
            let r = axiom_check(q.as_ref(), bound);
            lines.push(SuiteLine {
                name: format!("operad {}", r.operad),
                passed: r.passed(),
                detail: format!("bound {bound}, {} operations, {} checks", r.operations, r.checks),
                witnesses: r.violations.iter().map(|v| v.to_string()).collect(),
            });
        }
    }
    let passed = lines.iter().all(|l| l.passed);
    let out = match ctx.format {
        Format::Json => json_out(json!({
            "passed": passed,
            "results": lines.iter().map(|l| json!({"name": l.name, "passed": l.passed, "detail": l.detail, "witnesses": l.witnesses})).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            for l in &lines {
                let _ = writeln!(s, "{} {}  ({})", if l.passed { "PASS" } else { "FAIL" }, l.name, l.detail);
                for w in &l.witnesses {
                    let _ = writeln!(s, "    {w}");
                }
            }
            s
        }
    };
    Ok((out, passed))
}

fn load_operad(name: &str) -> Result<Box<dyn OperadInstance + Send + Sync>, Failure> {
    if let Some(path) = name.strip_prefix("cat:").filter(|p| p.ends_with(".json")) {
        let text = std::fs::read_to_string(path).map_err(usage("--operad"))?;
        let cat = FiniteCategory::from_json(&text).map_err(usage("--operad"))?;
        return Ok(Box::new(category_to_operad(cat, false, true)));
    }
    builtin_operad(name).map_err(usage("--operad"))
}
