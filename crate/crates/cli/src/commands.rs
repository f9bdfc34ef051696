use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use serde_json::{json, Value};
use wlp_core::betti::{
    dominates, format_numerator, hilbert_numerator_check, is_consecutive_cancellation, koszul_betti,
    BettiTable,
};
use wlp_core::decompose::{green_bound_check, stanley_decompose};
use wlp_core::enumerate::monomial_ideal_generators;
use wlp_core::hilbert::enumerate_o_sequences;
use wlp_core::ideal::{lex_ideal, GradedQuotient};
use wlp_core::io::{parse_ideal, parse_points, write_ideal};
use wlp_core::macaulay::{expand, growth_bound, lower_both, lower_shift};
use wlp_core::points::ideal_from_points_in;
use wlp_core::verify::{self, Outcome, SweepConfig, SweepMode, SweepSummary};
use wlp_core::wlp::{has_wlp, is_level, random_linear_forms, socle};
use wlp_core::{FormChoice, GradedIdeal, HilbertFunction, PolyRing, Polynomial};

use crate::error::CliError;
use crate::{Cli, Command, CompareMode, Global};

/// What a command prints, in both formats, and its exit code.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    fn new(text: String, json: Value, code: u8) -> Self {
        Report { text, json, code }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Classify { hf } => classify(hf),
        Command::Expand { n, i } => expand_cmd(n, *i),
        Command::Lexideal { hf, ring } => lexideal(hf, *ring),
        Command::PointsIdeal { points, degree, power } => points_ideal(g, points, *degree, *power),
        Command::Wlp { ideal, linear_form } => wlp(g, ideal, linear_form.as_deref()),
        Command::Decompose { ideal, linear_form } => decompose(g, ideal, linear_form.as_deref()),
        Command::Green { ideal, linear_form } => green(g, ideal, linear_form.as_deref()),
        Command::Socle { ideal } => socle_cmd(g, ideal),
        Command::Betti { ideal } => betti(g, ideal),
        Command::BettiCompare { first, second, mode, ring } => betti_compare(first, second, *mode, *ring),
        Command::EnumerateHf { codim, max_degree, max_value } => enumerate_hf(*codim, *max_degree, *max_value),
        Command::EnumerateIdeals { hf, limit, count } => enumerate_ideals(hf, *limit, *count),
        Command::VerifyTheorem5 { codim, max_degree, max_value, hf, exhaustive: _, sample } => {
            verify_theorem5(g, *codim, *max_degree, *max_value, hf.as_deref(), *sample)
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_ideal(g: &Global, path: &Path) -> Result<GradedIdeal, CliError> {
    Ok(parse_ideal(&read(path)?, g.field)?)
}

fn load_quotient(g: &Global, path: &Path) -> Result<GradedQuotient, CliError> {
    Ok(load_ideal(g, path)?.quotient(g.dcap)?)
}

fn parse_hf(s: &str) -> Result<HilbertFunction, CliError> {
    Ok(s.parse()?)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Exact integers as JSON numbers when they fit, strings otherwise.
fn big_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn field_note(g: &Global) -> String {
    if g.field.is_exact() {
        String::new()
    } else {
        format!("field: {} (heuristic)\n", g.field)
    }
}

fn classify(hf: &str) -> Result<Report, CliError> {
    let h = parse_hf(hf)?;
    let mut text = format!("hilbert function: {h}\n");
    if !h.is_o_sequence() {
        text.push_str("o-sequence: no\n");
        return Ok(Report::new(text, json!({ "hf": h, "o_sequence": false }), 2));
    }
    let c = h.classify()?;
    writeln!(text, "o-sequence: yes\nt: {}", c.t).unwrap();
    let mut conditions = Vec::new();
    for &(i, holds) in &c.conditions {
        let both = lower_both(h.get(i), i as u64)?;
        writeln!(text, "i = {i}: h_{} = {}, lower_both(h_{i}, {i}) = {both}: {}", i - 1, h.get(i - 1), yes(holds)).unwrap();
        conditions.push(json!({ "i": i, "h_prev": h.get(i - 1), "lower_both": big_json(&both), "holds": holds }));
    }
    match c.first_failure {
        Some(i) => writeln!(text, "forces wlp: no (first failure at i = {i})").unwrap(),
        None => text.push_str("forces wlp: yes\n"),
    }
    let value = json!({
        "hf": h,
        "o_sequence": true,
        "t": c.t,
        "conditions": conditions,
        "forces_wlp": c.forces_wlp,
        "first_failure": c.first_failure,
    });
    Ok(Report::new(text, value, if c.forces_wlp { 0 } else { 1 }))
}

fn expand_cmd(n: &str, i: u64) -> Result<Report, CliError> {
    let n: BigUint = n.trim().parse().map_err(|_| CliError::Usage(format!("`{n}` is not a nonnegative integer")))?;
    let e = expand(n.clone(), i)?;
    let shift = lower_shift(n.clone(), i)?;
    let both = lower_both(n.clone(), i)?;
    let growth = growth_bound(n.clone(), i)?;
    let text = format!("expansion: {e}\nlower_shift: {shift}\nlower_both: {both}\ngrowth_bound: {growth}\n");
    let terms: Vec<Value> = e.terms().iter().map(|(top, bottom)| json!([big_json(top), bottom])).collect();
    let value = json!({
        "n": big_json(&n),
        "i": i,
        "expansion": e.to_string(),
        "terms": terms,
        "lower_shift": big_json(&shift),
        "lower_both": big_json(&both),
        "growth_bound": big_json(&growth),
    });
    Ok(Report::new(text, value, 0))
}

fn generator_strings(ideal: &GradedIdeal) -> Vec<String> {
    ideal.generators().iter().map(Polynomial::to_string).collect()
}

fn lexideal(hf: &str, ring: Option<usize>) -> Result<Report, CliError> {
    let h = parse_hf(hf)?;
    let r = ring.unwrap_or(h.codimension() as usize);
    if r == 0 {
        return Err(CliError::Usage("the ring needs at least one variable".into()));
    }
    let lex = lex_ideal(PolyRing::new(r), &h)?;
    let text = format!("# lex ideal of {h}\n{}", write_ideal(lex.ring(), lex.generators()));
    Ok(Report::new(text, json!({ "ring": r, "hf": h, "generators": generator_strings(&lex) }), 0))
}

fn points_ideal(g: &Global, path: &Path, degree: Option<usize>, power: Option<usize>) -> Result<Report, CliError> {
    let points = parse_points(&read(path)?)?;
    let r = points[0].len();
    if r == 0 {
        return Err(CliError::Usage("points need at least one coordinate".into()));
    }
    if power == Some(0) {
        return Err(CliError::Usage("--power must be at least 1".into()));
    }
    let d_max = degree.unwrap_or(match power {
        Some(s) => s - 1,
        None => points.len(),
    });
    let ring = PolyRing::new(r);
    let mut ideal = ideal_from_points_in(ring, &points, d_max, g.field)?;
    let points_hf = ideal.hilbert_values(d_max);
    let mut text = format!("# {} points, hilbert function through degree {d_max}: {}\n", points.len(), join(&points_hf));
    let mut quotient_hf = None;
    if let Some(s) = power {
        ideal = ideal.add_maximal_power(s);
        let h = ideal.clone().quotient(s.max(g.dcap))?.hilbert_function().clone();
        writeln!(text, "# plus (x1,...,x{r})^{s}: hilbert function {h}").unwrap();
        quotient_hf = Some(h);
    }
    text.push_str(&write_ideal(ideal.ring(), ideal.generators()));
    let value = json!({
        "ring": r,
        "points": points.len(),
        "degree": d_max,
        "points_hf": points_hf,
        "power": power,
        "quotient_hf": quotient_hf,
        "generators": generator_strings(&ideal),
    });
    Ok(Report::new(text, value, 0))
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn parse_form(form: &str, r: usize) -> Result<Polynomial, CliError> {
    let p = Polynomial::parse(form, r)?;
    if p.is_zero() || p.homogeneous_degree() != Some(1) {
        return Err(wlp_core::AlgebraError::NotLinear(form.to_string()).into());
    }
    Ok(p)
}

/// The given form, else `x_1 + ... + x_r` for monomial ideals and a seeded
/// random form otherwise.
fn default_form(g: &Global, ideal: &GradedIdeal, form: Option<&str>) -> Result<Polynomial, CliError> {
    let r = ideal.ring().nvars();
    match form {
        Some(f) => parse_form(f, r),
        None if ideal.is_monomial() => Ok(Polynomial::sum_of_variables(r)),
        None => Ok(random_linear_forms(r, 1, g.seed).remove(0)),
    }
}

fn wlp(g: &Global, path: &Path, form: Option<&str>) -> Result<Report, CliError> {
    let a = load_quotient(g, path)?;
    let choice = match form {
        Some(f) => FormChoice::Given(parse_form(f, a.ring().nvars())?),
        None => FormChoice::Generic { seed: g.seed },
    };
    let report = has_wlp(&a, &choice)?;
    let mut text = format!("{}hilbert function: {}\nlinear form: {}\n", field_note(g), a.hilbert_function(), report.form);
    writeln!(text, "{:>3} {:>5} {:>7} {:>5}  maximal", "d", "h_d", "h_d+1", "rank").unwrap();
    for r in &report.degrees {
        writeln!(text, "{:>3} {:>5} {:>7} {:>5}  {}", r.degree, r.h, r.h_next, r.rank, yes(r.is_maximal())).unwrap();
    }
    match report.witness {
        Some(d) => writeln!(text, "wlp: no (witness degree {d})").unwrap(),
        None => text.push_str("wlp: yes\n"),
    }
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["hilbert_function"] = json!(a.hilbert_function());
    Ok(Report::new(text, value, if report.verdict { 0 } else { 1 }))
}

fn decompose(g: &Global, path: &Path, form: Option<&str>) -> Result<Report, CliError> {
    let ideal = load_ideal(g, path)?;
    let l = default_form(g, &ideal, form)?;
    let s = stanley_decompose(&ideal, &l, g.dcap)?;
    let mut text = format!("{}linear form: {l}\n{:>3} {:>5} {:>5} {:>5}\n", field_note(g), "d", "h", "b", "c");
    for d in 0..s.h.len() {
        let b = s.b.get(d).copied().unwrap_or(0);
        writeln!(text, "{d:>3} {:>5} {b:>5} {:>5}", s.h.get(d), s.c.get(d)).unwrap();
    }
    text.push_str("h = b + c: yes\n");
    let value = json!({ "form": l.to_string(), "h": s.h, "b": s.b, "c": s.c, "exact": true });
    Ok(Report::new(text, value, 0))
}

fn green(g: &Global, path: &Path, form: Option<&str>) -> Result<Report, CliError> {
    let ideal = load_ideal(g, path)?;
    let l = default_form(g, &ideal, form)?;
    let report = green_bound_check(&ideal, &l, g.dcap)?;
    let mut text = format!("{}linear form: {l}\n{:>3} {:>5} {:>5}  ok\n", field_note(g), "d", "c_d", "bound");
    for e in &report.entries {
        writeln!(text, "{:>3} {:>5} {:>5}  {}", e.degree, e.c, e.bound, yes(e.c <= e.bound)).unwrap();
    }
    if report.violations.is_empty() {
        text.push_str("violations: none\n");
    } else {
        writeln!(text, "violations: {}", report.violations.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
            .unwrap();
    }
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["form"] = json!(l.to_string());
    Ok(Report::new(text, value, if report.violations.is_empty() { 0 } else { 1 }))
}

fn socle_cmd(g: &Global, path: &Path) -> Result<Report, CliError> {
    let a = load_quotient(g, path)?;
    let soc = socle(&a);
    let level = is_level(&a);
    let mut text = format!("{}hilbert function: {}\n", field_note(g), a.hilbert_function());
    for (d, dim) in &soc {
        writeln!(text, "socle degree {d}: {dim}").unwrap();
    }
    writeln!(text, "level: {}", yes(level)).unwrap();
    let socle_json: serde_json::Map<String, Value> = soc.iter().map(|(d, v)| (d.to_string(), json!(v))).collect();
    let value = json!({ "hilbert_function": a.hilbert_function(), "socle": socle_json, "level": level });
    Ok(Report::new(text, value, 0))
}

fn betti(g: &Global, path: &Path) -> Result<Report, CliError> {
    let a = load_quotient(g, path)?;
    let table = koszul_betti(&a);
    let numerator = format_numerator(&table.euler_numerator());
    let consistent = hilbert_numerator_check(&table, a.hilbert_function());
    let text = format!(
        "{}{}\nhilbert function: {}\nnumerator: {numerator}\nnumerator matches: {}\n",
        field_note(g),
        table.to_diagram(),
        a.hilbert_function(),
        yes(consistent)
    );
    let value = json!({
        "betti": table.to_json(),
        "diagram": table.to_diagram(),
        "hilbert_function": a.hilbert_function(),
        "numerator": numerator,
        "numerator_matches": consistent,
    });
    Ok(Report::new(text, value, 0))
}

fn load_table(path: &Path, ring: Option<usize>) -> Result<BettiTable, CliError> {
    Ok(BettiTable::parse(&read(path)?, ring)?)
}

fn betti_compare(first: &Path, second: &Path, mode: CompareMode, ring: Option<usize>) -> Result<Report, CliError> {
    let (mut a, mut b) = (load_table(first, ring)?, load_table(second, ring)?);
    if ring.is_none() {
        // tables read without a ring size get the larger inferred one
        let r = a.nvars().max(b.nvars());
        a = BettiTable::from_entries(r, a.entries());
        b = BettiTable::from_entries(r, b.entries());
    }
    match mode {
        CompareMode::Dominate => {
            let holds = dominates(&a, &b)?;
            let text = format!("dominates: {}\n", yes(holds));
            Ok(Report::new(text, json!({ "mode": "dominate", "holds": holds }), if holds { 0 } else { 1 }))
        }
        CompareMode::Cancel => {
            let report = is_consecutive_cancellation(&b, &a)?;
            let mut text = format!("cancellation: {}\n", yes(report.holds));
            for c in &report.witnesses {
                writeln!(text, "c({},{}) = {}", c.i, c.j, c.amount).unwrap();
            }
            let value = json!({ "mode": "cancel", "holds": report.holds, "witnesses": report.witnesses });
            Ok(Report::new(text, value, if report.holds { 0 } else { 1 }))
        }
    }
}

fn enumerate_hf(codim: u64, max_degree: usize, max_value: u64) -> Result<Report, CliError> {
    if codim == 0 || max_degree == 0 || max_value == 0 {
        return Err(CliError::Usage("all bounds must be at least 1".into()));
    }
    let mut text = String::new();
    let mut items = Vec::new();
    for h in enumerate_o_sequences(codim, max_degree, max_value) {
        let forces = h.forces_wlp()?;
        writeln!(text, "{h} {}", if forces { "forces" } else { "does-not-force" }).unwrap();
        items.push(json!({ "hf": h, "forces_wlp": forces }));
    }
    writeln!(text, "total: {}", items.len()).unwrap();
    Ok(Report::new(text, json!({ "count": items.len(), "sequences": items }), 0))
}

fn enumerate_ideals(hf: &str, limit: Option<u64>, count_only: bool) -> Result<Report, CliError> {
    let h = parse_hf(hf)?;
    let ring = PolyRing::new(h.codimension().max(1) as usize);
    let mut all = monomial_ideal_generators(ring, &h)?;
    if let Some(n) = limit {
        all.truncate(n as usize);
    }
    let lists: Vec<Vec<String>> = all.iter().map(|g| g.iter().map(ToString::to_string).collect()).collect();
    let mut text = String::new();
    if !count_only {
        for l in &lists {
            writeln!(text, "({})", l.join(", ")).unwrap();
        }
    }
    writeln!(text, "total: {}", lists.len()).unwrap();
    let value = if count_only {
        json!({ "hf": h, "count": lists.len() })
    } else {
        json!({ "hf": h, "count": lists.len(), "ideals": lists })
    };
    Ok(Report::new(text, value, 0))
}

fn verify_theorem5(
    g: &Global,
    codim: Option<u64>,
    max_degree: Option<usize>,
    max_value: Option<u64>,
    hf: Option<&str>,
    sample: Option<usize>,
) -> Result<Report, CliError> {
    let only = hf.map(parse_hf).transpose()?;
    if let (Some(h), Some(r)) = (&only, codim) {
        if h.codimension() != r {
            return Err(CliError::Usage(format!("--codim {r} does not match h_1 = {}", h.codimension())));
        }
    }
    let cfg = SweepConfig {
        codim: codim.unwrap_or(0),
        max_socle_degree: max_degree.unwrap_or(0),
        max_value: max_value.unwrap_or(0),
        mode: sample.map_or(SweepMode::Exhaustive, SweepMode::Sample),
        seed: g.seed,
        only,
        field: g.field,
        force: g.force,
    };
    let plan = verify::plan(&cfg)?;
    if !g.json {
        // announced before the (possibly long) run starts
        let mut out = std::io::stdout().lock();
        let _ = write!(out, "{}estimated ideals: {}\n", field_note(g), estimate_text(plan.estimate));
        let _ = out.flush();
    }
    let summary = verify::run(&cfg, plan)?;
    let text = render_summary(&summary);
    let code = if summary.is_clean() { 0 } else { 1 };
    Ok(Report::new(text, serde_json::to_value(&summary).expect("serializable"), code))
}

fn estimate_text(n: u64) -> String {
    if n > verify::GUARD_LIMIT {
        format!("more than {}", verify::GUARD_LIMIT)
    } else {
        n.to_string()
    }
}

fn render_summary(s: &SweepSummary) -> String {
    let mut text = String::new();
    let width = s.records.iter().map(|r| r.hf.to_string().len()).max().unwrap_or(0).max(16);
    writeln!(text, "{:<width$} {:>3} {:>6} {:>7} {:>8} {:>5}  outcome", "hilbert function", "t", "forces", "ideals", "failures", "lex")
        .unwrap();
    for r in &s.records {
        let outcome = match r.outcome {
            Outcome::Confirmed => "confirmed",
            Outcome::Contradiction => "CONTRADICTION",
            Outcome::Unresolved => "unresolved",
        };
        writeln!(
            text,
            "{:<width$} {:>3} {:>6} {:>7} {:>8} {:>5}  {outcome}",
            r.hf.to_string(),
            r.t,
            yes(r.forces_wlp),
            r.ideals_checked,
            r.wlp_failures,
            if r.lex_has_wlp { "wlp" } else { "fails" },
        )
        .unwrap();
        if let (false, Some(example)) = (r.forces_wlp, &r.failing_example) {
            writeln!(text, "    no wlp: {example}").unwrap();
        }
        for v in &r.violations {
            let at = v.degree.map(|d| format!(" in degree {d}")).unwrap_or_default();
            writeln!(text, "    violation: {:?}{at} for {}", v.kind, v.ideal).unwrap();
        }
    }
    writeln!(text, "hilbert functions: {} ({} forcing)", s.hilbert_functions, s.forcing).unwrap();
    writeln!(text, "ideals checked: {}", s.ideals).unwrap();
    writeln!(text, "contradictions: {}", s.contradictions).unwrap();
    if s.unresolved > 0 {
        writeln!(text, "unresolved (sampling found no failure): {}", s.unresolved).unwrap();
    }
    writeln!(text, "invariant violations: {}", s.violations).unwrap();
    text
}
