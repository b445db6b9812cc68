use std::time::Instant;

use grassmann_pentagon::gaussian::{
    big_matrix, form, integrate_out_aux, matrix_a, minor_comparison, pentagon_side_gaussian,
};
use grassmann_pentagon::pentagon::{
    composite_explore, pentagon_side, random_points, residual, residual_at_points,
};
use grassmann_pentagon::weights::{weight, PENTAGON_TETRAHEDRA};
use grassmann_pentagon::{
    DeformationParams, Error, Exec, GeneratorId, ModPoint, Monomial, Param, PrimeField,
    RationalFunctions, Result, Ring, Setting, Side, Tetrahedron, WeightKind,
};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::args::{Common, Mode, ShowObject, SideArg};
use crate::report::{
    degrees_json, degrees_text, matrix_json, point_json, point_text, terms, terms_json, yes_no,
    Report, Status,
};

const RESIDUAL_LISTING: usize = 10;

fn param_text(p: &Param) -> String {
    match p {
        Param::Symbolic => "sym".into(),
        Param::Value(c) => c.to_string(),
    }
}

fn params(c: &Common) -> DeformationParams {
    DeformationParams {
        lambda: c.lambda.clone(),
        mu: c.mu.clone(),
    }
}

fn exec(c: &Common) -> Exec {
    if c.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn config_echo(c: &Common) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("weight".into(), json!(c.weight.name()));
    m.insert("mode".into(), json!(c.mode.name()));
    if c.mode == Mode::Modp {
        m.insert("prime".into(), json!(c.prime));
        m.insert("trials".into(), json!(c.trials));
        m.insert("seed".into(), json!(c.seed));
    }
    m.insert("lambda".into(), json!(param_text(&c.lambda)));
    m.insert("mu".into(), json!(param_text(&c.mu)));
    let zeta = match &c.zeta {
        Some(z) => json!(z.iter().map(|v| v.to_string()).collect::<Vec<_>>()),
        None => json!("sym"),
    };
    m.insert("zeta".into(), zeta);
    m
}

fn zeta(c: &Common) -> Result<Option<[BigRational; 5]>> {
    match &c.zeta {
        None => Ok(None),
        Some(v) => {
            v.clone().try_into().map(Some).map_err(|v: Vec<_>| {
                Error::Parse(format!("--zeta needs 5 values, got {}", v.len()))
            })
        }
    }
}

fn symbolic_setting(c: &Common) -> Result<Setting<RationalFunctions>> {
    Setting::symbolic_with(&params(c), zeta(c)?.as_ref())
}

fn field(c: &Common) -> Result<PrimeField> {
    PrimeField::new(c.prime)
}

/// Seeded points for modp mode, validated up front.
fn mod_points(c: &Common, field: PrimeField, trials: usize) -> Result<Vec<ModPoint>> {
    if trials == 0 {
        return Err(Error::Parse(
            "modp mode needs --trials of at least 1".into(),
        ));
    }
    let z = match zeta(c)? {
        None => None,
        Some(z) => {
            let mut out = [0u64; 5];
            for (o, v) in out.iter_mut().zip(&z) {
                *o = field.from_rational(v)?.0;
            }
            Some(out)
        }
    };
    let points = random_points(field, &params(c), z, trials, c.seed)?;
    for p in &points {
        Setting::modular(field, p)?;
    }
    Ok(points)
}

fn parse_monomial(s: &str) -> Result<Monomial> {
    let gens: Vec<GeneratorId> = s
        .split(',')
        .map(|f| GeneratorId::parse_face(f.trim()))
        .collect::<Result<_>>()?;
    // Faces are unoriented, so the reordering sign is dropped.
    Monomial::from_word(&gens)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::BadLabel(format!("repeated face in `{s}`")))
}

fn check_support(side: Side, m: &Monomial) -> Result<()> {
    let fail = |reason: String| Error::WrongSupport {
        monomial: m.to_string(),
        side: side.name(),
        reason,
    };
    for g in m.generators() {
        if side.inner_faces().contains(g) {
            return Err(fail(format!("{g} is integrated out on this side")));
        }
        if !side.faces().contains(g) {
            return Err(fail(format!("{g} is not a face of this side")));
        }
    }
    Ok(())
}

fn side_of(s: SideArg) -> Side {
    match s {
        SideArg::Lhs => Side::Lhs,
        SideArg::Rhs => Side::Rhs,
    }
}

/// Symbolic mode runs once in the rational-function field; modp mode runs at
/// the first seeded point.
fn with_setting<T>(
    c: &Common,
    r: &mut Report,
    symbolic: impl FnOnce(&Setting<RationalFunctions>, &mut Report) -> Result<T>,
    modular: impl FnOnce(&Setting<PrimeField>, &mut Report) -> Result<T>,
) -> Result<T> {
    match c.mode {
        Mode::Symbolic => symbolic(&symbolic_setting(c)?, r),
        Mode::Modp => {
            let f = field(c)?;
            let point = mod_points(c, f, 1)?[0];
            r.line(format!("point: {}", point_text(&point)));
            r.set("point", point_json(&point));
            modular(&Setting::modular(f, &point)?, r)
        }
    }
}

pub fn verify(c: &Common) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("verify", config_echo(c));
    match c.mode {
        Mode::Symbolic => verify_symbolic(c, &mut r)?,
        Mode::Modp => verify_modp(c, &mut r)?,
    }
    Ok(r.finish(start, c.timings))
}

fn verify_symbolic(c: &Common, r: &mut Report) -> Result<()> {
    let report = if c.weight == WeightKind::Composite {
        let comp = composite_explore(&params(c), zeta(c)?.as_ref())?;
        if c.lambda == Param::Symbolic && c.mu == Param::Symbolic {
            r.line(format!(
                "residual divisible by lambda*mu: {}",
                yes_no(comp.divisible_by_lambda_mu)
            ));
            r.set("divisible_by_lambda_mu", json!(comp.divisible_by_lambda_mu));
        }
        comp.report
    } else {
        residual(&symbolic_setting(c)?, c.weight)?
    };
    for (name, x, d) in [
        ("lhs", &report.lhs, report.lhs_degrees()),
        ("rhs", &report.rhs, report.rhs_degrees()),
    ] {
        r.line(format!(
            "{name}: {} monomials (degrees {})",
            x.len(),
            degrees_text(&d)
        ));
        r.set(
            name,
            json!({ "monomials": x.len(), "degrees": degrees_json(&d) }),
        );
    }
    list_residual(r, &report.residual);
    r.status(Status::from_check(report.zero));
    Ok(())
}

fn list_residual<R: Ring>(r: &mut Report, res: &grassmann_pentagon::GrassmannElement<R>) {
    r.line(format!("residual: {} monomials", res.len()));
    let listed = terms(res, RESIDUAL_LISTING);
    if !listed.is_empty() {
        r.line(format!("first {} residual terms:", listed.len()));
        for (m, coef) in &listed {
            r.line(format!("  {m}: {coef}"));
        }
    }
    r.set(
        "residual",
        json!({
            "monomials": res.len(),
            "degrees": degrees_json(&res.degree_counts()),
            "first_terms": terms_json(&listed),
        }),
    );
}

fn verify_modp(c: &Common, r: &mut Report) -> Result<()> {
    let f = field(c)?;
    let points = mod_points(c, f, c.trials)?;
    let outcomes = residual_at_points(c.weight, f, &points, exec(c))?;
    let zero = outcomes.iter().filter(|o| o.report.zero).count();
    let largest = outcomes
        .iter()
        .map(|o| o.report.residual.len())
        .max()
        .unwrap_or(0);
    r.line(format!(
        "points with zero residual: {zero}/{}",
        outcomes.len()
    ));
    r.line(format!(
        "residual: {largest} monomials (largest over all points)"
    ));
    r.set("points_total", json!(outcomes.len()));
    r.set("points_zero", json!(zero));
    r.set("largest_residual_monomials", json!(largest));
    if let Some(bad) = outcomes.iter().find(|o| !o.report.zero) {
        r.line(format!("first failing point: {}", point_text(&bad.point)));
        let listed = terms(&bad.report.residual, RESIDUAL_LISTING);
        r.line(format!("first {} residual terms there:", listed.len()));
        for (m, coef) in &listed {
            r.line(format!("  {m}: {coef}"));
        }
        r.set(
            "first_failure",
            json!({ "point": point_json(&bad.point), "first_terms": terms_json(&listed) }),
        );
    }
    r.status(Status::from_check(zero == outcomes.len()));
    Ok(())
}

pub fn coeff(c: &Common, monomial: &str, side: SideArg, both: bool) -> Result<Report> {
    let start = Instant::now();
    let m = parse_monomial(monomial)?;
    let sides = if both {
        vec![Side::Lhs, Side::Rhs]
    } else {
        vec![side_of(side)]
    };
    for s in &sides {
        check_support(*s, &m)?;
    }
    let mut config = config_echo(c);
    config.insert("monomial".into(), json!(m.to_string()));
    if !both {
        config.insert("side".into(), json!(side_of(side).name()));
    }
    let mut r = Report::new("coeff", config);
    let equal = with_setting(
        c,
        &mut r,
        |s, r| coeff_in(s, c.weight, &sides, &m, r),
        |s, r| coeff_in(s, c.weight, &sides, &m, r),
    )?;
    if both {
        r.line(format!("equal: {}", yes_no(equal)));
        r.set("equal", json!(equal));
        r.status(Status::from_check(equal));
    }
    Ok(r.finish(start, c.timings))
}

fn coeff_in<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    sides: &[Side],
    m: &Monomial,
    r: &mut Report,
) -> Result<bool> {
    let mut values = Vec::new();
    for side in sides {
        let v = pentagon_side(s, kind, *side)?.coefficient_of(m);
        let text = s.ring().render(&v);
        r.line(format!("{}: {text}", side.name()));
        r.set(side.name(), json!(text));
        values.push(v);
    }
    Ok(values.windows(2).all(|w| w[0] == w[1]))
}

pub fn show(c: &Common, object: ShowObject, tet: &str) -> Result<Report> {
    let start = Instant::now();
    let t = Tetrahedron::parse(tet)?;
    let mut config = config_echo(c);
    config.insert("object".into(), json!(object.name()));
    if matches!(
        object,
        ShowObject::Weight | ShowObject::MatrixA | ShowObject::Form
    ) {
        config.insert("tet".into(), json!(t.to_string()));
    }
    let mut r = Report::new("show", config);
    with_setting(
        c,
        &mut r,
        |s, r| show_in(s, c.weight, object, &t, r),
        |s, r| show_in(s, c.weight, object, &t, r),
    )?;
    Ok(r.finish(start, c.timings))
}

fn show_in<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    object: ShowObject,
    t: &Tetrahedron,
    r: &mut Report,
) -> Result<()> {
    let matrix = match object {
        ShowObject::Weight => {
            let w = weight(s, kind, t);
            r.line(format!("W[{t}] = {w}"));
            r.set("terms", terms_json(&terms(&w, usize::MAX)));
            return Ok(());
        }
        ShowObject::Form => {
            let e = form(s, kind, t)?.element();
            r.line(format!("form[{t}] = {e}"));
            r.set("terms", terms_json(&terms(&e, usize::MAX)));
            return Ok(());
        }
        ShowObject::MatrixA => matrix_a(s, t)?,
        ShowObject::MatrixLhs => big_matrix(s, Side::Lhs)?,
        ShowObject::MatrixRhs => big_matrix(s, Side::Rhs)?,
    };
    for l in matrix.to_string().lines() {
        r.line(l);
    }
    r.set("matrix", matrix_json(&matrix));
    Ok(())
}

/// Pass counts of the Gaussian-route checks.
#[derive(Default)]
struct Tally {
    representations: (usize, usize),
    sides: (usize, usize),
    minors: (usize, usize),
    failures: Vec<String>,
}

impl Tally {
    fn record(
        count: &mut (usize, usize),
        ok: bool,
        failures: &mut Vec<String>,
        what: impl FnOnce() -> String,
    ) {
        count.1 += 1;
        if ok {
            count.0 += 1;
        } else {
            failures.push(what());
        }
    }

    fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn crosscheck_in<R: Ring>(
    s: &Setting<R>,
    kind: WeightKind,
    exec: Exec,
    tally: &mut Tally,
    at: &str,
) -> Result<()> {
    for t in PENTAGON_TETRAHEDRA {
        let ok = integrate_out_aux(&form(s, kind, &t)?)? == weight(s, kind, &t);
        Tally::record(&mut tally.representations, ok, &mut tally.failures, || {
            format!("representation of W[{t}]{at}")
        });
    }
    for side in [Side::Lhs, Side::Rhs] {
        let ok = pentagon_side_gaussian(s, kind, side, exec)? == pentagon_side(s, kind, side)?;
        Tally::record(&mut tally.sides, ok, &mut tally.failures, || {
            format!("gaussian {} side{at}", side.name())
        });
    }
    if kind == WeightKind::F {
        for side in [Side::Lhs, Side::Rhs] {
            for (m, via, direct) in minor_comparison(s, side, exec)? {
                Tally::record(
                    &mut tally.minors,
                    via == direct,
                    &mut tally.failures,
                    || format!("minor for {m} on {}{at}", side.name()),
                );
            }
        }
    }
    Ok(())
}

pub fn crosscheck(c: &Common) -> Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("crosscheck", config_echo(c));
    let mut tally = Tally::default();
    match c.mode {
        Mode::Symbolic => crosscheck_in(&symbolic_setting(c)?, c.weight, exec(c), &mut tally, "")?,
        Mode::Modp => {
            let f = field(c)?;
            for p in mod_points(c, f, c.trials)? {
                let at = format!(" at {}", point_text(&p));
                crosscheck_in(
                    &Setting::modular(f, &p)?,
                    c.weight,
                    exec(c),
                    &mut tally,
                    &at,
                )?;
            }
        }
    }
    let mut line = |name: &str, key: &str, (pass, total): (usize, usize)| {
        r.line(format!("{name}: {pass}/{total}"));
        r.set(key, json!({ "pass": pass, "total": total }));
    };
    line(
        "gaussian representations",
        "representations",
        tally.representations,
    );
    line("gaussian pentagon sides", "pentagon_sides", tally.sides);
    if c.weight == WeightKind::F {
        line("minor rule", "minors", tally.minors);
    }
    for f in tally.failures.iter().take(RESIDUAL_LISTING) {
        r.line(format!("failed: {f}"));
    }
    r.set("failures", json!(tally.failures));
    r.status(Status::from_check(tally.all_pass()));
    Ok(r.finish(start, c.timings))
}
