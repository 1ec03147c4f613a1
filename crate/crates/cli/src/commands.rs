use std::fmt;
use std::fs;
use std::ops::RangeInclusive;
use std::path::Path;
use std::sync::Arc;

use modcat::error::Violation;
use modcat::exactnum::{lcm, CycError};
use modcat::indicators::{identity_suite, indicator_table, nu_bantay, IndicatorEngine, IndicatorError};
use modcat::modular::{catalog, center_double, check, emit_mdata, parse_mdata, ModularData, ModularError};
use modcat::slrep::{
    all_liftings, canonical_rep, congruence_level, image_order, is_t_rational, ModularRep, SlRepError,
};
use modcat::ymat::{check_inequality_with_precision, YError, YQuery};

use crate::output::{encode, value, Out};
use crate::Common;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    /// a checked identity or inequality does not hold
    Failed = 1,
    Input = 2,
    CapExceeded = 3,
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Data(ModularError),
    Cap(String),
    Math(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Io(_) | CliError::Data(_) => Status::Input,
            CliError::Cap(_) => Status::CapExceeded,
            CliError::Math(_) => Status::Failed,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(s) | CliError::Cap(s) | CliError::Math(s) => f.write_str(s),
            CliError::Data(ModularError::Invalid(v)) => {
                write!(f, "input is not modular data")?;
                for x in v {
                    write!(f, "\n  {x}")?;
                }
                Ok(())
            }
            CliError::Data(e) => write!(f, "{e}"),
        }
    }
}

impl From<ModularError> for CliError {
    fn from(e: ModularError) -> Self {
        CliError::Data(e)
    }
}

impl From<SlRepError> for CliError {
    fn from(e: SlRepError) -> Self {
        match e {
            SlRepError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            e => CliError::Math(e.to_string()),
        }
    }
}

impl From<IndicatorError> for CliError {
    fn from(e: IndicatorError) -> Self {
        match e {
            IndicatorError::Rep(r) => r.into(),
            e => CliError::Math(e.to_string()),
        }
    }
}

impl From<YError> for CliError {
    fn from(e: YError) -> Self {
        match e {
            YError::InvalidRoot(_) | YError::InvalidM => CliError::Io(e.to_string()),
            YError::Arithmetic(CycError::PrecisionExhausted(_)) => CliError::Cap(e.to_string()),
            YError::Lifting(r) => r.into(),
            e => CliError::Math(e.to_string()),
        }
    }
}

pub type CmdResult = Result<(String, Status), CliError>;

fn load_parts(c: &Common) -> Result<modcat::modular::ModularParts, CliError> {
    match (&c.catalog, &c.input) {
        (Some(name), _) => Ok(catalog(name)?.parts().clone()),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(parse_mdata(&text)?)
        }
        (None, None) => Err(CliError::Io("no input given".into())),
    }
}

fn load(c: &Common) -> Result<Arc<ModularData>, CliError> {
    let (data, violations) = check(load_parts(c)?)?;
    match data {
        Some(d) if violations.is_empty() => Ok(Arc::new(d)),
        _ => Err(CliError::Data(ModularError::Invalid(violations))),
    }
}

fn violation_fields(v: &Violation) -> Vec<String> {
    let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
    vec!["violation".into(), v.identity.clone(), idx.join(","), v.detail.clone()]
}

fn center_label(a: &ModularData, x: usize) -> String {
    let r = a.rank();
    format!("({},{})", a.labels()[x / r], a.labels()[x % r])
}

pub fn validate(c: &Common) -> CmdResult {
    let mut out = Out::new(c.format);
    let status = validate_into(&mut out, c)?;
    Ok((out.finish(), status))
}

fn validate_into(out: &mut Out, c: &Common) -> Result<Status, CliError> {
    let parts = load_parts(c)?;
    let name = parts.name.clone();
    let (data, violations) = check(parts)?;
    if violations.is_empty() {
        let a = data.expect("valid data");
        let (r, m, n) = (a.rank(), a.conductor(), a.fs_exponent());
        if out.text() {
            out.line(format!("valid: {name} (rank {r}, conductor {m}, FS exponent {n}, dim {})", a.dim().reduced()));
        }
        out.row(&["valid".into(), name, r.to_string(), m.to_string(), n.to_string(), encode(a.dim())]);
        return Ok(Status::Ok);
    }
    for v in &violations {
        if out.text() {
            out.line(format!("violation: {v}"));
        }
        out.row(&violation_fields(v));
    }
    if out.text() {
        out.line(format!("invalid: {name} ({} violations)", violations.len()));
    }
    Ok(Status::Failed)
}

pub fn double(c: &Common, output: Option<&Path>) -> CmdResult {
    let a = load(c)?;
    let text = emit_mdata(&center_double(&a));
    match output {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            Ok((String::new(), Status::Ok))
        }
        None => Ok((text, Status::Ok)),
    }
}

pub fn indicators(c: &Common, ms: Option<RangeInclusive<i64>>, ls: Option<RangeInclusive<i64>>) -> CmdResult {
    let a = load(c)?;
    let n = a.fs_exponent() as i64;
    let engine = IndicatorEngine::new(a.clone())?;
    let table = indicator_table(&engine, ms.unwrap_or(1..=n), ls.unwrap_or(0..=n));
    let mut out = Out::new(c.format);
    let r = a.rank();
    let mut rows = Vec::new();
    for (q, v) in &table {
        let (i, j) = q.center;
        let x = i * r + j;
        rows.push(vec![
            q.m.to_string(),
            q.l.to_string(),
            center_label(&a, x),
            a.labels()[q.object].clone(),
            value(&out, v),
        ]);
        out.row(&[
            "nu".into(),
            q.m.to_string(),
            q.l.to_string(),
            i.to_string(),
            j.to_string(),
            q.object.to_string(),
            encode(v),
        ]);
    }
    out.table(&["m", "l", "X", "V", "nu"], &rows);
    Ok((out.finish(), Status::Ok))
}

pub fn bantay(c: &Common, m: i64) -> CmdResult {
    let a = load(c)?;
    let mut out = Out::new(c.format);
    bantay_into(&mut out, &a, m);
    Ok((out.finish(), Status::Ok))
}

fn bantay_into(out: &mut Out, a: &ModularData, m: i64) {
    let r = a.rank();
    let mut rows = Vec::new();
    for obj in 0..r {
        for x in 0..r * r {
            let v = nu_bantay(a, m, x / r, x % r, obj);
            rows.push(vec![a.labels()[obj].clone(), center_label(a, x), value(out, &v)]);
            out.row(&[
                "bantay".into(),
                m.to_string(),
                (x / r).to_string(),
                (x % r).to_string(),
                obj.to_string(),
                encode(&v),
            ]);
        }
    }
    if out.text() {
        out.line(format!("nu_{{{m},1}} by the Bantay formula"));
    }
    out.table(&["V", "X", "nu"], &rows);
}

pub fn equiv_check(c: &Common, m_max: Option<i64>, l_max: Option<i64>) -> CmdResult {
    let a = load(c)?;
    let mut out = Out::new(c.format);
    let status = equiv_into(&mut out, &a, m_max, l_max)?;
    Ok((out.finish(), status))
}

fn equiv_into(out: &mut Out, a: &Arc<ModularData>, m_max: Option<i64>, l_max: Option<i64>) -> Result<Status, CliError> {
    let n = a.fs_exponent() as i64;
    let (m_max, l_max) = (m_max.unwrap_or(2 * n), l_max.unwrap_or(n));
    let engine = IndicatorEngine::new(a.clone())?;
    let report = identity_suite(&engine, m_max, l_max);
    let mut rows = Vec::new();
    for (name, count) in &report.checks {
        let failed = report.violations.iter().filter(|v| &v.identity == name).count();
        rows.push(vec![name.clone(), count.to_string(), failed.to_string()]);
        out.row(&["check".into(), name.clone(), count.to_string(), failed.to_string()]);
    }
    if out.text() {
        out.line(format!("indicator identities for 1 <= m <= {m_max}, |l| <= {l_max}"));
    }
    out.table(&["identity", "checked", "failed"], &rows);
    for v in &report.violations {
        if out.text() {
            out.line(format!("violation: {v}"));
        }
        out.row(&violation_fields(v));
    }
    if out.text() {
        let verdict = if report.passed() { "all hold" } else { "FAILED" };
        out.line(format!("{} checks, {} violations: {verdict}", report.total(), report.violations.len()));
    }
    Ok(if report.passed() { Status::Ok } else { Status::Failed })
}

pub fn reps(c: &Common) -> CmdResult {
    let a = load(c)?;
    let mut out = Out::new(c.format);
    reps_into(&mut out, &a)?;
    Ok((out.finish(), Status::Ok))
}

fn reps_into(out: &mut Out, a: &Arc<ModularData>) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for (k, rep) in all_liftings(a)?.iter().enumerate() {
        let s2 = if rep.s_squared_sign() > 0 { "C" } else { "-C" };
        let tr = is_t_rational(rep);
        rows.push(vec![
            k.to_string(),
            value(out, rep.lambda()),
            value(out, rep.zeta()),
            rep.t_order().to_string(),
            s2.into(),
            yes_no(tr),
        ]);
        out.row(&[
            "lifting".into(),
            k.to_string(),
            encode(rep.lambda()),
            encode(rep.zeta()),
            rep.t_order().to_string(),
            s2.into(),
            tr.to_string(),
        ]);
    }
    if out.text() {
        out.line("liftings x = zeta_12^k: s -> S/lambda, t -> T/zeta");
    }
    out.table(&["k", "lambda", "zeta", "ord t", "s^2", "t-rational"], &rows);
    Ok(())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

/// Outcome of a capped computation: a value, a mathematical "none", or a cap hit.
enum Capped<T> {
    Value(T),
    None,
    Cap,
}

impl<T: ToString> Capped<T> {
    fn cell(&self, none: &str) -> String {
        match self {
            Capped::Value(v) => v.to_string(),
            Capped::None => none.into(),
            Capped::Cap => "cap exceeded".into(),
        }
    }
}

fn capped<T>(r: Result<Option<T>, SlRepError>) -> Result<Capped<T>, CliError> {
    match r {
        Ok(Some(v)) => Ok(Capped::Value(v)),
        Ok(None) => Ok(Capped::None),
        Err(SlRepError::CapExceeded { .. }) => Ok(Capped::Cap),
        Err(e) => Err(e.into()),
    }
}

/// The canonical representation (when `p+ = p-`) followed by the liftings.
fn named_reps(a: &Arc<ModularData>) -> Result<Vec<(String, ModularRep)>, CliError> {
    let mut out = Vec::new();
    if let Ok(rep) = canonical_rep(a) {
        out.push(("canonical".to_string(), rep));
    }
    for (k, rep) in all_liftings(a)?.into_iter().enumerate() {
        out.push((format!("lifting {k}"), rep));
    }
    Ok(out)
}

pub fn congruence(c: &Common, projective: bool) -> CmdResult {
    let a = load(c)?;
    let mut out = Out::new(c.format);
    let status = congruence_into(&mut out, c, &a, projective)?;
    Ok((out.finish(), status))
}

fn congruence_into(out: &mut Out, c: &Common, a: &Arc<ModularData>, projective_only: bool) -> Result<Status, CliError> {
    let none = format!("none <= {}", 12 * a.fs_exponent());
    let mut status = Status::Ok;
    let mut rows = Vec::new();
    for (name, rep) in named_reps(a)? {
        let linear = if projective_only {
            None
        } else {
            Some(capped(congruence_level(&rep, false, c.enum_cap))?)
        };
        let proj = capped(congruence_level(&rep, true, c.enum_cap))?;
        let image = capped(image_order(&rep, c.closure_cap as usize).map(Some))?;
        let tr = is_t_rational(&rep);
        for x in [linear.as_ref(), Some(&proj)].into_iter().flatten() {
            if matches!(x, Capped::Cap) {
                status = status.max(Status::CapExceeded);
            }
        }
        if matches!(image, Capped::Cap) {
            status = status.max(Status::CapExceeded);
        }
        if out.text() && name == "canonical" {
            if let (Some(Capped::Value(l)), Capped::Value(i)) = (&linear, &image) {
                out.line(format!("canonical: level {l}, image {i}"));
            }
        }
        let lin_cell = linear.as_ref().map_or("-".to_string(), |x| x.cell(&none));
        rows.push(vec![
            name.clone(),
            rep.t_order().to_string(),
            lin_cell.clone(),
            proj.cell(&none),
            image.cell("-"),
            yes_no(tr),
        ]);
        out.row(&[
            "congruence".into(),
            name.replace(' ', "_"),
            rep.t_order().to_string(),
            lin_cell,
            proj.cell(&none),
            image.cell("-"),
            tr.to_string(),
        ]);
    }
    out.table(&["rep", "ord t", "level", "projective level", "image", "t-rational"], &rows);
    Ok(status)
}

pub fn image(c: &Common) -> CmdResult {
    let a = load(c)?;
    let mut out = Out::new(c.format);
    let mut status = Status::Ok;
    let mut rows = Vec::new();
    for (name, rep) in named_reps(&a)? {
        let image = capped(image_order(&rep, c.closure_cap as usize).map(Some))?;
        if matches!(image, Capped::Cap) {
            status = Status::CapExceeded;
        }
        rows.push(vec![name.clone(), image.cell("-")]);
        out.row(&["image".into(), name.replace(' ', "_"), image.cell("-")]);
    }
    out.table(&["rep", "image order"], &rows);
    Ok((out.finish(), status))
}

pub fn y(c: &Common, m: u32, root: Option<Vec<i64>>, root_conductor: Option<u32>) -> CmdResult {
    let a = load(c)?;
    let mut out = Out::new(c.format);
    let q = match root {
        None => YQuery::default_for(&a, m)?,
        Some(roots) => YQuery {
            m,
            conductor: root_conductor
                .unwrap_or_else(|| lcm(a.conductor() as u64, m as u64 * a.fs_exponent() as u64) as u32),
            roots,
        },
    };
    let status = y_into(&mut out, c, &a, &q)?;
    Ok((out.finish(), status))
}

fn y_into(out: &mut Out, c: &Common, a: &ModularData, q: &YQuery) -> Result<Status, CliError> {
    let report = check_inequality_with_precision(a, q, c.precision_bits)?;
    let lab = |i: usize| a.labels()[i].clone();
    let mut rows = Vec::new();
    for t in &report.rows {
        rows.push(vec![
            lab(t.a),
            lab(t.b),
            lab(t.c),
            t.lhs.to_string(),
            value(out, &t.y),
            yes_no(t.integral),
            yes_no(t.holds),
        ]);
        out.row(&[
            "y".into(),
            q.m.to_string(),
            t.a.to_string(),
            t.b.to_string(),
            t.c.to_string(),
            t.lhs.to_string(),
            encode(&t.y),
            t.integral.to_string(),
            t.holds.to_string(),
        ]);
    }
    if out.text() {
        let roots: Vec<String> = q.roots.iter().map(|r| r.to_string()).collect();
        out.line(format!("Y(R, T^{}) with R = diag(zeta_{}^[{}])", q.m, q.conductor, roots.join(",")));
    }
    out.table(&["a", "b", "c", "LHS", "Y", "integral", "LHS >= |Y|"], &rows);
    for v in &report.violations {
        if out.text() {
            out.line(format!("violation: {v}"));
        }
        out.row(&violation_fields(v));
    }
    Ok(if report.passed() { Status::Ok } else { Status::Failed })
}

pub fn report(c: &Common) -> CmdResult {
    let mut out = Out::new(c.format);
    let section = |out: &mut Out, title: &str| {
        if out.text() {
            out.line(format!("\n== {title} =="));
        }
    };
    section(&mut out, "validate");
    let mut status = validate_into(&mut out, c)?;
    if status != Status::Ok {
        return Ok((out.finish(), status));
    }
    let a = load(c)?;
    section(&mut out, "liftings");
    reps_into(&mut out, &a)?;
    section(&mut out, "congruence");
    status = status.max(congruence_into(&mut out, c, &a, false)?);
    section(&mut out, "Bantay m = 2");
    bantay_into(&mut out, &a, 2);
    section(&mut out, "indicator identities");
    status = status.max(equiv_into(&mut out, &a, None, None)?);
    section(&mut out, "Y-tensors m = 2");
    status = status.max(y_into(&mut out, c, &a, &YQuery::default_for(&a, 2)?)?);
    let text = out.finish();
    Ok((text.strip_prefix('\n').unwrap_or(&text).to_string(), status))
}
