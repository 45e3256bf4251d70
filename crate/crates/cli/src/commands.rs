use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use mfg_core::ck::{
    cocycle_automorphism, normalizer_decompose, solve_coboundary, unitary_from_table, CkContext, CkElement,
};
use mfg_core::full_group::{local_shift_piece, orbit_mover, permutation_element, PrefixExchangeTable};
use mfg_core::json::*;
use mfg_core::orbit_equiv::{
    conjugate_table, golden_mean_example, is_uniform_orbit_equivalence, transport_diagonal, verify_orbit_cocycles,
    TailMap, VerificationReport,
};
use mfg_core::shift::{EpPoint, Shift, Word};
use mfg_core::{suite, Bounds};
use serde_json::{json, Value};

use crate::input::{load, CliError};
use crate::{CkCmd, Command, FgCmd, OeCmd, ShiftCmd, SuiteCmd};

/// Output of a command in both modes. `ok = false` exits with status 1.
pub struct Reply {
    pub json: Value,
    pub human: String,
    pub ok: bool,
}

impl Reply {
    fn ok(json: Value, human: impl Into<String>) -> Self {
        Reply { json, human: human.into(), ok: true }
    }

    fn verdict(ok: bool, json: Value, human: impl Into<String>) -> Self {
        Reply { json, human: human.into(), ok }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn shift_arg(s: &str) -> Result<Shift> {
    Ok(shift_from_json(&load(s)?)?)
}

fn table_arg(s: &str) -> Result<PrefixExchangeTable> {
    Ok(table_from_json(&load(s)?)?)
}

fn element_arg(s: &str) -> Result<CkElement> {
    Ok(element_from_json(&load(s)?)?)
}

fn map_arg(s: &str) -> Result<TailMap> {
    Ok(tailmap_from_json(&load(s)?)?)
}

fn word_arg(s: &str) -> Result<Word> {
    Ok(Word::parse(s)?)
}

fn point_arg(s: &str) -> Result<EpPoint> {
    Ok(EpPoint::parse(s)?)
}

fn table_text(t: &PrefixExchangeTable) -> String {
    let mut out = String::new();
    for (mu, nu) in t.entries() {
        let _ = writeln!(out, "{mu:>8} -> {nu}");
    }
    out
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn table_reply(t: &PrefixExchangeTable) -> Reply {
    Reply::ok(table_to_json(t), table_text(t))
}

fn element_reply(e: &CkElement) -> Reply {
    Reply::ok(element_to_json(e), e.to_string())
}

fn report_reply(r: &VerificationReport, what: &str) -> Reply {
    let json = json!({ "checked": r.checked, "passed": r.passed(), "counterexamples": report_to_json(r) });
    let human = if r.passed() {
        format!("{what}: verified on {} points", r.checked)
    } else {
        format!(
            "{what}: {} counterexamples among {} points\n{}",
            r.counterexamples.len(),
            r.checked,
            pretty(&report_to_json(r))
        )
    };
    Reply::verdict(r.passed(), json, human)
}

pub fn run(cmd: &Command, bounds: Bounds) -> Result<Reply> {
    match cmd {
        Command::Shift(c) => shift(c),
        Command::Fg(c) => fg(c),
        Command::Ck(c) => ck(c),
        Command::Oe(c) => oe(c, bounds),
        Command::Suite(SuiteCmd::Acceptance) => Ok(acceptance(bounds)),
    }
}

fn shift(cmd: &ShiftCmd) -> Result<Reply> {
    match cmd {
        ShiftCmd::CheckI(m) => {
            let s = shift_arg(&m.matrix)?;
            let holds = s.satisfies_condition_i();
            Ok(Reply::verdict(holds, json!(holds), holds.to_string()))
        }
        ShiftCmd::Words { m, k } => {
            let words: Vec<String> = shift_arg(&m.matrix)?.admissible_words(*k).iter().map(Word::to_string).collect();
            let human = words.join("\n");
            Ok(Reply::ok(json!(words), human))
        }
    }
}

fn fg(cmd: &FgCmd) -> Result<Reply> {
    match cmd {
        FgCmd::Validate { table } => Ok(table_reply(&table_arg(table)?)),
        FgCmd::Apply { table, point } => {
            let t = table_arg(table)?;
            let p = point_arg(point)?;
            p.check_in(t.shift())?;
            let q = t.apply(&p);
            Ok(Reply::ok(json!(q.to_string()), q.to_string()))
        }
        FgCmd::Compose { left, right } => Ok(table_reply(&table_arg(left)?.compose(&table_arg(right)?)?)),
        FgCmd::Invert { table } => Ok(table_reply(&table_arg(table)?.inverse())),
        FgCmd::Cocycles { table } => {
            let c = table_arg(table)?.cocycles();
            let mut human = String::from("word  k  l\n");
            for (w, k) in c.k.table() {
                let _ = writeln!(human, "{w:<5} {k}  {}", c.l.value_on(w).expect("same depth"));
            }
            Ok(Reply::ok(cocycles_to_json(&c), human))
        }
        FgCmd::IsAf { table } => {
            let af = table_arg(table)?.is_af();
            Ok(Reply::verdict(af, json!(af), af.to_string()))
        }
        FgCmd::GenLemma32 { m, mu } => Ok(table_reply(&local_shift_piece(&shift_arg(&m.matrix)?, &word_arg(mu)?)?)),
        FgCmd::GenLemma33 { m, point, symbol } => {
            let s = shift_arg(&m.matrix)?;
            let x = point_arg(point)?;
            Ok(table_reply(&orbit_mover(&s, &x, *symbol)?))
        }
        FgCmd::GenPerm { m, p, perms } => {
            let s = shift_arg(&m.matrix)?;
            let v = load(perms)?;
            let list = v.as_array().ok_or_else(|| CliError::parse("--perms must be a list of objects"))?;
            let mut maps = Vec::new();
            for obj in list {
                let obj = obj.as_object().ok_or_else(|| CliError::parse("--perms entries must be objects"))?;
                let mut map = BTreeMap::new();
                for (a, b) in obj {
                    let b = b.as_str().ok_or_else(|| CliError::parse("permutation images must be words"))?;
                    map.insert(word_arg(a)?, word_arg(b)?);
                }
                maps.push(map);
            }
            Ok(table_reply(&permutation_element(&s, *p, &maps)?))
        }
    }
}

fn ck(cmd: &CkCmd) -> Result<Reply> {
    match cmd {
        CkCmd::Relations { m, order } => {
            let ctx = CkContext::new(shift_arg(&m.matrix)?, *order);
            let failures = relation_failures(&ctx);
            let ok = failures.is_empty();
            let json = json!({ "relations": 2, "instances": ctx.shift().n() + 1, "failures": failures });
            let human = if ok { "2 relations verified".to_string() } else { failures.join("\n") };
            Ok(Reply::verdict(ok, json, human))
        }
        CkCmd::NormalForm { element } => Ok(element_reply(&element_arg(element)?)),
        CkCmd::Equals { left, right } => {
            let eq = element_arg(left)?.checked_sub(&element_arg(right)?)?.is_zero();
            Ok(Reply::verdict(eq, json!(eq), eq.to_string()))
        }
        CkCmd::UFromTable { table, order } => {
            let t = table_arg(table)?;
            let ctx = CkContext::new(t.shift().clone(), *order);
            Ok(element_reply(&unitary_from_table(&ctx, &t)?))
        }
        CkCmd::Decompose { element } => {
            let (phase, table) = normalizer_decompose(&element_arg(element)?)?;
            let mut human = String::from("phase:\n");
            for (w, e) in phase.exponents().table() {
                let _ = writeln!(human, "{w:>8} -> ζ^{e}");
            }
            human.push_str("table:\n");
            human.push_str(&table_text(&table));
            Ok(Reply::ok(json!({ "phase": phase_to_json(&phase), "table": table_to_json(&table) }), human))
        }
        CkCmd::Expectation { element } => Ok(element_reply(&element_arg(element)?.conditional_expectation())),
        CkCmd::StripPrefix { element, n } => {
            let parts = element_arg(element)?.strip_prefix(*n);
            let json: serde_json::Map<String, Value> =
                parts.iter().map(|(mu, a)| (mu.to_string(), element_to_json(a))).collect();
            let mut human = String::new();
            for (mu, a) in &parts {
                let _ = writeln!(human, "{mu}: {a}");
            }
            Ok(Reply::ok(Value::Object(json), human))
        }
        CkCmd::Lambda { phase, element } => {
            let e = element_arg(element)?;
            let u1 = phase_from_json(&load(phase)?, e.shift())?;
            Ok(element_reply(&cocycle_automorphism(&u1, &e)?))
        }
        CkCmd::SolveCoboundary { m, phase, depth } => {
            let s = shift_arg(&m.matrix)?;
            let u1 = phase_from_json(&load(phase)?, &s)?;
            Ok(match solve_coboundary(&u1, *depth)? {
                Some(v) => Reply::ok(json!({ "solution": phase_to_json(&v) }), pretty(&phase_to_json(&v))),
                None => Reply::verdict(
                    false,
                    json!({ "solution": null }),
                    format!("no solution of depth {depth}"),
                ),
            })
        }
    }
}

/// Checks `Σ_j S_j S_j* = 1` and `S_i* S_i = Σ_j A(i,j) S_j S_j*` for each `i`.
fn relation_failures(ctx: &mfg_core::ck::Ctx) -> Vec<String> {
    let shift = ctx.shift();
    let mut failures = Vec::new();
    let mut sum = CkElement::zero(ctx);
    for i in shift.symbols() {
        let s = CkElement::generator(ctx, i).expect("symbol of the shift");
        sum = &sum + &(&s * &s.adjoint());
        let rhs = shift
            .followers(i)
            .into_iter()
            .fold(CkElement::zero(ctx), |acc, j| &acc + &CkElement::chi(ctx, &Word::single(j)));
        if &s.adjoint() * &s != rhs {
            failures.push(format!("S{i}*S{i} differs from the sum over row {i}"));
        }
    }
    if sum != CkElement::one(ctx) {
        failures.push("the range projections do not sum to 1".to_string());
    }
    failures
}

fn oe(cmd: &OeCmd, bounds: Bounds) -> Result<Reply> {
    match cmd {
        OeCmd::ExampleGoldenMean => {
            let (h, data) = golden_mean_example();
            let json = json!({ "map": tailmap_to_json(&h), "cocycles": orbit_cocycles_to_json(&data) });
            Ok(Reply::ok(json.clone(), pretty(&json)))
        }
        OeCmd::Apply { map, point, inverse } => {
            let h = map_arg(map)?;
            let p = point_arg(point)?;
            let q = if *inverse { h.apply_inverse(&p)? } else { h.apply(&p)? };
            Ok(Reply::ok(json!(q.to_string()), q.to_string()))
        }
        OeCmd::Verify { map, cocycles } => {
            let h = map_arg(map)?;
            let data = match cocycles {
                Some(c) => orbit_cocycles_from_json(&load(c)?, &h)?,
                None if load(map)?.as_str() == Some("golden-mean") => golden_mean_example().1,
                None => return Err(CliError::parse("--cocycles is required for this map")),
            };
            Ok(report_reply(&verify_orbit_cocycles(&h, &data, bounds.pre, bounds.period)?, "orbit cocycles"))
        }
        OeCmd::Conjugate { map, table } => {
            let h = map_arg(map)?;
            let tau = table_from_json_over(&load(table)?, h.source())?;
            Ok(table_reply(&conjugate_table(&h, &tau, bounds)?))
        }
        OeCmd::Transport { map, element } => {
            let h = map_arg(map)?;
            let f = element_arg(element)?;
            let target = CkContext::new(h.target().clone(), f.field().order());
            Ok(element_reply(&transport_diagonal(&h, &f, &target, bounds)?))
        }
        OeCmd::Uniform { map, k1, k2 } => {
            let h = map_arg(map)?;
            let r = is_uniform_orbit_equivalence(&h, *k1, *k2, bounds.pre, bounds.period)?;
            Ok(report_reply(&r, "uniform orbit equivalence"))
        }
    }
}

fn acceptance(bounds: Bounds) -> Reply {
    let start = Instant::now();
    let results: Vec<_> = suite::CRITERIA
        .iter()
        .map(|&(id, _)| {
            let t = Instant::now();
            (suite::run_criterion(id, bounds), t.elapsed())
        })
        .collect();
    let passed = results.iter().filter(|(r, _)| r.passed).count();
    let mut human = format!("acceptance suite, bounds {bounds}\n");
    for (r, t) in &results {
        let _ = writeln!(human, "{r} [{:.2}s]", t.as_secs_f64());
    }
    let _ = write!(human, "{passed} passed, {} failed in {:.2}s", results.len() - passed, start.elapsed().as_secs_f64());
    let json = json!({
        "bounds": bounds.to_string(),
        "criteria": results
            .iter()
            .map(|(r, _)| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
            .collect::<Vec<_>>(),
    });
    Reply::verdict(passed == results.len(), json, human)
}
