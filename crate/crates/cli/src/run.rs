use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use curvelab_core::artin_schreier::{big_action_report, translation_group, ASCurve};
use curvelab_core::dieudonne::{parse_sum, preset};
use curvelab_core::field::{is_prime, parse_elem, parse_poly};
use curvelab_core::hyperelliptic::{
    cartier_matrix, hasse_polynomial, klein_quotient_invariants, prank_witness_table,
    search_triple, supersingular_lambdas, zeta_data, HyperellipticCurve, KleinReport,
    TriplePredicate, ZETA_BOUND,
};
use curvelab_core::newton::{
    np_enumerate, np_longest_chain, np_validate, parse_slopes, NewtonPolygon,
};
use curvelab_core::nielsen::{
    braid_orbits, enumerate_tuples, parse_classes, rh_genus, PermGroup, GROUP_ORDER_BOUND,
};
use curvelab_core::pagot::{
    divisibility_necessity_check, elementary_family, pagot_pair_check, pagot_search, verify_lspace,
    LSpaceCandidate, LogFormRecord, Verdict, PAIR_NORMALIZATION,
};
use curvelab_core::{Elem, Error, Field, Matrix};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::acceptance::{self, SuiteOptions};
use crate::args::*;
use crate::report::{ExperimentSpec, Provenance, Report, Results, Status, Timing};
use crate::CliError;

const WITNESS_TABLE_BUDGET: u64 = 1_000_000;
const PAGOT_BUDGET: u64 = 50_000_000;
const NIELSEN_BUDGET: u64 = 100_000_000;
/// Witness pairs listed as notes; the JSON detail has all of them.
const NOTED_WITNESSES: usize = 20;

struct Ctx<'a> {
    global: &'a GlobalArgs,
    start: Instant,
    fields: BTreeSet<String>,
    bounds: BTreeMap<String, Value>,
}

impl Ctx<'_> {
    fn field(&mut self, p: u64, k: usize) -> Result<Field, CliError> {
        let f = Field::new(p, k)?;
        self.fields.insert(f.describe());
        Ok(f)
    }

    fn note_field(&mut self, f: &Field) {
        self.fields.insert(f.describe());
    }

    fn budget(&mut self, default: u64) -> u64 {
        let b = self.global.budget.unwrap_or(default);
        self.bounds.insert("budget".into(), json!(b));
        b
    }

    fn out_of_time(&self) -> bool {
        self.global
            .time_limit
            .is_some_and(|s| self.start.elapsed() >= Duration::from_secs_f64(s))
    }

    fn curve(&mut self, p: u64, k: usize, f: &str) -> Result<HyperellipticCurve, CliError> {
        let field = self.field(p, k)?;
        Ok(HyperellipticCurve::new(parse_poly(&field, f)?)?)
    }
}

struct Outcome {
    results: Results,
    status: Status,
    rows_ms: Option<Vec<u64>>,
}

impl From<Results> for Outcome {
    fn from(results: Results) -> Outcome {
        Outcome {
            results,
            status: Status::Complete,
            rows_ms: None,
        }
    }
}

/// Dispatches to the library. Core budget errors become a report with the
/// budget marker and whatever rows were finished.
pub fn run(spec: &ExperimentSpec) -> Result<Report, CliError> {
    let mut cx = Ctx {
        global: &spec.global,
        start: Instant::now(),
        fields: BTreeSet::new(),
        bounds: BTreeMap::new(),
    };
    if let Some(t) = spec.global.time_limit {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Invalid("time limit must be positive".into()));
        }
        cx.bounds.insert("time_limit_s".into(), json!(t));
    }
    if spec.global.budget == Some(0) || spec.global.workers == Some(0) {
        return Err(CliError::Invalid(
            "budget and workers must be positive".into(),
        ));
    }
    let outcome = match dispatch(&spec.command, &mut cx) {
        Ok(o) => o,
        Err(CliError::Core(Error::BudgetExceeded(reason))) => Outcome {
            results: Results::default(),
            status: Status::BudgetExhausted { reason },
            rows_ms: None,
        },
        Err(e) => return Err(e),
    };
    Ok(Report {
        spec: spec.clone(),
        status: outcome.status,
        provenance: Provenance {
            tool: "curvelab".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            fields: cx.fields.into_iter().collect(),
            bounds: cx.bounds,
        },
        results: outcome.results,
        timing: Timing {
            rows_ms: outcome.rows_ms,
            wall_ms: cx.start.elapsed().as_millis() as u64,
        },
    })
}

fn dispatch(cmd: &Command, cx: &mut Ctx) -> Result<Outcome, CliError> {
    match cmd {
        Command::Prank(a) => prank(a, cx).map(Into::into),
        Command::SsLambdas(a) => ss_lambdas(a, cx).map(Into::into),
        Command::Triples(a) => triples(a, cx),
        Command::WitnessTable(a) => witness_table(a, cx),
        Command::Klein(a) => klein(a, cx).map(Into::into),
        Command::Zeta(a) => zeta(a, cx).map(Into::into),
        Command::Dm(a) => dm(a, cx).map(Into::into),
        Command::AsAut(a) => as_aut(a, cx).map(Into::into),
        Command::Pagot(PagotCommand::Verify(a)) => pagot_verify(a, cx).map(Into::into),
        Command::Pagot(PagotCommand::Search(a)) => pagot_search_cmd(a, cx).map(Into::into),
        Command::Pagot(PagotCommand::Family(a)) => pagot_family(a, cx).map(Into::into),
        Command::Np(NpCommand::Enum(a)) => np_enum(a).map(Into::into),
        Command::Np(NpCommand::Chain(a)) => np_chain(a).map(Into::into),
        Command::Nielsen(a) => nielsen(a, cx).map(Into::into),
        Command::Accept(a) => accept(a),
    }
}

fn matrix_json(m: &Matrix) -> Value {
    let f = m.field();
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|&e| f.format_coeff(e)).collect())
        .collect();
    json!(rows)
}

fn elems(f: &Field, xs: &[Elem]) -> String {
    xs.iter()
        .map(|&x| f.format_coeff(x))
        .collect::<Vec<_>>()
        .join(" ")
}

fn prank(a: &CurveArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let c = cx.curve(a.p, a.k, &a.f)?;
    let d = cartier_matrix(&c);
    let mut r = Results::new(&["p", "k", "genus", "p_rank", "a_number", "ordinary"]);
    r.push([
        a.p.to_string(),
        a.k.to_string(),
        c.genus().to_string(),
        d.p_rank.to_string(),
        d.a_number.to_string(),
        (d.p_rank == c.genus()).to_string(),
    ]);
    if a.matrices {
        r.detail = json!({ "curve": c.f().to_string(), "cartier_manin": matrix_json(&d.matrix) });
    }
    Ok(r)
}

fn ss_lambdas(a: &SsLambdasArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let (f, roots) = supersingular_lambdas(a.p, a.k)?;
    cx.note_field(&f);
    let h = hasse_polynomial(&f);
    let mut r = Results::new(&["p", "k", "count", "expected", "squarefree", "lambdas"]);
    r.push([
        a.p.to_string(),
        a.k.to_string(),
        roots.len().to_string(),
        ((a.p - 1) / 2).to_string(),
        h.is_squarefree().to_string(),
        elems(&f, &roots),
    ]);
    r.detail = json!({ "hasse_polynomial": h.to_string() });
    Ok(r)
}

/// `"7..100"` (end excluded) or `"7..=31"`.
pub fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Invalid(format!("bad range {s:?}; expected a..b or a..=b"));
    let (lo, hi, inclusive) = if let Some((a, b)) = s.split_once("..=") {
        (a, b, true)
    } else if let Some((a, b)) = s.split_once("..") {
        (a, b, false)
    } else {
        return Err(bad());
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    let hi = if inclusive {
        hi
    } else {
        hi.checked_sub(1).ok_or_else(bad)?
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn triples(a: &TriplesArgs, cx: &mut Ctx) -> Result<Outcome, CliError> {
    let (lo, hi) = parse_range(&a.p_range)?;
    let predicate = match a.predicate {
        PredicateArg::Ordinary => TriplePredicate::Ordinary,
        PredicateArg::Prank0 => TriplePredicate::PRankZero,
    };
    let budget = cx.budget(u64::MAX);
    let mut r = Results::new(&["p", "count", "witness"]);
    let mut times = Vec::new();
    let mut detail = Vec::new();
    let mut status = Status::Complete;
    let mut spent = 0u64;
    for p in (lo.max(3)..=hi).filter(|&p| is_prime(p)) {
        if cx.out_of_time() {
            status = Status::BudgetExhausted {
                reason: format!("time limit reached before p = {p}"),
            };
            break;
        }
        let t0 = Instant::now();
        let s = search_triple(p, predicate)?;
        cx.note_field(&s.field);
        spent += s.examined as u64;
        let witness = s
            .witness
            .map_or("NONE".to_string(), |w| elems(&s.field, &w));
        r.push([p.to_string(), s.examined.to_string(), witness]);
        times.push(t0.elapsed().as_millis() as u64);
        detail.push(json!({
            "p": p,
            "lambdas": s.lambdas.len(),
            "triples_total": s.triples_total,
            "examined": s.examined,
            "witness": s.witness.map(|w| w.iter().map(|&x| s.field.format_coeff(x)).collect::<Vec<_>>()),
        }));
        if spent >= budget {
            status = Status::BudgetExhausted {
                reason: format!("{spent} triples examined, budget {budget}"),
            };
            break;
        }
    }
    r.detail = json!({ "predicate": predicate, "primes": detail });
    Ok(Outcome {
        results: r,
        status,
        rows_ms: Some(times),
    })
}

fn witness_table(a: &WitnessTableArgs, cx: &mut Ctx) -> Result<Outcome, CliError> {
    let budget = cx.budget(WITNESS_TABLE_BUDGET);
    cx.bounds.insert("seed".into(), json!(a.seed));
    let t = prank_witness_table(a.p, a.g, budget, a.seed)?;
    let mut r = Results::new(&["p", "g", "p_rank", "curve"]);
    for e in &t.entries {
        if let Some(c) = &e.curve {
            cx.note_field(c.field());
        }
        r.push([
            a.p.to_string(),
            a.g.to_string(),
            e.p_rank.to_string(),
            e.curve.as_ref().map_or("NONE".into(), |c| {
                let f = c.field();
                format!("{} over GF({}^{})", c.f(), f.p(), f.k())
            }),
        ]);
    }
    r.detail = json!({ "examined": t.examined });
    let status = if t.is_complete() {
        Status::Complete
    } else {
        Status::BudgetExhausted {
            reason: format!(
                "{} candidates examined without finding every p-rank",
                t.examined
            ),
        }
    };
    Ok(Outcome {
        results: r,
        status,
        rows_ms: None,
    })
}

fn klein(a: &KleinArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let f = cx.field(a.p, a.k)?;
    let rep = klein_quotient_invariants(&parse_poly(&f, &a.f1)?, &parse_poly(&f, &a.f2)?)?;
    let mut r = Results::new(&["part", "curve", "genus", "p_rank", "a_number"]);
    for (name, part) in ["f1", "f2", "f1*f2/gcd^2"].iter().zip(&rep.parts) {
        r.push([
            name.to_string(),
            part.curve.f().to_string(),
            part.curve.genus().to_string(),
            part.cartier.p_rank.to_string(),
            part.cartier.a_number.to_string(),
        ]);
    }
    r.push([
        KleinReport::LABEL.to_string(),
        String::new(),
        rep.genus_sum.to_string(),
        rep.p_rank_sum.to_string(),
        rep.a_number_sum.to_string(),
    ]);
    r.detail = json!({ "common_factor_degree": rep.common_factor_degree });
    Ok(r)
}

fn zeta(a: &CurveArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let c = cx.curve(a.p, a.k, &a.f)?;
    cx.bounds
        .insert("point_count_bound".into(), json!(ZETA_BOUND));
    let z = zeta_data(&c)?;
    let join = |xs: Vec<String>| xs.join(" ");
    let mut r = Results::new(&[
        "p",
        "k",
        "genus",
        "point_counts",
        "l_polynomial",
        "newton_polygon",
        "p_rank",
    ]);
    r.push([
        a.p.to_string(),
        a.k.to_string(),
        c.genus().to_string(),
        join(z.point_counts.iter().map(u64::to_string).collect()),
        join(z.l_polynomial.iter().map(i128::to_string).collect()),
        z.newton_polygon.to_string(),
        z.newton_polygon.p_rank().to_string(),
    ]);
    if a.matrices {
        r.detail = json!({ "cartier_manin": matrix_json(&cartier_matrix(&c).matrix) });
    }
    Ok(r)
}

fn dm(a: &DmArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let f = cx.field(a.p, a.k)?;
    let m = match (&a.preset, &a.sum) {
        (Some(name), None) => preset(&f, name)?,
        (None, Some(sum)) => parse_sum(&f, sum)?,
        _ => {
            return Err(CliError::Invalid(
                "give exactly one of --preset and --sum".into(),
            ))
        }
    };
    let mut r = Results::new(&["label", "dim", "p_rank", "a_number", "f_matrix", "v_matrix"]);
    r.push([
        m.label().unwrap_or("D").to_string(),
        m.dim().to_string(),
        m.p_rank().to_string(),
        m.a_number().to_string(),
        m.f_matrix().to_string(),
        m.v_matrix().to_string(),
    ]);
    r.detail = json!({
        "f_matrix": matrix_json(m.f_matrix()),
        "v_matrix": matrix_json(m.v_matrix()),
        "ker_f_dim": m.ker_f_dim(),
        "ker_v_dim": m.ker_v_dim(),
    });
    Ok(r)
}

fn as_aut(a: &AsAutArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let f = cx.field(a.p, a.k)?;
    let curve = ASCurve::new(&parse_poly(&f, &a.f)?)?;
    let t = translation_group(&curve, a.ext)?;
    cx.note_field(&t.field);
    let b = big_action_report(&curve, t.sylow_order)?;
    let mut r = Results::new(&[
        "p",
        "ext",
        "degree",
        "genus",
        "translations",
        "sylow_order",
        "ratio1",
        "ratio2",
        "condition_n",
        "extremal",
    ]);
    r.push([
        a.p.to_string(),
        a.ext.to_string(),
        curve.degree().to_string(),
        curve.genus().to_string(),
        t.group_order.to_string(),
        t.sylow_order.to_string(),
        b.ratio1.to_string(),
        b.ratio2.to_string(),
        b.condition_n.to_string(),
        b.extremal.to_string(),
    ]);
    let witnesses: Vec<String> = t
        .witnesses
        .iter()
        .map(|&x| t.field.format_coeff(x))
        .collect();
    r.detail = json!({
        "reduced_f": curve.f().to_string(),
        "witnesses": witnesses,
        "group_order": t.group_order,
        "ratio1": b.ratio1.to_string(),
        "ratio2": b.ratio2.to_string(),
        "condition_n": b.condition_n,
    });
    Ok(r)
}

/// Accepted shapes of a forms file.
#[derive(Deserialize)]
#[serde(untagged)]
enum FormsFile {
    Space {
        #[serde(default)]
        m: Option<usize>,
        forms: Vec<LogFormRecord>,
    },
    List(Vec<LogFormRecord>),
    Single(LogFormRecord),
}

fn pagot_verify(a: &PagotVerifyArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let text = std::fs::read_to_string(&a.file)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", a.file.display())))?;
    let file: FormsFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", a.file.display())))?;
    let (m, records) = match file {
        FormsFile::Space { m, forms } => (m, forms),
        FormsFile::List(forms) => (None, forms),
        FormsFile::Single(form) => (None, vec![form]),
    };
    let forms = records
        .iter()
        .map(LogFormRecord::to_form)
        .collect::<Result<Vec<_>, _>>()?;
    let mut c = LSpaceCandidate::from_logforms(&forms)?;
    cx.note_field(&c.field);
    if let Some(m) = m {
        c.m = m;
    }
    let verdict = verify_lspace(&c);
    let div = divisibility_necessity_check(&c);
    let mut r = Results::new(&["n", "m", "verdict", "combination", "reason", "common_poles"]);
    let (v, comb, reason) = match &verdict {
        Verdict::Pass => ("PASS", String::new(), String::new()),
        Verdict::Fail {
            combination,
            reason,
        } => (
            "FAIL",
            combination
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            reason.clone(),
        ),
    };
    r.push([
        c.n().to_string(),
        c.m.to_string(),
        v.to_string(),
        comb,
        reason,
        div.common_poles.to_string(),
    ]);
    r.detail = json!({
        "necessary_divisibility": div.theorem_holds,
        "conjectured_divisibility": div.conjecture_holds,
        "expected_common_poles": div.expected_common_poles.to_string(),
    });
    Ok(r)
}

fn pagot_search_cmd(a: &PagotSearchArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let budget = cx.budget(PAGOT_BUDGET);
    cx.bounds
        .insert("normalization".into(), json!(PAIR_NORMALIZATION));
    let s = pagot_search(a.p, a.m, a.ext, budget)?;
    cx.note_field(&s.field);
    let mut r = Results::new(&["p", "m", "ext", "candidates", "witnesses", "verdict"]);
    r.push([
        a.p.to_string(),
        a.m.to_string(),
        a.ext.to_string(),
        s.candidates.to_string(),
        s.witnesses.len().to_string(),
        if s.exhausted() { "EXHAUSTED" } else { "FOUND" }.to_string(),
    ]);
    let mut pairs = Vec::new();
    for (i, (pa, pb)) in s.witnesses.iter().enumerate() {
        let check = pagot_pair_check(pa, pb, a.m)?;
        let lspace = check.lspace.as_ref().is_some_and(Verdict::is_pass);
        if i < NOTED_WITNESSES {
            r.notes.push(format!(
                "A = {pa}; B = {pb}; span {}",
                if lspace { "PASS" } else { "FAIL" }
            ));
        }
        pairs.push(json!({ "a": pa.to_string(), "b": pb.to_string(), "span_verified": lspace }));
    }
    if s.witnesses.len() > NOTED_WITNESSES {
        r.notes.push(format!(
            "{} more in the JSON report",
            s.witnesses.len() - NOTED_WITNESSES
        ));
    }
    if s.exhausted() {
        r.notes.push(format!(
            "no witness over GF({}^{}); evidence over this field only",
            a.p, a.ext
        ));
    }
    r.detail = json!({ "witnesses": pairs });
    Ok(r)
}

fn pagot_family(a: &PagotFamilyArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let ext = a.ext.unwrap_or(a.n);
    let f = cx.field(a.p, ext)?;
    let params: Vec<Elem> = match &a.params {
        Some(text) => text
            .split(',')
            .map(|s| parse_elem(&f, s.trim()))
            .collect::<Result<_, _>>()?,
        None => (0..a.n).map(|i| f.pow(f.gen(), i as u64)).collect(),
    };
    if params.len() != a.n {
        return Err(CliError::Invalid(format!(
            "--n {} but {} parameters given",
            a.n,
            params.len()
        )));
    }
    let fam = elementary_family(&f, &params)?;
    let div = divisibility_necessity_check(&fam.candidate);
    let mut r = Results::new(&[
        "p",
        "n",
        "m",
        "poles_per_form",
        "verdict",
        "common_poles",
        "expected_common_poles",
    ]);
    r.push([
        a.p.to_string(),
        a.n.to_string(),
        fam.m.to_string(),
        fam.basis[0].pole_count().to_string(),
        if fam.verdict.is_pass() {
            "PASS"
        } else {
            "FAIL"
        }
        .to_string(),
        div.common_poles.to_string(),
        div.expected_common_poles.to_string(),
    ]);
    let forms: Vec<LogFormRecord> = fam.basis.iter().map(LogFormRecord::from_form).collect();
    r.detail = json!({ "m": fam.m, "forms": forms });
    Ok(r)
}

fn np_enum(a: &NpEnumArgs) -> Result<Results, CliError> {
    let poset = np_enumerate(a.g)?;
    let mut r = Results::new(&["node", "polygon", "p_rank", "supersingular"]);
    for (i, np) in poset.nodes().iter().enumerate() {
        r.push([
            i.to_string(),
            np.to_string(),
            np.p_rank().to_string(),
            np.is_supersingular().to_string(),
        ]);
    }
    let covers = poset.covers();
    r.notes.push(format!(
        "{} polygons, {} cover relations",
        poset.len(),
        covers.len()
    ));
    if let Some(path) = &a.dot {
        std::fs::write(path, poset.to_dot())?;
    }
    r.detail = json!({ "covers": covers });
    Ok(r)
}

fn polygon_arg(
    text: Option<&str>,
    g: usize,
    default: NewtonPolygon,
) -> Result<NewtonPolygon, CliError> {
    let np = match text {
        Some(t) => np_validate(parse_slopes(t)?)?,
        None => default,
    };
    if np.genus() != g {
        return Err(CliError::Invalid(format!(
            "{np} has genus {}, not {g}",
            np.genus()
        )));
    }
    Ok(np)
}

fn np_chain(a: &NpChainArgs) -> Result<Results, CliError> {
    let from = polygon_arg(a.slopes.as_deref(), a.g, NewtonPolygon::supersingular(a.g))?;
    let to = polygon_arg(a.to.as_deref(), a.g, NewtonPolygon::ordinary(a.g))?;
    let poset = np_enumerate(a.g)?;
    let len = np_longest_chain(&poset, &from, &to)?;
    let mut r = Results::new(&["g", "from", "to", "length"]);
    r.push([
        a.g.to_string(),
        from.to_string(),
        to.to_string(),
        len.to_string(),
    ]);
    Ok(r)
}

fn nielsen(a: &NielsenArgs, cx: &mut Ctx) -> Result<Results, CliError> {
    let budget = cx.budget(NIELSEN_BUDGET);
    cx.bounds
        .insert("group_order_bound".into(), json!(GROUP_ORDER_BOUND));
    let group = PermGroup::parse(&a.group, a.degree)?;
    let classes = parse_classes(&a.classes)?;
    let tuples = enumerate_tuples(&group, &classes, !a.all, budget)?;
    let mut r = Results::new(&[
        "group",
        "order",
        "classes",
        "tuples",
        "genus",
        "conjugacy_classes",
        "orbits",
        "orbit_sizes",
    ]);
    let genus = if a.genus {
        let gs: BTreeSet<i64> = tuples
            .iter()
            .map(|t| rh_genus(group.degree(), t))
            .collect::<Result<_, _>>()?;
        gs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
    } else {
        String::new()
    };
    let mut detail = json!({});
    let (conj, orbits, sizes) = if a.orbits {
        let rep = braid_orbits(&group, &tuples);
        for (size, reps) in rep.orbit_sizes.iter().zip(&rep.representatives) {
            let cells: Vec<String> = reps.iter().map(|p| p.to_string()).collect();
            r.notes
                .push(format!("orbit of size {size}: [{}]", cells.join(" ")));
        }
        detail = json!({
            "closure_classes": rep.closure_class_count,
            "representatives": rep
                .representatives
                .iter()
                .map(|t| t.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        });
        (
            rep.class_count.to_string(),
            rep.orbit_count.to_string(),
            rep.orbit_sizes
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        )
    } else {
        Default::default()
    };
    let class_text: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
    r.push([
        group.name().to_string(),
        group.order().to_string(),
        class_text.join(","),
        tuples.len().to_string(),
        genus,
        conj,
        orbits,
        sizes,
    ]);
    r.detail = detail;
    Ok(r)
}

fn accept(a: &AcceptArgs) -> Result<Outcome, CliError> {
    let only = match &a.only {
        None => None,
        Some(text) => Some(
            text.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u8>()
                        .ok()
                        .filter(|i| acceptance::CRITERIA.iter().any(|c| c.0 == *i))
                        .ok_or_else(|| CliError::Invalid(format!("no criterion {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let opts = SuiteOptions {
        only,
        fault: a.inject_fault,
    };
    let outcomes = acceptance::run_suite(&opts);
    let mut r = Results::new(&["criterion", "name", "status", "detail"]);
    let mut times = Vec::new();
    for o in &outcomes {
        r.push([
            o.id.to_string(),
            o.name.to_string(),
            if o.pass { "PASS" } else { "FAIL" }.to_string(),
            o.detail.clone(),
        ]);
        times.push(o.elapsed.as_millis() as u64);
    }
    let status = if outcomes.iter().all(|o| o.pass) {
        Status::Complete
    } else {
        Status::Failed
    };
    Ok(Outcome {
        results: r,
        status,
        rows_ms: Some(times),
    })
}
