use lietame::bfunction::BFunction;
use lietame::exactalg::{rat, vars, Monomial, MultiPoly};
use lietame::liealg::{ad_charpoly, apply_field, discriminant, hc_euler_shift, pi_square_check, realize, tau_field};
use lietame::orbits::{enumerate_orbits, transversal_weights, Partition};
use lietame::rootsys::{build_root_system, closed_symmetric_subsets, subsystem_type, weyl_degrees, RootSystem};
use lietame::strata::{enumerate_strata, origin_bfunction, stratum_bfunction, tameness_report, Stratum};
use lietame::weylalg::{euler_power_identity, membership_threshold, multinomial_slice_sum};
use lietame::{Error, Limits, Rational, Result};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::args::{BfunArgs, Cli, Command, Suite, TameArgs, VerifyArgs};
use crate::report::{list, q, qlist, rational, rationals, Output, Report, Table};

pub fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::from_env();
    if let Some(d) = cli.max_dim {
        l.max_charpoly_dim = d;
    }
    if let Some(w) = cli.max_weyl_order {
        l.max_weyl_order = w;
    }
    l
}

pub fn dispatch(cli: &Cli) -> Result<Output> {
    let lim = limits(cli);
    match &cli.command {
        Command::Degrees(t) => degrees(&t.type_label, &lim),
        Command::Roots(t) => roots(&t.type_label),
        Command::Subsets(t) => subsets(&t.type_label, &lim),
        Command::Orbits(t) => orbits(&t.type_label),
        Command::Strata(t) => strata(&t.type_label, &lim),
        Command::Bfun(a) => bfun(a, &lim),
        Command::Tame(a) => tame(a, &lim),
        Command::Verify(a) => verify(a, &lim),
        Command::Delta(t) => delta(&t.type_label, &lim),
    }
}

fn out(report: Report, tables: Vec<Table>, notes: Vec<String>) -> Output {
    Output { report, tables, notes, failed: false }
}

fn degrees(t: &str, lim: &Limits) -> Result<Output> {
    let rs = build_root_system(t)?;
    let d = weyl_degrees(&rs, lim.max_weyl_order)?;
    let sum: u32 = d.iter().sum();
    let product: u64 = d.iter().map(|&x| x as u64).product();
    let results = json!({
        "type": rs.type_label(),
        "dim": rs.dim(),
        "rank": rs.rank(),
        "degrees": d,
        "sum": sum,
        "half_dim_plus_rank": rational(&rat((rs.dim() + rs.rank()) as i64, 2)),
        "product": product,
    });
    let notes = vec![
        format!("type: {}", rs.type_label()),
        format!("degrees: {}", list(&d)),
        format!("sum: {sum} = ({}+{})/2", rs.dim(), rs.rank()),
        format!("product: {product} = |W|"),
    ];
    Ok(out(Report::new("degrees", json!({"type": t}), results), Vec::new(), notes))
}

fn coords(rs: &RootSystem, i: usize) -> Vec<i64> {
    rs.root(i).to_vec()
}

fn roots(t: &str) -> Result<Output> {
    let rs = build_root_system(t)?;
    let pos: Vec<Vec<i64>> = (0..rs.num_positive()).map(|i| coords(&rs, i)).collect();
    let (long, short) = rs.length_counts();
    let results = json!({
        "type": rs.type_label(),
        "rank": rs.rank(),
        "dim": rs.dim(),
        "num_roots": rs.roots().len(),
        "cartan_matrix": rs.cartan_matrix(),
        "positive_roots": pos,
        "long_roots": long,
        "short_roots": short,
    });
    let mut cartan = Table::new(
        format!("{}: rank {}, dim {}, {} roots", rs.type_label(), rs.rank(), rs.dim(), rs.roots().len()),
        &[("cartan", false)],
    );
    for row in rs.cartan_matrix() {
        cartan.row(vec![row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" ")]);
    }
    let mut table = Table::new("positive roots (simple-root coordinates)", &[("#", true), ("root", false), ("height", true)]);
    for (i, r) in pos.iter().enumerate() {
        table.row(vec![i.to_string(), list(r), r.iter().sum::<i64>().to_string()]);
    }
    Ok(out(Report::new("roots", json!({"type": t}), results), vec![cartan, table], Vec::new()))
}

struct SubsetRow {
    index: usize,
    members: Vec<usize>,
    label: String,
    m: usize,
    k: usize,
    levi: bool,
}

fn subset_rows(rs: &RootSystem, lim: &Limits) -> Result<Vec<SubsetRow>> {
    closed_symmetric_subsets(rs, lim)?
        .into_iter()
        .enumerate()
        .map(|(index, p)| {
            let t = subsystem_type(rs, &p)?;
            Ok(SubsetRow {
                index,
                levi: p.is_span_closed(rs),
                members: p.members().to_vec(),
                label: t.label,
                m: t.dim,
                k: t.rank,
            })
        })
        .collect()
}

fn subsets(t: &str, lim: &Limits) -> Result<Output> {
    let rs = build_root_system(t)?;
    let rows = subset_rows(&rs, lim)?;
    let mut table = Table::new(
        format!("{}: closed symmetric subsets up to conjugacy", rs.type_label()),
        &[("#", true), ("type", false), ("size", true), ("m", true), ("k", true), ("levi", false), ("positive roots", false)],
    );
    let mut items = Vec::new();
    for r in &rows {
        let pos: Vec<Vec<i64>> = r.members.iter().filter(|&&i| rs.is_positive(i)).map(|&i| coords(&rs, i)).collect();
        table.row(vec![
            r.index.to_string(),
            r.label.clone(),
            r.members.len().to_string(),
            r.m.to_string(),
            r.k.to_string(),
            if r.levi { "yes" } else { "no" }.to_string(),
            pos.iter().map(|v| list(v)).collect::<Vec<_>>().join(" "),
        ]);
        items.push(json!({
            "index": r.index,
            "type": r.label,
            "size": r.members.len(),
            "m": r.m,
            "k": r.k,
            "levi": r.levi,
            "positive_roots": pos,
        }));
    }
    let results = json!({"type": rs.type_label(), "subsets": items});
    Ok(out(Report::new("subsets", json!({"type": t}), results), vec![table], Vec::new()))
}

fn orbits(t: &str) -> Result<Output> {
    let list_ = enumerate_orbits(t)?;
    let mut table = Table::new(
        format!("{}: nilpotent orbits", t),
        &[("partition", false), ("dim", true), ("codim", true), ("sl2 weights", false), ("m'", false), ("total", true)],
    );
    let mut items = Vec::new();
    for o in &list_ {
        let (m, total) = transversal_weights(o)?;
        table.row(vec![
            o.label(),
            o.dim_orbit().to_string(),
            o.codim().to_string(),
            list(o.sl2_weights()),
            qlist(m.entries()),
            q(&total),
        ]);
        items.push(json!({
            "partition": o.label(),
            "dim_orbit": o.dim_orbit(),
            "codim": o.codim(),
            "sl2_weights": o.sl2_weights(),
            "transversal_weights": rationals(m.entries()),
            "total_weight": rational(&total),
        }));
    }
    let results = json!({"type": t, "orbits": items});
    Ok(out(Report::new("orbits", json!({"type": t}), results), vec![table], Vec::new()))
}

fn stratum_json(s: &Stratum) -> Value {
    json!({
        "label": s.label(),
        "qp_type": s.qp_type(),
        "m": s.m(),
        "k": s.k(),
        "orbit": s.orbit().map(|o| o.label()),
        "codim": s.codim(),
        "weights": rationals(s.weights().entries()),
        "weight_total": rational(&s.weights().total()),
        "conic": s.conic(),
    })
}

fn strata(t: &str, lim: &Limits) -> Result<Output> {
    let list_ = enumerate_strata(t, lim)?;
    let label = list_.first().map_or(t.to_string(), |s| s.ambient_type().to_string());
    let mut table = Table::new(
        format!("{label}: strata"),
        &[("stratum", false), ("q_P", false), ("m", true), ("k", true), ("orbit", false), ("codim", true), ("weights", false)],
    );
    for s in &list_ {
        table.row(vec![
            s.label(),
            s.qp_type().to_string(),
            s.m().to_string(),
            s.k().to_string(),
            s.orbit().map_or("-".to_string(), |o| o.label()),
            s.codim().to_string(),
            qlist(s.weights().entries()),
        ]);
    }
    let results = json!({"type": label, "strata": list_.iter().map(stratum_json).collect::<Vec<_>>()});
    Ok(out(Report::new("strata", json!({"type": t}), results), vec![table], Vec::new()))
}

fn bfun_json(b: &BFunction) -> Value {
    json!({
        "roots": rationals(b.roots()),
        "total_weight": rational(b.total_weight()),
        "kind": b.kind().as_str(),
        "filtration": b.filtration(),
        "coefficients": rationals(&b.coefficients()),
        "tame": b.is_tame(),
        "margin": b.margin().as_ref().map(rational),
    })
}

fn bfun_notes(b: &BFunction) -> Vec<String> {
    vec![
        format!("b(T) = {b}"),
        format!("roots: {}", qlist(b.roots())),
        format!("total weight: {}", q(b.total_weight())),
        format!("kind: {}", b.kind()),
        format!("filtration: {}", b.filtration()),
        format!("tame: {}", b.is_tame()),
        format!("margin: {}", b.margin().map_or("-".to_string(), |m| q(&m))),
    ]
}

fn parse_orbit(s: &str) -> Result<Vec<Partition>> {
    s.split('/').map(Partition::parse).collect()
}

fn bfun(a: &BfunArgs, lim: &Limits) -> Result<Output> {
    let t = &a.ty.type_label;
    let inputs = json!({
        "type": t,
        "p_class": a.p_class,
        "orbit": a.orbit,
        "upper_root": a.upper_root,
        "origin": a.origin,
    });
    if a.origin {
        let b = origin_bfunction(t, a.upper_root, lim)?;
        let results = json!({"stratum": "origin", "bfunction": bfun_json(&b)});
        return Ok(out(Report::new("bfun", inputs, results), Vec::new(), bfun_notes(&b)));
    }
    let selector = a
        .p_class
        .as_deref()
        .ok_or_else(|| Error::input("give --p-class (index or subsystem type) or --origin"))?;
    let rs = build_root_system(t)?;
    let rows = subset_rows(&rs, lim)?;
    let chosen = match selector.parse::<usize>() {
        Ok(i) => rows
            .iter()
            .find(|r| r.index == i)
            .ok_or_else(|| Error::input(format!("no subset class with index {i}")))?,
        Err(_) => {
            let want = lietame::rootsys::label_of(&lietame::rootsys::parse_type_label(selector)?);
            let hits: Vec<&SubsetRow> = rows.iter().filter(|r| r.levi && r.label == want).collect();
            match hits.as_slice() {
                [one] => *one,
                [] => return Err(Error::input(format!("no Levi-type subset of type {want}"))),
                _ => {
                    let idx: Vec<String> = hits.iter().map(|r| r.index.to_string()).collect();
                    return Err(Error::input(format!(
                        "{want} matches several classes ({}); pass an index",
                        idx.join(", ")
                    )));
                }
            }
        }
    };
    if !chosen.levi {
        return Err(Error::input(format!(
            "subset class {} is not of Levi type and carries no stratum",
            chosen.index
        )));
    }
    let strata = enumerate_strata(t, lim)?;
    let stratum = if chosen.members.is_empty() {
        strata.iter().find(|s| s.is_open())
    } else {
        let orbit = a
            .orbit
            .as_deref()
            .ok_or_else(|| Error::input("--orbit is required for a nonempty subset class"))?;
        let parts = parse_orbit(orbit)?;
        strata.iter().find(|s| {
            s.p_class().members() == chosen.members.as_slice()
                && s.orbit().is_some_and(|o| o.partitions().into_iter().eq(parts.iter()))
        })
    }
    .ok_or_else(|| Error::input("no stratum matches the given class and orbit"))?;
    let b = stratum_bfunction(stratum, a.upper_root)?;
    let results = json!({"stratum": stratum_json(stratum), "bfunction": bfun_json(&b)});
    let mut notes = vec![format!("stratum: {} (codim {})", stratum.label(), stratum.codim())];
    notes.extend(bfun_notes(&b));
    Ok(out(Report::new("bfun", inputs, results), Vec::new(), notes))
}

fn tame(a: &TameArgs, lim: &Limits) -> Result<Output> {
    let rep = tameness_report(&a.ty.type_label, a.upper_root, lim)?;
    let mut table = Table::new(
        format!("{}: tameness with upper root {}", rep.ambient_type, rep.upper_root),
        &[("stratum", false), ("codim", true), ("roots", false), ("weight", true), ("margin", true), ("tame", false), ("conic", false)],
    );
    let mut rows = Vec::new();
    for r in &rep.rows {
        table.row(vec![
            r.stratum.label(),
            r.stratum.codim().to_string(),
            qlist(r.bfunction.roots()),
            q(r.bfunction.total_weight()),
            r.margin.as_ref().map_or("-".to_string(), q),
            r.tame.to_string(),
            r.conic.to_string(),
        ]);
        rows.push(json!({
            "stratum": r.stratum.label(),
            "codim": r.stratum.codim(),
            "roots": rationals(r.bfunction.roots()),
            "total_weight": rational(r.bfunction.total_weight()),
            "kind": r.bfunction.kind().as_str(),
            "tame": r.tame,
            "margin": r.margin.as_ref().map(rational),
            "conic": r.conic,
        }));
    }
    let all = rep.all_tame();
    let verdict = if all { "tame" } else { "not tame" };
    let results = json!({"type": rep.ambient_type, "upper_root": rep.upper_root, "strata": rows, "all_tame": all, "verdict": verdict});
    let inputs = json!({"type": a.ty.type_label, "upper_root": a.upper_root});
    let mut o = out(Report::new("tame", inputs, results), vec![table], vec![format!("verdict: {verdict}")]);
    o.failed = !all;
    Ok(o)
}

fn check(cases: &mut Vec<Value>, failures: &mut usize, case: Value, ok: bool) {
    if !ok {
        *failures += 1;
    }
    let mut c = case;
    c["pass"] = json!(ok);
    cases.push(c);
}

fn default_types(given: &[String], fallback: &[&str]) -> Vec<String> {
    if given.is_empty() {
        fallback.iter().map(|s| s.to_string()).collect()
    } else {
        given.to_vec()
    }
}

fn verify(a: &VerifyArgs, lim: &Limits) -> Result<Output> {
    let mut cases = Vec::new();
    let mut failures = 0;
    let suite = a.suite;
    let suite_name = suite.to_possible_value().map_or_else(String::new, |v| v.get_name().to_string());
    match suite {
        Suite::SliceSums => {
            for n in 1..=a.max_n {
                for total in 0..=a.max_big_n {
                    for beta in Monomial::all_of_degree(n, total) {
                        for big_n in 0..=total {
                            let got = multinomial_slice_sum(&beta.0, big_n);
                            check(&mut cases, &mut failures, json!({"beta": beta.0, "N": big_n}), got.is_ok());
                        }
                    }
                }
            }
        }
        Suite::Euler => {
            for n in 1..=a.max_n {
                for big_n in 1..=a.max_big_n {
                    let op = euler_power_identity(n, big_n, lim)?;
                    check(&mut cases, &mut failures, json!({"n": n, "N": big_n, "terms": op.num_terms()}), op.is_zero());
                }
            }
        }
        Suite::Threshold => {
            for n in 2..=a.max_n.max(2) {
                let names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
                let v = vars(&names);
                for exps in exponent_vectors(n, a.max_big_n.max(1)) {
                    let p: Vec<MultiPoly> =
                        exps.iter().enumerate().map(|(i, &e)| MultiPoly::var(v.clone(), i).pow(e)).collect();
                    let want = exps.iter().sum::<u32>() - n as u32;
                    let got = membership_threshold(&p)?;
                    check(&mut cases, &mut failures, json!({"exponents": exps, "threshold": got, "expected": want}), got == want);
                }
            }
        }
        Suite::Jacobi => {
            for t in default_types(&a.types, &["A1", "A2", "C2"]) {
                // realize() runs both identity checks and fails on a violation
                let ok = match realize(&t, lim) {
                    Ok(_) => true,
                    Err(Error::Consistency(_)) => false,
                    Err(e) => return Err(e),
                };
                check(&mut cases, &mut failures, json!({"type": t}), ok);
            }
        }
        Suite::Pi2 => {
            for t in default_types(&a.types, &["A1", "A2"]) {
                let alg = realize(&t, lim)?;
                let d = discriminant(&alg, lim)?;
                let p = pi_square_check(&alg, &d)?;
                check(&mut cases, &mut failures, json!({"type": t, "ratio": rational(&p.ratio)}), true);
            }
        }
        Suite::Weights => {
            for t in default_types(&a.types, &["A1", "A2", "A3", "B2", "C2"]) {
                for o in enumerate_orbits(&t)? {
                    let dim_sum: u64 = o.sl2_weights().iter().map(|&l| l as u64 + 1).sum();
                    let total = transversal_weights(&o).map(|(_, t)| t);
                    let want = rat((o.algebra_dim() + o.codim()) as i64, 2);
                    let ok = dim_sum == o.algebra_dim() as u64 && total.as_ref().is_ok_and(|t| *t == want);
                    check(&mut cases, &mut failures, json!({"type": t, "orbit": o.label()}), ok);
                }
            }
        }
    }
    let total = cases.len();
    let inputs = json!({"suite": suite_name, "max_n": a.max_n, "max_N": a.max_big_n, "types": a.types});
    let results = json!({"suite": suite_name, "cases": cases, "total": total, "failures": failures, "all_pass": failures == 0});
    let notes = vec![format!("suite {suite_name}: {}/{total} cases pass", total - failures)];
    let mut o = out(Report::new("verify", inputs, results), Vec::new(), notes);
    o.failed = failures > 0;
    Ok(o)
}

/// Exponent vectors in `[1, max]^n`.
fn exponent_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (1..=max).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

fn delta(t: &str, lim: &Limits) -> Result<Output> {
    let alg = realize(t, lim)?;
    let lambdas = ad_charpoly(&alg, lim)?;
    let d = discriminant(&alg, lim)?;
    let tau_ok = (0..alg.dim()).all(|a| apply_field(&tau_field(&alg, a), d.poly()).is_zero());
    let p = pi_square_check(&alg, &d)?;
    let shift: Rational = hc_euler_shift(&alg);
    let results = json!({
        "type": alg.type_label(),
        "dim": alg.dim(),
        "rank": alg.rank(),
        "coordinates": alg.coords().to_vec(),
        "lower_coefficients_vanish": lambdas[..alg.rank()].iter().all(MultiPoly::is_zero),
        "discriminant": d.poly().to_string(),
        "degree": d.degree(),
        "tau_annihilates": tau_ok,
        "pi": p.pi.to_string(),
        "restricted_discriminant": p.delta_restricted.to_string(),
        "ratio": rational(&p.ratio),
        "euler_shift": rational(&shift),
    });
    let notes = vec![
        format!("type: {} (dim {}, rank {})", alg.type_label(), alg.dim(), alg.rank()),
        format!("coordinates: {}", alg.coords().join(", ")),
        format!("Delta = {}", d.poly()),
        format!("degree: {} = n - l", d.degree()),
        format!("tau(A).Delta = 0 for all basis A: {tau_ok}"),
        format!("pi = {}", p.pi),
        format!("Delta|h = {} * pi^2", q(&p.ratio)),
        format!("Euler shift (n-l)/2 = {}", q(&shift)),
    ];
    let mut o = out(Report::new("delta", json!({"type": t}), results), Vec::new(), notes);
    o.failed = !tau_ok;
    Ok(o)
}
