use std::path::Path;

use serde_json::{json, Value};
use theta_cobordism::acceptance::run_all;
use theta_cobordism::cobordism::{beta as beta_series, clearing_multiplier, mischenko_log, DualClassTable};
use theta_cobordism::exact::{format_rat, partitions_of};
use theta_cobordism::genera::{check_chern_vector, congruence_system, genus_of_poly, genus_of_theta, theta_invariants, GenusSpec};
use theta_cobordism::ln::{dequantize, diff1_commutator, ln_apply as apply_operation, quantize as quantize_poly, theta_intersection};
use theta_cobordism::series::FglCheck;
use theta_cobordism::symfun::ChernVector;
use theta_cobordism::weierstrass::{verify, VerifyOptions};
use theta_cobordism::{parse_poly, Error, Lattice64, Partition, Result, ThetaPoly};

use crate::input::{parse_chern_vector, parse_complex};
use crate::output::{table, Outcome, Status};
use crate::Family;

const WEIGHT_LIMIT: usize = 24;

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonConvergence(_) => 3,
        _ => 2,
    }
}

fn check_weight(n: usize) -> Result<()> {
    if n == 0 || n > WEIGHT_LIMIT {
        return Err(Error::InvalidParameter(format!("max weight must lie in 1..={WEIGHT_LIMIT}, got {n}")));
    }
    Ok(())
}

fn render(p: &ThetaPoly) -> String {
    p.render("t")
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

pub fn beta(n: usize) -> Result<Outcome> {
    check_weight(n)?;
    let b = beta_series(n + 1);
    let rows: Vec<Vec<String>> =
        b.coeffs().iter().enumerate().skip(1).map(|(m, c)| vec![format!("z^{m}"), render(c)]).collect();
    let payload: Vec<Value> = rows.iter().map(|r| json!({ "term": r[0], "coeff": r[1] })).collect();
    Ok(Outcome::new("beta", json!({ "max_weight": n }), json!(payload), table(&["term", "coefficient"], &rows)))
}

pub fn logarithm(n: usize) -> Result<Outcome> {
    check_weight(n)?;
    let log = mischenko_log(n + 1)?;
    let table_data = DualClassTable::build(n)?;
    let rows: Vec<Vec<String>> = (0..=n)
        .map(|k| vec![format!("u^{}", k + 1), render(&log.coeffs()[k + 1]), format!("[CP^{k}] = {}", render(&table_data.cp[k]))])
        .collect();
    let payload: Vec<Value> = (0..=n)
        .map(|k| json!({ "power": k + 1, "coeff": render(&log.coeffs()[k + 1]), "cp": render(&table_data.cp[k]) }))
        .collect();
    Ok(Outcome::new("logarithm", json!({ "max_weight": n }), json!(payload), table(&["term", "coefficient", "class"], &rows)))
}

pub fn classes(family: Family, n: usize) -> Result<Outcome> {
    check_weight(n)?;
    let t = DualClassTable::build(n)?;
    let (name, polys, mult, mult_name): (&str, &[ThetaPoly], Vec<String>, &str) = match family {
        Family::Vn => ("v", &t.v, t.qn.iter().map(|q| q.to_string()).collect(), "q"),
        Family::Wn => ("w", &t.w, t.w_multiplier.iter().map(|q| q.to_string()).collect(), "clearing"),
        Family::Cpn => ("cp", &t.cp, t.cp.iter().map(|p| clearing_multiplier(p).to_string()).collect(), "clearing"),
    };
    let rows: Vec<Vec<String>> =
        (1..=n).map(|k| vec![format!("{name}{k} = {}", render(&polys[k])), mult[k].clone()]).collect();
    let payload: Vec<Value> = (1..=n)
        .map(|k| json!({ "n": k, "class": render(&polys[k]), mult_name: mult[k] }))
        .collect();
    let fam = format!("{name}n");
    Ok(Outcome::new("classes", json!({ "family": fam, "max_weight": n }), json!(payload), table(&["class", mult_name], &rows)))
}

pub fn ln_apply(partition: &str, expr: &str) -> Result<Outcome> {
    let lam: Partition = partition.parse()?;
    let p = parse_poly(expr)?;
    let r = apply_operation(&lam, &p);
    let text = format!("{}\n", render(&r));
    Ok(Outcome::new("ln apply", json!({ "partition": lam.to_string(), "expr": expr }), json!({ "result": render(&r) }), text))
}

pub fn commutator(n: u32) -> Result<Outcome> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidParameter(format!("n must lie in 1..=64, got {n}")));
    }
    let rep = diff1_commutator(n);
    let payload: Vec<Value> = rep.images.iter().map(|(j, p)| json!({ "j": j, "image": render(p) })).collect();
    Ok(Outcome::new("ln commutator", json!({ "n": n }), json!(payload), rep.render()))
}

pub fn theta_intersect(n: u32, k: u32) -> Result<Outcome> {
    let x = theta_intersection(n, k)?;
    Ok(Outcome::new("theta intersect", json!({ "n": n, "k": k }), json!({ "class": render(&x) }), format!("{}\n", render(&x))))
}

fn genus_spec(name: &str, order: usize) -> Result<GenusSpec> {
    match name.strip_prefix("file:") {
        Some(path) => GenusSpec::from_json(&read_file(Path::new(path))?),
        None => GenusSpec::by_name(name, order),
    }
}

pub fn genus(name: &str, of: &str) -> Result<Outcome> {
    let (value, order) = if let Some(n) = of.strip_prefix("theta:") {
        let n: usize = n.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad dimension in {of:?}")))?;
        check_weight(n.max(1))?;
        let spec = genus_spec(name, n + 1)?;
        (genus_of_theta(&spec, n)?, n)
    } else if let Some(src) = of.strip_prefix("poly:") {
        let p = parse_poly(src)?;
        let order = p.max_weight().unwrap_or(0) as usize;
        check_weight(order.max(1))?;
        let spec = genus_spec(name, order + 1)?;
        (genus_of_poly(&spec, &p)?, order)
    } else {
        return Err(Error::InvalidParameter(format!("--of expects theta:N or poly:EXPR, got {of:?}")));
    };
    let v = format_rat(&value);
    Ok(Outcome::new("genus", json!({ "name": name, "of": of, "order": order }), json!({ "value": v }), format!("{v}\n")))
}

fn vector_json(c: &ChernVector) -> Value {
    let m: serde_json::Map<String, Value> =
        c.values().iter().map(|(l, v)| (l.to_string(), Value::String(format_rat(v)))).collect();
    json!({ "frame": c.frame().to_string(), "basis": c.basis().to_string(), "values": m })
}

fn vector_text(c: &ChernVector) -> String {
    c.values().iter().map(|(l, v)| format!("{l}: {}", format_rat(v))).collect::<Vec<_>>().join("  ")
}

pub fn invariants(n: u32, k: u32) -> Result<Outcome> {
    if n as usize > WEIGHT_LIMIT {
        return Err(Error::InvalidParameter(format!("n must be at most {WEIGHT_LIMIT}")));
    }
    let inv = theta_invariants(n, k)?;
    let betti: Vec<String> = inv.betti.iter().map(|b| b.to_string()).collect();
    let sig = inv.signature.as_ref().map(format_rat);
    let mut text = format!("betti      {}\neuler      {}\n", betti.join(" "), inv.euler);
    text.push_str(&format!("signature  {}\n", sig.clone().unwrap_or_else(|| "-".into())));
    text.push_str(&format!("tangent    {} ({})\n", vector_text(&inv.tangent), inv.tangent.basis()));
    text.push_str(&format!("normal     {} ({})\n", vector_text(&inv.normal), inv.normal.basis()));
    let payload = json!({
        "betti": betti,
        "euler": inv.euler.to_string(),
        "signature": sig,
        "tangent": vector_json(&inv.tangent),
        "normal": vector_json(&inv.normal),
    });
    Ok(Outcome::new("invariants", json!({ "n": n, "k": k }), payload, text))
}

pub fn congruences(n: u32, check: Option<&Path>) -> Result<Outcome> {
    if n == 0 || n > 8 {
        return Err(Error::InvalidParameter(format!("n must lie in 1..=8, got {n}")));
    }
    let sys = congruence_system(n);
    let params = json!({ "n": n, "check": check.map(|p| p.display().to_string()) });
    if let Some(path) = check {
        let c = parse_chern_vector(&read_file(path)?, n)?;
        let v = check_chern_vector(&c, &sys)?;
        let failing: Vec<Value> =
            v.failing.iter().map(|(mu, val)| json!({ "mu": mu.to_string(), "value": format_rat(val) })).collect();
        let mut text = format!("{}\ntodd {}\n", if v.pass { "pass" } else { "fail" }, format_rat(&v.todd));
        for (mu, val) in &v.failing {
            text.push_str(&format!("functional S_({mu}) gives {}\n", format_rat(val)));
        }
        for lam in &v.non_integral {
            text.push_str(&format!("number {lam} is not an integer\n"));
        }
        let payload = json!({
            "pass": v.pass,
            "todd": format_rat(&v.todd),
            "failing": failing,
            "non_integral": v.non_integral.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        });
        return Ok(Outcome::new("congruences", params, payload, text));
    }
    let lambdas: Vec<String> = partitions_of(n).iter().map(|l| format!("x[{l}]")).collect();
    let mut header = vec!["mu".to_string()];
    header.extend(lambdas);
    let rows: Vec<Vec<String>> = sys
        .mus
        .iter()
        .zip(&sys.functionals)
        .map(|(mu, row)| {
            let mut r = vec![if mu.is_empty() { "()".to_string() } else { mu.to_string() }];
            r.extend(row.iter().map(format_rat));
            r
        })
        .collect();
    let head: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut text = String::from("functionals on normal monomial numbers x, all integral on U-manifolds\n");
    text.push_str(&table(&head, &rows));
    let divisors: Vec<String> = sys.lattice.elementary_divisors().iter().map(|d| d.to_string()).collect();
    text.push_str(&format!("elementary divisors: {}\n", divisors.join(" ")));
    Ok(Outcome::new("congruences", params, sys.to_json(), text))
}

pub fn quantize(expr: &str, roundtrip: bool) -> Result<Outcome> {
    let p = parse_poly(expr)?;
    let q = quantize_poly(&p);
    let mut text = format!("{}\n", q.render());
    let mut payload = json!({ "tensor": q.render() });
    let mut status = Status::Ok;
    if roundtrip {
        let back = dequantize(&q);
        let ok = back == p;
        text.push_str(&format!("roundtrip {}: {}\n", if ok { "ok" } else { "FAILED" }, render(&back)));
        payload["roundtrip"] = json!({ "ok": ok, "dequantized": render(&back) });
        if !ok {
            status = Status::CheckFailed;
        }
    }
    Ok(Outcome::new("quantize", json!({ "expr": expr, "roundtrip": roundtrip }), payload, text).with_status(status))
}

pub fn fgl_check(order: usize) -> Result<Outcome> {
    if !(1..=10).contains(&order) {
        return Err(Error::InvalidParameter(format!("order must lie in 1..=10, got {order}")));
    }
    let r = FglCheck::run(&beta_series(order), order)?;
    let rows = vec![
        vec!["unit".to_string(), r.unit.to_string()],
        vec!["symmetry".to_string(), r.symmetry.to_string()],
        vec!["associativity".to_string(), r.associativity.to_string()],
        vec!["exp_identity".to_string(), r.exp_identity.to_string()],
    ];
    let status = if r.all_zero() { Status::Ok } else { Status::CheckFailed };
    let text = table(&["axiom", "nonzero residual terms"], &rows);
    Ok(Outcome::new("fgl check", json!({ "order": order }), json!(r), text).with_status(status))
}

pub fn weierstrass_verify(
    lemniscatic: bool,
    omega1: Option<&str>,
    omega2: Option<&str>,
    tol: Option<f64>,
    points: usize,
) -> Result<Outcome> {
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!("tolerance must be positive, got {t}")));
        }
    }
    if points == 0 {
        return Err(Error::InvalidParameter("need at least one sample point".into()));
    }
    let (lattice, lem) = match (omega1, omega2) {
        (Some(a), Some(b)) => {
            let (w1, w2) = (parse_complex(a)?, parse_complex(b)?);
            // the closed forms also apply to a real multiple of (1, i)
            let square = w1.im == 0.0 && w1.re > 0.0 && w2 == num_complex::Complex::new(0.0, w1.re);
            (Lattice64::new(w1, w2)?, square)
        }
        _ => (Lattice64::lemniscatic(1.0)?, true),
    };
    let lem = lem || lemniscatic;
    let rep = verify(&lattice, &VerifyOptions { tol, points, lemniscatic: lem, ..Default::default() })?;
    let mut residuals = serde_json::Map::new();
    for c in &rep.checks {
        residuals.insert(c.name.clone(), json!(c.residual));
    }
    let payload = json!({
        "pass": rep.pass(),
        "residuals": residuals,
        "checks": rep.checks,
        "lemniscatic_margin": rep.lemniscatic_margin,
    });
    let params = json!({
        "omega1": omega1.unwrap_or("1"),
        "omega2": omega2.unwrap_or("i"),
        "lemniscatic": lem,
        "tol": tol,
        "points": points,
    });
    let status = if rep.pass() { Status::Ok } else { Status::Tolerance };
    Ok(Outcome::new("weierstrass verify", params, payload, rep.render()).with_status(status))
}

pub fn selftest() -> Outcome {
    let results = run_all();
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.line());
        text.push('\n');
    }
    let passed = results.iter().filter(|r| r.pass).count();
    text.push_str(&format!("acceptance: {passed}/{} criteria pass\n", results.len()));
    let payload: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "name": r.name,
                "pass": r.pass,
                "failures": r.failures,
                "contradicted": r.contradicted,
                "notes": r.notes,
            })
        })
        .collect();
    let status = if results.iter().all(|r| r.consistent()) { Status::Ok } else { Status::CheckFailed };
    Outcome::new("selftest", json!({}), json!(payload), text).with_status(status)
}
