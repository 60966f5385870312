use gl11_core::characters::character;
use gl11_core::extensions::{
    closed_form_local, induce, is_local, monodromy_exponent, weight_growth, ExtensionSpec,
};
use gl11_core::fusion::fuse;
use gl11_core::kz::{
    build_first_order_system, check_transform, check_transform_of, closed_form, eliminate_to_second_order, hyp2f1,
    main_diff_eq, ode_residual, verify_vanish1, Vanish1Relations,
};
use gl11_core::oracle::{decompose, realize, tensor};
use gl11_core::symbolic::rational::{int, is_integer, rat};
use gl11_core::symbolic::{Field, ParamField};
use gl11_core::text::{parse_fin_label, parse_module_label, render_fin};
use gl11_core::{Error, ModuleLabel};
use serde_json::{json, Map, Value};

use crate::args::{Command, GlobalOpts, KzAction};
use crate::output;

/// Residual bound for the regular solution of the main ODE.
pub const ODE_RESIDUAL_BOUND: f64 = 1e-10;
/// Bound on `|2F1(x, -x; 1; 1) - sin(πx)/(πx)|`.
pub const GAUSS_BOUND: f64 = 1e-8;

pub fn execute(cmd: &Command, g: &GlobalOpts) -> Result<Value, Error> {
    match cmd {
        Command::Fuse { a, b } => {
            let sum = fuse(&parse_module_label(a)?, &parse_module_label(b)?)?;
            Ok(json!({ "summands": output::formal_sum(&sum) }))
        }
        Command::Char { label } => char_cmd(&parse_module_label(label)?, g),
        Command::Induce { label } => induce_cmd(&parse_module_label(label)?, g),
        Command::Monodromy { label } => monodromy_cmd(&parse_module_label(label)?, g),
        Command::Local { label } => local_cmd(&parse_module_label(label)?, &g.ext),
        Command::Kz { action: KzAction::Verify } => Ok(kz_verify(g.tol)),
        Command::Kz { action: KzAction::Hyp2f1 { x, z } } => {
            let value = hyp2f1(*x, *z, g.tol)?;
            let mut doc = json!({ "x": x, "z": z, "tol": g.tol, "value": value });
            if *z == 1.0 {
                doc["closed_form"] = json!(closed_form(*x));
            }
            Ok(doc)
        }
        Command::Oracle { a, b } => {
            let (fa, fb) = (parse_fin_label(a)?, parse_fin_label(b)?);
            let t = tensor(&realize(&fa), &realize(&fb));
            let parts = decompose(&t)?;
            Ok(json!({
                "a": render_fin(&fa),
                "b": render_fin(&fb),
                "dim": t.dim(),
                "summands": output::fin_summands(&parts),
            }))
        }
        Command::Kdec { label } => {
            let l = parse_module_label(label)?;
            Ok(json!({ "label": output::label(&l), "factors": output::formal_sum(&l.k_decompose()) }))
        }
        Command::Batch { .. } => Err(Error::InvalidInput("batch cannot be nested".into())),
    }
}

fn char_cmd(l: &ModuleLabel, g: &GlobalOpts) -> Result<Value, Error> {
    let ch = character(l, &g.cutoff, None)?;
    Ok(json!({
        "label": output::label(l),
        "delta": output::rational(&l.delta()),
        "cutoff": output::rational(&g.cutoff),
        "terms": output::series(&ch),
    }))
}

fn ext_info(ext: &ExtensionSpec) -> Value {
    json!({
        "name": ext.name(),
        "generator": output::label(&ext.generator()),
        "warnings": ext.admissibility().warnings,
    })
}

fn induce_cmd(l: &ModuleLabel, g: &GlobalOpts) -> Result<Value, Error> {
    let summands: Vec<Value> = induce(l, &g.ext, g.m_range)?
        .iter()
        .map(|(m, s)| json!({ "m": m, "label": output::label(s), "delta": output::rational(&s.delta()) }))
        .collect();
    let mut doc = json!({
        "label": output::label(l),
        "extension": ext_info(&g.ext),
        "m_range": g.m_range,
        "summands": summands,
    });
    if l.is_simple() {
        doc["local"] = json!(is_local(l, &g.ext)?);
        let w = weight_growth(l, &g.ext)?;
        doc["growth"] = json!({
            "quadratic_coeff": output::rational(&w.quadratic_coeff),
            "linear_coeff": output::rational(&w.linear_coeff),
            "linear_coeff_negative": output::rational(&w.linear_coeff_negative),
            "classification": w.classification.as_str(),
        });
    }
    Ok(doc)
}

fn monodromy_cmd(l: &ModuleLabel, g: &GlobalOpts) -> Result<Value, Error> {
    let mut exponents = Vec::new();
    for m in -g.m_range..=g.m_range {
        let generator = g.ext.generator_of(m);
        let e = monodromy_exponent(l, &generator)?;
        exponents.push(json!({
            "m": m,
            "generator": output::label(&generator),
            "exponent": output::rational(&e),
            "trivial": is_integer(&e),
        }));
    }
    Ok(json!({
        "label": output::label(l),
        "extension": ext_info(&g.ext),
        "exponents": exponents,
        "local": is_local(l, &g.ext)?,
    }))
}

fn local_cmd(l: &ModuleLabel, ext: &ExtensionSpec) -> Result<Value, Error> {
    Ok(json!({
        "label": output::label(l),
        "extension": ext_info(ext),
        "local": is_local(l, ext)?,
        "closed_form": closed_form_local(l, ext),
    }))
}

fn check(name: &str, pass: bool, extra: Map<String, Value>) -> Value {
    let mut m = extra;
    m.insert("check".into(), json!(name));
    m.insert("status".into(), json!(if pass { "pass" } else { "fail" }));
    Value::Object(m)
}

fn fields(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => Map::new(),
    }
}

/// Every KZ check, with residuals and sample values. A check that errors is
/// reported as failed with its message.
pub fn kz_verify(tol: f64) -> Value {
    let mut checks = Vec::new();

    let elimination = eliminate_to_second_order(&build_first_order_system());
    let ok = elimination.as_ref().is_ok_and(|ode| *ode == main_diff_eq());
    let detail = match &elimination {
        Ok(ode) => json!({ "ode": ode.to_string() }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    checks.push(check("elimination", ok, fields(detail)));

    checks.push(check("transform", check_transform(), Map::new()));
    let mutated = ParamField::delta()
        .mul(&ParamField::from_i64(2))
        .add(&ParamField::one());
    checks.push(check(
        "transform_mutation_rejected",
        !check_transform_of(&main_diff_eq(), &mutated),
        Map::new(),
    ));

    let report = Vanish1Relations::standard().reduce();
    checks.push(check(
        "vanish1",
        verify_vanish1(),
        fields(json!({ "residue": report.residue.to_string() })),
    ));

    let zs = [0.1, 0.25, 0.5, 0.75, 0.9];
    let params = [(rat(1, 3), rat(1, 5)), (rat(1, 2), int(0)), (rat(-2, 3), rat(3, 2)), (rat(5, 4), int(-2)), (rat(1, 10), int(4))];
    let mut worst = 0.0f64;
    let mut failure = None;
    for (x, delta) in &params {
        for &z in &zs {
            match ode_residual(x, delta, z) {
                Ok(r) => worst = worst.max(r),
                Err(e) => failure = Some(e.to_string()),
            }
        }
    }
    let mut extra = fields(json!({ "residual": worst, "bound": ODE_RESIDUAL_BOUND }));
    if let Some(e) = &failure {
        extra.insert("error".into(), json!(e));
    }
    checks.push(check("ode_residual", failure.is_none() && worst < ODE_RESIDUAL_BOUND, extra));

    let mut values = Vec::new();
    let mut gauss_ok = true;
    for (p, q) in [(1, 10), (1, 3), (2, 5), (1, 2), (7, 10)] {
        let x = p as f64 / q as f64;
        let exact = closed_form(x);
        match hyp2f1(x, 1.0, tol) {
            Ok(v) => {
                gauss_ok &= (v - exact).abs() < GAUSS_BOUND;
                values.push(json!({ "x": format!("{p}/{q}"), "value": v, "closed_form": exact, "error": (v - exact).abs() }));
            }
            Err(e) => {
                gauss_ok = false;
                values.push(json!({ "x": format!("{p}/{q}"), "error": e.to_string() }));
            }
        }
    }
    checks.push(check("gauss_value", gauss_ok, fields(json!({ "values": values, "bound": GAUSS_BOUND }))));

    let status = if checks.iter().all(|c| c["status"] == "pass") { "pass" } else { "fail" };
    json!({ "checks": checks, "status": status, "tol": tol })
}
