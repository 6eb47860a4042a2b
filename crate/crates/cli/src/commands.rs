//! The five subcommands: single-presentation reports, exhaustive sweeps, the
//! formula-vs-oracle consistency check, asymptotic tables and the search for
//! presentations with equal degrees.

use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;

use zmdeg_core::degrees::{self, ratio_decimal_str, ratio_str, DegreeReport};
use zmdeg_core::{arith, oracle, zm, ZmParams};

use crate::output::{csv_table, emit, json_lines, text_table, OutputFormat};
use crate::Failure;

pub const CSV_HEADER: &str = "m,n,r,subgroups,cyclic_subgroups,f2,cf2,sd,csd";
const ROW_KEYS: [&str; 9] = [
    "m", "n", "r", "subgroups", "cyclic_subgroups", "f2", "cf2", "sd", "csd",
];

fn report_row(rep: &DegreeReport) -> Vec<String> {
    vec![
        rep.params.m().to_string(),
        rep.params.n().to_string(),
        rep.params.r().to_string(),
        rep.subgroups.to_string(),
        rep.cyclic_subgroups.to_string(),
        rep.f2.to_string(),
        rep.cf2.to_string(),
        ratio_str(&rep.sd),
        ratio_str(&rep.csd),
    ]
}

fn render_rows(format: OutputFormat, rows: &[Vec<String>]) -> String {
    match format {
        OutputFormat::Csv => csv_table(CSV_HEADER, rows),
        OutputFormat::Json => json_lines(&ROW_KEYS, rows),
        OutputFormat::Text => text_table(&ROW_KEYS, rows),
    }
}

fn validate(m: &BigUint, n: &BigUint, r: &BigUint) -> Result<ZmParams, Failure> {
    ZmParams::validate(m.clone(), n.clone(), r.clone())
        .map_err(|e| Failure::invalid(e.to_string()))
}

/// `report`: full exact statistics of one presentation, optionally checked
/// against the brute-force oracle.
pub fn report(
    m: &BigUint,
    n: &BigUint,
    r: &BigUint,
    with_oracle: bool,
    format: OutputFormat,
    out: &Option<PathBuf>,
    oracle_bound: usize,
) -> Result<(), Failure> {
    let params = validate(m, n, r)?;
    let rep = degrees::report(&params);

    let oracle_section = if with_oracle {
        let table = oracle::build_group(&params, oracle_bound)
            .map_err(|e| Failure::resource(e.to_string()))?;
        let defs = oracle::definitional_degrees(&table, &oracle::enumerate_subgroups(&table));
        let matches = rep.f2 == BigUint::from(defs.f2)
            && rep.cf2 == BigUint::from(defs.cf2)
            && rep.sd == defs.sd
            && rep.csd == defs.csd;
        Some((defs, matches))
    } else {
        None
    };

    let content = match format {
        OutputFormat::Json => {
            let mut doc = json!({
                "params": {
                    "m": rep.params.m().to_string(),
                    "n": rep.params.n().to_string(),
                    "r": rep.params.r().to_string(),
                },
                "counts": {
                    "subgroups": rep.subgroups.to_string(),
                    "cyclic_subgroups": rep.cyclic_subgroups.to_string(),
                    "f2": rep.f2.to_string(),
                    "cf2": rep.cf2.to_string(),
                },
                "degrees": {
                    "sd": ratio_str(&rep.sd),
                    "csd": ratio_str(&rep.csd),
                },
            });
            if let Some((defs, matches)) = &oracle_section {
                doc["oracle"] = json!({
                    "f2": defs.f2.to_string(),
                    "cf2": defs.cf2.to_string(),
                    "sd": ratio_str(&defs.sd),
                    "csd": ratio_str(&defs.csd),
                    "verdict": if *matches { "MATCH" } else { "MISMATCH" },
                });
            }
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Csv => csv_table(CSV_HEADER, &[report_row(&rep)]),
        OutputFormat::Text => {
            let mut lines = vec![
                format!("presentation      {}", rep.params),
                format!("order             {}", rep.params.order()),
                format!("subgroups         {}", rep.subgroups),
                format!("cyclic subgroups  {}", rep.cyclic_subgroups),
                format!("f2                {}", rep.f2),
                format!("cf2               {}", rep.cf2),
                format!("sd                {} (~{})", ratio_str(&rep.sd), ratio_decimal_str(&rep.sd, 6)),
                format!("csd               {} (~{})", ratio_str(&rep.csd), ratio_decimal_str(&rep.csd, 6)),
            ];
            if let Some((defs, matches)) = &oracle_section {
                lines.push(format!("oracle f2         {}", defs.f2));
                lines.push(format!("oracle cf2        {}", defs.cf2));
                lines.push(format!("oracle sd         {}", ratio_str(&defs.sd)));
                lines.push(format!("oracle csd        {}", ratio_str(&defs.csd)));
                lines.push(format!("verdict           {}", if *matches { "MATCH" } else { "MISMATCH" }));
            }
            lines.join("\n") + "\n"
        }
    };

    emit(out, &content)?;
    match oracle_section {
        Some((_, false)) => Err(Failure::check(format!(
            "oracle verdict MISMATCH for {}",
            rep.params
        ))),
        _ => Ok(()),
    }
}

/// `sweep`: one report row per valid presentation with order up to `max_mn`,
/// in ascending `(m, n, r)` order.
pub fn sweep(max_mn: u64, format: OutputFormat, out: &Option<PathBuf>) -> Result<(), Failure> {
    let rows: Vec<Vec<String>> = zm::enumerate_valid_params(max_mn)
        .par_iter()
        .map(|p| report_row(&degrees::report(p)))
        .collect();
    emit(out, &render_rows(format, &rows))
}

/// `search-equal`: presentations with `sd = csd != 1`, same row shape as the
/// sweep. An empty table is a legitimate result.
pub fn search_equal(max_mn: u64, format: OutputFormat, out: &Option<PathBuf>) -> Result<(), Failure> {
    let rows: Vec<Vec<String>> = zm::enumerate_valid_params(max_mn)
        .par_iter()
        .filter_map(|p| {
            let rep = degrees::report(p);
            (rep.sd == rep.csd && !rep.sd.is_one()).then(|| report_row(&rep))
        })
        .collect();
    emit(out, &render_rows(format, &rows))
}

/// `asymptote`: degree values along `m = p^alpha` for a fixed odd prime `p`.
/// With `assert_decreasing`, verifies both columns strictly decrease.
pub fn asymptote(
    p: &BigUint,
    alpha_max: u32,
    assert_decreasing: bool,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    if !arith::is_prime(p) || *p < BigUint::from(3u32) {
        return Err(Failure::invalid(format!("p = {p} must be an odd prime >= 3")));
    }
    let rows_data = degrees::asymptotic_sweep(p, alpha_max);
    let rows: Vec<Vec<String>> = rows_data
        .iter()
        .map(|row| {
            vec![
                row.alpha.to_string(),
                ratio_str(&row.sd),
                ratio_str(&row.csd),
                ratio_decimal_str(&row.sd, 6),
                ratio_decimal_str(&row.csd, 6),
            ]
        })
        .collect();

    let keys = ["alpha", "sd", "csd", "sd_decimal", "csd_decimal"];
    let content = match format {
        OutputFormat::Csv => csv_table("alpha,sd,csd,sd_decimal,csd_decimal", &rows),
        OutputFormat::Json => json_lines(&keys, &rows),
        OutputFormat::Text => text_table(&keys, &rows),
    };
    emit(out, &content)?;

    if assert_decreasing {
        for w in rows_data.windows(2) {
            if w[1].sd >= w[0].sd || w[1].csd >= w[0].csd {
                return Err(Failure::check(format!(
                    "degrees are not strictly decreasing between alpha={} and alpha={}",
                    w[0].alpha, w[1].alpha
                )));
            }
        }
    }
    Ok(())
}

/// One presentation's formula-vs-oracle comparison; `mismatches` lists every
/// disagreeing quantity.
fn check_one(params: &ZmParams, oracle_bound: usize) -> Result<Vec<String>, Failure> {
    let table = oracle::build_group(params, oracle_bound)
        .map_err(|e| Failure::resource(e.to_string()))?;
    let subs = oracle::enumerate_subgroups(&table);
    let defs = oracle::definitional_degrees(&table, &subs);
    let rep = degrees::report(params);

    fn expect(bad: &mut Vec<String>, params: &ZmParams, what: &str, formula: &str, oracle_value: &str) {
        if formula != oracle_value {
            bad.push(format!("{params}: {what} formula={formula} oracle={oracle_value}"));
        }
    }

    let mut bad = Vec::new();
    expect(&mut bad, params, "subgroups", &rep.subgroups.to_string(), &defs.subgroups.to_string());
    expect(
        &mut bad,
        params,
        "cyclic_subgroups",
        &rep.cyclic_subgroups.to_string(),
        &defs.cyclic_subgroups.to_string(),
    );
    expect(&mut bad, params, "f2", &rep.f2.to_string(), &defs.f2.to_string());
    expect(&mut bad, params, "cf2", &rep.cf2.to_string(), &defs.cf2.to_string());
    expect(&mut bad, params, "sd", &ratio_str(&rep.sd), &ratio_str(&defs.sd));
    expect(&mut bad, params, "csd", &ratio_str(&rep.csd), &ratio_str(&defs.csd));

    for class in zm::conj_classes(params) {
        let rep_triple = zm::SubgroupTriple {
            m1: class.m1.clone(),
            n1: class.n1.clone(),
            s: BigUint::zero(),
        };
        let key = format!("({},{})", class.m1, class.n1);
        let sub = match oracle::triple_to_subgroup(params, &table, &rep_triple) {
            Ok(s) => s,
            Err(e) => {
                bad.push(format!("{params}: class {key}: {e}"));
                continue;
            }
        };
        let orbit = oracle::conjugacy_orbit(&table, &sub);
        expect(&mut bad, params, &format!("class_size{key}"), &class.size.to_string(), &orbit.len().to_string());

        let idx = subs
            .iter()
            .position(|s| s.bits() == sub.bits())
            .expect("representative is an enumerated subgroup");
        expect(
            &mut bad,
            params,
            &format!("f_local{key}"),
            &degrees::f_local(params, &class.m1, &class.n1).to_string(),
            &defs.f2_by_subgroup[idx].to_string(),
        );
        expect(
            &mut bad,
            params,
            &format!("cf_local{key}"),
            &degrees::cf_local(params, &class.m1, &class.n1).to_string(),
            &defs.cf2_by_subgroup[idx].to_string(),
        );
    }
    Ok(bad)
}

/// `oracle-check`: every valid presentation up to `max_mn`, formula values
/// against definitional brute force; nonzero exit on any mismatch.
pub fn oracle_check(max_mn: u64, oracle_bound: usize) -> Result<(), Failure> {
    let all = zm::enumerate_valid_params(max_mn);
    let outcomes: Vec<Result<Vec<String>, Failure>> = all
        .par_iter()
        .map(|p| check_one(p, oracle_bound))
        .collect();

    let mut mismatches = Vec::new();
    for outcome in outcomes {
        mismatches.extend(outcome?);
    }
    if mismatches.is_empty() {
        println!(
            "oracle-check: PASS ({} presentations up to order {max_mn}, all formula values match the definitional oracle)",
            all.len()
        );
        Ok(())
    } else {
        for line in &mismatches {
            println!("MISMATCH {line}");
        }
        Err(Failure::check(format!(
            "oracle-check: {} mismatches across {} presentations",
            mismatches.len(),
            all.len()
        )))
    }
}
