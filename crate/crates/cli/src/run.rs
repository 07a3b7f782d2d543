//! Command dispatch.

use crate::output::{render_reports, sig12, SearchRendering, Table, VerifySummary};
use crate::{AsymptCmd, Cli, Command, CountCmd, FamilyCmd, Format, ScheduleArgs, SearchCmd, VerifyArgs};
use anyhow::{anyhow, bail, Context};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;
use shades::asympt::{
    dml_partial_sum, f_shade_ratio, fitted_decay_slope, l9_construction, lemma3_ratio,
    probe_conjecture_co1, probe_conjecture_j2, std_normal_cdf, RatioPoint, Schedule,
};
use shades::extremal::{
    max_cross_product, max_cross_shade_diagonal, max_cross_shade_product, max_m_shade,
    max_t_intersecting, sperner_max_shade, ExtremalResult, SearchBudget,
};
use shades::families::{
    frankl_card, frankl_card_center, frankl_family, g_card, g_family, FranklIndex, GenIndex,
};
use shades::setkit::{binomial, parse_family, write_family, Count, SetFamily};
use shades::verify::{check, tuples, Claim, VerifyOptions};
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

pub fn dispatch(cli: &Cli) -> anyhow::Result<ExitCode> {
    let (text, code) = match &cli.command {
        Command::Count(cmd) => (run_count(cli, cmd)?, 0),
        Command::Family(cmd) => (run_family(cli, cmd)?, 0),
        Command::Search(args) => {
            let rendering = run_search(cli, args)?;
            let code = rendering.exit_code();
            (rendering.render(cli.format.unwrap_or(Format::Json)), code)
        }
        Command::Verify(args) => run_verify(cli, args)?,
        Command::Asympt(cmd) => (
            run_asympt(cli, cmd)?.render(cli.format.unwrap_or(Format::Csv)),
            0,
        ),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path:?}"))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::from(code))
}

fn budget(cli: &Cli) -> SearchBudget {
    SearchBudget {
        max_nodes: cli.max_nodes,
        max_seconds: cli.max_seconds,
        allow_partial: cli.allow_partial,
    }
}

fn run_count(cli: &Cli, cmd: &CountCmd) -> anyhow::Result<String> {
    let (name, params, value): (&str, Vec<i64>, Count) = match *cmd {
        CountCmd::Binomial { n, k } => ("binomial", vec![n as i64, k], binomial(n, k)),
        CountCmd::Frankl { n, k, t, i } => (
            "frankl",
            vec![n as i64, k as i64, t as i64, i as i64],
            frankl_card(FranklIndex::new(n, k, t, i)?),
        ),
        CountCmd::G { n, k, t, i, j } => (
            "g",
            vec![n as i64, k as i64, t as i64, i as i64, j as i64],
            g_card(GenIndex::new(n, k, t, i, j)?),
        ),
        CountCmd::Eq68 { m, s, i } => (
            "eq68",
            vec![m as i64, s as i64, i as i64],
            frankl_card_center(m, s, i)?,
        ),
    };
    Ok(match cli.format.unwrap_or(Format::Text) {
        Format::Text => format!("{value}\n"),
        Format::Json => format!(
            "{}\n",
            json!({"quantity": name, "params": params, "value": value.to_string()})
        ),
        Format::Csv => format!("quantity,params,value\n{},{},{}\n", name, params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";"), value),
    })
}

fn family_text(cli: &Cli, fam: &SetFamily) -> String {
    match cli.format.unwrap_or(Format::Text) {
        Format::Json => {
            let members: Vec<String> = fam
                .iter()
                .map(|x| {
                    let e = x.elements();
                    if e.is_empty() {
                        "-".to_string()
                    } else {
                        e.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
                    }
                })
                .collect();
            format!(
                "{}\n",
                json!({"n": fam.n(), "k": fam.k(), "members": members})
            )
        }
        Format::Text | Format::Csv => write_family(fam),
    }
}

fn run_family(cli: &Cli, cmd: &FamilyCmd) -> anyhow::Result<String> {
    let fam = match cmd {
        FamilyCmd::Frankl { n, k, t, i } => frankl_family(FranklIndex::new(*n, *k, *t, *i)?)?,
        FamilyCmd::G { n, k, t, i, j } => g_family(GenIndex::new(*n, *k, *t, *i, *j)?)?,
        FamilyCmd::KshadeOf { m, file } => {
            let text = if file.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                std::fs::read_to_string(file).with_context(|| format!("reading {file:?}"))?
            };
            parse_family(&text)?.m_shade(*m)?
        }
    };
    Ok(family_text(cli, &fam))
}

fn run_search(cli: &Cli, args: &crate::SearchArgs) -> anyhow::Result<SearchRendering> {
    let b = budget(cli);
    let cap = args.cap;
    let check_cap = |n: u32| -> anyhow::Result<()> {
        if n > cap {
            bail!("n={n} exceeds the search cap {cap} (raise with --cap)");
        }
        Ok(())
    };
    let (quantity, params, result, extra): (
        &'static str,
        Vec<i64>,
        ExtremalResult,
        Vec<(&'static str, serde_json::Value)>,
    ) = match args.which {
        SearchCmd::M { n, k, t } => {
            check_cap(n)?;
            (
                "M",
                vec![n as i64, k as i64, t as i64],
                max_t_intersecting(n, k, t, &b)?,
                vec![],
            )
        }
        SearchCmd::M0 { n, m, k, t } => {
            check_cap(n)?;
            (
                "M0",
                vec![n as i64, m as i64, k as i64, t as i64],
                max_m_shade(n, m, k, t, &b)?,
                vec![],
            )
        }
        SearchCmd::N { n, k, l, t } => {
            check_cap(n)?;
            (
                "N",
                vec![n as i64, k as i64, l as i64, t as i64],
                max_cross_product(n, k, l, t, &b)?,
                vec![],
            )
        }
        SearchCmd::N0 { n, mk, ml, k, l, t } => {
            check_cap(n)?;
            (
                "N0",
                vec![n as i64, mk as i64, ml as i64, k as i64, l as i64, t as i64],
                max_cross_shade_product(n, mk, ml, k, l, t, &b)?,
                vec![],
            )
        }
        SearchCmd::N1 { n, m, k, t } => {
            check_cap(n)?;
            (
                "N1",
                vec![n as i64, m as i64, k as i64, t as i64],
                max_cross_shade_diagonal(n, m, k, t, &b)?,
                vec![],
            )
        }
        SearchCmd::Sperner { n } => {
            let result = sperner_max_shade(n, &b)?;
            // The classical bound is 0.724 * 2^n; the best known lower
            // bound on the optimal constant exceeds 0.5.
            let pow = (1u64 << n) as f64;
            let ratio = result.value.to_f64().unwrap_or(f64::NAN) / pow;
            let extra = vec![
                ("ratio", json!(ratio)),
                ("kostochka_bound", json!(0.724 * pow)),
                ("lower_remark", json!(0.5)),
            ];
            ("sperner", vec![n as i64], result, extra)
        }
    };
    Ok(SearchRendering {
        quantity,
        params,
        result,
        extra,
        timings: cli.timings,
    })
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> anyhow::Result<(String, u8)> {
    let claims: Vec<Claim> = if args.claim == "all" {
        Claim::all().to_vec()
    } else {
        vec![Claim::parse(&args.claim)
            .ok_or_else(|| anyhow!("unknown claim `{}`", args.claim))?]
    };
    let opts = VerifyOptions {
        n_max: args.n_max,
        k_max: args.k_max,
        samples: args.samples,
        seed: cli.seed,
        budget: budget(cli),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism.max(1))
        .build()?;
    let mut reports = Vec::new();
    for claim in claims {
        let tuple_list = tuples(claim, &opts);
        // Tuples fan across the pool; ordered collect keeps the output
        // stream identical at any parallelism.
        let claim_reports: Result<Vec<_>, _> = pool.install(|| {
            tuple_list
                .par_iter()
                .map(|t| {
                    let started = Instant::now();
                    check(claim, t, &opts).map(|mut r| {
                        r.elapsed = started.elapsed().as_secs_f64();
                        r
                    })
                })
                .collect()
        });
        reports.extend(claim_reports?);
    }

    let summary = VerifySummary::tally(&reports);
    let text = render_reports(&reports, cli.format.unwrap_or(Format::Text), cli.timings);
    let code = if summary.refuted > 0 { 4 } else { 0 };
    Ok((text, code))
}

fn ratio_rows(points: &[RatioPoint], with_j: bool) -> Vec<Vec<String>> {
    points
        .iter()
        .map(|p| {
            let mut row = vec![
                p.m.to_string(),
                p.k.to_string(),
                p.t.to_string(),
                p.i_star.to_string(),
            ];
            if with_j {
                row.push(p.j_star.map(|j| j.to_string()).unwrap_or_default());
            }
            row.push(sig12(p.value));
            row.push(p.method.as_str().to_string());
            row
        })
        .collect()
}

fn schedule_from_args(args: &ScheduleArgs) -> anyhow::Result<Schedule> {
    let m_values = if args.m_list == "default" {
        Schedule::default_m_values()
    } else {
        args.m_list
            .split(',')
            .map(|s| s.trim().parse::<u64>().map_err(|e| anyhow!("bad m `{s}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?
    };
    if let Some(name) = &args.schedule {
        return Ok(match name.as_str() {
            "shrinking" => Schedule::power("shrinking", 0.5, 0.75, m_values)?,
            "bounded" => Schedule::fixed_t("bounded", 0.5, 2, m_values)?,
            "threshold" => Schedule::sqrt_multiple("threshold", 0.5, 2.0, m_values)?,
            other => bail!("unknown schedule `{other}` (try shrinking, bounded, threshold)"),
        });
    }
    let k_exp = args.k_exp.unwrap_or(0.5);
    Ok(if let Some(t) = args.t {
        Schedule::fixed_t("fixed-t", k_exp, t, m_values)?
    } else if let Some(c) = args.c {
        Schedule::sqrt_multiple("sqrt-multiple", k_exp, c, m_values)?
    } else {
        Schedule::power("power", k_exp, args.t_exp.unwrap_or(0.75), m_values)?
    })
}

fn run_asympt(_cli: &Cli, cmd: &AsymptCmd) -> anyhow::Result<Table> {
    let table = match cmd {
        AsymptCmd::Dml { n, a, b } => {
            let limit = std_normal_cdf(*b)? - std_normal_cdf(-*a)?;
            let rows = n
                .iter()
                .map(|&n| {
                    dml_partial_sum(n, *a, *b).map(|v| {
                        vec![
                            n.to_string(),
                            sig12(*a),
                            sig12(*b),
                            sig12(v),
                            sig12(limit),
                            "LOG_GAMMA".to_string(),
                        ]
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Table {
                header: vec!["n", "a", "b", "value", "limit", "method"],
                rows,
                trailers: vec![],
            }
        }
        AsymptCmd::Lemma3 { n, k_exp, a, b } => {
            let limit = std_normal_cdf(*b)? - std_normal_cdf(-*a)?;
            let rows = n
                .iter()
                .map(|&n| {
                    let k = ((n as f64).powf(*k_exp).floor() as u64).clamp(1, n);
                    lemma3_ratio(n, k, *a, *b).map(|v| {
                        vec![
                            n.to_string(),
                            k.to_string(),
                            sig12(*a),
                            sig12(*b),
                            sig12(v),
                            sig12(limit),
                            "LOG_GAMMA".to_string(),
                        ]
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Table {
                header: vec!["n", "k", "a", "b", "value", "limit", "method"],
                rows,
                trailers: vec![],
            }
        }
        AsymptCmd::Eq69 { t, m } => {
            let limit = 0.5f64.powi(*t as i32);
            let rows = m
                .iter()
                .map(|&m| {
                    f_shade_ratio(m, *t, 0).map(|v| {
                        vec![
                            m.to_string(),
                            t.to_string(),
                            sig12(v),
                            sig12(limit),
                            method_label(m),
                        ]
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Table {
                header: vec!["m", "t", "value", "limit", "method"],
                rows,
                trailers: vec![],
            }
        }
        AsymptCmd::L10 { c, k, m } => {
            if m.is_empty() {
                bail!("--m needs at least one value");
            }
            let rows = m
                .iter()
                .map(|&m| {
                    l9_construction(m, *k, *c).map(|con| {
                        vec![
                            m.to_string(),
                            k.to_string(),
                            sig12(*c),
                            con.k_dd.to_string(),
                            con.t_ceil.to_string(),
                            con.s_floor.to_string(),
                            con.ratio.map(sig12).unwrap_or_default(),
                            sig12(con.limit),
                            if con.degenerate {
                                "DEGENERATE".to_string()
                            } else {
                                method_label(m)
                            },
                        ]
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Table {
                header: vec!["m", "k", "c", "k_dd", "t", "s", "value", "limit", "method"],
                rows,
                trailers: vec![],
            }
        }
        AsymptCmd::L12 { k, t_exp, m } => {
            if m.is_empty() {
                bail!("--m needs at least one value");
            }
            let t = ((*k as f64).powf(*t_exp).floor() as u64).max(1);
            let rows = m
                .iter()
                .map(|&m| {
                    f_shade_ratio(m, t, *k).map(|v| {
                        vec![
                            m.to_string(),
                            k.to_string(),
                            t.to_string(),
                            k.to_string(),
                            sig12(v),
                            method_label(m),
                        ]
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Table {
                header: vec!["m", "k", "t", "i", "value", "method"],
                rows,
                trailers: vec![],
            }
        }
        AsymptCmd::J2(sched) => {
            let schedule = schedule_from_args(sched)?;
            let points = probe_conjecture_j2(&schedule)?;
            Table {
                header: vec!["m", "k", "t", "i_star", "value", "method"],
                rows: ratio_rows(&points, false),
                trailers: slope_trailer(&points),
            }
        }
        AsymptCmd::Co1(sched) => {
            let schedule = schedule_from_args(sched)?;
            let points = probe_conjecture_co1(&schedule)?;
            Table {
                header: vec!["m", "k", "t", "i_star", "j_star", "value", "method"],
                rows: ratio_rows(&points, true),
                trailers: slope_trailer(&points),
            }
        }
    };
    Ok(table)
}

fn method_label(m: u64) -> String {
    if m <= shades::asympt::DEFAULT_EXACT_CROSSOVER {
        "EXACT_RATIONAL".to_string()
    } else {
        "LOG_GAMMA".to_string()
    }
}

fn slope_trailer(points: &[RatioPoint]) -> Vec<String> {
    match fitted_decay_slope(points) {
        Some(s) => vec![format!("decay_slope={}", sig12(s))],
        None => vec!["decay_slope=NA".to_string()],
    }
}
