use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use perclab::closure::{classify_structure, close_k2t, close_k2t_rounds, closure, ClosureTrace, StructureClass};
use perclab::density::{
    density as graph_density, eta as eta_of, even_case_sets, max_density_bruteforce, max_density_flow,
    seven_candidate_densities, Candidate, DensityReport, Method, Rational, BRUTE_FORCE_MAX_VERTICES,
};
use perclab::experiments::{
    estimate_pc, fit_exponent, percolation_probability, ExponentBrackets, PcConfig, PercolationEstimate,
    ThresholdEstimate, TrialConfig,
};
use perclab::gadgets::{build_fan, build_ht, build_remark_gadget, complete_bipartite, complete_split};
use perclab::io::{parse_edge_list, write_edge_list};
use perclab::witness::{f_procedure_t4, gprime_t4, lower_witness, verify_witness, FamilyMember};
use perclab::Graph;
use serde::Serialize;

use crate::error::{usage, CliError};
use crate::runner::Pool;
use crate::{
    CloseArgs, CloseFormat, CurveArgs, DensityArgs, DensityMethod, EtaArgs, ExponentArgs, GadgetArgs, GadgetKind,
    InputArgs, OutputArgs, PcArgs, SevenArgs, TableFormat, WitnessArgs, WitnessMode,
};

const SCHEMA: &str = "perclab/1";

type Result<T = ()> = std::result::Result<T, CliError>;

fn is_stdio(path: &Option<std::path::PathBuf>) -> Option<&Path> {
    path.as_deref().filter(|p| p.as_os_str() != "-")
}

fn read_graph(input: &InputArgs) -> Result<Graph> {
    let text = match is_stdio(&input.input) {
        Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_edge_list(&text)?)
}

fn write_text(output: &OutputArgs, text: &str) -> Result {
    match is_stdio(&output.out) {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn write_json<T: Serialize>(output: &OutputArgs, value: &T) -> Result {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_text(output, &text)
}

fn write_csv<T: Serialize>(output: &OutputArgs, rows: &[T]) -> Result {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Domain(format!("csv: {e}")))?;
    write_text(output, &String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn need_t(t: usize, min: usize) -> Result {
    if t < min {
        return Err(usage(format!("--t must be at least {min}, got {t}")));
    }
    Ok(())
}

fn edge_pairs(edges: impl Iterator<Item = (usize, usize)>) -> Vec<[usize; 2]> {
    edges.map(|(u, v)| [u, v]).collect()
}

pub fn gadget(a: GadgetArgs) -> Result {
    let want = match a.kind {
        GadgetKind::Ht | GadgetKind::Remark => 1,
        GadgetKind::Fan | GadgetKind::Kst | GadgetKind::Split => 2,
    };
    if a.params.len() != want {
        return Err(usage(format!(
            "--kind takes {want} parameter(s), got {}",
            a.params.len()
        )));
    }
    let p = &a.params;
    let (name, graph, roles) = match a.kind {
        GadgetKind::Fan => {
            let g = build_fan(p[0], p[1])?;
            (format!("fan r={} s={}", p[0], p[1]), g.graph.clone(), g.role_comments())
        }
        GadgetKind::Ht => {
            let g = build_ht(p[0])?;
            (format!("ht t={}", p[0]), g.graph.clone(), g.role_comments())
        }
        GadgetKind::Remark => {
            let g = build_remark_gadget(p[0])?;
            (format!("remark t={}", p[0]), g.graph.clone(), g.role_comments())
        }
        GadgetKind::Kst => (
            format!("kst a={} b={}", p[0], p[1]),
            complete_bipartite(p[0], p[1]),
            Vec::new(),
        ),
        GadgetKind::Split => (
            format!("split i={} c={}", p[0], p[1]),
            complete_split(p[0], p[1]),
            Vec::new(),
        ),
    };
    let mut comments = vec![format!("gadget {name}")];
    comments.extend(roles);
    write_text(&a.output, &write_edge_list(&graph, &comments))
}

#[derive(Serialize)]
struct TraceDoc<'a> {
    schema: &'static str,
    #[serde(flatten)]
    trace: &'a ClosureTrace,
}

#[derive(Serialize)]
struct StructureDoc {
    class: &'static str,
    partition: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct CloseDoc {
    schema: &'static str,
    t: usize,
    n: usize,
    edges_before: usize,
    edges_after: usize,
    percolates: bool,
    structure: StructureDoc,
    edges: Vec<[usize; 2]>,
}

pub fn close(a: CloseArgs) -> Result {
    need_t(a.t, 2)?;
    let g = read_graph(&a.input)?;
    let hat = match &a.trace {
        Some(path) => {
            let (hat, trace) = if a.rounds {
                close_k2t_rounds(&g, a.t)?
            } else {
                close_k2t(&g, a.t)?
            };
            let mut text = serde_json::to_string(&TraceDoc {
                schema: SCHEMA,
                trace: &trace,
            })?;
            text.push('\n');
            fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            hat
        }
        None => closure(&g, a.t)?,
    };
    let added = hat.edge_count() - g.edge_count();
    match a.format {
        CloseFormat::Edgelist => {
            let comments = vec![
                format!("closure t={}", a.t),
                format!("added {added}"),
                format!("percolates {}", hat.is_complete()),
            ];
            write_text(&a.output, &write_edge_list(&hat, &comments))
        }
        CloseFormat::Json => {
            let s = classify_structure(&hat);
            let class = match s.class {
                StructureClass::Complete => "complete",
                StructureClass::CompleteBipartite { .. } => "complete_bipartite",
                StructureClass::CompleteSplit { .. } => "complete_split",
                StructureClass::Other => "other",
            };
            write_json(
                &a.output,
                &CloseDoc {
                    schema: SCHEMA,
                    t: a.t,
                    n: hat.n(),
                    edges_before: g.edge_count(),
                    edges_after: hat.edge_count(),
                    percolates: hat.is_complete(),
                    structure: StructureDoc {
                        class,
                        partition: s.partition,
                    },
                    edges: edge_pairs(hat.edges()),
                },
            )
        }
    }
}

#[derive(Serialize)]
struct DensityDoc {
    schema: &'static str,
    n: usize,
    m: usize,
    density: Rational,
    value: Rational,
    witness: Vec<usize>,
    method: Method,
}

pub fn density(a: DensityArgs) -> Result {
    let g = read_graph(&a.input)?;
    let report: DensityReport = match a.method {
        DensityMethod::Brute => max_density_bruteforce(&g)?,
        DensityMethod::Flow => max_density_flow(&g)?,
        DensityMethod::Auto if g.n() <= BRUTE_FORCE_MAX_VERTICES => max_density_bruteforce(&g)?,
        DensityMethod::Auto => max_density_flow(&g)?,
    };
    write_json(
        &a.output,
        &DensityDoc {
            schema: SCHEMA,
            n: g.n(),
            m: g.edge_count(),
            density: graph_density(&g)?,
            value: report.value,
            witness: report.witness.to_vec(),
            method: report.method,
        },
    )
}

pub fn eta(a: EtaArgs) -> Result {
    need_t(a.t, 4)?;
    println!("{}", eta_of(a.t)?);
    Ok(())
}

#[derive(Serialize)]
struct CandidateRow {
    label: String,
    size: usize,
    edges: usize,
    density: Rational,
}

impl From<&Candidate> for CandidateRow {
    fn from(c: &Candidate) -> Self {
        CandidateRow {
            label: c.label.to_string(),
            size: c.vertices.len(),
            edges: c.edges,
            density: c.density,
        }
    }
}

#[derive(Serialize)]
struct EvenCase {
    literal: CandidateRow,
    with_u: CandidateRow,
}

#[derive(Serialize)]
struct SevenDoc {
    schema: &'static str,
    t: usize,
    eta: Rational,
    candidates: Vec<CandidateRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    even_case: Option<EvenCase>,
}

pub fn seven(a: SevenArgs) -> Result {
    need_t(a.t, 4)?;
    let rows: Vec<CandidateRow> = seven_candidate_densities(a.t)?.iter().map(CandidateRow::from).collect();
    match a.format {
        TableFormat::Csv => write_csv(&a.output, &rows),
        TableFormat::Json => {
            let even_case = if a.t.is_multiple_of(2) {
                let (literal, with_u) = even_case_sets(a.t)?;
                Some(EvenCase {
                    literal: (&literal).into(),
                    with_u: (&with_u).into(),
                })
            } else {
                None
            };
            write_json(
                &a.output,
                &SevenDoc {
                    schema: SCHEMA,
                    t: a.t,
                    eta: eta_of(a.t)?,
                    candidates: rows,
                    even_case,
                },
            )
        }
    }
}

#[derive(Serialize)]
struct ComponentDoc {
    vertices: Vec<usize>,
    pairs: Vec<[usize; 2]>,
    b_side: Vec<usize>,
    ell: usize,
    ell_prime: usize,
    edges: usize,
}

#[derive(Serialize)]
struct DenseDoc {
    value: Rational,
    witness: Vec<usize>,
}

#[derive(Serialize)]
struct ViolationDoc {
    component: usize,
    other: Option<usize>,
    fact: perclab::witness::Fact,
    vertices: Vec<usize>,
    dense_subgraph: DenseDoc,
}

#[derive(Serialize)]
struct WitnessDoc {
    schema: &'static str,
    t: usize,
    mode: &'static str,
    verified: bool,
    gprime_edges_added: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    families: Option<Vec<FamilyMember>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<Vec<ComponentDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    divergences: Option<Vec<perclab::witness::Divergence>>,
    violations: Vec<ViolationDoc>,
}

pub fn witness(a: WitnessArgs) -> Result {
    need_t(a.t, 4)?;
    let mode = a.mode.unwrap_or(if a.t == 4 {
        WitnessMode::T4
    } else {
        WitnessMode::General
    });
    if mode == WitnessMode::T4 && a.t != 4 {
        return Err(usage("--mode t4 requires --t 4"));
    }
    let g = read_graph(&a.input)?;
    let doc = match mode {
        WitnessMode::General => {
            let w = lower_witness(&g, a.t)?;
            WitnessDoc {
                schema: SCHEMA,
                t: a.t,
                mode: "general",
                verified: verify_witness(&g, a.t, &w.gprime)?,
                gprime_edges_added: edge_pairs(w.gprime.edges_not_in(&g).into_iter()),
                families: Some(w.families),
                components: None,
                divergences: None,
                violations: Vec::new(),
            }
        }
        WitnessMode::T4 => match f_procedure_t4(&g) {
            Ok(run) => {
                let gp = gprime_t4(&g, &run.components);
                let components = run
                    .components
                    .iter()
                    .map(|c| ComponentDoc {
                        vertices: c.vertices.to_vec(),
                        pairs: c.pairs.iter().map(|&(x, y)| [x, y]).collect(),
                        b_side: c.b_side.clone(),
                        ell: c.ell,
                        ell_prime: c.ell_prime,
                        edges: c.edges,
                    })
                    .collect();
                WitnessDoc {
                    schema: SCHEMA,
                    t: 4,
                    mode: "t4",
                    verified: verify_witness(&g, 4, &gp)?,
                    gprime_edges_added: edge_pairs(gp.edges_not_in(&g).into_iter()),
                    families: None,
                    components: Some(components),
                    divergences: Some(run.divergences),
                    violations: Vec::new(),
                }
            }
            Err(v) => {
                let dense = v.dense_subgraph(&g);
                let doc = WitnessDoc {
                    schema: SCHEMA,
                    t: 4,
                    mode: "t4",
                    verified: false,
                    gprime_edges_added: Vec::new(),
                    families: None,
                    components: None,
                    divergences: None,
                    violations: vec![ViolationDoc {
                        component: v.component,
                        other: v.other,
                        fact: v.fact,
                        vertices: v.vertices.to_vec(),
                        dense_subgraph: DenseDoc {
                            value: dense.value,
                            witness: dense.witness.to_vec(),
                        },
                    }],
                };
                write_json(&a.output, &doc)?;
                return Err(CliError::Domain(format!(
                    "{v}; subgraph of density {} on {} vertices",
                    dense.value,
                    dense.witness.len()
                )));
            }
        },
    };
    write_json(&a.output, &doc)?;
    if !doc.verified {
        return Err(CliError::Domain(format!("witness for t = {} failed verification", a.t)));
    }
    Ok(())
}

fn check_trials(trials: usize) -> Result {
    if trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(usage(format!("--tol must be positive, got {tol}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct PcDoc<'a> {
    schema: &'static str,
    #[serde(flatten)]
    estimate: &'a ThresholdEstimate,
}

pub fn pc(a: PcArgs) -> Result {
    need_t(a.t, 2)?;
    check_trials(a.trials)?;
    check_tol(a.tol)?;
    if !(a.target > 0.0 && a.target <= 1.0) {
        return Err(usage(format!("--target must lie in (0, 1], got {}", a.target)));
    }
    let pool = Pool::from_env()?;
    let cfg = PcConfig {
        target_prob: a.target,
        ..PcConfig::new(a.n, a.t, a.trials, a.tol, a.seed)
    };
    let est = estimate_pc(&cfg, &pool)?;
    write_json(
        &a.output,
        &PcDoc {
            schema: SCHEMA,
            estimate: &est,
        },
    )
}

fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || {
        usage(format!(
            "--pgrid expects lo:hi:steps with 0 <= lo <= hi <= 1, got {spec:?}"
        ))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, steps] = parts[..] else {
        return Err(bad());
    };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let steps: usize = steps.trim().parse().map_err(|_| bad())?;
    if !(0.0..=1.0).contains(&lo) || !(lo..=1.0).contains(&hi) || steps == 0 {
        return Err(bad());
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect())
}

#[derive(Serialize)]
struct CurveRow {
    p: f64,
    fraction: f64,
    ci_lo: f64,
    ci_hi: f64,
}

#[derive(Serialize)]
struct CurveDoc {
    schema: &'static str,
    n: usize,
    t: usize,
    trials: usize,
    seed: u64,
    points: Vec<PercolationEstimate>,
}

pub fn curve(a: CurveArgs) -> Result {
    need_t(a.t, 2)?;
    check_trials(a.trials)?;
    let grid = parse_grid(&a.pgrid)?;
    let pool = Pool::from_env()?;
    let points = grid
        .iter()
        .map(|&p| {
            percolation_probability(
                &TrialConfig {
                    n: a.n,
                    t: a.t,
                    p,
                    trials: a.trials,
                    master_seed: a.seed,
                },
                &pool,
            )
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    match a.format {
        TableFormat::Csv => {
            let rows: Vec<CurveRow> = points
                .iter()
                .map(|e| CurveRow {
                    p: e.p,
                    fraction: e.fraction,
                    ci_lo: e.ci_lo,
                    ci_hi: e.ci_hi,
                })
                .collect();
            write_csv(&a.output, &rows)
        }
        TableFormat::Json => write_json(
            &a.output,
            &CurveDoc {
                schema: SCHEMA,
                n: a.n,
                t: a.t,
                trials: a.trials,
                seed: a.seed,
                points,
            },
        ),
    }
}

#[derive(Serialize)]
struct ExponentDoc {
    schema: &'static str,
    t: usize,
    trials_per_step: usize,
    tolerance: f64,
    seed: u64,
    points: Vec<(f64, f64)>,
    slope: f64,
    intercept: f64,
    residual: f64,
    brackets: Option<ExponentBrackets>,
    estimates: Vec<ThresholdEstimate>,
}

pub fn exponent(a: ExponentArgs) -> Result {
    need_t(a.t, 2)?;
    check_trials(a.trials)?;
    check_tol(a.tol)?;
    let mut distinct = a.ns.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(usage(format!(
            "--ns needs at least 3 distinct values, got {}",
            distinct.len()
        )));
    }
    let pool = Pool::from_env()?;
    let estimates =
        a.ns.iter()
            .map(|&n| estimate_pc(&PcConfig::new(n, a.t, a.trials, a.tol, a.seed), &pool))
            .collect::<std::result::Result<Vec<_>, _>>()?;
    let fit = fit_exponent(&estimates)?;
    write_json(
        &a.output,
        &ExponentDoc {
            schema: SCHEMA,
            t: a.t,
            trials_per_step: a.trials,
            tolerance: a.tol,
            seed: a.seed,
            points: fit.points,
            slope: fit.slope,
            intercept: fit.intercept,
            residual: fit.residual,
            brackets: fit.brackets,
            estimates,
        },
    )
}
