use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use anyhow::{bail, ensure, Context, Result};
use distgirth_core::lll::{
    check_bollobas_lll, check_general_lll, choose_parameters, feasible_gamma_interval,
    verify_exponent_condition, verify_sys1_finite, AssignmentStyle, LllAssignment,
};
use distgirth_core::model::{
    enumerate_cycle_events, enumerate_independent_set_events, sample_replica, ModelParams, SAMPLER,
};
use distgirth_core::search::{
    certify, certify_exact, deletion_method, moser_tardos_search, recheck, GammaOrP,
    GirthCertificate, Provenance, SearchConfig, SearchOutcome,
};
use distgirth_core::solvers::{chromatic_number, count_cycles, girth, independence_number};
use distgirth_core::{BaseGraph, EdgeSubset, Error};

use crate::cli::*;
use crate::config::output_path;
use crate::dimacs::{self, Dimacs};
use crate::formats::*;

/// How a successful run ended; maps to exit codes 0 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Success,
    /// A check failed or certification was rejected.
    Failure,
}

pub fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Verdict> {
    match cmd {
        Command::Gen(a) => gen(a, stdout),
        Command::Solve(a) => solve(a, stdout),
        Command::Sample(a) => sample(a, stdout, stderr),
        Command::Events(a) => events(a, stdout, stderr),
        Command::LllCheck(a) => lll_check(a, stdout),
        Command::Params(a) => params(a, stdout),
        Command::Scan(a) => scan(a, stdout),
        Command::Search(a) => search(a, stdout, stderr),
        Command::Certify(a) => certify_cmd(a, stdout, stderr),
        Command::Export(a) => export(a, stdout),
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => {
            let path = output_path(path);
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)
                    .with_context(|| format!("creating {}", dir.display()))?;
            }
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).context("writing output"),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn base_graph(n: u32, max_dim: u32) -> Result<BaseGraph> {
    Ok(BaseGraph::build(n, max_dim)?)
}

fn model(n: u32, prob: ProbArgs, seed: u64) -> Result<ModelParams> {
    Ok(match (prob.gamma, prob.p) {
        (Some(g), None) => ModelParams::new(n, g, seed)?,
        (None, Some(p)) => ModelParams::with_p(n, p, seed)?,
        _ => bail!("give exactly one of --gamma and --p"),
    })
}

fn seed_or_default(seed: Option<u64>, stderr: &mut dyn Write) -> Result<u64> {
    Ok(match seed {
        Some(s) => s,
        None => {
            writeln!(stderr, "seed: {DEFAULT_SEED} (default)")?;
            DEFAULT_SEED
        }
    })
}

pub fn base_dimacs(g: &BaseGraph) -> Dimacs {
    Dimacs::new(g.graph().clone())
        .with_comment(format!(
            "G_{} (n = {}): 0/1 vectors of length {} with {} ones, adjacent when their scalar product is {}",
            g.dimension(),
            g.n(),
            g.dimension(),
            2 * g.n(),
            g.n()
        ))
        .with_comment("vertex i is the i-th pattern in colex order, coordinate j is bit j")
}

fn subgraph_dimacs(sub: &EdgeSubset<'_>) -> Dimacs {
    let g = sub.base();
    Dimacs::new(sub.to_graph()).with_comment(format!(
        "subgraph of G_{} (n = {}), edge mask {}",
        g.dimension(),
        g.n(),
        sub.to_hex()
    ))
}

fn gen(a: GenArgs, stdout: &mut dyn Write) -> Result<Verdict> {
    let g = base_graph(a.base.n, a.base.max_dim)?;
    emit(a.out.as_deref(), &dimacs::write(&base_dimacs(&g)), stdout)?;
    let vertices = a
        .vertices
        .or_else(|| a.out.as_ref().map(|o| o.with_extension("vertices.json")));
    if let Some(path) = vertices {
        emit(Some(&path), &to_json(&VerticesFile::of(&g)), stdout)?;
    }
    Ok(Verdict::Success)
}

fn solve(a: SolveArgs, stdout: &mut dyn Write) -> Result<Verdict> {
    let text = read(&a.graph)?;
    let d = dimacs::parse(&text).with_context(|| format!("parsing {}", a.graph.display()))?;
    let g = &d.graph;
    let budget = a.budget.budget();
    let json = match a.what {
        SolveWhat::Girth => to_json(&girth(g)),
        SolveWhat::Alpha => to_json(&independence_number(g, &budget)?),
        SolveWhat::Chi => to_json(&chromatic_number(g, &budget)?),
        SolveWhat::Cycles => {
            let c = count_cycles(g, a.s, a.max_len)?;
            to_json(&CycleReport {
                s: a.s,
                labeled: c.labeled,
                distinct: c.distinct,
            })
        }
    };
    emit(a.out.as_deref(), &json, stdout)?;
    Ok(Verdict::Success)
}

fn sample(a: SampleArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Verdict> {
    let seed = seed_or_default(a.seed, stderr)?;
    let g = base_graph(a.base.n, a.base.max_dim)?;
    let m = model(a.base.n, a.prob, seed)?;
    let sub = sample_replica(&g, &m, a.replica);
    let report = SampleReport {
        n: g.n(),
        p: m.p(),
        seed,
        replica: a.replica,
        sampler: SAMPLER.into(),
        edges: sub.len(),
        edge_mask_hex: sub.to_hex(),
    };
    if let Some(path) = &a.dimacs {
        emit(Some(path), &dimacs::write(&subgraph_dimacs(&sub)), stdout)?;
    }
    emit(a.out.as_deref(), &to_json(&report), stdout)?;
    Ok(Verdict::Success)
}

fn events(a: EventsArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Verdict> {
    ensure!(a.k.is_some() || a.l.is_some(), "give --k, --l or both");
    let g = base_graph(a.base.n, a.base.max_dim)?;
    let m = model(a.base.n, a.prob, 0)?;
    let p = m.p();
    let mut list = Vec::new();
    if let Some(l) = a.l {
        ensure!(
            l >= 1 && l as usize <= g.vertex_count(),
            "l must lie in 1..={}",
            g.vertex_count()
        );
        list = enumerate_independent_set_events(&g, l as usize, p, a.guard)?;
        let unavoidable = list.iter().filter(|e| e.is_unavoidable()).count();
        if unavoidable > 0 {
            writeln!(
                stderr,
                "warning: {unavoidable} l-subsets are independent in G_{}; l does not exceed its independence number",
                g.dimension()
            )?;
        }
    }
    if let Some(k) = a.k {
        let left = a.guard.saturating_sub(list.len());
        list.extend(enumerate_cycle_events(&g, k, p, left)?);
    }
    let system = EventSystem {
        n: Some(g.n()),
        p: Some(p),
        k: a.k,
        l: a.l,
        events: list,
        dependencies: None,
    };
    emit(a.out.as_deref(), &to_json(&system), stdout)?;
    Ok(Verdict::Success)
}

fn lll_check(a: LllArgs, stdout: &mut dyn Write) -> Result<Verdict> {
    let system: EventSystem = from_json("event system", &read(&a.events)?)?;
    let deps = system.dependency_graph()?;
    let probs = system.probabilities();
    let report = if a.paper_multipliers {
        let (Some(n), Some(p)) = (system.n, system.p) else {
            bail!("--paper-multipliers needs `n` and `p` in the event system");
        };
        MarginReport::from_sys1(
            a.tolerance,
            verify_sys1_finite(&system.events, &deps, n, p, a.f, a.tolerance)?,
        )
    } else {
        let path = a
            .assignment
            .as_deref()
            .expect("clap requires an assignment");
        let assignment: LllAssignment = from_json("assignment", &read(path)?)?;
        match assignment.style {
            AssignmentStyle::General => MarginReport::from_check(
                "general",
                a.tolerance,
                check_general_lll(&probs, &deps, &assignment, a.tolerance)?,
            ),
            AssignmentStyle::Bollobas => {
                match check_bollobas_lll(&probs, &deps, &assignment, a.tolerance) {
                    Ok(r) => MarginReport::from_check("bollobas", a.tolerance, r),
                    Err(Error::BollobasHypothesis(bad)) => {
                        MarginReport::hypothesis_failure("bollobas", a.tolerance, probs.len(), bad)
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    };
    emit(a.out.as_deref(), &to_json(&report), stdout)?;
    Ok(if report.holds {
        Verdict::Success
    } else {
        Verdict::Failure
    })
}

fn params(a: ParamsArgs, stdout: &mut dyn Write) -> Result<Verdict> {
    let p = choose_parameters(a.k, a.delta, a.n)?;
    let interval = feasible_gamma_interval(p.k, p.epsilon, p.delta, p.f)?;
    let report = ParamsReport {
        parameters: p,
        p: p.p(),
        interval,
        exponent_conditions: (3..=p.k)
            .map(|s| verify_exponent_condition(s, p.f, p.gamma))
            .collect(),
    };
    emit(a.out.as_deref(), &to_json(&report), stdout)?;
    Ok(Verdict::Success)
}

pub fn scan_rows(
    k_min: u32,
    k_max: u32,
    delta: f64,
    epsilons: &[f64],
    fs: &[f64],
) -> Result<Vec<ScanRow>> {
    ensure!(k_min >= 3 && k_min <= k_max, "need 3 <= k-min <= k-max");
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        for &epsilon in epsilons {
            for &f in fs {
                // grid points outside the parameter domain are skipped
                if let Ok(w) = feasible_gamma_interval(k, epsilon, delta, f) {
                    rows.push(ScanRow {
                        k,
                        epsilon,
                        f,
                        lower: w.lower,
                        upper: w.upper,
                        nonempty: w.nonempty,
                        recipe: false,
                    });
                }
            }
        }
        if let Ok(p) = choose_parameters(k, delta, 1) {
            let w = feasible_gamma_interval(k, p.epsilon, delta, p.f)?;
            rows.push(ScanRow {
                k,
                epsilon: p.epsilon,
                f: p.f,
                lower: w.lower,
                upper: w.upper,
                nonempty: w.nonempty,
                recipe: true,
            });
        }
    }
    Ok(rows)
}

fn scan(a: ScanArgs, stdout: &mut dyn Write) -> Result<Verdict> {
    let rows = scan_rows(a.k_min, a.k_max, a.delta, &a.epsilon, &a.f)?;
    let text = if a.tsv {
        let mut t = String::from("k\tepsilon\tf\tlower\tupper\tnonempty\trecipe\n");
        for r in &rows {
            writeln!(
                t,
                "{}\t{}\t{}\t{:.6}\t{:.6}\t{}\t{}",
                r.k, r.epsilon, r.f, r.lower, r.upper, r.nonempty, r.recipe
            )?;
        }
        t
    } else {
        to_json(&ScanReport {
            delta: a.delta,
            rows,
        })
    };
    emit(a.out.as_deref(), &text, stdout)?;
    Ok(Verdict::Success)
}

/// One restart's result.
enum Attempt {
    Certified(GirthCertificate),
    Failed(FailureReport),
}

/// Runs `count` restarts on up to `jobs` threads and returns the attempts
/// up to and including the first success in index order. Indices beyond a
/// known success are skipped, so the outcome does not depend on `jobs`.
fn restarts<F>(count: u64, jobs: usize, run: F) -> Result<BTreeMap<u64, Attempt>>
where
    F: Fn(u64) -> Result<Attempt> + Sync,
{
    let jobs = if jobs == 0 {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    } else {
        jobs
    };
    let next = AtomicU64::new(0);
    let best = AtomicU64::new(u64::MAX);
    let results: Mutex<BTreeMap<u64, Result<Attempt>>> = Mutex::new(BTreeMap::new());
    std::thread::scope(|s| {
        for _ in 0..jobs.min(count.max(1) as usize) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= count || i > best.load(Ordering::SeqCst) {
                    break;
                }
                let r = run(i);
                if matches!(r, Ok(Attempt::Certified(_))) {
                    best.fetch_min(i, Ordering::SeqCst);
                }
                results.lock().unwrap().insert(i, r);
            });
        }
    });
    let best = best.into_inner();
    let mut out = BTreeMap::new();
    for (i, r) in results.into_inner().unwrap() {
        if i <= best {
            out.insert(i, r?);
        }
    }
    Ok(out)
}

fn search(a: SearchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Verdict> {
    let seed = seed_or_default(a.seed, stderr)?;
    ensure!(a.restarts >= 1, "--restarts must be at least 1");
    ensure!(
        !a.subset_events || a.l.is_some(),
        "--subset-events needs --l"
    );
    let g = base_graph(a.base.n, a.base.max_dim)?;
    let base_model = model(a.base.n, a.prob, seed)?;
    let budget = a.budget.budget();
    let method = match a.method {
        Method::Delete => "deletion",
        Method::Mt => "moser-tardos",
    };
    let failure = |status: &str,
                   reason: String,
                   mask: Option<String>,
                   witness: Option<Vec<u32>>| FailureReport {
        status: status.into(),
        reason,
        n: g.n(),
        k: a.k,
        l: a.l,
        method: method.into(),
        gamma_or_p: Some(GammaOrP::from(&base_model)),
        seeds: Vec::new(),
        edge_mask_hex: mask,
        witness,
    };
    let rejected = |r: distgirth_core::search::Rejection, mask: String| {
        let (kind, witness) = rejection_parts(&r);
        Attempt::Failed(failure(
            "rejected",
            format!("{kind}: {r}"),
            Some(mask),
            witness,
        ))
    };

    let attempts = restarts(a.restarts, a.jobs, |i| {
        let m = base_model.with_seed(seed.wrapping_add(i));
        match a.method {
            Method::Delete => {
                let r = deletion_method(&g, &m, a.k, &budget)?;
                let cert = match (r.certificate, a.l) {
                    (Ok(c), Some(l)) => {
                        let sub = c.subgraph(&g)?;
                        certify(
                            &sub,
                            a.k,
                            l,
                            &budget,
                            Provenance {
                                seed: c.seed,
                                gamma_or_p: c.gamma_or_p,
                                method: c.method.clone(),
                            },
                        )
                    }
                    (c, _) => c,
                };
                Ok(match cert {
                    Ok(c) => Attempt::Certified(c),
                    Err(rej) => rejected(rej, r.edge_mask_hex),
                })
            }
            Method::Mt => {
                let cfg = SearchConfig {
                    max_resamples: a.max_resamples,
                    subset_events: a.subset_events,
                    event_guard: a.guard,
                    budget,
                    ..SearchConfig::new(a.k, a.l)
                };
                let r = moser_tardos_search(&g, &m, &cfg)?;
                Ok(match r.outcome {
                    SearchOutcome::Certified(c) => Attempt::Certified(c),
                    SearchOutcome::Rejected(rej) => rejected(rej, r.edge_mask_hex),
                    SearchOutcome::Exhausted { violated } => Attempt::Failed(failure(
                        "exhausted",
                        format!(
                            "{violated} events still occur after {} resamples",
                            r.resamples
                        ),
                        Some(r.edge_mask_hex),
                        None,
                    )),
                    SearchOutcome::Infeasible(events) => Attempt::Failed(failure(
                        "infeasible",
                        format!(
                            "{} independent-set events occur with certainty",
                            events.len()
                        ),
                        Some(r.edge_mask_hex),
                        None,
                    )),
                })
            }
        }
    })?;

    let seeds: Vec<u64> = attempts.keys().map(|&i| seed.wrapping_add(i)).collect();
    let last = attempts.into_iter().next_back().map(|(_, a)| a);
    match last {
        Some(Attempt::Certified(c)) => {
            emit(a.out.as_deref(), &to_json(&c), stdout)?;
            Ok(Verdict::Success)
        }
        Some(Attempt::Failed(mut f)) => {
            f.seeds = seeds;
            writeln!(stderr, "search failed: {}", f.reason)?;
            emit(a.out.as_deref(), &to_json(&f), stdout)?;
            Ok(Verdict::Failure)
        }
        None => unreachable!("at least one restart runs"),
    }
}

fn read_mask(mask: Option<String>, file: Option<PathBuf>) -> Result<String> {
    match (mask, file) {
        (Some(m), _) => Ok(m),
        (None, Some(f)) => Ok(read(&f)?.trim().to_string()),
        (None, None) => bail!("give --cert, --mask or --mask-file"),
    }
}

fn certify_cmd(a: CertifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<Verdict> {
    let budget = a.budget.budget();
    if let Some(path) = &a.cert {
        let cert: GirthCertificate = from_json("certificate", &read(path)?)?;
        let g = base_graph(cert.n, a.max_dim)?;
        return Ok(match recheck(&cert, &g, &budget) {
            Ok(()) => {
                emit(a.out.as_deref(), &to_json(&cert), stdout)?;
                Verdict::Success
            }
            Err(reason) => {
                writeln!(stderr, "certificate does not verify: {reason}")?;
                Verdict::Failure
            }
        });
    }
    let n = a.n.context("--n is required with a mask")?;
    let k = a.k.context("--k is required with a mask")?;
    let g = base_graph(n, a.max_dim)?;
    let sub = EdgeSubset::from_hex(&g, &read_mask(a.mask, a.mask_file)?)?;
    let result = match a.l {
        Some(l) => certify(&sub, k, l, &budget, Provenance::default()),
        None => certify_exact(&sub, k, &budget, Provenance::default()),
    };
    match result {
        Ok(c) => {
            emit(a.out.as_deref(), &to_json(&c), stdout)?;
            Ok(Verdict::Success)
        }
        Err(r) => {
            let (kind, witness) = rejection_parts(&r);
            let report = FailureReport {
                status: "rejected".into(),
                reason: format!("{kind}: {r}"),
                n,
                k,
                l: a.l,
                method: "certify".into(),
                gamma_or_p: None,
                seeds: Vec::new(),
                edge_mask_hex: Some(sub.to_hex()),
                witness,
            };
            emit(a.out.as_deref(), &to_json(&report), stdout)?;
            Ok(Verdict::Failure)
        }
    }
}

fn export(a: ExportArgs, stdout: &mut dyn Write) -> Result<Verdict> {
    let (n, mask) = match &a.cert {
        Some(path) => {
            let cert: GirthCertificate = from_json("certificate", &read(path)?)?;
            (cert.n, cert.edge_mask_hex)
        }
        None => (
            a.n.context("--n is required with --mask")?,
            a.mask.clone().context("give --cert or --mask")?,
        ),
    };
    let g = base_graph(n, a.max_dim)?;
    let sub = EdgeSubset::from_hex(&g, &mask)?;
    emit(
        a.out.as_deref(),
        &dimacs::write(&subgraph_dimacs(&sub)),
        stdout,
    )?;
    Ok(Verdict::Success)
}
