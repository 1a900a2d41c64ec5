//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach stdout.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cutlab::approx::{approx_multicut, ApproxOutcome};
use cutlab::bruteforce;
use cutlab::gadgets::*;
use cutlab::gridtiling::{clique_to_gridtiling, gt_solve_bruteforce, GridTilingInstance, GtSolution};
use cutlab::mcsi::{
    assignment_value, build_splitter, clique_to_mcsi_clique, max_value_bruteforce, verify_splitter, McsiInstance,
    SplitterMethod, UGraph, DEFAULT_SUBSET_CAP,
};
use cutlab::random::{plant_clique, random_digraph, random_pairs, random_triangle_free, random_ugraph, seeded};
use cutlab::solvers::{min_multicut_exact, min_network_within_budget, multiway_cut_within_budget};
use cutlab::{verify_cut, verify_network, Certificate, DemandSpec, Digraph, Error, Rational};
use cutlab_cli::format::*;
use cutlab_cli::MacroLemmaDoc;
use rand::Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

const SEEDS: u64 = 200;
const APPROX_TIME_LIMIT: Duration = Duration::from_secs(60);
const MACRO_LEMMA_TIME_LIMIT: Duration = Duration::from_secs(10);
/// Extraction must recover an assignment of at least this value.
const DIRMC_MIN_VALUE: (i64, i64) = (1, 10);
/// Cap on brute-force MCSI enumeration.
const MCSI_CAP: u128 = 1_000_000;

type Outcome = Result<String, String>;

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Serialized artifacts of criteria 3 to 8, checked by criterion 10.
#[derive(Default)]
struct Artifacts {
    checked: usize,
    failures: Vec<String>,
}

impl Artifacts {
    fn doc<T: Serialize + DeserializeOwned + PartialEq>(&mut self, what: &str, doc: &T) {
        self.checked += 1;
        let text = to_json(doc);
        match from_json::<T>(&text, what) {
            Ok(back) if back == *doc && to_json(&back) == text => {}
            Ok(_) => self.failures.push(format!("{what}: document changed")),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }

    fn problem(&mut self, what: &str, graph: &Digraph, demand: &DemandSpec, source: Option<SourceDoc>) {
        let doc = ProblemDoc::new(what, graph, demand, source);
        self.doc(what, &doc);
        match doc.to_graph() {
            Ok((g, d)) if ProblemDoc::new(what, &g, &d, doc.source.clone()) == doc => {}
            Ok(_) => self.failures.push(format!("{what}: graph changed")),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }

    fn certificate(&mut self, what: &str, graph: &Digraph, cert: &Certificate) {
        let doc = CertificateDoc::new(graph, cert);
        self.doc(what, &doc);
        match from_json::<CertificateDoc>(&to_json(&doc), what).and_then(|d| d.to_certificate(graph)) {
            Ok(back) if back == *cert => {}
            Ok(_) => self.failures.push(format!("{what}: certificate changed")),
            Err(e) => self.failures.push(format!("{what}: {e}")),
        }
    }
}

fn approx_contract() -> Outcome {
    let start = Instant::now();
    let (mut feasible, mut refused_at_budget) = (0, 0);
    let mut failures = Vec::new();
    // Cuts returned although opt > p: the reverse direction of "exactly".
    let mut over_budget_cuts = Vec::new();
    for seed in 0..SEEDS {
        let mut rng = seeded(seed);
        let n = rng.gen_range(4..=10);
        let k = rng.gen_range(2..=4);
        let p = int(rng.gen_range(1..=4));
        let graph = random_digraph(&mut rng, n, 0.3, 3);
        let pairs = random_pairs(&mut rng, &graph, k);
        let opt = match min_multicut_exact(&graph, &pairs) {
            Ok((cost, _)) => Some(cost),
            Err(Error::Infeasible(_)) => None,
            Err(e) => return Err(format!("seed {seed}: {e}")),
        };
        let within = opt.is_some_and(|o| o <= p);
        let bound = int(k.div_ceil(2) as i64) * p;
        match approx_multicut(&graph, &pairs, &p).map_err(|e| format!("seed {seed}: {e}"))? {
            ApproxOutcome::Cut(cert) => {
                feasible += 1;
                let demand = DemandSpec::cut_pairs(pairs.clone());
                if !verify_cut(&graph, &demand, &cert).unwrap_or(false) || cert.cost > bound {
                    failures.push(format!("seed {seed}: bad cut"));
                }
                if !within {
                    let opt = opt.map_or("none".into(), |o| o.to_string());
                    over_budget_cuts.push(format!("seed {seed}: k = {k}, p = {p}, opt = {opt}, cut cost {}", cert.cost));
                }
            }
            ApproxOutcome::NoSolutionAtBudget => {
                refused_at_budget += 1;
                if within {
                    failures.push(format!("seed {seed}: no solution although opt {opt:?} <= p = {p}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < APPROX_TIME_LIMIT, "took {elapsed:?}");
    let summary = format!("{feasible} cuts, {refused_at_budget} no-solution, {elapsed:.1?}");
    ensure!(failures.is_empty(), "{} contract failures ({summary}); first: {}", failures.len(), failures[0]);
    ensure!(
        over_budget_cuts.is_empty(),
        "bound and feasibility hold, but {} cuts were returned with opt > p ({summary}): {}",
        over_budget_cuts.len(),
        over_budget_cuts.join("; ")
    );
    Ok(summary)
}

fn multiway_agreement() -> Outcome {
    let mut infeasible = 0;
    for seed in 0..SEEDS {
        let mut rng = seeded(1000 + seed);
        let n = rng.gen_range(3..=9);
        let graph = random_digraph(&mut rng, n, 0.3, 3);
        let t = rng.gen_range(2..=3.min(n));
        // Terminals joined by an arc cannot be separated; resample a few times.
        let mut terminals = Vec::new();
        for _ in 0..20 {
            terminals = rand::seq::index::sample(&mut rng, n, t).into_iter().map(cutlab::VertexId).collect();
            let adjacent = terminals.iter().any(|&u| terminals.iter().any(|&v| graph.find_edge(u, v).is_some()));
            if !adjacent {
                break;
            }
        }
        let reference = bruteforce::min_multiway_cut(&graph, &terminals);
        let total: Rational = graph.vertices().iter().filter_map(|v| v.weight).sum();
        match reference {
            Some((opt, _)) => {
                let got = multiway_cut_within_budget(&graph, &terminals, &opt).map_err(|e| e.to_string())?;
                ensure!(got.as_ref().map(|c| c.cost) == Some(opt), "seed {seed}: expected {opt}, got {got:?}");
                if opt > int(0) {
                    let below = multiway_cut_within_budget(&graph, &terminals, &(opt - 1)).map_err(|e| e.to_string())?;
                    ensure!(below.is_none(), "seed {seed}: solution below the optimum {opt}");
                }
            }
            None => {
                infeasible += 1;
                let got = multiway_cut_within_budget(&graph, &terminals, &total).map_err(|e| e.to_string())?;
                ensure!(got.is_none(), "seed {seed}: oracle cut an uncuttable instance");
            }
        }
    }
    Ok(format!("{SEEDS} instances, {infeasible} infeasible"))
}

fn splitters(art: &mut Artifacts) -> Outcome {
    let mut families = 0;
    for n in 1..=12 {
        for q in 1..=4.min(n) {
            let f = build_splitter(n, q, SplitterMethod::Greedy { seed: n as u64 }).map_err(|e| e.to_string())?;
            ensure!(verify_splitter(&f, DEFAULT_SUBSET_CAP) == Ok(true), "({n},{q}) family fails");
            families += 1;
        }
    }
    let ell = 3;
    for seed in 0..12u64 {
        let n = 4 + (seed as usize % 9);
        let mut rng = seeded(2000 + seed);
        let mut g = random_ugraph(&mut rng, n, 0.25);
        plant_clique(&mut rng, &mut g, ell);
        let family = build_splitter(n, ell, SplitterMethod::Greedy { seed }).map_err(|e| e.to_string())?;
        let instances = clique_to_mcsi_clique(&g, ell, &family).map_err(|e| e.to_string())?;
        let mut hits = 0;
        for inst in &instances {
            if max_value_bruteforce(inst, MCSI_CAP).map_err(|e| e.to_string())?.0 == int(1) {
                hits += 1;
            }
        }
        ensure!(hits >= 1, "planted clique lost on n = {n}");
        art.doc("mcsi instance", &McsiDoc::new(&instances[0]));

        let tf = random_triangle_free(&mut rng, n, 0.5);
        for inst in clique_to_mcsi_clique(&tf, ell, &family).map_err(|e| e.to_string())? {
            let v = max_value_bruteforce(&inst, MCSI_CAP).map_err(|e| e.to_string())?.0;
            ensure!(v < int(1), "triangle-free graph on n = {n} reached value 1");
        }
    }
    Ok(format!("{families} splitter families, 12 planted and 12 triangle-free graphs"))
}

fn planted_mcsi(seed: u64, ell: usize, n: usize) -> (McsiInstance, Vec<usize>) {
    let mut rng = seeded(seed);
    let mut g = random_ugraph(&mut rng, ell * n, 0.3);
    let alpha: Vec<usize> = (0..ell).map(|_| rng.gen_range(1..=n)).collect();
    let chosen: Vec<usize> = alpha.iter().enumerate().map(|(i, &a)| i * n + a - 1).collect();
    for (k, &u) in chosen.iter().enumerate() {
        for &v in &chosen[k + 1..] {
            g.add_edge(u, v).unwrap();
        }
    }
    let groups = (0..ell).map(|i| (i * n..(i + 1) * n).collect()).collect();
    (McsiInstance::new(g, groups, UGraph::complete(ell)).unwrap(), alpha)
}

/// Vertices of the gadget counted by label family.
fn dirmc_tally(g: &DirMc4Gadget) -> usize {
    g.graph
        .vertices()
        .iter()
        .filter(|v| {
            matches!(
                parse_label(&v.label),
                Some(Label::Terminal { .. } | Label::Z { .. } | Label::Path { .. } | Label::Grid { .. })
            )
        })
        .count()
}

fn dirmc4(art: &mut Artifacts) -> Outcome {
    ensure!(dirmc4_vertex_count(2, 2) == 42, "closed form gives {} at ell = 2, n = 2", dirmc4_vertex_count(2, 2));
    for ell in 2..=3 {
        for n in 1..=3 {
            let (inst, alpha) = planted_mcsi(ell as u64 * 100 + n as u64, ell, n);
            let g = build_dirmc4(&inst).map_err(|e| e.to_string())?;
            let count = g.graph.vertex_count();
            ensure!(count == dirmc4_vertex_count(ell, n) && count == dirmc_tally(&g), "ell {ell} n {n}: {count} vertices");
            let cut = planted_cut(&g, &alpha).map_err(|e| e.to_string())?;
            ensure!(cut.len() == ell + 5 * ell * (ell - 1) / 2, "ell {ell} n {n}: cut size {}", cut.len());
            ensure!(cut.cost == int(29 * (ell * ell) as i64), "ell {ell} n {n}: cost {}", cut.cost);
            ensure!(verify_cut(&g.graph, &g.demand(), &cut) == Ok(true), "ell {ell} n {n}: planted cut fails");
            let (phi, _) = extract_assignment(&g, &cut).map_err(|e| e.to_string())?;
            let value = assignment_value(&g.source, &phi).map_err(|e| e.to_string())?;
            ensure!(value == int(1) && value >= Rational::new(DIRMC_MIN_VALUE.0, DIRMC_MIN_VALUE.1), "value {value}");
            art.problem("dirmc4", &g.graph, &g.demand(), Some(SourceDoc::Mcsi(McsiDoc::new(&g.source))));
            art.certificate("dirmc4 cut", &g.graph, &cut);
            if ell == 3 && n == 2 {
                ensure!(cut.cost == int(261), "cost {} at ell = 3", cut.cost);
            }
        }
    }
    Ok("ell 2..3, n 1..3; 42 vertices at (2,2); 261 at ell 3".into())
}

fn macro_lemma(art: &mut Artifacts) -> Outcome {
    let mut slowest = Duration::ZERO;
    for n in 1..=3 {
        let start = Instant::now();
        let report = verify_macro_lemma(n, int(1)).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure!(elapsed < MACRO_LEMMA_TIME_LIMIT, "n = {n} took {elapsed:?}");
        ensure!(report.min_inout_weight == int(6), "n = {n}: min weight {}", report.min_inout_weight);
        let g = build_uniqueness_gadget(n, int(1)).map_err(|e| e.to_string())?;
        let found: BTreeSet<_> = report.weight_6b_subsets.iter().cloned().collect();
        let expected: BTreeSet<_> = (0..n).map(|r| g.layout.represented(r)).collect();
        ensure!(found == expected, "n = {n}: weight-6 subsets are not the represented sets");
        ensure!(report.holds, "n = {n}: report does not hold");
        let (code, out, err) = run_cli(&["check", "macro-lemma", "--n", &n.to_string()]);
        ensure!(code == 0, "cli exit {code}: {err}");
        let doc: MacroLemmaDoc = from_json(&out, "macro-lemma").map_err(|e| e.to_string())?;
        art.doc("macro-lemma report", &doc);
    }
    Ok(format!("n 1..3, slowest {slowest:.1?}"))
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cutlab_cli::run(std::iter::once("cutlab").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn dsn_biclique(art: &mut Artifacts) -> Outcome {
    let ell = 2;
    let gamma5 = Rational::new(1, 32);
    let mut graph = UGraph::new(2 * ell * 2);
    for v in 0..4 {
        for w in 4..8 {
            graph.add_edge(v, w).unwrap();
        }
    }
    let inst = McsiInstance::biclique(graph, vec![vec![0, 1], vec![2, 3]], vec![vec![4, 5], vec![6, 7]])
        .map_err(|e| e.to_string())?;
    let g = build_dsn_biclique(&inst, gamma5).map_err(|e| e.to_string())?;
    let net = planted_dsn_biclique_solution(&g, &[1, 2], &[5, 7]).map_err(|e| e.to_string())?;
    ensure!(net.cost == Rational::new(33, 16), "planted cost {}", net.cost);
    ensure!(net.cost == (int(1) + gamma5) * 2, "cost differs from 2(1+γ')");
    ensure!(g.demands.pairs.len() == 4, "{} demands", g.demands.pairs.len());
    for &pair in &g.demands.pairs {
        let single = DemandSpec::network_pairs(vec![pair]);
        ensure!(verify_network(&g.graph, &single, &net) == Ok(true), "demand {pair:?} unmet");
    }
    let ex = extract_biclique_assignment(&g, &net).map_err(|e| e.to_string())?;
    ensure!(ex.covered == ell * ell, "covered {}", ex.covered);
    ensure!(net.cost <= (int(2) - gamma5 * 4) * 2, "33/16 <= 2(2-4γ') fails");
    let DsnSource::Biclique(src) = &g.source else { return Err("wrong source".into()) };
    art.problem("dsn-biclique", &g.graph, &g.demands, Some(SourceDoc::Mcsi(McsiDoc::new(src))));
    art.certificate("dsn-biclique network", &g.graph, &net);
    Ok(format!("cost 33/16, {} superedges covered", ex.covered))
}

fn gt_instance(ell: usize, n: usize, seed: u64) -> (GridTilingInstance, GtSolution) {
    let mut rng = seeded(seed);
    let sol = GtSolution {
        alpha: (0..ell).map(|_| rng.gen_range(1..=n)).collect(),
        beta: (0..ell).map(|_| rng.gen_range(1..=n)).collect(),
    };
    let cells = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| BTreeSet::from([(sol.alpha[i], sol.beta[j]), (rng.gen_range(1..=n), rng.gen_range(1..=n))]))
                .collect()
        })
        .collect();
    (GridTilingInstance::new(ell, n, cells).unwrap(), sol)
}

/// `ℓ = 2, n = 2` with diagonal cells except a flipped bottom-right cell:
/// the first three cells force `α₂ = β₂`, the last one forbids it.
fn no_instance() -> GridTilingInstance {
    let diag = BTreeSet::from([(1, 1), (2, 2)]);
    let flip = BTreeSet::from([(1, 2), (2, 1)]);
    GridTilingInstance::new(2, 2, vec![vec![diag.clone(), diag.clone()], vec![diag, flip]]).unwrap()
}

fn dsn_gt(art: &mut Artifacts) -> Outcome {
    for (ell, expected) in [(2, 40), (3, 81)] {
        let (gt, sol) = gt_instance(ell, 3, 300 + ell as u64);
        let g = build_dsn_gt(&gt).map_err(|e| e.to_string())?;
        let net = planted_dsn_gt_solution(&g, &sol).map_err(|e| e.to_string())?;
        let l = ell as i64;
        ensure!(net.cost == int(6 * l + 7 * l * l) && net.cost == int(expected), "ell {ell}: cost {}", net.cost);
        ensure!(verify_network(&g.graph, &g.demands, &net) == Ok(true), "ell {ell}: planted network fails");
        ensure!(extract_gt_solution_dsn(&g, &net) == Ok(sol), "ell {ell}: round trip differs");
        art.problem("dsn-gt", &g.graph, &g.demands, Some(SourceDoc::GridTiling(GtDoc::new(&gt))));
        art.certificate("dsn-gt network", &g.graph, &net);
    }

    let gt = no_instance();
    ensure!(gt_solve_bruteforce(&gt).is_none(), "hand-pruned instance has a solution");
    let g = build_dsn_gt(&gt).map_err(|e| e.to_string())?;
    art.problem("dsn-gt no", &g.graph, &g.demands, Some(SourceDoc::GridTiling(GtDoc::new(&gt))));
    match min_network_within_budget(&g.graph, &g.demands, &g.budget) {
        Ok(None) => Ok("40 and 81; NO instance has no network within B*".into()),
        Ok(Some(net)) => Err(format!("NO instance has a network of cost {}", net.cost)),
        Err(Error::Refused(why)) => {
            // The oracle is out of range; the structural checks stand in.
            let tuples = [1, 2].into_iter().flat_map(|a| [1, 2].map(|b| vec![a, b]));
            let tuples: Vec<Vec<usize>> = tuples.collect();
            for alpha in &tuples {
                for beta in &tuples {
                    ensure!(g.layout.planted_edges(alpha, beta).is_none(), "({alpha:?},{beta:?}) plants on a NO instance");
                }
            }
            let (yes, sol) = gt_instance(2, 2, 7);
            let y = build_dsn_gt(&yes).map_err(|e| e.to_string())?;
            let net = planted_dsn_gt_solution(&y, &sol).map_err(|e| e.to_string())?;
            for &e in &net.edges() {
                let mut fewer = net.edges();
                fewer.remove(&e);
                let less = Certificate::priced_network(&y.graph, fewer).map_err(|e| e.to_string())?;
                ensure!(verify_network(&y.graph, &y.demands, &less) == Ok(false), "planted network minus {e:?} still works");
            }
            for e in y.graph.edge_ids().filter(|e| !net.members.contains(&e.0)) {
                let mut more = net.edges();
                more.insert(e);
                let more = Certificate::priced_network(&y.graph, more).map_err(|e| e.to_string())?;
                let got = extract_gt_solution_dsn(&y, &more);
                ensure!(matches!(got, Err(Error::BudgetExceeded { .. })), "adding {e:?} gives {got:?}");
            }
            Ok(format!("40 and 81; SKIP oracle on NO instance ({why}); structural stand-ins pass"))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn scss_gt(art: &mut Artifacts) -> Outcome {
    for ell in 2..=3 {
        let (gt, sol) = gt_instance(ell, 3, 400 + ell as u64);
        let g = build_scss_gt(&gt).map_err(|e| e.to_string())?;
        let net = planted_scss_solution(&g, &sol).map_err(|e| e.to_string())?;
        let l = ell as i64;
        let itemized = int(1 + 20 * l + 22 * l * l);
        ensure!(net.cost == itemized && g.budget == itemized, "ell {ell}: cost {}", net.cost);
        ensure!(g.budget_items.total() == itemized, "ell {ell}: items sum to {}", g.budget_items.total());
        ensure!(scss_lower_bound_tally(&g) == net.cost, "ell {ell}: tally {}", scss_lower_bound_tally(&g));
        ensure!(scss_budget_formula(ell) != int(1 + 20 * l + 24 * l * l), "24ℓ² form would coincide");
        if ell == 2 {
            ensure!(net.cost == int(129), "cost {} at ell = 2", net.cost);
        }
        ensure!(verify_network(&g.graph, &g.demand, &net) == Ok(true), "ell {ell}: not strongly connected");
        ensure!(extract_gt_solution_scss(&g, &net) == Ok(sol), "ell {ell}: round trip differs");
        art.problem("scss-gt", &g.graph, &g.demand, Some(SourceDoc::GridTiling(GtDoc::new(&gt))));
        art.certificate("scss-gt network", &g.graph, &net);
    }
    Ok("129 at ell 2, tally agrees, 22ℓ² pinned".into())
}

/// Independent clique search over increasing vertex lists.
fn has_clique(g: &UGraph, ell: usize) -> bool {
    fn grow(g: &UGraph, ell: usize, chosen: &mut Vec<usize>, from: usize) -> bool {
        if chosen.len() == ell {
            return true;
        }
        for v in from..g.vertex_count() {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if grow(g, ell, chosen, v + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    grow(g, ell, &mut Vec::new(), 0)
}

fn clique_gt_equivalence() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            graphs.push(UGraph::from_edges(n, edges).unwrap());
        }
    }
    for seed in 0..SEEDS {
        let mut rng = seeded(5000 + seed);
        let density = rng.gen_range(0.2..0.9);
        graphs.push(random_ugraph(&mut rng, 6, density));
    }
    let mut yes = 0;
    for g in &graphs {
        for ell in 1..=3 {
            // A reduction with an empty cell has no tiling at all.
            let tiled = match clique_to_gridtiling(g, ell) {
                Ok(gt) => gt_solve_bruteforce(&gt).is_some(),
                Err(Error::EmptyCell(..)) => false,
                Err(e) => return Err(e.to_string()),
            };
            ensure!(tiled == has_clique(g, ell), "disagreement on {g:?} at ell {ell}");
            yes += tiled as usize;
        }
    }
    Ok(format!("{} graphs x 3 values of ell, {yes} yes answers", graphs.len()))
}

fn serialization(art: &Artifacts) -> Outcome {
    ensure!(art.checked > 0, "no artifacts collected");
    ensure!(art.failures.is_empty(), "{} failures; first: {}", art.failures.len(), art.failures[0]);
    Ok(format!("{} artifacts", art.checked))
}

fn main() {
    let mut art = Artifacts::default();
    let mut criteria: Vec<(&str, Box<dyn FnMut(&mut Artifacts) -> Outcome>)> = vec![
        ("approximation contract", Box::new(|_| approx_contract())),
        ("multiway oracle agreement", Box::new(|_| multiway_agreement())),
        ("splitters and clique pipeline", Box::new(splitters)),
        ("directed multicut gadget", Box::new(dirmc4)),
        ("uniqueness gadget lemma", Box::new(macro_lemma)),
        ("steiner network biclique gadget", Box::new(dsn_biclique)),
        ("steiner network grid tiling gadget", Box::new(dsn_gt)),
        ("strongly connected subgraph gadget", Box::new(scss_gt)),
        ("clique and grid tiling equivalence", Box::new(|_| clique_gt_equivalence())),
    ];
    let mut failed = 0;
    let mut report = |k: usize, name: &str, outcome: Outcome| match outcome {
        Ok(detail) => println!("PASS criterion {k}: {name} ({detail})"),
        Err(detail) => {
            failed += 1;
            println!("FAIL criterion {k}: {name} ({detail})");
        }
    };
    for (k, (name, check)) in criteria.iter_mut().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&mut art)))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>().map(String::as_str).or(p.downcast_ref::<&str>().copied()))));
        report(k + 1, name, outcome);
    }
    report(10, "json round trip", serialization(&art));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
