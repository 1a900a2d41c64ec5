//! Command-line front end for `cutlab`.
//!
//! [`run`] parses an argument vector, performs one command and writes a JSON
//! document. The exit code is 0 on success, 2 when the answer is "no" (no
//! solution at the budget, an invalid certificate, a failed check), 3 when
//! an exact oracle refuses the instance and 1 on any other error.

pub mod error;
pub mod format;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cutlab::approx::{approx_multicut, ApproxOutcome};
use cutlab::gadgets::{
    build_dirmc4, build_dsn_biclique, build_dsn_gt, build_scss_gt, extract_assignment, extract_biclique_assignment,
    extract_gt_solution_dsn, extract_gt_solution_scss, planted_cut, planted_dsn_biclique_solution,
    planted_dsn_gt_solution, planted_scss_solution, verify_macro_lemma, DsnSource,
};
use cutlab::gridtiling::{clique_to_gridtiling, gt_solve_bruteforce};
use cutlab::mcsi::{
    assignment_value, build_splitter, clique_to_mcsi_biclique, clique_to_mcsi_clique, McsiInstance, SplitterMethod,
};
use cutlab::solvers::{min_multicut_exact, min_network_within_budget, multiway_cut_within_budget};
use cutlab::{verify_cut, verify_network, DemandMode, DemandSpec, Digraph, Rational};
use serde::{Deserialize, Serialize};

pub use error::CliError;
use format::*;

#[derive(Debug, Parser)]
#[command(name = "cutlab", version, about = "Exact cut and network solvers with hardness gadget generators")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a source instance or a gadget.
    #[command(subcommand)]
    Gen(Gen),
    /// Solve a problem instance.
    #[command(subcommand)]
    Solve(Solve),
    /// Check a certificate against an instance.
    Verify {
        kind: VerifyKind,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Read a source solution back off a gadget certificate.
    Extract {
        gadget: GadgetKind,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Build a gadget and the certificate of a known witness.
    Plant {
        gadget: GadgetKind,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Exhaustive structural checks.
    #[command(subcommand)]
    Check(Check),
}

#[derive(Debug, Subcommand)]
enum Gen {
    McsiFromClique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    McsiBicliqueFromClique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    GridtilingFromClique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        ell: usize,
    },
    Dirmc4 {
        #[arg(long)]
        mcsi: PathBuf,
    },
    DsnBiclique {
        #[arg(long)]
        mcsi: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        gamma5: Rational,
    },
    DsnGt {
        #[arg(long)]
        gt: PathBuf,
    },
    ScssGt {
        #[arg(long)]
        gt: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum Solve {
    MulticutApprox {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        budget: Rational,
    },
    MulticutExact {
        #[arg(long)]
        instance: PathBuf,
    },
    Multiwaycut {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        budget: Rational,
    },
    NetworkExact {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_parser = parse_rational)]
        budget: Rational,
    },
    Gridtiling {
        #[arg(long)]
        instance: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    MacroLemma {
        #[arg(long)]
        n: usize,
        /// Weight parameter of the gadget.
        #[arg(long, default_value = "1", value_parser = parse_rational)]
        b: Rational,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyKind {
    Cut,
    Network,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Dirmc4,
    DsnBiclique,
    DsnGt,
    ScssGt,
}

impl GadgetKind {
    fn name(self) -> &'static str {
        match self {
            GadgetKind::Dirmc4 => "dirmc4",
            GadgetKind::DsnBiclique => "dsn-biclique",
            GadgetKind::DsnGt => "dsn-gt",
            GadgetKind::ScssGt => "scss-gt",
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let r: Rational = s.trim().parse().map_err(|_| format!("{s:?} is not NUM or NUM/DEN"))?;
    if r < Rational::from_integer(0) {
        return Err(format!("{s} is negative"));
    }
    Ok(r)
}

/// Reported when a budgeted search finds nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoSolutionDoc {
    pub kind: String,
    pub problem: String,
    pub budget: Option<WeightDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub kind: String,
    pub valid: bool,
    pub cost: WeightDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Extracted MCSI assignment: one vertex label per colour class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentDoc {
    pub kind: String,
    pub assignment: Vec<String>,
    pub covered: usize,
    pub value: WeightDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacroLemmaDoc {
    pub kind: String,
    pub n: usize,
    pub b: WeightDoc,
    pub subsets_checked: u64,
    pub in_out_subsets: u64,
    pub min_inout_weight: WeightDoc,
    pub weight_6b_subsets: Vec<Vec<[String; 2]>>,
    pub represented: Vec<Option<usize>>,
    pub holds: bool,
}

/// A rendered result and its exit code.
struct Reply {
    json: String,
    code: i32,
}

impl Reply {
    fn ok<T: Serialize>(doc: &T) -> Self {
        Reply { json: to_json(doc), code: 0 }
    }

    fn no<T: Serialize>(doc: &T) -> Self {
        Reply { json: to_json(doc), code: 2 }
    }
}

/// Runs one command. Results go to `out` (or `--out`), diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let reply = match dispatch(cli.command) {
        Ok(reply) => reply,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &reply.json)
            .map_err(|source| CliError::Io { file: path.display().to_string(), source }),
        None => out
            .write_all(reply.json.as_bytes())
            .map_err(|source| CliError::Io { file: "<stdout>".into(), source }),
    };
    match written {
        Ok(()) => reply.code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let file = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { file: file.clone(), source })?;
    from_json(&text, &file)
}

fn dispatch(command: Command) -> Result<Reply, CliError> {
    match command {
        Command::Gen(g) => generate(g),
        Command::Solve(s) => solve(s),
        Command::Verify { kind, instance, certificate } => verify(kind, &instance, &certificate),
        Command::Extract { gadget, instance, certificate } => extract(gadget, &instance, &certificate),
        Command::Plant { gadget, witness } => plant(gadget, &read(&witness)?),
        Command::Check(Check::MacroLemma { n, b }) => macro_lemma(n, b),
    }
}

fn generate(g: Gen) -> Result<Reply, CliError> {
    let biclique = matches!(g, Gen::McsiBicliqueFromClique { .. });
    match g {
        Gen::McsiFromClique { graph, ell, seed } | Gen::McsiBicliqueFromClique { graph, ell, seed } => {
            let ug = read::<GraphDoc>(&graph)?.to_ugraph()?;
            let family = build_splitter(ug.vertex_count(), ell, SplitterMethod::Greedy { seed })?;
            let instances = if biclique {
                clique_to_mcsi_biclique(&ug, ell, &family)?
            } else {
                clique_to_mcsi_clique(&ug, ell, &family)?
            };
            Ok(Reply::ok(&McsiFamilyDoc {
                kind: "mcsi-family".into(),
                instances: instances.iter().map(McsiDoc::new).collect(),
            }))
        }
        Gen::GridtilingFromClique { graph, ell } => {
            let ug = read::<GraphDoc>(&graph)?.to_ugraph()?;
            Ok(Reply::ok(&GtDoc::new(&clique_to_gridtiling(&ug, ell)?)))
        }
        Gen::Dirmc4 { mcsi } => {
            let doc = build_gadget(GadgetKind::Dirmc4, &SourceDoc::Mcsi(read(&mcsi)?), None)?.doc;
            Ok(Reply::ok(&doc))
        }
        Gen::DsnBiclique { mcsi, gamma5 } => {
            let doc = build_gadget(GadgetKind::DsnBiclique, &SourceDoc::Mcsi(read(&mcsi)?), Some(gamma5))?.doc;
            Ok(Reply::ok(&doc))
        }
        Gen::DsnGt { gt } => Ok(Reply::ok(&build_gadget(GadgetKind::DsnGt, &SourceDoc::GridTiling(read(&gt)?), None)?.doc)),
        Gen::ScssGt { gt } => Ok(Reply::ok(&build_gadget(GadgetKind::ScssGt, &SourceDoc::GridTiling(read(&gt)?), None)?.doc)),
    }
}

/// A gadget rebuilt from its source, with its serialized form.
struct Built {
    doc: ProblemDoc,
    gadget: AnyGadget,
}

enum AnyGadget {
    DirMc(Box<cutlab::gadgets::DirMc4Gadget>),
    Dsn(Box<cutlab::gadgets::DsnGadget>),
    Scss(Box<cutlab::gadgets::ScssGadget>),
}

impl AnyGadget {
    fn graph(&self) -> &Digraph {
        match self {
            AnyGadget::DirMc(g) => &g.graph,
            AnyGadget::Dsn(g) => &g.graph,
            AnyGadget::Scss(g) => &g.graph,
        }
    }
}

fn mcsi_source(source: &SourceDoc) -> Result<McsiInstance, CliError> {
    match source {
        SourceDoc::Mcsi(doc) => doc.to_instance(),
        SourceDoc::GridTiling(_) => Err(CliError::schema("source", "expected an mcsi source")),
    }
}

fn gt_source(source: &SourceDoc) -> Result<cutlab::gridtiling::GridTilingInstance, CliError> {
    match source {
        SourceDoc::GridTiling(doc) => doc.to_instance(),
        SourceDoc::Mcsi(_) => Err(CliError::schema("source", "expected a gridtiling source")),
    }
}

fn build_gadget(kind: GadgetKind, source: &SourceDoc, gamma5: Option<Rational>) -> Result<Built, CliError> {
    let name = kind.name();
    let (doc, gadget) = match kind {
        GadgetKind::Dirmc4 => {
            let g = build_dirmc4(&mcsi_source(source)?)?;
            let doc = ProblemDoc::new(name, &g.graph, &g.demand(), Some(SourceDoc::Mcsi(McsiDoc::new(&g.source))));
            (doc, AnyGadget::DirMc(Box::new(g)))
        }
        GadgetKind::DsnBiclique => {
            let gamma5 = gamma5.ok_or_else(|| CliError::Usage("dsn-biclique needs gamma5".into()))?;
            let g = build_dsn_biclique(&mcsi_source(source)?, gamma5)?;
            let DsnSource::Biclique(inst) = &g.source else { unreachable!("biclique builder") };
            let doc = ProblemDoc::new(name, &g.graph, &g.demands, Some(SourceDoc::Mcsi(McsiDoc::new(inst))));
            (doc, AnyGadget::Dsn(Box::new(g)))
        }
        GadgetKind::DsnGt => {
            let g = build_dsn_gt(&gt_source(source)?)?;
            let doc = ProblemDoc::new(name, &g.graph, &g.demands, Some(source.clone()));
            (doc, AnyGadget::Dsn(Box::new(g)))
        }
        GadgetKind::ScssGt => {
            let g = build_scss_gt(&gt_source(source)?)?;
            let doc = ProblemDoc::new(name, &g.graph, &g.demand, Some(source.clone()));
            (doc, AnyGadget::Scss(Box::new(g)))
        }
    };
    Ok(Built { doc, gadget })
}

fn no_solution(problem: &str, budget: Option<&Rational>) -> Reply {
    Reply::no(&NoSolutionDoc { kind: "no-solution".into(), problem: problem.into(), budget: budget.map(weight_doc) })
}

fn expect_mode(demand: &DemandSpec, modes: &[DemandMode]) -> Result<(), CliError> {
    if modes.contains(&demand.mode) {
        Ok(())
    } else {
        Err(CliError::schema("demands.mode", &format!("{:?} does not fit this solver", demand.mode)))
    }
}

fn solve(s: Solve) -> Result<Reply, CliError> {
    let load = |path: &Path| read::<ProblemDoc>(path)?.to_graph();
    let cert_reply = |graph: &Digraph, cert: &cutlab::Certificate| Reply::ok(&CertificateDoc::new(graph, cert));
    match s {
        Solve::MulticutApprox { instance, budget } => {
            let (graph, demand) = load(&instance)?;
            expect_mode(&demand, &[DemandMode::CutPairs])?;
            Ok(match approx_multicut(&graph, &demand.pairs, &budget)? {
                ApproxOutcome::Cut(cert) => cert_reply(&graph, &cert),
                ApproxOutcome::NoSolutionAtBudget => no_solution("multicut-approx", Some(&budget)),
            })
        }
        Solve::MulticutExact { instance } => {
            let (graph, demand) = load(&instance)?;
            expect_mode(&demand, &[DemandMode::CutPairs, DemandMode::CutMultiway])?;
            match min_multicut_exact(&graph, &demand.ordered_pairs()) {
                Ok((_, cert)) => Ok(cert_reply(&graph, &cert)),
                Err(cutlab::Error::Infeasible(_)) => Ok(no_solution("multicut-exact", None)),
                Err(e) => Err(e.into()),
            }
        }
        Solve::Multiwaycut { instance, budget } => {
            let (graph, demand) = load(&instance)?;
            expect_mode(&demand, &[DemandMode::CutMultiway])?;
            Ok(match multiway_cut_within_budget(&graph, &demand.terminals, &budget)? {
                Some(cert) => cert_reply(&graph, &cert),
                None => no_solution("multiwaycut", Some(&budget)),
            })
        }
        Solve::NetworkExact { instance, budget } => {
            let (graph, demand) = load(&instance)?;
            Ok(match min_network_within_budget(&graph, &demand, &budget)? {
                Some(cert) => cert_reply(&graph, &cert),
                None => no_solution("network-exact", Some(&budget)),
            })
        }
        Solve::Gridtiling { instance } => {
            let gt = read::<GtDoc>(&instance)?.to_instance()?;
            Ok(match gt_solve_bruteforce(&gt) {
                Some(sol) => Reply::ok(&GtSolutionDoc::new(&sol)),
                None => no_solution("gridtiling", None),
            })
        }
    }
}

fn verify(kind: VerifyKind, instance: &Path, certificate: &Path) -> Result<Reply, CliError> {
    let (graph, demand) = read::<ProblemDoc>(instance)?.to_graph()?;
    let cert_doc: CertificateDoc = read(certificate)?;
    let cert = cert_doc.to_certificate(&graph)?;
    let checked = match kind {
        VerifyKind::Cut => verify_cut(&graph, &demand, &cert),
        VerifyKind::Network => verify_network(&graph, &demand, &cert),
    };
    let verdict = |valid: bool, reason: Option<String>| VerdictDoc {
        kind: "verdict".into(),
        valid,
        cost: cert_doc.cost,
        reason,
    };
    match checked {
        Ok(true) => Ok(Reply::ok(&verdict(true, None))),
        Ok(false) => {
            let why = match kind {
                VerifyKind::Cut => "a demanded pair stays connected",
                VerifyKind::Network => "a demand is not connected",
            };
            Ok(Reply::no(&verdict(false, Some(why.into()))))
        }
        Err(e) => {
            let e = CliError::from(e);
            if e.exit_code() == 2 {
                Ok(Reply::no(&verdict(false, Some(e.to_string()))))
            } else {
                Err(e)
            }
        }
    }
}

/// Rebuilds the gadget from the embedded source and insists that the file
/// describes exactly that graph, so labels can be trusted.
fn rebuild(kind: GadgetKind, doc: &ProblemDoc) -> Result<Built, CliError> {
    if doc.problem != kind.name() {
        return Err(CliError::schema("problem", &format!("expected {:?}, found {:?}", kind.name(), doc.problem)));
    }
    let source = doc.source.as_ref().ok_or_else(|| CliError::schema("source", "gadget files must carry their source"))?;
    let gamma5 = match kind {
        GadgetKind::DsnBiclique => {
            let text = doc.metadata.get("gamma5").ok_or_else(|| CliError::schema("metadata", "missing gamma5"))?;
            Some(parse_rational(text).map_err(|m| CliError::schema("metadata.gamma5", &m))?)
        }
        _ => None,
    };
    let built = build_gadget(kind, source, gamma5)?;
    let same = built.doc.vertices == doc.vertices
        && built.doc.edges == doc.edges
        && built.doc.demands == doc.demands
        && built.doc.metadata == doc.metadata;
    if !same {
        return Err(CliError::schema("vertices", "graph differs from the gadget built from its source"));
    }
    Ok(built)
}

fn labels_of(inst: &McsiInstance, phi: &[usize]) -> Vec<String> {
    phi.iter().map(|&v| inst.graph.label(v).to_string()).collect()
}

fn extract(kind: GadgetKind, instance: &Path, certificate: &Path) -> Result<Reply, CliError> {
    let built = rebuild(kind, &read(instance)?)?;
    let cert = read::<CertificateDoc>(certificate)?.to_certificate(built.gadget.graph())?;
    match &built.gadget {
        AnyGadget::DirMc(g) => {
            let (phi, _) = extract_assignment(g, &cert)?;
            Ok(Reply::ok(&AssignmentDoc {
                kind: "assignment".into(),
                assignment: labels_of(&g.source, &phi),
                covered: g.source.covered(&phi)?,
                value: weight_doc(&assignment_value(&g.source, &phi)?),
            }))
        }
        AnyGadget::Dsn(g) => match &g.source {
            DsnSource::Biclique(inst) => {
                let ex = extract_biclique_assignment(g, &cert)?;
                Ok(Reply::ok(&AssignmentDoc {
                    kind: "assignment".into(),
                    assignment: labels_of(inst, &ex.assignment),
                    covered: ex.covered,
                    value: weight_doc(&assignment_value(inst, &ex.assignment)?),
                }))
            }
            DsnSource::GridTiling(_) => Ok(Reply::ok(&GtSolutionDoc::new(&extract_gt_solution_dsn(g, &cert)?))),
        },
        AnyGadget::Scss(g) => Ok(Reply::ok(&GtSolutionDoc::new(&extract_gt_solution_scss(g, &cert)?))),
    }
}

/// Vertex ids of `labels`, one per class, in the order given.
fn vertex_ids(inst: &McsiInstance, labels: &[String], field: &str) -> Result<Vec<usize>, CliError> {
    labels
        .iter()
        .enumerate()
        .map(|(k, l)| {
            inst.graph
                .labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| CliError::schema(&format!("{field}[{k}]"), &format!("unknown vertex {l:?}")))
        })
        .collect()
}

fn plant(kind: GadgetKind, w: &WitnessDoc) -> Result<Reply, CliError> {
    let gamma5 = w.gamma5.map(|g| parse_weight(g, "gamma5")).transpose()?;
    let built = build_gadget(kind, &w.source, gamma5)?;
    let solution = || w.solution.as_ref().ok_or_else(|| CliError::schema("solution", "missing")).and_then(|s| s.to_solution());
    let cert = match &built.gadget {
        AnyGadget::DirMc(g) => {
            let ids = vertex_ids(&g.source, &w.clique, "clique")?;
            if ids.len() != g.ell {
                return Err(CliError::schema("clique", &format!("need one vertex for each of {} classes", g.ell)));
            }
            let alpha = ids
                .iter()
                .zip(&g.source.groups)
                .enumerate()
                .map(|(k, (v, grp))| {
                    grp.iter()
                        .position(|x| x == v)
                        .map(|p| p + 1)
                        .ok_or_else(|| CliError::schema(&format!("clique[{k}]"), "vertex is not in its class"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            planted_cut(g, &alpha)?
        }
        AnyGadget::Dsn(g) => match &g.source {
            DsnSource::Biclique(inst) => {
                let v = vertex_ids(inst, &w.v_side, "v_side")?;
                let ws = vertex_ids(inst, &w.w_side, "w_side")?;
                planted_dsn_biclique_solution(g, &v, &ws)?
            }
            DsnSource::GridTiling(_) => planted_dsn_gt_solution(g, &solution()?)?,
        },
        AnyGadget::Scss(g) => planted_scss_solution(g, &solution()?)?,
    };
    Ok(Reply::ok(&CertificateDoc::new(built.gadget.graph(), &cert)))
}

fn macro_lemma(n: usize, b: Rational) -> Result<Reply, CliError> {
    let report = verify_macro_lemma(n, b)?;
    let g = cutlab::gadgets::build_uniqueness_gadget(n, b)?;
    let edge = |e: &cutlab::EdgeId| {
        let (u, v) = g.graph.endpoints(*e);
        [g.graph.label(u).to_string(), g.graph.label(v).to_string()]
    };
    let doc = MacroLemmaDoc {
        kind: "macro-lemma".into(),
        n,
        b: weight_doc(&b),
        subsets_checked: report.subsets_checked,
        in_out_subsets: report.in_out_subsets,
        min_inout_weight: weight_doc(&report.min_inout_weight),
        weight_6b_subsets: report.weight_6b_subsets.iter().map(|s| s.iter().map(edge).collect()).collect(),
        represented: report.represented.clone(),
        holds: report.holds,
    };
    Ok(if report.holds { Reply::ok(&doc) } else { Reply::no(&doc) })
}
