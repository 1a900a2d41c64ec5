//! Directed Steiner network gadgets over the main/secondary grid: one fed by
//! a biclique-form colouring instance with a tunable orange weight, one fed
//! by a grid tiling instance with unit weights.

use std::collections::BTreeSet;

use itertools::Itertools;

use super::grid::{build_grid, GadgetGrid, GadgetKind, GridWeights};
use crate::error::{Error, Result};
use crate::graph::{cost_of, verify_network, Certificate, CertificateKind, DemandSpec, EdgeId, GraphBuilder};
use crate::gridtiling::{gt_verify, GridTilingInstance, GtSolution};
use crate::mcsi::{Assignment, McsiInstance};
use crate::{Digraph, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DsnVariant {
    /// Orange edges weigh `2γ'/(4ℓ)`, where `γ'` stands for `γ^{1/5}`.
    Biclique { gamma5: Rational },
    GridTiling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DsnSource {
    Biclique(McsiInstance),
    GridTiling(GridTilingInstance),
}

#[derive(Debug, Clone)]
pub struct DsnGadget {
    pub graph: Digraph,
    /// `(a_i, b_i)` for every `i`, then `(c_j, d_j)` for every `j`.
    pub demands: DemandSpec,
    pub variant: DsnVariant,
    /// Cost of the planted solution: `2(1+γ')` or `6ℓ + 7ℓ²`.
    pub budget: Rational,
    pub ell: usize,
    pub n: usize,
    pub layout: GadgetGrid,
    pub source: DsnSource,
    /// 1-based cells whose main gadget has no rows. Such an instance has no
    /// feasible network at all.
    pub empty_cells: Vec<(usize, usize)>,
}

fn assemble(
    ell: usize,
    n: usize,
    main_rows: Vec<Vec<Vec<(usize, usize)>>>,
    weights: GridWeights,
    variant: DsnVariant,
    budget: Rational,
    source: DsnSource,
) -> Result<DsnGadget> {
    let mut b = GraphBuilder::new();
    let layout = build_grid(&mut b, ell, n, &main_rows, GadgetKind::Path, &weights)?;
    let kind = match variant {
        DsnVariant::Biclique { gamma5 } => {
            b.set_meta("gamma5", gamma5);
            "dsn-biclique"
        }
        DsnVariant::GridTiling => "dsn-gt",
    };
    b.set_meta("gadget", kind).set_meta("ell", ell).set_meta("n", n);
    let graph = b.build();
    assert!(graph.is_dag(), "grid construction must be acyclic");
    let pairs = (0..ell)
        .map(|i| (layout.a[i], layout.b[i]))
        .chain((0..ell).map(|j| (layout.c[j], layout.d[j])))
        .collect();
    let empty_cells = (0..ell)
        .flat_map(|i| (0..ell).map(move |j| (i, j)))
        .filter(|&(i, j)| main_rows[i][j].is_empty())
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    Ok(DsnGadget {
        graph,
        demands: DemandSpec::network_pairs(pairs),
        variant,
        budget,
        ell,
        n,
        layout,
        source,
        empty_cells,
    })
}

pub fn build_dsn_biclique(inst: &McsiInstance, gamma5: Rational) -> Result<DsnGadget> {
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    if gamma5 <= zero || gamma5 >= one {
        return Err(Error::BadShape(format!("γ' = {gamma5} must lie strictly between 0 and 1")));
    }
    let padded = inst.padded()?;
    let (vs, ws) = padded
        .biclique_groups()
        .ok_or_else(|| Error::BadShape("instance is not in biclique form".into()))?;
    let ell = vs.len();
    if ell == 0 {
        return Err(Error::BadShape("no colour classes".into()));
    }
    let n = padded.group_size();
    let rows = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| {
                    let mut cell = Vec::new();
                    for x in 1..=n {
                        for y in 1..=n {
                            if padded.graph.has_edge(vs[i][x - 1], ws[j][y - 1]) {
                                cell.push((x, y));
                            }
                        }
                    }
                    cell
                })
                .collect()
        })
        .collect();
    let l = ell as i64;
    let weights = GridWeights {
        main: Rational::new(2, l * l),
        secondary: zero,
        red: zero,
        orange: gamma5 * Rational::new(2, 4 * l),
    };
    let budget = (one + gamma5) * 2;
    assemble(ell, n, rows, weights, DsnVariant::Biclique { gamma5 }, budget, DsnSource::Biclique(padded))
}

pub fn build_dsn_gt(gt: &GridTilingInstance) -> Result<DsnGadget> {
    let ell = gt.ell;
    let rows = gt.cells.iter().map(|row| row.iter().map(|c| c.iter().copied().collect()).collect()).collect();
    let one = Rational::from_integer(1);
    let weights = GridWeights { main: one, secondary: one, red: one, orange: one };
    let l = ell as i64;
    let budget = Rational::from_integer(6 * l + 7 * l * l);
    assemble(ell, gt.n, rows, weights, DsnVariant::GridTiling, budget, DsnSource::GridTiling(gt.clone()))
}

/// Smallest exponent `k ≥ 1` such that `γ' = 2^{-k}` pushes the gap ratio
/// `2(2−4γ') / 2(1+γ')` to at least `2 − ε`, i.e. `γ' ≤ ε / (6 − ε)`.
pub fn gamma5_for_target_ratio(eps: Rational) -> Result<Rational> {
    let two = Rational::from_integer(2);
    if eps <= Rational::from_integer(0) || eps >= two {
        return Err(Error::BadShape(format!("ε = {eps} must lie strictly between 0 and 2")));
    }
    let mut gamma = Rational::new(1, 2);
    while (two - gamma * 4) / (Rational::from_integer(1) + gamma) < two - eps {
        gamma /= 2;
    }
    Ok(gamma)
}

fn biclique_source(g: &DsnGadget) -> Result<&McsiInstance> {
    match &g.source {
        DsnSource::Biclique(inst) => Ok(inst),
        DsnSource::GridTiling(_) => Err(Error::ModeMismatch("gadget was built from a grid tiling".into())),
    }
}

/// The network picked by a biclique `v_1..v_ℓ`, `w_1..w_ℓ` given as vertex
/// ids of the source graph.
pub fn planted_dsn_biclique_solution(g: &DsnGadget, v: &[usize], w: &[usize]) -> Result<Certificate<Rational>> {
    let inst = biclique_source(g)?;
    let (vs, ws) = inst.biclique_groups().expect("biclique form");
    if v.len() != g.ell || w.len() != g.ell {
        return Err(Error::BadAssignment(format!("expected {} vertices per side", g.ell)));
    }
    let position = |groups: &[Vec<usize>], side: &[usize]| -> Result<Vec<usize>> {
        side.iter()
            .zip(groups)
            .map(|(u, grp)| {
                grp.iter()
                    .position(|x| x == u)
                    .map(|p| p + 1)
                    .ok_or_else(|| Error::BadAssignment(format!("vertex {u} is not in its class")))
            })
            .collect()
    };
    let (alpha, beta) = (position(vs, v)?, position(ws, w)?);
    for &x in v {
        if let Some(&y) = w.iter().find(|&&y| !inst.graph.has_edge(x, y)) {
            return Err(Error::NotABiclique(format!("{x} and {y} are not adjacent")));
        }
    }
    let net = g.layout.planted_edges(&alpha, &beta).expect("every pair of the biclique is a row");
    Certificate::priced_network(&g.graph, net)
}

pub fn planted_dsn_gt_solution(g: &DsnGadget, sol: &GtSolution) -> Result<Certificate<Rational>> {
    let DsnSource::GridTiling(gt) = &g.source else {
        return Err(Error::ModeMismatch("gadget was built from a biclique instance".into()));
    };
    if !gt_verify(gt, sol) {
        return Err(Error::NotAGtSolution);
    }
    let net = g.layout.planted_edges(&sol.alpha, &sol.beta).ok_or(Error::NotAGtSolution)?;
    Certificate::priced_network(&g.graph, net)
}

/// Largest number of candidate assignments the biclique extractor will try.
pub const EXTRACTION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueDiagnostics {
    /// 1-based positions, indexed by `j` (for `l`, `r`) or `i` (for `t`, `b`).
    pub l: Vec<BTreeSet<usize>>,
    pub r: Vec<BTreeSet<usize>>,
    pub t: Vec<BTreeSet<usize>>,
    pub b: Vec<BTreeSet<usize>>,
    /// Main rows `(x, y)` kept in `M_{i,j}`.
    pub h: Vec<Vec<BTreeSet<(usize, usize)>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueExtraction {
    /// Vertex ids of the source graph: V-side images then W-side images.
    pub assignment: Assignment,
    pub covered: usize,
    pub diagnostics: BicliqueDiagnostics,
}

pub fn extract_biclique_assignment(g: &DsnGadget, net: &Certificate<Rational>) -> Result<BicliqueExtraction> {
    let inst = biclique_source(g)?;
    if !verify_network(&g.graph, &g.demands, net)? {
        return Err(Error::InfeasibleNetwork);
    }
    let edges = net.edges();
    let chosen = |list: &Vec<EdgeId>| -> BTreeSet<usize> {
        list.iter().enumerate().filter(|(_, e)| edges.contains(e)).map(|(p, _)| p + 1).collect()
    };
    let lay = &g.layout;
    let diag = BicliqueDiagnostics {
        l: lay.orange_c.iter().map(chosen).collect(),
        r: lay.orange_d.iter().map(chosen).collect(),
        t: lay.orange_a.iter().map(chosen).collect(),
        b: lay.orange_b.iter().map(chosen).collect(),
        h: lay
            .main
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| {
                        let super::grid::GadgetLayout::Path(p) = m else { unreachable!("path gadgets") };
                        (0..p.rows.len())
                            .filter(|&r| edges.contains(&p.arcs[r]))
                            .map(|r| match p.rows[r] {
                                super::labels::RowKey::Pair(x, y) => (x, y),
                                super::labels::RowKey::Index(_) => unreachable!("main rows are pairs"),
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    };

    let meet = |a: &[BTreeSet<usize>], b: &[BTreeSet<usize>], what: &str| -> Result<Vec<Vec<usize>>> {
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(k, (x, y))| {
                let both: Vec<usize> = x.intersection(y).copied().collect();
                if both.is_empty() {
                    Err(Error::StructureViolation(format!("{what} intersection {} is empty", k + 1)))
                } else {
                    Ok(both)
                }
            })
            .collect()
    };
    let mut options = meet(&diag.t, &diag.b, "T/B")?;
    options.extend(meet(&diag.l, &diag.r, "L/R")?);
    if let Some((i, j)) = (0..g.ell).flat_map(|i| (0..g.ell).map(move |j| (i, j))).find(|&(i, j)| diag.h[i][j].is_empty()) {
        return Err(Error::StructureViolation(format!("main gadget ({}, {}) keeps no row", i + 1, j + 1)));
    }
    let product = options.iter().try_fold(1u128, |acc, o| acc.checked_mul(o.len() as u128));
    match product {
        Some(p) if p <= EXTRACTION_CAP => {}
        _ => return Err(Error::Refused(format!("more than {EXTRACTION_CAP} candidate assignments"))),
    }

    let to_vertex = |k: usize, pos: usize| inst.groups[k][pos - 1];
    let mut best: Option<(usize, Assignment)> = None;
    for choice in options.iter().map(|o| o.iter().copied()).multi_cartesian_product() {
        let phi: Assignment = choice.iter().enumerate().map(|(k, &p)| to_vertex(k, p)).collect();
        let covered = inst.covered(&phi)?;
        if best.as_ref().is_none_or(|(c, _)| covered > *c) {
            best = Some((covered, phi));
        }
    }
    let (covered, assignment) = best.expect("at least one candidate");
    Ok(BicliqueExtraction { assignment, covered, diagnostics: diag })
}

fn price(g: &DsnGadget, net: &Certificate<Rational>) -> Result<Rational> {
    let cost = cost_of(&g.graph, &net.members, CertificateKind::EdgeNetwork)?;
    if net.cost != cost {
        return Err(Error::CostMismatch { stored: net.cost.to_string(), computed: cost.to_string() });
    }
    Ok(cost)
}

/// Reads a grid tiling solution off a network of cost at most `6ℓ + 7ℓ²`.
pub fn extract_gt_solution_dsn(g: &DsnGadget, net: &Certificate<Rational>) -> Result<GtSolution> {
    let DsnSource::GridTiling(gt) = &g.source else {
        return Err(Error::ModeMismatch("gadget was built from a biclique instance".into()));
    };
    if net.kind != CertificateKind::EdgeNetwork {
        return Err(Error::ModeMismatch("expected an edge network".into()));
    }
    let cost = price(g, net)?;
    if cost > g.budget {
        return Err(Error::BudgetExceeded { cost: cost.to_string(), budget: g.budget.to_string() });
    }
    let (alpha, beta) = g.layout.read_solution(&net.edges())?;
    let sol = GtSolution { alpha, beta };
    if !gt_verify(gt, &sol) {
        return Err(Error::StructureViolation("extracted values miss a cell".into()));
    }
    Ok(sol)
}
