//! Four-pair directed multicut gadget built from a multicoloured clique
//! instance over `K_ℓ`.
//!
//! Each colour class `i` owns a z-path of alternating super-heavy and heavy
//! vertices. Every ordered pair `(i, j)` owns an x-path and a y-path whose hat
//! vertices are medium, and every unordered pair owns an `n × n` grid whose
//! cells are light exactly when the two vertices they stand for are adjacent.

use std::collections::{BTreeMap, BTreeSet};

use super::labels::{Label, PathFamily};
use crate::error::{Error, Result};
use crate::graph::{verify_cut, Certificate, DemandSpec, GraphBuilder, VertexId};
use crate::mcsi::{Assignment, McsiInstance, UGraph};
use crate::{Digraph, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirMcWeights {
    pub light: Rational,
    pub medium: Rational,
    pub heavy: Rational,
    pub super_heavy: Rational,
}

impl DirMcWeights {
    pub fn for_ell(ell: usize) -> Self {
        let l = ell as i64;
        // ℓ² / C(ℓ,2) = 2ℓ / (ℓ-1)
        let light = Rational::new(2 * l, l - 1);
        DirMcWeights {
            medium: light * 2,
            light,
            heavy: Rational::from_integer(20 * l),
            super_heavy: Rational::from_integer(100 * l * l),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DirMc4Gadget {
    pub graph: Digraph,
    /// `(s^x,t^x), (s^y,t^y), (s^<,t^<), (s^>,t^>)`.
    pub pairs: Vec<(VertexId, VertexId)>,
    pub ell: usize,
    pub n: usize,
    pub weights: DirMcWeights,
    pub yes_cost: Rational,
    pub no_threshold: Rational,
    /// The padded source instance; `v^i_a` is `source.groups[i-1][a-1]`.
    pub source: McsiInstance,
}

impl DirMc4Gadget {
    pub fn demand(&self) -> DemandSpec {
        DemandSpec::cut_pairs(self.pairs.clone())
    }

    fn vertex(&self, label: Label) -> VertexId {
        self.graph.by_label(&label.to_string()).expect("gadget label")
    }
}

/// Vertex count predicted by tallying the construction.
pub fn dirmc4_vertex_count(ell: usize, n: usize) -> usize {
    8 + ell * (2 * n + 1) + 2 * ell * (ell - 1) * (2 * n + 1) + ell * (ell - 1) / 2 * n * n
}

const TERMINAL_KINDS: [char; 4] = ['x', 'y', '<', '>'];

fn z(i: usize, a: usize, hat: bool) -> Label {
    Label::Z { i, a, hat }
}

fn xy(family: PathFamily, i: usize, j: usize, a: usize, hat: bool) -> Label {
    Label::Path { family, i, j, a, hat }
}

fn term(side: char, kind: char) -> Label {
    Label::Terminal { side, kind }
}

/// Adds a bidirected path `v_0 ↔ v̂_1 ↔ v_1 ↔ … ↔ v̂_n ↔ v_n`.
fn bidirected_path(
    b: &mut GraphBuilder<Rational>,
    n: usize,
    label: impl Fn(usize, bool) -> Label,
    plain: &Rational,
    hat: &Rational,
) -> Result<()> {
    b.add_vertex(label(0, false).to_string(), Some(*plain))?;
    for a in 1..=n {
        b.add_vertex(label(a, true).to_string(), Some(*hat))?;
        b.add_vertex(label(a, false).to_string(), Some(*plain))?;
    }
    for a in 1..=n {
        for (u, v) in [(label(a - 1, false), label(a, true)), (label(a, true), label(a, false))] {
            let (u, v) = (u.to_string(), v.to_string());
            b.link(&u, &v, None)?;
            b.link(&v, &u, None)?;
        }
    }
    Ok(())
}

fn link(b: &mut GraphBuilder<Rational>, from: Label, to: Label) -> Result<()> {
    b.link(&from.to_string(), &to.to_string(), None).map(|_| ())
}

pub fn build_dirmc4(inst: &McsiInstance) -> Result<DirMc4Gadget> {
    let ell = inst.ell();
    if ell < 2 {
        return Err(Error::BadShape(format!("need at least two colour classes, got {ell}")));
    }
    if inst.supergraph != UGraph::complete(ell) || inst.biclique_sides.is_some() {
        return Err(Error::BadSupergraph("expected the complete graph on the supernodes".into()));
    }
    let source = inst.padded()?;
    let n = source.group_size();
    let w = DirMcWeights::for_ell(ell);
    let mut b = GraphBuilder::new();

    for kind in TERMINAL_KINDS {
        for side in ['s', 't'] {
            b.add_vertex(term(side, kind).to_string(), Some(w.super_heavy))?;
        }
    }
    for i in 1..=ell {
        bidirected_path(&mut b, n, |a, h| z(i, a, h), &w.super_heavy, &w.heavy)?;
    }
    for i in 1..=ell {
        for j in (1..=ell).filter(|&j| j != i) {
            for fam in [PathFamily::X, PathFamily::Y] {
                bidirected_path(&mut b, n, |a, h| xy(fam, i, j, a, h), &w.super_heavy, &w.medium)?;
            }
        }
    }
    for i in 1..=ell {
        for j in (1..=ell).filter(|&j| j != i) {
            for a in 0..=n {
                link(&mut b, xy(PathFamily::X, i, j, a, false), z(i, a, false))?;
                link(&mut b, z(i, a, false), xy(PathFamily::Y, i, j, a, false))?;
            }
            link(&mut b, term('s', 'x'), xy(PathFamily::X, i, j, 0, false))?;
            link(&mut b, xy(PathFamily::Y, i, j, n, false), term('t', 'y'))?;
            let kind = if i < j { '<' } else { '>' };
            link(&mut b, term('s', kind), xy(PathFamily::X, i, j, n, false))?;
            link(&mut b, xy(PathFamily::Y, i, j, 0, false), term('t', kind))?;
        }
        link(&mut b, term('s', 'y'), z(i, 0, false))?;
        link(&mut b, z(i, n, false), term('t', 'x'))?;
    }

    let grid = |i, j, a, b| Label::Grid { i, j, a, b };
    for i in 1..=ell {
        for j in i + 1..=ell {
            for a in 1..=n {
                for c in 1..=n {
                    let (u, v) = (source.groups[i - 1][a - 1], source.groups[j - 1][c - 1]);
                    let wt = if source.graph.has_edge(u, v) { &w.light } else { &w.super_heavy };
                    b.add_vertex(grid(i, j, a, c).to_string(), Some(*wt))?;
                }
            }
            for a in 1..=n {
                for c in 1..=n {
                    if a < n {
                        link(&mut b, grid(i, j, a, c), grid(i, j, a + 1, c))?;
                    }
                    if c < n {
                        link(&mut b, grid(i, j, a, c), grid(i, j, a, c + 1))?;
                    }
                }
            }
            for a in 1..=n {
                link(&mut b, xy(PathFamily::X, i, j, a, false), grid(i, j, a, 1))?;
                link(&mut b, grid(i, j, a, n), xy(PathFamily::Y, i, j, a - 1, false))?;
                link(&mut b, xy(PathFamily::X, j, i, a, false), grid(i, j, 1, a))?;
                link(&mut b, grid(i, j, n, a), xy(PathFamily::Y, j, i, a - 1, false))?;
            }
        }
    }

    b.set_meta("gadget", "dirmc4").set_meta("ell", ell).set_meta("n", n);
    let graph = b.build();
    debug_assert_eq!(graph.vertex_count(), dirmc4_vertex_count(ell, n));
    let pairs = TERMINAL_KINDS
        .iter()
        .map(|&k| {
            let s = graph.by_label(&term('s', k).to_string()).expect("terminal");
            let t = graph.by_label(&term('t', k).to_string()).expect("terminal");
            (s, t)
        })
        .collect();
    let l2 = Rational::from_integer((ell * ell) as i64);
    Ok(DirMc4Gadget {
        graph,
        pairs,
        ell,
        n,
        weights: w,
        yes_cost: l2 * 29,
        no_threshold: l2 * Rational::new(59, 2),
        source,
    })
}

/// The cut induced by a multicoloured clique; `alpha[i-1]` is the 1-based
/// position of the chosen vertex inside `V_i`.
pub fn planted_cut(g: &DirMc4Gadget, alpha: &[usize]) -> Result<Certificate<Rational>> {
    if alpha.len() != g.ell {
        return Err(Error::BadAssignment(format!("{} positions for {} classes", alpha.len(), g.ell)));
    }
    if let Some(i) = alpha.iter().position(|&a| a == 0 || a > g.n) {
        return Err(Error::BadAssignment(format!("position {} out of range in class {}", alpha[i], i + 1)));
    }
    let images: Vec<usize> = alpha.iter().enumerate().map(|(i, &a)| g.source.groups[i][a - 1]).collect();
    if !g.source.graph.is_clique(&images) {
        return Err(Error::NotAClique(format!("{images:?}")));
    }
    let mut members = Vec::new();
    for i in 1..=g.ell {
        members.push(g.vertex(z(i, alpha[i - 1], true)));
        for j in (1..=g.ell).filter(|&j| j != i) {
            members.push(g.vertex(xy(PathFamily::X, i, j, alpha[i - 1], true)));
            members.push(g.vertex(xy(PathFamily::Y, i, j, alpha[i - 1], true)));
            if i < j {
                members.push(g.vertex(Label::Grid { i, j, a: alpha[i - 1], b: alpha[j - 1] }));
            }
        }
    }
    Certificate::priced_cut(&g.graph, members)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DirMcDiagnostics {
    /// `beta[i-1]` is the unique ẑ index cut on `Z_i`, if there is exactly one.
    pub beta: Vec<Option<usize>>,
    pub good: BTreeSet<usize>,
    /// Pairs `i < j` with exactly one cut hat on each of the four incident
    /// x/y-paths and exactly one light cell cut in their grid.
    pub great: BTreeSet<(usize, usize)>,
    /// Great pairs whose endpoints are both good.
    pub good_great: BTreeSet<(usize, usize)>,
}

fn exactly_one<K: Ord>(counts: &BTreeMap<K, usize>, key: K) -> bool {
    counts.get(&key) == Some(&1)
}

pub fn extract_assignment(g: &DirMc4Gadget, cut: &Certificate<Rational>) -> Result<(Assignment, DirMcDiagnostics)> {
    let cut_vertices = cut.vertices();
    for &v in &cut_vertices {
        g.graph.check_vertex(v)?;
        if g.graph.vertex_weight(v) == Some(&g.weights.super_heavy) {
            return Err(Error::SuperHeavyInCut(g.graph.label(v).to_string()));
        }
    }
    if !verify_cut(&g.graph, &g.demand(), cut)? {
        return Err(Error::InfeasibleCut);
    }

    let mut z_hats: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut path_hats: BTreeMap<(PathFamily, usize, usize), usize> = BTreeMap::new();
    let mut grid_cells: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &v in &cut_vertices {
        match super::labels::parse_label(g.graph.label(v)) {
            Some(Label::Z { i, a, hat: true }) => z_hats.entry(i).or_default().push(a),
            Some(Label::Path { family, i, j, hat: true, .. }) => *path_hats.entry((family, i, j)).or_default() += 1,
            Some(Label::Grid { i, j, .. }) => *grid_cells.entry((i, j)).or_default() += 1,
            _ => {}
        }
    }

    let mut diag = DirMcDiagnostics::default();
    for i in 1..=g.ell {
        let beta = match z_hats.get(&i).map(Vec::as_slice) {
            Some(&[a]) => Some(a),
            _ => None,
        };
        if beta.is_some() {
            diag.good.insert(i);
        }
        diag.beta.push(beta);
    }
    for i in 1..=g.ell {
        for j in i + 1..=g.ell {
            let paths_ok = [(i, j), (j, i)].iter().all(|&(a, b)| {
                exactly_one(&path_hats, (PathFamily::X, a, b)) && exactly_one(&path_hats, (PathFamily::Y, a, b))
            });
            if paths_ok && exactly_one(&grid_cells, (i, j)) {
                diag.great.insert((i, j));
                if diag.good.contains(&i) && diag.good.contains(&j) {
                    diag.good_great.insert((i, j));
                }
            }
        }
    }

    let phi = (0..g.ell)
        .map(|i| match diag.beta[i] {
            Some(a) => g.source.groups[i][a - 1],
            None => *g.source.groups[i].iter().min().expect("nonempty class"),
        })
        .collect();
    Ok((phi, diag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcsi::assignment_value;

    /// Two classes of two vertices with the edge `v^1_2 v^2_1`.
    fn tiny() -> McsiInstance {
        let g = UGraph::from_edges(4, [(1, 2), (0, 3)]).unwrap();
        McsiInstance::new(g, vec![vec![0, 1], vec![2, 3]], UGraph::complete(2)).unwrap()
    }

    #[test]
    fn counts_and_weights() {
        let g = build_dirmc4(&tiny()).unwrap();
        assert_eq!(g.graph.vertex_count(), 42);
        assert_eq!(dirmc4_vertex_count(2, 2), 42);
        assert_eq!(g.weights.light, Rational::from_integer(4));
        assert_eq!(g.yes_cost / g.no_threshold, Rational::new(58, 59));
        let light = g.graph.expect_label("p/1/2/2/1").unwrap();
        assert_eq!(g.graph.vertex_weight(light), Some(&g.weights.light));
        let heavy = g.graph.expect_label("p/1/2/1/1").unwrap();
        assert_eq!(g.graph.vertex_weight(heavy), Some(&g.weights.super_heavy));
    }

    #[test]
    fn planted_round_trip() {
        let inst = tiny();
        let g = build_dirmc4(&inst).unwrap();
        let cut = planted_cut(&g, &[2, 1]).unwrap();
        assert_eq!(cut.len(), 7);
        assert_eq!(cut.cost, Rational::from_integer(116));
        assert!(verify_cut(&g.graph, &g.demand(), &cut).unwrap());
        let (phi, diag) = extract_assignment(&g, &cut).unwrap();
        assert_eq!(phi, vec![1, 2]);
        assert_eq!(diag.good_great.len(), 1);
        assert_eq!(assignment_value(&g.source, &phi).unwrap(), Rational::from_integer(1));
        assert!(matches!(planted_cut(&g, &[1, 1]), Err(Error::NotAClique(_))));
    }

    #[test]
    fn guards() {
        let g = build_dirmc4(&tiny()).unwrap();
        let s = g.pairs[0].0;
        let bad = Certificate::priced_cut(&g.graph, [s]).unwrap();
        assert!(matches!(extract_assignment(&g, &bad), Err(Error::SuperHeavyInCut(_))));
        let hat = g.graph.expect_label("z/1/hat/1").unwrap();
        let partial = Certificate::priced_cut(&g.graph, [hat]).unwrap();
        assert_eq!(extract_assignment(&g, &partial), Err(Error::InfeasibleCut));
        let mut path = UGraph::new(3);
        path.add_edge(0, 1).unwrap();
        path.add_edge(1, 2).unwrap();
        let wrong = McsiInstance::new(UGraph::new(3), vec![vec![0], vec![1], vec![2]], path).unwrap();
        assert!(matches!(build_dirmc4(&wrong), Err(Error::BadSupergraph(_))));
    }
}
