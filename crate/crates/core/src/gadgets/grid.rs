//! The `ℓ × ℓ` arrangement of main gadgets interleaved with horizontal and
//! vertical secondary gadgets, shared by the Steiner network constructions.
//!
//! Type I flow runs right to left along row `i`:
//! `a_i → VS_{i,ℓ+1} → M_{i,ℓ} → VS_{i,ℓ} → … → VS_{i,1} → b_i`.
//! Type II flow runs top to bottom along column `j`:
//! `c_j → HS_{1,j} → M_{1,j} → HS_{2,j} → … → HS_{ℓ+1,j} → d_j`.

use std::collections::BTreeSet;

use super::labels::{GadgetRef, Label, RowKey};
use super::path::{add_path, PathLayout};
use super::uniqueness::{add_uniqueness, UniquenessLayout};
use crate::error::Result;
use crate::graph::{EdgeId, GraphBuilder, VertexId};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetLayout {
    Path(PathLayout),
    Uniqueness(UniquenessLayout),
}

impl GadgetLayout {
    pub fn rows(&self) -> &[RowKey] {
        match self {
            GadgetLayout::Path(p) => &p.rows,
            GadgetLayout::Uniqueness(u) => &u.rows,
        }
    }

    pub fn row_of(&self, key: RowKey) -> Option<usize> {
        self.rows().iter().position(|&r| r == key)
    }

    /// Slot-0 vertex of row `r`.
    pub fn entry(&self, r: usize) -> VertexId {
        match self {
            GadgetLayout::Path(p) => p.zero[r],
            GadgetLayout::Uniqueness(u) => u.path[r][0],
        }
    }

    /// Last vertex of row `r`: slot 1 of a path gadget, slot 3 of a
    /// uniqueness gadget.
    pub fn exit(&self, r: usize) -> VertexId {
        match self {
            GadgetLayout::Path(p) => p.one[r],
            GadgetLayout::Uniqueness(u) => u.path[r][3],
        }
    }

    pub fn intra_edges(&self) -> BTreeSet<EdgeId> {
        match self {
            GadgetLayout::Path(p) => p.arcs.iter().copied().collect(),
            GadgetLayout::Uniqueness(u) => u.intra_edges(),
        }
    }

    /// Edges picked when the gadget settles on row `r`.
    pub fn represented(&self, r: usize) -> BTreeSet<EdgeId> {
        match self {
            GadgetLayout::Path(p) => BTreeSet::from([p.arcs[r]]),
            GadgetLayout::Uniqueness(u) => u.represented(r),
        }
    }

    /// The row whose representation is exactly the gadget's share of `net`.
    pub fn represented_row(&self, net: &BTreeSet<EdgeId>) -> Option<usize> {
        match self {
            GadgetLayout::Path(p) => {
                let picked: Vec<usize> = (0..p.arcs.len()).filter(|&r| net.contains(&p.arcs[r])).collect();
                match picked.as_slice() {
                    &[r] => Some(r),
                    _ => None,
                }
            }
            GadgetLayout::Uniqueness(u) => u.represented_row(net),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Path,
    Uniqueness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridWeights {
    pub main: Rational,
    pub secondary: Rational,
    pub red: Rational,
    pub orange: Rational,
}

/// The four red edges attached to one main-gadget row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RedEdges {
    /// `VS_{i,j+1}(out_x) → M_{i,j}(0_(x,y))`
    pub from_vertical: EdgeId,
    /// `HS_{i,j}(out_y) → M_{i,j}(0_(x,y))`
    pub from_horizontal: EdgeId,
    /// `M_{i,j}(out_(x,y)) → HS_{i+1,j}(0_y)`
    pub to_horizontal: EdgeId,
    /// `M_{i,j}(out_(x,y)) → VS_{i,j}(0_x)`
    pub to_vertical: EdgeId,
}

impl RedEdges {
    pub fn all(&self) -> [EdgeId; 4] {
        [self.from_vertical, self.from_horizontal, self.to_horizontal, self.to_vertical]
    }
}

/// Ids of everything placed by [`build_grid`]; all indices 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGrid {
    pub ell: usize,
    pub n: usize,
    /// `main[i][j]` is `M_{i+1,j+1}`.
    pub main: Vec<Vec<GadgetLayout>>,
    /// `horizontal[i][j]` is `HS_{i+1,j+1}`, `i ≤ ℓ`.
    pub horizontal: Vec<Vec<GadgetLayout>>,
    /// `vertical[i][j]` is `VS_{i+1,j+1}`, `j ≤ ℓ`.
    pub vertical: Vec<Vec<GadgetLayout>>,
    /// `red[i][j][r]` for row `r` of `M_{i+1,j+1}`.
    pub red: Vec<Vec<Vec<RedEdges>>>,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub c: Vec<VertexId>,
    pub d: Vec<VertexId>,
    /// `orange_a[i][v]` is `a_i → VS_{i,ℓ+1}(0_v)`; the others likewise.
    pub orange_a: Vec<Vec<EdgeId>>,
    pub orange_b: Vec<Vec<EdgeId>>,
    pub orange_c: Vec<Vec<EdgeId>>,
    pub orange_d: Vec<Vec<EdgeId>>,
}

impl GadgetGrid {
    /// Every gadget with its reference, main gadgets first.
    pub fn gadgets(&self) -> Vec<(GadgetRef, &GadgetLayout)> {
        let mut out = Vec::new();
        for (i, row) in self.main.iter().enumerate() {
            out.extend(row.iter().enumerate().map(|(j, g)| (GadgetRef::Main(i + 1, j + 1), g)));
        }
        for (i, row) in self.horizontal.iter().enumerate() {
            out.extend(row.iter().enumerate().map(|(j, g)| (GadgetRef::Horizontal(i + 1, j + 1), g)));
        }
        for (i, row) in self.vertical.iter().enumerate() {
            out.extend(row.iter().enumerate().map(|(j, g)| (GadgetRef::Vertical(i + 1, j + 1), g)));
        }
        out
    }

    pub fn orange_edges(&self) -> BTreeSet<EdgeId> {
        [&self.orange_a, &self.orange_b, &self.orange_c, &self.orange_d]
            .into_iter()
            .flatten()
            .flatten()
            .copied()
            .collect()
    }
}

/// Places borders, gadgets, red and orange edges. `main_rows[i][j]` lists the
/// 1-based `(x, y)` rows of `M_{i+1,j+1}`; secondary gadgets get rows `1..=n`.
pub(crate) fn build_grid(
    b: &mut GraphBuilder<Rational>,
    ell: usize,
    n: usize,
    main_rows: &[Vec<Vec<(usize, usize)>>],
    kind: GadgetKind,
    w: &GridWeights,
) -> Result<GadgetGrid> {
    let mut border = |side: char| -> Result<Vec<VertexId>> {
        (1..=ell).map(|index| b.add_vertex(Label::Border { side, index }.to_string(), None)).collect()
    };
    let (a, bb, c, d) = (border('a')?, border('b')?, border('c')?, border('d')?);

    let place = |b: &mut GraphBuilder<Rational>, g: GadgetRef, rows: &[RowKey], wt: &Rational| {
        let prefix = g.to_string();
        Ok::<_, crate::Error>(match kind {
            GadgetKind::Path => GadgetLayout::Path(add_path(b, &prefix, rows, wt)?),
            GadgetKind::Uniqueness => GadgetLayout::Uniqueness(add_uniqueness(b, &prefix, rows, wt)?),
        })
    };
    let secondary_rows: Vec<RowKey> = (1..=n).map(RowKey::Index).collect();
    let mut main = Vec::with_capacity(ell);
    for i in 0..ell {
        let mut row = Vec::with_capacity(ell);
        for j in 0..ell {
            let rows: Vec<RowKey> = main_rows[i][j].iter().map(|&(x, y)| RowKey::Pair(x, y)).collect();
            row.push(place(b, GadgetRef::Main(i + 1, j + 1), &rows, &w.main)?);
        }
        main.push(row);
    }
    let mut horizontal = Vec::with_capacity(ell + 1);
    for i in 0..=ell {
        let row: Result<Vec<_>> = (0..ell)
            .map(|j| place(b, GadgetRef::Horizontal(i + 1, j + 1), &secondary_rows, &w.secondary))
            .collect();
        horizontal.push(row?);
    }
    let mut vertical = Vec::with_capacity(ell);
    for i in 0..ell {
        let row: Result<Vec<_>> = (0..=ell)
            .map(|j| place(b, GadgetRef::Vertical(i + 1, j + 1), &secondary_rows, &w.secondary))
            .collect();
        vertical.push(row?);
    }

    let red_w = || Some(w.red);
    let mut red = Vec::with_capacity(ell);
    for i in 0..ell {
        let mut red_row = Vec::with_capacity(ell);
        for j in 0..ell {
            let m = &main[i][j];
            let mut edges = Vec::with_capacity(m.rows().len());
            for (r, key) in m.rows().iter().enumerate() {
                let RowKey::Pair(x, y) = *key else { unreachable!("main rows are pairs") };
                let (vs_in, hs_in) = (&vertical[i][j + 1], &horizontal[i][j]);
                let (hs_out, vs_out) = (&horizontal[i + 1][j], &vertical[i][j]);
                edges.push(RedEdges {
                    from_vertical: b.add_edge(vs_in.exit(x - 1), m.entry(r), red_w())?,
                    from_horizontal: b.add_edge(hs_in.exit(y - 1), m.entry(r), red_w())?,
                    to_horizontal: b.add_edge(m.exit(r), hs_out.entry(y - 1), red_w())?,
                    to_vertical: b.add_edge(m.exit(r), vs_out.entry(x - 1), red_w())?,
                });
            }
            red_row.push(edges);
        }
        red.push(red_row);
    }

    let orange = || Some(w.orange);
    let mut grid = GadgetGrid {
        ell,
        n,
        main,
        horizontal,
        vertical,
        red,
        a,
        b: bb,
        c,
        d,
        orange_a: vec![],
        orange_b: vec![],
        orange_c: vec![],
        orange_d: vec![],
    };
    for i in 0..ell {
        let (first, last) = (&grid.vertical[i][0], &grid.vertical[i][ell]);
        let oa: Result<Vec<_>> = (0..n).map(|v| b.add_edge(grid.a[i], last.entry(v), orange())).collect();
        let ob: Result<Vec<_>> = (0..n).map(|v| b.add_edge(first.exit(v), grid.b[i], orange())).collect();
        grid.orange_a.push(oa?);
        grid.orange_b.push(ob?);
    }
    for j in 0..ell {
        let (first, last) = (&grid.horizontal[0][j], &grid.horizontal[ell][j]);
        let oc: Result<Vec<_>> = (0..n).map(|v| b.add_edge(grid.c[j], first.entry(v), orange())).collect();
        let od: Result<Vec<_>> = (0..n).map(|v| b.add_edge(last.exit(v), grid.d[j], orange())).collect();
        grid.orange_c.push(oc?);
        grid.orange_d.push(od?);
    }
    Ok(grid)
}

impl GadgetGrid {
    /// Edges chosen by `α` (V positions per row band) and `β` (W positions
    /// per column band), 1-based. `None` if some cell lacks `(α_i, β_j)`.
    pub fn planted_edges(&self, alpha: &[usize], beta: &[usize]) -> Option<BTreeSet<EdgeId>> {
        let ell = self.ell;
        if alpha.len() != ell || beta.len() != ell {
            return None;
        }
        if alpha.iter().chain(beta).any(|&v| v == 0 || v > self.n) {
            return None;
        }
        let mut net = BTreeSet::new();
        for i in 0..ell {
            net.insert(self.orange_a[i][alpha[i] - 1]);
            net.insert(self.orange_b[i][alpha[i] - 1]);
            for vs in &self.vertical[i] {
                net.extend(vs.represented(alpha[i] - 1));
            }
        }
        for j in 0..ell {
            net.insert(self.orange_c[j][beta[j] - 1]);
            net.insert(self.orange_d[j][beta[j] - 1]);
            for hs in self.horizontal.iter().map(|row| &row[j]) {
                net.extend(hs.represented(beta[j] - 1));
            }
        }
        for i in 0..ell {
            for j in 0..ell {
                let m = &self.main[i][j];
                let r = m.row_of(RowKey::Pair(alpha[i], beta[j]))?;
                net.extend(m.represented(r));
                net.extend(self.red[i][j][r].all());
            }
        }
        Some(net)
    }

    /// Reads `(α, β)` off a network in which every gadget settles on one row
    /// and every main gadget keeps exactly one red edge of each family,
    /// joined to the rows its neighbours settled on.
    pub fn read_solution(&self, net: &BTreeSet<EdgeId>) -> Result<(Vec<usize>, Vec<usize>)> {
        use crate::Error;
        let ell = self.ell;
        let mut settled = std::collections::BTreeMap::new();
        for (g, layout) in self.gadgets() {
            let r = layout
                .represented_row(net)
                .ok_or_else(|| Error::StructureViolation(format!("gadget {g} does not settle on a single row")))?;
            settled.insert(g, r);
        }
        let secondary = |g: GadgetRef| settled[&g] + 1;
        for i in 1..=ell {
            for j in 1..=ell {
                let m = GadgetRef::Main(i, j);
                let red = &self.red[i - 1][j - 1];
                let r = settled[&m];
                let families: [fn(&RedEdges) -> EdgeId; 4] =
                    [|e| e.from_vertical, |e| e.from_horizontal, |e| e.to_horizontal, |e| e.to_vertical];
                for (k, family) in families.iter().enumerate() {
                    let picked: Vec<usize> = (0..red.len()).filter(|&q| net.contains(&family(&red[q]))).collect();
                    if picked != [r] {
                        return Err(Error::StructureViolation(format!(
                            "gadget {m} keeps red edges {picked:?} of family {k}, expected row {r}"
                        )));
                    }
                }
                let RowKey::Pair(lambda, delta) = self.main[i - 1][j - 1].rows()[r] else {
                    unreachable!("main rows are pairs")
                };
                let xs = [secondary(GadgetRef::Vertical(i, j)), secondary(GadgetRef::Vertical(i, j + 1))];
                let ys = [secondary(GadgetRef::Horizontal(i, j)), secondary(GadgetRef::Horizontal(i + 1, j))];
                if xs != [lambda, lambda] || ys != [delta, delta] {
                    return Err(Error::StructureViolation(format!(
                        "gadget {m} settled on ({lambda},{delta}) but neighbours carry {xs:?} / {ys:?}"
                    )));
                }
            }
        }
        let alpha = (1..=ell).map(|i| secondary(GadgetRef::Vertical(i, 1))).collect();
        let beta = (1..=ell).map(|j| secondary(GadgetRef::Horizontal(1, j))).collect();
        Ok((alpha, beta))
    }
}
