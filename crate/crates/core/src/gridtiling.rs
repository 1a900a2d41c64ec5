//! Grid tiling: pick `(α_i, β_j) ∈ S_{i,j}` for every cell of an `ℓ × ℓ`
//! grid, so each row agrees on its first coordinate and each column on its
//! second. Values are 1-based.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::mcsi::UGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTilingInstance {
    pub ell: usize,
    pub n: usize,
    /// `cells[i][j]` is `S_{i+1,j+1}`.
    pub cells: Vec<Vec<BTreeSet<(usize, usize)>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GtSolution {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl GridTilingInstance {
    pub fn new(ell: usize, n: usize, cells: Vec<Vec<BTreeSet<(usize, usize)>>>) -> Result<Self> {
        if cells.len() != ell || cells.iter().any(|row| row.len() != ell) {
            return Err(Error::BadShape(format!("expected a {ell}x{ell} grid of cells")));
        }
        for (i, row) in cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(Error::EmptyCell(i + 1, j + 1));
                }
                if let Some(&(x, y)) = cell.iter().find(|&&(x, y)| !(1..=n).contains(&x) || !(1..=n).contains(&y)) {
                    return Err(Error::BadShape(format!(
                        "cell ({}, {}) holds ({x}, {y}) outside [{n}]",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(GridTilingInstance { ell, n, cells })
    }

    pub fn cell(&self, i: usize, j: usize) -> &BTreeSet<(usize, usize)> {
        &self.cells[i][j]
    }
}

pub fn gt_verify(inst: &GridTilingInstance, sol: &GtSolution) -> bool {
    sol.alpha.len() == inst.ell
        && sol.beta.len() == inst.ell
        && (0..inst.ell).all(|i| (0..inst.ell).all(|j| inst.cells[i][j].contains(&(sol.alpha[i], sol.beta[j]))))
}

/// Column values still compatible with rows `0..rows` of `alpha`.
fn column_options<'a>(
    inst: &'a GridTilingInstance,
    alpha: &[usize],
    j: usize,
) -> impl Iterator<Item = usize> + 'a {
    let alpha = alpha.to_vec();
    (1..=inst.n).filter(move |&y| alpha.iter().enumerate().all(|(i, &x)| inst.cells[i][j].contains(&(x, y))))
}

/// Lexicographically first solution in `(α, β)`, or `None`.
pub fn gt_solve_bruteforce(inst: &GridTilingInstance) -> Option<GtSolution> {
    fn extend(inst: &GridTilingInstance, alpha: &mut Vec<usize>) -> Option<GtSolution> {
        if alpha.len() == inst.ell {
            let beta: Option<Vec<usize>> =
                (0..inst.ell).map(|j| column_options(inst, alpha, j).next()).collect();
            return beta.map(|beta| GtSolution { alpha: alpha.clone(), beta });
        }
        for x in 1..=inst.n {
            alpha.push(x);
            let alive = (0..inst.ell).all(|j| column_options(inst, alpha, j).next().is_some());
            if alive {
                if let Some(sol) = extend(inst, alpha) {
                    return Some(sol);
                }
            }
            alpha.pop();
        }
        None
    }
    extend(inst, &mut Vec::with_capacity(inst.ell))
}

/// Standard reduction from `ℓ`-clique: diagonal cells `{(v, v)}`, off-diagonal
/// cells all ordered adjacent pairs. Vertex `v` of the graph becomes value
/// `v + 1`.
pub fn clique_to_gridtiling(graph: &UGraph, ell: usize) -> Result<GridTilingInstance> {
    let n = graph.vertex_count();
    if ell == 0 {
        return Err(Error::BadShape("ell must be positive".into()));
    }
    let diagonal: BTreeSet<(usize, usize)> = (1..=n).map(|v| (v, v)).collect();
    let adjacent: BTreeSet<(usize, usize)> =
        graph.edges().flat_map(|(u, v)| [(u + 1, v + 1), (v + 1, u + 1)]).collect();
    let cells = (0..ell)
        .map(|i| (0..ell).map(|j| if i == j { diagonal.clone() } else { adjacent.clone() }).collect())
        .collect();
    GridTilingInstance::new(ell, n, cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(ell: usize, n: usize) -> GridTilingInstance {
        let all: BTreeSet<_> = (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))).collect();
        GridTilingInstance::new(ell, n, vec![vec![all; ell]; ell]).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let one = GridTilingInstance::new(1, 3, vec![vec![BTreeSet::from([(2, 3)])]]).unwrap();
        let sol = GtSolution { alpha: vec![2], beta: vec![3] };
        assert!(gt_verify(&one, &sol));
        assert_eq!(gt_solve_bruteforce(&one), Some(sol));
        let sol = gt_solve_bruteforce(&full(3, 4)).unwrap();
        assert_eq!(sol, GtSolution { alpha: vec![1; 3], beta: vec![1; 3] });
    }

    #[test]
    fn removing_the_chosen_pair_breaks_it() {
        let mut inst = full(2, 2);
        let sol = GtSolution { alpha: vec![1, 2], beta: vec![2, 1] };
        assert!(gt_verify(&inst, &sol));
        inst.cells[1][0].remove(&(2, 2));
        assert!(!gt_verify(&inst, &sol));
    }

    #[test]
    fn clique_reduction() {
        let tri = UGraph::complete(3);
        let inst = clique_to_gridtiling(&tri, 3).unwrap();
        assert_eq!(inst.cell(1, 1), &BTreeSet::from([(1, 1), (2, 2), (3, 3)]));
        assert!(gt_solve_bruteforce(&inst).is_some());
        let path = UGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(gt_solve_bruteforce(&clique_to_gridtiling(&path, 3).unwrap()).is_none());
        assert!(matches!(clique_to_gridtiling(&UGraph::new(3), 2), Err(Error::EmptyCell(1, 2))));
    }
}
