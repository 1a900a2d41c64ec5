use std::collections::BTreeSet;

use itertools::Itertools;

use super::ugraph::UGraph;
use crate::error::{Error, Result};
use crate::Rational;

/// Default limit on the number of assignments enumerated by
/// [`max_value_bruteforce`].
pub const DEFAULT_ASSIGNMENT_CAP: u128 = 1_000_000;

/// One chosen vertex per supernode.
pub type Assignment = Vec<usize>;

/// A colored graph together with the supergraph whose edges should be
/// covered.
///
/// `groups[i]` is the color class of supernode `i`. In biclique form the
/// first `h` groups are the V-side and the next `h` the W-side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McsiInstance {
    pub graph: UGraph,
    pub groups: Vec<Vec<usize>>,
    pub supergraph: UGraph,
    pub biclique_sides: Option<usize>,
}

impl McsiInstance {
    pub fn new(graph: UGraph, groups: Vec<Vec<usize>>, supergraph: UGraph) -> Result<Self> {
        let inst = McsiInstance { graph, groups, supergraph, biclique_sides: None };
        inst.validate()?;
        Ok(inst)
    }

    /// Biclique form: supergraph `K_{h,h}` over `v_groups` then `w_groups`.
    pub fn biclique(graph: UGraph, v_groups: Vec<Vec<usize>>, w_groups: Vec<Vec<usize>>) -> Result<Self> {
        let h = v_groups.len();
        if w_groups.len() != h {
            return Err(Error::BadShape(format!("{h} V-groups but {} W-groups", w_groups.len())));
        }
        let groups = v_groups.into_iter().chain(w_groups).collect();
        let inst = McsiInstance {
            graph,
            groups,
            supergraph: UGraph::complete_bipartite(h, h),
            biclique_sides: Some(h),
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.vertex_count();
        let mut seen = BTreeSet::new();
        for (i, g) in self.groups.iter().enumerate() {
            for &v in g {
                if v >= n {
                    return Err(Error::BadShape(format!("group {i} names vertex {v} of {n}")));
                }
                if !seen.insert(v) {
                    return Err(Error::BadShape(format!("vertex {v} lies in two groups")));
                }
            }
        }
        if self.supergraph.vertex_count() != self.groups.len() {
            return Err(Error::BadShape(format!(
                "supergraph has {} supernodes for {} groups",
                self.supergraph.vertex_count(),
                self.groups.len()
            )));
        }
        if self.groups.len() > 1 {
            if let Some(i) = (0..self.groups.len()).find(|&i| self.supergraph.degree(i) == 0) {
                return Err(Error::BadShape(format!("supernode {i} is isolated")));
            }
        }
        if let Some(h) = self.biclique_sides {
            if 2 * h != self.groups.len() || self.supergraph != UGraph::complete_bipartite(h, h) {
                return Err(Error::BadShape("biclique form needs K_{h,h} over 2h groups".into()));
            }
        }
        Ok(())
    }

    pub fn ell(&self) -> usize {
        self.groups.len()
    }

    /// Size of the largest group.
    pub fn group_size(&self) -> usize {
        self.groups.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_padded(&self) -> bool {
        let n = self.group_size();
        self.groups.iter().all(|g| g.len() == n)
    }

    /// Pads every group to the common size with fresh isolated vertices
    /// labelled `pad/k`.
    pub fn padded(&self) -> Result<Self> {
        let target = self.group_size().max(1);
        let mut out = self.clone();
        let mut k = 0;
        for g in &mut out.groups {
            while g.len() < target {
                let label = loop {
                    let l = format!("pad/{k}");
                    k += 1;
                    if !out.graph.labels().contains(&l) {
                        break l;
                    }
                };
                g.push(out.graph.add_vertex(label)?);
            }
        }
        Ok(out)
    }

    /// `(V_1..V_h, W_1..W_h)` for biclique-form instances.
    pub fn biclique_groups(&self) -> Option<(&[Vec<usize>], &[Vec<usize>])> {
        self.biclique_sides.map(|h| self.groups.split_at(h))
    }

    fn check_assignment(&self, phi: &[usize]) -> Result<()> {
        if phi.len() != self.groups.len() {
            return Err(Error::BadAssignment(format!(
                "{} images for {} supernodes",
                phi.len(),
                self.groups.len()
            )));
        }
        for (i, &v) in phi.iter().enumerate() {
            if !self.groups[i].contains(&v) {
                return Err(Error::BadAssignment(format!("vertex {v} is not in group {i}")));
            }
        }
        Ok(())
    }

    /// Number of superedges `ij` whose images are adjacent.
    pub fn covered(&self, phi: &[usize]) -> Result<usize> {
        self.check_assignment(phi)?;
        Ok(self.supergraph.edges().filter(|&(i, j)| self.graph.has_edge(phi[i], phi[j])).count())
    }
}

/// Fraction of superedges covered by `phi`. A supergraph without edges is
/// vacuously fully covered.
pub fn assignment_value(inst: &McsiInstance, phi: &[usize]) -> Result<Rational> {
    let covered = inst.covered(phi)?;
    let total = inst.supergraph.edge_count();
    if total == 0 {
        return Ok(Rational::from_integer(1));
    }
    Ok(Rational::new(covered as i64, total as i64))
}

/// Exact optimum by enumeration; the first maximiser in lexicographic order
/// of group positions is returned.
pub fn max_value_bruteforce(inst: &McsiInstance, cap: u128) -> Result<(Rational, Assignment)> {
    let count = inst.groups.iter().try_fold(1u128, |acc, g| acc.checked_mul(g.len() as u128));
    match count {
        Some(0) => return Err(Error::BadShape("empty group".into())),
        Some(c) if c <= cap => {}
        _ => return Err(Error::Refused(format!("more than {cap} assignments"))),
    }
    let mut best: Option<(usize, Assignment)> = None;
    let total = inst.supergraph.edge_count();
    for phi in inst.groups.iter().map(|g| g.iter().copied()).multi_cartesian_product() {
        let c = inst.covered(&phi)?;
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            let full = c == total;
            best = Some((c, phi));
            if full {
                break;
            }
        }
    }
    // multi_cartesian_product yields nothing for zero factors.
    let (_, phi) = best.unwrap_or_default();
    Ok((assignment_value(inst, &phi)?, phi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_groups_have_one_value() {
        let g = UGraph::from_edges(3, [(0, 1)]).unwrap();
        let inst = McsiInstance::new(g, vec![vec![0], vec![1], vec![2]], UGraph::complete(3)).unwrap();
        let (val, phi) = max_value_bruteforce(&inst, DEFAULT_ASSIGNMENT_CAP).unwrap();
        assert_eq!(phi, vec![0, 1, 2]);
        assert_eq!(val, Rational::new(1, 3));
    }

    #[test]
    fn path_images_cover_two_thirds() {
        let g = UGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let inst = McsiInstance::new(g, vec![vec![0], vec![1], vec![2]], UGraph::complete(3)).unwrap();
        assert_eq!(assignment_value(&inst, &[0, 1, 2]).unwrap(), Rational::new(2, 3));
        assert!(matches!(assignment_value(&inst, &[1, 1, 2]), Err(Error::BadAssignment(_))));
    }

    #[test]
    fn no_edges_between_groups_gives_zero() {
        let inst =
            McsiInstance::new(UGraph::new(4), vec![vec![0, 1], vec![2, 3]], UGraph::complete(2)).unwrap();
        let (val, phi) = max_value_bruteforce(&inst, DEFAULT_ASSIGNMENT_CAP).unwrap();
        assert_eq!(val, Rational::from_integer(0));
        assert_eq!(phi, vec![0, 2]);
    }

    #[test]
    fn padding_uses_reserved_labels() {
        let inst =
            McsiInstance::new(UGraph::new(3), vec![vec![0, 1], vec![2]], UGraph::complete(2)).unwrap();
        let p = inst.padded().unwrap();
        assert!(p.is_padded());
        assert_eq!(p.graph.label(p.groups[1][1]), "pad/0");
    }

    #[test]
    fn cap_refuses() {
        let inst =
            McsiInstance::new(UGraph::new(4), vec![vec![0, 1], vec![2, 3]], UGraph::complete(2)).unwrap();
        assert!(matches!(max_value_bruteforce(&inst, 3), Err(Error::Refused(_))));
    }
}
