use super::instance::McsiInstance;
use super::splitter::SplitterFamily;
use super::ugraph::UGraph;
use crate::error::{Error, Result};

fn color_classes(graph: &UGraph, ell: usize, lambda: &[usize]) -> Vec<Vec<usize>> {
    let mut groups = vec![Vec::new(); ell];
    for v in 0..graph.vertex_count() {
        groups[lambda[v]].push(v);
    }
    groups
}

fn check_family(graph: &UGraph, ell: usize, family: &SplitterFamily) -> Result<()> {
    if family.n != graph.vertex_count() || family.q != ell {
        return Err(Error::BadShape(format!(
            "splitter is ({}, {}) but the graph has {} vertices and ell = {ell}",
            family.n,
            family.q,
            graph.vertex_count()
        )));
    }
    Ok(())
}

/// One instance per map `λ`, with color classes `λ⁻¹(i)` and supergraph
/// `K_ℓ`. Groups are padded to equal size.
pub fn clique_to_mcsi_clique(
    graph: &UGraph,
    ell: usize,
    family: &SplitterFamily,
) -> Result<Vec<McsiInstance>> {
    check_family(graph, ell, family)?;
    family
        .functions
        .iter()
        .map(|lambda| {
            McsiInstance::new(graph.clone(), color_classes(graph, ell, lambda), UGraph::complete(ell))?
                .padded()
        })
        .collect()
}

/// As [`clique_to_mcsi_clique`] with supergraph `K_{ℓ/2,ℓ/2}`: classes
/// `0..ℓ/2` form the V-side and `ℓ/2..ℓ` the W-side.
pub fn clique_to_mcsi_biclique(
    graph: &UGraph,
    ell: usize,
    family: &SplitterFamily,
) -> Result<Vec<McsiInstance>> {
    if ell == 0 || ell % 2 == 1 {
        return Err(Error::BadShape(format!("biclique form needs even ell, got {ell}")));
    }
    check_family(graph, ell, family)?;
    family
        .functions
        .iter()
        .map(|lambda| {
            let mut groups = color_classes(graph, ell, lambda);
            let w = groups.split_off(ell / 2);
            McsiInstance::biclique(graph.clone(), groups, w)?.padded()
        })
        .collect()
}
