//! Complex-graph algorithms: linkage classes, strong linkage classes,
//! terminal strong linkage classes, and the forest / single-cycle shape
//! test used by the subnetwork type classification.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::model::Network;

/// The directed graph on complexes with one edge per reaction.
pub struct ComplexGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl ComplexGraph {
    pub fn of_network(net: &Network) -> Self {
        ComplexGraph {
            n: net.num_complexes(),
            edges: net
                .reactions()
                .iter()
                .map(|r| (r.reactant, r.product))
                .collect(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Undirected connected components (linkage classes) plus strongly
    /// connected components and the terminal ones.
    pub fn component_labeling(&self) -> ComponentLabeling {
        let linkage = self.linkage_classes();
        let strong = self.strong_components();
        let num_strong = strong.iter().copied().max().map_or(0, |m| m + 1);
        // A strong class is terminal when no edge leaves it.
        let mut terminal: BTreeSet<usize> = (0..num_strong).collect();
        for &(u, v) in &self.edges {
            if strong[u] != strong[v] {
                terminal.remove(&strong[u]);
            }
        }
        ComponentLabeling {
            linkage,
            strong,
            terminal,
        }
    }

    /// Vertex -> linkage-class id, ids assigned in vertex order.
    pub fn linkage_classes(&self) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Vertex -> strongly-connected-component id (iterative Tarjan).
    pub fn strong_components(&self) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        let mut index = vec![usize::MAX; self.n];
        let mut lowlink = vec![0usize; self.n];
        let mut on_stack = vec![false; self.n];
        let mut comp = vec![usize::MAX; self.n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0;
        let mut next_comp = 0;

        for root in 0..self.n {
            if index[root] != usize::MAX {
                continue;
            }
            // Explicit DFS frame: (vertex, next child position).
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            lowlink[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(frame) = call.len().checked_sub(1) {
                let (v, child) = call[frame];
                if child < adj[v].len() {
                    call[frame].1 += 1;
                    let w = adj[v][child];
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        lowlink[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        lowlink[v] = lowlink[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        lowlink[parent] = lowlink[parent].min(lowlink[v]);
                    }
                    if lowlink[v] == index[v] {
                        while let Some(w) = stack.pop() {
                            on_stack[w] = false;
                            comp[w] = next_comp;
                            if w == v {
                                break;
                            }
                        }
                        next_comp += 1;
                    }
                }
            }
        }
        comp
    }
}

/// Result of the connectivity analysis of a complex graph.
pub struct ComponentLabeling {
    pub linkage: Vec<usize>,
    pub strong: Vec<usize>,
    pub terminal: BTreeSet<usize>,
}

impl ComponentLabeling {
    pub fn num_linkage_classes(&self) -> usize {
        self.linkage.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn num_strong_classes(&self) -> usize {
        self.strong.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn terminal(&self) -> &BTreeSet<usize> {
        &self.terminal
    }
}

/// Undirected shape of a subnetwork's complex graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubnetworkShape {
    Forest,
    SingleCycle,
    Other,
}

/// Classifies the undirected multigraph on the complexes touched by a
/// reaction set. Parallel edges are kept: two antiparallel reactions form a
/// 2-cycle, which is neither a forest nor a big cycle.
pub fn shape_of_subnetwork(reaction_indices: &[usize], net: &Network) -> SubnetworkShape {
    assert!(!reaction_indices.is_empty(), "empty reaction set");
    let mut vertices: Vec<usize> = Vec::new();
    let vid = |c: usize, vertices: &mut Vec<usize>| match vertices.iter().position(|&x| x == c) {
        Some(i) => i,
        None => {
            vertices.push(c);
            vertices.len() - 1
        }
    };
    let mut edges = Vec::new();
    for &ri in reaction_indices {
        let r = &net.reactions()[ri];
        let u = vid(r.reactant, &mut vertices);
        let v = vid(r.product, &mut vertices);
        edges.push((u, v));
    }
    let v = vertices.len();
    let e = edges.len();

    // Union-find cycle detection over the multigraph.
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut acyclic = true;
    for &(a, b) in &edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            acyclic = false;
        } else {
            parent[ra] = rb;
        }
    }
    if acyclic {
        return SubnetworkShape::Forest;
    }
    // Exactly one simple cycle covering everything: connected, every vertex
    // of degree 2, as many edges as vertices, at least three vertices.
    let roots: BTreeSet<usize> = (0..v).map(|x| find(&mut parent, x)).collect();
    let connected = roots.len() == 1;
    let mut degree = vec![0usize; v];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    if connected && v >= 3 && e == v && degree.iter().all(|&d| d == 2) {
        SubnetworkShape::SingleCycle
    } else {
        SubnetworkShape::Other
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Complex, NetworkBuilder};

    fn cycle3() -> Network {
        let mut b = NetworkBuilder::new(vec!["M1".into(), "M2".into(), "M3".into()]);
        b.add_reaction("R1", Complex::species(0), Complex::species(1));
        b.add_reaction("R2", Complex::species(1), Complex::species(2));
        b.add_reaction("R3", Complex::species(2), Complex::species(0));
        b.build().unwrap()
    }

    #[test]
    fn single_reaction_has_one_linkage_class() {
        let mut b = NetworkBuilder::new(vec!["A".into(), "B".into()]);
        b.add_reaction("R1", Complex::species(0), Complex::species(1));
        let net = b.build().unwrap();
        let g = ComplexGraph::of_network(&net);
        assert_eq!(g.component_labeling().num_linkage_classes(), 1);
        assert_eq!(g.component_labeling().num_strong_classes(), 2);
    }

    #[test]
    fn three_cycle_is_strongly_connected() {
        let g = ComplexGraph::of_network(&cycle3());
        let labeling = g.component_labeling();
        assert_eq!(labeling.num_linkage_classes(), 1);
        assert_eq!(labeling.num_strong_classes(), 1);
        assert_eq!(labeling.terminal().len(), 1);
    }

    #[test]
    fn two_cycle_is_one_strong_class() {
        let mut b = NetworkBuilder::new(vec!["A".into(), "B".into()]);
        b.add_reversible("R1", Complex::species(0), Complex::species(1));
        let net = b.build().unwrap();
        let g = ComplexGraph::of_network(&net);
        assert_eq!(g.component_labeling().num_strong_classes(), 1);
    }

    #[test]
    fn shape_of_three_cycle() {
        let net = cycle3();
        assert_eq!(shape_of_subnetwork(&[0, 1, 2], &net), SubnetworkShape::SingleCycle);
    }

    #[test]
    fn shape_of_chain_is_forest() {
        let net = cycle3();
        assert_eq!(shape_of_subnetwork(&[0, 1], &net), SubnetworkShape::Forest);
    }

    #[test]
    fn antiparallel_pair_is_other() {
        let mut b = NetworkBuilder::new(vec!["A".into(), "B".into()]);
        b.add_reversible("R1", Complex::species(0), Complex::species(1));
        let net = b.build().unwrap();
        assert_eq!(shape_of_subnetwork(&[0, 1], &net), SubnetworkShape::Other);
    }

    #[test]
    fn forest_edge_count_identity() {
        // A forest on v vertices with e edges has e = v - (number of trees).
        let net = cycle3();
        let shape = shape_of_subnetwork(&[0, 1], &net);
        assert_eq!(shape, SubnetworkShape::Forest);
        // 3 vertices, 2 edges, 1 tree.
        assert_eq!(2, 3 - 1);
    }

    #[test]
    fn terminal_class_of_sink() {
        // A -> B -> C with C a sink: only C's class is terminal.
        let mut b = NetworkBuilder::new(vec!["A".into(), "B".into(), "C".into()]);
        b.add_reaction("R1", Complex::species(0), Complex::species(1));
        b.add_reaction("R2", Complex::species(1), Complex::species(2));
        let net = b.build().unwrap();
        let labeling = ComplexGraph::of_network(&net).component_labeling();
        assert_eq!(labeling.terminal().len(), 1);
        let sink_class = labeling.strong[2];
        assert!(labeling.terminal().contains(&sink_class));
    }
}
