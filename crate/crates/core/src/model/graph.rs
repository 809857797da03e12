//! Connectivity of the product basis under the qubit-mode coupling.
//!
//! Vertices are `(qubit configuration, photon number)`; an edge joins two
//! states related by one qubit flip together with one photon created or
//! destroyed, i.e. by a single term of `sigma_x^(i) (a + a^dag)`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::state::Qubit;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub qubits: Vec<Qubit>,
    pub photons: usize,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in &self.qubits {
            write!(f, "{}", q.label())?;
        }
        write!(f, "{}", self.photons)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CouplingKind {
    /// `sigma^+ a` or `sigma^- a^dag`: excitation number conserved.
    Rotating,
    /// `sigma^+ a^dag` or `sigma^- a`.
    CounterRotating,
}

impl CouplingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CouplingKind::Rotating => "rotating",
            CouplingKind::CounterRotating => "counter-rotating",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub kind: CouplingKind,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl ChainGraph {
    /// Component label per vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn index_of(&self, qubits: &[Qubit], photons: usize) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.qubits == qubits && v.photons == photons)
    }
}

fn configs(n_qubits: usize) -> Vec<Vec<Qubit>> {
    (0..1usize << n_qubits)
        .map(|bits| {
            (0..n_qubits)
                .map(|i| {
                    if bits >> (n_qubits - 1 - i) & 1 == 1 {
                        Qubit::Excited
                    } else {
                        Qubit::Ground
                    }
                })
                .collect()
        })
        .collect()
}

/// Coupling graph for `n_qubits` qubits and photon numbers `0..n_levels`.
pub fn build_coupling_graph(n_qubits: usize, n_levels: usize) -> Result<ChainGraph> {
    if n_qubits == 0 {
        return Err(Error::param("n_qubits", "need at least one qubit"));
    }
    if n_levels < 2 {
        return Err(Error::param("n_levels", format!("must be >= 2, got {n_levels}")));
    }
    let cfgs = configs(n_qubits);
    let vertices: Vec<Vertex> = (0..n_levels)
        .flat_map(|n| {
            cfgs.iter().map(move |c| Vertex {
                qubits: c.clone(),
                photons: n,
            })
        })
        .collect();
    let index = |c: &[Qubit], n: usize| n * cfgs.len() + cfgs.iter().position(|x| x == c).unwrap();
    let mut edges = Vec::new();
    for (a, v) in vertices.iter().enumerate() {
        if v.photons + 1 >= n_levels {
            continue;
        }
        // only photon-raising edges, so each pair appears once
        for i in 0..n_qubits {
            let mut flipped = v.qubits.clone();
            flipped[i] = flipped[i].flip();
            let b = index(&flipped, v.photons + 1);
            // qubit goes up while a photon is created: sigma^+ a^dag
            let kind = if v.qubits[i] == Qubit::Ground {
                CouplingKind::CounterRotating
            } else {
                CouplingKind::Rotating
            };
            edges.push(Edge { a, b, kind });
        }
    }
    Ok(ChainGraph { vertices, edges })
}

/// The two single-qubit parity chains.
pub fn build_one_qubit_graph(n_levels: usize) -> Result<ChainGraph> {
    build_coupling_graph(1, n_levels)
}

/// The two-qubit chains of tetrahedra.
pub fn build_two_qubit_graph(n_levels: usize) -> Result<ChainGraph> {
    build_coupling_graph(2, n_levels)
}
