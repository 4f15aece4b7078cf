//! Symmetric graphs: rings, tori, complete graphs, honeycomb and triangular
//! tori, and the platonic solids, each carrying textbook generators of a
//! vertex- and edge-transitive symmetry group.

mod platonic;
mod text;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::group::{torus_shift, GroupError, Perm, PermGroup};
use crate::linalg::SymMatrix;

pub use platonic::PlatonicSolid;
pub use text::{parse_graph, parse_symmetric_graph, to_text};

/// Cap on the closure computed only to report the group order.
pub const REPORT_GROUP_CAP: usize = 50_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("invalid graph parameters: {0}")]
    InvalidParameter(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("generator {index} is not an automorphism: it maps edge ({k}, {l}) to a non-edge")]
    NotAutomorphism { index: usize, k: usize, l: usize },
    #[error("graph is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("group too large, supply orbit certificates instead ({0})")]
    GroupTooLarge(GroupError),
    #[error("graph text, line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The graph families of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Ring(usize),
    /// `n` sites per axis, `n^dim` sites in total.
    Torus {
        n: usize,
        dim: usize,
    },
    Complete(usize),
    /// `l × l` unit cells of two sites each.
    HoneycombTorus(usize),
    /// `l × l` sites with six neighbours each.
    TriangularTorus(usize),
    Platonic(PlatonicSolid),
}

impl GraphSpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidParameter(msg));
        match *self {
            GraphSpec::Ring(n) if n < 3 => bad(format!("ring needs N >= 3, got {n}")),
            GraphSpec::Torus { n, .. } if n < 3 => bad(format!("torus needs N >= 3, got {n}")),
            GraphSpec::Torus { dim, .. } if dim < 1 => bad("torus needs d >= 1".into()),
            GraphSpec::Complete(n) if n < 3 => bad(format!("complete graph needs N >= 3, got {n}")),
            GraphSpec::HoneycombTorus(l) if l < 3 => {
                bad(format!("honeycomb torus needs L >= 3, got {l}"))
            }
            GraphSpec::TriangularTorus(l) if l < 3 => {
                bad(format!("triangular torus needs L >= 3, got {l}"))
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            GraphSpec::Ring(n) | GraphSpec::Complete(n) => n,
            GraphSpec::Torus { n, dim } => n.pow(dim as u32),
            GraphSpec::HoneycombTorus(l) => 2 * l * l,
            GraphSpec::TriangularTorus(l) => l * l,
            GraphSpec::Platonic(p) => p.vertex_count(),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Ring(n) => write!(f, "ring({n})"),
            GraphSpec::Torus { n, dim } => write!(f, "torus({n},{dim})"),
            GraphSpec::Complete(n) => write!(f, "complete({n})"),
            GraphSpec::HoneycombTorus(l) => write!(f, "honeycomb({l})"),
            GraphSpec::TriangularTorus(l) => write!(f, "triangular({l})"),
            GraphSpec::Platonic(p) => write!(f, "platonic:{p}"),
        }
    }
}

/// A simple undirected graph with stored symmetry generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    label: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    degree: usize,
    regular: bool,
    generators: Vec<Perm>,
}

impl Graph {
    /// Normalizes edges to `k < l`, sorts them, and checks that every
    /// generator maps edges to edges.
    pub fn new(
        label: impl Into<String>,
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        generators: Vec<Perm>,
    ) -> Result<Self, GraphError> {
        let mut set = HashSet::new();
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            list.push(e);
        }
        list.sort_unstable();
        for (index, g) in generators.iter().enumerate() {
            if g.degree() != n {
                return Err(GroupError::DegreeMismatch {
                    expected: n,
                    got: g.degree(),
                }
                .into());
            }
            for &(k, l) in &list {
                let (gk, gl) = (g.apply(k), g.apply(l));
                if !set.contains(&(gk.min(gl), gk.max(gl))) {
                    return Err(GraphError::NotAutomorphism { index, k, l });
                }
            }
        }
        let mut deg = vec![0usize; n];
        for &(a, b) in &list {
            deg[a] += 1;
            deg[b] += 1;
        }
        let degree = deg.iter().copied().max().unwrap_or(0);
        let regular = deg.iter().all(|&d| d == degree);
        Ok(Graph {
            label: label.into(),
            n,
            edges: list,
            degree,
            regular,
            generators,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Uniform vertex degree (maximum degree if the graph is irregular).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// `A_kl = 1` iff `(k, l)` is an edge.
    pub fn adjacency(&self) -> SymMatrix {
        let set: HashSet<(usize, usize)> = self.edges.iter().copied().collect();
        SymMatrix::from_fn(self.n, |i, j| if set.contains(&(i, j)) { 1.0 } else { 0.0 })
            .expect("0/1 entries are finite")
    }

    /// Materializes the symmetry group generated by the stored generators.
    pub fn symmetry_group(&self, cap: usize) -> Result<PermGroup, GroupError> {
        PermGroup::generate(self.n, &self.generators, cap)
    }
}

/// Every catalog graph with at most `max_n` vertices: rings, 2D and 3D
/// tori, complete graphs, honeycomb and triangular tori, platonic solids.
pub fn catalog_up_to(max_n: usize) -> Vec<GraphSpec> {
    let mut out: Vec<GraphSpec> = (3..=max_n).map(GraphSpec::Ring).collect();
    for dim in 2..=3 {
        out.extend(
            (3..)
                .take_while(|n: &usize| n.pow(dim as u32) <= max_n)
                .map(|n| GraphSpec::Torus { n, dim }),
        );
    }
    out.extend((3..=max_n).map(GraphSpec::Complete));
    out.extend(
        (3..)
            .take_while(|l: &usize| 2 * l * l <= max_n)
            .map(GraphSpec::HoneycombTorus),
    );
    out.extend(
        (3..)
            .take_while(|l: &usize| l * l <= max_n)
            .map(GraphSpec::TriangularTorus),
    );
    out.extend(
        PlatonicSolid::ALL
            .into_iter()
            .filter(|p| p.vertex_count() <= max_n)
            .map(GraphSpec::Platonic),
    );
    out
}

pub fn build_graph(spec: &GraphSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let label = spec.to_string();
    match *spec {
        GraphSpec::Ring(n) => torus(label, n, 1),
        GraphSpec::Torus { n, dim } => torus(label, n, dim),
        GraphSpec::Complete(n) => {
            let edges = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b)));
            let gens = (0..n - 1)
                .map(|i| Perm::transposition(n, i, i + 1))
                .collect();
            Graph::new(label, n, edges, gens)
        }
        GraphSpec::HoneycombTorus(l) => honeycomb(label, l),
        GraphSpec::TriangularTorus(l) => triangular(label, l),
        GraphSpec::Platonic(p) => {
            let gens = p
                .rotation_generators()
                .iter()
                .map(|g| Perm::new(g.to_vec()))
                .collect::<Result<Vec<_>, _>>()?;
            Graph::new(label, p.vertex_count(), p.edges().iter().copied(), gens)
        }
    }
}

fn torus(label: String, n: usize, dim: usize) -> Result<Graph, GraphError> {
    let dims = vec![n; dim];
    let total = n.pow(dim as u32);
    let mut gens = Vec::new();
    let mut edges = Vec::new();
    for axis in 0..dim {
        let shift = torus_shift(&dims, axis);
        edges.extend((0..total).map(|i| (i, shift.apply(i))));
        gens.push(shift);
        gens.push(torus_reflection(n, dim, axis));
    }
    for axis in 0..dim.saturating_sub(1) {
        gens.push(torus_axis_swap(n, dim, axis));
    }
    Graph::new(label, total, edges, gens)
}

fn digits(i: usize, n: usize, dim: usize) -> Vec<usize> {
    let mut rest = i;
    (0..dim)
        .map(|_| {
            let x = rest % n;
            rest /= n;
            x
        })
        .collect()
}

fn undigits(x: &[usize], n: usize) -> usize {
    x.iter().rev().fold(0, |acc, &d| acc * n + d)
}

fn torus_reflection(n: usize, dim: usize, axis: usize) -> Perm {
    let total = n.pow(dim as u32);
    Perm::new(
        (0..total)
            .map(|i| {
                let mut x = digits(i, n, dim);
                x[axis] = (n - x[axis]) % n;
                undigits(&x, n)
            })
            .collect(),
    )
    .expect("reflection is a bijection")
}

fn torus_axis_swap(n: usize, dim: usize, axis: usize) -> Perm {
    let total = n.pow(dim as u32);
    Perm::new(
        (0..total)
            .map(|i| {
                let mut x = digits(i, n, dim);
                x.swap(axis, axis + 1);
                undigits(&x, n)
            })
            .collect(),
    )
    .expect("axis swap is a bijection")
}

/// Cells `(i, j)` mod `l`; A sites at `2(i + l j)`, B sites one higher.
/// The B neighbours of `A(i, j)` sit in cells `(i, j)`, `(i-1, j)`, `(i, j-1)`.
fn honeycomb(label: String, l: usize) -> Result<Graph, GraphError> {
    let m = |x: isize| x.rem_euclid(l as isize) as usize;
    let a = |i: isize, j: isize| 2 * (m(i) + l * m(j));
    let b = |i: isize, j: isize| 2 * (m(i) + l * m(j)) + 1;
    let n = 2 * l * l;
    let li = l as isize;
    let cells = || (0..li).flat_map(move |j| (0..li).map(move |i| (i, j)));

    let mut edges = Vec::new();
    for (i, j) in cells() {
        edges.push((a(i, j), b(i, j)));
        edges.push((a(i, j), b(i - 1, j)));
        edges.push((a(i, j), b(i, j - 1)));
    }
    let site_map = |fa: &dyn Fn(isize, isize) -> usize, fb: &dyn Fn(isize, isize) -> usize| {
        let mut img = vec![0; n];
        for (i, j) in cells() {
            img[a(i, j)] = fa(i, j);
            img[b(i, j)] = fb(i, j);
        }
        Perm::new(img)
    };
    let gens = vec![
        site_map(&|i, j| a(i + 1, j), &|i, j| b(i + 1, j))?,
        site_map(&|i, j| a(i, j + 1), &|i, j| b(i, j + 1))?,
        // 120° rotation about A(0,0): cell (i, j) -> (-i-j, i).
        site_map(&|i, j| a(-i - j, i), &|i, j| b(-i - j - 1, i))?,
        // Inversion through the centre of the bond A(0,0)-B(0,0).
        site_map(&|i, j| b(-i, -j), &|i, j| a(-i, -j))?,
    ];
    Graph::new(label, n, edges, gens)
}

/// Sites `(i, j)` mod `l` at index `i + l j`, neighbours `±(1,0), ±(0,1), ±(1,1)`.
fn triangular(label: String, l: usize) -> Result<Graph, GraphError> {
    let li = l as isize;
    let s = |i: isize, j: isize| (i.rem_euclid(li) + li * j.rem_euclid(li)) as usize;
    let n = l * l;
    let cells = || (0..li).flat_map(move |j| (0..li).map(move |i| (i, j)));
    let mut edges = Vec::new();
    for (i, j) in cells() {
        edges.push((s(i, j), s(i + 1, j)));
        edges.push((s(i, j), s(i, j + 1)));
        edges.push((s(i, j), s(i + 1, j + 1)));
    }
    let map = |f: &dyn Fn(isize, isize) -> usize| {
        let mut img = vec![0; n];
        for (i, j) in cells() {
            img[s(i, j)] = f(i, j);
        }
        Perm::new(img)
    };
    let gens = vec![
        map(&|i, j| s(i + 1, j))?,
        map(&|i, j| s(i, j + 1))?,
        // 60° rotation: (i, j) -> (i - j, i).
        map(&|i, j| s(i - j, i))?,
        map(&|i, j| s(j, i))?,
    ];
    Graph::new(label, n, edges, gens)
}

/// Outcome of a successful symmetry check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    /// The designated edge whose endpoints some group element exchanges.
    pub edge: (usize, usize),
    /// Order of the generated group, when it fits under the report cap.
    pub group_order: Option<usize>,
}

/// Verifies that the stored generators act transitively on vertices and on
/// edges, and that some group element reverses the designated edge.
///
/// Transitivity is decided from orbits of the generators on vertices, edges
/// and ordered vertex pairs, which is exact and never materializes the group.
pub fn check_symmetric_graph(g: &Graph) -> Result<SymmetryReport, GraphError> {
    if g.edges.is_empty() {
        return Err(GraphError::NotSymmetric("graph has no edges".into()));
    }
    if !g.regular {
        return Err(GraphError::NotSymmetric(
            "vertex orbits split: graph is not regular".into(),
        ));
    }
    let vertex_orbit = orbit(0usize, &g.generators, |p, v| p.apply(*v));
    if vertex_orbit.len() != g.n {
        return Err(GraphError::NotSymmetric(format!(
            "vertex orbits split: orbit of vertex 0 has {} of {} vertices",
            vertex_orbit.len(),
            g.n
        )));
    }
    let edge = g.edges[0];
    let edge_orbit = orbit(edge, &g.generators, |p, &(a, b)| {
        let (x, y) = (p.apply(a), p.apply(b));
        (x.min(y), x.max(y))
    });
    if edge_orbit.len() != g.edges.len() {
        return Err(GraphError::NotSymmetric(format!(
            "edge orbits split: orbit of edge {:?} has {} of {} edges",
            edge,
            edge_orbit.len(),
            g.edges.len()
        )));
    }
    let arcs = orbit(edge, &g.generators, |p, &(a, b)| (p.apply(a), p.apply(b)));
    if !arcs.contains(&(edge.1, edge.0)) {
        return Err(GraphError::NotSymmetric(format!(
            "no group element exchanges the endpoints of edge {edge:?}"
        )));
    }
    let group_order = g
        .symmetry_group(REPORT_GROUP_CAP)
        .ok()
        .map(|grp| grp.order());
    Ok(SymmetryReport { edge, group_order })
}

/// Same verdict as [`check_symmetric_graph`], computed from the explicit
/// element list of the generated group.
pub fn check_symmetric_graph_by_closure(
    g: &Graph,
    cap: usize,
) -> Result<SymmetryReport, GraphError> {
    if g.edges.is_empty() {
        return Err(GraphError::NotSymmetric("graph has no edges".into()));
    }
    let group = g.symmetry_group(cap).map_err(|e| match e {
        GroupError::CapExceeded { .. } => GraphError::GroupTooLarge(e),
        other => other.into(),
    })?;
    let vertices: HashSet<usize> = group.elements().iter().map(|p| p.apply(0)).collect();
    if vertices.len() != g.n {
        return Err(GraphError::NotSymmetric(format!(
            "vertex orbits split: orbit of vertex 0 has {} of {} vertices",
            vertices.len(),
            g.n
        )));
    }
    let edge = g.edges[0];
    let edges: HashSet<(usize, usize)> = group
        .elements()
        .iter()
        .map(|p| {
            let (x, y) = (p.apply(edge.0), p.apply(edge.1));
            (x.min(y), x.max(y))
        })
        .collect();
    if edges.len() != g.edges.len() {
        return Err(GraphError::NotSymmetric(format!(
            "edge orbits split: orbit of edge {:?} has {} of {} edges",
            edge,
            edges.len(),
            g.edges.len()
        )));
    }
    if group.swap_element(edge.0, edge.1).is_none() {
        return Err(GraphError::NotSymmetric(format!(
            "no group element exchanges the endpoints of edge {edge:?}"
        )));
    }
    Ok(SymmetryReport {
        edge,
        group_order: Some(group.order()),
    })
}

fn orbit<T, F>(start: T, gens: &[Perm], act: F) -> HashSet<T>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&Perm, &T) -> T,
{
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = act(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}
