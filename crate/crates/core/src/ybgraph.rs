//! The Yang–Baxter graph `G_λ`: vertices `(τ, ζ, v, σ)`, the action of the
//! generators `s_i` and `Ψ`, canonical paths from the root and the finite
//! components `H_T` of the graph without affine edges.
//!
//! The graph is infinite and never materialized. Paths are produced lazily
//! from weights and components are closed by breadth-first search.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffield::AlphaFraction;
use crate::combinatorics::{
    affine_psi, affine_psi_inverse, compose, filling, rank_permutation, sort_decreasing, standardize,
    tau_lambda, theta, CombinatoricsError, Filling, Partition, Permutation, Rst, Weight,
};

/// Errors raised by graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// `s_i` applied against the direction of the graph.
    #[error("no edge: s_{0} does not leave this vertex")]
    NoEdge(usize),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// Generators acting on vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    S(usize),
    Psi,
}

/// Edge classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    Step(usize),
    Jump(usize),
    Fall(usize),
    Affine,
}

impl EdgeLabel {
    /// The generator carried by the edge.
    pub fn generator(&self) -> Generator {
        match *self {
            EdgeLabel::Step(i) | EdgeLabel::Jump(i) | EdgeLabel::Fall(i) => Generator::S(i),
            EdgeLabel::Affine => Generator::Psi,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Step(i) => write!(f, "step s_{i}"),
            EdgeLabel::Jump(i) => write!(f, "jump s_{i}"),
            EdgeLabel::Fall(i) => write!(f, "fall s_{i}"),
            EdgeLabel::Affine => write!(f, "Psi"),
        }
    }
}

/// A sequence of edge labels starting at a root.
pub type Path = Vec<EdgeLabel>;

/// A vertex `(τ, ζ, v, σ)` of `G_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub tableau: Rst,
    pub spectral: Vec<AlphaFraction>,
    pub weight: Weight,
    pub rank: Permutation,
}

/// Spectral vector `ζ[i] = v[i]·α + CT_τ[σ_v[i]]`.
pub fn spectral_vector(tableau: &Rst, weight: &[u32]) -> Vec<AlphaFraction> {
    let ct = tableau.content_vector();
    let sigma = rank_permutation(weight);
    weight
        .iter()
        .zip(&sigma)
        .map(|(&w, &s)| AlphaFraction::linear(w as i64, ct[s - 1]))
        .collect()
}

impl Vertex {
    /// The unique vertex with the given tableau and weight.
    pub fn new(tableau: Rst, weight: Weight) -> Result<Self, GraphError> {
        if weight.len() != tableau.size() {
            return Err(CombinatoricsError::LengthMismatch {
                expected: tableau.size(),
                got: weight.len(),
            }
            .into());
        }
        let spectral = spectral_vector(&tableau, &weight);
        let rank = rank_permutation(&weight);
        Ok(Vertex {
            tableau,
            spectral,
            weight,
            rank,
        })
    }

    pub fn size(&self) -> usize {
        self.weight.len()
    }

    /// `(τ, v)` key identifying the vertex.
    pub fn key(&self) -> (Rst, Weight) {
        (self.tableau.clone(), self.weight.clone())
    }

    /// The filling `T(τ, v)`.
    pub fn filling(&self) -> Filling {
        filling(&self.tableau, &self.weight).expect("vertex dimensions are consistent")
    }
}

/// The root `(τ_λ, CT_{τ_λ}, 0^N, Id)`.
pub fn root_vertex(shape: &Partition) -> Vertex {
    root_of_tableau(&tau_lambda(shape))
}

/// The root `(τ, CT_τ, 0^N, Id)` of the subgraph `G_τ`.
pub fn root_of_tableau(tableau: &Rst) -> Vertex {
    Vertex::new(tableau.clone(), vec![0; tableau.size()]).expect("weight length matches")
}

/// True iff the rank permutation and the spectral vector match the
/// tableau and the weight.
pub fn verify_vertex(x: &Vertex) -> bool {
    x.weight.len() == x.tableau.size()
        && x.rank == rank_permutation(&x.weight)
        && x.spectral == spectral_vector(&x.tableau, &x.weight)
}

/// Applies a generator. Falls return `(None, Fall(i))`; reverse steps and
/// reverse jumps are not edges and return [`GraphError::NoEdge`].
pub fn apply_generator(x: &Vertex, g: Generator) -> Result<(Option<Vertex>, EdgeLabel), GraphError> {
    let n = x.size();
    match g {
        Generator::Psi => {
            let mut spectral = x.spectral[1..].to_vec();
            spectral.push(&x.spectral[0] + &AlphaFraction::alpha());
            let y = Vertex {
                tableau: x.tableau.clone(),
                spectral,
                weight: affine_psi(&x.weight),
                rank: compose(&x.rank, &theta(n)),
            };
            Ok((Some(y), EdgeLabel::Affine))
        }
        Generator::S(i) => {
            if i == 0 || i >= n {
                return Err(GraphError::BadIndex(i));
            }
            let (a, b) = (i - 1, i);
            match x.weight[a].cmp(&x.weight[b]) {
                std::cmp::Ordering::Less => {
                    let mut y = x.clone();
                    y.spectral.swap(a, b);
                    y.weight.swap(a, b);
                    y.rank.swap(a, b);
                    Ok((Some(y), EdgeLabel::Step(i)))
                }
                std::cmp::Ordering::Greater => Err(GraphError::NoEdge(i)),
                std::cmp::Ordering::Equal => {
                    let k = x.rank[a];
                    let ct = x.tableau.content_vector();
                    let d = ct[k - 1] - ct[k];
                    if d.abs() == 1 {
                        Ok((None, EdgeLabel::Fall(i)))
                    } else if d >= 2 {
                        let tableau = x
                            .tableau
                            .swap_entries(k, k + 1)
                            .expect("entries with content gap at least 2 are not adjacent");
                        let mut y = x.clone();
                        y.tableau = tableau;
                        y.spectral.swap(a, b);
                        Ok((Some(y), EdgeLabel::Jump(i)))
                    } else {
                        Err(GraphError::NoEdge(i))
                    }
                }
            }
        }
    }
}

/// Follows a path of generators from `start`, returning every vertex visited.
/// Fails with `NoEdge` on a reverse move and returns `Ok(None)` on a fall.
pub fn follow(start: &Vertex, gens: &[Generator]) -> Result<Option<Vec<Vertex>>, GraphError> {
    let mut out = vec![start.clone()];
    for &g in gens {
        let cur = out.last().expect("non-empty");
        match apply_generator(cur, g)? {
            (Some(y), _) => out.push(y),
            (None, _) => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Moves that lead backwards from `v` towards `0^N`: the descents
/// `v[i] > v[i+1]` (undone by `s_i`) and `Ψ` when `v[N] > 0`.
pub fn backward_moves(v: &[u32]) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..v.len())
        .filter(|&i| v[i - 1] > v[i])
        .map(Generator::S)
        .collect();
    if v.last().is_some_and(|&x| x > 0) {
        out.push(Generator::Psi);
    }
    out
}

/// Undoes a backward move on a weight.
fn undo_move(v: &[u32], g: Generator) -> Weight {
    match g {
        Generator::S(i) => {
            let mut w = v.to_vec();
            w.swap(i - 1, i);
            w
        }
        Generator::Psi => affine_psi_inverse(v).expect("Psi move requires v[N] > 0"),
    }
}

/// Builds a weight path from `0^N` to `v` by repeatedly choosing one of the
/// available backward moves. `pick` receives the candidates and returns an
/// index into them.
pub fn path_by_choice(v: &[u32], mut pick: impl FnMut(&[Generator]) -> usize) -> Vec<Generator> {
    let mut rev = Vec::new();
    let mut cur = v.to_vec();
    loop {
        let moves = backward_moves(&cur);
        if moves.is_empty() {
            break;
        }
        let g = moves[pick(&moves) % moves.len()];
        cur = undo_move(&cur, g);
        rev.push(g);
    }
    rev.reverse();
    rev
}

/// The canonical path to `v`: undo the leftmost descent when there is one,
/// otherwise undo `Ψ`. Labels are `Step(i)` and `Affine`.
pub fn canonical_path(v: &[u32]) -> Path {
    canonical_generators(v)
        .into_iter()
        .map(|g| match g {
            Generator::S(i) => EdgeLabel::Step(i),
            Generator::Psi => EdgeLabel::Affine,
        })
        .collect()
}

/// Generators of [`canonical_path`].
pub fn canonical_generators(v: &[u32]) -> Vec<Generator> {
    path_by_choice(v, |_| 0)
}

/// Predecessor of `v` on its canonical path, with the generator leading
/// from the predecessor to `v`.
pub fn canonical_parent(v: &[u32]) -> Option<(Weight, Generator)> {
    let g = *backward_moves(v).first()?;
    Some((undo_move(v, g), g))
}

/// A connected component `H_T` of the graph without affine edges and falls.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentHT {
    pub filling: Filling,
    pub vertices: Vec<Vertex>,
    /// Directed edges `(from, to, label)` indexing into `vertices`.
    pub edges: Vec<(usize, usize, EdgeLabel)>,
    pub root: usize,
    pub sink: usize,
}

impl ComponentHT {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Index of the vertex with the given tableau and weight.
    pub fn find(&self, tableau: &Rst, weight: &[u32]) -> Option<usize> {
        self.vertices
            .iter()
            .position(|x| &x.tableau == tableau && x.weight == weight)
    }

    /// Distance of every vertex from the root along directed edges.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![usize::MAX; self.len()];
        depth[self.root] = 0;
        let mut queue = VecDeque::from([self.root]);
        while let Some(a) = queue.pop_front() {
            for &(f, t, _) in &self.edges {
                if f == a && depth[t] == usize::MAX {
                    depth[t] = depth[a] + 1;
                    queue.push_back(t);
                }
            }
        }
        depth
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph H {\n");
        for (k, x) in self.vertices.iter().enumerate() {
            let w: Vec<String> = x.weight.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("  v{k} [label=\"{} | {}\"];\n", x.tableau, w.join("")));
        }
        for &(f, t, l) in &self.edges {
            out.push_str(&format!("  v{f} -> v{t} [label=\"{l}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Closes `T` under steps and jumps in both directions.
pub fn component(t: &Filling) -> Result<ComponentHT, GraphError> {
    if !t.is_semistandard_shape() {
        return Err(CombinatoricsError::InvalidFilling(format!(
            "{t} is not weakly increasing along rows and columns"
        ))
        .into());
    }
    let sink_tab = standardize(t);
    let mu = t.sorted_values();
    if filling(&sink_tab, &mu)? != *t {
        return Err(CombinatoricsError::InvalidFilling(format!("{t} is not of the form T(tau, v)")).into());
    }
    let n = mu.len();
    let start = Vertex::new(sink_tab, mu)?;
    let mut index: HashMap<(Rst, Weight), usize> = HashMap::new();
    let mut vertices = vec![start.clone()];
    index.insert(start.key(), 0);
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut intern = |y: Vertex, vertices: &mut Vec<Vertex>, queue: &mut VecDeque<usize>| -> usize {
        if let Some(&k) = index.get(&(y.tableau.clone(), y.weight.clone())) {
            return k;
        }
        let k = vertices.len();
        index.insert(y.key(), k);
        vertices.push(y);
        queue.push_back(k);
        k
    };
    while let Some(a) = queue.pop_front() {
        for i in 1..n {
            let x = vertices[a].clone();
            // Outgoing edge.
            if let Ok((Some(y), label)) = apply_generator(&x, Generator::S(i)) {
                let b = intern(y, &mut vertices, &mut queue);
                edges.push((a, b, label));
            }
            // Incoming edge: the vertex whose s_i-image is x.
            let pred = if x.weight[i - 1] > x.weight[i] {
                let mut w = x.weight.clone();
                w.swap(i - 1, i);
                Some(Vertex::new(x.tableau.clone(), w)?)
            } else if x.weight[i - 1] == x.weight[i] {
                let k = x.rank[i - 1];
                let ct = x.tableau.content_vector();
                if ct[k - 1] - ct[k] <= -2 {
                    let tab = x.tableau.swap_entries(k, k + 1).expect("non-adjacent entries");
                    Some(Vertex::new(tab, x.weight.clone())?)
                } else {
                    None
                }
            } else {
                None
            };
            if let Some(p) = pred {
                let b = intern(p, &mut vertices, &mut queue);
                if !edges.iter().any(|&(f, to, _)| f == b && to == a) {
                    let (_, label) = apply_generator(&vertices[b], Generator::S(i))?;
                    edges.push((b, a, label));
                }
            }
        }
    }
    edges.sort_by_key(|&(f, t, l)| (f, t, format!("{l}")));
    edges.dedup();
    let mut has_in = vec![false; vertices.len()];
    let mut has_out = vec![false; vertices.len()];
    for &(f, to, _) in &edges {
        has_out[f] = true;
        has_in[to] = true;
    }
    let roots: Vec<usize> = (0..vertices.len()).filter(|&k| !has_in[k]).collect();
    let sinks: Vec<usize> = (0..vertices.len()).filter(|&k| !has_out[k]).collect();
    debug_assert_eq!(roots.len(), 1, "component must have a unique root");
    debug_assert_eq!(sinks, vec![0], "component sink must be the standardized vertex");
    Ok(ComponentHT {
        filling: t.clone(),
        vertices,
        edges,
        root: roots[0],
        sink: 0,
    })
}

/// The filling of the component containing `(τ, v)`.
pub fn component_of(tableau: &Rst, weight: &[u32]) -> Result<ComponentHT, GraphError> {
    component(&filling(tableau, weight)?)
}

/// Every distinct filling `T(τ, μ)` for a shape and a partition `μ` (padded
/// with zeros to length N).
pub fn fillings_for(shape: &Partition, mu: &[u32]) -> Vec<Filling> {
    let mu = sort_decreasing(mu);
    let mut out: Vec<Filling> = crate::combinatorics::enumerate_rst(shape)
        .iter()
        .map(|t| filling(t, &mu).expect("length matches"))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_rst, parse_filling, partitions_of, step_count};
    use proptest::prelude::*;

    fn tab(rows: &[&[usize]]) -> Rst {
        Rst::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn lin(a: i64, b: i64) -> AlphaFraction {
        AlphaFraction::linear(a, b)
    }

    #[test]
    fn root_vertices() {
        let r = root_vertex(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(r.tableau, tab(&[&[3, 1], &[2]]));
        assert_eq!(r.spectral, vec![lin(0, 1), lin(0, -1), lin(0, 0)]);
        assert_eq!(r.weight, vec![0, 0, 0]);
        assert_eq!(r.rank, vec![1, 2, 3]);
        let row = root_vertex(&Partition::new(vec![4]).unwrap());
        assert_eq!(row.spectral, vec![lin(0, 3), lin(0, 2), lin(0, 1), lin(0, 0)]);
        let one = root_vertex(&Partition::new(vec![1]).unwrap());
        assert_eq!(one.spectral, vec![lin(0, 0)]);
        assert!(verify_vertex(&r));
    }

    #[test]
    fn spectral_vector_example() {
        let t = tab(&[&[8, 6, 5, 2], &[7, 4, 1], &[3]]);
        let x = Vertex::new(t, vec![6, 2, 4, 2, 2, 3, 1, 4]).unwrap();
        let want = vec![
            lin(6, 1),
            lin(2, 2),
            lin(4, 3),
            lin(2, 1),
            lin(2, -1),
            lin(3, 0),
            lin(1, 0),
            lin(4, -2),
        ];
        assert_eq!(x.spectral, want);
        assert!(verify_vertex(&x));
        let mut bad = x.clone();
        bad.spectral[0] = lin(6, 2);
        assert!(!verify_vertex(&bad));
    }

    #[test]
    fn generator_examples() {
        let t = tab(&[&[5, 4, 2], &[3, 1]]);
        let x = Vertex::new(t, vec![0, 0, 2, 1, 1]).unwrap();
        assert_eq!(x.spectral, vec![lin(0, 1), lin(0, 0), lin(2, 0), lin(1, 2), lin(1, -1)]);
        assert_eq!(x.rank, vec![4, 5, 1, 2, 3]);
        let (y, l) = apply_generator(&x, Generator::S(2)).unwrap();
        let y = y.unwrap();
        assert_eq!(l, EdgeLabel::Step(2));
        assert_eq!(y.spectral, vec![lin(0, 1), lin(2, 0), lin(0, 0), lin(1, 2), lin(1, -1)]);
        assert_eq!(y.weight, vec![0, 2, 0, 1, 1]);
        assert_eq!(y.rank, vec![4, 1, 5, 2, 3]);
        let (z, l) = apply_generator(&x, Generator::S(4)).unwrap();
        let z = z.unwrap();
        assert_eq!(l, EdgeLabel::Jump(4));
        assert_eq!(z.tableau, tab(&[&[5, 4, 3], &[2, 1]]));
        assert_eq!(z.spectral, vec![lin(0, 1), lin(0, 0), lin(2, 0), lin(1, -1), lin(1, 2)]);
        assert!(verify_vertex(&z));
        let (f, l) = apply_generator(&x, Generator::S(1)).unwrap();
        assert!(f.is_none());
        assert_eq!(l, EdgeLabel::Fall(1));
        assert_eq!(apply_generator(&y, Generator::S(2)), Err(GraphError::NoEdge(2)));
        assert_eq!(apply_generator(&z, Generator::S(4)), Err(GraphError::NoEdge(4)));
    }

    #[test]
    fn affine_edges_match_the_first_vertices() {
        let r = root_vertex(&Partition::new(vec![2, 1]).unwrap());
        let (a, l) = apply_generator(&r, Generator::Psi).unwrap();
        let a = a.unwrap();
        assert_eq!(l, EdgeLabel::Affine);
        assert_eq!(a.weight, vec![0, 0, 1]);
        assert_eq!(a.spectral, vec![lin(0, -1), lin(0, 0), lin(1, 1)]);
        assert!(verify_vertex(&a));
        let (b, _) = apply_generator(&a, Generator::S(2)).unwrap();
        assert_eq!(b.unwrap().spectral, vec![lin(0, -1), lin(1, 1), lin(0, 0)]);
    }

    #[test]
    fn canonical_paths() {
        assert_eq!(canonical_path(&[0, 0, 1]), vec![EdgeLabel::Affine]);
        assert_eq!(canonical_path(&[0, 1, 0]), vec![EdgeLabel::Affine, EdgeLabel::Step(2)]);
        assert_eq!(canonical_path(&[0, 0, 2, 1, 1, 0]).len(), 12);
        assert!(canonical_path(&[0, 0, 0]).is_empty());
    }

    #[test]
    fn component_examples() {
        let h = component(&parse_filling("0,0;1,1").unwrap()).unwrap();
        assert_eq!(h.len(), 6);
        assert!(h.vertices.iter().all(|x| x.tableau == tab(&[&[4, 3], &[2, 1]])));
        assert_eq!(h.vertices[h.root].weight, vec![0, 0, 1, 1]);
        assert_eq!(h.vertices[h.sink].weight, vec![1, 1, 0, 0]);

        let h = component(&parse_filling("0,0;0,1").unwrap()).unwrap();
        let mut tabs: Vec<Rst> = h.vertices.iter().map(|x| x.tableau.clone()).collect();
        tabs.sort();
        tabs.dedup();
        assert_eq!(tabs, vec![tab(&[&[4, 2], &[3, 1]]), tab(&[&[4, 3], &[2, 1]])]);
        assert_eq!(h.len(), 8);
        assert!(h.edges.iter().any(|e| matches!(e.2, EdgeLabel::Jump(_))));

        let h = component(&parse_filling("0,0;0").unwrap()).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.vertices[h.root].tableau, tab(&[&[3, 1], &[2]]));
        assert_eq!(h.vertices[h.sink].tableau, tab(&[&[3, 2], &[1]]));
    }

    #[test]
    fn components_are_sound() {
        for n in 1..=5 {
            for shape in partitions_of(n) {
                for mu in weights_partitions(n, 4) {
                    for t in fillings_for(&shape, &mu) {
                        let h = component(&t).unwrap();
                        let mut has_in = vec![false; h.len()];
                        for x in &h.vertices {
                            assert_eq!(x.filling(), t);
                            assert!(verify_vertex(x));
                        }
                        for &(f, to, l) in &h.edges {
                            has_in[to] = true;
                            let (y, l2) = apply_generator(&h.vertices[f], l.generator()).unwrap();
                            assert_eq!(y.unwrap(), h.vertices[to]);
                            assert_eq!(l, l2);
                            if let EdgeLabel::Jump(_) = l {
                                assert_eq!(
                                    h.vertices[f].tableau.inversions() + 1,
                                    h.vertices[to].tableau.inversions()
                                );
                            }
                        }
                        assert_eq!(has_in.iter().filter(|&&b| !b).count(), 1);
                        let sink = &h.vertices[h.sink];
                        assert_eq!(sink.tableau, standardize(&t));
                        assert_eq!(sink.weight, t.sorted_values());
                        assert_eq!(sink.rank, (1..=n).collect::<Vec<_>>());
                        // Falls inside compatible components.
                        for x in &h.vertices {
                            for i in 1..n {
                                if let Ok((None, EdgeLabel::Fall(_))) = apply_generator(x, Generator::S(i)) {
                                    let k = x.rank[i - 1];
                                    let pos = x.tableau.positions();
                                    if t.is_column_strict() {
                                        assert_eq!(pos[k - 1].0, pos[k].0, "same row");
                                    }
                                    if t.is_row_strict() {
                                        assert_eq!(pos[k - 1].1, pos[k].1, "same column");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn falls_and_steps_from_every_weight() {
        // Every vertex at weight 0 is reachable by jumps from the root.
        for shape in partitions_of(5) {
            let zero = Filling::from_rows(shape.parts().iter().map(|&p| vec![0; p]).collect()).unwrap();
            let h = component(&zero).unwrap();
            assert_eq!(h.len(), enumerate_rst(&shape).len());
            assert_eq!(h.vertices[h.root].tableau, tau_lambda(&shape));
        }
    }

    fn weights_partitions(n: usize, max_sum: u32) -> Vec<Weight> {
        fn rec(i: usize, left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
            if i == cur.len() {
                out.push(cur.clone());
                return;
            }
            for x in 0..=cap.min(left) {
                cur[i] = x;
                rec(i + 1, left - x, x, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        rec(0, max_sum, max_sum, &mut vec![0; n], &mut out);
        out
    }

    proptest! {
        #[test]
        fn path_lengths_are_invariant(
            v in prop::collection::vec(0u32..3, 1..=6),
            seeds in prop::collection::vec(any::<u64>(), 5),
        ) {
            prop_assume!(v.iter().sum::<u32>() <= 6);
            let shape = Partition::new(vec![v.len()]).unwrap();
            for seed in seeds {
                let mut state = seed;
                let gens = path_by_choice(&v, |m| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    (state >> 33) as usize % m.len()
                });
                prop_assert_eq!(gens.len() as u64, step_count(&v));
                let verts = follow(&root_vertex(&shape), &gens).unwrap().unwrap();
                prop_assert_eq!(&verts.last().unwrap().weight, &v);
            }
        }

        #[test]
        fn spectral_vectors_are_deterministic(v in prop::collection::vec(0u32..4, 3..=3), k in 0usize..2) {
            let shape = Partition::new(vec![2, 1]).unwrap();
            let t = enumerate_rst(&shape)[k].clone();
            let gens = canonical_generators(&v);
            let verts = follow(&root_of_tableau(&t), &gens).unwrap().unwrap();
            let end = verts.last().unwrap();
            prop_assert_eq!(end, &Vertex::new(t, v).unwrap());
        }
    }
}
