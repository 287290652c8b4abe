//! Nonsymmetric, symmetric, antisymmetric and shifted vector-valued Jack
//! polynomials, their norms, restrictions and vanishing points.
//!
//! `J_{v,τ}` is built inside the subgraph `G_τ`: start from `1 ⊗ τ` at weight
//! `0^N` and follow the canonical path to `v`. A step `s_i` leaving a vertex
//! with spectral vector `ζ` multiplies by `s_i ⊗ s_i + 1/(ζ[i+1] - ζ[i])`;
//! an affine edge applies `Ψ`. The shifted polynomials `Ĵ_{v,τ}` follow the
//! same path with `ς_i` and `Ψ̂` in place of `s_i ⊗ s_i` and `Ψ`.
//!
//! Every polynomial is memoized per `(τ, v)`, so building all the Jacks of a
//! component or a degree range reuses the common prefixes of their paths.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffield::{AlphaFraction, FieldError};
use crate::combinatorics::{
    sort_decreasing, CombinatoricsError, Filling, Partition, Rst, Weight,
};
use crate::vvpoly::{PolyError, ShapeContext, VvPoly};
use crate::ybgraph::{
    apply_generator, canonical_generators, canonical_parent, component, root_of_tableau,
    spectral_vector, ComponentHT, EdgeLabel, Generator, GraphError, Vertex,
};

/// Errors raised while building Jack polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JackError {
    #[error("weight has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("spectral difference vanishes at s_{0}")]
    DegenerateSpectral(usize),
    #[error("component is not compatible: {0}")]
    NotCompatible(String),
    #[error("tableau does not have property R({0})")]
    PropertyRViolation(usize),
    #[error("weight has a nonzero entry beyond position {0}")]
    NonzeroTail(usize),
    #[error("restriction produced a term outside the restricted module: {0}")]
    ForeignTerm(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// The pair `(v, τ)` indexing `J_{v,τ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JackIndex {
    pub weight: Weight,
    pub tableau: Rst,
}

impl JackIndex {
    pub fn new(weight: Weight, tableau: Rst) -> Result<Self, JackError> {
        check_length(&weight, &tableau)?;
        Ok(JackIndex { weight, tableau })
    }

    /// The spectral vector `ζ_{v,τ}`.
    pub fn spectral(&self) -> Vec<AlphaFraction> {
        spectral_vector(&self.tableau, &self.weight)
    }
}

fn check_length(v: &[u32], t: &Rst) -> Result<(), JackError> {
    if v.len() != t.size() {
        return Err(JackError::LengthMismatch {
            expected: t.size(),
            got: v.len(),
        });
    }
    Ok(())
}

type CacheKey = (Vec<Vec<usize>>, Weight);
type Cache = Mutex<HashMap<CacheKey, Arc<VvPoly>>>;

static JACKS: OnceLock<Cache> = OnceLock::new();
static SHIFTED: OnceLock<Cache> = OnceLock::new();

/// Which family of polynomials a path builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Homogeneous,
    Shifted,
}

impl Family {
    fn cache(self) -> &'static Cache {
        match self {
            Family::Homogeneous => JACKS.get_or_init(|| Mutex::new(HashMap::new())),
            Family::Shifted => SHIFTED.get_or_init(|| Mutex::new(HashMap::new())),
        }
    }

    /// `P (s_i ⊗ s_i + c)` or `P (ς_i + c)`.
    fn step(self, p: &VvPoly, i: usize, c: &AlphaFraction) -> VvPoly {
        match self {
            Family::Homogeneous => p.act_si_plus(i, c),
            Family::Shifted => {
                let mut out = p.varsigma(i);
                out.add_assign(&p.scale(c));
                out
            }
        }
    }

    fn affine(self, p: &VvPoly) -> VvPoly {
        match self {
            Family::Homogeneous => p.act_affine(),
            Family::Shifted => p.shifted_psi_hat(),
        }
    }
}

/// The step constant `1/(ζ[i+1] - ζ[i])` at a vertex.
fn step_constant(x: &Vertex, i: usize) -> Result<AlphaFraction, JackError> {
    let d = &x.spectral[i] - &x.spectral[i - 1];
    d.inv().map_err(|_| JackError::DegenerateSpectral(i))
}

/// Applies the edge operator of generator `g` leaving vertex `x` to `p`.
fn apply_edge(family: Family, p: &VvPoly, x: &Vertex, g: Generator) -> Result<VvPoly, JackError> {
    match g {
        Generator::S(i) => Ok(family.step(p, i, &step_constant(x, i)?)),
        Generator::Psi => Ok(family.affine(p)),
    }
}

fn build(family: Family, v: &[u32], tau: &Rst) -> Result<Arc<VvPoly>, JackError> {
    check_length(v, tau)?;
    let cache = family.cache();
    let key = |w: &[u32]| (tau.rows().to_vec(), w.to_vec());
    // Walk back along canonical parents to the nearest memoized ancestor.
    let mut chain: Vec<(Weight, Generator)> = Vec::new();
    let mut cur = v.to_vec();
    let mut base = loop {
        if let Some(p) = cache.lock().expect("jack cache poisoned").get(&key(&cur)) {
            break p.clone();
        }
        match canonical_parent(&cur) {
            Some((w, g)) => {
                chain.push((w.clone(), g));
                cur = w;
            }
            None => {
                let p = Arc::new(VvPoly::constant(tau));
                cache
                    .lock()
                    .expect("jack cache poisoned")
                    .insert(key(&cur), p.clone());
                break p;
            }
        }
    };
    for (w, g) in chain.into_iter().rev() {
        let x = Vertex::new(tau.clone(), w)?;
        let (next, _) = apply_generator(&x, g)?;
        let y = next.expect("canonical paths never fall");
        let p = Arc::new(apply_edge(family, &base, &x, g)?);
        cache
            .lock()
            .expect("jack cache poisoned")
            .insert(key(&y.weight), p.clone());
        base = p;
    }
    Ok(base)
}

/// Drops every memoized polynomial.
pub fn clear_caches() {
    for family in [Family::Homogeneous, Family::Shifted] {
        family.cache().lock().expect("jack cache poisoned").clear();
    }
}

/// The nonsymmetric Jack polynomial `J_{v,τ}`.
pub fn nonsymmetric_jack(v: &[u32], tau: &Rst) -> Result<Arc<VvPoly>, JackError> {
    build(Family::Homogeneous, v, tau)
}

/// The shifted Jack polynomial `Ĵ_{v,τ}`.
pub fn shifted_jack(v: &[u32], tau: &Rst) -> Result<Arc<VvPoly>, JackError> {
    build(Family::Shifted, v, tau)
}

/// Follows an arbitrary generator sequence from `1 ⊗ τ` at weight `0^N`.
/// Returns `Ok(None)` if the path falls; the polynomial of a falling path is
/// zero.
pub fn jack_along(tau: &Rst, gens: &[Generator]) -> Result<Option<(Vertex, VvPoly)>, JackError> {
    along(Family::Homogeneous, tau, gens)
}

/// [`jack_along`] for the shifted operators.
pub fn shifted_jack_along(tau: &Rst, gens: &[Generator]) -> Result<Option<(Vertex, VvPoly)>, JackError> {
    along(Family::Shifted, tau, gens)
}

fn along(family: Family, tau: &Rst, gens: &[Generator]) -> Result<Option<(Vertex, VvPoly)>, JackError> {
    let mut x = root_of_tableau(tau);
    let mut p = VvPoly::constant(tau);
    for &g in gens {
        let (next, _) = apply_generator(&x, g)?;
        match next {
            Some(y) => {
                p = apply_edge(family, &p, &x, g)?;
                x = y;
            }
            None => return Ok(None),
        }
    }
    Ok(Some((x, p)))
}

/// The operator factor of a fall edge applied to a polynomial:
/// `P (s_i ⊗ s_i + 1/(ζ[i+1] - ζ[i]))` at the vertex `x`.
pub fn apply_fall_factor(p: &VvPoly, x: &Vertex, i: usize) -> Result<VvPoly, JackError> {
    Ok(p.act_si_plus(i, &step_constant(x, i)?))
}

/// Factor contributed to `||J||²` by a step edge: `(d-1)(d+1)/d²` with
/// `d = ζ'[i+1] - ζ'[i]` at the target vertex `ζ'`.
fn step_norm_factor(target: &Vertex, i: usize) -> AlphaFraction {
    let d = &target.spectral[i] - &target.spectral[i - 1];
    let one = AlphaFraction::one();
    let num = &(&d - &one) * &(&d + &one);
    num / (&d * &d)
}

/// Factor contributed by an affine edge: `ζ[1]/α + 1` at the source vertex.
fn affine_norm_factor(source: &Vertex) -> AlphaFraction {
    &source.spectral[0] / &AlphaFraction::alpha() + AlphaFraction::one()
}

/// `||J_{v,τ}||² / ||τ||²` along the canonical path.
pub fn norm_ratio(v: &[u32], tau: &Rst) -> Result<AlphaFraction, JackError> {
    norm_ratio_along(tau, &canonical_generators(v))
}

/// `||J||² / ||τ||²` along an explicit generator path.
pub fn norm_ratio_along(tau: &Rst, gens: &[Generator]) -> Result<AlphaFraction, JackError> {
    let mut x = root_of_tableau(tau);
    let mut acc = AlphaFraction::one();
    for &g in gens {
        let (next, _) = apply_generator(&x, g)?;
        let y = next.ok_or(JackError::Graph(GraphError::NoEdge(match g {
            Generator::S(i) => i,
            Generator::Psi => 0,
        })))?;
        let f = match g {
            Generator::S(i) => step_norm_factor(&y, i),
            Generator::Psi => affine_norm_factor(&x),
        };
        acc = &acc * &f;
        x = y;
    }
    Ok(acc)
}

/// `||J_{v,τ}||² = norm_ratio(v, τ) · ||τ||²`.
pub fn norm_squared(v: &[u32], tau: &Rst) -> Result<AlphaFraction, JackError> {
    Ok(norm_ratio(v, tau)? * crate::vvpoly::tableau_norm(tau))
}

/// Which symmetrization coefficients a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoefficientKind {
    E,
    F,
}

/// The `E` or `F` coefficients on the vertices of a component, indexed like
/// `component.vertices`.
#[derive(Debug, Clone)]
pub struct SymCoefficientTable {
    pub component: ComponentHT,
    pub values: Vec<AlphaFraction>,
    pub kind: CoefficientKind,
}

impl SymCoefficientTable {
    /// Coefficient at the vertex `(τ, v)`.
    pub fn get(&self, tableau: &Rst, weight: &[u32]) -> Option<&AlphaFraction> {
        self.component.find(tableau, weight).map(|k| &self.values[k])
    }

    /// Coefficient at the sink.
    pub fn sink_value(&self) -> &AlphaFraction {
        &self.values[self.component.sink]
    }
}

fn edge_index(label: EdgeLabel) -> Option<usize> {
    match label {
        EdgeLabel::Step(i) | EdgeLabel::Jump(i) => Some(i),
        _ => None,
    }
}

/// Multiplier of an edge `x → y` along `s_i`.
///
/// For `E` it is `c = (ζ[i] - ζ[i+1])/(ζ[i] - ζ[i+1] + 1)` at the source; for
/// `F` it is `-c` computed from the target's spectral vector.
fn edge_multiplier(kind: CoefficientKind, x: &Vertex, y: &Vertex, i: usize) -> AlphaFraction {
    let c = |z: &Vertex| {
        let d = &z.spectral[i - 1] - &z.spectral[i];
        &d / &(&d + &AlphaFraction::one())
    };
    match kind {
        CoefficientKind::E => c(x),
        CoefficientKind::F => -c(y),
    }
}

/// BFS from the root of `H_T` assigning `E` or `F` coefficients.
pub fn sym_coefficients(t: &Filling, kind: CoefficientKind) -> Result<SymCoefficientTable, JackError> {
    let comp = component(t)?;
    let table = coefficients_on(comp, kind);
    Ok(table)
}

fn coefficients_on(comp: ComponentHT, kind: CoefficientKind) -> SymCoefficientTable {
    let n = comp.len();
    let mut values: Vec<Option<AlphaFraction>> = vec![None; n];
    values[comp.root] = Some(AlphaFraction::one());
    let mut queue = VecDeque::from([comp.root]);
    while let Some(a) = queue.pop_front() {
        for &(f, to, label) in &comp.edges {
            if f != a || values[to].is_some() {
                continue;
            }
            let i = edge_index(label).expect("components carry only steps and jumps");
            let m = edge_multiplier(kind, &comp.vertices[f], &comp.vertices[to], i);
            values[to] = Some(values[a].as_ref().expect("visited") * &m);
            queue.push_back(to);
        }
    }
    SymCoefficientTable {
        values: values
            .into_iter()
            .map(|x| x.expect("every vertex is reachable from the root"))
            .collect(),
        component: comp,
        kind,
    }
}

/// Number of edges on which the table violates its recursion. Zero means the
/// values do not depend on the BFS order.
pub fn coefficient_defects(table: &SymCoefficientTable) -> usize {
    table
        .component
        .edges
        .iter()
        .filter(|&&(f, to, label)| {
            let i = edge_index(label).expect("steps and jumps only");
            let m = edge_multiplier(table.kind, &table.component.vertices[f], &table.component.vertices[to], i);
            table.values[to] != &table.values[f] * &m
        })
        .count()
}

/// Length of a directed path from the root to each vertex (all such paths
/// have the same length, one per inversion gained).
pub fn path_lengths(comp: &ComponentHT) -> Vec<usize> {
    comp.depths()
}

fn combine(table: &SymCoefficientTable, family: Family) -> Result<VvPoly, JackError> {
    let first = &table.component.vertices[0];
    let ctx = ShapeContext::get(first.tableau.shape());
    let mut out = VvPoly::zero(&ctx);
    for (x, c) in table.component.vertices.iter().zip(&table.values) {
        let j = build(family, &x.weight, &x.tableau)?;
        out.add_assign(&j.scale(c));
    }
    Ok(out)
}

fn require(t: &Filling, kind: CoefficientKind) -> Result<(), JackError> {
    match kind {
        CoefficientKind::E if !t.is_column_strict() => Err(JackError::NotCompatible(format!(
            "{t} is not strictly increasing along columns"
        ))),
        CoefficientKind::F if !t.is_row_strict() => Err(JackError::NotCompatible(format!(
            "{t} is not strictly increasing along rows"
        ))),
        _ => Ok(()),
    }
}

/// The symmetric Jack polynomial `J_T = Σ E_{v,τ} J_{v,τ}` over `H_T`.
pub fn symmetric_jack(t: &Filling) -> Result<VvPoly, JackError> {
    require(t, CoefficientKind::E)?;
    combine(&sym_coefficients(t, CoefficientKind::E)?, Family::Homogeneous)
}

/// The antisymmetric Jack polynomial `J'_T = Σ F_{v,τ} J_{v,τ}` over `H_T`.
pub fn antisymmetric_jack(t: &Filling) -> Result<VvPoly, JackError> {
    require(t, CoefficientKind::F)?;
    combine(&sym_coefficients(t, CoefficientKind::F)?, Family::Homogeneous)
}

/// The shifted symmetric polynomial `Ĵ_T = Σ E_{v,τ} Ĵ_{v,τ}`; it satisfies
/// `Ĵ_T ς_i = Ĵ_T` for every `i`.
pub fn shifted_symmetric_jack(t: &Filling) -> Result<VvPoly, JackError> {
    require(t, CoefficientKind::E)?;
    combine(&sym_coefficients(t, CoefficientKind::E)?, Family::Shifted)
}

/// The shifted antisymmetric polynomial `Ĵ'_T = Σ F_{v,τ} Ĵ_{v,τ}`; it
/// satisfies `Ĵ'_T ς_i = -Ĵ'_T` for every `i`.
pub fn shifted_antisymmetric_jack(t: &Filling) -> Result<VvPoly, JackError> {
    require(t, CoefficientKind::F)?;
    combine(&sym_coefficients(t, CoefficientKind::F)?, Family::Shifted)
}

/// The filling `T₁` (row `r` filled with `r - 1`) and its weight.
pub fn minimal_symmetric(shape: &Partition) -> (Filling, Weight) {
    let rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| vec![r as u32; len])
        .collect();
    let t = Filling::from_rows(rows).expect("rows follow the shape");
    let v = t.sorted_values();
    (t, v)
}

/// The filling `T_det` (column `c` filled with `c - 1`) and its weight.
pub fn minimal_antisymmetric(shape: &Partition) -> (Filling, Weight) {
    let rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&len| (0..len as u32).collect())
        .collect();
    let t = Filling::from_rows(rows).expect("rows follow the shape");
    let v = t.sorted_values();
    (t, v)
}

/// `J_{v,τ}↓M`: substitute `x_i = 0` for `i > M` and map every tableau `ρ` to
/// `ρ↓M`.
pub fn restrict_jack(v: &[u32], tau: &Rst, m: usize) -> Result<VvPoly, JackError> {
    check_length(v, tau)?;
    let small = tau.restrict(m).map_err(|_| JackError::PropertyRViolation(m))?;
    if v[m..].iter().any(|&e| e != 0) {
        return Err(JackError::NonzeroTail(m));
    }
    let j = nonsymmetric_jack(v, tau)?;
    restrict_poly(&j, &small, m)
}

/// The linear map `x_i ↦ 0 (i > M)`, `ρ ↦ ρ↓M` into the module of the shape
/// of `target`. Fails on a surviving term whose tableau does not restrict
/// into that module.
pub fn restrict_poly(p: &VvPoly, target: &Rst, m: usize) -> Result<VvPoly, JackError> {
    let ctx = p.context().clone();
    let small_ctx = ShapeContext::get(target.shape());
    let mut out = VvPoly::zero(&small_ctx);
    let mut images: HashMap<usize, Option<usize>> = HashMap::new();
    for ((u, k), c) in p.terms() {
        if u[m..].iter().any(|&e| e != 0) {
            continue;
        }
        let image = *images.entry(*k).or_insert_with(|| {
            ctx.tableaux()[*k]
                .restrict(m)
                .ok()
                .and_then(|r| small_ctx.index_of(&r))
        });
        match image {
            Some(k2) => out.add_term(u[..m].to_vec(), k2, c),
            None => {
                return Err(JackError::ForeignTerm(format!(
                    "tableau {} with coefficient {}",
                    ctx.tableaux()[*k],
                    c.to_text()
                )))
            }
        }
    }
    Ok(out)
}

/// A vanishing point: position `j` either stays a free variable or is fixed
/// to an α-linear value.
pub type VanishingPattern = Vec<Option<AlphaFraction>>;

/// The vector `V_{v,τ}` and its pivot `m` (1-based): the smallest index
/// where `v` attains its maximum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VanishingVector {
    pub entries: Vec<AlphaFraction>,
    pub pivot: usize,
}

impl VanishingVector {
    /// Substitution pattern: `x_1 … x_{m-1}` free, `x_j = V[j]` for `j ≥ m`.
    pub fn pattern(&self) -> VanishingPattern {
        self.entries
            .iter()
            .enumerate()
            .map(|(j, e)| if j + 1 < self.pivot { None } else { Some(e.clone()) })
            .collect()
    }
}

/// `V_{v,τ}[i] = α(v⁺[1] - v[i]) + CT_τ[1] - CT_τ[σ_v[i]] - N + 1`. The
/// shifted Jack `Ĵ_{v,τ}` vanishes on [`VanishingVector::pattern`] whenever
/// `v ≠ 0`.
pub fn vanishing_vector(v: &[u32], tau: &Rst) -> Result<VanishingVector, JackError> {
    check_length(v, tau)?;
    let n = v.len() as i64;
    let ct = tau.content_vector();
    let top = sort_decreasing(v).first().copied().unwrap_or(0);
    let sigma = crate::combinatorics::rank_permutation(v);
    let entries = (0..v.len())
        .map(|i| {
            AlphaFraction::linear(
                top as i64 - v[i] as i64,
                ct[0] - ct[sigma[i] - 1] - n + 1,
            )
        })
        .collect();
    let pivot = v.iter().position(|&e| e == top).unwrap_or(0) + 1;
    Ok(VanishingVector { entries, pivot })
}

/// `[x_1, …, x_N]Φ⁺ = [x_2, …, x_N, x_1 + α]` on patterns.
pub fn phi_plus(p: &[Option<AlphaFraction>]) -> VanishingPattern {
    let mut out: VanishingPattern = p[1..].to_vec();
    out.push(p[0].as_ref().map(|x| x + &AlphaFraction::alpha()));
    out
}

/// `Φ̃`: `[x_2, …, x_N, x_1 - α]` when `x_1 = aα + b` with `a > 0`, else
/// `[x_2 + α, …, x_N + α, x_1]`.
pub fn phi_tilde(x: &[AlphaFraction]) -> Vec<AlphaFraction> {
    let positive = x[0]
        .as_integer_linear()
        .is_some_and(|(a, _)| a > BigInt::from(0));
    let alpha = AlphaFraction::alpha();
    let mut out: Vec<AlphaFraction> = if positive {
        x[1..].to_vec()
    } else {
        x[1..].iter().map(|e| e + &alpha).collect()
    };
    out.push(if positive { &x[0] - &alpha } else { x[0].clone() });
    out
}

/// Moves a pattern across the step `s_i` with `d = ζ[i+1] - ζ[i]` at the
/// source vertex. A polynomial vanishing at `(x_i, x_{i+1}) = (b, a)` with
/// `b - a = d` gives, after the step, one vanishing at `(a, b)`.
fn step_pattern(p: &[Option<AlphaFraction>], i: usize, d: &AlphaFraction) -> Option<VanishingPattern> {
    let (a, b) = (i - 1, i);
    let mut out = p.to_vec();
    match (&p[a], &p[b]) {
        (None, None) => {}
        (None, Some(y)) => {
            out[a] = Some(y.clone());
            out[b] = Some(y + d);
        }
        (Some(x), None) => {
            out[a] = Some(x - d);
            out[b] = Some(x.clone());
        }
        (Some(x), Some(y)) => {
            if &(x - y) != d {
                return None;
            }
            out[a] = Some(y.clone());
            out[b] = Some(x.clone());
        }
    }
    Some(out)
}

/// Vanishing patterns of `Ĵ_{v,τ}` obtained along the canonical path: every
/// `Ψ̂` edge contributes `x_N = 1 - N` and pushes earlier patterns through
/// `Φ⁺`, and every step moves them as in [`step_pattern`].
pub fn propagate_vanishings(v: &[u32], tau: &Rst) -> Result<Vec<VanishingPattern>, JackError> {
    check_length(v, tau)?;
    let n = v.len();
    let mut x = root_of_tableau(tau);
    let mut patterns: Vec<VanishingPattern> = Vec::new();
    for g in canonical_generators(v) {
        let (next, _) = apply_generator(&x, g)?;
        let y = next.expect("canonical paths never fall");
        match g {
            Generator::Psi => {
                patterns = patterns.iter().map(|p| phi_plus(p)).collect();
                let mut fresh = vec![None; n];
                fresh[n - 1] = Some(AlphaFraction::from_int(1 - n as i64));
                patterns.push(fresh);
            }
            Generator::S(i) => {
                let d = &x.spectral[i] - &x.spectral[i - 1];
                patterns = patterns
                    .iter()
                    .filter_map(|p| step_pattern(p, i, &d))
                    .collect();
            }
        }
        patterns.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
        patterns.dedup();
        x = y;
    }
    Ok(patterns)
}

/// Substitutes a pattern and reports whether the result is exactly zero.
pub fn vanishes_at(p: &VvPoly, pattern: &[Option<AlphaFraction>]) -> bool {
    p.substitute(pattern).is_zero()
}

/// `N!` as a small integer.
pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `#H_T / N!` as a field element.
pub fn component_fraction(comp: &ComponentHT) -> AlphaFraction {
    let n = comp.vertices[0].size();
    AlphaFraction::from_ratio(comp.len() as i64, factorial(n))
}

/// Leading α-degree of each coefficient is zero, i.e. the polynomial is
/// free of α.
pub fn alpha_free_ratio(p: &VvPoly, c: &AlphaFraction) -> Result<bool, JackError> {
    let q = p.scale(&c.inv()?);
    Ok(q.is_alpha_free())
}

/// Degree of a weight.
pub fn weight_degree(v: &[u32]) -> u32 {
    v.iter().sum()
}

/// Every weight of length `n` and total degree `d`.
pub fn weights_of_degree(n: usize, d: u32) -> Vec<Weight> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Every weight of length `n` with total degree at most `d`.
pub fn weights_up_to(n: usize, d: u32) -> Vec<Weight> {
    (0..=d).flat_map(|k| weights_of_degree(n, k)).collect()
}

/// The value `(α-free)` of an integer-valued α-linear expression, if any.
pub fn as_small_linear(x: &AlphaFraction) -> Option<(i64, i64)> {
    let (a, b) = x.as_integer_linear()?;
    Some((a.to_i64()?, b.to_i64()?))
}
