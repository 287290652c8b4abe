//! Vector-valued polynomials `M_λ = Q(α)[x_1, …, x_N] ⊗ V_λ` and the
//! operators acting on them.
//!
//! Elements are sparse maps from a pure tensor `x^u ⊗ ρ` (exponent vector and
//! index of an RST `ρ` in [`enumerate_rst`] order) to a coefficient in Q(α).
//! Every operator is a right action: `P·(AB) = (P·A)·B`, and a tensor
//! operator `p ⊗ ω` acts on the variables and on the module part
//! simultaneously.
//!
//! The module part carries Young's seminormal representation (the Murphy
//! action). Its structure constants are rational, so they are tabulated once
//! per shape in a shared [`ShapeContext`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffield::AlphaFraction;
use crate::combinatorics::{
    enumerate_rst, index_tableaux, rank_permutation, reduced_word, sort_decreasing, tau_lambda,
    theta, Partition, Permutation, Rst, Weight,
};

/// Errors raised by polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(Partition, Partition),
    #[error("polynomial has no leading monomial")]
    Undefined,
    #[error("tableau index {0} out of range")]
    BadTableauIndex(usize),
    #[error("exponent vector has length {got}, expected {expected}")]
    BadExponent { expected: usize, got: usize },
    #[error("tableau does not have property R({0})")]
    PropertyRViolation(usize),
}

/// A sparse row of a rational matrix: `(column, value)` pairs.
pub type SparseRow = Vec<(usize, BigRational)>;

/// Sparse rational matrix acting on the RST basis, one row per tableau.
pub type SparseMatrix = Vec<SparseRow>;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Tabulated data for one shape: its tableaux, contents, norms and the
/// matrices of the Murphy action.
#[derive(Debug)]
pub struct ShapeContext {
    shape: Partition,
    n: usize,
    tableaux: Vec<Rst>,
    index: HashMap<Vec<Vec<usize>>, usize>,
    contents: Vec<Vec<i64>>,
    norms: Vec<BigRational>,
    murphy: Vec<SparseMatrix>,
    perms: Mutex<HashMap<Permutation, Arc<SparseMatrix>>>,
}

static CONTEXTS: OnceLock<Mutex<HashMap<Partition, Arc<ShapeContext>>>> = OnceLock::new();

impl ShapeContext {
    /// Shared context for a shape, built on first use.
    pub fn get(shape: &Partition) -> Arc<ShapeContext> {
        let map = CONTEXTS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(ctx) = map.lock().expect("context cache poisoned").get(shape) {
            return ctx.clone();
        }
        let ctx = Arc::new(ShapeContext::build(shape));
        map.lock()
            .expect("context cache poisoned")
            .entry(shape.clone())
            .or_insert(ctx)
            .clone()
    }

    fn build(shape: &Partition) -> ShapeContext {
        let n = shape.size();
        let tableaux = enumerate_rst(shape);
        let index = index_tableaux(&tableaux);
        let contents: Vec<Vec<i64>> = tableaux.iter().map(|t| t.content_vector()).collect();
        let norms = contents.iter().map(|ct| norm_from_contents(ct)).collect();
        let mut murphy = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let rows = tableaux
                .iter()
                .enumerate()
                .map(|(k, t)| {
                    let ct = &contents[k];
                    let d = ct[i - 1] - ct[i];
                    let b = rat(1, d);
                    if d.abs() == 1 {
                        return vec![(k, b)];
                    }
                    let swapped = t
                        .swap_entries(i, i + 1)
                        .expect("entries with content gap at least 2 are not adjacent");
                    let k2 = index[swapped.rows()];
                    let c = if d >= 2 { BigRational::one() } else { BigRational::one() - &b * &b };
                    vec![(k, b), (k2, c)]
                })
                .collect();
            murphy.push(rows);
        }
        ShapeContext {
            shape: shape.clone(),
            n,
            tableaux,
            index,
            contents,
            norms,
            murphy,
            perms: Mutex::new(HashMap::new()),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of variables N.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Tableaux in canonical order.
    pub fn tableaux(&self) -> &[Rst] {
        &self.tableaux
    }

    /// Number of tableaux.
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Index of a tableau of this shape.
    pub fn index_of(&self, t: &Rst) -> Option<usize> {
        self.index.get(t.rows()).copied()
    }

    /// Content vector of the tableau with index `k`.
    pub fn contents(&self, k: usize) -> &[i64] {
        &self.contents[k]
    }

    /// `||τ||²` for the tableau with index `k`.
    pub fn norm(&self, k: usize) -> &BigRational {
        &self.norms[k]
    }

    /// Matrix of `s_i` in the Murphy action (`1 ≤ i < N`).
    pub fn murphy_matrix(&self, i: usize) -> &SparseMatrix {
        &self.murphy[i - 1]
    }

    /// Matrix of a permutation, composed along its bubble-sort reduced word.
    pub fn perm_matrix(&self, sigma: &[usize]) -> Arc<SparseMatrix> {
        if let Some(m) = self.perms.lock().expect("cache poisoned").get(sigma) {
            return m.clone();
        }
        let word = reduced_word(sigma);
        let m: SparseMatrix = (0..self.dim())
            .map(|k| {
                let mut v: BTreeMap<usize, BigRational> = BTreeMap::from([(k, BigRational::one())]);
                for &i in &word {
                    let mut next = BTreeMap::new();
                    for (t, c) in v {
                        for (t2, r) in &self.murphy[i - 1][t] {
                            let e = next.entry(*t2).or_insert_with(BigRational::zero);
                            *e += &c * r;
                        }
                    }
                    next.retain(|_, c: &mut BigRational| !c.is_zero());
                    v = next;
                }
                v.into_iter().collect()
            })
            .collect();
        let m = Arc::new(m);
        self.perms
            .lock()
            .expect("cache poisoned")
            .insert(sigma.to_vec(), m.clone());
        m
    }

    /// Matrix of the transposition `(i j)`.
    pub fn transposition(&self, i: usize, j: usize) -> Arc<SparseMatrix> {
        self.perm_matrix(&transposition(self.n, i, j))
    }
}

/// The transposition `(i j)` as an image list.
pub fn transposition(n: usize, i: usize, j: usize) -> Permutation {
    (1..=n)
        .map(|k| if k == i { j } else if k == j { i } else { k })
        .collect()
}

/// `||τ||²` from a content vector: the product over `i < j` with
/// `CT[i] < CT[j] - 1` of `(d-1)(d+1)/d²`, `d = CT[i] - CT[j]`.
fn norm_from_contents(ct: &[i64]) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..ct.len() {
        for j in i + 1..ct.len() {
            if ct[i] < ct[j] - 1 {
                let d = ct[i] - ct[j];
                acc *= rat((d - 1) * (d + 1), d * d);
            }
        }
    }
    acc
}

/// `||τ||²` as an element of Q(α) (always a rational constant).
pub fn tableau_norm(t: &Rst) -> AlphaFraction {
    AlphaFraction::from_rational(&norm_from_contents(&t.content_vector()))
}

/// An element of `V_λ` in the RST basis.
#[derive(Debug, Clone)]
pub struct ModuleVector {
    ctx: Arc<ShapeContext>,
    coords: BTreeMap<usize, AlphaFraction>,
}

impl PartialEq for ModuleVector {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.shape == other.ctx.shape && self.coords == other.coords
    }
}

impl ModuleVector {
    pub fn zero(ctx: &Arc<ShapeContext>) -> Self {
        ModuleVector {
            ctx: ctx.clone(),
            coords: BTreeMap::new(),
        }
    }

    /// The basis vector of the tableau with index `k`.
    pub fn basis(ctx: &Arc<ShapeContext>, k: usize) -> Self {
        ModuleVector {
            ctx: ctx.clone(),
            coords: BTreeMap::from([(k, AlphaFraction::one())]),
        }
    }

    /// Basis vector of a tableau.
    pub fn of_tableau(t: &Rst) -> Self {
        let ctx = ShapeContext::get(t.shape());
        let k = ctx.index_of(t).expect("tableau belongs to its shape");
        Self::basis(&ctx, k)
    }

    pub fn context(&self) -> &Arc<ShapeContext> {
        &self.ctx
    }

    pub fn coords(&self) -> &BTreeMap<usize, AlphaFraction> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add_coord(&mut self, k: usize, c: &AlphaFraction) {
        add_into(&mut self.coords, k, c);
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &AlphaFraction) -> Self {
        let mut out = Self::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        for (k, x) in &self.coords {
            out.coords.insert(*k, x * c);
        }
        out
    }

    fn apply_matrix(&self, m: &SparseMatrix) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (k, c) in &self.coords {
            for (k2, r) in &m[*k] {
                out.add_coord(*k2, &c.scale(r));
            }
        }
        out
    }

    /// The Murphy action of `s_i`.
    pub fn murphy_si(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.ctx.n, "s_{i} out of range");
        self.apply_matrix(&self.ctx.murphy[i - 1])
    }

    /// The action of an arbitrary permutation.
    pub fn act_perm(&self, sigma: &[usize]) -> Self {
        self.apply_matrix(&self.ctx.perm_matrix(sigma))
    }

    /// The Jucys–Murphy element `ω_i = Σ_{j>i} s_{ij}`.
    pub fn jucys_murphy(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for j in i + 1..=self.ctx.n {
            let part = self.apply_matrix(&self.ctx.transposition(i, j));
            for (k, c) in part.coords {
                out.add_coord(k, &c);
            }
        }
        out
    }

    /// `c` such that `self = c · other`, if any.
    pub fn ratio_to(&self, other: &ModuleVector) -> Option<AlphaFraction> {
        if self.coords.len() != other.coords.len() {
            return None;
        }
        let (k0, c0) = other.coords.iter().next()?;
        let s0 = self.coords.get(k0)?;
        let ratio = s0 / c0;
        for (k, c) in &other.coords {
            if self.coords.get(k)? != &(c * &ratio) {
                return None;
            }
        }
        Some(ratio)
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, AlphaFraction>, k: K, c: &AlphaFraction) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Key of a pure tensor `x^u ⊗ ρ`.
pub type TermKey = (Vec<u32>, usize);

/// An element of `M_λ`.
#[derive(Debug, Clone)]
pub struct VvPoly {
    ctx: Arc<ShapeContext>,
    terms: HashMap<TermKey, AlphaFraction>,
}

impl PartialEq for VvPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.shape == other.ctx.shape && self.terms == other.terms
    }
}

/// Signed monomials of the divided difference `(x^u - x^{u s_ij})/(x_i - x_j)`
/// with 0-based variable indices.
pub fn divided_difference(u: &[u32], i: usize, j: usize) -> Vec<(Vec<u32>, i64)> {
    let (a, b) = (u[i], u[j]);
    if a == b {
        return Vec::new();
    }
    let (lo, d, sign) = if a > b { (b, a - b, 1) } else { (a, b - a, -1) };
    (0..d)
        .map(|k| {
            let mut w = u.to_vec();
            w[i] = lo + k;
            w[j] = lo + (d - 1 - k);
            (w, sign)
        })
        .collect()
}

fn swap_exp(u: &[u32], i: usize, j: usize) -> Vec<u32> {
    let mut w = u.to_vec();
    w.swap(i, j);
    w
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

impl VvPoly {
    /// The zero polynomial of a shape.
    pub fn zero(ctx: &Arc<ShapeContext>) -> Self {
        VvPoly {
            ctx: ctx.clone(),
            terms: HashMap::new(),
        }
    }

    /// `1 ⊗ τ`.
    pub fn constant(t: &Rst) -> Self {
        let ctx = ShapeContext::get(t.shape());
        let k = ctx.index_of(t).expect("tableau belongs to its shape");
        let mut p = Self::zero(&ctx);
        p.add_term(vec![0; ctx.n], k, &AlphaFraction::one());
        p
    }

    /// `x^u ⊗ m` for a module vector `m`.
    pub fn monomial_times(u: Vec<u32>, m: &ModuleVector) -> Self {
        let mut p = Self::zero(&m.ctx);
        for (k, c) in &m.coords {
            p.add_term(u.clone(), *k, c);
        }
        p
    }

    pub fn context(&self) -> &Arc<ShapeContext> {
        &self.ctx
    }

    pub fn shape(&self) -> &Partition {
        &self.ctx.shape
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn terms(&self) -> &HashMap<TermKey, AlphaFraction> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^u ⊗ ρ_k`.
    pub fn coeff(&self, u: &[u32], k: usize) -> AlphaFraction {
        self.terms
            .get(&(u.to_vec(), k))
            .cloned()
            .unwrap_or_else(AlphaFraction::zero)
    }

    /// Adds `c · x^u ⊗ ρ_k`.
    pub fn add_term(&mut self, u: Vec<u32>, k: usize, c: &AlphaFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, k)) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_owned(&mut self, u: Vec<u32>, k: usize, c: AlphaFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, k)) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c · x^u ⊗ (ρ_k · m)` for a matrix `m` on the module.
    fn add_row(&mut self, u: &[u32], row: &SparseRow, c: &AlphaFraction) {
        for (k2, r) in row {
            self.add_term_owned(u.to_vec(), *k2, c.scale(r));
        }
    }

    fn check_shape(&self, other: &VvPoly) -> Result<(), PolyError> {
        if self.ctx.shape != other.ctx.shape {
            return Err(PolyError::ShapeMismatch(
                self.ctx.shape.clone(),
                other.ctx.shape.clone(),
            ));
        }
        Ok(())
    }

    /// Sum (panics on a shape mismatch).
    pub fn add(&self, other: &VvPoly) -> VvPoly {
        self.check_shape(other).expect("same shape");
        let mut out = self.clone();
        for ((u, k), c) in &other.terms {
            out.add_term(u.clone(), *k, c);
        }
        out
    }

    /// In-place sum (panics on a shape mismatch).
    pub fn add_assign(&mut self, other: &VvPoly) {
        self.check_shape(other).expect("same shape");
        for ((u, k), c) in &other.terms {
            self.add_term(u.clone(), *k, c);
        }
    }

    /// Difference (panics on a shape mismatch).
    pub fn sub(&self, other: &VvPoly) -> VvPoly {
        self.add(&other.scale(&AlphaFraction::from_int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &AlphaFraction) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        for (key, x) in &self.terms {
            out.terms.insert(key.clone(), x * c);
        }
        out
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(u, _)| u.iter().sum()).max()
    }

    /// The homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            if u.iter().sum::<u32>() == d {
                out.terms.insert((u.clone(), *k), c.clone());
            }
        }
        out
    }

    /// True when every coefficient is free of α.
    pub fn is_alpha_free(&self) -> bool {
        self.terms.values().all(|c| c.is_constant())
    }

    /// The module vector multiplying `x^u`.
    pub fn module_at(&self, u: &[u32]) -> ModuleVector {
        let mut m = ModuleVector::zero(&self.ctx);
        for ((w, k), c) in &self.terms {
            if w == u {
                m.add_coord(*k, c);
            }
        }
        m
    }

    /// Multiplication by `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            let mut w = u.clone();
            w[i - 1] += 1;
            out.terms.insert((w, *k), c.clone());
        }
        out
    }

    /// Multiplication by `x_i + c`.
    pub fn mul_linear(&self, i: usize, c: &AlphaFraction) -> VvPoly {
        let mut out = self.mul_var(i);
        if !c.is_zero() {
            for ((u, k), x) in &self.terms {
                out.add_term_owned(u.clone(), *k, x * c);
            }
        }
        out
    }

    /// Applies `σ` to the variables only: `x^u ↦ x^{uσ}`.
    pub fn act_vars(&self, sigma: &[usize]) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            out.terms.insert((crate::combinatorics::permute(u, sigma), *k), c.clone());
        }
        out
    }

    /// Applies `σ` to the module part only.
    pub fn act_module(&self, sigma: &[usize]) -> VvPoly {
        let m = self.ctx.perm_matrix(sigma);
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            out.add_row(u, &m[*k], c);
        }
        out
    }

    /// The diagonal action `σ ⊗ σ`.
    pub fn act_perm(&self, sigma: &[usize]) -> VvPoly {
        let m = self.ctx.perm_matrix(sigma);
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            out.add_row(&crate::combinatorics::permute(u, sigma), &m[*k], c);
        }
        out
    }

    /// The operator `s_i ⊗ s_i`.
    pub fn act_si(&self, i: usize) -> VvPoly {
        assert!(i >= 1 && i < self.ctx.n, "s_{i} out of range");
        let m = &self.ctx.murphy[i - 1];
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            out.add_row(&swap_exp(u, i - 1, i), &m[*k], c);
        }
        out
    }

    /// `P (s_i ⊗ s_i + c)`, the edge operator of the Jack recursion.
    pub fn act_si_plus(&self, i: usize, c: &AlphaFraction) -> VvPoly {
        let mut out = self.act_si(i);
        for ((u, k), x) in &self.terms {
            out.add_term_owned(u.clone(), *k, x * c);
        }
        out
    }

    /// The affine operator `Ψ = (θ ⊗ θ) x_N`.
    pub fn act_affine(&self) -> VvPoly {
        let n = self.ctx.n;
        let m = self.ctx.perm_matrix(&theta(n));
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            let mut w: Vec<u32> = u[1..].to_vec();
            w.push(u[0] + 1);
            out.add_row(&w, &m[*k], c);
        }
        out
    }

    /// The Dunkl operator
    /// `D_i = ∂/∂x_i ⊗ 1 + (1/α) Σ_{j≠i} ∂_{ij} ⊗ s_{ij}`.
    pub fn dunkl(&self, i: usize) -> VvPoly {
        let n = self.ctx.n;
        let ia = i - 1;
        let mut out = VvPoly::zero(&self.ctx);
        let inv_alpha = AlphaFraction::alpha().inv().expect("alpha is nonzero");
        let mats: Vec<(usize, Arc<SparseMatrix>)> = (1..=n)
            .filter(|&j| j != i)
            .map(|j| (j, self.ctx.transposition(i.min(j), i.max(j))))
            .collect();
        for ((u, k), c) in &self.terms {
            if u[ia] > 0 {
                let mut w = u.clone();
                w[ia] -= 1;
                out.add_term_owned(w, *k, c.scale_int(u[ia] as i64));
            }
            let ca = c * &inv_alpha;
            for (j, m) in &mats {
                for (w, sign) in divided_difference(u, ia, j - 1) {
                    let cs = ca.scale_int(sign);
                    out.add_row(&w, &m[*k], &cs);
                }
            }
        }
        out
    }

    /// The Cherednik operator `U_i = x_i D_i - (1/α) Σ_{j<i} s_{ij} ⊗ s_{ij}`,
    /// applied as multiplication by `x_i` followed by `D_i`.
    pub fn cherednik(&self, i: usize) -> VvPoly {
        let mut out = self.mul_var(i).dunkl(i);
        let inv_alpha = AlphaFraction::alpha().inv().expect("alpha is nonzero");
        for j in 1..i {
            let t = self.act_perm(&transposition(self.ctx.n, j, i));
            out.add_assign(&t.scale(&(-&inv_alpha)));
        }
        out
    }

    /// `ξ̃_i = α U_i - α`, expanded so that no division by α occurs.
    pub fn xi_tilde(&self, i: usize) -> VvPoly {
        let n = self.ctx.n;
        let ia = i - 1;
        let mut out = VvPoly::zero(&self.ctx);
        let mats: Vec<(usize, Arc<SparseMatrix>)> = (1..=n)
            .filter(|&j| j != i)
            .map(|j| (j, self.ctx.transposition(i.min(j), i.max(j))))
            .collect();
        for ((u, k), c) in &self.terms {
            if u[ia] > 0 {
                out.add_term_owned(u.clone(), *k, c.mul_alpha().scale_int(u[ia] as i64));
            }
            let mut ui = u.clone();
            ui[ia] += 1;
            for (j, m) in &mats {
                for (w, sign) in divided_difference(&ui, ia, j - 1) {
                    out.add_row(&w, &m[*k], &c.scale_int(sign));
                }
                if *j < i {
                    let neg = -c;
                    out.add_row(&swap_exp(u, ia, j - 1), &m[*k], &neg);
                }
            }
        }
        out
    }

    /// The divided difference `∂_i = (1 - s_i)/(x_i - x_{i+1})` on variables.
    pub fn divided_difference_op(&self, i: usize) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        for ((u, k), c) in &self.terms {
            for (w, sign) in divided_difference(u, i - 1, i) {
                out.add_term_owned(w, *k, c.scale_int(sign));
            }
        }
        out
    }

    /// `ς_i = ∂_i ⊗ 1 + s_i ⊗ s_i`.
    pub fn varsigma(&self, i: usize) -> VvPoly {
        let mut out = self.act_si(i);
        out.add_assign(&self.divided_difference_op(i));
        out
    }

    /// `T = Φ ⊗ θ` with `Φ: x_i ↦ x_{i-1}` for `i > 1` and `x_1 ↦ x_N - α`.
    pub fn act_phi_theta(&self) -> VvPoly {
        let n = self.ctx.n;
        let m = self.ctx.perm_matrix(&theta(n));
        let minus_alpha = AlphaFraction::linear(-1, 0);
        let mut out = VvPoly::zero(&self.ctx);
        let mut pow_cache: HashMap<u32, AlphaFraction> = HashMap::new();
        for ((u, k), c) in &self.terms {
            let a = u[0];
            for e in 0..=a {
                let mut w: Vec<u32> = u[1..].to_vec();
                w.push(e);
                let p = pow_cache
                    .entry(a - e)
                    .or_insert_with(|| minus_alpha.pow((a - e) as i32).expect("nonzero"))
                    .clone();
                let coeff = (c * &p).scale(&BigRational::from_integer(binomial(a, e)));
                out.add_row(&w, &m[*k], &coeff);
            }
        }
        out
    }

    /// `Ψ̂ = T (x_N + N - 1)`: apply `T`, then multiply by `x_N + N - 1`.
    pub fn shifted_psi_hat(&self) -> VvPoly {
        let n = self.ctx.n;
        self.act_phi_theta()
            .mul_linear(n, &AlphaFraction::from_int(n as i64 - 1))
    }

    /// `ξ̂_i = x_i + N - 1 - ς_i ⋯ ς_{N-1} Ψ̂ ς_1 ⋯ ς_{i-1}`. The operator
    /// word is applied from its right end: first `ς_{i-1}, …, ς_1`, then
    /// `Ψ̂`, then `ς_{N-1}, …, ς_i`.
    pub fn xi_hat(&self, i: usize) -> VvPoly {
        let n = self.ctx.n;
        let mut q = self.clone();
        for j in (1..i).rev() {
            q = q.varsigma(j);
        }
        q = q.shifted_psi_hat();
        for j in (i..n).rev() {
            q = q.varsigma(j);
        }
        let mut out = self.mul_linear(i, &AlphaFraction::from_int(n as i64 - 1));
        out.add_assign(&q.scale(&AlphaFraction::from_int(-1)));
        out
    }

    /// Substitutes `x_j = values[j-1]` wherever a value is given.
    pub fn substitute(&self, values: &[Option<AlphaFraction>]) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        let mut powers: HashMap<(usize, u32), AlphaFraction> = HashMap::new();
        for ((u, k), c) in &self.terms {
            let mut coeff = c.clone();
            let mut w = u.clone();
            for (j, val) in values.iter().enumerate() {
                if let Some(x) = val {
                    if u[j] > 0 {
                        let p = powers
                            .entry((j, u[j]))
                            .or_insert_with(|| {
                                let mut acc = AlphaFraction::one();
                                for _ in 0..u[j] {
                                    acc = &acc * x;
                                }
                                acc
                            })
                            .clone();
                        coeff = &coeff * &p;
                    }
                    w[j] = 0;
                }
                if coeff.is_zero() {
                    break;
                }
            }
            out.add_term_owned(w, *k, coeff);
        }
        out
    }

    /// Applies `α ↦ -α` to every coefficient.
    pub fn negate_alpha(&self) -> VvPoly {
        let mut out = VvPoly::zero(&self.ctx);
        for (key, c) in &self.terms {
            out.terms.insert(key.clone(), c.negate_alpha());
        }
        out
    }

    /// Rebuilds the polynomial over another shape with the same number of
    /// tableaux, reindexing tableaux through `map`.
    pub fn reindex(&self, ctx: &Arc<ShapeContext>, map: impl Fn(usize) -> usize) -> VvPoly {
        let mut out = VvPoly::zero(ctx);
        for ((u, k), c) in &self.terms {
            out.add_term(u.clone(), map(*k), c);
        }
        out
    }

    /// Terms in the documented output order: higher degree first, then
    /// decreasing `u⁺` lexicographically, then decreasing `u`
    /// lexicographically, then increasing tableau index.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, usize, &AlphaFraction)> {
        let mut v: Vec<_> = self.terms.iter().map(|((u, k), c)| (u, *k, c)).collect();
        v.sort_by(|a, b| output_order(a.0, a.1, b.0, b.1));
        v
    }

    /// Leading monomial with respect to `⊴`.
    pub fn leading_monomial(&self) -> Result<LeadingMonomial, PolyError> {
        let mut exps: Vec<&Vec<u32>> = self.terms.keys().map(|(u, _)| u).collect();
        exps.sort();
        exps.dedup();
        let top = exps
            .iter()
            .copied()
            .find(|v| exps.iter().all(|u| u == v || strictly_below(u, v)))
            .ok_or(PolyError::Undefined)?;
        let m = self.module_at(top);
        let sigma = rank_permutation(top);
        for k in 0..self.ctx.dim() {
            let witness = ModuleVector::basis(&self.ctx, k).act_perm(&sigma);
            if let Some(c) = m.ratio_to(&witness) {
                return Ok(LeadingMonomial {
                    weight: top.clone(),
                    tableau: k,
                    witness,
                    scalar: c,
                });
            }
        }
        Err(PolyError::Undefined)
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            shape: self.ctx.shape.parts().to_vec(),
            n: self.ctx.n,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(u, k, c)| TermJson {
                    exp: u.clone(),
                    tableau: k,
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// Parses the JSON form.
    pub fn from_json(j: &PolyJson) -> Result<VvPoly, PolyError> {
        let shape = Partition::new(j.shape.clone())
            .map_err(|_| PolyError::BadTableauIndex(usize::MAX))?;
        let ctx = ShapeContext::get(&shape);
        let mut p = VvPoly::zero(&ctx);
        for t in &j.terms {
            if t.exp.len() != ctx.n {
                return Err(PolyError::BadExponent {
                    expected: ctx.n,
                    got: t.exp.len(),
                });
            }
            if t.tableau >= ctx.dim() {
                return Err(PolyError::BadTableauIndex(t.tableau));
            }
            p.add_term(t.exp.clone(), t.tableau, &t.coeff);
        }
        Ok(p)
    }
}

fn output_order(u: &[u32], k: usize, w: &[u32], l: usize) -> Ordering {
    let du: u32 = u.iter().sum();
    let dw: u32 = w.iter().sum();
    dw.cmp(&du)
        .then_with(|| sort_decreasing(w).cmp(&sort_decreasing(u)))
        .then_with(|| w.cmp(u))
        .then_with(|| k.cmp(&l))
}

/// Dominance `u ≤ v`: equal sums and every partial sum of `u` at most that
/// of `v`.
pub fn dominated(u: &[u32], v: &[u32]) -> bool {
    if u.len() != v.len() || u.iter().sum::<u32>() != v.iter().sum::<u32>() {
        return false;
    }
    let (mut su, mut sv) = (0u32, 0u32);
    for (a, b) in u.iter().zip(v) {
        su += a;
        sv += b;
        if su > sv {
            return false;
        }
    }
    true
}

/// The strict order `u ⊲ v`: `u⁺ ≺ v⁺`, or `u⁺ = v⁺` and `u ≺ v`.
pub fn strictly_below(u: &[u32], v: &[u32]) -> bool {
    if u == v {
        return false;
    }
    let (up, vp) = (sort_decreasing(u), sort_decreasing(v));
    if up != vp {
        dominated(&up, &vp)
    } else {
        dominated(u, v)
    }
}

/// Leading monomial `x^v ⊗ τσ_v` of a polynomial, with its coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct LeadingMonomial {
    pub weight: Weight,
    pub tableau: usize,
    pub witness: ModuleVector,
    pub scalar: AlphaFraction,
}

/// JSON form of a term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub tableau: usize,
    pub coeff: AlphaFraction,
}

/// JSON form of a vector-valued polynomial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub shape: Vec<usize>,
    #[serde(rename = "N")]
    pub n: usize,
    pub terms: Vec<TermJson>,
}

/// The contravariant form: `⟨1⊗τ, 1⊗ρ⟩ = δ_{τρ} ||τ||²` and `x_i` adjoint to
/// `D_i`. Each term `x^u ⊗ ρ` of `p` is paired with `q D^u`, where the
/// commuting Dunkl operators are applied one variable at a time, peeling
/// the first variable with a positive exponent.
pub fn pairing(p: &VvPoly, q: &VvPoly) -> Result<AlphaFraction, PolyError> {
    pairing_with_order(p, q, false)
}

/// [`pairing`] peeling the last variable with a positive exponent first
/// when `from_last` is set; the value does not depend on the choice.
pub fn pairing_with_order(p: &VvPoly, q: &VvPoly, from_last: bool) -> Result<AlphaFraction, PolyError> {
    p.check_shape(q)?;
    let ctx = p.ctx.clone();
    let mut memo: HashMap<Vec<u32>, VvPoly> = HashMap::new();
    memo.insert(vec![0; ctx.n], q.clone());
    fn derive(
        u: &[u32],
        memo: &mut HashMap<Vec<u32>, VvPoly>,
        from_last: bool,
    ) -> VvPoly {
        if let Some(r) = memo.get(u) {
            return r.clone();
        }
        let pos: Vec<usize> = (0..u.len()).filter(|&k| u[k] > 0).collect();
        let i = if from_last { *pos.last().expect("nonzero u") } else { pos[0] };
        let mut w = u.to_vec();
        w[i] -= 1;
        let r = derive(&w, memo, from_last).dunkl(i + 1);
        memo.insert(u.to_vec(), r.clone());
        r
    }
    let zero = vec![0u32; ctx.n];
    let mut acc = AlphaFraction::zero();
    for ((u, k), c) in &p.terms {
        let qd = derive(u, &mut memo, from_last);
        let base = qd.coeff(&zero, *k);
        if !base.is_zero() {
            acc += &(c * &base).scale(ctx.norm(*k));
        }
    }
    Ok(acc)
}

/// A polynomial in `t_1, …, t_N` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarPoly {
    n: usize,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl ScalarPoly {
    pub fn zero(n: usize) -> Self {
        ScalarPoly {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; n], &BigRational::one());
        p
    }

    /// The variable `t_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut u = vec![0; n];
        u[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term(u, &BigRational::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &HashMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, u: &[u32]) -> BigRational {
        self.terms.get(u).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, u: Vec<u32>, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(u).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), c);
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> ScalarPoly {
        let mut out = ScalarPoly::zero(self.n);
        if r.is_zero() {
            return out;
        }
        for (u, c) in &self.terms {
            out.terms.insert(u.clone(), c * r);
        }
        out
    }

    pub fn mul(&self, other: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero(self.n);
        for (u, c) in &self.terms {
            for (w, d) in &other.terms {
                let e: Vec<u32> = u.iter().zip(w).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c * d));
            }
        }
        out
    }

    /// Right action of a permutation on the variables.
    pub fn act_vars(&self, sigma: &[usize]) -> ScalarPoly {
        let mut out = ScalarPoly::zero(self.n);
        for (u, c) in &self.terms {
            out.terms.insert(crate::combinatorics::permute(u, sigma), c.clone());
        }
        out
    }

    /// Swap of `t_i` and `t_{i+1}`.
    pub fn act_si(&self, i: usize) -> ScalarPoly {
        self.act_vars(&transposition(self.n, i, i + 1))
    }

    /// Jucys–Murphy element `ω_i = Σ_{j>i} s_{ij}` acting on the variables.
    pub fn jucys_murphy(&self, i: usize) -> ScalarPoly {
        let mut out = ScalarPoly::zero(self.n);
        for j in i + 1..=self.n {
            out = out.add(&self.act_vars(&transposition(self.n, i, j)));
        }
        out
    }

    /// Leading exponent with respect to `⊴`, if one dominates all others.
    pub fn leading_exponent(&self) -> Option<Vec<u32>> {
        let exps: Vec<&Vec<u32>> = self.terms.keys().collect();
        exps.iter()
            .find(|v| exps.iter().all(|u| u == *v || strictly_below(u, v)))
            .map(|v| (*v).clone())
    }

    /// Terms sorted in the same order as [`VvPoly::sorted_terms`].
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| output_order(a.0, 0, b.0, 0));
        v
    }

    /// Keeps only the first `m` variables (all exponents beyond must be 0).
    pub fn truncate_vars(&self, m: usize) -> ScalarPoly {
        let mut out = ScalarPoly::zero(m);
        for (u, c) in &self.terms {
            debug_assert!(u[m..].iter().all(|&e| e == 0));
            out.terms.insert(u[..m].to_vec(), c.clone());
        }
        out
    }

    /// Scalar `r` with `self = r · other`, if any.
    pub fn ratio_to(&self, other: &ScalarPoly) -> Option<BigRational> {
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (u0, c0) = other.terms.iter().next()?;
        let r = self.terms.get(u0)? / c0;
        for (u, c) in &other.terms {
            if self.terms.get(u)? != &(c * &r) {
                return None;
            }
        }
        Some(r)
    }
}

/// Seminormal polynomials `P_τ` for every tableau of a shape, indexed like
/// [`enumerate_rst`].
///
/// `P_{τ_λ}` is the product over columns of `t_{τ[k]} - t_{τ[l]}` for every
/// pair of rows `k > l`; an edge `τ → τ^{(i,i+1)}` with `0 < b_τ[i] < 1`
/// multiplies by `s_i - b_τ[i]`.
pub fn seminormal_all(shape: &Partition) -> Vec<ScalarPoly> {
    let n = shape.size();
    let tabs = enumerate_rst(shape);
    let index = index_tableaux(&tabs);
    let root = tau_lambda(shape);
    let mut p = ScalarPoly::one(n);
    let t = shape.transpose();
    for (c, &h) in t.parts().iter().enumerate() {
        for k in 0..h {
            for l in 0..k {
                let hi = root.rows()[k][c];
                let lo = root.rows()[l][c];
                let diff = ScalarPoly::var(n, hi).add(&ScalarPoly::var(n, lo).scale(&rat(-1, 1)));
                p = p.mul(&diff);
            }
        }
    }
    let mut out: Vec<Option<ScalarPoly>> = vec![None; tabs.len()];
    let r = index[root.rows()];
    out[r] = Some(p);
    let mut queue = VecDeque::from([r]);
    while let Some(a) = queue.pop_front() {
        let ct = tabs[a].content_vector();
        for i in 1..n {
            let d = ct[i - 1] - ct[i];
            if d >= 2 {
                let b = rat(1, d);
                let t2 = tabs[a].swap_entries(i, i + 1).expect("non-adjacent entries");
                let k = index[t2.rows()];
                if out[k].is_none() {
                    let pa = out[a].as_ref().expect("visited");
                    let next = pa.act_si(i).add(&pa.scale(&-b));
                    out[k] = Some(next);
                    queue.push_back(k);
                }
            }
        }
    }
    out.into_iter()
        .map(|p| p.expect("every tableau is reachable from the root"))
        .collect()
}

/// The seminormal polynomial `P_τ`.
pub fn seminormal(t: &Rst) -> ScalarPoly {
    let tabs = enumerate_rst(t.shape());
    let k = tabs.iter().position(|x| x == t).expect("tableau of its shape");
    seminormal_all(t.shape()).swap_remove(k)
}

/// Coefficient of `∏_{i>M} t_i^{h(cl(i)) - rw(i)}` in `p`, where `h(c)` is the
/// length of column `c` of the shape of `τ`. The result is a polynomial in
/// `t_1, …, t_M`. The extraction is defined for every `τ`; the
/// proportionality to `P_{τ↓M}` holds when `τ` has property R(M).
pub fn restrict_scalar(p: &ScalarPoly, t: &Rst, m: usize) -> ScalarPoly {
    let n = t.size();
    let heights = t.shape().transpose();
    let pos = t.positions();
    let target: Vec<u32> = (m + 1..=n)
        .map(|i| {
            let (r, c) = pos[i - 1];
            (heights.parts()[c] - (r + 1)) as u32
        })
        .collect();
    let mut out = ScalarPoly::zero(m);
    for (u, c) in &p.terms {
        if u[m..] == target[..] {
            out.terms.insert(u[..m].to_vec(), c.clone());
        }
    }
    out
}

/// Ratio `r` with `restrict_scalar(P_τ, τ, M) = r · P_{τ↓M}`.
pub fn seminormal_restriction_ratio(t: &Rst, m: usize) -> Result<BigRational, PolyError> {
    let small = t.restrict(m).map_err(|_| PolyError::PropertyRViolation(m))?;
    let extracted = restrict_scalar(&seminormal(t), t, m);
    let base = seminormal(&small);
    extracted.ratio_to(&base).ok_or(PolyError::PropertyRViolation(m))
}

/// True when `r` is a nonzero rational.
pub fn is_nonzero_rational(r: &BigRational) -> bool {
    !r.is_zero() && (r.is_positive() || r.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{parse_tableau, partitions_of};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Rst {
        parse_tableau(s).unwrap()
    }

    fn lin(a: i64, b: i64) -> AlphaFraction {
        AlphaFraction::linear(a, b)
    }

    fn frac(p: i64, q: i64) -> AlphaFraction {
        AlphaFraction::from_ratio(p, q)
    }

    /// Random polynomial of degree at most `deg` with small α-linear
    /// coefficients over the given shape.
    fn random_poly(shape: &Partition, deg: u32, terms: usize, rng: &mut ChaCha8Rng) -> VvPoly {
        let ctx = ShapeContext::get(shape);
        let mut p = VvPoly::zero(&ctx);
        for _ in 0..terms {
            let mut u = vec![0u32; ctx.n()];
            let d = rng.gen_range(0..=deg);
            for _ in 0..d {
                let j = rng.gen_range(0..ctx.n());
                u[j] += 1;
            }
            let k = rng.gen_range(0..ctx.dim());
            let c = lin(rng.gen_range(-2..=2), rng.gen_range(-3..=3));
            p.add_term(u, k, &c);
        }
        p
    }

    #[test]
    fn murphy_action_examples() {
        let tau = t("3,1;2");
        let ctx = ShapeContext::get(tau.shape());
        let m = ModuleVector::of_tableau(&tau).murphy_si(1);
        let mut want = ModuleVector::zero(&ctx);
        want.add_coord(0, &frac(1, 2));
        want.add_coord(1, &AlphaFraction::one());
        assert_eq!(m, want);
        // same row: +1, same column: -1
        let row = ModuleVector::of_tableau(&t("3,2,1"));
        assert_eq!(row.murphy_si(1), row);
        assert_eq!(ModuleVector::of_tableau(&tau).murphy_si(2), ModuleVector::of_tableau(&tau).scale(&frac(-1, 1)));
    }

    #[test]
    fn jucys_murphy_eigenvalues() {
        for n in 1..=5 {
            for shape in partitions_of(n) {
                let ctx = ShapeContext::get(&shape);
                for k in 0..ctx.dim() {
                    let b = ModuleVector::basis(&ctx, k);
                    for i in 1..=n {
                        let ct = ctx.contents(k)[i - 1];
                        assert_eq!(b.jucys_murphy(i), b.scale(&AlphaFraction::from_int(ct)));
                    }
                }
            }
        }
    }

    #[test]
    fn murphy_action_is_a_representation() {
        // Coxeter relations on every shape with N ≤ 5.
        for n in 2..=5 {
            for shape in partitions_of(n) {
                let ctx = ShapeContext::get(&shape);
                for k in 0..ctx.dim() {
                    let b = ModuleVector::basis(&ctx, k);
                    for i in 1..n {
                        assert_eq!(b.murphy_si(i).murphy_si(i), b);
                        if i + 1 < n {
                            let l = b.murphy_si(i).murphy_si(i + 1).murphy_si(i);
                            let r = b.murphy_si(i + 1).murphy_si(i).murphy_si(i + 1);
                            assert_eq!(l, r);
                        }
                        for j in i + 2..n {
                            assert_eq!(b.murphy_si(i).murphy_si(j), b.murphy_si(j).murphy_si(i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_action_example() {
        // x1^3 x2 ⊗ τ under (s_2 ⊗ s_1): variables by s_2, module by s_1.
        let tau = t("3,1;2");
        let p = VvPoly::monomial_times(vec![3, 1, 0], &ModuleVector::of_tableau(&tau));
        let q = p.act_vars(&transposition(3, 2, 3)).act_module(&transposition(3, 1, 2));
        let ctx = p.context().clone();
        let mut want = VvPoly::zero(&ctx);
        want.add_term(vec![3, 0, 1], 0, &frac(1, 2));
        want.add_term(vec![3, 0, 1], 1, &AlphaFraction::one());
        assert_eq!(q, want);
        // The diagonal operator s_2 ⊗ s_2 instead gives b = -1.
        let r = p.act_si(2);
        let mut want2 = VvPoly::zero(&ctx);
        want2.add_term(vec![3, 0, 1], 0, &frac(-1, 1));
        assert_eq!(r, want2);
    }

    #[test]
    fn tableau_norms() {
        assert_eq!(tableau_norm(&t("3,2,1")), AlphaFraction::one());
        assert_eq!(tableau_norm(&t("3,2;1")), frac(3, 4));
        assert_eq!(tableau_norm(&t("3,1;2")), AlphaFraction::one());
    }

    #[test]
    fn affine_on_constants() {
        let tau = t("3,1;2");
        let p = VvPoly::constant(&tau).act_affine();
        let ctx = p.context().clone();
        let mut want = VvPoly::zero(&ctx);
        want.add_term(vec![0, 0, 1], 0, &frac(-1, 2));
        want.add_term(vec![0, 0, 1], 1, &AlphaFraction::one());
        assert_eq!(p, want);
    }

    #[test]
    fn dunkl_basics() {
        let tau = t("1");
        let ctx = ShapeContext::get(tau.shape());
        let mut p = VvPoly::zero(&ctx);
        p.add_term(vec![1], 0, &AlphaFraction::one());
        assert_eq!(p.dunkl(1), VvPoly::constant(&tau));
        assert!(VvPoly::constant(&t("3,1;2")).dunkl(2).is_zero());
    }

    #[test]
    fn cherednik_on_constants() {
        for shape in partitions_of(4) {
            let ctx = ShapeContext::get(&shape);
            for k in 0..ctx.dim() {
                let p = VvPoly::constant(&ctx.tableaux()[k]);
                for i in 1..=4 {
                    let ct = ctx.contents(k)[i - 1];
                    let u_want = AlphaFraction::one() + AlphaFraction::from_int(ct) / AlphaFraction::alpha();
                    assert_eq!(p.cherednik(i), p.scale(&u_want));
                    assert_eq!(p.xi_tilde(i), p.scale(&AlphaFraction::from_int(ct)));
                }
            }
        }
    }

    #[test]
    fn xi_tilde_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for shape in partitions_of(4) {
            for _ in 0..5 {
                let p = random_poly(&shape, 3, 6, &mut rng);
                for i in 1..=4 {
                    let a = AlphaFraction::alpha();
                    let want = p.cherednik(i).scale(&a).sub(&p.scale(&a));
                    assert_eq!(p.xi_tilde(i), want);
                }
            }
        }
    }

    #[test]
    fn cherednik_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let inv_alpha = AlphaFraction::alpha().inv().unwrap();
        for shape in partitions_of(4) {
            for _ in 0..4 {
                let p = random_poly(&shape, 3, 6, &mut rng);
                for i in 1..4 {
                    // (s_i⊗s_i) U_i = U_{i+1} (s_i⊗s_i) + 1/α
                    let lhs = p.act_si(i).cherednik(i);
                    let rhs = p.cherednik(i + 1).act_si(i).add(&p.scale(&inv_alpha));
                    assert_eq!(lhs, rhs);
                    // (s_i⊗s_i) U_{i+1} = U_i (s_i⊗s_i) - 1/α
                    let lhs = p.act_si(i).cherednik(i + 1);
                    let rhs = p.cherednik(i).act_si(i).sub(&p.scale(&inv_alpha));
                    assert_eq!(lhs, rhs);
                    // s_i commutes with U_j for j ∉ {i, i+1}
                    for j in 1..=4 {
                        if j != i && j != i + 1 {
                            assert_eq!(p.act_si(i).cherednik(j), p.cherednik(j).act_si(i));
                        }
                    }
                }
                // Ψ ξ̃_i = ξ̃_{i+1} Ψ and Ψ ξ̃_N = (ξ̃_1 + α) Ψ
                for i in 1..4 {
                    assert_eq!(p.act_affine().xi_tilde(i), p.xi_tilde(i + 1).act_affine());
                }
                let rhs = p.xi_tilde(1).act_affine().add(&p.act_affine().scale(&AlphaFraction::alpha()));
                assert_eq!(p.act_affine().xi_tilde(4), rhs);
            }
        }
    }

    #[test]
    fn cherednik_operators_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for shape in partitions_of(3).into_iter().chain(partitions_of(4)) {
            let n = shape.size();
            for _ in 0..3 {
                let p = random_poly(&shape, 3, 5, &mut rng);
                for i in 1..=n {
                    for j in i + 1..=n {
                        assert_eq!(p.cherednik(i).cherednik(j), p.cherednik(j).cherednik(i));
                    }
                }
            }
        }
    }

    #[test]
    fn sign_representation_reduction() {
        // For λ = [1^N] the Dunkl operator is the scalar one at -α, i.e. the
        // λ = [N] operator with α ↦ -α.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 2..=4 {
            let col = Partition::new(vec![1; n]).unwrap();
            let row = Partition::new(vec![n]).unwrap();
            let row_ctx = ShapeContext::get(&row);
            for _ in 0..5 {
                let p = random_poly(&col, 3, 6, &mut rng);
                let as_row = p.reindex(&row_ctx, |_| 0);
                for i in 1..=n {
                    let lhs = p.dunkl(i).reindex(&row_ctx, |_| 0);
                    let rhs = as_row.negate_alpha().dunkl(i).negate_alpha();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pairing_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for shape in partitions_of(3).into_iter().chain(partitions_of(4)) {
            let n = shape.size();
            for _ in 0..3 {
                let p = random_poly(&shape, 2, 4, &mut rng);
                let q = random_poly(&shape, 3, 6, &mut rng);
                let r = random_poly(&shape, 3, 6, &mut rng);
                // adjointness of x_i and D_i
                for i in 1..=n {
                    assert_eq!(pairing(&p.mul_var(i), &q).unwrap(), pairing(&p, &q.dunkl(i)).unwrap());
                }
                // symmetry and peeling-order independence on equal degrees
                let q3 = q.homogeneous_part(3);
                let r3 = r.homogeneous_part(3);
                assert_eq!(pairing(&q3, &r3).unwrap(), pairing(&r3, &q3).unwrap());
                assert_eq!(pairing(&q3, &r3).unwrap(), pairing_with_order(&q3, &r3, true).unwrap());
                // self-adjointness of U_i
                for i in 1..=n {
                    assert_eq!(pairing(&q3.cherednik(i), &r3).unwrap(), pairing(&q3, &r3.cherednik(i)).unwrap());
                }
            }
        }
        let a = VvPoly::constant(&t("3,1;2"));
        let b = VvPoly::constant(&t("3,2;1"));
        assert!(pairing(&a, &b).unwrap().is_zero());
        assert_eq!(pairing(&b, &b).unwrap(), frac(3, 4));
    }

    #[test]
    fn order_examples() {
        assert!(strictly_below(&[0, 3, 1], &[3, 1, 0]));
        assert!(!strictly_below(&[3, 1, 0], &[0, 3, 1]));
        assert!(strictly_below(&[1, 1, 1], &[2, 1, 0]));
        assert!(!strictly_below(&[2, 0, 0], &[1, 1, 1]) || dominated(&[2, 0, 0], &[1, 1, 1]));
    }

    #[test]
    fn seminormal_examples() {
        let p = seminormal(&t("4,3;2,1"));
        let mut want = ScalarPoly::zero(4);
        for (u, c) in [
            ([1, 1, 0, 0], rat(1, 1)),
            ([1, 0, 0, 1], rat(-1, 2)),
            ([0, 1, 1, 0], rat(-1, 2)),
            ([0, 0, 1, 1], rat(1, 1)),
            ([0, 1, 0, 1], rat(-1, 2)),
            ([1, 0, 1, 0], rat(-1, 2)),
        ] {
            want.add_term(u.to_vec(), &c);
        }
        assert_eq!(p, want);
        assert_eq!(seminormal(&t("4,3,2,1")), ScalarPoly::one(4));
        let big = t("9,8,6,4;7,3,2;5,1");
        assert_eq!(seminormal(&big).leading_exponent().unwrap(), vec![2, 1, 1, 0, 2, 0, 1, 0, 0]);
        let q = seminormal(&t("5,3;4,2;1"));
        assert_eq!(q.leading_exponent().unwrap(), vec![2, 1, 0, 1, 0]);
    }

    #[test]
    fn seminormal_eigen_and_leading() {
        for n in 1..=5 {
            for shape in partitions_of(n) {
                let tabs = enumerate_rst(&shape);
                let ps = seminormal_all(&shape);
                for (tab, p) in tabs.iter().zip(&ps) {
                    let ct = tab.content_vector();
                    for i in 1..=n {
                        assert_eq!(p.jucys_murphy(i), p.scale(&rat(ct[i - 1], 1)));
                    }
                    let want: Vec<u32> = (1..=n).map(|i| tab.row_of(i) as u32 - 1).collect();
                    assert_eq!(p.leading_exponent().unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn restriction_of_seminormal() {
        let big = t("9,8,6,4;7,3,2;5,1");
        let r = restrict_scalar(&seminormal(&big), &big, 5);
        let mut want = ScalarPoly::zero(5);
        want.add_term(vec![1, 0, 0, 0, 0], &rat(1, 6));
        want.add_term(vec![0, 1, 0, 0, 0], &rat(-1, 12));
        want.add_term(vec![0, 0, 1, 0, 0], &rat(-1, 12));
        assert_eq!(r, want);
        let small = seminormal(&t("3,2;1"));
        let mut padded = ScalarPoly::zero(5);
        for (u, c) in small.terms() {
            let mut w = u.clone();
            w.extend([0, 0]);
            padded.add_term(w, c);
        }
        assert_eq!(r.ratio_to(&padded), Some(rat(1, 6)));
        let x = t("4,2;3,1");
        assert_eq!(restrict_scalar(&seminormal(&x), &x, 4), seminormal(&x));
        for n in 2..=5 {
            for shape in partitions_of(n) {
                for tab in enumerate_rst(&shape) {
                    for m in 1..=n {
                        if tab.has_property_r(m) {
                            let ratio = seminormal_restriction_ratio(&tab, m).unwrap();
                            assert!(is_nonzero_rational(&ratio));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shifted_operators_on_constants() {
        let tau = t("3,1;2");
        let p = VvPoly::constant(&tau).shifted_psi_hat();
        let ctx = p.context().clone();
        let mut want = VvPoly::zero(&ctx);
        for (u, c) in [([0, 0, 1], AlphaFraction::one()), ([0, 0, 0], AlphaFraction::from_int(2))] {
            want.add_term(u.to_vec(), 0, &(&c * &frac(-1, 2)));
            want.add_term(u.to_vec(), 1, &c);
        }
        assert_eq!(p, want);
        for n in 1..=4 {
            for shape in partitions_of(n) {
                let ctx = ShapeContext::get(&shape);
                for k in 0..ctx.dim() {
                    let c = VvPoly::constant(&ctx.tableaux()[k]);
                    for i in 1..=n {
                        let ct = ctx.contents(k)[i - 1];
                        assert_eq!(c.xi_hat(i), c.scale(&AlphaFraction::from_int(ct)));
                    }
                }
            }
        }
    }

    #[test]
    fn varsigma_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for shape in partitions_of(4) {
            for _ in 0..4 {
                let p = random_poly(&shape, 3, 6, &mut rng);
                for i in 1..4 {
                    assert_eq!(p.varsigma(i).varsigma(i), p);
                    if i < 3 {
                        let l = p.varsigma(i).varsigma(i + 1).varsigma(i);
                        let r = p.varsigma(i + 1).varsigma(i).varsigma(i + 1);
                        assert_eq!(l, r);
                    }
                    // Leibniz rules
                    let lhs = p.mul_var(i).varsigma(i);
                    let rhs = p.varsigma(i).mul_var(i + 1).add(&p);
                    assert_eq!(lhs, rhs);
                    let lhs = p.mul_var(i + 1).varsigma(i);
                    let rhs = p.varsigma(i).mul_var(i).sub(&p);
                    assert_eq!(lhs, rhs);
                    for j in 1..=4 {
                        if j != i && j != i + 1 {
                            assert_eq!(p.mul_var(j).varsigma(i), p.varsigma(i).mul_var(j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn xi_hat_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let one = AlphaFraction::one();
        for shape in partitions_of(3).into_iter().chain(partitions_of(4)) {
            let n = shape.size();
            for _ in 0..2 {
                let p = random_poly(&shape, 2, 5, &mut rng);
                for i in 1..=n {
                    for j in i + 1..=n {
                        assert_eq!(p.xi_hat(i).xi_hat(j), p.xi_hat(j).xi_hat(i));
                    }
                }
                for i in 1..n {
                    // ξ̂_i ς_i = ς_i ξ̂_{i+1} + 1
                    let lhs = p.xi_hat(i).varsigma(i);
                    let rhs = p.varsigma(i).xi_hat(i + 1).add(&p.scale(&one));
                    assert_eq!(lhs, rhs, "i={i}");
                    for j in 1..=n {
                        if j != i && j != i + 1 {
                            assert_eq!(p.xi_hat(j).varsigma(i), p.varsigma(i).xi_hat(j));
                        }
                    }
                }
                // Ψ̂ ξ̂_i = ξ̂_{i+1} Ψ̂ and Ψ̂ ξ̂_1 = (ξ̂_N - α) Ψ̂, as right actions
                for i in 1..n {
                    assert_eq!(p.xi_hat(i + 1).shifted_psi_hat(), p.shifted_psi_hat().xi_hat(i));
                }
                let lhs = p.xi_hat(1).shifted_psi_hat();
                let rhs = p.shifted_psi_hat().xi_hat(n).sub(&p.shifted_psi_hat().scale(&AlphaFraction::alpha()));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let shape = Partition::new(vec![2, 1]).unwrap();
        let p = random_poly(&shape, 3, 8, &mut rng);
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(VvPoly::from_json(&back).unwrap(), p);
        assert_eq!(serde_json::to_string(&VvPoly::from_json(&back).unwrap().to_json()).unwrap(), j);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn act_si_is_an_involution(seed in any::<u64>(), i in 1usize..4, k in 0usize..5) {
            let shapes = partitions_of(4);
            let shape = &shapes[k % shapes.len()];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = random_poly(shape, 3, 6, &mut rng);
            prop_assert_eq!(p.act_si(i).act_si(i), p);
        }

        #[test]
        fn divided_differences_divide(u in prop::collection::vec(0u32..5, 3), i in 0usize..3, j in 0usize..3) {
            prop_assume!(i != j);
            // (x_i - x_j) * ∂_ij x^u == x^u - x^{u s_ij}
            let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
            for (w, s) in divided_difference(&u, i, j) {
                let mut a = w.clone();
                a[i] += 1;
                *acc.entry(a).or_default() += s;
                let mut b = w;
                b[j] += 1;
                *acc.entry(b).or_default() -= s;
            }
            *acc.entry(u.clone()).or_default() -= 1;
            *acc.entry(swap_exp(&u, i, j)).or_default() += 1;
            prop_assert!(acc.values().all(|&v| v == 0));
        }
    }
}
