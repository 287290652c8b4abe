//! Partitions, reverse standard tableaux, weights and their rank
//! permutations, fillings and standardization.
//!
//! Conventions used throughout the crate:
//!
//! * tableau rows are stored longest first (row 1 is the longest row);
//! * the box in row `r`, column `c` (both counted from 1) has content `c - r`;
//! * permutations are stored as image lists `[σ(1), …, σ(N)]` with 1-based
//!   values and act on vectors on the right: `(vσ)[i] = v[σ(i)]`;
//! * weight and content vectors are 0-indexed in memory, so entry `i` of the
//!   mathematical vector lives at index `i - 1`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by combinatorial constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("tableau does not have property R({0})")]
    PropertyRViolation(usize),
}

/// A weight vector `v ∈ N^N`.
pub type Weight = Vec<u32>;

/// A permutation as its 1-based image list.
pub type Permutation = Vec<usize>;

/// Integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombinatoricsError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Validates and builds a partition.
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.is_empty() {
            return Err(CombinatoricsError::InvalidShape("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(CombinatoricsError::InvalidShape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The size N.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition (column lengths).
    pub fn transpose(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_count(&self) -> BigInt {
        let t = self.transpose();
        let mut num = BigInt::from(1);
        for k in 1..=self.size() {
            num *= k;
        }
        let mut den = BigInt::from(1);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                den *= (len - c - 1) + (t.parts[c] - r - 1) + 1;
            }
        }
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Reverse standard tableau: entries `1..=N`, strictly decreasing along rows
/// and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Rst {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauJson> for Rst {
    type Error = CombinatoricsError;
    fn try_from(t: TableauJson) -> Result<Self, Self::Error> {
        let rst = Rst::from_rows(t.rows)?;
        if rst.shape.parts != t.shape {
            return Err(CombinatoricsError::InvalidTableau("shape does not match rows".into()));
        }
        Ok(rst)
    }
}

impl From<Rst> for TableauJson {
    fn from(t: Rst) -> Self {
        TableauJson {
            shape: t.shape.parts,
            rows: t.rows,
        }
    }
}

impl Rst {
    /// Builds a tableau from rows (longest first), validating every invariant.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, CombinatoricsError> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| CombinatoricsError::InvalidTableau(e.to_string()))?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n || seen[e] {
                return Err(CombinatoricsError::InvalidTableau(format!(
                    "entries must be exactly 1..={n}"
                )));
            }
            seen[e] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            for c in 0..row.len() {
                if c + 1 < row.len() && row[c] <= row[c + 1] {
                    return Err(CombinatoricsError::InvalidTableau(format!(
                        "row {} is not strictly decreasing",
                        r + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] <= row[c] {
                    return Err(CombinatoricsError::InvalidTableau(format!(
                        "column {} is not strictly decreasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(Rst { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Row-reading word, row 1 first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// 0-based (row, column) of every entry, indexed by `entry - 1`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                pos[e - 1] = (r, c);
            }
        }
        pos
    }

    /// Row `rw(i)` of entry `i`, counted from 1 at the longest row.
    pub fn row_of(&self, i: usize) -> usize {
        self.positions()[i - 1].0 + 1
    }

    /// Column `cl(i)` of entry `i`, counted from 1.
    pub fn col_of(&self, i: usize) -> usize {
        self.positions()[i - 1].1 + 1
    }

    /// Content vector: entry `i - 1` holds `cl(i) - rw(i)`.
    pub fn content_vector(&self) -> Vec<i64> {
        content_of_rows(&self.rows)
    }

    /// Number of pairs `i < j` with `rw(i) > rw(j)`.
    pub fn inversions(&self) -> usize {
        let pos = self.positions();
        let mut count = 0;
        for i in 0..pos.len() {
            for j in i + 1..pos.len() {
                if pos[i].0 > pos[j].0 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Exchanges entries `a` and `b`; `None` if the result is not an RST.
    pub fn swap_entries(&self, a: usize, b: usize) -> Option<Rst> {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| if e == a { b } else if e == b { a } else { e })
                    .collect()
            })
            .collect();
        Rst::from_rows(rows).ok()
    }

    /// Transposed tableau (rows become columns).
    pub fn transpose(&self) -> Rst {
        let t = self.shape.transpose();
        let rows = (0..t.len())
            .map(|c| (0..t.parts[c]).map(|r| self.rows[r][c]).collect())
            .collect();
        Rst {
            shape: t,
            rows,
        }
    }

    /// Cells occupied by entries `≤ m`, as 0-based (row, column).
    fn cells_at_most(&self, m: usize) -> Vec<(usize, usize, usize)> {
        let mut cells = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e <= m {
                    cells.push((r, c, e));
                }
            }
        }
        cells
    }

    /// True iff removing the entries `m+1, …, N` leaves cells that, once
    /// translated to the origin, form a partition shape.
    pub fn has_property_r(&self, m: usize) -> bool {
        self.restrict(m).is_ok()
    }

    /// The tableau `τ↓M` on entries `1..=m`, translated to the origin.
    pub fn restrict(&self, m: usize) -> Result<Rst, CombinatoricsError> {
        if m == 0 || m > self.size() {
            return Err(CombinatoricsError::PropertyRViolation(m));
        }
        let cells = self.cells_at_most(m);
        let r0 = cells.iter().map(|x| x.0).min().unwrap_or(0);
        let c0 = cells.iter().map(|x| x.1).min().unwrap_or(0);
        let nrows = cells.iter().map(|x| x.0).max().unwrap_or(0) + 1 - r0;
        let mut rows: Vec<Vec<Option<usize>>> = vec![Vec::new(); nrows];
        for &(r, c, e) in &cells {
            let row = &mut rows[r - r0];
            let cc = c - c0;
            if row.len() <= cc {
                row.resize(cc + 1, None);
            }
            row[cc] = Some(e);
        }
        let mut out = Vec::with_capacity(nrows);
        for row in rows {
            if row.is_empty() || row.iter().any(|x| x.is_none()) {
                return Err(CombinatoricsError::PropertyRViolation(m));
            }
            out.push(row.into_iter().flatten().collect::<Vec<_>>());
        }
        Rst::from_rows(out).map_err(|_| CombinatoricsError::PropertyRViolation(m))
    }

    /// Compact text form: rows longest first, `;` between rows.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for Rst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Parses the text form `3,1;2` (rows longest first).
pub fn parse_tableau(s: &str) -> Result<Rst, CombinatoricsError> {
    let rows = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|_| CombinatoricsError::InvalidTableau(format!("bad entry '{e}'")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Rst::from_rows(rows)
}

/// Content vector of an RST.
pub fn content_vector(t: &Rst) -> Vec<i64> {
    t.content_vector()
}

/// Contents `cl(i) - rw(i)` of any filling of a shape by `1..=N`, each
/// value once. The monotonicity of an RST is not needed here.
pub fn content_of_rows(rows: &[Vec<usize>]) -> Vec<i64> {
    let n: usize = rows.iter().map(|r| r.len()).sum();
    let mut ct = vec![0; n];
    for (r, row) in rows.iter().enumerate() {
        for (c, &e) in row.iter().enumerate() {
            ct[e - 1] = c as i64 - r as i64;
        }
    }
    ct
}

/// The root tableau `τ_λ`: columns filled from the longest row upward, left
/// to right, with `N, N-1, …, 1`.
pub fn tau_lambda(shape: &Partition) -> Rst {
    let n = shape.size();
    let mut rows: Vec<Vec<usize>> = shape.parts.iter().map(|&p| vec![0; p]).collect();
    let t = shape.transpose();
    let mut next = n;
    for (c, &h) in t.parts.iter().enumerate() {
        for row in rows.iter_mut().take(h) {
            row[c] = next;
            next -= 1;
        }
    }
    Rst {
        shape: shape.clone(),
        rows,
    }
}

/// All reverse standard tableaux of a shape, sorted lexicographically by
/// their row-reading word (row 1 first).
pub fn enumerate_rst(shape: &Partition) -> Vec<Rst> {
    fn rec(
        shape: &[usize],
        filled: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if next == 0 {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r];
            if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                rows[r].push(next);
                rec(shape, filled, rows, next - 1, out);
                rows[r].pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    rec(&shape.parts, &mut vec![0; shape.len()], &mut rows, shape.size(), &mut out);
    let mut tabs: Vec<Rst> = out
        .into_iter()
        .map(|rows| Rst {
            shape: shape.clone(),
            rows,
        })
        .collect();
    tabs.sort_by_key(|t| t.reading_word());
    tabs
}

/// Decreasing rearrangement `v⁺`.
pub fn sort_decreasing(v: &[u32]) -> Weight {
    let mut s = v.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// The rank permutation `σ_v` with `v[i] = v⁺[σ_v[i]]`: positions are
/// labeled from the largest value down, equal values left to right.
pub fn rank_permutation(v: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..v.len()).collect();
    order.sort_by(|&a, &b| v[b].cmp(&v[a]).then(a.cmp(&b)));
    let mut sigma = vec![0; v.len()];
    for (rank, &pos) in order.iter().enumerate() {
        sigma[pos] = rank + 1;
    }
    sigma
}

/// Applies a permutation on the right: `(vσ)[i] = v[σ(i)]`.
pub fn permute<T: Clone>(v: &[T], sigma: &[usize]) -> Vec<T> {
    sigma.iter().map(|&s| v[s - 1].clone()).collect()
}

/// Product `στ` of permutations, `(στ)(i) = σ(τ(i))`.
pub fn compose(sigma: &[usize], tau: &[usize]) -> Permutation {
    tau.iter().map(|&t| sigma[t - 1]).collect()
}

/// Inverse permutation.
pub fn inverse(sigma: &[usize]) -> Permutation {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s - 1] = i + 1;
    }
    inv
}

/// Number of inversions of a permutation (its Coxeter length).
pub fn permutation_length(sigma: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                count += 1;
            }
        }
    }
    count
}

/// Reduced word `[i1, …, ik]` with `σ = s_{i1} ⋯ s_{ik}`.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    // Bubble sort σ to the identity by right multiplications; the
    // swaps, read backwards, spell σ.
    let mut w = sigma.to_vec();
    let mut swaps = Vec::new();
    let n = w.len();
    loop {
        let mut done = true;
        for i in 0..n.saturating_sub(1) {
            if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                swaps.push(i + 1);
                done = false;
            }
        }
        if done {
            break;
        }
    }
    swaps.reverse();
    swaps
}

/// The cyclic permutation `θ = s_1 s_2 ⋯ s_{N-1} = [2, 3, …, N, 1]`.
pub fn theta(n: usize) -> Permutation {
    (0..n).map(|i| (i + 1) % n + 1).collect()
}

/// Affine raising `[v_1, …, v_N]Ψ = [v_2, …, v_N, v_1 + 1]`.
pub fn affine_psi(v: &[u32]) -> Weight {
    let mut out = v[1..].to_vec();
    out.push(v[0] + 1);
    out
}

/// Inverse of [`affine_psi`]; `None` when `v_N = 0`.
pub fn affine_psi_inverse(v: &[u32]) -> Option<Weight> {
    let last = *v.last()?;
    if last == 0 {
        return None;
    }
    let mut out = Vec::with_capacity(v.len());
    out.push(last - 1);
    out.extend_from_slice(&v[..v.len() - 1]);
    Some(out)
}

/// `ε(x) = (|x| + |x + 1| - 1) / 2`.
pub fn epsilon(x: i64) -> i64 {
    (x.abs() + (x + 1).abs() - 1) / 2
}

/// Number of edges in any path from `0^N` to `v`: `|v| + Σ_{i<j} ε(v_i - v_j)`.
pub fn step_count(v: &[u32]) -> u64 {
    let mut total: i64 = v.iter().map(|&x| x as i64).sum();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            total += epsilon(v[i] as i64 - v[j] as i64);
        }
    }
    total as u64
}

/// Murphy coefficient `b_τ[i] = 1 / (CT_τ[i] - CT_τ[i+1])`.
pub fn b_coefficient(t: &Rst, i: usize) -> BigRational {
    let ct = t.content_vector();
    BigRational::new(BigInt::from(1), BigInt::from(ct[i - 1] - ct[i]))
}

/// A filling of a shape by non-negative integers, rows longest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FillingJson", into = "FillingJson")]
pub struct Filling {
    shape: Partition,
    grid: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<FillingJson> for Filling {
    type Error = CombinatoricsError;
    fn try_from(f: FillingJson) -> Result<Self, Self::Error> {
        let t = Filling::from_rows(f.rows)?;
        if t.shape.parts != f.shape {
            return Err(CombinatoricsError::InvalidFilling("shape does not match rows".into()));
        }
        Ok(t)
    }
}

impl From<Filling> for FillingJson {
    fn from(f: Filling) -> Self {
        FillingJson {
            shape: f.shape.parts,
            rows: f.grid,
        }
    }
}

impl Filling {
    /// Builds a filling from rows, longest first.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, CombinatoricsError> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| CombinatoricsError::InvalidFilling(e.to_string()))?;
        Ok(Filling { shape, grid: rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.grid
    }

    /// True if values strictly increase up every column.
    pub fn is_column_strict(&self) -> bool {
        (1..self.grid.len()).all(|r| (0..self.grid[r].len()).all(|c| self.grid[r][c] > self.grid[r - 1][c]))
    }

    /// True if values strictly increase along every row.
    pub fn is_row_strict(&self) -> bool {
        self.grid.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
    }

    /// True if values weakly increase along rows and up columns.
    pub fn is_semistandard_shape(&self) -> bool {
        self.grid.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
            && (1..self.grid.len())
                .all(|r| (0..self.grid[r].len()).all(|c| self.grid[r][c] >= self.grid[r - 1][c]))
    }

    /// All values sorted decreasingly (the partition `λ_T` padded by zeros).
    pub fn sorted_values(&self) -> Weight {
        let v: Vec<u32> = self.grid.iter().flatten().copied().collect();
        sort_decreasing(&v)
    }

    /// Compact text form: rows longest first, `;` between rows.
    pub fn to_text(&self) -> String {
        self.grid
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Parses the text form `0,0;1,1` (rows longest first).
pub fn parse_filling(s: &str) -> Result<Filling, CombinatoricsError> {
    let rows = s
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| CombinatoricsError::InvalidFilling(format!("bad entry '{e}'")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Filling::from_rows(rows)
}

/// The filling `T(τ, v)`: the box of entry `i` receives `v⁺[i]`.
pub fn filling(t: &Rst, v: &[u32]) -> Result<Filling, CombinatoricsError> {
    if v.len() != t.size() {
        return Err(CombinatoricsError::LengthMismatch {
            expected: t.size(),
            got: v.len(),
        });
    }
    let vp = sort_decreasing(v);
    let grid = t
        .rows
        .iter()
        .map(|row| row.iter().map(|&e| vp[e - 1]).collect())
        .collect();
    Ok(Filling {
        shape: t.shape.clone(),
        grid,
    })
}

/// Standardization of a filling: the box `b` receives the number of boxes
/// with a larger value, plus the boxes with the same value in a higher row,
/// plus the boxes with the same value in the same row at column `≥` that of
/// `b`.
pub fn standardize(t: &Filling) -> Rst {
    let mut cells = Vec::new();
    for (r, row) in t.grid.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            cells.push((r, c, x));
        }
    }
    let rows = t
        .grid
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, &x)| {
                    cells
                        .iter()
                        .filter(|&&(r2, c2, y)| y > x || (y == x && (r2 > r || (r2 == r && c2 >= c))))
                        .count()
                })
                .collect()
        })
        .collect();
    Rst {
        shape: t.shape.clone(),
        rows,
    }
}

/// Index of every tableau of a list, keyed by its rows.
pub fn index_tableaux(tabs: &[Rst]) -> HashMap<Vec<Vec<usize>>, usize> {
    tabs.iter()
        .enumerate()
        .map(|(k, t)| (t.rows.clone(), k))
        .collect()
}

/// Parses a comma-separated weight such as `0,1,0`.
pub fn parse_weight(s: &str) -> Result<Weight, CombinatoricsError> {
    s.split(',')
        .map(|e| {
            e.trim()
                .parse::<u32>()
                .map_err(|_| CombinatoricsError::InvalidFilling(format!("bad weight entry '{e}'")))
        })
        .collect()
}

/// Parses a comma-separated partition such as `2,1`.
pub fn parse_shape(s: &str) -> Result<Partition, CombinatoricsError> {
    let parts = s
        .split(',')
        .map(|e| {
            e.trim()
                .parse::<usize>()
                .map_err(|_| CombinatoricsError::InvalidShape(format!("bad part '{e}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts)
}
