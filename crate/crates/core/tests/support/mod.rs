//! Independent reference computations shared by the integration tests.

use vvjack_core::coeffield::AlphaFraction;
use vvjack_core::combinatorics::{rank_permutation, Rst};
use vvjack_core::jack::weights_up_to;
use vvjack_core::vvpoly::{ModuleVector, ShapeContext, TermKey, VvPoly};
use vvjack_core::ybgraph::spectral_vector;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<AlphaFraction>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the null space of the reduced system.
pub fn null_space(rows: &[Vec<AlphaFraction>], pivots: &[usize], ncols: usize) -> Vec<Vec<AlphaFraction>> {
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![AlphaFraction::zero(); ncols];
            v[f] = AlphaFraction::one();
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// The joint eigenvectors of `ξ̃_1, …, ξ̃_N` with eigenvalues `ζ_{v,τ}` on the
/// span of `x^u ⊗ ρ`, `|u| ≤ |v|`, computed by elimination on the matrices of
/// the operators. Returns every basis vector of the joint eigenspace.
pub fn joint_eigenspace(v: &[u32], tau: &Rst) -> Vec<VvPoly> {
    let ctx = ShapeContext::get(tau.shape());
    let n = ctx.n();
    let deg: u32 = v.iter().sum();
    let basis: Vec<TermKey> = weights_up_to(n, deg)
        .into_iter()
        .flat_map(|u| (0..ctx.dim()).map(move |k| (u.clone(), k)))
        .collect();
    let index: std::collections::HashMap<&TermKey, usize> =
        basis.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let zeta = spectral_vector(tau, v);
    let m = basis.len();
    let mut system: Vec<Vec<AlphaFraction>> = Vec::new();
    for i in 1..=n {
        // rows indexed by output basis element e, columns by input b
        let mut block = vec![vec![AlphaFraction::zero(); m]; m];
        for (b, key) in basis.iter().enumerate() {
            let mut e = VvPoly::zero(&ctx);
            e.add_term(key.0.clone(), key.1, &AlphaFraction::one());
            let img = e.xi_tilde(i);
            for (k2, c) in img.terms() {
                let row = index[k2];
                block[row][b] = &block[row][b] + c;
            }
            block[b][b] = &block[b][b] - &zeta[i - 1];
        }
        system.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    let pivots = row_reduce(&mut system, m);
    null_space(&system, &pivots, m)
        .into_iter()
        .map(|vec| {
            let mut p = VvPoly::zero(&ctx);
            for (key, c) in basis.iter().zip(vec) {
                p.add_term(key.0.clone(), key.1, &c);
            }
            p
        })
        .collect()
}

/// Scales `p` so that its coefficient vector at `x^v` equals `τσ_v`.
pub fn normalize_to_leading(p: &VvPoly, v: &[u32], tau: &Rst) -> Option<VvPoly> {
    let ctx = p.context();
    let k = ctx.index_of(tau)?;
    let witness = ModuleVector::basis(ctx, k).act_perm(&rank_permutation(v));
    let c = p.module_at(v).ratio_to(&witness)?;
    Some(p.scale(&c.inv().ok()?))
}
