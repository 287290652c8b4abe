//! Verification suites run by `vvjack verify`.
//!
//! Each suite enumerates every tableau of every shape of size at most
//! `--max-n` and every weight of degree at most `--max-deg`, checks one
//! family of identities exactly, and reports the number of checks and
//! failures. The randomized suites draw from a ChaCha stream seeded by
//! `--seed`, so a given command line always checks the same cases.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use vvjack_core::coeffield::AlphaFraction;
use vvjack_core::combinatorics::{affine_psi, enumerate_rst, filling, partitions_of, Rst, Weight};
use vvjack_core::jack::{
    antisymmetric_jack, jack_along, nonsymmetric_jack, norm_ratio_along, norm_squared,
    phi_tilde, propagate_vanishings, restrict_jack, shifted_jack, symmetric_jack, vanishes_at,
    vanishing_vector, weights_up_to,
};
use vvjack_core::vvpoly::{pairing, strictly_below, ShapeContext, VvPoly};
use vvjack_core::ybgraph::{path_by_choice, spectral_vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Eigenvalues, leading monomial and triangularity of J_{v,τ}.
    Eigen,
    /// Jacks built along distinct random paths agree.
    Paths,
    /// The Cherednik–Dunkl operators commute on random polynomials.
    Commute,
    /// The pairing of each Jack with itself equals the norm recursion.
    Norm,
    /// Symmetric and antisymmetric Jacks are (anti)invariant.
    Sym,
    /// Restriction to fewer variables gives the smaller Jack.
    Restrict,
    /// Top-degree parts of shifted Jacks are the homogeneous Jacks.
    Shifted,
    /// Shifted Jacks vanish at their vanishing vectors.
    Vanish,
    All,
}

const SUITES: [Suite; 8] = [
    Suite::Eigen,
    Suite::Paths,
    Suite::Commute,
    Suite::Norm,
    Suite::Sym,
    Suite::Restrict,
    Suite::Shifted,
    Suite::Vanish,
];

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}: {} checks, {} failures", self.suite, self.checks, self.failures);
        if let Some(f) = &self.first_failure {
            s.push_str(&format!(" (first: {f})"));
        }
        s
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report<T: Sync>(name: &str, items: &[T], check: impl Fn(&T) -> Check + Sync + Send) -> SuiteReport {
    let results: Vec<Check> = items.par_iter().map(check).collect();
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    SuiteReport {
        suite: name.to_string(),
        checks: items.len(),
        failures: failures.len(),
        first_failure: failures.into_iter().next(),
    }
}

/// Every `(τ, v)` with `|τ| ≤ max_n` and `|v| ≤ max_deg`.
fn cases(max_n: usize, max_deg: u32) -> Vec<(Rst, Weight)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for shape in partitions_of(n) {
            for tau in enumerate_rst(&shape) {
                for v in weights_up_to(n, max_deg) {
                    out.push((tau.clone(), v));
                }
            }
        }
    }
    out
}

fn eigen(max_n: usize, max_deg: u32) -> SuiteReport {
    report("eigen", &cases(max_n, max_deg), |(tau, v)| {
        let j = nonsymmetric_jack(v, tau).map_err(|e| format!("{tau} {v:?}: {e}"))?;
        let z = spectral_vector(tau, v);
        for i in 1..=v.len() {
            ensure(j.xi_tilde(i) == j.scale(&z[i - 1]), || format!("{tau} {v:?}: eigenvalue at i={i}"))?;
        }
        let lm = j.leading_monomial().map_err(|e| format!("{tau} {v:?}: {e}"))?;
        ensure(
            lm.weight == *v && Some(lm.tableau) == j.context().index_of(tau) && lm.scalar.is_one(),
            || format!("{tau} {v:?}: leading monomial"),
        )?;
        for (u, _) in j.terms().keys() {
            ensure(u == v || strictly_below(u, v), || format!("{tau} {v:?}: exponent {u:?}"))?;
        }
        Ok(())
    })
}

fn paths(max_n: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut pairs = Vec::new();
    // Weights of degree at most 1 have a single path, so a bounded number of
    // draws is attempted before giving up on small ranges.
    for _ in 0..10_000 {
        if pairs.len() == 50 || max_n < 2 || max_deg < 2 {
            break;
        }
        let n = rng.gen_range(2..=max_n);
        let shapes = partitions_of(n);
        let tabs = enumerate_rst(&shapes[rng.gen_range(0..shapes.len())]);
        let tau = tabs[rng.gen_range(0..tabs.len())].clone();
        let weights = weights_up_to(n, max_deg);
        let v = weights[rng.gen_range(0..weights.len())].clone();
        let p1 = path_by_choice(&v, |m| rng.gen_range(0..m.len()));
        let p2 = path_by_choice(&v, |m| rng.gen_range(0..m.len()));
        if p1 != p2 {
            pairs.push((tau, v, p1, p2));
        }
    }
    report("paths", &pairs, |(tau, v, p1, p2)| {
        let a = jack_along(tau, p1).map_err(|e| e.to_string())?.ok_or("path fell")?;
        let b = jack_along(tau, p2).map_err(|e| e.to_string())?.ok_or("path fell")?;
        ensure(a.0.weight == *v && b.0.weight == *v, || format!("{tau} {v:?}: endpoint"))?;
        ensure(a.1 == b.1, || format!("{tau} {v:?}: paths disagree"))?;
        ensure(norm_ratio_along(tau, p1) == norm_ratio_along(tau, p2), || {
            format!("{tau} {v:?}: norm ratios disagree")
        })
    })
}

fn commute(max_n: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut polys = Vec::new();
    if max_n >= 2 {
        for _ in 0..100 {
            let n = rng.gen_range(2..=max_n);
            let shapes = partitions_of(n);
            let ctx = ShapeContext::get(&shapes[rng.gen_range(0..shapes.len())]);
            let mut p = VvPoly::zero(&ctx);
            for _ in 0..6 {
                let mut u = vec![0u32; n];
                for _ in 0..rng.gen_range(0..=max_deg) {
                    u[rng.gen_range(0..n)] += 1;
                }
                let c = AlphaFraction::linear(rng.gen_range(-3..=3), rng.gen_range(-5..=5));
                p.add_term(u, rng.gen_range(0..ctx.dim()), &c);
            }
            polys.push(p);
        }
    }
    report("commute", &polys, |p| {
        for i in 1..=p.n() {
            for j in i + 1..=p.n() {
                ensure(p.cherednik(i).cherednik(j) == p.cherednik(j).cherednik(i), || {
                    format!("[U_{i}, U_{j}] != 0 on a polynomial in {} variables", p.n())
                })?;
            }
        }
        Ok(())
    })
}

fn norm(max_n: usize, max_deg: u32) -> SuiteReport {
    report("norm", &cases(max_n, max_deg), |(tau, v)| {
        let j = nonsymmetric_jack(v, tau).map_err(|e| e.to_string())?;
        let p = pairing(&j, &j).map_err(|e| e.to_string())?;
        let r = norm_squared(v, tau).map_err(|e| e.to_string())?;
        ensure(p == r, || format!("{tau} {v:?}: pairing {p} vs recursion {r}"))
    })
}

fn sym(max_n: usize, max_deg: u32) -> SuiteReport {
    let mut fillings = Vec::new();
    for (tau, v) in cases(max_n, max_deg) {
        let t = filling(&tau, &v).expect("lengths agree");
        if (t.is_column_strict() || t.is_row_strict()) && !fillings.contains(&t) {
            fillings.push(t);
        }
    }
    report("sym", &fillings, |t| {
        let minus = AlphaFraction::from_int(-1);
        let n = t.shape().size();
        if t.is_column_strict() {
            let p = symmetric_jack(t).map_err(|e| format!("{t}: {e}"))?;
            for i in 1..n {
                ensure(p.act_si(i) == p, || format!("{t}: not invariant under s_{i}"))?;
            }
        }
        if t.is_row_strict() {
            let p = antisymmetric_jack(t).map_err(|e| format!("{t}: {e}"))?;
            for i in 1..n {
                ensure(p.act_si(i) == p.scale(&minus), || format!("{t}: not anti-invariant under s_{i}"))?;
            }
        }
        Ok(())
    })
}

fn restrict(max_n: usize, max_deg: u32) -> SuiteReport {
    let mut items = Vec::new();
    for n in 2..=max_n {
        for shape in partitions_of(n) {
            for tau in enumerate_rst(&shape) {
                for m in 1..n {
                    let Ok(small) = tau.restrict(m) else { continue };
                    for w in weights_up_to(m, max_deg) {
                        let mut v = w.clone();
                        v.resize(n, 0);
                        items.push((tau.clone(), small.clone(), m, v, w));
                    }
                }
            }
        }
    }
    report("restrict", &items, |(tau, small, m, v, w)| {
        let lhs = restrict_jack(v, tau, *m).map_err(|e| format!("{tau} {v:?} M={m}: {e}"))?;
        let rhs = nonsymmetric_jack(w, small).map_err(|e| e.to_string())?;
        ensure(lhs == *rhs, || format!("{tau} {v:?} M={m}: restriction differs"))
    })
}

fn shifted(max_n: usize, max_deg: u32) -> SuiteReport {
    report("shifted", &cases(max_n, max_deg), |(tau, v)| {
        let s = shifted_jack(v, tau).map_err(|e| e.to_string())?;
        let h = nonsymmetric_jack(v, tau).map_err(|e| e.to_string())?;
        let d: u32 = v.iter().sum();
        ensure(s.homogeneous_part(d) == *h && s.degree() == Some(d), || format!("{tau} {v:?}: top degree"))
    })
}

fn vanish(max_n: usize, max_deg: u32) -> SuiteReport {
    let items: Vec<(Rst, Weight)> = cases(max_n, max_deg)
        .into_iter()
        .filter(|(_, v)| v.iter().any(|&e| e > 0))
        .collect();
    report("vanish", &items, |(tau, v)| {
        let j = shifted_jack(v, tau).map_err(|e| e.to_string())?;
        let vv = vanishing_vector(v, tau).map_err(|e| e.to_string())?;
        ensure(vanishes_at(&j, &vv.pattern()), || format!("{tau} {v:?}: vanishing vector"))?;
        for p in propagate_vanishings(v, tau).map_err(|e| e.to_string())? {
            ensure(vanishes_at(&j, &p), || format!("{tau} {v:?}: propagated point"))?;
        }
        let next = vanishing_vector(&affine_psi(v), tau).map_err(|e| e.to_string())?;
        ensure(next.entries == phi_tilde(&vv.entries), || format!("{tau} {v:?}: affine relation"))
    })
}

/// Runs the selected suite (or all of them, in a fixed order).
pub fn run(suite: Suite, max_n: usize, max_deg: u32, seed: u64) -> Vec<SuiteReport> {
    let selected: Vec<Suite> = if suite == Suite::All { SUITES.to_vec() } else { vec![suite] };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    selected
        .into_iter()
        .map(|s| match s {
            Suite::Eigen => eigen(max_n, max_deg),
            Suite::Paths => paths(max_n, max_deg, &mut rng),
            Suite::Commute => commute(max_n, max_deg, &mut rng),
            Suite::Norm => norm(max_n, max_deg),
            Suite::Sym => sym(max_n, max_deg),
            Suite::Restrict => restrict(max_n, max_deg),
            Suite::Shifted => shifted(max_n, max_deg),
            Suite::Vanish => vanish(max_n, max_deg),
            Suite::All => unreachable!("expanded above"),
        })
        .collect()
}
