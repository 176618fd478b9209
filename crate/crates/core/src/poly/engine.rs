//! Capped, targeted expansion of products of `(x_a - x_b)` factors.
//!
//! Terms are kept as `(packed exponent key, coefficient)` pairs sorted by key.
//! Multiplying by `x_a` adds a constant to every key without carries, so the
//! two halves produced by a factor stay sorted and are combined by a linear
//! merge.
//!
//! Two prunings keep the support small:
//!
//! * upper: an exponent never exceeds its cap (or its target), because
//!   exponents only grow as more factors are absorbed;
//! * lower: a targeted variable `v` with `r` unabsorbed factors left must
//!   already have exponent at least `target(v) - r`.
//!
//! Once every factor of a targeted variable is absorbed, both bounds pin its
//! exponent to the target, which is exactly coefficient extraction.
//!
//! Coefficients are `i128`: multiplying by one difference factor at most
//! doubles the sum of absolute coefficients and pruning only removes terms,
//! so a product of `f` factors never exceeds `2^f` in absolute value. Products
//! with more than [`MAX_FAST_FACTORS`] factors, or keys wider than 128 bits,
//! use the arbitrary-precision path.

use num_bigint::BigInt;

use super::factor::{CapVector, FactorProduct};
use super::monomial::{Monomial, Var};
use super::polynomial::Polynomial;

pub const MAX_FAST_FACTORS: usize = 126;

/// Summary of one expansion run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExpansionStats {
    pub factors: usize,
    pub peak_terms: usize,
    pub arbitrary_precision: bool,
}

struct Layout {
    offset: Vec<u32>,
    mask: Vec<u128>,
}

impl Layout {
    fn new(bounds: &[u32]) -> Option<Layout> {
        let mut offset = Vec::with_capacity(bounds.len());
        let mut mask = Vec::with_capacity(bounds.len());
        let mut at = 0u32;
        for &b in bounds {
            let width = 32 - b.leading_zeros();
            if at + width > 128 {
                return None;
            }
            offset.push(at);
            mask.push(if width == 0 { 0 } else { (1u128 << width) - 1 });
            at += width;
        }
        Some(Layout { offset, mask })
    }

    #[inline]
    fn get(&self, key: u128, v: Var) -> u32 {
        ((key >> self.offset[v]) & self.mask[v]) as u32
    }

    #[inline]
    fn unit(&self, v: Var) -> u128 {
        1u128 << self.offset[v]
    }
}

struct Bounds {
    upper: Vec<u32>,
    target: Vec<Option<u32>>,
}

/// η_J of the (capped) expansion, where `target[v] = Some(e)` selects the
/// terms with exponent `e` on `v` and drops `v`.
pub(crate) fn run(
    fp: &FactorProduct,
    caps: &CapVector,
    target: &[Option<u32>],
    order: &[usize],
) -> (Polynomial, ExpansionStats) {
    let n = fp.num_vars();
    let occ = fp.occurrences();
    let mut stats = ExpansionStats {
        factors: fp.len(),
        ..Default::default()
    };
    if target.iter().zip(&occ).any(|(t, &o)| t.is_some_and(|t| t > o)) {
        return (Polynomial::zero(), stats);
    }
    let upper: Vec<u32> = (0..n)
        .map(|v| {
            let mut u = occ[v];
            if let Some(c) = caps.cap(v) {
                u = u.min(c);
            }
            if let Some(t) = target[v] {
                u = u.min(t);
            }
            u
        })
        .collect();
    if target.iter().zip(&upper).any(|(t, &u)| t.is_some_and(|t| t > u)) {
        // a target above its cap selects nothing
        return (Polynomial::zero(), stats);
    }
    let bounds = Bounds {
        upper,
        target: target.to_vec(),
    };
    if fp.len() <= MAX_FAST_FACTORS {
        if let Some(layout) = Layout::new(&bounds.upper) {
            let p = run_packed(fp, &bounds, &occ, order, &layout, &mut stats);
            return (p, stats);
        }
    }
    stats.arbitrary_precision = true;
    let p = run_sparse(fp, &bounds, &occ, order, &mut stats);
    (p, stats)
}

fn run_packed(
    fp: &FactorProduct,
    bounds: &Bounds,
    occ: &[u32],
    order: &[usize],
    layout: &Layout,
    stats: &mut ExpansionStats,
) -> Polynomial {
    let mut rem = occ.to_vec();
    let mut terms: Vec<(u128, i128)> = vec![(0, 1)];
    let mut left: Vec<(u128, i128)> = Vec::new();
    let mut right: Vec<(u128, i128)> = Vec::new();
    let mut merged: Vec<(u128, i128)> = Vec::new();
    stats.peak_terms = 1;
    for &fi in order {
        let (a, b) = fp.factors()[fi];
        rem[a] -= 1;
        rem[b] -= 1;
        left.clear();
        right.clear();
        shift_filter(&terms, layout, bounds, &rem, a, b, false, &mut left);
        shift_filter(&terms, layout, bounds, &rem, b, a, true, &mut right);
        merge_into(&left, &right, &mut merged);
        std::mem::swap(&mut terms, &mut merged);
        stats.peak_terms = stats.peak_terms.max(terms.len());
        if terms.is_empty() {
            break;
        }
    }
    let mut out = Polynomial::zero();
    for (key, c) in terms {
        let m = Monomial::new(
            (0..fp.num_vars())
                .filter(|&v| bounds.target[v].is_none())
                .map(|v| (v, layout.get(key, v))),
        );
        out.add_term(m, BigInt::from(c));
    }
    out
}

/// Terms multiplied by `x_up` (negated when `negate`), keeping only those
/// that respect the cap on `up` and the lower bound on `other`.
#[allow(clippy::too_many_arguments)]
fn shift_filter(
    terms: &[(u128, i128)],
    layout: &Layout,
    bounds: &Bounds,
    rem: &[u32],
    up: Var,
    other: Var,
    negate: bool,
    out: &mut Vec<(u128, i128)>,
) {
    let cap = bounds.upper[up];
    let unit = layout.unit(up);
    let need = bounds.target[other].map(|t| t.saturating_sub(rem[other]));
    out.reserve(terms.len());
    for &(key, c) in terms {
        if layout.get(key, up) >= cap {
            continue;
        }
        if let Some(need) = need {
            if layout.get(key, other) < need {
                continue;
            }
        }
        out.push((key + unit, if negate { -c } else { c }));
    }
}

fn merge_into(a: &[(u128, i128)], b: &[(u128, i128)], out: &mut Vec<(u128, i128)>) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ka, ca) = a[i];
        let (kb, cb) = b[j];
        if ka < kb {
            out.push((ka, ca));
            i += 1;
        } else if kb < ka {
            out.push((kb, cb));
            j += 1;
        } else {
            let c = ca + cb;
            if c != 0 {
                out.push((ka, c));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

fn run_sparse(
    fp: &FactorProduct,
    bounds: &Bounds,
    occ: &[u32],
    order: &[usize],
    stats: &mut ExpansionStats,
) -> Polynomial {
    let mut rem = occ.to_vec();
    let mut p = Polynomial::one();
    stats.peak_terms = 1;
    for &fi in order {
        let (a, b) = fp.factors()[fi];
        rem[a] -= 1;
        rem[b] -= 1;
        p = p.mul_difference(a, b).retain(|m| {
            (0..fp.num_vars()).all(|v| {
                let e = m.exponent(v);
                e <= bounds.upper[v] && bounds.target[v].is_none_or(|t| e + rem[v] >= t)
            })
        });
        stats.peak_terms = stats.peak_terms.max(p.term_count());
    }
    let j = Monomial::new(bounds.target.iter().enumerate().filter_map(|(v, t)| t.map(|t| (v, t))));
    let targeted: Vec<Var> = (0..fp.num_vars()).filter(|&v| bounds.target[v].is_some()).collect();
    // zero targets are not stored in `j`; drop terms that still mention them
    p.retain(|m| targeted.iter().all(|&v| m.exponent(v) == j.exponent(v)))
        .eta_partial(&j)
}
