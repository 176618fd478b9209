use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::engine::{self, ExpansionStats};
use super::monomial::{Monomial, Var};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Per-variable maximum exponent; `None` means unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapVector {
    caps: Vec<Option<u32>>,
}

impl CapVector {
    pub fn unbounded(num_vars: usize) -> Self {
        CapVector {
            caps: vec![None; num_vars],
        }
    }

    pub fn uniform(num_vars: usize, cap: u32) -> Self {
        CapVector {
            caps: vec![Some(cap); num_vars],
        }
    }

    pub fn from_caps(caps: Vec<Option<u32>>) -> Self {
        CapVector { caps }
    }

    /// Caps equal to the exponents of `j` (zero for variables absent from it).
    pub fn from_monomial(j: &Monomial, num_vars: usize) -> Self {
        CapVector {
            caps: j.to_dense(num_vars).into_iter().map(Some).collect(),
        }
    }

    pub fn cap(&self, v: Var) -> Option<u32> {
        self.caps.get(v).copied().flatten()
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        m.iter().all(|(v, e)| self.cap(v).is_none_or(|c| e <= c))
    }
}

/// An unexpanded product of linear factors `(x_a - x_b)`. Order and
/// orientation are preserved as given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorProduct {
    num_vars: usize,
    factors: Vec<(Var, Var)>,
}

impl FactorProduct {
    pub fn new(num_vars: usize, factors: Vec<(Var, Var)>) -> Result<Self> {
        for &(a, b) in &factors {
            if a == b {
                return Err(Error::input(format!("factor (x{a} - x{a}) is identically zero")));
            }
            if a >= num_vars || b >= num_vars {
                return Err(Error::input(format!(
                    "factor (x{a} - x{b}) uses a variable outside 0..{num_vars}"
                )));
            }
        }
        Ok(FactorProduct { num_vars, factors })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn factors(&self) -> &[(Var, Var)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Degree of the expanded product (zero products aside).
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Number of factors mentioning each variable.
    pub fn occurrences(&self) -> Vec<u32> {
        let mut occ = vec![0u32; self.num_vars];
        for &(a, b) in &self.factors {
            occ[a] += 1;
            occ[b] += 1;
        }
        occ
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.factors.iter().any(|&(a, b)| a == v || b == v)
    }

    /// Unordered factor pairs with multiplicities.
    pub fn pair_multiset(&self) -> BTreeMap<(Var, Var), usize> {
        let mut ms = BTreeMap::new();
        for &(a, b) in &self.factors {
            *ms.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        ms
    }

    /// Same product with factor `i` written as `(x_b - x_a)`.
    pub fn with_flipped(&self, i: usize) -> FactorProduct {
        let mut factors = self.factors.clone();
        let (a, b) = factors[i];
        factors[i] = (b, a);
        FactorProduct {
            num_vars: self.num_vars,
            factors,
        }
    }

    /// Concatenation of two products over the same variables.
    pub fn concat(&self, other: &FactorProduct) -> FactorProduct {
        FactorProduct {
            num_vars: self.num_vars.max(other.num_vars),
            factors: self.factors.iter().chain(&other.factors).copied().collect(),
        }
    }

    /// Sequential expansion without pruning; used as an independent check.
    pub fn expand_naive(&self) -> Polynomial {
        self.factors
            .iter()
            .fold(Polynomial::one(), |p, &(a, b)| p.mul_difference(a, b))
    }

    pub fn expand(&self) -> Polynomial {
        self.expand_capped(&CapVector::unbounded(self.num_vars))
    }

    /// Expansion in which terms exceeding `caps` may be dropped; every
    /// monomial within caps carries its exact coefficient.
    pub fn expand_capped(&self, caps: &CapVector) -> Polynomial {
        let target = vec![None; self.num_vars];
        let order = self.greedy_order(&target);
        engine::run(self, caps, &target, &order).0
    }

    /// η_J of the expanded product: the polynomial in the variables outside
    /// `j` multiplying `j`.
    pub fn eta(&self, j: &Monomial) -> Polynomial {
        self.eta_with_stats(j).0
    }

    pub fn eta_with_stats(&self, j: &Monomial) -> (Polynomial, ExpansionStats) {
        let target = self.sparse_target(j);
        let order = self.greedy_order(&target);
        engine::run(self, &CapVector::unbounded(self.num_vars), &target, &order)
    }

    /// Coefficient of `j` in the expanded product.
    pub fn coefficient(&self, j: &Monomial) -> BigInt {
        self.coefficient_with_stats(j).0
    }

    pub fn coefficient_with_stats(&self, j: &Monomial) -> (BigInt, ExpansionStats) {
        let target = self.full_target(j);
        let order = self.greedy_order(&target);
        self.coefficient_in_order(j, &order)
    }

    /// Coefficient of `j`, absorbing factors in the given order (a
    /// permutation of `0..len`).
    pub fn coefficient_in_order(&self, j: &Monomial, order: &[usize]) -> (BigInt, ExpansionStats) {
        let mut seen = vec![false; self.len()];
        assert!(
            order.len() == self.len()
                && order
                    .iter()
                    .all(|&i| i < self.len() && !std::mem::replace(&mut seen[i], true)),
            "factor order must be a permutation"
        );
        let target = self.full_target(j);
        let (p, stats) = engine::run(self, &CapVector::unbounded(self.num_vars), &target, order);
        let c = p.as_constant().expect("all variables targeted");
        (c, stats)
    }

    fn full_target(&self, j: &Monomial) -> Vec<Option<u32>> {
        let mut t: Vec<Option<u32>> = j.to_dense(self.num_vars).into_iter().map(Some).collect();
        // variables beyond num_vars cannot occur: targeting them at e > 0 gives zero
        t.resize(self.num_vars.max(t.len()), Some(0));
        if t.len() > self.num_vars && t[self.num_vars..].iter().any(|&e| e != Some(0)) {
            return vec![Some(u32::MAX); self.num_vars];
        }
        t.truncate(self.num_vars);
        t
    }

    fn sparse_target(&self, j: &Monomial) -> Vec<Option<u32>> {
        if j.max_var().is_some_and(|v| v >= self.num_vars) {
            return vec![Some(u32::MAX); self.num_vars];
        }
        let mut t = vec![None; self.num_vars];
        for (v, e) in j.iter() {
            t[v] = Some(e);
        }
        t
    }

    /// Factor schedule that closes variables early: repeatedly take the
    /// factor sharing the most variables with those already touched, then
    /// the one whose variables have the fewest factors left, then the lowest
    /// index.
    pub fn greedy_order(&self, target: &[Option<u32>]) -> Vec<usize> {
        let mut rem = self.occurrences();
        let mut touched = vec![false; self.num_vars];
        let mut used = vec![false; self.len()];
        let mut order = Vec::with_capacity(self.len());
        for _ in 0..self.len() {
            let mut best: Option<(usize, (i64, i64, i64))> = None;
            for (i, &(a, b)) in self.factors.iter().enumerate() {
                if used[i] {
                    continue;
                }
                let shared = touched[a] as i64 + touched[b] as i64;
                let closing = (rem[a].min(rem[b])) as i64;
                let targeted = target[a].is_some() as i64 + target[b].is_some() as i64;
                let score = (-shared, closing, -targeted);
                if best.as_ref().is_none_or(|(_, s)| score < *s) {
                    best = Some((i, score));
                }
            }
            let (i, _) = best.expect("an unused factor remains");
            let (a, b) = self.factors[i];
            used[i] = true;
            touched[a] = true;
            touched[b] = true;
            rem[a] -= 1;
            rem[b] -= 1;
            order.push(i);
        }
        order
    }
}

/// One staged-extraction step: η_{var^exp}(partial), allowed only once no
/// factor still to be multiplied in mentions `var`.
pub fn eliminate_variable(remaining: &FactorProduct, partial: &Polynomial, var: Var, exp: u32) -> Result<Polynomial> {
    if remaining.mentions(var) {
        return Err(Error::Sequencing(format!(
            "variable {var} still occurs in an unabsorbed factor"
        )));
    }
    if exp == 0 {
        return Ok(partial.at_zero(var));
    }
    Ok(partial.eta_partial(&Monomial::power(var, exp)))
}
