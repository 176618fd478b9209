use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::claims::ClaimSetup;
use crate::coloring::{ListAssignment, ListProblem};
use crate::error::{Error, Result};
use crate::graph::ConflictGraph;
use crate::poly::{FactorProduct, Monomial};

/// Largest E₀ size accepted by [`soundness_trial`].
pub const MAX_TRIAL_EDGES: usize = 14;

/// Machine-checkable choosability witness: if the coefficient of `j` in the
/// product of `factors` is `eta_value != 0`, `deg j` equals the number of
/// factors, and every edge keeps more than `i_e` colors, a conflict-free
/// choice from the surviving lists exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub edge_labels: Vec<String>,
    pub factors: FactorProduct,
    pub j: Monomial,
    pub eta_value: BigInt,
    pub s_bounds: Vec<u32>,
    pub k: u32,
}

impl Certificate {
    pub fn from_setup(setup: &ClaimSetup, eta_value: BigInt, k: u32) -> Self {
        Certificate {
            edge_labels: setup.labels(),
            factors: setup.product.clone(),
            j: setup.j.clone(),
            eta_value,
            s_bounds: setup.s_bounds.clone(),
            k,
        }
    }

    pub fn vars(&self) -> usize {
        self.edge_labels.len()
    }

    /// Conflict graph over the certificate's variables, one pair per factor.
    pub fn conflict_graph(&self) -> ConflictGraph {
        ConflictGraph::from_pairs((0..self.vars()).collect(), self.factors.factors().iter().copied())
    }

    fn well_formed(&self) -> Result<()> {
        let t = self.vars();
        if self.factors.num_vars() != t {
            return Err(Error::input(format!(
                "factors range over {} variables, certificate has {t} edges",
                self.factors.num_vars()
            )));
        }
        if self.s_bounds.len() != t {
            return Err(Error::input("one s bound per edge required"));
        }
        if self.j.max_var().is_some_and(|v| v >= t) {
            return Err(Error::input("J mentions a variable outside the edge set"));
        }
        Ok(())
    }
}

/// Outcome of re-checking a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub recomputed_eta: BigInt,
    pub eta_matches: bool,
    pub nonzero: bool,
    pub degree_matches: bool,
    /// `i_e + 1 <= s(e)` for every edge.
    pub per_edge_bounds: bool,
    /// `1 + max i_e <= s(e)` for every edge, the stronger uniform form.
    pub max_form_bounds: bool,
    pub bounds_within_palette: bool,
}

impl CertificateCheck {
    pub fn valid(&self) -> bool {
        self.eta_matches && self.nonzero && self.degree_matches && self.per_edge_bounds && self.bounds_within_palette
    }
}

pub fn check_certificate_detailed(c: &Certificate) -> Result<CertificateCheck> {
    c.well_formed()?;
    let recomputed_eta = c.factors.coefficient(&c.j);
    let max_exp = c.j.iter().map(|(_, e)| e).max().unwrap_or(0);
    Ok(CertificateCheck {
        eta_matches: recomputed_eta == c.eta_value,
        nonzero: !recomputed_eta.is_zero(),
        recomputed_eta,
        degree_matches: c.j.degree() as usize == c.factors.len(),
        per_edge_bounds: (0..c.vars()).all(|v| c.j.exponent(v) < c.s_bounds[v]),
        max_form_bounds: c.s_bounds.iter().all(|&s| max_exp < s),
        bounds_within_palette: c.s_bounds.iter().all(|&s| s <= c.k),
    })
}

/// True iff the certificate is internally consistent and its η is nonzero.
pub fn check_certificate(c: &Certificate) -> Result<bool> {
    Ok(check_certificate_detailed(c)?.valid())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub trials: usize,
    pub successes: usize,
    /// Indices of trials without a conflict-free choice.
    pub failures: Vec<usize>,
}

/// Draws `trials` list assignments with `|L(e)| = i_e + 1` from
/// `{1, ..., palette}` and searches each exhaustively for a choice that
/// differs across every factor.
pub fn soundness_trial(c: &Certificate, seed: u64, trials: usize, palette: u32) -> Result<SoundnessReport> {
    if !check_certificate(c)? {
        return Err(Error::input("certificate does not check; refusing to run trials"));
    }
    if c.vars() > MAX_TRIAL_EDGES {
        return Err(Error::input(format!(
            "{} edges exceed the brute-force limit of {MAX_TRIAL_EDGES}",
            c.vars()
        )));
    }
    let sizes: Vec<usize> = (0..c.vars()).map(|v| c.j.exponent(v) as usize + 1).collect();
    if sizes.iter().any(|&s| s > palette as usize) {
        return Err(Error::input(format!(
            "palette {palette} is smaller than a required list"
        )));
    }
    let adjacency = c.conflict_graph().adjacency();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let lists: Vec<Vec<u32>> = sizes
            .iter()
            .map(|&s| ListAssignment::random(1, s, palette, &mut rng).map(|l| l.list(0).to_vec()))
            .collect::<Result<_>>()?;
        let found = ListProblem {
            adjacency: &adjacency,
            lists: &lists,
        }
        .solve();
        if found.is_none() {
            failures.push(trial);
        }
    }
    Ok(SoundnessReport {
        trials,
        successes: trials - failures.len(),
        failures,
    })
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate")?;
        writeln!(f, "vars {}", self.vars())?;
        for (i, label) in self.edge_labels.iter().enumerate() {
            writeln!(f, "edge {i} {label} {}", self.s_bounds[i])?;
        }
        for &(a, b) in self.factors.factors() {
            writeln!(f, "factor {a} {b}")?;
        }
        let dense = self.j.to_dense(self.vars());
        let exps: Vec<String> = dense.iter().map(u32::to_string).collect();
        writeln!(f, "J {}", exps.join(" "))?;
        writeln!(f, "eta {}", self.eta_value)?;
        writeln!(f, "k {}", self.k)
    }
}

fn field<T: FromStr>(line: usize, s: Option<&str>, what: &str) -> Result<T> {
    s.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what}")))
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header = false;
        let mut vars: Option<usize> = None;
        let mut edges: Vec<Option<(String, u32)>> = Vec::new();
        let mut factors = Vec::new();
        let mut j: Option<Vec<u32>> = None;
        let mut eta: Option<BigInt> = None;
        let mut k: Option<u32> = None;
        let mut last = 0;
        for (idx, raw) in text.lines().enumerate() {
            let ln = idx + 1;
            last = ln;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let tag = words[0];
            let arity = match tag {
                "vars" | "eta" | "k" => Some(1),
                "factor" => Some(2),
                "edge" => Some(3),
                _ => None,
            };
            if arity.is_some_and(|a| words.len() > a + 1) {
                return Err(Error::parse(ln, "trailing fields"));
            }
            let mut f = words[1..].iter().copied();
            if !header {
                if tag != "certificate" {
                    return Err(Error::parse(ln, "file must start with `certificate`"));
                }
                header = true;
                continue;
            }
            match tag {
                "vars" => {
                    if vars.is_some() {
                        return Err(Error::parse(ln, "duplicate `vars`"));
                    }
                    let t: usize = field(ln, f.next(), "variable count")?;
                    vars = Some(t);
                    edges = vec![None; t];
                }
                "edge" => {
                    let t = vars.ok_or_else(|| Error::parse(ln, "`edge` before `vars`"))?;
                    let i: usize = field(ln, f.next(), "edge index")?;
                    let label: String = field(ln, f.next(), "edge label")?;
                    let s: u32 = field(ln, f.next(), "s bound")?;
                    if i >= t {
                        return Err(Error::parse(ln, format!("edge index {i} out of range 0..{t}")));
                    }
                    if edges[i].replace((label, s)).is_some() {
                        return Err(Error::parse(ln, format!("edge {i} declared twice")));
                    }
                }
                "factor" => {
                    let t = vars.ok_or_else(|| Error::parse(ln, "`factor` before `vars`"))?;
                    let a: usize = field(ln, f.next(), "factor variable")?;
                    let b: usize = field(ln, f.next(), "factor variable")?;
                    if a >= t || b >= t || a == b {
                        return Err(Error::parse(ln, format!("invalid factor ({a}, {b})")));
                    }
                    factors.push((a, b));
                }
                "J" => {
                    let exps = f
                        .map(|x| {
                            x.parse::<u32>()
                                .map_err(|_| Error::parse(ln, format!("bad exponent {x:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    j = Some(exps);
                }
                "eta" => eta = Some(field(ln, f.next(), "eta value")?),
                "k" => k = Some(field(ln, f.next(), "palette size")?),
                other => return Err(Error::parse(ln, format!("unknown line tag {other:?}"))),
            }
        }
        let end = last.max(1);
        if !header {
            return Err(Error::parse(end, "empty certificate"));
        }
        let t = vars.ok_or_else(|| Error::parse(end, "missing `vars`"))?;
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| Error::parse(end, format!("edge {i} not declared"))))
            .collect::<Result<Vec<_>>>()?;
        let j = j.ok_or_else(|| Error::parse(end, "missing `J`"))?;
        if j.len() != t {
            return Err(Error::parse(end, format!("J has {} exponents for {t} edges", j.len())));
        }
        let eta_value = eta.ok_or_else(|| Error::parse(end, "missing `eta`"))?;
        let k = k.ok_or_else(|| Error::parse(end, "missing `k`"))?;
        let (edge_labels, s_bounds) = edges.into_iter().unzip();
        Ok(Certificate {
            edge_labels,
            factors: FactorProduct::new(t, factors)?,
            j: Monomial::from_dense(&j),
            eta_value,
            s_bounds,
            k,
        })
    }
}
