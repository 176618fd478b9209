use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::{Monomial, Var};
use crate::error::{Error, Result};

/// Sparse polynomial with arbitrary-precision integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::from_terms([(Monomial::one(), c.into())])
    }

    pub fn var(v: Var) -> Self {
        Polynomial::from_terms([(Monomial::var(v), BigInt::one())])
    }

    /// `x_a - x_b`
    pub fn difference(a: Var, b: Var) -> Self {
        Polynomial::var(a) - Polynomial::var(b)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `x_a - x_b`.
    pub fn mul_difference(&self, a: Var, b: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.bumped(a), c.clone());
            out.add_term(m.bumped(b), -c.clone());
        }
        out
    }

    /// Keeps only the terms whose monomials satisfy `keep`.
    pub fn retain(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient extraction: the polynomial in the remaining variables
    /// formed by the terms whose exponents on `j`'s variables equal `j`'s,
    /// with those variables removed.
    pub fn eta_partial(&self, j: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if j.iter().all(|(v, e)| m.exponent(v) == e) {
                let rest = Monomial::new(m.iter().filter(|&(v, _)| j.exponent(v) == 0));
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Formal partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                out.add_term(m.with_exponent(v, e - 1), c * BigInt::from(e));
            }
        }
        out
    }

    /// Evaluates `v` at zero.
    pub fn at_zero(&self, v: Var) -> Polynomial {
        self.retain(|m| m.exponent(v) == 0)
    }

    /// Exact division of every coefficient by `d`; `None` if some
    /// coefficient is not a multiple.
    pub fn div_exact(&self, d: &BigInt) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if !(c % d).is_zero() {
                return None;
            }
            terms.insert(m.clone(), c / d);
        }
        Some(Polynomial { terms })
    }

    /// Coefficient extraction computed literally: differentiate `i` times in
    /// each variable of `j`, divide by `i!`, then set those variables to zero.
    pub fn eta_derivative_oracle(&self, j: &Monomial) -> Polynomial {
        let mut p = self.clone();
        for (v, e) in j.iter() {
            for _ in 0..e {
                p = p.derivative(v);
            }
            let fact: BigInt = (1..=e).map(BigInt::from).product();
            p = p
                .div_exact(&fact)
                .expect("the e-th derivative of an integer polynomial is divisible by e!");
            p = p.at_zero(v);
        }
        p
    }

    /// Largest absolute coefficient, as `f64` for reporting.
    pub fn max_abs_coefficient(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// Variables occurring in some term, ascending.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Terms in graded-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| a.0.grlex_cmp(b.0));
        t
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// One term per line, `<coeff> : v<i>^<e> ...`, in graded-lexicographic
/// order. The zero polynomial prints as `0 :`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0 :");
        }
        for (m, c) in self.sorted_terms() {
            if m.is_one() {
                writeln!(f, "{c} :")?;
            } else {
                writeln!(f, "{c} : {m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Polynomial::zero();
        for (idx, line) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (coeff, mono) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `<coeff> : <monomial>`"))?;
            let c: BigInt = coeff
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad coefficient {:?}", coeff.trim())))?;
            let mut pairs = Vec::new();
            for tok in mono.split_whitespace() {
                let parsed = tok
                    .strip_prefix('v')
                    .and_then(|t| t.split_once('^'))
                    .and_then(|(v, e)| Some((v.parse::<Var>().ok()?, e.parse::<u32>().ok()?)));
                pairs.push(parsed.ok_or_else(|| Error::parse(line_no, format!("bad power {tok:?}")))?);
            }
            p.add_term(Monomial::new(pairs), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: Var) -> Polynomial {
        Polynomial::var(v)
    }

    #[test]
    fn coefficient_examples() {
        let p = Polynomial::difference(1, 2);
        assert_eq!(p.coefficient(&Monomial::var(2)), BigInt::from(-1));
        // (x1-x2)(x1-x3)(x2-x3) at x1²x3
        let t = &(&Polynomial::difference(1, 2) * &Polynomial::difference(1, 3)) * &Polynomial::difference(2, 3);
        assert_eq!(t.coefficient(&Monomial::new([(1, 2), (3, 1)])), BigInt::from(-1));
        assert_eq!(t.coefficient(&Monomial::new([(1, 2)])), BigInt::zero());
    }

    #[test]
    fn eta_examples() {
        // (x1-x2)(x1-y1) with y1 = var 7, J = x1
        let p = &Polynomial::difference(1, 2) * &Polynomial::difference(1, 7);
        let expect = -(&x(2) + &x(7));
        assert_eq!(p.eta_partial(&Monomial::var(1)), expect);
        assert_eq!(p.eta_derivative_oracle(&Monomial::var(1)), expect);

        let q = Polynomial::from_terms([(Monomial::new([(1, 2), (2, 1)]), BigInt::one())]);
        assert_eq!(q.eta_partial(&Monomial::power(1, 2)), x(2));
        assert!(q.eta_partial(&Monomial::power(5, 1)).is_zero());

        let r = Polynomial::from_terms([(Monomial::power(1, 2), BigInt::from(3))]);
        assert_eq!(r.eta_derivative_oracle(&Monomial::power(1, 2)), Polynomial::constant(3));
        let s = &x(1) * &x(2);
        assert!(s.eta_derivative_oracle(&Monomial::power(1, 2)).is_zero());
    }

    #[test]
    fn degree_and_homogeneity() {
        let p = &x(1) + &(&x(2) * &x(2));
        assert_eq!(p.degree(), Some(2));
        assert!(!p.is_homogeneous());
        let c = Polynomial::constant(5);
        assert_eq!(c.degree(), Some(0));
        assert!(c.is_homogeneous());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn debug_format_round_trips() {
        let p = &(&Polynomial::difference(0, 1) * &Polynomial::difference(0, 2)) + &Polynomial::constant(-4);
        let text = p.to_string();
        assert_eq!(text, "1 : v0^2\n-1 : v0^1 v1^1\n-1 : v0^1 v2^1\n1 : v1^1 v2^1\n-4 :\n");
        assert_eq!(text.parse::<Polynomial>().unwrap(), p);
        assert_eq!(
            Polynomial::zero().to_string().parse::<Polynomial>().unwrap(),
            Polynomial::zero()
        );
        assert!("3 x1".parse::<Polynomial>().is_err());
    }
}
