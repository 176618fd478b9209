use std::cmp::Ordering;
use std::fmt;

pub type Var = usize;

/// A power product stored sparsely as `(variable, exponent)` pairs sorted by
/// variable; zero exponents are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn power(v: Var, e: u32) -> Self {
        Monomial::new([(v, e)])
    }

    /// Builds a monomial from arbitrary pairs; repeated variables multiply.
    pub fn new(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut v: Vec<(Var, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable();
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn from_dense(exponents: &[u32]) -> Self {
        Monomial(
            exponents
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| (v, e))
                .collect(),
        )
    }

    pub fn to_dense(&self, num_vars: usize) -> Vec<u32> {
        let mut out = vec![0; num_vars.max(self.max_var().map_or(0, |v| v + 1))];
        for &(v, e) in &self.0 {
            out[v] = e;
        }
        out
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(var, _)| var)
            .map_or(0, |i| self.0[i].1)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.0.last().map(|&(v, _)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.iter().chain(other.iter()))
    }

    /// Multiplies by `v^1`.
    pub fn bumped(&self, v: Var) -> Monomial {
        let mut out = self.clone();
        match out.0.binary_search_by_key(&v, |&(var, _)| var) {
            Ok(i) => out.0[i].1 += 1,
            Err(i) => out.0.insert(i, (v, 1)),
        }
        out
    }

    /// Same exponents with `v` removed.
    pub fn without(&self, v: Var) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(var, _)| var != v).collect())
    }

    /// Replaces the exponent of `v` (zero removes it).
    pub fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        Monomial::new(self.without(v).iter().chain([(v, e)]))
    }

    /// Graded lexicographic order: higher total degree first, then larger
    /// exponent on the lowest-indexed variable where the two differ.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let mut a = self.0.iter();
            let mut b = other.0.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            // the monomial holding the smaller variable is larger
                            return va.cmp(&vb);
                        }
                        if ea != eb {
                            return eb.cmp(&ea);
                        }
                    }
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("v{v}^{e}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_pairs() {
        let m = Monomial::new([(3, 1), (1, 0), (3, 2), (0, 4)]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(0, 4), (3, 3)]);
        assert_eq!(m.degree(), 7);
        assert_eq!(m.exponent(1), 0);
        assert_eq!(m.to_dense(5), vec![4, 0, 0, 3, 0]);
        assert_eq!(Monomial::from_dense(&m.to_dense(5)), m);
    }

    #[test]
    fn grlex() {
        let x0sq = Monomial::power(0, 2);
        let x0x1 = Monomial::new([(0, 1), (1, 1)]);
        let x1sq = Monomial::power(1, 2);
        let x0 = Monomial::var(0);
        let mut v = vec![x0.clone(), x1sq.clone(), x0x1.clone(), x0sq.clone(), Monomial::one()];
        v.sort_by(|a, b| a.grlex_cmp(b));
        assert_eq!(v, vec![x0sq, x0x1, x1sq, x0, Monomial::one()]);
    }
}
