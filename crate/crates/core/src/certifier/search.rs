use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{CapVector, FactorProduct, Monomial};

/// Number of monomials with `deg = factor count` whose exponents respect
/// both `caps` and the per-variable factor counts (saturating).
pub fn candidate_count(p: &FactorProduct, caps: &CapVector) -> u128 {
    let degree = p.len();
    let mut ways = vec![0u128; degree + 1];
    ways[0] = 1;
    for (v, occ) in p.occurrences().into_iter().enumerate() {
        let top = caps.cap(v).map_or(occ, |c| c.min(occ)) as usize;
        let mut next = vec![0u128; degree + 1];
        for (d, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for e in 0..=top.min(degree - d) {
                next[d + e] = next[d + e].saturating_add(w);
            }
        }
        ways = next;
    }
    ways[degree]
}

/// A top-degree monomial within `caps` with nonzero coefficient.
///
/// When at most `budget` candidates exist the capped expansion is scanned
/// and the monomial with the smallest maximum exponent is returned (ties in
/// graded-lexicographic order). Otherwise up to `budget` random candidates
/// are drawn, each by letting every factor contribute one of its two
/// variables, and their coefficients are computed one by one. Half of the
/// draws orient every factor along a random variable order; without caps in
/// the way such an acyclic orientation is the only one with its in-degrees,
/// so its coefficient is ±1.
pub fn search_monomial(p: &FactorProduct, caps: &CapVector, budget: u64) -> Option<(Monomial, BigInt)> {
    if candidate_count(p, caps) <= budget as u128 {
        let expansion = p.expand_capped(caps);
        return expansion
            .sorted_terms()
            .into_iter()
            .filter(|(m, _)| m.degree() as usize == p.len() && caps.admits(m))
            .min_by(|a, b| {
                let max_a = a.0.iter().map(|(_, e)| e).max();
                let max_b = b.0.iter().map(|(_, e)| e).max();
                max_a.cmp(&max_b).then_with(|| a.0.grlex_cmp(b.0))
            })
            .map(|(m, c)| (m.clone(), c.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget ^ p.len() as u64);
    for _ in 0..budget {
        let Some(m) = random_orientation(p, caps, &mut rng) else {
            continue;
        };
        let c = p.coefficient(&m);
        if !c.is_zero() {
            return Some((m, c));
        }
    }
    None
}

fn random_orientation(p: &FactorProduct, caps: &CapVector, rng: &mut ChaCha8Rng) -> Option<Monomial> {
    let mut exps = vec![0u32; p.num_vars()];
    let fits = |v: usize, exps: &[u32]| caps.cap(v).is_none_or(|c| exps[v] < c);
    let mut rank: Vec<usize> = (0..p.num_vars()).collect();
    let ordered = rng.random_bool(0.5);
    if ordered {
        rank.shuffle(rng);
    }
    for &(a, b) in p.factors() {
        let first = match ordered {
            true if rank[a] > rank[b] => a,
            true => b,
            false if rng.random_bool(0.5) => a,
            false => b,
        };
        let second = if first == a { b } else { a };
        if fits(first, &exps) {
            exps[first] += 1;
        } else if fits(second, &exps) {
            exps[second] += 1;
        } else {
            return None;
        }
    }
    Some(Monomial::from_dense(&exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> FactorProduct {
        FactorProduct::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_multilinear_has_none() {
        assert_eq!(search_monomial(&triangle(), &CapVector::uniform(3, 1), 1000), None);
        assert_eq!(search_monomial(&triangle(), &CapVector::uniform(3, 1), 0), None);
    }

    #[test]
    fn triangle_with_caps_two() {
        let (m, c) = search_monomial(&triangle(), &CapVector::uniform(3, 2), 1000).unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(triangle().coefficient(&m), c);
        assert!(!c.is_zero());
        // sampling path finds one as well
        let (m2, c2) = search_monomial(&triangle(), &CapVector::uniform(3, 2), 5).unwrap();
        assert_eq!(triangle().coefficient(&m2), c2);
    }

    #[test]
    fn single_factor() {
        let p = FactorProduct::new(2, vec![(0, 1)]).unwrap();
        let (m, c) = search_monomial(&p, &CapVector::uniform(2, 1), 10).unwrap();
        assert_eq!(m, Monomial::var(0));
        assert_eq!(c, BigInt::from(1));
    }

    #[test]
    fn sampling_finds_vandermonde_terms() {
        let pairs = (0..10).flat_map(|a| ((a + 1)..10).map(move |b| (a, b))).collect();
        let k10 = FactorProduct::new(10, pairs).unwrap();
        assert!(candidate_count(&k10, &CapVector::unbounded(10)) > 1000);
        let (m, c) = search_monomial(&k10, &CapVector::unbounded(10), 1000).unwrap();
        let mut exps = m.to_dense(10);
        exps.sort_unstable();
        assert_eq!(exps, (0..10).collect::<Vec<u32>>());
        assert_eq!(c.magnitude(), &1u32.into());
    }

    #[test]
    fn counts_candidates() {
        assert_eq!(candidate_count(&triangle(), &CapVector::uniform(3, 1)), 1);
        // x0^a x1^b x2^c, a+b+c = 3, each <= 2: 7 compositions
        assert_eq!(candidate_count(&triangle(), &CapVector::uniform(3, 2)), 7);
    }
}
