use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ringcore::integer::valuation_unchecked;
use crate::ringcore::{is_prime, IntPolynomial, PrimePower, Valuation};

/// A p-ordering `b_0, ..., b_(k-1)` of a finite set together with the
/// valuations `v_i = val_p(prod_{t < i} (b_i - b_t))`; `v_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct POrderingResult {
    pub ordering: Vec<BigInt>,
    pub valuations: Vec<Valuation>,
}

/// `val_p(prod_{b' in prefix} (b - b'))`, infinite if `b` is in the prefix.
pub(crate) fn prefix_valuation(b: &BigInt, prefix: &[BigInt], p: &BigInt) -> Valuation {
    prefix.iter().fold(Valuation::Finite(0), |acc, t| {
        acc + valuation_unchecked(&(b - t), p)
    })
}

/// Greedy p-ordering of length `k`: `b_0 = min S`, then at each step the
/// element minimizing the prefix valuation, ties going to the smallest value.
///
/// Once every element is used all candidates have infinite valuation and the
/// smallest element repeats.
pub fn p_ordering(set: &[BigInt], p: &BigInt, k: usize) -> Result<POrderingResult> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let elements: Vec<BigInt> = set
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if elements.is_empty() {
        return Err(Error::InvalidArgument("p-ordering of an empty set".into()));
    }
    let mut ordering = Vec::with_capacity(k);
    let mut valuations = Vec::with_capacity(k);
    for _ in 0..k {
        let (best, v) = elements
            .iter()
            .map(|b| (b, prefix_valuation(b, &ordering, p)))
            .min_by(|x, y| x.1.cmp(&y.1).then_with(|| x.0.cmp(y.0)))
            .expect("nonempty set");
        let best = best.clone();
        ordering.push(best);
        valuations.push(v);
    }
    Ok(POrderingResult {
        ordering,
        valuations,
    })
}

/// `(p^l)`-minimal polynomial of `diag(entries)` from a p-ordering of the
/// distinct entries: the least `k` with `v_k >= l` gives
/// `(X - b_0) ... (X - b_(k-1))`, reduced to canonical form mod `p^l`.
pub fn diagonal_pj_minimal_polynomial(
    entries: &[BigInt],
    pp: &PrimePower,
) -> Result<IntPolynomial> {
    if pp.ell() == 0 {
        return Err(Error::InvalidArgument(
            "diagonal fast path needs l >= 1".into(),
        ));
    }
    let distinct = entries.iter().cloned().collect::<BTreeSet<_>>().len();
    // v_(|S|) is infinite, so k = |S| always qualifies.
    let ord = p_ordering(entries, pp.p(), distinct + 1)?;
    let k = ord
        .valuations
        .iter()
        .position(|v| v.at_least(pp.ell()))
        .expect("v_|S| is infinite");
    let f = IntPolynomial::from_roots(&ord.ordering[..k]);
    Ok(f.canonical_monic(&pp.modulus()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn zs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| z(x)).collect()
    }

    #[test]
    fn two_ordering_of_example_spectrum() {
        let r = p_ordering(&zs(&[4, 16, 32]), &z(2), 3).unwrap();
        assert_eq!(r.ordering, zs(&[4, 16, 32]));
        assert_eq!(
            r.valuations,
            vec![
                Valuation::Finite(0),
                Valuation::Finite(2),
                Valuation::Finite(6)
            ]
        );
        let r = p_ordering(&zs(&[4, 16, 32]), &z(2), 4).unwrap();
        assert_eq!(r.valuations[3], Valuation::Infinite);
    }

    #[test]
    fn three_ordering_prefers_lower_valuation() {
        let r = p_ordering(&zs(&[32, 16, 4]), &z(3), 3).unwrap();
        assert_eq!(r.ordering, zs(&[4, 32, 16]));
        assert_eq!(
            r.valuations,
            vec![
                Valuation::Finite(0),
                Valuation::Finite(0),
                Valuation::Finite(1)
            ]
        );
    }

    #[test]
    fn singleton_and_errors() {
        let r = p_ordering(&zs(&[9]), &z(5), 1).unwrap();
        assert_eq!(r.ordering, zs(&[9]));
        assert_eq!(r.valuations, vec![Valuation::Finite(0)]);
        assert!(p_ordering(&[], &z(5), 1).is_err());
        assert!(p_ordering(&zs(&[1]), &z(6), 1).is_err());
    }

    #[test]
    fn diagonal_examples() {
        let s = zs(&[4, 16, 32]);
        let pp = |p: i64, l: u32| PrimePower::new(z(p), l).unwrap();
        assert_eq!(
            diagonal_pj_minimal_polynomial(&s, &pp(2, 3)).unwrap(),
            IntPolynomial::from_i64s(&[0, 4, 1])
        );
        assert_eq!(
            diagonal_pj_minimal_polynomial(&s, &pp(7, 1)).unwrap(),
            IntPolynomial::from_i64s(&[1, 1, 1])
        );
        assert_eq!(
            diagonal_pj_minimal_polynomial(&zs(&[5, 5, 5]), &pp(3, 2)).unwrap(),
            IntPolynomial::from_i64s(&[4, 1])
        );
        assert!(diagonal_pj_minimal_polynomial(&s, &pp(2, 0)).is_err());
    }
}
