use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::numerics::{valuations, GaussInt, Scalar};
use crate::prebloch::FormalSum;

/// An element of `/\^2 (Q(i)^*) (x) Q` in the basis of Gaussian primes,
/// stored as an antisymmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeElement {
    basis: Vec<GaussInt>,
    matrix: Vec<Vec<i64>>,
}

impl WedgeElement {
    fn from_pairs(pairs: &BTreeMap<(GaussInt, GaussInt), i64>) -> Self {
        let mut basis: Vec<GaussInt> = pairs
            .iter()
            .filter(|(_, c)| **c != 0)
            .flat_map(|((a, b), _)| [a.clone(), b.clone()])
            .collect();
        basis.sort();
        basis.dedup();
        let n = basis.len();
        let mut matrix = vec![vec![0i64; n]; n];
        let idx = |p: &GaussInt| basis.binary_search(p).expect("basis contains p");
        for ((a, b), c) in pairs {
            if *c == 0 {
                continue;
            }
            let (i, j) = (idx(a), idx(b));
            matrix[i][j] += c;
            matrix[j][i] -= c;
        }
        WedgeElement { basis, matrix }
    }

    pub fn basis(&self) -> &[GaussInt] {
        &self.basis
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|c| *c == 0)
    }

    /// The coefficient of `p /\ q`.
    pub fn coefficient(&self, p: &GaussInt, q: &GaussInt) -> i64 {
        match (self.basis.binary_search(p), self.basis.binary_search(q)) {
            (Ok(i), Ok(j)) => self.matrix[i][j],
            _ => 0,
        }
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let c = self.matrix[i][j];
                if c == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{c}*({}) /\\ ({})", self.basis[i], self.basis[j])?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `delta(sum n [z]) = sum n z /\ (1 - z)` modulo torsion.
///
/// Unit factors are discarded, so vanishing is a necessary condition for
/// membership in the Bloch group, never a sufficient one.
pub fn delta_exact<S: Scalar>(s: &FormalSum<S>) -> Result<WedgeElement> {
    let mut pairs: BTreeMap<(GaussInt, GaussInt), i64> = BTreeMap::new();
    for (n, z) in s.iter() {
        let a = valuations(z)?;
        let b = valuations(&(S::one() - z.clone()))?;
        for (p, ep) in &a {
            for (q, eq) in &b {
                // p^ep /\ q^eq = ep*eq (p /\ q)
                let c = n * ep * eq;
                match p.cmp(q) {
                    std::cmp::Ordering::Less => *pairs.entry((p.clone(), q.clone())).or_default() += c,
                    std::cmp::Ordering::Greater => {
                        *pairs.entry((q.clone(), p.clone())).or_default() -= c
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    Ok(WedgeElement::from_pairs(&pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numerics::GaussRat;
    use crate::prebloch::five_term;
    use num_complex::Complex64;

    fn q(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussRat {
        GaussRat::from_fracs(re_n, re_d, im_n, im_d)
    }

    #[test]
    fn two_is_torsion_one_third_is_not() {
        let d2 = delta_exact(&FormalSum::term(1, q(2, 1, 0, 1)).unwrap()).unwrap();
        assert!(d2.is_zero());
        let d = delta_exact(&FormalSum::term(1, q(1, 3, 0, 1)).unwrap()).unwrap();
        assert!(!d.is_zero());
        // (1/3) /\ (2/3) = 2 (1+i) /\ 3 modulo torsion
        let three = GaussInt::new(3, 0);
        let one_i = GaussInt::new(1, 1);
        assert_eq!(d.coefficient(&one_i, &three), 2);
        assert_eq!(d.coefficient(&three, &one_i), -2);
    }

    #[test]
    fn inversion_relation_is_killed() {
        let z = q(3, 5, 7, 2);
        let s = FormalSum::from_terms([(1, z.clone()), (1, z.recip())]).unwrap();
        assert!(delta_exact(&s).unwrap().is_zero());
        let s = FormalSum::from_terms([(1, z.clone()), (1, GaussRat::one() - z)]).unwrap();
        assert!(delta_exact(&s).unwrap().is_zero());
    }

    #[test]
    fn five_term_is_killed() {
        for (x, y) in [
            (q(2, 1, 0, 1), q(3, 1, 0, 1)),
            (q(1, 2, 1, 3), q(-4, 1, 5, 7)),
            (q(0, 1, 1, 1), q(1, 1, 1, 1)),
        ] {
            let s = five_term(&x, &y).unwrap();
            assert!(delta_exact(&s).unwrap().is_zero(), "{x} {y}");
        }
    }

    #[test]
    fn float_is_unsupported() {
        let s = FormalSum::term(1, Complex64::new(0.3, 0.2)).unwrap();
        assert!(matches!(delta_exact(&s), Err(Error::Unsupported(_))));
    }
}
