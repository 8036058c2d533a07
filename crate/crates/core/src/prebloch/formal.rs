use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::numerics::Scalar;
use crate::prebloch::dilog::dilog_d;

/// An integer combination of generators in C \ {0, 1}.
///
/// Generators are kept pairwise distinct: exactly in the exact backend,
/// up to [`MERGE_TOL`](crate::numerics::MERGE_TOL) relative distance for
/// floats. Zero coefficients are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalSum<S> {
    terms: Vec<(i64, S)>,
}

impl<S> Default for FormalSum<S> {
    fn default() -> Self {
        FormalSum { terms: Vec::new() }
    }
}

fn check_generator<S: Scalar>(gen: &S) -> Result<()> {
    if gen.is_generator() {
        Ok(())
    } else {
        Err(Error::OutOfDomain(format!(
            "formal sum generator {gen} must lie in C \\ {{0, 1}}"
        )))
    }
}

impl<S: Scalar> FormalSum<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// `coeff * [gen]`.
    pub fn term(coeff: i64, gen: S) -> Result<Self> {
        let mut s = Self::new();
        s.add_term(coeff, gen)?;
        Ok(s)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, S)>) -> Result<Self> {
        let mut s = Self::new();
        for (c, g) in terms {
            s.add_term(c, g)?;
        }
        Ok(s)
    }

    pub fn add_term(&mut self, coeff: i64, gen: S) -> Result<()> {
        check_generator(&gen)?;
        self.merge(coeff, gen);
        Ok(())
    }

    fn merge(&mut self, coeff: i64, gen: S) {
        if coeff == 0 {
            return;
        }
        match self.terms.iter().position(|(_, g)| g.approx_eq(&gen)) {
            Some(pos) => {
                self.terms[pos].0 += coeff;
                if self.terms[pos].0 == 0 {
                    self.terms.remove(pos);
                }
            }
            None => self.terms.push((coeff, gen)),
        }
    }

    pub fn terms(&self) -> &[(i64, S)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = &(i64, S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `gen`, matched with the generator equality.
    pub fn coefficient(&self, gen: &S) -> i64 {
        self.terms
            .iter()
            .find(|(_, g)| g.approx_eq(gen))
            .map_or(0, |(c, _)| *c)
    }

    pub fn scaled(&self, n: i64) -> Self {
        if n == 0 {
            return Self::new();
        }
        FormalSum {
            terms: self.terms.iter().map(|(c, g)| (c * n, g.clone())).collect(),
        }
    }

    /// Linear extension of the Bloch–Wigner dilogarithm, summed in the
    /// stored term order.
    pub fn eval_d(&self) -> f64 {
        self.terms
            .iter()
            .map(|(c, g)| *c as f64 * dilog_d(g))
            .sum()
    }

    /// Terms sorted by the canonical generator order.
    pub fn sorted(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.1.canonical_cmp(&b.1));
        FormalSum { terms }
    }

    /// Entrywise complex conjugation of the generators.
    pub fn conj(&self) -> Self {
        FormalSum {
            terms: self.terms.iter().map(|(c, g)| (*c, g.conj())).collect(),
        }
    }
}

impl<S: Scalar> Add for FormalSum<S> {
    type Output = FormalSum<S>;
    fn add(mut self, rhs: FormalSum<S>) -> FormalSum<S> {
        for (c, g) in rhs.terms {
            self.merge(c, g);
        }
        self
    }
}

impl<S: Scalar> Neg for FormalSum<S> {
    type Output = FormalSum<S>;
    fn neg(self) -> FormalSum<S> {
        self.scaled(-1)
    }
}

impl<S: Scalar> Sub for FormalSum<S> {
    type Output = FormalSum<S>;
    fn sub(self, rhs: FormalSum<S>) -> FormalSum<S> {
        self + (-rhs)
    }
}

impl<S: Scalar> fmt::Display for FormalSum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, g)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if idx == 0 {
                if *c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "[{g}]")?;
        }
        Ok(())
    }
}

/// The five-term relation
/// `[x] - [y] + [y/x] - [(1 - 1/x) / (1 - 1/y)] + [(1 - x) / (1 - y)]`.
pub fn five_term<S: Scalar>(x: &S, y: &S) -> Result<FormalSum<S>> {
    check_generator(x)?;
    check_generator(y)?;
    if x.approx_eq(y) {
        return Err(Error::OutOfDomain("five-term relation needs x != y".into()));
    }
    let one = S::one;
    let gens = [
        (1, x.clone()),
        (-1, y.clone()),
        (1, y.clone() / x.clone()),
        (-1, (one() - x.recip()) / (one() - y.recip())),
        (1, (one() - x.clone()) / (one() - y.clone())),
    ];
    for (_, g) in &gens {
        check_generator(g)?;
    }
    FormalSum::from_terms(gens)
}

/// The product identity
/// `[ab] - [a] - [b] - [(1 - a) / (1 - 1/b)] - [(1 - b) / (1 - 1/a)]`,
/// which vanishes in the pre-Bloch group.
pub fn product_identity<S: Scalar>(a: &S, b: &S) -> Result<FormalSum<S>> {
    let one = S::one;
    FormalSum::from_terms([
        (1, a.clone() * b.clone()),
        (-1, a.clone()),
        (-1, b.clone()),
        (-1, (one() - a.clone()) / (one() - b.recip())),
        (-1, (one() - b.clone()) / (one() - a.recip())),
    ])
}

/// The six elements of the orbit of `z` under inversion and `z -> 1 - z`,
/// each paired with the sign `s` for which `[z] = s [w]`.
pub fn six_orbit<S: Scalar>(z: &S) -> [(S, i64); 6] {
    let one = S::one;
    [
        (z.clone(), 1),
        (z.recip(), -1),
        (one() - z.clone(), -1),
        ((one() - z.clone()).recip(), 1),
        (one() - z.recip(), 1),
        (z.clone() / (z.clone() - one()), -1),
    ]
}

fn is_torsion<S: Scalar>(z: &S) -> bool {
    let two = S::from_i64(2);
    z.approx_eq(&-S::one()) || z.approx_eq(&two) || z.approx_eq(&two.recip())
}

/// Rewrite a sum modulo the inversion and reflection relations.
///
/// Each generator is replaced by the least element of its six-orbit under
/// [`Scalar::canonical_cmp`], with the sign tracked, and like terms are
/// combined. The orbit `{-1, 2, 1/2}` is 2-torsion (`[-1] = -[-1]`) and is
/// dropped. The result is sorted canonically.
pub fn canonicalize_six<S: Scalar>(s: &FormalSum<S>) -> FormalSum<S> {
    let mut out: Vec<(i64, S)> = Vec::new();
    for (c, z) in s.iter() {
        if is_torsion(z) {
            continue;
        }
        let orbit = six_orbit(z);
        let hit = out.iter().position(|(_, rep)| {
            orbit.iter().any(|(w, _)| w.approx_eq(rep))
        });
        match hit {
            Some(pos) => {
                let sign = orbit
                    .iter()
                    .find(|(w, _)| w.approx_eq(&out[pos].1))
                    .map(|(_, s)| *s)
                    .unwrap_or(1);
                out[pos].0 += c * sign;
            }
            None => {
                let (rep, sign) = orbit
                    .iter()
                    .min_by(|a, b| a.0.canonical_cmp(&b.0))
                    .cloned()
                    .expect("orbit is nonempty");
                out.push((c * sign, rep));
            }
        }
    }
    out.retain(|(c, _)| *c != 0);
    out.sort_by(|a, b| a.1.canonical_cmp(&b.1));
    FormalSum { terms: out }
}
