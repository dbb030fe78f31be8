//! Operator words and the star anti-involution.
//!
//! Star is the conjugate-linear anti-automorphism induced on operator
//! words by inversion on the group: a length-n word maps to the
//! reversed word with sign (-1)^n, and coefficients are complex
//! conjugated. It is defined on words in declared generators; an
//! arbitrary element is starred by keeping its word presentation
//! alongside the normal form.

use alloc::vec::Vec;

use crate::exact::GaussQ;

use super::operator::WeylElement;

/// A GaussQ-linear combination of words; letters index into a declared
/// generator alphabet.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WordExpr {
    pub terms: Vec<(GaussQ, Vec<usize>)>,
}

impl WordExpr {
    pub fn word(coeff: GaussQ, letters: Vec<usize>) -> Self {
        WordExpr { terms: alloc::vec![(coeff, letters)] }
    }

    pub fn single(letter: usize) -> Self {
        Self::word(GaussQ::from_int(1), alloc::vec![letter])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        WordExpr { terms }
    }

    pub fn scale(&self, c: &GaussQ) -> Self {
        WordExpr {
            terms: self.terms.iter().map(|(f, w)| (f * c, w.clone())).collect(),
        }
    }

    /// The star involution on words:
    /// `c * X1 X2 ... Xn  ->  conj(c) * (-1)^n Xn ... X2 X1`.
    pub fn star(&self) -> Self {
        WordExpr {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| {
                    let mut rev = w.clone();
                    rev.reverse();
                    let sign = if w.len() % 2 == 0 { 1 } else { -1 };
                    (c.conj() * GaussQ::from_int(sign), rev)
                })
                .collect(),
        }
    }

    /// Multiply out against an alphabet of generator operators.
    pub fn eval(&self, alphabet: &[WeylElement]) -> WeylElement {
        let mut out = WeylElement::zero();
        for (c, word) in &self.terms {
            let mut acc = WeylElement::identity();
            for &letter in word {
                acc = acc.multiply(&alphabet[letter]);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }
}

/// Star of a declared-generator word, evaluated as an operator.
pub fn star_eval(expr: &WordExpr, alphabet: &[WeylElement]) -> WeylElement {
    expr.star().eval(alphabet)
}
