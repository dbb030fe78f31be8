//! Sparse polynomials in five variables over the Gaussian rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::GaussQ;

/// Exponent vector for z1..z5.
pub type Exps = [u16; 5];

/// A polynomial in z1..z5 with GaussQ coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly5 {
    terms: BTreeMap<Exps, GaussQ>,
}

impl Poly5 {
    pub fn zero() -> Self {
        Poly5 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly5::monomial([0; 5], GaussQ::from_int(1))
    }

    /// The variable z_i, 1-indexed to match the usual notation.
    pub fn var(i: usize) -> Self {
        assert!((1..=5).contains(&i), "variable index out of range");
        let mut e = [0u16; 5];
        e[i - 1] = 1;
        Poly5::monomial(e, GaussQ::from_int(1))
    }

    pub fn monomial(exps: Exps, coeff: GaussQ) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Poly5 { terms }
    }

    pub fn constant(c: GaussQ) -> Self {
        Poly5::monomial([0; 5], c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &GaussQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exps) -> GaussQ {
        self.terms.get(e).cloned().unwrap_or_else(|| GaussQ::from_int(0))
    }

    pub fn add_term(&mut self, exps: Exps, coeff: GaussQ) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussQ) -> Self {
        if c.is_zero() {
            return Poly5::zero();
        }
        let mut out = Poly5::zero();
        for (e, f) in self.terms() {
            out.add_term(*e, f * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussQ::from_int(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly5::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let mut e = *ea;
                for k in 0..5 {
                    e[k] += eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u16> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u16>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// All exponent vectors of total degree `d`, in lexicographic order.
    pub fn degree_basis(d: u16) -> Vec<Exps> {
        let mut out = Vec::new();
        let mut e = [0u16; 5];
        fill(&mut out, &mut e, 0, d);
        return out;

        fn fill(out: &mut Vec<Exps>, e: &mut Exps, pos: usize, left: u16) {
            if pos == 4 {
                e[4] = left;
                out.push(*e);
                return;
            }
            for v in 0..=left {
                e[pos] = v;
                fill(out, e, pos + 1, left - v);
            }
            e[pos] = 0;
        }
    }

    pub fn text(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}

impl fmt::Display for Poly5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, &p) in e.iter().enumerate() {
                if p == 1 {
                    write!(f, "*z{}", k + 1)?;
                } else if p > 1 {
                    write!(f, "*z{}^{}", k + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
