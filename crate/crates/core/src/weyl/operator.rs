//! Normal-ordered elements of the Weyl algebra on z1..z5.
//!
//! Every element is stored with all multiplication operators to the left
//! of all differentiation operators, so equality of operators is
//! equality of term maps. The product implements the canonical
//! commutation relation [d_i, z_j] = delta_ij exactly.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::GaussQ;

use super::poly::{Exps, Poly5};

/// One normal-ordered term `z^zexp * d^dexp`.
pub type TermKey = (Exps, Exps);

/// A finite GaussQ-linear combination of normal-ordered terms.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylElement {
    terms: BTreeMap<TermKey, GaussQ>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement { terms: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        WeylElement::term([0; 5], [0; 5], GaussQ::from_int(1))
    }

    pub fn term(zexp: Exps, dexp: Exps, coeff: GaussQ) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((zexp, dexp), coeff);
        }
        WeylElement { terms }
    }

    /// Multiplication by the variable z_i (1-indexed).
    pub fn z(i: usize) -> Self {
        assert!((1..=5).contains(&i));
        let mut e = [0u16; 5];
        e[i - 1] = 1;
        WeylElement::term(e, [0; 5], GaussQ::from_int(1))
    }

    /// The partial derivative d/dz_i (1-indexed).
    pub fn d(i: usize) -> Self {
        assert!((1..=5).contains(&i));
        let mut e = [0u16; 5];
        e[i - 1] = 1;
        WeylElement::term([0; 5], e, GaussQ::from_int(1))
    }

    /// Multiplication operator by a polynomial.
    pub fn from_poly(p: &Poly5) -> Self {
        let mut out = WeylElement::zero();
        for (e, c) in p.terms() {
            out.add_term(*e, [0; 5], c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &GaussQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, zexp: Exps, dexp: Exps) -> GaussQ {
        self.terms
            .get(&(zexp, dexp))
            .cloned()
            .unwrap_or_else(|| GaussQ::from_int(0))
    }

    pub fn add_term(&mut self, zexp: Exps, dexp: Exps, coeff: GaussQ) {
        if coeff.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry((zexp, dexp)) {
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
        for ((z, d), c) in other.terms() {
            out.add_term(*z, *d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((z, d), c) in other.terms() {
            out.add_term(*z, *d, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &GaussQ) -> Self {
        let mut out = WeylElement::zero();
        if c.is_zero() {
            return out;
        }
        for ((z, d), f) in self.terms() {
            out.add_term(*z, *d, f * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussQ::from_int(-1))
    }

    /// Normal-ordered product. Satisfies
    /// `apply(multiply(a, b), p) = apply(a, apply(b, p))`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = WeylElement::zero();
        for ((za, da), ca) in self.terms() {
            for ((zb, db), cb) in other.terms() {
                // Normal-order d^da * z^zb variable by variable:
                // d^m z^n = sum_k  C(m,k) C(n,k) k!  z^(n-k) d^(m-k).
                let coeff = ca * cb;
                reorder(&mut out, za, da, zb, db, coeff);
            }
        }
        out
    }

    /// Lie bracket `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.multiply(other).sub(&other.multiply(self))
    }

    /// Apply to a polynomial: d acts as formal partial derivative, z as
    /// multiplication. Linear in the polynomial.
    pub fn apply(&self, p: &Poly5) -> Poly5 {
        let mut out = Poly5::zero();
        for ((ze, de), c) in self.terms() {
            for (pe, pc) in p.terms() {
                // d^de on z^pe: falling factorials, zero if any pe < de.
                if (0..5).any(|k| pe[k] < de[k]) {
                    continue;
                }
                let mut factor = BigInt::from(1);
                let mut out_e = [0u16; 5];
                for k in 0..5 {
                    for step in 0..de[k] {
                        factor *= BigInt::from(pe[k] - step);
                    }
                    out_e[k] = pe[k] - de[k] + ze[k];
                }
                let scaled = c * pc;
                let scaled = GaussQ::new(
                    scaled.re * BigRational::from_integer(factor.clone()),
                    scaled.im * BigRational::from_integer(factor),
                );
                out.add_term(out_e, scaled);
            }
        }
        out
    }

    /// The degree shift of each term: z-degree minus d-degree. Returns
    /// the set of shifts occurring (a graded operator has exactly one).
    pub fn degree_shifts(&self) -> Vec<i32> {
        let mut shifts: Vec<i32> = self
            .terms
            .keys()
            .map(|(z, d)| {
                z.iter().map(|&x| x as i32).sum::<i32>() - d.iter().map(|&x| x as i32).sum::<i32>()
            })
            .collect();
        shifts.sort_unstable();
        shifts.dedup();
        shifts
    }

    /// One term per line: `coeff * z^(a1..a5) d^(b1..b5)`.
    pub fn text(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.is_zero() {
            return String::from("0");
        }
        for ((z, d), c) in self.terms() {
            let _ = writeln!(
                s,
                "{} * z^({} {} {} {} {}) d^({} {} {} {} {})",
                c,
                z[0], z[1], z[2], z[3], z[4],
                d[0], d[1], d[2], d[3], d[4]
            );
        }
        s
    }
}

fn reorder(out: &mut WeylElement, za: &Exps, da: &Exps, zb: &Exps, db: &Exps, coeff: GaussQ) {
    // Enumerate contraction orders k = (k1..k5), 0 <= k_i <= min(da_i, zb_i).
    let max: Vec<u16> = (0..5).map(|i| da[i].min(zb[i])).collect();
    let mut k = [0u16; 5];
    loop {
        let mut factor = BigInt::from(1);
        for i in 0..5 {
            factor *= binom(da[i], k[i]) * binom(zb[i], k[i]) * factorial(k[i]);
        }
        let mut zexp = [0u16; 5];
        let mut dexp = [0u16; 5];
        for i in 0..5 {
            zexp[i] = za[i] + zb[i] - k[i];
            dexp[i] = da[i] + db[i] - k[i];
        }
        let f = BigRational::from_integer(factor);
        out.add_term(
            zexp,
            dexp,
            GaussQ::new(coeff.re.clone() * f.clone(), coeff.im.clone() * f),
        );
        // next multi-index
        let mut pos = 0;
        loop {
            if pos == 5 {
                return;
            }
            if k[pos] < max[pos] {
                k[pos] += 1;
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

fn binom(n: u16, k: u16) -> BigInt {
    let mut out = BigInt::from(1);
    for j in 0..k {
        out = out * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    out
}

fn factorial(n: u16) -> BigInt {
    let mut out = BigInt::from(1);
    for j in 2..=n {
        out *= BigInt::from(j);
    }
    out
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((z, d), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, &p) in z.iter().enumerate() {
                if p == 1 {
                    write!(f, "*z{}", k + 1)?;
                } else if p > 1 {
                    write!(f, "*z{}^{}", k + 1, p)?;
                }
            }
            for (k, &p) in d.iter().enumerate() {
                if p == 1 {
                    write!(f, "*d{}", k + 1)?;
                } else if p > 1 {
                    write!(f, "*d{}^{}", k + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
