//! The two commuting sl2 triples on P(C^5) and the weight operator.
//!
//! The alpha triple is built from the first three variables, the mu
//! triple from the last two:
//!
//! ```text
//! X = -1/2 sum z_i^2,   Y = 1/2 sum d_i^2,   H = 1/2 sum (z_i d_i + d_i z_i)
//! ```
//!
//! Each satisfies [H, X] = 2X, [H, Y] = -2Y, [X, Y] = H, and the two
//! triples commute elementwise.

use alloc::vec::Vec;

use crate::exact::GaussQ;

use super::operator::WeylElement;

#[derive(Clone)]
pub struct Sl2Triples {
    pub x_alpha: WeylElement,
    pub y_alpha: WeylElement,
    pub h_alpha: WeylElement,
    pub x_mu: WeylElement,
    pub y_mu: WeylElement,
    pub h_mu: WeylElement,
}

impl Sl2Triples {
    pub const X_ALPHA: usize = 0;
    pub const Y_ALPHA: usize = 1;
    pub const H_ALPHA: usize = 2;
    pub const X_MU: usize = 3;
    pub const Y_MU: usize = 4;
    pub const H_MU: usize = 5;

    pub fn new() -> Self {
        Sl2Triples {
            x_alpha: x_over(1..=3),
            y_alpha: y_over(1..=3),
            h_alpha: h_over(1..=3),
            x_mu: x_over(4..=5),
            y_mu: y_over(4..=5),
            h_mu: h_over(4..=5),
        }
    }

    /// Generator alphabet in the index order of the `*_ALPHA`/`*_MU`
    /// constants, for use with operator words.
    pub fn alphabet(&self) -> Vec<WeylElement> {
        alloc::vec![
            self.x_alpha.clone(),
            self.y_alpha.clone(),
            self.h_alpha.clone(),
            self.x_mu.clone(),
            self.y_mu.clone(),
            self.h_mu.clone(),
        ]
    }

    /// The six named elements with display labels.
    pub fn named(&self) -> Vec<(&'static str, &WeylElement)> {
        alloc::vec![
            ("X_alpha", &self.x_alpha),
            ("Y_alpha", &self.y_alpha),
            ("H_alpha", &self.h_alpha),
            ("X_mu", &self.x_mu),
            ("Y_mu", &self.y_mu),
            ("H_mu", &self.h_mu),
        ]
    }
}

impl Default for Sl2Triples {
    fn default() -> Self {
        Self::new()
    }
}

fn x_over(vars: core::ops::RangeInclusive<usize>) -> WeylElement {
    let mut out = WeylElement::zero();
    for i in vars {
        let mut e = [0u16; 5];
        e[i - 1] = 2;
        out.add_term(e, [0; 5], GaussQ::from_pair(-1, 2));
    }
    out
}

fn y_over(vars: core::ops::RangeInclusive<usize>) -> WeylElement {
    let mut out = WeylElement::zero();
    for i in vars {
        let mut e = [0u16; 5];
        e[i - 1] = 2;
        out.add_term([0; 5], e, GaussQ::from_pair(1, 2));
    }
    out
}

fn h_over(vars: core::ops::RangeInclusive<usize>) -> WeylElement {
    // 1/2 (z d + d z) = z d + 1/2 per variable.
    let mut out = WeylElement::zero();
    let mut count = 0i64;
    for i in vars {
        let mut e = [0u16; 5];
        e[i - 1] = 1;
        out.add_term(e, e, GaussQ::from_int(1));
        count += 1;
    }
    out.add_term([0; 5], [0; 5], GaussQ::from_pair(count, 2));
    out
}

/// The weight operator `H' = H_alpha - H_mu`; its eigenvalue on a
/// monomial of alpha-degree `a` and mu-degree `m` is `a - m + 1/2`.
pub fn weight_operator() -> WeylElement {
    let t = Sl2Triples::new();
    t.h_alpha.sub(&t.h_mu)
}
