//! Ready-made table algebras: Q, Q(i) and Q(i, sqrt 2).
//!
//! These are the coefficient algebras used by the period-point
//! demonstrations; each constructor writes out its multiplication table
//! explicitly and goes through the validating [`AlgebraSpec::new`].

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::AlgebraSpec;
use super::scalar::{rat_int, Rat};

const SQRT2: f64 = core::f64::consts::SQRT_2;

fn coords(dim: usize, entries: &[(usize, i64)]) -> Vec<Rat> {
    let mut v = vec![Rat::from_integer(0.into()); dim];
    for &(k, c) in entries {
        v[k] = rat_int(c);
    }
    v
}

/// Q itself: dimension 1, table [[1]].
pub fn q_plain() -> Arc<AlgebraSpec> {
    AlgebraSpec::new(
        vec![String::from("1")],
        vec![vec![coords(1, &[(0, 1)])]],
        vec![(1.0, 0.0)],
    )
    .expect("Q is an algebra")
}

/// Q(i): basis {1, i} with i*i = -1.
pub fn q_i() -> Arc<AlgebraSpec> {
    let e = |k| coords(2, &[(k, 1)]);
    AlgebraSpec::new(
        vec![String::from("1"), String::from("i")],
        vec![
            vec![e(0), e(1)],
            vec![e(1), coords(2, &[(0, -1)])],
        ],
        vec![(1.0, 0.0), (0.0, 1.0)],
    )
    .expect("Q(i) is an algebra")
}

/// Q(i, sqrt 2): basis {1, i, s, is} with s^2 = 2, i^2 = -1.
pub fn q_i_sqrt2() -> Arc<AlgebraSpec> {
    let e = |k| coords(4, &[(k, 1)]);
    let table = vec![
        // 1 * {1, i, s, is}
        vec![e(0), e(1), e(2), e(3)],
        // i * {1, i, s, is} = {i, -1, is, -s}
        vec![e(1), coords(4, &[(0, -1)]), e(3), coords(4, &[(2, -1)])],
        // s * {1, i, s, is} = {s, is, 2, 2i}
        vec![e(2), e(3), coords(4, &[(0, 2)]), coords(4, &[(1, 2)])],
        // is * {1, i, s, is} = {is, -s, 2i, -2}
        vec![e(3), coords(4, &[(2, -1)]), coords(4, &[(1, 2)]), coords(4, &[(0, -2)])],
    ];
    AlgebraSpec::new(
        vec![
            String::from("1"),
            String::from("i"),
            String::from("s"),
            String::from("is"),
        ],
        table,
        vec![(1.0, 0.0), (0.0, 1.0), (SQRT2, 0.0), (0.0, SQRT2)],
    )
    .expect("Q(i, sqrt2) is an algebra")
}
