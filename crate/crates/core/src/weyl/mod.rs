//! The Weyl algebra on z1..z5 over the Gaussian rationals.
//!
//! Operators are kept in normal order (multiplications left of
//! derivatives), which makes equality syntactic. On top of the raw
//! algebra sit the two commuting sl2 triples, the star anti-involution
//! on operator words, the oscillator action of so(3,2) and its
//! commutant sl2.

mod omega;
mod operator;
mod poly;
mod sl2;
mod words;

pub use omega::{build_omega_so32, dual_sl2, k_rotation_operators, DualSl2, OmegaError, OmegaMap};
pub use operator::{TermKey, WeylElement};
pub use poly::{Exps, Poly5};
pub use sl2::{weight_operator, Sl2Triples};
pub use words::{star_eval, WordExpr};
