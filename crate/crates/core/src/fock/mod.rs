//! K = SO(3) x SO(2) isotypic analysis of graded polynomial spaces.
//!
//! The degree-d space splits into joint eigenspaces of the so(3)
//! Casimir (eigenvalue l(l+1) on the (2l+1)-dimensional type) and the
//! so(2) rotation generator (eigenvalue i*n on the character n).  The
//! so(2) generator is diagonalized on the explicit eigenbasis
//! w+ = z4 + i z5, w- = z4 - i z5, which block-splits the Casimir by
//! the (w+, w-) exponents; each block is a small exact eigenspace
//! computation on polynomials in z1..z3.
//!
//! Everything is computed for the connected group SO(3) x SO(2); the
//! component group of O(3) x O(2) is not tracked.

mod cochain;
mod decompose;

pub use cochain::{
    equivariant_cochains, image_isotype_dims, p11_isotype_basis, p11_wedges, phi_plus,
    rel_lie_differential, restriction_rank_on_five_isotype, value_span, wedge_decompose_p11,
    xi_vector, zeta, zeta_bar, Cochain, PVector,
};
pub use decompose::{
    decompose_degree, degree_of, harmonics, howe_span_check, poly_row_matrix,
    poly_row_matrix_with, FockError, FockSpace, HoweCertificate, KTypeComponent,
    DEFAULT_DEGREE_CAP, MAX_DEGREE_CAP,
};

/// An irreducible K = SO(3) x SO(2) type: odd SO(3)-dimension and an
/// SO(2)-character index n (the character sends the angle theta to
/// exp(i n theta)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct KType {
    so3_dim: usize,
    so2_char: i64,
}

impl KType {
    pub fn new(so3_dim: usize, so2_char: i64) -> Self {
        assert!(so3_dim % 2 == 1, "SO(3) dimension must be odd");
        KType { so3_dim, so2_char }
    }

    /// The trivial type 1 (x) 1.
    pub const fn trivial() -> Self {
        KType { so3_dim: 1, so2_char: 0 }
    }

    /// 3 (x) 1.
    pub const fn vector() -> Self {
        KType { so3_dim: 3, so2_char: 0 }
    }

    /// 5 (x) 1.
    pub const fn five() -> Self {
        KType { so3_dim: 5, so2_char: 0 }
    }

    pub fn so3_dim(&self) -> usize {
        self.so3_dim
    }

    pub fn so2_char(&self) -> i64 {
        self.so2_char
    }

    /// The so(3) highest weight l with dimension 2l + 1.
    pub fn ell(&self) -> usize {
        (self.so3_dim - 1) / 2
    }
}

impl core::fmt::Display for KType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.so3_dim, self.so2_char)
    }
}
