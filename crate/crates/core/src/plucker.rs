//! The wedge-square / skew-matrix dictionary and the isogeny
//! Sp(4) -> SO_0(3,2).
//!
//! Conventions, fixed once:
//! * wedge coordinates are ordered (12, 13, 14, 23, 24, 34) and all
//!   signs derive from det(e1^e2^e3^e4) = 1;
//! * psi = e1^e3 + e2^e4 corresponds to the standard symplectic matrix
//!   Psi = [[0, 1_2], [-1_2, 0]];
//! * the five coordinates (a, b, c, d, e) on the psi-orthogonal
//!   complement refer to the rescaled dual basis in which the induced
//!   form is Delta(a, b, c, d, e) = b^2 - 4ac - 4de, labelled so that
//!   the singular-relation pairing reads
//!   a tau1 + b tau12 + c tau2 + d (tau12^2 - tau1 tau2) + e.
//!
//! The skew matrix of (a, b, c, d, e) is
//!   m12 = d, m13 = b/2, m14 = -a, m23 = c, m24 = -b/2, m34 = -e,
//! and the doubling of the rescaled dual basis is exactly what makes
//! Delta an integer form on integer five-tuples.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exact::{rat, rat_int, signature_of_symmetric, Matrix, Rat, Signature};

/// Wedge coordinate slots in order (12, 13, 14, 23, 24, 34).
pub const WEDGE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PluckerError {
    Singular,
    NotSymplectic,
    NotOrthogonalToPsi,
    NotSkew,
}

impl fmt::Display for PluckerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PluckerError::Singular => write!(f, "matrix is singular"),
            PluckerError::NotSymplectic => write!(f, "matrix does not preserve Psi"),
            PluckerError::NotOrthogonalToPsi => write!(f, "skew matrix is not orthogonal to Psi"),
            PluckerError::NotSkew => write!(f, "matrix is not skew-symmetric"),
        }
    }
}

/// A vector in the second wedge power of Q^4, coordinates ordered as in
/// [`WEDGE_PAIRS`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeVector(pub [Rat; 6]);

impl WedgeVector {
    pub fn zero() -> Self {
        WedgeVector(core::array::from_fn(|_| Rat::zero()))
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        WedgeVector(core::array::from_fn(|i| rat_int(v[i])))
    }

    /// Coordinate p_ij (i < j, 0-indexed).
    pub fn p(&self, i: usize, j: usize) -> &Rat {
        let slot = WEDGE_PAIRS
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .expect("valid wedge pair");
        &self.0[slot]
    }

    /// e_i ^ e_j for i < j (0-indexed).
    pub fn basis(i: usize, j: usize) -> Self {
        let mut v = Self::zero();
        let slot = WEDGE_PAIRS
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .expect("valid wedge pair");
        v.0[slot] = Rat::one();
        v
    }

    /// The invariant bivector psi = e1^e3 + e2^e4.
    pub fn psi() -> Self {
        let mut v = Self::zero();
        v.0[1] = Rat::one(); // 13
        v.0[4] = Rat::one(); // 24
        v
    }

    /// x ^ y of two 4-vectors: the 2x2 minors.
    pub fn from_vectors(x: &[Rat; 4], y: &[Rat; 4]) -> Self {
        WedgeVector(core::array::from_fn(|s| {
            let (i, j) = WEDGE_PAIRS[s];
            &x[i] * &y[j] - &x[j] * &y[i]
        }))
    }
}

/// A 4x4 skew-symmetric rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix4(Matrix<Rat>);

impl SkewMatrix4 {
    pub fn new(m: Matrix<Rat>) -> Result<Self, PluckerError> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(PluckerError::NotSkew);
        }
        for i in 0..4 {
            for j in 0..=i {
                if m[(i, j)] != -m[(j, i)].clone() {
                    return Err(PluckerError::NotSkew);
                }
            }
        }
        Ok(SkewMatrix4(m))
    }

    /// Build from the upper-triangle entries (m12, m13, m14, m23, m24, m34).
    pub fn from_upper(u: [Rat; 6]) -> Self {
        let mut m = Matrix::zero(4, 4);
        for (slot, (i, j)) in WEDGE_PAIRS.iter().enumerate() {
            m[(*i, *j)] = u[slot].clone();
            m[(*j, *i)] = -u[slot].clone();
        }
        SkewMatrix4(m)
    }

    pub fn matrix(&self) -> &Matrix<Rat> {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.0[(i, j)]
    }

    /// The standard symplectic form Psi, the matrix of psi.
    pub fn psi() -> Self {
        wedge_to_skew(&WedgeVector::psi())
    }
}

/// The coordinate bijection between bivectors and skew matrices:
/// sum r_ij e_i^e_j maps to the matrix (r_ij).
pub fn wedge_to_skew(v: &WedgeVector) -> SkewMatrix4 {
    SkewMatrix4::from_upper(v.0.clone())
}

pub fn skew_to_wedge(m: &SkewMatrix4) -> WedgeVector {
    WedgeVector(core::array::from_fn(|s| {
        let (i, j) = WEDGE_PAIRS[s];
        m.entry(i, j).clone()
    }))
}

/// The symmetric bilinear form b on bivectors, through the wedge
/// product into the top power: xi ^ eta = b(xi, eta) e1^e2^e3^e4.
pub fn b_form(xi: &WedgeVector, eta: &WedgeVector) -> Rat {
    let mut out = Rat::zero();
    for (s1, (i, j)) in WEDGE_PAIRS.iter().enumerate() {
        for (s2, (k, l)) in WEDGE_PAIRS.iter().enumerate() {
            let mut idx = [*i, *j, *k, *l];
            let Some(sign) = perm_sign(&mut idx) else {
                continue;
            };
            let prod = &xi.0[s1] * &eta.0[s2];
            out += prod * rat_int(sign);
        }
    }
    out
}

fn perm_sign(idx: &mut [usize; 4]) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..4 {
        let mut j = i;
        while j > 0 && idx[j - 1] >= idx[j] {
            if idx[j - 1] == idx[j] {
                return None;
            }
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some(sign)
}

/// The invariant form on skew matrices:
/// b0(M, N) = 1/2 Tr(M Psi N Psi) - 1/4 Tr(M Psi) Tr(N Psi).
pub fn b0_form(m: &SkewMatrix4, n: &SkewMatrix4) -> Rat {
    let psi = SkewMatrix4::psi();
    let mp = m.matrix().matmul(psi.matrix());
    let np = n.matrix().matmul(psi.matrix());
    let tr = |x: &Matrix<Rat>| -> Rat {
        let mut t = Rat::zero();
        for i in 0..4 {
            t += x[(i, i)].clone();
        }
        t
    };
    let t1 = tr(&mp.matmul(&np));
    let t2 = tr(&mp) * tr(&np);
    t1 * rat(1, 2) - t2 * rat(1, 4)
}

/// The coordinate expansion of b0, for cross-checking:
/// m12 n34 + m34 n12 + m23 n14 + m14 n23 - m24 n13 - m13 n24.
pub fn b0_coordinates(m: &SkewMatrix4, n: &SkewMatrix4) -> Rat {
    let e = |x: &SkewMatrix4, i: usize, j: usize| x.entry(i, j).clone();
    e(m, 0, 1) * e(n, 2, 3) + e(m, 2, 3) * e(n, 0, 1) + e(m, 1, 2) * e(n, 0, 3)
        + e(m, 0, 3) * e(n, 1, 2)
        - e(m, 1, 3) * e(n, 0, 2)
        - e(m, 0, 2) * e(n, 1, 3)
}

/// Five coordinates (a, b, c, d, e) on the psi-orthogonal complement,
/// in the rescaled dual basis carrying Delta = b^2 - 4ac - 4de.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveCoords {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
}

impl FiveCoords {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat) -> Self {
        FiveCoords { a, b, c, d, e }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        FiveCoords::new(rat_int(a), rat_int(b), rat_int(c), rat_int(d), rat_int(e))
    }

    pub fn as_array(&self) -> [Rat; 5] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
        ]
    }

    pub fn from_array(v: [Rat; 5]) -> Self {
        let [a, b, c, d, e] = v;
        FiveCoords { a, b, c, d, e }
    }
}

/// The discriminant quadratic form Delta = b^2 - 4ac - 4de.
pub fn delta_form(v: &FiveCoords) -> Rat {
    &v.b * &v.b - rat_int(4) * (&v.a * &v.c) - rat_int(4) * (&v.d * &v.e)
}

/// The polarization pairing of Delta: B(x, y) = (Delta(x+y) - Delta(x)
/// - Delta(y)) / 2, integer-valued on integer tuples.
pub fn delta_pairing(x: &FiveCoords, y: &FiveCoords) -> Rat {
    &x.b * &y.b
        - rat_int(2) * (&x.a * &y.c + &x.c * &y.a)
        - rat_int(2) * (&x.d * &y.e + &x.e * &y.d)
}

/// Gram matrix of Delta in the (a, b, c, d, e) coordinates.
pub fn delta_gram() -> Matrix<Rat> {
    let mut g = Matrix::zero(5, 5);
    g[(1, 1)] = rat_int(1);
    g[(0, 2)] = rat_int(-2);
    g[(2, 0)] = rat_int(-2);
    g[(3, 4)] = rat_int(-2);
    g[(4, 3)] = rat_int(-2);
    g
}

/// Signature of the Delta form: (3, 2, 0).
pub fn delta_signature() -> Signature {
    signature_of_symmetric(&delta_gram()).expect("delta gram is symmetric")
}

/// The skew matrix of a five-coordinate vector.
pub fn embed_five(v: &FiveCoords) -> SkewMatrix4 {
    let half_b = &v.b * rat(1, 2);
    SkewMatrix4::from_upper([
        v.d.clone(),
        half_b.clone(),
        -v.a.clone(),
        v.c.clone(),
        -half_b,
        -v.e.clone(),
    ])
}

/// Coordinates of a skew matrix orthogonal to Psi; errors unless
/// m13 + m24 = 0.
pub fn project_psi_perp(m: &SkewMatrix4) -> Result<FiveCoords, PluckerError> {
    let s = m.entry(0, 2).clone() + m.entry(1, 3).clone();
    if !s.is_zero() {
        return Err(PluckerError::NotOrthogonalToPsi);
    }
    Ok(FiveCoords {
        a: -m.entry(0, 3).clone(),
        b: m.entry(0, 2).clone() - m.entry(1, 3).clone(),
        c: m.entry(1, 2).clone(),
        d: m.entry(0, 1).clone(),
        e: -m.entry(2, 3).clone(),
    })
}

/// Is g symplectic for Psi, i.e. g^t Psi g = Psi?
pub fn is_symplectic(g: &Matrix<Rat>) -> bool {
    if g.rows() != 4 || g.cols() != 4 {
        return false;
    }
    let psi = SkewMatrix4::psi();
    g.transpose().matmul(psi.matrix()).matmul(g) == *psi.matrix()
}

/// Functorial action on wedge coordinates: the matrix of 2x2 minors.
/// wedge_square(gh) = wedge_square(g) wedge_square(h).
pub fn wedge_square(g: &Matrix<Rat>) -> Result<Matrix<Rat>, PluckerError> {
    if g.rows() != 4 || g.cols() != 4 {
        return Err(PluckerError::Singular);
    }
    if g.det().map_err(|_| PluckerError::Singular)?.is_zero() {
        return Err(PluckerError::Singular);
    }
    Ok(Matrix::from_fn(6, 6, |r, c| {
        let (i, j) = WEDGE_PAIRS[r];
        let (k, l) = WEDGE_PAIRS[c];
        &g[(i, k)] * &g[(j, l)] - &g[(i, l)] * &g[(j, k)]
    }))
}

/// The isogeny: the 5x5 matrix of the conjugation action of a
/// symplectic g on the five coordinates.  Multiplicative, trivial on
/// -1, and Delta-orthogonal.
pub fn iso_rho(g: &Matrix<Rat>) -> Result<Matrix<Rat>, PluckerError> {
    if !is_symplectic(g) {
        return Err(PluckerError::NotSymplectic);
    }
    let gt = g.transpose();
    let mut out = Matrix::zero(5, 5);
    for col in 0..5 {
        let mut basis = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        basis[col] = Rat::one();
        let m = embed_five(&FiveCoords::from_array(basis));
        let conj = g.matmul(m.matrix()).matmul(&gt);
        let conj = SkewMatrix4::new(conj).expect("conjugate of skew is skew");
        let v = project_psi_perp(&conj).expect("conjugation preserves the orthogonal complement");
        let arr = v.as_array();
        for row in 0..5 {
            out[(row, col)] = arr[row].clone();
        }
    }
    Ok(out)
}

/// Quadric of decomposable bivectors: Q(p) = p12 p34 - p13 p24 + p14 p23.
pub fn plucker_quadric(p: &WedgeVector) -> Rat {
    let q = |i: usize, j: usize| p.p(i, j).clone();
    q(0, 1) * q(2, 3) - q(0, 2) * q(1, 3) + q(0, 3) * q(1, 2)
}

/// Does the wedge of two 4-vectors satisfy the quadric? (Always true.)
pub fn plucker_quadric_check(x: &[Rat; 4], y: &[Rat; 4]) -> bool {
    plucker_quadric(&WedgeVector::from_vectors(x, y)).is_zero()
}

/// The restricted quadric q(p) = p13^2 + p12 p34 + p14 p23 on the
/// subspace p24 = -p13; it vanishes exactly on symplectic-isotropic
/// decomposables.
pub fn restricted_quadric(p: &WedgeVector) -> Rat {
    let q = |i: usize, j: usize| p.p(i, j).clone();
    let p13 = q(0, 2);
    &p13 * &p13 + q(0, 1) * q(2, 3) + q(0, 3) * q(1, 2)
}

/// The symplectic generator set as rational matrices.
pub fn symplectic_generators() -> Vec<Matrix<Rat>> {
    crate::cycles::sp4z_generators()
        .iter()
        .map(|g| Matrix::from_fn(4, 4, |r, c| rat_int(g[r][c])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: [[i64; 4]; 4]) -> Matrix<Rat> {
        Matrix::from_fn(4, 4, |r, c| rat_int(rows[r][c]))
    }

    fn j_matrix() -> Matrix<Rat> {
        mat([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    }

    fn transvection_e11() -> Matrix<Rat> {
        mat([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    }

    #[test]
    fn wedge_square_of_identity() {
        let id = Matrix::<Rat>::identity(4);
        assert_eq!(wedge_square(&id).unwrap(), Matrix::identity(6));
        assert_eq!(wedge_square(&Matrix::zero(4, 4)), Err(PluckerError::Singular));
    }

    #[test]
    fn wedge_square_is_functorial() {
        let g = j_matrix();
        let h = transvection_e11();
        let gh = g.matmul(&h);
        assert_eq!(
            wedge_square(&gh).unwrap(),
            wedge_square(&g).unwrap().matmul(&wedge_square(&h).unwrap())
        );
    }

    #[test]
    fn b_form_normalization() {
        // b(e1^e2, e3^e4) = det(e1^e2^e3^e4) = 1
        let a = WedgeVector::basis(0, 1);
        let b = WedgeVector::basis(2, 3);
        assert_eq!(b_form(&a, &b), rat_int(1));
        // b(e1^e3, e2^e4) = -1 (odd permutation 1324)
        assert_eq!(
            b_form(&WedgeVector::basis(0, 2), &WedgeVector::basis(1, 3)),
            rat_int(-1)
        );
    }

    #[test]
    fn b_scales_by_determinant() {
        let g = mat([[1, 2, 0, 1], [0, 1, 1, 0], [1, 0, 1, 0], [0, 0, 2, 1]]);
        let det = g.det().unwrap();
        assert!(!det.is_zero());
        let w = wedge_square(&g).unwrap();
        for (xi, eta) in [
            (
                WedgeVector::from_ints([1, 0, 2, -1, 0, 3]),
                WedgeVector::from_ints([0, 1, 1, 1, -2, 0]),
            ),
            (WedgeVector::psi(), WedgeVector::from_ints([2, -1, 0, 0, 1, 1])),
        ] {
            let gv = |v: &WedgeVector| -> WedgeVector {
                let moved = w.mul_vec(&v.0.to_vec());
                WedgeVector(core::array::from_fn(|i| moved[i].clone()))
            };
            assert_eq!(b_form(&gv(&xi), &gv(&eta)), b_form(&xi, &eta) * det.clone());
        }
    }

    #[test]
    fn psi_is_fixed_by_symplectic_wedge_square() {
        for g in [j_matrix(), transvection_e11()] {
            assert!(is_symplectic(&g));
            let w = wedge_square(&g).unwrap();
            let psi = WedgeVector::psi();
            assert_eq!(w.mul_vec(&psi.0.to_vec()), psi.0.to_vec());
        }
    }

    #[test]
    fn b_and_b0_agree_under_the_bijection() {
        let xs = [
            WedgeVector::from_ints([1, -2, 0, 3, 1, 1]),
            WedgeVector::from_ints([0, 1, 1, 0, -1, 2]),
            WedgeVector::psi(),
        ];
        for xi in &xs {
            for eta in &xs {
                let m = wedge_to_skew(xi);
                let n = wedge_to_skew(eta);
                assert_eq!(b_form(xi, eta), b0_form(&m, &n));
                assert_eq!(b0_form(&m, &n), b0_coordinates(&m, &n));
                assert_eq!(skew_to_wedge(&m), *xi);
            }
        }
    }

    #[test]
    fn b0_is_integer_on_integer_skews() {
        let m = wedge_to_skew(&WedgeVector::from_ints([3, -1, 4, 1, -5, 9]));
        let n = wedge_to_skew(&WedgeVector::from_ints([2, 7, -1, 8, 2, -8]));
        assert!(b0_form(&m, &n).is_integer());
    }

    #[test]
    fn five_coordinate_round_trip() {
        let v = FiveCoords::from_ints(2, -3, 5, 7, -1);
        let m = embed_five(&v);
        assert_eq!(project_psi_perp(&m).unwrap(), v);
        // psi is not orthogonal to itself
        assert_eq!(
            project_psi_perp(&SkewMatrix4::psi()),
            Err(PluckerError::NotOrthogonalToPsi)
        );
    }

    #[test]
    fn f2_direction_has_delta_one() {
        // The rescaled dual basis vector in the b-direction: m13 = 1/2,
        // m24 = -1/2.
        let m = SkewMatrix4::from_upper([
            rat_int(0),
            rat(1, 2),
            rat_int(0),
            rat_int(0),
            rat(-1, 2),
            rat_int(0),
        ]);
        let v = project_psi_perp(&m).unwrap();
        assert_eq!(v, FiveCoords::from_ints(0, 1, 0, 0, 0));
        assert_eq!(delta_form(&v), rat_int(1));
    }

    #[test]
    fn delta_matches_b0_doubling() {
        // Delta(project(M)) = 2 b0(M, M) on the orthogonal complement,
        // and the Gram matrix reproduces Delta.
        for v in [
            FiveCoords::from_ints(1, 0, -1, 0, 0),
            FiveCoords::from_ints(0, 1, 0, 0, 0),
            FiveCoords::from_ints(2, 3, -1, 1, 4),
        ] {
            let m = embed_five(&v);
            assert_eq!(delta_form(&v), b0_form(&m, &m) * rat_int(2));
            let arr = v.as_array();
            let gv = delta_gram().mul_vec(&arr.to_vec());
            let mut quad = Rat::zero();
            for i in 0..5 {
                quad = quad + &arr[i] * &gv[i];
            }
            assert_eq!(quad, delta_form(&v));
            // pairing polarizes the form
            assert_eq!(delta_pairing(&v, &v), delta_form(&v));
        }
    }

    #[test]
    fn delta_signature_is_three_two() {
        let s = delta_signature();
        assert_eq!((s.plus, s.minus, s.zero), (3, 2, 0));
        assert!(delta_gram().kernel_basis().is_empty());
    }

    #[test]
    fn iso_rho_kernel_and_identity() {
        let id = Matrix::<Rat>::identity(4);
        assert_eq!(iso_rho(&id).unwrap(), Matrix::identity(5));
        let neg = id.scale(&rat_int(-1));
        assert_eq!(iso_rho(&neg).unwrap(), Matrix::identity(5));
    }

    #[test]
    fn iso_rho_rejects_non_symplectic() {
        let g = mat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(iso_rho(&g), Err(PluckerError::NotSymplectic));
    }

    #[test]
    fn iso_rho_is_multiplicative_and_orthogonal() {
        let g = j_matrix();
        let h = transvection_e11();
        let rg = iso_rho(&g).unwrap();
        let rh = iso_rho(&h).unwrap();
        assert_eq!(iso_rho(&g.matmul(&h)).unwrap(), rg.matmul(&rh));
        let gram = delta_gram();
        for r in [&rg, &rh] {
            assert_eq!(r.transpose().matmul(&gram).matmul(r), gram);
            assert_eq!(r.det().unwrap(), rat_int(1));
        }
    }

    #[test]
    fn intertwining_with_projection() {
        let g = j_matrix().matmul(&transvection_e11());
        let rho = iso_rho(&g).unwrap();
        let v = FiveCoords::from_ints(1, 2, 3, -1, 0);
        let m = embed_five(&v);
        let moved = g.matmul(m.matrix()).matmul(&g.transpose());
        let moved = SkewMatrix4::new(moved).unwrap();
        let lhs = project_psi_perp(&moved).unwrap();
        let rho_v = rho.mul_vec(&v.as_array().to_vec());
        let rhs = FiveCoords::from_array(core::array::from_fn(|i| rho_v[i].clone()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadric_vanishes_on_decomposables() {
        let x = [rat_int(1), rat_int(0), rat_int(2), rat_int(-1)];
        let y = [rat_int(0), rat_int(1), rat_int(1), rat_int(3)];
        assert!(plucker_quadric_check(&x, &y));
        let e1 = [rat_int(1), rat_int(0), rat_int(0), rat_int(0)];
        let e2 = [rat_int(0), rat_int(1), rat_int(0), rat_int(0)];
        assert!(plucker_quadric_check(&e1, &e2));
    }

    #[test]
    fn psi_is_not_decomposable() {
        assert_eq!(plucker_quadric(&WedgeVector::psi()), rat_int(-1));
    }

    #[test]
    fn restricted_quadric_on_isotropic_decomposables() {
        // x, y with <x, y>_Psi = 0 give p13 + p24 = 0 and q(p) = 0.
        let x = [rat_int(1), rat_int(2), rat_int(0), rat_int(1)];
        let y = [rat_int(3), rat_int(1), rat_int(-1), rat_int(1)];
        let pairing = &x[0] * &y[2] + &x[1] * &y[3] - &x[2] * &y[0] - &x[3] * &y[1];
        assert!(pairing.is_zero());
        let p = WedgeVector::from_vectors(&x, &y);
        let s = p.p(0, 2).clone() + p.p(1, 3).clone();
        assert!(s.is_zero());
        assert!(restricted_quadric(&p).is_zero());
    }
}
