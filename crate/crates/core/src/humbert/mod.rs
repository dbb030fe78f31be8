//! Humbert surface arithmetic: singular relations, discriminants and
//! normal forms, exact membership of period points, Neron-Severi ranks,
//! and the positive 3-plane attached to a period point.
//!
//! A singular relation is an integer five-tuple (a, b, c, d, e) pairing
//! with a symmetric period matrix through
//!
//! ```text
//!   a tau1 + b tau12 + c tau2 + d (tau12^2 - tau1 tau2) + e = 0
//! ```
//!
//! with discriminant Delta = b^2 - 4ac - 4de.  Period points are kept
//! exact: the entries of tau live in a table algebra over Q, so
//! membership and kernel computations are algebra identities; the only
//! numeric steps are order relations (positivity of the imaginary part
//! and of the restricted form), which are not algebra data.
//!
//! For context (out of scope here, recorded only): on the level-N
//! toroidal compactification, ten times the Lefschetz class equals
//! twice the sum of the discriminant-one surfaces plus N times the
//! boundary, so the surfaces of discriminant one already span the
//! polarization direction.

pub mod numeric;

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{
    rat_int, restrict_scalars, AlgebraElement, AlgebraError, AlgebraLinearForm, AlgebraSpec,
    Matrix, Rat,
};
use crate::plucker::{delta_gram, FiveCoords};

use numeric::{
    cmat2_inv, cmat2_mul, containment_defect_sqr, kernel_f64, subspace_distance_sqr,
    sym2_positive_definite, C64, CMat2,
};

/// Positivity checks use this fixed tolerance.
pub const POSITIVITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HumbertError {
    /// Discriminants of singular relations are 0 or 1 mod 4 and positive
    /// for a normal form.
    BadDiscriminant(i64),
    /// Entries of a period point must share one algebra.
    MixedAlgebras,
    /// The numeric imaginary part is not positive definite.
    ImaginaryPartNotPositive,
    /// The numeric singular-relation system does not have a
    /// 3-dimensional solution space.
    NumericalRankDeficiency { found: usize },
}

impl fmt::Display for HumbertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HumbertError::BadDiscriminant(d) => {
                write!(f, "{d} is not a positive discriminant (0 or 1 mod 4)")
            }
            HumbertError::MixedAlgebras => write!(f, "period entries mix different algebras"),
            HumbertError::ImaginaryPartNotPositive => {
                write!(f, "imaginary part is not positive definite")
            }
            HumbertError::NumericalRankDeficiency { found } => {
                write!(f, "numeric solution space has dimension {found}, expected 3")
            }
        }
    }
}

impl From<AlgebraError> for HumbertError {
    fn from(_: AlgebraError) -> Self {
        HumbertError::MixedAlgebras
    }
}

/// An integer singular relation (a, b, c, d, e).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularRelation {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
}

impl SingularRelation {
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        SingularRelation { a, b, c, d, e }
    }

    pub fn vector(&self) -> [i64; 5] {
        [self.a, self.b, self.c, self.d, self.e]
    }

    pub fn discriminant(&self) -> i64 {
        crate::cycles::discriminant(&self.vector())
    }

    pub fn content(&self) -> i64 {
        crate::cycles::content(&self.vector())
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn scale(&self, t: i64) -> Self {
        SingularRelation::new(t * self.a, t * self.b, t * self.c, t * self.d, t * self.e)
    }

    pub fn five_coords(&self) -> FiveCoords {
        FiveCoords::from_ints(self.a, self.b, self.c, self.d, self.e)
    }
}

/// Delta of a singular relation; always 0 or 1 mod 4.
pub fn discriminant(rel: &SingularRelation) -> i64 {
    rel.discriminant()
}

/// The classical normal form of a positive discriminant:
/// (1, k, (k^2 - Delta)/4, 0, 0) with k = Delta mod 2.
pub fn normal_form(delta: i64) -> Result<SingularRelation, HumbertError> {
    if delta <= 0 || !matches!(delta.rem_euclid(4), 0 | 1) {
        return Err(HumbertError::BadDiscriminant(delta));
    }
    let k = delta.rem_euclid(2);
    let rel = SingularRelation::new(1, k, (k * k - delta) / 4, 0, 0);
    debug_assert_eq!(rel.discriminant(), delta);
    Ok(rel)
}

/// An exact period point: a symmetric 2x2 matrix with entries in one
/// table algebra, together with its numeric embedding.
#[derive(Clone)]
pub struct SiegelPointExact {
    tau1: AlgebraElement,
    tau12: AlgebraElement,
    tau2: AlgebraElement,
    numeric: CMat2,
}

impl SiegelPointExact {
    pub fn new(
        tau1: AlgebraElement,
        tau12: AlgebraElement,
        tau2: AlgebraElement,
    ) -> Result<Self, HumbertError> {
        // same-algebra check via a throwaway sum
        let _ = tau1.add(&tau12)?;
        let _ = tau1.add(&tau2)?;
        let n1 = tau1.embed();
        let n12 = tau12.embed();
        let n2 = tau2.embed();
        let numeric: CMat2 = [
            [C64::new(n1.0, n1.1), C64::new(n12.0, n12.1)],
            [C64::new(n12.0, n12.1), C64::new(n2.0, n2.1)],
        ];
        if !sym2_positive_definite(n1.1, n12.1, n2.1, POSITIVITY_TOL) {
            return Err(HumbertError::ImaginaryPartNotPositive);
        }
        Ok(SiegelPointExact { tau1, tau12, tau2, numeric })
    }

    /// Diagonal point diag(t1, t2).
    pub fn diagonal(
        algebra: Arc<AlgebraSpec>,
        t1: AlgebraElement,
        t2: AlgebraElement,
    ) -> Result<Self, HumbertError> {
        let zero = AlgebraElement::zero(algebra);
        Self::new(t1, zero, t2)
    }

    pub fn algebra(&self) -> &Arc<AlgebraSpec> {
        self.tau1.algebra()
    }

    pub fn tau1(&self) -> &AlgebraElement {
        &self.tau1
    }

    pub fn tau12(&self) -> &AlgebraElement {
        &self.tau12
    }

    pub fn tau2(&self) -> &AlgebraElement {
        &self.tau2
    }

    pub fn numeric(&self) -> &CMat2 {
        &self.numeric
    }

    /// The coefficients (tau1, tau12, tau2, tau12^2 - tau1 tau2, 1) of
    /// the singular-relation pairing, as algebra elements.
    pub fn relation_coefficients(&self) -> Result<[AlgebraElement; 5], HumbertError> {
        let quad = self
            .tau12
            .mul(&self.tau12)?
            .sub(&self.tau1.mul(&self.tau2)?)?;
        let one = AlgebraElement::scalar(self.algebra().clone(), rat_int(1));
        Ok([
            self.tau1.clone(),
            self.tau12.clone(),
            self.tau2.clone(),
            quad,
            one,
        ])
    }

    /// Numeric coefficient row of the singular relation.
    pub fn numeric_relation_row(&self) -> [C64; 5] {
        let t1 = self.numeric[0][0];
        let t12 = self.numeric[0][1];
        let t2 = self.numeric[1][1];
        let quad = t12.mul(t12).sub(t1.mul(t2));
        [t1, t12, t2, quad, C64::one()]
    }
}

impl fmt::Debug for SiegelPointExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tau = [[{:?}, {:?}], [{:?}, {:?}]]",
            self.tau1, self.tau12, self.tau12, self.tau2
        )
    }
}

/// Exact evaluation of the singular relation at an exact period point.
pub fn membership(tau: &SiegelPointExact, rel: &SingularRelation) -> Result<bool, HumbertError> {
    let coeffs = tau.relation_coefficients()?;
    let ints = rel.vector();
    let mut acc = AlgebraElement::zero(tau.algebra().clone());
    for (c, k) in coeffs.iter().zip(ints) {
        acc = acc.add(&c.scale(&rat_int(k)))?;
    }
    Ok(acc.is_zero())
}

/// The exact rational solutions of the singular-relation system at tau,
/// as five-coordinate vectors, together with the Neron-Severi rank
/// 1 + dim (the 1 accounting for the polarization class).
pub fn t11_and_ns_rank(
    tau: &SiegelPointExact,
) -> Result<(Vec<FiveCoords>, usize), HumbertError> {
    let coeffs = tau.relation_coefficients()?;
    let form = AlgebraLinearForm { coeffs: coeffs.to_vec() };
    let sys = restrict_scalars(&form)?;
    let kernel = sys.kernel_basis();
    let basis: Vec<FiveCoords> = kernel
        .into_iter()
        .map(|v| {
            let arr: [Rat; 5] = core::array::from_fn(|i| v[i].clone());
            FiveCoords::from_array(arr)
        })
        .collect();
    let rank = 1 + basis.len();
    Ok((basis, rank))
}

/// The real 3-plane of numeric singular-relation solutions, carrying a
/// positive definite restriction of the discriminant form.
pub struct HodgeFiber {
    pub t11_basis: Vec<FiveCoords>,
    pub z_tau: Vec<[f64; 5]>,
    /// Principal minors of the restricted Gram matrix, for reporting.
    pub restricted_minors: [f64; 3],
}

/// Compute the fiber at an exact period point.
pub fn z_tau(tau: &SiegelPointExact) -> Result<HodgeFiber, HumbertError> {
    let (t11_basis, _) = t11_and_ns_rank(tau)?;
    let z = z_tau_numeric(&tau.numeric_relation_row())?;
    // restricted Gram and its minors
    let minors = restricted_gram_minors(&z);
    if !(minors[0] > POSITIVITY_TOL && minors[1] > POSITIVITY_TOL && minors[2] > POSITIVITY_TOL) {
        // The restriction must be positive definite on a genuine period
        // point; failure indicates the embedding is inconsistent.
        return Err(HumbertError::NumericalRankDeficiency { found: z.len() });
    }
    Ok(HodgeFiber { t11_basis, z_tau: z, restricted_minors: minors })
}

/// Solve the numeric singular relation: real and imaginary parts give a
/// 2x5 real system whose kernel must be 3-dimensional.
pub fn z_tau_numeric(row: &[C64; 5]) -> Result<Vec<[f64; 5]>, HumbertError> {
    let rows = [
        core::array::from_fn(|i| row[i].re),
        core::array::from_fn(|i| row[i].im),
    ];
    let kernel = kernel_f64(&rows, 1e-9);
    if kernel.len() != 3 {
        return Err(HumbertError::NumericalRankDeficiency { found: kernel.len() });
    }
    Ok(kernel)
}

fn restricted_gram_minors(z: &[[f64; 5]]) -> [f64; 3] {
    let gram = delta_gram();
    let gf: [[f64; 5]; 5] = core::array::from_fn(|r| {
        core::array::from_fn(|c| crate::exact::rat_to_f64(&gram[(r, c)]))
    });
    let mut g = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0.0;
            for r in 0..5 {
                for c in 0..5 {
                    acc += z[i][r] * gf[r][c] * z[j][c];
                }
            }
            g[i][j] = acc;
        }
    }
    [
        g[0][0],
        g[0][0] * g[1][1] - g[0][1] * g[1][0],
        det3(&g),
    ]
}

fn det3(g: &[[f64; 3]; 3]) -> f64 {
    g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
}

/// Moebius action of a real symplectic matrix on a numeric period
/// point: (A tau + B)(C tau + D)^{-1}.
pub fn mobius(g: &[[i64; 4]; 4], tau: &CMat2) -> Option<CMat2> {
    let blk = |r0: usize, c0: usize| -> CMat2 {
        core::array::from_fn(|r| core::array::from_fn(|c| C64::new(g[r0 + r][c0 + c] as f64, 0.0)))
    };
    let a = blk(0, 0);
    let b = blk(0, 2);
    let c = blk(2, 0);
    let d = blk(2, 2);
    let num = add2(&cmat2_mul(&a, tau), &b);
    let den = add2(&cmat2_mul(&c, tau), &d);
    let den_inv = cmat2_inv(&den)?;
    Some(cmat2_mul(&num, &den_inv))
}

fn add2(a: &CMat2, b: &CMat2) -> CMat2 {
    core::array::from_fn(|r| core::array::from_fn(|c| a[r][c].add(b[r][c])))
}

/// Numeric relation row of a numeric period point.
pub fn numeric_relation_row(tau: &CMat2) -> [C64; 5] {
    let t1 = tau[0][0];
    let t12 = tau[0][1];
    let t2 = tau[1][1];
    let quad = t12.mul(t12).sub(t1.mul(t2));
    [t1, t12, t2, quad, C64::one()]
}

/// The inverse transpose of an integral symplectic matrix, computed as
/// -Psi g Psi.  The row span of (tau, 1) transforms by g^t on the
/// right under the Moebius action, so singular-relation solutions
/// transform through the conjugation action of g^{-t}: the fiber
/// representation is the isogeny precomposed with this duality (an
/// inner twist by the image of the symplectic unit, trivial on J).
pub fn dual_symplectic(g: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut psi = [[0i64; 4]; 4];
    psi[0][2] = 1;
    psi[1][3] = 1;
    psi[2][0] = -1;
    psi[3][1] = -1;
    let gp = crate::cycles::matmul4(g, &psi);
    let pgp = crate::cycles::matmul4(&psi, &gp);
    let mut out = [[0i64; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            out[r][c] = -pgp[r][c];
        }
    }
    out
}

/// The representation through which the fiber transforms:
/// Z_{g tau} = period_rho(g) Z_tau.
pub fn period_rho(g: &[[i64; 4]; 4]) -> Result<Matrix<Rat>, HumbertError> {
    let dual = dual_symplectic(g);
    crate::plucker::iso_rho(&Matrix::from_fn(4, 4, |r, c| rat_int(dual[r][c])))
        .map_err(|_| HumbertError::MixedAlgebras)
}

/// Squared subspace distance between the fiber at g.tau and the
/// period_rho(g)-image of the fiber at tau.
pub fn equivariance_defect_sqr(
    tau: &SiegelPointExact,
    g: &[[i64; 4]; 4],
) -> Result<f64, HumbertError> {
    let rho = period_rho(g)?;
    let z = z_tau_numeric(&tau.numeric_relation_row())?;
    let moved_tau = mobius(g, tau.numeric()).ok_or(HumbertError::ImaginaryPartNotPositive)?;
    let z_moved = z_tau_numeric(&numeric_relation_row(&moved_tau))?;
    // rho(g) applied to the rows of z
    let rho_f: [[f64; 5]; 5] = core::array::from_fn(|r| {
        core::array::from_fn(|c| crate::exact::rat_to_f64(&rho[(r, c)]))
    });
    let z_rho: Vec<[f64; 5]> = z
        .iter()
        .map(|v| core::array::from_fn(|r| (0..5).map(|c| rho_f[r][c] * v[c]).sum()))
        .collect();
    Ok(subspace_distance_sqr(&z_moved, &z_rho))
}

/// Squared relative distance of the (numeric) relation vector from the
/// fiber plane; membership in the exact sense must match smallness of
/// this defect.
pub fn relation_in_fiber_defect_sqr(
    tau: &SiegelPointExact,
    rel: &SingularRelation,
) -> Result<f64, HumbertError> {
    let z = z_tau_numeric(&tau.numeric_relation_row())?;
    let v: [f64; 5] = core::array::from_fn(|i| rel.vector()[i] as f64);
    Ok(containment_defect_sqr(&v, &z))
}
