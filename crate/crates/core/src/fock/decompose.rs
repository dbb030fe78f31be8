//! Isotypic decomposition, harmonics, and lowest-degree spanning checks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{GaussQ, Matrix};
use crate::weyl::{Exps, Poly5, Sl2Triples, WeylElement};

use super::KType;

/// Default truncation degree; the full suite stays fast here.
pub const DEFAULT_DEGREE_CAP: u16 = 6;
/// Hard ceiling for the configurable cap.
pub const MAX_DEGREE_CAP: u16 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FockError {
    DegreeCapExceeded { requested: u16, cap: u16 },
    KTypeNotFound { ktype: KType, cap: u16 },
}

impl fmt::Display for FockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockError::DegreeCapExceeded { requested, cap } => {
                write!(f, "degree {requested} exceeds the cap {cap}")
            }
            FockError::KTypeNotFound { ktype, cap } => {
                write!(f, "K-type {ktype} does not occur in degrees <= {cap}")
            }
        }
    }
}

/// An isotypic subspace of the degree-d polynomials: all copies of one
/// K-type, spanned by an explicit homogeneous basis.
#[derive(Clone)]
pub struct KTypeComponent {
    pub ktype: KType,
    pub degree: u16,
    pub basis: Vec<Poly5>,
}

impl KTypeComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn multiplicity(&self) -> usize {
        self.basis.len() / self.ktype.so3_dim()
    }

    /// Exact check that the span is stable under the four rotation
    /// generators.
    pub fn verify_k_stable(&self) -> bool {
        let rows = poly_row_matrix(&self.basis);
        crate::weyl::k_rotation_operators().iter().all(|op| {
            let images: Vec<Poly5> = self.basis.iter().map(|p| op.apply(p)).collect();
            if images.iter().all(|p| p.is_zero()) {
                return true;
            }
            let img_rows = poly_row_matrix_with(&images, &rows.1);
            rows.0.row_span_contains(&img_rows)
        })
    }
}

/// Truncated model of the polynomial module, everything below a degree
/// cap.
#[derive(Clone, Copy)]
pub struct FockSpace {
    cap: u16,
}

impl Default for FockSpace {
    fn default() -> Self {
        FockSpace { cap: DEFAULT_DEGREE_CAP }
    }
}

impl FockSpace {
    pub fn new(cap: u16) -> Self {
        FockSpace { cap: cap.min(MAX_DEGREE_CAP) }
    }

    pub fn cap(&self) -> u16 {
        self.cap
    }

    pub fn decompose_degree(&self, d: u16) -> Result<Vec<KTypeComponent>, FockError> {
        if d > self.cap {
            return Err(FockError::DegreeCapExceeded { requested: d, cap: self.cap });
        }
        Ok(decompose_degree(d))
    }

    pub fn degree_of(&self, kt: KType) -> Result<u16, FockError> {
        degree_of(kt, self.cap)
    }

    pub fn harmonics(&self, kt: KType) -> Result<KTypeComponent, FockError> {
        harmonics(kt, self.cap)
    }

    pub fn howe_span_check(&self, kt: KType, dmax: u16) -> Result<HoweCertificate, FockError> {
        if dmax > self.cap {
            return Err(FockError::DegreeCapExceeded { requested: dmax, cap: self.cap });
        }
        howe_span_check(kt, dmax, self.cap)
    }
}

/// Split the degree-d polynomial space into K-isotypic components.
///
/// The components partition the space: the dimensions add up to
/// C(d+4, 4).
pub fn decompose_degree(d: u16) -> Vec<KTypeComponent> {
    let mut groups: BTreeMap<(usize, i64), Vec<Poly5>> = BTreeMap::new();
    for d_alpha in 0..=d {
        let so3_parts = so3_split(d_alpha);
        for p in 0..=(d - d_alpha) {
            let q = d - d_alpha - p;
            let n = p as i64 - q as i64;
            let w = w_power(p, q);
            for (ell, polys) in &so3_parts {
                let entry = groups.entry((*ell, n)).or_default();
                for h in polys {
                    entry.push(h.mul(&w));
                }
            }
        }
    }
    let mut out: Vec<KTypeComponent> = groups
        .into_iter()
        .map(|((ell, n), basis)| KTypeComponent {
            ktype: KType::new(2 * ell + 1, n),
            degree: d,
            basis,
        })
        .collect();
    out.sort_by_key(|c| (c.ktype.so3_dim(), c.ktype.so2_char()));
    out
}

/// Minimal degree <= cap in which the K-type occurs.
pub fn degree_of(kt: KType, cap: u16) -> Result<u16, FockError> {
    for d in 0..=cap {
        if decompose_degree(d).iter().any(|c| c.ktype == kt) {
            return Ok(d);
        }
    }
    Err(FockError::KTypeNotFound { ktype: kt, cap })
}

/// The harmonic space of a K-type: the intersection of its lowest-degree
/// isotypic component with the kernels of both lowering operators.
pub fn harmonics(kt: KType, cap: u16) -> Result<KTypeComponent, FockError> {
    let d = degree_of(kt, cap)?;
    let comps = decompose_degree(d);
    let comp = comps
        .into_iter()
        .find(|c| c.ktype == kt)
        .expect("component exists at its degree");
    let t = Sl2Triples::new();
    let basis = kernel_of_operators(&comp.basis, &[&t.y_alpha, &t.y_mu]);
    Ok(KTypeComponent { ktype: kt, degree: d, basis })
}

/// Per-degree dimension bookkeeping for the lowest-degree spanning
/// check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoweCertificate {
    pub ktype: KType,
    pub base_degree: u16,
    /// (degree, dim of raised-harmonic span, dim of isotypic component).
    pub per_degree: Vec<(u16, usize, usize)>,
    pub holds: bool,
}

/// Does the span of X_alpha^a X_mu^b applied to the harmonics exhaust
/// the isotypic component, degree by degree up to dmax?
pub fn howe_span_check(kt: KType, dmax: u16, cap: u16) -> Result<HoweCertificate, FockError> {
    let h = harmonics(kt, cap)?;
    let d0 = h.degree;
    let t = Sl2Triples::new();
    let mut per_degree = Vec::new();
    let mut holds = true;
    let mut d = d0;
    while d <= dmax {
        let k = (d - d0) / 2;
        // All monomials X_alpha^a X_mu^b with a + b = k, applied to the
        // harmonic basis.
        let mut raised: Vec<Poly5> = Vec::new();
        for a in 0..=k {
            let b = k - a;
            let op = power(&t.x_alpha, a).multiply(&power(&t.x_mu, b));
            for hp in &h.basis {
                let img = op.apply(hp);
                if !img.is_zero() {
                    raised.push(img);
                }
            }
        }
        let iso = decompose_degree(d)
            .into_iter()
            .find(|c| c.ktype == kt)
            .map(|c| c.basis)
            .unwrap_or_default();
        let span_dim;
        let ok;
        if raised.is_empty() {
            span_dim = 0;
            ok = iso.is_empty();
        } else {
            let monos = Poly5::degree_basis(d);
            let raised_m = poly_row_matrix_with(&raised, &monos);
            let iso_m = poly_row_matrix_with(&iso, &monos);
            span_dim = raised_m.rank();
            ok = span_dim == iso.len() && iso_m.row_span_contains(&raised_m);
        }
        per_degree.push((d, span_dim, iso.len()));
        holds &= ok;
        d += 2;
    }
    Ok(HoweCertificate { ktype: kt, base_degree: d0, per_degree, holds })
}

fn power(op: &WeylElement, n: u16) -> WeylElement {
    let mut out = WeylElement::identity();
    for _ in 0..n {
        out = out.multiply(op);
    }
    out
}

/// Coordinate matrix of polynomials as rows over their joint monomial
/// support.
pub fn poly_row_matrix(polys: &[Poly5]) -> (Matrix<GaussQ>, Vec<Exps>) {
    let mut monos: Vec<Exps> = Vec::new();
    for p in polys {
        for (e, _) in p.terms() {
            monos.push(*e);
        }
    }
    monos.sort_unstable();
    monos.dedup();
    (poly_row_matrix_with(polys, &monos), monos)
}

/// Coordinate matrix over an explicit monomial list.
pub fn poly_row_matrix_with(polys: &[Poly5], monos: &[Exps]) -> Matrix<GaussQ> {
    if polys.is_empty() {
        return Matrix::zero(0, monos.len().max(1));
    }
    Matrix::from_fn(polys.len(), monos.len(), |r, c| polys[r].coeff(&monos[c]))
}

/// Basis of the joint kernel of operators restricted to the span of
/// `polys` (as polynomials).
fn kernel_of_operators(polys: &[Poly5], ops: &[&WeylElement]) -> Vec<Poly5> {
    if polys.is_empty() {
        return Vec::new();
    }
    // Rows: for each op, the coordinates of op(p_j) stacked; unknowns are
    // the coefficients over `polys`.
    let mut rows: Vec<Vec<GaussQ>> = Vec::new();
    for op in ops {
        let images: Vec<Poly5> = polys.iter().map(|p| op.apply(p)).collect();
        let mut monos: Vec<Exps> = Vec::new();
        for p in &images {
            for (e, _) in p.terms() {
                monos.push(*e);
            }
        }
        monos.sort_unstable();
        monos.dedup();
        for m in &monos {
            rows.push(images.iter().map(|p| p.coeff(m)).collect());
        }
    }
    if rows.is_empty() {
        return polys.to_vec();
    }
    let sys = Matrix::from_rows(rows);
    sys.kernel_basis()
        .into_iter()
        .map(|coeffs| {
            let mut out = Poly5::zero();
            for (c, p) in coeffs.iter().zip(polys) {
                out = out.add(&p.scale(c));
            }
            out
        })
        .collect()
}

/// so(3) Casimir -(L12^2 + L13^2 + L23^2); eigenvalue l(l+1) on the
/// (2l+1)-type.
fn so3_casimir() -> WeylElement {
    let rot = |i: usize, j: usize| -> WeylElement {
        let mut out = WeylElement::zero();
        let mut z = [0u16; 5];
        let mut dd = [0u16; 5];
        z[i] = 1;
        dd[j] = 1;
        out.add_term(z, dd, GaussQ::from_int(1));
        let mut z2 = [0u16; 5];
        let mut d2 = [0u16; 5];
        z2[j] = 1;
        d2[i] = 1;
        out.add_term(z2, d2, GaussQ::from_int(-1));
        out
    };
    let mut c = WeylElement::zero();
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let l = rot(i, j);
        c = c.sub(&l.multiply(&l));
    }
    c
}

/// Monomials of degree k in z1..z3 (as 5-variable exponents).
fn basis3(k: u16) -> Vec<Exps> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=(k - a) {
            out.push([a, b, k - a - b, 0, 0]);
        }
    }
    out
}

/// Split degree-k polynomials in z1..z3 into so(3) Casimir eigenspaces
/// (l congruent to k mod 2).
fn so3_split(k: u16) -> Vec<(usize, Vec<Poly5>)> {
    let monos = basis3(k);
    let dim = monos.len();
    let cas = so3_casimir();
    // Operator matrix on this basis: column j = coords of cas(mono_j).
    let images: Vec<Poly5> = monos
        .iter()
        .map(|e| cas.apply(&Poly5::monomial(*e, GaussQ::from_int(1))))
        .collect();
    let mat = Matrix::from_fn(dim, dim, |r, c| images[c].coeff(&monos[r]));
    let mut out = Vec::new();
    let mut total = 0;
    let mut ell = k as i64;
    while ell >= 0 {
        let lam = GaussQ::from_int(ell * (ell + 1));
        let shifted = Matrix::from_fn(dim, dim, |r, c| {
            let mut v = mat[(r, c)].clone();
            if r == c {
                v -= lam.clone();
            }
            v
        });
        let kernel = shifted.kernel_basis();
        if !kernel.is_empty() {
            let polys: Vec<Poly5> = kernel
                .iter()
                .map(|coeffs| {
                    let mut p = Poly5::zero();
                    for (c, e) in coeffs.iter().zip(&monos) {
                        if !c.is_zero() {
                            p.add_term(*e, c.clone());
                        }
                    }
                    p
                })
                .collect();
            total += polys.len();
            out.push((ell as usize, polys));
        }
        ell -= 2;
    }
    assert_eq!(total, dim, "Casimir eigenspaces must exhaust degree {k}");
    out
}

/// w+^p w-^q as a polynomial, w+- = z4 +- i z5.
fn w_power(p: u16, q: u16) -> Poly5 {
    let wp = Poly5::var(4).add(&Poly5::var(5).scale(&GaussQ::i()));
    let wm = Poly5::var(4).sub(&Poly5::var(5).scale(&GaussQ::i()));
    let mut out = Poly5::one();
    for _ in 0..p {
        out = out.mul(&wp);
    }
    for _ in 0..q {
        out = out.mul(&wm);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn binom4(d: u16) -> usize {
        // C(d+4, 4)
        let d = d as usize;
        (d + 1) * (d + 2) * (d + 3) * (d + 4) / 24
    }

    #[test]
    fn degree_zero_is_trivial_type() {
        let comps = decompose_degree(0);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].ktype, KType::trivial());
        assert_eq!(comps[0].basis, alloc::vec![Poly5::one()]);
    }

    #[test]
    fn component_labels_match_operator_eigenvalues() {
        // independent certification of the labels: the Casimir and the
        // so(2) rotation, applied through the operator engine, must act
        // on every component basis vector by l(l+1) and i*n.
        let cas = so3_casimir();
        let rot45 = {
            let mut w = WeylElement::zero();
            w.add_term([0, 0, 0, 1, 0], [0, 0, 0, 0, 1], GaussQ::from_int(1));
            w.add_term([0, 0, 0, 0, 1], [0, 0, 0, 1, 0], GaussQ::from_int(-1));
            w
        };
        for d in 0..=3u16 {
            for comp in decompose_degree(d) {
                let ell = comp.ktype.ell() as i64;
                let lam = GaussQ::from_int(ell * (ell + 1));
                let mu = GaussQ::gauss(0, comp.ktype.so2_char());
                for p in &comp.basis {
                    assert_eq!(cas.apply(p), p.scale(&lam), "casimir at {}", comp.ktype);
                    assert_eq!(rot45.apply(p), p.scale(&mu), "rotation at {}", comp.ktype);
                }
            }
        }
    }

    #[test]
    fn harmonics_are_multiplicity_free() {
        // at its first degree every type occurs once, so the harmonic
        // space has exactly the irreducible dimension
        for d in 0..=4u16 {
            for comp in decompose_degree(d) {
                if degree_of(comp.ktype, 4).unwrap() != d {
                    continue;
                }
                let h = harmonics(comp.ktype, 4).unwrap();
                assert_eq!(h.dim(), comp.ktype.so3_dim(), "type {}", comp.ktype);
            }
        }
    }

    #[test]
    fn harmonics_exhaust_the_lowest_degree_isotype() {
        // at the minimal degree the whole isotypic component is
        // harmonic: exact subspace equality
        for kt in [KType::trivial(), KType::vector(), KType::five()] {
            let h = harmonics(kt, 6).unwrap();
            let comp = decompose_degree(h.degree)
                .into_iter()
                .find(|c| c.ktype == kt)
                .unwrap();
            let monos = Poly5::degree_basis(h.degree);
            let hm = poly_row_matrix_with(&h.basis, &monos);
            let cm = poly_row_matrix_with(&comp.basis, &monos);
            assert!(hm.row_span_eq(&cm), "type {kt}");
        }
    }

    #[test]
    fn degree_one_splits_as_expected() {
        let comps = decompose_degree(1);
        let table: Vec<(usize, i64, usize)> = comps
            .iter()
            .map(|c| (c.ktype.so3_dim(), c.ktype.so2_char(), c.dim()))
            .collect();
        assert_eq!(table, alloc::vec![(1, -1, 1), (1, 1, 1), (3, 0, 3)]);
    }

    #[test]
    fn degree_two_splits_with_multiplicities() {
        let comps = decompose_degree(2);
        let table: Vec<(usize, i64, usize)> = comps
            .iter()
            .map(|c| (c.ktype.so3_dim(), c.ktype.so2_char(), c.dim()))
            .collect();
        assert_eq!(
            table,
            alloc::vec![
                (1, -2, 1),
                (1, 0, 2),
                (1, 2, 1),
                (3, -1, 3),
                (3, 1, 3),
                (5, 0, 5)
            ]
        );
        assert_eq!(comps.iter().map(|c| c.dim()).sum::<usize>(), binom4(2));
    }

    #[test]
    fn dimensions_partition_every_degree() {
        for d in 0..=DEFAULT_DEGREE_CAP {
            let comps = decompose_degree(d);
            assert_eq!(
                comps.iter().map(|c| c.dim()).sum::<usize>(),
                binom4(d),
                "degree {d}"
            );
            for c in &comps {
                assert!(c.basis.iter().all(|p| p.is_homogeneous()));
                assert_eq!(c.dim() % c.ktype.so3_dim(), 0);
            }
        }
    }

    #[test]
    fn components_are_k_stable() {
        for d in 0..=3 {
            for c in decompose_degree(d) {
                assert!(c.verify_k_stable(), "degree {d} type {}", c.ktype);
            }
        }
    }

    #[test]
    fn degrees_of_the_three_types() {
        assert_eq!(degree_of(KType::trivial(), 6).unwrap(), 0);
        assert_eq!(degree_of(KType::vector(), 6).unwrap(), 1);
        assert_eq!(degree_of(KType::five(), 6).unwrap(), 2);
        assert!(matches!(
            degree_of(KType::new(11, 0), 4),
            Err(FockError::KTypeNotFound { .. })
        ));
    }

    #[test]
    fn harmonics_of_the_trivial_type() {
        let h = harmonics(KType::trivial(), 6).unwrap();
        assert_eq!(h.basis, alloc::vec![Poly5::one()]);
    }

    #[test]
    fn harmonics_of_the_vector_type() {
        let h = harmonics(KType::vector(), 6).unwrap();
        assert_eq!(h.dim(), 3);
        let (rows, monos) = poly_row_matrix(&h.basis);
        let expect = poly_row_matrix_with(
            &[Poly5::var(1), Poly5::var(2), Poly5::var(3)],
            &monos,
        );
        assert!(rows.row_span_eq(&expect));
    }

    #[test]
    fn harmonics_of_the_five_type_are_traceless_quadratics() {
        let h = harmonics(KType::five(), 6).unwrap();
        assert_eq!(h.dim(), 5);
        let t = Sl2Triples::new();
        for p in &h.basis {
            assert!(t.y_alpha.apply(p).is_zero());
            assert!(t.y_mu.apply(p).is_zero());
        }
        // span equality with the explicit traceless quadratics
        let monos = Poly5::degree_basis(2);
        let got = poly_row_matrix_with(&h.basis, &monos);
        let z = |i: usize| Poly5::var(i);
        let expect = poly_row_matrix_with(
            &[
                z(1).mul(&z(1)).sub(&z(2).mul(&z(2))),
                z(2).mul(&z(2)).sub(&z(3).mul(&z(3))),
                z(1).mul(&z(2)),
                z(1).mul(&z(3)),
                z(2).mul(&z(3)),
            ],
            &monos,
        );
        assert!(got.row_span_eq(&expect));
    }

    #[test]
    fn weight_eigenvalues_on_harmonics() {
        let h5 = harmonics(KType::five(), 6).unwrap();
        let hop = crate::weyl::weight_operator();
        for p in &h5.basis {
            assert_eq!(hop.apply(p), p.scale(&GaussQ::new(rat(5, 2).into(), rat(0, 1))));
        }
        let h1 = harmonics(KType::trivial(), 6).unwrap();
        for p in &h1.basis {
            assert_eq!(hop.apply(p), p.scale(&GaussQ::new(rat(1, 2), rat(0, 1))));
        }
    }

    #[test]
    fn howe_check_for_all_three_types() {
        for kt in [KType::trivial(), KType::vector(), KType::five()] {
            let cert = howe_span_check(kt, 6, 6).unwrap();
            assert!(cert.holds, "failed for {kt}: {:?}", cert.per_degree);
            for (_, span, iso) in &cert.per_degree {
                assert_eq!(span, iso);
            }
        }
    }

    #[test]
    fn howe_check_single_degree_is_trivial() {
        let cert = howe_span_check(KType::vector(), 1, 6).unwrap();
        assert!(cert.holds);
        assert_eq!(cert.per_degree.len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let fs = FockSpace::default();
        assert!(matches!(
            fs.decompose_degree(7),
            Err(FockError::DegreeCapExceeded { .. })
        ));
        let fs8 = FockSpace::new(8);
        assert_eq!(fs8.cap(), 8);
        assert!(fs8.decompose_degree(7).is_ok());
    }
}
