//! K-equivariant cochains on the complexified tangent space, the closed
//! (1,1)-cochain with quadratic values, and the relative Lie algebra
//! differential.
//!
//! Wedge arguments are indexed over the complex basis
//! `[zeta_1, zeta_2, zeta_3, zetabar_1, zetabar_2, zetabar_3]` of p tensor C,
//! where zeta_alpha = xi_{alpha 4} + i xi_{alpha 5} spans p^+ (the SO(2)
//! factor acts on it with weight +1, matching the root-space
//! conventions).  A (p, q) bidegree means p plus-indices and q
//! minus-indices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::exact::{GaussQ, Matrix};
use crate::liealg::{action_matrix, basis as so32_basis, p_minus_basis, p_plus_basis, So32Element};
use crate::weyl::{OmegaMap, Poly5};

use super::decompose::poly_row_matrix;
use super::KType;

/// Coordinates of an element of p tensor C in the zeta basis.
pub type PVector = Vec<GaussQ>;

/// zeta_alpha (alpha in 1..=3) as a coordinate vector.
pub fn zeta(alpha: usize) -> PVector {
    let mut v = alloc::vec![GaussQ::from_int(0); 6];
    v[alpha - 1] = GaussQ::from_int(1);
    v
}

/// zetabar_alpha as a coordinate vector.
pub fn zeta_bar(alpha: usize) -> PVector {
    let mut v = alloc::vec![GaussQ::from_int(0); 6];
    v[alpha + 2] = GaussQ::from_int(1);
    v
}

/// The real basis vector xi_{alpha mu} in zeta coordinates.
pub fn xi_vector(alpha: usize, mu: usize) -> PVector {
    assert!((1..=3).contains(&alpha) && (4..=5).contains(&mu));
    let half = GaussQ::from_pair(1, 2);
    let mut v = alloc::vec![GaussQ::from_int(0); 6];
    if mu == 4 {
        // xi4 = (zeta + zetabar)/2
        v[alpha - 1] = half.clone();
        v[alpha + 2] = half;
    } else {
        // xi5 = -(i/2)(zeta - zetabar)
        let mih = GaussQ::new(crate::exact::rat_int(0), crate::exact::rat(-1, 2));
        v[alpha - 1] = mih.clone();
        v[alpha + 2] = -mih;
    }
    v
}

/// The zeta basis as algebra elements, for bracket computations.
pub fn zeta_basis_elements() -> Vec<So32Element> {
    let mut out = p_plus_basis();
    out.extend(p_minus_basis());
    out
}

/// A polynomial-valued alternating form on p tensor C, stored on sorted
/// index tuples of the zeta basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: BTreeMap<Vec<u8>, Poly5>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Cochain { degree, values: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn set(&mut self, wedge: Vec<u8>, value: Poly5) {
        assert_eq!(wedge.len(), self.degree);
        assert!(wedge.windows(2).all(|w| w[0] < w[1]), "wedge must be sorted");
        if value.is_zero() {
            self.values.remove(&wedge);
        } else {
            self.values.insert(wedge, value);
        }
    }

    pub fn value(&self, wedge: &[u8]) -> Poly5 {
        self.values.get(wedge).cloned().unwrap_or_else(Poly5::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &Poly5)> {
        self.values.iter()
    }

    /// The (p, q) bidegrees supported by the cochain: p plus-indices,
    /// q minus-indices.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .values
            .keys()
            .map(|w| {
                let p = w.iter().filter(|&&i| i < 3).count();
                (p, w.len() - p)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Evaluate on a list of p-vectors by multilinear antisymmetric
    /// expansion.
    pub fn eval(&self, args: &[PVector]) -> Poly5 {
        assert_eq!(args.len(), self.degree);
        let mut out = Poly5::zero();
        let mut idx = alloc::vec![0u8; self.degree];
        expand(self, args, &mut idx, 0, &GaussQ::from_int(1), &mut out);
        return out;

        fn expand(
            c: &Cochain,
            args: &[PVector],
            idx: &mut [u8],
            pos: usize,
            coeff: &GaussQ,
            out: &mut Poly5,
        ) {
            if pos == args.len() {
                // sort with sign, drop repeats
                let mut v: Vec<u8> = idx.to_vec();
                let mut sign = 1i64;
                for i in 1..v.len() {
                    let mut j = i;
                    while j > 0 && v[j - 1] >= v[j] {
                        if v[j - 1] == v[j] {
                            return;
                        }
                        v.swap(j - 1, j);
                        sign = -sign;
                        j -= 1;
                    }
                }
                let val = c.value(&v);
                if !val.is_zero() {
                    let s = coeff * &GaussQ::from_int(sign);
                    *out = out.add(&val.scale(&s));
                }
                return;
            }
            for (i, a) in args[pos].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                idx[pos] = i as u8;
                let c2 = coeff * a;
                expand(c, args, idx, pos + 1, &c2, out);
            }
        }
    }

    /// Apply to a vector in the span of the (1,1) wedge basis (order of
    /// [`p11_wedges`]).
    pub fn apply_to_p11_coords(&self, coords: &[GaussQ]) -> Poly5 {
        let mut out = Poly5::zero();
        for (c, w) in coords.iter().zip(p11_wedges()) {
            if !c.is_zero() {
                out = out.add(&self.value(&w).scale(c));
            }
        }
        out
    }

    /// Exact K-equivariance: for every compact generator, the derivation
    /// action on the wedge argument matches the oscillator action on the
    /// value.
    pub fn is_k_equivariant(&self, om: &OmegaMap) -> bool {
        let zb = zeta_basis_elements();
        let k_elts = so32_basis();
        for (ki, k) in k_elts[..4].iter().enumerate() {
            let ad = action_matrix(k, &zb);
            for wedge in all_wedges(self.degree) {
                // sum over slots of value(wedge with slot replaced)
                let mut lhs = Poly5::zero();
                for (slot, &i) in wedge.iter().enumerate() {
                    for r in 0..6u8 {
                        let c = ad[(r as usize, i as usize)].clone();
                        if c.is_zero() {
                            continue;
                        }
                        let mut t = wedge.clone();
                        t[slot] = r;
                        if let Some((sorted, sign)) = sort_signed(t) {
                            lhs = lhs.add(
                                &self
                                    .value(&sorted)
                                    .scale(&(c * GaussQ::from_int(sign))),
                            );
                        }
                    }
                }
                let rhs = om.of_basis(ki).apply(&self.value(&wedge));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

impl core::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "cochain of degree {}", self.degree)?;
        for (w, v) in &self.values {
            writeln!(f, "  {w:?} -> {v}")?;
        }
        Ok(())
    }
}

fn sort_signed(mut v: Vec<u8>) -> Option<(Vec<u8>, i64)> {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] >= v[j] {
            if v[j - 1] == v[j] {
                return None;
            }
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some((v, sign))
}

fn all_wedges(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = Vec::new();
    fn rec(out: &mut Vec<Vec<u8>>, cur: &mut Vec<u8>, start: u8, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..6 {
            cur.push(i);
            rec(out, cur, i + 1, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, k);
    out
}

/// The nine (1,1) wedge basis tuples, in lexicographic order.
pub fn p11_wedges() -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for g in 0..3u8 {
        for d in 3..6u8 {
            out.push(alloc::vec![g, d]);
        }
    }
    out
}

/// The closed K-equivariant (1,1)-cochain with quadratic values: on the
/// real wedge xi_{alpha 4} ^ xi_{beta 5} it evaluates to
/// z_alpha z_beta.  On the complex basis this is the assignment
/// zeta_gamma ^ zetabar_delta -> -2i z_gamma z_delta.
pub fn phi_plus() -> Cochain {
    let mut c = Cochain::zero(2);
    let scale = GaussQ::gauss(0, -2);
    for g in 0..3u8 {
        for d in 0..3u8 {
            let value = Poly5::var(g as usize + 1)
                .mul(&Poly5::var(d as usize + 1))
                .scale(&scale);
            c.set(alloc::vec![g, 3 + d], value);
        }
    }
    c
}

/// The relative Lie algebra differential on cochains over g/k: the
/// bracket term vanishes because [p, p] lies in k, leaving the
/// alternating sum of module actions.
pub fn rel_lie_differential(c: &Cochain, om: &OmegaMap) -> Cochain {
    let zb = zeta_basis_elements();
    let mut out = Cochain::zero(c.degree() + 1);
    for wedge in all_wedges(c.degree() + 1) {
        let mut val = Poly5::zero();
        for (slot, &i) in wedge.iter().enumerate() {
            let mut rest = wedge.clone();
            rest.remove(slot);
            let inner = c.value(&rest);
            if inner.is_zero() {
                continue;
            }
            let acted = om.of(&zb[i as usize]).apply(&inner);
            let signed = if slot % 2 == 0 { acted } else { acted.neg() };
            val = val.add(&signed);
        }
        if !val.is_zero() {
            out.set(wedge, val);
        }
    }
    out
}

/// Exact basis of the K-equivariant degree-k cochains with homogeneous
/// values of the given degree.
pub fn equivariant_cochains(degree: usize, value_degree: u16, om: &OmegaMap) -> Vec<Cochain> {
    let wedges = all_wedges(degree);
    let monos = Poly5::degree_basis(value_degree);
    let nw = wedges.len();
    let nm = monos.len();
    let unknowns = nw * nm;
    let widx = |w: &[u8]| wedges.iter().position(|x| x == w).expect("wedge");
    let zb = zeta_basis_elements();
    let k_elts = so32_basis();
    let mut rows: Vec<Vec<GaussQ>> = Vec::new();
    for (ki, k) in k_elts[..4].iter().enumerate() {
        let ad = action_matrix(k, &zb);
        let op = om.of_basis(ki);
        for (wi, wedge) in wedges.iter().enumerate() {
            // condition: sum_slot phi(ad(k) wedge) - omega(k) phi(wedge) = 0
            // expand per output monomial; unknowns are phi(wedge')(mono).
            let mut coeffs: BTreeMap<(usize, usize), GaussQ> = BTreeMap::new();
            for (slot, &i) in wedge.iter().enumerate() {
                for r in 0..6u8 {
                    let c = ad[(r as usize, i as usize)].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let mut t = wedge.clone();
                    t[slot] = r;
                    if let Some((sorted, sign)) = sort_signed(t) {
                        let j = widx(&sorted);
                        for (mi, _) in monos.iter().enumerate() {
                            let key = (j, mi);
                            let add = &c * &GaussQ::from_int(sign);
                            let cur = coeffs.remove(&key).unwrap_or_else(|| GaussQ::from_int(0));
                            coeffs.insert(key, cur + add);
                        }
                    }
                }
            }
            // The LHS couples (wedge', mono) -> same mono coordinates;
            // the RHS couples monomials through omega(k). Assemble per
            // output monomial row.
            for (out_mi, out_m) in monos.iter().enumerate() {
                let mut row = alloc::vec![GaussQ::from_int(0); unknowns];
                // LHS: phi(wedge')(out_m) with the ad coefficients
                for ((j, mi), c) in &coeffs {
                    if *mi == out_mi {
                        row[j * nm + mi] = row[j * nm + mi].clone() + c.clone();
                    }
                }
                // RHS: -(omega(k) phi(wedge))(out_m): apply op to each mono
                for (mi, m) in monos.iter().enumerate() {
                    let img = op.apply(&Poly5::monomial(*m, GaussQ::from_int(1)));
                    let c = img.coeff(out_m);
                    if !c.is_zero() {
                        row[wi * nm + mi] = row[wi * nm + mi].clone() - c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        rows.push(alloc::vec![GaussQ::from_int(0); unknowns]);
    }
    let kernel = Matrix::from_rows(rows).kernel_basis();
    kernel
        .into_iter()
        .map(|v| {
            let mut c = Cochain::zero(degree);
            for (j, w) in wedges.iter().enumerate() {
                let mut p = Poly5::zero();
                for (mi, m) in monos.iter().enumerate() {
                    let coeff = v[j * nm + mi].clone();
                    if !coeff.is_zero() {
                        p.add_term(*m, coeff);
                    }
                }
                if !p.is_zero() {
                    c.set(w.clone(), p);
                }
            }
            c
        })
        .collect()
}

/// K-type multiplicities in the (1,1) part of the second wedge of p.
pub fn wedge_decompose_p11() -> Vec<(KType, usize)> {
    isotype_split_p11()
        .into_iter()
        .map(|(kt, basis)| {
            let m = basis.len() / kt.so3_dim();
            (kt, m)
        })
        .collect()
}

/// Coordinate basis (in the order of [`p11_wedges`]) of one K-isotype of
/// the (1,1) wedge space.
pub fn p11_isotype_basis(kt: KType) -> Vec<Vec<GaussQ>> {
    isotype_split_p11()
        .into_iter()
        .find(|(k, _)| *k == kt)
        .map(|(_, b)| b)
        .unwrap_or_default()
}

fn isotype_split_p11() -> Vec<(KType, Vec<Vec<GaussQ>>)> {
    let zb = zeta_basis_elements();
    let k_elts = so32_basis();
    let wedges = p11_wedges();
    let dim = wedges.len();
    let widx = |w: &Vec<u8>| wedges.iter().position(|x| x == w).expect("wedge");
    // Derivation matrices on the (1,1) wedge space; the (1,1) span is
    // K-stable because the compact group preserves both halves.
    let wedge_action = |k: &So32Element| -> Matrix<GaussQ> {
        let ad = action_matrix(k, &zb);
        let mut m = Matrix::<GaussQ>::zero(dim, dim);
        for (col, w) in wedges.iter().enumerate() {
            for (slot, &i) in w.iter().enumerate() {
                for r in 0..6u8 {
                    let c = ad[(r as usize, i as usize)].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let mut t = w.clone();
                    t[slot] = r;
                    if let Some((sorted, sign)) = sort_signed(t) {
                        let p = sorted.iter().filter(|&&x| x < 3).count();
                        if p != 1 {
                            continue;
                        }
                        let row = widx(&sorted);
                        let add = c * GaussQ::from_int(sign);
                        let cur = m[(row, col)].clone();
                        m[(row, col)] = cur + add;
                    }
                }
            }
        }
        m
    };
    let rot: Vec<Matrix<GaussQ>> = k_elts[..3].iter().map(&wedge_action).collect();
    let so2 = wedge_action(&k_elts[3]);
    // Casimir: -(sum of squares)
    let mut cas = Matrix::<GaussQ>::zero(dim, dim);
    for r in &rot {
        cas = &cas - &r.matmul(r);
    }
    let mut out: Vec<(KType, Vec<Vec<GaussQ>>)> = Vec::new();
    for n in -2i64..=2 {
        for ell in 0..=2usize {
            let lam = GaussQ::from_int((ell * (ell + 1)) as i64);
            let mut rows: Vec<Vec<GaussQ>> = Vec::new();
            let shift_cas = Matrix::from_fn(dim, dim, |r, c| {
                let mut v = cas[(r, c)].clone();
                if r == c {
                    v -= lam.clone();
                }
                v
            });
            let shift_so2 = Matrix::from_fn(dim, dim, |r, c| {
                let mut v = so2[(r, c)].clone();
                if r == c {
                    v -= GaussQ::gauss(0, n);
                }
                v
            });
            for r in 0..dim {
                rows.push(shift_cas.row(r).to_vec());
            }
            for r in 0..dim {
                rows.push(shift_so2.row(r).to_vec());
            }
            let kernel = Matrix::from_rows(rows).kernel_basis();
            if !kernel.is_empty() {
                out.push((KType::new(2 * ell + 1, n), kernel));
            }
        }
    }
    let total: usize = out.iter().map(|(_, b)| b.len()).sum();
    assert_eq!(total, dim, "isotypes must exhaust the (1,1) wedge space");
    out.sort_by_key(|(kt, _)| (kt.so3_dim(), kt.so2_char()));
    out
}

/// Span of the values of a cochain, as a row matrix over the monomials
/// of the value degree.
pub fn value_span(c: &Cochain) -> (Matrix<GaussQ>, Vec<crate::weyl::Exps>) {
    let polys: Vec<Poly5> = c.iter().map(|(_, v)| v.clone()).collect();
    poly_row_matrix(&polys)
}

/// Dimensions of the intersections of a (1,1)-cochain's value span with
/// the isotypic components of its value degree: (ktype, dim) pairs with
/// nonzero intersection.
pub fn image_isotype_dims(c: &Cochain) -> Vec<(KType, usize)> {
    let polys: Vec<Poly5> = c.iter().map(|(_, v)| v.clone()).collect();
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let degree = first.degree().unwrap_or(0);
    let monos = Poly5::degree_basis(degree);
    let span = super::decompose::poly_row_matrix_with(&polys, &monos);
    super::decompose::decompose_degree(degree)
        .into_iter()
        .filter_map(|comp| {
            let rows = super::decompose::poly_row_matrix_with(&comp.basis, &monos);
            let dim = span.row_span_intersect(&rows).len();
            (dim > 0).then_some((comp.ktype, dim))
        })
        .collect()
}

/// Image of the five-type (1,1) wedge isotype under a (1,1)-cochain,
/// with the rank of the restriction.
pub fn restriction_rank_on_five_isotype(c: &Cochain) -> (usize, Vec<Poly5>) {
    let basis = p11_isotype_basis(KType::five());
    let images: Vec<Poly5> = basis.iter().map(|v| c.apply_to_p11_coords(v)).collect();
    let nonzero: Vec<Poly5> = images.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return (0, images);
    }
    let (rows, _) = poly_row_matrix(&nonzero);
    (rows.rank(), images)
}
