//! The infinitesimal oscillator action of so(3,2) on P(C^5), and its
//! commutant sl2.
//!
//! The compact part acts by rotation derivations: a block-skew matrix
//! with so(3) block A and so(2) block D maps to
//! `sum A_ij z_i d_j + sum D_mn z_m d_n`.  The noncompact part is not
//! transcribed from anywhere: it is solved for from the ansatz
//! `omega(b_{alpha mu}) = c1 z_alpha z_mu + c2 d_alpha d_mu` by imposing
//! the bracket homomorphism property, first over all (k, p) pairs
//! (linear in the unknowns) and then over one (p, p) pair (which fixes
//! the product of the two surviving parameters).  The residual scaling
//! gauge is fixed by normalizing the z-coefficient of omega(b14) to
//! -i/2; the gauge is recorded on the result.  Construction ends with an
//! exhaustive check of [omega(x), omega(y)] = omega([x, y]) over all 45
//! unordered basis pairs, so no shortcut in the solve can survive a
//! wrong answer.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{rat, rat_int, GaussQ, Matrix};
use crate::liealg::{basis, So32Element, BASIS_LABELS};

use super::operator::{TermKey, WeylElement};
use super::sl2::{weight_operator, Sl2Triples};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaError {
    /// The ansatz admits no solution; signals a sign error in the
    /// structure constants.
    NoSolution,
    /// More than a scaling gauge survived the constraints.
    UnderdeterminedAfterGauge,
    /// The commutant of the image is not three-dimensional.
    CentralizerDimensionUnexpected(usize),
}

impl fmt::Display for OmegaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaError::NoSolution => write!(f, "oscillator ansatz has no solution"),
            OmegaError::UnderdeterminedAfterGauge => {
                write!(f, "oscillator ansatz is underdetermined after gauge fixing")
            }
            OmegaError::CentralizerDimensionUnexpected(d) => {
                write!(f, "commutant dimension {d}, expected 3")
            }
        }
    }
}

/// The action of so(3,2) on polynomials: one operator per basis element,
/// a verified bracket homomorphism.
pub struct OmegaMap {
    images: Vec<WeylElement>,
    /// Human-readable record of the scaling gauge.
    pub gauge: String,
}

impl OmegaMap {
    /// Operator of the idx-th standard basis element (order of
    /// [`BASIS_LABELS`]).
    pub fn of_basis(&self, idx: usize) -> &WeylElement {
        &self.images[idx]
    }

    /// Operator of an arbitrary algebra element, by expanding in the
    /// standard basis.
    pub fn of(&self, x: &So32Element) -> WeylElement {
        let coords = x.coords();
        let mut out = WeylElement::zero();
        for (c, img) in coords.iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&img.scale(c));
            }
        }
        out
    }

    pub fn images(&self) -> &[WeylElement] {
        &self.images
    }

    pub fn labels(&self) -> &'static [&'static str; 10] {
        &BASIS_LABELS
    }

    /// Exact bracket homomorphism check over all 45 unordered basis
    /// pairs.
    pub fn verify_bracket_homomorphism(&self) -> bool {
        let b = basis();
        for i in 0..10 {
            for j in 0..i {
                let lhs = self.images[i].commutator(&self.images[j]);
                let rhs = self.of(&b[i].bracket(&b[j]));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Rotation derivation of a k-part element: `sum M_ij z_i d_j` over the
/// A block (variables z1..z3) and the D block (z4, z5).
fn rotation_operator(x: &So32Element) -> WeylElement {
    let m = x.matrix();
    let mut out = WeylElement::zero();
    for i in 0..3 {
        for j in 0..3 {
            push_zd(&mut out, i, j, m[(i, j)].clone());
        }
    }
    for i in 3..5 {
        for j in 3..5 {
            push_zd(&mut out, i, j, m[(i, j)].clone());
        }
    }
    out
}

/// Rotation operators of the four compact basis elements, available
/// without solving for the full action.
pub fn k_rotation_operators() -> Vec<WeylElement> {
    basis()[..4].iter().map(rotation_operator).collect()
}

fn push_zd(out: &mut WeylElement, i: usize, j: usize, c: GaussQ) {
    if c.is_zero() {
        return;
    }
    let mut z = [0u16; 5];
    let mut d = [0u16; 5];
    z[i] = 1;
    d[j] = 1;
    out.add_term(z, d, c);
}

/// The degree +2 and degree -2 monomials of the p-ansatz for slot `s`
/// (order b14, b15, b24, b25, b34, b35).
fn ansatz_pair(s: usize) -> (WeylElement, WeylElement) {
    let alpha = s / 2;
    let mu = 3 + s % 2;
    let mut e = [0u16; 5];
    e[alpha] += 1;
    e[mu] += 1;
    let up = WeylElement::term(e, [0; 5], GaussQ::from_int(1));
    let down = WeylElement::term([0; 5], e, GaussQ::from_int(1));
    (up, down)
}

/// Solve for the oscillator action.  See the module docs for the
/// strategy; the returned map is verified on all 45 basis pairs.
pub fn build_omega_so32() -> Result<OmegaMap, OmegaError> {
    let b = basis();
    let k_images: Vec<WeylElement> = b[..4].iter().map(rotation_operator).collect();

    // Unknowns u = [c1(0), c2(0), ..., c1(5), c2(5)].
    // Rows: per (k, p) pair and per Weyl monomial, the coefficient of
    // [omega(k), ansatz] - omega([k, p]) must vanish.
    let mut rows: Vec<Vec<GaussQ>> = Vec::new();
    for ki in 0..4 {
        for s in 0..6 {
            let bracket = b[ki].bracket(&b[4 + s]);
            let coords = bracket.coords();
            if coords[..4].iter().any(|c| !c.is_zero()) {
                // [k, p] must stay in p.
                return Err(OmegaError::NoSolution);
            }
            let mut linear: BTreeMap<TermKey, Vec<GaussQ>> = BTreeMap::new();
            {
                let mut add = |w: &WeylElement, unknown: usize, sign: i64| {
                    for (key, c) in w.terms() {
                        let ent = linear
                            .entry(*key)
                            .or_insert_with(|| alloc::vec![GaussQ::from_int(0); 12]);
                        ent[unknown] = ent[unknown].clone() + c * &GaussQ::from_int(sign);
                    }
                };
                let (up, down) = ansatz_pair(s);
                add(&k_images[ki].commutator(&up), 2 * s, 1);
                add(&k_images[ki].commutator(&down), 2 * s + 1, 1);
                for t in 0..6 {
                    let c = &coords[4 + t];
                    if c.is_zero() {
                        continue;
                    }
                    let (tu, td) = ansatz_pair(t);
                    add(&tu.scale(c), 2 * t, -1);
                    add(&td.scale(c), 2 * t + 1, -1);
                }
            }
            rows.extend(linear.into_values());
        }
    }
    let kernel = Matrix::from_rows(rows).kernel_basis();
    if kernel.is_empty() {
        return Err(OmegaError::NoSolution);
    }
    if kernel.len() != 2 {
        return Err(OmegaError::UnderdeterminedAfterGauge);
    }

    // Re-basis the kernel so the two parameters are the c1/c2 values of
    // slot 0: wz has (c1(0), c2(0)) = (1, 0), wd has (0, 1).
    let wz = kernel_with_slot0(&kernel, GaussQ::from_int(1), GaussQ::from_int(0))?;
    let wd = kernel_with_slot0(&kernel, GaussQ::from_int(0), GaussQ::from_int(1))?;
    let op_of = |w: &[GaussQ], s: usize| -> WeylElement {
        let (up, down) = ansatz_pair(s);
        up.scale(&w[2 * s]).add(&down.scale(&w[2 * s + 1]))
    };
    let z_ops: Vec<WeylElement> = (0..6).map(|s| op_of(&wz, s)).collect();
    let d_ops: Vec<WeylElement> = (0..6).map(|s| op_of(&wd, s)).collect();

    // One (p, p) bracket pins the product of the parameters. With
    // omega(p_s) = s*Z_s + t*D_s the bracket of slots 0, 1 is
    //   s^2 [Z0,Z1] + s t ([Z0,D1] + [D0,Z1]) + t^2 [D0,D1]
    // and must equal omega([b14, b15]), which lies in k and is known.
    let quad_zz = z_ops[0].commutator(&z_ops[1]);
    let quad_dd = d_ops[0].commutator(&d_ops[1]);
    let quad_mixed = z_ops[0].commutator(&d_ops[1]).add(&d_ops[0].commutator(&z_ops[1]));
    let target = {
        let coords = b[4].bracket(&b[5]).coords();
        let mut out = WeylElement::zero();
        for kc in 0..4 {
            if !coords[kc].is_zero() {
                out = out.add(&k_images[kc].scale(&coords[kc]));
            }
        }
        out
    };
    // Gauge: s = -i/2.
    let s_gauge = GaussQ::new(rat_int(0), rat(-1, 2));
    if !quad_zz.is_zero() || !quad_dd.is_zero() {
        // The pure-z and pure-d families commute among themselves for a
        // monomial ansatz; anything else means the solve went wrong.
        return Err(OmegaError::NoSolution);
    }
    let lhs = quad_mixed.scale(&s_gauge);
    let t_gauge = match_scalar(&lhs, &target)?;

    let images: Vec<WeylElement> = k_images
        .into_iter()
        .chain((0..6).map(|s| {
            z_ops[s].scale(&s_gauge).add(&d_ops[s].scale(&t_gauge))
        }))
        .collect();
    let omega = OmegaMap {
        images,
        gauge: String::from("z-coefficient of omega(b14) normalized to -i/2"),
    };
    if !omega.verify_bracket_homomorphism() {
        return Err(OmegaError::NoSolution);
    }
    Ok(omega)
}

/// Combination of the two kernel vectors whose slot-0 components are
/// (c1, c2) = (a, b).
fn kernel_with_slot0(
    kernel: &[Vec<GaussQ>],
    a: GaussQ,
    b: GaussQ,
) -> Result<Vec<GaussQ>, OmegaError> {
    let m = Matrix::from_fn(2, 2, |r, c| kernel[c][r].clone());
    let x = m.solve(&[a, b]).ok_or(OmegaError::UnderdeterminedAfterGauge)?;
    Ok((0..kernel[0].len())
        .map(|i| &kernel[0][i] * &x[0] + &(&kernel[1][i] * &x[1]))
        .collect())
}

/// Find the scalar t with lhs * t = rhs, exactly; errors when lhs is
/// zero (underdetermined) or no consistent t exists.
fn match_scalar(lhs: &WeylElement, rhs: &WeylElement) -> Result<GaussQ, OmegaError> {
    let Some((key, c)) = lhs.terms().next() else {
        return Err(OmegaError::UnderdeterminedAfterGauge);
    };
    let t = rhs.coeff(key.0, key.1) * c.inv();
    if lhs.scale(&t) == *rhs {
        Ok(t)
    } else {
        Err(OmegaError::NoSolution)
    }
}

/// The commutant sl2 of the oscillator action.
pub struct DualSl2 {
    pub e: WeylElement,
    pub f: WeylElement,
    pub h: WeylElement,
}

/// Basis of the centralizer of omega(so(3,2)) inside the span of the
/// six sl2-triple operators, organized as an sl2 triple with
/// h = weight operator.
pub fn dual_sl2(om: &OmegaMap) -> Result<DualSl2, OmegaError> {
    let triples = Sl2Triples::new();
    let span = triples.alphabet();

    // Linear system: [sum_j u_j S_j, omega(x_i)] = 0 for all i.
    let mut rows: Vec<Vec<GaussQ>> = Vec::new();
    for img in om.images() {
        let mut linear: BTreeMap<TermKey, Vec<GaussQ>> = BTreeMap::new();
        for (j, s) in span.iter().enumerate() {
            for (key, c) in s.commutator(img).terms() {
                let ent = linear
                    .entry(*key)
                    .or_insert_with(|| alloc::vec![GaussQ::from_int(0); 6]);
                ent[j] = ent[j].clone() + c.clone();
            }
        }
        rows.extend(linear.into_values());
    }
    let kernel = Matrix::from_rows(rows).kernel_basis();
    if kernel.len() != 3 {
        return Err(OmegaError::CentralizerDimensionUnexpected(kernel.len()));
    }

    // Within the centralizer, cut the ad(H')-eigenspaces for
    // eigenvalues +2 (E') and -2 (F'), normalizing the X_alpha and
    // Y_alpha coefficients to 1.
    let h = weight_operator();
    let op_of = |u: &[GaussQ]| -> WeylElement {
        let mut out = WeylElement::zero();
        for (c, s) in u.iter().zip(&span) {
            out = out.add(&s.scale(c));
        }
        out
    };
    let eig_slice = |lambda: i64| -> Vec<Vec<GaussQ>> {
        // condition: [h, op(u)] - lambda*op(u) = 0, linear in the 3 kernel coords
        let mut linear: BTreeMap<TermKey, Vec<GaussQ>> = BTreeMap::new();
        for (j, kv) in kernel.iter().enumerate() {
            let o = op_of(kv);
            let c = h.commutator(&o).sub(&o.scale(&GaussQ::from_int(lambda)));
            for (key, v) in c.terms() {
                let ent = linear
                    .entry(*key)
                    .or_insert_with(|| alloc::vec![GaussQ::from_int(0); 3]);
                ent[j] = ent[j].clone() + v.clone();
            }
        }
        Matrix::from_rows(linear.into_values().collect()).kernel_basis()
    };
    let pick = |lambda: i64, norm_slot: usize| -> Result<WeylElement, OmegaError> {
        let sols = eig_slice(lambda);
        if sols.len() != 1 {
            return Err(OmegaError::CentralizerDimensionUnexpected(sols.len()));
        }
        let mut u = alloc::vec![GaussQ::from_int(0); 6];
        for (c, kv) in sols[0].iter().zip(&kernel) {
            for (i, x) in kv.iter().enumerate() {
                u[i] = u[i].clone() + c * x;
            }
        }
        if u[norm_slot].is_zero() {
            return Err(OmegaError::NoSolution);
        }
        let inv = u[norm_slot].inv();
        Ok(op_of(&u.iter().map(|c| c * &inv).collect::<Vec<_>>()))
    };
    let e = pick(2, Sl2Triples::X_ALPHA)?;
    let f = pick(-2, Sl2Triples::Y_ALPHA)?;

    // sl2 relations and the H' identification are hard postconditions.
    let ok = e.commutator(&f) == h
        && h.commutator(&e) == e.scale(&GaussQ::from_int(2))
        && h.commutator(&f) == f.scale(&GaussQ::from_int(-2))
        && om.images().iter().all(|img| {
            e.commutator(img).is_zero()
                && f.commutator(img).is_zero()
                && h.commutator(img).is_zero()
        });
    if !ok {
        return Err(OmegaError::NoSolution);
    }
    Ok(DualSl2 { e, f, h })
}
