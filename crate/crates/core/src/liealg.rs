//! A matrix model of so(3,2): Cartan decomposition, compact torus,
//! roots with explicit root vectors, theta-stable parabolics and their
//! bidegree tables, and lowest K-types.
//!
//! Elements are 5x5 matrices in the block form
//!
//! ```text
//!   [ A  B ]   A = -A^t (3x3),  D = -D^t (2x2),  C = B^t (2x3)
//!   [ C  D ]
//! ```
//!
//! with k = {B = 0} = so(3) x so(2) and p = {A = D = 0} identified with
//! the 3x2 blocks B. The complex structure on p is fixed so that the
//! compact SO(2) factor acts with weight +1 on p^+; with the displayed
//! root vectors this puts the beta root spaces in p^+.
//!
//! Everything is computed for the connected group; disconnectedness of
//! the full orthogonal group is not tracked.  One constant is recorded
//! for reference without being computed: the cohomological module of
//! the holomorphic-pair Levi has the infinitesimal character of the
//! trivial representation, (3/2, 1/2).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{rat_int, GaussQ, Matrix, Rat};
use crate::fock::KType;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    /// Block symmetry of so(3,2) violated.
    NotInAlgebra,
    /// 2*rho(u cap p) is not a dominant K-weight; signals a convention
    /// error in the chamber.
    WeightNotDominant,
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::NotInAlgebra => write!(f, "matrix does not satisfy the so(3,2) block form"),
            LieError::WeightNotDominant => write!(f, "lowest K-type weight is not dominant"),
        }
    }
}

/// An element of so(3,2) tensor C: a 5x5 GaussQ matrix in block form.
#[derive(Clone, PartialEq, Eq)]
pub struct So32Element {
    m: Matrix<GaussQ>,
}

// Named arithmetic keeps the bracket/scale call sites uniform with the
// rest of the exact layer.
#[allow(clippy::should_implement_trait)]
impl So32Element {
    pub fn new(m: Matrix<GaussQ>) -> Result<Self, LieError> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(LieError::NotInAlgebra);
        }
        // A = -A^t, D = -D^t, C = B^t
        for r in 0..3 {
            for c in 0..3 {
                if m[(r, c)] != m[(c, r)].clone().neg_val() {
                    return Err(LieError::NotInAlgebra);
                }
            }
        }
        for r in 3..5 {
            for c in 3..5 {
                if m[(r, c)] != m[(c, r)].clone().neg_val() {
                    return Err(LieError::NotInAlgebra);
                }
            }
        }
        for r in 0..3 {
            for c in 3..5 {
                if m[(r, c)] != m[(c, r)] {
                    return Err(LieError::NotInAlgebra);
                }
            }
        }
        Ok(So32Element { m })
    }

    pub fn zero() -> Self {
        So32Element { m: Matrix::zero(5, 5) }
    }

    pub fn matrix(&self) -> &Matrix<GaussQ> {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        (0..5).all(|r| (0..5).all(|c| self.m[(r, c)].is_zero()))
    }

    pub fn add(&self, other: &Self) -> Self {
        So32Element { m: &self.m + &other.m }
    }

    pub fn sub(&self, other: &Self) -> Self {
        So32Element { m: &self.m - &other.m }
    }

    pub fn scale(&self, c: &GaussQ) -> Self {
        So32Element { m: self.m.scale(c) }
    }

    pub fn neg(&self) -> Self {
        self.scale(&GaussQ::from_int(-1))
    }

    /// Matrix Lie bracket [x, y] = xy - yx.
    pub fn bracket(&self, other: &Self) -> Self {
        So32Element { m: &self.m.matmul(&other.m) - &other.m.matmul(&self.m) }
    }

    /// Entrywise complex conjugation; sends the gamma root space to the
    /// -gamma root space.
    pub fn conj(&self) -> Self {
        So32Element { m: self.m.map(|c| c.conj()) }
    }

    /// Split into the k-part (B = 0) and the p-part (A = D = 0); the sum
    /// reconstructs the element.
    pub fn cartan_split(&self) -> (Self, Self) {
        let mut k = Matrix::zero(5, 5);
        let mut p = Matrix::zero(5, 5);
        for r in 0..5 {
            for c in 0..5 {
                let in_k = (r < 3 && c < 3) || (r >= 3 && c >= 3);
                if in_k {
                    k[(r, c)] = self.m[(r, c)].clone();
                } else {
                    p[(r, c)] = self.m[(r, c)].clone();
                }
            }
        }
        (So32Element { m: k }, So32Element { m: p })
    }

    /// Coordinates in the standard 10-element basis, in the order of
    /// [`basis`].
    pub fn coords(&self) -> [GaussQ; 10] {
        [
            self.m[(0, 1)].clone(), // a12
            self.m[(0, 2)].clone(), // a13
            self.m[(1, 2)].clone(), // a23
            self.m[(3, 4)].clone(), // d45
            self.m[(0, 3)].clone(), // b14
            self.m[(0, 4)].clone(), // b15
            self.m[(1, 3)].clone(), // b24
            self.m[(1, 4)].clone(), // b25
            self.m[(2, 3)].clone(), // b34
            self.m[(2, 4)].clone(), // b35
        ]
    }

    /// Flatten to a 25-vector for linear algebra over the model.
    pub fn flat(&self) -> Vec<GaussQ> {
        let mut v = Vec::with_capacity(25);
        for r in 0..5 {
            for c in 0..5 {
                v.push(self.m[(r, c)].clone());
            }
        }
        v
    }
}

impl fmt::Debug for So32Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.m)
    }
}

trait NegVal {
    fn neg_val(self) -> Self;
}

impl NegVal for GaussQ {
    fn neg_val(self) -> Self {
        -self
    }
}

fn elem(entries: &[(usize, usize, GaussQ)]) -> So32Element {
    let mut m = Matrix::zero(5, 5);
    for (r, c, v) in entries {
        m[(*r, *c)] = v.clone();
    }
    So32Element::new(m).expect("basis element is in the algebra")
}

fn g(a: i64, b: i64) -> GaussQ {
    GaussQ::gauss(a, b)
}

/// Labels for the 10-element real basis of so(3,2).
pub const BASIS_LABELS: [&str; 10] = [
    "a12", "a13", "a23", "d45", "b14", "b15", "b24", "b25", "b34", "b35",
];

/// The standard real basis: three so(3) rotations, the so(2) rotation,
/// and the six symmetric off-block units b(alpha, mu).
pub fn basis() -> Vec<So32Element> {
    let mut out = Vec::with_capacity(10);
    // a_{alpha beta} = E_ab - E_ba
    for (r, c) in [(0usize, 1usize), (0, 2), (1, 2)] {
        out.push(elem(&[(r, c, g(1, 0)), (c, r, g(-1, 0))]));
    }
    // d45
    out.push(elem(&[(3, 4, g(1, 0)), (4, 3, g(-1, 0))]));
    // b_{alpha mu} = E_am + E_ma
    for alpha in 0..3 {
        for mu in 3..5 {
            out.push(elem(&[(alpha, mu, g(1, 0)), (mu, alpha, g(1, 0))]));
        }
    }
    out
}

/// The real p-basis element xi_{alpha mu} = b_{alpha mu}; `alpha` in
/// 1..=3 and `mu` in 4..=5 (1-indexed like the variables).
pub fn xi(alpha: usize, mu: usize) -> So32Element {
    assert!((1..=3).contains(&alpha) && (4..=5).contains(&mu));
    elem(&[(alpha - 1, mu - 1, g(1, 0)), (mu - 1, alpha - 1, g(1, 0))])
}

/// zeta_alpha = xi_{alpha 4} + i xi_{alpha 5}, a basis of p^+.
pub fn p_plus_basis() -> Vec<So32Element> {
    (1..=3)
        .map(|a| xi(a, 4).add(&xi(a, 5).scale(&GaussQ::i())))
        .collect()
}

/// Conjugates of the p^+ basis, a basis of p^-.
pub fn p_minus_basis() -> Vec<So32Element> {
    p_plus_basis().iter().map(|z| z.conj()).collect()
}

/// A root a*alpha + b*beta of the compact torus, stored through its
/// integer coefficient pair; the value on [x1, x2] is i(a x1 + b x2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root {
    pub ca: i32,
    pub cb: i32,
}

impl Root {
    pub fn new(ca: i32, cb: i32) -> Self {
        Root { ca, cb }
    }

    pub fn neg(&self) -> Self {
        Root { ca: -self.ca, cb: -self.cb }
    }

    /// Is the root space inside p (vs k)?
    pub fn is_noncompact(&self) -> bool {
        self.cb != 0
    }

    /// Is the root space inside p^+ = {beta, alpha+beta, -alpha+beta}?
    pub fn in_p_plus(&self) -> bool {
        self.cb == 1
    }

    pub fn in_p_minus(&self) -> bool {
        self.cb == -1
    }
}

/// Torus coordinates, roots and root vectors.
pub struct RootDatum {
    /// t1 = [1, 0] and t2 = [0, 1].
    pub torus: [So32Element; 2],
    /// The eight roots with their root vectors.
    pub vectors: Vec<(Root, So32Element)>,
}

/// The compact torus basis: x1 rotates (z1, z2), x2 rotates (z4, z5).
pub fn torus_basis() -> [So32Element; 2] {
    let t1 = elem(&[(0, 1, g(1, 0)), (1, 0, g(-1, 0))]);
    let t2 = elem(&[(3, 4, g(1, 0)), (4, 3, g(-1, 0))]);
    [t1, t2]
}

/// All eight roots and root vectors; the negative root vectors are the
/// complex conjugates of the positive ones.
pub fn roots() -> RootDatum {
    let x_alpha = elem(&[
        (0, 2, g(1, 0)),
        (1, 2, g(0, 1)),
        (2, 0, g(-1, 0)),
        (2, 1, g(0, -1)),
    ]);
    let x_beta = elem(&[
        (2, 3, g(0, 1)),
        (2, 4, g(-1, 0)),
        (3, 2, g(0, 1)),
        (4, 2, g(-1, 0)),
    ]);
    let x_alpha_plus_beta = elem(&[
        (0, 3, g(0, -1)),
        (0, 4, g(1, 0)),
        (1, 3, g(1, 0)),
        (1, 4, g(0, 1)),
        (3, 0, g(0, -1)),
        (3, 1, g(1, 0)),
        (4, 0, g(1, 0)),
        (4, 1, g(0, 1)),
    ]);
    let x_alpha_minus_beta = elem(&[
        (0, 3, g(0, 1)),
        (0, 4, g(1, 0)),
        (1, 3, g(-1, 0)),
        (1, 4, g(0, 1)),
        (3, 0, g(0, 1)),
        (3, 1, g(-1, 0)),
        (4, 0, g(1, 0)),
        (4, 1, g(0, 1)),
    ]);
    let mut vectors = Vec::new();
    for (root, v) in [
        (Root::new(1, 0), x_alpha),
        (Root::new(0, 1), x_beta),
        (Root::new(1, 1), x_alpha_plus_beta),
        (Root::new(1, -1), x_alpha_minus_beta),
    ] {
        vectors.push((root.neg(), v.conj()));
        vectors.push((root, v));
    }
    vectors.sort_by_key(|(r, _)| (r.ca, r.cb));
    RootDatum { torus: torus_basis(), vectors }
}

impl RootDatum {
    pub fn vector(&self, root: Root) -> &So32Element {
        &self
            .vectors
            .iter()
            .find(|(r, _)| *r == root)
            .expect("root exists")
            .1
    }

    /// Exact check of ad(t) X_gamma = gamma(t) X_gamma on the torus
    /// basis, for every root.
    pub fn verify_eigenrelations(&self) -> bool {
        for (root, v) in &self.vectors {
            let coeffs = [root.ca, root.cb];
            for (t, c) in self.torus.iter().zip(coeffs) {
                let lhs = t.bracket(v);
                let rhs = v.scale(&GaussQ::gauss(0, c as i64));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// A theta-stable parabolic q = l + u determined by a rational point
/// (x1, x2) of the (normalized) compact torus parameter space.
pub struct ParabolicData {
    pub x: (Rat, Rat),
    /// Basis of the Levi factor: both torus elements plus the zero
    /// eigenvalue root vectors.
    pub l: Vec<So32Element>,
    /// Basis of the nilpotent radical: positive eigenvalue root vectors.
    pub u: Vec<So32Element>,
    pub r_plus: usize,
    pub r_minus: usize,
    pub levi_label: String,
    /// Bidegrees (p, q) with nonzero relative Lie algebra cohomology,
    /// with their dimensions.
    pub bidegrees: Vec<(usize, usize, usize)>,
    l_roots: Vec<Root>,
    u_roots: Vec<Root>,
}

impl ParabolicData {
    pub fn u_roots(&self) -> &[Root] {
        &self.u_roots
    }

    pub fn l_roots(&self) -> &[Root] {
        &self.l_roots
    }

    pub fn dim_l(&self) -> usize {
        self.l.len()
    }

    pub fn dim_u(&self) -> usize {
        self.u.len()
    }
}

/// Eigenvalue of ad(x) on the root space of `root` for the normalized
/// real parameter pair (x1, x2).
///
/// The sign dictionary is fixed once: the pair (x1, x2) stands for the
/// torus point with ad-eigenvalue `a*x1 - b*x2` on the root a*alpha +
/// b*beta. This reproduces the classified bidegree families.
pub fn ad_eigenvalue(root: Root, x1: &Rat, x2: &Rat) -> Rat {
    let a = rat_int(root.ca as i64);
    let b = rat_int(root.cb as i64);
    &a * x1 - &b * x2
}

/// Construct the theta-stable parabolic attached to (x1, x2): q is the
/// sum of the nonnegative ad(x)-eigenspaces, l the zero eigenspaces, u
/// the positive ones.
pub fn parabolic_from(x1: Rat, x2: Rat) -> ParabolicData {
    use num_traits::Zero;
    let datum = roots();
    let mut l = vec![datum.torus[0].clone(), datum.torus[1].clone()];
    let mut u = Vec::new();
    let mut l_roots = Vec::new();
    let mut u_roots = Vec::new();
    for (root, v) in &datum.vectors {
        let e = ad_eigenvalue(*root, &x1, &x2);
        if Zero::is_zero(&e) {
            l.push(v.clone());
            l_roots.push(*root);
        } else if e > <Rat as Zero>::zero() {
            u.push(v.clone());
            u_roots.push(*root);
        }
    }
    let r_plus = u_roots.iter().filter(|r| r.in_p_plus()).count();
    let r_minus = u_roots.iter().filter(|r| r.in_p_minus()).count();
    let levi_label = levi_label(&l_roots);
    let mut q = ParabolicData {
        x: (x1, x2),
        l,
        u,
        r_plus,
        r_minus,
        levi_label,
        bidegrees: Vec::new(),
        l_roots,
        u_roots,
    };
    q.bidegrees = (0..=3)
        .filter_map(|j| {
            let (p, qq) = (q.r_plus + j, q.r_minus + j);
            if p > 3 || qq > 3 {
                return None;
            }
            let dim = cohomology_dim(&q, p, qq);
            (dim > 0).then_some((p, qq, dim))
        })
        .collect();
    q
}

fn levi_label(l_roots: &[Root]) -> String {
    let has = |r: Root| l_roots.contains(&r);
    if l_roots.len() == 8 {
        String::from("SO0(3,2)")
    } else if has(Root::new(0, 1)) && has(Root::new(0, -1)) {
        String::from("S1 x SO0(1,2)")
    } else if has(Root::new(1, 1)) || has(Root::new(1, -1)) {
        String::from("U(1,1)")
    } else if has(Root::new(1, 0)) {
        String::from("SO(3) x SO(2)")
    } else {
        String::from("S1 x U(1)")
    }
}

/// Dimension of H^{p,q}(g, K; A_q) computed as the space of
/// (l cap k)-invariants in the 2j-th wedge of (l cap p), where
/// j = p - R^+ = q - R^-; zero when the constraint fails.
pub fn cohomology_dim(q: &ParabolicData, p: usize, qq: usize) -> usize {
    let (rp, rm) = (q.r_plus, q.r_minus);
    if p < rp || qq < rm || p - rp != qq - rm {
        return 0;
    }
    let j = p - rp;
    let datum = roots();
    // Basis of l cap p: root vectors of the noncompact roots in l.
    let lp: Vec<So32Element> = q
        .l_roots
        .iter()
        .filter(|r| r.is_noncompact())
        .map(|r| datum.vector(*r).clone())
        .collect();
    let n = lp.len();
    if 2 * j > n {
        return if j == 0 { 1 } else { 0 };
    }
    if j == 0 {
        return 1;
    }
    // Basis of l cap k: the torus plus compact roots in l.
    let mut lk = vec![datum.torus[0].clone(), datum.torus[1].clone()];
    for r in &q.l_roots {
        if !r.is_noncompact() {
            lk.push(datum.vector(*r).clone());
        }
    }
    // ad-action matrices of l cap k on l cap p.
    let actions: Vec<Matrix<GaussQ>> = lk
        .iter()
        .map(|k| action_matrix(k, &lp))
        .collect();
    invariant_dim_in_wedge(&actions, n, 2 * j)
}

/// Matrix of ad(k) on the span of `basis`, columns expanded exactly in
/// that basis.
pub fn action_matrix(k: &So32Element, basis: &[So32Element]) -> Matrix<GaussQ> {
    let n = basis.len();
    // 25 x n coordinate matrix of the basis.
    let coords = Matrix::from_fn(25, n, |r, c| basis[c].flat()[r].clone());
    let mut out = Matrix::zero(n, n);
    for (c, b) in basis.iter().enumerate() {
        let br = k.bracket(b);
        let x = coords
            .solve(&br.flat())
            .expect("bracket stays in the spanned subspace");
        for r in 0..n {
            out[(r, c)] = x[r].clone();
        }
    }
    out
}

/// Dimension of the joint kernel of the derivation actions on the k-th
/// wedge power of an n-dim space.
fn invariant_dim_in_wedge(actions: &[Matrix<GaussQ>], n: usize, k: usize) -> usize {
    let wedge = subsets(n, k);
    let dim = wedge.len();
    let index_of = |s: &Vec<usize>| wedge.binary_search(s).expect("wedge index");
    let mut rows: Vec<Vec<GaussQ>> = Vec::new();
    for a in actions {
        // Derivation action on each wedge basis vector.
        let mut mat = Matrix::<GaussQ>::zero(dim, dim);
        for (col, s) in wedge.iter().enumerate() {
            for (slot, &i) in s.iter().enumerate() {
                // replace factor i by a(.) expanded over basis
                for r in 0..n {
                    let c = a[(r, i)].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let mut t = s.clone();
                    t[slot] = r;
                    // sort with sign; duplicates vanish
                    let Some((sorted, sign)) = sort_with_sign(t) else {
                        continue;
                    };
                    let row = index_of(&sorted);
                    let add = c * GaussQ::from_int(sign);
                    let cur = mat[(row, col)].clone();
                    mat[(row, col)] = cur + add;
                }
            }
        }
        for r in 0..dim {
            rows.push(mat.row(r).to_vec());
        }
    }
    let sys = Matrix::from_rows(rows);
    sys.kernel_basis().len()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, n: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(out, cur, i + 1, n, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, n, k);
    out
}

fn sort_with_sign(mut v: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1i64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// The lowest K-type of A_q: the weight 2*rho(u cap p) as a torus
/// weight, converted to (so3 dimension, so2 character).
pub fn vz_ktype(q: &ParabolicData) -> Result<KType, LieError> {
    let mut m1 = 0i32;
    let mut m2 = 0i32;
    for r in &q.u_roots {
        if r.is_noncompact() {
            m1 += r.ca;
            m2 += r.cb;
        }
    }
    if m1 < 0 {
        return Err(LieError::WeightNotDominant);
    }
    Ok(KType::new((2 * m1 + 1) as usize, m2 as i64))
}

/// The five bidegree families, with the representatives used for the
/// reference table.
pub fn family_representatives() -> Vec<((i64, i64), &'static str)> {
    vec![
        ((0, 0), "full Levi"),
        ((1, 0), "holomorphic-pair Levi"),
        ((1, 1), "u(1,1) Levi, positive"),
        ((1, -1), "u(1,1) Levi, negative"),
        ((2, 1), "torus Levi, dominant x1, positive"),
        ((2, -1), "torus Levi, dominant x1, negative"),
        ((1, 2), "torus Levi, dominant x2, positive"),
        ((1, -2), "torus Levi, dominant x2, negative"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn basis_has_dimension_ten() {
        let b = basis();
        assert_eq!(b.len(), 10);
        for (i, x) in b.iter().enumerate() {
            let coords = x.coords();
            for (j, c) in coords.iter().enumerate() {
                let expect = if i == j { GaussQ::from_int(1) } else { GaussQ::from_int(0) };
                assert_eq!(*c, expect, "coords of basis {i} at {j}");
            }
        }
    }

    #[test]
    fn cartan_split_reconstructs() {
        let b = basis();
        let x = b[0].add(&b[5]).add(&b[3].scale(&GaussQ::gauss(0, 2)));
        let (k, p) = x.cartan_split();
        assert_eq!(k.add(&p), x);
        // pure k stays in k
        let (k2, p2) = b[1].cartan_split();
        assert_eq!(k2, b[1]);
        assert!(p2.is_zero());
        // pure p stays in p
        let (k3, p3) = b[7].cartan_split();
        assert!(k3.is_zero());
        assert_eq!(p3, b[7]);
    }

    #[test]
    fn bracket_of_p_lands_in_k() {
        let b = basis();
        for i in 4..10 {
            for j in 4..10 {
                let br = b[i].bracket(&b[j]);
                let (_, p) = br.cartan_split();
                assert!(p.is_zero(), "[p,p] escaped k at ({i},{j})");
            }
        }
    }

    #[test]
    fn jacobi_identity_on_pseudorandom_triples() {
        let b = basis();
        // distinct index triples through the whole basis
        for (i, j, k) in [(0, 4, 9), (1, 3, 5), (2, 6, 8), (0, 1, 2), (4, 5, 6)] {
            let (x, y, z) = (&b[i], &b[j], &b[k]);
            let s = x
                .bracket(&y.bracket(z))
                .add(&y.bracket(&z.bracket(x)))
                .add(&z.bracket(&x.bracket(y)));
            assert!(s.is_zero(), "jacobi failed on ({i},{j},{k})");
        }
    }

    #[test]
    fn root_vectors_satisfy_eigenrelations() {
        let datum = roots();
        assert_eq!(datum.vectors.len(), 8);
        assert!(datum.verify_eigenrelations());
    }

    #[test]
    fn negative_roots_by_conjugation() {
        let datum = roots();
        let x = datum.vector(Root::new(0, -1));
        let t = &datum.torus[1];
        assert_eq!(t.bracket(x), x.scale(&GaussQ::gauss(0, -1)));
    }

    #[test]
    fn parabolic_families_match_table() {
        // (0,0): l = g, bidegrees (j,j) for 0 <= j <= 3
        let q = parabolic_from(rat_int(0), rat_int(0));
        assert_eq!(q.dim_l() + 2 * q.dim_u(), 10);
        assert_eq!(q.levi_label, "SO0(3,2)");
        assert_eq!(
            q.bidegrees,
            vec![(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)]
        );

        // (1,0): R+ = R- = 1, bidegrees (1,1), (2,2)
        let q = parabolic_from(rat_int(1), rat_int(0));
        assert_eq!((q.r_plus, q.r_minus), (1, 1));
        assert_eq!(q.levi_label, "S1 x SO0(1,2)");
        assert_eq!(q.bidegrees, vec![(1, 1, 1), (2, 2, 1)]);

        // (1,2): bidegree (0,3) only
        let q = parabolic_from(rat_int(1), rat_int(2));
        assert_eq!(q.bidegrees, vec![(0, 3, 1)]);

        // (1,1): bidegrees (0,2), (1,3)
        let q = parabolic_from(rat_int(1), rat_int(1));
        assert_eq!(q.levi_label, "U(1,1)");
        assert_eq!(q.bidegrees, vec![(0, 2, 1), (1, 3, 1)]);

        // (1,-1): mirror: (2,0), (3,1)
        let q = parabolic_from(rat_int(1), rat_int(-1));
        assert_eq!(q.bidegrees, vec![(2, 0, 1), (3, 1, 1)]);

        // (2,1): bidegree (1,2); (2,-1): (2,1)
        let q = parabolic_from(rat_int(2), rat_int(1));
        assert_eq!(q.bidegrees, vec![(1, 2, 1)]);
        let q = parabolic_from(rat_int(2), rat_int(-1));
        assert_eq!(q.bidegrees, vec![(2, 1, 1)]);
    }

    #[test]
    fn parabolic_scale_invariance() {
        for (x1, x2) in [(1i64, 0i64), (1, 2), (2, -1), (1, 1)] {
            let a = parabolic_from(rat_int(x1), rat_int(x2));
            let b = parabolic_from(rat(x1 * 7, 3), rat(x2 * 7, 3));
            assert_eq!(a.bidegrees, b.bidegrees);
            assert_eq!((a.r_plus, a.r_minus), (b.r_plus, b.r_minus));
            assert_eq!(a.levi_label, b.levi_label);
        }
    }

    #[test]
    fn dim_l_plus_twice_dim_u_is_ten() {
        for x1 in -2i64..=2 {
            for x2 in -2i64..=2 {
                let q = parabolic_from(rat_int(x1), rat_int(x2));
                assert_eq!(q.dim_l() + 2 * q.dim_u(), 10, "at ({x1},{x2})");
            }
        }
    }

    #[test]
    fn vz_ktype_of_the_main_parabolic() {
        let q = parabolic_from(rat_int(1), rat_int(0));
        let kt = vz_ktype(&q).unwrap();
        assert_eq!((kt.so3_dim(), kt.so2_char()), (5, 0));
        assert_eq!(cohomology_dim(&q, 1, 1), 1);
        assert_eq!(cohomology_dim(&q, 0, 1), 0);
    }

    #[test]
    fn vz_ktype_of_the_trivial_parabolic() {
        let q = parabolic_from(rat_int(0), rat_int(0));
        let kt = vz_ktype(&q).unwrap();
        assert_eq!((kt.so3_dim(), kt.so2_char()), (1, 0));
        assert_eq!(cohomology_dim(&q, 0, 0), 1);
    }

    #[test]
    fn non_dominant_chamber_is_flagged() {
        let q = parabolic_from(rat_int(-1), rat_int(0));
        assert_eq!(vz_ktype(&q), Err(LieError::WeightNotDominant));
    }

    #[test]
    fn not_in_algebra_is_rejected() {
        let mut m = Matrix::<GaussQ>::zero(5, 5);
        m[(0, 1)] = GaussQ::from_int(1); // missing the -1 partner
        assert_eq!(So32Element::new(m).unwrap_err(), LieError::NotInAlgebra);
    }
}
