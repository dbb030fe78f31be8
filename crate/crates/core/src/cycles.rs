//! Desk-scale special-cycle combinatorics: lattice vectors with
//! congruence conditions, the integral symplectic action through the
//! skew-matrix model, BFS orbit partitions, and frame classification.
//!
//! Vectors live in the rescaled dual lattice with the integer
//! discriminant form Delta = b^2 - 4ac - 4de; the action of an integral
//! symplectic matrix is conjugation of the associated skew matrix
//! (computed on twice the matrix so all intermediates are integers).
//!
//! Orbits of an infinite group on an infinite lattice are explored
//! under an explicit height bound, and the result carries an honesty
//! flag: `exact` is true only when either no generator move ever left
//! the bound (so every class is a complete orbit) or the classes are
//! pairwise separated by genuine invariants of the action
//! (discriminant, content, residue class).

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{rat_int, Matrix, Rat};

/// A lattice vector (a, b, c, d, e) in the dual coordinates.
pub type LatticeVector = [i64; 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleError {
    /// Enumeration box exceeds the desk cap of 10.
    BoxCapExceeded { requested: i64 },
    /// The matrix is not integral symplectic.
    NotSymplectic,
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleError::BoxCapExceeded { requested } => {
                write!(f, "box bound {requested} exceeds the cap 10")
            }
            CycleError::NotSymplectic => write!(f, "matrix is not integral symplectic"),
        }
    }
}

/// Delta = b^2 - 4ac - 4de.
pub fn discriminant(v: &LatticeVector) -> i64 {
    let [a, b, c, d, e] = *v;
    b * b - 4 * a * c - 4 * d * e
}

/// The polarization pairing of Delta; integer valued.
pub fn pairing(x: &LatticeVector, y: &LatticeVector) -> i64 {
    x[1] * y[1] - 2 * (x[0] * y[2] + x[2] * y[0]) - 2 * (x[3] * y[4] + x[4] * y[3])
}

/// gcd of the coordinates (0 for the zero vector).
pub fn content(v: &LatticeVector) -> i64 {
    v.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// sup-norm height of a vector.
pub fn height(v: &LatticeVector) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

/// A congruence condition: the class of h modulo N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongClass {
    h: LatticeVector,
    n: i64,
}

impl CongClass {
    pub fn new(h: LatticeVector, n: i64) -> Self {
        assert!(n >= 1, "level must be positive");
        CongClass { h: h.map(|x| x.rem_euclid(n)), n }
    }

    pub fn level(&self) -> i64 {
        self.n
    }

    pub fn rep(&self) -> &LatticeVector {
        &self.h
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        (0..5).all(|i| v[i].rem_euclid(self.n) == self.h[i])
    }
}

/// Residue of a vector mod N.
pub fn residue(v: &LatticeVector, n: i64) -> LatticeVector {
    v.map(|x| x.rem_euclid(n))
}

/// All vectors in the box [-B, B]^5 with the given discriminant and
/// congruence condition, in lexicographic order.
pub fn enumerate_box(
    delta_target: i64,
    b_box: i64,
    cc: Option<&CongClass>,
) -> Result<Vec<LatticeVector>, CycleError> {
    if !(0..=10).contains(&b_box) {
        return Err(CycleError::BoxCapExceeded { requested: b_box });
    }
    let mut out = Vec::new();
    let r = -b_box..=b_box;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    for e in r.clone() {
                        let v = [a, b, c, d, e];
                        if discriminant(&v) != delta_target {
                            continue;
                        }
                        if let Some(cc) = cc {
                            if !cc.contains(&v) {
                                continue;
                            }
                        }
                        out.push(v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The standard integral symplectic generators: the Weyl element J and
/// the transvections [[1, S], [0, 1]] over the symmetric basis
/// {E11, E22, E12 + E21}, together with all inverses.
pub fn sp4z_generators() -> Vec<[[i64; 4]; 4]> {
    let mut out = Vec::new();
    let j = [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [-1, 0, 0, 0],
        [0, -1, 0, 0],
    ];
    let j_inv = [
        [0, 0, -1, 0],
        [0, 0, 0, -1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ];
    out.push(j);
    out.push(j_inv);
    let sym = [
        [[1, 0], [0, 0]],
        [[0, 0], [0, 1]],
        [[0, 1], [1, 0]],
    ];
    for s in sym {
        for sign in [1i64, -1] {
            let mut g = [[0i64; 4]; 4];
            for i in 0..4 {
                g[i][i] = 1;
            }
            for r in 0..2 {
                for c in 0..2 {
                    g[r][2 + c] = sign * s[r][c];
                }
            }
            out.push(g);
        }
    }
    out
}

/// Is g integral symplectic: g^t Psi g = Psi with Psi = [[0,1],[-1,0]]?
pub fn is_symplectic_i64(g: &[[i64; 4]; 4]) -> bool {
    let psi = |i: usize, j: usize| -> i64 {
        match (i, j) {
            (0, 2) | (1, 3) => 1,
            (2, 0) | (3, 1) => -1,
            _ => 0,
        }
    };
    for i in 0..4 {
        for j in 0..4 {
            let mut acc: i128 = 0;
            for k in 0..4 {
                for l in 0..4 {
                    acc += g[k][i] as i128 * psi(k, l) as i128 * g[l][j] as i128;
                }
            }
            if acc != psi(i, j) as i128 {
                return false;
            }
        }
    }
    true
}

/// Matrix product of integral 4x4 matrices.
pub fn matmul4(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc: i128 = 0;
            for k in 0..4 {
                acc += a[i][k] as i128 * b[k][j] as i128;
            }
            out[i][j] = i64::try_from(acc).expect("matrix entry overflow");
        }
    }
    out
}

/// Action of an integral symplectic matrix on a lattice vector: lift to
/// (twice) the skew matrix, conjugate, project back.  Preserves the
/// discriminant and the content.
pub fn act(g: &[[i64; 4]; 4], x: &LatticeVector) -> Result<LatticeVector, CycleError> {
    if !is_symplectic_i64(g) {
        return Err(CycleError::NotSymplectic);
    }
    Ok(act_unchecked(g, x))
}

fn act_unchecked(g: &[[i64; 4]; 4], x: &LatticeVector) -> LatticeVector {
    // Twice the skew matrix of x: entries stay integral.
    let [a, b, c, d, e] = *x;
    let mut m = [[0i128; 4]; 4];
    let mut set = |i: usize, j: usize, v: i64| {
        m[i][j] = v as i128;
        m[j][i] = -(v as i128);
    };
    set(0, 1, 2 * d);
    set(0, 2, b);
    set(0, 3, -2 * a);
    set(1, 2, 2 * c);
    set(1, 3, -b);
    set(2, 3, -2 * e);
    // n = g m g^t
    let mut gm = [[0i128; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc: i128 = 0;
            for k in 0..4 {
                acc += g[i][k] as i128 * m[k][j];
            }
            gm[i][j] = acc;
        }
    }
    let mut n = [[0i128; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc: i128 = 0;
            for k in 0..4 {
                acc += gm[i][k] * g[j][k] as i128;
            }
            n[i][j] = acc;
        }
    }
    // n is twice the conjugated skew matrix; halving restores the dual
    // coordinates; the rescaled lattice is stable under conjugation, so
    // the halving is always exact.
    let halve = |v: i128| -> i64 {
        debug_assert!(v % 2 == 0, "integrality of the dual lattice action");
        i64::try_from(v / 2).expect("coordinate overflow")
    };
    [
        halve(-n[0][3]),
        halve(n[0][2] - n[1][3]),
        halve(n[1][2]),
        halve(n[0][1]),
        halve(-n[2][3]),
    ]
}

/// A frame: an ordered list of lattice vectors with its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub vectors: Vec<LatticeVector>,
}

impl Frame {
    pub fn new(vectors: Vec<LatticeVector>) -> Self {
        assert!(vectors.len() <= 3, "frames of size at most 3");
        Frame { vectors }
    }

    /// Gram matrix under the Delta polarization pairing.
    pub fn gram(&self) -> Matrix<Rat> {
        let n = self.vectors.len();
        Matrix::from_fn(n, n, |i, j| {
            rat_int(pairing(&self.vectors[i], &self.vectors[j]))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameClass {
    pub nonsingular: bool,
    pub nondegenerate: bool,
}

/// Nonsingular iff the Gram matrix has full rank n; nondegenerate iff
/// its rank equals the dimension of the span of the vectors.
pub fn frame_classify(f: &Frame) -> FrameClass {
    let n = f.vectors.len();
    let gram_rank = f.gram().rank();
    let span = Matrix::from_fn(n.max(1), 5, |r, c| {
        if r < n {
            rat_int(f.vectors[r][c])
        } else {
            rat_int(0)
        }
    });
    FrameClass {
        nonsingular: gram_rank == n,
        nondegenerate: gram_rank == span.rank(),
    }
}

/// A partition of lattice vectors into generator-connected classes.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    /// Classes of the input vectors, each sorted, sorted by first
    /// element.
    pub classes: Vec<Vec<LatticeVector>>,
    /// True when the partition provably equals the orbit partition of
    /// the input: no frontier escape, or invariants separate classes.
    pub exact: bool,
    /// Whether some generator move left the height bound.
    pub escaped: bool,
    pub height_bound: i64,
    pub level: i64,
    pub generator_set: String,
    /// For level > 1: the congruence generator words that were found,
    /// as index sequences into the base generator set.
    pub congruence_words: Vec<Vec<usize>>,
}

/// Word-length cap for the principal-congruence generator search.
pub const CONGRUENCE_WORD_CAP: usize = 4;

/// Generator words representing elements of the principal congruence
/// subgroup of level n, found by bounded breadth-first search over
/// words in the base generators.
pub fn congruence_generator_words(n: i64, cap: usize) -> Vec<Vec<usize>> {
    let gens = sp4z_generators();
    let id = residue_matrix(&identity4(), n);
    let mut seen: BTreeSet<[[i64; 4]; 4]> = BTreeSet::new();
    let mut queue: VecDeque<([[i64; 4]; 4], Vec<usize>)> = VecDeque::new();
    queue.push_back((identity4(), Vec::new()));
    seen.insert(id);
    let mut words = Vec::new();
    while let Some((m, word)) = queue.pop_front() {
        if word.len() >= cap {
            continue;
        }
        for (gi, g) in gens.iter().enumerate() {
            let next = matmul4(g, &m);
            let res = residue_matrix(&next, n);
            let mut w = word.clone();
            w.push(gi);
            if res == residue_matrix(&identity4(), n) && !w.is_empty() {
                words.push(w.clone());
            }
            if seen.insert(res) {
                queue.push_back((next, w));
            }
        }
    }
    words
}

fn identity4() -> [[i64; 4]; 4] {
    let mut m = [[0i64; 4]; 4];
    for i in 0..4 {
        m[i][i] = 1;
    }
    m
}

fn residue_matrix(m: &[[i64; 4]; 4], n: i64) -> [[i64; 4]; 4] {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[i][j].rem_euclid(n);
        }
    }
    out
}

fn word_matrix(word: &[usize], gens: &[[[i64; 4]; 4]]) -> [[i64; 4]; 4] {
    let mut m = identity4();
    for &i in word {
        m = matmul4(&gens[i], &m);
    }
    m
}

/// Partition the given vectors under the level-N congruence group
/// generators, exploring through vectors of height at most
/// `height_bound`.
pub fn orbit_partition(vs: &[LatticeVector], level: i64, height_bound: i64) -> OrbitPartition {
    assert!(level >= 1);
    let base = sp4z_generators();
    type ActingSet = (Vec<[[i64; 4]; 4]>, Vec<Vec<usize>>, String);
    let (acting, words, label): ActingSet = if level == 1 {
        (base.clone(), Vec::new(), String::from("sp4z standard generators"))
    } else {
        let words = congruence_generator_words(level, CONGRUENCE_WORD_CAP);
        let mats: Vec<[[i64; 4]; 4]> = words.iter().map(|w| word_matrix(w, &base)).collect();
        (
            mats,
            words,
            alloc::format!("principal congruence words of level {level} up to length {CONGRUENCE_WORD_CAP}"),
        )
    };

    // Union-find over discovered vectors.
    let mut index: BTreeMap<LatticeVector, usize> = BTreeMap::new();
    let mut parent: Vec<usize> = Vec::new();
    let mut queue: VecDeque<LatticeVector> = VecDeque::new();
    let mut escaped = false;

    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }

    let intern = |v: LatticeVector,
                      index: &mut BTreeMap<LatticeVector, usize>,
                      parent: &mut Vec<usize>,
                      queue: &mut VecDeque<LatticeVector>|
     -> usize {
        if let Some(&i) = index.get(&v) {
            return i;
        }
        let i = parent.len();
        index.insert(v, i);
        parent.push(i);
        queue.push_back(v);
        i
    };

    for v in vs {
        intern(*v, &mut index, &mut parent, &mut queue);
    }
    while let Some(v) = queue.pop_front() {
        let vi = find(&mut parent, index[&v]);
        for g in &acting {
            let w = act_unchecked(g, &v);
            if height(&w) > height_bound {
                escaped = true;
                continue;
            }
            let wi = intern(w, &mut index, &mut parent, &mut queue);
            let wi = find(&mut parent, wi);
            let vi = find(&mut parent, vi);
            if vi != wi {
                parent[wi] = vi;
            }
        }
    }

    // Collect classes of the input vectors only.
    let mut roots: BTreeMap<usize, Vec<LatticeVector>> = BTreeMap::new();
    for v in vs {
        let r = find(&mut parent, index[v]);
        roots.entry(r).or_default().push(*v);
    }
    let mut classes: Vec<Vec<LatticeVector>> = roots
        .into_values()
        .map(|mut c| {
            c.sort_unstable();
            c.dedup();
            c
        })
        .collect();
    classes.sort();

    // Invariant separation: discriminant, content, residue mod level.
    let class_key = |c: &Vec<LatticeVector>| -> (i64, i64, LatticeVector) {
        let v = &c[0];
        (discriminant(v), content(v), residue(v, level))
    };
    let mut keys: Vec<_> = classes.iter().map(class_key).collect();
    keys.sort_unstable();
    let separated = keys.windows(2).all(|w| w[0] != w[1]);
    let exact = !escaped || separated;

    OrbitPartition {
        classes,
        exact,
        escaped,
        height_bound,
        level,
        generator_set: label,
        congruence_words: words,
    }
}

/// Frames of size n against an m-dimensional quadratic space: the
/// comparison n < m/4 without rational arithmetic.
pub fn in_stable_range(n: i64, m: i64) -> bool {
    4 * n < m
}

/// The combinatorial skeleton of one congruence special-cycle datum.
#[derive(Debug, Clone)]
pub struct CycleReport {
    pub delta: i64,
    pub h: LatticeVector,
    pub level: i64,
    pub box_bound: i64,
    pub height_bound: i64,
    /// n = 1 against m = 5: the stable range comparison n < m/4.
    pub stable_range: bool,
    pub vector_count: usize,
    pub primitive_count: usize,
    pub orbit_count: usize,
    pub exact: bool,
    /// Index of the class containing the discriminant normal form, when
    /// it applies.
    pub normal_form_class: Option<usize>,
    pub partition: OrbitPartition,
}

/// Enumerate, partition, and classify one (Delta, h, N) datum.
pub fn cycle_report(
    delta: i64,
    h: LatticeVector,
    level: i64,
    box_bound: i64,
    height_bound: i64,
) -> Result<CycleReport, CycleError> {
    let cc = CongClass::new(h, level);
    let vs = enumerate_box(delta, box_bound, Some(&cc))?;
    let partition = orbit_partition(&vs, level, height_bound);
    let normal_form_class = crate::humbert::normal_form(delta).ok().and_then(|nf| {
        let nfv = nf.vector();
        partition.classes.iter().position(|c| c.contains(&nfv))
    });
    Ok(CycleReport {
        delta,
        h: *cc.rep(),
        level,
        box_bound,
        height_bound,
        stable_range: in_stable_range(1, 5),
        vector_count: vs.len(),
        primitive_count: vs.iter().filter(|v| content(v) == 1).count(),
        orbit_count: partition.classes.len(),
        exact: partition.exact,
        normal_form_class,
        partition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_symplectic_and_inverse_closed() {
        let gens = sp4z_generators();
        assert_eq!(gens.len(), 8);
        for g in &gens {
            assert!(is_symplectic_i64(g));
            // the inverse is in the set
            let found = gens.iter().any(|h| {
                let p = matmul4(g, h);
                p == identity4()
            });
            assert!(found, "inverse missing for {g:?}");
        }
    }

    #[test]
    fn identity_acts_trivially() {
        let x = [1, 2, 3, 4, 5];
        assert_eq!(act(&identity4(), &x).unwrap(), x);
    }

    #[test]
    fn action_preserves_discriminant_and_content_on_small_box() {
        let gens = sp4z_generators();
        let all = enumerate_box_all(1);
        for v in &all {
            for g in &gens {
                let w = act(g, v).unwrap();
                assert_eq!(discriminant(&w), discriminant(v));
                assert_eq!(content(&w), content(v));
            }
        }
    }

    fn enumerate_box_all(b: i64) -> Vec<LatticeVector> {
        let mut out = Vec::new();
        let r = -b..=b;
        for a in r.clone() {
            for bb in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        for e in r.clone() {
                            out.push([a, bb, c, d, e]);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn action_matches_the_rational_isogeny() {
        use crate::plucker::iso_rho;
        let gens = sp4z_generators();
        for g in &gens {
            let gm = Matrix::from_fn(4, 4, |r, c| rat_int(g[r][c]));
            let rho = iso_rho(&gm).unwrap();
            for v in [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [1, 1, -1, 2, 0]] {
                let lhs = act(g, &v).unwrap();
                let arr: Vec<Rat> = v.iter().map(|&x| rat_int(x)).collect();
                let rhs = rho.mul_vec(&arr);
                for i in 0..5 {
                    assert_eq!(rat_int(lhs[i]), rhs[i]);
                }
            }
        }
    }

    #[test]
    fn non_symplectic_is_rejected() {
        let mut g = identity4();
        g[0][1] = 1;
        assert_eq!(act(&g, &[1, 0, 0, 0, 0]), Err(CycleError::NotSymplectic));
    }

    #[test]
    fn enumeration_examples() {
        // Delta = 1, box 1 includes both named vectors.
        let vs = enumerate_box(1, 1, None).unwrap();
        assert!(vs.contains(&[0, 1, 0, 0, 0]));
        assert!(vs.contains(&[1, 1, 0, 0, 0]));
        // Delta = -4 is realized in box 1, e.g. by (0,0,0,1,1).
        let neg = enumerate_box(-4, 1, None).unwrap();
        assert!(!neg.is_empty());
        assert!(neg.contains(&[0, 0, 0, 1, 1]));
        // Delta = 2 is obstructed mod 4.
        assert!(enumerate_box(2, 3, None).unwrap().is_empty());
        // box cap
        assert!(matches!(
            enumerate_box(1, 11, None),
            Err(CycleError::BoxCapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_negation_symmetric() {
        let vs = enumerate_box(5, 2, None).unwrap();
        for v in &vs {
            let neg = v.map(|x| -x);
            assert!(vs.contains(&neg));
        }
    }

    #[test]
    fn congruence_condition_filters() {
        let cc = CongClass::new([0, 1, 0, 0, 0], 2);
        let vs = enumerate_box(1, 2, Some(&cc)).unwrap();
        assert!(!vs.is_empty());
        for v in &vs {
            assert_eq!(residue(v, 2), [0, 1, 0, 0, 0]);
        }
    }

    #[test]
    fn frames_classify_by_rank_and_span() {
        // single positive vector: nonsingular and nondegenerate
        let f = Frame::new(alloc::vec![[1, 1, 0, 0, 0]]);
        assert_eq!(
            frame_classify(&f),
            FrameClass { nonsingular: true, nondegenerate: true }
        );
        // zero frame: nondegenerate but singular
        let z = Frame::new(alloc::vec![[0, 0, 0, 0, 0]]);
        assert_eq!(
            frame_classify(&z),
            FrameClass { nonsingular: false, nondegenerate: true }
        );
        // two proportional positive vectors: rank 1 = span 1, not full
        let p = Frame::new(alloc::vec![[1, 1, 0, 0, 0], [2, 2, 0, 0, 0]]);
        assert_eq!(
            frame_classify(&p),
            FrameClass { nonsingular: false, nondegenerate: true }
        );
        // isotropic nonzero vector: rank 0 < span 1: degenerate
        let iso = Frame::new(alloc::vec![[1, 0, 0, 0, 0]]);
        assert_eq!(
            frame_classify(&iso),
            FrameClass { nonsingular: false, nondegenerate: false }
        );
    }

    #[test]
    fn congruence_words_exist_for_level_two() {
        let words = congruence_generator_words(2, CONGRUENCE_WORD_CAP);
        assert!(!words.is_empty());
        let gens = sp4z_generators();
        for w in &words {
            let m = word_matrix(w, &gens);
            assert!(is_symplectic_i64(&m));
            assert_eq!(residue_matrix(&m, 2), residue_matrix(&identity4(), 2));
        }
    }

    #[test]
    fn distinct_discriminants_never_merge() {
        let mut vs = enumerate_box(1, 1, None).unwrap();
        vs.extend(enumerate_box(4, 1, None).unwrap());
        let p = orbit_partition(&vs, 1, 8);
        for c in &p.classes {
            let d0 = discriminant(&c[0]);
            assert!(c.iter().all(|v| discriminant(v) == d0));
        }
    }

    #[test]
    fn partition_output_is_canonical() {
        let vs = enumerate_box(1, 1, None).unwrap();
        let p1 = orbit_partition(&vs, 1, 8);
        let mut shuffled = vs.clone();
        shuffled.reverse();
        let p2 = orbit_partition(&shuffled, 1, 8);
        assert_eq!(p1.classes, p2.classes);
    }

    #[test]
    fn level_two_residues_never_merge() {
        // vectors with different residues mod 2 stay in different classes
        let mut vs = Vec::new();
        vs.extend(enumerate_box(4, 2, Some(&CongClass::new([0, 0, 1, 0, 0], 2))).unwrap());
        vs.extend(enumerate_box(4, 2, Some(&CongClass::new([1, 0, 0, 0, 0], 2))).unwrap());
        let p = orbit_partition(&vs, 2, 6);
        for c in &p.classes {
            let r0 = residue(&c[0], 2);
            assert!(c.iter().all(|v| residue(v, 2) == r0));
        }
    }

    #[test]
    fn primitive_discriminant_nine_is_a_single_certified_orbit() {
        let vs: Vec<LatticeVector> = enumerate_box(9, 3, None)
            .unwrap()
            .into_iter()
            .filter(|v| content(v) == 1)
            .collect();
        let p = orbit_partition(&vs, 1, 12);
        assert_eq!(p.classes.len(), 1);
        assert!(p.exact);
        let nf = crate::humbert::normal_form(9).unwrap().vector();
        assert!(p.classes[0].contains(&nf));
    }

    #[test]
    fn report_for_discriminant_one() {
        let rep = cycle_report(1, [0; 5], 1, 2, 8).unwrap();
        assert!(rep.stable_range);
        assert!(rep.vector_count > 0);
        assert_eq!(rep.orbit_count, rep.partition.classes.len());
    }
}
