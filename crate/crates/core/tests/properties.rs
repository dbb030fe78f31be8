//! Property tests for the algebraic invariants: normal-ordering
//! confluence, star involution, rank/nullity, restriction of scalars,
//! congruence invariance of signatures, form dictionaries, and orbit
//! bookkeeping.

use proptest::prelude::*;

use siegel_core::cycles::{
    self, act, content, discriminant, enumerate_box, orbit_partition, sp4z_generators,
};
use siegel_core::exact::{
    algebras, rat, rat_int, restrict_scalars, signature_of_symmetric, AlgebraElement,
    AlgebraLinearForm, GaussQ, Matrix, Rat,
};
use siegel_core::humbert::{membership, t11_and_ns_rank, SiegelPointExact, SingularRelation};
use siegel_core::plucker::{
    b0_form, b_form, plucker_quadric_check, wedge_to_skew, WedgeVector,
};
use siegel_core::weyl::{Poly5, WeylElement, WordExpr};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn arb_gauss() -> impl Strategy<Value = GaussQ> {
    (arb_rat(), arb_rat()).prop_map(|(re, im)| GaussQ::new(re, im))
}

fn arb_exps() -> impl Strategy<Value = [u16; 5]> {
    prop::array::uniform5(0u16..=2)
}

fn arb_weyl() -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((arb_exps(), arb_exps(), arb_gauss()), 1..4).prop_map(|terms| {
        let mut w = WeylElement::zero();
        for (z, d, c) in terms {
            w.add_term(z, d, c);
        }
        w
    })
}

fn arb_poly() -> impl Strategy<Value = Poly5> {
    prop::collection::vec((arb_exps(), arb_gauss()), 1..4).prop_map(|terms| {
        let mut p = Poly5::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    })
}

fn arb_word() -> impl Strategy<Value = WordExpr> {
    prop::collection::vec(
        ((-3i64..=3, -3i64..=3), prop::collection::vec(0usize..6, 0..4)),
        1..3,
    )
    .prop_map(|terms| WordExpr {
        terms: terms
            .into_iter()
            .map(|((re, im), w)| (GaussQ::gauss(re, im), w))
            .collect(),
    })
}

fn concat(a: &WordExpr, b: &WordExpr) -> WordExpr {
    let mut terms = Vec::new();
    for (ca, wa) in &a.terms {
        for (cb, wb) in &b.terms {
            let mut w = wa.clone();
            w.extend(wb.iter().copied());
            terms.push((ca * cb, w));
        }
    }
    WordExpr { terms }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_multiplication_is_associative(a in arb_weyl(), b in arb_weyl(), c in arb_weyl()) {
        let left = a.multiply(&b).multiply(&c);
        let right = a.multiply(&b.multiply(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn apply_respects_multiplication(a in arb_weyl(), b in arb_weyl(), p in arb_poly()) {
        prop_assert_eq!(a.multiply(&b).apply(&p), a.apply(&b.apply(&p)));
    }

    #[test]
    fn star_is_an_involutive_antiautomorphism(a in arb_word(), b in arb_word()) {
        let triples = siegel_core::weyl::Sl2Triples::new();
        let alphabet = triples.alphabet();
        // involution
        prop_assert_eq!(a.star().star(), a.clone());
        // anti-automorphism after evaluation
        let lhs = concat(&a, &b).star().eval(&alphabet);
        let rhs = b.star().eval(&alphabet).multiply(&a.star().eval(&alphabet));
        prop_assert_eq!(lhs, rhs);
    }
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rat>> {
    prop::collection::vec(-6i64..=6, rows * cols).prop_map(move |v| {
        Matrix::from_fn(rows, cols, |r, c| rat_int(v[r * cols + c]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_columns(m in arb_matrix(3, 5)) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.len(), 5);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| num_traits::Zero::is_zero(x)));
        }
    }

    #[test]
    fn signature_is_congruence_invariant(
        sym in prop::collection::vec(-5i64..=5, 10),
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..6),
    ) {
        // symmetric 4x4 from 10 free entries
        let mut m = Matrix::<Rat>::zero(4, 4);
        let mut it = sym.into_iter();
        for i in 0..4 {
            for j in i..4 {
                let v = rat_int(it.next().unwrap());
                m[(i, j)] = v.clone();
                m[(j, i)] = v;
            }
        }
        // invertible P from elementary operations
        let mut p = Matrix::<Rat>::identity(4);
        for (i, j, f) in ops {
            if i != j {
                // p := p * (I + f E_ij), invertible
                let mut e = Matrix::<Rat>::identity(4);
                e[(i, j)] = rat_int(f);
                p = p.matmul(&e);
            }
        }
        let conj = p.transpose().matmul(&m).matmul(&p);
        prop_assert_eq!(
            signature_of_symmetric(&m).unwrap(),
            signature_of_symmetric(&conj).unwrap()
        );
    }

    #[test]
    fn restriction_of_scalars_preserves_solutions(
        which in 0usize..3,
        coords in prop::collection::vec(-4i64..=4, 3 * 4),
        candidate in prop::collection::vec(-4i64..=4, 3),
    ) {
        let alg = match which {
            0 => algebras::q_plain(),
            1 => algebras::q_i(),
            _ => algebras::q_i_sqrt2(),
        };
        let dim = alg.dim();
        let coeffs: Vec<AlgebraElement> = (0..3)
            .map(|k| {
                let v: Vec<Rat> = (0..dim).map(|i| rat_int(coords[k * 4 + i])).collect();
                AlgebraElement::new(alg.clone(), v)
            })
            .collect();
        let eq = AlgebraLinearForm { coeffs: coeffs.clone() };
        let sys = restrict_scalars(&eq).unwrap();
        // candidate rational solution vector
        let x: Vec<Rat> = candidate.iter().map(|&v| rat_int(v)).collect();
        let solves_matrix = sys.mul_vec(&x).iter().all(|v| num_traits::Zero::is_zero(v));
        let mut acc = AlgebraElement::zero(alg.clone());
        for (c, xi) in coeffs.iter().zip(&x) {
            acc = acc.add(&c.scale(xi)).unwrap();
        }
        prop_assert_eq!(solves_matrix, acc.is_zero());
    }

    #[test]
    fn b_form_equals_b0_under_the_bijection(
        xi in prop::array::uniform6(-6i64..=6),
        eta in prop::array::uniform6(-6i64..=6),
    ) {
        let xi = WedgeVector::from_ints(xi);
        let eta = WedgeVector::from_ints(eta);
        let b0 = b0_form(&wedge_to_skew(&xi), &wedge_to_skew(&eta));
        prop_assert_eq!(b_form(&xi, &eta), b0.clone());
        // integer-valued on integral skew matrices
        prop_assert!(b0.is_integer());
    }

    #[test]
    fn decomposables_satisfy_the_quadric(
        x in prop::array::uniform4(-6i64..=6),
        y in prop::array::uniform4(-6i64..=6),
    ) {
        let xr: [Rat; 4] = core::array::from_fn(|i| rat_int(x[i]));
        let yr: [Rat; 4] = core::array::from_fn(|i| rat_int(y[i]));
        prop_assert!(plucker_quadric_check(&xr, &yr));
    }

    #[test]
    fn generator_words_preserve_action_invariants(
        word in prop::collection::vec(0usize..8, 1..5),
        v in prop::array::uniform5(-4i64..=4),
    ) {
        let gens = sp4z_generators();
        let mut g = gens[word[0]];
        for &i in &word[1..] {
            g = cycles::matmul4(&g, &gens[i]);
        }
        let w = act(&g, &v).unwrap();
        prop_assert_eq!(discriminant(&w), discriminant(&v));
        prop_assert_eq!(content(&w), content(&v));
    }

    #[test]
    fn discriminants_are_zero_or_one_mod_four(v in prop::array::uniform5(-50i64..=50)) {
        prop_assert!(matches!(discriminant(&v).rem_euclid(4), 0 | 1));
    }
}

fn qi_diag(t1_im: i64, t2_im: i64) -> SiegelPointExact {
    let qi = algebras::q_i();
    let g = |im: i64| AlgebraElement::new(qi.clone(), vec![rat_int(0), rat_int(im)]);
    SiegelPointExact::diagonal(qi.clone(), g(t1_im), g(t2_im)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn membership_is_invariant_under_rational_scaling(
        t1 in 1i64..=3,
        t2 in 1i64..=3,
        rel in prop::array::uniform5(-3i64..=3),
        lambda in prop::sample::select(vec![-3i64, -2, -1, 2, 3]),
    ) {
        let tau = qi_diag(t1, t2);
        let rel = SingularRelation::new(rel[0], rel[1], rel[2], rel[3], rel[4]);
        let base = membership(&tau, &rel).unwrap();
        prop_assert_eq!(membership(&tau, &rel.scale(lambda)).unwrap(), base);
    }

    #[test]
    fn ns_rank_is_invariant_under_integral_substitutions(
        t1 in 1i64..=2,
        t2 in 1i64..=3,
        s in prop::array::uniform3(-2i64..=2),
        lower in -2i64..=2,
    ) {
        // tau over Q(i); translations tau + S and the unimodular
        // conjugation A tau A^t stay exactly representable.
        let qi = algebras::q_i();
        let g = |re: i64, im: i64| {
            AlgebraElement::new(qi.clone(), vec![rat_int(re), rat_int(im)])
        };
        let tau = SiegelPointExact::new(g(0, t1), g(0, 1), g(0, t2 + 1)).unwrap();
        let (_, rank) = t11_and_ns_rank(&tau).unwrap();

        // translation by the symmetric integer matrix [[s0, s1], [s1, s2]]
        let translated = SiegelPointExact::new(
            tau.tau1().add(&g(s[0], 0)).unwrap(),
            tau.tau12().add(&g(s[1], 0)).unwrap(),
            tau.tau2().add(&g(s[2], 0)).unwrap(),
        )
        .unwrap();
        let (_, rank_t) = t11_and_ns_rank(&translated).unwrap();
        prop_assert_eq!(rank, rank_t);

        // A = [[1, 0], [lower, 1]]: A tau A^t
        let a11 = tau.tau1().clone();
        let a12 = tau.tau1().scale(&rat_int(lower)).add(tau.tau12()).unwrap();
        let a22 = tau
            .tau1()
            .scale(&rat_int(lower * lower))
            .add(&tau.tau12().scale(&rat_int(2 * lower)))
            .unwrap()
            .add(tau.tau2())
            .unwrap();
        let conj = SiegelPointExact::new(a11, a12, a22).unwrap();
        let (_, rank_c) = t11_and_ns_rank(&conj).unwrap();
        prop_assert_eq!(rank, rank_c);
    }

    #[test]
    fn enumeration_is_negation_symmetric(delta in -6i64..=9, b in 1i64..=2) {
        let vs = enumerate_box(delta, b, None).unwrap();
        for v in &vs {
            prop_assert!(vs.contains(&v.map(|x| -x)));
        }
    }

    #[test]
    fn orbit_partition_is_order_independent(
        delta in prop::sample::select(vec![1i64, 4, 5]),
        perm in prop::collection::vec(0usize..1000, 0..1),
    ) {
        let _ = perm;
        let vs = enumerate_box(delta, 1, None).unwrap();
        let mut reversed = vs.clone();
        reversed.reverse();
        let a = orbit_partition(&vs, 1, 8);
        let b = orbit_partition(&reversed, 1, 8);
        prop_assert_eq!(a.classes, b.classes);
    }
}
