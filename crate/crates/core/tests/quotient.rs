use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use weightsys::engine::Engine;
use weightsys::perm::ChordDiagram;
use weightsys::poly::Poly;
use weightsys::vspace::{
    dim_a, four_term_relations, four_term_rows, h_check, integer_rank_profile, kernel_dims, KernelAnalysis,
    QuotientBasis, GENERATORS,
};
use weightsys::{Polynomial, Rational};

const DIMS: [usize; 6] = [1, 2, 3, 6, 10, 19];

#[test]
fn dimensions_up_to_six() {
    for (k, &d) in DIMS.iter().enumerate() {
        assert_eq!(dim_a(k + 1).unwrap(), d, "n = {}", k + 1);
    }
    assert!(dim_a(8).is_err());
}

#[test]
fn small_relation_matrices() {
    let (cols, m) = four_term_relations::<Rational>(1).unwrap();
    assert_eq!((cols.len(), m.nrows()), (1, 0));
    assert_eq!(four_term_relations::<Rational>(2).unwrap().1.rank(), 0);
    let (cols, m) = four_term_relations::<Rational>(3).unwrap();
    assert_eq!((cols.len(), m.rank()), (5, 2));
}

#[test]
fn rational_and_integer_paths_agree() {
    for n in 1..=6 {
        let a = QuotientBasis::compute(n).unwrap();
        let b = QuotientBasis::compute_over::<Rational>(n).unwrap();
        assert_eq!(a.relation_rank, b.relation_rank);
        assert_eq!(a.free, b.free);
    }
    for n in 1..=5 {
        let c = QuotientBasis::compute_over::<num_rational::Rational64>(n).unwrap();
        assert_eq!(c.dim(), DIMS[n - 1]);
    }
}

#[test]
fn rank_ignores_row_order() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in [4, 5] {
        let (_, m) = four_term_relations::<Rational>(n).unwrap();
        let r = m.rank();
        for _ in 0..3 {
            let mut s = m.clone();
            s.shuffle_rows(&mut rng);
            assert_eq!(s.rank(), r, "n = {n}");
        }
    }
    let (cols, mut rows) = four_term_rows(6).unwrap();
    let (r, _) = integer_rank_profile(cols.len(), &rows);
    rows.shuffle(&mut rng);
    assert_eq!(integer_rank_profile(cols.len(), &rows).0, r);
}

#[test]
fn relations_vanish_under_both_weight_systems() {
    let (gl, so) = (Engine::<Rational>::gl(), Engine::<Rational>::so());
    for n in 1..=6 {
        let (cols, rows) = four_term_rows(n).unwrap();
        let perms: Vec<_> = cols.iter().map(ChordDiagram::to_permutation).collect();
        for engine in [&gl, &so] {
            let vals = engine.eval_many(&perms);
            for row in &rows {
                let mut sum = Polynomial::zero();
                for (c, k) in row {
                    sum.add_scaled(&vals[*c], &Rational::from_integer((*k).into()));
                }
                assert!(sum.is_zero(), "n = {n}, row {row:?}");
            }
        }
    }
}

#[test]
fn six_chord_kernel() {
    for n in 1..=5 {
        assert_eq!(kernel_dims(n).unwrap(), (0, 0));
    }
    let (gl, so) = (Engine::<Rational>::gl(), Engine::<Rational>::so());
    let a = KernelAnalysis::compute(6, &gl, &so).unwrap();
    assert_eq!((a.ker_gl(), a.ker_joint()), (1, 1));
    let ker = a.gl_kernel();
    assert_eq!(ker.len(), 1);
    let (mut g, mut s) = (Polynomial::zero(), Polynomial::zero());
    for (d, c) in &ker[0] {
        g.add_scaled(&gl.eval_diagram(d), c);
        s.add_scaled(&so.eval_diagram(d), c);
    }
    assert!(g.is_zero());
    assert!(s.is_zero());
}

#[test]
fn generator_table() {
    let sizes: Vec<usize> = GENERATORS.iter().map(|(_, p)| p.len()).collect();
    assert_eq!(sizes, vec![1, 2, 3, 4, 4, 5, 5, 5, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7]);
    for (name, pairs) in GENERATORS {
        assert!(ChordDiagram::from_pairs(pairs).is_ok(), "{name}");
    }
}

#[test]
fn element_h() {
    let (hg, hs) = h_check(&Engine::<Rational>::gl(), &Engine::<Rational>::so());
    assert!(hg.is_zero());
    let inner: Polynomial = "-24*C2 + 20*C0*C2 - 4*C0^2*C2 - 2*C2^2 - 4*C0*C2^2 + C0^2*C2^2 + 16*C4 - 2*C0*C4"
        .parse()
        .unwrap();
    let expected = &(&Poly::from_int(192) * &Poly::c(0)) * &(&(&Poly::c(0) - &Poly::from_int(6)) * &inner);
    assert_eq!(hs, expected);
    assert!(hs.specialize_c0(&Rational::from_integer(6.into())).is_zero());
}
