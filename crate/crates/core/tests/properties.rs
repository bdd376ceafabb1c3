use num_traits::Zero;
use proptest::prelude::*;

use tjurina::algebra::{
    binomial, count_monomials, monomials_of_degree, nullspace, rank, rank_mod_prime, rat,
    FieldMode, GradedMatrix, HomogeneousPoly, Monomial,
};
use tjurina::parse::parse_poly;
use tjurina::syzygy::JacobianSystem;

fn poly_strategy(n_vars: usize, max_degree: u32) -> impl Strategy<Value = HomogeneousPoly> {
    (1..=max_degree).prop_flat_map(move |d| {
        prop::collection::vec(
            (prop::collection::vec(0..=d, n_vars), -20i64..=20, 1i64..=4),
            1..6,
        )
        .prop_map(move |raw| {
            let terms = raw.into_iter().map(|(mut e, c, q)| {
                // push the exponent vector onto the simplex of degree d
                let mut excess = e.iter().sum::<u32>() as i64 - d as i64;
                for x in e.iter_mut() {
                    if excess > 0 {
                        let cut = (*x as i64).min(excess);
                        *x -= cut as u32;
                        excess -= cut;
                    }
                }
                e[0] += (-excess).max(0) as u32;
                (Monomial::new(e), tjurina::algebra::rat_frac(c, q))
            });
            HomogeneousPoly::from_terms(n_vars, terms).unwrap().with_degree(d)
        })
    })
}

fn matrix_strategy() -> impl Strategy<Value = GradedMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -6i64..=6], r * c).prop_map(move |e| {
            GradedMatrix::from_dense(r, c, &e.into_iter().map(rat).collect::<Vec<_>>())
        })
    })
}

proptest! {
    #[test]
    fn monomial_count_matches_enumeration(n in 1usize..6, d in 0usize..8) {
        let listed = monomials_of_degree(n, d);
        prop_assert_eq!(listed.len(), count_monomials(n, d));
        prop_assert_eq!(listed.len(), binomial(n + d - 1, d));
        prop_assert!(listed.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn euler_identity(f in poly_strategy(3, 6)) {
        let sum = (0..3).fold(HomogeneousPoly::zero(3, f.degree()), |acc, j| {
            acc.add(&HomogeneousPoly::var(3, j).mul(&f.partial_derivative(j)))
        });
        prop_assert_eq!(sum, f.scale(&rat(i64::from(f.degree()))));
    }

    #[test]
    fn render_parse_round_trip(f in poly_strategy(4, 5)) {
        let back = parse_poly(&f.to_string(), Some(4)).unwrap();
        prop_assert!(back.terms().eq(f.terms()));
    }

    #[test]
    fn ring_laws(f in poly_strategy(3, 3), g in poly_strategy(3, 3)) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        if f.degree() == g.degree() {
            let h = f.add(&g);
            prop_assert_eq!(h.mul(&f), f.mul(&f).add(&g.mul(&f)));
        }
    }

    #[test]
    fn fast_and_exact_agree(m in matrix_strategy()) {
        let r = rank(&m, FieldMode::Exact);
        prop_assert_eq!(r, rank(&m, FieldMode::Fast));
        prop_assert!(rank_mod_prime(&m, 7) <= r);
        let k = nullspace(&m, FieldMode::Exact);
        prop_assert_eq!(&k, &nullspace(&m, FieldMode::Fast));
        prop_assert_eq!(r + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn syzygy_bases_are_relations(f in poly_strategy(3, 4), k in 0usize..4) {
        prop_assume!(f.degree() >= 2 && f.terms().next().is_some());
        let sys = JacobianSystem::new(f, FieldMode::Exact).unwrap();
        let basis = sys.ar_basis(k);
        prop_assert_eq!(basis.len(), sys.ar_dim(k));
        for rho in &basis {
            prop_assert!(rho.is_relation_of(sys.partials()));
        }
        prop_assert!(sys.kr_dim(k) <= sys.ar_dim(k));
    }
}
