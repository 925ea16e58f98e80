//! Explicit representation families.

mod binomial;
pub mod sample;
mod special;
mod tuba_wenzl;

pub use binomial::{binomial_matrices, binomial_rep, BinomialParams};
pub use sample::Family;
pub use special::{abeq_family, counterexample6, lkb3, lkb3_is_generic, perm3, v1_family, BlockVariant, Sign};
pub use tuba_wenzl::{tuba_wenzl, tw2, tw3, tw4, tw5, Tw2Family, TwParams};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{CycNum, Field};
    use crate::linalg::{algebra_dimension, CMatrix};
    use crate::rep::GroupKind;

    fn q(n: i64) -> CycNum {
        CycNum::from_integer(&Field::new(1), n)
    }

    fn c(s: &str) -> CycNum {
        CycNum::parse(s).unwrap()
    }

    #[test]
    fn tw2_irreducible_example() {
        let r = tw2(Tw2Family::Irreducible, &q(1), &q(-1)).unwrap();
        let f = r.field().clone();
        assert_eq!(r.a_mat(), &CMatrix::from_ints(&f, &[&[1, 1], &[0, -1]]));
        assert_eq!(r.b_mat(), &CMatrix::from_ints(&f, &[&[-1, 0], &[1, 1]]));
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        let ab = r.ab().unwrap();
        assert_eq!(&ab.trace() * &ab.trace(), ab.det());
    }

    #[test]
    fn tw2_reducible_example() {
        let r = tw2(Tw2Family::Reducible, &-c("w"), &q(1)).unwrap();
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        assert!(r.a_mat().is_upper_triangular() && r.b_mat().is_upper_triangular());
        assert!(!r.is_irreducible());
    }

    #[test]
    fn tw2_constraints() {
        let w = c("w");
        assert!(matches!(tw2(Tw2Family::Irreducible, &-&w, &q(1)), Err(crate::Error::ConstraintViolated(_))));
        assert!(matches!(tw2(Tw2Family::Reducible, &q(1), &q(2)), Err(crate::Error::ConstraintViolated(_))));
        assert!(matches!(tw2(Tw2Family::Irreducible, &q(0), &q(2)), Err(crate::Error::ZeroEigenvalue)));
    }

    #[test]
    fn tw3_examples() {
        let r = tw3(&q(1), &q(2), &q(3)).unwrap();
        let (a, b) = (r.a_mat(), r.b_mat());
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        let ab = a * b;
        assert_eq!((&b.pow(4).unwrap() * &ab).trace(), q(360));
        assert!(ab.trace().is_zero());
        assert!((&(b * b) * &ab).trace().is_zero());
        assert!((&ab * &ab).trace().is_zero());
        assert_eq!(ab.pow(3).unwrap().as_scalar(), Some(q(36)));

        let r = tw3(&q(1), &q(1), &q(1)).unwrap();
        assert!(r.ab().unwrap().pow(3).unwrap().is_identity());
        let r = tw3(&q(1), &q(-1), &q(2)).unwrap();
        assert!((&r.b_mat().pow(4).unwrap() * &r.ab().unwrap()).trace().is_zero());
        assert!(matches!(tw3(&q(1), &q(0), &q(2)), Err(crate::Error::ZeroEigenvalue)));
    }

    #[test]
    fn tw3_generic_is_irreducible() {
        let r = tw3(&q(1), &q(2), &q(4)).unwrap();
        assert_eq!(algebra_dimension(&[r.a_mat(), r.b_mat()]), 9);
        // λ₂² + λ₁λ₃ = 0 gives an invariant subspace
        let r = tw3(&q(1), &q(2), &q(-4)).unwrap();
        assert!(algebra_dimension(&[r.a_mat(), r.b_mat()]) < 9);
    }

    #[test]
    fn tw4_tw5_examples() {
        let one = q(1);
        let r = tw4(&[one.clone(), one.clone(), one.clone(), one.clone()], &one).unwrap();
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        let ab = r.ab().unwrap();
        assert_eq!(ab.trace(), q(-1));
        assert_eq!(ab.pow(3).unwrap().as_scalar(), Some(q(-1)));
        assert!(matches!(tw4(&[one.clone(), one.clone(), one.clone(), q(2)], &one), Err(crate::Error::ConstraintViolated(_))));

        let l = [one.clone(), one.clone(), one.clone(), one.clone(), one.clone()];
        let r = tw5(&l, &one).unwrap();
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        assert_eq!(r.ab().unwrap().trace(), q(-1));
        assert_eq!(r.b_mat()[(1, 0)], -&r.a_mat()[(3, 4)]);
    }

    #[test]
    fn tw5_skew_symmetry() {
        let l = [q(2), q(-1), q(3), q(1), q(1)];
        let g = q(-6);
        let l5 = &g.pow(5).unwrap() / &q(-6);
        let r = tw5(&[l[0].clone(), l[1].clone(), l[2].clone(), l[3].clone(), l5], &g).unwrap();
        let (a, b) = (r.a_mat(), r.b_mat());
        for i in 0..5 {
            for j in 0..5 {
                let x = &a[(4 - i, 4 - j)];
                assert_eq!(b[(i, j)], if (i + j) % 2 == 0 { x.clone() } else { -x });
            }
        }
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        let k = g.pow(-2).unwrap();
        let s = r.ab().unwrap().scale(&k);
        assert_eq!(s.trace(), q(-1));
        assert!(s.pow(3).unwrap().is_identity());
    }

    #[test]
    fn binomial_examples() {
        let p = BinomialParams::new(vec![q(1), q(1), q(1)], q(1)).unwrap();
        let r = binomial_rep(&p).unwrap();
        assert!(r.verify(GroupKind::LB3).unwrap().all_hold());
        let t = r.s().unwrap().trace().is_rational_integer().unwrap();
        assert!((-1..=1).contains(&i64::try_from(t).unwrap()));

        let z = c("z3");
        let v = vec![q(2), q(3), z, c("6*z3^-1"), q(2), q(3)];
        let p = BinomialParams::new(v, q(6)).unwrap();
        assert_eq!(p.degree(), 5);
        let r = binomial_matrices(&p).unwrap();
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        let cube = r.ab().unwrap().pow(3).unwrap().as_scalar().unwrap();
        assert_eq!(cube, -q(216).promote(3).unwrap());

        let p = BinomialParams::new(vec![q(2), q(3)], q(6)).unwrap();
        let r = binomial_rep(&p).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.verify(GroupKind::LB3).unwrap().all_hold());

        assert!(matches!(BinomialParams::new(vec![q(2), q(3)], q(5)), Err(crate::Error::ConstraintViolated(_))));
    }

    #[test]
    fn counterexample_facts() {
        let r = counterexample6();
        assert_eq!(r.conductor(), 3);
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        assert_eq!(algebra_dimension(&[r.a_mat(), r.b_mat()]), 36);
        assert!(r.a_mat().det().pow(6).unwrap().is_one());
        let ab = r.ab().unwrap();
        assert!(ab.pow(3).unwrap().as_scalar().is_some());
        let b2ab = &(r.b_mat() * r.b_mat()) * &ab;
        assert!(b2ab.pow(3).unwrap().as_scalar().is_some());
    }

    #[test]
    fn v1_examples() {
        for (l, x) in [(1, 0), (2, 5), (1, 1)] {
            let r = v1_family(&q(l), &q(x)).unwrap();
            assert!(r.verify(GroupKind::LB3).unwrap().all_hold());
            assert!(r.s().unwrap().is_identity());
            assert_eq!(r.a_mat(), r.b_mat());
        }
        let r = v1_family(&q(1), &q(1)).unwrap();
        assert_eq!(algebra_dimension(&r.generators()), 4);
        assert!(matches!(v1_family(&q(0), &q(1)), Err(crate::Error::ZeroEigenvalue)));
    }

    #[test]
    fn abeq_examples() {
        let one = q(1);
        let r = abeq_family(1, &one, &one, BlockVariant::Plain, BlockVariant::Capped, Sign::Plus).unwrap();
        let f = r.field().clone();
        let w = CycNum::omega(&f).unwrap();
        assert_eq!(r.a_mat(), &CMatrix::diag(&f, &[CycNum::one(&f), &w * &w]));
        assert!(r.verify(GroupKind::LB3).unwrap().all_hold());

        for n in 1..=4 {
            let mu = c("4*z12");
            let root = c("2*z24");
            let (a1, a2) = if n % 2 == 1 {
                (BlockVariant::Plain, BlockVariant::Capped)
            } else {
                (BlockVariant::Capped, BlockVariant::Plain)
            };
            for sign in [Sign::Plus, Sign::Minus] {
                let r = abeq_family(n, &mu, &root, a1, a2, sign).unwrap();
                assert!(r.verify(GroupKind::LB3).unwrap().all_hold(), "n = {n}, {sign:?}");
                let s = r.s().unwrap();
                let [p1, pw, pw2] = s.eigenprojectors_order3().unwrap();
                assert!(p1.is_zero());
                assert_eq!((pw.rank(), pw2.rank()), (n, n));
                assert!(s.commutes_with(r.a_mat()));
            }
        }
    }

    #[test]
    fn abeq_rejections() {
        let one = q(1);
        assert!(matches!(
            abeq_family(1, &one, &one, BlockVariant::Capped, BlockVariant::Plain, Sign::Plus),
            Err(crate::Error::InvalidBlockCombination(_))
        ));
        assert!(matches!(
            abeq_family(2, &one, &one, BlockVariant::Plain, BlockVariant::Plain, Sign::Plus),
            Err(crate::Error::InvalidBlockCombination(_))
        ));
        assert!(matches!(
            abeq_family(1, &q(2), &one, BlockVariant::Plain, BlockVariant::Capped, Sign::Plus),
            Err(crate::Error::NotASquareRoot)
        ));
    }

    #[test]
    fn lkb_examples() {
        let r = lkb3(&q(2), &q(3)).unwrap();
        assert!(r.verify(GroupKind::B3).unwrap().all_hold());
        let ab = r.ab().unwrap();
        assert!(ab.trace().is_zero());
        assert!((&ab * &ab).trace().is_zero());
        assert!((&(r.b_mat() * r.b_mat()) * &ab).trace().is_zero());
        assert_eq!(r.a_mat().min_poly().degree(), Some(3));
        assert_eq!(r.b_mat().min_poly().degree(), Some(3));
        assert!(lkb3_is_generic(&q(2), &q(3)));
        assert!(!lkb3_is_generic(&q(1), &q(-1)));
        assert!(!lkb3_is_generic(&c("1/2"), &q(2)));
        assert!(!lkb3_is_generic(&q(1), &q(5)));
        assert!(matches!(lkb3(&q(0), &q(1)), Err(crate::Error::ZeroParameter("q"))));
    }

    #[test]
    fn perm3_examples() {
        let r = perm3(&q(2)).unwrap();
        assert!(r.verify(GroupKind::SLB3).unwrap().all_hold());
        let ab = r.ab().unwrap();
        assert_eq!(ab.pow(3).unwrap().as_scalar(), Some(q(4)));
        assert!(!r.s().unwrap().is_proportional_to(&ab));
        assert!(matches!(perm3(&q(1)), Err(crate::Error::ConstraintViolated(_))));
        assert!(matches!(perm3(&q(0)), Err(crate::Error::ZeroParameter("t"))));
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("tw6".parse::<Family>().is_err());
    }
}
