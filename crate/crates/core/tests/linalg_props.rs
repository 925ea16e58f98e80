use loopbraid::linalg::algebra_dimension;
use loopbraid::{CMatrix, CycNum, Field};
use proptest::prelude::*;

fn entry(n: u32) -> impl Strategy<Value = CycNum> {
    prop_oneof![
        1 => Just(CycNum::zero(&Field::new(n))),
        3 => (-4i64..=4, 1i64..=3, 0i64..n as i64).prop_map(move |(p, q, k)| {
            let f = Field::new(n);
            &CycNum::from_ratio(&f, p, q) * &CycNum::zeta_power(&f, k)
        }),
    ]
}

fn matrix(n: u32, d: usize) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec(entry(n), d * d).prop_map(move |v| {
        let f = Field::new(n);
        CMatrix::from_fn(&f, d, d, |i, j| v[i * d + j].clone())
    })
}

fn pair() -> impl Strategy<Value = (CMatrix, CMatrix)> {
    (prop::sample::select(vec![3u32, 4, 12]), 1usize..=6).prop_flat_map(|(n, d)| (matrix(n, d), matrix(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn cayley_hamilton((x, _) in pair()) {
        prop_assert!(x.char_poly().eval_matrix(&x).is_zero());
        let m = x.min_poly();
        prop_assert!(m.eval_matrix(&x).is_zero());
        prop_assert!(m.divides(&x.char_poly()));
    }

    #[test]
    fn det_and_trace((x, y) in pair()) {
        prop_assert_eq!((&x * &y).det(), &x.det() * &y.det());
        prop_assert_eq!((&x * &y).trace(), (&y * &x).trace());
        prop_assert_eq!((&x + &y).trace(), &x.trace() + &y.trace());
        let d = x.dim();
        let cp = x.char_poly();
        prop_assert_eq!(cp.coeff(d - 1), -x.trace());
    }

    #[test]
    fn inverse_and_kernel((x, _) in pair()) {
        if x.is_invertible() {
            let inv = x.inverse().unwrap();
            prop_assert!((&x * &inv).is_identity());
            prop_assert!(x.kernel().is_empty());
        } else {
            prop_assert!(x.det().is_zero());
            let ker = x.kernel();
            prop_assert_eq!(ker.len(), x.dim() - x.rank());
            for v in &ker {
                let col = CMatrix::column(x.field(), v);
                prop_assert!((&x * &col).is_zero());
            }
        }
    }

    #[test]
    fn algebra_dimension_bounds((x, y) in pair()) {
        let d = x.dim();
        let one = algebra_dimension(&[&x]);
        let two = algebra_dimension(&[&x, &y]);
        prop_assert!(one <= two && two <= d * d);
        prop_assert_eq!(one, x.min_poly().degree().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// Conjugates of diagonal matrices with cube-root-of-unity entries.
    #[test]
    fn eigenprojectors_of_order_three(
        (p, exps) in (1usize..=5).prop_flat_map(|d| (matrix(3, d), prop::collection::vec(0i64..3, d)))
    ) {
        prop_assume!(p.is_invertible());
        let f = p.field().clone();
        let diag: Vec<CycNum> = exps.iter().map(|&e| CycNum::zeta_power(&f, e)).collect();
        let s = &(&p * &CMatrix::diag(&f, &diag)) * &p.inverse().unwrap();
        prop_assert!(s.pow(3).unwrap().is_identity());
        let proj = s.eigenprojectors_order3().unwrap();
        let sum = &(&proj[0] + &proj[1]) + &proj[2];
        prop_assert!(sum.is_identity());
        for (i, a) in proj.iter().enumerate() {
            prop_assert_eq!(&(a * a), a);
            prop_assert_eq!(a.trace(), CycNum::from_integer(&f, exps.iter().filter(|&&e| e == i as i64).count() as i64));
            for (j, b) in proj.iter().enumerate() {
                if i != j {
                    prop_assert!((a * b).is_zero());
                }
            }
        }
    }
}

#[test]
fn skew_patterns() {
    let f = Field::new(1);
    let lower = CMatrix::from_ints(&f, &[&[0, 0, 1], &[0, 2, 3], &[4, 5, 6]]);
    assert!(lower.is_skew_lower());
    assert!(!lower.is_skew_upper());
    assert!(lower.transpose().is_skew_lower());
    let upper = CMatrix::from_ints(&f, &[&[1, 2, 3], &[4, 5, 0], &[6, 0, 0]]);
    assert!(upper.is_skew_upper());
}
