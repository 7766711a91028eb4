use galilei::exact::{
    int, ratio, rf_arith, Polynomial, RationalFunction, RfOp, Scalar, TruncatedSeries, Var,
};
use galilei::genfun::weight_counts;
use galilei::quiver::{block_of, radical_filtration, window};
use galilei::report::{Report, Verdict};
use galilei::sl2rep::{clebsch_gordan, SimpleHC};
use galilei::symalg::{adjoint_action, Basis, Gen, SymElement};
use galilei::younglat::{partitions, path_matrix, Partition};
use num_traits::Zero;
use proptest::prelude::*;

fn poly(var: Var) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(move |c| Polynomial::from_ints(var, &c))
}

fn nonzero_poly(var: Var) -> impl Strategy<Value = Polynomial> {
    poly(var).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(Var::Q), nonzero_poly(Var::Q)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| ratio(n, d))
}

fn sym_element(k: u32) -> impl Strategy<Value = SymElement> {
    let mono = (
        prop::collection::vec((0..=k as usize, 1u32..=2), 1..3),
        -3i64..=3,
    );
    prop::collection::vec(mono, 1..4).prop_map(move |terms| {
        terms
            .iter()
            .fold(SymElement::zero(k, Basis::V), |acc, (f, c)| {
                acc.add(&SymElement::monomial(k, Basis::V, f, int(*c)))
            })
    })
}

fn simple_hc() -> impl Strategy<Value = SimpleHC> {
    prop_oneof![
        Just(SimpleHC::VPrime0),
        Just(SimpleHC::VPrime2),
        (1u32..=12).prop_map(SimpleHC::v)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfun_ops_commute_with_evaluation(a in ratfun(), b in ratfun(), x in point(), op in prop_oneof![
        Just(RfOp::Add), Just(RfOp::Sub), Just(RfOp::Mul), Just(RfOp::Div)
    ]) {
        let (Ok(ax), Ok(bx)) = (a.eval(&x), b.eval(&x)) else { return Ok(()) };
        let Ok(c) = rf_arith(&a, &b, op) else {
            prop_assert!(b.is_zero() && op == RfOp::Div);
            return Ok(());
        };
        let expected = match op {
            RfOp::Add => ax + bx,
            RfOp::Sub => ax - bx,
            RfOp::Mul => ax * bx,
            RfOp::Div => {
                if bx.is_zero() { return Ok(()) }
                ax / bx
            }
        };
        if let Ok(cx) = c.eval(&x) {
            prop_assert_eq!(cx, expected);
        }
    }

    #[test]
    fn canonical_form_ignores_common_factors(n in poly(Var::Q), d in nonzero_poly(Var::Q), g in nonzero_poly(Var::Q)) {
        let plain = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let padded = RationalFunction::new(&n * &g, &d * &g).unwrap();
        prop_assert_eq!(&plain, &padded);
        prop_assert_eq!(RationalFunction::new(plain.numerator().clone(), plain.denominator().clone()).unwrap(), plain);
    }

    #[test]
    fn series_product_matches_polynomial_product(a in poly(Var::Q), b in poly(Var::Q), n in 1usize..10) {
        let s = TruncatedSeries::from_poly(&a, n).mul(&TruncatedSeries::from_poly(&b, n));
        prop_assert_eq!(s, TruncatedSeries::from_poly(&(&a * &b), n));
    }

    #[test]
    fn interpolation_recovers_polynomial(p in poly(Var::X)) {
        let pts: Vec<_> = (0..=p.degree().unwrap_or(0) as i64).map(|i| (int(i), p.eval(&int(i)))).collect();
        prop_assert_eq!(Polynomial::interpolate(Var::X, &pts), p);
    }

    #[test]
    fn div_rem_reconstructs(a in poly(Var::X), b in nonzero_poly(Var::X)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        prop_assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn clebsch_gordan_preserves_dimension(m in 0u32..30, n in 0u32..30) {
        let cg = clebsch_gordan(m, n);
        let dim: u64 = cg.iter().map(|(s, mult)| s.dim() * mult).sum();
        prop_assert_eq!(dim, (m as u64 + 1) * (n as u64 + 1));
        prop_assert_eq!(cg.total(), m.min(n) as u64 + 1);
    }

    #[test]
    fn weight_spaces_are_symmetric_and_unimodal(k in 1u32..7, l in 0i64..8) {
        let here = weight_counts(k, l, 10);
        prop_assert_eq!(&here, &weight_counts(k, -l, 10));
        let above = weight_counts(k, l + 2, 10);
        prop_assert!(here.iter().zip(&above).all(|(a, b)| a >= b));
    }

    #[test]
    fn sl2_acts_by_derivations(k in 1u32..5, p in sym_element(4), q in sym_element(4)) {
        let restrict = |s: &SymElement| {
            s.terms().filter(|(m, _)| m.iter().skip(k as usize + 1).all(|&e| e == 0)).fold(
                SymElement::zero(k, Basis::V),
                |acc, (m, c)| {
                    let f: Vec<_> = m.iter().take(k as usize + 1).copied().enumerate().collect();
                    acc.add(&SymElement::monomial(k, Basis::V, &f, c.clone()))
                },
            )
        };
        let (p, q) = (restrict(&p), restrict(&q));
        for g in [Gen::E, Gen::F, Gen::H] {
            let lhs = adjoint_action(g, &p.mul(&q));
            let rhs = adjoint_action(g, &p).mul(&q).add(&p.mul(&adjoint_action(g, &q)));
            prop_assert_eq!(lhs, rhs);
        }
        let ef = adjoint_action(Gen::E, &adjoint_action(Gen::F, &p));
        let fe = adjoint_action(Gen::F, &adjoint_action(Gen::E, &p));
        prop_assert_eq!(ef.sub(&fe), adjoint_action(Gen::H, &p));
    }

    #[test]
    fn lex_order_refines_dominance(n in 1u32..12, i in 0usize..64, j in 0usize..64) {
        let ps = partitions(n, n);
        let (a, b) = (&ps[i % ps.len()], &ps[j % ps.len()]);
        if a.dominates(b) {
            prop_assert!(a >= b);
        }
    }

    #[test]
    fn path_sums_are_nonnegative_once_labels_are(n in 1u32..8, extra in 0i64..5) {
        // Every source has fewer than n parts, so all labels are >= 0 at x = n - 1.
        let x = int(n as i64 - 1 + extra);
        for row in &path_matrix(n).entries {
            for e in row {
                prop_assert!(e.eval(&x) >= Scalar::zero());
            }
        }
    }

    #[test]
    fn radical_layers_stay_in_block_and_extend(top in simple_hc(), depth in 0usize..4) {
        let short = radical_filtration(top, depth);
        let long = radical_filtration(top, depth + 1);
        prop_assert_eq!(&long.layers[..short.layers.len()], &short.layers[..]);
        prop_assert_eq!(short.layers[0].total(), 1);
        prop_assert_eq!(short.layers[0].count(&top), 1);
        for layer in &long.layers {
            for s in layer.support() {
                prop_assert_eq!(block_of(*s), block_of(top));
                prop_assert!(s.index() <= window(top, depth + 1));
            }
        }
    }

    #[test]
    fn reports_round_trip(claims in prop::collection::vec(("[a-z ]{1,12}", any::<bool>(), "[a-z0-9 ]{0,8}"), 0..5), ms in any::<u32>()) {
        let r = Report {
            command: "verify".into(),
            params: serde_json::json!({"quick": true}),
            results: serde_json::json!([1, "two"]),
            verdicts: claims.iter().map(|(c, p, d)| Verdict::new(c.clone(), *p, d.clone())).collect(),
            wall_time_ms: ms as u64,
        };
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn partition_counts_match_generating_function() {
    // Coefficients of 1/((1-q)(1-q^2)(1-q^3)(1-q^4)).
    let mut gf = [0u64; 21];
    gf[0] = 1;
    for d in 1..=4 {
        for i in d..gf.len() {
            gf[i] += gf[i - d];
        }
    }
    for (n, &c) in gf.iter().enumerate() {
        assert_eq!(partitions(n as u32, 4).len() as u64, c, "n = {n}");
    }
    assert!(partitions(3, 4).contains(&Partition::new(vec![2, 1])));
}
