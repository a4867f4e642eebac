use dualmock::algcore::{
    annihilator, apply_basis_change, check_identities, fingerprint, is_two_step_nilpotent, lower_central_series,
    Algebra,
};
use dualmock::cohom::{coboundary_of, coboundary_space, cocycle_space, h2_basis, is_cocycle, SkewForm};
use dualmock::degen::{build_graph, limit_algebra, parametric_constants, DegenerationClaim, ParametricBasis};
use dualmock::exact::{MatrixQ, Rational, TPoly, TRatFunc};
use dualmock::ext::shapes::{d6_06_padded, nablas_d7_06, nablas_d8_06};
use dualmock::ext::{act, central_extension, check_extension_conditions, same_h2_span, AutCandidate, CocycleTuple};
use dualmock::shell::catalog::{self, Catalog};
use dualmock::shell::graphio::{emit_json, parse_graph_json};
use dualmock::shell::parse::{
    format_algebra, format_cocycle, format_parametric_basis, parse_algebra, parse_cocycle, parse_parametric_basis,
};
use dualmock::shell::verify::{naive_cocycle_dim, random_aut7, random_aut8, random_rational};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn small_ids() -> Vec<String> {
    (5..=7).flat_map(catalog::ids_of_dim).collect()
}

fn any_id() -> impl Strategy<Value = String> {
    prop::sample::select((5..=9).flat_map(catalog::ids_of_dim).collect::<Vec<_>>())
}

fn small_id() -> impl Strategy<Value = String> {
    prop::sample::select(small_ids())
}

fn get(id: &str) -> Algebra {
    catalog::get(id).unwrap().algebra
}

fn invertible(n: usize, seed: u64) -> MatrixQ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let data = (0..n * n).map(|_| random_rational(&mut rng)).collect();
        let m = MatrixQ::from_vec(n, n, data);
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn laurent() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((-2i32..=3, rat()), 0..4).prop_map(TPoly::from_terms)
}

fn skew_table(n: usize) -> impl Strategy<Value = Algebra> {
    prop::collection::vec(prop::collection::vec(rat(), n), n * (n - 1) / 2).prop_map(move |vs| {
        let mut prods = Vec::new();
        let mut it = vs.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                prods.push((i, j, it.next().unwrap()));
            }
        }
        Algebra::from_products(n, &prods).unwrap()
    })
}

fn skew_form(n: usize) -> impl Strategy<Value = SkewForm> {
    prop::collection::vec(rat(), n * (n - 1) / 2).prop_map(move |c| SkewForm::from_coords(n, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn matrix_inverse_is_two_sided(seed in any::<u64>(), n in 1usize..5) {
        let m = invertible(n, seed);
        let inv = m.inverse().unwrap();
        prop_assert_eq!(m.mul(&inv).unwrap(), MatrixQ::identity(n));
        prop_assert_eq!(inv.mul(&m).unwrap(), MatrixQ::identity(n));
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent(), x in rat()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if x != Rational::from_integer(0.into()) {
            prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
        }
    }

    #[test]
    fn rational_function_evaluation(a in laurent(), b in laurent(), x in rat()) {
        prop_assume!(!b.is_zero());
        prop_assume!(x != Rational::from_integer(0.into()));
        let f = TRatFunc::new(a.clone(), b.clone()).unwrap();
        let bx = b.eval(&x);
        if bx != Rational::from_integer(0.into()) {
            prop_assert_eq!(f.eval(&x), Some(a.eval(&x) / bx));
        }
    }

    #[test]
    fn basis_change_composes(id in small_id(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = get(&id);
        let (g, h) = (invertible(a.dim(), s1), invertible(a.dim(), s2));
        let two = apply_basis_change(&apply_basis_change(&a, &g).unwrap(), &h).unwrap();
        prop_assert_eq!(two, apply_basis_change(&a, &h.mul(&g).unwrap()).unwrap());
    }

    #[test]
    fn basis_change_keeps_invariants(id in small_id(), seed in any::<u64>()) {
        let a = get(&id);
        let b = apply_basis_change(&a, &invertible(a.dim(), seed)).unwrap();
        prop_assert_eq!(fingerprint(&a), fingerprint(&b));
        prop_assert_eq!(check_identities(&a).dual_mock_lie, check_identities(&b).dual_mock_lie);
        prop_assert_eq!(h2_basis(&a).h2_dim(), h2_basis(&b).h2_dim());
    }

    #[test]
    fn cohomology_counts(id in any_id()) {
        let a = get(&id);
        let b = h2_basis(&a);
        prop_assert_eq!(b.b2.len(), fingerprint(&a).lcs_dim(2));
        prop_assert_eq!(b.h2_dim(), b.z2.len() - b.b2.len());
        prop_assert!(coboundary_space(&a).iter().all(|f| is_cocycle(&a, f).unwrap()));
    }

    #[test]
    fn naive_solver_agrees(id in small_id()) {
        let a = get(&id);
        prop_assert_eq!(naive_cocycle_dim(&a), cocycle_space(&a).len());
    }

    #[test]
    fn coboundaries_are_cocycles(id in any_id(), f in prop::collection::vec(rat(), 9)) {
        let a = get(&id);
        let g = coboundary_of(&a, &f[..a.dim()]).unwrap();
        prop_assert!(is_cocycle(&a, &g).unwrap());
    }

    #[test]
    fn action_is_functorial(seed in any::<u64>(), al in prop::collection::vec(rat(), 4)) {
        let a = d6_06_padded(7);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (phi, psi) = (random_aut7(&mut rng), random_aut7(&mut rng));
        let ns = nablas_d7_06();
        let f = ns.iter().zip(&al).fold(SkewForm::zero(7), |acc, (n, c)| acc.add(&n.scale(c)));
        let t = CocycleTuple::single(f);
        let both = act(&a, &AutCandidate::from(phi.mul(&psi).unwrap()), &t).unwrap();
        let stepwise = act(&a, &psi.into(), &act(&a, &phi.into(), &t).unwrap()).unwrap();
        prop_assert_eq!(both, stepwise);
    }

    #[test]
    fn action_preserves_cocycles_and_spans(seed in any::<u64>(), al in prop::collection::vec(rat(), 8)) {
        let a = d6_06_padded(8);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = AutCandidate::from(random_aut8(&mut rng));
        let ns = nablas_d8_06();
        let f = ns.iter().zip(&al).fold(SkewForm::zero(8), |acc, (n, c)| acc.add(&n.scale(c)));
        let shift = coboundary_of(&a, &al).unwrap();
        let t1 = CocycleTuple::single(f.clone());
        let t2 = CocycleTuple::single(f.add(&shift));
        let (u1, u2) = (act(&a, &phi, &t1).unwrap(), act(&a, &phi, &t2).unwrap());
        prop_assert!(is_cocycle(&a, &u1.components[0]).unwrap());
        prop_assert!(same_h2_span(&a, &u1, &u2).unwrap());
    }

    #[test]
    fn annihilator_formula_and_nilpotency(id in small_id(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..3)) {
        let a = get(&id);
        let reps = h2_basis(&a).h2_reps;
        prop_assume!(!reps.is_empty());
        let t = CocycleTuple::new(picks.iter().map(|i| reps[i.index(reps.len())].clone()).collect()).unwrap();
        let ext = central_extension(&a, &t).unwrap();
        let rep = check_extension_conditions(&a, &t).unwrap();
        prop_assert_eq!(annihilator(&ext).dim(), rep.radical_ann_dim + t.len());
        prop_assert!(lower_central_series(&ext).last().unwrap().is_zero());
        if !rep.classes_independent_in_h2 {
            // Some annihilator vector lies outside the square: a split summand.
            let sq = &lower_central_series(&ext)[1];
            prop_assert!(!sq.contains(&annihilator(&ext)).unwrap());
        }
    }

    #[test]
    fn evaluation_matches_transport(id in small_id(), seed in any::<u64>()) {
        let a = get(&id);
        let n = a.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = invertible(n, seed);
        let exps: Vec<i32> = (0..n).map(|_| rand::Rng::gen_range(&mut rng, 0..3)).collect();
        let rows: Vec<Vec<TPoly>> = (0..n)
            .map(|i| (0..n).map(|j| TPoly::monomial(m.get(i, j).clone(), exps[i])).collect())
            .collect();
        let b = ParametricBasis::from_poly_rows(rows).unwrap();
        let pc = parametric_constants(&a, &b).unwrap();
        for t0 in [1i64, 2, 3] {
            let t0 = Rational::from_integer(t0.into());
            let g = b.eval(&t0).unwrap().transpose().inverse().unwrap();
            prop_assert_eq!(pc.eval(&t0).unwrap(), apply_basis_change(&a, &g).unwrap());
        }
        if let Ok(lim) = limit_algebra(&a, &b) {
            prop_assert!(check_identities(&lim).dual_mock_lie);
        }
    }

    #[test]
    fn algebra_text_round_trip(a in (2usize..5).prop_flat_map(skew_table)) {
        prop_assert_eq!(parse_algebra(&format_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn cocycle_text_round_trip(f in (2usize..12).prop_flat_map(skew_form)) {
        let n = f.dim();
        prop_assert_eq!(parse_cocycle(&format_cocycle(&f), n).unwrap(), f);
    }

    #[test]
    fn basis_text_round_trip(seed in any::<u64>(), n in 1usize..5, shift in -2i32..3) {
        let m = invertible(n, seed);
        let rows: Vec<Vec<TPoly>> = (0..n)
            .map(|i| (0..n).map(|j| TPoly::monomial(m.get(i, j).clone(), shift + i as i32).add(&TPoly::monomial(m.get(j, i).clone(), 4))).collect())
            .collect();
        if let Ok(b) = ParametricBasis::from_poly_rows(rows) {
            prop_assert_eq!(parse_parametric_basis(&format_parametric_basis(&b), n).unwrap(), b);
        }
    }
}

#[test]
fn graph_json_round_trip_and_closure() {
    let to_zero = |n: usize| {
        ParametricBasis::from_poly_rows(
            (0..n).map(|i| (0..n).map(|j| if i == j { TPoly::monomial(Rational::from_integer(1.into()), 1) } else { TPoly::zero() }).collect()).collect(),
        )
        .unwrap()
    };
    let claims = vec![
        DegenerationClaim::witnessed("D7_01", "C7", to_zero(7)),
        DegenerationClaim::witnessed("D7_14", "D7_01", dualmock::shell::witnesses::witness("D7_01", "C7").unwrap().unwrap()),
    ];
    // The second claim reuses a basis for the wrong pair; it must be rejected.
    assert!(build_graph(&Catalog, &[], &claims).is_err());
    let g = dualmock::shell::cli::graph(8).unwrap();
    let mut h = parse_graph_json(&emit_json(&g)).unwrap();
    assert_eq!(h, g);
    h.close();
    assert_eq!(h, g);
    assert!(is_two_step_nilpotent(&get("D7_07")));
}
