use contscope::evaluator::{enumerate_readings, params, reading_tree, Model, Strategy as Reading};
use contscope::fincore::product;
use contscope::scopetrees::{derive_lfs, derive_plfs, qr_rule, surface, CType, Label, SyntaxTree};
use contscope::{make_gq, t_map, t_mult, t_unit, Determiner, FinMap, FinSet, Monad, Morphism, Obj, Pred, TValue};
use proptest::prelude::*;

fn monad() -> impl Strategy<Value = Monad> {
    prop::sample::select(Monad::all())
}

fn table(dom: usize, cod: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..cod, dom)
}

fn map(dom: &FinSet, cod: &FinSet, t: Vec<usize>) -> FinMap {
    FinMap::new(dom.clone(), cod.clone(), t).unwrap()
}

fn value(m: &Monad, x: &FinSet, pick: usize) -> TValue {
    let tx = Obj::t(m, &Obj::fin(x.clone()));
    let n = tx.size().unwrap();
    tx.element(pick % n).unwrap().as_comp().unwrap().clone()
}

fn bits(n: usize) -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), n)
}

fn det() -> impl Strategy<Value = Determiner> {
    prop::sample::select(Determiner::upto(4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(
        (a, b, c, d) in (1..4usize, 1..4usize, 1..4usize, 1..4usize),
        seed in any::<u64>(),
    ) {
        let (w, x, y, z) = (FinSet::new("W", a), FinSet::new("X", b), FinSet::new("Y", c), FinSet::new("Z", d));
        let t = |n: usize, m: usize, k: u64| (0..n).map(|i| ((k >> (3 * i)) as usize) % m).collect::<Vec<_>>();
        let f = map(&w, &x, t(a, b, seed));
        let g = map(&x, &y, t(b, c, seed >> 12));
        let h = map(&y, &z, t(c, d, seed >> 24));
        let left = h.after(&g).unwrap().after(&f).unwrap();
        let right = h.after(&g.after(&f).unwrap()).unwrap();
        prop_assert_eq!(left.table(), right.table());
        for i in w.elements() {
            prop_assert_eq!(g.after(&f).unwrap().apply(i), g.apply(f.apply(i)));
        }
    }

    #[test]
    fn encode_decode_round_trip(sizes in prop::collection::vec(1..=4usize, 1..=4)) {
        let factors: Vec<FinSet> = sizes.iter().enumerate().map(|(i, &n)| FinSet::new(format!("X{i}"), n)).collect();
        let p = product(&factors).unwrap();
        prop_assert_eq!(p.carrier().size(), sizes.iter().product::<usize>());
        for code in p.carrier().elements() {
            let t = p.decode(code).unwrap();
            prop_assert_eq!(p.encode(&t).unwrap(), code);
        }
    }

    #[test]
    fn functor_laws(m in monad(), (a, b, c) in (1..=2usize, 1..=2usize, 1..=2usize), pick in any::<usize>(),
                    tf in table(2, 2), tg in table(2, 2)) {
        let (x, y, z) = (FinSet::new("X", a), FinSet::new("Y", b), FinSet::new("Z", c));
        let f = Morphism::from_finmap(&map(&x, &y, tf[..a].iter().map(|v| v % b).collect()));
        let g = Morphism::from_finmap(&map(&y, &z, tg[..b].iter().map(|v| v % c).collect()));
        let t = value(&m, &x, pick);
        let id = Morphism::identity(&Obj::fin(x.clone()));
        prop_assert!(t_map(&m, &id, &t).unwrap().equiv(&t).unwrap());
        let fused = t_map(&m, &f.then(&g).unwrap(), &t).unwrap();
        let stepwise = t_map(&m, &g, &t_map(&m, &f, &t).unwrap()).unwrap();
        prop_assert!(fused.equiv(&stepwise).unwrap());
    }

    #[test]
    fn unit_is_natural(m in monad(), (a, b) in (1..=3usize, 1..=3usize), tf in table(3, 3), i in 0..3usize) {
        let (x, y) = (FinSet::new("X", a), FinSet::new("Y", b));
        let f = Morphism::from_finmap(&map(&x, &y, tf[..a].iter().map(|v| v % b).collect()));
        let e = Obj::fin(x.clone()).element(i % a).unwrap();
        let lhs = t_map(&m, &f, &t_unit(&m, f.dom(), e.clone()).unwrap()).unwrap();
        let rhs = t_unit(&m, f.cod(), f.apply(&e)).unwrap();
        prop_assert!(lhs.equiv(&rhs).unwrap());
    }

    #[test]
    fn multiplication_is_natural(m in monad(), (a, b) in (1..=2usize, 1..=2usize), tf in table(2, 2), pick in any::<usize>()) {
        let a = if m == Monad::Continuation { 1 } else { a };
        let (x, y) = (FinSet::new("X", a), FinSet::new("Y", b));
        let f = Morphism::from_finmap(&map(&x, &y, tf[..a].iter().map(|v| v % b).collect()));
        let ttx = Obj::t(&m, &Obj::t(&m, &Obj::fin(x.clone())));
        let tt = ttx.element(pick % ttx.size().unwrap()).unwrap().as_comp().unwrap().clone();
        let tf_map = contscope::monads::map_morphism(&m, &f);
        let lhs = t_mult(&m, &t_map(&m, &tf_map, &tt).unwrap()).unwrap();
        let rhs = t_map(&m, &f, &t_mult(&m, &tt).unwrap()).unwrap();
        prop_assert!(lhs.equiv(&rhs).unwrap());
    }

    #[test]
    fn quantifiers_are_conservative(d in det(), n in 1..=4usize, a in bits(4), h in bits(4)) {
        let x = FinSet::new("X", n);
        let a = Pred::new(x.clone(), a[..n].to_vec()).unwrap();
        let h = Pred::new(x.clone(), h[..n].to_vec()).unwrap();
        let q = make_gq(d, &x, &a).unwrap();
        prop_assert_eq!(q.eval(&h), q.eval(&h.and(&a)));
        prop_assert_eq!(q.value().eval_pred(&h).unwrap(), q.eval(&h));
    }

    #[test]
    fn every_and_some_are_dual(n in 1..=3usize, a in bits(3), h in bits(3)) {
        let x = FinSet::new("X", n);
        let a = Pred::new(x.clone(), a[..n].to_vec()).unwrap();
        let h = Pred::new(x.clone(), h[..n].to_vec()).unwrap();
        let every = make_gq(Determiner::Every, &x, &a).unwrap();
        let some = make_gq(Determiner::Some, &x, &a).unwrap();
        prop_assert_eq!(every.eval(&h), !some.eval(&h.not()));
    }

    #[test]
    fn same_quantifier_readings_coincide(every in any::<bool>(), n in 1..=3usize, a in bits(3), v in bits(9)) {
        let x = FinSet::new("X", n);
        let a = Pred::new(x.clone(), a[..n].to_vec()).unwrap();
        let d = if every { Determiner::Every } else { Determiner::Some };
        let q = make_gq(d, &x, &a).unwrap();
        let verb = Pred::new(FinSet::new("XX", n * n), v[..n * n].to_vec()).unwrap();
        let rows = enumerate_readings(&Model::from_gqs(&[q.clone(), q], verb).unwrap(), &Reading::ALL).unwrap();
        prop_assert!(rows.iter().all(|r| r.truth == rows[0].truth));
    }
}

#[test]
fn derivations_give_one_tree_per_permutation() {
    for (n, fact) in [(1, 1), (2, 2), (3, 6)] {
        let s = surface(n).unwrap();
        for derived in [derive_lfs(&s).unwrap(), derive_plfs(&s).unwrap()] {
            assert_eq!(derived.len(), fact);
            let mut sigmas: Vec<_> = derived.iter().map(|(sigma, _)| sigma.clone()).collect();
            sigmas.sort();
            sigmas.dedup();
            assert_eq!(sigmas.len(), fact);
        }
    }
}

fn in_situ(t: &SyntaxTree) -> usize {
    if t.label == Label::S {
        return t.qps().len();
    }
    t.children.iter().map(in_situ).sum()
}

#[test]
fn qr_removes_one_qp_at_a_time() {
    for n in 1..=3 {
        for sigma in contscope::scopetrees::permutations(n) {
            let mut t = surface(n).unwrap();
            assert_eq!(in_situ(&t), n);
            for (k, &qp) in sigma.iter().rev().enumerate() {
                t = qr_rule(&t, qp).unwrap();
                assert_eq!(in_situ(&t), n - k - 1);
            }
            for qp in 1..=n {
                assert!(qr_rule(&t, qp).is_err());
            }
        }
    }
}

#[test]
fn relabelled_trees_have_the_strategy_signature() {
    for n in 1..=3 {
        let vars: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
        let mut want = format!("C(X1)×P({})", vars.join("×"));
        for v in &vars[1..] {
            want.push_str(&format!("×C({v})"));
        }
        for s in Reading::ALL {
            for p in params(s, n) {
                let t = reading_tree(s, &p, n).unwrap();
                assert_eq!(t.type_check(n).unwrap(), CType::Bool, "{s} {p}");
                assert_eq!(t.signature(n).unwrap(), want, "{s} {p}");
            }
        }
    }
}
