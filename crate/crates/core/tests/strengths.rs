use contscope::monads::laws::LawBudget;
use contscope::strengths::{check_pileup_assoc, check_pileup_lemma, check_strength_axioms, find_noncommutativity};
use contscope::{FinSet, Monad};

fn ranges() -> Vec<(Monad, usize)> {
    vec![
        (Monad::Identity, 3),
        (Monad::Maybe, 3),
        (Monad::exception(2), 3),
        (Monad::Powerset, 3),
        (Monad::list(3), 2),
        (Monad::Continuation, 2),
    ]
}

fn sets(max: usize) -> Vec<FinSet> {
    (1..=max).map(|n| FinSet::new(format!("X{n}"), n)).collect()
}

#[test]
fn strength_axioms_on_all_ranges() {
    let budget = LawBudget::default();
    for (m, max) in ranges() {
        for x in sets(max) {
            for y in sets(max) {
                let z = FinSet::new("Z", 1 + (x.size() + y.size()) % max);
                let r = check_strength_axioms(&m, &x, &y, &z, &budget).unwrap();
                assert!(r.passed(), "{r}");
            }
        }
    }
}

#[test]
fn pileup_lemma_on_all_ranges() {
    let budget = LawBudget::default();
    for (m, max) in ranges() {
        for x in sets(max) {
            for y in sets(max) {
                let r = check_pileup_lemma(&m, &x, &y, &budget).unwrap();
                assert!(r.passed(), "{r}");
            }
        }
    }
}

#[test]
fn pileup_assoc_on_all_ranges() {
    let budget = LawBudget::default();
    for (m, max) in ranges() {
        let x = FinSet::new("X", max);
        let y = FinSet::new("Y", max.min(2));
        let z = FinSet::new("Z", max);
        let r = check_pileup_assoc(&m, &x, &y, &z, &budget).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn commutativity_classification() {
    let budget = LawBudget::default();
    for (m, max) in ranges() {
        let x = FinSet::new("X", max);
        let w = find_noncommutativity(&m, &x, &x, &budget).unwrap();
        let expect_commutative = matches!(m, Monad::Identity | Monad::Maybe | Monad::Powerset);
        assert_eq!(w.is_commutative(), expect_commutative, "{w}");
        assert!(w.reverify().unwrap(), "{w}");
    }
}
