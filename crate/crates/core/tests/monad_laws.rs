use contscope::monads::laws::{check_monad_laws, LawBudget, Mode};
use contscope::{FinSet, Monad};

fn run(m: &Monad, sizes: std::ops::RangeInclusive<usize>) {
    for n in sizes {
        let r = check_monad_laws(m, &FinSet::new("X", n), &LawBudget::default()).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn concrete_monads_up_to_three() {
    for m in [Monad::Identity, Monad::Maybe, Monad::exception(2), Monad::Powerset] {
        run(&m, 0..=3);
    }
}

#[test]
fn list_cap_three_up_to_two() {
    run(&Monad::list(3), 0..=2);
}

#[test]
fn list_cap_two_is_fully_exhaustive() {
    let r = check_monad_laws(&Monad::list(2), &FinSet::new("X", 2), &LawBudget::default()).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.checks.iter().all(|c| c.mode == Mode::Exhaustive), "{r}");
}

#[test]
fn continuation_up_to_two() {
    for n in 0..=2 {
        let r = check_monad_laws(&Monad::Continuation, &FinSet::new("X", n), &LawBudget::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks[0].mode, Mode::Exhaustive);
        assert!(r.checks[2].instances >= 200, "{r}");
    }
}
