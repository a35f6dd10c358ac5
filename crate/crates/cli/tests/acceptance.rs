//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use contscope::evaluator::{
    check_equivalences, enumerate_readings, eval_comp_tree, params, reading_tree, scope_order, strat,
    IncompletenessWitness, InstanceSpace, Model, Strategy,
};
use contscope::fincore::product;
use contscope::monads::laws::{check_monad_laws, LawBudget, LawReport};
use contscope::monads::random_functional;
use contscope::strengths::{
    check_pileup_assoc, check_pileup_lemma, find_noncommutativity, pile_left, pile_right, CommutativityWitness,
};
use contscope::{make_gq, Determiner, Elem, FinSet, Monad, Obj, Pred, TValue};
use contscope_cli::input::{resolve, ModelFile, SentenceFile};
use contscope_cli::report;
use contscope_cli::suites::{self, SuiteConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn read(rel: &str) -> Result<String, String> {
    std::fs::read_to_string(root().join(rel)).map_err(|e| format!("{rel}: {e}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Carrier cap per monad: list and continuation on sizes up to 2, the rest up to 3.
fn ranges() -> Vec<(Monad, usize)> {
    Monad::all()
        .into_iter()
        .map(|m| {
            let cap = if matches!(m, Monad::List { .. } | Monad::Continuation) { 2 } else { 3 };
            (m, cap)
        })
        .collect()
}

fn set(name: &str, n: usize) -> FinSet {
    FinSet::new(name, n)
}

fn require(reports: &[LawReport]) -> Result<usize, String> {
    for r in reports {
        if !r.passed() {
            return Err(r.to_string());
        }
    }
    Ok(reports.iter().map(LawReport::instances).sum())
}

fn monad_laws() -> Outcome {
    let start = Instant::now();
    let budget = LawBudget::default();
    let mut reports = Vec::new();
    for (m, cap) in ranges() {
        for n in 0..=cap {
            reports.push(check_monad_laws(&m, &set("X", n), &budget).map_err(err)?);
        }
    }
    let checked = require(&reports)?;
    for r in reports.iter().filter(|r| r.monad == Monad::Continuation) {
        let assoc = r.checks.iter().find(|c| c.law.contains('μ') && c.domain.contains("C(C(C")).ok_or("no associativity check")?;
        if assoc.instances < 200 {
            return Err(format!("continuation associativity on {:?}: only {} instances", r.sizes, assoc.instances));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("{checked} instances, {elapsed:.1?}"))
}

fn strength() -> Outcome {
    let out = suites::strength(&SuiteConfig::default()).map_err(err)?;
    if out.passed() {
        Ok(format!("{} reports", out.text.matches("PASS").count()))
    } else {
        Err(out.text)
    }
}

fn pileups() -> Outcome {
    let budget = LawBudget::default();
    let mut reports = Vec::new();
    for (m, cap) in ranges() {
        for a in 1..=cap {
            for b in 1..=cap {
                reports.push(check_pileup_lemma(&m, &set("X", a), &set("Y", b), &budget).map_err(err)?);
                for c in 1..=cap {
                    let r = check_pileup_assoc(&m, &set("X", a), &set("Y", b), &set("Z", c), &budget).map_err(err)?;
                    reports.push(r);
                }
            }
        }
    }
    let checked = require(&reports)?;
    Ok(format!("{} reports, {checked} instances", reports.len()))
}

fn word(x: &Obj, xs: Vec<Elem>) -> Result<TValue, String> {
    TValue::list(3, x, xs).map_err(err)
}

fn pairs(ps: &[(usize, usize)]) -> Vec<Elem> {
    ps.iter().map(|&(a, b)| Elem::pair(Elem::Atom(a), Elem::Atom(b))).collect()
}

fn stored_witness(file: &str) -> Result<CommutativityWitness, String> {
    let w = CommutativityWitness::from_text(&read(&format!("data/witnesses/{file}"))?).map_err(err)?;
    if w.is_commutative() || !w.reverify().map_err(err)? {
        return Err(format!("{file} does not reverify"));
    }
    Ok(w)
}

fn commutativity() -> Outcome {
    let budget = LawBudget::default();
    for (m, cap) in ranges() {
        let x = set("X", cap);
        let w = find_noncommutativity(&m, &x, &x, &budget).map_err(err)?;
        let expected = matches!(m, Monad::Identity | Monad::Maybe | Monad::Powerset);
        if w.is_commutative() != expected {
            return Err(format!("{m}: {w}"));
        }
    }

    let (xo, yo) = (Obj::fin(set("X", 2)), Obj::fin(set("Y", 2)));
    let s = word(&xo, vec![Elem::Atom(0), Elem::Atom(1)])?;
    let t = word(&yo, vec![Elem::Atom(0), Elem::Atom(1)])?;
    let xy = Obj::pair(&xo, &yo);
    let rows = word(&xy, pairs(&[(0, 0), (0, 1), (1, 0), (1, 1)]))?;
    let cols = word(&xy, pairs(&[(0, 0), (1, 0), (0, 1), (1, 1)]))?;
    let (l, r) = (pile_left(&s, &t).map_err(err)?, pile_right(&s, &t).map_err(err)?);
    if !l.equiv(&rows).map_err(err)? || !r.equiv(&cols).map_err(err)? {
        return Err(format!("list pile-ups: pul = {l}, pur = {r}"));
    }

    let c = stored_witness("continuation_noncommuting.txt")?;
    let e = stored_witness("exception_noncommuting.txt")?;
    if c.monad != Monad::Continuation || e.monad != Monad::exception(2) {
        return Err("stored witnesses are for the wrong monads".into());
    }
    Ok(format!("list pul = {l}, pur = {r}; stored witnesses reverified"))
}

fn counts_model(n: usize) -> Result<Model, String> {
    let x = set("X", 2);
    let every = make_gq(Determiner::Every, &x, &Pred::constant(&x, true)).map_err(err)?;
    let carriers = vec![x; n];
    let verb = Pred::constant(product(&carriers).map_err(err)?.carrier(), true);
    Model::from_gqs(&vec![every; n], verb).map_err(err)
}

fn reading_counts() -> Outcome {
    let expected = [(1, [1, 1, 1]), (2, [2, 2, 2]), (3, [6, 6, 4])];
    let mut summary = Vec::new();
    for (n, want) in expected {
        let rows = enumerate_readings(&counts_model(n)?, &Strategy::ALL).map_err(err)?;
        let got: Vec<usize> = Strategy::ALL.iter().map(|s| rows.iter().filter(|r| r.strategy == *s).count()).collect();
        if got != want {
            return Err(format!("arity {n}: {got:?}"));
        }
        summary.push(format!("{}/{}/{}", got[0], got[1], got[2]));
    }
    let orders: BTreeSet<Vec<usize>> = params(Strategy::C, 3)
        .iter()
        .map(scope_order)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let want: BTreeSet<Vec<usize>> = [vec![1, 2, 3], vec![1, 3, 2], vec![2, 3, 1], vec![3, 2, 1]].into();
    if orders != want {
        return Err(format!("C orders {orders:?}"));
    }
    Ok(format!("{}; C orders {orders:?}", summary.join(", ")))
}

fn equivalences() -> Outcome {
    let start = Instant::now();
    let mut comparisons = 0;
    for n in 1..=3 {
        let r = check_equivalences(&InstanceSpace::new(&Determiner::CORE, &vec![2; n])).map_err(err)?;
        if !r.passed() {
            return Err(r.to_string());
        }
        comparisons += r.comparisons;
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!("{comparisons} comparisons, {elapsed:.1?}"))
}

fn incompleteness() -> Outcome {
    let w = IncompletenessWitness::from_text(&read("data/witnesses/incompleteness_213.txt")?).map_err(err)?;
    if w.sigma != [2, 1, 3] {
        return Err(format!("stored witness is for σ = {:?}", w.sigma));
    }
    if !w.reverify().map_err(err)? {
        return Err("stored witness does not reverify".into());
    }
    Ok(format!("σ = (2,1,3) is {}, every C reading is {:?}", w.sigma_truth, w.c_truths))
}

fn canonical() -> Outcome {
    let model = "data/models/girls_boys.model";
    let sentence = "data/models/every_girl_likes_a_boy.sentence";
    let golden = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/girls_boys.txt"))
        .map_err(err)?;

    let m = ModelFile::load(&root().join(model)).map_err(err)?;
    let s = SentenceFile::load(&root().join(sentence)).map_err(err)?;
    let scene = resolve(&m, &s).map_err(err)?;
    let rows = report::readings(&scene, &Strategy::ALL).map_err(err)?;
    for st in Strategy::ALL {
        for (order, truth) in [(vec![1, 2], true), (vec![2, 1], false)] {
            let hit = rows.iter().find(|r| r.strategy == st && r.order == order).ok_or(format!("{st} lacks {order:?}"))?;
            if hit.truth != truth {
                return Err(format!("{st} {order:?} is {}", hit.truth));
            }
        }
    }
    if report::table(&scene, &rows) != golden {
        return Err("library table differs from golden file".into());
    }
    for _ in 0..2 {
        let out = Command::new(env!("CARGO_BIN_EXE_contscope"))
            .current_dir(root())
            .args(["readings", model, sentence])
            .output()
            .map_err(err)?;
        if !out.status.success() || out.stdout != golden.as_bytes() {
            return Err("cli output differs from golden file".into());
        }
    }
    Ok("S>O true, O>S false under A, B and C; table matches golden".into())
}

fn random_pred<R: Rng>(x: &FinSet, rng: &mut R) -> Result<Pred, String> {
    Pred::new(x.clone(), (0..x.size()).map(|_| rng.gen_bool(0.5)).collect()).map_err(err)
}

fn random_quant<R: Rng>(x: &FinSet, rng: &mut R) -> Result<TValue, String> {
    if rng.gen_bool(0.5) {
        random_functional(&Obj::fin(x.clone()), x.size().min(5), rng).map_err(err)
    } else {
        let det = Determiner::CORE[rng.gen_range(0..4)];
        let restriction = random_pred(x, rng)?;
        Ok(make_gq(det, x, &restriction).map_err(err)?.value().clone())
    }
}

fn tree_pipeline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut comparisons = 0;
    for n in 1..=3 {
        let trees: Vec<_> = Strategy::ALL
            .iter()
            .flat_map(|&s| params(s, n).into_iter().map(move |p| (s, p)))
            .map(|(s, p)| reading_tree(s, &p, n).map(|t| (s, p, t)))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let cap = if n == 3 { 2 } else { 3 };
        for _ in 0..1000 {
            let carriers: Vec<FinSet> = (0..n).map(|i| set(&format!("X{}", i + 1), rng.gen_range(1..=cap))).collect();
            let quants = carriers.iter().map(|x| random_quant(x, &mut rng)).collect::<Result<Vec<_>, _>>()?;
            let verb = random_pred(product(&carriers).map_err(err)?.carrier(), &mut rng)?;
            let model = Model::new(quants.clone(), verb.clone()).map_err(err)?;
            for (s, p, t) in &trees {
                let via_tree = eval_comp_tree(t, &model).map_err(err)?;
                let direct = strat(*s, p, &quants, &verb).map_err(err)?;
                if via_tree != direct {
                    return Err(format!("arity {n}, {s} {p}: tree {via_tree}, direct {direct}"));
                }
                comparisons += 1;
            }
        }
    }
    Ok(format!("{comparisons} comparisons, 0 mismatches"))
}

/// Written straight to stdout so the lines survive test output capture.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("monad laws", monad_laws),
        ("strength axioms", strength),
        ("pile-up lemma and associativity", pileups),
        ("commutativity", commutativity),
        ("reading counts", reading_counts),
        ("strategy equivalences", equivalences),
        ("incompleteness witness", incompleteness),
        ("canonical example", canonical),
        ("tree pipeline", tree_pipeline),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => report(format!("PASS {} {name} ({secs:.1}s): {detail}", i + 1)),
            Err(why) => {
                report(format!("FAIL {} {name} ({secs:.1}s): {why}", i + 1));
                failed.push(*name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
