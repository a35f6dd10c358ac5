//! Law-check and equivalence suites with their default ranges.

use std::fmt::Write as _;

use contscope::evaluator::{check_equivalences, InstanceSpace};
use contscope::monads::laws::{check_monad_laws, LawBudget, LawReport};
use contscope::strengths::{
    check_pileup_assoc, check_pileup_lemma, check_strength_axioms, find_noncommutativity, pile_left, pile_right,
};
use contscope::transforms::{check_cps, check_mostowski_lemma};
use contscope::{Determiner, Elem, FinSet, Monad, Obj, TValue};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    MonadLaws,
    Strength,
    Pileup,
    Transforms,
    Equivalence,
    All,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub monads: Vec<Monad>,
    /// Largest carrier; per-monad defaults when absent.
    pub max_size: Option<usize>,
    pub seed: u64,
    /// Restrict the equivalence suite to one arity.
    pub arity: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { monads: Monad::all(), max_size: None, seed: 0, arity: None }
    }
}

impl SuiteConfig {
    fn cap(&self, m: &Monad) -> usize {
        self.max_size.unwrap_or(match m {
            Monad::List { .. } | Monad::Continuation => 2,
            _ => 3,
        })
    }

    fn budget(&self) -> LawBudget {
        LawBudget::with_seed(self.seed)
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOutput {
    pub text: String,
    pub failures: usize,
}

impl SuiteOutput {
    fn add(&mut self, r: &LawReport) {
        self.text.push_str(&r.to_string());
        if !r.passed() {
            self.failures += 1;
        }
    }

    fn merge(&mut self, other: SuiteOutput) {
        self.text.push_str(&other.text);
        self.failures += other.failures;
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn set(name: &str, n: usize) -> FinSet {
    FinSet::new(name, n)
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteOutput, CliError> {
    match suite {
        Suite::MonadLaws => monad_laws(cfg),
        Suite::Strength => strength(cfg),
        Suite::Pileup => pileup(cfg),
        Suite::Transforms => transforms(cfg),
        Suite::Equivalence => equivalence(cfg),
        Suite::All => {
            let mut out = SuiteOutput::default();
            for s in [Suite::MonadLaws, Suite::Strength, Suite::Pileup, Suite::Transforms, Suite::Equivalence] {
                out.merge(run(s, cfg)?);
            }
            Ok(out)
        }
    }
}

/// Unit and associativity laws on carriers `0..=cap`.
pub fn monad_laws(cfg: &SuiteConfig) -> Result<SuiteOutput, CliError> {
    let mut out = SuiteOutput::default();
    for m in &cfg.monads {
        for n in 0..=cfg.cap(m) {
            out.add(&check_monad_laws(m, &set("X", n), &cfg.budget())?);
        }
    }
    Ok(out)
}

/// Strength triangles and pentagons, the bi-strong square and the swap relations.
pub fn strength(cfg: &SuiteConfig) -> Result<SuiteOutput, CliError> {
    let mut out = SuiteOutput::default();
    for m in &cfg.monads {
        let cap = cfg.cap(m);
        for a in 1..=cap {
            for b in 1..=cap {
                let z = set("Z", 1 + (a + b) % cap);
                out.add(&check_strength_axioms(m, &set("X", a), &set("Y", b), &z, &cfg.budget())?);
            }
        }
    }
    Ok(out)
}

fn word(x: &Obj, letters: &[usize]) -> Result<TValue, CliError> {
    Ok(TValue::list(3, x, letters.iter().map(|&i| Elem::Atom(i)).collect())?)
}

/// The pile-up lemma, associativity, and commutativity on each monad.
pub fn pileup(cfg: &SuiteConfig) -> Result<SuiteOutput, CliError> {
    let mut out = SuiteOutput::default();
    for m in &cfg.monads {
        let cap = cfg.cap(m);
        for a in 1..=cap {
            for b in 1..=cap {
                out.add(&check_pileup_lemma(m, &set("X", a), &set("Y", b), &cfg.budget())?);
            }
        }
        let (x, y, z) = (set("X", cap), set("Y", cap.min(2)), set("Z", cap));
        out.add(&check_pileup_assoc(m, &x, &y, &z, &cfg.budget())?);

        let w = find_noncommutativity(m, &x, &x, &cfg.budget())?;
        let expected = matches!(m, Monad::Identity | Monad::Maybe | Monad::Powerset);
        let ok = w.is_commutative() == expected && w.reverify()?;
        let _ = writeln!(out.text, "{} commutativity: {w}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            out.failures += 1;
        }
        if let Monad::List { .. } = m {
            let (xo, yo) = (Obj::fin(set("X", 2)), Obj::fin(set("Y", 2)));
            let (s, t) = (word(&xo, &[0, 1])?, word(&yo, &[0, 1])?);
            let _ = writeln!(out.text, "  rows:    pul({s},{t}) = {}", pile_left(&s, &t)?);
            let _ = writeln!(out.text, "  columns: pur({s},{t}) = {}", pile_right(&s, &t)?);
        }
    }
    Ok(out)
}

/// The Mostowski lemma and CPS application checks (continuation only).
pub fn transforms(cfg: &SuiteConfig) -> Result<SuiteOutput, CliError> {
    let mut out = SuiteOutput::default();
    if !cfg.monads.contains(&Monad::Continuation) {
        return Ok(out);
    }
    let cap = cfg.max_size.unwrap_or(3);
    for n in 1..=cap {
        out.add(&check_mostowski_lemma(&set("X", n), &cfg.budget())?);
    }
    for a in 1..=cap.min(2) {
        for b in 1..=cap.min(2) {
            out.add(&check_cps(&set("X", a), &set("Y", b), &cfg.budget())?);
        }
    }
    Ok(out)
}

/// Strategy equivalences over every core-determiner quantifier and every verb.
pub fn equivalence(cfg: &SuiteConfig) -> Result<SuiteOutput, CliError> {
    let mut out = SuiteOutput::default();
    let size = cfg.max_size.unwrap_or(2);
    let arities: Vec<usize> = match cfg.arity {
        Some(n) => vec![n],
        None => vec![1, 2, 3],
    };
    for n in arities {
        let r = check_equivalences(&InstanceSpace::new(&Determiner::CORE, &vec![size; n]))?;
        out.text.push_str(&r.to_string());
        if !r.passed() {
            out.failures += 1;
        }
    }
    Ok(out)
}
