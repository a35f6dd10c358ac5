//! Checks of the unit and associativity laws on enumerated or generated elements.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    map_morphism, mult_morphism, random_functional, t_map, t_mult, t_unit, unit_morphism, Elem,
    Monad, Obj, TValue,
};
use crate::error::Result;
use crate::fincore::FinSet;

/// Enumeration limits and sampling parameters shared by all law checkers.
#[derive(Clone, Debug)]
pub struct LawBudget {
    /// Objects with at most this many elements are enumerated in full.
    pub exhaustive_limit: usize,
    pub samples: usize,
    pub seed: u64,
    /// Random functionals added to every generated continuation family.
    pub random_funcs: usize,
}

impl Default for LawBudget {
    fn default() -> Self {
        LawBudget {
            exhaustive_limit: 1 << 16,
            samples: 200,
            seed: 0,
            random_funcs: 8,
        }
    }
}

impl LawBudget {
    pub fn with_seed(seed: u64) -> Self {
        LawBudget {
            seed,
            ..LawBudget::default()
        }
    }

    pub(crate) fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every element of the domain.
    Exhaustive,
    /// Every generator of a free algebra on which both sides are homomorphisms, plus samples.
    Generators,
    /// A deterministic generated family (units, images, random functionals).
    Generated,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Generators => "generators",
            Mode::Generated => "generated",
            Mode::Sampled => "sampled",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LawCheck {
    pub law: String,
    pub domain: String,
    pub mode: Mode,
    pub instances: usize,
    pub failures: usize,
}

/// Outcome of a family of diagram checks; `failures` lists counterexamples.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub title: String,
    pub monad: Monad,
    pub sizes: Vec<usize>,
    pub checks: Vec<LawCheck>,
    pub failures: Vec<String>,
}

const MAX_RECORDED: usize = 20;

impl LawReport {
    pub fn new(title: impl Into<String>, monad: &Monad, sizes: &[usize]) -> Self {
        LawReport {
            title: title.into(),
            monad: monad.clone(),
            sizes: sizes.to_vec(),
            checks: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn instances(&self) -> usize {
        self.checks.iter().map(|c| c.instances).sum()
    }

    /// Run `check` over `items`, recording one [`LawCheck`].
    pub fn run<I, F>(&mut self, law: &str, domain: impl fmt::Display, mode: Mode, items: I, mut check: F)
    where
        I: IntoIterator,
        F: FnMut(&I::Item) -> Result<Option<String>>,
    {
        let mut entry = LawCheck {
            law: law.to_string(),
            domain: domain.to_string(),
            mode,
            instances: 0,
            failures: 0,
        };
        for item in items {
            entry.instances += 1;
            let outcome = check(&item).unwrap_or_else(|e| Some(format!("error: {e}")));
            if let Some(msg) = outcome {
                entry.failures += 1;
                if self.failures.len() < MAX_RECORDED {
                    self.failures.push(format!("{law} on {}: {msg}", entry.domain));
                }
            }
        }
        self.checks.push(entry);
    }

    pub fn merge(&mut self, other: LawReport) {
        self.checks.extend(other.checks);
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED {
                self.failures.push(f);
            }
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} [{}] sizes {:?}", self.title, self.monad, self.sizes)?;
        for c in &self.checks {
            writeln!(
                f,
                "  {:<28} {:<24} {:<11} {:>8} checked {:>4} failed",
                c.law, c.domain, c.mode.to_string(), c.instances, c.failures
            )?;
        }
        for msg in &self.failures {
            writeln!(f, "  counterexample: {msg}")?;
        }
        Ok(())
    }
}

/// All elements of `obj` when it is small enough, otherwise `samples` random ones.
pub fn family(obj: &Obj, budget: &LawBudget, salt: u64) -> Result<(Vec<Elem>, Mode)> {
    match obj.size() {
        Some(n) if n <= budget.exhaustive_limit => Ok((obj.elements()?.collect(), Mode::Exhaustive)),
        _ => {
            let mut rng = budget.rng(salt);
            let xs = (0..budget.samples).map(|_| obj.sample(&mut rng)).collect::<Result<_>>()?;
            Ok((xs, Mode::Sampled))
        }
    }
}

/// Elements of `T³(X)` on which to test associativity.
fn depth3_family(monad: &Monad, x: &Obj, budget: &LawBudget) -> Result<(Vec<Elem>, Mode)> {
    let t2 = Obj::t(monad, &Obj::t(monad, x));
    let t3 = Obj::t(monad, &t2);
    if t3.size().is_some_and(|n| n <= budget.exhaustive_limit) {
        return family(&t3, budget, 3);
    }
    let (inner, inner_mode) = family(&t2, budget, 2)?;
    let mut out = Vec::new();
    match monad {
        Monad::List { .. } | Monad::Powerset => {
            for w in &inner {
                out.push(Elem::Comp(t_unit(monad, &t2, w.clone())?));
            }
            out.push(Elem::Comp(match monad {
                Monad::List { max_len } => TValue::list(*max_len, &t2, Vec::new())?,
                _ => TValue::powerset_members(&t2, Vec::new())?,
            }));
            let mut rng = budget.rng(33);
            for _ in 0..budget.samples {
                out.push(t3.sample(&mut rng)?);
            }
            let mode = if inner_mode == Mode::Exhaustive { Mode::Generators } else { Mode::Sampled };
            Ok((out, mode))
        }
        Monad::Continuation => {
            let eta_c = unit_morphism(monad, &Obj::t(monad, x));
            let eta_cc = map_morphism(monad, &unit_morphism(monad, x));
            for f in &inner {
                let f_val = f.as_comp().expect("computation");
                out.push(Elem::Comp(t_unit(monad, &t2, f.clone())?));
                out.push(Elem::Comp(t_map(monad, &eta_c, f_val)?));
                out.push(Elem::Comp(t_map(monad, &eta_cc, f_val)?));
            }
            let mut rng = budget.rng(34);
            let pad = budget.samples.saturating_sub(out.len());
            for _ in 0..budget.random_funcs.max(pad) {
                out.push(Elem::Comp(random_functional(&t2, 5, &mut rng)?));
            }
            Ok((out, Mode::Generated))
        }
        _ => family(&t3, budget, 3),
    }
}

fn differ(lhs: &Elem, rhs: &Elem, input: &Elem) -> Result<Option<String>> {
    Ok((!lhs.equiv(rhs)?).then(|| format!("{input} ↦ {lhs} vs {rhs}")))
}

/// The two unit triangles and the associativity square at carrier `x`.
pub fn check_monad_laws(monad: &Monad, x: &FinSet, budget: &LawBudget) -> Result<LawReport> {
    let xo = Obj::fin(x.clone());
    let tx = Obj::t(monad, &xo);
    let mut report = LawReport::new("monad laws", monad, &[x.size()]);

    let eta_t = unit_morphism(monad, &tx);
    let t_eta = map_morphism(monad, &unit_morphism(monad, &xo));
    let mu = mult_morphism(monad, &xo);

    let (elems, mode) = family(&tx, budget, 1)?;
    report.run("μ∘η_T = id", &tx, mode, &elems, |t| differ(&mu.apply(&eta_t.apply(t)), t, t));
    report.run("μ∘T(η) = id", &tx, mode, &elems, |t| differ(&mu.apply(&t_eta.apply(t)), t, t));

    let t2 = Obj::t(monad, &tx);
    let t3 = Obj::t(monad, &t2);
    let mu_t = mult_morphism(monad, &tx);
    let t_mu = map_morphism(monad, &mu);
    let (elems3, mode3) = depth3_family(monad, &xo, budget)?;
    report.run("μ∘μ_T = μ∘T(μ)", &t3, mode3, &elems3, |t| {
        differ(&mu.apply(&mu_t.apply(t)), &mu.apply(&t_mu.apply(t)), t)
    });
    Ok(report)
}

/// `T(f)` on a value, used by the functor-law property tests.
pub fn map_elem(monad: &Monad, f: &super::Morphism, t: &Elem) -> Result<Elem> {
    let t = t.as_comp().ok_or_else(|| crate::error::Error::mismatch("a computation", t))?;
    Ok(Elem::Comp(t_map(monad, f, t)?))
}

/// `μ` on a value of `T²(X)`.
pub fn mult_elem(monad: &Monad, tt: &Elem) -> Result<Elem> {
    let tt = tt.as_comp().ok_or_else(|| crate::error::Error::mismatch("a computation", tt))?;
    Ok(Elem::Comp(t_mult(monad, tt)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> LawBudget {
        LawBudget {
            exhaustive_limit: 1 << 12,
            samples: 40,
            ..LawBudget::default()
        }
    }

    #[test]
    fn identity_and_maybe_pass() {
        for m in [Monad::Identity, Monad::Maybe, Monad::exception(2)] {
            for n in 0..=3 {
                let r = check_monad_laws(&m, &FinSet::new("X", n), &quick()).unwrap();
                assert!(r.passed(), "{r}");
                assert!(r.checks.iter().all(|c| c.mode == Mode::Exhaustive));
            }
        }
    }

    #[test]
    fn list_small_exhaustive() {
        let r = check_monad_laws(&Monad::list(2), &FinSet::new("X", 2), &quick()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn continuation_point() {
        let r = check_monad_laws(&Monad::Continuation, &FinSet::new("X", 1), &quick()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn a_broken_law_is_reported() {
        let x = Obj::fin(FinSet::new("X", 2));
        let tx = Obj::t(&Monad::list(2), &x);
        let (elems, mode) = family(&tx, &quick(), 0).unwrap();
        let mut r = LawReport::new("bogus", &Monad::list(2), &[2]);
        r.run("reverse = id", &tx, mode, &elems, |t| {
            let Some(super::super::Payload::List(w)) = t.as_comp().map(|v| v.payload().clone()) else {
                unreachable!()
            };
            let rev: Vec<Elem> = w.iter().rev().cloned().collect();
            let rev = Elem::Comp(super::super::TValue::list(2, &x, rev)?);
            differ(&rev, t, t)
        });
        assert!(!r.passed());
        assert_eq!(r.checks[0].failures, 2);
    }
}
