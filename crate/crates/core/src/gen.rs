//! Deterministic families of monad values used by the strength, pile-up and
//! commutativity checkers.

use rand::Rng;

use crate::error::Result;
use crate::fincore::FinSet;
use crate::lexicon::{all_gqs, Determiner};
use crate::monads::laws::{family, LawBudget, Mode};
use crate::monads::{random_functional, t_unit, Elem, Monad, Obj, TValue};

/// Families of `T(X)` at most this large are used in full for pair and triple checks.
pub const PAIR_LIMIT: usize = 64;

/// Values of `T(x)`: all of them when few enough, otherwise a generated family.
///
/// For the continuation monad the generated family is every lexicon
/// quantifier over `x`, every unit image and `budget.random_funcs` random
/// functionals, in that order.
pub fn t_family(monad: &Monad, x: &FinSet, budget: &LawBudget, salt: u64) -> Result<(Vec<TValue>, Mode)> {
    let xo = Obj::fin(x.clone());
    let tx = Obj::t(monad, &xo);
    if tx.size().is_some_and(|n| n <= PAIR_LIMIT) {
        return Ok((comps(tx.elements()?), Mode::Exhaustive));
    }
    match monad {
        Monad::Continuation => Ok((cont_family(x, budget, salt)?, Mode::Generated)),
        _ => {
            let (xs, mode) = family(&tx, budget, salt)?;
            Ok((comps(xs), mode))
        }
    }
}

/// Lexicon quantifiers, unit images and random functionals over `x`.
pub fn cont_family(x: &FinSet, budget: &LawBudget, salt: u64) -> Result<Vec<TValue>> {
    let xo = Obj::fin(x.clone());
    let mut out: Vec<TValue> = all_gqs(&Determiner::upto(x.size()), x)?
        .into_iter()
        .map(|q| q.value().clone())
        .collect();
    for i in x.elements() {
        out.push(t_unit(&Monad::Continuation, &xo, Elem::Atom(i))?);
    }
    let mut rng = budget.rng(salt ^ 0xC0);
    for _ in 0..budget.random_funcs {
        out.push(random_functional(&xo, x.size().min(5), &mut rng)?);
    }
    Ok(out)
}

fn comps(xs: impl IntoIterator<Item = Elem>) -> Vec<TValue> {
    xs.into_iter()
        .map(|e| e.as_comp().expect("element of T(X)").clone())
        .collect()
}

/// Index tuples into families of the given lengths: all of them when there
/// are at most `limit`, otherwise `limit` random ones.
pub fn index_tuples(lens: &[usize], limit: usize, budget: &LawBudget, salt: u64) -> (Vec<Vec<usize>>, bool) {
    let total = lens.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n));
    match total {
        Some(total) if total <= limit => {
            let mut out = Vec::with_capacity(total);
            for mut code in 0..total {
                let mut t = vec![0; lens.len()];
                for (slot, &n) in t.iter_mut().zip(lens).rev() {
                    *slot = code % n;
                    code /= n;
                }
                out.push(t);
            }
            (out, true)
        }
        _ => {
            let mut rng = budget.rng(salt ^ 0x7E);
            let out = (0..limit)
                .map(|_| lens.iter().map(|&n| rng.gen_range(0..n)).collect())
                .collect();
            (out, false)
        }
    }
}
