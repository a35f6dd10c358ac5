//! Fixed models for the strategy benchmarks.

use contscope::evaluator::Model;
use contscope::fincore::product;
use contscope::{make_gq, Determiner, FinSet, Pred, Result};

/// Arity-`n` model over carriers of size `size`: every, some, most over
/// full restrictions and a verb holding on tuples with an even index sum.
pub fn model(n: usize, size: usize) -> Result<Model> {
    let dets = [Determiner::Every, Determiner::Some, Determiner::Most];
    let carriers: Vec<FinSet> = (1..=n).map(|i| FinSet::new(format!("X{i}"), size)).collect();
    let quants = carriers
        .iter()
        .zip(dets)
        .map(|(x, d)| make_gq(d, x, &Pred::constant(x, true)))
        .collect::<Result<Vec<_>>>()?;
    let p = product(&carriers)?;
    let verb = Pred::from_fn(p.carrier(), |c| p.decode(c).map(|t| t.iter().sum::<usize>() % 2 == 0).unwrap_or(false));
    Model::from_gqs(&quants, verb)
}
