//! Finite sets, total maps, products and predicates.
//!
//! Every carrier is a dense range of indices `0..size`. Tuples of a product
//! are encoded mixed-radix with the **last factor varying fastest**; golden
//! files and the model loader depend on that convention.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on `|X|` for [`all_preds`] (2^20 predicates).
pub const DEFAULT_PRED_BUDGET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinSet {
    name: Arc<str>,
    size: usize,
}

impl FinSet {
    pub fn new(name: impl AsRef<str>, size: usize) -> Self {
        FinSet {
            name: Arc::from(name.as_ref()),
            size,
        }
    }

    /// The truth-value set, `false = 0`, `true = 1`.
    pub fn two() -> Self {
        FinSet::new("2", 2)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn check(&self, index: usize) -> Result<usize> {
        if index < self.size {
            Ok(index)
        } else {
            Err(Error::IndexOutOfRange {
                set: self.name.to_string(),
                index,
                size: self.size,
            })
        }
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.size)
    }
}

/// A total function between finite sets, stored as a lookup table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    table: Vec<usize>,
}

impl FinMap {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::mismatch(
                format!("table of length {}", dom.size()),
                format!("length {}", table.len()),
            ));
        }
        if let Some((position, &entry)) = table.iter().enumerate().find(|(_, &e)| e >= cod.size()) {
            return Err(Error::NotTotal {
                position,
                entry,
                size: cod.size(),
            });
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn from_fn(dom: FinSet, cod: FinSet, f: impl Fn(usize) -> usize) -> Result<Self> {
        let table = dom.elements().map(f).collect();
        FinMap::new(dom, cod, table)
    }

    pub fn identity(set: &FinSet) -> Self {
        FinMap {
            dom: set.clone(),
            cod: set.clone(),
            table: set.elements().collect(),
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &FinMap) -> Result<FinMap> {
        if first.cod.size() != self.dom.size() {
            return Err(Error::mismatch(&self.dom, &first.cod));
        }
        Ok(FinMap {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            table: first.table.iter().map(|&i| self.table[i]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom.size() == self.cod.size() && self.table.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// An n-ary product with its mixed-radix tuple encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProdSet {
    factors: Vec<FinSet>,
    carrier: FinSet,
}

impl ProdSet {
    pub fn factors(&self) -> &[FinSet] {
        &self.factors
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn encode(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.factors.len() {
            return Err(Error::mismatch(
                format!("{}-tuple", self.factors.len()),
                format!("{}-tuple", tuple.len()),
            ));
        }
        let mut code = 0;
        for (factor, &x) in self.factors.iter().zip(tuple) {
            code = code * factor.size() + factor.check(x)?;
        }
        Ok(code)
    }

    pub fn decode(&self, code: usize) -> Result<Vec<usize>> {
        self.carrier.check(code)?;
        let mut tuple = vec![0; self.factors.len()];
        let mut rest = code;
        for (slot, factor) in tuple.iter_mut().zip(&self.factors).rev() {
            *slot = rest % factor.size();
            rest /= factor.size();
        }
        Ok(tuple)
    }
}

pub fn product(factors: &[FinSet]) -> Result<ProdSet> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let size = factors.iter().map(FinSet::size).product();
    let name = factors
        .iter()
        .map(FinSet::name)
        .collect::<Vec<_>>()
        .join("×");
    Ok(ProdSet {
        factors: factors.to_vec(),
        carrier: FinSet::new(name, size),
    })
}

/// Generalized projection `π_σ = ⟨π_σ(1), …, π_σ(m)⟩`, with `sigma` 1-based.
pub fn proj_sigma(sigma: &[usize], factors: &[FinSet]) -> Result<FinMap> {
    let n = factors.len();
    for (position, &value) in sigma.iter().enumerate() {
        if value == 0 || value > n {
            return Err(Error::SigmaOutOfRange { position: position + 1, value, n });
        }
    }
    let src = product(factors)?;
    let picked: Vec<FinSet> = sigma.iter().map(|&s| factors[s - 1].clone()).collect();
    let dst = product(&picked)?;
    let mut table = Vec::with_capacity(src.carrier().size());
    for code in src.carrier().elements() {
        let tuple = src.decode(code)?;
        let image: Vec<usize> = sigma.iter().map(|&s| tuple[s - 1]).collect();
        table.push(dst.encode(&image)?);
    }
    FinMap::new(src.carrier().clone(), dst.carrier().clone(), table)
}

/// A subset of a finite set, as its characteristic function `X ⇒ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pred {
    dom: FinSet,
    bits: Vec<bool>,
}

impl Pred {
    pub fn new(dom: FinSet, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != dom.size() {
            return Err(Error::mismatch(
                format!("{} bits", dom.size()),
                format!("{} bits", bits.len()),
            ));
        }
        Ok(Pred { dom, bits })
    }

    pub fn from_fn(dom: &FinSet, f: impl Fn(usize) -> bool) -> Self {
        Pred {
            bits: dom.elements().map(f).collect(),
            dom: dom.clone(),
        }
    }

    pub fn constant(dom: &FinSet, value: bool) -> Self {
        Pred {
            bits: vec![value; dom.size()],
            dom: dom.clone(),
        }
    }

    pub fn from_elements(dom: &FinSet, members: &[usize]) -> Result<Self> {
        let mut bits = vec![false; dom.size()];
        for &m in members {
            bits[dom.check(m)?] = true;
        }
        Ok(Pred { dom: dom.clone(), bits })
    }

    /// The `k`-th predicate in binary-counter order: bit `i` of `k` is `h(i)`.
    pub fn from_index(dom: &FinSet, k: u64) -> Self {
        Pred::from_fn(dom, |i| i < 64 && (k >> i) & 1 == 1)
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize) -> bool {
        self.bits[x]
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn and(&self, other: &Pred) -> Pred {
        Pred {
            dom: self.dom.clone(),
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect(),
        }
    }

    pub fn not(&self) -> Pred {
        Pred {
            dom: self.dom.clone(),
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Binary-counter index of this predicate; `None` past 64 elements.
    pub fn index(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(
            self.bits
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i)),
        )
    }

    /// `h ∘ f` for `f: Y → X`.
    pub fn pullback(&self, f: &FinMap) -> Result<Pred> {
        if f.cod().size() != self.dom.size() {
            return Err(Error::mismatch(&self.dom, f.cod()));
        }
        Ok(Pred::from_fn(f.dom(), |y| self.bits[f.apply(y)]))
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

/// All `2^|X|` predicates on `X` in binary-counter order.
pub fn all_preds(set: &FinSet, budget: usize) -> Result<impl Iterator<Item = Pred> + '_> {
    if set.size() > budget || set.size() >= 64 {
        return Err(Error::BudgetExceeded {
            what: format!("P({})", set),
            needed: format!("|X| = {}", set.size()),
            budget: format!("|X| <= {}", budget),
        });
    }
    Ok((0..1u64 << set.size()).map(move |k| Pred::from_index(set, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn set(n: usize) -> FinSet {
        FinSet::new(format!("S{n}"), n)
    }

    #[test]
    fn product_sizes() {
        assert_eq!(product(&[set(2), set(3)]).unwrap().carrier().size(), 6);
        let single = product(&[set(1)]).unwrap();
        assert_eq!(single.carrier().size(), 1);
        assert_eq!(single.encode(&[0]).unwrap(), 0);
        assert_eq!(product(&[]), Err(Error::EmptyProduct));
    }

    #[test]
    fn encode_last_factor_fastest() {
        let p = product(&[set(2), set(2), set(2)]).unwrap();
        // brute force: enumerate tuples in lexicographic order; that order must be 0..8
        let mut seen = HashSet::new();
        let mut expected = 0;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let code = p.encode(&[a, b, c]).unwrap();
                    assert_eq!(code, expected);
                    assert!(seen.insert(code));
                    assert_eq!(p.decode(code).unwrap(), vec![a, b, c]);
                    expected += 1;
                }
            }
        }
        assert_eq!(p.encode(&[1, 0, 1]).unwrap(), 5);
    }

    #[test]
    fn encode_rejects_bad_tuples() {
        let p = product(&[set(2), set(3)]).unwrap();
        assert!(p.encode(&[0, 3]).is_err());
        assert!(p.encode(&[0]).is_err());
        assert!(p.decode(6).is_err());
    }

    #[test]
    fn proj_identity_and_swap() {
        let f = [set(2), set(2)];
        assert!(proj_sigma(&[1, 2], &f).unwrap().is_identity());

        let g = [set(2), set(3)];
        let swap = proj_sigma(&[2, 1], &g).unwrap();
        let back = proj_sigma(&[2, 1], &[set(3), set(2)]).unwrap();
        assert!(back.after(&swap).unwrap().is_identity());
        assert!(swap.after(&back).unwrap().is_identity());
    }

    #[test]
    fn proj_duplication() {
        let factors = [set(3)];
        let dup = proj_sigma(&[1, 1], &factors).unwrap();
        let target = product(&[set(3), set(3)]).unwrap();
        assert_eq!(dup.cod().size(), 9);
        for x in 0..3 {
            assert_eq!(target.decode(dup.apply(x)).unwrap(), vec![x, x]);
        }
    }

    #[test]
    fn proj_rejects_out_of_range() {
        assert!(matches!(
            proj_sigma(&[1, 3], &[set(2), set(2)]),
            Err(Error::SigmaOutOfRange { value: 3, .. })
        ));
        assert!(proj_sigma(&[0], &[set(2)]).is_err());
    }

    #[test]
    fn all_preds_counts() {
        assert_eq!(all_preds(&set(0), DEFAULT_PRED_BUDGET).unwrap().count(), 1);
        assert_eq!(all_preds(&set(2), DEFAULT_PRED_BUDGET).unwrap().count(), 4);
        let three: HashSet<Vec<bool>> = all_preds(&set(3), DEFAULT_PRED_BUDGET)
            .unwrap()
            .map(|p| p.bits().to_vec())
            .collect();
        assert_eq!(three.len(), 8);
        assert!(matches!(all_preds(&set(21), DEFAULT_PRED_BUDGET), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn finmap_totality() {
        assert!(matches!(
            FinMap::new(set(2), set(2), vec![0, 2]),
            Err(Error::NotTotal { position: 1, .. })
        ));
    }

    #[test]
    fn pred_index_round_trip() {
        for k in 0..16 {
            assert_eq!(Pred::from_index(&set(4), k).index(), Some(k));
        }
    }
}
