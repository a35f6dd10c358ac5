//! Standard generalized quantifiers as continuation values.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fincore::{FinSet, Pred};
use crate::monads::{Obj, TValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Determiner {
    Every,
    Some,
    No,
    /// Strict majority of the restriction.
    Most,
    AtLeast(usize),
    Exactly(usize),
}

impl Determiner {
    /// The four determiners used by the equivalence suites.
    pub const CORE: [Determiner; 4] = [Determiner::Every, Determiner::Some, Determiner::No, Determiner::Most];

    /// Truth value given how many restriction elements satisfy the scope and how many do not.
    pub fn holds(self, inside: usize, outside: usize) -> bool {
        match self {
            Determiner::Every => outside == 0,
            Determiner::Some => inside > 0,
            Determiner::No => inside == 0,
            Determiner::Most => inside > outside,
            Determiner::AtLeast(k) => inside >= k,
            Determiner::Exactly(k) => inside == k,
        }
    }

    /// Every determiner whose numeric parameter is at most `n`.
    pub fn upto(n: usize) -> Vec<Determiner> {
        let mut out = Determiner::CORE.to_vec();
        out.extend((0..=n).map(Determiner::AtLeast));
        out.extend((0..=n).map(Determiner::Exactly));
        out
    }
}

impl fmt::Display for Determiner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Determiner::Every => write!(f, "every"),
            Determiner::Some => write!(f, "some"),
            Determiner::No => write!(f, "no"),
            Determiner::Most => write!(f, "most"),
            Determiner::AtLeast(k) => write!(f, "at_least_{k}"),
            Determiner::Exactly(k) => write!(f, "exactly_{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownDeterminer(pub String);

impl fmt::Display for UnknownDeterminer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown determiner `{}`", self.0)
    }
}

impl std::error::Error for UnknownDeterminer {}

impl FromStr for Determiner {
    type Err = UnknownDeterminer;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let numeric = |prefix: &str| s.strip_prefix(prefix).and_then(|k| k.parse().ok());
        Ok(match s {
            "every" => Determiner::Every,
            "some" | "a" => Determiner::Some,
            "no" => Determiner::No,
            "most" => Determiner::Most,
            _ => {
                if let Some(k) = numeric("at_least_") {
                    Determiner::AtLeast(k)
                } else if let Some(k) = numeric("exactly_") {
                    Determiner::Exactly(k)
                } else {
                    return Err(UnknownDeterminer(s.to_string()));
                }
            }
        })
    }
}

/// A determiner applied to a restriction `A ⊆ X`, as an element of `C(X)`.
#[derive(Clone)]
pub struct GQuant {
    det: Determiner,
    restriction: Pred,
    value: TValue,
}

pub fn make_gq(det: Determiner, x: &FinSet, a: &Pred) -> Result<GQuant> {
    if a.dom().size() != x.size() {
        return Err(Error::mismatch(x, a.dom()));
    }
    let base = Obj::fin(x.clone());
    let members: Vec<usize> = a.members().collect();
    let value = TValue::continuation(&base, move |h| {
        let inside = members.iter().filter(|&&i| h(&crate::monads::Elem::Atom(i))).count();
        det.holds(inside, members.len() - inside)
    })
    .with_tag(format!("{det}{a}"));
    Ok(GQuant {
        det,
        restriction: a.clone(),
        value,
    })
}

impl GQuant {
    pub fn det(&self) -> Determiner {
        self.det
    }

    pub fn base(&self) -> &FinSet {
        self.restriction.dom()
    }

    pub fn restriction(&self) -> &Pred {
        &self.restriction
    }

    pub fn value(&self) -> &TValue {
        &self.value
    }

    pub fn eval(&self, h: &Pred) -> bool {
        let inside = self.restriction.members().filter(|&i| h.get(i)).count();
        self.det.holds(inside, self.restriction.count() - inside)
    }
}

impl fmt::Display for GQuant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.det, self.restriction)
    }
}

impl fmt::Debug for GQuant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}:C({})", self.base())
    }
}

/// Every quantifier `det(A)` over `x` for the given determiners and all restrictions `A`.
pub fn all_gqs(dets: &[Determiner], x: &FinSet) -> Result<Vec<GQuant>> {
    let mut out = Vec::new();
    for &det in dets {
        for a in crate::fincore::all_preds(x, crate::fincore::DEFAULT_PRED_BUDGET)? {
            out.push(make_gq(det, x, &a)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_over_empty_restriction_is_true() {
        let x = FinSet::new("X", 3);
        let q = make_gq(Determiner::Every, &x, &Pred::constant(&x, false)).unwrap();
        for k in 0..8 {
            let h = Pred::from_index(&x, k);
            assert!(q.eval(&h));
            assert!(q.value().eval_pred(&h).unwrap());
        }
    }

    #[test]
    fn most_is_strict_majority() {
        let x = FinSet::new("X", 3);
        let all = Pred::constant(&x, true);
        let q = make_gq(Determiner::Most, &x, &all).unwrap();
        assert!(q.eval(&Pred::from_elements(&x, &[0, 2]).unwrap()));
        assert!(!q.eval(&Pred::from_elements(&x, &[1]).unwrap()));
        let x4 = FinSet::new("X", 4);
        let q4 = make_gq(Determiner::Most, &x4, &Pred::constant(&x4, true)).unwrap();
        assert!(!q4.eval(&Pred::from_elements(&x4, &[0, 1]).unwrap()));
    }

    #[test]
    fn some_on_singleton() {
        let x = FinSet::new("X", 2);
        let a = Pred::from_elements(&x, &[0]).unwrap();
        let q = make_gq(Determiner::Some, &x, &a).unwrap();
        assert!(q.value().eval_pred(&a).unwrap());
    }

    #[test]
    fn parse_names() {
        for name in ["every", "some", "no", "most", "at_least_2", "exactly_0"] {
            assert_eq!(name.parse::<Determiner>().unwrap().to_string(), name);
        }
        assert_eq!("a".parse::<Determiner>().unwrap(), Determiner::Some);
        assert!("several".parse::<Determiner>().is_err());
        assert!("at_least_x".parse::<Determiner>().is_err());
    }

    #[test]
    fn value_and_eval_agree() {
        let x = FinSet::new("X", 3);
        for q in all_gqs(&Determiner::upto(3), &x).unwrap() {
            for k in 0..8 {
                let h = Pred::from_index(&x, k);
                assert_eq!(q.eval(&h), q.value().eval_pred(&h).unwrap(), "{q} on {h}");
            }
        }
    }
}
