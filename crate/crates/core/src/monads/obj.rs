//! Objects and elements of the finite-set universe the monads act on.
//!
//! An [`Obj`] describes a set built from finite carriers by products,
//! powersets and monad applications. Elements are dynamic [`Elem`] values;
//! whenever an object is small enough it is also *enumerable*, with a dense
//! index for every element, so predicates over it can be stored as tables.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::{Monad, TValue};
use crate::error::{Error, Result};
use crate::fincore::{FinMap, FinSet, Pred};

/// Objects with more elements than this are treated as non-enumerable.
pub const ENUM_LIMIT: usize = 1 << 40;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Obj(Arc<ObjKind>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ObjKind {
    Fin(FinSet),
    /// n-ary product; tuples are encoded last-component-fastest.
    Prod(Vec<Obj>),
    /// `P(X) = X ⇒ 2`.
    Pow(Obj),
    /// `T(X)` for a monad `T`.
    T(Monad, Obj),
}

impl Obj {
    pub fn fin(set: FinSet) -> Self {
        Obj(Arc::new(ObjKind::Fin(set)))
    }

    pub fn two() -> Self {
        Obj::fin(FinSet::two())
    }

    pub fn prod(factors: Vec<Obj>) -> Self {
        Obj(Arc::new(ObjKind::Prod(factors)))
    }

    pub fn pair(a: &Obj, b: &Obj) -> Self {
        Obj::prod(vec![a.clone(), b.clone()])
    }

    pub fn pow(inner: &Obj) -> Self {
        Obj(Arc::new(ObjKind::Pow(inner.clone())))
    }

    pub fn t(monad: &Monad, inner: &Obj) -> Self {
        Obj(Arc::new(ObjKind::T(monad.clone(), inner.clone())))
    }

    pub fn kind(&self) -> &ObjKind {
        &self.0
    }

    /// The inner object of `T(X)` when the monad matches.
    pub fn under(&self, monad: &Monad) -> Option<&Obj> {
        match self.kind() {
            ObjKind::T(m, inner) if m == monad => Some(inner),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<&[Obj]> {
        match self.kind() {
            ObjKind::Prod(fs) => Some(fs),
            _ => None,
        }
    }

    /// Number of elements, or `None` if infinite or beyond [`ENUM_LIMIT`].
    pub fn size(&self) -> Option<usize> {
        let s = match self.kind() {
            ObjKind::Fin(set) => Some(set.size()),
            ObjKind::Prod(fs) => fs
                .iter()
                .try_fold(1usize, |acc, f| f.size().and_then(|s| acc.checked_mul(s))),
            ObjKind::Pow(inner) => inner.size().and_then(pow2),
            ObjKind::T(m, inner) => {
                let n = inner.size()?;
                match m {
                    Monad::Identity => Some(n),
                    Monad::Maybe => n.checked_add(1),
                    Monad::Exception(e) => n.checked_add(e.size()),
                    Monad::List { max_len } => words_upto(n, *max_len),
                    Monad::Powerset => pow2(n),
                    Monad::Continuation => pow2(n).and_then(pow2),
                }
            }
        }?;
        (s <= ENUM_LIMIT).then_some(s)
    }

    /// A finite set with one index per element (the table domain for predicates).
    pub fn carrier(&self) -> Result<FinSet> {
        let size = self.size().ok_or_else(|| self.not_enumerable())?;
        Ok(FinSet::new(self.to_string(), size))
    }

    fn not_enumerable(&self) -> Error {
        Error::BudgetExceeded {
            what: self.to_string(),
            needed: "an enumerable carrier".into(),
            budget: format!("{} elements", ENUM_LIMIT),
        }
    }

    /// Dense index of `e`; `None` when `e` is not an element or the object is not enumerable.
    pub fn index_of(&self, e: &Elem) -> Option<usize> {
        match (self.kind(), e) {
            (ObjKind::Fin(set), Elem::Atom(i)) => (*i < set.size()).then_some(*i),
            (ObjKind::Prod(fs), Elem::Tuple(xs)) if fs.len() == xs.len() => {
                let mut code = 0usize;
                for (f, x) in fs.iter().zip(xs.iter()) {
                    code = code.checked_mul(f.size()?)?.checked_add(f.index_of(x)?)?;
                }
                Some(code)
            }
            (ObjKind::Pow(inner), Elem::Pred(p)) => {
                (p.dom().size() == inner.size()? && p.dom().size() < 64)
                    .then(|| p.index().map(|k| k as usize))
                    .flatten()
            }
            (ObjKind::T(m, inner), Elem::Comp(t)) if t.monad() == m && t.base() == inner => {
                t.index_in(inner)
            }
            _ => None,
        }
    }

    /// Inverse of [`Obj::index_of`].
    pub fn element(&self, i: usize) -> Result<Elem> {
        let size = self.size().ok_or_else(|| self.not_enumerable())?;
        if i >= size {
            return Err(Error::IndexOutOfRange {
                set: self.to_string(),
                index: i,
                size,
            });
        }
        Ok(match self.kind() {
            ObjKind::Fin(_) => Elem::Atom(i),
            ObjKind::Prod(fs) => {
                let mut rest = i;
                let mut xs = vec![Elem::Atom(0); fs.len()];
                for (slot, f) in xs.iter_mut().zip(fs).rev() {
                    let s = f.size().expect("factor of enumerable product");
                    *slot = f.element(rest % s)?;
                    rest /= s;
                }
                Elem::tuple(xs)
            }
            ObjKind::Pow(inner) => Elem::Pred(Arc::new(Pred::from_index(&inner.carrier()?, i as u64))),
            ObjKind::T(m, inner) => Elem::Comp(TValue::enumerated(m, inner, i)?),
        })
    }

    pub fn elements(&self) -> Result<impl Iterator<Item = Elem> + '_> {
        let size = self.size().ok_or_else(|| self.not_enumerable())?;
        Ok((0..size).map(move |i| self.element(i).expect("index below size")))
    }

    /// Shallow membership test.
    pub fn check(&self, e: &Elem) -> Result<()> {
        let ok = match (self.kind(), e) {
            (ObjKind::Fin(set), Elem::Atom(i)) => *i < set.size(),
            (ObjKind::Prod(fs), Elem::Tuple(xs)) => {
                fs.len() == xs.len() && fs.iter().zip(xs.iter()).all(|(f, x)| f.check(x).is_ok())
            }
            (ObjKind::Pow(inner), Elem::Pred(p)) => Some(p.dom().size()) == inner.size(),
            (ObjKind::T(m, inner), Elem::Comp(t)) => t.monad() == m && t.base() == inner,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::mismatch(self, e))
        }
    }

    /// A random element; for objects too large to enumerate this draws from
    /// a structural distribution rather than uniformly.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Elem> {
        if let Some(size) = self.size() {
            if !matches!(self.kind(), ObjKind::T(Monad::Continuation, _)) || size <= 1 << 16 {
                return self.element(rng.gen_range(0..size.max(1)));
            }
        }
        Ok(match self.kind() {
            ObjKind::Fin(_) | ObjKind::Pow(_) if self.size().is_none() => {
                return Err(self.not_enumerable())
            }
            ObjKind::Fin(_) => unreachable!("finite carriers are enumerable"),
            ObjKind::Prod(fs) => Elem::tuple(fs.iter().map(|f| f.sample(rng)).collect::<Result<_>>()?),
            ObjKind::Pow(inner) => {
                let dom = inner.carrier()?;
                let bits = (0..dom.size()).map(|_| rng.gen_bool(0.5)).collect();
                Elem::Pred(Arc::new(Pred::new(dom, bits)?))
            }
            ObjKind::T(m, inner) => Elem::Comp(TValue::sample(m, inner, rng)?),
        })
    }
}

fn pow2(n: usize) -> Option<usize> {
    (n < 63).then(|| 1usize << n)
}

fn words_upto(n: usize, max_len: usize) -> Option<usize> {
    let mut total = 0usize;
    let mut layer = 1usize;
    for _ in 0..=max_len {
        total = total.checked_add(layer)?;
        layer = layer.checked_mul(n)?;
    }
    Some(total)
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ObjKind::Fin(set) => write!(f, "{}", set.name()),
            ObjKind::Prod(fs) => {
                write!(f, "(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "×")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            ObjKind::Pow(inner) => write!(f, "P({inner})"),
            ObjKind::T(m, inner) => write!(f, "{}({inner})", m.symbol()),
        }
    }
}

/// An element of some [`Obj`].
#[derive(Clone)]
pub enum Elem {
    Atom(usize),
    Tuple(Arc<[Elem]>),
    Pred(Arc<Pred>),
    Comp(TValue),
}

impl Elem {
    pub fn tuple(xs: Vec<Elem>) -> Self {
        Elem::Tuple(xs.into())
    }

    pub fn pair(a: Elem, b: Elem) -> Self {
        Elem::Tuple(Arc::from([a, b]))
    }

    pub fn bool(b: bool) -> Self {
        Elem::Atom(b as usize)
    }

    pub fn atom(&self) -> Option<usize> {
        match self {
            Elem::Atom(i) => Some(*i),
            _ => None,
        }
    }

    pub fn components(&self) -> Option<&[Elem]> {
        match self {
            Elem::Tuple(xs) => Some(xs),
            _ => None,
        }
    }

    pub fn as_pred(&self) -> Option<&Pred> {
        match self {
            Elem::Pred(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_comp(&self) -> Option<&TValue> {
        match self {
            Elem::Comp(t) => Some(t),
            _ => None,
        }
    }

    /// Structural equality, extensional on continuation values.
    pub fn equiv(&self, other: &Elem) -> Result<bool> {
        Ok(match (self, other) {
            (Elem::Atom(a), Elem::Atom(b)) => a == b,
            (Elem::Tuple(xs), Elem::Tuple(ys)) => {
                if xs.len() != ys.len() {
                    return Ok(false);
                }
                for (x, y) in xs.iter().zip(ys.iter()) {
                    if !x.equiv(y)? {
                        return Ok(false);
                    }
                }
                true
            }
            (Elem::Pred(p), Elem::Pred(q)) => p.bits() == q.bits(),
            (Elem::Comp(s), Elem::Comp(t)) => s.equiv(t)?,
            _ => false,
        })
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Atom(i) => write!(f, "{i}"),
            Elem::Tuple(xs) => {
                write!(f, "⟨")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "⟩")
            }
            Elem::Pred(p) => write!(f, "{p}"),
            Elem::Comp(t) => write!(f, "{t}"),
        }
    }
}

type ElemFn = dyn Fn(&Elem) -> Elem + Send + Sync;

/// A function between objects, given as a closure on elements.
#[derive(Clone)]
pub struct Morphism {
    dom: Obj,
    cod: Obj,
    f: Arc<ElemFn>,
}

impl Morphism {
    pub fn new(dom: Obj, cod: Obj, f: impl Fn(&Elem) -> Elem + Send + Sync + 'static) -> Self {
        Morphism {
            dom,
            cod,
            f: Arc::new(f),
        }
    }

    pub fn identity(obj: &Obj) -> Self {
        Morphism::new(obj.clone(), obj.clone(), Elem::clone)
    }

    pub fn from_finmap(map: &FinMap) -> Self {
        let table: Arc<[usize]> = map.table().into();
        Morphism::new(
            Obj::fin(map.dom().clone()),
            Obj::fin(map.cod().clone()),
            move |e| Elem::Atom(table[e.atom().expect("atom argument")]),
        )
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn apply(&self, e: &Elem) -> Elem {
        (self.f)(e)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.cod != next.dom {
            return Err(Error::mismatch(&next.dom, &self.cod));
        }
        let (f, g) = (self.f.clone(), next.f.clone());
        Ok(Morphism::new(self.dom.clone(), next.cod.clone(), move |e| g(&f(e))))
    }

    /// `l_y : X → X×Y`, `x ↦ ⟨x,y⟩`.
    pub fn pair_right(x: &Obj, y_obj: &Obj, y: Elem) -> Self {
        Morphism::new(x.clone(), Obj::pair(x, y_obj), move |e| Elem::pair(e.clone(), y.clone()))
    }

    /// `r_x : Y → X×Y`, `y ↦ ⟨x,y⟩`.
    pub fn pair_left(x_obj: &Obj, x: Elem, y: &Obj) -> Self {
        Morphism::new(y.clone(), Obj::pair(x_obj, y), move |e| Elem::pair(x.clone(), e.clone()))
    }

    /// `⟨π₂,π₁⟩ : X×Y → Y×X`.
    pub fn swap(x: &Obj, y: &Obj) -> Self {
        Morphism::new(Obj::pair(x, y), Obj::pair(y, x), |e| {
            let c = e.components().expect("pair");
            Elem::pair(c[1].clone(), c[0].clone())
        })
    }

    /// Canonical iso from a nested product onto the flat product of its leaves.
    pub fn flatten(dom: &Obj) -> Self {
        let cod = Obj::prod(flat_factors(dom));
        Morphism::new(dom.clone(), cod, flatten_deep)
    }
}

fn flat_factors(obj: &Obj) -> Vec<Obj> {
    match obj.kind() {
        ObjKind::Prod(fs) => fs.iter().flat_map(flat_factors).collect(),
        _ => vec![obj.clone()],
    }
}

fn flatten_deep(e: &Elem) -> Elem {
    fn collect(e: &Elem, out: &mut Vec<Elem>) {
        match e {
            Elem::Tuple(xs) => xs.iter().for_each(|x| collect(x, out)),
            other => out.push(other.clone()),
        }
    }
    let mut out = Vec::new();
    collect(e, &mut out);
    Elem::tuple(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: usize) -> Obj {
        Obj::fin(FinSet::new(format!("X{n}"), n))
    }

    #[test]
    fn index_round_trip_on_composite_objects() {
        let x = fin(2);
        let objs = vec![
            Obj::pair(&x, &fin(3)),
            Obj::pow(&x),
            Obj::t(&Monad::Maybe, &x),
            Obj::t(&Monad::Exception(FinSet::new("E", 2)), &x),
            Obj::t(&Monad::List { max_len: 2 }, &x),
            Obj::t(&Monad::Powerset, &x),
            Obj::t(&Monad::Continuation, &fin(1)),
            Obj::t(&Monad::Continuation, &x),
            Obj::t(&Monad::Powerset, &Obj::t(&Monad::Powerset, &x)),
        ];
        for obj in objs {
            let n = obj.size().unwrap();
            for i in 0..n {
                let e = obj.element(i).unwrap();
                obj.check(&e).unwrap();
                assert_eq!(obj.index_of(&e), Some(i), "{obj} index {i}");
            }
        }
    }

    #[test]
    fn sizes() {
        let x = fin(2);
        assert_eq!(Obj::t(&Monad::List { max_len: 3 }, &x).size(), Some(15));
        assert_eq!(Obj::t(&Monad::Continuation, &x).size(), Some(16));
        assert_eq!(Obj::t(&Monad::Continuation, &Obj::t(&Monad::Continuation, &x)).size(), None);
    }

    #[test]
    fn flatten_nested() {
        let e = Elem::pair(Elem::pair(Elem::Atom(0), Elem::Atom(1)), Elem::Atom(2));
        let m = Morphism::flatten(&Obj::pair(&Obj::pair(&fin(2), &fin(2)), &fin(3)));
        let flat = m.apply(&e);
        assert_eq!(flat.to_string(), "⟨0,1,2⟩");
        m.cod().check(&flat).unwrap();
    }
}
