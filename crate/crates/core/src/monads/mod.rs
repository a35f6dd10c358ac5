//! Monads on finite sets: functor action, unit and multiplication for the
//! identity, maybe, exception, list, covariant powerset and continuation
//! monads.
//!
//! Continuation values are evaluable functionals `P(X) → 2` rather than
//! truth tables, so `μ` stays computable at `C²(X)` and beyond; equality of
//! two continuation values is decided on demand by evaluating both on every
//! predicate of the base.

pub mod laws;
mod obj;

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};
use crate::fincore::{FinSet, Pred, DEFAULT_PRED_BUDGET};

pub use obj::{Elem, Morphism, Obj, ObjKind, ENUM_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monad {
    Identity,
    Maybe,
    /// `T(X) = X + E`.
    Exception(FinSet),
    /// Finite words; `max_len` bounds enumeration only.
    List { max_len: usize },
    /// Covariant powerset.
    Powerset,
    /// `C(X) = P²(X)`.
    Continuation,
}

impl Monad {
    pub fn exception(errors: usize) -> Self {
        Monad::Exception(FinSet::new("E", errors))
    }

    pub fn list(max_len: usize) -> Self {
        Monad::List { max_len }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Monad::Identity => "identity",
            Monad::Maybe => "maybe",
            Monad::Exception(_) => "exception",
            Monad::List { .. } => "list",
            Monad::Powerset => "powerset",
            Monad::Continuation => "continuation",
        }
    }

    pub(crate) fn symbol(&self) -> &'static str {
        match self {
            Monad::Identity => "Id",
            Monad::Maybe => "M",
            Monad::Exception(_) => "E",
            Monad::List { .. } => "L",
            Monad::Powerset => "P+",
            Monad::Continuation => "C",
        }
    }

    /// Whether `T(X)` is decidably comparable by structure (everything but continuations).
    pub fn is_concrete(&self) -> bool {
        !matches!(self, Monad::Continuation)
    }

    /// The six instances with the default test parameters (`|E| = 2`, list cap 3).
    pub fn all() -> Vec<Monad> {
        vec![
            Monad::Identity,
            Monad::Maybe,
            Monad::exception(2),
            Monad::list(3),
            Monad::Powerset,
            Monad::Continuation,
        ]
    }
}

/// Parameterized name such as `exception:2` or `list:3`; parsed back by [`FromStr`](std::str::FromStr).
impl Monad {
    pub fn key(&self) -> String {
        match self {
            Monad::Exception(e) => format!("exception:{}", e.size()),
            Monad::List { max_len } => format!("list:{max_len}"),
            other => other.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownMonad(pub String);

impl fmt::Display for UnknownMonad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown monad `{}`", self.0)
    }
}

impl std::error::Error for UnknownMonad {}

/// `identity`, `maybe`, `exception[:n]`, `list[:max_len]`, `powerset`, `continuation`.
impl std::str::FromStr for Monad {
    type Err = UnknownMonad;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || UnknownMonad(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a.parse::<usize>().map_err(|_| err())?)),
            None => (s, None),
        };
        Ok(match (name, arg) {
            ("identity", None) => Monad::Identity,
            ("maybe", None) => Monad::Maybe,
            ("exception", n) => Monad::exception(n.unwrap_or(2)),
            ("list", n) => Monad::list(n.unwrap_or(3)),
            ("powerset", None) => Monad::Powerset,
            ("continuation", None) => Monad::Continuation,
            _ => return Err(err()),
        })
    }
}

impl fmt::Display for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monad::Exception(e) => write!(f, "exception(|E|={})", e.size()),
            Monad::List { max_len } => write!(f, "list(max_len={max_len})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

type ContFn = dyn Fn(&dyn Fn(&Elem) -> bool) -> bool + Send + Sync;

/// An evaluable element of `C(X)`: given a continuation `h: X → 2`, an answer.
#[derive(Clone)]
pub struct Cont {
    eval: Arc<ContFn>,
    tag: Option<Arc<str>>,
}

impl Cont {
    pub fn new(f: impl Fn(&dyn Fn(&Elem) -> bool) -> bool + Send + Sync + 'static) -> Self {
        Cont {
            eval: Arc::new(f),
            tag: None,
        }
    }

    #[inline]
    pub fn eval(&self, h: &dyn Fn(&Elem) -> bool) -> bool {
        (self.eval)(h)
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }
}

#[derive(Clone)]
pub enum Payload {
    Identity(Arc<Elem>),
    Maybe(Option<Arc<Elem>>),
    Exception(std::result::Result<Arc<Elem>, usize>),
    List(Arc<[Elem]>),
    /// Sorted member indices into the base carrier.
    Powerset(Arc<[usize]>),
    Continuation(Cont),
}

/// An element of `T(X)` for a monad `T` and base object `X`.
#[derive(Clone)]
pub struct TValue {
    monad: Monad,
    base: Obj,
    payload: Payload,
}

impl TValue {
    fn raw(monad: Monad, base: Obj, payload: Payload) -> Self {
        TValue { monad, base, payload }
    }

    pub fn identity(base: &Obj, x: Elem) -> Result<Self> {
        base.check(&x)?;
        Ok(TValue::raw(Monad::Identity, base.clone(), Payload::Identity(Arc::new(x))))
    }

    pub fn maybe(base: &Obj, x: Option<Elem>) -> Result<Self> {
        if let Some(x) = &x {
            base.check(x)?;
        }
        Ok(TValue::raw(Monad::Maybe, base.clone(), Payload::Maybe(x.map(Arc::new))))
    }

    pub fn exception(errors: &FinSet, base: &Obj, x: std::result::Result<Elem, usize>) -> Result<Self> {
        let payload = match x {
            Ok(x) => {
                base.check(&x)?;
                Ok(Arc::new(x))
            }
            Err(k) => Err(errors.check(k)?),
        };
        Ok(TValue::raw(
            Monad::Exception(errors.clone()),
            base.clone(),
            Payload::Exception(payload),
        ))
    }

    pub fn list(max_len: usize, base: &Obj, word: Vec<Elem>) -> Result<Self> {
        for x in &word {
            base.check(x)?;
        }
        Ok(TValue::raw(Monad::list(max_len), base.clone(), Payload::List(word.into())))
    }

    pub fn powerset(base: &Obj, subset: Pred) -> Result<Self> {
        if Some(subset.dom().size()) != base.size() {
            return Err(Error::mismatch(base, subset.dom()));
        }
        Ok(TValue::raw(Monad::Powerset, base.clone(), Payload::Powerset(subset.members().collect())))
    }

    /// A subset given by member indices, in any order and possibly repeated.
    pub fn powerset_members(base: &Obj, mut members: Vec<usize>) -> Result<Self> {
        let n = base.size().ok_or_else(|| Error::mismatch("a finite base", base))?;
        members.sort_unstable();
        members.dedup();
        if let Some(&m) = members.last().filter(|&&m| m >= n) {
            return Err(Error::mismatch(format!("an index below {n}"), m));
        }
        Ok(TValue::raw(Monad::Powerset, base.clone(), Payload::Powerset(members.into())))
    }

    pub fn continuation(
        base: &Obj,
        f: impl Fn(&dyn Fn(&Elem) -> bool) -> bool + Send + Sync + 'static,
    ) -> Self {
        TValue::raw(Monad::Continuation, base.clone(), Payload::Continuation(Cont::new(f)))
    }

    /// Record how a value was built; shown in reports instead of a truth table.
    pub fn with_tag(mut self, tag: impl AsRef<str>) -> Self {
        if let Payload::Continuation(c) = &mut self.payload {
            c.tag = Some(Arc::from(tag.as_ref()));
        }
        self
    }

    pub fn monad(&self) -> &Monad {
        &self.monad
    }

    pub fn base(&self) -> &Obj {
        &self.base
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn cont(&self) -> Option<&Cont> {
        match &self.payload {
            Payload::Continuation(c) => Some(c),
            _ => None,
        }
    }

    pub fn tag(&self) -> Option<&str> {
        self.cont().and_then(Cont::tag)
    }

    pub fn eval(&self, h: &dyn Fn(&Elem) -> bool) -> Result<bool> {
        self.cont()
            .map(|c| c.eval(h))
            .ok_or_else(|| Error::MonadMismatch {
                expected: Monad::Continuation.to_string(),
                found: self.monad.to_string(),
            })
    }

    /// Evaluate a continuation value on a tabulated predicate over its base.
    pub fn eval_pred(&self, p: &Pred) -> Result<bool> {
        if Some(p.dom().size()) != self.base.size() {
            return Err(Error::mismatch(&self.base, p.dom()));
        }
        let base = &self.base;
        self.eval(&|e| p.get(base.index_of(e).expect("element of the base")))
    }

    /// The `i`-th element of `T(inner)` in the enumeration order of [`Obj::element`].
    pub(crate) fn enumerated(monad: &Monad, inner: &Obj, i: usize) -> Result<Self> {
        let n = inner.size().ok_or_else(|| Error::BudgetExceeded {
            what: inner.to_string(),
            needed: "an enumerable base".into(),
            budget: format!("{} elements", ENUM_LIMIT),
        })?;
        match monad {
            Monad::Identity => TValue::identity(inner, inner.element(i)?),
            Monad::Maybe => TValue::maybe(inner, if i < n { Some(inner.element(i)?) } else { None }),
            Monad::Exception(errors) => TValue::exception(
                errors,
                inner,
                if i < n { Ok(inner.element(i)?) } else { Err(i - n) },
            ),
            Monad::List { max_len } => {
                let (mut len, mut rest, mut layer) = (0usize, i, 1usize);
                while rest >= layer {
                    rest -= layer;
                    len += 1;
                    layer *= n;
                }
                let mut word = vec![Elem::Atom(0); len];
                for slot in word.iter_mut().rev() {
                    *slot = inner.element(rest % n)?;
                    rest /= n;
                }
                TValue::list(*max_len, inner, word)
            }
            Monad::Powerset => TValue::powerset_members(inner, (0..n).filter(|&j| j < 64 && (i >> j) & 1 == 1).collect()),
            Monad::Continuation => {
                let points: Arc<[Elem]> = inner.elements()?.collect::<Vec<_>>().into();
                let table = i as u64;
                Ok(TValue::continuation(inner, move |h| {
                    let k = points
                        .iter()
                        .enumerate()
                        .fold(0usize, |acc, (j, p)| acc | ((h(p) as usize) << j));
                    (table >> k) & 1 == 1
                })
                .with_tag(format!("#{i}")))
            }
        }
    }

    /// A random value; see [`Obj::sample`].
    pub(crate) fn sample<R: Rng + ?Sized>(monad: &Monad, inner: &Obj, rng: &mut R) -> Result<Self> {
        match monad {
            Monad::Identity => TValue::identity(inner, inner.sample(rng)?),
            Monad::Maybe => {
                let x = if rng.gen_bool(0.2) { None } else { Some(inner.sample(rng)?) };
                TValue::maybe(inner, x)
            }
            Monad::Exception(errors) => {
                let x = if errors.size() > 0 && rng.gen_bool(0.2) {
                    Err(rng.gen_range(0..errors.size()))
                } else {
                    Ok(inner.sample(rng)?)
                };
                TValue::exception(errors, inner, x)
            }
            Monad::List { max_len } => {
                let len = rng.gen_range(0..=*max_len);
                let word = (0..len).map(|_| inner.sample(rng)).collect::<Result<_>>()?;
                TValue::list(*max_len, inner, word)
            }
            Monad::Powerset => {
                let dom = inner.carrier()?;
                let bits = (0..dom.size()).map(|_| rng.gen_bool(0.5)).collect();
                TValue::powerset(inner, Pred::new(dom, bits)?)
            }
            Monad::Continuation => Ok(random_functional(inner, 5, rng)?),
        }
    }

    /// Dense index of this value inside the enumeration of `T(inner)`.
    pub(crate) fn index_in(&self, inner: &Obj) -> Option<usize> {
        let n = inner.size()?;
        match &self.payload {
            Payload::Identity(x) => inner.index_of(x),
            Payload::Maybe(Some(x)) => inner.index_of(x),
            Payload::Maybe(None) => Some(n),
            Payload::Exception(Ok(x)) => inner.index_of(x),
            Payload::Exception(Err(k)) => Some(n + k),
            Payload::List(word) => {
                let Monad::List { max_len } = self.monad else { return None };
                if word.len() > max_len {
                    return None;
                }
                let mut offset = 0usize;
                let mut layer = 1usize;
                for _ in 0..word.len() {
                    offset += layer;
                    layer *= n;
                }
                let mut code = 0usize;
                for x in word.iter() {
                    code = code * n + inner.index_of(x)?;
                }
                Some(offset + code)
            }
            Payload::Powerset(p) => {
                if n >= usize::BITS as usize {
                    return None;
                }
                Some(p.iter().fold(0usize, |acc, &i| acc | 1 << i))
            }
            Payload::Continuation(c) => {
                if n > 5 {
                    return None;
                }
                let mut code = 0usize;
                for k in 0..1u64 << n {
                    if c.eval(&|e| inner.index_of(e).is_some_and(|i| (k >> i) & 1 == 1)) {
                        code |= 1 << k;
                    }
                }
                Some(code)
            }
        }
    }

    /// Structural equality; continuation values are compared on every predicate of the base.
    pub fn equiv(&self, other: &TValue) -> Result<bool> {
        if self.monad != other.monad || self.base != other.base {
            return Ok(false);
        }
        Ok(match (&self.payload, &other.payload) {
            (Payload::Identity(a), Payload::Identity(b)) => a.equiv(b)?,
            (Payload::Maybe(a), Payload::Maybe(b)) => match (a, b) {
                (Some(a), Some(b)) => a.equiv(b)?,
                (None, None) => true,
                _ => false,
            },
            (Payload::Exception(a), Payload::Exception(b)) => match (a, b) {
                (Ok(a), Ok(b)) => a.equiv(b)?,
                (Err(a), Err(b)) => a == b,
                _ => false,
            },
            (Payload::List(a), Payload::List(b)) => {
                if a.len() != b.len() {
                    return Ok(false);
                }
                for (x, y) in a.iter().zip(b.iter()) {
                    if !x.equiv(y)? {
                        return Ok(false);
                    }
                }
                true
            }
            (Payload::Powerset(a), Payload::Powerset(b)) => a == b,
            (Payload::Continuation(a), Payload::Continuation(b)) => {
                self.distinguishing_pred_with(a, b)?.is_none()
            }
            _ => false,
        })
    }

    /// First predicate (binary-counter order) on which two continuation values differ.
    pub fn distinguishing_pred(&self, other: &TValue) -> Result<Option<Pred>> {
        match (&self.payload, &other.payload) {
            (Payload::Continuation(a), Payload::Continuation(b)) if self.base == other.base => {
                self.distinguishing_pred_with(a, b)
            }
            _ => Err(Error::mismatch(
                format!("two continuation values over {}", self.base),
                format!("{} and {}", self.monad, other.monad),
            )),
        }
    }

    fn distinguishing_pred_with(&self, a: &Cont, b: &Cont) -> Result<Option<Pred>> {
        let dom = self.base.carrier()?;
        if dom.size() > DEFAULT_PRED_BUDGET {
            return Err(Error::BudgetExceeded {
                what: format!("P({})", self.base),
                needed: format!("|X| = {}", dom.size()),
                budget: format!("|X| <= {}", DEFAULT_PRED_BUDGET),
            });
        }
        let base = &self.base;
        for k in 0..1u64 << dom.size() {
            let h = |e: &Elem| (k >> base.index_of(e).expect("element of the base")) & 1 == 1;
            if a.eval(&h) != b.eval(&h) {
                return Ok(Some(Pred::from_index(&dom, k)));
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for TValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self, Obj::t(&self.monad, &self.base))
    }
}

impl fmt::Display for TValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Identity(x) => write!(f, "{x}"),
            Payload::Maybe(Some(x)) => write!(f, "{x}"),
            Payload::Maybe(None) => write!(f, "⊥"),
            Payload::Exception(Ok(x)) => write!(f, "{x}"),
            Payload::Exception(Err(k)) => write!(f, "!e{k}"),
            Payload::List(word) if word.is_empty() => write!(f, "ε"),
            Payload::List(word) => {
                write!(f, "[")?;
                for (i, x) in word.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            Payload::Powerset(p) => {
                write!(f, "{{")?;
                for (n, &i) in p.iter().enumerate() {
                    if n > 0 {
                        write!(f, ",")?;
                    }
                    match self.base.element(i) {
                        Ok(e) => write!(f, "{e}")?,
                        Err(_) => write!(f, "#{i}")?,
                    }
                }
                write!(f, "}}")
            }
            Payload::Continuation(c) => {
                if let Some(tag) = c.tag() {
                    return write!(f, "{tag}");
                }
                match self.base.size() {
                    Some(n) if n <= 4 => {
                        write!(f, "λ[")?;
                        let base = &self.base;
                        for k in 0..1u64 << n {
                            let v = c.eval(&|e| base.index_of(e).is_some_and(|i| (k >> i) & 1 == 1));
                            write!(f, "{}", v as u8)?;
                        }
                        write!(f, "]")
                    }
                    _ => write!(f, "λ<{}>", self.base),
                }
            }
        }
    }
}

/// A functional on `P(base)` defined by a random truth table over the
/// restrictions of predicates to at most `points` sample elements.
pub fn random_functional<R: Rng + ?Sized>(base: &Obj, points: usize, rng: &mut R) -> Result<TValue> {
    let sample: Vec<Elem> = match base.size() {
        Some(n) if n <= points => base.elements()?.collect(),
        _ => (0..points).map(|_| base.sample(rng)).collect::<Result<_>>()?,
    };
    let table: Vec<bool> = (0..1usize << sample.len()).map(|_| rng.gen_bool(0.5)).collect();
    let sample: Arc<[Elem]> = sample.into();
    let table: Arc<[bool]> = table.into();
    Ok(TValue::continuation(base, move |h| {
        let k = sample
            .iter()
            .enumerate()
            .fold(0usize, |acc, (j, p)| acc | ((h(p) as usize) << j));
        table[k]
    })
    .with_tag("rand"))
}

fn check_monad(monad: &Monad, t: &TValue) -> Result<()> {
    if t.monad() != monad {
        return Err(Error::MonadMismatch {
            expected: monad.to_string(),
            found: t.monad().to_string(),
        });
    }
    Ok(())
}

fn inner_value(e: &Elem) -> Result<&TValue> {
    e.as_comp().ok_or_else(|| Error::mismatch("a nested computation", e))
}

/// Functor action `T(f)`.
pub fn t_map(monad: &Monad, f: &Morphism, t: &TValue) -> Result<TValue> {
    check_monad(monad, t)?;
    if t.base() != f.dom() {
        return Err(Error::mismatch(f.dom(), t.base()));
    }
    let cod = f.cod();
    let payload = match &t.payload {
        Payload::Identity(x) => Payload::Identity(Arc::new(f.apply(x))),
        Payload::Maybe(x) => Payload::Maybe(x.as_ref().map(|x| Arc::new(f.apply(x)))),
        Payload::Exception(x) => {
            Payload::Exception(x.as_ref().map(|x| Arc::new(f.apply(x))).map_err(|k| *k))
        }
        Payload::List(word) => Payload::List(word.iter().map(|x| f.apply(x)).collect()),
        Payload::Powerset(p) => {
            let mut image = Vec::with_capacity(p.len());
            for &i in p.iter() {
                let y = f.apply(&t.base.element(i)?);
                image.push(cod.index_of(&y).ok_or_else(|| Error::mismatch(cod, &y))?);
            }
            return TValue::powerset_members(cod, image);
        }
        Payload::Continuation(q) => {
            let (q, f) = (q.clone(), f.clone());
            Payload::Continuation(Cont::new(move |h| q.eval(&|x| h(&f.apply(x)))))
        }
    };
    Ok(TValue::raw(monad.clone(), cod.clone(), payload))
}

/// Unit `η_X(x)`.
pub fn t_unit(monad: &Monad, base: &Obj, x: Elem) -> Result<TValue> {
    base.check(&x)?;
    match monad {
        Monad::Identity => TValue::identity(base, x),
        Monad::Maybe => TValue::maybe(base, Some(x)),
        Monad::Exception(errors) => TValue::exception(errors, base, Ok(x)),
        Monad::List { max_len } => TValue::list(*max_len, base, vec![x]),
        Monad::Powerset => {
            let i = base.index_of(&x).ok_or_else(|| Error::mismatch(base, &x))?;
            TValue::powerset_members(base, vec![i])
        }
        Monad::Continuation => {
            let tag = format!("η({x})");
            Ok(TValue::continuation(base, move |h| h(&x)).with_tag(tag))
        }
    }
}

/// Multiplication `μ_X : T²(X) → T(X)`; `tt` must have base `T(X)`.
pub fn t_mult(monad: &Monad, tt: &TValue) -> Result<TValue> {
    check_monad(monad, tt)?;
    let base = tt
        .base()
        .under(monad)
        .ok_or_else(|| Error::mismatch(format!("{}(…) base", monad.symbol()), tt.base()))?
        .clone();
    match &tt.payload {
        Payload::Identity(x) => Ok(inner_value(x)?.clone()),
        Payload::Maybe(None) => TValue::maybe(&base, None),
        Payload::Maybe(Some(x)) => Ok(inner_value(x)?.clone()),
        Payload::Exception(Err(k)) => {
            let Monad::Exception(errors) = monad else { unreachable!() };
            TValue::exception(errors, &base, Err(*k))
        }
        Payload::Exception(Ok(x)) => Ok(inner_value(x)?.clone()),
        Payload::List(words) => {
            let mut flat = Vec::new();
            for w in words.iter() {
                match &inner_value(w)?.payload {
                    Payload::List(letters) => flat.extend(letters.iter().cloned()),
                    _ => return Err(Error::mismatch("a word", w)),
                }
            }
            let Monad::List { max_len } = monad else { unreachable!() };
            TValue::list(*max_len, &base, flat)
        }
        Payload::Powerset(big) => {
            // μ(H)(x) = ⋁_{h ∈ P(X)} H(h) ∧ h(x)
            let mut flat = Vec::new();
            for &hi in big.iter() {
                let h = tt.base().element(hi)?;
                let Payload::Powerset(h) = &inner_value(&h)?.payload else {
                    return Err(Error::mismatch("a subset", &h));
                };
                flat.extend(h.iter().copied());
            }
            TValue::powerset_members(&base, flat)
        }
        Payload::Continuation(big) => {
            // μ(F)(h) = F(λD. D(h))
            let big = big.clone();
            Ok(TValue::continuation(&base, move |h| {
                big.eval(&|d| {
                    d.as_comp()
                        .and_then(TValue::cont)
                        .expect("continuation of continuations")
                        .eval(h)
                })
            }))
        }
    }
}

/// `η_X` as a morphism `X → T(X)`.
pub fn unit_morphism(monad: &Monad, x: &Obj) -> Morphism {
    let m = monad.clone();
    let base = x.clone();
    Morphism::new(x.clone(), Obj::t(monad, x), move |e| {
        Elem::Comp(t_unit(&m, &base, e.clone()).expect("unit on an element of the base"))
    })
}

/// `μ_X` as a morphism `T²(X) → T(X)`.
pub fn mult_morphism(monad: &Monad, x: &Obj) -> Morphism {
    let m = monad.clone();
    let tx = Obj::t(monad, x);
    Morphism::new(Obj::t(monad, &tx), tx, move |e| {
        Elem::Comp(t_mult(&m, e.as_comp().expect("nested computation")).expect("well-typed μ"))
    })
}

/// `T(f)` as a morphism `T(X) → T(Y)`.
pub fn map_morphism(monad: &Monad, f: &Morphism) -> Morphism {
    let (m, f2) = (monad.clone(), f.clone());
    Morphism::new(Obj::t(monad, f.dom()), Obj::t(monad, f.cod()), move |e| {
        Elem::Comp(t_map(&m, &f2, e.as_comp().expect("computation")).expect("well-typed T(f)"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: usize) -> Obj {
        Obj::fin(FinSet::new(format!("X{n}"), n))
    }

    fn word(letters: &[usize]) -> Vec<Elem> {
        letters.iter().map(|&i| Elem::Atom(i)).collect()
    }

    #[test]
    fn maybe_map_keeps_bottom() {
        let x = fin(2);
        let f = Morphism::new(x.clone(), fin(3), |e| Elem::Atom(e.atom().unwrap() + 1));
        let bottom = TValue::maybe(&x, None).unwrap();
        assert_eq!(t_map(&Monad::Maybe, &f, &bottom).unwrap().to_string(), "⊥");
        let one = TValue::maybe(&x, Some(Elem::Atom(1))).unwrap();
        assert_eq!(t_map(&Monad::Maybe, &f, &one).unwrap().to_string(), "2");
    }

    #[test]
    fn list_map_is_letterwise() {
        let x = fin(3);
        let f = Morphism::new(x.clone(), fin(2), |e| Elem::Atom(e.atom().unwrap() % 2));
        let w = TValue::list(3, &x, word(&[0, 1, 2])).unwrap();
        assert_eq!(t_map(&Monad::list(3), &f, &w).unwrap().to_string(), "[0,1,0]");
    }

    #[test]
    fn continuation_map_identity_is_identity() {
        let x = fin(2);
        for q in Obj::t(&Monad::Continuation, &x).elements().unwrap() {
            let q = q.as_comp().unwrap();
            let mapped = t_map(&Monad::Continuation, &Morphism::identity(&x), q).unwrap();
            assert!(mapped.equiv(q).unwrap());
        }
    }

    #[test]
    fn units() {
        let x = fin(3);
        let p = t_unit(&Monad::Powerset, &x, Elem::Atom(1)).unwrap();
        assert_eq!(p.to_string(), "{1}");
        let l = t_unit(&Monad::list(3), &x, Elem::Atom(2)).unwrap();
        assert_eq!(l.to_string(), "[2]");
        let c = t_unit(&Monad::Continuation, &fin(2), Elem::Atom(0)).unwrap();
        for k in 0..4u64 {
            let h = Pred::from_index(&FinSet::new("X2", 2), k);
            assert_eq!(c.eval_pred(&h).unwrap(), h.get(0));
        }
        assert!(t_unit(&Monad::Maybe, &x, Elem::Atom(3)).is_err());
    }

    #[test]
    fn list_mult_flattens() {
        let x = fin(5);
        let inner = |ls: &[usize]| Elem::Comp(TValue::list(3, &x, word(ls)).unwrap());
        let tt = TValue::list(
            3,
            &Obj::t(&Monad::list(3), &x),
            vec![inner(&[0, 1]), inner(&[2, 3, 4]), inner(&[])],
        )
        .unwrap();
        assert_eq!(t_mult(&Monad::list(3), &tt).unwrap().to_string(), "[0,1,2,3,4]");
    }

    #[test]
    fn maybe_mult_collapses_bottoms() {
        let x = fin(2);
        let outer_bottom = TValue::maybe(&Obj::t(&Monad::Maybe, &x), None).unwrap();
        assert_eq!(t_mult(&Monad::Maybe, &outer_bottom).unwrap().to_string(), "⊥");
        let inner_bottom = Elem::Comp(TValue::maybe(&x, None).unwrap());
        let wrapped = TValue::maybe(&Obj::t(&Monad::Maybe, &x), Some(inner_bottom)).unwrap();
        assert_eq!(t_mult(&Monad::Maybe, &wrapped).unwrap().to_string(), "⊥");
    }

    #[test]
    fn continuation_left_unit_instance() {
        let x = fin(1);
        let cx = Obj::t(&Monad::Continuation, &x);
        for q in cx.elements().unwrap() {
            let lifted = t_unit(&Monad::Continuation, &cx, q.clone()).unwrap();
            let back = t_mult(&Monad::Continuation, &lifted).unwrap();
            assert!(back.equiv(q.as_comp().unwrap()).unwrap());
        }
    }

    #[test]
    fn powerset_mult_is_union() {
        let x = fin(3);
        let px = Obj::t(&Monad::Powerset, &x);
        let a = px.index_of(&Elem::Comp(TValue::powerset(&x, Pred::from_elements(&x.carrier().unwrap(), &[0]).unwrap()).unwrap())).unwrap();
        let b = px.index_of(&Elem::Comp(TValue::powerset(&x, Pred::from_elements(&x.carrier().unwrap(), &[2]).unwrap()).unwrap())).unwrap();
        let big = TValue::powerset(&px, Pred::from_elements(&px.carrier().unwrap(), &[a, b]).unwrap()).unwrap();
        assert_eq!(t_mult(&Monad::Powerset, &big).unwrap().to_string(), "{0,2}");
    }

    #[test]
    fn mult_rejects_flat_value() {
        let x = fin(2);
        let flat = TValue::list(3, &x, word(&[0])).unwrap();
        assert!(t_mult(&Monad::list(3), &flat).is_err());
        assert!(t_mult(&Monad::Maybe, &flat).is_err());
    }
}
