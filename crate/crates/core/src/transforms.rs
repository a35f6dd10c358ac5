//! T-transforms of binary maps, CPS application, and the epsilon and
//! Mostowski map families.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincore::{all_preds, product, FinSet, Pred, DEFAULT_PRED_BUDGET};
use crate::gen::t_family;
use crate::monads::laws::{LawBudget, LawReport, Mode};
use crate::monads::{t_map, t_mult, t_unit, Elem, Monad, Morphism, Obj, TValue};
use crate::strengths::{pile_left, pile_right, pul_cont, pur_cont, st_left};

/// Which pile-up a transform is built on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    pub fn letter(self) -> char {
        match self {
            Side::Left => 'l',
            Side::Right => 'r',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// `pu^ε` via the defining diagrams.
pub fn pile(side: Side, s: &TValue, t: &TValue) -> Result<TValue> {
    match side {
        Side::Left => pile_left(s, t),
        Side::Right => pile_right(s, t),
    }
}

/// `pu^ε` for continuation values in closed form.
pub fn pile_cont(side: Side, m: &TValue, n: &TValue) -> Result<TValue> {
    match side {
        Side::Left => pul_cont(m, n),
        Side::Right => pur_cont(m, n),
    }
}

type BinFn = dyn Fn(&Elem, &Elem) -> TValue + Send + Sync;

/// A total map `f: X×Y → T(Z)`.
#[derive(Clone)]
pub struct BinMapIntoT {
    x: Obj,
    y: Obj,
    z: Obj,
    monad: Monad,
    f: Arc<BinFn>,
}

impl BinMapIntoT {
    pub fn new(
        monad: &Monad,
        x: &Obj,
        y: &Obj,
        z: &Obj,
        f: impl Fn(&Elem, &Elem) -> TValue + Send + Sync + 'static,
    ) -> Self {
        BinMapIntoT {
            x: x.clone(),
            y: y.clone(),
            z: z.clone(),
            monad: monad.clone(),
            f: Arc::new(f),
        }
    }

    /// `η_Z ∘ g` for a plain map `g: X×Y → Z`.
    pub fn pure(monad: &Monad, g: &Morphism) -> Result<Self> {
        let fs = g.dom().factors().filter(|fs| fs.len() == 2).ok_or_else(|| Error::mismatch("a binary product", g.dom()))?;
        let (m, g2, z) = (monad.clone(), g.clone(), g.cod().clone());
        Ok(BinMapIntoT::new(monad, &fs[0], &fs[1], g.cod(), move |a, b| {
            t_unit(&m, &z, g2.apply(&Elem::pair(a.clone(), b.clone()))).expect("value in the codomain")
        }))
    }

    pub fn apply(&self, a: &Elem, b: &Elem) -> TValue {
        (self.f)(a, b)
    }

    fn as_morphism(&self) -> Morphism {
        let f = self.f.clone();
        Morphism::new(Obj::pair(&self.x, &self.y), Obj::t(&self.monad, &self.z), move |e| {
            let c = e.components().expect("pair");
            Elem::Comp(f(&c[0], &c[1]))
        })
    }
}

/// `tr^ε(f) = μ_Z ∘ T(f) ∘ pu^ε`.
pub fn tr(side: Side, f: &BinMapIntoT, s: &TValue, t: &TValue) -> Result<TValue> {
    for v in [s, t] {
        if *v.monad() != f.monad {
            return Err(Error::MonadMismatch {
                expected: f.monad.to_string(),
                found: v.monad().to_string(),
            });
        }
    }
    if *s.base() != f.x || *t.base() != f.y {
        return Err(Error::mismatch(format!("{}×{}", f.x, f.y), format!("{}×{}", s.base(), t.base())));
    }
    t_mult(&f.monad, &t_map(&f.monad, &f.as_morphism(), &pile(side, s, t)?)?)
}

pub fn tr_left(f: &BinMapIntoT, s: &TValue, t: &TValue) -> Result<TValue> {
    tr(Side::Left, f, s, t)
}

pub fn tr_right(f: &BinMapIntoT, s: &TValue, t: &TValue) -> Result<TValue> {
    tr(Side::Right, f, s, t)
}

/// `cps^ε(f) = C(f) ∘ pu^ε` for `f: X×Y → Z`, using the diagram pile-ups.
pub fn cps(side: Side, f: &Morphism, m: &TValue, n: &TValue) -> Result<TValue> {
    let p = pile(side, m, n)?;
    if p.base() != f.dom() {
        return Err(Error::mismatch(f.dom(), p.base()));
    }
    t_map(&Monad::Continuation, f, &p)
}

/// `cps^l(f)(M,N) = λh. M(λa. N(λb. h(f(a,b))))`, and the mirror image for `r`.
pub fn cps_closed(side: Side, f: &Morphism, m: &TValue, n: &TValue) -> Result<TValue> {
    let expect = Obj::pair(m.base(), n.base());
    if *f.dom() != expect {
        return Err(Error::mismatch(f.dom(), expect));
    }
    let (qm, qn) = (cont(m)?.clone(), cont(n)?.clone());
    let f = f.clone();
    let cod = f.cod().clone();
    Ok(match side {
        Side::Left => TValue::continuation(&cod, move |h| {
            qm.eval(&|a| qn.eval(&|b| h(&f.apply(&Elem::pair(a.clone(), b.clone())))))
        }),
        Side::Right => TValue::continuation(&cod, move |h| {
            qn.eval(&|b| qm.eval(&|a| h(&f.apply(&Elem::pair(a.clone(), b.clone())))))
        }),
    })
}

fn cont(v: &TValue) -> Result<&crate::monads::Cont> {
    v.cont().ok_or_else(|| Error::MonadMismatch {
        expected: Monad::Continuation.to_string(),
        found: v.monad().to_string(),
    })
}

/// Function spaces `X ⇒ Y` larger than this are refused.
pub const FUN_SPACE_LIMIT: usize = 4096;

/// `X ⇒ Y` materialized as a finite set of tables; table `g` sends `x` to
/// digit `x` of `g` in base `|Y|`, most significant digit first.
#[derive(Clone, Debug)]
pub struct FunSpace {
    pub x: FinSet,
    pub y: FinSet,
    pub set: FinSet,
}

impl FunSpace {
    pub fn new(x: &FinSet, y: &FinSet) -> Result<Self> {
        let size = (0..x.size()).try_fold(1usize, |acc, _| acc.checked_mul(y.size()));
        match size {
            Some(n) if n <= FUN_SPACE_LIMIT => Ok(FunSpace {
                x: x.clone(),
                y: y.clone(),
                set: FinSet::new(format!("({}⇒{})", x.name(), y.name()), n),
            }),
            _ => Err(Error::BudgetExceeded {
                what: format!("{}⇒{}", x, y),
                needed: format!("{}^{} tables", y.size(), x.size()),
                budget: format!("{FUN_SPACE_LIMIT} tables"),
            }),
        }
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        let shift = self.x.size() - 1 - x;
        (g / self.y.size().pow(shift as u32)) % self.y.size()
    }

    pub fn index_of(&self, table: &[usize]) -> usize {
        table.iter().fold(0, |acc, &v| acc * self.y.size() + v)
    }

    /// `ev: X × (X⇒Y) → Y`.
    pub fn ev(&self) -> Morphism {
        let this = self.clone();
        Morphism::new(
            Obj::pair(&Obj::fin(self.x.clone()), &Obj::fin(self.set.clone())),
            Obj::fin(self.y.clone()),
            move |e| {
                let c = e.components().expect("pair");
                Elem::Atom(this.apply(c[1].atom().expect("table"), c[0].atom().expect("argument")))
            },
        )
    }
}

/// `cps^ε(ev)(M, N)` for `M ∈ C(X)`, `N ∈ C(X⇒Y)`.
pub fn cps_ev(side: Side, fs: &FunSpace, m: &TValue, n: &TValue) -> Result<TValue> {
    cps_closed(side, &fs.ev(), m, n)
}

pub fn cps_left_ev(fs: &FunSpace, m: &TValue, n: &TValue) -> Result<TValue> {
    cps_ev(Side::Left, fs, m, n)
}

pub fn cps_right_ev(fs: &FunSpace, m: &TValue, n: &TValue) -> Result<TValue> {
    cps_ev(Side::Right, fs, m, n)
}

/// `P(X₁×…×Xₙ)`, with a single factor giving `P(X₁)`.
pub fn pred_obj(factors: &[FinSet]) -> Obj {
    Obj::pow(&prod_obj(factors))
}

pub fn prod_obj(factors: &[FinSet]) -> Obj {
    match factors {
        [one] => Obj::fin(one.clone()),
        _ => Obj::prod(factors.iter().cloned().map(Obj::fin).collect()),
    }
}

fn pred_carrier(factors: &[FinSet]) -> Result<FinSet> {
    prod_obj(factors).carrier()
}

/// Decode a carrier index of `X₁×…×Xₙ` into factor indices.
pub fn decode(factors: &[FinSet], i: usize) -> Result<Vec<usize>> {
    product(factors)?.decode(i)
}

pub fn encode(factors: &[FinSet], t: &[usize]) -> Result<usize> {
    product(factors)?.encode(t)
}

/// Slice `c ∈ P(X₁×…×Xₙ)` at `x_at = y`, giving a predicate on the remaining factors.
pub fn slice(c: &Pred, factors: &[FinSet], at: usize, y: usize) -> Result<Pred> {
    check_pred(c, factors)?;
    factors.get(at).ok_or(Error::Arity(at + 1))?.check(y)?;
    let rest = remove(factors, at);
    let rest_prod = product(&rest)?;
    let full = product(factors)?;
    let mut bits = Vec::with_capacity(rest_prod.carrier().size());
    for i in 0..rest_prod.carrier().size() {
        let mut t = rest_prod.decode(i)?;
        t.insert(at, y);
        bits.push(c.get(full.encode(&t)?));
    }
    Pred::new(pred_carrier(&rest)?, bits)
}

fn remove(factors: &[FinSet], at: usize) -> Vec<FinSet> {
    let mut rest = factors.to_vec();
    rest.remove(at);
    rest
}

fn check_pred(c: &Pred, factors: &[FinSet]) -> Result<()> {
    let size = product(factors)?.carrier().size();
    if c.dom().size() != size {
        return Err(Error::mismatch(pred_obj(factors), c.dom()));
    }
    Ok(())
}

/// `epsl(h, x) = h(x)`.
pub fn eps_left(h: &Pred, x: usize) -> Result<bool> {
    h.dom().check(x)?;
    Ok(h.get(x))
}

/// `epsr(x, h) = h(x)`.
pub fn eps_right(x: usize, h: &Pred) -> Result<bool> {
    eps_left(h, x)
}

/// `epsl(c, y) = λx. c(x,y)`, removing factor `at`.
pub fn eps_left_partial(c: &Pred, factors: &[FinSet], at: usize, y: usize) -> Result<Pred> {
    slice(c, factors, at, y)
}

/// `epsr(y, c) = λx. c(x,y)`, removing factor `at`.
pub fn eps_right_partial(y: usize, c: &Pred, factors: &[FinSet], at: usize) -> Result<Pred> {
    slice(c, factors, at, y)
}

/// An epsilon map as a morphism: evaluation of a predicate over `factors`
/// at factor `at`; total (into `2`) when there is only one factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eps {
    pub side: Side,
    pub factors: Vec<FinSet>,
    pub at: usize,
}

impl Eps {
    pub fn left(factors: &[FinSet], at: usize) -> Self {
        Eps { side: Side::Left, factors: factors.to_vec(), at }
    }

    pub fn right(factors: &[FinSet], at: usize) -> Self {
        Eps { side: Side::Right, factors: factors.to_vec(), at }
    }

    pub fn is_total(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn point(&self) -> Obj {
        Obj::fin(self.factors[self.at].clone())
    }

    pub fn dom(&self) -> Obj {
        match self.side {
            Side::Left => Obj::pair(&pred_obj(&self.factors), &self.point()),
            Side::Right => Obj::pair(&self.point(), &pred_obj(&self.factors)),
        }
    }

    pub fn cod(&self) -> Obj {
        if self.is_total() {
            Obj::two()
        } else {
            pred_obj(&remove(&self.factors, self.at))
        }
    }

    pub fn apply(&self, c: &Pred, y: usize) -> Result<Elem> {
        if self.is_total() {
            Ok(Elem::bool(eps_left(c, y)?))
        } else {
            Ok(Elem::Pred(Arc::new(slice(c, &self.factors, self.at, y)?)))
        }
    }

    pub fn morphism(&self) -> Morphism {
        let this = self.clone();
        Morphism::new(self.dom(), self.cod(), move |e| {
            let c = e.components().expect("pair");
            let (p, y) = match this.side {
                Side::Left => (&c[0], &c[1]),
                Side::Right => (&c[1], &c[0]),
            };
            this.apply(p.as_pred().expect("predicate"), y.atom().expect("point"))
                .expect("well-typed epsilon")
        })
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eps{}_{}", self.side, self.factors[self.at].name())
    }
}

/// `mosl(Q, c) = Q(c)`.
pub fn mos_left(q: &TValue, c: &Pred) -> Result<bool> {
    q.eval_pred(c)
}

/// `mosr(c, Q) = Q(c)`.
pub fn mos_right(c: &Pred, q: &TValue) -> Result<bool> {
    q.eval_pred(c)
}

/// `mosl(Q, c) = λx. Q(λy. c(x,y))` with `Q` over factor `at` of `c`'s domain.
pub fn mos_left_partial(q: &TValue, c: &Pred, factors: &[FinSet], at: usize) -> Result<Pred> {
    check_pred(c, factors)?;
    let y = factors.get(at).ok_or(Error::Arity(at + 1))?;
    if q.base().size() != Some(y.size()) {
        return Err(Error::mismatch(y, q.base()));
    }
    let rest = remove(factors, at);
    let rest_prod = product(&rest)?;
    let full = product(factors)?;
    let q = cont(q)?;
    let mut bits = Vec::with_capacity(rest_prod.carrier().size());
    for i in 0..rest_prod.carrier().size() {
        let t = rest_prod.decode(i)?;
        bits.push(q.eval(&|e| {
            let mut u = t.clone();
            u.insert(at, e.atom().expect("atom"));
            c.get(full.encode(&u).expect("in range"))
        }));
    }
    Pred::new(pred_carrier(&rest)?, bits)
}

/// `mosr(c, Q) = λx. Q(λy. c(x,y))`.
pub fn mos_right_partial(c: &Pred, q: &TValue, factors: &[FinSet], at: usize) -> Result<Pred> {
    mos_left_partial(q, c, factors, at)
}

/// `ev_{id₂}: C(2) → 2`, `Q ↦ Q(id)`.
pub fn ev_id(q: &TValue) -> Result<bool> {
    if *q.base() != Obj::two() {
        return Err(Error::mismatch(Obj::two(), q.base()));
    }
    q.eval(&|e| e.atom() == Some(1))
}

fn differ_bool(lhs: bool, rhs: bool, input: impl FnOnce() -> String) -> Option<String> {
    (lhs != rhs).then(|| format!("{} ↦ {lhs} vs {rhs}", input()))
}

/// `mosl_X = ev_{id₂} ∘ C(epsr_X) ∘ stl`, and `mosr` agreeing with `mosl`.
pub fn check_mostowski_lemma(x: &FinSet, budget: &LawBudget) -> Result<LawReport> {
    let mut report = LawReport::new("mostowski lemma", &Monad::Continuation, &[x.size()]);
    let (qs, mode) = t_family(&Monad::Continuation, x, budget, 71)?;
    let hs: Vec<Pred> = all_preds(x, DEFAULT_PRED_BUDGET)?.collect();
    let cells: Vec<(&TValue, &Pred)> = qs.iter().flat_map(|q| hs.iter().map(move |h| (q, h))).collect();
    let px = pred_obj(std::slice::from_ref(x));
    let epsr = Eps::right(std::slice::from_ref(x), 0).morphism();
    report.run("mosl = ev∘C(epsr)∘stl", format!("C({x})×P({x})"), mode, &cells, |(q, h)| {
        let lifted = st_left(q, &px, &Elem::Pred(Arc::new((*h).clone())))?;
        let rhs = ev_id(&t_map(&Monad::Continuation, &epsr, &lifted)?)?;
        Ok(differ_bool(mos_left(q, h)?, rhs, || format!("({q},{h})")))
    });
    report.run("mosr = mosl", format!("P({x})×C({x})"), mode, &cells, |(q, h)| {
        Ok(differ_bool(mos_left(q, h)?, mos_right(h, q)?, || format!("({q},{h})")))
    });
    Ok(report)
}

/// CPS application: the closed form agrees with the T-transform of `η∘ev`,
/// and left and right agree when either argument is a unit.
pub fn check_cps(x: &FinSet, y: &FinSet, budget: &LawBudget) -> Result<LawReport> {
    let c = Monad::Continuation;
    let mut report = LawReport::new("cps application", &c, &[x.size(), y.size()]);
    let fs = FunSpace::new(x, y)?;
    let (ms, mode_m) = t_family(&c, x, budget, 73)?;
    let (ns, mode_n) = t_family(&c, &fs.set, budget, 79)?;
    let eta_ev = BinMapIntoT::pure(&c, &fs.ev())?;
    let yo = Obj::fin(y.clone());
    let equal = |a: &TValue, b: &TValue, what: String| -> Result<Option<String>> {
        Ok((!a.equiv(b)?).then(|| format!("{what} ↦ {a} vs {b}")))
    };

    let pairs: Vec<(&TValue, &TValue)> = ms.iter().flat_map(|m| ns.iter().map(move |n| (m, n))).collect();
    let mode = if mode_m == Mode::Exhaustive { mode_n } else { mode_m };
    for side in Side::BOTH {
        report.run(&format!("cps{side}(ev) = tr{side}(η∘ev)"), format!("C({x})×C({})", fs.set), mode, &pairs, |(m, n)| {
            equal(&cps_ev(side, &fs, m, n)?, &tr(side, &eta_ev, m, n)?, format!("({m},{n})"))
        });
    }

    let gs: Vec<usize> = fs.set.elements().collect();
    let cells: Vec<(&TValue, usize)> = ms.iter().flat_map(|m| gs.iter().map(move |&g| (m, g))).collect();
    let fo = Obj::fin(fs.set.clone());
    report.run("cpsl(M,η g) = cpsr(M,η g)", format!("C({x})×({})", fs.set), mode_m, &cells, |(m, g)| {
        let eta = t_unit(&c, &fo, Elem::Atom(*g))?;
        equal(&cps_left_ev(&fs, m, &eta)?, &cps_right_ev(&fs, m, &eta)?, format!("({m},{g})"))
    });
    let xo = Obj::fin(x.clone());
    let cells: Vec<(usize, &TValue)> = x.elements().flat_map(|a| ns.iter().map(move |n| (a, n))).collect();
    report.run("cpsl(η x,N) = cpsr(η x,N)", format!("{x}×C({})", fs.set), mode_n, &cells, |(a, n)| {
        let eta = t_unit(&c, &xo, Elem::Atom(*a))?;
        equal(&cps_left_ev(&fs, &eta, n)?, &cps_right_ev(&fs, &eta, n)?, format!("({a},{n})"))
    });
    let cells: Vec<(usize, usize)> = x.elements().flat_map(|a| gs.iter().map(move |&g| (a, g))).collect();
    report.run("cps(η x,η g) = η(g x)", format!("{x}×({})", fs.set), Mode::Exhaustive, &cells, |(a, g)| {
        let r = cps_left_ev(&fs, &t_unit(&c, &xo, Elem::Atom(*a))?, &t_unit(&c, &fo, Elem::Atom(*g))?)?;
        equal(&r, &t_unit(&c, &yo, Elem::Atom(fs.apply(*g, *a)))?, format!("({a},{g})"))
    });
    Ok(report)
}
