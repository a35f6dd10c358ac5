//! Canonical strengths, pile-ups and their checkers.
//!
//! `st_left`/`st_right` and `pile_left`/`pile_right` are built from the
//! functor action, unit and multiplication exactly as in the defining
//! diagrams, so they work for every [`Monad`]. The `*_cont` variants are the
//! closed λ-forms for the continuation monad; the checkers compare the two.

use std::fmt;

use crate::error::{Error, Result};
use crate::fincore::{FinSet, Pred};
use crate::gen::{cont_family, index_tuples, t_family};
use crate::monads::laws::{family, LawBudget, LawReport, Mode};
use crate::monads::{t_map, t_mult, t_unit, Elem, Monad, Morphism, Obj, TValue};

fn same_monad(a: &TValue, b: &TValue) -> Result<()> {
    if a.monad() != b.monad() {
        return Err(Error::MonadMismatch {
            expected: a.monad().to_string(),
            found: b.monad().to_string(),
        });
    }
    Ok(())
}

fn need_cont(v: &TValue) -> Result<&crate::monads::Cont> {
    v.cont().ok_or_else(|| Error::MonadMismatch {
        expected: Monad::Continuation.to_string(),
        found: v.monad().to_string(),
    })
}

/// `stl(s, y) = T(l_y)(s)`.
pub fn st_left(s: &TValue, y_obj: &Obj, y: &Elem) -> Result<TValue> {
    y_obj.check(y)?;
    t_map(s.monad(), &Morphism::pair_right(s.base(), y_obj, y.clone()), s)
}

/// `str(x, t) = T(r_x)(t)`.
pub fn st_right(x_obj: &Obj, x: &Elem, t: &TValue) -> Result<TValue> {
    x_obj.check(x)?;
    t_map(t.monad(), &Morphism::pair_left(x_obj, x.clone(), t.base()), t)
}

/// `stl(N, y) = λc. N(λx. c(x,y))`.
pub fn st_left_cont(n: &TValue, y_obj: &Obj, y: &Elem) -> Result<TValue> {
    let q = need_cont(n)?.clone();
    y_obj.check(y)?;
    let y = y.clone();
    Ok(TValue::continuation(&Obj::pair(n.base(), y_obj), move |c| {
        q.eval(&|x| c(&Elem::pair(x.clone(), y.clone())))
    }))
}

/// `str(x, M) = λc. M(λy. c(x,y))`.
pub fn st_right_cont(x_obj: &Obj, x: &Elem, m: &TValue) -> Result<TValue> {
    let q = need_cont(m)?.clone();
    x_obj.check(x)?;
    let x = x.clone();
    Ok(TValue::continuation(&Obj::pair(x_obj, m.base()), move |c| {
        q.eval(&|y| c(&Elem::pair(x.clone(), y.clone())))
    }))
}

/// `pul = μ ∘ T(str) ∘ stl_{X,T(Y)}`.
pub fn pile_left(s: &TValue, t: &TValue) -> Result<TValue> {
    same_monad(s, t)?;
    let m = s.monad();
    let (x, y) = (s.base().clone(), t.base().clone());
    let ty = Obj::t(m, &y);
    let stl = st_left(s, &ty, &Elem::Comp(t.clone()))?;
    let x2 = x.clone();
    let str_ = Morphism::new(Obj::pair(&x, &ty), Obj::t(m, &Obj::pair(&x, &y)), move |e| {
        let c = e.components().expect("pair");
        Elem::Comp(st_right(&x2, &c[0], c[1].as_comp().expect("computation")).expect("well-typed str"))
    });
    t_mult(m, &t_map(m, &str_, &stl)?)
}

/// `pur = μ ∘ T(stl) ∘ str_{T(X),Y}`.
pub fn pile_right(s: &TValue, t: &TValue) -> Result<TValue> {
    same_monad(s, t)?;
    let m = s.monad();
    let (x, y) = (s.base().clone(), t.base().clone());
    let tx = Obj::t(m, &x);
    let str_ = st_right(&tx, &Elem::Comp(s.clone()), t)?;
    let y2 = y.clone();
    let stl = Morphism::new(Obj::pair(&tx, &y), Obj::t(m, &Obj::pair(&x, &y)), move |e| {
        let c = e.components().expect("pair");
        Elem::Comp(st_left(c[0].as_comp().expect("computation"), &y2, &c[1]).expect("well-typed stl"))
    });
    t_mult(m, &t_map(m, &stl, &str_)?)
}

/// `pul(M,N) = λc. M(λx. N(λy. c(x,y)))`.
pub fn pul_cont(m: &TValue, n: &TValue) -> Result<TValue> {
    let (qm, qn) = (need_cont(m)?.clone(), need_cont(n)?.clone());
    Ok(TValue::continuation(&Obj::pair(m.base(), n.base()), move |c| {
        qm.eval(&|x| qn.eval(&|y| c(&Elem::pair(x.clone(), y.clone()))))
    }))
}

/// `pur(M,N) = λc. N(λy. M(λx. c(x,y)))`.
pub fn pur_cont(m: &TValue, n: &TValue) -> Result<TValue> {
    let (qm, qn) = (need_cont(m)?.clone(), need_cont(n)?.clone());
    Ok(TValue::continuation(&Obj::pair(m.base(), n.base()), move |c| {
        qn.eval(&|y| qm.eval(&|x| c(&Elem::pair(x.clone(), y.clone()))))
    }))
}

fn flat(v: &TValue) -> Result<TValue> {
    t_map(v.monad(), &Morphism::flatten(v.base()), v)
}

fn compare(lhs: &TValue, rhs: &TValue, input: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok((!lhs.equiv(rhs)?).then(|| format!("{} ↦ {lhs} vs {rhs}", input())))
}

fn combine(a: Mode, b: Mode) -> Mode {
    if a == Mode::Exhaustive {
        b
    } else {
        a
    }
}

fn fin(x: &FinSet) -> Obj {
    Obj::fin(x.clone())
}

fn atoms(x: &FinSet) -> Vec<Elem> {
    x.elements().map(Elem::Atom).collect()
}

/// Associativity triangles, unit and multiplication pentagons for both
/// strengths, the bi-strong square and the relation between `stl` and `str`.
pub fn check_strength_axioms(monad: &Monad, x: &FinSet, y: &FinSet, z: &FinSet, budget: &LawBudget) -> Result<LawReport> {
    let mut report = LawReport::new("strength axioms", monad, &[x.size(), y.size(), z.size()]);
    let (xo, yo, zo) = (fin(x), fin(y), fin(z));
    let (tx, mode_x) = t_family(monad, x, budget, 11)?;
    let (tz, mode_z) = t_family(monad, z, budget, 13)?;

    let cells: Vec<(&TValue, Elem, Elem)> = tx
        .iter()
        .flat_map(|s| atoms(y).into_iter().flat_map(move |b| atoms(z).into_iter().map(move |c| (s, b.clone(), c))))
        .collect();
    report.run("left triangle", format!("T({x})×{y}×{z}"), mode_x, &cells, |(s, b, c)| {
        let yz = Obj::pair(&yo, &zo);
        let lhs = flat(&st_left(s, &yz, &Elem::pair(b.clone(), c.clone()))?)?;
        let rhs = flat(&st_left(&st_left(s, &yo, b)?, &zo, c)?)?;
        compare(&lhs, &rhs, || format!("({s},{b},{c})"))
    });

    let cells: Vec<(Elem, Elem, &TValue)> = atoms(x)
        .into_iter()
        .flat_map(|a| atoms(y).into_iter().flat_map({ let tz = &tz; move |b| tz.iter().map({ let a = a.clone(); move |t| (a.clone(), b.clone(), t) }) }))
        .collect();
    report.run("right triangle", format!("{x}×{y}×T({z})"), mode_z, &cells, |(a, b, t)| {
        let xy = Obj::pair(&xo, &yo);
        let lhs = flat(&st_right(&xy, &Elem::pair(a.clone(), b.clone()), t)?)?;
        let rhs = flat(&st_right(&xo, a, &st_right(&yo, b, t)?)?)?;
        compare(&lhs, &rhs, || format!("({a},{b},{t})"))
    });

    let pairs: Vec<(Elem, Elem)> = atoms(x)
        .into_iter()
        .flat_map(|a| atoms(y).into_iter().map(move |b| (a.clone(), b)))
        .collect();
    let xy = Obj::pair(&xo, &yo);
    report.run("left unit pentagon", format!("{x}×{y}"), Mode::Exhaustive, &pairs, |(a, b)| {
        let lhs = st_left(&t_unit(monad, &xo, a.clone())?, &yo, b)?;
        let rhs = t_unit(monad, &xy, Elem::pair(a.clone(), b.clone()))?;
        compare(&lhs, &rhs, || format!("({a},{b})"))
    });
    report.run("right unit pentagon", format!("{x}×{y}"), Mode::Exhaustive, &pairs, |(a, b)| {
        let lhs = st_right(&xo, a, &t_unit(monad, &yo, b.clone())?)?;
        let rhs = t_unit(monad, &xy, Elem::pair(a.clone(), b.clone()))?;
        compare(&lhs, &rhs, || format!("({a},{b})"))
    });

    let ttx = Obj::t(monad, &Obj::t(monad, &xo));
    let (ffs, mode_ff) = family(&ttx, budget, 17)?;
    let cells: Vec<(&Elem, Elem)> = ffs
        .iter()
        .flat_map(|f| atoms(y).into_iter().map(move |b| (f, b)))
        .collect();
    let stl_xy = {
        let yo = yo.clone();
        Morphism::new(
            Obj::pair(&Obj::t(monad, &xo), &yo),
            Obj::t(monad, &xy),
            move |e| {
                let c = e.components().expect("pair");
                Elem::Comp(st_left(c[0].as_comp().expect("computation"), &yo, &c[1]).expect("stl"))
            },
        )
    };
    report.run("left mult pentagon", format!("{ttx}×{y}"), mode_ff, &cells, |(f, b)| {
        let f = f.as_comp().expect("computation");
        let lhs = st_left(&t_mult(monad, f)?, &yo, b)?;
        let rhs = t_mult(monad, &t_map(monad, &stl_xy, &st_left(f, &yo, b)?)?)?;
        compare(&lhs, &rhs, || format!("({f},{b})"))
    });

    let tty = Obj::t(monad, &Obj::t(monad, &yo));
    let (ggs, mode_gg) = family(&tty, budget, 19)?;
    let cells: Vec<(Elem, &Elem)> = atoms(x)
        .into_iter()
        .flat_map(|a| ggs.iter().map(move |g| (a.clone(), g)))
        .collect();
    let str_xy = {
        let xo = xo.clone();
        Morphism::new(
            Obj::pair(&xo, &Obj::t(monad, &yo)),
            Obj::t(monad, &xy),
            move |e| {
                let c = e.components().expect("pair");
                Elem::Comp(st_right(&xo, &c[0], c[1].as_comp().expect("computation")).expect("str"))
            },
        )
    };
    report.run("right mult pentagon", format!("{x}×{tty}"), mode_gg, &cells, |(a, g)| {
        let g = g.as_comp().expect("computation");
        let lhs = st_right(&xo, a, &t_mult(monad, g)?)?;
        let rhs = t_mult(monad, &t_map(monad, &str_xy, &st_right(&xo, a, g)?)?)?;
        compare(&lhs, &rhs, || format!("({a},{g})"))
    });

    let (ty, mode_y) = t_family(monad, y, budget, 23)?;
    let cells: Vec<(Elem, &TValue, Elem)> = atoms(x)
        .into_iter()
        .flat_map(|a| {
            let ty = &ty;
            atoms(z).into_iter().flat_map(move |c| ty.iter().map({ let a = a.clone(); move |t| (a.clone(), t, c.clone()) }))
        })
        .collect();
    report.run("bi-strong square", format!("{x}×T({y})×{z}"), mode_y, &cells, |(a, t, c)| {
        let lhs = flat(&st_left(&st_right(&xo, a, t)?, &zo, c)?)?;
        let rhs = flat(&st_right(&xo, a, &st_left(t, &zo, c)?)?)?;
        compare(&lhs, &rhs, || format!("({a},{t},{c})"))
    });

    let cells: Vec<(&TValue, Elem)> = tx
        .iter()
        .flat_map(|s| atoms(y).into_iter().map(move |b| (s, b)))
        .collect();
    report.run("stl/str swap", format!("T({x})×{y}"), mode_x, &cells, |(s, b)| {
        let lhs = st_left(s, &yo, b)?;
        let rhs = t_map(monad, &Morphism::swap(&yo, &xo), &st_right(&yo, b, s)?)?;
        compare(&lhs, &rhs, || format!("({s},{b})"))
    });

    let (tuples, full) = index_tuples(&[tx.len(), ty.len()], budget.exhaustive_limit, budget, 29);
    report.run(
        "pul/pur swap",
        format!("T({x})×T({y})"),
        combine(combine(mode_x, mode_y), if full { Mode::Exhaustive } else { Mode::Sampled }),
        &tuples,
        |ix| {
            let (s, t) = (&tx[ix[0]], &ty[ix[1]]);
            let lhs = pile_right(s, t)?;
            let rhs = t_map(monad, &Morphism::swap(&yo, &xo), &pile_left(t, s)?)?;
            compare(&lhs, &rhs, || format!("({s},{t})"))
        },
    );

    if *monad == Monad::Continuation {
        report.run("closed-form stl", format!("C({x})×{y}"), mode_x, &cells, |(s, b)| {
            compare(&st_left(s, &yo, b)?, &st_left_cont(s, &yo, b)?, || format!("({s},{b})"))
        });
        let cells: Vec<(Elem, &TValue)> = atoms(x)
            .into_iter()
            .flat_map(|a| ty.iter().map(move |t| (a.clone(), t)))
            .collect();
        report.run("closed-form str", format!("{x}×C({y})"), mode_y, &cells, |(a, t)| {
            compare(&st_right(&xo, a, t)?, &st_right_cont(&xo, a, t)?, || format!("({a},{t})"))
        });
    }
    Ok(report)
}

/// Pile-ups agree with the strengths whenever one argument is a unit image;
/// for the continuation monad also checks the closed forms against the diagrams.
pub fn check_pileup_lemma(monad: &Monad, x: &FinSet, y: &FinSet, budget: &LawBudget) -> Result<LawReport> {
    let mut report = LawReport::new("pile-up lemma", monad, &[x.size(), y.size()]);
    let (xo, yo) = (fin(x), fin(y));
    let (tx, mode_x) = t_family(monad, x, budget, 31)?;
    let (ty, mode_y) = t_family(monad, y, budget, 37)?;

    let cells: Vec<(Elem, &TValue)> = atoms(x)
        .into_iter()
        .flat_map(|a| ty.iter().map(move |t| (a.clone(), t)))
        .collect();
    report.run("pul(η×1) = str = pur(η×1)", format!("{x}×T({y})"), mode_y, &cells, |(a, t)| {
        let eta = t_unit(monad, &xo, a.clone())?;
        let strength = st_right(&xo, a, t)?;
        let (l, r) = (pile_left(&eta, t)?, pile_right(&eta, t)?);
        Ok(compare(&l, &strength, || format!("pul({eta},{t})"))?
            .or(compare(&r, &strength, || format!("pur({eta},{t})"))?))
    });

    let cells: Vec<(&TValue, Elem)> = tx
        .iter()
        .flat_map(|s| atoms(y).into_iter().map(move |b| (s, b)))
        .collect();
    report.run("pul(1×η) = stl = pur(1×η)", format!("T({x})×{y}"), mode_x, &cells, |(s, b)| {
        let eta = t_unit(monad, &yo, b.clone())?;
        let strength = st_left(s, &yo, b)?;
        let (l, r) = (pile_left(s, &eta)?, pile_right(s, &eta)?);
        Ok(compare(&l, &strength, || format!("pul({s},{eta})"))?
            .or(compare(&r, &strength, || format!("pur({s},{eta})"))?))
    });

    if *monad == Monad::Continuation {
        let (tuples, full) = index_tuples(&[tx.len(), ty.len()], budget.exhaustive_limit, budget, 41);
        let mode = if full && mode_x == Mode::Exhaustive && mode_y == Mode::Exhaustive {
            Mode::Exhaustive
        } else {
            Mode::Generated
        };
        report.run("closed-form pul/pur", format!("C({x})×C({y})"), mode, &tuples, |ix| {
            let (s, t) = (&tx[ix[0]], &ty[ix[1]]);
            Ok(compare(&pile_left(s, t)?, &pul_cont(s, t)?, || format!("pul({s},{t})"))?
                .or(compare(&pile_right(s, t)?, &pur_cont(s, t)?, || format!("pur({s},{t})"))?))
        });
    }
    Ok(report)
}

/// Both pile-ups are associative (compared after flattening the triple product).
pub fn check_pileup_assoc(monad: &Monad, x: &FinSet, y: &FinSet, z: &FinSet, budget: &LawBudget) -> Result<LawReport> {
    let mut report = LawReport::new("pile-up associativity", monad, &[x.size(), y.size(), z.size()]);
    let (tx, mx) = t_family(monad, x, budget, 43)?;
    let (ty, my) = t_family(monad, y, budget, 47)?;
    let (tz, mz) = t_family(monad, z, budget, 53)?;
    let (tuples, full) = index_tuples(&[tx.len(), ty.len(), tz.len()], budget.exhaustive_limit, budget, 59);
    let mode = if full && [mx, my, mz].iter().all(|m| *m == Mode::Exhaustive) {
        Mode::Exhaustive
    } else if full {
        Mode::Generated
    } else {
        Mode::Sampled
    };
    let domain = format!("T({x})×T({y})×T({z})");
    type Pile = fn(&TValue, &TValue) -> Result<TValue>;
    for (name, pile) in [("pul associative", pile_left as Pile), ("pur associative", pile_right as Pile)] {
        report.run(name, &domain, mode, &tuples, |ix| {
            let (s, t, u) = (&tx[ix[0]], &ty[ix[1]], &tz[ix[2]]);
            let lhs = flat(&pile(&pile(s, t)?, u)?)?;
            let rhs = flat(&pile(s, &pile(t, u)?)?)?;
            compare(&lhs, &rhs, || format!("({s},{t},{u})"))
        });
    }
    Ok(report)
}

/// A pair on which the two pile-ups differ.
#[derive(Clone)]
pub struct NonCommuting {
    pub s: TValue,
    pub t: TValue,
    pub left: TValue,
    pub right: TValue,
    /// For continuation values, the first `c ∈ P(X×Y)` separating them.
    pub distinguishing: Option<Pred>,
}

#[derive(Clone)]
pub struct CommutativityWitness {
    pub monad: Monad,
    pub x: FinSet,
    pub y: FinSet,
    pub tested: usize,
    pub mode: Mode,
    pub counterexample: Option<NonCommuting>,
}

impl CommutativityWitness {
    pub fn is_commutative(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Recompute both pile-ups from the stored arguments and confirm they still differ.
    pub fn reverify(&self) -> Result<bool> {
        let Some(w) = &self.counterexample else { return Ok(true) };
        let (l, r) = (pile_left(&w.s, &w.t)?, pile_right(&w.s, &w.t)?);
        if let Some(c) = &w.distinguishing {
            return Ok(l.eval_pred(c)? != r.eval_pred(c)?);
        }
        Ok(!l.equiv(&r)?)
    }
}

impl fmt::Display for CommutativityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}×{}: ", self.monad, self.x, self.y)?;
        match &self.counterexample {
            None => write!(f, "commutative on tested range ({} pairs, {})", self.tested, self.mode),
            Some(w) => {
                write!(f, "not commutative: s = {}, t = {}, pul = {}, pur = {}", w.s, w.t, w.left, w.right)?;
                if let Some(c) = &w.distinguishing {
                    write!(f, ", c = {c}: pul(c) = {}, pur(c) = {}", w.left.eval_pred(c).unwrap_or(false), w.right.eval_pred(c).unwrap_or(false))?;
                }
                Ok(())
            }
        }
    }
}

impl CommutativityWitness {
    /// Line-oriented text form: values are stored by their index in the
    /// enumeration of `T(X)` and `T(Y)`, with the pile-ups as printed.
    pub fn to_text(&self) -> Result<String> {
        let Some(w) = &self.counterexample else {
            return Err(Error::mismatch("a counterexample", "a commutative report"));
        };
        let (x, y) = (Obj::fin(self.x.clone()), Obj::fin(self.y.clone()));
        let idx = |obj: &Obj, v: &TValue| {
            Obj::t(&self.monad, obj)
                .index_of(&Elem::Comp(v.clone()))
                .ok_or_else(|| Error::mismatch(Obj::t(&self.monad, obj), v))
        };
        let mut out = format!(
            "monad: {}\nx: {}\ny: {}\ns: {}  # {}\nt: {}  # {}\npul: {}\npur: {}\n",
            self.monad.key(),
            self.x.size(),
            self.y.size(),
            idx(&x, &w.s)?,
            w.s,
            idx(&y, &w.t)?,
            w.t,
            w.left,
            w.right
        );
        if let Some(c) = &w.distinguishing {
            let members: Vec<String> = c.members().map(|i| i.to_string()).collect();
            out.push_str(&format!("c: {{{}}}\n", members.join(" ")));
        }
        Ok(out)
    }

    /// Rebuild a stored witness; fails if the recomputed pile-ups no longer
    /// print as recorded.
    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::MalformedTree(format!("witness: {what}"));
        let mut fields = std::collections::BTreeMap::new();
        for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
            let (k, v) = line.split_once(':').ok_or_else(|| bad(line))?;
            fields.insert(k.trim(), v.trim());
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| bad(&format!("missing {k}")));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad(s));
        let monad: Monad = get("monad")?.parse().map_err(|_| bad(get("monad").unwrap_or("")))?;
        let (xs, ys) = (FinSet::new("X", num(get("x")?)?), FinSet::new("Y", num(get("y")?)?));
        let value = |set: &FinSet, k: &str| -> Result<TValue> {
            let e = Obj::t(&monad, &Obj::fin(set.clone())).element(num(get(k)?)?)?;
            Ok(e.as_comp().expect("element of T(X)").clone())
        };
        let (s, t) = (value(&xs, "s")?, value(&ys, "t")?);
        let (left, right) = (pile_left(&s, &t)?, pile_right(&s, &t)?);
        let distinguishing = match fields.get("c") {
            Some(c) => {
                let members = c
                    .trim_matches(|ch| ch == '{' || ch == '}')
                    .split_whitespace()
                    .map(num)
                    .collect::<Result<Vec<_>>>()?;
                Some(Pred::from_elements(&Obj::pair(&fin(&xs), &fin(&ys)).carrier()?, &members)?)
            }
            None => None,
        };
        if monad.is_concrete() && (left.to_string() != get("pul")? || right.to_string() != get("pur")?) {
            return Err(bad(&format!("recomputed pile-ups {left} / {right} differ from the record")));
        }
        Ok(CommutativityWitness {
            monad,
            x: xs,
            y: ys,
            tested: 0,
            mode: Mode::Exhaustive,
            counterexample: Some(NonCommuting { s, t, left, right, distinguishing }),
        })
    }
}

/// Search value pairs in order for `pul(s,t) ≠ pur(s,t)`.
pub fn find_noncommutativity(monad: &Monad, x: &FinSet, y: &FinSet, budget: &LawBudget) -> Result<CommutativityWitness> {
    let ((tx, mx), (ty, my)) = if *monad == Monad::Continuation {
        (
            (cont_family(x, budget, 61)?, Mode::Generated),
            (cont_family(y, budget, 67)?, Mode::Generated),
        )
    } else {
        (t_family(monad, x, budget, 61)?, t_family(monad, y, budget, 67)?)
    };
    let mode = combine(mx, my);
    let mut tested = 0;
    for s in &tx {
        for t in &ty {
            tested += 1;
            let (left, right) = (pile_left(s, t)?, pile_right(s, t)?);
            if !left.equiv(&right)? {
                let distinguishing = match monad {
                    Monad::Continuation => left.distinguishing_pred(&right)?,
                    _ => None,
                };
                return Ok(CommutativityWitness {
                    monad: monad.clone(),
                    x: x.clone(),
                    y: y.clone(),
                    tested,
                    mode,
                    counterexample: Some(NonCommuting {
                        s: s.clone(),
                        t: t.clone(),
                        left,
                        right,
                        distinguishing,
                    }),
                });
            }
        }
    }
    Ok(CommutativityWitness {
        monad: monad.clone(),
        x: x.clone(),
        y: y.clone(),
        tested,
        mode,
        counterexample: None,
    })
}
