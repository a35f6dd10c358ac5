//! Readings of quantified sentences over finite models, by direct
//! composites and by interpreting computation trees.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincore::{all_preds, product, FinSet, Pred, DEFAULT_PRED_BUDGET};
use crate::lexicon::{all_gqs, make_gq, Determiner, GQuant};
use crate::monads::{t_map, t_unit, Elem, Monad, Morphism, Obj, ObjKind, TValue};
use crate::scopetrees::{
    c_scope_order, eps_vectors, permutations, relabel_a, relabel_b, relabel_c, rotate_innermost,
    surface, CompLabel, CompTree, check_sigma, lf,
};
use crate::strengths::pul_cont;
use crate::transforms::{
    cps, cps_closed, ev_id, mos_left, mos_left_partial, pile, pred_obj, prod_obj, Eps, Side,
};

/// Quantifiers for positions `1..=n` and a verb predicate over `X₁×…×Xₙ`.
#[derive(Clone)]
pub struct Model {
    carriers: Vec<FinSet>,
    quants: Vec<TValue>,
    verb: Pred,
}

fn fin_of(obj: &Obj) -> Result<FinSet> {
    match obj.kind() {
        ObjKind::Fin(set) => Ok(set.clone()),
        _ => Err(Error::mismatch("a finite carrier", obj)),
    }
}

fn carriers_of(quants: &[TValue]) -> Result<Vec<FinSet>> {
    quants
        .iter()
        .map(|q| {
            if *q.monad() != Monad::Continuation {
                return Err(Error::MonadMismatch {
                    expected: Monad::Continuation.to_string(),
                    found: q.monad().to_string(),
                });
            }
            fin_of(q.base())
        })
        .collect()
}

fn check_verb(carriers: &[FinSet], verb: &Pred) -> Result<()> {
    if !(1..=3).contains(&carriers.len()) {
        return Err(Error::Arity(carriers.len()));
    }
    let size = product(carriers)?.carrier().size();
    if verb.dom().size() != size {
        return Err(Error::mismatch(pred_obj(carriers), verb.dom()));
    }
    Ok(())
}

impl Model {
    pub fn new(quants: Vec<TValue>, verb: Pred) -> Result<Self> {
        let carriers = carriers_of(&quants)?;
        check_verb(&carriers, &verb)?;
        Ok(Model { carriers, quants, verb })
    }

    pub fn from_gqs(quants: &[GQuant], verb: Pred) -> Result<Self> {
        Model::new(quants.iter().map(|q| q.value().clone()).collect(), verb)
    }

    pub fn arity(&self) -> usize {
        self.carriers.len()
    }

    pub fn carriers(&self) -> &[FinSet] {
        &self.carriers
    }

    pub fn quants(&self) -> &[TValue] {
        &self.quants
    }

    pub fn verb(&self) -> &Pred {
        &self.verb
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    A,
    B,
    C,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::A, Strategy::B, Strategy::C];
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Sigma(Vec<usize>),
    Eps(Vec<Side>),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Sigma(s) => write!(f, "{}", order_string(s)),
            Param::Eps(e) if e.is_empty() => write!(f, "<>"),
            Param::Eps(e) => {
                let letters: Vec<String> = e.iter().map(|s| s.to_string()).collect();
                write!(f, "<{}>", letters.join(","))
            }
        }
    }
}

pub fn order_string(order: &[usize]) -> String {
    let parts: Vec<String> = order.iter().map(|i| i.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reading {
    pub strategy: Strategy,
    pub param: Param,
    /// Quantifier positions, widest scope first.
    pub order: Vec<usize>,
    pub truth: bool,
}

/// `Q_σ(1)(λx_σ(1). Q_σ(2)(λx_σ(2). … P(x₁,…,xₙ)))`.
pub fn strat_a(sigma: &[usize], quants: &[TValue], p: &Pred) -> Result<bool> {
    let carriers = carriers_of(quants)?;
    check_verb(&carriers, p)?;
    check_sigma(sigma, carriers.len())?;
    let full = product(&carriers)?;
    fn nest(k: usize, sigma: &[usize], quants: &[TValue], p: &Pred, full: &crate::fincore::ProdSet, t: &[usize]) -> bool {
        if k == sigma.len() {
            return p.get(full.encode(t).expect("tuple in range"));
        }
        let i = sigma[k] - 1;
        let q = quants[i].cont().expect("continuation");
        q.eval(&|e| {
            let mut u = t.to_vec();
            u[i] = e.atom().expect("atom");
            nest(k + 1, sigma, quants, p, full, &u)
        })
    }
    Ok(nest(0, sigma, quants, p, &full, &vec![0; sigma.len()]))
}

/// `π_{σ⁻¹}` from the pile-up of `Q_σ(1), …, Q_σ(n)` to `X₁×…×Xₙ`.
pub fn reindex(sigma: &[usize], dom: &Obj, carriers: &[FinSet]) -> Morphism {
    let sigma = sigma.to_vec();
    let flat = Morphism::flatten(dom);
    Morphism::new(dom.clone(), prod_obj(carriers), move |e| {
        let f = flat.apply(e);
        let xs = f.components().expect("tuple");
        let mut out = vec![Elem::Atom(0); xs.len()];
        for (k, &s) in sigma.iter().enumerate() {
            out[s - 1] = xs[k].clone();
        }
        Elem::tuple(out)
    })
}

/// `mosl ∘ (C(π_{σ⁻¹}) × 1) ∘ (pul(Q_σ(1), pul(Q_σ(2), Q_σ(3))) × 1)`.
pub fn strat_b(sigma: &[usize], quants: &[TValue], p: &Pred) -> Result<bool> {
    let carriers = carriers_of(quants)?;
    check_verb(&carriers, p)?;
    check_sigma(sigma, carriers.len())?;
    if let [only] = quants {
        return mos_left(only, p);
    }
    let mut acc = quants[sigma[sigma.len() - 1] - 1].clone();
    for &s in sigma[..sigma.len() - 1].iter().rev() {
        acc = pul_cont(&quants[s - 1], &acc)?;
    }
    let moved = t_map(&Monad::Continuation, &reindex(sigma, acc.base(), &carriers), &acc)?;
    mos_left(&moved, p)
}

/// `ev_id ∘ cps^ε(epsr_X₁) ∘ (1 × cps^ε'(epsl_X₃)) ∘ (1 × cps^?(epsl_X₂) × 1) ∘ (1 × η × 1 × 1)`,
/// truncated for lower arities. `eps` lists the choices for the `S` and `VP` nodes.
pub fn strat_c(eps: &[Side], quants: &[TValue], p: &Pred) -> Result<bool> {
    let carriers = carriers_of(quants)?;
    check_verb(&carriers, p)?;
    let n = carriers.len();
    if eps.len() + 1 != n {
        return Err(Error::Arity(eps.len() + 1));
    }
    let c = Monad::Continuation;
    let lifted = t_unit(&c, &pred_obj(&carriers), Elem::Pred(Arc::new(p.clone())))?;
    let vp = match n {
        1 => lifted,
        2 => cps_closed(Side::Left, &Eps::left(&carriers, 1).morphism(), &lifted, &quants[1])?,
        _ => {
            let inner = cps_closed(Side::Left, &Eps::left(&carriers, 1).morphism(), &lifted, &quants[1])?;
            let rest = [carriers[0].clone(), carriers[2].clone()];
            cps_closed(eps[1], &Eps::left(&rest, 1).morphism(), &inner, &quants[2])?
        }
    };
    let top = eps.first().copied().unwrap_or(Side::Left);
    ev_id(&cps_closed(top, &Eps::right(&carriers[..1], 0).morphism(), &quants[0], &vp)?)
}

enum Val {
    Bool(bool),
    Pred(Vec<usize>, Pred),
    Comp(Vec<usize>, TValue),
    CompPred(Vec<usize>, TValue),
    CompBool(TValue),
}

fn pick(carriers: &[FinSet], vars: &[usize]) -> Vec<FinSet> {
    vars.iter().map(|&v| carriers[v - 1].clone()).collect()
}

fn bad(ct: &CompTree, msg: &str) -> Error {
    Error::MalformedTree(format!("{}: {msg}", ct.label))
}

fn eval_node(ct: &CompTree, m: &Model) -> Result<Val> {
    let n = m.arity();
    let kids: Vec<Val> = ct.children.iter().map(|c| eval_node(c, m)).collect::<Result<_>>()?;
    let c = Monad::Continuation;
    Ok(match (&ct.label, kids.as_slice()) {
        (CompLabel::Quant(i), []) => {
            let q = m.quants.get(i.wrapping_sub(1)).ok_or_else(|| Error::UnresolvedLeaf(format!("Q{i}")))?;
            Val::Comp(vec![*i], q.clone())
        }
        (CompLabel::Pred, []) => Val::Pred((1..=n).collect(), m.verb.clone()),
        (CompLabel::Lift, [Val::Pred(vs, p)]) => {
            let obj = pred_obj(&pick(&m.carriers, vs));
            Val::CompPred(vs.clone(), t_unit(&c, &obj, Elem::Pred(Arc::new(p.clone())))?)
        }
        (CompLabel::EvId, [Val::CompBool(v)]) => Val::Bool(ev_id(v)?),
        (CompLabel::Mos(bound), [Val::Comp(cv, q), Val::Pred(pv, p)]) => {
            let mut sorted = cv.clone();
            sorted.sort_unstable();
            if sorted == *pv {
                if cv.len() == 1 {
                    Val::Bool(mos_left(q, p)?)
                } else {
                    let carriers = pick(&m.carriers, pv);
                    let moved = t_map(&c, &reindex(bound, q.base(), &carriers), q)?;
                    Val::Bool(mos_left(&moved, p)?)
                }
            } else if let [v] = cv.as_slice() {
                let at = pv.iter().position(|x| x == v).ok_or_else(|| bad(ct, "variable not free"))?;
                let rest: Vec<usize> = pv.iter().copied().filter(|x| x != v).collect();
                Val::Pred(rest, mos_left_partial(q, p, &pick(&m.carriers, pv), at)?)
            } else {
                return Err(bad(ct, "partial binding of several variables"));
            }
        }
        (CompLabel::Pile(side), [Val::Comp(a, s), Val::Comp(b, t)]) => {
            Val::Comp([a.as_slice(), b.as_slice()].concat(), pile(*side, s, t)?)
        }
        (CompLabel::Cps { side, eps, var, .. }, [l, r]) => {
            let ((Val::Comp(_, pt), Val::CompPred(pv, preds)) | (Val::CompPred(pv, preds), Val::Comp(_, pt))) = (l, r) else {
                return Err(bad(ct, "ill-typed arguments"));
            };
            let at = pv.iter().position(|x| x == var).ok_or_else(|| bad(ct, "variable not free"))?;
            let factors = pick(&m.carriers, pv);
            let e = match eps {
                Side::Left => Eps::left(&factors, at),
                Side::Right => Eps::right(&factors, at),
            };
            let (a, b) = match eps {
                Side::Left => (preds, pt),
                Side::Right => (pt, preds),
            };
            let v = cps(*side, &e.morphism(), a, b)?;
            if pv.len() == 1 {
                Val::CompBool(v)
            } else {
                Val::CompPred(pv.iter().copied().filter(|x| x != var).collect(), v)
            }
        }
        _ => return Err(bad(ct, "ill-typed node")),
    })
}

/// Bottom-up evaluation of a computation tree using the diagram forms of
/// the pile-ups and `cps`.
pub fn eval_comp_tree(ct: &CompTree, m: &Model) -> Result<bool> {
    ct.type_check(m.arity())?;
    match eval_node(ct, m)? {
        Val::Bool(b) => Ok(b),
        _ => Err(bad(ct, "does not evaluate to a truth value")),
    }
}

/// The computation tree for one reading.
pub fn reading_tree(strategy: Strategy, param: &Param, n: usize) -> Result<CompTree> {
    let s = surface(n)?;
    match (strategy, param) {
        (Strategy::A, Param::Sigma(sigma)) => relabel_a(&lf(&s, sigma)?),
        (Strategy::B, Param::Sigma(sigma)) => relabel_b(&rotate_innermost(&lf(&s, sigma)?)),
        (Strategy::C, Param::Eps(eps)) => relabel_c(&s, eps),
        _ => Err(Error::mismatch(format!("a parameter for strategy {strategy}"), param)),
    }
}

pub fn params(strategy: Strategy, n: usize) -> Vec<Param> {
    match strategy {
        Strategy::A | Strategy::B => permutations(n).into_iter().map(Param::Sigma).collect(),
        Strategy::C => eps_vectors(n).into_iter().map(Param::Eps).collect(),
    }
}

/// The direct composite for one reading.
pub fn strat(strategy: Strategy, param: &Param, quants: &[TValue], p: &Pred) -> Result<bool> {
    match (strategy, param) {
        (Strategy::A, Param::Sigma(s)) => strat_a(s, quants, p),
        (Strategy::B, Param::Sigma(s)) => strat_b(s, quants, p),
        (Strategy::C, Param::Eps(e)) => strat_c(e, quants, p),
        _ => Err(Error::mismatch(format!("a parameter for strategy {strategy}"), param)),
    }
}

pub fn scope_order(param: &Param) -> Result<Vec<usize>> {
    match param {
        Param::Sigma(s) => Ok(s.clone()),
        Param::Eps(e) => c_scope_order(e),
    }
}

/// Every reading of the given strategies, in strategy then parameter order.
pub fn enumerate_readings(m: &Model, strategies: &[Strategy]) -> Result<Vec<Reading>> {
    let mut out = Vec::new();
    for &strategy in strategies {
        for param in params(strategy, m.arity()) {
            out.push(Reading {
                strategy,
                order: scope_order(&param)?,
                truth: strat(strategy, &param, &m.quants, &m.verb)?,
                param,
            });
        }
    }
    Ok(out)
}

/// Exhaustive instance space: every quantifier `det(A)` per position and every verb relation.
#[derive(Clone, Debug)]
pub struct InstanceSpace {
    pub dets: Vec<Determiner>,
    pub carriers: Vec<FinSet>,
}

impl InstanceSpace {
    pub fn new(dets: &[Determiner], sizes: &[usize]) -> Self {
        InstanceSpace {
            dets: dets.to_vec(),
            carriers: sizes.iter().enumerate().map(|(i, &n)| FinSet::new(format!("X{}", i + 1), n)).collect(),
        }
    }

    pub fn quants(&self) -> Result<Vec<Vec<GQuant>>> {
        self.carriers.iter().map(|x| all_gqs(&self.dets, x)).collect()
    }

    pub fn verbs(&self) -> Result<Vec<Pred>> {
        Ok(all_preds(product(&self.carriers)?.carrier(), DEFAULT_PRED_BUDGET)?.collect())
    }
}

fn for_each_tuple(per: &[Vec<GQuant>], mut f: impl FnMut(&[&GQuant]) -> Result<()>) -> Result<()> {
    let mut idx = vec![0; per.len()];
    if per.iter().any(Vec::is_empty) {
        return Ok(());
    }
    loop {
        let tuple: Vec<&GQuant> = idx.iter().zip(per).map(|(&i, qs)| &qs[i]).collect();
        f(&tuple)?;
        let mut k = per.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < per[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub arity: usize,
    /// The pairs of readings compared, e.g. `A(1,2) = B(1,2)`.
    pub pairs: Vec<String>,
    pub instances: usize,
    pub comparisons: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} equivalences at arity {}: {} instances, {} comparisons, {} failures",
            self.arity, self.instances, self.comparisons, self.failure_count
        )?;
        writeln!(f, "  pairs: {}", self.pairs.join(", "))?;
        for msg in &self.failures {
            writeln!(f, "  counterexample: {msg}")?;
        }
        Ok(())
    }
}

const MAX_RECORDED: usize = 20;

/// `strat_A = strat_B` for every σ and `strat_C = strat_B` under the scope
/// correspondence, on every instance of `space`.
pub fn check_equivalences(space: &InstanceSpace) -> Result<EquivalenceReport> {
    let n = space.carriers.len();
    let sigmas = permutations(n);
    let epss = eps_vectors(n);
    let c_to_b: Vec<usize> = epss
        .iter()
        .map(|e| {
            let order = c_scope_order(e)?;
            Ok(sigmas.iter().position(|s| *s == order).expect("scope order is a permutation"))
        })
        .collect::<Result<_>>()?;
    let mut pairs: Vec<String> = sigmas
        .iter()
        .map(|s| format!("A{0} = B{0}", order_string(s)))
        .collect();
    for (e, &k) in epss.iter().zip(&c_to_b) {
        pairs.push(format!("C{} = B{}", Param::Eps(e.clone()), order_string(&sigmas[k])));
    }
    let mut report = EquivalenceReport {
        arity: n,
        pairs,
        instances: 0,
        comparisons: 0,
        failures: Vec::new(),
        failure_count: 0,
    };
    let per = space.quants()?;
    let verbs = space.verbs()?;
    for_each_tuple(&per, |tuple| {
        let qs: Vec<TValue> = tuple.iter().map(|q| q.value().clone()).collect();
        for p in &verbs {
            report.instances += 1;
            let b: Vec<bool> = sigmas.iter().map(|s| strat_b(s, &qs, p)).collect::<Result<_>>()?;
            let mut fail = |what: String| {
                report.failure_count += 1;
                if report.failures.len() < MAX_RECORDED {
                    let names: Vec<String> = tuple.iter().map(|q| q.to_string()).collect();
                    report.failures.push(format!("{what} on [{}], P = {p}", names.join(", ")));
                }
            };
            for (s, &bv) in sigmas.iter().zip(&b) {
                if strat_a(s, &qs, p)? != bv {
                    fail(format!("A{0} ≠ B{0}", order_string(s)));
                }
            }
            for (e, &k) in epss.iter().zip(&c_to_b) {
                if strat_c(e, &qs, p)? != b[k] {
                    fail(format!("C{} ≠ B{}", Param::Eps(e.clone()), order_string(&sigmas[k])));
                }
            }
            report.comparisons += sigmas.len() + epss.len();
        }
        Ok(())
    })?;
    Ok(report)
}

/// A concrete instance on which a Strategy A reading differs from every
/// Strategy C reading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompletenessWitness {
    pub sigma: Vec<usize>,
    pub carriers: Vec<usize>,
    /// Determiner and restriction members per position.
    pub quants: Vec<(Determiner, Vec<usize>)>,
    /// Members of the verb relation, as carrier indices of `X₁×…×Xₙ`.
    pub verb: Vec<usize>,
    pub sigma_truth: bool,
    pub c_truths: Vec<bool>,
}

impl IncompletenessWitness {
    pub fn model(&self) -> Result<Model> {
        let sets: Vec<FinSet> = self
            .carriers
            .iter()
            .enumerate()
            .map(|(i, &n)| FinSet::new(format!("X{}", i + 1), n))
            .collect();
        let gqs = self
            .quants
            .iter()
            .zip(&sets)
            .map(|((d, members), x)| make_gq(*d, x, &Pred::from_elements(x, members)?))
            .collect::<Result<Vec<_>>>()?;
        let verb = Pred::from_elements(product(&sets)?.carrier(), &self.verb)?;
        Model::from_gqs(&gqs, verb)
    }

    /// Recompute every reading and confirm the stored truth values and the difference.
    pub fn reverify(&self) -> Result<bool> {
        let m = self.model()?;
        let a = strat_a(&self.sigma, &m.quants, &m.verb)?;
        let cs: Vec<bool> = eps_vectors(m.arity())
            .iter()
            .map(|e| strat_c(e, &m.quants, &m.verb))
            .collect::<Result<_>>()?;
        Ok(a == self.sigma_truth && cs == self.c_truths && cs.iter().all(|&c| c != a))
    }

    /// Line-oriented `key: value` text form.
    pub fn to_text(&self) -> String {
        let list = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        out.push_str(&format!("sigma: {}\n", list(&self.sigma)));
        out.push_str(&format!("carriers: {}\n", list(&self.carriers)));
        for (i, (d, members)) in self.quants.iter().enumerate() {
            out.push_str(&format!("q{}: {} {{{}}}\n", i + 1, d, list(members)));
        }
        out.push_str(&format!("verb: {{{}}}\n", list(&self.verb)));
        out.push_str(&format!("sigma_truth: {}\n", self.sigma_truth));
        let cs: Vec<String> = self.c_truths.iter().map(|b| b.to_string()).collect();
        out.push_str(&format!("c_truths: {}\n", cs.join(" ")));
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::MalformedTree(format!("witness: {what}"));
        let mut fields = std::collections::BTreeMap::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (k, v) = line.split_once(':').ok_or_else(|| bad(line))?;
            fields.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| fields.get(k).ok_or_else(|| bad(&format!("missing {k}")));
        let nums = |s: &str| -> Result<Vec<usize>> {
            s.trim_matches(|c| c == '{' || c == '}')
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(t)))
                .collect()
        };
        let truth = |s: &str| -> Result<bool> { s.parse().map_err(|_| bad(s)) };
        let carriers = nums(get("carriers")?)?;
        let quants = (1..=carriers.len())
            .map(|i| {
                let v = get(&format!("q{i}"))?;
                let (d, rest) = v.split_once(' ').ok_or_else(|| bad(v))?;
                Ok((d.parse().map_err(|_| bad(d))?, nums(rest)?))
            })
            .collect::<Result<_>>()?;
        Ok(IncompletenessWitness {
            sigma: nums(get("sigma")?)?,
            carriers,
            quants,
            verb: nums(get("verb")?)?,
            sigma_truth: truth(get("sigma_truth")?)?,
            c_truths: get("c_truths")?.split_whitespace().map(truth).collect::<Result<_>>()?,
        })
    }
}

/// The first instance of `space`, in enumeration order, on which
/// `strat_A(σ)` differs from all Strategy C readings.
pub fn find_incompleteness_witness(sigma: &[usize], space: &InstanceSpace) -> Result<Option<IncompletenessWitness>> {
    let n = space.carriers.len();
    check_sigma(sigma, n)?;
    let epss = eps_vectors(n);
    let per = space.quants()?;
    let verbs = space.verbs()?;
    let mut found = None;
    let stop = Error::MalformedTree(String::new());
    let outcome = for_each_tuple(&per, |tuple| {
        let qs: Vec<TValue> = tuple.iter().map(|q| q.value().clone()).collect();
        for p in &verbs {
            let a = strat_a(sigma, &qs, p)?;
            let cs: Vec<bool> = epss.iter().map(|e| strat_c(e, &qs, p)).collect::<Result<_>>()?;
            if cs.iter().all(|&c| c != a) {
                found = Some(IncompletenessWitness {
                    sigma: sigma.to_vec(),
                    carriers: space.carriers.iter().map(FinSet::size).collect(),
                    quants: tuple.iter().map(|q| (q.det(), q.restriction().members().collect())).collect(),
                    verb: p.members().collect(),
                    sigma_truth: a,
                    c_truths: cs,
                });
                return Err(stop.clone());
            }
        }
        Ok(())
    });
    match outcome {
        Ok(()) => Ok(None),
        Err(_) if found.is_some() => Ok(found),
        Err(e) => Err(e),
    }
}
