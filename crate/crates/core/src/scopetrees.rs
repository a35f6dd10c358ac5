//! Surface trees for sentences with one to three quantifier phrases, the
//! QR / Predicate Collapsing / Rotation rewrites, and relabelling of the
//! resulting forms as computation trees.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::transforms::Side;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    S,
    /// `S` indexed by the variables bound at this node.
    SVars(Vec<usize>),
    QP(usize),
    VP,
    VPrime,
    V,
    Vt,
    Vdt,
    Var(usize),
    CollapsedS(Vec<usize>),
    Polyadic,
}

fn vars(xs: &[usize]) -> String {
    xs.iter().map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::S => write!(f, "S"),
            Label::SVars(xs) => write!(f, "S^{}", vars(xs)),
            Label::QP(i) => write!(f, "QP{i}"),
            Label::VP => write!(f, "VP"),
            Label::VPrime => write!(f, "V'"),
            Label::V => write!(f, "V"),
            Label::Vt => write!(f, "Vt"),
            Label::Vdt => write!(f, "Vdt"),
            Label::Var(i) => write!(f, "x{i}"),
            Label::CollapsedS(xs) => {
                let inner: Vec<String> = xs.iter().map(|i| format!("x{i}")).collect();
                write!(f, "[-{}-]", inner.join("-"))
            }
            Label::Polyadic => write!(f, "Polyadic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyntaxTree {
    pub label: Label,
    pub children: Vec<SyntaxTree>,
}

impl SyntaxTree {
    pub fn leaf(label: Label) -> Self {
        SyntaxTree { label, children: Vec::new() }
    }

    pub fn node(label: Label, children: Vec<SyntaxTree>) -> Self {
        SyntaxTree { label, children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn leaves(&self) -> Vec<&Label> {
        if self.is_leaf() {
            vec![&self.label]
        } else {
            self.children.iter().flat_map(|c| c.leaves()).collect()
        }
    }

    /// QP indices at the leaves, left to right.
    pub fn qps(&self) -> Vec<usize> {
        self.leaves()
            .into_iter()
            .filter_map(|l| match l {
                Label::QP(i) => Some(*i),
                _ => None,
            })
            .collect()
    }

    /// Parenthesized form, e.g. `S(QP1, VP(V))`.
    pub fn parens(&self) -> String {
        render_parens(&self.label, &self.children, |c| c.label.to_string(), |c| &c.children)
    }

    /// Indented two-dimensional ASCII drawing.
    pub fn ascii(&self) -> String {
        render_ascii(self, |t| t.label.to_string(), |t| &t.children)
    }
}

impl fmt::Display for SyntaxTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.parens())
    }
}

fn render_parens<T>(label: &impl fmt::Display, children: &[T], name: impl Fn(&T) -> String + Copy, kids: impl Fn(&T) -> &[T] + Copy) -> String {
    fn go<T>(head: String, children: &[T], name: impl Fn(&T) -> String + Copy, kids: impl Fn(&T) -> &[T] + Copy, out: &mut String) {
        out.push_str(&head);
        if !children.is_empty() {
            out.push('(');
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                go(name(c), kids(c), name, kids, out);
            }
            out.push(')');
        }
    }
    let mut out = String::new();
    go(label.to_string(), children, name, kids, &mut out);
    out
}

fn render_ascii<T>(root: &T, name: impl Fn(&T) -> String + Copy, kids: impl Fn(&T) -> &[T] + Copy) -> String {
    fn go<T>(t: &T, prefix: &str, last: bool, top: bool, name: impl Fn(&T) -> String + Copy, kids: impl Fn(&T) -> &[T] + Copy, out: &mut String) {
        if top {
            let _ = writeln!(out, "{}", name(t));
        } else {
            let _ = writeln!(out, "{prefix}{}{}", if last { "`-- " } else { "+-- " }, name(t));
        }
        let next = if top {
            String::new()
        } else {
            format!("{prefix}{}", if last { "    " } else { "|   " })
        };
        let cs = kids(t);
        for (i, c) in cs.iter().enumerate() {
            go(c, &next, i + 1 == cs.len(), false, name, kids, out);
        }
    }
    let mut out = String::new();
    go(root, "", true, true, name, kids, &mut out);
    out
}

/// The surface tree for a sentence with `n` quantifier phrases.
pub fn surface(n: usize) -> Result<SyntaxTree> {
    use Label::*;
    let l = SyntaxTree::leaf;
    let nd = SyntaxTree::node;
    match n {
        1 => Ok(nd(S, vec![l(QP(1)), nd(VP, vec![l(V)])])),
        2 => Ok(nd(S, vec![l(QP(1)), nd(VP, vec![l(Vt), l(QP(2))])])),
        3 => Ok(nd(
            S,
            vec![l(QP(1)), nd(VP, vec![nd(VPrime, vec![l(Vdt), l(QP(2))]), l(QP(3))])],
        )),
        _ => Err(Error::Arity(n)),
    }
}

/// The arity of a surface tree, if it is one of the three templates.
pub fn surface_arity(t: &SyntaxTree) -> Option<usize> {
    (1..=3).find(|&n| surface(n).is_ok_and(|s| s == *t))
}

fn not_applicable(rule: &'static str, reason: impl Into<String>) -> Error {
    Error::RuleNotApplicable { rule, reason: reason.into() }
}

fn replace_qp(t: &SyntaxTree, i: usize) -> Option<SyntaxTree> {
    if t.label == Label::QP(i) && t.is_leaf() {
        return Some(SyntaxTree::leaf(Label::Var(i)));
    }
    let raised = matches!(t.label, Label::SVars(_));
    for (k, c) in t.children.iter().enumerate() {
        if raised && k == 0 {
            continue;
        }
        if let Some(new) = replace_qp(c, i) {
            let mut out = t.clone();
            out.children[k] = new;
            return Some(out);
        }
    }
    None
}

/// Raise `QP{qp}`: replace it by `x{qp}` and adjoin it to the root under `S^x{qp}`.
pub fn qr_rule(t: &SyntaxTree, qp: usize) -> Result<SyntaxTree> {
    if !matches!(t.label, Label::S | Label::SVars(_)) {
        return Err(not_applicable("QR", format!("root is {}, not S", t.label)));
    }
    let rest = replace_qp(t, qp).ok_or_else(|| not_applicable("QR", format!("no QP{qp} leaf")))?;
    Ok(SyntaxTree::node(
        Label::SVars(vec![qp]),
        vec![SyntaxTree::leaf(Label::QP(qp)), rest],
    ))
}

fn collapse(t: &SyntaxTree) -> Result<Option<SyntaxTree>> {
    if t.label == Label::S {
        let leaves = t.leaves();
        if let Some(Label::QP(i)) = leaves.iter().find(|l| matches!(l, Label::QP(_))) {
            return Err(not_applicable("Predicate Collapsing", format!("QP{i} is still under S")));
        }
        let xs = leaves
            .into_iter()
            .filter_map(|l| match l {
                Label::Var(i) => Some(*i),
                _ => None,
            })
            .collect();
        return Ok(Some(SyntaxTree::leaf(Label::CollapsedS(xs))));
    }
    for (k, c) in t.children.iter().enumerate() {
        if let Some(new) = collapse(c)? {
            let mut out = t.clone();
            out.children[k] = new;
            return Ok(Some(out));
        }
    }
    Ok(None)
}

/// Collapse the plain `S` subtree whose argument leaves are all variables.
/// Verb leaves are dropped; the variables are kept in surface order.
pub fn predicate_collapsing(t: &SyntaxTree) -> Result<SyntaxTree> {
    collapse(t)?.ok_or_else(|| not_applicable("Predicate Collapsing", "no S node"))
}

/// Rotate left at the root: `S^x̄[α, S^ȳ[β, γ]] ↦ S^x̄ȳ[Polyadic[α, β], γ]`.
pub fn rotation(t: &SyntaxTree) -> Result<SyntaxTree> {
    let (Label::SVars(xs), [alpha, right]) = (&t.label, t.children.as_slice()) else {
        return Err(not_applicable("Rotation", format!("root {} is not S^x̄ with two daughters", t.label)));
    };
    let (Label::SVars(ys), [beta, gamma]) = (&right.label, right.children.as_slice()) else {
        return Err(not_applicable("Rotation", format!("right daughter {} is not S^ȳ", right.label)));
    };
    let mut both = xs.clone();
    both.extend(ys);
    Ok(SyntaxTree::node(
        Label::SVars(both),
        vec![
            SyntaxTree::node(Label::Polyadic, vec![alpha.clone(), beta.clone()]),
            gamma.clone(),
        ],
    ))
}

fn rotation_sites(t: &SyntaxTree, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rotation(t).is_ok() {
        out.push(path.clone());
    }
    for (k, c) in t.children.iter().enumerate() {
        path.push(k);
        rotation_sites(c, path, out);
        path.pop();
    }
}

fn rotate_at(t: &SyntaxTree, path: &[usize]) -> Result<SyntaxTree> {
    match path.split_first() {
        None => rotation(t),
        Some((&k, rest)) => {
            let mut out = t.clone();
            out.children[k] = rotate_at(&t.children[k], rest)?;
            Ok(out)
        }
    }
}

/// Rotate at the deepest site until none is left.
pub fn rotate_innermost(t: &SyntaxTree) -> SyntaxTree {
    let mut cur = t.clone();
    loop {
        let mut sites = Vec::new();
        rotation_sites(&cur, &mut Vec::new(), &mut sites);
        let Some(deepest) = sites.into_iter().max_by_key(|p| p.len()) else {
            return cur;
        };
        cur = rotate_at(&cur, &deepest).expect("site found above");
    }
}

/// Every tree reachable by applying Rotation at any site until none applies.
pub fn rotation_normal_forms(t: &SyntaxTree) -> BTreeSet<SyntaxTree> {
    let mut done = BTreeSet::new();
    let mut stack = vec![t.clone()];
    while let Some(cur) = stack.pop() {
        let mut sites = Vec::new();
        rotation_sites(&cur, &mut Vec::new(), &mut sites);
        for p in &sites {
            stack.push(rotate_at(&cur, p).expect("site found above"));
        }
        if sites.is_empty() {
            done.insert(cur);
        }
    }
    done
}

/// Permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// The LF for scope order `sigma` (outermost first): raise `QP_σ(n)`, …, `QP_σ(1)`, then collapse.
pub fn lf(surface_tree: &SyntaxTree, sigma: &[usize]) -> Result<SyntaxTree> {
    let n = surface_arity(surface_tree).ok_or_else(|| Error::MalformedTree(surface_tree.parens()))?;
    check_sigma(sigma, n)?;
    let mut t = surface_tree.clone();
    for &i in sigma.iter().rev() {
        t = qr_rule(&t, i)?;
    }
    predicate_collapsing(&t)
}

pub fn check_sigma(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::Arity(sigma.len()));
    }
    let mut seen = vec![false; n];
    for (position, &value) in sigma.iter().enumerate() {
        if value == 0 || value > n || seen[value - 1] {
            return Err(Error::SigmaOutOfRange { position: position + 1, value, n });
        }
        seen[value - 1] = true;
    }
    Ok(())
}

pub fn derive_lfs(surface_tree: &SyntaxTree) -> Result<Vec<(Vec<usize>, SyntaxTree)>> {
    let n = surface_arity(surface_tree).ok_or_else(|| Error::MalformedTree(surface_tree.parens()))?;
    permutations(n)
        .into_iter()
        .map(|s| lf(surface_tree, &s).map(|t| (s, t)))
        .collect()
}

pub fn derive_plfs(surface_tree: &SyntaxTree) -> Result<Vec<(Vec<usize>, SyntaxTree)>> {
    Ok(derive_lfs(surface_tree)?
        .into_iter()
        .map(|(s, t)| (s, rotate_innermost(&t)))
        .collect())
}

/// Labels of computation-tree nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CompLabel {
    /// The quantifier of position `i`.
    Quant(usize),
    /// The verb predicate over all positions.
    Pred,
    Lift,
    EvId,
    /// `mosl` binding `vars` (in the order its left child produces them),
    /// reindexing to surface order first when more than one is bound.
    Mos(Vec<usize>),
    Pile(Side),
    /// `cps^side(eps)`; `free` marks a `cps^?` node.
    Cps { side: Side, free: bool, eps: Side, var: usize },
}

impl fmt::Display for CompLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompLabel::Quant(i) => write!(f, "Q{i}"),
            CompLabel::Pred => write!(f, "P"),
            CompLabel::Lift => write!(f, "Lift"),
            CompLabel::EvId => write!(f, "ev_id2"),
            CompLabel::Mos(xs) => {
                let names: Vec<String> = xs.iter().map(|i| format!("X{i}")).collect();
                write!(f, "mosl_{}", names.join("×"))?;
                if xs.len() > 1 && xs.windows(2).any(|w| w[0] > w[1]) {
                    write!(f, "·π{xs:?}")?;
                }
                Ok(())
            }
            CompLabel::Pile(side) => write!(f, "pu{side}"),
            CompLabel::Cps { side, free, eps, var } => {
                let s = if *free { "?".to_string() } else { side.to_string() };
                write!(f, "cps{s}(eps{eps}_X{var})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompTree {
    pub label: CompLabel,
    pub children: Vec<CompTree>,
}

/// Types of computation-tree nodes, with variable sets in the order they occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CType {
    Bool,
    /// `C(2)`.
    CompBool,
    /// `P(X_v1 × …)`.
    Pred(Vec<usize>),
    /// `C(X_v1 × …)`.
    Comp(Vec<usize>),
    /// `C(P(X_v1 × …))`.
    CompPred(Vec<usize>),
}

fn prod_name(xs: &[usize]) -> String {
    xs.iter().map(|i| format!("X{i}")).collect::<Vec<_>>().join("×")
}

impl fmt::Display for CType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CType::Bool => write!(f, "2"),
            CType::CompBool => write!(f, "C(2)"),
            CType::Pred(xs) => write!(f, "P({})", prod_name(xs)),
            CType::Comp(xs) => write!(f, "C({})", prod_name(xs)),
            CType::CompPred(xs) => write!(f, "C(P({}))", prod_name(xs)),
        }
    }
}

fn sorted(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

fn without(xs: &[usize], v: usize) -> Vec<usize> {
    xs.iter().copied().filter(|&x| x != v).collect()
}

impl CompTree {
    pub fn leaf(label: CompLabel) -> Self {
        CompTree { label, children: Vec::new() }
    }

    pub fn node(label: CompLabel, children: Vec<CompTree>) -> Self {
        CompTree { label, children }
    }

    /// Number of quantifier positions, taken from the predicate leaf type.
    pub fn arity(&self) -> usize {
        self.leaf_labels().iter().filter(|l| matches!(l, CompLabel::Quant(_))).count()
    }

    pub fn leaf_labels(&self) -> Vec<&CompLabel> {
        if self.children.is_empty() {
            vec![&self.label]
        } else {
            self.children.iter().flat_map(|c| c.leaf_labels()).collect()
        }
    }

    /// Bottom-up type of the tree for a sentence of arity `n`.
    pub fn type_check(&self, n: usize) -> Result<CType> {
        let bad = |msg: String| Error::MalformedTree(format!("{}: {msg}", self.label));
        let kids: Vec<CType> = self.children.iter().map(|c| c.type_check(n)).collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if kids.len() == k {
                Ok(())
            } else {
                Err(bad(format!("expected {k} children, found {}", kids.len())))
            }
        };
        match &self.label {
            CompLabel::Quant(i) => {
                want(0)?;
                if *i == 0 || *i > n {
                    return Err(bad(format!("no position {i} in a sentence of arity {n}")));
                }
                Ok(CType::Comp(vec![*i]))
            }
            CompLabel::Pred => {
                want(0)?;
                Ok(CType::Pred((1..=n).collect()))
            }
            CompLabel::Lift => {
                want(1)?;
                match &kids[0] {
                    CType::Pred(xs) => Ok(CType::CompPred(xs.clone())),
                    other => Err(bad(format!("cannot lift {other}"))),
                }
            }
            CompLabel::EvId => {
                want(1)?;
                match &kids[0] {
                    CType::CompBool => Ok(CType::Bool),
                    other => Err(bad(format!("ev_id2 applied to {other}"))),
                }
            }
            CompLabel::Mos(bound) => {
                want(2)?;
                let (CType::Comp(cv), CType::Pred(pv)) = (&kids[0], &kids[1]) else {
                    return Err(bad(format!("mosl on {} × {}", kids[0], kids[1])));
                };
                if cv != bound {
                    return Err(bad(format!("binds {bound:?} but the computation is {}", kids[0])));
                }
                if sorted(cv) == *pv {
                    Ok(CType::Bool)
                } else if let [v] = cv.as_slice() {
                    if pv.contains(v) {
                        Ok(CType::Pred(without(pv, *v)))
                    } else {
                        Err(bad(format!("x{v} is not free in {}", kids[1])))
                    }
                } else {
                    Err(bad(format!("cannot bind {bound:?} in {}", kids[1])))
                }
            }
            CompLabel::Pile(_) => {
                want(2)?;
                let (CType::Comp(a), CType::Comp(b)) = (&kids[0], &kids[1]) else {
                    return Err(bad(format!("pile-up of {} × {}", kids[0], kids[1])));
                };
                if a.iter().any(|x| b.contains(x)) {
                    return Err(bad("repeated variable".into()));
                }
                Ok(CType::Comp([a.as_slice(), b.as_slice()].concat()))
            }
            CompLabel::Cps { eps, var, .. } => {
                want(2)?;
                let (point, preds) = match eps {
                    Side::Left => (&kids[1], &kids[0]),
                    Side::Right => (&kids[0], &kids[1]),
                };
                let (CType::Comp(pt), CType::CompPred(pv)) = (point, preds) else {
                    return Err(bad(format!("cps on {} × {}", kids[0], kids[1])));
                };
                if pt != &vec![*var] || !pv.contains(var) {
                    return Err(bad(format!("eps at X{var} on {} × {}", kids[0], kids[1])));
                }
                if pv.len() == 1 {
                    Ok(CType::CompBool)
                } else {
                    Ok(CType::CompPred(without(pv, *var)))
                }
            }
        }
    }

    /// The leaf types in the order the strategy diagrams take them:
    /// `C(X1) × P(X1×…×Xn) × C(X2) × …`.
    pub fn signature(&self, n: usize) -> Result<String> {
        let mut quants: Vec<usize> = self
            .leaf_labels()
            .into_iter()
            .filter_map(|l| match l {
                CompLabel::Quant(i) => Some(*i),
                _ => None,
            })
            .collect();
        quants.sort_unstable();
        let preds = self.leaf_labels().iter().filter(|l| matches!(l, CompLabel::Pred)).count();
        if quants != (1..=n).collect::<Vec<_>>() || preds != 1 {
            return Err(Error::MalformedTree(self.parens()));
        }
        let mut parts = vec![CType::Comp(vec![1]).to_string(), CType::Pred((1..=n).collect()).to_string()];
        parts.extend((2..=n).map(|i| CType::Comp(vec![i]).to_string()));
        Ok(parts.join("×"))
    }

    pub fn parens(&self) -> String {
        render_parens(&self.label, &self.children, |c| c.label.to_string(), |c| &c.children)
    }

    pub fn ascii(&self) -> String {
        render_ascii(self, |t| t.label.to_string(), |t| &t.children)
    }
}

impl fmt::Display for CompTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.parens())
    }
}

fn arity_of(t: &SyntaxTree) -> usize {
    t.leaves()
        .iter()
        .find_map(|l| match l {
            Label::CollapsedS(xs) => Some(xs.len()),
            _ => None,
        })
        .unwrap_or(0)
}

fn relabel_lf(t: &SyntaxTree, n: usize) -> Result<CompTree> {
    match (&t.label, t.children.as_slice()) {
        (Label::SVars(xs), [qp, rest]) if xs.len() == 1 && qp.label == Label::QP(xs[0]) && qp.is_leaf() => {
            Ok(CompTree::node(
                CompLabel::Mos(xs.clone()),
                vec![CompTree::leaf(CompLabel::Quant(xs[0])), relabel_lf(rest, n)?],
            ))
        }
        (Label::CollapsedS(xs), []) if *xs == (1..=n).collect::<Vec<_>>() => Ok(CompTree::leaf(CompLabel::Pred)),
        _ => Err(Error::MalformedTree(format!("not an LF: {}", t.parens()))),
    }
}

/// `S^x ↦ mosl`, `QP_i ↦ Q_i`, collapsed `S ↦ P`.
pub fn relabel_a(lf: &SyntaxTree) -> Result<CompTree> {
    let ct = relabel_lf(lf, arity_of(lf))?;
    ct.type_check(arity_of(lf))?;
    Ok(ct)
}

fn relabel_poly(t: &SyntaxTree, side: Side) -> Result<(CompTree, Vec<usize>)> {
    match (&t.label, t.children.as_slice()) {
        (Label::QP(i), []) => Ok((CompTree::leaf(CompLabel::Quant(*i)), vec![*i])),
        (Label::Polyadic, [a, b]) => {
            let (ta, mut va) = relabel_poly(a, side)?;
            let (tb, vb) = relabel_poly(b, side)?;
            va.extend(vb);
            Ok((CompTree::node(CompLabel::Pile(side), vec![ta, tb]), va))
        }
        _ => Err(Error::MalformedTree(format!("not a polyadic quantifier: {}", t.parens()))),
    }
}

/// `S^x̄ ↦ mosl` (after reindexing), `Polyadic ↦ pu^side`.
pub fn relabel_b_with(plf: &SyntaxTree, side: Side) -> Result<CompTree> {
    let n = arity_of(plf);
    let ct = match (&plf.label, plf.children.as_slice()) {
        (Label::SVars(xs), [q, body]) => {
            let (tq, vq) = relabel_poly(q, side)?;
            if vq != *xs {
                return Err(Error::MalformedTree(format!("S^{} over {}", vars(xs), q.parens())));
            }
            CompTree::node(CompLabel::Mos(xs.clone()), vec![tq, relabel_b_body(body, n)?])
        }
        _ => return Err(Error::MalformedTree(format!("not a PLF: {}", plf.parens()))),
    };
    ct.type_check(n)?;
    Ok(ct)
}

fn relabel_b_body(t: &SyntaxTree, n: usize) -> Result<CompTree> {
    match &t.label {
        Label::CollapsedS(_) => relabel_lf(t, n),
        _ => Err(Error::MalformedTree(format!("PLF not fully rotated at {}", t.parens()))),
    }
}

pub fn relabel_b(plf: &SyntaxTree) -> Result<CompTree> {
    relabel_b_with(plf, Side::Left)
}

/// Number of two-way `cps` choices for a surface tree of arity `n`.
pub fn eps_choices(n: usize) -> usize {
    n.saturating_sub(1)
}

/// All choice vectors `[S node, VP node]` in order `l` before `r`.
pub fn eps_vectors(n: usize) -> Vec<Vec<Side>> {
    let k = eps_choices(n);
    (0..1usize << k)
        .map(|code| {
            (0..k)
                .map(|j| if code >> (k - 1 - j) & 1 == 0 { Side::Left } else { Side::Right })
                .collect()
        })
        .collect()
}

/// In situ relabelling: `S, VP, V' ↦ cps`, the verb ↦ lifted predicate,
/// and `ev_id2` on top. `eps` lists the choices for the `S` and `VP` nodes.
pub fn relabel_c(surface_tree: &SyntaxTree, eps: &[Side]) -> Result<CompTree> {
    let n = surface_arity(surface_tree).ok_or_else(|| Error::MalformedTree(surface_tree.parens()))?;
    if eps.len() != eps_choices(n) {
        return Err(Error::Arity(eps.len()));
    }
    let q = |i| CompTree::leaf(CompLabel::Quant(i));
    let lift = CompTree::node(CompLabel::Lift, vec![CompTree::leaf(CompLabel::Pred)]);
    let cps = |side: Option<Side>, eps: Side, var: usize, kids: Vec<CompTree>| {
        CompTree::node(
            CompLabel::Cps {
                side: side.unwrap_or(Side::Left),
                free: side.is_none(),
                eps,
                var,
            },
            kids,
        )
    };
    let vp = match n {
        1 => lift,
        2 => cps(None, Side::Left, 2, vec![lift, q(2)]),
        _ => cps(
            Some(eps[1]),
            Side::Left,
            3,
            vec![cps(None, Side::Left, 2, vec![lift, q(2)]), q(3)],
        ),
    };
    let s = cps(eps.first().copied(), Side::Right, 1, vec![q(1), vp]);
    let ct = CompTree::node(CompLabel::EvId, vec![s]);
    ct.type_check(n)?;
    Ok(ct)
}

/// The scope order (outermost first) a Strategy C choice vector yields.
pub fn c_scope_order(eps: &[Side]) -> Result<Vec<usize>> {
    use Side::*;
    Ok(match eps {
        [] => vec![1],
        [Left] => vec![1, 2],
        [Right] => vec![2, 1],
        [Left, Left] => vec![1, 2, 3],
        [Left, Right] => vec![1, 3, 2],
        [Right, Left] => vec![2, 3, 1],
        [Right, Right] => vec![3, 2, 1],
        _ => return Err(Error::Arity(eps.len() + 1)),
    })
}
