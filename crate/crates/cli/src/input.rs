//! Model and sentence files.
//!
//! Both are line-oriented: `[section]` headers, `key: value` lines, `#` comments.
//!
//! ```text
//! [carriers]
//! girls: g1 g2
//!
//! [nouns]
//! girl: girls {g1 g2}
//!
//! [verbs]
//! likes: 2 (g1 b1) (g2 b2)
//! ```
//!
//! A sentence names the determiner and noun of each quantifier phrase and the verb:
//!
//! ```text
//! qp1: every girl
//! qp2: a boy
//! verb: likes
//! ```

use std::path::Path;

use contscope::evaluator::Model;
use contscope::fincore::product;
use contscope::{make_gq, Determiner, FinSet, GQuant, Pred};

use crate::CliError;

#[derive(Clone, Debug)]
struct Line<'a> {
    no: usize,
    section: Option<&'a str>,
    key: &'a str,
    value: &'a str,
}

fn lines<'a>(path: &str, text: &'a str, sections: &[&str]) -> Result<Vec<Line<'a>>, CliError> {
    let mut out = Vec::new();
    let mut section = None;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let name = name.trim();
            if !sections.contains(&name) {
                return Err(CliError::parse(path, no, format!("unknown section `[{name}]`")));
            }
            section = Some(name);
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| CliError::parse(path, no, format!("expected `key: value`, found `{line}`")))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(CliError::parse(path, no, "empty key"));
        }
        if out.iter().any(|l: &Line| l.section == section && l.key == key) {
            return Err(CliError::parse(path, no, format!("duplicate key `{key}`")));
        }
        out.push(Line { no, section, key, value: value.trim() });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    pub name: String,
    pub elements: Vec<String>,
}

impl Carrier {
    pub fn set(&self) -> FinSet {
        FinSet::new(self.name.clone(), self.elements.len())
    }

    pub fn index(&self, element: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == element)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Noun {
    pub name: String,
    pub carrier: String,
    pub members: Vec<String>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verb {
    pub name: String,
    pub arity: usize,
    pub tuples: Vec<Vec<String>>,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct ModelFile {
    pub path: String,
    pub carriers: Vec<Carrier>,
    pub nouns: Vec<Noun>,
    pub verbs: Vec<Verb>,
}

fn braced<'a>(path: &str, no: usize, s: &'a str) -> Result<Vec<&'a str>, CliError> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| CliError::parse(path, no, format!("expected `{{...}}`, found `{s}`")))?;
    Ok(inner.split_whitespace().collect())
}

fn tuples(path: &str, no: usize, s: &str) -> Result<Vec<Vec<String>>, CliError> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| CliError::parse(path, no, format!("expected `(...)`, found `{rest}`")))?;
        out.push(body.0.split_whitespace().map(String::from).collect());
        rest = body.1.trim_start();
    }
    Ok(out)
}

impl ModelFile {
    pub fn parse(path: &str, text: &str) -> Result<Self, CliError> {
        let mut m = ModelFile { path: path.to_string(), carriers: Vec::new(), nouns: Vec::new(), verbs: Vec::new() };
        for l in lines(path, text, &["carriers", "nouns", "verbs"])? {
            match l.section {
                Some("carriers") => {
                    let elements: Vec<String> = l.value.split_whitespace().map(String::from).collect();
                    for (i, e) in elements.iter().enumerate() {
                        if elements[..i].contains(e) {
                            return Err(CliError::parse(path, l.no, format!("element `{e}` listed twice")));
                        }
                    }
                    m.carriers.push(Carrier { name: l.key.to_string(), elements });
                }
                Some("nouns") => {
                    let (carrier, rest) = l
                        .value
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| CliError::parse(path, l.no, "expected `carrier {elements}`"))?;
                    let members = braced(path, l.no, rest)?.into_iter().map(String::from).collect();
                    m.nouns.push(Noun { name: l.key.to_string(), carrier: carrier.to_string(), members, line: l.no });
                }
                Some("verbs") => {
                    let (arity, rest) = l.value.split_once(char::is_whitespace).unwrap_or((l.value, ""));
                    let arity: usize = arity
                        .parse()
                        .map_err(|_| CliError::parse(path, l.no, format!("expected an arity, found `{arity}`")))?;
                    let ts = tuples(path, l.no, rest)?;
                    if let Some(t) = ts.iter().find(|t| t.len() != arity) {
                        return Err(CliError::parse(path, l.no, format!("tuple ({}) does not have {arity} elements", t.join(" "))));
                    }
                    m.verbs.push(Verb { name: l.key.to_string(), arity, tuples: ts, line: l.no });
                }
                _ => return Err(CliError::parse(path, l.no, "entry outside a section")),
            }
        }
        for n in &m.nouns {
            let c = m
                .carrier(&n.carrier)
                .ok_or_else(|| CliError::parse(path, n.line, format!("unknown carrier `{}`", n.carrier)))?;
            if let Some(e) = n.members.iter().find(|e| c.index(e).is_none()) {
                return Err(CliError::parse(path, n.line, format!("`{e}` is not an element of `{}`", c.name)));
            }
        }
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read(path)?;
        ModelFile::parse(&path.display().to_string(), &text)
    }

    pub fn carrier(&self, name: &str) -> Option<&Carrier> {
        self.carriers.iter().find(|c| c.name == name)
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Clone, Debug)]
pub struct Phrase {
    pub det_word: String,
    pub det: Determiner,
    pub noun: String,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct SentenceFile {
    pub path: String,
    pub phrases: Vec<Phrase>,
    pub verb: String,
    pub verb_line: usize,
}

impl SentenceFile {
    pub fn parse(path: &str, text: &str) -> Result<Self, CliError> {
        let ls = lines(path, text, &[])?;
        let mut phrases = Vec::new();
        let mut verb = None;
        let mut arity = None;
        for l in &ls {
            if l.key == "verb" {
                verb = Some((l.value.to_string(), l.no));
            } else if l.key == "arity" {
                arity = Some((l.value.parse::<usize>().map_err(|_| CliError::parse(path, l.no, "arity must be a number"))?, l.no));
            } else if let Some(k) = l.key.strip_prefix("qp").and_then(|k| k.parse::<usize>().ok()) {
                let mut words = l.value.split_whitespace();
                let (Some(d), Some(noun), None) = (words.next(), words.next(), words.next()) else {
                    return Err(CliError::parse(path, l.no, "expected `determiner noun`"));
                };
                let det = d.parse().map_err(|e| CliError::parse(path, l.no, format!("{e}")))?;
                phrases.push((k, Phrase { det_word: d.to_string(), det, noun: noun.to_string(), line: l.no }));
            } else {
                return Err(CliError::parse(path, l.no, format!("unknown key `{}`", l.key)));
            }
        }
        phrases.sort_by_key(|(k, _)| *k);
        if phrases.iter().enumerate().any(|(i, (k, _))| *k != i + 1) {
            return Err(CliError::Input(format!("{path}: quantifier phrases must be numbered qp1, qp2, ...")));
        }
        let phrases: Vec<Phrase> = phrases.into_iter().map(|(_, p)| p).collect();
        if !(1..=3).contains(&phrases.len()) {
            return Err(CliError::Input(format!("{path}: a sentence has one to three quantifier phrases, found {}", phrases.len())));
        }
        if let Some((a, no)) = arity {
            if a != phrases.len() {
                return Err(CliError::parse(path, no, format!("arity {a} but {} quantifier phrases", phrases.len())));
            }
        }
        let (verb, verb_line) = verb.ok_or_else(|| CliError::Input(format!("{path}: missing `verb`")))?;
        Ok(SentenceFile { path: path.to_string(), phrases, verb, verb_line })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read(path)?;
        SentenceFile::parse(&path.display().to_string(), &text)
    }

    pub fn arity(&self) -> usize {
        self.phrases.len()
    }

    /// Surface word order: subject, verb, then the objects.
    pub fn text(&self) -> String {
        let phrase = |p: &Phrase| format!("{} {}", p.det_word, p.noun);
        let mut words = vec![phrase(&self.phrases[0]), self.verb.clone()];
        words.extend(self.phrases[1..].iter().map(phrase));
        words.join(" ")
    }
}

/// A sentence bound to a model.
#[derive(Clone)]
pub struct Scene {
    pub text: String,
    /// `Q1 = every{g1,g2}` per position.
    pub labels: Vec<String>,
    pub quants: Vec<GQuant>,
    pub model: Model,
}

pub fn resolve(model: &ModelFile, sentence: &SentenceFile) -> Result<Scene, CliError> {
    let sp = &sentence.path;
    let mut quants = Vec::new();
    let mut labels = Vec::new();
    let mut carriers = Vec::new();
    for p in &sentence.phrases {
        let noun = model
            .nouns
            .iter()
            .find(|n| n.name == p.noun)
            .ok_or_else(|| CliError::parse(sp, p.line, format!("unknown noun `{}` (not in {})", p.noun, model.path)))?;
        let carrier = model.carrier(&noun.carrier).expect("checked when parsing");
        let set = carrier.set();
        let idx: Vec<usize> = noun.members.iter().map(|e| carrier.index(e).expect("checked when parsing")).collect();
        quants.push(make_gq(p.det, &set, &Pred::from_elements(&set, &idx)?)?);
        labels.push(format!("Q{} = {}{{{}}}", quants.len(), p.det, noun.members.join(",")));
        carriers.push(carrier);
    }
    let verb = model
        .verbs
        .iter()
        .find(|v| v.name == sentence.verb)
        .ok_or_else(|| CliError::parse(sp, sentence.verb_line, format!("unknown verb `{}` (not in {})", sentence.verb, model.path)))?;
    if verb.arity != sentence.arity() {
        return Err(CliError::parse(
            sp,
            sentence.verb_line,
            format!("verb `{}` has arity {} but the sentence has {} quantifier phrases", verb.name, verb.arity, sentence.arity()),
        ));
    }
    let sets: Vec<FinSet> = carriers.iter().map(|c| c.set()).collect();
    let prod = product(&sets)?;
    let mut members = Vec::new();
    for t in &verb.tuples {
        let mut code = Vec::with_capacity(t.len());
        for (e, c) in t.iter().zip(&carriers) {
            code.push(c.index(e).ok_or_else(|| {
                CliError::parse(&model.path, verb.line, format!("`{e}` is not an element of `{}`", c.name))
            })?);
        }
        members.push(prod.encode(&code)?);
    }
    let p = Pred::from_elements(prod.carrier(), &members)?;
    let model = Model::from_gqs(&quants, p)?;
    Ok(Scene { text: sentence.text(), labels, quants, model })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MODEL: &str = "[carriers]\ngirls: g1 g2\nboys: b1 b2\n\n[nouns]\ngirl: girls {g1 g2}\nboy: boys {b1 b2}\n\n[verbs]\nlikes: 2 (g1 b1) (g2 b2)\n";

    #[test]
    fn parses_and_resolves() {
        let m = ModelFile::parse("m", MODEL).unwrap();
        assert_eq!(m.carriers.len(), 2);
        assert_eq!(m.verbs[0].tuples, vec![vec!["g1", "b1"], vec!["g2", "b2"]]);
        let s = SentenceFile::parse("s", "qp1: every girl\nqp2: a boy\nverb: likes\n").unwrap();
        assert_eq!(s.text(), "every girl likes a boy");
        let scene = resolve(&m, &s).unwrap();
        assert_eq!(scene.model.verb().members().collect::<Vec<_>>(), vec![0, 3]);
    }

    #[test]
    fn errors_carry_locations() {
        let e = ModelFile::parse("m", "[carriers]\nx a b\n").unwrap_err();
        assert_eq!(e.to_string(), "m:2: expected `key: value`, found `x a b`");
        let e = ModelFile::parse("m", "[nouns]\nkid: kids {k1}\n").unwrap_err();
        assert!(e.to_string().contains("unknown carrier `kids`"));
        let m = ModelFile::parse("m", MODEL).unwrap();
        let s = SentenceFile::parse("s", "qp1: every kid\nverb: likes\n").unwrap();
        assert_eq!(resolve(&m, &s).err().unwrap().to_string(), "s:1: unknown noun `kid` (not in m)");
        let s = SentenceFile::parse("s", "qp1: every girl\nverb: likes\n").unwrap();
        assert!(resolve(&m, &s).err().unwrap().to_string().contains("arity 2"));
        assert!(SentenceFile::parse("s", "qp1: several girls\nverb: likes\n").is_err());
    }
}
