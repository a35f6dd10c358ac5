//! Reading tables and tree dumps.

use std::fmt::Write as _;

use contscope::evaluator::{enumerate_readings, eval_comp_tree, order_string, reading_tree, Param, Reading, Strategy};
use contscope::scopetrees::{lf, rotate_innermost, surface};

use crate::input::Scene;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Records,
}

pub fn readings(scene: &Scene, strategies: &[Strategy]) -> Result<Vec<Reading>, CliError> {
    Ok(enumerate_readings(&scene.model, strategies)?)
}

/// One aligned row per reading under a header naming the sentence.
pub fn table(scene: &Scene, rows: &[Reading]) -> String {
    let mut out = format!("sentence: {}\n", scene.text);
    let _ = writeln!(out, "quantifiers: {}", scene.labels.join(", "));
    let _ = writeln!(out, "{:<10}{:<10}{:<10}truth", "strategy", "param", "scope");
    for r in rows {
        let _ = writeln!(out, "{:<10}{:<10}{:<10}{}", r.strategy.to_string(), r.param.to_string(), order_string(&r.order), r.truth);
    }
    out
}

/// `strategy|param|order|truth`, one line per reading.
pub fn records(rows: &[Reading]) -> String {
    rows.iter()
        .map(|r| format!("{}|{}|{}|{}\n", r.strategy, r.param, order_string(&r.order), r.truth))
        .collect()
}

/// The formal tree and computation tree of every reading, with the tree's value.
pub fn trees(scene: &Scene, rows: &[Reading]) -> Result<String, CliError> {
    let n = scene.model.arity();
    let mut out = String::new();
    for r in rows {
        let formal = match (&r.strategy, &r.param) {
            (Strategy::A, Param::Sigma(s)) => lf(&surface(n)?, s)?,
            (Strategy::B, Param::Sigma(s)) => rotate_innermost(&lf(&surface(n)?, s)?),
            _ => surface(n)?,
        };
        let ct = reading_tree(r.strategy, &r.param, n)?;
        let kind = match r.strategy {
            Strategy::A => "LF",
            Strategy::B => "PLF",
            Strategy::C => "surface",
        };
        let _ = writeln!(out, "\n== {} {} ==", r.strategy, r.param);
        let _ = writeln!(out, "{kind}: {}", formal.parens());
        out.push_str(&formal.ascii());
        let _ = writeln!(out, "computation: {}", ct.parens());
        out.push_str(&ct.ascii());
        let _ = writeln!(out, "tree value: {}", eval_comp_tree(&ct, &scene.model)?);
    }
    Ok(out)
}
