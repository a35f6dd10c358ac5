//! Stored counterexamples: non-commuting pile-ups and readings that
//! Strategy C cannot produce.

use std::fmt::Write as _;
use std::path::Path;

use contscope::evaluator::{find_incompleteness_witness, IncompletenessWitness, InstanceSpace};
use contscope::monads::laws::LawBudget;
use contscope::strengths::{find_noncommutativity, CommutativityWitness};
use contscope::{Determiner, FinSet, Monad};

use crate::suites::SuiteOutput;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Noncommuting,
    Incomplete,
}

/// File name, kind, and the search producing its contents.
pub struct Entry {
    pub file: &'static str,
    pub kind: Kind,
    search: fn() -> Result<String, CliError>,
}

fn noncommuting(m: Monad) -> Result<String, CliError> {
    let x = FinSet::new("X", 2);
    let w = find_noncommutativity(&m, &x, &x, &LawBudget::default())?;
    Ok(w.to_text()?)
}

/// The search space for missing Strategy C readings.
pub fn incompleteness_space() -> InstanceSpace {
    InstanceSpace::new(&[Determiner::Every, Determiner::Some, Determiner::Most, Determiner::No], &[2, 2, 2])
}

fn incomplete(sigma: &[usize]) -> Result<String, CliError> {
    let w = find_incompleteness_witness(sigma, &incompleteness_space())?
        .ok_or_else(|| CliError::Input(format!("no witness for σ = {sigma:?}")))?;
    Ok(w.to_text())
}

pub const ENTRIES: [Entry; 4] = [
    Entry { file: "continuation_noncommuting.txt", kind: Kind::Noncommuting, search: || noncommuting(Monad::Continuation) },
    Entry { file: "exception_noncommuting.txt", kind: Kind::Noncommuting, search: || noncommuting(Monad::exception(2)) },
    Entry { file: "incompleteness_213.txt", kind: Kind::Incomplete, search: || incomplete(&[2, 1, 3]) },
    Entry { file: "incompleteness_312.txt", kind: Kind::Incomplete, search: || incomplete(&[3, 1, 2]) },
];

impl Entry {
    pub fn search(&self) -> Result<String, CliError> {
        (self.search)()
    }
}

fn strip(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim_end().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

/// Load a stored witness and recompute it; `Ok(false)` if it no longer holds.
pub fn reverify(kind: Kind, text: &str) -> Result<bool, CliError> {
    Ok(match kind {
        Kind::Noncommuting => CommutativityWitness::from_text(text)?.reverify()?,
        Kind::Incomplete => IncompletenessWitness::from_text(text)?.reverify()?,
    })
}

pub fn write(dir: &Path) -> Result<SuiteOutput, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut out = SuiteOutput::default();
    for e in &ENTRIES {
        let text = e.search()?;
        let path = dir.join(e.file);
        std::fs::write(&path, &text).map_err(|err| CliError::Input(format!("{}: {err}", path.display())))?;
        let _ = writeln!(out.text, "wrote {}", path.display());
    }
    Ok(out)
}

/// Reverify every stored witness and check a fresh search still finds it.
pub fn verify(dir: &Path) -> Result<SuiteOutput, CliError> {
    let mut out = SuiteOutput::default();
    for e in &ENTRIES {
        let path = dir.join(e.file);
        let stored = std::fs::read_to_string(&path).map_err(|err| CliError::Input(format!("{}: {err}", path.display())))?;
        let holds = reverify(e.kind, &stored)?;
        let same = strip(&stored) == strip(&e.search()?);
        let ok = holds && same;
        let _ = writeln!(
            out.text,
            "{} {}: {}, {}",
            if ok { "PASS" } else { "FAIL" },
            e.file,
            if holds { "reverified" } else { "no longer holds" },
            if same { "search reproduces it" } else { "search finds a different witness" }
        );
        if !ok {
            out.failures += 1;
        }
    }
    Ok(out)
}
