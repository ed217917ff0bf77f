//! Line-oriented text formats: UGIF for constraint instances and SCF for
//! labelled surface complexes. Blank lines and `#` comments are ignored
//! unless a format gives a comment structured meaning.

pub mod scf;
pub mod ugif;

use crate::error::{Error, Result};

/// Non-blank, non-comment lines as `(1-based line number, tokens)`.
fn statements(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn number(line: usize, what: &str, s: &str) -> Result<usize> {
    s.parse::<usize>().map_err(|_| Error::parse(line, format!("{what}: expected a non-negative integer, got {s:?}")))
}

fn arity(line: usize, toks: &[&str], n: usize) -> Result<()> {
    if toks.len() != n {
        return Err(Error::parse(line, format!("`{}` takes {} arguments, got {}", toks[0], n - 1, toks.len() - 1)));
    }
    Ok(())
}

/// Checks the `<magic> 1` first statement.
fn expect_magic<'a>(it: &mut impl Iterator<Item = (usize, Vec<&'a str>)>, magic: &str) -> Result<()> {
    match it.next() {
        Some((_, toks)) if toks == [magic, "1"] => Ok(()),
        Some((line, toks)) => Err(Error::parse(line, format!("expected `{magic} 1`, got `{}`", toks.join(" ")))),
        None => Err(Error::parse(1, format!("empty document, expected `{magic} 1`"))),
    }
}
