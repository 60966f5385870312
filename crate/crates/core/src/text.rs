//! Canonical text form of labels.
//!
//! ```text
//! V(1/4;1/2)   typical            A(-1/2;1)   atypical
//! P(0;0)       projective         Verma0(0;1) reducible Verma
//! v(1/2;1)     gl(1|1) Verma      a(0)  p(1)  gl(1|1) atypical / projective
//! ```
//!
//! A leading `Pi` marks a parity-reversed module label, e.g. `PiV(1/4;1/2)`.

use alloc::format;
use alloc::string::String;

use crate::error::{Error, Result};
use crate::labels::{LabelKind, ModuleLabel};
use crate::oracle::FinLabel;
use crate::symbolic::rational::{parse_rational, to_i64, Rational};

/// Either kind of label accepted by [`parse_label`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedLabel {
    Module(ModuleLabel),
    Fin(FinLabel),
}

pub fn render(label: &ModuleLabel) -> String {
    let pi = if label.parity_flip { "Pi" } else { "" };
    match &label.kind {
        LabelKind::TypicalV { n, ehat } => format!("{pi}V({n};{ehat})"),
        LabelKind::AtypicalA { n, ell } => format!("{pi}A({n};{ell})"),
        LabelKind::VermaV0 { n, ell } => format!("{pi}Verma0({n};{ell})"),
        LabelKind::ProjectiveP { n, ell } => format!("{pi}P({n};{ell})"),
    }
}

pub fn render_fin(label: &FinLabel) -> String {
    format!("{label}")
}

fn split_call(text: &str) -> Result<(&str, alloc::vec::Vec<&str>)> {
    let bad = || Error::Parse(format!("malformed label {text:?}"));
    let t = text.trim();
    let open = t.find('(').ok_or_else(bad)?;
    let inner = t[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let kind = t[..open].trim();
    if inner.contains('(') || inner.contains(')') {
        return Err(bad());
    }
    Ok((kind, inner.split(';').map(str::trim).collect()))
}

fn integer_arg(s: &str, what: &str) -> Result<i64> {
    let r: Rational = parse_rational(s)?;
    to_i64(&r)
        .filter(|_| r.is_integer())
        .ok_or_else(|| Error::Parse(format!("{what} must be an integer, got {s:?}")))
}

/// Parse a module label or a finite-dimensional label.
pub fn parse_label(text: &str) -> Result<ParsedLabel> {
    let (kind, args) = split_call(text)?;
    let (flip, kind) = match kind.strip_prefix("Pi") {
        Some(rest) if !rest.is_empty() => (true, rest),
        _ => (false, kind),
    };
    let arity = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::Parse(format!("{kind} takes {k} argument(s) in {text:?}")))
        }
    };
    let module = |l: ModuleLabel| Ok(ParsedLabel::Module(l.with_parity(flip)));
    match kind {
        "V" => {
            arity(2)?;
            module(ModuleLabel::typical(parse_rational(args[0])?, parse_rational(args[1])?)?)
        }
        "A" => {
            arity(2)?;
            module(ModuleLabel::atypical(parse_rational(args[0])?, integer_arg(args[1], "l")?))
        }
        "P" => {
            arity(2)?;
            module(ModuleLabel::projective(parse_rational(args[0])?, integer_arg(args[1], "l")?))
        }
        "Verma0" => {
            arity(2)?;
            module(ModuleLabel::verma0(parse_rational(args[0])?, integer_arg(args[1], "l")?))
        }
        "v" | "a" | "p" if flip => Err(Error::Parse(format!(
            "parity marker is not supported on {text:?}"
        ))),
        "v" => {
            arity(2)?;
            Ok(ParsedLabel::Fin(FinLabel::verma(
                parse_rational(args[0])?,
                parse_rational(args[1])?,
            )))
        }
        "a" => {
            arity(1)?;
            Ok(ParsedLabel::Fin(FinLabel::atypical(parse_rational(args[0])?)))
        }
        "p" => {
            arity(1)?;
            Ok(ParsedLabel::Fin(FinLabel::projective(parse_rational(args[0])?)))
        }
        _ => Err(Error::Parse(format!("unknown label kind {kind:?} in {text:?}"))),
    }
}

pub fn parse_module_label(text: &str) -> Result<ModuleLabel> {
    match parse_label(text)? {
        ParsedLabel::Module(l) => Ok(l),
        ParsedLabel::Fin(_) => Err(Error::Parse(format!(
            "{text:?} is a gl(1|1) label; expected V, A, P or Verma0"
        ))),
    }
}

pub fn parse_fin_label(text: &str) -> Result<FinLabel> {
    match parse_label(text)? {
        ParsedLabel::Fin(l) => Ok(l),
        ParsedLabel::Module(_) => Err(Error::Parse(format!(
            "{text:?} is a module label; expected v, a or p"
        ))),
    }
}
