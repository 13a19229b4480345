//! Name-keyed registries for the interchangeable strategies: term orders and
//! presentation oracles.

use crate::curve_oracle::default_curve_oracle;
use crate::error::{Error, Result};
use crate::field::FieldChoice;
use crate::order::{LexOrder, OnePointOrder, TermOrder, UnequalOrder};
use crate::presentation::LabeledGenerator;
use crate::verify::{MonoidOracle, PresentationOracle};

pub type TermOrderFactory = fn(&[LabeledGenerator]) -> Box<dyn TermOrder>;

fn one_point(g: &[LabeledGenerator]) -> Box<dyn TermOrder> {
    Box::new(OnePointOrder { weights: g.iter().map(|g| g.weight()).collect() })
}

fn unequal(g: &[LabeledGenerator]) -> Box<dyn TermOrder> {
    Box::new(UnequalOrder { weights: g.iter().map(|g| g.weight()).collect(), p1_everywhere: false })
}

fn unequal_printed(g: &[LabeledGenerator]) -> Box<dyn TermOrder> {
    Box::new(UnequalOrder { weights: g.iter().map(|g| g.weight()).collect(), p1_everywhere: true })
}

fn equal(_: &[LabeledGenerator]) -> Box<dyn TermOrder> {
    Box::new(LexOrder)
}

pub const TERM_ORDERS: &[(&str, TermOrderFactory)] = &[
    ("one-point", one_point),
    ("unequal", unequal),
    ("unequal-printed", unequal_printed),
    ("equal", equal),
];

pub fn term_order(name: &str, gens: &[LabeledGenerator]) -> Result<Box<dyn TermOrder>> {
    TERM_ORDERS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| f(gens))
        .ok_or_else(|| Error::Unsupported(format!("no term order named {name:?}")))
}

pub type OracleFactory = fn(FieldChoice) -> Result<Box<dyn PresentationOracle>>;

fn monoid(_: FieldChoice) -> Result<Box<dyn PresentationOracle>> {
    Ok(Box::new(MonoidOracle))
}

/// `monoid` is one-point only and field-independent; `curve` works on the
/// default curve over the chosen field.
pub const ORACLES: &[(&str, OracleFactory)] = &[("monoid", monoid), ("curve", default_curve_oracle)];

pub fn oracle(name: &str, field: FieldChoice) -> Result<Box<dyn PresentationOracle>> {
    let (_, f) = ORACLES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Unsupported(format!("no oracle named {name:?}")))?;
    f(field)
}
