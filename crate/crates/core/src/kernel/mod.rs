//! Exact arithmetic on short partizan games.

mod dyadic;
mod game;
mod names;
mod parse;

pub use dyadic::Dyadic;
pub use game::{interned_count, make, Game, OutcomeClass};
pub use names::{format_canonical, format_value, recognize, Catalog, CatalogBounds, ValueName};
pub use parse::{parse_value_expr, ParseError};
