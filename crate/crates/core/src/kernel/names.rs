//! Naming canonical values and printing them in the value-expression syntax.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use super::dyadic::Dyadic;
use super::game::{make, Game};

/// A human name for a value. Every name can be turned back into a game
/// equal to the one it was recognized from.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ValueName {
    Integer(i64),
    Dyadic(Dyadic),
    Nimber(u32),
    /// `ups·↑`, plus `*` when `star` is set. `ups` is never zero.
    UpMultiple { ups: i32, star: bool },
    Switch { left: Dyadic, right: Dyadic },
    Tiny(Dyadic),
    Miny(Dyadic),
    /// Canonical bracket form.
    Unnamed(String),
}

impl ValueName {
    pub fn is_named(&self) -> bool {
        !matches!(self, ValueName::Unnamed(_))
    }

    /// Short English description, empty for unnamed values.
    pub fn describe(&self) -> String {
        match self {
            ValueName::Integer(_) => "integer".into(),
            ValueName::Dyadic(_) => "number".into(),
            ValueName::Nimber(1) => "star".into(),
            ValueName::Nimber(k) => format!("star {k}"),
            ValueName::UpMultiple { ups, star } => {
                let base = match ups {
                    1 => "up".to_string(),
                    -1 => "down".to_string(),
                    2 => "double up".to_string(),
                    -2 => "double down".to_string(),
                    n if *n > 0 => format!("{n} ups"),
                    n => format!("{} downs", -n),
                };
                if *star {
                    format!("{base} star")
                } else {
                    base
                }
            }
            ValueName::Switch { .. } => "switch".into(),
            ValueName::Tiny(_) => "tiny".into(),
            ValueName::Miny(_) => "miny".into(),
            ValueName::Unnamed(_) => String::new(),
        }
    }

    /// Reference game for a catalog name. `None` for `Unnamed`.
    pub fn to_game(&self) -> Option<Game> {
        Some(match self {
            ValueName::Integer(n) => Game::integer(*n),
            ValueName::Dyadic(q) => Game::number(*q),
            ValueName::Nimber(k) => Game::nimber(*k),
            ValueName::UpMultiple { ups, star } => Game::up_multiple(*ups, *star),
            ValueName::Switch { left, right } => make([Game::number(*left)], [Game::number(*right)]),
            ValueName::Tiny(q) => Game::tiny(Game::number(*q)),
            ValueName::Miny(q) => Game::miny(Game::number(*q)),
            ValueName::Unnamed(_) => return None,
        })
    }
}

impl fmt::Display for ValueName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueName::Integer(n) => write!(f, "{n}"),
            ValueName::Dyadic(q) => write!(f, "{q}"),
            ValueName::Nimber(0) => f.write_str("0"),
            ValueName::Nimber(1) => f.write_str("*"),
            ValueName::Nimber(k) => write!(f, "*{k}"),
            ValueName::UpMultiple { ups, star } => {
                let arrow = if *ups > 0 { '^' } else { 'v' };
                let n = ups.unsigned_abs();
                if n == 1 {
                    write!(f, "{arrow}")?;
                } else {
                    write!(f, "{n}.{arrow}")?;
                }
                if *star {
                    f.write_str("*")?;
                }
                Ok(())
            }
            ValueName::Switch { left, right } => write!(f, "{{{left}|{right}}}"),
            ValueName::Tiny(q) => write!(f, "Tiny({q})"),
            ValueName::Miny(q) => write!(f, "Miny({q})"),
            ValueName::Unnamed(s) => f.write_str(s),
        }
    }
}

/// Size limits for the generated catalog of named infinitesimals.
#[derive(Clone, Copy, Debug)]
pub struct CatalogBounds {
    pub max_nimber: u32,
    pub max_ups: i32,
    /// Tinies and minies are generated for `q = k / 2^tiny_exponent` up to `tiny_max`.
    pub tiny_max: i64,
    pub tiny_exponent: u32,
}

impl Default for CatalogBounds {
    fn default() -> Self {
        CatalogBounds { max_nimber: 4, max_ups: 8, tiny_max: 4, tiny_exponent: 3 }
    }
}

/// Canonical game to name, for the values that are not numbers or switches.
pub struct Catalog {
    names: HashMap<Game, ValueName>,
}

impl Catalog {
    pub fn new(bounds: CatalogBounds) -> Self {
        let mut names = HashMap::new();
        let mut add = |g: Game, name: ValueName| {
            names.entry(g.canonical()).or_insert(name);
        };
        for k in 1..=bounds.max_nimber {
            add(Game::nimber(k), ValueName::Nimber(k));
        }
        for n in 1..=bounds.max_ups {
            for star in [false, true] {
                add(Game::up_multiple(n, star), ValueName::UpMultiple { ups: n, star });
                add(Game::up_multiple(-n, star), ValueName::UpMultiple { ups: -n, star });
            }
        }
        let steps = bounds.tiny_max << bounds.tiny_exponent;
        for k in 1..=steps {
            let q = Dyadic::new(k, bounds.tiny_exponent);
            add(Game::tiny(Game::number(q)), ValueName::Tiny(q));
        }
        for k in 1..=steps {
            let q = Dyadic::new(k, bounds.tiny_exponent);
            add(Game::miny(Game::number(q)), ValueName::Miny(q));
        }
        Catalog { names }
    }

    pub fn recognize(&self, g: Game) -> ValueName {
        let c = g.canonical();
        if let Some(q) = c.number_value() {
            return if q.is_integer() { ValueName::Integer(q.numerator()) } else { ValueName::Dyadic(q) };
        }
        if let Some(name) = self.names.get(&c) {
            return name.clone();
        }
        if let Some((left, right)) = c.as_switch() {
            return ValueName::Switch { left, right };
        }
        ValueName::Unnamed(format_canonical(c))
    }
}

fn default_catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::new(CatalogBounds::default()))
}

/// Name a value using the default catalog.
pub fn recognize(g: Game) -> ValueName {
    default_catalog().recognize(g)
}

/// Print a value: its name when it has one, otherwise `{L,...|R,...}` with
/// options printed the same way.
pub fn format_value(g: Game) -> String {
    recognize(g).to_string()
}

/// The canonical form written out as `{L,...|R,...}`, even when the value
/// has a name. Options are printed by [`format_value`].
pub fn format_canonical(g: Game) -> String {
    let c = g.canonical();
    let side = |options: &[Game]| {
        let mut sorted: Vec<Game> = options.to_vec();
        sorted.sort_by_cached_key(|g| display_key(*g));
        sorted.iter().map(|g| format_value(*g)).collect::<Vec<_>>().join(",")
    };
    format!("{{{}|{}}}", side(c.left()), side(c.right()))
}

// Numbers first by value, then everything else by birthday and text.
fn display_key(g: Game) -> (u8, Dyadic, u32, String) {
    match g.number_value() {
        Some(q) => (0, q, 0, String::new()),
        None => (1, Dyadic::ZERO, g.birthday(), format_value(g)),
    }
}
