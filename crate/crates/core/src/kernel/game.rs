//! Interned short games and their arithmetic.
//!
//! Every distinct pair of option sets is stored once in a process-wide
//! table, so a [`Game`] is a thin handle and structural equality is an
//! identity test. Order, sums, negatives and canonical forms are memoized
//! either in the node itself or in shared concurrent tables.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::{LazyLock, OnceLock};

use dashmap::DashMap;

use super::dyadic::Dyadic;

struct Node {
    id: u32,
    left: Box<[Game]>,
    right: Box<[Game]>,
    canonical: OnceLock<Game>,
    negative: OnceLock<Game>,
    number: OnceLock<Option<Dyadic>>,
    birthday: OnceLock<u32>,
    stops: OnceLock<(Dyadic, Dyadic)>,
}

/// Handle to an interned game. Copying is free; `==` is structural identity.
#[derive(Clone, Copy)]
pub struct Game(&'static Node);

type OptionKey = (Box<[u32]>, Box<[u32]>);

struct Store {
    table: DashMap<OptionKey, Game>,
    next_id: AtomicU32,
    leq: DashMap<(u32, u32), bool>,
    sums: DashMap<(u32, u32), Game>,
    numbers: DashMap<Dyadic, Game>,
}

static STORE: LazyLock<Store> = LazyLock::new(|| Store {
    table: DashMap::new(),
    next_id: AtomicU32::new(0),
    leq: DashMap::new(),
    sums: DashMap::new(),
    numbers: DashMap::new(),
});

/// Number of distinct games interned so far.
pub fn interned_count() -> usize {
    STORE.table.len()
}

fn normalize(mut options: Vec<Game>) -> Vec<Game> {
    options.sort_by_key(|g| g.id());
    options.dedup();
    options
}

fn intern(left: Vec<Game>, right: Vec<Game>) -> Game {
    let left = normalize(left);
    let right = normalize(right);
    let key: OptionKey = (
        left.iter().map(|g| g.id()).collect(),
        right.iter().map(|g| g.id()).collect(),
    );
    if let Some(g) = STORE.table.get(&key) {
        return *g;
    }
    *STORE.table.entry(key).or_insert_with(|| {
        let node = Box::new(Node {
            id: STORE.next_id.fetch_add(1, AtomicOrdering::Relaxed),
            left: left.into_boxed_slice(),
            right: right.into_boxed_slice(),
            canonical: OnceLock::new(),
            negative: OnceLock::new(),
            number: OnceLock::new(),
            birthday: OnceLock::new(),
            stops: OnceLock::new(),
        });
        Game(Box::leak(node))
    })
}

/// Build `{left | right}` without simplification.
pub fn make(left: impl IntoIterator<Item = Game>, right: impl IntoIterator<Item = Game>) -> Game {
    intern(left.into_iter().collect(), right.into_iter().collect())
}

impl Game {
    pub fn zero() -> Game {
        Game::number(Dyadic::ZERO)
    }

    pub fn integer(n: i64) -> Game {
        Game::number(Dyadic::integer(n))
    }

    /// Canonical form of a dyadic rational.
    pub fn number(q: Dyadic) -> Game {
        if let Some(g) = STORE.numbers.get(&q) {
            return *g;
        }
        if q.is_integer() {
            let n = q.numerator();
            // iterative so large integers such as promotion sentinels do not recurse deeply
            let step = if n >= 0 { 1 } else { -1 };
            let mut g = Game::cached_number(Dyadic::ZERO).unwrap_or_else(|| Game::register_number(Dyadic::ZERO, intern(vec![], vec![])));
            let mut k = 0i64;
            while k != n {
                let next = k + step;
                g = match Game::cached_number(Dyadic::integer(next)) {
                    Some(cached) => cached,
                    None => {
                        let node = if step > 0 { intern(vec![g], vec![]) } else { intern(vec![], vec![g]) };
                        Game::register_number(Dyadic::integer(next), node)
                    }
                };
                k = next;
            }
            g
        } else {
            let unit = Dyadic::new(1, q.exponent());
            let lo = Game::number(q - unit);
            let hi = Game::number(q + unit);
            Game::register_number(q, intern(vec![lo], vec![hi]))
        }
    }

    fn cached_number(q: Dyadic) -> Option<Game> {
        STORE.numbers.get(&q).map(|g| *g)
    }

    fn register_number(q: Dyadic, g: Game) -> Game {
        let _ = g.0.canonical.set(g);
        let _ = g.0.number.set(Some(q));
        STORE.numbers.insert(q, g);
        g
    }

    /// The nimber `*k`.
    pub fn nimber(k: u32) -> Game {
        let mut heaps = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let g = make(heaps.clone(), heaps.clone());
            heaps.push(g);
        }
        make(heaps.clone(), heaps)
    }

    pub fn star() -> Game {
        Game::nimber(1)
    }

    /// `↑ = {0|*}`.
    pub fn up() -> Game {
        make([Game::zero()], [Game::star()])
    }

    /// `n·↑`, plus `*` when `star` is set, in canonical form.
    pub fn up_multiple(n: i32, star: bool) -> Game {
        let unit = if n >= 0 { Game::up() } else { Game::up().neg() };
        let mut g = if star { Game::star() } else { Game::zero() };
        for _ in 0..n.unsigned_abs() {
            g = g.add(unit).canonical();
        }
        g.canonical()
    }

    /// `tiny-q = {0 || 0 | -q}`.
    pub fn tiny(q: Game) -> Game {
        make([Game::zero()], [make([Game::zero()], [q.neg()])]).canonical()
    }

    pub fn miny(q: Game) -> Game {
        Game::tiny(q).neg()
    }

    pub fn id(&self) -> u32 {
        self.0.id
    }

    pub fn left(&self) -> &'static [Game] {
        &self.0.left
    }

    pub fn right(&self) -> &'static [Game] {
        &self.0.right
    }

    pub fn is_zero(&self) -> bool {
        self.0.left.is_empty() && self.0.right.is_empty()
    }

    /// Length of the longest run of moves, counting both players.
    pub fn birthday(&self) -> u32 {
        if let Some(b) = self.0.birthday.get() {
            return *b;
        }
        let b = self
            .left()
            .iter()
            .chain(self.right())
            .map(|g| g.birthday() + 1)
            .max()
            .unwrap_or(0);
        *self.0.birthday.get_or_init(|| b)
    }

    /// The number this game is, when its options are all numbers with every
    /// Left option below every Right option. Exact for canonical forms.
    pub fn number_value(&self) -> Option<Dyadic> {
        if let Some(v) = self.0.number.get() {
            return *v;
        }
        let v = self.compute_number();
        *self.0.number.get_or_init(|| v)
    }

    fn compute_number(&self) -> Option<Dyadic> {
        let mut lo: Option<Dyadic> = None;
        for g in self.left() {
            let v = g.number_value()?;
            lo = Some(lo.map_or(v, |l| l.max(v)));
        }
        let mut hi: Option<Dyadic> = None;
        for g in self.right() {
            let v = g.number_value()?;
            hi = Some(hi.map_or(v, |h| h.min(v)));
        }
        Dyadic::simplest_between(lo, hi)
    }

    pub fn is_number(&self) -> bool {
        self.number_value().is_some()
    }

    /// Known not to equal any number. Only consults a canonical form that
    /// has already been computed, so it is safe during canonicalization.
    fn known_non_number(&self) -> bool {
        !self.is_number() && self.0.canonical.get().is_some_and(|c| !c.is_number())
    }

    /// `self ≤ other`.
    pub fn leq(self, other: Game) -> bool {
        if self == other {
            return true;
        }
        if let (Some(a), Some(b)) = (self.number_value(), other.number_value()) {
            return a <= b;
        }
        let key = (self.id(), other.id());
        if let Some(r) = STORE.leq.get(&key) {
            return *r;
        }
        // Against a number only the non-number's options matter, which keeps
        // comparisons with large integers shallow.
        let result = if other.is_number() && self.known_non_number() {
            !self.left().iter().any(|&gl| other.leq(gl))
        } else if self.is_number() && other.known_non_number() {
            !other.right().iter().any(|&hr| hr.leq(self))
        } else {
            !self.left().iter().any(|&gl| other.leq(gl)) && !other.right().iter().any(|&hr| hr.leq(self))
        };
        STORE.leq.insert(key, result);
        result
    }

    pub fn geq(self, other: Game) -> bool {
        other.leq(self)
    }

    pub fn eq(self, other: Game) -> bool {
        self.leq(other) && other.leq(self)
    }

    /// Incomparable: neither `≤` nor `≥`.
    pub fn fuzzy(self, other: Game) -> bool {
        !self.leq(other) && !other.leq(self)
    }

    pub fn lt(self, other: Game) -> bool {
        self.leq(other) && !other.leq(self)
    }

    pub fn gt(self, other: Game) -> bool {
        other.lt(self)
    }

    /// Order relation between two games, `None` when confused.
    pub fn compare(self, other: Game) -> Option<Ordering> {
        match (self.leq(other), other.leq(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Disjunctive sum. Not canonicalized unless both summands are numbers.
    pub fn add(self, other: Game) -> Game {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        if let (Some(a), Some(b)) = (self.number_value(), other.number_value()) {
            return Game::number(a + b);
        }
        let key = if self.id() <= other.id() { (self.id(), other.id()) } else { (other.id(), self.id()) };
        if let Some(g) = STORE.sums.get(&key) {
            return *g;
        }
        let g = if other.is_number() && self.known_non_number() {
            translate(self, other)
        } else if self.is_number() && other.known_non_number() {
            translate(other, self)
        } else {
            let left = self
                .left()
                .iter()
                .map(|&gl| gl.add(other))
                .chain(other.left().iter().map(|&hl| self.add(hl)))
                .collect();
            let right = self
                .right()
                .iter()
                .map(|&gr| gr.add(other))
                .chain(other.right().iter().map(|&hr| self.add(hr)))
                .collect();
            intern(left, right)
        };
        STORE.sums.insert(key, g);
        g
    }

    pub fn sub(self, other: Game) -> Game {
        self.add(other.neg())
    }

    pub fn neg(self) -> Game {
        if let Some(g) = self.0.negative.get() {
            return *g;
        }
        let g = match self.number_value() {
            Some(q) if self.0.canonical.get() == Some(&self) => Game::number(-q),
            _ => intern(
                self.right().iter().map(|g| g.neg()).collect(),
                self.left().iter().map(|g| g.neg()).collect(),
            ),
        };
        let _ = g.0.negative.set(self);
        *self.0.negative.get_or_init(|| g)
    }

    pub fn is_canonical(&self) -> bool {
        self.0.canonical.get() == Some(self)
    }

    /// The unique simplest game equal to `self`: no dominated and no
    /// reversible options.
    pub fn canonical(self) -> Game {
        if let Some(c) = self.0.canonical.get() {
            return *c;
        }
        let left: Vec<Game> = self.left().iter().map(|g| g.canonical()).collect();
        let right: Vec<Game> = self.right().iter().map(|g| g.canonical()).collect();
        let c = simplify(normalize(left), normalize(right));
        let _ = c.0.canonical.set(c);
        *self.0.canonical.get_or_init(|| c)
    }

    /// Left and right stops of the canonical form.
    pub fn stops(self) -> (Dyadic, Dyadic) {
        let c = self.canonical();
        if let Some(s) = c.0.stops.get() {
            return *s;
        }
        let s = match c.number_value() {
            Some(q) => (q, q),
            None => {
                let left = c.left().iter().map(|g| g.stops().1).max();
                let right = c.right().iter().map(|g| g.stops().0).min();
                // canonical non-numbers always have options on both sides
                (left.expect("canonical non-number has a Left option"), right.expect("canonical non-number has a Right option"))
            }
        };
        *c.0.stops.get_or_init(|| s)
    }

    /// `(a - b) / 2` when the game equals the switch `{a|b}` with numbers `a > b`.
    pub fn switch_temperature(self) -> Option<Dyadic> {
        let (a, b) = self.as_switch()?;
        Some((a - b).half())
    }

    /// The pair `(a, b)` when the canonical form is `{a|b}` with numbers `a > b`.
    pub fn as_switch(self) -> Option<(Dyadic, Dyadic)> {
        let c = self.canonical();
        if c.left().len() != 1 || c.right().len() != 1 {
            return None;
        }
        let a = c.left()[0].number_value()?;
        let b = c.right()[0].number_value()?;
        (a > b).then_some((a, b))
    }

    pub fn outcome(self) -> OutcomeClass {
        let zero = Game::zero();
        match (zero.leq(self), self.leq(zero)) {
            (true, false) => OutcomeClass::LeftWinsAlways,
            (false, true) => OutcomeClass::RightWinsAlways,
            (true, true) => OutcomeClass::SecondPlayerWins,
            (false, false) => OutcomeClass::FirstPlayerWins,
        }
    }

    /// All distinct subpositions, including `self`.
    pub fn subpositions(self) -> Vec<Game> {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self];
        let mut out = Vec::new();
        while let Some(g) = stack.pop() {
            if seen.insert(g) {
                out.push(g);
                stack.extend(g.left().iter().chain(g.right()).copied());
            }
        }
        out
    }
}

fn simplify(mut left: Vec<Game>, mut right: Vec<Game>) -> Game {
    loop {
        if let Some(g) = number_shortcut(&left, &right) {
            return g;
        }
        remove_dominated(&mut left, |a, b| a.leq(b));
        remove_dominated(&mut right, |a, b| b.leq(a));
        let g = intern(left.clone(), right.clone());
        let mut changed = false;

        let mut new_left = Vec::with_capacity(left.len());
        for &gl in &left {
            match gl.right().iter().find(|&&glr| glr.leq(g)) {
                Some(glr) => {
                    new_left.extend_from_slice(glr.left());
                    changed = true;
                }
                None => new_left.push(gl),
            }
        }
        let mut new_right = Vec::with_capacity(right.len());
        for &gr in &right {
            match gr.left().iter().find(|&&grl| g.leq(grl)) {
                Some(grl) => {
                    new_right.extend_from_slice(grl.right());
                    changed = true;
                }
                None => new_right.push(gr),
            }
        }
        if !changed {
            return g;
        }
        left = normalize(new_left);
        right = normalize(new_right);
    }
}

fn number_shortcut(left: &[Game], right: &[Game]) -> Option<Game> {
    let mut lo: Option<Dyadic> = None;
    for g in left {
        let v = g.number_value()?;
        lo = Some(lo.map_or(v, |l| l.max(v)));
    }
    let mut hi: Option<Dyadic> = None;
    for g in right {
        let v = g.number_value()?;
        hi = Some(hi.map_or(v, |h| h.min(v)));
    }
    Dyadic::simplest_between(lo, hi).map(Game::number)
}

/// Drop every option `a` for which some other option `b` has `worse(a, b)`.
fn remove_dominated(options: &mut Vec<Game>, worse: impl Fn(Game, Game) -> bool) {
    let snapshot = options.clone();
    options.retain(|&a| !snapshot.iter().any(|&b| b != a && worse(a, b)));
}

// Number translation: `g + x = {gL + x | gR + x}` when `g` is not equal to
// a number.
fn translate(g: Game, x: Game) -> Game {
    intern(g.left().iter().map(|&gl| gl.add(x)).collect(), g.right().iter().map(|&gr| gr.add(x)).collect())
}

impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Game {}

impl Hash for Game {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Game#{}({})", self.id(), super::format_value(*self))
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_value(*self))
    }
}

/// Who wins a game, read off its order relation to zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize, serde::Deserialize)]
pub enum OutcomeClass {
    /// `G > 0`
    LeftWinsAlways,
    /// `G < 0`
    RightWinsAlways,
    /// `G = 0`
    SecondPlayerWins,
    /// `G ‖ 0`
    FirstPlayerWins,
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeClass::LeftWinsAlways => "positive",
            OutcomeClass::RightWinsAlways => "negative",
            OutcomeClass::SecondPlayerWins => "zero",
            OutcomeClass::FirstPlayerWins => "fuzzy",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Game {
        Game::number(Dyadic::new(1, 1))
    }

    #[test]
    fn interning_shares_identity() {
        let a = make([Game::zero()], [Game::zero()]);
        let b = make([Game::zero(), Game::zero()], [Game::zero()]);
        assert_eq!(a, b);
        assert_eq!(a, Game::star());
        assert_eq!(make([], []), Game::zero());
    }

    #[test]
    fn order_basics() {
        let up = Game::up();
        let star = Game::star();
        assert!(Game::zero().leq(up));
        assert!(!up.leq(Game::zero()));
        assert!(!Game::zero().leq(star) && !star.leq(Game::zero()));
        let one = half().add(half());
        assert!(one.leq(Game::integer(1)) && Game::integer(1).leq(one));
    }

    #[test]
    fn equality_examples() {
        assert!(Game::star().add(Game::star()).eq(Game::zero()));
        let down_star = Game::up().neg().add(Game::star());
        assert!(down_star.fuzzy(Game::zero()));
        let two = Game::integer(2);
        let one = Game::integer(1);
        let zero = Game::zero();
        let g = make([make([two], [one])], [make([one], [zero])]);
        assert!(g.eq(one));
    }

    #[test]
    fn sums_and_negation() {
        let up = Game::up();
        let dd_star = Game::up_multiple(-2, true);
        let total = up.add(dd_star).canonical();
        assert_eq!(total, Game::up_multiple(-1, true));
        let h = half();
        assert!(h.add(h.add(Game::integer(-1))).eq(Game::zero()));
        assert_eq!(Game::up().neg().neg(), Game::up());
    }

    #[test]
    fn canonical_forms() {
        let zero = Game::zero();
        let star = Game::star();
        assert_eq!(make([zero, star], [Game::integer(1)]).canonical(), half());
        let up = Game::up();
        let dup_star = make([zero, star], [up]).canonical();
        assert_eq!(dup_star, make([zero], [up]).canonical());
        assert_eq!(dup_star, Game::up_multiple(2, true));
        assert_eq!(make([zero, star], [star]).canonical(), up);
    }

    #[test]
    fn outcomes() {
        assert_eq!(Game::integer(3).outcome(), OutcomeClass::LeftWinsAlways);
        assert_eq!(Game::up_multiple(-1, true).outcome(), OutcomeClass::FirstPlayerWins);
        assert_eq!(Game::number(Dyadic::new(-1, 2)).outcome(), OutcomeClass::RightWinsAlways);
        assert_eq!(Game::zero().outcome(), OutcomeClass::SecondPlayerWins);
    }

    #[test]
    fn number_values() {
        assert_eq!(make([Game::zero()], [Game::integer(1)]).number_value(), Some(Dyadic::new(1, 1)));
        assert_eq!(make([Game::zero()], [half()]).number_value(), Some(Dyadic::new(1, 2)));
        assert_eq!(Game::star().number_value(), None);
        assert_eq!(Game::integer(1000).number_value(), Some(Dyadic::integer(1000)));
        assert_eq!(Game::integer(-7).birthday(), 7);
    }

    #[test]
    fn stops_and_temperature() {
        let two = Game::integer(2);
        let one = Game::integer(1);
        let g = make([make([two], [one])], [Game::zero()]);
        assert_eq!(g.stops(), (Dyadic::integer(1), Dyadic::ZERO));
        let pm1 = make([one], [Game::integer(-1)]);
        assert_eq!(pm1.switch_temperature(), Some(Dyadic::integer(1)));
        assert_eq!(Game::up().switch_temperature(), None);
    }
}
