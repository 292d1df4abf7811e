//! Dyadic rationals `n / 2^k`, the number values reachable by short games.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A rational whose denominator is a power of two, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };

    pub fn new(num: i64, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.reduce();
        d
    }

    pub const fn integer(n: i64) -> Self {
        Dyadic { num: n, exp: 0 }
    }

    fn reduce(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    /// Denominator is `2^exponent`.
    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn abs(self) -> Self {
        Dyadic { num: self.num.abs(), exp: self.exp }
    }

    pub fn floor(&self) -> i64 {
        self.num >> self.exp
    }

    pub fn ceil(&self) -> i64 {
        -((-self.num) >> self.exp)
    }

    pub fn half(self) -> Self {
        Dyadic::new(self.num, self.exp + 1)
    }

    /// Scaled numerators over the common denominator.
    fn aligned(self, other: Self) -> (i128, i128, u32) {
        let exp = self.exp.max(other.exp);
        let a = (self.num as i128) << (exp - self.exp);
        let b = (other.num as i128) << (exp - other.exp);
        (a, b, exp)
    }

    fn from_wide(num: i128, exp: u32) -> Self {
        let mut num = num;
        let mut exp = exp;
        while exp > 0 && num % 2 == 0 {
            num /= 2;
            exp -= 1;
        }
        Dyadic::new(i64::try_from(num).expect("dyadic numerator overflow"), exp)
    }

    /// The simplest number strictly between `lo` and `hi`, where a missing
    /// bound is unbounded. Returns `None` when the interval is empty.
    pub fn simplest_between(lo: Option<Dyadic>, hi: Option<Dyadic>) -> Option<Dyadic> {
        match (lo, hi) {
            (None, None) => Some(Dyadic::ZERO),
            (None, Some(h)) => Some(if h.is_positive() { Dyadic::ZERO } else { Dyadic::integer(h.ceil() - 1) }),
            (Some(l), None) => Some(if l.is_negative() { Dyadic::ZERO } else { Dyadic::integer(l.floor() + 1) }),
            (Some(l), Some(h)) => {
                if l >= h {
                    return None;
                }
                if l.is_negative() && h.is_positive() {
                    return Some(Dyadic::ZERO);
                }
                if !l.is_negative() {
                    let candidate = Dyadic::integer(l.floor() + 1);
                    if candidate < h {
                        return Some(candidate);
                    }
                } else {
                    let candidate = Dyadic::integer(h.ceil() - 1);
                    if candidate > l {
                        return Some(candidate);
                    }
                }
                let mut exp = 1;
                loop {
                    // floor(l * 2^exp)
                    let scaled = ((l.num as i128) << exp) >> l.exp;
                    let candidate = Dyadic::from_wide(scaled + 1, exp);
                    if candidate > l && candidate < h {
                        return Some(candidate);
                    }
                    exp += 1;
                }
            }
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(rhs);
        Dyadic::from_wide(a + b, exp)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    #[test]
    fn reduces() {
        assert_eq!(q(4, 3), q(1, 1));
        assert_eq!(q(0, 5), Dyadic::ZERO);
        assert_eq!(q(-6, 2).to_string(), "-3/2");
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(q(-1, 1).floor(), -1);
        assert_eq!(q(-1, 1).ceil(), 0);
        assert_eq!(q(5, 2).floor(), 1);
        assert_eq!(q(5, 2).ceil(), 2);
    }

    #[test]
    fn simplest() {
        let s = |l: Option<Dyadic>, h: Option<Dyadic>| Dyadic::simplest_between(l, h);
        assert_eq!(s(Some(q(0, 0)), Some(q(1, 0))), Some(q(1, 1)));
        assert_eq!(s(Some(q(0, 0)), Some(q(1, 1))), Some(q(1, 2)));
        assert_eq!(s(Some(q(1, 1)), Some(q(1, 0))), Some(q(3, 2)));
        assert_eq!(s(Some(q(-1, 0)), Some(q(3, 0))), Some(Dyadic::ZERO));
        assert_eq!(s(Some(q(1, 0)), Some(q(5, 0))), Some(q(2, 0)));
        assert_eq!(s(Some(q(-5, 0)), Some(q(-1, 0))), Some(q(-2, 0)));
        assert_eq!(s(None, Some(q(-1, 1))), Some(q(-1, 0)));
        assert_eq!(s(Some(q(3, 0)), None), Some(q(4, 0)));
        assert_eq!(s(Some(q(-3, 2)), Some(q(-1, 1))), Some(q(-5, 3)));
        assert_eq!(s(Some(q(1, 0)), Some(q(1, 0))), None);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(q(1, 1) + q(1, 1), q(1, 0));
        assert_eq!(q(1, 2) - q(1, 0), q(-3, 2));
        assert!(q(1, 3) < q(1, 2));
    }
}
