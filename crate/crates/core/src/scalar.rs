//! Exact field elements: rationals and prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A field with exact arithmetic.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;

    fn from_i64(n: i64) -> Self;

    /// `n / d`, or `None` when `d` vanishes in the field.
    fn from_ratio(n: i64, d: i64) -> Option<Self> {
        let d = Self::from_i64(d);
        if d.is_zero() {
            None
        } else {
            Some(Self::from_i64(n) * d.inv())
        }
    }

    /// 0 for the rationals, p for F_p.
    fn characteristic() -> u64;

    fn field_name() -> String;

    /// Candidate roots of a polynomial (coefficients low to high) lying in the field.
    ///
    /// Used to find eigenvalues when splitting endomorphisms.
    fn rational_roots(coeffs: &[Self]) -> Vec<Self>;
}

/// Rational number, kept in lowest terms with a positive denominator.
///
/// Small values live in machine words and are promoted to big integers on
/// overflow. The representation is canonical, so derived equality and hashing
/// agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

impl Rat {
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_i128(n as i128, d as i128)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Rat {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Rat {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(r) => r.denom().clone(),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, o: Rat) -> Rat {
        if let (Rat::Small(a, b), Rat::Small(c, d)) = (&self, &o) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Rat::from_i128(a + c, b);
            }
            if let Some(n) = (a * d).checked_add(c * b) {
                return Rat::from_i128(n, b * d);
            }
        }
        Rat::from_big(self.to_big() + o.to_big())
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, o: Rat) -> Rat {
        self + (-o)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, o: Rat) -> Rat {
        if let (Rat::Small(a, b), Rat::Small(c, d)) = (&self, &o) {
            return Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Rat::from_big(self.to_big() * o.to_big())
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(n, d) => Rat::from_i128(-(n as i128), d as i128),
            Rat::Big(r) => Rat::from_big(-r),
        }
    }
}

impl Zero for Rat {
    fn zero() -> Rat {
        Rat::Small(0, 1)
    }
    fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }
}

impl One for Rat {
    fn one() -> Rat {
        Rat::Small(1, 1)
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    // Trial division; gives up on large inputs rather than stalling.
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i != n / i {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Some(out)
}

impl Scalar for Rat {
    fn inv(&self) -> Rat {
        match self {
            Rat::Small(0, _) => panic!("inverse of zero"),
            Rat::Small(n, d) => Rat::from_i128(*d as i128, *n as i128),
            Rat::Big(r) => Rat::from_big(r.recip()),
        }
    }

    fn from_i64(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    fn characteristic() -> u64 {
        0
    }

    fn field_name() -> String {
        "Q".to_string()
    }

    fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
        let mut c: Vec<Rat> = coeffs.to_vec();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.len() <= 1 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        // Factor out x^k so the constant term is nonzero.
        let lead0 = c.iter().position(|x| !x.is_zero()).unwrap();
        if lead0 > 0 {
            roots.push(Rat::zero());
            c.drain(..lead0);
            if c.len() <= 1 {
                return roots;
            }
        }
        // Clear denominators.
        let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
        let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return roots;
        };
        let eval = |x: &Rat| {
            c.iter()
                .rev()
                .fold(Rat::zero(), |acc, a| acc * x.clone() + a.clone())
        };
        let mut seen = std::collections::HashSet::new();
        for p in &ps {
            for q in &qs {
                for s in [1, -1] {
                    let r = Rat::from_big(BigRational::new(p * s, q.clone()));
                    if seen.insert(r.clone()) && eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots
    }
}

/// Residues modulo a prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn characteristic() -> u64 {
        P
    }

    fn field_name() -> String {
        format!("Fp:{P}")
    }

    fn rational_roots(coeffs: &[Self]) -> Vec<Self> {
        // Exhaustive search is only sensible for small fields.
        if P > 4096 {
            return Vec::new();
        }
        (0..P)
            .map(|v| Fp(v))
            .filter(|x| {
                coeffs
                    .iter()
                    .rev()
                    .fold(Self::zero(), |acc, a| acc * *x + *a)
                    .is_zero()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_lowest_terms() {
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert_eq!(format!("{}", Rat::new(6, 3)), "2");
    }

    #[test]
    fn rat_promotes_and_demotes() {
        let big = Rat::from_i64(i64::MAX) * Rat::from_i64(4);
        assert!(matches!(big, Rat::Big(_)));
        let back = big * Rat::new(1, 4);
        assert_eq!(back, Rat::from_i64(i64::MAX));
        assert!(matches!(back, Rat::Small(..)));
    }

    #[test]
    fn rat_inverse() {
        let a = Rat::new(-3, 7);
        assert_eq!(a.clone() * a.inv(), Rat::one());
        assert!((a.clone() + (-a)).is_zero());
    }

    #[test]
    fn fp_inverse() {
        for v in 1..7 {
            let a = Fp::<7>::new(v);
            assert_eq!(a * a.inv(), Fp::one());
        }
        assert_eq!(Fp::<5>::new(-1), Fp::new(4));
    }

    #[test]
    fn roots_of_quadratic() {
        // (x - 1)(2x + 3) = 2x^2 + x - 3
        let r = Rat::rational_roots(&[Rat::from_i64(-3), Rat::one(), Rat::from_i64(2)]);
        assert!(r.contains(&Rat::one()));
        assert!(r.contains(&Rat::new(-3, 2)));
        assert_eq!(r.len(), 2);
    }
}
