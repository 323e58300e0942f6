//! Exact scalars: the rationals and prime fields F_p.
//!
//! Every linear-algebra computation in this crate runs over one of these
//! fields; no floating point is used anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A choice of coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements.
    Fp(u32),
}

impl Field {
    pub fn parse(s: &str) -> Option<Field> {
        match s {
            "Q" | "q" => Some(Field::Q),
            _ => {
                let p: u32 = s.strip_prefix('F').or_else(|| s.strip_prefix('f'))?.parse().ok()?;
                if p >= 2 && is_prime(p) {
                    Some(Field::Fp(p))
                } else {
                    None
                }
            }
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p, val: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p, val: 1 },
        }
    }

    /// The image of the integer `n` in this field.
    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u32;
                Scalar::Fp { p, val: r }
            }
        }
    }

    /// Number of field elements, when finite.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Q => None,
            Field::Fp(p) => Some(p as u64),
        }
    }

    /// All elements of a finite field, in the order 0, 1, ..., p-1.
    pub fn elements(self) -> Vec<Scalar> {
        match self {
            Field::Q => panic!("cannot enumerate the rationals"),
            Field::Fp(p) => (0..p).map(|val| Scalar::Fp { p, val }).collect(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{}", p),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `Q` or of some `F_p`. Mixing fields in arithmetic is a bug
/// and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u32, val: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) if p == q => Scalar::Fp {
                p: *p,
                val: ((*a as u64 + *b as u64) % *p as u64) as u32,
            },
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) if p == q => Scalar::Fp {
                p: *p,
                val: ((*a as u64 * *b as u64) % *p as u64) as u32,
            },
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { p, val } => {
                assert!(*val != 0, "inverse of zero");
                // Fermat: val^(p-2) mod p
                let mut acc: u64 = 1;
                let mut base = *val as u64;
                let mut e = *p as u64 - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % *p as u64;
                    }
                    base = base * base % *p as u64;
                    e >>= 1;
                }
                Scalar::Fp { p: *p, val: acc as u32 }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{}", val),
        }
    }
}

/// Parse a scalar from the textual form used in JSON files: an integer or
/// `a/b` over Q, a residue over F_p.
pub fn parse_scalar(field: Field, s: &str) -> Option<Scalar> {
    match field {
        Field::Q => {
            if let Some((n, d)) = s.split_once('/') {
                let n: BigInt = n.parse().ok()?;
                let d: BigInt = d.parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(Scalar::Q(BigRational::new(n, d)))
            } else {
                let n: BigInt = s.parse().ok()?;
                Some(Scalar::Q(BigRational::from_integer(n)))
            }
        }
        Field::Fp(_) => {
            let n: i64 = s.parse().ok()?;
            Some(field.from_int(n))
        }
    }
}

/// Render a scalar so that `parse_scalar` round-trips. Integers print bare.
pub fn scalar_to_string(s: &Scalar) -> String {
    format!("{}", s)
}

impl Scalar {
    /// Whether the scalar is (the image of) a non-negative integer, and that
    /// integer if small; used for structure-constant cross checks over Q.
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() && !r.numer().is_negative() {
                    use num_traits::ToPrimitive;
                    r.numer().to_u64()
                } else {
                    None
                }
            }
            Scalar::Fp { val, .. } => Some(*val as u64),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverses() {
        for p in [2u32, 3, 5, 7] {
            let f = Field::Fp(p);
            for v in 1..p {
                let x = Scalar::Fp { p, val: v };
                assert!(x.mul(&x.inv()).is_one());
            }
            assert_eq!(f.from_int(-1).add(&f.one()), f.zero());
        }
    }

    #[test]
    fn rational_roundtrip() {
        let x = parse_scalar(Field::Q, "-3/6").unwrap();
        assert_eq!(scalar_to_string(&x), "-1/2");
        assert!(x.add(&x).add(&Field::Q.one()).is_zero());
    }

    #[test]
    fn parse_field_names() {
        assert_eq!(Field::parse("Q"), Some(Field::Q));
        assert_eq!(Field::parse("F2"), Some(Field::Fp(2)));
        assert_eq!(Field::parse("F3"), Some(Field::Fp(3)));
        assert_eq!(Field::parse("F4"), None);
    }
}
