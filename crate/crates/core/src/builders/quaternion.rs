//! Rational quaternions `a + bi + cj + dk`.

use std::fmt;
use std::ops::Mul;

use num_traits::Zero;

use crate::error::Error;
use crate::exactla::{format_rational, int, one, parse_rational, zero, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    /// Coefficients of `1, i, j, k`.
    pub coeffs: [Rational; 4],
}

// UNIT_PRODUCT[p][q] = (sign, index) with e_p e_q = sign · e_index.
const UNIT_PRODUCT: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { coeffs: [a, b, c, d] }
    }

    pub fn zero() -> Self {
        Self { coeffs: [zero(), zero(), zero(), zero()] }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn unit(index: usize) -> Self {
        let mut q = Self::zero();
        q.coeffs[index] = one();
        q
    }

    pub fn re(&self) -> Rational {
        self.coeffs[0].clone()
    }

    /// The imaginary part, as a quaternion with zero real part.
    pub fn im(&self) -> Quaternion {
        let mut q = self.clone();
        q.coeffs[0] = zero();
        q
    }

    pub fn sub(&self, other: &Quaternion) -> Quaternion {
        let mut q = self.clone();
        for (a, b) in q.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        q
    }

    /// Parses `a+bi+cj+dk` style literals: signed terms with optional
    /// rational coefficients, each unit at most once, e.g. `1+2i-3/2k` or `-j`.
    pub fn parse(s: &str) -> Result<Quaternion, Error> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("invalid quaternion '{s}': {why}"));
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (pos, ch) in text.char_indices() {
            if (ch == '+' || ch == '-') && pos > start {
                terms.push(&text[start..pos]);
                start = pos;
            }
        }
        terms.push(&text[start..]);

        let mut q = Quaternion::zero();
        let mut seen = [false; 4];
        for term in terms {
            let (index, coeff) = match term.chars().last() {
                Some('i') => (1, &term[..term.len() - 1]),
                Some('j') => (2, &term[..term.len() - 1]),
                Some('k') => (3, &term[..term.len() - 1]),
                _ => (0, term),
            };
            let value = match coeff {
                "" | "+" => one(),
                "-" => int(-1),
                c if index == 0 || c.ends_with(|ch: char| ch.is_ascii_digit()) => {
                    parse_rational(c).map_err(|_| bad(&format!("bad coefficient '{c}'")))?
                }
                c => return Err(bad(&format!("bad coefficient '{c}'"))),
            };
            if std::mem::replace(&mut seen[index], true) {
                return Err(bad("repeated unit"));
            }
            q.coeffs[index] = value;
        }
        Ok(q)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let mut out = Quaternion::zero();
        for p in 0..4 {
            if self.coeffs[p].is_zero() {
                continue;
            }
            for q in 0..4 {
                let (sign, idx) = UNIT_PRODUCT[p][q];
                let term = &self.coeffs[p] * &rhs.coeffs[q];
                if sign > 0 {
                    out.coeffs[idx] += term;
                } else {
                    out.coeffs[idx] -= term;
                }
            }
        }
        out
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, unit) in self.coeffs.iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            if wrote && !c.is_negative() {
                write!(f, "+")?;
            }
            write!(f, "{}{unit}", format_rational(c))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::frac;

    #[test]
    fn unit_products() {
        let (i, j, k) = (Quaternion::unit(1), Quaternion::unit(2), Quaternion::unit(3));
        let minus_one = Quaternion::from_i64(-1, 0, 0, 0);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, Quaternion::from_i64(0, 0, 0, -1));
    }

    #[test]
    fn associative_on_samples() {
        let a = Quaternion::from_i64(1, 2, 3, 5);
        let b = Quaternion::from_i64(-2, 0, 1, 4);
        let c = Quaternion::from_i64(3, -1, 2, 0);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Quaternion::parse("1+2i+3j+5k").unwrap(), Quaternion::from_i64(1, 2, 3, 5));
        assert_eq!(Quaternion::parse("0").unwrap(), Quaternion::zero());
        assert_eq!(Quaternion::parse("i").unwrap(), Quaternion::unit(1));
        assert_eq!(Quaternion::parse("-j + k").unwrap(), Quaternion::from_i64(0, 0, -1, 1));
        let q = Quaternion::parse("1/2-3/4k").unwrap();
        assert_eq!(q.coeffs[0], frac(1, 2));
        assert_eq!(q.coeffs[3], frac(-3, 4));
        assert!(Quaternion::parse("").is_err());
        assert!(Quaternion::parse("2x").is_err());
        assert!(Quaternion::parse("i+i").is_err());
        assert!(Quaternion::parse("1/i").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["1+2i+3j+5k", "0", "-1/2j", "3-k"] {
            let q = Quaternion::parse(s).unwrap();
            assert_eq!(Quaternion::parse(&q.to_string()).unwrap(), q);
        }
    }
}
