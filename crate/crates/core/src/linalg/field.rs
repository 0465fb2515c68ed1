use serde::Serialize;

use super::LinalgError;

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 97;

/// A prime field `F_p` with `2 <= p <= 97`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Canonical representative of an arbitrary integer.
    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
