//! Small integer helpers: primality, totients, modular powers and the
//! factorisation shapes the classifier dispatches on.

use serde::Serialize;

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Euler's totient, by trial division.
pub fn totient(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            while m.is_multiple_of(d) {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn pow_mod(base: usize, mut exp: usize, modulus: usize) -> usize {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as usize
}

/// Prime factors with multiplicity, ascending.
pub fn factorize(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// How a group order factors, as far as the classifier cares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrderShape {
    PrimeSquared {
        p: usize,
    },
    /// `p < q`.
    DistinctPrimes {
        p: usize,
        q: usize,
    },
    Unsupported {
        order: usize,
    },
}

impl OrderShape {
    pub fn of(order: usize) -> Self {
        match factorize(order).as_slice() {
            [p, q] if p == q => OrderShape::PrimeSquared { p: *p },
            [p, q] => OrderShape::DistinctPrimes { p: *p, q: *q },
            _ => OrderShape::Unsupported { order },
        }
    }

    /// The two primes `(p, q)` with `p <= q`, when the shape is supported.
    pub fn primes(&self) -> Option<(usize, usize)> {
        match *self {
            OrderShape::PrimeSquared { p } => Some((p, p)),
            OrderShape::DistinctPrimes { p, q } => Some((p, q)),
            OrderShape::Unsupported { .. } => None,
        }
    }
}
