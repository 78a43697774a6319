//! Small integer helpers shared by the counting formulas.

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient that also accepts a negative top argument (returning zero).
pub fn binomial_signed(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
