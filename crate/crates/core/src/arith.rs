//! Small-integer number theory used across the crate.

use num_integer::Integer;

/// Trial-division factorization of |n|, primes ascending.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    let mut m = n.unsigned_abs() as i64;
    let mut out = Vec::new();
    let mut p = 2i64;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn prime_divisors(n: i64) -> Vec<i64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: i64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn primes_up_to(bound: i64) -> Vec<i64> {
    if bound < 2 {
        return Vec::new();
    }
    let b = bound as usize;
    let mut sieve = vec![true; b + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= b {
        if sieve[i] {
            let mut j = i * i;
            while j <= b {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i as i64).collect()
}

/// Positive divisors of n in increasing order.
pub fn divisors(n: i64) -> Vec<i64> {
    let mut ds = vec![1i64];
    for (p, e) in factorize(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn is_cubefree(n: i64) -> bool {
    n != 0 && factorize(n).iter().all(|&(_, e)| e < 3)
}

/// Largest squarefree divisor.
pub fn radical(n: i64) -> i64 {
    prime_divisors(n).into_iter().product()
}

/// Sum of positive divisors.
pub fn sigma(n: i64) -> i64 {
    divisors(n).into_iter().sum()
}

/// (p/3) for p coprime to 3.
pub fn legendre3(p: i64) -> i64 {
    match p.rem_euclid(3) {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

pub fn mod_pow(base: i64, mut e: u64, m: i64) -> i64 {
    let m128 = m as i128;
    let mut b = (base as i128).rem_euclid(m128);
    let mut acc = 1i128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as i64
}

pub fn mod_inv(a: i64, m: i64) -> Option<i64> {
    let g = a.extended_gcd(&m);
    if g.gcd.abs() != 1 {
        return None;
    }
    Some((g.x * g.gcd).rem_euclid(m))
}

/// Jacobi symbol (a/m) for odd m > 0.
pub fn jacobi(a: i64, m: i64) -> i64 {
    assert!(m > 0 && m % 2 == 1, "jacobi modulus must be odd and positive");
    let mut a = a.rem_euclid(m);
    let mut m = m;
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            t = -t;
        }
        a %= m;
    }
    if m == 1 {
        t
    } else {
        0
    }
}

/// f(n) = n ∏_{p|n} (1 − (p/3)/p).
pub fn f_of_n(n: i64) -> i64 {
    let mut r = n;
    for p in prime_divisors(n) {
        r = r / p * (p - legendre3(p));
    }
    r
}

/// ∏_{p|d} (1 − p⁻²) · d², an integer.
pub fn jordan2(d: i64) -> i64 {
    let mut r = d * d;
    for p in prime_divisors(d) {
        r = r / (p * p) * (p * p - 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(f_of_n(5), 6);
        assert_eq!(f_of_n(7), 6);
        assert_eq!(f_of_n(25), 30);
        assert_eq!(f_of_n(35), 36);
        assert_eq!(sigma(5), 6);
        assert_eq!(radical(25), 5);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(jacobi(2, 7), 1);
        assert_eq!(jacobi(3, 7), -1);
        assert_eq!(jordan2(6), 24);
    }
}
