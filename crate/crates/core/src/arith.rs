//! Small integer helpers shared by the other modules.

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Inverse of `a` modulo `m > 0`, in `[0, m)`. `None` when `gcd(a, m) != 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    debug_assert!(m > 0);
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

pub fn mul_mod(a: i64, b: i64, m: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(m as i128)) as i64
}

pub fn is_prime(n: i64) -> bool {
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

/// `sum_{i=0}^{n-1} floor((a*i + b) / m)` for `n >= 0`, `m > 0` and any signs of `a`, `b`.
pub fn floor_sum(n: i64, m: i64, a: i64, b: i64) -> i128 {
    let (mut n, m) = (n as i128, m as i128);
    let (mut a, mut b, mut m) = (a as i128, b as i128, m);
    let mut acc = 0i128;
    // shift a and b into [0, m)
    let qa = a.div_euclid(m);
    acc += qa * n * (n - 1) / 2;
    a -= qa * m;
    let qb = b.div_euclid(m);
    acc += qb * n;
    b -= qb * m;
    loop {
        if a >= m {
            acc += (n - 1) * n / 2 * (a / m);
            a %= m;
        }
        if b >= m {
            acc += n * (b / m);
            b %= m;
        }
        let y_max = a * n + b;
        if y_max < m {
            break;
        }
        n = y_max / m;
        b = y_max % m;
        core::mem::swap(&mut m, &mut a);
    }
    acc
}
