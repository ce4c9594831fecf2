//! Jacobi polynomials `P_n^{(a,b)}(x)`.

/// Evaluates `P_n^{(a,b)}(x)` by the three-term recurrence in `n`.
///
/// Any real `a`, `b` are accepted. When a recurrence coefficient vanishes
/// (only possible for `a + b` a negative integer) the explicit finite sum is
/// used instead.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = a + b;
    let p1 = 0.5 * (2.0 * (a + 1.0) + (ab + 2.0) * (x - 1.0));
    if n == 1 {
        return p1;
    }
    let (mut prev, mut curr) = (1.0, p1);
    for k in 2..=n {
        let k = f64::from(k);
        let two_k_ab = 2.0 * k + ab;
        let denom = 2.0 * k * (k + ab) * (two_k_ab - 2.0);
        if denom == 0.0 {
            return jacobi_sum(n, a, b, x);
        }
        let c1 = (two_k_ab - 1.0) * (two_k_ab * (two_k_ab - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * two_k_ab;
        let next = (c1 * curr - c2 * prev) / denom;
        prev = curr;
        curr = next;
    }
    curr
}

/// Generalized binomial coefficient `C(r, k)` for real `r`.
fn binomial(r: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (r - f64::from(i)) / f64::from(i + 1))
}

/// `Σ_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`
fn jacobi_sum(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let lo = 0.5 * (x - 1.0);
    let hi = 0.5 * (x + 1.0);
    (0..=n)
        .map(|s| {
            binomial(nf + a, n - s)
                * binomial(nf + b, s)
                * lo.powi(s as i32)
                * hi.powi((n - s) as i32)
        })
        .sum()
}
