use num_bigint::BigUint;
use num_traits::One;

fn binomial_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 1..=n {
        let next = &row[k - 1] * BigUint::from(n + 1 - k) / BigUint::from(k);
        row.push(next);
    }
    row
}

/// Hemisphere-count recurrence: `f(0) = 1` and
/// `f(n) = Σ_{k=1..n} C(n+1, k)·f(n-k) + 1`.
///
/// `2·f(n)` is the number of hemispaces of `R^n_max` related to hyperplanes
/// centered at the origin. `f(n)` is the ordered Bell number of `n + 1`.
pub fn bell_f(n: usize) -> BigUint {
    bell_f_table(n).pop().expect("table has n + 1 entries")
}

/// `f(0), …, f(n)`.
pub fn bell_f_table(n: usize) -> Vec<BigUint> {
    let mut f: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let binom = binomial_row(m + 1);
        let mut sum = BigUint::one();
        for k in 1..=m {
            sum += &binom[k] * &f[m - k];
        }
        f.push(sum);
    }
    f
}

/// Ordered Bell (Fubini) numbers: `a(0) = 1`, `a(m) = Σ_{k=1..m} C(m, k)·a(m-k)`.
pub fn bell_standard(m: usize) -> BigUint {
    let mut a: Vec<BigUint> = vec![BigUint::one()];
    for j in 1..=m {
        let binom = binomial_row(j);
        let sum = (1..=j).map(|k| &binom[k] * &a[j - k]).sum();
        a.push(sum);
    }
    a.pop().expect("non-empty")
}
