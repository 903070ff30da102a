//! Generating functions, recurrences and closed forms.
//!
//! Naming: `g_q(n)` counts guillotine partitions of a `q`-box by `n` cuts,
//! `s_d(n)` counts separable d-permutations of `[n]`, and
//! `s_d(n) = g_{2^(d-1)}(n - 1)`. The recurrence with `a(0) = 1` produces
//! `g_q`, the explicit binomial sum over `[n]` produces `s_d`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::{counting, rat, solve_fixed_point, TruncatedPowerSeries};
use crate::error::{domain, Error, Result};

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k as i64, k as i64) / BigInt::from(k + 1)
}

/// Number of primary block structures of a d-permutation, `2^(d-1)`.
pub fn separable_axes(d: u32) -> Result<u64> {
    if d == 0 || d > 64 {
        return domain(format!("d = {d} out of range 1..=64"));
    }
    Ok(1u64 << (d - 1))
}

fn to_count(r: BigRational, what: &str) -> Result<BigUint> {
    if !r.is_integer() {
        return Err(Error::Consistency(format!("{what} is not an integer: {r}")));
    }
    r.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Consistency(format!("{what} is negative")))
}

fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `g_q(0..=order)` from `f = 1 + x f + (q - 1) x f^2`.
pub fn guillotine_gf(q: u64, order: usize) -> Result<TruncatedPowerSeries> {
    if q == 0 {
        return domain("guillotine_gf needs q >= 1");
    }
    let one = TruncatedPowerSeries::one(order);
    let qm1 = big(q - 1);
    let f = solve_fixed_point(
        |f| &(&one + &f.shift(1)) + &(f * f).shift(1).scale(&qm1),
        BigRational::one(),
        order,
    )?;
    counting(f)
}

/// `g_q(n)` from the convolution recurrence
/// `a(n) = q (a(n-1) + sum_{k=1}^{n-1} ((q-1)/q) a(k) a(n-k-1))`, `a(0) = 1`.
pub fn count_guillotine_recursive(q: u64, n: usize) -> Result<BigUint> {
    if q == 0 {
        return domain("count_guillotine_recursive needs q >= 1");
    }
    let qr = big(q);
    let ratio = BigRational::new(BigInt::from(q - 1), BigInt::from(q));
    let mut a: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut conv = BigRational::zero();
        for k in 1..m {
            conv += &a[k] * &a[m - k - 1];
        }
        a.push(&qr * (&a[m - 1] + &ratio * conv));
    }
    to_count(a.swap_remove(n), "recursive guillotine count")
}

/// `g_q(n) = (1/n) sum_{k=0}^{n-1} C(n,k) C(n,k+1) (q-1)^k q^(n-k)`, `g_q(0) = 1`.
pub fn guillotine_explicit(q: u64, n: usize) -> Result<BigUint> {
    if q == 0 {
        return domain("guillotine_explicit needs q >= 1");
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let m = n as i64;
    let mut sum = BigInt::zero();
    for k in 0..m {
        sum += binomial(m, k)
            * binomial(m, k + 1)
            * Pow::pow(BigInt::from(q - 1), k as u64)
            * Pow::pow(BigInt::from(q), (m - k) as u64);
    }
    to_count(
        BigRational::new(sum, BigInt::from(m)),
        "explicit guillotine count",
    )
}

/// `s_d(n)` by the explicit sum over `[n]`:
/// `(1/(n-1)) sum_{k=0}^{n-2} C(n-1,k) C(n-1,k+1) (2^(d-1)-1)^k (2^(d-1))^(n-k-1)`.
/// `s_d(1) = 1`.
pub fn count_separable_explicit(d: u32, n: usize) -> Result<BigUint> {
    let q = separable_axes(d)?;
    match n {
        0 => domain("separable d-permutations need n >= 1"),
        1 => Ok(BigUint::one()),
        _ => {
            let m = n as i64 - 1;
            let mut sum = BigInt::zero();
            for k in 0..=m - 1 {
                sum += binomial(m, k)
                    * binomial(m, k + 1)
                    * Pow::pow(BigInt::from(q - 1), k as u64)
                    * Pow::pow(BigInt::from(q), (n as i64 - k - 1) as u64);
            }
            to_count(
                BigRational::new(sum, BigInt::from(m)),
                "explicit separable count",
            )
        }
    }
}

/// `s_d(n)` read off the guillotine series, `g_{2^(d-1)}(n - 1)`.
pub fn separable_count(d: u32, n: usize) -> Result<BigUint> {
    if n == 0 {
        return domain("separable d-permutations need n >= 1");
    }
    let series = guillotine_gf(separable_axes(d)?, n - 1)?;
    Ok(series.to_counts()?.swap_remove(n - 1))
}

/// Boundary guillotine partitions of a d-box, from the nested expression
/// `t_d = 1/(1 - d x)`, `t_i = (1 + (d - i) x (1 - x) t_{i+1}^2) / (1 - i x)`,
/// `f = 1 + d x (1 - x) t_1^2`.
pub fn boundary_gf(d: u32, order: usize) -> Result<TruncatedPowerSeries> {
    if d < 2 {
        return domain("boundary_gf needs d >= 2");
    }
    let one = TruncatedPowerSeries::one(order);
    let x = TruncatedPowerSeries::x(order);
    let x_one_minus_x = &x - &x.shift(1);
    let linear = |i: u32| &one - &x.scale(&rat(i as i64));

    let mut t = linear(d).reciprocal()?;
    for i in (1..d).rev() {
        let inner = &one + &(&x_one_minus_x * &(&t * &t)).scale(&rat((d - i) as i64));
        t = &linear(i).reciprocal()? * &inner;
    }
    let f = &one + &(&x_one_minus_x * &(&t * &t)).scale(&rat(d as i64));
    counting(f)
}

/// `a_2(n) = 2 + (n - 1)(n^2 + n + 42) 2^(n-4) / 3` for `n >= 1`, `a_2(0) = 1`.
pub fn boundary_square_explicit(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let n = n as i64;
    let poly = BigRational::from_integer(BigInt::from((n - 1) * (n * n + n + 42)));
    let power = if n >= 4 {
        BigRational::from_integer(BigInt::one() << (n - 4) as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (4 - n) as usize)
    };
    let value = rat(2) + poly * power / rat(3);
    to_count(value, "boundary closed form").expect("integral for every n >= 1")
}

/// `((d - 1)/d)^(2^d - 1)`.
pub fn boundary_asymptotic_constant(d: u32) -> Result<BigRational> {
    if !(2..=30).contains(&d) {
        return domain("boundary asymptotics need 2 <= d <= 30");
    }
    let base = BigRational::new(BigInt::from(d - 1), BigInt::from(d));
    Ok(Pow::pow(base, (1u64 << d) - 1))
}

/// `a_d(n)` divided by `c_d n^(2^d - 1) d^n / (2^d - 1)!`.
pub fn boundary_asymptotic_ratio(d: u32, n: usize) -> Result<BigRational> {
    if n == 0 {
        return domain("the asymptotic ratio needs n >= 1");
    }
    let c = boundary_asymptotic_constant(d)?;
    let exponent = (1u64 << d) - 1;
    let a = BigRational::from_integer(BigInt::from(boundary_gf(d, n)?.to_counts()?.swap_remove(n)));
    let factorial: BigInt = (1..=exponent).map(BigInt::from).product();
    let approx = c
        * BigRational::from_integer(Pow::pow(BigInt::from(n), exponent))
        * BigRational::from_integer(Pow::pow(BigInt::from(d), n as u64))
        / BigRational::from_integer(factorial);
    Ok(a / approx)
}

/// m-alternating partitions: solves
/// `g = 1 + (d-1) x g^2 (1 - x^(m-1) g^(m-1)) / (1 - x g)` and returns
/// `f = 1 + (d/(d-1))(g - 1)`.
pub fn alternating_gf(d: u32, m: u32, order: usize) -> Result<TruncatedPowerSeries> {
    if d < 2 || m < 2 {
        return domain("alternating_gf needs d >= 2 and m >= 2");
    }
    let one = TruncatedPowerSeries::one(order);
    let dm1 = rat(d as i64 - 1);
    let g = solve_fixed_point(
        |g| {
            let xg = g.shift(1);
            let numerator = &one - &xg.pow(m - 1);
            let denominator = (&one - &xg).reciprocal().expect("constant term 1");
            &one + &(&(g * g).shift(1) * &(&numerator * &denominator)).scale(&dm1)
        },
        BigRational::one(),
        order,
    )?;
    let ratio = BigRational::new(BigInt::from(d), BigInt::from(d - 1));
    let f = &one + &(&g - &one).scale(&ratio);
    counting(f)
}

/// `a_d(n) = d sum_{p>=0} sum_{i=0}^{p+1} ((-1)^i/(p+1)) C(p+1,i)
/// C(n-1-(m-1)i, p) C(n+p+1, p) (d-1)^p` for `n >= 1`.
pub fn alternating_explicit(d: u32, m: u32, n: usize) -> Result<BigUint> {
    if d < 2 || m < 2 {
        return domain("alternating_explicit needs d >= 2 and m >= 2");
    }
    if n == 0 {
        return domain("alternating_explicit needs n >= 1");
    }
    let n = n as i64;
    let m = m as i64;
    let mut sum = BigRational::zero();
    for p in 0..n {
        let weight = Pow::pow(BigInt::from(d - 1), p as u64) * binomial(n + p + 1, p);
        for i in 0..=p + 1 {
            let inner = binomial(p + 1, i) * binomial(n - 1 - (m - 1) * i, p);
            if inner.is_zero() {
                continue;
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sum += BigRational::new(BigInt::from(sign) * inner * &weight, BigInt::from(p + 1));
        }
    }
    to_count(sum * rat(d as i64), "alternating explicit sum")
}

/// Window-avoiding partitions: solves
/// `f = x + x(x - 1 + 2d) f + d x (x + d - 2) f^2` for the series of
/// nonempty trees with a fixed root color and returns `1 + d f`.
pub fn window_avoiding_gf(d: u32, order: usize) -> Result<TruncatedPowerSeries> {
    if d < 2 {
        return domain("window_avoiding_gf needs d >= 2");
    }
    let d = d as i64;
    let x = TruncatedPowerSeries::x(order);
    let linear = TruncatedPowerSeries::from_integers(&[0, 2 * d - 1, 1])?.truncate(order);
    let quadratic = TruncatedPowerSeries::from_integers(&[0, d * (d - 2), d])?.truncate(order);
    let f = solve_fixed_point(
        |f| &(&x + &(&linear * f)) + &(&quadratic * &(f * f)),
        BigRational::zero(),
        order,
    )?;
    let total = &TruncatedPowerSeries::one(order) + &f.scale(&rat(d));
    counting(total)
}

/// The triple sum
/// `d sum_k sum_j sum_i c_k d^k (d-2)^(k-i) (2d-1)^(2j+2k+i+1-n) C(k,i) C(2k+j,j) C(j, n-2k-i-j-1)`
/// for `n >= 1`; negative powers of `2d - 1` are evaluated as rationals.
pub fn window_avoiding_explicit(d: u32, n: usize) -> Result<BigUint> {
    if d < 2 {
        return domain("window_avoiding_explicit needs d >= 2");
    }
    if n == 0 {
        return domain("window_avoiding_explicit needs n >= 1");
    }
    let n = n as i64;
    let dd = BigInt::from(d);
    let base = BigRational::from_integer(BigInt::from(2 * d as i64 - 1));
    let mut sum = BigRational::zero();
    for k in 0..=(n - 1) / 2 {
        let ck = catalan(k as u64) * Pow::pow(&dd, k as u64);
        for j in 0..=n - 1 - 2 * k {
            let cj = binomial(2 * k + j, j);
            for i in 0..=k {
                let tail = binomial(j, n - 2 * k - i - j - 1);
                if tail.is_zero() {
                    continue;
                }
                let coefficient = &ck
                    * Pow::pow(BigInt::from(d as i64 - 2), (k - i) as u64)
                    * binomial(k, i)
                    * &cj
                    * tail;
                let exponent = 2 * j + 2 * k + i + 1 - n;
                let power = Pow::pow(&base, exponent as i32);
                sum += BigRational::from_integer(coefficient) * power;
            }
        }
    }
    to_count(sum * rat(d as i64), "window explicit sum")
}

/// `a(n) = 4 a(n-1) - 2 a(n-2)`, `a(0) = 1`, `a(1) = 2`: the coefficients of
/// `(1 - 2x)/(1 - 4x + 2x^2)`.
pub fn wincc_recurrence(order: usize) -> Vec<BigUint> {
    let mut a: Vec<BigInt> = vec![BigInt::one(), BigInt::from(2)];
    while a.len() <= order {
        let k = a.len();
        let next = BigInt::from(4) * &a[k - 1] - BigInt::from(2) * &a[k - 2];
        a.push(next);
    }
    a.truncate(order + 1);
    a.into_iter()
        .map(|c| c.to_biguint().expect("the recurrence stays positive"))
        .collect()
}

/// `(1 - 2x)/(1 - 4x + 2x^2)`, by series division.
pub fn wincc_gf(order: usize) -> TruncatedPowerSeries {
    let num = TruncatedPowerSeries::from_integers(&[1, -2])
        .expect("integers")
        .truncate(order);
    let den = TruncatedPowerSeries::from_integers(&[1, -4, 2])
        .expect("integers")
        .truncate(order);
    &num * &den.reciprocal().expect("constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    fn coeff(s: &TruncatedPowerSeries, n: usize) -> BigUint {
        s.to_counts().unwrap().swap_remove(n)
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(-3, 1), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        let cats: Vec<BigInt> = (0..6).map(catalan).collect();
        assert_eq!(cats, [1, 1, 2, 5, 14, 42].map(BigInt::from));
    }

    #[test]
    fn guillotine_examples() {
        assert_eq!(
            guillotine_gf(2, 4).unwrap().to_counts().unwrap(),
            u(&[1, 2, 6, 22, 90])
        );
        assert_eq!(
            coeff(&guillotine_gf(4, 2).unwrap(), 2),
            BigUint::from(28u32)
        );
        assert_eq!(
            coeff(&guillotine_gf(3, 2).unwrap(), 2),
            BigUint::from(15u32)
        );
        assert!(guillotine_gf(0, 3).is_err());
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(
            count_guillotine_recursive(2, 3).unwrap(),
            BigUint::from(22u32)
        );
        assert_eq!(
            count_guillotine_recursive(4, 2).unwrap(),
            BigUint::from(28u32)
        );
        assert_eq!(count_guillotine_recursive(5, 0).unwrap(), BigUint::one());
        assert_eq!(count_guillotine_recursive(1, 6).unwrap(), BigUint::one());
    }

    #[test]
    fn three_routes_agree() {
        for q in [1u64, 2, 3, 4, 8] {
            let series = guillotine_gf(q, 12).unwrap().to_counts().unwrap();
            for (n, expected) in series.iter().enumerate() {
                assert_eq!(
                    &count_guillotine_recursive(q, n).unwrap(),
                    expected,
                    "q={q} n={n}"
                );
                assert_eq!(&guillotine_explicit(q, n).unwrap(), expected, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn separable_explicit_examples() {
        assert_eq!(count_separable_explicit(2, 3).unwrap(), BigUint::from(6u32));
        assert_eq!(
            count_separable_explicit(3, 3).unwrap(),
            BigUint::from(28u32)
        );
        assert_eq!(
            count_separable_explicit(2, 4).unwrap(),
            BigUint::from(22u32)
        );
        assert_eq!(count_separable_explicit(4, 1).unwrap(), BigUint::one());
        assert!(count_separable_explicit(2, 0).is_err());
        for d in 1..=5u32 {
            for n in 1..=10usize {
                assert_eq!(
                    count_separable_explicit(d, n).unwrap(),
                    separable_count(d, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn boundary_examples() {
        let d2 = boundary_gf(2, 9).unwrap().to_counts().unwrap();
        assert_eq!(d2, u(&[1, 2, 6, 20, 64, 194, 562, 1570, 4258, 11266]));
        assert_eq!(
            coeff(&boundary_gf(5, 4).unwrap(), 4),
            BigUint::from(5485u32)
        );
        assert_eq!(
            coeff(&boundary_gf(3, 15).unwrap(), 15),
            BigUint::from(18683733663u64)
        );
        assert!(boundary_gf(1, 3).is_err());
    }

    #[test]
    fn boundary_square_closed_form() {
        assert_eq!(boundary_square_explicit(0), BigUint::one());
        assert_eq!(boundary_square_explicit(4), BigUint::from(64u32));
        assert_eq!(boundary_square_explicit(2), BigUint::from(6u32));
        let series = boundary_gf(2, 60).unwrap().to_counts().unwrap();
        for (n, c) in series.iter().enumerate() {
            assert_eq!(&boundary_square_explicit(n), c, "n={n}");
        }
    }

    #[test]
    fn asymptotic_ratio() {
        assert_eq!(
            boundary_asymptotic_constant(2).unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(8))
        );
        // 64 / ((1/8) 4^3 2^4 / 3!) = 3
        assert_eq!(boundary_asymptotic_ratio(2, 4).unwrap(), rat(3));
        let r100 = boundary_asymptotic_ratio(2, 100).unwrap();
        let r200 = boundary_asymptotic_ratio(2, 200).unwrap();
        let dist = |r: &BigRational| {
            let x = r - rat(1);
            if x < BigRational::zero() {
                -x
            } else {
                x
            }
        };
        assert!(dist(&r200) < dist(&r100));
        // (n-1)(n^2+n+42)/n^3 at n = 100 is 1.004058
        let lower = BigRational::new(1004.into(), 1000.into());
        let upper = BigRational::new(1005.into(), 1000.into());
        assert!(r100 > lower && r100 < upper, "{r100}");
    }

    #[test]
    fn alternating_examples() {
        assert_eq!(
            alternating_gf(2, 2, 4).unwrap().to_counts().unwrap(),
            u(&[1, 2, 4, 10, 28])
        );
        assert_eq!(
            coeff(&alternating_gf(2, 3, 3).unwrap(), 3),
            BigUint::from(20u32)
        );
        let all = guillotine_gf(2, 6).unwrap();
        assert_eq!(alternating_gf(2, 7, 6).unwrap(), all);
        assert_eq!(alternating_explicit(2, 2, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(alternating_explicit(3, 2, 2).unwrap(), BigUint::from(12u32));
        assert_eq!(alternating_explicit(2, 3, 3).unwrap(), BigUint::from(20u32));
        assert!(alternating_gf(2, 1, 3).is_err());
        assert!(alternating_explicit(2, 2, 0).is_err());
    }

    #[test]
    fn window_examples() {
        let d2 = window_avoiding_gf(2, 9).unwrap().to_counts().unwrap();
        assert_eq!(d2, u(&[1, 2, 6, 20, 70, 254, 948, 3618, 14058, 55432]));
        assert_eq!(
            coeff(&window_avoiding_gf(3, 2).unwrap(), 2),
            BigUint::from(15u32)
        );
        assert_eq!(
            window_avoiding_explicit(2, 3).unwrap(),
            BigUint::from(20u32)
        );
        assert_eq!(
            window_avoiding_explicit(3, 2).unwrap(),
            BigUint::from(15u32)
        );
        assert_eq!(
            window_avoiding_explicit(2, 5).unwrap(),
            BigUint::from(254u32)
        );
        assert_eq!(window_avoiding_explicit(2, 1).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn wincc_examples() {
        assert_eq!(
            wincc_gf(9).to_counts().unwrap(),
            u(&[1, 2, 6, 20, 68, 232, 792, 2704, 9232, 31520])
        );
        assert_eq!(coeff(&wincc_gf(4), 4), BigUint::from(68u32));
        assert_eq!(wincc_gf(0).to_counts().unwrap(), u(&[1]));
        assert_eq!(wincc_gf(40).to_counts().unwrap(), wincc_recurrence(40));
    }
}
