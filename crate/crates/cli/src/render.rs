//! Shared output formatting: fixed-point decimals and abelian group names.

use arithmos_core::numbers::Rational;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// Render `x` with exactly `digits` fractional digits, rounding half away
/// from zero.
pub fn decimal(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let ax = x.abs();
    // round(|x| * scale) = (2 * numer * scale + denom) / (2 * denom)
    let q = (ax.numer() * &scale * 2i32 + ax.denom()) / (ax.denom() * 2i32);
    let sign = if x.is_negative() && !q.is_zero() { "-" } else { "" };
    let int = &q / &scale;
    let frac = &q % &scale;
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0digits$}")
    }
}

/// Canonical name of `Z^r + Z/t1 + ... + Z/tk`; the trivial group is `0`.
pub fn abelian_group(free_rank: usize, torsion: &[BigUint]) -> String {
    let mut parts = Vec::new();
    match free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for t in torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Comma-join anything displayable: `1,2,3`.
pub fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimal_rounds_half_away_from_zero() {
        assert_eq!(decimal(&rat(1, 2), 0), "1");
        assert_eq!(decimal(&rat(-1, 2), 0), "-1");
        assert_eq!(decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(decimal(&rat(-2, 3), 4), "-0.6667");
        assert_eq!(decimal(&rat(5, 4), 2), "1.25");
        assert_eq!(decimal(&Rational::zero(), 3), "0.000");
        assert_eq!(decimal(&rat(-1, 100000), 3), "0.000");
    }

    #[test]
    fn group_names() {
        assert_eq!(abelian_group(0, &[]), "0");
        assert_eq!(abelian_group(1, &[]), "Z");
        assert_eq!(abelian_group(2, &[]), "Z^2");
        assert_eq!(abelian_group(0, &[BigUint::from(2u32)]), "Z/2");
        assert_eq!(
            abelian_group(1, &[BigUint::from(2u32), BigUint::from(6u32)]),
            "Z + Z/2 + Z/6"
        );
    }
}
