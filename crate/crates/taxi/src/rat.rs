//! Exact rational scalars. Every quantity in the library is a `Rat`;
//! there is no floating point anywhere in a predicate.

use crate::error::{Result, TaxiError};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number. `BigRational` keeps the denominator positive
/// and the fraction reduced, which is exactly the invariant we need.
pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse a rational token: "p/q", an integer, or a finite decimal
/// ("0.35" becomes 7/20 exactly). A unicode minus sign is accepted.
pub fn parse_rat(token: &str) -> Result<Rat> {
    let tok: String = token.trim().replace('\u{2212}', "-");
    let bad = || TaxiError::Parse(format!("malformed number `{token}`"));
    if tok.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = tok.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(TaxiError::Parse(format!("zero denominator in `{token}`")));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = tok.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int_digits = if int_digits.is_empty() { "0" } else { int_digits };
        let whole: BigInt = int_digits.parse().map_err(|_| bad())?;
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let mut value = Rat::new(whole * &scale + frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n: BigInt = tok.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// Canonical string form: "p/q", or just "p" for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal approximation with 6 significant digits, for display only.
/// Rounding is done in exact arithmetic so the output is deterministic.
pub fn approx6(r: &Rat) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let mut v = r.abs();
    // exponent e with 10^e <= v < 10^(e+1)
    let ten = rint(10);
    let mut e: i32 = 0;
    while v >= ten {
        v /= &ten;
        e += 1;
    }
    while v < Rat::one() {
        v *= &ten;
        e -= 1;
    }
    // round v * 10^5 to the nearest integer -> 6 significant digits
    let scaled = &v * Rat::from_integer(BigInt::from(100_000u32));
    let mut digits = (&scaled + rat(1, 2)).floor().to_integer();
    if digits >= BigInt::from(1_000_000u32) {
        digits /= 10;
        e += 1;
    }
    let ds = digits.to_string();
    debug_assert_eq!(ds.len(), 6);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if (0..6).contains(&e) {
        let point = (e + 1) as usize;
        out.push_str(&ds[..point]);
        let tail = ds[point..].trim_end_matches('0');
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
    } else if (-4..0).contains(&e) {
        out.push_str("0.");
        for _ in 0..(-e - 1) {
            out.push('0');
        }
        out.push_str(ds.trim_end_matches('0'));
    } else {
        // scientific notation for extreme magnitudes
        out.push_str(&ds[..1]);
        let tail = ds[1..].trim_end_matches('0');
        if !tail.is_empty() {
            out.push('.');
            out.push_str(tail);
        }
        out.push('e');
        out.push_str(&e.to_string());
    }
    out
}

/// f64 view of a rational, for ordering heuristics only (never predicates).
pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
