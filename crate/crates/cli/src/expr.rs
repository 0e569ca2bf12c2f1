//! Parsers for command-line values that are not plain weights.

use num_rational::Rational64;
use verlinde::Weight;

/// Parses a signed sum of bracketed weights, e.g. `"[4] + [0]"` or
/// `"2*[1,0] - [0,1]"`, into `(coefficient, weight)` terms.
pub fn parse_char_expr(s: &str) -> Result<Vec<(i64, Weight)>, String> {
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |why: &str| format!("invalid expression {s:?}: {why}");
    if src.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms = Vec::new();
    let mut rest = src.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !first {
            return Err(bad("expected + or - between terms"));
        }
        first = false;
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let coeff = if digits > 0 {
            let c: i64 = rest[..digits]
                .parse()
                .map_err(|_| bad("coefficient overflow"))?;
            rest = &rest[digits..];
            rest = rest.strip_prefix('*').unwrap_or(rest);
            c
        } else {
            1
        };
        let body = rest.strip_prefix('[').ok_or_else(|| bad("expected ["))?;
        let close = body.find(']').ok_or_else(|| bad("unclosed ["))?;
        let weight: Weight = body[..close]
            .parse()
            .map_err(|e: verlinde::ParseWeightError| e.to_string())?;
        terms.push((sign * coeff, weight));
        rest = &body[close + 1..];
    }
    Ok(terms)
}

/// Parses `"5/2"`, `"-3"` or a finite decimal such as `"2.5"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational64, String> {
    let t = s.trim();
    let bad = || format!("invalid rational {s:?}");
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 15 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let whole: i64 = match int.trim_start_matches(['-', '+']) {
            "" => 0,
            digits => digits.parse().map_err(|_| bad())?,
        };
        let scale = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = Rational64::new(whole * scale + f, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    t.parse::<i64>()
        .map(Rational64::from_integer)
        .map_err(|_| bad())
}
