//! Text syntax for words, vectors and rational coweights.

use endokl_core::RationalCoweight;

/// Parses `e` or comma-separated generator labels.
pub fn parse_word(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| format!("bad generator label {x:?}")))
        .collect()
}

pub fn format_word(w: &[u32]) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Parses comma-separated integers.
pub fn parse_vector(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad integer {x:?}")))
        .collect()
}

/// Parses `c1,c2,.../n`; a missing `/n` means `n = 1`.
pub fn parse_lambda(s: &str) -> Result<RationalCoweight, String> {
    let (mu, n) = match s.split_once('/') {
        Some((mu, n)) => (mu, n.trim().parse::<i64>().map_err(|_| format!("bad denominator {n:?}"))?),
        None => (s, 1),
    };
    RationalCoweight::new(parse_vector(mu)?, n).map_err(|e| e.to_string())
}

/// Parses a rational number `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<endokl_core::Rational, String> {
    let bad = || format!("bad rational {s:?}");
    match s.split_once('/') {
        Some((p, q)) => {
            let p = p.trim().parse::<i64>().map_err(|_| bad())?;
            let q = q.trim().parse::<i64>().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(endokl_core::Rational::new(p, q))
        }
        None => Ok(endokl_core::Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}
