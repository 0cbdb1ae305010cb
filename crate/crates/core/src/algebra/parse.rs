use crate::error::{Error, Result};
use crate::ring::{Frac, Pid, RingOps};

/// Parse a univariate polynomial in `var` with coefficients in the fraction
/// field, e.g. `x^2-5`, `2*x^3 + 1/2*x`, `x^2+t` or `(t+1)*x + t^2`.
///
/// Returns coefficients constant term first.
pub fn parse_poly<R: Pid>(s: &str, var: char) -> Result<Vec<Frac<R>>> {
    let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(Error::parse(s, "empty polynomial"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    for (pos, ch) in src.chars().enumerate() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(s, "unbalanced parentheses"));
                }
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.ends_with('^') => {
                if !cur.is_empty() {
                    terms.push((negative, std::mem::take(&mut cur)));
                } else if pos > 0 {
                    return Err(Error::parse(s, "empty term"));
                }
                negative = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::parse(s, "unbalanced parentheses"));
    }
    if cur.is_empty() {
        return Err(Error::parse(s, "trailing sign"));
    }
    terms.push((negative, cur));

    let mut coeffs: Vec<Frac<R>> = Vec::new();
    for (neg, term) in terms {
        let (coef, exp) = split_term(&term, var).map_err(|m| Error::parse(s, m))?;
        let mut c = match coef {
            None => Frac::one(),
            Some(text) => Frac::parse(strip_parens(&text))?,
        };
        if neg {
            c = -c;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Frac::zero());
        }
        coeffs[exp] = coeffs[exp].clone() + c;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    Ok(coeffs)
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(s)
}

/// Split `coef*x^k` into its coefficient text (if any) and exponent.
fn split_term(term: &str, var: char) -> std::result::Result<(Option<String>, usize), String> {
    let mut depth = 0;
    let mut at = None;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == var && depth == 0 => {
                at = Some(i);
                break;
            }
            _ => {}
        }
    }
    let Some(i) = at else {
        return Ok((Some(term.to_string()), 0));
    };
    let before = term[..i].trim_end_matches('*');
    let after = &term[i + var.len_utf8()..];
    let exp = if after.is_empty() {
        1
    } else {
        let e = after
            .strip_prefix('^')
            .ok_or_else(|| format!("unexpected text after {var}: {after}"))?;
        e.parse::<usize>()
            .map_err(|_| format!("bad exponent {e}"))?
    };
    let coef = (!before.is_empty()).then(|| before.to_string());
    Ok((coef, exp))
}
