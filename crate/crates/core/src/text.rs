//! Canonical text output shared by all element types.

use std::fmt;

use crate::scalars::{param_monomial_text, signed_cyc_text, ParamPoly};

/// Splits `coeff * mono` into a sign and the body text.
pub(crate) fn term_text(c: &ParamPoly, mono: &str) -> (bool, String) {
    if c.len() == 1 {
        let (e, k) = c.terms().next().unwrap();
        let (neg, body) = signed_cyc_text(k);
        let mut parts: Vec<String> = Vec::new();
        let pm = param_monomial_text(e);
        if body != "1" || (pm.is_empty() && mono.is_empty()) {
            parts.push(body);
        }
        if !pm.is_empty() {
            parts.push(pm);
        }
        if !mono.is_empty() {
            parts.push(mono.to_string());
        }
        return (neg, parts.join("*"));
    }
    if mono.is_empty() {
        (false, c.to_string())
    } else {
        (false, format!("({})*{}", c, mono))
    }
}

/// Writes `Σ coeff * mono` with ` + ` / ` - ` separators, or `0`.
pub(crate) fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a ParamPoly, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let (neg, body) = term_text(c, &mono);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        write!(f, "{}", body)?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `name1^a1*name2^a2...` for an exponent vector.
pub(crate) fn exps_text(name: &str, exps: &[u8]) -> Vec<String> {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("{}{}", name, i + 1) } else { format!("{}{}^{}", name, i + 1, e) })
        .collect()
}
