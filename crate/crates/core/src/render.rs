use crate::qcoeff::QScalar;

/// Renders `Σ c_i m_i` with signs folded into the separators.
///
/// An empty monomial string stands for the identity.
pub(crate) fn render_sum<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a QScalar)>,
{
    let mut out = String::new();
    for (mono, c) in terms {
        let negative = c.is_negative();
        let mag = if negative { -c } else { c.clone() };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if mono.is_empty() {
            out.push_str(&mag.coefficient_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&mag.coefficient_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Joins `(base, exponent)` runs as `b1^e1*b2*...`.
pub(crate) fn render_powers<I, S>(runs: I) -> String
where
    I: IntoIterator<Item = (S, u32)>,
    S: AsRef<str>,
{
    let mut parts = Vec::new();
    for (base, e) in runs {
        match e {
            0 => {}
            1 => parts.push(base.as_ref().to_string()),
            _ => parts.push(format!("{}^{e}", base.as_ref())),
        }
    }
    parts.join("*")
}
