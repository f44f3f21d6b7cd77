//! Deterministic CSV reports over polytope catalogs.
//!
//! One row per catalog entry: the incidence profile, every bound value
//! (empty when inapplicable), the best upper bound, and — for entries with a
//! closed-form volume — the volume and the slack of the best upper bound.
//! Numbers are printed with 9 significant digits and no locale dependence,
//! so regenerating a report is byte-identical across runs and platforms.

use crate::bounds::{self, BoundId};
use crate::catalog::CatalogEntry;

/// Format with 9 significant digits, plain decimal notation for moderate
/// exponents.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.8e}", x);
    let (mantissa, exp) = s.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("numeric exponent");
    if !(-5..=14).contains(&exp) {
        return s;
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 9);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    let point = exp + 1;
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..(-point) {
            out.push('0');
        }
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        for _ in 0..(point as usize - digits.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    out
}

fn quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// The fixed column list.
pub fn header() -> String {
    let mut cols = vec![
        "name".to_string(),
        "class".to_string(),
        "V".to_string(),
        "V_inf".to_string(),
        "V_F".to_string(),
        "E".to_string(),
        "F".to_string(),
        "p_k".to_string(),
    ];
    for id in BoundId::ALL {
        cols.push(id.column().to_string());
    }
    cols.push("best_upper_id".to_string());
    cols.push("best_upper".to_string());
    cols.push("known_volume".to_string());
    cols.push("slack".to_string());
    cols.join(",")
}

fn row(entry: &CatalogEntry) -> String {
    let p = &entry.polytope;
    let profile = p.profile();
    let p_k: Vec<String> = profile
        .p_k
        .iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect();
    let mut fields = vec![
        quote(entry.name()),
        String::new(), // class, filled below
        profile.v.to_string(),
        profile.v_inf.to_string(),
        profile.v_f.to_string(),
        profile.e.to_string(),
        profile.f.to_string(),
        p_k.join(";"),
    ];
    match bounds::bound_report(p) {
        Ok(report) => {
            fields[1] = report.class.label().to_string();
            for e in &report.entries {
                fields.push(match (&e.value, e.applicable) {
                    (Some(v), true) => sig9(v.value),
                    _ => String::new(),
                });
            }
            match &report.best_upper {
                Some((id, v)) => {
                    fields.push(id.column().to_string());
                    fields.push(sig9(v.value));
                }
                None => {
                    fields.push(String::new());
                    fields.push(String::new());
                }
            }
            match (&entry.known_volume, &report.best_upper) {
                (Some(vol), Some((_, upper))) => {
                    fields.push(sig9(vol.value));
                    fields.push(sig9(upper.value - vol.value));
                }
                (Some(vol), None) => {
                    fields.push(sig9(vol.value));
                    fields.push(String::new());
                }
                (None, _) => {
                    fields.push(String::new());
                    fields.push(String::new());
                }
            }
        }
        Err(_) => {
            fields[1] = "not-realizable".to_string();
            for _ in BoundId::ALL {
                fields.push(String::new());
            }
            fields.push(String::new());
            fields.push(String::new());
            match &entry.known_volume {
                Some(vol) => fields.push(sig9(vol.value)),
                None => fields.push(String::new()),
            }
            fields.push(String::new());
        }
    }
    fields.join(",")
}

/// Render the whole report.
pub fn report_csv(entries: &[CatalogEntry]) -> String {
    let mut out = header();
    out.push('\n');
    for entry in entries {
        out.push_str(&row(entry));
        out.push('\n');
    }
    out
}
