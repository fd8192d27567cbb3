//! Report rendering for the command-line front end: text, LaTeX, CSV and
//! JSON views of series tables and generator sets. All output is
//! deterministic for a given input file.

use serde_json::json;

use relequiv_core::generators::{GeneralForm, GeneratorSet, GenKind};
use relequiv_core::series::IntSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Csv,
    Json,
}

fn series_latex(s: &IntSeries) -> String {
    let mut parts = Vec::new();
    for (d, &c) in s.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let part = match (d, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{c}t"),
            (_, 1) => format!("t^{{{d}}}"),
            _ => format!("{c}t^{{{d}}}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// The molien command output: the invariant and equivariant series for every
/// grading index.
pub fn render_series_tables(
    invariant: &[IntSeries],
    equivariant: &[IntSeries],
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (j, s) in invariant.iter().enumerate() {
                out.push_str(&format!("invariant  j={j}: {s}\n"));
            }
            for (j, s) in equivariant.iter().enumerate() {
                out.push_str(&format!("equivariant j={j}: {s}\n"));
            }
            out
        }
        Format::Latex => {
            let mut out = String::new();
            for (j, s) in invariant.iter().enumerate() {
                out.push_str(&format!(
                    "\\tilde{{\\Phi}}_{{{j}}}(t) = {}\\\\\n",
                    series_latex(s)
                ));
            }
            for (j, s) in equivariant.iter().enumerate() {
                out.push_str(&format!(
                    "\\tilde{{\\Psi}}_{{{j}}}(t) = {}\\\\\n",
                    series_latex(s)
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for (j, s) in invariant.iter().enumerate() {
                out.push_str(&format!("# invariant j={j}\n"));
                out.push_str(&s.csv());
            }
            for (j, s) in equivariant.iter().enumerate() {
                out.push_str(&format!("# equivariant j={j}\n"));
                out.push_str(&s.csv());
            }
            out
        }
        Format::Json => {
            let value = json!({
                "invariant": invariant.iter().map(|s| s.coeffs.clone()).collect::<Vec<_>>(),
                "equivariant": equivariant.iter().map(|s| s.coeffs.clone()).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
    }
}

fn kind_label(kind: GenKind) -> &'static str {
    match kind {
        GenKind::RingInvariant => "ring-invariant",
        GenKind::ModuleInvariant => "module-invariant",
        GenKind::ModuleEquivariant => "module-equivariant",
    }
}

pub fn render_generator_set(
    set: &GeneratorSet,
    names: &[&str],
    label: &str,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "# {label} ({}, j={}, {} generators)\n",
                kind_label(set.kind),
                set.j,
                set.len()
            );
            out.push_str(&set.render_lines(names));
            out
        }
        Format::Latex => {
            let inner: Vec<String> = set
                .items
                .iter()
                .map(|it| relequiv_core::generators::latexify(&it.payload.render(names)))
                .collect();
            format!("\\bigl\\{{ {} \\bigr\\}}\n", inner.join(",\\; "))
        }
        Format::Csv => {
            let mut out = String::from("degree,provenance,generator\n");
            for it in &set.items {
                out.push_str(&format!(
                    "{},\"{}\",\"{}\"\n",
                    it.degree,
                    it.provenance,
                    it.payload.render(names)
                ));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = set
                .items
                .iter()
                .map(|it| {
                    json!({
                        "degree": it.degree,
                        "provenance": it.provenance.to_string(),
                        "rendering": it.payload.render(names),
                    })
                })
                .collect();
            let value = json!({
                "kind": kind_label(set.kind),
                "j": set.j,
                "items": items,
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
    }
}

pub fn render_general_form(form: &GeneralForm, format: Format) -> Option<String> {
    match format {
        Format::Text => Some(format!("{}\n", form.text)),
        Format::Latex => Some(format!("{}\n", form.latex)),
        Format::Json => {
            let value = json!({
                "j": form.j,
                "coefficient_count": form.coefficient_count,
                "text": form.text,
                "latex": form.latex,
            });
            Some(format!("{}\n", serde_json::to_string_pretty(&value).unwrap()))
        }
        Format::Csv => None,
    }
}
