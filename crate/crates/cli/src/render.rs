use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    out += &line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for r in rows {
        out += &line(r);
    }
    out
}

/// Aligned plain-text rendering: batch results become one row per entry,
/// single reports a two-column key/value table.
pub fn text(v: &Value) -> String {
    if let Some(rows) = v.get("rows").and_then(Value::as_array) {
        let mut header = vec!["name".to_string()];
        if let Some(Value::Object(first)) = rows.first().and_then(|r| r.get("report")) {
            header.extend(first.keys().cloned());
        }
        let body: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                let mut cells = vec![r.get("name").map(cell).unwrap_or_default()];
                cells.extend(header[1..].iter().map(|k| r["report"].get(k).map(cell).unwrap_or_default()));
                cells
            })
            .collect();
        let mut out = table(&header, &body);
        for key in ["field", "class", "all_verdicts"] {
            if let Some(x) = v.get(key) {
                out += &format!("{key}: {}\n", cell(x));
            }
        }
        return out;
    }
    match v {
        Value::Object(map) => {
            let rows: Vec<Vec<String>> = map.iter().map(|(k, x)| vec![k.clone(), cell(x)]).collect();
            table(&["key".into(), "value".into()], &rows)
        }
        other => cell(other) + "\n",
    }
}
