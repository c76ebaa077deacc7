use std::path::Path;

use crate::data::Dataset;
use crate::error::{Error, Result};

/// Load a dataset from a headered CSV file.
///
/// The column named `label_column` must hold 0/1; every other column must be
/// numeric and their count divisible by `timesteps`. Columns are consumed in
/// header order, time-major: with `d` features per step, the first `d`
/// non-label columns are step 0, the next `d` are step 1, and so on. Feature
/// names are the first `d` non-label headers. Row order is preserved and no
/// row is ever silently dropped.
pub fn load_csv(path: impl AsRef<Path>, label_column: &str, timesteps: usize) -> Result<Dataset> {
    let path = path.as_ref();
    if timesteps == 0 {
        return Err(Error::domain("timesteps must be >= 1"));
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Error::domain(format!("cannot open {}: {e}", path.display())))?;

    let headers = reader.headers()?.clone();
    let label_idx = headers
        .iter()
        .position(|h| h == label_column)
        .ok_or_else(|| Error::parse(1, format!("label column `{label_column}` not found")))?;
    let feature_cols: Vec<usize> = (0..headers.len()).filter(|&i| i != label_idx).collect();
    if feature_cols.is_empty() {
        return Err(Error::parse(1, "no feature columns"));
    }
    if feature_cols.len() % timesteps != 0 {
        return Err(Error::parse(
            1,
            format!(
                "{} feature columns not divisible by {} timesteps",
                feature_cols.len(),
                timesteps
            ),
        ));
    }
    let features = feature_cols.len() / timesteps;
    let feature_names: Vec<String> = feature_cols[..features]
        .iter()
        .map(|&i| headers[i].to_string())
        .collect();

    let mut data = Vec::new();
    let mut labels = Vec::new();
    for (rec_idx, record) in reader.records().enumerate() {
        let line = rec_idx + 2; // 1-based, after the header
        let record = record.map_err(|e| Error::parse(line, format!("bad record: {e}")))?;
        if record.len() != headers.len() {
            return Err(Error::parse(
                line,
                format!("expected {} fields, got {}", headers.len(), record.len()),
            ));
        }
        let raw_label = &record[label_idx];
        let label = match raw_label {
            "0" => 0u8,
            "1" => 1u8,
            other => {
                return Err(Error::parse(
                    line,
                    format!("label must be 0 or 1, got `{other}`"),
                ))
            }
        };
        for &col in &feature_cols {
            let cell = &record[col];
            let v: f64 = cell.parse().map_err(|_| {
                Error::parse(
                    line,
                    format!("non-numeric value `{cell}` in column `{}`", &headers[col]),
                )
            })?;
            if !v.is_finite() {
                return Err(Error::parse(
                    line,
                    format!("non-finite value in column `{}`", &headers[col]),
                ));
            }
            data.push(v);
        }
        labels.push(label);
    }
    if labels.is_empty() {
        return Err(Error::domain(format!("{}: no data rows", path.display())));
    }
    Dataset::new(
        timesteps,
        features,
        data,
        labels,
        feature_names,
        format!("csv:{}", path.display()),
    )
}

/// Write a dataset back out in the contract `load_csv` reads.
///
/// For `T > 1`, feature headers are mangled `name@t<k>` so the file is
/// self-describing; the label column comes last.
pub fn save_csv(ds: &Dataset, path: impl AsRef<Path>, label_column: &str) -> Result<()> {
    let mut writer = csv::Writer::from_path(path.as_ref())?;
    let mut header: Vec<String> = Vec::with_capacity(ds.flat_features() + 1);
    for t in 0..ds.timesteps() {
        for name in ds.feature_names() {
            if ds.timesteps() == 1 {
                header.push(name.clone());
            } else {
                header.push(format!("{name}@t{t}"));
            }
        }
    }
    header.push(label_column.to_string());
    writer.write_record(&header)?;
    for i in 0..ds.len() {
        let mut row: Vec<String> = ds.sample(i).iter().map(|v| format!("{v}")).collect();
        row.push(format!("{}", ds.label(i)));
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(())
}
