//! CSV assembly: RFC-4180-style rows, `#` comment lines, 17 significant
//! digits so every real round-trips exactly.

use std::io::Write;
use std::path::Path;

/// Formats a real with 17 significant digits (round-trip exact for f64).
pub fn fmt_f64(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{:.16e}", x)
}

/// Incremental CSV document with a comment header.
pub struct Csv {
    buffer: String,
}

impl Csv {
    pub fn new() -> Self {
        Self {
            buffer: String::new(),
        }
    }

    pub fn comment(&mut self, text: &str) -> &mut Self {
        self.buffer.push_str("# ");
        self.buffer.push_str(text);
        self.buffer.push('\n');
        self
    }

    pub fn header(&mut self, columns: &[&str]) -> &mut Self {
        self.buffer.push_str(&columns.join(","));
        self.buffer.push('\n');
        self
    }

    /// One row of preformatted fields.
    pub fn row(&mut self, fields: &[String]) -> &mut Self {
        self.buffer.push_str(&fields.join(","));
        self.buffer.push('\n');
        self
    }

    pub fn finish(self) -> String {
        self.buffer
    }
}

/// Writes to the path, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(path, content)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digit_reals_round_trip() {
        for x in [
            0.1,
            -0.3333333333333333,
            0.5625,
            1.0 / 3.0,
            std::f64::consts::PI,
            1e-300,
            -0.0,
        ] {
            let text = fmt_f64(x);
            let back: f64 = text.parse().unwrap();
            assert_eq!(back, if x == 0.0 { 0.0 } else { x }, "{text}");
        }
        assert_eq!(fmt_f64(0.5625), "5.6250000000000000e-1");
        assert_eq!(fmt_f64(-0.0), "0.0000000000000000e0");
    }

    #[test]
    fn csv_layout() {
        let mut csv = Csv::new();
        csv.comment("tool=inatt")
            .header(&["a", "b"])
            .row(&["1".into(), "2".into()]);
        assert_eq!(csv.finish(), "# tool=inatt\na,b\n1,2\n");
    }
}
