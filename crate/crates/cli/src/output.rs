//! Report serialization: one JSON object per line, or CSV with params
//! flattened to `key=value;` pairs.

use bergman_kit::CheckReport;
use clap::ValueEnum;
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

pub struct ReportWriter<W: Write> {
    inner: Inner<W>,
    written: usize,
    failures: usize,
}

enum Inner<W: Write> {
    Json(W),
    Csv(csv::Writer<W>),
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W, format: Format) -> io::Result<Self> {
        let inner = match format {
            Format::Json => Inner::Json(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["check", "params", "observed", "expected", "tol", "pass"])?;
                Inner::Csv(w)
            }
        };
        Ok(Self {
            inner,
            written: 0,
            failures: 0,
        })
    }

    pub fn write(&mut self, report: &CheckReport) -> io::Result<()> {
        match &mut self.inner {
            Inner::Json(w) => {
                serde_json::to_writer(&mut *w, report)?;
                w.write_all(b"\n")?;
            }
            Inner::Csv(w) => w.write_record(csv_row(report))?,
        }
        self.written += 1;
        if !report.passed() {
            self.failures += 1;
        }
        Ok(())
    }

    pub fn written(&self) -> usize {
        self.written
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn finish(self) -> io::Result<()> {
        match self.inner {
            Inner::Json(mut w) => w.flush(),
            Inner::Csv(mut w) => w.flush(),
        }
    }
}

fn csv_row(report: &CheckReport) -> [String; 6] {
    let params: String = report.params().iter().map(|(k, v)| format!("{k}={v};")).collect();
    [
        report.name().to_string(),
        params,
        report.observed().to_string(),
        report.expected().to_string(),
        format!("{:e}", report.tolerance()),
        report.passed().to_string(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use bergman_kit::{Complex64, Quantity};

    fn render(format: Format, reports: &[CheckReport]) -> String {
        let mut buf = Vec::new();
        let mut w = ReportWriter::new(&mut buf, format).unwrap();
        for r in reports {
            w.write(r).unwrap();
        }
        w.finish().unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_lines_schema() {
        let r = CheckReport::value("kernel", Complex64::new(1.0, -0.5), Complex64::new(1.0, -0.5), 1e-12)
            .param("z", "0.5")
            .resolution("64x256");
        let text = render(Format::Json, &[r]);
        assert_eq!(
            text,
            "{\"check\":\"kernel\",\"params\":{\"rule\":\"64x256\",\"z\":\"0.5\"},\
             \"observed\":{\"re\":1.0,\"im\":-0.5},\"expected\":{\"re\":1.0,\"im\":-0.5},\"tol\":1e-12,\"pass\":true}\n"
        );
        let d = CheckReport::value("adj", Quantity::Divergent, Quantity::Divergent, 0.0);
        let b = CheckReport::bound("growth", -0.1, 0.0, 1e-9);
        let text = render(Format::Json, &[d, b]);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].contains("\"observed\":\"divergent\""));
        assert!(lines[1].contains("\"expected\":{\"bound\":0.0}"));
    }

    #[test]
    fn csv_flattens_params() {
        let r = CheckReport::bound("growth", -0.25, 0.0, 1e-9).param("n", 1).param("p", 2);
        let text = render(Format::Csv, &[r]);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("check,params,observed,expected,tol,pass"));
        assert_eq!(lines.next(), Some("growth,n=1;p=2;,-0.25,<= 0,1e-9,true"));
    }
}
