use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use wiener_core::{BoundReport, Graph};

/// One JSON line per graph; field order is part of the output contract.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub graph6: String,
    pub n: u64,
    pub m: u64,
    pub d: Option<u64>,
    pub wiener: Option<u64>,
    pub bound: Option<u64>,
    pub gap: Option<i64>,
    pub tight: bool,
    pub applicable: bool,
}

impl OutputRecord {
    pub fn connected(graph6: String, r: &BoundReport) -> Self {
        Self {
            graph6,
            n: r.n,
            m: r.m,
            d: Some(r.d),
            wiener: Some(r.wiener),
            bound: r.bound,
            gap: r.gap,
            tight: r.tight,
            applicable: r.applicable,
        }
    }

    pub fn disconnected(graph6: String, g: &Graph) -> Self {
        Self {
            graph6,
            n: g.order() as u64,
            m: g.size() as u64,
            d: None,
            wiener: None,
            bound: None,
            gap: None,
            tight: false,
            applicable: false,
        }
    }
}

pub fn open_lines(path: Option<&Path>) -> anyhow::Result<Box<dyn BufRead>> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let f = File::open(p).with_context(|| format!("cannot open {}", p.display()))?;
            Ok(Box::new(BufReader::new(f)))
        }
    }
}

pub fn json_line<W: Write, T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub const RECORD_HEADER: &str = "graph6\tn\tm\td\twiener\tbound\tgap\ttight";

pub fn record_row(r: &OutputRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.graph6,
        r.n,
        r.m,
        cell(r.d),
        cell(r.wiener),
        cell(r.bound),
        cell(r.gap),
        if r.applicable {
            if r.tight { "yes" } else { "no" }
        } else {
            "n/a"
        }
    )
}

pub fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}
