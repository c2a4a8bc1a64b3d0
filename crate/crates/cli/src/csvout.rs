//! CSV tables: comma-separated, `name[unit]` headers, LF endings, numbers
//! rounded to 9 significant digits.

use csv::{Terminator, Writer, WriterBuilder};

/// Shortest decimal form of `x` rounded to 9 significant digits.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.8e}").parse().expect("formatted float parses");
    // Avoid "-0".
    if rounded == 0.0 {
        return "0".to_owned();
    }
    rounded.to_string()
}

pub struct Table {
    writer: Writer<Vec<u8>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Result<Self, csv::Error> {
        let mut writer = WriterBuilder::new()
            .terminator(Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(header)?;
        Ok(Self { writer })
    }

    pub fn row<I, S>(&mut self, fields: I) -> Result<(), csv::Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields)
    }

    pub fn finish(self) -> String {
        let bytes = self
            .writer
            .into_inner()
            .expect("writing to memory cannot fail");
        String::from_utf8(bytes).expect("fields are UTF-8")
    }
}
