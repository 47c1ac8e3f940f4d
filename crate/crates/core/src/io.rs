//! Plain-text and binary file formats.
//!
//! * symbol vectors: one line of space-separated decimal symbols
//! * wet masks: sorted 1-based indices, one per line
//! * bit strings: lowercase hex, most significant bit first, zero padded
//! * ZZW containers: `ZZWC` or `ZZWM` magic, version byte, `r_max`, `o`,
//!   `n` as u32 little endian, then `n` rows of `⌈column_len / 8⌉` bytes

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::zzw::ZzwParams;

pub const CONTAINER_MAGIC: &[u8; 4] = b"ZZWC";
pub const MASK_MAGIC: &[u8; 4] = b"ZZWM";
pub const FORMAT_VERSION: u8 = 1;

pub fn parse_symbols(text: &str, field: &Field) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|tok| {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))?;
            if !field.contains(v) {
                return Err(Error::Parse(format!("{v} is not in GF({})", field.q())));
            }
            Ok(v)
        })
        .collect()
}

pub fn format_symbols(symbols: &[u32]) -> String {
    let mut out = symbols
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

/// Reads 1-based indices and returns them 0-based, sorted. Blank lines are
/// skipped.
pub fn parse_wet_mask(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut wet = Vec::new();
    for tok in text.split_whitespace() {
        let i: usize = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad index {tok:?}")))?;
        if i == 0 || i > n {
            return Err(Error::Parse(format!("index {i} outside 1..={n}")));
        }
        wet.push(i - 1);
    }
    wet.sort_unstable();
    if wet.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Parse("duplicate wet index".into()));
    }
    Ok(wet)
}

/// Writes 0-based `wet` as sorted 1-based lines.
pub fn format_wet_mask(wet: &[usize]) -> String {
    let mut sorted = wet.to_vec();
    sorted.sort_unstable();
    sorted.iter().map(|i| format!("{}\n", i + 1)).collect()
}

pub fn bits_to_hex(bits: &[u8]) -> String {
    let mut out: String = bits
        .chunks(4)
        .map(|c| {
            let v = (0..4).fold(0u32, |acc, i| (acc << 1) | u32::from(c.get(i).copied().unwrap_or(0) & 1));
            char::from_digit(v, 16).unwrap()
        })
        .collect();
    out.push('\n');
    out
}

/// Parses hex into bits. With `len`, the digit count must be `⌈len / 4⌉`,
/// padding bits must be zero, and exactly `len` bits are returned.
pub fn hex_to_bits(text: &str, len: Option<usize>) -> Result<Vec<u8>> {
    let text = text.trim();
    let mut bits = Vec::with_capacity(text.len() * 4);
    for ch in text.chars() {
        let v = ch
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("bad hex digit {ch:?}")))?;
        bits.extend((0..4).rev().map(|i| ((v >> i) & 1) as u8));
    }
    if let Some(len) = len {
        if text.len() != len.div_ceil(4) {
            return Err(Error::Parse(format!(
                "expected {} hex digits for {len} bits, got {}",
                len.div_ceil(4),
                text.len()
            )));
        }
        if bits[len..].iter().any(|&b| b != 0) {
            return Err(Error::Parse("nonzero padding bits".into()));
        }
        bits.truncate(len);
    }
    Ok(bits)
}

/// `n` bit rows of length `column_len` with their design parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZzwFile {
    pub params: ZzwParams,
    pub rows: Vec<Vec<u8>>,
}

impl ZzwFile {
    pub fn new(params: ZzwParams, rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.len() != params.n {
            return Err(Error::LengthMismatch { expected: params.n, actual: rows.len() });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != params.column_len) {
            return Err(Error::LengthMismatch { expected: params.column_len, actual: bad.len() });
        }
        Ok(Self { params, rows })
    }

    /// Wet indices per column, 0-based, from a mask file.
    pub fn wet_sets(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i).collect())
            .collect()
    }

    pub fn from_wet_sets(params: ZzwParams, wet: &[Vec<usize>]) -> Result<Self> {
        let rows = wet
            .iter()
            .map(|set| {
                let mut row = vec![0u8; params.column_len];
                for &i in set {
                    *row.get_mut(i).ok_or_else(|| {
                        Error::Domain(format!("wet index {i} ≥ {}", params.column_len))
                    })? = 1;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, rows)
    }

    pub fn to_bytes(&self, magic: &[u8; 4]) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(magic);
        out.push(FORMAT_VERSION);
        out.push(self.params.r_max as u8);
        out.push(self.params.o as u8);
        out.extend_from_slice(&(self.params.n as u32).to_le_bytes());
        for row in &self.rows {
            for chunk in row.chunks(8) {
                let byte = (0..8).fold(0u8, |acc, i| (acc << 1) | (chunk.get(i).copied().unwrap_or(0) & 1));
                out.push(byte);
            }
        }
        out
    }

    pub fn from_bytes(data: &[u8], magic: &[u8; 4]) -> Result<Self> {
        const HEADER: usize = 11;
        if data.len() < HEADER || &data[..4] != magic {
            return Err(Error::Parse(format!(
                "missing {} header",
                String::from_utf8_lossy(magic)
            )));
        }
        if data[4] != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported version {}", data[4])));
        }
        let params = ZzwParams::new(data[5] as usize, data[6] as usize)?;
        let n = u32::from_le_bytes(data[7..11].try_into().unwrap()) as usize;
        if n != params.n {
            return Err(Error::Parse(format!("header says n = {n}, parameters give {}", params.n)));
        }
        let row_bytes = params.column_len.div_ceil(8);
        let body = &data[HEADER..];
        if body.len() != n * row_bytes {
            return Err(Error::Parse(format!(
                "expected {} body bytes, found {}",
                n * row_bytes,
                body.len()
            )));
        }
        let rows = body
            .chunks(row_bytes)
            .map(|chunk| {
                let mut bits: Vec<u8> = chunk
                    .iter()
                    .flat_map(|&b| (0..8).rev().map(move |i| (b >> i) & 1))
                    .collect();
                if bits[params.column_len..].iter().any(|&b| b != 0) {
                    return Err(Error::Parse("nonzero padding bits".into()));
                }
                bits.truncate(params.column_len);
                Ok(bits)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, rows)
    }
}
