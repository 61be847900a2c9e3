//! NPY v1.0 array files, restricted to little-endian row-major `<f4`, `<f8`,
//! and `<i8`. Files this module writes are readable by NumPy and vice versa;
//! anything outside the restriction is rejected, not converted.
//!
//! Layout: magic `\x93NUMPY`, version bytes `01 00`, a little-endian u16
//! header length, the ASCII header dict
//! `{'descr': '<f8', 'fortran_order': False, 'shape': (r, c), }` padded with
//! spaces and terminated by a newline so that the total header (including
//! magic, version, and length bytes) is a multiple of 64, then the raw
//! little-endian payload.

use std::fs;
use std::path::Path;

use super::IoError;
use crate::tensor::{Dtype, Tensor};

const MAGIC: &[u8; 6] = b"\x93NUMPY";
const HEADER_ALIGN: usize = 64;

/// Read an array file into a [`Tensor`].
///
/// `<i8` payloads are checked element-wise for exact float64
/// representability (|v| <= 2^53), since all in-memory arithmetic is f64.
pub fn read_array_file(path: &Path) -> Result<Tensor, IoError> {
    let bytes = fs::read(path).map_err(|e| IoError::io(path, e))?;
    parse_array(&bytes)
}

/// Write a [`Tensor`] to an array file. Deterministic: equal tensors produce
/// byte-identical files, and `read_array_file` inverts it bit-exactly.
pub fn write_array_file(t: &Tensor, path: &Path) -> Result<(), IoError> {
    let bytes = encode_array(t)?;
    fs::write(path, bytes).map_err(|e| IoError::io(path, e))
}

pub(crate) fn parse_array(bytes: &[u8]) -> Result<Tensor, IoError> {
    if bytes.len() < 10 || &bytes[..6] != MAGIC {
        return Err(IoError::Malformed("bad magic".into()));
    }
    if bytes[6] != 1 || bytes[7] != 0 {
        return Err(IoError::Malformed(format!(
            "unsupported version {}.{}",
            bytes[6], bytes[7]
        )));
    }
    let header_len = u16::from_le_bytes([bytes[8], bytes[9]]) as usize;
    let payload_start = 10 + header_len;
    if bytes.len() < payload_start {
        return Err(IoError::Malformed("truncated header".into()));
    }
    let header = std::str::from_utf8(&bytes[10..payload_start])
        .map_err(|_| IoError::Malformed("header is not ASCII".into()))?;

    let descr = extract_str_field(header, "descr")?;
    let dtype = match descr.as_str() {
        "<f4" => Dtype::F32,
        "<f8" => Dtype::F64,
        "<i8" => Dtype::I64,
        other => return Err(IoError::UnsupportedDtype(other.to_string())),
    };
    match extract_bool_field(header, "fortran_order")? {
        false => {}
        true => return Err(IoError::UnsupportedLayout),
    }
    let shape = extract_shape_field(header)?;

    let count: usize = shape.iter().product();
    let payload = &bytes[payload_start..];
    if payload.len() != count * dtype.item_size() {
        return Err(IoError::Malformed(format!(
            "payload is {} bytes, shape {:?} with dtype {} needs {}",
            payload.len(),
            shape,
            descr,
            count * dtype.item_size()
        )));
    }

    let mut data = Vec::with_capacity(count);
    match dtype {
        Dtype::F32 => {
            for c in payload.chunks_exact(4) {
                data.push(f32::from_le_bytes([c[0], c[1], c[2], c[3]]) as f64);
            }
        }
        Dtype::F64 => {
            for c in payload.chunks_exact(8) {
                data.push(f64::from_le_bytes(c.try_into().unwrap()));
            }
        }
        Dtype::I64 => {
            for c in payload.chunks_exact(8) {
                let v = i64::from_le_bytes(c.try_into().unwrap());
                let f = v as f64;
                if f as i64 != v || f.abs() > 9_007_199_254_740_992.0 {
                    return Err(IoError::PrecisionLoss(v));
                }
                data.push(f);
            }
        }
    }
    Ok(Tensor::new(shape, dtype, data)?)
}

pub(crate) fn encode_array(t: &Tensor) -> Result<Vec<u8>, IoError> {
    let header_text = format!(
        "{{'descr': '{}', 'fortran_order': False, 'shape': {}, }}",
        t.dtype().descr(),
        format_shape(t.shape())
    );
    // Total file header (magic + version + length bytes + dict text + padding
    // + final newline) must be a multiple of 64.
    let unpadded = 10 + header_text.len() + 1;
    let total = unpadded.div_ceil(HEADER_ALIGN) * HEADER_ALIGN;
    let header_len = total - 10;

    let mut out = Vec::with_capacity(total + t.len() * t.dtype().item_size());
    out.extend_from_slice(MAGIC);
    out.push(1);
    out.push(0);
    out.extend_from_slice(&(header_len as u16).to_le_bytes());
    out.extend_from_slice(header_text.as_bytes());
    out.resize(total - 1, b' ');
    out.push(b'\n');

    match t.dtype() {
        Dtype::F32 => {
            for &v in t.data() {
                out.extend_from_slice(&(v as f32).to_le_bytes());
            }
        }
        Dtype::F64 => {
            for &v in t.data() {
                out.extend_from_slice(&v.to_le_bytes());
            }
        }
        Dtype::I64 => {
            for &v in t.data() {
                if v.fract() != 0.0 || v.abs() > 9_007_199_254_740_992.0 {
                    return Err(IoError::Malformed(format!(
                        "value {v} cannot be stored as <i8 exactly"
                    )));
                }
                out.extend_from_slice(&(v as i64).to_le_bytes());
            }
        }
    }
    Ok(out)
}

fn format_shape(shape: &[usize]) -> String {
    match shape.len() {
        0 => "()".to_string(),
        1 => format!("({},)", shape[0]),
        _ => {
            let dims: Vec<String> = shape.iter().map(|d| d.to_string()).collect();
            format!("({})", dims.join(", "))
        }
    }
}

fn extract_str_field(header: &str, key: &str) -> Result<String, IoError> {
    let needle = format!("'{key}':");
    let start = header
        .find(&needle)
        .ok_or_else(|| IoError::Malformed(format!("header missing '{key}'")))?
        + needle.len();
    let rest = header[start..].trim_start();
    let rest = rest
        .strip_prefix('\'')
        .ok_or_else(|| IoError::Malformed(format!("'{key}' is not a string")))?;
    let end = rest
        .find('\'')
        .ok_or_else(|| IoError::Malformed(format!("unterminated '{key}' value")))?;
    Ok(rest[..end].to_string())
}

fn extract_bool_field(header: &str, key: &str) -> Result<bool, IoError> {
    let needle = format!("'{key}':");
    let start = header
        .find(&needle)
        .ok_or_else(|| IoError::Malformed(format!("header missing '{key}'")))?
        + needle.len();
    let rest = header[start..].trim_start();
    if rest.starts_with("True") {
        Ok(true)
    } else if rest.starts_with("False") {
        Ok(false)
    } else {
        Err(IoError::Malformed(format!("'{key}' is not a boolean")))
    }
}

fn extract_shape_field(header: &str) -> Result<Vec<usize>, IoError> {
    let needle = "'shape':";
    let start = header
        .find(needle)
        .ok_or_else(|| IoError::Malformed("header missing 'shape'".into()))?
        + needle.len();
    let rest = header[start..].trim_start();
    let rest = rest
        .strip_prefix('(')
        .ok_or_else(|| IoError::Malformed("'shape' is not a tuple".into()))?;
    let end = rest
        .find(')')
        .ok_or_else(|| IoError::Malformed("unterminated shape tuple".into()))?;
    let inner = &rest[..end];
    let mut shape = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let dim: usize = part
            .parse()
            .map_err(|_| IoError::Malformed(format!("bad shape extent {part:?}")))?;
        shape.push(dim);
    }
    Ok(shape)
}
