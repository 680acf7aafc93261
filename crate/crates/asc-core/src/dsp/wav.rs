//! Minimal PCM WAV reader/writer: 16-bit integer and 32-bit float formats,
//! mono or stereo. Samples are normalized to [-1, 1] by the format's
//! full-scale value.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

/// Decoded WAV payload: per-channel samples plus the sample rate.
pub struct WavData {
    pub channels: Vec<Vec<f64>>,
    pub sample_rate: u32,
}

fn u16_at(bytes: &[u8], off: usize) -> u16 {
    u16::from_le_bytes([bytes[off], bytes[off + 1]])
}

fn u32_at(bytes: &[u8], off: usize) -> u32 {
    u32::from_le_bytes([bytes[off], bytes[off + 1], bytes[off + 2], bytes[off + 3]])
}

pub fn read_wav(path: &Path) -> Result<WavData> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let bad = |reason: &str| Error::parse(path, reason);
    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(bad("not a RIFF/WAVE file"));
    }

    let mut fmt: Option<(u16, u16, u32, u16)> = None; // format, channels, rate, bits
    let mut data: Option<&[u8]> = None;
    let mut off = 12;
    while off + 8 <= bytes.len() {
        let id = &bytes[off..off + 4];
        let size = u32_at(&bytes, off + 4) as usize;
        let body_end = off + 8 + size;
        if body_end > bytes.len() {
            return Err(bad("truncated chunk"));
        }
        let body = &bytes[off + 8..body_end];
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(bad("fmt chunk too small"));
                }
                fmt = Some((
                    u16_at(body, 0),
                    u16_at(body, 2),
                    u32_at(body, 4),
                    u16_at(body, 14),
                ));
            }
            b"data" => data = Some(body),
            _ => {}
        }
        // chunks are word-aligned
        off = body_end + (size & 1);
    }

    let (format, n_channels, sample_rate, bits) = fmt.ok_or_else(|| bad("missing fmt chunk"))?;
    let data = data.ok_or_else(|| bad("missing data chunk"))?;
    if n_channels == 0 {
        return Err(bad("zero channels"));
    }
    let n_channels = n_channels as usize;

    let samples: Vec<f64> = match (format, bits) {
        (1, 16) => data
            .chunks_exact(2)
            .map(|c| i16::from_le_bytes([c[0], c[1]]) as f64 / 32768.0)
            .collect(),
        (3, 32) => data
            .chunks_exact(4)
            .map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]]) as f64)
            .collect(),
        _ => {
            return Err(bad(&format!(
                "unsupported format: tag {format}, {bits} bits (need 16-bit PCM or 32-bit float)"
            )))
        }
    };

    let frames = samples.len() / n_channels;
    let mut channels = vec![Vec::with_capacity(frames); n_channels];
    for frame in samples.chunks_exact(n_channels) {
        for (ch, &v) in channels.iter_mut().zip(frame) {
            ch.push(v);
        }
    }
    Ok(WavData {
        channels,
        sample_rate,
    })
}

/// Write channels as a 32-bit float WAV (format tag 3).
pub fn write_wav_f32(path: &Path, channels: &[Vec<f64>], sample_rate: u32) -> Result<()> {
    if channels.is_empty() {
        return Err(Error::InvalidParameter("no channels to write".into()));
    }
    let frames = channels[0].len();
    if channels.iter().any(|c| c.len() != frames) {
        return Err(Error::InvalidParameter(
            "channel lengths differ in WAV write".into(),
        ));
    }
    let n_channels = channels.len() as u16;
    let byte_rate = sample_rate * n_channels as u32 * 4;
    let block_align = n_channels * 4;
    let data_size = (frames * channels.len() * 4) as u32;

    let mut out = Vec::with_capacity(44 + data_size as usize);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_size).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&3u16.to_le_bytes()); // IEEE float
    out.extend_from_slice(&n_channels.to_le_bytes());
    out.extend_from_slice(&sample_rate.to_le_bytes());
    out.extend_from_slice(&byte_rate.to_le_bytes());
    out.extend_from_slice(&block_align.to_le_bytes());
    out.extend_from_slice(&32u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_size.to_le_bytes());
    for frame in 0..frames {
        for ch in channels {
            out.extend_from_slice(&(ch[frame] as f32).to_le_bytes());
        }
    }

    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(&out).map_err(|e| Error::io(path, e))
}
