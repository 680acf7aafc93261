//! Audio signal front-end: pre-emphasis, STFT spectrogram extraction, and
//! same-class segment concatenation for teacher inputs.

mod specfile;
mod stft;
mod wav;

pub use specfile::{read_spectrogram, write_spectrogram, SpectrogramMeta, SPEC_MAGIC};
pub use stft::{hann_periodic, stft_frame_count, stft_spectrogram, LOG_FLOOR_EPS};
pub use wav::{read_wav, write_wav_f32, WavData};

use crate::error::{Error, Result};
use crate::nnet::Tensor;

/// Standard pre-emphasis coefficient used when a config does not override it.
pub const DEFAULT_PREEMPHASIS: f64 = 0.97;

/// A labelled multichannel audio clip; the atom of every dataset.
#[derive(Clone, Debug, PartialEq)]
pub struct AudioSegment {
    /// Per-channel sample buffers, nominal range [-1, 1]. All channels have
    /// equal length.
    pub samples: Vec<Vec<f64>>,
    pub sample_rate: u32,
    /// Class index in `[0, K)`.
    pub label: usize,
    /// Opaque recording-location identifier; folds never split a location.
    pub location_id: String,
    pub segment_id: String,
}

impl AudioSegment {
    pub fn n_channels(&self) -> usize {
        self.samples.len()
    }

    /// Samples per channel.
    pub fn len(&self) -> usize {
        self.samples.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn duration_s(&self) -> f64 {
        self.len() as f64 / self.sample_rate as f64
    }

    /// Check the structural invariants: equal channel lengths, positive
    /// rate, at least one channel.
    pub fn validate(&self) -> Result<()> {
        if self.sample_rate == 0 {
            return Err(Error::InvalidParameter("sample_rate must be > 0".into()));
        }
        if self.samples.is_empty() {
            return Err(Error::InvalidParameter("segment has no channels".into()));
        }
        let len = self.samples[0].len();
        if self.samples.iter().any(|ch| ch.len() != len) {
            return Err(Error::IncompatibleSegments(format!(
                "channel lengths differ in segment {}",
                self.segment_id
            )));
        }
        Ok(())
    }

    /// Time-major `[len, n_channels]` tensor view of the samples, the input
    /// layout of the waveform model.
    pub fn to_tensor(&self) -> Tensor {
        let n = self.len();
        let c = self.n_channels();
        let mut data = vec![0.0; n * c];
        for (ci, ch) in self.samples.iter().enumerate() {
            for (t, &v) in ch.iter().enumerate() {
                data[t * c + ci] = v;
            }
        }
        Tensor::from_vec(&[n, c], data).expect("consistent channel lengths")
    }
}

/// Log-magnitude STFT frames with their framing metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrogram {
    /// Shape `[n_frames, n_coefficients, n_channels]`, row-major.
    pub frames: Tensor,
    pub window_len_samples: usize,
    pub hop_samples: usize,
    pub n_coefficients: usize,
    pub label: usize,
    pub segment_id: String,
}

impl Spectrogram {
    pub fn n_frames(&self) -> usize {
        self.frames.shape()[0]
    }

    pub fn n_channels(&self) -> usize {
        self.frames.shape()[2]
    }
}

/// First-order high-pass filtering `y[n] = x[n] - alpha * x[n-1]` with
/// `y[0] = x[0]`, applied per channel. Length and metadata preserved.
pub fn preemphasis(segment: &AudioSegment, alpha: f64) -> Result<AudioSegment> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "pre-emphasis coefficient must be in [0, 1], got {alpha}"
        )));
    }
    let mut out = segment.clone();
    for ch in &mut out.samples {
        // prev starts at 0 so y[0] = x[0].
        let mut prev = 0.0;
        for v in ch.iter_mut() {
            let cur = *v;
            *v = cur - alpha * prev;
            prev = cur;
        }
    }
    Ok(out)
}

/// Channel-wise end-to-end concatenation of same-class segments.
///
/// The result id derives deterministically from the constituent ids; the
/// location id is taken from the first segment.
pub fn concat_segments(segments: &[AudioSegment]) -> Result<AudioSegment> {
    let first = segments
        .first()
        .ok_or_else(|| Error::InvalidParameter("cannot concatenate zero segments".into()))?;
    for seg in &segments[1..] {
        if seg.sample_rate != first.sample_rate || seg.n_channels() != first.n_channels() {
            return Err(Error::IncompatibleSegments(format!(
                "{} vs {}: sample_rate/channels differ",
                first.segment_id, seg.segment_id
            )));
        }
        if seg.label != first.label {
            return Err(Error::CrossClassConcat(first.label, seg.label));
        }
    }
    let mut samples = vec![Vec::new(); first.n_channels()];
    for seg in segments {
        for (ch, buf) in seg.samples.iter().zip(samples.iter_mut()) {
            buf.extend_from_slice(ch);
        }
    }
    let segment_id = segments
        .iter()
        .map(|s| s.segment_id.as_str())
        .collect::<Vec<_>>()
        .join("+");
    Ok(AudioSegment {
        samples,
        sample_rate: first.sample_rate,
        label: first.label,
        location_id: first.location_id.clone(),
        segment_id,
    })
}

#[cfg(test)]
mod tests;
