//! Log-magnitude STFT extraction.

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::{AudioSegment, Spectrogram};
use crate::error::{Error, Result};
use crate::nnet::Tensor;

/// Floor added to magnitudes before the log so silence stays finite.
pub const LOG_FLOOR_EPS: f64 = 1e-10;

/// Periodic Hann window of length `n`.
pub fn hann_periodic(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * i as f64 / n as f64).cos())
        .collect()
}

/// Closed-form frame count after tail-padding with `window - hop` zeros:
/// `1 + floor((len + (window - hop) - window) / hop)`.
pub fn stft_frame_count(len: usize, window: usize, hop: usize) -> usize {
    let padded = len + (window - hop);
    1 + (padded - window) / hop
}

/// Extract a log-magnitude spectrogram.
///
/// Per channel: tail-pad with `window - hop` zeros, slide a periodic Hann
/// window at `hop` stride, take the DFT magnitude of each frame, keep the
/// lowest `n_coefficients` bins, and apply `ln(mag + 1e-10)`.
pub fn stft_spectrogram(
    segment: &AudioSegment,
    window_ms: f64,
    hop_ms: f64,
    n_coefficients: usize,
) -> Result<Spectrogram> {
    segment.validate()?;
    if window_ms < hop_ms {
        return Err(Error::InvalidParameter(format!(
            "window ({window_ms} ms) must be >= hop ({hop_ms} ms)"
        )));
    }
    let rate = segment.sample_rate as f64;
    let window = (window_ms * rate / 1000.0).round() as usize;
    let hop = (hop_ms * rate / 1000.0).round() as usize;
    if window == 0 || hop == 0 {
        return Err(Error::InvalidParameter(
            "window and hop must span at least one sample".into(),
        ));
    }
    if n_coefficients > window {
        return Err(Error::InvalidParameter(format!(
            "n_coefficients ({n_coefficients}) exceeds window length ({window})"
        )));
    }
    let len = segment.len();
    if len < window {
        return Err(Error::SegmentTooShort { len, window });
    }

    let n_frames = stft_frame_count(len, window, hop);
    let n_channels = segment.n_channels();
    let win = hann_periodic(window);
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(window);

    let mut data = vec![0.0; n_frames * n_coefficients * n_channels];
    let mut buf = vec![Complex::new(0.0, 0.0); window];
    for (ci, ch) in segment.samples.iter().enumerate() {
        for frame in 0..n_frames {
            let start = frame * hop;
            for (i, slot) in buf.iter_mut().enumerate() {
                let sample = if start + i < len { ch[start + i] } else { 0.0 };
                *slot = Complex::new(sample * win[i], 0.0);
            }
            fft.process(&mut buf);
            for (k, value) in buf.iter().take(n_coefficients).enumerate() {
                data[(frame * n_coefficients + k) * n_channels + ci] =
                    (value.norm() + LOG_FLOOR_EPS).ln();
            }
        }
    }

    Ok(Spectrogram {
        frames: Tensor::from_vec(&[n_frames, n_coefficients, n_channels], data)
            .expect("sized above"),
        window_len_samples: window,
        hop_samples: hop,
        n_coefficients,
        label: segment.label,
        segment_id: segment.segment_id.clone(),
    })
}
