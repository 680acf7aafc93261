//! Small shared helpers: seeded RNG streams, argmax, hashing.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Derive an independent RNG stream from a base seed and a label.
///
/// The derivation goes through SHA-256 so streams for different labels are
/// decorrelated and stable across platforms and releases (std's hasher makes
/// no such promise).
pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update(label.as_bytes());
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

/// Derive a child seed from a base seed and a label.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update(label.as_bytes());
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

/// Index of the maximum value; ties broken by the lowest index.
///
/// The same rule is applied everywhere a prediction is made so SVM scoring
/// and report generation can never disagree.
pub fn argmax_tie_low(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

/// Hex SHA-256 of a byte slice.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Shannon entropy of a probability vector, in nats.
pub fn entropy(dist: &[f64]) -> f64 {
    dist.iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argmax_breaks_ties_low() {
        assert_eq!(argmax_tie_low(&[1.0, 3.0, 3.0, 2.0]), 1);
        assert_eq!(argmax_tie_low(&[5.0]), 0);
        assert_eq!(argmax_tie_low(&[0.0, 0.0, 0.0]), 0);
    }

    #[test]
    fn rng_streams_are_label_dependent() {
        use rand::RngCore;
        let a = rng_for(7, "alpha").next_u64();
        let b = rng_for(7, "beta").next_u64();
        let a2 = rng_for(7, "alpha").next_u64();
        assert_eq!(a, a2);
        assert_ne!(a, b);
    }

    #[test]
    fn entropy_of_uniform() {
        let h = entropy(&[0.25; 4]);
        assert!((h - (4.0f64).ln()).abs() < 1e-12);
    }
}
