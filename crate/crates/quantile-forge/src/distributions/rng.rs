//! Counter-based random number generation for reproducible simulation.
//!
//! The generator is a keyed SplitMix64: output `k` of stream `(seed, stream_id)`
//! is `mix(key + k * GOLDEN)` where `key` is derived from the seed and stream
//! id by two rounds of the same finalizer and `GOLDEN` is the 64-bit golden
//! ratio increment. Because each output is a pure function of
//! `(seed, stream_id, counter)`, streams can be created and consumed in any
//! order — including concurrently — without affecting one another. The
//! algorithm is part of this crate's compatibility contract: identical inputs
//! produce identical draws on every platform and every release.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const STREAM_TWEAK: u64 = 0xA076_1D64_78BD_642F;

/// SplitMix64 finalizer (Stafford's mix13 variant).
#[inline]
fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One independent, counter-indexed stream of uniform variates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngStream {
    key: u64,
    counter: u64,
}

impl RngStream {
    /// Open the stream identified by `(seed, stream_id)` at counter 0.
    pub fn new(seed: u64, stream_id: u64) -> Self {
        let key = mix64(seed ^ mix64(stream_id ^ STREAM_TWEAK));
        Self { key, counter: 0 }
    }

    /// Next raw 64-bit value; advances the counter by one.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let x = mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)));
        self.counter += 1;
        x
    }

    /// Next uniform variate on the open interval (0, 1).
    ///
    /// Uses the top 53 bits offset by half a unit in the last place, so the
    /// result is never exactly 0 or 1 and downstream quantile transforms stay
    /// finite.
    #[inline]
    pub fn next_open01(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        ((self.next_u64() >> 11) as f64 + 0.5) * SCALE
    }

    /// Position of the stream: how many values have been drawn.
    pub fn counter(&self) -> u64 {
        self.counter
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_inputs_reproduce_identical_sequences() {
        let mut a = RngStream::new(42, 7);
        let mut b = RngStream::new(42, 7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        assert_eq!(a.counter(), 100);
    }

    #[test]
    fn streams_do_not_interfere() {
        let mut solo = RngStream::new(1, 0);
        let expected: Vec<u64> = (0..10).map(|_| solo.next_u64()).collect();

        // interleave with another stream; stream 0 must be unchanged
        let mut s0 = RngStream::new(1, 0);
        let mut s1 = RngStream::new(1, 1);
        let mut got = Vec::new();
        for _ in 0..10 {
            s1.next_u64();
            got.push(s0.next_u64());
            s1.next_u64();
        }
        assert_eq!(got, expected);
    }

    #[test]
    fn distinct_streams_differ() {
        let mut a = RngStream::new(1, 0);
        let mut b = RngStream::new(1, 1);
        let same = (0..32).filter(|_| a.next_u64() == b.next_u64()).count();
        assert_eq!(same, 0);
    }

    // Pinned outputs: these freeze the generator algorithm itself. If this
    // test fails, the compatibility contract described in the module docs
    // has been broken.
    #[test]
    fn pinned_first_outputs() {
        let mut r = RngStream::new(0, 0);
        assert_eq!(r.next_u64(), 0xC6AE_19BD_7375_166F);
        assert_eq!(r.next_u64(), 0xAC2F_4942_FB57_3F0A);
        assert_eq!(r.next_u64(), 0x07E1_519E_E7D5_4B08);
        let mut r = RngStream::new(20260817, 3);
        assert_eq!(r.next_u64(), 0xCA58_1D6B_FD13_C67B);
    }

    #[test]
    fn open01_is_strictly_inside_unit_interval() {
        let mut r = RngStream::new(99, 99);
        for _ in 0..10_000 {
            let u = r.next_open01();
            assert!(u > 0.0 && u < 1.0, "u = {u}");
        }
    }
}
