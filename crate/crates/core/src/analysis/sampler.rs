//! Reproducible pseudo-random configurations.
//!
//! The generator is the 64-bit linear congruential generator
//! `state = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
//! Seeding sets `state = seed` and advances once. Each draw advances the
//! state and takes its high 32 bits `u`; `below(n) = (u * n) >> 32`.
//!
//! [`ConfigSampler::sample`] draws, in order:
//! 1. the class, `below(4)`: finite, periodic, affine, general;
//! 2. finite: core length `below(max_core + 1)`, start
//!    `below(2 * max_core + 1) - max_core`, then the core heights;
//!    periodic: length `1 + below(max_period)`, then the heights;
//!    affine: as periodic, then the slope `below(2 * max_slope + 1) - max_slope`;
//!    general: the finite-class core and start, then a left tail and a right
//!    tail, each drawn as an affine period.
//!
//! A height is `below(2h + 1) - h`; with infinities enabled it is first
//! preceded by `below(8)`, where 0 yields `+inf`, 1 yields `-inf`.

use crate::config::{Finite, NegInf, PosInf, Tail};
use crate::{Config, Height};

#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    const MUL: u64 = 6364136223846793005;
    const INC: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        let mut rng = Lcg64 { state: seed };
        rng.next_u32();
        rng
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(Self::MUL).wrapping_add(Self::INC);
        (self.state >> 32) as u32
    }

    /// Uniform-ish integer in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        (u64::from(self.next_u32()) * n) >> 32
    }

    /// Integer in `-m..=m`.
    pub fn symmetric(&mut self, m: i64) -> i64 {
        self.below(2 * m as u64 + 1) as i64 - m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleClass {
    Finite,
    Periodic,
    Affine,
    General,
}

#[derive(Debug, Clone)]
pub struct ConfigSampler {
    pub height: i64,
    pub max_core: usize,
    pub max_period: usize,
    pub max_slope: i64,
    pub with_infinities: bool,
}

impl Default for ConfigSampler {
    fn default() -> Self {
        ConfigSampler {
            height: 3,
            max_core: 6,
            max_period: 3,
            max_slope: 2,
            with_infinities: false,
        }
    }
}

impl ConfigSampler {
    fn height(&self, rng: &mut Lcg64) -> Height {
        if self.with_infinities {
            match rng.below(8) {
                0 => return PosInf,
                1 => return NegInf,
                _ => {}
            }
        }
        Finite(rng.symmetric(self.height))
    }

    fn heights(&self, rng: &mut Lcg64, len: usize) -> Vec<Height> {
        (0..len).map(|_| self.height(rng)).collect()
    }

    fn period(&self, rng: &mut Lcg64) -> Vec<Height> {
        let len = 1 + rng.below(self.max_period as u64) as usize;
        self.heights(rng, len)
    }

    fn tail(&self, rng: &mut Lcg64) -> Tail<i64> {
        let period = self.period(rng);
        let slope = rng.symmetric(self.max_slope);
        Tail::new(period, slope).unwrap()
    }

    fn core(&self, rng: &mut Lcg64) -> (i64, Vec<Height>) {
        let len = rng.below(self.max_core as u64 + 1) as usize;
        let start = rng.symmetric(self.max_core as i64);
        (start, self.heights(rng, len))
    }

    pub fn sample_class(&self, rng: &mut Lcg64) -> (SampleClass, Config) {
        match rng.below(4) {
            0 => {
                let (start, core) = self.core(rng);
                (SampleClass::Finite, Config::from_window(start, core))
            }
            1 => (
                SampleClass::Periodic,
                Config::periodic_at(0, self.period(rng)),
            ),
            2 => {
                let period = self.period(rng);
                let slope = rng.symmetric(self.max_slope);
                (SampleClass::Affine, Config::affine_at(0, period, slope))
            }
            _ => {
                let (start, core) = self.core(rng);
                let left = self.tail(rng);
                let right = self.tail(rng);
                (
                    SampleClass::General,
                    Config::general(start, core, left, right),
                )
            }
        }
    }

    pub fn sample(&self, rng: &mut Lcg64) -> Config {
        self.sample_class(rng).1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_the_documented_lcg() {
        let mut rng = Lcg64 { state: 0 };
        assert_eq!(rng.next_u32(), (1442695040888963407u64 >> 32) as u32);
        let mut a = Lcg64::new(42);
        let mut b = Lcg64::new(42);
        let xs: Vec<u64> = (0..16).map(|_| a.below(1000)).collect();
        let ys: Vec<u64> = (0..16).map(|_| b.below(1000)).collect();
        assert_eq!(xs, ys);
        assert!(xs.iter().all(|&x| x < 1000));
    }

    #[test]
    fn sampler_covers_every_class() {
        let sampler = ConfigSampler::default();
        let mut rng = Lcg64::new(7);
        let mut seen = [false; 4];
        for _ in 0..200 {
            let (class, c) = sampler.sample_class(&mut rng);
            seen[class as usize] = true;
            if class == SampleClass::Finite {
                assert!(c.is_finite_class());
            }
            if class == SampleClass::Periodic {
                assert!(c.is_periodic());
            }
            assert!(!c.has_infinity());
        }
        assert_eq!(seen, [true; 4]);
    }

    #[test]
    fn infinities_appear_when_enabled() {
        let sampler = ConfigSampler {
            with_infinities: true,
            ..ConfigSampler::default()
        };
        let mut rng = Lcg64::new(1);
        assert!((0..100).any(|_| sampler.sample(&mut rng).has_infinity()));
    }
}
