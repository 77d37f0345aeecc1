#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use sdtest_core::Sample;

pub fn normal_sample(label: &str, n: usize, mean: f64, sd: f64, seed: u64) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Normal::new(mean, sd).unwrap();
    Sample::new(label, (0..n).map(|_| dist.sample(&mut rng)).collect()).unwrap()
}

/// Two independent normal samples drawn from one stream.
pub fn normal_pair(n: usize, (m1, s1): (f64, f64), (m2, s2): (f64, f64), seed: u64) -> (Sample, Sample) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d1 = Normal::new(m1, s1).unwrap();
    let d2 = Normal::new(m2, s2).unwrap();
    let a = (0..n).map(|_| d1.sample(&mut rng)).collect();
    let b = (0..n).map(|_| d2.sample(&mut rng)).collect();
    (Sample::new("sample1", a).unwrap(), Sample::new("sample2", b).unwrap())
}
