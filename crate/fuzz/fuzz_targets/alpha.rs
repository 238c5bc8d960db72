#![no_main]

use libfuzzer_sys::fuzz_target;
use lie_ext::spectral::{circulant_rank_exact, mu_spectrum};
use lie_ext::wtensor::AlphaVector;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(a) = AlphaVector::parse(s) {
        if a.n() <= 12 {
            assert!(circulant_rank_exact(&a) <= a.n());
            let _ = mu_spectrum(&a, 1e-9);
        }
    }
});
