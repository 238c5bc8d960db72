#![no_main]

use libfuzzer_sys::fuzz_target;
use lie_ext::formats::SpectrumReport;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = SpectrumReport::from_json(s) {
        SpectrumReport::from_json(&r.to_json()).expect("own output parses");
    }
});
