#![no_main]

use libfuzzer_sys::fuzz_target;
use lie_ext::rational::{format, parse_canonical, parse_lenient};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_lenient(s) {
        let text = format(&r);
        assert_eq!(parse_canonical(&text).expect("formatted value is canonical"), r);
    }
    if let Ok(r) = parse_canonical(s) {
        assert_eq!(format(&r), s);
    }
});
