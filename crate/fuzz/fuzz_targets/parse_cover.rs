#![no_main]
use libfuzzer_sys::fuzz_target;
use simint::cover::{parse_cover, write_cover};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = parse_cover(text) {
        assert_eq!(parse_cover(&write_cover(&c)).unwrap(), c);
    }
});
