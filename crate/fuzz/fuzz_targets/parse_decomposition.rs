#![no_main]
use libfuzzer_sys::fuzz_target;
use simint::decomposition::{parse_decomposition, write_decomposition};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(pd) = parse_decomposition(text) {
        assert_eq!(parse_decomposition(&write_decomposition(&pd)).unwrap(), pd);
    }
});
