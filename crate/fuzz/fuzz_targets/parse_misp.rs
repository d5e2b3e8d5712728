#![no_main]
use libfuzzer_sys::fuzz_target;
use simint::reduce::{parse_misp, write_misp};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(inst) = parse_misp(text) {
        assert_eq!(parse_misp(&write_misp(&inst)).unwrap(), inst);
    }
});
