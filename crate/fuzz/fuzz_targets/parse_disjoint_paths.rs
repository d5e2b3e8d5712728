#![no_main]
use libfuzzer_sys::fuzz_target;
use simint::reduce::{parse_disjoint_paths, write_disjoint_paths};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(inst) = parse_disjoint_paths(text) {
        assert_eq!(parse_disjoint_paths(&write_disjoint_paths(&inst)).unwrap(), inst);
    }
});
