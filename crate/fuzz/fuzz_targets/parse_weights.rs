#![no_main]
use libfuzzer_sys::fuzz_target;
use simint::graph::parse_weights;

// first byte picks the vertex count
fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(w) = parse_weights(text, n as usize) {
        assert_eq!(w.len(), n as usize);
    }
});
