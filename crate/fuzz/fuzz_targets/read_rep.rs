#![no_main]
use libfuzzer_sys::fuzz_target;
use simint::simrep::{canonicalize, read_rep, verify_representation, write_rep};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((g, rep)) = read_rep(text) {
        let (g2, rep2) = read_rep(&write_rep(&g, &rep)).unwrap();
        assert_eq!((&g2, &rep2), (&g, &rep));
        let _ = verify_representation(&g, &rep);
        assert_eq!(canonicalize(&rep).graph(), rep.graph());
    }
});
