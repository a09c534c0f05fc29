#![no_main]

use libfuzzer_sys::fuzz_target;
use unitarity::parse_rational;
use unitarity::rational::fmt_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_rational(text) {
        // the canonical form parses back to the same value
        assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
    }
});
