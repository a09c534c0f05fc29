#![no_main]

use libfuzzer_sys::fuzz_target;
use unitarity::{AlgebraSpec, RootSystem};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = text.parse::<AlgebraSpec>() else {
        return;
    };
    assert_eq!(spec.tokens().parse::<AlgebraSpec>().unwrap(), spec);
    if spec.rank() <= 8 {
        let _ = RootSystem::build(spec);
    }
});
