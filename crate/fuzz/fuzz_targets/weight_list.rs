#![no_main]

use libfuzzer_sys::fuzz_target;
use unitarity::rational::fmt_rational;
use unitarity::{parse_rational_list, AlgebraSpec, RootSystem, RootVector};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(v) = parse_rational_list(text) else {
        return;
    };
    let joined: Vec<String> = v.iter().map(fmt_rational).collect();
    assert_eq!(parse_rational_list(&joined.join(", ")).unwrap(), v);
    if v.len() == 4
        && v.iter()
            .all(|x| x.numer().abs() < 1 << 40 && *x.denom() < 1 << 20)
    {
        let rs = RootSystem::build(AlgebraSpec::Su(2, 2)).unwrap();
        let _ = unitarity::ehw::classify(&rs, &RootVector(v));
    }
});
