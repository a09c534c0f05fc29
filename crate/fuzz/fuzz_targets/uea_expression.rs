#![no_main]

use libfuzzer_sys::fuzz_target;
use unitarity::rational::q;
use unitarity::verma::{parse_expression, parse_vector, GeneratorBasis, Series, VermaModule};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 256 {
        return;
    }
    let _ = parse_expression(text);
    // acting with a vector multiplies its coefficients by engine values, so
    // it is only exercised with coefficients of moderate size
    let longest_digits = text
        .split(|c: char| !c.is_ascii_digit())
        .map(str::len)
        .max()
        .unwrap_or(0);
    if longest_digits > 6 {
        return;
    }
    let gb = GeneratorBasis::new(Series::B, 2).unwrap();
    let module = VermaModule::new(&gb, &[q(-1, 1), q(1, 2)]).unwrap();
    if let Ok(y) = parse_vector(&module, text) {
        let _ = module.extremal_check(&y);
    }
});
