#![no_main]

use libfuzzer_sys::fuzz_target;
use unitarity::catalog::CatalogEntry;
use unitarity::ehw::ClassificationReport;

fuzz_target!(|data: &[u8]| {
    if let Ok(r) = serde_json::from_slice::<ClassificationReport>(data) {
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(
            serde_json::from_str::<ClassificationReport>(&text).unwrap(),
            r
        );
    }
    if let Ok(e) = serde_json::from_slice::<Vec<CatalogEntry>>(data) {
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<Vec<CatalogEntry>>(&text).unwrap(), e);
    }
});
