#![no_main]

use libfuzzer_sys::fuzz_target;
use percept_core::Codebook;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cb) = Codebook::parse_with_grid(text, 101) {
        let again = Codebook::parse_with_grid(&cb.to_toml_string(), 101).expect("saved codebook reloads");
        assert_eq!(again.words(), cb.words());
    }
});
