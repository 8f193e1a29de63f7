#![no_main]

use libfuzzer_sys::fuzz_target;
use percept_core::export::{parse_rows, words_from_rows, write_rows};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(rows) = parse_rows(text) {
        if let Ok(out) = write_rows(&rows) {
            let again = parse_rows(&out).expect("written rows reparse");
            assert_eq!(again.len(), rows.len());
        }
        let _ = words_from_rows(&rows);
    }
});
