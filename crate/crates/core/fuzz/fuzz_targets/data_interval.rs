#![no_main]

use libfuzzer_sys::fuzz_target;
use percept_core::codebook::DataIntervalFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = DataIntervalFile::parse(text) {
        let again = DataIntervalFile::parse(&file.to_toml_string()).expect("written file reparses");
        assert_eq!(again, file);
    }
});
