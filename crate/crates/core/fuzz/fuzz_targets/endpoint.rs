#![no_main]

use libfuzzer_sys::fuzz_target;
use percept_core::codebook::parse_endpoint_specs;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((scale, specs)) = parse_endpoint_specs(text) {
        for s in &specs {
            s.validate(scale).expect("parsed specs are valid");
        }
    }
});
