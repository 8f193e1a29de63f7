#![no_main]

use libfuzzer_sys::fuzz_target;
use percept_core::tsukamoto::TsukamotoSystem;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = TsukamotoSystem::parse(text) {
        let mid = vec![0.5; s.variables()];
        let _ = s.crisp_output(&mid);
        if let Some(c) = s.constraint {
            let _ = s.optimize(c, 10);
        }
    }
});
