#![no_main]

use arthom::pathalg::parse_algebra_with_cap;
use arthom::repmod::resolve_module;
use libfuzzer_sys::fuzz_target;

// first line names the module, the rest is the algebra file
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let (name, body) = text.split_once('\n').unwrap_or((text, ""));
    let Ok(file) = parse_algebra_with_cap(body, 10) else { return };
    if let Ok(m) = resolve_module(&file, name) {
        assert_eq!(m.dims().len(), file.algebra.num_vertices());
    }
});
