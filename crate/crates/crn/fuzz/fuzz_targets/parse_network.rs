#![no_main]

use libfuzzer_sys::fuzz_target;

// The parser must never panic on arbitrary text; on success, printing and
// reparsing must reproduce the network.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(net) = crn::parse_network(text) {
        let printed = crn::pretty_print(&net, None);
        let reparsed = crn::parse_network(&printed).expect("canonical form must reparse");
        assert_eq!(reparsed.num_reactions(), net.num_reactions());
        assert_eq!(reparsed.num_complexes(), net.num_complexes());
    }
});
