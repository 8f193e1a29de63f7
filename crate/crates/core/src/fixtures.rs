//! Embedded data shipped with the crate, addressable by id wherever a file
//! path is accepted.

pub const CODEBOOKS: &[(&str, &str)] = &[
    ("paper-hma", include_str!("../fixtures/paper-hma.toml")),
    ("paper-ia", include_str!("../fixtures/paper-ia.toml")),
];

pub const PROBLEMS: &[(&str, &str)] = &[
    ("case-solop", include_str!("../fixtures/case-solop.toml")),
    ("case-molop", include_str!("../fixtures/case-molop.toml")),
];

pub const TSUKAMOTO: &[(&str, &str)] = &[
    ("sm-solop", include_str!("../fixtures/sm-solop.toml")),
    ("sm-molop", include_str!("../fixtures/sm-molop.toml")),
];

pub const ENDPOINTS: &[(&str, &str)] = &[("case-endpoints", include_str!("../fixtures/case-endpoints.toml"))];

fn lookup(table: &[(&str, &'static str)], id: &str) -> Option<&'static str> {
    table.iter().find(|(name, _)| *name == id).map(|(_, text)| *text)
}

pub fn codebook_source(id: &str) -> Option<&'static str> {
    lookup(CODEBOOKS, id)
}

pub fn problem_source(id: &str) -> Option<&'static str> {
    lookup(PROBLEMS, id)
}

pub fn tsukamoto_source(id: &str) -> Option<&'static str> {
    lookup(TSUKAMOTO, id)
}

pub fn endpoint_source(id: &str) -> Option<&'static str> {
    lookup(ENDPOINTS, id)
}
