//! Example presentations shipped with the tool.

pub const EXAMPLES: &[(&str, &str)] = &[
    ("e3_1", include_str!("../data/e3_1.quiv")),
    ("e3_2", include_str!("../data/e3_2.quiv")),
    ("e4_1", include_str!("../data/e4_1.quiv")),
    ("e4_2", include_str!("../data/e4_2.quiv")),
    ("two_cycle", include_str!("../data/two_cycle.quiv")),
    ("no_witness", include_str!("../data/no_witness.quiv")),
    ("hereditary", include_str!("../data/hereditary.quiv")),
    ("dual_numbers", include_str!("../data/dual_numbers.quiv")),
    ("free_corner", include_str!("../data/free_corner.quiv")),
];

pub fn example(name: &str) -> Option<&'static str> {
    EXAMPLES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
