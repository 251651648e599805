//! Golden witnesses shipped with the binary.

pub const ENTRIES: &[(&str, &str)] = &[
    ("crown-a", include_str!("../corpus/crown-a.cfg")),
    ("crown-b", include_str!("../corpus/crown-b.cfg")),
    ("dipole", include_str!("../corpus/dipole.cfg")),
    ("spike", include_str!("../corpus/spike.cfg")),
    ("spike-train", include_str!("../corpus/spike-train.cfg")),
    ("three-grains", include_str!("../corpus/three-grains.cfg")),
    ("x-pair-a", include_str!("../corpus/x-pair-a.cfg")),
    ("x-pair-b", include_str!("../corpus/x-pair-b.cfg")),
    ("y-pair-a", include_str!("../corpus/y-pair-a.cfg")),
    ("y-pair-b", include_str!("../corpus/y-pair-b.cfg")),
    ("zero", include_str!("../corpus/zero.cfg")),
];

pub fn lookup(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".cfg").unwrap_or(name);
    ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}
