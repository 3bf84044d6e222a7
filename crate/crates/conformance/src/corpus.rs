// Inputs only; expectations are computed by the core at emission time and
// then frozen in the file. Order is significant for byte-stable output.

pub(crate) const SCAN_INPUTS: &[&str] = &[
    // use-case sentences
    "We're waiting at the south entrance !@.",
    "Pour starts at 7am at the east lot !@ - bring boots.",
    "Main stage is packed tonight !@ #festival",
    // basics
    "",
    "!@",
    "a !@ b",
    "no trigger here",
    "!@\n!@",
    "meet at !@, then !@!",
    "(!@)",
    "[!@]",
    "{!@}",
    "\"!@\"",
    "'!@'",
    "where? !@?",
    "here: !@;",
    // escapes
    "say \\!@ to type it",
    "\\!@",
    "x\\!@",
    "\\\\!@",
    "both !@ and \\!@.",
    // email adjacency and expletives
    "user!@example.com",
    "mail me at a!@b.org !@",
    "x!@",
    "!@x",
    "!@#$",
    "!@!@",
    "!@@",
    "!!@",
    // multi-byte neighbours
    "日本!@",
    "日本 !@ 東京",
    "🙂 !@ 🙂",
    "🙂!@",
    "café\u{a0}!@",
    "wide\u{3000}!@\u{3000}space",
    "zero\u{200b}!@",
];

pub(crate) const LINK_INPUTS: &[&str] = &[
    "https://pingmark.me/0.00000/0.00000",
    "https://pingmark.me/43.07570/25.61720/20251101T120000Z",
    "https://pingmark.me/-33.85680/151.21530/20251101T033000Z",
    "https://pingmark.me/90.00000/180.00000",
    "https://pingmark.me/-90.00000/-180.00000",
    "https://pingmark.me/90.00000/-180.00000/20240229T235959Z",
    "https://pingmark.me/-0.00000/-0.00000",
    "https://pingmark.me/43/25",
    "https://pingmark.me/43.0757/25.6172/",
    "https://pingmark.me/1.1234567/-2.7654321",
    "https://example.org:8443/10.50000/-20.25000",
    "/0.00000/0.00000",
    "/43.07570/25.61720/20251101T120000Z",
    "https://pingmark.me/43.07570/25.61720/2025-11-01T12:00:00Z",
    "https://pingmark.me/43.07570/25.61720/2025-11-01T14%3A00%3A00+02%3A00",
    "https://pingmark.me/43.07570/25.61720/2025-11-01T14:00:00+02:00",
    // out of range
    "https://pingmark.me/90.00001/0.00000",
    "https://pingmark.me/-90.00001/0.00000",
    "https://pingmark.me/0.00000/180.00001",
    "https://pingmark.me/0.00000/-180.00001",
    "https://pingmark.me/91.0/0.0",
    "https://pingmark.me/999/0",
    // malformed
    "https://pingmark.me/abc/12",
    "http://pingmark.me/0.00000/0.00000",
    "pingmark.me/0.00000/0.00000",
    "https://pingmark.me/0.00000",
    "https://pingmark.me/0/0/20251101T120000Z/extra",
    "https://pingmark.me/1000/0",
    "https://pingmark.me/+1/0",
    "https://pingmark.me/1./0",
    "https://pingmark.me/.5/0",
    "https://pingmark.me/1.12345678/0",
    "https://pingmark.me/1e1/0",
    "https://pingmark.me/0,5/0",
    "https://pingmark.me/0/0?zoom=3",
    "https://pingmark.me/0/0#here",
    "https://pingmark.me/0/0//",
    "https:///0/0",
    "",
    // bad timestamps
    "https://pingmark.me/0/0/20250230T120000Z",
    "https://pingmark.me/0/0/20230229T000000Z",
    "https://pingmark.me/0/0/2025-11-01T12:00:00",
    "https://pingmark.me/0/0/20251101t120000z",
    "https://pingmark.me/0/0/yesterday",
];

pub(crate) const TIMESTAMP_INPUTS: &[&str] = &[
    "20251101T120000Z",
    "19700101T000000Z",
    "99991231T235959Z",
    "20240229T235959Z",
    "20000229T000000Z",
    "2025-11-01T12:00:00Z",
    "2025-11-01T14:00:00+02:00",
    "2025-11-01T07:30:00-04:30",
    "2025-11-01T12%3A00%3A00Z",
    "2025-11-01T14%3A00%3A00+02%3A00",
    "2025-11-01t14%3a00%3a00+02%3a00",
    "2025-01-01T01:00:00+03:00",
    "2024-02-28T23:00:00-02:00",
    // rejected
    "2025-11-01T12:00:00",
    "20251101T120000",
    "20251101T120000z",
    "19000229T000000Z",
    "21000229T000000Z",
    "20230229T000000Z",
    "20250230T000000Z",
    "20250431T000000Z",
    "20251301T000000Z",
    "20251101T240000Z",
    "20251101T120060Z",
    "19691231T235959Z",
    "1970-01-01T00:30:00+01:00",
    "2025-11-01T12:00:00.000Z",
    "2025-11-01T12:00:00+0200",
    "2025-11-01 12:00:00Z",
    "",
];
