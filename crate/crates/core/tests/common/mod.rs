use std::path::{Path, PathBuf};

use figdist::Figure;

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load_fixture(name: &str) -> Figure {
    let path = fixture_dir().join("appendix").join(format!("{name}.figure.json"));
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    let figure = Figure::parse(&text).expect("fixture parses");
    figure.validate().expect("fixture is valid");
    figure
}

/// Published IPFP tables for the 28-edge-pair worked example
/// (gamma7/gamma8), shared by the regression and acceptance suites.
#[allow(dead_code)]
pub mod octagon_quad {
    /// Row-fitted cells: half of each row total. Three printed cells
    /// are corrected for obvious typos (10 -> 13.81825, 12 -> 7.4495,
    /// 26 -> 6.4142); the corrections follow from the row totals.
    pub const ROW_FITTED: [f64; 28] = [
        10.0, 7.5, 15.7313, 17.5, 7.0, 9.0359, 13.239, 9.0, 7.0, 13.81825, 16.0, 7.4495, 8.5505,
        13.2520, 10.0, 8.53555, 10.6066, 15.0, 7.0, 8.0, 13.1027, 9.0, 11.0, 11.07105, 16.0,
        6.4142, 9.5858, 11.8522,
    ];

    /// Column-fitted cells after the single correcting iteration.
    pub const COLUMN_FITTED: [(f64, f64); 28] = [
        (7.7424, 12.2576),
        (5.8068, 9.1932),
        (12.1798, 19.2829),
        (13.5491, 21.4509),
        (5.4197, 8.5803),
        (6.9959, 11.0759),
        (10.2501, 16.2279),
        (6.9681, 11.0319),
        (5.4197, 8.5803),
        (10.6986, 16.9379),
        (12.3878, 19.6122),
        (5.7677, 9.1313),
        (6.6201, 10.4809),
        (10.2602, 16.2438),
        (7.7424, 12.2576),
        (6.6085, 10.4625),
        (8.212, 13.0012),
        (11.6135, 18.3865),
        (5.4197, 8.5803),
        (6.1939, 9.8061),
        (10.1446, 16.0608),
        (6.9681, 11.0319),
        (8.5166, 13.4834),
        (8.5716, 13.5705),
        (12.3878, 19.6122),
        (4.9661, 7.8623),
        (7.4217, 11.7499),
        (9.1764, 14.528),
    ];

    /// Per-pair deviations, with two printed cells corrected: pairs 8
    /// and 22 have identical inputs and fitted points yet print 1.2285
    /// vs 1.4593, and the printed list sums to 65.3944 rather than the
    /// published 65.6736. The values below are the ones consistent
    /// with the published tables and sum (8 -> 1.4593, 12 -> 1.2285).
    pub const DEVIATIONS: [f64; 28] = [
        3.1928, 1.1409, 7.2701, 2.0518, 2.0077, 1.5215, 3.1821, 1.4593, 2.0077, 3.9539, 0.5484,
        1.2285, 0.6801, 3.1596, 3.1928, 0.6541, 1.6135, 2.2819, 2.0077, 0.2742, 3.4184, 1.4593,
        4.9263, 0.8084, 0.5484, 3.0231, 2.4748, 5.5861,
    ];
}
