//! Archived values for the bigraded window with no closed form: the ℓ = 3
//! homology H_n at polynomial degree n + 3 for n = 5, 6, 7, computed at
//! truncated rank r = 4 (diagrams with more than four rows are cut off;
//! the full-rank computation is beyond exact desk scale). The expected
//! decompositions below were produced by this code and frozen as
//! regression data; both homology routes cross-check on every block.

use nilhom_cli::driver::Driver;
use nilhom_core::weightchar::{decompose_sp_gl, ReportEntry, SpLabel};
use nilhom_core::Partition;

fn entry(m: u32, gl: &[u32]) -> ReportEntry {
    ReportEntry {
        sp: SpLabel::Sym(m),
        gl: Partition::of(gl),
        mult: 1,
    }
}

#[test]
fn ell3_window_values_at_rank_four() {
    let expected: Vec<(usize, u64, Vec<ReportEntry>)> = vec![
        (5, 504, vec![entry(2, &[4, 4]), entry(0, &[6, 1, 1])]),
        (
            6,
            2600,
            vec![
                entry(3, &[5, 2, 2]),
                entry(3, &[4, 4, 1]),
                entry(1, &[6, 2, 1]),
                entry(1, &[5, 4]),
            ],
        ),
        (
            7,
            1606,
            vec![
                entry(4, &[5, 2, 2, 1]),
                entry(4, &[4, 4, 1, 1]),
                entry(2, &[6, 2, 2]),
                entry(0, &[5, 5]),
            ],
        ),
    ];
    let driver = Driver::new(1, 4);
    for (n, dim, want) in expected {
        let chi = driver
            .bidegree_homology(n - 3, 3)
            .expect("cross-checked routes");
        assert_eq!(chi.total_dim() as u64, dim, "n={n}");
        let report = decompose_sp_gl(&chi).expect("genuine character");
        assert_eq!(report.entries, want, "n={n}");
    }
}
