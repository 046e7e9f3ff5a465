//! Closed-form radical values used by the fixed constructions, evaluated once.

use std::sync::LazyLock;

#[derive(Debug)]
pub struct Radicals {
    pub sqrt2: f64,
    pub sqrt3: f64,
    pub sqrt5: f64,
    pub sqrt13: f64,
    /// Golden ratio `(1 + sqrt 5) / 2`.
    pub phi: f64,

    /// Last vertex of the 3x3 self-intersecting path: `sqrt(5/2)` on both axes.
    pub m33_tail: f64,
    /// Last vertex of the 3x3x3 self-intersecting path, first two coordinates:
    /// `sqrt(10)/12 * (6 - sqrt(24 - 3 sqrt 10))`.
    pub m333_tail_xy: f64,
    /// ... and third coordinate `sqrt(5/3 * (4 + sqrt 10)) / 2`.
    pub m333_tail_z: f64,

    /// `2 - sqrt 3`, low end of the check-path spikes.
    pub check_low: f64,
    /// `4 - sqrt 3`, high end of the check-path spikes.
    pub check_high: f64,

    /// Admissible x-range of the bridge Steiner point.
    pub s5_x_lo: f64,
    pub s5_x_hi: f64,
    /// Lower bound on its y coordinate: `3/2 - sqrt((466 sqrt 3 - 333) / 249)`.
    pub s5_y_lo: f64,
    /// The x where the principal solution hits y = 2:
    /// `(53 sqrt 3 - 108 + sqrt(208 sqrt 3 - 313)) / (8 (2 sqrt 3 - 5))`.
    pub s5_swap_x: f64,
    /// The other coordinate at that x:
    /// `(151 - 2 sqrt 3 - sqrt(20092 sqrt 3 - 17383)) / 104`.
    pub s5_swap_other: f64,
    /// Collision sphere radius `sqrt(94725 - 21288 sqrt 3) / 122`.
    pub collision_r: f64,
    /// Collision point `((192 - 85 sqrt 3)/122, (115 - 22 sqrt 3)/122, same)`.
    pub collision_x: f64,
    pub collision_yz: f64,
    /// Radius `sqrt(8 sqrt 3 - 5) / 2` of the circle of admissible points.
    pub circle_radius: f64,
    /// y where links 13 and 15 would collide:
    /// `(161 + 2 sqrt 3 - sqrt(20092 sqrt 3 - 17383)) / 104`.
    pub forbidden_y: f64,

    /// Circuit F: base square corners `-(1 + sqrt 13)/6` and `(7 + sqrt 13)/6`.
    pub f_lo: f64,
    pub f_hi: f64,
    /// Circuit F apex coordinates `-(1 + sqrt 13)/4`, `(5 + sqrt 13)/4`, `(3 + sqrt 13)/4`.
    pub f_apex_lo: f64,
    pub f_apex_hi: f64,
    pub f_apex_z: f64,
    /// Circuit F edge length `sqrt 2 (4 + sqrt 13) / 3`.
    pub f_len: f64,

    /// Circuit F': base corners `1 - sqrt 2` and `sqrt 2`, apex height
    /// `2 sqrt 3 - sqrt(3/2)`, edge length `4 - sqrt 2`.
    pub fp_lo: f64,
    pub fp_hi: f64,
    pub fp_apex_z: f64,
    pub fp_len: f64,

    /// Volume-minimizing parameter `(3 + sqrt 5)/4` and the matching apex
    /// height `(3 + sqrt 5)/2`.
    pub golden_x: f64,
    pub golden_y: f64,

    /// `1/sqrt 2` and `1 + 1/sqrt 2` for the six-link 2x2x2 path.
    pub inv_sqrt2: f64,
    pub one_plus_inv_sqrt2: f64,
}

static RADICALS: LazyLock<Radicals> = LazyLock::new(|| {
    let sqrt2 = 2f64.sqrt();
    let sqrt3 = 3f64.sqrt();
    let sqrt5 = 5f64.sqrt();
    let sqrt10 = 10f64.sqrt();
    let sqrt13 = 13f64.sqrt();
    let root_20092 = (20092.0 * sqrt3 - 17383.0).sqrt();
    Radicals {
        sqrt2,
        sqrt3,
        sqrt5,
        sqrt13,
        phi: (1.0 + sqrt5) / 2.0,

        m33_tail: 2.5f64.sqrt(),
        m333_tail_xy: sqrt10 / 12.0 * (6.0 - (24.0 - 3.0 * sqrt10).sqrt()),
        m333_tail_z: 0.5 * (5.0 / 3.0 * (4.0 + sqrt10)).sqrt(),

        check_low: 2.0 - sqrt3,
        check_high: 4.0 - sqrt3,

        s5_x_lo: 2.0 - sqrt3 / 2.0 - ((87.0 + 128.0 * sqrt3) / 498.0).sqrt(),
        s5_x_hi: (65.0 * (2.0 - sqrt3) - (916.0 * sqrt3 - 1549.0).sqrt())
            / (8.0 * (5.0 - 2.0 * sqrt3)),
        s5_y_lo: 1.5 - ((466.0 * sqrt3 - 333.0) / 249.0).sqrt(),
        s5_swap_x: (53.0 * sqrt3 - 108.0 + (208.0 * sqrt3 - 313.0).sqrt())
            / (8.0 * (2.0 * sqrt3 - 5.0)),
        s5_swap_other: (151.0 - 2.0 * sqrt3 - root_20092) / 104.0,
        collision_r: (94725.0 - 21288.0 * sqrt3).sqrt() / 122.0,
        collision_x: (192.0 - 85.0 * sqrt3) / 122.0,
        collision_yz: (115.0 - 22.0 * sqrt3) / 122.0,
        circle_radius: (8.0 * sqrt3 - 5.0).sqrt() / 2.0,
        forbidden_y: (161.0 + 2.0 * sqrt3 - root_20092) / 104.0,

        f_lo: -(1.0 + sqrt13) / 6.0,
        f_hi: (7.0 + sqrt13) / 6.0,
        f_apex_lo: -(1.0 + sqrt13) / 4.0,
        f_apex_hi: (5.0 + sqrt13) / 4.0,
        f_apex_z: (3.0 + sqrt13) / 4.0,
        f_len: sqrt2 * (4.0 + sqrt13) / 3.0,

        fp_lo: 1.0 - sqrt2,
        fp_hi: sqrt2,
        fp_apex_z: 2.0 * sqrt3 - 1.5f64.sqrt(),
        fp_len: 4.0 - sqrt2,

        golden_x: (3.0 + sqrt5) / 4.0,
        golden_y: (3.0 + sqrt5) / 2.0,

        inv_sqrt2: 1.0 / sqrt2,
        one_plus_inv_sqrt2: 1.0 + 1.0 / sqrt2,
    }
});

pub fn radicals() -> &'static Radicals {
    &RADICALS
}
