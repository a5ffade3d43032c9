//! Published Hansen coefficient tables, transcribed at their printed precision.
#![allow(dead_code)]

pub struct PublishedTable {
    pub body: &'static str,
    pub e: f64,
    /// `(n, m)` as printed in the table header.
    pub header: (i32, u32),
    /// `(n, m)` that the printed values actually correspond to.
    pub values_for: (i32, u32),
    /// Grid size consistent with the printed footer statistics.
    pub samples: usize,
    /// `A_k, k = 0..`
    pub a: &'static [f64],
    /// `B_k, k = 1..`
    pub b: &'static [f64],
    pub delta_sq: (f64, f64),
    pub sigma_coeff: (f64, f64),
    pub q_dist: (f64, f64),
}

impl PublishedTable {
    pub fn order(&self) -> usize {
        self.a.len() - 1
    }
}

pub const EARTH: PublishedTable = PublishedTable {
    body: "earth",
    e: 0.016708617,
    header: (-3, 6),
    values_for: (-3, 6),
    samples: 100,
    a: &[
        -2.80505e-16,
        -1.69927e-10,
        1.31491e-7,
        -0.0000259261,
        0.00209013,
        -0.0749101,
        0.99039,
        0.124591,
        0.00917108,
        0.000516607,
        0.0000246565,
        1.05004e-6,
    ],
    b: &[
        -1.69927e-10,
        1.31491e-7,
        -0.0000259261,
        0.00209013,
        -0.0749101,
        0.99039,
        0.124591,
        0.00917108,
        0.000516607,
        0.0000246565,
        1.05004e-6,
    ],
    delta_sq: (8.52652e-14, 6.39488e-14),
    sigma_coeff: (4.37729e-9, 3.79085e-9),
    q_dist: (2.10768e-16, 1.8076e-16),
};

pub const PLUTO: PublishedTable = PublishedTable {
    body: "pluto",
    e: 0.249050,
    header: (-3, 6),
    values_for: (5, 4),
    samples: 100,
    a: &[
        0.0508079,
        -0.325005,
        0.969155,
        -1.34716,
        0.536896,
        0.248699,
        0.0765758,
        0.0211903,
        0.0056458,
        0.00148234,
        0.000386931,
        0.000100722,
        0.0000261571,
        6.76933e-6,
    ],
    b: &[
        -0.319177,
        0.969203,
        -1.34716,
        0.536896,
        0.248699,
        0.0765758,
        0.0211903,
        0.0056458,
        0.00148234,
        0.000386931,
        0.000100722,
        0.0000261571,
        6.76933e-6,
    ],
    delta_sq: (1.62174e-10, 1.6226e-10),
    sigma_coeff: (1.93084e-7, 1.93135e-7),
    q_dist: (4.84659e-13, 4.84914e-13),
};

pub const CERES: PublishedTable = PublishedTable {
    body: "ceres",
    e: 0.078,
    header: (8, 2),
    values_for: (8, 2),
    samples: 100,
    a: &[
        0.0854431,
        -0.492936,
        1.08609,
        -0.157994,
        0.00140598,
        0.000192711,
        0.0000113508,
        6.01265e-7,
    ],
    b: &[
        -0.479094,
        1.08564,
        -0.157993,
        0.00140603,
        0.000192714,
        0.0000113509,
        6.01269e-7,
    ],
    delta_sq: (4.26326e-14, 4.26326e-14),
    sigma_coeff: (3.02792e-9, 3.02792e-9),
    q_dist: (6.41781e-17, 6.41781e-17),
};

pub const SEKHMET: PublishedTable = PublishedTable {
    body: "sekhmet",
    e: 0.296,
    header: (-1, 5),
    values_for: (-1, 5),
    samples: 100,
    a: &[
        -0.0000795273,
        0.00983893,
        -0.114213,
        0.431088,
        -0.482649,
        -0.260258,
        0.191795,
        0.410314,
        0.411965,
        0.318733,
        0.213837,
        0.130854,
        0.0750457,
        0.0410069,
        0.021582,
        0.0110231,
        0.00549385,
        0.00268279,
        0.00128767,
        0.000608982,
        0.000284349,
        0.000131294,
        0.0000600289,
        0.0000272069,
        0.0000122351,
        5.46368e-6,
    ],
    b: &[
        0.00983416,
        -0.114214,
        0.431088,
        -0.482649,
        -0.260258,
        0.191795,
        0.410314,
        0.411965,
        0.318733,
        0.213837,
        0.130854,
        0.0750457,
        0.0410069,
        0.021582,
        0.0110231,
        0.00549385,
        0.00268279,
        0.00128767,
        0.000608982,
        0.000284349,
        0.000131294,
        0.0000600289,
        0.0000272069,
        0.0000122351,
        5.46368e-6,
    ],
    delta_sq: (3.64729e-10, 3.64665e-10),
    sigma_coeff: (3.11867e-7, 3.1184e-7),
    q_dist: (2.43152e-12, 2.4311e-12),
};

pub const WILD2: PublishedTable = PublishedTable {
    body: "wild2",
    e: 0.541,
    header: (3, 2),
    values_for: (3, 5),
    samples: 400,
    a: &[
        -0.187235,
        0.954443,
        -1.75935,
        1.04451,
        0.271626,
        -0.101094,
        -0.158792,
        -0.112669,
        -0.05443,
        -0.0112087,
        0.0142725,
        0.026263,
        0.0296931,
        0.0283862,
        0.0248699,
        0.0206484,
        0.0165297,
        0.0128893,
        0.00985376,
        0.00741822,
        0.005551671,
        0.00406198,
        0.00296636,
        0.00215139,
        0.00155123,
        0.00111291,
        0.000795003,
        0.000565771,
        0.000401309,
        0.000283824,
        0.000200214,
        0.000140908,
        0.0000989644,
        0.0000693761,
        0.000048552,
        0.0000339265,
        0.0000236736,
        0.0000164982,
        0.0000114842,
        7.9854e-6,
    ],
    b: &[
        0.943797,
        -1.75982,
        1.04448,
        0.271625,
        -0.101092,
        -0.158791,
        -0.112669,
        -0.0544298,
        -0.0112086,
        0.0142726,
        0.026263,
        0.0296931,
        0.0283862,
        0.0248699,
        0.0206484,
        0.0165297,
        0.0128893,
        0.00985376,
        0.00741822,
        0.005551671,
        0.00406198,
        0.00296636,
        0.00215139,
        0.00155123,
        0.00111291,
        0.000795003,
        0.000565771,
        0.000401309,
        0.000283824,
        0.000200214,
        0.000140908,
        0.0000989644,
        0.0000693761,
        0.000048552,
        0.0000339265,
        0.0000236736,
        0.0000164982,
        0.0000114842,
        7.9854e-6,
    ],
    delta_sq: (1.18559e-8, 1.18562e-8),
    sigma_coeff: (4.05228e-7, 4.05232e-7),
    q_dist: (6.40418e-12, 6.4043e-12),
};

pub const LEXELL: PublishedTable = PublishedTable {
    body: "lexell",
    e: 0.786,
    header: (8, 4),
    values_for: (8, 4),
    samples: 100,
    a: &[
        28.4068,
        -47.0631,
        23.9162,
        -4.70405,
        -0.605464,
        -0.0262285,
        0.0293643,
        0.0217703,
        0.0121887,
        0.00637396,
        0.00325957,
        0.00164622,
        0.000817397,
        0.000392683,
        0.000176143,
        0.0000672271,
        0.0000140575,
        -0.0000103329,
        -0.0000200483,
        -0.0000224845,
        -0.0000215081,
        -0.0000191168,
        -0.0000163167,
        -0.0000135893,
        -0.0000111418,
        -9.0409e-6,
    ],
    b: &[
        -25.693,
        21.1464,
        -4.84203,
        -0.619241,
        -0.0283248,
        0.0289445,
        0.0216686,
        0.0121605,
        0.00636531,
        0.00325672,
        0.00164524,
        0.000817052,
        0.000392564,
        0.000176105,
        0.0000672181,
        0.0000140581,
        -0.0000103297,
        -0.000020045,
        -0.0000224818,
        -0.0000215061,
        -0.0000191154,
        -0.0000163158,
        -0.0000135887,
        -0.0000111414,
        -9.04071e-6,
    ],
    delta_sq: (7.42148e-9, 7.33417e-9),
    sigma_coeff: (1.40679e-6, 1.39849e-6),
    q_dist: (4.94765e-11, 4.88944e-11),
};

pub const ALL: [&PublishedTable; 6] = [&EARTH, &PLUTO, &CERES, &SEKHMET, &WILD2, &LEXELL];
