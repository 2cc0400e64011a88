#pragma once

namespace qce {

// Numerical tolerances shared across the library. The defaults are what every
// entry point assumes unless a caller passes its own copy.
struct Tolerances {
    double psd = 1e-10;      // eigenvalues above -psd are clamped to zero
    double herm = 1e-10;     // max |rho - rho^dagger| entry
    double spec = 1e-9;      // trace / probability-sum deviation
    double povm = 1e-9;      // POVM completeness and ket normalization
    double prob = 1e-12;     // outcomes below this probability are skipped
    double entropy = 1e-9;   // slack for entropy positivity / gain bounds
    double metric = 1e-8;    // smallest N_B eigenvalue before product shortcut
    double degenerate = 1e-9;    // eigenvalue gap treated as degenerate
    double concavity = 1e-12;    // slack in sampled strict-concavity checks
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace qce
