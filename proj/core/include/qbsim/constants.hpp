#pragma once

// Central table of numerical tolerances and pinned conventions.
// Every tolerance used by the library is defined here and nowhere else.

namespace qbsim {

// How computational-basis labels map onto sigma_z eigenstates when a formula
// names a product state such as |11>. The matrices themselves always use
// sigma_z = diag(+1, -1) with basis order (|00>, |01>, |10>, |11>).
enum class BasisLabeling {
  ZeroIsUp,  // |0> has sigma_z = +1, so |11> is basis index 3
  OneIsUp,   // |1> has sigma_z = +1, so |11> is basis index 0
};

namespace tol {

// linalg
inline constexpr double kHermitian = 1e-10;        // max |H - H^dagger|
inline constexpr double kJacobiOffDiagonal = 1e-12;  // off-diagonal Frobenius norm, relative to max(1, |H|_F)
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kEigenTie = 1e-12;         // eigenvalues closer than this (times 1+|H|_F) are ties
inline constexpr double kPhaseNormalize = 1e-12;   // smallest component magnitude treated as nonzero

// density matrices
inline constexpr double kDensityHermitian = 1e-10;
inline constexpr double kDensityTrace = 1e-10;
inline constexpr double kDensityMinEigenvalue = -1e-10;

// passivity
inline constexpr double kPassiveOffDiagonal = 1e-9;
inline constexpr double kPassivePopulation = 1e-10;

// spin model
inline constexpr double kClassify = 1e-12;
inline constexpr int kMaxChainSites = 12;

// closed-form cross-checks; deviations beyond these go to the deviation report
inline constexpr double kGibbsClosedForm = 1e-8;
inline constexpr double kErgotropyClosedForm = 1e-6;
inline constexpr double kCapacityClosedForm = 1e-8;

// metrics
inline constexpr double kEfficiencyExcess = 1e-9;
inline constexpr double kEfficiencyMinErgotropy = 1e-12;  // |xi| below this is treated as zero

// time maximization and threshold detection
inline constexpr int kTimeScanPoints = 512;
inline constexpr double kGoldenSection = 1e-6;
inline constexpr int kGoldenMaxIterations = 200;
inline constexpr double kThresholdFraction = 0.01;
inline constexpr double kThresholdBisection = 1e-4;
inline constexpr int kThresholdMinPoints = 8;

}  // namespace tol

// Labeling under which the closed-form capacity matches Tr[H rho_up] - Tr[H rho_down]
// with rho_up = |11><11|. Established by the capacity oracle test, which runs
// both labelings; only OneIsUp reproduces the closed form.
inline constexpr BasisLabeling kPinnedLabeling = BasisLabeling::OneIsUp;

}  // namespace qbsim
