#pragma once

#include <complex>
#include <cstdint>

namespace sicsim {

using cplx = std::complex<double>;

// Hilbert space layout: 9 defect levels x 2 early-mode x 2 late-mode.
inline constexpr int kDefectDim = 9;
inline constexpr int kModeDim = 2;
inline constexpr int kTotalDim = kDefectDim * kModeDim * kModeDim;  // 36

// All numerical tolerances used by state validation, the evolution engines
// and the detection chain live here so tests and production agree.
namespace tol {
inline constexpr double kPureNorm = 1e-9;        // |norm - 1| for normalized pure states
inline constexpr double kHermitian = 1e-10;      // max |rho - rho^dag| element
inline constexpr double kTrace = 1e-9;           // |Tr rho - 1| for normalized mixed states
inline constexpr double kEigenFloor = -1e-9;     // smallest admissible eigenvalue
inline constexpr double kStepTrace = 1e-8;       // trace drift per evolution call
inline constexpr double kStepPositivity = -1e-8; // eigenvalue floor per evolution call
inline constexpr double kPartialTrace = 1e-12;
inline constexpr double kKron = 1e-12;
inline constexpr double kPovmCompleteness = 1e-12;
inline constexpr double kBranchingSum = 1e-12;
inline constexpr double kStrictTwoPhoton = 1e-9; // both-modes-excited weight, ideal protocols
inline constexpr double kWindowSlack = 0.15;     // scalar vs emergent temporal-window check
}  // namespace tol

}  // namespace sicsim
