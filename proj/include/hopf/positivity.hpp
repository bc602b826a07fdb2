#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/matrix.hpp"

namespace hopf {

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };
std::string to_string(Definiteness d);

struct PsdCertificate {
    Definiteness verdict = Definiteness::indefinite;
    bool hermitian = false;
    // true when the matrix depends on s and the verdict holds per spec point
    bool at_specializations = false;
    // pivots of the LDL* factorization (s-free route, completed steps only)
    std::vector<Scalar> pivots;
    // For non-definite verdicts: v with v* G v not a positive real (zero for
    // semidefinite, negative or non-real for indefinite).
    std::optional<Vec> witness;
    std::optional<Scalar> witness_value;
    std::optional<SpecPoint> failing_point;
};

// Exact LDL* with symmetric (diagonal) pivoting on a square matrix. s-free
// input is decided exactly; s-dependent input is decided at each spec point.
PsdCertificate hermitian_psd(const Matrix& g, const SpecPoints& points = default_spec_points());

}  // namespace hopf
