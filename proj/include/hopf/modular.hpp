#pragma once

// Haar functionals and modular data of a finite-dimensional Hopf algebra:
// phi, psi = phi S, the modular automorphisms sigma and sigma', the modular
// element delta with its square root, the scaling constant mu, and the
// positivity and eigenvector statements that hold in the *-positive case.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

struct HaarSolution {
    Functional phi;
    std::size_t dimension = 0;  // of the solution space of the invariance system
    std::string normalization;  // "phi(1) = 1" or "first nonzero value = 1"
};

// Left invariance (id (x) phi)(D(a)(b (x) 1)) = phi(a) b over all basis pairs.
// Throws VerificationError("left-haar") when the solution space is not a line.
HaarSolution solve_left_haar(const QGData& q);

// psi = phi S, verified right invariant; throws VerificationError("right-haar").
Functional right_haar(const QGData& q, const Functional& phi);

// sigma with w(ab) = w(b sigma(a)); throws VerificationError("faithful") when
// the form w(ab) is degenerate and ("modular-automorphism") when sigma is not a
// unital algebra automorphism.
Matrix modular_automorphism(const QGData& q, const Functional& w);

struct ModularElement {
    Vec delta;
    std::optional<Vec> delta_half;
    std::string obstruction;  // why delta_half is absent
};

// delta from (phi (x) id)(D(a)) = phi(a) delta; delta_half from the positive
// square roots of the eigenvalues of left multiplication by delta.
// Throws VerificationError("modular-element") if the defining equations fail.
ModularElement modular_element(const QGData& q, const Functional& phi, const SpecPoints& points);

// mu with phi(S^2(e_i)) = mu phi(e_i) for all i; throws VerificationError("scaling-constant").
Scalar scaling_constant(const QGData& q, const Functional& phi);

struct ModularData {
    Functional phi, psi;
    std::size_t haar_dimension = 0;
    std::string normalization;
    Matrix sigma, sigma_prime, s2, kappa, rho;
    Vec delta;
    std::optional<Vec> delta_half;
    std::string delta_half_obstruction;
    Scalar mu;
};

ModularData compute_modular_data(const QGData& q, const SpecPoints& points = default_spec_points());

// Identities relating the modular data: invariance, KMS-type relations for
// sigma and sigma', both delta equations, phi S^2 = mu phi, delta* = delta,
// delta_half, pairwise commutation of sigma, sigma', S^2, L_delta, R_delta and
// D sigma = (S^2 (x) sigma) D.
std::vector<LawCheck> modular_identities(const QGData& q, const ModularData& md);

struct OrbitReport {
    std::vector<Vec> span;  // kappa-invariant subspace containing a
    std::size_t steps = 0;  // kappa / kappa^-1 iterations until the span stabilized
    bool nonvanishing = true;
    int window = 4;
    std::string witness;    // basis b and n with b* sigma'^n S^2n (b) = 0
};

// Span of kappa^n(a), and b* (sigma'^n S^2n)(b) != 0 for basis b and even |n| <= window.
OrbitReport orbit_analysis(const QGData& q, const ModularData& md, const Vec& a, int window = 4,
                           bool check_nonvanishing = true);

struct EigenRow {
    Vec vector;
    // sigma, sigma', S^2, left and right multiplication by delta; absent when
    // the vector is not an eigenvector of that map
    std::array<std::optional<Scalar>, 5> values;
};

struct EigenTable {
    static constexpr std::array<const char*, 5> maps{"sigma", "sigma'", "S^2", "L_delta", "R_delta"};
    std::vector<EigenRow> rows;
    bool simultaneous = true;  // every row is an eigenvector of all five maps
    bool positive = true;      // every eigenvalue self-adjoint and positive at all spec points
    std::vector<std::string> notes;
};

// Refines a basis of common eigenvectors map by map. Maps that do not leave the
// current pieces invariant are skipped and noted.
EigenTable simultaneous_eigenbasis(const QGData& q, const ModularData& md,
                                   const SpecPoints& points = default_spec_points());

struct PsiPositivity {
    bool identity = true;  // psi(e_i* e_j) = phi(e_i* e_j delta)
    std::string witness;
    PsdCertificate gram;
};

PsiPositivity psi_positivity(const QGData& q, const ModularData& md,
                             const SpecPoints& points = default_spec_points());

// brute-force mu: phi(S^2 e_i) / phi(e_i) on every basis element with phi(e_i) != 0
std::vector<Scalar> mu_by_evaluation(const QGData& q, const Functional& phi);

}  // namespace hopf
