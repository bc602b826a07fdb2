#pragma once

// Dual quantum group on the functionals w_i = phi(. e_i): convolution product
// (w1 w2)(x) = (w1 (x) w2)(D(x)), coproduct D^(w)(x (x) y) = w(yx) and star
// w*(x) = conj(w(S(x)*)).

#include <string>
#include <vector>

#include "hopf/modular.hpp"

namespace hopf {

struct DualQG {
    QGData dual;
    Functional phi;   // functional defining the basis of the dual
    Matrix values;    // column i = (w_i(e_k))_k; invertible
    Matrix to_basis;  // inverse of values: value vector -> coordinates

    // coordinates of a functional given by its values on the basis of A
    Vec coordinates_of(const Vec& values_on_a) const { return to_basis * values_on_a; }
    // w(x) for w in coordinates and x in A
    Scalar evaluate(const Vec& w, const Vec& x) const;
};

// Builds the dual from phi (a faithful functional, normally the left Haar
// functional) and derives counit and antipode. Throws VerificationError when
// phi is degenerate or the dual fails the Hopf axioms.
DualQG build_dual(const QGData& q, const Functional& phi);

struct BidualityReport {
    HaarSolution dual_haar;
    Matrix canonical;  // A -> bidual, a -> evaluation at S(a), in bidual coordinates
    std::vector<LawCheck> checks;
    bool passed() const;
};

// Dual Haar solved independently, then the bidual and the canonical map.
BidualityReport dual_haar_and_biduality(const QGData& q, const DualQG& d);

// The modular element of the dual equals eps kappa, and <w delta^, x> = <w, kappa(x)>.
std::vector<LawCheck> dual_modular_check(const QGData& q, const ModularData& md, const DualQG& d,
                                         const ModularData& dual_md);

struct ImbeddingReport {
    Functional phi0;             // phi restricted to A0, in A0 coordinates
    bool phi0_nonzero = false;
    bool phi0_invariant = false; // phi0 agrees with the Haar functional of A0 up to a scalar
    Matrix j;                    // dual(A0) -> dual(A) in the bases phi0(. a_i), phi(. e_k)
    std::vector<LawCheck> checks;
    bool passed() const;
};

// j: phi0(. a) -> phi(. a) for a sub-Hopf algebra A0 (a passing check_sub_mha).
ImbeddingReport dual_imbedding(const QGData& big, const ModularData& md, const SubMhaResult& sub);

}  // namespace hopf
