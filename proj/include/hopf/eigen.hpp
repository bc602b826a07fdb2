#pragma once

#include <vector>

#include "hopf/matrix.hpp"

namespace hopf {

struct Eigenspace {
    Scalar value;
    std::vector<Vec> basis;
};

class NotDiagonalizable : public Error {
public:
    NotDiagonalizable(std::vector<Eigenspace> found, std::vector<Vec> residual)
        : Error("map is not diagonalizable over Q(i)(s): confirmed eigenspaces span " +
                std::to_string(span_dim(found)) + " dimensions, residual " +
                std::to_string(residual.size())),
          found_(std::move(found)),
          residual_(std::move(residual)) {}

    const std::vector<Eigenspace>& found() const noexcept { return found_; }
    const std::vector<Vec>& residual() const noexcept { return residual_; }

private:
    static std::size_t span_dim(const std::vector<Eigenspace>& f) {
        std::size_t n = 0;
        for (const auto& e : f) n += e.basis.size();
        return n;
    }
    std::vector<Eigenspace> found_;
    std::vector<Vec> residual_;
};

// Characteristic polynomial det(x I - m) of an s-free matrix, as a Poly in x.
Poly characteristic_polynomial(const std::vector<std::vector<GaussRational>>& m);

// Roots of p lying in Q(i), without multiplicity, sorted.
std::vector<GaussRational> gaussian_rational_roots(const Poly& p);

// Eigen-decomposition of a square matrix over Q(i)(s). Eigenvalues are searched
// in the form r*s^k (|k| <= max_exponent): r and k are hypothesized from exact
// point evaluations, then each candidate is confirmed by an exact kernel
// computation over the function field. Throws NotDiagonalizable when the
// confirmed eigenspaces do not span the whole space.
std::vector<Eigenspace> eigensplit(const Matrix& m, const SpecPoints& points = default_spec_points(),
                                   long max_exponent = 24);

// Same, restricted to an invariant subspace given by a basis; eigenvectors are
// returned in ambient coordinates.
std::vector<Eigenspace> eigensplit_on(const Matrix& m, const std::vector<Vec>& subspace,
                                      const SpecPoints& points = default_spec_points(),
                                      long max_exponent = 24);

}  // namespace hopf
