#pragma once

// Finite-dimensional (*-)algebras given by structure constants.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopf/matrix.hpp"
#include "hopf/positivity.hpp"

namespace hopf {

struct SparseEntry {
    std::size_t index;
    Scalar value;
};
using SparseVec = std::vector<SparseEntry>;

// e_i * e_j = sum_k value * e_k
struct MulEntry {
    std::size_t i, j, k;
    Scalar value;
};

// Linear or conjugate-linear map between coordinate spaces.
struct LinMap {
    Matrix matrix;
    bool conjugate_linear = false;

    Vec operator()(const Vec& v) const { return matrix * (conjugate_linear ? conj(v) : v); }
    std::size_t source_dim() const { return matrix.cols(); }
    std::size_t target_dim() const { return matrix.rows(); }
};

// a after b
LinMap compose(const LinMap& a, const LinMap& b);

// Linear functional, stored as its values on the basis.
class Functional {
public:
    Functional() = default;
    explicit Functional(Vec values) : v_(std::move(values)) {}

    Scalar operator()(const Vec& x) const { return dot(v_, x); }
    const Vec& values() const noexcept { return v_; }
    std::size_t dim() const noexcept { return v_.size(); }
    bool is_zero() const { return hopf::is_zero(v_); }
    // f o m
    Functional after(const Matrix& m) const { return Functional(row_times(v_, m)); }
    friend bool operator==(const Functional& a, const Functional& b) { return a.v_ == b.v_; }

private:
    Vec v_;
};

class FinAlgebra {
public:
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec basis(std::size_t k) const { return unit_vec(dim_, k); }
    Vec multiply(const Vec& a, const Vec& b) const;

    bool has_unit() const noexcept { return unit_.has_value(); }
    const Vec& unit() const;
    bool has_star() const noexcept { return star_.has_value(); }
    // conjugate-linear; column j holds the coordinates of e_j*
    const Matrix& star_matrix() const;
    Vec star(const Vec& a) const;

    Matrix left_mult(const Vec& a) const;
    Matrix right_mult(const Vec& a) const;

    // all structure constants as triples, sorted (i, j, k)
    std::vector<MulEntry> entries() const;

    // Same algebra with the involution dropped.
    FinAlgebra without_star() const;

    friend FinAlgebra build_algebra(std::vector<std::string>, const std::vector<MulEntry>&, std::optional<Vec>,
                                    std::optional<Matrix>);
    friend FinAlgebra tensor_algebra(const FinAlgebra&, const FinAlgebra&);
    friend FinAlgebra unchecked_algebra(std::vector<std::string>, const std::vector<MulEntry>&, std::optional<Vec>,
                                        std::optional<Matrix>);

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> table_;
    std::optional<Vec> unit_;
    std::optional<Matrix> star_;
};

// Builds the algebra after checking associativity, unit laws, involution laws
// and non-degeneracy. Throws VerificationError naming the law and a witness.
FinAlgebra build_algebra(std::vector<std::string> labels, const std::vector<MulEntry>& mul,
                         std::optional<Vec> unit = std::nullopt, std::optional<Matrix> star = std::nullopt);

// Skips the law checks; for internal carriers whose laws hold by construction.
FinAlgebra unchecked_algebra(std::vector<std::string> labels, const std::vector<MulEntry>& mul,
                             std::optional<Vec> unit = std::nullopt, std::optional<Matrix> star = std::nullopt);

// A (x) B with index i*dim(B)+j for e_i (x) f_j.
FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);

// Simple tensors in coordinates of A (x) B.
Vec tensor(const Vec& x, const Vec& y);

// Positivity of omega on a *-algebra through the Gram matrix
// G[i][j] = omega(e_i^* e_j).
Matrix gram_matrix(const FinAlgebra& a, const Functional& omega);
PsdCertificate gram_psd(const FinAlgebra& a, const Functional& omega,
                        const SpecPoints& points = default_spec_points());

}  // namespace hopf
