#pragma once

// Dense matrices over Scalar and exact row reduction.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
Vec conj(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vec& d);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);

    Matrix transpose() const;
    Matrix conj() const;
    bool is_constant() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// row vector times matrix
Vec row_times(const Vec& row, const Matrix& m);
// Kronecker product
Matrix kron(const Matrix& a, const Matrix& b);
Matrix pow(const Matrix& m, long n);

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of the right null space {x : m x = 0}.
std::vector<Vec> kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Unique solution of m x = b for square invertible m.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// Basis of span(vectors), reduced; empty if all zero.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);
// Coordinates of v in the given basis (columns independent), if v lies in the span.
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v);

struct LinearEquation {
    Vec coeffs;
    Scalar rhs;
};

struct AffineSolution {
    bool consistent = false;
    Vec particular;
    std::vector<Vec> kernel;
    std::size_t dimension() const { return kernel.size(); }
    bool is_point() const { return consistent && kernel.empty(); }
};

// Incrementally maintained reduced row echelon form of a linear system.
// Adding equations one at a time keeps memory at O(rank * n) even when
// the constraint count is large.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

    void add(const Vec& coeffs, const Scalar& rhs);
    void add(const LinearEquation& eq) { add(eq.coeffs, eq.rhs); }

    std::size_t unknowns() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool consistent() const noexcept { return consistent_; }
    AffineSolution solution() const;

private:
    struct Row {
        std::size_t pivot;
        Vec coeffs;
        Scalar rhs;
    };
    std::size_t n_;
    std::vector<Row> rows_;  // sorted by pivot
    bool consistent_ = true;
};

AffineSolution solve_affine(std::span<const LinearEquation> equations, std::size_t unknowns);

}  // namespace hopf
