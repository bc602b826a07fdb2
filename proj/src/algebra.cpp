#include "hopf/algebra.hpp"

#include <algorithm>

namespace hopf {

LinMap compose(const LinMap& a, const LinMap& b) {
    if (a.source_dim() != b.target_dim()) throw DomainError("composition of maps with mismatched dimensions");
    return LinMap{a.matrix * (a.conjugate_linear ? b.matrix.conj() : b.matrix),
                  a.conjugate_linear != b.conjugate_linear};
}

namespace {

void accumulate(Vec& out, const SparseVec& sv, const Scalar& c) {
    for (const auto& e : sv) out[e.index] += c * e.value;
}

std::string idx(std::size_t i) { return std::to_string(i); }

std::vector<SparseVec> make_table(std::size_t dim, const std::vector<MulEntry>& mul) {
    std::vector<SparseVec> table(dim * dim);
    for (const auto& e : mul) {
        if (e.i >= dim || e.j >= dim || e.k >= dim)
            throw VerificationError("shape", "structure constant index out of range (" + idx(e.i) + "," + idx(e.j) +
                                                 "," + idx(e.k) + ")");
        if (e.value.is_zero()) continue;
        auto& sv = table[e.i * dim + e.j];
        auto at = std::find_if(sv.begin(), sv.end(), [&](const SparseEntry& x) { return x.index == e.k; });
        if (at != sv.end())
            throw VerificationError("shape", "duplicate structure constant (" + idx(e.i) + "," + idx(e.j) + "," +
                                                 idx(e.k) + ")");
        sv.push_back({e.k, e.value});
    }
    for (auto& sv : table)
        std::sort(sv.begin(), sv.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    return table;
}

}  // namespace

Vec FinAlgebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw DomainError("multiply: wrong vector size");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            const auto& sv = table_[i * dim_ + j];
            if (sv.empty()) continue;
            accumulate(out, sv, a[i] * b[j]);
        }
    }
    return out;
}

const Vec& FinAlgebra::unit() const {
    if (!unit_) throw DomainError("algebra has no unit");
    return *unit_;
}

const Matrix& FinAlgebra::star_matrix() const {
    if (!star_) throw DomainError("algebra has no involution");
    return *star_;
}

Vec FinAlgebra::star(const Vec& a) const { return star_matrix() * conj(a); }

Matrix FinAlgebra::left_mult(const Vec& a) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(a, basis(j)));
    return m;
}

Matrix FinAlgebra::right_mult(const Vec& a) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis(j), a));
    return m;
}

std::vector<MulEntry> FinAlgebra::entries() const {
    std::vector<MulEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& e : table_[i * dim_ + j]) out.push_back({i, j, e.index, e.value});
    return out;
}

FinAlgebra FinAlgebra::without_star() const {
    FinAlgebra a = *this;
    a.star_.reset();
    return a;
}

FinAlgebra unchecked_algebra(std::vector<std::string> labels, const std::vector<MulEntry>& mul,
                             std::optional<Vec> unit, std::optional<Matrix> star) {
    FinAlgebra a;
    a.dim_ = labels.size();
    a.labels_ = std::move(labels);
    a.table_ = make_table(a.dim_, mul);
    a.unit_ = std::move(unit);
    a.star_ = std::move(star);
    if (a.unit_ && a.unit_->size() != a.dim_) throw VerificationError("shape", "unit vector has wrong size");
    if (a.star_ && (a.star_->rows() != a.dim_ || a.star_->cols() != a.dim_))
        throw VerificationError("shape", "involution matrix has wrong shape");
    return a;
}

FinAlgebra build_algebra(std::vector<std::string> labels, const std::vector<MulEntry>& mul,
                         std::optional<Vec> unit, std::optional<Matrix> star) {
    if (labels.empty()) throw VerificationError("shape", "algebra must have positive dimension");
    FinAlgebra a = unchecked_algebra(std::move(labels), mul, std::move(unit), std::move(star));
    const std::size_t d = a.dim();

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& ij = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs(d), rhs(d);
                for (const auto& p : ij) accumulate(lhs, a.product(p.index, k), p.value);
                for (const auto& p : a.product(j, k)) accumulate(rhs, a.product(i, p.index), p.value);
                if (lhs != rhs)
                    throw VerificationError("associativity", "(e" + idx(i) + " e" + idx(j) + ") e" + idx(k) +
                                                                 " != e" + idx(i) + " (e" + idx(j) + " e" + idx(k) +
                                                                 ")");
            }
        }

    if (a.has_unit()) {
        for (std::size_t i = 0; i < d; ++i) {
            if (a.multiply(a.unit(), a.basis(i)) != a.basis(i))
                throw VerificationError("unit", "1 e" + idx(i) + " != e" + idx(i));
            if (a.multiply(a.basis(i), a.unit()) != a.basis(i))
                throw VerificationError("unit", "e" + idx(i) + " 1 != e" + idx(i));
        }
    }

    if (a.has_star()) {
        for (std::size_t i = 0; i < d; ++i)
            if (a.star(a.star(a.basis(i))) != a.basis(i))
                throw VerificationError("involution", "(e" + idx(i) + "*)* != e" + idx(i));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vec lhs = a.star(a.multiply(a.basis(i), a.basis(j)));
                Vec rhs = a.multiply(a.star(a.basis(j)), a.star(a.basis(i)));
                if (lhs != rhs)
                    throw VerificationError("involution", "(e" + idx(i) + " e" + idx(j) + ")* != e" + idx(j) +
                                                              "* e" + idx(i) + "*");
            }
    }

    // a with a*e_j = 0 for all j (resp. e_j*a = 0) must vanish
    Matrix left(d * d, d), right(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& e : a.product(i, j)) left(j * d + e.index, i) = e.value;
            for (const auto& e : a.product(j, i)) right(j * d + e.index, i) = e.value;
        }
    if (auto k = kernel(left); !k.empty())
        throw VerificationError("non-degeneracy", "a = " + to_string(k.front()) + " satisfies a b = 0 for all b");
    if (auto k = kernel(right); !k.empty())
        throw VerificationError("non-degeneracy", "b = " + to_string(k.front()) + " satisfies a b = 0 for all a");
    return a;
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) labels.push_back(x + "(x)" + y);
    std::vector<MulEntry> mul;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const auto& pa = a.product(i, j);
            if (pa.empty()) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    for (const auto& x : pa)
                        for (const auto& y : b.product(k, l))
                            mul.push_back({i * db + k, j * db + l, x.index * db + y.index, x.value * y.value});
        }
    std::optional<Vec> unit;
    if (a.has_unit() && b.has_unit()) unit = tensor(a.unit(), b.unit());
    std::optional<Matrix> star;
    if (a.has_star() && b.has_star()) star = kron(a.star_matrix(), b.star_matrix());
    return unchecked_algebra(std::move(labels), mul, std::move(unit), std::move(star));
}

Vec tensor(const Vec& x, const Vec& y) {
    Vec out(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
    }
    return out;
}

Matrix gram_matrix(const FinAlgebra& a, const Functional& omega) {
    const std::size_t d = a.dim();
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Vec si = a.star(a.basis(i));
        for (std::size_t j = 0; j < d; ++j) g(i, j) = omega(a.multiply(si, a.basis(j)));
    }
    return g;
}

PsdCertificate gram_psd(const FinAlgebra& a, const Functional& omega, const SpecPoints& points) {
    if (!a.has_star()) throw DomainError("gram_psd requires an involution");
    return hermitian_psd(gram_matrix(a, omega), points);
}

}  // namespace hopf
