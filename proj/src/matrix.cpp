#include "hopf/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = Scalar(1);
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("vector size mismatch");
    Vec r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("vector size mismatch");
    Vec r = a;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
    return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

Vec conj(const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.conj());
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DomainError("vector size mismatch");
    Scalar acc;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
    return acc;
}

std::string to_string(const Vec& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += v[k].to_string();
    }
    return out + "]";
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw DomainError("column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::conj() const {
    Matrix c = *this;
    for (auto& x : c.a_) x = x.conj();
    return c;
}

bool Matrix::is_constant() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_constant(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
    Vec r(a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows_; ++i)
            if (!a(i, k).is_zero()) r[i] += a(i, k) * v[k];
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x *= c;
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

Vec row_times(const Vec& row, const Matrix& m) {
    if (row.size() != m.rows()) throw DomainError("row-vector shape mismatch");
    Vec r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (row[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r[j] += row[i] * m(i, j);
    }
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

Matrix pow(const Matrix& m, long n) {
    if (!m.is_square()) throw DomainError("power of non-square matrix");
    if (n < 0) {
        auto inv = inverse(m);
        if (!inv) throw DomainError("negative power of singular matrix");
        return pow(*inv, -n);
    }
    Matrix result = Matrix::identity(m.rows()), base = m;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

namespace {

// Prefer s-free pivots: they keep rational-function entries from growing.
std::optional<std::size_t> choose_pivot(const Matrix& m, std::size_t col, std::size_t from) {
    std::optional<std::size_t> any;
    for (std::size_t r = from; r < m.rows(); ++r) {
        if (m(r, col).is_zero()) continue;
        if (m(r, col).is_constant()) return r;
        if (!any) any = r;
    }
    return any;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Echelon row_reduce(Matrix m) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        auto p = choose_pivot(m, c, r);
        if (!p) continue;
        swap_rows(m, r, *p);
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vec> kernel(const Matrix& m) {
    const Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    const Echelon e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    LinearSystem sys(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) sys.add(m.row(i), b[i]);
    AffineSolution s = sys.solution();
    if (!s.is_point()) return std::nullopt;
    return s.particular;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    Matrix m(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
    const Echelon e = row_reduce(std::move(m));
    std::vector<Vec> out;
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.reduced.row(r));
    return out;
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v) {
    LinearSystem sys(basis.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec row(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) row[k] = basis[k][i];
        sys.add(row, v[i]);
    }
    AffineSolution s = sys.solution();
    if (!s.consistent) return std::nullopt;
    if (!s.is_point()) throw DomainError("coordinates requested in a dependent family");
    return s.particular;
}

void LinearSystem::add(const Vec& coeffs, const Scalar& rhs) {
    if (coeffs.size() != n_) throw DomainError("equation has wrong number of unknowns");
    if (!consistent_) return;
    Vec c = coeffs;
    Scalar r = rhs;
    for (const auto& row : rows_) {
        if (c[row.pivot].is_zero()) continue;
        const Scalar f = c[row.pivot];
        for (std::size_t j = 0; j < n_; ++j)
            if (!row.coeffs[j].is_zero()) c[j] -= f * row.coeffs[j];
        if (!row.rhs.is_zero()) r -= f * row.rhs;
    }
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < n_; ++j)
        if (!c[j].is_zero()) {
            if (!pivot || (c[j].is_constant() && !c[*pivot].is_constant())) pivot = j;
            if (c[*pivot].is_constant()) break;
        }
    if (!pivot) {
        if (!r.is_zero()) consistent_ = false;
        return;
    }
    const Scalar inv = c[*pivot].inverse();
    for (auto& x : c)
        if (!x.is_zero()) x *= inv;
    r *= inv;
    for (auto& row : rows_) {
        if (row.coeffs[*pivot].is_zero()) continue;
        const Scalar f = row.coeffs[*pivot];
        for (std::size_t j = 0; j < n_; ++j)
            if (!c[j].is_zero()) row.coeffs[j] -= f * c[j];
        row.rhs -= f * r;
    }
    Row nr{*pivot, std::move(c), std::move(r)};
    auto at = std::lower_bound(rows_.begin(), rows_.end(), nr.pivot,
                               [](const Row& a, std::size_t p) { return a.pivot < p; });
    rows_.insert(at, std::move(nr));
}

AffineSolution LinearSystem::solution() const {
    AffineSolution s;
    s.consistent = consistent_;
    if (!consistent_) return s;
    std::vector<bool> is_pivot(n_, false);
    for (const auto& row : rows_) is_pivot[row.pivot] = true;
    s.particular = Vec(n_);
    for (const auto& row : rows_) s.particular[row.pivot] = row.rhs;
    for (std::size_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n_);
        v[f] = Scalar(1);
        for (const auto& row : rows_) v[row.pivot] = -row.coeffs[f];
        s.kernel.push_back(std::move(v));
    }
    return s;
}

AffineSolution solve_affine(std::span<const LinearEquation> equations, std::size_t unknowns) {
    LinearSystem sys(unknowns);
    for (const auto& eq : equations) sys.add(eq);
    return sys.solution();
}

}  // namespace hopf
