#include "hopf/positivity.hpp"

namespace hopf {

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive-definite";
        case Definiteness::positive_semidefinite: return "positive-semidefinite";
        case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

namespace {

using GRMatrix = std::vector<std::vector<GaussRational>>;

struct ConstCertificate {
    Definiteness verdict;
    std::vector<GaussRational> pivots;
    std::optional<std::vector<GaussRational>> witness;
};

GaussRational quad_form(const GRMatrix& g, const std::vector<GaussRational>& v) {
    GaussRational acc;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero() && !g[i][j].is_zero()) acc += v[i].conj() * g[i][j] * v[j];
    }
    return acc;
}

// Non-real or non-positive witness for a non-Hermitian matrix.
std::vector<GaussRational> hermitian_failure_witness(const GRMatrix& g) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!g[i][i].is_real()) {
            std::vector<GaussRational> v(n);
            v[i] = GaussRational(1);
            return v;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g[i][j] == g[j][i].conj()) continue;
            std::vector<GaussRational> v(n);
            v[i] = GaussRational(1);
            v[j] = GaussRational(1);
            if (!quad_form(g, v).is_real()) return v;
            v[j] = GaussRational::i();
            return v;
        }
    return std::vector<GaussRational>(n);
}

bool is_hermitian(const GRMatrix& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i; j < g.size(); ++j)
            if (!(g[i][j] == g[j][i].conj())) return false;
    return true;
}

ConstCertificate ldl_constant(GRMatrix a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    GRMatrix l(n, std::vector<GaussRational>(n));
    for (std::size_t k = 0; k < n; ++k) l[k][k] = GaussRational(1);

    ConstCertificate out{Definiteness::positive_definite, {}, std::nullopt};

    // v = P^T L^{-*} u for u supported on the trailing block
    auto lift = [&](const std::vector<GaussRational>& u) {
        std::vector<GaussRational> x = u;
        for (std::size_t k = n; k-- > 0;)
            for (std::size_t i = k + 1; i < n; ++i)
                if (!l[i][k].is_zero()) x[k] -= l[i][k].conj() * x[i];
        std::vector<GaussRational> v(n);
        for (std::size_t k = 0; k < n; ++k) v[perm[k]] = x[k];
        return v;
    };
    auto swap_sym = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        std::swap(a[p], a[q]);
        for (auto& row : a) std::swap(row[p], row[q]);
        std::swap(perm[p], perm[q]);
        for (std::size_t j = 0; j < p; ++j) std::swap(l[p][j], l[q][j]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::optional<std::size_t> best;
        for (std::size_t i = k; i < n; ++i) {
            const mpq_class& d = a[i][i].re();
            if (sgn(d) < 0) {
                std::vector<GaussRational> u(n);
                u[i] = GaussRational(1);
                out.verdict = Definiteness::indefinite;
                out.witness = lift(u);
                return out;
            }
            if (sgn(d) > 0 && (!best || d > a[*best][*best].re())) best = i;
        }
        if (!best) {
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (i == j || a[i][j].is_zero()) continue;
                    std::vector<GaussRational> u(n);
                    u[i] = GaussRational(1);
                    u[j] = -a[i][j].conj();
                    out.verdict = Definiteness::indefinite;
                    out.witness = lift(u);
                    return out;
                }
            std::vector<GaussRational> u(n);
            u[k] = GaussRational(1);
            out.verdict = Definiteness::positive_semidefinite;
            out.witness = lift(u);
            return out;
        }
        swap_sym(k, *best);
        const GaussRational d = a[k][k];
        out.pivots.push_back(d);
        const GaussRational inv = d.inverse();
        for (std::size_t i = k + 1; i < n; ++i) l[i][k] = a[i][k] * inv;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a[k][j].is_zero()) a[i][j] -= a[i][k] * a[k][j] * inv;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a[i][k] = GaussRational();
            a[k][i] = GaussRational();
        }
    }
    return out;
}

int rank_of(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return 0;
        case Definiteness::positive_semidefinite: return 1;
        case Definiteness::indefinite: return 2;
    }
    return 2;
}

Vec to_vec(const std::vector<GaussRational>& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

}  // namespace

PsdCertificate hermitian_psd(const Matrix& g, const SpecPoints& points) {
    if (!g.is_square()) throw DomainError("Gram matrix must be square");
    const std::size_t n = g.rows();
    PsdCertificate cert;

    bool symbolic_hermitian = true;
    for (std::size_t i = 0; i < n && symbolic_hermitian; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!(g(i, j) == g(j, i).conj())) {
                symbolic_hermitian = false;
                break;
            }
    cert.hermitian = symbolic_hermitian;

    auto run_point = [&](const SpecPoint* p) {
        GRMatrix m(n, std::vector<GaussRational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = p ? g(i, j).specialize(*p) : g(i, j).constant();
        if (!is_hermitian(m)) {
            auto w = hermitian_failure_witness(m);
            ConstCertificate c{Definiteness::indefinite, {}, w};
            return std::make_pair(c, quad_form(m, w));
        }
        ConstCertificate c = ldl_constant(m);
        GaussRational value = c.witness ? quad_form(m, *c.witness) : GaussRational();
        return std::make_pair(c, value);
    };

    if (g.is_constant()) {
        auto [c, value] = run_point(nullptr);
        cert.verdict = c.verdict;
        for (const auto& p : c.pivots) cert.pivots.emplace_back(p);
        if (c.witness) {
            cert.witness = to_vec(*c.witness);
            cert.witness_value = Scalar(value);
        }
        return cert;
    }

    cert.at_specializations = true;
    cert.verdict = Definiteness::positive_definite;
    for (const auto& p : points) {
        auto [c, value] = run_point(&p);
        if (rank_of(c.verdict) > rank_of(cert.verdict)) {
            cert.verdict = c.verdict;
            cert.witness = c.witness ? std::optional<Vec>(to_vec(*c.witness)) : std::nullopt;
            cert.witness_value = Scalar(value);
            cert.failing_point = p;
        }
    }
    return cert;
}

}  // namespace hopf
