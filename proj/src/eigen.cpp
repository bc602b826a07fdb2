#include "hopf/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hopf {

namespace {

using GRMatrix = std::vector<std::vector<GaussRational>>;
using cplx = std::complex<long double>;

GRMatrix specialize(const Matrix& m, const SpecPoint* p) {
    GRMatrix out(m.rows(), std::vector<GaussRational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = p ? m(i, j).specialize(*p) : m(i, j).constant();
    return out;
}

long double to_ld(const mpq_class& q) {
    // mpq -> double loses nothing relevant for root hypotheses
    return static_cast<long double>(q.get_d());
}

cplx to_cplx(const GaussRational& g) { return {to_ld(g.re()), to_ld(g.im())}; }

cplx eval(const std::vector<cplx>& c, cplx x) {
    cplx acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

// Durand-Kerner on a monic polynomial (coefficients low to high).
std::vector<cplx> numeric_roots(const std::vector<cplx>& c) {
    const std::size_t d = c.size() - 1;
    std::vector<cplx> z(d);
    const cplx seed(0.4L, 0.9L);
    cplx w = 1;
    long double radius = 1;
    for (std::size_t k = 0; k < d; ++k) radius = std::max(radius, 1 + std::abs(c[k]));
    for (std::size_t k = 0; k < d; ++k) {
        w *= seed;
        z[k] = w * (radius / 2);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t k = 0; k < d; ++k) {
            cplx den = 1;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (std::abs(den) == 0) den = cplx(1e-30L, 0);
            const cplx step = eval(c, z[k]) / den;
            z[k] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-24L) break;
    }
    return z;
}

// Continued-fraction convergents of x with denominators below bound.
std::vector<mpq_class> convergents(long double x, long double bound = 1e13L) {
    std::vector<mpq_class> out;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    long double r = x;
    for (int k = 0; k < 40; ++k) {
        const long double a = std::floor(r);
        if (std::fabs(a) > 1e15L) break;
        const mpz_class ai(static_cast<long>(a));
        mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > mpz_class(static_cast<unsigned long>(bound))) break;
        out.emplace_back(p2, q2);
        out.back().canonicalize();
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const long double frac = r - a;
        if (std::fabs(frac) < 1e-18L) break;
        r = 1 / frac;
    }
    return out;
}

std::vector<mpq_class> rational_guesses(long double x) {
    std::vector<mpq_class> conv = convergents(x);
    std::vector<mpq_class> out;
    for (const auto& c : conv)
        if (std::fabs(to_ld(c) - x) <= 1e-9L * std::max<long double>(1, std::fabs(x))) out.push_back(c);
    if (std::fabs(x) < 1e-12L) out.insert(out.begin(), mpq_class(0));
    if (out.size() > 4) out.resize(4);
    return out;
}

Poly squarefree_part(const Poly& p) {
    Poly g = gcd(p, p.derivative());
    if (g.is_constant()) return p;
    return divmod(p, g).first;
}

std::vector<Vec> complement(const std::vector<Vec>& found, std::size_t n) {
    std::vector<Vec> span = found;
    std::size_t r = span_basis(span, n).size();
    std::vector<Vec> residual;
    for (std::size_t k = 0; k < n && r < n; ++k) {
        span.push_back(unit_vec(n, k));
        const std::size_t r2 = span_basis(span, n).size();
        if (r2 > r) {
            residual.push_back(unit_vec(n, k));
            r = r2;
        } else {
            span.pop_back();
        }
    }
    return residual;
}

bool eigen_less(const Eigenspace& a, const Eigenspace& b) {
    auto fa = a.value.monomial_form();
    auto fb = b.value.monomial_form();
    const long ka = fa ? fa->second : 0, kb = fb ? fb->second : 0;
    if (ka != kb) return ka < kb;
    const GaussRational ra = fa ? fa->first : GaussRational(), rb = fb ? fb->first : GaussRational();
    if (ra.re() != rb.re()) return ra.re() > rb.re();
    return ra.im() > rb.im();
}

}  // namespace

Poly characteristic_polynomial(const GRMatrix& a) {
    // Faddeev-LeVerrier: exact over a field of characteristic zero.
    const std::size_t n = a.size();
    std::vector<GaussRational> c(n + 1);
    c[n] = GaussRational(1);
    GRMatrix mk(n, std::vector<GaussRational>(n));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        GRMatrix next(n, std::vector<GaussRational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!mk[l][j].is_zero()) next[i][j] += a[i][l] * mk[l][j];
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        mk = std::move(next);
        GaussRational tr;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (!a[i][l].is_zero() && !mk[l][i].is_zero()) tr += a[i][l] * mk[l][i];
        c[n - k] = -(tr / GaussRational(static_cast<long>(k)));
    }
    return Poly(std::move(c));
}

std::vector<GaussRational> gaussian_rational_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<GaussRational> roots;
    Poly sf = squarefree_part(p);
    sf = sf.scaled(sf.lead().inverse());
    // peel off the root 0 exactly
    if (sf.degree() >= 1 && sf.coeff(0).is_zero()) {
        roots.emplace_back();
        sf = divmod(sf, Poly::monomial(GaussRational(1), 1)).first;
    }
    if (sf.degree() >= 1) {
        std::vector<cplx> c;
        for (const auto& x : sf.coeffs()) c.push_back(to_cplx(x));
        for (const cplx& z : numeric_roots(c)) {
            bool confirmed = false;
            for (const auto& re : rational_guesses(z.real())) {
                for (const auto& im : rational_guesses(z.imag())) {
                    GaussRational g(re, im);
                    if (sf.eval(g).is_zero()) {
                        if (std::find(roots.begin(), roots.end(), g) == roots.end()) roots.push_back(g);
                        confirmed = true;
                        break;
                    }
                }
                if (confirmed) break;
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const GaussRational& a, const GaussRational& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    });
    return roots;
}

std::vector<Eigenspace> eigensplit(const Matrix& m, const SpecPoints& points, long max_exponent) {
    if (!m.is_square()) throw DomainError("eigensplit of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};

    std::vector<Scalar> candidates;
    auto add_candidate = [&](Scalar c) {
        if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(std::move(c));
    };

    if (m.is_constant()) {
        for (const auto& r : gaussian_rational_roots(characteristic_polynomial(specialize(m, nullptr))))
            add_candidate(Scalar(r));
    } else {
        if (points.size() < 2) throw DomainError("eigensplit of an s-dependent map needs at least two spec points");
        std::vector<std::vector<GaussRational>> roots;
        for (const auto& p : points)
            roots.push_back(gaussian_rational_roots(characteristic_polynomial(specialize(m, &p))));
        auto contains = [](const std::vector<GaussRational>& v, const GaussRational& x) {
            return std::find(v.begin(), v.end(), x) != v.end();
        };
        for (const auto& lambda : roots[0]) {
            if (lambda.is_zero()) {
                bool all = true;
                for (std::size_t j = 1; j < roots.size(); ++j) all = all && contains(roots[j], GaussRational());
                if (all) add_candidate(Scalar());
                continue;
            }
            for (long k = -max_exponent; k <= max_exponent; ++k) {
                const mpq_class p0 = points[0].value();
                GaussRational pk(1);
                for (long t = 0; t < std::labs(k); ++t) pk *= GaussRational(p0);
                const GaussRational r = k >= 0 ? lambda / pk : lambda * pk;
                bool all = true;
                for (std::size_t j = 1; j < roots.size() && all; ++j) {
                    GaussRational pj(1);
                    for (long t = 0; t < std::labs(k); ++t) pj *= GaussRational(points[j].value());
                    all = contains(roots[j], k >= 0 ? r * pj : r / pj);
                }
                if (all) add_candidate(Scalar(r) * Scalar::s().pow(k));
            }
        }
    }

    std::vector<Eigenspace> spaces;
    for (const auto& lambda : candidates) {
        Matrix shifted = m;
        for (std::size_t k = 0; k < n; ++k) shifted(k, k) -= lambda;
        auto ker = kernel(shifted);
        if (!ker.empty()) spaces.push_back({lambda, std::move(ker)});
    }
    std::sort(spaces.begin(), spaces.end(), eigen_less);

    std::vector<Vec> all;
    for (const auto& e : spaces) all.insert(all.end(), e.basis.begin(), e.basis.end());
    if (all.size() != n) throw NotDiagonalizable(std::move(spaces), complement(all, n));
    return spaces;
}

std::vector<Eigenspace> eigensplit_on(const Matrix& m, const std::vector<Vec>& subspace, const SpecPoints& points,
                                      long max_exponent) {
    const std::size_t d = subspace.size();
    Matrix restricted(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto c = coordinates(subspace, m * subspace[j]);
        if (!c) throw DomainError("subspace is not invariant under the map");
        restricted.set_column(j, *c);
    }
    auto lift = [&](const Vec& x) {
        Vec v = zero_vec(m.rows());
        for (std::size_t k = 0; k < d; ++k)
            if (!x[k].is_zero()) v = v + x[k] * subspace[k];
        return v;
    };
    auto lift_all = [&](std::vector<Eigenspace> spaces) {
        for (auto& e : spaces)
            for (auto& b : e.basis) b = lift(b);
        return spaces;
    };
    try {
        return lift_all(eigensplit(restricted, points, max_exponent));
    } catch (const NotDiagonalizable& nd) {
        std::vector<Vec> residual;
        for (const auto& r : nd.residual()) residual.push_back(lift(r));
        throw NotDiagonalizable(lift_all(nd.found()), std::move(residual));
    }
}

}  // namespace hopf
