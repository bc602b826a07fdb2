#include "hopf/modular.hpp"

#include <gmpxx.h>

#include "hopf/eigen.hpp"
#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

const std::string& label(const QGData& q, std::size_t i) { return q.algebra().labels()[i]; }

// first nonzero coordinate, normalized to 1
Vec normalize_leading(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return x.inverse() * v;
    return v;
}

// exact positive square root of r s^k with r a positive rational square and k even
std::optional<Scalar> exact_sqrt(const Scalar& x) {
    auto m = x.monomial_form();
    if (!m) return std::nullopt;
    const auto& [r, k] = *m;
    if (r.im() != 0 || r.re() <= 0 || k % 2 != 0) return std::nullopt;
    mpz_class num = r.re().get_num(), den = r.re().get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Scalar(mpq_class(rn, rd)) * Scalar::s().pow(k / 2);
}

std::optional<Scalar> eigenvalue_of(const Matrix& m, const Vec& v) {
    Vec mv = m * v;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) {
            Scalar lambda = mv[k] / v[k];
            if (mv == lambda * v) return lambda;
            return std::nullopt;
        }
    return std::nullopt;
}

bool invariant(const Matrix& m, const std::vector<Vec>& piece) {
    for (const auto& v : piece)
        if (!coordinates(piece, m * v)) return false;
    return true;
}

LawCheck law(std::string name) { return LawCheck{std::move(name), true, {}}; }

void fail(LawCheck& c, const std::string& witness) {
    if (c.passed) c.witness = witness;
    c.passed = false;
}

}  // namespace

HaarSolution solve_left_haar(const QGData& q) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    const Matrix& D = q.coproduct_matrix();
    LinearSystem sys(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            // coordinate k of (id (x) phi)(D(e_a)(e_b (x) 1)) - phi(e_a) e_b, linear in phi
            std::vector<Vec> rows(d, zero_vec(d));
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t r = 0; r < d; ++r) {
                    const Scalar& c = D(p * d + r, a);
                    if (c.is_zero()) continue;
                    for (const auto& [k, v] : A.product(p, b)) rows[k][r] += c * v;
                }
            rows[b][a] -= Scalar(1);
            for (const auto& row : rows)
                if (!is_zero(row)) sys.add(row, Scalar());
        }
    AffineSolution sol = sys.solution();
    HaarSolution out;
    out.dimension = sol.dimension();
    if (out.dimension != 1)
        throw VerificationError("left-haar", "invariant functionals form a space of dimension " + idx(out.dimension));
    Vec phi = sol.kernel[0];
    Scalar at_one = dot(phi, q.unit());
    if (!at_one.is_zero()) {
        phi = at_one.inverse() * phi;
        out.normalization = "phi(1) = 1";
    } else {
        phi = normalize_leading(phi);
        out.normalization = "first nonzero value = 1";
    }
    out.phi = Functional(phi);
    return out;
}

Functional right_haar(const QGData& q, const Functional& phi) {
    Functional psi = phi.after(q.antipode_matrix());
    const std::size_t d = q.dim();
    const Vec one = q.unit();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Vec eb = unit_vec(d, b);
            Vec lhs = q.left_slice(psi, q.tmul(q.coproduct(unit_vec(d, a)), tensor(one, eb)));
            if (lhs != psi.values()[a] * eb)
                throw VerificationError("right-haar", "a=" + label(q, a) + " b=" + label(q, b));
        }
    return psi;
}

Matrix modular_automorphism(const QGData& q, const Functional& w) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, v] : A.product(i, j)) g(i, j) += v * w.values()[k];
    auto ginv = inverse(g);
    if (!ginv) throw VerificationError("faithful", "the form w(ab) has rank " + idx(rank(g)) + " of " + idx(d));
    // w(e_i e_j) = w(e_j sigma(e_i)) reads G^T = G sigma
    Matrix sigma = *ginv * g.transpose();
    if (sigma * q.unit() != q.unit()) throw VerificationError("modular-automorphism", "sigma(1) != 1");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs = sigma * A.multiply(A.basis(i), A.basis(j));
            Vec rhs = A.multiply(sigma.column(i), sigma.column(j));
            if (lhs != rhs)
                throw VerificationError("modular-automorphism",
                                        "sigma(" + label(q, i) + " " + label(q, j) + ") != sigma(" + label(q, i) +
                                            ") sigma(" + label(q, j) + ")");
        }
    return sigma;
}

ModularElement modular_element(const QGData& q, const Functional& phi, const SpecPoints& points) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    const Vec one = q.unit();
    ModularElement out;
    std::size_t a0 = d;
    for (std::size_t a = 0; a < d && a0 == d; ++a)
        if (!phi.values()[a].is_zero()) a0 = a;
    if (a0 == d) throw VerificationError("modular-element", "phi vanishes on the basis");
    out.delta = phi.values()[a0].inverse() * q.left_slice(phi, q.coproduct(unit_vec(d, a0)));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Vec da = q.coproduct(unit_vec(d, a)), eb = unit_vec(d, b);
            const Scalar& pa = phi.values()[a];
            if (q.left_slice(phi, q.tmul(da, tensor(one, eb))) != pa * A.multiply(out.delta, eb))
                throw VerificationError("modular-element", "(phi (x) id)(D(a)(1 (x) b)) != phi(a) delta b at a=" +
                                                               label(q, a) + " b=" + label(q, b));
            if (q.left_slice(phi, q.tmul(tensor(one, eb), da)) != pa * A.multiply(eb, out.delta))
                throw VerificationError("modular-element", "(phi (x) id)((1 (x) b)D(a)) != phi(a) b delta at a=" +
                                                               label(q, a) + " b=" + label(q, b));
        }

    std::vector<Eigenspace> spaces;
    try {
        spaces = eigensplit(A.left_mult(out.delta), points);
    } catch (const NotDiagonalizable& e) {
        out.obstruction = std::string("left multiplication by delta: ") + e.what();
        return out;
    }
    std::vector<Vec> basis;
    std::vector<Scalar> roots;
    for (const auto& sp : spaces) {
        if (!positive_at(sp.value, points)) {
            out.obstruction = "left multiplication by delta has eigenvalue " + sp.value.to_string() + ", not positive";
            return out;
        }
        auto r = exact_sqrt(sp.value);
        if (!r) {
            out.obstruction = "eigenvalue " + sp.value.to_string() + " of delta has no exact square root";
            return out;
        }
        for (const auto& v : sp.basis) {
            basis.push_back(v);
            roots.push_back(*r);
        }
    }
    auto c = coordinates(basis, one);
    if (!c) throw InternalError("eigenvectors of L_delta do not span the unit");
    Vec half = zero_vec(d);
    for (std::size_t k = 0; k < basis.size(); ++k) half = half + (roots[k] * (*c)[k]) * basis[k];
    if (A.multiply(half, half) != out.delta) throw InternalError("delta_half squared is not delta");
    out.delta_half = half;
    return out;
}

Scalar scaling_constant(const QGData& q, const Functional& phi) {
    Matrix s2 = q.antipode_matrix() * q.antipode_matrix();
    Vec ps2 = row_times(phi.values(), s2);
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const Scalar& v = phi.values()[i];
        if (v.is_zero()) continue;
        Scalar mu = ps2[i] / v;
        if (ps2 != mu * phi.values()) throw VerificationError("scaling-constant", "phi S^2 is not a multiple of phi");
        return mu;
    }
    throw VerificationError("scaling-constant", "phi is zero");
}

std::vector<Scalar> mu_by_evaluation(const QGData& q, const Functional& phi) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const Scalar& v = phi.values()[i];
        if (v.is_zero()) continue;
        Vec s2e = q.antipode(q.antipode(unit_vec(q.dim(), i)));
        out.push_back(phi(s2e) / v);
    }
    return out;
}

ModularData compute_modular_data(const QGData& q, const SpecPoints& points) {
    ModularData md;
    HaarSolution h = solve_left_haar(q);
    md.phi = h.phi;
    md.haar_dimension = h.dimension;
    md.normalization = h.normalization;
    md.psi = right_haar(q, md.phi);
    md.sigma = modular_automorphism(q, md.phi);
    md.sigma_prime = modular_automorphism(q, md.psi);
    md.s2 = q.antipode_matrix() * q.antipode_matrix();
    auto sinv = inverse(md.sigma);
    if (!sinv) throw InternalError("modular automorphism is not invertible");
    md.kappa = *sinv * md.s2;
    md.rho = md.sigma_prime * md.s2;
    ModularElement me = modular_element(q, md.phi, points);
    md.delta = me.delta;
    md.delta_half = me.delta_half;
    md.delta_half_obstruction = me.obstruction;
    md.mu = scaling_constant(q, md.phi);
    return md;
}

std::vector<LawCheck> modular_identities(const QGData& q, const ModularData& md) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    const Vec one = q.unit();
    std::vector<LawCheck> out;

    LawCheck left = law("left-invariance"), right = law("right-invariance");
    LawCheck kms = law("phi-modular-automorphism"), kms2 = law("psi-modular-automorphism");
    LawCheck dl = law("modular-element-left"), dr = law("modular-element-right");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Vec ea = unit_vec(d, a), eb = unit_vec(d, b), da = q.coproduct(ea);
            std::string at = "a=" + label(q, a) + " b=" + label(q, b);
            if (q.right_slice(q.tmul(da, tensor(eb, one)), md.phi) != md.phi.values()[a] * eb) fail(left, at);
            if (q.left_slice(md.psi, q.tmul(da, tensor(one, eb))) != md.psi.values()[a] * eb) fail(right, at);
            Vec ab = A.multiply(ea, eb);
            if (md.phi(ab) != md.phi(A.multiply(eb, md.sigma * ea))) fail(kms, at);
            if (md.psi(ab) != md.psi(A.multiply(eb, md.sigma_prime * ea))) fail(kms2, at);
            if (q.left_slice(md.phi, q.tmul(da, tensor(one, eb))) != md.phi.values()[a] * A.multiply(md.delta, eb))
                fail(dl, at);
            if (q.left_slice(md.phi, q.tmul(tensor(one, eb), da)) != md.phi.values()[a] * A.multiply(eb, md.delta))
                fail(dr, at);
        }
    out.insert(out.end(), {left, right, kms, kms2, dl, dr});

    LawCheck sc = law("scaling-constant");
    if (row_times(md.phi.values(), md.s2) != md.mu * md.phi.values()) fail(sc, "phi S^2 != mu phi");
    out.push_back(sc);

    if (q.has_star()) {
        LawCheck sa = law("modular-element-self-adjoint");
        if (A.star(md.delta) != md.delta) fail(sa, "delta* = " + to_string(A.star(md.delta)));
        out.push_back(sa);
    }

    LawCheck half = law("modular-element-square-root");
    if (!md.delta_half) {
        fail(half, md.delta_half_obstruction);
    } else {
        if (A.multiply(*md.delta_half, *md.delta_half) != md.delta) fail(half, "delta_half^2 != delta");
        if (md.sigma * *md.delta_half != *md.delta_half) fail(half, "sigma(delta_half) != delta_half");
    }
    out.push_back(half);

    LawCheck comm = law("modular-maps-commute");
    const std::array<Matrix, 5> maps{md.sigma, md.sigma_prime, md.s2, A.left_mult(md.delta), A.right_mult(md.delta)};
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
            if (maps[i] * maps[j] != maps[j] * maps[i])
                fail(comm, std::string(EigenTable::maps[i]) + " and " + EigenTable::maps[j] + " do not commute");
    out.push_back(comm);

    LawCheck cs = law("coproduct-intertwines-sigma");
    const Matrix& D = q.coproduct_matrix();
    Matrix lhs = D * md.sigma, rhs = kron(md.s2, md.sigma) * D;
    for (std::size_t a = 0; a < d && cs.passed; ++a)
        if (lhs.column(a) != rhs.column(a)) fail(cs, "D(sigma(" + label(q, a) + ")) != (S^2 (x) sigma)D(" + label(q, a) + ")");
    out.push_back(cs);
    return out;
}

OrbitReport orbit_analysis(const QGData& q, const ModularData& md, const Vec& a, int window, bool check_nonvanishing) {
    const std::size_t d = q.dim();
    OrbitReport out;
    out.window = window;
    auto kinv = inverse(md.kappa);
    if (!kinv) throw InternalError("kappa is not invertible");
    std::vector<Vec> gens{a};
    out.span = span_basis(gens, d);
    Vec fwd = a, back = a;
    while (out.steps < d) {
        fwd = md.kappa * fwd;
        back = *kinv * back;
        gens.push_back(fwd);
        gens.push_back(back);
        auto next = span_basis(gens, d);
        if (next.size() == out.span.size()) break;
        out.span = std::move(next);
        ++out.steps;
    }
    if (!check_nonvanishing || !q.has_star()) return out;
    const FinAlgebra& A = q.algebra();
    for (int n = -window; n <= window && out.nonvanishing; n += 2) {
        Matrix m = pow(md.sigma_prime, n) * pow(md.s2, n);
        for (std::size_t b = 0; b < d; ++b) {
            Vec eb = unit_vec(d, b);
            if (is_zero(A.multiply(A.star(eb), m * eb))) {
                out.nonvanishing = false;
                out.witness = "b=" + label(q, b) + " n=" + std::to_string(n);
                break;
            }
        }
    }
    return out;
}

EigenTable simultaneous_eigenbasis(const QGData& q, const ModularData& md, const SpecPoints& points) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    const std::array<Matrix, 5> maps{md.sigma, md.sigma_prime, md.s2, A.left_mult(md.delta), A.right_mult(md.delta)};
    EigenTable t;
    std::vector<std::vector<Vec>> pieces(1);
    for (std::size_t k = 0; k < d; ++k) pieces[0].push_back(unit_vec(d, k));
    for (std::size_t m = 0; m < maps.size(); ++m) {
        bool ok = true;
        for (const auto& p : pieces) ok = ok && invariant(maps[m], p);
        if (!ok) {
            t.notes.push_back(std::string(EigenTable::maps[m]) + " does not preserve the eigenspaces found so far; skipped");
            continue;
        }
        std::vector<std::vector<Vec>> next;
        for (const auto& p : pieces) {
            try {
                for (auto& sp : eigensplit_on(maps[m], p, points)) next.push_back(std::move(sp.basis));
            } catch (const NotDiagonalizable&) {
                t.notes.push_back(std::string(EigenTable::maps[m]) + " is not diagonalizable on a common eigenspace");
                next.push_back(p);
            }
        }
        pieces = std::move(next);
    }
    for (const auto& p : pieces)
        for (const auto& v : p) {
            EigenRow row{v, {}};
            for (std::size_t m = 0; m < maps.size(); ++m) {
                row.values[m] = eigenvalue_of(maps[m], v);
                if (!row.values[m]) {
                    t.simultaneous = false;
                    continue;
                }
                if (!positive_at(*row.values[m], points)) {
                    t.positive = false;
                    t.notes.push_back(std::string(EigenTable::maps[m]) + " has eigenvalue " + row.values[m]->to_string() +
                                      " on " + to_string(v));
                }
            }
            t.rows.push_back(std::move(row));
        }
    return t;
}

PsiPositivity psi_positivity(const QGData& q, const ModularData& md, const SpecPoints& points) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    PsiPositivity out;
    for (std::size_t i = 0; i < d && out.identity; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec x = A.multiply(A.star(unit_vec(d, i)), unit_vec(d, j));
            if (md.psi(x) != md.phi(A.multiply(x, md.delta))) {
                out.identity = false;
                out.witness = "i=" + label(q, i) + " j=" + label(q, j);
                break;
            }
        }
    out.gram = gram_psd(A, md.psi, points);
    return out;
}

}  // namespace hopf
