#include "hopf/hopf.hpp"

namespace hopf {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

std::string label(const FinAlgebra& a, std::size_t i) { return a.labels()[i]; }

}  // namespace

QGData::QGData(FinAlgebra a, Matrix delta) : a_(std::move(a)), delta_(std::move(delta)) {}

Vec QGData::tmul(const Vec& x, const Vec& y) const {
    const std::size_t d = dim();
    Vec out(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar& xv = x[i * d + j];
            if (xv.is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) {
                const auto& pik = a_.product(i, k);
                if (pik.empty()) continue;
                for (std::size_t l = 0; l < d; ++l) {
                    const Scalar& yv = y[k * d + l];
                    if (yv.is_zero()) continue;
                    const auto& pjl = a_.product(j, l);
                    if (pjl.empty()) continue;
                    const Scalar c = xv * yv;
                    for (const auto& u : pik)
                        for (const auto& v : pjl) out[u.index * d + v.index] += c * u.value * v.value;
                }
            }
        }
    return out;
}

Vec QGData::tstar(const Vec& x) const { return kron(a_.star_matrix(), a_.star_matrix()) * conj(x); }

Vec QGData::left_slice(const Functional& f, const Vec& x) const {
    const std::size_t d = dim();
    Vec out(d);
    for (std::size_t p = 0; p < d; ++p) {
        if (f.values()[p].is_zero()) continue;
        for (std::size_t q = 0; q < d; ++q)
            if (!x[p * d + q].is_zero()) out[q] += f.values()[p] * x[p * d + q];
    }
    return out;
}

Vec QGData::right_slice(const Vec& x, const Functional& f) const {
    const std::size_t d = dim();
    Vec out(d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            if (!x[p * d + q].is_zero() && !f.values()[q].is_zero()) out[p] += x[p * d + q] * f.values()[q];
    return out;
}

Vec QGData::flip(const Vec& x) const {
    const std::size_t d = dim();
    Vec out(d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) out[q * d + p] = x[p * d + q];
    return out;
}

const Functional& QGData::counit() const {
    if (!eps_) throw DomainError("counit not derived");
    return *eps_;
}

const Matrix& QGData::antipode_matrix() const {
    if (!s_) throw DomainError("antipode not derived");
    return *s_;
}

QGData QGData::without_star() const {
    QGData q = *this;
    q.a_ = a_.without_star();
    return q;
}

QGData attach_coproduct(FinAlgebra a, Matrix delta) {
    const std::size_t d = a.dim();
    if (!a.has_unit()) throw VerificationError("coproduct-shape", "algebra must be unital");
    if (delta.rows() != d * d || delta.cols() != d)
        throw VerificationError("coproduct-shape", "coproduct must be a " + idx(d * d) + "x" + idx(d) + " matrix");
    QGData q(std::move(a), std::move(delta));
    const FinAlgebra& alg = q.algebra();

    // D(1) = 1 (x) 1 is not required here; a non-unital D fails the T-maps
    std::vector<Vec> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = q.coproduct(alg.basis(i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs(d * d);
            for (const auto& e : alg.product(i, j)) lhs = lhs + e.value * images[e.index];
            if (lhs != q.tmul(images[i], images[j]))
                throw VerificationError("coproduct-morphism", "D(" + label(alg, i) + " " + label(alg, j) + ") != D(" +
                                                                  label(alg, i) + ") D(" + label(alg, j) + ")");
        }

    for (std::size_t i = 0; i < d; ++i) {
        Vec left(d * d * d), right(d * d * d);
        const Vec& x = images[i];
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t r = 0; r < d; ++r) {
                const Scalar& c = x[p * d + r];
                if (c.is_zero()) continue;
                for (std::size_t k = 0; k < d * d; ++k) {
                    if (!images[p][k].is_zero()) left[k * d + r] += c * images[p][k];
                    if (!images[r][k].is_zero()) right[p * d * d + k] += c * images[r][k];
                }
            }
        if (left != right)
            throw VerificationError("coassociativity", "(D (x) id)D(" + label(alg, i) + ") != (id (x) D)D(" +
                                                           label(alg, i) + ")");
    }
    return q;
}

bool TmapReport::all_bijective() const {
    for (std::size_t k = 0; k < 4; ++k)
        if (!bijective(k)) return false;
    return true;
}

Matrix tmap_matrix(const QGData& q, std::size_t which) {
    const std::size_t d = q.dim();
    const FinAlgebra& alg = q.algebra();
    Matrix t(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a) {
        const Vec da = q.coproduct(alg.basis(a));
        for (std::size_t b = 0; b < d; ++b) {
            const Vec db = q.coproduct(alg.basis(b));
            Vec col;
            switch (which) {
                case 0: col = q.tmul(da, tensor(alg.unit(), alg.basis(b))); break;
                case 1: col = q.tmul(tensor(alg.basis(a), alg.unit()), db); break;
                case 2: col = q.tmul(da, tensor(alg.basis(b), alg.unit())); break;
                case 3: col = q.tmul(tensor(alg.unit(), alg.basis(a)), db); break;
                default: throw DomainError("T-map index out of range");
            }
            t.set_column(a * d + b, col);
        }
    }
    return t;
}

TmapReport check_tmaps(const QGData& q) {
    TmapReport r;
    r.full = q.dim() * q.dim();
    for (std::size_t k = 0; k < 4; ++k) r.ranks[k] = rank(tmap_matrix(q, k));
    return r;
}

QGData derive_counit_antipode(QGData q, const std::optional<Functional>& declared_counit,
                              const std::optional<Matrix>& declared_antipode) {
    const std::size_t d = q.dim();
    const FinAlgebra& alg = q.algebra();
    std::vector<Vec> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = q.coproduct(alg.basis(i));

    // (eps (x) id)D(e_i) = e_i and (id (x) eps)D(e_i) = e_i
    LinearSystem ce(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t t = 0; t < d; ++t) {
            Vec left(d), right(d);
            for (std::size_t p = 0; p < d; ++p) {
                left[p] = images[i][p * d + t];
                right[p] = images[i][t * d + p];
            }
            const Scalar rhs(i == t ? 1 : 0);
            ce.add(left, rhs);
            ce.add(right, rhs);
        }
    const auto eps_sol = ce.solution();
    if (!eps_sol.consistent) throw VerificationError("counit", "counit laws have no solution");
    if (!eps_sol.is_point())
        throw VerificationError("counit", "counit solution space has dimension " + idx(eps_sol.dimension()));
    Functional eps(eps_sol.particular);
    if (declared_counit && !(*declared_counit == eps))
        throw VerificationError("declared-counit", "declared counit " + to_string(declared_counit->values()) +
                                                       " differs from solved " + to_string(eps.values()));

    // unknown S[r][c] at r*d + c, with S(e_c) = sum_r S[r][c] e_r
    LinearSystem se(d * d);
    const Vec& u = alg.unit();
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Vec> left(d, Vec(d * d)), right(d, Vec(d * d));
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t c = 0; c < d; ++c) {
                const Scalar& x = images[i][p * d + c];
                if (x.is_zero()) continue;
                for (std::size_t r = 0; r < d; ++r) {
                    // S(e_p) e_c and e_p S(e_c)
                    for (const auto& e : alg.product(r, c)) left[e.index][r * d + p] += x * e.value;
                    for (const auto& e : alg.product(p, r)) right[e.index][r * d + c] += x * e.value;
                }
            }
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar rhs = eps.values()[i] * u[k];
            se.add(left[k], rhs);
            se.add(right[k], rhs);
        }
    }
    const auto s_sol = se.solution();
    if (!s_sol.consistent) throw VerificationError("antipode", "antipode laws have no solution");
    if (!s_sol.is_point())
        throw VerificationError("antipode", "antipode solution space has dimension " + idx(s_sol.dimension()));
    Matrix s(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) s(r, c) = s_sol.particular[r * d + c];
    if (declared_antipode && !(*declared_antipode == s))
        throw VerificationError("declared-antipode", "declared antipode differs from the solved one");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs(d);
            for (const auto& e : alg.product(i, j)) lhs = lhs + e.value * s.column(e.index);
            if (lhs != alg.multiply(s.column(j), s.column(i)))
                throw VerificationError("antipode-antimultiplicative", "S(" + label(alg, i) + " " + label(alg, j) +
                                                                           ") != S(" + label(alg, j) + ") S(" +
                                                                           label(alg, i) + ")");
        }

    q.set_counit(std::move(eps));
    q.set_antipode(std::move(s));
    return q;
}

std::vector<LawCheck> check_star_compat(const QGData& q) {
    const FinAlgebra& alg = q.algebra();
    const std::size_t d = q.dim();
    std::vector<LawCheck> out{{"S(S(a)*)* = a", true, ""}, {"D(a*) = D(a)*", true, ""}, {"eps(a*) = conj eps(a)", true, ""}};
    for (std::size_t i = 0; i < d; ++i) {
        const Vec e = alg.basis(i);
        if (out[0].passed && alg.star(q.antipode(alg.star(q.antipode(e)))) != e) {
            out[0].passed = false;
            out[0].witness = label(alg, i);
        }
        if (out[1].passed && q.coproduct(alg.star(e)) != q.tstar(q.coproduct(e))) {
            out[1].passed = false;
            out[1].witness = label(alg, i);
        }
        if (out[2].passed && q.counit()(alg.star(e)) != q.counit()(e).conj()) {
            out[2].passed = false;
            out[2].witness = label(alg, i);
        }
    }
    return out;
}

LawCheck check_grouplike_projection(const QGData& q, const Vec& p) {
    const FinAlgebra& alg = q.algebra();
    LawCheck c{"grouplike projection", true, ""};
    if (alg.star(p) != p) {
        c.passed = false;
        c.witness = "p* != p";
    } else if (alg.multiply(p, p) != p) {
        c.passed = false;
        c.witness = "p^2 != p";
    } else if (q.tmul(q.coproduct(p), tensor(alg.unit(), p)) != tensor(p, p)) {
        c.passed = false;
        c.witness = "D(p)(1 (x) p) != p (x) p";
    }
    return c;
}

bool SubMhaResult::passed() const {
    if (!subalgebra) return false;
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !induced_tmaps || induced_tmaps->all_bijective();
}

SubMhaResult check_sub_mha(const QGData& big, const std::vector<Vec>& basis) {
    const FinAlgebra& alg = big.algebra();
    const std::size_t d = big.dim(), d0 = basis.size();
    SubMhaResult r;
    r.inclusion = Matrix::from_columns(basis, d);
    if (d0 == 0 || rank(r.inclusion) != d0) {
        r.checks.push_back({"independent basis", false, "sub-basis vectors are linearly dependent"});
        return r;
    }

    std::vector<MulEntry> mul;
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d0; ++j) {
            auto c = coordinates(basis, alg.multiply(basis[i], basis[j]));
            if (!c) {
                r.checks.push_back({"subalgebra", false, "v" + idx(i) + " v" + idx(j) + " leaves the span"});
                return r;
            }
            for (std::size_t k = 0; k < d0; ++k)
                if (!(*c)[k].is_zero()) mul.push_back({i, j, k, (*c)[k]});
        }
    r.subalgebra = true;

    std::vector<Vec> tbasis;
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d0; ++j) tbasis.push_back(tensor(basis[i], basis[j]));

    const Vec& one = alg.unit();
    std::vector<Vec> deltas(d0);
    for (std::size_t i = 0; i < d0; ++i) deltas[i] = big.coproduct(basis[i]);
    const std::array<const char*, 4> names{"D(a)(1(x)b) in A0(x)A0", "D(a)(b(x)1) in A0(x)A0",
                                           "(a(x)1)D(b) in A0(x)A0", "(1(x)a)D(b) in A0(x)A0"};
    auto four = [&](std::size_t a, std::size_t b) -> std::array<Vec, 4> {
        return {big.tmul(deltas[a], tensor(one, basis[b])), big.tmul(deltas[a], tensor(basis[b], one)),
                big.tmul(tensor(basis[a], one), deltas[b]), big.tmul(tensor(one, basis[a]), deltas[b])};
    };
    for (std::size_t k = 0; k < 4; ++k) {
        LawCheck c{names[k], true, ""};
        for (std::size_t a = 0; a < d0 && c.passed; ++a)
            for (std::size_t b = 0; b < d0 && c.passed; ++b)
                if (!coordinates(tbasis, four(a, b)[k])) {
                    c.passed = false;
                    c.witness = "(a, b) = (v" + idx(a) + ", v" + idx(b) + ")";
                }
        r.checks.push_back(c);
    }
    for (const auto& c : r.checks)
        if (!c.passed) return r;

    // unit of A0 inside A0: u v_j = v_j = v_j u
    LinearSystem us(d0);
    for (std::size_t j = 0; j < d0; ++j) {
        Matrix lm(d, d0), rm(d, d0);
        for (std::size_t i = 0; i < d0; ++i) {
            lm.set_column(i, alg.multiply(basis[i], basis[j]));
            rm.set_column(i, alg.multiply(basis[j], basis[i]));
        }
        for (std::size_t t = 0; t < d; ++t) {
            us.add(lm.row(t), basis[j][t]);
            us.add(rm.row(t), basis[j][t]);
        }
    }
    const auto usol = us.solution();
    if (!usol.consistent) return r;
    Vec u0 = usol.particular;
    r.unit = r.inclusion * u0;

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d0; ++i) {
        std::optional<std::size_t> single;
        std::size_t nnz = 0;
        for (std::size_t t = 0; t < d; ++t)
            if (!basis[i][t].is_zero()) {
                ++nnz;
                single = t;
            }
        labels.push_back(nnz == 1 && basis[i][*single].is_one() ? alg.labels()[*single] : "v" + idx(i));
    }

    std::optional<Matrix> star0;
    if (alg.has_star()) {
        Matrix st(d0, d0);
        bool closed = true;
        for (std::size_t j = 0; j < d0 && closed; ++j) {
            auto c = coordinates(basis, alg.star(basis[j]));
            if (!c) closed = false;
            else st.set_column(j, *c);
        }
        if (closed) star0 = st;
        r.checks.push_back({"star-closed", closed, closed ? "" : "A0 is not closed under *"});
    }
    FinAlgebra a0 = build_algebra(labels, mul, u0, star0);

    // D0(a) = D(a)(u (x) u), in coordinates of A0 (x) A0
    Matrix delta0(d0 * d0, d0);
    const Vec uu = tensor(*r.unit, *r.unit);
    LawCheck agree{"D0 agrees with D on the four products", true, ""};
    for (std::size_t a = 0; a < d0; ++a) {
        const Vec x = big.tmul(deltas[a], uu);
        auto c = coordinates(tbasis, x);
        if (!c) throw InternalError("D(a)(u (x) u) left A0 (x) A0");
        delta0.set_column(a, *c);
        for (std::size_t b = 0; b < d0 && agree.passed; ++b) {
            const auto ref = four(a, b);
            const std::array<Vec, 4> via0{big.tmul(x, tensor(*r.unit, basis[b])), big.tmul(x, tensor(basis[b], *r.unit)),
                                          big.tmul(tensor(basis[a], *r.unit), big.tmul(deltas[b], uu)),
                                          big.tmul(tensor(*r.unit, basis[a]), big.tmul(deltas[b], uu))};
            for (std::size_t k = 0; k < 4; ++k)
                if (via0[k] != ref[k]) {
                    agree.passed = false;
                    agree.witness = "product " + idx(k + 1) + " at (v" + idx(a) + ", v" + idx(b) + ")";
                    break;
                }
        }
    }
    r.checks.push_back(agree);
    if (!agree.passed) return r;

    QGData q0 = attach_coproduct(std::move(a0), std::move(delta0));
    r.induced_tmaps = check_tmaps(q0);
    if (r.induced_tmaps->all_bijective()) r.induced = derive_counit_antipode(std::move(q0));
    return r;
}

std::vector<LawCheck> check_qg_isomorphism(const QGData& a, const QGData& b, const Matrix& t, bool check_star) {
    const FinAlgebra& A = a.algebra();
    const FinAlgebra& B = b.algebra();
    const std::size_t d = a.dim();
    std::vector<LawCheck> out;
    auto fail_at = [&](LawCheck& c, std::string w) {
        if (!c.passed) return;
        c.passed = false;
        c.witness = std::move(w);
    };

    LawCheck bij{"bijective", t.rows() == d && t.cols() == d && b.dim() == d && rank(t) == d, ""};
    out.push_back(bij);
    if (!bij.passed) return out;

    LawCheck unit{"unital", t * A.unit() == B.unit(), ""};
    out.push_back(unit);

    LawCheck mult{"multiplicative", true, ""};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (t * A.multiply(A.basis(i), A.basis(j)) != B.multiply(t.column(i), t.column(j)))
                fail_at(mult, A.labels()[i] + " " + A.labels()[j]);
    out.push_back(mult);

    const Matrix tt = kron(t, t);
    LawCheck co{"intertwines coproducts", true, ""}, eps{"preserves counit", true, ""},
        ant{"intertwines antipodes", true, ""}, st{"preserves star", true, ""};
    for (std::size_t i = 0; i < d; ++i) {
        const Vec e = A.basis(i);
        if (tt * a.coproduct(e) != b.coproduct(t * e)) fail_at(co, A.labels()[i]);
        if (b.counit()(t * e) != a.counit()(e)) fail_at(eps, A.labels()[i]);
        if (b.antipode(t * e) != t * a.antipode(e)) fail_at(ant, A.labels()[i]);
        if (check_star && A.has_star() && B.has_star() && t * A.star(e) != B.star(t * e)) fail_at(st, A.labels()[i]);
    }
    out.push_back(co);
    out.push_back(eps);
    out.push_back(ant);
    if (check_star && A.has_star() && B.has_star()) out.push_back(st);
    return out;
}

bool antipode_squares_to_identity(const QGData& q) {
    const Matrix& s = q.antipode_matrix();
    return s * s == Matrix::identity(q.dim());
}

}  // namespace hopf
