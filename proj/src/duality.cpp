#include "hopf/duality.hpp"

#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

LawCheck law(std::string name) { return LawCheck{std::move(name), true, {}}; }

void fail(LawCheck& c, const std::string& witness) {
    if (c.passed) c.witness = witness;
    c.passed = false;
}

bool all_passed(const std::vector<LawCheck>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

// sum_m v_m values(m, i) = w_i(v)
Scalar apply_basis_functional(const Matrix& values, std::size_t i, const Vec& v) {
    Scalar s;
    for (std::size_t m = 0; m < v.size(); ++m)
        if (!v[m].is_zero()) s += v[m] * values(m, i);
    return s;
}

}  // namespace

Scalar DualQG::evaluate(const Vec& w, const Vec& x) const { return dot(values * w, x); }

DualQG build_dual(const QGData& q, const Functional& phi) {
    const std::size_t d = q.dim();
    const FinAlgebra& A = q.algebra();
    DualQG out;
    out.phi = phi;
    out.values = Matrix(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& [m, v] : A.product(k, i)) out.values(k, i) += v * phi.values()[m];
    auto inv = inverse(out.values);
    if (!inv)
        throw VerificationError("dual-pairing", "the pairing phi(e_k e_i) has rank " + idx(rank(out.values)) + " of " + idx(d));
    out.to_basis = *inv;

    const Matrix& D = q.coproduct_matrix();
    std::vector<MulEntry> mul;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec vals = zero_vec(d);
            for (std::size_t x = 0; x < d; ++x)
                for (std::size_t p = 0; p < d; ++p)
                    for (std::size_t r = 0; r < d; ++r) {
                        const Scalar& c = D(p * d + r, x);
                        if (!c.is_zero()) vals[x] += c * out.values(p, i) * out.values(r, j);
                    }
            Vec coords = out.to_basis * vals;
            for (std::size_t k = 0; k < d; ++k)
                if (!coords[k].is_zero()) mul.push_back({i, j, k, coords[k]});
        }
    Vec unit = out.to_basis * q.counit().values();

    std::optional<Matrix> star;
    if (q.has_star()) {
        Matrix st(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            Vec vals(d);
            for (std::size_t k = 0; k < d; ++k)
                vals[k] = apply_basis_functional(out.values, i, A.star(q.antipode(unit_vec(d, k)))).conj();
            st.set_column(i, out.to_basis * vals);
        }
        star = st;
    }

    std::vector<std::string> labels;
    for (const auto& l : A.labels()) labels.push_back("w_" + l);
    FinAlgebra ahat = build_algebra(labels, mul, unit, star);

    // D^(w_a)(e_x (x) e_y) = w_a(e_y e_x)
    Matrix delta(d * d, d);
    Matrix inv2 = kron(out.to_basis, out.to_basis);
    for (std::size_t a = 0; a < d; ++a) {
        Vec vals = zero_vec(d * d);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (const auto& [m, v] : A.product(y, x)) vals[x * d + y] += v * out.values(m, a);
        delta.set_column(a, inv2 * vals);
    }
    QGData carrier = attach_coproduct(std::move(ahat), std::move(delta));
    TmapReport t = check_tmaps(carrier);
    if (!t.all_bijective()) throw VerificationError("dual-tmaps", "a T-map of the dual is not bijective");
    out.dual = derive_counit_antipode(std::move(carrier));
    return out;
}

bool BidualityReport::passed() const { return all_passed(checks); }

BidualityReport dual_haar_and_biduality(const QGData& q, const DualQG& d) {
    BidualityReport out;
    out.dual_haar = solve_left_haar(d.dual);
    DualQG bd = build_dual(d.dual, out.dual_haar.phi);
    // evaluation at S(a): value on w_i is w_i(S(a))
    out.canonical = bd.to_basis * d.values.transpose() * q.antipode_matrix();
    out.checks = check_qg_isomorphism(q, bd.dual, out.canonical, q.has_star());
    return out;
}

std::vector<LawCheck> dual_modular_check(const QGData& q, const ModularData& md, const DualQG& d,
                                         const ModularData& dual_md) {
    const std::size_t n = q.dim();
    std::vector<LawCheck> out;
    LawCheck eq = law("dual-modular-element");
    Vec eps_kappa = row_times(q.counit().values(), md.kappa);
    Vec dhat = d.values * dual_md.delta;
    if (dhat != eps_kappa) fail(eq, "delta^ = " + to_string(dhat) + ", eps kappa = " + to_string(eps_kappa));
    out.push_back(eq);

    LawCheck act = law("dual-modular-action");
    const FinAlgebra& Ahat = d.dual.algebra();
    for (std::size_t i = 0; i < n && act.passed; ++i) {
        Vec w = unit_vec(n, i);
        Vec wd = Ahat.multiply(w, dual_md.delta);
        for (std::size_t x = 0; x < n; ++x) {
            Vec ex = unit_vec(n, x);
            if (d.evaluate(wd, ex) != d.evaluate(w, md.kappa * ex)) {
                fail(act, "w=" + Ahat.labels()[i] + " x=" + q.algebra().labels()[x]);
                break;
            }
        }
    }
    out.push_back(act);
    return out;
}

bool ImbeddingReport::passed() const { return phi0_nonzero && phi0_invariant && all_passed(checks); }

ImbeddingReport dual_imbedding(const QGData& big, const ModularData& md, const SubMhaResult& sub) {
    if (!sub.induced) throw DomainError("dual imbedding needs a passing sub-Hopf algebra");
    const QGData& small = *sub.induced;
    const std::size_t d0 = small.dim();
    ImbeddingReport out;
    Vec phi0(d0);
    for (std::size_t i = 0; i < d0; ++i) phi0[i] = md.phi(sub.inclusion.column(i));
    out.phi0 = Functional(phi0);
    out.phi0_nonzero = !is_zero(phi0);
    if (!out.phi0_nonzero) return out;
    Vec h = solve_left_haar(small).phi.values();
    out.phi0_invariant = span_basis({phi0, h}, d0).size() == 1;

    DualQG dsmall = build_dual(small, out.phi0);
    DualQG dbig = build_dual(big, md.phi);
    out.j = sub.inclusion;
    const Matrix& j = out.j;
    const FinAlgebra& S = dsmall.dual.algebra();
    const FinAlgebra& B = dbig.dual.algebra();

    LawCheck inj = law("injective");
    if (rank(j) != d0) inj.passed = false, inj.witness = "rank " + idx(rank(j)) + " of " + idx(d0);
    LawCheck mult = law("multiplicative"), star = law("star-preserving");
    LawCheck co1 = law("coproduct-compatible-right"), co2 = law("coproduct-compatible-left");
    Matrix jj = kron(j, j);
    const Vec one0 = dsmall.dual.unit(), one = dbig.dual.unit();
    for (std::size_t a = 0; a < d0; ++a) {
        Vec wa = unit_vec(d0, a);
        if (S.has_star() && B.has_star() && j * S.star(wa) != B.star(j * wa)) fail(star, S.labels()[a]);
        for (std::size_t b = 0; b < d0; ++b) {
            Vec wb = unit_vec(d0, b);
            std::string at = S.labels()[a] + ", " + S.labels()[b];
            if (j * S.multiply(wa, wb) != B.multiply(j * wa, j * wb)) fail(mult, at);
            Vec l1 = jj * dsmall.dual.tmul(dsmall.dual.coproduct(wa), tensor(one0, wb));
            Vec r1 = dbig.dual.tmul(dbig.dual.coproduct(j * wa), tensor(one, j * wb));
            if (l1 != r1) fail(co1, at);
            Vec l2 = jj * dsmall.dual.tmul(dsmall.dual.coproduct(wa), tensor(wb, one0));
            Vec r2 = dbig.dual.tmul(dbig.dual.coproduct(j * wa), tensor(j * wb, one));
            if (l2 != r2) fail(co2, at);
        }
    }
    out.checks = {inj, mult};
    if (S.has_star() && B.has_star()) out.checks.push_back(star);
    out.checks.push_back(co1);
    out.checks.push_back(co2);
    return out;
}

}  // namespace hopf
