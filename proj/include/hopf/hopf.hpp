#pragma once

// Hopf structure on a finite-dimensional unital algebra: coproduct, T-maps,
// counit and antipode solved from their defining laws.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopf/algebra.hpp"

namespace hopf {

class QGData {
public:
    QGData() = default;
    // No checks; see attach_coproduct.
    QGData(FinAlgebra a, Matrix delta);

    const FinAlgebra& algebra() const noexcept { return a_; }
    std::size_t dim() const noexcept { return a_.dim(); }
    const Matrix& coproduct_matrix() const noexcept { return delta_; }
    Vec coproduct(const Vec& x) const { return delta_ * x; }
    const Vec& unit() const { return a_.unit(); }
    bool has_star() const noexcept { return a_.has_star(); }

    // product in A (x) A
    Vec tmul(const Vec& x, const Vec& y) const;
    // (x (x) y)* in A (x) A
    Vec tstar(const Vec& x) const;
    // (f (x) id)(X) and (id (x) f)(X)
    Vec left_slice(const Functional& f, const Vec& x) const;
    Vec right_slice(const Vec& x, const Functional& f) const;
    // flip x (x) y -> y (x) x
    Vec flip(const Vec& x) const;

    bool has_counit() const noexcept { return eps_.has_value(); }
    const Functional& counit() const;
    bool has_antipode() const noexcept { return s_.has_value(); }
    const Matrix& antipode_matrix() const;
    Vec antipode(const Vec& x) const { return antipode_matrix() * x; }

    void set_counit(Functional f) { eps_ = std::move(f); }
    void set_antipode(Matrix s) { s_ = std::move(s); }

    // same Hopf data with the involution dropped
    QGData without_star() const;

private:
    FinAlgebra a_;
    Matrix delta_;
    std::optional<Functional> eps_;
    std::optional<Matrix> s_;
};

// Verifies that delta is multiplicative A -> A (x) A and is
// coassociative. Throws VerificationError ("coproduct-shape",
// "coproduct-morphism", "coassociativity").
QGData attach_coproduct(FinAlgebra a, Matrix delta);

struct TmapReport {
    static constexpr std::array<const char*, 4> names{"T_D2", "T_1D", "T_D1", "T_2D"};
    // a(x)b -> D(a)(1(x)b), (a(x)1)D(b), D(a)(b(x)1), (1(x)a)D(b)
    std::array<std::size_t, 4> ranks{};
    std::size_t full = 0;
    bool bijective(std::size_t k) const { return ranks[k] == full; }
    bool all_bijective() const;
};

TmapReport check_tmaps(const QGData& q);
// matrix of one of the four T-maps on A (x) A
Matrix tmap_matrix(const QGData& q, std::size_t which);

// Solves the counit and antipode laws. Throws VerificationError ("counit",
// "antipode", "antipode-antimultiplicative", "declared-counit",
// "declared-antipode") with solution-space dimensions in the detail.
// Declared values, when given, must agree with the solved ones.
QGData derive_counit_antipode(QGData q, const std::optional<Functional>& declared_counit = std::nullopt,
                              const std::optional<Matrix>& declared_antipode = std::nullopt);

struct LawCheck {
    std::string law;
    bool passed = true;
    std::string witness;
};

// S(S(a)*)* = a, D(a*) = D(a)*, eps(a*) = conj(eps(a)) on the basis.
std::vector<LawCheck> check_star_compat(const QGData& q);

// p = p* = p^2 and D(p)(1(x)p) = p(x)p
LawCheck check_grouplike_projection(const QGData& q, const Vec& p);

// A0 = span(basis) inside a Hopf algebra.
struct SubMhaResult {
    bool subalgebra = false;
    std::vector<LawCheck> checks;
    Matrix inclusion;                 // columns: basis of A0 in ambient coordinates
    std::optional<Vec> unit;          // unit of A0 (ambient coordinates) if A0 is unital in itself
    std::optional<QGData> induced;    // A0 with D0(a) = D(a)(u(x)u), counit and antipode derived
    std::optional<TmapReport> induced_tmaps;
    bool passed() const;
};

SubMhaResult check_sub_mha(const QGData& big, const std::vector<Vec>& basis);

// Full quantum-group isomorphism check for a linear map T: A -> B given as a
// matrix (column j = T(e_j)).
std::vector<LawCheck> check_qg_isomorphism(const QGData& a, const QGData& b, const Matrix& t,
                                           bool check_star = true);

// S^2 = id
bool antipode_squares_to_identity(const QGData& q);

}  // namespace hopf
