#include "hopf/pairing.hpp"

#include <set>

#include "hopf/errors.hpp"
#include "hopf/matrix.hpp"

namespace hopf {

namespace {

Word tail(const Word& w) { return Word(w.begin() + 1, w.end()); }

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Scalar lit(const char* text) { return parse_scalar(text); }

}  // namespace

Pairing::Pairing(std::shared_ptr<const PresentedHopf> left, std::shared_ptr<const PresentedHopf> right,
                 std::vector<std::vector<Scalar>> table)
    : u_(std::move(left)), b_(std::move(right)), table_(std::move(table)) {
    if (table_.size() != u_->p().generators())
        throw DomainError("pairing table has " + std::to_string(table_.size()) + " rows, expected " +
                          std::to_string(u_->p().generators()));
    for (const auto& row : table_)
        if (row.size() != b_->p().generators())
            throw DomainError("pairing table row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(b_->p().generators()));
}

Scalar Pairing::pair(const Word& x, const Word& c, Route route) const {
    const int r = route == Route::left_first ? 0 : 1;
    {
        std::lock_guard lock(memo_mutex_);
        auto it = memo_[r].find({x, c});
        if (it != memo_[r].end()) return it->second;
    }
    Scalar v = compute(x, c, route);
    std::lock_guard lock(memo_mutex_);
    memo_[r].emplace(std::make_pair(x, c), v);
    return v;
}

// <XY, c> = sum <X, c1><Y, c2> and <X, cd> = sum <X1, c><X2, d>
Scalar Pairing::compute(const Word& x, const Word& c, Route route) const {
    if (x.empty()) return b_->counit_of(c);
    if (c.empty()) return u_->counit_of(x);
    if (x.size() == 1 && c.size() == 1) return table_[x[0]][c[0]];
    bool split_left = route == Route::left_first ? x.size() >= 2 : c.size() < 2;
    Scalar sum;
    if (split_left) {
        Word head{x[0]}, rest = tail(x);
        for (const auto& [lr, k] : b_->coproduct_of(c)) {
            Scalar a = pair(head, lr.first, route);
            if (a.is_zero()) continue;
            Scalar b = pair(rest, lr.second, route);
            if (!b.is_zero()) sum += k * a * b;
        }
    } else {
        Word head{c[0]}, rest = tail(c);
        for (const auto& [lr, k] : u_->coproduct_of(x)) {
            Scalar a = pair(lr.first, head, route);
            if (a.is_zero()) continue;
            Scalar b = pair(lr.second, rest, route);
            if (!b.is_zero()) sum += k * a * b;
        }
    }
    return sum;
}

Scalar Pairing::pair(const WordComb& x, const WordComb& c, Route route) const {
    Scalar sum;
    for (const auto& [w, a] : x)
        for (const auto& [v, b] : c) sum += a * b * pair(w, v, route);
    return sum;
}

Scalar Pairing::pair(const TensorComb& x, const TensorComb& c) const {
    Scalar sum;
    for (const auto& [xl, a] : x)
        for (const auto& [cl, b] : c) {
            Scalar p1 = pair(xl.first, cl.first);
            if (p1.is_zero()) continue;
            sum += a * b * p1 * pair(xl.second, cl.second);
        }
    return sum;
}

bool PairingAxiomReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

PairingAxiomReport check_pairing_axioms(const Pairing& p, int degree) {
    const Presentation& U = p.left().p();
    const Presentation& B = p.right().p();
    PairingAxiomReport rep;
    rep.degree = degree;
    auto ucomb = [](const Word& w) { return WordComb{{w, Scalar(1)}}; };
    auto add = [&](std::string law) {
        rep.checks.push_back({std::move(law), true, {}});
        rep.counts.push_back(0);
    };
    auto fail = [&](const std::string& w) {
        auto& c = rep.checks.back();
        if (c.passed) c.witness = w;
        c.passed = false;
    };

    const auto bwords = B.normal_words(degree);
    const auto uwords = U.normal_words(degree);
    std::vector<Word> ugens;
    for (std::size_t g = 0; g < U.generators(); ++g) ugens.push_back(Word{static_cast<std::uint8_t>(g)});

    // <D(X), x (x) y> = <X, xy>
    add("coproduct-dual-to-product");
    for (const auto& X : ugens)
        for (const auto& x : bwords)
            for (const auto& y : bwords) {
                if (static_cast<int>(x.size() + y.size()) > degree) continue;
                ++rep.counts.back();
                Scalar lhs = p.pair(p.left().coproduct_of(X), TensorComb{{{x, y}, Scalar(1)}});
                Scalar rhs = p.pair(ucomb(X), B.normal_form(concat(x, y)));
                if (!(lhs == rhs))
                    fail("X=" + U.to_string(X) + " x=" + B.to_string(x) + " y=" + B.to_string(y) + ": " +
                         lhs.to_string() + " vs " + rhs.to_string());
            }

    // <XY, c> = <X (x) Y, D(c)>
    add("product-dual-to-coproduct");
    for (const auto& X : ugens)
        for (const auto& Y : ugens)
            for (const auto& c : bwords) {
                ++rep.counts.back();
                Scalar lhs = p.pair(U.normal_form(concat(X, Y)), ucomb(c));
                Scalar rhs = p.pair(TensorComb{{{X, Y}, Scalar(1)}}, p.right().coproduct_of(c));
                if (!(lhs == rhs))
                    fail("X=" + U.to_string(X) + " Y=" + U.to_string(Y) + " c=" + B.to_string(c) + ": " +
                         lhs.to_string() + " vs " + rhs.to_string());
            }

    // relations of either side pair to zero
    add("left-relations-annihilate");
    for (const auto& r : U.rules())
        for (const auto& c : bwords) {
            if (static_cast<int>(c.size()) > degree) continue;
            ++rep.counts.back();
            Scalar lhs = p.pair(ucomb(r.lhs), ucomb(c));
            Scalar rhs = p.pair(r.rhs, ucomb(c));
            if (!(lhs == rhs))
                fail("rule " + U.to_string(r.lhs) + " -> " + U.to_string(r.rhs) + " on c=" + B.to_string(c) + ": " +
                     lhs.to_string() + " vs " + rhs.to_string());
        }
    add("right-relations-annihilate");
    for (const auto& r : B.rules())
        for (const auto& X : uwords) {
            ++rep.counts.back();
            Scalar lhs = p.pair(ucomb(X), ucomb(r.lhs));
            Scalar rhs = p.pair(ucomb(X), r.rhs);
            if (!(lhs == rhs))
                fail("rule " + B.to_string(r.lhs) + " -> " + B.to_string(r.rhs) + " on X=" + U.to_string(X) + ": " +
                     lhs.to_string() + " vs " + rhs.to_string());
        }

    // <S(X), c> = <X, S(c)>
    add("antipode-compatible");
    for (const auto& X : ugens)
        for (const auto& c : bwords) {
            ++rep.counts.back();
            Scalar lhs = p.pair(apply_map(U, p.left().antipode, ucomb(X)), ucomb(c));
            Scalar rhs = p.pair(ucomb(X), apply_map(B, p.right().antipode, ucomb(c)));
            if (!(lhs == rhs))
                fail("X=" + U.to_string(X) + " c=" + B.to_string(c) + ": " + lhs.to_string() + " vs " + rhs.to_string());
        }

    // <X*, c> = conj <X, S(c)*>
    if (U.has_star() && B.has_star()) {
        add("star-compatible");
        for (const auto& X : ugens)
            for (const auto& c : bwords) {
                ++rep.counts.back();
                Scalar lhs = p.pair(U.star(ucomb(X)), ucomb(c));
                Scalar rhs = p.pair(ucomb(X), B.star(apply_map(B, p.right().antipode, ucomb(c)))).conj();
                if (!(lhs == rhs))
                    fail("X=" + U.to_string(X) + " c=" + B.to_string(c) + ": " + lhs.to_string() + " vs " +
                         rhs.to_string());
            }
    }

    add("route-independent");
    for (const auto& X : uwords)
        for (const auto& c : bwords) {
            ++rep.counts.back();
            Scalar a = p.pair(X, c, Pairing::Route::left_first);
            Scalar b = p.pair(X, c, Pairing::Route::right_first);
            if (!(a == b))
                fail("X=" + U.to_string(X) + " c=" + B.to_string(c) + ": " + a.to_string() + " vs " + b.to_string());
        }
    return rep;
}

KappaReport kappa_functional_check(const Pairing& p, const Word& x, int degree, const std::string& modular_action) {
    const PresentedHopf& h = p.right();
    const Presentation& B = h.p();
    DiagonalAction rho_inv = h.action(modular_action).inverse();
    KappaReport rep;
    rep.degree = degree;
    for (const auto& c : B.normal_words(degree)) {
        ++rep.words;
        WordComb wc{{c, Scalar(1)}};
        WordComb s2 = apply_map(B, h.antipode, apply_map(B, h.antipode, wc));
        Scalar lhs = apply_counit(h.counit, rho_inv.apply(s2));
        Scalar rhs = p.pair(x, c);
        if (c.size() <= 1) rep.samples.emplace_back(B.to_string(c), lhs, rhs);
        if (!(lhs == rhs) && rep.passed) {
            rep.passed = false;
            rep.witness = "c=" + B.to_string(c) + ": " + lhs.to_string() + " vs " + rhs.to_string();
        }
    }
    return rep;
}

std::size_t pairing_gram_rank(const Pairing& p, int degree) {
    const auto uw = p.left().p().normal_words(degree);
    const auto bw = p.right().p().normal_words(degree);
    Matrix m(uw.size(), bw.size());
    for (std::size_t i = 0; i < uw.size(); ++i)
        for (std::size_t j = 0; j < bw.size(); ++j) m(i, j) = p.pair(uw[i], bw[j]);
    return rank(m);
}

ShiftReport shifted_words_distinct(const Presentation& p, const Word& g_power, int degree, int copies) {
    ShiftReport rep;
    rep.copies = copies;
    const int bound = static_cast<int>(g_power.size()) * copies + degree;
    for (const auto& x : p.normal_words(degree)) {
        std::set<Word> seen;
        for (int n = 0; n < copies; ++n) {
            ++rep.words;
            Word w;
            for (int k = 0; k < n; ++k) w.insert(w.end(), g_power.begin(), g_power.end());
            w.insert(w.end(), x.begin(), x.end());
            const WordComb& nf = p.normal_form(w, bound);
            std::string label = "n=" + std::to_string(n) + " X=" + p.to_string(x);
            if (nf.size() != 1 || !nf.begin()->second.is_one()) {
                if (rep.distinct) rep.witness = label + " has normal form " + p.to_string(nf);
                rep.distinct = false;
                continue;
            }
            if (!seen.insert(nf.begin()->first).second) {
                if (rep.distinct) rep.witness = label + " repeats " + p.to_string(nf.begin()->first);
                rep.distinct = false;
            }
        }
    }
    return rep;
}

// ------------------------------------------------------------------ presets

namespace {

Term t(const char* c, std::vector<std::string> w) { return Term{lit(c), std::move(w)}; }
TensorTerm tt(const char* c, std::vector<std::string> l, std::vector<std::string> r) {
    return TensorTerm{lit(c), std::move(l), std::move(r)};
}

PresentationDef uq_su2() {
    PresentationDef d;
    d.name = "uq-su2";
    d.description = "U_q(su(2)) with K E = q E K, D(E) = E (x) K + K^-1 (x) E";
    d.generators = {{"K", 1, "K", std::nullopt},
                    {"Kinv", 1, "Kinv", "K"},
                    {"E", 1, "F", std::nullopt},
                    {"F", 1, "E", std::nullopt}};
    d.rules = {
        {{"E", "K"}, {t("1/s^2", {"K", "E"})}},
        {{"F", "K"}, {t("s^2", {"K", "F"})}},
        {{"E", "Kinv"}, {t("s^2", {"Kinv", "E"})}},
        {{"F", "Kinv"}, {t("1/s^2", {"Kinv", "F"})}},
        {{"F", "E"},
         {t("1", {"E", "F"}), t("-s^2/(s^4 - 1)", {"K", "K"}), t("s^2/(s^4 - 1)", {"Kinv", "Kinv"})}},
    };
    d.degree = 8;
    d.coproduct = {{tt("1", {"K"}, {"K"})},
                   {tt("1", {"Kinv"}, {"Kinv"})},
                   {tt("1", {"E"}, {"K"}), tt("1", {"Kinv"}, {"E"})},
                   {tt("1", {"F"}, {"K"}), tt("1", {"Kinv"}, {"F"})}};
    d.antipode = {{t("1", {"Kinv"})}, {t("1", {"K"})}, {t("-s^2", {"E"})}, {t("-1/s^2", {"F"})}};
    d.actions = {{"sigma", {lit("1"), lit("1"), lit("s^4"), lit("1/s^4")}}};
    return d;
}

PresentationDef suq2() {
    PresentationDef d;
    d.name = "suq2";
    d.description = "SU_q(2) coordinate algebra generated by a, b with the fundamental corepresentation";
    d.generators = {{"a", 2, "a*", std::nullopt},
                    {"a*", 2, "a", std::nullopt},
                    {"b", 1, "b*", std::nullopt},
                    {"b*", 1, "b", std::nullopt}};
    d.rules = {
        {{"b", "a"}, {t("1/s^2", {"a", "b"})}},
        {{"b*", "a"}, {t("1/s^2", {"a", "b*"})}},
        {{"b*", "b"}, {t("1", {"b", "b*"})}},
        {{"a*", "a"}, {t("1", {}), t("-1/s^4", {"b", "b*"})}},
        {{"a", "a*"}, {t("1", {}), t("-1", {"b", "b*"})}},
        {{"b*", "a*"}, {t("s^2", {"a*", "b*"})}},
        {{"b", "a*"}, {t("s^2", {"a*", "b"})}},
    };
    d.degree = 8;
    d.coproduct = {{tt("1", {"a"}, {"a"}), tt("-1/s^2", {"b"}, {"b*"})},
                   {tt("1", {"a*"}, {"a*"}), tt("-1/s^2", {"b*"}, {"b"})},
                   {tt("1", {"a"}, {"b"}), tt("1", {"b"}, {"a*"})},
                   {tt("1", {"a*"}, {"b*"}), tt("1", {"b*"}, {"a"})}};
    d.antipode = {{t("1", {"a*"})}, {t("1", {"a"})}, {t("-1/s^2", {"b"})}, {t("-s^2", {"b*"})}};
    d.actions = {{"rho", {lit("1/s^4"), lit("s^4"), lit("1"), lit("1")}},
                 {"theta", {lit("1"), lit("1"), lit("1/s^4"), lit("s^4")}}};
    return d;
}

}  // namespace

std::vector<std::string> presentation_preset_names() { return {"uq-su2", "suq2"}; }

PresentationDef presentation_preset(const std::string& name) {
    if (name == "uq-su2") return uq_su2();
    if (name == "suq2") return suq2();
    throw DomainError("unknown presentation preset " + name);
}

std::unique_ptr<Pairing> pairing_preset(const std::string& name, int degree) {
    if (name != "pairing-uqsu2-suq2") throw DomainError("unknown pairing preset " + name);
    PresentationDef u = uq_su2(), b = suq2();
    // recursion needs words up to twice the checked length on the right side
    u.degree = std::max(u.degree, 2 * degree + 2);
    b.degree = std::max(b.degree, 2 * degree + 2);
    std::shared_ptr<const PresentedHopf> U = make_presented_hopf(u);
    std::shared_ptr<const PresentedHopf> B = make_presented_hopf(b);
    // rows K, Kinv, E, F; columns a, a*, b, b*
    std::vector<std::vector<Scalar>> table = {
        {lit("1/s"), lit("s"), lit("0"), lit("0")},
        {lit("s"), lit("1/s"), lit("0"), lit("0")},
        {lit("0"), lit("0"), lit("0"), lit("-s^2")},
        {lit("0"), lit("0"), lit("1"), lit("0")},
    };
    return std::make_unique<Pairing>(std::move(U), std::move(B), std::move(table));
}

}  // namespace hopf
