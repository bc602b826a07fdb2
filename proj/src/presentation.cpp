#include "hopf/presentation.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace hopf {

void add_term(WordComb& c, const Word& w, const Scalar& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = c.try_emplace(w, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) c.erase(it);
    }
}

void add_term(TensorComb& c, const Word& l, const Word& r, const Scalar& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = c.try_emplace({l, r}, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) c.erase(it);
    }
}

WordComb scaled(const WordComb& c, const Scalar& x) {
    WordComb out;
    for (const auto& [w, v] : c) add_term(out, w, v * x);
    return out;
}

namespace {

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
    return pos + lhs.size() <= w.size() && std::equal(lhs.begin(), lhs.end(), w.begin() + pos);
}

}  // namespace

Presentation::Presentation(const PresentationDef& def) : name_(def.name), degree_(def.degree) {
    if (def.generators.empty()) throw VerificationError("presentation", "no generators");
    if (def.generators.size() > 255) throw VerificationError("presentation", "too many generators");
    for (const auto& g : def.generators) {
        names_.push_back(g.name);
        weights_.push_back(g.weight);
    }
    star_.resize(names_.size());
    for (std::size_t g = 0; g < names_.size(); ++g)
        if (def.generators[g].star) star_[g] = index(*def.generators[g].star);
    for (std::size_t g = 0; g < names_.size(); ++g)
        if (star_[g] && star_[*star_[g]] != g)
            throw VerificationError("presentation", "star partners of " + names_[g] + " are not mutual");

    for (const auto& r : def.rules) {
        if (r.lhs.empty()) throw VerificationError("presentation", "rule with empty left-hand side");
        rules_.push_back({word(r.lhs), comb(r.rhs)});
    }
    for (std::size_t g = 0; g < names_.size(); ++g)
        if (def.generators[g].inverse_of) {
            const auto h = static_cast<std::uint8_t>(index(*def.generators[g].inverse_of));
            const auto gi = static_cast<std::uint8_t>(g);
            rules_.push_back({Word{h, gi}, WordComb{{Word{}, Scalar(1)}}});
            rules_.push_back({Word{gi, h}, WordComb{{Word{}, Scalar(1)}}});
        }
    for (const auto& r : rules_)
        for (const auto& [w, c] : r.rhs)
            if (!less(w, r.lhs))
                throw VerificationError("rule-orientation", "rule " + to_string(r.lhs) + " -> " + to_string(r.rhs) +
                                                                " does not decrease the monomial order");
}

Presentation::Presentation(const Presentation& o)
    : name_(o.name_), names_(o.names_), weights_(o.weights_), star_(o.star_), rules_(o.rules_), degree_(o.degree_) {}

std::size_t Presentation::index(const std::string& name) const {
    for (std::size_t g = 0; g < names_.size(); ++g)
        if (names_[g] == name) return g;
    throw DomainError("unknown generator \"" + name + "\" in " + name_);
}

bool Presentation::has_star() const {
    return std::all_of(star_.begin(), star_.end(), [](const auto& s) { return s.has_value(); });
}

Word Presentation::word(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& n : names) w.push_back(static_cast<std::uint8_t>(index(n)));
    return w;
}

WordComb Presentation::comb(const std::vector<Term>& terms) const {
    WordComb c;
    for (const auto& t : terms) add_term(c, word(t.word), t.coeff);
    return c;
}

bool Presentation::less(const Word& a, const Word& b) const {
    long wa = 0, wb = 0;
    for (auto g : a) wa += weights_[g];
    for (auto g : b) wb += weights_[g];
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t r = 0; r < rules_.size(); ++r)
            if (matches_at(w, pos, rules_[r].lhs)) return std::make_pair(pos, r);
    return std::nullopt;
}

bool Presentation::is_normal(const Word& w) const { return !find_redex(w); }

WordComb Presentation::rewrite_at(const Word& w, std::size_t pos, std::size_t rule) const {
    const Rule& r = rules_[rule];
    const Word prefix(w.begin(), w.begin() + pos), suffix(w.begin() + pos + r.lhs.size(), w.end());
    WordComb out;
    for (const auto& [m, c] : r.rhs) add_term(out, concat(concat(prefix, m), suffix), c);
    return out;
}

const WordComb& Presentation::normal_form(const Word& w, int bound) const {
    const std::size_t limit = static_cast<std::size_t>(bound_or_default(bound));
    if (w.size() > limit)
        throw DegreeBoundError("degree bound " + std::to_string(limit) + " exceeded by " + to_string(w));
    {
        std::lock_guard lock(memo_mutex_);
        auto it = memo_.find(w);
        if (it != memo_.end()) {
            if (it->second.peak > limit)
                throw DegreeBoundError("degree bound " + std::to_string(limit) + " exceeded while rewriting " +
                                       to_string(w));
            return it->second.comb;
        }
    }
    Memo m{{}, w.size()};
    if (auto redex = find_redex(w)) {
        for (const auto& [v, c] : rewrite_at(w, redex->first, redex->second)) {
            if (v.size() > limit)
                throw DegreeBoundError("degree bound " + std::to_string(limit) + " exceeded by intermediate " +
                                       to_string(v));
            const WordComb& sub = normal_form(v, bound);
            {
                std::lock_guard lock(memo_mutex_);
                m.peak = std::max(m.peak, memo_.at(v).peak);
            }
            for (const auto& [u, d] : sub) add_term(m.comb, u, c * d);
        }
    } else {
        m.comb[w] = Scalar(1);
    }
    std::lock_guard lock(memo_mutex_);
    return memo_.try_emplace(w, std::move(m)).first->second.comb;
}

WordComb Presentation::normal_form(const WordComb& c, int bound) const {
    WordComb out;
    for (const auto& [w, x] : c)
        for (const auto& [u, y] : normal_form(w, bound)) add_term(out, u, x * y);
    return out;
}

WordComb Presentation::multiply(const WordComb& a, const WordComb& b, int bound) const {
    WordComb out;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b)
            for (const auto& [w, z] : normal_form(concat(u, v), bound)) add_term(out, w, x * y * z);
    return out;
}

TensorComb Presentation::normal_form(const TensorComb& t, int bound) const {
    TensorComb out;
    for (const auto& [lr, x] : t)
        for (const auto& [l, y] : normal_form(lr.first, bound))
            for (const auto& [r, z] : normal_form(lr.second, bound)) add_term(out, l, r, x * y * z);
    return out;
}

TensorComb Presentation::multiply(const TensorComb& a, const TensorComb& b, int bound) const {
    TensorComb raw;
    for (const auto& [u, x] : a)
        for (const auto& [v, y] : b) add_term(raw, concat(u.first, v.first), concat(u.second, v.second), x * y);
    return normal_form(raw, bound);
}

WordComb Presentation::star(const WordComb& c) const {
    WordComb out;
    for (const auto& [w, x] : c) {
        Word s;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (!star_[*it]) throw DomainError("generator " + names_[*it] + " has no star partner");
            s.push_back(static_cast<std::uint8_t>(*star_[*it]));
        }
        add_term(out, s, x.conj());
    }
    return normal_form(out, static_cast<int>(std::max<std::size_t>(degree_, max_len(out))));
}

std::vector<Word> Presentation::normal_words(int max_len) const {
    std::vector<Word> out{Word{}}, frontier{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (std::size_t g = 0; g < names_.size(); ++g) {
                Word v = w;
                v.push_back(static_cast<std::uint8_t>(g));
                bool ok = true;
                for (const auto& r : rules_)
                    if (r.lhs.size() <= v.size() && matches_at(v, v.size() - r.lhs.size(), r.lhs)) {
                        ok = false;
                        break;
                    }
                if (ok) next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return less(a, b); });
    return out;
}

ConfluenceReport Presentation::check_confluence(int max_degree) const {
    ConfluenceReport rep;
    rep.degree = max_degree;
    auto test = [&](const Word& w, std::size_t ra, std::size_t pa, std::size_t rb, std::size_t pb) {
        if (rep.failure || static_cast<int>(w.size()) > max_degree) return;
        ++rep.overlaps_checked;
        WordComb a = normal_form(rewrite_at(w, pa, ra), max_degree);
        WordComb b = normal_form(rewrite_at(w, pb, rb), max_degree);
        if (a != b) rep.failure = Overlap{w, ra, rb, std::move(a), std::move(b)};
    };
    for (std::size_t i = 0; i < rules_.size(); ++i)
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& li = rules_[i].lhs;
            const Word& lj = rules_[j].lhs;
            // suffix of li equals prefix of lj
            for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k)
                if (std::equal(li.end() - k, li.end(), lj.begin())) {
                    const Word w = concat(li, Word(lj.begin() + k, lj.end()));
                    test(w, i, 0, j, li.size() - k);
                }
            // lj inside li
            if (i != j && lj.size() <= li.size())
                for (std::size_t p = 0; p + lj.size() <= li.size(); ++p)
                    if (matches_at(li, p, lj)) test(li, i, 0, j, p);
        }
    return rep;
}

std::string Presentation::to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "\xC2\xB7";
        s += names_[w[i]];
    }
    return s;
}

namespace {

std::string term_string(const Scalar& c, const std::string& w, bool first) {
    std::string s = c.to_string();
    bool negative = false;
    if (!first && s.front() == '-' && s.find_first_of(" /") == std::string::npos) {
        negative = true;
        s = s.substr(1);
    }
    std::string body;
    if (w == "1") body = s;
    else if (s == "1") body = w;
    else if (s == "-1") body = "-" + w;
    else body = (s.find(' ') != std::string::npos || s.find('/') != std::string::npos ? "(" + s + ")" : s) + "\xC2\xB7" + w;
    if (first) return body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace

std::string Presentation::to_string(const WordComb& c) const {
    if (c.empty()) return "0";
    std::vector<const Word*> ws;
    for (const auto& [w, x] : c) ws.push_back(&w);
    std::sort(ws.begin(), ws.end(), [&](const Word* a, const Word* b) { return less(*b, *a); });
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) s += term_string(c.at(*ws[i]), to_string(*ws[i]), i == 0);
    return s;
}

std::string Presentation::to_string(const TensorComb& c) const {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [lr, x] : c) {
        s += term_string(x, to_string(lr.first) + " (x) " + to_string(lr.second), first);
        first = false;
    }
    return s;
}

// ------------------------------------------------------------------ morphisms

namespace {

std::size_t image_len(const GenMorphism& m) {
    std::size_t n = 1;
    for (const auto& c : m.images)
        for (const auto& [w, x] : c) n = std::max(n, w.size());
    for (const auto& c : m.tensor_images)
        for (const auto& [w, x] : c) n = std::max({n, w.first.size(), w.second.size()});
    return n;
}

}  // namespace

std::size_t max_len(const WordComb& c) {
    std::size_t n = 0;
    for (const auto& [w, x] : c) n = std::max(n, w.size());
    return n;
}

WordComb apply_map(const Presentation& target, const GenMorphism& m, const WordComb& c, int bound) {
    WordComb out;
    for (const auto& [w, x] : c) {
        const int b = bound >= 0 ? bound
                                 : static_cast<int>(std::max<std::size_t>(target.degree(), w.size() * image_len(m)));
        WordComb acc{{Word{}, Scalar(1)}};
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto g = m.anti ? w[w.size() - 1 - i] : w[i];
            acc = target.multiply(acc, m.images.at(g), b);
        }
        for (const auto& [u, y] : acc) add_term(out, u, x * y);
    }
    return out;
}

TensorComb apply_coproduct(const Presentation& target, const GenMorphism& m, const WordComb& c, int bound) {
    TensorComb out;
    for (const auto& [w, x] : c) {
        const int b = bound >= 0 ? bound
                                 : static_cast<int>(std::max<std::size_t>(target.degree(), w.size() * image_len(m)));
        TensorComb acc{{{Word{}, Word{}}, Scalar(1)}};
        for (auto g : w) acc = target.multiply(acc, m.tensor_images.at(g), b);
        for (const auto& [lr, y] : acc) add_term(out, lr.first, lr.second, x * y);
    }
    return out;
}

Scalar apply_counit(const GenMorphism& m, const WordComb& c) {
    Scalar out;
    for (const auto& [w, x] : c) {
        Scalar p = x;
        for (auto g : w) p *= m.values.at(g);
        out += p;
    }
    return out;
}

MorphismCheck verify_gen_morphism(const Presentation& source, const Presentation& target, const GenMorphism& m) {
    MorphismCheck out;
    for (const auto& r : source.rules()) {
        const WordComb lhs{{r.lhs, Scalar(1)}};
        std::string l, rr;
        bool equal = false;
        switch (m.kind) {
            case GenMorphism::Kind::counit: {
                const Scalar a = apply_counit(m, lhs), b = apply_counit(m, r.rhs);
                equal = a == b;
                l = a.to_string();
                rr = b.to_string();
                break;
            }
            case GenMorphism::Kind::coproduct: {
                const TensorComb a = apply_coproduct(target, m, lhs), b = apply_coproduct(target, m, r.rhs);
                equal = a == b;
                l = target.to_string(a);
                rr = target.to_string(b);
                break;
            }
            default: {
                const WordComb a = apply_map(target, m, lhs), b = apply_map(target, m, r.rhs);
                equal = a == b;
                l = target.to_string(a);
                rr = target.to_string(b);
            }
        }
        if (!equal) {
            out.passed = false;
            out.failure = "relation " + source.to_string(r.lhs) + " = " + source.to_string(r.rhs) + " maps to " + l +
                          " != " + rr;
            return out;
        }
    }
    return out;
}

// ------------------------------------------------------------------ actions

Scalar DiagonalAction::eigenvalue(const Word& w) const {
    Scalar e(1);
    for (auto g : w) e *= eigenvalues.at(g);
    return e;
}

WordComb DiagonalAction::apply(const WordComb& c) const {
    WordComb out;
    for (const auto& [w, x] : c) add_term(out, w, x * eigenvalue(w));
    return out;
}

DiagonalAction DiagonalAction::inverse() const {
    DiagonalAction a{name + "^-1", {}};
    for (const auto& e : eigenvalues) a.eigenvalues.push_back(e.inverse());
    return a;
}

ActionCheck check_action(const Presentation& p, const DiagonalAction& a, const SpecPoints& points) {
    ActionCheck out;
    if (a.eigenvalues.size() != p.generators())
        throw VerificationError("action", "action " + a.name + " needs one eigenvalue per generator");
    for (std::size_t g = 0; g < p.generators(); ++g)
        if (!positive_at(a.eigenvalues[g], points)) {
            out.positive = false;
            out.failure = "eigenvalue " + a.eigenvalues[g].to_string() + " of " + p.generator(g) + " is not positive";
            break;
        }
    for (const auto& r : p.rules()) {
        const Scalar e = a.eigenvalue(r.lhs);
        for (const auto& [w, x] : r.rhs)
            if (a.eigenvalue(w) != e) {
                out.homogeneous = false;
                if (out.failure.empty())
                    out.failure = "rule " + p.to_string(r.lhs) + " mixes eigenvalues " + e.to_string() + " and " +
                                  a.eigenvalue(w).to_string();
            }
    }
    return out;
}

// ------------------------------------------------------------------ Hopf data

const DiagonalAction& PresentedHopf::action(const std::string& name) const {
    for (const auto& a : actions)
        if (a.name == name) return a;
    throw DomainError("no action named " + name + " on " + p().name());
}

Scalar PresentedHopf::counit_of(const Word& w) const { return apply_counit(counit, WordComb{{w, Scalar(1)}}); }

const TensorComb& PresentedHopf::coproduct_of(const Word& w) const {
    {
        std::lock_guard lock(memo_mutex_);
        auto it = co_memo_.find(w);
        if (it != co_memo_.end()) return it->second;
    }
    TensorComb t = apply_coproduct(p(), coproduct, WordComb{{w, Scalar(1)}});
    std::lock_guard lock(memo_mutex_);
    return co_memo_.try_emplace(w, std::move(t)).first->second;
}

std::unique_ptr<PresentedHopf> make_presented_hopf(const PresentationDef& def) {
    auto h = std::make_unique<PresentedHopf>();
    h->algebra = std::make_shared<const Presentation>(def);
    const Presentation& p = *h->algebra;
    const std::size_t n = p.generators();
    if (def.coproduct.size() != n || def.antipode.size() != n)
        throw VerificationError("presentation", "coproduct and antipode images are required for every generator");

    h->coproduct.kind = GenMorphism::Kind::coproduct;
    for (std::size_t g = 0; g < n; ++g) {
        TensorComb t;
        for (const auto& term : def.coproduct[g]) add_term(t, p.word(term.left), p.word(term.right), term.coeff);
        h->coproduct.tensor_images.push_back(p.normal_form(t));
    }
    h->antipode.kind = GenMorphism::Kind::antipode;
    h->antipode.anti = true;
    for (std::size_t g = 0; g < n; ++g) h->antipode.images.push_back(p.normal_form(p.comb(def.antipode[g])));

    // (eps (x) id)D(g) = g and (id (x) eps)D(g) = g; linear because every
    // tensor factor is a single letter or empty
    LinearSystem sys(n);
    for (std::size_t g = 0; g < n; ++g) {
        for (int side = 0; side < 2; ++side) {
            std::map<Word, std::pair<Vec, Scalar>> rows;
            for (const auto& [lr, c] : h->coproduct.tensor_images[g]) {
                const Word& eaten = side == 0 ? lr.first : lr.second;
                const Word& kept = side == 0 ? lr.second : lr.first;
                auto& row = rows.try_emplace(kept, Vec(n), Scalar()).first->second;
                if (eaten.empty()) row.second += c;
                else if (eaten.size() == 1) row.first[eaten[0]] += c;
                else
                    throw DomainError("counit solving needs coproduct factors of length <= 1 (generator " +
                                      p.generator(g) + ")");
            }
            rows.try_emplace(Word{static_cast<std::uint8_t>(g)}, Vec(n), Scalar());
            for (const auto& [w, row] : rows) {
                const bool is_g = w.size() == 1 && w[0] == g;
                sys.add(row.first, Scalar(is_g ? 1 : 0) - row.second);
            }
        }
    }
    const auto sol = sys.solution();
    if (!sol.consistent) throw VerificationError("counit", "counit laws on generators have no solution");
    if (!sol.is_point())
        throw VerificationError("counit", "counit solution space has dimension " + std::to_string(sol.dimension()));
    h->counit.kind = GenMorphism::Kind::counit;
    h->counit.values = sol.particular;
    h->counit_solved = true;
    if (def.counit && *def.counit != h->counit.values)
        throw VerificationError("declared-counit", "declared counit differs from the solved one");

    for (const auto& a : def.actions) h->actions.push_back({a.name, a.eigenvalues});
    return h;
}

namespace {

using Triple = std::map<std::array<Word, 3>, Scalar>;

void add3(Triple& t, const Word& a, const Word& b, const Word& c, const Scalar& x) {
    if (x.is_zero()) return;
    auto [it, inserted] = t.try_emplace({a, b, c}, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

std::vector<HopfLawCheck> check_presented_hopf(const PresentedHopf& h) {
    const Presentation& p = h.p();
    std::vector<HopfLawCheck> out;
    auto morph = [&](const char* law, const GenMorphism& m) {
        auto r = verify_gen_morphism(p, p, m);
        out.push_back({law, r.passed, r.failure});
    };
    morph("coproduct respects relations", h.coproduct);
    morph("antipode respects relations", h.antipode);
    morph("counit respects relations", h.counit);

    HopfLawCheck counit{"counit laws", true, ""}, antipode{"antipode laws", true, ""},
        coassoc{"coassociativity", true, ""};
    for (std::size_t g = 0; g < p.generators(); ++g) {
        const Word gw{static_cast<std::uint8_t>(g)};
        const WordComb gc{{gw, Scalar(1)}};
        const TensorComb& d = h.coproduct_of(gw);
        WordComb left, right, sl, sr;
        for (const auto& [lr, c] : d) {
            add_term(left, lr.second, c * h.counit_of(lr.first));
            add_term(right, lr.first, c * h.counit_of(lr.second));
            const WordComb a{{lr.first, Scalar(1)}}, b{{lr.second, Scalar(1)}};
            for (const auto& [w, x] : p.multiply(apply_map(p, h.antipode, a), b)) add_term(sl, w, c * x);
            for (const auto& [w, x] : p.multiply(a, apply_map(p, h.antipode, b))) add_term(sr, w, c * x);
        }
        left = p.normal_form(left);
        right = p.normal_form(right);
        if (counit.passed && (left != gc || right != gc)) {
            counit.passed = false;
            counit.witness = p.generator(g);
        }
        WordComb eps1;
        add_term(eps1, Word{}, h.counit.values[g]);
        if (antipode.passed && (sl != eps1 || sr != eps1)) {
            antipode.passed = false;
            antipode.witness = p.generator(g);
        }
        Triple t1, t2;
        for (const auto& [lr, c] : d) {
            for (const auto& [ab, x] : h.coproduct_of(lr.first)) add3(t1, ab.first, ab.second, lr.second, c * x);
            for (const auto& [ab, x] : h.coproduct_of(lr.second)) add3(t2, lr.first, ab.first, ab.second, c * x);
        }
        if (coassoc.passed && t1 != t2) {
            coassoc.passed = false;
            coassoc.witness = p.generator(g);
        }
    }
    out.push_back(counit);
    out.push_back(antipode);
    out.push_back(coassoc);

    if (p.has_star()) {
        HopfLawCheck co{"D(g*) = D(g)*", true, ""}, s{"S(S(g)*)* = g", true, ""}, e{"eps(g*) = conj eps(g)", true, ""};
        for (std::size_t g = 0; g < p.generators(); ++g) {
            const Word gw{static_cast<std::uint8_t>(g)};
            const Word gs{static_cast<std::uint8_t>(*p.star_of(g))};
            TensorComb starred;
            for (const auto& [lr, c] : h.coproduct_of(gw)) {
                const WordComb l = p.star(WordComb{{lr.first, Scalar(1)}}), r = p.star(WordComb{{lr.second, Scalar(1)}});
                for (const auto& [lw, x] : l)
                    for (const auto& [rw, y] : r) add_term(starred, lw, rw, c.conj() * x * y);
            }
            if (co.passed && p.normal_form(starred) != h.coproduct_of(gs)) {
                co.passed = false;
                co.witness = p.generator(g);
            }
            const WordComb gc{{gw, Scalar(1)}};
            if (s.passed && p.star(apply_map(p, h.antipode, p.star(apply_map(p, h.antipode, gc)))) != gc) {
                s.passed = false;
                s.witness = p.generator(g);
            }
            if (e.passed && h.counit.values[*p.star_of(g)] != h.counit.values[g].conj()) {
                e.passed = false;
                e.witness = p.generator(g);
            }
        }
        out.push_back(co);
        out.push_back(s);
        out.push_back(e);
    }
    return out;
}

}  // namespace hopf
