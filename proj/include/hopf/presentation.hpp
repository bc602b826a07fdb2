#pragma once

// Presented *-algebras: words in generators, rewriting to normal form under a
// weighted degree-lexicographic order, generator-defined morphisms and
// diagonal actions.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf/definition.hpp"

namespace hopf {

using Word = std::vector<std::uint8_t>;
using WordComb = std::map<Word, Scalar>;
using TensorComb = std::map<std::pair<Word, Word>, Scalar>;

void add_term(WordComb& c, const Word& w, const Scalar& x);
void add_term(TensorComb& c, const Word& l, const Word& r, const Scalar& x);
WordComb scaled(const WordComb& c, const Scalar& x);
// length of the longest word
std::size_t max_len(const WordComb& c);

struct Rule {
    Word lhs;
    WordComb rhs;
};

struct Overlap {
    Word word;
    std::size_t rule_a, rule_b;
    WordComb via_a, via_b;
};

struct ConfluenceReport {
    std::size_t overlaps_checked = 0;
    int degree = 0;
    std::optional<Overlap> failure;
    bool confluent() const { return !failure; }
};

class Presentation {
public:
    // Builds generators and rules (adding g g^-1 -> 1 for formal inverses) and
    // checks that every rule strictly decreases the monomial order.
    explicit Presentation(const PresentationDef& def);
    Presentation(const Presentation& o);
    Presentation& operator=(const Presentation&) = delete;

    const std::string& name() const noexcept { return name_; }
    std::size_t generators() const noexcept { return names_.size(); }
    const std::string& generator(std::size_t g) const { return names_[g]; }
    std::size_t index(const std::string& name) const;
    int weight(std::size_t g) const { return weights_[g]; }
    std::optional<std::size_t> star_of(std::size_t g) const { return star_[g]; }
    bool has_star() const;
    int degree() const noexcept { return degree_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    Word word(const std::vector<std::string>& names) const;
    WordComb comb(const std::vector<Term>& terms) const;

    // weighted degree, then lexicographic in generator order
    bool less(const Word& a, const Word& b) const;
    bool is_normal(const Word& w) const;

    // Leftmost rewriting to a fixed point. Throws DegreeBoundError when a word
    // longer than bound (default: degree()) appears.
    const WordComb& normal_form(const Word& w, int bound = -1) const;
    WordComb normal_form(const WordComb& c, int bound = -1) const;
    WordComb multiply(const WordComb& a, const WordComb& b, int bound = -1) const;
    TensorComb normal_form(const TensorComb& t, int bound = -1) const;
    TensorComb multiply(const TensorComb& a, const TensorComb& b, int bound = -1) const;

    // conjugate-linear anti-involution extending the generator star partners
    WordComb star(const WordComb& c) const;

    // normal words of length <= max_len, in monomial order
    std::vector<Word> normal_words(int max_len) const;

    // critical pairs of all rule overlaps with word length <= max_degree
    ConfluenceReport check_confluence(int max_degree) const;

    std::string to_string(const Word& w) const;
    std::string to_string(const WordComb& c) const;
    std::string to_string(const TensorComb& c) const;

private:
    int bound_or_default(int b) const { return b < 0 ? degree_ : b; }
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;
    WordComb rewrite_at(const Word& w, std::size_t pos, std::size_t rule) const;

    std::string name_;
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::vector<std::optional<std::size_t>> star_;
    std::vector<Rule> rules_;
    int degree_ = 6;
    struct Memo {
        WordComb comb;
        std::size_t peak;  // longest word met while rewriting
    };
    mutable std::mutex memo_mutex_;
    mutable std::map<Word, Memo> memo_;
};

// Morphism defined on generators.
struct GenMorphism {
    enum class Kind { coproduct, antipode, counit, algebra_map };
    Kind kind = Kind::algebra_map;
    bool anti = false;
    std::vector<WordComb> images;          // antipode, algebra_map
    std::vector<TensorComb> tensor_images; // coproduct
    std::vector<Scalar> values;            // counit
};

WordComb apply_map(const Presentation& target, const GenMorphism& m, const WordComb& c, int bound = -1);
TensorComb apply_coproduct(const Presentation& target, const GenMorphism& m, const WordComb& c, int bound = -1);
Scalar apply_counit(const GenMorphism& m, const WordComb& c);

struct MorphismCheck {
    bool passed = true;
    std::string failure;  // offending rule and both sides
};

// m(lhs) = m(rhs) in normal form for every rule of source.
MorphismCheck verify_gen_morphism(const Presentation& source, const Presentation& target, const GenMorphism& m);

// Scales each generator; multiplicative on words.
struct DiagonalAction {
    std::string name;
    std::vector<Scalar> eigenvalues;

    Scalar eigenvalue(const Word& w) const;
    WordComb apply(const WordComb& c) const;
    DiagonalAction inverse() const;
};

struct ActionCheck {
    bool positive = true;      // self-adjoint and > 0 at every spec point
    bool homogeneous = true;   // every rule is an eigen-relation, so the action commutes with normal_form
    std::string failure;
};

ActionCheck check_action(const Presentation& p, const DiagonalAction& a, const SpecPoints& points);

// Presentation plus generator-defined Hopf structure.
struct PresentedHopf {
    std::shared_ptr<const Presentation> algebra;
    GenMorphism coproduct, antipode, counit;
    std::vector<DiagonalAction> actions;
    bool counit_solved = false;

    const Presentation& p() const { return *algebra; }
    const DiagonalAction& action(const std::string& name) const;
    Scalar counit_of(const Word& w) const;
    const TensorComb& coproduct_of(const Word& w) const;

private:
    mutable std::mutex memo_mutex_;
    mutable std::map<Word, TensorComb> co_memo_;
};

// Builds the presentation, coproduct and antipode images. The counit is solved
// from the counit laws on generators (declared values must agree). Throws
// VerificationError when the counit system is inconsistent or not unique.
std::unique_ptr<PresentedHopf> make_presented_hopf(const PresentationDef& def);

struct HopfLawCheck {
    std::string law;
    bool passed = true;
    std::string witness;
};

// Relations respected by D, S, eps; counit, antipode, coassociativity and
// star compatibility on generators.
std::vector<HopfLawCheck> check_presented_hopf(const PresentedHopf& h);

}  // namespace hopf
