#pragma once

// Bilinear pairing <X, c> between two presented Hopf algebras, extended from
// a generator table with <D(c), X (x) Y> = <c, XY> conventions on both sides.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopf/presentation.hpp"

namespace hopf {

class Pairing {
public:
    enum class Route { left_first, right_first };

    // table[g][h] = <g, h> for generators g of left, h of right
    Pairing(std::shared_ptr<const PresentedHopf> left, std::shared_ptr<const PresentedHopf> right,
            std::vector<std::vector<Scalar>> table);

    const PresentedHopf& left() const { return *u_; }
    const PresentedHopf& right() const { return *b_; }
    const Scalar& table(std::size_t g, std::size_t h) const { return table_[g][h]; }

    // left_first splits products on the left factor before the right one
    Scalar pair(const Word& x, const Word& c, Route route = Route::left_first) const;
    Scalar pair(const WordComb& x, const WordComb& c, Route route = Route::left_first) const;
    // <X1 (x) X2, c1 (x) c2> = <X1, c1><X2, c2>
    Scalar pair(const TensorComb& x, const TensorComb& c) const;

private:
    Scalar compute(const Word& x, const Word& c, Route route) const;

    std::shared_ptr<const PresentedHopf> u_, b_;
    std::vector<std::vector<Scalar>> table_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<Word, Word>, Scalar> memo_[2];
};

struct PairingAxiomReport {
    int degree = 0;
    std::vector<HopfLawCheck> checks;
    std::vector<std::size_t> counts;  // instances checked, parallel to checks
    bool passed() const;
};

// For generators X, Y and normal words x, y, c of total length <= degree:
// <D(X), x (x) y> = <X, xy>, <XY, c> = <X (x) Y, D(c)>, <S(X), c> = <X, S(c)>,
// <X*, c> = conj <X, S(c)*>, and route independence for all normal X, c.
PairingAxiomReport check_pairing_axioms(const Pairing& p, int degree);

struct KappaReport {
    int degree = 0;
    std::size_t words = 0;
    bool passed = true;
    std::string witness;
    // (word, eps(kappa(c)), <K^-4, c>) for the words of length <= 1
    std::vector<std::tuple<std::string, Scalar, Scalar>> samples;
};

// kappa = rho^-1 S^2 on the right algebra; checks eps(kappa(c)) = <x, c> for
// every normal word c of length <= degree, where x is the given left word.
KappaReport kappa_functional_check(const Pairing& p, const Word& x, int degree, const std::string& modular_action = "rho");

// rank of the matrix <X, c> over normal words of length <= degree
std::size_t pairing_gram_rank(const Pairing& p, int degree);

struct ShiftReport {
    std::size_t words = 0;
    int copies = 0;
    bool distinct = true;
    std::string witness;
};

// for each normal X of length <= degree, the normal forms of g^n X for
// n = 0..copies-1 are single words and pairwise distinct
ShiftReport shifted_words_distinct(const Presentation& p, const Word& g_power, int degree, int copies);

// Built-in presentations "uq-su2", "suq2" and the pairing "pairing-uqsu2-suq2".
std::vector<std::string> presentation_preset_names();
PresentationDef presentation_preset(const std::string& name);
std::unique_ptr<Pairing> pairing_preset(const std::string& name, int degree);

}  // namespace hopf
