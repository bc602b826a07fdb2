#pragma once

// Definition files ("hopf-forge/1"): JSON documents describing either a
// finite-dimensional Hopf algebra by structure constants or a presented
// algebra by generators and rewrite rules. Scalars are stored as literals.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopf/hopf.hpp"

namespace hopf {

inline constexpr const char* format_version = "hopf-forge/1";

struct CoEntry {
    std::size_t a, p, q;  // D(e_a) contains value * e_p (x) e_q
    Scalar value;
};

struct NamedBasis {
    std::string name;
    std::vector<Vec> vectors;
};

struct NamedVector {
    std::string name;
    Vec vector;
};

struct StructureDef {
    std::string name;
    std::string description;
    std::vector<std::string> basis;
    std::vector<MulEntry> mul;
    std::optional<Vec> unit;
    std::optional<Matrix> star;  // column j = e_j*
    std::vector<CoEntry> coproduct;
    std::optional<Vec> counit;
    std::optional<Matrix> antipode;  // column j = S(e_j)
    std::vector<NamedBasis> subalgebras;
    std::vector<NamedVector> projections;

    std::size_t dim() const { return basis.size(); }
    Matrix coproduct_matrix() const;
    // build_algebra followed by attach_coproduct (no counit/antipode yet)
    QGData carrier() const;
};

// Round-trip helper: the definition of an already solved Hopf algebra.
StructureDef structure_def_from(const QGData& q, std::string name, std::string description);

// word = generator names; coefficient times word
struct Term {
    Scalar coeff;
    std::vector<std::string> word;
};

struct TensorTerm {
    Scalar coeff;
    std::vector<std::string> left, right;
};

struct GeneratorDef {
    std::string name;
    int weight = 1;
    std::optional<std::string> star;        // name of g*
    std::optional<std::string> inverse_of;  // g is the formal inverse of this generator
};

struct RuleDef {
    std::vector<std::string> lhs;
    std::vector<Term> rhs;
};

struct ActionDef {
    std::string name;
    std::vector<Scalar> eigenvalues;  // one per generator, in generator order
};

struct PresentationDef {
    std::string name;
    std::string description;
    std::vector<GeneratorDef> generators;
    std::vector<RuleDef> rules;  // inverse rules are implied by inverse_of
    int degree = 6;
    std::vector<std::vector<TensorTerm>> coproduct;  // per generator; empty when absent
    std::vector<std::vector<Term>> antipode;         // per generator; empty when absent
    std::optional<std::vector<Scalar>> counit;       // per generator
    std::vector<ActionDef> actions;
};

using Definition = std::variant<StructureDef, PresentationDef>;

// Throws ParseError (malformed JSON, wrong version, bad literal with its
// location in the document).
Definition parse_definition(std::string_view text);
Definition load_definition(const std::string& path);

// Canonical serialization: fixed key order, sorted sparse triples, two-space
// indentation, trailing newline.
std::string save_definition(const Definition& d);

}  // namespace hopf
