#pragma once

// Shipped finite examples: function algebras and group algebras of finite
// groups, Sweedler's four-dimensional algebra and a two-point semilattice
// bialgebra that is not a Hopf algebra.

#include <string>
#include <vector>

#include "hopf/definition.hpp"

namespace hopf {

// Multiplication table of a finite group on elements 0..n-1.
struct FiniteGroup {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> table;  // table[a][b] = ab
    std::size_t identity = 0;

    std::size_t size() const { return elements.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
    std::size_t inverse(std::size_t a) const;
};

FiniteGroup cyclic_group(std::size_t n);
// permutations of {1,2,3}: e, (12), (23), (13), (123), (132)
FiniteGroup symmetric_group_s3();

// C(G): pointwise product on delta functions, delta_g* = delta_g,
// D(delta_g) = sum over hk = g of delta_h (x) delta_k. Basis labels are
// prefix + element name.
StructureDef function_algebra(const FiniteGroup& g, const std::string& name, const std::string& prefix);
// C[G]: group product, g* = g^-1, D(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
StructureDef group_algebra(const FiniteGroup& g, const std::string& name);

StructureDef sweedler_h4();
StructureDef semilattice2();

// c_z2, c_z4, c_s3, group_s3, sweedler_h4, semilattice2
std::vector<std::string> fixture_names();
StructureDef fixture(const std::string& name);

}  // namespace hopf
