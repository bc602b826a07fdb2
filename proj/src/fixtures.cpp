#include "hopf/fixtures.hpp"

#include <algorithm>
#include <array>

#include "hopf/errors.hpp"

namespace hopf {

std::size_t FiniteGroup::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < size(); ++b)
        if (table[a][b] == identity) return b;
    throw InternalError("element " + elements[a] + " of " + name + " has no inverse");
}

FiniteGroup cyclic_group(std::size_t n) {
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    for (std::size_t a = 0; a < n; ++a) {
        g.elements.push_back(std::to_string(a));
        g.table.emplace_back();
        for (std::size_t b = 0; b < n; ++b) g.table[a].push_back((a + b) % n);
    }
    return g;
}

FiniteGroup symmetric_group_s3() {
    using Perm = std::array<std::size_t, 3>;
    const std::vector<std::pair<std::string, Perm>> perms = {
        {"e", {0, 1, 2}},   {"(12)", {1, 0, 2}},  {"(23)", {0, 2, 1}},
        {"(13)", {2, 1, 0}}, {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
    };
    FiniteGroup g;
    g.name = "S3";
    for (const auto& p : perms) g.elements.push_back(p.first);
    for (const auto& [na, a] : perms) {
        g.table.emplace_back();
        for (const auto& [nb, b] : perms) {
            // (ab)(i) = a(b(i))
            Perm c{a[b[0]], a[b[1]], a[b[2]]};
            auto it = std::find_if(perms.begin(), perms.end(), [&](const auto& p) { return p.second == c; });
            g.table.back().push_back(static_cast<std::size_t>(it - perms.begin()));
        }
    }
    return g;
}

StructureDef function_algebra(const FiniteGroup& g, const std::string& name, const std::string& prefix) {
    const std::size_t n = g.size();
    StructureDef d;
    d.name = name;
    d.description = "functions on the group " + g.name + " with pointwise product";
    for (const auto& e : g.elements) d.basis.push_back(prefix + e);
    for (std::size_t a = 0; a < n; ++a) d.mul.push_back({a, a, a, Scalar(1)});
    d.unit = Vec(n, Scalar(1));
    d.star = Matrix::identity(n);
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t k = 0; k < n; ++k) d.coproduct.push_back({g.mul(h, k), h, k, Scalar(1)});
    std::sort(d.coproduct.begin(), d.coproduct.end(),
              [](const CoEntry& x, const CoEntry& y) { return std::tie(x.a, x.p, x.q) < std::tie(y.a, y.p, y.q); });
    return d;
}

StructureDef group_algebra(const FiniteGroup& g, const std::string& name) {
    const std::size_t n = g.size();
    StructureDef d;
    d.name = name;
    d.description = "group algebra of " + g.name;
    d.basis = g.elements;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d.mul.push_back({a, b, g.mul(a, b), Scalar(1)});
    d.unit = unit_vec(n, g.identity);
    Matrix inv(n, n);
    for (std::size_t a = 0; a < n; ++a) inv(g.inverse(a), a) = Scalar(1);
    d.star = inv;
    for (std::size_t a = 0; a < n; ++a) d.coproduct.push_back({a, a, a, Scalar(1)});
    d.counit = Vec(n, Scalar(1));
    d.antipode = inv;
    return d;
}

StructureDef sweedler_h4() {
    // basis g^a x^c at index a + 2c: 1, g, x, gx; g^2 = 1, x^2 = 0, xg = -gx
    StructureDef d;
    d.name = "sweedler_h4";
    d.description = "Sweedler's Hopf algebra: g^2 = 1, x^2 = 0, xg = -gx, D(g) = g (x) g, D(x) = x (x) 1 + g (x) x";
    d.basis = {"1", "g", "x", "gx"};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            std::size_t a = i % 2, c = i / 2, b = j % 2, e = j / 2;
            if (c + e >= 2) continue;
            long sign = (c * b) % 2 ? -1 : 1;
            d.mul.push_back({i, j, (a + b) % 2 + 2 * (c + e), Scalar(sign)});
        }
    d.unit = unit_vec(4, 0);
    // g* = g, x* = x, hence (gx)* = xg = -gx
    d.star = Matrix::diagonal({Scalar(1), Scalar(1), Scalar(1), Scalar(-1)});
    d.coproduct = {
        {0, 0, 0, Scalar(1)},                        // 1 (x) 1
        {1, 1, 1, Scalar(1)},                        // g (x) g
        {2, 1, 2, Scalar(1)}, {2, 2, 0, Scalar(1)},  // g (x) x + x (x) 1
        {3, 0, 3, Scalar(1)}, {3, 3, 1, Scalar(1)},  // 1 (x) gx + gx (x) g
    };
    return d;
}

StructureDef semilattice2() {
    StructureDef d;
    d.name = "semilattice2";
    d.description = "two orthogonal projections with D(e_i) = e_i (x) e_i: a bialgebra without antipode";
    d.basis = {"e0", "e1"};
    d.mul = {{0, 0, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}};
    d.unit = Vec{Scalar(1), Scalar(1)};
    d.star = Matrix::identity(2);
    d.coproduct = {{0, 0, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}};
    return d;
}

std::vector<std::string> fixture_names() {
    return {"c_z2", "c_z4", "c_s3", "group_s3", "sweedler_h4", "semilattice2"};
}

StructureDef fixture(const std::string& name) {
    if (name == "c_z2") return function_algebra(cyclic_group(2), "c_z2", "e");
    if (name == "c_z4") {
        StructureDef d = function_algebra(cyclic_group(4), "c_z4", "e");
        auto e = [](std::size_t k) { return unit_vec(4, k); };
        d.subalgebras = {{"c_h", {e(0), e(2)}}, {"span_e1", {e(1)}}, {"full", {e(0), e(1), e(2), e(3)}}};
        d.projections = {{"indicator_h", e(0) + e(2)}, {"e1", e(1)}, {"unit", Vec(4, Scalar(1))}};
        return d;
    }
    if (name == "c_s3") {
        StructureDef d = function_algebra(symmetric_group_s3(), "c_s3", "d_");
        d.projections = {{"indicator_12", unit_vec(6, 0) + unit_vec(6, 1)}};
        return d;
    }
    if (name == "group_s3") {
        StructureDef d = group_algebra(symmetric_group_s3(), "group_s3");
        d.subalgebras = {{"scalars", {unit_vec(6, 0)}}};
        Scalar half = parse_scalar("1/2");
        d.projections = {{"average_12", half * (unit_vec(6, 0) + unit_vec(6, 1))}, {"unit", unit_vec(6, 0)}};
        return d;
    }
    if (name == "sweedler_h4") return sweedler_h4();
    if (name == "semilattice2") return semilattice2();
    throw DomainError("unknown fixture " + name);
}

}  // namespace hopf
