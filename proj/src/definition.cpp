#include "hopf/definition.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hopf {

using json = nlohmann::ordered_json;

Matrix StructureDef::coproduct_matrix() const {
    const std::size_t d = dim();
    Matrix m(d * d, d);
    for (const auto& e : coproduct) {
        if (e.a >= d || e.p >= d || e.q >= d) throw VerificationError("coproduct-shape", "coproduct index out of range");
        m(e.p * d + e.q, e.a) += e.value;
    }
    return m;
}

QGData StructureDef::carrier() const {
    return attach_coproduct(build_algebra(basis, mul, unit, star), coproduct_matrix());
}

StructureDef structure_def_from(const QGData& q, std::string name, std::string description) {
    const FinAlgebra& a = q.algebra();
    const std::size_t d = a.dim();
    StructureDef s;
    s.name = std::move(name);
    s.description = std::move(description);
    s.basis = a.labels();
    s.mul = a.entries();
    if (a.has_unit()) s.unit = a.unit();
    if (a.has_star()) s.star = a.star_matrix();
    const Matrix& m = q.coproduct_matrix();
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t r = 0; r < d; ++r)
                if (!m(p * d + r, c).is_zero()) s.coproduct.push_back({c, p, r, m(p * d + r, c)});
    if (q.has_counit()) s.counit = q.counit().values();
    if (q.has_antipode()) s.antipode = q.antipode_matrix();
    return s;
}

namespace {

// ---------------------------------------------------------------- reading

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what, 0);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

const json* optional_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string str(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
}

Scalar lit(const json& v, const std::string& where) {
    const std::string text = str(v, where);
    try {
        return parse_scalar(text);
    } catch (const ParseError& e) {
        throw ParseError(where + ": bad scalar literal \"" + text + "\": " + e.what(), e.position());
    } catch (const DomainError& e) {
        throw ParseError(where + ": bad scalar literal \"" + text + "\": " + e.what(), 0);
    }
}

std::size_t index(const json& v, const std::string& where, std::size_t bound) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(where, "expected a non-negative integer");
    const auto i = v.get<std::size_t>();
    if (i >= bound) fail(where, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(bound) + ")");
    return i;
}

const json& array(const json& v, const std::string& where, std::optional<std::size_t> size = std::nullopt) {
    if (!v.is_array()) fail(where, "expected an array");
    if (size && v.size() != *size) fail(where, "expected " + std::to_string(*size) + " entries");
    return v;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Vec dense(const json& v, const std::string& where, std::size_t d) {
    array(v, where, d);
    Vec out;
    for (std::size_t i = 0; i < d; ++i) out.push_back(lit(v[i], at(where, i)));
    return out;
}

Matrix sparse_map(const json& v, const std::string& where, std::size_t d) {
    array(v, where);
    Matrix m(d, d);
    for (std::size_t n = 0; n < v.size(); ++n) {
        const std::string w = at(where, n);
        array(v[n], w, 3);
        const std::size_t j = index(v[n][0], at(w, 0), d), k = index(v[n][1], at(w, 1), d);
        m(k, j) += lit(v[n][2], at(w, 2));
    }
    return m;
}

StructureDef read_structure(const json& doc) {
    StructureDef s;
    s.name = str(field(doc, "name", "$"), "name");
    if (auto* d = optional_field(doc, "description")) s.description = str(*d, "description");
    const json& basis = array(field(doc, "basis", "$"), "basis");
    for (std::size_t i = 0; i < basis.size(); ++i) s.basis.push_back(str(basis[i], at("basis", i)));
    const std::size_t d = s.basis.size();
    if (d == 0) fail("basis", "empty basis");

    const json& mul = array(field(doc, "mul", "$"), "mul");
    for (std::size_t n = 0; n < mul.size(); ++n) {
        const std::string w = at("mul", n);
        array(mul[n], w, 4);
        s.mul.push_back({index(mul[n][0], at(w, 0), d), index(mul[n][1], at(w, 1), d), index(mul[n][2], at(w, 2), d),
                         lit(mul[n][3], at(w, 3))});
    }
    if (auto* u = optional_field(doc, "unit")) s.unit = dense(*u, "unit", d);
    if (auto* st = optional_field(doc, "star")) s.star = sparse_map(*st, "star", d);

    const json& co = array(field(doc, "coproduct", "$"), "coproduct");
    for (std::size_t n = 0; n < co.size(); ++n) {
        const std::string w = at("coproduct", n);
        array(co[n], w, 4);
        s.coproduct.push_back({index(co[n][0], at(w, 0), d), index(co[n][1], at(w, 1), d),
                               index(co[n][2], at(w, 2), d), lit(co[n][3], at(w, 3))});
    }
    if (auto* e = optional_field(doc, "counit")) s.counit = dense(*e, "counit", d);
    if (auto* a = optional_field(doc, "antipode")) s.antipode = sparse_map(*a, "antipode", d);

    if (auto* subs = optional_field(doc, "subalgebras")) {
        array(*subs, "subalgebras");
        for (std::size_t n = 0; n < subs->size(); ++n) {
            const std::string w = at("subalgebras", n);
            NamedBasis b;
            b.name = str(field((*subs)[n], "name", w), w + ".name");
            const json& vs = array(field((*subs)[n], "basis", w), w + ".basis");
            for (std::size_t k = 0; k < vs.size(); ++k) b.vectors.push_back(dense(vs[k], at(w + ".basis", k), d));
            s.subalgebras.push_back(std::move(b));
        }
    }
    if (auto* ps = optional_field(doc, "projections")) {
        array(*ps, "projections");
        for (std::size_t n = 0; n < ps->size(); ++n) {
            const std::string w = at("projections", n);
            s.projections.push_back({str(field((*ps)[n], "name", w), w + ".name"),
                                     dense(field((*ps)[n], "vector", w), w + ".vector", d)});
        }
    }
    return s;
}

std::vector<std::string> word(const json& v, const std::string& where, const std::map<std::string, std::size_t>& gens) {
    array(v, where);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string g = str(v[i], at(where, i));
        if (!gens.count(g)) fail(at(where, i), "unknown generator \"" + g + "\"");
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Term> terms(const json& v, const std::string& where, const std::map<std::string, std::size_t>& gens) {
    array(v, where);
    std::vector<Term> out;
    for (std::size_t n = 0; n < v.size(); ++n) {
        const std::string w = at(where, n);
        array(v[n], w, 2);
        out.push_back({lit(v[n][0], at(w, 0)), word(v[n][1], at(w, 1), gens)});
    }
    return out;
}

std::vector<TensorTerm> tensor_terms(const json& v, const std::string& where,
                                     const std::map<std::string, std::size_t>& gens) {
    array(v, where);
    std::vector<TensorTerm> out;
    for (std::size_t n = 0; n < v.size(); ++n) {
        const std::string w = at(where, n);
        array(v[n], w, 3);
        out.push_back({lit(v[n][0], at(w, 0)), word(v[n][1], at(w, 1), gens), word(v[n][2], at(w, 2), gens)});
    }
    return out;
}

PresentationDef read_presentation(const json& doc) {
    PresentationDef p;
    p.name = str(field(doc, "name", "$"), "name");
    if (auto* d = optional_field(doc, "description")) p.description = str(*d, "description");
    const json& gens = array(field(doc, "generators", "$"), "generators");
    std::map<std::string, std::size_t> names;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string w = at("generators", i);
        GeneratorDef g;
        g.name = str(field(gens[i], "name", w), w + ".name");
        if (g.name.empty() || names.count(g.name)) fail(w, "empty or duplicate generator name");
        if (auto* x = optional_field(gens[i], "weight")) {
            if (!x->is_number_integer() || x->get<int>() < 1) fail(w + ".weight", "expected a positive integer");
            g.weight = x->get<int>();
        }
        if (auto* x = optional_field(gens[i], "star")) g.star = str(*x, w + ".star");
        if (auto* x = optional_field(gens[i], "inverse_of")) g.inverse_of = str(*x, w + ".inverse_of");
        names[g.name] = i;
        p.generators.push_back(std::move(g));
    }
    for (const auto& g : p.generators) {
        if (g.star && !names.count(*g.star)) fail("generators", "unknown star partner \"" + *g.star + "\"");
        if (g.inverse_of && !names.count(*g.inverse_of))
            fail("generators", "unknown inverse partner \"" + *g.inverse_of + "\"");
    }

    const json& rules = array(field(doc, "rules", "$"), "rules");
    for (std::size_t n = 0; n < rules.size(); ++n) {
        const std::string w = at("rules", n);
        p.rules.push_back({word(field(rules[n], "lhs", w), w + ".lhs", names),
                           terms(field(rules[n], "rhs", w), w + ".rhs", names)});
    }
    if (auto* d = optional_field(doc, "degree")) {
        if (!d->is_number_integer() || d->get<int>() < 1) fail("degree", "expected a positive integer");
        p.degree = d->get<int>();
    }

    auto per_generator = [&](const char* key, auto read) {
        using T = decltype(read(json(), std::string()));
        std::vector<T> out;
        const json* obj = optional_field(doc, key);
        if (!obj) return out;
        if (!obj->is_object()) fail(key, "expected an object keyed by generator");
        for (auto it = obj->begin(); it != obj->end(); ++it)
            if (!names.count(it.key())) fail(key, "unknown generator \"" + it.key() + "\"");
        out.resize(p.generators.size());
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
            const std::string& g = p.generators[i].name;
            auto it = obj->find(g);
            if (it == obj->end()) fail(key, "no image for generator \"" + g + "\"");
            out[i] = read(*it, std::string(key) + "." + g);
        }
        return out;
    };
    p.coproduct = per_generator("coproduct", [&](const json& v, const std::string& w) { return tensor_terms(v, w, names); });
    p.antipode = per_generator("antipode", [&](const json& v, const std::string& w) { return terms(v, w, names); });
    auto eps = per_generator("counit", [&](const json& v, const std::string& w) { return lit(v, w); });
    if (!eps.empty()) p.counit = std::move(eps);

    if (auto* acts = optional_field(doc, "actions")) {
        array(*acts, "actions");
        for (std::size_t n = 0; n < acts->size(); ++n) {
            const std::string w = at("actions", n);
            ActionDef a;
            a.name = str(field((*acts)[n], "name", w), w + ".name");
            const json& ev = field((*acts)[n], "eigenvalues", w);
            if (!ev.is_object()) fail(w + ".eigenvalues", "expected an object keyed by generator");
            for (const auto& g : p.generators) {
                auto it = ev.find(g.name);
                if (it == ev.end()) fail(w + ".eigenvalues", "no eigenvalue for generator \"" + g.name + "\"");
                a.eigenvalues.push_back(lit(*it, w + ".eigenvalues." + g.name));
            }
            if (ev.size() != p.generators.size()) fail(w + ".eigenvalues", "unknown generator key");
            p.actions.push_back(std::move(a));
        }
    }
    return p;
}

// ---------------------------------------------------------------- writing

json sparse_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t k = 0; k < m.rows(); ++k)
            if (!m(k, j).is_zero()) out.push_back(json::array({j, k, m(k, j).to_string()}));
    return out;
}

json dense_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

json word_json(const std::vector<std::string>& w) {
    json out = json::array();
    for (const auto& g : w) out.push_back(g);
    return out;
}

json terms_json(const std::vector<Term>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back(json::array({t.coeff.to_string(), word_json(t.word)}));
    return out;
}

json write_structure(const StructureDef& s) {
    json doc;
    doc["format"] = format_version;
    doc["kind"] = "structure-constants";
    doc["name"] = s.name;
    doc["description"] = s.description;
    doc["basis"] = s.basis;
    auto mul = s.mul;
    std::sort(mul.begin(), mul.end(), [](const MulEntry& a, const MulEntry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    doc["mul"] = json::array();
    for (const auto& e : mul)
        if (!e.value.is_zero()) doc["mul"].push_back(json::array({e.i, e.j, e.k, e.value.to_string()}));
    if (s.unit) doc["unit"] = dense_json(*s.unit);
    if (s.star) doc["star"] = sparse_json(*s.star);
    auto co = s.coproduct;
    std::sort(co.begin(), co.end(), [](const CoEntry& a, const CoEntry& b) {
        return std::tie(a.a, a.p, a.q) < std::tie(b.a, b.p, b.q);
    });
    doc["coproduct"] = json::array();
    for (const auto& e : co)
        if (!e.value.is_zero()) doc["coproduct"].push_back(json::array({e.a, e.p, e.q, e.value.to_string()}));
    if (s.counit) doc["counit"] = dense_json(*s.counit);
    if (s.antipode) doc["antipode"] = sparse_json(*s.antipode);
    if (!s.subalgebras.empty()) {
        doc["subalgebras"] = json::array();
        for (const auto& b : s.subalgebras) {
            json vs = json::array();
            for (const auto& v : b.vectors) vs.push_back(dense_json(v));
            doc["subalgebras"].push_back(json{{"name", b.name}, {"basis", vs}});
        }
    }
    if (!s.projections.empty()) {
        doc["projections"] = json::array();
        for (const auto& p : s.projections) doc["projections"].push_back(json{{"name", p.name}, {"vector", dense_json(p.vector)}});
    }
    return doc;
}

json write_presentation(const PresentationDef& p) {
    json doc;
    doc["format"] = format_version;
    doc["kind"] = "presentation";
    doc["name"] = p.name;
    doc["description"] = p.description;
    doc["generators"] = json::array();
    for (const auto& g : p.generators) {
        json j{{"name", g.name}, {"weight", g.weight}};
        if (g.star) j["star"] = *g.star;
        if (g.inverse_of) j["inverse_of"] = *g.inverse_of;
        doc["generators"].push_back(j);
    }
    doc["rules"] = json::array();
    for (const auto& r : p.rules) doc["rules"].push_back(json{{"lhs", word_json(r.lhs)}, {"rhs", terms_json(r.rhs)}});
    doc["degree"] = p.degree;
    if (!p.coproduct.empty()) {
        json co = json::object();
        for (std::size_t i = 0; i < p.generators.size(); ++i) {
            json ts = json::array();
            for (const auto& t : p.coproduct[i])
                ts.push_back(json::array({t.coeff.to_string(), word_json(t.left), word_json(t.right)}));
            co[p.generators[i].name] = ts;
        }
        doc["coproduct"] = co;
    }
    if (!p.antipode.empty()) {
        json an = json::object();
        for (std::size_t i = 0; i < p.generators.size(); ++i) an[p.generators[i].name] = terms_json(p.antipode[i]);
        doc["antipode"] = an;
    }
    if (p.counit) {
        json e = json::object();
        for (std::size_t i = 0; i < p.generators.size(); ++i) e[p.generators[i].name] = (*p.counit)[i].to_string();
        doc["counit"] = e;
    }
    if (!p.actions.empty()) {
        doc["actions"] = json::array();
        for (const auto& a : p.actions) {
            json ev = json::object();
            for (std::size_t i = 0; i < p.generators.size(); ++i) ev[p.generators[i].name] = a.eigenvalues[i].to_string();
            doc["actions"].push_back(json{{"name", a.name}, {"eigenvalues", ev}});
        }
    }
    return doc;
}

bool flat(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j)
        if (x.is_structured() && !(x.is_array() && x.size() <= 8 && std::all_of(x.begin(), x.end(), [](const json& y) {
                                        return y.is_primitive();
                                    })))
            return false;
    return true;
}

// Arrays of primitives (and small nested word arrays) stay on one line.
void emit(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << inner << json(it.key()).dump() << ": ";
            emit(os, it.value(), indent + 2);
        }
        os << "\n" << pad << "}";
    } else if (j.is_array() && !j.empty() && !flat(j)) {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << inner;
            emit(os, j[i], indent + 2);
        }
        os << "\n" << pad << "]";
    } else if (j.is_array()) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ", ";
            emit(os, j[i], indent);
        }
        os << "]";
    } else {
        os << j.dump();
    }
}

}  // namespace

Definition parse_definition(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    const std::string version = str(field(doc, "format", "$"), "format");
    if (version != format_version)
        fail("format", "unsupported format version \"" + version + "\" (expected " + format_version + ")");
    const std::string kind = str(field(doc, "kind", "$"), "kind");
    if (kind == "structure-constants") return read_structure(doc);
    if (kind == "presentation") return read_presentation(doc);
    fail("kind", "unknown kind \"" + kind + "\"");
}

Definition load_definition(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_definition(ss.str());
}

std::string save_definition(const Definition& d) {
    const json doc = std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, StructureDef>) return write_structure(x);
            else return write_presentation(x);
        },
        d);
    std::ostringstream os;
    emit(os, doc, 0);
    os << "\n";
    return os.str();
}

}  // namespace hopf
