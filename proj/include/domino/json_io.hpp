#pragma once

#include <string>

#include <json.hpp>

#include "domino/growth.hpp"
#include "domino/laurent.hpp"
#include "domino/schensted.hpp"
#include "domino/shapes.hpp"
#include "domino/tableau.hpp"
#include "domino/verify.hpp"

// JSON forms round-trip through the same textual parsers the CLI accepts;
// polynomials carry both a display string and exact structured terms.

namespace domino {

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.str(); }
inline void from_json(const nlohmann::json& j, Partition& p) { p = Partition::parse(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const SkewShape& s) { j = s.str(); }

inline void to_json(nlohmann::json& j, const GaussInt& g) {
    j = nlohmann::json{{"re", g.re.str()}, {"im", g.im.str()}};
}
inline void from_json(const nlohmann::json& j, GaussInt& g) {
    g = GaussInt(BigInt(j.at("re").get<std::string>()), BigInt(j.at("im").get<std::string>()));
}

inline void to_json(nlohmann::json& j, const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, coeff] : p.terms())
        terms.push_back(nlohmann::json{{"e2", mono.e2}, {"coeff", coeff}});
    j = nlohmann::json{{"text", p.str()}, {"terms", std::move(terms)}};
}
inline void from_json(const nlohmann::json& j, LaurentPoly& p) {
    p = LaurentPoly();
    for (const nlohmann::json& t : j.at("terms")) {
        Monomial m;
        m.e2 = t.at("e2").get<std::array<int, 4>>();
        p += LaurentPoly::term(t.at("coeff").get<GaussInt>(), m);
    }
}

inline void to_json(nlohmann::json& j, const ChainTableau& t) {
    j = nlohmann::json{{"kind", kind_name(t.kind())}, {"chain", t.chain_str()}, {"rows", t.rows_str()}};
}
inline void from_json(const nlohmann::json& j, ChainTableau& t) {
    TableauKind kind = j.at("kind").get<std::string>() == "syt" ? TableauKind::syt : TableauKind::sdt;
    t = ChainTableau::parse(kind, j.at("chain").get<std::string>());
}

inline void to_json(nlohmann::json& j, const IntMatrix& m) {
    j = nlohmann::json{{"rows", m.rows}, {"cols", m.cols}, {"text", m.str()}};
}
inline void from_json(const nlohmann::json& j, IntMatrix& m) {
    m = IntMatrix::parse(j.at("text").get<std::string>());
    if (m.a.empty()) {
        m.rows = j.at("rows").get<int>();
        m.cols = j.at("cols").get<int>();
        m.a.assign(static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols), 0);
    }
}

inline void to_json(nlohmann::json& j, const ColoredPermutation& cp) { j = cp.str(); }
inline void from_json(const nlohmann::json& j, ColoredPermutation& cp) {
    cp = ColoredPermutation::parse(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const GrowthDiagram& g) {
    nlohmann::json grid = nlohmann::json::array();
    for (int i = 0; i <= g.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k <= g.cols(); ++k) row.push_back(g.vertex(i, k));
        grid.push_back(std::move(row));
    }
    j = nlohmann::json{{"rules", ruleset_name(g.rules())}, {"matrix", g.matrix()}, {"vertices", std::move(grid)}};
}

inline void to_json(nlohmann::json& j, const Params& p) {
    j = nlohmann::json::object();
    for (const auto& [k, v] : p.ints) j[k] = v;
    for (const auto& [k, v] : p.shapes) j[k] = v;
}
inline void from_json(const nlohmann::json& j, Params& p) {
    p = Params{};
    for (const auto& [k, v] : j.items()) {
        if (v.is_number_integer()) p.set(k, v.get<long long>());
        else p.set(k, Partition::parse(v.get<std::string>()));
    }
}

inline void to_json(nlohmann::json& j, const IdentityReport& r) {
    j = nlohmann::json{{"identity", r.identity}, {"params", r.params}, {"lhs", r.lhs},
                       {"rhs", r.rhs},           {"equal", r.equal},   {"millis", r.millis}};
}

}  // namespace domino
