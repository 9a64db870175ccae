#include "tfgrp/json_io.hpp"

#include <sstream>

#include "tfgrp/errors.hpp"

namespace tfgrp {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string("expected array for ") + what);
    return j;
}

const Json& expect_object(const Json& j, const char* what) {
    if (!j.is_object()) bad(std::string("expected object for ") + what);
    return j;
}

const Json& field(const Json& j, const char* key) {
    expect_object(j, key);
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t json_to_size(const Json& j) {
    if (!j.is_number_unsigned() && !j.is_number_integer()) bad("expected a nonnegative integer");
    const auto v = j.get<long long>();
    if (v < 0) bad("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

}  // namespace

Json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

Int json_to_int(const Json& j) {
    try {
        if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
        if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
    bad("expected an integer");
}

Json rat_to_json(const Rat& q) { return Json(rat_to_string(q)); }

Rat json_to_rat(const Json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(json_to_int(j));
    if (!j.is_string()) bad("expected a rational string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception&) {
        bad("malformed rational \"" + j.get<std::string>() + "\"");
    }
}

Json rat_vec_to_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(rat_to_json(q));
    return out;
}

RatVec json_to_rat_vec(const Json& j) {
    RatVec out;
    for (const auto& e : expect_array(j, "rational vector")) out.push_back(json_to_rat(e));
    return out;
}

Json int_vec_to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& n : v) out.push_back(int_to_json(n));
    return out;
}

IntVec json_to_int_vec(const Json& j) {
    IntVec out;
    for (const auto& e : expect_array(j, "integer vector")) out.push_back(json_to_int(e));
    return out;
}

Json rat_mat_to_json(const RatMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rat_vec_to_json(m.row(i)));
    return out;
}

RatMat json_to_rat_mat(const Json& j) {
    std::vector<RatVec> rows;
    for (const auto& e : expect_array(j, "matrix")) rows.push_back(json_to_rat_vec(e));
    if (rows.empty()) bad("empty matrix");
    const std::size_t cols = rows[0].size();
    RatMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) bad("ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
    }
    return m;
}

Json int_mat_to_json(const IntMat& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_vec_to_json(m.row(i)));
    return out;
}

IntMat json_to_int_mat(const Json& j) {
    std::vector<IntVec> rows;
    for (const auto& e : expect_array(j, "matrix")) rows.push_back(json_to_int_vec(e));
    if (rows.empty()) bad("empty matrix");
    const std::size_t cols = rows[0].size();
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) bad("ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
    }
    return m;
}

Json lattice_to_json(const Lattice& l) {
    Json out = Json::object();
    out["dim"] = l.dim();
    out["den"] = int_to_json(l.den());
    out["rows"] = int_mat_to_json(l.hmat());
    return out;
}

Lattice json_to_lattice(const Json& j) {
    const std::size_t d = json_to_size(field(j, "dim"));
    const Int den = json_to_int(field(j, "den"));
    if (den <= 0) bad("lattice denominator must be positive");
    const IntMat rows = json_to_int_mat(field(j, "rows"));
    std::vector<RatVec> rrows;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        RatVec r(rows.cols());
        for (std::size_t k = 0; k < rows.cols(); ++k) r[k] = make_rat(rows(i, k), den);
        rrows.push_back(std::move(r));
    }
    try {
        return Lattice::from_rows(d, rrows);
    } catch (const Error& e) {
        bad(std::string("invalid lattice: ") + e.what());
    }
}

Json baer_type_to_json(const BaerType& t) {
    Json out = Json::object();
    out["default"] = t.default_inf() ? "inf" : "0";
    Json exc = Json::object();
    for (const auto& [p, v] : t.exceptions()) {
        if (v.inf)
            exc[p.get_str()] = "inf";
        else
            exc[p.get_str()] = v.finite;
    }
    out["exceptions"] = std::move(exc);
    return out;
}

BaerType json_to_baer_type(const Json& j) {
    const Json& def = field(j, "default");
    if (!def.is_string() || (def != "0" && def != "inf")) bad("type default must be \"0\" or \"inf\"");
    std::map<Int, TypeVal> exc;
    for (const auto& [key, val] : expect_object(field(j, "exceptions"), "exceptions").items()) {
        Int p;
        try {
            p = Int(key);
        } catch (const std::exception&) {
            bad("bad prime key \"" + key + "\"");
        }
        TypeVal tv;
        if (val.is_string() && val == "inf")
            tv = TypeVal::infinite();
        else
            tv = TypeVal::of(static_cast<unsigned long>(json_to_size(val)));
        exc[p] = tv;
    }
    try {
        return BaerType(def == "inf", std::move(exc));
    } catch (const Error& e) {
        bad(std::string("invalid type: ") + e.what());
    }
}

Json type_presentation_to_json(const TypePresentation& g) {
    Json out = Json::object();
    out["rank"] = g.rank();
    Json types = Json::array();
    for (const auto& t : g.types) types.push_back(baer_type_to_json(t));
    out["types"] = std::move(types);
    return out;
}

TypePresentation json_to_type_presentation(const Json& j) {
    TypePresentation g;
    for (const auto& e : expect_array(field(j, "types"), "types"))
        g.types.push_back(json_to_baer_type(e));
    if (json_to_size(field(j, "rank")) != g.rank()) bad("rank does not match type count");
    return g;
}

namespace {

Json levels_to_json(const std::vector<Lattice>& levels) {
    Json out = Json::array();
    for (const auto& l : levels) out.push_back(lattice_to_json(l));
    return out;
}

std::vector<Lattice> json_to_levels(const Json& j) {
    std::vector<Lattice> out;
    for (const auto& e : expect_array(j, "levels")) out.push_back(json_to_lattice(e));
    return out;
}

}  // namespace

Json filtration_to_json(const Filtration& f) {
    Json out = Json::object();
    out["kind"] = "filtration";
    out["dim"] = f.dim();
    out["levels"] = levels_to_json(f.levels);
    return out;
}

Filtration json_to_filtration(const Json& j) {
    if (field(j, "kind") != "filtration") bad("expected kind \"filtration\"");
    auto levels = json_to_levels(field(j, "levels"));
    if (!levels.empty() && levels[0].dim() != json_to_size(field(j, "dim")))
        bad("dim does not match levels");
    try {
        return Filtration::from_levels(std::move(levels));
    } catch (const Error& e) {
        bad(std::string("invalid filtration: ") + e.what());
    }
}

Json cofiltration_to_json(const Cofiltration& c) {
    Json out = Json::object();
    out["kind"] = "cofiltration";
    out["dim"] = c.dim();
    out["levels"] = levels_to_json(c.levels);
    return out;
}

Cofiltration json_to_cofiltration(const Json& j) {
    if (field(j, "kind") != "cofiltration") bad("expected kind \"cofiltration\"");
    auto levels = json_to_levels(field(j, "levels"));
    if (!levels.empty() && levels[0].dim() != json_to_size(field(j, "dim")))
        bad("dim does not match levels");
    try {
        return Cofiltration::from_levels(std::move(levels));
    } catch (const Error& e) {
        bad(std::string("invalid cofiltration: ") + e.what());
    }
}

Json tower_map_to_json(const TowerMap& t) {
    Json out = Json::object();
    out["kind"] = t.kind == TowerKind::Filtration ? "filtration" : "cofiltration";
    out["source"] = levels_to_json(t.source);
    out["target"] = levels_to_json(t.target);
    Json idx = Json::array();
    for (auto m : t.indices) idx.push_back(m);
    out["indices"] = std::move(idx);
    Json maps = Json::array();
    for (const auto& m : t.maps) maps.push_back(rat_mat_to_json(m));
    out["maps"] = std::move(maps);
    return out;
}

TowerMap json_to_tower_map(const Json& j) {
    TowerMap t;
    const Json& kind = field(j, "kind");
    if (kind == "filtration")
        t.kind = TowerKind::Filtration;
    else if (kind == "cofiltration")
        t.kind = TowerKind::Cofiltration;
    else
        bad("bad tower map kind");
    t.source = json_to_levels(field(j, "source"));
    t.target = json_to_levels(field(j, "target"));
    for (const auto& e : expect_array(field(j, "indices"), "indices"))
        t.indices.push_back(json_to_size(e));
    for (const auto& e : expect_array(field(j, "maps"), "maps"))
        t.maps.push_back(json_to_rat_mat(e));
    return t;
}

Json int_tower_to_json(const IntTower& t) {
    Json out = Json::object();
    out["rank"] = t.rank;
    Json levels = Json::array();
    for (const auto& l : t.levels) levels.push_back(int_mat_to_json(l));
    out["levels"] = std::move(levels);
    Json bonding = Json::array();
    for (const auto& b : t.bonding) bonding.push_back(int_mat_to_json(b));
    out["bonding"] = std::move(bonding);
    return out;
}

IntTower json_to_int_tower(const Json& j) {
    IntTower t;
    t.rank = json_to_size(field(j, "rank"));
    for (const auto& e : expect_array(field(j, "levels"), "levels"))
        t.levels.push_back(json_to_int_mat(e));
    for (const auto& e : expect_array(field(j, "bonding"), "bonding"))
        t.bonding.push_back(json_to_int_mat(e));
    if (t.levels.empty()) bad("tower needs at least one level");
    if (t.bonding.size() + 1 != t.levels.size()) bad("bonding count must be levels - 1");
    return t;
}

Json profinite_to_json(const ProfiniteElement& x) {
    Json out = Json::object();
    out["filtration"] = filtration_to_json(x.filtration);
    Json chain = Json::array();
    for (const auto& v : x.chain) chain.push_back(rat_vec_to_json(v));
    out["chain"] = std::move(chain);
    return out;
}

ProfiniteElement json_to_profinite(const Json& j) {
    ProfiniteElement x;
    x.filtration = json_to_filtration(field(j, "filtration"));
    for (const auto& e : expect_array(field(j, "chain"), "chain"))
        x.chain.push_back(json_to_rat_vec(e));
    try {
        validate_element(x);
    } catch (const Error& e) {
        bad(std::string("invalid profinite element: ") + e.what());
    }
    return x;
}

Json padic_to_json(const PadicElement& x) {
    Json out = Json::object();
    out["p"] = int_to_json(x.p);
    out["d"] = x.dim;
    Json digits = Json::array();
    for (std::size_t jlev = 0; jlev < x.depth; ++jlev) {
        if (x.dim == 1) {
            digits.push_back(int_to_json(x.digit(0, jlev)));
        } else {
            Json level = Json::array();
            for (std::size_t i = 0; i < x.dim; ++i) level.push_back(int_to_json(x.digit(i, jlev)));
            digits.push_back(std::move(level));
        }
    }
    out["digits"] = std::move(digits);
    out["shift"] = x.shift;
    return out;
}

PadicElement json_to_padic(const Json& j) {
    const Int p = json_to_int(field(j, "p"));
    const std::size_t d = json_to_size(field(j, "d"));
    const Json& dj = expect_array(field(j, "digits"), "digits");
    std::vector<IntVec> digits;
    for (const auto& e : dj) {
        if (e.is_array())
            digits.push_back(json_to_int_vec(e));
        else
            digits.push_back(IntVec{json_to_int(e)});
    }
    long shift = 0;
    if (j.contains("shift")) {
        const Json& s = j["shift"];
        if (!s.is_number_integer()) bad("shift must be an integer");
        shift = s.get<long>();
    }
    try {
        return padic_make(p, d, digits, shift);
    } catch (const Error& e) {
        bad(std::string("invalid p-adic element: ") + e.what());
    }
}

Json cocycle_to_json(const TruncatedCocycle& a) {
    Json out = Json::object();
    out["tower"] = filtration_to_json(a.tower);
    Json cons = Json::array();
    for (const auto& v : a.consecutive) cons.push_back(rat_vec_to_json(v));
    out["consecutive"] = std::move(cons);
    return out;
}

TruncatedCocycle json_to_cocycle(const Json& j) {
    TruncatedCocycle a;
    a.tower = json_to_filtration(field(j, "tower"));
    for (const auto& e : expect_array(field(j, "consecutive"), "consecutive"))
        a.consecutive.push_back(json_to_rat_vec(e));
    try {
        validate_cocycle(a);
    } catch (const Error& e) {
        bad(std::string("invalid cocycle: ") + e.what());
    }
    return a;
}

Json finab_to_json(const FinAbGroup& g) {
    Json out = Json::object();
    out["orders"] = int_vec_to_json(IntVec(g.orders.begin(), g.orders.end()));
    if (g.free_rank != 0) out["free_rank"] = g.free_rank;
    return out;
}

FinAbGroup json_to_finab(const Json& j) {
    FinAbGroup g;
    for (const auto& e : expect_array(field(j, "orders"), "orders")) {
        Int n = json_to_int(e);
        if (n <= 0) bad("orders must be positive");
        g.orders.push_back(std::move(n));
    }
    if (j.contains("free_rank")) g.free_rank = json_to_size(j["free_rank"]);
    return g;
}

namespace {

std::string elem_key_part(const FinAbGroup& g, const IntVec& e) {
    std::ostringstream os;
    if (g.ngens() != 1) os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i].get_str();
    }
    if (g.ngens() != 1) os << ')';
    return os.str();
}

std::size_t elem_index_of(const FinAbGroup& g, const IntVec& e) {
    Int idx = 0;
    for (std::size_t i = 0; i < g.orders.size(); ++i) idx = idx * g.orders[i] + e[i];
    return static_cast<std::size_t>(idx.get_ui());
}

/// parse "a,b,..." or "(a,b,...)" into an element of g
IntVec parse_elem(const FinAbGroup& g, const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') bad("unbalanced tuple key");
        body = body.substr(1, body.size() - 2);
    }
    IntVec out;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        try {
            out.push_back(Int(tok));
        } catch (const std::exception&) {
            bad("bad tuple entry \"" + tok + "\"");
        }
    if (out.size() != g.ngens()) bad("tuple key has wrong length");
    return g.reduce(out);
}

/// split "x,y" / "(..),(..)" at the top-level comma
std::pair<std::string, std::string> split_pair_key(const std::string& key) {
    std::string s = key;
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        // strip the outer parens only if they wrap the whole key
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
                break;
            }
        }
        if (wraps) s = s.substr(1, s.size() - 2);
    }
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s[i] == ',') {
            // only split here if both halves are balanced tuples or scalars
            const std::string a = s.substr(0, i), b = s.substr(i + 1);
            const bool a_tuple = !a.empty() && a.front() == '(';
            const bool b_tuple = !b.empty() && b.front() == '(';
            if (a_tuple == b_tuple) return {a, b};
        }
    }
    bad("bad cocycle table key \"" + key + "\"");
}

}  // namespace

Json ext_cocycle_to_json(const ExtCocycle& c) {
    Json out = Json::object();
    out["base"] = finab_to_json(c.base);
    out["fiber"] = finab_to_json(c.fiber);
    Json table = Json::object();
    const auto elems = c.base.elements();
    const IntVec z = c.fiber.zero();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t k = 0; k < elems.size(); ++k) {
            const IntVec& v = c.at(i, k);
            if (v == z) continue;
            table["(" + elem_key_part(c.base, elems[i]) + "," + elem_key_part(c.base, elems[k]) +
                  ")"] = int_vec_to_json(v);
        }
    out["table"] = std::move(table);
    return out;
}

ExtCocycle json_to_ext_cocycle(const Json& j) {
    FinAbGroup base = json_to_finab(field(j, "base"));
    FinAbGroup fiber = json_to_finab(field(j, "fiber"));
    if (!base.finite()) bad("cocycle base must be finite");
    ExtCocycle c = ExtCocycle::zero(std::move(base), std::move(fiber));
    for (const auto& [key, val] : expect_object(field(j, "table"), "table").items()) {
        const auto [xs, ys] = split_pair_key(key);
        const std::size_t i = elem_index_of(c.base, parse_elem(c.base, xs));
        const std::size_t k = elem_index_of(c.base, parse_elem(c.base, ys));
        IntVec v = json_to_int_vec(val);
        if (v.size() != c.fiber.ngens()) bad("table value has wrong length");
        c.at(i, k) = c.fiber.reduce(std::move(v));
    }
    return c;
}

Json divisible_type_to_json(const DivisibleType& t) {
    Json out = Json::object();
    out["continuum_free"] = t.continuum_free;
    out["primary_default"] = t.primary_default;
    Json exc = Json::object();
    for (const auto& [p, n] : t.primary_exceptions) exc[p.get_str()] = n;
    out["primary_exceptions"] = std::move(exc);
    return out;
}

DivisibleType json_to_divisible_type(const Json& j) {
    DivisibleType t;
    const Json& cf = field(j, "continuum_free");
    if (!cf.is_boolean()) bad("continuum_free must be a boolean");
    t.continuum_free = cf.get<bool>();
    t.primary_default = json_to_size(field(j, "primary_default"));
    for (const auto& [key, val] : expect_object(field(j, "primary_exceptions"), "exceptions").items())
        t.primary_exceptions[Int(key)] = json_to_size(val);
    return t;
}

}  // namespace tfgrp
