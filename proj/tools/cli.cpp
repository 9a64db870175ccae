#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tfgrp/errors.hpp"
#include "tfgrp/json_io.hpp"

using namespace tfgrp;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kMalformed = 2;
constexpr int kInconclusive = 3;

bool g_inline = false;
bool g_verbose = false;

Json load(const std::string& arg) {
    if (g_inline) {
        try {
            return Json::parse(arg);
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad inline JSON: ") + e.what());
        }
    }
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const std::exception& e) {
        throw ParseError(arg + ": " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void note(const std::string& s) {
    if (g_verbose) std::cerr << s << "\n";
}

/// completion filtration of the group: dual of its canonical cofiltration
Filtration group_filtration(const TypePresentation& g, std::size_t depth) {
    return dualize(canonical_cofiltration(g, depth));
}

int cmd_dual(const std::string& input) {
    const Json j = load(input);
    if (j.contains("kind")) {
        if (j["kind"] == "filtration") {
            emit(cofiltration_to_json(dualize(json_to_filtration(j))));
        } else {
            emit(filtration_to_json(dualize(json_to_cofiltration(j))));
        }
    } else {
        emit(lattice_to_json(json_to_lattice(j).annihilator()));
    }
    return kOk;
}

int cmd_corank(const std::string& input, const std::string& p) {
    const auto g = json_to_type_presentation(load(input));
    const Int prime(p);
    if (!is_prime(prime)) throw ParseError("corank requires a prime");
    Json out;
    out["p"] = int_to_json(prime);
    out["corank"] = p_corank(g, prime);
    emit(out);
    return kOk;
}

int cmd_invariant(const std::string& input) {
    const auto g = json_to_type_presentation(load(input));
    bool stripped = false;
    const auto inv = ext_invariant(g, &stripped);
    if (stripped) std::cerr << "warning: free summands stripped\n";
    emit(divisible_type_to_json(inv));
    return kOk;
}

int cmd_iso(const std::string& mode, const std::string& ga, const std::string& gb) {
    const auto g = json_to_type_presentation(load(ga));
    const auto h = json_to_type_presentation(load(gb));
    Json out;
    if (mode == "discrete") {
        out["mode"] = "discrete";
        out["isomorphic"] = ext_iso_discrete(g, h);
    } else if (mode == "definable") {
        out["mode"] = "definable";
        const auto w = ext_iso_definable(g, h);
        out["isomorphic"] = w.has_value();
        if (w) {
            Json perm = Json::array();
            for (auto i : *w) perm.push_back(i);
            out["witness"] = std::move(perm);
        }
    } else {
        throw ParseError("mode must be discrete or definable");
    }
    emit(out);
    return kOk;
}

int cmd_ml_check(const std::string& input, std::size_t window) {
    IntTower t = json_to_int_tower(load(input));
    if (window > 0 && window < t.levels.size()) {
        t.levels.resize(window);
        t.bonding.resize(window - 1);
    }
    const auto verdicts = ml_check(t);
    bool all = true;
    Json vj = Json::array();
    for (std::size_t m = 0; m < verdicts.size(); ++m) {
        Json v;
        v["level"] = m;
        v["stable"] = verdicts[m].stabilized;
        if (verdicts[m].stabilized) v["stabilized_at"] = verdicts[m].stabilized_at;
        all = all && verdicts[m].stabilized;
        vj.push_back(std::move(v));
    }
    Json out;
    out["verdict"] = all ? "STABLE" : "NOT_STABLE_IN_WINDOW";
    out["levels"] = std::move(vj);
    emit(out);
    note(all ? "Mittag-Leffler images stabilize in the window"
             : "some image chain did not stabilize in the window");
    return all ? kOk : kInconclusive;
}

int cmd_lim1_sigma(const std::string& input) {
    const auto a = json_to_cocycle(load(input));
    emit(profinite_to_json(sigma(a)));
    return kOk;
}

int cmd_lim1_solve(const std::string& input) {
    const auto a = json_to_cocycle(load(input));
    const auto b = coboundary_solve(a);
    Json out;
    out["tower"] = filtration_to_json(b.tower);
    Json entries = Json::array();
    for (const auto& v : b.entries) entries.push_back(rat_vec_to_json(v));
    out["entries"] = std::move(entries);
    emit(out);
    return kOk;
}

int cmd_ext_validate(const std::string& input) {
    const auto c = json_to_ext_cocycle(load(input));
    Json out;
    out["valid"] = validate(c);
    emit(out);
    return kOk;
}

int cmd_ext_solve(const std::string& input) {
    const auto c = json_to_ext_cocycle(load(input));
    const auto h = coboundary_decide(c);
    Json out;
    out["coboundary"] = h.has_value();
    if (h) {
        Json w = Json::array();
        for (const auto& v : *h) w.push_back(int_vec_to_json(v));
        out["witness"] = std::move(w);
    }
    emit(out);
    return kOk;
}

int cmd_ext_build(const std::string& input) {
    const auto c = json_to_ext_cocycle(load(input));
    const auto e = build_extension(c);
    Json out;
    out["type"] = finab_to_json(e.iso_type);
    emit(out);
    return kOk;
}

int cmd_ext_type(const std::string& ba, const std::string& fa) {
    const auto b = json_to_finab(load(ba));
    const auto f = json_to_finab(load(fa));
    emit(finab_to_json(ext_group(b, f)));
    return kOk;
}

int cmd_complete(const std::string& input, std::size_t depth, const std::string& embed_vec) {
    const auto g = json_to_type_presentation(load(input));
    const auto f = group_filtration(g, depth);
    Json vj;
    try {
        vj = Json::parse(embed_vec);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad --embed vector: ") + e.what());
    }
    const RatVec v = json_to_rat_vec(vj);
    emit(profinite_to_json(embed(f, v)));
    return kOk;
}

int cmd_divide(const std::string& group, const std::string& n, const std::string& bound,
               const std::string& xin) {
    const auto g = json_to_type_presentation(load(group));
    const auto x = json_to_profinite(load(xin));
    if (!(group_filtration(g, x.depth()) == x.filtration))
        throw ParseError("element filtration does not match the group");
    const auto res = divide_correct(x, Int(n), Int(bound));
    Json out;
    out["found"] = res.has_value();
    if (res) {
        out["correction"] = int_vec_to_json(res->correction);
        out["quotient"] = profinite_to_json(res->quotient);
    }
    emit(out);
    return kOk;
}

int cmd_coset_equal(const std::string& group, const std::string& bound, const std::string& xin,
                    const std::string& yin) {
    const auto g = json_to_type_presentation(load(group));
    const auto x = json_to_profinite(load(xin));
    const auto y = json_to_profinite(load(yin));
    const auto v = coset_equal(x, y, g, Int(bound));
    Json out;
    switch (v) {
        case CosetVerdict::EqualAtDepth: out["verdict"] = "EQUAL_AT_DEPTH"; break;
        case CosetVerdict::Distinct: out["verdict"] = "DISTINCT"; break;
        case CosetVerdict::Inconclusive: out["verdict"] = "INCONCLUSIVE"; break;
    }
    emit(out);
    return v == CosetVerdict::Inconclusive ? kInconclusive : kOk;
}

int cmd_padic_act(const std::string& p, const std::string& gmat, const std::string& vvec,
                  const std::string& xin) {
    const auto x = json_to_padic(load(xin));
    if (Int(p) != x.p) throw ParseError("--p does not match the element");
    RatMat g;
    RatVec v;
    try {
        g = json_to_rat_mat(Json::parse(gmat));
        v = json_to_rat_vec(Json::parse(vvec));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad --g/--v JSON: ") + e.what());
    }
    emit(padic_to_json(padic_affine_apply(g, v, x)));
    return kOk;
}

int cmd_towermap_check(const std::string& input) {
    const auto t = json_to_tower_map(load(input));
    Json out;
    try {
        validate_tower_map(t);
        out["valid"] = true;
    } catch (const InvalidTowerMap& e) {
        out["valid"] = false;
        out["reason"] = e.what();
    }
    emit(out);
    return kOk;
}

int cmd_towermap_adj(const std::string& input) {
    const auto t = json_to_tower_map(load(input));
    validate_tower_map(t);
    emit(tower_map_to_json(adj(t)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with finite-rank torsion-free abelian groups"};
    app.require_subcommand(1);
    app.add_flag("--inline", g_inline, "treat positional inputs as inline JSON");
    app.add_flag("--verbose", g_verbose, "human-readable summary on stderr");

    std::string in1, in2, mode = "discrete", pstr = "2", nstr = "2", bstr = "1";
    std::string gmat, vvec, evec;
    std::size_t window = 0, depth = 4;

    auto* dual = app.add_subcommand("dual", "annihilator dual of a lattice or tower");
    dual->add_option("input", in1)->required();

    auto* corank = app.add_subcommand("corank", "p-corank of a type-presented group");
    corank->add_option("-p", pstr)->required();
    corank->add_option("group", in1)->required();

    auto* invariant = app.add_subcommand("invariant", "divisible type of Ext(.,Z)");
    invariant->add_option("group", in1)->required();

    auto* iso = app.add_subcommand("iso", "discrete/definable isomorphism of Ext invariants");
    iso->add_option("--mode", mode)->check(CLI::IsMember({"discrete", "definable"}));
    iso->add_option("first", in1)->required();
    iso->add_option("second", in2)->required();

    auto* ml = app.add_subcommand("ml-check", "Mittag-Leffler window verdicts");
    ml->add_option("tower", in1)->required();
    ml->add_option("--window", window);

    auto* lsig = app.add_subcommand("lim1-sigma", "sigma image of a truncated cocycle");
    lsig->add_option("cocycle", in1)->required();

    auto* lsol = app.add_subcommand("lim1-solve", "coboundary solution of a truncated cocycle");
    lsol->add_option("cocycle", in1)->required();

    auto* ev = app.add_subcommand("ext-validate", "check the 2-cocycle conditions");
    ev->add_option("cocycle", in1)->required();

    auto* es = app.add_subcommand("ext-solve", "exact coboundary decision");
    es->add_option("cocycle", in1)->required();

    auto* eb = app.add_subcommand("ext-build", "isomorphism type of the extension");
    eb->add_option("cocycle", in1)->required();

    auto* et = app.add_subcommand("ext-type", "Ext(B, F) for finitely generated B, F");
    et->add_option("base", in1)->required();
    et->add_option("fiber", in2)->required();

    auto* comp = app.add_subcommand("complete", "embed a vector in the truncated completion");
    comp->add_option("group", in1)->required();
    comp->add_option("--depth", depth);
    comp->add_option("--embed", evec)->required();

    auto* div = app.add_subcommand("divide", "division with integer correction");
    div->add_option("group", in1)->required();
    div->add_option("--n", nstr)->required();
    div->add_option("--bound", bstr)->required();
    div->add_option("element", in2)->required();

    std::string in3;
    auto* ce = app.add_subcommand("coset-equal", "truncated coset comparison");
    ce->add_option("group", in1)->required();
    ce->add_option("--bound", bstr)->required();
    ce->add_option("x", in2)->required();
    ce->add_option("y", in3)->required();

    auto* pa = app.add_subcommand("padic-act", "apply an affine map to a p-adic element");
    pa->add_option("--p", pstr)->required();
    pa->add_option("--g", gmat)->required();
    pa->add_option("--v", vvec)->required();
    pa->add_option("element", in1)->required();

    auto* tc = app.add_subcommand("towermap-check", "validate a tower map");
    tc->add_option("map", in1)->required();

    auto* ta = app.add_subcommand("towermap-adj", "adjoint of a tower map");
    ta->add_option("map", in1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kMalformed;
    }

    try {
        if (dual->parsed()) return cmd_dual(in1);
        if (corank->parsed()) return cmd_corank(in1, pstr);
        if (invariant->parsed()) return cmd_invariant(in1);
        if (iso->parsed()) return cmd_iso(mode, in1, in2);
        if (ml->parsed()) return cmd_ml_check(in1, window);
        if (lsig->parsed()) return cmd_lim1_sigma(in1);
        if (lsol->parsed()) return cmd_lim1_solve(in1);
        if (ev->parsed()) return cmd_ext_validate(in1);
        if (es->parsed()) return cmd_ext_solve(in1);
        if (eb->parsed()) return cmd_ext_build(in1);
        if (et->parsed()) return cmd_ext_type(in1, in2);
        if (comp->parsed()) return cmd_complete(in1, depth, evec);
        if (div->parsed()) return cmd_divide(in1, nstr, bstr, in2);
        if (ce->parsed()) return cmd_coset_equal(in1, bstr, in2, in3);
        if (pa->parsed()) return cmd_padic_act(pstr, gmat, vvec, in1);
        if (tc->parsed()) return cmd_towermap_check(in1);
        if (ta->parsed()) return cmd_towermap_adj(in1);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const NotMember& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const NotPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const BadDenominator& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const InvalidCocycle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
