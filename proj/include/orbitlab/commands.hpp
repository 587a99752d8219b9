#pragma once

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlab/adjoint.hpp"
#include "orbitlab/admissible.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/exceptional.hpp"
#include "orbitlab/formula.hpp"
#include "orbitlab/orbit_data.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/qseries.hpp"
#include "orbitlab/rootsys.hpp"
#include "orbitlab/tables.hpp"
#include "orbitlab/wchar.hpp"

namespace orbitlab {

using json = nlohmann::json;

struct OutputRecord {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> provenance;
    int exit_code = 0;  // not serialized

    friend bool operator==(const OutputRecord& a, const OutputRecord& b) {
        return a.command == b.command && a.inputs == b.inputs && a.result == b.result && a.provenance == b.provenance;
    }
};

inline void to_json(json& j, const OutputRecord& r) {
    j = json{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"provenance", r.provenance}};
}
inline void from_json(const json& j, OutputRecord& r) {
    j.at("command").get_to(r.command);
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    j.at("provenance").get_to(r.provenance);
}

// ---------------------------------------------------------------------------
// JSON encoders

inline json orbit_json(const NilpotentOrbit& o) {
    json g = json::object();
    for (const auto& [twice_j, d] : o.graded_dims) g[to_string(Rational(twice_j, 2))] = d;
    json j{{"label", o.label},
           {"marks", o.marks},
           {"ht", o.ht},
           {"ht_check", o.ht_check},
           {"dim_orbit", o.dim_orbit},
           {"dim_centralizer", o.dim_centralizer},
           {"graded_dims", g}};
    if (o.classical) {
        j["partition"] = o.classical->partition.str();
        j["very_even"] = o.classical->very_even == 0 ? json(nullptr) : json(o.classical->very_even == 1 ? "I" : "II");
    } else {
        j["partition"] = nullptr;
        j["very_even"] = nullptr;
    }
    return j;
}

inline json qseries_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [n, c] : s.terms()) terms.push_back(json::array({n, 2, to_string(c)}));
    return json{{"offset", to_string(s.offset())}, {"trunc_order", to_string(s.trunc_order())}, {"terms", terms}};
}

inline QSeries qseries_from_json(const json& j) {
    const Rational t = parse_rational(j.at("trunc_order").get<std::string>());
    QSeries s(parse_rational(j.at("offset").get<std::string>()), static_cast<int>((t * 2).numerator()));
    for (const auto& term : j.at("terms")) {
        const int n = term.at(0).get<int>(), den = term.at(1).get<int>();
        require(den == 2, "series exponents are stored over 2");
        s.add_term(n, parse_rational(term.at(2).get<std::string>()));
    }
    return s;
}

inline json level_json(const AdmissibleLevel& lv) {
    return json{{"k", to_string(lv.k)},
                {"family", family_name(lv.family)},
                {"p", lv.p},
                {"q", lv.q},
                {"kappa", to_string(lv.kappa())},
                {"degenerate", lv.degenerate}};
}

// ---------------------------------------------------------------------------
// input parsing

// "-4+7/12", "-hv+p/6", "1/2": 'hv' stands for the dual Coxeter number.
inline Laurent parse_level_expr(const std::string& text, const RootSystem& rs) {
    require(text.find('.') == std::string::npos, "levels must be exact fractions, not decimals: '" + text + "'");
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 2, "hv") == 0) {
            s += "(" + std::to_string(rs.h_check()) + ")";
            ++i;
        } else {
            s += text[i];
        }
    }
    return parse_formula(s);
}

inline Rational level_value(const std::string& text, const RootSystem& rs, std::optional<Int> p = std::nullopt,
                            std::optional<Int> q = std::nullopt) {
    const Laurent k = parse_level_expr(text, rs);
    bool needs_p = false, needs_q = false;
    for (const auto& [e, c] : k.terms()) {
        needs_p |= e.first != 0;
        needs_q |= e.second != 0;
    }
    require(!needs_p || p, "level '" + text + "' uses p; pass a value for p");
    require(!needs_q || q, "level '" + text + "' uses q; pass a value for q");
    return k.eval(p.value_or(1), q.value_or(1));
}

inline std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = detail::trim(tok);
        require(!tok.empty(), "empty entry in list '" + s + "'");
        std::size_t pos = 0;
        Int v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw DomainError("not an integer: '" + tok + "'");
        }
        require(pos == tok.size(), "not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline json type_inputs(const CartanType& t) { return json{{"type", std::string(1, family_char(t.family))}, {"rank", t.rank}}; }

// ---------------------------------------------------------------------------
// commands

inline OutputRecord cmd_orbits(const CartanType& t) {
    auto cat = shared_catalog(t);
    OutputRecord r{"orbits", type_inputs(t), json::object(), {}};
    json rows = json::array();
    for (const auto& o : cat->orbits()) rows.push_back(orbit_json(o));
    r.result = json{{"type", t.name()}, {"dim", cat->root_system().dim()}, {"orbits", rows}};
    return r;
}

inline OutputRecord cmd_oq(const CartanType& t, int q, LevelFamily fam) {
    require(q >= 1, "q must be at least 1");
    auto cat = shared_catalog(t);
    const auto& rs = cat->root_system();
    require(fam == LevelFamily::Principal || rs.r_check() > 1,
            "^L O_q coincides with O_q for the simply laced type " + t.name());
    const auto& o = fam == LevelFamily::Principal ? compute_Oq(*cat, q) : compute_LOq(*cat, q);
    OutputRecord r{"oq", type_inputs(t), json::object(), {table_id(t, fam)}};
    r.inputs["q"] = q;
    r.inputs["family"] = family_name(fam);
    r.result = json{{"q", q},
                    {"family", family_name(fam)},
                    {"orbit", orbit_json(o)},
                    {"principal", &o == &cat->principal()},
                    {"coprime_to_r_check", std::gcd(q, rs.r_check()) == 1}};
    return r;
}

inline OutputRecord cmd_level(const CartanType& t, const std::string& k_text) {
    auto cat = shared_catalog(t);
    const Rational k = level_value(k_text, cat->root_system());
    OutputRecord r{"level", type_inputs(t), json::object(), {}};
    r.inputs["k"] = k_text;
    auto lv = classify_level(t, k);
    if (!lv) {
        r.result = json{{"k", to_string(k)}, {"admissible", false}};
        return r;
    }
    r.provenance.push_back(table_id(t, lv->family));
    const auto lo = orbit_of_level(*lv, *cat);
    const auto var = associated_variety(*lv, *cat);
    r.result = level_json(*lv);
    r.result["admissible"] = true;
    r.result["orbit"] = lo.orbit->label;
    r.result["orbit_flag"] = lo.non_degenerate ? "principal (non-degenerate level)" : "O[k]";
    json v{{"kind", var.kind == VarietyKind::OrbitClosure ? "orbit_closure" : "contains_nullcone"}};
    if (var.orbit) v["orbit"] = var.orbit->label;
    v["conjecturally_equal"] = var.conjecturally_equal;
    r.result["associated_variety"] = v;
    r.result["central_charge"] = to_string(central_charge(*lo.orbit, k));
    return r;
}

inline OutputRecord cmd_charge(const CartanType& t, const std::string& orbit_text, const std::string& k_text,
                               std::optional<Int> p, std::optional<Int> q) {
    auto cat = shared_catalog(t);
    const auto& rs = cat->root_system();
    const NilpotentOrbit& f = cat->find(orbit_text);
    OutputRecord r{"charge", type_inputs(t), json::object(), {}};
    r.inputs["orbit"] = orbit_text;
    r.inputs["k"] = k_text;
    if (p) r.inputs["p"] = *p;
    if (q) r.inputs["q"] = *q;
    r.result = json{{"orbit", f.label}};

    const Laurent kappa = parse_level_expr(k_text, rs) + Laurent(Rational(rs.h_check()));
    if (kappa.is_monomial()) {
        // c = c0 - 12|rho|^2/kappa - 12|x0|^2 kappa
        const Rational rho2 = rs.form(rs.rho(), rs.rho()), x2 = rs.form(f.x0, f.x0);
        const Rational c0 = Rational(f.graded_dim(0)) - Rational(f.graded_dim(1), 2) + 24 * rs.form(rs.rho(), f.x0);
        const Laurent c = Laurent(c0) + Laurent(-12 * rho2) / kappa + Laurent(-12 * x2) * kappa;
        r.result["formula"] = c.str();
    }
    bool symbolic = false;
    for (const auto& [e, c] : kappa.terms()) symbolic |= e.first != 0 || e.second != 0;
    if (!symbolic || (p || q)) {
        const Rational k = level_value(k_text, rs, p, q);
        r.result["k"] = to_string(k);
        r.result["central_charge"] = to_string(central_charge(f, k));
        if (auto lv = classify_level(t, k)) {
            r.result["level"] = level_json(*lv);
            r.result["is_O_of_k"] = orbit_of_level(*lv, *cat).orbit == &f;
        }
    }
    return r;
}

inline OutputRecord cmd_character(const CartanType& t, const std::string& orbit_text, const std::string& k_text,
                                  int order, const std::optional<std::string>& labels) {
    auto cat = shared_catalog(t);
    const NilpotentOrbit& f = cat->find(orbit_text);
    const Rational k = level_value(k_text, cat->root_system());
    const auto lv = require_admissible(t, k);
    const AffineWeight lambda = labels ? weight_from_labels(lv, parse_int_list(*labels)) : level_weight(lv);
    const QSeries s = character_hred(lv, lambda, f, order);
    OutputRecord r{"character", type_inputs(t), json::object(), {}};
    r.inputs["orbit"] = orbit_text;
    r.inputs["k"] = k_text;
    r.inputs["order"] = order;
    if (labels) r.inputs["weight"] = *labels;
    r.result = json{{"orbit", f.label},
                    {"level", level_json(lv)},
                    {"nonzero_expected", hred_nonzero(lv, f)},
                    {"central_charge", to_string(central_charge(f, k))},
                    {"series", qseries_json(s)},
                    {"text", s.str()}};
    return r;
}

inline OutputRecord cmd_exceptional(const CartanType& t) {
    auto cat = shared_catalog(t);
    const auto& rs = cat->root_system();
    OutputRecord r{"exceptional", type_inputs(t), json::object(), {table_id(t, LevelFamily::Principal)}};
    json rows = json::array();
    for (int q = 1; q <= rs.h() + rs.r_check() - 1; ++q) {
        const auto& o = compute_Oq(*cat, q);
        rows.push_back(json{{"q", q},
                            {"orbit", o.label},
                            {"exceptional", is_exceptional_pair(*cat, q, o)},
                            {"coprime_to_r_check", std::gcd(q, rs.r_check()) == 1}});
    }
    json pairs = json::array();
    for (const auto& e : exceptional_w_algebras(*cat))
        pairs.push_back(json{{"q", e.q}, {"orbit", e.orbit->label}, {"principal", e.principal_orbit}});
    r.result = json{{"oq_rows", rows}, {"exceptional_w_algebras", pairs}};
    return r;
}

inline OutputRecord cmd_tables(const CartanType& t) {
    OutputRecord r{"tables", type_inputs(t), json::object(), {"coxeter"}};
    const auto rep = check_tables(t);
    auto rs = shared_root_system(t);
    const auto cx = golden_coxeter(t);
    json diffs = json::array();
    auto cmp = [&](const char* what, Int want, Int got) {
        if (want != got)
            diffs.push_back(json{{"table", "coxeter"}, {"where", t.name() + " " + what}, {"expected", std::to_string(want)},
                                 {"actual", std::to_string(got)}, {"kind", "coxeter"}});
    };
    cmp("h", cx.h, rs->h());
    cmp("h_check", cx.h_check, rs->h_check());
    cmp("Lh_check", cx.Lh_check, rs->Lh_check());
    cmp("r_check", cx.r_check, rs->r_check());
    for (const auto& d : rep.diffs)
        diffs.push_back(json{{"table", d.table}, {"where", d.where}, {"expected", d.expected}, {"actual", d.actual}, {"kind", d.kind}});

    json rows = json::array();
    std::set<std::string> ids;
    for (const auto& rr : rep.rows) {
        ids.insert(table_id(t, rr.row.family));
        json qs = json::array();
        for (const auto& cq : rr.qs) {
            json e{{"q", cq.q}, {"bracketed", cq.bracketed}, {"orbit", cq.orbit}};
            e["exceptional"] = cq.exceptional ? json(*cq.exceptional) : json(nullptr);
            qs.push_back(e);
        }
        json row{{"family", family_name(rr.row.family)},
                 {"q", row_q_text(rr.row)},
                 {"golden_orbit", rr.row.label},
                 {"checked", qs}};
        row["golden_exceptional"] = rr.row.exceptional ? json(*rr.row.exceptional ? "yes" : "no") : json(nullptr);
        if (!rr.row.formula.empty()) {
            row["golden_charge"] = rr.row.formula;
            row["computed_charge"] = rr.computed_formula;
            row["charge_samples"] = rr.samples.size();
        }
        rows.push_back(row);
    }
    for (const auto& id : ids) r.provenance.push_back(id);
    r.result = json{{"coxeter", {{"h", rs->h()}, {"h_check", rs->h_check()}, {"Lh_check", rs->Lh_check()}, {"r_check", rs->r_check()}}},
                    {"rows", rows},
                    {"diffs", diffs},
                    {"ok", diffs.empty()}};
    r.exit_code = diffs.empty() ? 0 : 3;
    return r;
}

inline OutputRecord cmd_dump_data() {
    OutputRecord r{"dump-data", json::object(), json::object(), {}};
    const char* env = std::getenv(kExceptionalDataEnv);
    json recs = json::array();
    for (const auto& rec : exceptional_records()) recs.push_back(json{{"type", rec.type}, {"label", rec.label}, {"marks", rec.marks}});
    r.result = json{{"source", env && *env ? std::string(env) : "embedded"}, {"records", recs}};
    return r;
}

inline OutputRecord cmd_collapse(Family X, const std::string& part) {
    const Partition d = parse_partition(part);
    OutputRecord r{"collapse", json{{"type", std::string(1, family_char(X))}, {"partition", part}}, json::object(), {}};
    const Partition c = collapse(X, d);
    r.result = json{{"input", d.str()}, {"collapse", c.str()}, {"changed", !(c == d)}};
    return r;
}

inline OutputRecord cmd_nilindex(Family X, const std::string& part) {
    const Partition d = parse_partition(part);
    OutputRecord r{"nilindex", json{{"type", std::string(1, family_char(X))}, {"partition", part}}, json::object(), {}};
    const int rank = rank_from_natural_dim(X, d.total());
    auto cat = shared_catalog(make_type(X, rank));
    const auto& o = cat->find(d.str());
    r.result = json{{"partition", d.str()},
                    {"ad_nilpotency_index", ad_nilpotency_index(X, d)},
                    {"height", o.ht},
                    {"coheight", o.ht_check}};
    return r;
}

inline OutputRecord cmd_denominator(const CartanType& t, LevelFamily fam, int order) {
    const auto d = denominator_identity(t, fam, order);
    OutputRecord r{"denominator", type_inputs(t), json::object(), {}};
    r.inputs["family"] = family_name(fam);
    r.inputs["order"] = order;
    r.result = json{{"level", level_json(d.level)},
                    {"product", qseries_json(d.product)},
                    {"weyl_sum", qseries_json(d.weyl_sum)},
                    {"agree", d.agree}};
    r.exit_code = d.agree ? 0 : 3;
    return r;
}

// ---------------------------------------------------------------------------
// text rendering, from the JSON payload only

namespace detail {

inline std::string marks_text(const json& m) {
    std::string s;
    for (const auto& v : m) s += std::to_string(v.get<int>());
    return s;
}

inline std::string orbit_line(const json& o) {
    std::ostringstream out;
    std::string name = o["label"].get<std::string>();
    out << std::left << std::setw(16) << name << " marks " << std::setw(9) << marks_text(o["marks"]) << " ht "
        << std::setw(3) << o["ht"].get<int>() << " ht_check " << std::setw(3) << o["ht_check"].get<int>() << " dim "
        << std::setw(4) << o["dim_orbit"].get<int>() << " dim g^f " << o["dim_centralizer"].get<int>();
    return out.str();
}

inline std::string show(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace detail

inline std::string render_text(const OutputRecord& r) {
    std::ostringstream out;
    const json& x = r.result;
    if (r.command == "orbits") {
        out << x["type"].get<std::string>() << " (dim " << x["dim"].get<int>() << "), " << x["orbits"].size() << " orbits\n";
        for (const auto& o : x["orbits"]) out << "  " << detail::orbit_line(o) << "\n";
    } else if (r.command == "oq") {
        out << (x["family"] == "principal" ? "O_" : "^L O_") << x["q"].get<int>() << " = " << detail::orbit_line(x["orbit"])
            << (x["principal"].get<bool>() ? "  [principal]" : "") << "\n";
    } else if (r.command == "level") {
        if (!x["admissible"].get<bool>()) {
            out << "k = " << x["k"].get<std::string>() << " is not admissible\n";
        } else {
            out << "k = " << x["k"].get<std::string>() << ": " << x["family"].get<std::string>() << " p=" << x["p"].get<Int>()
                << " q=" << x["q"].get<Int>() << (x["degenerate"].get<bool>() ? " degenerate" : " non-degenerate") << "\n";
            out << "  O[k]: " << x["orbit"].get<std::string>() << " (" << x["orbit_flag"].get<std::string>() << ")\n";
            const auto& v = x["associated_variety"];
            out << "  associated variety: " << v["kind"].get<std::string>();
            if (v.contains("orbit")) out << " of " << v["orbit"].get<std::string>();
            if (v["conjecturally_equal"].get<bool>()) out << " (equality with the nilpotent cone expected)";
            out << "\n  c = " << x["central_charge"].get<std::string>() << "\n";
        }
    } else if (r.command == "charge") {
        out << "orbit " << x["orbit"].get<std::string>() << "\n";
        if (x.contains("formula")) out << "  c = " << x["formula"].get<std::string>() << "\n";
        if (x.contains("central_charge"))
            out << "  k = " << x["k"].get<std::string>() << ": c = " << x["central_charge"].get<std::string>() << "\n";
        if (x.contains("is_O_of_k")) out << "  orbit is O[k]: " << (x["is_O_of_k"].get<bool>() ? "yes" : "no") << "\n";
    } else if (r.command == "character") {
        out << "H(L(lambda)) for " << x["orbit"].get<std::string>() << " at k = " << x["level"]["k"].get<std::string>()
            << ", c = " << x["central_charge"].get<std::string>() << "\n  " << x["text"].get<std::string>() << "\n";
    } else if (r.command == "exceptional") {
        out << "  q  O_q              exceptional  gcd(q,r^vee)=1\n";
        for (const auto& row : x["oq_rows"])
            out << "  " << std::left << std::setw(3) << row["q"].get<int>() << std::setw(17) << row["orbit"].get<std::string>()
                << std::setw(13) << (row["exceptional"].get<bool>() ? "yes" : "no")
                << (row["coprime_to_r_check"].get<bool>() ? "yes" : "no") << "\n";
        out << "exceptional W-algebras:";
        for (const auto& p : x["exceptional_w_algebras"]) out << " (" << p["q"].get<int>() << ", " << p["orbit"].get<std::string>() << ")";
        out << "\n";
    } else if (r.command == "tables") {
        const auto& c = x["coxeter"];
        out << "coxeter: h=" << c["h"] << " h_check=" << c["h_check"] << " Lh_check=" << c["Lh_check"] << " r_check=" << c["r_check"] << "\n";
        for (const auto& row : x["rows"]) {
            out << "  " << std::left << std::setw(12) << row["family"].get<std::string>() << " q=" << std::setw(14)
                << row["q"].get<std::string>() << " " << std::setw(14) << row["golden_orbit"].get<std::string>();
            if (!row["golden_exceptional"].is_null()) out << " exc=" << row["golden_exceptional"].get<std::string>();
            if (row.contains("computed_charge")) out << "  c=" << row["computed_charge"].get<std::string>();
            out << "\n";
        }
        if (x["diffs"].empty()) out << "all rows match\n";
        for (const auto& d : x["diffs"])
            out << "MISMATCH " << d["table"].get<std::string>() << " " << d["where"].get<std::string>() << " ["
                << d["kind"].get<std::string>() << "]: expected " << d["expected"].get<std::string>() << ", computed "
                << d["actual"].get<std::string>() << "\n";
    } else if (r.command == "dump-data") {
        out << "# source: " << x["source"].get<std::string>() << "\n";
        for (const auto& rec : x["records"]) {
            out << rec["type"].get<std::string>() << ";" << rec["label"].get<std::string>() << ";";
            bool first = true;
            for (const auto& m : rec["marks"]) {
                out << (first ? "" : ",") << m.get<int>();
                first = false;
            }
            out << "\n";
        }
    } else if (r.command == "collapse") {
        out << "(" << x["input"].get<std::string>() << ") -> (" << x["collapse"].get<std::string>() << ")\n";
    } else if (r.command == "nilindex") {
        out << "(" << x["partition"].get<std::string>() << "): (ad f)^m = 0 from m = " << x["ad_nilpotency_index"].get<int>()
            << ", height " << x["height"].get<int>() << ", coheight " << x["coheight"].get<int>() << "\n";
    } else if (r.command == "denominator") {
        out << "level k = " << x["level"]["k"].get<std::string>() << "\n  product:  " << qseries_from_json(x["product"]).str()
            << "\n  weyl sum: " << qseries_from_json(x["weyl_sum"]).str() << "\n  " << (x["agree"].get<bool>() ? "agree" : "DIFFER")
            << "\n";
    } else {
        out << x.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace orbitlab
