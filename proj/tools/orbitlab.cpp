#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbitlab/commands.hpp"

using namespace orbitlab;

namespace {

struct TypeArgs {
    std::string family;
    int rank = 0;
    void add(CLI::App* app) {
        app->add_option("type", family, "Cartan family letter (A..G)")->required();
        app->add_option("rank", rank, "rank")->required();
    }
    CartanType get() const { return parse_type(family, rank); }
};

// Syntax problems in positional arguments are usage errors (exit 1).
template <class F>
void usage_check(F&& f) {
    try {
        f();
    } catch (const DomainError& e) {
        throw CLI::ValidationError(e.what());
    }
}

void check_level_syntax(const std::string& k) {
    require(k.find('.') == std::string::npos, "levels must be exact fractions, not decimals: '" + k + "'");
    std::string s = k;
    for (auto pos = s.find("hv"); pos != std::string::npos; pos = s.find("hv")) s.replace(pos, 2, "1");
    parse_formula(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitlab: nilpotent orbits, admissible levels and W-algebra data"};
    app.require_subcommand(1);
    bool as_json = false;
    int order = 10;

    std::function<OutputRecord()> run;

    auto with_common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "print the JSON record");
        sub->add_option("--order", order, "truncation order for q-series")->check(CLI::PositiveNumber);
        return sub;
    };

    // orbits
    TypeArgs t_orbits;
    auto* s_orbits = with_common(app.add_subcommand("orbits", "list nilpotent orbits"));
    t_orbits.add(s_orbits);
    s_orbits->callback([&] {
        usage_check([&] { t_orbits.get(); });
        run = [&] { return cmd_orbits(t_orbits.get()); };
    });

    // oq
    TypeArgs t_oq;
    int oq_q = 0;
    std::string oq_family = "principal";
    auto* s_oq = with_common(app.add_subcommand("oq", "O_q (principal) or ^L O_q (coprincipal)"));
    t_oq.add(s_oq);
    s_oq->add_option("q", oq_q, "q")->required();
    s_oq->add_option("family", oq_family, "principal | coprincipal");
    s_oq->callback([&] {
        usage_check([&] { t_oq.get(); parse_level_family(oq_family); });
        run = [&] { return cmd_oq(t_oq.get(), oq_q, parse_level_family(oq_family)); };
    });

    // level
    TypeArgs t_level;
    std::string level_k;
    auto* s_level = with_common(app.add_subcommand("level", "classify an admissible level"));
    t_level.add(s_level);
    s_level->add_option("k", level_k, "level, e.g. -1/2 or -hv+7/12")->required();
    s_level->callback([&] {
        usage_check([&] { t_level.get(); check_level_syntax(level_k); });
        run = [&] { return cmd_level(t_level.get(), level_k); };
    });

    // charge
    TypeArgs t_charge;
    std::string charge_orbit, charge_k;
    std::optional<Int> charge_p, charge_q;
    auto* s_charge = with_common(app.add_subcommand("charge", "central charge of W_k(g, f)"));
    t_charge.add(s_charge);
    s_charge->add_option("orbit", charge_orbit, "orbit label or partition")->required();
    s_charge->add_option("k", charge_k, "level; may use p and q, e.g. -30+p/6")->required();
    s_charge->add_option("-p,--p", charge_p, "value for p");
    s_charge->add_option("-q,--q", charge_q, "value for q");
    s_charge->callback([&] {
        usage_check([&] { t_charge.get(); check_level_syntax(charge_k); });
        run = [&] { return cmd_charge(t_charge.get(), charge_orbit, charge_k, charge_p, charge_q); };
    });

    // character
    TypeArgs t_char;
    std::string char_orbit, char_k;
    std::optional<std::string> char_weight;
    auto* s_char = with_common(app.add_subcommand("character", "q-character of H(L(lambda))"));
    t_char.add(s_char);
    s_char->add_option("orbit", char_orbit, "orbit label or partition")->required();
    s_char->add_option("k", char_k, "admissible level")->required();
    s_char->add_option("--weight", char_weight, "Dynkin labels of the finite part, e.g. 1,0");
    s_char->callback([&] {
        usage_check([&] { t_char.get(); check_level_syntax(char_k); });
        run = [&] { return cmd_character(t_char.get(), char_orbit, char_k, order, char_weight); };
    });

    // exceptional
    TypeArgs t_exc;
    auto* s_exc = with_common(app.add_subcommand("exceptional", "exceptional pairs and W-algebras"));
    t_exc.add(s_exc);
    s_exc->callback([&] {
        usage_check([&] { t_exc.get(); });
        run = [&] { return cmd_exceptional(t_exc.get()); };
    });

    // tables
    TypeArgs t_tab;
    auto* s_tab = with_common(app.add_subcommand("tables", "regenerate the O_q tables and diff against golden copies"));
    t_tab.add(s_tab);
    s_tab->callback([&] {
        usage_check([&] { t_tab.get(); });
        run = [&] { return cmd_tables(t_tab.get()); };
    });

    // dump-data
    auto* s_dump = with_common(app.add_subcommand("dump-data", "print the exceptional orbit records"));
    s_dump->callback([&] {
        run = [&] { return cmd_dump_data(); };
    });

    // collapse
    std::string col_family, col_part;
    auto* s_col = with_common(app.add_subcommand("collapse", "B/C/D-collapse of a partition"));
    s_col->add_option("type", col_family, "B, C or D")->required();
    s_col->add_option("partition", col_part, "e.g. 4,4,1")->required();
    s_col->callback([&] {
        usage_check([&] { parse_family(col_family); parse_partition(col_part); });
        run = [&] { return cmd_collapse(parse_family(col_family), col_part); };
    });

    // nilindex
    std::string nil_family, nil_part;
    auto* s_nil = with_common(app.add_subcommand("nilindex", "nilpotency index of ad f in the natural realization"));
    s_nil->add_option("type", nil_family, "A, B, C or D")->required();
    s_nil->add_option("partition", nil_part, "e.g. 3,3,1")->required();
    s_nil->callback([&] {
        usage_check([&] { parse_family(nil_family); parse_partition(nil_part); });
        run = [&] { return cmd_nilindex(parse_family(nil_family), nil_part); };
    });

    // denominator
    TypeArgs t_den;
    std::string den_family = "principal";
    auto* s_den = with_common(app.add_subcommand("denominator", "check the denominator identity at the boundary level"));
    t_den.add(s_den);
    s_den->add_option("family", den_family, "principal | coprincipal");
    s_den->callback([&] {
        usage_check([&] { t_den.get(); parse_level_family(den_family); });
        run = [&] { return cmd_denominator(t_den.get(), parse_level_family(den_family), order); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const OutputRecord r = run();
        if (as_json) std::cout << json(r).dump(2) << "\n";
        else std::cout << render_text(r);
        return r.exit_code;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
