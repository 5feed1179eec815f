// hesscli: command-line front end for root systems, Hessenberg fibers and dot actions.

#include "hess/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kConfigError = 2;
constexpr int kComputeError = 3;

struct RunConfig {
    std::string command;
    std::string type = "G2";
    std::string orbit;
    std::string ideal;
    std::optional<std::string> levi;
    std::string format = "text";
    std::string out;
    bool quintuples = false;
};

/// Raised while resolving names, before any heavy computation starts.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> r;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            r.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    r.push_back(cur);
    return r;
}

std::vector<int> parse_levi(const hess::RootSystem& rs, const std::string& text) {
    std::vector<int> J;
    if (text.empty()) return J;
    for (const auto& tok : split(text, ',')) {
        int found = -1;
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (tok == rs.simple_ascii()[i] || tok == rs.simple_names()[i]) found = static_cast<int>(i);
        if (found < 0) {
            std::string names;
            for (const auto& n : rs.simple_ascii()) names += (names.empty() ? "" : ", ") + n;
            throw ConfigError("unknown simple root '" + tok + "' in --levi; expected a subset of: " + names);
        }
        if (std::find(J.begin(), J.end(), found) == J.end()) J.push_back(found);
    }
    std::sort(J.begin(), J.end());
    return J;
}

std::vector<std::vector<int>> all_levi_subsets(std::size_t rank) {
    std::vector<std::vector<int>> r;
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        std::vector<int> J;
        for (std::size_t i = 0; i < rank; ++i)
            if (mask & (1u << i)) J.push_back(static_cast<int>(i));
        r.push_back(J);
    }
    std::stable_sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return r;
}

std::string dump(const hess::Json& j) { return j.dump(2) + "\n"; }

/// Everything the commands need, resolved from the configuration.
struct Resolved {
    std::shared_ptr<const hess::LieContext> lie;
    std::vector<hess::OrbitContext> orbits;
    std::vector<hess::HessIdeal> ideals;
    std::vector<std::vector<int>> levis;
};

Resolved resolve(const RunConfig& cfg) {
    Resolved r;
    try {
        r.lie = hess::LieContext::make(cfg.type);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const hess::RootSystem& rs = *r.lie->rs;
    const std::string& cmd = cfg.command;
    bool uses_orbit = cmd == "orbits" || cmd == "fibers" || cmd == "quintuples";
    bool uses_ideal = cmd == "ideals" || cmd == "fibers" || cmd == "quintuples" || cmd == "betti" || cmd == "dot-action";
    if (cmd == "dot-action" && rs.label() != "G2") throw ConfigError("dot-action is only available for type G2");
    bool classify = (cmd == "quintuples" || (cmd == "fibers" && cfg.quintuples)) && rs.label() != "G2";

    if (uses_orbit) {
        try {
            if (!cfg.orbit.empty()) r.orbits.push_back(hess::orbit_context(r.lie, cfg.orbit));
            else
                for (const auto& k : hess::supported_orbits(rs.label())) r.orbits.push_back(hess::orbit_context(r.lie, k));
        } catch (const hess::OrbitError& e) {
            throw ConfigError(e.what());
        }
        if (r.orbits.empty() && cmd != "orbits")
            throw ConfigError("no registered orbits for type " + rs.label() + "; supported types: G2, F4, E6");
    }
    if (uses_ideal && !classify) {
        if (!cfg.ideal.empty()) {
            try {
                r.ideals.push_back(hess::find_ideal(rs, cfg.ideal));
            } catch (const hess::FiberError& e) {
                throw ConfigError(e.what());
            }
        } else if (rs.label() == "G2" || cmd == "ideals") {
            r.ideals = hess::hessenberg_ideals(rs);
        } else {
            throw ConfigError(cmd + " for type " + rs.label() + " needs --ideal");
        }
    }
    if (cmd == "betti") {
        if (cfg.levi) r.levis.push_back(parse_levi(rs, *cfg.levi));
        else r.levis = all_levi_subsets(rs.rank());
    } else if (cfg.levi) {
        parse_levi(rs, *cfg.levi);
    }
    return r;
}

std::string render_classification(const RunConfig& cfg, const Resolved& r) {
    using namespace hess;
    Json arr = Json::array();
    std::string text, csv;
    for (const auto& ctx : r.orbits) {
        FiberEngine e(ctx);
        if (!e.levi_is_a1_product() || e.levi_dim() == 0) {
            if (!cfg.orbit.empty())
                throw ConfigError("orbit " + ctx.key + " has no stable-subspace classification; its Levi is not a product of A1 factors");
            continue;
        }
        StableClassification sc = e.classify();
        arr.push_back(to_json(sc, e));
        text += (text.empty() ? "" : "\n") + classification_text(sc, e);
        csv += classification_csv(sc, e);
    }
    if (cfg.format == "json") return dump(arr);
    if (cfg.format == "csv") return csv;
    return text;
}

std::string render_g2_quintuples(const RunConfig& cfg, const Resolved& r) {
    using namespace hess;
    const WeylGroup& W = *r.lie->W;
    std::vector<Quintuple> qs;
    for (const auto& ctx : r.orbits) {
        FiberEngine e(ctx);
        for (const auto& I : r.ideals)
            for (Elem v : e.coset_reps()) qs.push_back(e.quintuple(I, v));
    }
    if (cfg.format == "json") {
        Json a = Json::array();
        for (const auto& q : qs) a.push_back(to_json(q, W));
        return dump(a);
    }
    if (cfg.format == "csv") return quintuples_csv(qs, W);
    return quintuples_text(qs, W);
}

std::string run(const RunConfig& cfg, const Resolved& r) {
    using namespace hess;
    const RootSystem& rs = *r.lie->rs;
    const WeylGroup& W = *r.lie->W;
    const std::string& cmd = cfg.command;
    const std::string& fmt = cfg.format;

    if (cmd == "roots") {
        if (fmt == "json") return dump(to_json(rs));
        if (fmt == "csv") return roots_csv(rs);
        return roots_text(rs);
    }
    if (cmd == "weyl") {
        bool list = W.size() <= 1152;
        if (fmt == "json") return dump(to_json(W, list));
        if (fmt == "csv") return weyl_csv(W);
        return weyl_text(W, list);
    }
    if (cmd == "ideals") {
        if (fmt == "json") {
            Json a = Json::array();
            for (const auto& I : r.ideals) a.push_back(to_json(I, rs));
            return dump(a);
        }
        if (fmt == "csv") return ideals_csv(rs, r.ideals);
        return ideals_text(rs, r.ideals);
    }
    if (cmd == "orbits") {
        if (fmt == "json") {
            Json a = Json::array();
            for (const auto& c : r.orbits) a.push_back(to_json(c));
            return dump(a);
        }
        if (fmt == "csv") return orbits_csv(r.orbits);
        std::string out;
        for (const auto& c : r.orbits) out += (out.empty() ? "" : "\n") + orbit_text(c);
        return out;
    }
    if (cmd == "quintuples" || (cmd == "fibers" && cfg.quintuples)) {
        if (rs.label() == "G2") return render_g2_quintuples(cfg, r);
        return render_classification(cfg, r);
    }
    if (cmd == "fibers") {
        std::vector<std::unique_ptr<FiberEngine>> engines;
        FiberGrid g;
        g.ideals = r.ideals;
        for (const auto& c : r.orbits) {
            engines.push_back(std::make_unique<FiberEngine>(c));
            g.orbits.push_back(engines.back().get());
        }
        for (const auto& I : g.ideals) {
            g.pavings.emplace_back();
            for (auto* e : g.orbits) g.pavings.back().push_back(e->paving(I));
        }
        if (fmt == "json") return dump(fibers_json(g));
        if (fmt == "csv") return fibers_csv(g);
        return fibers_text(g);
    }
    if (cmd == "betti") {
        std::vector<BettiTable> tables;
        for (const auto& I : r.ideals)
            for (const auto& J : r.levis) tables.push_back(betti_table(W, I, J));
        if (fmt == "json") {
            Json a = Json::array();
            for (const auto& t : tables) a.push_back(to_json(t, W));
            return dump(a);
        }
        if (fmt == "csv") {
            std::string out = betti_csv_header();
            for (const auto& t : tables) out += betti_csv_rows(t, W);
            return out;
        }
        std::string out;
        for (const auto& t : tables) out += (out.empty() ? "" : "\n") + betti_text(t, W);
        return out;
    }
    if (cmd == "dot-action") {
        DotActionSolver solver(r.lie);
        std::vector<DotActionResult> res;
        for (const auto& I : r.ideals) res.push_back(solver.solve(I));
        if (fmt == "json") {
            Json a = Json::array();
            for (const auto& x : res) a.push_back(to_json(x));
            return dump(a);
        }
        if (fmt == "csv") return dot_action_csv(res);
        return dot_action_text(res);
    }
    throw ConfigError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Root systems, Hessenberg ideal fibers and Weyl group dot actions"};
    app.set_config("--config", "", "Flat key=value file with defaults for the options below");
    auto fmt = std::make_shared<CLI::ConfigBase>();
    fmt->arrayDelimiter(';');
    app.config_formatter(fmt);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.fallthrough();

    app.add_option("--type", cfg.type, "Root system type, e.g. G2, F4, E6, A2")->capture_default_str();
    app.add_option("--orbit", cfg.orbit, "Orbit key, e.g. A1t, G2a1, F4a2, E6a3");
    app.add_option("--ideal", cfg.ideal, "Hessenberg ideal, e.g. I_beta_alpha");
    auto* levi = app.add_option("--levi", "Simple roots of the Levi, e.g. \"alpha,beta\"; empty for none")->expected(0, 1);
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Write output to this file instead of standard output");
    app.add_flag("--quintuples", cfg.quintuples, "fibers: classify stable subspaces instead of paving");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"roots", "Positive roots and Cartan matrix"},
        {"weyl", "Weyl group order, reduced words and inversion sets"},
        {"ideals", "Hessenberg ideals"},
        {"orbits", "Registered nilpotent orbit contexts"},
        {"fibers", "Affine pavings of Hessenberg ideal fibers"},
        {"quintuples", "Quintuple data (G2) or stable-subspace classification (F4, E6)"},
        {"betti", "Cell dimensions of regular Hessenberg varieties"},
        {"dot-action", "Dot actions of W(G2) on cohomology"},
    };
    for (const auto& [name, desc] : commands) app.add_subcommand(name, desc);
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (levi->count() > 0) cfg.levi = levi->as<std::string>();

    Resolved resolved;
    try {
        resolved = resolve(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }

    std::string output;
    try {
        output = run(cfg, resolved);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kComputeError;
    }

    if (cfg.out.empty()) {
        std::cout << output;
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << cfg.out << "\n";
        return kConfigError;
    }
    f << output;
    return 0;
}
