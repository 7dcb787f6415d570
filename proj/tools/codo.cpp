// codo: run fixtures, verify commuting pairs and rank-two triples, extract
// spectral curves, build Mironov operators and apply Weyl automorphisms.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
// or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "codo/catalog.hpp"
#include "codo/weyl.hpp"

using namespace codo;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Bindings parse_bindings(const std::string& text) {
    Bindings out;
    if (text.empty()) return out;
    TowerPtr q = tower_build(TowerSpec{});
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--params expects name=value, got '" + item + "'");
        std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        RingElement v;
        try {
            v = q->parse(value);
        } catch (const ParseError&) {
            throw UsageError("value of " + name + " is not a rational number: " + value);
        }
        if (!v.is_rational() && !v.is_zero()) throw UsageError("value of " + name + " is not a rational number");
        out[name] = v.rational_value();
    }
    return out;
}

// Prints reports and returns the exit status.
int emit(const std::vector<Report>& reports, const std::string& format) {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    if (format == "json") {
        if (reports.size() == 1) {
            std::cout << reports[0].to_json().dump(2) << "\n";
        } else {
            nlohmann::ordered_json j;
            j["schema"] = "codo-batch/1";
            j["pass"] = pass;
            j["reports"] = nlohmann::ordered_json::array();
            for (const auto& r : reports) j["reports"].push_back(nlohmann::ordered_json::parse(r.to_json().dump()));
            std::cout << j.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << r.to_text();
    }
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            if (!c.pass) {
                std::cerr << r.fixture << ": first nonzero residual in '" << c.name << "'";
                if (!c.detail.empty()) std::cerr << ": " << c.detail.substr(0, 400);
                std::cerr << "\n";
                return 1;
            }
    return pass ? 0 : 1;
}

WeylAut parse_aut(const std::string& text, const TowerPtr& tower) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--phi expects kind:args, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::vector<RingElement> args;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(tower->parse(item));
    if (kind == "linear") {
        if (args.size() != 4) throw UsageError("linear takes alpha,beta,gamma,delta");
        return WeylAut::linear(args[0], args[1], args[2], args[3]);
    }
    if (kind == "shift_x") return WeylAut::shift_x(args);
    if (kind == "shift_d") return WeylAut::shift_d(args);
    throw UsageError("unknown automorphism kind '" + kind + "' (linear, shift_x, shift_d)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of commuting ordinary differential operators"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* fixtures = app.add_subcommand("fixtures", "Run catalog fixtures");
    bool all = false, list = false;
    std::vector<std::string> names;
    fixtures->add_flag("--all", all, "Run every fixture");
    fixtures->add_flag("--list", list, "List fixture names");
    fixtures->add_option("names", names, "Fixtures to run");

    auto* verify = app.add_subcommand("verify", "Verify a commuting pair or a rank-two triple");
    std::string pair_path, triple_path, params;
    int depth = -1;
    bool no_partner = false;
    auto* pair_opt = verify->add_option("--pair", pair_path, "Pair file");
    auto* triple_opt = verify->add_option("--triple", triple_path, "Rank-two triple (JSON)");
    pair_opt->excludes(triple_opt);
    verify->add_option("--params", params, "Parameter values, name=value,...");
    verify->add_option("--depth", depth, "Schur expansion depth (negative to skip)");
    verify->add_flag("--no-partner", no_partner, "Skip the commuting partner of a triple");

    auto* curve = app.add_subcommand("bc-curve", "Burchnall-Chaundy polynomial of a commuting pair");
    std::string curve_pair;
    curve->add_option("--pair", curve_pair, "Pair file")->required();
    curve->add_option("--params", params, "Parameter values, name=value,...");

    auto* mironov = app.add_subcommand("mironov", "Rank-two operators with polynomial coefficients");
    int genus = 1, degree_bound = -1;
    mironov->add_option("--genus", genus, "Genus g >= 1")->check(CLI::Range(1, 8));
    mironov->add_option("--params", params, "Values for h0..h3, e.g. h3=1,h0=0");
    mironov->add_option("--degree-bound", degree_bound, "Initial x-degree bound for Q");
    mironov->add_flag("--no-partner", no_partner, "Skip the order 4g+2 partner");

    auto* aut = app.add_subcommand("aut", "Apply Weyl algebra automorphisms to a pair");
    std::vector<std::string> phis;
    std::string aut_pair;
    aut->add_option("--phi", phis, "kind:args applied in order; kinds linear, shift_x, shift_d")->required();
    aut->add_option("--pair", aut_pair, "Pair file with polynomial coefficients (default: Dixmier pair)");
    aut->add_option("--params", params, "Parameter values, name=value,...");
    aut->add_option("--depth", depth, "Schur expansion depth (negative to skip)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Bindings bound = parse_bindings(params);
        if (*fixtures) {
            if (list) {
                for (const auto& n : fixture_names()) std::cout << n << "\n";
                return 0;
            }
            if (all) names = fixture_names();
            if (names.empty()) throw UsageError("name fixtures or pass --all");
            std::vector<Report> reports;
            for (const auto& n : names) reports.push_back(run_fixture(n));
            return emit(reports, format);
        }
        if (*verify) {
            if (!pair_path.empty()) {
                PairFixture f = load_pair(read_file(pair_path), bound);
                if (depth != -1) f.schur_depth = depth;
                return emit({run_pair(pair_path, f)}, format);
            }
            if (!triple_path.empty()) {
                nlohmann::json spec;
                try {
                    spec = nlohmann::json::parse(read_file(triple_path));
                } catch (const nlohmann::json::exception& e) {
                    throw UsageError(std::string("invalid JSON: ") + e.what());
                }
                Report r = run_triple(spec, bound, !no_partner);
                r.fixture = triple_path;
                return emit({r}, format);
            }
            throw UsageError("verify needs --pair or --triple");
        }
        if (*curve) {
            PairFixture f = load_pair(read_file(curve_pair), bound);
            f.schur_depth = -1;
            Report r = run_pair(curve_pair, f);
            try {
                if (r.pass()) {
                    ResultantDetail d = bc_resultant_detail(f.a, f.b);
                    r.put("raw_resultant", d.raw.str());
                    nlohmann::json fs = nlohmann::json::array();
                    for (const auto& [c, m] : d.factors) fs.push_back({{"factor", c.str()}, {"multiplicity", m}});
                    r.put("factors", fs);
                }
            } catch (const Error&) {
            }
            return emit({r}, format);
        }
        if (*mironov) {
            Report r = run_mironov(genus, bound, degree_bound, !no_partner);
            return emit({r}, format);
        }
        if (*aut) {
            PairFixture f;
            if (aut_pair.empty()) {
                f.tower = tower_build(TowerSpec{{"h"}, {}});
                if (!bound.empty()) {
                    if (bound.size() != 1 || !bound.count("h")) throw UsageError("the Dixmier pair has one parameter h");
                    f.tower = tower_build(TowerSpec{});
                }
                RingElement h = bound.count("h") ? RingElement(bound.at("h")) : f.tower->var("h");
                DixmierPair p = dixmier_pair(h);
                f.a = p.x.to_diffop(f.tower);
                f.b = p.y.to_diffop(f.tower);
                f.expected_curve = "w^2 - z^3 + " + h.str();
                f.description = "Dixmier pair";
            } else {
                f = load_pair(read_file(aut_pair), bound);
            }
            std::vector<WeylAut> parts;
            for (const auto& s : phis) parts.push_back(parse_aut(s, f.tower));
            WeylAut phi = parts.size() == 1 ? parts[0] : WeylAut::composite(parts);
            WeylElement x = apply_aut(phi, WeylElement::from_diffop(f.a));
            WeylElement y = apply_aut(phi, WeylElement::from_diffop(f.b));
            PairFixture img = f;
            img.a = x.to_diffop(f.tower);
            img.b = y.to_diffop(f.tower);
            img.description = "image of " + (f.description.empty() ? std::string("the pair") : f.description) +
                              " under " + phi.str();
            img.schur_depth = depth;
            bool monic = img.a.leading().is_one();
            if (!monic) img.schur_depth = -1;
            Report r = run_pair("aut", img);
            r.put("automorphism", phi.str());
            r.put("leading_coefficients", nlohmann::json::array({img.a.leading().str(), img.b.leading().str()}));
            return emit({r}, format);
        }
    } catch (const UsageError& e) {
        std::cerr << "codo: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "codo: " << e.what() << "\n";
        return 2;
    } catch (const UnknownFixture& e) {
        std::cerr << "codo: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "codo: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
