#pragma once

// Worked examples as executable fixtures, and the report format shared with
// the command-line tool.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "codo/diffop.hpp"
#include "codo/rank2.hpp"
#include "codo/spectral.hpp"

namespace codo {

/// Parameter values by name.
using Bindings = std::map<std::string, Rational>;

struct Check {
    std::string name;
    bool pass = false;
    /// Residual or observed value, printed exactly.
    std::string detail;
};

struct Report {
    std::string fixture;
    std::string description;
    std::vector<Check> checks;
    /// Named outputs (orders, curve, operators, ...) in insertion order.
    std::vector<std::pair<std::string, nlohmann::json>> data;

    bool pass() const;
    void add(std::string name, bool pass, std::string detail = {});
    /// add(name, residual.is_zero(), residual text).
    void add_zero(std::string name, const RingElement& residual);
    void add_zero(std::string name, const DiffOp& residual);
    void put(std::string key, nlohmann::json value);

    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// An eigenfunction identity A(e^s r) = lambda e^s r with s' = shift.
struct EigenCheck {
    std::string name;
    int op = 0;  // 0 for the first operator of the pair, 1 for the second
    RingElement shift, r, lambda;
};

/// A commuting pair with the checks every pair fixture runs.
struct PairFixture {
    std::string description;
    TowerPtr tower;
    DiffOp a, b;
    std::string expected_curve;  // empty when none is stated
    std::vector<EigenCheck> eigen;
    /// Further named expressions that must vanish.
    std::vector<std::pair<std::string, RingElement>> identities;
    int schur_depth = 6;
    bool resultant = true;
};

/// Commutation, resultant, annihilation by the expected curve, eigen
/// identities and the Schur expansion.
Report run_pair(const std::string& name, const PairFixture& f);

std::vector<std::string> fixture_names();
/// The operator pair behind a pair fixture. Throws UnknownFixture.
PairFixture pair_fixture(const std::string& name);
/// Throws UnknownFixture.
Report run_fixture(const std::string& name);

/// Mironov family report for genus g; h0..h3 not in `bound` stay symbolic.
/// A negative degree bound selects 2g + 4. Throws ParseError for names other
/// than h0..h3.
Report run_mironov(int g, const Bindings& bound, int degree_bound = -1, bool partner = true);
/// Same with h = (h0, h1, h2, h3), symbolic when empty.
Report run_mironov(int g, const std::vector<Rational>& h, int degree_bound = -1, bool partner = true);

/// Reads a pair file: one `key: value` per line, `#` starts a comment.
///   parameters: a, b          exponential: t, a
///   elliptic: P, dP, 4*P^3 - a*P - b
///   sqrt: p, x^2 + 1          x: x
///   A: D^2 - 2*P              B: D^3 - 3*P*D - 3/2*dP
///   curve: w^2 - z^3 + a/4*z + b/4      (optional)
///   description: ...          depth: 6
/// Bound parameters are replaced by their values before parsing. Throws
/// ParseError, including for bindings that name no declared parameter.
PairFixture load_pair(const std::string& text, const Bindings& bound = {});

/// Checks a user-supplied triple given as
///   {"genus": g, "parameters": {"h": null, "k": "1/2"}, "Q": [q0, ..., q_{g-1}],
///    "V": ..., "W": ..., "expected_curve": "w^2 - (...)"}
/// where null marks a symbolic parameter. Throws ParseError.
Report run_triple(const nlohmann::json& spec, const Bindings& bound = {}, bool partner = true);

}  // namespace codo
