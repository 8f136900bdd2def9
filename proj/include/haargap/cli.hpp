#ifndef HAARGAP_CLI_HPP
#define HAARGAP_CLI_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "entropy.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "rigidity_lp.hpp"
#include "root_system.hpp"
#include "supports.hpp"
#include "validation_suite.hpp"

namespace haargap::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSeedEnv = "HAARGAP_SEED";

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kCapacity = 3, kValidationFailure = 4 };

struct CliConfig {
    std::string command;
    std::optional<int> n;
    std::optional<std::string> direction;
    std::string beta = "1/2";
    std::string lattice = "generic";
    std::string bound_mode = "haar-fraction";
    std::optional<std::string> K;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output;
};

struct CliResult {
    int exit_code = kOk;
    std::string output; ///< payload for stdout (empty on error)
    std::string error;  ///< message for stderr
};

/// Thrown for a check that ran but did not pass; carries the payload anyway.
struct ValidationFailure {
    std::string output;
    std::string message;
};

namespace detail {

inline std::string q(const Rational& r)
{
    return to_string(r);
}

inline json rationals(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& r : v)
        out.push_back(q(r));
    return out;
}

inline Lattice parse_lattice(const std::string& s)
{
    if (s == "generic")
        return Lattice::generic;
    if (s == "inner")
        return Lattice::inner;
    throw InvalidArgument("--lattice must be 'generic' or 'inner', got '" + s + "'");
}

inline BoundMode parse_bound_mode(const std::string& s)
{
    if (s == "haar-fraction")
        return BoundMode::fraction_of_haar;
    if (s == "thm14")
        return BoundMode::theorem_14;
    throw InvalidArgument("--bound-mode must be 'haar-fraction' or 'thm14', got '" + s + "'");
}

/// Resolves --n and --direction against each other. Without a direction the
/// default is diag(n-1, -1, ..., -1).
inline CartanElement resolve_direction(const CliConfig& c)
{
    if (c.direction) {
        auto x = CartanElement(parse_rational_list(*c.direction));
        if (c.n && x.dim() != static_cast<std::size_t>(*c.n))
            throw InvalidArgument("--direction has " + std::to_string(x.dim()) + " coordinates but --n is " +
                                  std::to_string(*c.n));
        if (x.dim() < 2)
            throw InvalidArgument("--direction needs at least two coordinates");
        return x;
    }
    if (!c.n)
        throw InvalidArgument("either --n or --direction is required");
    if (*c.n < 2)
        throw InvalidArgument("--n must be at least 2, got " + std::to_string(*c.n));
    return CartanElement::extremely_irregular(static_cast<std::size_t>(*c.n));
}

inline int require_n(const CliConfig& c, int minimum)
{
    if (!c.n)
        throw InvalidArgument("--n is required for '" + c.command + "'");
    if (*c.n < minimum)
        throw InvalidArgument("--n must be at least " + std::to_string(minimum) + ", got " + std::to_string(*c.n));
    return *c.n;
}

inline json labels(const RootSystem& rs, const std::vector<std::size_t>& idx)
{
    json out = json::array();
    for (auto a : idx)
        out.push_back(rs.root(a).label());
    return out;
}

inline json cmd_roots(const CliConfig& c, json& inputs)
{
    const int n = require_n(c, 2);
    const auto x = resolve_direction(c);
    inputs["n"] = n;
    inputs["direction"] = x.csv();
    const auto rs = build_type_a(n);
    json roots = json::array();
    for (const auto& r : rs.roots())
        roots.push_back({{"label", r.label()}, {"i", r.i}, {"j", r.j}, {"positive", r.positive()}});
    Integer order = 1;
    for (int k = 2; k <= n; ++k)
        order *= k;
    return {{"n", n},
            {"rank", rs.rank()},
            {"root_count", rs.size()},
            {"positive_count", rs.positive_roots().size()},
            {"roots", roots},
            {"weyl_group_order", order.str()},
            {"weyl_orbit", {{"direction", x.str()}, {"size", weyl_orbit_size(x).str()}, {"regular", is_regular(x)}}}};
}

inline std::optional<Rational> resolve_k(const CliConfig& c, const Rational& chi_max)
{
    if (c.K)
        return parse_rational(*c.K);
    if (chi_max > 0)
        return Rational(1) / chi_max;
    return std::nullopt;
}

inline json cmd_spectrum(const CliConfig& c, json& inputs)
{
    const auto x = resolve_direction(c);
    const auto rs = build_type_a(static_cast<int>(x.dim()));
    inputs["n"] = x.dim();
    inputs["direction"] = x.csv();
    const auto spec = lyapunov_spectrum(rs, x);
    json out{{"dominant", spec.direction.str()},
             {"values", rationals(spec.values)},
             {"chi_max", q(spec.chi_max)},
             {"regular", is_regular(x)}};
    if (const auto k = resolve_k(c, spec.chi_max)) {
        inputs["K"] = q(*k);
        const auto split = fast_slow_split(rs, x, *k);
        out["split"] = {{"K", q(*k)},
                        {"threshold", q(split.threshold)},
                        {"slow", labels(rs, split.slow_indices)},
                        {"fast", labels(rs, split.fast_indices)},
                        {"J0", split.slow_dimension},
                        {"J", split.total_dimension}};
    }
    return out;
}

inline json cmd_bound(const CliConfig& c, json& inputs)
{
    const auto x = resolve_direction(c);
    const auto rs = build_type_a(static_cast<int>(x.dim()));
    inputs["n"] = x.dim();
    inputs["direction"] = x.csv();
    const auto spec = lyapunov_spectrum(rs, x);
    json out{{"thm14", q(entropy_lower_bound(rs, x))},
             {"haar", q(haar_entropy(rs, x))},
             {"optim", q(conjectured_bound(rs, x))},
             {"chi_max", q(spec.chi_max)}};
    if (const auto k = resolve_k(c, spec.chi_max)) {
        inputs["K"] = q(*k);
        out["K"] = q(*k);
        out["dispersive_exponent"] = q(dispersive_exponent(DispersiveQuery{*k, x}, rs));
    }
    return out;
}

inline json cmd_supports(const CliConfig& c, json& inputs)
{
    const int n = require_n(c, 2);
    const auto lattice = parse_lattice(c.lattice);
    inputs["n"] = n;
    inputs["lattice"] = to_string(lattice);
    std::vector<SupportSet> sets;
    if (lattice == Lattice::generic)
        sets = enumerate_symmetric_closed(build_type_a(n));
    else
        sets = enumerate_block_partitions(n);
    json list = json::array();
    std::map<std::string, std::size_t> by_kind;
    for (const auto& s : sets) {
        list.push_back({{"label", s.label}, {"kind", to_string(s.kind)}, {"roots", s.mask.count()}});
        ++by_kind[to_string(s.kind)];
    }
    return {{"count", sets.size()}, {"counts_by_kind", by_kind}, {"supports", list}};
}

/// Coefficient rows in full for small models, grouped by coefficient otherwise.
inline constexpr std::size_t kFullConstraintListing = 64;

inline json describe_constraints(const LPModel& m)
{
    json rows = json::array();
    for (const auto& row : m.program.constraints) {
        json r{{"name", row.name},
               {"sense", row.sense == Sense::equal ? "=" : (row.sense == Sense::greater_equal ? ">=" : "<=")},
               {"rhs", q(row.rhs)}};
        if (m.supports.size() <= kFullConstraintListing) {
            json terms = json::object();
            for (std::size_t s = 0; s < m.supports.size(); ++s)
                if (row.coeffs[s] != 0)
                    terms[m.supports[s].label] = q(row.coeffs[s]);
            r["terms"] = terms;
        } else {
            std::map<Rational, std::size_t> groups;
            for (const auto& v : row.coeffs)
                ++groups[v];
            json g = json::object();
            for (const auto& [v, count] : groups)
                g[q(v)] = count;
            r["supports_by_coefficient"] = g;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json cmd_haar_lp(const CliConfig& c, json& inputs)
{
    const int n = require_n(c, 3);
    const auto lattice = parse_lattice(c.lattice);
    const auto mode = parse_bound_mode(c.bound_mode);
    const auto beta = parse_rational(c.beta);
    std::optional<CartanElement> direction;
    if (c.direction)
        direction = resolve_direction(c);
    inputs["n"] = n;
    inputs["lattice"] = to_string(lattice);
    inputs["beta"] = q(beta);
    inputs["bound_mode"] = to_string(mode);
    const auto problem = make_problem(n, lattice, beta, mode, direction);
    inputs["direction"] = (direction ? *direction : CartanElement::extremely_irregular(static_cast<std::size_t>(n))).csv();
    const auto model = build_lp(problem);
    const auto sol = solve_lp(model);
    json out{{"status", to_string(sol.status)},
             {"variables", model.program.variables.size()},
             {"test_directions", model.directions.size()},
             {"constraints", describe_constraints(model)}};
    if (sol.status != LpStatus::optimal)
        return out;
    out["min_haar_weight"] = q(sol.optimum);
    const auto report = extremal_vertex_report(sol);
    json vertex = json::array();
    for (const auto& e : report.entries)
        vertex.push_back({{"support", e.label}, {"kind", to_string(e.kind)}, {"weight", q(e.weight)}});
    out["vertex"] = vertex;
    out["vertex_unique"] = "not claimed";
    if (mode == BoundMode::fraction_of_haar && !direction)
        if (const auto closed = closed_form_min_haar_weight(n, lattice, beta)) {
            out["closed_form"] = q(*closed);
            out["matches_closed_form"] = *closed == sol.optimum;
        }
    return out;
}

inline std::uint64_t resolve_seed(const CliConfig& c)
{
    if (c.seed)
        return *c.seed;
    if (const char* env = std::getenv(kSeedEnv); env && *env) {
        const std::string s(env);
        if (s.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidArgument(std::string(kSeedEnv) + " must be a non-negative integer, got '" + s + "'");
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string(kSeedEnv) + " is out of range: '" + s + "'");
        }
    }
    return kDefaultValidationSeed;
}

inline json cs_json(const CotlarSteinCheck& c)
{
    return {{"R1", c.r1}, {"R2", c.r2}, {"lhs", c.lhs}, {"trivial_bound", c.trivial_bound}, {"holds", c.holds}};
}

inline json decay_json(const OscillatoryDecay& d)
{
    json out{{"hbar", d.hbar}, {"magnitudes", d.magnitudes}, {"min_phase_derivative", d.min_phase_derivative}};
    out["fitted_slope"] = d.fitted_slope ? json(*d.fitted_slope) : json(nullptr);
    return out;
}

inline json cmd_validate(const CliConfig& c, json& inputs, bool& passed)
{
    const auto seed = resolve_seed(c);
    inputs["seed"] = seed;
    const auto r = run_validation_suite(seed);
    json families = json::array();
    std::size_t holding = 0;
    for (const auto& f : r.random_families) {
        auto j = cs_json(f.check);
        j["seed"] = f.seed;
        j["members"] = f.members;
        j["rows"] = f.rows;
        j["cols"] = f.cols;
        families.push_back(j);
        holding += f.check.holds ? 1 : 0;
    }
    passed = r.passed();
    const auto& tol = kTolerances;
    return {{"cotlar_stein",
             {{"random_families", families},
              {"random_families_holding", holding},
              {"random_families_total", r.random_families.size()},
              {"single_member", cs_json(r.single_member)},
              {"single_member_equality", r.single_member_equal},
              {"orthogonal_projectors", cs_json(r.projectors)},
              {"orthogonal_projectors_equality", r.projectors_equal}}},
            {"non_stationary_phase",
             {{"non_stationary", decay_json(r.non_stationary)},
              {"stationary", decay_json(r.stationary)},
              {"slope_floor", tol.slope_floor},
              {"stationary_window", {tol.stationary_slope - tol.stationary_window,
                                     tol.stationary_slope + tol.stationary_window}},
              {"non_stationary_ok", r.non_stationary_ok},
              {"stationary_ok", r.stationary_ok}}},
            {"passed", passed}};
}

struct ReportRow {
    std::string lattice;
    int n = 0;
    int t = 0;
    Rational lp;
    Rational closed_form;
};

/// Min Haar weight at beta = 1/2: generic n = 3, 4 and inner n = 3..12. LP
/// instances run concurrently; rows keep this fixed order.
inline std::vector<ReportRow> report_rows()
{
    std::vector<std::pair<Lattice, int>> cases{{Lattice::generic, 3}, {Lattice::generic, 4}};
    for (int n = 3; n <= 12; ++n)
        cases.emplace_back(Lattice::inner, n);
    std::vector<std::future<Rational>> jobs;
    for (const auto& [lattice, n] : cases)
        jobs.push_back(std::async(std::launch::async, [lattice, n] {
            return min_haar_weight(n, lattice, Rational(1, 2));
        }));
    std::vector<ReportRow> rows;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto [lattice, n] = cases[k];
        rows.push_back({to_string(lattice), n, lattice == Lattice::inner ? largest_proper_divisor(n) : 0,
                        jobs[k].get(), *closed_form_min_haar_weight(n, lattice, Rational(1, 2))});
    }
    return rows;
}

inline std::string report_markdown(const std::vector<ReportRow>& rows)
{
    std::ostringstream md;
    md << "| lattice | n | t | LP min w_Δ | closed form | equal |\n";
    md << "|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
        md << "| " << r.lattice << " | " << r.n << " | " << (r.t ? std::to_string(r.t) : "-") << " | " << q(r.lp)
           << " | " << q(r.closed_form) << " | " << (r.lp == r.closed_form ? "yes" : "NO") << " |\n";
    return md.str();
}

/// Flattens a JSON payload into "key: value" lines.
inline void flatten(const json& j, const std::string& prefix, std::ostringstream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
        for (std::size_t k = 0; k < j.size(); ++k)
            flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

inline std::string render(const CliConfig& c, const json& inputs, const json& results)
{
    if (c.format == "json")
        return json{{"command", c.command}, {"inputs", inputs}, {"results", results}, {"version", kVersion}}.dump(2) +
               "\n";
    std::ostringstream out;
    out << "command: " << c.command << "\n";
    flatten(inputs, "inputs", out);
    flatten(results, "results", out);
    return out.str();
}

inline std::string dispatch(const CliConfig& c)
{
    if (c.format != "json" && c.format != "table")
        throw InvalidArgument("--format must be 'json' or 'table', got '" + c.format + "'");
    json inputs = json::object();
    if (c.command == "roots")
        return render(c, inputs, cmd_roots(c, inputs));
    if (c.command == "spectrum")
        return render(c, inputs, cmd_spectrum(c, inputs));
    if (c.command == "bound")
        return render(c, inputs, cmd_bound(c, inputs));
    if (c.command == "supports")
        return render(c, inputs, cmd_supports(c, inputs));
    if (c.command == "haar-lp")
        return render(c, inputs, cmd_haar_lp(c, inputs));
    if (c.command == "validate") {
        bool passed = false;
        auto text = render(c, inputs, cmd_validate(c, inputs, passed));
        if (!passed)
            throw ValidationFailure{std::move(text), "numerical validation suite failed"};
        return text;
    }
    if (c.command == "report") {
        const auto rows = report_rows();
        std::string text;
        if (c.format == "json") {
            json list = json::array();
            for (const auto& r : rows)
                list.push_back({{"lattice", r.lattice}, {"n", r.n}, {"t", r.t}, {"lp", q(r.lp)},
                                {"closed_form", q(r.closed_form)}, {"equal", r.lp == r.closed_form}});
            inputs["beta"] = "1/2";
            text = render(c, inputs, {{"rows", list}});
        } else {
            text = report_markdown(rows);
        }
        for (const auto& r : rows)
            if (r.lp != r.closed_form)
                throw ValidationFailure{text, "LP optimum differs from the closed form for " + r.lattice +
                                                  " n=" + std::to_string(r.n)};
        return text;
    }
    throw InvalidArgument("unknown command '" + c.command + "'");
}

inline void write_output(const CliConfig& c, const std::string& text)
{
    if (!c.output)
        return;
    std::ofstream f(*c.output);
    if (!f)
        throw InvalidArgument("cannot open output file '" + *c.output + "'");
    f << text;
}

} // namespace detail

/// Executes one subcommand. Exit codes: 0 success, 2 invalid input,
/// 3 capacity exceeded, 4 validation failure.
inline CliResult run(const CliConfig& config)
{
    CliResult r;
    try {
        r.output = detail::dispatch(config);
        detail::write_output(config, r.output);
    } catch (const ValidationFailure& f) {
        r.exit_code = kValidationFailure;
        r.output = f.output;
        r.error = f.message;
        try {
            detail::write_output(config, r.output);
        } catch (const InvalidArgument& e) {
            r.error += std::string("; ") + e.what();
        }
    } catch (const InvalidArgument& e) {
        r.exit_code = kInvalidInput;
        r.error = e.what();
    } catch (const CapacityError& e) {
        r.exit_code = kCapacity;
        r.error = e.what();
    } catch (const ResolutionError& e) {
        r.exit_code = kValidationFailure;
        r.error = e.what();
    }
    return r;
}

} // namespace haargap::cli

#endif // HAARGAP_CLI_HPP
