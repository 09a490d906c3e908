#include "dpe/cli.hpp"

#include "dpe/error.hpp"
#include "dpe/graph.hpp"
#include "dpe/laws.hpp"
#include "dpe/pareto.hpp"
#include "dpe/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef DPE_VERSION
#define DPE_VERSION "0.0.0"
#endif

namespace dpe::cli {

using nlohmann::json;

namespace {

std::string twelve(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    const double y = std::strtod(twelve(x).c_str(), nullptr);
    if (y == std::trunc(y) && std::abs(y) < 9.0e15) return static_cast<long long>(y);
    return y;
}

json nums(const std::vector<double>& xs) {
    json a = json::array();
    for (double x : xs) a.push_back(num(x));
    return a;
}

std::string join(const std::vector<Vertex>& vs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? sep : "") + std::to_string(vs[i]);
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::vector<std::string> family;
    std::string edges;
    std::string graph6;
    std::string format = "json";
    int max_order = kDefaultMaxOrder;
    int jobs = 0;
    double tolerance = kDedupTolerance;

    EnumerationOptions enumeration() const { return {max_order, tolerance, jobs}; }
};

void add_common(CLI::App* sub, Options& o, bool with_source) {
    if (with_source) {
        sub->add_option("--family", o.family, "Named family and its integer parameters, e.g. --family path 5")
            ->expected(1, -1);
        sub->add_option("--edges", o.edges, "Edge-list file (first line n, then 'u v' per line)");
        sub->add_option("--graph6", o.graph6, "graph6 file; the first graph is used");
    }
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--max-order", o.max_order, "Largest order accepted for subset enumeration")
        ->check(CLI::Range(1, kHardMaxOrder));
    sub->add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance", o.tolerance, "Relative tolerance for merging equal Pareto eigenvalues")
        ->check(CLI::PositiveNumber);
}

Graph load_graph(const Options& o) {
    const int sources = !o.family.empty() + !o.edges.empty() + !o.graph6.empty();
    if (sources != 1) throw ParseError(0, "give exactly one of --family, --edges, --graph6");
    if (!o.edges.empty()) return parse_edge_list(read_file(o.edges));
    if (!o.graph6.empty()) {
        auto graphs = parse_graph6(read_file(o.graph6));
        if (graphs.empty()) throw ParseError(0, "no graph in '" + o.graph6 + "'");
        return graphs.front();
    }
    std::vector<int> params;
    for (std::size_t i = 1; i < o.family.size(); ++i) {
        const std::string& p = o.family[i];
        char* end = nullptr;
        const long v = std::strtol(p.c_str(), &end, 10);
        if (p.empty() || *end != '\0') throw ParseError(0, "family parameter '" + p + "' is not an integer");
        params.push_back(static_cast<int>(v));
    }
    try {
        return make_family(o.family[0], params);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

json graph_summary(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json s = {{"order", g.order()}, {"size", g.size()}, {"edges", edges}, {"edge_list", to_edge_list(g)}};
    if (!g.name().empty()) s["name"] = g.name();
    s["diameter"] = is_connected(g) ? json(diameter(distance_matrix(g))) : json(nullptr);
    return s;
}

json document(const std::string& command, json payload, const Graph* g) {
    json doc = {{"command", command}, {"tool_version", DPE_VERSION}, {"payload", std::move(payload)}};
    if (g) doc["graph_summary"] = graph_summary(*g);
    return doc;
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void table_header(std::ostream& out, const Graph& g) {
    out << "graph  " << describe(g) << "\n";
    out << "order " << g.order() << "  size " << g.size() << "  diameter " << diameter(distance_matrix(g)) << "\n";
}

// --- spectrum ------------------------------------------------------------------

int cmd_spectrum(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o);
    const ParetoSpectrum s = pareto_spectrum(g, o.enumeration());
    const int d = diameter(distance_matrix(g));
    bool ladder = true;
    for (int i = 0; i <= d; ++i) {
        bool found = false;
        for (double v : s.values) found = found || same_eigenvalue(v, i, s.dedup_tolerance);
        ladder = ladder && found;
    }

    if (o.format == "csv") {
        out << "value,witness\n";
        for (std::size_t i = 0; i < s.size(); ++i)
            out << format_number(s.values[i]) << ',' << join(s.witness_vertices(i), " ") << '\n';
        return kOk;
    }
    if (o.format == "table") {
        table_header(out, g);
        out << "count " << s.size() << "  integers 0.." << d << " present: " << (ladder ? "yes" : "no") << "\n\n";
        char line[160];
        std::snprintf(line, sizeof line, "%4s  %-18s  %s\n", "#", "value", "witness");
        out << line;
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::snprintf(line, sizeof line, "%4zu  %-18s  {%s}\n", i + 1, format_number(s.values[i]).c_str(),
                          join(s.witness_vertices(i), ",").c_str());
            out << line;
        }
        return kOk;
    }
    json witnesses = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) witnesses.push_back(s.witness_vertices(i));
    json payload = {{"count", s.size()},
                    {"values", nums(s.values)},
                    {"witnesses", witnesses},
                    {"dedup_tolerance", s.dedup_tolerance},
                    {"spectral_radius", num(s.values.back())},
                    {"integer_ladder", {{"diameter", d}, {"all_present", ladder}}}};
    print_json(out, document("spectrum", std::move(payload), &g));
    return kOk;
}

// --- rho2 ----------------------------------------------------------------------

json bound_json(const BoundResult& r) {
    json j = {{"id", std::string(bound_name(r.id))},
              {"direction", std::string(direction_name(r.direction))},
              {"applicable", r.applicable}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.applicable) return j;
    j["bound_value"] = num(r.bound_value);
    j["actual_value"] = num(r.actual_value);
    j["slack"] = num(r.slack);
    j["tight"] = r.tight;
    j["strict"] = r.strict;
    j["violated"] = r.violated();
    if (r.k) j["k"] = *r.k;
    return j;
}

int cmd_rho2(const Options& o, bool with_bounds, std::ostream& out) {
    const Graph g = load_graph(o);
    if (g.order() < 2) throw std::invalid_argument("rho2 needs at least two vertices");
    const Rho2 r = rho2_fast(g);
    std::vector<BoundResult> bounds;
    if (with_bounds) bounds = bound_report(g, o.enumeration());

    if (o.format == "csv") {
        out << "item,direction,applicable,bound_value,actual_value,slack,tight,witness\n";
        out << "rho2,,,," << format_number(r.value) << ",,," << r.witness << '\n';
        for (const auto& b : bounds) {
            out << bound_name(b.id) << ',' << direction_name(b.direction) << ',' << (b.applicable ? "true" : "false");
            if (b.applicable)
                out << ',' << format_number(b.bound_value) << ',' << format_number(b.actual_value) << ','
                    << format_number(b.slack) << ',' << (b.tight ? "true" : "false") << ",\n";
            else
                out << ",,,,,\n";
        }
        return kOk;
    }
    if (o.format == "table") {
        table_header(out, g);
        out << "rho2 " << format_number(r.value) << "  (delete vertex " << r.witness << ")\n";
        if (!bounds.empty()) {
            char line[200];
            std::snprintf(line, sizeof line, "\n%-28s  %-5s  %-16s  %-16s  %-16s  %s\n", "bound", "dir", "bound",
                          "actual", "slack", "note");
            out << line;
            for (const auto& b : bounds) {
                if (!b.applicable) {
                    std::snprintf(line, sizeof line, "%-28s  %-5s  %-16s  %-16s  %-16s  n/a: %s\n",
                                  std::string(bound_name(b.id)).c_str(), std::string(direction_name(b.direction)).c_str(),
                                  "-", "-", "-", b.reason.c_str());
                } else {
                    const char* note = b.violated() ? "VIOLATED" : b.tight ? "tight" : "";
                    std::snprintf(line, sizeof line, "%-28s  %-5s  %-16s  %-16s  %-16s  %s\n",
                                  std::string(bound_name(b.id)).c_str(), std::string(direction_name(b.direction)).c_str(),
                                  format_number(b.bound_value).c_str(), format_number(b.actual_value).c_str(),
                                  format_number(b.slack).c_str(), note);
                }
                out << line;
            }
        }
        return kOk;
    }
    json payload = {{"value", num(r.value)}, {"witness", r.witness}};
    if (with_bounds) {
        json list = json::array();
        for (const auto& b : bounds) list.push_back(bound_json(b));
        payload["bounds"] = list;
    }
    print_json(out, document("rho2", std::move(payload), &g));
    return kOk;
}

// --- verify --------------------------------------------------------------------

json report_json(const PropertyReport& r) {
    json j = {{"property_id", r.property_id}, {"instance", r.instance}, {"status", std::string(status_name(r.status))}};
    if (r.counterexample)
        j["counterexample"] = {{"vertices", r.counterexample->vertices},
                               {"values", nums(r.counterexample->values)},
                               {"note", r.counterexample->note}};
    json m = json::object();
    for (const auto& [k, v] : r.metrics) m[k] = num(v);
    j["metrics"] = m;
    return j;
}

using Flat = std::vector<std::pair<std::string, std::string>>;

void emit_flat(std::ostream& out, const std::string& format, const Flat& rows) {
    if (format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
        return;
    }
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows) out << k << std::string(w + 2 - k.size(), ' ') << v << '\n';
}

int cmd_verify(const Options& o, const std::string& suite, int order, int random, std::ostream& out) {
    if (suite == "extremal") {
        const ExtremalResult r = extremal_search(order, true, o.jobs, o.tolerance);
        if (o.format == "json") {
            json wit = json::array();
            for (const Graph& g : r.witnesses) {
                json edges = json::array();
                for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
                wit.push_back({{"edges", edges}, {"graph6", to_graph6(g)}});
            }
            json payload = {{"suite", suite},
                            {"order", r.order},
                            {"max_count", r.max_count},
                            {"witness_count", r.witnesses.size()},
                            {"witnesses", wit},
                            {"graphs_scanned", r.graphs_scanned},
                            {"connected_graphs", r.connected_graphs},
                            {"violations", 0}};
            print_json(out, document("verify", std::move(payload), nullptr));
        } else {
            Flat rows = {{"suite", suite},
                         {"order", std::to_string(r.order)},
                         {"max_count", std::to_string(r.max_count)},
                         {"witness_count", std::to_string(r.witnesses.size())},
                         {"graphs_scanned", std::to_string(r.graphs_scanned)},
                         {"connected_graphs", std::to_string(r.connected_graphs)}};
            for (std::size_t i = 0; i < r.witnesses.size(); ++i)
                rows.emplace_back("witness." + std::to_string(i + 1), describe(r.witnesses[i]));
            emit_flat(out, o.format, rows);
        }
        return kOk;
    }

    if (suite == "bounds-sweep") {
        const BoundSweepReport r = bounds_sweep(order, random, o.jobs);
        if (o.format == "json") {
            json stats = json::array();
            for (const auto& s : r.stats)
                stats.push_back({{"id", std::string(bound_name(s.id))},
                                 {"applicable", s.applicable},
                                 {"tight", s.tight},
                                 {"violations", s.violations},
                                 {"mismatches", s.mismatches},
                                 {"min_slack", s.applicable ? num(s.min_slack) : json(nullptr)},
                                 {"characterization", s.characterization}});
            json issues = json::array();
            for (const auto& i : r.issues)
                issues.push_back({{"id", std::string(bound_name(i.id))},
                                  {"kind", i.kind},
                                  {"graph", describe(i.graph)},
                                  {"graph6", to_graph6(i.graph)},
                                  {"expected_tight", i.expected_tight},
                                  {"result", bound_json(i.result)}});
            json payload = {{"suite", suite},
                            {"exhaustive_order", r.exhaustive_order},
                            {"random_graphs", r.random_graphs},
                            {"graphs", r.graphs},
                            {"violations", r.violations()},
                            {"mismatches", r.mismatches()},
                            {"bounds", stats},
                            {"issues", issues}};
            print_json(out, document("verify", std::move(payload), nullptr));
        } else {
            Flat rows = {{"suite", suite},
                         {"exhaustive_order", std::to_string(r.exhaustive_order)},
                         {"random_graphs", std::to_string(r.random_graphs)},
                         {"graphs", std::to_string(r.graphs)},
                         {"violations", std::to_string(r.violations())},
                         {"mismatches", std::to_string(r.mismatches())}};
            for (const auto& s : r.stats) {
                const std::string id(bound_name(s.id));
                rows.emplace_back(id + ".applicable", std::to_string(s.applicable));
                rows.emplace_back(id + ".tight", std::to_string(s.tight));
                rows.emplace_back(id + ".violations", std::to_string(s.violations));
                rows.emplace_back(id + ".mismatches", std::to_string(s.mismatches));
                if (s.applicable) rows.emplace_back(id + ".min_slack", format_number(s.min_slack));
            }
            emit_flat(out, o.format, rows);
        }
        return r.ok() ? kOk : kViolation;
    }

    SweepReport r;
    if (suite == "convexity") r = convexity_sweep(order, o.jobs);
    else if (suite == "monotonicity") r = monotonicity_sweep(order, o.jobs);
    else if (suite == "quasiconvex") r = quasiconvexity_sweep(order, o.jobs);
    else if (suite == "tree-extremes") r = tree_extremes_sweep(order, o.jobs);
    else throw ParseError(0, "unknown suite '" + suite + "'");

    if (o.format == "json") {
        json metrics = json::object();
        for (const auto& [k, v] : r.metrics) metrics[k] = num(v);
        json failures = json::array();
        for (const auto& f : r.failures) failures.push_back(report_json(f));
        json payload = {{"suite", r.suite},         {"order", r.order},
                        {"instances", r.instances}, {"checks", r.checks},
                        {"violations", r.violations}, {"inconclusive", r.inconclusive},
                        {"metrics", metrics},       {"failures", failures}};
        print_json(out, document("verify", std::move(payload), nullptr));
    } else {
        Flat rows = {{"suite", r.suite},
                     {"order", std::to_string(r.order)},
                     {"instances", std::to_string(r.instances)},
                     {"checks", std::to_string(r.checks)},
                     {"violations", std::to_string(r.violations)},
                     {"inconclusive", std::to_string(r.inconclusive)}};
        for (const auto& [k, v] : r.metrics) rows.emplace_back(k, format_number(v));
        for (std::size_t i = 0; i < r.failures.size(); ++i)
            rows.emplace_back("failure." + std::to_string(i + 1), r.failures[i].instance);
        emit_flat(out, o.format, rows);
    }
    return r.ok() ? kOk : kViolation;
}

// --- formulas ------------------------------------------------------------------

int cmd_formulas(const Options& o, const std::string& id, const std::vector<int>& params, std::ostream& out) {
    const ClosedForm cf = closed_form(id, params);
    const Graph instance = closed_form_instance(id, params);
    std::optional<FormulaCheck> check;
    if (instance.order() <= o.max_order) check = check_closed_form(id, params, o.enumeration());
    const bool agrees = !check || check->difference <= 1e-9;

    const auto listed = [](const std::vector<double>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + format_number(xs[i]);
        return s;
    };
    std::string ptext;
    for (std::size_t i = 0; i < params.size(); ++i) ptext += (i ? " " : "") + std::to_string(params[i]);

    if (o.format == "csv") {
        out << "id,params,formula,exact,brute,difference\n";
        out << id << ',' << ptext << ',' << listed(cf.values) << ',' << csv_field(cf.exact) << ','
            << (check ? listed(check->brute) : "") << ',' << (check ? format_number(check->difference) : "") << '\n';
    } else if (o.format == "table") {
        Flat rows = {{"id", id}, {"params", ptext}, {"formula", listed(cf.values)}, {"exact", cf.exact},
                     {"instance", describe(instance)}};
        if (check) {
            rows.emplace_back("brute", listed(check->brute));
            rows.emplace_back("difference", format_number(check->difference));
        } else {
            rows.emplace_back("brute", "skipped (order above --max-order)");
        }
        emit_flat(out, "table", rows);
    } else {
        const auto value_json = [&](const std::vector<double>& xs) { return xs.size() == 1 ? num(xs[0]) : nums(xs); };
        json payload = {{"id", id},
                        {"params", params},
                        {"formula", value_json(cf.values)},
                        {"exact", cf.exact},
                        {"quadratic_residual", num(cf.quadratic_residual)},
                        {"brute", check ? value_json(check->brute) : json(nullptr)},
                        {"difference", check ? num(check->difference) : json(nullptr)},
                        {"agrees", agrees}};
        print_json(out, document("formulas", std::move(payload), &instance));
    }
    return agrees ? kOk : kViolation;
}

} // namespace

std::string format_number(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    std::string s = twelve(x);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance Pareto eigenvalues of connected graphs", "dpe"};
    app.require_subcommand(1);
    app.set_version_flag("--version", DPE_VERSION);

    Options o;
    bool with_bounds = false;
    std::string suite, formula_id;
    int order = 0, random = 500;
    std::vector<int> params;

    auto* spectrum = app.add_subcommand("spectrum", "Distance Pareto spectrum with witness subsets");
    add_common(spectrum, o, true);

    auto* rho2 = app.add_subcommand("rho2", "Second largest Pareto eigenvalue by vertex deletion");
    add_common(rho2, o, true);
    rho2->add_flag("--bounds", with_bounds, "Append every bound evaluated on the graph");

    auto* verify = app.add_subcommand("verify", "Run a property suite; exit 1 on any violation");
    add_common(verify, o, false);
    verify->add_option("suite", suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"convexity", "monotonicity", "quasiconvex", "tree-extremes", "bounds-sweep", "extremal"}));
    verify->add_option("--order", order, "Largest (or, for extremal, exact) graph order")->required();
    verify->add_option("--random", random, "Random graphs of order 7..10 added to bounds-sweep")
        ->check(CLI::NonNegativeNumber);

    auto* formulas = app.add_subcommand("formulas", "Closed form against brute force");
    add_common(formulas, o, false);
    formulas->add_option("id", formula_id, "Formula identifier")->required();
    formulas->add_option("params", params, "Integer parameters");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*spectrum) return cmd_spectrum(o, out);
        if (*rho2) return cmd_rho2(o, with_bounds, out);
        if (*verify) return cmd_verify(o, suite, order, random, out);
        return cmd_formulas(o, formula_id, params, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const Disconnected& e) {
        err << "error: " << e.what() << '\n';
        return kDisconnected;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kViolation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

} // namespace dpe::cli
