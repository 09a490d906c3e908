#include "dpe/laws.hpp"

#include "dpe/error.hpp"
#include "dpe/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dpe {

namespace {

long long isqrt(long long x) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::string fraction(long long p, long long q) {
    const long long g = std::gcd(p, q);
    p /= g;
    q /= g;
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

void need(bool ok, std::string_view id, const char* what) {
    if (!ok) throw std::invalid_argument(std::string(id) + ": " + what);
}

struct FormSpec {
    std::string_view id;
    int arity;
};

constexpr FormSpec kForms[] = {
    {"complete_spectrum", 1}, {"star_radius", 1},       {"kn_minus_e_radius", 1},    {"rho2_kn_minus_e", 1},
    {"rho2_kab", 2},          {"rho2_k_pendant", 1},    {"rho2_two_nonincident", 1},
};

const FormSpec& form_spec(std::string_view id, std::span<const int> params) {
    for (const auto& f : kForms)
        if (f.id == id) {
            if (static_cast<int>(params.size()) != f.arity)
                throw std::invalid_argument(std::string(id) + " takes " + std::to_string(f.arity) + " parameter(s)");
            return f;
        }
    throw std::invalid_argument("unknown closed form '" + std::string(id) + "'");
}

} // namespace

double Surd::value() const {
    return (static_cast<double>(a) + static_cast<double>(c) * std::sqrt(static_cast<double>(r))) /
           static_cast<double>(den);
}

std::string Surd::str() const {
    if (r == 1 || c == 0) return fraction(a + c, den);
    std::string root = c == 1 ? "sqrt(" + std::to_string(r) + ")" : std::to_string(c) + "*sqrt(" + std::to_string(r) + ")";
    std::string num = a == 0 ? root : std::to_string(a) + "+" + root;
    if (den == 1) return num;
    return (a == 0 ? num : "(" + num + ")") + "/" + std::to_string(den);
}

Surd make_surd(long long a, long long disc, long long den) {
    if (disc < 0 || den <= 0) throw std::invalid_argument("make_surd: needs disc >= 0 and den > 0");
    Surd s{a, 1, disc, den};
    if (disc == 0) {
        s.c = 0;
        s.r = 1;
    } else {
        for (long long f = isqrt(disc); f > 1; --f)
            if (disc % (f * f) == 0) {
                s.c = f;
                s.r = disc / (f * f);
                break;
            }
    }
    if (s.r == 1) {
        s.a += s.c;
        s.c = 0;
    }
    const long long g = std::gcd(std::gcd(s.a, s.c), s.den);
    if (g > 1) {
        s.a /= g;
        s.c /= g;
        s.den /= g;
    }
    return s;
}

std::vector<std::string> closed_form_names() {
    std::vector<std::string> out;
    for (const auto& f : kForms) out.emplace_back(f.id);
    return out;
}

ClosedForm closed_form(std::string_view id, std::initializer_list<int> params) {
    return closed_form(id, std::span<const int>(params.begin(), params.size()));
}

ClosedForm closed_form(std::string_view id, std::span<const int> params) {
    form_spec(id, params);
    ClosedForm cf;
    cf.id = std::string(id);
    cf.params.assign(params.begin(), params.end());
    const long long n = params[0];

    if (id == "complete_spectrum") {
        need(n >= 1, id, "n >= 1");
        for (long long i = 0; i < n; ++i) cf.values.push_back(static_cast<double>(i));
        cf.exact = n == 1 ? "{0}" : "{0, 1, ..., " + std::to_string(n - 1) + "}";
        return cf;
    }

    // Each value is the positive root of x^2 - p x - q = 0.
    double p = 0.0, q = 0.0;
    Surd s;
    if (id == "star_radius") {
        need(n >= 2, id, "n >= 2");
        s = make_surd(n - 2, (n - 2) * (n - 2) + n - 1, 1);
        p = 2.0 * (n - 2);
        q = n - 1;
    } else if (id == "kn_minus_e_radius") {
        need(n >= 3, id, "n >= 3");
        s = make_surd(n - 1, (n - 1) * (n - 1) + 8, 2);
        p = n - 1;
        q = 2;
    } else if (id == "rho2_kn_minus_e") {
        need(n >= 3, id, "n >= 3");
        s = make_surd(n - 2, n * n - 4 * n + 12, 2);
        p = n - 2;
        q = 2;
    } else if (id == "rho2_kab") {
        const long long a = params[0], b = params[1];
        need(a >= 1 && a <= b, id, "1 <= a <= b");
        s = make_surd(a + b - 3, a * a + b * b + b - a * b - 2 * a + 1, 1);
        p = 2.0 * (a + b - 3);
        q = static_cast<double>(a * a + b * b + b - a * b - 2 * a + 1) - static_cast<double>((a + b - 3) * (a + b - 3));
    } else if (id == "rho2_k_pendant") {
        need(n >= 2, id, "n >= 2");
        s = make_surd(n - 3, n * n + 10 * n - 23, 2);
        p = n - 3;
        q = 4.0 * (n - 2);
    } else {  // rho2_two_nonincident
        need(n >= 5, id, "n >= 5");
        s = make_surd(n - 2, n * n - 4 * n + 20, 2);
        p = n - 2;
        q = 4;
    }
    const double x = s.value();
    cf.values = {x};
    cf.exact = s.str();
    cf.quadratic_residual = std::abs(x * x - p * x - q);
    if (cf.quadratic_residual > 1e-9)
        throw NumericalError(cf.id + ": quadratic self-check residual " + std::to_string(cf.quadratic_residual));
    return cf;
}

Graph closed_form_instance(std::string_view id, std::span<const int> params) {
    form_spec(id, params);
    const int n = params[0];
    if (id == "complete_spectrum") return make_family("complete", {n});
    if (id == "star_radius") return make_family("star", {n});
    if (id == "kn_minus_e_radius" || id == "rho2_kn_minus_e") return make_family("complete_minus_edge", {n});
    if (id == "rho2_kab") return make_family("complete_bipartite", {params[0], params[1]});
    if (id == "rho2_k_pendant") return make_family("clique_plus_pendant_p", {n - 1, 1});
    return make_family("complete_minus_two_nonincident_edges", {n});
}

FormulaCheck check_closed_form(std::string_view id, std::span<const int> params, const EnumerationOptions& opts) {
    FormulaCheck fc;
    fc.formula = closed_form(id, params);
    const ParetoSpectrum spec = pareto_spectrum(closed_form_instance(id, params), opts);
    if (id == "complete_spectrum") {
        fc.brute = spec.values;
    } else if (id == "star_radius" || id == "kn_minus_e_radius") {
        fc.brute = {rho_k(spec, 1)};
    } else {
        fc.brute = {rho_k(spec, 2)};
    }
    if (fc.brute.size() != fc.formula.values.size()) {
        fc.difference = std::numeric_limits<double>::infinity();
    } else {
        for (std::size_t i = 0; i < fc.brute.size(); ++i)
            fc.difference = std::max(fc.difference, std::abs(fc.brute[i] - fc.formula.values[i]));
    }
    return fc;
}

// --- bounds --------------------------------------------------------------------

namespace {

constexpr std::string_view kBoundNames[] = {
    "rho_k_lower",       "count_lower",          "rho2_dominating_upper", "rho2_dominating_lower",
    "rho2_diam2_upper",  "rho2_noncomplete_lower", "rho2_simple_lower",   "rho2_wiener_lower",
    "rho2_two_edges_lower", "rho2_vs_lambda2",   "rho2_bipartite_lower",  "rho2_tmin_lower",
    "rho2_second_component_upper",
};

// Shared, lazily computed quantities for one graph.
class Context {
public:
    Context(const Graph& g, const EnumerationOptions& opts)
        : g_(g), dm_(distance_matrix(g)), n_(g.order()), d_(diameter(dm_)), opts_(opts) {}

    const Graph& graph() const { return g_; }
    const DistanceMatrix& dm() const { return dm_; }
    int n() const { return n_; }
    int d() const { return d_; }
    long long full_size() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }
    bool complete() const { return g_.size() == full_size(); }

    const ParetoSpectrum& spectrum() {
        if (!spectrum_) spectrum_ = pareto_spectrum(dm_, opts_);
        return *spectrum_;
    }
    const Rho2& rho2() {
        if (!rho2_) rho2_ = rho2_fast(g_, dm_);
        return *rho2_;
    }
    double lambda2() {
        if (!lambda2_) lambda2_ = full_spectrum(SymMatrix::from_distances(dm_))[n_ - 2];
        return *lambda2_;
    }
    const Structure& structure() {
        if (!structure_) structure_ = structure_queries(g_);
        return *structure_;
    }

private:
    const Graph& g_;
    DistanceMatrix dm_;
    int n_;
    int d_;
    EnumerationOptions opts_;
    std::optional<ParetoSpectrum> spectrum_;
    std::optional<Rho2> rho2_;
    std::optional<double> lambda2_;
    std::optional<Structure> structure_;
};

BoundResult finish(BoundResult r) {
    r.slack = r.direction == Direction::lower ? r.actual_value - r.bound_value : r.bound_value - r.actual_value;
    r.tight = std::abs(r.slack) <= kTightTolerance;
    return r;
}

BoundResult inapplicable(BoundId id, Direction dir, std::string reason) {
    BoundResult r;
    r.id = id;
    r.direction = dir;
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

Direction direction_of(BoundId id) {
    switch (id) {
    case BoundId::rho2_dominating_upper:
    case BoundId::rho2_diam2_upper:
    case BoundId::rho2_second_component_upper:
        return Direction::upper;
    default:
        return Direction::lower;
    }
}

BoundResult rho_k_bound(Context& ctx, std::optional<int> k) {
    const int n = ctx.n();
    const ParetoSpectrum& s = ctx.spectrum();
    BoundResult r;
    r.id = BoundId::rho_k_lower;
    if (k) {
        if (*k < 1 || *k > n) return inapplicable(r.id, Direction::lower, "k outside 1..n");
        r.k = k;
        r.bound_value = n - *k;
        r.actual_value = rho_k(s, *k);
        return finish(r);
    }
    bool all_tight = true;
    for (int j = 1; j <= n; ++j) {
        BoundResult one;
        one.id = r.id;
        one.k = j;
        one.bound_value = n - j;
        one.actual_value = rho_k(s, j);
        one = finish(one);
        all_tight = all_tight && one.tight;
        if (j == 1 || one.slack < r.slack) r = one;
    }
    r.tight = all_tight;
    return r;
}

bool has_dominating_vertex(Context& ctx) {
    for (Vertex v = 0; v < ctx.n(); ++v)
        if (ctx.graph().degree(v) == ctx.n() - 1) return true;
    return false;
}

// Second-largest entry of the rho_2 eigenvector: if the largest entry is
// shared, every vertex attaining it; otherwise every vertex attaining the
// runner-up value.
std::vector<Vertex> second_component_candidates(const std::vector<double>& x) {
    constexpr double tol = 1e-9;
    std::vector<Vertex> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] > x[b]; });
    const double top = x[order[0]];
    std::vector<Vertex> out;
    if (order.size() > 1 && std::abs(x[order[1]] - top) <= tol) {
        for (Vertex v : order)
            if (std::abs(x[v] - top) <= tol) out.push_back(v);
    } else {
        const double second = x[order[1]];
        for (Vertex v : order)
            if (v != order[0] && std::abs(x[v] - second) <= tol) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundResult evaluate(BoundId id, Context& ctx, std::optional<int> k) {
    const Direction dir = direction_of(id);
    if (id == BoundId::rho_k_lower) return rho_k_bound(ctx, k);

    const int n = ctx.n();
    const int d = ctx.d();
    BoundResult r;
    r.id = id;
    r.direction = dir;

    if (id == BoundId::count_lower) {
        r.bound_value = n + d - 1;
        r.actual_value = static_cast<double>(ctx.spectrum().size());
        return finish(r);
    }

    if (n < 2) return inapplicable(id, dir, "order below 2");

    switch (id) {
    case BoundId::rho2_dominating_upper:
    case BoundId::rho2_dominating_lower:
        if (!has_dominating_vertex(ctx)) return inapplicable(id, dir, "no vertex of degree n-1");
        r.bound_value = id == BoundId::rho2_dominating_upper ? 2.0 * (n - 2) : n - 2.0;
        break;
    case BoundId::rho2_diam2_upper:
        if (d != 2) return inapplicable(id, dir, "diameter is not 2");
        r.bound_value = 2.0 * (n - 2);
        break;
    case BoundId::rho2_noncomplete_lower:
        if (ctx.complete()) return inapplicable(id, dir, "graph is complete");
        r.bound_value = (n - 2 + std::sqrt(static_cast<double>(n * n - 4 * n + 12))) / 2.0;
        break;
    case BoundId::rho2_simple_lower:
        if (ctx.complete()) return inapplicable(id, dir, "graph is complete");
        r.bound_value = n - 2 + 2.0 / (n - 1);
        break;
    case BoundId::rho2_wiener_lower: {
        int tmin = transmission(ctx.dm(), 0);
        for (Vertex v = 1; v < n; ++v) tmin = std::min(tmin, transmission(ctx.dm(), v));
        r.bound_value = 2.0 * static_cast<double>(wiener(ctx.dm()) - tmin) / (n - 1);
        break;
    }
    case BoundId::rho2_two_edges_lower:
        if (ctx.complete()) return inapplicable(id, dir, "graph is complete");
        if (ctx.graph().size() == ctx.full_size() - 1) return inapplicable(id, dir, "graph is K_n - e");
        r.bound_value = (n - 2 + std::sqrt(static_cast<double>(n * n - 4 * n + 20))) / 2.0;
        break;
    case BoundId::rho2_vs_lambda2:
        r.strict = true;
        r.bound_value = ctx.lambda2();
        break;
    case BoundId::rho2_bipartite_lower: {
        if (!ctx.structure().is_bipartite) return inapplicable(id, dir, "graph is not bipartite");
        const int h = n / 2;
        r.bound_value = n - 3 + std::sqrt(static_cast<double>(n * n + n + 1 + 3 * h * (h - n - 1)));
        break;
    }
    case BoundId::rho2_tmin_lower: {
        int tmin = transmission(ctx.dm(), 0);
        for (Vertex v = 1; v < n; ++v) tmin = std::min(tmin, transmission(ctx.dm(), v));
        const double t = tmin - 2.0 * d;
        r.bound_value = (t + std::sqrt(t * t + 4.0 * (n - d - 1))) / 2.0;
        break;
    }
    case BoundId::rho2_second_component_upper: {
        const Rho2& r2 = ctx.rho2();
        std::vector<Vertex> support;
        for (Vertex v = 0; v < n; ++v)
            if (v != r2.witness) support.push_back(v);
        const ParetoEigenpair pair = pareto_eigenpair(ctx.dm(), support);
        double best = std::numeric_limits<double>::infinity();
        for (Vertex j : second_component_candidates(pair.vector)) {
            const double t = transmission(ctx.dm(), j) - 2.0;
            const double b = (t + std::sqrt(t * t + 4.0 * (n - 2))) / 2.0;
            if (b < best) {
                best = b;
                r.reason = "j = " + std::to_string(j);
            }
        }
        r.bound_value = best;
        break;
    }
    default:
        break;
    }
    r.actual_value = ctx.rho2().value;
    return finish(r);
}

} // namespace

std::string_view bound_name(BoundId id) { return kBoundNames[static_cast<int>(id)]; }

std::optional<BoundId> parse_bound_id(std::string_view name) {
    for (BoundId id : kAllBounds)
        if (bound_name(id) == name) return id;
    return std::nullopt;
}

std::string_view direction_name(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

BoundResult evaluate_bound(BoundId id, const Graph& g, std::optional<int> k, const EnumerationOptions& opts) {
    Context ctx(g, opts);
    return evaluate(id, ctx, k);
}

std::vector<BoundResult> bound_report(const Graph& g, const EnumerationOptions& opts) {
    Context ctx(g, opts);
    std::vector<BoundResult> out;
    for (BoundId id : kAllBounds) out.push_back(evaluate(id, ctx, std::nullopt));
    return out;
}

ParetoEigenpair rho2_eigenpair(const Graph& g) {
    const DistanceMatrix dm = distance_matrix(g);
    const Rho2 r2 = rho2_fast(g, dm);
    std::vector<Vertex> support;
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != r2.witness) support.push_back(v);
    return pareto_eigenpair(dm, support);
}

} // namespace dpe
