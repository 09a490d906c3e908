#pragma once

#include "dpe/graph.hpp"
#include "dpe/pareto.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpe {

/// |slack| at or below this counts as equality.
inline constexpr double kTightTolerance = 1e-8;

// --- closed forms ----------------------------------------------------------

/// (a + c*sqrt(r)) / den with r square-free (r = 1 for rationals) and the
/// common factor of a, c, den removed.
struct Surd {
    long long a = 0;
    long long c = 0;
    long long r = 1;
    long long den = 1;

    double value() const;
    std::string str() const;
};

/// Builds (a + sqrt(disc)) / den in reduced form. disc >= 0, den > 0.
Surd make_surd(long long a, long long disc, long long den);

struct ClosedForm {
    std::string id;
    std::vector<int> params;
    /// One entry, except complete_spectrum which lists the whole set ascending.
    std::vector<double> values;
    std::string exact;
    /// Residual of the defining quadratic at the evaluated root (0 when none).
    double quadratic_residual = 0.0;

    double value() const { return values.back(); }
};

/// Identifiers:
///   complete_spectrum n        Pi(K_n)
///   star_radius n              rho(D(S_n))
///   kn_minus_e_radius n        rho(D(K_n - e))
///   rho2_kn_minus_e n          rho_2(K_n - e)
///   rho2_kab a b               rho_2(K_{a,b}), a <= b
///   rho2_k_pendant n           rho_2(K_{n-1}^1)
///   rho2_two_nonincident n     rho_2(K_n minus two non-incident edges), n >= 5
/// Throws std::invalid_argument for unknown ids or parameters outside the
/// validity range, NumericalError if the quadratic self-check fails.
ClosedForm closed_form(std::string_view id, std::span<const int> params);
ClosedForm closed_form(std::string_view id, std::initializer_list<int> params);
std::vector<std::string> closed_form_names();

/// Graph whose brute-force value the closed form predicts.
Graph closed_form_instance(std::string_view id, std::span<const int> params);

struct FormulaCheck {
    ClosedForm formula;
    std::vector<double> brute;
    /// Largest absolute difference (infinity on a size mismatch).
    double difference = 0.0;
};

/// Evaluates the formula and the brute-force Pareto spectrum of its instance.
FormulaCheck check_closed_form(std::string_view id, std::span<const int> params, const EnumerationOptions& opts = {});

// --- bounds ------------------------------------------------------------------

enum class BoundId {
    rho_k_lower,
    count_lower,
    rho2_dominating_upper,
    rho2_dominating_lower,
    rho2_diam2_upper,
    rho2_noncomplete_lower,
    rho2_simple_lower,
    rho2_wiener_lower,
    rho2_two_edges_lower,
    rho2_vs_lambda2,
    rho2_bipartite_lower,
    rho2_tmin_lower,
    rho2_second_component_upper,
};

inline constexpr std::array kAllBounds{
    BoundId::rho_k_lower,           BoundId::count_lower,          BoundId::rho2_dominating_upper,
    BoundId::rho2_dominating_lower, BoundId::rho2_diam2_upper,     BoundId::rho2_noncomplete_lower,
    BoundId::rho2_simple_lower,     BoundId::rho2_wiener_lower,    BoundId::rho2_two_edges_lower,
    BoundId::rho2_vs_lambda2,       BoundId::rho2_bipartite_lower, BoundId::rho2_tmin_lower,
    BoundId::rho2_second_component_upper,
};

std::string_view bound_name(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);

enum class Direction { lower, upper };

std::string_view direction_name(Direction d);

struct BoundResult {
    BoundId id{};
    Direction direction = Direction::lower;
    double bound_value = 0.0;
    double actual_value = 0.0;
    /// actual - bound for lower bounds, bound - actual for upper bounds.
    double slack = 0.0;
    bool tight = false;
    /// The inequality is strict (rho2_vs_lambda2).
    bool strict = false;
    bool applicable = true;
    std::string reason;
    /// rho_k_lower: the k evaluated (or, aggregated, the k with least slack).
    std::optional<int> k;

    bool violated() const { return applicable && (strict ? slack <= kTightTolerance : slack < -kTightTolerance); }
};

/// One bound on a connected graph. rho_k_lower without k aggregates over
/// k = 1..n: the least slack is reported and `tight` means tight for every k.
/// Throws Disconnected; inapplicable bounds are reported, never thrown.
BoundResult evaluate_bound(BoundId id, const Graph& g, std::optional<int> k = std::nullopt,
                           const EnumerationOptions& opts = {});

/// Every bound in kAllBounds order.
std::vector<BoundResult> bound_report(const Graph& g, const EnumerationOptions& opts = {});

/// Pareto eigenvector for rho_2: Perron vector of D(G) with the rho2_fast
/// witness deleted, embedded with a zero at that vertex.
ParetoEigenpair rho2_eigenpair(const Graph& g);

} // namespace dpe
