#pragma once

#include "dpe/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dpe {

/// Largest order accepted by the brute-force permutation canonicalisers.
inline constexpr int kMaxCanonicalOrder = 8;

/// Lexicographically smallest row-major flattening of P M P^T over all
/// permutations P of the k*k matrix M. Throws CapExceeded for k > 8.
std::vector<int> canonical_matrix_form(const std::vector<int>& m, int k);

/// Adjacency upper triangle (row-major, i < j) packed into an integer and
/// maximised over vertex orderings sorted by non-increasing degree. Equal
/// codes iff isomorphic. n <= 8.
std::uint64_t canonical_graph_code(const Graph& g);

/// Relabelling of g that realises canonical_graph_code.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Centre-rooted AHU encoding of a tree (any order); equal iff isomorphic.
std::string tree_code(const Graph& t);

} // namespace dpe
