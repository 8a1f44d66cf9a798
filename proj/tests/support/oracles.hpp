#pragma once

// Test-only reference implementations. These deliberately avoid the library
// code paths they are used to check: subspace counting canonicalizes raw
// matrices with its own elimination, and the hull oracle is a naive repeated
// full sweep instead of the counter/frontier algorithm.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qgraph/gfq.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/hull.hpp"

namespace oracles {

/// Canonical string form of the row space of `rows` (entries are element
/// indices), by straightforward Gauss-Jordan written locally. Zero rows are
/// dropped; the result lists the reduced rows joined by ";".
std::string local_canonical(std::vector<std::vector<unsigned>> rows, const qgraph::Field& f);

/// Canonical forms of all distinct k-dimensional row spaces among the q^{k*n}
/// possible k x n matrices, found exhaustively via local_canonical. Only
/// usable for tiny parameters; throws when q^{k*n} would exceed the guard.
std::set<std::string> subspace_forms_bruteforce(int n, int k, const qgraph::Field& f,
                                                std::uint64_t guard = 50'000'000);

std::uint64_t count_subspaces_bruteforce(int n, int k, const qgraph::Field& f,
                                         std::uint64_t guard = 50'000'000);

/// Hull by naive repeated sweeps: every round scans all vertices and adds
/// those with at least two infected neighbors, until no change.
qgraph::VertexSet sweep_hull(const qgraph::SubspaceGraph& g, const qgraph::VertexSet& seed);

/// One naive interval sweep.
qgraph::VertexSet naive_interval(const qgraph::SubspaceGraph& g, const qgraph::VertexSet& seed);

/// Replays an infection trace: every round must equal exactly the naive
/// newly-infected set of the running state, and the final state must match
/// hull_size/is_hull_set.
bool replay_trace(const qgraph::SubspaceGraph& g, const qgraph::InfectionTrace& trace);

/// Distinct ids sampled without replacement (deterministic given the engine).
std::vector<std::uint32_t> sample_ids(std::uint64_t& state, std::size_t universe,
                                      std::size_t count);

} // namespace oracles
