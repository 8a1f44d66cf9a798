#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgraph/subspace.hpp"

namespace qgraph {

enum class GraphFamily { qKneser, Grassmann };

std::string family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

struct GraphCaps {
    std::uint64_t max_vertices = 2'000'000;
    std::uint64_t max_edge_checks = 500'000'000;
    // build workers; 0 = one per available core; results are identical for
    // any value
    int threads = 0;
};

/// Resolves a worker-count setting: values < 1 mean hardware concurrency.
int resolve_threads(int requested);

/// K_q(n,k) or J_q(n,k) materialized with compressed sparse row adjacency.
/// Vertices are in enumeration order (the stable id contract); neighbor
/// lists are sorted ascending. Immutable after build.
class SubspaceGraph {
public:
    GraphFamily family() const { return family_; }
    unsigned q() const { return field_->q(); }
    int n() const { return n_; }
    int k() const { return k_; }
    const Field& field() const { return field_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::uint64_t edge_count() const { return adjacency_.size() / 2; }
    const std::vector<Subspace>& vertices() const { return vertices_; }
    const Subspace& vertex(std::uint32_t id) const;

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const;
    std::uint32_t degree(std::uint32_t v) const;

    std::optional<std::uint32_t> find_vertex(const Subspace& s) const;
    std::optional<std::uint32_t> find_vertex_serialized(const std::string& canonical) const;

    /// true when the parameters fall outside n >= 2k >= 2.
    bool outside_standard_regime() const { return outside_standard_regime_; }

private:
    SubspaceGraph() = default;
    friend SubspaceGraph build_graph(GraphFamily family, unsigned q, int n, int k,
                                     const GraphCaps& caps);

    GraphFamily family_ = GraphFamily::qKneser;
    Field field_;
    int n_ = 0, k_ = 0;
    bool outside_standard_regime_ = false;
    std::vector<Subspace> vertices_;
    std::vector<std::uint64_t> offsets_;   // vertex_count + 1
    std::vector<std::uint32_t> adjacency_; // both directions, rows sorted
    std::unordered_map<std::string, std::uint32_t> id_lookup_;
};

/// Builds the graph eagerly. Edge predicate: intersection dimension 0 for
/// the q-Kneser family, k-1 for the Grassmann family. Throws LimitExceeded
/// when the vertex count or the number of pair checks exceeds the caps.
SubspaceGraph build_graph(GraphFamily family, unsigned q, int n, int k,
                          const GraphCaps& caps = {});

struct DegreeReport {
    std::size_t vertex_count = 0;
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 0;
    bool is_regular = false;
    std::uint32_t degree = 0; // meaningful when is_regular
    std::uint64_t edge_count = 0;
};

DegreeReport degree_report(const SubspaceGraph& g);

/// Classes {w : dim(w ∩ u) = i} for i = 0..k. Disjoint, union = V.
std::vector<std::vector<std::uint32_t>> partition_by_intersection(const SubspaceGraph& g,
                                                                  const Subspace& u);

/// Header "# family q n k", then one "u v" line per edge with u < v,
/// ordered by (u, v).
void export_edge_list(const SubspaceGraph& g, std::ostream& out);

/// JSON sidecar mapping vertex id to the canonical serialized subspace form.
void export_vertex_sidecar(const SubspaceGraph& g, std::ostream& out);

} // namespace qgraph
