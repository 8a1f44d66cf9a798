#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Membership set over the vertex ids of a fixed graph. O(1) test/insert,
/// iteration in ascending id order.
class VertexSet {
public:
    explicit VertexSet(std::size_t universe);

    static VertexSet of(std::size_t universe, std::span<const std::uint32_t> ids);

    std::size_t universe() const { return universe_; }
    std::size_t count() const { return count_; }

    bool test(std::uint32_t id) const {
        check(id);
        return (bits_[id >> 6] >> (id & 63)) & 1;
    }

    /// Returns true when the id was newly inserted.
    bool add(std::uint32_t id) {
        check(id);
        std::uint64_t& w = bits_[id >> 6];
        const std::uint64_t m = std::uint64_t(1) << (id & 63);
        if (w & m)
            return false;
        w |= m;
        ++count_;
        return true;
    }

    std::vector<std::uint32_t> to_vector() const; // ascending

    bool contains_all(const VertexSet& other) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.bits_ == b.bits_;
    }

private:
    void check(std::uint32_t id) const {
        if (id >= universe_)
            throw IdOutOfRange("vertex id " + std::to_string(id) +
                               " outside universe of size " + std::to_string(universe_));
    }

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Round-by-round record of the threshold-2 infection fixpoint. rounds[p]
/// holds the vertices newly infected in round p+1 (the seed is round 0 and
/// kept separately); rounds are pairwise disjoint and their union with the
/// seed is the final hull.
struct InfectionTrace {
    std::vector<std::uint32_t> seed;
    std::vector<std::vector<std::uint32_t>> rounds;
    std::size_t converged_at = 0; // number of growth rounds until fixpoint
    std::size_t hull_size = 0;
    bool is_hull_set = false;
};

/// I[T] = T together with all vertices having at least two neighbors in T.
VertexSet interval(const SubspaceGraph& g, const VertexSet& T);

/// Least fixpoint of the interval operator containing T, with a synchronous
/// round trace. Counter-based frontier propagation, O(V + E).
std::pair<VertexSet, InfectionTrace> hull(const SubspaceGraph& g, const VertexSet& T);

bool is_hull_set(const SubspaceGraph& g, const VertexSet& T);

/// Confirms that no singleton infects anything: hull({v}) = {v} for all v.
bool verify_no_singleton_hull(const SubspaceGraph& g);

enum class SearchStrategy { paper_construction, fix_first_exhaustive, full_exhaustive };

SearchStrategy strategy_from_name(const std::string& name);
std::string strategy_name(SearchStrategy s);

struct HullPair {
    std::uint32_t v1 = 0;
    std::uint32_t v2 = 0;
};

struct SearchResult {
    std::vector<HullPair> witnesses; // in pair enumeration order
    std::uint64_t hulls_computed = 0;
    std::optional<InfectionTrace> first_trace; // trace of the first witness
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Searches for a two-vertex hull set. paper_construction seeds the explicit
/// pair for the graph's family and parameters; fix_first_exhaustive pins v1
/// to vertex 0 and scans v2 (sound for these vertex-transitive families, and
/// only applied when selected); full_exhaustive scans all pairs and collects
/// every witness. Throws LimitExceeded when the number of hull computations
/// would exceed the budget. Exhaustive scans distribute independent hull
/// computations over `threads` workers (0 = one per core); witnesses are
/// reported in pair enumeration order regardless of completion order.
SearchResult find_hull_pair(const SubspaceGraph& g, SearchStrategy strategy,
                            std::uint64_t budget = kDefaultSearchBudget,
                            int threads = 1);

/// Trace export with family/parameters, canonical seed forms, per-round id
/// arrays, convergence round and coverage flag.
nlohmann::ordered_json trace_to_json(const SubspaceGraph& g, const InfectionTrace& trace);

} // namespace qgraph
