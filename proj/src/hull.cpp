#include "qgraph/hull.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qgraph/constructions.hpp"

namespace qgraph {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {}

VertexSet VertexSet::of(std::size_t universe, std::span<const std::uint32_t> ids) {
    VertexSet s(universe);
    for (std::uint32_t id : ids)
        s.add(id);
    return s;
}

std::vector<std::uint32_t> VertexSet::to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t id = 0; id < universe_; ++id)
        if ((bits_[id >> 6] >> (id & 63)) & 1)
            out.push_back(id);
    return out;
}

bool VertexSet::contains_all(const VertexSet& other) const {
    if (other.universe_ != universe_)
        throw IdOutOfRange("contains_all: universes differ");
    for (std::size_t w = 0; w < bits_.size(); ++w)
        if (other.bits_[w] & ~bits_[w])
            return false;
    return true;
}

namespace {

void check_universe(const SubspaceGraph& g, const VertexSet& T) {
    if (T.universe() != g.vertex_count())
        throw IdOutOfRange("vertex set universe does not match the graph");
}

} // namespace

VertexSet interval(const SubspaceGraph& g, const VertexSet& T) {
    check_universe(g, T);
    std::vector<std::uint8_t> cnt(g.vertex_count(), 0);
    VertexSet out = T;
    for (std::uint32_t v : T.to_vector())
        for (std::uint32_t w : g.neighbors(v))
            if (cnt[w] < 2)
                ++cnt[w];
    for (std::uint32_t w = 0; w < g.vertex_count(); ++w)
        if (cnt[w] >= 2)
            out.add(w);
    return out;
}

std::pair<VertexSet, InfectionTrace> hull(const SubspaceGraph& g, const VertexSet& T) {
    check_universe(g, T);
    InfectionTrace trace;
    trace.seed = T.to_vector();

    VertexSet infected = T;
    std::vector<std::uint8_t> cnt(g.vertex_count(), 0);
    std::vector<std::uint32_t> frontier = trace.seed;

    // Synchronous rounds: a vertex joins round p+1 when its infected-neighbor
    // counter reaches 2 while the round-p frontier is processed.
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t u : frontier)
            for (std::uint32_t w : g.neighbors(u)) {
                if (infected.test(w))
                    continue;
                if (++cnt[w] == 2) {
                    infected.add(w);
                    next.push_back(w);
                }
            }
        std::sort(next.begin(), next.end());
        if (!next.empty())
            trace.rounds.push_back(next);
        frontier = std::move(next);
    }

    trace.converged_at = trace.rounds.size();
    trace.hull_size = infected.count();
    trace.is_hull_set = infected.count() == g.vertex_count();
    return {std::move(infected), std::move(trace)};
}

bool is_hull_set(const SubspaceGraph& g, const VertexSet& T) {
    return hull(g, T).first.count() == g.vertex_count();
}

bool verify_no_singleton_hull(const SubspaceGraph& g) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        VertexSet seed(g.vertex_count());
        seed.add(v);
        if (hull(g, seed).first.count() != 1)
            return false;
    }
    return true;
}

SearchStrategy strategy_from_name(const std::string& name) {
    if (name == "paper")
        return SearchStrategy::paper_construction;
    if (name == "fix-first" || name == "fix_first")
        return SearchStrategy::fix_first_exhaustive;
    if (name == "full")
        return SearchStrategy::full_exhaustive;
    throw InvalidParams("unknown search strategy '" + name + "'");
}

std::string strategy_name(SearchStrategy s) {
    switch (s) {
    case SearchStrategy::paper_construction:
        return "paper";
    case SearchStrategy::fix_first_exhaustive:
        return "fix-first";
    case SearchStrategy::full_exhaustive:
        return "full";
    }
    return "?";
}

namespace {

bool pair_is_hull_set(const SubspaceGraph& g, std::uint32_t a, std::uint32_t b) {
    VertexSet seed(g.vertex_count());
    seed.add(a);
    seed.add(b);
    return is_hull_set(g, seed);
}

SearchResult search_pairs_serial(const SubspaceGraph& g, bool fix_first,
                                 std::uint64_t budget) {
    SearchResult res;
    const std::uint32_t V = std::uint32_t(g.vertex_count());
    for (std::uint32_t v1 = 0; v1 < V; ++v1) {
        for (std::uint32_t v2 = v1 + 1; v2 < V; ++v2) {
            if (res.hulls_computed >= budget)
                throw LimitExceeded("hull-pair search budget exhausted after " +
                                    std::to_string(res.hulls_computed) +
                                    " hull computations (next pair " +
                                    std::to_string(v1) + "," + std::to_string(v2) + ")");
            VertexSet seed(V);
            seed.add(v1);
            seed.add(v2);
            auto [h, trace] = hull(g, seed);
            ++res.hulls_computed;
            if (trace.is_hull_set) {
                res.witnesses.push_back({v1, v2});
                if (!res.first_trace)
                    res.first_trace = std::move(trace);
                if (fix_first)
                    return res;
            }
        }
        if (fix_first)
            break; // v1 pinned to the first enumerated vertex
    }
    return res;
}

// Workers own contiguous v1 blocks; merging block results in order keeps the
// witness list in pair enumeration order no matter when workers finish.
SearchResult search_pairs_parallel(const SubspaceGraph& g, bool fix_first,
                                   std::uint64_t budget, int workers) {
    const std::uint32_t V = std::uint32_t(g.vertex_count());
    const std::uint32_t rows = fix_first ? 1 : V;
    std::vector<std::vector<HullPair>> found(workers);
    std::atomic<std::uint64_t> computed{0};
    std::atomic<bool> over_budget{false};

    auto run_block = [&](int w, std::uint32_t row_begin, std::uint32_t row_end) {
        for (std::uint32_t v1 = row_begin; v1 < row_end && !over_budget.load(); ++v1) {
            const std::uint32_t lo = fix_first ? 1 : v1 + 1;
            for (std::uint32_t v2 = lo; v2 < V; ++v2) {
                if (computed.fetch_add(1) >= budget) {
                    over_budget.store(true);
                    return;
                }
                if (pair_is_hull_set(g, fix_first ? 0 : v1, v2))
                    found[std::size_t(w)].push_back({fix_first ? 0 : v1, v2});
            }
        }
    };

    std::vector<std::thread> pool;
    const std::uint32_t chunk = (rows + workers - 1) / std::uint32_t(workers);
    for (int w = 0; w < workers; ++w) {
        std::uint32_t b = std::uint32_t(w) * chunk;
        std::uint32_t e = std::min(rows, b + chunk);
        if (b >= e)
            break;
        pool.emplace_back(run_block, w, b, e);
    }
    for (auto& t : pool)
        t.join();
    if (over_budget.load())
        throw LimitExceeded("hull-pair search budget exhausted after " +
                            std::to_string(budget) + " hull computations");

    SearchResult res;
    res.hulls_computed = computed.load();
    for (auto& block : found)
        res.witnesses.insert(res.witnesses.end(), block.begin(), block.end());
    if (fix_first && res.witnesses.size() > 1)
        res.witnesses.resize(1);
    if (!res.witnesses.empty()) {
        VertexSet seed(V);
        seed.add(res.witnesses.front().v1);
        seed.add(res.witnesses.front().v2);
        res.first_trace = hull(g, seed).second;
    }
    return res;
}

} // namespace

SearchResult find_hull_pair(const SubspaceGraph& g, SearchStrategy strategy,
                            std::uint64_t budget, int threads) {
    if (g.vertex_count() < 2)
        throw InvalidParams("find_hull_pair: graph has fewer than two vertices");
    if (strategy == SearchStrategy::paper_construction) {
        SearchResult res;
        auto [a, b] = paper_pair_ids(g);
        VertexSet seed(g.vertex_count());
        seed.add(a);
        seed.add(b);
        auto [h, trace] = hull(g, seed);
        res.hulls_computed = 1;
        if (trace.is_hull_set) {
            res.witnesses.push_back({a, b});
            res.first_trace = std::move(trace);
        }
        return res;
    }
    const bool fix_first = strategy == SearchStrategy::fix_first_exhaustive;
    const int workers = resolve_threads(threads);
    if (workers == 1)
        return search_pairs_serial(g, fix_first, budget);
    return search_pairs_parallel(g, fix_first, budget, workers);
}

nlohmann::ordered_json trace_to_json(const SubspaceGraph& g, const InfectionTrace& trace) {
    nlohmann::ordered_json j;
    j["family"] = family_name(g.family());
    j["q"] = g.q();
    j["n"] = g.n();
    j["k"] = g.k();
    nlohmann::ordered_json seed = nlohmann::ordered_json::array();
    for (std::uint32_t id : trace.seed)
        seed.push_back(g.vertex(id).serialize());
    j["seed"] = std::move(seed);
    j["rounds"] = trace.rounds;
    j["converged_at"] = trace.converged_at;
    j["hull_size"] = trace.hull_size;
    j["is_hull_set"] = trace.is_hull_set;
    return j;
}

} // namespace qgraph
