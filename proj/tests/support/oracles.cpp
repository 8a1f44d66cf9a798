#include "oracles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oracles {

using qgraph::Field;
using qgraph::FieldElement;

std::string local_canonical(std::vector<std::vector<unsigned>> rows, const Field& f) {
    const std::size_t nrows = rows.size();
    const std::size_t ncols = nrows ? rows[0].size() : 0;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < ncols && lead_row < nrows; ++col) {
        std::size_t piv = lead_row;
        while (piv < nrows && rows[piv][col] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(rows[lead_row], rows[piv]);
        unsigned lead = rows[lead_row][col];
        if (lead != 1) {
            unsigned li = f->inv(FieldElement{std::uint16_t(lead)}).index;
            for (std::size_t c = 0; c < ncols; ++c)
                rows[lead_row][c] =
                    f->mul(FieldElement{std::uint16_t(li)},
                           FieldElement{std::uint16_t(rows[lead_row][c])})
                        .index;
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == lead_row || rows[r][col] == 0)
                continue;
            unsigned factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) {
                unsigned sub = f->mul(FieldElement{std::uint16_t(factor)},
                                      FieldElement{std::uint16_t(rows[lead_row][c])})
                                   .index;
                rows[r][c] = f->sub(FieldElement{std::uint16_t(rows[r][c])},
                                    FieldElement{std::uint16_t(sub)})
                                 .index;
            }
        }
        ++lead_row;
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t r = 0; r < lead_row; ++r) {
        if (!first)
            out << ';';
        first = false;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c)
                out << ' ';
            out << rows[r][c];
        }
    }
    return out.str();
}

std::set<std::string> subspace_forms_bruteforce(int n, int k, const Field& f,
                                                std::uint64_t guard) {
    const unsigned q = f->q();
    std::uint64_t total = 1;
    for (int i = 0; i < n * k; ++i) {
        total *= q;
        if (total > guard)
            throw std::runtime_error("subspace_forms_bruteforce: too many matrices");
    }
    std::set<std::string> canon;
    std::vector<std::vector<unsigned>> rows(std::size_t(k),
                                            std::vector<unsigned>(std::size_t(n), 0));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) {
                rows[std::size_t(r)][std::size_t(c)] = unsigned(rest % q);
                rest /= q;
            }
        std::string form = local_canonical(rows, f);
        // full rank: k reduced rows -> k-1 separators plus nonempty, cheap test
        int row_count = form.empty() ? 0 : 1 + int(std::count(form.begin(), form.end(), ';'));
        if (row_count == k)
            canon.insert(std::move(form));
    }
    return canon;
}

std::uint64_t count_subspaces_bruteforce(int n, int k, const Field& f, std::uint64_t guard) {
    return subspace_forms_bruteforce(n, k, f, guard).size();
}

qgraph::VertexSet naive_interval(const qgraph::SubspaceGraph& g,
                                 const qgraph::VertexSet& seed) {
    qgraph::VertexSet out = seed;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (seed.test(v))
            continue;
        int hits = 0;
        for (std::uint32_t w : g.neighbors(v))
            if (seed.test(w) && ++hits >= 2)
                break;
        if (hits >= 2)
            out.add(v);
    }
    return out;
}

qgraph::VertexSet sweep_hull(const qgraph::SubspaceGraph& g, const qgraph::VertexSet& seed) {
    qgraph::VertexSet cur = seed;
    while (true) {
        qgraph::VertexSet next = naive_interval(g, cur);
        if (next.count() == cur.count())
            return cur;
        cur = next;
    }
}

bool replay_trace(const qgraph::SubspaceGraph& g, const qgraph::InfectionTrace& trace) {
    qgraph::VertexSet state = qgraph::VertexSet::of(g.vertex_count(), trace.seed);
    for (const auto& round : trace.rounds) {
        qgraph::VertexSet next = naive_interval(g, state);
        std::vector<std::uint32_t> fresh;
        for (std::uint32_t v : next.to_vector())
            if (!state.test(v))
                fresh.push_back(v);
        if (fresh != round)
            return false;
        state = next;
    }
    // converged and consistent with the reported summary
    if (naive_interval(g, state).count() != state.count())
        return false;
    if (state.count() != trace.hull_size)
        return false;
    if (trace.is_hull_set != (state.count() == g.vertex_count()))
        return false;
    return trace.converged_at == trace.rounds.size();
}

std::vector<std::uint32_t> sample_ids(std::uint64_t& state, std::size_t universe,
                                      std::size_t count) {
    auto next = [&state]() {
        // xorshift64*, deterministic across platforms
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    };
    std::set<std::uint32_t> picked;
    while (picked.size() < count && picked.size() < universe)
        picked.insert(std::uint32_t(next() % universe));
    return {picked.begin(), picked.end()};
}

} // namespace oracles
