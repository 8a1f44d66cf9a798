#include "qgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

namespace qgraph {

int resolve_threads(int requested) {
    if (requested >= 1)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

std::string family_name(GraphFamily f) {
    return f == GraphFamily::qKneser ? "qkneser" : "grassmann";
}

GraphFamily family_from_name(const std::string& name) {
    if (name == "qkneser" || name == "kneser" || name == "q-kneser")
        return GraphFamily::qKneser;
    if (name == "grassmann")
        return GraphFamily::Grassmann;
    throw InvalidParams("unknown graph family '" + name + "'");
}

const Subspace& SubspaceGraph::vertex(std::uint32_t id) const {
    if (id >= vertices_.size())
        throw IdOutOfRange("vertex id " + std::to_string(id) + " out of range");
    return vertices_[id];
}

std::span<const std::uint32_t> SubspaceGraph::neighbors(std::uint32_t v) const {
    if (v >= vertices_.size())
        throw IdOutOfRange("vertex id " + std::to_string(v) + " out of range");
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::uint32_t SubspaceGraph::degree(std::uint32_t v) const {
    if (v >= vertices_.size())
        throw IdOutOfRange("vertex id " + std::to_string(v) + " out of range");
    return std::uint32_t(offsets_[v + 1] - offsets_[v]);
}

std::optional<std::uint32_t> SubspaceGraph::find_vertex(const Subspace& s) const {
    return find_vertex_serialized(s.serialize());
}

std::optional<std::uint32_t>
SubspaceGraph::find_vertex_serialized(const std::string& canonical) const {
    auto it = id_lookup_.find(canonical);
    if (it == id_lookup_.end())
        return std::nullopt;
    return it->second;
}

namespace {

// ---- packed exact-rank kernels -------------------------------------------
//
// The pairwise build is dominated by rank computations on stacked bases, so
// vertices are packed once: GF(2) rows as single machine words, general F_q
// rows as byte strings driven by the field tables.

int rank_gf2(std::uint64_t* rows, int count, int cols) {
    int rank = 0;
    for (int col = cols - 1; col >= 0 && rank < count; --col) {
        const std::uint64_t bit = std::uint64_t(1) << col;
        int piv = -1;
        for (int r = rank; r < count; ++r)
            if (rows[r] & bit) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = rank + 1; r < count; ++r)
            if (rows[r] & bit)
                rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

int rank_bytes(std::uint8_t* m, int rows, int cols, const FieldSpec& f) {
    const std::uint16_t* mul = f.raw_mul().data();
    const std::uint16_t* add = f.raw_add().data();
    const std::uint16_t* neg = f.raw_neg().data();
    const std::uint16_t* inv = f.raw_inv().data();
    const std::size_t q = f.q();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[std::size_t(r) * cols + col]) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int c = col; c < cols; ++c)
                std::swap(m[std::size_t(rank) * cols + c], m[std::size_t(piv) * cols + c]);
        std::uint8_t* pr = m + std::size_t(rank) * cols;
        if (pr[col] != 1) {
            const std::size_t li = inv[pr[col]];
            for (int c = col; c < cols; ++c)
                pr[c] = std::uint8_t(mul[li * q + pr[c]]);
        }
        for (int r = rank + 1; r < rows; ++r) {
            std::uint8_t* rr = m + std::size_t(r) * cols;
            if (!rr[col])
                continue;
            const std::size_t nv = neg[rr[col]];
            for (int c = col; c < cols; ++c)
                rr[c] = std::uint8_t(add[std::size_t(rr[c]) * q + mul[nv * q + pr[c]]]);
        }
        ++rank;
    }
    return rank;
}

struct PackedVertices {
    bool gf2 = false;
    int k = 0, n = 0;
    std::vector<std::uint64_t> bits;   // gf2: k words per vertex
    std::vector<std::uint8_t> bytes;   // general: k*n bytes per vertex
    std::vector<std::uint64_t> pivots; // pivot-column mask per vertex
};

PackedVertices pack_vertices(const std::vector<Subspace>& vs, int n, int k,
                             const Field& field) {
    PackedVertices p;
    p.gf2 = field->q() == 2 && n <= 64;
    p.k = k;
    p.n = n;
    p.pivots.reserve(vs.size());
    if (p.gf2)
        p.bits.reserve(vs.size() * std::size_t(k));
    else
        p.bytes.reserve(vs.size() * std::size_t(k) * std::size_t(n));
    for (const Subspace& s : vs) {
        std::uint64_t pm = 0;
        for (int c : s.pivot_cols())
            pm |= std::uint64_t(1) << c;
        p.pivots.push_back(pm);
        if (p.gf2) {
            for (int r = 0; r < k; ++r) {
                std::uint64_t row = 0;
                for (int c = 0; c < n; ++c)
                    if (s.basis().at(r, c).index)
                        row |= std::uint64_t(1) << c;
                p.bits.push_back(row);
            }
        } else {
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < n; ++c)
                    p.bytes.push_back(std::uint8_t(s.basis().at(r, c).index));
        }
    }
    return p;
}

// rank of the stacked bases of packed vertices u and v
int packed_stack_rank(const PackedVertices& p, const FieldSpec& f, std::uint32_t u,
                      std::uint32_t v, std::uint64_t* wbits, std::uint8_t* wbytes) {
    if (p.gf2) {
        std::copy_n(p.bits.data() + std::size_t(u) * p.k, p.k, wbits);
        std::copy_n(p.bits.data() + std::size_t(v) * p.k, p.k, wbits + p.k);
        return rank_gf2(wbits, 2 * p.k, p.n);
    }
    const std::size_t stride = std::size_t(p.k) * p.n;
    std::copy_n(p.bytes.data() + std::size_t(u) * stride, stride, wbytes);
    std::copy_n(p.bytes.data() + std::size_t(v) * stride, stride, wbytes + stride);
    return rank_bytes(wbytes, 2 * p.k, p.n, f);
}

} // namespace

SubspaceGraph build_graph(GraphFamily family, unsigned q, int n, int k,
                          const GraphCaps& caps) {
    if (k < 1 || n < k)
        throw InvalidParams("build_graph: need 1 <= k <= n");
    Field field = make_field(q);

    QInt count = gaussian_binomial(n, k, q);
    if (count > QInt(static_cast<unsigned long>(caps.max_vertices)))
        throw LimitExceeded("vertex count " + count.get_str() + " exceeds cap " +
                            std::to_string(caps.max_vertices));
    const std::uint64_t v_count = count.get_ui();
    const std::uint64_t pair_checks = v_count * (v_count - 1) / 2;
    if (pair_checks > caps.max_edge_checks)
        throw LimitExceeded("estimated edge checks " + std::to_string(pair_checks) +
                            " exceed cap " + std::to_string(caps.max_edge_checks));

    SubspaceGraph g;
    g.family_ = family;
    g.field_ = field;
    g.n_ = n;
    g.k_ = k;
    g.outside_standard_regime_ = !(n >= 2 * k && k >= 1);
    g.vertices_ = enumerate_subspaces(n, k, field, caps.max_vertices);

    const std::uint32_t V = std::uint32_t(g.vertices_.size());
    g.id_lookup_.reserve(V);
    for (std::uint32_t id = 0; id < V; ++id)
        g.id_lookup_.emplace(g.vertices_[id].serialize(), id);

    PackedVertices packed = pack_vertices(g.vertices_, n, k, field);
    const int target_rank = family == GraphFamily::qKneser ? 2 * k : k + 1;

    // upper-triangle adjacency, one worker per contiguous block of u
    std::vector<std::vector<std::uint32_t>> half(V);
    auto scan_rows = [&](std::uint32_t u_begin, std::uint32_t u_end) {
        std::vector<std::uint64_t> wbits(std::size_t(2) * k);
        std::vector<std::uint8_t> wbytes(packed.gf2 ? 0 : std::size_t(2) * k * n);
        for (std::uint32_t u = u_begin; u < u_end; ++u) {
            auto& row = half[u];
            const std::uint64_t pu = packed.pivots[u];
            for (std::uint32_t v = u + 1; v < V; ++v) {
                const std::uint64_t pv = packed.pivots[v];
                if (family == GraphFamily::qKneser) {
                    // disjoint pivot columns already force a trivial meet
                    if ((pu & pv) == 0) {
                        row.push_back(v);
                        continue;
                    }
                } else {
                    // rank(stack) >= |pivot union|, so a large union rules
                    // out dim(u ∩ v) = k-1
                    if (std::popcount(pu | pv) > k + 1)
                        continue;
                }
                if (packed_stack_rank(packed, *field, u, v, wbits.data(),
                                      wbytes.data()) == target_rank)
                    row.push_back(v);
            }
        }
    };

    const int workers = resolve_threads(caps.threads);
    if (workers == 1 || V < 2) {
        scan_rows(0, V);
    } else {
        std::vector<std::thread> pool;
        const std::uint32_t chunk = (V + workers - 1) / std::uint32_t(workers);
        for (int w = 0; w < workers; ++w) {
            std::uint32_t b = std::uint32_t(w) * chunk;
            std::uint32_t e = std::min(V, b + chunk);
            if (b >= e)
                break;
            pool.emplace_back(scan_rows, b, e);
        }
        for (auto& t : pool)
            t.join();
    }

    // CSR assembly: degree = own upper row + incoming from smaller ids
    std::vector<std::uint32_t> deg(V, 0);
    for (std::uint32_t u = 0; u < V; ++u) {
        deg[u] += std::uint32_t(half[u].size());
        for (std::uint32_t v : half[u])
            ++deg[v];
    }
    g.offsets_.assign(std::size_t(V) + 1, 0);
    for (std::uint32_t u = 0; u < V; ++u)
        g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.adjacency_.resize(g.offsets_[V]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::uint32_t u = 0; u < V; ++u) {
        // incoming entries (all < u) were placed while scanning smaller ids,
        // so appending the own upper row keeps the list sorted
        for (std::uint32_t v : half[u])
            g.adjacency_[cursor[u]++] = v;
        for (std::uint32_t v : half[u])
            g.adjacency_[cursor[v]++] = u;
        half[u].clear();
        half[u].shrink_to_fit();
    }
    return g;
}

DegreeReport degree_report(const SubspaceGraph& g) {
    DegreeReport r;
    r.vertex_count = g.vertex_count();
    r.edge_count = g.edge_count();
    if (g.vertex_count() == 0)
        return r;
    r.min_degree = r.max_degree = g.degree(0);
    for (std::uint32_t v = 1; v < g.vertex_count(); ++v) {
        std::uint32_t d = g.degree(v);
        r.min_degree = std::min(r.min_degree, d);
        r.max_degree = std::max(r.max_degree, d);
    }
    r.is_regular = r.min_degree == r.max_degree;
    if (r.is_regular)
        r.degree = r.min_degree;
    return r;
}

std::vector<std::vector<std::uint32_t>>
partition_by_intersection(const SubspaceGraph& g, const Subspace& u) {
    if (u.ambient() != g.n() || u.field()->q() != g.q())
        throw AmbientMismatch("partition_by_intersection: ambient space mismatch");
    std::vector<std::vector<std::uint32_t>> classes(std::size_t(g.k()) + 1);
    for (std::uint32_t id = 0; id < g.vertex_count(); ++id) {
        int i = intersection_dim(g.vertex(id), u);
        classes[std::size_t(i)].push_back(id);
    }
    return classes;
}

void export_edge_list(const SubspaceGraph& g, std::ostream& out) {
    out << "# " << family_name(g.family()) << ' ' << g.q() << ' ' << g.n() << ' '
        << g.k() << '\n';
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
        for (std::uint32_t v : g.neighbors(u))
            if (u < v)
                out << u << ' ' << v << '\n';
}

void export_vertex_sidecar(const SubspaceGraph& g, std::ostream& out) {
    nlohmann::ordered_json j;
    j["family"] = family_name(g.family());
    j["q"] = g.q();
    j["n"] = g.n();
    j["k"] = g.k();
    nlohmann::ordered_json verts = nlohmann::ordered_json::object();
    for (std::uint32_t id = 0; id < g.vertex_count(); ++id)
        verts[std::to_string(id)] = g.vertex(id).serialize();
    j["vertices"] = std::move(verts);
    out << j.dump(2) << '\n';
}

} // namespace qgraph
