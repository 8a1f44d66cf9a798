#include "qgraph/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qgraph/constructions.hpp"
#include "qgraph/hull.hpp"

namespace qgraph::verify {

namespace {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) { return eng() % n; }
};

bool adjacent(const SubspaceGraph& g, std::uint32_t u, std::uint32_t v) {
    auto nb = g.neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t common_neighbor_count(const SubspaceGraph& g, std::uint32_t u,
                                  std::uint32_t v) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

Subspace prefix_space(int n, int m, const Field& f) {
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        idx[std::size_t(i)] = i;
    return coordinate_subspace(n, idx, f);
}

Matrix random_invertible(const Field& f, int n, Rng& rng) {
    while (true) {
        Matrix m(f, n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m.set(r, c, FieldElement{std::uint16_t(rng.below(f->q()))});
        if (rank_of(m) == n)
            return m;
    }
}

Subspace apply_transform(const Subspace& s, const Matrix& t) {
    return rref(mat_mul(s.basis(), t));
}

std::string pair_label(const SubspaceGraph& g, std::uint32_t a, std::uint32_t b) {
    return "(" + g.vertex(a).serialize() + ") / (" + g.vertex(b).serialize() + ")";
}

} // namespace

void Report::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
    pass = pass && ok;
}

Report lemma21(unsigned q, int n, int k, std::uint64_t enumeration_cap) {
    Report rep;
    rep.target = "lemma21";
    rep.params = {{"q", q}, {"n", n}, {"k", k}};
    Field f = make_field(q);
    auto vertices = enumerate_subspaces(n, k, f, enumeration_cap);
    QInt total = gaussian_binomial(n, k, q);
    rep.add("enumeration count", QInt(static_cast<unsigned long>(vertices.size())) == total,
            std::to_string(vertices.size()) + " subspaces, formula " + total.get_str());
    for (int m = 0; m <= n; ++m) {
        Subspace u = prefix_space(n, m, f);
        std::vector<std::size_t> sizes(std::size_t(k) + 1, 0);
        for (const Subspace& w : vertices)
            ++sizes[std::size_t(intersection_dim(w, u))];
        bool ok = true;
        QInt sum = 0;
        for (int i = 0; i <= k; ++i) {
            QInt expect = count_a(n, m, k, i, q);
            sum += expect;
            if (expect != QInt(static_cast<unsigned long>(sizes[std::size_t(i)])))
                ok = false;
        }
        ok = ok && sum == total;
        rep.add("m=" + std::to_string(m) + " class sizes", ok,
                ok ? "all i match, partition sums to " + total.get_str()
                   : "mismatch against enumeration");
    }
    return rep;
}

Report lemma22(unsigned q, int n, int k) {
    Report rep;
    rep.target = "lemma22";
    rep.params = {{"q", q}, {"n", n}, {"k", k}};
    Di0Check check = check_d_i0_bound(n, k, q);
    for (const auto& v : check.values)
        rep.add("d_{" + std::to_string(v.i) + "0}", v.value >= 2, v.value.get_str());
    return rep;
}

Report lemma23(unsigned q, int n, int k, int m, const GraphCaps& caps) {
    Report rep;
    rep.target = "lemma23";
    rep.params = {{"q", q}, {"n", n}, {"k", k}};
    if (m >= 0)
        rep.params["m"] = m;
    const int m_lo = m >= 0 ? m : 0;
    const int m_hi = m >= 0 ? m : n - k;
    if (m_hi > n - k || m_lo < 0)
        throw InvalidParams("lemma23: need 0 <= m <= n - k");
    SubspaceGraph g = build_graph(GraphFamily::qKneser, q, n, k, caps);
    for (int mm = m_lo; mm <= m_hi; ++mm) {
        Subspace u = prefix_space(n, mm, g.field());
        auto classes = partition_by_intersection(g, u);

        bool sizes_ok = true;
        for (int i = 0; i <= k; ++i)
            if (QInt(static_cast<unsigned long>(classes[std::size_t(i)].size())) !=
                count_a(n, mm, k, i, q))
                sizes_ok = false;
        rep.add("m=" + std::to_string(mm) + " class sizes vs formula", sizes_ok);

        std::vector<int> class_of(g.vertex_count(), 0);
        for (int i = 0; i <= k; ++i)
            for (std::uint32_t id : classes[std::size_t(i)])
                class_of[id] = i;

        // d_ij table for this m
        std::vector<std::vector<QInt>> d(std::size_t(k) + 1,
                                         std::vector<QInt>(std::size_t(k) + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                if (i != j)
                    d[std::size_t(i)][std::size_t(j)] =
                        count_dij({n, mm, k, i, j, q});

        std::uint64_t mismatches = 0;
        std::string first_bad;
        for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
            std::vector<std::uint64_t> seen(std::size_t(k) + 1, 0);
            for (std::uint32_t y : g.neighbors(x))
                ++seen[std::size_t(class_of[y])];
            const int i = class_of[x];
            for (int j = 0; j <= k; ++j) {
                if (j == i)
                    continue;
                if (d[std::size_t(i)][std::size_t(j)] !=
                    QInt(static_cast<unsigned long>(seen[std::size_t(j)]))) {
                    ++mismatches;
                    if (first_bad.empty())
                        first_bad = "x=" + g.vertex(x).serialize() + " i=" +
                                    std::to_string(i) + " j=" + std::to_string(j);
                }
            }
        }
        rep.add("m=" + std::to_string(mm) + " neighbor classes vs d_ij", mismatches == 0,
                mismatches == 0
                    ? std::to_string(g.vertex_count()) + " vertices, all classes match"
                    : std::to_string(mismatches) + " mismatches, first: " + first_bad);
    }
    return rep;
}

namespace {

// Runs the full lemma-2.4 pipeline on one triple; returns a failure note or
// the empty string.
std::string check_triple(const SubspaceGraph& g, std::uint32_t a, std::uint32_t b,
                         std::uint32_t c, std::size_t gamma_seen[]) {
    const Subspace &w1 = g.vertex(a), &w2 = g.vertex(b), &w3 = g.vertex(c);
    AdaptedBases ab = adapted_bases(w1, w2, w3); // round-trips w3 internally
    ++gamma_seen[ab.gamma];
    Subspace w4 = lemma24_w4(ab);
    if (intersection_dim(w4, w1) != 0 || intersection_dim(w4, w2) != 0 ||
        intersection_dim(w4, w3) != 0)
        return "w4 not adjacent to the triple " + pair_label(g, a, b) + " / (" +
               w3.serialize() + ")";
    return "";
}

} // namespace

Report lemma24(unsigned q, int k, std::size_t samples, std::uint64_t seed,
               const GraphCaps& caps) {
    Report rep;
    rep.target = "lemma24";
    rep.params = {{"q", q}, {"k", k}};
    if (samples > 0) {
        rep.params["samples"] = samples;
        rep.params["seed"] = seed;
    }
    SubspaceGraph g = build_graph(GraphFamily::qKneser, q, 2 * k, k, caps);
    const std::uint32_t V = std::uint32_t(g.vertex_count());
    std::size_t gamma_seen[64] = {};
    std::uint64_t triples = 0, failures = 0;
    std::string first_bad;

    auto run = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        ++triples;
        std::string err = check_triple(g, a, b, c, gamma_seen);
        if (!err.empty()) {
            ++failures;
            if (first_bad.empty())
                first_bad = err;
        }
    };

    if (samples == 0) {
        for (std::uint32_t a = 0; a < V; ++a)
            for (std::uint32_t b : g.neighbors(a))
                for (std::uint32_t c = 0; c < V; ++c) {
                    if (c == a || c == b || adjacent(g, c, a) || adjacent(g, c, b))
                        continue;
                    run(a, b, c);
                }
    } else {
        Rng rng(seed);
        for (std::size_t s = 0; s < samples; ++s) {
            std::uint32_t a = std::uint32_t(rng.below(V));
            auto nb = g.neighbors(a);
            std::uint32_t b = nb[rng.below(nb.size())];
            std::uint32_t c;
            do {
                c = std::uint32_t(rng.below(V));
            } while (c == a || c == b || adjacent(g, c, a) || adjacent(g, c, b));
            run(a, b, c);
        }
    }

    std::ostringstream dist;
    dist << triples << " triples; gamma distribution:";
    for (int t = 0; t < 64; ++t)
        if (gamma_seen[t])
            dist << " gamma=" << t << ":" << gamma_seen[t];
    rep.add("w4 adjacent to w1, w2, w3", failures == 0,
            failures == 0 ? dist.str()
                          : std::to_string(failures) + " failures, first: " + first_bad);
    return rep;
}

Report lemma24_pure(unsigned q, int k, int alpha, int beta, std::size_t samples,
                    std::uint64_t seed) {
    Report rep;
    rep.target = "lemma24-pure";
    rep.params = {{"q", q},         {"k", k},    {"alpha", alpha},
                  {"beta", beta},   {"samples", samples}, {"seed", seed}};
    const int gamma = k - alpha - beta;
    if (alpha < 1 || beta < 1 || gamma < 0)
        throw InvalidParams("lemma24_pure: need alpha, beta >= 1 and alpha + beta <= k");
    Field f = make_field(q);
    const int n = 2 * k;

    // canonical triple with the prescribed pattern
    std::vector<std::vector<unsigned>> rows1, rows2, rows3;
    auto unit = [&](int pos) {
        std::vector<unsigned> r(std::size_t(n), 0);
        r[std::size_t(pos)] = 1;
        return r;
    };
    for (int i = 0; i < k; ++i)
        rows1.push_back(unit(i));
    for (int i = 0; i < k; ++i)
        rows2.push_back(unit(k + i));
    for (int i = 0; i < alpha; ++i)
        rows3.push_back(unit(i));
    for (int i = 0; i < beta; ++i)
        rows3.push_back(unit(k + i));
    for (int t = 0; t < gamma; ++t) {
        std::vector<unsigned> r(std::size_t(n), 0);
        r[std::size_t(alpha + t)] = 1;
        r[std::size_t(k + beta + t)] = 1;
        rows3.push_back(r);
    }
    Subspace w1 = rref(Matrix::from_rows(f, n, rows1));
    Subspace w2 = rref(Matrix::from_rows(f, n, rows2));
    Subspace w3 = rref(Matrix::from_rows(f, n, rows3));

    Rng rng(seed);
    std::uint64_t failures = 0;
    std::string first_bad;
    for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
        Subspace t1 = w1, t2 = w2, t3 = w3;
        if (s > 0) { // s = 0 keeps the canonical coordinates
            Matrix t = random_invertible(f, n, rng);
            t1 = apply_transform(w1, t);
            t2 = apply_transform(w2, t);
            t3 = apply_transform(w3, t);
        }
        AdaptedBases ab = adapted_bases(t1, t2, t3);
        bool ok = ab.alpha == alpha && ab.beta == beta && ab.gamma == gamma;
        Subspace w4 = lemma24_w4(ab);
        ok = ok && intersection_dim(w4, t1) == 0 && intersection_dim(w4, t2) == 0 &&
             intersection_dim(w4, t3) == 0;
        if (!ok) {
            ++failures;
            if (first_bad.empty())
                first_bad = "sample " + std::to_string(s);
        }
    }
    rep.add("pattern recovered and w4 adjacent", failures == 0,
            failures == 0 ? std::to_string(std::max<std::size_t>(samples, 1)) +
                                " coordinate frames"
                          : std::to_string(failures) + " failures, first: " + first_bad);
    return rep;
}

namespace {

template <typename PairFn>
void for_nonadjacent_pairs(const SubspaceGraph& g, std::size_t samples,
                           std::uint64_t seed, PairFn&& fn) {
    const std::uint32_t V = std::uint32_t(g.vertex_count());
    if (samples == 0) {
        for (std::uint32_t a = 0; a < V; ++a)
            for (std::uint32_t b = a + 1; b < V; ++b)
                if (!adjacent(g, a, b))
                    fn(a, b);
        return;
    }
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::uint32_t a, b;
        do {
            a = std::uint32_t(rng.below(V));
            b = std::uint32_t(rng.below(V));
        } while (a == b || adjacent(g, a, b));
        fn(a, b);
    }
}

} // namespace

Report lemma25(unsigned q, int k, std::size_t samples, std::uint64_t seed,
               const GraphCaps& caps) {
    Report rep;
    rep.target = "lemma25";
    rep.params = {{"q", q}, {"k", k}};
    if (samples > 0) {
        rep.params["samples"] = samples;
        rep.params["seed"] = seed;
    }
    SubspaceGraph g = build_graph(GraphFamily::qKneser, q, 2 * k, k, caps);
    std::uint64_t pairs = 0, failures = 0;
    std::string first_bad;
    for_nonadjacent_pairs(g, samples, seed, [&](std::uint32_t a, std::uint32_t b) {
        ++pairs;
        VertexSet seed_set(g.vertex_count());
        seed_set.add(a);
        seed_set.add(b);
        auto [h, trace] = hull(g, seed_set);
        bool ok = true;
        for (std::uint32_t w : g.neighbors(a))
            ok = ok && h.test(w);
        for (std::uint32_t w : g.neighbors(b))
            ok = ok && h.test(w);
        if (!ok) {
            ++failures;
            if (first_bad.empty())
                first_bad = pair_label(g, a, b);
        }
    });
    rep.add("N(w1) ∪ N(w2) inside hull", failures == 0,
            failures == 0 ? std::to_string(pairs) + " non-adjacent pairs"
                          : std::to_string(failures) + " failures, first: " + first_bad);
    return rep;
}

Report case2count(unsigned q, int k, std::size_t samples, std::uint64_t seed,
                  const GraphCaps& caps) {
    Report rep;
    rep.target = "case2count";
    rep.params = {{"q", q}, {"k", k}};
    if (samples > 0) {
        rep.params["samples"] = samples;
        rep.params["seed"] = seed;
    }
    SubspaceGraph g = build_graph(GraphFamily::qKneser, q, 2 * k, k, caps);
    std::uint64_t pairs = 0, failures = 0;
    std::string first_bad;
    for_nonadjacent_pairs(g, samples, seed, [&](std::uint32_t u, std::uint32_t w) {
        ++pairs;
        const int a = k - intersection_dim(g.vertex(u), g.vertex(w));
        QInt expect = count_case2_common(k, a, q);
        std::size_t got = common_neighbor_count(g, u, w);
        if (expect != QInt(static_cast<unsigned long>(got))) {
            ++failures;
            if (first_bad.empty())
                first_bad = pair_label(g, u, w) + " a=" + std::to_string(a) + " got " +
                            std::to_string(got) + " expected " + expect.get_str();
        }
    });
    rep.add("common neighbors vs formula", failures == 0,
            failures == 0 ? std::to_string(pairs) + " non-adjacent pairs"
                          : std::to_string(failures) + " failures, first: " + first_bad);
    return rep;
}

Report thm11(unsigned q, int n, int k, const GraphCaps& caps) {
    Report rep;
    rep.target = "thm11";
    rep.params = {{"q", q}, {"n", n}, {"k", k}};
    SubspaceGraph g = build_graph(GraphFamily::qKneser, q, n, k, caps);
    if (n >= 2 * k + 1) {
        auto [a, b] = paper_pair_ids(g);
        VertexSet seed(g.vertex_count());
        seed.add(a);
        seed.add(b);
        auto [h, trace] = hull(g, seed);
        rep.add("explicit pair is a hull set", trace.is_hull_set,
                "hull " + std::to_string(trace.hull_size) + "/" +
                    std::to_string(g.vertex_count()) + " in " +
                    std::to_string(trace.converged_at) + " rounds");
    } else {
        std::uint64_t pairs = 0, failures = 0;
        std::string first_bad;
        for_nonadjacent_pairs(g, 0, 0, [&](std::uint32_t a, std::uint32_t b) {
            ++pairs;
            VertexSet seed(g.vertex_count());
            seed.add(a);
            seed.add(b);
            if (!is_hull_set(g, seed)) {
                ++failures;
                if (first_bad.empty())
                    first_bad = pair_label(g, a, b);
            }
        });
        rep.add("every non-adjacent pair is a hull set", failures == 0,
                failures == 0 ? std::to_string(pairs) + " pairs"
                              : std::to_string(failures) + " failures, first: " + first_bad);
    }
    rep.add("no singleton hull set", verify_no_singleton_hull(g),
            "threshold 2 never fires from one seed");
    return rep;
}

Report thm12(unsigned q, int n, int k, const GraphCaps& caps) {
    Report rep;
    rep.target = "thm12";
    rep.params = {{"q", q}, {"n", n}, {"k", k}};
    SubspaceGraph g = build_graph(GraphFamily::Grassmann, q, n, k, caps);
    GrassmannPair gp = grassmann_pair(g.field(), n, k);
    rep.add("pair non-adjacent", intersection_dim(gp.v1, gp.v2) == k - 2 && k >= 2,
            "dim(v1 ∩ v2) = " + std::to_string(intersection_dim(gp.v1, gp.v2)));
    auto [a, b] = paper_pair_ids(g);
    VertexSet seed(g.vertex_count());
    seed.add(a);
    seed.add(b);
    auto [h, trace] = hull(g, seed);
    rep.add("explicit pair is a hull set", trace.is_hull_set,
            "hull " + std::to_string(trace.hull_size) + "/" +
                std::to_string(g.vertex_count()) + " in " +
                std::to_string(trace.converged_at) + " rounds");
    ChainReport chain_report = verify_grassmann_chain(g);
    for (const ChainStage& st : chain_report.stages)
        rep.add("chain: " + st.name, st.pass, st.detail);
    rep.add("no singleton hull set", verify_no_singleton_hull(g),
            "threshold 2 never fires from one seed");
    return rep;
}

Report chain(unsigned q, int n, int k, const GraphCaps& caps) {
    Report rep;
    rep.target = "chain";
    rep.params = {{"q", q}, {"n", n}, {"k", k}};
    SubspaceGraph g = build_graph(GraphFamily::Grassmann, q, n, k, caps);
    ChainReport chain_report = verify_grassmann_chain(g);
    for (const ChainStage& st : chain_report.stages)
        rep.add(st.name, st.pass, st.detail);
    return rep;
}

std::vector<Report> run_all_small(const GraphCaps& caps) {
    std::vector<Report> out;
    out.push_back(lemma21(2, 4, 2));
    out.push_back(lemma21(3, 4, 2));
    out.push_back(lemma22(2, 5, 2));
    out.push_back(lemma22(3, 9, 4));
    out.push_back(lemma23(2, 4, 2, -1, caps));
    out.push_back(lemma23(2, 5, 2, -1, caps));
    out.push_back(lemma24(2, 2, 0, 1, caps));
    out.push_back(lemma24_pure(2, 4, 1, 1, 10));
    out.push_back(lemma25(2, 2, 0, 1, caps));
    out.push_back(case2count(2, 2, 0, 1, caps));
    out.push_back(case2count(3, 2, 0, 1, caps));
    out.push_back(thm11(2, 4, 2, caps));
    out.push_back(thm11(2, 5, 2, caps));
    out.push_back(thm12(2, 4, 2, caps));
    out.push_back(thm12(3, 4, 2, caps));
    return out;
}

nlohmann::ordered_json to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["target"] = report.target;
    j["params"] = report.params;
    j["pass"] = report.pass;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty())
            cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    out << "target " << report.target;
    for (auto it = report.params.begin(); it != report.params.end(); ++it)
        out << ' ' << it.key() << '=' << it.value();
    out << '\n';
    for (const Check& c : report.checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.detail.empty())
            out << ": " << c.detail;
        out << '\n';
    }
    out << (report.pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

} // namespace qgraph::verify
