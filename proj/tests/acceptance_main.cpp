// Acceptance suite: every release-gate criterion as one timed pass/fail line.
// Optionally pass criterion numbers on the command line to run a subset.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qgraph/constructions.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/hull.hpp"
#include "qgraph/qcomb.hpp"
#include "qgraph/verify.hpp"

using namespace qgraph;

namespace {

struct Instance {
    unsigned q;
    int n, k;
};

QInt kneser_degree(unsigned q, int n, int k) {
    return pow_q(q, static_cast<unsigned long>(k) * static_cast<unsigned long>(k)) *
           gaussian_binomial(n - k, k, q);
}

// 1. Enumeration count == Gaussian binomial, and the class counts partition
//    the vertex count, across the full small grid.
bool criterion1(std::ostream& log) {
    bool ok = true;
    std::size_t enumerated = 0, grid_points = 0;
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Field f = make_field(q);
        for (int n = 1; n <= 8; ++n)
            for (int k = 1; k <= n; ++k) {
                QInt gb = gaussian_binomial(n, k, q);
                if (gb > 200000)
                    continue;
                ++grid_points;
                std::uint64_t count = 0;
                for_each_subspace(n, k, f, [&](const Subspace&) { ++count; }, 250000);
                enumerated += count;
                if (QInt(static_cast<unsigned long>(count)) != gb) {
                    log << "count mismatch at q=" << q << " n=" << n << " k=" << k << "; ";
                    ok = false;
                }
                for (int m = 0; m <= n; ++m) {
                    QInt sum = 0;
                    for (int i = 0; i <= k; ++i)
                        sum += count_a(n, m, k, i, q);
                    if (sum != gb) {
                        log << "partition identity fails at q=" << q << " n=" << n
                            << " k=" << k << " m=" << m << "; ";
                        ok = false;
                    }
                }
            }
    }
    log << grid_points << " grid points, " << enumerated << " subspaces enumerated";
    return ok;
}

// 2. Degree and edge-count formulas for the named q-Kneser instances.
bool criterion2(std::ostream& log) {
    bool ok = true;
    for (Instance inst : {Instance{2, 4, 2}, Instance{2, 5, 2}, Instance{2, 6, 2},
                          Instance{3, 4, 2}, Instance{3, 5, 2}, Instance{2, 6, 3}}) {
        SubspaceGraph g = build_graph(GraphFamily::qKneser, inst.q, inst.n, inst.k);
        DegreeReport rep = degree_report(g);
        QInt deg = kneser_degree(inst.q, inst.n, inst.k);
        QInt edges = deg * gaussian_binomial(inst.n, inst.k, inst.q) / 2;
        bool here = rep.is_regular &&
                    QInt(static_cast<unsigned long>(rep.degree)) == deg &&
                    QInt(static_cast<unsigned long>(rep.edge_count)) == edges;
        if (!here) {
            log << "regularity fails at K_" << inst.q << "(" << inst.n << "," << inst.k
                << "); ";
            ok = false;
        }
    }
    log << "6 instances";
    return ok;
}

// 3. Brute-force neighbor-class counts equal d_ij everywhere.
bool criterion3(std::ostream& log) {
    bool ok = true;
    for (Instance inst :
         {Instance{2, 4, 2}, Instance{2, 5, 2}, Instance{3, 4, 2}, Instance{2, 6, 3}}) {
        verify::Report rep = verify::lemma23(inst.q, inst.n, inst.k);
        if (!rep.pass) {
            log << "lemma23 fails at (" << inst.q << "," << inst.n << "," << inst.k
                << "); ";
            ok = false;
        }
    }
    log << "4 instances, all m <= n-k, every vertex";
    return ok;
}

// 4. Symbolic d_{i0} >= 2 sweep far beyond buildable graphs.
bool criterion4(std::ostream& log) {
    bool ok = true;
    std::size_t points = 0;
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (int k = 2; k <= 6; ++k)
            for (int n = 2 * k + 1; n <= 14; ++n) {
                ++points;
                if (!check_d_i0_bound(n, k, q).all_at_least_two) {
                    log << "d_i0 < 2 at q=" << q << " k=" << k << " n=" << n << "; ";
                    ok = false;
                }
            }
    log << points << " (q,k,n) points, i = 1..k each";
    return ok;
}

// 5. Common-neighbor formula: exhaustive on K_2(4,2), K_3(4,2); 1000 seeded
//    pairs on K_2(6,3).
bool criterion5(std::ostream& log) {
    bool ok = true;
    for (unsigned q : {2u, 3u})
        if (!verify::case2count(q, 2).pass) {
            log << "exhaustive case2count fails at q=" << q << "; ";
            ok = false;
        }
    if (!verify::case2count(2, 3, 1000, 42).pass) {
        log << "sampled case2count fails on K_2(6,3); ";
        ok = false;
    }
    log << "exhaustive q=2,3 at k=2 plus 1000 seeded pairs at k=3";
    return ok;
}

// 6. Lemma 2.4 w4 construction: exhaustive triples of K_2(4,2), 1000 seeded
//    triples each in K_3(4,2) and K_2(6,3), plus pure gamma=2 checks at k=4.
bool criterion6(std::ostream& log) {
    bool ok = true;
    if (!verify::lemma24(2, 2).pass) {
        log << "exhaustive triples fail on K_2(4,2); ";
        ok = false;
    }
    if (!verify::lemma24(3, 2, 1000, 7).pass) {
        log << "sampled triples fail on K_3(4,2); ";
        ok = false;
    }
    if (!verify::lemma24(2, 3, 1000, 7).pass) {
        log << "sampled triples fail on K_2(6,3); ";
        ok = false;
    }
    for (unsigned q : {2u, 3u})
        if (!verify::lemma24_pure(q, 4, 1, 1, 25, 7).pass) {
            log << "gamma=2 construction fails at q=" << q << "; ";
            ok = false;
        }
    log << "exhaustive + 2x1000 sampled + gamma=2 frames at k=4";
    return ok;
}

// 7. h(K_q(n,k)) = 2 on the instance grid.
bool criterion7(std::ostream& log) {
    bool ok = true;
    for (Instance inst : {Instance{2, 5, 2}, Instance{2, 6, 2}, Instance{3, 5, 2},
                          Instance{2, 7, 3}, Instance{2, 4, 2}, Instance{3, 4, 2}}) {
        verify::Report rep = verify::thm11(inst.q, inst.n, inst.k);
        if (!rep.pass) {
            log << "thm11 fails at (" << inst.q << "," << inst.n << "," << inst.k << "); ";
            ok = false;
        }
    }
    log << "case-1 pairs, exhaustive case-2 pairs, singleton bound";
    return ok;
}

// 8. h(J_q(n,k)) = 2 with the staged chain certificate.
bool criterion8(std::ostream& log) {
    bool ok = true;
    for (Instance inst :
         {Instance{2, 4, 2}, Instance{2, 5, 2}, Instance{3, 4, 2}, Instance{2, 6, 3}}) {
        verify::Report rep = verify::thm12(inst.q, inst.n, inst.k);
        if (!rep.pass) {
            log << "thm12 fails at (" << inst.q << "," << inst.n << "," << inst.k << "); ";
            ok = false;
        }
    }
    log << "explicit pairs, chain stages, singleton bound";
    return ok;
}

// 9. Convexity engine properties on 100 seeded seed-sets per graph.
bool criterion9(std::ostream& log) {
    bool ok = true;
    struct G {
        GraphFamily family;
        unsigned q;
        int n, k;
    };
    for (G spec : {G{GraphFamily::qKneser, 2, 4, 2}, G{GraphFamily::Grassmann, 2, 4, 2},
                   G{GraphFamily::qKneser, 2, 5, 2}}) {
        SubspaceGraph g = build_graph(spec.family, spec.q, spec.n, spec.k);
        std::uint64_t state = 0xC0FFEE ^ (std::uint64_t(spec.q) << 32) ^
                              std::uint64_t(spec.n * 31 + spec.k) ^
                              (spec.family == GraphFamily::Grassmann ? 0x1000u : 0u);
        for (int trial = 0; trial < 100; ++trial) {
            auto ids = oracles::sample_ids(state, g.vertex_count(), 1 + trial % 5);
            VertexSet T = VertexSet::of(g.vertex_count(), ids);
            auto [h, trace] = hull(g, T);

            if (!(h == oracles::sweep_hull(g, T))) {
                log << "queue/sweep mismatch; ";
                ok = false;
            }
            if (!(interval(g, h) == h)) {
                log << "hull not convex; ";
                ok = false;
            }
            VertexSet bigger = T;
            for (auto id : oracles::sample_ids(state, g.vertex_count(), 2))
                bigger.add(id);
            if (!hull(g, bigger).first.contains_all(h)) {
                log << "monotonicity violated; ";
                ok = false;
            }
            if (!oracles::replay_trace(g, trace)) {
                log << "trace replay failed; ";
                ok = false;
            }
        }
    }
    log << "3 graphs x 100 seed sets: monotone, convex, queue==sweep, replay";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        std::string name;
        std::function<bool(std::ostream&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "counting identities over the (q,n,k) grid", criterion1},
        {2, "q-Kneser regularity and edge-count formulas", criterion2},
        {3, "neighbor-class counts equal d_ij (oracle equivalence)", criterion3},
        {4, "d_i0 >= 2 symbolic sweep", criterion4},
        {5, "common-neighbor count formula", criterion5},
        {6, "constructed w4 adjacent to every qualifying triple", criterion6},
        {7, "h(K_q(n,k)) = 2 on the instance grid", criterion7},
        {8, "h(J_q(n,k)) = 2 with chain certificate", criterion8},
        {9, "convexity engine properties", criterion9},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    int failures = 0, ran = 0;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && !selected.count(c.id))
            continue;
        ++ran;
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.run(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
                  << c.name << " (" << log.str() << ") [" << secs << "s]" << std::endl;
        if (!pass)
            ++failures;
    }
    std::cout << "ACCEPTANCE: " << (ran - failures) << "/" << ran << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
