#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgraph/graph.hpp"
#include "qgraph/subspace.hpp"

namespace qgraph {

struct Case1Pair {
    Subspace w1; // <e_1..e_k>
    Subspace w2; // <e_2..e_{k+1}>
    Subspace u;  // <e_1..e_{k+1}>, the reference (k+1)-space
};

/// The explicit hull-set pair for K_q(n,k) with n >= 2k+1.
Case1Pair kneser_case1_pair(const Field& field, int n, int k);

enum class Case2Selector { min_intersection, max_intersection, by_index };

/// A deterministic non-adjacent pair of K_q(2k,k). by_index picks the first
/// non-adjacent pair in enumeration order; the other selectors pick the
/// first pair attaining intersection dimension 1 resp. k-1.
std::pair<Subspace, Subspace> kneser_case2_pair(const Field& field, int k,
                                                Case2Selector selector);

/// Joint normal form for an adjacent pair w1, w2 (so S = w1 ⊕ w2) and a
/// third subspace w3 non-adjacent to both, in F_q^{2k}:
///   w3 = <e_1..e_alpha> ⊕ <f_1..f_beta> ⊕ <e_{alpha+t} + f_{beta+t} : t = 1..gamma>
/// with e rows spanning w1 and f rows spanning w2.
struct AdaptedBases {
    Field field;
    int k = 0;
    int alpha = 0, beta = 0, gamma = 0;
    Matrix e_basis; // k x 2k
    Matrix f_basis; // k x 2k
    Subspace w1, w2, w3;
};

/// Makes the normal form explicit: intersection bases, direct-sum split of
/// the mixed generators, then deterministic greedy extension over the
/// canonical basis rows. Throws PreconditionViolated when the adjacency
/// pattern is wrong.
AdaptedBases adapted_bases(const Subspace& w1, const Subspace& w2, const Subspace& w3);

/// Rebuilds w3 from the arranged bases; equals the input w3 by construction.
Subspace reconstruct_w3(const AdaptedBases& ab);

/// The common neighbor of w1, w2, w3 built from the adapted bases by the
/// three gamma-case displays.
Subspace lemma24_w4(const AdaptedBases& ab);

struct GrassmannPair {
    Subspace v1; // <e_1..e_{k-2}, e_{k-1}, e_k>
    Subspace v2; // <e_1..e_{k-2}, e_{k+1}, e_{k+2}>
    std::vector<Subspace> u; // u_1..u_4, each adjacent to both v1 and v2
};

/// The explicit hull-set pair for J_q(n,k), n >= 2k >= 4.
GrassmannPair grassmann_pair(const Field& field, int n, int k);

struct ChainStage {
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<std::string> counterexamples; // canonical forms, truncated
};

struct ChainReport {
    bool all_pass = false;
    std::vector<ChainStage> stages;
};

/// Runs the staged certificate on a built Grassmann graph:
///   (a) u_1..u_4 lie in I[{v1,v2}]
///   (b) C_1 and C_2 lie in the hull of {v1,v2}
///   (c) D_0 lies in the hull
///   (d) D_i ⊆ I[D_{i-1}] for 1 <= i <= k-2 (empty at k = 2)
///   (e) D_{k-2} is the whole vertex set
ChainReport verify_grassmann_chain(const SubspaceGraph& g);

nlohmann::ordered_json chain_report_to_json(const ChainReport& report);

/// Vertex ids of the explicit pair for this graph (case 1 / case 2 pair for
/// the q-Kneser family, the Grassmann pair otherwise).
std::pair<std::uint32_t, std::uint32_t> paper_pair_ids(const SubspaceGraph& g);

} // namespace qgraph
