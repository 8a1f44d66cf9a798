#pragma once

#include <gmpxx.h>

#include <vector>

#include "qgraph/errors.hpp"

namespace qgraph {

/// Exact nonnegative count. Gaussian binomials overflow 64 bits at modest
/// parameters, so every counting formula is evaluated over these.
using QInt = mpz_class;

/// Parameter bundle for the subspace counting formulas: ambient dimension n,
/// reference subspace dimension m, vertex dimension k, intersection
/// dimensions i and j, field order q.
struct CountParams {
    int n = 0;
    int m = 0;
    int k = 0;
    int i = 0;
    int j = 0;
    unsigned q = 2;
};

QInt pow_q(unsigned q, unsigned long e);

/// [n]! = prod_{t=1..n} (q^t - 1), with [0]! = 1.
QInt q_factorial(int n, unsigned q);

/// Number of k-subspaces of an n-space over F_q; 0 when k > n, 1 when k = 0.
/// Computed by the telescoping product with exact divisibility at each step.
QInt gaussian_binomial(int n, int k, unsigned q);

/// Number of k-subspaces w of F_q^n with dim(w ∩ u) = i for a fixed
/// m-subspace u: q^{(k-i)(m-i)} [m,i] [n-m,k-i].
QInt count_a(int n, int m, int k, int i, unsigned q);

/// Neighbor-class count d_ij: for a vertex x with dim(x ∩ u) = i, the number
/// of neighbors y of x in the q-Kneser graph with dim(y ∩ u) = j. Defined for
/// i != j and 0 <= m <= n - k; zero exactly when the summation range is empty.
QInt count_dij(const CountParams& p);

/// One summand of the d_ij decomposition at a fixed r: y2 counts the middle
/// block choices, y3 the complement block choices, term = y1 * y2 * y3.
struct DijTerm {
    int r = 0;
    QInt y2;
    QInt y3;
    QInt term;
};

/// Per-r decomposition of d_ij. y1 (the inner-block count, independent of r)
/// is evaluated through count_a on the ambient space u, and y3 through
/// count_a with exact removal of the overcounted factor, so that the
/// breakdown is a genuinely different evaluation route than count_dij.
struct DijBreakdown {
    QInt y1;
    std::vector<DijTerm> terms;

    QInt total() const;
};

DijBreakdown dij_breakdown(const CountParams& p);

/// Common-neighbor count for a non-adjacent pair w1, w3 of K_q(2k,k) with
/// dim(w1 ∩ w3) = k - a: q^{k^2 - a(a+1)/2} [a]!. Requires 1 <= a <= k-1.
QInt count_case2_common(int k, int a, unsigned q);

struct Di0Value {
    int i = 0;
    QInt value;
};

struct Di0Check {
    int n = 0;
    int k = 0;
    unsigned q = 2;
    std::vector<Di0Value> values; // one entry per i in 1..k, with m = k+1
    bool all_at_least_two = false;
};

/// Evaluates d_{i0} with m = k + 1 for every i in 1..k and reports whether
/// each value is >= 2. Requires n >= 2k + 1.
Di0Check check_d_i0_bound(int n, int k, unsigned q);

} // namespace qgraph
