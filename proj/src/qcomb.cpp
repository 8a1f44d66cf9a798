#include "qgraph/qcomb.hpp"

#include <algorithm>
#include <string>

namespace qgraph {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw InvalidParams(msg);
}

// exact division with a divisibility assertion
QInt divexact(const QInt& num, const QInt& den) {
    QInt out;
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
        throw Error("internal: expected exact divisibility in q-combinatorics");
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

} // namespace

QInt pow_q(unsigned q, unsigned long e) {
    QInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), q, e);
    return out;
}

QInt q_factorial(int n, unsigned q) {
    require(n >= 0, "q_factorial: n must be nonnegative");
    require(q >= 2, "q_factorial: q must be at least 2");
    QInt out = 1;
    for (int t = 1; t <= n; ++t)
        out *= pow_q(q, unsigned(t)) - 1;
    return out;
}

QInt gaussian_binomial(int n, int k, unsigned q) {
    require(n >= 0 && k >= 0, "gaussian_binomial: n and k must be nonnegative");
    require(q >= 2, "gaussian_binomial: q must be at least 2");
    if (k > n)
        return 0;
    QInt out = 1;
    // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1); each partial product is
    // itself a Gaussian binomial, so every division is exact.
    for (int i = 0; i < k; ++i) {
        out *= pow_q(q, unsigned(n - i)) - 1;
        out = divexact(out, pow_q(q, unsigned(i + 1)) - 1);
    }
    return out;
}

QInt count_a(int n, int m, int k, int i, unsigned q) {
    require(n >= 0 && m >= 0 && m <= n, "count_a: need 0 <= m <= n");
    require(k >= 0 && i >= 0 && i <= k, "count_a: need 0 <= i <= k");
    if (i > m)
        return 0; // [m, i] vanishes
    return pow_q(q, static_cast<unsigned long>(k - i) * static_cast<unsigned long>(m - i)) *
           gaussian_binomial(m, i, q) * gaussian_binomial(n - m, k - i, q);
}

namespace {

struct DijRange {
    int b = 0;
    int B = -1; // empty when b > B
};

DijRange dij_range(const CountParams& p) {
    DijRange r;
    r.b = std::max(0, p.m + 2 * p.k - p.n - p.i - p.j);
    r.B = std::min({p.m - p.i - p.j, p.k - p.i, p.k - p.j});
    return r;
}

void validate_dij(const CountParams& p) {
    require(p.q >= 2, "d_ij: q must be at least 2");
    require(p.i != p.j, "d_ij: defined only for i != j");
    require(0 <= p.i && p.i <= p.k && 0 <= p.j && p.j <= p.k,
            "d_ij: need 0 <= i, j <= k");
    require(0 <= p.m && p.m <= p.n - p.k, "d_ij: need 0 <= m <= n - k");
    require(p.k >= 0 && p.k <= p.n, "d_ij: need 0 <= k <= n");
}

// q^{r(r-1+2i)/2} [m-i-j, r] [k-i, r] [r]!   (the middle-block count)
QInt dij_y2(const CountParams& p, int r) {
    // r(r-1+2i) is even and nonnegative for r >= 0, i >= 0
    long raw = long(r) * long(r - 1 + 2 * p.i);
    unsigned long exp2 = static_cast<unsigned long>(raw / 2);
    return pow_q(p.q, exp2) * gaussian_binomial(p.m - p.i - p.j, r, p.q) *
           gaussian_binomial(p.k - p.i, r, p.q) * q_factorial(r, p.q);
}

} // namespace

QInt count_dij(const CountParams& p) {
    validate_dij(p);
    const auto [b, B] = dij_range(p);
    if (b > B)
        return 0;
    // y1 = q^{ij} [m-i, j]
    QInt y1 = pow_q(p.q, static_cast<unsigned long>(p.i) * static_cast<unsigned long>(p.j)) *
              gaussian_binomial(p.m - p.i, p.j, p.q);
    QInt sum = 0;
    for (int r = b; r <= B; ++r) {
        const int s = p.k - p.j - r;
        // y3 = q^{s(s+m-i)} [n-m-k+i, s]
        QInt y3 = pow_q(p.q, static_cast<unsigned long>(s) *
                                 static_cast<unsigned long>(s + p.m - p.i)) *
                  gaussian_binomial(p.n - p.m - p.k + p.i, s, p.q);
        sum += dij_y2(p, r) * y3;
    }
    return y1 * sum;
}

QInt DijBreakdown::total() const {
    QInt t = 0;
    for (const auto& term : terms)
        t += term.term;
    return t;
}

DijBreakdown dij_breakdown(const CountParams& p) {
    validate_dij(p);
    DijBreakdown out;
    const auto [b, B] = dij_range(p);
    if (b > B) {
        // empty sum; the class of x may itself be empty (i > m), in which
        // case the inner-block count is not even well-formed
        out.y1 = p.i <= p.m ? count_a(p.m, p.i, p.j, 0, p.q) : 0;
        return out;
    }
    // y1 = a(u(m), (x ∩ u)(i), j, 0): j-subspaces of the m-space u meeting the
    // i-dimensional trace of x trivially.
    out.y1 = count_a(p.m, p.i, p.j, 0, p.q);
    for (int r = b; r <= B; ++r) {
        DijTerm term;
        term.r = r;
        term.y2 = dij_y2(p, r);
        const int s = p.k - p.j - r;
        // y3 = a(S, (u+x)(m+k-i), s, 0) / q^{s(j+r)}: complement choices with
        // the repetition factor removed; the division is exact.
        QInt raw = count_a(p.n, p.m + p.k - p.i, s, 0, p.q);
        term.y3 = divexact(raw, pow_q(p.q, static_cast<unsigned long>(s) *
                                               static_cast<unsigned long>(p.j + r)));
        term.term = out.y1 * term.y2 * term.y3;
        out.terms.push_back(std::move(term));
    }
    return out;
}

QInt count_case2_common(int k, int a, unsigned q) {
    require(k >= 2, "count_case2_common: need k >= 2");
    require(1 <= a && a <= k - 1, "count_case2_common: need 1 <= a <= k - 1");
    require(q >= 2, "count_case2_common: q must be at least 2");
    unsigned long exp = static_cast<unsigned long>(k) * static_cast<unsigned long>(k) -
                        static_cast<unsigned long>(a) * static_cast<unsigned long>(a + 1) / 2;
    return pow_q(q, exp) * q_factorial(a, q);
}

Di0Check check_d_i0_bound(int n, int k, unsigned q) {
    require(k >= 1, "check_d_i0_bound: need k >= 1");
    if (n < 2 * k + 1)
        throw InvalidParams("check_d_i0_bound: requires n >= 2k + 1");
    Di0Check out;
    out.n = n;
    out.k = k;
    out.q = q;
    out.all_at_least_two = true;
    for (int i = 1; i <= k; ++i) {
        CountParams p;
        p.n = n;
        p.m = k + 1;
        p.k = k;
        p.i = i;
        p.j = 0;
        p.q = q;
        Di0Value v;
        v.i = i;
        v.value = count_dij(p);
        if (v.value < 2)
            out.all_at_least_two = false;
        out.values.push_back(std::move(v));
    }
    return out;
}

} // namespace qgraph
