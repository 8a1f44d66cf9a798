#include "qgraph/gfq.hpp"

#include <algorithm>

namespace qgraph {

namespace {

using Poly = std::vector<std::uint16_t>; // coefficients, constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const Poly& a) { return int(a.size()) - 1; } // -1 for the zero poly

// r = a mod b over F_p; b monic is not required (leading coeff inverted mod p).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const int db = degree(b);
    unsigned lead = b[std::size_t(db)];
    // inverse of lead modulo p by scan (p is small)
    unsigned lead_inv = 1;
    for (unsigned t = 1; t < p; ++t)
        if (lead * t % p == 1) {
            lead_inv = t;
            break;
        }
    while (degree(a) >= db) {
        const int da = degree(a);
        unsigned factor = a[std::size_t(da)] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            unsigned sub = factor * b[std::size_t(i)] % p;
            unsigned cur = a[std::size_t(da - db + i)];
            a[std::size_t(da - db + i)] = std::uint16_t((cur + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
    if (a.empty() || b.empty())
        return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = std::uint16_t((prod[i + j] + unsigned(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(prod), modulus, p);
}

Poly index_to_poly(unsigned index, unsigned p, unsigned e) {
    Poly c(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        c[i] = std::uint16_t(index % p);
        index /= p;
    }
    trim(c);
    return c;
}

unsigned poly_to_index(const Poly& c, unsigned p) {
    unsigned index = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        index = index * p + c[i];
    return index;
}

} // namespace

bool is_prime(unsigned n) {
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power_decompose(unsigned q) {
    if (q < 2)
        return std::nullopt;
    unsigned p = q;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        return std::nullopt;
    return std::make_pair(p, e);
}

bool is_irreducible(const std::vector<std::uint16_t>& poly, unsigned p) {
    Poly a = poly;
    trim(a);
    const int e = degree(a);
    if (e < 1)
        return false;
    if (e == 1)
        return true;
    // trial division by every monic polynomial of degree 1..e/2
    for (int d = 1; 2 * d <= e; ++d) {
        unsigned count = 1;
        for (int i = 0; i < d; ++i)
            count *= p;
        for (unsigned low = 0; low < count; ++low) {
            Poly div = index_to_poly(low, p, unsigned(d));
            div.resize(std::size_t(d) + 1, 0);
            div[std::size_t(d)] = 1;
            if (poly_mod(a, div, p).empty())
                return false;
        }
    }
    return true;
}

std::vector<std::uint16_t> find_irreducible(unsigned p, unsigned e) {
    if (!is_prime(p) || e < 1)
        throw InvalidParams("find_irreducible: p must be prime and e >= 1");
    if (e == 1)
        return {0, 1}; // x
    // Enumerate low-coefficient tuples (c_0,...,c_{e-1}) in lexicographic
    // order with c_0 most significant, pick the first irreducible candidate.
    unsigned count = 1;
    for (unsigned i = 0; i < e; ++i)
        count *= p;
    for (unsigned t = 0; t < count; ++t) {
        Poly cand(e + 1, 0);
        unsigned rem = t;
        for (unsigned i = 0; i < e; ++i) {
            unsigned place = 1;
            for (unsigned j = 0; j < e - 1 - i; ++j)
                place *= p;
            cand[i] = std::uint16_t(rem / place);
            rem %= place;
        }
        cand[e] = 1;
        if (is_irreducible(cand, p))
            return cand;
    }
    throw Error("find_irreducible: exhausted candidates"); // unreachable
}

Field make_field(unsigned q, unsigned table_bound) {
    auto decomp = prime_power_decompose(q);
    if (!decomp)
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    if (q > table_bound)
        throw LimitExceeded("field order " + std::to_string(q) +
                            " exceeds table bound " + std::to_string(table_bound));
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = decomp->first;
    spec->e_ = decomp->second;
    spec->q_ = q;
    spec->modulus_ = find_irreducible(spec->p_, spec->e_);

    const unsigned p = spec->p_, e = spec->e_;
    spec->add_.assign(std::size_t(q) * q, 0);
    spec->mul_.assign(std::size_t(q) * q, 0);
    spec->neg_.assign(q, 0);
    spec->inv_.assign(q, 0);

    std::vector<Poly> polys(q);
    for (unsigned a = 0; a < q; ++a)
        polys[a] = index_to_poly(a, p, e);

    for (unsigned a = 0; a < q; ++a) {
        // digitwise negation
        Poly na = polys[a];
        for (auto& c : na)
            c = std::uint16_t((p - c) % p);
        spec->neg_[a] = std::uint16_t(poly_to_index(na, p));
        for (unsigned b = 0; b < q; ++b) {
            Poly sum(e, 0);
            const Poly &pa = polys[a], &pb = polys[b];
            for (unsigned i = 0; i < e; ++i) {
                unsigned ca = i < pa.size() ? pa[i] : 0;
                unsigned cb = i < pb.size() ? pb[i] : 0;
                sum[i] = std::uint16_t((ca + cb) % p);
            }
            spec->add_[std::size_t(a) * q + b] = std::uint16_t(poly_to_index(sum, p));
            spec->mul_[std::size_t(a) * q + b] =
                std::uint16_t(poly_to_index(poly_mul_mod(pa, pb, spec->modulus_, p), p));
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (spec->mul_[std::size_t(a) * q + b] == 1) {
                spec->inv_[a] = std::uint16_t(b);
                break;
            }
    return spec;
}

FieldElement FieldSpec::element(unsigned index) const {
    if (index >= q_)
        throw IndexOutOfRange("element index " + std::to_string(index) +
                              " out of range for F_" + std::to_string(q_));
    return FieldElement{std::uint16_t(index)};
}

FieldElement field_arith(const FieldSpec& spec, ArithOp op, FieldElement a,
                         std::optional<FieldElement> b) {
    if (a.index >= spec.q() || (b && b->index >= spec.q()))
        throw IndexOutOfRange("field_arith: element index out of range");
    switch (op) {
    case ArithOp::neg:
        return spec.neg(a);
    case ArithOp::inv:
        return spec.inv(a);
    case ArithOp::add:
    case ArithOp::sub:
    case ArithOp::mul:
        if (!b)
            throw InvalidParams("field_arith: binary operation requires two operands");
        if (op == ArithOp::add)
            return spec.add(a, *b);
        if (op == ArithOp::sub)
            return spec.sub(a, *b);
        return spec.mul(a, *b);
    }
    throw InvalidParams("field_arith: unknown operation");
}

} // namespace qgraph
