#include "qgraph/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "qgraph/hull.hpp"

namespace qgraph {

namespace {

std::vector<int> iota_indices(int count, int start = 0) {
    std::vector<int> idx(static_cast<std::size_t>(count));
    std::iota(idx.begin(), idx.end(), start);
    return idx;
}

std::vector<FieldElement> matrix_row(const Matrix& m, int r) {
    std::vector<FieldElement> row(std::size_t(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        row[std::size_t(c)] = m.at(r, c);
    return row;
}

void set_row(Matrix& m, int r, const std::vector<FieldElement>& row) {
    for (int c = 0; c < m.cols(); ++c)
        m.set(r, c, row[std::size_t(c)]);
}

std::vector<FieldElement> add_rows(const Field& f, const std::vector<FieldElement>& a,
                                   const std::vector<FieldElement>& b) {
    std::vector<FieldElement> out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c)
        out[c] = f->add(a[c], b[c]);
    return out;
}

} // namespace

Case1Pair kneser_case1_pair(const Field& field, int n, int k) {
    if (k < 1)
        throw InvalidParams("kneser_case1_pair: need k >= 1");
    if (n <= 2 * k)
        throw InvalidParams("kneser_case1_pair: requires n >= 2k + 1");
    Case1Pair out{coordinate_subspace(n, iota_indices(k), field),
                  coordinate_subspace(n, iota_indices(k, 1), field),
                  coordinate_subspace(n, iota_indices(k + 1), field)};
    return out;
}

std::pair<Subspace, Subspace> kneser_case2_pair(const Field& field, int k,
                                                Case2Selector selector) {
    if (k < 2)
        throw InvalidParams("kneser_case2_pair: need k >= 2");
    const int n = 2 * k;
    auto vertices = enumerate_subspaces(n, k, field);
    const int want = selector == Case2Selector::max_intersection ? k - 1
                     : selector == Case2Selector::min_intersection ? 1
                                                                   : -1;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            int d = intersection_dim(vertices[a], vertices[b]);
            if (d == 0)
                continue; // adjacent
            if (want < 0 || d == want)
                return {vertices[a], vertices[b]};
        }
    throw NotFound("kneser_case2_pair: no qualifying pair"); // unreachable for k >= 2
}

namespace {

// Appends to `rows` the rows of `source` that grow the span; returns the
// new rank. Deterministic: candidates are scanned in canonical row order.
int greedy_extend(std::vector<std::vector<FieldElement>>& rows, const Matrix& source,
                  const Field& field, int ambient, int target_rank) {
    auto current_rank = [&]() {
        Matrix m(field, int(rows.size()), ambient);
        for (std::size_t r = 0; r < rows.size(); ++r)
            set_row(m, int(r), rows[r]);
        return rank_of(m);
    };
    int rank = current_rank();
    for (int r = 0; r < source.rows() && rank < target_rank; ++r) {
        rows.push_back(matrix_row(source, r));
        int next = current_rank();
        if (next > rank)
            rank = next;
        else
            rows.pop_back();
    }
    return rank;
}

// Coefficients x with x * M = target for an invertible square row basis M.
std::vector<FieldElement> solve_coordinates(const Matrix& basis_rows,
                                            const std::vector<FieldElement>& target) {
    const Field& f = basis_rows.field();
    const int d = basis_rows.rows();
    if (basis_rows.cols() != d)
        throw InvalidParams("solve_coordinates: basis must be square");
    // augmented transpose system: column j of M^T is basis row j
    Matrix aug(f, d, d + 1);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c)
            aug.set(r, c, basis_rows.at(c, r));
        aug.set(r, d, target[std::size_t(r)]);
    }
    Subspace reduced = rref(aug);
    if (reduced.dim() != d)
        throw PreconditionViolated("solve_coordinates: basis is singular");
    std::vector<FieldElement> x(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
        x[std::size_t(r)] = reduced.basis().at(r, d);
    return x;
}

std::vector<FieldElement> combine(const Matrix& rows, const std::vector<FieldElement>& coeffs,
                                  int from, int to) {
    const Field& f = rows.field();
    std::vector<FieldElement> out(std::size_t(rows.cols()), f->zero());
    for (int r = from; r < to; ++r) {
        if (coeffs[std::size_t(r)] == f->zero())
            continue;
        for (int c = 0; c < rows.cols(); ++c)
            out[std::size_t(c)] =
                f->add(out[std::size_t(c)], f->mul(coeffs[std::size_t(r)], rows.at(r, c)));
    }
    return out;
}

} // namespace

AdaptedBases adapted_bases(const Subspace& w1, const Subspace& w2, const Subspace& w3) {
    const Field& f = w1.field();
    const int k = w1.dim();
    const int n = w1.ambient();
    if (n != 2 * k || w2.dim() != k || w3.dim() != k || w2.ambient() != n ||
        w3.ambient() != n)
        throw PreconditionViolated("adapted_bases: need three k-spaces of F_q^{2k}");
    if (intersection_dim(w1, w2) != 0)
        throw PreconditionViolated("adapted_bases: w1 and w2 must be adjacent");
    const int alpha = intersection_dim(w1, w3);
    const int beta = intersection_dim(w2, w3);
    if (alpha < 1 || beta < 1)
        throw PreconditionViolated("adapted_bases: w3 must be non-adjacent to w1 and w2");
    const int gamma = k - alpha - beta;
    if (gamma < 0)
        throw PreconditionViolated("adapted_bases: inconsistent intersection pattern");

    Subspace i13 = intersection(w1, w3);
    Subspace i23 = intersection(w2, w3);

    std::vector<std::vector<FieldElement>> e_rows, f_rows;
    for (int r = 0; r < alpha; ++r)
        e_rows.push_back(matrix_row(i13.basis(), r));
    for (int r = 0; r < beta; ++r)
        f_rows.push_back(matrix_row(i23.basis(), r));

    // complement of (w1 ∩ w3) ⊕ (w2 ∩ w3) inside w3, greedy over canonical rows
    std::vector<std::vector<FieldElement>> span_rows = e_rows;
    span_rows.insert(span_rows.end(), f_rows.begin(), f_rows.end());
    std::vector<std::vector<FieldElement>> mixed = span_rows;
    greedy_extend(mixed, w3.basis(), f, n, k);
    mixed.erase(mixed.begin(), mixed.begin() + long(span_rows.size()));
    if (int(mixed.size()) != gamma)
        throw PreconditionViolated("adapted_bases: complement extraction failed");

    // split each mixed generator through S = w1 ⊕ w2
    Matrix direct_sum = Matrix::stack(w1.basis(), w2.basis()); // 2k x 2k
    for (const auto& c : mixed) {
        auto coeffs = solve_coordinates(direct_sum, c);
        e_rows.push_back(combine(direct_sum, coeffs, 0, k));
        f_rows.push_back(combine(direct_sum, coeffs, k, 2 * k));
    }

    greedy_extend(e_rows, w1.basis(), f, n, k);
    greedy_extend(f_rows, w2.basis(), f, n, k);
    if (int(e_rows.size()) != k || int(f_rows.size()) != k)
        throw PreconditionViolated("adapted_bases: basis extension failed");

    AdaptedBases ab{f, k, alpha, beta, gamma, Matrix(f, k, n), Matrix(f, k, n), w1, w2, w3};
    for (int r = 0; r < k; ++r) {
        set_row(ab.e_basis, r, e_rows[std::size_t(r)]);
        set_row(ab.f_basis, r, f_rows[std::size_t(r)]);
    }

    if (rref(ab.e_basis) != w1 || rref(ab.f_basis) != w2)
        throw Error("adapted_bases: internal: arranged bases do not span the inputs");
    if (reconstruct_w3(ab) != w3)
        throw Error("adapted_bases: internal: normal form does not reproduce w3");
    return ab;
}

Subspace reconstruct_w3(const AdaptedBases& ab) {
    const int n = 2 * ab.k;
    Matrix rows(ab.field, ab.k, n);
    int r = 0;
    for (int t = 0; t < ab.alpha; ++t)
        set_row(rows, r++, matrix_row(ab.e_basis, t));
    for (int t = 0; t < ab.beta; ++t)
        set_row(rows, r++, matrix_row(ab.f_basis, t));
    for (int t = 0; t < ab.gamma; ++t)
        set_row(rows, r++,
                add_rows(ab.field, matrix_row(ab.e_basis, ab.alpha + t),
                         matrix_row(ab.f_basis, ab.beta + t)));
    return rref(rows);
}

Subspace lemma24_w4(const AdaptedBases& ab) {
    const int k = ab.k, alpha = ab.alpha, beta = ab.beta, gamma = ab.gamma;
    const int n = 2 * k;
    std::vector<std::vector<FieldElement>> rows;
    auto e = [&](int i) { return matrix_row(ab.e_basis, i); };
    auto f = [&](int i) { return matrix_row(ab.f_basis, i); };
    auto mix = [&](int ei, int fi) { rows.push_back(add_rows(ab.field, e(ei), f(fi))); };

    if (gamma >= 2) {
        for (int t = 0; t + 1 < gamma; ++t)
            mix(alpha + t, beta + 1 + t);
        for (int t = 0; t <= beta; ++t)
            mix(alpha + gamma - 1 + t, t);
        for (int t = 0; t < alpha; ++t)
            mix(t, beta + gamma + t);
    } else if (gamma == 1) {
        for (int t = 0; t <= beta; ++t)
            mix(alpha + t, t);
        for (int t = 0; t < alpha; ++t)
            mix(t, beta + 1 + t);
    } else {
        for (int t = 0; t < beta; ++t)
            mix(alpha + t, t);
        for (int t = 0; t < alpha; ++t)
            mix(t, beta + t);
    }

    Matrix m(ab.field, k, n);
    for (int r = 0; r < k; ++r)
        set_row(m, r, rows[std::size_t(r)]);
    Subspace w4 = rref(m);
    if (w4.dim() != k)
        throw Error("lemma24_w4: internal: constructed rows are dependent");
    return w4;
}

GrassmannPair grassmann_pair(const Field& field, int n, int k) {
    if (k < 2 || n < 2 * k)
        throw InvalidParams("grassmann_pair: requires n >= 2k >= 4");
    std::vector<int> prefix = iota_indices(k - 2); // <k-2>, 0-based

    auto with = [&](std::initializer_list<int> extra) {
        std::vector<int> idx = prefix;
        idx.insert(idx.end(), extra.begin(), extra.end());
        return coordinate_subspace(n, idx, field);
    };

    GrassmannPair out{with({k - 2, k - 1}), with({k, k + 1}), {}};
    out.u.push_back(with({k - 2, k}));     // u1 = <k-2> + e_{k-1}, e_{k+1}
    out.u.push_back(with({k - 2, k + 1})); // u2 = <k-2> + e_{k-1}, e_{k+2}
    out.u.push_back(with({k - 1, k}));     // u3 = <k-2> + e_k,     e_{k+1}
    out.u.push_back(with({k - 1, k + 1})); // u4 = <k-2> + e_k,     e_{k+2}
    return out;
}

namespace {

ChainStage containment_stage(std::string name, const SubspaceGraph& g,
                             const std::vector<std::uint32_t>& members,
                             const VertexSet& container, const std::string& what) {
    ChainStage st;
    st.name = std::move(name);
    st.pass = true;
    std::size_t misses = 0;
    for (std::uint32_t id : members)
        if (!container.test(id)) {
            st.pass = false;
            ++misses;
            if (st.counterexamples.size() < 5)
                st.counterexamples.push_back(g.vertex(id).serialize());
        }
    st.detail = std::to_string(members.size()) + " vertices in " + what +
                (st.pass ? ", all covered" : ", " + std::to_string(misses) + " missed");
    return st;
}

std::vector<std::uint32_t> vertices_containing(const SubspaceGraph& g, const Subspace& s) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t id = 0; id < g.vertex_count(); ++id)
        if (contains(g.vertex(id), s))
            out.push_back(id);
    return out;
}

} // namespace

ChainReport verify_grassmann_chain(const SubspaceGraph& g) {
    if (g.family() != GraphFamily::Grassmann)
        throw InvalidParams("verify_grassmann_chain: requires a Grassmann graph");
    const int k = g.k(), n = g.n();
    if (k < 2 || n < 2 * k)
        throw InvalidParams("verify_grassmann_chain: requires n >= 2k >= 4");
    const Field& f = g.field();

    GrassmannPair gp = grassmann_pair(f, n, k);
    auto id_of = [&](const Subspace& s) {
        auto id = g.find_vertex(s);
        if (!id)
            throw NotFound("verify_grassmann_chain: constructed vertex missing");
        return *id;
    };
    const std::uint32_t v1 = id_of(gp.v1), v2 = id_of(gp.v2);

    VertexSet seed(g.vertex_count());
    seed.add(v1);
    seed.add(v2);
    VertexSet first_interval = interval(g, seed);
    auto [hull_set, trace] = hull(g, seed);

    ChainReport report;
    {
        std::vector<std::uint32_t> us;
        for (const Subspace& u : gp.u)
            us.push_back(id_of(u));
        report.stages.push_back(
            containment_stage("u1..u4 in I[T]", g, us, first_interval, "I[{v1,v2}]"));
    }
    {
        Subspace c1_core = coordinate_subspace(n, iota_indices(k - 1), f);
        std::vector<int> c2_idx = iota_indices(k - 2);
        c2_idx.push_back(k - 1);
        Subspace c2_core = coordinate_subspace(n, c2_idx, f);
        report.stages.push_back(containment_stage(
            "C1 in hull", g, vertices_containing(g, c1_core), hull_set, "C1"));
        report.stages.push_back(containment_stage(
            "C2 in hull", g, vertices_containing(g, c2_core), hull_set, "C2"));
    }
    {
        Subspace d0_core = coordinate_subspace(n, iota_indices(k - 2), f);
        report.stages.push_back(containment_stage(
            "D0 in hull", g, vertices_containing(g, d0_core), hull_set, "D0"));
    }
    if (k == 2) {
        ChainStage st;
        st.name = "D-chain";
        st.pass = true;
        st.detail = "empty at k = 2, trivially passed";
        report.stages.push_back(std::move(st));
    } else {
        for (int i = 1; i <= k - 2; ++i) {
            Subspace prev_core = coordinate_subspace(n, iota_indices(k - 2 - (i - 1)), f);
            Subspace cur_core = coordinate_subspace(n, iota_indices(k - 2 - i), f);
            VertexSet prev = VertexSet::of(g.vertex_count(), vertices_containing(g, prev_core));
            VertexSet prev_interval = interval(g, prev);
            report.stages.push_back(containment_stage(
                "D" + std::to_string(i) + " in I[D" + std::to_string(i - 1) + "]", g,
                vertices_containing(g, cur_core), prev_interval,
                "I[D" + std::to_string(i - 1) + "]"));
        }
    }
    {
        Subspace last_core = coordinate_subspace(n, {}, f); // zero space
        auto all = vertices_containing(g, last_core);
        ChainStage st;
        st.name = "D" + std::to_string(k - 2) + " = V";
        st.pass = all.size() == g.vertex_count();
        st.detail = std::to_string(all.size()) + " of " + std::to_string(g.vertex_count()) +
                    " vertices";
        report.stages.push_back(std::move(st));
    }

    report.all_pass = std::all_of(report.stages.begin(), report.stages.end(),
                                  [](const ChainStage& s) { return s.pass; });
    return report;
}

nlohmann::ordered_json chain_report_to_json(const ChainReport& report) {
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const ChainStage& st : report.stages) {
        nlohmann::ordered_json j;
        j["name"] = st.name;
        j["pass"] = st.pass;
        j["detail"] = st.detail;
        if (!st.counterexamples.empty())
            j["counterexamples"] = st.counterexamples;
        stages.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["all_pass"] = report.all_pass;
    out["stages"] = std::move(stages);
    return out;
}

std::pair<std::uint32_t, std::uint32_t> paper_pair_ids(const SubspaceGraph& g) {
    auto id_of = [&](const Subspace& s) {
        auto id = g.find_vertex(s);
        if (!id)
            throw NotFound("paper pair vertex not present in the graph");
        return *id;
    };
    if (g.family() == GraphFamily::Grassmann) {
        GrassmannPair gp = grassmann_pair(g.field(), g.n(), g.k());
        return {id_of(gp.v1), id_of(gp.v2)};
    }
    if (g.n() >= 2 * g.k() + 1) {
        Case1Pair p = kneser_case1_pair(g.field(), g.n(), g.k());
        return {id_of(p.w1), id_of(p.w2)};
    }
    auto [a, b] = kneser_case2_pair(g.field(), g.k(), Case2Selector::by_index);
    return {id_of(a), id_of(b)};
}

} // namespace qgraph
