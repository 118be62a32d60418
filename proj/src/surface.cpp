#include "verocohom/surface.hpp"

#include <algorithm>

namespace verocohom {

unsigned graph_distance(const Triple& s, const Triple& t) {
    if (s.degree() != t.degree())
        throw DimensionMismatch("graph_distance: triples have different degrees");
    unsigned up = 0;
    up += s.a > t.a ? s.a - t.a : 0;
    up += s.b > t.b ? s.b - t.b : 0;
    up += s.c > t.c ? s.c - t.c : 0;
    return up;
}

static void validate(const TriangleT& t) {
    if (t.triples.empty()) throw DimensionMismatch("triangle center: no generators");
    for (const Triple& x : t.triples)
        if (x.degree() != t.d) throw DimensionMismatch("triangle center: wrong degree triple");
    for (std::size_t i = 0; i < t.triples.size(); ++i)
        for (std::size_t j = i + 1; j < t.triples.size(); ++j)
            if (t.triples[i] == t.triples[j])
                throw DimensionMismatch("triangle center: repeated triple");
}

std::vector<Triple> smoothness_violations(const TriangleT& t) {
    validate(t);
    std::vector<Triple> bad;
    for (const Triple& x : t.triples)
        if (x.a + 2 > t.d || x.b + 2 > t.d || x.c + 2 > t.d) bad.push_back(x);
    return bad;
}

std::optional<unsigned> fast_dim_partials(const TriangleT& t) {
    validate(t);
    for (std::size_t i = 0; i < t.triples.size(); ++i) {
        if (t.triples[i].is_corner()) return std::nullopt;
        for (std::size_t j = i + 1; j < t.triples.size(); ++j)
            if (graph_distance(t.triples[i], t.triples[j]) < 2) return std::nullopt;
    }
    unsigned interior = 0, boundary = 0;
    for (const Triple& x : t.triples) (x.on_boundary() ? boundary : interior)++;
    return 3 * interior + 2 * boundary;
}

// A down-triangle is the set of first partials of an interior degree-(d+1)
// monomial q: componentwise max recovers q.
static bool is_interior_down_triangle(const std::vector<Triple>& comp) {
    if (comp.size() != 3) return false;
    for (const Triple& x : comp)
        if (x.on_boundary()) return false;
    Triple q{std::max({comp[0].a, comp[1].a, comp[2].a}),
             std::max({comp[0].b, comp[1].b, comp[2].b}),
             std::max({comp[0].c, comp[1].c, comp[2].c})};
    if (q.degree() != comp[0].degree() + 1) return false;
    std::vector<Triple> partials = {{q.a - 1, q.b, q.c}, {q.a, q.b - 1, q.c}, {q.a, q.b, q.c - 1}};
    std::vector<Triple> sorted = comp;
    std::sort(sorted.begin(), sorted.end());
    std::sort(partials.begin(), partials.end());
    return sorted == partials;
}

// A boundary pair shares a zero coordinate and sits at distance 1 on that side.
static bool is_boundary_pair(const std::vector<Triple>& comp) {
    if (comp.size() != 2) return false;
    const Triple &x = comp[0], &y = comp[1];
    if (x.is_corner() || y.is_corner()) return false;
    bool common_side = (x.a == 0 && y.a == 0) || (x.b == 0 && y.b == 0) || (x.c == 0 && y.c == 0);
    return common_side && graph_distance(x, y) == 1;
}

std::optional<unsigned> fast_dim_partials_preimage(const TriangleT& t) {
    validate(t);
    for (const Triple& x : t.triples)
        if (x.is_corner()) return std::nullopt;

    // connected components under distance-1 adjacency
    const std::size_t m = t.triples.size();
    std::vector<int> comp_id(m, -1);
    unsigned ncomp = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (comp_id[i] >= 0) continue;
        std::vector<std::size_t> stack = {i};
        comp_id[i] = static_cast<int>(ncomp);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < m; ++w)
                if (comp_id[w] < 0 && graph_distance(t.triples[v], t.triples[w]) == 1) {
                    comp_id[w] = static_cast<int>(ncomp);
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    unsigned result = 0;
    for (unsigned c = 0; c < ncomp; ++c) {
        std::vector<Triple> comp;
        for (std::size_t i = 0; i < m; ++i)
            if (comp_id[i] == static_cast<int>(c)) comp.push_back(t.triples[i]);
        if (comp.size() == 1) continue;
        if (is_interior_down_triangle(comp) || is_boundary_pair(comp)) {
            ++result;
            continue;
        }
        return std::nullopt;
    }
    return result;
}

Subspace triangle_subspace(const TriangleT& t) {
    validate(t);
    std::vector<QPoly> polys;
    for (const Triple& x : t.triples)
        polys.push_back(QPoly::monomial(3, Side::primal, MultiIndex{x.a, x.b, x.c}));
    return span_of(polys, 2, t.d, Side::primal);
}

} // namespace verocohom
