#pragma once

// Constructors for the triangulations used by the invariant tables: the
// two-pentachora 4-sphere, simplex boundaries, the one-vertex circle, the
// staircase (shuffle) product, and ingestion of simplicial facet lists.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mw/delta_complex.hpp"

namespace mw {

/// Simplicial complex given by its maximal faces; tuples strictly increasing.
struct FacetList {
    int vertex_count = 0;
    std::vector<std::vector<int>> facets;
};

/// dim 4, two top simplices glued face-to-face: the standard S^4.
inline DeltaComplex two_pentachora_sphere() {
    std::vector<GluingPair> g;
    for (int i = 0; i <= 4; ++i) g.push_back({{0, i}, {1, i}});
    return build_complex(4, 2, g, "s4");
}

/// Boundary of the d-simplex as a (d-1)-dimensional simplicial complex.
inline DeltaComplex boundary_of_simplex(int d) {
    if (d < 2) throw input_error("boundary_of_simplex needs d >= 2");
    // facet F_j = {0..d} minus j; vertex v sits at position v - (v > j)
    auto pos = [](int v, int j) { return v < j ? v : v - 1; };
    std::vector<GluingPair> g;
    for (int j = 0; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k)
            g.push_back({{j, pos(k, j)}, {k, pos(j, k)}});
    return build_complex(d - 1, d + 1, g, "boundary_delta_" + std::to_string(d));
}

/// One edge with its endpoints identified.
inline DeltaComplex circle() {
    return build_complex(1, 1, {{{0, 0}, {0, 1}}}, "circle");
}

namespace detail {

struct LatticePath {
    std::vector<std::pair<int, int>> pts;  // monotone, (0,0) .. (p,q)
};

inline std::vector<LatticePath> all_paths(int p, int q) {
    std::vector<LatticePath> out;
    const int d = p + q;
    // iterate subsets of step positions that move right
    std::vector<int> steps(static_cast<std::size_t>(d), 0);
    auto emit = [&]() {
        LatticePath path;
        int c = 0, r = 0;
        path.pts.push_back({0, 0});
        for (int s : steps) {
            if (s)
                ++c;
            else
                ++r;
            path.pts.push_back({c, r});
        }
        out.push_back(std::move(path));
    };
    // lexicographic generation over binary strings with exactly p ones
    std::vector<int> ones(static_cast<std::size_t>(p));
    std::iota(ones.begin(), ones.end(), 0);
    while (true) {
        std::fill(steps.begin(), steps.end(), 0);
        for (int o : ones) steps[static_cast<std::size_t>(o)] = 1;
        emit();
        if (p == 0 || p == d) break;
        int i = p - 1;
        while (i >= 0 && ones[static_cast<std::size_t>(i)] == d - p + i) --i;
        if (i < 0) break;
        ++ones[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < p; ++j)
            ones[static_cast<std::size_t>(j)] = ones[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// Staircase (shuffle) product of two Delta complexes. Top simplices are
/// triples (x, y, path) with path a monotone lattice path in the p-by-q
/// grid; the vertices of the product simplex are the path points in order.
inline DeltaComplex staircase_product(const DeltaComplex& X, const DeltaComplex& Y) {
    const int p = X.dim(), q = Y.dim(), d = p + q;
    const auto paths = detail::all_paths(p, q);
    const int npaths = static_cast<int>(paths.size());
    std::map<std::vector<std::pair<int, int>>, int> path_index;
    for (int s = 0; s < npaths; ++s) path_index[paths[static_cast<std::size_t>(s)].pts] = s;

    const int tcount = X.top_count() * Y.top_count() * npaths;
    auto top_id = [&](int xi, int yi, int si) {
        return (xi * Y.top_count() + yi) * npaths + si;
    };

    // order-preserving bijection {0..n} minus r -> {0..n} minus rt
    auto remap = [](int c, int r, int rt) {
        const int rank = c - (c > r ? 1 : 0);
        return rank + (rank >= rt ? 1 : 0);
    };

    // Completion of a gapped path by one point in column (axis=0) or row
    // (axis=1) `rt`; returns (path points, insertion position).
    auto complete = [&](std::vector<std::pair<int, int>> pts, int axis, int rt)
        -> std::pair<std::vector<std::pair<int, int>>, int> {
        auto coord = [&](const std::pair<int, int>& z) { return axis == 0 ? z.first : z.second; };
        int j = 0;
        while (j < static_cast<int>(pts.size()) && coord(pts[static_cast<std::size_t>(j)]) < rt) ++j;
        std::pair<int, int> z;
        if (axis == 0) {
            const int row = j > 0 ? pts[static_cast<std::size_t>(j - 1)].second
                                  : pts[static_cast<std::size_t>(j)].second;
            z = {rt, row};
        } else {
            const int col = j > 0 ? pts[static_cast<std::size_t>(j - 1)].first
                                  : pts[static_cast<std::size_t>(j)].first;
            z = {col, rt};
        }
        pts.insert(pts.begin() + j, z);
        return {std::move(pts), j};
    };

    // partner of slot (xi, yi, si, k); {-1,-1} when it is a boundary slot
    auto partner_slot = [&](int xi, int yi, int si, int k) -> std::pair<int, int> {
        const auto& pts = paths[static_cast<std::size_t>(si)].pts;
        std::vector<std::pair<int, int>> g;
        g.reserve(pts.size() - 1);
        for (int t = 0; t < static_cast<int>(pts.size()); ++t)
            if (t != k) g.push_back(pts[static_cast<std::size_t>(t)]);
        unsigned cols = 0, rows = 0;
        for (const auto& z : g) {
            cols |= 1u << z.first;
            rows |= 1u << z.second;
        }
        const unsigned fullc = (1u << (p + 1)) - 1u;
        const unsigned fullr = (1u << (q + 1)) - 1u;
        if (cols == fullc && rows == fullr) {
            // diagonal facet interior to the cell: the other completion
            auto prev = pts[static_cast<std::size_t>(k - 1)];
            auto cur = pts[static_cast<std::size_t>(k)];
            std::pair<int, int> other =
                (cur.first == prev.first + 1) ? std::make_pair(prev.first, prev.second + 1)
                                              : std::make_pair(prev.first + 1, prev.second);
            auto alt = g;
            alt.insert(alt.begin() + k, other);
            return {top_id(xi, yi, path_index.at(alt)), k};
        }
        if (cols != fullc) {
            const int r = std::countr_zero(~cols & fullc);
            const int pslot = X.partner(X.slot_index(xi, r));
            if (pslot < 0) return {-1, -1};
            const SlotRef ps = X.slot_ref(pslot);
            std::vector<std::pair<int, int>> mapped;
            mapped.reserve(g.size());
            for (const auto& z : g) mapped.push_back({remap(z.first, r, ps.face), z.second});
            auto [full, j] = complete(std::move(mapped), 0, ps.face);
            return {top_id(ps.top, yi, path_index.at(full)), j};
        }
        const int u = std::countr_zero(~rows & fullr);
        const int pslot = Y.partner(Y.slot_index(yi, u));
        if (pslot < 0) return {-1, -1};
        const SlotRef ps = Y.slot_ref(pslot);
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(g.size());
        for (const auto& z : g) mapped.push_back({z.first, remap(z.second, u, ps.face)});
        auto [full, j] = complete(std::move(mapped), 1, ps.face);
        return {top_id(xi, ps.top, path_index.at(full)), j};
    };

    std::vector<GluingPair> gl;
    for (int xi = 0; xi < X.top_count(); ++xi)
        for (int yi = 0; yi < Y.top_count(); ++yi)
            for (int si = 0; si < npaths; ++si) {
                const int t = top_id(xi, yi, si);
                for (int k = 0; k <= d; ++k) {
                    auto [pt, pk] = partner_slot(xi, yi, si, k);
                    if (pt < 0) continue;
                    if (pt == t && pk == k)
                        throw std::logic_error("staircase product produced a self-paired slot");
                    if (std::make_pair(pt, pk) > std::make_pair(t, k))
                        gl.push_back({{t, k}, {pt, pk}});
                }
            }
    std::string nm = (X.name().empty() ? "X" : X.name()) + " x " + (Y.name().empty() ? "Y" : Y.name());
    return build_complex(d, tcount, gl, nm);
}

/// Build a Delta complex from a simplicial facet list. Gluings are derived
/// by matching equal ridge vertex sets; the order-preserving bijection is
/// forced since tuples are sorted. A ridge shared by more than two facets
/// is rejected.
inline DeltaComplex from_facet_list(const FacetList& fl, std::string name = "") {
    if (fl.facets.empty()) throw input_error("facet list is empty");
    const int d = static_cast<int>(fl.facets.front().size()) - 1;
    if (d < 1) throw input_error("facets must have at least two vertices");

    std::vector<int> ids;
    for (const auto& f : fl.facets) {
        if (static_cast<int>(f.size()) != d + 1)
            throw input_error("facets of mixed dimension in facet list");
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            if (f[i] >= f[i + 1]) throw input_error("facet tuple not strictly increasing");
        for (int v : f) ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (static_cast<int>(ids.size()) != fl.vertex_count)
        throw input_error("vertex_count does not match the facets (got " +
                          std::to_string(ids.size()) + " distinct ids)");
    auto compact = [&](int v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };

    std::map<std::vector<int>, std::vector<SlotRef>> ridges;
    for (int t = 0; t < static_cast<int>(fl.facets.size()); ++t) {
        std::vector<int> facet(fl.facets[static_cast<std::size_t>(t)].size());
        for (std::size_t i = 0; i < facet.size(); ++i)
            facet[i] = compact(fl.facets[static_cast<std::size_t>(t)][i]);
        for (int k = 0; k <= d; ++k) {
            std::vector<int> ridge;
            ridge.reserve(static_cast<std::size_t>(d));
            for (int i = 0; i <= d; ++i)
                if (i != k) ridge.push_back(facet[static_cast<std::size_t>(i)]);
            auto& lst = ridges[ridge];
            lst.push_back({t, k});
            if (lst.size() > 2) {
                std::string s;
                for (int v : ridge) s += std::to_string(v) + " ";
                throw input_error("ridge { " + s + "} shared by more than two facets");
            }
        }
    }
    std::vector<GluingPair> g;
    for (const auto& [ridge, slots] : ridges)
        if (slots.size() == 2) g.push_back({slots[0], slots[1]});
    return build_complex(d, static_cast<int>(fl.facets.size()), g, std::move(name));
}

}  // namespace mw
