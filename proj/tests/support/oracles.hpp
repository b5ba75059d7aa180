#pragma once

// Independent oracles for the unit and acceptance tests. Nothing here calls
// into the library code being checked.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sextic/codes.hpp"
#include "sextic/surface.hpp"

namespace oracle {

// CW complex of a closed surface from its polygon word (one 2-cell), with
// punctures cut out of that cell. chi = V - E + F counted directly.
struct CellCounts {
    int vertices = 0;
    int edges = 0;
    int faces = 0;

    int chi() const { return vertices - edges + faces; }
};

struct Letter {
    int edge;
    bool inverse;
};

inline std::vector<Letter> polygon_word(bool orientable, int genus) {
    std::vector<Letter> w;
    if (orientable && genus == 0) return {{0, false}, {0, true}};
    for (int i = 0; i < genus; ++i) {
        if (orientable) {
            const int a = 2 * i, b = 2 * i + 1;
            w.insert(w.end(), {{a, false}, {b, false}, {a, true}, {b, true}});
        } else {
            w.insert(w.end(), {{i, false}, {i, false}});
        }
    }
    return w;
}

inline CellCounts cell_counts(bool orientable, int genus, int punctures) {
    const auto word = polygon_word(orientable, genus);
    const int n = static_cast<int>(word.size());
    // corner i sits before letter i; union-find over corners
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto tail = [&](int i) { return word[i].inverse ? (i + 1) % n : i; };
    auto head = [&](int i) { return word[i].inverse ? i : (i + 1) % n; };
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (word[i].edge == word[j].edge) {
                unite(tail(i), tail(j));
                unite(head(i), head(j));
                ++edges;
            }
    int vertices = 0;
    for (int i = 0; i < n; ++i) vertices += find(i) == i;
    CellCounts c{vertices, edges, 1};
    // each hole: new boundary vertex, boundary loop, and a bridge edge to a
    // corner, which keeps the punctured cell a single disk
    c.vertices += punctures;
    c.edges += 2 * punctures;
    return c;
}

inline int chi(const sextic::CompactSurface& s) {
    return cell_counts(s.kind.is_orientable(), s.kind.genus(), s.punctures).chi();
}

// Unrooted region tree of a forest on S2: nodes are regions, edges are ovals.
struct RegionTree {
    std::vector<std::vector<int>> adjacent;

    int add_region() {
        adjacent.emplace_back();
        return static_cast<int>(adjacent.size()) - 1;
    }
};

inline void build(RegionTree& t, int region, const sextic::OvalForest& f) {
    for (const auto& inside : f.ovals()) {
        const int r = t.add_region();
        t.adjacent[region].push_back(r);
        t.adjacent[r].push_back(region);
        build(t, r, inside);
    }
}

inline sextic::OvalForest rooted_at(const RegionTree& t, int region, int from) {
    std::vector<sextic::OvalForest> ovals;
    for (int next : t.adjacent[region])
        if (next != from) ovals.push_back(rooted_at(t, next, region));
    return sextic::OvalForest(std::move(ovals));
}

inline int nesting(const sextic::OvalForest& f, int enclosing = 0) {
    int n = 0;
    for (const auto& inside : f.ovals()) n += enclosing + nesting(inside, enclosing + 1);
    return n;
}

// Best rooting by (nesting pairs, printed code).
inline std::string sphere_code(const sextic::OvalForest& f) {
    RegionTree t;
    build(t, t.add_region(), f);
    std::pair<int, std::string> best{1 << 30, ""};
    for (int r = 0; r < static_cast<int>(t.adjacent.size()); ++r) {
        const auto g = rooted_at(t, r, -1);
        best = std::min(best, std::make_pair(nesting(g), sextic::print_forest(g)));
    }
    return best.second;
}

// Random forest with exactly n ovals.
inline sextic::OvalForest random_forest(std::mt19937& rng, int n) {
    std::vector<sextic::OvalForest> ovals;
    while (n > 0) {
        const int size = std::uniform_int_distribution<int>(1, n)(rng);
        ovals.push_back(random_forest(rng, size - 1));
        n -= size;
    }
    return sextic::OvalForest(std::move(ovals));
}

}  // namespace oracle
