#pragma once

// Brute-force reference implementations over explicit composition tables.
// They only read a groupoid through its presentation and evaluate functors
// pointwise, so they share no algorithm with the library under test.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracto/groupoid/functor.hpp"
#include "fracto/io/workspace.hpp"

namespace oracle {

using fracto::Presentation;

struct Table {
    std::size_t objects = 0;
    std::vector<int> src, tgt;
    std::vector<std::vector<int>> comp; // comp[g][f] = g.f or -1
    std::vector<int> id;

    std::size_t morphisms() const { return src.size(); }
    std::vector<int> hom(int x, int y) const
    {
        std::vector<int> out;
        for (std::size_t m = 0; m < morphisms(); ++m)
            if (src[m] == x && tgt[m] == y)
                out.push_back(int(m));
        return out;
    }
};

inline Table table(const Presentation& p)
{
    Table t;
    t.objects = p.objects.size();
    auto obj = [&](const std::string& s) {
        return int(std::find(p.objects.begin(), p.objects.end(), s) - p.objects.begin());
    };
    auto mor = [&](const std::string& s) {
        for (std::size_t i = 0; i < p.morphisms.size(); ++i)
            if (p.morphisms[i].name == s)
                return int(i);
        return -1;
    };
    for (const auto& m : p.morphisms) {
        t.src.push_back(obj(m.src));
        t.tgt.push_back(obj(m.tgt));
    }
    t.comp.assign(t.morphisms(), std::vector<int>(t.morphisms(), -1));
    for (const auto& [g, f, gf] : p.compose)
        t.comp[mor(g)][mor(f)] = mor(gf);
    t.id.assign(t.objects, -1);
    for (std::size_t m = 0; m < t.morphisms(); ++m)
        if (t.src[m] == t.tgt[m] && t.comp[m][m] == int(m) && t.id[t.src[m]] < 0)
            t.id[t.src[m]] = int(m);
    return t;
}

inline Table table(const fracto::FiniteGroupoid& g) { return table(fracto::present(g)); }

// a functor as plain object and morphism maps (morphism indices follow the presentation)
struct Map {
    std::vector<int> obj, mor;
};

inline Map map_of(const fracto::GroupoidFunctor& f)
{
    Map m;
    const auto& d = *f.dom();
    const auto& c = *f.cod();
    for (fracto::Obj x = 0; x < d.object_count(); ++x)
        m.obj.push_back(int(f(x)));
    for (std::size_t i = 0; i < d.morphism_count(); ++i)
        m.mor.push_back(int(c.morphism_index(f(d.morphism_at(i)))));
    return m;
}

inline bool essential_equivalence(const Table& a, const Table& b, const Map& f)
{
    for (std::size_t y = 0; y < b.objects; ++y) {
        bool hit = false;
        for (std::size_t x = 0; x < a.objects && !hit; ++x)
            hit = !b.hom(f.obj[x], int(y)).empty();
        if (!hit)
            return false;
    }
    for (std::size_t x = 0; x < a.objects; ++x)
        for (std::size_t z = 0; z < a.objects; ++z) {
            auto h = a.hom(int(x), int(z));
            auto k = b.hom(f.obj[x], f.obj[z]);
            std::vector<int> image;
            for (int m : h)
                image.push_back(f.mor[m]);
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end() || image.size() != k.size())
                return false;
        }
    return true;
}

// objects and morphisms of the iso-comma of f : A -> C <- B : g
inline std::pair<std::size_t, std::size_t> iso_comma_size(const Table& a, const Table& b, const Table& c, const Map& f,
                                                          const Map& g)
{
    struct Triple {
        int a, b, k;
    };
    std::vector<Triple> objs;
    for (std::size_t x = 0; x < a.objects; ++x)
        for (std::size_t y = 0; y < b.objects; ++y)
            for (int k : c.hom(f.obj[x], g.obj[y]))
                objs.push_back({int(x), int(y), k});
    std::size_t mors = 0;
    for (const auto& s : objs)
        for (const auto& t : objs)
            for (int p : a.hom(s.a, t.a))
                for (int q : b.hom(s.b, t.b))
                    mors += c.comp[g.mor[q]][s.k] == c.comp[t.k][f.mor[p]];
    return {objs.size(), mors};
}

// every functor a -> b, by backtracking over morphism images
inline std::vector<Map> all_functors(const Table& a, const Table& b)
{
    std::vector<Map> out;
    Map cur{std::vector<int>(a.objects, -1), std::vector<int>(a.morphisms(), -1)};
    auto consistent = [&]() {
        for (std::size_t g = 0; g < a.morphisms(); ++g)
            for (std::size_t f = 0; f < a.morphisms(); ++f) {
                int gf = a.comp[g][f];
                if (gf < 0 || cur.mor[g] < 0 || cur.mor[f] < 0 || cur.mor[gf] < 0)
                    continue;
                if (b.comp[cur.mor[g]][cur.mor[f]] != cur.mor[gf])
                    return false;
            }
        return true;
    };
    std::function<void(std::size_t)> objs, mors;
    mors = [&](std::size_t m) {
        if (m == a.morphisms()) {
            out.push_back(cur);
            return;
        }
        for (int k : b.hom(cur.obj[a.src[m]], cur.obj[a.tgt[m]])) {
            if (int(m) == a.id[a.src[m]] && k != b.id[cur.obj[a.src[m]]])
                continue;
            cur.mor[m] = k;
            if (consistent())
                mors(m + 1);
            cur.mor[m] = -1;
        }
    };
    objs = [&](std::size_t x) {
        if (x == a.objects) {
            mors(0);
            return;
        }
        for (std::size_t y = 0; y < b.objects; ++y) {
            cur.obj[x] = int(y);
            objs(x + 1);
        }
    };
    objs(0);
    return out;
}

// every natural transformation f => g as component lists
inline std::vector<std::vector<int>> all_transformations(const Table& a, const Table& b, const Map& f, const Map& g)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(a.objects, -1);
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
        if (x == a.objects) {
            for (std::size_t m = 0; m < a.morphisms(); ++m)
                if (b.comp[g.mor[m]][cur[a.src[m]]] != b.comp[cur[a.tgt[m]]][f.mor[m]])
                    return;
            out.push_back(cur);
            return;
        }
        for (int k : b.hom(f.obj[x], g.obj[x])) {
            cur[x] = k;
            rec(x + 1);
        }
    };
    rec(0);
    return out;
}

inline fracto::GroupoidFunctor realize(const fracto::GroupoidPtr& a, const fracto::GroupoidPtr& b, const Map& m)
{
    return fracto::GroupoidFunctor::from_generators(
        a, b, [&](const fracto::Morphism& x) { return b->morphism_at(std::size_t(m.mor[a->morphism_index(x)])); });
}

inline fracto::NatTransformation realize(const fracto::GroupoidFunctor& f, const fracto::GroupoidFunctor& g,
                                         const std::vector<int>& comps)
{
    std::vector<fracto::Morphism> list;
    for (int k : comps)
        list.push_back(g.cod()->morphism_at(std::size_t(k)));
    return fracto::NatTransformation::from_morphisms(f, g, list);
}

}
