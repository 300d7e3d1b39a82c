#include <algorithm>
#include <stdexcept>

#include "fracto/groupoid/equivalence.hpp"
#include "fracto/groupoid/lifting.hpp"
#include "fracto/laws/generator.hpp"

namespace fracto {

InstanceGenerator::InstanceGenerator(std::uint64_t seed, GeneratorBounds bounds)
    : seed_(seed), state_(seed), bounds_(bounds)
{
}

// splitmix64
std::uint64_t InstanceGenerator::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t InstanceGenerator::below(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("below(0)");
    return static_cast<std::size_t>(next() % n);
}

GroupPtr InstanceGenerator::group()
{
    switch (below(10)) {
    case 0: case 1: case 2:
        return Group::trivial();
    case 3: case 4: case 5:
        return Group::cyclic(2);
    case 6: case 7:
        return Group::cyclic(3);
    default:
        return Group::symmetric3();
    }
}

GroupoidPtr InstanceGenerator::groupoid(std::size_t max_objects)
{
    if (max_objects == 0)
        max_objects = bounds_.max_objects;
    std::size_t n = 1 + below(max_objects);
    std::size_t comps = 1 + below(std::min(n, bounds_.max_components));
    std::vector<std::size_t> sizes(comps, 1);
    for (std::size_t i = comps; i < n; ++i)
        ++sizes[below(comps)];
    std::vector<std::pair<std::vector<std::string>, GroupPtr>> spec;
    std::size_t k = 0;
    for (auto s : sizes) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < s; ++i)
            names.push_back("x" + std::to_string(k++));
        spec.emplace_back(std::move(names), group());
    }
    return make_groupoid(spec);
}

GroupoidFunctor InstanceGenerator::functor(const GroupoidPtr& dom, const GroupoidPtr& cod)
{
    if (cod->object_count() == 0) {
        if (dom->object_count() != 0)
            throw std::invalid_argument("no functor into the empty groupoid");
        return GroupoidFunctor(dom, cod, {}, {}, {});
    }
    std::vector<Obj> obj(dom->object_count());
    std::vector<Elem> transport(dom->object_count());
    std::vector<std::vector<Elem>> vertex(dom->component_count());
    for (std::uint32_t c = 0; c < dom->component_count(); ++c) {
        const auto& comp = dom->component(c);
        Obj y = static_cast<Obj>(below(cod->object_count()));
        const auto& target_comp = cod->component(cod->component_of(y));
        auto homs = all_homomorphisms(*comp.group, *target_comp.group);
        vertex[c] = homs[below(homs.size())];
        for (Obj x : comp.objects) {
            if (x == comp.objects.front()) {
                obj[x] = y;
                transport[x] = 0;
            } else {
                obj[x] = target_comp.objects[below(target_comp.objects.size())];
                transport[x] = static_cast<Elem>(below(target_comp.group->order()));
            }
        }
    }
    return GroupoidFunctor(dom, cod, std::move(obj), std::move(transport), std::move(vertex));
}

Morphism InstanceGenerator::morphism_from(const FiniteGroupoid& g, Obj x)
{
    const auto& comp = g.component(g.component_of(x));
    Obj y = comp.objects[below(comp.objects.size())];
    return {x, y, static_cast<Elem>(below(comp.group->order()))};
}

namespace {

GroupoidFunctor inclusion_of(const GroupoidPtr& sub, const GroupoidPtr& base, const std::vector<Obj>& objects)
{
    return GroupoidFunctor::from_generators(sub, base, [&](const Morphism& m) {
        return Morphism{objects[m.src], objects[m.tgt], m.elem};
    });
}

}

GroupoidFunctor InstanceGenerator::essential_equivalence_into(const GroupoidPtr& cod, std::size_t max_objects)
{
    if (max_objects == 0)
        max_objects = bounds_.max_objects;
    max_objects = std::max(max_objects, cod->component_count());
    std::vector<Obj> objects;
    for (const auto& comp : cod->components())
        objects.push_back(comp.objects[below(comp.objects.size())]);
    std::size_t extra = below(max_objects - objects.size() + 1);
    for (std::size_t i = 0; i < extra && cod->object_count() > 0; ++i)
        objects.push_back(static_cast<Obj>(below(cod->object_count())));
    std::sort(objects.begin(), objects.end());
    auto sub = full_subgroupoid(cod, objects);
    auto incl = inclusion_of(sub, cod, objects);
    if (coin())
        return incl;
    return isomorphic(incl).target();
}

GroupoidFunctor InstanceGenerator::covering_into(const GroupoidPtr& cod, std::size_t max_objects)
{
    if (max_objects == 0)
        max_objects = bounds_.max_objects;
    max_objects = std::max(max_objects, cod->component_count());
    std::size_t n = cod->object_count();
    if (n == 0)
        return GroupoidFunctor::identity(cod);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::size_t count = 1 + below(2);
        std::vector<std::vector<Obj>> pieces;
        std::size_t total = 0;
        for (std::size_t p = 0; p < count; ++p) {
            std::vector<Obj> piece;
            for (Obj x = 0; x < n; ++x)
                if (below(3) == 0)
                    piece.push_back(x);
            if (piece.empty())
                piece.push_back(static_cast<Obj>(below(n)));
            total += piece.size();
            pieces.push_back(std::move(piece));
        }
        // make sure every orbit is met, through the first piece
        for (const auto& comp : cod->components()) {
            bool met = false;
            for (const auto& piece : pieces)
                for (Obj x : piece)
                    met = met || cod->component_of(x) == cod->component_of(comp.objects.front());
            if (!met) {
                pieces[0].push_back(comp.objects[below(comp.objects.size())]);
                ++total;
            }
        }
        for (auto& piece : pieces) {
            std::sort(piece.begin(), piece.end());
            piece.erase(std::unique(piece.begin(), piece.end()), piece.end());
        }
        std::sort(pieces.begin(), pieces.end());
        if (std::adjacent_find(pieces.begin(), pieces.end()) != pieces.end() || total > max_objects)
            continue;
        auto cov = essential_covering(cod, pieces);
        if (coin())
            return cov;
        return isomorphic(cov).target();
    }
    std::vector<Obj> roots;
    for (const auto& comp : cod->components())
        roots.push_back(comp.objects.front());
    return essential_covering(cod, {roots});
}

GroupoidFunctor InstanceGenerator::w_arrow(const GroupoidPtr& cod, const WClass& w)
{
    if (w.kind() == WKind::essential_coverings)
        return covering_into(cod);
    return essential_equivalence_into(cod);
}

NatTransformation InstanceGenerator::isomorphic(const GroupoidFunctor& f)
{
    std::vector<Morphism> targets(f.dom()->object_count());
    for (Obj x = 0; x < targets.size(); ++x)
        targets[x] = morphism_from(*f.cod(), f(x));
    return conjugate(f, targets).theta;
}

NatTransformation InstanceGenerator::automorphism(const GroupoidFunctor& f)
{
    const auto& X = *f.dom();
    const auto& Y = *f.cod();
    std::vector<Morphism> comps(X.object_count());
    for (std::uint32_t c = 0; c < X.component_count(); ++c) {
        const auto& comp = X.component(c);
        Obj r = comp.objects.front();
        const auto& H = Y.group_at(f(r));
        const auto& image = f.vertex_maps()[c];
        std::vector<Elem> central;
        for (Elem z = 0; z < H.order(); ++z) {
            bool ok = true;
            for (Elem g : image)
                ok = ok && H.mul(z, g) == H.mul(g, z);
            if (ok)
                central.push_back(z);
        }
        Morphism at_root{f(r), f(r), central[below(central.size())]};
        for (Obj x : comp.objects) {
            Morphism t = f(X.transport(x));
            comps[x] = Y.compose(t, Y.compose(at_root, Y.inverse(t)));
        }
    }
    return NatTransformation::from_morphisms(f, f, comps);
}

Span InstanceGenerator::span(const GroupoidPtr& a, const GroupoidPtr& b, const WClass& w)
{
    auto back = w_arrow(a, w);
    return {back, functor(back.dom(), b)};
}

TwoCellDiagram InstanceGenerator::diagram_from(const Span& s1, const WClass& w)
{
    auto w2 = w_arrow(s1.source(), w);
    auto pb = iso_comma(s1.back, w2);
    auto inv = pseudo_inverse(pb.proj2);
    auto sp = functor_compose(inv.sigma, pb.proj2);
    auto eps = ff_lift(pb.proj2, sp, GroupoidFunctor::identity(pb.apex), whisker_right(inv.eta, pb.proj2));
    auto f1p1 = functor_compose(s1.fwd, pb.proj1);
    auto theta = isomorphic(functor_compose(f1p1, inv.sigma));
    Span s2{w2, theta.target()};
    // fwd1 p1 => fwd1 p1 sigma p2 => fwd2 p2
    auto right = nat_vcompose({automorphism(f1p1), nat_inverse(whisker_left(f1p1, eps)), whisker_right(theta, pb.proj2)});
    return {s1, s2, pb.proj1, pb.proj2, pb.filler, right};
}

TwoCellDiagram InstanceGenerator::perturb(const TwoCellDiagram& d)
{
    auto e = essential_equivalence_into(d.center(), d.center()->component_count() + 1);
    auto moved = precompose_center(d, e);
    return conjugate_legs(moved, isomorphic(moved.u1), isomorphic(moved.u2));
}

Square InstanceGenerator::perturb_square(const Square& sq, const GroupoidFunctor& f, const GroupoidFunctor& u)
{
    auto e = essential_equivalence_into(sq.apex(), sq.apex()->component_count() + 1);
    auto moved = precompose(sq, e);
    auto theta = isomorphic(moved.back);
    auto phi = isomorphic(moved.fwd);
    auto cell = nat_vcompose({nat_inverse(whisker_left(u, phi)), moved.cell, whisker_left(f, theta)});
    return {theta.target(), phi.target(), cell};
}

}
