#include <algorithm>
#include <stdexcept>

#include "fracto/groupoid/equivalence.hpp"
#include "fracto/groupoid/iso_comma.hpp"
#include "fracto/groupoid/lifting.hpp"

namespace fracto {

std::string EquivalenceReport::describe() const
{
    if (ok())
        return "essential equivalence";
    std::string s;
    auto add = [&](const char* what) {
        if (!s.empty())
            s += ", ";
        s += what;
    };
    if (!essentially_surjective)
        add("not essentially surjective");
    if (!full)
        add("not full");
    if (!faithful)
        add("not faithful");
    return s;
}

EquivalenceReport essential_equivalence_report(const GroupoidFunctor& f)
{
    EquivalenceReport r;
    const auto& dom = *f.dom();
    const auto& cod = *f.cod();
    std::vector<std::int64_t> hit(cod.component_count(), -1);
    for (std::uint32_t c = 0; c < dom.component_count(); ++c) {
        const auto& comp = dom.component(c);
        std::uint32_t target = cod.component_of(f(comp.objects.front()));
        if (hit[target] >= 0)
            r.full = false;
        hit[target] = c;
        const auto& v = f.vertex_maps()[c];
        std::vector<char> seen(cod.component(target).group->order(), 0);
        std::size_t distinct = 0;
        for (Elem e : v) {
            if (seen[e])
                r.faithful = false;
            else
                ++distinct;
            seen[e] = 1;
        }
        if (distinct != seen.size())
            r.full = false;
    }
    for (auto h : hit)
        if (h < 0)
            r.essentially_surjective = false;
    return r;
}

bool is_essential_equivalence(const GroupoidFunctor& f)
{
    return essential_equivalence_report(f).ok();
}

bool is_fully_faithful(const GroupoidFunctor& f)
{
    auto r = essential_equivalence_report(f);
    return r.full && r.faithful;
}

PseudoInverse pseudo_inverse(const GroupoidFunctor& f)
{
    const auto& X = *f.dom();
    const auto& Y = *f.cod();
    std::vector<std::int64_t> first(Y.component_count(), -1);
    for (Obj x = 0; x < X.object_count(); ++x) {
        auto c = Y.component_of(f(x));
        if (first[c] < 0)
            first[c] = x;
    }
    std::vector<Morphism> k(Y.object_count());
    std::vector<Obj> pre(Y.object_count());
    for (Obj y = 0; y < Y.object_count(); ++y) {
        auto x = first[Y.component_of(y)];
        if (x < 0)
            throw std::invalid_argument("pseudo_inverse: functor is not essentially surjective");
        pre[y] = static_cast<Obj>(x);
        k[y] = Morphism{f(pre[y]), y, 0};
    }
    auto sigma = GroupoidFunctor::from_generators(f.cod(), f.dom(), [&](const Morphism& m) {
        Morphism want = Y.compose(Y.inverse(k[m.tgt]), Y.compose(m, k[m.src]));
        for (const auto& cand : X.hom(pre[m.src], pre[m.tgt]))
            if (f(cand) == want)
                return cand;
        throw std::invalid_argument("pseudo_inverse: functor is not full");
    });
    return {sigma, NatTransformation::from_morphisms(functor_compose(f, sigma), GroupoidFunctor::identity(f.cod()), k)};
}

Obj IsoCommaResult::object_of(Obj a, Obj b, Elem k) const
{
    auto off = index->pair_offset[static_cast<std::size_t>(a) * index->right_count + b];
    if (off < 0)
        throw std::invalid_argument("iso_comma: no object over this pair");
    return static_cast<Obj>(off + k);
}

namespace {

struct PairOrbits {
    std::vector<std::int64_t> orbit_of;          // per element of G_C
    std::vector<std::pair<Elem, Elem>> reach;    // (p, q) carrying the orbit root to the element
    std::vector<std::uint32_t> component;        // apex component per orbit
};

}

IsoCommaResult iso_comma(const GroupoidFunctor& f, const GroupoidFunctor& g)
{
    if (!same_groupoid(f.cod(), g.cod()))
        throw std::invalid_argument("iso_comma: codomain mismatch");
    const auto& A = *f.dom();
    const auto& B = *g.dom();
    const auto& C = *f.cod();
    const std::size_t nA = A.object_count(), nB = B.object_count();

    auto index = std::make_shared<IsoCommaIndex>();
    index->right_count = nB;
    index->pair_offset.assign(nA * nB, -1);
    TripleNames names{f.dom(), g.dom(), f.cod(), {}};
    std::size_t count = 0;
    for (Obj a = 0; a < nA; ++a)
        for (Obj b = 0; b < nB; ++b) {
            Obj fa = f(a), gb = g(b);
            if (!C.connected(fa, gb))
                continue;
            index->pair_offset[a * nB + b] = static_cast<std::int64_t>(count);
            std::size_t k = C.group_at(fa).order();
            for (Elem e = 0; e < k; ++e)
                names.triples.push_back({a, b, e});
            count += k;
        }

    // orbits of G_A x G_B acting on Hom(f rA, g rB) for every pair of components
    const std::size_t cA = A.component_count(), cB = B.component_count();
    std::vector<PairOrbits> orbits(cA * cB);
    std::vector<FiniteGroupoid::Component> comps;
    std::vector<std::vector<std::pair<Elem, Elem>>> comp_elems;
    for (std::uint32_t i = 0; i < cA; ++i)
        for (std::uint32_t j = 0; j < cB; ++j) {
            const auto& compA = A.component(i);
            const auto& compB = B.component(j);
            Obj rA = compA.objects.front(), rB = compB.objects.front();
            if (!C.connected(f(rA), g(rB)))
                continue;
            const Group& GA = *compA.group;
            const Group& GB = *compB.group;
            const Group& GC = C.group_at(f(rA));
            const auto& vf = f.vertex_maps()[i];
            const auto& vg = g.vertex_maps()[j];
            auto& po = orbits[i * cB + j];
            po.orbit_of.assign(GC.order(), -1);
            po.reach.assign(GC.order(), {0, 0});
            std::int64_t norbits = 0;
            for (Elem k0 = 0; k0 < GC.order(); ++k0) {
                if (po.orbit_of[k0] >= 0)
                    continue;
                std::int64_t o = norbits++;
                std::vector<std::pair<Elem, Elem>> stab;
                for (Elem p = 0; p < GA.order(); ++p)
                    for (Elem q = 0; q < GB.order(); ++q) {
                        Elem k = GC.mul(GC.mul(vg[q], k0), GC.inv(vf[p]));
                        if (po.orbit_of[k] < 0) {
                            po.orbit_of[k] = o;
                            po.reach[k] = {p, q};
                        }
                        if (k == k0)
                            stab.push_back({p, q});
                    }
                std::vector<std::int64_t> lookup(GA.order() * GB.order(), -1);
                for (std::size_t e = 0; e < stab.size(); ++e)
                    lookup[stab[e].first * GB.order() + stab[e].second] = static_cast<std::int64_t>(e);
                GroupPtr group;
                if (stab.size() == 1) {
                    group = Group::trivial();
                } else {
                    std::vector<Elem> table(stab.size() * stab.size());
                    for (std::size_t x = 0; x < stab.size(); ++x)
                        for (std::size_t y = 0; y < stab.size(); ++y) {
                            Elem p = GA.mul(stab[x].first, stab[y].first);
                            Elem q = GB.mul(stab[x].second, stab[y].second);
                            table[x * stab.size() + y] = static_cast<Elem>(lookup[p * GB.order() + q]);
                        }
                    group = std::make_shared<const Group>(stab.size(), std::move(table));
                }
                po.component.push_back(static_cast<std::uint32_t>(comps.size()));
                comps.push_back({{}, group});
                comp_elems.push_back(std::move(stab));
                index->lookup.push_back(std::move(lookup));
                index->right_order.push_back(GB.order());
            }
        }

    std::vector<Obj> obj1(count), obj2(count);
    std::vector<Elem> tp1(count), tp2(count), filler(count);
    for (Obj x = 0; x < count; ++x) {
        auto [a, b, k] = names.triples[x];
        std::uint32_t i = A.component_of(a), j = B.component_of(b);
        const Group& GC = C.group_at(f(a));
        Elem reduced = GC.mul(GC.mul(GC.inv(g.transport_images()[b]), k), f.transport_images()[a]);
        const auto& po = orbits[i * cB + j];
        auto [p, q] = po.reach[reduced];
        comps[po.component[po.orbit_of[reduced]]].objects.push_back(x);
        obj1[x] = a;
        obj2[x] = b;
        tp1[x] = p;
        tp2[x] = q;
        filler[x] = k;
    }

    // components are sorted by root inside the groupoid constructor; keep the element lists aligned
    std::vector<std::size_t> order(comps.size());
    for (std::size_t c = 0; c < order.size(); ++c)
        order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return comps[x].objects.front() < comps[y].objects.front(); });
    std::vector<FiniteGroupoid::Component> sorted_comps;
    std::vector<std::vector<std::pair<Elem, Elem>>> sorted_elems;
    std::vector<std::vector<std::int64_t>> sorted_lookup;
    std::vector<std::size_t> sorted_right;
    for (auto c : order) {
        sorted_comps.push_back(comps[c]);
        sorted_elems.push_back(std::move(comp_elems[c]));
        sorted_lookup.push_back(std::move(index->lookup[c]));
        sorted_right.push_back(index->right_order[c]);
    }
    index->lookup = std::move(sorted_lookup);
    index->right_order = std::move(sorted_right);

    std::vector<std::vector<Elem>> v1(sorted_elems.size()), v2(sorted_elems.size());
    for (std::size_t c = 0; c < sorted_elems.size(); ++c)
        for (auto [p, q] : sorted_elems[c]) {
            v1[c].push_back(p);
            v2[c].push_back(q);
        }

    auto apex = make_groupoid(std::move(sorted_comps), count, std::move(names));
    GroupoidFunctor proj1(apex, f.dom(), std::move(obj1), std::move(tp1), std::move(v1));
    GroupoidFunctor proj2(apex, g.dom(), std::move(obj2), std::move(tp2), std::move(v2));
    NatTransformation fill(functor_compose(f, proj1), functor_compose(g, proj2), std::move(filler));
    return IsoCommaResult{f, g, apex, proj1, proj2, fill, std::move(index)};
}

GroupoidFunctor iso_comma_mediator(const IsoCommaResult& pb, const GroupoidFunctor& t1, const GroupoidFunctor& t2,
                                   const NatTransformation& gamma)
{
    if (!same_groupoid(t1.cod(), pb.f.dom()) || !same_groupoid(t2.cod(), pb.g.dom()) ||
        !same_groupoid(t1.dom(), t2.dom()))
        throw std::invalid_argument("iso_comma_mediator: cone legs do not match the cospan");
    if (!(gamma.source() == functor_compose(pb.f, t1)) || !(gamma.target() == functor_compose(pb.g, t2)))
        throw std::invalid_argument("iso_comma_mediator: cone 2-cell has the wrong boundary");
    const auto& apex = *pb.apex;
    const auto& A = *pb.f.dom();
    const auto& B = *pb.g.dom();
    const auto& ix = *pb.index;
    auto object = [&](Obj x) { return pb.object_of(t1(x), t2(x), gamma.components()[x]); };
    return GroupoidFunctor::from_generators(t1.dom(), pb.apex, [&](const Morphism& m) -> Morphism {
        Obj hx = object(m.src), hy = object(m.tgt);
        if (!apex.connected(hx, hy))
            throw std::invalid_argument("iso_comma_mediator: cone is not natural");
        Morphism ma = t1(m), mb = t2(m);
        const Group& GA = A.group_at(ma.src);
        const Group& GB = B.group_at(mb.src);
        const auto& tp1 = pb.proj1.transport_images();
        const auto& tp2 = pb.proj2.transport_images();
        Elem p = GA.mul(GA.mul(GA.inv(tp1[hy]), ma.elem), tp1[hx]);
        Elem q = GB.mul(GB.mul(GB.inv(tp2[hy]), mb.elem), tp2[hx]);
        std::uint32_t c = apex.component_of(hx);
        auto e = ix.lookup[c][p * ix.right_order[c] + q];
        if (e < 0)
            throw std::invalid_argument("iso_comma_mediator: cone is not natural");
        return {hx, hy, static_cast<Elem>(e)};
    });
}

NatTransformation ff_lift(const GroupoidFunctor& w, const GroupoidFunctor& f, const GroupoidFunctor& g,
                          const NatTransformation& alpha)
{
    if (!same_groupoid(f.cod(), w.dom()) || !same_groupoid(g.cod(), w.dom()))
        throw std::invalid_argument("ff_lift: boundary mismatch");
    if (!(alpha.source() == functor_compose(w, f)) || !(alpha.target() == functor_compose(w, g)))
        throw std::invalid_argument("ff_lift: 2-cell has the wrong boundary");
    const auto& C = *w.dom();
    const auto& D = *w.cod();
    // inverse of each vertex map, built on demand
    std::vector<std::vector<std::int64_t>> preimage(C.component_count());
    auto lift = [&](std::uint32_t c, Elem e) -> std::int64_t {
        auto& pre = preimage[c];
        if (pre.empty()) {
            const auto& v = w.vertex_maps()[c];
            pre.assign(D.group_at(w(C.component(c).objects.front())).order(), -1);
            for (Elem x = 0; x < v.size(); ++x) {
                if (pre[v[x]] >= 0)
                    throw std::invalid_argument("ff_lift: functor is not faithful");
                pre[v[x]] = x;
            }
        }
        return pre[e];
    };
    std::vector<Elem> comps(f.dom()->object_count());
    for (Obj x = 0; x < comps.size(); ++x) {
        Obj fx = f(x), gx = g(x);
        if (!C.connected(fx, gx))
            throw std::invalid_argument("ff_lift: functor is not full");
        const Group& H = D.group_at(w(fx));
        const auto& t = w.transport_images();
        Elem e = H.mul(H.mul(H.inv(t[gx]), alpha.components()[x]), t[fx]);
        auto pre = lift(C.component_of(fx), e);
        if (pre < 0)
            throw std::invalid_argument("ff_lift: functor is not full");
        comps[x] = static_cast<Elem>(pre);
    }
    return NatTransformation(f, g, std::move(comps));
}

NatTransformation coff_factor(const GroupoidFunctor& h, const GroupoidFunctor& x, const GroupoidFunctor& y,
                              const NatTransformation& mu, PreimageRule rule)
{
    if (!same_groupoid(h.cod(), x.dom()) || !same_groupoid(h.cod(), y.dom()))
        throw std::invalid_argument("coff_factor: boundary mismatch");
    if (!(mu.source() == functor_compose(x, h)) || !(mu.target() == functor_compose(y, h)))
        throw std::invalid_argument("coff_factor: 2-cell has the wrong boundary");
    const auto& P = *h.cod();
    const auto& Z = *x.cod();
    std::vector<std::int64_t> chosen(P.component_count(), -1);
    for (Obj d = 0; d < h.dom()->object_count(); ++d) {
        auto c = P.component_of(h(d));
        if (chosen[c] < 0 || rule == PreimageRule::last)
            chosen[c] = d;
    }
    std::vector<Elem> comps(P.object_count());
    for (Obj p = 0; p < comps.size(); ++p) {
        auto d = chosen[P.component_of(p)];
        if (d < 0)
            throw std::invalid_argument("coff_factor: functor is not essentially surjective");
        Obj hd = h(static_cast<Obj>(d));
        Elem kk = rule == PreimageRule::first ? 0 : static_cast<Elem>(P.group_at(p).order() - 1);
        Morphism k{hd, p, kk};
        Morphism m = Z.compose(y(k), Z.compose(mu.at(static_cast<Obj>(d)), Z.inverse(x(k))));
        comps[p] = m.elem;
    }
    NatTransformation delta(x, y, std::move(comps));
    const auto& mc = mu.components();
    for (Obj d = 0; d < mc.size(); ++d)
        if (delta.components()[h(d)] != mc[d])
            throw std::invalid_argument("coff_factor: 2-cell does not factor (functor not full?)");
    return delta;
}

Conjugate conjugate(const GroupoidFunctor& f, const std::vector<Morphism>& targets)
{
    const auto& C = *f.cod();
    if (targets.size() != f.dom()->object_count())
        throw std::invalid_argument("conjugate: wrong number of components");
    for (Obj x = 0; x < targets.size(); ++x)
        if (targets[x].src != f(x) || !C.contains(targets[x]))
            throw std::invalid_argument("conjugate: component has the wrong source");
    auto g = GroupoidFunctor::from_generators(f.dom(), f.cod(), [&](const Morphism& m) {
        return C.compose(targets[m.tgt], C.compose(f(m), C.inverse(targets[m.src])));
    });
    return {g, NatTransformation::from_morphisms(f, g, targets)};
}

}
