#include "fracto/groupoid/functor.hpp"

#include <stdexcept>

namespace fracto {

GroupoidFunctor::GroupoidFunctor(GroupoidPtr dom, GroupoidPtr cod, std::vector<Obj> obj_map,
                                 std::vector<Elem> transport, std::vector<std::vector<Elem>> vertex)
{
    if (!dom || !cod)
        throw std::invalid_argument("functor without domain or codomain");
    if (obj_map.size() != dom->object_count() || transport.size() != dom->object_count() ||
        vertex.size() != dom->component_count())
        throw std::invalid_argument("functor data does not match its domain");
    for (std::uint32_t c = 0; c < dom->component_count(); ++c)
        if (vertex[c].size() != dom->component(c).group->order())
            throw std::invalid_argument("vertex map has the wrong size");
    for (Obj y : obj_map)
        if (y >= cod->object_count())
            throw std::invalid_argument("object image outside the codomain");
    data_ = std::make_shared<const Data>(
        Data{std::move(dom), std::move(cod), std::move(obj_map), std::move(transport), std::move(vertex)});
}

GroupoidFunctor GroupoidFunctor::from_generators(GroupoidPtr dom, GroupoidPtr cod,
                                                 const std::function<Morphism(const Morphism&)>& on_morphism)
{
    std::vector<Obj> obj(dom->object_count());
    std::vector<Elem> transport(dom->object_count());
    std::vector<std::vector<Elem>> vertex(dom->component_count());
    for (std::uint32_t c = 0; c < dom->component_count(); ++c) {
        const auto& comp = dom->component(c);
        Obj r = comp.objects.front();
        for (Obj x : comp.objects) {
            Morphism t = on_morphism(dom->transport(x));
            obj[x] = t.tgt;
            transport[x] = t.elem;
            if (x == r)
                obj[x] = t.src;
        }
        vertex[c].resize(comp.group->order());
        for (Elem g = 0; g < comp.group->order(); ++g) {
            Morphism m = on_morphism({r, r, g});
            if (m.src != obj[r] || m.tgt != obj[r])
                throw std::invalid_argument("vertex group image is not an endomorphism");
            vertex[c][g] = m.elem;
        }
    }
    return GroupoidFunctor(std::move(dom), std::move(cod), std::move(obj), std::move(transport), std::move(vertex));
}

GroupoidFunctor GroupoidFunctor::identity(const GroupoidPtr& g)
{
    std::vector<Obj> obj(g->object_count());
    for (Obj x = 0; x < obj.size(); ++x)
        obj[x] = x;
    std::vector<std::vector<Elem>> vertex(g->component_count());
    for (std::uint32_t c = 0; c < g->component_count(); ++c) {
        vertex[c].resize(g->component(c).group->order());
        for (Elem e = 0; e < vertex[c].size(); ++e)
            vertex[c][e] = e;
    }
    return GroupoidFunctor(g, g, std::move(obj), std::vector<Elem>(g->object_count(), 0), std::move(vertex));
}

GroupoidFunctor GroupoidFunctor::constant(const GroupoidPtr& dom, const GroupoidPtr& cod, Obj y)
{
    std::vector<std::vector<Elem>> vertex(dom->component_count());
    for (std::uint32_t c = 0; c < dom->component_count(); ++c)
        vertex[c].assign(dom->component(c).group->order(), 0);
    return GroupoidFunctor(dom, cod, std::vector<Obj>(dom->object_count(), y),
                           std::vector<Elem>(dom->object_count(), 0), std::move(vertex));
}

Morphism GroupoidFunctor::operator()(const Morphism& m) const
{
    const auto& d = *data_;
    std::uint32_t c = d.dom->component_of(m.src);
    Obj fx = d.obj_map[m.src];
    const Group& h = d.cod->group_at(fx);
    Elem e = h.mul(h.mul(d.transport[m.tgt], d.vertex[c][m.elem]), h.inv(d.transport[m.src]));
    return {fx, d.obj_map[m.tgt], e};
}

bool GroupoidFunctor::is_identity() const
{
    const auto& d = *data_;
    if (!same_groupoid(d.dom, d.cod))
        return false;
    for (Obj x = 0; x < d.obj_map.size(); ++x)
        if (d.obj_map[x] != x || d.transport[x] != 0)
            return false;
    for (const auto& v : d.vertex)
        for (Elem e = 0; e < v.size(); ++e)
            if (v[e] != e)
                return false;
    return true;
}

std::vector<std::string> GroupoidFunctor::check() const
{
    std::vector<std::string> problems;
    const auto& d = *data_;
    for (std::uint32_t c = 0; c < d.dom->component_count(); ++c) {
        const auto& comp = d.dom->component(c);
        Obj r = comp.objects.front();
        Obj fr = d.obj_map[r];
        const Group& h = d.cod->group_at(fr);
        if (d.transport[r] != 0)
            problems.push_back("identity at " + d.dom->object_name(r) + " is not preserved");
        for (Obj x : comp.objects) {
            if (!d.cod->connected(fr, d.obj_map[x]))
                problems.push_back("object " + d.dom->object_name(x) + " leaves the image component");
            else if (d.transport[x] >= h.order())
                problems.push_back("transport image out of range at " + d.dom->object_name(x));
        }
        bool in_range = true;
        for (Elem e : d.vertex[c])
            in_range = in_range && e < h.order();
        if (!in_range || !is_homomorphism(*comp.group, h, d.vertex[c]))
            problems.push_back("vertex group map at " + d.dom->object_name(r) + " is not a homomorphism");
    }
    return problems;
}

bool operator==(const GroupoidFunctor& a, const GroupoidFunctor& b)
{
    if (a.data_ == b.data_)
        return true;
    const auto& x = *a.data_;
    const auto& y = *b.data_;
    return x.obj_map == y.obj_map && x.transport == y.transport && x.vertex == y.vertex &&
           same_groupoid(x.dom, y.dom) && same_groupoid(x.cod, y.cod);
}

GroupoidFunctor functor_compose(const GroupoidFunctor& g, const GroupoidFunctor& f)
{
    if (!same_groupoid(f.cod(), g.dom()))
        throw std::invalid_argument("functor_compose: domain mismatch");
    const auto& dom = f.dom();
    std::vector<Obj> obj(dom->object_count());
    std::vector<Elem> transport(dom->object_count());
    std::vector<std::vector<Elem>> vertex(dom->component_count());
    for (std::uint32_t c = 0; c < dom->component_count(); ++c) {
        const auto& comp = dom->component(c);
        Obj r = comp.objects.front();
        Obj fr = f(r);
        for (Obj x : comp.objects) {
            Morphism t = g(Morphism{fr, f(x), f.transport_images()[x]});
            obj[x] = t.tgt;
            transport[x] = t.elem;
        }
        vertex[c].resize(comp.group->order());
        for (Elem e = 0; e < vertex[c].size(); ++e)
            vertex[c][e] = g(Morphism{fr, fr, f.vertex_maps()[c][e]}).elem;
    }
    return GroupoidFunctor(dom, g.cod(), std::move(obj), std::move(transport), std::move(vertex));
}

NatTransformation::NatTransformation(GroupoidFunctor source, GroupoidFunctor target, std::vector<Elem> components)
    : source_(std::move(source)), target_(std::move(target))
{
    if (!same_groupoid(source_.dom(), target_.dom()) || !same_groupoid(source_.cod(), target_.cod()))
        throw std::invalid_argument("transformation between functors with different boundaries");
    if (components.size() != source_.dom()->object_count())
        throw std::invalid_argument("transformation has the wrong number of components");
    const auto& cod = *source_.cod();
    for (Obj x = 0; x < components.size(); ++x) {
        Obj a = source_(x), b = target_(x);
        if (!cod.connected(a, b) || components[x] >= cod.group_at(a).order())
            throw std::invalid_argument("component at " + source_.dom()->object_name(x) + " is not a morphism " +
                                        cod.object_name(a) + " -> " + cod.object_name(b));
    }
    components_ = std::make_shared<const std::vector<Elem>>(std::move(components));
}

NatTransformation NatTransformation::from_morphisms(GroupoidFunctor source, GroupoidFunctor target,
                                                    const std::vector<Morphism>& components)
{
    std::vector<Elem> elems(components.size());
    for (Obj x = 0; x < components.size(); ++x) {
        if (x < source.dom()->object_count() &&
            (components[x].src != source(x) || components[x].tgt != target(x)))
            throw std::invalid_argument("component at " + source.dom()->object_name(x) + " has wrong boundary");
        elems[x] = components[x].elem;
    }
    return NatTransformation(std::move(source), std::move(target), std::move(elems));
}

NatTransformation NatTransformation::identity(const GroupoidFunctor& f)
{
    return NatTransformation(f, f, std::vector<Elem>(f.dom()->object_count(), 0));
}

bool NatTransformation::is_identity() const
{
    if (!(source_ == target_))
        return false;
    for (Elem e : *components_)
        if (e != 0)
            return false;
    return true;
}

std::vector<std::string> NatTransformation::check() const
{
    std::vector<std::string> problems;
    const auto& dom = *source_.dom();
    const auto& cod = *source_.cod();
    auto natural_at = [&](const Morphism& m) {
        Morphism lhs = cod.compose(target_(m), at(m.src));
        Morphism rhs = cod.compose(at(m.tgt), source_(m));
        if (lhs != rhs)
            problems.push_back("naturality fails at " + dom.morphism_name(m));
    };
    for (const auto& comp : dom.components()) {
        Obj r = comp.objects.front();
        for (Obj x : comp.objects)
            natural_at(dom.transport(x));
        for (Elem g : comp.group->generators())
            natural_at({r, r, g});
    }
    return problems;
}

bool operator==(const NatTransformation& a, const NatTransformation& b)
{
    if (a.components_ != b.components_ && *a.components_ != *b.components_)
        return false;
    return a.source_ == b.source_ && a.target_ == b.target_;
}

NatTransformation nat_vcompose(const NatTransformation& beta, const NatTransformation& alpha)
{
    if (!(alpha.target() == beta.source()))
        throw std::invalid_argument("nat_vcompose: boundary mismatch");
    const auto& cod = *alpha.cod();
    std::vector<Elem> c(alpha.components().size());
    for (Obj x = 0; x < c.size(); ++x)
        c[x] = cod.group_at(alpha.source()(x)).mul(beta.components()[x], alpha.components()[x]);
    return NatTransformation(alpha.source(), beta.target(), std::move(c));
}

NatTransformation nat_vcompose(std::initializer_list<NatTransformation> in_order)
{
    if (in_order.size() == 0)
        throw std::invalid_argument("nat_vcompose: empty list");
    auto it = in_order.begin();
    NatTransformation acc = *it;
    std::size_t step = 1;
    for (++it; it != in_order.end(); ++it, ++step) {
        if (!(acc.target() == it->source()))
            throw std::invalid_argument("nat_vcompose: boundary mismatch at step " + std::to_string(step));
        acc = nat_vcompose(*it, acc);
    }
    return acc;
}

NatTransformation nat_inverse(const NatTransformation& alpha)
{
    const auto& cod = *alpha.cod();
    std::vector<Elem> c(alpha.components().size());
    for (Obj x = 0; x < c.size(); ++x)
        c[x] = cod.group_at(alpha.source()(x)).inv(alpha.components()[x]);
    return NatTransformation(alpha.target(), alpha.source(), std::move(c));
}

NatTransformation whisker_left(const GroupoidFunctor& h, const NatTransformation& alpha)
{
    if (!same_groupoid(h.dom(), alpha.cod()))
        throw std::invalid_argument("whisker_left: boundary mismatch");
    std::vector<Elem> c(alpha.components().size());
    for (Obj x = 0; x < c.size(); ++x)
        c[x] = h(alpha.at(x)).elem;
    return NatTransformation(functor_compose(h, alpha.source()), functor_compose(h, alpha.target()), std::move(c));
}

NatTransformation whisker_right(const NatTransformation& alpha, const GroupoidFunctor& k)
{
    if (!same_groupoid(k.cod(), alpha.dom()))
        throw std::invalid_argument("whisker_right: boundary mismatch");
    std::vector<Elem> c(k.dom()->object_count());
    for (Obj y = 0; y < c.size(); ++y)
        c[y] = alpha.components()[k(y)];
    return NatTransformation(functor_compose(alpha.source(), k), functor_compose(alpha.target(), k), std::move(c));
}

NatTransformation nat_hcompose(const NatTransformation& beta, const NatTransformation& alpha)
{
    return nat_vcompose(whisker_right(beta, alpha.target()), whisker_left(beta.source(), alpha));
}

}
