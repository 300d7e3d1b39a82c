#include "fracto/groupoid/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "hash.hpp"

namespace fracto {

FiniteGroupoid::FiniteGroupoid(std::vector<Component> components, std::size_t object_count, ObjectNaming naming)
    : components_(std::move(components)),
      comp_of_(object_count, UINT32_MAX),
      pos_(object_count, 0),
      naming_(std::move(naming))
{
    for (auto& c : components_) {
        if (c.objects.empty() || !c.group)
            throw std::invalid_argument("empty component");
        std::sort(c.objects.begin(), c.objects.end());
    }
    std::sort(components_.begin(), components_.end(),
              [](const Component& a, const Component& b) { return a.objects.front() < b.objects.front(); });
    fingerprint_ = detail::mix(0x6770, object_count);
    std::size_t offset = 0;
    for (std::uint32_t c = 0; c < components_.size(); ++c) {
        const auto& comp = components_[c];
        for (std::uint32_t i = 0; i < comp.objects.size(); ++i) {
            Obj x = comp.objects[i];
            if (x >= object_count || comp_of_[x] != UINT32_MAX)
                throw std::invalid_argument("components do not partition the objects");
            comp_of_[x] = c;
            pos_[x] = i;
            fingerprint_ = detail::mix(fingerprint_, x);
        }
        fingerprint_ = detail::mix(fingerprint_, comp.group->fingerprint());
        offset_.push_back(offset);
        offset += comp.objects.size() * comp.objects.size() * comp.group->order();
    }
    morphism_count_ = offset;
    for (auto c : comp_of_)
        if (c == UINT32_MAX)
            throw std::invalid_argument("object outside every component");
    if (auto* e = std::get_if<ExplicitNames>(&naming_)) {
        if (e->objects.size() != object_count)
            throw std::invalid_argument("object name count mismatch");
        if (!e->morphisms.empty() && e->morphisms.size() != morphism_count_)
            throw std::invalid_argument("morphism name count mismatch");
    }
}

bool FiniteGroupoid::contains(const Morphism& m) const
{
    return m.src < object_count() && m.tgt < object_count() && connected(m.src, m.tgt) &&
           m.elem < group_at(m.src).order();
}

Morphism FiniteGroupoid::compose(const Morphism& g, const Morphism& f) const
{
    if (f.tgt != g.src)
        throw std::invalid_argument("morphisms are not composable");
    return {f.src, g.tgt, group_at(f.src).mul(g.elem, f.elem)};
}

Morphism FiniteGroupoid::inverse(const Morphism& m) const
{
    return {m.tgt, m.src, group_at(m.src).inv(m.elem)};
}

std::size_t FiniteGroupoid::morphism_index(const Morphism& m) const
{
    std::uint32_t c = comp_of_[m.src];
    const auto& comp = components_[c];
    std::size_t n = comp.objects.size();
    return offset_[c] + (pos_[m.src] * n + pos_[m.tgt]) * comp.group->order() + m.elem;
}

Morphism FiniteGroupoid::morphism_at(std::size_t i) const
{
    auto it = std::upper_bound(offset_.begin(), offset_.end(), i);
    std::uint32_t c = static_cast<std::uint32_t>(it - offset_.begin() - 1);
    const auto& comp = components_[c];
    std::size_t k = comp.group->order();
    std::size_t n = comp.objects.size();
    std::size_t r = i - offset_[c];
    Elem g = static_cast<Elem>(r % k);
    r /= k;
    return {comp.objects[r / n], comp.objects[r % n], g};
}

std::vector<Morphism> FiniteGroupoid::hom(Obj x, Obj y) const
{
    std::vector<Morphism> out;
    for (Elem g = 0; g < hom_size(x, y); ++g)
        out.push_back({x, y, g});
    return out;
}

std::string FiniteGroupoid::object_name(Obj x) const
{
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ExplicitNames>) {
                return n.objects[x];
            } else if constexpr (std::is_same_v<T, TripleNames>) {
                const auto& t = n.triples[x];
                std::string k = "#" + std::to_string(t[2]);
                return "(" + n.left->object_name(t[0]) + "," + n.right->object_name(t[1]) + "," + k + ")";
            } else {
                std::string s = n.base->object_name(n.objects[x]);
                if (!n.tags.empty() && n.tags[x] != 0)
                    s += "@" + std::to_string(n.tags[x]);
                return s;
            }
        },
        naming_);
}

bool FiniteGroupoid::has_explicit_morphism_names() const
{
    auto* e = std::get_if<ExplicitNames>(&naming_);
    return e && !e->morphisms.empty();
}

std::string FiniteGroupoid::morphism_name(const Morphism& m) const
{
    if (auto* e = std::get_if<ExplicitNames>(&naming_); e && !e->morphisms.empty())
        return e->morphisms[morphism_index(m)];
    if (auto* t = std::get_if<TaggedNames>(&naming_); t && t->tags.empty() && t->base->has_explicit_morphism_names())
        return t->base->morphism_name({t->objects[m.src], t->objects[m.tgt], m.elem});
    std::string s = object_name(m.src) + "->" + object_name(m.tgt);
    if (group_at(m.src).order() > 1)
        s += "#" + std::to_string(m.elem);
    return s;
}

void FiniteGroupoid::build_name_index() const
{
    std::call_once(index_once_, [this] {
        for (Obj x = 0; x < object_count(); ++x)
            object_index_.emplace(object_name(x), x);
        for (std::size_t i = 0; i < morphism_count_; ++i)
            morphism_index_.emplace(morphism_name(morphism_at(i)), i);
    });
}

std::optional<Obj> FiniteGroupoid::find_object(std::string_view name) const
{
    build_name_index();
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<Morphism> FiniteGroupoid::find_morphism(std::string_view name) const
{
    build_name_index();
    auto it = morphism_index_.find(std::string(name));
    if (it == morphism_index_.end())
        return std::nullopt;
    return morphism_at(it->second);
}

namespace {

bool same_names(const FiniteGroupoid& a, const FiniteGroupoid& b)
{
    const auto& na = a.naming();
    const auto& nb = b.naming();
    if (na.index() == nb.index()) {
        if (auto* x = std::get_if<ExplicitNames>(&na)) {
            const auto& y = std::get<ExplicitNames>(nb);
            if (x->objects != y.objects)
                return false;
            if (x->morphisms == y.morphisms)
                return true;
            // generated and spelled-out morphism names can still agree
            for (std::size_t i = 0; i < a.morphism_count(); ++i)
                if (a.morphism_name(a.morphism_at(i)) != b.morphism_name(b.morphism_at(i)))
                    return false;
            return true;
        }
        if (auto* x = std::get_if<TripleNames>(&na)) {
            const auto& y = std::get<TripleNames>(nb);
            return x->triples == y.triples && same_groupoid(x->left, y.left) && same_groupoid(x->right, y.right) &&
                   same_groupoid(x->base, y.base);
        }
        const auto& x = std::get<TaggedNames>(na);
        const auto& y = std::get<TaggedNames>(nb);
        return x.objects == y.objects && x.tags == y.tags && same_groupoid(x.base, y.base);
    }
    for (Obj o = 0; o < a.object_count(); ++o)
        if (a.object_name(o) != b.object_name(o))
            return false;
    return true;
}

}

bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b)
{
    if (&a == &b)
        return true;
    if (a.structure_fingerprint() != b.structure_fingerprint() || a.object_count() != b.object_count() ||
        a.component_count() != b.component_count())
        return false;
    for (std::uint32_t c = 0; c < a.component_count(); ++c) {
        const auto& ca = a.component(c);
        const auto& cb = b.component(c);
        if (ca.objects != cb.objects || !same_group(ca.group, cb.group))
            return false;
    }
    return same_names(a, b);
}

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return same_groupoid(*a, *b);
}

GroupoidPtr make_groupoid(std::vector<FiniteGroupoid::Component> components, std::size_t object_count,
                          ObjectNaming naming)
{
    return std::make_shared<const FiniteGroupoid>(std::move(components), object_count, std::move(naming));
}

GroupoidPtr make_groupoid(const std::vector<std::pair<std::vector<std::string>, GroupPtr>>& components)
{
    std::vector<FiniteGroupoid::Component> comps;
    ExplicitNames names;
    Obj next = 0;
    for (const auto& [objs, group] : components) {
        FiniteGroupoid::Component c;
        c.group = group;
        for (const auto& n : objs) {
            c.objects.push_back(next++);
            names.objects.push_back(n);
        }
        comps.push_back(std::move(c));
    }
    return make_groupoid(std::move(comps), next, std::move(names));
}

GroupoidPtr empty_groupoid()
{
    static const GroupoidPtr g = make_groupoid({}, 0, ExplicitNames{});
    return g;
}

GroupoidPtr full_subgroupoid(const GroupoidPtr& base, const std::vector<Obj>& objects,
                             const std::vector<std::uint32_t>& tags)
{
    std::vector<std::uint32_t> marks = tags;
    if (marks.empty()) {
        // repeated objects get distinguishing tags so that names stay unique
        std::unordered_map<Obj, std::uint32_t> seen;
        bool repeated = false;
        for (Obj o : objects) {
            marks.push_back(seen[o]++);
            repeated = repeated || marks.back() != 0;
        }
        if (!repeated)
            marks.clear();
    }
    bool all_untagged = std::all_of(marks.begin(), marks.end(), [](std::uint32_t t) { return t == 0; });
    if (all_untagged && objects.size() == base->object_count()) {
        bool identity = true;
        for (Obj i = 0; i < objects.size(); ++i)
            identity = identity && objects[i] == i;
        if (identity)
            return base;
    }
    std::vector<std::int64_t> slot(base->component_count(), -1);
    std::vector<FiniteGroupoid::Component> comps;
    for (Obj j = 0; j < objects.size(); ++j) {
        if (objects[j] >= base->object_count())
            throw std::invalid_argument("object outside the base groupoid");
        std::uint32_t c = base->component_of(objects[j]);
        if (slot[c] < 0) {
            slot[c] = static_cast<std::int64_t>(comps.size());
            comps.push_back({{}, base->component(c).group});
        }
        comps[slot[c]].objects.push_back(j);
    }
    TaggedNames names{base, objects, all_untagged ? std::vector<std::uint32_t>{} : marks};
    return make_groupoid(std::move(comps), objects.size(), std::move(names));
}

}
