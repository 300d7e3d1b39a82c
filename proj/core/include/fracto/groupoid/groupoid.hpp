#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "fracto/groupoid/group.hpp"

namespace fracto {

using Obj = std::uint32_t;

// A morphism src -> tgt. Inside a connected component with root r and chosen
// transports t_x : r -> x, the triple (x, y, g) stands for t_y . g . t_x^-1.
struct Morphism {
    Obj src = 0;
    Obj tgt = 0;
    Elem elem = 0;

    friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

struct ExplicitNames {
    std::vector<std::string> objects;
    std::vector<std::string> morphisms; // indexed by morphism_index; may be empty
};

// objects of an iso-comma apex: (a, b, k) with k : f(a) -> g(b) in `base`
struct TripleNames {
    GroupoidPtr left, right, base;
    std::vector<std::array<std::uint32_t, 3>> triples;
};

// objects selected from `base`, tagged by piece number (0 = untagged)
struct TaggedNames {
    GroupoidPtr base;
    std::vector<Obj> objects;
    std::vector<std::uint32_t> tags;
};

using ObjectNaming = std::variant<ExplicitNames, TripleNames, TaggedNames>;

class FiniteGroupoid {
public:
    struct Component {
        std::vector<Obj> objects; // ascending; objects.front() is the root
        GroupPtr group;
    };

    FiniteGroupoid(std::vector<Component> components, std::size_t object_count, ObjectNaming naming);

    std::size_t object_count() const { return comp_of_.size(); }
    std::size_t component_count() const { return components_.size(); }
    const std::vector<Component>& components() const { return components_; }
    const Component& component(std::uint32_t c) const { return components_[c]; }
    std::uint32_t component_of(Obj x) const { return comp_of_[x]; }
    std::uint32_t position(Obj x) const { return pos_[x]; }
    Obj root_of(Obj x) const { return components_[comp_of_[x]].objects.front(); }
    const Group& group_at(Obj x) const { return *components_[comp_of_[x]].group; }
    const GroupPtr& group_ptr_at(Obj x) const { return components_[comp_of_[x]].group; }
    bool connected(Obj x, Obj y) const { return comp_of_[x] == comp_of_[y]; }
    std::size_t hom_size(Obj x, Obj y) const { return connected(x, y) ? group_at(x).order() : 0; }

    bool contains(const Morphism& m) const;
    Morphism identity(Obj x) const { return {x, x, 0}; }
    Morphism compose(const Morphism& g, const Morphism& f) const;
    Morphism inverse(const Morphism& m) const;
    // the transport root -> x
    Morphism transport(Obj x) const { return {root_of(x), x, 0}; }

    std::size_t morphism_count() const { return morphism_count_; }
    std::size_t morphism_index(const Morphism& m) const;
    Morphism morphism_at(std::size_t i) const;
    std::vector<Morphism> hom(Obj x, Obj y) const;

    std::string object_name(Obj x) const;
    std::string morphism_name(const Morphism& m) const;
    std::optional<Obj> find_object(std::string_view name) const;
    std::optional<Morphism> find_morphism(std::string_view name) const;
    bool has_explicit_morphism_names() const;

    const ObjectNaming& naming() const { return naming_; }
    std::uint64_t structure_fingerprint() const { return fingerprint_; }

private:
    void build_name_index() const;

    std::vector<Component> components_;
    std::vector<std::uint32_t> comp_of_;
    std::vector<std::uint32_t> pos_;
    std::vector<std::size_t> offset_;
    std::size_t morphism_count_ = 0;
    ObjectNaming naming_;
    std::uint64_t fingerprint_ = 0;

    mutable std::once_flag index_once_;
    mutable std::unordered_map<std::string, Obj> object_index_;
    mutable std::unordered_map<std::string, std::size_t> morphism_index_;
};

bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

GroupoidPtr make_groupoid(std::vector<FiniteGroupoid::Component> components, std::size_t object_count,
                          ObjectNaming naming);

// one component per entry: (object names, group); objects numbered consecutively
GroupoidPtr make_groupoid(const std::vector<std::pair<std::vector<std::string>, GroupPtr>>& components);

GroupoidPtr empty_groupoid();

// The full subgroupoid on a list of objects of `base` (repetitions allowed).
// Morphism (j -> k, g) corresponds to (objects[j] -> objects[k], g) in base.
// Returns base itself when the list is 0..n-1 without tags.
GroupoidPtr full_subgroupoid(const GroupoidPtr& base, const std::vector<Obj>& objects,
                             const std::vector<std::uint32_t>& tags = {});

}
