#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fracto/groupoid/groupoid.hpp"

namespace fracto {

// A functor is stored through its values on generators: the image of every
// transport root -> x and, per component, the homomorphism on the vertex group.
class GroupoidFunctor {
public:
    GroupoidFunctor(GroupoidPtr dom, GroupoidPtr cod, std::vector<Obj> obj_map, std::vector<Elem> transport,
                    std::vector<std::vector<Elem>> vertex);

    // builds the functor by evaluating `on_morphism` on transports and vertex groups only
    static GroupoidFunctor from_generators(GroupoidPtr dom, GroupoidPtr cod,
                                           const std::function<Morphism(const Morphism&)>& on_morphism);
    static GroupoidFunctor identity(const GroupoidPtr& g);
    // sends every object to `y` and every morphism to its identity
    static GroupoidFunctor constant(const GroupoidPtr& dom, const GroupoidPtr& cod, Obj y);

    const GroupoidPtr& dom() const { return data_->dom; }
    const GroupoidPtr& cod() const { return data_->cod; }
    const std::vector<Obj>& obj_map() const { return data_->obj_map; }
    const std::vector<Elem>& transport_images() const { return data_->transport; }
    const std::vector<std::vector<Elem>>& vertex_maps() const { return data_->vertex; }

    Obj operator()(Obj x) const { return data_->obj_map[x]; }
    Morphism operator()(const Morphism& m) const;

    bool is_identity() const;
    bool shares_data(const GroupoidFunctor& o) const { return data_ == o.data_; }

    // structural problems (non-homomorphic vertex maps, images in the wrong component)
    std::vector<std::string> check() const;

    friend bool operator==(const GroupoidFunctor& a, const GroupoidFunctor& b);

private:
    struct Data {
        GroupoidPtr dom, cod;
        std::vector<Obj> obj_map;
        std::vector<Elem> transport;
        std::vector<std::vector<Elem>> vertex;
    };
    std::shared_ptr<const Data> data_;
};

// g . f
GroupoidFunctor functor_compose(const GroupoidFunctor& g, const GroupoidFunctor& f);

class NatTransformation {
public:
    NatTransformation(GroupoidFunctor source, GroupoidFunctor target, std::vector<Elem> components);
    static NatTransformation from_morphisms(GroupoidFunctor source, GroupoidFunctor target,
                                            const std::vector<Morphism>& components);
    static NatTransformation identity(const GroupoidFunctor& f);

    const GroupoidFunctor& source() const { return source_; }
    const GroupoidFunctor& target() const { return target_; }
    const GroupoidPtr& dom() const { return source_.dom(); }
    const GroupoidPtr& cod() const { return source_.cod(); }
    const std::vector<Elem>& components() const { return *components_; }
    Morphism at(Obj x) const { return {source_(x), target_(x), (*components_)[x]}; }

    bool is_identity() const;
    // naturality violations, checked on generating morphisms
    std::vector<std::string> check() const;

    friend bool operator==(const NatTransformation& a, const NatTransformation& b);

private:
    GroupoidFunctor source_, target_;
    std::shared_ptr<const std::vector<Elem>> components_;
};

// beta . alpha
NatTransformation nat_vcompose(const NatTransformation& beta, const NatTransformation& alpha);
NatTransformation nat_vcompose(std::initializer_list<NatTransformation> in_order);
NatTransformation nat_inverse(const NatTransformation& alpha);
// h alpha : h f => h g
NatTransformation whisker_left(const GroupoidFunctor& h, const NatTransformation& alpha);
// alpha k : f k => g k
NatTransformation whisker_right(const NatTransformation& alpha, const GroupoidFunctor& k);
// beta * alpha : h f => k g
NatTransformation nat_hcompose(const NatTransformation& beta, const NatTransformation& alpha);

}
