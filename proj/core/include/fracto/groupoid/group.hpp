#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fracto {

using Elem = std::uint32_t;

// Finite group given by its Cayley table. Element 0 is the identity.
class Group {
public:
    Group(std::size_t order, std::vector<Elem> table);

    std::size_t order() const { return order_; }
    Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    const std::vector<Elem>& table() const { return table_; }

    // a small generating set, chosen greedily in element order
    std::vector<Elem> generators() const;

    std::uint64_t fingerprint() const { return fingerprint_; }

    static std::shared_ptr<const Group> trivial();
    static std::shared_ptr<const Group> cyclic(std::size_t n);
    static std::shared_ptr<const Group> symmetric3();

    friend bool operator==(const Group& a, const Group& b);

private:
    std::size_t order_;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::uint64_t fingerprint_;
};

using GroupPtr = std::shared_ptr<const Group>;

bool same_group(const GroupPtr& a, const GroupPtr& b);

// Every homomorphism g -> h, each as the image vector indexed by element of g.
std::vector<std::vector<Elem>> all_homomorphisms(const Group& g, const Group& h);

bool is_homomorphism(const Group& g, const Group& h, const std::vector<Elem>& map);

}
