#include "fracto/groupoid/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "hash.hpp"

namespace fracto {

Group::Group(std::size_t order, std::vector<Elem> table)
    : order_(order), table_(std::move(table)), inverse_(order, 0), fingerprint_(0)
{
    if (order_ == 0 || table_.size() != order_ * order_)
        throw std::invalid_argument("group table has wrong size");
    for (Elem a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw std::invalid_argument("element 0 is not the identity");
        bool found = false;
        for (Elem b = 0; b < order_; ++b) {
            if (mul(a, b) == 0) {
                inverse_[a] = b;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("group element without inverse");
    }
    fingerprint_ = detail::mix(0x51ed, order_);
    for (Elem e : table_)
        fingerprint_ = detail::mix(fingerprint_, e);
}

std::vector<Elem> Group::generators() const
{
    std::vector<Elem> gens;
    std::vector<char> reached(order_, 0);
    reached[0] = 1;
    std::size_t count = 1;
    for (Elem cand = 1; cand < order_ && count < order_; ++cand) {
        if (reached[cand])
            continue;
        gens.push_back(cand);
        // closure of the subgroup generated so far
        std::vector<Elem> frontier;
        for (Elem e = 0; e < order_; ++e)
            if (reached[e])
                frontier.push_back(e);
        while (!frontier.empty()) {
            Elem e = frontier.back();
            frontier.pop_back();
            for (Elem s : gens) {
                Elem n = mul(e, s);
                if (!reached[n]) {
                    reached[n] = 1;
                    ++count;
                    frontier.push_back(n);
                }
            }
        }
    }
    return gens;
}

std::shared_ptr<const Group> Group::trivial()
{
    static const auto g = std::make_shared<const Group>(1, std::vector<Elem>{0});
    return g;
}

std::shared_ptr<const Group> Group::cyclic(std::size_t n)
{
    if (n == 1)
        return trivial();
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = static_cast<Elem>((a + b) % n);
    return std::make_shared<const Group>(n, std::move(t));
}

std::shared_ptr<const Group> Group::symmetric3()
{
    // permutations of {0,1,2} in lexicographic order; index 0 is the identity
    static const auto g = [] {
        std::vector<std::array<int, 3>> perms;
        std::array<int, 3> p{0, 1, 2};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        auto index = [&](const std::array<int, 3>& q) {
            for (std::size_t i = 0; i < perms.size(); ++i)
                if (perms[i] == q)
                    return static_cast<Elem>(i);
            return Elem{0};
        };
        std::vector<Elem> t(36);
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) {
                std::array<int, 3> c{};
                for (int i = 0; i < 3; ++i)
                    c[i] = perms[a][perms[b][i]];
                t[a * 6 + b] = index(c);
            }
        return std::make_shared<const Group>(6, std::move(t));
    }();
    return g;
}

bool operator==(const Group& a, const Group& b)
{
    return a.order_ == b.order_ && a.fingerprint_ == b.fingerprint_ && a.table_ == b.table_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b)
{
    return a == b || *a == *b;
}

bool is_homomorphism(const Group& g, const Group& h, const std::vector<Elem>& map)
{
    if (map.size() != g.order())
        return false;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            if (map[g.mul(a, b)] != h.mul(map[a], map[b]))
                return false;
    return true;
}

std::vector<std::vector<Elem>> all_homomorphisms(const Group& g, const Group& h)
{
    std::vector<std::vector<Elem>> out;
    const auto gens = g.generators();
    std::vector<Elem> images(gens.size(), 0);
    while (true) {
        std::vector<Elem> map(g.order(), 0);
        std::vector<char> known(g.order(), 0);
        known[0] = 1;
        std::vector<Elem> stack{0};
        bool ok = true;
        while (ok && !stack.empty()) {
            Elem x = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Elem y = g.mul(x, gens[i]);
                Elem img = h.mul(map[x], images[i]);
                if (!known[y]) {
                    known[y] = 1;
                    map[y] = img;
                    stack.push_back(y);
                } else if (map[y] != img) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && is_homomorphism(g, h, map))
            out.push_back(std::move(map));
        std::size_t i = 0;
        while (i < images.size() && ++images[i] == h.order())
            images[i++] = 0;
        if (i == images.size())
            break;
    }
    return out;
}

}
