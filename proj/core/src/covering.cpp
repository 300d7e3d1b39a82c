#include "fracto/groupoid/covering.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "fracto/groupoid/equivalence.hpp"

namespace fracto {

const char* to_string(Membership m)
{
    switch (m) {
    case Membership::no:
        return "false";
    case Membership::yes:
        return "true";
    case Membership::unknown:
        return "unknown";
    }
    return "unknown";
}

namespace {

// the unique morphism x -> y of dom(w) sent to `target`, if any
std::optional<Morphism> preimage(const GroupoidFunctor& w, Obj x, Obj y, const Morphism& target)
{
    const auto& C = *w.dom();
    if (!C.connected(x, y))
        return std::nullopt;
    const Group& H = w.cod()->group_at(target.src);
    const auto& t = w.transport_images();
    Elem e = H.mul(H.mul(H.inv(t[y]), target.elem), t[x]);
    const auto& v = w.vertex_maps()[C.component_of(x)];
    std::optional<Morphism> found;
    for (Elem g = 0; g < v.size(); ++g)
        if (v[g] == e) {
            if (found)
                return std::nullopt;
            found = Morphism{x, y, g};
        }
    return found;
}

GroupoidFunctor inclusion(const GroupoidPtr& sub, const GroupoidPtr& base, const std::vector<Obj>& objects)
{
    return GroupoidFunctor::from_generators(sub, base, [&](const Morphism& m) {
        return Morphism{objects[m.src], objects[m.tgt], m.elem};
    });
}

}

WeaklyInitialWitness weakly_initial_witness(const GroupoidFunctor& v)
{
    auto report = essential_equivalence_report(v);
    if (!report.essentially_surjective)
        throw std::invalid_argument("weakly_initial_witness: functor is not essentially surjective");
    if (!report.full || !report.faithful)
        throw std::invalid_argument("weakly_initial_witness: functor is not fully faithful");
    const auto& Y = v.cod();
    std::vector<std::int64_t> first(Y->object_count(), -1);
    for (Obj x = 0; x < v.dom()->object_count(); ++x)
        if (first[v(x)] < 0)
            first[v(x)] = x;
    std::vector<Obj> image;
    for (Obj y = 0; y < Y->object_count(); ++y)
        if (first[y] >= 0)
            image.push_back(y);
    auto S = full_subgroupoid(Y, image);
    auto incl = inclusion(S, Y, image);
    auto u = GroupoidFunctor::from_generators(S, v.dom(), [&](const Morphism& m) {
        Obj a = static_cast<Obj>(first[image[m.src]]);
        Obj b = static_cast<Obj>(first[image[m.tgt]]);
        auto pre = preimage(v, a, b, {image[m.src], image[m.tgt], m.elem});
        if (!pre)
            throw std::logic_error("weakly_initial_witness: missing preimage");
        return *pre;
    });
    auto vu = functor_compose(v, u);
    if (!(vu == incl))
        throw std::logic_error("weakly_initial_witness: composite is not the inclusion");
    return {u, NatTransformation::identity(vu), incl};
}

GroupoidFunctor essential_covering(const GroupoidPtr& base, const std::vector<std::vector<Obj>>& pieces)
{
    std::vector<std::vector<Obj>> sets;
    for (const auto& p : pieces) {
        std::vector<Obj> s = p;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            throw std::invalid_argument("essential_covering: empty piece");
        for (Obj x : s)
            if (x >= base->object_count())
                throw std::invalid_argument("essential_covering: object outside the base");
        for (const auto& q : sets)
            if (q == s)
                throw std::invalid_argument("essential_covering: repeated piece");
        sets.push_back(std::move(s));
    }
    std::vector<char> met(base->component_count(), 0);
    std::vector<Obj> objects;
    std::vector<std::uint32_t> tags;
    for (std::uint32_t i = 0; i < sets.size(); ++i)
        for (Obj x : sets[i]) {
            met[base->component_of(x)] = 1;
            objects.push_back(x);
            tags.push_back(i + 1);
        }
    if (sets.size() == 1)
        tags.clear();
    for (char m : met)
        if (!m)
            throw std::invalid_argument("essential_covering: an orbit is not met");
    auto sub = full_subgroupoid(base, objects, tags);
    return inclusion(sub, base, objects);
}

namespace {

// Distinct non-empty subsets of {0..m-1} with prescribed degrees.
class DegreeSearch {
public:
    DegreeSearch(std::vector<std::size_t> degrees, std::size_t max_nodes)
        : r_(std::move(degrees)), max_nodes_(max_nodes)
    {
    }

    Membership run()
    {
        const std::size_t m = r_.size();
        if (m == 0)
            return Membership::yes;
        bool simple = std::all_of(r_.begin(), r_.end(), [](std::size_t d) { return d == 1; });
        if (simple) {
            std::uint32_t all = (m >= 32) ? 0xffffffffu : ((1u << m) - 1);
            chosen_.push_back(all);
            return Membership::yes;
        }
        if (m > 12)
            return Membership::unknown;
        for (std::size_t d : r_)
            if (d > (std::size_t{1} << (m - 1)))
                return Membership::no;
        full_ = (1u << m) - 1;
        bool ok = dfs(full_);
        if (aborted_)
            return Membership::unknown;
        return ok ? Membership::yes : Membership::no;
    }

    const std::vector<std::uint32_t>& chosen() const { return chosen_; }

private:
    // masks in [1, top] containing bit y
    static std::size_t with_bit(std::uint32_t top, std::size_t y)
    {
        std::uint64_t n = static_cast<std::uint64_t>(top) + 1;
        std::uint64_t block = std::uint64_t{1} << (y + 1);
        std::uint64_t half = std::uint64_t{1} << y;
        std::uint64_t rem = n % block;
        return static_cast<std::size_t>((n / block) * half + (rem > half ? rem - half : 0));
    }

    bool dfs(std::uint32_t top)
    {
        if (++nodes_ > max_nodes_) {
            aborted_ = true;
            return false;
        }
        bool done = true;
        for (std::size_t y = 0; y < r_.size(); ++y) {
            if (r_[y] == 0)
                continue;
            done = false;
            if (top == 0 || with_bit(top, y) < r_[y])
                return false;
        }
        if (done)
            return true;
        std::uint32_t mask = top;
        bool fits = true;
        for (std::size_t y = 0; y < r_.size(); ++y)
            if ((mask >> y & 1u) && r_[y] == 0)
                fits = false;
        if (fits) {
            for (std::size_t y = 0; y < r_.size(); ++y)
                if (mask >> y & 1u)
                    --r_[y];
            chosen_.push_back(mask);
            if (dfs(mask - 1))
                return true;
            chosen_.pop_back();
            for (std::size_t y = 0; y < r_.size(); ++y)
                if (mask >> y & 1u)
                    ++r_[y];
            if (aborted_)
                return false;
        }
        return dfs(mask - 1);
    }

    std::vector<std::size_t> r_;
    std::size_t max_nodes_;
    std::size_t nodes_ = 0;
    bool aborted_ = false;
    std::uint32_t full_ = 0;
    std::vector<std::uint32_t> chosen_;
};

// C(n, k), saturating at 2^40
std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    constexpr unsigned __int128 cap = static_cast<unsigned __int128>(1) << 40;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return static_cast<std::uint64_t>(cap);
    }
    return static_cast<std::uint64_t>(r);
}

// Can the orbit counts be produced by distinct subsets of a groupoid with these orbit sizes?
Membership counts_realizable(const std::vector<std::uint64_t>& sizes, const std::vector<std::uint64_t>& counts,
                             const SearchLimits& limits)
{
    const std::size_t r = sizes.size();
    bool fits_once = true;
    for (std::size_t j = 0; j < r; ++j) {
        if (counts[j] == 0)
            return Membership::no;
        fits_once = fits_once && counts[j] <= sizes[j];
    }
    if (fits_once)
        return Membership::yes;
    std::uint64_t states = 1;
    for (std::size_t j = 0; j < r; ++j) {
        if (sizes[j] > 62)
            return Membership::unknown;
        states *= counts[j] + 1;
        if (states > limits.max_states)
            return Membership::unknown;
    }
    std::vector<std::uint64_t> radix(r, 1);
    for (std::size_t j = 1; j < r; ++j)
        radix[j] = radix[j - 1] * (counts[j - 1] + 1);
    std::vector<char> reach(states, 0);
    reach[0] = 1;
    std::vector<std::uint64_t> profile(r, 0);
    std::uint64_t work = 0;
    while (true) {
        std::size_t j = 0;
        while (j < r && ++profile[j] > std::min(sizes[j], counts[j]))
            profile[j++] = 0;
        if (j == r)
            break;
        std::uint64_t cap = 1;
        std::uint64_t shift = 0;
        for (std::size_t i = 0; i < r; ++i) {
            std::uint64_t b = binomial(sizes[i], profile[i]);
            cap = (cap > (1u << 20) / std::max<std::uint64_t>(b, 1)) ? (1u << 20) : cap * b;
            shift += profile[i] * radix[i];
        }
        // bounded knapsack step: track how many copies of this profile each state used
        std::vector<std::uint32_t> used(states, 0);
        std::vector<char> next = reach;
        for (std::uint64_t s = 0; s < states; ++s) {
            if (++work > limits.max_states * 64)
                return Membership::unknown;
            if (!next[s])
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < r; ++i)
                ok = ok && (s / radix[i]) % (counts[i] + 1) + profile[i] <= counts[i];
            if (!ok || used[s] >= cap)
                continue;
            std::uint64_t t = s + shift;
            if (!next[t]) {
                next[t] = 1;
                used[t] = used[s] + 1;
            }
        }
        reach = std::move(next);
    }
    return reach[states - 1] ? Membership::yes : Membership::no;
}

struct OrbitCounts {
    std::vector<std::uint64_t> sizes, counts;
};

OrbitCounts orbit_counts(const GroupoidFunctor& f)
{
    const auto& Y = *f.cod();
    OrbitCounts oc;
    oc.sizes.assign(Y.component_count(), 0);
    oc.counts.assign(Y.component_count(), 0);
    for (std::uint32_t c = 0; c < Y.component_count(); ++c)
        oc.sizes[c] = Y.component(c).objects.size();
    for (Obj x = 0; x < f.dom()->object_count(); ++x)
        ++oc.counts[Y.component_of(f(x))];
    return oc;
}

}

std::optional<std::vector<std::vector<Obj>>> literal_pieces(const GroupoidFunctor& f, const SearchLimits& limits)
{
    if (!is_essential_equivalence(f))
        return std::nullopt;
    const auto& Y = *f.cod();
    std::vector<std::size_t> fibre(Y.object_count(), 0);
    for (Obj x = 0; x < f.dom()->object_count(); ++x)
        ++fibre[f(x)];
    std::vector<Obj> support;
    std::vector<std::size_t> degrees;
    for (Obj y = 0; y < Y.object_count(); ++y)
        if (fibre[y] > 0) {
            support.push_back(y);
            degrees.push_back(fibre[y]);
        }
    if (std::all_of(degrees.begin(), degrees.end(), [](std::size_t d) { return d == 1; }))
        return std::vector<std::vector<Obj>>{support};
    DegreeSearch search(degrees, limits.max_nodes);
    if (search.run() != Membership::yes)
        return std::nullopt;
    std::vector<std::vector<Obj>> pieces;
    for (std::uint32_t mask : search.chosen()) {
        std::vector<Obj> piece;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask >> i & 1u)
                piece.push_back(support[i]);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

Membership is_literal_covering(const GroupoidFunctor& f, const SearchLimits& limits)
{
    if (!is_essential_equivalence(f))
        return Membership::no;
    const auto& Y = *f.cod();
    std::vector<std::size_t> fibre(Y.object_count(), 0);
    for (Obj x = 0; x < f.dom()->object_count(); ++x)
        ++fibre[f(x)];
    std::vector<std::size_t> degrees;
    for (auto d : fibre)
        if (d > 0)
            degrees.push_back(d);
    return DegreeSearch(degrees, limits.max_nodes).run();
}

Membership is_essential_covering(const GroupoidFunctor& f, const SearchLimits& limits)
{
    if (!is_essential_equivalence(f))
        return Membership::no;
    auto oc = orbit_counts(f);
    return counts_realizable(oc.sizes, oc.counts, limits);
}

Membership covering_closure_member(const GroupoidFunctor& f, std::size_t depth, const SearchLimits& limits)
{
    if (depth == 0)
        return f.is_identity() ? Membership::yes : Membership::no;
    if (!is_essential_equivalence(f))
        return Membership::no;
    auto oc = orbit_counts(f);
    std::vector<std::uint64_t> sizes = oc.sizes;
    bool unknown = false;
    for (std::size_t level = 1; level <= depth; ++level) {
        auto m = counts_realizable(sizes, oc.counts, limits);
        if (m == Membership::yes)
            return Membership::yes;
        if (m == Membership::unknown)
            unknown = true;
        // the largest orbit sizes reachable by one more covering: every subset used once
        std::uint64_t total = 0;
        for (auto s : sizes)
            total += s;
        if (total == 0 || total > 40)
            return Membership::unknown;
        for (auto& s : sizes)
            s = s << (total - 1);
    }
    return unknown ? Membership::unknown : Membership::no;
}

}
