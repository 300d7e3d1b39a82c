#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "fracto/io/workspace.hpp"

namespace fracto {

using Json = nlohmann::ordered_json;

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string join(const std::vector<std::string>& lines, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i)
            out += sep;
        out += lines[i];
    }
    return out;
}

}

// ---- presentations

std::vector<std::string> validate(const Presentation& p)
{
    std::vector<std::string> out;
    std::unordered_map<std::string, std::size_t> obj, mor;
    for (std::size_t i = 0; i < p.objects.size(); ++i)
        if (!obj.emplace(p.objects[i], i).second)
            out.push_back("duplicate object " + quoted(p.objects[i]));
    std::vector<std::size_t> src(p.morphisms.size()), tgt(p.morphisms.size());
    for (std::size_t i = 0; i < p.morphisms.size(); ++i) {
        const auto& m = p.morphisms[i];
        if (!mor.emplace(m.name, i).second)
            out.push_back("duplicate morphism " + quoted(m.name));
        auto s = obj.find(m.src), t = obj.find(m.tgt);
        if (s == obj.end())
            out.push_back("morphism " + quoted(m.name) + " has unknown source " + quoted(m.src));
        if (t == obj.end())
            out.push_back("morphism " + quoted(m.name) + " has unknown target " + quoted(m.tgt));
        if (s != obj.end() && t != obj.end()) {
            src[i] = s->second;
            tgt[i] = t->second;
        }
    }
    if (!out.empty())
        return out;

    const std::size_t n = p.morphisms.size();
    std::unordered_map<std::uint64_t, std::size_t> table;
    auto key = [n](std::size_t g, std::size_t f) { return std::uint64_t(g) * n + f; };
    const auto& name = [&](std::size_t i) { return quoted(p.morphisms[i].name); };
    for (const auto& [g, f, gf] : p.compose) {
        auto ig = mor.find(g), jf = mor.find(f), kgf = mor.find(gf);
        if (ig == mor.end() || jf == mor.end() || kgf == mor.end()) {
            for (const auto* s : {&g, &f, &gf})
                if (!mor.count(*s))
                    out.push_back("composition table names unknown morphism " + quoted(*s));
            continue;
        }
        auto [a, b, c] = std::tuple{ig->second, jf->second, kgf->second};
        if (src[a] != tgt[b]) {
            out.push_back(name(a) + " and " + name(b) + " are not composable");
            continue;
        }
        if (src[c] != src[b] || tgt[c] != tgt[a])
            out.push_back(name(a) + " . " + name(b) + " = " + name(c) + " has the wrong source or target");
        auto [it, fresh] = table.emplace(key(a, b), c);
        if (!fresh && it->second != c)
            out.push_back(name(a) + " . " + name(b) + " is given two different values");
    }
    if (!out.empty())
        return out;

    std::vector<std::vector<std::size_t>> from(p.objects.size()), into(p.objects.size());
    for (std::size_t i = 0; i < n; ++i) {
        from[src[i]].push_back(i);
        into[tgt[i]].push_back(i);
    }
    for (std::size_t f = 0; f < n; ++f)
        for (auto g : from[tgt[f]])
            if (!table.count(key(g, f)))
                out.push_back("missing composite " + name(g) + " . " + name(f));
    if (!out.empty())
        return out;
    auto comp = [&](std::size_t g, std::size_t f) { return table.at(key(g, f)); };

    std::vector<std::optional<std::size_t>> id(p.objects.size());
    for (std::size_t x = 0; x < p.objects.size(); ++x) {
        for (auto e : from[x]) {
            if (tgt[e] != x)
                continue;
            bool unit = std::all_of(into[x].begin(), into[x].end(), [&](auto m) { return comp(e, m) == m; }) &&
                        std::all_of(from[x].begin(), from[x].end(), [&](auto m) { return comp(m, e) == m; });
            if (unit) {
                id[x] = e;
                break;
            }
        }
        if (!id[x])
            out.push_back("object " + quoted(p.objects[x]) + " has no identity");
    }
    for (std::size_t f = 0; f < n; ++f)
        for (auto g : from[tgt[f]])
            for (auto h : from[tgt[g]])
                if (comp(comp(h, g), f) != comp(h, comp(g, f)))
                    out.push_back("associativity fails for (" + name(h) + ", " + name(g) + ", " + name(f) + ")");
    for (std::size_t m = 0; m < n; ++m) {
        if (!id[src[m]] || !id[tgt[m]])
            continue;
        bool invertible = std::any_of(from[tgt[m]].begin(), from[tgt[m]].end(), [&](auto k) {
            return tgt[k] == src[m] && comp(k, m) == *id[src[m]] && comp(m, k) == *id[tgt[m]];
        });
        if (!invertible)
            out.push_back("morphism " + name(m) + " has no inverse");
    }
    return out;
}

GroupoidPtr normalize(const Presentation& p)
{
    auto problems = validate(p);
    if (!problems.empty())
        throw IoError(ErrorKind::invariant, "not a groupoid: " + join(problems, "; "));

    const std::size_t n = p.morphisms.size();
    std::unordered_map<std::string, Obj> obj;
    for (std::size_t i = 0; i < p.objects.size(); ++i)
        obj.emplace(p.objects[i], Obj(i));
    std::unordered_map<std::string, std::size_t> mor;
    for (std::size_t i = 0; i < n; ++i)
        mor.emplace(p.morphisms[i].name, i);
    std::vector<Obj> src(n), tgt(n);
    for (std::size_t i = 0; i < n; ++i) {
        src[i] = obj.at(p.morphisms[i].src);
        tgt[i] = obj.at(p.morphisms[i].tgt);
    }
    std::unordered_map<std::uint64_t, std::size_t> table;
    for (const auto& [g, f, gf] : p.compose)
        table.emplace(std::uint64_t(mor.at(g)) * n + mor.at(f), mor.at(gf));
    auto comp = [&](std::size_t g, std::size_t f) { return table.at(std::uint64_t(g) * n + f); };

    // components in order of their first object
    std::vector<std::uint32_t> parent(p.objects.size());
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto a = root(src[i]), b = root(tgt[i]);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<FiniteGroupoid::Component> comps;
    std::vector<std::uint32_t> comp_index(p.objects.size());
    std::unordered_map<std::uint32_t, std::uint32_t> by_root;
    for (Obj x = 0; x < p.objects.size(); ++x) {
        auto r = root(x);
        auto [it, fresh] = by_root.emplace(r, std::uint32_t(comps.size()));
        if (fresh)
            comps.push_back({{}, nullptr});
        comps[it->second].objects.push_back(x);
        comp_index[x] = it->second;
    }

    std::vector<std::size_t> identity(p.objects.size(), n), transport(p.objects.size(), n), inverse(n, n);
    for (std::size_t m = 0; m < n; ++m)
        if (src[m] == tgt[m] && identity[src[m]] == n && comp(m, m) == m)
            identity[src[m]] = m;
    std::vector<std::vector<std::size_t>> from(p.objects.size());
    for (std::size_t m = 0; m < n; ++m)
        from[src[m]].push_back(m);
    for (std::size_t m = 0; m < n; ++m)
        for (auto k : from[tgt[m]])
            if (tgt[k] == src[m] && comp(k, m) == identity[src[m]]) {
                inverse[m] = k;
                break;
            }

    std::vector<Elem> elem_of(n, 0);
    std::vector<std::unordered_map<std::size_t, Elem>> root_elems(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        Obj r = comps[c].objects.front();
        std::vector<std::size_t> endo{identity[r]};
        for (std::size_t m = 0; m < n; ++m)
            if (src[m] == r && tgt[m] == r && m != identity[r])
                endo.push_back(m);
        auto& index = root_elems[c];
        for (std::size_t e = 0; e < endo.size(); ++e)
            index.emplace(endo[e], Elem(e));
        std::vector<Elem> cayley(endo.size() * endo.size());
        for (std::size_t a = 0; a < endo.size(); ++a)
            for (std::size_t b = 0; b < endo.size(); ++b)
                cayley[a * endo.size() + b] = index.at(comp(endo[a], endo[b]));
        comps[c].group = endo.size() == 1 ? Group::trivial() : std::make_shared<const Group>(endo.size(), cayley);
        transport[r] = identity[r];
    }
    for (std::size_t m = 0; m < n; ++m)
        if (src[m] == comps[comp_index[src[m]]].objects.front() && transport[tgt[m]] == n)
            transport[tgt[m]] = m;
    for (std::size_t m = 0; m < n; ++m) {
        auto at_root = comp(inverse[transport[tgt[m]]], comp(m, transport[src[m]]));
        elem_of[m] = root_elems[comp_index[src[m]]].at(at_root);
    }

    auto bare = make_groupoid(comps, p.objects.size(), ExplicitNames{p.objects, {}});
    std::vector<std::string> names(bare->morphism_count());
    for (std::size_t m = 0; m < n; ++m)
        names[bare->morphism_index({src[m], tgt[m], elem_of[m]})] = p.morphisms[m].name;
    return make_groupoid(comps, p.objects.size(), ExplicitNames{p.objects, std::move(names)});
}

namespace {

std::vector<std::string> uniquify(std::vector<std::string> names, bool& changed)
{
    std::set<std::string> seen;
    changed = false;
    for (auto& s : names) {
        if (seen.insert(s).second)
            continue;
        changed = true;
        for (int k = 2;; ++k) {
            auto t = s + "~" + std::to_string(k);
            if (seen.insert(t).second) {
                s = t;
                break;
            }
        }
    }
    return names;
}

}

Presentation present(const FiniteGroupoid& g)
{
    Presentation p;
    std::vector<std::string> objs;
    for (Obj x = 0; x < g.object_count(); ++x)
        objs.push_back(g.object_name(x));
    bool renamed = false;
    p.objects = uniquify(std::move(objs), renamed);

    std::vector<std::string> mors;
    for (std::size_t i = 0; i < g.morphism_count(); ++i) {
        auto m = g.morphism_at(i);
        if (renamed && !g.has_explicit_morphism_names()) {
            auto s = p.objects[m.src] + "->" + p.objects[m.tgt];
            if (g.group_at(m.src).order() > 1)
                s += "#" + std::to_string(m.elem);
            mors.push_back(s);
        } else {
            mors.push_back(g.morphism_name(m));
        }
    }
    bool dummy = false;
    mors = uniquify(std::move(mors), dummy);
    for (std::size_t i = 0; i < g.morphism_count(); ++i) {
        auto m = g.morphism_at(i);
        p.morphisms.push_back({mors[i], p.objects[m.src], p.objects[m.tgt]});
    }
    for (std::size_t i = 0; i < g.morphism_count(); ++i) {
        auto f = g.morphism_at(i);
        const auto& comp = g.component(g.component_of(f.tgt));
        for (Obj z : comp.objects)
            for (Elem e = 0; e < comp.group->order(); ++e) {
                Morphism h{f.tgt, z, e};
                p.compose.push_back({mors[g.morphism_index(h)], mors[i], mors[g.morphism_index(g.compose(h, f))]});
            }
    }
    return p;
}

// ---- workspace

const char* kind_name(const Value& v)
{
    static const char* names[] = {"groupoid", "functor", "transformation", "span", "diagram"};
    return names[v.index()];
}

void Workspace::add(const std::string& name, Value v)
{
    if (index_.count(name))
        throw IoError(ErrorKind::parse, "duplicate identifier " + quoted(name));
    index_.emplace(name, entries_.size());
    entries_.emplace_back(name, std::move(v));
}

const Value* Workspace::find(std::string_view name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second].second;
}

const Value& Workspace::at(std::string_view name) const
{
    if (auto* v = find(name))
        return *v;
    throw IoError(ErrorKind::reference, "unknown identifier " + quoted(std::string(name)));
}

namespace {

template <class T>
const T& typed(const Workspace& ws, std::string_view name, const char* kind)
{
    const auto& v = ws.at(name);
    if (auto* t = std::get_if<T>(&v))
        return *t;
    throw IoError(ErrorKind::reference,
                  quoted(std::string(name)) + " is a " + kind_name(v) + ", expected a " + kind);
}

}

const GroupoidPtr& Workspace::groupoid(std::string_view name) const { return typed<GroupoidPtr>(*this, name, "groupoid"); }
const GroupoidFunctor& Workspace::functor(std::string_view name) const
{
    return typed<GroupoidFunctor>(*this, name, "functor");
}
const NatTransformation& Workspace::transformation(std::string_view name) const
{
    return typed<NatTransformation>(*this, name, "transformation");
}
const Span& Workspace::span(std::string_view name) const { return typed<Span>(*this, name, "span"); }
const TwoCellDiagram& Workspace::diagram(std::string_view name) const
{
    return typed<TwoCellDiagram>(*this, name, "diagram");
}

// ---- parsing

namespace {

// forward iterator that reports how far the parser has read
struct CountingIter {
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    const char* p = nullptr;
    const char* base = nullptr;
    std::size_t* consumed = nullptr;

    reference operator*() const { return *p; }
    CountingIter& operator++()
    {
        ++p;
        *consumed = std::size_t(p - base);
        return *this;
    }
    CountingIter operator++(int)
    {
        auto t = *this;
        ++*this;
        return t;
    }
    bool operator==(const CountingIter& o) const { return p == o.p; }
};

// records the byte offset at which each value (by JSON pointer) starts
class PositionRecorder : public nlohmann::json_sax<Json> {
public:
    explicit PositionRecorder(const std::size_t* consumed) : consumed_(consumed) {}

    std::map<std::string, std::size_t> offsets;
    std::optional<std::string> duplicate; // first repeated object key

    bool null() override { return scalar(1); }
    bool boolean(bool) override { return scalar(1); }
    bool number_integer(number_integer_t) override { return scalar(1); }
    bool number_unsigned(number_unsigned_t) override { return scalar(1); }
    bool number_float(number_float_t, const string_t& s) override { return scalar(s.size() + 1); }
    bool string(string_t& s) override { return scalar(s.size() + 2); }
    bool binary(binary_t&) override { return scalar(1); }
    bool start_object(std::size_t) override
    {
        mark(1);
        stack_.push_back({false, 0, {}});
        return true;
    }
    bool key(string_t& k) override
    {
        stack_.back().key = k;
        if (!offsets.emplace(path(), back(k.size() + 2)).second && !duplicate)
            duplicate = path();
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override
    {
        mark(1);
        stack_.push_back({true, 0, {}});
        return true;
    }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

private:
    struct Frame {
        bool array;
        std::size_t index;
        std::string key;
    };

    std::size_t back(std::size_t len) const { return *consumed_ >= len ? *consumed_ - len : 0; }
    std::string path() const
    {
        std::string s;
        for (const auto& f : stack_)
            s += "/" + (f.array ? std::to_string(f.index) : f.key);
        return s;
    }
    void mark(std::size_t len) { offsets.emplace(path(), back(len)); }
    void advance()
    {
        if (!stack_.empty() && stack_.back().array)
            ++stack_.back().index;
    }
    bool scalar(std::size_t len)
    {
        mark(len);
        advance();
        return true;
    }
    bool close()
    {
        stack_.pop_back();
        advance();
        return true;
    }

    const std::size_t* consumed_;
    std::vector<Frame> stack_;
};

struct LineCol {
    std::size_t line = 1, column = 1;
};

LineCol line_col(std::string_view text, std::size_t offset)
{
    LineCol lc;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++lc.line;
            lc.column = 1;
        } else {
            ++lc.column;
        }
    }
    return lc;
}

class Loader {
public:
    Loader(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

    Workspace run()
    {
        try {
            doc_ = Json::parse(text_.begin(), text_.end());
        } catch (const Json::parse_error& e) {
            std::string msg = e.what();
            auto at = msg.find(": ", msg.find("parse error"));
            auto lc = line_col(text_, e.byte ? e.byte - 1 : 0);
            throw IoError(ErrorKind::parse, origin_ + ":" + std::to_string(lc.line) + ":" + std::to_string(lc.column) +
                                                ": " + (at == std::string::npos ? msg : msg.substr(at + 2)));
        }
        std::size_t consumed = 0;
        CountingIter first{text_.data(), text_.data(), &consumed};
        CountingIter last{text_.data() + text_.size(), text_.data(), &consumed};
        PositionRecorder rec(&consumed);
        Json::sax_parse(first, last, &rec);
        offsets_ = std::move(rec.offsets);
        if (rec.duplicate)
            fail(ErrorKind::parse, *rec.duplicate, "duplicate key " + quoted(rec.duplicate->substr(rec.duplicate->rfind('/') + 1)));

        if (!doc_.is_object())
            fail(ErrorKind::parse, "", "a workspace document must be an object");
        if (!doc_.contains("format"))
            fail(ErrorKind::parse, "", "missing field 'format'");
        if (doc_["format"] != 1)
            fail(ErrorKind::parse, "/format", "unsupported format " + doc_["format"].dump() + ", expected 1");
        static const std::set<std::string> sections = {"format", "groupoids", "functors", "transformations", "spans",
                                                       "diagrams"};
        for (const auto& [k, v] : doc_.items())
            if (!sections.count(k))
                fail(ErrorKind::parse, "/" + k, "unknown field " + quoted(k));

        each("groupoids", [&](const std::string& id, const Json& j, const std::string& at) {
            ws_.add(id, load_groupoid(j, at));
        });
        each("functors", [&](const std::string& id, const Json& j, const std::string& at) {
            ws_.add(id, load_functor(j, at));
        });
        each("transformations", [&](const std::string& id, const Json& j, const std::string& at) {
            ws_.add(id, load_transformation(j, at));
        });
        each("spans", [&](const std::string& id, const Json& j, const std::string& at) {
            ws_.add(id, load_span(j, at));
        });
        each("diagrams", [&](const std::string& id, const Json& j, const std::string& at) {
            ws_.add(id, load_diagram(j, at));
        });
        return std::move(ws_);
    }

private:
    [[noreturn]] void fail(ErrorKind kind, std::string at, const std::string& msg) const
    {
        for (;;) {
            auto it = offsets_.find(at);
            if (it != offsets_.end()) {
                auto lc = line_col(text_, it->second);
                throw IoError(kind, origin_ + ":" + std::to_string(lc.line) + ":" + std::to_string(lc.column) + ": " +
                                        msg);
            }
            if (at.empty())
                break;
            at.erase(at.rfind('/'));
        }
        throw IoError(kind, origin_ + ": " + msg);
    }

    template <class Fn>
    void each(const char* section, Fn fn)
    {
        if (!doc_.contains(section))
            return;
        std::string at = std::string("/") + section;
        const auto& s = doc_[section];
        if (!s.is_object())
            fail(ErrorKind::parse, at, std::string("'") + section + "' must be an object");
        for (const auto& [id, j] : s.items()) {
            auto here = at + "/" + id;
            if (ws_.find(id))
                fail(ErrorKind::parse, here, "duplicate identifier " + quoted(id));
            try {
                fn(id, j, here);
            } catch (const IoError& e) {
                std::string msg = e.what();
                if (msg.rfind(origin_ + ":", 0) == 0)
                    throw;
                fail(e.kind(), here, quoted(id) + ": " + msg);
            } catch (const std::exception& e) {
                fail(ErrorKind::invariant, here, quoted(id) + ": " + e.what());
            }
        }
    }

    const Json& field(const Json& j, const std::string& at, const char* name) const
    {
        if (!j.is_object())
            fail(ErrorKind::parse, at, "expected an object");
        if (!j.contains(name))
            fail(ErrorKind::parse, at, std::string("missing field '") + name + "'");
        return j[name];
    }

    std::string str(const Json& j, const std::string& at) const
    {
        if (!j.is_string())
            fail(ErrorKind::parse, at, "expected a string");
        return j.get<std::string>();
    }

    std::string str_field(const Json& j, const std::string& at, const char* name) const
    {
        return str(field(j, at, name), at + "/" + name);
    }

    const Json& array(const Json& j, const std::string& at, std::size_t width = 0) const
    {
        if (!j.is_array())
            fail(ErrorKind::parse, at, "expected an array");
        if (width) {
            for (std::size_t i = 0; i < j.size(); ++i) {
                auto here = at + "/" + std::to_string(i);
                if (!j[i].is_array() || j[i].size() != width)
                    fail(ErrorKind::parse, here, "expected an array of " + std::to_string(width) + " strings");
                for (std::size_t k = 0; k < width; ++k)
                    str(j[i][k], here + "/" + std::to_string(k));
            }
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                str(j[i], at + "/" + std::to_string(i));
        }
        return j;
    }

    const Json& mapping(const Json& j, const std::string& at) const
    {
        if (!j.is_object())
            fail(ErrorKind::parse, at, "expected an object of name pairs");
        for (const auto& [k, v] : j.items())
            str(v, at + "/" + k);
        return j;
    }

    void check_fields(const Json& j, const std::string& at, std::initializer_list<const char*> names) const
    {
        if (!j.is_object())
            fail(ErrorKind::parse, at, "expected an object");
        for (const auto& [k, v] : j.items())
            if (std::none_of(names.begin(), names.end(), [&](const char* n) { return k == n; }))
                fail(ErrorKind::parse, at + "/" + k, "unknown field " + quoted(k));
    }

    GroupoidPtr load_groupoid(const Json& j, const std::string& at)
    {
        check_fields(j, at, {"objects", "morphisms", "compose"});
        Presentation p;
        for (const auto& o : array(field(j, at, "objects"), at + "/objects"))
            p.objects.push_back(o.get<std::string>());
        for (const auto& m : array(field(j, at, "morphisms"), at + "/morphisms", 3))
            p.morphisms.push_back({m[0].get<std::string>(), m[1].get<std::string>(), m[2].get<std::string>()});
        for (const auto& c : array(field(j, at, "compose"), at + "/compose", 3))
            p.compose.push_back({c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>()});
        return normalize(p);
    }

    const GroupoidPtr& groupoid_ref(const Json& j, const std::string& at, const char* name)
    {
        auto id = str_field(j, at, name);
        try {
            return ws_.groupoid(id);
        } catch (const IoError& e) {
            fail(ErrorKind::reference, at + "/" + name, e.what());
        }
    }

    const GroupoidFunctor& functor_ref(const Json& j, const std::string& at, const char* name)
    {
        auto id = str_field(j, at, name);
        try {
            return ws_.functor(id);
        } catch (const IoError& e) {
            fail(ErrorKind::reference, at + "/" + name, e.what());
        }
    }

    template <class T>
    const T& ref(const Json& j, const std::string& at, const char* name)
    {
        auto id = str_field(j, at, name);
        try {
            if constexpr (std::is_same_v<T, Span>)
                return ws_.span(id);
            else
                return ws_.transformation(id);
        } catch (const IoError& e) {
            fail(ErrorKind::reference, at + "/" + name, e.what());
        }
    }

    Obj object(const GroupoidPtr& g, const std::string& name, const std::string& at, const char* role) const
    {
        auto x = g->find_object(name);
        if (!x)
            fail(ErrorKind::reference, at, std::string("unknown ") + role + " object " + quoted(name));
        return *x;
    }

    Morphism morphism(const GroupoidPtr& g, const std::string& name, const std::string& at, const char* role) const
    {
        auto m = g->find_morphism(name);
        if (!m)
            fail(ErrorKind::reference, at, std::string("unknown ") + role + " morphism " + quoted(name));
        return *m;
    }

    GroupoidFunctor load_functor(const Json& j, const std::string& at)
    {
        check_fields(j, at, {"dom", "cod", "objects", "morphisms"});
        auto dom = groupoid_ref(j, at, "dom");
        auto cod = groupoid_ref(j, at, "cod");
        const auto& om = mapping(field(j, at, "objects"), at + "/objects");
        const auto& mm = mapping(field(j, at, "morphisms"), at + "/morphisms");

        std::vector<std::optional<Obj>> obj(dom->object_count());
        for (const auto& [k, v] : om.items()) {
            auto here = at + "/objects/" + k;
            obj[object(dom, k, here, "source")] = object(cod, v.get<std::string>(), here, "target");
        }
        std::vector<std::optional<Morphism>> mor(dom->morphism_count());
        for (const auto& [k, v] : mm.items()) {
            auto here = at + "/morphisms/" + k;
            auto m = morphism(dom, k, here, "source");
            mor[dom->morphism_index(m)] = morphism(cod, v.get<std::string>(), here, "target");
        }
        std::vector<std::string> problems;
        for (Obj x = 0; x < dom->object_count(); ++x)
            if (!obj[x])
                problems.push_back("object " + quoted(dom->object_name(x)) + " is not mapped");
        for (std::size_t i = 0; i < dom->morphism_count(); ++i)
            if (!mor[i])
                problems.push_back("morphism " + quoted(dom->morphism_name(dom->morphism_at(i))) + " is not mapped");
        if (!problems.empty())
            fail(ErrorKind::invariant, at, join(problems, "; "));
        auto image = [&](const Morphism& m) { return *mor[dom->morphism_index(m)]; };
        for (std::size_t i = 0; i < dom->morphism_count(); ++i) {
            auto m = dom->morphism_at(i);
            auto fm = image(m);
            if (fm.src != *obj[m.src] || fm.tgt != *obj[m.tgt])
                problems.push_back("image of " + quoted(dom->morphism_name(m)) + " has the wrong source or target");
            else if (m.src == m.tgt && m.elem == 0 && fm.elem != 0)
                problems.push_back("identity " + quoted(dom->morphism_name(m)) + " is not sent to an identity");
        }
        if (problems.empty()) {
            for (std::size_t i = 0; i < dom->morphism_count(); ++i) {
                auto f = dom->morphism_at(i);
                const auto& c = dom->component(dom->component_of(f.tgt));
                for (Obj z : c.objects)
                    for (Elem e = 0; e < c.group->order(); ++e) {
                        Morphism g{f.tgt, z, e};
                        if (!(image(dom->compose(g, f)) == cod->compose(image(g), image(f))))
                            problems.push_back("composite " + quoted(dom->morphism_name(g)) + " . " +
                                               quoted(dom->morphism_name(f)) + " is not preserved");
                    }
            }
        }
        if (!problems.empty())
            fail(ErrorKind::invariant, at, "not a functor: " + join(problems, "; "));
        return GroupoidFunctor::from_generators(dom, cod, image);
    }

    NatTransformation load_transformation(const Json& j, const std::string& at)
    {
        check_fields(j, at, {"source", "target", "components"});
        auto source = functor_ref(j, at, "source");
        auto target = functor_ref(j, at, "target");
        if (!same_groupoid(source.dom(), target.dom()) || !same_groupoid(source.cod(), target.cod()))
            fail(ErrorKind::invariant, at, "source and target functors have different domains or codomains");
        const auto& dom = source.dom();
        const auto& cod = source.cod();
        const auto& cm = mapping(field(j, at, "components"), at + "/components");
        std::vector<std::optional<Morphism>> comps(dom->object_count());
        for (const auto& [k, v] : cm.items()) {
            auto here = at + "/components/" + k;
            comps[object(dom, k, here, "domain")] = morphism(cod, v.get<std::string>(), here, "codomain");
        }
        std::vector<Morphism> list;
        std::vector<std::string> problems;
        for (Obj x = 0; x < dom->object_count(); ++x) {
            if (!comps[x]) {
                problems.push_back("no component at " + quoted(dom->object_name(x)));
                continue;
            }
            if (comps[x]->src != source(x) || comps[x]->tgt != target(x))
                problems.push_back("component at " + quoted(dom->object_name(x)) + " has the wrong source or target");
            list.push_back(*comps[x]);
        }
        if (!problems.empty())
            fail(ErrorKind::invariant, at, join(problems, "; "));
        NatTransformation t = NatTransformation::from_morphisms(source, target, list);
        auto violations = t.check();
        if (!violations.empty())
            fail(ErrorKind::invariant, at, "not natural: " + join(violations, "; "));
        return t;
    }

    Span load_span(const Json& j, const std::string& at)
    {
        check_fields(j, at, {"back", "fwd"});
        const auto& back = functor_ref(j, at, "back");
        const auto& fwd = functor_ref(j, at, "fwd");
        if (!same_groupoid(back.dom(), fwd.dom()))
            fail(ErrorKind::invariant, at, "the two legs have different domains");
        return Span(back, fwd);
    }

    TwoCellDiagram load_diagram(const Json& j, const std::string& at)
    {
        check_fields(j, at, {"src", "tgt", "u1", "u2", "left", "right"});
        const auto& src = ref<Span>(j, at, "src");
        const auto& tgt = ref<Span>(j, at, "tgt");
        const auto& u1 = functor_ref(j, at, "u1");
        const auto& u2 = functor_ref(j, at, "u2");
        const auto& left = ref<NatTransformation>(j, at, "left");
        const auto& right = ref<NatTransformation>(j, at, "right");
        std::vector<std::string> problems;
        if (!same_groupoid(src.source(), tgt.source()) || !same_groupoid(src.target(), tgt.target()))
            problems.push_back("the two spans have different endpoints");
        if (!same_groupoid(u1.dom(), u2.dom()))
            problems.push_back("u1 and u2 have different domains");
        if (!same_groupoid(u1.cod(), src.apex()) || !same_groupoid(u2.cod(), tgt.apex()))
            problems.push_back("u1 or u2 does not land in the apex of its span");
        if (!problems.empty())
            fail(ErrorKind::invariant, at, join(problems, "; "));
        if (!(left.source() == functor_compose(src.back, u1)) || !(left.target() == functor_compose(tgt.back, u2)))
            problems.push_back("left cell is not back1 u1 => back2 u2");
        if (!(right.source() == functor_compose(src.fwd, u1)) || !(right.target() == functor_compose(tgt.fwd, u2)))
            problems.push_back("right cell is not fwd1 u1 => fwd2 u2");
        TwoCellDiagram d{src, tgt, u1, u2, left, right};
        if (problems.empty())
            problems = check_diagram(d);
        if (!problems.empty())
            fail(ErrorKind::invariant, at, join(problems, "; "));
        return d;
    }

    std::string_view text_;
    std::string origin_;
    Json doc_;
    std::map<std::string, std::size_t> offsets_;
    Workspace ws_;
};

}

Workspace parse_workspace(std::string_view text, const std::string& origin)
{
    return Loader(text, origin).run();
}

Workspace load_workspace(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(ErrorKind::parse, path.string() + ": cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_workspace(text, path.string());
}

// ---- writing

struct Writer::Impl {
    struct Named {
        GroupoidPtr g;
        std::string name;
        Presentation names;
    };

    const Workspace* context = nullptr;
    std::set<std::string> used;
    std::deque<Named> groupoids; // stable references
    std::vector<std::pair<GroupoidFunctor, std::string>> functors;
    std::vector<std::pair<NatTransformation, std::string>> transformations;
    std::vector<std::pair<Span, std::string>> spans;
    std::vector<std::pair<TwoCellDiagram, std::string>> diagrams;
    Json doc = Json::object();

    std::string fresh(const std::string& hint)
    {
        if (used.insert(hint).second)
            return hint;
        for (int k = 2;; ++k) {
            auto s = hint + "~" + std::to_string(k);
            if (used.insert(s).second)
                return s;
        }
    }

    // a context name for v, if it is still free
    template <class T, class Eq>
    std::optional<std::string> from_context(const T& v, Eq eq) const
    {
        if (!context)
            return std::nullopt;
        for (const auto& [name, value] : context->entries())
            if (auto* t = std::get_if<T>(&value); t && eq(*t, v) && !used.count(name))
                return name;
        return std::nullopt;
    }

    Json& section(const char* s)
    {
        if (!doc.contains(s))
            doc[s] = Json::object();
        return doc[s];
    }

    const Named& groupoid(const GroupoidPtr& g, const std::string& hint, bool top)
    {
        if (!top) {
            for (const auto& n : groupoids)
                if (n.g == g)
                    return n;
            for (const auto& n : groupoids)
                if (same_groupoid(n.g, g))
                    return n;
        }
        auto name = top ? fresh(hint)
                        : fresh(from_context(g, [](const GroupoidPtr& a, const GroupoidPtr& b) {
                                    return same_groupoid(a, b);
                                }).value_or(hint));
        groupoids.push_back({g, name, present(*g)});
        const auto& p = groupoids.back().names;
        Json j;
        j["objects"] = p.objects;
        Json mors = Json::array(), comp = Json::array();
        for (const auto& m : p.morphisms)
            mors.push_back({m.name, m.src, m.tgt});
        for (const auto& c : p.compose)
            comp.push_back({c[0], c[1], c[2]});
        j["morphisms"] = std::move(mors);
        j["compose"] = std::move(comp);
        section("groupoids")[name] = std::move(j);
        return groupoids.back();
    }

    std::string functor(const GroupoidFunctor& f, const std::string& hint, bool top)
    {
        if (!top)
            for (const auto& [g, n] : functors)
                if (g == f)
                    return n;
        const auto& dom = groupoid(f.dom(), hint + ".dom", false);
        const auto& cod = groupoid(f.cod(), hint + ".cod", false);
        auto name = top ? fresh(hint) : fresh(from_context(f, std::equal_to<>()).value_or(hint));
        Json j;
        j["dom"] = dom.name;
        j["cod"] = cod.name;
        Json objs = Json::object(), mors = Json::object();
        for (Obj x = 0; x < f.dom()->object_count(); ++x)
            objs[dom.names.objects[x]] = cod.names.objects[f(x)];
        for (std::size_t i = 0; i < f.dom()->morphism_count(); ++i)
            mors[dom.names.morphisms[i].name] =
                cod.names.morphisms[f.cod()->morphism_index(f(f.dom()->morphism_at(i)))].name;
        j["objects"] = std::move(objs);
        j["morphisms"] = std::move(mors);
        section("functors")[name] = std::move(j);
        functors.emplace_back(f, name);
        return name;
    }

    std::string transformation(const NatTransformation& t, const std::string& hint, bool top)
    {
        if (!top)
            for (const auto& [u, n] : transformations)
                if (u == t)
                    return n;
        auto source = functor(t.source(), hint + ".source", false);
        auto target = functor(t.target(), hint + ".target", false);
        const auto& dom = groupoid(t.dom(), hint + ".dom", false);
        const auto& cod = groupoid(t.cod(), hint + ".cod", false);
        auto name = top ? fresh(hint) : fresh(from_context(t, std::equal_to<>()).value_or(hint));
        Json j;
        j["source"] = source;
        j["target"] = target;
        Json comps = Json::object();
        for (Obj x = 0; x < t.dom()->object_count(); ++x)
            comps[dom.names.objects[x]] = cod.names.morphisms[t.cod()->morphism_index(t.at(x))].name;
        j["components"] = std::move(comps);
        section("transformations")[name] = std::move(j);
        transformations.emplace_back(t, name);
        return name;
    }

    std::string span(const Span& s, const std::string& hint, bool top)
    {
        if (!top)
            for (const auto& [u, n] : spans)
                if (u == s)
                    return n;
        auto back = functor(s.back, hint + ".back", false);
        auto fwd = functor(s.fwd, hint + ".fwd", false);
        auto name = top ? fresh(hint) : fresh(from_context(s, std::equal_to<>()).value_or(hint));
        section("spans")[name] = Json{{"back", back}, {"fwd", fwd}};
        spans.emplace_back(s, name);
        return name;
    }

    std::string diagram(const TwoCellDiagram& d, const std::string& hint)
    {
        auto src = span(d.src, hint + ".src", false);
        auto tgt = span(d.tgt, hint + ".tgt", false);
        auto u1 = functor(d.u1, hint + ".u1", false);
        auto u2 = functor(d.u2, hint + ".u2", false);
        auto left = transformation(d.left, hint + ".left", false);
        auto right = transformation(d.right, hint + ".right", false);
        auto name = fresh(hint);
        section("diagrams")[name] =
            Json{{"src", src}, {"tgt", tgt}, {"u1", u1}, {"u2", u2}, {"left", left}, {"right", right}};
        diagrams.emplace_back(d, name);
        return name;
    }
};

Writer::Writer(const Workspace* context) : impl_(std::make_unique<Impl>())
{
    impl_->context = context;
}

Writer::~Writer() = default;

std::string Writer::add(const std::string& name, const Value& v)
{
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, GroupoidPtr>)
                return impl_->groupoid(x, name, true).name;
            else if constexpr (std::is_same_v<T, GroupoidFunctor>)
                return impl_->functor(x, name, true);
            else if constexpr (std::is_same_v<T, NatTransformation>)
                return impl_->transformation(x, name, true);
            else if constexpr (std::is_same_v<T, Span>)
                return impl_->span(x, name, true);
            else
                return impl_->diagram(x, name);
        },
        v);
}

namespace {

bool flat(const Json& j)
{
    return std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

// objects are spread over lines, arrays of scalars stay on one line
void pretty(std::ostream& out, const Json& j, int indent)
{
    std::string pad(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out << "{}";
            return;
        }
        out << "{\n";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first)
                out << ",\n";
            first = false;
            out << pad << Json(k).dump() << ": ";
            pretty(out, v, indent + 2);
        }
        out << "\n" << std::string(indent, ' ') << "}";
    } else if (j.is_array()) {
        if (flat(j)) {
            out << "[";
            for (std::size_t i = 0; i < j.size(); ++i)
                out << (i ? ", " : "") << j[i].dump();
            out << "]";
            return;
        }
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad;
            pretty(out, j[i], indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << std::string(indent, ' ') << "]";
    } else {
        out << j.dump();
    }
}

}

std::string Writer::str() const
{
    Json out;
    out["format"] = 1;
    for (const char* s : {"groupoids", "functors", "transformations", "spans", "diagrams"})
        if (impl_->doc.contains(s))
            out[s] = impl_->doc[s];
    std::ostringstream os;
    pretty(os, out, 0);
    os << "\n";
    return os.str();
}

std::string serialize(const Workspace& ws)
{
    Writer w(&ws);
    for (std::size_t kind = 0; kind < std::variant_size_v<Value>; ++kind)
        for (const auto& [name, v] : ws.entries())
            if (v.index() == kind)
                w.add(name, v);
    return w.str();
}

// ---- DOT

namespace {

std::string dq(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string size_label(const std::string& role, const GroupoidPtr& g)
{
    return role + "\\n" + std::to_string(g->object_count()) + " obj, " + std::to_string(g->morphism_count()) + " mor";
}

void groupoid_body(std::ostream& out, const FiniteGroupoid& g, const std::string& prefix)
{
    auto p = present(g);
    for (const auto& o : p.objects)
        out << "  " << dq(prefix + o) << " [label=" << dq(o) << "];\n";
    for (std::size_t i = 0; i < g.morphism_count(); ++i) {
        auto m = g.morphism_at(i);
        if (m.src == m.tgt && m.elem == 0)
            continue;
        out << "  " << dq(prefix + p.objects[m.src]) << " -> " << dq(prefix + p.objects[m.tgt])
            << " [label=" << dq(p.morphisms[i].name) << "];\n";
    }
}

}

std::string to_dot(const std::string& name, const Value& v)
{
    std::ostringstream out;
    out << "digraph " << dq(name) << " {\n";
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, GroupoidPtr>) {
                out << "  node [shape=circle];\n";
                groupoid_body(out, *x, "");
            } else if constexpr (std::is_same_v<T, GroupoidFunctor>) {
                out << "  subgraph cluster_dom {\n  label=\"dom\";\n";
                groupoid_body(out, *x.dom(), "dom:");
                out << "  }\n  subgraph cluster_cod {\n  label=\"cod\";\n";
                groupoid_body(out, *x.cod(), "cod:");
                out << "  }\n";
                auto pd = present(*x.dom()), pc = present(*x.cod());
                for (Obj o = 0; o < x.dom()->object_count(); ++o)
                    out << "  " << dq("dom:" + pd.objects[o]) << " -> " << dq("cod:" + pc.objects[x(o)])
                        << " [style=dashed];\n";
            } else if constexpr (std::is_same_v<T, NatTransformation>) {
                out << "  rankdir=LR;\n  node [shape=box];\n";
                out << "  dom [label=" << dq(size_label("dom", x.dom())) << "];\n";
                out << "  cod [label=" << dq(size_label("cod", x.cod())) << "];\n";
                out << "  dom -> cod [label=\"source\"];\n  dom -> cod [label=\"target\"];\n";
                out << "  cell [shape=plaintext, label=\"source => target\"];\n";
            } else if constexpr (std::is_same_v<T, Span>) {
                out << "  node [shape=box];\n";
                out << "  source [label=" << dq(size_label("source", x.source())) << "];\n";
                out << "  apex [label=" << dq(size_label("apex", x.apex())) << "];\n";
                out << "  target [label=" << dq(size_label("target", x.target())) << "];\n";
                out << "  apex -> source [label=\"back\"];\n  apex -> target [label=\"fwd\"];\n";
            } else {
                // butterfly: the two spans share their ends, the center maps into both apexes
                out << "  node [shape=box];\n";
                out << "  source [label=" << dq(size_label("source", x.src.source())) << "];\n";
                out << "  target [label=" << dq(size_label("target", x.src.target())) << "];\n";
                out << "  apex1 [label=" << dq(size_label("apex1", x.src.apex())) << "];\n";
                out << "  apex2 [label=" << dq(size_label("apex2", x.tgt.apex())) << "];\n";
                out << "  center [label=" << dq(size_label("center", x.center())) << "];\n";
                out << "  apex1 -> source [label=\"back1\"];\n  apex1 -> target [label=\"fwd1\"];\n";
                out << "  apex2 -> source [label=\"back2\"];\n  apex2 -> target [label=\"fwd2\"];\n";
                out << "  center -> apex1 [label=\"u1\"];\n  center -> apex2 [label=\"u2\"];\n";
                out << "  left [shape=plaintext, label=\"left: back1 u1 => back2 u2\"];\n";
                out << "  right [shape=plaintext, label=\"right: fwd1 u1 => fwd2 u2\"];\n";
                out << "  source -> left [style=invis];\n  target -> right [style=invis];\n";
                out << "  { rank=same; apex1; apex2; }\n";
            }
        },
        v);
    out << "}\n";
    return out.str();
}

}
