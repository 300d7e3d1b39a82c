#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fracto/fractions/two_cell.hpp"

namespace fracto {

enum class ErrorKind { parse = 2, reference = 3, invariant = 4 };

class IoError : public std::runtime_error {
public:
    IoError(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// A groupoid as written in a file: every morphism (identities included) and
// the full composition table as triples [g, f, g.f].
struct Presentation {
    struct Arrow {
        std::string name, src, tgt;
    };
    std::vector<std::string> objects;
    std::vector<Arrow> morphisms;
    std::vector<std::array<std::string, 3>> compose;
};

// every violated groupoid axiom; empty means valid
std::vector<std::string> validate(const Presentation& p);
// throws IoError(invariant) listing the violations when p is not a groupoid
GroupoidPtr normalize(const Presentation& p);
// object and morphism names are made unique when the groupoid repeats them
Presentation present(const FiniteGroupoid& g);

using Value = std::variant<GroupoidPtr, GroupoidFunctor, NatTransformation, Span, TwoCellDiagram>;

const char* kind_name(const Value& v);

class Workspace {
public:
    void add(const std::string& name, Value v);

    const Value* find(std::string_view name) const;
    const Value& at(std::string_view name) const; // IoError(reference) when missing

    const GroupoidPtr& groupoid(std::string_view name) const;
    const GroupoidFunctor& functor(std::string_view name) const;
    const NatTransformation& transformation(std::string_view name) const;
    const Span& span(std::string_view name) const;
    const TwoCellDiagram& diagram(std::string_view name) const;

    const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, Value>> entries_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

Workspace parse_workspace(std::string_view text, const std::string& origin = "<input>");
Workspace load_workspace(const std::filesystem::path& path);

// Builds a document. Values that depend on unnamed groupoids, functors, ...
// pull them in under names taken from the context workspace when it holds an
// equal value, or derived from the dependent's name otherwise.
class Writer {
public:
    explicit Writer(const Workspace* context = nullptr);
    ~Writer();
    Writer(const Writer&) = delete;
    Writer& operator=(const Writer&) = delete;

    // returns the name actually used
    std::string add(const std::string& name, const Value& v);
    std::string str() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::string serialize(const Workspace& ws);

std::string to_dot(const std::string& name, const Value& v);

}
