#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "motzkin/paths.hpp"

namespace motzkin {

// Which paths a descriptor ranges over and how its patterns are read.
//   Full    all Motzkin paths, plain patterns
//   HStart  paths starting with H, plain patterns
//   UStart  paths starting with U, plain patterns
//   UCross  paths starting with U, crossing patterns left-right
// Plain patterns are stored as crossing patterns with an empty left side.
enum class Mode { Full, HStart, UStart, UCross };

std::string to_string(Mode m);

// Disjunction: a path must contain at least one member.
using Clause = std::vector<CrossingPattern>;

struct ClassDescriptor {
    Mode mode = Mode::Full;
    std::vector<CrossingPattern> avoid;
    std::vector<Clause> contain;

    static ClassDescriptor plain(Mode mode, const std::vector<Word>& avoid,
                                 const std::vector<std::vector<Word>>& contain = {});

    bool is_plain() const { return mode != Mode::UCross; }
    bool is_local() const;

    bool operator==(const ClassDescriptor&) const = default;
};

/// Canonical serialization of a normalized descriptor; equal ids iff equal descriptors.
struct ClassId {
    std::string value;

    const std::string& str() const { return value; }
    bool operator==(const ClassId&) const = default;
    auto operator<=>(const ClassId&) const = default;
};

// Ids of the two classes that have no descriptor.
ClassId epsilon_class_id();
ClassId empty_class_id();

/// a.left is a subword of b.left and a.right of b.right, so containing b implies containing a.
bool crossing_implies(const CrossingPattern& a, const CrossingPattern& b);

/// Whether every path of the mode's range contains cp. In the plain modes only epsilon is.
bool trivially_contained(const CrossingPattern& cp, Mode mode);

/// Fixpoint of the syntactic simplifications; std::nullopt stands for the empty class.
std::optional<ClassDescriptor> normalize(ClassDescriptor d);

/// Whether the empty path belongs to a normalized Full descriptor.
bool epsilon_member(const ClassDescriptor& d);

ClassId class_id(const ClassDescriptor& d);

/// Membership of a word in the class, evaluated directly from the definitions.
bool admits(const ClassDescriptor& d, const Word& w);

}  // namespace motzkin

template <>
struct std::hash<motzkin::ClassId> {
    std::size_t operator()(const motzkin::ClassId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};
