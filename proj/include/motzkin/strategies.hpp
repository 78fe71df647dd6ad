#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "motzkin/class_model.hpp"

namespace motzkin {

enum class Atom { HStep, UDArch };

struct UnionRule {
    std::vector<ClassId> children;
    bool operator==(const UnionRule&) const = default;
};

// HStep has one child (H w); UDArch has two, left then right (U x D y).
struct ProductRule {
    Atom atom = Atom::HStep;
    std::vector<ClassId> children;
    bool operator==(const ProductRule&) const = default;
};

struct EpsilonRule {
    bool operator==(const EpsilonRule&) const = default;
};

struct EmptyRule {
    bool operator==(const EmptyRule&) const = default;
};

using RuleBody = std::variant<UnionRule, ProductRule, EpsilonRule, EmptyRule>;

struct Rule {
    ClassId lhs;
    RuleBody body;
    bool operator==(const Rule&) const = default;
};

const std::vector<ClassId>& rule_children(const RuleBody& body);

/// A rule together with the descriptors of the classes it mentions.
/// The epsilon class is referenced by id only.
struct Derivation {
    Rule rule;
    std::vector<std::pair<ClassId, ClassDescriptor>> introduced;
};

// The individual strategies. Inputs must be normalized descriptors of the stated mode.
Derivation root_split(const ClassDescriptor& full);
Derivation hstart_rewrite(const ClassDescriptor& hstart);
/// Plain U-start constraints to crossing ones; std::nullopt when the result is empty.
std::optional<ClassDescriptor> crossify(const ClassDescriptor& ustart);
/// Disjoint union of U-start classes whose constraints are all local singletons.
Derivation localize(const ClassDescriptor& ucross);
Derivation factor(const ClassDescriptor& local);

/// Chooses the strategy for a descriptor by mode; plain U-start classes go
/// through crossify and then localize.
Derivation expand(const ClassDescriptor& d);

class Specification {
public:
    struct Entry {
        ClassId id;
        std::optional<ClassDescriptor> descriptor;  // absent for epsilon and empty
        RuleBody body;
        std::vector<std::size_t> children;  // indices into entries()
    };

    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<std::size_t>& roots() const { return roots_; }
    std::size_t root() const { return roots_.front(); }

    std::size_t size() const { return entries_.size(); }
    const Entry& at(std::size_t index) const { return entries_.at(index); }
    /// Throws UnknownClass.
    std::size_t index_of(const ClassId& id) const;
    bool has(const ClassId& id) const { return index_.contains(id); }
    Rule rule(std::size_t index) const { return {entries_[index].id, entries_[index].body}; }

private:
    friend Specification build_specification(const std::vector<ClassDescriptor>& roots,
                                             std::size_t max_classes);

    std::vector<Entry> entries_;
    std::vector<std::size_t> roots_;
    std::unordered_map<ClassId, std::size_t> index_;
};

inline constexpr std::size_t kDefaultMaxClasses = 100000;

/// Worklist closure from the given Full descriptors (normalized here). Classes
/// appear in discovery order; each receives exactly one rule.
/// Throws IterationCap past `max_classes`.
Specification build_specification(const std::vector<ClassDescriptor>& roots,
                                  std::size_t max_classes = kDefaultMaxClasses);

}  // namespace motzkin
