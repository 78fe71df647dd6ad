#include "motzkin/strategies.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "motzkin/errors.hpp"

namespace motzkin {

const std::vector<ClassId>& rule_children(const RuleBody& body) {
    static const std::vector<ClassId> none;
    if (auto* u = std::get_if<UnionRule>(&body)) return u->children;
    if (auto* p = std::get_if<ProductRule>(&body)) return p->children;
    return none;
}

namespace {

Derivation empty_rule(const ClassDescriptor& d) { return {{class_id(d), EmptyRule{}}, {}}; }

// Remove one leading H.
Word drop_leading_h(const Word& w) {
    if (!w.empty() && w.front() == Step::H) return w.slice(1, w.size());
    return w;
}

using Derived = std::vector<std::pair<ClassId, ClassDescriptor>>;

void introduce(Derived& list, std::vector<ClassId>& children, const ClassDescriptor& d) {
    auto id = class_id(d);
    children.push_back(id);
    list.emplace_back(std::move(id), d);
}

}  // namespace

Derivation root_split(const ClassDescriptor& full) {
    UnionRule u;
    Derived introduced;
    if (epsilon_member(full)) u.children.push_back(epsilon_class_id());
    for (Mode m : {Mode::HStart, Mode::UStart}) {
        ClassDescriptor copy = full;
        copy.mode = m;
        if (auto n = normalize(std::move(copy))) introduce(introduced, u.children, *n);
    }
    if (u.children.empty()) return empty_rule(full);
    return {{class_id(full), std::move(u)}, std::move(introduced)};
}

Derivation hstart_rewrite(const ClassDescriptor& hstart) {
    ClassDescriptor next;
    next.mode = Mode::Full;
    for (const auto& a : hstart.avoid) next.avoid.push_back(CrossingPattern::plain(drop_leading_h(a.right)));
    for (const auto& clause : hstart.contain) {
        Clause c;
        for (const auto& q : clause) c.push_back(CrossingPattern::plain(drop_leading_h(q.right)));
        next.contain.push_back(std::move(c));
    }
    auto n = normalize(std::move(next));
    if (!n) return empty_rule(hstart);
    Derived introduced;
    ProductRule p{Atom::HStep, {}};
    introduce(introduced, p.children, *n);
    return {{class_id(hstart), std::move(p)}, std::move(introduced)};
}

std::optional<ClassDescriptor> crossify(const ClassDescriptor& ustart) {
    ClassDescriptor out;
    out.mode = Mode::UCross;
    for (const auto& a : ustart.avoid) {
        for (auto& cp : split_pattern(a.right)) out.avoid.push_back(std::move(cp));
    }
    for (const auto& clause : ustart.contain) {
        Clause c;
        for (const auto& q : clause) {
            for (auto& cp : split_pattern(q.right)) c.push_back(std::move(cp));
        }
        out.contain.push_back(std::move(c));
    }
    return normalize(std::move(out));
}

namespace {

constexpr std::size_t kLocalizeCap = 1'000'000;

// One splitting step; returns false when `d` is already local.
bool split_once(const ClassDescriptor& d, std::vector<std::optional<ClassDescriptor>>& parts) {
    // A clause with several members: avoid its smallest member and contain the
    // rest, or contain exactly that member.
    for (std::size_t i = 0; i < d.contain.size(); ++i) {
        const Clause& clause = d.contain[i];
        if (clause.size() < 2) continue;
        const CrossingPattern& q = clause.front();
        ClassDescriptor a = d;
        a.avoid.push_back(q);
        a.contain[i].erase(a.contain[i].begin());
        ClassDescriptor b = d;
        b.contain[i] = {q};
        parts.push_back(normalize(std::move(a)));
        parts.push_back(normalize(std::move(b)));
        return true;
    }
    // Containing l-r means containing both l- and -r.
    for (std::size_t i = 0; i < d.contain.size(); ++i) {
        const CrossingPattern& q = d.contain[i].front();
        if (q.is_local()) continue;
        ClassDescriptor a = d;
        a.contain.erase(a.contain.begin() + static_cast<std::ptrdiff_t>(i));
        a.contain.push_back({{q.left, Word{}}});
        a.contain.push_back({{Word{}, q.right}});
        parts.push_back(normalize(std::move(a)));
        return true;
    }
    // Avoiding l-r: either avoid l-, or contain l- and avoid -r.
    for (std::size_t i = 0; i < d.avoid.size(); ++i) {
        const CrossingPattern& p = d.avoid[i];
        if (p.is_local()) continue;
        ClassDescriptor a = d;
        a.avoid.erase(a.avoid.begin() + static_cast<std::ptrdiff_t>(i));
        ClassDescriptor b = a;
        a.avoid.push_back({p.left, Word{}});
        b.avoid.push_back({Word{}, p.right});
        b.contain.push_back({{p.left, Word{}}});
        parts.push_back(normalize(std::move(a)));
        parts.push_back(normalize(std::move(b)));
        return true;
    }
    return false;
}

}  // namespace

Derivation localize(const ClassDescriptor& ucross) {
    UnionRule u;
    Derived introduced;
    // Depth-first with the first branch explored first, so leaves come out in
    // discovery order.
    std::vector<ClassDescriptor> stack{ucross};
    std::vector<ClassDescriptor> leaves;
    std::size_t steps = 0;
    while (!stack.empty()) {
        if (++steps > kLocalizeCap) throw IterationCap("localize did not terminate for " + class_id(ucross).str());
        ClassDescriptor d = std::move(stack.back());
        stack.pop_back();
        std::vector<std::optional<ClassDescriptor>> parts;
        if (!split_once(d, parts)) {
            introduce(introduced, u.children, d);
            leaves.push_back(std::move(d));
            continue;
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            if (*it) stack.push_back(std::move(**it));
        }
    }
    if (u.children.empty()) return empty_rule(ucross);
    // A lone leaf is factored in place instead of through a one-child union.
    if (u.children.size() == 1) {
        Derivation out = factor(leaves.front());
        out.rule.lhs = class_id(ucross);
        return out;
    }
    return {{class_id(ucross), std::move(u)}, std::move(introduced)};
}

Derivation factor(const ClassDescriptor& local) {
    ClassDescriptor left;
    ClassDescriptor right;
    for (const auto& a : local.avoid) {
        if (a.right.empty()) {
            left.avoid.push_back(CrossingPattern::plain(strip(a.left)));
        } else {
            right.avoid.push_back(CrossingPattern::plain(a.right));
        }
    }
    for (const auto& clause : local.contain) {
        const auto& q = clause.front();
        if (q.right.empty()) {
            left.contain.push_back({CrossingPattern::plain(strip(q.left))});
        } else {
            right.contain.push_back({CrossingPattern::plain(q.right)});
        }
    }
    auto l = normalize(std::move(left));
    auto r = normalize(std::move(right));
    if (!l || !r) return empty_rule(local);
    Derived introduced;
    ProductRule p{Atom::UDArch, {}};
    introduce(introduced, p.children, *l);
    introduce(introduced, p.children, *r);
    return {{class_id(local), std::move(p)}, std::move(introduced)};
}

Derivation expand(const ClassDescriptor& d) {
    switch (d.mode) {
        case Mode::Full: return root_split(d);
        case Mode::HStart: return hstart_rewrite(d);
        case Mode::UStart: {
            auto crossed = crossify(d);
            if (!crossed) return empty_rule(d);
            Derivation out = localize(*crossed);
            out.rule.lhs = class_id(d);
            return out;
        }
        case Mode::UCross:
            return d.is_local() ? factor(d) : localize(d);
    }
    return empty_rule(d);
}

std::size_t Specification::index_of(const ClassId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownClass("class not in specification: " + id.str());
    return it->second;
}

Specification build_specification(const std::vector<ClassDescriptor>& roots, std::size_t max_classes) {
    Specification spec;
    std::deque<std::size_t> pending;

    auto add = [&](const ClassId& id, std::optional<ClassDescriptor> descriptor) -> std::size_t {
        if (auto it = spec.index_.find(id); it != spec.index_.end()) return it->second;
        if (spec.entries_.size() >= max_classes) {
            throw IterationCap("specification exceeds " + std::to_string(max_classes) + " classes");
        }
        std::size_t index = spec.entries_.size();
        RuleBody body = EmptyRule{};
        if (id == epsilon_class_id()) body = EpsilonRule{};
        spec.entries_.push_back({id, std::move(descriptor), std::move(body), {}});
        spec.index_.emplace(id, index);
        if (spec.entries_[index].descriptor) pending.push_back(index);
        return index;
    };

    for (const auto& root : roots) {
        ClassDescriptor full = root;
        full.mode = Mode::Full;
        auto n = normalize(std::move(full));
        spec.roots_.push_back(n ? add(class_id(*n), *n) : add(empty_class_id(), std::nullopt));
    }

    while (!pending.empty()) {
        std::size_t index = pending.front();
        pending.pop_front();
        Derivation der = expand(*spec.entries_[index].descriptor);
        for (auto& [id, d] : der.introduced) add(id, std::move(d));
        std::vector<std::size_t> children;
        for (const auto& child : rule_children(der.rule.body)) children.push_back(add(child, std::nullopt));
        spec.entries_[index].body = std::move(der.rule.body);
        spec.entries_[index].children = std::move(children);
    }
    return spec;
}

}  // namespace motzkin
