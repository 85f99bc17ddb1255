#include "ontokit/reasoner.hpp"

#include "overloaded.hpp"

#include <algorithm>
#include <functional>

namespace ontokit {

using detail::Overloaded;

void ReasonerLimits::validate() const {
    if (maxNodes == 0 || maxBranchDepth == 0) throw std::invalid_argument("reasoner limits must be positive");
}

void RoleHierarchy::addInclusion(const Role& sub, const Role& super) {
    supers_[sub].insert(super);
    supers_[super];
}

void RoleHierarchy::close() {
    std::map<Role, std::set<Role>> next;
    for (const auto& [sub, supers] : supers_) {
        for (const Role& r : {sub, sub.inverted()}) {
            next[r].insert(r);
        }
        for (const Role& s : supers) {
            next[sub].insert(s);
            next[sub.inverted()].insert(s.inverted());
            next[s].insert(s);
            next[s.inverted()].insert(s.inverted());
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [sub, supers] : next) {
            std::set<Role> add;
            for (const Role& mid : supers)
                for (const Role& s : next[mid])
                    if (!supers.contains(s)) add.insert(s);
            if (!add.empty()) {
                supers.insert(add.begin(), add.end());
                changed = true;
            }
        }
    }
    supers_ = std::move(next);
}

bool RoleHierarchy::isSubRole(const Role& sub, const Role& super) const {
    if (sub == super) return true;
    auto it = supers_.find(sub);
    return it != supers_.end() && it->second.contains(super);
}

std::set<Role> RoleHierarchy::roles() const {
    std::set<Role> out;
    for (const auto& [r, supers] : supers_) {
        out.insert(r);
        out.insert(r.inverted());
    }
    return out;
}

std::set<Role> RoleHierarchy::superRoles(const Role& role) const {
    auto it = supers_.find(role);
    if (it == supers_.end()) return {role};
    return it->second;
}

bool NormalizedTBox::isTransitive(const Role& role) const { return transitiveRoles.contains(role.name); }

Concept toNNF(const Concept& c) {
    using K = Concept::Kind;
    const auto map = [](std::span<const Concept> ops, auto f) {
        std::vector<Concept> out;
        out.reserve(ops.size());
        for (const auto& op : ops) out.push_back(f(op));
        return out;
    };
    switch (c.kind()) {
        case K::Named:
        case K::Top:
        case K::Bottom: return c;
        case K::Intersection: return Concept::intersection(map(c.operands(), toNNF));
        case K::Union: return Concept::unionOf(map(c.operands(), toNNF));
        case K::Existential: return Concept::some(c.role(), toNNF(c.filler()));
        case K::Universal: return Concept::all(c.role(), toNNF(c.filler()));
        case K::Complement: break;
    }
    const Concept& inner = c.filler();
    const auto negated = [](const Concept& x) { return toNNF(Concept::complement(x)); };
    switch (inner.kind()) {
        case K::Named: return c;
        case K::Top: return Concept::bottom();
        case K::Bottom: return Concept::top();
        case K::Complement: return toNNF(inner.filler());
        case K::Intersection: return Concept::unionOf(map(inner.operands(), negated));
        case K::Union: return Concept::intersection(map(inner.operands(), negated));
        case K::Existential: return Concept::all(inner.role(), negated(inner.filler()));
        case K::Universal: return Concept::some(inner.role(), negated(inner.filler()));
    }
    return c;
}

namespace {

void namedIn(const Concept& c, std::set<Iri>& out) {
    switch (c.kind()) {
        case Concept::Kind::Named: out.insert(c.iri()); break;
        case Concept::Kind::Top:
        case Concept::Kind::Bottom: break;
        case Concept::Kind::Existential:
        case Concept::Kind::Universal: namedIn(c.filler(), out); break;
        default:
            for (const auto& op : c.operands()) namedIn(op, out);
    }
}

}  // namespace

NormalizedTBox normalize(const Ontology& o) {
    NormalizedTBox t;

    // How often each named concept is a top-level operand of a concept axiom.
    std::map<Iri, int> topLevel;
    const auto countTop = [&](const Concept& c) {
        if (c.isNamed()) ++topLevel[c.iri()];
    };
    for (const auto& axiom : o.axioms()) {
        std::visit(Overloaded{
                       [&](const axioms::SubConceptOf& a) {
                           countTop(a.sub);
                           countTop(a.super);
                       },
                       [&](const axioms::EquivalentConcepts& a) { std::ranges::for_each(a.members, countTop); },
                       [&](const axioms::DisjointConcepts& a) { std::ranges::for_each(a.members, countTop); },
                       [](const auto&) {},
                   },
                   axiom);
    }

    // Candidate definitions: A ≡ C where A is named and constrained nowhere else.
    std::map<Iri, Concept> candidates;
    std::set<const axioms::EquivalentConcepts*> used;
    for (const auto& axiom : o.axioms()) {
        const auto* eq = std::get_if<axioms::EquivalentConcepts>(&axiom);
        if (!eq || eq->members.size() != 2) continue;
        for (int side = 0; side < 2; ++side) {
            const Concept& a = eq->members[side];
            const Concept& def = eq->members[1 - side];
            if (!a.isNamed() || topLevel[a.iri()] != 1 || candidates.contains(a.iri()) || def == a) continue;
            candidates.emplace(a.iri(), def);
            used.insert(eq);
            break;
        }
    }

    // Drop candidates on a definitional cycle.
    std::map<Iri, std::set<Iri>> deps;
    for (const auto& [name, def] : candidates) namedIn(def, deps[name]);
    std::set<Iri> cyclic;
    for (const auto& [start, unused] : candidates) {
        std::set<Iri> seen;
        std::vector<Iri> stack(deps[start].begin(), deps[start].end());
        while (!stack.empty()) {
            Iri next = stack.back();
            stack.pop_back();
            if (next == start) {
                cyclic.insert(start);
                break;
            }
            if (!candidates.contains(next) || !seen.insert(next).second) continue;
            stack.insert(stack.end(), deps[next].begin(), deps[next].end());
        }
    }
    for (const auto& name : cyclic) {
        const Concept def = candidates.at(name);
        candidates.erase(name);
        for (auto it = used.begin(); it != used.end();) {
            const auto& m = (*it)->members;
            if ((m[0].isNamed() && m[0].iri() == name && m[1] == def) ||
                (m[1].isNamed() && m[1].iri() == name && m[0] == def))
                it = used.erase(it);
            else
                ++it;
        }
    }
    for (const auto& [name, def] : candidates) t.definitions.emplace(name, toNNF(def));

    const auto include = [&](const Concept& sub, const Concept& super) {
        t.inclusions.emplace_back(toNNF(sub), toNNF(super));
    };
    std::vector<Iri> transitive;
    for (const auto& axiom : o.axioms()) {
        std::visit(Overloaded{
                       [&](const axioms::SubConceptOf& a) { include(a.sub, a.super); },
                       [&](const axioms::EquivalentConcepts& a) {
                           if (used.contains(&a)) return;
                           for (std::size_t i = 0; i < a.members.size(); ++i)
                               for (std::size_t j = 0; j < a.members.size(); ++j)
                                   if (i != j) include(a.members[i], a.members[j]);
                       },
                       [&](const axioms::DisjointConcepts& a) {
                           for (std::size_t i = 0; i < a.members.size(); ++i)
                               for (std::size_t j = i + 1; j < a.members.size(); ++j)
                                   include(a.members[i], Concept::complement(a.members[j]));
                       },
                       [&](const axioms::SubRoleOf& a) {
                           t.roles.addInclusion(Role::named(a.sub), Role::named(a.super));
                       },
                       [&](const axioms::InverseRoles& a) {
                           t.roles.addInclusion(Role::named(a.first), Role::inverseOf(a.second));
                           t.roles.addInclusion(Role::inverseOf(a.second), Role::named(a.first));
                       },
                       [&](const axioms::TransitiveRole& a) { transitive.push_back(a.role); },
                       [&](const axioms::RoleDomain& a) {
                           include(Concept::some(Role::named(a.role), Concept::top()), a.domain);
                       },
                       [&](const axioms::RoleRange& a) {
                           include(Concept::top(), Concept::all(Role::named(a.role), a.range));
                       },
                       [](const auto&) {},
                   },
                   axiom);
    }
    t.roles.close();

    // A role equivalent to a transitive role (or to its inverse) is transitive.
    for (const Iri& name : transitive) {
        t.transitiveRoles.insert(name);
        const Role r = Role::named(name);
        for (const Role& s : t.roles.superRoles(r))
            if (t.roles.isSubRole(s, r)) t.transitiveRoles.insert(s.name);
    }
    return t;
}

}  // namespace ontokit
