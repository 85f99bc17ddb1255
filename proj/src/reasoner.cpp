#include "ontokit/reasoner.hpp"

#include "overloaded.hpp"
#include "tableau.hpp"

#include <algorithm>
#include <deque>

namespace ontokit {

Reasoner::Reasoner(const Ontology& o, ReasonerLimits limits) : tbox_(normalize(o)), limits_(limits) {
    limits_.validate();
    for (const Entity& e : signature(o)) {
        if (e.kind == EntityKind::Concept) namedConcepts_.insert(e.iri);
        if (e.kind == EntityKind::Individual) abox_.individuals.insert(e.iri);
    }
    std::map<Iri, std::set<Iri>> told;
    for (const auto& axiom : o.axioms()) {
        if (const auto* a = std::get_if<axioms::ConceptAssertion>(&axiom)) {
            abox_.types.emplace_back(a->individual, a->type);
        } else if (const auto* r = std::get_if<axioms::RoleAssertion>(&axiom)) {
            abox_.links.emplace_back(r->role, r->subject, r->object);
        } else if (const auto* s = std::get_if<axioms::SubConceptOf>(&axiom)) {
            if (s->sub.isNamed() && s->super.isNamed()) told[s->sub.iri()].insert(s->super.iri());
        } else if (const auto* eq = std::get_if<axioms::EquivalentConcepts>(&axiom)) {
            for (const auto& x : eq->members)
                for (const auto& y : eq->members)
                    if (x.isNamed() && y.isNamed() && x != y) told[x.iri()].insert(y.iri());
        }
    }
    for (const auto& [sub, direct] : told) {
        std::deque<Iri> work(direct.begin(), direct.end());
        while (!work.empty()) {
            Iri next = work.front();
            work.pop_front();
            if (!told_.emplace(sub, next).second) continue;
            if (auto it = told.find(next); it != told.end()) work.insert(work.end(), it->second.begin(), it->second.end());
        }
    }
}

SatResult Reasoner::isSatisfiable(const Concept& c) const { return ontokit::isSatisfiable(c, tbox_, limits_); }

bool Reasoner::isSubsumedBy(const Concept& c, const Concept& d) const {
    return ontokit::isSubsumedBy(c, d, tbox_, limits_);
}

bool Reasoner::consistentWith(const std::optional<std::pair<Iri, Concept>>& extra) const {
    if (abox_.individuals.empty() && !extra) return isSatisfiable(Concept::top()).satisfiable;
    std::vector<detail::InitialNode> nodes;
    std::map<Iri, std::size_t> index;
    std::set<Iri> individuals = abox_.individuals;
    if (extra) individuals.insert(extra->first);
    for (const Iri& i : individuals) {
        index.emplace(i, nodes.size());
        nodes.push_back(detail::InitialNode{i, {}});
    }
    for (const auto& [i, c] : abox_.types) nodes[index.at(i)].label.push_back(c);
    if (extra) nodes[index.at(extra->first)].label.push_back(extra->second);
    std::vector<detail::InitialEdge> edges;
    for (const auto& [r, s, t] : abox_.links) edges.push_back({index.at(s), index.at(t), Role::named(r)});
    return detail::runTableau(nodes, edges, tbox_, limits_).satisfiable;
}

bool Reasoner::isConsistent() const { return consistentWith(std::nullopt); }

void Reasoner::requireConsistent() const {
    if (!isConsistent()) throw InconsistentOntology("ontology is inconsistent");
}

bool Reasoner::isInstance(const Iri& individual, const Concept& c) const {
    return !consistentWith(std::pair{individual, Concept::complement(c)});
}

Taxonomy Reasoner::classify() const {
    std::map<Iri, bool> satisfiable;
    const auto named = [](const Iri& i) { return Concept::named(i); };
    const auto sat = [&](const Iri& i) {
        auto it = satisfiable.find(i);
        if (it == satisfiable.end()) it = satisfiable.emplace(i, isSatisfiable(named(i)).satisfiable).first;
        return it->second;
    };
    return Taxonomy::build(namedConcepts_, [&](const Iri& sub, const Iri& super) {
        if (told_.contains({sub, super})) return true;
        if (!sat(sub)) return true;
        if (!sat(super)) return false;
        return isSubsumedBy(named(sub), named(super));
    });
}

std::map<Iri, std::set<Iri>> Reasoner::realize() const { return realize(classify()); }

std::map<Iri, std::set<Iri>> Reasoner::realize(const Taxonomy& inferred) const {
    requireConsistent();
    std::map<Iri, std::set<Iri>> out;
    for (const Iri& individual : abox_.individuals) {
        // Walk down from the top; a group is tested only once all its parents hold.
        std::vector<bool> entailed(inferred.groupCount(), false);
        std::vector<bool> visited(inferred.groupCount(), false);
        entailed[inferred.top()] = true;
        std::deque<Taxonomy::Group> work{inferred.top()};
        while (!work.empty()) {
            const Taxonomy::Group g = work.front();
            work.pop_front();
            for (Taxonomy::Group child : inferred.children(g)) {
                if (visited[child] || child == inferred.bottom()) continue;
                const auto& parents = inferred.parents(child);
                if (!std::ranges::all_of(parents, [&](Taxonomy::Group p) { return entailed[p]; })) continue;
                visited[child] = true;
                if (isInstance(individual, Concept::named(inferred.members(child).front()))) {
                    entailed[child] = true;
                    work.push_back(child);
                }
            }
        }
        std::set<Iri>& specific = out[individual];
        for (Taxonomy::Group g = 0; g < inferred.groupCount(); ++g) {
            if (!entailed[g]) continue;
            const auto& children = inferred.children(g);
            if (std::ranges::any_of(children, [&](Taxonomy::Group c) { return entailed[c]; })) continue;
            specific.insert(inferred.members(g).begin(), inferred.members(g).end());
        }
    }
    return out;
}

std::set<Iri> Reasoner::instancesOf(const Concept& c) const {
    requireConsistent();
    std::set<Iri> out;
    for (const Iri& individual : abox_.individuals)
        if (isInstance(individual, c)) out.insert(individual);
    return out;
}

bool isConsistent(const Ontology& o, const ReasonerLimits& limits) { return Reasoner(o, limits).isConsistent(); }

Taxonomy classify(const Ontology& o, const ReasonerLimits& limits) { return Reasoner(o, limits).classify(); }

std::map<Iri, std::set<Iri>> realize(const Ontology& o, const ReasonerLimits& limits) {
    return Reasoner(o, limits).realize();
}

std::set<Iri> instancesOf(const Concept& c, const Ontology& o, const ReasonerLimits& limits) {
    return Reasoner(o, limits).instancesOf(c);
}

Ontology materializeInverses(const Ontology& o) {
    Ontology out = o;
    const RoleHierarchy roles = normalize(o).roles;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<axioms::RoleAssertion> pending;
        for (const auto& axiom : out.axioms()) {
            const auto* a = std::get_if<axioms::RoleAssertion>(&axiom);
            if (!a) continue;
            for (const Role& s : roles.superRoles(Role::named(a->role)))
                if (s.inverse) pending.push_back({s.name, a->object, a->subject});
        }
        for (const auto& p : pending)
            if (out.add(p)) changed = true;
    }
    return out;
}

}  // namespace ontokit
