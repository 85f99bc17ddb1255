#include "ontokit/ontology.hpp"

#include <algorithm>

namespace ontokit {

namespace {

bool isBuiltinConcept(const Entity& e) {
    return e.kind == EntityKind::Concept && (e.iri == vocab::thing() || e.iri == vocab::nothing());
}

}  // namespace

UndeclaredEntity::UndeclaredEntity(Entity entity)
    : std::runtime_error("undeclared " + std::string(toString(entity.kind)) + " " +
                         std::string(entity.iri.fragment()) + " <" + entity.iri.str() + ">"),
      entity_(std::move(entity)) {}

Ontology::Ontology(Iri iri, DeclarationMode mode) : iri_(std::move(iri)), mode_(mode) {}

bool Ontology::contains(const Axiom& axiom) const { return index_.contains(axiom); }

bool Ontology::isDeclared(const Entity& entity) const { return declared_.contains(entity); }

bool Ontology::isDeclared(const Iri& iri) const {
    return std::ranges::any_of(declared_, [&](const Entity& e) { return e.iri == iri; });
}

void Ontology::setPrefix(std::string prefix, std::string expansion) {
    prefixes_[std::move(prefix)] = std::move(expansion);
}

bool Ontology::add(const Axiom& axiom) {
    validate(axiom);
    if (index_.contains(axiom)) return false;

    if (!std::holds_alternative<axioms::Declaration>(axiom)) {
        std::vector<Entity> missing;
        for (auto& e : referencedEntities(axiom)) {
            if (isBuiltinConcept(e) || declared_.contains(e)) continue;
            if (std::ranges::find(missing, e) == missing.end()) missing.push_back(std::move(e));
        }
        if (!missing.empty() && mode_ == DeclarationMode::Strict) throw UndeclaredEntity(missing.front());
        for (auto& e : missing) {
            warnings_.push_back("auto-declared " + std::string(toString(e.kind)) + " <" + e.iri.str() + ">");
            Axiom decl = axioms::Declaration{e};
            index_.insert(decl);
            axioms_.push_back(std::move(decl));
            declared_.insert(std::move(e));
        }
    } else {
        declared_.insert(std::get<axioms::Declaration>(axiom).entity);
    }

    index_.insert(axiom);
    axioms_.push_back(axiom);
    return true;
}

bool Ontology::remove(const Axiom& axiom) {
    if (index_.erase(axiom) == 0) return false;
    axioms_.erase(std::ranges::find(axioms_, axiom));
    if (const auto* decl = std::get_if<axioms::Declaration>(&axiom)) declared_.erase(decl->entity);
    return true;
}

bool operator==(const Ontology& a, const Ontology& b) {
    return a.iri_ == b.iri_ && a.prefixes_ == b.prefixes_ && a.index_ == b.index_;
}

Ontology addAxiom(Ontology o, const Axiom& a) {
    o.add(a);
    return o;
}

std::set<Entity> signature(const Ontology& o) {
    std::set<Entity> out;
    for (const auto& axiom : o.axioms()) {
        for (auto& e : referencedEntities(axiom)) {
            if (!isBuiltinConcept(e)) out.insert(std::move(e));
        }
    }
    return out;
}

EntityCounts computeCounts(const Ontology& o) {
    EntityCounts counts;
    for (const auto& axiom : o.axioms()) {
        const auto* decl = std::get_if<axioms::Declaration>(&axiom);
        if (!decl || isBuiltinConcept(decl->entity)) continue;
        switch (decl->entity.kind) {
            case EntityKind::Concept: ++counts.concepts; break;
            case EntityKind::ObjectRole: ++counts.objectRoles; break;
            case EntityKind::DataRole: ++counts.dataRoles; break;
            case EntityKind::AnnotationRole: ++counts.annotationRoles; break;
            case EntityKind::Individual: ++counts.individuals; break;
            case EntityKind::Datatype: ++counts.datatypes; break;
        }
    }
    return counts;
}

std::vector<Axiom> usages(const Entity& e, const Ontology& o) {
    if (!signature(o).contains(e))
        throw std::invalid_argument("entity not in signature: <" + e.iri.str() + ">");
    std::vector<Axiom> out;
    for (const auto& axiom : o.axioms()) {
        const auto* ann = std::get_if<axioms::AnnotationAssertion>(&axiom);
        const auto refs = referencedEntities(axiom);
        if ((ann && ann->subject == e.iri) || std::ranges::find(refs, e) != refs.end()) out.push_back(axiom);
    }
    return out;
}

}  // namespace ontokit
