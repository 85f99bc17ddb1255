#include "ontokit/axiom.hpp"

#include "overloaded.hpp"

#include <stdexcept>

namespace ontokit {

namespace {

using detail::Overloaded;

void collect(const Concept& c, std::vector<Entity>& out) {
    switch (c.kind()) {
        case Concept::Kind::Named:
            out.push_back({EntityKind::Concept, c.iri()});
            break;
        case Concept::Kind::Top:
        case Concept::Kind::Bottom:
            break;
        case Concept::Kind::Intersection:
        case Concept::Kind::Union:
        case Concept::Kind::Complement:
            for (const auto& op : c.operands()) collect(op, out);
            break;
        case Concept::Kind::Existential:
        case Concept::Kind::Universal:
            out.push_back({EntityKind::ObjectRole, c.role().name});
            collect(c.filler(), out);
            break;
    }
}

}  // namespace

std::string_view toString(EntityKind kind) noexcept {
    switch (kind) {
        case EntityKind::Concept: return "Class";
        case EntityKind::ObjectRole: return "ObjectProperty";
        case EntityKind::DataRole: return "DataProperty";
        case EntityKind::AnnotationRole: return "AnnotationProperty";
        case EntityKind::Individual: return "NamedIndividual";
        case EntityKind::Datatype: return "Datatype";
    }
    return "?";
}

void validate(const Axiom& axiom) {
    if (const auto* eq = std::get_if<axioms::EquivalentConcepts>(&axiom); eq && eq->members.size() < 2)
        throw std::invalid_argument("EquivalentClasses needs at least two members");
    if (const auto* dj = std::get_if<axioms::DisjointConcepts>(&axiom); dj && dj->members.size() < 2)
        throw std::invalid_argument("DisjointClasses needs at least two members");
}

std::vector<Entity> referencedEntities(const Axiom& axiom) {
    std::vector<Entity> out;
    const auto role = [&](const Iri& r) { out.push_back({EntityKind::ObjectRole, r}); };
    const auto individual = [&](const Iri& i) { out.push_back({EntityKind::Individual, i}); };
    std::visit(Overloaded{
                   [&](const axioms::SubConceptOf& a) {
                       collect(a.sub, out);
                       collect(a.super, out);
                   },
                   [&](const axioms::EquivalentConcepts& a) {
                       for (const auto& m : a.members) collect(m, out);
                   },
                   [&](const axioms::DisjointConcepts& a) {
                       for (const auto& m : a.members) collect(m, out);
                   },
                   [&](const axioms::SubRoleOf& a) {
                       role(a.sub);
                       role(a.super);
                   },
                   [&](const axioms::InverseRoles& a) {
                       role(a.first);
                       role(a.second);
                   },
                   [&](const axioms::TransitiveRole& a) { role(a.role); },
                   [&](const axioms::RoleDomain& a) {
                       role(a.role);
                       collect(a.domain, out);
                   },
                   [&](const axioms::RoleRange& a) {
                       role(a.role);
                       collect(a.range, out);
                   },
                   [&](const axioms::ConceptAssertion& a) {
                       collect(a.type, out);
                       individual(a.individual);
                   },
                   [&](const axioms::RoleAssertion& a) {
                       role(a.role);
                       individual(a.subject);
                       individual(a.object);
                   },
                   [&](const axioms::DataAssertion& a) {
                       out.push_back({EntityKind::DataRole, a.role});
                       individual(a.subject);
                       out.push_back({EntityKind::Datatype, a.value.datatype});
                   },
                   [&](const axioms::AnnotationAssertion& a) {
                       out.push_back({EntityKind::AnnotationRole, a.property});
                       out.push_back({EntityKind::Datatype, a.value.datatype});
                   },
                   [&](const axioms::Declaration& a) { out.push_back(a.entity); },
               },
               axiom);
    return out;
}

bool isLogical(const Axiom& axiom) noexcept {
    return !std::holds_alternative<axioms::DataAssertion>(axiom) &&
           !std::holds_alternative<axioms::AnnotationAssertion>(axiom) &&
           !std::holds_alternative<axioms::Declaration>(axiom);
}

}  // namespace ontokit
