#pragma once

#include "ontokit/concept.hpp"
#include "ontokit/iri.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontokit {

enum class EntityKind : std::uint8_t {
    Concept,
    ObjectRole,
    DataRole,
    AnnotationRole,
    Individual,
    Datatype,
};

std::string_view toString(EntityKind kind) noexcept;

struct Entity {
    EntityKind kind;
    Iri iri;

    friend bool operator==(const Entity&, const Entity&) = default;
    friend std::strong_ordering operator<=>(const Entity&, const Entity&) = default;
};

struct Literal {
    std::string lexical;
    Iri datatype = vocab::plainText();

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;
};

namespace axioms {

struct SubConceptOf {
    Concept sub;
    Concept super;
    friend bool operator==(const SubConceptOf&, const SubConceptOf&) = default;
    friend std::strong_ordering operator<=>(const SubConceptOf&, const SubConceptOf&) = default;
};

/// At least two members.
struct EquivalentConcepts {
    std::vector<Concept> members;
    friend bool operator==(const EquivalentConcepts&, const EquivalentConcepts&) = default;
    friend std::strong_ordering operator<=>(const EquivalentConcepts&, const EquivalentConcepts&) = default;
};

/// At least two members; reasoning expands to pairwise disjointness.
struct DisjointConcepts {
    std::vector<Concept> members;
    friend bool operator==(const DisjointConcepts&, const DisjointConcepts&) = default;
    friend std::strong_ordering operator<=>(const DisjointConcepts&, const DisjointConcepts&) = default;
};

struct SubRoleOf {
    Iri sub;
    Iri super;
    friend bool operator==(const SubRoleOf&, const SubRoleOf&) = default;
    friend std::strong_ordering operator<=>(const SubRoleOf&, const SubRoleOf&) = default;
};

struct InverseRoles {
    Iri first;
    Iri second;
    friend bool operator==(const InverseRoles&, const InverseRoles&) = default;
    friend std::strong_ordering operator<=>(const InverseRoles&, const InverseRoles&) = default;
};

struct TransitiveRole {
    Iri role;
    friend bool operator==(const TransitiveRole&, const TransitiveRole&) = default;
    friend std::strong_ordering operator<=>(const TransitiveRole&, const TransitiveRole&) = default;
};

struct RoleDomain {
    Iri role;
    Concept domain;
    friend bool operator==(const RoleDomain&, const RoleDomain&) = default;
    friend std::strong_ordering operator<=>(const RoleDomain&, const RoleDomain&) = default;
};

struct RoleRange {
    Iri role;
    Concept range;
    friend bool operator==(const RoleRange&, const RoleRange&) = default;
    friend std::strong_ordering operator<=>(const RoleRange&, const RoleRange&) = default;
};

struct ConceptAssertion {
    Concept type;
    Iri individual;
    friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
    friend std::strong_ordering operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
    Iri role;
    Iri subject;
    Iri object;
    friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
    friend std::strong_ordering operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

struct DataAssertion {
    Iri role;
    Iri subject;
    Literal value;
    friend bool operator==(const DataAssertion&, const DataAssertion&) = default;
    friend std::strong_ordering operator<=>(const DataAssertion&, const DataAssertion&) = default;
};

/// Carries no logical meaning; ignored by the reasoner.
struct AnnotationAssertion {
    Iri property;
    Iri subject;
    Literal value;
    friend bool operator==(const AnnotationAssertion&, const AnnotationAssertion&) = default;
    friend std::strong_ordering operator<=>(const AnnotationAssertion&, const AnnotationAssertion&) = default;
};

struct Declaration {
    Entity entity;
    friend bool operator==(const Declaration&, const Declaration&) = default;
    friend std::strong_ordering operator<=>(const Declaration&, const Declaration&) = default;
};

}  // namespace axioms

using Axiom = std::variant<axioms::SubConceptOf,
                           axioms::EquivalentConcepts,
                           axioms::DisjointConcepts,
                           axioms::SubRoleOf,
                           axioms::InverseRoles,
                           axioms::TransitiveRole,
                           axioms::RoleDomain,
                           axioms::RoleRange,
                           axioms::ConceptAssertion,
                           axioms::RoleAssertion,
                           axioms::DataAssertion,
                           axioms::AnnotationAssertion,
                           axioms::Declaration>;

/// Throws std::invalid_argument if an n-ary axiom has fewer than two members.
void validate(const Axiom& axiom);

/// Every entity the axiom mentions, with the kind implied by its position.
/// Annotation subjects are untyped and therefore not included.
std::vector<Entity> referencedEntities(const Axiom& axiom);

/// True for the concept, role and individual axioms the reasoner consumes.
bool isLogical(const Axiom& axiom) noexcept;

}  // namespace ontokit
