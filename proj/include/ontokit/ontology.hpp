#pragma once

#include "ontokit/axiom.hpp"
#include "ontokit/iri.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontokit {

enum class DeclarationMode : std::uint8_t {
    /// Undeclared entities are declared on the fly and a warning is recorded.
    Lenient,
    /// Any undeclared entity in a non-declaration axiom is an error.
    Strict,
};

/// Thrown in strict mode when an axiom mentions an entity without a declaration.
class UndeclaredEntity : public std::runtime_error {
public:
    explicit UndeclaredEntity(Entity entity);
    const Entity& entity() const noexcept { return entity_; }

private:
    Entity entity_;
};

using PrefixMap = std::map<std::string, std::string>;

struct EntityCounts {
    std::size_t concepts = 0;
    std::size_t objectRoles = 0;
    std::size_t dataRoles = 0;
    std::size_t annotationRoles = 0;
    std::size_t individuals = 0;
    std::size_t datatypes = 0;

    /// Class count with the built-in top concept included.
    std::size_t conceptsIncludingThing() const noexcept { return concepts + 1; }

    friend bool operator==(const EntityCounts&, const EntityCounts&) = default;
};

/// An ordered set of axioms plus the ontology IRI and prefix map.
///
/// Axioms keep insertion order; structurally equal duplicates are dropped.
/// Equality compares IRI, prefixes and the axiom *set*, so two ontologies
/// holding the same axioms in a different order are equal.
class Ontology {
public:
    explicit Ontology(Iri iri, DeclarationMode mode = DeclarationMode::Lenient);

    const Iri& iri() const noexcept { return iri_; }
    DeclarationMode mode() const noexcept { return mode_; }
    const PrefixMap& prefixes() const noexcept { return prefixes_; }
    std::span<const Axiom> axioms() const noexcept { return axioms_; }
    std::size_t size() const noexcept { return axioms_.size(); }
    bool empty() const noexcept { return axioms_.empty(); }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    bool contains(const Axiom& axiom) const;
    bool isDeclared(const Entity& entity) const;
    /// True if `iri` is declared with any kind.
    bool isDeclared(const Iri& iri) const;

    void setPrefix(std::string prefix, std::string expansion);

    /// Inserts `axiom` unless already present. Returns false for duplicates.
    /// Throws UndeclaredEntity in strict mode.
    bool add(const Axiom& axiom);

    /// Removes a structurally equal axiom if present.
    bool remove(const Axiom& axiom);

    friend bool operator==(const Ontology& a, const Ontology& b);

private:
    Iri iri_;
    DeclarationMode mode_;
    PrefixMap prefixes_;
    std::vector<Axiom> axioms_;
    std::set<Axiom> index_;
    std::set<Entity> declared_;
    std::vector<std::string> warnings_;
};

/// Value-semantics insertion: `o` is taken by value and returned with `a` added.
Ontology addAxiom(Ontology o, const Axiom& a);

/// Entities declared or referenced, ordered by (kind, IRI). The built-in
/// top and bottom concepts are never part of a signature.
std::set<Entity> signature(const Ontology& o);

/// Counts over declared entities.
EntityCounts computeCounts(const Ontology& o);

/// Axioms mentioning `e` in a position compatible with its kind, in ontology
/// order. Throws std::invalid_argument if `e` is not in the signature.
std::vector<Axiom> usages(const Entity& e, const Ontology& o);

}  // namespace ontokit
