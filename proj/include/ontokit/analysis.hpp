#pragma once

#include "ontokit/ontology.hpp"
#include "ontokit/reasoner.hpp"
#include "ontokit/taxonomy.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontokit {

/// Taxonomy of told subsumptions between named concepts, including the
/// named-to-named halves of equivalence axioms.
Taxonomy assertedTaxonomy(const Ontology& o);

struct HierarchyDiff {
    /// (child, parent) pairs.
    std::set<std::pair<Iri, Iri>> addedParentLinks;
    std::set<std::pair<Iri, Iri>> removedParentLinks;
    /// Pairs (a, b) with a < b, equivalent only in the inferred taxonomy.
    std::set<std::pair<Iri, Iri>> newEquivalences;

    bool empty() const noexcept {
        return addedParentLinks.empty() && removedParentLinks.empty() && newEquivalences.empty();
    }
    friend bool operator==(const HierarchyDiff&, const HierarchyDiff&) = default;
};

/// Direct links of one taxonomy not implied by the other. Throws
/// std::invalid_argument if the concept sets differ.
HierarchyDiff diffTaxonomies(const Taxonomy& asserted, const Taxonomy& inferred);

struct ProbeSpec {
    std::string name;
    std::vector<Iri> supers;

    friend bool operator==(const ProbeSpec&, const ProbeSpec&) = default;
};

struct ProbeResult {
    ProbeSpec probe;
    Iri iri;
    bool satisfiable = false;
};

/// The IRI a probe named `name` receives in `o`.
Iri probeIri(const Ontology& o, std::string_view name);

/// Tests each probe on a private copy of `o`. Throws std::invalid_argument if a
/// probe name is already used in the ontology or a probe has fewer than two supers.
std::vector<ProbeResult> runProbes(const Ontology& o, const std::vector<ProbeSpec>& probes,
                                   const ReasonerLimits& limits = {});

class ProbeFileError : public std::runtime_error {
public:
    ProbeFileError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reads `name: Super1, Super2, ...` lines; '#' starts a comment and an empty
/// name defaults to ProbeType<n>. Supers are resolved with resolveName.
std::vector<ProbeSpec> parseProbes(std::string_view text, const Ontology& o);

/// Resolves `<iri>`, `prefix:local` or a bare fragment to an entity IRI of the
/// given kind. A bare fragment must match exactly one entity.
std::optional<Iri> resolveName(std::string_view text, const Ontology& o, EntityKind kind);

enum class QueryKind : std::uint8_t {
    SymptomsOf,
    DiseasesWithSymptom,
    PreventionsOf,
    AreasOf,
    StructuresOf,
    GeneticsOf,
    SubConceptsOf,
    SuperConceptsOf,
    InstancesOf,
    FillersOf,
};

std::string_view toString(QueryKind kind);
std::optional<QueryKind> parseQueryKind(std::string_view text);

struct CompetencyQuery {
    QueryKind kind;
    /// Entity name, or a class expression for InstancesOf.
    std::string subject;
    /// Required for FillersOf, ignored otherwise.
    std::optional<std::string> role;
};

/// Throws std::invalid_argument for unknown subjects or roles and
/// InconsistentOntology when `o` has no model.
std::set<Iri> answerCompetencyQuery(const CompetencyQuery& q, const Ontology& o, const ReasonerLimits& limits = {});

}  // namespace ontokit
