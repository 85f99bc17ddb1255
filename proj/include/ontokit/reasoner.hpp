#pragma once

#include "ontokit/concept.hpp"
#include "ontokit/ontology.hpp"
#include "ontokit/taxonomy.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ontokit {

struct ReasonerLimits {
    std::size_t maxNodes = 100000;
    std::size_t maxBranchDepth = 10000;

    /// Throws std::invalid_argument unless both limits are positive.
    void validate() const;
};

/// The only non-answer outcome of a reasoning call.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InconsistentOntology : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reflexive-transitive closure of the role hierarchy, including inverses:
/// r ⊑ s always implies inverse(r) ⊑ inverse(s).
class RoleHierarchy {
public:
    void addInclusion(const Role& sub, const Role& super);
    /// Closes the relation; called by normalize.
    void close();

    bool isSubRole(const Role& sub, const Role& super) const;
    /// Every role known to the hierarchy, both directions.
    std::set<Role> roles() const;
    std::set<Role> superRoles(const Role& role) const;

private:
    std::map<Role, std::set<Role>> supers_;
};

/// The ontology's TBox and RBox after normalization. All stored concepts are
/// in negation normal form.
struct NormalizedTBox {
    /// Named concepts with a single, acyclic definition and no other axiom.
    std::map<Iri, Concept> definitions;
    /// Concept inclusions `first ⊑ second`.
    std::vector<std::pair<Concept, Concept>> inclusions;
    RoleHierarchy roles;
    /// Named roles that are transitive, closed under role equivalence.
    std::set<Iri> transitiveRoles;

    bool isTransitive(const Role& role) const;
};

/// Negation normal form: complements only apply to named concepts.
Concept toNNF(const Concept& c);

NormalizedTBox normalize(const Ontology& o);

/// Working state of the tableau, exported as the witness of a satisfiable
/// verdict.
class CompletionGraph {
public:
    struct Node {
        std::vector<Concept> label;
        std::optional<std::size_t> parent;
        /// Set for nodes that stand for named individuals.
        std::optional<Iri> individual;
        /// Directly blocking ancestor, if any.
        std::optional<std::size_t> blockedBy;
        bool indirectlyBlocked = false;
    };
    struct Edge {
        std::size_t from;
        std::size_t to;
        std::vector<Role> roles;
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    bool clash = false;
};

struct SatResult {
    bool satisfiable = false;
    std::optional<CompletionGraph> witness;

    explicit operator bool() const noexcept { return satisfiable; }
};

/// A finite interpretation read off a complete, clash-free completion graph.
struct FiniteModel {
    std::size_t size = 0;
    std::map<Iri, std::set<std::size_t>> concepts;
    std::map<Iri, std::set<std::pair<std::size_t, std::size_t>>> roles;
    std::map<Iri, std::size_t> individuals;
    /// Element corresponding to the graph's first node.
    std::size_t root = 0;
};

/// Folds blocked nodes onto their blockers. Defined concepts are interpreted
/// through their definitions; transitive roles and the role hierarchy are closed.
FiniteModel foldToModel(const CompletionGraph& witness, const NormalizedTBox& tbox);

SatResult isSatisfiable(const Concept& c, const NormalizedTBox& tbox, const ReasonerLimits& limits = {});

/// `c ⊑ d` iff `c ⊓ ¬d` is unsatisfiable.
bool isSubsumedBy(const Concept& c, const Concept& d, const NormalizedTBox& tbox, const ReasonerLimits& limits = {});

/// ABox consistency: one root node per individual, no unique-name assumption.
bool isConsistent(const Ontology& o, const ReasonerLimits& limits = {});

/// Inferred taxonomy over all named concepts.
Taxonomy classify(const Ontology& o, const ReasonerLimits& limits = {});

/// Most specific named concepts per individual. Throws InconsistentOntology.
std::map<Iri, std::set<Iri>> realize(const Ontology& o, const ReasonerLimits& limits = {});

/// Individuals entailed to be instances of `c`. Throws InconsistentOntology.
std::set<Iri> instancesOf(const Concept& c, const Ontology& o, const ReasonerLimits& limits = {});

/// Adds the inverse of every role assertion implied by the role hierarchy,
/// to a fixpoint. Idempotent.
Ontology materializeInverses(const Ontology& o);

/// Caches normalization of one ontology across many queries.
class Reasoner {
public:
    explicit Reasoner(const Ontology& o, ReasonerLimits limits = {});

    const NormalizedTBox& tbox() const noexcept { return tbox_; }
    const ReasonerLimits& limits() const noexcept { return limits_; }

    SatResult isSatisfiable(const Concept& c) const;
    bool isSubsumedBy(const Concept& c, const Concept& d) const;
    bool isConsistent() const;
    /// True iff the ontology entails that `individual` is an instance of `c`.
    bool isInstance(const Iri& individual, const Concept& c) const;
    Taxonomy classify() const;
    std::map<Iri, std::set<Iri>> realize() const;
    std::map<Iri, std::set<Iri>> realize(const Taxonomy& inferred) const;
    std::set<Iri> instancesOf(const Concept& c) const;

private:
    struct Assertions {
        std::vector<std::pair<Iri, Concept>> types;
        std::vector<std::tuple<Iri, Iri, Iri>> links;  // role, subject, object
        std::set<Iri> individuals;
    };

    bool consistentWith(const std::optional<std::pair<Iri, Concept>>& extra) const;
    void requireConsistent() const;

    NormalizedTBox tbox_;
    ReasonerLimits limits_;
    Assertions abox_;
    std::set<Iri> namedConcepts_;
    std::set<std::pair<Iri, Iri>> told_;
};

}  // namespace ontokit
