#pragma once

#include "ontokit/iri.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace ontokit {

/// A transitively reduced DAG over equivalence groups of named concepts.
///
/// The top group always contains `owl:Thing` and the bottom group always
/// contains `owl:Nothing`; unsatisfiable concepts land in the bottom group.
/// Group 0 is the top group, the last group is the bottom group, and the
/// groups in between are ordered by their smallest member IRI.
class Taxonomy {
public:
    using Group = std::size_t;
    /// Returns true when the first concept is subsumed by the second.
    using SubsumptionTest = std::function<bool(const Iri& sub, const Iri& super)>;

    /// Builds the taxonomy over `concepts` (top and bottom are added when
    /// missing). `subsumedBy` need not be transitive; it is closed here.
    static Taxonomy build(const std::set<Iri>& concepts, const SubsumptionTest& subsumedBy);

    std::size_t groupCount() const noexcept { return groups_.size(); }
    const std::vector<Iri>& members(Group g) const { return groups_.at(g); }
    const std::set<Group>& parents(Group g) const { return parents_.at(g); }
    const std::set<Group>& children(Group g) const { return children_.at(g); }
    Group top() const noexcept { return 0; }
    Group bottom() const noexcept { return groups_.size() - 1; }

    bool contains(const Iri& name) const { return groupOf_.contains(name); }
    /// Throws std::out_of_range for unknown concepts.
    Group groupOf(const Iri& name) const { return groupOf_.at(name); }
    /// Every concept in the taxonomy, top and bottom included.
    std::set<Iri> concepts() const;

    /// Reflexive-transitive closure of the parent relation.
    bool subsumes(const Iri& super, const Iri& sub) const;
    /// Direct parents of `concept`'s group, as member IRIs.
    std::set<Iri> directParents(const Iri& name) const;
    /// All strict ancestors (equivalents excluded), as member IRIs.
    std::set<Iri> ancestors(const Iri& name) const;
    /// All strict descendants (equivalents excluded), as member IRIs.
    std::set<Iri> descendants(const Iri& name) const;

    friend bool operator==(const Taxonomy&, const Taxonomy&) = default;

private:
    std::vector<std::vector<Iri>> groups_;
    std::vector<std::set<Group>> parents_;
    std::vector<std::set<Group>> children_;
    std::map<Iri, Group> groupOf_;
    std::vector<std::vector<bool>> below_;  // below_[a][b]: group a ⊑ group b
};

}  // namespace ontokit
