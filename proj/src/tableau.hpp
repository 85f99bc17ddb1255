#pragma once

#include "ontokit/reasoner.hpp"

namespace ontokit::detail {

struct InitialNode {
    std::optional<Iri> individual;
    std::vector<Concept> label;
};

struct InitialEdge {
    std::size_t from;
    std::size_t to;
    Role role;
};

/// Runs the tableau from a graph of root nodes. Concepts need not be in NNF.
SatResult runTableau(const std::vector<InitialNode>& nodes, const std::vector<InitialEdge>& edges,
                     const NormalizedTBox& tbox, const ReasonerLimits& limits);

}  // namespace ontokit::detail
