#pragma once

#include "ontokit/analysis.hpp"
#include "ontokit/ontology.hpp"

#include <string>
#include <vector>

namespace ontokit::fixture {

inline constexpr std::string_view kDiseaseIri = "http://www.disintel.lk/ontologies/disease.owl";

enum class Provenance : std::uint8_t {
    /// Stated directly in the source description of the ontology.
    Source,
    /// Filled in where the source is silent or contradicts itself.
    Reconstruction,
};

struct LedgerEntry {
    Axiom axiom;
    Provenance provenance;
    std::string note;
};

/// Every axiom of the disease ontology with its provenance, in build order.
const std::vector<LedgerEntry>& diseaseLedger();

/// The disease ontology, built in strict declaration mode.
Ontology buildDiseaseFixture();

/// The three probe classes ProbeType1..3 and their superclass pairs.
std::vector<ProbeSpec> diseaseProbes();

/// Published entity counts the fixture is compared against, as `key value`
/// lines (see computeCounts for the keys).
std::string publishedCounts();

/// Ledger file text: one line per axiom, canonical axiom text, TAB, provenance.
std::string ledgerText();

/// Disease IRI for a local name, e.g. `iri("Virus")`.
Iri iri(std::string_view local);

}  // namespace ontokit::fixture
