#pragma once

#include "ontokit/ontology.hpp"
#include "ontokit/taxonomy.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ontokit {

/// Page sections, in the order they appear on a page.
enum class Heading : std::uint8_t {
    AssertedSuperclasses,
    InferredSuperclasses,
    EquivalentTo,
    DisjointWith,
    SubProperties,
    InverseOf,
    DomainOf,
    RangeOf,
    Members,
    PropertyAssertions,
    Annotations,
    Usage,
};

/// Display label of a heading on a page for an entity of `kind`.
std::string_view headingLabel(Heading heading, EntityKind kind);

/// One statement as HTML (with links) and as plain text.
struct RenderedEntry {
    std::string html;
    std::string text;

    friend bool operator==(const RenderedEntry&, const RenderedEntry&) = default;
};

struct RenderedSection {
    Heading heading;
    std::vector<RenderedEntry> entries;

    friend bool operator==(const RenderedSection&, const RenderedSection&) = default;
};

struct SiteDocument {
    std::string relativePath;
    std::string title;
    std::vector<RenderedSection> sections;
    std::string html;

    const RenderedSection* section(Heading heading) const;
    friend bool operator==(const SiteDocument&, const SiteDocument&) = default;
};

/// Maps an entity IRI to its page, or nothing when it has no page.
using LinkResolver = std::function<std::optional<std::string>(const Iri&, EntityKind)>;

/// DL notation: ⊓ ⊔ ¬ ∃r.C ∀r.C ⊤ ⊥ and r⁻, parenthesized only where needed.
RenderedEntry renderExpression(const Concept& c, const LinkResolver& links = {});

/// Page file names for every declared entity: sanitized fragment plus
/// ".html", collisions numbered -2, -3, ... in (IRI, kind) order.
std::map<Entity, std::string> pagePaths(const Ontology& o);

/// Documents sorted by path; `realization` maps individuals to their most
/// specific concepts and feeds the Members sections.
std::vector<SiteDocument> generateSite(const Ontology& o, const Taxonomy& inferred, const Taxonomy& asserted,
                                       const std::map<Iri, std::set<Iri>>& realization = {});

struct LinkReport {
    std::size_t totalLinks = 0;
    std::size_t brokenLinks = 0;
    std::vector<std::pair<std::string, std::string>> brokenList;  // (source, target)
};

/// Checks every relative href against the document paths.
LinkReport verifyLinks(const std::vector<SiteDocument>& docs);

/// Writes each document below `dir`, creating it if needed.
void writeSite(const std::filesystem::path& dir, const std::vector<SiteDocument>& docs);

/// Removes markup and decodes the entities emitted by the generator.
std::string stripTags(std::string_view html);

}  // namespace ontokit
