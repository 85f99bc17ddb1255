#pragma once

#include "ontokit/fixture.hpp"
#include "ontokit/parser.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace ontokit::testing {

inline const std::filesystem::path kFixtures = ONTOKIT_FIXTURES_DIR;

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Iri ex(std::string_view local) { return Iri("http://example.org/t#" + std::string(local)); }
inline Concept A(std::string_view local) { return Concept::named(ex(local)); }
inline Role R(std::string_view local) { return Role::named(ex(local)); }

inline const std::string kPrologue =
    "Prefix(:=<http://example.org/t#>)\n"
    "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
    "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
    "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n";

/// Parses a document body written against `:` = http://example.org/t# and
/// the owl, rdfs and xsd prefixes.
inline Ontology doc(std::string_view body, DeclarationMode mode = DeclarationMode::Lenient) {
    return parse(kPrologue + "Ontology(<http://example.org/t>\n" + std::string(body) + "\n)", {mode});
}

}  // namespace ontokit::testing
