#pragma once

#include "ontokit/ontology.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontokit {

/// 1-based; columns count UTF-8 code points.
struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

enum class ParseErrorKind : std::uint8_t {
    LexError,
    UnexpectedToken,
    /// A recognized OWL construct outside the supported subset.
    UnknownConstruct,
    UndeclaredPrefix,
    DuplicateOntology,
    /// Strict mode only.
    UndeclaredEntity,
};

std::string_view toString(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, SourceLocation location, std::string message);

    ParseErrorKind kind() const noexcept { return kind_; }
    const SourceLocation& location() const noexcept { return location_; }
    const std::string& message() const noexcept { return message_; }

private:
    ParseErrorKind kind_;
    SourceLocation location_;
    std::string message_;
};

enum class TokenKind : std::uint8_t {
    Keyword,
    IriRef,
    PrefixedName,
    StringLiteral,
    CaretCaret,
    OpenParen,
    CloseParen,
    Equals,
    Eof,
};

struct Token {
    TokenKind kind;
    /// IriRef: the IRI without angle brackets. StringLiteral: the unescaped value.
    std::string text;
    SourceLocation location;
};

/// Splits functional-syntax text into tokens ending with Eof. `#` starts a
/// comment running to the end of the line. Throws ParseError (LexError).
std::vector<Token> tokenize(std::string_view input);

struct ParseOptions {
    DeclarationMode mode = DeclarationMode::Lenient;
};

/// Parses a complete document: `Prefix(...)*` followed by one `Ontology(...)`.
/// The first error aborts with a ParseError.
Ontology parse(std::string_view input, const ParseOptions& options = {});

/// Parses a single class expression, resolving prefixed names with `prefixes`.
Concept parseConcept(std::string_view input, const PrefixMap& prefixes);

/// Canonical text: prefixes sorted, declarations grouped by entity kind, then
/// logical axioms, assertions and annotations, each group sorted by axiom text.
std::string serialize(const Ontology& o);

std::string serializeAxiom(const Axiom& axiom, const PrefixMap& prefixes);
std::string serializeConcept(const Concept& c, const PrefixMap& prefixes);
/// Shortest prefixed form when one exists, otherwise `<iri>`.
std::string abbreviate(const Iri& iri, const PrefixMap& prefixes);

}  // namespace ontokit
