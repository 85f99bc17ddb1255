#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ontokit {

/// Absolute IRI. Equality and ordering are on the full text.
class Iri {
public:
    /// Throws std::invalid_argument unless `text` is a non-empty absolute IRI
    /// (scheme followed by ':') without whitespace or `<>"` characters.
    explicit Iri(std::string text);

    static bool isValid(std::string_view text) noexcept;

    const std::string& str() const noexcept { return value_; }

    /// Text after the last '#', else after the last '/', else after the scheme.
    std::string_view fragment() const noexcept;

    friend bool operator==(const Iri&, const Iri&) = default;
    friend std::strong_ordering operator<=>(const Iri& a, const Iri& b) noexcept {
        return a.value_.compare(b.value_) <=> 0;
    }

private:
    std::string value_;
};

namespace vocab {
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

Iri thing();
Iri nothing();
/// Datatype assumed for literals written without `^^`.
Iri plainText();
}  // namespace vocab

}  // namespace ontokit
