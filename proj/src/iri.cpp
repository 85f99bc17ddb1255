#include "ontokit/iri.hpp"

namespace ontokit {

namespace {

bool isSchemeChar(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '+' ||
           c == '-' || c == '.';
}

bool isAlpha(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

}  // namespace

bool Iri::isValid(std::string_view text) noexcept {
    if (text.empty() || !isAlpha(text.front())) return false;
    std::size_t i = 1;
    while (i < text.size() && isSchemeChar(text[i])) ++i;
    if (i >= text.size() || text[i] != ':') return false;
    for (char c : text) {
        auto u = static_cast<unsigned char>(c);
        if (u <= 0x20 || u == 0x7f || c == '<' || c == '>' || c == '"') return false;
    }
    return true;
}

Iri::Iri(std::string text) : value_(std::move(text)) {
    if (!isValid(value_)) throw std::invalid_argument("invalid IRI: '" + value_ + "'");
}

std::string_view Iri::fragment() const noexcept {
    std::string_view v = value_;
    if (auto hash = v.rfind('#'); hash != std::string_view::npos) return v.substr(hash + 1);
    if (auto slash = v.rfind('/'); slash != std::string_view::npos) return v.substr(slash + 1);
    return v.substr(v.find(':') + 1);
}

namespace vocab {

Iri thing() { return Iri(std::string(kOwl) + "Thing"); }
Iri nothing() { return Iri(std::string(kOwl) + "Nothing"); }
Iri plainText() { return Iri(std::string(kXsd) + "string"); }

}  // namespace vocab

}  // namespace ontokit
