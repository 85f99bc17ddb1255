#include "ontokit/concept.hpp"

#include <optional>
#include <stdexcept>

namespace ontokit {

struct Concept::Node {
    Kind kind;
    std::optional<Iri> iri;
    std::optional<Role> role;
    std::vector<Concept> operands;
};

Concept Concept::named(Iri iri) {
    if (iri == vocab::thing()) return top();
    if (iri == vocab::nothing()) return bottom();
    return Concept(std::make_shared<const Node>(Node{Kind::Named, std::move(iri), std::nullopt, {}}));
}

Concept Concept::top() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Top, std::nullopt, std::nullopt, {}});
    return Concept(node);
}

Concept Concept::bottom() {
    static const auto node = std::make_shared<const Node>(Node{Kind::Bottom, std::nullopt, std::nullopt, {}});
    return Concept(node);
}

Concept Concept::intersection(std::vector<Concept> operands) {
    if (operands.size() < 2) throw std::invalid_argument("intersection needs at least two operands");
    return Concept(std::make_shared<const Node>(Node{Kind::Intersection, std::nullopt, std::nullopt, std::move(operands)}));
}

Concept Concept::unionOf(std::vector<Concept> operands) {
    if (operands.size() < 2) throw std::invalid_argument("union needs at least two operands");
    return Concept(std::make_shared<const Node>(Node{Kind::Union, std::nullopt, std::nullopt, std::move(operands)}));
}

Concept Concept::complement(Concept operand) {
    return Concept(std::make_shared<const Node>(Node{Kind::Complement, std::nullopt, std::nullopt, {std::move(operand)}}));
}

Concept Concept::some(Role role, Concept filler) {
    return Concept(std::make_shared<const Node>(Node{Kind::Existential, std::nullopt, std::move(role), {std::move(filler)}}));
}

Concept Concept::all(Role role, Concept filler) {
    return Concept(std::make_shared<const Node>(Node{Kind::Universal, std::nullopt, std::move(role), {std::move(filler)}}));
}

Concept::Kind Concept::kind() const noexcept { return node_->kind; }

const Iri& Concept::iri() const {
    if (!node_->iri) throw std::logic_error("iri() on an unnamed concept");
    return *node_->iri;
}

std::span<const Concept> Concept::operands() const noexcept {
    switch (node_->kind) {
        case Kind::Intersection:
        case Kind::Union:
        case Kind::Complement:
            return node_->operands;
        default:
            return {};
    }
}

const Role& Concept::role() const {
    if (!node_->role) throw std::logic_error("role() on a concept without a role");
    return *node_->role;
}

const Concept& Concept::filler() const {
    if (node_->operands.size() != 1 || node_->kind == Kind::Intersection || node_->kind == Kind::Union)
        throw std::logic_error("filler() on a concept without a filler");
    return node_->operands.front();
}

bool operator==(const Concept& a, const Concept& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.iri <=> y.iri; c != 0) return c;
    if (auto c = x.role <=> y.role; c != 0) return c;
    return std::lexicographical_compare_three_way(x.operands.begin(), x.operands.end(), y.operands.begin(),
                                                  y.operands.end());
}

}  // namespace ontokit
