#pragma once

#include "ontokit/iri.hpp"

#include <compare>
#include <memory>
#include <span>
#include <vector>

namespace ontokit {

/// A named role or the inverse of one. Double inversion collapses back to the
/// named role, so `InverseOf(InverseOf(r))` is never represented.
struct Role {
    Iri name;
    bool inverse = false;

    static Role named(Iri iri) { return Role{std::move(iri), false}; }
    static Role inverseOf(Iri iri) { return Role{std::move(iri), true}; }

    Role inverted() const { return Role{name, !inverse}; }

    friend bool operator==(const Role&, const Role&) = default;
    friend std::strong_ordering operator<=>(const Role&, const Role&) = default;
};

/// Immutable concept expression tree with structural equality and ordering.
///
/// Copies share the underlying nodes. The factories canonicalize `owl:Thing`
/// and `owl:Nothing` to Top and Bottom, and reject n-ary constructors with
/// fewer than two operands.
class Concept {
public:
    enum class Kind : std::uint8_t {
        Named,
        Top,
        Bottom,
        Intersection,
        Union,
        Complement,
        Existential,
        Universal,
    };

    static Concept named(Iri iri);
    static Concept top();
    static Concept bottom();
    static Concept intersection(std::vector<Concept> operands);
    static Concept unionOf(std::vector<Concept> operands);
    static Concept complement(Concept operand);
    static Concept some(Role role, Concept filler);
    static Concept all(Role role, Concept filler);

    Kind kind() const noexcept;

    /// Named only.
    const Iri& iri() const;
    /// Intersection and Union: all operands. Complement: the single operand.
    std::span<const Concept> operands() const noexcept;
    /// Existential and Universal only.
    const Role& role() const;
    /// Existential and Universal: the filler. Complement: the operand.
    const Concept& filler() const;

    bool isNamed() const noexcept { return kind() == Kind::Named; }

    friend bool operator==(const Concept& a, const Concept& b) noexcept;
    friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept;

private:
    struct Node;
    explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

}  // namespace ontokit
