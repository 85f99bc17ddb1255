#include "ontokit/parser.hpp"

#include "overloaded.hpp"

#include <algorithm>
#include <array>

namespace ontokit {

using detail::Overloaded;

namespace {

bool isLocalName(std::string_view s) {
    return std::ranges::all_of(s, [](char c) {
        auto u = static_cast<unsigned char>(c);
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-' || c == '.' || u >= 0x80;
    });
}

std::string quote(const Literal& lit, const PrefixMap& prefixes) {
    std::string out = "\"";
    for (char c : lit.lexical) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    if (lit.datatype != vocab::plainText()) out += "^^" + abbreviate(lit.datatype, prefixes);
    return out;
}

std::string role(const Role& r, const PrefixMap& prefixes) {
    std::string name = abbreviate(r.name, prefixes);
    return r.inverse ? "ObjectInverseOf(" + name + ")" : name;
}

void writeConcept(const Concept& c, const PrefixMap& prefixes, std::string& out) {
    const auto nary = [&](std::string_view keyword) {
        out += keyword;
        out += '(';
        bool first = true;
        for (const auto& op : c.operands()) {
            if (!first) out += ' ';
            first = false;
            writeConcept(op, prefixes, out);
        }
        out += ')';
    };
    switch (c.kind()) {
        case Concept::Kind::Named: out += abbreviate(c.iri(), prefixes); break;
        case Concept::Kind::Top: out += abbreviate(vocab::thing(), prefixes); break;
        case Concept::Kind::Bottom: out += abbreviate(vocab::nothing(), prefixes); break;
        case Concept::Kind::Intersection: nary("ObjectIntersectionOf"); break;
        case Concept::Kind::Union: nary("ObjectUnionOf"); break;
        case Concept::Kind::Complement: nary("ObjectComplementOf"); break;
        case Concept::Kind::Existential:
        case Concept::Kind::Universal:
            out += c.kind() == Concept::Kind::Existential ? "ObjectSomeValuesFrom(" : "ObjectAllValuesFrom(";
            out += role(c.role(), prefixes);
            out += ' ';
            writeConcept(c.filler(), prefixes, out);
            out += ')';
            break;
    }
}

std::string concepts(std::string_view keyword, const std::vector<Concept>& members, const PrefixMap& prefixes) {
    std::string out(keyword);
    out += '(';
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ' ';
        writeConcept(members[i], prefixes, out);
    }
    out += ')';
    return out;
}

// Emission groups: six declaration kinds, logical axioms, assertions, annotations.
int group(const Axiom& axiom) {
    return std::visit(Overloaded{
                          [](const axioms::Declaration& d) { return static_cast<int>(d.entity.kind); },
                          [](const axioms::ConceptAssertion&) { return 7; },
                          [](const axioms::RoleAssertion&) { return 7; },
                          [](const axioms::DataAssertion&) { return 7; },
                          [](const axioms::AnnotationAssertion&) { return 8; },
                          [](const auto&) { return 6; },
                      },
                      axiom);
}

}  // namespace

std::string abbreviate(const Iri& iri, const PrefixMap& prefixes) {
    const std::string& text = iri.str();
    const std::pair<const std::string, std::string>* best = nullptr;
    for (const auto& entry : prefixes) {
        const std::string& expansion = entry.second;
        if (!text.starts_with(expansion) || !isLocalName(std::string_view(text).substr(expansion.size()))) continue;
        if (!best || expansion.size() > best->second.size()) best = &entry;
    }
    if (!best) return "<" + text + ">";
    return best->first + ":" + text.substr(best->second.size());
}

std::string serializeConcept(const Concept& c, const PrefixMap& prefixes) {
    std::string out;
    writeConcept(c, prefixes, out);
    return out;
}

std::string serializeAxiom(const Axiom& axiom, const PrefixMap& prefixes) {
    const auto name = [&](const Iri& i) { return abbreviate(i, prefixes); };
    const auto expr = [&](const Concept& c) { return serializeConcept(c, prefixes); };
    return std::visit(
        Overloaded{
            [&](const axioms::SubConceptOf& a) { return "SubClassOf(" + expr(a.sub) + " " + expr(a.super) + ")"; },
            [&](const axioms::EquivalentConcepts& a) { return concepts("EquivalentClasses", a.members, prefixes); },
            [&](const axioms::DisjointConcepts& a) { return concepts("DisjointClasses", a.members, prefixes); },
            [&](const axioms::SubRoleOf& a) {
                return "SubObjectPropertyOf(" + name(a.sub) + " " + name(a.super) + ")";
            },
            [&](const axioms::InverseRoles& a) {
                return "InverseObjectProperties(" + name(a.first) + " " + name(a.second) + ")";
            },
            [&](const axioms::TransitiveRole& a) { return "TransitiveObjectProperty(" + name(a.role) + ")"; },
            [&](const axioms::RoleDomain& a) {
                return "ObjectPropertyDomain(" + name(a.role) + " " + expr(a.domain) + ")";
            },
            [&](const axioms::RoleRange& a) {
                return "ObjectPropertyRange(" + name(a.role) + " " + expr(a.range) + ")";
            },
            [&](const axioms::ConceptAssertion& a) {
                return "ClassAssertion(" + expr(a.type) + " " + name(a.individual) + ")";
            },
            [&](const axioms::RoleAssertion& a) {
                return "ObjectPropertyAssertion(" + name(a.role) + " " + name(a.subject) + " " + name(a.object) + ")";
            },
            [&](const axioms::DataAssertion& a) {
                return "DataPropertyAssertion(" + name(a.role) + " " + name(a.subject) + " " +
                       quote(a.value, prefixes) + ")";
            },
            [&](const axioms::AnnotationAssertion& a) {
                return "AnnotationAssertion(" + name(a.property) + " " + name(a.subject) + " " +
                       quote(a.value, prefixes) + ")";
            },
            [&](const axioms::Declaration& a) {
                return "Declaration(" + std::string(toString(a.entity.kind)) + "(" + name(a.entity.iri) + "))";
            },
        },
        axiom);
}

std::string serialize(const Ontology& o) {
    std::array<std::vector<std::string>, 9> groups;
    for (const auto& axiom : o.axioms()) groups[group(axiom)].push_back(serializeAxiom(axiom, o.prefixes()));

    std::string out;
    for (const auto& [prefix, expansion] : o.prefixes()) out += "Prefix(" + prefix + ":=<" + expansion + ">)\n";
    out += "Ontology(<" + o.iri().str() + ">\n";
    for (auto& g : groups) {
        std::ranges::sort(g);
        for (const auto& line : g) out += line + "\n";
    }
    out += ")\n";
    return out;
}

}  // namespace ontokit
