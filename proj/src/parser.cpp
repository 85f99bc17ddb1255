#include "ontokit/parser.hpp"

#include <array>
#include <optional>
#include <utility>

namespace ontokit {

namespace {

constexpr std::size_t kMaxNesting = 512;

// OWL 2 constructs the grammar recognizes but does not support.
constexpr std::array kUnsupported = {
    "Import",
    "Annotation",
    "ObjectMinCardinality",
    "ObjectMaxCardinality",
    "ObjectExactCardinality",
    "ObjectHasValue",
    "ObjectHasSelf",
    "ObjectOneOf",
    "ObjectPropertyChain",
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
    "DataHasValue",
    "DataMinCardinality",
    "DataMaxCardinality",
    "DataExactCardinality",
    "DataIntersectionOf",
    "DataUnionOf",
    "DataComplementOf",
    "DataOneOf",
    "DatatypeRestriction",
    "DisjointUnion",
    "EquivalentObjectProperties",
    "DisjointObjectProperties",
    "FunctionalObjectProperty",
    "InverseFunctionalObjectProperty",
    "ReflexiveObjectProperty",
    "IrreflexiveObjectProperty",
    "SymmetricObjectProperty",
    "AsymmetricObjectProperty",
    "SubDataPropertyOf",
    "EquivalentDataProperties",
    "DisjointDataProperties",
    "DataPropertyDomain",
    "DataPropertyRange",
    "FunctionalDataProperty",
    "DatatypeDefinition",
    "HasKey",
    "SameIndividual",
    "DifferentIndividuals",
    "NegativeObjectPropertyAssertion",
    "NegativeDataPropertyAssertion",
    "SubAnnotationPropertyOf",
    "AnnotationPropertyDomain",
    "AnnotationPropertyRange",
};

bool isUnsupported(std::string_view keyword) {
    for (std::string_view k : kUnsupported)
        if (k == keyword) return true;
    return false;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::Eof: return "end of input";
        case TokenKind::IriRef: return "'<" + t.text + ">'";
        case TokenKind::StringLiteral: return "string \"" + t.text + "\"";
        default: return "'" + t.text + "'";
    }
}

struct LocatedAxiom {
    Axiom axiom;
    SourceLocation location;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, PrefixMap prefixes) : tokens_(std::move(tokens)), prefixes_(std::move(prefixes)) {}

    Ontology document(const ParseOptions& options) {
        while (isKeyword("Prefix")) prefixDeclaration();

        if (!isKeyword("Ontology")) unexpected("'Ontology'");
        next();
        expect(TokenKind::OpenParen, "'('");
        if (peek().kind != TokenKind::IriRef && peek().kind != TokenKind::PrefixedName) unexpected("ontology IRI");
        Iri ontologyIri = iri();

        std::vector<LocatedAxiom> parsed;
        while (peek().kind != TokenKind::CloseParen) {
            SourceLocation at = peek().location;
            parsed.push_back({axiom(), at});
        }
        next();

        if (isKeyword("Ontology"))
            throw ParseError(ParseErrorKind::DuplicateOntology, peek().location, "second 'Ontology' in document");
        if (peek().kind != TokenKind::Eof) unexpected("end of input");

        Ontology o(std::move(ontologyIri), options.mode);
        for (auto& [p, e] : prefixes_) o.setPrefix(p, e);
        // Declarations first so that strict mode accepts use-before-declare.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& [ax, at] : parsed) {
                bool isDecl = std::holds_alternative<axioms::Declaration>(ax);
                if (isDecl != (pass == 0)) continue;
                try {
                    o.add(ax);
                } catch (const UndeclaredEntity& e) {
                    throw ParseError(ParseErrorKind::UndeclaredEntity, at, e.what());
                }
            }
        }
        return o;
    }

    Concept standaloneConcept() {
        Concept c = classExpression();
        if (peek().kind != TokenKind::Eof) unexpected("end of input");
        return c;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::Eof) ++pos_;
        return t;
    }
    bool isKeyword(std::string_view k) const { return peek().kind == TokenKind::Keyword && peek().text == k; }

    [[noreturn]] void unexpected(std::string_view expected) const {
        const Token& t = peek();
        throw ParseError(ParseErrorKind::UnexpectedToken, t.location,
                         "expected " + std::string(expected) + " but found " + describe(t));
    }

    const Token& expect(TokenKind kind, std::string_view what) {
        if (peek().kind != kind) unexpected(what);
        return next();
    }

    void prefixDeclaration() {
        next();
        expect(TokenKind::OpenParen, "'('");
        const Token& name = expect(TokenKind::PrefixedName, "prefix name");
        if (name.text.back() != ':' || name.text.find(':') != name.text.size() - 1)
            throw ParseError(ParseErrorKind::UnexpectedToken, name.location,
                             "expected prefix name ending in ':' but found '" + name.text + "'");
        std::string prefix = name.text.substr(0, name.text.size() - 1);
        expect(TokenKind::Equals, "'='");
        const Token& target = expect(TokenKind::IriRef, "full IRI");
        prefixes_[prefix] = target.text;
        expect(TokenKind::CloseParen, "')'");
    }

    Iri iri() {
        const Token& t = peek();
        if (t.kind == TokenKind::IriRef) {
            next();
            return Iri(t.text);
        }
        if (t.kind == TokenKind::PrefixedName) {
            auto colon = t.text.find(':');
            std::string prefix = t.text.substr(0, colon);
            auto it = prefixes_.find(prefix);
            if (it == prefixes_.end())
                throw ParseError(ParseErrorKind::UndeclaredPrefix, t.location, "undeclared prefix '" + prefix + ":'");
            std::string full = it->second + t.text.substr(colon + 1);
            if (!Iri::isValid(full))
                throw ParseError(ParseErrorKind::LexError, t.location, "'" + t.text + "' expands to an invalid IRI");
            next();
            return Iri(std::move(full));
        }
        if (t.kind == TokenKind::Keyword && isUnsupported(t.text)) unsupported(t);
        unexpected("IRI");
    }

    [[noreturn]] void unsupported(const Token& t) const {
        throw ParseError(ParseErrorKind::UnknownConstruct, t.location,
                         "'" + t.text + "' is not supported by this reader");
    }

    void open() { expect(TokenKind::OpenParen, "'('"); }
    void close() { expect(TokenKind::CloseParen, "')'"); }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxNesting)
                throw ParseError(ParseErrorKind::UnexpectedToken, p.peek().location, "expression nesting too deep");
        }
        ~DepthGuard() { --p.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
    };

    Role role() {
        if (isKeyword("ObjectInverseOf")) {
            next();
            open();
            Iri r = iri();
            close();
            return Role::inverseOf(std::move(r));
        }
        return Role::named(iri());
    }

    std::vector<Concept> conceptList(std::size_t minimum) {
        std::vector<Concept> out;
        while (peek().kind != TokenKind::CloseParen || out.size() < minimum) out.push_back(classExpression());
        return out;
    }

    Concept classExpression() {
        DepthGuard guard(*this);
        const Token& t = peek();
        if (t.kind == TokenKind::IriRef || t.kind == TokenKind::PrefixedName) return Concept::named(iri());
        if (t.kind != TokenKind::Keyword) unexpected("class expression");
        std::string k = t.text;
        if (k == "ObjectIntersectionOf" || k == "ObjectUnionOf") {
            next();
            open();
            auto ops = conceptList(2);
            close();
            return k == "ObjectUnionOf" ? Concept::unionOf(std::move(ops)) : Concept::intersection(std::move(ops));
        }
        if (k == "ObjectComplementOf") {
            next();
            open();
            Concept c = classExpression();
            close();
            return Concept::complement(std::move(c));
        }
        if (k == "ObjectSomeValuesFrom" || k == "ObjectAllValuesFrom") {
            next();
            open();
            Role r = role();
            Concept c = classExpression();
            close();
            return k == "ObjectSomeValuesFrom" ? Concept::some(std::move(r), std::move(c))
                                               : Concept::all(std::move(r), std::move(c));
        }
        if (isUnsupported(k)) unsupported(t);
        unexpected("class expression");
    }

    Iri namedRole() {
        if (isKeyword("ObjectInverseOf") || isKeyword("ObjectPropertyChain")) unsupported(peek());
        return iri();
    }

    Literal literal() {
        const Token& t = expect(TokenKind::StringLiteral, "literal");
        Literal lit{t.text};
        if (peek().kind == TokenKind::CaretCaret) {
            next();
            lit.datatype = iri();
        }
        return lit;
    }

    Axiom declaration() {
        open();
        const Token& t = peek();
        if (t.kind != TokenKind::Keyword) unexpected("entity kind");
        static constexpr std::array<std::pair<std::string_view, EntityKind>, 6> kinds = {{
            {"Class", EntityKind::Concept},
            {"ObjectProperty", EntityKind::ObjectRole},
            {"DataProperty", EntityKind::DataRole},
            {"AnnotationProperty", EntityKind::AnnotationRole},
            {"NamedIndividual", EntityKind::Individual},
            {"Datatype", EntityKind::Datatype},
        }};
        std::optional<EntityKind> kind;
        for (auto [name, k] : kinds)
            if (t.text == name) kind = k;
        if (!kind) unexpected("entity kind");
        next();
        open();
        Iri i = iri();
        close();
        close();
        return axioms::Declaration{Entity{*kind, std::move(i)}};
    }

    Axiom axiom() {
        const Token& t = peek();
        if (t.kind != TokenKind::Keyword) unexpected("axiom");
        std::string k = t.text;
        if (isUnsupported(k)) unsupported(t);
        next();

        if (k == "Declaration") return declaration();

        open();
        Axiom result = [&]() -> Axiom {
            if (k == "SubClassOf") {
                Concept sub = classExpression();
                Concept sup = classExpression();
                return axioms::SubConceptOf{std::move(sub), std::move(sup)};
            }
            if (k == "EquivalentClasses") return axioms::EquivalentConcepts{conceptList(2)};
            if (k == "DisjointClasses") return axioms::DisjointConcepts{conceptList(2)};
            if (k == "SubObjectPropertyOf") {
                Iri sub = namedRole();
                Iri sup = namedRole();
                return axioms::SubRoleOf{std::move(sub), std::move(sup)};
            }
            if (k == "InverseObjectProperties") {
                Iri a = namedRole();
                Iri b = namedRole();
                return axioms::InverseRoles{std::move(a), std::move(b)};
            }
            if (k == "TransitiveObjectProperty") return axioms::TransitiveRole{namedRole()};
            if (k == "ObjectPropertyDomain") {
                Iri r = namedRole();
                return axioms::RoleDomain{std::move(r), classExpression()};
            }
            if (k == "ObjectPropertyRange") {
                Iri r = namedRole();
                return axioms::RoleRange{std::move(r), classExpression()};
            }
            if (k == "ClassAssertion") {
                Concept c = classExpression();
                return axioms::ConceptAssertion{std::move(c), iri()};
            }
            if (k == "ObjectPropertyAssertion") {
                Iri r = namedRole();
                Iri s = iri();
                return axioms::RoleAssertion{std::move(r), std::move(s), iri()};
            }
            if (k == "DataPropertyAssertion") {
                Iri r = iri();
                Iri s = iri();
                return axioms::DataAssertion{std::move(r), std::move(s), literal()};
            }
            if (k == "AnnotationAssertion") {
                Iri p = iri();
                Iri s = iri();
                return axioms::AnnotationAssertion{std::move(p), std::move(s), literal()};
            }
            throw ParseError(ParseErrorKind::UnexpectedToken, t.location, "unknown axiom '" + k + "'");
        }();
        close();
        return result;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
    PrefixMap prefixes_;
};

}  // namespace

std::string_view toString(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::LexError: return "LexError";
        case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
        case ParseErrorKind::UnknownConstruct: return "UnknownConstruct";
        case ParseErrorKind::UndeclaredPrefix: return "UndeclaredPrefix";
        case ParseErrorKind::DuplicateOntology: return "DuplicateOntology";
        case ParseErrorKind::UndeclaredEntity: return "UndeclaredEntity";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, SourceLocation location, std::string message)
    : std::runtime_error(std::to_string(location.line) + ":" + std::to_string(location.column) + ": " +
                         std::string(toString(kind)) + ": " + message),
      kind_(kind),
      location_(location),
      message_(std::move(message)) {}

Ontology parse(std::string_view input, const ParseOptions& options) {
    return Parser(tokenize(input), {}).document(options);
}

Concept parseConcept(std::string_view input, const PrefixMap& prefixes) {
    return Parser(tokenize(input), prefixes).standaloneConcept();
}

}  // namespace ontokit
