#include "helpers.hpp"

#include "ontokit/ontology.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ontokit;
using namespace ontokit::testing;

TEST_CASE("iri validation and fragments") {
    CHECK(Iri::isValid("http://a.org/x#y"));
    CHECK(Iri::isValid("urn:isbn:123"));
    CHECK_FALSE(Iri::isValid(""));
    CHECK_FALSE(Iri::isValid("no-scheme"));
    CHECK_FALSE(Iri::isValid("http://a b"));
    CHECK_FALSE(Iri::isValid("http://a<b"));
    CHECK_THROWS_AS(Iri("relative/path"), std::invalid_argument);

    CHECK(Iri("http://a.org/x#y").fragment() == "y");
    CHECK(Iri("http://a.org/x/y").fragment() == "y");
    CHECK(Iri("urn:thing").fragment() == "thing");
    CHECK(Iri("http://a.org/b") < Iri("http://a.org/c"));
}

TEST_CASE("concept factories canonicalize and validate") {
    CHECK(Concept::named(vocab::thing()).kind() == Concept::Kind::Top);
    CHECK(Concept::named(vocab::nothing()).kind() == Concept::Kind::Bottom);
    CHECK_THROWS_AS(Concept::intersection({A("x")}), std::invalid_argument);
    CHECK_THROWS_AS(Concept::unionOf({}), std::invalid_argument);

    const Concept c = Concept::some(R("r"), Concept::intersection({A("x"), A("y")}));
    CHECK(c == Concept::some(R("r"), Concept::intersection({A("x"), A("y")})));
    CHECK(c != Concept::some(R("r"), Concept::intersection({A("y"), A("x")})));
    CHECK(c.role() == R("r"));
    CHECK(c.filler().operands().size() == 2);
    CHECK_THROWS(A("x").role());
}

TEST_CASE("role inversion is an involution") {
    const Role r = R("r");
    CHECK(r.inverted().inverse);
    CHECK(r.inverted().inverted() == r);
    CHECK(Role::inverseOf(ex("r")) == r.inverted());
}

TEST_CASE("ontology deduplicates and compares as a set") {
    Ontology a(ex("o"));
    CHECK(a.add(axioms::SubConceptOf{A("x"), A("y")}));
    CHECK_FALSE(a.add(axioms::SubConceptOf{A("x"), A("y")}));
    CHECK(a.add(axioms::SubConceptOf{A("y"), A("z")}));

    Ontology b(ex("o"));
    b.add(axioms::SubConceptOf{A("y"), A("z")});
    b.add(axioms::SubConceptOf{A("x"), A("y")});
    CHECK(a == b);
    CHECK(b.remove(axioms::SubConceptOf{A("x"), A("y")}));
    CHECK_FALSE(b.remove(axioms::SubConceptOf{A("x"), A("y")}));
    CHECK(a != b);

    const Ontology c = addAxiom(b, axioms::SubConceptOf{A("x"), A("y")});
    CHECK(c == a);
    // Lenient adds also recorded the auto-declarations of x, y and z.
    CHECK(b.size() == 4);
    CHECK(a.size() == 5);
}

TEST_CASE("lenient mode declares on the fly, strict mode refuses") {
    Ontology lenient(ex("o"));
    lenient.add(axioms::SubConceptOf{A("x"), Concept::some(R("r"), A("y"))});
    CHECK(lenient.isDeclared(Entity{EntityKind::Concept, ex("x")}));
    CHECK(lenient.isDeclared(Entity{EntityKind::ObjectRole, ex("r")}));
    CHECK_FALSE(lenient.warnings().empty());

    Ontology strict(ex("o"), DeclarationMode::Strict);
    strict.add(axioms::Declaration{{EntityKind::Concept, ex("x")}});
    CHECK_THROWS_AS(strict.add(axioms::SubConceptOf{A("x"), A("y")}), UndeclaredEntity);
    CHECK(strict.size() == 1);
}

TEST_CASE("signature, counts and usages") {
    const Ontology o = doc(R"(
Declaration(Class(:A))
Declaration(Class(:B))
Declaration(ObjectProperty(:r))
Declaration(DataProperty(:d))
Declaration(NamedIndividual(:i))
SubClassOf(:A ObjectSomeValuesFrom(:r owl:Thing))
SubClassOf(:B :A)
ClassAssertion(:B :i)
DataPropertyAssertion(:d :i "v")
)");
    const auto sig = signature(o);
    CHECK(sig.contains(Entity{EntityKind::Concept, ex("A")}));
    CHECK_FALSE(sig.contains(Entity{EntityKind::Concept, vocab::thing()}));

    const EntityCounts counts = computeCounts(o);
    CHECK(counts.concepts == 2);
    CHECK(counts.conceptsIncludingThing() == 3);
    CHECK(counts.objectRoles == 1);
    CHECK(counts.dataRoles == 1);
    CHECK(counts.individuals == 1);

    const auto usedA = usages(Entity{EntityKind::Concept, ex("A")}, o);
    // The declaration and both subclass axioms.
    CHECK(usedA.size() == 3);
    CHECK_THROWS_AS(usages(Entity{EntityKind::Concept, ex("Zzz")}, o), std::invalid_argument);
}

TEST_CASE("axiom validation and referenced entities") {
    CHECK_THROWS_AS(validate(axioms::DisjointConcepts{{A("x")}}), std::invalid_argument);
    CHECK_NOTHROW(validate(axioms::DisjointConcepts{{A("x"), A("y")}}));

    const auto refs = referencedEntities(axioms::RoleAssertion{ex("r"), ex("a"), ex("b")});
    CHECK(refs.size() == 3);
    CHECK(std::ranges::count(refs, EntityKind::Individual, &Entity::kind) == 2);
    const auto annotation = referencedEntities(axioms::AnnotationAssertion{ex("p"), ex("s"), {"v"}});
    CHECK(std::ranges::find(annotation, Entity{EntityKind::AnnotationRole, ex("p")}) != annotation.end());
    CHECK(std::ranges::none_of(annotation, [](const Entity& e) { return e.iri == ex("s"); }));

    CHECK(isLogical(axioms::SubConceptOf{A("x"), A("y")}));
    CHECK_FALSE(isLogical(axioms::AnnotationAssertion{ex("p"), ex("s"), {"v"}}));
    CHECK_FALSE(isLogical(axioms::Declaration{{EntityKind::Concept, ex("x")}}));
}
