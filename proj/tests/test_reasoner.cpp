#include "helpers.hpp"
#include "support/model_finder.hpp"

#include "ontokit/reasoner.hpp"

#include <doctest.h>

using namespace ontokit;
using namespace ontokit::testing;

namespace {

bool sat(const Ontology& o, const Concept& c) { return Reasoner(o).isSatisfiable(c).satisfiable; }

// The witness of a satisfiable verdict must fold into a real model.
void checkWitness(const Ontology& o, const Concept& c) {
    const Reasoner r(o);
    const SatResult result = r.isSatisfiable(c);
    REQUIRE(result.satisfiable);
    REQUIRE(result.witness);
    const FiniteModel m = foldToModel(*result.witness, r.tbox());
    const Interpretation i = fromModel(m);
    CHECK(satisfiesTBox(o, i));
    CHECK(extension(c, i).contains(m.root));
}

const Ontology kEmpty = doc("");

}  // namespace

TEST_CASE("propositional reasoning") {
    CHECK(sat(kEmpty, A("a")));
    CHECK_FALSE(sat(kEmpty, Concept::intersection({A("a"), Concept::complement(A("a"))})));
    CHECK_FALSE(sat(kEmpty, Concept::bottom()));
    CHECK(sat(kEmpty, Concept::unionOf({Concept::intersection({A("a"), Concept::complement(A("a"))}), A("b")})));
    CHECK_FALSE(sat(kEmpty, Concept::intersection({Concept::unionOf({A("a"), A("b")}), Concept::complement(A("a")),
                                                   Concept::complement(A("b"))})));
}

TEST_CASE("existential and universal interaction") {
    const Concept c = Concept::intersection({Concept::some(R("r"), A("a")), Concept::all(R("r"), Concept::complement(A("a")))});
    CHECK_FALSE(sat(kEmpty, c));
    CHECK(sat(kEmpty, Concept::intersection({Concept::some(R("r"), A("a")), Concept::all(R("s"), Concept::complement(A("a")))})));
    checkWitness(kEmpty, Concept::intersection({Concept::some(R("r"), A("a")), Concept::all(R("r"), A("b"))}));
}

TEST_CASE("told and general inclusions") {
    const Ontology o = doc(R"(
SubClassOf(:A :B)
SubClassOf(:B ObjectSomeValuesFrom(:r :C))
SubClassOf(ObjectSomeValuesFrom(:r :C) :D)
SubClassOf(ObjectIntersectionOf(:D :E) owl:Nothing)
)");
    const Reasoner r(o);
    CHECK(r.isSubsumedBy(A("A"), A("D")));
    CHECK_FALSE(r.isSubsumedBy(A("D"), A("A")));
    CHECK_FALSE(r.isSatisfiable(Concept::intersection({A("A"), A("E")})).satisfiable);
    checkWitness(o, A("A"));
}

TEST_CASE("definitions unfold in both directions") {
    const Ontology o = doc(R"(
EquivalentClasses(:Parent ObjectSomeValuesFrom(:hasChild :Person))
SubClassOf(:Mother :Person)
)");
    const Reasoner r(o);
    CHECK(r.isSubsumedBy(Concept::some(R("hasChild"), A("Mother")), A("Parent")));
    CHECK(r.isSubsumedBy(A("Parent"), Concept::some(R("hasChild"), A("Person"))));
    CHECK_FALSE(r.isSubsumedBy(A("Parent"), A("Person")));
    checkWitness(o, Concept::intersection({A("Parent"), Concept::complement(A("Mother"))}));
}

TEST_CASE("cyclic inclusions terminate through blocking") {
    const Ontology o = doc("SubClassOf(:A ObjectSomeValuesFrom(:r :A))");
    CHECK(sat(o, A("A")));
    checkWitness(o, A("A"));
    const Ontology loop = doc(R"(
SubClassOf(:A ObjectSomeValuesFrom(:r :A))
SubClassOf(:A ObjectAllValuesFrom(:r :B))
)");
    CHECK(Reasoner(loop).isSubsumedBy(A("A"), Concept::some(R("r"), A("B"))));
}

TEST_CASE("inverse roles") {
    CHECK_FALSE(sat(kEmpty, Concept::intersection(
                                {A("a"), Concept::some(R("r"), Concept::all(R("r").inverted(), Concept::complement(A("a"))))})));
    const Ontology o = doc("InverseObjectProperties(:hasPart :partOf)");
    const Reasoner r(o);
    CHECK(r.isSubsumedBy(A("a"), Concept::all(R("hasPart"), Concept::some(R("partOf"), A("a")))));
    const Ontology cyc = doc(R"(
SubClassOf(:A ObjectSomeValuesFrom(ObjectInverseOf(:r) :A))
SubClassOf(:A ObjectAllValuesFrom(:r :B))
)");
    CHECK(Reasoner(cyc).isSubsumedBy(A("A"), A("B")));
    checkWitness(cyc, A("A"));
}

TEST_CASE("role hierarchy and transitivity") {
    const Ontology o = doc(R"(
SubObjectPropertyOf(:hasSon :hasChild)
TransitiveObjectProperty(:ancestorOf)
SubObjectPropertyOf(:parentOf :ancestorOf)
)");
    const Reasoner r(o);
    CHECK(r.isSubsumedBy(Concept::some(R("hasSon"), A("a")), Concept::some(R("hasChild"), A("a"))));
    CHECK_FALSE(r.isSubsumedBy(Concept::some(R("hasChild"), A("a")), Concept::some(R("hasSon"), A("a"))));
    CHECK(r.isSubsumedBy(Concept::some(R("parentOf"), Concept::some(R("parentOf"), A("a"))),
                         Concept::some(R("ancestorOf"), A("a"))));
    CHECK(r.isSubsumedBy(Concept::all(R("ancestorOf"), A("a")),
                         Concept::all(R("parentOf"), Concept::all(R("parentOf"), A("a")))));
    checkWitness(o, Concept::intersection({Concept::some(R("ancestorOf"), Concept::some(R("ancestorOf"), A("x"))),
                                           Concept::all(R("ancestorOf"), A("y"))}));
}

TEST_CASE("domain and range") {
    const Ontology o = doc(R"(
ObjectPropertyDomain(:teaches :Teacher)
ObjectPropertyRange(:teaches :Course)
)");
    const Reasoner r(o);
    CHECK(r.isSubsumedBy(Concept::some(R("teaches"), Concept::top()), A("Teacher")));
    CHECK(r.isSubsumedBy(Concept::some(R("teaches"), Concept::top()), Concept::some(R("teaches"), A("Course"))));
}

TEST_CASE("abox consistency and instances") {
    const Ontology ok = doc(R"(
SubClassOf(:Dog :Animal)
ClassAssertion(:Dog :rex)
ObjectPropertyAssertion(:owns :ann :rex)
ObjectPropertyDomain(:owns :Owner)
)");
    const Reasoner r(ok);
    CHECK(r.isConsistent());
    CHECK(r.isInstance(ex("rex"), A("Animal")));
    CHECK(r.isInstance(ex("ann"), A("Owner")));
    CHECK(r.isInstance(ex("ann"), Concept::some(R("owns"), A("Dog"))));
    CHECK_FALSE(r.isInstance(ex("ann"), A("Dog")));
    CHECK(r.instancesOf(A("Animal")) == std::set{ex("rex")});

    const Ontology bad = doc(R"(
ClassAssertion(ObjectAllValuesFrom(:r :B) :a)
ObjectPropertyAssertion(:r :a :b)
ClassAssertion(ObjectComplementOf(:B) :b)
)");
    CHECK_FALSE(isConsistent(bad));
    CHECK_THROWS_AS(realize(bad), InconsistentOntology);
    CHECK_THROWS_AS(instancesOf(A("B"), bad), InconsistentOntology);
    CHECK_FALSE(isConsistent(doc("SubClassOf(owl:Thing owl:Nothing)")));
}

TEST_CASE("no unique name assumption") {
    // Two names may denote the same element, so nothing clashes here.
    CHECK(isConsistent(doc(R"(
ClassAssertion(:A :a)
ClassAssertion(ObjectComplementOf(:A) :b)
ObjectPropertyAssertion(:r :a :b)
)")));
}

TEST_CASE("classification and realization") {
    const Ontology o = doc(R"(
SubClassOf(:B :A)
SubClassOf(:C :B)
EquivalentClasses(:D :C)
SubClassOf(:E ObjectIntersectionOf(:A ObjectComplementOf(:A)))
ClassAssertion(:C :x)
ClassAssertion(:A :y)
)");
    const Reasoner r(o);
    const Taxonomy t = r.classify();
    CHECK(t.groupOf(ex("C")) == t.groupOf(ex("D")));
    CHECK(t.directParents(ex("C")) == std::set{ex("B")});
    CHECK(t.groupOf(ex("E")) == t.bottom());
    CHECK(t == classify(o));
    const auto real = r.realize(t);
    CHECK(real.at(ex("x")) == std::set{ex("C"), ex("D")});
    CHECK(real.at(ex("y")) == std::set{ex("A")});
    CHECK(real == realize(o));
}

TEST_CASE("resource limits") {
    CHECK_THROWS_AS((ReasonerLimits{0, 10}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ReasonerLimits{10, 0}.validate()), std::invalid_argument);
    const Ontology o = doc("SubClassOf(:A ObjectSomeValuesFrom(:r ObjectSomeValuesFrom(:r ObjectSomeValuesFrom(:r :B))))");
    CHECK_THROWS_AS(isSatisfiable(A("A"), normalize(o), {2, 100}), ResourceLimitExceeded);
    CHECK(isSatisfiable(A("A"), normalize(o), {10, 100}).satisfiable);

    std::vector<Concept> choices;
    for (int i = 0; i < 6; ++i) choices.push_back(Concept::unionOf({A("p" + std::to_string(i)), A("q" + std::to_string(i))}));
    CHECK_THROWS_AS(isSatisfiable(Concept::intersection(choices), normalize(kEmpty), {100, 2}), ResourceLimitExceeded);
}

TEST_CASE("normalization") {
    const Ontology o = doc(R"(
EquivalentClasses(:A ObjectSomeValuesFrom(:r :B))
EquivalentClasses(:C :D :E)
SubClassOf(:X :Y)
EquivalentClasses(:X ObjectSomeValuesFrom(:r :Z))
DisjointClasses(:P :Q)
InverseObjectProperties(:r :s)
TransitiveObjectProperty(:t)
SubObjectPropertyOf(:u :t)
SubObjectPropertyOf(:t :u)
)");
    const NormalizedTBox n = normalize(o);
    CHECK(n.definitions.contains(ex("A")));
    CHECK_FALSE(n.definitions.contains(ex("X")));
    CHECK(n.roles.isSubRole(R("r"), R("s").inverted()));
    CHECK(n.roles.isSubRole(R("s").inverted(), R("r")));
    CHECK(n.roles.isSubRole(R("s"), R("r").inverted()));
    CHECK(n.isTransitive(R("u")));
    CHECK(n.isTransitive(R("t").inverted()));
    CHECK(toNNF(Concept::complement(Concept::some(R("r"), Concept::intersection({A("a"), A("b")})))) ==
          Concept::all(R("r"), Concept::unionOf({Concept::complement(A("a")), Concept::complement(A("b"))})));
}

TEST_CASE("cyclic definitions are not unfolded") {
    const Ontology o = doc(R"(
EquivalentClasses(:A ObjectSomeValuesFrom(:r :B))
EquivalentClasses(:B ObjectAllValuesFrom(:r :A))
)");
    const NormalizedTBox n = normalize(o);
    CHECK(n.definitions.size() < 2);
    checkWitness(o, A("A"));
}

TEST_CASE("inverse materialization") {
    const Ontology o = doc(R"(
InverseObjectProperties(:hasSymptoms :isSymptomsOf)
SubObjectPropertyOf(:hasMainSymptom :hasSymptoms)
ObjectPropertyAssertion(:hasMainSymptom :flu :fever)
)");
    const Ontology m = materializeInverses(o);
    CHECK(m.contains(axioms::RoleAssertion{ex("isSymptomsOf"), ex("fever"), ex("flu")}));
    // The inverse of the new assertion lifts the original along the hierarchy.
    CHECK(m.contains(axioms::RoleAssertion{ex("hasSymptoms"), ex("flu"), ex("fever")}));
    CHECK_FALSE(m.contains(axioms::RoleAssertion{ex("hasMainSymptom"), ex("fever"), ex("flu")}));
    CHECK(materializeInverses(m) == m);
    CHECK(m.size() == o.size() + 2);
}
