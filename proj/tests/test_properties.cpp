#include "helpers.hpp"
#include "support/model_finder.hpp"
#include "support/properties.hpp"
#include "support/random_ontology.hpp"

#include "ontokit/analysis.hpp"
#include "ontokit/reasoner.hpp"
#include "ontokit/sitegen.hpp"

#include <doctest.h>

using namespace ontokit;
using namespace ontokit::testing;

namespace {

void report(const PropertyReport& r) {
    INFO("instances " << r.instances << ", queries " << r.queries << ", countermodels " << r.countermodels);
    for (const auto& f : r.failures) FAIL_CHECK(f);
    CHECK(r.ok());
}

}  // namespace

TEST_CASE("reasoner agrees with bounded model search on ALC") {
    const PropertyReport r = checkReasonerProperties(500, 20260415);
    CHECK(r.instances == 500);
    CHECK(r.subsumptions > 0);
    CHECK(r.countermodels > 0);
    report(r);
}

TEST_CASE("reasoner agrees with bounded model search with role axioms") {
    report(checkReasonerProperties(500, 7, true));
}

TEST_CASE("model finder sanity") {
    const Ontology o = doc(R"(
Declaration(Class(:A))
Declaration(ObjectProperty(:r))
SubClassOf(:A ObjectSomeValuesFrom(:r :A))
)");
    const auto m = findModel(o, A("A"), 1);
    REQUIRE(m);
    CHECK(m->roles.at(ex("r")).contains({0, 0}));
    CHECK_FALSE(findModel(o, Concept::intersection({A("A"), Concept::all(R("r"), Concept::complement(A("A")))}), 3));

    const Ontology trans = doc(R"(
TransitiveObjectProperty(:r)
SubClassOf(:A ObjectSomeValuesFrom(:r :B))
SubClassOf(:B ObjectSomeValuesFrom(:r :C))
)");
    const auto t = findModel(trans, Concept::intersection({A("A"), Concept::all(R("r"), Concept::complement(A("C")))}), 3);
    CHECK_FALSE(t);
}

TEST_CASE("parser never fails with anything but a parse error") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "()<>:#\"^=\\ \nabcXYZ019_";
    std::size_t rejected = 0;
    for (int i = 0; i < 500; ++i) {
        std::string text = serialize(randomOntology(rng, {}));
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            const std::size_t at = rng() % text.size();
            switch (rng() % 3) {
            case 0: text.erase(at, 1 + rng() % 6); break;
            case 1: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
            default: text[at] = alphabet[rng() % alphabet.size()]; break;
            }
            if (text.empty()) text = "(";
        }
        try {
            const Ontology o = parse(text);
            CHECK(parse(serialize(o)) == o);
        } catch (const ParseError& e) {
            ++rejected;
            CHECK(e.location().line >= 1);
        } catch (const std::exception& e) {
            FAIL_CHECK("unexpected exception: " << e.what() << "\n" << text);
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("random sites have no broken links") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Ontology o = randomOntology(rng, RandomShape{.roleAxioms = true});
        const Reasoner r(o);
        if (!r.isConsistent()) continue;
        const Taxonomy inferred = r.classify();
        const auto docs = generateSite(o, inferred, assertedTaxonomy(o), r.realize(inferred));
        CHECK(verifyLinks(docs).brokenLinks == 0);
        CHECK(docs.size() == 1 + signature(o).size());
    }
}

TEST_CASE("classification is a deterministic partial order") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        RandomSignature sig;
        const Ontology o = randomOntology(rng, {}, &sig);
        const Reasoner r(o);
        const Taxonomy t = r.classify();
        CHECK(t == classify(o));
        for (const Iri& a : sig.concepts)
            for (const Iri& b : sig.concepts)
                CHECK(t.subsumes(b, a) == r.isSubsumedBy(Concept::named(a), Concept::named(b)));
    }
}
