#include "ontokit/fixture.hpp"

#include "ontokit/parser.hpp"

namespace ontokit::fixture {

namespace {

constexpr std::string_view kGiardia = "Giardia_lambliia";

Concept named(std::string_view local) { return Concept::named(iri(local)); }
Role role(std::string_view local) { return Role::named(iri(local)); }

std::vector<LedgerEntry> buildLedger() {
    using P = Provenance;
    std::vector<LedgerEntry> out;
    const auto add = [&](Axiom a, P p, std::string note) { out.push_back({std::move(a), p, std::move(note)}); };
    const auto declare = [&](EntityKind kind, Iri name, P p, std::string note) {
        add(axioms::Declaration{Entity{kind, std::move(name)}}, p, std::move(note));
    };

    const std::vector<std::string_view> concepts{
        "Disease",       "Infectious",       "Virus",          "Fungus",     "Prion",
        "Bacteria",      "Protozoa",         "Autoimmune",     "Debilitating", "Chronic",
        "Lifethreatening", "DiseaseArea",    "Internal",       "External",   "DiseaseSymptoms",
        "Inside",        "Outside",          "DiseasePrevention", "DiseaseStructure", "AreaStructure",
        "OrganismStructure", "GeneticMaterial", "DNA",         "RNA",
    };
    for (auto c : concepts) declare(EntityKind::Concept, iri(c), P::Source, "class named in the hierarchy description");
    const std::vector<std::string_view> roles{
        "hasStructure", "isStructureOf",    "hasSymptoms",  "isSymptomsOf", "hasOrganismStructure",
        "hasAreaStructure", "hasGenetics", "hasPrevention", "hasArea",
    };
    for (auto r : roles) declare(EntityKind::ObjectRole, iri(r), P::Source, "object property named in the text");
    declare(EntityKind::DataRole, iri("locomotion"), P::Source, "data property on the Giardia individual");
    declare(EntityKind::AnnotationRole, Iri(std::string(vocab::kRdfs) + "comment"), P::Reconstruction,
            "the single annotation property is never named; rdfs:comment stands in for it");
    declare(EntityKind::Individual, iri(kGiardia), P::Source, "individual IRI as printed, spelling kept");
    declare(EntityKind::Datatype, vocab::plainText(), P::Reconstruction,
            "the single data type is never named; xsd:string types the locomotion value");

    const auto told = [&](std::string_view sub, std::string_view super, std::string note) {
        add(axioms::SubConceptOf{named(sub), named(super)}, P::Source, std::move(note));
    };
    told("Infectious", "Disease", "disease category");
    told("Autoimmune", "Disease", "disease category");
    for (auto c : {"Virus", "Fungus", "Prion", "Bacteria", "Protozoa"})
        told(c, "Infectious", "infectious agent category");
    for (auto c : {"Debilitating", "Chronic", "Lifethreatening"}) told(c, "Autoimmune", "autoimmune category");
    for (auto c : {"Internal", "External"}) told(c, "DiseaseArea", "body area split");
    for (auto c : {"Inside", "Outside"}) told(c, "DiseaseSymptoms", "symptom location split");
    for (auto c : {"AreaStructure", "OrganismStructure"}) told(c, "DiseaseStructure", "structure split");
    for (auto c : {"DNA", "RNA"}) told(c, "GeneticMaterial", "genetic material kind");

    add(axioms::SubConceptOf{named("Disease"), Concept::some(role("hasSymptoms"), named("DiseaseSymptoms"))},
        P::Source, "every disease shows at least one symptom");
    add(axioms::EquivalentConcepts{{named("Infectious"), Concept::some(role("hasGenetics"), named("GeneticMaterial"))}},
        P::Reconstruction,
        "defined class; the definition is the bare existential so that OrganismStructure can be reclassified");
    add(axioms::SubConceptOf{named("OrganismStructure"), Concept::some(role("hasGenetics"), named("GeneticMaterial"))},
        P::Source, "organisms carry some genetic material");
    add(axioms::SubConceptOf{named("Infectious"),
                             Concept::all(role("hasGenetics"), Concept::unionOf({named("DNA"), named("RNA")}))},
        P::Reconstruction, "closure on the genetics of infectious things; exact form is not given");

    const auto disjoint = [&](std::vector<std::string_view> names, P p, std::string note) {
        std::vector<Concept> members;
        for (auto n : names) members.push_back(named(n));
        add(axioms::DisjointConcepts{std::move(members)}, p, std::move(note));
    };
    disjoint({"Autoimmune", "Infectious"}, P::Source, "the two disease categories are disjoint");
    disjoint({"Virus", "Fungus", "Prion", "Bacteria", "Protozoa"}, P::Source, "infectious agents are pairwise disjoint");
    disjoint({"Debilitating", "Chronic", "Lifethreatening"}, P::Source, "autoimmune categories are pairwise disjoint");
    disjoint({"Internal", "External"}, P::Reconstruction,
             "the text both asserts and denies this; the probe results require it");
    disjoint({"AreaStructure", "OrganismStructure"}, P::Source, "structure kinds are disjoint");

    add(axioms::InverseRoles{iri("hasStructure"), iri("isStructureOf")}, P::Source, "inverse pair");
    add(axioms::InverseRoles{iri("hasSymptoms"), iri("isSymptomsOf")}, P::Source, "inverse pair");
    add(axioms::SubRoleOf{iri("hasOrganismStructure"), iri("hasStructure")}, P::Source, "sub-property");
    add(axioms::SubRoleOf{iri("hasAreaStructure"), iri("hasStructure")}, P::Source, "sub-property");
    add(axioms::RoleDomain{iri("hasSymptoms"), named("Disease")}, P::Source, "domain of hasSymptoms");
    add(axioms::RoleRange{iri("hasSymptoms"), named("DiseaseSymptoms")}, P::Source, "range of hasSymptoms");
    add(axioms::RoleDomain{iri("isSymptomsOf"), named("DiseaseSymptoms")}, P::Source,
        "domain of the inverse, swapped from hasSymptoms");
    add(axioms::RoleRange{iri("isSymptomsOf"), named("Disease")}, P::Source,
        "range of the inverse, swapped from hasSymptoms");
    add(axioms::RoleRange{iri("hasGenetics"), named("GeneticMaterial")}, P::Reconstruction,
        "genetics always points into GeneticMaterial; no other domain or range is added");

    add(axioms::ConceptAssertion{named("OrganismStructure"), iri(kGiardia)}, P::Source,
        "Giardia is an OrganismStructure member");
    add(axioms::DataAssertion{iri("locomotion"), iri(kGiardia), Literal{"Flagellates"}}, P::Source,
        "locomotion value of Giardia");
    const Iri comment(std::string(vocab::kRdfs) + "comment");
    add(axioms::AnnotationAssertion{comment, iri("Disease"), Literal{"Diseases arranged by their origin."}},
        P::Reconstruction, "annotation text is not given; a short comment stands in");
    add(axioms::AnnotationAssertion{comment, iri(kGiardia), Literal{"Giardia lamblia"}}, P::Reconstruction,
        "display name for the misspelled individual IRI");
    return out;
}

}  // namespace

Iri iri(std::string_view local) { return Iri(std::string(kDiseaseIri) + "#" + std::string(local)); }

const std::vector<LedgerEntry>& diseaseLedger() {
    static const std::vector<LedgerEntry> ledger = buildLedger();
    return ledger;
}

Ontology buildDiseaseFixture() {
    Ontology o(Iri(std::string(kDiseaseIri)), DeclarationMode::Strict);
    o.setPrefix("", std::string(kDiseaseIri) + "#");
    o.setPrefix("owl", std::string(vocab::kOwl));
    o.setPrefix("rdf", std::string(vocab::kRdf));
    o.setPrefix("rdfs", std::string(vocab::kRdfs));
    o.setPrefix("xsd", std::string(vocab::kXsd));
    for (const auto& entry : diseaseLedger()) o.add(entry.axiom);
    return o;
}

std::vector<ProbeSpec> diseaseProbes() {
    return {
        {"ProbeType1", {iri("Autoimmune"), iri("Infectious")}},
        {"ProbeType2", {iri("External"), iri("Internal")}},
        {"ProbeType3", {iri("AreaStructure"), iri("OrganismStructure")}},
    };
}

std::string publishedCounts() {
    return "# Published entity counts; the class count includes owl:Thing.\n"
           "conceptsIncludingThing 26\n"
           "objectRoles 10\n"
           "dataRoles 1\n"
           "annotationRoles 1\n"
           "individuals 1\n"
           "datatypes 1\n";
}

std::string ledgerText() {
    const Ontology o = buildDiseaseFixture();
    std::string out;
    for (const auto& entry : diseaseLedger()) {
        out += serializeAxiom(entry.axiom, o.prefixes());
        out += '\t';
        out += entry.provenance == Provenance::Source ? "Source(" : "Reconstruction(";
        out += entry.note;
        out += ")\n";
    }
    return out;
}

}  // namespace ontokit::fixture
