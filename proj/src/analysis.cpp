#include "ontokit/analysis.hpp"

#include "ontokit/parser.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ontokit {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Taxonomy assertedTaxonomy(const Ontology& o) {
    std::set<Iri> concepts;
    for (const Entity& e : signature(o))
        if (e.kind == EntityKind::Concept) concepts.insert(e.iri);
    std::set<std::pair<Iri, Iri>> told;
    const auto link = [&](const Concept& sub, const Concept& super) {
        const auto name = [](const Concept& c) -> std::optional<Iri> {
            if (c.isNamed()) return c.iri();
            if (c.kind() == Concept::Kind::Top) return vocab::thing();
            if (c.kind() == Concept::Kind::Bottom) return vocab::nothing();
            return std::nullopt;
        };
        auto a = name(sub);
        auto b = name(super);
        if (a && b) told.emplace(*a, *b);
    };
    for (const auto& axiom : o.axioms()) {
        if (const auto* s = std::get_if<axioms::SubConceptOf>(&axiom)) {
            link(s->sub, s->super);
        } else if (const auto* eq = std::get_if<axioms::EquivalentConcepts>(&axiom)) {
            for (const auto& x : eq->members)
                for (const auto& y : eq->members)
                    if (x != y) link(x, y);
        }
    }
    return Taxonomy::build(concepts, [&](const Iri& sub, const Iri& super) { return told.contains({sub, super}); });
}

HierarchyDiff diffTaxonomies(const Taxonomy& asserted, const Taxonomy& inferred) {
    if (asserted.concepts() != inferred.concepts())
        throw std::invalid_argument("taxonomies cover different concept sets");
    HierarchyDiff diff;
    const auto directLinks = [](const Taxonomy& t) {
        std::vector<std::pair<Iri, Iri>> out;
        for (Taxonomy::Group g = 0; g < t.groupCount(); ++g)
            for (Taxonomy::Group p : t.parents(g))
                for (const Iri& child : t.members(g))
                    for (const Iri& parent : t.members(p)) out.emplace_back(child, parent);
        return out;
    };
    for (const auto& [child, parent] : directLinks(inferred))
        if (!asserted.subsumes(parent, child)) diff.addedParentLinks.emplace(child, parent);
    for (const auto& [child, parent] : directLinks(asserted))
        if (!inferred.subsumes(parent, child)) diff.removedParentLinks.emplace(child, parent);
    for (Taxonomy::Group g = 0; g < inferred.groupCount(); ++g) {
        const auto& members = inferred.members(g);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (asserted.groupOf(members[i]) != asserted.groupOf(members[j]))
                    diff.newEquivalences.emplace(members[i], members[j]);
    }
    return diff;
}

Iri probeIri(const Ontology& o, std::string_view name) {
    std::string base = o.iri().str();
    if (!base.ends_with('#') && !base.ends_with('/')) base += '#';
    return Iri(base + std::string(name));
}

std::vector<ProbeResult> runProbes(const Ontology& o, const std::vector<ProbeSpec>& probes,
                                   const ReasonerLimits& limits) {
    std::set<Iri> used;
    for (const Entity& e : signature(o)) used.insert(e.iri);
    std::vector<ProbeResult> out;
    for (const ProbeSpec& probe : probes) {
        if (probe.supers.size() < 2)
            throw std::invalid_argument("probe " + probe.name + " needs at least two superclasses");
        const Iri iri = probeIri(o, probe.name);
        if (used.contains(iri)) throw std::invalid_argument("probe name " + probe.name + " is already in use");
        Ontology extended = o;
        extended.add(axioms::Declaration{Entity{EntityKind::Concept, iri}});
        for (const Iri& super : probe.supers)
            extended.add(axioms::SubConceptOf{Concept::named(iri), Concept::named(super)});
        const bool sat = Reasoner(extended, limits).isSatisfiable(Concept::named(iri)).satisfiable;
        out.push_back(ProbeResult{probe, iri, sat});
    }
    return out;
}

ProbeFileError::ProbeFileError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::optional<Iri> resolveName(std::string_view text, const Ontology& o, EntityKind kind) {
    const std::string name = trim(text);
    if (name.empty()) return std::nullopt;
    std::optional<Iri> candidate;
    if (name.front() == '<' && name.back() == '>') {
        const std::string inner = name.substr(1, name.size() - 2);
        if (!Iri::isValid(inner)) return std::nullopt;
        candidate = Iri(inner);
    } else if (auto colon = name.find(':'); colon != std::string::npos) {
        auto it = o.prefixes().find(name.substr(0, colon));
        if (it != o.prefixes().end() && Iri::isValid(it->second + name.substr(colon + 1)))
            candidate = Iri(it->second + name.substr(colon + 1));
    }
    if (candidate) {
        if (kind == EntityKind::Concept && (*candidate == vocab::thing() || *candidate == vocab::nothing()))
            return candidate;
        if (signature(o).contains(Entity{kind, *candidate})) return candidate;
        return std::nullopt;
    }
    if (kind == EntityKind::Concept && (name == "Thing" || name == "Nothing"))
        return name == "Thing" ? vocab::thing() : vocab::nothing();
    std::optional<Iri> match;
    for (const Entity& e : signature(o)) {
        if (e.kind != kind || e.iri.fragment() != name) continue;
        if (match) return std::nullopt;  // ambiguous
        match = e.iri;
    }
    return match;
}

std::vector<ProbeSpec> parseProbes(std::string_view text, const Ontology& o) {
    std::vector<ProbeSpec> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        // A comment starts at a '#' that opens the line or follows whitespace;
        // a '#' inside <...> belongs to the IRI.
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
                line.erase(i);
                break;
            }
        }
        if (trim(line).empty()) continue;

        // The separator is a colon followed by whitespace or the end of the line,
        // so prefixed names such as `:Disease` survive on either side.
        std::size_t sep = std::string::npos;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == ':' && (i + 1 == line.size() || line[i + 1] == ' ' || line[i + 1] == '\t')) {
                sep = i;
                break;
            }
        }
        ProbeSpec probe;
        std::string list = line;
        if (sep != std::string::npos) {
            probe.name = trim(std::string_view(line).substr(0, sep));
            list = line.substr(sep + 1);
        }
        if (probe.name.empty()) probe.name = "ProbeType" + std::to_string(out.size() + 1);
        std::istringstream items(list);
        std::string item;
        while (std::getline(items, item, ',')) {
            const std::string name = trim(item);
            if (name.empty()) throw ProbeFileError(number, "empty superclass name");
            auto iri = resolveName(name, o, EntityKind::Concept);
            if (!iri) throw ProbeFileError(number, "unknown concept " + name);
            probe.supers.push_back(*iri);
        }
        if (probe.supers.size() < 2)
            throw ProbeFileError(number, "probe " + probe.name + " needs at least two superclasses");
        out.push_back(std::move(probe));
    }
    return out;
}

namespace {

constexpr std::array<std::pair<QueryKind, std::string_view>, 10> kQueryNames{{
    {QueryKind::SymptomsOf, "symptoms-of"},
    {QueryKind::DiseasesWithSymptom, "diseases-with-symptom"},
    {QueryKind::PreventionsOf, "preventions-of"},
    {QueryKind::AreasOf, "areas-of"},
    {QueryKind::StructuresOf, "structures-of"},
    {QueryKind::GeneticsOf, "genetics-of"},
    {QueryKind::SubConceptsOf, "subconcepts-of"},
    {QueryKind::SuperConceptsOf, "superconcepts-of"},
    {QueryKind::InstancesOf, "instances-of"},
    {QueryKind::FillersOf, "fillers-of"},
}};

Iri requireRole(std::string_view name, const Ontology& o) {
    auto iri = resolveName(name, o, EntityKind::ObjectRole);
    if (!iri) throw std::invalid_argument("unknown object role " + std::string(name));
    return *iri;
}

// Objects reachable from `subject` over `role` in told plus inverse-materialized
// assertions, sub-roles included.
std::set<Iri> fillers(const Iri& subject, const Role& role, const Ontology& o) {
    const Ontology m = materializeInverses(o);
    const RoleHierarchy roles = normalize(m).roles;
    std::set<Iri> out;
    for (const auto& axiom : m.axioms()) {
        const auto* a = std::get_if<axioms::RoleAssertion>(&axiom);
        if (!a) continue;
        const Role r = Role::named(a->role);
        if (a->subject == subject && roles.isSubRole(r, role)) out.insert(a->object);
        if (a->object == subject && roles.isSubRole(r.inverted(), role)) out.insert(a->subject);
    }
    return out;
}

}  // namespace

std::string_view toString(QueryKind kind) {
    for (const auto& [k, name] : kQueryNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<QueryKind> parseQueryKind(std::string_view text) {
    for (const auto& [k, name] : kQueryNames)
        if (name == text) return k;
    return std::nullopt;
}

std::set<Iri> answerCompetencyQuery(const CompetencyQuery& q, const Ontology& o, const ReasonerLimits& limits) {
    const Reasoner reasoner(o, limits);
    if (!reasoner.isConsistent()) throw InconsistentOntology("ontology is inconsistent");

    const auto individual = [&] {
        auto iri = resolveName(q.subject, o, EntityKind::Individual);
        if (!iri) throw std::invalid_argument("unknown individual " + q.subject);
        return *iri;
    };
    const auto concept_ = [&] {
        auto iri = resolveName(q.subject, o, EntityKind::Concept);
        if (!iri) throw std::invalid_argument("unknown concept " + q.subject);
        return *iri;
    };
    const auto over = [&](std::string_view role, bool inverse) {
        const Iri r = requireRole(role, o);
        return fillers(individual(), inverse ? Role::inverseOf(r) : Role::named(r), o);
    };

    switch (q.kind) {
        case QueryKind::SymptomsOf: return over("hasSymptoms", false);
        case QueryKind::DiseasesWithSymptom: return over("hasSymptoms", true);
        case QueryKind::PreventionsOf: return over("hasPrevention", false);
        case QueryKind::AreasOf: return over("hasArea", false);
        case QueryKind::StructuresOf: return over("hasStructure", false);
        case QueryKind::GeneticsOf: return over("hasGenetics", false);
        case QueryKind::FillersOf:
            if (!q.role) throw std::invalid_argument("fillers-of needs a role");
            return over(*q.role, false);
        case QueryKind::SubConceptsOf:
        case QueryKind::SuperConceptsOf: {
            const Iri c = concept_();
            const Taxonomy t = reasoner.classify();
            std::set<Iri> out = q.kind == QueryKind::SubConceptsOf ? t.descendants(c) : t.ancestors(c);
            for (const Iri& e : t.members(t.groupOf(c))) out.insert(e);
            out.erase(c);
            out.erase(vocab::thing());
            out.erase(vocab::nothing());
            return out;
        }
        case QueryKind::InstancesOf: {
            const std::string subject = trim(q.subject);
            if (subject.find('(') != std::string::npos) return reasoner.instancesOf(parseConcept(subject, o.prefixes()));
            return reasoner.instancesOf(Concept::named(concept_()));
        }
    }
    return {};
}

}  // namespace ontokit
