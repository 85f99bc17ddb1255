#include "ontokit/cli.hpp"

#include "ontokit/analysis.hpp"
#include "ontokit/parser.hpp"
#include "ontokit/reasoner.hpp"
#include "ontokit/sitegen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace ontokit::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    bool strict = false;
    std::size_t maxNodes = ReasonerLimits{}.maxNodes;
    std::size_t maxBranchDepth = ReasonerLimits{}.maxBranchDepth;
    std::string format = "text";
    std::string probes;
    bool expectUnsat = false;
    std::string expectCounts;
    std::string output;
    std::string queryKind;
    std::string subject;
    std::string role;

    bool json() const { return format == "json"; }
    ReasonerLimits limits() const { return {maxNodes, maxBranchDepth}; }
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Ontology load(const Config& c) {
    const std::string text = readFile(c.input);
    try {
        return parse(text, {c.strict ? DeclarationMode::Strict : DeclarationMode::Lenient});
    } catch (const ParseError& e) {
        throw UsageError(c.input + ":" + std::to_string(e.location().line) + ":" +
                         std::to_string(e.location().column) + ": " + e.message());
    }
}

std::string name(const Iri& iri) {
    std::string f(iri.fragment());
    return f.empty() ? iri.str() : f;
}

std::string joinNames(const std::vector<Iri>& iris, std::string_view sep) {
    std::string out;
    for (const Iri& i : iris) {
        if (!out.empty()) out += sep;
        out += name(i);
    }
    return out;
}

json iriList(const auto& iris) {
    json out = json::array();
    for (const Iri& i : iris) out.push_back(i.str());
    return out;
}

std::vector<Iri> unsatisfiable(const Taxonomy& t) {
    std::vector<Iri> out;
    for (const Iri& m : t.members(t.bottom()))
        if (m != vocab::nothing()) out.push_back(m);
    return out;
}

int check(const Config& c, std::ostream& out) {
    const Ontology o = load(c);
    const Reasoner reasoner(o, c.limits());
    const bool consistent = reasoner.isConsistent();
    std::vector<Iri> unsat;
    if (consistent) unsat = unsatisfiable(reasoner.classify());
    if (c.json()) {
        out << json{{"command", "check"},
                    {"ontology", o.iri().str()},
                    {"consistent", consistent},
                    {"unsatisfiable", iriList(unsat)}}
                   .dump(2)
            << "\n";
    } else {
        out << "ontology: " << o.iri().str() << "\n";
        out << "consistent: " << (consistent ? "yes" : "no") << "\n";
        if (consistent) out << "unsatisfiable concepts: " << (unsat.empty() ? "none" : joinNames(unsat, ", ")) << "\n";
    }
    return consistent && unsat.empty() ? kSuccess : kFinding;
}

int classifyCommand(const Config& c, std::ostream& out, std::ostream& err) {
    const Ontology o = load(c);
    const Reasoner reasoner(o, c.limits());
    if (!reasoner.isConsistent()) {
        err << c.input << ": ontology is inconsistent\n";
        return kFinding;
    }
    const Taxonomy t = reasoner.classify();
    const auto unsat = unsatisfiable(t);
    if (c.json()) {
        json groups = json::array();
        for (Taxonomy::Group g = 0; g < t.groupCount(); ++g) {
            json parents = json::array();
            for (auto p : t.parents(g)) parents.push_back(p);
            groups.push_back({{"members", iriList(t.members(g))}, {"parents", parents}});
        }
        out << json{{"command", "classify"}, {"groups", groups}, {"unsatisfiable", iriList(unsat)}}.dump(2) << "\n";
    } else {
        std::function<void(Taxonomy::Group, int)> print = [&](Taxonomy::Group g, int depth) {
            out << std::string(2 * static_cast<std::size_t>(depth), ' ') << joinNames(t.members(g), " ≡ ");
            if (t.parents(g).size() > 1) {
                std::vector<std::string> parents;
                for (auto p : t.parents(g)) parents.push_back(joinNames(t.members(p), " ≡ "));
                std::ranges::sort(parents);
                out << " (parents: ";
                for (std::size_t i = 0; i < parents.size(); ++i) out << (i ? ", " : "") << parents[i];
                out << ")";
            }
            out << "\n";
            for (auto child : t.children(g))
                if (child != t.bottom() || t.members(child).size() > 1) print(child, depth + 1);
        };
        print(t.top(), 0);
    }
    return unsat.empty() ? kSuccess : kFinding;
}

int diff(const Config& c, std::ostream& out, std::ostream& err) {
    const Ontology o = load(c);
    const Reasoner reasoner(o, c.limits());
    if (!reasoner.isConsistent()) {
        err << c.input << ": ontology is inconsistent\n";
        return kFinding;
    }
    const HierarchyDiff d = diffTaxonomies(assertedTaxonomy(o), reasoner.classify());
    if (c.json()) {
        const auto links = [](const auto& set) {
            json a = json::array();
            for (const auto& [child, parent] : set) a.push_back({{"child", child.str()}, {"parent", parent.str()}});
            return a;
        };
        json eq = json::array();
        for (const auto& [a, b] : d.newEquivalences) eq.push_back({a.str(), b.str()});
        out << json{{"command", "diff"},
                    {"added", links(d.addedParentLinks)},
                    {"removed", links(d.removedParentLinks)},
                    {"equivalences", eq}}
                   .dump(2)
            << "\n";
    } else {
        const auto section = [&](std::string_view title, const auto& set, std::string_view arrow) {
            out << title << ": " << set.size() << "\n";
            for (const auto& [a, b] : set) out << "  " << name(a) << arrow << name(b) << "\n";
        };
        section("added parent links", d.addedParentLinks, " -> ");
        section("removed parent links", d.removedParentLinks, " -> ");
        section("new equivalences", d.newEquivalences, " ≡ ");
    }
    return kSuccess;
}

int probe(const Config& c, std::ostream& out) {
    const Ontology o = load(c);
    std::vector<ProbeSpec> specs;
    try {
        specs = parseProbes(readFile(c.probes), o);
    } catch (const ProbeFileError& e) {
        throw UsageError(c.probes + ": " + e.what());
    }
    std::vector<ProbeResult> results;
    try {
        results = runProbes(o, specs, c.limits());
    } catch (const std::invalid_argument& e) {
        throw UsageError(c.probes + ": " + e.what());
    }
    const bool allUnsat = std::ranges::none_of(results, &ProbeResult::satisfiable);
    const bool anyUnsat = std::ranges::any_of(results, [](const ProbeResult& r) { return !r.satisfiable; });
    if (c.json()) {
        json probes = json::array();
        for (const auto& r : results)
            probes.push_back({{"name", r.probe.name},
                              {"iri", r.iri.str()},
                              {"supers", iriList(r.probe.supers)},
                              {"satisfiable", r.satisfiable}});
        out << json{{"command", "probe"}, {"expectUnsat", c.expectUnsat}, {"probes", probes}}.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            out << r.probe.name << ": " << joinNames(r.probe.supers, ", ") << " -> "
                << (r.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE") << "\n";
    }
    if (c.expectUnsat) return allUnsat ? kSuccess : kFinding;
    return anyUnsat ? kFinding : kSuccess;
}

std::vector<std::pair<std::string, std::size_t>> countRows(const EntityCounts& counts) {
    return {
        {"concepts", counts.concepts},
        {"conceptsIncludingThing", counts.conceptsIncludingThing()},
        {"objectRoles", counts.objectRoles},
        {"dataRoles", counts.dataRoles},
        {"annotationRoles", counts.annotationRoles},
        {"individuals", counts.individuals},
        {"datatypes", counts.datatypes},
    };
}

int stats(const Config& c, std::ostream& out) {
    const Ontology o = load(c);
    const auto rows = countRows(computeCounts(o));
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> deviations;
    if (!c.expectCounts.empty()) {
        std::istringstream in(readFile(c.expectCounts));
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream fields(line);
            std::string key;
            std::size_t expected = 0;
            if (!(fields >> key)) continue;
            if (!(fields >> expected)) throw UsageError(c.expectCounts + ":" + std::to_string(number) + ": bad count");
            auto it = std::ranges::find(rows, key, &std::pair<std::string, std::size_t>::first);
            if (it == rows.end())
                throw UsageError(c.expectCounts + ":" + std::to_string(number) + ": unknown count " + key);
            if (it->second != expected) deviations.emplace_back(key, expected, it->second);
        }
    }
    if (c.json()) {
        json counts = json::object();
        for (const auto& [key, value] : rows) counts[key] = value;
        json devs = json::array();
        for (const auto& [key, expected, actual] : deviations)
            devs.push_back({{"field", key}, {"expected", expected}, {"actual", actual}});
        out << json{{"command", "stats"}, {"counts", counts}, {"deviations", devs}}.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : rows) out << key << ": " << value << "\n";
        for (const auto& [key, expected, actual] : deviations)
            out << "deviation: " << key << " expected " << expected << " actual " << actual << "\n";
    }
    return kSuccess;
}

int query(const Config& c, std::ostream& out) {
    const Ontology o = load(c);
    const auto kind = parseQueryKind(c.queryKind);
    if (!kind) throw UsageError("unknown query kind " + c.queryKind);
    CompetencyQuery q{*kind, c.subject, std::nullopt};
    if (!c.role.empty()) q.role = c.role;
    std::set<Iri> results;
    try {
        results = answerCompetencyQuery(q, o, c.limits());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const ParseError& e) {
        throw UsageError(std::string("subject: ") + e.what());
    }
    if (c.json()) {
        out << json{{"command", "query"}, {"kind", c.queryKind}, {"subject", c.subject}, {"results", iriList(results)}}
                   .dump(2)
            << "\n";
    } else {
        for (const Iri& r : results) out << name(r) << "\n";
    }
    return kSuccess;
}

int site(const Config& c, std::ostream& out, std::ostream& err) {
    const Ontology o = load(c);
    const Reasoner reasoner(o, c.limits());
    if (!reasoner.isConsistent()) {
        err << c.input << ": ontology is inconsistent\n";
        return kFinding;
    }
    const Taxonomy inferred = reasoner.classify();
    const auto docs = generateSite(o, inferred, assertedTaxonomy(o), reasoner.realize(inferred));
    try {
        writeSite(c.output, docs);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    const LinkReport report = verifyLinks(docs);
    if (c.json()) {
        json broken = json::array();
        for (const auto& [source, target] : report.brokenList) broken.push_back({{"source", source}, {"target", target}});
        out << json{{"command", "site"},
                    {"pages", docs.size()},
                    {"totalLinks", report.totalLinks},
                    {"brokenLinks", report.brokenLinks},
                    {"broken", broken}}
                   .dump(2)
            << "\n";
    } else {
        out << "pages: " << docs.size() << "\n";
        out << "links: " << report.totalLinks << "\n";
        out << "broken links: " << report.brokenLinks << "\n";
        for (const auto& [source, target] : report.brokenList) out << "  " << source << " -> " << target << "\n";
    }
    return report.brokenLinks == 0 ? kSuccess : kFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ontology toolkit: parse, reason over and publish OWL functional-syntax ontologies", "ontokit"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    app.add_flag("--strict", c.strict, "Reject undeclared entities instead of declaring them");
    app.add_option("--max-nodes", c.maxNodes, "Completion graph node limit")->check(CLI::PositiveNumber);
    app.add_option("--max-branch-depth", c.maxBranchDepth, "Open choice point limit")->check(CLI::PositiveNumber);
    app.add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));

    const auto withInput = [&](std::string_view cmd, std::string_view help) {
        CLI::App* sub = app.add_subcommand(std::string(cmd), std::string(help));
        sub->add_option("file", c.input, "Ontology in functional syntax")->required();
        return sub;
    };
    CLI::App* checkCmd = withInput("check", "Check consistency and concept satisfiability");
    CLI::App* classifyCmd = withInput("classify", "Print the inferred class hierarchy");
    CLI::App* diffCmd = withInput("diff", "Compare asserted and inferred hierarchies");
    CLI::App* probeCmd = withInput("probe", "Test probe classes from a probe file");
    probeCmd->add_option("--probes", c.probes, "Probe file")->required();
    probeCmd->add_flag("--expect-unsat", c.expectUnsat, "Succeed only if every probe is unsatisfiable");
    CLI::App* statsCmd = withInput("stats", "Print entity counts");
    statsCmd->add_option("--expect", c.expectCounts, "Reference counts to report deviations against");
    CLI::App* queryCmd = withInput("query", "Answer a competency query");
    queryCmd->add_option("kind", c.queryKind, "Query kind, e.g. superconcepts-of")->required();
    queryCmd->add_option("subject", c.subject, "Entity name or class expression")->required();
    queryCmd->add_option("role", c.role, "Role for fillers-of");
    CLI::App* siteCmd = withInput("site", "Write the ontology website and verify its links");
    siteCmd->add_option("--output", c.output, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*checkCmd) return check(c, out);
        if (*classifyCmd) return classifyCommand(c, out, err);
        if (*diffCmd) return diff(c, out, err);
        if (*probeCmd) return probe(c, out);
        if (*statsCmd) return stats(c, out);
        if (*queryCmd) return query(c, out);
        if (*siteCmd) return site(c, out, err);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitExceeded& e) {
        err << "resource limit exceeded: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const InconsistentOntology& e) {
        err << c.input << ": " << e.what() << "\n";
        return kFinding;
    } catch (const UndeclaredEntity& e) {
        err << c.input << ": " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace ontokit::cli
