// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include "support/properties.hpp"

#include "ontokit/cli.hpp"
#include "ontokit/fixture.hpp"
#include "ontokit/parser.hpp"
#include "ontokit/reasoner.hpp"
#include "ontokit/sitegen.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <variant>

using namespace ontokit;
namespace fs = std::filesystem;

namespace {

constexpr double kCommandBudgetSeconds = 1.0;
constexpr double kPropertyBudgetSeconds = 60.0;
constexpr std::size_t kPropertyInstances = 500;
constexpr std::uint64_t kPropertySeed = 20260415;

const fs::path kFixtures = ONTOKIT_FIXTURES_DIR;
const std::string kDisease = (kFixtures / "disease.ofn").string();
const std::string kProbes = (kFixtures / "table1.probes").string();

struct Run {
    int code;
    std::string out;
    std::string err;
    double seconds;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {code, out.str(), err.str(), seconds};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string secs(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(3) << s << " s";
    return o.str();
}

Verdict definedClassInference() {
    Verdict v;
    const Run r = cli({"--format", "json", "diff", kDisease});
    v.require(r.code == cli::kSuccess, "exit " + std::to_string(r.code));
    const auto j = nlohmann::json::parse(r.out);
    const std::string os = fixture::iri("OrganismStructure").str();
    const std::string inf = fixture::iri("Infectious").str();
    v.require(j["added"].size() == 1, "added links " + std::to_string(j["added"].size()));
    v.require(!j["added"].empty() && j["added"][0]["child"] == os && j["added"][0]["parent"] == inf,
              "added link is not OrganismStructure -> Infectious");
    v.require(j["removed"].empty(), "removed links present");
    v.require(r.seconds < kCommandBudgetSeconds, "took " + secs(r.seconds));
    if (v.pass) v.detail = "OrganismStructure -> Infectious, 0 removed, " + secs(r.seconds);
    return v;
}

Verdict probeTable() {
    Verdict v;
    const Run r = cli({"probe", kDisease, "--probes", kProbes, "--expect-unsat"});
    v.require(r.code == cli::kSuccess, "exit " + std::to_string(r.code));
    std::istringstream lines(r.out);
    std::string line;
    std::size_t unsat = 0;
    while (std::getline(lines, line)) unsat += line.ends_with("-> UNSATISFIABLE");
    v.require(unsat == 3, std::to_string(unsat) + " of 3 probes unsatisfiable");
    v.require(r.seconds < kCommandBudgetSeconds, "took " + secs(r.seconds));

    // Removing each probe's disjointness axiom must free that probe and only that probe.
    const Ontology o = fixture::buildDiseaseFixture();
    const auto probes = fixture::diseaseProbes();
    for (std::size_t i = 0; i < probes.size(); ++i) {
        Ontology weaker = o;
        for (const Axiom& a : o.axioms()) {
            const auto* d = std::get_if<axioms::DisjointConcepts>(&a);
            if (!d) continue;
            const auto has = [&](const Iri& x) { return std::ranges::find(d->members, Concept::named(x)) != d->members.end(); };
            if (has(probes[i].supers[0]) && has(probes[i].supers[1])) weaker.remove(a);
        }
        const fs::path file = fs::temp_directory_path() / ("ontokit-acceptance-flip" + std::to_string(i) + ".ofn");
        std::ofstream(file) << serialize(weaker);
        const Run flipped = cli({"--format", "json", "probe", file.string(), "--probes", kProbes});
        const auto j = nlohmann::json::parse(flipped.out);
        for (std::size_t k = 0; k < probes.size(); ++k)
            v.require(j["probes"][k]["satisfiable"] == (k == i),
                      "dropping disjointness for " + probes[i].name + " gives " + probes[k].name +
                          (j["probes"][k]["satisfiable"] == true ? " satisfiable" : " unsatisfiable"));
        fs::remove(file);
    }
    if (v.pass) v.detail = "3/3 UNSATISFIABLE, each flips alone, " + secs(r.seconds);
    return v;
}

Verdict consistency() {
    Verdict v;
    const Run r = cli({"--format", "json", "check", kDisease});
    v.require(r.code == cli::kSuccess, "exit " + std::to_string(r.code));
    const auto j = nlohmann::json::parse(r.out);
    v.require(j["consistent"] == true, "inconsistent");
    v.require(j["unsatisfiable"].empty(), "named concepts in the bottom group");
    const Taxonomy t = classify(fixture::buildDiseaseFixture());
    v.require(t.members(t.bottom()) == std::vector{vocab::nothing()}, "bottom group has named members");
    v.require(r.seconds < kCommandBudgetSeconds, "took " + secs(r.seconds));
    if (v.pass) v.detail = "consistent, bottom = {Nothing}, " + secs(r.seconds);
    return v;
}

Verdict counts() {
    Verdict v;
    const Run r = cli({"--format", "json", "stats", kDisease, "--expect", (kFixtures / "disease.counts").string()});
    v.require(r.code == cli::kSuccess, "exit " + std::to_string(r.code));
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"dataRoles", "annotationRoles", "individuals", "datatypes"})
        v.require(j["counts"][key] == 1, std::string(key) + " = " + j["counts"][key].dump());
    v.require(j["counts"]["concepts"] == 24, "concepts = " + j["counts"]["concepts"].dump());
    v.require(j["counts"]["objectRoles"] == 9, "objectRoles = " + j["counts"]["objectRoles"].dump());
    std::map<std::string, std::pair<int, int>> deviations;
    for (const auto& d : j["deviations"]) deviations[d["field"]] = {d["expected"], d["actual"]};
    v.require(deviations.size() == 2, std::to_string(deviations.size()) + " deviations");
    v.require(deviations["conceptsIncludingThing"] == std::pair{26, 25}, "class count deviation missing");
    v.require(deviations["objectRoles"] == std::pair{10, 9}, "object role deviation missing");
    v.require(r.seconds < kCommandBudgetSeconds, "took " + secs(r.seconds));
    if (v.pass) v.detail = "1/1/1/1 exact; classes 25 vs 26 and object roles 9 vs 10 reported as deviations";
    return v;
}

Verdict realization() {
    Verdict v;
    const Run r = cli({"query", kDisease, "instances-of", "Infectious"});
    v.require(r.code == cli::kSuccess, "exit " + std::to_string(r.code));
    v.require(r.out == "Giardia_lambliia\n", "instances: " + r.out);
    const Ontology o = fixture::buildDiseaseFixture();
    const Reasoner reasoner(o);
    v.require(reasoner.instancesOf(Concept::named(fixture::iri("Infectious"))) == std::set{fixture::iri("Giardia_lambliia")},
              "library instancesOf differs");
    const auto real = reasoner.realize();
    v.require(real.at(fixture::iri("Giardia_lambliia")) == std::set{fixture::iri("OrganismStructure")},
              "most specific concepts differ");
    v.require(r.seconds < kCommandBudgetSeconds, "took " + secs(r.seconds));
    if (v.pass) v.detail = "Infectious = {Giardia}, most specific = {OrganismStructure}";
    return v;
}

Verdict website() {
    Verdict v;
    const fs::path a = fs::temp_directory_path() / "ontokit-acceptance-site-a";
    const fs::path b = fs::temp_directory_path() / "ontokit-acceptance-site-b";
    fs::remove_all(a);
    fs::remove_all(b);
    const Run first = cli({"--format", "json", "site", kDisease, "--output", a.string()});
    const Run second = cli({"--format", "json", "site", kDisease, "--output", b.string()});
    v.require(first.code == cli::kSuccess && second.code == cli::kSuccess, "exit " + std::to_string(first.code));
    const auto j = nlohmann::json::parse(first.out);
    v.require(j["brokenLinks"] == 0, "broken links " + j["brokenLinks"].dump());

    const Ontology o = fixture::buildDiseaseFixture();
    const auto paths = pagePaths(o);
    std::size_t files = 0;
    bool identical = true;
    for (const auto& entry : fs::directory_iterator(a)) {
        ++files;
        identical = identical && slurp(entry.path()) == slurp(b / entry.path().filename());
    }
    v.require(identical, "two runs differ");
    v.require(files == paths.size() + 1, std::to_string(files) + " files for " + std::to_string(paths.size()) + " entities");
    for (const auto& [entity, path] : paths) v.require(fs::exists(a / path), "missing page " + path);

    const std::string giardia = stripTags(slurp(a / paths.at(Entity{EntityKind::Individual, fixture::iri("Giardia_lambliia")})));
    v.require(giardia.find("locomotion: Flagellates") != std::string::npos, "Giardia page lacks the locomotion value");

    const auto stats = nlohmann::json::parse(cli({"--format", "json", "stats", kDisease}).out)["counts"];
    const std::string index = slurp(a / "index.html");
    const std::regex cell("id=\"count-(\\w+)\">(\\d+)<");
    std::size_t cells = 0;
    for (auto it = std::sregex_iterator(index.begin(), index.end(), cell); it != std::sregex_iterator(); ++it) {
        ++cells;
        const std::string key = (*it)[1];
        v.require(stats.contains(key) && stats[key] == std::stoi((*it)[2]), "index count " + key + " differs from stats");
    }
    v.require(cells == stats.size(), "index has " + std::to_string(cells) + " count cells");
    fs::remove_all(a);
    fs::remove_all(b);
    if (v.pass)
        v.detail = std::to_string(files) + " pages, " + j["totalLinks"].dump() + " links, 0 broken, byte-identical reruns";
    return v;
}

Verdict propertySuite() {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    const testing::PropertyReport r = testing::checkReasonerProperties(kPropertyInstances, kPropertySeed);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(r.instances >= kPropertyInstances, std::to_string(r.instances) + " instances");
    v.require(r.ok(), std::to_string(r.failures.size()) + " violations, first: " + (r.ok() ? "" : r.failures.front()));
    v.require(seconds < kPropertyBudgetSeconds, "took " + secs(seconds));
    if (v.pass)
        v.detail = std::to_string(r.instances) + " ontologies, " + std::to_string(r.queries) + " query pairs, " +
                   std::to_string(r.countermodels) + " countermodels, " + std::to_string(r.witnessesChecked) +
                   " folded witnesses, " + secs(seconds);
    return v;
}

Verdict inverseMaterialization() {
    Verdict v;
    Ontology o = fixture::buildDiseaseFixture();
    const Iri d = fixture::iri("Giardiasis");
    const Iri s = fixture::iri("Diarrhoea");
    o.add(axioms::Declaration{{EntityKind::Individual, d}});
    o.add(axioms::Declaration{{EntityKind::Individual, s}});
    o.add(axioms::RoleAssertion{fixture::iri("hasSymptoms"), d, s});
    const Ontology once = materializeInverses(o);
    v.require(once.contains(axioms::RoleAssertion{fixture::iri("isSymptomsOf"), s, d}), "isSymptomsOf(s, d) missing");
    v.require(once.size() == o.size() + 1, "unexpected extra assertions");
    v.require(materializeInverses(once) == once, "not idempotent");
    if (v.pass) v.detail = "hasSymptoms(d, s) yields isSymptomsOf(s, d); second pass is a no-op";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"defined-class-inference", definedClassInference},
        {"probe-table", probeTable},
        {"consistency", consistency},
        {"entity-counts", counts},
        {"realization", realization},
        {"website", website},
        {"reasoner-properties", propertySuite},
        {"inverse-materialization", inverseMaterialization},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::cout << (v.pass ? "PASS " : "FAIL ") << name << " (" << v.detail << ")\n";
    }
    return failures == 0 ? 0 : 1;
}
