#include "helpers.hpp"

#include "ontokit/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace ontokit;
using namespace ontokit::testing;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome runCli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kDisease = (kFixtures / "disease.ofn").string();
const std::string kProbes = (kFixtures / "table1.probes").string();

std::filesystem::path scratch(std::string_view name, std::string_view text) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("check") {
    const Outcome ok = runCli({"check", kDisease});
    CHECK(ok.code == cli::kSuccess);
    CHECK(ok.out.find("consistent: yes") != std::string::npos);

    const auto bad = scratch("ontokit-inconsistent.ofn",
                             "Ontology(<http://x.org/o>\nClassAssertion(<http://www.w3.org/2002/07/owl#Nothing> <http://x.org/a>))");
    CHECK(runCli({"check", bad.string()}).code == cli::kFinding);

    const auto unsat = scratch("ontokit-unsat.ofn",
                               "Ontology(<http://x.org/o>\nSubClassOf(<http://x.org/A> <http://www.w3.org/2002/07/owl#Nothing>))");
    const Outcome u = runCli({"check", unsat.string()});
    CHECK(u.code == cli::kFinding);
    CHECK(u.out.find("unsatisfiable concepts: A") != std::string::npos);
}

TEST_CASE("missing input and parse errors are usage errors") {
    const Outcome missing = runCli({"check", "definitely-missing.ofn"});
    CHECK(missing.code == cli::kUsage);
    CHECK(missing.err.find("definitely-missing.ofn") != std::string::npos);

    const auto broken = scratch("ontokit-broken.ofn", "Ontology(<http://x.org/o>\nSubClassOf(\n");
    const Outcome e = runCli({"check", broken.string()});
    CHECK(e.code == cli::kUsage);
    CHECK(e.err.find(broken.string() + ":3:1") != std::string::npos);

    const auto lax = scratch("ontokit-undeclared.ofn", "Ontology(<http://x.org/o>\nSubClassOf(<http://x.org/A> <http://x.org/B>))");
    CHECK(runCli({"check", lax.string()}).code == cli::kSuccess);
    CHECK(runCli({"--strict", "check", lax.string()}).code == cli::kUsage);

    CHECK(runCli({}).code == cli::kUsage);
    CHECK(runCli({"frobnicate"}).code == cli::kUsage);
    CHECK(runCli({"check"}).code == cli::kUsage);
    CHECK(runCli({"--format", "yaml", "check", kDisease}).code == cli::kUsage);
    CHECK(runCli({"--max-nodes", "0", "check", kDisease}).code == cli::kUsage);
    CHECK(runCli({"--help"}).code == cli::kSuccess);
}

TEST_CASE("resource limits map to their own exit code") {
    CHECK(runCli({"--max-nodes", "1", "check", kDisease}).code == cli::kResourceLimit);
    CHECK(runCli({"classify", kDisease, "--max-nodes", "1"}).code == cli::kResourceLimit);
}

TEST_CASE("classify prints the inferred tree") {
    const Outcome o = runCli({"classify", kDisease});
    CHECK(o.code == cli::kSuccess);
    CHECK(o.out.starts_with("Thing\n  Disease\n"));
    CHECK(o.out.find("      OrganismStructure (parents: DiseaseStructure, Infectious)\n") != std::string::npos);
}

TEST_CASE("diff") {
    const Outcome o = runCli({"diff", kDisease});
    CHECK(o.code == cli::kSuccess);
    CHECK(o.out == "added parent links: 1\n  OrganismStructure -> Infectious\nremoved parent links: 0\nnew equivalences: 0\n");
}

TEST_CASE("probe exit codes") {
    const Outcome lint = runCli({"probe", kDisease, "--probes", kProbes});
    CHECK(lint.code == cli::kFinding);
    CHECK(lint.out ==
          "ProbeType1: Autoimmune, Infectious -> UNSATISFIABLE\n"
          "ProbeType2: External, Internal -> UNSATISFIABLE\n"
          "ProbeType3: AreaStructure, OrganismStructure -> UNSATISFIABLE\n");
    CHECK(runCli({"probe", kDisease, "--probes", kProbes, "--expect-unsat"}).code == cli::kSuccess);

    const auto fine = scratch("ontokit-fine.probes", "P: Virus, Disease\n");
    CHECK(runCli({"probe", kDisease, "--probes", fine.string()}).code == cli::kSuccess);
    CHECK(runCli({"probe", kDisease, "--probes", fine.string(), "--expect-unsat"}).code == cli::kFinding);

    const auto bad = scratch("ontokit-bad.probes", "P: Virus, Nope\n");
    CHECK(runCli({"probe", kDisease, "--probes", bad.string()}).code == cli::kUsage);
    CHECK(runCli({"probe", kDisease}).code == cli::kUsage);
}

TEST_CASE("stats with reference counts") {
    const Outcome o = runCli({"stats", kDisease, "--expect", (kFixtures / "disease.counts").string()});
    CHECK(o.code == cli::kSuccess);
    CHECK(o.out.find("concepts: 24\n") != std::string::npos);
    CHECK(o.out.find("deviation: objectRoles expected 10 actual 9\n") != std::string::npos);
    CHECK(o.out.find("deviation: dataRoles") == std::string::npos);

    const auto bad = scratch("ontokit-bad.counts", "widgets 3\n");
    CHECK(runCli({"stats", kDisease, "--expect", bad.string()}).code == cli::kUsage);
}

TEST_CASE("json reports") {
    const Outcome s = runCli({"--format", "json", "stats", kDisease, "--expect", (kFixtures / "disease.counts").string()});
    REQUIRE(s.code == cli::kSuccess);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j["counts"]["concepts"] == 24);
    CHECK(j["deviations"].size() == 2);
    CHECK(j["deviations"][1]["field"] == "objectRoles");

    const auto d = nlohmann::json::parse(runCli({"diff", kDisease, "--format", "json"}).out);
    CHECK(d["added"].size() == 1);
    CHECK(d["added"][0]["parent"] == fixture::iri("Infectious").str());

    const auto p = nlohmann::json::parse(runCli({"--format", "json", "probe", kDisease, "--probes", kProbes}).out);
    CHECK(p["probes"].size() == 3);
    CHECK(p["probes"][2]["satisfiable"] == false);

    const auto c = nlohmann::json::parse(runCli({"--format", "json", "check", kDisease}).out);
    CHECK(c["consistent"] == true);
    CHECK(c["unsatisfiable"].empty());

    const auto t = nlohmann::json::parse(runCli({"--format", "json", "classify", kDisease}).out);
    CHECK(t["groups"][0]["members"][0] == vocab::thing().str());
}

TEST_CASE("query") {
    const Outcome sup = runCli({"query", kDisease, "superconcepts-of", "OrganismStructure"});
    CHECK(sup.code == cli::kSuccess);
    CHECK(sup.out == "Disease\nDiseaseStructure\nInfectious\n");
    CHECK(runCli({"query", kDisease, "instances-of", "Infectious"}).out == "Giardia_lambliia\n");
    CHECK(runCli({"query", kDisease, "fillers-of", "Giardia_lambliia", "hasGenetics"}).out.empty());
    CHECK(runCli({"query", kDisease, "bogus-kind", "x"}).code == cli::kUsage);
    CHECK(runCli({"query", kDisease, "symptoms-of", "Nobody"}).code == cli::kUsage);
    CHECK(runCli({"query", kDisease, "instances-of", "ObjectSomeValuesFrom("}).code == cli::kUsage);
}

TEST_CASE("site") {
    const auto dir = std::filesystem::temp_directory_path() / "ontokit-cli-site";
    std::filesystem::remove_all(dir);
    const Outcome o = runCli({"site", kDisease, "--output", dir.string()});
    CHECK(o.code == cli::kSuccess);
    CHECK(o.out.find("broken links: 0") != std::string::npos);
    CHECK(std::filesystem::exists(dir / "index.html"));
    CHECK(runCli({"site", kDisease}).code == cli::kUsage);
    std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"classify", kDisease},
                                                                  {"--format", "json", "diff", kDisease},
                                                                  {"stats", kDisease}})
        CHECK(runCli(args).out == runCli(args).out);
}
