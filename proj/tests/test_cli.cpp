#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galmeasure/catalog.hpp"
#include "galmeasure/cli.hpp"
#include "galmeasure/scenario_io.hpp"

using namespace galmeas;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << text;
    f.close();
    return path.string();
}

}  // namespace

TEST_CASE("repeated runs are byte-identical") {
    for (auto args : {std::vector<std::string>{"measure", "catalog:squares", "--e", "3"},
                      std::vector<std::string>{"closed-form", "catalog:fifth-root", "--target",
                                               "image", "--format", "table"},
                      std::vector<std::string>{"montecarlo", "catalog:squares", "--target",
                                               "trivial", "--e", "2", "--samples", "5000",
                                               "--seed", "9"}}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("spec worked examples through the CLI") {
    auto m = run({"measure", "catalog:squares", "--e", "3"});
    CHECK(m.code == 0);
    CHECK(m.out.find("\"value\": \"1/8\"") != std::string::npos);
    CHECK(m.out.find("\"value\": \"7/8\"") != std::string::npos);

    auto cf = run({"closed-form", "catalog:fifth-root", "--target", "image", "--format", "table"});
    CHECK(cf.code == 0);
    CHECK(cf.out.find("base: 5") != std::string::npos);
    CHECK(cf.out.find("1/625") != std::string::npos);  // e = 5 evaluation

    auto ul = run({"ultralimit", "catalog:squares", "--target", "full"});
    CHECK(ul.code == 0);
    CHECK(ul.out.find("\"value\": 1") != std::string::npos);

    auto os = run({"omega-sum", "catalog:squares", "--target", "full"});
    CHECK(os.out.find("\"value\": \"infinity\"") != std::string::npos);
    auto os2 = run({"omega-sum", "catalog:squares", "--target", "trivial", "--start", "2"});
    CHECK(os2.out.find("\"value\": \"1/2\"") != std::string::npos);
}

TEST_CASE("catalog entries round-trip through the file format") {
    for (const auto& id : catalog_ids()) {
        if (catalog_is_tower(id)) continue;
        auto doc = catalog_doc(id);
        std::string once = canonical_scenario_text(doc);
        auto reparsed = parse_scenario_text(once);
        std::string twice = canonical_scenario_text(reparsed);
        CHECK(once == twice);
        CHECK_NOTHROW((void)realize_scenario(reparsed, id));
    }
}

TEST_CASE("scenario files load and measure correctly") {
    std::string dir = GALMEASURE_SOURCE_DIR;
    auto r = run({"measure", dir + "/scenarios/fifth-root-semidirect.json", "--e", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\": \"1/5\"") != std::string::npos);

    auto v = run({"validate", dir + "/scenarios/s3-over-a3.json"});
    CHECK(v.code == 0);
    CHECK(v.out.find("\"split\": true") != std::string::npos);
}

TEST_CASE("invalid scenarios exit 2 with a named diagnostic") {
    std::string nonnormal = write_temp("bad_nonnormal.json", R"({
      "format-version": "1",
      "group": {"construction": "symmetric", "n": 3},
      "g0": [[1, 0, 2]],
      "targets": [{"name": "t", "generators": [[1, 2, 0], [1, 0, 2]]}]
    })");
    auto r1 = run({"validate", nonnormal});
    CHECK(r1.code == 2);
    CHECK(r1.err.find("NotNormal") != std::string::npos);

    std::string nonregular = write_temp("bad_nonregular.json", R"({
      "format-version": "1",
      "group": {"construction": "symmetric", "n": 3},
      "g0": [[1, 2, 0]],
      "targets": [{"name": "t", "generators": [[1, 2, 0]]}]
    })");
    auto r2 = run({"validate", nonregular});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("NotRegularTarget") != std::string::npos);

    std::string badjson = write_temp("bad_syntax.json", "{nope");
    auto r3 = run({"validate", badjson});
    CHECK(r3.code == 2);
    CHECK(r3.err.find("ParseError") != std::string::npos);
}

TEST_CASE("resource caps exit 3") {
    auto r = run({"measure", "catalog:s5-transposition", "--e", "2", "--max-group-order", "10"});
    CHECK(r.code == 3);
    CHECK(r.err.find("GroupTooLarge") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({"frobnicate", "catalog:squares"}).code == 64);
    CHECK(run({"measure"}).code == 64);
    CHECK(run({}).code == 64);
}

TEST_CASE("tower-only and scenario-only inputs are kept apart") {
    auto r1 = run({"measure", "catalog:c4-over-c2-tower", "--e", "2"});
    CHECK(r1.code == 2);
    auto r2 = run({"verify-refinement", "catalog:squares", "--e", "2"});
    CHECK(r2.code == 2);
    auto r3 = run({"verify-refinement", "catalog:c4-over-c2-tower", "--e", "2"});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("\"matches-prediction\": true") != std::string::npos);
}

TEST_CASE("measure-split agrees with measure through the CLI") {
    auto split = run({"measure-split", "catalog:fifth-root", "--e", "2", "--target", "image"});
    CHECK(split.code == 0);
    CHECK(split.out.find("\"value\": \"1/5\"") != std::string::npos);
    CHECK(split.out.find("\"method\": \"split-enumeration\"") != std::string::npos);
    auto plain = run({"measure", "catalog:fifth-root", "--e", "2", "--target", "image"});
    CHECK(plain.out.find("\"value\": \"1/5\"") != std::string::npos);
}

TEST_CASE("gaschutz subcommand works on scenarios and towers") {
    auto r1 = run({"gaschutz", "catalog:fifth-root", "--e", "2"});
    CHECK(r1.code == 0);
    CHECK(r1.out.find("\"multiplicative\": true") != std::string::npos);
    auto r2 = run({"gaschutz", "catalog:c4-over-c2-tower", "--e", "1"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("\"lift-count\": \"2\"") != std::string::npos);
    // the Frobenius group is not cyclic
    auto r3 = run({"gaschutz", "catalog:fifth-root", "--e", "1"});
    CHECK(r3.code == 2);
    CHECK(r3.err.find("NotEGenerated") != std::string::npos);
}
