#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    bool contains(const std::string& needle) const {
        return out.find(needle) != std::string::npos;
    }
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(VPART_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kHeightDoc =
    std::string(VPART_DATA_DIR) + "/height_nl_2006.vpart.json";

// writes a copy of the height document with one block's values scaled
std::string write_scaled_doc(const std::string& block, double factor,
                             const std::string& out_name) {
    std::ifstream in(kHeightDoc);
    REQUIRE(in.good());
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
    for (auto& blk : doc["blocks"])
        if (blk["name"] == block)
            for (auto& pt : blk["breakpoints"])
                pt[1] = pt[1].get<double>() * factor;
    std::ofstream out(out_name);
    out << doc.dump(2) << "\n";
    return out_name;
}

}  // namespace

TEST_CASE("cli: validate reports every check and exits zero on success") {
    auto r = run("validate " + kHeightDoc);
    CHECK(r.code == 0);
    CHECK(r.contains("well-formed: pass"));
    CHECK(r.contains("positive cover: pass"));
    CHECK(r.contains("continuity: pass"));
    CHECK(r.contains("attains one: pass"));
    CHECK(r.contains("unimodal plateau: pass"));
    CHECK(r.contains("bounded sum: pass"));
    CHECK(r.contains("sum range: [1, 1]"));
    CHECK(r.contains("valid: yes"));
    CHECK(r.contains("regular: yes"));
}

TEST_CASE("cli: validate flags a deflated block and exits one") {
    auto doc = write_scaled_doc("tall", 0.9, "cli_tall_09.json");
    auto r = run("validate " + doc);
    CHECK(r.code == 1);
    CHECK(r.contains("attains one: FAIL"));
    CHECK(r.contains("tall"));
    CHECK(r.contains("bounded sum: pass"));
    CHECK(r.contains("sum range: [0.9, 1]"));
    CHECK(r.contains("valid: no"));
    CHECK(r.contains("regular: no"));
    std::remove(doc.c_str());
}

TEST_CASE("cli: validate flags an inflated block and exits one") {
    auto doc = write_scaled_doc("medium", 1.05, "cli_medium_105.json");
    auto r = run("validate " + doc);
    CHECK(r.code == 1);
    CHECK(r.contains("well-formed: FAIL"));
    CHECK(r.contains("unimodal plateau: FAIL"));
    CHECK(r.contains("bounded sum: FAIL"));
    CHECK(r.contains("valid: no"));
    std::remove(doc.c_str());
}

TEST_CASE("cli: a missing file is an error, not a validation failure") {
    auto r = run("validate definitely_missing.json");
    CHECK(r.code == 2);
    CHECK(r.contains("error:"));
}

TEST_CASE("cli: eval prints each block degree") {
    auto r = run("eval " + kHeightDoc + " --x 1.5");
    CHECK(r.code == 0);
    CHECK(r.contains("short=0.625"));
    CHECK(r.contains("medium=0.375"));
    CHECK(r.contains("tall=0"));
}

TEST_CASE("cli: eval with a formula prints one value") {
    auto r = run("eval " + kHeightDoc + " --x 1.5 --expr 'short | medium'");
    CHECK(r.code == 0);
    CHECK(r.out == "0.625\n");

    auto luk = run("eval " + kHeightDoc +
                   " --x 1.5 --expr 'short & medium' --triple "
                   "standard,lukasiewicz,boundedsum");
    CHECK(luk.code == 0);
    CHECK(luk.out == "0\n");
}

TEST_CASE("cli: eval rejects unbound atoms and out-of-domain points") {
    auto r = run("eval " + kHeightDoc + " --x 1.5 --expr giant");
    CHECK(r.code == 2);
    CHECK(r.contains("unbound atom 'giant'"));

    auto far = run("eval " + kHeightDoc + " --x 9");
    CHECK(far.code == 2);

    auto missing_x = run("eval " + kHeightDoc);
    CHECK(missing_x.code == 2);
}

TEST_CASE("cli: invert pins a full target vector to one point") {
    auto r = run("invert " + kHeightDoc + " short=0 medium=0.4 tall=0.6");
    CHECK(r.code == 0);
    CHECK(r.out == "x = 1.92\n");
}

TEST_CASE("cli: invert lists all candidates for an ambiguous target") {
    auto r = run("invert " + kHeightDoc + " medium=0.4");
    CHECK(r.code == 0);
    CHECK(r.out == "x ∈ {1.51, 1.92}\n");
}

TEST_CASE("cli: invert prints plateaus as intervals") {
    auto r = run("invert " + kHeightDoc + " medium=1");
    CHECK(r.code == 0);
    CHECK(r.contains("[1.75, 1.89]"));
}

TEST_CASE("cli: unsatisfiable targets exit one with diagnostics") {
    auto r = run("invert " + kHeightDoc + " short=1 tall=1");
    CHECK(r.code == 1);
    CHECK(r.contains("no solution"));
    CHECK(r.contains("nearest attainable"));
}

TEST_CASE("cli: malformed targets are usage errors") {
    CHECK(run("invert " + kHeightDoc + " medium=abc").code == 2);
    CHECK(run("invert " + kHeightDoc + " medium=0.4x").code == 2);
    CHECK(run("invert " + kHeightDoc + " =0.4").code == 2);
    CHECK(run("invert " + kHeightDoc + " medium=1.5").code == 2);
    CHECK(run("invert " + kHeightDoc).code == 2);
}

TEST_CASE("cli: measure modes") {
    auto sharp = run("measure " + kHeightDoc + " --sharpness 1.8");
    CHECK(sharp.code == 0);
    CHECK(sharp.out == "sharpness = 1\n");

    auto sep = run("measure " + kHeightDoc + " --separation");
    CHECK(sep.code == 0);
    CHECK(sep.out == "separation = 0.5 (exact)\n");

    auto grid = run("measure " + kHeightDoc +
                    " --separation --triple standard,product,probsum");
    CHECK(grid.code == 0);
    CHECK(grid.contains("(grid, step 0.0003)"));

    auto cons = run("measure " + kHeightDoc + " --consistency short medium");
    CHECK(cons.code == 0);
    CHECK(cons.contains("consistency = 0.5 (exact) at x = 1.55"));
    CHECK(cons.contains("incompatible: no"));

    auto incomp = run("measure " + kHeightDoc + " --consistency short tall");
    CHECK(incomp.code == 0);
    CHECK(incomp.contains("incompatible: yes"));

    CHECK(run("measure " + kHeightDoc).code == 2);
    CHECK(run("measure " + kHeightDoc + " --separation --sharpness 1").code == 2);
}

TEST_CASE("cli: a non-dual triple is rejected up front") {
    auto r = run("eval " + kHeightDoc + " --x 1.5 --triple standard,min,boundedsum");
    CHECK(r.code == 2);
}

TEST_CASE("cli: demos run and label their expectations") {
    for (const std::string name :
         {"example51", "example44", "example45", "edgington", "intuitionistic"}) {
        auto r = run("demo " + name);
        CHECK(r.code == 0);
        CHECK(r.contains("expected"));
    }
    CHECK(run("demo example51").contains("computed"));
    CHECK(run("demo example51").contains("1.92"));
    CHECK(run("demo edgington").contains("rejected:"));
    CHECK(run("demo bogus").code == 2);
}

TEST_CASE("cli: reports are written as json") {
    std::string path = "cli_report_validate.json";
    auto r = run("validate " + kHeightDoc + " --report " + path);
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    auto doc = nlohmann::json::parse(in);
    CHECK(doc["valid"] == true);
    CHECK(doc["checks"]["bounded-sum"]["pass"] == true);
    std::remove(path.c_str());

    std::string ipath = "cli_report_invert.json";
    auto ir = run("invert " + kHeightDoc + " short=1 tall=1 --report " + ipath);
    CHECK(ir.code == 1);
    std::ifstream iin(ipath);
    REQUIRE(iin.good());
    auto idoc = nlohmann::json::parse(iin);
    CHECK(idoc["solutions"].empty());
    CHECK(idoc["feasibility"].size() == 2);
    std::remove(ipath.c_str());
}

TEST_CASE("cli: no subcommand and help") {
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("--help").contains("vague-partition"));
}
