#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct run_result {
    int code = -1;
    std::string output;
};

run_result run_cli(const std::string& args) {
    const char* bin = std::getenv("COMBPROB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "COMBPROB_BIN must point at the binary");
    std::string cmd = std::string("'") + bin + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    run_result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = std::move(out);
    return r;
}

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("COMBPROB_FIXTURES");
    REQUIRE_MESSAGE(dir != nullptr, "COMBPROB_FIXTURES must point at fixtures/");
    return std::string("'") + dir + "/" + name + "'";
}

class temp_file {
  public:
    temp_file(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() /
                ("combprob_test_" + name)) {
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }
    ~temp_file() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    std::string quoted() const { return "'" + path_.string() + "'"; }

  private:
    std::filesystem::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints exact values and distinguishes failure kinds") {
    run_result r = run_cli("eval " + fixture("mixed_five.cpm") + " w,v,u");
    CHECK(r.code == 0);
    CHECK(r.output == "1/5\n");

    r = run_cli("eval " + fixture("mixed_five.cpm") + " u");
    CHECK(r.code == 0);
    CHECK(r.output == "-1/5\n");

    r = run_cli("eval " + fixture("mixed_five.cpm") + " ''");
    CHECK(r.code == 0);
    CHECK(r.output == "0\n");

    r = run_cli("eval " + fixture("mixed_four.cpm") + " w,v,u,z");
    CHECK(r.code == 0);
    CHECK(r.output == "0\n");

    r = run_cli("eval " + fixture("partition_explicit.cpm") + " w,v,u");
    CHECK(r.code == 0);
    CHECK(r.output == "1\n");

    r = run_cli("eval " + fixture("mixed_five.cpm") + " q");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "unknown atom 'q'"));

    r = run_cli("eval " + fixture("partition_explicit.cpm") + " v");
    CHECK(r.code == 1);
    CHECK(contains(r.output, "is not in the family"));
}

TEST_CASE("validate accepts every shipped fixture") {
    for (const char* name :
         {"mixed_five.cpm", "mixed_four.cpm", "partition_explicit.cpm",
          "negative_unit.cpm", "fair_coin.cpm", "uniform_three.cpm"}) {
        run_result r = run_cli("validate " + fixture(name));
        CHECK_MESSAGE(r.code == 0, name, ": ", r.output);
        CHECK(contains(r.output, "summary: "));
        CHECK(contains(r.output, " 0 fail,"));
    }
}

TEST_CASE("validate reports an axiom breach with its witness") {
    temp_file doc("cp5.cpm",
                  "kind explicit\natoms w\nevent empty 0\nevent w 1/2\n"
                  "event -w -1/2\nevent w,-w 1/2\n");
    run_result r = run_cli("validate " + doc.quoted());
    CHECK(r.code == 1);
    CHECK(contains(r.output, "CP5: fail"));
    CHECK(contains(r.output, "{w, -w}"));
}

TEST_CASE("unreadable or unparsable documents use the io and usage codes") {
    temp_file doc("badrat.cpm", "kind digitalized\natoms w\nvalue w 1/0\n");
    run_result r = run_cli("validate " + doc.quoted());
    CHECK(r.code == 2);
    CHECK(contains(r.output, "(line 3)"));
    CHECK(contains(r.output, "invalid rational '1/0'"));

    r = run_cli("validate '/nonexistent/measure.cpm'");
    CHECK(r.code == 3);
    CHECK(contains(r.output, "cannot open"));
}

TEST_CASE("classify describes the partition measure") {
    run_result r = run_cli("classify " + fixture("partition_explicit.cpm"));
    CHECK(r.code == 0);
    CHECK(contains(r.output, "kind: explicit\n"));
    CHECK(contains(r.output, "digitalized: no\n"));
    CHECK(contains(r.output, "positively normalized: yes (witness {w, v, u})\n"));
    CHECK(contains(r.output, "negatively normalized: yes (witness {-w, -v, -u})\n"));
    CHECK(contains(r.output, "positively complete: no (p({w}) = 1/3)\n"));
    CHECK(contains(r.output, "negatively complete: no (p({-w}) = -1/3)\n"));
    CHECK(contains(r.output,
                   "atom sign classes: positive 1, negative 1, zero 0, "
                   "unknown 4\n"));
    CHECK(contains(r.output,
                   "family sign classes: positive 6, zero 4, negative 6\n"));
}

TEST_CASE("classify emits machine JSON with the classification object") {
    run_result r = run_cli("--format machine classify " +
                           fixture("partition_explicit.cpm"));
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["tool"]["name"] == "combprob");
    CHECK(j["classification"]["digitalized"] == false);
    CHECK(j["classification"]["positively_normalized"]["witness"] ==
          "{w, v, u}");
    CHECK(j["classification"]["positively_complete"]["value"] == "no");
    CHECK(j["classification"]["family_sign_classes"]["positive"] == 6);
}

TEST_CASE("convert refuses with the failing hypothesis clause") {
    run_result r = run_cli("convert " + fixture("mixed_five.cpm") +
                           " --target conventional");
    CHECK(r.code == 1);
    CHECK(contains(r.output, "input-valid: pass"));
    CHECK(contains(r.output, "positively-normalized: pass"));
    CHECK(contains(r.output, "positive-class-algebra: fail"));
    CHECK(contains(r.output, "family-not-algebra"));
    CHECK(contains(r.output, "result = {u}"));
    CHECK(contains(r.output, "operation = intersection"));

    r = run_cli("convert " + fixture("negative_unit.cpm") + " --target extended");
    CHECK(r.code == 1);
    CHECK(contains(r.output, "sign-alignment-positive: fail"));
    CHECK(contains(r.output, "(EP8)"));
}

TEST_CASE("convert embeds the fair coin and restricts it back exactly") {
    run_result embedded =
        run_cli("convert " + fixture("fair_coin.cpm") + " --target combined");
    REQUIRE(embedded.code == 0);
    CHECK(embedded.output.rfind("kind digitalized\natoms h t\n", 0) == 0);
    CHECK(contains(embedded.output, "value h 1/2\n"));

    temp_file doc("coin_embedded.cpm", embedded.output);
    run_result validated = run_cli("validate " + doc.quoted());
    CHECK(validated.code == 0);

    run_result back = run_cli("convert " + doc.quoted() + " --target conventional");
    CHECK(back.code == 0);
    CHECK(back.output ==
          "kind conventional\n"
          "atoms h t\n"
          "event empty 0\n"
          "event h 1/2\n"
          "event t 1/2\n"
          "event h,t 1\n");
}

TEST_CASE("convert embeds the uniform extended measure") {
    run_result embedded =
        run_cli("convert " + fixture("uniform_three.cpm") + " --target combined");
    REQUIRE(embedded.code == 0);
    CHECK(embedded.output.rfind("kind digitalized\natoms a b c\n", 0) == 0);

    temp_file doc("uniform_embedded.cpm", embedded.output);
    run_result validated = run_cli("validate " + doc.quoted());
    CHECK(validated.code == 0);
}

TEST_CASE("unsupported conversions and missing options are usage errors") {
    run_result r = run_cli("convert " + fixture("mixed_five.cpm") +
                           " --target combined");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "no conversion from 'digitalized'"));

    r = run_cli("convert " + fixture("fair_coin.cpm") + " --target extended");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "no conversion from 'conventional'"));

    r = run_cli("convert " + fixture("fair_coin.cpm"));
    CHECK(r.code == 2);

    r = run_cli("convert " + fixture("fair_coin.cpm") + " --target quantum");
    CHECK(r.code == 2);
}

TEST_CASE("check runs the full catalog on documents") {
    run_result r = run_cli("check " + fixture("partition_explicit.cpm"));
    CHECK(r.code == 0);
    CHECK(contains(r.output, "Lemma 2.11: flagged"));
    CHECK(contains(r.output, "  literal: fail"));
    CHECK(contains(r.output, "Proposition 2.4: not-applicable"));
    CHECK(contains(r.output,
                   "summary: 38 pass, 0 fail, 3 flagged, 3 not-applicable"));

    r = run_cli("check " + fixture("mixed_four.cpm"));
    CHECK(r.code == 0);
    CHECK(contains(r.output,
                   "summary: 41 pass, 0 fail, 3 flagged, 0 not-applicable"));
}

TEST_CASE("check sweeps the default and explicit grids") {
    run_result r = run_cli("check --sweep 2");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "candidates: 30 (invalid: 0, measures checked: 30)"));
    CHECK(contains(r.output, "Theorem 3.1: pass 1, fail 0, flagged 0, n/a 0"));
    CHECK(contains(r.output, "verdict: ok"));

    r = run_cli("check --sweep 2 --grid=-1/2,0,1/2");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "candidates: 12 (invalid: 0, measures checked: 12)"));

    r = run_cli("check --sweep 2 --grid=1/2,0");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "sign-symmetric"));

    r = run_cli("check --sweep 2 --grid=1/2,zero");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "invalid grid value 'zero'"));
}

TEST_CASE("machine sweep reports are byte-identical across runs") {
    std::string cmd = "--format machine check --sweep 2 --grid=-1/2,0,1/2";
    run_result a = run_cli(cmd);
    run_result b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
    nlohmann::json j = nlohmann::json::parse(a.output, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["ok"] == true);
    CHECK(j["sweep"]["candidates"] == 12);
    CHECK(j["results"].size() == 44);
}

TEST_CASE("JSON and text documents evaluate identically") {
    temp_file text_doc("half_text.cpm",
                       "kind digitalized\natoms w\nvalue w 1/2\n");
    temp_file json_doc(
        "half_json.cpm",
        "{\"kind\":\"digitalized\",\"atoms\":[\"w\"],\"values\":{\"w\":\"1/2\"}}");
    run_result t = run_cli("eval " + text_doc.quoted() + " w");
    run_result j = run_cli("eval " + json_doc.quoted() + " w");
    CHECK(t.code == 0);
    CHECK(t.output == "1/2\n");
    CHECK(j.code == 0);
    CHECK(j.output == t.output);
}

TEST_CASE("the atom budget applies to loaded documents") {
    run_result r =
        run_cli("--max-atoms 2 validate " + fixture("uniform_three.cpm"));
    CHECK(r.code == 2);
    CHECK(contains(r.output, "exceeding the limit of 2"));

    r = run_cli("--max-atoms 0 validate " + fixture("uniform_three.cpm"));
    CHECK(r.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    run_result r = run_cli("");
    CHECK(r.code == 2);

    r = run_cli("--wat");
    CHECK(r.code == 2);

    r = run_cli("--format xml validate " + fixture("fair_coin.cpm"));
    CHECK(r.code == 2);

    r = run_cli("check");
    CHECK(r.code == 2);
    CHECK(contains(r.output, "check needs a document or --sweep"));
}

TEST_CASE("machine validate emits the framed report schema") {
    run_result r =
        run_cli("--format machine validate " + fixture("mixed_five.cpm"));
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    CHECK(j["tool"]["name"] == "combprob");
    CHECK(j["tool"]["version"] == "1.0.0");
    CHECK(j["command"] == "validate");
    std::string dig = j["input"]["digest"];
    CHECK(dig.rfind("fnv1a64:", 0) == 0);
    REQUIRE(j["results"].size() == 5);
    const char* ids[] = {"CP1", "CP2", "CP3", "CP4", "CP5"};
    for (int i = 0; i < 5; ++i) {
        CHECK(j["results"][(std::size_t)i]["clause"] == ids[i]);
        CHECK(j["results"][(std::size_t)i]["status"] == "pass");
    }
    CHECK(j["summary"]["pass"] == 5);
    CHECK(j["summary"]["fail"] == 0);
}
