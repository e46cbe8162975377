#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "filtcat/api.hpp"
#include "filtcat/error.hpp"
#include "filtcat/generate.hpp"
#include "filtcat/instance.hpp"

using namespace filtcat;

static std::string shipped_path() {
    return std::string(FILTCAT_REPO_DIR) + "/instances/coim_vs_im.json";
}

static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

TEST_CASE("unknown command") {
    CommandRequest req;
    req.command = "frobnicate";
    CHECK_THROWS_AS(run_command(req), UnknownCommand);
}

TEST_CASE("command roster") {
    std::vector<std::string> names = command_names();
    for (const char* c : {"check", "kappa", "rees", "resolution", "transpose", "op",
                          "strict", "truncate", "cone", "cohomology", "lkappa", "tensor",
                          "ring-check", "demo", "verify", "generate"})
        CHECK(std::find(names.begin(), names.end(), c) != names.end());
}

TEST_CASE("shipped instance file is in canonical form") {
    Instance ins = load_instance(shipped_path());
    CHECK(instance_text(ins) == slurp(shipped_path()));
}

TEST_CASE("check on the shipped instance") {
    CommandRequest req;
    req.command = "check";
    req.in_path = shipped_path();
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("all objects validated") != std::string::npos);
}

TEST_CASE("image and coimage dims of the shipped morphism") {
    CommandRequest req;
    req.command = "op";
    req.in_path = shipped_path();
    req.name = "f";
    req.kind = "im";
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("dims 2,3,4,5,5\n") != std::string::npos);

    req.kind = "coim";
    res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("dims 1,2,3,4,5\n") != std::string::npos);
}

TEST_CASE("strict reports the failure") {
    CommandRequest req;
    req.command = "strict";
    req.in_path = shipped_path();
    req.name = "f";
    CommandResult res = run_command(req);
    CHECK_FALSE(res.ok);
    CHECK(res.text.find("strict: no") != std::string::npos);
    CHECK(res.text.find("mono: yes") != std::string::npos);
    CHECK(res.text.find("epi: yes") != std::string::npos);
}

TEST_CASE("demo prints the verdict") {
    CommandRequest req;
    req.command = "demo";
    req.args = {"coim-vs-im"};
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("f is mono+epi but not strict\n") != std::string::npos);
    CHECK(res.text.find(
              "coim f -> im f is pointwise injective with zero filtered cokernel: yes") !=
          std::string::npos);
}

TEST_CASE("verify emits the tally line and structured failures") {
    CommandRequest req;
    req.command = "verify";
    req.suite = "coim-vs-im";
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("1/1 passed\n") != std::string::npos);

    nlohmann::json js = nlohmann::json::parse(res.json_text);
    CHECK(js.at("ok") == true);
    CHECK(js.at("command") == "verify");
    CHECK(js.at("passed") == 1);
    CHECK(js.at("failures").empty());
}

TEST_CASE("verify aliases and determinism") {
    CommandRequest req;
    req.command = "verify";
    req.suite = "main1";
    req.trials = 5;
    req.seed = 42;
    CommandResult a = run_command(req);
    CHECK(a.ok);
    CHECK(a.text.find("suite: rees-resolution\n") != std::string::npos);
    CHECK(a.text.find("5/5 passed\n") != std::string::npos);
    CommandResult b = run_command(req);
    CHECK(a.text == b.text);
    CHECK(a.json_text == b.json_text);
}

TEST_CASE("kappa and rees over the shipped instance") {
    CommandRequest req;
    req.command = "kappa";
    req.in_path = shipped_path();
    req.name = "M";
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("unit is iso (input already filtered): yes") != std::string::npos);

    req.command = "rees";
    req.name = "Mp";
    res = run_command(req);
    CHECK(res.ok);
    // partial sums of (1, 2, 3, 4, 5)
    CHECK(res.text.find("dims 1,3,6,10,15") != std::string::npos);
}

TEST_CASE("resolution of a shipped functor") {
    CommandRequest req;
    req.command = "resolution";
    req.in_path = shipped_path();
    req.name = "Mp";
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("strictly exact: yes") != std::string::npos);
}

TEST_CASE("cohomology of a saved exact complex") {
    Instance ins = coim_vs_im_instance();
    // two-term complex carried by the shipped morphism: H^0 = ker, H^1 = coker
    ins.complexes["X"] =
        Complex::make(ins.poset, 0, {ins.functor("Mp"), ins.functor("M")},
                      {ins.morphism("f")});
    std::string path = "/tmp/filtcat_test_cohom.json";
    save_instance(ins, path);

    CommandRequest req;
    req.command = "cohomology";
    req.in_path = path;
    req.args = {"X", "0"};
    CommandResult res = run_command(req);
    CHECK(res.ok);
    CHECK(res.text.find("dims 0,0,0,0,0") != std::string::npos);

    // f is injective but not pointwise surjective: H^1 is the levelwise coker
    req.args = {"X", "1"};
    res = run_command(req);
    CHECK(res.text.find("dims 1,1,1,1,0") != std::string::npos);
}

TEST_CASE("generate writes loadable canonical files") {
    for (const std::string kind :
         {"poset", "functor", "filtered", "morphism", "complex", "ring", "module",
          "instance"}) {
        CommandRequest req;
        req.command = "generate";
        req.kind = kind;
        req.seed = 7;
        std::string path = "/tmp/filtcat_test_gen_" + kind + ".json";
        req.out_path = path;
        CommandResult res = run_command(req);
        CHECK(res.ok);
        Instance ins = load_instance(path);
        CHECK(instance_text(ins) == slurp(path));

        CommandRequest chk;
        chk.command = "check";
        chk.in_path = path;
        CHECK(run_command(chk).ok);
    }
}

TEST_CASE("generated module instances pass ring-check and feed tensor") {
    CommandRequest gen;
    gen.command = "generate";
    gen.kind = "module";
    gen.seed = 3;
    std::string path = "/tmp/filtcat_test_gen_mod2.json";
    gen.out_path = path;
    CHECK(run_command(gen).ok);

    CommandRequest rc;
    rc.command = "ring-check";
    rc.in_path = path;
    rc.name = "A";
    CommandResult res = run_command(rc);
    CHECK(res.ok);
    CHECK(res.text.find("action laws hold") != std::string::npos);

    CommandRequest tn;
    tn.command = "tensor";
    tn.in_path = path;
    tn.args = {"P", "P"};
    res = run_command(tn);
    CHECK(res.ok);
    CHECK(res.text.find("filtered reflection: dims") != std::string::npos);
}

TEST_CASE("missing inputs fail with named errors") {
    CommandRequest req;
    req.command = "op";
    req.in_path = shipped_path();
    req.name = "f";
    CHECK_THROWS_AS(run_command(req), ValidationError);  // no --kind

    req.command = "kappa";
    req.name = "";
    CHECK_THROWS_AS(run_command(req), ValidationError);  // no name

    req.command = "check";
    req.in_path = "/tmp/filtcat_does_not_exist.json";
    CHECK_THROWS(run_command(req));
}
