#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    json report;
};

fs::path scratch()
{
    fs::path d = fs::temp_directory_path() / "hopfcli_test";
    fs::create_directories(d);
    return d;
}

Run run(const std::string& args)
{
    fs::path out = scratch() / "report.json";
    fs::remove(out);
    std::string cmd = std::string(HOPFCLI_PATH) + " " + args + " --out " + out.string() + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    if (in)
        r.report = json::parse(in, nullptr, false);
    return r;
}

std::string write_file(const std::string& name, const std::string& text)
{
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("axioms")
{
    Run r = run("verify-axioms --n 3 --n1 1 --beta 1,1,1 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.report["schema_version"] == 1);
    CHECK(r.report["ok"] == true);
    CHECK(r.report["config"]["seed"] == 7);
    CHECK(r.report["config"]["beta"] == "1,1,1");
    CHECK(r.report["result"]["axioms"].size() > 0);
}

TEST_CASE("fuse")
{
    Run r = run("fuse --left 'V2(1,1,1;0)' --right 'V2(1,1,1;0)' --n 3 --n1 1 --beta 0,0,1");
    CHECK(r.code == 0);
    json want = {{"V0(1,1,1;0)", 1}, {"V3(1,1,1;1)", 1}};
    CHECK(r.report["result"]["fusion"] == want);
    CHECK(r.report["result"]["dimension_balanced"] == true);
}

TEST_CASE("config file")
{
    std::string cfg = write_file("run.cfg", "n=3\nbeta=0,0,1\nleft=V2(1,1,1;0)\nright=V3(1,1,1;0)\n");
    Run r = run("fuse --config " + cfg);
    CHECK(r.code == 0);
    CHECK(r.report["config"]["left"] == "V2(1,1,1;0)");
    json want = {{"V0(1,1,1;0)", 2}, {"V2(1,1,1;2)", 2}};
    CHECK(r.report["result"]["fusion"] == want);
}

TEST_CASE("relations")
{
    Run r = run("verify-relations --suite thm5.10 --n 3");
    CHECK(r.code == 0);
    CHECK(r.report["result"]["passed"] == true);
    CHECK(r.report["result"]["total"] == 6);

    // the two rings have different numbers of simples, so the check fails with a diagnostic
    Run rem = run("verify-relations --suite remark5.21 --n 3 --N 6");
    CHECK(rem.code == 1);
    REQUIRE(rem.report["result"]["relations"].size() == 2);
    CHECK(rem.report["result"]["relations"][0]["holds_as_printed"] == false);

    Run top = run("verify-relations --suite top-identity --n 2");
    CHECK(top.code == 0);
}

TEST_CASE("tables and rings")
{
    std::string labels = write_file("labels.txt", "# labels\nV0(2,2,2;0)\nVI(2,1,1;0)\n\nV2(1,1,1;0)\n");
    Run t = run("fusion-table --n 3 --beta 1,0,1 --labels-file " + labels);
    CHECK(t.code == 0);
    CHECK(t.report["result"]["labels"].size() == 3);
    CHECK(t.report["result"]["cells"].size() == 9);

    Run c = run("compare-rings --n 3 --N 6 --beta 1,0,0 --beta-b 1,0,0");
    CHECK(c.code == 0);
    CHECK(c.report["result"]["equal"] == true);
}

TEST_CASE("quotient checks")
{
    Run i = run("integral-check --n 3 --beta 1,1,1");
    CHECK(i.code == 0);
    CHECK(i.report["result"]["checked"] == 54);
    Run e = run("idempotents --n 3 --m 2 --n2 1 --beta 1,1,1");
    CHECK(e.code == 0);
    CHECK(e.report["result"]["count"] == 4);
}

TEST_CASE("exit codes")
{
    Run none = run("");
    CHECK(none.code == 2);
    CHECK(none.report["error"]["code"] == "UsageError");
    CHECK(run("fuse --bogus 1").code == 2);
    Run bad = run("fuse --left 'V9(' --right 'V0(1,1,1;0)'");
    CHECK(bad.code == 2);
    CHECK(bad.report["error"]["code"] == "ParseError");
    Run wrong = run("build-module --n 3 --beta 0,0,1 --label 'V0(1,1,1;1)'");
    CHECK(wrong.code == 1);
    CHECK(wrong.report["error"]["code"] == "WrongType");
}

TEST_CASE("reports are deterministic")
{
    fs::path out = scratch() / "report.json";
    run("verify-relations --suite thm5.8 --n 3");
    std::string a = slurp(out);
    run("verify-relations --suite thm5.8 --n 3");
    CHECK(a == slurp(out));
    CHECK(!a.empty());
}
