#include "hopf/error.hpp"
#include "hopf/grothendieck.hpp"
#include "hopf/quotient.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace hopf;
using json = nlohmann::json;

namespace {

constexpr int schema_version = 1;

struct RunConfig {
    int n = 3;
    int n1 = 1;
    long q_power = 1;
    std::string beta;  // empty: zero, or the suite default for verify-relations
    std::string beta_b;
    int m = 1, n2 = 0, n3 = 0;
    long N = 0;
    long nu = 2;
    std::string suite;
    std::string label, left, right, labels_file;
    std::uint64_t seed = 1;
    int samples = 100;
    int degree = 4;
    std::string out = "hopfcli-report.json";
};

json config_json(const RunConfig& c, const std::string& command)
{
    return {{"command", command}, {"n", c.n},          {"n1", c.n1},     {"q_power", c.q_power},
            {"beta", c.beta},     {"beta_b", c.beta_b}, {"m", c.m},       {"n2", c.n2},
            {"n3", c.n3},         {"N", c.N},          {"nu", c.nu},     {"suite", c.suite},
            {"label", c.label},   {"left", c.left},    {"right", c.right}, {"labels_file", c.labels_file},
            {"seed", c.seed},     {"samples", c.samples}, {"degree", c.degree}};
}

// splits on commas outside parentheses, so cyc(6; 0, 1) stays whole
std::vector<std::string> split_top(const std::string& s)
{
    std::vector<std::string> out{""};
    int depth = 0;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        if (ch == ',' && depth == 0)
            out.emplace_back();
        else
            out.back() += ch;
    }
    return out;
}

std::array<CycScalar, 3> parse_beta(const RunConfig& c, const std::string& text, long extra)
{
    auto parts = split_top(text.empty() ? "0,0,0" : text);
    if (parts.size() != 3)
        throw Error("ParseError", "beta needs three comma-separated scalars, got '" + text + "'");
    AlgebraParams base = AlgebraParams::make(c.n, c.n1, {CycScalar(0), CycScalar(0), CycScalar(0)}, extra, c.q_power);
    return {parse_scalar(parts[0], base), parse_scalar(parts[1], base), parse_scalar(parts[2], base)};
}

long extra_modulus(const RunConfig& c)
{
    return c.N ? c.N : 1;
}

AlgebraParams make_params(const RunConfig& c)
{
    return AlgebraParams::make(c.n, c.n1, parse_beta(c, c.beta, extra_modulus(c)), extra_modulus(c), c.q_power);
}

json matrix_json(const Matrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json fusion_json(const FusionVector& v)
{
    json o = json::object();
    for (const auto& [l, k] : v)
        o[l] = k;
    return o;
}

json suite_json(const SuiteReport& r)
{
    json rels = json::array();
    for (const auto& o : r.relations) {
        json checks = json::array();
        for (const auto& c : o.checks)
            checks.push_back({{"reading", c.reading},
                              {"evaluated", c.evaluated},
                              {"holds", c.holds},
                              {"rhs", c.rhs},
                              {"diff", c.diff},
                              {"error", c.error}});
        rels.push_back({{"relation", o.relation},
                        {"instance", o.instance},
                        {"lhs", o.lhs},
                        {"holds_as_printed", o.holds_as_printed()},
                        {"holding_readings", o.holding_readings()},
                        {"checks", checks}});
    }
    return {{"suite", r.suite},
            {"params", r.params},
            {"passed", r.passed()},
            {"holding", r.count_holding()},
            {"total", r.relations.size()},
            {"relations", rels},
            {"notes", r.notes}};
}

std::vector<std::string> read_labels(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("ParseError", "cannot read labels file " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

// each command fills result and returns whether its checks passed
bool cmd_verify_axioms(const RunConfig& c, json& result)
{
    HopfAlgebra H(make_params(c));
    AxiomReport rep = check_hopf_axioms(H, c.degree, c.samples, c.seed);
    json rs = json::array();
    for (const auto& r : rep.results)
        rs.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"witness", r.witness}});
    result = {{"params", H.params().describe()}, {"axioms", rs}, {"passed", rep.passed()}};
    return rep.passed();
}

bool cmd_build_module(const RunConfig& c, json& result)
{
    if (c.label.empty())
        throw Error("ParseError", "build-module needs --label");
    AlgebraParams p = make_params(c);
    ModuleRep m = build_module(p, parse_label(c.label, p));
    VerifyReport v = verify_module(p, m);
    bool simple = is_simple(m);
    result = {{"params", p.describe()},
              {"label", m.descriptor},
              {"dim", m.dim},
              {"verified", v.passed},
              {"failed_relation", v.failed_relation},
              {"simple", simple},
              {"a", matrix_json(m.a)},
              {"b", matrix_json(m.b)},
              {"c", matrix_json(m.c)},
              {"x", matrix_json(m.x)},
              {"y", matrix_json(m.y)}};
    return v.passed && simple;
}

bool cmd_fuse(const RunConfig& c, json& result)
{
    if (c.left.empty() || c.right.empty())
        throw Error("ParseError", "fuse needs --left and --right");
    AlgebraParams p = make_params(c);
    FusionEngine e(p);
    FusionVector f = e.fuse(c.left, c.right);
    long want = static_cast<long>(e.module(c.left).dim) * e.module(c.right).dim;
    bool balanced = fusion_dim(p, f) == want;
    result = {{"params", p.describe()},
              {"left", e.canonical(c.left)},
              {"right", e.canonical(c.right)},
              {"fusion", fusion_json(f)},
              {"dimension_balanced", balanced}};
    return balanced;
}

bool cmd_fusion_table(const RunConfig& c, json& result)
{
    std::vector<std::string> labels;
    AlgebraParams p = make_params(c);
    if (!c.labels_file.empty()) {
        labels = read_labels(c.labels_file);
    } else if (c.N) {
        GelakiData g = specialize_gelaki(p, c.N, false);
        labels = g.labels;
    } else {
        throw Error("ParseError", "fusion-table needs --labels-file or --N");
    }
    FusionEngine e(p);
    FusionTable t = fusion_table(e, labels);
    json cells = json::array();
    for (size_t i = 0; i < t.labels.size(); ++i)
        for (size_t j = 0; j < t.labels.size(); ++j)
            cells.push_back({{"left", t.labels[i]}, {"right", t.labels[j]}, {"fusion", fusion_json(t.cells[i][j])}});
    result = {{"params", p.describe()}, {"labels", t.labels}, {"cells", cells}, {"commutative", t.commutative}};
    return t.commutative;
}

bool cmd_verify_relations(const RunConfig& c, json& result)
{
    if (c.suite.empty())
        throw Error("ParseError", "verify-relations needs --suite");
    SuiteConfig s;
    s.n = c.n;
    s.n1 = c.n1;
    s.nu = c.nu;
    if (c.N)
        s.N = c.N;
    SuiteReport r;
    if (c.suite == "top-identity") {
        r = top_identity_readings(c.n, c.n1);
    } else {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), c.suite) == names.end())
            throw Error("ParseError", "unknown suite " + c.suite);
        if (!c.beta.empty())
            s.beta = parse_beta(c, c.beta, extra_modulus(c));
        r = verify_suite(c.suite, s);
    }
    result = suite_json(r);
    return r.passed();
}

bool cmd_compare_rings(const RunConfig& c, json& result)
{
    if (!c.N || c.beta_b.empty())
        throw Error("ParseError", "compare-rings needs --N, --beta and --beta-b");
    AlgebraParams pa = make_params(c);
    AlgebraParams pb = AlgebraParams::make(c.n, c.n1, parse_beta(c, c.beta_b, c.N), c.N, c.q_power);
    GelakiData a = specialize_gelaki(pa, c.N, false);
    GelakiData b = specialize_gelaki(pb, c.N, false);
    RingComparison r = compare_fusion_rings(a, b);
    json bij = json::array();
    for (const auto& [x, y] : r.bijection)
        bij.push_back({x, y});
    result = {{"a", pa.describe()},
              {"b", pb.describe()},
              {"labels_a", a.labels},
              {"labels_b", b.labels},
              {"missing_a", a.missing},
              {"missing_b", b.missing},
              {"closure_a", r.closure_a},
              {"closure_b", r.closure_b},
              {"bijection", bij},
              {"mismatch", r.mismatch},
              {"equal", r.equal}};
    return r.equal;
}

std::pair<AlgebraParams, QuotientParams> quotient(const RunConfig& c)
{
    long N = static_cast<long>(c.n) * (c.n - 1) * c.m;
    AlgebraParams p = AlgebraParams::make(c.n, c.n1, parse_beta(c, c.beta, N), N, c.q_power);
    return {p, QuotientParams::make(p, c.m, c.n2, c.n3)};
}

bool cmd_integral_check(const RunConfig& c, json& result)
{
    auto [p, qp] = quotient(c);
    HopfAlgebra H(p);
    IntegralReport r = integral_check(H, qp);
    result = {{"params", p.describe()},
              {"N", qp.N},
              {"lambda", r.lambda.str()},
              {"counit_zero", r.counit_zero},
              {"left", r.left},
              {"right", r.right},
              {"checked", r.checked},
              {"witness", r.witness},
              {"passed", r.passed()}};
    return r.passed();
}

bool cmd_idempotents(const RunConfig& c, json& result)
{
    auto [p, qp] = quotient(c);
    HopfAlgebra H(p);
    IdempotentReport r = central_idempotents(H, qp);
    json es = json::array();
    for (const auto& e : r.idempotents)
        es.push_back(e.str());
    result = {{"params", p.describe()},
              {"N", qp.N},
              {"count", r.idempotents.size()},
              {"idempotents", es},
              {"block_dims", r.block_dims},
              {"orthogonal", r.orthogonal},
              {"complete", r.complete},
              {"central", r.central},
              {"passed", r.passed()}};
    return r.passed();
}

void write_report(const RunConfig& c, const json& report)
{
    std::string text = report.dump(2);
    std::cout << text << "\n";
    std::ofstream f(c.out);
    if (f)
        f << text << "\n";
    else
        std::cerr << "cannot write " << c.out << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig c;
    CLI::App app{"exact computations in a family of Hopf algebras and their representation rings"};
    app.set_config("--config", "", "key=value configuration file");
    // scalars and labels carry commas; keep config values whole
    app.get_config_formatter_base()->arrayDelimiter('\x1f');
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--n", c.n, "order of q");
    app.add_option("--n1", c.n1, "exponent n1");
    app.add_option("--q-power", c.q_power, "q = zeta_n^k");
    app.add_option("--beta", c.beta, "beta1,beta2,beta3 as scalar expressions");
    app.add_option("--beta-b", c.beta_b, "second beta for compare-rings");
    app.add_option("--m", c.m, "quotient parameter m");
    app.add_option("--n2", c.n2, "quotient parameter n2");
    app.add_option("--n3", c.n3, "quotient parameter n3");
    app.add_option("--N", c.N, "quotient a^N = 1, b = c = 1");
    app.add_option("--nu", c.nu, "second Radford parameter");
    app.add_option("--suite", c.suite, "relation suite, or top-identity");
    app.add_option("--label", c.label, "module label");
    app.add_option("--left", c.left, "left factor");
    app.add_option("--right", c.right, "right factor");
    app.add_option("--labels-file", c.labels_file, "one label per line");
    app.add_option("--seed", c.seed, "random seed");
    app.add_option("--samples", c.samples, "random elements per axiom");
    app.add_option("--degree", c.degree, "degree bound of random elements");
    app.add_option("--out", c.out, "JSON report path");

    using Command = bool (*)(const RunConfig&, json&);
    const std::vector<std::pair<std::string, Command>> commands{
        {"verify-axioms", cmd_verify_axioms},     {"build-module", cmd_build_module},
        {"fuse", cmd_fuse},                       {"fusion-table", cmd_fusion_table},
        {"verify-relations", cmd_verify_relations}, {"compare-rings", cmd_compare_rings},
        {"integral-check", cmd_integral_check},   {"idempotents", cmd_idempotents},
    };
    for (const auto& [name, fn] : commands)
        app.add_subcommand(name);

    json report{{"schema_version", schema_version}};
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report["ok"] = false;
        report["error"] = {{"code", "UsageError"}, {"message", e.what()}};
        write_report(c, report);
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    report["command"] = command;
    report["config"] = config_json(c, command);
    Command fn = nullptr;
    for (const auto& [name, f] : commands)
        if (name == command)
            fn = f;
    try {
        json result;
        bool ok = fn(c, result);
        report["ok"] = ok;
        report["result"] = result;
        report["error"] = nullptr;
        write_report(c, report);
        return ok ? 0 : 1;
    } catch (const Error& e) {
        report["ok"] = false;
        report["error"] = {{"code", e.code()}, {"message", e.what()}};
        write_report(c, report);
        return e.code() == "ParseError" ? 2 : 1;
    }
}
