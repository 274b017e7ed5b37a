#include "loophom/cli/cli.hpp"

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace loophom;
using namespace loophom::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("loophom_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const auto path = dir_ / name;
        std::ofstream(path) << text;
        return path.string();
    }

private:
    fs::path dir_;
};

const Workspace& ws()
{
    static const Workspace w;
    return w;
}

std::string d1() { return ws().write("d1.json", R"({"name": "d1", "intersection_form": [[1]], "w2": [1], "p1": 5})"); }
std::string d2_spin() { return ws().write("d2s.json", R"({"intersection_form": [[0,1],[1,0]], "w2": [0,0], "p1": 8})"); }
std::string d2_nonspin() { return ws().write("d2n.json", R"({"intersection_form": [[1,0],[0,-1]], "w2": [1,0], "p1": 1})"); }
std::string d3() { return ws().write("d3.json", R"({"intersection_form": [[1,0,0],[0,1,0],[0,0,-1]], "w2": [1,0,0], "p1": 1})"); }
std::string d0(std::int64_t k)
{
    return ws().write("d0_" + std::to_string(k) + ".json",
                      R"({"intersection_form": [], "w2": [], "p1": )" + std::to_string(4 * k) + "}");
}

} // namespace

TEST_CASE("decompose")
{
    auto r = run_cli({"decompose", d1()});
    CHECK(r.code == 0);
    CHECK(r.out == "S^1 x Loop(S^2) x Loop(S^5)\n");
    r = run_cli({"decompose", d0(6)});
    CHECK(r.code == 3);
    CHECK(r.out.find("much more difficult") != std::string::npos);
    r = run_cli({"decompose", d0(2)});
    CHECK(r.code == 3);
    CHECK(r.out.find("S^3{2} is not an H-space") != std::string::npos);
    r = run_cli({"decompose", d0(1)});
    CHECK(r.code == 0);
    CHECK(r.out.find("warning:") != std::string::npos);
}

TEST_CASE("pi, series and compare text reports")
{
    auto r = run_cli({"pi", d1(), "--max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi_6(M) = Z/12 + Z/2\n") != std::string::npos);
    CHECK(r.out.find("pi_2(M) = Z^2\n") != std::string::npos);
    CHECK(r.out.find("warning") == std::string::npos);

    r = run_cli({"series", d3(), "--cutoff", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1, 4, 12, 33, 88\n");

    r = run_cli({"compare", d2_spin(), d2_nonspin()});
    CHECK(r.code == 0);
    CHECK(r.out.find("loop spaces equivalent: true") != std::string::npos);
    r = run_cli({"compare", d1(), d2_spin()});
    CHECK(r.out.find("loop spaces equivalent: false") != std::string::npos);
    r = run_cli({"compare", d0(3), d0(5)});
    CHECK(r.code == 3);
}

TEST_CASE("rational, koszul, model and describe")
{
    auto r = run_cli({"rational", d3(), "--cutoff", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ranks: 4, 6, 5") != std::string::npos);
    CHECK(r.out.find("rationally elliptic: false") != std::string::npos);

    r = run_cli({"rational", d1()});
    CHECK(r.out.find("not_coformal: dx=c^3") != std::string::npos);

    r = run_cli({"koszul", d3(), "--cutoff", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dual: 1, 4, 12, 33, 88") != std::string::npos);
    r = run_cli({"koszul", d1()});
    CHECK(r.code == 2);
    CHECK(r.out.find("NotQuadratic") != std::string::npos);

    r = run_cli({"model", d1(), "--k", "1", "--cutoff", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dx=c^3") != std::string::npos);
    CHECK(r.out.find("cohomology: 1, 0, 2, 0, 2, 0, 1") != std::string::npos);
    CHECK(run_cli({"model", d3()}).code == 3);

    r = run_cli({"describe", d0(15)});
    CHECK(r.code == 0);
    CHECK(r.out.find("k: 15") != std::string::npos);
}

TEST_CASE("exit codes for usage and validation")
{
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"decompose"}).code == 1);
    CHECK(run_cli({"decompose", d1(), "--format", "xml"}).code == 1);
    CHECK(run_cli({"pi", d1(), "--max", "1"}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);

    CHECK(run_cli({"decompose", ws().write("bad1.json", R"({"intersection_form": [[2]], "w2": [0], "p1": 0})")}).code == 2);
    CHECK(run_cli({"decompose", ws().write("bad2.json", R"({"intersection_form": [[1]], "w2": [1], "p1": 6})")}).code == 2);
    CHECK(run_cli({"decompose", ws().write("bad3.json", R"({"intersection_form": [[1,2],[0,1]], "w2": [0,0], "p1": 0})")}).code == 2);
    CHECK(run_cli({"decompose", ws().write("bad4.json", "{not json")}).code == 2);
    CHECK(run_cli({"decompose", ws().write("bad5.json", R"({"w2": [0], "p1": 0})")}).code == 2);
    CHECK(run_cli({"decompose", "/nonexistent/spec.json"}).code == 2);
    CHECK(run_cli({"pi", d1(), "--table", "/nonexistent/table.txt"}).code == 2);
}

TEST_CASE("JSON reports round trip and are deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{{"describe", d3()},
                                                                  {"decompose", d0(15)},
                                                                  {"pi", d1(), "--max", "8"},
                                                                  {"series", d3(), "--cutoff", "6"},
                                                                  {"rational", d2_spin(), "--cutoff", "6"},
                                                                  {"koszul", d3(), "--cutoff", "5"},
                                                                  {"model", d1()},
                                                                  {"compare", d1(), d3()},
                                                                  {"decompose", d0(6)}}) {
        auto with_json = args;
        with_json.push_back("--format");
        with_json.push_back("json");
        const auto a = run_cli(with_json);
        const auto b = run_cli(with_json);
        CHECK(a.out == b.out);
        const auto j = nlohmann::json::parse(a.out);
        CHECK(j["schema"] == kSchemaVersion);
        const Report report = Report::from_json(j);
        CHECK(Report::from_json(report.to_json()) == report);
        CHECK(emit_report(report, Format::Json) == a.out);
    }
}

TEST_CASE("table override")
{
    const std::string table = ws().write("table.txt", "2 6 0 12\n5 6 0 2\n2 5 0 2\n5 5 1\n");
    const auto a = run_cli({"pi", d1(), "--max", "6", "--table", table, "--format", "json"});
    const auto b = run_cli({"pi", d1(), "--max", "6", "--table", table, "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["result"]["groups"][4]["group"]["text"] == "Z/12 + Z/2");
    // pi_3 needs pi_3(S^2), absent from this table
    CHECK(j["result"]["groups"][1].contains("error"));
}

TEST_CASE("manifold spec parsing")
{
    const auto spec = parse_spec(nlohmann::json::parse(R"({"schema": 1, "name": "x", "intersection_form": [[1]], "w2": [1], "p1": 5})"));
    CHECK(spec.name == std::optional<std::string>("x"));
    CHECK(parse_spec(spec_to_json(spec)) == spec);
    const auto s4 = parse_spec(nlohmann::json::parse(R"({"intersection_form": [], "p1": 60})"));
    CHECK(validate_spec(s4).base.rank() == 0);
    try {
        parse_spec(nlohmann::json::parse(R"({"schema": 2, "intersection_form": [], "p1": 0})"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}
