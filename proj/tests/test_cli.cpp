#include <doctest.h>

#include <oddsym/cli.hpp>
#include <oddsym/io.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace oddsym;

namespace {

struct Run
{
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("cli pair")
{
    const Run a = run({"pair", "--left", "2,2", "--right", "1,2,1", "--q", "generic"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == "1+2q^2+q^3\n");
    CHECK(run({"pair", "--left", "2,2", "--right", "1,2,1", "--q", "-1"}).out == "2\n");
    CHECK(run({"pair", "--basis", "mixed", "--left", "2,2", "--right", "2,2", "--q", "-1"}).out == "-1\n");
    CHECK(run({"pair", "--basis", "e", "--left", "3", "--right", "3", "--q", "-1"}).out == "-1\n");
    const Run j = run({"pair", "--left", "1^2", "--right", "2", "--format", "json"});
    const json v = json::parse(j.out);
    CHECK(v["value"] == json::array({1}));
    CHECK(v["left"] == json::array({1, 1}));
}

TEST_CASE("cli expand")
{
    CHECK(run({"expand", "--what", "s", "--index", "2,2,1"}).out == "s221 = 2h5 - 3h41 - h32 + h311 + h221\n");
    CHECK(run({"expand", "--what", "m", "--index", "2"}).out == "m2 = h11\n");
    CHECK(run({"expand", "--what", "e", "--index", "2", "--in-basis", "e"}).out == "e2 = e2\n");
    CHECK(run({"expand", "--what", "p", "--index", "2,2"}).out == "p22 = h1111\n");
    CHECK(run({"expand", "--what", "htilde", "--index", "1,2,1"}).out == "htilde(1,2,1) = h121 - h13 - h31 + h4\n");
    const json s = json::parse(run({"expand", "--what", "s", "--index", "1,1", "--format", "json"}).out);
    CHECK(odd_from_json(s["terms"]) == odd_from_json(json{{"1,1", 1}, {"2", -1}}));
    const Run csv = run({"expand", "--what", "m", "--index", "1,1", "--format", "csv"});
    CHECK(csv.out == "name,basis,term,coefficient\nm11,h,\"1,1\",-1\nm11,h,2,1\n");
    CHECK(run({"expand", "--what", "htilde", "--index", "2,1", "--in-basis", "e"}).code == exit_usage);
    CHECK(run({"expand", "--what", "s", "--index", "1,2"}).code == exit_usage);
}

TEST_CASE("cli tables of the form and Kostka numbers")
{
    const Run k = run({"kostka", "--degree", "5"});
    CHECK(k.code == exit_ok);
    CHECK(k.out.find("(2,2,1)               -1          0        1") != std::string::npos);
    const json kj = json::parse(run({"kostka", "--degree", "5", "--format", "json"}).out);
    CHECK(kj["entries"][3][0] == 2);
    CHECK(kj["entries"][5][2] == 2);

    const json g = json::parse(run({"gram", "--degree", "6", "--q", "-1", "--basis", "partitions", "--format", "json"}).out);
    CHECK(g["rows"][3] == json::array({2, 2, 2}));
    CHECK(g["entries"][3] == json::array({6, 6, 3, -3, 6, 5, 5, 3, 0, 3, 1}));
    const Run c = run({"gram", "--degree", "2", "--format", "csv"});
    CHECK(c.out == "deg. 2,h11,h2\nh11,1+q,1\nh2,1,1\n");
    CHECK(run({"gram", "--degree", "2", "--q", "0"}).out == "deg. 2  h11  h2\nh11       1   1\nh2        1   1\n");
    CHECK(run({"gram", "--degree", "99"}).code == exit_usage);
    CHECK(run({"gram", "--degree", "3", "--q", "x"}).code == exit_usage);
}

TEST_CASE("cli rsk and det")
{
    const Run r = run({"rsk", "--matrix", "[[1,0],[0,1],[1,0]]", "--format", "json"});
    CHECK(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["P"] == json::parse("[[1,1],[2]]"));
    CHECK(j["Q"] == json::parse("[[1,2],[3]]"));
    CHECK(j["sign_A"] == -1);
    CHECK(j["shape_sign"] == -1);
    CHECK(run({"rsk", "--verify", "--degree", "4"}).code == exit_ok);
    CHECK(run({"rsk", "--matrix", "[[1,-1]]"}).code == exit_usage);
    CHECK(run({"rsk", "--matrix", "nope"}).code == exit_usage);
    CHECK(run({"rsk"}).code == exit_usage);

    const Run d = run({"det", "--degree", "3", "--factors", "--format", "json"});
    CHECK(d.code == exit_ok);
    const json dj = json::parse(d.out);
    CHECK(dj["determinant_degree"] == 7);
    CHECK(dj["ok"] == true);
    CHECK(run({"det", "--degree", "2"}).out.rfind("det = q\n", 0) == 0);
}

TEST_CASE("cli verify")
{
    CHECK(run({"verify", "--suite", "semiorth", "--max-degree", "5"}).code == exit_ok);
    CHECK(run({"verify", "--suite", "primitives", "--max-degree", "6"}).code == exit_ok);
    const Run h = run({"verify", "--suite", "hopf", "--max-degree", "3", "--format", "json"});
    CHECK(h.code == exit_check_failed);
    const json j = json::parse(h.out);
    CHECK(j["ok"] == false);
    CHECK(run({"verify", "--suite", "nope"}).code == exit_usage);
}

TEST_CASE("cli appendix is byte stable")
{
    const auto dir = std::filesystem::temp_directory_path() / "oddsym_cli_appendix_test";
    std::filesystem::remove_all(dir);
    REQUIRE(run({"tables", "--appendix", "--out", (dir / "a").string()}).code == exit_ok);
    REQUIRE(run({"tables", "--appendix", "--out", (dir / "b").string()}).code == exit_ok);
    std::size_t files = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir / "a")) {
        ++files;
        CHECK(slurp(entry.path()) == slurp(dir / "b" / entry.path().filename()));
    }
    CHECK(files == 19);
    CHECK(slurp(dir / "a" / "basis_m.txt").find("m4 = 4h4 - 2h22 - h1111\n") != std::string::npos);
    CHECK(run({"tables", "--appendix"}).out == run({"tables", "--appendix"}).out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli usage errors")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
    CHECK(run({"pair", "--left", "2"}).code == exit_usage);
    CHECK(run({"kostka", "--degree", "3", "--format", "xml"}).code == exit_usage);
    const Run e = run({"pair", "--left", "2,x", "--right", "1"});
    CHECK(e.code == exit_usage);
    CHECK(e.err.find('\n') == e.err.size() - 1);
}
