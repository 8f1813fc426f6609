#include "deriva/derivations.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run a shell command, capture stdout and the exit code
RunResult run(const std::string &cmd) {
    RunResult res;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string bin() { return std::string(DERIVA_BIN); }
std::string tmp_path(const std::string &name) { return std::string(DERIVA_TMPDIR) + "/" + name; }

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("dimensions of a regular dihedral cell") {
    RunResult r = run(bin() + " dimensions --family dihedral --n 3 --char 0 --format json");
    CHECK(r.exit_code == 0);
    json d = json::parse(r.out);
    CHECK(d["der"] == 3);
    CHECK(d["inner"] == 3);
    CHECK(d["outer"] == 0);
    CHECK(d["order"] == 6);
}

TEST_CASE("dimensions of a modular dicyclic cell") {
    RunResult r = run(bin() + " dimensions --family dicyclic --n 3 --char 3 --format json");
    CHECK(r.exit_code == 0);
    json d = json::parse(r.out);
    CHECK(d["der"] == 8);
    CHECK(d["inner"] == 6);
    CHECK(d["outer"] == 2);
}

TEST_CASE("dimensions of a cayley-table group") {
    write_file(tmp_path("c2.csv"), "0,1\n1,0\n");
    RunResult r = run(bin() + " dimensions --cayley " + tmp_path("c2.csv") + " --char 0 --format json");
    CHECK(r.exit_code == 0);
    json d = json::parse(r.out);
    CHECK(d["der"] == 0);
    CHECK(d["inner"] == 0);
    CHECK(d["outer"] == 0);
    CHECK(d["order"] == 2);
}

TEST_CASE("cayley ingestion accepts json tables and rejects malformed input") {
    write_file(tmp_path("c3.json"), R"({"table": [[0,1,2],[1,2,0],[2,0,1]], "generators": [1]})");
    RunResult ok = run(bin() + " classes --cayley " + tmp_path("c3.json") + " --char 0 --format json");
    CHECK(ok.exit_code == 0);
    json c = json::parse(ok.out);
    CHECK(c["class_count"] == 3);  // cyclic of order 3 is abelian

    write_file(tmp_path("bad.csv"), "0,1\n1,x\n");
    CHECK(run(bin() + " classes --cayley " + tmp_path("bad.csv") + " --char 0 2>/dev/null").exit_code == 3);

    write_file(tmp_path("loop.csv"), "0,1,2,3,4\n1,0,3,4,2\n2,3,4,0,1\n3,4,1,2,0\n4,2,0,1,3\n");
    CHECK(run(bin() + " classes --cayley " + tmp_path("loop.csv") + " --char 0 2>/dev/null").exit_code == 3);
}

TEST_CASE("verification succeeds on catalogued cells") {
    RunResult r = run(bin() + " verify --family semidihedral --n 2 --char 0 --format json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "PASS");
    CHECK(rep["dims"]["der"] == 9);

    RunResult mod = run(bin() + " verify --family dihedral --n 6 --char 3 --format json");
    CHECK(mod.exit_code == 0);
    json mrep = json::parse(mod.out);
    CHECK(mrep["status"] == "PASS");
    CHECK(mrep["dims"]["der"] == 8);
    CHECK(mrep["spec"]["regime"] == "modular");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run(bin() + " verify --family dihedral --n 3 --char 2 2>/dev/null").exit_code == 2);
    CHECK(run(bin() + " verify --family dihedral --n 3 --char 6 2>/dev/null").exit_code == 2);
    CHECK(run(bin() + " dimensions --family nosuch --n 3 --char 0 2>/dev/null").exit_code == 2);
    CHECK(run(bin() + " dimensions --char 0 2>/dev/null").exit_code == 2);  // no group source
    CHECK(run(bin() + " 2>/dev/null").exit_code == 2);                      // no subcommand
    CHECK(run(bin() + " dimensions --family dicyclic --n 1 --char 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("degenerate parameters pass behind the flag") {
    RunResult r = run(bin() +
                      " verify --family dicyclic --n 1 --char 0 --allow-degenerate --format json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "PASS");
    CHECK(rep["spec"]["degenerate"] == true);
}

TEST_CASE("sweep subsets and summary") {
    RunResult r = run(bin() + " sweep --families dihedral --chars 0 --format csv");
    CHECK(r.exit_code == 0);
    int rows = 0;
    for (char ch : r.out)
        if (ch == '\n')
            ++rows;
    // header + 8 cells + summary comment
    CHECK(rows == 10);
    CHECK(r.out.find("# summary: 8 cells, 8 pass, 0 fail") != std::string::npos);
}

TEST_CASE("sweep output is byte-identical at any parallelism") {
    std::string grid = R"({"dihedral": [3,4], "semidihedral": [2], "characteristics": [0,3]})";
    std::string env = "DERIVA_GRID='" + grid + "' ";
    for (const char *fmt : {"json", "csv", "text"}) {
        RunResult one = run(env + bin() + " sweep --parallel 1 --format " + fmt);
        RunResult four = run(env + bin() + " sweep --parallel 4 --format " + fmt);
        CHECK(one.exit_code == 0);
        CHECK(one.out == four.out);
    }
}

TEST_CASE("witness identifies inner derivations and outputs OUTER otherwise") {
    using namespace deriva;
    FiniteGroup g = FiniteGroup::dihedral(3);
    Field q = make_field(0);
    DerivationMatrix inner = inner_derivation(AlgebraElement::unit(g, q, 3));
    write_file(tmp_path("inner.json"), matrix_to_json(inner).dump());
    RunResult r = run(bin() + " witness " + tmp_path("inner.json") +
                      " --family dihedral --n 3 --char 0 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OUTER") == std::string::npos);
    // the printed element really conjugates to the same map
    json beta = json::parse(r.out);
    AlgebraElement parsed = element_from_json(g, q, beta);
    CHECK(inner_derivation(parsed) == inner);

    Field f3 = make_field(3);
    AlgebraElement fa = multiply(
        AlgebraElement::unit(g, f3, 1),
        sub(AlgebraElement::unit(g, f3, 1), AlgebraElement::unit(g, f3, 2)));
    auto res = extend_generator_map(GeneratorAssignment{{fa, AlgebraElement(g, f3)}});
    REQUIRE(std::holds_alternative<DerivationMatrix>(res));
    write_file(tmp_path("outer.json"), matrix_to_json(std::get<DerivationMatrix>(res)).dump());
    RunResult out = run(bin() + " witness " + tmp_path("outer.json") +
                        " --family dihedral --n 3 --char 3");
    CHECK(out.exit_code == 0);
    CHECK(out.out == "OUTER\n");
}

TEST_CASE("witness rejects maps violating the product rule") {
    using namespace deriva;
    FiniteGroup g = FiniteGroup::dihedral(3);
    Field q = make_field(0);
    DerivationMatrix ident(g, q);
    for (int e = 0; e < g.order(); ++e)
        ident.column(e)[(std::size_t)e] = q.one();
    write_file(tmp_path("ident.json"), matrix_to_json(ident).dump());
    CHECK(run(bin() + " witness " + tmp_path("ident.json") +
              " --family dihedral --n 3 --char 0 2>/dev/null")
              .exit_code == 3);
}

TEST_CASE("verification failure is reported as a theorem mismatch") {
    // a non-catalogued cayley group cannot be verified
    CHECK(run(bin() + " verify --cayley " + tmp_path("c2.csv") + " --char 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = tmp_path("out.json");
    RunResult r = run(bin() + " dimensions --family dihedral --n 4 --char 0 --format json --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    json d = json::parse(in);
    CHECK(d["der"] == 3);
}
