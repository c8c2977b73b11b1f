#include <doctest.h>

#include "quasisym/cli.hpp"
#include "quasisym/io.hpp"
#include "quasisym/marginal.hpp"
#include "quasisym/symspace.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace quasisym;

namespace {

const std::string kData = QUASISYM_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("quasisym_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("shapley") {
    const auto r = run({"shapley", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == format_matrix(shapley(2)));
    const auto g = run({"shapley", "--n", "3", "--game", kData + "/glove.game"});
    CHECK(g.code == 0);
    CHECK(g.out == "1\t1/6\n2\t1/6\n3\t2/3\n");
    CHECK(run({"shapley", "--n", "4", "--game", kData + "/glove.game"}).code == 2);
    CHECK(run({"shapley", "--n", "13"}).code == 2);
}

TEST_CASE("dim") {
    const auto r = run({"dim", "--group", kData + "/c3.group"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "dimension (orbit formula) = 1"));
    CHECK(has(r.out, "dimension (cycle index) = 1"));
    const auto c = run({"dim", "--group", kData + "/caste23.group"});
    CHECK(has(c.out, "dimension (orbit formula) = 6"));
}

TEST_CASE("param output re-parses and passes check") {
    const auto r = run({"param", "--group", kData + "/c4.group", "--coeffs", "1/2,-1,3"});
    REQUIRE(r.code == 0);
    CHECK(has(r.out, "# dimension 3"));
    const auto matrix = temp_file("c4.matrix", r.out);
    const auto c = run({"check", "--matrix", matrix, "--group", kData + "/c4.group"});
    CHECK(c.code == 0);
    CHECK(has(c.out, "symmetry: ok"));
    // the same matrix is not S4-symmetric
    const auto s4 = temp_file("s4.group", "n=4\n(1 2)\n(1 2 3 4)\n");
    const auto f = run({"check", "--matrix", matrix, "--group", s4});
    CHECK(f.code == 1);
    CHECK(has(f.out, "symmetry: FAIL"));

    const auto base = run({"param", "--group", kData + "/c4.group"});
    CHECK(has(base.out, "# direction 3:"));
    CHECK(parse_matrix(base.out) == shapley(4));
    CHECK(run({"param", "--group", kData + "/c4.group", "--coeffs", "1,2"}).code == 2);
}

TEST_CASE("check reports quasi-value failures") {
    auto m = shapley(3);
    m(0, 0b110) = 1;
    const auto path = temp_file("bad.matrix", format_matrix(m));
    const auto r = run({"check", "--matrix", path});
    CHECK(r.code == 1);
    CHECK(has(r.out, "null-player: FAIL"));
    CHECK(has(r.out, "efficiency: FAIL"));
}

TEST_CASE("classify") {
    const auto a5 = run({"classify", "--group", kData + "/a5.group"});
    CHECK(a5.code == 0);
    CHECK(has(a5.out, "supertransitive: yes"));
    CHECK(has(a5.out, "dimension: 0"));
    const auto c4 = run({"classify", "--group", kData + "/c4.group"});
    CHECK(has(c4.out, "supertransitive: no"));
    CHECK(has(c4.out, "set-transitive: no"));
    const auto v = run({"classify", "--verify", "4"});
    CHECK(v.code == 0);
    CHECK(has(v.out, "result: ok"));
    const auto e = run({"classify", "--exotic"});
    CHECK(has(e.out, "(I VI)(II IV)(III V)"));
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "--verify", "7"}).code == 2);
}

TEST_CASE("marginal-avg") {
    const auto u = run({"marginal-avg", "--group", kData + "/c4.group", "--uniform"});
    CHECK(u.code == 0);
    CHECK(has(u.out, "# equals Shapley: yes"));
    CHECK(parse_matrix(u.out) == shapley(4));

    const auto group = parse_group(read_file(kData + "/c4.group"));
    // per-permutation weights: the six cosets of four elements carry 1/2 and 1/10 each
    std::string weights;
    const auto reps = coset_representatives(group);
    for (std::size_t k = 0; k < reps.size(); ++k)
        weights += reps[k].to_cycles() + " " + (k == 0 ? "1/8" : "1/40") + "\n";
    const auto wfile = temp_file("c4.weights", weights);
    const auto c = run({"marginal-avg", "--group", kData + "/c4.group", "--coset-weights", wfile});
    CHECK(c.code == 0);
    CHECK(has(c.out, "# symmetry: ok"));
    CHECK(has(c.out, "# equals Shapley: no"));

    const auto f = run({"marginal-avg", "--group", kData + "/a5.group", "--family", "1,2,3,4", "--alpha", "1/2"});
    CHECK(f.code == 0);
    CHECK(has(f.out, "# equals Shapley: yes"));

    CHECK(run({"marginal-avg", "--group", kData + "/c4.group"}).code == 2);
    CHECK(run({"marginal-avg", "--group", kData + "/c4.group", "--uniform", "--family", "1,2,3,4"}).code == 2);
}

TEST_CASE("exotic and usage errors") {
    const auto e = run({"exotic"});
    CHECK(e.code == 0);
    CHECK(has(e.out, "image order: 120"));
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    const auto missing = run({"dim", "--group", "/nonexistent/file"});
    CHECK(missing.code == 2);
    CHECK(has(missing.err, "cannot open"));
    const auto bad = run({"dim", "--group", temp_file("bad.group", "n=3\n(1 2)\n(1 4)\n")});
    CHECK(bad.code == 2);
    CHECK(has(bad.err, "line 3"));
    CHECK(run({"--help"}).code == 0);
}
