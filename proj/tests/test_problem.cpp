#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "rdm/problem.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rdm;
using namespace rdm::testing;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> corpus() {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(RDM_PROBLEMS_DIR))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

json factor(std::vector<long> coeffs, int e) { return {{"coeffs", coeffs}, {"exp", e}}; }

}  // namespace

TEST_CASE("valid documents") {
    ProblemDocument a = parse_problem(R"({"kind":"abelian","matrix":[[-2]]})");
    CHECK(a.kind == ProblemKind::abelian);
    CHECK(a.matrix == IntMatrix{{-2}});
    CHECK(a.options.order == 12);
    CHECK(a.options.congruence_range == 12);

    ProblemDocument f = parse_problem(R"({"kind":"free","rank":2,"images":["ab","a"]})");
    CHECK(f.kind == ProblemKind::free);
    CHECK(f.rank == 2);
    CHECK(f.words == std::vector<std::string>{"ab", "a"});

    ProblemDocument big = parse_problem(R"({"kind":"abelian","matrix":[["123456789012345678901234567890"]]})");
    CHECK(big.matrix(0, 0) == Integer("123456789012345678901234567890"));
}

TEST_CASE("infinite Reidemeister number is a validation error") {
    CHECK_THROWS_AS(parse_problem(R"({"kind":"abelian","matrix":[[1]]})"), InfiniteReidemeister);
    CHECK_THROWS_AS(parse_problem(R"({"kind":"abelian","matrix":[[1]]})"), ValidationError);
}

TEST_CASE("schema errors name the field") {
    auto message = [](const std::string& text) -> std::string {
        try {
            parse_problem(text);
        } catch (const SchemaError& e) {
            return e.what();
        } catch (const std::exception& e) {
            return std::string("wrong type: ") + e.what();
        }
        return "accepted";
    };
    CHECK(message("{") .find("line") != std::string::npos);
    CHECK(message("[1]").find("object") != std::string::npos);
    CHECK(message(R"({"matrix":[[2]]})").find("'kind'") != std::string::npos);
    CHECK(message(R"({"kind":"torus"})").find("'kind'") != std::string::npos);
    CHECK(message(R"({"kind":"abelian","matrix":[[2]],"extra":1})").find("'extra'") != std::string::npos);
    CHECK(message(R"({"kind":"abelian","matrix":[[2, "x"]]})").find("'matrix[0]") != std::string::npos);
    CHECK(message(R"({"kind":"abelian","matrix":[[2]],"options":{"order":"12"}})").find("'options.order'") !=
          std::string::npos);
    CHECK(message(R"({"kind":"free","rank":2,"images":["ab",3]})").find("'images[1]'") != std::string::npos);
}

TEST_CASE("validation errors name the field") {
    auto message = [](const std::string& text) -> std::string {
        try {
            parse_problem(text);
        } catch (const SchemaError& e) {
            return std::string("schema: ") + e.what();
        } catch (const ValidationError& e) {
            return e.what();
        }
        return "accepted";
    };
    const std::string s3 = R"("group":{"degree":3,"generators":[[1,2,0],[1,0,2]]})";
    CHECK(message(R"({"kind":"abelian","matrix":[[1,2]]})").find("square") != std::string::npos);
    CHECK(message(R"({"kind":"abelian","matrix":[]})").find("'matrix'") != std::string::npos);
    CHECK(message(R"({"kind":"finite",)" + s3 + R"(,"images":[[0,0,1],[1,0,2]]})").find("'images[0]'") !=
          std::string::npos);
    // (0 1 2) -> (0 1) does not extend to a homomorphism
    CHECK(message(R"({"kind":"finite",)" + s3 + R"(,"images":[[1,0,2],[1,0,2]]})").find("homomorphism") !=
          std::string::npos);
    CHECK(message(R"({"kind":"finite",)" + s3 + R"(,"images":[[1,2,0]]})").find("one image per generator") !=
          std::string::npos);
    // image outside the group generated by a 3-cycle
    CHECK(message(R"({"kind":"finite","group":{"degree":3,"generators":[[1,2,0]]},"images":[[1,0,2]]})")
              .find("not an element") != std::string::npos);
    // psi must commute with the image of phi_F
    CHECK(message(R"({"kind":"product","matrix":[[2]],)" + s3 + R"(,"images":[[1,2,0],[1,0,2]],"psi":[[1,2,0]]})")
              .find("'psi'") != std::string::npos);
    CHECK(message(R"({"kind":"free","rank":2,"images":["ab","c"]})").find("'images'") != std::string::npos);
    CHECK(message(R"({"kind":"free","rank":2,"images":["a+b","a"]})").find("'images[0]'") != std::string::npos);
    CHECK(message(R"({"kind":"free","rank":0,"images":[]})").find("'rank'") != std::string::npos);
    CHECK(message(R"({"kind":"finite","group":{"degree":4,"generators":[[1,2,3,0],[1,0,2,3]]},"images":[[1,2,3,0],[1,0,2,3]]})")
              .find("accepted") != std::string::npos);
}

TEST_CASE("group order cap") {
    const std::string s4 = R"({"kind":"finite","group":{"degree":4,"generators":[[1,2,3,0],[1,0,2,3]]},"images":[[1,2,3,0],[1,0,2,3]]})";
    CHECK_NOTHROW(parse_problem(s4, 24));
    CHECK_THROWS_AS(parse_problem(s4, 23), ValidationError);
}

TEST_CASE("serialization is idempotent") {
    for (const auto& path : corpus()) {
        CAPTURE(path.string());
        ProblemDocument doc;
        try {
            doc = parse_problem(slurp(path));
        } catch (const ValidationError&) {
            continue;
        }
        json once = serialize(doc);
        json twice = serialize(parse_problem(once.dump()));
        CHECK(once == twice);
        CHECK(once["options"].contains("torsion_angles"));
    }
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = random_hyperbolic_free(rng, 3, -9, 9);
        json doc = {{"kind", "abelian"}, {"matrix", json::array()}};
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
            doc["matrix"].push_back(row);
        }
        doc["options"] = {{"torsion_angles", {make_rational(uniform(rng, 1, 30), uniform(rng, 31, 60)).get_str()}}};
        json once = serialize(parse_problem(doc));
        CHECK(serialize(parse_problem(once)) == once);
        CHECK(once["matrix"] == doc["matrix"]);
    }
}

TEST_CASE("report for the doubling-and-reflection example") {
    Report rep = run(parse_problem(R"({"kind":"abelian","matrix":[[-2]]})"));
    CHECK(rep.agreement);
    const json& b = rep.body;
    REQUIRE(b["counts"]["values"].size() == 12);
    long power = 1;
    for (std::size_t n = 1; n <= 12; ++n) {
        power *= -2;
        CHECK(b["counts"]["values"][n - 1]["value"].get<long>() == std::labs(1 - power));
    }
    json factors = b["zeta"]["factors"];
    CHECK(factors.size() == 2);
    CHECK(std::find(factors.begin(), factors.end(), factor({1, 1}, 1)) != factors.end());
    CHECK(std::find(factors.begin(), factors.end(), factor({1, -2}, -1)) != factors.end());
    CHECK(b["zeta"]["series_agree"].get<bool>());
    CHECK(b["congruences"]["all_zero"].get<bool>());
    for (const auto& r : b["congruences"]["residues"]) CHECK(r["residue"].get<long>() == 0);
    CHECK(b["functional_equation"]["epsilon"] == "-1/2");
    CHECK(b["functional_equation"]["exponent"] == -1);
    REQUIRE(b["torsion"]["values"].size() == 1);
    CHECK(b["torsion"]["values"][0]["via_zeta"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b["torsion"]["values"][0]["via_lefschetz"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(b.contains("elapsed_seconds"));
    CHECK(b["input"] == serialize(parse_problem(R"({"kind":"abelian","matrix":[[-2]]})")));
}

TEST_CASE("report for the Fibonacci substitution") {
    Report rep = run(parse_problem(R"({"kind":"free","rank":2,"images":["ab","a"]})"));
    CHECK(rep.agreement);
    CHECK(rep.body["bounds"]["radius_lower_bound_norm"] == "1/3");
    CHECK(rep.body["bounds"]["radius_lower_bound_spectral"].get<double>() ==
          doctest::Approx(2 / (1 + std::sqrt(5.0))).epsilon(1e-9));
}

TEST_CASE("report for the identity on S3") {
    Report rep = run(parse_problem(
        R"({"kind":"finite","group":{"degree":3,"generators":[[1,2,0],[1,0,2]]},"images":[[1,2,0],[1,0,2]]})"));
    CHECK(rep.agreement);
    const json& first = rep.body["counts"]["values"][0];
    CHECK(first["value"] == 3);
    CHECK(first["trace_formula"] == 3);
    CHECK(first["oracle"] == 3);
    CHECK(rep.body["reduction"]["r_restricted"] == 3);
}

TEST_CASE("every section names its formula and its check") {
    for (const auto& path : corpus()) {
        CAPTURE(path.string());
        ProblemDocument doc;
        try {
            doc = parse_problem(slurp(path));
        } catch (const ValidationError&) {
            continue;
        }
        Report rep = run(doc);
        CHECK(rep.agreement);
        CHECK(rep.body["agreement"].get<bool>());
        for (const char* section : {"counts", "zeta", "congruences", "functional_equation", "torsion", "bounds", "reduction"}) {
            if (!rep.body.contains(section)) continue;
            const json& s = rep.body[section];
            if (s.contains("applicable") && !s["applicable"].get<bool>()) continue;
            CAPTURE(section);
            CHECK(s.contains("formula"));
            CHECK((s.contains("check") || s.contains("checks")));
        }
        CHECK_FALSE(rep.to_text().empty());
    }
}

TEST_CASE("section selection") {
    ProblemDocument doc = parse_problem(R"({"kind":"abelian","matrix":[[2,1],[1,1]]})");
    Report t = run(doc, ReportSection::torsion);
    CHECK(t.body.contains("torsion"));
    CHECK_FALSE(t.body.contains("counts"));
    CHECK_FALSE(t.body.contains("zeta"));
    Report z = run(doc, ReportSection::zeta);
    CHECK(z.body.contains("zeta"));
    CHECK_FALSE(z.body.contains("congruences"));
}

TEST_CASE("a map with a rotation block fails at its period") {
    ProblemDocument doc = parse_problem(R"({"kind":"abelian","matrix":[[0,-1],[1,-1]]})");
    try {
        run(doc);
        FAIL("expected InfiniteReidemeister");
    } catch (const InfiniteReidemeister& e) {
        CHECK(e.iterate() == 3);
    }
}

TEST_CASE("poles and inapplicable sections are reported, not failed") {
    ProblemDocument doc = parse_problem(R"({"kind":"abelian","matrix":[[-2]],"options":{"torsion_angles":["0","1/2"]}})");
    Report rep = run(doc);
    CHECK(rep.agreement);
    CHECK(rep.body["torsion"]["values"][0].contains("pole"));
    Report sing = run(parse_problem(R"({"kind":"abelian","matrix":[[2,4],[1,2]]})"));
    CHECK(sing.agreement);
    CHECK_FALSE(sing.body["functional_equation"]["applicable"].get<bool>());
    CHECK_FALSE(sing.body["torsion"]["applicable"].get<bool>());
}
