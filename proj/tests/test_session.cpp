#include "toruslift/session.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>
#include <string>

using namespace toruslift;

namespace {

std::string run_text(const std::string& text, RunOptions opt = {}, int* code = nullptr) {
    Session s = parse_session(text);
    std::ostringstream out;
    int rc = run(s, out, opt);
    if (code) *code = rc;
    return out.str();
}

std::map<std::string, std::string> parse_record(const std::string& line) {
    std::map<std::string, std::string> out;
    std::istringstream in(line);
    std::string field;
    while (in >> field) {
        auto eq = field.find('=');
        REQUIRE(eq != std::string::npos);
        out[field.substr(0, eq)] = field.substr(eq + 1);
    }
    return out;
}

const std::string kHeader =
    "torus g=1 J=[[0,-1],[1,0]]\n"
    "bundle O E=[[0,0],[0,0]] chi=[0,0]\n"
    "bundle L E=[[0,2],[-2,0]] chi=[0,0]\n";

} // namespace

TEST_CASE("session parsing") {
    Session s = parse_session(
        "torus g=1 J=[[0,-1],[1,0]]\nbundle L E=[[0,2],[-2,0]] chi=[0,0]\ncohomology L\n");
    REQUIRE(s.torus.has_value());
    CHECK(s.torus->g == 1);
    CHECK(s.bundles.count("L") == 1);
    CHECK(s.commands.size() == 1);
}

TEST_CASE("session diagnostics") {
    SECTION("missing torus") {
        try {
            parse_session("bundle L E=[[0,2],[-2,0]] chi=[0,0]\n");
            FAIL("expected an error");
        } catch (const SessionError& e) {
            CHECK(std::string(e.what()).find("no torus declared") != std::string::npos);
            CHECK(e.line == 1);
        }
    }
    SECTION("non-alternating form") {
        try {
            parse_session("torus g=1 J=[[0,-1],[1,0]]\nbundle L E=[[0,1],[1,0]] chi=[0,0]\n");
            FAIL("expected an error");
        } catch (const SessionError& e) {
            CHECK(std::string(e.what()).find("E not alternating") != std::string::npos);
            CHECK(e.line == 2);
        }
    }
    SECTION("unknown name") {
        CHECK_THROWS_AS(parse_session(kHeader + "cohomology X\n"), SessionError);
    }
    SECTION("unknown statement") {
        CHECK_THROWS_AS(parse_session("frobnicate\n"), SessionError);
    }
    SECTION("bad rational") {
        CHECK_THROWS_AS(parse_session("torus g=1 J=[[0,-1],[1,zebra]]\n"), SessionError);
    }
    SECTION("duplicate bundle name") {
        CHECK_THROWS_AS(parse_session(kHeader + "bundle O E=[[0,0],[0,0]] chi=[0,0]\n"),
                        SessionError);
    }
}

TEST_CASE("session command output") {
    CHECK(run_text(kHeader + "cohomology L\n") == "cohomology L: h = [2, 0]\n");
    CHECK(run_text(kHeader + "hom O L\n") == "hom O L: h = [2, 0]\n");
    CHECK(run_text(kHeader + "lift L\n") == "lift L: A = [[0,2],[-2,0]] b = [0, 0]\n");
    CHECK(run_text(kHeader + "intersect O L\n") ==
          "intersect: free rank = 0 factors = [2, 2] order = 4 point = [0, 0]\n");
    CHECK(run_text(kHeader +
                   "bundle M E=[[0,2],[-2,0]] chi=[1/3,0]\n"
                   "intersect L M\n") == "intersect: empty\n");
    CHECK(run_text(kHeader + "gcs-check\n") ==
          "gcs-check: complex ok, symplectic ok, metric ok, kahler ok\n");
    CHECK(run_text(kHeader + "tduality n=1 w=0 R=2 a=1\n") ==
          "tduality: M2 = 1/4 dual (n, w, R) = (0, 1, 1/2) invariant yes\n");
    CHECK(run_text("tfold nilfold m=1 polarization=T\n") ==
          "polarization T: not globally defined\n");
    CHECK(run_text("tfold nilfold m=1 polarization=H\n") ==
          "polarization H: globally defined\n");
}

TEST_CASE("assert mode exit codes") {
    int code = -1;
    run_text("tfold nilfold m=1 polarization=T\n", {}, &code);
    CHECK(code == 0); // report only
    RunOptions opt;
    opt.assert_mode = true;
    run_text("tfold nilfold m=1 polarization=T\n", opt, &code);
    CHECK(code == 1);
    run_text("tfold nilfold m=1 polarization=G\n", opt, &code);
    CHECK(code == 0);
}

TEST_CASE("records mode round-trips") {
    RunOptions opt;
    opt.records = true;
    std::string out = run_text(
        kHeader + "cohomology L\nintersect O L\nlift L\next-check O L\n", opt);
    std::istringstream lines(out);
    std::string line;

    REQUIRE(std::getline(lines, line));
    auto rec = parse_record(line);
    CHECK(rec.at("cmd") == "cohomology");
    CHECK(rec.at("name") == "L");
    CHECK(session_detail::parse_vector(rec.at("h"), 0) == std::vector<Rat>{2, 0});

    REQUIRE(std::getline(lines, line));
    rec = parse_record(line);
    CHECK(rec.at("cmd") == "intersect");
    CHECK(rec.at("empty") == "no");
    CHECK(rec.at("order") == "4");
    CHECK(session_detail::parse_vector(rec.at("factors"), 0) == std::vector<Rat>{2, 2});
    CHECK(session_detail::parse_vector(rec.at("point"), 0) == std::vector<Rat>{0, 0});

    REQUIRE(std::getline(lines, line));
    rec = parse_record(line);
    CHECK(rec.at("cmd") == "lift");
    CHECK(session_detail::parse_int_matrix(rec.at("A"), 0) == IntMat{{0, 2}, {-2, 0}});
    CHECK(session_detail::parse_vector(rec.at("b"), 0) == std::vector<Rat>{0, 0});

    REQUIRE(std::getline(lines, line));
    rec = parse_record(line);
    CHECK(rec.at("cmd") == "ext-check");
    CHECK(rec.at("total") == "2");
    CHECK(rec.at("intersection") == "4");
    CHECK(rec.at("squared") == "yes");
}

TEST_CASE("output is deterministic") {
    std::string text = kHeader +
                       "cohomology L\nhom O L\nlift L\nintersect O L\next-check O L\n"
                       "gcs-check\ntduality n=3 w=-2 R=5/7 a=2\n"
                       "tfold nilfold m=2 polarization=G\n"
                       "tfold decompose [[1+x^2,0,0,x],[0,1+x^2,-x,0],[0,-x,1,0],[x,0,0,1]]\n";
    for (bool records : {false, true}) {
        RunOptions opt;
        opt.records = records;
        CHECK(run_text(text, opt) == run_text(text, opt));
    }
}

TEST_CASE("polynomial session input") {
    CHECK(run_text("tfold decompose [[1,0],[0,1]]\n") == "decompose: g = [[1]] B = [[0]]\n");

    // the swapped-coordinate nilfold metric with m = 1
    std::string swapped =
        "tfold decompose [[1+x^2,0,0,x],[0,1+x^2,-x,0],[0,-x,1,0],[x,0,0,1]]\n";
    CHECK(run_text(swapped) ==
          "decompose: g = [[1,0],[0,1]] B = [[0,x],[-x,0]]\n");

    // bad bracket nesting is diagnosed when the command parses its argument
    Session s = parse_session("tfold decompose [[x,0],[0,1]\n");
    std::ostringstream sink;
    CHECK_THROWS_AS(run(s, sink), SessionError);
}

TEST_CASE("polynomial expression parsing") {
    using session_detail::PolyParser;
    Poly x = Poly::x();
    CHECK(PolyParser("1+x^2", 1).parse() == Poly(1) + x * x);
    CHECK(PolyParser("-3/2*x", 1).parse() == Poly(Rat(-3, 2)) * x);
    CHECK(PolyParser("2*x^3-x+5", 1).parse() == Poly(2) * x * x * x - x + Poly(5));
    CHECK(PolyParser("0", 1).parse() == Poly(0));
    CHECK_THROWS_AS(PolyParser("x^", 1).parse(), SessionError);
    CHECK_THROWS_AS(PolyParser("1++2", 1).parse(), SessionError);
}
