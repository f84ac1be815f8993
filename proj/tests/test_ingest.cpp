#include "oracles.hpp"

#include "schemekit/error.hpp"
#include "schemekit/ingest.hpp"
#include "schemekit/report.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace schemekit;

namespace {

ParseError parse_error_of(std::string_view text)
{
    try {
        parse_relation_matrix(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError for: " << text);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("relation matrix text")
{
    CHECK(parse_relation_matrix("1\n0\n") == RelationMatrix(1, {0}));

    const auto pentagon = parse_relation_matrix("5\n01221\n10122\n21012\n22101\n12210\n");
    CHECK(pentagon.n() == 5);
    CHECK(pentagon.d() == 2);
    for (std::size_t x = 0; x < 5; ++x) {
        for (std::size_t y = 0; y < 5; ++y) {
            const auto diff = (x + 5 - y) % 5;
            const std::uint32_t expected = diff == 0 ? 0 : (diff == 1 || diff == 4) ? 1 : 2;
            CHECK(pentagon(x, y) == expected);
        }
    }

    SUBCASE("spaced rows, comments, blank lines and CRLF")
    {
        const auto spaced = parse_relation_matrix("# pentagon\r\n5\r\n\r\n0 1 2 2 1\r\n1\t0 1 2 2\r\n2 1 0 1 2\r\n"
                                                  "# mid\r\n2 2 1 0 1\r\n1 2 2 1 0\r\n");
        CHECK(spaced == pentagon);
    }
    SUBCASE("multi-digit indices need spaces")
    {
        const auto m = parse_relation_matrix(
            "11\n"
            "0 1 2 3 4 5 6 7 8 9 10\n1 0 1 2 3 4 5 6 7 8 9\n2 1 0 1 2 3 4 5 6 7 8\n3 2 1 0 1 2 3 4 5 6 7\n"
            "4 3 2 1 0 1 2 3 4 5 6\n5 4 3 2 1 0 1 2 3 4 5\n6 5 4 3 2 1 0 1 2 3 4\n7 6 5 4 3 2 1 0 1 2 3\n"
            "8 7 6 5 4 3 2 1 0 1 2\n9 8 7 6 5 4 3 2 1 0 1\n10 9 8 7 6 5 4 3 2 1 0\n");
        CHECK(m.d() == 10);
        CHECK(m(0, 10) == 10);
    }
}

TEST_CASE("relation matrix parse errors")
{
    SUBCASE("row too short")
    {
        const auto e = parse_error_of("3\n0 1\n");
        CHECK(e.line() == 2);
    }
    SUBCASE("missing rows")
    {
        const auto e = parse_error_of("3\n0 1 1\n1 0 1\n");
        CHECK(e.line() == 4);
    }
    SUBCASE("mixed row styles")
    {
        const auto e = parse_error_of("3\n011\n1 0 1\n110\n");
        CHECK(e.line() == 3);
    }
    SUBCASE("junk token")
    {
        const auto e = parse_error_of("2\n0 x\n1 0\n");
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    SUBCASE("trailing content")
    {
        CHECK(parse_error_of("1\n0\n0\n").line() == 3);
    }
    SUBCASE("empty and bad headers")
    {
        parse_error_of("");
        parse_error_of("# nothing\n");
        parse_error_of("0\n");
        parse_error_of("-2\n");
        parse_error_of("2 2\n");
    }
    SUBCASE("values that overflow")
    {
        parse_error_of("2\n0 99999999999\n1 0\n");
    }
    SUBCASE("well-formed text, malformed matrix")
    {
        CHECK_THROWS_AS(parse_relation_matrix("2\n10\n01\n"), MalformedMatrix);
    }
}

TEST_CASE("catalogs")
{
    CHECK(parse_catalog("").empty());
    CHECK(parse_catalog("## just a comment\n\n").empty());

    const auto one = parse_catalog("# order01-no01\n1\n0\n");
    REQUIRE(one.size() == 1);
    CHECK(one[0].id == "order01-no01");
    CHECK(one[0].matrix == RelationMatrix(1, {0}));

    CHECK_THROWS_AS(parse_catalog("# a\n1\n0\n# a\n1\n0\n"), DuplicateId);
    CHECK_THROWS_AS(parse_catalog("1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("#   \n1\n0\n"), ParseError);

    SUBCASE("errors inside a block report file line numbers")
    {
        try {
            parse_catalog("# a\n1\n0\n# b\n## note\n3\n0 1\n");
            FAIL("accepted a short row");
        } catch (const ParseError& e) {
            CHECK(e.line() == 7);
        }
    }

    SUBCASE("bundled catalogs keep file order")
    {
        const auto entries = parse_catalog(read_file(oracle::fixture_dir() / "catalog.cat"));
        const auto ids = oracle::fixture_ids();
        REQUIRE(entries.size() == ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            CHECK(entries[i].id == ids[i]);
            CHECK(entries[i].matrix == oracle::fixture_matrix(ids[i]));
        }
        const auto reference = parse_catalog(read_file(oracle::fixture_dir() / "reference.cat"));
        REQUIRE(reference.size() == oracle::reference_ids().size());
        for (std::size_t i = 0; i < reference.size(); ++i) CHECK(reference[i].id == oracle::reference_ids()[i]);
    }
}

TEST_CASE("tensor documents")
{
    const auto trivial = parse_tensor(R"({"d":0,"order":1,"p":[[[1]]]})");
    CHECK(trivial.d() == 0);
    CHECK(trivial.order() == 1);
    CHECK(trivial(0, 0, 0) == 1);

    const auto pentagon = parse_tensor(read_file(oracle::fixture_dir() / "pentagon.tensor.json"));
    CHECK(pentagon(1, 1, 2) == 1);
    CHECK(pentagon == *oracle::count_tensor(oracle::fixture_matrix("order05-no02")));

    CHECK_THROWS_AS(parse_tensor(R"({"d":1,"order":2,"p":[[[1,0],[0,1]],[[0,1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"d":1,"order":2,"p":[[[1,0],[0,1]],[[0,1],[1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"d":0,"order":1,"p":[[[-1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"d":0,"order":1,"p":[[[1.5]]]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"d":0,"order":0,"p":[[[1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"d":0,"p":[[[1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"({"d":0,"order":1,"p":[[[1]]],"extra":1})"), ParseError);
    CHECK_THROWS_AS(parse_tensor(R"([1,2])"), ParseError);

    try {
        parse_tensor("{\"d\":0,\n\"order\":1,\n\"p\": [[[1]]}");
        FAIL("accepted broken JSON");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("tensor round trip on every fixture")
{
    for (const auto& id : oracle::fixture_ids()) {
        CAPTURE(id);
        const auto t = tensor_from_relation_matrix(oracle::fixture_matrix(id));
        const auto text = emit_tensor(t);
        CHECK(text.back() == '\n');
        CHECK(parse_tensor(text) == t);
        CHECK(emit_tensor(parse_tensor(text)) == text);
    }
}

TEST_CASE("load_scheme picks the format")
{
    const auto from_rm = load_scheme(read_file(oracle::fixture_dir() / "schemes" / "order05-no02.rm"));
    const auto from_json = load_scheme(read_file(oracle::fixture_dir() / "pentagon.tensor.json"));
    CHECK(from_rm.tensor() == from_json.tensor());
    CHECK_THROWS_AS(load_scheme("1\n0\n", InputFormat::tensor), ParseError);
    CHECK_THROWS_AS(read_file(oracle::fixture_dir() / "no-such-file.rm"), IoError);
}

TEST_CASE("structured reports")
{
    CHECK(emit_report({}, ReportFormat::structured) == "[]\n");

    const std::vector<Prime> two{Prime(2)};
    std::vector<AnalysisReport> reports;
    reports.push_back(analyze("order05-no02", oracle::fixture("order05-no02"), two));
    reports.push_back(analyze("order06-no02", oracle::fixture("order06-no02"), two));
    reports.push_back(failed_entry("broken", EntryError::parse, "line 3: short row"));

    const auto doc = nlohmann::json::parse(emit_report(reports, ReportFormat::structured));
    REQUIRE(doc.size() == 3);

    const auto& pentagon = doc[0];
    CHECK(pentagon["id"] == "order05-no02");
    CHECK(pentagon["prime"] == 2);
    CHECK(pentagon["fixed_space_dim"] == 1);
    CHECK(pentagon["transitive_oracle"] == true);
    CHECK(pentagon["valencies"] == nlohmann::json::array({1, 2, 2}));
    CHECK(pentagon["thin_radical"] == nlohmann::json::array({0}));
    CHECK(pentagon["thin_residue"] == nlohmann::json::array({0, 1, 2}));
    CHECK(pentagon["methods_agree"] == true);

    const auto& no2 = doc[1];
    CHECK(no2["transitive_oracle"] == false);
    CHECK(no2["transitive_structural"] == "not-applicable");
    CHECK(no2["methods_agree"] == "not-run");

    CHECK(doc[2]["id"] == "broken");
    CHECK(doc[2]["error"] == "parse");

    const auto ordered = nlohmann::ordered_json::parse(emit_report(reports, ReportFormat::structured));
    std::vector<std::string> keys;
    for (const auto& [key, value] : ordered[0].items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"id", "order", "d", "valencies", "prime", "is_quasi_thin",
                                           "has_thin_thin_residue", "is_p_prime_valenced", "thin_radical",
                                           "thin_residue", "min_singular", "s_p_prime_closure", "fixed_space_dim",
                                           "transitive_oracle", "transitive_structural", "methods_agree"});
}

TEST_CASE("text reports")
{
    const std::vector<Prime> primes{Prime(2), Prime(3)};
    std::vector<AnalysisReport> reports{analyze("order06-no06", oracle::fixture("order06-no06"), primes),
                                        failed_entry("bad", EntryError::validation, "not a scheme")};
    const auto text = emit_report(reports, ReportFormat::text);
    CHECK(text.find("order06-no06") != std::string::npos);
    CHECK(text.find("not-transitive (theorem-a)") != std::string::npos);
    CHECK(text.find("bad: validation error: not a scheme") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}
