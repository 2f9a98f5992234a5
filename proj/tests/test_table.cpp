#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "vilenkin/table.hpp"

using namespace vilenkin;

TEST_CASE("csv output is deterministic and formatted") {
    ResultTable t({"n", "L", "note"});
    t.set_meta("kernels", "scalar");
    t.set_meta("wall_ms", "123");  // must be excluded from CSV
    t.add_row({std::int64_t{3}, 1.5, std::string{"ok"}});
    t.add_row({std::int64_t{4}, 0.123456789012345, std::string{""}});

    std::ostringstream a, b;
    t.write_csv(a);
    t.write_csv(b);
    CHECK(a.str() == b.str());
    CHECK(a.str() ==
          "# kernels=scalar\n"
          "n,L,note\n"
          "3,1.5,ok\n"
          "4,0.123456789012,\n");
}

TEST_CASE("json output round-trips structure") {
    ResultTable t({"x", "y"});
    t.set_meta("version", "1.0.0");
    t.add_row({std::int64_t{1}, 2.0});
    std::ostringstream out;
    t.write_json(out);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["meta"]["version"] == "1.0.0");
    CHECK(j["columns"] == nlohmann::json({"x", "y"}));
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0][0] == 1);
    CHECK(j["rows"][0][1] == 2.0);
}

TEST_CASE("row width and column validation") {
    CHECK_THROWS_AS(ResultTable({}), std::invalid_argument);
    ResultTable t({"a", "b"});
    CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::invalid_argument);
    CHECK_NOTHROW(t.add_row({std::int64_t{1}, std::int64_t{2}}));
}

TEST_CASE("format_cell") {
    CHECK(ResultTable::format_cell(std::int64_t{-7}) == "-7");
    CHECK(ResultTable::format_cell(2.0) == "2");
    CHECK(ResultTable::format_cell(std::string{"s"}) == "s");
}
