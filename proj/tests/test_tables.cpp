#include <doctest.h>

#include "stickel/arith.hpp"
#include "stickel/tables.hpp"

using namespace stickel;

TEST_CASE("shipped tables parse with fixed row counts") {
    const std::string dir = data_dir();
    CHECK(load_irregular_pairs(dir + "/irregular_pairs.csv").size() == 7);
    CHECK(load_quad_class(dir + "/quad_class.csv").size() == 49);
    const auto ann = load_annihilator_examples(dir + "/annihilator_examples.csv");
    REQUIRE(ann.size() == 11);
    CHECK(ann[0].h == 3);
    CHECK_FALSE(ann[0].nu.has_value());
    CHECK(ann.back().h == mpz_class("5123189985484229035947419"));
    CHECK_FALSE(ann.back().beta.has_value());
}

TEST_CASE("every table row is reproduced") {
    for (const auto& r : verify_tables(data_dir())) {
        CAPTURE(r.to_json().dump());
        CHECK(r.status == Status::pass);
    }
}

TEST_CASE("malformed tables are usage errors") {
    CHECK_THROWS_AS(read_csv(data_dir() + "/quad_class.csv", "p,k"), UsageError);
    CHECK_THROWS_AS(read_csv(data_dir() + "/missing.csv", "p,k"), UsageError);
}
