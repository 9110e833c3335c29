#include "rat4/report.hpp"

#include <doctest.h>

using namespace rat4;

TEST_SUITE("report") {
    TEST_CASE("checks record failures") {
        Report r;
        r.target = "x";
        CHECK(r.check(true, "fine"));
        CHECK(r.pass);
        CHECK(!r.check(false, "broken"));
        CHECK(!r.pass);
        CHECK(r.failures == std::vector<std::string>{"broken"});
        CHECK(r.text().rfind("x: FAIL", 0) == 0);
        CHECK(r.to_json()["failures"].size() == 1);
    }

    TEST_CASE("fast verifiers pass") {
        for (const char* t : {"thm-1.4-n7", "thm-1.4-n8", "thm-1.4-n9", "lemma-3.5", "lemma-4.2", "identities-2.10"}) {
            auto r = run_verifier(t);
            INFO(r.text());
            CHECK(r.pass);
        }
        CHECK_THROWS_AS(run_verifier("lemma-9.9"), std::invalid_argument);
        CHECK(verify_targets().size() == 10);
    }

    TEST_CASE("classification verifier") {
        auto r = run_verifier("lemma-5.1");
        INFO(r.text());
        CHECK(r.pass);
        CHECK(r.data["families"].size() == 3);
    }
}
