#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "dlinv/verify.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = dlinv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("registry") {
    const auto& reg = dlinv::check_registry();
    CHECK(reg.size() == dlinv::kRegisteredCheckCount);
    for (std::size_t i = 1; i < reg.size(); ++i) {
        CHECK(reg[i - 1].name < reg[i].name);
    }
    CHECK(dlinv::find_check("thmA") != nullptr);
    CHECK(dlinv::find_check("nothing-registered") == nullptr);
}

TEST_CASE("every registered check passes at small sizes") {
    dlinv::VerifyOptions opts;
    opts.order = 5;
    opts.numeric_order = 8;
    opts.samples = 3;
    opts.hankel_count = 3;
    opts.group_order = 3;
    opts.weight = 4;
    for (const auto& check : dlinv::check_registry()) {
        INFO(check.name);
        CHECK(check.run(opts).ok);
    }
}

TEST_CASE("pq") {
    const auto r = run({"pq", "--symbolic", "--order", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "P_2 = 1 + 2*s1*x + s1^2*x^2 + s2*x^2"));

    const auto ones = run({"pq", "--series", "1", "--order", "3"});
    CHECK(ones.code == 0);
    CHECK(contains(ones.out, "P_3 = 1"));

    const auto table = run({"pq", "--series", "1,1,1", "--order", "3", "--format", "json"});
    REQUIRE(table.code == 0);
    const auto j = nlohmann::json::parse(table.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 4);

    CHECK(run({"pq", "--series", "1,x", "--order", "2"}).code == 2);
}

TEST_CASE("invert") {
    const auto r = run({"invert", "--seq", "1,1,1,1", "--power", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1,0,0,0"));
    CHECK(contains(run({"invert", "--seq", "1,1,1,1", "--power", "0"}).out, "1,1,1,1"));
    const auto x = run({"invert", "--symbolic", "--power", "x", "--order", "2"});
    CHECK(x.code == 0);
    CHECK(contains(x.out, "a0"));
    CHECK(contains(x.out, "a1 - a0^2*x"));
    CHECK(contains(x.out, "a2 - 2*a0*a1*x + a0^3*x^2"));
    CHECK(run({"invert", "--seq", "1,2", "--power", "y"}).code == 2);
}

TEST_CASE("hankel and compose") {
    CHECK(contains(run({"hankel", "--seq", "1,1,2,5,14", "--count", "3"}).out, "1,1,1"));
    const auto one = run({"hankel", "--seq", "1", "--count", "1"});
    CHECK(one.code == 0);
    CHECK(contains(one.out, "1"));
    CHECK(run({"hankel", "--seq", "1,1", "--count", "2"}).code == 2);

    const auto c = run({"compose", "--coeffs", "a", "--order", "4", "--power", "x"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "C_2 = a2*x"));
    CHECK(contains(run({"compose", "--coeffs", "1", "--order", "4", "--power", "2"}).out,
                   "t + 2*t^2 + 2*t^3 + t^4 + O(t^5)"));
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--only", "thmA", "--order", "8"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "PASS"));
    CHECK(run({"verify", "--only", "r-identity", "--weight", "6"}).code == 0);
    const auto bad = run({"verify", "--only", "nothing-registered"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());

    const auto js = run({"verify", "--only", "layman", "--format", "json"});
    CHECK(js.code == 0);
    CHECK_FALSE(nlohmann::json::parse(js.out).is_discarded());
}

TEST_CASE("conjecture") {
    const auto i = run({"conjecture", "--which", "i", "--kmax", "2", "--nmax", "3"});
    CHECK(i.code == 0);
    CHECK(contains(i.out, "ok"));
    CHECK_FALSE(contains(i.out, "exceeds"));
    CHECK(contains(run({"conjecture", "--which", "ii", "--nmax", "2"}).out, "n=2: s1-free (det = s2)"));
    CHECK(contains(run({"conjecture", "--which", "ii", "--nmax", "1"}).out, "n=1: s1-free (det = 1)"));
    const auto big = run({"conjecture", "--which", "ii", "--nmax", "9"});
    CHECK(big.code == 3);
    CHECK(contains(big.err, "nmax"));
}

TEST_CASE("usage errors and deterministic output") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pq", "--order", "-1"}).code == 2);
    const std::vector<std::string> args{"invert", "--symbolic", "--power", "x", "--order", "4", "--format", "json"};
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.out == second.out);
    CHECK_FALSE(nlohmann::json::parse(first.out).is_discarded());
}
