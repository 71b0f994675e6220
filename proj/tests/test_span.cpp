#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unicell/oracles.hpp"
#include "unicell/span.hpp"

using namespace unicell;

namespace {

// Adjacent components agree on their shared legs and the recorded middles.
void check_chain_shape(const OpetopicSet& x, const SpanTuple& t) {
    const std::size_t len = t.components.size();
    REQUIRE(t.middles.size() == len - 1);
    for (std::size_t p = 0; p + 1 < len; ++p) {
        const Cell& a = x.at(t.components[p]);
        const Cell& b = x.at(t.components[p + 1]);
        CHECK(right_leg(a, p + 1) == t.middles[p]);
        CHECK(left_leg(b, p + 2) == t.middles[p]);
    }
    CHECK(left_leg(x.at(t.components.front()), 1) == t.sigma_image);
    CHECK(right_leg(x.at(t.components.back()), len) == t.tau_image);
}

}  // namespace

TEST_CASE("leg pattern") {
    CHECK(is_constrained_position(1));
    CHECK_FALSE(is_constrained_position(2));
    CHECK_FALSE(is_constrained_position(3));
    CHECK(is_constrained_position(4));
    CHECK(is_constrained_position(5));
    CHECK(is_constrained_position(8));
    auto x = fixture("nerve-poset-3chain");
    const Cell& w = x.at("[f,g12]");
    CHECK(left_leg(w, 1) == "f");
    CHECK(right_leg(w, 1) == "g02");
    CHECK(left_leg(w, 2) == "g02");
    CHECK(right_leg(w, 2) == "g12");
    CHECK(left_leg(w, 3) == "g12");
    CHECK(right_leg(w, 4) == "f");
    CHECK(left_leg(w, 5) == left_leg(w, 1));
}

TEST_CASE("level 0 on the three-element chain") {
    auto x = fixture("nerve-poset-3chain");
    auto s = build_span(x, "f", "2", 1, 0);
    CHECK(s.k == 1);
    CHECK(s.max_level() == 0);
    REQUIRE(s.levels[0].size() == 1);
    const auto& t = s.levels[0][0];
    CHECK(t.components == std::vector<CellId>{"[f,g12]"});
    CHECK(t.sigma_image == "g12");
    CHECK(t.tau_image == "g02");
    CHECK(s.rejections.empty());
}

TEST_CASE("empty hom gives an empty span") {
    auto x = fixture("nerve-poset-3chain");
    auto s = build_span(x, "f", "0", 1, 2);
    for (const auto& level : s.levels) CHECK(level.empty());
}

TEST_CASE("levels through 2 on nerves") {
    struct Case {
        const char* fixture;
        const char* f;
        const char* c;
        std::vector<std::size_t> sizes;
    };
    for (const Case& cs : {Case{"nerve-poset-3chain", "f", "2", {1, 1, 1}}, Case{"nerve-z2", "s", "*", {2, 2, 2}},
                           Case{"nerve-poset-2", "f", "1", {1, 1, 1}}}) {
        CAPTURE(cs.fixture);
        auto x = fixture(cs.fixture);
        auto s = build_span(x, cs.f, cs.c, 1, 2);
        REQUIRE(s.levels.size() == 3);
        for (int j = 0; j <= 2; ++j) {
            CHECK(s.levels[j].size() == cs.sizes[j]);
            for (const auto& t : s.levels[j]) {
                CHECK(t.level == j);
                CHECK(t.components.size() == (std::size_t{1} << j));
                CHECK(commutativity_problem(s, t).empty());
                CHECK(s.x1.contains(t.sigma_image, j));
                CHECK(s.x2.contains(t.tau_image, j));
                if (j >= 1) {
                    check_chain_shape(x, t);
                    REQUIRE(t.frame_target);
                    CHECK(s.levels[j - 1][*t.frame_target].components.front() ==
                          s1(x.at(t.components.front())));
                }
            }
        }
    }
}

TEST_CASE("level 1 by pullback matches the general chain rule") {
    for (const auto& [name, f, c] : std::vector<std::array<const char*, 3>>{
             {"nerve-poset-3chain", "f", "2"}, {"nerve-z2", "s", "*"}, {"nerve-z2", "e", "*"}, {"corrupt-span", "f", "c"}}) {
        auto x = fixture(name);
        UniversalityChecker chk(x);
        auto s = build_span(x, f, c, 1, 0, chk);
        std::vector<SpanRejection> r1, r2;
        CHECK(build_c1(s, chk, &r1) == build_cj(s, 1, chk, &r2));
        CHECK(r1.size() == r2.size());
    }
}

TEST_CASE("a bogus cell is rejected by the commutativity check") {
    auto x = fixture("corrupt-span");
    auto s = build_span(x, "f", "c", 1, 1);
    CHECK(s.levels[0].size() == 2);
    CHECK(s.levels[1].size() == 2);
    REQUIRE(s.rejections.size() == 1);
    CHECK(s.rejections[0].level == 1);
    CHECK(s.rejections[0].components.front() == "bogus");
    CHECK(s.rejections[0].reason == "t(sigma) = b1 but sigma of the frame target is b2");
}

TEST_CASE("universal 2-ary cells") {
    auto x = fixture("nerve-poset-3chain");
    UniversalityChecker chk(x);
    CHECK(universal_2ary(x, 2, 1, chk).size() == 10);
    CHECK(universal_2ary(x, 3, 1, chk).size() == two_ary_cells(x, 3).size());
    CHECK(universal_2ary(x, 1, 1, chk).empty());
}

TEST_CASE("level requests in the wrong order") {
    auto x = fixture("nerve-z2");
    UniversalityChecker chk(x);
    auto s = make_span(x, "s", "*", 1);
    CHECK_THROWS_AS(build_cj(s, 2, chk), DataError);
    CHECK_THROWS_AS(build_cj(s, 0, chk), DataError);
}

TEST_CASE("errors") {
    auto x = fixture("nerve-poset-3chain");
    CHECK_THROWS_AS(build_span(x, "0", "1", 1, 0), DataError);
    CHECK_THROWS_AS(build_span(x, "f", "g12", 1, 0), DataError);
    CHECK_THROWS_AS(build_span(x, "f", "2", 1, -1), DataError);
    CHECK_THROWS_AS(build_span(x, "[f,g12]", "g12", 1, 0), DataError);
    CHECK_THROWS_AS(build_span(x, "f", "2", 1, 9), FragmentTooShallow);
    SpanOptions tiny;
    tiny.level_cap = 1;
    CHECK_THROWS_AS(build_span(fixture("nerve-z2"), "s", "*", 1, 1, tiny), SpanCapExceeded);
}

TEST_CASE("json") {
    auto s = build_span(fixture("nerve-poset-3chain"), "f", "2", 1, 1);
    Json j = to_json(s);
    CHECK(j["levels"].size() == 2);
    CHECK(j["levels"][0][0]["sigma"] == "g12");
    CHECK(j["levels"][1][0]["frame_target"] == 0);
}
