#include <doctest.h>

#include <algorithm>
#include <set>

#include "kbox/composition.hpp"
#include "kbox/generate.hpp"
#include "kbox/path.hpp"
#include "oracles.hpp"

using namespace kbox;

namespace {

std::vector<std::string> words(Stream<PathWord> s)
{
    std::vector<std::string> out;
    for (const auto& p : s) {
        out.push_back(to_string(p));
    }
    return out;
}

// U < D < L, as the generators order their output.
bool lex_less(const std::string& a, const std::string& b)
{
    auto rank = [](char c) { return c == 'U' ? 0 : c == 'D' ? 1 : 2; };
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](char x, char y) { return rank(x) < rank(y); });
}

} // namespace

TEST_CASE("parse_path")
{
    CHECK(parse_path("UUDL").steps() == std::vector<Step>{Step::U, Step::U, Step::D, Step::L});
    CHECK(parse_path("").empty());
    try {
        parse_path("UXD");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_path("uD"), ParseError);
    CHECK(to_string(parse_path("UUUDLDUUUDLDUUDL")) == "UUUDLDUUUDLDUUDL");
}

TEST_CASE("classify")
{
    const PathClass a = classify(parse_path("UUDL"), 1);
    CHECK(a.skew_dyck);
    CHECK(a.box_size == 1);
    CHECK(a.tailed);

    const PathClass b = classify(parse_path("UUUDLDUUUDLDUUDL"), 1);
    CHECK(b.box_size == 3);
    CHECK(b.tailed);
    CHECK(!classify(parse_path("UUUUUUDLDUDLDUDL"), 1).tailed);

    const PathClass c = classify(parse_path("UL"));
    CHECK(!c.skew_dyck);
    CHECK(!c.diagnostics.empty());
    CHECK(!classify(parse_path("UUDLUD")).skew_dyck); // LU factor
    CHECK(!classify(parse_path("UDD")).skew_dyck);
    CHECK(!classify(parse_path("DU")).skew_dyck);

    // Skew Dyck but one factor short of a 1-box path of size 2.
    CHECK(!classify(parse_path("UUUDDD"), 1).is_box());
    CHECK(classify(parse_path("UUUUDDLDUUUDDL"), 2).box_size == 2);

    // k = 0: Dyck paths of semilength n - 1, always tailed.
    const PathClass z = classify(parse_path("UD"), 0);
    CHECK(z.box_size == 2);
    CHECK(z.tailed);
    CHECK(classify(parse_path(""), 0).box_size == 1);
    CHECK(!classify(parse_path("UUDL"), 0).is_box());

    CHECK(classify(parse_path("UUUUUDDLDUUUDDLD"), 3).augmented_size == 2);
}

TEST_CASE("stats")
{
    const PathStats s = stats(parse_path("UUUDLDUUUDLDUUDL"));
    CHECK(s.returns == 3);
    CHECK(s.long_ascents == 3);
    CHECK(factor_count(parse_path("UUUDLDUUUDLDUUDL"), 1) == 3);

    CHECK(stats(parse_path("UUDL")).returns == 1);
    CHECK(stats(parse_path("UUDL")).long_ascents == 1);
    CHECK(stats(parse_path("UDUD")).returns == 2);
    CHECK(stats(parse_path("UDUD")).long_ascents == 0);
    CHECK_THROWS_AS(stats(parse_path("UL")), InvalidPath);

    // k = 0 counting convention.
    const PathStats z = box_stats(parse_path("UDUUDD"), 0);
    CHECK(z.returns == 3);
    CHECK(z.long_ascents == 2);
}

TEST_CASE("compositions")
{
    CHECK(composition_of(parse_path("UUUDLDUUUDLDUUDL"), 1).parts == std::vector<long>{3, 3, 2});
    CHECK(composition_of(parse_path("UUDL"), 1).parts == std::vector<long>{2});
    CHECK(composition_of(parse_path("UUUUDDLDUUUDDL"), 2).parts == std::vector<long>{4, 3});
    // (3,4) breaks the prefix rule: the word dips below the axis after its first L.
    CHECK(!classify(parse_path("UUUDDLDUUUUDDL"), 2).is_box());
    CHECK_THROWS_AS(path_of_composition({2, {3, 4}}), CompositionError);

    CHECK(to_string(path_of_composition({1, {2}})) == "UUDL");
    CHECK(to_string(path_of_composition({1, {3, 3, 2}})) == "UUUDLDUUUDLDUUDL");

    try {
        path_of_composition({1, {1, 4}});
        FAIL("no error");
    } catch (const CompositionError& e) {
        CHECK(e.index() == 1);
        CHECK(std::string(e.what()).find("1 < 3") != std::string::npos);
    }
    try {
        path_of_composition({1, {3, 3}});
        FAIL("no error");
    } catch (const CompositionError& e) {
        CHECK(e.index() == 0);
    }
    CHECK_THROWS_AS(path_of_composition({1, {3, 0, 2}}), CompositionError);
    CHECK_THROWS_AS(composition_of(parse_path("UDUD"), 1), InvalidPath);

    CHECK(parse_int_list("3,3,2") == std::vector<long>{3, 3, 2});
    CHECK(parse_int_list("").empty());
    CHECK_THROWS(parse_int_list("3,,2"));
    CHECK(format_int_list({3, 6}) == "3,6");
}

TEST_CASE("skew Dyck generation matches the definition")
{
    CHECK(words(generate_skew_dyck(0)) == std::vector<std::string>{""});
    CHECK(words(generate_skew_dyck(2)) == std::vector<std::string>{"UUDD", "UUDL", "UDUD"});
    for (int m = 0; m <= 5; ++m) {
        std::vector<std::string> want = oracle::all_skew_dyck(m);
        std::sort(want.begin(), want.end(), lex_less);
        CHECK(words(generate_skew_dyck(static_cast<std::size_t>(m))) == want);
    }
    CHECK(generate_skew_dyck(4).count() == 36);
    for (int m = 6; m <= 8; ++m) {
        CHECK(generate_skew_dyck(static_cast<std::size_t>(m)).count() == oracle::skew_dyck_dfs(m).size());
    }
}

TEST_CASE("Dyck generation")
{
    for (int m = 0; m <= 6; ++m) {
        std::vector<std::string> want;
        for (const auto& w : oracle::skew_dyck_dfs(m)) {
            if (oracle::is_dyck(w)) {
                want.push_back(w);
            }
        }
        std::sort(want.begin(), want.end(), lex_less);
        CHECK(words(generate_dyck(static_cast<std::size_t>(m))) == want);
    }
}

TEST_CASE("k-box generation matches filtered skew Dyck paths")
{
    CHECK(words(generate_k_box(1, 1)) == std::vector<std::string>{"UUDL"});
    CHECK(generate_k_box(2, 2).count() == 3);
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; (k + 2) * n - 1 <= 10; ++n) {
            std::vector<std::string> want;
            for (const auto& w : oracle::skew_dyck_dfs((k + 2) * n - 1)) {
                if (oracle::count_factor(w, oracle::box_factor(k)) == static_cast<std::size_t>(n)) {
                    want.push_back(w);
                }
            }
            std::sort(want.begin(), want.end(), lex_less);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(words(generate_k_box(k, static_cast<std::size_t>(n))) == want);
        }
    }
    // k = 0 stands for Dyck paths of semilength n - 1.
    CHECK(words(generate_k_box(0, 3)) == words(generate_dyck(2)));
}

TEST_CASE("compositions stream in word order")
{
    for (int k = 1; k <= 2; ++k) {
        for (std::size_t n = 1; n <= 5; ++n) {
            std::vector<std::string> from_comp;
            for (const auto& c : generate_compositions(k, n)) {
                validate(c);
                from_comp.push_back(to_string(path_of_composition(c)));
            }
            CHECK(from_comp == words(generate_k_box(k, n)));
            CHECK(std::is_sorted(from_comp.begin(), from_comp.end(), lex_less));
        }
    }
}

TEST_CASE("composition round trip")
{
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (const auto& p : generate_k_box(k, n)) {
                const Composition c = composition_of(p, k);
                CHECK(c.size() == n);
                CHECK(path_of_composition(c) == p);
            }
        }
    }
}

TEST_CASE("read_paths")
{
    const auto ps = read_paths("UUDL\nUDUD\n");
    REQUIRE(ps.size() == 2);
    CHECK(to_string(ps[1]) == "UDUD");
    const auto fig = oracle::read_lines(std::string(KBOX_FIXTURES) + "/box_paths_k1_n3.txt");
    CHECK(fig.size() == 7);
}
