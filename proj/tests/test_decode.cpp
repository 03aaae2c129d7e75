#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>

#include "oscemu/decode.hpp"

using namespace oscemu;
using nlohmann::json;

namespace {

json load_expected() {
    static json data = [] {
        std::ifstream in(std::string(OSCEMU_TEST_DATA_DIR) + "/synthesis_expected.json");
        REQUIRE(in.good());
        json j;
        in >> j;
        return j;
    }();
    return data;
}

}  // namespace

TEST_CASE("cancel adjacent pairs") {
    using V = std::vector<Op>;
    CHECK(cancel_adjacent(V{Op::X, Op::X}) == V{Op::Empty, Op::Empty});
    CHECK(cancel_adjacent(V{Op::X, Op::Y, Op::Y, Op::X, Op::Z}) ==
          V{Op::Z, Op::Empty, Op::Empty, Op::Empty, Op::Empty});
    CHECK(cancel_adjacent(V{Op::X, Op::Y, Op::X}) == V{Op::X, Op::Y, Op::X});

    SUBCASE("no adjacent duplicates remain and parity is preserved") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            int len = 2 + int(rng() % 4);
            V word;
            for (int i = 0; i < len; ++i) word.push_back(Op(rng() % 5));
            V out = cancel_adjacent(word);
            for (std::size_t i = 0; i + 1 < out.size(); ++i)
                if (out[i] != Op::Empty) CHECK(out[i] != out[i + 1]);
            for (int op = 0; op < 5; ++op) {
                int before = int(std::count(word.begin(), word.end(), Op(op)));
                int after = int(std::count(out.begin(), out.end(), Op(op)));
                CHECK((before - after) % 2 == 0);
                CHECK(after <= before);
            }
        }
    }
}

TEST_CASE("perm mask bits") {
    CHECK(perm_mask({Op::X, Op::Y}) == std::vector<int>{0, 6});
    CHECK(perm_mask({Op::Z}) == std::vector<int>{10});
    CHECK(perm_mask({Op::H, Op::M}) == std::vector<int>{20, 19});
    CHECK(perm_mask({Op::X, Op::Y, Op::Z}).size() == 3);
    CHECK_THROWS_WITH_AS(perm_mask({Op::X, Op::X}), "perm_mask: module reuse",
                         std::runtime_error);
}

TEST_CASE("perm sop generation and minimization") {
    json expected = load_expected();
    SopTables raw = generate_perm_sop();

    std::int64_t total_raw = 0;
    for (int p = 0; p < 25; ++p) {
        CHECK(int(raw.expressions[p].size()) == expected["perm_raw_counts"][p].get<int>());
        total_raw += std::int64_t(raw.expressions[p].size());
    }
    CHECK(total_raw == 1300);

    MinimizeResult min = minimize(raw);
    CHECK(min.removed == expected["perm_removed"].get<std::int64_t>());
    CHECK(min.removed == 1044);
    REQUIRE(min.pass_removals.size() == expected["perm_passes"].size());
    for (std::size_t i = 0; i < min.pass_removals.size(); ++i)
        CHECK(min.pass_removals[i] == expected["perm_passes"][i].get<std::int64_t>());

    for (int p = 0; p < 25; ++p) {
        auto exp_terms = expected["perm_final"][p].get<std::vector<std::string>>();
        CHECK(min.tables.expressions[p] == exp_terms);
    }

    // the first switch bit reduces to exactly two products
    CHECK(min.tables.expressions[0] ==
          std::vector<std::string>{" W_{3} \\cdot W_{6}", " W_{3} \\cdot W_{5}"});

    SUBCASE("minimization preserves the function on all generated inputs") {
        for (int p = 0; p < 25; ++p)
            for (const std::string& input : raw.minterms[p]) {
                CHECK(evaluate_sop(raw.minterms[p], input));
                CHECK(evaluate_sop(min.tables.minterms[p], input));
            }
    }

    SUBCASE("minimize is idempotent") {
        MinimizeResult again = minimize(min.tables);
        CHECK(again.removed == 0);
        for (int p = 0; p < 25; ++p)
            CHECK(again.tables.expressions[p] == min.tables.expressions[p]);
    }
}

TEST_CASE("cancel sop generation and minimization") {
    json expected = load_expected();
    SopTables raw = generate_cancel_sop();

    std::int64_t total_raw = 0;
    for (int c = 0; c < 25; ++c) {
        CHECK(int(raw.expressions[c].size()) == expected["comb_raw_counts"][c].get<int>());
        total_raw += std::int64_t(raw.expressions[c].size());
    }
    CHECK(total_raw == 18326);

    MinimizeResult min = minimize(raw);
    CHECK(min.removed == expected["comb_removed"].get<std::int64_t>());
    REQUIRE(min.pass_removals.size() == expected["comb_passes"].size());
    for (std::size_t i = 0; i < min.pass_removals.size(); ++i)
        CHECK(min.pass_removals[i] == expected["comb_passes"][i].get<std::int64_t>());

    std::vector<int> nonzero;
    for (int c = 0; c < 25; ++c) {
        auto exp_terms = expected["comb_final"][c].get<std::vector<std::string>>();
        CHECK(min.tables.expressions[c] == exp_terms);
        if (!min.tables.expressions[c].empty()) nonzero.push_back(c);
    }
    CHECK(nonzero == std::vector<int>{1, 2, 3, 6, 7, 8, 11, 12, 13, 16, 17, 18, 21, 22, 23});
    CHECK(min.tables.expressions[1][0] == " W_{1} \\cdot W_{7}");
}

TEST_CASE("grouping by qubit") {
    std::vector<OpSlot> stream;
    for (int i = 0; i < 7; ++i) stream.push_back({Op::X, 3});
    auto groups = group_by_qubit(stream);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].size() == 5);
    CHECK(groups[1].size() == 2);

    std::vector<OpSlot> alternating = {{Op::X, 0}, {Op::Y, 1}, {Op::Z, 0}};
    CHECK(group_by_qubit(alternating).size() == 3);

    CHECK(group_by_qubit({}).empty());
}

TEST_CASE("instruction word round trip") {
    InstructionWord empty = build_word({});
    CHECK(word_to_hex(empty) == std::string(225, '0'));
    CHECK(parse_word(empty).empty());

    std::vector<OpGroup> one = {{OpSlot{Op::X, 0}}};
    InstructionWord w = build_word(one);
    CHECK(parse_word(w) == one);
    CHECK(word_from_hex(word_to_hex(w)) == w);

    SUBCASE("randomized groups") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<OpGroup> groups;
            int ngroups = int(rng() % 20);
            for (int gi = 0; gi < ngroups; ++gi) {
                OpGroup g;
                int len = 1 + int(rng() % 5);
                int target = int(rng() % 32);
                for (int si = 0; si < len; ++si) g.push_back({Op(rng() % 5), target});
                groups.push_back(g);
            }
            InstructionWord word = build_word(groups);
            CHECK(parse_word(word) == groups);
            std::string hex = word_to_hex(word);
            CHECK(hex.size() == 225);
            CHECK(word_from_hex(hex) == word);
        }
    }
}
