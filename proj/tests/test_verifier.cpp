#include <doctest.h>

#include <algorithm>
#include <set>

#include "ucyc/verifier.hpp"

using namespace ucyc;

namespace {

std::vector<int> digits(const std::string& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (char c : s) out.push_back(c - '0');
    return out;
}

// 8 blocks of 7 shifting upward by 3 mod 8; covers 56 of the 70 four-subsets
const std::string kPacking84 = "1437651" "4762184" "7215437" "2548762"
                               "5873215" "8326548" "3651873" "6184326";

// shift-chain variant with inconsistent blocks: full of duplicated windows
const std::string kCorrupt84 = "1345682" "4678135" "7812468" "2345713"
                               "5678246" "8123571" "3456824" "6781357";

} // namespace

TEST_CASE("windows: cyclic, one per position") {
    auto w = windows(digits("1234524135"), 2);
    CHECK(w.size() == 10);
    CHECK(w.front() == Tuple{1, 2});
    CHECK(w.back() == Tuple{5, 1}); // wraps

    auto w1 = windows({3}, 2);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0] == Tuple{3, 3}); // wraps onto itself; invalid as a subset

    CHECK(windows(digits(kPacking84), 4).size() == 56);
    CHECK_THROWS_AS(windows({1, 9, 2}, 2, 5), SymbolOutOfRangeError);
}

TEST_CASE("verify: the (5,2) ucycle") {
    auto rep = verify(digits("1234524135"), 5, 2);
    CHECK(rep.classification == SeqClass::Ucycle);
    CHECK(rep.distinct_covered == 10);
    CHECK(rep.total_subsets == 10);
    CHECK(rep.coverage_ratio() == doctest::Approx(1.0));
    CHECK(rep.invalid_windows.empty());
    CHECK(rep.duplicate_subsets.empty());
}

TEST_CASE("verify: 56-symbol (8,4) packing fixture") {
    auto rep = verify(digits(kPacking84), 8, 4);
    CHECK(rep.classification == SeqClass::Packing);
    CHECK(rep.distinct_covered == 56);
    CHECK(rep.total_subsets == 70);
    CHECK(rep.duplicate_subsets.empty());
    CHECK(rep.invalid_windows.empty());
}

TEST_CASE("verify flags the corrupted shift chain") {
    auto rep = verify(digits(kCorrupt84), 8, 4);
    CHECK(rep.classification == SeqClass::Invalid);
    CHECK_FALSE(rep.duplicate_subsets.empty());
    CHECK(rep.distinct_covered == 32);
}

TEST_CASE("verify: repeated symbol inside a window") {
    auto rep = verify({1, 1, 2, 3}, 5, 2);
    CHECK(rep.classification == SeqClass::Invalid);
    REQUIRE(rep.invalid_windows.size() == 1);
    CHECK(rep.invalid_windows[0] == 0);
}

TEST_CASE("verify: duplicate subset reported with positions") {
    auto rep = verify({1, 2, 3, 1, 2, 4}, 5, 2); // {1,2} at 0 and 3
    CHECK(rep.classification == SeqClass::Invalid);
    REQUIRE(rep.duplicate_subsets.size() == 1);
    CHECK(rep.duplicate_subsets[0].subset == Tuple{1, 2});
    CHECK(rep.duplicate_subsets[0].positions == std::vector<long long>{0, 3});
}

TEST_CASE("verify is rotation-independent ground truth") {
    auto base = digits(kPacking84);
    for (int r : {1, 5, 17, 38}) {
        std::vector<int> rot(base.begin() + r, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + r);
        auto rep = verify(rot, 8, 4);
        CHECK(rep.classification == SeqClass::Packing);
        CHECK(rep.distinct_covered == 56);
    }
}

TEST_CASE("verify: brute-force window oracle agrees on covered counts") {
    // independent recount using a plain set of sorted windows
    auto seq = digits(kPacking84);
    std::set<Tuple> sets;
    const int m = static_cast<int>(seq.size());
    for (int i = 0; i < m; ++i) {
        Tuple w;
        for (int j = 0; j < 4; ++j) w.push_back(seq[(i + j) % m]);
        std::sort(w.begin(), w.end());
        sets.insert(w);
    }
    CHECK(static_cast<long long>(sets.size()) == verify(seq, 8, 4).distinct_covered);
}

TEST_CASE("verify rejects out-of-range symbols") {
    CHECK_THROWS_AS(verify({1, 2, 9}, 5, 2), SymbolOutOfRangeError);
    CHECK_THROWS_AS(verify({0, 2, 3}, 5, 2), SymbolOutOfRangeError);
}

TEST_CASE("exhaustive_max_packing: pinned optima") {
    auto r42 = exhaustive_max_packing(4, 2);
    CHECK(r42.best_length == 4);
    CHECK(r42.complete);
    CHECK(verify(r42.witness, 4, 2).classification != SeqClass::Invalid);

    auto r53 = exhaustive_max_packing(5, 3);
    CHECK(r53.best_length == 5);
    CHECK(r53.complete);

    auto r52 = exhaustive_max_packing(5, 2);
    CHECK(r52.best_length == 10);
    CHECK(verify(r52.witness, 5, 2).classification == SeqClass::Ucycle);
}

TEST_CASE("exhaustive_max_packing witnesses verify at their stated length") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {6, 4}}) {
        auto r = exhaustive_max_packing(n, k);
        REQUIRE(r.complete);
        CHECK(static_cast<int>(r.witness.size()) == r.best_length);
        auto rep = verify(r.witness, n, k);
        CHECK(rep.classification != SeqClass::Invalid);
        CHECK(rep.distinct_covered == r.best_length);
    }
}

TEST_CASE("exhaustive_max_packing guard and budget") {
    CHECK_THROWS_AS(exhaustive_max_packing(9, 3), BudgetExceededError); // C(9,3)=84 > 30, no budget
    auto r = exhaustive_max_packing(5, 2, 50);
    CHECK_FALSE(r.complete);
    CHECK(r.best_length <= 10);
}
