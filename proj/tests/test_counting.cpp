#include <doctest.h>

#include <cmath>
#include <map>

#include "ucyc/counting.hpp"
#include "ucyc/forms.hpp"

using namespace ucyc;

TEST_CASE("binomial") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(80, 4) == 1581580);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 6) == 0);
    CHECK_THROWS_AS(binomial(500, 250), OverflowError);
}

TEST_CASE("psi_exact: closed instances") {
    for (int n : {5, 17, 100}) CHECK(psi_exact(Pattern({1, 1}), n) == n + 1);
    CHECK(psi_exact(Pattern({2, 1, 1}), 400) == 40401);
    CHECK(psi_exact(Pattern({3}), 9) == 1);
    CHECK(psi_exact(Pattern({3}), 10) == 0);
}

TEST_CASE("psi_exact matches direct enumeration") {
    for (int n : {12, 30}) {
        for (const Pattern& p : partitions_of(4)) {
            long long direct = 0;
            const int t = p.t();
            auto rec = [&](auto&& self, int slot, int rem) -> void {
                if (slot == t) {
                    if (rem == 0) ++direct;
                    return;
                }
                for (int v = 0; v * p.parts[slot] <= rem; ++v) self(self, slot + 1, rem - v * p.parts[slot]);
            };
            rec(rec, 0, n);
            CHECK(psi_exact(p, n) == direct);
        }
    }
}

TEST_CASE("psi_prime_exact: frozen instances") {
    CHECK(psi_prime_exact(Pattern({1, 1}), 5) == 4);
    CHECK(psi_prime_exact(Pattern({3}), 9) == 1);
    CHECK(psi_prime_exact(Pattern({1, 1}), 400) == 398);
    CHECK(psi_prime_exact(Pattern({3, 1}), 400) == 132);
    CHECK(psi_prime_exact(Pattern({2, 1, 1}), 400) == 39138);
}

TEST_CASE("psi_prime_exact budget guard") {
    CHECK_THROWS_AS(psi_prime_exact(Pattern({2, 1, 1}), 400, 100), BudgetExceededError);
}

TEST_CASE("psi asymptotics: closed values") {
    CHECK(psi_asym(Pattern({1, 1}), 100) == doctest::Approx(100.0));
    CHECK(psi_prime_asym(Pattern({1, 1}), 100) == doctest::Approx(97.5));
    for (int n : {50, 200}) CHECK(psi_asym(Pattern({2, 1, 1}), n) == doctest::Approx(n * n / 4.0));
    CHECK(psi_prime_asym(Pattern({3}), 9) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("exact/asymptotic agreement at n=400") {
    CHECK(psi_exact(Pattern({2, 1, 1}), 400) / psi_asym(Pattern({2, 1, 1}), 400) == doctest::Approx(1.0).epsilon(0.15));
    for (const Tuple& parts : {Tuple{2, 1, 1}, Tuple{3, 1}, Tuple{1, 1}}) {
        const Pattern p(parts);
        const double ratio = static_cast<double>(psi_prime_exact(p, 400)) / psi_prime_asym(p, 400);
        CHECK(ratio == doctest::Approx(1.0).epsilon(0.20));
    }
}

TEST_CASE("census: pinned totals") {
    auto c84 = census(8, 4);
    CHECK(c84.total_sets == 70);
    CHECK(c84.bad_sets == 14);
    CHECK(c84.good_sets == 56);
    CHECK(c84.awesome_sets == 56);

    auto c93 = census(9, 3);
    CHECK(c93.bad_sets == 3);
    CHECK(c93.total_sets == 84);

    auto c83 = census(8, 3);
    CHECK(c83.bad_sets == 0);
    CHECK(c83.good_forms == 7);

    auto c104 = census(10, 4);
    CHECK(c104.total_sets == 210);
    CHECK(c104.bad_sets == 30);
    CHECK(c104.awesome_sets == 170);
}

TEST_CASE("census conservation across k in {2..5}, n <= 14") {
    for (int k = 2; k <= 5; ++k) {
        for (int n = k + 2; n <= 14; ++n) {
            auto cs = census(n, k);
            CHECK(static_cast<unsigned long long>(cs.total_sets) == cs.total_subsets);
            CHECK(cs.good_sets + cs.bad_sets == cs.total_sets);
        }
    }
}

TEST_CASE("census: even n, k=2 loses n/2 pairs to the bad diameter form") {
    for (int n : {8, 10, 12, 14}) {
        auto cs = census(n, 2);
        CHECK(cs.good_sets == static_cast<long long>(binomial(n, 2)) - n / 2);
    }
}

TEST_CASE("census class counts equal deduplicated psi-prime") {
    for (int n : {9, 11, 14}) {
        auto cs = census(n, 4);
        for (const auto& row : cs.rows) {
            CHECK(row.class_count * ordered_solutions_per_class(row.pattern) == row.psi_prime_ordered);
            CHECK(row.class_count == static_cast<long long>(classes_of_pattern(row.pattern, n).size()));
        }
    }
}

TEST_CASE("census budget guard") {
    CHECK_THROWS_AS(census(80, 4, 1000), BudgetExceededError);
}

TEST_CASE("census per-pattern set counts agree with direct subset enumeration") {
    // dual route: walk every k-subset of [n], bucket by its form's pattern
    const int n = 10, k = 4;
    std::map<Tuple, long long> by_pattern;
    Tuple pick(k);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == k) {
            const Form f = form_of(Subset(n, pick));
            by_pattern[pattern_of(f).parts] += 1;
            return;
        }
        for (int v = lo; v <= n; ++v) {
            pick[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    const Census cs = census(n, k);
    for (const auto& row : cs.rows) {
        const auto it = by_pattern.find(row.pattern.parts);
        const long long direct = it == by_pattern.end() ? 0 : it->second;
        CHECK(row.set_count == direct);
    }
}

TEST_CASE("cross-ratio of bad patterns shrinks with n when defined") {
    // over nonzero rows only: patterns like <4> have no classes unless 4 | n
    for (int k : {4, 5}) {
        std::map<Tuple, std::vector<double>> history;
        for (int n : {50, 100, 200, 400}) {
            for (const Pattern& p : partitions_of(k)) {
                if (is_good_pattern(p)) continue;
                const long long bad = static_cast<long long>(classes_of_pattern(p, n).size());
                const long long good = static_cast<long long>(classes_of_pattern(phi(p), n).size());
                if (bad == 0 || good == 0) continue;
                history[p.parts].push_back(static_cast<double>(bad) / static_cast<double>(good));
            }
        }
        for (const auto& [parts, ratios] : history) {
            REQUIRE(ratios.size() >= 2);
            for (size_t i = 0; i + 1 < ratios.size(); ++i) CHECK(ratios[i] > ratios[i + 1]);
        }
    }
}

TEST_CASE("non_awesome_classes: pinned exact counts") {
    auto na104 = non_awesome_classes(10, 4);
    CHECK(na104.exact == 1); // the [3,3,3;1] class
    REQUIRE(na104.asym.has_value());
    CHECK(*na104.asym == doctest::Approx(1.0 / 3.0));

    auto na93 = non_awesome_classes(9, 3);
    CHECK(na93.exact == 1); // the [4,4;1] class
    REQUIRE(na93.asym.has_value());

    auto na135 = non_awesome_classes(13, 5);
    CHECK(na135.exact == 2);

    CHECK_FALSE(non_awesome_classes(8, 4).asym.has_value()); // n <= 2k
    CHECK(non_awesome_classes(9, 4).asym.has_value());       // boundary: 9 > 2k
}

TEST_CASE("non_awesome exact agrees with a status scan of all classes") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{10, 4}, {12, 4}, {13, 5}, {15, 3}}) {
        long long scan = 0;
        for (const Form& f : all_forms(n, k)) {
            // count classes once via their lexicographically first form
            const ClassSig c = class_of(f);
            if (forms_of_class(c).front() != f) continue;
            const ClassStatus st = status_of(c);
            if (st.is_good && !st.is_awesome) ++scan;
        }
        CHECK(non_awesome_classes(n, k).exact == scan);
    }
}
