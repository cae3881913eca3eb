#include "ucyc/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ucyc/forms.hpp"

namespace ucyc {

unsigned long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        // multiply first, divide by i afterwards; r*(n-k+i) is divisible by i
        if (r > ~0ULL / num) throw OverflowError("binomial overflows 64 bits");
        r = r * num / static_cast<unsigned long long>(i);
    }
    return r;
}

long long psi_exact(const Pattern& p, int n) {
    if (n < 0) return 0;
    // slot-by-slot denumerant DP: dp[v] = tuples over processed slots summing to v
    std::vector<long long> dp(n + 1, 0);
    dp[0] = 1;
    for (int part : p.parts) {
        for (int v = part; v <= n; ++v) dp[v] += dp[v - part];
    }
    return dp[n];
}

long long psi_prime_exact(const Pattern& p, int n, long long node_budget) {
    const int t = p.t();
    long long nodes = 0;
    Tuple used;
    used.reserve(t);
    auto rec = [&](auto&& self, int slot, int rem) -> long long {
        if (++nodes > node_budget) throw BudgetExceededError("psi_prime_exact: node budget exhausted");
        if (slot == t) return rem == 0 ? 1 : 0;
        const int part = p.parts[slot];
        int tail = 0;
        for (int j = slot + 1; j < t; ++j) tail += p.parts[j];
        long long cnt = 0;
        for (int x = 1; static_cast<long long>(x) * part + tail <= rem; ++x) {
            if (std::find(used.begin(), used.end(), x) != used.end()) continue;
            used.push_back(x);
            cnt += self(self, slot + 1, rem - x * part);
            used.pop_back();
        }
        return cnt;
    };
    return rec(rec, 0, n);
}

double psi_asym(const Pattern& p, int n) {
    const int t = p.t();
    double q = 1;
    for (int part : p.parts) q *= part;
    return std::pow(static_cast<double>(n), t - 1) / (std::tgamma(t) * q);
}

double psi_prime_asym(const Pattern& p, int n) {
    const int t = p.t();
    const int k = p.total();
    double q = 1;
    int g = 0;
    for (int part : p.parts) {
        q *= part;
        g = std::gcd(g, part);
    }
    const double nk = static_cast<double>(n - k);
    const double lead = std::pow(nk, t - 1) / (std::tgamma(t) * q * std::pow(g, t - 1));
    if (t == 1) return lead;
    double pairsum = 0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            pairsum += static_cast<double>(p.parts[i]) * p.parts[j] / (p.parts[i] + p.parts[j]);
    const double corr = std::pow(nk, t - 2) / (std::tgamma(t - 1) * q * std::pow(g, t - 2)) * pairsum;
    return lead - corr;
}

double Census::good_set_fraction() const {
    return total_sets ? static_cast<double>(good_sets) / static_cast<double>(total_sets) : 0.0;
}

double Census::awesome_set_fraction() const {
    return total_sets ? static_cast<double>(awesome_sets) / static_cast<double>(total_sets) : 0.0;
}

Census census(int n, int k, unsigned long long subset_budget) {
    if (k < 2 || k > n - 2) throw Error("census: requires 2 <= k <= n-2");
    Census cs;
    cs.n = n;
    cs.k = k;
    cs.total_subsets = binomial(n, k);
    if (cs.total_subsets > subset_budget)
        throw BudgetExceededError("census: C(n,k) exceeds the enumeration budget");

    for (const Pattern& p : partitions_of(k)) {
        CensusRow row;
        row.pattern = p;
        row.good = is_good_pattern(p);
        row.asym_class_count = psi_prime_asym(p, n);
        int g = 0;
        for (int part : p.parts) g = std::gcd(g, part);
        row.asym_divisible = (n - k) % g == 0;

        auto classes = classes_of_pattern(p, n);
        row.class_count = static_cast<long long>(classes.size());
        row.psi_prime_ordered = row.class_count * ordered_solutions_per_class(p);
        for (const ClassSig& c : classes) {
            const bool awesome = status_of(c).is_awesome;
            for (const Form& f : forms_of_class(c)) {
                ++row.form_count;
                const long long sets = static_cast<long long>(sets_of_form(f).size());
                row.set_count += sets;
                if (awesome) cs.awesome_sets += sets;
            }
            if (awesome) ++cs.awesome_classes;
        }
        if (row.good) {
            cs.good_sets += row.set_count;
            cs.good_classes += row.class_count;
            cs.good_forms += row.form_count;
        } else {
            cs.bad_sets += row.set_count;
            cs.bad_classes += row.class_count;
            cs.bad_forms += row.form_count;
        }
        cs.total_sets += row.set_count;
        cs.rows.push_back(std::move(row));
    }

    // class-count ratio of each bad pattern against its phi image
    for (const CensusRow& row : cs.rows) {
        if (row.good) continue;
        CrossRatio cr;
        cr.bad_pattern = row.pattern;
        cr.good_image = phi(row.pattern);
        cr.bad_classes = row.class_count;
        for (const CensusRow& other : cs.rows)
            if (other.pattern == cr.good_image) cr.good_classes = other.class_count;
        if (cr.good_classes > 0)
            cr.ratio = static_cast<double>(cr.bad_classes) / static_cast<double>(cr.good_classes);
        cs.cross_ratios.push_back(std::move(cr));
    }
    return cs;
}

NonAwesomeCount non_awesome_classes(int n, int k) {
    NonAwesomeCount out;
    for (const Pattern& p : partitions_of(k)) {
        if (!is_good_pattern(p)) continue;
        const long long ones = std::count(p.parts.begin(), p.parts.end(), 1);
        if (ones != 1) continue; // two singleton values make the largest exceed 1
        for (const ClassSig& c : classes_of_pattern(p, n)) {
            const ClassStatus st = status_of(c);
            if (st.is_good && !st.is_awesome) ++out.exact;
        }
    }
    if (n > 2 * k) {
        double sum = 0;
        for (const Pattern& p : partitions_of(k)) {
            const long long ones = std::count(p.parts.begin(), p.parts.end(), 1);
            if (ones != 1 || p.t() < 2) continue;
            const int t = p.t();
            double q = 1;
            int g = 0;
            for (int part : p.parts) {
                q *= part;
                if (part >= 2) g = std::gcd(g, part);
            }
            sum += std::pow(static_cast<double>(n - 2 * k - 1), t - 2) /
                   (std::tgamma(t - 1) * std::pow(g, t - 2) * q);
        }
        out.asym = sum;
    }
    return out;
}

} // namespace ucyc
