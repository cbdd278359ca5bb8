#include "weyl/series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/cartan.hpp"
#include "weyl/error.hpp"

namespace weyl {

namespace {

using u128 = unsigned __int128;

// Subset of {1, ..., r-1}, strictly increasing after validation.
std::vector<int> checked_subset(int r, std::vector<int> subset, const char* name) {
    std::sort(subset.begin(), subset.end());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] < 1 || subset[k] > r - 1)
            throw input_error(std::string(name) + " must be a subset of {1, ..., r-1}");
        if (k > 0 && subset[k] == subset[k - 1])
            throw input_error(std::string(name) + " has a repeated element");
    }
    return subset;
}

void check_series_rank(int r) {
    if (r < 3) throw input_error("series systems need rank >= 3");
    if (r > kMaxRank) throw capacity_error("rank exceeds the compiled maximum");
}

std::vector<Vec> psi_members(int r, const std::vector<int>& Y) {
    std::vector<Vec> roots;
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) roots.push_back(eta(i, j, r));
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j < r; ++j) roots.push_back(add(eta(i, r, r), eta(j, r - 1, r)));
    for (int j : Y) roots.push_back(add(eta(j, r, r), eta(j, r - 1, r)));
    return roots;
}

u128 mul_u128(u128 a, u128 b) {
    if (a != 0 && b > ~u128{0} / a) throw capacity_error("series count exceeds 128 bits");
    return a * b;
}

u128 factorial_u128(int k) {
    u128 f = 1;
    for (int i = 2; i <= k; ++i) f = mul_u128(f, static_cast<u128>(i));
    return f;
}

u128 pow2_u128(int k) {
    if (k >= 128) throw capacity_error("series count exceeds 128 bits");
    return u128{1} << k;
}

u128 binomial_u128(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    u128 b = 1;
    for (int i = 1; i <= k; ++i) b = mul_u128(b, static_cast<u128>(n - k + i)) / static_cast<u128>(i);
    return b;
}

std::uint64_t to_u64(u128 v) {
    if (v > u128{UINT64_MAX}) throw capacity_error("series count exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

std::string subset_string(const std::vector<int>& S) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < S.size(); ++k) out << (k ? "," : "") << S[k];
    out << '}';
    return out.str();
}

// All of Lambda and -Lambda, sorted; two systems coincide as signed sets
// exactly when these vectors are equal.
std::vector<Vec> signed_members(const RootSet& R) {
    std::vector<Vec> all;
    all.reserve(2 * R.roots.size());
    for (const Vec& v : R.roots) {
        all.push_back(v);
        all.push_back(neg(v));
    }
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

std::vector<Vec> reflected_signed_members(const RootSet& R, int i_one_based) {
    const CartanMatrix C = gcm_from_root_set(R);
    std::vector<Vec> all = signed_members(R);
    for (Vec& v : all) v = reflect(C, i_one_based - 1, v);
    std::sort(all.begin(), all.end(), canonical_less);
    return all;
}

std::vector<int> transposed(std::vector<int> S, int i) {
    bool has_i = std::binary_search(S.begin(), S.end(), i);
    bool has_n = std::binary_search(S.begin(), S.end(), i + 1);
    if (has_i == has_n) return S;
    for (int& x : S) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    std::sort(S.begin(), S.end());
    return S;
}

std::vector<int> without(std::vector<int> S, int x) {
    S.erase(std::remove(S.begin(), S.end(), x), S.end());
    return S;
}

std::vector<int> with(std::vector<int> S, int x) {
    S.push_back(x);
    std::sort(S.begin(), S.end());
    return S;
}

}  // namespace

Vec eta(int i, int j, int r) {
    if (r < 1 || r > kMaxRank) throw input_error("eta needs 1 <= r <= 12");
    if (i < 1 || i > r || j < 0 || j > r) throw input_error("eta needs 1 <= i <= r and 0 <= j <= r");
    Vec v;
    for (int k = i; k <= j; ++k) v.c[k - 1] = 1;
    return v;
}

RootSet phi(int r, const std::vector<int>& Z) {
    check_series_rank(r);
    const std::vector<int> z = checked_subset(r, Z, "Z");
    std::vector<Vec> roots;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) roots.push_back(eta(i, j - 1, r));
    for (int i = 1; i < r; ++i) roots.push_back(add(eta(i, r - 2, r), unit(r - 1)));
    for (int i = 1; i < r; ++i)
        for (int j = i + 1; j < r; ++j) roots.push_back(add(eta(i, r, r), eta(j, r - 2, r)));
    for (int j : z) roots.push_back(add(eta(j, r, r), eta(j, r - 2, r)));
    return make_root_set(r, std::move(roots));
}

RootSet psi(int r, const std::vector<int>& Y) {
    check_series_rank(r);
    return make_root_set(r, psi_members(r, checked_subset(r, Y, "Y")));
}

RootSet psi_prime(int r, const std::vector<int>& Y) {
    check_series_rank(r);
    std::vector<Vec> roots = psi_members(r, checked_subset(r, Y, "Y"));
    for (Vec& v : roots) std::swap(v.c[r - 2], v.c[r - 1]);
    return make_root_set(r, std::move(roots));
}

RootSet series_root_set(const SeriesSpec& spec) {
    switch (spec.variant) {
        case SeriesVariant::Phi:
            return phi(spec.rank, spec.subset);
        case SeriesVariant::Psi:
            return psi(spec.rank, spec.subset);
        case SeriesVariant::PsiPrime:
            return psi_prime(spec.rank, spec.subset);
    }
    throw internal_error("unhandled series variant");
}

int series_class_parameter(const SeriesSpec& spec) {
    check_series_rank(spec.rank);
    const int size = static_cast<int>(checked_subset(spec.rank, spec.subset, "subset").size());
    return spec.variant == SeriesVariant::Phi ? size : size + 1;
}

SeriesCounts series_counts(int r, int s) {
    if (r < 3) throw input_error("series counts need rank >= 3");
    if (s < 1 || s > r - 1)
        throw input_error("series class parameter must satisfy 1 <= s <= r-1");
    const u128 m = binomial_u128(r - 1, s - 1) + binomial_u128(r, s);
    const u128 n = mul_u128(mul_u128(pow2_u128(r - 1), static_cast<u128>(s + r)),
                            factorial_u128(r - 1));
    if (n % m != 0) throw internal_error("series object count does not split over the root sets");
    const u128 aut = n / m;
    const u128 aut_direct = mul_u128(mul_u128(pow2_u128(s), factorial_u128(s)),
                                     mul_u128(pow2_u128(r - s - 1), factorial_u128(r - s)));
    if (aut != aut_direct)
        throw internal_error("series automorphism-order formulas disagree");
    SeriesCounts counts;
    counts.n_root_sets = to_u64(m);
    counts.n_objects = to_u64(n);
    counts.aut_order = to_u64(aut);
    return counts;
}

RootSet standard_roots(StandardFamily family, int r) {
    if (r < 1 || r > kMaxRank) throw input_error("standard systems need 1 <= rank <= 12");
    std::vector<Vec> roots;
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) roots.push_back(eta(i, j, r));
    switch (family) {
        case StandardFamily::A:
            break;
        case StandardFamily::B:
            if (r < 2) throw input_error("family B needs rank >= 2");
            for (int i = 1; i < r; ++i)
                for (int j = i + 1; j <= r; ++j) roots.push_back(add(eta(i, r, r), eta(j, r, r)));
            break;
        case StandardFamily::C:
            if (r < 2) throw input_error("family C needs rank >= 2");
            for (int i = 1; i < r; ++i)
                for (int j = i; j < r; ++j) roots.push_back(add(eta(i, r, r), eta(j, r - 1, r)));
            break;
        case StandardFamily::D:
            if (r < 3) throw input_error("family D needs rank >= 3");
            roots.clear();
            for (int i = 1; i <= r; ++i)
                for (int j = i + 1; j <= r; ++j) roots.push_back(eta(i, j - 1, r));
            for (int i = 1; i < r; ++i) roots.push_back(add(eta(i, r - 2, r), unit(r - 1)));
            for (int i = 1; i < r; ++i)
                for (int j = i + 1; j < r; ++j) roots.push_back(add(eta(i, r, r), eta(j, r - 2, r)));
            break;
    }
    return make_root_set(r, std::move(roots));
}

SeriesReport verify_reflection_table(int r, int max_subset_size) {
    if (r < 4) throw input_error("the reflection table needs rank >= 4");
    check_series_rank(r);
    SeriesReport report;
    auto expect = [&](const char* lhs, const std::vector<int>& S, int i,
                      const std::vector<Vec>& image, const char* rhs, const RootSet& target) {
        ++report.checks;
        if (image != signed_members(target)) {
            std::ostringstream out;
            out << "r=" << r << ' ' << lhs << ' ' << subset_string(S) << " sigma_" << i
                << ": image is not the signed set of " << rhs;
            report.failures.push_back(out.str());
        }
    };
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> S;
        for (int b = 0; b < r - 1; ++b)
            if (mask & (1u << b)) S.push_back(b + 1);
        if (static_cast<int>(S.size()) <= max_subset_size) subsets.push_back(std::move(S));
    }
    for (const std::vector<int>& S : subsets) {
        const bool has_last = std::binary_search(S.begin(), S.end(), r - 1);
        const RootSet phi_S = phi(r, S);
        const RootSet psi_S = psi(r, S);
        const RootSet psip_S = psi_prime(r, S);
        for (int i = 1; i <= r - 2; ++i) {
            const std::vector<int> T = transposed(S, i);
            expect("Phi", S, i, reflected_signed_members(phi_S, i), "Phi of the transposed subset",
                   phi(r, T));
            expect("Psi", S, i, reflected_signed_members(psi_S, i), "Psi of the transposed subset",
                   psi(r, T));
            expect("Psi'", S, i, reflected_signed_members(psip_S, i),
                   "Psi' of the transposed subset", psi_prime(r, T));
        }
        if (has_last) {
            const std::vector<int> T = without(S, r - 1);
            expect("Phi", S, r - 1, reflected_signed_members(phi_S, r - 1), "Psi without r-1",
                   psi(r, T));
            expect("Phi", S, r, reflected_signed_members(phi_S, r), "Psi' without r-1",
                   psi_prime(r, T));
            expect("Psi", S, r - 1, reflected_signed_members(psi_S, r - 1), "Psi itself", psi_S);
            expect("Psi", S, r, reflected_signed_members(psi_S, r), "Psi itself", psi_S);
            expect("Psi'", S, r - 1, reflected_signed_members(psip_S, r - 1), "Psi' itself",
                   psip_S);
            expect("Psi'", S, r, reflected_signed_members(psip_S, r), "Psi' itself", psip_S);
        } else {
            const std::vector<int> T = with(S, r - 1);
            expect("Phi", S, r - 1, reflected_signed_members(phi_S, r - 1), "Phi itself", phi_S);
            expect("Phi", S, r, reflected_signed_members(phi_S, r), "Phi itself", phi_S);
            expect("Psi", S, r - 1, reflected_signed_members(psi_S, r - 1), "Phi with r-1",
                   phi(r, T));
            expect("Psi", S, r, reflected_signed_members(psi_S, r), "Psi itself", psi_S);
            expect("Psi'", S, r - 1, reflected_signed_members(psip_S, r - 1), "Psi' itself",
                   psip_S);
            expect("Psi'", S, r, reflected_signed_members(psip_S, r), "Phi with r-1", phi(r, T));
        }
    }
    return report;
}

}  // namespace weyl
