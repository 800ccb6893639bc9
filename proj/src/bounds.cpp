#include "suitable/bounds.hpp"

#include <cmath>

#include "suitable/errors.hpp"

namespace suitable {

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::n_of_v_t: return "N";
        case Quantity::scn: return "scn";
        case Quantity::sun: return "sun";
    }
    return "?";
}

std::string kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::exact: return "exact";
        case BoundKind::lower: return "lower";
        case BoundKind::upper: return "upper";
    }
    return "?";
}

long long scn_from_sun(long long sun_value, int n_rows) {
    if (sun_value < n_rows)
        throw PreconditionError("sun value below N gives a negative core width");
    return sun_value - n_rows;
}

long long sun_from_scn(long long scn_value, int n_rows) {
    if (scn_value < 0)
        throw PreconditionError("scn value must be nonnegative");
    return scn_value + n_rows;
}

long long prop_i_lower_bound(int v, int t) {
    if (v < 1 || t < 1)
        throw PreconditionError("prop_i_lower_bound requires v, t >= 1");
    long long best = 0;
    const int cap = std::min(v, t);
    for (int i = 1; i <= cap; ++i)
        best = std::max(best, static_cast<long long>(i) * (t + 1 - i));
    return best;
}

std::optional<int> small_scn(int t, int n_rows) {
    if (t < 1 || n_rows < 0)
        throw PreconditionError("small_scn requires t >= 1, N >= 0");
    // the k-ranges are nonempty only for k <= (t-1)/2
    for (int k = 0; 2 * k <= t - 1; ++k) {
        const long long lo = static_cast<long long>(k) * (t + 1 - k);
        const long long hi = static_cast<long long>(k + 1) * (t - k);
        if (lo <= n_rows && n_rows < hi) return k;
        if (lo > n_rows) break;
    }
    return std::nullopt;
}

std::optional<int> dushnik_n(int v, int t) {
    for (int j = 2; static_cast<long long>(j) * j <= v; ++j) {
        const int lo = v / j + j - 1;
        const int hi = v / (j - 1) + j - 2;
        if (lo <= t && t < hi) return v - j + 1;
    }
    return std::nullopt;
}

bool spencer_check(int t, int n_rows, int v) {
    if (t < 3)
        throw PreconditionError("spencer_check applies for t >= 3");
    if (n_rows >= 6) return true;   // 2^(2^N) >= 2^64 dwarfs any table width
    const unsigned long long limit = 1ULL << (1ULL << n_rows);
    return static_cast<unsigned long long>(v) <= limit;
}

double furedi_kahn_upper(int v, int t) {
    if (t < 1 || v < t)
        throw PreconditionError("furedi_kahn_upper requires v >= t >= 1");
    return static_cast<double>(t) * t * (1.0 + std::log(static_cast<double>(v) / t));
}

std::vector<BoundsRecord> theorem_table(int t, int n_rows) {
    std::vector<BoundsRecord> records;
    auto add = [&](BoundKind kind, long long value, std::string prov) {
        records.push_back({Quantity::scn, t, n_rows, kind, value, std::move(prov)});
    };

    if (auto k = small_scn(t, n_rows))
        add(BoundKind::exact, *k, "range formula k(t+1-k) <= N < (k+1)(t-k), k=" + std::to_string(*k));

    if (t % 2 == 0) {
        const int s = t / 2;
        if (s >= 2 && n_rows == s * (s + 1)) {
            add(BoundKind::lower, s + 2, "Colbourn even-case family, s=" + std::to_string(s));
            add(BoundKind::exact, s + 2,
                "Colbourn even-case equality, stated without proof, s=" + std::to_string(s));
        }
    } else {
        const int s = (t - 1) / 2;
        if (s >= 1 && n_rows == (s + 1) * (s + 1)) {
            add(BoundKind::lower, s + 2, "Colbourn odd-case family, s=" + std::to_string(s));
            if (s >= 3)
                add(BoundKind::exact, s + 2, "odd-case equality theorem, s=" + std::to_string(s));
        }
    }

    struct Example { int t, n, scn; const char* name; };
    static constexpr Example examples[] = {
        {3, 4, 8, "fig1-483"},
        {5, 9, 5, "fig2-955"},
        {7, 17, 6, "fig3-1767"},
        {9, 26, 7, "fig4-2679"},
    };
    for (const Example& e : examples)
        if (e.t == t && e.n == n_rows)
            add(BoundKind::lower, e.scn, std::string("catalog core ") + e.name);

    return records;
}

} // namespace suitable
