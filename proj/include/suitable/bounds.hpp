#pragma once

#include <optional>
#include <string>
#include <vector>

namespace suitable {

enum class Quantity { n_of_v_t, scn, sun };
enum class BoundKind { exact, lower, upper };

// One known value or bound with its origin. Params are (v, t) for n_of_v_t
// and (t, N) for scn/sun.
struct BoundsRecord {
    Quantity quantity = Quantity::scn;
    int p1 = 0;
    int p2 = 0;
    BoundKind kind = BoundKind::exact;
    long long value = 0;
    std::string provenance;
};

std::string quantity_name(Quantity q);
std::string kind_name(BoundKind k);

// scn(t,N) = sun(t,N) - N and back.
long long scn_from_sun(long long sun_value, int n_rows);
long long sun_from_scn(long long scn_value, int n_rows);

// max over i = 1..min(v,t) of i(t+1-i); no (N, v, t)-core has fewer rows.
long long prop_i_lower_bound(int v, int t);

// Exact scn(t,N) = k when k(t+1-k) <= N < (k+1)(t-k) for some k >= 0;
// nullopt once N is past every such range.
std::optional<int> small_scn(int t, int n_rows);

// Exact N(v,t) = v-j+1 when floor(v/j)+j-1 <= t < floor(v/(j-1))+j-2 for
// some j with 2 <= j <= sqrt(v); nullopt outside those ranges.
std::optional<int> dushnik_n(int v, int t);

// Feasibility filter for t >= 3: an (N, v, t)-suitable array forces
// v <= 2^(2^N).
bool spencer_check(int t, int n_rows, int v);

// t^2 (1 + ln(v/t)), an upper bound on N(v,t). Natural logarithm; the
// source states no base.
double furedi_kahn_upper(int v, int t);

// Every known scn record for the pair (t, N): the closed-form range value,
// the two infinite-family lower bounds and their equality strengthenings,
// and the catalog examples.
std::vector<BoundsRecord> theorem_table(int t, int n_rows);

} // namespace suitable
