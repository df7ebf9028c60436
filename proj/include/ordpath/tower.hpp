#pragma once

// Exact big-integer tower arithmetic: the multicolor Ramsey upper bound
// and the s(n, t) threshold. a * b written here means a^b, right-nested.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "ordpath/core.hpp"

namespace ordpath {

using BigInt = boost::multiprecision::cpp_int;

// Bits allowed for an exactly materialized value.
struct TowerBudget {
    long long max_bits = 1ll << 22;
};

struct TowerValue {
    bool exact = true;
    BigInt value;                       // when exact
    std::optional<BigInt> bit_length;   // upper-bound estimate when not exact;
                                        // absent if even the estimate overflows
};

long long bit_length(const BigInt& v);

// Right-nested tower with the given levels (outermost first).
TowerValue eval_tower(const std::vector<BigInt>& levels, TowerBudget budget = {});

// General product form: q * (q^{k-1}) * (q^{k-2}) * ... * (q^2) * (q(N-k)+1).
// pre: q, N >= 1, k >= 2, N >= k.
TowerValue ramsey_upper(long long q, long long N, int k, TowerBudget budget = {});

// The k = 3 bound exactly as printed: q * q * (2q(N-3)+1).
TowerValue ramsey_upper_k3(long long q, long long N, TowerBudget budget = {});

// Largest s with n >= (10^3 s^4) * (10^3 s^4) * (2*10^3 s^4 max(s, 2t+5)).
// Throws CapExceeded only if a comparison genuinely needs more bits than
// the budget (practically unreachable: the bit-length shortcut decides).
int s_from_n(const BigInt& n, int t, TowerBudget budget = {});
// Same for n = 2^(bits-1), the smallest integer of the given bit length.
int s_from_bitlength(long long bits, int t, TowerBudget budget = {});

}  // namespace ordpath
