#include "ordpath/tower.hpp"

namespace ordpath {

long long bit_length(const BigInt& v) {
    if (v <= 0) return 0;
    return static_cast<long long>(boost::multiprecision::msb(v)) + 1;
}

TowerValue eval_tower(const std::vector<BigInt>& levels, TowerBudget budget) {
    if (levels.empty()) throw std::invalid_argument("eval_tower: no levels");
    TowerValue acc;
    acc.exact = true;
    acc.value = levels.back();
    for (auto it = levels.rbegin() + 1; it != levels.rend(); ++it) {
        const BigInt& base = *it;
        if (acc.exact) {
            if (base == 0) {
                // 0^0 = 1 by convention; 0^e = 0 for e >= 1
                acc.value = acc.value == 0 ? 1 : 0;
                continue;
            }
            if (base == 1 || acc.value == 0) {
                acc.value = 1;  // 1^e = 1 and b^0 = 1
                continue;
            }
            BigInt bits_needed = acc.value * bit_length(base);
            if (bits_needed <= budget.max_bits) {
                acc.value = boost::multiprecision::pow(
                    base, acc.value.convert_to<unsigned long long>());
                continue;
            }
            acc.exact = false;
            acc.bit_length = bits_needed;  // upper bound: value < 2^(e * bitlen(base))
            acc.value = 0;
            continue;
        }
        // estimate mode: value < 2^B  =>  base^value < 2^(2^B * bitlen(base))
        if (!acc.bit_length || *acc.bit_length > budget.max_bits) {
            acc.bit_length.reset();
            continue;
        }
        BigInt next = boost::multiprecision::pow(
                          BigInt(2), acc.bit_length->convert_to<unsigned long long>()) *
                      bit_length(base);
        acc.bit_length = next;
    }
    return acc;
}

TowerValue ramsey_upper(long long q, long long N, int k, TowerBudget budget) {
    if (q < 1 || N < 1 || k < 2 || N < k)
        throw std::invalid_argument("ramsey_upper: need q, N >= 1, k >= 2, N >= k");
    std::vector<BigInt> levels;
    levels.emplace_back(q);
    for (int e = k - 1; e >= 2; --e)
        levels.push_back(boost::multiprecision::pow(BigInt(q), unsigned(e)));
    levels.emplace_back(BigInt(q) * (N - k) + 1);
    return eval_tower(levels, budget);
}

TowerValue ramsey_upper_k3(long long q, long long N, TowerBudget budget) {
    if (q < 1 || N < 3) throw std::invalid_argument("ramsey_upper_k3: need q >= 1, N >= 3");
    std::vector<BigInt> levels{BigInt(q), BigInt(q), 2 * BigInt(q) * (N - 3) + 1};
    return eval_tower(levels, budget);
}

namespace {

// n >= A^(A^B) with A = 1000 s^4, B = 2000 s^4 max(s, 2t+5)?
bool tower_leq_n(const BigInt& n, long long s, int t, const TowerBudget& budget) {
    BigInt s4 = boost::multiprecision::pow(BigInt(s), 4u);
    BigInt a = 1000 * s4;
    BigInt b = 2000 * s4 * std::max<long long>(s, 2ll * t + 5);
    if (a == 0) return n >= 0;  // s = 0: 0^(0^0) = 0^1 = 0
    if (a == 1) return n >= 1;
    // inner exponent E = A^B, exactly (its bit length is modest)
    BigInt e_bits_needed = b * bit_length(a);
    if (e_bits_needed > budget.max_bits)
        throw CapExceeded("s_from_n: inner exponent exceeds bit budget");
    BigInt e = boost::multiprecision::pow(a, b.convert_to<unsigned long long>());
    // bit-length shortcut: bitlen(A^E) lies in (E*(bitlen(A)-1), E*bitlen(A)]
    BigInt n_bits = bit_length(n);
    long long bl_a = bit_length(a);
    if (n_bits <= e * (bl_a - 1)) return false;  // n < A^E
    if (n_bits > e * bl_a) return true;          // n >= 2^(E*bitlen(A)) > A^E
    BigInt bits_needed = e * bl_a;
    if (bits_needed > budget.max_bits)
        throw CapExceeded("s_from_n: exact comparison exceeds bit budget");
    return n >= boost::multiprecision::pow(a, e.convert_to<unsigned long long>());
}

}  // namespace

int s_from_n(const BigInt& n, int t, TowerBudget budget) {
    if (n < 1 || t < 1) throw std::invalid_argument("s_from_n: need n >= 1, t >= 1");
    int s = 0;
    while (tower_leq_n(n, s + 1, t, budget)) ++s;
    return s;
}

int s_from_bitlength(long long bits, int t, TowerBudget budget) {
    if (bits < 1) throw std::invalid_argument("s_from_bitlength: need bits >= 1");
    BigInt n = boost::multiprecision::pow(BigInt(2), unsigned(bits - 1));
    return s_from_n(n, t, budget);
}

}  // namespace ordpath
