#include "hbraces/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "hbraces/error.hpp"

namespace hbraces {

int koszul_sign(std::span<const std::size_t> perm, std::span<const int> parities)
{
    const std::size_t n = perm.size();
    if (parities.size() != n)
        throw ContractViolation("koszul_sign: permutation and parity lengths differ");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p])
            throw ContractViolation("koszul_sign: not a permutation");
        seen[p] = true;
    }
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (parities[perm[i]] % 2 == 0)
            continue;
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[i] > perm[j] && parities[perm[j]] % 2 != 0)
                sign = -sign;
    }
    return sign;
}

std::vector<Permutation> unshuffles(std::size_t u, std::size_t v)
{
    const std::size_t n = u + v;
    std::vector<Permutation> out;
    // choose the first block as an increasing u-subset; subsets in
    // lexicographic order give permutations in lexicographic order
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(u), true);
    do {
        Permutation perm;
        perm.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i])
                perm.push_back(i);
        for (std::size_t i = 0; i < n; ++i)
            if (!mask[i])
                perm.push_back(i);
        out.push_back(std::move(perm));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

namespace {

void compositions_with_parts(std::size_t r, std::size_t parts, std::vector<std::size_t>& prefix,
                             std::vector<std::vector<std::size_t>>& out)
{
    if (parts == 0) {
        if (r == 0)
            out.push_back(prefix);
        return;
    }
    for (std::size_t first = 1; first + (parts - 1) <= r; ++first) {
        prefix.push_back(first);
        compositions_with_parts(r - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::size_t>> compositions(std::size_t r)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    for (std::size_t parts = 1; parts <= r; ++parts)
        compositions_with_parts(r, parts, prefix, out);
    return out;
}

std::vector<SetPartition> set_partitions(std::size_t n)
{
    std::vector<SetPartition> out;
    if (n == 0)
        return out;
    // restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i-1])
    std::vector<std::size_t> label(n, 0), running_max(n, 0);
    while (true) {
        std::size_t blocks = running_max[n - 1] + 1;
        SetPartition partition(blocks);
        for (std::size_t i = 0; i < n; ++i)
            partition[label[i]].push_back(i);
        out.push_back(std::move(partition));

        std::size_t i = n - 1;
        while (i > 0 && label[i] == running_max[i - 1] + 1)
            --i;
        if (i == 0)
            break;
        ++label[i];
        running_max[i] = std::max(running_max[i - 1], label[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            label[j] = 0;
            running_max[j] = running_max[i];
        }
    }
    return out;
}

unsigned long long binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    unsigned long long result = 1;
    for (unsigned i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

unsigned long long bell_number(unsigned n)
{
    // Bell triangle
    std::vector<unsigned long long> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

std::vector<ParityVector> all_parity_vectors(std::size_t n)
{
    std::vector<ParityVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        ParityVector p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = static_cast<int>((mask >> (n - 1 - i)) & 1U);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace hbraces
