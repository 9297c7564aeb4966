#include "wpoly/linext.hpp"

#include <algorithm>
#include <string>

namespace wpoly {

bool is_permutation_of_range(std::span<const Label> seq)
{
    std::vector<bool> seen(seq.size() + 1, false);
    for (Label x : seq) {
        if (x < 1 || static_cast<std::size_t>(x) > seq.size() || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

int descent_count(std::span<const Label> seq)
{
    int d = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] > seq[i + 1])
            ++d;
    return d;
}

bool is_linear_extension(const Poset& poset, std::span<const Label> seq)
{
    if (static_cast<int>(seq.size()) != poset.size() || !is_permutation_of_range(seq))
        return false;
    std::vector<std::size_t> position(seq.size() + 1);
    for (std::size_t i = 0; i < seq.size(); ++i)
        position[static_cast<std::size_t>(seq[i])] = i;
    for (const auto& [a, b] : poset.closure_pairs())
        if (position[static_cast<std::size_t>(a)] > position[static_cast<std::size_t>(b)])
            return false;
    return true;
}

std::vector<Permutation> linear_extensions(const Poset& poset, std::uint64_t limit)
{
    std::vector<Permutation> out;
    if (limit == 0)
        return out;
    for_each_linear_extension(poset, [&](std::span<const Label> seq, int) {
        out.push_back(Permutation{{seq.begin(), seq.end()}});
        return out.size() < limit;
    });
    return out;
}

namespace {

constexpr std::size_t max_frontier_states = std::size_t{1} << 22;

Integer count_by_chain_frontier(const Poset& poset)
{
    const int p = poset.size();

    // Greedy chain decomposition along the lexicographically first extension.
    std::vector<Label> order;
    for_each_linear_extension(poset, [&](std::span<const Label> seq, int) {
        order.assign(seq.begin(), seq.end());
        return false;
    });
    std::vector<std::vector<Label>> chains;
    std::vector<std::size_t> chain_of(static_cast<std::size_t>(p) + 1);
    std::vector<std::size_t> pos_in_chain(static_cast<std::size_t>(p) + 1);
    for (Label x : order) {
        auto it = std::find_if(chains.begin(), chains.end(), [&](const auto& c) { return poset.less(c.back(), x); });
        if (it == chains.end()) {
            chains.emplace_back();
            it = chains.end() - 1;
        }
        chain_of[static_cast<std::size_t>(x)] = static_cast<std::size_t>(it - chains.begin());
        pos_in_chain[static_cast<std::size_t>(x)] = it->size();
        it->push_back(x);
    }

    const std::size_t c = chains.size();
    std::vector<std::size_t> stride(c);
    std::size_t states = 1;
    for (std::size_t i = 0; i < c; ++i) {
        stride[i] = states;
        const std::size_t radix = chains[i].size() + 1;
        if (states > max_frontier_states / radix)
            throw std::length_error("count_linear_extensions_dp: ideal lattice too large for chain frontier");
        states *= radix;
    }

    // need[x][i]: chain i must have a prefix of at least this length before x can be added.
    std::vector<std::vector<std::size_t>> need(static_cast<std::size_t>(p) + 1, std::vector<std::size_t>(c, 0));
    for (Label x = 1; x <= p; ++x)
        for (Label y = 1; y <= p; ++y)
            if (poset.less(y, x)) {
                auto& slot = need[static_cast<std::size_t>(x)][chain_of[static_cast<std::size_t>(y)]];
                slot = std::max(slot, pos_in_chain[static_cast<std::size_t>(y)] + 1);
            }

    // Adding an element raises one prefix, so increasing mixed-radix index is a topological order.
    std::vector<Integer> count(states);
    count[0] = 1;
    std::vector<std::size_t> prefix(c, 0);
    for (std::size_t s = 0; s < states; ++s) {
        if (s > 0) {
            for (std::size_t i = 0; i < c; ++i) {
                if (++prefix[i] <= chains[i].size())
                    break;
                prefix[i] = 0;
            }
        }
        if (count[s] == 0)
            continue;
        for (std::size_t i = 0; i < c; ++i) {
            if (prefix[i] == chains[i].size())
                continue;
            const auto& req = need[static_cast<std::size_t>(chains[i][prefix[i]])];
            bool ok = true;
            for (std::size_t j = 0; j < c && ok; ++j)
                ok = prefix[j] >= req[j];
            if (ok)
                count[s + stride[i]] += count[s];
        }
    }
    return count[states - 1];
}

Integer count_by_ideal_bitmask(const Poset& poset)
{
    const int p = poset.size();
    if (p > 20)
        throw std::length_error("count_linear_extensions_dp: bitmask method supports p <= 20, got "
                                + std::to_string(p));
    std::vector<std::uint32_t> below(static_cast<std::size_t>(p), 0);
    for (const auto& [a, b] : poset.closure_pairs())
        below[static_cast<std::size_t>(b - 1)] |= std::uint32_t{1} << (a - 1);

    const std::uint32_t full = (std::uint32_t{1} << p) - 1;
    // Counts stay below p! <= 20! < 2^64.
    std::vector<std::uint64_t> count(std::size_t{full} + 1, 0);
    count[0] = 1;
    for (std::uint32_t s = 0; s < full; ++s) {
        if (count[s] == 0)
            continue;
        for (int x = 0; x < p; ++x) {
            const std::uint32_t bit = std::uint32_t{1} << x;
            if (!(s & bit) && (below[static_cast<std::size_t>(x)] & ~s) == 0)
                count[s | bit] += count[s];
        }
    }
    Integer result;
    mpz_import(result.get_mpz_t(), 1, -1, sizeof(std::uint64_t), 0, 0, &count[full]);
    return result;
}

} // namespace

Integer count_linear_extensions_dp(const Poset& poset, CountMethod method)
{
    switch (method) {
    case CountMethod::ideal_bitmask:
        return count_by_ideal_bitmask(poset);
    case CountMethod::chain_frontier:
        break;
    }
    return count_by_chain_frontier(poset);
}

Integer DescentTally::total() const
{
    Integer sum = 0;
    for (const auto& c : counts)
        sum += c;
    return sum;
}

DescentTally descent_tally(const Poset& poset, std::uint64_t budget)
{
    Integer size;
    try {
        size = count_linear_extensions_dp(poset);
    } catch (const std::length_error& e) {
        throw BudgetExceeded(std::string("cannot bound |L(P)| before enumeration: ") + e.what());
    }
    if (size > Integer(std::to_string(budget)))
        throw BudgetExceeded("|L(P)| = " + size.get_str() + " exceeds the enumeration budget of "
                             + std::to_string(budget));

    std::vector<std::uint64_t> tally(static_cast<std::size_t>(poset.size()), 0);
    for_each_linear_extension(poset, [&](std::span<const Label>, int descents) {
        ++tally[static_cast<std::size_t>(descents)];
        return true;
    });
    while (tally.size() > 1 && tally.back() == 0)
        tally.pop_back();

    DescentTally out;
    out.counts.reserve(tally.size());
    for (std::uint64_t v : tally) {
        Integer c;
        mpz_import(c.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
        out.counts.push_back(c);
    }
    return out;
}

IntPolynomial w_polynomial_enumerative(const Poset& poset, std::uint64_t budget)
{
    return descent_tally(poset, budget).polynomial();
}

} // namespace wpoly
