#ifndef WPOLY_LINEXT_HPP
#define WPOLY_LINEXT_HPP

#include "wpoly/polynomial.hpp"
#include "wpoly/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace wpoly {

/// Labels in visit order: seq[i] is the label at position i + 1.
struct Permutation {
    std::vector<Label> seq;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// True iff seq lists each of 1..seq.size() exactly once.
bool is_permutation_of_range(std::span<const Label> seq);

/// Positions i with seq[i] > seq[i+1].
int descent_count(std::span<const Label> seq);
inline int descent_count(const Permutation& pi) { return descent_count(std::span<const Label>(pi.seq)); }

/// True iff every a < b in the poset has a placed before b.
bool is_linear_extension(const Poset& poset, std::span<const Label> seq);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

namespace detail {

// Backtracking over the currently minimal labels, ascending, so extensions
// come out in lexicographic order. visit(seq, descents) returns false to stop.
template <class Visit>
class ExtensionWalker {
public:
    ExtensionWalker(const Poset& poset, Visit& visit)
        : p_(static_cast<std::size_t>(poset.size())), words_((p_ + 63) / 64), visit_(visit),
          indegree_(p_, 0), upper_(p_), seq_(p_), masks_((p_ + 1) * words_, 0)
    {
        for (const auto& [a, b] : poset.covers()) {
            upper_[static_cast<std::size_t>(a - 1)].push_back(b - 1);
            ++indegree_[static_cast<std::size_t>(b - 1)];
        }
        for (std::size_t x = 0; x < p_; ++x)
            if (indegree_[x] == 0)
                masks_[x / 64] |= std::uint64_t{1} << (x % 64);
    }

    void run() { descend(0, 0); }

private:
    bool descend(std::size_t depth, int descents)
    {
        if (depth == p_)
            return visit_(std::span<const Label>(seq_), descents);
        std::uint64_t* avail = &masks_[depth * words_];
        std::uint64_t* next = avail + words_;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = avail[w];
            while (bits) {
                const auto x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                std::copy(avail, avail + words_, next);
                next[x / 64] &= ~(std::uint64_t{1} << (x % 64));
                for (int y : upper_[x])
                    if (--indegree_[static_cast<std::size_t>(y)] == 0)
                        next[static_cast<std::size_t>(y) / 64] |= std::uint64_t{1} << (y % 64);
                const auto label = static_cast<Label>(x + 1);
                const int d = descents + (depth > 0 && seq_[depth - 1] > label ? 1 : 0);
                seq_[depth] = label;
                const bool go_on = descend(depth + 1, d);
                for (int y : upper_[x])
                    ++indegree_[static_cast<std::size_t>(y)];
                if (!go_on)
                    return false;
            }
        }
        return true;
    }

    std::size_t p_;
    std::size_t words_;
    Visit& visit_;
    std::vector<int> indegree_;
    std::vector<std::vector<int>> upper_;
    std::vector<Label> seq_;
    std::vector<std::uint64_t> masks_;
};

} // namespace detail

/// Streams L(P) in lexicographic order. visit(std::span<const Label> seq, int descents)
/// returns false to stop early. Memory is O(p^2 / 64) regardless of |L(P)|.
template <class Visit>
void for_each_linear_extension(const Poset& poset, Visit&& visit)
{
    detail::ExtensionWalker<std::remove_reference_t<Visit>> walker(poset, visit);
    walker.run();
}

/// Collects at most `limit` extensions in lexicographic order.
std::vector<Permutation> linear_extensions(const Poset& poset, std::uint64_t limit = default_enumeration_budget);

enum class CountMethod {
    chain_frontier, ///< downsets as prefix lengths of a chain decomposition
    ideal_bitmask,  ///< downsets as bitmasks, p <= 20 only
};

/// |L(P)| by dynamic programming over order ideals; never lists permutations.
/// Throws std::length_error if the state space is too large for the method.
Integer count_linear_extensions_dp(const Poset& poset, CountMethod method = CountMethod::chain_frontier);

/// counts[k] = number of linear extensions with exactly k descents.
struct DescentTally {
    std::vector<Integer> counts;

    Integer total() const;
    IntPolynomial polynomial() const { return IntPolynomial(counts); }
};

/// Descent tally by exhaustive enumeration. |L(P)| is checked against the
/// budget first (via the DP count); throws BudgetExceeded when it is larger.
DescentTally descent_tally(const Poset& poset, std::uint64_t budget = default_enumeration_budget);

/// W(P, t) = sum over linear extensions of t^des.
IntPolynomial w_polynomial_enumerative(const Poset& poset, std::uint64_t budget = default_enumeration_budget);

} // namespace wpoly

#endif
