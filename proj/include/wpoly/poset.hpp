#ifndef WPOLY_POSET_HPP
#define WPOLY_POSET_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpoly {

using Label = int;
using Relation = std::pair<Label, Label>;

struct PosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The relation digraph has a directed cycle.
struct CycleError : PosetError {
    using PosetError::PosetError;
};

/// A label lies outside [p].
struct LabelError : PosetError {
    using PosetError::PosetError;
};

/// Malformed poset text.
struct ParseError : PosetError {
    using PosetError::PosetError;
};

/// Partial order on the labels 1..p.
///
/// Immutable once built. Stores the transitive reduction (cover relations,
/// sorted) and the transitive closure as a dense bit matrix. Labels are never
/// renumbered: the descent statistic depends on them.
class Poset {
public:
    /// Accepts any relation pairs (a, b) meaning a < b, redundant or not.
    /// Throws LabelError for labels outside [p] and CycleError for cyclic input.
    static Poset validate(int p, const std::vector<Relation>& relations);

    int size() const { return p_; }
    const std::vector<Relation>& covers() const { return covers_; }

    /// a strictly below b in the order.
    bool less(Label a, Label b) const
    {
        auto i = static_cast<std::size_t>(a - 1);
        auto j = static_cast<std::size_t>(b - 1);
        return (closure_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }

    /// Every pair (a, b) with a < b in the order, sorted.
    std::vector<Relation> closure_pairs() const;

    /// Labels covered by b (its immediate predecessors), ascending.
    std::vector<Label> lower_covers(Label b) const;

    friend bool operator==(const Poset& x, const Poset& y)
    {
        return x.p_ == y.p_ && x.covers_ == y.covers_;
    }

private:
    Poset() = default;

    int p_ = 0;
    std::size_t words_ = 0;
    std::vector<Relation> covers_;
    std::vector<std::uint64_t> closure_;
};

Poset make_chain(int m);
Poset make_antichain(int p);

/// Chains 1 < ... < m and m+1 < ... < m+n, no cross relations.
Poset make_disjoint_chains(int m, int n);

/// make_disjoint_chains(m, n) plus the relation m+1 < m.
Poset make_pmn(int m, int n);

/// True iff a < b in the order implies a < b as integers.
bool is_naturally_labeled(const Poset& poset);

/// Reads the line format
///     poset <p>
///     cover <a> <b>
/// with '#' comments. Throws ParseError, LabelError or CycleError.
Poset read_poset(std::istream& in);
Poset parse_poset(const std::string& text);

/// Canonical form: header then covers in sorted order.
void write_poset(std::ostream& out, const Poset& poset);
std::string format_poset(const Poset& poset);

} // namespace wpoly

#endif
