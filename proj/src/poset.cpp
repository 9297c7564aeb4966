#include "wpoly/poset.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace wpoly {

namespace {

void check_size(int p)
{
    if (p < 1)
        throw LabelError("poset size must be positive, got " + std::to_string(p));
}

} // namespace

Poset Poset::validate(int p, const std::vector<Relation>& relations)
{
    check_size(p);
    const auto n = static_cast<std::size_t>(p);
    for (const auto& [a, b] : relations) {
        if (a < 1 || a > p || b < 1 || b > p)
            throw LabelError("relation (" + std::to_string(a) + "," + std::to_string(b)
                             + ") has a label outside [1," + std::to_string(p) + "]");
        if (a == b)
            throw CycleError("relation (" + std::to_string(a) + "," + std::to_string(a) + ") is reflexive");
    }

    Poset poset;
    poset.p_ = p;
    poset.words_ = (n + 63) / 64;
    const std::size_t words = poset.words_;
    auto& closure = poset.closure_;
    closure.assign(n * words, 0);
    auto set_bit = [&](std::size_t i, std::size_t j) { closure[i * words + j / 64] |= std::uint64_t{1} << (j % 64); };
    auto get_bit = [&](std::size_t i, std::size_t j) { return (closure[i * words + j / 64] >> (j % 64)) & 1u; };

    for (const auto& [a, b] : relations)
        set_bit(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));

    // Warshall on bit rows: if i < k then row(i) |= row(k).
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (get_bit(i, k))
                for (std::size_t w = 0; w < words; ++w)
                    closure[i * words + w] |= closure[k * words + w];

    for (std::size_t i = 0; i < n; ++i)
        if (get_bit(i, i))
            throw CycleError("relations contain a cycle through label " + std::to_string(i + 1));

    // (a,b) is a cover iff a < b and no c with a < c < b.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!get_bit(i, j))
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (get_bit(i, k) && get_bit(k, j))
                    cover = false;
            if (cover)
                poset.covers_.emplace_back(static_cast<Label>(i + 1), static_cast<Label>(j + 1));
        }
    }
    return poset;
}

std::vector<Relation> Poset::closure_pairs() const
{
    std::vector<Relation> out;
    for (Label a = 1; a <= p_; ++a)
        for (Label b = 1; b <= p_; ++b)
            if (less(a, b))
                out.emplace_back(a, b);
    return out;
}

std::vector<Label> Poset::lower_covers(Label b) const
{
    std::vector<Label> out;
    for (const auto& [x, y] : covers_)
        if (y == b)
            out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

Poset make_chain(int m)
{
    check_size(m);
    std::vector<Relation> rel;
    for (int i = 1; i < m; ++i)
        rel.emplace_back(i, i + 1);
    return Poset::validate(m, rel);
}

Poset make_antichain(int p) { return Poset::validate(p, {}); }

namespace {

std::vector<Relation> disjoint_chain_relations(int m, int n)
{
    check_size(m);
    check_size(n);
    std::vector<Relation> rel;
    for (int i = 1; i < m; ++i)
        rel.emplace_back(i, i + 1);
    for (int j = 1; j < n; ++j)
        rel.emplace_back(m + j, m + j + 1);
    return rel;
}

} // namespace

Poset make_disjoint_chains(int m, int n) { return Poset::validate(m + n, disjoint_chain_relations(m, n)); }

Poset make_pmn(int m, int n)
{
    auto rel = disjoint_chain_relations(m, n);
    rel.emplace_back(m + 1, m);
    return Poset::validate(m + n, rel);
}

bool is_naturally_labeled(const Poset& poset)
{
    for (Label a = 1; a <= poset.size(); ++a)
        for (Label b = 1; b < a; ++b)
            if (poset.less(a, b))
                return false;
    return true;
}

Poset read_poset(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int p = 0;
    std::vector<Relation> relations;
    auto fail = [&](const std::string& what) { throw ParseError("line " + std::to_string(lineno) + ": " + what); };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword))
            continue;
        if (keyword == "poset") {
            if (p != 0)
                fail("duplicate 'poset' header");
            if (!(ls >> p) || p < 1)
                fail("expected 'poset <p>' with p >= 1");
        } else if (keyword == "cover") {
            if (p == 0)
                fail("'cover' before 'poset' header");
            Label a = 0;
            Label b = 0;
            if (!(ls >> a >> b))
                fail("expected 'cover <a> <b>'");
            relations.emplace_back(a, b);
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
        std::string extra;
        if (ls >> extra)
            fail("trailing text '" + extra + "'");
    }
    if (p == 0)
        throw ParseError("missing 'poset <p>' header");
    return Poset::validate(p, relations);
}

Poset parse_poset(const std::string& text)
{
    std::istringstream in(text);
    return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& poset)
{
    out << "poset " << poset.size() << "\n";
    for (const auto& [a, b] : poset.covers())
        out << "cover " << a << " " << b << "\n";
}

std::string format_poset(const Poset& poset)
{
    std::ostringstream os;
    write_poset(os, poset);
    return os.str();
}

} // namespace wpoly
