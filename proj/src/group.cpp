#include "coho/group.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace coho::grp {

namespace {

// word token: product of g<i> or g<i>^1 factors separated by '*', or "1".
std::uint32_t parse_word(const std::string& s, int ngens, int min_index, const std::string& ctx)
{
    std::uint32_t mask = 0;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, '*')) {
        // trim
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError("empty factor in word: " + ctx);
        tok = tok.substr(b, e - b + 1);
        if (tok == "1")
            continue;
        if (tok.size() < 2 || tok[0] != 'g')
            throw ParseError("bad factor '" + tok + "' in " + ctx);
        std::size_t caret = tok.find('^');
        int exp = 1;
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (caret != std::string::npos)
            exp = std::stoi(tok.substr(caret + 1));
        int i = std::stoi(idx);
        if (i < 1 || i > ngens)
            throw ParseError("generator index out of range in " + ctx);
        if (exp != 0 && exp != 1)
            throw ParseError("exponent must be 0 or 1 in " + ctx);
        if (exp == 1) {
            if (i <= min_index)
                throw ParseError("word in " + ctx + " must use generators above g" +
                                 std::to_string(min_index));
            mask |= 1u << (i - 1);
        }
    }
    return mask;
}

}  // namespace

PcPresentation parse_pc_presentation(std::istream& in, const std::string& name)
{
    PcPresentation pc;
    pc.source_name = name;
    std::string line;
    bool have_prime = false, have_ngens = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::stringstream ss(line);
        std::string key;
        if (!(ss >> key))
            continue;
        std::string ctx = name + ":" + std::to_string(lineno);
        if (key == "prime") {
            int p;
            if (!(ss >> p) || p != 2)
                throw ParseError("only prime 2 is supported (" + ctx + ")");
            have_prime = true;
        } else if (key == "ngens") {
            if (!(ss >> pc.ngens) || pc.ngens < 0 || pc.ngens > 20)
                throw ParseError("bad ngens (" + ctx + ")");
            pc.pow_rel.assign(pc.ngens, 0);
            pc.comm_rel.assign(pc.ngens, std::vector<std::uint32_t>(pc.ngens, 0));
            have_ngens = true;
        } else if (key == "pow") {
            if (!have_ngens)
                throw ParseError("pow before ngens (" + ctx + ")");
            int i;
            std::string eq, rest;
            if (!(ss >> i >> eq) || eq != "=")
                throw ParseError("expected 'pow i = word' (" + ctx + ")");
            std::getline(ss, rest);
            if (i < 1 || i > pc.ngens)
                throw ParseError("pow index out of range (" + ctx + ")");
            pc.pow_rel[i - 1] = parse_word(rest, pc.ngens, i, ctx);
        } else if (key == "comm") {
            if (!have_ngens)
                throw ParseError("comm before ngens (" + ctx + ")");
            int j, i;
            std::string eq, rest;
            if (!(ss >> j >> i >> eq) || eq != "=")
                throw ParseError("expected 'comm j i = word' (" + ctx + ")");
            std::getline(ss, rest);
            if (i < 1 || j <= i || j > pc.ngens)
                throw ParseError("comm indices need j > i (" + ctx + ")");
            pc.comm_rel[j - 1][i - 1] = parse_word(rest, pc.ngens, j, ctx);
        } else {
            throw ParseError("unknown directive '" + key + "' (" + ctx + ")");
        }
    }
    if (!have_prime || !have_ngens)
        throw ParseError("group file " + name + " must declare prime and ngens");
    return pc;
}

namespace {

// Collection: right-multiplication of a normal word by a single generator.
// Memoized per (element, generator); recursion depth is bounded for weighted
// presentations, and a step counter catches runaway input.
struct Collector {
    const PcPresentation& pc;
    std::vector<std::vector<int>> memo;  // [elt][gen] -> elt or -1
    long steps = 0;

    explicit Collector(const PcPresentation& p)
        : pc(p), memo(std::size_t(1) << p.ngens, std::vector<int>(p.ngens, -1))
    {
    }

    int rmul_word(int e, std::uint32_t word)
    {
        for (int i = 0; i < pc.ngens; ++i)
            if (word & (1u << i))
                e = rmul(e, i);
        return e;
    }

    int rmul(int e, int i)
    {
        int& slot = memo[std::size_t(e)][std::size_t(i)];
        if (slot >= 0)
            return slot;
        if (++steps > 40'000'000)
            throw InconsistentPresentation("collection does not terminate: " + pc.source_name);
        int result;
        std::uint32_t high = std::uint32_t(e) >> (i + 1);
        if (high == 0) {
            if (e & (1 << i))
                result = rmul_word(e & ~(1 << i), pc.pow_rel[i]);
            else
                result = e | (1 << i);
        } else {
            int k = std::bit_width(std::uint32_t(e)) - 1;  // highest generator present
            int stripped = e & ~(1 << k);
            int r = rmul(stripped, i);
            r = rmul(r, k);
            result = rmul_word(r, pc.comm_rel[k][i]);
        }
        slot = result;
        return result;
    }
};

std::string word_name(int e, int ngens)
{
    if (e == 0)
        return "1";
    std::string s;
    for (int i = 0; i < ngens; ++i) {
        if (e & (1 << i)) {
            if (!s.empty())
                s += "*";
            s += "g" + std::to_string(i + 1);
        }
    }
    return s;
}

}  // namespace

Group Group::from_presentation(const PcPresentation& pc)
{
    Group g;
    g.name_ = pc.source_name;
    g.order_ = 1 << pc.ngens;
    Collector coll(pc);
    g.table_.assign(g.order_, std::vector<int>(g.order_, 0));
    for (int a = 0; a < g.order_; ++a) {
        for (int b = 0; b < g.order_; ++b) {
            int e = a;
            for (int i = 0; i < pc.ngens; ++i)
                if (b & (1 << i))
                    e = coll.rmul(e, i);
            g.table_[a][b] = e;
        }
    }
    g.names_.resize(g.order_);
    for (int e = 0; e < g.order_; ++e)
        g.names_[e] = word_name(e, pc.ngens);
    g.finish(g.order_ <= 64);
    return g;
}

Group Group::from_table(std::vector<std::vector<int>> table, std::string name)
{
    Group g;
    g.name_ = std::move(name);
    g.order_ = int(table.size());
    g.table_ = std::move(table);
    g.names_.resize(g.order_);
    for (int e = 0; e < g.order_; ++e)
        g.names_[e] = "e" + std::to_string(e);
    g.finish(g.order_ <= 64);
    return g;
}

void Group::finish(bool exhaustive_assoc)
{
    int n = order_;
    // Latin square rows/columns, identity at 0.
    for (int a = 0; a < n; ++a) {
        if (table_[0][a] != a || table_[a][0] != a)
            throw InconsistentPresentation(name_ + ": identity is not neutral");
        std::vector<bool> seen_r(n, false), seen_c(n, false);
        for (int b = 0; b < n; ++b) {
            int r = table_[a][b], c = table_[b][a];
            if (r < 0 || r >= n || seen_r[std::size_t(r)] || seen_c[std::size_t(c)])
                throw InconsistentPresentation(name_ + ": multiplication table is not a Latin square");
            seen_r[std::size_t(r)] = seen_c[std::size_t(c)] = true;
        }
    }
    if (exhaustive_assoc) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw InconsistentPresentation(name_ + ": associativity fails");
    } else {
        // spanning spot check: all pairs against a fixed third element set
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 1; c < n; c <<= 1)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw InconsistentPresentation(name_ + ": associativity fails");
    }
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == 0)
                inv_[a] = b;
}

bool Group::is_abelian() const
{
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (table_[a][b] != table_[b][a])
                return false;
    return true;
}

std::vector<int> Group::centre() const
{
    std::vector<int> z;
    for (int a = 0; a < order_; ++a) {
        bool central = true;
        for (int b = 0; b < order_ && central; ++b)
            central = table_[a][b] == table_[b][a];
        if (central)
            z.push_back(a);
    }
    return z;
}

namespace {

int rank_of_size(std::size_t sz)
{
    int r = 0;
    while ((std::size_t(1) << r) < sz)
        ++r;
    return r;
}

}  // namespace

ElabSubgroup Group::omega1_centre() const
{
    ElabSubgroup c;
    for (int a : centre())
        if (table_[a][a] == 0)
            c.element_indices.push_back(a);
    std::sort(c.element_indices.begin(), c.element_indices.end());
    c.rank = rank_of_size(c.element_indices.size());
    c.contains_C = true;
    return c;
}

std::vector<ElabSubgroup> Group::elab_above_C() const
{
    ElabSubgroup C = omega1_centre();
    std::set<std::vector<int>> seen;
    std::vector<ElabSubgroup> out;
    std::vector<std::vector<int>> layer{C.element_indices};
    seen.insert(C.element_indices);

    std::vector<int> involutions;
    for (int a = 1; a < order_; ++a)
        if (table_[a][a] == 0)
            involutions.push_back(a);

    while (!layer.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& S : layer) {
            ElabSubgroup v;
            v.element_indices = S;
            v.rank = rank_of_size(S.size());
            v.contains_C = true;
            out.push_back(v);
            for (int t : involutions) {
                if (std::binary_search(S.begin(), S.end(), t))
                    continue;
                bool commutes = true;
                for (int s : S)
                    if (table_[s][t] != table_[t][s]) {
                        commutes = false;
                        break;
                    }
                if (!commutes)
                    continue;
                std::vector<int> bigger = S;
                for (int s : S)
                    bigger.push_back(table_[s][t]);
                std::sort(bigger.begin(), bigger.end());
                if (seen.insert(bigger).second)
                    next.push_back(std::move(bigger));
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const ElabSubgroup& a, const ElabSubgroup& b) {
        if (a.rank != b.rank)
            return a.rank < b.rank;
        return a.element_indices < b.element_indices;
    });
    return out;
}

std::vector<ElabSubgroup> Group::maximal_elabs() const
{
    auto all = elab_above_C();
    std::vector<ElabSubgroup> out;
    for (const auto& v : all) {
        bool maximal = true;
        for (const auto& w : all) {
            if (w.element_indices.size() <= v.element_indices.size())
                continue;
            if (std::includes(w.element_indices.begin(), w.element_indices.end(),
                              v.element_indices.begin(), v.element_indices.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(v);
    }
    return out;
}

int Group::prank() const
{
    int r = 0;
    for (const auto& v : elab_above_C())
        r = std::max(r, v.rank);
    return r;
}

int Group::delta0() const
{
    return prank() - omega1_centre().rank;
}

Group Group::subgroup(const ElabSubgroup& v) const
{
    const auto& el = v.element_indices;
    std::map<int, int> idx;
    for (std::size_t i = 0; i < el.size(); ++i)
        idx[el[i]] = int(i);
    std::vector<std::vector<int>> t(el.size(), std::vector<int>(el.size()));
    for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b) {
            auto it = idx.find(table_[el[a]][el[b]]);
            if (it == idx.end())
                throw Error("subgroup is not closed under multiplication");
            t[a][b] = it->second;
        }
    return Group::from_table(std::move(t), name_ + "|V" + std::to_string(v.rank));
}

Group load_group(std::istream& in, const std::string& name)
{
    return Group::from_presentation(parse_pc_presentation(in, name));
}

Group load_group_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open group file " + path);
    return load_group(in, path);
}

int prank_exhaustive(const Group& g)
{
    // closure over commuting involutions, starting from every involution
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> stack;
    std::vector<int> inv;
    for (int a = 1; a < g.order(); ++a)
        if (g.mul(a, a) == 0)
            inv.push_back(a);
    for (int a : inv) {
        std::vector<int> s{0, a};
        if (seen.insert(s).second)
            stack.push_back(s);
    }
    int best = g.order() == 1 ? 0 : (inv.empty() ? 0 : 1);
    while (!stack.empty()) {
        std::vector<int> S = stack.back();
        stack.pop_back();
        best = std::max(best, rank_of_size(S.size()));
        for (int t : inv) {
            if (std::binary_search(S.begin(), S.end(), t))
                continue;
            bool ok = true;
            for (int s : S)
                if (g.mul(s, t) != g.mul(t, s)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            std::vector<int> bigger = S;
            for (int s : S)
                bigger.push_back(g.mul(s, t));
            std::sort(bigger.begin(), bigger.end());
            if (seen.insert(bigger).second)
                stack.push_back(std::move(bigger));
        }
    }
    return best;
}

}  // namespace coho::grp
