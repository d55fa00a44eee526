#include "coho/poly.hpp"

#include <algorithm>
#include <sstream>

namespace coho::gb {

int PolyRing::var_index(const std::string& n) const
{
    for (int i = 0; i < nvars(); ++i)
        if (names[std::size_t(i)] == n)
            return i;
    return -1;
}

void PolyRing::add_var(const std::string& n, int degree)
{
    if (degree < 1)
        throw Error("variable degree must be positive: " + n);
    if (var_index(n) >= 0)
        throw Error("duplicate variable name: " + n);
    names.push_back(n);
    degrees.push_back(degree);
}

int mon_cmp(const Mon& a, const Mon& b)
{
    if (a.deg != b.deg)
        return a.deg < b.deg ? -1 : 1;
    // graded reverse lexicographic: the last differing exponent decides,
    // smaller exponent there = larger monomial
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

bool mon_divides(const Mon& a, const Mon& b)
{
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

Mon mon_one(const PolyRing& r)
{
    Mon m;
    m.e.assign(std::size_t(r.nvars()), 0);
    return m;
}

Mon mon_var(const PolyRing& r, int i, int exp)
{
    Mon m = mon_one(r);
    m.e[std::size_t(i)] = std::uint16_t(exp);
    m.deg = r.degrees[std::size_t(i)] * exp;
    return m;
}

Mon mon_mul(const Mon& a, const Mon& b)
{
    Mon m = a;
    for (std::size_t i = 0; i < m.e.size(); ++i)
        m.e[i] = std::uint16_t(m.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
}

Mon mon_div(const Mon& b, const Mon& a)
{
    Mon m = b;
    for (std::size_t i = 0; i < m.e.size(); ++i)
        m.e[i] = std::uint16_t(m.e[i] - a.e[i]);
    m.deg = b.deg - a.deg;
    return m;
}

Mon mon_lcm(const PolyRing& r, const Mon& a, const Mon& b)
{
    Mon m = a;
    m.deg = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        m.e[i] = std::max(a.e[i], b.e[i]);
        m.deg += r.degrees[i] * m.e[i];
    }
    return m;
}

bool mon_coprime(const Mon& a, const Mon& b)
{
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i])
            return false;
    return true;
}

Poly poly_zero() { return Poly{}; }

Poly poly_one(const PolyRing& r) { return Poly{{mon_one(r)}}; }

Poly poly_var(const PolyRing& r, int i) { return Poly{{mon_var(r, i)}}; }

Poly poly_mon(const Mon& m) { return Poly{{m}}; }

Poly add(const Poly& a, const Poly& b)
{
    Poly out;
    out.t.reserve(a.t.size() + b.t.size());
    auto i = a.t.begin();
    auto j = b.t.begin();
    while (i != a.t.end() && j != b.t.end()) {
        int c = mon_cmp(*i, *j);
        if (c > 0)
            out.t.push_back(*i++);
        else if (c < 0)
            out.t.push_back(*j++);
        else {
            ++i;
            ++j;
        }
    }
    out.t.insert(out.t.end(), i, a.t.end());
    out.t.insert(out.t.end(), j, b.t.end());
    return out;
}

Poly mul_mon(const Poly& a, const Mon& m)
{
    Poly out;
    out.t.reserve(a.t.size());
    for (const Mon& x : a.t)
        out.t.push_back(mon_mul(x, m));
    return out;
}

Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const Mon& m : b.t)
        out = add(out, mul_mon(a, m));
    return out;
}

Poly square(const Poly& a)
{
    Poly out;
    out.t.reserve(a.t.size());
    for (const Mon& m : a.t) {
        Mon s = m;
        for (auto& e : s.e)
            e = std::uint16_t(2 * e);
        s.deg = 2 * m.deg;
        out.t.push_back(s);
    }
    return out;
}

Poly power(const PolyRing& r, const Poly& a, int n)
{
    Poly result = poly_one(r);
    Poly base = a;
    while (n) {
        if (n & 1)
            result = mul(result, base);
        n >>= 1;
        if (n)
            base = mul(base, base);
    }
    return result;
}

bool is_homogeneous(const Poly& a)
{
    for (const Mon& m : a.t)
        if (m.deg != a.t.front().deg)
            return false;
    return true;
}

Mon migrate(const Mon& m, int new_nvars)
{
    Mon out = m;
    out.e.resize(std::size_t(new_nvars), 0);
    return out;
}

Poly migrate(const Poly& p, int new_nvars)
{
    Poly out;
    out.t.reserve(p.t.size());
    for (const Mon& m : p.t)
        out.t.push_back(migrate(m, new_nvars));
    return out;
}

Poly parse_poly(const PolyRing& r, const std::string& s)
{
    Poly out;
    std::string term;
    std::stringstream ss(s);
    bool any = false;
    while (std::getline(ss, term, '+')) {
        auto b = term.find_first_not_of(" \t");
        auto e = term.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError("empty term in polynomial '" + s + "'");
        term = term.substr(b, e - b + 1);
        any = true;
        if (term == "0")
            continue;
        Mon m = mon_one(r);
        std::string factor;
        std::stringstream ts(term);
        while (std::getline(ts, factor, '*')) {
            auto fb = factor.find_first_not_of(" \t");
            auto fe = factor.find_last_not_of(" \t");
            if (fb == std::string::npos)
                throw ParseError("empty factor in '" + term + "'");
            factor = factor.substr(fb, fe - fb + 1);
            if (factor == "1")
                continue;
            std::size_t caret = factor.find('^');
            std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
            int exp = 1;
            if (caret != std::string::npos)
                exp = std::stoi(factor.substr(caret + 1));
            int vi = r.var_index(name);
            if (vi < 0)
                throw ParseError("unknown variable '" + name + "'");
            if (exp < 0)
                throw ParseError("negative exponent in '" + factor + "'");
            m.e[std::size_t(vi)] = std::uint16_t(m.e[std::size_t(vi)] + exp);
            m.deg += r.degrees[std::size_t(vi)] * exp;
        }
        out = add(out, poly_mon(m));
    }
    if (!any)
        throw ParseError("empty polynomial string");
    return out;
}

std::string to_string(const PolyRing& r, const Mon& m)
{
    std::string s;
    for (int i = 0; i < r.nvars(); ++i) {
        if (!m.e[std::size_t(i)])
            continue;
        if (!s.empty())
            s += "*";
        s += r.names[std::size_t(i)];
        if (m.e[std::size_t(i)] > 1)
            s += "^" + std::to_string(m.e[std::size_t(i)]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const PolyRing& r, const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (const Mon& m : p.t) {
        if (!s.empty())
            s += " + ";
        s += to_string(r, m);
    }
    return s;
}

namespace {

void enumerate_rec(const PolyRing& r, int var, int remaining, Mon& cur, std::vector<Mon>& out)
{
    if (var == r.nvars()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    int d = r.degrees[std::size_t(var)];
    for (int k = 0; k * d <= remaining; ++k) {
        cur.e[std::size_t(var)] = std::uint16_t(k);
        enumerate_rec(r, var + 1, remaining - k * d, cur, out);
    }
    cur.e[std::size_t(var)] = 0;
}

}  // namespace

std::vector<Mon> monomials_of_degree(const PolyRing& r, int d)
{
    std::vector<Mon> out;
    Mon cur = mon_one(r);
    enumerate_rec(r, 0, d, cur, out);
    for (Mon& m : out)
        m.deg = d;
    std::sort(out.begin(), out.end(), [](const Mon& a, const Mon& b) { return mon_cmp(a, b) > 0; });
    return out;
}

}  // namespace coho::gb
