#include "coho/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "coho/gf2.hpp"

namespace coho::gb {

Poly normal_form(const PolyRing& r, Poly f, const std::vector<Poly>& gb)
{
    (void)r;
    Poly result;
    while (!f.is_zero()) {
        const Mon& lead = f.lead();
        const Poly* reducer = nullptr;
        for (const Poly& g : gb) {
            if (!g.is_zero() && mon_divides(g.lead(), lead)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            result.t.push_back(lead);
            f.t.erase(f.t.begin());
        } else {
            f = add(f, mul_mon(*reducer, mon_div(lead, reducer->lead())));
        }
    }
    return result;
}

namespace {

struct Pair {
    int i, j;
    Mon lcm;
};

bool pair_less(const Pair& a, const Pair& b)
{
    int c = mon_cmp(a.lcm, b.lcm);
    if (c != 0)
        return c < 0;
    if (a.i != b.i)
        return a.i < b.i;
    return a.j < b.j;
}

std::vector<Poly> autoreduce(const PolyRing& r, std::vector<Poly> basis)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Poly g = basis[i];
            basis[i] = poly_zero();
            Poly red = normal_form(r, g, basis);
            basis[i] = red;
            if (!(red == g))
                changed = true;
        }
        basis.erase(std::remove_if(basis.begin(), basis.end(),
                                   [](const Poly& p) { return p.is_zero(); }),
                    basis.end());
    }
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) { return mon_cmp(a.lead(), b.lead()) < 0; });
    return basis;
}

}  // namespace

std::vector<Poly> groebner_basis(const PolyRing& r, std::vector<Poly> gens)
{
    std::vector<Poly> G;
    std::vector<Pair> pairs;
    auto append = [&](Poly f) {
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (!mon_coprime(G[k].lead(), f.lead()))  // Buchberger's product criterion
                pairs.push_back(Pair{int(k), int(G.size()), mon_lcm(r, G[k].lead(), f.lead())});
        }
        G.push_back(std::move(f));
    };
    for (Poly& g : gens) {
        Poly red = normal_form(r, g, G);
        if (!red.is_zero())
            append(std::move(red));
    }
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        Poly s = add(mul_mon(G[std::size_t(p.i)], mon_div(p.lcm, G[std::size_t(p.i)].lead())),
                     mul_mon(G[std::size_t(p.j)], mon_div(p.lcm, G[std::size_t(p.j)].lead())));
        Poly red = normal_form(r, s, G);
        if (!red.is_zero())
            append(std::move(red));
    }
    return autoreduce(r, std::move(G));
}

/* ---- rank-2 module basis for colon ideals ---- */

namespace {

struct MTerm {
    int comp;
    Mon m;
};

// position over term, component 0 dominant
int mterm_cmp(const MTerm& a, const MTerm& b)
{
    if (a.comp != b.comp)
        return a.comp < b.comp ? 1 : -1;
    return mon_cmp(a.m, b.m);
}

struct MPoly {
    std::vector<MTerm> t;  // descending
    bool is_zero() const { return t.empty(); }
    const MTerm& lead() const { return t.front(); }
};

MPoly madd(const MPoly& a, const MPoly& b)
{
    MPoly out;
    auto i = a.t.begin();
    auto j = b.t.begin();
    while (i != a.t.end() && j != b.t.end()) {
        int c = mterm_cmp(*i, *j);
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

MPoly mmul_mon(const MPoly& a, const Mon& m)
{
    MPoly out;
    out.t.reserve(a.t.size());
    for (const MTerm& x : a.t)
        out.t.push_back(MTerm{x.comp, mon_mul(x.m, m)});
    return out;
}

MPoly mreduce(MPoly f, const std::vector<MPoly>& basis)
{
    MPoly result;
    while (!f.is_zero()) {
        const MTerm& lead = f.lead();
        const MPoly* reducer = nullptr;
        for (const MPoly& g : basis) {
            if (!g.is_zero() && g.lead().comp == lead.comp && mon_divides(g.lead().m, lead.m)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            result.t.push_back(lead);
            f.t.erase(f.t.begin());
        } else {
            f = madd(f, mmul_mon(*reducer, mon_div(lead.m, reducer->lead().m)));
        }
    }
    return result;
}

}  // namespace

std::vector<Poly> colon_ideal(const PolyRing& r, const std::vector<Poly>& gens, const Poly& h)
{
    if (h.is_zero())
        throw Error("colon_ideal: divisor is zero");
    // submodule of R^2 generated by (h,1) and (g,0); elements (0,v) have
    // v*h in (gens), so the component-1 part of the basis generates (Q : h)
    std::vector<MPoly> G;
    std::vector<Pair> pairs;
    auto append = [&](MPoly f) {
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (G[k].lead().comp == f.lead().comp)
                pairs.push_back(Pair{int(k), int(G.size()), mon_lcm(r, G[k].lead().m, f.lead().m)});
        }
        G.push_back(std::move(f));
    };
    {
        MPoly hh;
        for (const Mon& m : h.t)
            hh.t.push_back(MTerm{0, m});
        hh.t.push_back(MTerm{1, mon_one(r)});
        append(std::move(hh));
    }
    for (const Poly& g : gens) {
        if (g.is_zero())
            continue;
        MPoly gg;
        for (const Mon& m : g.t)
            gg.t.push_back(MTerm{0, m});
        MPoly red = mreduce(std::move(gg), G);
        if (!red.is_zero())
            append(std::move(red));
    }
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        const MPoly& a = G[std::size_t(p.i)];
        const MPoly& b = G[std::size_t(p.j)];
        MPoly s = madd(mmul_mon(a, mon_div(p.lcm, a.lead().m)),
                       mmul_mon(b, mon_div(p.lcm, b.lead().m)));
        MPoly red = mreduce(std::move(s), G);
        if (!red.is_zero())
            append(std::move(red));
    }
    std::vector<Poly> out = gens;  // (Q : h) contains Q
    for (const MPoly& g : G) {
        if (g.lead().comp == 1) {
            Poly v;
            for (const MTerm& t : g.t)
                v.t.push_back(t.m);
            out.push_back(std::move(v));
        }
    }
    return groebner_basis(r, std::move(out));
}

bool radical_member(const PolyRing& r, const Poly& f, const std::vector<Poly>& ideal_gens)
{
    if (f.is_zero())
        return true;
    PolyRing ext = r;
    ext.add_var("@rab", 1);
    std::vector<Poly> gens;
    gens.reserve(ideal_gens.size() + 1);
    for (const Poly& g : ideal_gens)
        gens.push_back(migrate(g, ext.nvars()));
    Poly one_minus_yf = add(poly_one(ext), mul(migrate(f, ext.nvars()), poly_var(ext, ext.nvars() - 1)));
    gens.push_back(one_minus_yf);
    auto gb = groebner_basis(ext, std::move(gens));
    for (const Poly& g : gb)
        if (!g.is_zero() && g.lead().is_one())
            return true;
    return false;
}

/* ---- Hilbert series ---- */

namespace {

using ZPoly = std::vector<long long>;

ZPoly zadd(const ZPoly& a, const ZPoly& b)
{
    ZPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b)
{
    ZPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

ZPoly zshift(const ZPoly& a, int d)  // * t^d
{
    if (a.empty())
        return a;
    ZPoly out(a.size() + std::size_t(d), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i + std::size_t(d)] = a[i];
    return out;
}

std::vector<Mon> minimalize(std::vector<Mon> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Mon& a, const Mon& b) { return a.deg < b.deg; });
    std::vector<Mon> out;
    for (const Mon& m : gens) {
        bool divisible = false;
        for (const Mon& k : out)
            if (mon_divides(k, m)) {
                divisible = true;
                break;
            }
        if (!divisible)
            out.push_back(m);
    }
    return out;
}

// numerator of the Hilbert series of R/(monomial ideal)
ZPoly hilbert_num(const PolyRing& r, std::vector<Mon> gens)
{
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return ZPoly{1};
    if (gens.front().deg == 0)
        return ZPoly{};
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            coprime = mon_coprime(gens[i], gens[j]);
    if (coprime) {
        ZPoly out{1};
        for (const Mon& m : gens) {
            ZPoly factor(std::size_t(m.deg) + 1, 0);
            factor[0] = 1;
            factor[std::size_t(m.deg)] = -1;
            ZPoly next(out.size() + factor.size() - 1, 0);
            for (std::size_t i = 0; i < out.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j)
                    next[i + j] += out[i] * factor[j];
            while (!next.empty() && next.back() == 0)
                next.pop_back();
            out = std::move(next);
        }
        return out;
    }
    // pivot on a mixed generator: p = v^e, I -> (I + p, I : p)
    const Mon* mixed = nullptr;
    for (const Mon& m : gens) {
        int support = 0;
        for (auto e : m.e)
            if (e)
                ++support;
        if (support >= 2) {
            mixed = &m;
            break;
        }
    }
    // coprime test failed so two generators share a variable; at most one
    // minimal generator is a pure power of it, hence a mixed one exists
    int v = 0;
    while (!mixed->e[std::size_t(v)])
        ++v;
    Mon p = mon_var(r, v, mixed->e[std::size_t(v)]);

    std::vector<Mon> plus = gens;
    plus.push_back(p);
    std::vector<Mon> colon;
    colon.reserve(gens.size());
    for (const Mon& m : gens) {
        Mon q = m;
        int drop = std::min(q.e[std::size_t(v)], p.e[std::size_t(v)]);
        q.e[std::size_t(v)] = std::uint16_t(q.e[std::size_t(v)] - drop);
        q.deg -= drop * r.degrees[std::size_t(v)];
        colon.push_back(q);
    }
    return zadd(hilbert_num(r, std::move(plus)), zshift(hilbert_num(r, std::move(colon)), p.deg));
}

std::optional<ZPoly> divide_by_factor(const ZPoly& f, int d)
{
    if (f.empty())
        return ZPoly{};
    // q = f / (1 - t^d): q_i = f_i + q_{i-d}; exact iff multiplying back agrees
    ZPoly q(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        q[i] = f[i] + (i >= std::size_t(d) ? q[i - std::size_t(d)] : 0);
    // remainder check: the top d coefficients of q must vanish after
    // reconstructing f = q - t^d q
    ZPoly back = zsub(q, zshift(q, d));
    if (back == f) {
        while (!q.empty() && q.back() == 0)
            q.pop_back();
        return q;
    }
    return std::nullopt;
}

}  // namespace

std::vector<long long> HilbertSeries::expand(int through_degree) const
{
    std::vector<long long> c(std::size_t(through_degree) + 1, 0);
    for (std::size_t i = 0; i < num.size() && i <= std::size_t(through_degree); ++i)
        c[i] = num[i];
    for (int d : den_degrees)
        for (std::size_t i = std::size_t(d); i <= std::size_t(through_degree); ++i)
            c[i] += c[i - std::size_t(d)];
    return c;
}

std::optional<std::vector<long long>> HilbertSeries::as_polynomial() const
{
    ZPoly cur = num;
    for (int d : den_degrees) {
        auto q = divide_by_factor(cur, d);
        if (!q)
            return std::nullopt;
        cur = std::move(*q);
    }
    return cur;
}

HilbertSeries hilbert_series_of(const PolyRing& r, const std::vector<Poly>& gb)
{
    std::vector<Mon> leads;
    leads.reserve(gb.size());
    for (const Poly& g : gb)
        if (!g.is_zero())
            leads.push_back(g.lead());
    HilbertSeries hs;
    hs.num = hilbert_num(r, std::move(leads));
    hs.den_degrees = r.degrees;
    return hs;
}

/* ---- Krull dimension ---- */

namespace {

void krull_rec(const std::vector<std::uint64_t>& supports, std::uint64_t chosen, int next, int nvars,
               int count, int& best)
{
    if (count + (nvars - next) <= best)
        return;
    if (next == nvars) {
        best = std::max(best, count);
        return;
    }
    // try including variable `next`
    std::uint64_t with = chosen | (std::uint64_t(1) << next);
    bool ok = true;
    for (auto s : supports)
        if ((s & ~with) == 0) {
            ok = false;
            break;
        }
    if (ok)
        krull_rec(supports, with, next + 1, nvars, count + 1, best);
    krull_rec(supports, chosen, next + 1, nvars, count, best);
}

}  // namespace

int krull_dim_of(const PolyRing& r, const std::vector<Poly>& gb)
{
    for (const Poly& g : gb)
        if (!g.is_zero() && g.lead().is_one())
            return 0;  // unit ideal: dim of the zero ring
    std::vector<std::uint64_t> supports;
    for (const Poly& g : gb) {
        if (g.is_zero())
            continue;
        std::uint64_t s = 0;
        for (int i = 0; i < r.nvars(); ++i)
            if (g.lead().e[std::size_t(i)])
                s |= std::uint64_t(1) << i;
        supports.push_back(s);
    }
    int best = 0;
    krull_rec(supports, 0, 0, r.nvars(), 0, best);
    return best;
}

/* ---- GradedRing ---- */

GradedRing::GradedRing(PolyRing ring, std::vector<Poly> ideal)
    : ring_(std::move(ring)), ideal_(std::move(ideal))
{
    for (const Poly& p : ideal_)
        if (!is_homogeneous(p))
            throw Error("relation is not homogeneous: " + to_string(ring_, p));
}

const std::vector<Poly>& GradedRing::groebner() const
{
    if (!gb_)
        gb_ = groebner_basis(ring_, ideal_);
    return *gb_;
}

Poly GradedRing::normal_form(const Poly& f) const
{
    return gb::normal_form(ring_, f, groebner());
}

HilbertSeries GradedRing::hilbert_series() const
{
    return hilbert_series_of(ring_, groebner());
}

int GradedRing::krull_dim() const
{
    return krull_dim_of(ring_, groebner());
}

int GradedRing::degree_dim(int n) const
{
    auto c = hilbert_series().expand(n);
    return int(c[std::size_t(n)]);
}

std::vector<Mon> GradedRing::std_monomials(int n) const
{
    std::vector<Mon> out;
    for (const Mon& m : monomials_of_degree(ring_, n)) {
        bool reducible = false;
        for (const Poly& g : groebner())
            if (mon_divides(g.lead(), m)) {
                reducible = true;
                break;
            }
        if (!reducible)
            out.push_back(m);
    }
    return out;
}

AnnTop GradedRing::annihilator_top_degree(const std::vector<Poly>& mod_ideal, const Poly& h) const
{
    if (!is_homogeneous(h))
        throw Error("annihilator_top_degree: element is not homogeneous");
    for (const Poly& p : mod_ideal)
        if (!is_homogeneous(p))
            throw Error("annihilator_top_degree: ideal entry is not homogeneous");

    std::vector<Poly> q = ideal_;
    q.insert(q.end(), mod_ideal.begin(), mod_ideal.end());
    auto gbq = groebner_basis(ring_, q);
    HilbertSeries hq = hilbert_series_of(ring_, gbq);

    Poly hnf = gb::normal_form(ring_, h, gbq);
    AnnTop out;
    if (hnf.is_zero()) {
        // annihilator is all of A/J
        auto poly = hq.as_polynomial();
        if (!poly) {
            out.bounded = false;
            return out;
        }
        out.bounded = true;
        out.top = poly->empty() ? ExtInt::neg_inf() : ExtInt(long(poly->size()) - 1);
        return out;
    }
    auto colon = colon_ideal(ring_, gbq, hnf);
    HilbertSeries hc = hilbert_series_of(ring_, colon);
    HilbertSeries diff{zsub(hq.num, hc.num), hq.den_degrees};
    auto poly = diff.as_polynomial();
    if (!poly) {
        out.bounded = false;
        return out;
    }
    out.bounded = true;
    out.top = poly->empty() ? ExtInt::neg_inf() : ExtInt(long(poly->size()) - 1);
    return out;
}

bool GradedRing::finite_over_degree_d(int d) const
{
    if (d < 1)
        return krull_dim() == 0;
    std::vector<Poly> extra;
    for (const Mon& m : monomials_of_degree(ring_, d))
        extra.push_back(poly_mon(m));
    return quotient(extra).krull_dim() == 0;
}

GradedRing GradedRing::quotient(const std::vector<Poly>& extra) const
{
    std::vector<Poly> id = ideal_;
    id.insert(id.end(), extra.begin(), extra.end());
    return GradedRing(ring_, std::move(id));
}

bool GradedRing::is_nilpotent(const Poly& f) const
{
    return radical_member(ring_, f, ideal_);
}

std::vector<Poly> GradedRing::nilpotent_subspace(int d, int degree_cap) const
{
    std::vector<Mon> base = std_monomials(d);
    if (base.empty())
        return {};
    std::size_t n = base.size();
    // coordinates of each basis monomial under iterated squaring
    std::vector<Poly> image(n);
    for (std::size_t i = 0; i < n; ++i)
        image[i] = poly_mon(base[i]);
    int deg = d;
    while (2 * deg <= degree_cap) {
        for (auto& p : image)
            p = normal_form(square(p));
        deg *= 2;
        bool all_zero = true;
        for (const auto& p : image)
            if (!p.is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero)
            break;
    }
    std::map<Mon, std::size_t> index;
    for (const auto& p : image)
        for (const Mon& t : p.t)
            index.emplace(t, index.size());
    gf2::BitMatrix m(n, std::max<std::size_t>(index.size(), 1));
    for (std::size_t i = 0; i < n; ++i)
        for (const Mon& t : image[i].t)
            m.set(i, index.at(t));
    gf2::BitMatrix ker = gf2::kernel_basis(m.transposed());
    std::vector<Poly> out;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
        Poly p;
        for (std::size_t i = 0; i < n; ++i)
            if (ker.get(k, i))
                p = add(p, poly_mon(base[i]));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace coho::gb
