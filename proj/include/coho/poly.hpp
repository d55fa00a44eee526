#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coho/base.hpp"

// Commutative polynomial arithmetic over GF(2) with weighted variables.
// Monomials carry their weighted degree; polynomials are XOR-sets of
// monomials kept sorted descending in the global order (weighted degrevlex,
// ties broken by the fixed variable order = generator discovery order).

namespace coho::gb {

struct PolyRing {
    std::vector<std::string> names;
    std::vector<int> degrees;

    int nvars() const { return int(names.size()); }
    int var_index(const std::string& n) const;
    void add_var(const std::string& n, int degree);
};

struct Mon {
    std::vector<std::uint16_t> e;
    int deg = 0;  // weighted degree

    bool is_one() const { return deg == 0; }
    bool operator==(const Mon& o) const { return e == o.e; }
    bool operator<(const Mon& o) const { return e < o.e; }  // container key only
};

// weighted degrevlex; >0 when a comes later (is larger), 0 when equal
int mon_cmp(const Mon& a, const Mon& b);
bool mon_divides(const Mon& a, const Mon& b);  // a | b
Mon mon_one(const PolyRing& r);
Mon mon_var(const PolyRing& r, int i, int exp = 1);
Mon mon_mul(const Mon& a, const Mon& b);
Mon mon_div(const Mon& b, const Mon& a);  // b / a, assumes divisibility
Mon mon_lcm(const PolyRing& r, const Mon& a, const Mon& b);
bool mon_coprime(const Mon& a, const Mon& b);

struct Poly {
    std::vector<Mon> t;  // descending

    bool is_zero() const { return t.empty(); }
    const Mon& lead() const { return t.front(); }
    int degree() const { return t.empty() ? -1 : t.front().deg; }
    bool operator==(const Poly& o) const { return t == o.t; }
    bool operator<(const Poly& o) const { return t < o.t; }
};

Poly poly_zero();
Poly poly_one(const PolyRing& r);
Poly poly_var(const PolyRing& r, int i);
Poly poly_mon(const Mon& m);
Poly add(const Poly& a, const Poly& b);
Poly mul_mon(const Poly& a, const Mon& m);
Poly mul(const Poly& a, const Poly& b);
Poly square(const Poly& a);               // Frobenius: double every exponent
Poly power(const PolyRing& r, const Poly& a, int n);
bool is_homogeneous(const Poly& a);

// Pads exponent vectors after variables were appended to the ring.
Mon migrate(const Mon& m, int new_nvars);
Poly migrate(const Poly& p, int new_nvars);

Poly parse_poly(const PolyRing& r, const std::string& s);
std::string to_string(const PolyRing& r, const Poly& p);
std::string to_string(const PolyRing& r, const Mon& m);

// All monomials of exact weighted degree d, sorted descending.
std::vector<Mon> monomials_of_degree(const PolyRing& r, int d);

}  // namespace coho::gb
