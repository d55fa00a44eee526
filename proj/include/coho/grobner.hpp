#pragma once

#include <optional>
#include <vector>

#include "coho/poly.hpp"

// Groebner machinery for graded quotients of GF(2) polynomial rings: reduced
// bases, normal forms, Hilbert series of quotients, Krull dimension, colon
// ideals (via a rank-2 module basis with position-over-term order) and the
// annihilator-degree computations every filter-regularity question runs on.

namespace coho::gb {

std::vector<Poly> groebner_basis(const PolyRing& r, std::vector<Poly> gens);
Poly normal_form(const PolyRing& r, Poly f, const std::vector<Poly>& gb);

// Generators (reduced basis) of the colon ideal (Q : h), Q given by `gens`.
std::vector<Poly> colon_ideal(const PolyRing& r, const std::vector<Poly>& gens, const Poly& h);

// f in rad(ideal)? Rabinowitsch test with one extra variable.
bool radical_member(const PolyRing& r, const Poly& f, const std::vector<Poly>& ideal_gens);

struct HilbertSeries {
    std::vector<long long> num;    // numerator in t
    std::vector<int> den_degrees;  // denominator factors (1 - t^d)

    std::vector<long long> expand(int through_degree) const;
    // Numerator / denominator as a plain polynomial, or nullopt when the
    // series has a pole (the quotient is infinite dimensional).
    std::optional<std::vector<long long>> as_polynomial() const;
};

// Hilbert series of R/(leading ideal of gb) = R/ideal.
HilbertSeries hilbert_series_of(const PolyRing& r, const std::vector<Poly>& gb);

int krull_dim_of(const PolyRing& r, const std::vector<Poly>& gb);

struct AnnTop {
    bool bounded = false;
    ExtInt top;  // degree of the top nonzero piece; -inf when the annihilator vanishes
};

// Connected graded quotient ring A = F2[vars]/ideal. Immutable once the
// basis is computed; the cohomology presentation exposes itself as one of
// these and paramfind works through this interface.
class GradedRing {
public:
    GradedRing(PolyRing ring, std::vector<Poly> ideal);

    const PolyRing& ring() const { return ring_; }
    const std::vector<Poly>& ideal() const { return ideal_; }
    const std::vector<Poly>& groebner() const;

    Poly normal_form(const Poly& f) const;
    HilbertSeries hilbert_series() const;
    int krull_dim() const;
    int degree_dim(int n) const;                 // dim_F2 A_n
    std::vector<Mon> std_monomials(int n) const; // descending

    // Annihilator of h in A/(mod_ideal): bounded iff finite dimensional,
    // top = its top nonzero degree. h = 0 (or h in the ideal) means the
    // annihilator is the whole quotient.
    AnnTop annihilator_top_degree(const std::vector<Poly>& mod_ideal, const Poly& h) const;

    // True iff A is a finitely generated module over the subalgebra
    // generated by A_d (degreewise Noether-normalization certificate).
    bool finite_over_degree_d(int d) const;

    GradedRing quotient(const std::vector<Poly>& extra) const;

    bool is_nilpotent(const Poly& f) const;  // exact, via radical membership

    // Basis of a subspace of certified nilpotent elements of degree d
    // (kernel of the iterated squaring map, watched up to degree_cap).
    std::vector<Poly> nilpotent_subspace(int d, int degree_cap) const;

private:
    PolyRing ring_;
    std::vector<Poly> ideal_;
    mutable std::optional<std::vector<Poly>> gb_;
};

}  // namespace coho::gb
