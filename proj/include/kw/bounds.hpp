#ifndef KW_BOUNDS_HPP
#define KW_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "kw/constructions.hpp"

namespace kw {

// A (lower, upper) estimate with the formula that produced each side.
// Integer forms are carried alongside wherever a ceiling is taken, computed
// with exact integer arithmetic rather than floating point.
struct BoundReport {
    double lower = 0.0;
    double upper = 0.0;
    std::string lower_source;
    std::string upper_source;
    std::optional<long long> lower_ceiling;
    std::optional<long long> upper_improved; // a sharper value quoted for special cases
    std::string notes;
};

// Least k with n <= (k-1)(k-2)/2; the exact complexity of the free group.
long long kw_free(long long n);

// Chromatic numbers of surfaces, including the three exceptional values.
long long chromatic_surface(long long genus, bool orientable);

// Exact complexity of surface groups: the chromatic number except for the
// orientable genus-2 group, whose value is 9.
long long kw_surface(long long genus, bool orientable);

BoundReport raag_bounds(long long n, long long m);
BoundReport racg_bounds(long long n, long long m);
BoundReport free_abelian_bounds(long long n);
BoundReport z2_sum_bounds(long long n);
BoundReport cyclic_bounds(long long m);
BoundReport finite_abelian_bounds(const std::vector<long long>& invariant_factors);

// Upper bounds for large-type Artin / Coxeter groups; the product of the
// relation orders is accumulated in log domain and never materialized.
double artin_large_upper(const CoxeterMatrix& M);
double coxeter_large_upper(const CoxeterMatrix& M);
BoundReport artin_large_bounds(const CoxeterMatrix& M);
BoundReport coxeter_large_bounds(const CoxeterMatrix& M);

// log2 of the group-count bound: 3 T^3 log2 T (the full value overflows).
double group_count_log2(double T);
// The intermediate exponent T^3 log2(T^3/6) from the counting argument.
double group_count_log2_intermediate(double T);

// Systolic area window from the complexity; the linear lower bound needs
// zero free index, otherwise only the universal pi/16 floor applies.
BoundReport systolic_bounds(long long kw, bool zero_free_index);

double entropy_upper(long long kw);
double entropy_upper_sharper(long long kw); // log(kw-1) variant from the growth estimate
double free_entropy(long long n);

BoundReport combine_product(const BoundReport& b1, const BoundReport& b2);
BoundReport combine_free_product(const BoundReport& b1, const BoundReport& b2, bool g1_free,
                                 bool g2_free);
BoundReport subgroup_bound(const BoundReport& b, long long index);

} // namespace kw

#endif
