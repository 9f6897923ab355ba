#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gammaring/abelian.hpp"
#include "gammaring/gamma_ring.hpp"

namespace gammaring {

/// An associative ring on a finite abelian group, given by the products of
/// its additive generators.
struct RingSpec {
    std::string name;
    FinAbGroup group;
    std::vector<std::vector<GroupElement>> mul; // mul[i][k] = e_i e_k
    std::optional<GroupElement> unit;
};

/// Checks well-definedness, generator associativity and the unit; throws
/// GammaError on failure.
RingSpec make_ring(std::string name, FinAbGroup group, std::vector<std::vector<GroupElement>> mul,
                   std::optional<GroupElement> unit = std::nullopt);

GroupElement ring_multiply(const RingSpec& ring, const GroupElement& a, const GroupElement& b);

RingSpec zq_ring(Coord q);
/// Z_q[t]/(t^2), basis {1, t}.
RingSpec dual_numbers_ring(Coord q = 2);
/// M_n(Z_q), matrix units in row-major order.
RingSpec matrix_ring(std::size_t n, Coord q);
/// Upper triangular n x n matrices over Z_q, units E_rs (r <= s) row-major.
RingSpec upper_triangular_ring(std::size_t n, Coord q);
/// F_4 = Z_2[x]/(x^2 + x + 1), basis {1, x}.
RingSpec f4_field();
RingSpec ring_product(const RingSpec& a, const RingSpec& b);

struct WholeRing {};
/// Γ is the subgroup spanned by `basis`; the basis must be independent
/// (the spanned subgroup has order equal to the product of element orders).
struct SubgroupBasis {
    std::vector<GroupElement> basis;
};
/// Γ = Z_n acting by a k b = k (ab).
struct IntegersMod {
    Coord n;
};
using GammaChoice = std::variant<WholeRing, SubgroupBasis, IntegersMod>;

/// The Γ-ring structure of an associative ring R: a gamma b = a gamma b for
/// gamma in R or in an additive subgroup, or scaled products for Z_n.
GammaRing ring_as_gamma_ring(const RingSpec& ring, const GammaChoice& gamma);

/// M = m x n matrices over Z_q, Γ = n x m matrices, product = matrix triple
/// product; generators are matrix units in row-major order.
GammaRing rect_matrix_instance(std::size_t m, std::size_t n, Coord q, const Caps& caps = {});

/// M1 x M2 over Γ1 x Γ2 with componentwise products.
GammaRing direct_product(const GammaRing& a, const GammaRing& b);

/// Finite stand-in for a noncommutative semiprime Γ-ring with a
/// non-identity scp automorphism: M = M_2(F_2) x F_4 (the ring),
/// Γ = M_2(F_2) x F_2 inside it, and sigma = identity on the matrix factor,
/// Frobenius a -> a^2 on F_4.
struct ExampleInstance {
    GammaRing ring;
    AdditiveMap sigma;
};
ExampleInstance frobenius_example();

GammaRing z2_instance();
/// Z_2[t]/(t^2) with Γ = Z_2.
GammaRing dual_numbers_instance();

/// The shipped suite: Z2, dual numbers, rect(1,2;2), rect(2,1;2), Z2 x Z2,
/// rect(1,2;2) x Z2 and the Frobenius example.
std::vector<GammaRing> builtin_instances();

struct RecipeSpace {
    bool rect = true;
    bool ring_wrap = true;
    bool product = true;
    /// Upper bound on |M| and |Γ| of generated instances.
    std::uint64_t max_order = 64;
};

/// A validated instance drawn from the constructors above (never a raw
/// random tensor); equal seeds give identical instances.
GammaRing random_instance(std::uint64_t seed, const RecipeSpace& space = {});

} // namespace gammaring
