#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gammaring/abelian.hpp"
#include "gammaring/report.hpp"

namespace gammaring {

class GammaRing;

namespace detail {
struct RingCache;
class IndexedRing;
/// Index-based view with dense tables, built once per ring and shared by copies.
const IndexedRing& indexed(const GammaRing& ring);
} // namespace detail

/// T[i][j][k] = e_i f_j e_k, i,k over generators of M and j over Γ.
using StructureTensor = std::vector<std::vector<std::vector<GroupElement>>>;

/// A Γ-ring given by structure constants. The product is extended from the
/// generator tensor by triadditivity. Construction checks that the tensor is
/// well defined on the cyclic factors; associativity is a separate check so
/// broken instances can be built on purpose.
class GammaRing {
public:
    const FinAbGroup& m() const noexcept { return m_; }
    const FinAbGroup& gamma() const noexcept { return g_; }
    const std::string& name() const noexcept { return name_; }

    const GroupElement& entry(std::size_t i, std::size_t j, std::size_t k) const {
        return tensor_.at((i * g_.rank() + j) * m_.rank() + k);
    }
    StructureTensor tensor() const;
    /// Entries in (i, j, k) row-major order.
    std::span<const GroupElement> flat_tensor() const noexcept { return tensor_; }

    GammaRing with_name(std::string name) const;

    friend bool operator==(const GammaRing& a, const GammaRing& b) {
        return a.m_ == b.m_ && a.g_ == b.g_ && a.tensor_ == b.tensor_;
    }

private:
    friend GammaRing build_gamma_ring(FinAbGroup, FinAbGroup, const StructureTensor&, std::string);
    friend const detail::IndexedRing& detail::indexed(const GammaRing&);
    friend bool is_validated(const GammaRing&);

    GammaRing() = default;

    FinAbGroup m_;
    FinAbGroup g_;
    std::vector<GroupElement> tensor_; // flat, row-major in (i, j, k)
    std::string name_;
    std::shared_ptr<detail::RingCache> cache_;
};

/// Throws TensorShapeMismatch when the table dimensions or entry lengths do
/// not match the groups, NotWellDefined(i,j,k) when an entry's order does not
/// divide gcd(d_i, c_j, d_k).
GammaRing build_gamma_ring(FinAbGroup m_group, FinAbGroup g_group, const StructureTensor& tensor,
                           std::string name = {});

/// Checks (e_i f_j e_k) f_l e_m = e_i f_j (e_k f_l e_m) on all generator
/// 5-tuples; the first violation is reported with both sides.
VerdictReport validate_associativity(const GammaRing& ring);

/// Cached result of validate_associativity.
bool is_validated(const GammaRing& ring);
/// Throws NotValidated unless the ring passes validate_associativity.
void require_validated(const GammaRing& ring);

GroupElement product(const GammaRing& ring, const GroupElement& a, const GroupElement& alpha,
                     const GroupElement& b);

/// [a,b]_alpha = a alpha b - b alpha a.
GroupElement commutator(const GammaRing& ring, const GroupElement& a, const GroupElement& b,
                        const GroupElement& alpha);

/// a[alpha,beta]_c b = a alpha c beta b - a beta c alpha b.
GroupElement gamma_bracket(const GammaRing& ring, const GroupElement& a, const GroupElement& alpha,
                           const GroupElement& beta, const GroupElement& c, const GroupElement& b);

struct Residual {
    GroupElement value;
    std::vector<NamedValue> inputs;

    bool is_zero() const;
};

enum class ExpansionSide { left, right };

/// LHS - RHS of the Γ-ring commutator expansions
///   left:  [a, b alpha c]_beta = [a,b]_beta alpha c + b alpha [a,c]_beta + b beta a alpha c - b alpha a beta c
///   right: [a alpha b, c]_beta = [a,c]_beta alpha b + a alpha [b,c]_beta + a alpha c beta b - a beta c alpha b
/// Zero in every associative instance.
Residual commutator_expansion_residual(const GammaRing& ring, ExpansionSide side, const GroupElement& a,
                                       const GroupElement& b, const GroupElement& c,
                                       const GroupElement& alpha, const GroupElement& beta);

} // namespace gammaring
