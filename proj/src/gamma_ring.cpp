#include "gammaring/gamma_ring.hpp"

#include <numeric>

#include "indexed_ring.hpp"

namespace gammaring {

StructureTensor GammaRing::tensor() const {
    StructureTensor t(m_.rank(), std::vector<std::vector<GroupElement>>(g_.rank()));
    for (std::size_t i = 0; i < m_.rank(); ++i)
        for (std::size_t j = 0; j < g_.rank(); ++j)
            for (std::size_t k = 0; k < m_.rank(); ++k) t[i][j].push_back(entry(i, j, k));
    return t;
}

GammaRing GammaRing::with_name(std::string name) const {
    GammaRing copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

GammaRing build_gamma_ring(FinAbGroup m_group, FinAbGroup g_group, const StructureTensor& tensor,
                           std::string name) {
    const std::size_t km = m_group.rank(), kg = g_group.rank();
    if (tensor.size() != km)
        throw TensorShapeMismatch("tensor has " + std::to_string(tensor.size()) + " rows, M has rank " +
                                  std::to_string(km));
    GammaRing ring;
    ring.tensor_.reserve(km * kg * km);
    for (std::size_t i = 0; i < km; ++i) {
        if (tensor[i].size() != kg)
            throw TensorShapeMismatch("tensor slice " + std::to_string(i) + " has " +
                                      std::to_string(tensor[i].size()) + " entries, Γ has rank " +
                                      std::to_string(kg));
        for (std::size_t j = 0; j < kg; ++j) {
            if (tensor[i][j].size() != km)
                throw TensorShapeMismatch("tensor fibre (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") has " + std::to_string(tensor[i][j].size()) + " entries");
            for (std::size_t k = 0; k < km; ++k) {
                const auto& t = tensor[i][j][k];
                if (t.coords.size() != km)
                    throw TensorShapeMismatch("tensor entry (" + std::to_string(i) + "," + std::to_string(j) +
                                              "," + std::to_string(k) + ") has " +
                                              std::to_string(t.coords.size()) + " coordinates");
                if (!m_group.contains(t))
                    throw TensorShapeMismatch("tensor entry (" + std::to_string(i) + "," + std::to_string(j) +
                                              "," + std::to_string(k) + ") is not reduced");
                const Coord bound =
                    std::gcd(std::gcd(m_group.modulus(i), g_group.modulus(j)), m_group.modulus(k));
                if (m_group.scale(bound, t) != m_group.zero()) throw NotWellDefined(i, j, k);
                ring.tensor_.push_back(t);
            }
        }
    }
    ring.m_ = std::move(m_group);
    ring.g_ = std::move(g_group);
    ring.name_ = std::move(name);
    ring.cache_ = std::make_shared<detail::RingCache>();
    return ring;
}

namespace detail {

const IndexedRing& indexed(const GammaRing& ring) {
    auto& cache = *ring.cache_;
    std::call_once(cache.indexed_once,
                   [&] { cache.indexed = std::make_unique<IndexedRing>(ring.m_, ring.g_, ring.tensor_); });
    return *cache.indexed;
}

} // namespace detail

VerdictReport validate_associativity(const GammaRing& ring) {
    VerdictReport report;
    const auto& m = ring.m();
    const auto& g = ring.gamma();
    const std::size_t km = m.rank(), kg = g.rank();
    for (std::size_t i = 0; i < km; ++i)
        for (std::size_t j = 0; j < kg; ++j)
            for (std::size_t k = 0; k < km; ++k)
                for (std::size_t l = 0; l < kg; ++l)
                    for (std::size_t n = 0; n < km; ++n) {
                        report.count("generator_tuples");
                        const auto lhs = product(ring, ring.entry(i, j, k), g.generator(l), m.generator(n));
                        const auto rhs = product(ring, m.generator(i), g.generator(j), ring.entry(k, l, n));
                        if (lhs != rhs) {
                            report.fail(Witness{"associativity"}
                                            .with("i", static_cast<Coord>(i))
                                            .with("j", static_cast<Coord>(j))
                                            .with("k", static_cast<Coord>(k))
                                            .with("l", static_cast<Coord>(l))
                                            .with("m", static_cast<Coord>(n))
                                            .with("lhs", lhs)
                                            .with("rhs", rhs));
                            return report;
                        }
                    }
    return report;
}

bool is_validated(const GammaRing& ring) {
    auto& cache = *ring.cache_;
    std::call_once(cache.valid_once, [&] { cache.valid = validate_associativity(ring).verdict; });
    return cache.valid;
}

void require_validated(const GammaRing& ring) {
    if (!is_validated(ring))
        throw NotValidated("instance '" + ring.name() + "' fails generator associativity");
}

GroupElement product(const GammaRing& ring, const GroupElement& a, const GroupElement& alpha,
                     const GroupElement& b) {
    return detail::product_from_tensor(ring.m(), ring.gamma(), ring.flat_tensor(), a, alpha, b);
}

GroupElement commutator(const GammaRing& ring, const GroupElement& a, const GroupElement& b,
                        const GroupElement& alpha) {
    return ring.m().sub(product(ring, a, alpha, b), product(ring, b, alpha, a));
}

GroupElement gamma_bracket(const GammaRing& ring, const GroupElement& a, const GroupElement& alpha,
                           const GroupElement& beta, const GroupElement& c, const GroupElement& b) {
    const auto first = product(ring, product(ring, a, alpha, c), beta, b);
    const auto second = product(ring, product(ring, a, beta, c), alpha, b);
    return ring.m().sub(first, second);
}

bool Residual::is_zero() const {
    for (Coord c : value.coords)
        if (c != 0) return false;
    return true;
}

Residual commutator_expansion_residual(const GammaRing& ring, ExpansionSide side, const GroupElement& a,
                                       const GroupElement& b, const GroupElement& c,
                                       const GroupElement& alpha, const GroupElement& beta) {
    const auto& m = ring.m();
    auto p = [&](const GroupElement& x, const GroupElement& y, const GroupElement& z) {
        return product(ring, x, y, z);
    };
    auto br = [&](const GroupElement& x, const GroupElement& y, const GroupElement& g) {
        return commutator(ring, x, y, g);
    };
    GroupElement lhs, rhs;
    if (side == ExpansionSide::left) {
        lhs = br(a, p(b, alpha, c), beta);
        rhs = m.add(p(br(a, b, beta), alpha, c), p(b, alpha, br(a, c, beta)));
        rhs = m.add(rhs, m.sub(p(p(b, beta, a), alpha, c), p(p(b, alpha, a), beta, c)));
    } else {
        lhs = br(p(a, alpha, b), c, beta);
        rhs = m.add(p(br(a, c, beta), alpha, b), p(a, alpha, br(b, c, beta)));
        rhs = m.add(rhs, m.sub(p(p(a, alpha, c), beta, b), p(p(a, beta, c), alpha, b)));
    }
    return Residual{m.sub(lhs, rhs),
                    {{"a", a.coords}, {"b", b.coords}, {"c", c.coords}, {"alpha", alpha.coords},
                     {"beta", beta.coords}}};
}

} // namespace gammaring
