#pragma once

// Brute-force reference implementations. They read only the groups and the
// structure tensor of a ring and work on whole elements, so they share no
// code path with the generator-level checks in the library. Products are
// tabulated once from the naive triple sum.

#include <cstdint>
#include <span>
#include <vector>

#include "gammaring/gamma_ring.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Id = std::uint32_t;

inline std::vector<Vec> elements(std::span<const std::int64_t> moduli) {
    std::vector<Vec> out;
    Vec x(moduli.size(), 0);
    for (;;) {
        out.push_back(x);
        std::size_t t = x.size();
        for (;;) {
            if (t == 0) return out;
            --t;
            if (++x[t] < moduli[t]) break;
            x[t] = 0;
        }
    }
}

struct Ring {
    explicit Ring(const gammaring::GammaRing& r)
        : dm(r.m().moduli().begin(), r.m().moduli().end()),
          dg(r.gamma().moduli().begin(), r.gamma().moduli().end()),
          ms(elements(dm)),
          gs(elements(dg)) {
        for (std::size_t i = 0; i < dm.size(); ++i)
            for (std::size_t j = 0; j < dg.size(); ++j)
                for (std::size_t k = 0; k < dm.size(); ++k) t.push_back(r.entry(i, j, k).coords);
        const std::size_t n = ms.size(), g = gs.size();
        sum.resize(n * n);
        for (Id a = 0; a < n; ++a)
            for (Id b = 0; b < n; ++b) sum[a * n + b] = id(add(ms[a], ms[b]));
        table.resize(n * g * n);
        for (Id a = 0; a < n; ++a)
            for (Id al = 0; al < g; ++al)
                for (Id b = 0; b < n; ++b) table[(a * g + al) * n + b] = id(naive_prod(ms[a], gs[al], ms[b]));
    }

    std::size_t size() const { return ms.size(); }
    Id id(const Vec& x) const {
        Id out = 0;
        for (std::size_t d = 0; d < dm.size(); ++d) out = static_cast<Id>(out * dm[d] + x[d]);
        return out;
    }

    Vec zero() const { return Vec(dm.size(), 0); }
    Vec add(const Vec& a, const Vec& b) const {
        Vec out(dm.size());
        for (std::size_t d = 0; d < dm.size(); ++d) out[d] = (a[d] + b[d]) % dm[d];
        return out;
    }
    Vec sub(const Vec& a, const Vec& b) const {
        Vec out(dm.size());
        for (std::size_t d = 0; d < dm.size(); ++d) out[d] = ((a[d] - b[d]) % dm[d] + dm[d]) % dm[d];
        return out;
    }

    // sum over i, j, k of a_i g_j b_k T[i][j][k]
    Vec naive_prod(const Vec& a, const Vec& g, const Vec& b) const {
        const std::size_t km = dm.size(), kg = dg.size();
        Vec out(km, 0);
        for (std::size_t i = 0; i < km; ++i)
            for (std::size_t j = 0; j < kg; ++j)
                for (std::size_t k = 0; k < km; ++k) {
                    const auto& e = t[(i * kg + j) * km + k];
                    for (std::size_t d = 0; d < km; ++d) {
                        const std::int64_t c = ((a[i] * g[j]) % dm[d] * b[k]) % dm[d];
                        out[d] = (out[d] + c * e[d]) % dm[d];
                    }
                }
        return out;
    }
    Vec prod(const Vec& a, const Vec& g, const Vec& b) const { return ms[p(id(a), gid(g), id(b))]; }
    Vec comm(const Vec& a, const Vec& b, const Vec& g) const { return sub(prod(a, g, b), prod(b, g, a)); }

    Id gid(const Vec& x) const {
        Id out = 0;
        for (std::size_t d = 0; d < dg.size(); ++d) out = static_cast<Id>(out * dg[d] + x[d]);
        return out;
    }
    Id s(Id a, Id b) const { return sum[a * ms.size() + b]; }
    Id p(Id a, Id al, Id b) const { return table[(a * gs.size() + al) * ms.size() + b]; }
    bool comm_zero(Id a, Id b, Id al) const { return p(a, al, b) == p(b, al, a); }

    Vec dm, dg;
    std::vector<Vec> ms, gs;
    std::vector<Vec> t;
    std::vector<Id> sum, table;
};

inline bool associative(const Ring& r) {
    const Id n = static_cast<Id>(r.size()), g = static_cast<Id>(r.gs.size());
    for (Id a = 0; a < n; ++a)
        for (Id al = 0; al < g; ++al)
            for (Id b = 0; b < n; ++b)
                for (Id be = 0; be < g; ++be)
                    for (Id c = 0; c < n; ++c)
                        if (r.p(r.p(a, al, b), be, c) != r.p(a, al, r.p(b, be, c))) return false;
    return true;
}

inline bool central_id(const Ring& r, Id x) {
    for (Id y = 0; y < r.size(); ++y)
        for (Id g = 0; g < r.gs.size(); ++g)
            if (!r.comm_zero(x, y, g)) return false;
    return true;
}

inline bool central(const Ring& r, const Vec& x) { return central_id(r, r.id(x)); }

inline std::vector<Vec> center(const Ring& r) {
    std::vector<Vec> out;
    for (Id x = 0; x < r.size(); ++x)
        if (central_id(r, x)) out.push_back(r.ms[x]);
    return out;
}

inline bool commutative(const Ring& r) { return center(r).size() == r.size(); }

// a Γ M Γ b == 0
inline bool sandwich_zero(const Ring& r, Id a, Id b) {
    for (Id al = 0; al < r.gs.size(); ++al)
        for (Id m = 0; m < r.size(); ++m)
            for (Id be = 0; be < r.gs.size(); ++be)
                if (r.p(r.p(a, al, m), be, b) != 0) return false;
    return true;
}

inline bool prime(const Ring& r) {
    for (Id a = 1; a < r.size(); ++a)
        for (Id b = 1; b < r.size(); ++b)
            if (sandwich_zero(r, a, b)) return false;
    return true;
}

inline bool semiprime(const Ring& r) {
    for (Id a = 1; a < r.size(); ++a)
        if (sandwich_zero(r, a, a)) return false;
    return true;
}

// A self-map of M given by generator images.
struct Map {
    std::vector<Vec> images;

    // Values on every element, x = sum x_i e_i added up one copy at a time.
    std::vector<Id> table(const Ring& r) const {
        std::vector<Id> out(r.size());
        const std::vector<Id> img = [&] {
            std::vector<Id> v;
            for (const auto& y : images) v.push_back(r.id(y));
            return v;
        }();
        for (Id x = 0; x < r.size(); ++x) {
            Id acc = 0;
            for (std::size_t i = 0; i < img.size(); ++i)
                for (std::int64_t k = 0; k < r.ms[x][i]; ++k) acc = r.s(acc, img[i]);
            out[x] = acc;
        }
        return out;
    }
    friend bool operator==(const Map&, const Map&) = default;
    friend auto operator<=>(const Map&, const Map&) = default;
};

inline Map from(const gammaring::AdditiveMap& f) {
    Map m;
    for (const auto& y : f.images()) m.images.push_back(y.coords);
    return m;
}

// Every additive self-map: generator i may go to any y with d_i y = 0.
inline std::vector<Map> all_maps(const Ring& r) {
    std::vector<std::vector<Vec>> choices(r.dm.size());
    for (std::size_t i = 0; i < r.dm.size(); ++i)
        for (const auto& y : r.ms) {
            bool ok = true;
            for (std::size_t d = 0; d < y.size(); ++d) ok = ok && (y[d] * r.dm[i]) % r.dm[d] == 0;
            if (ok) choices[i].push_back(y);
        }
    std::vector<Map> out{Map{}};
    for (const auto& c : choices) {
        std::vector<Map> next;
        for (const auto& m : out)
            for (const auto& y : c) {
                Map e = m;
                e.images.push_back(y);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

enum class Role { left_derivation, right_derivation, derivation, endomorphism, additive_only };

inline bool holds(const Ring& r, const Map& map, Role role) {
    if (role == Role::additive_only) return true;
    const auto f = map.table(r);
    for (Id x = 0; x < r.size(); ++x)
        for (Id al = 0; al < r.gs.size(); ++al)
            for (Id y = 0; y < r.size(); ++y) {
                const Id lhs = f[r.p(x, al, y)];
                Id rhs = 0;
                switch (role) {
                case Role::left_derivation: rhs = r.s(r.p(x, al, f[y]), r.p(y, al, f[x])); break;
                case Role::right_derivation: rhs = r.s(r.p(f[y], al, x), r.p(f[x], al, y)); break;
                case Role::derivation: rhs = r.s(r.p(f[x], al, y), r.p(x, al, f[y])); break;
                case Role::endomorphism: rhs = r.p(f[x], al, f[y]); break;
                case Role::additive_only: break;
                }
                if (lhs != rhs) return false;
            }
    return true;
}

inline bool scp(const Ring& r, const Map& map) {
    const auto f = map.table(r);
    for (Id x = 0; x < r.size(); ++x)
        for (Id al = 0; al < r.gs.size(); ++al)
            for (Id y = 0; y < r.size(); ++y) {
                const Vec lhs = r.sub(r.ms[r.p(f[x], al, f[y])], r.ms[r.p(f[y], al, f[x])]);
                const Vec rhs = r.sub(r.ms[r.p(x, al, y)], r.ms[r.p(y, al, x)]);
                if (lhs != rhs) return false;
            }
    return true;
}

inline bool maps_into_center(const Ring& r, const Map& map) {
    for (Id y : map.table(r))
        if (!central_id(r, y)) return false;
    return true;
}

inline std::vector<Map> maps_with(const Ring& r, Role role, bool need_scp = false) {
    std::vector<Map> out;
    for (const auto& f : all_maps(r))
        if (holds(r, f, role) && (!need_scp || scp(r, f))) out.push_back(f);
    return out;
}

} // namespace oracle
