#include "gammaring/instance_file.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace gammaring {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<Coord> parse_numbers(std::string_view s, std::size_t line) {
    std::vector<Coord> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        Coord v = 0;
        const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw ParseError(line, "expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string join(std::span<const Coord> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string body(const GammaRing& ring) {
    const auto& m = ring.m();
    const auto& g = ring.gamma();
    std::string out = "M: " + join(m.moduli()) + "\nG: " + join(g.moduli()) + "\n";
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            for (std::size_t k = 0; k < m.rank(); ++k)
                if (const auto& t = ring.entry(i, j, k); t != m.zero())
                    out += "T " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) +
                           " : " + join(t.coords) + "\n";
    return out;
}

FinAbGroup parse_group(std::string_view rest, std::size_t line) {
    const auto moduli = parse_numbers(rest, line);
    try {
        return FinAbGroup(moduli);
    } catch (const GammaError& e) {
        throw ParseError(line, e.what());
    }
}

} // namespace

GammaRing parse_instance_file(std::string_view text, bool skip_assoc) {
    std::optional<FinAbGroup> m, g;
    std::string name;
    bool header = false;
    struct Entry {
        std::vector<Coord> coords;
        std::size_t line;
    };
    std::map<std::array<std::size_t, 3>, Entry> entries;

    std::size_t line_no = 0, last = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string line = trim(raw);
        if (line.empty()) continue;
        last = line_no;
        if (line[0] == '#') {
            const std::string c = trim(std::string_view(line).substr(1));
            if (c.rfind("name:", 0) == 0) name = trim(std::string_view(c).substr(5));
            continue;
        }
        if (!header) {
            if (line != "gammaring v1") throw ParseError(line_no, "expected header 'gammaring v1'");
            header = true;
            continue;
        }
        if (line.rfind("M:", 0) == 0) {
            if (m) throw ParseError(line_no, "duplicate M line");
            m = parse_group(std::string_view(line).substr(2), line_no);
        } else if (line.rfind("G:", 0) == 0) {
            if (g) throw ParseError(line_no, "duplicate G line");
            g = parse_group(std::string_view(line).substr(2), line_no);
        } else if (line.rfind("T ", 0) == 0) {
            if (!m || !g) throw ParseError(line_no, "T line before M and G lines");
            const auto colon = line.find(':');
            if (colon == std::string::npos) throw ParseError(line_no, "T line without ':'");
            const auto idx = parse_numbers(std::string_view(line).substr(1, colon - 1), line_no);
            const auto coords = parse_numbers(std::string_view(line).substr(colon + 1), line_no);
            if (idx.size() != 3) throw ParseError(line_no, "T line needs three indices i j k");
            if (idx[0] < 0 || idx[0] >= static_cast<Coord>(m->rank()) || idx[1] < 0 ||
                idx[1] >= static_cast<Coord>(g->rank()) || idx[2] < 0 || idx[2] >= static_cast<Coord>(m->rank()))
                throw ParseError(line_no, "tensor index out of range");
            if (coords.size() != m->rank())
                throw ParseError(line_no, "entry needs " + std::to_string(m->rank()) + " coordinates");
            for (std::size_t d = 0; d < coords.size(); ++d)
                if (coords[d] < 0 || coords[d] >= m->modulus(d))
                    throw ParseError(line_no, "coordinate " + std::to_string(d) + " is not reduced");
            const std::array<std::size_t, 3> key{static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1]),
                                                 static_cast<std::size_t>(idx[2])};
            if (!entries.emplace(key, Entry{coords, line_no}).second)
                throw ParseError(line_no, "duplicate T line for (" + std::to_string(key[0]) + "," +
                                              std::to_string(key[1]) + "," + std::to_string(key[2]) + ")");
        } else {
            throw ParseError(line_no, "unrecognized line '" + line + "'");
        }
    }
    if (!header) throw ParseError(last, "missing header 'gammaring v1'");
    if (!m) throw ParseError(last, "missing M line");
    if (!g) throw ParseError(last, "missing G line");

    StructureTensor t(m->rank(), std::vector<std::vector<GroupElement>>(g->rank(),
                                                                          std::vector<GroupElement>(m->rank(), m->zero())));
    for (const auto& [key, e] : entries) t[key[0]][key[1]][key[2]] = GroupElement{e.coords};

    GammaRing ring = [&] {
        try {
            return build_gamma_ring(*m, *g, t, name);
        } catch (const NotWellDefined& e) {
            const auto it = entries.find({e.index(), e.j(), e.k()});
            throw ParseError(it == entries.end() ? line_no : it->second.line, e.what());
        }
    }();
    if (!skip_assoc) {
        const auto v = validate_associativity(ring);
        if (!v) {
            std::string where;
            for (const char* key : {"i", "j", "k", "l", "m"})
                if (const auto* nv = v.witnesses.front().find(key)) where += (where.empty() ? "" : ",") + std::to_string(nv->coords.at(0));
            throw ParseError(0, "generator associativity fails at (" + where + ")");
        }
    }
    return ring;
}

std::string emit_instance_file(const GammaRing& ring) {
    std::string out = "gammaring v1\n";
    if (!ring.name().empty()) out += "# name: " + ring.name() + "\n";
    return out + body(ring);
}

std::string instance_hash(const GammaRing& ring) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : body(ring)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace gammaring
