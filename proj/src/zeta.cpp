#include "nt/zeta.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "nt/errors.hpp"

namespace nt {

// ---------------------------------------------------------------- polynomials

UTPoly poly_add(const UTPoly& a, const UTPoly& b) {
    UTPoly out = a;
    for (const auto& [k, c] : b) {
        BigInt& slot = out[k];
        slot += c;
        if (slot == 0) out.erase(k);
    }
    return out;
}

UTPoly poly_mul(const UTPoly& a, const UTPoly& b) {
    UTPoly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            std::pair<std::int64_t, std::int64_t> k{ka.first + kb.first, ka.second + kb.second};
            BigInt& slot = out[k];
            slot += ca * cb;
            if (slot == 0) out.erase(k);
        }
    return out;
}

namespace {

UTPoly atom_poly(const Atom& atom) {
    UTPoly p;
    p[{0, 0}] = 1;
    p[{static_cast<std::int64_t>(atom.first), static_cast<std::int64_t>(atom.second)}] -= 1;
    return p;
}

UTPoly shift_u(const UTPoly& p, std::int64_t s) {
    UTPoly out;
    for (const auto& [k, c] : p) out[{k.first + s, k.second}] = c;
    return out;
}

UTPoly scale(const UTPoly& p, const BigInt& c) {
    UTPoly out;
    if (c == 0) return out;
    for (const auto& [k, v] : p) out[k] = v * c;
    return out;
}

}  // namespace

UTPoly expand_denominator(const std::map<Atom, unsigned>& den) {
    UTPoly out{{{0, 0}, BigInt(1)}};
    for (const auto& [atom, mult] : den)
        for (unsigned i = 0; i < mult; ++i) out = poly_mul(out, atom_poly(atom));
    return out;
}

// ---------------------------------------------------------------- ZetaFn

ZetaFn ZetaFn::monomial(const BigInt& c, std::int64_t u_exp, std::int64_t t_exp) {
    ensure(t_exp >= 0, "negative T exponent");
    ZetaFn z;
    if (c == 0) return z;
    z.num_[{0, t_exp}] = c;
    z.shift_ = u_exp;
    return z;
}

ZetaFn ZetaFn::from_poly(const UTPoly& num, std::int64_t u_shift) {
    ZetaFn z;
    for (const auto& [k, c] : num)
        if (c != 0) z.num_[k] = c;
    z.shift_ = u_shift;
    z.pull_u_power();
    return z;
}

ZetaFn ZetaFn::L_minus_1() { return L_minus(1); }

ZetaFn ZetaFn::L_minus(unsigned r_plus_1) {
    UTPoly p{{{0, 0}, BigInt(1)}};
    p[{1, 0}] = -BigInt(r_plus_1);
    return from_poly(p, -1);
}

ZetaFn ZetaFn::geometric(std::uint64_t a, std::uint64_t b) {
    ensure(a != 0 || b != 0, "geometric series of a constant");
    ZetaFn z = monomial(1, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
    z.den_[{a, b}] = 1;
    return z;
}

ZetaFn ZetaFn::inverse(const Atom& atom) {
    ensure(atom.first != 0 || atom.second != 0, "atom of a constant");
    ZetaFn z = monomial(1, 0, 0);
    z.den_[atom] = 1;
    return z;
}

void ZetaFn::pull_u_power() {
    if (num_.empty()) {
        shift_ = 0;
        return;
    }
    std::int64_t low = num_.begin()->first.first;
    for (const auto& [k, c] : num_) low = std::min(low, k.first);
    if (low != 0) {
        num_ = shift_u(num_, -low);
        shift_ += low;
    }
}

ZetaFn operator+(const ZetaFn& a, const ZetaFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::map<Atom, unsigned> den = a.den_;
    for (const auto& [atom, m] : b.den_) den[atom] = std::max(den[atom], m);
    auto lift = [&](const ZetaFn& z) {
        std::map<Atom, unsigned> missing;
        for (const auto& [atom, m] : den) {
            auto it = z.den_.find(atom);
            unsigned have = it == z.den_.end() ? 0 : it->second;
            if (m > have) missing[atom] = m - have;
        }
        return poly_mul(z.num_, expand_denominator(missing));
    };
    const std::int64_t s = std::min(a.shift_, b.shift_);
    ZetaFn out;
    out.num_ = poly_add(shift_u(lift(a), a.shift_ - s), shift_u(lift(b), b.shift_ - s));
    out.shift_ = s;
    out.den_ = out.num_.empty() ? std::map<Atom, unsigned>{} : den;
    out.pull_u_power();
    return out;
}

ZetaFn ZetaFn::operator-() const {
    ZetaFn z = *this;
    z.num_ = scale(num_, -1);
    return z;
}

ZetaFn operator-(const ZetaFn& a, const ZetaFn& b) { return a + (-b); }

ZetaFn operator*(const ZetaFn& a, const ZetaFn& b) {
    ZetaFn out;
    if (a.is_zero() || b.is_zero()) return out;
    out.num_ = poly_mul(a.num_, b.num_);
    out.shift_ = a.shift_ + b.shift_;
    out.den_ = a.den_;
    for (const auto& [atom, m] : b.den_) out.den_[atom] += m;
    out.pull_u_power();
    return out;
}

bool operator==(const ZetaFn& a, const ZetaFn& b) {
    const std::int64_t s = std::min(a.shift_, b.shift_);
    UTPoly l = shift_u(poly_mul(a.num_, expand_denominator(b.den_)), a.shift_ - s);
    UTPoly r = shift_u(poly_mul(b.num_, expand_denominator(a.den_)), b.shift_ - s);
    return l == r;
}

std::optional<UTPoly> ZetaFn::divide_atom(const UTPoly& p, const Atom& atom) {
    const std::int64_t a = static_cast<std::int64_t>(atom.first), b = static_cast<std::int64_t>(atom.second);
    // group terms into chains e + k(a,b); p = (1 - X) Q forces Q to be the prefix sums along each chain
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::map<Key, std::map<std::int64_t, BigInt>> chains;
    for (const auto& [e, c] : p) {
        std::int64_t k = std::numeric_limits<std::int64_t>::max();
        if (a > 0) k = std::min(k, e.first >= 0 ? e.first / a : 0);
        if (b > 0) k = std::min(k, e.second / b);
        Key base{e.first - k * a, e.second - k * b};
        chains[base][k] = c;
    }
    UTPoly q;
    for (const auto& [base, terms] : chains) {
        BigInt running = 0;
        std::int64_t k = terms.begin()->first;
        const std::int64_t last = terms.rbegin()->first;
        for (; k <= last; ++k) {
            auto it = terms.find(k);
            if (it != terms.end()) running += it->second;
            if (k == last) break;
            if (running != 0) q[{base.first + k * a, base.second + k * b}] = running;
        }
        if (running != 0) return std::nullopt;
    }
    return q;
}

ZetaFn ZetaFn::normalized() const {
    ZetaFn z = *this;
    if (z.num_.empty()) return ZetaFn{};
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = z.den_.begin(); it != z.den_.end() && !changed; ++it) {
            const Atom X = it->first;
            if (auto q = divide_atom(z.num_, X)) {
                z.num_ = std::move(*q);
                changed = true;
            } else {
                // 1 - X = (1 - Y)(1 + Y + ... + Y^(k-1)) with X = Y^k: drop the second factor when it divides
                const std::uint64_t g = std::gcd(X.first, X.second);
                for (std::uint64_t k = g; k > 1 && !changed; --k) {
                    if (g % k != 0) continue;
                    const Atom Y{X.first / k, X.second / k};
                    if (auto r = divide_atom(poly_mul(z.num_, atom_poly(Y)), X)) {
                        z.num_ = std::move(*r);
                        ++z.den_[Y];
                        changed = true;
                    }
                }
            }
            if (changed && --z.den_[X] == 0) z.den_.erase(X);
        }
    }
    z.pull_u_power();
    return z;
}

ZetaFn normalize(const ZetaFn& z) { return z.normalized(); }

Poles poles(const ZetaFn& z) {
    Poles out;
    const ZetaFn n = z.normalized();
    for (const auto& [atom, m] : n.denominator())
        for (unsigned i = 0; i < m; ++i) (atom.second >= 1 ? out.tDependent : out.uOnly).push_back(atom);
    return out;
}

// ---------------------------------------------------------------- contributions

std::vector<std::pair<std::int64_t, std::int64_t>> lattice_points_P(Direction g1, Direction g2) {
    const std::int64_t p1 = g1.p, q1 = g1.q, p2 = g2.p, q2 = g2.q;
    std::int64_t det = p1 * q2 - p2 * q1;
    if (det == 0) throw Error(ErrorKind::DegenerateCone, "cone generators are linearly dependent");
    const std::int64_t sign = det > 0 ? 1 : -1;
    det *= sign;
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t i = 0; i <= p1 + p2; ++i)
        for (std::int64_t j = 0; j <= q1 + q2; ++j) {
            // det * mu1 and det * mu2
            const std::int64_t m1 = sign * (i * q2 - j * p2);
            const std::int64_t m2 = sign * (p1 * j - q1 * i);
            if (m1 > 0 && m1 <= det && m2 > 0 && m2 <= det) out.emplace_back(i, j);
        }
    return out;
}

ZetaFn cone_contribution(const Cone& cone, std::uint32_t nu) {
    const auto pts = lattice_points_P(cone.gen1, cone.gen2);
    const std::int64_t a = cone.vertex.a, b = cone.vertex.b;
    ZetaFn D;
    for (const auto& [i, j] : pts) D = D + ZetaFn::monomial(1, std::int64_t(nu) * i + j, i * a + j * b);
    auto atom = [&](Direction g) {
        return Atom{std::uint64_t(g.p) * nu + g.q, std::uint64_t(g.p) * a + std::uint64_t(g.q) * b};
    };
    ZetaFn l = ZetaFn::L_minus_1();
    return (l * l * D * ZetaFn::inverse(atom(cone.gen1)) * ZetaFn::inverse(atom(cone.gen2))).normalized();
}

ZetaFn line_contribution(const Face& face, unsigned r, std::uint32_t nu) {
    const std::uint64_t e = std::uint64_t(face.p) * nu + face.q;
    return (ZetaFn::L_minus_1() * ZetaFn::L_minus(r + 1) * ZetaFn::geometric(e, face.N)).normalized();
}

ZetaFn zeta_monomial(std::uint64_t N1, std::uint64_t N2, std::uint32_t nu) {
    if (N1 == 0 && N2 == 0) throw Error(ErrorKind::InvalidInput, "zeta_monomial needs (N1, N2) != (0, 0)");
    if (N1 == 0 && nu != 1) throw Error(ErrorKind::InvalidInput, "N1 = 0 requires nu = 1");
    if (nu == 0) throw Error(ErrorKind::InvalidInput, "nu must be positive");
    ZetaFn l = ZetaFn::L_minus_1();
    return (l * l * ZetaFn::geometric(nu, N1) * ZetaFn::geometric(1, N2)).normalized();
}

namespace {

void collect(const TraceNode& node, std::vector<std::size_t>& path, std::vector<ZetaTerm>& out) {
    if (node.leaf) {
        out.push_back({ZetaTerm::Kind::Leaf, path, 0, zeta_monomial(node.leaf->k, node.leaf->nu, node.nu)});
        return;
    }
    DualFan fan = dual_fan(node.diagram);
    for (std::size_t i = 0; i < fan.cones.size(); ++i)
        out.push_back({ZetaTerm::Kind::Cone, path, i, cone_contribution(fan.cones[i], node.nu)});
    for (std::size_t i = 0; i < node.diagram.faces.size(); ++i) {
        unsigned r = static_cast<unsigned>(node.faceData[i].roots.roots.size());
        out.push_back({ZetaTerm::Kind::Line, path, i, line_contribution(node.diagram.faces[i], r, node.nu)});
    }
    for (std::size_t c = 0; c < node.children.size(); ++c) {
        path.push_back(c);
        collect(*node.children[c].node, path, out);
        path.pop_back();
    }
}

}  // namespace

ZetaBreakdown zeta_breakdown(const TraceNode& trace) {
    ZetaBreakdown out;
    std::vector<std::size_t> path;
    collect(trace, path, out.terms);
    for (const auto& t : out.terms) out.total = out.total + t.value;
    out.total = out.total.normalized();
    return out;
}

ZetaFn zeta(const TraceNode& trace) { return zeta_breakdown(trace).total; }

ZetaFn zeta(const Ideal& ideal, std::uint32_t nu) { return zeta(*run_algorithm(ideal, nu)); }

std::vector<std::size_t> no_contribution_faces(const TraceNode& trace) {
    std::vector<std::size_t> out;
    if (trace.leaf) return out;
    const auto& faces = trace.diagram.faces;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const FaceData& fd = trace.faceData[i];
        if (fd.dicritical() || fd.roots.roots.size() != 1 || !fd.roots.all_rational()) continue;
        const bool bottom = i + 1 == faces.size() && trace.diagram.betaM == 0 && faces[i].p == 1;
        const bool top = i == 0 && trace.diagram.alpha0 == 0 && faces[i].q == 1;
        if (bottom || top) out.push_back(i);
    }
    return out;
}

}  // namespace nt
