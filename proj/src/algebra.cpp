#include "nt/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "nt/errors.hpp"

namespace nt {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::UnitIdeal: return "UnitIdeal";
        case ErrorKind::EmptyIdeal: return "EmptyIdeal";
        case ErrorKind::NonRationalRoot: return "NonRationalRoot";
        case ErrorKind::NotFiniteCodimension: return "NotFiniteCodimension";
        case ErrorKind::InvalidFace: return "InvalidFace";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DegenerateCone: return "DegenerateCone";
        case ErrorKind::InvalidEdge: return "InvalidEdge";
        case ErrorKind::InvalidExchange: return "InvalidExchange";
        case ErrorKind::NotMinimal: return "NotMinimal";
        case ErrorKind::CoordinateChangeDiverged: return "CoordinateChangeDiverged";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& base, unsigned exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return make_rational(num, den);
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / leading();
    return inv * *this;
}

int UniPoly::low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    if (c == 0) return {};
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

std::string UniPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || i == 0) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    ensure(!b.is_zero(), "division by zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] * inv;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    ensure(r.is_zero(), "inexact univariate division");
    return q;
}

namespace {

// Number of sign changes of a Sturm sequence evaluated at x.
int sign_changes(const std::vector<UniPoly>& seq, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& s : seq) {
        int sg = sgn(s.eval(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

// Integer roots of a monic polynomial with integer coefficients.
std::vector<BigInt> integer_roots_monic(const UniPoly& h) {
    std::vector<BigInt> out;
    if (h.degree() <= 0) return out;
    UniPoly sqf = divide_exact(h, gcd(h, h.derivative()));
    if (sqf.degree() <= 0) return out;
    std::vector<UniPoly> seq{sqf, sqf.derivative()};
    while (seq.back().degree() > 0) {
        UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    // Cauchy bound; half-integer endpoints are never roots of a monic integer polynomial's
    // squarefree part, whose rational roots are integers.
    Rational bound = 0;
    for (const auto& c : sqf.coeffs()) bound = std::max(bound, Rational(abs(c)));
    BigInt b = bound.get_num() / bound.get_den() + 2;
    struct Interval { Rational lo, hi; int vlo, vhi; };
    Rational half(1, 2);
    std::vector<Interval> stack;
    Rational lo = Rational(-b) - half, hi = Rational(b) + half;
    stack.push_back({lo, hi, sign_changes(seq, lo), sign_changes(seq, hi)});
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        int count = iv.vlo - iv.vhi;
        if (count <= 0) continue;
        Rational width = iv.hi - iv.lo;
        if (width == 1) {
            Rational cand = iv.lo + half;
            if (sqf.eval(cand) == 0) out.push_back(cand.get_num());
            continue;
        }
        BigInt steps = width.get_num() / width.get_den();
        Rational mid = iv.lo + Rational(BigInt(steps / 2));
        int vmid = sign_changes(seq, mid);
        stack.push_back({iv.lo, mid, iv.vlo, vmid});
        stack.push_back({mid, iv.hi, vmid, iv.vhi});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RootReport rational_roots(const UniPoly& g) {
    ensure(!g.is_zero(), "rational_roots of zero polynomial");
    RootReport report;
    UniPoly rest = g;
    int zero_mult = g.low_order();
    if (zero_mult > 0) {
        std::vector<Rational> v(g.coeffs().begin() + zero_mult, g.coeffs().end());
        rest = UniPoly(std::move(v));
    }
    std::vector<Rational> candidates;
    if (rest.degree() >= 1) {
        BigInt den_lcm = 1;
        for (const auto& c : rest.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        std::vector<BigInt> ints;
        BigInt content = 0;
        for (const auto& c : rest.coeffs()) {
            BigInt v = c.get_num() * (den_lcm / c.get_den());
            ints.push_back(v);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
        for (auto& v : ints) v /= content;
        const std::size_t n = ints.size() - 1;
        const BigInt lc = ints[n];
        // lc^(n-1) g(Y/lc) is monic with integer coefficients.
        std::vector<Rational> h(n + 1);
        BigInt power = 1;
        for (std::size_t i = n; i-- > 0;) {
            h[i] = Rational(ints[i] * power);
            power *= lc;
        }
        h[n] = 1;
        for (const auto& y : integer_roots_monic(UniPoly(std::move(h)))) candidates.push_back(make_rational(y, lc));
    }
    if (zero_mult > 0) candidates.push_back(Rational(0));
    std::sort(candidates.begin(), candidates.end());
    UniPoly residual = g;
    for (const auto& r : candidates) {
        unsigned mult = 0;
        UniPoly lin = UniPoly::linear_root(r);
        for (;;) {
            auto [q, rem] = divmod(residual, lin);
            if (!rem.is_zero()) break;
            residual = q;
            ++mult;
        }
        ensure(mult > 0, "candidate root does not divide");
        report.roots.emplace_back(r, mult);
    }
    report.residual = residual;
    return report;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::x(std::uint32_t power) { return term(1, power, 0); }
BiPoly BiPoly::y(std::uint32_t power) { return term(1, 0, power); }

BiPoly BiPoly::term(const Rational& c, std::uint32_t a, std::uint32_t b) {
    BiPoly p;
    p.add_term(c, a, b);
    return p;
}

Rational BiPoly::coeff(std::uint32_t a, std::uint32_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Rational& c, std::uint32_t a, std::uint32_t b) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint32_t BiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.a + e.b);
    return d;
}

std::uint32_t BiPoly::degree_x() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.a);
    return d;
}

std::uint32_t BiPoly::degree_y() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.b);
    return d;
}

std::uint32_t BiPoly::x_order() const {
    if (terms_.empty()) return 0;
    std::uint32_t k = UINT32_MAX;
    for (const auto& [e, c] : terms_) k = std::min(k, e.a);
    return k;
}

std::uint32_t BiPoly::y_order() const {
    if (terms_.empty()) return 0;
    std::uint32_t k = UINT32_MAX;
    for (const auto& [e, c] : terms_) k = std::min(k, e.b);
    return k;
}

BiPoly BiPoly::divide_by_x_power(std::uint32_t k) const {
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        ensure(e.a >= k, "x-power does not divide");
        out.terms_.emplace(Exponent{e.a - k, e.b}, c);
    }
    return out;
}

BiPoly BiPoly::derivative_y() const {
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.b > 0) out.add_term(c * static_cast<unsigned long>(e.b), e.a, e.b - 1);
    return out;
}

BiPoly BiPoly::swapped() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.b, e.a}, c);
    return out;
}

BiPoly BiPoly::compose(const BiPoly& px, const BiPoly& py) const {
    std::vector<BiPoly> xs{BiPoly(1)}, ys{BiPoly(1)};
    for (std::uint32_t i = 0; i < degree_x(); ++i) xs.push_back(xs.back() * px);
    for (std::uint32_t i = 0; i < degree_y(); ++i) ys.push_back(ys.back() * py);
    BiPoly out;
    for (const auto& [e, c] : terms_) out = out + c * (xs[e.a] * ys[e.b]);
    return out;
}

UniPoly BiPoly::restrict_x0() const {
    std::vector<Rational> v(degree_y() + 1);
    for (const auto& [e, c] : terms_)
        if (e.a == 0) v[e.b] = c;
    return UniPoly(std::move(v));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(c, e.a, e.b);
    return out;
}

BiPoly BiPoly::operator-() const { return Rational(-1) * *this; }

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea.a + eb.a, ea.b + eb.b);
    return out;
}

BiPoly operator*(const Rational& c, const BiPoly& a) {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [e, v] : a.terms_) out.terms_.emplace(e, v * c);
    return out;
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly result(1), base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        std::uint32_t dl = l.first.a + l.first.b, dr = r.first.a + r.first.b;
        if (dl != dr) return dl < dr;
        return l.first.a > r.first.a;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (mag != 1 || (e.a == 0 && e.b == 0)) factors.push_back(mag.get_str());
        if (e.a > 0) factors.push_back(e.a == 1 ? "x" : "x^" + std::to_string(e.a));
        if (e.b > 0) factors.push_back(e.b == 1 ? "y" : "y^" + std::to_string(e.b));
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

// ------------------------------------------------- gcd over Q[x][y]

namespace {

using YPoly = std::vector<UniPoly>;  // index = y-degree, entries in Q[x]

YPoly to_y(const BiPoly& f) {
    YPoly out(f.is_zero() ? 0 : f.degree_y() + 1);
    std::vector<std::vector<Rational>> dense(out.size());
    for (const auto& [e, c] : f.terms()) {
        auto& row = dense[e.b];
        if (row.size() <= e.a) row.resize(e.a + 1);
        row[e.a] = c;
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = UniPoly(std::move(dense[i]));
    return out;
}

BiPoly from_y(const YPoly& p) {
    BiPoly out;
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t a = 0; a < p[b].coeffs().size(); ++a)
            out.add_term(p[b].coeffs()[a], static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    return out;
}

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly content(const YPoly& p) {
    UniPoly g;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

YPoly primitive(const YPoly& p) {
    UniPoly c = content(p);
    YPoly out;
    for (const auto& coef : p) out.push_back(divide_exact(coef, c));
    return out;
}

YPoly pseudo_remainder(YPoly r, const YPoly& b) {
    const UniPoly& lb = b.back();
    const std::size_t db = b.size() - 1;
    trim(r);
    while (!r.empty() && r.size() - 1 >= db) {
        UniPoly lr = r.back();
        std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c = lb * c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - lr * b[i];
        trim(r);
    }
    return r;
}

BiPoly normalise(const BiPoly& f) {
    if (f.is_zero()) return f;
    // leading term: highest y-degree, then highest x-degree
    Exponent lead{0, 0};
    bool found = false;
    for (const auto& [e, c] : f.terms()) {
        if (!found || e.b > lead.b || (e.b == lead.b && e.a > lead.a)) lead = e;
        found = true;
    }
    return (1 / f.coeff(lead.a, lead.b)) * f;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalise(b);
    if (b.is_zero()) return normalise(a);
    YPoly ya = to_y(a), yb = to_y(b);
    UniPoly cont = gcd(content(ya), content(yb));
    YPoly pa = primitive(ya), pb = primitive(yb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
        YPoly r = pseudo_remainder(pa, pb);
        pa = std::move(pb);
        pb = r.empty() ? YPoly{} : primitive(r);
    }
    YPoly g = pa.size() <= 1 ? YPoly{UniPoly::constant(1)} : primitive(pa);
    for (auto& c : g) c = cont * c;
    return normalise(from_y(g));
}

BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
    ensure(!b.is_zero(), "division by zero polynomial");
    YPoly r = to_y(a), yb = to_y(b);
    const std::size_t db = yb.size() - 1;
    YPoly q(r.size() >= yb.size() ? r.size() - db : 0);
    trim(r);
    while (!r.empty() && r.size() - 1 >= db) {
        std::size_t shift = r.size() - 1 - db;
        UniPoly t = divide_exact(r.back(), yb.back());
        q[shift] = t;
        for (std::size_t i = 0; i < yb.size(); ++i) r[i + shift] = r[i + shift] - t * yb[i];
        trim(r);
    }
    ensure(r.empty(), "inexact bivariate division");
    return from_y(q);
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(std::vector<BiPoly> generators) {
    for (auto& g : generators)
        if (!g.is_zero()) gens_.push_back(std::move(g));
    if (gens_.empty()) throw Error(ErrorKind::EmptyIdeal, "ideal has no nonzero generator");
}

bool Ideal::is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const BiPoly& g) { return g.constant_term() != 0; });
}

void Ideal::require_proper() const {
    if (is_unit()) throw Error(ErrorKind::UnitIdeal, "a generator has nonzero constant term: " + str());
}

std::uint32_t Ideal::x_order() const {
    std::uint32_t k = UINT32_MAX;
    for (const auto& g : gens_) k = std::min(k, g.x_order());
    return k;
}

std::uint32_t Ideal::y_order() const {
    std::uint32_t k = UINT32_MAX;
    for (const auto& g : gens_) k = std::min(k, g.y_order());
    return k;
}

Ideal Ideal::divide_by_x_power(std::uint32_t k) const {
    std::vector<BiPoly> out;
    for (const auto& g : gens_) out.push_back(g.divide_by_x_power(k));
    return Ideal(std::move(out));
}

Ideal Ideal::swapped() const {
    std::vector<BiPoly> out;
    for (const auto& g : gens_) out.push_back(g.swapped());
    return Ideal(std::move(out));
}

Ideal Ideal::map(const BiPoly& px, const BiPoly& py) const {
    std::vector<BiPoly> out;
    for (const auto& g : gens_) out.push_back(g.compose(px, py));
    return Ideal(std::move(out));
}

std::uint32_t Ideal::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.total_degree());
    return d;
}

std::string Ideal::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + "]";
}

// ---------------------------------------------------------- Newton maps

NewtonMapSpec NewtonMapSpec::canonical(unsigned p, unsigned q, const Rational& mu) {
    NewtonMapSpec m;
    m.p = p;
    m.q = q;
    m.mu = mu;
    for (unsigned pp = 0; pp <= q; ++pp) {
        // p*pp - 1 must be a nonnegative multiple of q with quotient < p
        unsigned long lhs = static_cast<unsigned long>(p) * pp;
        if (lhs >= 1 && (lhs - 1) % q == 0 && (lhs - 1) / q < p) {
            m.p_prime = pp;
            m.q_prime = static_cast<unsigned>((lhs - 1) / q);
            return m;
        }
    }
    throw Error(ErrorKind::InvalidInput, "p and q are not coprime");
}

bool NewtonMapSpec::valid() const {
    long lhs = static_cast<long>(p) * p_prime - static_cast<long>(q) * q_prime;
    return p >= 1 && q >= 1 && lhs == 1 && mu != 0;
}

BiPoly substitute_newton(const BiPoly& f, const NewtonMapSpec& m) {
    ensure(m.valid(), "invalid Newton map");
    const Rational xs = rational_pow(m.mu, m.q_prime);
    const Rational shift = rational_pow(m.mu, m.p_prime);
    const BiPoly lin = BiPoly::y() + BiPoly(shift);
    std::vector<BiPoly> lin_pows{BiPoly(1)};
    std::vector<Rational> xs_pows{Rational(1)};
    for (std::uint32_t i = 0; i < f.degree_y(); ++i) lin_pows.push_back(lin_pows.back() * lin);
    for (std::uint32_t i = 0; i < f.degree_x(); ++i) xs_pows.push_back(xs_pows.back() * xs);
    BiPoly out;
    for (const auto& [e, c] : f.terms()) {
        const std::uint32_t xpow = m.p * e.a + m.q * e.b;
        const Rational scale = c * xs_pows[e.a];
        for (const auto& [le, lc] : lin_pows[e.b].terms()) out.add_term(scale * lc, xpow, le.b);
    }
    return out;
}

// --------------------------------------------------- depth-zero detection

BranchAnalysis local_branch_analysis(const BiPoly& f) {
    ensure(!f.is_zero(), "branch analysis of zero polynomial");
    BranchAnalysis out;
    out.k = f.x_order();
    out.e = f.divide_by_x_power(out.k);
    out.nu = static_cast<std::uint32_t>(out.e.restrict_x0().low_order());
    if (out.nu == 0) {
        out.smooth_power = true;
        return out;
    }
    BiPoly s = divide_exact(out.e, gcd(out.e, out.e.derivative_y()));
    out.smooth_power = s.restrict_x0().low_order() == 1;
    return out;
}

namespace {

// f(c, y) as a polynomial in y
UniPoly specialize_x(const BiPoly& f, const Rational& c) {
    std::vector<Rational> coeffs(f.degree_y() + 1);
    for (const auto& [e, v] : f.terms()) coeffs[e.b] += v * rational_pow(c, e.a);
    return UniPoly(std::move(coeffs));
}

// Leading y-coefficient of f as a polynomial in x.
UniPoly leading_y_coeff(const BiPoly& f) {
    std::vector<Rational> coeffs(f.degree_x() + 1);
    for (const auto& [e, v] : f.terms())
        if (e.b == f.degree_y()) coeffs[e.a] += v;
    return UniPoly(std::move(coeffs));
}

// True when the generators of the stripped ideal share no factor involving y. Specialising at an
// x = c where no leading y-coefficient vanishes keeps the y-degree of any common factor.
bool coprime_in_y(const Ideal& stripped) {
    for (long c = 1;; ++c) {
        bool good = true;
        for (const auto& g : stripped.generators())
            if (g.degree_y() > 0 && leading_y_coeff(g).eval(Rational(c)) == 0) good = false;
        if (!good) continue;
        UniPoly acc;
        for (const auto& g : stripped.generators()) {
            acc = gcd(acc, specialize_x(g, Rational(c)));
            if (acc.degree() == 0) return true;
        }
        return false;
    }
}

}  // namespace

std::optional<DepthZeroForm> depth_zero_form(const Ideal& ideal) {
    ideal.require_proper();
    {
        // a non-unit stripped ideal whose generators only share a unit of Q[[x]] is not principal
        Ideal stripped = ideal.divide_by_x_power(ideal.x_order());
        if (!stripped.is_unit() && coprime_in_y(stripped)) return std::nullopt;
    }
    BiPoly d;
    for (const auto& g : ideal.generators()) d = gcd(d, g);
    if (d.terms().size() == 1 && d.constant_term() != 0) return std::nullopt;
    bool principal = false;
    for (const auto& g : ideal.generators()) {
        if (divide_exact(g, d).constant_term() != 0) {
            principal = true;
            break;
        }
    }
    if (!principal) return std::nullopt;
    BranchAnalysis br = local_branch_analysis(d);
    if (!br.smooth_power) return std::nullopt;
    return DepthZeroForm{br.k, br.nu};
}

}  // namespace nt
