#include "zpoly/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace zpoly {

const char* errc_name(Errc e) {
    switch (e) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegenerateShape: return "DegenerateShape";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::EmptyInterval: return "EmptyInterval";
    case Errc::UnboundedRegion: return "UnboundedRegion";
    case Errc::TooFat: return "TooFat";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::ZeroLeadingSlice: return "ZeroLeadingSlice";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotTranslatable: return "NotTranslatable";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::NotCubicForm: return "NotCubicForm";
    case Errc::NotPositive: return "NotPositive";
    case Errc::Unsupported: return "Unsupported";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+') t.push_back(ch);
    if (t.empty()) throw Error(Errc::ParseError, "empty number");
    auto slash = t.find('/');
    auto check = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        size_t i = 0;
        if (allow_sign && part[0] == '-') i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check(t, true)) throw Error(Errc::ParseError, "not an integer: " + s);
        return Rat(Int(t));
    }
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!check(n, true) || !check(d, false)) throw Error(Errc::ParseError, "not a rational: " + s);
    Int den(d);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator: " + s);
    return rat(Int(n), den);
}

Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
int sgn(const Int& r) { return mpz_sgn(r.get_mpz_t()); }

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& r) { return r.get_str(); }

Rat abs_rat(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

Rat pow_rat(const Rat& r, unsigned k) {
    Rat out(1);
    for (unsigned i = 0; i < k; ++i) out *= r;
    return out;
}

Int pow_int(const Int& r, unsigned k) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), r.get_mpz_t(), k);
    return out;
}

int sign_quadratic(const Rat& a, const Rat& b, const Rat& c) {
    int sa = sgn(a), sb = sgn(b);
    if (sgn(c) == 0 || sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 c
    Rat lhs = a * a, rhs = b * b * c;
    int cmpv = cmp(lhs, rhs);
    if (cmpv == 0) return 0;
    return cmpv > 0 ? sa : sb;
}

namespace {

// Simplest rational in (lo, hi) with 0 <= lo; hi_inf marks hi = +infinity.
Rat simplest_nonneg(const Rat& lo, const Rat& hi, bool hi_inf) {
    Int fl = floor_rat(lo);
    Int n = fl + 1;
    if (hi_inf || Rat(n) < hi) return Rat(n);
    Rat frac_lo = lo - Rat(fl);
    Rat frac_hi = hi - Rat(fl);
    Rat inner;
    if (sgn(frac_lo) == 0)
        inner = simplest_nonneg(1 / frac_hi, Rat(0), true);
    else
        inner = simplest_nonneg(1 / frac_hi, 1 / frac_lo, false);
    return Rat(fl) + 1 / inner;
}

}  // namespace

Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (!(lo < hi)) throw Error(Errc::EmptyInterval, "simplest_between needs lo < hi");
    if (sgn(lo) < 0 && sgn(hi) > 0) return Rat(0);
    if (sgn(lo) >= 0) return simplest_nonneg(lo, hi, false);
    return -simplest_nonneg(-hi, -lo, false);
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<size_t>(k) + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::x() { return monomial(Rat(1), 1); }

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

Rat UniPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

int UniPoly::sign_at(const Rat& x) const {
    for (const auto& v : c_)
        if (v.get_den() != 1) return sgn((*this)(x));
    // integer coefficients: sign of sum c_i n^i d^(k-i)
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    Int acc(0), dp(1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= n;
        acc += it->get_num() * dp;
        dp *= d;
    }
    return sgn(acc);
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::primitive() const {
    if (c_.empty()) return *this;
    Int l = 1, g = 0;
    for (const auto& v : c_) {
        if (sgn(v) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<Rat> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        out[i] = c_[i] * Rat(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_num_mpz_t());
    }
    for (auto& v : out) v /= Rat(g);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    Rat l = c_.back();
    std::vector<Rat> out(c_);
    for (auto& v : out) v /= l;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

UniPoly UniPoly::affine(const Rat& a, const Rat& b) const {
    return compose(UniPoly(std::vector<Rat>{b, a}));
}

Rat UniPoly::abs_sum() const {
    Rat s(0);
    for (const auto& v : c_) s += abs_rat(v);
    return s;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& v = c_[i];
        if (sgn(v) == 0) continue;
        Rat a = abs_rat(v);
        if (first)
            os << (sgn(v) < 0 ? "-" : "");
        else
            os << (sgn(v) < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Rat> out(std::max(x.size(), y.size()));
    for (size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<Rat> out(a.coeffs());
    for (auto& v : out) v = -v;
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Rat> out(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rat& s, const UniPoly& a) {
    if (sgn(s) == 0) return UniPoly();
    std::vector<Rat> out(a.coeffs());
    for (auto& v : out) v *= s;
    return UniPoly(std::move(out));
}

UniPoly pow(const UniPoly& a, unsigned k) {
    UniPoly out = UniPoly::constant(Rat(1));
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "division by zero polynomial");
    std::vector<Rat> r(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rat> q(static_cast<size_t>(a.degree() - db) + 1);
    const Rat& lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(r[i]) == 0) continue;
        Rat f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p;
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divmod(p, g).first;
}

bool is_zero_poly(const UniPoly& p) {
    for (const auto& v : p.coeffs())
        if (sgn(v) != 0) return false;
    return true;
}

// ---------------------------------------------------------------- roots

SturmChain::SturmChain(const UniPoly& sqf) {
    if (sqf.is_zero()) return;
    seq_.push_back(sqf.primitive());
    if (sqf.degree() == 0) return;
    seq_.push_back(sqf.derivative().primitive());
    while (seq_.back().degree() > 0) {
        UniPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back((-r).primitive());
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) {
        int v = sgn(p.lead());
        s.push_back(p.degree() % 2 == 0 ? v : -v);
    }
    return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sgn(p.lead()));
    return count_variations(s);
}

namespace {

// Multiplicities through a squarefree factorisation p = prod a_k^k.
std::vector<std::pair<UniPoly, int>> yun(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly dp = p.derivative();
    UniPoly b = gcd(p, dp);
    UniPoly c = divmod(p, b).first;
    UniPoly d = divmod(dp, b).first - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = divmod(c, a).first;
        d = divmod(d, a).first - c.derivative();
        ++i;
    }
    return out;
}

}  // namespace

Rat root_radius(const UniPoly& p) {
    if (p.degree() < 1) return Rat(1);
    int n = p.degree();
    Rat lead = abs_rat(p.lead());
    Int best(1);
    for (int k = 1; k <= n; ++k) {
        Rat ratio = abs_rat(p.coeff(n - k)) / lead;
        if (sgn(ratio) == 0) continue;
        if (k == n) ratio /= 2;
        // ceil of the k-th root of ratio
        Int c = ceil_rat(ratio), r;
        mpz_root(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
        if (pow_int(r, static_cast<unsigned>(k)) < c) ++r;
        if (r > best) best = r;
    }
    return Rat(2 * best + 1);
}

namespace {

std::vector<RootInterval> isolate_window(const UniPoly& p, const Rat& eps, std::optional<std::pair<Rat, Rat>> win) {
    if (is_zero_poly(p)) throw Error(Errc::ZeroPolynomial, "isolate_roots of the zero polynomial");
    if (sgn(eps) <= 0) throw Error(Errc::Internal, "isolate_roots needs eps > 0");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    UniPoly sqf = squarefree_part(p).primitive();
    SturmChain chain(sqf);
    if (chain.count_all() == 0) return out;

    Rat big = root_radius(sqf);
    Rat a0 = -big, b0 = big;
    if (win) {
        // shift window ends off integers so they are unlikely to be roots
        a0 = std::max<Rat>(a0, floor_rat(win->first) - rat(1, 3));
        b0 = std::min<Rat>(b0, ceil_rat(win->second) + rat(1, 3));
        if (a0 >= b0) return out;
        if (sqf.sign_at(a0) == 0) a0 -= rat(1, 7);
        if (sqf.sign_at(b0) == 0) b0 += rat(1, 7);
    }
    Rat big_lo = a0, big_hi = b0;

    struct Item {
        Rat a, b;
        int cnt;
    };
    std::vector<Item> stack;
    stack.push_back({big_lo, big_hi, chain.count(big_lo, big_hi)});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.cnt == 0) continue;
        if (it.cnt == 1 && it.b - it.a < eps) {
            out.push_back({it.a, it.b, 1});
            continue;
        }
        if (it.cnt == 1 && sqf.sign_at(it.a) * sqf.sign_at(it.b) < 0) {
            RootInterval iv{it.a, it.b, 1};
            refine_root(sqf, iv, eps);
            out.push_back(iv);
            continue;
        }
        Rat m = (it.a + it.b) / 2;
        if (sqf.sign_at(m) == 0) {
            Rat w = std::min<Rat>(eps, it.b - it.a) / 4;
            out.push_back({m - w, m + w, 1});
            Rat lo = m - w, hi = m + w;
            int cl = chain.count(it.a, lo);
            int cr = chain.count(hi, it.b);
            if (cl) stack.push_back({it.a, lo, cl});
            if (cr) stack.push_back({hi, it.b, cr});
            continue;
        }
        int cl = chain.count(it.a, m);
        int cr = it.cnt - cl;
        if (cl) stack.push_back({it.a, m, cl});
        if (cr) stack.push_back({m, it.b, cr});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& u, const RootInterval& v) { return u.lo < v.lo; });

    if (sqf.degree() != p.degree()) {
        auto parts = yun(p);
        for (auto& iv : out) {
            for (const auto& [a, k] : parts) {
                if (a.sign_at(iv.lo) * a.sign_at(iv.hi) < 0) {
                    iv.multiplicity_hint = k;
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& eps) { return isolate_window(p, eps, std::nullopt); }

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& eps, const Rat& lo, const Rat& hi) {
    return isolate_window(p, eps, std::make_pair(lo, hi));
}

void refine_root(const UniPoly& sqf, RootInterval& iv, const Rat& eps) {
    int slo = sqf.sign_at(iv.lo);
    while (!(iv.hi - iv.lo < eps)) {
        Rat m = iv.mid();
        int sm = sqf.sign_at(m);
        if (sm == 0) {
            Rat w = (iv.hi - iv.lo) / 4;
            iv.lo = m - w;
            iv.hi = m + w;
            slo = sqf.sign_at(iv.lo);
        } else if (sm == slo) {
            iv.lo = m;
        } else {
            iv.hi = m;
        }
    }
}

std::optional<Rat> rational_root_in(const UniPoly& sqf, const RootInterval& iv) {
    UniPoly q = sqf.primitive();
    if (q.degree() <= 0) return std::nullopt;
    Int an = abs(q.lead().get_num());
    RootInterval w = iv;
    refine_root(q, w, Rat(1) / Rat(2 * an * an));
    Rat cand = simplest_between(w.lo, w.hi);
    if (q.sign_at(cand) == 0) return cand;
    return std::nullopt;
}

int sign_at_root(const UniPoly& p, const UniPoly& sqf, RootInterval iv) {
    if (p.is_zero()) return 0;
    if (p.degree() == 0) return sgn(p.lead());
    UniPoly g = gcd(p, sqf);
    if (g.degree() > 0 && g.sign_at(iv.lo) * g.sign_at(iv.hi) < 0) return 0;
    UniPoly ps = squarefree_part(p).primitive();
    SturmChain chain(ps);
    while (true) {
        int a = ps.sign_at(iv.lo), b = ps.sign_at(iv.hi);
        if (a != 0 && b != 0 && chain.count(iv.lo, iv.hi) == 0) return p.sign_at(iv.mid());
        refine_root(sqf, iv, iv.width() / 2);
    }
}

std::pair<Rat, Rat> root_bounds(const UniPoly& p) {
    if (p.is_zero()) throw Error(Errc::DegenerateShape, "root_bounds of the zero polynomial");
    int m = 0;
    while (sgn(p.coeff(m)) == 0) ++m;
    int n = p.degree();
    if (m == n) throw Error(Errc::DegenerateShape, "root_bounds of a monomial");
    Rat am = abs_rat(p.coeff(m)), an = abs_rat(p.coeff(n));
    std::optional<Rat> lower;
    for (int i = m + 1; i <= n; ++i) {
        Rat v = am / (am + abs_rat(p.coeff(i)));
        if (!lower || v < *lower) lower = v;
    }
    Rat upper(0);
    for (int i = m; i < n; ++i) upper = std::max<Rat>(upper, abs_rat(p.coeff(i)) / an);
    return {*lower, upper + 1};
}

Rat approx_sqrt(const Rat& r, const Rat& eps) {
    if (sgn(r) < 0) throw Error(Errc::NegativeRadicand, "approx_sqrt of a negative number");
    if (sgn(eps) <= 0) throw Error(Errc::Internal, "approx_sqrt needs eps > 0");
    if (sgn(r) == 0) return Rat(0);
    if (mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t())) {
        Int a, b;
        mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
        return rat(a, b);
    }
    Int n = floor_rat(1 / eps) + 1;
    Int scaled = floor_rat(r * Rat(n * n));
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    return rat(s, n);
}

int sign_on_interval(const UniPoly& p, const Int& lo, const Int& hi) {
    if (lo > hi) throw Error(Errc::EmptyInterval, "sign_on_interval on an empty interval");
    return p.sign_at(Rat(lo + hi) / 2);
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(Terms t) {
    for (auto& [k, v] : t)
        if (sgn(v) != 0) t_.emplace(k, v);
}

BiPoly BiPoly::constant(const Rat& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

BiPoly BiPoly::x() { return monomial(Rat(1), 1, 0); }
BiPoly BiPoly::y() { return monomial(Rat(1), 0, 1); }

BiPoly BiPoly::linear(const Rat& a, const Rat& b, const Rat& c) {
    BiPoly p;
    p.add_term(1, 0, a);
    p.add_term(0, 1, b);
    p.add_term(0, 0, c);
    return p;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        t_.emplace(Key{i, j}, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

int BiPoly::degree() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
}

int BiPoly::deg_y() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
}

bool BiPoly::is_homogeneous() const {
    int d = degree();
    for (const auto& [k, v] : t_)
        if (k.first + k.second != d) return false;
    return true;
}

BiPoly BiPoly::homogeneous_part(int k) const {
    BiPoly out;
    for (const auto& [key, v] : t_)
        if (key.first + key.second == k) out.t_.emplace(key, v);
    return out;
}

Rat BiPoly::operator()(const Rat& x, const Rat& y) const {
    int dy = deg_y();
    if (dy < 0) return Rat(0);
    std::vector<Rat> rows(static_cast<size_t>(dy) + 1);
    std::vector<int> top(static_cast<size_t>(dy) + 1, -1);
    for (const auto& [k, v] : t_) top[k.second] = std::max(top[k.second], k.first);
    // Horner in x per power of y, then Horner in y.
    for (int j = 0; j <= dy; ++j) {
        Rat acc(0);
        for (int i = top[j]; i >= 0; --i) {
            acc *= x;
            auto it = t_.find({i, j});
            if (it != t_.end()) acc += it->second;
        }
        rows[j] = acc;
    }
    Rat acc(0);
    for (int j = dy; j >= 0; --j) {
        acc *= y;
        acc += rows[j];
    }
    return acc;
}

BiPoly BiPoly::dx() const {
    BiPoly out;
    for (const auto& [k, v] : t_)
        if (k.first > 0) out.add_term(k.first - 1, k.second, v * k.first);
    return out;
}

BiPoly BiPoly::dy() const {
    BiPoly out;
    for (const auto& [k, v] : t_)
        if (k.second > 0) out.add_term(k.first, k.second - 1, v * k.second);
    return out;
}

BiPoly BiPoly::swap_xy() const {
    BiPoly out;
    for (const auto& [k, v] : t_) out.t_.emplace(Key{k.second, k.first}, v);
    return out;
}

std::vector<UniPoly> BiPoly::y_slices() const {
    int dy = deg_y();
    std::vector<std::vector<Rat>> raw(static_cast<size_t>(std::max(dy, 0)) + 1);
    for (const auto& [k, v] : t_) {
        auto& r = raw[k.second];
        if (static_cast<int>(r.size()) <= k.first) r.resize(k.first + 1);
        r[k.first] += v;
    }
    std::vector<UniPoly> out;
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

UniPoly BiPoly::at_x(const Rat& x) const {
    int dy = deg_y();
    if (dy < 0) return UniPoly();
    std::vector<Rat> c(static_cast<size_t>(dy) + 1);
    for (const auto& [k, v] : t_) c[k.second] += v * pow_rat(x, k.first);
    return UniPoly(std::move(c));
}

UniPoly BiPoly::at_y(const Rat& y) const { return swap_xy().at_x(y); }

UniPoly BiPoly::along(const Rat& x0, const Rat& y0, const Rat& dx, const Rat& dy) const {
    int d = degree();
    if (d < 0) return UniPoly();
    UniPoly lx(std::vector<Rat>{x0, dx}), ly(std::vector<Rat>{y0, dy});
    std::vector<UniPoly> px{UniPoly::constant(Rat(1))}, py{UniPoly::constant(Rat(1))};
    for (int i = 1; i <= d; ++i) {
        px.push_back(px.back() * lx);
        py.push_back(py.back() * ly);
    }
    UniPoly out;
    for (const auto& [k, v] : t_) out = out + v * (px[k.first] * py[k.second]);
    return out;
}

Rat BiPoly::abs_sum() const {
    Rat s(0);
    for (const auto& [k, v] : t_) s += abs_rat(v);
    return s;
}

Rat BiPoly::integer_scale() const {
    if (t_.empty()) return Rat(1);
    Int l = 1, g = 0;
    for (const auto& [k, v] : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& [k, v] : t_) {
        Rat s = v * Rat(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
    }
    return rat(l, g);
}

bool BiPoly::has_integer_coeffs() const {
    for (const auto& [k, v] : t_)
        if (v.get_den() != 1) return false;
    return true;
}

std::string BiPoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first, then by x power
    std::vector<std::pair<Key, Rat>> items(t_.begin(), t_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    for (const auto& [k, v] : items) {
        Rat a = abs_rat(v);
        if (first)
            os << (sgn(v) < 0 ? "-" : "");
        else
            os << (sgn(v) < 0 ? " - " : " + ");
        first = false;
        bool mono = k.first + k.second > 0;
        if (!mono || a != 1) {
            os << a.get_str();
            if (mono) os << "*";
        }
        if (k.first > 0) {
            os << "x";
            if (k.first > 1) os << "^" << k.first;
            if (k.second > 0) os << "*";
        }
        if (k.second > 0) {
            os << "y";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [k, v] : b.terms()) out.add_term(k.first, k.second, v);
    return out;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly out;
    for (const auto& [k, v] : a.terms()) out.add_term(k.first, k.second, -v);
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly::Terms acc;
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms()) acc[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return BiPoly(std::move(acc));
}

BiPoly operator*(const Rat& s, const BiPoly& a) {
    BiPoly::Terms acc;
    for (const auto& [k, v] : a.terms()) acc[k] = v * s;
    return BiPoly(std::move(acc));
}

BiPoly pow(const BiPoly& a, unsigned k) {
    BiPoly out = BiPoly::constant(Rat(1));
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
}

BiPoly substitute_affine(const BiPoly& f, const Rat& m11, const Rat& m12, const Rat& m21,
                         const Rat& m22, const Rat& t1, const Rat& t2) {
    int d = f.degree();
    if (d < 0) return BiPoly();
    BiPoly l1 = BiPoly::linear(m11, m12, t1), l2 = BiPoly::linear(m21, m22, t2);
    std::vector<BiPoly> p1{BiPoly::constant(Rat(1))}, p2{BiPoly::constant(Rat(1))};
    for (int i = 1; i <= d; ++i) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BiPoly::Terms acc;
    for (const auto& [k, v] : f.terms()) {
        BiPoly prod = p1[k.first] * p2[k.second];
        for (const auto& [kk, vv] : prod.terms()) acc[kk] += v * vv;
    }
    return BiPoly(std::move(acc));
}

// ---------------------------------------------------------------- PointEval

PointEval::PointEval(const BiPoly& f) {
    // integer_scale is L/g; L alone also clears every denominator
    scale_ = f.integer_scale().get_num();
    int dy = std::max(f.deg_y(), 0);
    rows_.assign(static_cast<size_t>(dy) + 1, {});
    for (const auto& [k, v] : f.terms()) {
        auto& r = rows_[k.second];
        if (static_cast<int>(r.size()) <= k.first) r.resize(k.first + 1, Int(0));
        Rat c = v * Rat(scale_);
        r[k.first] = c.get_num();
    }
}

Int PointEval::scaled(const Int& x, const Int& y) const {
    Int acc = 0;
    for (auto j = rows_.size(); j-- > 0;) {
        Int row = 0;
        const auto& r = rows_[j];
        for (auto i = r.size(); i-- > 0;) {
            row *= x;
            row += r[i];
        }
        acc *= y;
        acc += row;
    }
    return acc;
}

Rat PointEval::operator()(const Int& x, const Int& y) const { return rat(scaled(x, y), scale_); }

}  // namespace zpoly
