#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zpoly {

using Int = mpz_class;
using Rat = mpq_class;

enum class Errc {
    ZeroPolynomial,
    DegenerateShape,
    NegativeRadicand,
    EmptyInterval,
    UnboundedRegion,
    TooFat,
    DegreeTooHigh,
    ZeroLeadingSlice,
    NotHomogeneous,
    NotTranslatable,
    ZeroFunction,
    NotCubicForm,
    NotPositive,
    Unsupported,
    TooLarge,
    ParseError,
    Internal,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Rat helpers. gmpxx keeps results canonical; rat() canonicalizes explicitly.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& s);
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
int sgn(const Rat& r);
int sgn(const Int& r);
std::string to_string(const Rat& r);
std::string to_string(const Int& r);
Rat abs_rat(const Rat& r);
Rat pow_rat(const Rat& r, unsigned k);
Int pow_int(const Int& r, unsigned k);

// Sign of a + b*sqrt(c) for c >= 0, exactly.
int sign_quadratic(const Rat& a, const Rat& b, const Rat& c);

// Simplest rational strictly inside (lo, hi); lo < hi.
Rat simplest_between(const Rat& lo, const Rat& hi);

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, int k);
    static UniPoly x();

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const;
    const Rat& lead() const { return c_.back(); }

    Rat operator()(const Rat& x) const;
    int sign_at(const Rat& x) const;

    UniPoly derivative() const;
    // Positive multiple with coprime integer coefficients.
    UniPoly primitive() const;
    UniPoly monic() const;
    UniPoly compose(const UniPoly& inner) const;
    // p(a*x + b).
    UniPoly affine(const Rat& a, const Rat& b) const;
    Rat abs_sum() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rat& s, const UniPoly& a);
UniPoly pow(const UniPoly& a, unsigned k);
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

bool is_zero_poly(const UniPoly& p);

struct RootInterval {
    Rat lo;
    Rat hi;
    int multiplicity_hint = 1;

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
};

// Sturm chain of a squarefree polynomial; counts distinct roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const UniPoly& sqf);
    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    int count(const Rat& a, const Rat& b) const { return variations_at(a) - variations_at(b); }
    int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
    std::vector<UniPoly> seq_;
};

// Isolating intervals of the distinct real roots, sorted, each narrower than eps.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& eps);
// Only the roots in [lo, hi]; intervals may stick out of the window by less than 1.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& eps, const Rat& lo, const Rat& hi);
// Fujiwara bound: every real root has |x| < root_radius(p).
Rat root_radius(const UniPoly& p);

// Shrink an isolating interval of a root of the squarefree polynomial sqf.
void refine_root(const UniPoly& sqf, RootInterval& iv, const Rat& eps);

// The root inside iv when it is rational, else nullopt. sqf must be squarefree.
std::optional<Rat> rational_root_in(const UniPoly& sqf, const RootInterval& iv);

// Sign of p at the unique root of the squarefree sqf inside iv.
int sign_at_root(const UniPoly& p, const UniPoly& sqf, RootInterval iv);

// Bounds lower < |x| < upper for every nonzero real root x.
std::pair<Rat, Rat> root_bounds(const UniPoly& p);

Rat approx_sqrt(const Rat& r, const Rat& eps);

// Sign of p at the midpoint of the integer interval [lo, hi].
int sign_on_interval(const UniPoly& p, const Int& lo, const Int& hi);

class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rat>;

    BiPoly() = default;
    explicit BiPoly(Terms t);

    static BiPoly constant(const Rat& c);
    static BiPoly monomial(const Rat& c, int i, int j);
    static BiPoly x();
    static BiPoly y();
    // a*x + b*y + c
    static BiPoly linear(const Rat& a, const Rat& b, const Rat& c);

    const Terms& terms() const { return t_; }
    void add_term(int i, int j, const Rat& c);
    Rat coeff(int i, int j) const;
    bool is_zero() const { return t_.empty(); }
    int degree() const;
    int deg_x() const;
    int deg_y() const;
    bool is_homogeneous() const;
    BiPoly homogeneous_part(int k) const;

    Rat operator()(const Rat& x, const Rat& y) const;

    BiPoly dx() const;
    BiPoly dy() const;
    BiPoly swap_xy() const;
    // Coefficients f_i(x) with f = sum f_i(x) y^i.
    std::vector<UniPoly> y_slices() const;
    UniPoly at_x(const Rat& x) const;
    UniPoly at_y(const Rat& y) const;
    // t -> f(x0 + t*dx, y0 + t*dy)
    UniPoly along(const Rat& x0, const Rat& y0, const Rat& dx, const Rat& dy) const;
    Rat abs_sum() const;
    // Positive scale L with L*f having coprime integer coefficients.
    Rat integer_scale() const;
    bool has_integer_coeffs() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    Terms t_;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Rat& s, const BiPoly& a);
BiPoly pow(const BiPoly& a, unsigned k);

// g(u, v) = f(m11*u + m12*v + t1, m21*u + m22*v + t2)
BiPoly substitute_affine(const BiPoly& f, const Rat& m11, const Rat& m12, const Rat& m21,
                         const Rat& m22, const Rat& t1, const Rat& t2);

// Evaluates a fixed polynomial at integer points with integer arithmetic.
class PointEval {
public:
    PointEval() = default;
    explicit PointEval(const BiPoly& f);
    Rat operator()(const Int& x, const Int& y) const;
    // Scaled value L*f(x, y), an integer.
    Int scaled(const Int& x, const Int& y) const;
    const Int& scale() const { return scale_; }

private:
    Int scale_ = 1;
    std::vector<std::vector<Int>> rows_;  // rows_[j][i] = coefficient of x^i y^j
};

}  // namespace zpoly
