#include "zpoly/cubic_unbounded.hpp"

#include <algorithm>

namespace zpoly {

namespace {

Int binom(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

Int norm_inf(const Point2& p) { return std::max<Int>(abs(p.x), abs(p.y)); }

bool is_square(const Rat& t, Rat& root) {
    if (sgn(t) < 0) return false;
    Int n = t.get_num(), d = t.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rat(rn, rd);
    root.canonicalize();
    return true;
}

// Ceiling of the largest real root, if any.
std::optional<Int> top_root_ceil(const UniPoly& p) {
    if (p.degree() < 1) return std::nullopt;
    auto roots = isolate_roots(p, Rat(1));
    if (roots.empty()) return std::nullopt;
    return ceil_rat(roots.back().hi);
}

// Scale (a, b) to a primitive integer vector whose first nonzero entry is positive.
std::pair<Rat, Rat> primitive_form(const Rat& a, const Rat& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Int ia = Rat(a * l).get_num(), ib = Rat(b * l).get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    ia /= g;
    ib /= g;
    if (ia < 0 || (ia == 0 && ib < 0)) {
        ia = -ia;
        ib = -ib;
    }
    return {Rat(ia), Rat(ib)};
}

Point2 primitive_int(const Point2& p) { return primitive_direction({Rat(p.x), Rat(p.y)}); }

// Lower bound for the minimum of p on [0, 1], at least as good as positive_floor_on_segment.
Rat segment_floor(const UniPoly& p) {
    Rat m = positive_floor_on_segment(p);
    Rat best = std::min<Rat>(p(Rat(0)), p(Rat(1)));
    UniPoly dp = p.derivative();
    if (dp.degree() < 1) return std::max<Rat>(m, best);
    UniPoly sq = squarefree_part(dp);
    Rat m1 = dp.abs_sum();  // bounds |p'| on [0, 1]
    for (auto iv : isolate_roots(sq, rat(1, 16))) {
        if (iv.hi < 0 || iv.lo > 1) continue;
        for (int it = 0; it < 64; ++it) {
            Rat a = std::max<Rat>(iv.lo, Rat(0)), b = std::min<Rat>(iv.hi, Rat(1));
            Rat w = b - a;
            if (sgn(w) <= 0 || m1 * w * 4 <= std::min<Rat>(p(a), p(b))) break;
            refine_root(sq, iv, iv.width() / 4);
        }
        Rat a = std::max<Rat>(iv.lo, Rat(0)), b = std::min<Rat>(iv.hi, Rat(1));
        if (a > b) continue;
        best = std::min<Rat>(best, std::min<Rat>(p(a), p(b)) - m1 * (b - a));
    }
    return std::max<Rat>(m, best);
}

// ---------------------------------------------------------------- column engine

// Lattice frame x = u z + v w with |det(z, w)| = 1.
struct Frame {
    Point2 z, w;
    Point2 at(const Int& u, const Int& v) const { return {u * z.x + v * w.x, u * z.y + v * w.y}; }
};

struct Lower {
    Rat slope, icpt;  // u >= slope * v + icpt
};

struct PieceResult {
    SolveOutcome out;
    Int radius{0};
    long pieces = 0;
};

// A pointed piece whose recession cone is cone{z, o} with z extreme. Each column v is a ray u >= l(v)
// in direction z; columns are minimized exactly and a polynomial growth bound ends the sweep.
class ColumnEngine {
public:
    ColumnEngine(const BiPoly& f, const Polyhedron2& piece, const Point2& z, const Point2& o) : f_(f) {
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), z.x.get_mpz_t(), z.y.get_mpz_t());
        if (g != 1) throw Error(Errc::Internal, "recession ray is not primitive");
        fr_.z = z;
        fr_.w = {-t, s};  // det(z, w) = 1
        if (sgn(cross(z, o)) < 0) fr_.w = {t, -s};
        F_ = substitute_affine(f, Rat(fr_.z.x), Rat(fr_.w.x), Rat(fr_.z.y), Rat(fr_.w.y), 0, 0);
        auto sl = F_.swap_xy().y_slices();
        sl.resize(4);
        G_ = sl;
        kstar_ = -1;
        for (int k = 3; k >= 0; --k)
            if (!G_[k].is_zero()) {
                kstar_ = k;
                break;
            }
        for (const auto& r : piece.rows()) {
            Rat au = r.a * Rat(z.x) + r.b * Rat(z.y);
            Rat av = r.a * Rat(fr_.w.x) + r.b * Rat(fr_.w.y);
            if (sgn(au) > 0) throw Error(Errc::Internal, "frame ray leaves the piece");
            if (sgn(au) < 0) {
                lower_.push_back({-av / au, r.c / au});
            } else if (sgn(av) > 0) {
                Rat b = r.c / av;
                if (!vhi_ || b < *vhi_) vhi_ = b;
            } else if (sgn(av) < 0) {
                Rat b = r.c / av;
                if (!vlo_ || b > *vlo_) vlo_ = b;
            } else if (sgn(r.c) < 0) {
                empty_ = true;
            }
        }
        if (!vlo_ || lower_.empty()) throw Error(Errc::Internal, "column frame of a non-pointed piece");
        // the line that wins for large v, and where it starts winning
        dom_ = 0;
        for (size_t i = 1; i < lower_.size(); ++i) {
            const auto &a = lower_[i], &b = lower_[dom_];
            if (a.slope > b.slope || (a.slope == b.slope && a.icpt > b.icpt)) dom_ = i;
        }
        v0_ = ceil_rat(*vlo_);
        for (const auto& l : lower_) {
            const auto& d = lower_[dom_];
            if (l.slope < d.slope) v0_ = std::max<Int>(v0_, ceil_rat((l.icpt - d.icpt) / (d.slope - l.slope)));
        }
    }

    PieceResult run(const Point2& o) {
        PieceResult res;
        res.pieces = 1;
        Int vl = ceil_rat(*vlo_);
        std::optional<Int> vh;
        if (vhi_) vh = floor_rat(*vhi_);
        if (empty_ || (vh && *vh < vl)) return res;
        if (!vh) {
            if (auto c = unbounded_column(vl)) {
                res.out = *c;
                return res;
            }
        }
        std::optional<Int> stop = vh;
        Int first_stop = vh ? *vh : std::max<Int>(vl, std::max<Int>(v0_, growth_start()));
        Rat stop_best;
        Int next_check;
        auto refresh = [&](const Int& v) {
            stop = sweep_end(o, res);
            stop_best = res.out.value;
            next_check = v + std::max<Int>(Int(16), v - vl);
        };
        for (Int v = vl;; ++v) {
            if (!vh && v > first_stop) {
                if (!stop) {
                    // probe columns at doubling offsets for a better incumbent, which shrinks the bound
                    refresh(v);
                    for (int round = 0; round < 8 && res.out.status == Status::Optimal; ++round) {
                        Rat before = res.out.value;
                        for (Int step(1); first_stop + step <= *stop; step *= 2)
                            if (auto c = column(first_stop + step, res.out)) {
                                res.out = *c;
                                return res;
                            }
                        if (!(res.out.value < before)) break;
                        refresh(v);
                    }
                } else if (v >= next_check && res.out.value < stop_best) {
                    refresh(v);
                }
                if (res.out.status == Status::Unbounded) return res;
            }
            if (stop && v > *stop) break;
            if (auto c = column(v, res.out)) {
                res.out = *c;
                return res;
            }
        }
        if (res.out.status == Status::Optimal) res.radius = radius(res.out, vl, *stop);
        return res;
    }

private:
    Rat ell(const Rat& v) const {
        Rat m = lower_[0].slope * v + lower_[0].icpt;
        for (const auto& l : lower_) m = std::max<Rat>(m, l.slope * v + l.icpt);
        return m;
    }

    // Leading u-coefficient negative on some column: f falls along z there.
    std::optional<SolveOutcome> unbounded_column(const Int& vl) const {
        if (kstar_ <= 0) return std::nullopt;
        const UniPoly& g = G_[kstar_];
        auto o = minimize_univariate(g, vl, std::nullopt);
        std::optional<Int> vbar;
        if (o.status == Status::Unbounded) {
            Int v = vl;
            if (auto r = top_root_ceil(g)) v = std::max<Int>(v, *r + 1);
            while (sgn(g(Rat(v))) >= 0) ++v;
            vbar = v;
        } else if (sgn(o.value) < 0) {
            vbar = o.point.x;
        }
        if (!vbar) return std::nullopt;
        return SolveOutcome::unbounded(fr_.at(ceil_rat(ell(Rat(*vbar))), *vbar), fr_.z);
    }

    // Columns beyond this one need the polynomial lower bounds below to be valid.
    Int growth_start() const {
        if (kstar_ == 2 && G_[2].degree() == 1) {
            // G2 > 0 strictly beyond its root
            Rat root = -G_[2].coeff(0) / G_[2].coeff(1);
            return floor_rat(root) + 1;
        }
        return v0_;
    }

    // Last column that can still reach the incumbent; every column past it is strictly worse.
    std::optional<Int> sweep_end(const Point2& o, PieceResult& res) const {
        if (res.out.status != Status::Optimal) throw Error(Errc::Internal, "no incumbent before the growth bound");
        const Rat& best = res.out.value;
        const auto& d = lower_[dom_];
        UniPoly lin({d.icpt, d.slope});
        Int v = std::max<Int>(v0_, growth_start());
        auto push = [&](const UniPoly& p) {
            if (p.degree() >= 1 && sgn(p.lead()) <= 0) throw Error(Errc::Internal, "lower bound does not grow");
            if (auto r = top_root_ceil(p)) v = std::max<Int>(v, *r);
        };
        UniPoly on_edge = F_.along(d.icpt, 0, d.slope, 1);  // F(l(v), v)
        switch (kstar_) {
            case 3: {
                // weighted l1 bound: with S = s + beta v, Gt >= hmin S^3 - K2 S^2 - K1 S - K0 and S >= beta v
                BiPoly gt = substitute_affine(F_, 1, d.slope, 0, 1, d.icpt, 0);
                std::optional<Int> vb;
                for (int e = -16; e <= 16; e += 2) {
                    Rat beta = e >= 0 ? Rat(Int(1) << e) : Rat(1, Int(1) << -e);
                    BiPoly gh = substitute_affine(gt, 1, 0, 0, 1 / beta, 0, 0);
                    Rat hmin = segment_floor(gh.homogeneous_part(3).along(0, 1, 1, -1));
                    Rat k2 = gh.homogeneous_part(2).abs_sum(), k1 = gh.homogeneous_part(1).abs_sum();
                    Rat k0 = gh.homogeneous_part(0).abs_sum();
                    UniPoly phi({-(k0 + best), -k1, -k2, hmin});
                    Int c = std::max<Int>(ceil_rat(Rat(Rat(top_root_ceil(phi).value_or(0)) / beta)), Int(0));
                    if (!vb || c < *vb) vb = c;
                }
                v = std::max<Int>(v, *vb);
                break;
            }
            case 2: {
                UniPoly dvert = UniPoly::constant(-1) * G_[1] - UniPoly::constant(2) * G_[2] * lin;
                if (!dvert.is_zero() && sgn(dvert.lead()) < 0) {
                    // vertex left of the boundary: the edge value is the column minimum
                    if (auto r = top_root_ceil(dvert)) v = std::max<Int>(v, *r);
                    push(on_edge - UniPoly::constant(best));
                } else {
                    UniPoly n = UniPoly::constant(4) * G_[0] * G_[2] - G_[1] * G_[1];
                    push(n - UniPoly::constant(4 * best) * G_[2]);
                }
                break;
            }
            case 1:
                push(on_edge - UniPoly::constant(best));
                break;
            default: {
                UniPoly g = G_[0] - UniPoly::constant(best);
                if (g.degree() >= 1 && sgn(g.lead()) < 0) {
                    // constant columns falling along o
                    Int vb = std::max<Int>(v, top_root_ceil(g).value_or(v) + 1);
                    while (sgn(g(Rat(vb))) >= 0) ++vb;
                    res.out = SolveOutcome::unbounded(fr_.at(ceil_rat(ell(Rat(vb))), vb), primitive_int(o));
                    return std::nullopt;
                }
                push(g);
            }
        }
        return v;
    }

    // Minimizes column v and merges it into best; returns a certificate when the column falls forever.
    std::optional<SolveOutcome> column(const Int& v, SolveOutcome& best) {
        UniPoly c = F_.at_y(Rat(v));
        Int lo = ceil_rat(ell(Rat(v)));
        if (c.degree() <= 0) {
            Rat val = c.is_zero() ? Rat(0) : c.coeff(0);
            best = better(best, SolveOutcome::optimal(fr_.at(lo, v), val));
            return std::nullopt;
        }
        if (sgn(c.lead()) < 0) return SolveOutcome::unbounded(fr_.at(lo, v), fr_.z);
        std::vector<Int> cand{lo};
        if (c.degree() >= 2)
            for (const auto& iv : isolate_roots(c.derivative(), rat(1, 2)))
                for (Int u = floor_rat(iv.lo); u <= ceil_rat(iv.hi); ++u)
                    if (u > lo) cand.push_back(u);
        for (const auto& u : cand) best = better(best, SolveOutcome::optimal(fr_.at(u, v), c(Rat(u))));
        return std::nullopt;
    }

    // Every lattice point of the piece with f below the optimum lies within this radius.
    Int radius(const SolveOutcome& best, const Int& vl, const Int& vh) const {
        Int r = norm_inf(best.point);
        for (Int v = vl; v <= vh; ++v) {
            UniPoly c = F_.at_y(Rat(v)) - UniPoly::constant(best.value);
            if (c.degree() <= 0) continue;  // constant column: no point strictly below
            auto roots = isolate_roots(c, Rat(1));
            if (roots.empty()) continue;
            Int lo = ceil_rat(ell(Rat(v)));
            Int hi = ceil_rat(roots.back().hi);
            if (hi < lo) continue;
            r = std::max<Int>(r, std::max<Int>(norm_inf(fr_.at(lo, v)), norm_inf(fr_.at(hi, v))));
        }
        return r;
    }

    BiPoly f_, F_;
    Frame fr_;
    std::vector<UniPoly> G_;
    int kstar_;
    std::vector<Lower> lower_;
    std::optional<Rat> vlo_, vhi_;
    bool empty_ = false;
    size_t dom_ = 0;
    Int v0_;
};

PieceResult run_engine(const BiPoly& f, const Polyhedron2& piece, const Point2& z, const Point2& o) {
    return ColumnEngine(f, piece, z, o).run(o);
}

// Extreme rays of a pointed, unbounded polyhedron, ordered so that cross(r1, r2) >= 0.
std::pair<Point2, Point2> extreme_rays(const Polyhedron2& p) {
    VRep v = vrep(p);
    std::vector<Point2> rays;
    for (const auto& r : v.rays) {
        Point2 q = primitive_direction(r);
        if (std::find(rays.begin(), rays.end(), q) == rays.end()) rays.push_back(q);
    }
    if (rays.empty()) throw Error(Errc::Internal, "unbounded piece without rays");
    Point2 r1 = rays[0], r2 = rays[0];
    for (const auto& q : rays) {
        if (sgn(cross(q, r1)) > 0) r1 = q;
        if (sgn(cross(r2, q)) > 0) r2 = q;
    }
    return {r1, r2};
}

Polyhedron2 with_row(Polyhedron2 p, const Rat& a, const Rat& b, const Rat& c) {
    p.add(a, b, c);
    return p;
}

// Case analysis of the cubic part h on the recession cone of a pointed piece.
PieceResult solve_pointed(const BiPoly& f, const Polyhedron2& piece) {
    BiPoly h = f.homogeneous_part(3);
    auto [r1, r2] = extreme_rays(piece);
    auto hval = [&](const Point2& r) { return h(Rat(r.x), Rat(r.y)); };
    auto case1 = [&](const Point2& ray) {
        PieceResult res;
        res.pieces = 1;
        auto xb = ilp_point(piece);
        if (!xb) return res;
        res.out = SolveOutcome::unbounded(*xb, ray);
        return res;
    };

    if (r1 == r2) {
        int s = sgn(hval(r1));
        if (s < 0) return case1(r1);
        return run_engine(f, piece, r1, r1);
    }

    // hbar(s) = h(s r1 + (1 - s) r2)
    UniPoly hbar = h.along(Rat(r2.x), Rat(r2.y), Rat(r1.x - r2.x), Rat(r1.y - r2.y));
    auto ray_at = [&](const Rat& s) {
        return primitive_direction({s * Rat(r1.x) + (1 - s) * Rat(r2.x), s * Rat(r1.y) + (1 - s) * Rat(r2.y)});
    };
    if (sgn(hbar(Rat(1))) < 0) return case1(r1);
    if (sgn(hbar(Rat(0))) < 0) return case1(r2);
    std::vector<RootInterval> inner;
    if (hbar.degree() >= 1) {
        UniPoly sq = squarefree_part(hbar);
        for (auto iv : isolate_roots(sq, rat(1, 8))) {
            bool at0 = sgn(sq(Rat(0))) == 0 && iv.lo <= 0 && iv.hi >= 0;
            bool at1 = sgn(sq(Rat(1))) == 0 && iv.lo <= 1 && iv.hi >= 1;
            if (at0 || at1) continue;
            Rat eps = iv.width() / 2;
            while ((iv.lo <= 0 && iv.hi >= 0) || (iv.lo <= 1 && iv.hi >= 1)) {
                refine_root(sq, iv, eps);
                eps /= 2;
            }
            if (iv.lo > 0 && iv.hi < 1) inner.push_back(iv);
        }
    }
    std::vector<Rat> samples;
    Rat prev(0);
    for (const auto& iv : inner) {
        samples.push_back((prev + iv.lo) / 2);
        prev = iv.hi;
    }
    samples.push_back((prev + 1) / 2);
    for (const auto& s : samples)
        if (sgn(hbar(s)) < 0) {
            Point2 rb = ray_at(s);
            if (sgn(hval(rb)) >= 0) throw Error(Errc::Internal, "negative sample lost on scaling");
            return case1(rb);
        }

    // h >= 0 on the cone: collect the zero rays in angular order
    std::vector<std::pair<Point2, bool>> keys;  // ray, is zero
    keys.push_back({r1, sgn(hval(r1)) == 0});
    if (!inner.empty()) {
        auto cls = classify_cubic_form(h);
        if (cls.kind != CubicFormKind::DoubleLine || inner.size() != 1)
            throw Error(Errc::Internal, "interior zero ray of a form that is not a double line");
        Point2 d = primitive_direction({-cls.b1, cls.a1});
        if (sgn(cross(r1, d)) <= 0) d = {-d.x, -d.y};
        if (sgn(cross(r1, d)) <= 0 || sgn(cross(d, r2)) <= 0 || sgn(hval(d)) != 0)
            throw Error(Errc::Internal, "double line misses the cone");
        keys.push_back({d, true});
    }
    keys.push_back({r2, sgn(hval(r2)) == 0});
    bool any_zero = false;
    for (const auto& k : keys) any_zero = any_zero || k.second;
    if (!any_zero) return run_engine(f, piece, r1, r2);

    std::vector<std::pair<Point2, bool>> bounds{keys[0]};
    for (size_t i = 1; i < keys.size(); ++i) {
        if (keys[i - 1].second && keys[i].second) {
            const auto &a = keys[i - 1].first, &b = keys[i].first;
            bounds.push_back({primitive_int({a.x + b.x, a.y + b.y}), false});
        }
        bounds.push_back(keys[i]);
    }
    PieceResult total;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        const auto &[a, za] = bounds[i];
        const auto &[b, zb] = bounds[i + 1];
        Polyhedron2 sub = piece;
        // left of a unless a is r1, right of b unless b is r2
        if (i > 0) sub.add(Rat(a.y), Rat(-a.x), 0);
        if (i + 2 < bounds.size()) sub.add(Rat(-b.y), Rat(b.x), 0);
        PieceResult pr = zb && !za ? run_engine(f, sub, b, a) : run_engine(f, sub, a, b);
        total.pieces += pr.pieces;
        if (pr.out.status == Status::Unbounded) {
            pr.pieces = total.pieces;
            return pr;
        }
        if (pr.out.status == Status::Optimal) {
            total.out = better(total.out, pr.out);
            total.radius = std::max<Int>(total.radius, pr.radius);
        }
    }
    return total;
}

}  // namespace

// ---------------------------------------------------------------- public

RayDecomposition ray_decompose(const BiPoly& f, const Point2& r) {
    RayDecomposition out;
    out.base = f;
    out.h_of_r = 0;
    Rat rx(r.x), ry(r.y);
    for (const auto& [key, c] : f.terms()) {
        auto [i, j] = key;
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b) {
                int k = a + b;
                if (k == 0) continue;
                Rat coef = c * Rat(binom(i, a) * binom(j, b)) * pow_rat(rx, a) * pow_rat(ry, b);
                if (sgn(coef) == 0) continue;
                if (k == 1)
                    out.g1.add_term(i - a, j - b, coef);
                else if (k == 2)
                    out.g2.add_term(i - a, j - b, coef);
                else if (k == 3)
                    out.h_of_r += coef;
                else
                    throw Error(Errc::DegreeTooHigh, "ray_decompose needs degree at most 3");
            }
    }
    return out;
}

const char* cubic_form_name(CubicFormKind k) {
    switch (k) {
        case CubicFormKind::ThreeLines: return "ThreeLines";
        case CubicFormKind::DoubleLine: return "DoubleLine";
        case CubicFormKind::TripleLine: return "TripleLine";
        case CubicFormKind::LineTimesIrreducible: return "LineTimesIrreducible";
    }
    return "?";
}

CubicFormType classify_cubic_form(const BiPoly& h) {
    if (h.is_zero() || !h.is_homogeneous() || h.degree() != 3)
        throw Error(Errc::NotCubicForm, "not a nonzero cubic form: " + h.to_string());
    Rat c0 = h.coeff(3, 0), c1 = h.coeff(2, 1), c2 = h.coeff(1, 2), c3 = h.coeff(0, 3);
    CubicFormType t;
    // raw factors before normalization
    auto finish = [&](CubicFormKind kind, Rat a1, Rat b1, Rat a2, Rat b2) {
        t.kind = kind;
        std::tie(a1, b1) = primitive_form(a1, b1);
        std::tie(a2, b2) = primitive_form(a2, b2);
        BiPoly l1 = BiPoly::linear(a1, b1, 0), l2 = BiPoly::linear(a2, b2, 0);
        BiPoly prod = l1 * l1 * l2;
        const auto& [key, c] = *h.terms().begin();
        Rat d = c / prod.coeff(key.first, key.second);
        if (!(Rat(d) * prod == h)) throw Error(Errc::Internal, "cubic factorization does not reproduce h");
        t.a1 = a1;
        t.b1 = b1;
        t.a2 = a2;
        t.b2 = b2;
        t.d = d;
        return t;
    };
    if (sgn(c3) == 0) {
        // x divides h
        if (sgn(c2) == 0) {
            if (sgn(c1) == 0) return finish(CubicFormKind::TripleLine, 1, 0, 1, 0);
            return finish(CubicFormKind::DoubleLine, 1, 0, c0, c1);
        }
        Rat d2 = c1 * c1 - 4 * c0 * c2;
        if (sgn(d2) > 0) {
            t.kind = CubicFormKind::ThreeLines;
            return t;
        }
        if (sgn(d2) < 0) {
            t.kind = CubicFormKind::LineTimesIrreducible;
            return t;
        }
        return finish(CubicFormKind::DoubleLine, c1 / (2 * c2), 1, 1, 0);
    }
    Rat d3 = c1 * c1 * c2 * c2 - 4 * c1 * c1 * c1 * c3 - 4 * c0 * c2 * c2 * c2 - 27 * c0 * c0 * c3 * c3 +
             18 * c0 * c1 * c2 * c3;
    if (sgn(d3) > 0) {
        t.kind = CubicFormKind::ThreeLines;
        return t;
    }
    if (sgn(d3) < 0) {
        t.kind = CubicFormKind::LineTimesIrreducible;
        return t;
    }
    // p(y) = h(1, y) has a repeated root
    UniPoly p({c0, c1, c2, c3});
    Rat y0 = -c2 / (3 * c3);
    if (sgn(p(y0)) == 0 && sgn(p.derivative()(y0)) == 0) return finish(CubicFormKind::TripleLine, -y0, 1, -y0, 1);
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() != 1) throw Error(Errc::Internal, "double root not found");
    Rat rd = -g.coeff(0) / g.coeff(1);
    Rat rs = -c2 / c3 - 2 * rd;
    return finish(CubicFormKind::DoubleLine, -rd, 1, -rs, 1);
}

Rat positive_floor_on_segment(const UniPoly& p) {
    if (p.degree() > 3) throw Error(Errc::DegreeTooHigh, "positive_floor_on_segment needs degree at most 3");
    if (p.is_zero() || sgn(p(Rat(0))) <= 0 || sgn(p(Rat(1))) <= 0)
        throw Error(Errc::NotPositive, "polynomial is not positive on [0, 1]");
    if (p.degree() >= 1 && SturmChain(squarefree_part(p)).count(Rat(0), Rat(1)) > 0)
        throw Error(Errc::NotPositive, "polynomial has a root in [0, 1]");
    Rat m = std::min<Rat>(p(Rat(0)), p(Rat(1)));
    if (p.degree() <= 1) return m;
    auto inside = [](const Rat& x) { return sgn(x) > 0 && x < 1; };
    Rat a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    if (sgn(a) == 0) {
        Rat x = -c / (2 * b);
        if (inside(x)) m = std::min<Rat>(m, p(x));
        return m;
    }
    Rat t = b * b - 3 * a * c;
    if (sgn(t) < 0) return m;
    Rat st;
    if (is_square(t, st)) {
        for (int s : {-1, 1}) {
            Rat x = (-b + Rat(s) * st) / (3 * a);
            if (inside(x)) m = std::min<Rat>(m, p(x));
        }
        return m;
    }
    // irrational critical points: each critical value P +- Q sqrt(t) solves z^2 - 2 P z + (P^2 - Q^2 t) = 0
    UniPoly dp = p.derivative();
    bool crit_inside = false;
    for (auto iv : isolate_roots(dp, rat(1, 8))) {
        Rat eps = iv.width() / 2;
        while ((iv.lo <= 0 && iv.hi >= 0) || (iv.lo <= 1 && iv.hi >= 1)) {
            refine_root(dp, iv, eps);
            eps /= 2;
        }
        crit_inside = crit_inside || (iv.lo > 0 && iv.hi < 1);
    }
    if (!crit_inside) return m;
    Rat a2 = 27 * a * a;
    Rat P = (27 * a * a * d - 9 * a * b * c + 2 * b * b * b) / a2;
    Rat Q = (6 * a * c - 2 * b * b) / a2;
    Rat k0 = P * P - Q * Q * t, k1 = -2 * P;
    if (sgn(k0) == 0) return std::min<Rat>(m, 2 * P);
    Rat bound = abs_rat(k0) / (abs_rat(k0) + std::max<Rat>(abs_rat(k1), Rat(1)));
    return std::min<Rat>(m, bound);
}

bool verify_unbounded(const BiPoly& f, const Polyhedron2& p, const Point2& point, const Point2& ray) {
    if (ray.x == 0 && ray.y == 0) return false;
    if (!p.contains(point)) return false;
    for (const auto& r : p.rows())
        if (sgn(Rat(r.a * Rat(ray.x) + r.b * Rat(ray.y))) > 0) return false;
    UniPoly g = f.along(Rat(point.x), Rat(point.y), Rat(ray.x), Rat(ray.y));
    return g.degree() >= 1 && sgn(g.lead()) < 0;
}

SolveOutcome solve_cubic(const BiPoly& f, const Polyhedron2& p, SolveStats* stats) {
    if (f.degree() > 3) throw Error(Errc::DegreeTooHigh, "solve_cubic needs degree at most 3");
    if (p.is_empty()) return SolveOutcome::infeasible();
    if (p.is_bounded()) {
        auto o = solve_cubic_bounded(f, p, stats);
        if (stats && o.status == Status::Optimal) stats->certified_radius = Rat(box_radius(p));
        return o;
    }
    if (f.degree() <= 2) throw Error(Errc::Unsupported, "unbounded polyhedron with an objective of degree at most 2");
    if (!ilp_point(p)) return SolveOutcome::infeasible();

    std::vector<Polyhedron2> pieces;
    if (vrep(p).lineality) {
        for (int sx : {1, -1})
            for (int sy : {1, -1}) pieces.push_back(with_row(with_row(p, -sx, 0, 0), 0, -sy, 0));
    } else {
        pieces.push_back(p);
    }
    SolveOutcome best;
    Int radius(0);
    long count = 0;
    for (const auto& q : pieces) {
        if (q.is_empty() || !ilp_point(q)) continue;
        if (q.is_bounded()) {
            SolveStats st;
            auto o = solve_cubic_bounded(f, q, &st);
            count += 1;
            if (stats) stats->bisection_steps += st.bisection_steps;
            if (o.status == Status::Optimal) {
                best = better(best, o);
                radius = std::max<Int>(radius, box_radius(q));
            }
            continue;
        }
        PieceResult pr = solve_pointed(f, q);
        count += pr.pieces;
        if (pr.out.status == Status::Unbounded) {
            // walk out along the ray until f is strictly decreasing from the point on
            auto& c = pr.out;
            UniPoly g = f.along(Rat(c.point.x), Rat(c.point.y), Rat(c.ray.x), Rat(c.ray.y));
            UniPoly dg = squarefree_part(g.derivative());
            SturmChain sc(dg);
            if (dg.degree() >= 1 && sc.variations_at(Rat(0)) - sc.variations_at_pos_inf() > 0) {
                Int t = *top_root_ceil(dg);
                c.point = {c.point.x + t * c.ray.x, c.point.y + t * c.ray.y};
            }
            if (!verify_unbounded(f, p, pr.out.point, pr.out.ray))
                throw Error(Errc::Internal, "unboundedness certificate failed its own check");
            if (stats) stats->pieces += count;
            return pr.out;
        }
        if (pr.out.status == Status::Optimal) {
            best = better(best, pr.out);
            radius = std::max<Int>(radius, pr.radius);
        }
    }
    if (stats) {
        stats->pieces += count;
        if (best.status == Status::Optimal) stats->certified_radius = Rat(radius);
    }
    return best;
}

}  // namespace zpoly
