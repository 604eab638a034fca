#pragma once

// Symbolic expression trees: rational/pi/complex constants, variables,
// sums, products, integer powers, sin/cos/sinh/cosh, and embedded exact
// polynomials applied to subexpressions.  The node set is closed under
// differentiation.
//
// Construction goes through the make_* helpers, which normalize as they
// build: flattening of sums and products, constant folding, like-term and
// like-factor merging, zero/one absorption, and the exact special values
// sin/cos at integer and half-integer multiples of pi and sinh/cosh at 0.
// No other identities are applied.  Exact evaluation at rational points
// produces values in Q[pi] (see PiPoly) and refuses when a trig argument
// does not resolve; numeric evaluation is plain complex arithmetic.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

#include "lidstone/multiindex.hpp"
#include "lidstone/multipoly.hpp"
#include "lidstone/pipoly.hpp"
#include "lidstone/rational.hpp"

namespace lidstone {

enum class ExprKind {
    RationalConst,
    PiMultiple,  // coefficient * pi
    ComplexConst,
    Var,      // 1-based coordinate
    IntPow,   // nonnegative integer exponent
    Sin,
    Cos,
    Sinh,
    Cosh,
    Poly,     // exact polynomial applied to child expressions
    Product,
    Sum,
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    Rational rat;                   // RationalConst value / PiMultiple coefficient
    Complex cval{0.0, 0.0};         // ComplexConst
    int var = 0;                    // Var index
    int power = 0;                  // IntPow exponent
    std::shared_ptr<const MultiPoly> poly;  // Poly payload
    std::vector<Expr> kids;

    explicit ExprNode(ExprKind k) : kind(k) {}
};

inline Expr make_rational(const Rational& q) {
    auto n = std::make_shared<ExprNode>(ExprKind::RationalConst);
    n->rat = q;
    return n;
}

inline Expr make_pi_multiple(const Rational& q) {
    if (q == 0) return make_rational(0);
    auto n = std::make_shared<ExprNode>(ExprKind::PiMultiple);
    n->rat = q;
    return n;
}

inline Expr make_complex(const Complex& c) {
    auto n = std::make_shared<ExprNode>(ExprKind::ComplexConst);
    // Canonicalize signed zeros so printing is injective on equal values.
    double re = c.real() == 0.0 ? 0.0 : c.real();
    double im = c.imag() == 0.0 ? 0.0 : c.imag();
    n->cval = Complex(re, im);
    return n;
}

inline Expr make_var(int index) {
    if (index < 1) throw std::invalid_argument("make_var: variable index must be >= 1");
    auto n = std::make_shared<ExprNode>(ExprKind::Var);
    n->var = index;
    return n;
}

Expr make_sum(std::vector<Expr> terms);
Expr make_product(std::vector<Expr> factors);
Expr make_intpow(const Expr& base, int exponent);
Expr make_sin(const Expr& u);
Expr make_cos(const Expr& u);
Expr make_sinh(const Expr& u);
Expr make_cosh(const Expr& u);
Expr make_poly(const MultiPoly& p, std::vector<Expr> kids);

namespace exprdetail {

inline int kind_rank(ExprKind k) { return static_cast<int>(k); }

inline int cmp_rational(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }

inline int cmp(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return 0;
    int ra = kind_rank(a->kind), rb = kind_rank(b->kind);
    if (ra != rb) return ra < rb ? -1 : 1;
    switch (a->kind) {
        case ExprKind::RationalConst:
        case ExprKind::PiMultiple:
            return cmp_rational(a->rat, b->rat);
        case ExprKind::ComplexConst:
            if (a->cval.real() != b->cval.real()) return a->cval.real() < b->cval.real() ? -1 : 1;
            if (a->cval.imag() != b->cval.imag()) return a->cval.imag() < b->cval.imag() ? -1 : 1;
            return 0;
        case ExprKind::Var:
            return a->var < b->var ? -1 : (a->var > b->var ? 1 : 0);
        case ExprKind::IntPow: {
            int c = cmp(a->kids[0], b->kids[0]);
            if (c != 0) return c;
            return a->power < b->power ? -1 : (a->power > b->power ? 1 : 0);
        }
        case ExprKind::Sin:
        case ExprKind::Cos:
        case ExprKind::Sinh:
        case ExprKind::Cosh:
            return cmp(a->kids[0], b->kids[0]);
        case ExprKind::Poly: {
            if (a->poly->dim() != b->poly->dim()) return a->poly->dim() < b->poly->dim() ? -1 : 1;
            {
                auto ita = a->poly->terms().begin(), enda = a->poly->terms().end();
                auto itb = b->poly->terms().begin(), endb = b->poly->terms().end();
                GradedLexLess less;
                for (; ita != enda && itb != endb; ++ita, ++itb) {
                    if (less(ita->first, itb->first)) return -1;
                    if (less(itb->first, ita->first)) return 1;
                    int c = cmp_rational(ita->second, itb->second);
                    if (c != 0) return c;
                }
                if (ita != enda) return 1;
                if (itb != endb) return -1;
            }
            [[fallthrough]];
        }
        case ExprKind::Product:
        case ExprKind::Sum: {
            if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size() ? -1 : 1;
            for (std::size_t i = 0; i < a->kids.size(); ++i) {
                int c = cmp(a->kids[i], b->kids[i]);
                if (c != 0) return c;
            }
            return 0;
        }
    }
    return 0;
}

struct ExprLess {
    bool operator()(const Expr& a, const Expr& b) const { return cmp(a, b) < 0; }
};

inline bool equal(const Expr& a, const Expr& b) { return cmp(a, b) == 0; }

inline bool is_rational(const Expr& e, const Rational& q) {
    return e->kind == ExprKind::RationalConst && e->rat == q;
}

// Splits a term into (rational scalar, pi power, residual factors) for
// like-term collection in sums.
struct TermParts {
    Rational scalar = 1;
    int pi_power = 0;
    std::vector<Expr> core;  // sorted, no exact constants
};

inline TermParts split_term(const Expr& e) {
    TermParts parts;
    auto absorb = [&parts](const Expr& f) {
        switch (f->kind) {
            case ExprKind::RationalConst:
                parts.scalar *= f->rat;
                return true;
            case ExprKind::PiMultiple:
                parts.scalar *= f->rat;
                parts.pi_power += 1;
                return true;
            case ExprKind::IntPow:
                if (f->kids[0]->kind == ExprKind::PiMultiple) {
                    parts.scalar *= pow_rational(f->kids[0]->rat, f->power);
                    parts.pi_power += f->power;
                    return true;
                }
                return false;
            default:
                return false;
        }
    };
    if (e->kind == ExprKind::Product) {
        for (const auto& f : e->kids)
            if (!absorb(f)) parts.core.push_back(f);
    } else if (!absorb(e)) {
        parts.core.push_back(e);
    }
    std::sort(parts.core.begin(), parts.core.end(), ExprLess{});
    return parts;
}

}  // namespace exprdetail

inline Expr make_intpow(const Expr& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("make_intpow: negative exponent");
    if (exponent == 0) return make_rational(1);
    if (exponent == 1) return base;
    switch (base->kind) {
        case ExprKind::RationalConst:
            return make_rational(pow_rational(base->rat, exponent));
        case ExprKind::ComplexConst:
            return make_complex(std::pow(base->cval, exponent));
        case ExprKind::PiMultiple: {
            auto n = std::make_shared<ExprNode>(ExprKind::IntPow);
            n->kids.push_back(make_pi_multiple(1));
            n->power = exponent;
            if (base->rat == 1) return n;
            return make_product({make_rational(pow_rational(base->rat, exponent)), n});
        }
        case ExprKind::IntPow:
            return make_intpow(base->kids[0], base->power * exponent);
        case ExprKind::Product: {
            std::vector<Expr> fs;
            fs.reserve(base->kids.size());
            for (const auto& k : base->kids) fs.push_back(make_intpow(k, exponent));
            return make_product(std::move(fs));
        }
        default: {
            auto n = std::make_shared<ExprNode>(ExprKind::IntPow);
            n->kids.push_back(base);
            n->power = exponent;
            return n;
        }
    }
}

inline Expr make_product(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    for (auto& f : factors) {
        if (f->kind == ExprKind::Product)
            flat.insert(flat.end(), f->kids.begin(), f->kids.end());
        else
            flat.push_back(std::move(f));
    }
    Rational scalar = 1;
    int pi_power = 0;
    std::optional<Complex> cscale;
    std::vector<Expr> rest;
    for (const auto& f : flat) {
        switch (f->kind) {
            case ExprKind::RationalConst:
                if (f->rat == 0) return make_rational(0);
                scalar *= f->rat;
                break;
            case ExprKind::PiMultiple:
                scalar *= f->rat;
                pi_power += 1;
                break;
            case ExprKind::ComplexConst:
                if (f->cval == Complex(0.0, 0.0)) return make_rational(0);
                cscale = cscale ? *cscale * f->cval : f->cval;
                break;
            case ExprKind::IntPow:
                if (f->kids[0]->kind == ExprKind::PiMultiple) {
                    scalar *= pow_rational(f->kids[0]->rat, f->power);
                    pi_power += f->power;
                    break;
                }
                rest.push_back(f);
                break;
            default:
                rest.push_back(f);
        }
    }
    if (scalar == 0) return make_rational(0);

    // Merge repeated bases into integer powers.
    std::map<Expr, int, exprdetail::ExprLess> by_base;
    for (const auto& f : rest) {
        if (f->kind == ExprKind::IntPow)
            by_base[f->kids[0]] += f->power;
        else
            by_base[f] += 1;
    }
    std::vector<Expr> out;
    if (pi_power == 1) {
        out.push_back(make_pi_multiple(scalar));
    } else {
        if (scalar != 1 || (by_base.empty() && pi_power == 0 && !cscale)) out.push_back(make_rational(scalar));
        if (pi_power >= 2) {
            auto n = std::make_shared<ExprNode>(ExprKind::IntPow);
            n->kids.push_back(make_pi_multiple(1));
            n->power = pi_power;
            out.push_back(n);
        }
    }
    if (cscale) out.push_back(make_complex(*cscale));
    for (const auto& [base, e] : by_base) out.push_back(make_intpow(base, e));
    if (out.empty()) return make_rational(1);
    if (out.size() == 1) return out[0];
    auto n = std::make_shared<ExprNode>(ExprKind::Product);
    n->kids = std::move(out);
    return n;
}

inline Expr make_sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    for (auto& t : terms) {
        if (t->kind == ExprKind::Sum)
            flat.insert(flat.end(), t->kids.begin(), t->kids.end());
        else
            flat.push_back(std::move(t));
    }
    // Collect like terms keyed by (pi power, residual factor list).
    struct Bucket {
        Rational scalar = 0;
        int pi_power = 0;
        std::vector<Expr> core;
    };
    std::map<std::pair<int, std::vector<Expr>>, Bucket,
             decltype([](const auto& a, const auto& b) {
                 if (a.first != b.first) return a.first < b.first;
                 if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
                 for (std::size_t i = 0; i < a.second.size(); ++i) {
                     int c = exprdetail::cmp(a.second[i], b.second[i]);
                     if (c != 0) return c < 0;
                 }
                 return false;
             })>
        buckets;
    Complex csum{0.0, 0.0};
    bool has_complex = false;
    for (const auto& t : flat) {
        if (t->kind == ExprKind::ComplexConst) {
            csum += t->cval;
            has_complex = true;
            continue;
        }
        auto parts = exprdetail::split_term(t);
        if (parts.scalar == 0) continue;
        bool core_has_complex = parts.core.size() == 1 && parts.core[0]->kind == ExprKind::ComplexConst;
        if (core_has_complex && parts.pi_power == 0) {
            csum += parts.core[0]->cval * to_double(parts.scalar);
            has_complex = true;
            continue;
        }
        auto& b = buckets[{parts.pi_power, parts.core}];
        b.scalar += parts.scalar;
        b.pi_power = parts.pi_power;
        b.core = parts.core;
    }
    std::vector<Expr> out;
    for (const auto& [key, b] : buckets) {
        if (b.scalar == 0) continue;
        std::vector<Expr> fs;
        if (b.pi_power == 1)
            fs.push_back(make_pi_multiple(b.scalar));
        else {
            if (b.scalar != 1 || b.core.empty()) fs.push_back(make_rational(b.scalar));
            if (b.pi_power >= 2) fs.push_back(make_intpow(make_pi_multiple(1), b.pi_power));
        }
        fs.insert(fs.end(), b.core.begin(), b.core.end());
        out.push_back(make_product(std::move(fs)));
    }
    if (has_complex && csum != Complex(0.0, 0.0)) out.push_back(make_complex(csum));
    std::sort(out.begin(), out.end(), exprdetail::ExprLess{});
    if (out.empty()) return make_rational(0);
    if (out.size() == 1) return out[0];
    auto n = std::make_shared<ExprNode>(ExprKind::Sum);
    n->kids = std::move(out);
    return n;
}

namespace exprdetail {

// sin/cos at integer and half-integer multiples of pi are exact.
inline std::optional<Rational> trig_special(const Rational& pi_coef, bool want_sin) {
    Rational twice = pi_coef * 2;
    if (!is_integer(twice)) return std::nullopt;
    BigInt m2 = numerator(twice);  // argument = (m2/2) pi
    bool half = (m2 % 2) != 0;
    BigInt whole = half ? BigInt((m2 - 1) / 2) : BigInt(m2 / 2);
    bool odd_whole = (whole % 2) != 0;
    if (want_sin)
        return half ? Rational(odd_whole ? -1 : 1) : Rational(0);
    return half ? Rational(0) : Rational(odd_whole ? -1 : 1);
}

inline Expr make_unary(ExprKind kind, const Expr& u) {
    auto n = std::make_shared<ExprNode>(kind);
    n->kids.push_back(u);
    return n;
}

}  // namespace exprdetail

inline Expr make_sin(const Expr& u) {
    if (exprdetail::is_rational(u, 0)) return make_rational(0);
    if (u->kind == ExprKind::PiMultiple)
        if (auto v = exprdetail::trig_special(u->rat, true)) return make_rational(*v);
    if (u->kind == ExprKind::ComplexConst) return make_complex(std::sin(u->cval));
    return exprdetail::make_unary(ExprKind::Sin, u);
}

inline Expr make_cos(const Expr& u) {
    if (exprdetail::is_rational(u, 0)) return make_rational(1);
    if (u->kind == ExprKind::PiMultiple)
        if (auto v = exprdetail::trig_special(u->rat, false)) return make_rational(*v);
    if (u->kind == ExprKind::ComplexConst) return make_complex(std::cos(u->cval));
    return exprdetail::make_unary(ExprKind::Cos, u);
}

inline Expr make_sinh(const Expr& u) {
    if (exprdetail::is_rational(u, 0)) return make_rational(0);
    if (u->kind == ExprKind::ComplexConst) return make_complex(std::sinh(u->cval));
    return exprdetail::make_unary(ExprKind::Sinh, u);
}

inline Expr make_cosh(const Expr& u) {
    if (exprdetail::is_rational(u, 0)) return make_rational(1);
    if (u->kind == ExprKind::ComplexConst) return make_complex(std::cosh(u->cval));
    return exprdetail::make_unary(ExprKind::Cosh, u);
}

inline Expr make_poly(const MultiPoly& p, std::vector<Expr> kids) {
    if (static_cast<int>(kids.size()) != p.dim())
        throw std::invalid_argument("make_poly: child count must match polynomial dimension");
    if (p.is_zero()) return make_rational(0);
    if (p.term_count() == 1) {
        const auto& [k, c] = *p.terms().begin();
        if (k.is_zero()) return make_rational(c);
        if (k.norm() == 1 && c == 1)
            for (int j = 0; j < p.dim(); ++j)
                if (k[j] == 1) return kids[j];
    }
    bool all_rational = true;
    for (const auto& kd : kids)
        if (kd->kind != ExprKind::RationalConst) {
            all_rational = false;
            break;
        }
    if (all_rational) {
        std::vector<Rational> pt;
        pt.reserve(kids.size());
        for (const auto& kd : kids) pt.push_back(kd->rat);
        return make_rational(p.evaluate(pt));
    }
    auto n = std::make_shared<ExprNode>(ExprKind::Poly);
    n->poly = std::make_shared<MultiPoly>(p);
    n->kids = std::move(kids);
    return n;
}

// Polynomial-of-coordinates convenience: P(z_1, ..., z_n).
inline Expr make_poly_of_vars(const MultiPoly& p) {
    std::vector<Expr> kids;
    kids.reserve(p.dim());
    for (int j = 1; j <= p.dim(); ++j) kids.push_back(make_var(j));
    return make_poly(p, std::move(kids));
}

// --- differentiation ------------------------------------------------------

// Partial derivative with respect to x_j (1-based).
inline Expr differentiate(const Expr& e, int j) {
    switch (e->kind) {
        case ExprKind::RationalConst:
        case ExprKind::PiMultiple:
        case ExprKind::ComplexConst:
            return make_rational(0);
        case ExprKind::Var:
            return make_rational(e->var == j ? 1 : 0);
        case ExprKind::Sum: {
            std::vector<Expr> ts;
            ts.reserve(e->kids.size());
            for (const auto& k : e->kids) ts.push_back(differentiate(k, j));
            return make_sum(std::move(ts));
        }
        case ExprKind::Product: {
            std::vector<Expr> terms;
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                std::vector<Expr> fs = e->kids;
                fs[i] = differentiate(e->kids[i], j);
                terms.push_back(make_product(std::move(fs)));
            }
            return make_sum(std::move(terms));
        }
        case ExprKind::IntPow:
            return make_product({make_rational(e->power), make_intpow(e->kids[0], e->power - 1),
                                 differentiate(e->kids[0], j)});
        case ExprKind::Sin:
            return make_product({make_cos(e->kids[0]), differentiate(e->kids[0], j)});
        case ExprKind::Cos:
            return make_product({make_rational(-1), make_sin(e->kids[0]), differentiate(e->kids[0], j)});
        case ExprKind::Sinh:
            return make_product({make_cosh(e->kids[0]), differentiate(e->kids[0], j)});
        case ExprKind::Cosh:
            return make_product({make_sinh(e->kids[0]), differentiate(e->kids[0], j)});
        case ExprKind::Poly: {
            std::vector<Expr> terms;
            for (int m = 0; m < e->poly->dim(); ++m) {
                Expr dk = differentiate(e->kids[m], j);
                if (exprdetail::is_rational(dk, 0)) continue;
                MultiPoly dp = e->poly->differentiate(m);
                if (dp.is_zero()) continue;
                terms.push_back(make_product({make_poly(dp, e->kids), std::move(dk)}));
            }
            return make_sum(std::move(terms));
        }
    }
    return make_rational(0);
}

// Iterated partial derivative D^t.
inline Expr differentiate(const Expr& e, const MultiIndex& t) {
    Expr cur = e;
    for (int j = 0; j < t.dim(); ++j)
        for (int rep = 0; rep < t[j]; ++rep) cur = differentiate(cur, j + 1);
    return cur;
}

// --- evaluation -----------------------------------------------------------

// Exact evaluation at a rational point into Q[pi]; nullopt when the value is
// not representable (complex constants, trig at unresolved arguments,
// sinh/cosh away from 0).
inline std::optional<PiPoly> eval_exact(const Expr& e, const std::vector<Rational>& point) {
    switch (e->kind) {
        case ExprKind::RationalConst:
            return PiPoly(e->rat);
        case ExprKind::PiMultiple:
            return PiPoly::pi_multiple(e->rat);
        case ExprKind::ComplexConst:
            return std::nullopt;
        case ExprKind::Var:
            if (e->var > static_cast<int>(point.size()))
                throw std::invalid_argument("eval_exact: variable index exceeds point dimension");
            return PiPoly(point[e->var - 1]);
        case ExprKind::Sum: {
            PiPoly acc;
            for (const auto& k : e->kids) {
                auto v = eval_exact(k, point);
                if (!v) return std::nullopt;
                acc += *v;
            }
            return acc;
        }
        case ExprKind::Product: {
            PiPoly acc{Rational(1)};
            for (const auto& k : e->kids) {
                auto v = eval_exact(k, point);
                if (!v) return std::nullopt;
                acc = acc * *v;
            }
            return acc;
        }
        case ExprKind::IntPow: {
            auto v = eval_exact(e->kids[0], point);
            if (!v) return std::nullopt;
            return v->pow(e->power);
        }
        case ExprKind::Sin:
        case ExprKind::Cos: {
            auto v = eval_exact(e->kids[0], point);
            if (!v) return std::nullopt;
            auto q = v->as_pi_multiple();
            if (!q) return std::nullopt;
            auto s = exprdetail::trig_special(*q, e->kind == ExprKind::Sin);
            if (!s) return std::nullopt;
            return PiPoly(*s);
        }
        case ExprKind::Sinh: {
            auto v = eval_exact(e->kids[0], point);
            if (!v || !v->is_zero()) return std::nullopt;
            return PiPoly(Rational(0));
        }
        case ExprKind::Cosh: {
            auto v = eval_exact(e->kids[0], point);
            if (!v || !v->is_zero()) return std::nullopt;
            return PiPoly(Rational(1));
        }
        case ExprKind::Poly: {
            std::vector<PiPoly> args;
            args.reserve(e->kids.size());
            for (const auto& k : e->kids) {
                auto v = eval_exact(k, point);
                if (!v) return std::nullopt;
                args.push_back(std::move(*v));
            }
            return e->poly->evaluate_in<PiPoly>(args);
        }
    }
    return std::nullopt;
}

inline Complex eval_numeric(const Expr& e, const std::vector<Complex>& point) {
    switch (e->kind) {
        case ExprKind::RationalConst:
            return Complex(to_double(e->rat), 0.0);
        case ExprKind::PiMultiple:
            return Complex(to_double(e->rat) * M_PI, 0.0);
        case ExprKind::ComplexConst:
            return e->cval;
        case ExprKind::Var:
            if (e->var > static_cast<int>(point.size()))
                throw std::invalid_argument("eval_numeric: variable index exceeds point dimension");
            return point[e->var - 1];
        case ExprKind::Sum: {
            Complex acc{0.0, 0.0};
            for (const auto& k : e->kids) acc += eval_numeric(k, point);
            return acc;
        }
        case ExprKind::Product: {
            Complex acc{1.0, 0.0};
            for (const auto& k : e->kids) acc *= eval_numeric(k, point);
            return acc;
        }
        case ExprKind::IntPow: {
            Complex b = eval_numeric(e->kids[0], point);
            Complex acc{1.0, 0.0};
            for (int i = 0; i < e->power; ++i) acc *= b;
            return acc;
        }
        case ExprKind::Sin:
            return std::sin(eval_numeric(e->kids[0], point));
        case ExprKind::Cos:
            return std::cos(eval_numeric(e->kids[0], point));
        case ExprKind::Sinh:
            return std::sinh(eval_numeric(e->kids[0], point));
        case ExprKind::Cosh:
            return std::cosh(eval_numeric(e->kids[0], point));
        case ExprKind::Poly: {
            std::vector<Complex> args;
            args.reserve(e->kids.size());
            for (const auto& k : e->kids) args.push_back(eval_numeric(k, point));
            return e->poly->evaluate(args);
        }
    }
    return Complex(0.0, 0.0);
}

inline bool contains_var(const Expr& e) {
    if (e->kind == ExprKind::Var) return true;
    for (const auto& k : e->kids)
        if (contains_var(k)) return true;
    return false;
}

inline int max_var_index(const Expr& e) {
    int m = e->kind == ExprKind::Var ? e->var : 0;
    for (const auto& k : e->kids) m = std::max(m, max_var_index(k));
    return m;
}

// --- printing -------------------------------------------------------------

namespace exprdetail {

// Precedence levels for parenthesization: sum < product < power < atom.
enum { PREC_SUM = 0, PREC_PROD = 1, PREC_POW = 2, PREC_ATOM = 3 };

inline void print(std::ostringstream& os, const Expr& e, int parent_prec);

inline int precedence(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Sum:
            return PREC_SUM;
        case ExprKind::Product:
            return PREC_PROD;
        case ExprKind::IntPow:
            return PREC_POW;
        case ExprKind::RationalConst:
            return (e->rat < 0 || !is_integer(e->rat)) ? PREC_PROD : PREC_ATOM;
        case ExprKind::PiMultiple:
            return (e->rat == 1) ? PREC_ATOM : PREC_PROD;
        case ExprKind::ComplexConst:
        default:
            return PREC_ATOM;
    }
}

inline void print_wrapped(std::ostringstream& os, const Expr& e, int parent_prec) {
    bool need = precedence(e) < parent_prec;
    if (need) os << '(';
    print(os, e, need ? PREC_SUM : parent_prec);
    if (need) os << ')';
}

inline std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline void print(std::ostringstream& os, const Expr& e, int parent_prec) {
    switch (e->kind) {
        case ExprKind::RationalConst: {
            if (is_integer(e->rat))
                os << numerator(e->rat).str();
            else
                os << numerator(e->rat).str() << '/' << denominator(e->rat).str();
            return;
        }
        case ExprKind::PiMultiple: {
            if (e->rat == 1) {
                os << "pi";
            } else if (e->rat == -1) {
                os << "-pi";
            } else {
                print(os, make_rational(e->rat), PREC_PROD);
                os << "*pi";
            }
            return;
        }
        case ExprKind::ComplexConst:
            os << "complex(" << format_double(e->cval.real()) << ", " << format_double(e->cval.imag())
               << ")";
            return;
        case ExprKind::Var:
            os << 'x' << e->var;
            return;
        case ExprKind::Sum: {
            bool first = true;
            for (const auto& t : e->kids) {
                auto parts = split_term(t);
                bool negative = parts.scalar < 0;
                if (first) {
                    first = false;
                    print_wrapped(os, t, PREC_SUM + 1);
                } else if (negative) {
                    os << " - ";
                    auto flipped = make_product({make_rational(-1), t});
                    print_wrapped(os, flipped, PREC_SUM + 1);
                } else {
                    os << " + ";
                    print_wrapped(os, t, PREC_SUM + 1);
                }
            }
            return;
        }
        case ExprKind::Product: {
            // A leading negative or fractional constant needs no parentheses,
            // and a plain -1 prints as a sign.
            bool first = true;
            for (std::size_t i = 0; i < e->kids.size(); ++i) {
                const auto& f = e->kids[i];
                if (first && i + 1 < e->kids.size() && is_rational(f, -1)) {
                    os << '-';
                    continue;
                }
                if (!first) os << '*';
                print_wrapped(os, f, first ? PREC_PROD : PREC_PROD + 1);
                first = false;
            }
            return;
        }
        case ExprKind::IntPow:
            print_wrapped(os, e->kids[0], PREC_POW + 1);
            os << '^' << e->power;
            return;
        case ExprKind::Sin:
        case ExprKind::Cos:
        case ExprKind::Sinh:
        case ExprKind::Cosh: {
            const char* name = e->kind == ExprKind::Sin    ? "sin"
                               : e->kind == ExprKind::Cos  ? "cos"
                               : e->kind == ExprKind::Sinh ? "sinh"
                                                           : "cosh";
            os << name << '(';
            print(os, e->kids[0], PREC_SUM);
            os << ')';
            return;
        }
        case ExprKind::Poly: {
            // Rendered as an explicit sum of monomials in the children.
            os << '(';
            bool first = true;
            for (const auto& [k, c] : e->poly->terms()) {
                Rational mag = c < 0 ? Rational(-c) : c;
                if (first) {
                    if (c < 0) os << '-';
                    first = false;
                } else {
                    os << (c < 0 ? " - " : " + ");
                }
                bool printed = false;
                if (mag != 1 || k.is_zero()) {
                    print(os, make_rational(mag), PREC_PROD + 1);
                    printed = true;
                }
                for (int j = 0; j < e->poly->dim(); ++j) {
                    if (k[j] == 0) continue;
                    if (printed) os << '*';
                    print_wrapped(os, e->kids[j], PREC_POW + 1);
                    if (k[j] > 1) os << '^' << k[j];
                    printed = true;
                }
            }
            os << ')';
            return;
        }
    }
}

}  // namespace exprdetail

inline std::string to_string(const Expr& e) {
    std::ostringstream os;
    exprdetail::print(os, e, exprdetail::PREC_SUM);
    return os.str();
}

inline bool structurally_equal(const Expr& a, const Expr& b) { return exprdetail::equal(a, b); }

}  // namespace lidstone
