#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "smt/errors.hpp"
#include "smt/rational.hpp"

namespace smt::exactalg {

// ---------------------------------------------------------------------------
// Variable universes

// A fixed, named list of variables. Exponent vectors of every polynomial over
// the universe are dense with this width, so term keys stay comparable.
struct VarUniverse {
    std::string name;
    std::vector<std::string> vars;
    int size() const { return static_cast<int>(vars.size()); }
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

UniversePtr make_universe(std::string name, std::vector<std::string> vars);

// ---------------------------------------------------------------------------
// The quadratic extension Q(s), s^2 = 2

struct QuadExt {
    Rational r;  // rational part
    Rational s;  // coefficient of sqrt(2)

    QuadExt() : r(0), s(0) {}
    QuadExt(Rational rr) : r(std::move(rr)), s(0) {}
    QuadExt(Rational rr, Rational ss) : r(std::move(rr)), s(std::move(ss)) {}

    static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

    bool is_zero() const { return r == 0 && s == 0; }
    bool is_rational() const { return s == 0; }
    QuadExt conjugate() const { return QuadExt(r, -s); }

    QuadExt operator-() const { return QuadExt(-r, -s); }
    QuadExt& operator+=(const QuadExt& o) {
        r += o.r;
        s += o.s;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        r -= o.r;
        s -= o.s;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        Rational nr = r * o.r + 2 * s * o.s;
        Rational ns = r * o.s + s * o.r;
        r = std::move(nr);
        s = std::move(ns);
        return *this;
    }
    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.r == b.r && a.s == b.s; }

    // (r + s√2)^{-1} = (r - s√2) / (r^2 - 2 s^2)
    QuadExt inverse() const {
        Rational nrm = r * r - 2 * s * s;
        if (nrm == 0) throw UsageError("division by zero in Q(sqrt 2)");
        return QuadExt(r / nrm, -s / nrm);
    }
};

template <class C>
struct CoeffOps {
    static C zero() { return C(0); }
    static C one() { return C(1); }
    static bool is_zero(const C& c) { return c == 0; }
};

template <>
struct CoeffOps<QuadExt> {
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(Rational(1)); }
    static bool is_zero(const QuadExt& c) { return c.is_zero(); }
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials, exact coefficients

template <class C>
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, C>;

    Poly() = default;
    explicit Poly(UniversePtr uni) : uni_(std::move(uni)) {}

    static Poly zero(UniversePtr uni) { return Poly(std::move(uni)); }
    static Poly constant(UniversePtr uni, C c) {
        Poly p(std::move(uni));
        if (!CoeffOps<C>::is_zero(c)) p.terms_[Exponents(p.uni_->size(), 0)] = std::move(c);
        return p;
    }
    static Poly variable(UniversePtr uni, int idx) {
        Poly p(std::move(uni));
        if (idx < 0 || idx >= p.uni_->size()) throw UsageError("variable index out of universe");
        Exponents e(p.uni_->size(), 0);
        e[idx] = 1;
        p.terms_[std::move(e)] = CoeffOps<C>::one();
        return p;
    }

    const UniversePtr& universe() const { return uni_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    C coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? CoeffOps<C>::zero() : it->second;
    }

    void add_term(const Exponents& e, const C& c) {
        if (CoeffOps<C>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (CoeffOps<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_universe(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_universe(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(uni_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_universe(b);
        Poly r(a.uni_);
        Exponents e(a.uni_ ? a.uni_->size() : 0, 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const C& c) {
        if (CoeffOps<C>::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator*(const C& c, Poly p) { return p.scale(c); }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_universe(b);
        return a.terms_ == b.terms_;
    }

    Poly pow(int k) const {
        if (k < 0) throw UsageError("negative polynomial power");
        Poly r = constant(uni_, CoeffOps<C>::one());
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Substitutes images[v] for variable v; images live in a common universe.
    template <class D>
    Poly<D> substitute(const std::vector<Poly<D>>& images) const {
        if (static_cast<int>(images.size()) != uni_->size())
            throw UsageError("substitution image count mismatch");
        UniversePtr target = images.empty() ? nullptr : images.front().universe();
        Poly<D> result(target);
        std::vector<std::vector<Poly<D>>> powers(images.size());
        for (std::size_t v = 0; v < images.size(); ++v)
            powers[v].push_back(Poly<D>::constant(target, CoeffOps<D>::one()));
        for (const auto& [e, c] : terms_) {
            Poly<D> term = Poly<D>::constant(target, coeff_cast<D>(c));
            for (std::size_t v = 0; v < images.size(); ++v) {
                while (static_cast<int>(powers[v].size()) <= e[v])
                    powers[v].push_back(powers[v].back() * images[v]);
                if (e[v] > 0) term *= powers[v][e[v]];
            }
            result += term;
        }
        return result;
    }

    C eval(const std::vector<C>& point) const {
        if (static_cast<int>(point.size()) != uni_->size())
            throw UsageError("evaluation point arity mismatch");
        C total = CoeffOps<C>::zero();
        for (const auto& [e, c] : terms_) {
            C t = c;
            for (std::size_t v = 0; v < point.size(); ++v)
                for (int k = 0; k < e[v]; ++k) t *= point[v];
            total += t;
        }
        return total;
    }

    Poly derivative(int var) const {
        Poly r(uni_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents ne = e;
            --ne[var];
            r.add_term(ne, C(e[var]) * c);
        }
        return r;
    }

    std::string to_string() const;

private:
    template <class D>
    static D coeff_cast(const C& c) {
        return D(c);
    }

    void check_universe(const Poly& o) const {
        bool same = (uni_ == o.uni_) ||
                    (uni_ && o.uni_ && uni_->name == o.uni_->name && uni_->vars == o.uni_->vars);
        if (!same) throw UsageError("polynomial universe mismatch");
    }

    UniversePtr uni_;
    TermMap terms_;
};

using PolyQ = Poly<Rational>;
using PolyE = Poly<QuadExt>;

template <class C>
std::string Poly<C>::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        if constexpr (std::is_same_v<C, Rational>)
            out += rat_to_string(c);
        else
            out += "(" + rat_to_string(c.r) + "+" + rat_to_string(c.s) + "s)";
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            out += "*" + uni_->vars[v];
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact dense matrices over Q

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rational(0)) {}

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Matrix identity(int n);
    Matrix transpose() const;
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend bool operator==(const Matrix& x, const Matrix& y) = default;
};

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators.
int exact_rank(const Matrix& M);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Rational> x;  // filled when status == Unique
};

// Exact solution of M x = v.
SolveResult exact_solve(const Matrix& M, const std::vector<Rational>& v);

Rational det_rational(Matrix M);
Matrix inverse(const Matrix& M);  // throws UsageError when singular

// ---------------------------------------------------------------------------
// Symbolic determinants: Laplace expansion with minors memoized by column set

inline constexpr int kDetSymbolicBound = 6;

template <class C>
Poly<C> det_symbolic(const std::vector<std::vector<Poly<C>>>& M, UniversePtr uni,
                     int bound = kDetSymbolicBound) {
    int s = static_cast<int>(M.size());
    if (s > bound)
        throw UsageError("symbolic determinant size " + std::to_string(s) + " exceeds bound " +
                         std::to_string(bound));
    if (s == 0) return Poly<C>::constant(uni, CoeffOps<C>::one());
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != s) throw UsageError("determinant of non-square matrix");

    // Expansion along successive rows; the minor of rows [k..s) on a column
    // mask depends only on the mask.
    std::map<unsigned, Poly<C>> memo;
    std::function<const Poly<C>&(unsigned)> minor = [&](unsigned mask) -> const Poly<C>& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int k = s - __builtin_popcount(mask);
        Poly<C> acc(uni);
        if (mask == 0) {
            acc = Poly<C>::constant(uni, CoeffOps<C>::one());
        } else {
            int sign = 1, pos = 0;
            for (int j = 0; j < s; ++j) {
                if (!(mask >> j & 1u)) continue;
                if (!M[k][j].is_zero()) {
                    Poly<C> sub = M[k][j] * minor(mask & ~(1u << j));
                    if (sign < 0) sub = -sub;
                    acc += sub;
                }
                sign = -sign;
                ++pos;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    unsigned full = (s == 32) ? 0xffffffffu : ((1u << s) - 1u);
    return minor(full);
}

}  // namespace smt::exactalg
