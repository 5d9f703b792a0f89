#include "smt/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace smt::combinat {

bool is_strictly_increasing(const IndexTuple& t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] >= t[i]) return false;
    return true;
}

void validate_tuple(const IndexTuple& t, int m) {
    if (!is_strictly_increasing(t))
        throw UsageError("index tuple is not strictly increasing");
    if (!t.empty() && (t.front() < 1 || t.back() > m))
        throw UsageError("index tuple entry out of [1," + std::to_string(m) + "]");
}

bool tuple_ge(const IndexTuple& a, const IndexTuple& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] < b[j]) return false;
    return true;
}

bool tuple_gt(const IndexTuple& a, const IndexTuple& b) {
    return tuple_ge(a, b) && a != b;
}

std::vector<IndexTuple> tuples(int r, int m) {
    std::vector<IndexTuple> out;
    if (r < 0 || r > m) return out;
    IndexTuple cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        int need = r - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= m; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

DosetElement DosetElement::pair(IndexTuple A, IndexTuple B) {
    if (A.size() != B.size()) throw UsageError("minor pair with |A| != |B|");
    if (!tuple_ge(A, B)) throw UsageError("minor pair with A >= B violated");
    DosetElement e;
    e.kind = SymbolKind::Pair;
    e.a = std::move(A);
    e.b = std::move(B);
    return e;
}

DosetElement DosetElement::u(IndexTuple I) {
    DosetElement e;
    e.kind = SymbolKind::UIndex;
    e.a = std::move(I);
    return e;
}

void validate_pair(const IndexTuple& A, const IndexTuple& B, int m) {
    validate_tuple(A, m);
    validate_tuple(B, m);
    if (A.size() != B.size()) throw UsageError("minor pair with |A| != |B|");
    if (!tuple_ge(A, B)) throw UsageError("minor pair with A >= B violated");
}

void validate_element(const DosetElement& e, int m, int n, int pair_bound) {
    int bound = pair_bound >= 0 ? pair_bound : n - 1;
    switch (e.kind) {
        case SymbolKind::One:
            return;
        case SymbolKind::Pair:
            validate_pair(e.a, e.b, m);
            if (static_cast<int>(e.a.size()) > bound)
                throw UsageError("pair size exceeds bound " + std::to_string(bound));
            return;
        case SymbolKind::UIndex:
            validate_tuple(e.a, m);
            if (static_cast<int>(e.a.size()) != n)
                throw UsageError("u-tuple size must equal n");
            return;
    }
}

bool doset_cmp(const DosetElement& x, const DosetElement& y) {
    if (x.kind == SymbolKind::One) return true;
    if (y.kind == SymbolKind::One) return false;
    if (x.kind == SymbolKind::Pair && y.kind == SymbolKind::Pair)
        return tuple_ge(x.b, y.a);
    if (x.kind == SymbolKind::Pair && y.kind == SymbolKind::UIndex)
        return tuple_ge(x.b, y.a);
    if (x.kind == SymbolKind::UIndex && y.kind == SymbolKind::Pair) return false;
    return tuple_ge(x.a, y.a);
}

bool is_standard(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!doset_cmp(w[i - 1], w[i])) return false;
    return true;
}

bool is_chainable(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!doset_cmp(w[i], w[j]) && !doset_cmp(w[j], w[i])) return false;
    return true;
}

std::vector<int> element_key(const DosetElement& e) {
    std::vector<int> k;
    k.push_back(static_cast<int>(e.kind));
    k.push_back(static_cast<int>(e.a.size()));
    k.insert(k.end(), e.a.begin(), e.a.end());
    k.insert(k.end(), e.b.begin(), e.b.end());
    return k;
}

std::vector<int> word_key(const Word& w) {
    std::vector<int> k;
    k.push_back(static_cast<int>(w.size()));
    for (const auto& e : w) {
        auto ek = element_key(e);
        k.insert(k.end(), ek.begin(), ek.end());
    }
    return k;
}

std::vector<int> padded_digits(const IndexTuple& t, int m, int width) {
    std::vector<int> d(t.begin(), t.end());
    d.resize(width, m);
    d.push_back(1);
    return d;
}

namespace {

// Digit key used to arrange words: One sorts as all-m blocks (largest),
// pairs by (A-digits, B-digits), u-symbols by their single digit block.
std::vector<int> sort_digits(const DosetElement& e, int m, int n) {
    std::vector<int> d;
    switch (e.kind) {
        case SymbolKind::One:
            d.assign(2 * (n + 1), m);
            break;
        case SymbolKind::Pair: {
            d = padded_digits(e.a, m, n);
            auto bd = padded_digits(e.b, m, n);
            d.insert(d.end(), bd.begin(), bd.end());
            break;
        }
        case SymbolKind::UIndex:
            d = padded_digits(e.a, m, n);
            break;
    }
    return d;
}

}  // namespace

Word canonical_arrangement(Word w, int m, int n) {
    std::stable_sort(w.begin(), w.end(), [&](const DosetElement& x, const DosetElement& y) {
        if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
        auto dx = sort_digits(x, m, n);
        auto dy = sort_digits(y, m, n);
        if (dx != dy) return dx > dy;  // larger digit key first
        if (x.a.size() != y.a.size()) return x.a.size() < y.a.size();
        return element_key(x) < element_key(y);
    });
    return w;
}

// ---------------------------------------------------------------------------

GroundPoset GroundPoset::make(int m, int n) {
    if (m < 1 || n < 1 || n > m) throw UsageError("GroundPoset requires 1 <= n <= m");
    GroundPoset p;
    p.m = m;
    p.n = n;
    p.elements.emplace_back(std::nullopt);  // the top
    for (int r = 1; r <= n; ++r)
        for (auto& t : tuples(r, m)) p.elements.emplace_back(t);
    return p;
}

bool GroundPoset::ge(int x, int y) const {
    if (!elements[x].has_value()) return true;   // top >= all
    if (!elements[y].has_value()) return false;  // only top >= top
    return tuple_ge(*elements[x], *elements[y]);
}

std::string GroundPoset::element_name(int x) const {
    if (!elements[x].has_value()) return "1";
    std::ostringstream os;
    os << "(";
    const auto& t = *elements[x];
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

namespace {

// D ⊂ P×P realized as index pairs into the poset: H_p pairs, the diagonal of
// H_u, and (top, top).
std::set<std::pair<int, int>> doset_pairs(const GroundPoset& p) {
    std::set<std::pair<int, int>> d;
    std::map<IndexTuple, int> pos;
    for (std::size_t i = 1; i < p.elements.size(); ++i) pos[*p.elements[i]] = static_cast<int>(i);
    d.insert({0, 0});
    for (std::size_t i = 1; i < p.elements.size(); ++i) {
        const auto& A = *p.elements[i];
        int r = static_cast<int>(A.size());
        if (r == p.n) {
            d.insert({static_cast<int>(i), static_cast<int>(i)});
            continue;
        }
        for (auto& B : tuples(r, p.m))
            if (tuple_ge(A, B)) d.insert({static_cast<int>(i), pos[B]});
    }
    return d;
}

}  // namespace

CheckReport doset_axioms_check(int m, int n) {
    CheckReport rep;
    GroundPoset p = GroundPoset::make(m, n);
    auto D = doset_pairs(p);
    int N = static_cast<int>(p.size());

    for (int a = 0; a < N; ++a) {
        if (!D.count({a, a})) rep.fail("diagonal element missing: (" + p.element_name(a) + ")^2");
        ++rep.cases_checked;
    }
    for (auto& [a, b] : D) {
        if (!p.ge(a, b))
            rep.fail("doset pair without a >= b: (" + p.element_name(a) + "," + p.element_name(b) + ")");
        ++rep.cases_checked;
    }
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (!p.ge(a, b)) continue;
            for (int c = 0; c < N; ++c) {
                if (!p.ge(b, c)) continue;
                ++rep.cases_checked;
                bool ab = D.count({a, b}) != 0;
                bool bc = D.count({b, c}) != 0;
                bool ac = D.count({a, c}) != 0;
                if (ab && bc && !ac)
                    rep.fail("3(a) fails at " + p.element_name(a) + " >= " + p.element_name(b) +
                             " >= " + p.element_name(c));
                if (ac && !(ab && bc))
                    rep.fail("3(b) fails at " + p.element_name(a) + " >= " + p.element_name(b) +
                             " >= " + p.element_name(c));
                if (!rep.pass) return rep;
            }
        }
    return rep;
}

namespace {

// Greatest lower bound / least upper bound by brute force; -1 when absent.
int poset_meet(const GroundPoset& p, int x, int y) {
    std::vector<int> lb;
    for (int z = 0; z < static_cast<int>(p.size()); ++z)
        if (p.ge(x, z) && p.ge(y, z)) lb.push_back(z);
    for (int z : lb) {
        bool greatest = true;
        for (int w : lb)
            if (!p.ge(z, w)) {
                greatest = false;
                break;
            }
        if (greatest) return z;
    }
    return -1;
}

int poset_join(const GroundPoset& p, int x, int y) {
    std::vector<int> ub;
    for (int z = 0; z < static_cast<int>(p.size()); ++z)
        if (p.ge(z, x) && p.ge(z, y)) ub.push_back(z);
    for (int z : ub) {
        bool least = true;
        for (int w : ub)
            if (!p.ge(w, z)) {
                least = false;
                break;
            }
        if (least) return z;
    }
    return -1;
}

}  // namespace

CheckReport lattice_check(int m, int n) {
    CheckReport rep;
    GroundPoset p = GroundPoset::make(m, n);
    int N = static_cast<int>(p.size());
    std::vector<std::vector<int>> meet(N, std::vector<int>(N)), join(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            meet[x][y] = poset_meet(p, x, y);
            join[x][y] = poset_join(p, x, y);
            ++rep.cases_checked;
            if (meet[x][y] < 0)
                rep.fail("no meet for " + p.element_name(x) + ", " + p.element_name(y));
            if (join[x][y] < 0)
                rep.fail("no join for " + p.element_name(x) + ", " + p.element_name(y));
            if (!rep.pass) return rep;
        }
    for (int x = 0; x < N && rep.pass; ++x)
        for (int y = 0; y < N && rep.pass; ++y)
            for (int z = 0; z < N; ++z) {
                ++rep.cases_checked;
                if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]) {
                    rep.fail("distributivity fails at x=" + p.element_name(x) +
                             " y=" + p.element_name(y) + " z=" + p.element_name(z));
                    break;
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------

bool in_symplectic_index_set(const IndexTuple& i, int m) {
    if (static_cast<int>(i.size()) != m || !is_strictly_increasing(i)) return false;
    if (!i.empty() && (i.front() < 1 || i.back() > 2 * m)) return false;
    std::set<int> s(i.begin(), i.end());
    for (int j = 1; j <= m; ++j) {
        int cnt = static_cast<int>(s.count(j)) + static_cast<int>(s.count(2 * m + 1 - j));
        if (cnt != 1) return false;
    }
    return true;
}

std::vector<IndexTuple> symplectic_indices(int m) {
    std::vector<IndexTuple> out;
    for (auto& i : tuples(m, 2 * m))
        if (in_symplectic_index_set(i, m)) out.push_back(i);
    return out;
}

MinorPair theta_map(const IndexTuple& i, int m) {
    if (!in_symplectic_index_set(i, m))
        throw UsageError("theta_map: tuple not in I_G(m,2m)");
    int r = 0;
    while (r < m && i[r] <= m) ++r;
    IndexTuple A;
    for (int k = m - 1; k >= r; --k) A.push_back(2 * m + 1 - i[k]);
    std::sort(A.begin(), A.end());
    IndexTuple B;
    std::set<int> head(i.begin(), i.begin() + r);
    for (int v = 1; v <= m; ++v)
        if (!head.count(v)) B.push_back(v);
    return MinorPair{A, B};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<DosetElement> generators(Family family, int m, int n, int t) {
    std::vector<DosetElement> gens;
    auto add_pairs_up_to = [&](int bound) {
        for (int r = 1; r <= bound; ++r)
            for (auto& A : tuples(r, m))
                for (auto& B : tuples(r, m))
                    if (tuple_ge(A, B)) gens.push_back(DosetElement::pair(A, B));
    };
    switch (family) {
        case Family::S:
        case Family::Traces:
            if (n < 1 || n > m) throw UsageError("family requires 1 <= n <= m");
            add_pairs_up_to(n - 1);
            for (auto& I : tuples(n, m)) gens.push_back(DosetElement::u(I));
            break;
        case Family::RD:
            if (n < 1 || n > m) throw UsageError("family requires 1 <= n <= m");
            gens.push_back(DosetElement::one());
            add_pairs_up_to(n - 1);
            for (auto& I : tuples(n, m)) gens.push_back(DosetElement::u(I));
            break;
        case Family::Dt:
            if (t < 1 || t > m + 1) throw UsageError("family D_t requires 1 <= t <= m+1");
            add_pairs_up_to(std::min(t - 1, m));
            break;
    }
    std::sort(gens.begin(), gens.end(), [&](const DosetElement& x, const DosetElement& y) {
        return element_key(x) < element_key(y);
    });
    return gens;
}

namespace {

int element_degree(Family family, const DosetElement& e) {
    if (family == Family::Dt) return static_cast<int>(e.a.size());  // z-degree
    return 1;                                                       // length grading
}

std::vector<int> block_vector(const DosetElement& e, int m) {
    std::vector<int> v(m, 0);
    for (int i : e.a) ++v[i - 1];
    for (int i : e.b) ++v[i - 1];
    return v;
}

}  // namespace

std::vector<Word> enumerate_standard(const EnumerateRequest& req) {
    std::vector<DosetElement> gens = generators(req.family, req.m, req.n, req.t);
    std::vector<Word> out;
    Word cur;

    const bool by_multidegree = !req.multidegree.empty();
    if (by_multidegree && static_cast<int>(req.multidegree.size()) != req.m)
        throw UsageError("multidegree must have m entries");
    const bool traces = req.family == Family::Traces;
    if (traces && req.n != 3) throw UsageError("trace family lives at n=3");

    std::vector<int> remaining = req.multidegree;
    int deg_left = req.degree;
    int r_left = req.tr, s_left = req.ts, t_left = req.tt;

    std::function<void(const DosetElement*)> rec = [&](const DosetElement* prev) {
        bool done;
        if (by_multidegree)
            done = std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; });
        else if (traces)
            done = r_left == 0 && s_left == 0 && t_left == 0;
        else
            done = deg_left == 0;
        if (done) {
            out.push_back(cur);
            return;
        }
        for (const auto& g : gens) {
            if (prev && !doset_cmp(*prev, g)) continue;
            if (by_multidegree) {
                auto bv = block_vector(g, req.m);
                bool fits = true;
                for (int i = 0; i < req.m; ++i)
                    if (bv[i] > remaining[i]) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                for (int i = 0; i < req.m; ++i) remaining[i] -= bv[i];
                cur.push_back(g);
                rec(&cur.back());
                cur.pop_back();
                for (int i = 0; i < req.m; ++i) remaining[i] += bv[i];
            } else if (traces) {
                int* budget = nullptr;
                if (g.kind == SymbolKind::UIndex)
                    budget = &t_left;
                else if (g.a.size() == 1)
                    budget = &r_left;
                else if (g.a.size() == 2)
                    budget = &s_left;
                if (!budget || *budget == 0) continue;
                --*budget;
                cur.push_back(g);
                rec(&cur.back());
                cur.pop_back();
                ++*budget;
            } else {
                int d = element_degree(req.family, g);
                if (d > deg_left) continue;
                deg_left -= d;
                cur.push_back(g);
                rec(&cur.back());
                cur.pop_back();
                deg_left += d;
            }
        }
    };

    if (!by_multidegree && !traces && req.degree < 0) throw UsageError("degree required");
    rec(nullptr);
    std::sort(out.begin(), out.end(),
              [](const Word& x, const Word& y) { return word_key(x) < word_key(y); });
    return out;
}

long count_standard_length(Family family, int m, int n, int t, int degree) {
    if (degree < 0) throw UsageError("degree must be >= 0");
    if (degree == 0) return 1;
    auto gens = generators(family, m, n, t);
    if (family == Family::Dt) {
        // z-degree grading: DP over (generator, remaining degree).
        std::vector<std::vector<long>> memo(gens.size(), std::vector<long>(degree + 1, -1));
        std::function<long(int, int)> chains = [&](int gi, int left) -> long {
            int d = static_cast<int>(gens[gi].a.size());
            if (d > left) return 0;
            if (d == left) return 1;
            long& mv = memo[gi][left];
            if (mv >= 0) return mv;
            long total = 0;
            for (std::size_t h = 0; h < gens.size(); ++h)
                if (doset_cmp(gens[gi], gens[h])) total += chains(static_cast<int>(h), left - d);
            return mv = total;
        };
        long total = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) total += chains(static_cast<int>(g), degree);
        return total;
    }
    // length grading
    std::vector<long> f(gens.size(), 1);
    for (int step = 1; step < degree; ++step) {
        std::vector<long> nf(gens.size(), 0);
        for (std::size_t g = 0; g < gens.size(); ++g)
            for (std::size_t h = 0; h < gens.size(); ++h)
                if (doset_cmp(gens[g], gens[h])) nf[g] += f[h];
        f = nf;
    }
    long total = 0;
    for (long v : f) total += v;
    return total;
}

}  // namespace smt::combinat
