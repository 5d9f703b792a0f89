#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smt/errors.hpp"

namespace smt::combinat {

// A strictly increasing tuple of integers in [1, m]. The empty tuple is
// allowed and plays the role of the empty index set.
using IndexTuple = std::vector<int>;

bool is_strictly_increasing(const IndexTuple& t);
void validate_tuple(const IndexTuple& t, int m);

// The partial order on tuples: A >= B iff |A| <= |B| and A_j >= B_j on the
// common prefix. Shorter tuples dominate; the empty tuple is the maximum.
bool tuple_ge(const IndexTuple& a, const IndexTuple& b);
bool tuple_gt(const IndexTuple& a, const IndexTuple& b);

// All strictly increasing r-tuples over [1, m], in lexicographic order.
std::vector<IndexTuple> tuples(int r, int m);

// ---------------------------------------------------------------------------
// Generator symbols and words

enum class SymbolKind { One = 0, Pair = 1, UIndex = 2 };

// A named algebra generator: a minor pair p(A,B), a row determinant u(I), or
// the formal unit. Pair stores (a,b); UIndex stores the tuple in `a`.
struct DosetElement {
    SymbolKind kind = SymbolKind::One;
    IndexTuple a;
    IndexTuple b;

    static DosetElement one() { return DosetElement{}; }
    static DosetElement pair(IndexTuple A, IndexTuple B);
    static DosetElement u(IndexTuple I);

    bool operator==(const DosetElement& o) const = default;
};

// |A| = |B|, A >= B, entries in [1, m].
void validate_pair(const IndexTuple& A, const IndexTuple& B, int m);

// Validates a symbol against the ambient (m, n): pairs have size <= n-1
// (size <= pair_bound when given, for the determinantal families), u-tuples
// have size exactly n.
void validate_element(const DosetElement& e, int m, int n, int pair_bound = -1);

using Word = std::vector<DosetElement>;

// The comparison order on D = H ∪ {1}:  One >= everything;
// Pair(A,B) >= Pair(A',B') iff B >= A';  UIndex(I) >= UIndex(J) iff I >= J;
// Pair(A,B) >= UIndex(I) iff B >= I;  UIndex is never >= Pair.
// Not reflexive: Pair(A,B) >= itself fails whenever B < A.
bool doset_cmp(const DosetElement& x, const DosetElement& y);

// A word is standard iff consecutive symbols satisfy doset_cmp throughout.
bool is_standard(const Word& w);

// True iff some arrangement of the multiset of symbols is a chain, which by
// transitivity happens iff all unordered symbol pairs (including repeats)
// are comparable.
bool is_chainable(const Word& w);

// ---------------------------------------------------------------------------
// Canonical encodings and arrangements

// Flat integer encoding (kind, sizes, entries); total order, used as the
// deterministic tiebreak and for the reproducible output order.
std::vector<int> element_key(const DosetElement& e);
std::vector<int> word_key(const Word& w);

// Padded digit string of a tuple: (entries, m, ..., m, 1) of length width+1.
// This is the digit encoding behind the straightening weight.
std::vector<int> padded_digits(const IndexTuple& t, int m, int width);

// Sorts the word into its canonical arrangement: Ones first, then pairs,
// then u-symbols, descending by padded digit keys (shorter tuple first on
// key ties, then element_key). If the multiset is chainable the result is a
// chain. Deterministic and independent of the input arrangement.
Word canonical_arrangement(Word w, int m, int n);

// ---------------------------------------------------------------------------
// Ground poset, doset axioms, lattice structure

// P = all tuples of sizes 1..n over [1,m], plus a formal top element.
// The top is represented by an empty optional.
struct GroundPoset {
    int m = 0;
    int n = 0;
    // element 0 is the top; the rest are tuples.
    std::vector<std::optional<IndexTuple>> elements;

    static GroundPoset make(int m, int n);
    // x >= y in P.
    bool ge(int x, int y) const;
    std::size_t size() const { return elements.size(); }
    std::string element_name(int x) const;
};

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;
    // A few counters for the record.
    long cases_checked = 0;

    void fail(const std::string& msg) {
        pass = false;
        failures.push_back(msg);
    }
};

// Brute-force verification of the doset axioms for D ⊂ P×P realized via
// Pair(A,B) ↦ (A,B), UIndex(I) ↦ (I,I), One ↦ (top,top).
CheckReport doset_axioms_check(int m, int n);

// Verifies that P has pairwise meets and joins and that they distribute.
CheckReport lattice_check(int m, int n);

// ---------------------------------------------------------------------------
// The symplectic index set I_G(m, 2m) and the theta map

// i ∈ I(m,2m) such that for every j in [1,2m] precisely one of {j, 2m+1-j}
// occurs in i.
bool in_symplectic_index_set(const IndexTuple& i, int m);
std::vector<IndexTuple> symplectic_indices(int m);

struct MinorPair {
    IndexTuple A;
    IndexTuple B;
    bool operator==(const MinorPair& o) const = default;
};

// theta(i) = (A_i, B_i) with A_i = {2m+1-i_m, ..., 2m+1-i_{r+1}} sorted
// increasing and B_i = complement of {i_1..i_r} in [1,m], where r is the
// number of entries <= m. Requires i ∈ I_G(m,2m); lands on the diagonal.
MinorPair theta_map(const IndexTuple& i, int m);

// ---------------------------------------------------------------------------
// Standard word enumeration

enum class Family { S, Dt, RD, Traces };

struct EnumerateRequest {
    Family family = Family::S;
    int m = 0;
    int n = 0;          // families S, RD
    int t = 0;          // family Dt
    int degree = -1;    // length for S/RD, z-degree for Dt
    std::vector<int> multidegree;  // family S only, alternative to degree
    int tr = 0, ts = 0, tt = 0;    // family Traces: type (r,s,t); requires n=3
};

// All generators of the requested family, canonically sorted (descending).
std::vector<DosetElement> generators(Family family, int m, int n, int t);

// The complete duplicate-free list of standard words of the requested
// (multi)degree, sorted by word_key.
std::vector<Word> enumerate_standard(const EnumerateRequest& req);

// Counts without materializing words (dynamic programming over chains).
long count_standard_length(Family family, int m, int n, int t, int degree);

}  // namespace smt::combinat
