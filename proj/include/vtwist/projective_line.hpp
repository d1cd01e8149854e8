#ifndef VTWIST_PROJECTIVE_LINE_HPP
#define VTWIST_PROJECTIVE_LINE_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "vtwist/matrix.hpp"
#include "vtwist/poly.hpp"

// The base curve is the projective line, seen through the affine chart with
// coordinate x. Sections of O(n) are polynomials of degree <= n in x.

namespace vtwist {

struct LineBundle {
    int degree = 0;
    friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

/// dim H^0(O(n)).
inline int h0(int n) { return std::max(n + 1, 0); }
inline int h0(const LineBundle& l) { return h0(l.degree); }

/// dim H^1(O(n)) = h0(O(-n-2)) by Serre duality.
inline int h1(int n) { return h0(-n - 2); }
inline int h1(const LineBundle& l) { return h1(l.degree); }

/// Global section of O(n), stored as its chart polynomial.
class Section {
   public:
    Section(LineBundle bundle, UniPoly poly) : bundle_(bundle), poly_(std::move(poly)) {
        if (poly_.degree() > bundle_.degree)
            throw ValidationError("section of O(" + std::to_string(bundle_.degree) + ") has degree " +
                                  std::to_string(poly_.degree()));
    }

    const LineBundle& bundle() const noexcept { return bundle_; }
    const UniPoly& poly() const noexcept { return poly_; }

    friend bool operator==(const Section&, const Section&) = default;

   private:
    LineBundle bundle_;
    UniPoly poly_;
};

/// O(e_1) + ... + O(e_r) with e_1 >= ... >= e_r.
class SplitBundle {
   public:
    explicit SplitBundle(std::vector<int> twists) : twists_(std::move(twists)) {
        if (twists_.empty()) throw ValidationError("split bundle of rank 0");
        if (!std::is_sorted(twists_.begin(), twists_.end(), std::greater<>()))
            throw ValidationError("split bundle twists must be sorted in descending order");
    }

    const std::vector<int>& twists() const noexcept { return twists_; }
    std::size_t rank() const noexcept { return twists_.size(); }
    int twist(std::size_t i) const { return twists_.at(i); }
    int degree() const {
        int d = 0;
        for (int e : twists_) d += e;
        return d;
    }

    friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

   private:
    std::vector<int> twists_;
};

/// Degree bound e_i - e_j + n for entry (i, j) of a section of End(E)(n).
inline int entry_bound(const SplitBundle& e, int twist, std::size_t i, std::size_t j) {
    return e.twist(i) - e.twist(j) + twist;
}

/// Section of End(E) tensor O(n) as an r x r polynomial matrix.
struct TwistedEndo {
    SplitBundle source;
    int twist = 0;
    Matrix<UniPoly> entries;

    TwistedEndo(SplitBundle e, int n, Matrix<UniPoly> m) : source(std::move(e)), twist(n), entries(std::move(m)) {
        if (entries.rows() != source.rank() || entries.cols() != source.rank())
            throw ValidationError("endomorphism matrix shape does not match the bundle rank");
    }

    static TwistedEndo zero(const SplitBundle& e, int n) { return {e, n, Matrix<UniPoly>(e.rank(), e.rank())}; }

    std::size_t rank() const noexcept { return source.rank(); }

    friend bool operator==(const TwistedEndo&, const TwistedEndo&) = default;
};

struct DegreeViolation {
    std::size_t row = 0, col = 0;
    int degree = 0;
    int bound = 0;
};

/// Entries whose degree exceeds e_i - e_j + n; empty when the matrix is a genuine global section.
inline std::vector<DegreeViolation> validate_twisted_endo(const TwistedEndo& t) {
    std::vector<DegreeViolation> out;
    for (std::size_t i = 0; i < t.rank(); ++i)
        for (std::size_t j = 0; j < t.rank(); ++j) {
            if (t.entries(i, j).is_zero()) continue;  // zero is a section of every line bundle
            const int deg = t.entries(i, j).degree();
            const int bound = entry_bound(t.source, t.twist, i, j);
            if (deg > bound) out.push_back({i, j, deg, bound});
        }
    return out;
}

inline bool is_valid(const TwistedEndo& t) { return validate_twisted_endo(t).empty(); }

inline std::string describe(const std::vector<DegreeViolation>& v) {
    std::string s;
    for (const DegreeViolation& d : v) {
        if (!s.empty()) s += "; ";
        s += "entry (" + std::to_string(d.row + 1) + "," + std::to_string(d.col + 1) + ") has degree " +
             std::to_string(d.degree) + " > bound " + std::to_string(d.bound);
    }
    return s;
}

inline void require_valid(const TwistedEndo& t, const std::string& name) {
    const auto v = validate_twisted_endo(t);
    if (!v.empty()) throw ValidationError(name + ": " + describe(v));
}

/// Fiber matrix at x0 in the chart trivialization; S is Rational or NumberFieldElement.
template <class S>
Matrix<S> evaluate_endo(const TwistedEndo& t, const S& x0) {
    return t.entries.map([&](const UniPoly& p) { return p(x0); });
}

/// Product A*B, a section of End(E)(m + n).
inline TwistedEndo compose(const TwistedEndo& a, const TwistedEndo& b) {
    if (!(a.source == b.source)) throw DomainError("composition of endomorphisms of different bundles");
    return {a.source, a.twist + b.twist, a.entries * b.entries};
}

}  // namespace vtwist

#endif  // VTWIST_PROJECTIVE_LINE_HPP
