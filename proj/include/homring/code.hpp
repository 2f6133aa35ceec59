#pragma once

/**
 * @file code.hpp
 * @brief The subring subcodes C_{f,S} = { x -> T(alpha x + beta f(x)) },
 * their W-transform, spectrum and weight enumerators.
 */

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "character.hpp"
#include "code_function.hpp"
#include "hom_weight.hpp"
#include "rational.hpp"
#include "trace.hpp"

namespace homring {

/// Limit on |R| for pair enumeration; HOMRING_BUDGET overrides it.
struct CodeBudget {
    std::size_t max_ring_order = 512;

    static CodeBudget from_env() {
        CodeBudget b;
        if (const char* env = std::getenv("HOMRING_BUDGET")) {
            const long long v = std::atoll(env);
            if (v > 0) b.max_ring_order = static_cast<std::size_t>(v);
        }
        return b;
    }
};

using Codeword = std::vector<Elem>;

namespace detail {
struct CodewordHash {
    std::size_t operator()(const Codeword& c) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Elem e : c) h = (h ^ e) * 1099511628211ull;
        return h;
    }
};
}  // namespace detail

/// Checks that the code's character is fixed by the sigma of a sigma-quadratic f.
inline void check_sigma_condition(const TraceMap& T, const CodeFunction& f, const Character& chi) {
    if (f.kind != FunctionKind::SigmaQuadratic || !f.sigma) return;
    if (!char_fixed_by(chi, *f.sigma))
        fail(ErrorKind::ValidationFailed, "character induced by trace '" + T.name + "' is not fixed by " + f.sigma->tag);
}

struct Code {
    TraceMap trace;
    CodeFunction f;
    /// Distinct codewords over S in canonical R-order, sorted.
    std::vector<Codeword> codewords;
    /// Lexicographically smallest (alpha, beta) producing each codeword.
    std::vector<std::pair<Elem, Elem>> provenance;

    const RingPtr& R() const { return trace.source; }
    const RingPtr& S() const { return trace.target; }
    std::size_t size() const { return codewords.size(); }

    bool contains(const Codeword& c) const { return std::binary_search(codewords.begin(), codewords.end(), c); }
};

inline Codeword evaluate_codeword(const TraceMap& T, const CodeFunction& f, Elem alpha, Elem beta) {
    const Ring& R = *T.source;
    Codeword c(R.order());
    for (Elem x = 0; x < R.order(); ++x) c[x] = T(R.add(R.mul(alpha, x), R.mul(beta, f(x))));
    return c;
}

inline Code build_code(const TraceMap& T, const CodeFunction& f, CodeBudget budget = CodeBudget::from_env()) {
    const Ring& R = *T.source;
    require(f.ring->spec() == R.spec(), ErrorKind::InvalidParameter, "function and trace live on different rings");
    if (R.order() > budget.max_ring_order)
        fail(ErrorKind::BudgetExceeded, "code over a ring of order " + std::to_string(R.order()) + " exceeds budget " +
                                            std::to_string(budget.max_ring_order));
    check_sigma_condition(T, f, character_through(T));

    std::unordered_map<Codeword, std::pair<Elem, Elem>, detail::CodewordHash> seen;
    for (Elem alpha = 0; alpha < R.order(); ++alpha)
        for (Elem beta = 0; beta < R.order(); ++beta) seen.try_emplace(evaluate_codeword(T, f, alpha, beta), alpha, beta);

    Code code{T, f, {}, {}};
    std::vector<std::pair<Codeword, std::pair<Elem, Elem>>> items(seen.begin(), seen.end());
    std::sort(items.begin(), items.end());
    code.codewords.reserve(items.size());
    code.provenance.reserve(items.size());
    for (auto& [c, prov] : items) {
        code.codewords.push_back(std::move(c));
        code.provenance.push_back(prov);
    }
    return code;
}

/// Weight of a vector over S: sum of per-coordinate weights.
inline Rational codeword_weight(const Codeword& c, const WeightTable& wt) {
    std::vector<std::int64_t> counts(wt.table.size(), 0);
    for (Elem s : c) ++counts[s];
    Rational sum(0);
    for (std::size_t s = 0; s < counts.size(); ++s)
        if (counts[s] != 0) sum += wt.table[s] * Rational(counts[s]);
    return sum;
}

/**
 * Evaluates W^{f,S}(alpha, beta) along two independent routes:
 * the cyclotomic double sum (1/|S^x|) sum_u sum_x chi^u(alpha x + beta f(x))
 * and |R| - w(c_{alpha,beta}) with the normalised homogeneous weight on S.
 */
class Transform {
   public:
    Transform(TraceMap T, CodeFunction f)
        : T_(std::move(T)), f_(std::move(f)), chi_(character_through(T_)), weight_(hom_weight_axiomatic(T_.target)) {
        require(f_.ring->spec() == T_.source->spec(), ErrorKind::InvalidParameter,
                "function and trace live on different rings");
        check_sigma_condition(T_, f_, chi_);
        for (Elem u : T_.target->units()) embedded_units_.push_back(T_.embedding[u]);
    }

    const Character& character() const { return chi_; }
    const WeightTable& weight() const { return weight_; }

    Rational via_characters(Elem alpha, Elem beta) const {
        const Ring& R = *T_.source;
        std::vector<std::int64_t> counts(static_cast<std::size_t>(chi_.conductor), 0);
        for (Elem x = 0; x < R.order(); ++x) {
            const Elem v = R.add(R.mul(alpha, x), R.mul(beta, f_(x)));
            for (Elem u : embedded_units_) ++counts[chi_.exponent[R.mul(u, v)]];
        }
        const Rational total = CyclotomicNumber::from_exponent_counts(chi_.conductor, counts).to_rational();
        return total / Rational(static_cast<std::int64_t>(embedded_units_.size()));
    }

    Rational via_weight(Elem alpha, Elem beta) const {
        const Rational w = codeword_weight(evaluate_codeword(T_, f_, alpha, beta), weight_);
        return Rational(static_cast<std::int64_t>(T_.source->order())) - w;
    }

    Rational operator()(Elem alpha, Elem beta) const {
        const Rational a = via_characters(alpha, beta);
        const Rational b = via_weight(alpha, beta);
        if (a != b)
            fail(ErrorKind::InternalInvariantViolation,
                 "W(" + T_.source->render(alpha) + "," + T_.source->render(beta) + "): character sum " +
                     to_short_string(a) + " != |R| - w = " + to_short_string(b));
        return a;
    }

   private:
    TraceMap T_;
    CodeFunction f_;
    Character chi_;
    WeightTable weight_;
    std::vector<Elem> embedded_units_;
};

inline Rational transform_W(const TraceMap& T, const CodeFunction& f, Elem alpha, Elem beta) {
    return Transform(T, f)(alpha, beta);
}

/// Lambda_{f,S}, sorted descending.
inline std::vector<Rational> spectrum(const TraceMap& T, const CodeFunction& f, CodeBudget budget = CodeBudget::from_env()) {
    const Ring& R = *T.source;
    if (R.order() > budget.max_ring_order)
        fail(ErrorKind::BudgetExceeded, "spectrum over a ring of order " + std::to_string(R.order()));
    const Transform W(T, f);
    std::set<Rational, std::greater<>> values;
    for (Elem alpha = 0; alpha < R.order(); ++alpha)
        for (Elem beta = 0; beta < R.order(); ++beta) values.insert(W(alpha, beta));
    return {values.begin(), values.end()};
}

enum class WeightKind { Homogeneous, Hamming };

inline std::string to_string(WeightKind k) { return k == WeightKind::Homogeneous ? "homogeneous" : "hamming"; }

struct WeightEnumerator {
    std::map<Rational, std::uint64_t> counts;
    Rational gamma{1};
    WeightKind kind = WeightKind::Homogeneous;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [w, c] : counts) t += c;
        return t;
    }

    std::vector<Rational> weights() const {
        std::vector<Rational> w;
        for (const auto& [k, c] : counts) w.push_back(k);
        return w;
    }

    /// Same weights with the same multiplicities (gamma and kind are metadata).
    bool same_distribution(const WeightEnumerator& o) const { return counts == o.counts; }

    /// "1+18X^12+39X^16+6X^{81/2}"
    std::string to_string() const {
        std::string s;
        for (const auto& [w, c] : counts) {
            if (!s.empty()) s += "+";
            if (w == 0) {
                s += std::to_string(c);
                continue;
            }
            if (c != 1) s += std::to_string(c);
            s += "X";
            if (is_integer(w)) {
                if (w != 1) s += "^" + to_short_string(w);
            } else {
                s += "^{" + to_short_string(w) + "}";
            }
        }
        return s;
    }
};

inline WeightEnumerator weight_enumerator(const Code& code, const WeightTable& wt,
                                          WeightKind kind = WeightKind::Homogeneous) {
    require(wt.ring->spec() == code.S()->spec(), ErrorKind::InvalidParameter, "weight table is not over S");
    WeightEnumerator e;
    e.gamma = wt.gamma;
    e.kind = kind;
    for (const auto& c : code.codewords) ++e.counts[codeword_weight(c, wt)];
    return e;
}

inline std::vector<Rational> distinct_weights(const Code& code, const WeightTable& wt) {
    return weight_enumerator(code, wt).weights();
}

}  // namespace homring
