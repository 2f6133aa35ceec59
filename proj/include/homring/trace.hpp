#pragma once

/**
 * @file trace.hpp
 * @brief Trace maps R -> S: S-linear epimorphisms whose kernel contains no
 * nonzero ideal of R.
 *
 * S is always a subring of R through an explicit embedding table. The three
 * embeddings in use are the identity (S = R), the characteristic subring
 * Z_m -> R and a Galois subring GR(p^n, s) -> GR(p^n, r) with s | r.
 */

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "error.hpp"
#include "galois_ring.hpp"
#include "ring.hpp"

namespace homring {

enum class TraceFailure { NotLinear, NotSurjective, KernelContainsIdeal };

inline std::string to_string(TraceFailure f) {
    switch (f) {
        case TraceFailure::NotLinear: return "NotLinear";
        case TraceFailure::NotSurjective: return "NotSurjective";
        case TraceFailure::KernelContainsIdeal: return "KernelContainsIdeal";
    }
    return "?";
}

struct TraceValidation {
    std::optional<TraceFailure> failure;
    /// Human-readable witness: the offending pair, missing value or ideal.
    std::string witness;

    bool ok() const { return !failure.has_value(); }
};

struct TraceMap {
    RingPtr source;  // R
    RingPtr target;  // S
    /// embedding[s] is the image of s in R.
    std::vector<Elem> embedding;
    /// values[a] = T(a) as an element of S.
    std::vector<Elem> values;
    std::string name;

    Elem operator()(Elem a) const { return values[a]; }

    std::vector<Elem> kernel() const {
        std::vector<Elem> k;
        for (Elem a = 0; a < values.size(); ++a)
            if (values[a] == target->zero()) k.push_back(a);
        return k;
    }
};

/// Checks additivity, S-linearity, surjectivity and the kernel-ideal condition.
inline TraceValidation validate_trace(const Ring& R, const Ring& S, const std::vector<Elem>& embedding,
                                      const std::vector<Elem>& values) {
    TraceValidation v;
    auto failed = [&](TraceFailure f, std::string w) {
        v.failure = f;
        v.witness = std::move(w);
        return v;
    };
    if (values.size() != R.order()) return failed(TraceFailure::NotLinear, "value table has wrong length");
    for (Elem a : values)
        if (a >= S.order()) return failed(TraceFailure::NotLinear, "value out of range for the target ring");
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = a; b < R.order(); ++b)
            if (values[R.add(a, b)] != S.add(values[a], values[b]))
                return failed(TraceFailure::NotLinear,
                              "T(" + R.render(a) + "+" + R.render(b) + ") != T(" + R.render(a) + ")+T(" + R.render(b) + ")");
    for (Elem s = 0; s < S.order(); ++s)
        for (Elem a = 0; a < R.order(); ++a)
            if (values[R.mul(embedding[s], a)] != S.mul(s, values[a]))
                return failed(TraceFailure::NotLinear, "T(" + S.render(s) + "*" + R.render(a) + ") != " + S.render(s) +
                                                           "*T(" + R.render(a) + ")");
    std::vector<char> hit(S.order(), 0);
    for (Elem a : values) hit[a] = 1;
    for (Elem s = 0; s < S.order(); ++s)
        if (!hit[s]) return failed(TraceFailure::NotSurjective, "value " + S.render(s) + " is never attained");
    // In a commutative ring every ideal contains a principal one, so it is
    // enough to look for x != 0 with R*x inside the kernel.
    for (Elem x = 1; x < R.order(); ++x) {
        if (values[x] != S.zero()) continue;
        bool inside = true;
        for (Elem r = 0; r < R.order() && inside; ++r)
            if (values[R.mul(r, x)] != S.zero()) inside = false;
        if (inside) return failed(TraceFailure::KernelContainsIdeal, "ideal generated by " + R.render(x));
    }
    return v;
}

inline TraceMap make_trace(RingPtr R, RingPtr S, std::vector<Elem> embedding, std::vector<Elem> values,
                           std::string name) {
    const auto report = validate_trace(*R, *S, embedding, values);
    if (!report.ok())
        fail(ErrorKind::ValidationFailed, to_string(*report.failure) + " (" + name + "): " + report.witness);
    return TraceMap{std::move(R), std::move(S), std::move(embedding), std::move(values), std::move(name)};
}

// ---------------------------------------------------------------------------
// Embeddings S -> R

inline void verify_embedding(const Ring& S, const Ring& R, const std::vector<Elem>& emb) {
    auto bad = [&](const std::string& why) {
        fail(ErrorKind::InvalidParameter, "embedding " + S.spec() + " -> " + R.spec() + ": " + why);
    };
    if (emb.size() != S.order()) bad("wrong size");
    if (emb[S.one()] != R.one()) bad("does not map 1 to 1");
    std::vector<char> hit(R.order(), 0);
    for (Elem v : emb) {
        if (hit[v]) bad("not injective");
        hit[v] = 1;
    }
    for (Elem a = 0; a < S.order(); ++a)
        for (Elem b = 0; b < S.order(); ++b) {
            if (emb[S.add(a, b)] != R.add(emb[a], emb[b])) bad("not additive");
            if (emb[S.mul(a, b)] != R.mul(emb[a], emb[b])) bad("not multiplicative");
        }
}

inline std::vector<Elem> identity_embedding(const Ring& R) {
    std::vector<Elem> e(R.order());
    for (Elem a = 0; a < e.size(); ++a) e[a] = a;
    return e;
}

/// s -> s * 1 for S = Z_m (or GR(p^n, 1)) with m the characteristic of R.
inline std::vector<Elem> characteristic_embedding(const Ring& S, const Ring& R) {
    require(S.order() == R.characteristic() && S.characteristic() == R.characteristic(),
            ErrorKind::InvalidParameter, S.spec() + " is not the characteristic subring of " + R.spec());
    std::vector<Elem> e(S.order());
    Elem img = R.zero();
    Elem s = S.zero();
    for (std::size_t k = 0; k < S.order(); ++k) {
        e[s] = img;
        s = S.add(s, S.one());
        img = R.add(img, R.one());
    }
    verify_embedding(S, R, e);
    return e;
}

/// GR(p^n, s) -> GR(p^n, r), s | r, sending the generator of S to a root of
/// its modulus among the Teichmüller units of R of order p^s - 1.
inline std::vector<Elem> galois_embedding(const Ring& S, const Ring& R) {
    require(S.galois() && R.galois(), ErrorKind::WrongRingFamily, "Galois embedding needs two Galois rings");
    const auto& gs = *S.galois();
    const auto& gr = *R.galois();
    require(gs.p == gr.p && gs.n == gr.n && gr.r % gs.r == 0, ErrorKind::InvalidParameter,
            S.spec() + " is not a Galois subring of " + R.spec());
    if (gs.r == 1) return characteristic_embedding(S, R);
    const auto td = teichmuller(R);
    const std::uint64_t qs = detail::ipow(gs.p, gs.r);
    const std::uint64_t qr = detail::ipow(gr.p, gr.r);
    const std::uint64_t step = (qr - 1) / (qs - 1);
    auto eval_modulus = [&](Elem t) {
        Elem acc = R.zero();
        Elem power = R.one();
        for (auto c : gs.modulus) {
            acc = R.add(acc, R.mul(R.from_int(c), power));
            power = R.mul(power, t);
        }
        return acc;
    };
    // The preferred image is g^{(q_r-1)/(q_s-1)}; its conjugates are tried next.
    for (std::uint64_t j = 1; j < qs - 1 + 1; ++j) {
        if (std::gcd(j, qs - 1) != 1) continue;
        const Elem t = R.pow(td.generator, step * j);
        if (eval_modulus(t) != R.zero()) continue;
        std::vector<Elem> e(S.order());
        for (Elem a = 0; a < S.order(); ++a) {
            const auto c = S.coords(a);
            Elem acc = R.zero();
            Elem power = R.one();
            for (auto ci : c) {
                acc = R.add(acc, R.mul(R.from_int(ci), power));
                power = R.mul(power, t);
            }
            e[a] = acc;
        }
        verify_embedding(S, R, e);
        return e;
    }
    fail(ErrorKind::InternalInvariantViolation, "no root of the modulus of " + S.spec() + " in " + R.spec());
}

/// Identity when S and R coincide, otherwise a characteristic or Galois subring embedding.
inline std::vector<Elem> default_embedding(const Ring& S, const Ring& R) {
    if (S.spec() == R.spec()) return identity_embedding(R);
    if (S.galois() && R.galois() && S.galois()->r > 1) return galois_embedding(S, R);
    if (S.order() == R.characteristic()) return characteristic_embedding(S, R);
    fail(ErrorKind::InvalidParameter, "no known embedding of " + S.spec() + " into " + R.spec());
}

inline std::vector<Elem> invert_embedding(const Ring& R, const std::vector<Elem>& embedding) {
    std::vector<Elem> back(R.order(), ~Elem{0});
    for (Elem s = 0; s < embedding.size(); ++s) back[embedding[s]] = s;
    return back;
}

// ---------------------------------------------------------------------------
// Concrete trace maps

inline TraceMap identity_trace(RingPtr R) {
    auto id = identity_embedding(*R);
    return make_trace(R, R, id, id, "identity");
}

/// a -> a + tau(a) + ... + tau^{k-1}(a), tau = frobenius^s, k = r/s.
inline TraceMap galois_trace(RingPtr R, RingPtr S) {
    if (!R->galois()) fail(ErrorKind::WrongRingFamily, "galois trace needs a Galois source ring, got " + R->spec());
    const auto& gr = *R->galois();
    std::uint32_t s = 0;
    if (S->galois()) {
        s = S->galois()->r;
    } else {
        require(S->order() == R->characteristic(), ErrorKind::InvalidParameter,
                S->spec() + " is not a Galois subring of " + R->spec());
        s = 1;
    }
    require(s >= 1 && gr.r % s == 0, ErrorKind::InvalidParameter, "subring degree must divide " + std::to_string(gr.r));
    auto embedding = S->spec() == R->spec() ? identity_embedding(*R) : default_embedding(*S, *R);
    const auto back = invert_embedding(*R, embedding);
    const auto tau = power_of(frobenius(R), s);
    const std::uint32_t k = gr.r / s;
    std::vector<Elem> values(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        Elem acc = R->zero();
        Elem cur = a;
        for (std::uint32_t j = 0; j < k; ++j) {
            acc = R->add(acc, cur);
            cur = tau(cur);
        }
        if (back[acc] == ~Elem{0})
            fail(ErrorKind::InternalInvariantViolation, "Galois trace of " + R->render(a) + " left the subring");
        values[a] = back[acc];
    }
    return make_trace(R, S, std::move(embedding), std::move(values), "galois");
}

/// a_1 + a_x x + a_y y + a_xy xy -> a_1 + a_x + a_y + a_xy over Z_p.
inline TraceMap fxy_sum_trace(RingPtr R) {
    if (R->structure().basis_names != std::vector<std::string>{"1", "x", "y", "xy"})
        fail(ErrorKind::WrongRingFamily, "fxy-sum needs an FXY ring, got " + R->spec());
    const auto p = R->structure().orders[0];
    auto S = make_integer_ring(p);
    auto emb = characteristic_embedding(*S, *R);
    std::vector<Elem> values(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        const auto c = R->coords(a);
        values[a] = static_cast<Elem>((c[0] + c[1] + c[2] + c[3]) % p);
    }
    return make_trace(R, S, std::move(emb), std::move(values), "fxy-sum");
}

/// r0 + t r1 -> lambda0 r0 + lambda1 r1 over Z_4.
inline TraceMap z4x_trace(RingPtr R, std::int64_t lambda0, std::int64_t lambda1) {
    if (R->structure().basis_names != std::vector<std::string>{"1", "t"})
        fail(ErrorKind::WrongRingFamily, "z4x trace needs the Z4X ring, got " + R->spec());
    auto S = make_integer_ring(4);
    auto emb = characteristic_embedding(*S, *R);
    std::vector<Elem> values(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        const auto c = R->coords(a);
        values[a] = static_cast<Elem>(detail::mod(lambda0 * c[0] + lambda1 * c[1], 4));
    }
    return make_trace(R, S, std::move(emb), std::move(values),
                      "z4x:" + std::to_string(lambda0) + "," + std::to_string(lambda1));
}

/// A trace from an explicit value table; S embeds via default_embedding.
inline TraceMap table_trace(RingPtr R, RingPtr S, std::vector<Elem> values, std::string name = "table") {
    auto emb = default_embedding(*S, *R);
    return make_trace(std::move(R), std::move(S), std::move(emb), std::move(values), std::move(name));
}

/// Two-column text table "<index in R> <index in S>", '#' comments allowed.
inline std::vector<Elem> read_trace_table(const std::string& path, const Ring& R, const Ring& S) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open trace table '" + path + "'");
    std::vector<Elem> values(R.order(), ~Elem{0});
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || a < 0 || b < 0 || static_cast<std::size_t>(a) >= R.order() ||
            static_cast<std::size_t>(b) >= S.order())
            fail(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": bad trace table row");
        values[a] = static_cast<Elem>(b);
    }
    for (Elem a = 0; a < R.order(); ++a)
        if (values[a] == ~Elem{0})
            fail(ErrorKind::ParseError, path + ": no value for element " + std::to_string(a));
    return values;
}

/**
 * Enumeration limits. `max_ring_order` bounds |R|, `max_candidates` bounds
 * |S|^g for g generators of R as an S-module. HOMRING_BUDGET overrides the
 * ring-order bound.
 */
struct TraceBudget {
    std::size_t max_ring_order = 256;
    std::size_t max_candidates = 1'000'000;

    static TraceBudget from_env() {
        TraceBudget b;
        if (const char* env = std::getenv("HOMRING_BUDGET")) {
            const long long v = std::atoll(env);
            if (v > 0) b.max_ring_order = static_cast<std::size_t>(v);
        }
        return b;
    }
};

/// All trace maps R -> S (S embedded via default_embedding), sorted by value table.
inline std::vector<TraceMap> enumerate_trace_maps(RingPtr R, RingPtr S, TraceBudget budget = TraceBudget::from_env()) {
    if (R->order() > budget.max_ring_order)
        fail(ErrorKind::BudgetExceeded, "trace enumeration on a ring of order " + std::to_string(R->order()));
    const auto emb = default_embedding(*S, *R);

    // Greedy generators of R as an S-module.
    std::vector<Elem> gens;
    std::vector<char> span(R->order(), 0);
    std::vector<Elem> span_list{R->zero()};
    span[R->zero()] = 1;
    for (Elem a = 0; a < R->order(); ++a) {
        if (span[a]) continue;
        gens.push_back(a);
        std::vector<Elem> next = span_list;
        for (Elem base : span_list)
            for (Elem s = 1; s < S->order(); ++s) {
                const Elem v = R->add(base, R->mul(emb[s], a));
                if (!span[v]) {
                    span[v] = 1;
                    next.push_back(v);
                }
            }
        span_list = std::move(next);
    }

    const std::size_t g = gens.size();
    double count = 1;
    for (std::size_t i = 0; i < g; ++i) count *= static_cast<double>(S->order());
    if (count > static_cast<double>(budget.max_candidates))
        fail(ErrorKind::BudgetExceeded, "trace enumeration needs " + std::to_string(count) + " candidates");
    const auto tuples = static_cast<std::size_t>(count);

    // Every tuple (s_1..s_g) maps to sum emb(s_i) g_i. Tuples that land on 0
    // are relations; a candidate is well defined iff it kills all of them.
    auto tuple_digits = [&](std::size_t t) {
        std::vector<Elem> d(g);
        for (std::size_t i = 0; i < g; ++i) {
            d[i] = static_cast<Elem>(t % S->order());
            t /= S->order();
        }
        return d;
    };
    std::vector<std::vector<Elem>> relations;
    std::vector<std::vector<Elem>> representative(R->order());
    for (std::size_t t = 0; t < tuples; ++t) {
        const auto d = tuple_digits(t);
        Elem x = R->zero();
        for (std::size_t i = 0; i < g; ++i) x = R->add(x, R->mul(emb[d[i]], gens[i]));
        if (x == R->zero() && t != 0) relations.push_back(d);
        if (representative[x].empty()) representative[x] = d;
    }

    std::vector<TraceMap> out;
    for (std::size_t c = 0; c < tuples; ++c) {
        const auto v = tuple_digits(c);
        auto apply = [&](const std::vector<Elem>& d) {
            Elem acc = S->zero();
            for (std::size_t i = 0; i < g; ++i) acc = S->add(acc, S->mul(d[i], v[i]));
            return acc;
        };
        bool well_defined = true;
        for (const auto& rel : relations)
            if (apply(rel) != S->zero()) {
                well_defined = false;
                break;
            }
        if (!well_defined) continue;
        std::vector<Elem> values(R->order());
        for (Elem x = 0; x < R->order(); ++x) values[x] = apply(representative[x]);
        if (!validate_trace(*R, *S, emb, values).ok()) continue;
        out.push_back(TraceMap{R, S, emb, std::move(values), ""});
    }
    std::sort(out.begin(), out.end(), [](const TraceMap& a, const TraceMap& b) { return a.values < b.values; });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].name = "enumerated#" + std::to_string(i);
    return out;
}

/// The trace used to build a generating character of R by default.
inline TraceMap default_absolute_trace(RingPtr R) {
    if (R->family() == RingFamily::IntegerModular) return identity_trace(std::move(R));
    if (R->galois()) {
        auto S = make_integer_ring(static_cast<std::int64_t>(R->characteristic()));
        return galois_trace(std::move(R), std::move(S));
    }
    const auto& names = R->structure().basis_names;
    if (names == std::vector<std::string>{"1", "x", "y", "xy"}) return fxy_sum_trace(std::move(R));
    if (names == std::vector<std::string>{"1", "t"} && R->structure().orders == std::vector<std::int64_t>{4, 4})
        return z4x_trace(std::move(R), 0, 1);
    auto S = make_integer_ring(static_cast<std::int64_t>(R->characteristic()));
    auto all = enumerate_trace_maps(R, S);
    if (all.empty()) fail(ErrorKind::NotGenerating, R->spec() + " has no trace map onto its characteristic subring");
    return all.front();
}

}  // namespace homring
