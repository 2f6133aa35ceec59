#pragma once

/**
 * @file config.hpp
 * @brief Job configuration: ring/trace/function spec grammars and
 * key=value config text.
 *
 *   ring     Zm:<m> | GR:<p>,<n>,<r> | FXY:<p> | Z4X
 *   trace    galois | identity | fxy-sum | z4x:<l0>,<l1> | table:<path>
 *   f        pow:<d> | frank:<perm|id|rand:SEED> | sigmaquad:<frobenius|swapxy> | table:<path>
 *   gamma    <num>[/<den>] | hamming-normalized
 */

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "code_function.hpp"
#include "error.hpp"
#include "galois_ring.hpp"
#include "hom_weight.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "trace.hpp"

namespace homring {

struct JobConfig {
    std::string ring;
    std::optional<std::string> subring;
    std::optional<std::string> trace;
    std::optional<std::string> function;
    std::string gamma = "1";
    WeightKind weight = WeightKind::Homogeneous;
    std::string format = "json";
    std::optional<std::size_t> budget;
    std::uint64_t seed = 0;

    std::string subring_spec() const { return subring.value_or(ring); }
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
    if (s.empty()) fail(ErrorKind::ParseError, "empty integer in " + std::string(what));
    std::int64_t v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-') {
        neg = true;
        i = 1;
    }
    if (i == s.size()) fail(ErrorKind::ParseError, "bad integer '" + std::string(s) + "' in " + std::string(what));
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(ErrorKind::ParseError, "bad integer '" + std::string(s) + "' in " + std::string(what));
        v = v * 10 + (s[i] - '0');
        if (v > (std::int64_t{1} << 40)) fail(ErrorKind::ParseError, "integer too large in " + std::string(what));
    }
    return neg ? -v : v;
}

}  // namespace detail

/// Builds a ring from its spec string.
inline RingPtr parse_ring(std::string_view spec) {
    if (spec == "Z4X") return make_table_ring(spec);
    if (spec.starts_with("FXY:")) {
        detail::parse_int(spec.substr(4), "FXY spec");
        return make_table_ring(spec);
    }
    if (spec.starts_with("Zm:")) return make_integer_ring(detail::parse_int(spec.substr(3), "Zm spec"));
    if (spec.starts_with("GR:")) {
        const auto parts = detail::split(spec.substr(3), ',');
        if (parts.size() != 3) fail(ErrorKind::ParseError, "GR spec needs p,n,r: '" + std::string(spec) + "'");
        return make_galois_ring(detail::parse_int(parts[0], "GR spec"), detail::parse_int(parts[1], "GR spec"),
                                detail::parse_int(parts[2], "GR spec"));
    }
    fail(ErrorKind::UnknownPreset, "unknown ring spec '" + std::string(spec) + "'");
}

inline bool is_fxy(const Ring& R) { return R.structure().basis_names == std::vector<std::string>{"1", "x", "y", "xy"}; }
inline bool is_z4x(const Ring& R) { return R.spec() == "Z4X"; }

/// Trace map R -> S from its spec; `identity` requires S = R.
inline TraceMap parse_trace(std::string_view spec, const RingPtr& R, const RingPtr& S) {
    if (spec == "identity") {
        if (S->spec() != R->spec()) fail(ErrorKind::UnknownPreset, "identity trace needs subring = ring");
        return identity_trace(R);
    }
    if (spec == "galois") {
        if (!R->galois()) fail(ErrorKind::UnknownPreset, "galois trace needs a Galois ring, got " + R->spec());
        return galois_trace(R, S);
    }
    if (spec == "fxy-sum") {
        if (!is_fxy(*R)) fail(ErrorKind::UnknownPreset, "fxy-sum needs an FXY ring, got " + R->spec());
        auto T = fxy_sum_trace(R);
        if (T.target->spec() != S->spec())
            fail(ErrorKind::UnknownPreset, "fxy-sum maps onto " + T.target->spec() + ", not " + S->spec());
        return T;
    }
    if (spec.starts_with("z4x:")) {
        if (!is_z4x(*R)) fail(ErrorKind::UnknownPreset, "z4x trace needs the Z4X ring, got " + R->spec());
        const auto parts = detail::split(spec.substr(4), ',');
        if (parts.size() != 2) fail(ErrorKind::ParseError, "z4x trace needs two coefficients");
        auto T = z4x_trace(R, detail::parse_int(parts[0], "z4x spec"), detail::parse_int(parts[1], "z4x spec"));
        if (T.target->spec() != S->spec()) fail(ErrorKind::UnknownPreset, "z4x trace maps onto Zm:4");
        return T;
    }
    if (spec.starts_with("table:")) {
        const std::string path(spec.substr(6));
        return table_trace(R, S, read_trace_table(path, *R, *S), std::string(spec));
    }
    fail(ErrorKind::UnknownPreset, "unknown trace spec '" + std::string(spec) + "'");
}

/// Default trace: identity for S = R, otherwise the natural preset for R.
inline TraceMap default_trace(const RingPtr& R, const RingPtr& S) {
    if (S->spec() == R->spec()) return identity_trace(R);
    if (R->galois()) return galois_trace(R, S);
    if (is_fxy(*R)) return parse_trace("fxy-sum", R, S);
    if (is_z4x(*R)) return parse_trace("z4x:0,1", R, S);
    fail(ErrorKind::ParseError, "no default trace from " + R->spec() + " onto " + S->spec() + "; set trace=");
}

inline CodeFunction parse_function(std::string_view spec, const RingPtr& R) {
    if (spec.starts_with("pow:")) return power_map(R, detail::parse_int(spec.substr(4), "pow spec"));
    if (spec.starts_with("frank:")) {
        if (!R->galois() || R->galois()->n != 2)
            fail(ErrorKind::UnknownPreset, "frank needs GR(p^2, r), got " + R->spec());
        const auto arg = spec.substr(6);
        if (arg == "id") return frank_map(R);
        const auto q = teichmuller(*R).q;
        if (arg.starts_with("rand:")) {
            const auto seed = static_cast<std::uint64_t>(detail::parse_int(arg.substr(5), "frank seed"));
            auto f = frank_map(R, random_teichmuller_permutation(q, seed));
            f.description = "frank:rand:" + std::to_string(seed);
            return f;
        }
        std::vector<std::size_t> perm;
        for (const auto& p : detail::split(arg, ',')) {
            const auto v = detail::parse_int(p, "frank permutation");
            if (v < 0) fail(ErrorKind::BadPermutation, "negative permutation entry");
            perm.push_back(static_cast<std::size_t>(v));
        }
        return frank_map(R, perm);
    }
    if (spec.starts_with("sigmaquad:")) {
        const auto which = spec.substr(10);
        if (which == "swapxy") {
            if (!is_fxy(*R)) fail(ErrorKind::UnknownPreset, "sigmaquad:swapxy needs an FXY ring, got " + R->spec());
            return sigma_quadratic(R, swap_xy(R));
        }
        if (which == "frobenius") {
            if (!R->galois())
                fail(ErrorKind::UnknownPreset, "sigmaquad:frobenius needs a Galois ring, got " + R->spec());
            return sigma_quadratic(R, frobenius(R));
        }
        fail(ErrorKind::UnknownPreset, "unknown sigmaquad automorphism '" + std::string(which) + "'");
    }
    if (spec.starts_with("table:")) {
        const std::string path(spec.substr(6));
        std::ifstream in(path);
        if (!in) fail(ErrorKind::IoError, "cannot open function table '" + path + "'");
        std::vector<Elem> t(R->order(), ~Elem{0});
        long long a = 0, b = 0;
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            if (!(ls >> a)) continue;
            if (!(ls >> b) || a < 0 || b < 0 || static_cast<std::size_t>(a) >= R->order() ||
                static_cast<std::size_t>(b) >= R->order())
                fail(ErrorKind::ParseError, path + ": bad function table row '" + line + "'");
            t[a] = static_cast<Elem>(b);
        }
        for (Elem v : t)
            if (v == ~Elem{0}) fail(ErrorKind::ParseError, path + ": function table is not total");
        return custom_function(R, std::move(t), std::string(spec));
    }
    fail(ErrorKind::UnknownPreset, "unknown function spec '" + std::string(spec) + "'");
}

inline Rational parse_gamma(std::string_view spec, const Ring& S) {
    if (spec == "hamming-normalized") return hamming_normalized_gamma(S);
    return parse_rational(spec);
}

/**
 * Parses whitespace-separated key=value pairs; '#' starts a comment.
 * Keys: ring, subring, trace, f, gamma, weight, format, budget, seed.
 */
inline JobConfig parse_config(std::string_view text) {
    JobConfig cfg;
    bool have_ring = false;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto error = [&](std::size_t l, std::size_t c, const std::string& msg) {
        fail(ErrorKind::ParseError, std::to_string(l) + ":" + std::to_string(c) + ": " + msg);
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        const std::size_t tok_line = line, tok_col = col;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
            ++i;
            ++col;
        }
        const std::string_view tok = text.substr(start, i - start);
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos || eq == 0) error(tok_line, tok_col, "expected key=value, got '" + std::string(tok) + "'");
        const std::string key(tok.substr(0, eq));
        const std::string value(tok.substr(eq + 1));
        if (value.empty()) error(tok_line, tok_col + eq + 1, "empty value for '" + key + "'");
        if (key == "ring") {
            cfg.ring = value;
            have_ring = true;
        } else if (key == "subring") {
            cfg.subring = value;
        } else if (key == "trace") {
            cfg.trace = value;
        } else if (key == "f") {
            cfg.function = value;
        } else if (key == "gamma") {
            cfg.gamma = value;
        } else if (key == "weight") {
            if (value == "homogeneous")
                cfg.weight = WeightKind::Homogeneous;
            else if (value == "hamming")
                cfg.weight = WeightKind::Hamming;
            else
                error(tok_line, tok_col + eq + 1, "weight must be homogeneous or hamming");
        } else if (key == "format") {
            if (value != "json" && value != "csv") error(tok_line, tok_col + eq + 1, "format must be json or csv");
            cfg.format = value;
        } else if (key == "budget") {
            const auto v = detail::parse_int(value, "budget");
            if (v <= 0) error(tok_line, tok_col + eq + 1, "budget must be positive");
            cfg.budget = static_cast<std::size_t>(v);
        } else if (key == "seed") {
            const auto v = detail::parse_int(value, "seed");
            if (v < 0) error(tok_line, tok_col + eq + 1, "seed must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(v);
        } else {
            error(tok_line, tok_col, "unknown key '" + key + "'");
        }
    }
    if (!have_ring) fail(ErrorKind::ParseError, "missing required key 'ring'");
    return cfg;
}

/// Everything a code analysis needs, built and validated from a JobConfig.
struct Job {
    JobConfig config;
    RingPtr R;
    RingPtr S;
    TraceMap trace;
    std::optional<CodeFunction> f;
    Rational gamma;
    CodeBudget budget;
};

inline Job build_job(const JobConfig& cfg) {
    auto R = parse_ring(cfg.ring);
    auto S = cfg.subring ? parse_ring(*cfg.subring) : R;
    auto T = cfg.trace ? parse_trace(*cfg.trace, R, S) : default_trace(R, S);
    std::optional<CodeFunction> f;
    if (cfg.function) f = parse_function(*cfg.function, R);
    CodeBudget budget = CodeBudget::from_env();
    if (cfg.budget) budget.max_ring_order = *cfg.budget;
    const Rational gamma = parse_gamma(cfg.gamma, *S);
    return Job{cfg, std::move(R), std::move(S), std::move(T), std::move(f), gamma, budget};
}

/// parse_config followed by a semantic check of every referenced preset.
inline JobConfig parse_and_validate_config(std::string_view text) {
    JobConfig cfg = parse_config(text);
    build_job(cfg);
    return cfg;
}

}  // namespace homring
