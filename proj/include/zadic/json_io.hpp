#pragma once

// JSON wire formats for the domain types.  Big integers serialize as JSON
// numbers while they fit in 64 bits and as decimal strings beyond that;
// parsers accept both spellings.

#include "complements.hpp"
#include "gadic.hpp"
#include "map23.hpp"
#include "nets.hpp"
#include "types.hpp"
#include "wordlen.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <string>

namespace zadic {

inline nlohmann::json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

} // namespace zadic

namespace zadic::gadic {

inline void to_json(nlohmann::json& j, const SignedDigitRepr& r) {
    j = nlohmann::json{{"base", r.base}, {"digits", r.digits}};
}
inline void from_json(const nlohmann::json& j, SignedDigitRepr& r) {
    j.at("base").get_to(r.base);
    j.at("digits").get_to(r.digits);
}

} // namespace zadic::gadic

namespace zadic::wordlen {

inline void to_json(nlohmann::json& j, const WitnessTerm& t) {
    j = nlohmann::json{{"sign", t.sign}, {"base", int_to_json(t.gen.base)}, {"exp", t.gen.exp}};
}
inline void from_json(const nlohmann::json& j, WitnessTerm& t) {
    j.at("sign").get_to(t.sign);
    t.gen.base = int_from_json(j.at("base"));
    j.at("exp").get_to(t.gen.exp);
    t.gen.magnitude = 1;
    for (long long i = 0; i < t.gen.exp; ++i) t.gen.magnitude *= t.gen.base;
}

inline void to_json(nlohmann::json& j, const LengthResult& r) {
    j = nlohmann::json{{"n", int_to_json(r.n)},
                       {"length", r.length},
                       {"witness", r.witness},
                       {"capped", r.capped},
                       {"cap", r.cap}};
}
inline void from_json(const nlohmann::json& j, LengthResult& r) {
    r.n = int_from_json(j.at("n"));
    j.at("length").get_to(r.length);
    j.at("witness").get_to(r.witness);
    j.at("capped").get_to(r.capped);
    j.at("cap").get_to(r.cap);
}

inline void to_json(nlohmann::json& j, const DioSolution& s) {
    j = nlohmann::json{{"a", s.a}, {"b", s.b}, {"target", int_to_json(s.target)}};
}
inline void from_json(const nlohmann::json& j, DioSolution& s) {
    j.at("a").get_to(s.a);
    j.at("b").get_to(s.b);
    s.target = int_from_json(j.at("target"));
}

} // namespace zadic::wordlen

namespace zadic::nets {

// The word is serialized by value (±g^i); the base is needed to factor the
// powers back out.
inline nlohmann::json cover_certificate_to_json(const CoverCertificate& c, long long base) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& t : c.word) word.push_back(int_to_json(t.value(base)));
    return nlohmann::json{{"n", int_to_json(c.n)}, {"c", int_to_json(c.c)}, {"word", word}};
}

inline CoverCertificate cover_certificate_from_json(const nlohmann::json& j, long long base) {
    CoverCertificate cert;
    cert.n = int_from_json(j.at("n"));
    cert.c = int_from_json(j.at("c"));
    for (const auto& jt : j.at("word")) {
        Int v = int_from_json(jt);
        if (v == 0) throw std::invalid_argument("certificate word contains 0");
        const int sign = v > 0 ? +1 : -1;
        Int mag = sign > 0 ? v : Int(-v);
        long long exp = 0;
        while (mag % base == 0) {
            mag /= base;
            ++exp;
        }
        if (mag != 1) throw std::invalid_argument("certificate word entry is not a power of the base");
        cert.word.push_back({sign, exp});
    }
    return cert;
}

} // namespace zadic::nets

namespace zadic::complements {

inline void to_json(nlohmann::json& j, const FiniteSet& w) {
    j = nlohmann::json{{"elements", w.elements}};
}
inline void from_json(const nlohmann::json& j, FiniteSet& w) {
    w = FiniteSet::of(j.at("elements").get<std::vector<long long>>());
}

inline void to_json(nlohmann::json& j, const EventuallyPeriodicSet& c) {
    std::vector<long long> members;
    for (long long x = c.core_lo; x <= c.core_hi; ++x)
        if (c.core[x - c.core_lo]) members.push_back(x);
    std::vector<long long> pos, neg;
    for (long long r = 0; r < c.period; ++r) {
        if (c.pos_residues[r]) pos.push_back(r);
        if (c.neg_residues[r]) neg.push_back(r);
    }
    j = nlohmann::json{
        {"period", c.period},
        {"core", {{"lo", c.core_lo}, {"hi", c.core_hi}, {"members", members}}},
        {"pos_residues", pos},
        {"neg_residues", neg}};
}
inline void from_json(const nlohmann::json& j, EventuallyPeriodicSet& c) {
    c.period = j.at("period").get<long long>();
    const auto& core = j.at("core");
    c.core_lo = core.at("lo").get<long long>();
    c.core_hi = core.at("hi").get<long long>();
    if (c.core_lo > c.core_hi) throw std::invalid_argument("core window is empty");
    c.core.assign(c.core_hi - c.core_lo + 1, false);
    for (long long x : core.at("members").get<std::vector<long long>>()) {
        if (x < c.core_lo || x > c.core_hi)
            throw std::invalid_argument("core member outside the core window");
        c.core[x - c.core_lo] = true;
    }
    if (c.period < 1) throw std::invalid_argument("period must be >= 1");
    c.pos_residues.assign(c.period, false);
    c.neg_residues.assign(c.period, false);
    for (long long r : j.at("pos_residues").get<std::vector<long long>>())
        c.pos_residues[((r % c.period) + c.period) % c.period] = true;
    for (long long r : j.at("neg_residues").get<std::vector<long long>>())
        c.neg_residues[((r % c.period) + c.period) % c.period] = true;
    c.check();
}

inline void to_json(nlohmann::json& j, const MinimalityCertificate& m) {
    j = nlohmann::json{{"element", m.element}, {"target", m.target}};
}
inline void from_json(const nlohmann::json& j, MinimalityCertificate& m) {
    j.at("element").get_to(m.element);
    j.at("target").get_to(m.target);
}

} // namespace zadic::complements

namespace zadic::map23 {

inline nlohmann::json map_result_json(const Int& n) {
    const Int f = apply(n);
    return nlohmann::json{{"n", int_to_json(n)},
                          {"f", int_to_json(f)},
                          {"l2", gadic::length(2, n)},
                          {"l3", gadic::length(3, f)}};
}

inline void to_json(nlohmann::json& j, const DistortionWitness& w) {
    j = nlohmann::json{{"r", w.r},
                       {"m", int_to_json(w.m)},
                       {"nprime", int_to_json(w.n)},
                       {"d2", w.d2},
                       {"d3", w.d3}};
}

} // namespace zadic::map23
