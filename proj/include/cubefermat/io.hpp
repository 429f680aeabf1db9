#pragma once

// JSON / CSV serialization of the public result types.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "criterion.hpp"
#include "curve.hpp"
#include "lfunction.hpp"

namespace cubefermat {

using json = nlohmann::json;

namespace detail {

inline std::int64_t to_i64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("serialization: integer exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

// [a_num, a_den, b_num, b_den]
inline json quad_elem_json(const QuadFieldElem& e) {
    return json::array({to_i64(boost::multiprecision::numerator(e.a)),
                        to_i64(boost::multiprecision::denominator(e.a)),
                        to_i64(boost::multiprecision::numerator(e.b)),
                        to_i64(boost::multiprecision::denominator(e.b))});
}

} // namespace detail

inline json to_json(const Verdict& v) {
    return json{{"d", v.d_input},
                {"d_positive_rep", v.d_positive_rep},
                {"case", to_string(v.case_used)},
                {"left", v.left},
                {"right", v.right},
                {"status", to_string(v.status)}};
}

inline json to_json(const LReport& r) {
    return json{{"d", r.d},
                {"d_reduced", r.d_reduced},
                {"conductor", r.conductor},
                {"root_number", r.root_number},
                {"value", r.value},
                {"tail_bound", r.tail_bound},
                {"terms_used", r.terms_used}};
}

inline json to_json(const BurnsideWitness& w) {
    return json{{"d", w.solution.field_d()},
                {"x", detail::quad_elem_json(w.solution.x)},
                {"y", detail::quad_elem_json(w.solution.y)},
                {"z", detail::quad_elem_json(w.solution.z)},
                {"k", json::array({detail::to_i64(boost::multiprecision::numerator(w.k)),
                                   detail::to_i64(boost::multiprecision::denominator(w.k))})}};
}

inline std::string csv_header_verdict() { return "d,case,left_count,right_count,status"; }

inline std::string to_csv(const Verdict& v) {
    return std::to_string(v.d_input) + "," + to_string(v.case_used) + "," + std::to_string(v.left) + "," +
           std::to_string(v.right) + "," + to_string(v.status);
}

// Human-readable rendering of a + b sqrt(d).
inline std::string to_string(const QuadFieldElem& e) {
    auto rat = [](const Rational& r) {
        std::string s = boost::multiprecision::numerator(r).str();
        if (boost::multiprecision::denominator(r) != 1) s += "/" + boost::multiprecision::denominator(r).str();
        return s;
    };
    if (e.b == 0) return rat(e.a);
    std::string out;
    if (e.a != 0) out = rat(e.a) + (e.b > 0 ? " + " : " - ");
    else if (e.b < 0) out = "-";
    Rational babs = e.b < 0 ? Rational(-e.b) : e.b;
    if (babs != 1) out += rat(babs) + "*";
    out += "sqrt(" + std::to_string(e.d) + ")";
    return out;
}

inline std::string to_string(const FermatSolution& s) {
    return "(" + to_string(s.x) + ", " + to_string(s.y) + ", " + to_string(s.z) + ")";
}

} // namespace cubefermat
