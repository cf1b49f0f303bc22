#pragma once

// JSON schemas shared by the library and the CLI:
//   matrix      {"dim": n, "re": [[...]], "im": [[...]]}            row-major
//   tuple       {"word": [...], "n": n, "flavor": "parabolic"|"compact", "slots": [matrix, ...]}
//   chart point {"word": [...], "n": n, "coords": [{"re": x, "im": y}, ...]}
//   factors     {"k": matrix, "a": matrix, "n": matrix}

#include <charconv>
#include <cstddef>
#include <string>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "coords.hpp"
#include "errors.hpp"
#include "iwasawa.hpp"
#include "matrix.hpp"
#include "resolution.hpp"
#include "weyl.hpp"

namespace flagres {

using json = nlohmann::json;

/// Shortest decimal string that round-trips to the same double.
inline std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return res.ec == std::errc{} ? std::string(buf, res.ptr) : std::string("nan");
}

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline double number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    return j.get<double>();
}

inline int integer(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

inline Word word_from(const json& j) {
    const int n = integer(field(j, "n"), "n");
    const json& ls = field(j, "word");
    if (!ls.is_array()) throw ParseError("word: expected an array of integers");
    std::vector<int> letters;
    for (const auto& l : ls) letters.push_back(integer(l, "word letter"));
    try {
        return Word(n, std::move(letters));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace detail

inline void to_json(json& j, const Matrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json rr = json::array(), ii = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            rr.push_back(m(r, c).real());
            ii.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    j = json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline void from_json(const json& j, Matrix& m) {
    const int n = detail::integer(detail::field(j, "dim"), "dim");
    if (n < 1) throw ParseError("dim must be positive");
    const json& re = detail::field(j, "re");
    const json& im = detail::field(j, "im");
    const auto un = static_cast<std::size_t>(n);
    const auto rows_ok = [un](const json& a) {
        if (!a.is_array() || a.size() != un) return false;
        for (const auto& row : a)
            if (!row.is_array() || row.size() != un) return false;
        return true;
    };
    if (!rows_ok(re) || !rows_ok(im)) throw ParseError("matrix: re/im must be dim x dim arrays");
    Matrix out(un);
    for (std::size_t r = 0; r < un; ++r)
        for (std::size_t c = 0; c < un; ++c)
            out(r, c) = Complex{detail::number(re[r][c], "re entry"), detail::number(im[r][c], "im entry")};
    if (!out.is_finite()) throw ParseError("matrix: non-finite entry");
    m = std::move(out);
}

inline void to_json(json& j, const IwasawaFactors& f) { j = json{{"k", f.k}, {"a", f.a}, {"n", f.n}}; }

inline void to_json(json& j, const GroupTuple& p) {
    j = json{{"word", p.word.letters},
             {"n", p.word.n},
             {"flavor", p.flavor == Flavor::parabolic ? "parabolic" : "compact"},
             {"slots", p.slots}};
}

inline void from_json(const json& j, GroupTuple& p) {
    GroupTuple out{detail::word_from(j), {}, Flavor::parabolic};
    const json& fl = detail::field(j, "flavor");
    if (fl == "parabolic") out.flavor = Flavor::parabolic;
    else if (fl == "compact") out.flavor = Flavor::compact;
    else throw ParseError("flavor must be \"parabolic\" or \"compact\"");
    const json& slots = detail::field(j, "slots");
    if (!slots.is_array() || slots.size() != out.word.length()) throw ParseError("slots: expected one matrix per letter");
    for (const auto& s : slots) {
        Matrix m;
        from_json(s, m);
        if (m.dim() != out.word.dim()) throw ParseError("slots: matrix dimension differs from n");
        out.slots.push_back(std::move(m));
    }
    p = std::move(out);
}

inline void to_json(json& j, const ChartPoint& pt) {
    json coords = json::array();
    for (const auto& z : pt.coords) coords.push_back(json{{"re", z.real()}, {"im", z.imag()}});
    j = json{{"word", pt.word.letters}, {"n", pt.word.n}, {"coords", std::move(coords)}};
}

inline void from_json(const json& j, ChartPoint& pt) {
    ChartPoint out{detail::word_from(j), {}};
    const json& coords = detail::field(j, "coords");
    if (!coords.is_array() || coords.size() != out.word.length()) throw ParseError("coords: expected one entry per letter");
    for (const auto& c : coords)
        out.coords.emplace_back(detail::number(detail::field(c, "re"), "re"), detail::number(detail::field(c, "im"), "im"));
    pt = std::move(out);
}

/// Parses text, mapping every nlohmann error onto ParseError.
template <typename T>
T parse_json(const std::string& text) {
    try {
        return json::parse(text).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace flagres
