#include "wsets/catalog.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace wsets {

namespace {

using ordered_json = nlohmann::ordered_json;

Interval iv(Rational lo, Rational hi) {
    return {Scalar::pi_units(std::move(lo)), Scalar::pi_units(std::move(hi))};
}

ordered_json endpoint_json(const Scalar& s) {
    ordered_json j;
    j["pi"] = format_rational(s.pi_coef);
    j["eps"] = format_rational(s.eps_coef);
    return j;
}

Scalar endpoint_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("pi") || !j.contains("eps"))
        throw ParseError("endpoint must be an object with pi and eps fields");
    return Scalar(parse_rational(j.at("pi").get<std::string>()),
                  parse_rational(j.at("eps").get<std::string>()));
}

}  // namespace

IntervalSet shannon() {
    return IntervalSet::normalize({iv(-2, -1), iv(1, 2)}, EpsBinding());
}

IntervalSet journe() {
    return IntervalSet::normalize(
        {iv(Rational(-32, 7), -4), iv(-1, Rational(-4, 7)),
         iv(Rational(4, 7), 1), iv(4, Rational(32, 7))},
        EpsBinding());
}

std::vector<CatalogEntry> catalog() {
    return {
        {"shannon", shannon(), "two unit bands; dimension function constant 1"},
        {"journe", journe(), "four bands; dimension function reaches 2"},
    };
}

std::string to_json_text(const IntervalSet& s,
                         const std::optional<TruncationHeader>& header) {
    ordered_json doc;
    doc["version"] = 1;
    doc["eps_ratio"] = format_rational(s.binding().ratio);
    if (header) {
        doc["n"] = header->n;
        doc["depth"] = header->depth;
        doc["excess"] = endpoint_json(header->excess);
    }
    doc["intervals"] = ordered_json::array();
    for (const Interval& it : s.intervals()) {
        ordered_json j;
        j["lo"] = endpoint_json(it.lo);
        j["hi"] = endpoint_json(it.hi);
        doc["intervals"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

Document from_json_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("version"))
        throw ParseError("document must be an object with a version field");
    if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != 1)
        throw VersionError("unsupported document version");
    if (!doc.contains("intervals") || !doc.at("intervals").is_array())
        throw ParseError("document must carry an intervals array");

    std::vector<Interval> raw;
    bool uses_eps = false;
    for (const ordered_json& j : doc.at("intervals")) {
        if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
            throw ParseError("interval must carry lo and hi endpoints");
        Interval it{endpoint_from_json(j.at("lo")), endpoint_from_json(j.at("hi"))};
        uses_eps = uses_eps || it.lo.eps_coef != 0 || it.hi.eps_coef != 0;
        raw.push_back(std::move(it));
    }

    EpsBinding bind;
    if (doc.contains("eps_ratio")) {
        bind = EpsBinding(parse_rational(doc.at("eps_ratio").get<std::string>()));
    } else if (uses_eps) {
        throw ParseError("intervals use eps terms but eps_ratio is missing");
    }

    Document out;
    out.set = IntervalSet::normalize(raw, bind);
    bool listed_canonically = raw.size() == out.set.size();
    for (size_t i = 0; listed_canonically && i < raw.size(); ++i)
        listed_canonically = raw[i] == out.set.intervals()[i];
    out.non_canonical = !listed_canonically;

    if (doc.contains("n") || doc.contains("depth") || doc.contains("excess")) {
        if (!doc.contains("n") || !doc.contains("depth") || !doc.contains("excess"))
            throw ParseError("truncation header needs n, depth and excess together");
        TruncationHeader h;
        h.n = doc.at("n").get<int>();
        h.depth = doc.at("depth").get<int>();
        h.excess = endpoint_from_json(doc.at("excess"));
        out.truncation = h;
    }
    return out;
}

void save(const IntervalSet& s, const std::string& path,
          const std::optional<TruncationHeader>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json_text(s, header);
}

Document load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_json_text(text);
}

}  // namespace wsets
