#include "serialize.hpp"

#include <json.hpp>

#include "stats.hpp"

namespace simcore {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json partition_json_value(const Partition& p) {
    return ordered_json(p.parts());
}

ordered_json window_json_value(const AffineWindow& w) { return ordered_json(w.w); }

bool maj_a_defined(i64 a, i64 b) { return b == a + 1; }
bool maj_c_defined(const Partition& p, i64 a, i64 b) {
    return b == a + 1 && a % 2 == 0 && is_self_conjugate(p);
}

ordered_json stats_record(const Partition& p, i64 a, i64 b) {
    ordered_json rec;
    rec["partition"] = partition_json_value(p);
    rec["ell"] = p.length();
    rec["sl"] = skew_length(p, a, b);
    rec["sl_prime"] = co_skew_length(p, a, b);
    if (maj_a_defined(a, b)) rec["maj_a"] = maj_A(p, a);
    if (maj_c_defined(p, a, b)) rec["maj_c"] = maj_C(p, a / 2);
    return rec;
}

}  // namespace

std::string partition_to_json(const Partition& p) { return partition_json_value(p).dump(); }

std::vector<i64> parse_int_list(const std::string& comma_list) {
    std::vector<i64> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("empty entry in integer list");
        std::size_t pos = 0;
        i64 v = std::stoll(cur, &pos);
        if (pos != cur.size()) throw std::invalid_argument("malformed integer: " + cur);
        out.push_back(v);
        cur.clear();
    };
    for (char c : comma_list) {
        if (c == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
    }
    if (!cur.empty()) flush();
    else if (!out.empty()) throw std::invalid_argument("trailing comma in integer list");
    return out;
}

Partition partition_from_csv(const std::string& comma_list) {
    std::vector<i64> parts = parse_int_list(comma_list);
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            "partition must be a comma-separated weakly decreasing list of positive integers");
    }
}

std::string partition_to_csv_field(const Partition& p) {
    std::string inner;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) inner += ",";
        inner += std::to_string(p.parts()[i]);
    }
    if (inner.empty()) return "";
    return "\"" + inner + "\"";  // parts are comma-separated, so always quoted
}

std::string stats_record_json(const Partition& p, i64 a, i64 b) {
    return stats_record(p, a, b).dump();
}

std::string family_listing(const CoreFamily& f, bool with_stats, const std::string& format) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        enumerate_cores(f, [&](const Partition& p) {
            arr.push_back(with_stats ? stats_record(p, f.a, f.b) : partition_json_value(p));
        });
        return arr.dump();
    }
    if (format != "csv") throw std::invalid_argument("format must be json or csv");
    std::string out = "partition,size,length,sl,sl_prime,maj_a,maj_c\r\n";
    enumerate_cores(f, [&](const Partition& p) {
        out += partition_to_csv_field(p);
        out += "," + std::to_string(p.size());
        out += "," + std::to_string(p.length());
        out += "," + std::to_string(skew_length(p, f.a, f.b));
        out += "," + std::to_string(co_skew_length(p, f.a, f.b));
        out += ",";
        if (maj_a_defined(f.a, f.b)) out += std::to_string(maj_A(p, f.a));
        out += ",";
        if (maj_c_defined(p, f.a, f.b)) out += std::to_string(maj_C(p, f.a / 2));
        out += "\r\n";
    });
    return out;
}

std::string poly_to_json(const IntPoly& p) { return ordered_json(p.coeffs()).dump(); }

std::string poly2_to_json(const IntPoly2& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, coeff] : p.terms())
        arr.push_back(ordered_json::array({key.first, key.second, coeff}));
    return arr.dump();
}

namespace {

ordered_json alcove_record(const AffineWindow& w, const ShiConfig& cfg) {
    DominantAlcove alc = DominantAlcove::from_window(w, cfg);
    ordered_json rec;
    rec["window"] = window_json_value(w);
    ordered_json coords = ordered_json::array();
    for (const PositiveRoot& r : positive_roots(cfg))
        coords.push_back(ordered_json::array({r.str(), shi_coordinate(alc, r, cfg)}));
    rec["coords"] = coords;
    rec["minimal"] = is_m_minimal(alc, cfg);
    rec["bounded"] = is_m_bounded(alc, cfg);
    rec["core"] = partition_json_value(alcove_core(alc, cfg));
    return rec;
}

}  // namespace

std::string alcove_record_json(const AffineWindow& w, const ShiConfig& cfg) {
    return alcove_record(w, cfg).dump();
}

std::string alcove_listing(const ShiConfig& cfg, const std::string& which,
                           const std::string& format) {
    std::vector<AlcoveRecord> recs;
    if (which == "minimal") {
        recs = enumerate_dominant(cfg, AlcoveSelection::Minimal);
    } else if (which == "bounded") {
        recs = enumerate_dominant(cfg, AlcoveSelection::Bounded);
    } else {
        throw std::invalid_argument("selection must be minimal or bounded");
    }
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : recs) arr.push_back(alcove_record(r.window, cfg));
        return arr.dump();
    }
    if (format != "text") throw std::invalid_argument("format must be json or text");
    std::string out;
    for (const auto& r : recs) {
        std::string win;
        for (std::size_t i = 0; i < r.window.w.size(); ++i) {
            if (i) win += ",";
            win += std::to_string(r.window.w[i]);
        }
        out += "[" + win + "]  core=" + partition_to_json(r.core) + "\n";
    }
    return out;
}

std::string shi_coords_json(const AffineWindow& w, const ShiConfig& cfg) {
    DominantAlcove alc = DominantAlcove::from_window(w, cfg);
    ordered_json rec;
    rec["window"] = window_json_value(w);
    ordered_json coords = ordered_json::array();
    for (const PositiveRoot& r : positive_roots(cfg))
        coords.push_back(ordered_json::array({r.str(), shi_coordinate(alc, r, cfg)}));
    rec["coords"] = coords;
    ordered_json desc = ordered_json::array();
    for (int i : right_descents(w, cfg)) desc.push_back("s" + std::to_string(i));
    rec["descents"] = desc;
    return rec.dump();
}

std::string reports_to_json(const std::vector<Report>& reports) {
    ordered_json arr = ordered_json::array();
    for (const Report& r : reports) {
        ordered_json rec;
        rec["claim"] = r.claim;
        rec["params"] = ordered_json::parse(r.params);
        rec["status"] = r.status;
        if (r.witness) rec["witness"] = ordered_json::parse(*r.witness);
        rec["elapsed_ms"] = r.elapsed_ms;
        arr.push_back(rec);
    }
    return arr.dump(2);
}

}  // namespace simcore
